"""The recursive type algebra for minimal vanishing sorou.

A minimal type ``(R_p : f0 : T_1, ..., T_n)`` records the top prime, the
smallest subsidiary sorou (canonicalized under term-anchored rotation, always
containing 1), and the types of the differences f0 - f_j for the slots that
differ from f0.  Sums ``T_1 (+) ... (+) T_k`` describe non-minimal vanishing
sorou.  Values are frozen; every constructor normalizes, so structural
equality is canonical equality.

A strict total order on types drives deterministic storage: weight first,
then component count, then componentwise (p, w(f0), exact term phases as
rationals, subtype count, subtypes recursively).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import chain

from minvan.arith import is_prime, primes_below, units
from minvan.cyclotomic import is_vanishing
from minvan.minimality import decompose_into_minimal, is_minimal_vanishing
from minvan.sorou import (
    ONE,
    Root,
    Sorou,
    SubsidiaryDecomposition,
    canonicalize,
    from_subsidiary,
    is_subsorou,
    labeled_partitions,
    make_root,
    parse_sorou,
    relative_order,
    render_sorou,
    root_inv,
    root_mul,
    rotate,
    sorou,
    sub_multisets_of_size,
    subtract,
    to_subsidiary,
    weight,
)


@dataclass(frozen=True)
class MinVanType:
    p: int
    f0: Sorou
    subtypes: tuple["TypeSum", ...] = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"type head must be prime, got {self.p}")
        f0 = canonicalize(sorou(self.f0))
        object.__setattr__(self, "f0", f0)
        q = math.prod(primes_below(self.p))
        if q % relative_order(f0):
            raise ValueError("f0 relative order must divide the product of primes below p")
        if _has_vanishing_nonempty_subsorou(f0):
            raise ValueError("f0 must have no vanishing nonempty subsorou")
        if len(self.subtypes) > self.p - 1:
            raise ValueError("more subtypes than available slots")
        w0 = weight(f0)
        for t in self.subtypes:
            if type_weight(t) < 2 * w0:
                raise ValueError("subtype weight below twice the f0 weight")
            if len(t.components) > w0:
                raise ValueError("subtype with more minimal components than w(f0)")
        object.__setattr__(
            self, "subtypes", tuple(sorted(self.subtypes, key=sum_key, reverse=True))
        )


@dataclass(frozen=True)
class TypeSum:
    components: tuple[MinVanType, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("empty type sum")
        object.__setattr__(
            self, "components", tuple(sorted(self.components, key=minvan_key, reverse=True))
        )

    @property
    def is_minimal_claim(self) -> bool:
        return len(self.components) == 1


@dataclass(frozen=True)
class TypeRecord:
    """A classified minimal type together with its enumeration statistics."""

    type: TypeSum
    weight: int
    top_prime: int
    partition: tuple[int, ...]
    relative_orders: frozenset[int]
    parities: frozenset[tuple[int, int]]
    heights: frozenset[int]
    equisigned: bool


def _has_vanishing_nonempty_subsorou(s: Sorou) -> bool:
    for k in range(2, weight(s) + 1):
        if any(is_vanishing(sub) for sub in sub_multisets_of_size(s, k)):
            return True
    return False


def R(p: int) -> MinVanType:
    return MinVanType(p, (ONE,))


@cache
def minvan_weight(m: MinVanType) -> int:
    w0 = weight(m.f0)
    return sum(type_weight(t) - w0 for t in m.subtypes) + (m.p - len(m.subtypes)) * w0


@cache
def type_weight(t: TypeSum) -> int:
    return sum(minvan_weight(m) for m in t.components)


def weight_partition(m: MinVanType) -> tuple[int, ...]:
    w0 = weight(m.f0)
    parts = [type_weight(t) - w0 for t in m.subtypes]
    parts += [w0] * (m.p - len(m.subtypes))
    return tuple(sorted(parts))


@cache
def minvan_key(m: MinVanType):
    return (
        minvan_weight(m),
        m.p,
        weight(m.f0),
        tuple(Fraction(p, o) for o, p in m.f0),
        len(m.subtypes),
        tuple(sum_key(t) for t in m.subtypes),
    )


@cache
def sum_key(t: TypeSum):
    return (
        type_weight(t),
        len(t.components),
        tuple(minvan_key(m) for m in t.components),
    )


def compare_types(a: TypeSum, b: TypeSum) -> int:
    """Strict total order; negative when a precedes b, 0 only on equality."""
    ka, kb = sum_key(a), sum_key(b)
    return -1 if ka < kb else (0 if ka == kb else 1)


# ---------------------------------------------------------------------------
# serialization


def render_minvan(m: MinVanType) -> str:
    inner = "".join(";" + render_type(t) for t in m.subtypes)
    return f"(R{m.p};{render_sorou(m.f0)}{inner})"


def render_type(t: TypeSum) -> str:
    return "&".join(render_minvan(m) for m in t.components)


def parse_type(text: str) -> TypeSum:
    t, pos = _parse_typesum(text, 0)
    if pos != len(text):
        raise ValueError(f"type parse error at position {pos}: trailing text")
    return t


def _parse_typesum(text: str, pos: int) -> tuple[TypeSum, int]:
    comps = []
    m, pos = _parse_minvan(text, pos)
    comps.append(m)
    while pos < len(text) and text[pos] == "&":
        m, pos = _parse_minvan(text, pos + 1)
        comps.append(m)
    return TypeSum(tuple(comps)), pos


def _parse_minvan(text: str, pos: int) -> tuple[MinVanType, int]:
    if not text.startswith("(R", pos):
        raise ValueError(f"type parse error at position {pos}: expected '(R'")
    pos += 2
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if start == pos:
        raise ValueError(f"type parse error at position {pos}: expected prime")
    p = int(text[start:pos])
    if pos >= len(text) or text[pos] != ";":
        raise ValueError(f"type parse error at position {pos}: expected ';'")
    pos += 1
    start = pos
    while pos < len(text) and (text[pos].isdigit() or text[pos] in ":+"):
        pos += 1
    f0 = parse_sorou(text[start:pos])
    subtypes = []
    while pos < len(text) and text[pos] == ";":
        t, pos = _parse_typesum(text, pos + 1)
        subtypes.append(t)
    if pos >= len(text) or text[pos] != ")":
        raise ValueError(f"type parse error at position {pos}: expected ')'")
    return MinVanType(p, f0, tuple(subtypes)), pos + 1


def _latex_int(n: int) -> str:
    return str(n) if n < 10 else "{%d}" % n


def _latex_root(r: Root) -> str:
    o, p = r
    if o == 1:
        return "1"
    if o == 2:
        return "-1"
    if o % 2 == 0 and (o // 2) % 2 == 1:
        return "-" + _latex_root(root_mul(r, (2, 1)))
    out = f"\\nu_{_latex_int(o)}"
    if p != 1:
        out += f"^{_latex_int(p)}"
    return out


def _latex_sorou(s: Sorou) -> str:
    out = ""
    for t in s:
        part = _latex_root(t)
        if out:
            out += part if part.startswith("-") else "+" + part
        else:
            out = part
    return out


def render_minvan_latex(m: MinVanType) -> str:
    head = f"R_{_latex_int(m.p)}"
    if not m.subtypes and m.f0 == (ONE,):
        return head
    body = head
    if m.f0 != (ONE,):
        body += ":" + _latex_sorou(m.f0)
    if m.subtypes:
        groups = []
        for t in reversed(m.subtypes):
            text = render_type_latex(t, nested=True)
            if groups and groups[-1][0] == text:
                groups[-1][1] += 1
            else:
                groups.append([text, 1])
        body += ":" + ",".join(t if c == 1 else f"{c}{t}" for t, c in groups)
    return f"({body})"


def render_type_latex(t: TypeSum, nested: bool = False) -> str:
    parts = [render_minvan_latex(m) for m in reversed(t.components)]
    out = "\\oplus ".join(parts)
    if nested and len(parts) > 1:
        out = f"({out})"
    return out


# ---------------------------------------------------------------------------
# representatives


def _embedding_rotations(v: Sorou, target: Sorou):
    """Rotations z with target a subsorou of z*v; candidates are exactly the
    quotients of target's first term by the terms of v."""
    tau = target[0]
    seen = set()
    for w in dict.fromkeys(v):
        z = root_mul(tau, root_inv(w))
        if z not in seen:
            seen.add(z)
            if is_subsorou(target, rotate(v, z)):
                yield z


def _anchored_subtype_sorou(t: TypeSum, f0: Sorou) -> Sorou:
    """One sorou of type t containing f0 as a subsorou."""
    if t.is_minimal_claim:
        v = representative_sorou(t)
        for z in _embedding_rotations(v, f0):
            return rotate(v, z)
        raise ValueError(f"unrealizable assembly: {render_type(t)} cannot contain {render_sorou(f0)}")
    m = len(t.components)
    if m > weight(f0):
        raise ValueError("unrealizable assembly: more minimal parts than f0 terms")
    for parts in labeled_partitions(f0, m):
        pieces = []
        for part, comp in zip(parts, t.components):
            v = _minvan_representative(comp)
            z = next(_embedding_rotations(v, part), None)
            if z is None:
                break
            pieces.append(rotate(v, z))
        else:
            return tuple(sorted(chain.from_iterable(pieces)))
    raise ValueError(f"unrealizable assembly: {render_type(t)} cannot contain {render_sorou(f0)}")


@cache
def _minvan_representative(m: MinVanType) -> Sorou:
    slots = [m.f0] * m.p
    for i, t in enumerate(m.subtypes, start=1):
        slots[i] = subtract(m.f0, _anchored_subtype_sorou(t, m.f0))
    return from_subsidiary(SubsidiaryDecomposition(m.p, tuple(slots)))


def representative_sorou(t: TypeSum) -> Sorou:
    """One sorou of type t, of the correct weight; minimality is the
    caller's check."""
    return tuple(sorted(chain.from_iterable(_minvan_representative(m) for m in t.components)))


def _formal_difference(a: Sorou, b: Sorou) -> Sorou:
    """a + (-1)b as a plain concatenation, without term cancellation.

    The subsidiary type of a slot is the type of this formal sorou: its
    weight must be w(a) + w(b) even when b shares terms with a, or the
    weight partition would not add up."""
    return tuple(sorted(a + tuple(root_mul(t, (2, 1)) for t in b)))


def infer_type(s: Sorou) -> TypeSum:
    """One valid type of a minimal vanishing sorou (types are not unique;
    determinism comes from the extraction rule in decompose_into_minimal)."""
    if not is_minimal_vanishing(s).minimal:
        raise ValueError("type inference requires a minimal vanishing sorou")
    dec = to_subsidiary(s)
    f0 = dec.parts[0]
    subtypes = []
    for part in dec.parts[1:]:
        if part == f0:
            continue
        pieces = decompose_into_minimal(_formal_difference(f0, part))
        comps = tuple(chain.from_iterable(infer_type(piece).components for piece in pieces))
        subtypes.append(TypeSum(comps))
    return TypeSum((MinVanType(dec.top_prime, f0, tuple(subtypes)),))


# ---------------------------------------------------------------------------
# conjugation and family collapse


def _map_type_roots(t: TypeSum, f) -> TypeSum:
    return TypeSum(
        tuple(
            MinVanType(
                m.p,
                tuple(f(r) for r in m.f0),
                tuple(_map_type_roots(x, f) for x in m.subtypes),
            )
            for m in t.components
        )
    )


def conjugate_type(t: TypeSum) -> TypeSum:
    """Complex-conjugate type: negate every f0 power, re-canonicalize."""
    return _map_type_roots(t, root_inv)


def _type_order_lcm(t: TypeSum) -> int:
    return math.lcm(
        *(o for m in t.components for o, _ in m.f0),
        *(_type_order_lcm(x) for m in t.components for x in m.subtypes),
        1,
    )


def family_representative(t: TypeSum) -> TypeSum:
    """Least member of the Galois orbit of t (the y-parameter family
    collapse used by the classification table)."""
    l = _type_order_lcm(t)
    images = (
        _map_type_roots(t, lambda r: make_root(r[0], r[1] * k)) for k in units(l)
    )
    return min(images, key=sum_key)
