"""Weight-by-weight generation of all minimal vanishing types.

For the next weight W, every prime p <= W and every partition of W into p
positive parts is considered.  The smallest part is the weight of f0; each
other part x needs a subsidiary type of weight x + w(f0) drawn from sums of
already-classified minimal types with top prime below p (or, when x = w(f0),
the slot may simply repeat f0).  One representative sorou is assembled per
candidate type and certified with the subsidiary criterion; survivors form
the complete list for weight W.

Two pruning rules from the derivation are exposed as flags: a candidate must
contain at least one minimal subsidiary type, and types are collapsed to one
representative per Galois family (the classification table's y-parameter
grouping).  A closed-form generator for relative orders dividing 2pq serves
as an independent oracle.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product

from minvan.arith import primes_below, primes_upto, units
from minvan.enumeration import SorouCache, has_minimal_realization
from minvan.minimality import is_minimal_vanishing
from minvan.sorou import (
    ONE,
    Sorou,
    canonicalize,
    sorou,
    weight,
)
from minvan.types import (
    MinVanType,
    TypeSum,
    _has_vanishing_nonempty_subsorou,
    family_representative,
    minvan_key,
    minvan_weight,
    representative_sorou,
    sum_key,
)


@dataclass(frozen=True)
class GenerationConfig:
    target_weight: int
    threads: int = 1
    enable_minvan_subtype_filter: bool = True
    enable_conjugate_collapse: bool = True
    allow_repeated_f0_terms: bool = False

    def __post_init__(self):
        if self.target_weight < 2:
            raise ValueError("target weight must be at least 2")


def partitions_into_parts(n: int, k: int) -> list[tuple[int, ...]]:
    """Nonincreasing k-tuples of positive integers summing to n."""
    if k < 1:
        raise ValueError("need at least one part")

    def rec(n: int, k: int, cap: int):
        if k == 0:
            if n == 0:
                yield ()
            return
        for first in range(min(n - k + 1, cap), 0, -1):
            for rest in rec(n - first, k - 1, first):
                yield (first,) + rest

    return list(rec(n, k, n))


def _f0_family_representative(f0: Sorou) -> Sorou:
    l = math.lcm(*(o for o, _ in f0))
    return min(
        canonicalize(sorou((o, p * k) for o, p in f0)) for k in units(l)
    )


def candidate_f0s(w: int, p: int, cfg: GenerationConfig) -> list[Sorou]:
    """Weight-w candidates for the smallest subsidiary sorou at top prime p:
    1 + nu_Q^{e_1} + ... over the full exponent range, Q the product of
    primes below p, excluding any f0 with a vanishing nonempty subsorou."""
    if w == 1:
        return [(ONE,)]
    q = math.prod(primes_below(p))
    if q == 1:
        return []
    chooser = combinations_with_replacement if cfg.allow_repeated_f0_terms else combinations
    out = set()
    for exps in chooser(range(1, q), w - 1):
        f0 = sorou([(1, 0)] + [(q, e) for e in exps])
        if weight(f0) != w or _has_vanishing_nonempty_subsorou(f0):
            continue
        out.add(canonicalize(f0))
    if cfg.enable_conjugate_collapse:
        out = {_f0_family_representative(f0) for f0 in out}
    return sorted(out)


def typesum_pool(
    total_weight: int, p: int, max_components: int, db
) -> list[TypeSum]:
    """All type sums of exactly total_weight built from classified minimal
    types with top prime below p, at most max_components components."""
    by_weight = db.minimal_types_by_weight()
    cands = sorted(
        (m for ms in by_weight.values() for m in ms if m.p < p and minvan_weight(m) <= total_weight),
        key=minvan_key,
        reverse=True,
    )
    out: list[TypeSum] = []

    def rec(start: int, remaining: int, acc: list[MinVanType]):
        if remaining == 0:
            if acc:
                out.append(TypeSum(tuple(acc)))
            return
        if len(acc) == max_components or remaining < 2:
            return
        for i in range(start, len(cands)):
            w = minvan_weight(cands[i])
            if w <= remaining and (remaining == w or remaining - w >= 2):
                acc.append(cands[i])
                rec(i, remaining - w, acc)
                acc.pop()

    rec(0, total_weight, [])
    return sorted(out, key=sum_key)


def _is_pure_r2_sum(t: TypeSum) -> bool:
    return all(m.p == 2 and not m.subtypes for m in t.components)


def _subtype_combos(parts: tuple[int, ...], p: int, f0: Sorou, db, cfg: GenerationConfig):
    """Candidate subtype multisets for the slot weights beyond slot 0."""
    w0 = parts[0]
    value_counts: dict[int, int] = {}
    for x in parts[1:]:
        value_counts[x] = value_counts.get(x, 0) + 1
    per_value = []
    for x in sorted(value_counts):
        pool = [t for t in typesum_pool(x + w0, p, w0, db) if not _is_pure_r2_sum(t)]
        options: list[TypeSum | None] = list(pool)
        if x == w0:
            options.append(None)  # slot repeats f0
        if not options:
            return
        per_value.append(list(combinations_with_replacement(options, value_counts[x])))
    for chosen in product(*per_value):
        subtypes = tuple(t for group in chosen for t in group if t is not None)
        if cfg.enable_minvan_subtype_filter and subtypes:
            if not any(t.is_minimal_claim for t in subtypes):
                continue
        yield subtypes


_certify_cache = None


def _certify(candidate: MinVanType, target_weight: int) -> bool:
    """A candidate type survives iff some sorou of that type is minimal
    vanishing of the right weight.  The deterministic representative is the
    fast path; if its particular assembly fails (or cannot be anchored at
    all) the full assembly space decides."""
    if minvan_weight(candidate) != target_weight:
        return False
    try:
        rep = representative_sorou(TypeSum((candidate,)))
    except ValueError:
        rep = None
    if rep is not None and weight(rep) == target_weight and is_minimal_vanishing(rep).minimal:
        return True
    global _certify_cache
    if _certify_cache is None:
        _certify_cache = SorouCache()
    return has_minimal_realization(candidate, _certify_cache)


def generate_next_weight(db, cfg: GenerationConfig) -> list[MinVanType]:
    """All minimal vanishing types of cfg.target_weight, given a database
    complete through target_weight - 1."""
    w1 = cfg.target_weight
    if db.max_complete_weight != w1 - 1:
        raise ValueError(
            f"database complete through {db.max_complete_weight}, cannot generate weight {w1}"
        )
    candidates: list[MinVanType] = []
    for p in primes_upto(w1):
        for partition in partitions_into_parts(w1, p):
            parts = tuple(sorted(partition))
            if all(x == 1 for x in parts):
                candidates.append(MinVanType(p, (ONE,)))
                continue
            for f0 in candidate_f0s(parts[0], p, cfg):
                for subtypes in _subtype_combos(parts, p, f0, db, cfg):
                    try:
                        candidates.append(MinVanType(p, f0, subtypes))
                    except ValueError:
                        continue

    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            flags = list(pool.map(_certify, candidates, [w1] * len(candidates), chunksize=8))
    else:
        flags = [_certify(c, w1) for c in candidates]
    kept = [c for c, ok in zip(candidates, flags) if ok]

    out: dict = {}
    for m in kept:
        t = TypeSum((m,))
        if cfg.enable_conjugate_collapse:
            t = family_representative(t)
        out[sum_key(t)] = t.components[0]
    return [out[k] for k in sorted(out)]


def types_2pq_oracle(
    p: int, q: int, weight_cap: int, collapse: bool = True
) -> list[MinVanType]:
    """Closed-form list of minimal types with relative order dividing 2pq:
    R_2, R_p, R_q and (R_q : sum_{i in I} nu_p^i : |J| R_p) over proper
    nonempty I containing 0 with |I| <= (p-1)/2 and 1 <= |J| <= q-1."""
    if not (2 < p < q):
        raise ValueError("need odd primes p < q")
    found = []
    for head in (2, p, q):
        if head <= weight_cap:
            found.append(MinVanType(head, (ONE,)))
    rp = TypeSum((MinVanType(p, (ONE,)),))
    for size in range(1, (p - 1) // 2 + 1):
        for rest in combinations(range(1, p), size - 1):
            f0 = sorou([(1, 0)] + [(p, e) for e in rest])
            for nj in range(1, q):
                if nj * (p - size) + (q - nj) * size > weight_cap:
                    continue
                try:
                    cand = MinVanType(q, f0, (rp,) * nj)
                except ValueError:
                    continue
                if _certify(cand, minvan_weight(cand)):
                    found.append(cand)
    out: dict = {}
    for m in found:
        t = TypeSum((m,))
        if collapse:
            t = family_representative(t)
        out[sum_key(t)] = t.components[0]
    return [out[k] for k in sorted(out)]
