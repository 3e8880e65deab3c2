"""Minimal-vanishing certification.

Two independent routes decide whether a vanishing sorou is minimal:

* the subsidiary criterion: decompose at the top prime and check that
  (i) the smallest part has nonzero value, (ii) no part contains a vanishing
  proper nonempty subsorou, and (iii) the parts share no common proper
  subsorou value.  Subsorou values are compared as exact residues at a common
  modulus, so condition (iii) is a hash-set intersection of integer vectors.
* a definition-level brute force over all proper nonempty sub-multisets,
  kept deliberately naive as the oracle for the criterion path.

A vanishing sorou whose relative order is not squarefree cannot be minimal
(Mann), so it is refused without decomposing.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import reduce

from minvan.arith import is_squarefree, prime_factors
from minvan.cyclotomic import is_vanishing, numeric_value, residue
from minvan.sorou import (
    SUBSET_GUARD_WEIGHT,
    Sorou,
    proper_nonempty_subsorous,
    relative_order,
    render_sorou,
    sub_multisets_of_size,
    subtract,
    to_subsidiary,
    weight,
)

FAIL_NOT_VANISHING = "not-vanishing"
FAIL_VALUE_ZERO_F0 = "value-zero-f0"
FAIL_INNER_VANISHING = "inner-vanishing-subsorou"
FAIL_COMMON_SUBVALUE = "common-subvalue"


@dataclass(frozen=True)
class MinimalityVerdict:
    vanishing: bool
    minimal: bool
    failing_condition: str | None = None


def top_prime(s: Sorou) -> int:
    r = relative_order(s)
    if not is_squarefree(r):
        raise ValueError("top prime undefined: relative order not squarefree")
    if r == 1:
        raise ValueError("no top prime: relative order 1")
    return prime_factors(r)[-1]


def _proper_subsorou_residues(part: Sorou, modulus: int) -> tuple[bool, frozenset]:
    """(some proper nonempty subsorou vanishes, set of their residue vectors)."""
    zero = False
    values = set()
    for sub in proper_nonempty_subsorous(part):
        coeffs = residue(sub, modulus).coefficients
        if not any(coeffs):
            zero = True
        values.add(coeffs)
    return zero, frozenset(values)


def is_minimal_vanishing(s: Sorou) -> MinimalityVerdict:
    """Certify s by the subsidiary criterion."""
    if not s:
        raise ValueError("empty sorou")
    r = relative_order(s)
    if r == 1 or not is_squarefree(r):
        if is_vanishing(s):
            return MinimalityVerdict(True, False, FAIL_INNER_VANISHING)
        return MinimalityVerdict(False, False, FAIL_NOT_VANISHING)

    dec = to_subsidiary(s)
    modulus = math.lcm(*(o for part in dec.parts for o, _ in part), 1)
    part_residues = [residue(part, modulus) for part in dec.parts]
    if any(res != part_residues[0] for res in part_residues[1:]):
        return MinimalityVerdict(False, False, FAIL_NOT_VANISHING)
    if part_residues[0].is_zero():
        return MinimalityVerdict(True, False, FAIL_VALUE_ZERO_F0)

    subsets = {part: _proper_subsorou_residues(part, modulus) for part in set(dec.parts)}
    if any(subsets[part][0] for part in dec.parts):
        return MinimalityVerdict(True, False, FAIL_INNER_VANISHING)
    value_sets = [subsets[part][1] for part in dec.parts]
    if all(value_sets) and reduce(frozenset.intersection, value_sets):
        return MinimalityVerdict(True, False, FAIL_COMMON_SUBVALUE)
    return MinimalityVerdict(True, True, None)


def is_minimal_vanishing_bruteforce(s: Sorou) -> bool:
    """Definition-level oracle: vanishing with no vanishing proper subsorou.

    Visits every proper nonempty sub-multiset, tracking the running complex
    value; only near-zero candidates pay for the exact vanishing test.
    """
    if weight(s) > SUBSET_GUARD_WEIGHT:
        raise ValueError(f"subset explosion: weight {weight(s)} exceeds guard")
    if not is_vanishing(s):
        return False
    groups = sorted(Counter(s).items())
    unit_values = [numeric_value((root,)) for root, _ in groups]
    total = weight(s)
    takes = [0] * len(groups)

    def has_vanishing_proper(idx: int, count: int, value: complex) -> bool:
        if idx == len(groups):
            if 0 < count < total and abs(value) < 1e-6:
                sub = tuple(
                    sorted(r for (r, _), c in zip(groups, takes) for _ in range(c))
                )
                return is_vanishing(sub)
            return False
        root, mult = groups[idx]
        for take in range(mult + 1):
            takes[idx] = take
            if has_vanishing_proper(idx + 1, count + take, value + take * unit_values[idx]):
                return True
        takes[idx] = 0
        return False

    return not has_vanishing_proper(0, 0, 0j)


def decompose_into_minimal(s: Sorou) -> list[Sorou]:
    """Split a vanishing sorou into minimal vanishing parts.

    Deterministic rule: repeatedly extract the vanishing sub-multiset of
    smallest weight (tied by rendered text), which is minimal by construction.
    """
    if not is_vanishing(s):
        raise ValueError("cannot decompose a non-vanishing sorou")
    if weight(s) > SUBSET_GUARD_WEIGHT:
        raise ValueError(f"subset explosion: weight {weight(s)} exceeds guard")
    parts = []
    rest = s
    while rest:
        for k in range(2, weight(rest) + 1):
            found = [sub for sub in sub_multisets_of_size(rest, k) if is_vanishing(sub)]
            if found:
                part = min(found, key=render_sorou)
                parts.append(part)
                rest = subtract(rest, part)
                break
        else:
            raise AssertionError("vanishing remainder without vanishing subsorou")
    return parts
