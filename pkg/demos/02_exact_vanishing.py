"""Deciding vanishing exactly.

A sorou of order N vanishes iff its lifted polynomial is divisible by the
N-th cyclotomic polynomial.  The residue modulo Phi_N is an integer vector,
so the test has no tolerance in it; floating point only serves as a fast
prefilter for values that are provably far from zero.
"""

from minvan import (
    cyclotomic_poly,
    is_vanishing,
    numeric_value,
    parse_sorou,
    residue,
    values_equal,
)

# Phi_12 = x^4 - x^2 + 1; the engine computes every Phi_n by exact division
print("Phi_12 coefficients (lowest degree first):", cyclotomic_poly(12).coefficients)

r5 = parse_sorou("1:0+5:1+5:2+5:3+5:4")
print("\nresidue(R_5) =", residue(r5).coefficients, "-> vanishes:", is_vanishing(r5))

near = parse_sorou("1:0+5:1+5:2+5:3")  # drop one term: numerically small, not zero
print("numeric |1+nu_5+nu_5^2+nu_5^3| =", abs(numeric_value(near)))
print("vanishes:", is_vanishing(near))

# the paper's first worked example: subtracting two valuation-(-1) sorou
h1 = parse_sorou("5:1+5:2+5:3+5:4")
h2 = parse_sorou("3:1+3:2")
print("\nval(h1) = val(h2):", values_equal(h1, h2))
h = parse_sorou("5:1+5:2+5:3+5:4+6:1+6:5")  # h1 - h2 written with 6th roots
print("h = h1 - h2 vanishes:", is_vanishing(h))
