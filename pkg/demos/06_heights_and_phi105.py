"""Heights, equisigned sorou, and the first non-unit cyclotomic coefficient.

Minimal vanishing sorou of weight below 21 all have height 1; at weight 21
height 2 appears.  Unbounded heights exist in general, which is reflected in
cyclotomic coefficients: Phi_105 is the first with a coefficient outside
{-1, 0, 1}, and it corresponds to a height-2 relation of weight 35.
"""

from minvan import SorouCache, cyclotomic_poly, parse_type, type_statistics

for n in (15, 21, 33, 35, 104):
    coeffs = cyclotomic_poly(n).coefficients
    flat = all(c in (-1, 0, 1) for c in coeffs)
    print(f"Phi_{n:3d}: degree {len(coeffs) - 1:3d}, coefficients in {{-1,0,1}}: {flat}")

coeffs = cyclotomic_poly(105).coefficients
print("\nPhi_105 coefficients:", coeffs)
for degree, c in enumerate(coeffs):
    if c not in (-1, 0, 1):
        print(f"  coefficient {c} at x^{degree}")

# one of the five weight-21 types with a height-2 realization
t = parse_type("(R7;1:0+15:2;(R5;1:0)&(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0)))")
record = type_statistics(t.components[0], SorouCache())
print("\nweight-21 type statistics:")
print("  weight:", record.weight)
print("  heights over all realizations:", sorted(record.heights))
print("  parities:", sorted(record.parities))
