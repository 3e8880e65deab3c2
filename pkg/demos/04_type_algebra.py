"""The recursive type algebra.

A minimal type (R_p : f0 : T_1, ..., T_n) names the top prime, the smallest
subsidiary sorou, and the types of the slot differences.  Types render to a
machine grammar that round-trips exactly and to the compact notation used in
print.  This script rebuilds the weight-21, height-2 example from its type.
"""

from minvan import (
    height,
    infer_type,
    is_minimal_vanishing,
    parse_type,
    render_sorou,
    render_type,
    render_type_latex,
    representative_sorou,
    type_weight,
    weight,
    weight_partition,
)

t = parse_type("(R5;1:0;(R3;1:0))")
print("machine:", render_type(t))
print("pretty: ", render_type_latex(t))
print("weight:", type_weight(t), " partition:", weight_partition(t.components[0]))

rep = representative_sorou(t)
print("representative:", render_sorou(rep))
print("inferred back: ", render_type(infer_type(rep)))

# the first minimal vanishing sorou of height 2 appear at weight 21
ht2 = parse_type("(R7;1:0+15:2;(R5;1:0)&(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0)))")
print("\nheight-2 type:", render_type_latex(ht2))
print("weight:", type_weight(ht2), " partition:", weight_partition(ht2.components[0]))
rep21 = representative_sorou(ht2)
print("representative weight:", weight(rep21), " height:", height(rep21))
print("minimal vanishing:", is_minimal_vanishing(rep21).minimal)
