"""Point geometry: walking a cubic by its group law, and rank-drop loci.

The multilinearized relations of each family give matrices of linear forms
in point coordinates; their rank drops exactly on the point locus.  For the
three-generator family that locus is a smooth plane cubic and the walk
"next point" is translation in its group law.
"""

from fractions import Fraction

from skverify.families import AbcParams
from skverify.field import fe
from skverify.pointscheme import (ProjPoint, group_law_record, hesse_add,
                                  hesse_origin, s2_point_determinant,
                                  s3_next_point, s4_minor_membership)

p = AbcParams.of(1, 2, 3)
tau = ProjPoint.of(p.a, p.b, p.c)
print("curve parameters", p, "-> translation point", tau)

pt = hesse_origin()
print("walk from the origin (each step adds tau):")
for k in range(5):
    print(f"  step {k}: {pt}")
    pt = s3_next_point(p, pt)

rec = group_law_record(p, 10)
print("group law axioms on ten multiples:",
      "all pass" if rec["pass"] else "FAILED")

print()
rec = s2_point_determinant(p)
print("two-generator family: 2x2 matrix of bilinear forms")
print("  determinant proportional to the reference biquadratic:",
      rec["proportional"], "(ratio", str(rec["ratio_to_reference"]) + ")")
rec0 = s2_point_determinant(AbcParams.of(0, 2, 3))
print("  at a = 0 it splits into lines:", rec0["degenerate_product_of_lines"])

print()
lam = (fe(1), fe(Fraction(-7, 4)), fe(1))
rec = s4_minor_membership(*lam)
print("four-generator family at a square-root parameter triple:")
print("  6x4 matrix of linear forms,", rec["minor_count"], "maximal minors")
print("  all lie in the span of the two reference quadrics:",
      rec["all_members"])
print("  perturbing the triple breaks", rec["perturbed_failures"],
      "of them, so the containment is not an accident")
