"""Central elements found by exact commutator linear algebra.

Degree 3 for the three-generator family, degree 4 for the two-generator
one.  Centrality is never assumed: the centralizer slice is computed as a
nullspace and the normality automorphism is solved for explicitly.
"""

from skverify.families import AbcParams
from skverify.graded import centralizer_slice, quotient_hilbert
from skverify.pointscheme import verify_c3_description
from skverify.veronese import verify_c4_central

p = AbcParams.of(1, 2, 3)

print("parameters", p)
rec = verify_c3_description(p)
print("degree-3 centralizer dimension:", rec["centralizer_dim"])
print("coefficients in the invariant cubic basis:", rec["coefficient_triple"])
print("  (that triple is the third intersection of the tangent line")
print("   at the translation point with its curve)")
print("normality automorphism is the identity:", rec["sigma_is_identity"])

from skverify.families import build_s3
pres = build_s3(p)
c3 = centralizer_slice(pres, 3).basis()[0]
print()
print("quotient by the central cubic grows like a plane curve:")
print("  ", quotient_hilbert(pres, [c3], 6).dims)

print()
rec = verify_c4_central(p)
print("two-generator family, degree-4 centralizer dim:", rec["centralizer_dim"])
print("closed-form quartic sits inside it:", rec["quartic_in_centralizer"])
print("invariant under the sign action:", rec["quartic_invariant"])
print("normality automorphism is the identity:", rec["sigma_is_identity"])
