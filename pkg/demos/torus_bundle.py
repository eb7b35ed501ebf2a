"""The Lie flow on a hyperbolic torus bundle.

For A in SL(2,Z) with trace above 2 the mapping torus of A carries a Lie
foliation modelled on the affine group of the line.  The affine group is
not unimodular, so the modular function pulled back along the developing
map is a closed nonsingular 1-form; its periods are multiples of
log(lambda) and the manifold fibers over the circle.

    python demos/torus_bundle.py
"""

from fractions import Fraction

from liecohom import carriere_profile, det_ad, ga_ad_matrix, group_element
from liecohom.catalog import get
from liecohom.linalg import format_scalar

ga = get("ga1").payload

# det Ad of (s, a) is a, the homothety ratio; a stands in for lambda^t
for s, a in ((0, 2), (3, Fraction(5, 2)), (-1, Fraction(1, 3))):
    e = group_element(f"({s},{a})", ga_ad_matrix(s, a), ga)
    rows = "; ".join(" ".join(format_scalar(x) for x in row) for row in e.matrix.rows)
    print(f"Ad{e.label} = [{rows}]  det = {format_scalar(det_ad(e).det)}")

for a in ([[2, 1], [1, 1]], [[3, 1], [2, 1]], [[5, 2], [2, 1]]):
    r = carriere_profile(a)
    print()
    print("A =", a, " minimal polynomial of lambda:", r.minimal_polynomial)
    chi = " ".join(format_scalar(x) for x in r.modular_character)
    print(f"modular character of ga: ({chi})  modular function: {r.modular_function}")
    print("periods:", [r.periods.format_period(v) for v in r.periods.generators])
    print("verdict:", r.verdict.kind)
    for line in r.verdict.certificate:
        print("  -", line)

try:
    carriere_profile([[1, 1], [0, 1]])
except Exception as exc:
    print()
    print("parabolic A is rejected:", type(exc).__name__, exc)
