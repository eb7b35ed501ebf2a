"""The hyperbolic plane SL(2,R)/SO(2) at the level of Lie algebras.

Builds sl2 from its relations, splits off the rotation subalgebra, and
follows the invariant forms through relative cohomology to the verdict
that foliations modelled on this space are unimodular.

    python demos/hyperbolic_plane.py
"""

from liecohom import (
    betti,
    find_reductive_complement,
    invariant_cochains,
    lie_algebra,
    modular_character,
    relative_betti,
    trivial_gk_module,
    validate_reductive_pair,
)
from liecohom.catalog import get
from liecohom.tischler import verdict

g = lie_algebra("sl2", ["X", "Y", "Z"], {("X", "Y"): {"Y": 2}, ("X", "Z"): {"Z": -2}, ("Y", "Z"): {"X": 1}})
print("sl2 Betti numbers:", betti(g))
print("modular character:", modular_character(g), "(unimodular)" if modular_character(g).is_unimodular else "")

# so(2) is spanned by Y - Z; ask for an ad-invariant complement instead of guessing one
k = [(0, 1, -1)]
p = find_reductive_complement(g, k)
print("complement of so(2):", [tuple(str(x) for x in v) for v in p])
pair = validate_reductive_pair(g, k, p, name="sl2/so2")

# the rotation acts on p by a quarter-turn-like operator, so only the area form survives
v = trivial_gk_module(pair)
for r in range(pair.q + 1):
    print(f"invariant {r}-forms on p:", len(invariant_cochains(pair, v, r)))

b = relative_betti(pair)
print("relative Betti numbers:", b)
print("top degree", pair.q, "has dimension", b[pair.q], "- one invariant volume class")

print("verdict for the catalog profile:", verdict(get("sl2_example").payload).kind)
