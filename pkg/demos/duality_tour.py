"""Relative Poincare duality across the catalog.

For each reductive pair and each standard coefficient module, compare
H^r(g,K;V) with H_(q-r)(g,K;V^tw): the left side from invariant cochains,
the right from coinvariant chains of the twisted module.  The explicit
map a (x) v -> (b -> eps(a ^ b) v) is checked to intertwine the two
complexes.

    python demos/duality_tour.py
"""

from liecohom import catalog, duality_check, is_k_unimodular, poincare_map_check

for entry in catalog.entries("pair"):
    pair = entry.payload
    if not is_k_unimodular(pair):
        continue
    print(f"{entry.name}  (dim k = {pair.k_dim}, q = {pair.q})")
    for name, v in catalog.modules_for(pair).items():
        rep = duality_check(pair, v)
        hom = " ".join(str(x) for x in reversed(rep.twisted_homology))
        coh = " ".join(str(x) for x in rep.cohomology)
        mark = "ok" if rep.degrees_match and poincare_map_check(pair, v) else "MISMATCH"
        print(f"  {name:11s} H^r: {coh:8s} H_(q-r) twisted: {hom:8s} {mark}")
    rep = duality_check(pair)
    print(f"  top class with trivial coefficients: {rep.top_cohomology_trivial},"
          f" H^0 of the dual twist: {rep.h0_dual_twist}")
