"""Normal cores and averaging over finite groups.

The kernel of G acting on G/K is the normal core of K.  Averaging over a
finite group retracts cochains onto invariant cochains and commutes with
d, so invariant cohomology injects into the full cohomology.

    python demos/finite_averaging.py
"""

from liecohom import catalog
from liecohom.linalg import format_scalar
from liecohom.groups import all_subgroups, average_projector, averaged_cochains, exterior_action, is_normal, normal_core

s4 = catalog.get("s4_table").payload
g = s4.group
core = normal_core(g, s4.subgroup)
print("S4, dihedral subgroup:", [g.label(x) for x in s4.subgroup])
print("normal core:", [g.label(x) for x in core])
inside = [h for h in all_subgroups(g) if set(h) <= set(s4.subgroup) and is_normal(g, h)]
print("normal subgroups of S4 inside it:", [len(h) for h in inside])

z4 = catalog.get("z4_rotation").payload
for r in range(3):
    p = average_projector(z4.group, exterior_action(z4.action, r))
    rows = [" ".join(format_scalar(x) for x in row) for row in p.rows]
    print(f"Z4 rotations on degree {r}: projector rows {rows}")

for name in ("s3_table", "s4_table", "z4_rotation"):
    data = catalog.get(name).payload
    rep = averaged_cochains(data.algebra, data.group, data.action)
    print(f"{name}: full Betti {rep.full_betti}, invariant Betti {rep.invariant_betti},"
          f" restriction injective: {rep.injective}")
