"""Cocycle equations and the Maurer-Cartan equation agree, including on failures.

We draw data (chi, psi) for g = aff2 and h = sl2: first an honest cocycle
obtained by gauging the zero cocycle, then the same data with psi perturbed.
For each we print the verdict of the cocycle equations and of the MC defect
d(alpha) + 1/2 [alpha, alpha] in L = C_>(g + h, h).
"""

import random

from nabext import catalog
from nabext.dgla import GaugeElement, build_context, mc_defect
from nabext.exactla import Matrix
from nabext.extensions import (
    NonAbelianCocycle, cocycle_equiv_apply, cocycle_to_mc, is_nonabelian_cocycle,
)
from nabext.lie import LinearMap

R = random.Random(7)
g, h = catalog.algebra("aff2"), catalog.algebra("sl2")
ctx = build_context(g, h)

beta = GaugeElement(LinearMap(g.dim, h.dim, Matrix.from_rows(
    [[R.randint(-2, 2) for _ in range(g.dim)] for _ in range(h.dim)])))
good = cocycle_equiv_apply(g, h, NonAbelianCocycle.zero(g.dim, h.dim), beta)

psi = list(good.psi)
psi[0] = psi[0] + Matrix.identity(h.dim)
bad = NonAbelianCocycle(good.chi, tuple(psi))

for label, c in (("gauged zero", good), ("perturbed psi", bad)):
    rep = is_nonabelian_cocycle(g, h, c)
    defect = mc_defect(ctx, cocycle_to_mc(ctx, c))
    print(f"{label}: cocycle={rep.valid} MC={defect.is_zero()}")
    for v in rep.violations[:3]:
        print("   ", v.describe())
    if not defect.is_zero():
        print("    defect lives in bigrades", sorted(defect.components()))
