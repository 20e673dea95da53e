"""The Heisenberg algebra as a non-split central extension of the plane.

Start from the abelian plane g = <x, y> and the line h = <z>.  The cocycle
chi(x, y) = z with psi = 0 builds the Heisenberg algebra [x, y] = z.  We check
that it is a cocycle, that it is a Maurer-Cartan element, and that no linear
map beta: g -> h turns it into the zero cocycle, so the extension does not
split.
"""

from nabext import catalog
from nabext.abelian import ce_cohomology
from nabext.dgla import build_context, mc_defect
from nabext.extensions import (
    NonAbelianCocycle, build_extension, cocycle_to_mc, find_witness, is_nonabelian_cocycle,
)
from nabext.lie import trivial_module, validate_lie

g, h = catalog.algebra("ab2"), catalog.algebra("ab1")
heis = catalog.cocycle("heisenberg_cocycle", g.dim, h.dim)

print("cocycle equations hold:", is_nonabelian_cocycle(g, h, heis).valid)

ctx = build_context(g, h)
alpha = cocycle_to_mc(ctx, heis)
print("bigrades of the MC element:", sorted(alpha.components()))
print("MC defect vanishes:", mc_defect(ctx, alpha).is_zero())

e = build_extension(g, h, heis).algebra
print("extension:", e, "| Lie algebra:", validate_lie(e).valid)
print("same structure constants as heis3:", e == catalog.algebra("heis3"))

w = find_witness(g, h, heis, NonAbelianCocycle.zero(g.dim, h.dim))
print(f"witness search against the split extension: {w.kind} (stage {w.stage})")
for con in w.residual:
    if not con.is_trivial():
        print("  obstruction:", con.terms)

res = ce_cohomology(g, trivial_module(g, 1), 2)
print(f"dim H^2(ab2, K) = {res.dim_H}, representative:", res.representatives[0])
