"""Abelian extensions by H^2, and the twisted differential of a module.

For an abelian ideal the classes are counted by Chevalley-Eilenberg H^2.  We
print H^2 for a few algebras and modules, build one extension per class, and
confirm that twisting the dgLa by the module's action reproduces the
Chevalley-Eilenberg differential on every arity.
"""

from nabext import catalog
from nabext.abelian import ce_cohomology, classify_abelian, verify_tangent
from nabext.lie import LieAlgebra, adjoint_module, trivial_module

cases = [
    ("ab2", LieAlgebra.abelian(2), "trivial K"),
    ("ab3", LieAlgebra.abelian(3), "trivial K"),
    ("ab4", LieAlgebra.abelian(4), "trivial K"),
    ("aff2", catalog.algebra("aff2"), "adjoint"),
    ("heis3", catalog.algebra("heis3"), "trivial K"),
    ("so3", catalog.algebra("so3"), "adjoint"),
    ("sl2", catalog.algebra("sl2"), "adjoint"),
]

for name, g, kind in cases:
    m = adjoint_module(g) if kind == "adjoint" else trivial_module(g, 1)
    r = ce_cohomology(g, m, 2)
    print(f"H^2({name}, {kind}): Z={r.dim_cocycles} B={r.dim_coboundaries} H={r.dim_H}")

heis3 = catalog.algebra("heis3")
cl = classify_abelian(heis3, trivial_module(heis3, 1))
print(f"\nheis3 with trivial K: {len(cl.extensions)} extensions (split one first)")
for ext in cl.extensions:
    print("  ", ext.algebra)

for name in ("aff2", "so3"):
    g = catalog.algebra(name)
    rep = verify_tangent(g, adjoint_module(g))
    print(f"\ntwisted differential = CE differential on {name}: {rep.valid}, checked {rep.checked}")
