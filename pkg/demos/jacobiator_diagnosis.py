"""Locating a failed Jacobi identity in a candidate extension bracket.

The Jacobiator of a bracket on g + h splits by where its arguments and value
live.  Three of the eight pieces vanish for any bracket of extension shape;
the h-valued pieces vanish exactly when the data form a cocycle.  We feed in
three defective data sets and print which pieces are nonzero.
"""

from nabext import catalog
from nabext.cochains import Cochain
from nabext.exactla import Matrix
from nabext.extensions import JACOBIATOR_LABELS, NonAbelianCocycle, build_extension, jacobiator_components
from nabext.lie import LieAlgebra, validate_lie

ab1, ab2 = LieAlgebra.abelian(1), LieAlgebra.abelian(2)
aff2, bad3 = catalog.algebra("aff2"), catalog.algebra("bad3")

cases = {
    "chi not central (ab2 by aff2)": (ab2, aff2, catalog.cocycle("bad_chi_ab2_aff2", 2, 2)),
    "psi not a derivation (ab1 by aff2)": (ab1, aff2, NonAbelianCocycle(Cochain.zero(1, 2, 2), (Matrix.identity(2),))),
    "h not a Lie algebra (ab1 by bad3)": (ab1, bad3, NonAbelianCocycle.zero(1, 3)),
}

for label, (g, h, c) in cases.items():
    rho = build_extension(g, h, c)
    rep = jacobiator_components(rho)
    bad = [l for l in JACOBIATOR_LABELS if not rep.is_zero(l)]
    print(f"{label}: Lie={validate_lie(rho.algebra).valid}, nonzero pieces: {', '.join(bad)}")
