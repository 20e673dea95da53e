"""Chevalley-Eilenberg cohomology by rank computations, abelian extensions, and
the tangent-complex check ``d_α = δ`` on ``C(g, H)``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb

from .cochains import (
    Cochain, ce_differential, embed_g_cochain, embed_h_target, nr_bracket,
    restrict_h_target,
)
from .dgla import LElement, build_context, twist
from .exactla import Matrix, column_space_basis, extend_to_quotient_basis, mat_nullspace
from .extensions import NonAbelianCocycle, build_extension, cocycle_to_mc
from .lie import LieAlgebra, ModuleStructure, module_check, require_valid


class InvalidModuleError(ValueError):
    pass


def _require_module(m: ModuleStructure) -> None:
    require_valid(m.algebra)
    rep = module_check(m)
    if not rep.valid:
        raise InvalidModuleError(
            "action is not a representation: "
            + "; ".join(v.describe(m.algebra.basis_names) for v in rep.violations[:3]))


def cochain_basis(dim: int, n: int, k: int) -> list:
    """Index tuples ``(I, j)`` ordering the coordinates of ``C^n``: I lexicographic, then j."""
    return [(I, j) for I in combinations(range(dim), n) for j in range(k)]


def cochain_to_coords(c: Cochain) -> tuple:
    basis = cochain_basis(c.source_dim, c.arity, c.target_dim)
    return tuple(c.value(I)[j] for I, j in basis)


def coords_to_cochain(v, dim: int, n: int, k: int) -> Cochain:
    d = {}
    for (I, j), x in zip(cochain_basis(dim, n, k), v):
        if x:
            d.setdefault(I, [0] * k)[j] = x
    return Cochain(dim, n, k, d)


def basis_cochains(dim: int, n: int, k: int) -> list:
    return [Cochain(dim, n, k, {I: [1 if t == j else 0 for t in range(k)]})
            for I, j in cochain_basis(dim, n, k)]


def differential_matrix(m: ModuleStructure, n: int) -> Matrix:
    """Matrix of ``δ: C^n -> C^{n+1}`` in the coordinates of :func:`cochain_basis`."""
    l, k = m.algebra, m.space_dim
    rows = comb(l.dim, n + 1) * k
    cols = [cochain_to_coords(ce_differential(b, m)) for b in basis_cochains(l.dim, n, k)]
    if not cols:
        return Matrix.zero(rows, 0)
    return Matrix.from_columns(cols, rows=rows)


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_H: int
    representatives: tuple = ()


def ce_cohomology(l: LieAlgebra, m: ModuleStructure, n: int) -> CohomologyResult:
    if m.algebra is not l and m.algebra != l:
        raise InvalidModuleError("module is over a different algebra")
    if n < 0:
        raise ValueError("negative degree")
    _require_module(m)
    k = m.space_dim
    dim_c = comb(l.dim, n) * k
    if dim_c == 0:
        return CohomologyResult(n, 0, 0, 0, 0)
    d_n = differential_matrix(m, n)
    cocycles = mat_nullspace(d_n)
    if n == 0:
        image = []
    else:
        image = column_space_basis(differential_matrix(m, n - 1))
    reps = extend_to_quotient_basis(image, cocycles)
    dim_z = len(cocycles)
    dim_b = len(image)
    assert dim_z - dim_b == len(reps)
    return CohomologyResult(
        n, dim_c, dim_z, dim_b, dim_z - dim_b,
        tuple(coords_to_cochain(v, l.dim, n, k) for v in reps),
    )


@dataclass(frozen=True)
class AbelianClassification:
    cohomology: CohomologyResult
    h: LieAlgebra
    cocycles: tuple  # the trivial class first, then one per H^2 representative
    extensions: tuple


def classify_abelian(g: LieAlgebra, m: ModuleStructure) -> AbelianClassification:
    """H² together with the extension built from each class representative.

    The zero class (the semidirect product ``g ⋉ H``) is listed first,
    followed by one extension per basis element of H².
    """
    res = ce_cohomology(g, m, 2)
    h = LieAlgebra.abelian(m.space_dim)
    zero = NonAbelianCocycle.zero(g.dim, m.space_dim)
    cocycles = [NonAbelianCocycle(zero.chi, tuple(m.action))]
    cocycles += [NonAbelianCocycle(r, tuple(m.action)) for r in res.representatives]
    exts = tuple(build_extension(g, h, c) for c in cocycles)
    return AbelianClassification(res, h, tuple(cocycles), exts)


def module_as_cocycle(m: ModuleStructure) -> NonAbelianCocycle:
    return NonAbelianCocycle(Cochain.zero(m.algebra.dim, 2, m.space_dim), tuple(m.action))


@dataclass(frozen=True)
class TangentReport:
    valid: bool
    checked: dict  # arity -> number of basis cochains compared
    mismatches: tuple = ()
    abelian: bool = True

    def __bool__(self) -> bool:
        return self.valid


def verify_tangent(g: LieAlgebra, m: ModuleStructure) -> TangentReport:
    """Check ``d_α = δ`` on every basis cochain of ``C(g, H)`` and that ``C(g, H)`` is abelian.

    α is the antisymmetrised action in bigrade (1,1).  Arity-0 cochains are
    not in ``C_>``, so their twisted differential is evaluated with the same
    bracket at the level of raw cochains.
    """
    _require_module(m)
    h = LieAlgebra.abelian(m.space_dim)
    ctx = build_context(g, h)
    s = ctx.split
    alpha = cocycle_to_mc(ctx, module_as_cocycle(m))
    d_alpha = twist(ctx, alpha)
    total = ctx.rho + embed_h_target(alpha.cochain, s)
    checked = {}
    mismatches = []
    all_basis = []
    for n in range(g.dim + 1):
        basis = basis_cochains(g.dim, n, m.space_dim)
        all_basis.extend(basis)
        for c in basis:
            expected = embed_g_cochain(ce_differential(c, m), s)
            u = embed_g_cochain(c, s)
            if n == 0:
                got = restrict_h_target(nr_bracket(total, embed_h_target(u, s)), s)
            else:
                got = d_alpha(LElement(ctx, u)).cochain
            if got != expected:
                mismatches.append((n, c))
        checked[n] = len(basis)
    abelian = True
    for a, b in combinations_with_replacement(all_basis, 2):
        if a.arity == 0 and b.arity == 0:
            continue
        br = nr_bracket(embed_h_target(embed_g_cochain(a, s), s), embed_h_target(embed_g_cochain(b, s), s))
        if not br.is_zero():
            abelian = False
            break
    return TangentReport(not mismatches and abelian, checked, tuple(mismatches), abelian)
