"""Non-abelian 2-cocycles and the extensions they classify.

A cocycle ``(χ, ψ)`` is stored in operator form: ``chi`` is an arity-2
cochain on g valued in h, and ``psi[i]`` is the matrix of ``ψ(e_i)`` acting on
h.  Packed into L (see :func:`cocycle_to_mc`) the (1,1) part is
``α(e_i, f_j) = ψ(e_i) f_j`` with no extra factor; the packed element is
exactly the h-valued part of the extension bracket minus ``[,]_h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .cochains import Cochain, bigrade_of
from .dgla import (
    DgLaContext, GaugeElement, LElement, build_context, gauge_act,
)
from .exactla import (
    DimensionError, Matrix, commutator, format_rational, is_zero, mat_rank,
    solve_affine, unit, vadd, vscale, vsub, zeros,
)
from .lie import (
    LieAlgebra, LinearMap, ValidationReport, Violation, center, is_derivation,
    jacobiator, require_valid,
)


class InvalidCocycleError(ValueError):
    pass


class SectionError(ValueError):
    """The maps handed to :func:`extension_to_cocycle` do not split the extension."""


class ComponentShapeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class NonAbelianCocycle:
    chi: Cochain
    psi: tuple

    def __post_init__(self):
        dg = len(self.psi)
        if self.chi.arity != 2 or self.chi.source_dim != dg:
            raise DimensionError("chi must be an arity-2 cochain on g")
        for m in self.psi:
            if m.shape != (self.chi.target_dim, self.chi.target_dim):
                raise DimensionError("psi matrices must be square on h")

    @property
    def dg(self) -> int:
        return len(self.psi)

    @property
    def dh(self) -> int:
        return self.chi.target_dim

    @classmethod
    def zero(cls, dg: int, dh: int) -> "NonAbelianCocycle":
        return cls(Cochain.zero(dg, 2, dh), tuple(Matrix.zero(dh, dh) for _ in range(dg)))

    def psi_of(self, x: Sequence) -> Matrix:
        out = Matrix.zero(self.dh, self.dh)
        for i, a in enumerate(x):
            if a:
                out = out + self.psi[i].scale(a)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, NonAbelianCocycle):
            return NotImplemented
        return self.chi == other.chi and tuple(self.psi) == tuple(other.psi)

    def __hash__(self):
        return hash((self.chi, self.psi))

    def __repr__(self) -> str:
        return f"NonAbelianCocycle(chi={self.chi!r}, psi={[m.to_rows() for m in self.psi]})"


def _check_shapes(g: LieAlgebra, h: LieAlgebra, c: NonAbelianCocycle) -> None:
    if c.dg != g.dim or c.dh != h.dim:
        raise DimensionError(f"cocycle shape ({c.dg}, {c.dh}) does not match g, h dims ({g.dim}, {h.dim})")


def is_nonabelian_cocycle(g: LieAlgebra, h: LieAlgebra, c: NonAbelianCocycle) -> ValidationReport:
    """Derivation condition, ``[ψa,ψb] = ψ[a,b] + ad χ(a,b)`` and the cyclic cocycle identity."""
    _check_shapes(g, h, c)
    out = []
    n, k = g.dim, h.dim
    for i in range(n):
        D = LinearMap(k, k, c.psi[i])
        if not is_derivation(D, h):
            defects = []
            for a, b in combinations(range(k), 2):
                lhs = D(h.c[a][b])
                rhs = vadd(h.bracket(D.image(a), unit(k, b)), h.bracket(unit(k, a), D.image(b)))
                defects.extend(vsub(lhs, rhs))
            out.append(Violation("derivation", (i,), tuple(defects)))
    for a, b in combinations(range(n), 2):
        lhs = commutator(c.psi[a], c.psi[b])
        rhs = c.psi_of(g.c[a][b]) + h.ad(c.chi.value((a, b)))
        if lhs != rhs:
            out.append(Violation("mod", (a, b), (lhs - rhs).entries))
    for a, b, d in combinations(range(n), 3):
        acc = zeros(k)
        for x, y, z in ((a, b, d), (b, d, a), (d, a, b)):
            acc = vadd(acc, c.psi[x].apply(c.chi.value((y, z))))
            acc = vsub(acc, _chi_first(c.chi, g.c[x][y], z))
        if not is_zero(acc):
            out.append(Violation("cocycle", (a, b, d), acc))
    return ValidationReport.from_violations(out)


def _chi_first(chi: Cochain, v: Sequence, z: int) -> tuple:
    acc = zeros(chi.target_dim)
    for i, a in enumerate(v):
        if a:
            acc = vadd(acc, vscale(a, chi.value((i, z))))
    return acc


def cocycle_to_mc(ctx: DgLaContext, c: NonAbelianCocycle) -> LElement:
    s = ctx.split
    if c.dg != s.dg or c.dh != s.dh:
        raise DimensionError("cocycle shape does not match the context")
    coeffs = {}
    for (a, b), v in c.chi.items():
        coeffs[(a, b)] = v
    for i in range(s.dg):
        for j in range(s.dh):
            coeffs[(i, s.dg + j)] = c.psi[i].column(j)
    return LElement(ctx, Cochain(s.dim, 2, s.dh, coeffs))


def mc_to_cocycle(x: LElement) -> NonAbelianCocycle:
    s = x.ctx.split
    if x.degree != 1:
        raise ValueError(f"expected a degree-1 element, got degree {x.degree}")
    chi = {}
    cols = [[zeros(s.dh) for _ in range(s.dh)] for _ in range(s.dg)]
    for k, v in x.cochain.items():
        mn = bigrade_of(k, s.dg)
        if mn == (2, 0):
            chi[k] = v
        elif mn == (1, 1):
            cols[k[0]][k[1] - s.dg] = v
        else:
            raise ValueError(f"component of bigrade {mn} at {k}; only (2,0) and (1,1) allowed")
    psi = tuple(Matrix.from_columns(cols[i], rows=s.dh) for i in range(s.dg))
    return NonAbelianCocycle(Cochain(s.dg, 2, s.dh, chi), psi)


# --- extensions as Lie algebras ------------------------------------------

@dataclass(frozen=True, eq=False)
class ExtensionBracket:
    """Bracket ρ on ``g⊕h`` (g-block first) as a candidate Lie algebra."""

    dg: int
    dh: int
    algebra: LieAlgebra

    def __post_init__(self):
        if self.algebra.dim != self.dg + self.dh:
            raise DimensionError("algebra dimension is not dg + dh")

    def check_shape(self) -> None:
        """ρ^G_GH = ρ^G_HH = 0."""
        a = self.algebra
        for i, j in combinations(range(a.dim), 2):
            if j >= self.dg and not is_zero(a.c[i][j][:self.dg]):
                raise ComponentShapeError(
                    f"bracket of basis {i},{j} has a g-component; not an extension of g by h")


def build_extension(g: LieAlgebra, h: LieAlgebra, c: NonAbelianCocycle) -> ExtensionBracket:
    """``[h1+g1, h2+g2] = [h1,h2]_h + ψ_{g1}h2 − ψ_{g2}h1 + χ(g1,g2) + [g1,g2]_g``."""
    _check_shapes(g, h, c)
    dg, dh = g.dim, h.dim
    br = {}
    for i, j in combinations(range(dg), 2):
        br[(i, j)] = tuple(g.c[i][j]) + tuple(c.chi.value((i, j)))
    for i in range(dg):
        for j in range(dh):
            br[(i, dg + j)] = zeros(dg) + c.psi[i].column(j)
    for i, j in combinations(range(dh), 2):
        br[(dg + i, dg + j)] = zeros(dg) + tuple(h.c[i][j])
    taken = set(g.basis_names)
    h_names = tuple(f"{n}_h" if n in taken else n for n in h.basis_names)
    alg = LieAlgebra.from_brackets(dg + dh, br, tuple(g.basis_names) + h_names)
    return ExtensionBracket(dg, dh, alg)


def canonical_maps(dg: int, dh: int) -> tuple[LinearMap, LinearMap, LinearMap]:
    """``(h_embed, proj, section)`` for the block decomposition ``g⊕h``."""
    n = dg + dh
    h_embed = LinearMap.from_images([unit(n, dg + j) for j in range(dh)], n)
    proj = LinearMap.from_images([unit(dg, i) if i < dg else zeros(dg) for i in range(n)], dg)
    section = LinearMap.from_images([unit(n, i) for i in range(dg)], n)
    return h_embed, proj, section


def _preimage(h_embed: LinearMap, w: Sequence, what: str) -> tuple:
    sol = solve_affine(h_embed.matrix, w)
    if sol.particular is None:
        raise SectionError(f"{what} escapes the embedded h")
    return sol.particular


def _check_splitting(e: LieAlgebra, h_embed: LinearMap, proj: LinearMap, s: LinearMap) -> None:
    n = e.dim
    if h_embed.target_dim != n or proj.source_dim != n or s.target_dim != n:
        raise DimensionError("maps do not match the extension's dimension")
    if s.source_dim != proj.target_dim:
        raise DimensionError("section and projection disagree on dim g")
    dg, dh = proj.target_dim, h_embed.source_dim
    defect = proj.compose(s).matrix - Matrix.identity(dg)
    if not defect.is_zero():
        raise SectionError(
            "section is not a right inverse of the projection; p∘s − Id = "
            + str([[format_rational(x) for x in row] for row in defect.to_rows()])
        )
    if mat_rank(proj.matrix) != dg:
        raise SectionError("projection is not surjective")
    if mat_rank(h_embed.matrix) != dh:
        raise SectionError("h embedding is not injective")
    if dg + dh != n or not proj.compose(h_embed).matrix.is_zero():
        raise SectionError("image of the h embedding is not the kernel of the projection")


def induced_algebras(e: LieAlgebra, h_embed: LinearMap, proj: LinearMap,
                     s: LinearMap) -> tuple[LieAlgebra, LieAlgebra]:
    """The quotient g (bracket ``p[s a, s b]``) and the ideal h pulled back along the embedding."""
    _check_splitting(e, h_embed, proj, s)
    dg, dh = proj.target_dim, h_embed.source_dim
    gb = {(a, b): proj(e.bracket(s.image(a), s.image(b))) for a, b in combinations(range(dg), 2)}
    hb = {(a, b): _preimage(h_embed, e.bracket(h_embed.image(a), h_embed.image(b)), "[h, h]")
          for a, b in combinations(range(dh), 2)}
    return LieAlgebra.from_brackets(dg, gb), LieAlgebra.from_brackets(dh, hb)


def extension_to_cocycle(e: LieAlgebra, h_embed: LinearMap, proj: LinearMap,
                         s: LinearMap) -> NonAbelianCocycle:
    """``ψ^s_a(h) = [s a, h]_e`` and ``χ^s(a, b) = [s a, s b]_e − s[a, b]_g``, pulled back to h."""
    g, _ = induced_algebras(e, h_embed, proj, s)
    dg, dh = g.dim, h_embed.source_dim
    psi = []
    for a in range(dg):
        cols = [_preimage(h_embed, e.bracket(s.image(a), h_embed.image(j)), "[s(g), h]")
                for j in range(dh)]
        psi.append(Matrix.from_columns(cols, rows=dh))
    chi = {}
    for a, b in combinations(range(dg), 2):
        w = vsub(e.bracket(s.image(a), s.image(b)), s(g.c[a][b]))
        chi[(a, b)] = _preimage(h_embed, w, "χ^s")
    return NonAbelianCocycle(Cochain(dg, 2, dh, chi), tuple(psi))


# --- Jacobiator bookkeeping ----------------------------------------------

JACOBIATOR_LABELS = tuple(f"J^{t}_{a}" for t in "GH" for a in ("GGG", "GGH", "GHH", "HHH"))
STRUCTURAL_ZEROS = ("J^G_GGH", "J^G_GHH", "J^G_HHH")


@dataclass(frozen=True)
class JacobiatorReport:
    components: dict  # label -> Cochain (arity 3 on g⊕h, valued in the g or h block)

    def is_zero(self, label: str) -> bool:
        return self.components[label].is_zero()

    @property
    def h_components_vanish(self) -> bool:
        return all(self.is_zero(l) for l in JACOBIATOR_LABELS if l.startswith("J^H"))

    @property
    def structural_zeros_hold(self) -> bool:
        return all(self.is_zero(l) for l in STRUCTURAL_ZEROS)

    @property
    def all_vanish(self) -> bool:
        return all(c.is_zero() for c in self.components.values())


def jacobiator_components(rho: ExtensionBracket) -> JacobiatorReport:
    rho.check_shape()
    a, dg, dh = rho.algebra, rho.dg, rho.dh
    n = a.dim
    parts = {label: {} for label in JACOBIATOR_LABELS}
    for i, j, k in combinations(range(n), 3):
        J = jacobiator(a, i, j, k)
        m = sum(1 for x in (i, j, k) if x < dg)
        args = "G" * m + "H" * (3 - m)
        parts[f"J^G_{args}"][(i, j, k)] = J[:dg]
        parts[f"J^H_{args}"][(i, j, k)] = J[dg:]
    comps = {label: Cochain(n, 3, dg if label.startswith("J^G") else dh, d)
             for label, d in parts.items()}
    report = JacobiatorReport(comps)
    if not report.structural_zeros_hold:
        raise AssertionError("a structurally zero Jacobiator component is nonzero")
    return report


# --- equivalence ---------------------------------------------------------

def cocycle_equiv_apply(g: LieAlgebra, h: LieAlgebra, c: NonAbelianCocycle,
                        beta: GaugeElement) -> NonAbelianCocycle:
    """``ψ'_a = ψ_a + ad β(a)``; ``χ'(a,b) = χ(a,b) + ψ_a β(b) − ψ_b β(a) − β[a,b] + [β a, β b]``."""
    _check_shapes(g, h, c)
    b = beta.beta
    if (b.source_dim, b.target_dim) != (g.dim, h.dim):
        raise DimensionError("gauge map has the wrong shape")
    psi = tuple(c.psi[i] + h.ad(b.image(i)) for i in range(g.dim))
    chi = {}
    for x, y in combinations(range(g.dim), 2):
        v = c.chi.value((x, y))
        v = vadd(v, c.psi[x].apply(b.image(y)))
        v = vsub(v, c.psi[y].apply(b.image(x)))
        v = vsub(v, b(g.c[x][y]))
        v = vadd(v, h.bracket(b.image(x), b.image(y)))
        chi[(x, y)] = v
    return NonAbelianCocycle(Cochain(g.dim, 2, h.dim, chi), psi)


def gauge_cocycle(g: LieAlgebra, h: LieAlgebra, c: NonAbelianCocycle,
                  beta: GaugeElement, ctx: Optional[DgLaContext] = None) -> NonAbelianCocycle:
    """The same action, routed through the dgLa: unpack(gauge_act(β, pack(c)))."""
    ctx = ctx or build_context(g, h)
    return mc_to_cocycle(gauge_act(ctx, beta, cocycle_to_mc(ctx, c)))


def check_equivalent_with_witness(g: LieAlgebra, h: LieAlgebra, c: NonAbelianCocycle,
                                  c2: NonAbelianCocycle, beta: GaugeElement) -> bool:
    _check_shapes(g, h, c2)
    return cocycle_equiv_apply(g, h, c, beta) == c2


@dataclass(frozen=True)
class PolynomialConstraint:
    """``Σ coeff · monomial = 0``; monomials are sorted tuples of parameter names."""

    terms: dict

    @property
    def degree(self) -> int:
        return max((len(m) for m, c in self.terms.items() if c), default=0)

    def is_trivial(self) -> bool:
        return not any(self.terms.values())


@dataclass(frozen=True)
class WitnessResult:
    kind: str  # "found" | "not_equivalent" | "unknown"
    beta: Optional[GaugeElement] = None
    stage: Optional[int] = None
    parameters: tuple = ()
    residual: tuple = ()  # PolynomialConstraint, one per (pair, h-coordinate)

    @property
    def found(self) -> bool:
        return self.kind == "found"


def _residual_system(g, h, c, c2, particular, zbasis):
    """Eq2 residual with ``β(a_i) = p_i + Σ_k t[i,k] z_k`` as polynomials in the t's."""
    dg, dh = g.dim, h.dim
    dz = len(zbasis)
    names = [[f"t_{g.basis_names[i]}_{k}" for k in range(dz)] for i in range(dg)]
    constraints = []
    for a, b in combinations(range(dg), 2):
        pa, pb = particular[a], particular[b]
        const = vsub(c2.chi.value((a, b)), c.chi.value((a, b)))
        const = vsub(const, c.psi[a].apply(pb))
        const = vadd(const, c.psi[b].apply(pa))
        ab = g.c[a][b]
        for i, w in enumerate(ab):
            if w:
                const = vadd(const, vscale(w, particular[i]))
        const = vsub(const, h.bracket(pa, pb))
        lin = {}
        for i in range(dg):
            for k, z in enumerate(zbasis):
                v = zeros(dh)
                if i == b:
                    v = vsub(v, c.psi[a].apply(z))
                    v = vsub(v, h.bracket(pa, z))
                if i == a:
                    v = vadd(v, c.psi[b].apply(z))
                    v = vsub(v, h.bracket(z, pb))
                if ab[i]:
                    v = vadd(v, vscale(ab[i], z))
                lin[names[i][k]] = v
        quad = {}
        for k, zk in enumerate(zbasis):
            for l, zl in enumerate(zbasis):
                key = tuple(sorted((names[a][k], names[b][l])))
                quad[key] = vadd(quad.get(key, zeros(dh)), vscale(-1, h.bracket(zk, zl)))
        for j in range(dh):
            terms = {}
            if const[j]:
                terms[()] = const[j]
            for nm, v in lin.items():
                if v[j]:
                    terms[(nm,)] = v[j]
            for key, v in quad.items():
                if v[j]:
                    terms[key] = v[j]
            constraints.append(PolynomialConstraint(terms))
    flat = tuple(nm for row in names for nm in row)
    return flat, constraints


def find_witness(g: LieAlgebra, h: LieAlgebra, c: NonAbelianCocycle,
                 c2: NonAbelianCocycle) -> WitnessResult:
    """Search for β with ``c ∼β c2``.  Sound; answers ``unknown`` rather than guess."""
    require_valid(g, h)
    for cc in (c, c2):
        rep = is_nonabelian_cocycle(g, h, cc)
        if not rep.valid:
            raise InvalidCocycleError(
                "input is not a non-abelian cocycle: "
                + "; ".join(v.describe() for v in rep.violations[:3]))
    dg, dh = g.dim, h.dim

    # stage 1: ad_h(x_i) = ψ'_i − ψ_i
    ad_cols = [h.ad_basis(j).entries for j in range(dh)]
    A = Matrix.from_columns(ad_cols, rows=dh * dh) if dh else Matrix.zero(0, 0)
    particular = []
    for i in range(dg):
        rhs = (c2.psi[i] - c.psi[i]).entries
        sol = solve_affine(A, rhs)
        if sol.particular is None:
            return WitnessResult("not_equivalent", stage=1)
        particular.append(sol.particular)
    zbasis = center(h)

    # stage 2: Eq2 over the center-valued freedom
    params, constraints = _residual_system(g, h, c, c2, particular, zbasis)
    if not params:
        beta = GaugeElement(LinearMap.from_images(particular, dh) if dg else LinearMap.zero(0, dh))
        if check_equivalent_with_witness(g, h, c, c2, beta):
            return WitnessResult("found", beta=beta)
        return WitnessResult("not_equivalent", stage=2, residual=tuple(constraints))
    if any(con.degree > 1 for con in constraints):
        return WitnessResult("unknown", stage=2, parameters=params, residual=tuple(constraints))
    M = Matrix.from_rows([[con.terms.get((p,), Fraction(0)) for p in params] for con in constraints],
                         cols=len(params)) if constraints else Matrix.zero(0, len(params))
    rhs = [-con.terms.get((), Fraction(0)) for con in constraints]
    sol = solve_affine(M, rhs)
    if sol.particular is None:
        return WitnessResult("not_equivalent", stage=2, parameters=params, residual=tuple(constraints))
    t = sol.particular
    images = []
    for i in range(dg):
        v = particular[i]
        for k, z in enumerate(zbasis):
            v = vadd(v, vscale(t[i * len(zbasis) + k], z))
        images.append(v)
    beta = GaugeElement(LinearMap.from_images(images, dh))
    if not check_equivalent_with_witness(g, h, c, c2, beta):
        raise AssertionError("witness search produced a β that does not satisfy the equivalence")
    return WitnessResult("found", beta=beta)
