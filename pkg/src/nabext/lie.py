"""Finite-dimensional Lie algebras from structure constants, modules, direct sums."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .exactla import (
    DimensionError, Matrix, commutator, is_zero, mat_nullspace, unit, vadd,
    vec, vscale, zeros,
)


class InvalidAlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    """One failed identity: which rule, on which basis indices, with what defect."""

    rule: str
    indices: tuple
    defect: tuple

    def describe(self, names: Optional[Sequence[str]] = None) -> str:
        if names is not None:
            idx = ",".join(names[i] for i in self.indices)
        else:
            idx = ",".join(str(i) for i in self.indices)
        from .exactla import format_rational
        d = "[" + ", ".join(format_rational(x) for x in self.defect) + "]"
        return f"{self.rule} at ({idx}): defect {d}"


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple = ()

    def __bool__(self) -> bool:
        return self.valid

    @classmethod
    def from_violations(cls, violations) -> "ValidationReport":
        violations = tuple(violations)
        return cls(not violations, violations)


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Structure constants ``c[i][j]`` = coordinates of ``[e_i, e_j]``.

    Construction does not check the Jacobi identity; use :func:`validate_lie`.
    """

    dim: int
    c: tuple
    basis_names: tuple = ()

    def __post_init__(self):
        if not self.basis_names:
            object.__setattr__(self, "basis_names", tuple(f"e{i + 1}" for i in range(self.dim)))
        if len(self.basis_names) != self.dim:
            raise DimensionError("basis_names length differs from dim")
        if len(self.c) != self.dim or any(len(row) != self.dim for row in self.c):
            raise DimensionError("structure-constant array shape does not match dim")
        for row in self.c:
            for v in row:
                if len(v) != self.dim:
                    raise DimensionError("structure-constant vector of wrong length")

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict, basis_names: Sequence[str] = ()) -> "LieAlgebra":
        """Build from ``{(i, j): vector}`` with ``i < j``; the rest is filled in antisymmetrically."""
        c = [[zeros(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionError(f"bracket index ({i},{j}) out of range for dim {dim}")
            if i == j:
                raise ValueError(f"diagonal bracket ({i},{i}) given")
            v = vec(v)
            if len(v) != dim:
                raise DimensionError(f"bracket ({i},{j}) has {len(v)} coordinates, expected {dim}")
            c[i][j] = v
            c[j][i] = vscale(-1, v)
        return cls(dim, tuple(tuple(r) for r in c), tuple(basis_names))

    @classmethod
    def abelian(cls, n: int, basis_names: Sequence[str] = ()) -> "LieAlgebra":
        return cls.from_brackets(n, {}, basis_names)

    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.c[i][j]

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        out = zeros(self.dim)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b and i != j:
                    out = vadd(out, vscale(a * b, self.c[i][j]))
        return out

    def ad(self, u: Sequence) -> Matrix:
        """Matrix of ``[u, .]``."""
        return Matrix.from_columns([self.bracket(u, unit(self.dim, j)) for j in range(self.dim)],
                                   rows=self.dim)

    def ad_basis(self, i: int) -> Matrix:
        return Matrix.from_columns([self.c[i][j] for j in range(self.dim)], rows=self.dim)

    def nonzero_brackets(self) -> dict:
        return {(i, j): self.c[i][j] for i, j in combinations(range(self.dim), 2)
                if not is_zero(self.c[i][j])}

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.dim, self.c))

    def __repr__(self) -> str:
        br = ", ".join(
            f"[{self.basis_names[i]},{self.basis_names[j]}]={list(map(str, v))}"
            for (i, j), v in self.nonzero_brackets().items()
        )
        return f"LieAlgebra(dim={self.dim}, {br or 'abelian'})"


def jacobiator(a: LieAlgebra, i: int, j: int, k: int) -> tuple:
    """Cyclic sum ``[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]``."""
    n = a.dim
    ei, ej, ek = unit(n, i), unit(n, j), unit(n, k)
    t1 = a.bracket(ei, a.c[j][k])
    t2 = a.bracket(ej, a.c[k][i])
    t3 = a.bracket(ek, a.c[i][j])
    return vadd(vadd(t1, t2), t3)


def validate_lie(a: LieAlgebra) -> ValidationReport:
    violations = []
    for i in range(a.dim):
        if not is_zero(a.c[i][i]):
            violations.append(Violation("antisymmetry", (i, i), a.c[i][i]))
        for j in range(i + 1, a.dim):
            s = vadd(a.c[i][j], a.c[j][i])
            if not is_zero(s):
                violations.append(Violation("antisymmetry", (i, j), s))
    for i, j, k in combinations(range(a.dim), 3):
        J = jacobiator(a, i, j, k)
        if not is_zero(J):
            violations.append(Violation("jacobi", (i, j, k), J))
    return ValidationReport.from_violations(violations)


def require_valid(*algebras: LieAlgebra) -> None:
    for a in algebras:
        rep = validate_lie(a)
        if not rep.valid:
            raise InvalidAlgebraError(
                "not a Lie algebra: " + "; ".join(v.describe(a.basis_names) for v in rep.violations[:3])
            )


@dataclass(frozen=True, eq=False)
class SplitAlgebra:
    """``g ⊕ h`` with the g-block first."""

    g: LieAlgebra
    h: LieAlgebra
    sum: LieAlgebra

    @property
    def dg(self) -> int:
        return self.g.dim

    @property
    def dh(self) -> int:
        return self.h.dim

    @property
    def dim(self) -> int:
        return self.g.dim + self.h.dim

    def is_g(self, index: int) -> bool:
        return index < self.g.dim

    def embed_g(self, v: Sequence) -> tuple:
        return tuple(vec(v)) + zeros(self.dh)

    def embed_h(self, v: Sequence) -> tuple:
        return zeros(self.dg) + tuple(vec(v))

    def g_part(self, v: Sequence) -> tuple:
        return tuple(v[:self.dg])

    def h_part(self, v: Sequence) -> tuple:
        return tuple(v[self.dg:])


def _block_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    n = a.dim + b.dim
    br = {}
    for (i, j), v in a.nonzero_brackets().items():
        br[(i, j)] = tuple(v) + zeros(b.dim)
    for (i, j), v in b.nonzero_brackets().items():
        br[(a.dim + i, a.dim + j)] = zeros(a.dim) + tuple(v)
    return LieAlgebra.from_brackets(n, br, a.basis_names + b.basis_names)


def direct_sum(g: LieAlgebra, h: LieAlgebra, check: bool = True) -> SplitAlgebra:
    if check:
        require_valid(g, h)
    return SplitAlgebra(g, h, _block_sum(g, h))


@dataclass(frozen=True)
class LinearMap:
    source_dim: int
    target_dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target_dim, self.source_dim):
            raise DimensionError(
                f"matrix shape {self.matrix.shape} does not match {self.source_dim} -> {self.target_dim}"
            )

    @classmethod
    def from_images(cls, images: Sequence[Sequence], target_dim: int) -> "LinearMap":
        return cls(len(images), target_dim, Matrix.from_columns(images, rows=target_dim))

    @classmethod
    def zero(cls, source_dim: int, target_dim: int) -> "LinearMap":
        return cls(source_dim, target_dim, Matrix.zero(target_dim, source_dim))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, Matrix.identity(n))

    def __call__(self, v: Sequence) -> tuple:
        return self.matrix.apply(v)

    def image(self, i: int) -> tuple:
        return self.matrix.column(i)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self ∘ other``."""
        if other.target_dim != self.source_dim:
            raise DimensionError("maps are not composable")
        return LinearMap(other.source_dim, self.target_dim, self.matrix @ other.matrix)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.source_dim, self.target_dim, self.matrix + other.matrix)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.source_dim, self.target_dim, self.matrix - other.matrix)

    def __neg__(self) -> "LinearMap":
        return LinearMap(self.source_dim, self.target_dim, -self.matrix)


@dataclass(frozen=True, eq=False)
class ModuleStructure:
    algebra: LieAlgebra
    space_dim: int
    action: tuple  # one Matrix per algebra basis vector

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise DimensionError(f"{len(self.action)} action matrices for an algebra of dim {self.algebra.dim}")
        for m in self.action:
            if m.shape != (self.space_dim, self.space_dim):
                raise DimensionError(f"action matrix of shape {m.shape} on a {self.space_dim}-dim space")

    def act(self, x: Sequence, v: Sequence) -> tuple:
        """``x · v`` for an algebra element x and module vector v."""
        out = zeros(self.space_dim)
        for i, a in enumerate(x):
            if a:
                out = vadd(out, vscale(a, self.action[i].apply(v)))
        return out

    def action_of(self, x: Sequence) -> Matrix:
        out = Matrix.zero(self.space_dim, self.space_dim)
        for i, a in enumerate(x):
            if a:
                out = out + self.action[i].scale(a)
        return out


def trivial_module(l: LieAlgebra, k: int) -> ModuleStructure:
    return ModuleStructure(l, k, tuple(Matrix.zero(k, k) for _ in range(l.dim)))


def adjoint_module(l: LieAlgebra) -> ModuleStructure:
    require_valid(l)
    return ModuleStructure(l, l.dim, tuple(l.ad_basis(i) for i in range(l.dim)))


def module_check(m: ModuleStructure) -> ValidationReport:
    l = m.algebra
    violations = []
    for i, j in combinations(range(l.dim), 2):
        lhs = m.action_of(l.c[i][j])
        rhs = commutator(m.action[i], m.action[j])
        if lhs != rhs:
            violations.append(Violation("module", (i, j), (lhs - rhs).entries))
    return ValidationReport.from_violations(violations)


def center(h: LieAlgebra) -> list:
    require_valid(h)
    n = h.dim
    # x in center iff [e_j, x] = 0 for all j: stack ad(e_j)
    rows = []
    for j in range(n):
        rows.extend(h.ad_basis(j).to_rows())
    if not rows:
        return []
    return mat_nullspace(Matrix.from_rows(rows, cols=n))


def is_derivation(D: LinearMap, h: LieAlgebra) -> bool:
    if D.source_dim != h.dim or D.target_dim != h.dim:
        raise DimensionError("derivation must be square on h")
    n = h.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = D(h.c[i][j])
            rhs = vadd(h.bracket(D.image(i), unit(n, j)), h.bracket(unit(n, i), D.image(j)))
            if lhs != rhs:
                return False
    return True


def change_basis(a: LieAlgebra, P: Matrix) -> LieAlgebra:
    """Structure constants in the basis given by the columns of invertible ``P``."""
    from .exactla import solve_affine
    n = a.dim
    cols = [P.column(k) for k in range(n)]
    br = {}
    for i, j in combinations(range(n), 2):
        w = a.bracket(cols[i], cols[j])
        sol = solve_affine(P, w)
        if sol.particular is None or sol.kernel_basis:
            raise ValueError("change-of-basis matrix is not invertible")
        br[(i, j)] = sol.particular
    return LieAlgebra.from_brackets(n, br, a.basis_names)
