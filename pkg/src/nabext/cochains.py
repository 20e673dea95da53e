"""Alternating multilinear maps and the two operations on them that matter here.

A :class:`Cochain` of arity ``p`` is an alternating map ``V^p -> W`` stored by
its values on strictly increasing tuples of basis indices.  On top of that:

* :func:`ce_differential` -- the Chevalley-Eilenberg differential, with the
  overall sign ``δc(l_1..l_n) = Σ_s (-1)^s l_s·c(..l̂_s..) + Σ_{i<j} (-1)^{i+j+1} c([l_i,l_j], ..)``
  (1-based positions).
* :func:`nr_insertion` / :func:`nr_bracket` -- the Nijenhuis-Richardson
  bracket.  ``i_P Q`` plugs ``P`` into the first slot of ``Q`` summed over
  unshuffles; NR degree of a p-cochain is ``p - 1``.

With these two conventions ``ce_differential(c, adjoint) == nr_bracket(ρ, c)``
holds on the nose, which the test-suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Optional, Sequence

from .exactla import DimensionError, format_rational, is_zero, vadd, vec, vscale, zeros
from .lie import LieAlgebra, ModuleStructure, SplitAlgebra


def sort_with_sign(indices: Sequence[int]) -> tuple[int, Optional[tuple]]:
    """Return ``(sign, sorted)``; sign 0 and ``None`` if an index repeats."""
    idx = list(indices)
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(idx)):
        x = idx[a]
        b = a - 1
        while b >= 0 and idx[b] > x:
            idx[b + 1] = idx[b]
            b -= 1
            sign = -sign
        if b >= 0 and idx[b] == x:
            return 0, None
        idx[b + 1] = x
    return sign, tuple(idx)


class Cochain:
    """Alternating map ``(F^source_dim)^arity -> F^target_dim``.

    ``coeffs`` maps strictly increasing index tuples to target vectors; zero
    values are dropped so two equal cochains always have equal ``coeffs``.
    """

    __slots__ = ("source_dim", "arity", "target_dim", "_coeffs")

    def __init__(self, source_dim: int, arity: int, target_dim: int, coeffs: Optional[dict] = None):
        if arity < 0:
            raise ValueError("negative arity")
        self.source_dim = source_dim
        self.arity = arity
        self.target_dim = target_dim
        clean = {}
        for key, v in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != arity:
                raise DimensionError(f"index {key} has length {len(key)}, arity is {arity}")
            if any(b <= a for a, b in zip(key, key[1:])):
                raise ValueError(f"index {key} is not strictly increasing")
            if any(not 0 <= i < source_dim for i in key):
                raise DimensionError(f"index {key} out of range for source dim {source_dim}")
            v = vec(v)
            if len(v) != target_dim:
                raise DimensionError(f"value at {key} has length {len(v)}, target dim is {target_dim}")
            if not is_zero(v):
                clean[key] = v
        self._coeffs = clean

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    @classmethod
    def zero(cls, source_dim: int, arity: int, target_dim: int) -> "Cochain":
        return cls(source_dim, arity, target_dim)

    @classmethod
    def from_function(cls, source_dim: int, arity: int, target_dim: int,
                      f: Callable[[tuple], Sequence]) -> "Cochain":
        return cls(source_dim, arity, target_dim,
                   {I: f(I) for I in combinations(range(source_dim), arity)})

    @classmethod
    def constant(cls, source_dim: int, v: Sequence) -> "Cochain":
        v = vec(v)
        return cls(source_dim, 0, len(v), {(): v})

    @property
    def nr_degree(self) -> int:
        return self.arity - 1

    def value(self, indices: Sequence[int]) -> tuple:
        """Value on basis vectors in any order (sign-corrected)."""
        sign, key = sort_with_sign(indices)
        if not sign:
            return zeros(self.target_dim)
        v = self._coeffs.get(key)
        if v is None:
            return zeros(self.target_dim)
        return v if sign > 0 else tuple(-x for x in v)

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check_same_space(self, other: "Cochain") -> None:
        if (self.source_dim, self.arity, self.target_dim) != (other.source_dim, other.arity, other.target_dim):
            raise DimensionError(
                f"cochains of shape {(self.source_dim, self.arity, self.target_dim)} and "
                f"{(other.source_dim, other.arity, other.target_dim)} cannot be combined"
            )

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_same_space(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = vadd(out[k], v) if k in out else v
        return Cochain(self.source_dim, self.arity, self.target_dim, out)

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, s) -> "Cochain":
        return Cochain(self.source_dim, self.arity, self.target_dim,
                       {k: vscale(s, v) for k, v in self._coeffs.items()})

    def __rmul__(self, s) -> "Cochain":
        return self.scale(s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.source_dim == other.source_dim and self.arity == other.arity
                and self.target_dim == other.target_dim and self._coeffs == other._coeffs)

    def __hash__(self):
        return hash((self.source_dim, self.arity, self.target_dim, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        body = ", ".join(
            f"{k}: [{', '.join(format_rational(x) for x in v)}]" for k, v in sorted(self._coeffs.items())
        )
        return f"Cochain({self.source_dim}->{self.target_dim}, arity={self.arity}, {{{body}}})"


def eval_cochain(c: Cochain, args: Sequence[Sequence]) -> tuple:
    """Evaluate on arbitrary source vectors by multilinear, alternating extension."""
    if len(args) != c.arity:
        raise DimensionError(f"{len(args)} arguments for a cochain of arity {c.arity}")
    args = [vec(a) for a in args]
    for a in args:
        if len(a) != c.source_dim:
            raise DimensionError(f"argument of length {len(a)}, source dim is {c.source_dim}")
    supports = [[i for i, x in enumerate(a) if x] for a in args]
    out = zeros(c.target_dim)
    for idx in product(*supports):
        coef = Fraction(1)
        for a, i in zip(args, idx):
            coef *= a[i]
        v = c.value(idx)
        if not is_zero(v):
            out = vadd(out, vscale(coef, v))
    return out


def identity_cochain(n: int) -> Cochain:
    return Cochain(n, 1, n, {(i,): tuple(Fraction(int(k == i)) for k in range(n)) for i in range(n)})


def cochain_from_matrix(m) -> Cochain:
    """Arity-1 cochain whose value on ``e_i`` is column ``i`` of ``m``."""
    return Cochain(m.cols, 1, m.rows, {(i,): m.column(i) for i in range(m.cols)})


def bracket_cochain(l: LieAlgebra) -> Cochain:
    """``ρ_l``: the bracket of ``l`` as an arity-2 cochain on ``l`` valued in ``l``."""
    return Cochain(l.dim, 2, l.dim, {(i, j): l.c[i][j] for i, j in combinations(range(l.dim), 2)})


def _value_with_first(c: Cochain, first: Sequence, rest: tuple) -> tuple:
    """``c(first, e_rest...)`` with ``rest`` a sorted basis tuple."""
    out = zeros(c.target_dim)
    for k, a in enumerate(first):
        if not a or k in rest:
            continue
        pos = sum(1 for r in rest if r < k)
        key = rest[:pos] + (k,) + rest[pos:]
        v = c._coeffs.get(key)
        if v is None:
            continue
        s = a if pos % 2 == 0 else -a
        out = vadd(out, vscale(s, v))
    return out


def ce_differential(c: Cochain, m: ModuleStructure) -> Cochain:
    l = m.algebra
    if c.source_dim != l.dim or c.target_dim != m.space_dim:
        raise DimensionError("cochain does not live on this module's algebra and space")
    n = c.arity + 1
    out = {}
    for J in combinations(range(l.dim), n):
        acc = zeros(m.space_dim)
        for s in range(n):
            rest = J[:s] + J[s + 1:]
            v = c._coeffs.get(rest)
            if v is None:
                continue
            w = m.action[J[s]].apply(v)
            # (-1)^s with 1-based s
            acc = vadd(acc, w if s % 2 == 1 else vscale(-1, w))
        for i, j in combinations(range(n), 2):
            br = l.c[J[i]][J[j]]
            if is_zero(br):
                continue
            rest = tuple(x for t, x in enumerate(J) if t != i and t != j)
            w = _value_with_first(c, br, rest)
            # (-1)^{i+j+1} with 1-based i, j
            acc = vadd(acc, w if (i + j + 1) % 2 == 0 else vscale(-1, w))
        out[J] = acc
    return Cochain(l.dim, n, m.space_dim, out)


def _unshuffle_sign(positions: tuple) -> int:
    return -1 if sum(p - k for k, p in enumerate(positions)) % 2 else 1


def nr_insertion(P: Cochain, Q: Cochain) -> Cochain:
    """``i_P Q(x_1..x_{a+b-1}) = Σ_σ sign(σ) Q(P(x_σ(1..a)), x_σ(a+1..))`` over (a, b-1)-unshuffles."""
    N = P.source_dim
    if P.target_dim != N or Q.source_dim != N:
        raise DimensionError("P must map the common source to itself to be inserted into Q")
    a, b = P.arity, Q.arity
    if b == 0:
        if a == 0:
            raise ValueError("insertion of a constant into a constant has arity -1")
        return Cochain.zero(N, a - 1, Q.target_dim)
    r = a + b - 1
    out = {}
    for J in combinations(range(N), r):
        acc = zeros(Q.target_dim)
        for S in combinations(range(r), a):
            pv = P._coeffs.get(tuple(J[s] for s in S))
            if pv is None:
                continue
            rest = tuple(J[t] for t in range(r) if t not in S)
            w = _value_with_first(Q, pv, rest)
            if not is_zero(w):
                acc = vadd(acc, w if _unshuffle_sign(S) > 0 else vscale(-1, w))
        out[J] = acc
    return Cochain(N, r, Q.target_dim, out)


def nr_bracket(P: Cochain, Q: Cochain) -> Cochain:
    """``[P, Q] = i_P Q - (-1)^{pq} i_Q P`` with ``p, q`` the NR degrees."""
    if P.source_dim != P.target_dim or Q.source_dim != Q.target_dim or P.source_dim != Q.source_dim:
        raise DimensionError("NR bracket needs cochains on one space valued in that space")
    p, q = P.nr_degree, Q.nr_degree
    if P.arity == 0 and Q.arity == 0:
        raise ValueError("bracket of two constants is undefined (degree -2)")
    first = nr_insertion(P, Q)
    second = nr_insertion(Q, P)
    return first - second if (p * q) % 2 == 0 else first + second


# --- bigrading over a split source g ⊕ h -----------------------------------

def bigrade_of(indices: Sequence[int], dg: int) -> tuple[int, int]:
    m = sum(1 for i in indices if i < dg)
    return m, len(indices) - m


def embed_h_target(c: Cochain, split: SplitAlgebra) -> Cochain:
    """View an h-valued cochain on ``g⊕h`` as ``g⊕h``-valued."""
    if c.target_dim != split.dh or c.source_dim != split.dim:
        raise DimensionError("expected a cochain on g⊕h valued in h")
    pad = zeros(split.dg)
    return Cochain(split.dim, c.arity, split.dim, {k: pad + v for k, v in c.items()})


def restrict_h_target(c: Cochain, split: SplitAlgebra) -> Cochain:
    """Inverse of :func:`embed_h_target`; refuses values with a g-component."""
    if c.target_dim != split.dim or c.source_dim != split.dim:
        raise DimensionError("expected a cochain on g⊕h valued in g⊕h")
    out = {}
    for k, v in c.items():
        if not is_zero(v[:split.dg]):
            raise ValueError(f"value at {k} has a nonzero g-component")
        out[k] = v[split.dg:]
    return Cochain(split.dim, c.arity, split.dh, out)


def embed_g_cochain(c: Cochain, split: SplitAlgebra) -> Cochain:
    """Extend ``c ∈ C^n(g, h)`` by zero to a ``C^{n,0}`` cochain on ``g⊕h``.

    With g-indices first, a mixed index tuple is already g-before-h, so the
    identification ∧(g⊕h) ≅ ∧g ⊗ ∧h carries no extra sign.
    """
    if c.source_dim != split.dg or c.target_dim != split.dh:
        raise DimensionError("expected a cochain on g valued in h")
    return Cochain(split.dim, c.arity, split.dh, dict(c.items()))


def restrict_to_g(c: Cochain, split: SplitAlgebra) -> Cochain:
    """Restriction of an h-valued cochain on ``g⊕h`` to ``∧g``."""
    return Cochain(split.dg, c.arity, c.target_dim,
                   {k: v for k, v in c.items() if all(i < split.dg for i in k)})


@dataclass(frozen=True, eq=False)
class BigradedCochain:
    """Components ``C^{m,n}`` (m ≥ 1) of an h-valued cochain on ``g⊕h``.

    ``outside`` holds the m = 0 column, which is not part of ``C_>``.
    """

    split: SplitAlgebra
    arity: int
    components: dict
    outside: Optional[Cochain] = None

    def reassemble(self) -> Cochain:
        out = Cochain.zero(self.split.dim, self.arity, self.split.dh)
        for c in self.components.values():
            out = out + c
        if self.outside is not None:
            out = out + self.outside
        return out

    @property
    def bigrades(self) -> list:
        return sorted(self.components)


def bigrade_decompose(c: Cochain, split: SplitAlgebra) -> BigradedCochain:
    if c.source_dim != split.dim:
        raise DimensionError("cochain source is not the split sum")
    if c.target_dim != split.dh:
        raise DimensionError("cochain target is not the h-block")
    parts: dict = {}
    for k, v in c.items():
        parts.setdefault(bigrade_of(k, split.dg), {})[k] = v
    comps = {mn: Cochain(split.dim, c.arity, split.dh, d) for mn, d in parts.items() if mn[0] >= 1}
    outside = None
    if (0, c.arity) in parts:
        outside = Cochain(split.dim, c.arity, split.dh, parts[(0, c.arity)])
    return BigradedCochain(split, c.arity, comps, outside)


def component(c: Cochain, split: SplitAlgebra, m: int, n: int) -> Cochain:
    """The (m, n) part of ``c`` (zero if absent)."""
    return Cochain(c.source_dim, c.arity, c.target_dim,
                   {k: v for k, v in c.items() if bigrade_of(k, split.dg) == (m, n)})
