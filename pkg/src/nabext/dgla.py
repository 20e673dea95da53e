"""The dg Lie algebra ``L = C_>(g⊕h, h)``: differential, bracket, MC defect, gauge action.

Elements of L are h-valued cochains on ``g⊕h`` that vanish on pure-h
arguments.  The bracket is the Nijenhuis-Richardson bracket computed after
viewing h-valued cochains as ``g⊕h``-valued, and the differential is
``d = [ρ_g + ρ_h, ·]``.

A gauge parameter β : g -> h is the arity-1 element of bigrade (1, 0).  Since
``[β, C^{m,n}] ⊂ C^{m+1,n-1}``, every ``exp(ad β)`` is a finite sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from .cochains import (
    Cochain, bigrade_decompose, bigrade_of, bracket_cochain, embed_h_target,
    nr_bracket, restrict_h_target,
)
from .exactla import DimensionError
from .lie import LieAlgebra, LinearMap, SplitAlgebra, direct_sum


class ForeignContextError(ValueError):
    pass


class NotMaurerCartanError(ValueError):
    pass


class DegreeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class DgLaContext:
    split: SplitAlgebra
    rho_g: Cochain
    rho_h: Cochain

    @property
    def rho(self) -> Cochain:
        return self.rho_g + self.rho_h

    def element(self, c: Cochain) -> "LElement":
        return LElement(self, c)

    def zero(self, degree: int) -> "LElement":
        return LElement(self, Cochain.zero(self.split.dim, degree + 1, self.split.dh))

    def bracket(self, a: "LElement", b: "LElement") -> "LElement":
        self._own(a)
        self._own(b)
        s = self.split
        c = nr_bracket(embed_h_target(a.cochain, s), embed_h_target(b.cochain, s))
        return LElement(self, restrict_h_target(c, s))

    def _own(self, x: "LElement") -> None:
        if x.ctx is not self:
            raise ForeignContextError("element belongs to a different context")


class LElement:
    """Homogeneous element of L: an h-valued cochain on ``g⊕h`` with no pure-h part."""

    __slots__ = ("ctx", "cochain")

    def __init__(self, ctx: DgLaContext, cochain: Cochain):
        s = ctx.split
        if cochain.source_dim != s.dim or cochain.target_dim != s.dh:
            raise DimensionError("L-element must be an h-valued cochain on g⊕h")
        for k, _ in cochain.items():
            if bigrade_of(k, s.dg)[0] == 0:
                raise ValueError(f"coefficient at {k} has no g-argument; not in C_>")
        self.ctx = ctx
        self.cochain = cochain

    @property
    def degree(self) -> int:
        return self.cochain.arity - 1

    def components(self):
        return bigrade_decompose(self.cochain, self.ctx.split).components

    def is_zero(self) -> bool:
        return self.cochain.is_zero()

    def _wrap(self, c: Cochain) -> "LElement":
        return LElement(self.ctx, c)

    def __add__(self, other: "LElement") -> "LElement":
        self.ctx._own(other)
        return self._wrap(self.cochain + other.cochain)

    def __sub__(self, other: "LElement") -> "LElement":
        self.ctx._own(other)
        return self._wrap(self.cochain - other.cochain)

    def __neg__(self) -> "LElement":
        return self._wrap(-self.cochain)

    def scale(self, s) -> "LElement":
        return self._wrap(self.cochain.scale(s))

    def __rmul__(self, s) -> "LElement":
        return self.scale(s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LElement):
            return NotImplemented
        return self.ctx is other.ctx and self.cochain == other.cochain

    def __hash__(self):
        return hash(self.cochain)

    def __repr__(self) -> str:
        return f"LElement(degree={self.degree}, bigrades={sorted(self.components())})"


@dataclass(frozen=True)
class GaugeElement:
    beta: LinearMap  # g -> h

    @classmethod
    def zero(cls, dg: int, dh: int) -> "GaugeElement":
        return cls(LinearMap.zero(dg, dh))

    def __neg__(self) -> "GaugeElement":
        return GaugeElement(-self.beta)

    def __add__(self, other: "GaugeElement") -> "GaugeElement":
        return GaugeElement(self.beta + other.beta)


def build_context(g: LieAlgebra, h: LieAlgebra) -> DgLaContext:
    split = direct_sum(g, h)
    N = split.dim
    rho_e = bracket_cochain(split.sum)
    rg = {k: v for k, v in rho_e.items() if all(i < split.dg for i in k)}
    rh = {k: v for k, v in rho_e.items() if all(i >= split.dg for i in k)}
    return DgLaContext(split, Cochain(N, 2, N, rg), Cochain(N, 2, N, rh))


def gauge_to_element(ctx: DgLaContext, beta: GaugeElement) -> LElement:
    s = ctx.split
    b = beta.beta
    if (b.source_dim, b.target_dim) != (s.dg, s.dh):
        raise DimensionError(f"gauge map must be {s.dg} -> {s.dh}")
    return LElement(ctx, Cochain(s.dim, 1, s.dh, {(i,): b.image(i) for i in range(s.dg)}))


def element_to_gauge(x: LElement) -> GaugeElement:
    if x.degree != 0:
        raise DegreeError("gauge parameters live in degree 0")
    s = x.ctx.split
    return GaugeElement(LinearMap.from_images([x.cochain.value((i,)) for i in range(s.dg)], s.dh))


def differential(ctx: DgLaContext, x: LElement) -> LElement:
    ctx._own(x)
    s = ctx.split
    c = nr_bracket(ctx.rho, embed_h_target(x.cochain, s))
    return LElement(ctx, restrict_h_target(c, s))


def mc_defect(ctx: DgLaContext, alpha: LElement) -> LElement:
    """``dα + ½[α, α]``."""
    if alpha.degree != 1:
        raise DegreeError(f"MC elements have degree 1, got {alpha.degree}")
    return differential(ctx, alpha) + ctx.bracket(alpha, alpha).scale(Fraction(1, 2))


def is_mc(ctx: DgLaContext, alpha: LElement) -> bool:
    return mc_defect(ctx, alpha).is_zero()


def _ad_power_cap(ctx: DgLaContext, x: LElement) -> int:
    # ad_β lowers the h-count by one, so at most (max h-count + 1) nonzero terms
    return max((n for (_, n) in x.components()), default=0) + 1


def exp_ad(ctx: DgLaContext, beta: GaugeElement, x: LElement) -> LElement:
    """``Σ_k ad_β^k(x) / k!`` -- a finite sum on L."""
    ctx._own(x)
    b = gauge_to_element(ctx, beta)
    cap = _ad_power_cap(ctx, x)
    total = x
    term = x
    k = 0
    while True:
        term = ctx.bracket(b, term)
        k += 1
        if term.is_zero():
            return total
        if k > cap:
            raise AssertionError(f"ad_β failed to be nilpotent within {cap} steps")
        total = total + term.scale(Fraction(1, factorial(k)))


def gauge_g(ctx: DgLaContext, beta: GaugeElement) -> LElement:
    """``g_β = -Σ_{n≥0} ad_β^n(dβ) / (n+1)!``; only n = 0, 1 survive on L."""
    b = gauge_to_element(ctx, beta)
    db = differential(ctx, b)
    total = -db
    term = db
    n = 0
    cap = _ad_power_cap(ctx, db)
    while True:
        term = ctx.bracket(b, term)
        n += 1
        if term.is_zero():
            return total
        if n > cap:
            raise AssertionError(f"ad_β failed to be nilpotent within {cap} steps")
        total = total - term.scale(Fraction(1, factorial(n + 1)))


def gauge_act(ctx: DgLaContext, beta: GaugeElement, alpha: LElement) -> LElement:
    """``e^{ad β} α + g_β``."""
    if alpha.degree != 1:
        raise DegreeError(f"gauge action is on degree 1, got {alpha.degree}")
    return exp_ad(ctx, beta, alpha) + gauge_g(ctx, beta)


def twist(ctx: DgLaContext, alpha: LElement) -> Callable[[LElement], LElement]:
    """Twisted differential ``u ↦ du + [α, u]``; α must be Maurer-Cartan."""
    ctx._own(alpha)
    if alpha.degree != 1 or not is_mc(ctx, alpha):
        raise NotMaurerCartanError("twisting requires a Maurer-Cartan element")

    def d_alpha(u: LElement) -> LElement:
        return differential(ctx, u) + ctx.bracket(alpha, u)

    return d_alpha
