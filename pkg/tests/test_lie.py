import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nabext import catalog
from nabext.exactla import DimensionError, Matrix
from nabext.lie import (
    InvalidAlgebraError, LieAlgebra, LinearMap, ModuleStructure, adjoint_module, center,
    change_basis, direct_sum, is_derivation, jacobiator, module_check, require_valid,
    trivial_module, validate_lie,
)

import randgen as rg


def test_catalog_algebras_validate():
    for name in ("ab1", "ab2", "ab3", "aff2", "heis3", "so3", "sl2"):
        assert validate_lie(catalog.algebra(name)).valid, name


def test_bad3_reports_triple_and_defect():
    rep = validate_lie(catalog.algebra("bad3"))
    assert not rep.valid
    (v,) = rep.violations
    assert v.rule == "jacobi" and v.indices == (0, 1, 2)
    assert v.defect == (0, 0, -1)
    assert "(e1,e2,e3)" in v.describe(["e1", "e2", "e3"])


def test_so3_jacobiator_vanishes():
    assert jacobiator(catalog.algebra("so3"), 0, 1, 2) == (0, 0, 0)


def test_from_brackets_completes_antisymmetry():
    a = LieAlgebra.from_brackets(2, {(0, 1): (0, 1)})
    assert a.bracket_basis(1, 0) == (0, -1)
    assert a.bracket_basis(0, 0) == (0, 0)


def test_direct_sums():
    assert direct_sum(catalog.algebra("ab1"), catalog.algebra("ab1")).sum == LieAlgebra.abelian(2)
    s = direct_sum(catalog.algebra("aff2"), catalog.algebra("ab1")).sum
    assert s.nonzero_brackets() == {(0, 1): (0, 1, 0)}
    s = direct_sum(catalog.algebra("so3"), catalog.algebra("aff2")).sum
    assert s.dim == 5
    for (i, j), v in s.nonzero_brackets().items():
        assert (i < 3) == (j < 3)
        assert all(x == 0 for k, x in enumerate(v) if (k < 3) != (i < 3))
    with pytest.raises(InvalidAlgebraError):
        direct_sum(catalog.algebra("bad3"), catalog.algebra("ab1"))


def test_direct_sum_associative():
    a, b, c = (catalog.algebra(n) for n in ("aff2", "so3", "heis3"))
    left = direct_sum(direct_sum(a, b).sum, c).sum
    right = direct_sum(a, direct_sum(b, c).sum).sum
    assert left.c == right.c


def test_adjoint_examples():
    assert all(m.is_zero() for m in adjoint_module(LieAlgebra.abelian(3)).action)
    act = adjoint_module(catalog.algebra("aff2")).action[0]
    assert act.apply((0, 1)) == (0, 1) and act.apply((1, 0)) == (0, 0)
    act = adjoint_module(catalog.algebra("so3")).action[0]
    assert act.apply((0, 1, 0)) == (0, 0, 1) and act.apply((0, 0, 1)) == (0, -1, 0)
    with pytest.raises(InvalidAlgebraError):
        adjoint_module(catalog.algebra("bad3"))


def test_module_check_examples():
    assert module_check(adjoint_module(catalog.algebra("so3"))).valid
    assert module_check(trivial_module(catalog.algebra("sl2"), 4)).valid
    aff2 = catalog.algebra("aff2")
    one = Matrix.identity(1)
    rep = module_check(ModuleStructure(aff2, 1, (one, one)))
    assert not rep.valid and rep.violations[0].indices == (0, 1)


def test_module_shape_error():
    with pytest.raises(DimensionError):
        ModuleStructure(catalog.algebra("aff2"), 2, (Matrix.identity(2),))


def test_center_examples():
    assert len(center(LieAlgebra.abelian(2))) == 2
    (z,) = center(catalog.algebra("heis3"))
    assert z[0] == z[1] == 0 and z[2] != 0
    assert center(catalog.algebra("sl2")) == []


def test_is_derivation_examples():
    D = LinearMap(2, 2, Matrix.from_rows([[1, 2], [3, 4]]))
    assert is_derivation(D, LieAlgebra.abelian(2))
    aff2 = catalog.algebra("aff2")
    assert is_derivation(LinearMap(2, 2, aff2.ad((1, 3))), aff2)
    assert not is_derivation(LinearMap.identity(2), aff2)
    with pytest.raises(DimensionError):
        is_derivation(LinearMap.identity(3), aff2)


def test_linear_map_basics():
    f = LinearMap.from_images([(1, 0), (1, 1), (0, 2)], 2)
    assert f((1, 1, 1)) == (2, 3)
    g = LinearMap.from_images([(1,), (-1,)], 1)
    assert g.compose(f)((1, 1, 1)) == (-1,)
    assert (f - f).matrix.is_zero()


seeds = st.integers(0, 10**6)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_adjoint_of_valid_is_module(seed):
    g = rg.random_lie(random.Random(seed))
    assert module_check(adjoint_module(g)).valid


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_change_basis_preserves_validity_and_center_dim(seed):
    R = random.Random(seed)
    a = catalog.algebra(R.choice(["aff2", "heis3", "so3", "sl2", "bad3"]))
    b = change_basis(a, rg.random_invertible(R, a.dim))
    assert validate_lie(a).valid == validate_lie(b).valid
    if validate_lie(a).valid:
        assert len(center(a)) == len(center(b))


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_center_annihilates_basis(seed):
    R = random.Random(seed)
    h = rg.random_lie(R)
    for z in center(h):
        for i in range(h.dim):
            assert all(x == 0 for x in h.bracket(z, tuple(Fraction(int(i == j)) for j in range(h.dim))))


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_inner_derivations(seed):
    R = random.Random(seed)
    h = rg.random_lie(R)
    x = rg.random_vector(R, h.dim)
    assert is_derivation(LinearMap(h.dim, h.dim, h.ad(x)), h)


def test_require_valid_names_failure():
    with pytest.raises(InvalidAlgebraError, match="jacobi"):
        require_valid(catalog.algebra("bad3"))
