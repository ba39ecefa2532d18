import pytest

from modfact.modules import (ModulePresentation, NotQuotientModule,
                             kmat_mul, kmat_identity, kmat_rank, kmat_solve,
                             kmat_nullspace, kmat_inv)
from modfact.fields import PrimeField

from common import R5x2, R5x3, RS, x_, one

xx = [0, 0, 1]


def test_cyclic_quotient_dimensions():
    m = ModulePresentation(R5x3, 1, [[x_]], abar=True)
    lin = m.linearization()
    assert lin.dim == 1
    m2 = ModulePresentation(R5x3, 1, [[xx]], abar=True)
    assert m2.linearization().dim == 2
    assert m.check_abar() and m2.check_abar()


def test_normal_form_is_a_coset_representative():
    m = ModulePresentation(R5x2, 2, [[x_, one], [[], x_]], abar=True)
    lin = m.linearization()
    # x * e0 + e1 is a relation, so its normal form vanishes
    assert lin.normal_form([x_, one]) == [[], []]
    nf = lin.normal_form([xx, []])
    assert lin.encode([xx, []]) == lin.encode(nf)
    assert lin.decode(lin.encode(nf)) == nf


def test_free_directions_are_rejected():
    free = ModulePresentation(R5x2, 1, [], abar=True)
    with pytest.raises(NotQuotientModule):
        free.linearization()
    # relation x^3 does not absorb omega = x^2 acting on the generator
    loose = ModulePresentation(R5x2, 1, [[[0, 0, 0, 1]]], abar=True)
    assert not loose.check_abar()


def test_x_matrix_represents_multiplication():
    m = ModulePresentation(R5x2, 1, [[xx]], abar=True)
    lin = m.linearization()
    xm = lin.x_matrix()
    v = [one]
    # coords(x * v) = coords(v) * X in the commutative case
    lhs = lin.encode([R5x2.mul(x_, p) for p in v])
    rhs = kmat_mul(R5x2.field, [lin.encode(v)], xm)[0]
    assert lhs == rhs


def test_presentation_json_roundtrip():
    xs = [RS.field.zero, RS.field.one]
    m = ModulePresentation(RS, 2, [[xs, [RS.field.one]], [[], xs]], abar=True)
    back = ModulePresentation.from_json(RS, m.to_json(), abar=True)
    assert back == m


def test_field_matrix_helpers():
    fld = PrimeField(5)
    m = [[1, 2], [3, 4]]
    assert kmat_rank(fld, m) == 2
    inv = kmat_inv(fld, m)
    assert kmat_mul(fld, m, inv) == kmat_identity(fld, 2)
    sing = [[1, 2], [2, 4]]
    assert kmat_rank(fld, sing) == 1
    ns = kmat_nullspace(fld, sing)
    assert len(ns) == 1
    assert kmat_mul(fld, ns, sing) == [[0, 0]]
    sol = kmat_solve(fld, m, [[1, 0]])
    assert sol is not None and kmat_mul(fld, sol, m) == [[1, 0]]
