from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedtraces import modforms
from gradedtraces.errors import InsufficientPrecision, InvalidPivot, NotMember, UnsupportedCharge
from gradedtraces.modforms import (
    classical_dim,
    cusp_space,
    decompose,
    delta_module_closure,
    graded_trace_space,
    membership,
    mk_space,
    monomial_coordinates,
    p_space,
    serre_delta,
    sturm,
)
from gradedtraces.qseries import QSeries, delta, eisenstein, eta_pow, jfunction, one

E4 = lambda p: eisenstein(4, p) * 720  # noqa: E731
E6 = lambda p: eisenstein(6, p) * -30240  # noqa: E731


@pytest.mark.parametrize("k", range(0, 101, 2))
def test_dimensions_match_classical_formula(k):
    assert mk_space(k, 12).dim == classical_dim(k)
    assert cusp_space(k, 12).dim == max(classical_dim(k) - (1 if k != 2 else 0), 0)


def test_odd_and_negative_weights_are_empty():
    assert mk_space(7).dim == 0 and mk_space(-4).dim == 0


def test_sturm():
    assert [sturm(k) for k in (4, 12, 24, 100)] == [2, 3, 4, 10]


def test_echelon_pivots_are_distinct_exponents():
    sp = mk_space(48, 20)
    assert list(sp.pivots) == list(range(sp.dim))


def test_membership_of_products():
    f = E4(30) * delta(30)
    coords = membership(f, 16)
    assert len(coords) == 2
    assert membership(f, 16, cusp=True) == [1]


def test_non_member_reports_first_bad_exponent():
    f = E4(20) + QSeries(0, (0, 0, 0, 0, 1) + (0,) * 15)
    with pytest.raises(NotMember) as exc:
        membership(f, 4)
    assert exc.value.index == 4


def test_membership_needs_sturm_coefficients():
    with pytest.raises(InsufficientPrecision):
        membership(E4(3), 36)


def test_pole_is_not_member():
    with pytest.raises(NotMember):
        membership(jfunction(10), 0)


def test_delta_monomial_coordinates():
    # Delta = (E4^3 - E6^2)/1728 in the G4, G6 normalization
    coords = monomial_coordinates(delta(10), 12)
    assert coords == {(3, 0): 216000, (0, 2): -529200}


@given(st.integers(0, 40).map(lambda x: 2 * x), st.integers(2, 5))
@settings(max_examples=20, deadline=None)
def test_serre_derivative_raises_weight(k, extra):
    prec = sturm(k + 2) + extra
    for b in mk_space(k, prec).basis:
        assert modforms.is_member(serre_delta(b, k), k + 2)


def test_serre_derivative_identities():
    assert serre_delta(eisenstein(4, 50), 4) == eisenstein(6, 50) * 14
    assert serre_delta(delta(50), 12).is_zero()
    # delta_6 E6 = -E4^2/2 in the E normalization
    assert serre_delta(E6(30), 6) == E4(30) * E4(30) * F(-1, 2)


@given(st.integers(1, 4), st.integers(1, 4))
@settings(max_examples=10, deadline=None)
def test_serre_derivative_leibniz(a, b):
    f, g = E4(20) ** a, E6(20) ** b
    k, l = 4 * a, 6 * b
    assert serre_delta(f * g, k + l).agrees(serre_delta(f, k) * g + f * serre_delta(g, l))


def test_closure_from_g4():
    res = delta_module_closure([(eisenstein(4, 60), 4)], 40)
    for k in range(4, 41, 2):
        assert res.dims.get(k, 0) == mk_space(k).dim


def test_closure_from_delta():
    res = delta_module_closure([(delta(60), 12)], 40)
    for k in range(12, 41, 2):
        assert res.dims.get(k, 0) == cusp_space(k).dim
    assert 10 not in res.dims


def test_closure_from_one_is_everything():
    res = delta_module_closure([(one(40), 0)], 24, prec=40)
    assert all(res.dims.get(k, 0) == mk_space(k, 40).dim for k in range(0, 25, 2))


def test_cusp_generators():
    assert cusp_space(10).dim == 0 and cusp_space(14).dim == 0
    assert cusp_space(12, 20).basis[0].agrees(delta(20))
    assert cusp_space(16, 20).basis[0].agrees(delta(20) * E4(20))


def test_decompose():
    f = E4(20) * E4(20) * E4(20) * 5 + delta(20) * 7
    lam, rest = decompose(f, 12, E4(20) ** 3)
    assert lam == 5 and rest.agrees(delta(20) * 7)


def test_decompose_rejects_cusp_pivot():
    with pytest.raises(InvalidPivot):
        decompose(delta(20), 12, delta(20))


@pytest.mark.parametrize("c", [8, 16, 24])
def test_p_space_roundtrip(c):
    sp = p_space(c, 4, 20)
    assert sp.dim == mk_space(4 + c // 2).dim
    for b in sp.basis:
        assert b.offset24 >= -c
        modforms.membership(b * eta_pow(c, 20), 4 + c // 2)


def test_p_space_charge():
    with pytest.raises(UnsupportedCharge):
        p_space(12, 0)


def test_graded_trace_space_c24():
    slots = graded_trace_space(24, 4, 10, dim_v1=24)
    assert [s.weight for s in slots] == [0, 2, 4]
    assert slots[0].basis == (jfunction(10) + 24,)
    assert len(slots[1].basis) == mk_space(14).dim
    assert len(slots[2].basis) == mk_space(16).dim


def test_graded_trace_space_c8():
    slots = graded_trace_space(8, 0, 10)
    # E4 / eta^8 is the character of the E8 lattice theory
    (b,) = slots[0].basis
    assert b.agrees(E4(10) * eta_pow(-8, 10))
    assert b[F(2, 3)] == 248


def test_graded_trace_space_needs_dim_v1():
    with pytest.raises(ValueError):
        graded_trace_space(24, 2)


def test_graded_trace_slot_dimensions():
    c8 = {s.weight: len(s.basis) for s in graded_trace_space(8, 8, 10)}
    assert [c8[w] for w in (4, 6, 8)] == [1, 1, 2]
    c16 = {s.weight: len(s.basis) for s in graded_trace_space(16, 4, 10)}
    assert c16[4] == 2
