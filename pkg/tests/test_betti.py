"""Closed forms, Newstead data, the three framed-betti paths and per-genus reports."""

import pytest
from hypothesis import given, strategies as st

from algebra import betti
from algebra.munoz import CheckPreconditionError
from algebra.polyalg import ONE_PLUS_T3, PoincarePoly

FRAMED_ROWS = [
    (1, 0, 1, 2), (2, 2, 6, 16), (3, 29, 15, 88), (4, 131, 83, 428),
    (5, 409, 575, 1968), (6, 1902, 2486, 8776), (7, 10646, 8554, 38400), (8, 45275, 37659, 165868),
]
CRITICAL_ROWS = [
    (1, 0, 2, 4), (2, 2, 10, 24), (3, 44, 16, 120), (4, 188, 92, 560),
    (5, 464, 796, 2520), (6, 2188, 3356, 11088), (7, 14104, 9920, 48048), (8, 59096, 43864, 205920),
]


def test_binomial_conventions():
    assert betti.binomial(5, -1) == 0
    assert betti.binomial(3, 5) == 0
    assert betti.binomial(-2, 0) == 0
    assert betti.binomial(10, 5) == 252
    assert betti.binomial.check_pascal()


def test_s_func_examples():
    assert betti.s_func(1, 3) == 6
    assert betti.s_func(0, 3) == 1
    assert betti.s_func(0, 5) == 211


@given(st.integers(min_value=0, max_value=12).map(lambda n: 2 * n + 1))
def test_s_identity_odd_genus(g):
    assert betti.s_func(0, g) + betti.s_func(2, g) == 2 ** (2 * g - 2)


@given(st.integers(min_value=1, max_value=12).map(lambda n: 2 * n))
def test_s_sum_even_genus_drops_the_middle_binomial(g):
    assert betti.s_func(0, g) + betti.s_func(2, g) == betti.even_residue_sum(g)
    assert betti.s_func(0, g) + betti.s_func(2, g) != 2 ** (2 * g - 2)


def test_s_sum_small_even_genus():
    assert betti.s_func(0, 2) + betti.s_func(2, 2) == 1
    assert betti.s_func(0, 4) + betti.s_func(2, 4) == 1 + 28
    assert betti.even_residue_sum(4) == 29


def test_lambda0_dims():
    assert [betti.lambda0_dim(2, k) for k in range(3)] == [1, 4, 5]


def test_poincare_of_moduli_space():
    assert betti.poincare_Ng(1) == [1]
    assert betti.poincare_Ng(2) == [1, 0, 1, 4, 1, 0, 1]
    for g in range(2, 7):
        coefficients = betti.poincare_Ng(g)
        assert len(coefficients) == 6 * g - 5
        assert sum((-1) ** i * c for i, c in enumerate(coefficients)) == 0
    with pytest.raises(ValueError):
        betti.poincare_Ng(0)


def test_newstead_small_genus():
    assert betti.newstead_h(1) == [1, 0, 0, 1]
    assert betti.newstead_h(2) == [1, 0, 1, 4, 0, 0, 4, 1, 0, 1]
    assert sum(betti.newstead_h(2)) == 12


@given(st.integers(min_value=1, max_value=12))
def test_newstead_symmetry_and_total(g):
    h = betti.newstead_h(g)
    assert len(h) == 6 * g - 2
    assert h == h[::-1]
    assert sum(h) == g * betti.binomial(2 * g, g)


@pytest.mark.parametrize("g, low, high, total", CRITICAL_ROWS)
def test_critical_table(g, low, high, total):
    n = betti.critical_betti(g)
    assert n.relabel(g % 2) == (low, low, high, high)
    assert n.total == total
    assert betti.critical_betti_from_kernels(g) == n


@pytest.mark.parametrize("g, low, high, total", FRAMED_ROWS)
def test_framed_table_closed_form(g, low, high, total):
    closed = betti.framed_betti_closed_form(g)
    assert closed.total.relabel(g % 2) == (low, low, high, high)
    assert closed.total.total == total == betti.framed_total_closed_form(g)
    assert all(closed.consistency().values())
    assert betti.REFERENCE_FRAMED_BETTI[g] == (low, high)


def test_plus_part_is_flat():
    assert betti.framed_betti_closed_form(2).plus == PoincarePoly((1, 1, 1, 1))
    for g in range(1, 9):
        plus = betti.framed_betti_closed_form(g).plus
        assert len(set(plus)) == 1


def test_kernel_numbers_at_genus_one():
    kernel_plus, kernel_minus = betti.kernel_betti_closed_form(1)
    assert kernel_minus == PoincarePoly((1, 0, 0, 0))
    assert kernel_plus == PoincarePoly()


@pytest.mark.parametrize("g", range(1, 11))
def test_total_dimension_and_euler_characteristic(g):
    framed = betti.framed_betti_closed_form(g).total
    assert framed.total == 2 * (g + 1) * betti.binomial(2 * g, g) - 2 ** g * (1 + 2 ** g)
    assert framed.euler_characteristic == 0


@pytest.mark.parametrize("g", range(1, 9))
def test_rank_inequality(g):
    framed = betti.framed_betti_closed_form(g).total
    critical = betti.critical_betti(g)
    assert all(n >= b for n, b in zip(critical, framed))


def test_closed_form_signed_poincare():
    assert betti.closed_form_poincare_jminus(4) == PoincarePoly((3, 0, 3, 0))
    assert betti.closed_form_poincare_jplus(3) == PoincarePoly((2, 0, 2, 0))
    assert betti.closed_form_poincare_jplus(5) == PoincarePoly((5, 0, 4, 0))
    assert betti.closed_form_poincare_jplus(0) == PoincarePoly()


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_assembly_from_groebner_kernels(g):
    closed = betti.framed_betti_closed_form(g)
    assert betti.framed_poincare_assembly(g) == closed.total
    assert betti.framed_poincare_assembly(g, 1) == closed.plus
    assert betti.framed_poincare_assembly(g, -1) == closed.minus


def test_assembly_genus_one_row():
    assert betti.framed_poincare_assembly(1).relabel(1) == (0, 0, 1, 1)


@pytest.mark.parametrize("g", range(1, 11))
def test_assembly_from_closed_form_kernels(g):
    closed = betti.framed_betti_closed_form(g)
    assert betti.framed_poincare_assembly(g, "both", betti.closed_form_kernel_source) == closed.total


@pytest.mark.parametrize("g", [1, 2])
def test_linear_algebra_cone(g):
    assert betti.linear_algebra_cone(g) == betti.framed_betti_closed_form(g).total


@pytest.mark.slow
@pytest.mark.parametrize("g", [3, 4, 5])
def test_linear_algebra_cone_by_sign(g):
    closed = betti.framed_betti_closed_form(g)
    assert betti.linear_algebra_cone(g) == closed.total
    assert betti.linear_algebra_cone(g, 1) == closed.plus
    assert betti.linear_algebra_cone(g, -1) == closed.minus


@pytest.mark.parametrize("g", range(1, 6))
def test_classical_assembly_recovers_newstead(g):
    assert betti.classical_assembly(g) == betti.mod4_collapse(betti.newstead_h(g))


def test_invariant_dims():
    assert betti.invariant_framed_dims(2).total == 8
    assert betti.invariant_framed_dims(1).total == 2
    three = betti.invariant_framed_dims(3)
    assert three.minus == PoincarePoly((2, 0, 2, 0)) * ONE_PLUS_T3 == PoincarePoly((2, 2, 2, 2))


@pytest.mark.parametrize("g", range(1, 9))
def test_invariant_parts_sum_to_closed_form(g):
    dims = betti.invariant_framed_dims(g)
    assert dims.plus.total + dims.minus.total == dims.total
    assert dims.plus == betti.invariant_poincare_closed_form(g, 1)
    assert dims.minus == betti.invariant_poincare_closed_form(g, -1)


def test_genus_report_all_paths():
    report = betti.build_genus_report(2)
    assert report.agreement
    assert report.framed_row() == (2, 6)
    assert report.critical_row() == (2, 10)
    assert report.nilpotency == report.nilpotency_expected == 1
    assert report.provenance["framed_betti"] == ["closed_form", "assembly", "linear_algebra"]
    assert report.ideal_degrees["Jminus"] == 2
    assert report.invariant_total == 8
    assert "P_t(K_0) = 0" in report.kernel_zero_convention


def test_genus_reports_are_sorted():
    reports = betti.build_genus_reports([3, 1, 2], paths=("closed_form",), nilpotency=False)
    assert [r.genus for r in reports] == [1, 2, 3]
    assert reports[0].invariant_plus is None


def test_genus_report_rejects_unknown_path():
    with pytest.raises(ValueError):
        betti.build_genus_report(1, paths=("guesswork",))


def test_betti_check_suites():
    assert betti.check_table_reproduction(8).passed
    assert betti.check_s_identity(12).passed
    for g in range(1, 11):
        report = betti.check_betti_identities(g)
        assert report.passed, report.failures
    assert betti.check_three_paths(2).passed
    assert betti.check_classical_assembly(3).passed
    assert betti.check_nilpotency(2).passed


def test_table_reproduction_range():
    with pytest.raises(CheckPreconditionError):
        betti.check_table_reproduction(9)


@pytest.mark.slow
@pytest.mark.parametrize("g", [3, 4, 5])
def test_three_paths_upper_genus(g):
    report = betti.check_three_paths(g)
    assert report.passed, report.failures
