# -*- coding: utf-8 -*-
import math
from fractions import Fraction
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from modules.errors import BudgetExhausted, Infeasible, TooLarge
from modules.patterns import IntRange, PatternFamily, ScaleRange, parse_family
from modules.solver import (
    Budget, CoverProblem, CoverSolution, Demand, KatzTaoReport, Quantity, SumsetGraphInstance, Windows,
    brute_force_oracle, exponent_curve, harmonic_mean_family, infer_harmonic_mean, lower_bound_instance, make_problem,
    solve_min_cover, verify_katz_tao, window_sweep, within_sumset_bound
)

ORACLE_WINDOWS = Windows(ScaleRange(-4, 4), IntRange(-8, 8), IntRange(-8, 8))


def every_basepoint_problem() -> CoverProblem:
    return CoverProblem(PatternFamily.of([1, 2]), Demand.every_basepoint([1, 2]), ScaleRange(1, 10, positive=True))


def test_two_basepoints_need_three_points():
    solution = solve_min_cover(every_basepoint_problem())
    assert solution.size == 3
    assert solution.certified_optimal
    assert solution.verify()
    assert set(solution.witnesses) == {1, 2}


def test_oracle_agrees_on_two_basepoints():
    assert brute_force_oracle(every_basepoint_problem()).size == 3


def test_five_counted_basepoints_need_three_points():
    problem = make_problem(Quantity.G_PRIME, PatternFamily.of([1, 2]), 5, ORACLE_WINDOWS)
    solution = solve_min_cover(problem)
    oracle = brute_force_oracle(problem)
    assert solution.size == oracle.size == 3
    assert oracle.certified_optimal and oracle.engine == "oracle"
    assert len(solution.witnesses) >= 5


def test_singleton_family_counted_basepoints():
    problem = make_problem(Quantity.G_PRIME, PatternFamily.of([1]), 5, Windows(ScaleRange(-10, 10), IntRange(0, 6)))
    assert solve_min_cover(problem).size == 1


def test_field_cover_of_every_basepoint():
    solution = solve_min_cover(make_problem(Quantity.G_FIELD, PatternFamily.of([1, 2]), 5))
    assert solution.size == 4
    assert solution.verify()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_field_singleton_family_needs_two_points(p):
    assert solve_min_cover(make_problem(Quantity.G_FIELD, PatternFamily.of([1]), p)).size == 2


def test_single_difference_needs_a_two_term_progression():
    problem = make_problem(Quantity.F_PRIME, PatternFamily.of([1, 2]), 1, Windows(ScaleRange(1, 3), IntRange(0, 4)))
    solution = solve_min_cover(problem)
    assert solution.size == 2
    assert solution.verify()


def test_infeasible_windows():
    problem = make_problem(Quantity.G, PatternFamily.of([1, 2]), 3,
                           Windows(ScaleRange(1, 2, positive=True), None, IntRange(0, 3)))
    with pytest.raises(Infeasible):
        solve_min_cover(problem)


def test_oracle_refuses_large_universes():
    windows = Windows(ScaleRange(-10, 10), IntRange(-10, 10))
    problem = make_problem(Quantity.G_PRIME, PatternFamily.of([1, 2]), 5, windows)
    with pytest.raises(TooLarge):
        brute_force_oracle(problem)


def test_budget_exhaustion_keeps_the_incumbent():
    problem = make_problem(Quantity.G, PatternFamily.of([1, 2]), 6, Windows(ScaleRange(1, 10, positive=True)))
    relaxed = solve_min_cover(problem, Budget(nodes=1))
    assert not relaxed.certified_optimal
    assert relaxed.verify()
    with pytest.raises(BudgetExhausted) as caught:
        solve_min_cover(problem, Budget(nodes=1, strict=True))
    assert caught.value.incumbent is not None
    assert caught.value.incumbent.verify()


def test_problem_and_solution_reload():
    problem = make_problem(Quantity.G_PRIME, PatternFamily.of([1, 2]), 5, ORACLE_WINDOWS)
    again = CoverProblem.load(problem.dump())
    assert again == problem
    assert again.digest() == problem.digest()
    solution = solve_min_cover(problem)
    reloaded = CoverSolution.load(again, solution.dump())
    assert reloaded.verify()
    assert reloaded.size == solution.size


small_families = st.lists(st.integers(-4, 4).filter(bool), min_size=1, max_size=3, unique=True)
demands = st.one_of(
    st.lists(st.integers(-3, 3), min_size=1, max_size=3).map(Demand.every_basepoint),
    st.integers(1, 4).map(Demand.count_basepoints),
    st.lists(st.integers(1, 3), min_size=1, max_size=2).map(Demand.every_difference),
    st.integers(1, 3).map(Demand.count_differences),
)


@settings(max_examples=200, deadline=None)
@given(elements=small_families, demand=demands, radius=st.integers(1, 3), low=st.integers(-6, 0),
       width=st.integers(3, 11))
def test_solver_matches_oracle_on_random_windows(elements, demand, radius, low, width):
    # at most 12 points in the window, so the oracle stays well under its cap
    problem = CoverProblem(PatternFamily.of(elements), demand, ScaleRange(-radius, radius),
                           IntRange(-3, 3), IntRange(low, low + width))
    try:
        solved = solve_min_cover(problem)
    except Infeasible:
        with pytest.raises(Infeasible):
            brute_force_oracle(problem)
        return
    oracle = brute_force_oracle(problem)
    assert solved.verify() and oracle.verify()
    assert solved.certified_optimal
    assert solved.size == oracle.size


@settings(max_examples=30, deadline=None)
@given(elements=st.sampled_from([[1], [2], [1, 2], [1, 3], [2, 3], [-1, 2]]), n=st.integers(1, 4))
def test_solver_grows_with_n(elements, n):
    family = PatternFamily.of(elements)
    windows = Windows(ScaleRange(-2, 2), IntRange(-3, 3), IntRange(-3, 3))
    sizes = []
    for count in (n, n + 1):
        problem = make_problem(Quantity.G_PRIME, family, count, windows)
        try:
            solved = solve_min_cover(problem)
        except Infeasible:
            with pytest.raises(Infeasible):
                brute_force_oracle(problem)
            return
        assert solved.verify()
        assert solved.size == brute_force_oracle(problem).size
        sizes.append(solved.size)
    assert sizes[0] <= sizes[1]


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("n", range(1, 7))
def test_harmonic_and_progression_counts_agree_up_to_k(k, n):
    # basepoints of one side are the scales of the other, so the windows are swapped
    harmonic = make_problem(Quantity.G_PRIME, parse_family(f"1/[{k}]"), n,
                            Windows(ScaleRange(1, 3, positive=True), IntRange(1, n)))
    progression = make_problem(Quantity.F_PRIME, parse_family(f"[{k}]"), n,
                               Windows(ScaleRange(1, n, positive=True), IntRange(1, 3)))
    g = solve_min_cover(harmonic)
    f = solve_min_cover(progression)
    assert g.certified_optimal and f.certified_optimal
    assert Fraction(g.size, k) <= f.size <= k * g.size


def test_sumset_bound_on_small_sets():
    report = verify_katz_tao(SumsetGraphInstance.of({0, 1}, {0, 1}))
    assert (report.n, report.diff_size, report.holds) == (3, 3, True)
    single = verify_katz_tao(SumsetGraphInstance.of({0}, {0}))
    assert (single.n, single.diff_size, single.holds) == (1, 1, True)


def test_sumset_bound_on_random_graphs():
    rng = np.random.default_rng(20240611)
    for _ in range(10_000):
        sizes = rng.integers(1, 41, size=2)
        a1 = rng.choice(np.arange(-60, 61), size=sizes[0], replace=False).tolist()
        a2 = rng.choice(np.arange(-60, 61), size=sizes[1], replace=False).tolist()
        keep = rng.random((len(a1), len(a2))) < rng.uniform(0.02, 1.0)
        keep[rng.integers(len(a1)), rng.integers(len(a2))] = True
        rows, cols = np.nonzero(keep)
        instance = SumsetGraphInstance.of(a1, a2, [(a1[i], a2[j]) for i, j in zip(rows.tolist(), cols.tolist())])
        report = verify_katz_tao(instance)
        assert report.holds
        assert report.diff_size ** 6 <= report.n ** 11


@pytest.mark.parametrize("size", [1, 7, 40])
def test_sumset_bound_on_constant_sum_graphs(size):
    # every edge has the same sum, so all the spread sits in the differences
    values = list(range(size))
    report = verify_katz_tao(SumsetGraphInstance.of(values, values, [(a, size - 1 - a) for a in values]))
    assert (report.sum_size, report.diff_size, report.n) == (1, size, size)
    assert report.holds
    assert report.dump()["bound"] == pytest.approx(size ** (11 / 6))


def test_sumset_bound_is_exact_at_the_boundary():
    # 64^(11/6) is exactly 2048, which the float display may round either way
    assert within_sumset_bound(2048, 64)
    assert not within_sumset_bound(2049, 64)
    assert KatzTaoReport(64, 1, 2048, True).bound == pytest.approx(2048)


def test_harmonic_mean_family_round_trip():
    family = harmonic_mean_family(5, 3)
    assert family.elements == (3, 5, 15)
    assert infer_harmonic_mean(family) == (5, 3)


@pytest.mark.parametrize("elements", [[3, 4, 6], [15, 3, 5]])
def test_lower_bound_holds_for_solver_covers(elements):
    family = PatternFamily.of(elements)
    problem = make_problem(Quantity.G_PRIME, family, 3, Windows(ScaleRange(1, 1, positive=True), IntRange(-6, 6)))
    solution = solve_min_cover(problem, Budget(nodes=200_000))
    report = lower_bound_instance(family, solution)
    assert report.katz_tao.holds
    assert report.bound_holds and report.chain_holds
    assert report.basepoints >= 3


def test_exponent_curve_rows():
    table = exponent_curve(Quantity.G_PRIME, PatternFamily.of([1, 2]), [2, 5], ORACLE_WINDOWS)
    assert [row.size for row in table.rows] == [2, 3]
    assert table.rows[0].exponent == pytest.approx(1.0)
    assert table.rows[1].exponent == pytest.approx(math.log(3) / math.log(5))
    assert all(row.certified for row in table.rows)
    assert table.dump()["quantity"] == "g-prime"


def test_singleton_progressions_have_exponent_zero():
    table = exponent_curve(Quantity.F_PRIME, PatternFamily.of([1]), [2, 3], Windows(ScaleRange(1, 5), IntRange(0, 3)))
    assert [row.size for row in table.rows] == [1, 1]
    assert [row.exponent for row in table.rows] == [0.0, 0.0]


def test_failing_rows_are_kept_partial():
    windows = Windows(ScaleRange(1, 1, positive=True), IntRange(0, 1))
    table = exponent_curve(Quantity.G_PRIME, PatternFamily.of([1, 2]), [1, 5], windows)
    assert table.rows[0].size is not None
    assert table.rows[1].partial and table.rows[1].size is None and table.rows[1].error


def test_window_sweep_never_grows():
    rows = window_sweep(Quantity.G_PRIME, PatternFamily.of([1, 2]), 3, [3, 2])
    assert [row.radius for row in rows] == [2, 3]
    assert rows[0].size >= rows[1].size
