import pytest
from hypothesis import given, strategies as st

from hsurf.invariants import smooth_table
from hsurf.milnor import GermSpec
from hsurf.profile import HypersurfaceProfile, IsolatedSingularity, PlaneCurve, StratumSummary
from hsurf.sequences import (
    INF,
    ExactSequenceSpec,
    SequenceError,
    alternating_sum_check,
    solve_ranks,
    specialization_instance,
)
from oracles import brute_force_intervals


def solve(text):
    return solve_ranks(ExactSequenceSpec.from_text(text))


def test_basic_intervals():
    sol = solve("0,a,7,2,b,0")
    assert sol.feasible
    assert sol.intervals == {"a": (5, 7), "b": (0, 2)}
    assert sol.satisfies({"a": 6, "b": 1})
    assert not sol.satisfies({"a": 7, "b": 0})


def test_point_and_unbounded_intervals():
    assert solve("0,x,0").intervals == {"x": (0, 0)}
    assert solve("0,3,x,3,0").intervals == {"x": (6, 6)}
    assert solve("2,x,y").intervals == {"x": (2, INF), "y": (0, INF)}
    assert solve("0,1,1,1,0").feasible is False


def test_repeated_unknown_rejected():
    with pytest.raises(SequenceError):
        ExactSequenceSpec.from_text("x,5,x")


def test_bad_input():
    with pytest.raises(SequenceError):
        ExactSequenceSpec.from_text("0,-1,2")
    with pytest.raises(SequenceError):
        ExactSequenceSpec.from_text("")
    with pytest.raises(SequenceError):
        alternating_sum_check(ExactSequenceSpec.from_text("1,a"))


def test_json_renders_infinity_as_string():
    out = solve("2,x,y").to_json()
    assert out["intervals"]["x"] == [2, "inf"]


def _named(values):
    return [f"u{j}" if v is None else v for j, v in enumerate(values)]


seqs = st.lists(st.one_of(st.integers(0, 6), st.none()), min_size=1, max_size=7).map(_named)
known = st.lists(st.integers(0, 6), min_size=1, max_size=8)


@given(seqs)
def test_reversal_invariance(values):
    seq = ExactSequenceSpec.from_values(values)
    a, b = solve_ranks(seq), solve_ranks(seq.reversed())
    assert a.feasible == b.feasible
    if a.feasible:
        assert a.intervals == b.intervals


@given(known)
def test_fully_known(values):
    seq = ExactSequenceSpec.from_values(values)
    sol = solve_ranks(seq)
    assert sol.intervals == {}
    if sol.feasible:
        assert alternating_sum_check(seq)


@given(known)
def test_odd_alternating_sum_is_infeasible(values):
    total = sum((-1) ** j * v for j, v in enumerate(values))
    if total % 2:
        assert not solve_ranks(ExactSequenceSpec.from_values(values)).feasible


@given(st.lists(st.one_of(st.integers(0, 5), st.none()), min_size=1, max_size=7).map(_named))
def test_matches_brute_force_with_caps(values):
    seq = ExactSequenceSpec.from_values(values)
    sol = solve_ranks(seq, upper={u: 8 for u in seq.unknowns})
    ref = brute_force_intervals(values, cap=8)
    assert (sol.intervals if sol.feasible else None) == ref


def _cone_profile():
    lines = tuple(StratumSummary(f"L{i}", 1, GermSpec(brieskorn=(2, 2))) for i in range(3))
    return HypersurfaceProfile(n=2, d=3, r=3, s=1, strata=lines, cone_over=PlaneCurve(3, 3, (1, 1, 1)))


def test_cone_vanishing_ranks():
    p = _cone_profile()
    seq = specialization_instance(p, smooth_table(2, 3), {0: 1, 1: 0, 2: 1, 3: 1, 4: 3})
    sol = solve_ranks(seq)
    assert sol.interval("phi2") == (7, 7)
    assert sol.interval("phi3") == (2, 2)


def test_smooth_instance_has_no_vanishing_unknowns():
    p = HypersurfaceProfile(n=3, d=3)
    seq = specialization_instance(p, smooth_table(3, 3))
    assert all(t.value == 0 for t in seq.terms if t.name.startswith("phi"))
    sol = solve_ranks(seq)
    assert sol.interval("b3(V)") == (10, 10)


def test_isolated_instance():
    nodes = tuple(IsolatedSingularity(f"p{i}", GermSpec(brieskorn=(2, 2, 2))) for i in range(4))
    p = HypersurfaceProfile(n=2, d=3, s=0, isolated=nodes)
    seq = specialization_instance(p, smooth_table(2, 3), {0: 1, 1: 0, 4: 1}, {2: 4})
    assert [t.name for t in seq.terms][:3] == ["b1(V)", "b1(V_t)", "phi1"]
    sol = solve_ranks(seq)
    lo2, hi2 = sol.interval("b2(V)")
    lo3, hi3 = sol.interval("b3(V)")
    assert (lo2, hi2) == (3, 7) and (lo3, hi3) == (0, 4)
    # rationally: b2 - b3 = 7 - 4
    assert sol.satisfies({"b2(V)": 3, "b3(V)": 0})
    assert not sol.satisfies({"b2(V)": 4, "b3(V)": 0})


def test_instance_rejects_bad_window():
    p = HypersurfaceProfile(n=2, d=3)
    with pytest.raises(SequenceError):
        specialization_instance(p, smooth_table(3, 3))
    with pytest.raises(SequenceError):
        specialization_instance(p, smooth_table(2, 3), vanishing_ranks={2: 1})
