import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hsurf.linalg import rank
from hsurf.milnor import GermSpec
from hsurf.profile import (
    CohomologyTable,
    GroupInfo,
    HypersurfaceProfile,
    IsolatedSingularity,
    NonSymmetric,
    ProfileError,
    RankOutOfRange,
    StratumSummary,
    Variant,
    quadric_profile,
    validate,
)

A1 = GermSpec(brieskorn=(2, 2, 2))


def codes(profile):
    return [v.code for v in validate(profile)]


def test_valid_profiles():
    assert codes(HypersurfaceProfile(n=3, d=3)) == []
    assert codes(HypersurfaceProfile(n=2, d=3, s=0, isolated=(IsolatedSingularity("p", A1),))) == []
    threefold = HypersurfaceProfile(
        n=3,
        d=3,
        s=1,
        strata=(StratumSummary("S1", 1, GermSpec(brieskorn=(2, 3, 3))), StratumSummary("S0", 0, GermSpec(mu=2))),
    )
    assert codes(threefold) == []
    assert threefold.strata[0].is_top and not threefold.strata[1].is_top


@pytest.mark.parametrize(
    "kwargs, code",
    [
        (dict(n=0, d=2), "n-range"),
        (dict(n=2, d=2, r=3), "r-degree"),
        (dict(n=2, d=3, s=2), "s-range"),
        (dict(n=2, d=1, s=0, isolated=(IsolatedSingularity("p", A1),)), "hyperplane-smooth"),
        (dict(n=2, d=3, s=0), "s-smooth"),
        (dict(n=2, d=3, r=3, s=0, isolated=(IsolatedSingularity("p", A1),)), "r-codim1"),
        (dict(n=2, d=3, s=0, isolated=(IsolatedSingularity("p", GermSpec(brieskorn=(2, 2))),)), "isolated-germ-vars"),
        (dict(n=2, d=3, s=1, strata=(StratumSummary("L", 1, GermSpec(brieskorn=(2, 2, 2))),)), "stratum-germ-vars"),
        (dict(n=2, d=3, s=1, strata=(StratumSummary("P", 0, GermSpec(mu=1)),)), "s-top"),
        (dict(n=2, d=3, s=0, isolated=(IsolatedSingularity("p", GermSpec(mu=0)),)), "isolated-mu"),
        (dict(n=2, d=3, r=3, s=1, strata=(StratumSummary("L", 1, GermSpec(brieskorn=(2, 2))),)), "codim1-components"),
    ],
)
def test_violations(kwargs, code):
    assert code in codes(HypersurfaceProfile(**kwargs))


def test_violations_sorted_and_unique():
    v = validate(HypersurfaceProfile(n=0, d=0, r=0, s=5))
    assert v == sorted(set(v))
    assert len(v) >= 3


def test_json_roundtrip():
    p = HypersurfaceProfile(
        n=2,
        d=3,
        r=3,
        s=1,
        strata=tuple(StratumSummary(f"L{i}", 1, GermSpec(brieskorn=(2, 2))) for i in range(3)),
    )
    data = json.loads(json.dumps(p.to_json()))
    assert HypersurfaceProfile.from_json(data) == p


@pytest.mark.parametrize("data", [{}, {"n": 2, "d": 3, "s": -1}, {"schema": 99, "n": 2, "d": 3, "s": -1}, {"schema": 1, "n": 2}])
def test_malformed_json(data):
    with pytest.raises(ProfileError):
        HypersurfaceProfile.from_json(data)


def test_table_json_roundtrip():
    t = CohomologyTable(
        Variant.COHOMOLOGY,
        (
            GroupInfo.exact(0, 1, ("lefschetz",)),
            GroupInfo.bounded(1, 0, float("inf"), ("window-step",)),
        ),
    )
    assert CohomologyTable.from_json(json.loads(json.dumps(t.to_json()))) == t


def test_group_info_rejects_unregistered_citation():
    with pytest.raises(ValueError):
        GroupInfo.exact(0, 1, ("made-up",))


def diag(n, q):
    return [[1 if i == j and i < q else 0 for j in range(n + 2)] for i in range(n + 2)]


def test_quadric_profiles():
    assert quadric_profile(3, diag(3, 5)).s == -1
    p = quadric_profile(3, diag(3, 4))
    assert (p.s, p.quadric_rank, len(p.isolated)) == (0, 4, 1)
    p = quadric_profile(4, diag(4, 4))
    assert p.s == 1 and p.top_strata[0].transversal.brieskorn == (2, 2, 2, 2)
    assert validate(p) == []
    with pytest.raises(RankOutOfRange):
        quadric_profile(4, diag(4, 3))
    with pytest.raises(NonSymmetric):
        quadric_profile(1, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])


@st.composite
def congruent_pair(draw):
    n = draw(st.integers(3, 5))
    q = draw(st.integers(4, n + 2))
    size = n + 2
    entries = st.integers(-2, 2)
    # unit lower-triangular times a permutation: always invertible
    L = [[1 if i == j else (draw(entries) if j < i else 0) for j in range(size)] for i in range(size)]
    perm = draw(st.permutations(range(size)))
    P = [L[perm[i]] for i in range(size)]
    scale = [draw(st.sampled_from([1, 2, -3, Fraction(1, 2)])) for _ in range(size)]
    D = [[scale[i] if i == j and i < q else 0 for j in range(size)] for i in range(size)]
    PT = [list(col) for col in zip(*P)]
    mul = lambda A, B: [[sum(A[i][k] * B[k][j] for k in range(size)) for j in range(size)] for i in range(size)]
    return n, q, mul(mul(PT, D), P)


@given(congruent_pair())
def test_quadric_rank_congruence_invariant(case):
    n, q, Q = case
    assert rank(Q) == q
    p = quadric_profile(n, Q)
    assert p.quadric_rank == q
    assert p.s == (-1 if q == n + 2 else n + 1 - q)
