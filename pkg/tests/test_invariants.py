import pytest
from hypothesis import given, strategies as st

from hsurf import invariants as inv
from hsurf.milnor import GermSpec
from hsurf.profile import (
    INF,
    HypersurfaceProfile,
    IsolatedSingularity,
    Kind,
    PlaneCurve,
    RankOutOfRange,
    StratumSummary,
    cpn_betti,
    quadric_profile,
)
from oracles import chern_euler, smooth_middle_betti


def threefold(**kw):
    return HypersurfaceProfile(
        n=3,
        d=3,
        s=1,
        strata=(StratumSummary("S1", 1, GermSpec(brieskorn=(2, 3, 3))), StratumSummary("S0", 0, GermSpec(mu=2))),
        **kw,
    )


def cone():
    lines = tuple(StratumSummary(f"L{i}", 1, GermSpec(brieskorn=(2, 2))) for i in range(3))
    return HypersurfaceProfile(n=2, d=3, r=3, s=1, strata=lines, cone_over=PlaneCurve(3, 3, (1, 1, 1)))


def plane_curve(d, r, germs):
    pts = tuple(IsolatedSingularity(f"p{i}", GermSpec(brieskorn=g)) for i, g in enumerate(germs))
    return HypersurfaceProfile(n=1, d=d, r=r, s=0 if pts else -1, isolated=pts)


def diag(n, q):
    return [[1 if i == j and i < q else 0 for j in range(n + 2)] for i in range(n + 2)]


# -- smooth ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "n, d, b",
    [(1, 2, 0), (1, 3, 2), (1, 4, 6), (2, 3, 7), (2, 4, 22), (3, 3, 10), (3, 5, 204), (2, 1, 1), (3, 1, 0)],
)
def test_smooth_betti_known_values(n, d, b):
    assert inv.smooth_betti(n, d) == b


def test_smooth_against_chern_class_oracle():
    for n in range(1, 11):
        for d in range(1, 21):
            assert inv.smooth_betti(n, d) == smooth_middle_betti(n, d)
            assert inv.smooth_euler(n, d) == chern_euler(n, d)


def test_divisibility_grid():
    for n in range(1, 51):
        for d in range(1, 51):
            inv.smooth_betti(n, d)  # asserts divisibility internally


def test_large_values_use_big_integers():
    assert inv.smooth_betti(8, 200) == smooth_middle_betti(8, 200)
    assert inv.smooth_betti(8, 200) > 2**63


def test_smooth_table_shape():
    t = inv.smooth_table(3, 3)
    assert t.ranks() == [1, 0, 1, 10, 1, 0, 1]
    assert t.euler() == -6
    assert all(g.known_free for g in t.rows)


# -- isolated and curves -------------------------------------------------------------


def test_euler_isolated():
    assert inv.euler_isolated(2, 3, [1, 1, 1, 1]) == 9 - 4
    assert inv.euler_isolated(1, 3, [1]) == 0 + 1


@pytest.mark.parametrize(
    "d, r, mus, expected",
    [(3, 3, [1, 1, 1], (1, 1, 3)), (3, 1, [1], (1, 1, 1)), (3, 1, [2], (1, 0, 1)), (2, 2, [1], (1, 0, 2)), (4, 1, [], (1, 6, 1))],
)
def test_curve_betti(d, r, mus, expected):
    assert inv.curve_betti(d, r, mus) == expected


def test_curve_betti_negative():
    with pytest.raises(inv.NegativeBetti):
        inv.curve_betti(3, 1, [5])


# -- ranges ------------------------------------------------------------------------


def _generic_profile(n, s):
    if s < 0:
        return HypersurfaceProfile(n=n, d=3)
    if s == 0:
        return HypersurfaceProfile(n=n, d=3, s=0, isolated=(IsolatedSingularity("p", GermSpec(brieskorn=(2,) * (n + 1))),))
    return HypersurfaceProfile(n=n, d=3, s=s, strata=(StratumSummary("S", s, GermSpec(brieskorn=(2,) * (n - s + 1))),))


@pytest.mark.parametrize("n", range(1, 9))
def test_kato_regions_partition(n):
    for s in range(-1, n):
        p = _generic_profile(n, s)
        regions = [inv.kato_classify(p, k).region for k in range(2 * n + 1)]
        assert regions == (
            [inv.Region.LEFSCHETZ] * n
            + [inv.Region.MIDDLE] * (s + 2)
            + [inv.Region.KATO] * (n - s - 1 if s <= n - 2 else 0)
        )
        for k in range(2 * n + 1):
            c = inv.kato_classify(p, k)
            if c.region is inv.Region.KATO:
                assert c.group.exact_rank == cpn_betti(n + 1, k)
                assert (c.map_description is not None) == (k % 2 == 0)


def test_kato_degree_out_of_range():
    with pytest.raises(ValueError):
        inv.kato_classify(_generic_profile(2, -1), 5)


@pytest.mark.parametrize("n", range(1, 9))
def test_vanishing_support(n):
    for s in range(-1, n):
        sup = inv.vanishing_support(_generic_profile(n, s))
        if s < 0:
            assert sup.cohomology_degrees() == [] and sup.homology_degrees() == []
        else:
            assert sup.cohomology_window == (n, n + s)
            assert sup.homology_window == (n + 1, n + s + 1)
            assert sup.cohomology_free_degree == n
            assert sup.homology_free_degree == n + s + 1


def test_vanishing_top_rank_bound():
    assert inv.vanishing_top_rank_bound(threefold()) == 4
    assert inv.vanishing_top_rank_bound(cone()) == 3
    with pytest.raises(inv.MissingTopStratum):
        inv.vanishing_top_rank_bound(HypersurfaceProfile(n=2, d=3))


@pytest.mark.parametrize(
    "n, s, r, low, high",
    [(3, -1, 1, (0, 1, 2), (4, 5)), (3, 1, 1, (0, 1, 2), ()), (4, 1, 1, (0, 1, 2, 3), (7,)), (2, 1, 3, (0, 1), ())],
)
def test_lefschetz_supplement_examples(n, s, r, low, high):
    rep = inv.lefschetz_supplement(n, s, r)
    assert rep.zero_low == low and rep.zero_high == high and rep.top_rank == r and rep.middle_free


def test_lefschetz_supplement_sweep():
    for n in range(1, 9):
        for s in range(-1, n):
            rep = inv.lefschetz_supplement(n, s, 1)
            zero = set(rep.zero_degrees)
            for k in range(2 * n + 1):
                assert (k in zero) == (k < n or n + s + 1 < k < 2 * n)
    with pytest.raises(ValueError):
        inv.lefschetz_supplement(2, 2, 1)


# -- bounds ------------------------------------------------------------------------


def test_threefold_bounds():
    t = inv.betti_bounds_table(threefold())
    assert (t[3].rank_lo, t[3].rank_hi) == (0, 10)
    assert t[5].stated_bound == 5
    assert t[5].rank_hi == 4  # strict inequality since n + s = 4 is even
    assert t[4].rank_hi == INF
    assert t[6].exact_rank == 1 and t[6].known_free
    assert [t[k].exact_rank for k in range(3)] == [1, 0, 1]


def test_top_degree_bound_parity():
    assert inv.top_degree_bound(3, 1, 4) == (5, 4)
    assert inv.top_degree_bound(3, 0, 4) == (5, 5)


def test_codim1_row():
    t = inv.betti_bounds_table(cone())
    assert t[4].exact_rank == 3 and t[4].stated_bound == 4
    assert (t[2].rank_lo, t[2].rank_hi) == (1, 7)


@pytest.mark.parametrize("n", range(3, 9))
def test_quadric_even_rank_bound(n):
    for q in range(4, n + 2, 2):
        s = n + 1 - q
        t = inv.betti_bounds_table(quadric_profile(n, diag(n, q)))
        assert t[n + s + 1].rank_hi == 2
        assert t[n + s + 1].stated_bound == 2


def test_isolated_path_is_exact_for_curves():
    p = plane_curve(3, 1, [(2, 2)])
    assert inv.betti_bounds_table(p).ranks() == [1, 1, 1]


def test_invalid_profile_raises():
    with pytest.raises(inv.InvalidProfile) as err:
        inv.betti_bounds_table(HypersurfaceProfile(n=2, d=3, s=0))
    assert err.value.violations


# -- qhm ------------------------------------------------------------------------------


def test_qhm_threefold():
    t = inv.qhm_betti(threefold(q_homology_manifold=True, chi_override=4))
    assert t.ranks() == [1, 0, 1, 0, 1, 0, 1]
    assert inv.betti_bounds_table(threefold(q_homology_manifold=True, chi_override=4)) == t


def test_qhm_smooth_identity():
    for n in range(1, 7):
        for d in range(1, 7):
            p = HypersurfaceProfile(n=n, d=d, q_homology_manifold=True, chi_override=inv.smooth_euler(n, d))
            assert inv.qhm_betti(p)[n].exact_rank == inv.smooth_betti(n, d)


def test_qhm_cpn_pattern():
    p = HypersurfaceProfile(n=3, d=3, q_homology_manifold=True, chi_override=4)
    assert inv.qhm_betti(p)[3].exact_rank == 0


def test_qhm_errors():
    with pytest.raises(inv.MissingChi):
        inv.qhm_betti(threefold(q_homology_manifold=True))
    with pytest.raises(inv.InconsistentChi):
        inv.qhm_betti(threefold(q_homology_manifold=True, chi_override=5))


def test_qhm_vanishing_rank_follows_exactness():
    """rank H^n_phi = b_n(V_t) - b_n(V) for a Q-homology manifold."""
    p = threefold(q_homology_manifold=True, chi_override=4)
    van = inv.vanishing_table(p)
    assert van[3].exact_rank == 10 - 0
    assert van[4].exact_rank == 0


# -- Euler characteristics ------------------------------------------------------------


def test_two_step_euler():
    # chi(S_1 minus Y) as printed, and as recomputed from P^1 minus S_0
    assert inv.stratified_euler_two_step(-6, -1, 4, 1, -1) == 0
    assert inv.stratified_euler_two_step(-6, -2, 4, 1, -1) == 4
    assert inv.stratified_euler_two_step(7, 0, 3, 0, 11) == 7
    assert inv.stratified_euler_two_step(0, 1, 1, 0, 0) == -1


# -- exact constructions -----------------------------------------------------------------


def quadric_oracle(n, q):
    s = n + 1 - q
    return [0 if k % 2 else (2 if q % 2 == 0 and k == n + s + 1 else 1) for k in range(2 * n + 1)]


@pytest.mark.parametrize("n", range(3, 9))
def test_quadric_table(n):
    for q in range(4, n + 2):
        s = n + 1 - q
        t = inv.quadric_table(n, q)
        assert t.ranks() == quadric_oracle(n, q)
        assert t[2 * s].exact_rank == 1
        assert t[2 * s + 1].exact_rank == 0


def test_quadric_rank_out_of_range():
    for n, q in [(3, 3), (3, 5), (5, 7)]:
        with pytest.raises(RankOutOfRange):
            inv.quadric_table(n, q)


def test_cone_tables():
    tri = inv.curve_table(PlaneCurve(3, 3, (1, 1, 1)))
    assert inv.cone_table(tri).ranks() == [1, 0, 1, 1, 3]
    conic = inv.curve_table(PlaneCurve(2, 1, ()))
    assert inv.cone_table(conic).ranks() == [1, 0, 1, 0, 1]
    line = inv.curve_table(PlaneCurve(1, 1, ()))
    assert inv.cone_table(line).ranks() == inv.smooth_table(2, 1).ranks()
    with pytest.raises(inv.MalformedTable):
        inv.cone_table(inv.smooth_table(2, 3))


def test_cone_vanishing():
    van = inv.vanishing_table(cone())
    assert [van[k].exact_rank for k in range(5)] == [0, 0, 7, 2, 0]


def test_smooth_vanishing_is_zero():
    van = inv.vanishing_table(HypersurfaceProfile(n=3, d=4))
    assert all(g.exact_rank == 0 for g in van.rows)


# -- homology -------------------------------------------------------------------------


def test_homology_freeness():
    p = plane_curve(3, 1, [(2, 3)])
    h = inv.homology_table(p, inv.exact_table(p))
    assert all(g.known_free for g in h.rows)
    p = threefold()
    h = inv.homology_table(p, inv.betti_bounds_table(p))
    assert [g.known_free for g in h.rows] == [True, True, True, False, False, True, True]


def test_vanishing_homology_shift():
    p = cone()
    vh = inv.vanishing_homology_table(p, inv.vanishing_table(p))
    assert [vh[k].exact_rank for k in range(5)] == [0, 0, 0, 7, 2]
    assert vh[4].known_free


# -- cross-path properties ---------------------------------------------------------------


def exact_profiles():
    yield cone()
    yield threefold(q_homology_manifold=True, chi_override=4)
    for n in range(3, 9):
        for q in range(4, n + 3):
            yield quadric_profile(n, diag(n, q))
    for n in range(1, 5):
        for d in range(1, 6):
            yield HypersurfaceProfile(n=n, d=d)
    germs = [(2, 2), (2, 3), (2, 4), (3, 3)]
    for d in range(2, 7):
        for k in range(1, 4):
            for g in germs:
                mus = [(g[0] - 1) * (g[1] - 1)] * k
                if 1 + 1 + d * d - 3 * d - sum(mus) >= 0:
                    yield plane_curve(d, 1, [g] * k)


def test_cross_path_containment():
    count = 0
    for p in exact_profiles():
        exact = inv.exact_table(p)
        bounds = inv.betti_bounds_table(p, short_circuit=False)
        assert exact is not None
        for g, r in zip(bounds.rows, exact.ranks()):
            assert g.contains(r), (p, g.degree, r)
        count += 1
    assert count > 50


def test_euler_consistency():
    for p in exact_profiles():
        chi, _ = inv.euler_characteristic(p)
        assert inv.exact_table(p).euler() == chi


@given(st.integers(1, 6), st.integers(1, 12))
def test_smooth_euler_relation(n, d):
    assert inv.smooth_table(n, d).euler() == inv.smooth_euler(n, d)
