"""Cohomology tables, Betti bounds and Euler characteristics of projective hypersurfaces.

All arithmetic is on Python integers, so (d-1)^(n+2) never overflows.
Rows are marked free only where a theorem says so; elsewhere torsion is
reported as unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import HsurfError
from .profile import (
    INF,
    CohomologyTable,
    GroupInfo,
    HypersurfaceProfile,
    Kind,
    PlaneCurve,
    RankOutOfRange,
    Variant,
    cpn_betti,
    top_mu_sum,
    validate,
)
from .provenance import cite
from .sequences import solve_ranks, specialization_instance


class InvalidProfile(HsurfError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class NegativeBetti(HsurfError):
    pass


class MissingChi(HsurfError):
    pass


class InconsistentChi(HsurfError):
    pass


class MissingTopStratum(HsurfError):
    pass


class MalformedTable(HsurfError):
    pass


def _check(profile: HypersurfaceProfile) -> None:
    violations = validate(profile)
    if violations:
        raise InvalidProfile(violations)


# -- smooth hypersurfaces ----------------------------------------------------


def smooth_betti(n: int, d: int) -> int:
    """Middle Betti number of a smooth degree d hypersurface in CP^{n+1}."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    num = (d - 1) ** (n + 2) + (-1) ** (n + 1)
    q, rem = divmod(num, d)
    assert rem == 0, f"d={d} does not divide (d-1)^(n+2) + (-1)^(n+1) for n={n}"
    return q + (3 * (-1) ** n + 1) // 2


def smooth_euler(n: int, d: int) -> int:
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    num = 1 + (-1) ** (n + 1) * (d - 1) ** (n + 2)
    q, rem = divmod(num, d)
    assert rem == 0, f"Euler characteristic not integral for n={n}, d={d}"
    return (n + 2) - q


def smooth_table(n: int, d: int) -> CohomologyTable:
    ranks = [cpn_betti(n, k) for k in range(2 * n + 1)]
    ranks[n] = smooth_betti(n, d)
    rows = []
    for k, rank in enumerate(ranks):
        prov = ("smooth-betti", "smooth-lefschetz") if k == n else ("smooth-lefschetz",)
        rows.append(GroupInfo.exact(k, rank, cite(*prov)))
    table = CohomologyTable(Variant.SMOOTH, tuple(rows))
    assert table.euler() == smooth_euler(n, d), (n, d, ranks)
    return table


# -- isolated singularities and curves ------------------------------------


def euler_isolated(n: int, d: int, mus: Sequence[int]) -> int:
    if any(m < 1 for m in mus):
        raise ValueError("Milnor numbers of singular points are >= 1")
    return smooth_euler(n, d) + (-1) ** (n + 1) * sum(mus)


def curve_betti(d: int, r: int, mus: Sequence[int]) -> tuple[int, int, int]:
    """(b_0, b_1, b_2) of a reduced plane curve of degree d with r components."""
    if d < 1 or r < 1:
        raise ValueError("need d >= 1 and r >= 1")
    b1 = r + 1 + d * d - 3 * d - sum(mus)
    if b1 < 0:
        raise NegativeBetti(
            f"b_1 = {b1} < 0: Milnor numbers {list(mus)} are impossible for degree {d} with {r} components"
        )
    return 1, b1, r


def curve_table(curve: PlaneCurve) -> CohomologyTable:
    ranks = curve_betti(curve.d, curve.r, curve.mus)
    return CohomologyTable.from_ranks(Variant.COHOMOLOGY, ranks, cite("curve-betti"))


# -- ranges -------------------------------------------------------------------


class Region(str, enum.Enum):
    LEFSCHETZ = "LefschetzIso"
    MIDDLE = "MiddleWindow"
    KATO = "KatoIso"


@dataclass(frozen=True)
class KatoClassification:
    degree: int
    region: Region
    group: GroupInfo
    map_description: str | None = None

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "region": self.region.value,
            "group": self.group.to_json(),
            "map_description": self.map_description,
        }


def kato_classify(profile: HypersurfaceProfile, k: int) -> KatoClassification:
    n, s = profile.n, profile.s
    if not 0 <= k <= 2 * n:
        raise ValueError(f"degree {k} outside [0, {2 * n}]")
    if k < n:
        region = Region.LEFSCHETZ
    elif k <= n + s + 1:
        region = Region.MIDDLE
    else:
        region = Region.KATO
    group = betti_bounds_table(profile, short_circuit=False)[k]
    desc = None
    if region is Region.KATO and k % 2 == 0:
        desc = f"multiplication by d={profile.d}"
    return KatoClassification(k, region, group, desc)


@dataclass(frozen=True)
class VanishingSupport:
    cohomology_window: tuple[int, int] | None
    homology_window: tuple[int, int] | None
    cohomology_free_degree: int | None
    homology_free_degree: int | None

    def cohomology_degrees(self) -> list[int]:
        if self.cohomology_window is None:
            return []
        lo, hi = self.cohomology_window
        return list(range(lo, hi + 1))

    def homology_degrees(self) -> list[int]:
        if self.homology_window is None:
            return []
        lo, hi = self.homology_window
        return list(range(lo, hi + 1))

    def to_json(self) -> dict:
        return {
            "cohomology_window": list(self.cohomology_window) if self.cohomology_window else None,
            "homology_window": list(self.homology_window) if self.homology_window else None,
            "cohomology_free_degree": self.cohomology_free_degree,
            "homology_free_degree": self.homology_free_degree,
        }


def vanishing_support(profile: HypersurfaceProfile) -> VanishingSupport:
    n, s = profile.n, profile.s
    if s < 0:
        return VanishingSupport(None, None, None, None)
    return VanishingSupport((n, n + s), (n + 1, n + s + 1), n, n + s + 1)


def vanishing_top_rank_bound(profile: HypersurfaceProfile) -> int:
    """Upper bound for rank H^{n+s}_phi(V); exact when s = 0."""
    if profile.s < 0:
        raise MissingTopStratum("smooth hypersurface has no singular strata")
    if profile.s == 0:
        if not profile.isolated:
            raise MissingTopStratum("s = 0 but no isolated singular points given")
    elif not profile.top_strata:
        raise MissingTopStratum(f"no stratum of top dimension s = {profile.s}")
    return top_mu_sum(profile)


def top_degree_bound(n: int, s: int, mu_sum: int) -> tuple[int, int]:
    """(stated, emitted) upper bounds for b_{n+s+1}(V).

    ``stated`` is 1 + mu_sum.  The inequality is strict when n+s is even, so
    the emitted integer bound is one less in that case.
    """
    stated = 1 + mu_sum
    return stated, stated - 1 if (n + s) % 2 == 0 else stated


# -- Betti bounds -----------------------------------------------------------------


def _lefschetz_row(n: int, k: int) -> GroupInfo:
    return GroupInfo.exact(k, cpn_betti(n + 1, k), cite("lefschetz", "outside-window"))


def betti_bounds_table(profile: HypersurfaceProfile, short_circuit: bool = True) -> CohomologyTable:
    """Per-degree description of H^k(V; Z), exact where a theorem pins it down.

    With ``short_circuit`` a Q-homology manifold carrying chi_override is
    answered by :func:`qhm_betti` instead.
    """
    _check(profile)
    n, d, r, s = profile.n, profile.d, profile.r, profile.s
    if s < 0:
        rows = smooth_table(n, d).rows
        return CohomologyTable(Variant.COHOMOLOGY, rows)
    if short_circuit and profile.q_homology_manifold and profile.chi_override is not None:
        return qhm_betti(profile)

    mu_sum = vanishing_top_rank_bound(profile)
    rows: dict[int, GroupInfo] = {}
    for k in range(2 * n + 1):
        floor = cpn_betti(n, k)
        if k < n:
            rows[k] = _lefschetz_row(n, k)
        elif k == 2 * n:
            prov = ("top-components", "outside-window") if s <= n - 2 else ("top-components",)
            if k == n + s + 1:
                stated, _ = top_degree_bound(n, s, mu_sum)
                rows[k] = GroupInfo.exact(
                    k, r, cite(*prov, "codim1-components"), stated_bound=stated
                )
            else:
                rows[k] = GroupInfo.exact(k, r, cite(*prov, "kato"))
        elif k >= n + s + 2:
            rows[k] = GroupInfo.exact(k, cpn_betti(n + 1, k), cite("kato", "outside-window"))
        elif k == n:
            prov = ("middle-kernel", "lefschetz-mono") if floor else ("middle-kernel",)
            rows[k] = GroupInfo.bounded(k, floor, smooth_betti(n, d), cite(*prov), free=True)
        elif k == n + s + 1:
            stated, emitted = top_degree_bound(n, s, mu_sum)
            rows[k] = GroupInfo.bounded(
                k,
                floor,
                emitted,
                cite("top-degree-bound", "window-step", "top-splitting"),
                stated_bound=stated,
            )
        else:
            rows[k] = GroupInfo.bounded(
                k, floor, INF, cite("window-step", "window-splitting", "top-splitting")
            )

    if s == 0:
        # H^n_phi is known exactly, so the 5-term piece pins the window further.
        seq = specialization_instance(profile, smooth_table(n, d), _exact_ranks(rows), {n: mu_sum})
        sol = solve_ranks(seq)
        assert sol.feasible, "specialization sequence infeasible on a valid profile"
        for k in (n, n + 1):
            old = rows[k]
            if old.kind is Kind.EXACT:
                continue
            lo, hi = sol.interval(f"b{k}(V)")
            lo, hi = max(lo, old.rank_lo), min(hi, old.rank_hi)
            rows[k] = GroupInfo.bounded(
                k,
                lo,
                hi,
                old.provenance + cite("isolated-vanishing", "specialization-solve"),
                free=old.known_free,
                stated_bound=old.stated_bound,
            )
    return CohomologyTable(Variant.COHOMOLOGY, tuple(rows[k] for k in range(2 * n + 1)))


def _exact_ranks(rows) -> dict[int, int]:
    return {k: g.rank_lo for k, g in dict(rows).items() if g.kind is Kind.EXACT}


# -- Q-homology manifolds ------------------------------------------------------


def qhm_betti(profile: HypersurfaceProfile) -> CohomologyTable:
    """Betti numbers of a Q-homology manifold from its Euler characteristic."""
    if not profile.q_homology_manifold:
        raise HsurfError("profile is not flagged as a Q-homology manifold")
    if profile.chi_override is None:
        raise MissingChi("Q-homology manifold path needs chi_override")
    n, r, s = profile.n, profile.r, profile.s
    chi = profile.chi_override
    b_n = cpn_betti(n, n) + (-1) ** n * (chi - (n + 1))
    if b_n < 0:
        raise InconsistentChi(f"chi = {chi} gives b_{n} = {b_n} < 0")
    rows = []
    for k in range(2 * n + 1):
        if k < n:
            rows.append(_lefschetz_row(n, k))
        elif k == n:
            rows.append(GroupInfo.exact(k, b_n, cite("qhm", "middle-kernel")))
        elif k == 2 * n:
            rows.append(GroupInfo.exact(k, r, cite("qhm", "top-components")))
        elif k >= n + s + 2:
            rows.append(GroupInfo.exact(k, cpn_betti(n + 1, k), cite("qhm", "kato")))
        else:
            rows.append(GroupInfo.exact(k, cpn_betti(n, k), cite("qhm"), free=False))
    return CohomologyTable(Variant.COHOMOLOGY, tuple(rows))


# -- Euler characteristics -------------------------------------------------------


def stratified_euler_two_step(chi_Y: int, chi_S1_minus_Y: int, mu_t: int, chi_S0: int, chi_F0: int) -> int:
    """chi(V) for a two-step stratification V > S_1 > S_0 sliced by a generic smooth Y."""
    return chi_Y - chi_S1_minus_Y * mu_t - chi_S0 * (chi_F0 - 1)


def euler_characteristic(profile: HypersurfaceProfile) -> tuple[int, str] | None:
    """(chi(V), provenance key) when a closed form applies, else None."""
    n, d, s = profile.n, profile.d, profile.s
    if profile.chi_override is not None:
        return profile.chi_override, "qhm"
    if s < 0:
        return smooth_euler(n, d), "smooth-euler"
    if s == 0:
        return euler_isolated(n, d, [top_mu_sum(profile)]), "isolated-euler"
    if profile.cone_over is not None:
        c = profile.cone_over
        # vertex plus a C-bundle over the curve
        return 1 + euler_isolated(1, c.d, c.mus), "cone-over-curve"
    if profile.quadric_rank is not None:
        q = profile.quadric_rank
        return (s + 1) + smooth_euler(q - 2, 2), "quadric-cone"
    return None


# -- exact constructions -------------------------------------------------------------


def quadric_table(n: int, q: int) -> CohomologyTable:
    """Integral cohomology of a quadric of rank q in CP^{n+1}, 4 <= q <= n+1."""
    if not 4 <= q <= n + 1:
        raise RankOutOfRange(q, f"quadric rank {q} outside 4 <= q <= n+1 = {n + 1}")
    s = n + 1 - q
    base = smooth_table(q - 2, 2).ranks()  # W_q, a smooth quadric of dimension q - 2
    rows = []
    for k in range(2 * n + 1):
        if k <= 2 * s:
            rank = cpn_betti(s, k)
        elif k == 2 * s + 1:
            rank = 0
        else:
            rank = base[k - 2 - 2 * s]
        rows.append(GroupInfo.exact(k, rank, cite("quadric-cone")))
    return CohomologyTable(Variant.COHOMOLOGY, tuple(rows))


def cone_table(base: CohomologyTable) -> CohomologyTable:
    """Cohomology of the projective cone in CP^3 over a plane curve."""
    if len(base) != 3 or not base.is_exact:
        raise MalformedTable("cone base must be an exact plane-curve table with degrees 0..2")
    rows = [
        GroupInfo.exact(0, 1, cite("lefschetz")),
        GroupInfo.exact(1, 0, cite("lefschetz")),
    ]
    for g in base.rows:
        rows.append(
            GroupInfo(
                g.degree + 2,
                Kind.EXACT,
                g.rank_lo,
                g.rank_hi,
                torsion=g.torsion,
                known_free=g.known_free,
                provenance=cite("cone-over-curve"),
            )
        )
    return CohomologyTable(Variant.COHOMOLOGY, tuple(rows))


def exact_table(profile: HypersurfaceProfile) -> CohomologyTable | None:
    """Exact integral (or rational, for Q-homology manifolds) table when one is known."""
    _check(profile)
    n, s = profile.n, profile.s
    if s < 0:
        return CohomologyTable(Variant.COHOMOLOGY, smooth_table(n, profile.d).rows)
    if profile.quadric_rank is not None and 4 <= profile.quadric_rank <= n + 1:
        return quadric_table(n, profile.quadric_rank)
    if profile.cone_over is not None:
        return cone_table(curve_table(profile.cone_over))
    if n == 1 and s == 0:
        mus = [top_mu_sum(profile)]
        return curve_table(PlaneCurve(profile.d, profile.r, tuple(mus)))
    if profile.q_homology_manifold and profile.chi_override is not None:
        return qhm_betti(profile)
    return None


# -- vanishing (co)homology -------------------------------------------------------------


def vanishing_table(profile: HypersurfaceProfile, known_betti: dict[int, int] | None = None) -> CohomologyTable:
    """Ranks of H^k_phi(V) for k = 0..n+s+1.

    ``known_betti`` supplies b_k(V) beyond the theorem-determined degrees;
    by default the exact path is used when one exists.
    """
    _check(profile)
    n, s = profile.n, profile.s
    if known_betti is None:
        exact = exact_table(profile)
        known_betti = {} if exact is None else dict(enumerate(exact.ranks()))
    top = n + s + 1 if s >= 0 else n
    rows = []
    if s < 0:
        for k in range(top + 1):
            rows.append(GroupInfo.exact(k, 0, cite("concentration")))
        return CohomologyTable(Variant.VANISHING_COHOMOLOGY, tuple(rows))

    bounds = betti_bounds_table(profile, short_circuit=False)
    known = _exact_ranks(enumerate(bounds.rows))
    known.update(known_betti)
    vanishing = {}
    if s == 0:
        vanishing[n] = vanishing_top_rank_bound(profile)
    elif profile.q_homology_manifold:
        vanishing.update({k: 0 for k in range(n + 1, n + s + 1)})
    sol = solve_ranks(specialization_instance(profile, smooth_table(n, profile.d), known, vanishing))
    if not sol.feasible:
        raise InvalidProfile([f"specialization sequence infeasible with b(V) = {known}"])
    mu_sum = vanishing_top_rank_bound(profile)
    for k in range(top + 1):
        if not n <= k <= n + s:
            rows.append(GroupInfo.exact(k, 0, cite("concentration")))
            continue
        free = k == n
        if k in vanishing:
            prov = ("isolated-vanishing",) if s == 0 else ("qhm", "specialization-solve")
            rows.append(GroupInfo.exact(k, vanishing[k], cite("concentration", *prov), free=free))
            continue
        lo, hi = sol.interval(f"phi{k}")
        prov = ["concentration", "specialization-solve"]
        if k == n + s:
            hi = min(hi, mu_sum)
            prov.append("top-vanishing-bound")
        if lo > hi:
            raise InvalidProfile([f"rank H^{k}_phi forced into empty interval [{lo}, {hi}]"])
        rows.append(GroupInfo.bounded(k, lo, hi, cite(*prov), free=free))
    return CohomologyTable(Variant.VANISHING_COHOMOLOGY, tuple(rows))


def homology_table(profile: HypersurfaceProfile, cohomology: CohomologyTable) -> CohomologyTable:
    """Homology ranks (equal to cohomology ranks) with the homological freeness facts."""
    n, s = profile.n, profile.s
    rows = []
    for g in cohomology.rows:
        k = g.degree
        prov = ["universal-coefficients"]
        # Tors H_k = Tors H^{k+1}
        free = s < 0 or k == 2 * n or cohomology[k + 1].known_free
        if s >= 0 and (k <= n - 1 or k >= n + s + 2):
            free = True
            prov.append("homology-outside-window")
        if s >= 0 and k == n + s + 1:
            free = True
            prov.append("homology-top-free")
        rows.append(
            GroupInfo(
                k,
                g.kind,
                g.rank_lo,
                g.rank_hi,
                torsion="none" if free else "unknown",
                known_free=free,
                provenance=cite(*prov),
                stated_bound=g.stated_bound,
            )
        )
    return CohomologyTable(Variant.HOMOLOGY, tuple(rows))


def vanishing_homology_table(profile: HypersurfaceProfile, vanishing: CohomologyTable) -> CohomologyTable:
    """rank H_k^vee(V) = rank H^{k-1}_phi(V); zero outside [n+1, n+s+1], top degree free."""
    n, s = profile.n, profile.s
    top = n + s + 1 if s >= 0 else n
    rows = [GroupInfo.exact(0, 0, cite("homology-concentration"))]
    for k in range(1, top + 1):
        g = vanishing[k - 1]
        # Tors H_k(V_D, V_t) = Tors H^{k+1}(V_D, V_t) = Tors H^k_phi
        free = s >= 0 and k == n + s + 1 or vanishing[k].known_free
        rows.append(
            GroupInfo(
                k,
                g.kind,
                g.rank_lo,
                g.rank_hi,
                torsion="none" if free else "unknown",
                known_free=free,
                provenance=cite("homology-concentration", "universal-coefficients"),
            )
        )
    return CohomologyTable(Variant.VANISHING_HOMOLOGY, tuple(rows))


# -- Lefschetz supplement ----------------------------------------------------------------


@dataclass(frozen=True)
class LefschetzSupplementReport:
    n: int
    s: int
    r: int
    zero_low: tuple[int, ...]
    zero_high: tuple[int, ...]
    top_rank: int
    middle_free: bool = True

    @property
    def zero_degrees(self) -> tuple[int, ...]:
        return self.zero_low + self.zero_high

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "r": self.r,
            "zero_low": list(self.zero_low),
            "zero_high": list(self.zero_high),
            "top_degree": 2 * self.n,
            "top_rank": self.top_rank,
            "middle_degree": self.n,
            "middle_free": self.middle_free,
            "provenance": ["lefschetz-supplement"],
        }


def lefschetz_supplement(n: int, s: int, r: int = 1) -> LefschetzSupplementReport:
    """Vanishing ranges of H^k(V, V cap H) for a generic hyperplane H."""
    if not -1 <= s < n:
        raise ValueError(f"need -1 <= s < n, got s={s}, n={n}")
    if r < 1:
        raise ValueError("r must be >= 1")
    return LefschetzSupplementReport(
        n, s, r, tuple(range(0, n)), tuple(range(n + s + 2, 2 * n)), r, True
    )
