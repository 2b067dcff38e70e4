"""Input records for singular projective hypersurfaces and per-degree answers."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .errors import HsurfError
from .linalg import rank as matrix_rank
from .milnor import GermSpec, milnor
from .provenance import CITATIONS

SCHEMA_VERSION = 1
INF = math.inf


class ProfileError(HsurfError):
    pass


class NonSymmetric(HsurfError):
    pass


class RankOutOfRange(HsurfError):
    def __init__(self, q: int, message: str | None = None):
        super().__init__(message or f"quadric rank {q} outside 4 <= q <= n+1")
        self.q = q


def cpn_betti(m: int, k: int) -> int:
    """b_k(CP^m)."""
    return 1 if 0 <= k <= 2 * m and k % 2 == 0 else 0


# -- per-degree answers -----------------------------------------------------


class Kind(str, enum.Enum):
    EXACT = "Exact"
    BOUNDED = "Bounded"


class Variant(str, enum.Enum):
    COHOMOLOGY = "CohomologyOfV"
    HOMOLOGY = "HomologyOfV"
    VANISHING_COHOMOLOGY = "VanishingCohomology"
    VANISHING_HOMOLOGY = "VanishingHomology"
    SMOOTH = "SmoothReference"


@dataclass(frozen=True)
class GroupInfo:
    """One degree of a table: an exact group or a rank interval.

    ``torsion`` is ``"none"``, ``"unknown"`` or a tuple of prime-power orders.
    ``stated_bound`` keeps a theorem's right-hand side when the emitted
    ``rank_hi`` is a sharpened integer reading of it.
    """

    degree: int
    kind: Kind
    rank_lo: int
    rank_hi: int | float
    torsion: str | tuple = "unknown"
    known_free: bool = False
    provenance: tuple[str, ...] = ()
    stated_bound: int | None = None

    def __post_init__(self):
        if not self.provenance:
            raise ValueError(f"degree {self.degree}: every group needs a provenance citation")
        for key in self.provenance:
            if key not in CITATIONS:
                raise ValueError(f"unregistered provenance key {key!r}")
        if self.rank_lo < 0 or self.rank_lo > self.rank_hi:
            raise ValueError(f"degree {self.degree}: bad rank interval [{self.rank_lo}, {self.rank_hi}]")
        if self.kind is Kind.EXACT and self.rank_lo != self.rank_hi:
            raise ValueError(f"degree {self.degree}: exact group needs a point interval")
        if self.known_free and self.torsion != "none":
            raise ValueError(f"degree {self.degree}: free group cannot carry torsion")

    @classmethod
    def exact(cls, degree: int, rank: int, provenance, free: bool = True, **kw) -> "GroupInfo":
        return cls(
            degree,
            Kind.EXACT,
            rank,
            rank,
            torsion="none" if free else kw.pop("torsion", "unknown"),
            known_free=free,
            provenance=tuple(provenance),
            **kw,
        )

    @classmethod
    def bounded(cls, degree: int, lo: int, hi, provenance, free: bool = False, **kw) -> "GroupInfo":
        if lo == hi:
            return cls.exact(degree, lo, provenance, free=free, **kw)
        return cls(
            degree,
            Kind.BOUNDED,
            lo,
            hi,
            torsion="none" if free else "unknown",
            known_free=free,
            provenance=tuple(provenance),
            **kw,
        )

    @property
    def exact_rank(self) -> int | None:
        return self.rank_lo if self.kind is Kind.EXACT else None

    def contains(self, rank: int) -> bool:
        return self.rank_lo <= rank <= self.rank_hi

    def group_text(self) -> str:
        if self.kind is Kind.EXACT:
            r = self.rank_lo
            body = "0" if r == 0 else ("Z" if r == 1 else f"Z^{r}")
            if self.torsion not in ("none", "unknown") and self.torsion:
                tors = " + ".join(f"Z/{t}" for t in self.torsion)
                body = tors if r == 0 else f"{body} + {tors}"
            if self.torsion == "unknown":
                body += " (torsion unknown)"
            return body
        hi = "inf" if self.rank_hi == INF else str(self.rank_hi)
        return f"rank in [{self.rank_lo}, {hi}]"

    def to_json(self) -> dict:
        out = {
            "degree": self.degree,
            "group": self.group_text(),
            "kind": self.kind.value,
            "exact_rank": self.exact_rank,
            "rank_lo": self.rank_lo,
            "rank_hi": "inf" if self.rank_hi == INF else self.rank_hi,
            "torsion": self.torsion if isinstance(self.torsion, str) else list(self.torsion),
            "known_free": self.known_free,
            "provenance": list(self.provenance),
        }
        if self.stated_bound is not None:
            out["stated_bound"] = self.stated_bound
        return out


@dataclass(frozen=True)
class CohomologyTable:
    variant: Variant
    rows: tuple[GroupInfo, ...]

    def __post_init__(self):
        rows = tuple(sorted(self.rows, key=lambda g: g.degree))
        object.__setattr__(self, "rows", rows)
        if [g.degree for g in rows] != list(range(len(rows))):
            raise ValueError("table rows must cover degrees 0..max exactly once")

    def __getitem__(self, k: int) -> GroupInfo:
        return self.rows[k]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def is_exact(self) -> bool:
        return all(g.kind is Kind.EXACT for g in self.rows)

    def ranks(self) -> list[int]:
        if not self.is_exact:
            raise ValueError("table has non-exact rows")
        return [g.rank_lo for g in self.rows]

    def euler(self) -> int:
        return sum((-1) ** k * r for k, r in enumerate(self.ranks()))

    def to_json(self) -> dict:
        return {"variant": self.variant.value, "rows": [g.to_json() for g in self.rows]}

    @classmethod
    def from_ranks(cls, variant: Variant, ranks: Sequence[int], provenance, free: bool = True):
        return cls(variant, tuple(GroupInfo.exact(k, r, provenance, free=free) for k, r in enumerate(ranks)))

    @classmethod
    def from_json(cls, data: dict) -> "CohomologyTable":
        rows = []
        for row in data["rows"]:
            hi = row["rank_hi"]
            torsion = row.get("torsion", "unknown")
            rows.append(
                GroupInfo(
                    int(row["degree"]),
                    Kind(row["kind"]),
                    int(row["rank_lo"]),
                    INF if hi == "inf" else int(hi),
                    torsion=torsion if isinstance(torsion, str) else tuple(torsion),
                    known_free=bool(row.get("known_free", False)),
                    provenance=tuple(row["provenance"]),
                    stated_bound=row.get("stated_bound"),
                )
            )
        return cls(Variant(data["variant"]), tuple(rows))


# -- hypersurface profile ---------------------------------------------------


@dataclass(frozen=True)
class StratumSummary:
    label: str
    dim: int
    transversal: GermSpec
    is_top: bool | None = None  # filled in from s when omitted


@dataclass(frozen=True)
class IsolatedSingularity:
    label: str
    germ: GermSpec


@dataclass(frozen=True)
class PlaneCurve:
    """Reduced plane curve of degree d with r components and isolated singularities."""

    d: int
    r: int
    mus: tuple[int, ...] = ()


@dataclass(frozen=True)
class HypersurfaceProfile:
    n: int
    d: int
    r: int = 1
    s: int = -1
    strata: tuple[StratumSummary, ...] = ()
    isolated: tuple[IsolatedSingularity, ...] = ()
    q_homology_manifold: bool = False
    chi_override: int | None = None
    cone_over: PlaneCurve | None = None
    quadric_rank: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        object.__setattr__(self, "isolated", tuple(self.isolated))
        object.__setattr__(
            self,
            "strata",
            tuple(
                st if st.is_top is not None else replace(st, is_top=st.dim == self.s)
                for st in self.strata
            ),
        )

    @property
    def top_strata(self) -> tuple[StratumSummary, ...]:
        return tuple(st for st in self.strata if st.dim == self.s)

    @classmethod
    def from_json(cls, data) -> "HypersurfaceProfile":
        if not isinstance(data, dict) or not data:
            raise ProfileError("profile must be a nonempty JSON object")
        if "schema" not in data:
            raise ProfileError("profile is missing the 'schema' version field")
        if data["schema"] != SCHEMA_VERSION:
            raise ProfileError(f"unsupported profile schema {data['schema']!r}; expected {SCHEMA_VERSION}")
        try:
            strata = tuple(
                StratumSummary(
                    str(st.get("label", f"S{i}")),
                    int(st["dim"]),
                    GermSpec.from_json(st["transversal"]),
                    st.get("is_top"),
                )
                for i, st in enumerate(data.get("strata", []))
            )
            isolated = tuple(
                IsolatedSingularity(str(p.get("label", f"x{i}")), GermSpec.from_json(p["germ"]))
                for i, p in enumerate(data.get("isolated", []))
            )
            cone = data.get("cone_over_curve")
            quadric = data.get("quadric")
            quadric_rank = None
            if quadric is not None:
                quadric_rank = (
                    int(quadric["rank"]) if "rank" in quadric else matrix_rank(_matrix(quadric["matrix"]))
                )
            return cls(
                n=int(data["n"]),
                d=int(data["d"]),
                r=int(data.get("r", 1)),
                s=int(data["s"]),
                strata=strata,
                isolated=isolated,
                q_homology_manifold=bool(data.get("q_homology_manifold", False)),
                chi_override=None if data.get("chi_override") is None else int(data["chi_override"]),
                cone_over=None
                if cone is None
                else PlaneCurve(int(cone["d"]), int(cone.get("r", 1)), tuple(int(m) for m in cone.get("mus", []))),
                quadric_rank=quadric_rank,
            )
        except KeyError as exc:
            raise ProfileError(f"profile is missing required field {exc.args[0]!r}") from None
        except (TypeError, ValueError) as exc:
            raise ProfileError(f"malformed profile: {exc}") from None

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "s": self.s,
            "strata": [
                {"label": st.label, "dim": st.dim, "transversal": st.transversal.to_json(), "is_top": st.is_top}
                for st in self.strata
            ],
            "isolated": [{"label": p.label, "germ": p.germ.to_json()} for p in self.isolated],
            "q_homology_manifold": self.q_homology_manifold,
            "chi_override": self.chi_override,
        }
        if self.cone_over is not None:
            c = self.cone_over
            out["cone_over_curve"] = {"d": c.d, "r": c.r, "mus": list(c.mus)}
        if self.quadric_rank is not None:
            out["quadric"] = {"rank": self.quadric_rank}
        return out


@dataclass(frozen=True, order=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


def _germ_mu(germ: GermSpec) -> int:
    return milnor(germ).mu


def top_mu_sum(profile: HypersurfaceProfile) -> int:
    """Sum of Milnor numbers over top strata (isolated points when s = 0)."""
    if profile.s == 0:
        return sum(_germ_mu(p.germ) for p in profile.isolated)
    return sum(_germ_mu(st.transversal) for st in profile.top_strata)


def validate(profile: HypersurfaceProfile) -> list[Violation]:
    """Every violated invariant, sorted; an empty list means valid."""
    out: list[Violation] = []

    def bad(code: str, message: str) -> None:
        out.append(Violation(code, message))

    n, d, r, s = profile.n, profile.d, profile.r, profile.s
    if n < 1:
        bad("n-range", f"n must be >= 1, got {n}")
    if d < 1:
        bad("d-range", f"d must be >= 1, got {d}")
    if r < 1:
        bad("r-range", f"r must be >= 1, got {r}")
    if r > max(d, 1):
        bad("r-degree", f"r = {r} components cannot exceed the degree d = {d}")
    if not -1 <= s <= n - 1:
        bad("s-range", f"s must satisfy -1 <= s < n (V reduced), got s={s}, n={n}")
    if d == 1 and s != -1:
        bad("hyperplane-smooth", "a degree 1 hypersurface is a hyperplane and must have s = -1")

    has_sing = bool(profile.strata) or bool(profile.isolated)
    if (s == -1) == has_sing:
        bad("s-smooth", "s = -1 iff there are no strata and no isolated singularities")
    if s >= 1 and not profile.top_strata:
        bad("s-top", f"s = {s} requires a stratum of dimension {s}")
    if s == 0 and (not profile.isolated or profile.strata):
        bad("s-isolated", "s = 0 requires isolated singularities and no strata")
    if s >= 1 and profile.isolated:
        bad("isolated-reserved", "points on positive-dimensional singular loci belong in strata as dim-0 strata")
    if r >= 2 and s != n - 1:
        bad("r-codim1", f"r >= 2 requires s = n-1 = {n - 1}, got s = {s}")

    for st in profile.strata:
        if not 0 <= st.dim <= max(s, 0):
            bad("stratum-dim", f"stratum {st.label}: dim {st.dim} outside [0, s={s}]")
        if st.is_top != (st.dim == s):
            bad("stratum-top", f"stratum {st.label}: is_top={st.is_top} but dim={st.dim}, s={s}")
        nv = st.transversal.nvars
        if nv is not None and nv != n - st.dim + 1:
            bad(
                "stratum-germ-vars",
                f"stratum {st.label}: transversal germ has {nv} variables, expected n - dim + 1 = {n - st.dim + 1}",
            )
    for p in profile.isolated:
        nv = p.germ.nvars
        if nv is not None and nv != n + 1:
            bad("isolated-germ-vars", f"point {p.label}: germ has {nv} variables, expected n + 1 = {n + 1}")
        try:
            mu = _germ_mu(p.germ)
        except HsurfError as exc:
            bad("isolated-mu", f"point {p.label}: {exc}")
        else:
            if mu < 1:
                bad("isolated-mu", f"point {p.label}: Milnor number {mu} < 1 (smooth point)")
    for st in profile.top_strata:
        try:
            mu = _germ_mu(st.transversal)
        except HsurfError as exc:
            bad("stratum-mu", f"stratum {st.label}: {exc}")
        else:
            if mu < 1:
                bad("stratum-mu", f"stratum {st.label}: transversal Milnor number {mu} < 1")

    if s == n - 1 and s >= 0 and not out:
        total = top_mu_sum(profile)
        if r > 1 + total:
            bad("codim1-components", f"r = {r} exceeds 1 + sum of transversal Milnor numbers = {1 + total}")

    if profile.cone_over is not None:
        c = profile.cone_over
        if n != 2 or d != c.d:
            bad("cone-shape", f"cone over a plane curve needs n = 2 and d = curve degree {c.d}")
        if c.r > c.d or any(m < 1 for m in c.mus):
            bad("cone-curve", "curve needs r <= d and Milnor numbers >= 1")
    if profile.quadric_rank is not None:
        q = profile.quadric_rank
        if d != 2:
            bad("quadric-degree", "quadric profiles have d = 2")
        if q != n + 2 and s != n + 1 - q:
            bad("quadric-s", f"quadric of rank {q} has s = n + 1 - q = {n + 1 - q}, got {s}")
    return sorted(set(out))


def _matrix(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def quadric_profile(n: int, Q: Sequence[Sequence]) -> HypersurfaceProfile:
    """Profile of {x^T Q x = 0} in CP^{n+1} from its symmetric (n+2)x(n+2) matrix."""
    Q = _matrix(Q)
    size = n + 2
    if len(Q) != size or any(len(row) != size for row in Q):
        raise ProfileError(f"quadric in CP^{n + 1} needs a {size}x{size} matrix")
    if any(Q[i][j] != Q[j][i] for i in range(size) for j in range(i)):
        raise NonSymmetric("quadric matrix is not symmetric")
    q = matrix_rank(Q)
    if q == 0:
        raise ProfileError("zero matrix does not define a hypersurface")
    if q == size:
        return HypersurfaceProfile(n=n, d=2, quadric_rank=q)
    if q <= 3:
        raise RankOutOfRange(q, f"quadric rank {q} <= 3: the cone formulas need 4 <= q <= n+1")
    s = n + 1 - q
    a1 = GermSpec(brieskorn=(2,) * q)
    if s == 0:
        return HypersurfaceProfile(
            n=n, d=2, s=0, isolated=(IsolatedSingularity("vertex", a1),), quadric_rank=q
        )
    return HypersurfaceProfile(
        n=n, d=2, s=s, strata=(StratumSummary("vertex", s, a1, True),), quadric_rank=q
    )
