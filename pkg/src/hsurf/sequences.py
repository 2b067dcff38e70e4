"""Rank bookkeeping for finite exact sequences of finitely generated abelian groups.

A sequence ``0 -> A_0 -> A_1 -> ... -> A_{m-1} -> 0`` is exact on ranks iff
there are nonnegative integers ``i_0, ..., i_{m-2}`` (ranks of the images of
the maps ``A_j -> A_{j+1}``) with ``rank A_j = i_{j-1} + i_j`` and
``i_{-1} = i_{m-1} = 0``.  Unknown ranks are eliminated from this system by
Fourier-Motzkin elimination.

Rounding the rational bounds to integers is exact here.  Every equation
has the form ``x_j - i_{j-1} - i_j = 0`` or ``i_{j-1} + i_j = c``, so the
constraint matrix is an interval matrix with an identity block attached.
That matrix is totally unimodular, and the projection of its polytope onto
any single coordinate has integral endpoints.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import HsurfError

INF = math.inf


class SequenceError(HsurfError):
    pass


@dataclass(frozen=True)
class RankTerm:
    name: str
    value: int | None = None

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise SequenceError(f"rank of {self.name} must be nonnegative, got {self.value}")

    @property
    def known(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class ExactSequenceSpec:
    """Terms of a sequence; zero groups are implied at both ends.

    Unknown names must be distinct.  A shared unknown would put a
    coefficient 2 into the system and break the integrality argument above.
    """

    terms: tuple[RankTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise SequenceError("an exact sequence needs at least one term")
        names = [t.name for t in self.terms if not t.known]
        dup = sorted({n for n in names if names.count(n) > 1})
        if dup:
            raise SequenceError(f"unknown ranks must have distinct names; repeated: {', '.join(dup)}")

    @classmethod
    def from_text(cls, text: str) -> "ExactSequenceSpec":
        """Parse ``"0,a,7,2,b,0"``: integers are known ranks, names are unknowns."""
        terms = []
        for j, tok in enumerate(t.strip() for t in text.split(",")):
            if re.fullmatch(r"\d+", tok):
                terms.append(RankTerm(f"A{j}", int(tok)))
            elif re.fullmatch(r"[A-Za-z_][A-Za-z0-9_()^]*", tok):
                terms.append(RankTerm(tok))
            else:
                raise SequenceError(f"bad sequence term {tok!r} at position {j}")
        return cls(tuple(terms))

    @classmethod
    def from_values(cls, values: Sequence) -> "ExactSequenceSpec":
        """Integers become known terms, strings become unknowns."""
        return cls(
            tuple(
                RankTerm(v) if isinstance(v, str) else RankTerm(f"A{j}", int(v))
                for j, v in enumerate(values)
            )
        )

    @property
    def unknowns(self) -> list[str]:
        return [t.name for t in self.terms if not t.known]

    def reversed(self) -> "ExactSequenceSpec":
        return ExactSequenceSpec(tuple(reversed(self.terms)))

    def __str__(self) -> str:
        body = " -> ".join(str(t.value) if t.known else t.name for t in self.terms)
        return f"0 -> {body} -> 0"


@dataclass(frozen=True)
class Inequality:
    """``sum(coeffs[v] * v) <= bound`` with integer data."""

    coeffs: tuple[tuple[str, int], ...]
    bound: int

    def evaluate(self, assignment: Mapping[str, int]) -> bool:
        return sum(c * assignment[v] for v, c in self.coeffs) <= self.bound

    def __str__(self) -> str:
        lhs = " ".join(f"{'+' if c > 0 else '-'} {abs(c) if abs(c) != 1 else ''}{v}" for v, c in self.coeffs)
        return f"{lhs.lstrip('+ ')} <= {self.bound}"


@dataclass(frozen=True)
class RankSolution:
    feasible: bool
    intervals: dict = field(default_factory=dict)
    constraints: tuple[Inequality, ...] = ()

    def interval(self, name: str) -> tuple[int, float]:
        return self.intervals[name]

    def satisfies(self, assignment: Mapping[str, int]) -> bool:
        """Whether a full assignment of the unknowns is consistent with exactness."""
        return self.feasible and all(
            lo <= assignment[v] <= hi for v, (lo, hi) in self.intervals.items()
        ) and all(c.evaluate(assignment) for c in self.constraints)

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "intervals": {
                v: [lo, "inf" if hi == INF else hi] for v, (lo, hi) in self.intervals.items()
            },
            "constraints": [str(c) for c in self.constraints],
        }


# A row is (dict var -> int, int) meaning sum(coeff * var) <= const.


def _normalize(coeffs: dict, const: int):
    """Divide ``coeffs . x <= const`` by the coefficient gcd, flooring the bound."""
    coeffs = {v: c for v, c in coeffs.items() if c}
    if all(c == 1 or c == -1 for c in coeffs.values()):
        return coeffs, const
    g = 0
    for c in coeffs.values():
        g = math.gcd(g, c)
    return {v: c // g for v, c in coeffs.items()}, const // g


def _combine(a: dict, ca: int, fa: int, b: dict, cb: int, fb: int):
    out = {v: fa * c for v, c in a.items()}
    for v, c in b.items():
        out[v] = out.get(v, 0) + fb * c
    return out, fa * ca + fb * cb


def _project(ineqs: list, keep: set) -> list | None:
    """Fourier-Motzkin: eliminate every variable outside ``keep``; None if infeasible."""
    rows = _dedupe(ineqs)
    if rows is None:
        return None
    while True:
        elim = {v for coeffs, _ in rows for v in coeffs if v not in keep}
        if not elim:
            return rows

        def cost(x):
            pos = sum(1 for c, _ in rows if c.get(x, 0) > 0)
            neg = sum(1 for c, _ in rows if c.get(x, 0) < 0)
            return (pos * neg - pos - neg, x)

        v = min(elim, key=cost)
        pos = [r for r in rows if r[0].get(v, 0) > 0]
        neg = [r for r in rows if r[0].get(v, 0) < 0]
        new = [r for r in rows if not r[0].get(v, 0)]
        for pc, pk in pos:
            for nc, nk in neg:
                new.append(_combine(pc, pk, -nc[v], nc, nk, pc[v]))
        rows = _dedupe(new)
        if rows is None:
            return None


def _dedupe(rows: Iterable) -> list | None:
    best: dict = {}
    for coeffs, const in rows:
        coeffs, const = _normalize(coeffs, const)
        if not coeffs:
            if const < 0:
                return None
            continue
        key = tuple(sorted(coeffs.items()))
        if key not in best or const < best[key]:
            best[key] = const
    return [(dict(k), c) for k, c in best.items()]


def _chain_rows(seq: ExactSequenceSpec) -> list | None:
    """Eliminate the image ranks by pivoting along the sequence.

    Pivoting on ``i_j`` in equation ``j`` writes every image rank as an affine
    form in the unknowns; each form must be >= 0 and the last equation
    becomes a relation among the unknowns.
    """
    rows = []
    prev: dict = {}
    prev_const = 0
    last = len(seq.terms) - 1
    for j, term in enumerate(seq.terms):
        # i_j = value_j - i_{j-1}
        if term.known:
            coeffs, const = {}, term.value
        else:
            coeffs, const = {term.name: 1}, 0
            rows.append(({term.name: -1}, 0))
        for v, c in prev.items():
            coeffs[v] = coeffs.get(v, 0) - c
        const -= prev_const
        coeffs = {v: c for v, c in coeffs.items() if c}
        if j == last:
            if not coeffs:
                return rows if const == 0 else None
            rows.append(({v: -c for v, c in coeffs.items()}, const))
            rows.append((coeffs, -const))
        else:
            # -(coeffs . x) <= const  <=>  i_j >= 0
            rows.append(({v: -c for v, c in coeffs.items()}, const))
        prev, prev_const = coeffs, const
    return rows


def _bounds(rows: list, name: str) -> tuple[int, float]:
    lo, hi = 0, INF
    for coeffs, const in rows:
        a = coeffs[name]
        if a > 0:
            hi = min(hi, const // a)
        else:
            lo = max(lo, -(const // -a))
    return lo, hi


def solve_ranks(seq: ExactSequenceSpec, upper: Mapping[str, int] | None = None) -> RankSolution:
    """Tightest integer interval for every unknown rank, plus the projected system.

    ``upper`` optionally caps individual unknowns (``{"a": 10}``).
    """
    unknowns = seq.unknowns
    rows = _chain_rows(seq)
    if rows is None:
        return RankSolution(False)
    for name, cap in (upper or {}).items():
        if name not in unknowns:
            raise SequenceError(f"cap given for {name!r}, which is not an unknown")
        rows.append(({name: 1}, int(cap)))
    rows = _project(rows, set(unknowns))
    if rows is None:
        return RankSolution(False)
    intervals = {}
    for name in unknowns:
        single = rows if len(unknowns) == 1 else _project(rows, {name})
        if single is None:
            return RankSolution(False)
        lo, hi = _bounds(single, name)
        if lo > hi:
            return RankSolution(False)
        intervals[name] = (lo, hi)
    constraints = tuple(
        Inequality(tuple(sorted(c.items())), k)
        for c, k in sorted(rows, key=lambda r: (sorted(r[0].items()), r[1]))
        if len(c) > 1
    )
    return RankSolution(True, intervals, constraints)


def alternating_sum_check(seq: ExactSequenceSpec) -> bool:
    if not all(t.known for t in seq.terms):
        raise SequenceError("alternating sum needs every rank known")
    return sum((-1) ** j * t.value for j, t in enumerate(seq.terms)) == 0


def specialization_instance(
    profile,
    smooth_table,
    known_betti: Mapping[int, int] | None = None,
    vanishing_ranks: Mapping[int, int] | None = None,
) -> ExactSequenceSpec:
    """Window of the sequence H^k(V) -> H^k(V_t) -> H^k_phi(V) -> H^{k+1}(V).

    Covers k from max(0, n-1) to min(2n, n+s+2).  Terms are named
    ``b{k}(V)``, ``b{k}(V_t)`` and ``phi{k}``.  H^k_phi vanishes outside
    [n, n+s]; other unknown ranks stay unknown unless supplied.
    """
    n, s = profile.n, profile.s
    smooth = smooth_table.ranks()
    if len(smooth) != 2 * n + 1:
        raise SequenceError(f"smooth table has {len(smooth)} rows; expected {2 * n + 1} for n={n}")
    known_betti = dict(known_betti or {})
    vanishing_ranks = dict(vanishing_ranks or {})
    for k in known_betti:
        if not 0 <= k <= 2 * n:
            raise SequenceError(f"known b_{k}(V) outside [0, {2 * n}]")
    for k in vanishing_ranks:
        if not (s >= 0 and n <= k <= n + s):
            raise SequenceError(f"H^{k}_phi lies outside the window [n, n+s] and is zero")
    lo, hi = max(0, n - 1), min(2 * n, n + s + 2)
    terms = []
    for k in range(lo, hi + 1):
        name = f"b{k}(V)"
        terms.append(RankTerm(name, known_betti.get(k)))
        terms.append(RankTerm(f"b{k}(V_t)", smooth[k]))
        if s >= 0 and n <= k <= n + s:
            terms.append(RankTerm(f"phi{k}", vanishing_ranks.get(k)))
        else:
            terms.append(RankTerm(f"phi{k}", 0))
    return ExactSequenceSpec(tuple(terms))
