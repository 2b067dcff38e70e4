"""Milnor numbers of isolated hypersurface germs.

Three routes: the Brieskorn product formula, the weighted-homogeneous
formula prod((d - w_i) / w_i), and a jet-truncation oracle that computes
dim_Q Q[x]/(J(f) + m^N) by exact elimination until it stabilizes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .errors import HsurfError
from .linalg import EchelonBasis
from .poly import MultiPoly, monomials_below, monomials_of_degree, parse_poly

DEFAULT_DEGREE_CAP = 16


class NotStabilized(HsurfError):
    def __init__(self, degree_cap: int):
        super().__init__(
            f"jet oracle did not stabilize below degree cap {degree_cap} "
            "(non-isolated singularity or cap too small)"
        )
        self.degree_cap = degree_cap


class EmptyJacobian(HsurfError):
    pass


class NonIntegerMilnor(HsurfError):
    pass


class CrossCheckMismatch(HsurfError):
    def __init__(self, a: int, b: int):
        super().__init__(f"Milnor number routes disagree: {a} != {b}")
        self.a, self.b = a, b


class InvalidGerm(HsurfError):
    pass


class Method(str, enum.Enum):
    BRIESKORN = "Brieskorn"
    WEIGHTED = "WeightedHomogeneous"
    JET_ORACLE = "JetOracle"
    DIRECT = "Direct"


@dataclass(frozen=True)
class MilnorResult:
    mu: int
    method: Method
    oracle_stabilization_degree: int | None = None

    def __post_init__(self):
        if self.mu < 0:
            raise ValueError("mu must be nonnegative")
        if (self.oracle_stabilization_degree is not None) != (self.method is Method.JET_ORACLE):
            raise ValueError("stabilization degree is recorded for the jet oracle only")

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "method": self.method.value,
            "stabilization_degree": self.oracle_stabilization_degree,
        }


@dataclass(frozen=True)
class GermSpec:
    """Exactly one of the four descriptions of a germ must be set."""

    brieskorn: tuple[int, ...] | None = None
    weights: tuple[int, ...] | None = None
    weighted_degree: int | None = None
    poly: MultiPoly | None = None
    mu: int | None = None

    def __post_init__(self):
        kinds = [
            self.brieskorn is not None,
            self.weights is not None,
            self.poly is not None,
            self.mu is not None,
        ]
        if sum(kinds) != 1:
            raise InvalidGerm("germ spec needs exactly one of brieskorn, weighted, poly, mu")
        if self.brieskorn is not None and any(a < 2 for a in self.brieskorn):
            raise InvalidGerm(f"Brieskorn exponents must be >= 2, got {list(self.brieskorn)}")
        if self.weights is not None:
            if self.weighted_degree is None or self.weighted_degree <= 0:
                raise InvalidGerm("weighted germ needs a positive degree")
            if any(w <= 0 or w > self.weighted_degree for w in self.weights):
                raise InvalidGerm("weights must satisfy 0 < w_i <= d_w")
        if self.poly is not None and self.poly.constant_term() != 0:
            raise InvalidGerm("explicit germ must vanish at the origin")
        if self.mu is not None and self.mu < 0:
            raise InvalidGerm("Milnor number must be nonnegative")

    @property
    def nvars(self) -> int | None:
        if self.brieskorn is not None:
            return len(self.brieskorn)
        if self.weights is not None:
            return len(self.weights)
        if self.poly is not None:
            return len(self.poly.variables)
        return None

    @classmethod
    def from_json(cls, data: dict) -> "GermSpec":
        if not isinstance(data, dict):
            raise InvalidGerm(f"germ spec must be an object, got {data!r}")
        keys = set(data) & {"brieskorn", "weighted", "poly", "mu"}
        if len(keys) != 1:
            raise InvalidGerm(f"germ spec needs exactly one of brieskorn/weighted/poly/mu: {data!r}")
        if "brieskorn" in data:
            return cls(brieskorn=tuple(int(a) for a in data["brieskorn"]))
        if "weighted" in data:
            w = data["weighted"]
            return cls(weights=tuple(int(x) for x in w["w"]), weighted_degree=int(w["d"]))
        if "poly" in data:
            if "vars" not in data:
                raise InvalidGerm("explicit germ needs 'vars'")
            return cls(poly=parse_poly(data["poly"], data["vars"]))
        return cls(mu=int(data["mu"]))

    def to_json(self) -> dict:
        if self.brieskorn is not None:
            return {"brieskorn": list(self.brieskorn)}
        if self.weights is not None:
            return {"weighted": {"w": list(self.weights), "d": self.weighted_degree}}
        if self.poly is not None:
            return {"poly": str(self.poly), "vars": list(self.poly.variables)}
        return {"mu": self.mu}


def milnor_brieskorn(exponents: Sequence[int]) -> MilnorResult:
    if any(a < 2 for a in exponents):
        raise InvalidGerm(f"Brieskorn exponents must be >= 2, got {list(exponents)}")
    return MilnorResult(prod(a - 1 for a in exponents), Method.BRIESKORN)


def milnor_weighted(weights: Sequence[int], degree: int) -> MilnorResult:
    if degree <= 0 or any(w <= 0 or w > degree for w in weights):
        raise InvalidGerm("weights must satisfy 0 < w_i <= d_w")
    value = prod((Fraction(degree - w, w) for w in weights), start=Fraction(1))
    if value.denominator != 1:
        raise NonIntegerMilnor(
            f"prod((d - w_i)/w_i) = {value} is not an integer for weights {list(weights)}, d={degree}"
        )
    return MilnorResult(int(value), Method.WEIGHTED)


def _truncated_ideal(gens: list[MultiPoly], nvars: int, N: int, order: dict) -> EchelonBasis:
    basis = EchelonBasis(order)
    for m in monomials_below(nvars, N):
        for g in gens:
            row = {}
            for gm, c in g.items():
                prodm = tuple(a + b for a, b in zip(gm, m))
                if sum(prodm) < N:
                    row[prodm] = c
            if row:
                basis.add(row)
    return basis


def milnor_jet_oracle(germ: MultiPoly, degree_cap: int = DEFAULT_DEGREE_CAP) -> MilnorResult:
    """dim Q[x]/(J(f) + m^N) for growing N until it provably equals mu.

    Stops at N once the dimension repeats and every degree N-1 monomial lies
    in the truncated ideal, so m^(N-1) is contained in J locally.
    """
    if germ.constant_term() != 0:
        raise InvalidGerm("explicit germ must vanish at the origin")
    if degree_cap < 2:
        raise ValueError("degree_cap must be >= 2")
    gens = [g for g in germ.jacobian() if g]
    if not gens:
        raise EmptyJacobian("germ is constant; its Jacobian ideal is zero")
    nvars = len(germ.variables)
    all_monos = monomials_below(nvars, degree_cap + 1)
    order = {m: i for i, m in enumerate(all_monos)}

    previous = None
    for N in range(1, degree_cap + 1):
        basis = _truncated_ideal(gens, nvars, N, order)
        dim = len(monomials_below(nvars, N)) - len(basis)
        # O/(J+m^N) surjects onto O/(J+m^(N-1)).
        assert previous is None or dim >= previous, (N, dim, previous)
        if previous == dim and all(
            basis.contains({m: 1}) for m in monomials_of_degree(nvars, N - 1)
        ):
            return MilnorResult(dim, Method.JET_ORACLE, oracle_stabilization_degree=N)
        previous = dim
    raise NotStabilized(degree_cap)


def brieskorn_exponents(germ: MultiPoly) -> tuple[int, ...] | None:
    """Exponents if ``germ`` is a sum of pure powers, one per variable, else None."""
    exps = [None] * len(germ.variables)
    if len(germ) != len(germ.variables):
        return None
    for mono, _ in germ.items():
        support = [i for i, e in enumerate(mono) if e]
        if len(support) != 1:
            return None
        i = support[0]
        if exps[i] is not None or mono[i] < 2:
            return None
        exps[i] = mono[i]
    return tuple(exps)


def milnor(spec: GermSpec, degree_cap: int = DEFAULT_DEGREE_CAP) -> MilnorResult:
    if spec.brieskorn is not None:
        return milnor_brieskorn(spec.brieskorn)
    if spec.weights is not None:
        return milnor_weighted(spec.weights, spec.weighted_degree)
    if spec.mu is not None:
        return MilnorResult(spec.mu, Method.DIRECT)
    result = milnor_jet_oracle(spec.poly, degree_cap)
    exps = brieskorn_exponents(spec.poly)
    if exps is not None:
        closed = milnor_brieskorn(exps)
        if closed.mu != result.mu:
            raise CrossCheckMismatch(closed.mu, result.mu)
    return result
