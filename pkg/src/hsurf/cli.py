"""Command-line front end: ``hsurf <command> [options]``.

Exit codes: 0 on success, 1 on invalid input or validation failure,
2 when an internal formula assertion fails.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from . import invariants as inv
from .errors import HsurfError
from .milnor import DEFAULT_DEGREE_CAP, GermSpec, milnor
from .poly import parse_poly
from .profile import (
    CohomologyTable,
    HypersurfaceProfile,
    PlaneCurve,
    ProfileError,
    Variant,
    quadric_profile,
)
from .report import Report, render_json, render_text
from .sequences import ExactSequenceSpec, solve_ranks


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read_json(path: str):
    p = Path(path)
    if not p.is_file():
        raise HsurfError(f"file not found: {path}")
    text = p.read_text()
    if not text.strip():
        raise ProfileError(f"{path}: empty file")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProfileError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_profile(path: str) -> HypersurfaceProfile:
    return HypersurfaceProfile.from_json(_read_json(path))


def load_matrix(path: str) -> list[list]:
    """A JSON list of rows, or whitespace-separated rows of numbers."""
    p = Path(path)
    if not p.is_file():
        raise HsurfError(f"file not found: {path}")
    text = p.read_text().strip()
    if not text:
        raise ProfileError(f"{path}: empty matrix file")
    if text.startswith("["):
        return json.loads(text)
    return [line.split() for line in text.splitlines() if line.strip()]


# -- commands ---------------------------------------------------------------


def cmd_smooth(a) -> Report:
    rep = Report("smooth")
    rep.add("H^k(V_t)", inv.smooth_table(a.n, a.d))
    rep.values = {"n": a.n, "d": a.d, f"b_{a.n}": inv.smooth_betti(a.n, a.d), "chi": inv.smooth_euler(a.n, a.d)}
    rep.extra_notes.append("smooth-euler")
    return rep


def profile_report(profile: HypersurfaceProfile, command: str = "table") -> Report:
    rep = Report(command)
    n, s = profile.n, profile.s
    exact = inv.exact_table(profile)
    bounds = inv.betti_bounds_table(profile, short_circuit=False)
    coh = exact if exact is not None else bounds
    rep.add("H^k(V)", coh)
    if exact is not None and s >= 0:
        rep.add("Betti bounds", bounds)
    van = inv.vanishing_table(profile)
    rep.add("H^k_phi(V)", van)
    rep.add("H_k(V)", inv.homology_table(profile, coh))
    rep.add("H_k^vee(V)", inv.vanishing_homology_table(profile, van))
    rep.values = {"n": n, "d": profile.d, "r": profile.r, "s": s}
    chi = inv.euler_characteristic(profile)
    if chi is not None:
        rep.values["chi"] = chi[0]
        rep.extra_notes.append(chi[1])
    rep.values["vanishing_support"] = inv.vanishing_support(profile).to_json()
    rep.values["regions"] = [
        inv.kato_classify(profile, k).region.value for k in range(2 * n + 1)
    ]
    if exact is None and any(g.rank_hi == inv.INF for g in bounds.rows):
        rep.warnings.append("some middle-window ranks are not bounded by the available theorems")
    if exact is not None and s >= 0 and not all(g.contains(r) for g, r in zip(bounds.rows, exact.ranks())):
        raise AssertionError("exact table falls outside the theorem bounds")
    if exact is not None and chi is not None and exact.euler() != chi[0]:
        raise AssertionError(f"Euler characteristic {exact.euler()} of the table != {chi[0]}")
    return rep


def cmd_table(a) -> Report:
    return profile_report(load_profile(a.profile))


def cmd_quadric(a) -> Report:
    profile = quadric_profile(a.n, load_matrix(a.matrix))
    rep = profile_report(profile, "quadric")
    rep.values["rank"] = profile.quadric_rank
    if profile.s >= 0:
        rep.extra_notes += ["quadric-cone", "quadric-transversal"]
    return rep


def cmd_cone(a) -> Report:
    data = _read_json(a.base)
    if isinstance(data, dict) and "rows" in data:
        base = CohomologyTable.from_json(data)
    elif isinstance(data, dict) and "d" in data:
        base = inv.curve_table(PlaneCurve(int(data["d"]), int(data.get("r", 1)), tuple(data.get("mus", []))))
    else:
        raise inv.MalformedTable("cone base must be a table (with 'rows') or a curve {d, r, mus}")
    rep = Report("cone")
    rep.add("H^k(C)", base)
    rep.add("H^k(V)", inv.cone_table(base))
    return rep


def cmd_lefschetz(a) -> Report:
    rep = Report("lefschetz")
    rep.values = inv.lefschetz_supplement(a.n, a.s, a.r).to_json()
    rep.extra_notes.append("lefschetz-supplement")
    return rep


def cmd_chi(a) -> Report:
    rep = Report("chi")
    if a.two_step is not None:
        if len(a.two_step) != 5:
            raise HsurfError("--two-step needs chi_Y,chi_S1_minus_Y,mu,chi_S0,chi_F0")
        rep.values = {"chi": inv.stratified_euler_two_step(*a.two_step)}
        rep.extra_notes.append("stratified-euler")
        return rep
    if a.profile is None:
        raise HsurfError("chi needs --profile or --two-step")
    profile = load_profile(a.profile)
    inv._check(profile)
    chi = inv.euler_characteristic(profile)
    if chi is None:
        exact = inv.exact_table(profile)
        if exact is None:
            raise HsurfError("no closed form for chi applies to this profile; supply chi_override")
        rep.values = {"chi": exact.euler()}
    else:
        rep.values = {"chi": chi[0]}
        rep.extra_notes.append(chi[1])
    return rep


def cmd_milnor(a) -> Report:
    if a.brieskorn is not None:
        spec = GermSpec(brieskorn=tuple(a.brieskorn))
    elif a.weights is not None:
        if a.wdeg is None:
            raise HsurfError("--weights needs --wdeg")
        spec = GermSpec(weights=tuple(a.weights), weighted_degree=a.wdeg)
    elif a.germ is not None:
        names = a.vars.split(",") if a.vars else sorted(set(re.findall(r"[A-Za-z_]\w*", a.germ)))
        spec = GermSpec(poly=parse_poly(a.germ, names))
    else:
        raise HsurfError("milnor needs --germ, --brieskorn or --weights")
    rep = Report("milnor")
    rep.values = milnor(spec, a.cap).to_json()
    return rep


def cmd_solve_seq(a) -> Report:
    rep = Report("solve-seq")
    seq = ExactSequenceSpec.from_text(a.seq)
    rep.values = {"sequence": str(seq), **solve_ranks(seq).to_json()}
    rep.extra_notes.append("specialization-solve")
    return rep


def cmd_corpus(a) -> Report:
    from .corpus import run_corpus

    results = run_corpus(a.dir)
    rep = Report("corpus")
    failed = [r.name for r in results if not r.passed]
    rep.values = {
        "total": len(results),
        "passed": len(results) - len(failed),
        "failed": failed,
    }
    for r in results:
        if not r.passed:
            rep.warnings.append(f"{r.name}: {r.detail}")
    return rep


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="hsurf", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("smooth", parents=[common], help="smooth hypersurface table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("table", parents=[common], help="tables for a JSON profile")
    p.add_argument("--profile", required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("quadric", parents=[common], help="quadric from its symmetric matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_quadric)

    p = sub.add_parser("cone", parents=[common], help="projective cone over a plane curve")
    p.add_argument("--base", required=True)
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("lefschetz", parents=[common], help="vanishing ranges of H^k(V, V cap H)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.set_defaults(func=cmd_lefschetz)

    p = sub.add_parser("chi", parents=[common], help="Euler characteristic")
    p.add_argument("--profile")
    p.add_argument("--two-step", type=_int_list, metavar="Y,S1,MU,S0,F0")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("milnor", parents=[common], help="Milnor number of a germ")
    p.add_argument("--germ")
    p.add_argument("--vars")
    p.add_argument("--brieskorn", type=_int_list)
    p.add_argument("--weights", type=_int_list)
    p.add_argument("--wdeg", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_DEGREE_CAP)
    p.set_defaults(func=cmd_milnor)

    p = sub.add_parser("solve-seq", parents=[common], help="rank intervals in an exact sequence")
    p.add_argument("--seq", required=True)
    p.set_defaults(func=cmd_solve_seq)

    p = sub.add_parser("corpus", parents=[common], help="run the golden regression corpus")
    p.add_argument("--dir", help="corpus directory (default: $HSURF_CORPUS_DIR or the bundled one)")
    p.set_defaults(func=cmd_corpus)
    return parser


@dataclass
class Outcome:
    code: int
    stdout: str
    stderr: str


def execute(argv: list[str]) -> Outcome:
    """Run one command and capture what would be printed."""
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "json")
    quiet = getattr(args, "quiet", False)
    try:
        report = args.func(args)
        text = render_json(report) if fmt == "json" else render_text(report)
        code = 0
        if args.command == "corpus" and report.values["failed"]:
            code = 1
        return Outcome(code, "" if quiet else text, "")
    except inv.InvalidProfile as exc:
        msg = "".join(f"error: {v}\n" for v in exc.violations)
        return Outcome(1, "", msg)
    except HsurfError as exc:
        return Outcome(1, "", f"error: {exc}\n")
    except AssertionError as exc:
        return Outcome(2, "", f"internal assertion failed: {exc}\n")


def main(argv: list[str] | None = None) -> int:
    out = execute(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out.stdout)
    sys.stderr.write(out.stderr)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
