"""Rebuild the bundled corpus inputs, case list and golden reports.

Run after an intentional output change, then review the diff of
src/hsurf/corpus/golden before committing it.

    python3 scripts/regenerate_goldens.py [--dir DIR]
"""

import argparse
import json
from pathlib import Path

from hsurf.corpus import BUNDLED, dump, regenerate


def line(i, dim, germ):
    return {"label": i, "dim": dim, "transversal": germ}


def profiles():
    nodes = [{"label": f"p{i}", "germ": {"brieskorn": [2, 2]}} for i in range(3)]
    threefold = {
        "schema": 1, "n": 3, "d": 3, "r": 1, "s": 1,
        "strata": [
            line("S1", 1, {"brieskorn": [2, 3, 3]}),
            # F_0 is a bouquet of two 3-spheres
            line("S0", 0, {"mu": 2}),
        ],
    }
    return {
        "threefold.json": threefold,
        "threefold_qhm.json": {**threefold, "q_homology_manifold": True, "chi_override": 4},
        "triangle.json": {"schema": 1, "n": 1, "d": 3, "r": 3, "s": 0, "isolated": nodes},
        "nodal_cubic.json": {"schema": 1, "n": 1, "d": 3, "s": 0, "isolated": nodes[:1]},
        "cuspidal_cubic.json": {
            "schema": 1, "n": 1, "d": 3, "s": 0,
            "isolated": [{"label": "c", "germ": {"poly": "y^2 - x^3", "vars": ["x", "y"]}}],
        },
        "cone.json": {
            "schema": 1, "n": 2, "d": 3, "r": 3, "s": 1,
            "strata": [line(f"L{i}", 1, {"brieskorn": [2, 2]}) for i in range(3)]
            + [line("vertex", 0, {"poly": "x*y*z", "vars": ["x", "y", "z"]})],
            "cone_over_curve": {"d": 3, "r": 3, "mus": [1, 1, 1]},
        },
        "smooth_cubic_surface.json": {"schema": 1, "n": 2, "d": 3, "s": -1},
        "bad_components.json": {
            "schema": 1, "n": 2, "d": 3, "r": 3, "s": 0,
            "isolated": nodes,
        },
        "empty.json": None,
        "triangle_curve.json": {"d": 3, "r": 3, "mus": [1, 1, 1]},
        "conic.json": {"d": 2, "r": 1, "mus": []},
        "line.json": {"d": 1, "r": 1, "mus": []},
    }


def diag(n, q):
    return [[1 if i == j and i < q else 0 for j in range(n + 2)] for i in range(n + 2)]


def build(root: Path):
    inputs = root / "inputs"
    inputs.mkdir(parents=True, exist_ok=True)
    for name, data in profiles().items():
        (inputs / name).write_text("" if data is None else dump(data))
    cases = []

    def case(name, *argv):
        cases.append({"name": name, "argv": list(argv)})

    for n, d in [(1, 3), (2, 3), (3, 3), (2, 4), (4, 2), (3, 1)]:
        case(f"smooth_n{n}_d{d}", "smooth", "--n", str(n), "--d", str(d))
    for n in range(3, 9):
        for q in range(4, n + 3):
            path = inputs / f"quadric_n{n}_q{q}.json"
            path.write_text(json.dumps(diag(n, q)) + "\n")
            case(f"quadric_n{n}_q{q}", "quadric", "--n", str(n), "--matrix", f"{{corpus}}/inputs/{path.name}")
    # a non-diagonal rank 4 matrix congruent to diag(1,1,1,1,0)
    mixed = [[1, 1, 0, 0, 0], [1, 2, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 0]]
    (inputs / "quadric_n3_mixed.json").write_text(json.dumps(mixed) + "\n")
    case("quadric_n3_mixed", "quadric", "--n", "3", "--matrix", "{corpus}/inputs/quadric_n3_mixed.json")

    for name in ["threefold", "threefold_qhm", "triangle", "nodal_cubic", "cuspidal_cubic", "cone",
                 "smooth_cubic_surface", "bad_components", "empty"]:
        case(f"table_{name}", "table", "--profile", f"{{corpus}}/inputs/{name}.json")
    for name in ["triangle_curve", "conic", "line"]:
        case(f"cone_{name}", "cone", "--base", f"{{corpus}}/inputs/{name}.json")
    for name in ["threefold_qhm", "cone", "triangle"]:
        case(f"chi_{name}", "chi", "--profile", f"{{corpus}}/inputs/{name}.json")
    case("chi_two_step_as_stated", "chi", "--two-step=-6,-1,4,1,-1")
    case("chi_two_step_recomputed", "chi", "--two-step=-6,-2,4,1,-1")
    for n, s, r in [(3, -1, 1), (3, 1, 1), (2, 1, 3)]:
        case(f"lefschetz_n{n}_s{s}_r{r}", "lefschetz", "--n", str(n), f"--s={s}", "--r", str(r))
    case("milnor_brieskorn_233", "milnor", "--brieskorn", "2,3,3")
    case("milnor_a1", "milnor", "--germ", "x^2 + y^2 + z^2", "--vars", "x,y,z")
    case("milnor_d4", "milnor", "--germ", "x^2*y + y^3", "--vars", "x,y")
    case("solve_seq_basic", "solve-seq", "--seq", "0,a,7,2,b,0")
    case("solve_seq_infeasible", "solve-seq", "--seq", "0,1,1,1,0")
    (root / "cases.json").write_text(dump(cases))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dir", type=Path, default=BUNDLED)
    args = ap.parse_args()
    build(args.dir)
    names = regenerate(args.dir)
    print(f"wrote {len(names)} golden files to {args.dir / 'golden'}")


if __name__ == "__main__":
    main()
