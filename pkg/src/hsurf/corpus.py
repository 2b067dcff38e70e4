"""Golden-file regression corpus over the worked examples.

Layout of a corpus directory::

    cases.json          [{"name": ..., "argv": [...]}, ...]; "{corpus}" expands to the directory
    inputs/             profiles, matrices and curve files used by the cases
    golden/<name>.json  {"exit_code": int, "output": <JSON report or null>}

The directory defaults to the bundled one and can be moved with
``HSURF_CORPUS_DIR``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

BUNDLED = Path(__file__).parent / "corpus"


@dataclass(frozen=True)
class CaseResult:
    name: str
    passed: bool
    detail: str = ""


def corpus_dir(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get("HSURF_CORPUS_DIR")
    return Path(env) if env else BUNDLED


def load_cases(root: Path) -> list[dict]:
    return json.loads((root / "cases.json").read_text())


def _expand(argv: list[str], root: Path) -> list[str]:
    return [a.replace("{corpus}", str(root)) for a in argv]


def evaluate(case: dict, root: Path) -> dict:
    from .cli import execute

    out = execute(_expand(case["argv"], root) + ["--format", "json"])
    return {
        "exit_code": out.code,
        "output": json.loads(out.stdout) if out.stdout else None,
    }


def dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def run_corpus(directory: str | os.PathLike | None = None) -> list[CaseResult]:
    root = corpus_dir(directory)
    results = []
    for case in load_cases(root):
        name = case["name"]
        golden_path = root / "golden" / f"{name}.json"
        if not golden_path.is_file():
            results.append(CaseResult(name, False, "golden file missing"))
            continue
        try:
            got = evaluate(case, root)
        except Exception as exc:  # failures are data here
            results.append(CaseResult(name, False, f"{type(exc).__name__}: {exc}"))
            continue
        want = golden_path.read_text()
        if dump(got) == want:
            results.append(CaseResult(name, True))
        else:
            expected = json.loads(want)
            if got["exit_code"] != expected.get("exit_code"):
                detail = f"exit code {got['exit_code']} != {expected.get('exit_code')}"
            else:
                detail = "output differs from golden"
            results.append(CaseResult(name, False, detail))
    return results


def regenerate(directory: str | os.PathLike | None = None) -> list[str]:
    root = corpus_dir(directory)
    (root / "golden").mkdir(exist_ok=True)
    written = []
    for case in load_cases(root):
        path = root / "golden" / f"{case['name']}.json"
        path.write_text(dump(evaluate(case, root)))
        written.append(case["name"])
    return written
