import shutil

import pytest

import hsurf.invariants as inv
from hsurf.corpus import BUNDLED, run_corpus


def failed(results):
    return {r.name for r in results if not r.passed}


def test_bundled_corpus_passes():
    results = run_corpus()
    assert len(results) > 40
    assert failed(results) == set()


def test_corpus_dir_env(tmp_path, monkeypatch):
    dest = tmp_path / "corpus"
    shutil.copytree(BUNDLED, dest)
    (dest / "golden" / "smooth_n2_d3.json").write_text("{}\n")
    monkeypatch.setenv("HSURF_CORPUS_DIR", str(dest))
    assert failed(run_corpus()) == {"smooth_n2_d3"}


def test_sign_flip_breaks_quadric_and_cone_goldens(monkeypatch):
    def flipped(n, d):
        num = (d - 1) ** (n + 2) + (-1) ** n
        q, rem = divmod(num, d)
        assert rem == 0
        return q + (3 * (-1) ** n + 1) // 2

    monkeypatch.setattr(inv, "smooth_betti", flipped)
    bad = failed(run_corpus())
    assert any(name.startswith("quadric_") for name in bad)
    assert "table_cone" in bad


def test_dropping_strictness_breaks_odd_rank_quadric_and_threefold(monkeypatch):
    monkeypatch.setattr(inv, "top_degree_bound", lambda n, s, mu: (1 + mu, 1 + mu))
    bad = failed(run_corpus())
    assert "quadric_n5_q5" in bad
    assert "table_threefold" in bad
    # even-rank quadrics have n + s odd, so strictness never applied to them
    assert "quadric_n3_q4" not in bad
