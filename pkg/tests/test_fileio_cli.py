import json
import subprocess
import sys

import pytest

from torusrig.catalog import build_H
from torusrig.complexes import cut_hole, rectangular_torus
from torusrig.corpus import CorpusSpec, corpus_records
from torusrig.fileio import (dumps_record, hole_to_record, record_to_hole,
                             to_dot)


def run_cli(args, stdin=None):
    return subprocess.run([sys.executable, "-m", "torusrig.cli", *args],
                          capture_output=True, text=True, input=stdin)


def test_record_round_trip():
    hole = cut_hole(rectangular_torus(3, 4), [0, 1, 2])
    rec = hole_to_record(hole)
    again = record_to_hole(rec)
    assert again.graph == hole.graph
    assert again.boundary_edges == hole.boundary_edges
    assert hole_to_record(again) == rec


def test_record_round_trip_with_keep_edges():
    h4 = build_H(4)
    rec = hole_to_record(h4)
    assert any(isinstance(h, dict) for h in rec["holes"])
    again = record_to_hole(rec)
    assert again.graph == h4.graph


def test_grid_provenance_detected():
    hole = cut_hole(rectangular_torus(3, 4), [0])
    rec = hole_to_record(hole)
    again = record_to_hole(rec)
    assert again.torus.provenance is not None
    assert (again.torus.provenance.r, again.torus.provenance.s) == (3, 4)


def test_dot_export_styles_boundary():
    hole = cut_hole(rectangular_torus(3, 3), [0])
    dot = to_dot(hole)
    assert dot.startswith("graph G {")
    assert dot.count("style=bold") == len(hole.boundary_edges)


def test_corpus_determinism():
    spec = CorpusSpec(seed=5, count=6)
    a = "\n".join(dumps_record(r) for r in corpus_records(spec))
    b = "\n".join(dumps_record(r) for r in corpus_records(spec))
    assert a == b


def test_corpus_metadata_identity():
    spec = CorpusSpec(seed=5, count=6, boundary_lengths=(7, 9, 11))
    for rec in corpus_records(spec):
        assert rec["meta"]["freedom"] == rec["meta"]["boundary_length"] - 3


def test_cli_check_exit_codes(tmp_path):
    h1 = tmp_path / "h1.json"
    h1.write_text(json.dumps(hole_to_record(build_H(1))))
    r = run_cli(["check", str(h1)])
    assert r.returncode == 0
    assert json.loads(r.stdout)["status"] == "Tight"

    # a trivially cut torus keeps all 3|V| edges, so the whole graph violates
    flat = tmp_path / "flat.json"
    flat.write_text(json.dumps(hole_to_record(
        cut_hole(rectangular_torus(3, 3), [0]))))
    r = run_cli(["check", str(flat)])
    assert r.returncode == 2
    assert json.loads(r.stdout)["status"] == "Violation"


def test_cli_rank_and_classify(tmp_path):
    pth = tmp_path / "h4.json"
    pth.write_text(json.dumps(hole_to_record(build_H(4))))
    r = run_cli(["rank", str(pth)])
    assert r.returncode == 0
    body = json.loads(r.stdout)
    assert body["minimally_rigid"] is True
    r = run_cli(["classify", str(pth)])
    assert json.loads(r.stdout)["word"] == "e3e4"


def test_cli_pipeline_gen_check_reduce():
    gen = run_cli(["gen", "--seed", "3", "--count", "4", "--grids", "3x4"])
    assert gen.returncode == 0
    lines = [ln for ln in gen.stdout.splitlines() if ln]
    assert len(lines) == 4
    checked = run_cli(["batch-check"], stdin=gen.stdout)
    assert checked.returncode == 0
    for gen_line, chk_line in zip(lines, checked.stdout.splitlines()):
        rec, chk = json.loads(gen_line), json.loads(chk_line)
        assert rec["meta"]["status"] == chk["status"]
        if chk["status"] == "Tight":
            reduced = run_cli(["reduce", "-", "--validate"], stdin=gen_line)
            assert reduced.returncode == 0
            body = json.loads(reduced.stdout)
            assert body["leaf"]["vertices"] >= 4


def test_cli_certify_h17(tmp_path):
    pth = tmp_path / "h17.json"
    pth.write_text(json.dumps(hole_to_record(build_H(17))))
    r = run_cli(["certify", str(pth), "--validate"])
    assert r.returncode == 0
    assert len(json.loads(r.stdout)["splits"]) == 1


def test_cli_catalog_lists_17():
    r = run_cli(["catalog"])
    lines = [json.loads(ln) for ln in r.stdout.splitlines() if ln]
    assert len(lines) == 17
    assert lines[0]["word"] == "v9" and lines[16]["word"] == "ef1ge1fg1"


def test_cli_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": 4, "faces": [[0, 1, 2]], "holes": []}))
    r = run_cli(["check", str(bad)])
    assert r.returncode == 1
    assert "error" in r.stderr
