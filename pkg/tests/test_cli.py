import json
import math

import pytest

from strata.cli import main
from strata.serialize import (load_complex, load_stratification,
                              stratification_report)
from strata.sheaves import LocalHomologySheaf, covering_delta_map
from strata.shapes import AWNING_MAX_SIMPLICES
from strata.stratify import is_constructible
from strata.linalg import FieldSpec


@pytest.fixture()
def awning_json(tmp_path):
    path = tmp_path / "complex.json"
    path.write_text(json.dumps({"maximal_simplices": AWNING_MAX_SIMPLICES}))
    return str(path)


@pytest.fixture()
def circle_inputs(tmp_path):
    n = 60
    pts = "\n".join(f"{math.cos(2*math.pi*k/n)},{math.sin(2*math.pi*k/n)}"
                    for k in range(n))
    ppath = tmp_path / "points.csv"
    ppath.write_text(pts + "\n")
    sets = {}
    for a in range(4):
        lo, hi = (a - 0.85) / 4, (a + 0.85) / 4
        sets[f"arc{a}"] = [k for k in range(n)
                           if any(lo <= k / n + s <= hi for s in (-1, 0, 1))]
    cpath = tmp_path / "cover.json"
    cpath.write_text(json.dumps({"sets": sets}))
    return str(ppath), str(cpath)


def test_stratify_complex_json(awning_json, tmp_path, capsys):
    out = tmp_path / "out.json"
    code = main(["stratify", "complex", awning_json, "--sheaf", "local-homology",
                 "--output", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["filtration_dim"] == 2
    strata = {entry["dim"]: entry["pieces"] for entry in payload["strata"]}
    assert sorted(sum(strata[0], [])) == [[0], [1]]
    assert len(payload["delta_edges"]) == 28


def test_stratify_complex_text_input(tmp_path):
    path = tmp_path / "complex.txt"
    path.write_text("# comment\n0 1 3\n0 1 2\n0 2 3\n0 1 4\n")
    out = tmp_path / "out.json"
    assert main(["stratify", "complex", str(path), "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["filtration_dim"] == 2


def test_stratify_complex_homogeneous_flag(awning_json, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["stratify", "complex", awning_json, "--output", str(out1)]) == 0
    assert main(["stratify", "complex", awning_json, "--homogeneous",
                 "--output", str(out2)]) == 0
    assert out1.read_text() == out2.read_text()


def test_stratify_complex_dot(awning_json, capsys):
    assert main(["stratify", "complex", awning_json, "--format", "dot"]) == 0
    text = capsys.readouterr().out
    assert text.startswith("graph hasse {")
    assert "style=dashed" in text and "style=solid" in text


def test_delta_subcommand(awning_json, tmp_path):
    out = tmp_path / "delta.json"
    assert main(["delta", awning_json, "--sheaf", "max-elements",
                 "--format", "json", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert len(payload["delta_edges"]) == 28
    dot = tmp_path / "delta.dot"
    assert main(["delta", awning_json, "--output", str(dot)]) == 0
    assert dot.read_text().startswith("graph hasse {")


def test_stratify_nerve(circle_inputs, tmp_path):
    ppath, cpath = circle_inputs
    out = tmp_path / "nerve.json"
    code = main(["stratify", "nerve", ppath, cpath, "--max-degree", "2",
                 "--output", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["cover_sets"] == ["arc0", "arc1", "arc2", "arc3"]
    assert payload["filtration_dim"] == 1
    top = next(e for e in payload["strata"] if e["dim"] == 1)
    assert sum(len(p) for p in top["pieces"]) == 8


def test_mapper_subcommand(tmp_path):
    rows = []
    for k in range(120):
        t = 2 * math.pi * k / 120
        rows.append(f"{math.cos(t)},{math.sin(t)},{2*math.sin(t)}")
    ppath = tmp_path / "pts.csv"
    ppath.write_text("\n".join(rows) + "\n")
    out = tmp_path / "mapper.json"
    code = main(["mapper", str(ppath), "--dims", "2", "--function-column", "2",
                 "--intervals=-2.2:-0.5,-1:1,0.5:2.2", "--radius", "0.3",
                 "--max-degree", "2", "--output", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert set(payload) == {"cover", "nerve", "stratification"}
    # a circle filtered by height: 2 end fibers, 2 middle components: 4-cycle
    assert len(payload["nerve"]["simplices"]) == 8


def test_round_trip_revalidates(awning_json, tmp_path):
    out = tmp_path / "out.json"
    main(["stratify", "complex", awning_json, "--output", str(out)])
    payload = json.loads(out.read_text())
    space = load_complex(awning_json)
    strat, dm = load_stratification(space, payload)
    assert is_constructible(space, dm, strat)
    assert stratification_report(strat, dm) == payload


def test_determinism(awning_json, tmp_path):
    outs = []
    for name in ("r1.json", "r2.json"):
        path = tmp_path / name
        main(["stratify", "complex", awning_json, "--output", str(path)])
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_threads_flag_and_env(awning_json, tmp_path, monkeypatch):
    base = tmp_path / "base.json"
    main(["stratify", "complex", awning_json, "--output", str(base)])
    threaded = tmp_path / "threaded.json"
    main(["stratify", "complex", awning_json, "--threads", "4",
          "--output", str(threaded)])
    assert base.read_bytes() == threaded.read_bytes()
    monkeypatch.setenv("STRATA_THREADS", "3")
    via_env = tmp_path / "env.json"
    main(["stratify", "complex", awning_json, "--output", str(via_env)])
    assert base.read_bytes() == via_env.read_bytes()


def test_input_errors_exit_2(tmp_path, capsys):
    missing = str(tmp_path / "nope.json")
    assert main(["stratify", "complex", missing]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{\"wrong\": []}")
    assert main(["stratify", "complex", str(bad)]) == 2
    dupe = tmp_path / "dupe.json"
    dupe.write_text(json.dumps({"maximal_simplices": [[0, 0, 1]]}))
    assert main(["stratify", "complex", str(dupe)]) == 2
    capsys.readouterr()


def test_nerve_monomial_flags_are_exclusive(circle_inputs, tmp_path):
    ppath, cpath = circle_inputs
    assert main(["stratify", "nerve", ppath, cpath]) == 2
    mpath = tmp_path / "monomials.json"
    mpath.write_text(json.dumps([[0, 0], [1, 0], [0, 1]]))
    assert main(["stratify", "nerve", ppath, cpath, "--max-degree", "2",
                 "--monomials", str(mpath)]) == 2
    assert main(["stratify", "nerve", ppath, cpath,
                 "--monomials", str(mpath)]) == 0
