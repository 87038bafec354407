import json

import pytest

from tuttelab import cli
from tuttelab.generate import all_maps


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_count_only(capsys):
    code, out, _ = run_cli(capsys, "gen", "maps", "--n", "2", "--count-only")
    assert code == 0 and out == "9\n"


def test_gen_listing_formats(capsys):
    code, out, _ = run_cli(capsys, "gen", "maps", "--n", "1")
    assert code == 0 and len(out.splitlines()) == 2
    code, out, _ = run_cli(capsys, "gen", "maps", "--n", "1", "--json")
    assert code == 0 and len(json.loads(out)) == 2
    code, out, _ = run_cli(capsys, "gen", "maps", "--n", "1", "--csv")
    assert code == 0
    assert out.splitlines()[0] == "alpha,sigma,root"


def test_gen_unknown_family(capsys):
    code, _, err = run_cli(capsys, "gen", "widgets", "--n", "1")
    assert code == cli.EXIT_UNKNOWN and "unknown family" in err


def test_gen_cap_exceeded(capsys):
    code, _, err = run_cli(capsys, "gen", "maps", "--n", "9", "--count-only")
    assert code == cli.EXIT_CAP and "cap" in err


def test_tutte_outputs(tmp_path, capsys):
    mapfile = tmp_path / "m.json"
    mapfile.write_text(all_maps(2)[0].to_json())
    code, out, _ = run_cli(capsys, "tutte", str(mapfile))
    assert code == 0 and out.startswith("tutte: ")
    code, out, _ = run_cli(capsys, "tutte", str(mapfile), "--potts")
    assert code == 0 and out.startswith("potts: ")
    code, out, _ = run_cli(capsys, "tutte", str(mapfile), "--special",
                           "--json")
    assert code == 0
    assert set(json.loads(out)) == {"spanning_tree_count", "chromatic_poly",
                                    "bipolar_count"}


def test_tutte_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code, _, err = run_cli(capsys, "tutte", str(bad))
    assert code == cli.EXIT_BAD_FILE and "cannot read" in err
    code, _, err = run_cli(capsys, "tutte", str(tmp_path / "missing.json"))
    assert code == cli.EXIT_BAD_FILE


def test_bijection_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "bijection", "roundtrip", "psi",
                           "--max-size", "2")
    assert code == 0 and "pass" in out
    code, _, err = run_cli(capsys, "bijection", "roundtrip", "nope",
                           "--max-size", "1")
    assert code == cli.EXIT_UNKNOWN


def test_series_expand(capsys):
    code, out, _ = run_cli(capsys, "series", "expand", "--eq", "MAPS_1CAT",
                           "--order", "2")
    assert code == 0
    assert out.splitlines()[0] == "t^0: 1"
    code, out, _ = run_cli(capsys, "series", "expand", "--eq", "POTTS_MAPS",
                           "--order", "1", "--set", "q=2,nu=5/2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["equation"] == "POTTS_MAPS" and data["order"] == 1


def test_series_unknown_equation(capsys):
    code, _, err = run_cli(capsys, "series", "expand", "--eq", "NOPE",
                           "--order", "2")
    assert code == cli.EXIT_UNKNOWN and "unknown equation" in err


def test_series_bad_set(capsys):
    code, _, err = run_cli(capsys, "series", "expand", "--eq", "POTTS_MAPS",
                           "--order", "1", "--set", "q2")
    assert code == cli.EXIT_UNKNOWN


def test_formula(capsys):
    code, out, _ = run_cli(capsys, "formula", "tree_rooted", "1", "1")
    assert code == 0 and out == "6\n"
    code, _, err = run_cli(capsys, "formula", "nope", "1")
    assert code == cli.EXIT_UNKNOWN
    code, _, err = run_cli(capsys, "formula", "maps", "1", "2")
    assert code == cli.EXIT_FAIL and "bad arguments" in err


def test_verify_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "counts")
    assert code == 0 and out.endswith("12/12 checks passed\n")
    code, _, err = run_cli(capsys, "verify", "nosuite")
    assert code == cli.EXIT_UNKNOWN and "known suites" in err


def test_verify_output_deterministic(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "verify", "counts", "--json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_requires_subcommand(capsys):
    with pytest.raises(SystemExit):
        cli.main([])
