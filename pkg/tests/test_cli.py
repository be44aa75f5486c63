"""Command-line interface: the description grammar, report schema, exit
codes, and the sections subcommand."""

import json

import pytest

from liestruct import JacobiError, LiestructError, __version__, from_dict, parse_algebra, to_dict
from liestruct.cli import main, parse_coefficient_algebra, run
from liestruct.errors import SpecParseError


# ---------------------------------------------------------------------------
# description grammar
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "spec, dim",
    [
        ("sl:2", 3),
        ("sl:3", 8),
        ("gl:2", 4),
        ("so:3", 3),
        ("sp:4", 10),
        ("su:2", 3),
        ("u:2", 4),
        ("ex:2dim", 2),
        ("cur:sl:2,jet:1,3", 9),
        ("cur:sl:2,points:2", 6),
        ("sum:sl:2+sl:2", 6),
        ("sum:sl:2+ex:2dim", 5),
        ("sum:cur:sl:2,jet:1,2+so:3", 9),
    ],
)
def test_parse_algebra_dimensions(spec, dim):
    assert parse_algebra(spec).dim == dim


def test_parse_algebra_whitespace_tolerated():
    assert parse_algebra("  sl:2 ").dim == 3


@pytest.mark.parametrize(
    "spec",
    [
        "e8:8",
        "sl:x",
        "sl:2junk",
        "ex:3dim",
        "cur:sl:2",
        "cur:sl:2,ring:3",
        "sum:sl:2",
        "@",
        "",
    ],
)
def test_parse_algebra_rejects(spec):
    with pytest.raises(SpecParseError):
        parse_algebra(spec)


def test_parse_error_carries_position():
    with pytest.raises(SpecParseError) as exc:
        parse_algebra("sum:sl:2&sl:2")
    assert exc.value.position == 8


def test_parse_five_dim_raises_jacobi():
    with pytest.raises(JacobiError) as exc:
        parse_algebra("ex:5dim")
    assert exc.value.triple == (0, 1, 2)


def test_parse_coefficient_algebra():
    assert parse_coefficient_algebra("jet:1,3").dim == 3
    assert parse_coefficient_algebra("points:4").dim == 4
    with pytest.raises(SpecParseError):
        parse_coefficient_algebra("jet:1")
    with pytest.raises(SpecParseError):
        parse_coefficient_algebra("field:2")


def test_parse_algebra_from_file(tmp_path, heisenberg3):
    path = tmp_path / "h3.json"
    path.write_text(json.dumps(to_dict(heisenberg3)))
    g = parse_algebra("@" + str(path))
    assert g.dim == 3 and g == heisenberg3


def test_parse_algebra_missing_file(tmp_path):
    with pytest.raises(SpecParseError, match="cannot read"):
        parse_algebra("@" + str(tmp_path / "nope.json"))


def test_parse_algebra_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(SpecParseError, match="invalid JSON"):
        parse_algebra("@" + str(path))


# ---------------------------------------------------------------------------
# run(): the report structure
# ---------------------------------------------------------------------------

def test_run_report_schema():
    rep = run("sl:2", ["flags", "der", "cent"])
    assert rep["schema"] == 1
    assert rep["tool"] == "liestruct"
    assert rep["version"] == __version__
    assert rep["request"] == {"algebra": "sl:2", "analyses": ["flags", "der", "cent"]}
    assert rep["algebra"]["dim"] == 3
    assert rep["algebra"]["flags"]["semisimple"]
    rebuilt = from_dict(rep["algebra"]["definition"])
    assert rebuilt.dim == 3
    assert isinstance(rep["timing_seconds"], float)
    # analyses come back as an ordered list, one entry per request
    assert [a["name"] for a in rep["analyses"]] == ["flags", "der", "cent"]
    assert all(a["ok"] for a in rep["analyses"])


def test_run_analysis_values():
    rep = run("sl:2", ["der", "cent", "jspace", "split", "casimir"])
    by_name = {a["name"]: a for a in rep["analyses"]}
    assert by_name["der"]["dim"] == 3 and by_name["der"]["inner_dim"] == 3
    assert by_name["der"]["outer_dim"] == 0
    assert by_name["cent"]["dim"] == 1
    assert by_name["jspace"]["dim"] == 0
    assert by_name["split"] == {"name": "split", "ok": True, "n_dim": 0, "s_dim": 1}
    assert by_name["casimir"]["is_identity"] and by_name["casimir"]["in_centroid"]


def test_run_cent_of_two_dim_example():
    rep = run("ex:2dim", ["cent", "der"])
    by_name = {a["name"]: a for a in rep["analyses"]}
    assert by_name["cent"]["dim"] == 1
    # every derivation is inner: dim ad(g) = dim g - dim z(g) = 2
    assert by_name["der"]["dim"] == 2 and by_name["der"]["inner_dim"] == 2


def test_run_decompose_sum():
    rep = run("sum:sl:2+sl:2", ["decompose"])
    entry = rep["analyses"][0]
    assert entry["ok"]
    assert sorted(entry["ideal_dims"]) == [3, 3]
    assert entry["status"] == "split"
    assert entry["blocks"] == [[1, 0], [0, 1]]


def test_run_complex_analysis():
    rep = run("sl:2", ["complex"])
    assert rep["analyses"][0] == {"name": "complex", "ok": True, "found": False}


def test_run_failed_analysis_is_reported_not_raised():
    # the Casimir construction needs a nondegenerate Killing form
    rep = run("ex:2dim", ["casimir"])
    entry = rep["analyses"][0]
    assert entry["ok"] is False
    assert "degenerate" in entry["error"]


def test_run_rejects_unknown_analysis():
    with pytest.raises(SpecParseError, match="unknown analysis"):
        run("sl:2", ["eigenvalues"])


def test_run_is_deterministic():
    a = run("cur:sl:2,jet:1,2", ["flags", "der", "cent", "decompose"])
    b = run("cur:sl:2,jet:1,2", ["flags", "der", "cent", "decompose"])
    a.pop("timing_seconds")
    b.pop("timing_seconds")
    assert a == b


# ---------------------------------------------------------------------------
# main(): exit codes and output
# ---------------------------------------------------------------------------

def test_main_success_json(capsys):
    code = main(["--algebra", "sl:2", "--analyze", "der,cent"])
    assert code == 0
    out = capsys.readouterr().out
    rep = json.loads(out)
    assert [a["name"] for a in rep["analyses"]] == ["der", "cent"]
    assert rep["analyses"][1]["dim"] == 1


def test_main_no_analyses_still_reports(capsys):
    code = main(["--algebra", "so:3"])
    assert code == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["analyses"] == []
    assert rep["algebra"]["dim"] == 3


def test_main_jacobi_failure_exit_1(capsys):
    code = main(["--algebra", "ex:5dim", "--analyze", "flags"])
    assert code == 1
    err = capsys.readouterr().err
    assert "(0, 1, 2)" in err  # names the offending basis triple


def test_main_unknown_builder_exit_2(capsys):
    code = main(["--algebra", "e8:8", "--analyze", "flags"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_main_unknown_analysis_exit_2(capsys):
    code = main(["--algebra", "sl:2", "--analyze", "eigenvalues"])
    assert code == 2
    assert "unknown analysis" in capsys.readouterr().err


def test_main_missing_algebra_exit_2(capsys):
    code = main([])
    assert code == 2
    assert "--algebra is required" in capsys.readouterr().err


def test_main_failed_analysis_exit_1(capsys):
    code = main(["--algebra", "ex:2dim", "--analyze", "casimir"])
    assert code == 1
    rep = json.loads(capsys.readouterr().out)
    assert rep["analyses"][0]["ok"] is False


def test_main_text_format(capsys):
    code = main(["--algebra", "sl:2", "--analyze", "der,cent", "--format", "text"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("algebra: sl:2 (dim 3)")
    assert "semisimple" in out
    assert "der" in out and "ok" in out


def test_main_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["--algebra", "sl:2", "--analyze", "cent", "--out", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    rep = json.loads(target.read_text())
    assert rep["analyses"][0]["dim"] == 1


def test_main_file_roundtrip(tmp_path, capsys, heisenberg3):
    path = tmp_path / "h3.json"
    path.write_text(json.dumps(to_dict(heisenberg3)))
    code = main(["--algebra", "@" + str(path), "--analyze", "flags,der"])
    assert code == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["algebra"]["flags"]["nilpotent"]
    by_name = {a["name"]: a for a in rep["analyses"]}
    assert by_name["der"]["dim"] == 6


def test_main_help_exits_zero(capsys):
    code = main(["--help"])
    assert code == 0
    assert "liestruct" in capsys.readouterr().out


# ---------------------------------------------------------------------------
# sections: both spellings
# ---------------------------------------------------------------------------

def test_sections_subcommand_xder(capsys):
    code = main(["sections", "--check", "xder", "--k", "sl:2", "--m", "2"])
    assert code == 0
    rep = json.loads(capsys.readouterr().out)
    entry = rep["analyses"][0]
    assert entry["name"] == "sections:xder"
    assert entry["dim"] == entry["expected"] == 5


def test_sections_subcommand_centroid(capsys):
    code = main(
        ["sections", "--check", "centroid", "--k", "sl:2", "--A", "jet:1,3"]
    )
    assert code == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["analyses"][0]["full_dim"] == 3


def test_sections_subcommand_multinom(capsys):
    code = main(["sections", "--check", "multinom", "--k", "sl:2"])
    assert code == 0
    rep = json.loads(capsys.readouterr().out)
    entry = rep["analyses"][0]
    assert entry["ok"] and entry["cases"] == 83


def test_sections_subcommand_jetauto(capsys):
    code = main(["sections", "--check", "jetauto", "--k", "sl:2", "--A", "jet:1,3"])
    assert code == 0
    rep = json.loads(capsys.readouterr().out)
    entry = rep["analyses"][0]
    assert entry["automorphism"] and entry["mu_minus_identity_nilpotent"]


def test_sections_subcommand_missing_coefficient(capsys):
    code = main(["sections", "--check", "center", "--k", "sl:2"])
    assert code == 2
    assert "needs --A" in capsys.readouterr().err


def test_sections_subcommand_jacobi_exit_1(capsys):
    code = main(["sections", "--check", "spart", "--k", "ex:5dim", "--A", "points:2"])
    assert code == 1


def test_sections_flag_spelling_matches_subcommand(capsys):
    code = main(
        ["--algebra", "sl:2", "--analyze", "sections:derdecomp", "--A", "jet:1,2"]
    )
    assert code == 0
    flag_rep = json.loads(capsys.readouterr().out)
    code = main(["sections", "--check", "derdecomp", "--k", "sl:2", "--A", "jet:1,2"])
    assert code == 0
    sub_rep = json.loads(capsys.readouterr().out)
    assert flag_rep["analyses"] == sub_rep["analyses"]


@pytest.mark.parametrize(
    "check, k, coeff",
    [
        ("center", "ex:2dim", "points:2"),
        ("commutator", "sl:2", "jet:1,2"),
        ("indec", "sl:2", "points:3"),
        ("spart", "sl:2", "points:3"),
        ("symbol", "sl:2", None),
    ],
)
def test_sections_subcommand_checks_pass(capsys, check, k, coeff):
    argv = ["sections", "--check", check, "--k", k]
    if coeff:
        argv += ["--A", coeff]
    assert main(argv) == 0
    assert json.loads(capsys.readouterr().out)["analyses"][0]["ok"]
