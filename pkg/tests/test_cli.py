import io

import pytest

from kmbruhat.cli import EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, EXIT_VIOLATION, main, parse_affine_root
from kmbruhat.errors import ParseError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_length_identity():
    code, out, _ = run("length", "--cartan", "2", "pi[0] * e")
    assert code == EXIT_OK and "affine length: 0" in out


def test_length_a2():
    code, out, _ = run("length", "--cartan", "2,-1;-1,2", "pi[1,1] * e")
    assert code == EXIT_OK
    assert "affine length: 4" in out and "epsilon form: (4, 0)" in out


def test_length_malformed_element():
    code, _, err = run("length", "--cartan", "2,-1;-1,2", "pi[1 * e")
    assert code == EXIT_USAGE and "cannot parse element" in err


def test_length_outside_tits_cone_prints_trace():
    code, _, err = run("length", "--cartan", "2,-3;-2,2", "pi[4,5] * e")
    assert code == EXIT_USAGE and "not in the Tits cone" in err and "[4, 5]" in err


def test_compare_prints_chain():
    code, out, _ = run("compare", "--cartan", "2", "pi[0] * e", "pi[1] * s1")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].endswith(": True")
    assert len(lines) == 1 + 1 + 3


def test_compare_false():
    code, out, _ = run("compare", "--cartan", "2", "pi[1] * s1", "pi[0] * e")
    assert code == EXIT_OK and out.strip().endswith("False")


def test_covers_table():
    code, out, _ = run("covers", "--cartan", "2,-1;-1,2", "pi[0,0] * e")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "reflection\ttarget\tkind\tdelta\toracle\tshape"
    assert any("pi[0,0] * s1" in line for line in lines)


def test_interval():
    code, out, _ = run("interval", "--cartan", "2", "pi[0] * e", "pi[1] * s1")
    assert code == EXIT_OK and "# 6 elements, complete: True" in out


def test_verify_grading_writes_report(tmp_path):
    report = tmp_path / "covers.tsv"
    code, out, _ = run(
        "verify-grading", "--cartan", "2,-3;-2,2", "--height-cap", "2", "--length-cap", "2",
        "--report-out", str(report),
    )
    assert code in (EXIT_OK, EXIT_UNKNOWN)
    assert code != EXIT_VIOLATION
    assert "violations: 0" in out
    assert report.read_text().startswith("base\treflection\ttarget")


def test_datum_file(tmp_path):
    path = tmp_path / "a2.datum"
    path.write_text("row 2 -1\nrow -1 2\n")
    code, out, _ = run("length", "--datum", str(path), "pi[1,1] * s1")
    assert code == EXIT_OK and "affine length: 5" in out


def test_plot_to_file(tmp_path):
    svg = tmp_path / "cone.svg"
    code, _, _ = run("plot-tits", "--cartan", "2,-3;-2,2", "--depth", "6", "--svg-out", str(svg))
    assert code == EXIT_OK and svg.read_text().startswith("<?xml")


def test_plot_apartment_with_highlights():
    code, out, _ = run(
        "plot-apartment", "--cartan", "2,-3;-2,2", "--window=-8,-8,8,8",
        "--highlight", "pi[0,0] * e", "--highlight", "(3,1)[2]",
    )
    assert code == EXIT_OK and 'class="marked-wall"' in out


def test_plot_rank_three_is_rejected():
    code, _, err = run("plot-tits", "--cartan", "2,-1,0;-1,2,-1;0,-1,2")
    assert code == EXIT_USAGE and "rank-2" in err


def test_usage_errors():
    assert run()[0] == EXIT_USAGE
    assert run("length", "pi[0] * e")[0] == EXIT_USAGE
    assert run("length", "--cartan", "2,1;1,2", "pi[0,0] * e")[0] == EXIT_USAGE
    assert run("frobnicate")[0] == EXIT_USAGE


def test_printed_elements_reparse():
    code, out, _ = run("covers", "--cartan", "2,-3;-2,2", "pi[-2,-3] * s1")
    for line in out.splitlines()[1:]:
        if line.startswith("#"):
            continue
        target = line.split("\t")[1]
        assert run("length", "--cartan", "2,-3;-2,2", target)[0] == EXIT_OK


def test_parse_affine_root(hyp):
    a = parse_affine_root(hyp, "(3,1)[2]")
    assert str(a) == "(3,1)[2]"
    assert str(parse_affine_root(hyp, "(-3,-1)[-2]")) == "(3,1)[2]"
    with pytest.raises(ParseError):
        parse_affine_root(hyp, "(3,1)")
