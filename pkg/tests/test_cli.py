"""End-to-end command tests: documents in, reports out, exit codes."""

from pathlib import Path

import pytest

from stonekit.cli import main

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_space(capsys):
    code, out, err = run(capsys, "validate", str(DATA / "sierpinski.space"))
    assert code == 0 and err == ""
    assert out.splitlines()[0] == '# space "sierpinski": 2 points, 3 opens, T0'
    assert 'opens: [[], ["1"], ["0", "1"]]' in out


def test_validate_lattice(capsys):
    code, out, err = run(capsys, "validate", str(DATA / "diamond.lattice"))
    assert code == 0
    assert out.splitlines()[0] == '# lattice "diamond": 4 elements, Boolean, distributive'


def test_validate_rejects_nondistributive(capsys):
    code, out, err = run(capsys, "validate", str(DATA / "m3.lattice"))
    assert code == 1 and out == ""
    assert "distributivity fails at triple ('a', 'b', 'c')" in err


def test_missing_file_is_a_usage_error(capsys):
    code, out, err = run(capsys, "validate", str(DATA / "nope.lattice"))
    assert code == 2
    assert "error:" in err


def test_parse_error_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.space"
    bad.write_text('type: "space"\nname: [oops\n')
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert "line 2" in err


def test_spectrum_of_diamond_is_two_point_discrete(capsys):
    code, out, err = run(capsys, "spectrum", str(DATA / "diamond.lattice"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# spectrum: 2 points, 4 opens"
    assert 'name: "spectrum of diamond"' in out


def test_ideals_of_chain(capsys):
    code, out, err = run(capsys, "ideals", str(DATA / "chain3.lattice"))
    assert code == 0
    assert out.splitlines()[0] == "# ideals: 3 ideals of 3 elements, all principal"


def test_filters_of_sierpinski(capsys):
    code, out, err = run(capsys, "filters", str(DATA / "sierpinski.space"))
    assert code == 0
    assert out.splitlines()[0] == "# filters: 2 filters, 3 opens"


def test_sobrify_reports_already_sober(capsys):
    code, out, err = run(capsys, "sobrify", str(DATA / "sierpinski.space"))
    assert code == 0
    assert out.splitlines()[0] == "# sobrification: 2 -> 2 points, already sober"


def test_t0_and_hausdorff(tmp_path, capsys):
    doc = 'type: "space"\nname: "blob"\npoints: ["x", "y"]\nopens: []\n'
    path = tmp_path / "blob.space"
    path.write_text(doc)
    code, out, _ = run(capsys, "t0", str(path))
    assert code == 0 and out.splitlines()[0] == "# t0: 2 -> 1 points"
    code, out, _ = run(capsys, "hausdorff", str(path))
    assert code == 0 and out.splitlines()[0] == "# hausdorff: 2 -> 1 points, discrete"


def test_center_of_chain_is_trivial(capsys):
    code, out, err = run(capsys, "center", str(DATA / "chain3.lattice"))
    assert code == 0
    assert out.splitlines()[0] == "# center: 2 of 3 elements complemented"


def test_waybelow_report(capsys):
    code, out, err = run(capsys, "waybelow", str(DATA / "chain3.lattice"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == '# waybelow of "chain3": 6 pairs; stably compact: yes; regular: no'
    assert "0 << m" in lines and "m << 1" in lines


def test_cechstone_of_sierpinski_collapses_to_a_point(capsys):
    code, out, err = run(capsys, "cechstone", str(DATA / "sierpinski.space"))
    assert code == 0
    assert out.splitlines()[0] == '# cechstone "sierpinski": both sides: 1 point, ISO'


def test_export_dot_sierpinski(capsys):
    code, out, err = run(capsys, "export", "dot", str(DATA / "sierpinski.space"))
    assert code == 0
    assert '"0" -> "1";' in out
    assert out.count("->") == 1
    assert 'label="opens: {}, {1}, {0,1}";' in out


def test_export_dot_diamond_has_four_cover_edges(capsys):
    code, out, err = run(capsys, "export", "dot", str(DATA / "diamond.lattice"))
    assert code == 0
    assert out.count("->") == 4


def test_export_dot_chain_has_two_cover_edges(capsys):
    code, out, err = run(capsys, "export", "dot", str(DATA / "chain3.lattice"))
    assert code == 0
    assert out.count("->") == 2


@pytest.mark.parametrize("suite", ["monad-f", "monad-i", "pairing", "ultrafilter"])
def test_law_suites_pass_at_small_sizes(capsys, suite):
    code, out, err = run(
        capsys, "laws", "--suite", suite, "--max-points", "2", "--max-lattice", "4"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].endswith("0 failures")
    body = lines[:-1]
    assert body and all("\tPASS" in line for line in body)
    assert all(len(line.split("\t")) == 3 for line in body)


def test_monad_f_covers_all_29_three_point_topologies(capsys):
    code, out, err = run(capsys, "laws", "--suite", "monad-f", "--max-points", "3")
    assert code == 0
    object_laws = [
        line
        for line in out.splitlines()
        if line.startswith("space") and "(3 points" in line
    ]
    spaces = {line.split("\t")[0] for line in object_laws}
    assert len(spaces) == 29
    assert all("\tPASS" in line for line in object_laws)


def test_budget_guard_exits_2(capsys):
    code, out, err = run(capsys, "laws", "--suite", "monad-f", "--max-points", "6")
    assert code == 2
    assert "guard rail" in err
    code, out, err = run(capsys, "laws", "--suite", "monad-i", "--max-lattice", "17")
    assert code == 2
    assert "guard rail" in err


def test_sampling_at_five_points_is_seeded(capsys):
    code1, out1, _ = run(
        capsys, "laws", "--suite", "ultrafilter", "--max-points", "5", "--seed", "3"
    )
    code2, out2, _ = run(
        capsys, "laws", "--suite", "ultrafilter", "--max-points", "5", "--seed", "3"
    )
    code3, out3, _ = run(
        capsys, "laws", "--suite", "ultrafilter", "--max-points", "5", "--seed", "4"
    )
    assert code1 == code2 == code3 == 0
    assert out1 == out2
    assert out1 != out3


def test_validate_round_trips_its_own_output(tmp_path, capsys):
    code, out, err = run(capsys, "validate", str(DATA / "diamond.lattice"))
    assert code == 0
    echoed = tmp_path / "echo.lattice"
    echoed.write_text(out)
    code2, out2, _ = run(capsys, "validate", str(echoed))
    assert code2 == 0 and out2 == out
