import json

import pytest

from serinv.cli import main
from serinv.oracles import GAUSSIAN, SQRTSHIFT


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def gauss_file(tmp_path):
    p = tmp_path / "gauss.json"
    p.write_text(json.dumps(GAUSSIAN.series(5).to_json()))
    return str(p)


@pytest.fixture
def sqrt_file(tmp_path):
    p = tmp_path / "sqrt.json"
    p.write_text(json.dumps(SQRTSHIFT.series(4).to_json()))
    return str(p)


def test_table_csv_is_deterministic(capsys):
    rc, first, _ = run(capsys, "table", "gaussian-t2")
    assert rc == 0
    _, second, _ = run(capsys, "table", "gaussian-t2")
    assert first == second
    lines = first.splitlines()
    assert lines[0].startswith("g,rho,direct:pade:2/3,inverse:pade:2/3,exact")
    assert lines[1].startswith("0.1,0.0741985133,0.8368841891,0.8369093852,0.8370429278")
    assert "printed rho is root #2" in lines[-1]


def test_table_markdown_and_precision(capsys):
    rc, out, _ = run(capsys, "table", "gaussian-t3", "--format", "md", "--precision", "17")
    assert rc == 0
    rows = out.splitlines()
    assert rows[0].startswith("| g | rho |") and rows[1].startswith("|---|")
    cells = rows[2].split(" | ")
    assert float(cells[1]) == 0.07404520814930436


def test_table_print_pade(capsys):
    rc, out, _ = run(capsys, "table", "gaussian-t2", "--print-pade")
    assert rc == 0
    assert "# inverse:pade:2/3: E = 1/2*sqrt(pi) - 3/8*sqrt(pi)*rho,  g = 16*rho*(15640" in out


def test_table_polylog_digits(capsys):
    rc, out, _ = run(capsys, "table", "polylog-t6")
    assert rc == 0
    assert "digits direct:factored:6/7" in out.splitlines()[0]


def test_compare_expint(capsys):
    rc, out, _ = run(capsys, "compare", "--oracle", "expint",
                     "--methods", "direct:sum:5,inverse:sum:5", "--grid", "0.1,0.2")
    assert rc == 0
    assert out.splitlines()[-1] == "# winners: g=0.1 inverse:sum:5, g=0.2 inverse:sum:5"


def test_compare_empty_grid(capsys):
    rc, out, _ = run(capsys, "compare", "--oracle", "gaussian",
                     "--methods", "direct:sum:5", "--grid", "")
    assert rc == 0 and out == ""


def test_compare_input_errors(capsys):
    assert run(capsys, "compare", "--oracle", "bessel", "--methods", "direct:sum:5", "--grid", "1")[0] == 2
    assert run(capsys, "compare", "--oracle", "gaussian", "--methods", "sideways:sum:5", "--grid", "1")[0] == 2
    assert run(capsys, "compare", "--oracle", "gaussian", "--methods", "direct:sum:5", "--grid", "a,b")[0] == 2


def test_revert_and_rho(capsys, sqrt_file, gauss_file):
    rc, out, _ = run(capsys, "revert", "--in", sqrt_file)
    assert rc == 0 and json.loads(out)["coeffs"] == ["0", "2", "1", "0", "0"]
    rc, out, _ = run(capsys, "revert", "--in", gauss_file, "--rho")
    assert json.loads(out)["coeffs"] == ["0", "1", "35/8", "35/16", "17675/256", "-263095/256"]


def test_pade_render(capsys, gauss_file):
    rc, out, _ = run(capsys, "pade", "--in", gauss_file, "--L", "2", "--M", "3", "--rho")
    assert rc == 0
    assert out.strip() == ("16*rho*(15640 + 219707*rho)/"
                           "(250240 + 2420512*rho - 11137140*rho^2 + 26152805*rho^3)")


def test_eval_direct_and_inverse(capsys, gauss_file):
    rc, out, _ = run(capsys, "eval", "--in", gauss_file, "--pade", "2/3", "--at", "0.6")
    assert rc == 0 and out.split() == ["0.6", "0.7113938594"]
    rc, out, _ = run(capsys, "eval", "--in", gauss_file, "--kind", "pade:3/2",
                     "--inverse", "--at", "1")
    assert out.split() == ["1", "0.6815721383"]


def test_series_command(capsys):
    rc, out, _ = run(capsys, "series", "--oracle", "lambert", "--order", "3")
    assert rc == 0 and json.loads(out)["coeffs"] == ["0", "1", "1", "3/2"]


def test_exit_codes(capsys, tmp_path, gauss_file):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    rc, _, err = run(capsys, "revert", "--in", str(bad))
    assert rc == 2 and "malformed JSON" in err
    assert run(capsys, "revert", "--in", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "table", "gaussian-t9")[0] == 2
    assert run(capsys, "table", "gaussian-t1", "--precision", "0")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    rc, _, err = run(capsys, "pade", "--in", gauss_file, "--L", "4", "--M", "4")
    assert rc == 3 and "InsufficientOrder" in err
    assert run(capsys, "eval", "--in", gauss_file, "--kind", "pade:3/2", "--inverse", "--at", "-1")[0] == 3
