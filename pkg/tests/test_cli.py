import orjson
import pytest

from core.carving.model import decomposition_from_json
from core.graphs.dimacs import parse_dimacs, serialize_dimacs, write_dimacs
from core.graphs.generators import complete, cycle, grotzsch, kneser
from main import run


@pytest.fixture
def c9_file(tmp_path):
    target = tmp_path / "c9.col"
    write_dimacs(cycle(9), str(target))
    return str(target)


@pytest.fixture
def k4_file(tmp_path):
    target = tmp_path / "k4.col"
    write_dimacs(complete(4), str(target))
    return str(target)


def test_chi(c9_file, capsys):
    assert run(["chi", c9_file]) == 0
    assert capsys.readouterr().out == "3\n"


def test_chi_json(c9_file, capsys):
    assert run(["--json", "chi", c9_file]) == 0
    payload = orjson.loads(capsys.readouterr().out)
    assert payload["chi"] == 3
    assert payload["vertices"] == 9
    assert len(payload["coloring"]) == 9


def test_lchi(c9_file, capsys):
    assert run(["lchi", "-r", "1", c9_file]) == 0
    assert capsys.readouterr().out == "2\n"


def test_lchi_profile(k4_file, capsys):
    assert run(["lchi", "-r", "1", "--profile", k4_file]) == 0
    assert capsys.readouterr().out == "4\n4 4 4 4\n"


def test_decompose(c9_file, capsys):
    assert run(["decompose", "-r", "1", c9_file]) == 0
    D = decomposition_from_json(capsys.readouterr().out)
    assert D.separator == {1, 3, 5, 7, 8}


def test_color(c9_file, capsys):
    assert run(["color", "-r", "1", "-c", "2", c9_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:9] == ["0 0", "1 2", "2 0", "3 2", "4 0", "5 2", "6 0", "7 2", "8 4"]
    assert lines[9:] == ["levels: 3", "colors: 5"]


def test_color_json(c9_file, capsys):
    assert run(["--json", "color", "-r", "1", "-c", "2", c9_file]) == 0
    payload = orjson.loads(capsys.readouterr().out)
    assert payload["proper"]
    assert payload["levels"] == 3
    assert payload["level_bound"] == 4
    assert payload["level_sizes"] == [9, 5, 1]


def test_color_fails_when_a_ball_is_too_colorful(k4_file, capsys):
    assert run(["color", "-r", "1", "-c", "2", k4_file]) == 1
    assert capsys.readouterr().out == ""


def test_bound_gen(capsys):
    assert run(["bound", "gen", "--n", "10", "--r", "1", "--c", "2"]) == 0
    assert capsys.readouterr().out == "143/16 (≈8.9375)\n"


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["bound", "kst", "--k", "3", "--c", "2", "--r", "12"], "8/1 (≈8)\n"),
        (["bound", "bb", "--n", "1", "--r", "1"], "3/2 (≈1.5)\n"),
        (["bound", "upper-bogd", "--k", "2", "--c", "2", "--r", "1"], "12/1 (≈12)\n"),
        (["bound", "upper-erdos", "--n", "2", "--r", "1"], "512/1 (≈512)\n"),
        (["bound", "prop", "--m", "10", "--r", "1", "--c", "2", "--a", "1/2"], "127/16 (≈7.9375)\n"),
        (["bound", "stiebitz", "--r", "1"], "11/1 (≈11)\n"),
    ],
)
def test_bound_variants(argv, expected, capsys):
    assert run(argv) == 0
    assert capsys.readouterr().out == expected


def test_bound_json(capsys):
    assert run(["--json", "bound", "gen", "--n", "2", "--r", "1", "--c", "2"]) == 0
    payload = orjson.loads(capsys.readouterr().out)
    assert payload["bound"]["value"] == "15/16"
    assert payload["bound"]["kind"] == "lower"


def test_bound_missing_flag():
    assert run(["bound", "gen", "--n", "10", "--r", "1"]) == 2


def test_bound_domain_error():
    assert run(["bound", "gen", "--n", "10", "--r", "1", "--c", "1"]) == 2


@pytest.mark.parametrize(
    "argv, graph",
    [
        (["gen", "cycle", "5"], cycle(5)),
        (["gen", "complete", "4"], complete(4)),
        (["gen", "mycielski", "5"], grotzsch()),
        (["gen", "grotzsch"], grotzsch()),
        (["gen", "kneser", "5", "2"], kneser(5, 2)),
    ],
)
def test_gen(argv, graph, capsys):
    assert run(argv) == 0
    assert parse_dimacs(capsys.readouterr().out) == graph


def test_gen_is_byte_identical(capsys):
    assert run(["gen", "gnp", "20", "1/4", "42"]) == 0
    first = capsys.readouterr().out
    assert run(["gen", "gnp", "20", "1/4", "42"]) == 0
    assert capsys.readouterr().out == first
    assert first.startswith("c gnp 20 1/4 42\np edge 20 ")


def test_gen_bad_params():
    assert run(["gen", "cycle"]) == 2
    assert run(["gen", "kneser", "5", "x"]) == 2


def test_oracle(capsys):
    assert run(["oracle", "--n", "2", "--r", "1", "--c", "2", "--vmax", "5"]) == 0
    out = capsys.readouterr().out
    summary, dimacs = out.split("\n", 1)
    assert summary == "EXACT f=4, witness: 5-cycle"
    assert parse_dimacs(dimacs).n == 5


def test_oracle_json(capsys):
    assert run(["--json", "oracle", "--n", "1", "--r", "1", "--c", "1", "--vmax", "2"]) == 0
    payload = orjson.loads(capsys.readouterr().out)
    assert payload["result"]["mode"] == "LOWER_BOUND"
    assert payload["witness_dimacs"] is None


def test_verify_theorem(capsys):
    assert run(["verify-theorem", "--n", "10", "--r", "1", "--c", "2"]) == 0
    out = capsys.readouterr().out
    assert "bound=143/16 (≈8.9375)" in out
    assert out.rstrip().endswith("PASS")


def test_verify_theorem_vacuous(capsys):
    assert run(["verify-theorem", "--n", "2", "--r", "1", "--c", "2"]) == 0
    assert "PASS (vacuous)" in capsys.readouterr().out


def test_verify_theorem_needs_parameters():
    assert run(["verify-theorem", "--n", "10"]) == 2


def test_verify_decomp(c9_file, capsys):
    assert run(["verify-decomp", "-r", "1", c9_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 6
    assert all(": PASS" in line for line in lines)


def test_verify_decomp_reports_failure(c9_file, tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(
        orjson.dumps({"r": 1, "v": 9, "parts": [], "separator": list(range(9))}).decode()
    )
    assert run(["verify-decomp", "-r", "1", "--decomposition", str(bad), c9_file]) == 1
    assert "separator_bound: FAIL" in capsys.readouterr().out


def test_parse_error_exit_code(tmp_path):
    broken = tmp_path / "broken.col"
    broken.write_text("p edge 3 1\ne 1 1\n")
    assert run(["chi", str(broken)]) == 2


def test_missing_file_exit_code(tmp_path):
    assert run(["chi", str(tmp_path / "nope.col")]) == 2


def test_usage_errors():
    assert run([]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["lchi", "some.col"]) == 2


def test_output_is_repeatable(c9_file, capsys):
    run(["decompose", "-r", "2", c9_file])
    first = capsys.readouterr().out
    run(["decompose", "-r", "2", c9_file])
    assert capsys.readouterr().out == first
    assert serialize_dimacs(cycle(9)).startswith("p edge 9 9")
