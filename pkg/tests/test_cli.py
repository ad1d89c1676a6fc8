"""End-to-end tests for the command-line interface.

Each case drives ``pastures.cli.main`` in process and inspects the exit
code and captured output.  JSON outputs are compared against golden files
under tests/data, which were produced by the same commands and reviewed
by hand.
"""

import json
import pathlib

import pytest

from pastures import cli

DATA = pathlib.Path(__file__).parent / "data"


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- exit codes ---------------------------------------------------------

EXIT_CASES = [
    (["pasture", "U"], 0),
    (["hexagons", "F7"], 0),
    (["lift", "--kind", "binary", "F2"], 0),
    (["hom", "H", "F7"], 0),
    (["iso", "F4", "F4"], 0),
    (["verify", "glift"], 0),
    # verified-false answers
    (["iso", "F4", "F5"], 1),
    (["iso", "U", "D"], 1),
    # guards: infinite unit group, then a deliberately tiny search cap
    (["reps", "--matroid", "U24", "--pasture", "G"], 2),
    (["reps", "--matroid", "U24", "--pasture", "F9",
      "--max-candidates", "10"], 2),
    # usage errors
    (["pasture", "F4 x"], 3),
    (["pasture", "F6"], 3),
    (["pasture", "Nope"], 3),
    (["reps", "--matroid", "nosuch", "--pasture", "F4"], 3),
    (["reps", "--matroid", str(DATA / "not_a_matroid.json"),
      "--pasture", "F4"], 3),
    (["lift", "--kind", "bogus", "F4"], 3),
    ([], 3),
]


@pytest.mark.parametrize("argv,expected", EXIT_CASES,
                         ids=[" ".join(a) or "<empty>" for a, _ in EXIT_CASES])
def test_exit_code(capsys, argv, expected):
    code, _, _ = run(capsys, argv)
    assert code == expected


def test_malformed_json_file_is_usage_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, ["reps", "--matroid", str(bad),
                                "--pasture", "F4"])
    assert code == 3
    assert "error" in err


# -- golden JSON outputs ------------------------------------------------

GOLDEN_CASES = [
    (["pasture", "U", "--json"], "golden_pasture_U.json"),
    (["hexagons", "F7", "--json"], "golden_hexagons_F7.json"),
    (["lift", "--kind", "ternary", "F9", "--json"],
     "golden_lift_ternary_F9.json"),
    (["hom", "H", "F7", "--list", "--json"], "golden_hom_H_F7.json"),
    (["iso", "F4", "F4", "--json"], "golden_iso_F4_F4.json"),
    (["reps", "--matroid", "U24", "--pasture", "F5", "--list", "--json"],
     "golden_reps_u24_F5.json"),
    (["lift-check", "--matroid", "U24", "--pasture", "F4",
      "--kind", "ternary", "--json"], "golden_liftcheck_u24_F4.json"),
    (["verify", "glift", "--json"], "golden_verify_glift.json"),
]


@pytest.mark.parametrize("argv,golden", GOLDEN_CASES,
                         ids=[g for _, g in GOLDEN_CASES])
def test_golden_output(capsys, argv, golden):
    code, out, _ = run(capsys, argv)
    assert code == 0
    with open(DATA / golden) as fh:
        assert json.loads(out) == json.load(fh)


# -- behaviour details --------------------------------------------------

def test_matroid_file_matches_builtin(capsys):
    """A JSON matroid file and the builtin of the same matroid agree."""
    code1, out1, _ = run(capsys, ["reps", "--matroid", str(DATA / "u24.json"),
                                  "--pasture", "F5", "--list", "--json"])
    code2, out2, _ = run(capsys, ["reps", "--matroid", "U24",
                                  "--pasture", "F5", "--list", "--json"])
    assert code1 == code2 == 0
    assert json.loads(out1) == json.loads(out2)


def test_output_is_deterministic_across_runs_and_threads(capsys):
    argv = ["reps", "--matroid", "MK4", "--pasture", "F3",
            "--list", "--json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    _, threaded, _ = run(capsys, argv + ["--threads", "2"])
    assert first == second == threaded


def test_hom_without_list_omits_morphisms(capsys):
    code, out, _ = run(capsys, ["hom", "H", "F7", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2
    assert "morphisms" not in data


def test_text_mode_summaries(capsys):
    _, out, _ = run(capsys, ["pasture", "U"])
    assert "C2 x Z^2" in out
    _, out, _ = run(capsys, ["hexagons", "F7"])
    assert "hexagonal" in out and "dyadic" in out
    _, out, _ = run(capsys, ["iso", "F4", "F5"])
    assert "not isomorphic" in out
    _, out, _ = run(capsys, ["verify", "glift"])
    assert "0 failures" in out


def test_guard_message_goes_to_stderr(capsys):
    code, out, err = run(capsys, ["reps", "--matroid", "U24",
                                  "--pasture", "F9",
                                  "--max-candidates", "10"])
    assert code == 2
    assert out == ""
    assert "guard" in err
