"""End-to-end runs of the command line front end."""

import json

import pytest

from gencat.cli import main

R1_JSON = json.dumps(
    {
        "source": 3,
        "target": 9,
        "blocks": [[0, 3], [1, 6], [2, 9], [4, 5], [7, 8], [10, 11]],
    }
)
R2_JSON = json.dumps(
    {"source": 9, "target": 1, "blocks": [[0, 1], [2, 9], [3, 4], [5, 6], [7, 8]]}
)
CUP_CAP_ELEMENT = json.dumps(
    {"n": 2, "c": "2/1", "terms": [{"blocks": [[0, 1], [2, 3]], "coeff": "1/1"}]}
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -------------------------------------------------------------------- compose

def test_compose_worked_example(capsys):
    code, out, err = run(capsys, "compose", R2_JSON, R1_JSON)
    assert code == 0 and err == ""
    assert out == (
        '{"arrow": {"source": 3, "target": 1, "blocks": [[0, 3], [1, 2]]}, '
        '"circles": 1}\n'
    )


def test_compose_boundary_mismatch_fails(capsys):
    code, out, err = run(capsys, "compose", R1_JSON, R2_JSON)
    assert code == 2 and out == ""
    assert err.startswith("error:")


def test_compose_rejects_malformed_json(capsys):
    code, _, err = run(capsys, "compose", "{not json", R1_JSON)
    assert code == 2 and "error:" in err


def test_compose_is_deterministic(capsys):
    first = run(capsys, "compose", R2_JSON, R1_JSON)
    second = run(capsys, "compose", R2_JSON, R1_JSON)
    assert first == second


def test_compose_reads_file_payloads(tmp_path, capsys):
    second = tmp_path / "second.json"
    first = tmp_path / "first.json"
    second.write_text(R2_JSON)
    first.write_text(R1_JSON)
    code, out, _ = run(capsys, "compose", f"@{second}", f"@{first}")
    assert code == 0
    assert json.loads(out) == {
        "arrow": {"source": 3, "target": 1, "blocks": [[0, 3], [1, 2]]},
        "circles": 1,
    }


def test_missing_file_payload_fails(capsys):
    code, _, err = run(capsys, "compose", "@/no/such/file.json", R1_JSON)
    assert code == 2 and "error:" in err


# ------------------------------------------------------------------------- eq

def test_eq_reports_equal_proofs(capsys):
    code, out, _ = run(capsys, "eq", "pair(pi1(p,p),pi2(p,p))", "id(p/\\p)")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "EQUAL"
    payload = json.loads(lines[1])
    assert payload["left"] == payload["right"]
    assert payload["left"] == {
        "source": 2,
        "target": 2,
        "blocks": [[0, 2], [1, 3]],
    }


def test_eq_reports_distinct_proofs(capsys):
    code, out, _ = run(capsys, "eq", "pi1(p,p)", "pi2(p,p)")
    lines = out.splitlines()
    assert code == 1
    assert lines[0] == "NOT-EQUAL"
    payload = json.loads(lines[1])
    assert payload["left"] == {"source": 2, "target": 1, "blocks": [[0, 2], [1]]}
    assert payload["right"] == {"source": 2, "target": 1, "blocks": [[0], [1, 2]]}


def test_eq_equation_fragment(capsys):
    code, out, _ = run(capsys, "eq", "comp(sym(y,x),sym(x,y))", "id(x=y)")
    assert code == 0
    assert out.splitlines()[0] == "EQUAL"


def test_eq_type_mismatch_fails(capsys):
    code, _, err = run(capsys, "eq", "id(p)", "id(q)")
    assert code == 2 and "error:" in err


def test_eq_parse_failure(capsys):
    code, _, err = run(capsys, "eq", "pair(pi1(p,p)", "id(p)")
    assert code == 2 and "error:" in err


def test_eq_fragment_flag_gates_constructors(capsys):
    code, _, err = run(capsys, "eq", "pi1(p,q)", "pi1(p,q)", "--fragment", "disj")
    assert code == 2 and "error:" in err


# ------------------------------------------------------------------------ gen

def test_gen_prints_arrow(capsys):
    code, out, _ = run(capsys, "gen", "pair(pi1(p,p),pi2(p,p))")
    assert code == 0
    assert json.loads(out) == {
        "source": 2,
        "target": 2,
        "blocks": [[0, 2], [1, 3]],
    }


def test_gen_honors_fragment_flag(capsys):
    code, out, _ = run(capsys, "gen", "id(p)", "--fragment", "disj")
    assert code == 0
    assert json.loads(out) == {"source": 1, "target": 1, "blocks": [[0, 1]]}


def test_gen_rejects_ill_typed_term(capsys):
    code, _, err = run(capsys, "gen", "comp(pi1(p,q),id(p))")
    assert code == 2 and "error:" in err


# ------------------------------------------------------------------------ rep

def test_rep_of_identity(capsys):
    arrow = json.dumps({"source": 1, "target": 1, "blocks": [[0, 1]]})
    code, out, _ = run(capsys, "rep", arrow)
    assert code == 0
    assert json.loads(out) == {"src": 2, "tgt": 2, "pairs": [[0, 0], [1, 1]]}


def test_rep_with_larger_base(capsys):
    arrow = json.dumps({"source": 1, "target": 1, "blocks": [[0, 1]]})
    code, out, _ = run(capsys, "rep", arrow, "--p", "3")
    assert code == 0
    assert json.loads(out) == {"src": 3, "tgt": 3, "pairs": [[0, 0], [1, 1], [2, 2]]}


def test_rep_rejects_base_below_two(capsys):
    arrow = json.dumps({"source": 1, "target": 1, "blocks": [[0, 1]]})
    code, _, err = run(capsys, "rep", arrow, "--p", "1")
    assert code == 2 and "error:" in err


# ----------------------------------------------------------------- brauer-mul

def test_brauer_mul_squares_cup_cap(capsys):
    code, out, _ = run(capsys, "brauer-mul", CUP_CAP_ELEMENT, CUP_CAP_ELEMENT)
    assert code == 0
    assert json.loads(out) == {
        "n": 2,
        "c": "2/1",
        "terms": [{"blocks": [[0, 1], [2, 3]], "coeff": "2/1"}],
    }


def test_brauer_mul_flag_overrides_loop_parameter(capsys):
    code, out, _ = run(
        capsys, "brauer-mul", CUP_CAP_ELEMENT, CUP_CAP_ELEMENT, "--c", "7/3"
    )
    assert code == 0
    assert json.loads(out)["terms"][0]["coeff"] == "7/3"
    assert json.loads(out)["c"] == "7/3"


def test_brauer_mul_requires_matching_loop_parameters(capsys):
    other = json.dumps(
        {"n": 2, "c": "3/1", "terms": [{"blocks": [[0, 1], [2, 3]], "coeff": "1/1"}]}
    )
    code, _, err = run(capsys, "brauer-mul", CUP_CAP_ELEMENT, other)
    assert code == 2 and "error:" in err


def test_brauer_mul_rejects_mixed_strand_counts(capsys):
    single = json.dumps(
        {"n": 1, "c": "2/1", "terms": [{"blocks": [[0, 1]], "coeff": "1/1"}]}
    )
    code, _, err = run(capsys, "brauer-mul", CUP_CAP_ELEMENT, single)
    assert code == 2 and "error:" in err


# ----------------------------------------------------------------------- beta

def test_beta_of_cup_cap(capsys):
    diagram = json.dumps({"source": 2, "target": 2, "blocks": [[0, 1], [2, 3]]})
    code, out, _ = run(capsys, "beta", diagram)
    assert code == 0
    assert json.loads(out) == {
        "rows": 4,
        "cols": 4,
        "entries": [
            [1, 0, 0, 1],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
            [1, 0, 0, 1],
        ],
    }


def test_beta_rejects_non_diagram(capsys):
    arrow = json.dumps({"source": 2, "target": 2, "blocks": [[0, 1, 2, 3]]})
    code, _, err = run(capsys, "beta", arrow)
    assert code == 2 and "error:" in err


# ----------------------------------------------------------------------- draw

def test_draw_identity(capsys):
    arrow = json.dumps({"source": 2, "target": 2, "blocks": [[0, 2], [1, 3]]})
    code, out, _ = run(capsys, "draw", arrow)
    assert code == 0
    assert out == "s0 s1\nt0 t1\ns0 t0\ns1 t1\n"


def test_draw_empty_arrow(capsys):
    code, out, _ = run(capsys, "draw", json.dumps({"source": 0, "target": 0}))
    assert code == 0
    assert out == "\n\n"


# -------------------------------------------------------------------- parsing

def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as failure:
        main(["frobnicate"])
    assert failure.value.code == 2
