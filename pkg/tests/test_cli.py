"""CLI verbs: payload shapes, exit codes, determinism, figure output."""

import json

from apolar_kit.cli import main

CUBIC = "(X0+3*X1-2*X2)*(X1+X2)*X2"
BINARY_GAD = json.dumps({
    "d": 3,
    "summands": [
        {"L": "X0", "k": 2, "G": "4*X0^2+2*X0*X1-4*X1^2"},
        {"L": "X1", "k": 1, "G": "-3*X0-5*X1"},
    ],
})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_natural_scheme_verb(capsys):
    code, payload = run(capsys, "natural-scheme", "--f", CUBIC,
                        "--l", "X0+3*X1-2*X2", "--n", "2")
    assert code == 0
    assert payload["length"] == 4
    assert payload["hilbert"] == [1, 3, 4]
    assert payload["ideal"]["vars"] == 3 and payload["ideal"]["family"] == "Y"


def test_hf_verb_contract(capsys):
    code, payload = run(capsys, "hf", "--ideal",
                        '{"generators":["Y0^2*Y1^3"],"vars":2,"family":"Y"}')
    assert code == 0
    assert payload == {"hf": [1, 2, 3, 4, 5], "limit": 5, "regularity": 4}


def test_gad_scheme_verb(capsys):
    code, payload = run(capsys, "gad-scheme", "--gad", BINARY_GAD)
    assert code == 0
    assert payload["ideal"]["generators"] == ["Y0^2*Y1^3"]
    assert payload["support"] == ["X0", "X1"]


def test_ann_verb(capsys):
    code, payload = run(capsys, "ann", "--f", "X0*X1", "--n", "1",
                        "--max-degree", "2")
    assert code == 0
    assert sorted(payload["generators"]) == ["Y0^2", "Y1^2"]


def test_regularity_verb(capsys):
    code, payload = run(capsys, "regularity", "--d", "4", "--ideal", json.dumps({
        "generators": ["Y0^3*Y1^3-2*Y0^3*Y2^3+5*Y1^3*Y2^3", "3*Y0^2*Y1*Y2-2*Y0*Y2^3",
                       "Y0*Y1^2*Y2", "Y0*Y1*Y2^2", "Y2^4"],
        "vars": 3, "family": "Y"}))
    assert code == 0
    assert payload["is_d_regular"] is False
    assert payload["perp_dim_at_d"] == 11


def test_apolar_verb(capsys):
    code, payload = run(capsys, "apolar",
                        "--ideal", '{"generators":["79*Y0^2-166*Y0*Y1+88*Y1^2"],"vars":2,"family":"Y"}',
                        "--f", "4*X0^3+2*X0^2*X1-7*X0*X1^2-5*X1^3")
    assert code == 0 and payload == {"apolar": True}


def test_intersect_quotient_saturate(capsys):
    code, payload = run(capsys, "intersect",
                        "--ideal", '{"generators":["Y1^3"],"vars":2,"family":"Y"}',
                        "--ideal2", '{"generators":["Y0^2"],"vars":2,"family":"Y"}')
    assert code == 0 and payload["generators"] == ["Y0^2*Y1^3"]
    code, payload = run(capsys, "quotient",
                        "--ideal", '{"generators":["Y0^2*Y1^3"],"vars":2,"family":"Y"}',
                        "--by", "Y1")
    assert code == 0 and payload["generators"] == ["Y0^2*Y1^2"]
    code, payload = run(capsys, "saturate",
                        "--ideal", '{"generators":["Y0^2*Y1^3"],"vars":2,"family":"Y"}',
                        "--by", "Y1")
    assert code == 0 and payload["generators"] == ["Y0^2"]


def test_catalecticant_verb(capsys):
    code, payload = run(capsys, "catalecticant", "--f", "X0*X1", "--n", "1")
    assert code == 0 and payload == {"ranks": [1, 2, 1]}
    code, payload = run(capsys, "catalecticant", "--f", "X0*X1", "--n", "1", "--i", "1")
    assert code == 0 and payload["rank"] == 2 and payload["shape"] == [2, 2]


def test_fat_containment_verb(capsys):
    code, payload = run(capsys, "fat-containment",
                        "--ideal", '{"generators":["Y0^2*Y1^3"],"vars":2,"family":"Y"}',
                        "--supports", '[{"L":"X0","k":2},{"L":"X1","k":1}]')
    assert code == 0 and payload == {"profile": [True, True]}


def test_redundancy_cert_verb(capsys):
    code, payload = run(capsys, "redundancy-cert", "--gad", BINARY_GAD, "--i", "0")
    assert code == 0
    assert payload["found"] is True
    assert payload["replacement"]["summands"][0]["G"] == "4*X0 + 2*X1"


def test_tangential_shorten_verb(capsys):
    gad = json.dumps({"d": 3, "summands": [
        {"L": "X0", "k": 1, "G": "X2"},
        {"L": "X1", "k": 1, "G": "X3"},
        {"L": "X0+X1", "k": 1, "G": "X4"},
        {"L": "X0-X1", "k": 1, "G": "X2-3*X3-2*X4"},
        {"L": "X0+2*X1", "k": 1, "G": "X2+X3+X4"}]})
    code, payload = run(capsys, "tangential-shorten", "--gad", gad)
    assert code == 0 and payload["found"] is True
    assert len(payload["gad"]["summands"]) == 4


def test_short_criterion_verb(capsys):
    code, payload = run(capsys, "short-criterion", "--gad", BINARY_GAD)
    assert code == 0
    assert payload["applies"] is True  # length 5 <= 7


def test_corpus_verb_single(capsys):
    code, payload = run(capsys, "corpus", "--id", "ex-3.1")
    assert code == 0
    assert payload["passed"] is True


def test_corpus_unknown_id_is_domain_error(capsys):
    code, payload = run(capsys, "corpus", "--id", "ex-9.9")
    assert code == 1
    assert "error" in payload


def test_domain_error_payload_and_exit(capsys):
    code, payload = run(capsys, "hf", "--ideal",
                        '{"generators":["Y0"],"vars":3,"family":"Y"}')
    assert code == 1
    assert payload["error"]["type"] == "DimensionError"


def test_usage_error_exit_code(capsys):
    assert main(["hf"]) == 2  # neither --ideal nor --file
    capsys.readouterr()


def test_parse_error_is_domain_error(capsys):
    code, payload = run(capsys, "ann", "--f", "X9", "--n", "2")
    assert code == 1 and payload["error"]["type"] == "ParseError"


def test_output_is_byte_stable(capsys):
    args = ["natural-scheme", "--f", CUBIC, "--l", "X0", "--n", "2"]
    main(list(args))
    first = capsys.readouterr().out
    main(list(args))
    second = capsys.readouterr().out
    assert first == second


def test_output_is_byte_stable_across_processes():
    import subprocess
    import sys

    command = [sys.executable, "-m", "apolar_kit.cli", "corpus", "--id", "ex-3.3"]
    runs = [subprocess.run(command, capture_output=True, text=True, check=True).stdout
            for _ in range(2)]
    assert runs[0] == runs[1]
    assert json.loads(runs[0])["passed"] is True


def test_pretty_flag_still_json(capsys):
    code, payload = run(capsys, "hf", "--pretty", "--ideal",
                        '{"generators":["Y0^2*Y1^3"],"vars":2,"family":"Y"}')
    assert code == 0 and payload["limit"] == 5


def test_file_input(tmp_path, capsys):
    path = tmp_path / "ideal.json"
    path.write_text('{"generators":["Y0^2*Y1^3"],"vars":2,"family":"Y"}')
    code, payload = run(capsys, "hf", "--file", str(path))
    assert code == 0 and payload["limit"] == 5


def test_hf_plot_writes_figure(tmp_path, capsys):
    target = tmp_path / "hf.png"
    code, _ = run(capsys, "hf", "--plot", str(target), "--ideal",
                  '{"generators":["Y0^2*Y1^3"],"vars":2,"family":"Y"}')
    assert code == 0
    assert target.exists() and target.stat().st_size > 0


def test_corpus_plot_dir(tmp_path, capsys):
    code, payload = run(capsys, "corpus", "--id", "ex-3.1",
                        "--plot-dir", str(tmp_path / "figs"))
    assert code == 0
    assert (tmp_path / "figs" / "corpus.png").exists()
