"""End-to-end command tests driven through main(argv)."""
import json

import pytest

from slpkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def strip_volatile(payload):
    """Drop timing fields so JSON output can be compared run to run."""
    if isinstance(payload, dict):
        return {
            k: strip_volatile(v)
            for k, v in payload.items()
            if k not in ("ms", "timing")
        }
    if isinstance(payload, list):
        return [strip_volatile(v) for v in payload]
    return payload


def test_hilbert_quadratic(capsys):
    code, out, _ = run(capsys, "hilbert", "--quadratic", "4")
    assert code == 0
    assert out.strip() == "1,4,6,4,1"


def test_hilbert_general_with_csv_output(capsys, tmp_path):
    path = tmp_path / "h.csv"
    code, out, _ = run(
        capsys, "hilbert", "--exponents", "3,4", "--format", "csv", "--out", str(path)
    )
    assert code == 0
    assert out.strip() == "1,2,3,3,2,1"
    assert path.read_text() == "1,2,3,3,2,1\n"


def test_matrix_csv_golden(capsys):
    code, out, _ = run(capsys, "matrix", "--quadratic", "4", "--i", "1", "--t", "2")
    assert code == 0
    assert out == "2,2,2,0\n2,2,0,2\n2,0,2,2\n0,2,2,2\n"


def test_matrix_json_payload(capsys, tmp_path):
    path = tmp_path / "m.json"
    code, out, _ = run(
        capsys,
        "matrix", "--quadratic", "4", "--i", "1", "--t", "2",
        "--format", "json", "--out", str(path),
    )
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["i"] == 1 and payload["t"] == 2
    assert payload["matrix"]["entries"] == [[2, 2, 2, 0], [2, 2, 0, 2], [2, 0, 2, 2], [0, 2, 2, 2]]
    assert payload["spec"] == {"n": 4, "exponents": [2, 2, 2, 2], "characteristic": 0}
    assert payload["form"] == [1, 1, 1, 1]


def test_rank_block_method(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(
        capsys,
        "rank", "--quadratic", "6", "--i", "1", "--t", "4", "--out", str(path),
    )
    assert code == 0
    assert out.startswith("rank 6 of 6x6")
    payload = json.loads(path.read_text())
    assert payload["rank"] == 6 and payload["maximal"] is True
    assert payload["method"] == "block-recursive"
    assert payload["notes"] == []


def test_rank_dense_method(capsys):
    code, out, _ = run(
        capsys, "rank", "--exponents", "3,3", "--form", "1,1", "--i", "1", "--t", "2", "--method", "dense"
    )
    assert code == 0
    assert out.startswith("rank 2 of 2x2")


def test_slp_holds_exit_zero(capsys, tmp_path):
    path = tmp_path / "slp.json"
    code, out, _ = run(capsys, "slp", "--quadratic", "4", "--out", str(path))
    assert code == 0
    assert "SLP holds for 4 variables, characteristic 0" in out
    payload = strip_volatile(json.loads(path.read_text()))
    assert payload == {
        "spec": {"n": 4, "exponents": [2, 2, 2, 2], "characteristic": 0},
        "form": [1, 1, 1, 1],
        "characteristic": 0,
        "mode": "middle",
        "method": "block",
        "maps": [
            {"i": 0, "t": 4, "rows": 1, "cols": 1, "rank": 1, "maximal": True, "method": "block-recursive"},
            {"i": 1, "t": 2, "rows": 4, "cols": 4, "rank": 4, "maximal": True, "method": "block-recursive"},
        ],
        "slp": True,
    }


def test_slp_fails_exit_one(capsys):
    code, out, _ = run(capsys, "slp", "--quadratic", "3", "--char", "2")
    assert code == 1
    assert "SLP fails" in out
    assert out.count("FAIL") == 2


def test_slp_json_is_stable_across_runs(capsys, tmp_path):
    texts = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        code, _, _ = run(capsys, "slp", "--quadratic", "5", "--out", str(path))
        assert code == 0
        texts.append(json.dumps(strip_volatile(json.loads(path.read_text())), sort_keys=True))
    assert texts[0] == texts[1]


def test_char_search(capsys, tmp_path):
    path = tmp_path / "cs.json"
    code, out, _ = run(
        capsys, "char-search", "--quadratic", "4", "--primes", "2..13", "--out", str(path)
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("p=2: fails at")
    assert lines[1].startswith("p=3: fails at")
    assert lines[2] == "p=5: holds"
    payload = json.loads(path.read_text())
    verdicts = {entry["p"]: entry["slp"] for entry in payload["primes"]}
    assert verdicts == {2: False, 3: False, 5: True, 7: True, 11: True, 13: True}
    assert payload["primes"][0]["failing"] == [[0, 4], [1, 2]]


def test_embed_verify(capsys, tmp_path):
    path = tmp_path / "ev.json"
    code, out, _ = run(capsys, "embed-verify", "--exponents", "3,3", "--out", str(path))
    assert code == 0
    assert "embedding into 4 square-free variables" in out
    assert "socle scalar 4 (non-zero in the field): ok" in out
    payload = json.loads(path.read_text())
    assert payload["m"] == 4
    assert payload["powers"] == [2, 2]
    assert payload["source_exponents"] == [3, 3]
    assert payload["socle_scalar"] == "4"
    assert payload["socle_nonzero"] is True and payload["socle_ok"] is True
    assert [d["j"] for d in payload["degrees"]] == [0, 1, 2, 3, 4]
    assert all(d["ok"] for d in payload["degrees"])
    assert payload["slp_direct"] is True and payload["agree"] is True


def test_embed_verify_degenerate_characteristic(capsys):
    # mod 3 the (4,2) socle scalar vanishes, so injectivity fails somewhere
    code, out, _ = run(capsys, "embed-verify", "--exponents", "4,2", "--char", "3")
    assert code == 1


def test_bench(capsys, tmp_path):
    path = tmp_path / "bench.json"
    code, out, _ = run(capsys, "bench", "--quadratic", "5", "--out", str(path))
    assert code == 0
    assert "all methods agree on every rank" in out
    payload = json.loads(path.read_text())
    records = payload["records"]
    assert len(records) == 6
    assert {r["method"] for r in records} == {"dense", "block"}
    for r in records:
        assert set(r) == {"n", "i", "t", "rows", "cols", "method", "rank", "peak_bits", "ms"}


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert all(line.startswith("PASS") for line in lines)


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["slp"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["slp", "--quadratic", "3", "--exponents", "2,2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_input_errors_exit_two(capsys):
    code, _, err = run(capsys, "rank", "--quadratic", "3", "--i", "0", "--t", "99")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "slp", "--quadratic", "3", "--char", "4")
    assert code == 2
    code, _, err = run(capsys, "slp", "--quadratic", "3", "--form", "1,1")
    assert code == 2
    code, _, err = run(capsys, "embed-verify", "--exponents", "1,2")
    assert code == 2
    code, _, err = run(capsys, "bench", "--exponents", "3,3")
    assert code == 2
