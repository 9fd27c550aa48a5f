import json

from rootcover import cli


def _run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def _json_tail(out):
    start = out.index("{")
    return json.loads(out[start:])


def test_counts_command(capsys):
    code, out = _run(capsys, ["counts", "--g", "3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["arf0"] == 36 and payload["arf1"] == 28


def test_counts_rejects_large_g(capsys):
    assert cli.main(["counts", "--g", "9"]) == 2


def test_delpezzo_command(capsys):
    code, out = _run(capsys, ["delpezzo"])
    assert code == 0
    payload = json.loads(out)
    assert payload["e7_roots"] == 126
    assert payload["e6_roots"] == 72
    assert payload["lines"] == 56
    assert payload["meeting_e"] == 27
    assert payload["e6_discriminant"] == [3]
    assert payload["e7_discriminant"] == [2]


def test_build_small_type(capsys):
    code, out = _run(capsys, ["build", "--type", "A2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 8
    assert payload["fixed_dim"] == 3
    assert payload["trace_theta"] == -2


def test_build_rejects_rank_one(capsys):
    assert cli.main(["build", "--type", "A1"]) == 2


def test_build_deterministic_bytes(tmp_path):
    out1 = tmp_path / "one.json"
    out2 = tmp_path / "two.json"
    assert cli.main(["build", "--type", "A3", "--out", str(out1)]) == 0
    assert cli.main(["build", "--type", "A3", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_small_exhaustive(capsys, tmp_path):
    out = tmp_path / "verify.json"
    code = cli.main(["verify", "--type", "A2", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["ok"] is True
    assert payload["checks"]["jacobi"]["ok"] is True
    assert payload["checks"]["jacobi"]["sampled"] is False


def test_verify_sampled_records_seed(capsys, tmp_path):
    out = tmp_path / "verify.json"
    code = cli.main(["verify", "--type", "D4", "--depth", "sampled",
                     "--seed", "7", "--samples", "500", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["config"]["seed"] == 7
    assert payload["checks"]["jacobi"]["sampled"] is True
    assert payload["checks"]["jacobi"]["checked_unordered"] == 500


def test_verify_sampled_deterministic(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for path in (a, b):
        assert cli.main(["verify", "--type", "D4", "--depth", "sampled",
                         "--seed", "3", "--samples", "200",
                         "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_table_command(capsys, tmp_path):
    out = tmp_path / "table.json"
    code = cli.main(["table", "real-orbits", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["weyl_order"] == 51840
    rows = payload["rows"]
    assert [r["real_bitangents"] for r in rows] == [28, 16, 8, 4, 4]
    assert [r["j_mod_2j"] for r in rows] == [8, 4, 2, 1, 2]
    assert [r["orbits"] for r in rows] == [36, 10, 3, 1, 3]


def test_quartic_command(capsys):
    code, out = _run(capsys, ["quartic", "e6",
                              "--params", "0,0,0,0,0,1",
                              "--probe", "5,7,11"])
    assert code == 0
    payload = json.loads(out)
    assert payload["contact_order"] == 4
    assert payload["verdict"]["kind"] == "SMOOTH"


def test_quartic_singular_member(capsys):
    code, out = _run(capsys, ["quartic", "e6", "--params", "0,0,0,0,0,0"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"]["kind"] == "SINGULAR"
    assert payload["verdict"]["witness"] == [0, 0, 1]


def test_quartic_e7_with_fractions(capsys):
    code, out = _run(capsys, ["quartic", "e7",
                              "--params", "1/2,0,3,0,0,1,2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["contact_order"] == 3


def test_quartic_bad_params(capsys):
    assert cli.main(["quartic", "e6", "--params", "1,2"]) == 2
