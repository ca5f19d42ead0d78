"""CLI behavior through main(): exit codes, files, determinism, isolation."""

import csv
import json

from rankcrypt.cli import main


def run(*argv):
    return main(list(argv))


def _keygen(tmp_path, seed=11):
    prefix = str(tmp_path / "key")
    rc = run(
        "keygen", "--q", "2", "--m", "24", "--n", "20", "--k", "9",
        "--lambda", "2", "--s", "1", "--seed", str(seed), "--out", prefix,
    )
    assert rc == 0
    return prefix + ".pk.json", prefix + ".sk.json"


def test_params_file(tmp_path):
    out = str(tmp_path / "params.json")
    rc = run(
        "params", "--q", "2", "--m", "104", "--n", "26", "--k", "18",
        "--lambda", "6", "--s", "1", "--twisted", "--ell", "2", "--out", out,
    )
    assert rc == 0
    obj = json.loads(open(out).read())
    assert obj["instantiation"] == "twisted" and obj["ell"] == 2
    assert obj["field"]["m"] == 104


def test_roundtrip_via_files(tmp_path):
    pk, sk = _keygen(tmp_path)
    ct = str(tmp_path / "ct.json")
    rc = run("encrypt", "--in", pk, "--seed", "5", "--out", ct)
    assert rc == 0
    dec = str(tmp_path / "dec.json")
    rc = run("decrypt", "--in", sk, "--in", ct, "--out", dec)
    assert rc == 0
    planted = json.loads(open(str(tmp_path / "ct.msg.json")).read())
    got = json.loads(open(dec).read())
    assert planted["msg"] == got["msg"]


def test_encrypt_with_message_file(tmp_path):
    pk, sk = _keygen(tmp_path)
    msg_path = str(tmp_path / "m.json")
    k, m = 9, 24
    json.dump({"msg": ["1"] * k}, open(msg_path, "w"))
    ct = str(tmp_path / "ct.json")
    assert run("encrypt", "--in", pk, "--in", msg_path, "--seed", "5", "--out", ct) == 0
    dec = str(tmp_path / "dec.json")
    assert run("decrypt", "--in", sk, "--in", ct, "--out", dec) == 0
    assert json.loads(open(dec).read())["msg"] == ["1"] * k


def test_attack_success_and_isolation(tmp_path):
    pk, sk = _keygen(tmp_path)
    ct = str(tmp_path / "ct.json")
    assert run("encrypt", "--in", pk, "--seed", "7", "--out", ct) == 0
    # corrupt the secret key on disk: the attack must not notice
    open(sk, "w").write("THIS IS NOT JSON")
    rep = str(tmp_path / "rep.json")
    rc = run("attack", "--in", pk, "--in", ct, "--mode", "overbeck", "--report", rep)
    assert rc == 0
    obj = json.loads(open(rep).read())
    planted = json.loads(open(str(tmp_path / "ct.msg.json")).read())
    assert obj["success"] is True
    assert obj["recovered"] == planted["msg"]


def test_attack_failure_exits_one(tmp_path):
    pk, sk = _keygen(tmp_path)
    # a rank-22 vector that no rank-5 error can explain
    ct = str(tmp_path / "ct.json")
    json.dump({"format": 1, "c": [format(1 << i, "x") for i in range(22)]}, open(ct, "w"))
    rep = str(tmp_path / "rep.json")
    rc = run("attack", "--in", pk, "--in", ct, "--mode", "overbeck", "--report", rep)
    assert rc == 1
    assert json.loads(open(rep).read())["success"] is False


def test_deterministic_outputs(tmp_path):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    pk1, sk1 = _keygen(tmp_path / "a")
    pk2, sk2 = _keygen(tmp_path / "b")
    assert open(pk1).read() == open(pk2).read()
    assert open(sk1).read() == open(sk2).read()


def test_distinguish_gabidulin_csv(tmp_path):
    out = str(tmp_path / "prof.csv")
    rc = run(
        "distinguish", "--q", "2", "--m", "32", "--n", "26", "--k", "18",
        "--seed", "3", "--i-max", "3", "--out", out,
    )
    assert rc == 0
    rows = list(csv.reader(open(out)))
    assert rows[0] == ["i", "dim"]
    assert rows[1] == ["0", "18"] and rows[2] == ["1", "19"]


def test_distinguish_public_key(tmp_path):
    pk, _ = _keygen(tmp_path)
    out = str(tmp_path / "prof.csv")
    assert run("distinguish", "--in", pk, "--i-max", "2", "--out", out) == 0
    rows = list(csv.reader(open(out)))
    assert rows[1][1] == "9"  # dim Lambda_0 = k


def test_usage_errors_exit_two(tmp_path, capsys):
    assert run("keygen", "--q", "2", "--m", "24", "--n", "20", "--k", "9",
               "--lambda", "2", "--s", "1") == 2  # no --out
    err = capsys.readouterr().err
    assert json.loads(err.strip())["kind"] == "usage"
    assert run("decrypt", "--in", str(tmp_path / "nope.json"),
               "--in", str(tmp_path / "nope2.json"), "--out", "x") == 2
    # infeasible params
    assert run("keygen", "--q", "2", "--m", "24", "--n", "30", "--k", "9",
               "--lambda", "2", "--s", "1", "--out", str(tmp_path / "x")) == 2
