import json
import subprocess
import sys

from matmonoid.cli import EXIT_CAP, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def out_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_genset_ut(capsys):
    code, out = out_json(capsys, ["genset", "--monoid", "ut", "--n", "5", "--json"])
    assert code == EXIT_OK and out["rank"] == 16
    assert set(out) == {"monoid", "n", "rank", "generators", "certified"}


def test_genset_full_2(capsys):
    code, out = out_json(capsys, ["--json", "genset", "--monoid", "full", "--n", "2"])
    assert out["rank"] == 3


def test_usage_errors():
    assert main(["genset", "--monoid", "full", "--n", "0"]) == EXIT_USAGE
    assert main(["genset", "--monoid", "nope", "--n", "3"]) == EXIT_USAGE
    assert main(["tropical", "--flavor", "min", "--t", "0"]) == EXIT_USAGE


def test_tier_exceeded():
    assert main(["reproduce", "--table", "2", "--max-n", "5"]) == EXIT_CAP


def test_reproduce_table2(capsys):
    code, out = out_json(capsys, ["reproduce", "--table", "2", "--max-n", "4", "--json"])
    assert code == EXIT_OK
    assert [r["computed"] for r in out["rows"]] == [2, 7, 55, 1324]


def test_reproduce_table1_flags_ut(capsys):
    code, out = out_json(capsys, ["reproduce", "--table", "1", "--max-n", "9", "--json"])
    assert any("n=9" in d for d in out["discrepancies"])


def test_verify(tmp_path, capsys):
    main(["genset", "--monoid", "full", "--n", "3", "--json"])
    gens = json.loads(capsys.readouterr().out)["generators"]
    f = tmp_path / "dev3.txt"
    f.write_text("\n".join(gens) + "\n")
    assert main(["verify", "--gens", str(f), "--target", "full"]) == EXIT_OK
    g = tmp_path / "hall3.txt"
    g.write_text("\n".join(x for x in gens if x != "000010001") + "\n")
    assert main(["verify", "--gens", str(g), "--target", "full"]) == EXIT_FAIL
    assert main(["verify", "--gens", str(g), "--target", "hall"]) == EXIT_OK


def test_closure_cap(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("010100001\n010001100\n100110001\n000010001\n011101110\n")
    assert main(["closure", "--gens", str(f), "--cap", "50"]) == EXIT_CAP


def test_cache_round_trip(tmp_path, capsys):
    argv = ["primes", "--n", "4", "--cache", str(tmp_path), "--json"]
    main(argv)
    first = capsys.readouterr()
    main(argv)
    second = capsys.readouterr()
    assert first.out == second.out
    m1 = json.loads(first.err)["manifest"]
    m2 = json.loads(second.err)["manifest"]
    assert m1["digest"] == m2["digest"]
    assert m2["cache_hits"] == 1
    # a corrupted file is ignored
    (cached,) = tmp_path.iterdir()
    cached.write_text(cached.read_text().replace("count=3", "count=4"))
    main(argv)
    assert json.loads(capsys.readouterr().err)["manifest"]["cache_hits"] == 0


def test_zn_and_tropical(capsys):
    code, out = out_json(capsys, ["zn", "--n", "4", "--verify", "--json"])
    assert code == EXIT_OK and out["closure_size"] == 256
    code, out = out_json(capsys, ["tropical", "--flavor", "min", "--t", "1", "--verify", "--json"])
    assert code == EXIT_OK and out["count"] == 5


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "matmonoid", "enumerate", "--n", "3", "--count"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "5"
