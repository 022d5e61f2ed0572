"""CLI surface: golden outputs, determinism, exit codes."""

import json
import os
import subprocess
import sys

SRC = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir, "src"))


def run_cli(*args, check=True):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "aztecgf.cli", *args],
        capture_output=True,
        env=env,
    )
    if check and proc.returncode != 0:
        raise AssertionError(f"cli failed: {proc.stderr.decode()}")
    return proc


def test_genfun_golden():
    out = run_cli("genfun", "--m", "2", "--n", "2", "--holes", "1,2", "--method", "closed")
    assert out.stdout.decode() == "1 + 2*t*q + t^2*q^2 + t*q^3 + 2*t^2*q^4 + t^3*q^5\n"


def test_genfun_methods_agree():
    outputs = set()
    for method in ("brute", "dp", "closed"):
        out = run_cli("genfun", "--m", "2", "--n", "4", "--holes", "1,3", "--method", method)
        outputs.add(out.stdout)
    assert len(outputs) == 1


def test_genfun_json():
    out = run_cli("genfun", "--m", "1", "--n", "2", "--holes", "2", "--json")
    obj = json.loads(out.stdout.decode())
    assert obj == {"terms": [{"q": 0, "t": 0, "coeff": "1"}, {"q": 1, "t": 1, "coeff": "1"}]}


def test_count_commands():
    assert run_cli("count", "--region", "rect", "--m", "3", "--n", "6", "--holes", "1,4,6").stdout == b"960\n"
    assert run_cli("count", "--region", "semihex", "--a", "3", "--b", "2", "--dents", "2,3,5").stdout == b"3\n"
    assert run_cli("count", "--region", "aztec", "--order", "4", "--method", "dp").stdout == b"1024\n"
    threaded = run_cli("count", "--region", "rect", "--m", "2", "--n", "3", "--holes", "1,3", "--threads", "3")
    plain = run_cli("count", "--region", "rect", "--m", "2", "--n", "3", "--holes", "1,3")
    assert threaded.stdout == plain.stdout


def test_render_determinism(tmp_path):
    f1, f2 = tmp_path / "a.svg", tmp_path / "b.svg"
    args = ("render", "--region", "rect", "--m", "3", "--n", "6", "--holes", "1,4,6",
            "--tiling", "minimal", "--paths", "--format", "svg")
    run_cli(*args, "--out", str(f1))
    run_cli(*args, "--out", str(f2))
    data = f1.read_bytes()
    assert data == f2.read_bytes()
    assert data.count(b"<rect") == 42 // 2
    assert data.count(b"<polyline") == 3


def test_render_region_only_and_ascii():
    out = run_cli("render", "--region", "aztec", "--order", "1", "--format", "ascii")
    assert out.stdout.decode().count("+") > 0
    out = run_cli("render", "--region", "semihex", "--a", "2", "--b", "1", "--dents", "1,3",
                  "--tiling", "0", "--format", "ascii")
    assert out.stdout.decode().strip() != ""
    # region-only SVG outlines one shape per cell
    out = run_cli("render", "--region", "aztec", "--order", "2", "--format", "svg")
    assert out.stdout.decode().count("<rect") == 12


def test_render_from_serialized_region(tmp_path):
    import aztecgf

    region = aztecgf.aztec_rectangle_with_holes(2, 3, (1, 3))
    path = tmp_path / "region.json"
    path.write_text(json.dumps(region.to_json_obj()))
    out = run_cli("render", "--in", str(path), "--format", "ascii")
    assert out.stdout.decode().count("+") > 0


def test_bench_table():
    out = run_cli("bench", "--order", "3")
    text = out.stdout.decode()
    assert "dp ms" in text and "brute ms" in text
    assert text.count("\n") == 4  # header plus one row per order


def test_invalid_flags_exit_2():
    assert run_cli("count", "--region", "rect", check=False).returncode == 2
    assert run_cli("genfun", "--m", "2", "--n", "2", check=False).returncode == 2
    assert run_cli("verify", "--suite", "nonsense", check=False).returncode == 2
    assert run_cli("genfun", "--m", "2", "--n", "2", "--holes", "x,y", check=False).returncode == 2
    # semantically invalid values are rejected cleanly too
    assert run_cli("genfun", "--m", "2", "--n", "4", "--holes", "1,2,3", check=False).returncode == 2
    assert run_cli("count", "--region", "semihex", "--a", "2", "--b", "1", "--dents", "1,9", check=False).returncode == 2


def test_verify_suite_exits_zero():
    out = run_cli("verify", "--suite", "diamond")
    text = out.stdout.decode()
    assert "FAIL" not in text
    assert text.strip().endswith("suite diamond: ok")
