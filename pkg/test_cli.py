"""
Test script for the lcd4 command-line interface
"""

import io
import json
import os
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

from cli import main as cli_main
from src.certified_codes import build, certificate
from src.code_io import format_code, read_code, write_code
from src.codes import LinearCode, is_hermitian_lcd, weight_enumerator


def run(*argv):
    """Run the CLI, returning (exit code, stdout, stderr)"""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli_main(["--log-level", "WARNING", *argv])
    return code, out.getvalue(), err.getvalue()


def test_verify():
    print("Testing verify...")
    code, out, _ = run("verify", "--all")
    assert code == 0
    assert "18/18 passed" in out

    code, out, _ = run("verify", "C15", "--json")
    assert code == 0
    report = json.loads(out)
    assert report == {"name": "C15", "n": 15, "k": 7, "d": 7, "lcd": True, "enumerator_ok": True, "pass": True}

    with tempfile.TemporaryDirectory() as tmp:
        code, _, _ = run("verify", "D12", "--save-report", tmp)
        assert code == 0
        saved = os.listdir(tmp)
        assert len(saved) == 1
        with open(os.path.join(tmp, saved[0]), encoding="utf-8") as f:
            assert json.load(f)[0]["name"] == "D12"

    assert run("verify")[0] == 2
    assert run("verify", "C15", "--all")[0] == 2
    assert run("verify", "C99")[0] == 2
    print("✅ verify reports and exit codes are correct")


def test_verify_failure_exit_code():
    with tempfile.TemporaryDirectory() as tmp:
        code, _, err = run("--data-dir", os.path.join(tmp, "nowhere"), "verify", "C15")
        assert code == 1
        assert "error" in err


def test_dump():
    code, out, _ = run("dump", "C15")
    assert code == 0
    assert out == format_code(build("C15"))
    assert out.startswith("15 7\n")

    code, out, _ = run("dump", "C14", "--enumerator")
    assert code == 0
    assert out.strip() == certificate("C14").enumerator


def test_transform():
    print("Testing transform...")
    original = LinearCode(["1 0 0 w W 1", "0 1 0 1 1 0", "0 0 1 W 0 w"])
    with tempfile.TemporaryDirectory() as tmp:
        source = write_code(original, os.path.join(tmp, "code.txt"))
        dual = os.path.join(tmp, "dual.txt")
        back = os.path.join(tmp, "back.txt")
        assert run("transform", source, "--hermitian-dual", "--output", dual)[0] == 0
        assert read_code(dual).k == 3
        assert run("transform", dual, "--hermitian-dual", "--output", back)[0] == 0
        assert read_code(back) == original

        code, out, _ = run("transform", source, "--shorten", "2")
        assert code == 0
        assert out.startswith("5 2\n")

        code, out, _ = run("transform", source, "--puncture", "6")
        assert code == 0
        assert out.startswith("5 3\n")

        assert run("transform", source, "--shorten", "7")[0] == 1

        code, out, _ = run("transform", source, "--standard-form")
        assert code == 0
        assert out.splitlines()[1].startswith("1 0 0")

        moved = os.path.join(tmp, "moved.txt")
        assert run("--seed", "7", "transform", source, "--random-monomial", "--output", moved)[0] == 0
        image = read_code(moved)
        assert is_hermitian_lcd(image) == is_hermitian_lcd(original)
        assert weight_enumerator(image) == weight_enumerator(original)
    print("✅ Transforms round-trip through code files")


def test_malformed_file():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "bad.txt")
        with open(path, "w", encoding="utf-8") as f:
            f.write("3 1\n1 x 0\n")
        code, _, err = run("transform", path, "--hermitian-dual")
        assert code == 1
        assert "line 2, column 3" in err

        code, _, err = run("transform", os.path.join(tmp, "missing.txt"), "--euclidean-dual")
        assert code == 1


def test_usage_errors():
    assert run()[0] == 2
    assert run("search", "--n", "x", "--k", "2", "--d", "3")[0] == 2
    assert run("transform", "file.txt")[0] == 2
    assert run("transform", "file.txt", "--shorten", "1", "--puncture", "1")[0] == 2
    assert run("bounds")[0] == 2
    assert run("search", "--n", "7", "--k", "3", "--d", "3", "--resume")[0] == 2
    assert run("--help")[0] == 0
    assert run("--log-level", "bogus", "bounds", "--n", "5", "--k", "3")[0] == 2
    assert run("--log-level", "error", "bounds", "--n", "5", "--k", "3")[0] == 0
    with mock.patch.dict(os.environ, {"LCD4_LOG_LEVEL": "LOUD"}):
        with redirect_stderr(io.StringIO()) as err:
            assert cli_main(["bounds", "--n", "5", "--k", "3"]) == 2
        assert "LOUD" in err.getvalue()


def test_bounds():
    code, out, _ = run("bounds", "--n", "12", "--k", "6", "--json")
    assert code == 0
    record = json.loads(out)
    assert (record["lower"], record["upper"]) == (5, 5)
    assert record["upper_source"] == "exhaustive-search"

    code, out, _ = run("bounds", "--n", "20", "--k", "8")
    assert code == 0
    assert "9 <= d4(20,8) <= 10" in out

    code, out, _ = run("bounds", "--derive")
    assert code == 0
    assert "d4(12,6) = 5" in out

    assert run("bounds", "--n", "3", "--k", "4")[0] == 1


def test_search():
    print("Testing search...")
    code, out, _ = run("search", "--n", "6", "--k", "4", "--d", "3")
    assert code == 0
    assert "no code exists; complete=true" in out
    assert "nodes_visited=" in out

    code, out, _ = run("search", "--n", "7", "--k", "3", "--d", "3", "--mode", "first")
    assert code == 0
    assert "found 1 code(s)" in out
    assert "7 3\n1 0 0" in out

    assert run("search", "--n", "5", "--k", "3", "--d", "4")[0] == 1

    with tempfile.TemporaryDirectory() as tmp:
        checkpoint = os.path.join(tmp, "run.ckpt")
        code, out, _ = run("search", "--n", "8", "--k", "4", "--d", "3", "--checkpoint", checkpoint,
                           "--max-nodes", "5")
        assert code == 0
        assert "complete=false" in out
        code, out, _ = run("search", "--n", "8", "--k", "4", "--d", "3", "--checkpoint", checkpoint, "--resume")
        assert code == 0
        assert "complete=true" in out
        assert run("search", "--n", "8", "--k", "4", "--d", "4", "--checkpoint", checkpoint, "--resume")[0] == 1
        missing = os.path.join(tmp, "missing.ckpt")
        assert run("search", "--n", "8", "--k", "4", "--d", "3", "--checkpoint", missing, "--resume")[0] == 1
    print("✅ search prints outcomes and resumes from checkpoints")


def main():
    """Run CLI tests"""
    print("🚀 Starting CLI Tests\n")

    tests = [
        test_verify,
        test_verify_failure_exit_code,
        test_dump,
        test_transform,
        test_malformed_file,
        test_usage_errors,
        test_bounds,
        test_search,
    ]

    passed = 0
    total = len(tests)

    for test in tests:
        try:
            test()
            passed += 1
        except Exception as e:
            print(f"❌ {test.__name__} failed: {e!r}")

    print(f"\n📊 Test Results: {passed}/{total} tests passed")

    if passed == total:
        print("🎉 All CLI tests passed!")
        return True
    else:
        print("❌ Some tests failed!")
        return False


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
