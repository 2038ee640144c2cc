"""
Test script for the code file format
"""

import os
import sys
import tempfile

import pytest

from src.code_io import (
    CodeFormatError,
    format_code,
    parse_code_text,
    parse_matrix_text,
    read_code,
    write_code,
)
from src.codes import LinearCode


def _error(text: str) -> CodeFormatError:
    with pytest.raises(CodeFormatError) as info:
        parse_code_text(text)
    return info.value


def test_parse_and_format():
    print("Testing code file parsing...")
    text = "4 2\n1 0 w W\n0 1 1 w\n"
    code = parse_code_text(text, name="tiny")
    assert (code.n, code.k) == (4, 2)
    assert code.name == "tiny"
    assert format_code(code) == text
    assert parse_code_text("4 2\r\n1 0 w W\r\n0 1 1 w\r\n") == code
    assert parse_code_text(text + "\n\n") == code
    print("✅ Files parse and format symmetrically")


def test_format_errors():
    print("Testing malformed files...")
    assert _error("").line == 1
    assert _error("4\n1 0 0 0\n").line == 1
    assert _error("4 x\n1 0 0 0\n").line == 1
    assert _error("0 1\n\n").line == 1

    bad_symbol = _error("4 2\n1 0 w W\n0 1 2 w\n")
    assert (bad_symbol.line, bad_symbol.column) == (3, 5)
    assert "line 3, column 5" in str(bad_symbol)

    double_space = _error("4 1\n1  0 w W\n")
    assert (double_space.line, double_space.column) == (2, 3)

    assert _error("4 2\n1 0 w W\n0 1 1\n").line == 3
    assert _error("4 2\n1 0 w W\n").line == 3
    assert _error("4 1\n1 0 w W\n0 1 1 w\n").line == 3

    rank_deficient = _error("3 2\n1 w 0\nw W 0\n")
    assert rank_deficient.line == 2
    # matrices without a rank requirement still parse
    assert parse_matrix_text("3 2\n1 w 0\nw W 0\n").rank() == 1
    print("✅ Errors report 1-based line and column")


def test_read_and_write():
    code = LinearCode(["1 0 0 w W", "0 1 0 1 1", "0 0 1 W 0"])
    with tempfile.TemporaryDirectory() as tmp:
        path = write_code(code, os.path.join(tmp, "out", "sample.txt"))
        loaded = read_code(path)
        assert loaded == code
        assert loaded.name == "sample"
        assert read_code(path, name="renamed").name == "renamed"
        with pytest.raises(OSError):
            read_code(os.path.join(tmp, "missing.txt"))

        binary = os.path.join(tmp, "binary.txt")
        with open(binary, "wb") as f:
            f.write(b"2 1\n1 \xff\n")
        with pytest.raises(CodeFormatError) as info:
            read_code(binary)
        assert (info.value.line, info.value.column) == (2, 3)

        windows = os.path.join(tmp, "windows.txt")
        with open(windows, "wb") as f:
            f.write(b"2 1\r\n1 w\r\n")
        assert read_code(windows) == LinearCode(["1 w"])


def main():
    """Run code file tests"""
    print("🚀 Starting Code File Tests\n")

    tests = [
        test_parse_and_format,
        test_format_errors,
        test_read_and_write,
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
        print("🎉 All code file tests passed!")
        return True
    else:
        print("❌ Some tests failed!")
        return False


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
