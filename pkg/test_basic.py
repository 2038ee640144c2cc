"""
Simple test script for the LCD code toolkit - Basic functionality only
"""

import sys

from src.gf4 import GF4Matrix


def test_basic_imports():
    """Test basic imports"""
    print("Testing basic imports...")

    import numpy
    import psutil
    import sympy
    from dotenv import load_dotenv
    from pydantic import BaseModel

    import cli
    from src import bounds, certified_codes, code_io, codes, search
    print("✅ Toolkit and dependency imports successful")


def test_small_code():
    """Test a tiny LCD code end to end"""
    print("Testing a small code...")

    from src.codes import LinearCode, code_params, is_hermitian_lcd

    code = LinearCode(GF4Matrix.hstack(GF4Matrix.identity(2), GF4Matrix(["1 1", "1 w"])))
    assert code_params(code).n == 4
    assert not is_hermitian_lcd(code)
    print(f"✅ Built {code_params(code)} and checked its Gram matrix")


def main():
    """Run basic tests"""
    print("🚀 Starting Basic LCD Toolkit Tests\n")

    tests = [
        test_basic_imports,
        test_small_code
    ]

    passed = 0
    total = len(tests)

    for test in tests:
        try:
            test()
            passed += 1
        except Exception as e:
            print(f"❌ {test.__name__} failed: {e}")

    print(f"\n📊 Test Results: {passed}/{total} tests passed")

    if passed == total:
        print("🎉 Basic tests passed!")
        return True
    else:
        print("❌ Some tests failed!")
        return False


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
