"""
Test script for bounds and closed forms on d4(n,k)
"""

import itertools
import sys

import numpy as np
import pytest
from pydantic import ValidationError

from config import config
from src.bounds import (
    NONEXISTENCE_RESULTS,
    BoundRecord,
    BoundSource,
    bound_record,
    build_weight2_lcd,
    d4_dimension_n_minus_1,
    d4_dimension_n_minus_2,
    d4_dimension_n_minus_3,
    recorded_upper_bounds,
    sphere_packing_max_d,
    sphere_packing_ok,
    weight2_lcd_threshold,
)
from src.certified_codes import witness_table
from src.codes import LinearCode, count_low_weight, hermitian_gram, is_hermitian_lcd, minimum_weight
from src.gf4 import GF4Matrix


def _best_lcd_distance(n: int, k: int) -> int:
    """Largest d over Hermitian LCD codes (I_k | A), trying every A"""
    best = 0
    for values in itertools.product(range(4), repeat=k * (n - k)):
        block = np.array(values, dtype=np.uint8).reshape(k, n - k)
        code = LinearCode(np.hstack((np.eye(k, dtype=np.uint8), block)))
        if is_hermitian_lcd(code):
            best = max(best, minimum_weight(code))
    return best


def _best_column_lcd_distance(n: int, rng) -> int:
    """
    Largest d over Hermitian LCD codes (I_{n-1} | a^T)

    Scaling a nonzero a_i keeps a_i conj(a_i) = 1 and every weight, so one 0/1
    column per support covers all 4^(n-1) choices; a randomly scaled column
    with the same support must agree.
    """
    best = 0
    for support in itertools.product((0, 1), repeat=n - 1):
        column = np.array(support, dtype=np.uint8)
        scaled = column * rng.integers(1, 4, size=n - 1).astype(np.uint8)
        results = set()
        for a in (column, scaled):
            code = LinearCode(np.hstack((np.eye(n - 1, dtype=np.uint8), a[:, None])))
            results.add((is_hermitian_lcd(code), minimum_weight(code)))
        assert len(results) == 1, support
        lcd, distance = results.pop()
        if lcd:
            best = max(best, distance)
    return best


def test_sphere_packing():
    print("Testing the sphere-packing bound...")
    assert sphere_packing_ok(5, 3, 3)
    assert not sphere_packing_ok(6, 4, 3)
    assert sphere_packing_ok(21, 18, 3)
    assert not sphere_packing_ok(22, 19, 3)
    assert not sphere_packing_ok(12, 6, 7)
    assert sphere_packing_max_d(12, 6) == 6
    assert sphere_packing_max_d(22, 19) == 2
    assert sphere_packing_max_d(5, 3) == 3
    with pytest.raises(ValueError):
        sphere_packing_ok(4, 0, 1)
    with pytest.raises(ValueError):
        sphere_packing_ok(4, 5, 1)
    for name, (n, k, d) in witness_table().items():
        assert sphere_packing_ok(n, k, d), name
    print("✅ Hamming bound holds for every certified witness")


def test_weight2_construction():
    print("Testing the weight-2 construction...")
    assert weight2_lcd_threshold(2) == 5
    assert weight2_lcd_threshold(3) == 21
    with pytest.raises(ValueError):
        weight2_lcd_threshold(0)
    with pytest.raises(ValueError):
        build_weight2_lcd(4, 1)
    with pytest.raises(ValueError):
        build_weight2_lcd(4, 3)

    for i in (2, 3):
        for n in range(i + 2, 51):
            code = build_weight2_lcd(n, i)
            assert (code.n, code.k) == (n, n - i)
            assert code.name == f"W{n}_{i}"
            assert hermitian_gram(code) == GF4Matrix.identity(n - i)
            low = count_low_weight(code, 2)
            assert low[1] == 0 and low[2] > 0
    print("✅ (I | 1 1 0 ... 0) has G conj(G)^T = I and d = 2")


def test_closed_forms():
    print("Testing closed forms...")
    for n in range(2, 51):
        assert d4_dimension_n_minus_1(n) == (1 if n % 2 == 0 else 2)
    assert d4_dimension_n_minus_2(3) == 3
    for n in range(4, 51):
        assert d4_dimension_n_minus_2(n) == 2
    for n in range(4, 51):
        assert d4_dimension_n_minus_3(n) == (3 if n <= 18 else 2)
    assert d4_dimension_n_minus_3(18) == 3
    assert d4_dimension_n_minus_3(19) == 2

    # past the threshold no [n, n-3, 3]_4 code exists at all
    for n in range(22, 51):
        assert not sphere_packing_ok(n, n - 3, 3)
    for n in (19, 20, 21):
        assert (n, n - 3, 3) in NONEXISTENCE_RESULTS

    with pytest.raises(ValueError):
        d4_dimension_n_minus_1(1)
    with pytest.raises(ValueError):
        d4_dimension_n_minus_2(2)
    with pytest.raises(ValueError):
        d4_dimension_n_minus_3(3)
    print("✅ Closed forms hold for n up to 50")


def test_closed_forms_by_enumeration():
    print("Testing small closed forms by full enumeration...")
    for n in range(2, 6):
        assert _best_lcd_distance(n, n - 1) == d4_dimension_n_minus_1(n)
    rng = np.random.default_rng(config.get("random.seed"))
    for n in range(2, 9):
        assert _best_column_lcd_distance(n, rng) == d4_dimension_n_minus_1(n), n
    for n in range(3, 6):
        assert _best_lcd_distance(n, n - 2) == d4_dimension_n_minus_2(n)
    print("✅ d4(n,n-1) for n <= 8 and d4(n,n-2) for n <= 5 confirmed")


def test_bound_record_validation():
    with pytest.raises(ValidationError):
        BoundRecord(n=12, k=6, lower=7, upper=6)
    with pytest.raises(ValidationError):
        BoundRecord(n=12, k=6, quantity="dX")
    record = BoundRecord(n=12, k=6, lower=5, upper=5)
    assert record.exact == 5
    assert BoundRecord(n=12, k=6, lower=5, upper=6).exact is None
    assert "d4(12,6) = 5" in record.describe()


def test_bound_records():
    print("Testing assembled bounds...")
    witnesses = witness_table()

    d12 = bound_record(12, 6, witnesses)
    assert d12.exact == 5
    assert d12.witness == "D12"
    assert d12.upper_source == BoundSource.EXHAUSTIVE

    d20 = bound_record(20, 8, witnesses)
    assert (d20.lower, d20.upper) == (9, 10)
    assert d20.exact is None

    c15 = bound_record(15, 7, witnesses)
    assert c15.exact == 7 and c15.witness == "C15"
    assert c15.upper_source == BoundSource.RECORDED

    assert bound_record(19, 16).exact == 2
    assert bound_record(18, 15).exact == 3
    assert bound_record(10, 9).exact == 1
    assert bound_record(11, 10).exact == 2
    assert bound_record(10, 10).exact == 1

    unknown = bound_record(30, 5)
    assert unknown.lower == 1
    assert unknown.upper == sphere_packing_max_d(30, 5)
    assert unknown.upper_source == BoundSource.SPHERE_PACKING

    with pytest.raises(ValueError):
        bound_record(3, 4)
    print("✅ Witnesses, recorded bounds and nonexistence results combine correctly")


def test_recorded_upper_bounds():
    records = recorded_upper_bounds()
    quantities = [r.quantity for r in records]
    assert quantities == sorted(quantities)
    assert quantities.count("d4") == quantities.count("dQ") == 8
    by_key = {(r.quantity, r.n, r.k): r for r in records}
    assert by_key[("d4", 20, 7)].upper == 10
    assert (by_key[("dQ", 12, 6)].lower, by_key[("dQ", 12, 6)].upper) == (5, 6)
    assert all(r.upper_source == BoundSource.RECORDED for r in records)


def main():
    """Run bounds tests"""
    print("🚀 Starting Bounds Tests\n")

    tests = [
        test_sphere_packing,
        test_weight2_construction,
        test_closed_forms,
        test_closed_forms_by_enumeration,
        test_bound_record_validation,
        test_bound_records,
        test_recorded_upper_bounds,
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
        print("🎉 All bounds tests passed!")
        return True
    else:
        print("❌ Some tests failed!")
        return False


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
