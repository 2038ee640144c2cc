"""
Test script for the generator-matrix search
"""

import os
import sys
import tempfile
from typing import Optional

import pytest
from pydantic import ValidationError

from src.bounds import d4_dimension_n_minus_1, d4_dimension_n_minus_2, d4_dimension_n_minus_3
from src.certified_codes import DEFAULT_DATA_DIRECTORY
from src.code_io import read_matrix_file
from src.codes import is_hermitian_lcd, minimum_weight
from src.gf4 import GF4Vector
from src.search import (
    CHECKPOINT_HEADER,
    Checkpoint,
    CheckpointError,
    SearchConfig,
    SearchMode,
    brute_force_normal_form,
    checkpoint_from_outcome,
    enumerate_rows,
    first_row,
    format_checkpoint,
    load_checkpoint,
    parse_checkpoint,
    partial_min_weight_ok,
    resume_search,
    run_search,
    save_checkpoint,
)

RUN_SLOW = os.getenv("LCD4_RUN_SLOW") == "1"
slow = pytest.mark.skipif(not RUN_SLOW, reason="set LCD4_RUN_SLOW=1 to run long searches")


def _generators(codes):
    return [code.generator for code in codes]


def test_config_validation():
    print("Testing search configuration...")
    cfg = SearchConfig(n=12, k=6, d=6)
    assert cfg.mode == SearchMode.EXHAUSTIVE
    assert cfg.row_length == 6 and cfg.strict_order
    assert not SearchConfig(n=5, k=3, d=2).strict_order
    assert SearchMode("first") == SearchMode.FIRST_HIT
    with pytest.raises(ValidationError):
        SearchConfig(n=5, k=3, d=4)
    with pytest.raises(ValidationError):
        SearchConfig(n=6, k=3, d=1)
    with pytest.raises(ValidationError):
        SearchConfig(n=6, k=1, d=3)
    with pytest.raises(ValidationError):
        SearchConfig(n=6, k=3, d=3, parallel_width=0)
    print("✅ Invalid search parameters are rejected")


def test_enumerate_rows():
    print("Testing candidate rows...")
    assert len(enumerate_rows(6, 6)) == 729
    assert len(enumerate_rows(3, 3)) == 18
    assert len(enumerate_rows(4, 2)) == 85

    rows = enumerate_rows(3, 3)
    assert [r.index for r in rows] == list(range(18))
    assert all(r.vector.leading_symbol().value == 1 for r in rows)
    assert all(r.vector.weight() >= 2 for r in rows)
    vectors = [r.vector for r in rows]
    assert vectors == sorted(vectors)
    assert rows[0].vector == GF4Vector("0 1 1")
    assert rows[-1].vector == GF4Vector("1 W W")

    with pytest.raises(ValueError):
        enumerate_rows(3, 1)
    print("✅ Rows are complete, normalized and ordered")


def test_first_row():
    assert first_row(15, 7, 7).vector == GF4Vector("0 0 1 1 1 1 1 1")
    assert first_row(20, 7, 10).vector == GF4Vector("0 0 0 0 1 1 1 1 1 1 1 1 1")
    assert first_row(12, 6, 6).vector == GF4Vector("0 1 1 1 1 1")
    for n, k, d in [(12, 6, 6), (8, 3, 4), (7, 3, 3), (19, 16, 3)]:
        assert enumerate_rows(n - k, d)[0].vector == first_row(n, k, d).vector
    with pytest.raises(ValueError):
        first_row(5, 3, 4)


def test_partial_min_weight():
    print("Testing partial minimum weight...")
    m20 = read_matrix_file(os.path.join(DEFAULT_DATA_DIRECTORY, "M20.txt"))
    assert partial_min_weight_ok([m20.row(0), m20.row(1)], 2, 10)
    assert partial_min_weight_ok(m20.row_vectors()[:4], 4, 10)

    r1 = first_row(12, 6, 6)
    assert not partial_min_weight_ok([r1, r1], 2, 3)
    assert not partial_min_weight_ok([r1, r1], 2, 6)
    with pytest.raises(ValueError):
        partial_min_weight_ok([r1], 1, 6)
    with pytest.raises(ValueError):
        partial_min_weight_ok([r1, r1], 3, 6)
    print("✅ Prefixes of a d = 10 generator keep weight >= 10")


def test_completeness_against_brute_force():
    print("Testing search completeness against brute force...")
    for n, k, d in [(6, 2, 3), (7, 3, 3), (8, 3, 4), (5, 3, 2)]:
        outcome = run_search(SearchConfig(n=n, k=k, d=d))
        expected = brute_force_normal_form(n, k, d)
        assert outcome.complete
        assert _generators(outcome.found) == _generators(expected)
        for code in outcome.found:
            assert is_hermitian_lcd(code)
            assert minimum_weight(code) >= d
        print(f"   ({n},{k},{d}): {len(expected)} codes, {outcome.nodes_visited} nodes")
    print("✅ Pruned search accepts exactly the brute-force set")


def test_exact_distance_existence_matches_unrestricted():
    print("Testing existence against unrestricted enumeration...")
    for n, k, d in [(4, 2, 3), (5, 2, 3), (5, 2, 4), (6, 2, 4), (5, 3, 2), (5, 3, 3)]:
        unrestricted = brute_force_normal_form(n, k, d, unrestricted=True)
        found = run_search(SearchConfig(n=n, k=k, d=d)).found
        exact_unrestricted = any(minimum_weight(c) == d for c in unrestricted)
        exact_found = any(minimum_weight(c) == d for c in found)
        assert exact_unrestricted == exact_found, (n, k, d)
        assert set(found) <= set(unrestricted)
    with pytest.raises(ValueError):
        brute_force_normal_form(7, 3, 3, unrestricted=True)
    print("✅ The normal form loses no exact-d code")


def test_closed_forms_agree_with_search():
    print("Testing closed forms against exhaustive search...")
    cases = [(n, n - 1, d4_dimension_n_minus_1(n)) for n in range(3, 8)]
    cases += [(n, n - 2, d4_dimension_n_minus_2(n)) for n in range(4, 8)]
    cases += [(n, n - 3, d4_dimension_n_minus_3(n)) for n in range(6, 9)]
    for n, k, d in cases:
        if d >= 2:
            outcome = run_search(SearchConfig(n=n, k=k, d=d))
            assert outcome.found, (n, k, d)
        if n - k >= d:
            outcome = run_search(SearchConfig(n=n, k=k, d=d + 1))
            assert outcome.nonexistence, (n, k, d + 1)
    print("✅ d4(n,n-1), d4(n,n-2) and d4(n,n-3) match the search")


def test_first_hit_mode():
    exhaustive = run_search(SearchConfig(n=7, k=3, d=3))
    assert exhaustive.found
    first = run_search(SearchConfig(n=7, k=3, d=3, mode=SearchMode.FIRST_HIT))
    assert first.found_paths == exhaustive.found_paths[:1]
    assert first.nodes_visited <= exhaustive.nodes_visited
    if len(exhaustive.found) > 1:
        assert not first.complete and first.frontier


def test_nodes_nonincreasing_in_distance():
    print("Testing node counts against the target distance...")
    visited = [run_search(SearchConfig(n=7, k=3, d=d)).nodes_visited for d in (2, 3, 4, 5)]
    assert visited == sorted(visited, reverse=True)
    # no row of weight 4 survives next to (1 1 1 1)
    assert visited[-1] == 1
    print(f"   (7,3,d) for d = 2..5: {visited}")
    print("✅ A larger distance never visits more nodes")


def test_parallel_is_deterministic():
    print("Testing parallel determinism...")
    single = run_search(SearchConfig(n=8, k=4, d=3))
    for width in (2, 3):
        parallel = run_search(SearchConfig(n=8, k=4, d=3, parallel_width=width))
        assert parallel.complete
        assert parallel.found_paths == single.found_paths
        assert parallel.nodes_visited == single.nodes_visited
    print("✅ Results and node counts do not depend on the worker count")


def test_parallel_first_hit_resumes_inside_branch():
    print("Testing resume after a parallel first hit...")
    full = run_search(SearchConfig(n=7, k=3, d=3))
    serial = run_search(SearchConfig(n=7, k=3, d=3, mode=SearchMode.FIRST_HIT))
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "first.ckpt")
        parallel = run_search(SearchConfig(n=7, k=3, d=3, mode=SearchMode.FIRST_HIT, parallel_width=2),
                              checkpoint_path=path)
        assert parallel.found_paths == full.found_paths[:1]
        assert parallel.frontier == serial.frontier
        assert len(parallel.frontier) > 1
        assert parallel.nodes_visited == serial.nodes_visited
        assert load_checkpoint(path) == checkpoint_from_outcome(parallel)

        resumed = resume_search(SearchConfig(n=7, k=3, d=3, parallel_width=2), path)
        assert resumed.complete
        assert resumed.found_paths == full.found_paths
        assert resumed.nodes_visited == full.nodes_visited
    print("✅ The rest of the branch holding the first hit is still visited")


def _split_run_matches(n: int, k: int, d: int, budget: Optional[int] = None):
    """A run split in three by checkpoints ends where one run does; budget caps both at that many nodes"""
    cfg = SearchConfig(n=n, k=k, d=d)
    reference = run_search(cfg, max_nodes=budget)
    assert reference.complete == (budget is None)
    total = reference.nodes_visited
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "search.ckpt")
        first = run_search(cfg, max_nodes=total // 3, checkpoint_path=path)
        assert not first.complete and first.frontier
        saved = load_checkpoint(path)
        assert saved.frontier == first.frontier
        assert saved.visited == first.nodes_visited

        second = resume_search(cfg, path, max_nodes=2 * total // 3)
        assert not second.complete
        final = resume_search(cfg, path, max_nodes=budget)
        assert final.complete == reference.complete
        assert final.found_paths == reference.found_paths
        assert final.nodes_visited == reference.nodes_visited
        assert final.frontier == reference.frontier
        assert load_checkpoint(path).frontier == reference.frontier


def test_checkpoint_split_run():
    print("Testing checkpoint and resume...")
    _split_run_matches(8, 4, 3)
    print("✅ A split run visits exactly the nodes of a single run")


def test_immediate_checkpoint():
    cfg = SearchConfig(n=7, k=3, d=3)
    full = run_search(cfg)
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "immediate.ckpt")
        stopped = run_search(cfg, max_nodes=1, checkpoint_path=path)
        assert stopped.nodes_visited == 1
        assert len(stopped.frontier) == 1
        assert not stopped.found
        resumed = resume_search(cfg, path)
        assert resumed.found_paths == full.found_paths
        assert resumed.nodes_visited == full.nodes_visited


def test_checkpoint_corruption():
    print("Testing checkpoint validation...")
    checkpoint = Checkpoint(n=8, k=4, d=3, frontier=(3, 7), visited=120, found=((0, 3, 9, 12),))
    text = format_checkpoint(checkpoint)
    assert text.startswith(CHECKPOINT_HEADER + "\n")
    assert parse_checkpoint(text) == checkpoint

    with pytest.raises(CheckpointError):
        parse_checkpoint(text.replace("visited 120", "visited 121"))
    with pytest.raises(CheckpointError):
        parse_checkpoint("garbage\n")
    with pytest.raises(CheckpointError):
        parse_checkpoint(text.replace(CHECKPOINT_HEADER, "lcd4-ckpt v0"))

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "nested", "run.ckpt")
        save_checkpoint(checkpoint, path)
        assert load_checkpoint(path) == checkpoint
        assert not os.path.exists(path + ".tmp")
        with pytest.raises(CheckpointError):
            resume_search(SearchConfig(n=8, k=4, d=4), path)
        with pytest.raises(CheckpointError):
            load_checkpoint(os.path.join(tmp, "missing.ckpt"))

        bad_frontier = Checkpoint(n=8, k=4, d=3, frontier=(10 ** 6,), visited=2)
        save_checkpoint(bad_frontier, path)
        with pytest.raises(CheckpointError):
            resume_search(SearchConfig(n=8, k=4, d=3), path)
    print("✅ Tampered, foreign and malformed checkpoints are refused")


@slow
def test_no_12_6_6_code():
    outcome = run_search(SearchConfig(n=12, k=6, d=6, parallel_width=max(1, os.cpu_count() or 1)))
    assert outcome.nonexistence
    print(f"   (12,6,6): {outcome.nodes_visited} nodes")


@slow
def test_no_n_minus_3_distance_3_codes():
    for n in (19, 20, 21):
        outcome = run_search(SearchConfig(n=n, k=n - 3, d=3))
        assert outcome.nonexistence, n
        print(f"   ({n},{n - 3},3): {outcome.nodes_visited} nodes")


@slow
def test_first_hit_15_7_7():
    outcome = run_search(SearchConfig(n=15, k=7, d=7, mode=SearchMode.FIRST_HIT))
    assert len(outcome.found) == 1
    code = outcome.found[0]
    assert (code.n, code.k) == (15, 7)
    assert is_hermitian_lcd(code)
    assert minimum_weight(code) >= 7
    assert outcome.found_paths[0][0] == 0


@slow
def test_checkpoint_split_run_10_5_4():
    # the full (10,5,4) tree runs for hours; compare the first 30000 nodes
    _split_run_matches(10, 5, 4, budget=30_000)


def main():
    """Run search tests"""
    print("🚀 Starting Search Tests\n")

    tests = [
        test_config_validation,
        test_enumerate_rows,
        test_first_row,
        test_partial_min_weight,
        test_completeness_against_brute_force,
        test_exact_distance_existence_matches_unrestricted,
        test_closed_forms_agree_with_search,
        test_first_hit_mode,
        test_nodes_nonincreasing_in_distance,
        test_parallel_is_deterministic,
        test_parallel_first_hit_resumes_inside_branch,
        test_checkpoint_split_run,
        test_immediate_checkpoint,
        test_checkpoint_corruption,
    ]
    if RUN_SLOW:
        tests += [test_no_12_6_6_code, test_no_n_minus_3_distance_3_codes, test_first_hit_15_7_7,
                  test_checkpoint_split_run_10_5_4]

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
        print("🎉 All search tests passed!")
        return True
    else:
        print("❌ Some tests failed!")
        return False


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
