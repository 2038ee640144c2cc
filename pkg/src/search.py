"""
Generator Matrix Search Module
Row-by-row depth-first search for Hermitian LCD [n,k,d]_4 codes in standard
form (I_k | A), with partial minimum weight pruning, resumable checkpoints and
a deterministic multiprocessing split at depth 2
"""

import hashlib
import itertools
import logging
import multiprocessing
import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.codes import LinearCode, _pack_rows, _popcount, span_minimum_weight
from src.gf4 import CONJ_TABLE, GF4Vector, matmul_arrays, rank_array

logger = logging.getLogger(__name__)

CHECKPOINT_HEADER = "lcd4-ckpt v1"
MAX_ROW_LENGTH = 20
FILTER_BLOCK_ELEMENTS = 4_000_000
CHECKPOINT_EVERY = 50_000
_GENERATION_CHUNK = 1 << 22
_ONE = np.uint64(1)


class CheckpointError(ValueError):
    """Raised for a corrupt checkpoint or one that does not match the search"""


class SearchMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    FIRST_HIT = "first_hit"

    @classmethod
    def _missing_(cls, value):
        if value == "first":
            return cls.FIRST_HIT
        return None


class SearchConfig(BaseModel):
    """Target parameters and traversal settings of one search"""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    d: int
    mode: SearchMode = SearchMode.EXHAUSTIVE
    parallel_width: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_parameters(self):
        if not 2 <= self.k < self.n:
            raise ValueError(f"Search needs 2 <= k < n, got n={self.n} k={self.k}")
        if self.d < 2:
            raise ValueError(f"Search needs d >= 2, got d={self.d}")
        if self.n - self.k - self.d + 1 < 0:
            raise ValueError(f"No first row exists: n - k = {self.n - self.k} < d - 1 = {self.d - 1}")
        return self

    @property
    def row_length(self) -> int:
        return self.n - self.k

    @property
    def strict_order(self) -> bool:
        """Rows strictly increase when d >= 3; repeats are allowed otherwise"""
        return self.d >= 3


@dataclass(frozen=True)
class RowCandidate:
    """A row of A: weight >= d - 1 and first nonzero symbol 1"""

    vector: GF4Vector
    index: Optional[int] = None

    def __post_init__(self):
        if self.vector.leading_symbol().value != 1:
            raise ValueError(f"Row {self.vector} does not start with symbol 1")


@dataclass
class SearchOutcome:
    config: SearchConfig
    found: List[LinearCode] = field(default_factory=list)
    found_paths: List[Tuple[int, ...]] = field(default_factory=list)
    nodes_visited: int = 0
    complete: bool = False
    frontier: Tuple[int, ...] = ()

    @property
    def nonexistence(self) -> bool:
        """True when the whole tree was traversed without an accepted code"""
        return self.complete and not self.found


@dataclass(frozen=True)
class Checkpoint:
    n: int
    k: int
    d: int
    frontier: Tuple[int, ...]
    visited: int
    found: Tuple[Tuple[int, ...], ...] = ()


def _weights_of_values(values: np.ndarray, row_length: int) -> np.ndarray:
    mask = np.uint64(int("01" * row_length, 2))
    return _popcount((values | (values >> _ONE)) & mask)


def _digits_of_values(values: np.ndarray, row_length: int) -> np.ndarray:
    shifts = np.array([2 * (row_length - 1 - i) for i in range(row_length)], dtype=np.uint64)
    return ((values[:, None] >> shifts[None, :]) & np.uint64(3)).astype(np.uint8)


def _candidate_planes(row_length: int, d: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Bit-planes of all rows with leading symbol 1 and weight >= d - 1, ascending

    A row read as a base-4 number (first coordinate most significant) sorts
    exactly as the lexicographic order 0 < 1 < w < W, and rows whose leading 1
    sits at a given position form the range [4^j, 2 * 4^j).
    """
    if row_length > MAX_ROW_LENGTH:
        raise ValueError(f"Rows of length {row_length} exceed the supported maximum {MAX_ROW_LENGTH}")
    lo_parts, hi_parts = [], []
    for j in range(row_length):
        start, stop = 4 ** j, 2 * 4 ** j
        for chunk in range(start, stop, _GENERATION_CHUNK):
            values = np.arange(chunk, min(stop, chunk + _GENERATION_CHUNK), dtype=np.uint64)
            values = values[_weights_of_values(values, row_length) >= d - 1]
            if values.size:
                lo, hi = _pack_rows(_digits_of_values(values, row_length))
                lo_parts.append(lo)
                hi_parts.append(hi)
    if not lo_parts:
        return np.zeros(0, dtype=np.uint64), np.zeros(0, dtype=np.uint64)
    return np.concatenate(lo_parts), np.concatenate(hi_parts)


def _unpack(lo: np.ndarray, hi: np.ndarray, row_length: int) -> np.ndarray:
    bits = np.arange(row_length, dtype=np.uint64)
    low = (lo[:, None] >> bits[None, :]) & _ONE
    high = (hi[:, None] >> bits[None, :]) & _ONE
    return (low | (high << _ONE)).astype(np.uint8)


def enumerate_rows(n_minus_k: int, d: int) -> List[RowCandidate]:
    """
    All candidate rows of length n - k for minimum distance d, in search order

    Args:
        n_minus_k: Row length
        d: Target minimum distance (>= 2)

    Returns:
        RowCandidate list; each candidate's index is its position in the list
    """
    if d < 2:
        raise ValueError(f"Row enumeration needs d >= 2, got d={d}")
    lo, hi = _candidate_planes(n_minus_k, d)
    vectors = _unpack(lo, hi, n_minus_k)
    return [RowCandidate(GF4Vector(row), index=i) for i, row in enumerate(vectors)]


def first_row(n: int, k: int, d: int) -> RowCandidate:
    """r_1 = (0_{n-k-d+1}, 1_{d-1})"""
    zeros = n - k - d + 1
    if zeros < 0:
        raise ValueError(f"No first row: n - k = {n - k} < d - 1 = {d - 1}")
    if d < 2:
        raise ValueError(f"First row needs d >= 2, got d={d}")
    return RowCandidate(GF4Vector([0] * zeros + [1] * (d - 1)), index=0)


def _row_array(row) -> np.ndarray:
    if isinstance(row, RowCandidate):
        return row.vector.data
    if isinstance(row, GF4Vector):
        return row.data
    return GF4Vector(row).data


def partial_min_weight_ok(rows: Sequence, m: int, d: int) -> bool:
    """Whether the [n-k+m, m] code generated by (I_m | r_1 ... r_m) has minimum weight >= d"""
    if m < 2 or len(rows) != m:
        raise ValueError(f"Expected m >= 2 rows, got m={m} with {len(rows)} rows")
    block = np.vstack([_row_array(r) for r in rows])
    generator = np.hstack((np.eye(m, dtype=np.uint8), block))
    return span_minimum_weight(generator, stop_below=d) >= d


def _standard_generator(rows: np.ndarray) -> np.ndarray:
    return np.hstack((np.eye(rows.shape[0], dtype=np.uint8), rows))


def _gram_is_nonsingular(rows: np.ndarray) -> bool:
    # G conj(G)^T = I + A conj(A)^T for G = (I | A) in characteristic 2
    gram = matmul_arrays(rows, CONJ_TABLE[rows].T) ^ np.eye(rows.shape[0], dtype=np.uint8)
    return rank_array(gram) == rows.shape[0]


class _Frame:
    """A prefix r_1..r_m, the low-weight part of its span and its surviving next rows"""

    __slots__ = ("path", "span_lo", "span_hi", "span_w", "children", "pos")

    def __init__(self, path, span_lo, span_hi, span_w, children):
        self.path = path
        self.span_lo = span_lo
        self.span_hi = span_hi
        self.span_w = span_w
        self.children = children
        self.pos = 0


@dataclass
class _Tally:
    visited: int = 0
    found: List[Tuple[int, ...]] = field(default_factory=list)
    last_report: int = 0


class _RowSearch:
    """
    Search tree over candidate indices

    Every combination of a prefix is sum(lam_i r_i) with identity part lam; only
    combinations with wt(lam) <= d - 2 can force a later row below weight d,
    so frames keep just those. A candidate c survives a prefix iff every kept
    combination s satisfies wt(lam) + 1 + wt(s + c) >= d.
    """

    def __init__(self, cfg: SearchConfig, block_elements: int = FILTER_BLOCK_ELEMENTS):
        self.cfg = cfg
        self.k = cfg.k
        self.d = cfg.d
        self.row_length = cfg.row_length
        self.strict = cfg.strict_order
        self.block_elements = block_elements
        self.lo, self.hi = _candidate_planes(self.row_length, self.d)
        self.root_index = 0
        logger.info("Search [%d,%d,%d]_4: %d candidate rows of length %d",
                    cfg.n, cfg.k, cfg.d, self.lo.size, self.row_length)

    @property
    def candidate_count(self) -> int:
        return int(self.lo.size)

    def rows_of(self, path: Sequence[int]) -> np.ndarray:
        index = np.asarray(path, dtype=np.int64)
        return _unpack(self.lo[index], self.hi[index], self.row_length)

    def code_of(self, path: Sequence[int]) -> LinearCode:
        return LinearCode(_standard_generator(self.rows_of(path)))

    def _new_entries(self, frame_span, index: int):
        span_lo, span_hi, span_w = frame_span
        keep = span_w <= self.d - 3
        base_lo = np.concatenate((np.zeros(1, dtype=np.uint64), span_lo[keep]))
        base_hi = np.concatenate((np.zeros(1, dtype=np.uint64), span_hi[keep]))
        base_w = np.concatenate((np.zeros(1, dtype=np.int64), span_w[keep])) + 1
        if self.d < 3:
            return base_lo[:0], base_hi[:0], base_w[:0]
        c_lo, c_hi = self.lo[index], self.hi[index]
        c_mix = c_lo ^ c_hi
        new_lo = np.concatenate((base_lo ^ c_lo, base_lo ^ c_hi, base_lo ^ c_mix))
        new_hi = np.concatenate((base_hi ^ c_hi, base_hi ^ c_mix, base_hi ^ c_lo))
        return new_lo, new_hi, np.tile(base_w, 3)

    def _filter(self, pool: np.ndarray, e_lo: np.ndarray, e_hi: np.ndarray, e_w: np.ndarray) -> np.ndarray:
        if pool.size == 0 or e_lo.size == 0:
            return pool
        need = (self.d - 1 - e_w)[:, None]
        step = max(1, self.block_elements // e_lo.size)
        kept = []
        for start in range(0, pool.size, step):
            index = pool[start:start + step]
            mixed = (e_lo[:, None] ^ self.lo[index][None, :]) | (e_hi[:, None] ^ self.hi[index][None, :])
            weights = _popcount(mixed.ravel()).reshape(mixed.shape)
            kept.append(index[(weights >= need).all(axis=0)])
        return np.concatenate(kept)

    def _frame(self, path, parent_span, pool: np.ndarray) -> _Frame:
        e_lo, e_hi, e_w = self._new_entries(parent_span, path[-1])
        if len(path) == self.k:
            return _Frame(path, e_lo, e_hi, e_w, pool[:0])
        span_lo = np.concatenate((parent_span[0], e_lo))
        span_hi = np.concatenate((parent_span[1], e_hi))
        span_w = np.concatenate((parent_span[2], e_w))
        return _Frame(path, span_lo, span_hi, span_w, self._filter(pool, e_lo, e_hi, e_w))

    def root_frame(self) -> _Frame:
        empty = (np.zeros(0, dtype=np.uint64), np.zeros(0, dtype=np.uint64), np.zeros(0, dtype=np.int64))
        start = self.root_index + 1 if self.strict else self.root_index
        pool = np.arange(start, self.candidate_count, dtype=np.int64)
        return self._frame((self.root_index,), empty, pool)

    def child_frame(self, frame: _Frame, position: int) -> _Frame:
        index = int(frame.children[position])
        pool = frame.children[position + 1:] if self.strict else frame.children[position:]
        return self._frame(frame.path + (index,), (frame.span_lo, frame.span_hi, frame.span_w), pool)

    def child_limit(self, frame: _Frame) -> int:
        """Positions at or past the limit cannot be completed to k rows"""
        if not self.strict:
            return len(frame.children)
        return len(frame.children) - (self.k - len(frame.path) - 1)

    def accepts(self, path: Tuple[int, ...]) -> bool:
        # surviving the filter at every depth already gives d(C) >= d
        return _gram_is_nonsingular(self.rows_of(path))

    def enter(self, frame: _Frame, position: int, tally: _Tally, stack: List[_Frame]) -> bool:
        """Visit one child; returns True when it is an accepted leaf"""
        tally.visited += 1
        if len(frame.path) + 1 == self.k:
            path = frame.path + (int(frame.children[position]),)
            if self.accepts(path):
                tally.found.append(path)
                return True
            return False
        stack.append(self.child_frame(frame, position))
        return False

    def traverse(self, stack: List[_Frame], tally: _Tally, first_hit: bool = False,
                 stop_at_root: bool = False, max_nodes: Optional[int] = None,
                 report: Optional[Callable[[Tuple[int, ...]], None]] = None,
                 report_every: int = CHECKPOINT_EVERY) -> Tuple[str, Tuple[int, ...]]:
        """
        Depth-first traversal from the given stack

        Returns:
            Tuple of (status, frontier): status is "done", "hit", "budget" or
            "root"; frontier holds the candidate indices (depth 2 onward) of
            the next node to enter, empty when the tree is exhausted
        """
        while stack:
            top = stack[-1]
            if top.pos >= self.child_limit(top):
                stack.pop()
                continue
            frontier = top.path[1:] + (int(top.children[top.pos]),)
            if stop_at_root and len(stack) == 1:
                return "root", frontier
            if max_nodes is not None and tally.visited >= max_nodes:
                return "budget", frontier
            if report is not None and tally.visited - tally.last_report >= report_every:
                tally.last_report = tally.visited
                report(frontier)
            position = top.pos
            top.pos += 1
            if self.enter(top, position, tally, stack) and first_hit:
                return "hit", self._next_frontier(stack)
        return "done", ()

    def _next_frontier(self, stack: List[_Frame]) -> Tuple[int, ...]:
        while stack:
            top = stack[-1]
            if top.pos < self.child_limit(top):
                return top.path[1:] + (int(top.children[top.pos]),)
            stack.pop()
        return ()

    def _position(self, frame: _Frame, index: int) -> int:
        position = int(np.searchsorted(frame.children, index))
        if position >= len(frame.children) or int(frame.children[position]) != index:
            raise CheckpointError(f"Frontier index {index} is not a child of prefix {list(frame.path)}")
        return position

    def replay(self, frontier: Sequence[int]) -> List[_Frame]:
        """Rebuild the stack so the next node entered is the frontier's node"""
        if len(frontier) > self.k - 1:
            raise CheckpointError(f"Frontier of depth {len(frontier) + 1} exceeds k = {self.k}")
        stack = [self.root_frame()]
        if not frontier:
            stack[0].pos = len(stack[0].children)
            return stack
        for index in frontier[:-1]:
            top = stack[-1]
            position = self._position(top, int(index))
            top.pos = position + 1
            stack.append(self.child_frame(top, position))
        stack[-1].pos = self._position(stack[-1], int(frontier[-1]))
        return stack


# Worker side of the parallel split; each process builds its own engine once.
_WORKER_ENGINE: Optional[_RowSearch] = None
_WORKER_ROOT: Optional[_Frame] = None


def _init_worker(cfg_data: dict, block_elements: int) -> None:
    global _WORKER_ENGINE, _WORKER_ROOT
    _WORKER_ENGINE = _RowSearch(SearchConfig(**cfg_data), block_elements)
    _WORKER_ROOT = _WORKER_ENGINE.root_frame()


def _run_branch(position: int) -> Tuple[int, int, List[Tuple[int, ...]], Tuple[int, ...]]:
    """Visit one depth-2 branch; the last item is where a first hit left the branch unfinished"""
    engine, root = _WORKER_ENGINE, _WORKER_ROOT
    tally = _Tally()
    stack: List[_Frame] = []
    first_hit = engine.cfg.mode == SearchMode.FIRST_HIT
    hit = engine.enter(root, position, tally, stack)
    rest: Tuple[int, ...] = ()
    if stack and not (hit and first_hit):
        _, rest = engine.traverse(stack, tally, first_hit=first_hit)
    return position, tally.visited, tally.found, rest


def _digest(body: str) -> str:
    return hashlib.sha256(body.encode("utf-8")).hexdigest()


def format_checkpoint(checkpoint: Checkpoint) -> str:
    lines = [
        CHECKPOINT_HEADER,
        f"{checkpoint.n} {checkpoint.k} {checkpoint.d}",
        " ".join(str(i) for i in checkpoint.frontier),
        f"visited {checkpoint.visited}",
    ]
    lines.extend("found " + " ".join(str(i) for i in path) for path in checkpoint.found)
    body = "\n".join(lines) + "\n"
    return body + f"sha256 {_digest(body)}\n"


def parse_checkpoint(text: str) -> Checkpoint:
    """Parse checkpoint text; any corruption raises CheckpointError"""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 5 or lines[0] != CHECKPOINT_HEADER:
        raise CheckpointError(f"Not a {CHECKPOINT_HEADER} checkpoint")
    *body_lines, digest_line = lines
    body = "\n".join(body_lines) + "\n"
    if digest_line != f"sha256 {_digest(body)}":
        raise CheckpointError("Checkpoint digest mismatch")
    try:
        n, k, d = (int(v) for v in body_lines[1].split())
        frontier = tuple(int(v) for v in body_lines[2].split())
        label, visited = body_lines[3].split()
        if label != "visited":
            raise ValueError(f"expected 'visited', got {label!r}")
        found = []
        for line in body_lines[4:]:
            label, *indices = line.split()
            if label != "found" or not indices:
                raise ValueError(f"unexpected line {line!r}")
            found.append(tuple(int(v) for v in indices))
    except ValueError as e:
        raise CheckpointError(f"Error parsing checkpoint: {e}") from e
    if any(i < 0 for i in frontier) or int(visited) < 0:
        raise CheckpointError("Checkpoint holds negative values")
    return Checkpoint(n=n, k=k, d=d, frontier=frontier, visited=int(visited), found=tuple(found))


def save_checkpoint(checkpoint: Checkpoint, path: Union[str, Path]) -> None:
    """Write a checkpoint atomically"""
    directory = os.path.dirname(str(path))
    if directory:
        os.makedirs(directory, exist_ok=True)
    temporary = f"{path}.tmp"
    with open(temporary, "w", encoding="utf-8") as f:
        f.write(format_checkpoint(checkpoint))
    os.replace(temporary, path)


def load_checkpoint(path: Union[str, Path]) -> Checkpoint:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise CheckpointError(f"Error reading checkpoint {path}: {e}") from e
    return parse_checkpoint(text)


def checkpoint_from_outcome(outcome: SearchOutcome) -> Checkpoint:
    cfg = outcome.config
    return Checkpoint(n=cfg.n, k=cfg.k, d=cfg.d, frontier=tuple(outcome.frontier),
                      visited=outcome.nodes_visited, found=tuple(outcome.found_paths))


class _Session:
    """One run (fresh or resumed) of the search against an optional checkpoint file"""

    def __init__(self, cfg: SearchConfig, checkpoint_path=None, checkpoint_every: int = CHECKPOINT_EVERY,
                 block_elements: int = FILTER_BLOCK_ELEMENTS):
        self.cfg = cfg
        self.checkpoint_path = checkpoint_path
        self.checkpoint_every = checkpoint_every
        self.block_elements = block_elements
        self.engine = _RowSearch(cfg, block_elements)

    def _save(self, frontier: Tuple[int, ...], tally: _Tally) -> None:
        if self.checkpoint_path is None:
            return
        save_checkpoint(Checkpoint(n=self.cfg.n, k=self.cfg.k, d=self.cfg.d, frontier=tuple(frontier),
                                   visited=tally.visited, found=tuple(tally.found)),
                        self.checkpoint_path)
        logger.info("Checkpoint written at %d nodes", tally.visited)

    def _outcome(self, tally: _Tally, complete: bool, frontier: Tuple[int, ...]) -> SearchOutcome:
        outcome = SearchOutcome(
            config=self.cfg,
            found=[self.engine.code_of(path) for path in tally.found],
            found_paths=list(tally.found),
            nodes_visited=tally.visited,
            complete=complete,
            frontier=tuple(frontier),
        )
        if self.checkpoint_path is not None:
            save_checkpoint(checkpoint_from_outcome(outcome), self.checkpoint_path)
            logger.info("Checkpoint written at %d nodes", tally.visited)
        logger.info("Search [%d,%d,%d]_4 finished: %d nodes, %d codes, complete=%s",
                    self.cfg.n, self.cfg.k, self.cfg.d, tally.visited, len(tally.found), complete)
        return outcome

    def run(self, stack: List[_Frame], tally: _Tally, max_nodes: Optional[int] = None) -> SearchOutcome:
        first_hit = self.cfg.mode == SearchMode.FIRST_HIT
        jobs = self.cfg.parallel_width
        if jobs > 1 and max_nodes is not None:
            logger.warning("A node budget runs the search in a single process")
            jobs = 1
        report = (lambda frontier: self._save(frontier, tally)) if self.checkpoint_path else None

        if jobs == 1:
            status, frontier = self.engine.traverse(
                stack, tally, first_hit=first_hit, max_nodes=max_nodes,
                report=report, report_every=self.checkpoint_every,
            )
            if status == "hit" and frontier:
                return self._outcome(tally, complete=False, frontier=frontier)
            return self._outcome(tally, complete=status in ("done", "hit"), frontier=frontier)

        # finish a partially visited depth-2 branch before splitting the rest
        status, frontier = self.engine.traverse(stack, tally, first_hit=first_hit, stop_at_root=True,
                                                report=report, report_every=self.checkpoint_every)
        if status == "hit":
            return self._outcome(tally, complete=not frontier, frontier=frontier)
        if status == "done":
            return self._outcome(tally, complete=True, frontier=())
        return self._run_parallel(stack[0], tally, jobs, first_hit)

    def _run_parallel(self, root: _Frame, tally: _Tally, jobs: int, first_hit: bool) -> SearchOutcome:
        limit = self.engine.child_limit(root)
        positions = range(root.pos, limit)
        logger.info("Dispatching %d depth-2 branches to %d processes", len(positions), jobs)
        with multiprocessing.Pool(jobs, initializer=_init_worker,
                                  initargs=(self.cfg.model_dump(), self.block_elements)) as pool:
            for position, visited, found, rest in pool.imap(_run_branch, positions):
                tally.visited += visited
                tally.found.extend(found)
                if rest:
                    frontier = rest
                else:
                    frontier = (int(root.children[position + 1]),) if position + 1 < limit else ()
                if first_hit and found:
                    pool.terminate()
                    return self._outcome(tally, complete=not frontier, frontier=frontier)
                if tally.visited - tally.last_report >= self.checkpoint_every:
                    tally.last_report = tally.visited
                    self._save(frontier, tally)
        return self._outcome(tally, complete=True, frontier=())


def run_search(cfg: SearchConfig, max_nodes: Optional[int] = None, checkpoint_path=None,
               checkpoint_every: int = CHECKPOINT_EVERY,
               block_elements: int = FILTER_BLOCK_ELEMENTS) -> SearchOutcome:
    """
    Search for Hermitian LCD [n,k,>=d]_4 codes with generator (I_k | A)

    Args:
        cfg: Target parameters, mode and parallel width
        max_nodes: Stop before entering a node once this many were visited
        checkpoint_path: File receiving the frontier every checkpoint_every nodes and at the end
        checkpoint_every: Nodes between checkpoint writes
        block_elements: Working-set cap of the vectorized survivor filter

    Returns:
        SearchOutcome; complete with no codes certifies nonexistence
    """
    session = _Session(cfg, checkpoint_path, checkpoint_every, block_elements)
    tally = _Tally(visited=1)
    return session.run([session.engine.root_frame()], tally, max_nodes=max_nodes)


def resume_search(cfg: SearchConfig, checkpoint: Union[Checkpoint, str, Path],
                  max_nodes: Optional[int] = None, checkpoint_path=None,
                  checkpoint_every: int = CHECKPOINT_EVERY,
                  block_elements: int = FILTER_BLOCK_ELEMENTS) -> SearchOutcome:
    """Continue a search from a checkpoint without re-entering visited nodes"""
    if not isinstance(checkpoint, Checkpoint):
        if checkpoint_path is None:
            checkpoint_path = checkpoint
        checkpoint = load_checkpoint(checkpoint)
    if (checkpoint.n, checkpoint.k, checkpoint.d) != (cfg.n, cfg.k, cfg.d):
        raise CheckpointError(
            f"Checkpoint is for [{checkpoint.n},{checkpoint.k},{checkpoint.d}], "
            f"search is for [{cfg.n},{cfg.k},{cfg.d}]"
        )
    session = _Session(cfg, checkpoint_path, checkpoint_every, block_elements)
    for path in checkpoint.found:
        if len(path) != cfg.k or max(path) >= session.engine.candidate_count:
            raise CheckpointError(f"Recorded code {list(path)} does not fit the search")
    stack = session.engine.replay(checkpoint.frontier)
    tally = _Tally(visited=checkpoint.visited, found=list(checkpoint.found), last_report=checkpoint.visited)
    logger.info("Resuming [%d,%d,%d]_4 at %d nodes", cfg.n, cfg.k, cfg.d, checkpoint.visited)
    return session.run(stack, tally, max_nodes=max_nodes)


def brute_force_normal_form(n: int, k: int, d: int, unrestricted: bool = False) -> List[LinearCode]:
    """
    Hermitian LCD codes (I_k | A) with minimum weight >= d, without pruning

    Args:
        n: Length
        k: Dimension
        d: Minimum distance
        unrestricted: Try every k x (n - k) matrix A instead of only those
            meeting the row conditions; meant for tiny parameters

    Returns:
        Accepted codes; with the row conditions they come in search order
    """
    row_length = n - k
    accepted = []
    if unrestricted:
        if k * row_length > 10:
            raise ValueError(f"Unrestricted enumeration of 4^{k * row_length} matrices refused")
        for values in itertools.product(range(4), repeat=k * row_length):
            rows = np.array(values, dtype=np.uint8).reshape(k, row_length)
            generator = _standard_generator(rows)
            if span_minimum_weight(generator, stop_below=d) >= d and _gram_is_nonsingular(rows):
                accepted.append(LinearCode(generator))
        return accepted

    cfg = SearchConfig(n=n, k=k, d=d)
    lo, hi = _candidate_planes(row_length, d)
    vectors = _unpack(lo, hi, row_length)
    if cfg.strict_order:
        tails = itertools.combinations(range(1, len(vectors)), k - 1)
    else:
        tails = itertools.combinations_with_replacement(range(len(vectors)), k - 1)
    for tail in tails:
        rows = vectors[(0,) + tail, :]
        generator = _standard_generator(rows)
        if span_minimum_weight(generator, stop_below=d) >= d and _gram_is_nonsingular(rows):
            accepted.append(LinearCode(generator))
    return accepted
