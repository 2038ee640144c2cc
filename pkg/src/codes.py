"""
Linear Code Module
Quaternary linear codes: duals, LCD tests, weight enumeration, shortening and
puncturing, monomial transforms and EAQECC parameter translation
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.gf4 import (
    CONJ_TABLE,
    INV_TABLE,
    MUL_TABLE,
    GF4Matrix,
    GF4Scalar,
    matmul_arrays,
    null_space_array,
    rank_array,
    rref_array,
)

logger = logging.getLogger(__name__)

DIRECT_ENUMERATION_MAX_K = 12
INNER_BLOCK_ROWS = 8
MAX_PACKED_LENGTH = 64


class ZeroCodeError(ValueError):
    """Raised when an operation would produce the zero code {0_n}"""


class NotLCDError(ValueError):
    """Raised when an LCD code is required but the code is not Hermitian LCD"""


class CodeParams(BaseModel):
    """The triple [n,k,d]_4"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    k: int = Field(ge=1)
    d: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_ranges(self):
        if self.k > self.n or self.d > self.n:
            raise ValueError(f"Invalid code parameters [{self.n},{self.k},{self.d}]")
        return self

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d}]_4"


class EAQECCParams(BaseModel):
    """Entanglement-assisted quantum code parameters [[n,k,d;c]]_2"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    k: int = Field(ge=0)
    d: int = Field(ge=1)
    c: int = Field(ge=0)

    @property
    def corrects(self) -> int:
        """Number of channel-qubit errors the code corrects"""
        return error_correcting_capability(self.d)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.n, self.k, self.d, self.c

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d};{self.c}]]_2"


def error_correcting_capability(d: int) -> int:
    return (d - 1) // 2


class MonomialTransform:
    """
    A monomial matrix P acting on the right: coordinate i of x moves to
    position permutation[i] and is scaled by diagonal[i] (1-based positions)
    """

    __slots__ = ("_targets", "_diagonal")

    def __init__(self, permutation: Sequence[int], diagonal: Optional[Sequence] = None):
        targets = np.array([int(p) - 1 for p in permutation], dtype=np.int64)
        n = targets.size
        if n == 0 or not np.array_equal(np.sort(targets), np.arange(n)):
            raise ValueError(f"Not a permutation of 1..{n}: {list(permutation)}")
        if diagonal is None:
            scales = np.ones(n, dtype=np.uint8)
        else:
            scales = np.array([GF4Scalar(v).value for v in diagonal], dtype=np.uint8)
        if scales.size != n:
            raise ValueError(f"Diagonal has {scales.size} entries, expected {n}")
        if not scales.all():
            raise ValueError("Monomial diagonal entries must be nonzero")
        targets.setflags(write=False)
        scales.setflags(write=False)
        self._targets = targets
        self._diagonal = scales

    @classmethod
    def identity(cls, n: int) -> "MonomialTransform":
        return cls(range(1, n + 1))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "MonomialTransform":
        return cls(rng.permutation(n) + 1, rng.integers(1, 4, size=n))

    @property
    def size(self) -> int:
        return int(self._targets.size)

    @property
    def permutation(self) -> Tuple[int, ...]:
        return tuple(int(t) + 1 for t in self._targets)

    @property
    def diagonal(self) -> Tuple[GF4Scalar, ...]:
        return tuple(GF4Scalar(int(v)) for v in self._diagonal)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._targets, np.arange(self.size)) and (self._diagonal == 1).all())

    def apply_to_rows(self, data: np.ndarray) -> np.ndarray:
        if data.shape[1] != self.size:
            raise ValueError(f"Transform of size {self.size} applied to length {data.shape[1]}")
        out = np.zeros_like(data)
        out[:, self._targets] = MUL_TABLE[self._diagonal[None, :], data]
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, MonomialTransform):
            return (np.array_equal(self._targets, other._targets)
                    and np.array_equal(self._diagonal, other._diagonal))
        return NotImplemented

    def __repr__(self) -> str:
        return f"MonomialTransform(permutation={self.permutation})"


class LinearCode:
    """A quaternary [n,k] code given by a full-rank k x n generator matrix"""

    def __init__(self, generator: Union[GF4Matrix, np.ndarray, Sequence], name: Optional[str] = None):
        if isinstance(generator, np.ndarray) and generator.ndim == 2 and generator.shape[0] == 0:
            raise ZeroCodeError("A generator matrix needs at least one row")
        matrix = generator if isinstance(generator, GF4Matrix) else GF4Matrix(generator)
        rank = matrix.rank()
        if rank != matrix.rows:
            raise ValueError(f"Generator matrix has {matrix.rows} rows but rank {rank}")
        self._generator = matrix
        self.name = name
        self._standard_form: Optional[Tuple[GF4Matrix, MonomialTransform]] = None

    @classmethod
    def from_spanning_rows(cls, rows: Union[GF4Matrix, np.ndarray], name: Optional[str] = None) -> "LinearCode":
        """Build the code spanned by possibly dependent rows"""
        data = rows.data if isinstance(rows, GF4Matrix) else np.asarray(rows, dtype=np.uint8)
        reduced, rank, _ = rref_array(data)
        if rank == 0:
            raise ZeroCodeError("Rows span the zero code")
        return cls(reduced[:rank], name=name)

    @property
    def generator(self) -> GF4Matrix:
        return self._generator

    @property
    def n(self) -> int:
        return self._generator.cols

    @property
    def k(self) -> int:
        return self._generator.rows

    def reduced_generator(self) -> GF4Matrix:
        """Canonical generator (RREF) identifying the row space"""
        reduced, rank, _ = rref_array(self._generator.data)
        return GF4Matrix(reduced[:rank])

    def contains(self, vector) -> bool:
        row = np.asarray(vector.data if hasattr(vector, "data") else vector, dtype=np.uint8)
        return rank_array(np.vstack((self._generator.data, row[None, :]))) == self.k

    def codeword_array(self) -> np.ndarray:
        """All 4^k codewords as rows; meant for small k"""
        if self.k > 10:
            raise ValueError(f"Refusing to materialise 4^{self.k} codewords")
        messages = np.array(list(itertools.product(range(4), repeat=self.k)), dtype=np.uint8)
        return matmul_arrays(messages, self._generator.data)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinearCode):
            return self.n == other.n and self.reduced_generator() == other.reduced_generator()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.reduced_generator())

    def __repr__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"LinearCode({label}[{self.n},{self.k}])"


class WeightEnumerator:
    """Coefficients A_0..A_n counting codewords by weight"""

    __slots__ = ("_counts",)

    def __init__(self, counts: Union[Sequence[int], Dict[int, int]], length: Optional[int] = None):
        if isinstance(counts, dict):
            if length is None:
                length = max(counts)
            values = [0] * (length + 1)
            for weight, count in counts.items():
                values[int(weight)] = int(count)
        else:
            values = [int(c) for c in counts]
            if length is not None and len(values) < length + 1:
                values += [0] * (length + 1 - len(values))
        if not values or values[0] != 1:
            raise ValueError(f"A_0 must be 1, got {values[:1]}")
        if any(v < 0 for v in values):
            raise ValueError("Weight enumerator coefficients must be nonnegative")
        self._counts = tuple(values)

    @property
    def counts(self) -> Tuple[int, ...]:
        return self._counts

    @property
    def length(self) -> int:
        return len(self._counts) - 1

    @property
    def total(self) -> int:
        return sum(self._counts)

    @property
    def minimum_weight(self) -> Optional[int]:
        for weight, count in enumerate(self._counts[1:], start=1):
            if count:
                return weight
        return None

    def __getitem__(self, weight: int) -> int:
        return self._counts[weight]

    def items(self) -> Iterator[Tuple[int, int]]:
        """Nonzero (weight, count) pairs in ascending weight"""
        return ((w, c) for w, c in enumerate(self._counts) if c)

    def to_pairs(self) -> str:
        return " ".join(f"{w}:{c}" for w, c in self.items())

    @classmethod
    def from_pairs(cls, text: str, length: int) -> "WeightEnumerator":
        pairs = {}
        for token in text.split():
            weight, _, count = token.partition(":")
            pairs[int(weight)] = int(count)
        return cls(pairs, length=length)

    def to_sympy(self, variable: Optional[sympy.Symbol] = None) -> sympy.Poly:
        y = variable or sympy.Symbol("y")
        return sympy.Poly(list(reversed(self._counts)), y, domain="ZZ")

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightEnumerator):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._counts)

    def __str__(self) -> str:
        terms = []
        for weight, count in self.items():
            if weight == 0:
                terms.append(str(count))
            elif weight == 1:
                terms.append(f"{count}y")
            else:
                terms.append(f"{count}y^{weight}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"WeightEnumerator({self.to_pairs()!r}, length={self.length})"


# Bit-packed enumeration. A vector is two uint64 bit-planes (lo, hi) holding
# the low and high encoding bits; addition is XOR of both planes and the
# weight is the popcount of lo | hi.

_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


def _popcount(x: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(x).astype(np.int64)
    x = np.ascontiguousarray(x, dtype=np.uint64)
    return _POPCOUNT8[x.view(np.uint8)].reshape(x.size, 8).sum(axis=1)


def _pack_rows(data: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    n = data.shape[1]
    if n > MAX_PACKED_LENGTH:
        raise ValueError(f"Packed enumeration supports length <= {MAX_PACKED_LENGTH}, got {n}")
    bits = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    lo = ((data & 1).astype(np.uint64) * bits).sum(axis=1, dtype=np.uint64)
    hi = ((data >> 1).astype(np.uint64) * bits).sum(axis=1, dtype=np.uint64)
    return lo, hi


def _span_planes(lo_rows: np.ndarray, hi_rows: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    lo = np.zeros(1, dtype=np.uint64)
    hi = np.zeros(1, dtype=np.uint64)
    for g_lo, g_hi in zip(lo_rows, hi_rows):
        g_mix = g_lo ^ g_hi
        # multiples 1*g, w*g, w^2*g have planes (lo, hi), (hi, lo^hi), (lo^hi, lo)
        lo = np.concatenate((lo, lo ^ g_lo, lo ^ g_hi, lo ^ g_mix))
        hi = np.concatenate((hi, hi ^ g_hi, hi ^ g_mix, hi ^ g_lo))
    return lo, hi


def _iter_weight_blocks(data: np.ndarray, inner_rows: int = INNER_BLOCK_ROWS) -> Iterator[np.ndarray]:
    """Yield weight arrays covering the whole row space; the first entry of the first block is 0_n"""
    lo_rows, hi_rows = _pack_rows(data)
    split = min(data.shape[0], inner_rows)
    inner_lo, inner_hi = _span_planes(lo_rows[:split], hi_rows[:split])
    outer_lo, outer_hi = _span_planes(lo_rows[split:], hi_rows[split:])
    for o_lo, o_hi in zip(outer_lo, outer_hi):
        yield _popcount((inner_lo ^ o_lo) | (inner_hi ^ o_hi))


def weight_distribution(data: np.ndarray, inner_rows: int = INNER_BLOCK_ROWS) -> List[int]:
    """Exact A_0..A_n of the row space of an encoding array by direct enumeration"""
    n = data.shape[1]
    counts = np.zeros(n + 1, dtype=np.int64)
    if data.shape[0] == 0:
        counts[0] = 1
        return counts.tolist()
    for weights in _iter_weight_blocks(data, inner_rows):
        counts += np.bincount(weights, minlength=n + 1)
    return [int(c) for c in counts]


def span_minimum_weight(data: np.ndarray, stop_below: Optional[int] = None,
                        inner_rows: int = INNER_BLOCK_ROWS) -> int:
    """
    Minimum nonzero weight of the row space of an encoding array

    Args:
        data: Encoding array whose rows are linearly independent
        stop_below: Return as soon as a weight below this value is seen
        inner_rows: Rows enumerated together as one numpy block

    Returns:
        The minimum weight, or some weight < stop_below when stopped early
    """
    if data.shape[0] == 0:
        raise ZeroCodeError("The zero code has no minimum weight")
    best = data.shape[1] + 1
    for index, weights in enumerate(_iter_weight_blocks(data, inner_rows)):
        if index == 0:
            weights = weights[1:]
        if weights.size:
            best = min(best, int(weights.min()))
        if best <= 1 or (stop_below is not None and best < stop_below):
            break
    return best


# MacWilliams identity for q = 4: B(y) = 4^-k * sum_i A_i (1 - y)^i (1 + 3y)^(n - i)

_Y = sympy.Symbol("y")


@lru_cache(maxsize=None)
def _macwilliams_basis(n: int) -> Tuple[sympy.Poly, ...]:
    one_minus = sympy.Poly(1 - _Y, _Y, domain="ZZ")
    one_plus = sympy.Poly(1 + 3 * _Y, _Y, domain="ZZ")
    return tuple(one_minus ** i * one_plus ** (n - i) for i in range(n + 1))


def macwilliams_transform(w: WeightEnumerator, n: int, k: int) -> WeightEnumerator:
    """
    Weight enumerator of the dual of an [n,k] code from the code's enumerator

    Args:
        w: Enumerator of an [n,k] code
        n: Code length
        k: Code dimension

    Returns:
        Enumerator of the [n, n-k] dual code
    """
    if w.length != n:
        raise ValueError(f"Enumerator has length {w.length}, expected {n}")
    basis = _macwilliams_basis(n)
    total = sympy.Poly(0, _Y, domain="ZZ")
    for weight, count in w.items():
        total += basis[weight] * count
    coefficients = [int(c) for c in reversed(total.all_coeffs())]
    coefficients += [0] * (n + 1 - len(coefficients))
    scale = 4 ** k
    result = []
    for weight, value in enumerate(coefficients):
        quotient, remainder = divmod(value, scale)
        if remainder or quotient < 0:
            raise ValueError(
                f"MacWilliams transform gave a non-integer or negative coefficient at y^{weight}; "
                f"input is not the enumerator of an [{n},{k}] code"
            )
        result.append(quotient)
    return WeightEnumerator(result)


def weight_enumerator(code: LinearCode, method: str = "auto",
                      direct_max_k: int = DIRECT_ENUMERATION_MAX_K) -> WeightEnumerator:
    """
    Exact weight enumerator of a code

    Args:
        code: The code
        method: "direct", "dual" (enumerate the dual, then MacWilliams) or
            "auto" (direct when k <= direct_max_k)
        direct_max_k: Largest dimension enumerated directly in auto mode

    Returns:
        WeightEnumerator with A_0..A_n
    """
    if method == "auto":
        method = "direct" if code.k <= direct_max_k else "dual"
    if method == "direct":
        return WeightEnumerator(weight_distribution(code.generator.data))
    if method != "dual":
        raise ValueError(f"Unknown enumeration method: {method}")
    # the Euclidean and Hermitian duals share one weight distribution
    dual = null_space_array(code.generator.data)
    if dual.shape[0] > direct_max_k:
        logger.warning("Enumerating a dual of dimension %d directly", dual.shape[0])
    dual_enumerator = WeightEnumerator(weight_distribution(dual), length=code.n)
    return macwilliams_transform(dual_enumerator, code.n, dual.shape[0])


def minimum_weight(code: LinearCode, stop_below: Optional[int] = None,
                   direct_max_k: int = DIRECT_ENUMERATION_MAX_K) -> int:
    """Minimum nonzero weight d(C)"""
    if code.k <= direct_max_k:
        return span_minimum_weight(code.generator.data, stop_below=stop_below)
    return weight_enumerator(code, direct_max_k=direct_max_k).minimum_weight


def count_low_weight(code: LinearCode, max_weight: int) -> List[int]:
    """
    Count codewords of weight 0..max_weight without enumerating the whole code

    A codeword of a systematic (I_k | A) code has weight at least the support
    size of its message, so only messages of support <= max_weight are formed.

    Returns:
        [A_0, A_1, ..., A_max_weight]
    """
    matrix, _ = standard_form(code)
    generator = matrix.data
    k = code.k
    messages = []
    for support_size in range(1, min(max_weight, k) + 1):
        for support in itertools.combinations(range(k), support_size):
            for values in itertools.product((1, 2, 3), repeat=support_size):
                message = np.zeros(k, dtype=np.uint8)
                message[list(support)] = values
                messages.append(message)
    counts = [1] + [0] * max_weight
    if messages:
        words = matmul_arrays(np.array(messages, dtype=np.uint8), generator)
        weights = np.count_nonzero(words, axis=1)
        for w in weights[weights <= max_weight]:
            counts[int(w)] += 1
    return counts


def code_params(code: LinearCode) -> CodeParams:
    return CodeParams(n=code.n, k=code.k, d=minimum_weight(code))


def standard_form(code: LinearCode) -> Tuple[GF4Matrix, MonomialTransform]:
    """
    Generator (I_k | A) of an equivalent code and the column permutation used

    Returns:
        Tuple of (matrix, transform) with apply_monomial(code, transform)
        generated by matrix
    """
    if code._standard_form is None:
        reduced, rank, pivots = rref_array(code.generator.data)
        pivot_set = set(pivots)
        order = pivots + [c for c in range(code.n) if c not in pivot_set]
        targets = np.empty(code.n, dtype=np.int64)
        targets[order] = np.arange(code.n)
        matrix = GF4Matrix(reduced[:rank][:, order])
        code._standard_form = (matrix, MonomialTransform(targets + 1))
    return code._standard_form


def apply_monomial(code: LinearCode, transform: MonomialTransform) -> LinearCode:
    """The equivalent code {xP | x in C}"""
    if transform.size != code.n:
        raise ValueError(f"Transform of size {transform.size} does not match length {code.n}")
    return LinearCode(transform.apply_to_rows(code.generator.data))


def hermitian_dual(code: LinearCode) -> LinearCode:
    """C^perp_H, computed as the Euclidean null space of the conjugated generator"""
    if code.k == code.n:
        raise ZeroCodeError(f"The Hermitian dual of the full space F_4^{code.n} is the zero code")
    conjugated = CONJ_TABLE[code.generator.data]
    dual = null_space_array(conjugated)
    if matmul_arrays(dual, conjugated.T).any():
        raise RuntimeError("Hermitian dual basis is not orthogonal to the code")
    return LinearCode(dual)


def euclidean_dual(code: LinearCode) -> LinearCode:
    if code.k == code.n:
        raise ZeroCodeError(f"The Euclidean dual of the full space F_4^{code.n} is the zero code")
    return LinearCode(null_space_array(code.generator.data))


def hermitian_gram(code: LinearCode) -> GF4Matrix:
    """G conj(G)^T"""
    return code.generator @ code.generator.conj_transpose()


def is_hermitian_lcd(code: LinearCode) -> bool:
    return hermitian_gram(code).is_nonsingular()


def is_hermitian_self_orthogonal(code: LinearCode) -> bool:
    return hermitian_gram(code).is_zero()


def lcd_by_intersection(code: LinearCode) -> bool:
    """C ∩ C^perp_H = {0}, tested as rank(G stacked on a dual generator) = n"""
    if code.k == code.n:
        return True
    dual = hermitian_dual(code)
    return rank_array(np.vstack((code.generator.data, dual.generator.data))) == code.n


def is_euclidean_lcd(code: LinearCode) -> bool:
    if code.k == code.n:
        return True
    dual = euclidean_dual(code)
    return rank_array(np.vstack((code.generator.data, dual.generator.data))) == code.n


def _check_coordinate(code: LinearCode, i: int) -> int:
    if not 1 <= i <= code.n:
        raise IndexError(f"Coordinate {i} out of range 1..{code.n}")
    if code.n == 1:
        raise ValueError("Cannot delete the only coordinate of a length-1 code")
    return i - 1


def shorten(code: LinearCode, i: int) -> LinearCode:
    """S(C, i): codewords that are 0 at coordinate i (1-based), with i deleted"""
    j = _check_coordinate(code, i)
    data = np.array(code.generator.data, copy=True)
    nonzero = np.flatnonzero(data[:, j])
    if nonzero.size:
        p = int(nonzero[0])
        pivot_row = MUL_TABLE[INV_TABLE[data[p, j]], data[p]]
        data = np.delete(data, p, axis=0)
        factors = data[:, j].copy()
        data ^= MUL_TABLE[factors[:, None], pivot_row[None, :]]
    if data.shape[0] == 0:
        raise ZeroCodeError(f"Shortening a 1-dimensional code on coordinate {i} leaves the zero code")
    return LinearCode(np.delete(data, j, axis=1))


def puncture(code: LinearCode, i: int) -> LinearCode:
    """The code with coordinate i (1-based) deleted"""
    j = _check_coordinate(code, i)
    return LinearCode.from_spanning_rows(np.delete(code.generator.data, j, axis=1))


def eaqecc_params(code: LinearCode, direct_max_k: int = DIRECT_ENUMERATION_MAX_K) -> EAQECCParams:
    """[[n, k, d; n - k]]_2 of the entanglement-assisted code from a Hermitian LCD code"""
    if not is_hermitian_lcd(code):
        raise NotLCDError(f"{code!r} is not Hermitian LCD")
    d = minimum_weight(code, direct_max_k=direct_max_k)
    return EAQECCParams(n=code.n, k=code.k, d=d, c=code.n - code.k)
