"""
GF(4) Arithmetic Module
Exact arithmetic over F4 = {0, 1, w, w^2} (w^2 = w + 1) and dense linear algebra over it
"""

import logging
from functools import total_ordering
from typing import List, Sequence, Tuple, Union

import numpy as np

logger = logging.getLogger(__name__)

# Symbol alphabet used for all text I/O: w is omega, W is omega^2.
# The position of a symbol is its 2-bit encoding and its rank in the total order.
SYMBOLS = ("0", "1", "w", "W")
_SYMBOL_VALUES = {symbol: value for value, symbol in enumerate(SYMBOLS)}


def _frozen(table: np.ndarray) -> np.ndarray:
    table.setflags(write=False)
    return table


ADD_TABLE = _frozen(np.bitwise_xor.outer(np.arange(4), np.arange(4)).astype(np.uint8))
MUL_TABLE = _frozen(np.array([[0, 0, 0, 0],
                              [0, 1, 2, 3],
                              [0, 2, 3, 1],
                              [0, 3, 1, 2]], dtype=np.uint8))
# x^-1 = x^2 for nonzero x, so inversion and conjugation share a table; INV[0] is never used
INV_TABLE = _frozen(np.array([0, 1, 3, 2], dtype=np.uint8))
CONJ_TABLE = _frozen(np.array([0, 1, 3, 2], dtype=np.uint8))


class GF4ParseError(ValueError):
    """Raised when text contains a symbol outside {0, 1, w, W}"""


def parse_symbol(symbol: str) -> int:
    """
    Convert a text symbol to its 2-bit field encoding

    Args:
        symbol: One of '0', '1', 'w', 'W'

    Returns:
        Integer encoding in 0..3
    """
    try:
        return _SYMBOL_VALUES[symbol]
    except (KeyError, TypeError):
        raise GF4ParseError(f"Invalid GF(4) symbol {symbol!r}; expected one of 0, 1, w, W")


def _as_value(x: Union[int, str, "GF4Scalar"]) -> int:
    if isinstance(x, GF4Scalar):
        return x.value
    if isinstance(x, str):
        return parse_symbol(x)
    value = int(x)
    if not 0 <= value <= 3:
        raise ValueError(f"GF(4) encoding must be in 0..3, got {value}")
    return value


@total_ordering
class GF4Scalar:
    """An element of GF(4), ordered 0 < 1 < w < w^2"""

    __slots__ = ("_value",)

    def __init__(self, value: Union[int, str, "GF4Scalar"] = 0):
        object.__setattr__(self, "_value", _as_value(value))

    def __setattr__(self, name, value):
        raise AttributeError("GF4Scalar is immutable")

    @property
    def value(self) -> int:
        return self._value

    def __add__(self, other) -> "GF4Scalar":
        return GF4Scalar(self._value ^ _as_value(other))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other) -> "GF4Scalar":
        return GF4Scalar(int(MUL_TABLE[self._value, _as_value(other)]))

    __rmul__ = __mul__

    def inverse(self) -> "GF4Scalar":
        if self._value == 0:
            raise ZeroDivisionError("0 has no inverse in GF(4)")
        return GF4Scalar(int(INV_TABLE[self._value]))

    def __truediv__(self, other) -> "GF4Scalar":
        return self * GF4Scalar(other).inverse()

    def __pow__(self, exponent: int) -> "GF4Scalar":
        if self._value == 0:
            if exponent < 0:
                raise ZeroDivisionError("0 has no inverse in GF(4)")
            return GF4Scalar(1 if exponent == 0 else 0)
        result = 1
        base = self._value if exponent >= 0 else int(INV_TABLE[self._value])
        for _ in range(abs(exponent) % 3):
            result = int(MUL_TABLE[result, base])
        return GF4Scalar(result)

    def conj(self) -> "GF4Scalar":
        return GF4Scalar(int(CONJ_TABLE[self._value]))

    def is_zero(self) -> bool:
        return self._value == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, GF4Scalar):
            return self._value == other._value
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, GF4Scalar):
            return self._value < other._value
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("GF4", self._value))

    def __int__(self) -> int:
        return self._value

    def __str__(self) -> str:
        return SYMBOLS[self._value]

    def __repr__(self) -> str:
        return f"GF4Scalar('{SYMBOLS[self._value]}')"

    @classmethod
    def elements(cls) -> List["GF4Scalar"]:
        """All four field elements in encoding order"""
        return [cls(v) for v in range(4)]


ZERO = GF4Scalar(0)
ONE = GF4Scalar(1)
OMEGA = GF4Scalar(2)
OMEGA2 = GF4Scalar(3)


def add(a, b) -> GF4Scalar:
    """Field sum; equals XOR of the encodings"""
    return GF4Scalar(a) + b


def mul(a, b) -> GF4Scalar:
    """Field product"""
    return GF4Scalar(a) * b


def conj(a) -> GF4Scalar:
    """Conjugation x -> x^2 (fixes 0 and 1, swaps w and w^2)"""
    return GF4Scalar(a).conj()


def _parse_symbol_row(text: str) -> np.ndarray:
    tokens = text.split() if any(ch.isspace() for ch in text.strip()) else list(text.strip())
    return np.array([parse_symbol(t) for t in tokens], dtype=np.uint8)


def _to_array(values, ndim: int) -> np.ndarray:
    if isinstance(values, (GF4Vector, GF4Matrix)):
        return values.data
    if isinstance(values, np.ndarray):
        array = values
    elif isinstance(values, str):
        array = _parse_symbol_row(values)
    else:
        items = list(values)
        if ndim == 2:
            rows = [_to_array(item, 1) for item in items]
            lengths = {len(row) for row in rows}
            if len(lengths) > 1:
                raise ValueError(f"Matrix rows have different lengths: {sorted(lengths)}")
            array = np.array(rows, dtype=np.uint8) if rows else np.zeros((0, 0), np.uint8)
        else:
            array = np.array([_as_value(v) for v in items], dtype=np.uint8)
    if array.ndim != ndim:
        raise ValueError(f"Expected a {ndim}-dimensional array, got shape {array.shape}")
    if array.size and (array.min() < 0 or array.max() > 3):
        raise ValueError("GF(4) encodings must be in 0..3")
    return array.astype(np.uint8)


class GF4Vector:
    """Immutable vector over GF(4)"""

    __slots__ = ("_data",)

    def __init__(self, symbols: Union[str, Sequence, np.ndarray, "GF4Vector"]):
        data = np.array(_to_array(symbols, 1), dtype=np.uint8, copy=True)
        if data.size == 0:
            raise ValueError("GF4Vector must have positive length")
        data.setflags(write=False)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("GF4Vector is immutable")

    @classmethod
    def zeros(cls, length: int) -> "GF4Vector":
        """The zero vector 0_n"""
        return cls(np.zeros(length, dtype=np.uint8))

    @classmethod
    def ones(cls, length: int) -> "GF4Vector":
        """The all-one vector 1_s"""
        return cls(np.ones(length, dtype=np.uint8))

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def length(self) -> int:
        return int(self._data.size)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, index: int) -> GF4Scalar:
        return GF4Scalar(int(self._data[index]))

    def __iter__(self):
        return (GF4Scalar(int(v)) for v in self._data)

    def __add__(self, other: "GF4Vector") -> "GF4Vector":
        _check_lengths(self, other)
        return GF4Vector(self._data ^ other._data)

    __sub__ = __add__

    def scale(self, c) -> "GF4Vector":
        return GF4Vector(MUL_TABLE[_as_value(c), self._data])

    def conj(self) -> "GF4Vector":
        return GF4Vector(CONJ_TABLE[self._data])

    def weight(self) -> int:
        return int(np.count_nonzero(self._data))

    def leading_symbol(self) -> GF4Scalar:
        """First nonzero symbol, or 0 for the zero vector"""
        nonzero = np.flatnonzero(self._data)
        return GF4Scalar(int(self._data[nonzero[0]])) if nonzero.size else ZERO

    def to_tuple(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self._data)

    def __eq__(self, other) -> bool:
        if isinstance(other, GF4Vector):
            return np.array_equal(self._data, other._data)
        return NotImplemented

    def __lt__(self, other: "GF4Vector") -> bool:
        # lexicographic over 0 < 1 < w < w^2
        return self.to_tuple() < other.to_tuple()

    def __le__(self, other: "GF4Vector") -> bool:
        return self.to_tuple() <= other.to_tuple()

    def __hash__(self) -> int:
        return hash(self._data.tobytes())

    def __str__(self) -> str:
        return " ".join(SYMBOLS[v] for v in self._data)

    def __repr__(self) -> str:
        return f"GF4Vector('{self}')"


def _check_lengths(x: GF4Vector, y: GF4Vector) -> None:
    if x.length != y.length:
        raise ValueError(f"Vector length mismatch: {x.length} != {y.length}")


def weight(v: GF4Vector) -> int:
    """Number of nonzero components"""
    return v.weight()


def hermitian_inner_product(x: GF4Vector, y: GF4Vector) -> GF4Scalar:
    """<x, y>_H = sum of x_i * conj(y_i)"""
    _check_lengths(x, y)
    return GF4Scalar(int(np.bitwise_xor.reduce(MUL_TABLE[x.data, CONJ_TABLE[y.data]])))


def euclidean_inner_product(x: GF4Vector, y: GF4Vector) -> GF4Scalar:
    """<x, y> = sum of x_i * y_i"""
    _check_lengths(x, y)
    return GF4Scalar(int(np.bitwise_xor.reduce(MUL_TABLE[x.data, y.data])))


# Array kernels. They operate on uint8 arrays of encodings and are shared by
# the matrix class, the code operations and the search engine.

def matmul_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over GF(4) of (r x s) and (s x t) encoding arrays"""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Dimension mismatch: {a.shape} x {b.shape}")
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    products = MUL_TABLE[a[:, :, None], b[None, :, :]]
    return np.bitwise_xor.reduce(products, axis=1).astype(np.uint8)


def rref_array(a: np.ndarray) -> Tuple[np.ndarray, int, List[int]]:
    """
    Reduced row echelon form over GF(4)

    Args:
        a: Encoding array of shape (rows, cols)

    Returns:
        Tuple of (reduced array with zero rows last, rank, pivot columns)
    """
    m = np.array(a, dtype=np.uint8, copy=True)
    rows, cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        below = np.flatnonzero(m[r:, c])
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = MUL_TABLE[INV_TABLE[m[r, c]], m[r]]
        factors = m[:, c].copy()
        factors[r] = 0
        targets = np.flatnonzero(factors)
        if targets.size:
            m[targets] ^= MUL_TABLE[factors[targets][:, None], m[r][None, :]]
        pivots.append(c)
        r += 1
    return m, r, pivots


def rank_array(a: np.ndarray) -> int:
    return rref_array(a)[1]


def null_space_array(a: np.ndarray) -> np.ndarray:
    """
    Basis of {x : a x^T = 0} as rows

    Args:
        a: Encoding array of shape (rows, cols)

    Returns:
        Array of shape (cols - rank, cols); empty when a has full column rank
    """
    cols = a.shape[1]
    reduced, rank, pivots = rref_array(a)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        # characteristic 2: -R[j, f] = R[j, f]
        for j, p in enumerate(pivots):
            basis[i, p] = reduced[j, f]
    return basis


class GF4Matrix:
    """Immutable rectangular matrix over GF(4)"""

    __slots__ = ("_data",)

    def __init__(self, entries: Union[Sequence, np.ndarray, "GF4Matrix"]):
        data = np.array(_to_array(entries, 2), dtype=np.uint8, copy=True)
        if data.shape[0] == 0 or data.shape[1] == 0:
            raise ValueError(f"GF4Matrix must have positive dimensions, got {data.shape}")
        data.setflags(write=False)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("GF4Matrix is immutable")

    @classmethod
    def identity(cls, size: int) -> "GF4Matrix":
        return cls(np.eye(size, dtype=np.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GF4Matrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def hstack(cls, left: "GF4Matrix", right: "GF4Matrix") -> "GF4Matrix":
        if left.rows != right.rows:
            raise ValueError(f"Row count mismatch: {left.rows} != {right.rows}")
        return cls(np.hstack((left.data, right.data)))

    @classmethod
    def vstack(cls, top: "GF4Matrix", bottom: "GF4Matrix") -> "GF4Matrix":
        if top.cols != bottom.cols:
            raise ValueError(f"Column count mismatch: {top.cols} != {bottom.cols}")
        return cls(np.vstack((top.data, bottom.data)))

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> GF4Vector:
        return GF4Vector(self._data[i])

    def row_vectors(self) -> List[GF4Vector]:
        return [GF4Vector(r) for r in self._data]

    def __getitem__(self, index: Tuple[int, int]) -> GF4Scalar:
        i, j = index
        return GF4Scalar(int(self._data[i, j]))

    @property
    def T(self) -> "GF4Matrix":
        return GF4Matrix(self._data.T)

    def conj(self) -> "GF4Matrix":
        return GF4Matrix(CONJ_TABLE[self._data])

    def conj_transpose(self) -> "GF4Matrix":
        return GF4Matrix(CONJ_TABLE[self._data].T)

    def __matmul__(self, other: "GF4Matrix") -> "GF4Matrix":
        return GF4Matrix(matmul_arrays(self._data, other._data))

    def rref(self) -> Tuple["GF4Matrix", int, List[int]]:
        reduced, rank, pivots = rref_array(self._data)
        return GF4Matrix(reduced), rank, pivots

    def rank(self) -> int:
        return rank_array(self._data)

    def is_nonsingular(self) -> bool:
        if self.rows != self.cols:
            raise ValueError(f"Nonsingularity needs a square matrix, got {self.shape}")
        return self.rank() == self.rows

    def is_zero(self) -> bool:
        return not self._data.any()

    def __eq__(self, other) -> bool:
        if isinstance(other, GF4Matrix):
            return np.array_equal(self._data, other._data)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._data.shape, self._data.tobytes()))

    def __str__(self) -> str:
        return "\n".join(" ".join(SYMBOLS[v] for v in row) for row in self._data)

    def __repr__(self) -> str:
        return f"GF4Matrix({self.rows}x{self.cols})"


def rref(m: GF4Matrix) -> Tuple[GF4Matrix, int, List[int]]:
    """Reduced row echelon form, rank and 0-based pivot columns"""
    return m.rref()


def is_nonsingular(m: GF4Matrix) -> bool:
    return m.is_nonsingular()


def matmul(a: GF4Matrix, b: GF4Matrix) -> GF4Matrix:
    return a @ b


def conj_transpose(m: GF4Matrix) -> GF4Matrix:
    return m.conj_transpose()
