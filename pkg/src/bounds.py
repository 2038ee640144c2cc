"""
Bounds Module
Sphere-packing bound, closed forms for d4(n, n-1), d4(n, n-2), d4(n, n-3),
the weight-2 LCD construction and recorded bound facts
"""

import logging
from enum import Enum
from math import comb
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from src.codes import LinearCode

logger = logging.getLogger(__name__)


class BoundSource(str, Enum):
    SPHERE_PACKING = "sphere-packing"
    CLOSED_FORM = "closed-form"
    RECORDED = "recorded"
    WITNESS = "verified-witness"
    EXHAUSTIVE = "exhaustive-search"


class BoundRecord(BaseModel):
    """Lower and upper bounds on d4(n,k) or dQ(n,k)"""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    quantity: str = "d4"
    lower: Optional[int] = None
    lower_source: Optional[BoundSource] = None
    witness: Optional[str] = None
    upper: Optional[int] = None
    upper_source: Optional[BoundSource] = None
    citation: Optional[str] = None

    @model_validator(mode="after")
    def _check_order(self):
        if self.quantity not in ("d4", "dQ"):
            raise ValueError(f"Unknown bounded quantity {self.quantity!r}")
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"{self.quantity}({self.n},{self.k}): lower {self.lower} exceeds upper {self.upper}")
        return self

    @property
    def exact(self) -> Optional[int]:
        if self.lower is not None and self.lower == self.upper:
            return self.lower
        return None

    def describe(self) -> str:
        lower = "?" if self.lower is None else str(self.lower)
        upper = "?" if self.upper is None else str(self.upper)
        label = f"{self.quantity}({self.n},{self.k})"
        if self.exact is not None:
            text = f"{label} = {self.exact}"
        else:
            text = f"{lower} <= {label} <= {upper}"
        details = []
        if self.lower_source:
            details.append(f"lower: {self.lower_source.value}" + (f" ({self.witness})" if self.witness else ""))
        if self.upper_source:
            details.append(f"upper: {self.upper_source.value}")
        return f"{text}  [{'; '.join(details)}]" if details else text


def sphere_packing_ok(n: int, k: int, d: int) -> bool:
    """Hamming bound for q = 4: sum_{j <= (d-1)/2} C(n,j) 3^j <= 4^(n-k)"""
    if not 1 <= k <= n:
        raise ValueError(f"Need 1 <= k <= n, got n={n} k={k}")
    t = (d - 1) // 2
    return sum(comb(n, j) * 3 ** j for j in range(t + 1)) <= 4 ** (n - k)


def sphere_packing_max_d(n: int, k: int) -> int:
    """Largest d <= n - k + 1 allowed by the Hamming bound"""
    d = n - k + 1
    while d > 1 and not sphere_packing_ok(n, k, d):
        d -= 1
    return d


def weight2_lcd_threshold(i: int) -> int:
    """(4^i - 1) / 3; for longer n no [n, n-i, 3]_4 code exists and d4(n, n-i) <= 2"""
    if i < 1:
        raise ValueError(f"Need i >= 1, got {i}")
    return (4 ** i - 1) // 3


def build_weight2_lcd(n: int, i: int) -> LinearCode:
    """
    Hermitian LCD [n, n-i, 2]_4 code with generator (I_{n-i} | A), every row of A (1,1,0,...,0)

    Args:
        n: Length
        i: Codimension, 2 <= i <= n - 2

    Returns:
        The code; its Gram matrix G conj(G)^T is the identity
    """
    if not 2 <= i <= n - 2:
        raise ValueError(f"Weight-2 construction needs 2 <= i <= n - 2, got n={n} i={i}")
    k = n - i
    block = np.zeros((k, i), dtype=np.uint8)
    block[:, :2] = 1
    return LinearCode(np.hstack((np.eye(k, dtype=np.uint8), block)), name=f"W{n}_{i}")


def d4_dimension_n_minus_1(n: int) -> int:
    if n < 2:
        raise ValueError(f"d4(n, n-1) needs n >= 2, got {n}")
    return 1 if n % 2 == 0 else 2


def d4_dimension_n_minus_2(n: int) -> int:
    if n < 3:
        raise ValueError(f"d4(n, n-2) needs n >= 3, got {n}")
    return 3 if n == 3 else 2


def d4_dimension_n_minus_3(n: int) -> int:
    if n < 4:
        raise ValueError(f"d4(n, n-3) needs n >= 4, got {n}")
    return 3 if n <= 18 else 2


# Small Hermitian LCD facts taken as known, and the maximum d of unrestricted [n, n-3]_4 codes.
RECORDED_D4: Dict[Tuple[int, int], int] = {
    (3, 1): 3,
    (4, 2): 2,
    (5, 3): 2,
    **{(n, n - 3): 3 for n in range(4, 9)},
}
UNRESTRICTED_N_MINUS_3_MAX_D: Dict[int, int] = {n: 3 for n in range(9, 22)}

# (n, k, d) with no Hermitian LCD [n,k,d]_4 code, each reproducible by an exhaustive search.
NONEXISTENCE_RESULTS: Tuple[Tuple[int, int, int], ...] = (
    (12, 6, 6),
    (19, 16, 3),
    (20, 17, 3),
    (21, 18, 3),
)

_D4_UPPER: Dict[Tuple[int, int], int] = {
    (12, 6): 6,
    (14, 6): 7,
    (15, 7): 7,
    (17, 6): 9,
    (17, 7): 8,
    (19, 7): 9,
    (20, 7): 10,
    (20, 8): 10,
}
_DQ_RANGE: Dict[Tuple[int, int], Tuple[int, int]] = {
    (12, 6): (5, 6),
    (14, 6): (6, 7),
    (15, 7): (6, 7),
    (17, 6): (8, 9),
    (17, 7): (7, 8),
    (19, 7): (8, 9),
    (20, 7): (9, 10),
    (20, 8): (8, 10),
}


def recorded_upper_bounds() -> List[BoundRecord]:
    """Quoted d4 upper bounds followed by the quoted dQ ranges"""
    records = [
        BoundRecord(n=n, k=k, quantity="d4", upper=upper, upper_source=BoundSource.RECORDED,
                    citation=f"bound table for linear [{n},{k}]_4 codes")
        for (n, k), upper in _D4_UPPER.items()
    ]
    records.extend(
        BoundRecord(n=n, k=k, quantity="dQ", lower=lower, lower_source=BoundSource.RECORDED,
                    upper=upper, upper_source=BoundSource.RECORDED,
                    citation=f"bound table for [[{n},{k},d;{n - k}]]_2 codes")
        for (n, k), (lower, upper) in _DQ_RANGE.items()
    )
    return records


def _closed_form(n: int, k: int) -> Optional[BoundRecord]:
    if k == n:
        value, witness = 1, "full space"
    elif k == n - 1:
        value, witness = d4_dimension_n_minus_1(n), "parity-check construction"
    elif k == n - 2 and n >= 3:
        value = d4_dimension_n_minus_2(n)
        witness = "recorded small code" if n <= 5 else f"weight-2 construction W{n}_2"
    elif k == n - 3 and n >= 4:
        value = d4_dimension_n_minus_3(n)
        if n <= 8:
            witness = "recorded small code"
        elif n <= 18:
            witness = f"E{n}"
        else:
            witness = f"weight-2 construction W{n}_3"
    else:
        return None
    return BoundRecord(n=n, k=k, lower=value, lower_source=BoundSource.CLOSED_FORM, witness=witness,
                       upper=value, upper_source=BoundSource.CLOSED_FORM)


def bound_record(n: int, k: int, witnesses: Optional[Mapping[str, Tuple[int, int, int]]] = None) -> BoundRecord:
    """
    Assemble what is known about d4(n,k)

    Args:
        n: Length
        k: Dimension
        witnesses: Verified codes as name -> (n, k, d), used for the lower bound

    Returns:
        BoundRecord with the best lower and upper bound and their sources
    """
    if not 1 <= k <= n:
        raise ValueError(f"Need 1 <= k <= n, got n={n} k={k}")
    closed = _closed_form(n, k)
    if closed is not None:
        return closed

    lower, lower_source, witness = None, None, None
    for name, (wn, wk, wd) in (witnesses or {}).items():
        if (wn, wk) == (n, k) and (lower is None or wd > lower):
            lower, lower_source, witness = wd, BoundSource.WITNESS, name
    if lower is None:
        lower, lower_source = 1, BoundSource.CLOSED_FORM

    upper, upper_source, citation = sphere_packing_max_d(n, k), BoundSource.SPHERE_PACKING, None
    if (n, k) in _D4_UPPER and _D4_UPPER[(n, k)] <= upper:
        upper, upper_source = _D4_UPPER[(n, k)], BoundSource.RECORDED
        citation = f"bound table for linear [{n},{k}]_4 codes"
    for (xn, xk, xd) in NONEXISTENCE_RESULTS:
        if (xn, xk) == (n, k) and upper == xd:
            upper, upper_source = xd - 1, BoundSource.EXHAUSTIVE
            citation = f"no Hermitian LCD [{n},{k},{xd}]_4 code"
    if lower > upper:
        logger.warning("d4(%d,%d): witness %s with d=%d exceeds upper bound %d", n, k, witness, lower, upper)
    return BoundRecord(n=n, k=k, lower=min(lower, upper), lower_source=lower_source, witness=witness,
                       upper=upper, upper_source=upper_source, citation=citation)
