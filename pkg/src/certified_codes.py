"""
Certified Codes Module
Registry of the explicit and derived Hermitian LCD codes, their expected
parameters and weight enumerators, and the verifier that recomputes them
"""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.bounds import BoundSource, bound_record, recorded_upper_bounds
from src.code_io import read_matrix_file
from src.codes import (
    DIRECT_ENUMERATION_MAX_K,
    CodeParams,
    EAQECCParams,
    LinearCode,
    WeightEnumerator,
    count_low_weight,
    eaqecc_params,
    is_hermitian_lcd,
    lcd_by_intersection,
    puncture,
    shorten,
    weight_enumerator,
)

logger = logging.getLogger(__name__)

DEFAULT_DATA_DIRECTORY = Path(__file__).resolve().parent.parent / "data" / "codes"


class UnknownCodeError(KeyError):
    """Raised for a certificate name that is not in the registry"""


class Construction(BaseModel):
    """How a certified code is obtained: (I_k | M) from a matrix file, or by shortening/puncturing another code"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["explicit", "shorten", "puncture"]
    matrix_file: Optional[str] = None
    transpose: bool = False
    source: Optional[str] = None
    coordinate: Optional[int] = None

    def describe(self) -> str:
        if self.kind == "explicit":
            suffix = " (transposed)" if self.transpose else ""
            return f"(I | {Path(self.matrix_file).stem}){suffix}"
        letter = "S" if self.kind == "shorten" else "P"
        return f"{letter}({self.source},{self.coordinate})"


class Certificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    construction: Construction
    expected: CodeParams
    expected_lcd: bool = True
    enumerator: Optional[str] = None

    def expected_enumerator(self) -> Optional[WeightEnumerator]:
        if self.enumerator is None:
            return None
        return WeightEnumerator.from_pairs(self.enumerator, length=self.expected.n)


class VerificationReport(BaseModel):
    name: str
    n: int
    k: int
    d: int
    lcd: bool
    lcd_oracle: bool
    enumerator_ok: Optional[bool]
    passed: bool
    expected: CodeParams
    mismatches: List[str] = []

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "lcd": self.lcd,
            "enumerator_ok": self.enumerator_ok,
            "pass": self.passed,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        enumerator = {True: "match", False: "MISMATCH", None: "n/a"}[self.enumerator_ok]
        return (f"{status} {self.name}: [{self.n},{self.k},{self.d}]_4 lcd={self.lcd} "
                f"enumerator={enumerator}")


class OptimalityClaim(BaseModel):
    quantity: Literal["d4", "dQ"]
    n: int
    k: int
    lower: int
    upper: int
    witness: Optional[str] = None
    upper_source: Optional[BoundSource] = None

    @property
    def exact(self) -> Optional[int]:
        return self.lower if self.lower == self.upper else None

    def statement(self) -> str:
        label = f"{self.quantity}({self.n},{self.k})"
        if self.exact is not None:
            return f"{label} = {self.exact}"
        return f"{label} in {{{', '.join(str(v) for v in range(self.lower, self.upper + 1))}}}"


def _explicit(name: str, matrix_file: str, params: Tuple[int, int, int], enumerator: Optional[str] = None,
              transpose: bool = False) -> Certificate:
    n, k, d = params
    return Certificate(name=name, construction=Construction(kind="explicit", matrix_file=matrix_file,
                                                            transpose=transpose),
                       expected=CodeParams(n=n, k=k, d=d), enumerator=enumerator)


def _derived(name: str, kind: str, source: str, coordinate: int, params: Tuple[int, int, int],
             enumerator: Optional[str] = None) -> Certificate:
    n, k, d = params
    return Certificate(name=name, construction=Construction(kind=kind, source=source, coordinate=coordinate),
                       expected=CodeParams(n=n, k=k, d=d), enumerator=enumerator)


_E_CHAIN = (("E17", "E18", 1), ("E16", "E17", 2), ("E15", "E16", 1), ("E14", "E15", 4), ("E13", "E14", 1),
            ("E12", "E13", 2), ("E11", "E12", 1), ("E10", "E11", 2), ("E9", "E10", 2))

CERTIFICATES: Dict[str, Certificate] = {
    cert.name: cert
    for cert in [
        _derived("C14", "shorten", "C15", 4, (14, 6, 7),
                 "0:1 7:210 8:252 9:588 10:945 11:882 12:819 13:336 14:63"),
        _explicit("C15", "M15.txt", (15, 7, 7),
                  "0:1 7:336 8:756 9:1323 10:2415 11:4095 12:3759 13:2289 14:1197 15:213"),
        _explicit("C17_1", "M17_1.txt", (17, 6, 9),
                  "0:1 9:201 10:279 11:492 12:777 13:840 14:849 15:456 16:174 17:27"),
        _explicit("C17_2", "M17_2.txt", (17, 7, 8),
                  "0:1 8:204 9:549 10:1053 11:1977 12:3117 13:3711 14:3111 15:1875 16:642 17:144"),
        _derived("C19", "puncture", "C20", 1, (19, 7, 9),
                 "0:1 9:111 10:423 11:801 12:1509 13:2595 14:3291 15:3315 16:2502 17:1362 18:402 19:72"),
        _explicit("C20", "M20.txt", (20, 7, 10),
                  "0:1 10:297 11:441 12:978 13:1767 14:2685 15:3381 16:3078 17:2349 18:1038 19:318 20:51"),
        _explicit("D12", "N12.txt", (12, 6, 5),
                  "0:1 5:72 6:177 7:378 8:792 9:1044 10:999 11:522 12:111"),
        _explicit("D20", "N20.txt", (20, 8, 9),
                  "0:1 9:288 10:714 11:1725 12:3888 13:7272 14:11208 15:13338 16:12423 17:8640 "
                  "18:4446 19:1377 20:216"),
        *[_derived(name, "shorten", source, coordinate, (int(name[1:]), int(name[1:]) - 3, 3))
          for name, source, coordinate in reversed(_E_CHAIN)],
        _explicit("E18", "L18T.txt", (18, 15, 3), transpose=True),
    ]
}

# codes whose EAQECC parameters are claimed; E-chain codes are parameter certificates only
EAQECC_CLAIMS: Dict[str, Tuple[int, int, int, int]] = {
    "C14": (14, 6, 7, 8),
    "C15": (15, 7, 7, 8),
    "C17_1": (17, 6, 9, 11),
    "C17_2": (17, 7, 8, 10),
    "C19": (19, 7, 9, 12),
    "C20": (20, 7, 10, 13),
    "D20": (20, 8, 9, 12),
}


def certificate(name: str) -> Certificate:
    try:
        return CERTIFICATES[name]
    except KeyError:
        raise UnknownCodeError(f"Unknown code {name!r}; known codes: {', '.join(CERTIFICATES)}")


def certificate_names() -> List[str]:
    return list(CERTIFICATES)


def witness_table() -> Dict[str, Tuple[int, int, int]]:
    """Expected (n, k, d) of every certified code"""
    return {name: (c.expected.n, c.expected.k, c.expected.d) for name, c in CERTIFICATES.items()}


@lru_cache(maxsize=None)
def _build(name: str, data_dir: str) -> LinearCode:
    cert = certificate(name)
    construction = cert.construction
    if construction.kind == "explicit":
        path = Path(data_dir) / construction.matrix_file
        try:
            matrix = read_matrix_file(path)
        except (OSError, ValueError) as e:
            raise ValueError(f"Error building code {name} from {path}: {e}") from e
        block = matrix.T.data if construction.transpose else matrix.data
        generator = np.hstack((np.eye(block.shape[0], dtype=np.uint8), block))
        return LinearCode(generator, name=name)
    source = _build(construction.source, data_dir)
    operation = shorten if construction.kind == "shorten" else puncture
    code = operation(source, construction.coordinate)
    code.name = name
    return code


def build(name: str, data_dir: Optional[Union[str, Path]] = None) -> LinearCode:
    """
    Build a certified code

    Args:
        name: Certificate name such as "C15" or "E13"
        data_dir: Directory holding the matrix files

    Returns:
        LinearCode
    """
    return _build(name, str(data_dir or DEFAULT_DATA_DIRECTORY))


def verify(name: str, data_dir: Optional[Union[str, Path]] = None,
           direct_max_k: int = DIRECT_ENUMERATION_MAX_K) -> VerificationReport:
    """
    Recompute parameters, LCD status and weight enumerator of a certified code

    Mismatches are collected in the report; nothing is raised for them.
    """
    cert = certificate(name)
    code = build(name, data_dir)
    enumerator = weight_enumerator(code, direct_max_k=direct_max_k)
    d = enumerator.minimum_weight
    lcd = is_hermitian_lcd(code)
    lcd_oracle = lcd_by_intersection(code)
    mismatches = []

    measured = (code.n, code.k, d)
    if measured != (cert.expected.n, cert.expected.k, cert.expected.d):
        mismatches.append(f"parameters [{code.n},{code.k},{d}] differ from expected {cert.expected}")
    if lcd != cert.expected_lcd:
        mismatches.append(f"Hermitian LCD is {lcd}, expected {cert.expected_lcd}")
    if lcd_oracle != lcd:
        mismatches.append("Gram matrix test and intersection test disagree")

    if code.k > direct_max_k:
        # the enumerator came from the dual; confirm the low weights directly
        low = count_low_weight(code, d)
        if any(low[1:d]) or low[d] != enumerator[d]:
            mismatches.append(f"direct low-weight count {low} disagrees with the enumerator")

    enumerator_ok = None
    expected_enumerator = cert.expected_enumerator()
    if expected_enumerator is not None:
        if expected_enumerator.total != 4 ** cert.expected.k:
            mismatches.append(f"expected enumerator sums to {expected_enumerator.total}, "
                              f"not 4^{cert.expected.k} = {4 ** cert.expected.k}")
        enumerator_ok = enumerator == expected_enumerator
        if not enumerator_ok:
            mismatches.append(f"enumerator {enumerator.to_pairs()} differs from expected")

    report = VerificationReport(name=name, n=code.n, k=code.k, d=d, lcd=lcd, lcd_oracle=lcd_oracle,
                                enumerator_ok=enumerator_ok, passed=not mismatches,
                                expected=cert.expected, mismatches=mismatches)
    for mismatch in mismatches:
        logger.warning("%s: %s", name, mismatch)
    return report


def verify_all(data_dir: Optional[Union[str, Path]] = None,
               direct_max_k: int = DIRECT_ENUMERATION_MAX_K) -> List[VerificationReport]:
    reports = [verify(name, data_dir, direct_max_k) for name in CERTIFICATES]
    logger.info("Verified %d codes, %d passed", len(reports), sum(r.passed for r in reports))
    return reports


def eaqecc_claims(data_dir: Optional[Union[str, Path]] = None) -> Dict[str, EAQECCParams]:
    """EAQECC parameters of the codes with a claimed quantum counterpart"""
    return {name: eaqecc_params(build(name, data_dir)) for name in EAQECC_CLAIMS}


def derive_optimality(reports: Optional[List[VerificationReport]] = None) -> List[OptimalityClaim]:
    """
    Combine passing witnesses with recorded upper bounds and nonexistence results

    Args:
        reports: Verification reports; verify_all() is run when omitted

    Returns:
        One d4 claim and one dQ claim per recorded (n, k)
    """
    reports = verify_all() if reports is None else reports
    witnesses = {r.name: (r.n, r.k, r.d) for r in reports if r.passed and r.lcd}
    claims = []
    for record in recorded_upper_bounds():
        if record.quantity == "d4":
            assembled = bound_record(record.n, record.k, witnesses)
            claims.append(OptimalityClaim(quantity="d4", n=record.n, k=record.k, lower=assembled.lower,
                                          upper=assembled.upper, witness=assembled.witness,
                                          upper_source=assembled.upper_source))
            continue
        # an LCD [n,k,d]_4 witness gives an [[n,k,d;n-k]]_2 code
        lower, witness = record.lower, None
        for name, (n, k, d) in witnesses.items():
            if (n, k) == (record.n, record.k) and d > lower:
                lower, witness = d, name
        claims.append(OptimalityClaim(quantity="dQ", n=record.n, k=record.k, lower=lower,
                                      upper=record.upper, witness=witness, upper_source=record.upper_source))
    return claims
