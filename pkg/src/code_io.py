"""
Code File Module
Reads and writes generator matrices in the text code-file format
"""

import os
from pathlib import Path
from typing import Optional, Union

import numpy as np

from src.codes import LinearCode
from src.gf4 import SYMBOLS, GF4Matrix, GF4ParseError, parse_symbol


class CodeFormatError(ValueError):
    """Malformed code file; line and column are 1-based"""

    def __init__(self, message: str, line: int, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


def _parse_header(text: str) -> tuple:
    fields = text.split()
    if len(fields) != 2:
        raise CodeFormatError(f"expected header 'n k', got {text!r}", line=1)
    try:
        n, k = int(fields[0]), int(fields[1])
    except ValueError:
        raise CodeFormatError(f"header values must be integers, got {text!r}", line=1)
    if n < 1 or k < 1:
        raise CodeFormatError(f"header needs n >= 1 and k >= 1, got n={n} k={k}", line=1)
    return n, k


def _parse_row(text: str, n: int, line: int) -> np.ndarray:
    tokens = text.split(" ")
    column = 1
    values = []
    for token in tokens:
        if token == "":
            raise CodeFormatError("symbols must be separated by single spaces", line=line, column=column)
        try:
            values.append(parse_symbol(token))
        except GF4ParseError:
            raise CodeFormatError(f"invalid symbol {token!r}", line=line, column=column)
        column += len(token) + 1
    if len(values) != n:
        raise CodeFormatError(f"expected {n} symbols, got {len(values)}", line=line)
    return np.array(values, dtype=np.uint8)


def parse_matrix_text(text: str) -> GF4Matrix:
    """
    Parse code-file text into a matrix without a rank check

    Args:
        text: Header line 'n k' followed by k rows of n symbols

    Returns:
        The k x n matrix
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise CodeFormatError("empty code file", line=1)
    n, k = _parse_header(lines[0])
    body = lines[1:]
    if len(body) < k:
        raise CodeFormatError(f"expected {k} rows, got {len(body)}", line=len(lines) + 1)
    if len(body) > k:
        raise CodeFormatError(f"expected {k} rows, got {len(body)}", line=k + 2)
    rows = [_parse_row(row.rstrip("\r"), n, line=index + 2) for index, row in enumerate(body)]
    return GF4Matrix(np.vstack(rows))


def parse_code_text(text: str, name: Optional[str] = None) -> LinearCode:
    matrix = parse_matrix_text(text)
    try:
        return LinearCode(matrix, name=name)
    except ValueError as e:
        raise CodeFormatError(f"generator is not full rank: {e}", line=2) from e


def format_matrix(matrix: GF4Matrix) -> str:
    lines = [f"{matrix.cols} {matrix.rows}"]
    lines.extend(" ".join(SYMBOLS[v] for v in row) for row in matrix.data)
    return "\n".join(lines) + "\n"


def format_code(code: LinearCode) -> str:
    return format_matrix(code.generator)


def _read_text(path: Union[str, Path]) -> str:
    with open(path, "rb") as f:
        raw = f.read()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line_start = raw.rfind(b"\n", 0, e.start) + 1
        raise CodeFormatError("file is not valid UTF-8 text", line=raw.count(b"\n", 0, e.start) + 1,
                              column=e.start - line_start + 1) from e
    return text.replace("\r\n", "\n").replace("\r", "\n")


def read_matrix_file(path: Union[str, Path]) -> GF4Matrix:
    return parse_matrix_text(_read_text(path))


def read_code(path: Union[str, Path], name: Optional[str] = None) -> LinearCode:
    """
    Read a code file

    Args:
        path: Path to the code file
        name: Optional label; defaults to the file stem

    Returns:
        LinearCode generated by the file's rows
    """
    text = _read_text(path)
    return parse_code_text(text, name=name or Path(path).stem)


def write_code(code: LinearCode, path: Union[str, Path]) -> str:
    """Write a code file, creating parent directories; returns the path written"""
    directory = os.path.dirname(str(path))
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_code(code))
    return str(path)
