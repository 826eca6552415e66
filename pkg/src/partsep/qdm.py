"""QDM v1 matrix files and separability report serialization.

QDM v1 is line oriented::

    qdm 1
    qubits N
    <2**N rows of 2**N whitespace-separated tokens like 0.25-0.5i>

Lines starting with ``#`` (after optional leading whitespace) are comments.
Numbers are written in the shortest form that round-trips a double.
"""

from __future__ import annotations

import json
import math
import os
import re
import tempfile
from pathlib import Path

import numpy as np

from .criteria import SeparabilityReport, Verdict
from .errors import ParseError
from .states import DEFAULT_TOL, DensityMatrix, validate_density

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_TOKEN_RE = re.compile(rf"([+-]?{_NUM})([+-])({_NUM})i")


def format_real(x: float) -> str:
    x = float(x)
    if x == 0:
        return "0"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def format_complex(z: complex) -> str:
    re_, im = z.real, z.imag
    sign = "-" if im < 0 else "+"
    return f"{format_real(re_)}{sign}{format_real(abs(im))}i"


def parse_complex(token: str, line: int = 1, column: int = 1) -> complex:
    m = _TOKEN_RE.fullmatch(token)
    if not m:
        raise ParseError(f"malformed complex number {token!r}", line, column)
    re_, sign, im = m.groups()
    imag = float(im)
    return complex(float(re_), -imag if sign == "-" else imag)


def dumps_matrix(mat: np.ndarray) -> str:
    mat = np.asarray(mat)
    n = mat.shape[0].bit_length() - 1
    lines = ["qdm 1", f"qubits {n}"]
    lines += [" ".join(format_complex(z) for z in row) for row in mat]
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _tokens(raw: str):
    for m in re.finditer(r"\S+", raw):
        yield m.start() + 1, m.group()


def loads_matrix(text: str) -> np.ndarray:
    """Parse QDM text into a complex matrix (no density checks)."""
    lines = _content_lines(text)
    try:
        lineno, raw = next(lines)
    except StopIteration:
        raise ParseError("empty file", 1) from None
    if raw.split() != ["qdm", "1"]:
        raise ParseError(f"expected header 'qdm 1', got {raw.strip()!r}", lineno)
    try:
        lineno, raw = next(lines)
    except StopIteration:
        raise ParseError("missing 'qubits N' line", lineno + 1) from None
    parts = raw.split()
    if len(parts) != 2 or parts[0] != "qubits" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise ParseError(f"expected 'qubits N' with N >= 1, got {raw.strip()!r}", lineno)
    n = int(parts[1])
    if n > 14:
        raise ParseError(f"{n} qubits is too large for a dense text matrix", lineno)
    dim = 2 ** n

    rows = []
    for lineno, raw in lines:
        if len(rows) == dim:
            raise ParseError(f"unexpected data after {dim} rows", lineno)
        row = [parse_complex(tok, lineno, col) for col, tok in _tokens(raw)]
        if len(row) != dim:
            raise ParseError(f"expected {dim} entries, found {len(row)}", lineno)
        rows.append(row)
    if len(rows) != dim:
        raise ParseError(f"expected {dim} data rows, found {len(rows)}", lineno + 1)
    mat = np.array(rows, dtype=np.complex128)
    if not np.all(np.isfinite(mat)):
        raise ParseError("non-finite entry", lineno)
    return mat


def write_atomic(path, text: str) -> None:
    """Write ``text`` so ``path`` is either untouched or complete."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_matrix(rho: DensityMatrix, path) -> None:
    write_atomic(path, dumps_matrix(rho.mat))


def load_matrix(path, tol: float = DEFAULT_TOL) -> DensityMatrix:
    text = Path(path).read_text(encoding="utf-8")
    return validate_density(loads_matrix(text), tol)


# -- reports ----------------------------------------------------------------------

def _finite(x: float) -> float:
    return x if math.isfinite(x) else float("nan")


def verdict_line(v: Verdict) -> str:
    return f"{v.partition.label()}: {v.kind.name} (min PT eig {format_real(v.min_pt_eigenvalue)})"


def verdict_dict(v: Verdict) -> dict:
    return {
        "partition": v.partition.label(),
        "min_pt_eigenvalue": _finite(v.min_pt_eigenvalue),
        "reduced_separable": v.reduced_separable,
        "verdict": v.kind.value,
    }


def report_dict(report: SeparabilityReport) -> dict:
    return {
        "num_qubits": report.num_qubits,
        "tolerance": report.tolerance,
        "partitions": [verdict_dict(v) for v in report.verdicts],
        "entangled": report.entangled,
    }


def write_report(report: SeparabilityReport, format: str = "text") -> str:
    if format == "json":
        return json.dumps(report_dict(report), indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = [verdict_line(v) for v in report.verdicts]
    lines.append(f"entangled: {'yes' if report.entangled else 'not detected'}")
    return "\n".join(lines) + "\n"
