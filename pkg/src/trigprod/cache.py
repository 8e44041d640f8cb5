"""Text cache for coefficient tables.

File layout (one file per table)::

    TRIGPROD-COEFFS v1 <P|Q> n=<n> N=<N>
    <coefficient 0>
    ...
    <coefficient N>
"""

from __future__ import annotations

import os
import re
from pathlib import Path

import numpy as np

from .coeffs import CoefficientTable, Kind, degree
from .errors import IntegrityError

ENV_VAR = "TRIGPROD_CACHE_DIR"
MAGIC = "TRIGPROD-COEFFS"
VERSION = "v1"
_HEADER = re.compile(rf"^{MAGIC} (v\d+) ([PQ]) n=(\d+) N=(\d+)$")


def default_cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR) or Path.home() / ".cache" / "trigprod")


def cache_path(kind: Kind, n: int, directory: str | os.PathLike | None = None) -> Path:
    base = Path(directory) if directory is not None else default_cache_dir()
    return base / f"{kind}_{n}.coeffs"


def cache_write(table: CoefficientTable, directory: str | os.PathLike | None = None) -> Path:
    path = cache_path(table.kind, table.n, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{MAGIC} {VERSION} {table.kind} n={table.n} N={table.degree}\n")
        fh.writelines(f"{int(c)}\n" for c in table.coeffs)
    os.replace(tmp, path)
    return path


def cache_read(kind: Kind, n: int, directory: str | os.PathLike | None = None) -> CoefficientTable:
    path = cache_path(kind, n, directory)
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        lines = fh.read().split()
    m = _HEADER.match(header)
    if not m:
        raise IntegrityError(f"{path}: bad header {header!r}")
    version, k, n_file, N_file = m.group(1), m.group(2), int(m.group(3)), int(m.group(4))
    if version != VERSION:
        raise IntegrityError(f"{path}: unsupported version {version}")
    if k != kind or n_file != n:
        raise IntegrityError(f"{path}: header says {k} n={n_file}, expected {kind} n={n}")
    if N_file != degree(n):
        raise IntegrityError(f"{path}: header N={N_file} but n={n} gives N={degree(n)}")
    if len(lines) != N_file + 1:
        raise IntegrityError(f"{path}: count check failed, {len(lines)} coefficients for N={N_file}")
    try:
        values = [int(s) for s in lines]
    except ValueError as exc:
        raise IntegrityError(f"{path}: non-integer entry ({exc})") from None
    if values[0] != 1:
        raise IntegrityError(f"{path}: constant-term check failed (coeffs[0]={values[0]})")
    expected_sum = 0 if kind == "P" else 2**n
    if sum(values) != expected_sum:
        raise IntegrityError(f"{path}: sum-rule check failed (sum={sum(values)}, expected {expected_sum})")
    arr = np.empty(len(values), dtype=object)
    arr[:] = values
    arr.flags.writeable = False
    return CoefficientTable(kind, n, arr)
