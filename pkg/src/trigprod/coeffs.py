"""Exact Fourier coefficients of the partial products P_n and Q_n.

P_n(z) = prod_{k=1}^n (1 - z^k) and Q_n(z) = prod_{k=1}^n (1 + z^k) are
polynomials of degree N = n(n+1)/2 with integer coefficients.  Coefficient j
of Q_n counts partitions of j into distinct parts each <= n; coefficient j of
P_n is the same count weighted by (-1)^(number of parts).

Coefficients grow like e^{0.2 n} (P) and 2^n n^{-3/2} (Q), so tables hold
Python ints in a numpy object array.  The brute-force oracles at the bottom
of this module enumerate subsets directly and never multiply polynomials, so
they stay independent of the table builder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

import numpy as np

from .errors import DomainError, OracleScaleError, ResourceLimitError

Kind = Literal["P", "Q"]

#: Largest degree N a table may have (N = 2e5 allows n <= 631).
DEFAULT_MAX_DEGREE = 200_000
#: Largest n accepted by the subset-enumeration oracles.
DEFAULT_ORACLE_CAP = 25


def degree(n: int) -> int:
    return n * (n + 1) // 2


@dataclass(frozen=True)
class CoefficientTable:
    """Exact coefficient vector of P_n or Q_n, indexed 0..N.

    ``coeffs`` is a read-only numpy array of Python ints.
    """

    kind: Kind
    n: int
    coeffs: np.ndarray

    @property
    def degree(self) -> int:
        return degree(self.n)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def as_ints(self) -> list[int]:
        return [int(c) for c in self.coeffs]

    def to_float(self) -> np.ndarray:
        """Coefficients as float64 (exact up to rounding; fine below ~1e308)."""
        return np.array([float(c) for c in self.coeffs], dtype=np.float64)

    def check_invariants(self) -> None:
        """Raise AssertionError if a structural invariant fails."""
        c = self.coeffs
        N = self.degree
        assert len(c) == N + 1, "length must be N+1"
        assert c[0] == 1, "constant term must be 1"
        total = sum(c)
        if self.kind == "P":
            assert total == 0, "coefficients of P_n must sum to 0"
            sign = -1 if self.n % 2 else 1
            assert all(c[N - j] == sign * c[j] for j in range(N + 1)), "P_n reversal symmetry"
        else:
            assert total == 2**self.n, "coefficients of Q_n must sum to 2^n"
            assert all(c[j] >= 0 and c[j] == c[N - j] for j in range(N + 1)), "Q_n symmetry"


def _check_size(n: int, max_degree: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if degree(n) > max_degree:
        raise ResourceLimitError(
            f"degree N={degree(n)} for n={n} exceeds the memory cap {max_degree}"
        )


def iter_tables(kind: Kind, n_max: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> Iterator[CoefficientTable]:
    """Yield the tables for n = 1, 2, ..., n_max in order.

    Each step multiplies the previous polynomial by (1 -/+ z^n) with one
    vectorised sweep, so the whole sequence costs the same as its last table.
    """
    if kind not in ("P", "Q"):
        raise DomainError(f"kind must be 'P' or 'Q', got {kind!r}")
    _check_size(n_max, max_degree)
    work = np.empty(degree(n_max) + 1, dtype=object)
    work[:] = 0
    work[0] = 1
    top = 0
    for k in range(1, n_max + 1):
        top += k
        shifted = work[: top + 1 - k].copy()
        if kind == "P":
            work[k : top + 1] -= shifted
        else:
            work[k : top + 1] += shifted
        out = work[: top + 1].copy()
        out.flags.writeable = False
        yield CoefficientTable(kind, k, out)


def _build(kind: Kind, n: int, max_degree: int) -> CoefficientTable:
    _check_size(n, max_degree)
    table = None
    for table in iter_tables(kind, n, max_degree=max_degree):
        pass
    return table


def pn_coefficients(n: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> CoefficientTable:
    """Coefficients of prod_{k=1}^n (1 - z^k)."""
    return _build("P", n, max_degree)


def qn_coefficients(n: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> CoefficientTable:
    """Coefficients of prod_{k=1}^n (1 + z^k)."""
    return _build("Q", n, max_degree)


def coefficients(kind: Kind, n: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> CoefficientTable:
    if kind == "P":
        return pn_coefficients(n, max_degree=max_degree)
    if kind == "Q":
        return qn_coefficients(n, max_degree=max_degree)
    raise DomainError(f"kind must be 'P' or 'Q', got {kind!r}")


def multiply_binomial(table: CoefficientTable) -> CoefficientTable:
    """Return the table for n+1 by multiplying by (1 -/+ z^{n+1})."""
    k = table.n + 1
    old = table.coeffs
    new = np.empty(degree(k) + 1, dtype=object)
    new[:] = 0
    new[: len(old)] = old
    if table.kind == "P":
        new[k:] -= old
    else:
        new[k:] += old
    new.flags.writeable = False
    return CoefficientTable(table.kind, k, new)


# --------------------------------------------------------------------------
# Pentagonal number theorem


def pentagonal_series_prefix(limit: int) -> list[int]:
    """Coefficients 0..limit of sum_k (-1)^k z^{k(3k-1)/2} over all integers k."""
    if limit < 0:
        raise DomainError("limit must be nonnegative")
    out = [0] * (limit + 1)
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            m = kk * (3 * kk - 1) // 2
            if m <= limit:
                out[m] = -1 if kk % 2 else 1
                hit = True
        if not hit:
            break
        k += 1
    return out


def nonzero_count(table: CoefficientTable) -> int:
    return int(sum(1 for c in table.coeffs if c != 0))


def is_unimodal(seq) -> bool:
    """Nondecreasing up to some index, nonincreasing afterwards (non-strict)."""
    i, n = 0, len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i == n - 1


# --------------------------------------------------------------------------
# Brute-force oracles


def _check_oracle(j: int, n: int, cap: int) -> None:
    if n < 1:
        raise DomainError("n must be positive")
    if n > cap:
        raise OracleScaleError(f"oracle limited to n <= {cap}, got n={n}")
    if not 0 <= j <= degree(n):
        raise DomainError(f"j={j} outside 0..{degree(n)}")


def even_odd_distinct_counts_oracle(j: int, n: int, *, cap: int = DEFAULT_ORACLE_CAP) -> tuple[int, int]:
    """Count partitions of j into distinct parts <= n, split by parity of the part count.

    Walks the subset tree of {1..n} from the largest part down, pruning
    branches whose remaining parts cannot reach j.
    """
    _check_oracle(j, n, cap)
    counts = [0, 0]

    def walk(remaining: int, largest: int, parts: int) -> None:
        if remaining == 0:
            counts[parts & 1] += 1
            return
        for part in range(min(largest, remaining), 0, -1):
            if part * (part + 1) // 2 < remaining:
                break
            walk(remaining - part, part - 1, parts + 1)

    walk(j, n, 0)
    return counts[0], counts[1]


def distinct_partition_count_oracle(j: int, n: int, *, cap: int = DEFAULT_ORACLE_CAP) -> int:
    e, o = even_odd_distinct_counts_oracle(j, n, cap=cap)
    return e + o


def subset_sum_histogram(n: int, *, cap: int = DEFAULT_ORACLE_CAP) -> tuple[np.ndarray, np.ndarray]:
    """Enumerate all 2^n subsets of {1..n}; return (even, odd) counts per sum.

    Bulk version of the oracle above, for checking every j at once.
    """
    _check_oracle(0, n, cap)
    sums = np.zeros(1, dtype=np.int32)
    odd = np.zeros(1, dtype=np.bool_)
    for k in range(1, n + 1):
        sums = np.concatenate([sums, sums + k])
        odd = np.concatenate([odd, ~odd])
    size = degree(n) + 1
    even_counts = np.bincount(sums[~odd], minlength=size).astype(np.int64)
    odd_counts = np.bincount(sums[odd], minlength=size).astype(np.int64)
    return even_counts, odd_counts
