"""Dense GF(2) linear algebra on integer-bitset rows.

Rows are stored as Python ints (bit j = column j), which gives word-level
XOR elimination for free.  Matrices here are test oracles and verification
tools; the production encoder never materializes them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, OutOfRange, RankDeficient, SizeOverflow

MAX_KRON_EXPONENT = 20
MAX_THEOREM_EXPONENT = 12


def _bits_to_int(bits) -> int:
    bits = np.asarray(bits, dtype=np.uint8)
    packed = np.packbits(bits, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _int_to_bits(value: int, n: int) -> np.ndarray:
    raw = value.to_bytes((n + 7) // 8 or 1, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n]


class BitMatrix:
    """Matrix over GF(2) with one int bitset per row."""

    __slots__ = ("rows", "cols", "row_ints")

    def __init__(self, rows: int, cols: int, row_ints: list[int]):
        if rows < 1 or cols < 1:
            raise DimensionMismatch(f"matrix must be at least 1x1, got {rows}x{cols}")
        if len(row_ints) != rows:
            raise DimensionMismatch(f"expected {rows} rows, got {len(row_ints)}")
        mask = (1 << cols) - 1
        self.rows = rows
        self.cols = cols
        self.row_ints = [int(r) & mask for r in row_ints]

    @classmethod
    def from_dense(cls, arr) -> "BitMatrix":
        arr = np.asarray(arr, dtype=np.uint8)
        if arr.ndim != 2:
            raise DimensionMismatch("expected a 2-D bit array")
        return cls(arr.shape[0], arr.shape[1], [_bits_to_int(row) for row in arr])

    @classmethod
    def identity(cls, k: int) -> "BitMatrix":
        return cls(k, k, [1 << i for i in range(k)])

    @classmethod
    def permutation(cls, perm) -> "BitMatrix":
        perm = list(perm)
        return cls(len(perm), len(perm), [1 << p for p in perm])

    def to_dense(self) -> np.ndarray:
        return np.stack([_int_to_bits(r, self.cols) for r in self.row_ints])

    def entry(self, i: int, j: int) -> int:
        return (self.row_ints[i] >> j) & 1

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.cols):
            cols.append(_bits_to_int([self.entry(i, j) for i in range(self.rows)]))
        return BitMatrix(self.cols, self.rows, cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.row_ints == other.row_ints
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def kron_power(n: int) -> BitMatrix:
    """n-th Kronecker power of [[1,0],[1,1]]; the 2^n x 2^n butterfly kernel."""
    if n < 0:
        raise OutOfRange(f"exponent must be nonnegative, got {n}")
    if n > MAX_KRON_EXPONENT:
        raise SizeOverflow(f"refusing to materialize a 2^{n} square matrix")
    rows = [1]
    width = 1
    for _ in range(n):
        rows = rows + [r | (r << width) for r in rows]
        width *= 2
    return BitMatrix(width, width, rows)


def bit_reversal_perm(n: int) -> np.ndarray:
    """Permutation sending index i to the reversal of its n-bit binary string."""
    if n < 0:
        raise OutOfRange(f"exponent must be nonnegative, got {n}")
    if n > MAX_KRON_EXPONENT:
        raise SizeOverflow(f"refusing to build a 2^{n} permutation")
    size = 1 << n
    perm = np.zeros(size, dtype=np.int64)
    for i in range(size):
        r = 0
        for b in range(n):
            r = (r << 1) | ((i >> b) & 1)
        perm[i] = r
    return perm


def vec_mat_mul(v, m: BitMatrix) -> np.ndarray:
    """Row vector times matrix over GF(2)."""
    v = np.asarray(v, dtype=np.uint8)
    if v.ndim != 1 or v.shape[0] != m.rows:
        raise DimensionMismatch(f"vector length {v.shape} does not match {m.rows} rows")
    acc = 0
    for i in np.nonzero(v)[0]:
        acc ^= m.row_ints[i]
    return _int_to_bits(acc, m.cols)


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.cols} cols vs {b.rows} rows")
    out = []
    for r in a.row_ints:
        acc = 0
        while r:
            low = r & -r
            acc ^= b.row_ints[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return BitMatrix(a.rows, b.cols, out)


def rank(m: BitMatrix) -> int:
    """Row rank over GF(2) by Gaussian elimination."""
    return _rank_of_ints(list(m.row_ints), m.cols)


def _rank_of_ints(work: list[int], cols: int) -> int:
    r = 0
    for col in range(cols):
        bit = 1 << col
        pivot = None
        for i in range(r, len(work)):
            if work[i] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and (work[i] & bit):
                work[i] ^= work[r]
        r += 1
        if r == len(work):
            break
    return r


def solve_left(a: BitMatrix, y) -> np.ndarray:
    """Solve (x_1..x_K) * A = (y_1..y_K) where each x_i, y_i is an L-bit block.

    ``y`` is a K x L bit grid whose row c equals the XOR of the x-rows
    selected by column c of A.  Raises RankDeficient when A is singular.
    The returned grid satisfies the system exactly (residual re-checked).
    """
    if a.rows != a.cols:
        raise DimensionMismatch(f"need a square system, got {a.rows}x{a.cols}")
    y = np.atleast_2d(np.asarray(y, dtype=np.uint8))
    k = a.rows
    if y.shape[0] != k:
        raise DimensionMismatch(f"expected {k} right-hand rows, got {y.shape[0]}")
    width = y.shape[1]

    # Row c of y pairs with column c of A, so eliminate on A^T with the
    # y-rows carried in the high bits of each augmented row.  Full
    # Gauss-Jordan leaves the identity on the left, so row i of the high
    # part is x_i directly.
    at = a.transpose()
    aug = [at.row_ints[i] | (_bits_to_int(y[i]) << k) for i in range(k)]
    for col in range(k):
        bit = 1 << col
        pivot = None
        for i in range(col, k):
            if aug[i] & bit:
                pivot = i
                break
        if pivot is None:
            raise RankDeficient("system matrix is singular over GF(2)")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for i in range(k):
            if i != col and (aug[i] & bit):
                aug[i] ^= aug[col]

    x = np.zeros((k, width), dtype=np.uint8)
    for i in range(k):
        x[i] = _int_to_bits(aug[i] >> k, width)

    for c in range(k):
        acc = np.zeros(width, dtype=np.uint8)
        sel = at.row_ints[c]
        for i in range(k):
            if (sel >> i) & 1:
                acc ^= x[i]
        if not np.array_equal(acc, y[c]):
            raise RankDeficient("solution residual is nonzero")
    return x


def band_submatrix(n: int, i0: int, k: int) -> BitMatrix:
    """K consecutive rows (offset i0) of the first K columns of kron_power(n)."""
    size = 1 << n
    if not 1 <= k < size:
        raise OutOfRange(f"need 1 <= K < {size}, got {k}")
    if not 0 <= i0 <= size - k:
        raise OutOfRange(f"need 0 <= i0 <= {size - k}, got {i0}")
    full = kron_power(n)
    mask = (1 << k) - 1
    return BitMatrix(k, k, [full.row_ints[i0 + i] & mask for i in range(k)])


@dataclass
class BandTheoremReport:
    """Exhaustive full-rank sweep over all band submatrices of kron_power(n).

    ``failures`` lists (K, i0) pairs with K the 1-based band size and i0 the
    0-based row offset; JSON output keeps that convention.
    """

    n: int
    checks: int = 0
    failures: list[tuple[int, int]] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "checks": self.checks,
            "failures": [[k, i0] for k, i0 in self.failures],
        }


def verify_band_theorem(n: int) -> BandTheoremReport:
    """Check that every band submatrix of kron_power(n) has full rank."""
    if not 1 <= n <= MAX_THEOREM_EXPONENT:
        raise OutOfRange(f"need 1 <= n <= {MAX_THEOREM_EXPONENT}, got {n}")
    size = 1 << n
    full = kron_power(n)
    report = BandTheoremReport(n=n)
    for k in range(1, size):
        mask = (1 << k) - 1
        for i0 in range(size - k + 1):
            sub = [full.row_ints[i0 + i] & mask for i in range(k)]
            report.checks += 1
            if _rank_of_ints(sub, k) < k:
                report.failures.append((k, i0))
    return report
