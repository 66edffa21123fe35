"""Symmetric matrices over Z2: congruence, normal form, classification.

Rows are bit-packed Python ints (bit j of ``rows[i]`` is entry (i, j)), the
same representation used for all GF(2) elimination in this package.  A
symmetric matrix is congruence-equivalent to exactly one of

    I_r (+) 0                          if it has a non-zero diagonal entry,
    G_{r/2} (+) 0                      if its diagonal vanishes,

where G_m stacks m blocks of [[0,1],[1,0]] and r is the GF(2) rank, so the
pair (rank, diag flag) classifies symmetric forms completely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NotSymmetric, SingularP


def _bit(row: int, j: int) -> int:
    return (row >> j) & 1


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


@dataclass(frozen=True)
class Z2SymMatrix:
    """Symmetric n x n matrix over Z2 with bit-packed rows."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise DimensionMismatch(f"{len(self.rows)} rows for dimension {self.n}")
        mask = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~mask:
                raise DimensionMismatch(f"row {i} has bits beyond column {self.n - 1}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if _bit(self.rows[i], j) != _bit(self.rows[j], i):
                    raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")

    @classmethod
    def from_lists(cls, entries) -> "Z2SymMatrix":
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise DimensionMismatch("matrix is not square")
            rows.append(sum((int(x) & 1) << j for j, x in enumerate(row)))
        return cls(n, tuple(rows))

    def to_lists(self) -> list[list[int]]:
        return [[_bit(r, j) for j in range(self.n)] for r in self.rows]

    def entry(self, i: int, j: int) -> int:
        return _bit(self.rows[i], j)

    def diag_flag(self) -> int:
        return 1 if any(_bit(self.rows[i], i) for i in range(self.n)) else 0

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)


def gf2_rank(rows: list[int], n_cols: int) -> int:
    work = list(rows)
    rank = 0
    pivot_row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(pivot_row, len(work)):
            if _bit(work[r], col):
                pivot = r
                break
        if pivot is None:
            continue
        work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        for r in range(len(work)):
            if r != pivot_row and _bit(work[r], col):
                work[r] ^= work[pivot_row]
        rank += 1
        pivot_row += 1
    return rank


def gf2_invertible(rows: list[int], n: int) -> bool:
    return gf2_rank(rows, n) == n


def mat_mul(a: list[int], b: list[int], n: int) -> list[int]:
    """Product of two GF(2) matrices in bit-packed row form."""
    out = []
    for i in range(n):
        acc = 0
        r = a[i]
        j = 0
        while r:
            if r & 1:
                acc ^= b[j]
            r >>= 1
            j += 1
        out.append(acc)
    return out


def transpose(rows: list[int], n: int) -> list[int]:
    out = [0] * n
    for i in range(n):
        r = rows[i]
        for j in range(n):
            if (r >> j) & 1:
                out[j] |= 1 << i
    return out


def congruence_apply(p_rows: list[int], a: Z2SymMatrix) -> Z2SymMatrix:
    """Compute P A P^T over Z2.  P must be invertible and of matching size."""
    n = a.n
    if len(p_rows) != n:
        raise DimensionMismatch(f"P has {len(p_rows)} rows, A has dimension {n}")
    mask = (1 << n) - 1
    if any(r & ~mask for r in p_rows):
        raise DimensionMismatch("P has bits beyond the matrix dimension")
    if not gf2_invertible(p_rows, n):
        raise SingularP("P is singular over Z2")
    pa = mat_mul(p_rows, list(a.rows), n)
    # (P A P^T)_{ij} = <(PA)_i, P_j>
    rows = []
    for i in range(n):
        acc = 0
        for j in range(n):
            if _parity(pa[i] & p_rows[j]):
                acc |= 1 << j
        rows.append(acc)
    return Z2SymMatrix(n, tuple(rows))


class _Worker:
    """Mutable symmetric congruence state: M = P A P^T throughout."""

    def __init__(self, a: Z2SymMatrix):
        self.n = a.n
        self.m = list(a.rows)
        self.p = [1 << i for i in range(a.n)]

    def swap(self, i: int, j: int) -> None:
        if i == j:
            return
        self.m[i], self.m[j] = self.m[j], self.m[i]
        for r in range(self.n):
            bi, bj = _bit(self.m[r], i), _bit(self.m[r], j)
            if bi != bj:
                self.m[r] ^= (1 << i) | (1 << j)
        self.p[i], self.p[j] = self.p[j], self.p[i]

    def add(self, src: int, dst: int) -> None:
        """Row dst += row src, and the same on columns."""
        self.m[dst] ^= self.m[src]
        for r in range(self.n):
            if _bit(self.m[r], src):
                self.m[r] ^= 1 << dst
        self.p[dst] ^= self.p[src]


# Explicit 3x3 congruence taking (1) (+) [[0,1],[1,0]] to the identity.
P_ONE_PLUS_G = [
    [1, 1, 0],
    [1, 0, 1],
    [1, 1, 1],
]


def normal_form(a: Z2SymMatrix) -> tuple[list[int], Z2SymMatrix]:
    """Symmetric Gauss over Z2.

    Returns (P, canonical) with canonical = P A P^T.  The canonical form is
    I_r (+) 0 when the diagonal of A is non-zero and G_{r/2} (+) 0 when it
    vanishes.  Pivoting prefers a non-zero diagonal entry; failing that, an
    adjacent off-diagonal pair is manufactured by a row-and-column addition
    before the 2x2 block is split off.
    """
    w = _Worker(a)
    n = a.n
    p = 0
    identity_blocks = 0
    g_blocks = 0
    while p < n:
        diag_pivot = None
        for i in range(p, n):
            if _bit(w.m[i], i):
                diag_pivot = i
                break
        if diag_pivot is not None:
            w.swap(diag_pivot, p)
            for r in range(n):
                if r != p and _bit(w.m[r], p):
                    w.add(p, r)
            identity_blocks += 1
            p += 1
            continue
        pair = None
        for i in range(p, n - 1):
            if _bit(w.m[i], i + 1):
                pair = (i, i + 1)
                break
        if pair is None:
            # No adjacent pair: take any non-zero entry and manufacture one
            # by adding row (and column) i to row (and column) j-1.  The
            # entry (j-1, j) was zero, so it becomes one.
            found = None
            for i in range(p, n):
                row = w.m[i] >> p
                if row:
                    j = p + (row & -row).bit_length() - 1
                    found = (i, j) if i < j else (j, i)
                    break
            if found is None:
                break
            i, j = found
            w.add(i, j - 1)
            pair = (j - 1, j)
        i, j = pair
        w.swap(i, p)
        w.swap(j, p + 1)
        for r in range(n):
            if r in (p, p + 1):
                continue
            if _bit(w.m[r], p):
                w.add(p + 1, r)
            if _bit(w.m[r], p + 1):
                w.add(p, r)
        g_blocks += 1
        p += 2

    # Fully reduce: with at least one identity block present, each
    # [[0,1],[1,0]] block merges into identity blocks via the explicit
    # 3x3 transformation.
    while identity_blocks >= 1 and g_blocks >= 1:
        base = identity_blocks - 1  # last identity index, G block follows
        idx = [base, base + 1, base + 2]
        e = [1 << i for i in range(n)]
        for r3, row3 in enumerate(P_ONE_PLUS_G):
            acc = 0
            for c3, v in enumerate(row3):
                if v:
                    acc ^= 1 << idx[c3]
            e[idx[r3]] = acc
        w.p = mat_mul(e, w.p, n)
        w.m = _apply_congruence(e, w.m, n)
        identity_blocks += 2
        g_blocks -= 1

    return w.p, Z2SymMatrix(n, tuple(w.m))


def _apply_congruence(e: list[int], m: list[int], n: int) -> list[int]:
    em = mat_mul(e, m, n)
    out = []
    for i in range(n):
        acc = 0
        for j in range(n):
            if _parity(em[i] & e[j]):
                acc |= 1 << j
        out.append(acc)
    return out


def classify(a: Z2SymMatrix) -> tuple[int, int]:
    """(rank over Z2, diag flag) of a symmetric matrix.

    The diag flag is read off the normal form, where it equals the flag of
    the input (the quadratic functional x -> x^T A x is congruence
    invariant over Z2).
    """
    _, canonical = normal_form(a)
    rank = gf2_rank(list(canonical.rows), a.n)
    return rank, canonical.diag_flag()


def parse_matrix(text: str) -> Z2SymMatrix:
    """Parse "1,0;0,1"-style row strings into a symmetric Z2 matrix."""
    rows = []
    for part in text.strip().split(";"):
        rows.append([int(x) for x in part.replace(" ", "").split(",") if x != ""])
    return Z2SymMatrix.from_lists(rows)
