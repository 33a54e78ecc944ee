"""Exact arithmetic for full sublattices of the rank-3 coordinate lattice.

A finite-index sublattice is represented by the unique upper-triangular
Hermite form of any generator matrix (rows are generators): diagonal entries
p^n1, p^n2, p^n3 and off-diagonal entries reduced modulo the diagonal entry
of their column, 0 <= a12 < p^n2 and 0 <= a13, a23 < p^n3.  Uniqueness of the
form makes the field tuple a canonical dictionary key for a lattice.
"""

import math
from dataclasses import dataclass

from . import _kernels
from .errors import NotPPower, SingularMatrix

#: Entries are kept below 2**62 so the int64 kernels cannot overflow;
#: enumeration requests beyond this are rejected outright.
WORD_LIMIT = 2**62


def valuation(x: int, p: int):
    """p-adic valuation; v(0) is +infinity so it compares above any exponent."""
    if x == 0:
        return math.inf
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _p_exponent(x: int, p: int) -> int:
    # x must be exactly a power of p
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    if x != 1:
        raise NotPPower(f"{x * p**e} is not a power of {p}")
    return e


@dataclass(frozen=True)
class HnfMatrix:
    """Hermite form of a full sublattice at the prime p."""

    p: int
    n1: int
    n2: int
    n3: int
    a12: int
    a13: int
    a23: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if min(self.n1, self.n2, self.n3) < 0:
            raise ValueError("diagonal exponents must be nonnegative")
        if not 0 <= self.a12 < self.p**self.n2:
            raise ValueError("a12 out of range")
        q3 = self.p**self.n3
        if not (0 <= self.a13 < q3 and 0 <= self.a23 < q3):
            raise ValueError("a13/a23 out of range")

    def key(self) -> tuple:
        return (self.n1, self.n2, self.n3, self.a12, self.a13, self.a23)

    @property
    def index_exponent(self) -> int:
        return self.n1 + self.n2 + self.n3

    @property
    def index(self) -> int:
        return self.p**self.index_exponent

    def rows(self) -> tuple:
        p = self.p
        return (
            (p**self.n1, self.a12, self.a13),
            (0, p**self.n2, self.a23),
            (0, 0, p**self.n3),
        )


def row_hnf(rows) -> list:
    """Upper-triangular Hermite form of the row span of an integer matrix.

    Accepts any number of rows of length 3 whose span has full rank; raises
    SingularMatrix otherwise.  Pivots are positive and entries above a pivot
    are reduced into [0, pivot).
    """
    work = [[int(x) for x in r] for r in rows]
    if any(len(r) != 3 for r in work):
        raise ValueError("rows must have length 3")
    m = len(work)
    for col in range(3):
        # eliminate below the pivot slot by exact Euclidean row operations
        while True:
            nz = [i for i in range(col, m) if work[i][col] != 0]
            if not nz:
                raise SingularMatrix("rows do not span a finite-index lattice")
            best = min(nz, key=lambda i: abs(work[i][col]))
            if best != col:
                work[col], work[best] = work[best], work[col]
            if work[col][col] < 0:
                work[col] = [-x for x in work[col]]
            pivot = work[col]
            done = True
            for i in range(col + 1, m):
                if work[i][col]:
                    q = work[i][col] // pivot[col]
                    work[i] = [a - q * b for a, b in zip(work[i], pivot)]
                    if work[i][col]:
                        done = False
            if done:
                break
    result = work[:3]
    for col in (1, 2):
        pivot = result[col]
        for i in range(col):
            q = result[i][col] // pivot[col]
            if q:
                result[i] = [a - q * b for a, b in zip(result[i], pivot)]
    return result


def hnf(rows, p: int) -> HnfMatrix:
    """Reduce a generator matrix and type the result as a p-power Hermite form.

    Raises SingularMatrix when the rows are dependent and NotPPower when the
    index is not a power of p.
    """
    reduced = row_hnf(rows)
    n1 = _p_exponent(reduced[0][0], p)
    n2 = _p_exponent(reduced[1][1], p)
    n3 = _p_exponent(reduced[2][2], p)
    return HnfMatrix(
        p=p,
        n1=n1,
        n2=n2,
        n3=n3,
        a12=reduced[0][1],
        a13=reduced[0][2],
        a23=reduced[1][2],
    )


def _check_word_size(p: int, n: int):
    if p**n >= WORD_LIMIT:
        raise ValueError(
            f"p^n = {p}^{n} exceeds the {WORD_LIMIT} entry bound; "
            "refusing rather than risking overflow"
        )


def sublattice_count(p: int, n: int) -> int:
    """Closed form: sum of p^(n2 + 2*n3) over n1+n2+n3 = n."""
    return sum(
        p ** (n2 + 2 * (n - n1 - n2))
        for n1 in range(n + 1)
        for n2 in range(n - n1 + 1)
    )


def ideal_count(p: int, n: int) -> int:
    """Closed form: sum of p^(n2 + n3) over n1+n2+n3 = n with n3 <= n1, n2."""
    total = 0
    for n1 in range(n + 1):
        for n2 in range(n - n1 + 1):
            n3 = n - n1 - n2
            if n3 <= min(n1, n2):
                total += p ** (n2 + n3)
    return total


def enumerate_sublattices(p: int, n: int) -> list:
    """Every index-p^n sublattice, exactly once, lexicographic in the key."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_word_size(p, n)
    rows = _kernels.sublattice_rows(p, n)
    return [
        HnfMatrix(p, r[0], r[1], r[2], r[3], r[4], r[5]) for r in rows.tolist()
    ]


def is_ideal_hnf(m: HnfMatrix) -> bool:
    """Valuation form of the ideal test: n3 <= n1, n2 and v_p(a12) >= n3."""
    return (
        m.n3 <= m.n1
        and m.n3 <= m.n2
        and valuation(m.a12, m.p) >= m.n3
    )


def enumerate_ideals(p: int, n: int) -> list:
    """The ideals among enumerate_sublattices(p, n), in the same order.

    Generated directly: the ideal condition pins n3 <= n1, n2 and restricts
    a12 to multiples of p^n3, so no filtering pass over the full sublattice
    list is needed.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_word_size(p, n)
    out = []
    for n1 in range(n + 1):
        for n2 in range(n - n1 + 1):
            n3 = n - n1 - n2
            if n3 > min(n1, n2):
                continue
            q3 = p**n3
            for a12 in range(0, p**n2, q3):
                for a13 in range(q3):
                    for a23 in range(q3):
                        out.append(HnfMatrix(p, n1, n2, n3, a12, a13, a23))
    return out


def contains(m: HnfMatrix, v) -> bool:
    """Membership of an integer vector in the row span, by back-substitution."""
    r1, r2, r3 = m.rows()
    c1, rem = divmod(v[0], r1[0])
    if rem:
        return False
    c2, rem = divmod(v[1] - c1 * r1[1], r2[1])
    if rem:
        return False
    rem = (v[2] - c1 * r1[2] - c2 * r2[2]) % r3[2]
    return rem == 0


def parse_matrix_text(text: str) -> list:
    """Nine comma-separated row-major integers -> 3x3 row list."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 9:
        raise ValueError("matrix text needs exactly nine comma-separated integers")
    try:
        vals = [int(s) for s in parts]
    except ValueError as exc:
        raise ValueError(f"bad matrix text: {exc}") from None
    return [vals[0:3], vals[3:6], vals[6:9]]


def matrix_text(m: HnfMatrix) -> str:
    """Row-major comma-separated rendering of the Hermite form."""
    return ",".join(str(x) for row in m.rows() for x in row)
