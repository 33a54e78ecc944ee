"""Normal form for ideals under basis change and automorphism action.

Each orbit of ideals carries a unique label (e1, e2, e3, e4, e5):

* e1, e2, e3 describe the diagonal after the top-left 2x2 block of the
  Hermite form is brought to elementary-divisor form, p^(e1+e2+e3) over
  p^(e2+e3) over p^e3 (the z-row exponent e3 is intrinsic: it is the index
  of the lattice's intersection with the z-axis);
* e4, e5 are the valuations of the two remaining third-column entries,
  capped at e3 (an entry divisible by p^e3 reduces to zero and is recorded
  with the cap), normalized into the window e5 <= e4 <= e5 + e1.

Two moves adjust the window without leaving the orbit: adding the first row
to the second changes a23 by a13 (the spilled block entry is cleared by a
column move scaled by p^e1), and adding p^e1 times the second row to the
first changes a13 by p^e1 * a23 (cleared by a plain column move).  Only the
asymmetric pair of moves keeps the clearing column operations integral,
which is what pins the window shape.

The direct reduction is cross-checked by an orbit-membership fallback
(``via_orbit=True``) that scans the candidate tuples of the right weight.
"""

from dataclasses import dataclass

from .errors import InvalidTuple, NotAnIdeal, ReductionDiverged
from .lattice import HnfMatrix, is_ideal_hnf, valuation
from . import orbits


@dataclass(frozen=True)
class InvariantTuple:
    """Orbit label; weight e1 + 2*e2 + 3*e3 is the index exponent."""

    e1: int
    e2: int
    e3: int
    e4: int
    e5: int

    def __post_init__(self):
        if min(self.e1, self.e2, self.e3, self.e4, self.e5) < 0:
            raise InvalidTuple("entries must be nonnegative")
        if self.e4 > self.e3 or self.e5 > self.e3:
            raise InvalidTuple("e4 and e5 are capped at e3")
        if not self.e5 <= self.e4 <= self.e5 + self.e1:
            raise InvalidTuple("window e5 <= e4 <= e5 + e1 violated")

    def key(self) -> tuple:
        return (self.e1, self.e2, self.e3, self.e4, self.e5)


def weight(t: InvariantTuple) -> int:
    """Index exponent of the labelled orbit (e4, e5 do not contribute)."""
    return t.e1 + 2 * t.e2 + 3 * t.e3


def tuple_to_matrix(t: InvariantTuple, p: int) -> HnfMatrix:
    """Representative ideal of a label: capped entries are stored as zero."""
    return HnfMatrix(
        p=p,
        n1=t.e1 + t.e2 + t.e3,
        n2=t.e2 + t.e3,
        n3=t.e3,
        a12=0,
        a13=p**t.e4 if t.e4 < t.e3 else 0,
        a23=p**t.e5 if t.e5 < t.e3 else 0,
    )


def enumerate_tuples(n: int) -> list:
    """All labels of weight n, lexicographically ordered."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    found = []
    for e3 in range(n // 3 + 1):
        for e2 in range((n - 3 * e3) // 2 + 1):
            e1 = n - 3 * e3 - 2 * e2
            for e5 in range(e3 + 1):
                for e4 in range(e5, min(e5 + e1, e3) + 1):
                    found.append(InvariantTuple(e1, e2, e3, e4, e5))
    found.sort(key=InvariantTuple.key)
    return found


def parse_tuple_text(text: str) -> InvariantTuple:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 5:
        raise ValueError("tuple text needs exactly five comma-separated integers")
    try:
        values = [int(s) for s in parts]
    except ValueError as exc:
        raise ValueError(f"bad tuple text: {exc}") from None
    return InvariantTuple(*values)


def tuple_text(t: InvariantTuple) -> str:
    return ",".join(str(x) for x in t.key())


def _xgcd(a: int, b: int):
    # returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _swap_block_columns(mat):
    for row in mat:
        row[0], row[1] = row[1], row[0]


def _block_elementary_divisors(mat, p: int, tick):
    """Diagonalize the top-left 2x2 block in place, larger exponent first.

    Row operations act on full rows 0 and 1 so the third column follows
    along; column operations act on columns 0 and 1 only, where the third
    row vanishes.  Unit factors picked up by the third column are dropped
    later (only its valuations are consumed).
    """
    # deterministic initial pivot: minimal valuation, leftmost column then
    # topmost row on ties
    positions = ((0, 0), (1, 0), (0, 1), (1, 1))
    pi, pj = min(positions, key=lambda ij: (valuation(mat[ij[0]][ij[1]], p),
                                            positions.index(ij)))
    if pi == 1:
        mat[0], mat[1] = mat[1], mat[0]
    if pj == 1:
        _swap_block_columns(mat)

    while mat[1][0] != 0 or mat[0][1] != 0:
        tick()
        a, b = mat[0][0], mat[1][0]
        if b != 0:
            g, s, t = _xgcd(a, b)
            row0 = [s * x + t * y for x, y in zip(mat[0], mat[1])]
            row1 = [(a // g) * y - (b // g) * x for x, y in zip(mat[0], mat[1])]
            mat[0], mat[1] = row0, row1
        a, c = mat[0][0], mat[0][1]
        if c != 0:
            g, s, t = _xgcd(a, c)
            for row in mat:
                x, y = row[0], row[1]
                row[0] = s * x + t * y
                row[1] = (a // g) * y - (c // g) * x

    for i in (0, 1):
        if mat[i][i] < 0:
            mat[i] = [-x for x in mat[i]]
    if valuation(mat[0][0], p) < valuation(mat[1][1], p):
        mat[0], mat[1] = mat[1], mat[0]
        _swap_block_columns(mat)


def canonical_invariants(m: HnfMatrix, via_orbit: bool = False, max_n=None) -> InvariantTuple:
    """Orbit label of an ideal.

    The default path runs the direct reduction; ``via_orbit=True`` instead
    identifies the label by orbit membership against the representatives of
    every candidate tuple of the right weight (slow but assumption-free,
    kept as the debugging arbiter).
    """
    if not is_ideal_hnf(m):
        raise NotAnIdeal(f"{m.key()} fails the ideal condition at p={m.p}")
    if via_orbit:
        return _label_by_orbit_scan(m, max_n)

    p = m.p
    limit = 4 * (m.index_exponent + 1)
    ticks = [0]

    def tick():
        ticks[0] += 1
        if ticks[0] > limit:
            raise ReductionDiverged(
                f"reduction exceeded {limit} steps on {m.key()} (p={p})"
            )

    mat = [list(row) for row in m.rows()]
    _block_elementary_divisors(mat, p, tick)

    e3 = m.n3
    n1_new = valuation(mat[0][0], p)
    n2_new = valuation(mat[1][1], p)
    e1 = n1_new - n2_new
    e2 = n2_new - e3
    modulus = p**e3

    def capped_val(entry: int) -> int:
        if modulus == 1:
            return e3
        residue = entry % modulus
        return e3 if residue == 0 else valuation(residue, p)

    f4 = capped_val(mat[0][2])
    f5 = capped_val(mat[1][2])

    # window normalization; each move changes one capped valuation exactly
    while not f5 <= f4 <= f5 + e1:
        tick()
        if f4 < f5:
            # row 0 added to row 1: a23 gains a p^f4 term
            f5 = capped_val(p**f4 + (p**f5 if f5 < e3 else 0))
        else:
            # p^e1 times row 1 added to row 0: a13 gains a p^(e1+f5) term
            f4 = capped_val((p**f4 if f4 < e3 else 0) + p ** (e1 + f5))

    label = InvariantTuple(e1, e2, e3, f4, f5)
    assert weight(label) == m.index_exponent
    return label


def _label_by_orbit_scan(m: HnfMatrix, max_n=None) -> InvariantTuple:
    for t in enumerate_tuples(m.index_exponent):
        if orbits.same_orbit(m, tuple_to_matrix(t, m.p), max_n):
            return t
    raise ReductionDiverged(
        f"{m.key()} matched no normal-form representative (p={m.p})"
    )
