"""Heisenberg Lie ring structure and its automorphisms acting on lattices.

The ring has basis (x, y, z) with [x, y] = z and every other basis bracket
zero; bilinearity gives [u, v] = (0, 0, u1*v2 - u2*v1).  Its automorphisms
are exactly the matrices

    ( alpha  * )
    (  0   det(alpha) )        alpha a 2x2 block invertible at p,

acting on row vectors from the right.  A finite generating list for the
action modulo p^n suffices for orbit computations: a lattice of index p^n
contains p^n times the full lattice, so two automorphisms congruent modulo
p^n move it identically.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidAutomorphism
from .lattice import HnfMatrix, contains, hnf

#: Basis vectors x, y, z.
BASIS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

#: Nonzero structure constants on the basis: [x, y] = z (index pairs -> vector).
STRUCTURE = {(0, 1): (0, 0, 1), (1, 0): (0, 0, -1)}


def bracket(u, v) -> tuple:
    """Lie bracket (0, 0, u1*v2 - u2*v1)."""
    return (0, 0, u[0] * v[1] - u[1] * v[0])


def _vec_mat(v, matrix) -> tuple:
    return tuple(
        v[0] * matrix[0][j] + v[1] * matrix[1][j] + v[2] * matrix[2][j]
        for j in range(3)
    )


@dataclass(frozen=True)
class AutElement:
    """Integer matrix of automorphism shape, acting on the right at prime p."""

    matrix: tuple
    p: int

    def __post_init__(self):
        if not is_automorphism_shape(self.matrix, self.p):
            raise InvalidAutomorphism(f"not an automorphism at p={self.p}: {self.matrix}")


def _as_rows(matrix) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in matrix)


def is_automorphism_shape(matrix, p: int) -> bool:
    """Shape test: zero bottom-left, det(alpha) in the corner and a unit at p,
    and the bracket-preservation identity on all basis pairs."""
    rows = _as_rows(matrix)
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        return False
    det_alpha = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if rows[2][0] != 0 or rows[2][1] != 0 or rows[2][2] != det_alpha:
        return False
    if det_alpha % p == 0:
        return False
    for i in range(3):
        for j in range(3):
            lhs = bracket(rows[i], rows[j])
            rhs = _vec_mat(bracket(BASIS[i], BASIS[j]), rows)
            if lhs != rhs:
                return False
    return True


def _multiplicative_order(g: int, modulus: int) -> int:
    k, acc = 1, g % modulus
    while acc != 1:
        acc = acc * g % modulus
        k += 1
    return k


def _totient_of_prime_power(p: int, e: int) -> int:
    return p ** (e - 1) * (p - 1)


@lru_cache(maxsize=None)
def _primitive_root(p: int, e: int) -> int:
    """Smallest primitive root modulo p^e (p odd), by exhaustive search."""
    modulus = p**e
    target = _totient_of_prime_power(p, e)
    for g in range(2, modulus):
        if g % p and _multiplicative_order(g, modulus) == target:
            return g
    raise ArithmeticError(f"no primitive root modulo {p}^{e}")


def _element(alpha, v, p: int) -> AutElement:
    (a, b), (c, d) = alpha
    det = a * d - b * c
    return AutElement(
        matrix=((a, b, v[0]), (c, d, v[1]), (0, 0, det)),
        p=p,
    )


@lru_cache(maxsize=None)
def aut_generators(p: int, n: int) -> tuple:
    """Finite list whose images generate the automorphism action modulo p^n.

    Transvections and diagonal unit matrices generate the invertible 2x2
    block over a local ring; z-translations fill in the free column.  The
    list is deliberately redundant (both diagonal positions, plus a sign
    flip): correctness margin is worth a constant factor in orbit search.
    """
    identity = ((1, 0), (0, 1))
    gens = [
        _element(((1, 1), (0, 1)), (0, 0), p),
        _element(((1, 0), (1, 1)), (0, 0), p),
    ]
    if p == 2:
        units = [5, -1]
    else:
        units = [_primitive_root(p, max(n, 1))]
    for g in units:
        gens.append(_element(((g, 0), (0, 1)), (0, 0), p))
        gens.append(_element(((1, 0), (0, g)), (0, 0), p))
    gens.append(_element(((-1, 0), (0, 1)), (0, 0), p))
    gens.append(_element(identity, (1, 0), p))
    gens.append(_element(identity, (0, 1), p))
    return tuple(gens)


def is_ideal_bracket(m: HnfMatrix) -> bool:
    """Closure oracle: [b, r] stays in the lattice for all basis b and rows r.

    Bilinearity makes the finite check over basis vectors and generators
    sufficient for closure under bracketing with the whole ring.
    """
    gens = m.rows()
    return all(contains(m, bracket(b, r)) for b in BASIS for r in gens)


def apply_aut(m: HnfMatrix, aut: AutElement) -> HnfMatrix:
    """Right action: Hermite form of the generator rows times the matrix.

    The image rows are augmented with p^n times the standard basis before
    reduction; this realizes the lattice spanned over the p-local integers
    (det(alpha)^2 is a unit there but not +-1 over the plain integers).
    """
    if aut.p != m.p or not is_automorphism_shape(aut.matrix, aut.p):
        raise InvalidAutomorphism("action requires an automorphism at the same prime")
    q = m.p**m.index_exponent
    stacked = [list(_vec_mat(r, aut.matrix)) for r in m.rows()]
    stacked += [[q, 0, 0], [0, q, 0], [0, 0, q]]
    image = hnf(stacked, m.p)
    assert image.index_exponent == m.index_exponent
    return image
