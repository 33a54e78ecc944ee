"""Brute-force isomorphism-class counting: orbit partition of the ideals.

Ideals of index p^n fall into orbits under the automorphism action; each
orbit is one isomorphism class of order-p^n groups in the class under count.
The partition is computed by breadth-first search from each not-yet-visited
ideal, expanding with the finite generator list.  Determinism: seeds are
taken in enumeration order, each cell is sorted, and the representative is
the lexicographically least key, so output is reproducible bit for bit.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, IncomparableLattices, NotAnIdeal
from .heisenberg import apply_aut, aut_generators
from .lattice import HnfMatrix, enumerate_ideals, ideal_count

#: Largest index exponent computed without an explicit override, per prime.
DEFAULT_MAX_N = {2: 6, 3: 5}
FALLBACK_MAX_N = 4


def default_budget(p: int) -> int:
    return DEFAULT_MAX_N.get(p, FALLBACK_MAX_N)


@dataclass(frozen=True)
class OrbitPartition:
    """Aut-orbit cells of the ideals of index p^n, seeds in enumeration order."""

    p: int
    n: int
    orbits: tuple

    @property
    def representatives(self) -> tuple:
        return tuple(cell[0] for cell in self.orbits)

    def cell_of(self, m: HnfMatrix) -> int:
        """Index of the cell containing the given ideal."""
        key = m.key()
        for i, cell in enumerate(self.orbits):
            if any(member.key() == key for member in cell):
                return i
        raise NotAnIdeal(f"{key} is not among the ideals of index {self.p}^{self.n}")


@lru_cache(maxsize=None)
def orbit_partition(p: int, n: int, max_n=None) -> OrbitPartition:
    """Partition the ideals of index p^n into orbits by generator BFS.

    Refuses (BudgetExceeded) when n is beyond the configured budget; pass
    max_n explicitly to raise it.
    """
    allowed = max_n if max_n is not None else default_budget(p)
    if n > allowed:
        raise BudgetExceeded(p, n, allowed, ideal_count(p, n))
    ideals = enumerate_ideals(p, n)
    generators = aut_generators(p, n)
    known = {m.key() for m in ideals}
    visited = set()
    cells = []
    for seed in ideals:
        if seed.key() in visited:
            continue
        visited.add(seed.key())
        queue = deque([seed])
        members = [seed]
        while queue:
            current = queue.popleft()
            for gen in generators:
                image = apply_aut(current, gen)
                key = image.key()
                if key in visited:
                    continue
                assert key in known  # the action permutes the ideal set
                visited.add(key)
                queue.append(image)
                members.append(image)
        cells.append(tuple(sorted(members, key=HnfMatrix.key)))
    return OrbitPartition(p=p, n=n, orbits=tuple(cells))


def count_isoclasses(p: int, n: int, max_n=None) -> int:
    """Number of orbits = number of isomorphism classes at order p^n."""
    return len(orbit_partition(p, n, max_n).orbits)


def same_orbit(m1: HnfMatrix, m2: HnfMatrix, max_n=None) -> bool:
    """Whether two ideals of equal index lie in the same orbit."""
    if m1.p != m2.p or m1.index_exponent != m2.index_exponent:
        raise IncomparableLattices(
            f"cannot compare index {m1.p}^{m1.index_exponent} "
            f"with {m2.p}^{m2.index_exponent}"
        )
    partition = orbit_partition(m1.p, m1.index_exponent, max_n)
    lookup = {}
    for i, cell in enumerate(partition.orbits):
        for member in cell:
            lookup[member.key()] = i
    try:
        return lookup[m1.key()] == lookup[m2.key()]
    except KeyError as missing:
        raise NotAnIdeal(f"{missing.args[0]} is not an ideal") from None
