"""Hot numeric kernels with two interchangeable backends.

Every kernel exists twice: a numba ``@njit`` version (default when numba is
importable) and a vectorized pure-numpy version.  Set ``NIL22_NO_NUMBA=1`` in
the environment to force the numpy path; the dispatch is decided once at
import time.  ``benchmarks/bench_kernels.py`` times the two backends against
each other and checks they agree bit for bit.

All kernels work in int64.  Callers guard ranges so that no intermediate
value reaches 2**62 (enforced upstream by the lattice module).
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_DISABLED = os.environ.get("NIL22_NO_NUMBA", "0") not in ("", "0")
NUMBA_ENABLED = numba is not None and not _DISABLED


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------

def spf_sieve_numpy(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit (spf[0]=0, spf[1]=1)."""
    spf = np.arange(limit + 1, dtype=np.int64)
    for i in range(2, int(limit**0.5) + 1):
        if spf[i] == i:
            sl = spf[i * i :: i]
            untouched = sl == np.arange(i * i, limit + 1, i, dtype=np.int64)
            sl[untouched] = i
    return spf


def multiplicative_from_spf_numpy(spf: np.ndarray, ppow_values: np.ndarray) -> np.ndarray:
    """values[n] = product of ppow_values[k] over prime powers p^k exactly dividing n.

    Peels one distinct prime per pass, extracting its full exponent with
    masked vector divisions; the number of passes is the largest count of
    distinct prime factors below the limit (7 for 10**6).
    """
    limit = spf.shape[0] - 1
    values = np.ones(limit + 1, dtype=np.int64)
    values[0] = 0
    cur = np.arange(limit + 1, dtype=np.int64)
    cur[:2] = 1
    while True:
        active = np.nonzero(cur > 1)[0]
        if active.size == 0:
            break
        m = cur[active]
        p = spf[m]
        k = np.zeros(active.size, dtype=np.int64)
        while True:
            div = m % p == 0
            if not div.any():
                break
            m[div] //= p[div]
            k[div] += 1
        values[active] *= ppow_values[k]
        cur[active] = m
    return values


def sublattice_rows_numpy(p: int, n: int) -> np.ndarray:
    """All (n1, n2, n3, a12, a13, a23) rows with n1+n2+n3 = n, lexicographic.

    Ranges are 0 <= a12 < p^n2 and 0 <= a13, a23 < p^n3, so each (n1, n2, n3)
    block contributes p^(n2 + 2*n3) rows.
    """
    blocks = []
    for n1 in range(n + 1):
        for n2 in range(n - n1 + 1):
            n3 = n - n1 - n2
            q2 = p**n2
            q3 = p**n3
            size = q2 * q3 * q3
            block = np.empty((size, 6), dtype=np.int64)
            block[:, 0] = n1
            block[:, 1] = n2
            block[:, 2] = n3
            block[:, 3] = np.repeat(np.arange(q2, dtype=np.int64), q3 * q3)
            block[:, 4] = np.tile(np.repeat(np.arange(q3, dtype=np.int64), q3), q2)
            block[:, 5] = np.tile(np.arange(q3, dtype=np.int64), q2 * q3)
            blocks.append(block)
    return np.concatenate(blocks, axis=0)


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

if numba is not None:

    @numba.njit(cache=True)
    def _spf_sieve_jit(limit):  # pragma: no cover - exercised via dispatch
        spf = np.arange(limit + 1).astype(np.int64)
        i = 2
        while i * i <= limit:
            if spf[i] == i:
                for j in range(i * i, limit + 1, i):
                    if spf[j] == j:
                        spf[j] = i
            i += 1
        return spf

    @numba.njit(cache=True)
    def _multiplicative_from_spf_jit(spf, ppow_values):  # pragma: no cover
        limit = spf.shape[0] - 1
        values = np.ones(limit + 1, dtype=np.int64)
        values[0] = 0
        for m in range(2, limit + 1):
            rest = m
            acc = np.int64(1)
            while rest > 1:
                q = spf[rest]
                k = 0
                while rest % q == 0:
                    rest //= q
                    k += 1
                acc *= ppow_values[k]
            values[m] = acc
        return values

    @numba.njit(cache=True)
    def _sublattice_rows_jit(p, n):  # pragma: no cover
        total = 0
        for n1 in range(n + 1):
            for n2 in range(n - n1 + 1):
                n3 = n - n1 - n2
                total += p**n2 * p**n3 * p**n3
        out = np.empty((total, 6), dtype=np.int64)
        row = 0
        for n1 in range(n + 1):
            for n2 in range(n - n1 + 1):
                n3 = n - n1 - n2
                q2 = p**n2
                q3 = p**n3
                for a12 in range(q2):
                    for a13 in range(q3):
                        for a23 in range(q3):
                            out[row, 0] = n1
                            out[row, 1] = n2
                            out[row, 2] = n3
                            out[row, 3] = a12
                            out[row, 4] = a13
                            out[row, 5] = a23
                            row += 1
        return out

    def spf_sieve_numba(limit: int) -> np.ndarray:
        return _spf_sieve_jit(limit)

    def multiplicative_from_spf_numba(spf: np.ndarray, ppow_values: np.ndarray) -> np.ndarray:
        return _multiplicative_from_spf_jit(spf, np.ascontiguousarray(ppow_values))

    def sublattice_rows_numba(p: int, n: int) -> np.ndarray:
        return _sublattice_rows_jit(p, n)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

if NUMBA_ENABLED:
    spf_sieve = spf_sieve_numba
    multiplicative_from_spf = multiplicative_from_spf_numba
    sublattice_rows = sublattice_rows_numba
else:
    spf_sieve = spf_sieve_numpy
    multiplicative_from_spf = multiplicative_from_spf_numpy
    sublattice_rows = sublattice_rows_numpy
