# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled belief-ranking kernel.

Same contract as ``cover_lattice._fixpoint_py.rank_table``; the fixpoint
sweeps run over C arrays, which is what makes exhaustive cover search
cheap.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

__all__ = ["rank_table"]


def rank_table(int n, object goal_mask, object preimage_masks, int n_actions, object post):
    """Steps-to-goal rank for every belief bitmask in ``range(1 << n)``.

    See the pure-Python twin for the full contract; outputs are identical.
    """
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t m = len(preimage_masks)
    cdef Py_ssize_t npost = size * n_actions
    cdef unsigned int goal = goal_mask
    cdef unsigned int full = <unsigned int>(size - 1)
    cdef unsigned int not_goal = full & ~goal

    cdef unsigned int *pres = NULL
    cdef int *cpost = NULL
    cdef int *rank = NULL
    cdef Py_ssize_t i, b
    cdef unsigned int br
    cdef int a, rs, k
    cdef bint changed, safe, all_ok

    pres = <unsigned int *> PyMem_Malloc((m if m else 1) * sizeof(unsigned int))
    cpost = <int *> PyMem_Malloc((npost if npost else 1) * sizeof(int))
    rank = <int *> PyMem_Malloc(size * sizeof(int))
    if pres is NULL or cpost is NULL or rank is NULL:
        PyMem_Free(pres)
        PyMem_Free(cpost)
        PyMem_Free(rank)
        raise MemoryError()
    try:
        for i in range(m):
            pres[i] = preimage_masks[i]
        for i in range(npost):
            cpost[i] = post[i]
        rank[0] = -1
        for b in range(1, size):
            rank[b] = 0 if not (<unsigned int>b & not_goal) else -1
        k = 0
        changed = True
        while changed:
            changed = False
            k += 1
            for b in range(1, size):
                if rank[b] >= 0:
                    continue
                all_ok = True
                for i in range(m):
                    br = <unsigned int>b & pres[i]
                    if br == 0:
                        continue
                    safe = False
                    for a in range(n_actions):
                        rs = rank[<Py_ssize_t>cpost[br * n_actions + a]]
                        if 0 <= rs < k:
                            safe = True
                            break
                    if not safe:
                        all_ok = False
                        break
                if all_ok:
                    rank[b] = k
                    changed = True
        return [rank[b] for b in range(size)]
    finally:
        PyMem_Free(pres)
        PyMem_Free(cpost)
        PyMem_Free(rank)
