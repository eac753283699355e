# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-reduction kernel for prime fields.

Same contract as psl._fpkernel_py; selected at import by psl._kernel.
Entries are ints in [0, p) and p is an odd or even prime < 2**31.
"""

from libc.stdlib cimport malloc, free


cdef long long inv_mod(long long a, long long p):
    # extended Euclid; a != 0 mod p
    cdef long long t = 0, newt = 1, r = p, newr = a % p
    cdef long long q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


IMPLEMENTATION = "cython"


def rref_fp(rows, long long p):
    """Reduced row echelon form over F_p.

    Returns (new_rows, rank, pivot_cols); zero rows are moved to the bottom.
    """
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return [list(r) for r in rows], 0, []

    cdef long long *a = <long long *> malloc(m * n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c, r, piv_r
    cdef long long f, v
    try:
        for i in range(m):
            row = rows[i]
            for j in range(n):
                a[i * n + j] = row[j] % p

        piv_r = 0
        pivots = []
        for c in range(n):
            r = -1
            for i in range(piv_r, m):
                if a[i * n + c] != 0:
                    r = i
                    break
            if r < 0:
                continue
            if r != piv_r:
                for j in range(n):
                    v = a[r * n + j]
                    a[r * n + j] = a[piv_r * n + j]
                    a[piv_r * n + j] = v
            f = inv_mod(a[piv_r * n + c], p)
            for j in range(c, n):
                a[piv_r * n + j] = (a[piv_r * n + j] * f) % p
            for i in range(m):
                if i == piv_r:
                    continue
                f = a[i * n + c]
                if f == 0:
                    continue
                for j in range(c, n):
                    a[i * n + j] = (a[i * n + j] - f * a[piv_r * n + j]) % p
                    if a[i * n + j] < 0:
                        a[i * n + j] += p
            pivots.append(c)
            piv_r += 1
            if piv_r == m:
                break

        out = [[a[i * n + j] for j in range(n)] for i in range(m)]
        return out, piv_r, pivots
    finally:
        free(a)


def reduce_fp(vec, rows, pivots, long long p):
    """Residual of vec after elimination against RREF rows (pivot columns given)."""
    cdef Py_ssize_t n = len(vec)
    cdef Py_ssize_t k = len(rows)
    cdef long long *v = <long long *> malloc(n * sizeof(long long))
    if v == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c
    cdef long long f
    try:
        for j in range(n):
            v[j] = vec[j] % p
        for i in range(k):
            c = pivots[i]
            f = v[c]
            if f == 0:
                continue
            row = rows[i]
            for j in range(n):
                v[j] = (v[j] - f * <long long> row[j]) % p
                if v[j] < 0:
                    v[j] += p
        return [v[j] for j in range(n)]
    finally:
        free(v)


cdef int _left_op_nilpotent(long long *w, long long *mult, long long *L,
                            long long *M, long long *T, Py_ssize_t n,
                            long long p) noexcept:
    # L[j][c] = sum_i w[i] * mult[i][j][c]; nilpotency by repeated squaring
    cdef Py_ssize_t i, j, r, c, steps
    cdef long long acc
    cdef int zero_all
    for j in range(n):
        for c in range(n):
            acc = 0
            for i in range(n):
                if w[i]:
                    acc += w[i] * mult[(i * n + j) * n + c]
            L[j * n + c] = acc % p
    for i in range(n * n):
        M[i] = L[i]
    steps = 1
    while steps < 2 * n:
        zero_all = 1
        for i in range(n * n):
            if M[i] != 0:
                zero_all = 0
                break
        if zero_all:
            return 1
        for r in range(n):
            for c in range(n):
                acc = 0
                for j in range(n):
                    if M[r * n + j]:
                        acc += M[r * n + j] * M[j * n + c]
                T[r * n + c] = acc % p
        for i in range(n * n):
            M[i] = T[i]
        steps *= 2
    for i in range(n * n):
        if M[i] != 0:
            return 0
    return 1


def nilpotent_lifts_fp(kbasis, mult_flat, Py_ssize_t n, long long p):
    """Vectors v in the row space of kbasis that could lie in the radical,
    one per scalar line, in base-p enumeration order.

    Keeps v when the left-multiplication operators of v and of all basis
    products v*e_i and e_i*v are nilpotent (a necessary condition: the
    radical is an ideal of nilpotent elements).  kbasis is a k x n list of
    rows, mult_flat the flattened structure tensor (index (i*n + j)*n + t).
    """
    cdef Py_ssize_t k = len(kbasis)
    if k == 0:
        return []
    cdef long long total = 1
    cdef Py_ssize_t t
    for t in range(k):
        total *= p

    cdef long long *base = <long long *> malloc(k * n * sizeof(long long))
    cdef long long *mult = <long long *> malloc(n * n * n * sizeof(long long))
    cdef long long *coords = <long long *> malloc(k * sizeof(long long))
    cdef long long *v = <long long *> malloc(n * sizeof(long long))
    cdef long long *w = <long long *> malloc(n * sizeof(long long))
    cdef long long *L = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *M = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *T = <long long *> malloc(n * n * sizeof(long long))
    if (base == NULL or mult == NULL or coords == NULL or v == NULL
            or w == NULL or L == NULL or M == NULL or T == NULL):
        free(base)
        free(mult)
        free(coords)
        free(v)
        free(w)
        free(L)
        free(M)
        free(T)
        raise MemoryError()

    cdef Py_ssize_t i, j, lead
    cdef long long code, rem, acc
    cdef int keep
    out = []
    try:
        for i in range(k):
            row = kbasis[i]
            for j in range(n):
                base[i * n + j] = <long long> row[j] % p
        flat = mult_flat
        for i in range(n * n * n):
            mult[i] = <long long> flat[i] % p

        for code in range(1, total):
            rem = code
            lead = -1
            for t in range(k):
                coords[t] = rem % p
                rem //= p
                if coords[t] != 0 and lead < 0:
                    lead = t
            if coords[lead] != 1:
                continue
            for j in range(n):
                acc = 0
                for t in range(k):
                    if coords[t]:
                        acc += coords[t] * base[t * n + j]
                v[j] = acc % p
            keep = _left_op_nilpotent(v, mult, L, M, T, n, p)
            if keep:
                for i in range(n):
                    # w = v * e_i
                    for j in range(n):
                        acc = 0
                        for t in range(n):
                            if v[t]:
                                acc += v[t] * mult[(t * n + i) * n + j]
                        w[j] = acc % p
                    if not _left_op_nilpotent(w, mult, L, M, T, n, p):
                        keep = 0
                        break
                    # w = e_i * v
                    for j in range(n):
                        acc = 0
                        for t in range(n):
                            if v[t]:
                                acc += v[t] * mult[(i * n + t) * n + j]
                        w[j] = acc % p
                    if not _left_op_nilpotent(w, mult, L, M, T, n, p):
                        keep = 0
                        break
            if keep:
                out.append([v[j] for j in range(n)])
        return out
    finally:
        free(base)
        free(mult)
        free(coords)
        free(v)
        free(w)
        free(L)
        free(M)
        free(T)
