"""Pure-Python fallback for the F_p row-reduction kernel.

Bit-for-bit the same results as the compiled psl._fpkernel.
"""

IMPLEMENTATION = "python"


def rref_fp(rows, p):
    """Reduced row echelon form over F_p.

    Returns (new_rows, rank, pivot_cols); zero rows are moved to the bottom.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return [list(r) for r in rows], 0, []
    a = [[x % p for x in row] for row in rows]
    piv_r = 0
    pivots = []
    for c in range(n):
        r = next((i for i in range(piv_r, m) if a[i][c]), -1)
        if r < 0:
            continue
        if r != piv_r:
            a[r], a[piv_r] = a[piv_r], a[r]
        f = pow(a[piv_r][c], p - 2, p)
        prow = a[piv_r]
        for j in range(c, n):
            prow[j] = prow[j] * f % p
        for i in range(m):
            if i == piv_r:
                continue
            f = a[i][c]
            if not f:
                continue
            irow = a[i]
            for j in range(c, n):
                irow[j] = (irow[j] - f * prow[j]) % p
        pivots.append(c)
        piv_r += 1
        if piv_r == m:
            break
    return a, piv_r, pivots


def reduce_fp(vec, rows, pivots, p):
    """Residual of vec after elimination against RREF rows (pivot columns given)."""
    v = [x % p for x in vec]
    for row, c in zip(rows, pivots):
        f = v[c]
        if not f:
            continue
        for j in range(len(v)):
            v[j] = (v[j] - f * row[j]) % p
    return v


def _left_op_nilpotent(w, mult, n, p):
    L = [
        [
            sum(w[i] * mult[(i * n + j) * n + c] for i in range(n) if w[i]) % p
            for c in range(n)
        ]
        for j in range(n)
    ]
    M = L
    steps = 1
    while steps < 2 * n and any(any(row) for row in M):
        M = [
            [sum(M[r][j] * M[j][c] for j in range(n) if M[r][j]) % p for c in range(n)]
            for r in range(n)
        ]
        steps *= 2
    return not any(any(row) for row in M)


def nilpotent_lifts_fp(kbasis, mult_flat, n, p):
    """Vectors v in the row space of kbasis that could lie in the radical,
    one per scalar line, in base-p enumeration order.

    Keeps v when the left-multiplication operators of v and of all basis
    products v*e_i and e_i*v are nilpotent (a necessary condition: the
    radical is an ideal of nilpotent elements).
    """
    k = len(kbasis)
    if k == 0:
        return []
    base = [[x % p for x in row] for row in kbasis]
    mult = [x % p for x in mult_flat]
    out = []
    for code in range(1, p ** k):
        rem = code
        coords = []
        lead = -1
        for t in range(k):
            coords.append(rem % p)
            rem //= p
            if coords[t] and lead < 0:
                lead = t
        if coords[lead] != 1:
            continue
        v = [0] * n
        for t, ct in enumerate(coords):
            if ct:
                brow = base[t]
                for j in range(n):
                    v[j] += ct * brow[j]
        v = [x % p for x in v]
        keep = _left_op_nilpotent(v, mult, n, p)
        if keep:
            for i in range(n):
                right = [
                    sum(v[t] * mult[(t * n + i) * n + j] for t in range(n) if v[t]) % p
                    for j in range(n)
                ]
                if not _left_op_nilpotent(right, mult, n, p):
                    keep = False
                    break
                left = [
                    sum(v[t] * mult[(i * n + t) * n + j] for t in range(n) if v[t]) % p
                    for j in range(n)
                ]
                if not _left_op_nilpotent(left, mult, n, p):
                    keep = False
                    break
        if keep:
            out.append(list(v))
    return out
