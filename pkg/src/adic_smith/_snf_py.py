"""Integer Smith normal form kernel, pure-Python edition.

``snf_int`` diagonalizes an integer matrix with full certificates:

    U * A * V = D,   U, V unimodular (inverses tracked alongside),
    D diagonal with d_1 | d_2 | ... and nonnegative entries.

Pivot rule: the nonzero entry of minimal absolute value over the whole
trailing block, first in row-major scan order, re-picked on every pass;
scanning stops early on +-1.  The column is cleared before the row, so
row clearing only ever touches the pivot row, and the pivot is forced
to divide the trailing block before the step finishes; the divisibility
chain falls out of that.  Re-picking per pass matters: anchoring on one
pivot per step lets two trailing columns trade ever-larger entries.
Arithmetic is plain Python bigint, so results are exact at any size.
The compiled twin in ``_snf_cy.pyx`` implements the identical algorithm
step for step; tests assert byte-for-byte equal certificates.
"""

from __future__ import annotations


def snf_int(m, n, rows):
    M = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    Ui = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    Vi = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    det_u = 1
    det_v = 1

    def swap_rows(i, j):
        nonlocal det_u
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]
        for r in range(m):
            Ui[r][i], Ui[r][j] = Ui[r][j], Ui[r][i]
        det_u = -det_u

    def swap_cols(i, j):
        nonlocal det_v
        for r in range(m):
            M[r][i], M[r][j] = M[r][j], M[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]
        Vi[i], Vi[j] = Vi[j], Vi[i]
        det_v = -det_v

    def row_sub(i, t, q):
        # row_i -= q * row_t
        Mi, Mt = M[i], M[t]
        for c in range(n):
            if Mt[c]:
                Mi[c] -= q * Mt[c]
        Uot, Uoi = U[t], U[i]
        for c in range(m):
            if Uot[c]:
                Uoi[c] -= q * Uot[c]
        for r in range(m):
            if Ui[r][i]:
                Ui[r][t] += q * Ui[r][i]

    def col_sub(j, t, q):
        # col_j -= q * col_t
        for r in range(m):
            if M[r][t]:
                M[r][j] -= q * M[r][t]
        for r in range(n):
            if V[r][t]:
                V[r][j] -= q * V[r][t]
        Vit, Vij = Vi[t], Vi[j]
        for c in range(n):
            if Vij[c]:
                Vit[c] += q * Vij[c]

    t = 0
    limit = m if m < n else n
    while t < limit:
        bi = bj = -1
        best = 0
        for i in range(t, m):
            Mi = M[i]
            for j in range(t, n):
                a = Mi[j]
                if a:
                    s = -a if a < 0 else a
                    if bi < 0 or s < best:
                        bi, bj, best = i, j, s
                        if s == 1:
                            break
            if best == 1:
                break
        if bi < 0:
            break
        if bi != t:
            swap_rows(bi, t)
        if bj != t:
            swap_cols(bj, t)
        p = M[t][t]

        dirty = False
        for i in range(t + 1, m):
            a = M[i][t]
            if a:
                q, r = divmod(a, p)
                if q:
                    row_sub(i, t, q)
                if r:
                    dirty = True
        if dirty:
            continue
        for j in range(t + 1, n):
            b = M[t][j]
            if b:
                q, r = divmod(b, p)
                if q:
                    col_sub(j, t, q)
                if r:
                    dirty = True
        if dirty:
            continue

        # cross is clear; fold in any row the pivot does not divide yet
        ok = True
        for i in range(t + 1, m):
            Mi = M[i]
            for j in range(t + 1, n):
                if Mi[j] % p:
                    row_sub(t, i, -1)
                    ok = False
                    break
            if not ok:
                break
        if ok:
            t += 1

    rank = t
    for i in range(rank):
        if M[i][i] < 0:
            M[i][i] = -M[i][i]
            Urow = U[i]
            for c in range(m):
                Urow[c] = -Urow[c]
            for r in range(m):
                Ui[r][i] = -Ui[r][i]
            det_u = -det_u

    return M, U, V, Ui, Vi, det_u, det_v
