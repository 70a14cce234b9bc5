# cython: boundscheck=False, wraparound=False
"""Integer Smith normal form kernel, compiled edition.

Same algorithm as ``_snf_py.snf_int``, step for step: entries stay
Python bigints (exactness first), only loop indices and list plumbing
are compiled.  Certificates are identical to the pure-Python twin.
"""


cdef int _swap_rows(list M, list U, list Ui, Py_ssize_t m, Py_ssize_t x, Py_ssize_t y) except? -2:
    cdef Py_ssize_t k
    M[x], M[y] = M[y], M[x]
    U[x], U[y] = U[y], U[x]
    for k in range(m):
        Ui[k][x], Ui[k][y] = Ui[k][y], Ui[k][x]
    return -1


cdef int _swap_cols(list M, list V, list Vi, Py_ssize_t m, Py_ssize_t n, Py_ssize_t x, Py_ssize_t y) except? -2:
    cdef Py_ssize_t k
    for k in range(m):
        M[k][x], M[k][y] = M[k][y], M[k][x]
    for k in range(n):
        V[k][x], V[k][y] = V[k][y], V[k][x]
    Vi[x], Vi[y] = Vi[y], Vi[x]
    return -1


cdef int _row_sub(list M, list U, list Ui, Py_ssize_t m, Py_ssize_t n, Py_ssize_t x, Py_ssize_t y, object qq) except? -2:
    # row_x -= qq * row_y
    cdef Py_ssize_t k
    cdef list Mx = M[x], My = M[y], Ux = U[x], Uy = U[y], Urow
    for k in range(n):
        if My[k]:
            Mx[k] = Mx[k] - qq * My[k]
    for k in range(m):
        if Uy[k]:
            Ux[k] = Ux[k] - qq * Uy[k]
    for k in range(m):
        Urow = Ui[k]
        if Urow[x]:
            Urow[y] = Urow[y] + qq * Urow[x]
    return 1


cdef int _col_sub(list M, list V, list Vi, Py_ssize_t m, Py_ssize_t n, Py_ssize_t x, Py_ssize_t y, object qq) except? -2:
    # col_x -= qq * col_y
    cdef Py_ssize_t k
    cdef list row, Vix = Vi[x], Viy = Vi[y]
    for k in range(m):
        row = M[k]
        if row[y]:
            row[x] = row[x] - qq * row[y]
    for k in range(n):
        row = V[k]
        if row[y]:
            row[x] = row[x] - qq * row[y]
    for k in range(n):
        if Vix[k]:
            Viy[k] = Viy[k] + qq * Vix[k]
    return 1


def snf_int(Py_ssize_t m, Py_ssize_t n, rows):
    cdef Py_ssize_t i, j, r, c, t, limit, rank, bi, bj
    cdef list M = [list(row) for row in rows]
    cdef list U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    cdef list Ui = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    cdef list V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cdef list Vi = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cdef int det_u = 1, det_v = 1
    cdef list Mi, Urow
    cdef bint dirty, ok
    cdef object a, b, s, best, p, q, rr

    t = 0
    limit = m if m < n else n
    while t < limit:
        bi = -1
        bj = -1
        best = 0
        for i in range(t, m):
            Mi = M[i]
            for j in range(t, n):
                a = Mi[j]
                if a:
                    s = -a if a < 0 else a
                    if bi < 0 or s < best:
                        bi = i
                        bj = j
                        best = s
                        if s == 1:
                            break
            if best == 1:
                break
        if bi < 0:
            break
        if bi != t:
            det_u *= _swap_rows(M, U, Ui, m, bi, t)
        if bj != t:
            det_v *= _swap_cols(M, V, Vi, m, n, bj, t)
        p = M[t][t]

        dirty = False
        for i in range(t + 1, m):
            a = M[i][t]
            if a:
                q, rr = divmod(a, p)
                if q:
                    _row_sub(M, U, Ui, m, n, i, t, q)
                if rr:
                    dirty = True
        if dirty:
            continue
        for j in range(t + 1, n):
            b = M[t][j]
            if b:
                q, rr = divmod(b, p)
                if q:
                    _col_sub(M, V, Vi, m, n, j, t, q)
                if rr:
                    dirty = True
        if dirty:
            continue

        # cross is clear; fold in any row the pivot does not divide yet
        ok = True
        for i in range(t + 1, m):
            Mi = M[i]
            for j in range(t + 1, n):
                if Mi[j] % p:
                    _row_sub(M, U, Ui, m, n, t, i, -1)
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
