"""Dense exact matrices over the package rings, with certified normal forms.

The central object is ``smith_normal_form``: for A over a Euclidean ring
it returns U, V, their tracked inverses, and the diagonal D with

    U * A * V = D,    d_1 | d_2 | ... ,   d_i canonical associates.

Unimodularity is certified by the carried inverses (U * U_inv = I is an
exact identity, checked in tests), plus an independent fraction-free
determinant.  ``solve_linear`` and ``kernel_basis`` are derived from the
certificate; both are verified by substitution wherever they are used.

Matrices store raw ring payloads row-major; integer matrices dispatch to
the dedicated kernel in ``_snf`` (compiled when built, pure Python
otherwise), everything else goes through the generic ring-op path with
the same pivot rule: minimal euclidean size, first in row-major order.
"""

from __future__ import annotations

from adic_smith import _snf
from adic_smith.rings import IntegerRing, Ring


class Matrix:
    __slots__ = ("ring", "m", "n", "rows")

    def __init__(self, ring: Ring, rows, shape=None, _raw=False):
        rows = [list(r) for r in rows]
        if shape is not None:
            m, n = shape
            if len(rows) != m or any(len(r) != n for r in rows):
                raise ValueError(f"shape mismatch: wanted {m}x{n}")
        else:
            m = len(rows)
            n = len(rows[0]) if rows else 0
            if any(len(r) != n for r in rows):
                raise ValueError("ragged rows")
        if not _raw:
            rows = [[ring.coerce_payload(x) for x in r] for r in rows]
        self.ring = ring
        self.m = m
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, ring: Ring, k: int) -> "Matrix":
        one, zero = ring.one, ring.zero
        return cls(
            ring,
            [[one if i == j else zero for j in range(k)] for i in range(k)],
            shape=(k, k),
            _raw=True,
        )

    @classmethod
    def zeros(cls, ring: Ring, m: int, n: int) -> "Matrix":
        zero = ring.zero
        return cls(ring, [[zero] * n for _ in range(m)], shape=(m, n), _raw=True)

    @classmethod
    def from_cols(cls, ring: Ring, cols, m: int) -> "Matrix":
        cols = [list(c) for c in cols]
        if any(len(c) != m for c in cols):
            raise ValueError(f"column height mismatch: wanted {m}")
        rows = [[c[i] for c in cols] for i in range(m)]
        return cls(ring, rows, shape=(m, len(cols)))

    @classmethod
    def diagonal(cls, ring: Ring, entries, m: int, n: int) -> "Matrix":
        A = [[ring.zero] * n for _ in range(m)]
        for i, d in enumerate(entries):
            A[i][i] = d
        return cls(ring, A, shape=(m, n))

    # -- basics -------------------------------------------------------
    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def col(self, j: int):
        return tuple(r[j] for r in self.rows)

    def cols(self):
        return [self.col(j) for j in range(self.n)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.ring,
            [[self.rows[i][j] for i in range(self.m)] for j in range(self.n)],
            shape=(self.n, self.m),
            _raw=True,
        )

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(x == z for r in self.rows for x in r)

    def map_entries(self, func, ring: Ring | None = None) -> "Matrix":
        return Matrix(
            self.ring if ring is None else ring,
            [[func(x) for x in r] for r in self.rows],
            shape=(self.m, self.n),
        )

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.ring == self.ring
            and other.rows == self.rows
            and other.n == self.n
        )

    def __hash__(self):
        return hash((self.ring, self.n, self.rows))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.ring.format_elem(x) for x in r) for r in self.rows
        )
        return f"Matrix({self.m}x{self.n} over {self.ring!r}: [{body}])"

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        add = self.ring.add
        return Matrix(
            self.ring,
            [
                [add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            shape=(self.m, self.n),
            _raw=True,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        sub = self.ring.sub
        return Matrix(
            self.ring,
            [
                [sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            shape=(self.m, self.n),
            _raw=True,
        )

    def __neg__(self) -> "Matrix":
        neg = self.ring.neg
        return Matrix(
            self.ring,
            [[neg(a) for a in r] for r in self.rows],
            shape=(self.m, self.n),
            _raw=True,
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != self.ring or other.m != self.n:
            raise ValueError(
                f"cannot multiply {self.m}x{self.n} by {other.m}x{other.n}"
            )
        ring = self.ring
        B = other.rows
        out = []
        if isinstance(ring, IntegerRing):
            for ra in self.rows:
                row = [0] * other.n
                for k, a in enumerate(ra):
                    if a:
                        Bk = B[k]
                        for j in range(other.n):
                            if Bk[j]:
                                row[j] += a * Bk[j]
                out.append(row)
        else:
            zero, add, mul = ring.zero, ring.add, ring.mul
            for ra in self.rows:
                row = [zero] * other.n
                for k, a in enumerate(ra):
                    if a != zero:
                        Bk = B[k]
                        for j in range(other.n):
                            if Bk[j] != zero:
                                row[j] = add(row[j], mul(a, Bk[j]))
                out.append(row)
        return Matrix(self.ring, out, shape=(self.m, other.n), _raw=True)

    def scale(self, c) -> "Matrix":
        mul = self.ring.mul
        return Matrix(
            self.ring,
            [[mul(c, a) for a in r] for r in self.rows],
            shape=(self.m, self.n),
            _raw=True,
        )

    def _check_same_shape(self, other):
        if other.ring != self.ring or (other.m, other.n) != (self.m, self.n):
            raise ValueError("shape or ring mismatch")


def matvec(A: Matrix, v):
    v = list(v)
    if len(v) != A.n:
        raise ValueError(f"length {len(v)} vector against {A.m}x{A.n}")
    ring = A.ring
    zero, add, mul = ring.zero, ring.add, ring.mul
    out = []
    for row in A.rows:
        acc = zero
        for a, x in zip(row, v):
            if a != zero and x != zero:
                acc = add(acc, mul(a, x))
        out.append(acc)
    return tuple(out)


def hstack(A: Matrix, B: Matrix) -> Matrix:
    if A.ring != B.ring or A.m != B.m:
        raise ValueError("hstack mismatch")
    return Matrix(
        A.ring,
        [list(ra) + list(rb) for ra, rb in zip(A.rows, B.rows)],
        shape=(A.m, A.n + B.n),
        _raw=True,
    )


def vstack(A: Matrix, B: Matrix) -> Matrix:
    if A.ring != B.ring or A.n != B.n:
        raise ValueError("vstack mismatch")
    return Matrix(
        A.ring,
        [list(r) for r in A.rows] + [list(r) for r in B.rows],
        shape=(A.m + B.m, A.n),
        _raw=True,
    )


def block_diag(ring: Ring, blocks) -> Matrix:
    blocks = list(blocks)
    m = sum(b.m for b in blocks)
    n = sum(b.n for b in blocks)
    out = [[ring.zero] * n for _ in range(m)]
    i0 = j0 = 0
    for b in blocks:
        for i in range(b.m):
            out[i0 + i][j0 : j0 + b.n] = b.rows[i]
        i0 += b.m
        j0 += b.n
    return Matrix(ring, out, shape=(m, n), _raw=True)


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product; (i*B.m + k, j*B.n + l) entry is A[i,j] * B[k,l]."""
    if A.ring != B.ring:
        raise ValueError("kron ring mismatch")
    ring = A.ring
    zero, mul = ring.zero, ring.mul
    m, n = A.m * B.m, A.n * B.n
    out = [[zero] * n for _ in range(m)]
    for i in range(A.m):
        for j in range(A.n):
            a = A.rows[i][j]
            if a == zero:
                continue
            for k in range(B.m):
                Brow = B.rows[k]
                orow = out[i * B.m + k]
                for l in range(B.n):
                    if Brow[l] != zero:
                        orow[j * B.n + l] = mul(a, Brow[l])
    return Matrix(ring, out, shape=(m, n), _raw=True)


class SNFCertificate:
    """U*A*V = D with divisibility chain and tracked unimodular inverses."""

    __slots__ = ("ring", "D", "U", "V", "U_inv", "V_inv", "det_u", "det_v", "rank")

    def __init__(self, ring, D, U, V, U_inv, V_inv, det_u, det_v):
        self.ring = ring
        self.D = D
        self.U = U
        self.V = V
        self.U_inv = U_inv
        self.V_inv = V_inv
        self.det_u = det_u
        self.det_v = det_v
        zero = ring.zero
        r = 0
        for i in range(min(D.m, D.n)):
            if D.rows[i][i] != zero:
                r += 1
        self.rank = r

    def diagonal(self):
        return [self.D.rows[i][i] for i in range(min(self.D.m, self.D.n))]

    def nontrivial_diagonal(self):
        """Diagonal entries that are neither zero nor units."""
        ring = self.ring
        return [
            d
            for d in self.diagonal()
            if d != ring.zero and not ring.is_unit(d)
        ]


def smith_normal_form(A: Matrix) -> SNFCertificate:
    ring = A.ring
    if isinstance(ring, IntegerRing):
        D, U, V, Ui, Vi, du, dv = _snf.snf_int(A.m, A.n, A.rows)
    elif ring.is_euclidean:
        D, U, V, Ui, Vi, du, dv = _snf_generic(ring, A.m, A.n, A.rows)
    else:
        raise TypeError(f"SNF needs a Euclidean ring, got {ring!r}")
    mk = lambda rows, m, n: Matrix(ring, rows, shape=(m, n), _raw=True)
    return SNFCertificate(
        ring,
        mk(D, A.m, A.n),
        mk(U, A.m, A.m),
        mk(V, A.n, A.n),
        mk(Ui, A.m, A.m),
        mk(Vi, A.n, A.n),
        du,
        dv,
    )


def _snf_generic(ring: Ring, m, n, rows):
    """Ring-op twin of the integer kernel; same pivot rule and sweep order."""
    zero, one = ring.zero, ring.one
    M = [list(r) for r in rows]
    U = [[one if i == j else zero for j in range(m)] for i in range(m)]
    Ui = [[one if i == j else zero for j in range(m)] for i in range(m)]
    V = [[one if i == j else zero for j in range(n)] for i in range(n)]
    Vi = [[one if i == j else zero for j in range(n)] for i in range(n)]
    det_u = [one]
    det_v = [one]
    unit_size = ring.euclid_size(one)
    add, sub, mul, neg = ring.add, ring.sub, ring.mul, ring.neg

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]
        for r in range(m):
            Ui[r][i], Ui[r][j] = Ui[r][j], Ui[r][i]
        det_u[0] = neg(det_u[0])

    def swap_cols(i, j):
        for r in range(m):
            M[r][i], M[r][j] = M[r][j], M[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]
        Vi[i], Vi[j] = Vi[j], Vi[i]
        det_v[0] = neg(det_v[0])

    def row_sub(i, t, q):
        Mi, Mt = M[i], M[t]
        for c in range(n):
            if Mt[c] != zero:
                Mi[c] = sub(Mi[c], mul(q, Mt[c]))
        Uo, Ut = U[i], U[t]
        for c in range(m):
            if Ut[c] != zero:
                Uo[c] = sub(Uo[c], mul(q, Ut[c]))
        for r in range(m):
            if Ui[r][i] != zero:
                Ui[r][t] = add(Ui[r][t], mul(q, Ui[r][i]))

    def col_sub(j, t, q):
        for r in range(m):
            if M[r][t] != zero:
                M[r][j] = sub(M[r][j], mul(q, M[r][t]))
        for r in range(n):
            if V[r][t] != zero:
                V[r][j] = sub(V[r][j], mul(q, V[r][t]))
        Vt, Vj = Vi[t], Vi[j]
        for c in range(n):
            if Vj[c] != zero:
                Vt[c] = add(Vt[c], mul(q, Vj[c]))

    t = 0
    limit = min(m, n)
    while t < limit:
        bi = bj = -1
        best = -1
        for i in range(t, m):
            Mi = M[i]
            for j in range(t, n):
                if Mi[j] != zero:
                    s = ring.euclid_size(Mi[j])
                    if bi < 0 or s < best:
                        bi, bj, best = i, j, s
                        if s == unit_size:
                            break
            if best == unit_size and bi >= 0:
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
            if a != zero:
                q, r = ring.divmod_(a, p)
                if q != zero:
                    row_sub(i, t, q)
                if r != zero:
                    dirty = True
        if dirty:
            continue
        for j in range(t + 1, n):
            b = M[t][j]
            if b != zero:
                q, r = ring.divmod_(b, p)
                if q != zero:
                    col_sub(j, t, q)
                if r != zero:
                    dirty = True
        if dirty:
            continue

        # cross is clear; fold in any row the pivot does not divide yet
        ok = True
        for i in range(t + 1, m):
            Mi = M[i]
            for j in range(t + 1, n):
                if ring.divmod_(Mi[j], p)[1] != zero:
                    row_sub(t, i, neg(one))
                    ok = False
                    break
            if not ok:
                break
        if ok:
            t += 1

    rank = t

    for i in range(rank):
        u = ring.canonical_unit(M[i][i])
        if u != one:
            uinv = ring.unit_inverse(u)
            M[i][i] = mul(u, M[i][i])
            U[i] = [mul(u, x) for x in U[i]]
            for r in range(m):
                Ui[r][i] = mul(uinv, Ui[r][i])
            det_u[0] = mul(u, det_u[0])

    return M, U, V, Ui, Vi, det_u[0], det_v[0]


def solve_linear(A: Matrix, b, cert: SNFCertificate | None = None):
    """One x with A x = b (payload tuple), or None if b is outside the span."""
    if cert is None:
        cert = smith_normal_form(A)
    ring = A.ring
    if len(b) != A.m:
        raise ValueError("rhs length mismatch")
    c = matvec(cert.U, b)
    zero = ring.zero
    y = [zero] * A.n
    for i in range(A.m):
        if i < cert.rank:
            d = cert.D.rows[i][i]
            q, r = ring.divmod_(c[i], d)
            if r != zero:
                return None
            y[i] = q
        elif c[i] != zero:
            return None
    return matvec(cert.V, y)


def solve_matrix(A: Matrix, B: Matrix, cert: SNFCertificate | None = None):
    """X with A X = B, or None. One SNF, one solve per column of B."""
    if cert is None:
        cert = smith_normal_form(A)
    cols = []
    for j in range(B.n):
        x = solve_linear(A, B.col(j), cert)
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_cols(A.ring, cols, A.n) if cols else Matrix.zeros(A.ring, A.n, 0)


def kernel_basis(A: Matrix, cert: SNFCertificate | None = None) -> Matrix:
    """Columns freely generating {x : A x = 0}; count is n - rank."""
    if cert is None:
        cert = smith_normal_form(A)
    cols = [cert.V.col(j) for j in range(cert.rank, A.n)]
    return Matrix.from_cols(A.ring, cols, A.n) if cols else Matrix.zeros(A.ring, A.n, 0)


def det(A: Matrix):
    """Fraction-free (Bareiss) determinant; exact over any of our domains."""
    if A.m != A.n:
        raise ValueError("determinant of a nonsquare matrix")
    ring = A.ring
    n = A.n
    if n == 0:
        return ring.one
    zero = ring.zero
    M = [list(r) for r in A.rows]
    sign = ring.one
    prev = ring.one
    for k in range(n - 1):
        if M[k][k] == zero:
            for i in range(k + 1, n):
                if M[i][k] != zero:
                    M[k], M[i] = M[i], M[k]
                    sign = ring.neg(sign)
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ring.sub(
                    ring.mul(M[i][j], M[k][k]), ring.mul(M[i][k], M[k][j])
                )
                M[i][j] = ring.exact_div(num, prev)
            M[i][k] = zero
        prev = M[k][k]
    return ring.mul(sign, M[n - 1][n - 1])


def column_hermite(A: Matrix):
    """(H, V) with A V = H in column echelon form, V unimodular.

    Pivots are canonical associates; entries left of a pivot are reduced
    mod the pivot. Deterministic: same pivot rule as the SNF sweep.
    """
    ring = A.ring
    if not ring.is_euclidean:
        raise TypeError(f"Hermite form needs a Euclidean ring, got {ring!r}")
    zero, one = ring.zero, ring.one
    m, n = A.m, A.n
    H = [list(r) for r in A.rows]
    V = [[one if i == j else zero for j in range(n)] for i in range(n)]

    def col_sub(j, t, q):
        for r in range(m):
            if H[r][t] != zero:
                H[r][j] = ring.sub(H[r][j], ring.mul(q, H[r][t]))
        for r in range(n):
            if V[r][t] != zero:
                V[r][j] = ring.sub(V[r][j], ring.mul(q, V[r][t]))

    def swap_cols(i, j):
        for r in range(m):
            H[r][i], H[r][j] = H[r][j], H[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    pivots = []
    c = 0
    for r0 in range(m):
        if c >= n:
            break
        bj = -1
        best = -1
        for j in range(c, n):
            if H[r0][j] != zero:
                s = ring.euclid_size(H[r0][j])
                if bj < 0 or s < best:
                    bj, best = j, s
        if bj < 0:
            continue
        if bj != c:
            swap_cols(bj, c)
        while True:
            again = False
            for j in range(c + 1, n):
                if H[r0][j] == zero:
                    continue
                q, r = ring.divmod_(H[r0][j], H[r0][c])
                if q != zero:
                    col_sub(j, c, q)
                if r != zero:
                    swap_cols(j, c)
                    again = True
            if not again:
                break
        u = ring.canonical_unit(H[r0][c])
        if u != one:
            for r in range(m):
                H[r][c] = ring.mul(u, H[r][c])
            for r in range(n):
                V[r][c] = ring.mul(u, V[r][c])
        pivots.append((r0, c))
        c += 1

    for r0, cc in pivots:
        for j in range(cc):
            if H[r0][j] != zero:
                q, _ = ring.divmod_(H[r0][j], H[r0][cc])
                if q != zero:
                    col_sub(j, cc, q)

    return (
        Matrix(ring, H, shape=(m, n), _raw=True),
        Matrix(ring, V, shape=(n, n), _raw=True),
    )
