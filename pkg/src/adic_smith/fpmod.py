"""Finitely presented modules over the package algebras, with exact maps.

An algebra A is R/(f) for a Euclidean base R (Z or k[x]); ``algebra_split``
also accepts R itself (no modulus) and Z/n (as Z/(n)).  A module is kept
as an R-presentation

    M = R^g / colspan(rel),    rel an (g x r) matrix over R,

where the columns f*e_i are always materialized in ``rel`` whenever a
modulus is present.  Because A is a quotient of R, A-linear and R-linear
agree for such modules, so all structure (kernels, cokernels, tensor,
hom, pushouts) reduces to certified Smith/Hermite computations over R.

Presentations are canonical: ``rel`` is stored in reduced column Hermite
form with zero columns dropped, so equal submodule lattices give equal
``FPModule`` objects and element coordinates have unique reduced forms.
Maps are matrices on generators, stored with columns reduced, so map
equality is matrix equality.
"""

from __future__ import annotations

from adic_smith.linalg import (
    Matrix,
    block_diag,
    column_hermite,
    hstack,
    kernel_basis,
    kron,
    matvec,
    smith_normal_form,
    vstack,
)
from adic_smith.rings import IntegerRing, PolyRing, PrimeField, Ring, algebra_split


def residues(base: Ring, d):
    """All canonical remainders mod d, in a deterministic order."""
    if isinstance(base, IntegerRing):
        return [k for k in range(abs(d))] or [0]
    if isinstance(base, PolyRing) and isinstance(base.field, PrimeField):
        p = base.field.p
        deg = len(d) - 1
        out = []

        def rec(prefix):
            if len(prefix) == deg:
                out.append(base._strip(prefix))
                return
            for c in range(p):
                rec(prefix + [c])

        rec([])
        return out or [()]
    raise TypeError(f"cannot enumerate residues over {base!r}")


class FPModule:
    """R-presented module over an algebra; see the module docstring."""

    __slots__ = (
        "algebra",
        "base",
        "modulus",
        "ngens",
        "rel",
        "_pivots",
        "_rel_cert",
        "_snf",
    )

    def __init__(self, algebra: Ring, ngens: int, rel_cols=()):
        base, modulus = algebra_split(algebra)
        cols = [[base.coerce_payload(x) for x in c] for c in rel_cols]
        if any(len(c) != ngens for c in cols):
            raise ValueError(f"relation length mismatch, wanted {ngens}")
        if modulus is not None:
            modulus = base.coerce_payload(modulus)
            for i in range(ngens):
                col = [base.zero] * ngens
                col[i] = modulus
                cols.append(col)
        raw = Matrix.from_cols(base, cols, ngens)
        H, _ = column_hermite(raw)
        zero = base.zero
        keep = [j for j in range(H.n) if any(H.rows[i][j] != zero for i in range(ngens))]
        self.algebra = algebra
        self.base = base
        self.modulus = modulus
        self.ngens = ngens
        self.rel = Matrix.from_cols(base, [H.col(j) for j in keep], ngens)
        pivots = []
        for j in range(self.rel.n):
            for i in range(ngens):
                if self.rel.rows[i][j] != zero:
                    pivots.append((i, j))
                    break
        self._pivots = tuple(pivots)
        self._rel_cert = None
        self._snf = None

    # -- constructors -------------------------------------------------
    @classmethod
    def free(cls, algebra: Ring, n: int) -> "FPModule":
        return cls(algebra, n)

    @classmethod
    def cyclic(cls, algebra: Ring, ann) -> "FPModule":
        """A/(ann) as a module; ann is a base-ring payload."""
        return cls(algebra, 1, [[ann]])

    @classmethod
    def zero(cls, algebra: Ring) -> "FPModule":
        return cls(algebra, 0)

    # -- cached normal forms ------------------------------------------
    def rel_cert(self):
        if self._rel_cert is None:
            self._rel_cert = smith_normal_form(self.rel)
        return self._rel_cert

    def snf_diagonal(self):
        if self._snf is None:
            self._snf = tuple(self.rel_cert().diagonal())
        return self._snf

    # -- elements ------------------------------------------------------
    def gen(self, i: int):
        v = [self.base.zero] * self.ngens
        v[i] = self.base.one
        return tuple(v)

    def zero_vec(self):
        return tuple([self.base.zero] * self.ngens)

    def coerce_vec(self, v):
        v = [self.base.coerce_payload(x) for x in v]
        if len(v) != self.ngens:
            raise ValueError(f"length {len(v)} vector in {self.ngens}-generator module")
        return v

    def reduce_vec(self, v):
        """Unique reduced coordinates of v modulo the relation lattice."""
        base = self.base
        v = self.coerce_vec(v)
        H = self.rel.rows
        for i, j in self._pivots:
            q, r = base.divmod_(v[i], H[i][j])
            if q != base.zero:
                for s in range(i, self.ngens):
                    if H[s][j] != base.zero:
                        v[s] = base.sub(v[s], base.mul(q, H[s][j]))
                v[i] = r
        return tuple(v)

    def is_zero_vec(self, v) -> bool:
        zero = self.base.zero
        return all(x == zero for x in self.reduce_vec(v))

    def vecs_equal(self, v, w) -> bool:
        return self.reduce_vec(v) == self.reduce_vec(w)

    def elements(self):
        """All reduced coordinate tuples, or TypeError if infinite."""
        if len(self._pivots) != self.ngens:
            raise TypeError("module has a free direction; not enumerable")
        choices = [residues(self.base, self.rel.rows[i][j]) for i, j in self._pivots]
        out = [[]]
        for ch in choices:
            out = [v + [c] for v in out for c in ch]
        return [tuple(v) for v in out]

    def element_count(self):
        """Number of elements, or None when infinite (or not enumerable)."""
        if len(self._pivots) != self.ngens:
            return None
        base = self.base
        total = 1
        for i, j in self._pivots:
            d = self.rel.rows[i][j]
            if isinstance(base, IntegerRing):
                total *= abs(d)
            elif isinstance(base, PolyRing) and isinstance(base.field, PrimeField):
                total *= base.field.p ** (len(d) - 1)
            else:
                return None
        return total

    # -- structure ------------------------------------------------------
    def invariant_factors(self):
        """Nonunit nonzero diagonal of the relation SNF, divisibility order."""
        base = self.base
        return [
            d
            for d in self.snf_diagonal()
            if d != base.zero and not base.is_unit(d)
        ]

    def free_rank(self) -> int:
        return self.ngens - self.rel_cert().rank

    def structure(self):
        return (self.free_rank(), tuple(self.invariant_factors()))

    def is_zero_module(self) -> bool:
        return self.free_rank() == 0 and not self.invariant_factors()

    def dim_over_field(self):
        """k-dimension when the base is k[x] and the module is torsion."""
        if not isinstance(self.base, PolyRing):
            raise TypeError("dimension counting needs a polynomial base")
        if self.free_rank() > 0:
            return None
        return sum(len(d) - 1 for d in self.invariant_factors())

    def describe(self):
        base = self.base
        out = {
            "generators": self.ngens,
            "free_rank": self.free_rank(),
            "invariant_factors": [base.format_elem(d) for d in self.invariant_factors()],
        }
        count = self.element_count()
        if count is not None:
            out["size"] = count
        if isinstance(base, PolyRing):
            dim = self.dim_over_field()
            if dim is not None:
                out["dim_over_coefficients"] = dim
        return out

    def __eq__(self, other):
        return (
            isinstance(other, FPModule)
            and other.algebra == self.algebra
            and other.ngens == self.ngens
            and other.rel == self.rel
        )

    def __hash__(self):
        return hash((self.algebra, self.ngens, self.rel))

    def __repr__(self):
        fr = self.free_rank()
        inv = ", ".join(self.base.format_elem(d) for d in self.invariant_factors())
        parts = []
        if fr:
            parts.append(f"free^{fr}")
        if inv:
            parts.append(f"torsion({inv})")
        body = " + ".join(parts) if parts else "0"
        return f"FPModule({body} over {self.algebra!r})"


class FPMap:
    """Map between FPModules, as a (dst.ngens x src.ngens) matrix over R.

    Columns are the generator images, stored in reduced form; the
    constructor certifies well-definedness (relations map into
    relations) unless ``check=False``.
    """

    __slots__ = ("src", "dst", "mat")

    def __init__(self, src: FPModule, dst: FPModule, mat, check: bool = True):
        if src.algebra != dst.algebra:
            raise ValueError("maps need a common algebra")
        if not isinstance(mat, Matrix):
            mat = Matrix(src.base, mat, shape=(dst.ngens, src.ngens))
        if (mat.m, mat.n) != (dst.ngens, src.ngens):
            raise ValueError(
                f"matrix {mat.m}x{mat.n} against map "
                f"{src.ngens} -> {dst.ngens} generators"
            )
        if check and src.rel.n and not _cols_in_span(dst, mat * src.rel):
            raise ValueError("matrix does not respect the relations")
        self.src = src
        self.dst = dst
        self.mat = Matrix.from_cols(
            src.base, [dst.reduce_vec(mat.col(j)) for j in range(mat.n)], dst.ngens
        )

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, M: FPModule) -> "FPMap":
        return cls(M, M, Matrix.identity(M.base, M.ngens), check=False)

    @classmethod
    def zero(cls, src: FPModule, dst: FPModule) -> "FPMap":
        return cls(src, dst, Matrix.zeros(src.base, dst.ngens, src.ngens), check=False)

    @classmethod
    def scalar(cls, M: FPModule, a) -> "FPMap":
        """Multiplication by the algebra element with base payload a."""
        a = M.base.coerce_payload(a)
        return cls(
            M,
            M,
            Matrix.diagonal(M.base, [a] * M.ngens, M.ngens, M.ngens),
            check=False,
        )

    # -- behaviour ----------------------------------------------------
    def __call__(self, v):
        return self.dst.reduce_vec(matvec(self.mat, self.src.coerce_vec(v)))

    def compose(self, other: "FPMap") -> "FPMap":
        """self after other."""
        if other.dst != self.src:
            raise ValueError("composition mismatch")
        return FPMap(other.src, self.dst, self.mat * other.mat, check=False)

    def __mul__(self, other):
        if not isinstance(other, FPMap):
            return NotImplemented
        return self.compose(other)

    def __add__(self, other: "FPMap") -> "FPMap":
        self._check_parallel(other)
        return FPMap(self.src, self.dst, self.mat + other.mat, check=False)

    def __sub__(self, other: "FPMap") -> "FPMap":
        self._check_parallel(other)
        return FPMap(self.src, self.dst, self.mat - other.mat, check=False)

    def __neg__(self) -> "FPMap":
        return FPMap(self.src, self.dst, -self.mat, check=False)

    def _check_parallel(self, other):
        if other.src != self.src or other.dst != self.dst:
            raise ValueError("maps are not parallel")

    def __eq__(self, other):
        return (
            isinstance(other, FPMap)
            and other.src == self.src
            and other.dst == self.dst
            and other.mat == self.mat
        )

    def __hash__(self):
        return hash((self.src, self.dst, self.mat))

    def __repr__(self):
        return f"FPMap({self.src!r} -> {self.dst!r})"

    def is_zero_map(self) -> bool:
        return self.mat.is_zero()

    # -- exactness ----------------------------------------------------
    def kernel(self):
        """(K, incl) with incl: K -> src exact onto the kernel."""
        big = hstack(self.mat, self.dst.rel)
        Kb = kernel_basis(big)
        G = Matrix(
            self.src.base,
            [Kb.rows[i] for i in range(self.src.ngens)],
            shape=(self.src.ngens, Kb.n),
            _raw=True,
        )
        return submodule(self.src, G)

    def image(self):
        """(I, incl) with incl: I -> dst exact onto the image."""
        return submodule(self.dst, self.mat)

    def cokernel(self):
        """(C, proj) with proj: dst -> C the quotient by the image."""
        return quotient(self.dst, self.mat)

    def is_injective(self) -> bool:
        K, _ = self.kernel()
        return K.is_zero_module()

    def is_surjective(self) -> bool:
        C, _ = self.cokernel()
        return C.is_zero_module()

    def is_iso(self) -> bool:
        return self.is_surjective() and self.is_injective()

    def inverse(self) -> "FPMap":
        big = hstack(self.mat, self.dst.rel)
        X = _solve_top(big, Matrix.identity(self.dst.base, self.dst.ngens), self.src.ngens)
        if X is None:
            raise ValueError("map is not surjective")
        inv = FPMap(self.dst, self.src, X)
        if not (self * inv == FPMap.identity(self.dst) and inv * self == FPMap.identity(self.src)):
            raise ValueError("map is not invertible")
        return inv


def _cols_in_span(M: FPModule, B: Matrix) -> bool:
    """Do all columns of B lie in M's relation lattice?"""
    cert = M.rel_cert()
    from adic_smith.linalg import solve_linear

    for j in range(B.n):
        if solve_linear(M.rel, B.col(j), cert) is None:
            return False
    return True


def _solve_top(A: Matrix, B: Matrix, top: int):
    """Solve A [x; w] = b per column of B; return the x-rows, or None."""
    from adic_smith.linalg import solve_matrix

    X = solve_matrix(A, B)
    if X is None:
        return None
    return Matrix(
        A.ring, [X.rows[i] for i in range(top)], shape=(top, X.n), _raw=True
    )


def express_in(M: FPModule, G: Matrix, v):
    """u with G u = v modulo M's relations, or None."""
    big = hstack(G, M.rel)
    from adic_smith.linalg import solve_linear

    sol = solve_linear(big, M.coerce_vec(v))
    if sol is None:
        return None
    return tuple(sol[: G.n])


# -- subquotients -----------------------------------------------------


def submodule(M: FPModule, G: Matrix):
    """(S, incl) for the submodule of M spanned by the columns of G."""
    rel = _projected_kernel(hstack(G, M.rel), G.n)
    S = FPModule(M.algebra, G.n, [rel.col(j) for j in range(rel.n)])
    return S, FPMap(S, M, G, check=False)


def quotient(M: FPModule, H: Matrix):
    """(Q, proj) for M divided by the span of the columns of H."""
    cols = [M.rel.col(j) for j in range(M.rel.n)]
    cols += [H.col(j) for j in range(H.n)]
    Q = FPModule(M.algebra, M.ngens, cols)
    return Q, FPMap(M, Q, Matrix.identity(M.base, M.ngens), check=False)


def _projected_kernel(A: Matrix, top: int) -> Matrix:
    Kb = kernel_basis(A)
    return Matrix(
        A.ring, [Kb.rows[i] for i in range(top)], shape=(top, Kb.n), _raw=True
    )


def factor_through(u: FPMap, through: FPMap):
    """v with through * v = u, or None; meant for mono ``through``
    (kernel and image inclusions), where v is unique if it exists."""
    if u.dst != through.dst:
        raise ValueError("factorization needs a common target")
    big = hstack(through.mat, u.dst.rel)
    X = _solve_top(big, u.mat, through.src.ngens)
    if X is None:
        return None
    return FPMap(u.src, through.src, X)


def is_exact_pair(f: FPMap, g: FPMap) -> bool:
    """Does im(f) = ker(g) hold inside f.dst = g.src?

    Certified both ways: the composite vanishes, and every generator of
    ker(g) factors through the image of f.
    """
    if f.dst != g.src:
        raise ValueError("exactness needs composable maps")
    if not (g * f).is_zero_map():
        return False
    _, ik = g.kernel()
    _, ii = f.image()
    return factor_through(ik, ii) is not None


def direct_sum(M: FPModule, N: FPModule):
    """(S, inc_M, inc_N, pr_M, pr_N)."""
    if M.algebra != N.algebra:
        raise ValueError("sum needs a common algebra")
    base = M.base
    rel = block_diag(base, [M.rel, N.rel])
    S = FPModule(M.algebra, M.ngens + N.ngens, [rel.col(j) for j in range(rel.n)])
    im = Matrix.identity(base, M.ngens)
    im2 = Matrix.identity(base, N.ngens)
    zmn = Matrix.zeros(base, M.ngens, N.ngens)
    znm = Matrix.zeros(base, N.ngens, M.ngens)
    inc_M = FPMap(M, S, vstack(im, znm), check=False)
    inc_N = FPMap(N, S, vstack(zmn, im2), check=False)
    pr_M = FPMap(S, M, hstack(im, zmn), check=False)
    pr_N = FPMap(S, N, hstack(znm, im2), check=False)
    return S, inc_M, inc_N, pr_M, pr_N


def pushout(f: FPMap, g: FPMap):
    """(P, in_f, in_g) for the pushout of f: A -> B against g: A -> C.

    P = (B + C) / <(f a, -g a)>, in_f: B -> P, in_g: C -> P.
    """
    if f.src != g.src:
        raise ValueError("pushout needs a common source")
    B, C = f.dst, g.dst
    base = B.base
    rel = block_diag(base, [B.rel, C.rel])
    glue = vstack(f.mat, -g.mat)
    cols = [rel.col(j) for j in range(rel.n)] + [glue.col(j) for j in range(glue.n)]
    P = FPModule(B.algebra, B.ngens + C.ngens, cols)
    zbc = Matrix.zeros(base, C.ngens, B.ngens)
    zcb = Matrix.zeros(base, B.ngens, C.ngens)
    in_f = FPMap(B, P, vstack(Matrix.identity(base, B.ngens), zbc), check=False)
    in_g = FPMap(C, P, vstack(zcb, Matrix.identity(base, C.ngens)), check=False)
    return P, in_f, in_g


def pullback(f: FPMap, g: FPMap):
    """(P, pr_f, pr_g) for the pullback of f: B -> D against g: C -> D."""
    if f.dst != g.dst:
        raise ValueError("pullback needs a common target")
    S, _, _, pB, pC = direct_sum(f.src, g.src)
    h = FPMap(S, f.dst, hstack(f.mat, -g.mat), check=False)
    P, incl = h.kernel()
    return P, pB * incl, pC * incl


# -- tensor -----------------------------------------------------------


def tensor(M: FPModule, N: FPModule) -> FPModule:
    """M tensor N over the algebra; generator (i, j) sits at i*N.ngens + j."""
    if M.algebra != N.algebra:
        raise ValueError("tensor needs a common algebra")
    base = M.base
    IM = Matrix.identity(base, M.ngens)
    IN = Matrix.identity(base, N.ngens)
    rel = hstack(kron(M.rel, IN), kron(IM, N.rel))
    return FPModule(M.algebra, M.ngens * N.ngens, [rel.col(j) for j in range(rel.n)])


def tensor_map(f: FPMap, g: FPMap, src: FPModule | None = None, dst: FPModule | None = None) -> FPMap:
    if src is None:
        src = tensor(f.src, g.src)
    if dst is None:
        dst = tensor(f.dst, g.dst)
    return FPMap(src, dst, kron(f.mat, g.mat), check=False)


def tensor_swap(M: FPModule, N: FPModule, src: FPModule | None = None, dst: FPModule | None = None) -> FPMap:
    """The braiding M tensor N -> N tensor M."""
    if src is None:
        src = tensor(M, N)
    if dst is None:
        dst = tensor(N, M)
    base = M.base
    rows = [[base.zero] * (M.ngens * N.ngens) for _ in range(N.ngens * M.ngens)]
    for i in range(M.ngens):
        for j in range(N.ngens):
            rows[j * M.ngens + i][i * N.ngens + j] = base.one
    return FPMap(src, dst, Matrix(base, rows, _raw=True), check=False)


# -- hom --------------------------------------------------------------


class HomModule:
    """Hom(M, N) as an FPModule, with translation to and from FPMaps.

    A map is a (N.ngens x M.ngens) matrix X; its vectorization is
    vec(X)[j*N.ngens + i] = X[i][j].  Generators of ``module`` are the
    columns of ``G`` (vectorized matrices); two matrices give the same
    map exactly when their difference lies in colspan(I tensor N.rel).
    """

    __slots__ = ("src", "dst", "module", "G", "_coords_cert")

    def __init__(self, M: FPModule, N: FPModule):
        if M.algebra != N.algebra:
            raise ValueError("hom needs a common algebra")
        base = M.base
        gM, gN = M.ngens, N.ngens
        K = kron(M.rel.transpose(), Matrix.identity(base, gN))
        L = kron(Matrix.identity(base, M.rel.n), N.rel)
        G = _projected_kernel(hstack(K, L), gM * gN)
        T = kron(Matrix.identity(base, gM), N.rel)
        rel = _projected_kernel(hstack(G, T), G.n)
        self.src = M
        self.dst = N
        self.module = FPModule(M.algebra, G.n, [rel.col(j) for j in range(rel.n)])
        self.G = G
        self._coords_cert = None

    def to_map(self, coords) -> FPMap:
        v = matvec(self.G, self.module.coerce_vec(coords))
        gN = self.dst.ngens
        rows = [
            [v[j * gN + i] for j in range(self.src.ngens)] for i in range(gN)
        ]
        mat = Matrix(self.src.base, rows, shape=(gN, self.src.ngens))
        return FPMap(self.src, self.dst, mat, check=False)

    def coords_of(self, f: FPMap):
        if f.src != self.src or f.dst != self.dst:
            raise ValueError("map does not belong to this hom module")
        gN = self.dst.ngens
        v = [
            f.mat.rows[i][j]
            for j in range(self.src.ngens)
            for i in range(gN)
        ]
        T = kron(Matrix.identity(self.src.base, self.src.ngens), self.dst.rel)
        u = express_in_free(hstack(self.G, T), v, self.G.n)
        if u is None:
            raise ValueError("map is not in the hom lattice")
        return self.module.reduce_vec(u)


def express_in_free(A: Matrix, v, top: int):
    from adic_smith.linalg import solve_linear

    sol = solve_linear(A, v)
    if sol is None:
        return None
    return tuple(sol[:top])


def curry(f: FPMap, M: FPModule, N: FPModule, H: HomModule | None = None) -> FPMap:
    """Hom(M tensor N, P) -> Hom(M, Hom(N, P)) on an explicit map f."""
    if H is None:
        H = HomModule(N, f.dst)
    gN = N.ngens
    cols = []
    for i in range(M.ngens):
        X = Matrix.from_cols(
            M.base, [f.mat.col(i * gN + j) for j in range(gN)], f.dst.ngens
        )
        cols.append(H.coords_of(FPMap(N, f.dst, X)))
    return FPMap(M, H.module, Matrix.from_cols(M.base, cols, H.module.ngens))


def uncurry(g: FPMap, H: HomModule, src: FPModule | None = None) -> FPMap:
    """Hom(M, Hom(N, P)) -> Hom(M tensor N, P); src defaults to tensor(M, N)."""
    if g.dst != H.module:
        raise ValueError("map does not land in the hom module")
    M, N, P = g.src, H.src, H.dst
    if src is None:
        src = tensor(M, N)
    cols = []
    for i in range(M.ngens):
        partial = H.to_map(g.mat.col(i))
        for j in range(N.ngens):
            cols.append(partial.mat.col(j))
    return FPMap(src, P, Matrix.from_cols(M.base, cols, P.ngens))


# -- base change ------------------------------------------------------


def base_change(M: FPModule, new_algebra: Ring, entry_map) -> FPModule:
    """Push the presentation through a base-ring map, entry by entry."""
    return FPModule(
        new_algebra,
        M.ngens,
        [[entry_map(x) for x in M.rel.col(j)] for j in range(M.rel.n)],
    )


def base_change_map(f: FPMap, src: FPModule, dst: FPModule, entry_map) -> FPMap:
    rows = [[entry_map(x) for x in r] for r in f.mat.rows]
    return FPMap(src, dst, Matrix(src.base, rows, shape=(dst.ngens, src.ngens)))


# -- canonical decomposition ------------------------------------------


def minimal_decomposition(M: FPModule):
    """(Mmin, to, fro): Mmin has diagonal relations, one generator per
    nonunit invariant factor plus one per free rank; to and fro are
    mutually inverse isos built from the relation SNF certificate."""
    cert = M.rel_cert()
    base = M.base
    diag = M.snf_diagonal()
    keep = [
        i
        for i in range(cert.rank)
        if not base.is_unit(diag[i])
    ] + list(range(cert.rank, M.ngens))
    torsion = [diag[i] for i in keep if i < cert.rank]
    k = len(keep)
    cols = []
    for t, d in enumerate(torsion):
        col = [base.zero] * k
        col[t] = d
        cols.append(col)
    Mmin = FPModule(M.algebra, k, cols)
    to_mat = Matrix(base, [cert.U.rows[i] for i in keep], shape=(k, M.ngens), _raw=True)
    fro_mat = Matrix.from_cols(base, [cert.U_inv.col(i) for i in keep], M.ngens)
    to = FPMap(M, Mmin, to_mat, check=False)
    fro = FPMap(Mmin, M, fro_mat, check=False)
    return Mmin, to, fro


def find_iso(M: FPModule, N: FPModule):
    """An explicit iso M -> N when the structures agree, else None."""
    if M.algebra != N.algebra or M.structure() != N.structure():
        return None
    _, toM, _ = minimal_decomposition(M)
    _, _, froN = minimal_decomposition(N)
    return FPMap(M, N, froN.mat * toM.mat, check=False)


def are_isomorphic(M: FPModule, N: FPModule) -> bool:
    return M.algebra == N.algebra and M.structure() == N.structure()
