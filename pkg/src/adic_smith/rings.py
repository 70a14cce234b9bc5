"""Exact base rings and their elements.

Every ring in the package is one of

* ``IntegerRing``            -- Z
* ``ModRing(n)``             -- Z/n, n >= 2
* ``PolyRing(field, var)``   -- k[x] for k = Q or F_p
* ``QuotientRing(base, f)``  -- R/(f) with R Euclidean (Z or k[x]); nested
  quotients are rejected.

Arithmetic is done on raw *payloads* (int, tuple of coefficients, ...),
not on wrapper objects, so the linear-algebra layer can run tight loops.
``RingElem`` is a thin operator-overloading wrapper for the API surface
and the CLI.  All payloads are kept canonical at all times:

* integers mod n reduced to [0, n)
* polynomial coefficient tuples have no trailing zeros; rationals are
  ``fractions.Fraction`` (lowest terms, positive denominator)
* quotient payloads are reduced mod the canonical associate of the
  modulus (nonnegative for Z, monic for k[x])

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class RationalField:
    """Q, as a coefficient field. Payloads are Fraction."""

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def from_int(self, k: int):
        return Fraction(k)

    def coerce(self, c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int):
            return Fraction(c)
        raise ValueError(f"not a rational coefficient: {c!r}")

    def is_negative(self, c) -> bool:
        return c < 0

    def fmt(self, c) -> str:
        return str(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def to_json(self):
        return "rationals"


class PrimeField:
    """F_p, as a coefficient field. Payloads are ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"not a prime: {p}")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def from_int(self, k: int):
        return k % self.p

    def coerce(self, c):
        if isinstance(c, int):
            return c % self.p
        raise ValueError(f"not an F_{self.p} coefficient: {c!r}")

    def is_negative(self, c) -> bool:
        return False

    def fmt(self, c) -> str:
        return str(c)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def to_json(self):
        return {"fp": self.p}


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


class Ring:
    """Common payload-level interface; concrete rings override."""

    kind = "?"
    is_euclidean = False
    is_finite = False
    variable: str | None = None

    # -- arithmetic ---------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    def coerce_payload(self, x):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero

    def pow(self, a, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = self.one
        for _ in range(n):
            out = self.mul(out, a)
        return out

    # -- Euclidean structure (Z and k[x] only) ------------------------
    def divmod_(self, a, b):
        raise TypeError(f"{self!r} is not Euclidean")

    def euclid_size(self, a) -> int:
        raise TypeError(f"{self!r} is not Euclidean")

    def canonical_unit(self, a):
        """Unit u such that u*a is the canonical associate of a."""
        raise TypeError(f"{self!r} is not Euclidean")

    def canonical_assoc(self, a):
        return self.mul(self.canonical_unit(a), a)

    def xgcd(self, a, b):
        """(g, s, t) with g = s*a + t*b and g the canonical gcd."""
        r0, r1 = a, b
        s0, s1 = self.one, self.zero
        t0, t1 = self.zero, self.one
        while not self.is_zero(r1):
            q, r = self.divmod_(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        u = self.canonical_unit(r0) if not self.is_zero(r0) else self.one
        return self.mul(u, r0), self.mul(u, s0), self.mul(u, t0)

    def gcd_list(self, items):
        g = self.zero
        for a in items:
            g, _, _ = self.xgcd(g, a)
        return g

    # -- misc ---------------------------------------------------------
    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def unit_inverse(self, u):
        raise NotImplementedError

    def exact_div(self, a, b):
        """c with b*c = a, or ValueError."""
        raise NotImplementedError

    def elements(self):
        raise TypeError(f"{self!r} is not finite")

    def format_elem(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        from adic_smith import exprparse

        return exprparse.parse_payload(text, self)

    def elem(self, x) -> "RingElem":
        if isinstance(x, RingElem):
            if x.ring != self:
                raise ValueError(f"element of {x.ring!r}, wanted {self!r}")
            return x
        if isinstance(x, str):
            return RingElem(self, self.parse(x))
        if isinstance(x, int):
            return RingElem(self, self.from_int(x))
        return RingElem(self, self.coerce_payload(x))

    def to_json(self):
        raise NotImplementedError


class IntegerRing(Ring):
    kind = "integers"
    is_euclidean = True
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, k):
        return k

    def coerce_payload(self, x):
        if isinstance(x, int):
            return x
        raise ValueError(f"not an integer payload: {x!r}")

    def divmod_(self, a, b):
        return divmod(a, b)

    def euclid_size(self, a):
        return abs(a)

    def canonical_unit(self, a):
        return -1 if a < 0 else 1

    def is_unit(self, a):
        return a in (1, -1)

    def unit_inverse(self, u):
        if u not in (1, -1):
            raise ValueError(f"not a unit in Z: {u}")
        return u

    def exact_div(self, a, b):
        if b == 0:
            raise ValueError("division by zero")
        q, r = divmod(a, b)
        if r != 0:
            raise ValueError(f"{b} does not divide {a} in Z")
        return q

    def format_elem(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "ZZ"

    def to_json(self):
        return {"kind": "integers"}


class ModRing(Ring):
    """Z/n with residue payloads. Not Euclidean; finite."""

    kind = "mod"
    is_finite = True

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"modulus must be >= 2: {n}")
        self.n = n
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def from_int(self, k):
        return k % self.n

    def coerce_payload(self, x):
        if isinstance(x, int):
            return x % self.n
        raise ValueError(f"not a residue payload: {x!r}")

    def is_unit(self, a):
        return gcd(a, self.n) == 1

    def unit_inverse(self, u):
        return pow(u, -1, self.n)

    def exact_div(self, a, b):
        g = gcd(b, self.n)
        if a % g != 0:
            raise ValueError(f"{b} does not divide {a} in Z/{self.n}")
        m = self.n // g
        return ((a // g) * pow(b // g, -1, m)) % m if m > 1 else 0

    def elements(self):
        return list(range(self.n))

    def format_elem(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, ModRing) and other.n == self.n

    def __hash__(self):
        return hash(("mod", self.n))

    def __repr__(self):
        return f"Z/{self.n}"

    def to_json(self):
        return {"kind": "mod", "n": self.n}


class PolyRing(Ring):
    """k[x] with k = Q or F_p. Payloads are coefficient tuples
    (c0, c1, ..., cd) with cd != 0; the zero polynomial is ()."""

    kind = "poly"
    is_euclidean = True

    def __init__(self, field, var: str):
        if not isinstance(field, (RationalField, PrimeField)):
            raise ValueError(f"unsupported coefficient field: {field!r}")
        if not var.isidentifier():
            raise ValueError(f"bad variable name: {var!r}")
        self.field = field
        self.variable = var
        self.zero = ()
        self.one = (field.one,)
        self.gen = (field.zero, field.one)

    def _strip(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == self.field.zero:
            coeffs.pop()
        return tuple(coeffs)

    def add(self, a, b):
        f = self.field
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return self._strip(out)

    def mul(self, a, b):
        if not a or not b:
            return ()
        f = self.field
        out = [f.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == f.zero:
                continue
            for j, cb in enumerate(b):
                out[i + j] = f.add(out[i + j], f.mul(ca, cb))
        return self._strip(out)

    def neg(self, a):
        return tuple(self.field.neg(c) for c in a)

    def from_int(self, k):
        c = self.field.from_int(k)
        return (c,) if c != self.field.zero else ()

    def coerce_payload(self, x):
        if isinstance(x, tuple):
            return self._strip(self.field.coerce(c) for c in x)
        if isinstance(x, int):
            return self.from_int(x)
        raise ValueError(f"not a polynomial payload: {x!r}")

    def degree(self, a) -> int:
        if not a:
            raise ValueError("degree of zero polynomial")
        return len(a) - 1

    def divmod_(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(a)
        db, lb = len(b) - 1, b[-1]
        inv_lb = f.inv(lb)
        q = [f.zero] * max(len(a) - len(b) + 1, 0)
        while len(rem) >= len(b):
            while rem and rem[-1] == f.zero:
                rem.pop()
            if len(rem) < len(b):
                break
            c = f.mul(rem[-1], inv_lb)
            d = len(rem) - 1 - db
            q[d] = c
            for i, cb in enumerate(b):
                rem[d + i] = f.sub(rem[d + i], f.mul(c, cb))
        return self._strip(q), self._strip(rem)

    def euclid_size(self, a):
        return len(a) - 1 if a else 0

    def canonical_unit(self, a):
        if not a:
            return self.one
        return (self.field.inv(a[-1]),)

    def is_unit(self, a):
        return len(a) == 1

    def unit_inverse(self, u):
        if len(u) != 1:
            raise ValueError(f"not a unit in {self!r}: {u!r}")
        return (self.field.inv(u[0]),)

    def exact_div(self, a, b):
        q, r = self.divmod_(a, b)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def stretch(self, a, s: int):
        """Substitute x -> x^s (used for dyadic base change)."""
        if s < 1:
            raise ValueError(f"stretch factor must be >= 1: {s}")
        if not a:
            return ()
        out = [self.field.zero] * ((len(a) - 1) * s + 1)
        for i, c in enumerate(a):
            out[i * s] = c
        return tuple(out)

    def format_elem(self, a):
        if not a:
            return "0"
        f = self.field
        parts = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if c == f.zero:
                continue
            neg = f.is_negative(c)
            mag = f.neg(c) if neg else c
            if i == 0:
                body = f.fmt(mag)
            else:
                x = self.variable if i == 1 else f"{self.variable}^{i}"
                body = x if mag == f.one else f"{f.fmt(mag)}*{x}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.variable == self.variable
        )

    def __hash__(self):
        return hash(("poly", self.field, self.variable))

    def __repr__(self):
        return f"{self.field!r}[{self.variable}]"

    def to_json(self):
        return {"kind": "poly", "coeff": self.field.to_json(), "var": self.variable}


class QuotientRing(Ring):
    """R/(f) for Euclidean R. Payloads are reduced base payloads."""

    kind = "quotient"

    def __init__(self, base: Ring, modulus):
        if not base.is_euclidean:
            raise ValueError("quotient base must be Euclidean (Z or k[x])")
        modulus = base.coerce_payload(modulus)
        if base.is_zero(modulus):
            raise ValueError("zero modulus")
        self.base = base
        self.modulus = base.canonical_assoc(modulus)
        self.variable = base.variable
        self.zero = self.reduce(base.zero)
        self.one = self.reduce(base.one)

    @property
    def is_finite(self):
        return isinstance(self.base, IntegerRing) or isinstance(
            self.base.field, PrimeField
        )

    def reduce(self, a):
        _, r = self.base.divmod_(a, self.modulus)
        return r

    def add(self, a, b):
        return self.reduce(self.base.add(a, b))

    def sub(self, a, b):
        return self.reduce(self.base.sub(a, b))

    def mul(self, a, b):
        return self.reduce(self.base.mul(a, b))

    def neg(self, a):
        return self.reduce(self.base.neg(a))

    def from_int(self, k):
        return self.reduce(self.base.from_int(k))

    def coerce_payload(self, x):
        return self.reduce(self.base.coerce_payload(x))

    def is_unit(self, a):
        g, _, _ = self.base.xgcd(a, self.modulus)
        return self.base.is_unit(g) or self.base.is_zero(self.one)

    def unit_inverse(self, u):
        g, s, _ = self.base.xgcd(u, self.modulus)
        if not (self.base.is_unit(g) or self.base.is_zero(self.one)):
            raise ValueError(f"not a unit: {u!r}")
        if self.base.is_zero(self.one):
            return self.zero
        return self.reduce(self.base.mul(self.base.unit_inverse(g), s))

    def exact_div(self, a, b):
        g, s, _ = self.base.xgcd(b, self.modulus)
        try:
            c = self.base.exact_div(a, g)
        except ValueError:
            raise ValueError(f"{b!r} does not divide {a!r} in {self!r}") from None
        x = self.reduce(self.base.mul(s, c))
        if self.mul(b, x) != self.coerce_payload(a):
            raise ValueError(f"{b!r} does not divide {a!r} in {self!r}")
        return x

    def elements(self):
        base = self.base
        if isinstance(base, IntegerRing):
            return list(range(max(self.modulus, 1)))
        if isinstance(base.field, PrimeField):
            p = base.field.p
            d = len(self.modulus) - 1
            out = []

            def rec(prefix):
                if len(prefix) == d:
                    out.append(base._strip(prefix))
                    return
                for c in range(p):
                    rec(prefix + [c])

            rec([])
            return out
        raise TypeError(f"{self!r} is not finite")

    def format_elem(self, a):
        return self.base.format_elem(a)

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("quot", self.base, self.modulus))

    def __repr__(self):
        return f"{self.base!r}/({self.base.format_elem(self.modulus)})"

    def to_json(self):
        return {
            "kind": "quotient",
            "base": self.base.to_json(),
            "modulus": self.base.format_elem(self.modulus),
        }


ZZ = IntegerRing()


class RingElem:
    """Operator-overloading wrapper around (ring, payload)."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        self.ring = ring
        self.payload = payload

    def _rhs(self, other):
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise ValueError("mixed rings")
            return other.payload
        if isinstance(other, int):
            return self.ring.from_int(other)
        raise TypeError(f"cannot combine with {other!r}")

    def __add__(self, other):
        return RingElem(self.ring, self.ring.add(self.payload, self._rhs(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElem(self.ring, self.ring.sub(self.payload, self._rhs(other)))

    def __rsub__(self, other):
        return RingElem(self.ring, self.ring.sub(self._rhs(other), self.payload))

    def __mul__(self, other):
        return RingElem(self.ring, self.ring.mul(self.payload, self._rhs(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg(self.payload))

    def __pow__(self, n: int):
        return RingElem(self.ring, self.ring.pow(self.payload, n))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.payload == self.ring.from_int(other)
        return (
            isinstance(other, RingElem)
            and other.ring == self.ring
            and other.payload == self.payload
        )

    def __hash__(self):
        return hash((self.ring, self.payload))

    def __bool__(self):
        return not self.ring.is_zero(self.payload)

    def __str__(self):
        return self.ring.format_elem(self.payload)

    def __repr__(self):
        return f"<{self.ring.format_elem(self.payload)} in {self.ring!r}>"


def algebra_split(ring: Ring):
    """(Euclidean base R, modulus payload or None) for an algebra A = R/(f).

    ModRing(n) is treated as Z/(n); plain Euclidean rings have no modulus.
    """
    if isinstance(ring, QuotientRing):
        return ring.base, ring.modulus
    if isinstance(ring, ModRing):
        return ZZ, ring.n
    if ring.is_euclidean:
        return ring, None
    raise ValueError(f"not a supported module algebra: {ring!r}")


def _field_from_json(obj):
    if obj == "rationals":
        return QQ
    if isinstance(obj, dict) and "fp" in obj:
        return GF(obj["fp"])
    raise ValueError(f"unknown coefficient field spec: {obj!r}")


def ring_from_json(obj) -> Ring:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"bad ring spec: {obj!r}")
    kind = obj["kind"]
    if kind == "integers":
        return ZZ
    if kind == "mod":
        return ModRing(int(obj["n"]))
    if kind == "poly":
        return PolyRing(_field_from_json(obj["coeff"]), obj["var"])
    if kind == "quotient":
        base = ring_from_json(obj["base"])
        if isinstance(base, QuotientRing):
            raise ValueError("nested quotients are not supported")
        return QuotientRing(base, base.parse(obj["modulus"]))
    raise ValueError(f"unknown ring kind: {kind!r}")
