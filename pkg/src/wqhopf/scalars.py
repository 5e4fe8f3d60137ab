"""Exact arithmetic in cyclotomic fields, plus a tolerance-based complex backend.

An exact scalar is an element of Q(zeta_n) stored as a rational coordinate
vector over the power basis 1, zeta, ..., zeta^(phi(n)-1), always reduced
modulo the n-th cyclotomic polynomial.  No floating point enters any exact
code path; irrational constants (sqrt 2, the golden ratio, ...) are written
as cyclotomic expressions, e.g. sqrt(5) = z5 + z5^4 - z5^2 - z5^3.

Two backends:

* ``Cyc``    -- exact; equality is exact, tolerance arguments are ignored.
* ``Approx`` -- a complex double; equality means |difference| <= tol.

Mixing backends in one operation raises ``MixedBackendError``.  Canonical
form (used for hashing and serialization) rewrites a value over the smallest
cyclotomic field that contains it.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


class ScalarError(ValueError):
    """Invalid scalar construction or operation."""


class MixedBackendError(ScalarError):
    """Exact and approximate scalars were combined in one operation."""


# ---------------------------------------------------------------------------
# dense polynomial helpers over Fraction, coefficients in ascending degree
# ---------------------------------------------------------------------------

def _ptrim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] += x * y
    return _ptrim(out)


def _psub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _ptrim(out)


def _pdivmod(a, b):
    # b must be nonzero; exact division over Q
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = Fraction(1) / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coef = a[k + len(b) - 1] * inv_lead
        if coef != 0:
            q[k] = coef
            for j, y in enumerate(b):
                a[k + j] -= coef * y
    return _ptrim(q), _ptrim(a)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n <= 0:
        raise ScalarError(f"conductor must be positive, got {n}")
    out, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int):
    """Coefficients of Phi_n, ascending, as Fractions."""
    if n == 1:
        return (Fraction(-1), Fraction(1))
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]   # x^n - 1
    den = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            den = _pmul(den, list(cyclotomic_polynomial(d)))
    q, r = _pdivmod(num, den)
    assert not r, "cyclotomic division must be exact"
    return tuple(q)


@lru_cache(maxsize=None)
def _zeta_power(n: int, k: int):
    """Coordinates of zeta_n^k over the power basis, as a tuple of Fractions."""
    k %= n
    phi = euler_phi(n)
    if k < phi:
        v = [Fraction(0)] * phi
        v[k] = Fraction(1)
        return tuple(v)
    poly = [Fraction(0)] * k + [Fraction(1)]
    _, r = _pdivmod(poly, list(cyclotomic_polynomial(n)))
    r = list(r) + [Fraction(0)] * (phi - len(r))
    return tuple(r)


def _reduce(n, coeffs):
    """Reduce arbitrary-length coordinates mod Phi_n to length phi(n)."""
    phi = euler_phi(n)
    out = [Fraction(0)] * phi
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        zk = _zeta_power(n, k)
        for j in range(phi):
            out[j] += c * zk[j]
    return tuple(out)


@lru_cache(maxsize=None)
def _divisors(n: int):
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def _subfield_matrix(n: int, d: int):
    """Columns are the Q(zeta_n)-coordinates of zeta_d^j, j < phi(d)."""
    step = n // d
    cols = [_zeta_power(n, step * j) for j in range(euler_phi(d))]
    # row-major phi(n) x phi(d)
    return tuple(tuple(col[i] for col in cols) for i in range(euler_phi(n)))


def _solve_exact(A, b):
    """Solve A x = b over Q (A row-major, possibly rectangular).

    Returns the coordinate list or None when inconsistent.
    """
    rows = [list(r) + [v] for r, v in zip(A, b)]
    nr, nc = len(rows), len(A[0]) if A else 0
    piv_cols = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == nr:
            break
    for i in range(r, nr):
        if rows[i][-1] != 0:
            return None
    x = [Fraction(0)] * nc
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][-1]
    return x


class Cyc:
    """An exact cyclotomic number.

    Arithmetic stays in the ambient conductor (conductors only grow, by lcm);
    ``canonical()`` rewrites over the smallest containing field.  Equality
    compares after lifting both sides to the least common conductor.
    """

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs, _reduced=False):
        if n <= 0:
            raise ScalarError(f"conductor must be positive, got {n}")
        self.n = n
        if _reduced:
            self.c = tuple(coeffs)
        else:
            self.c = _reduce(n, [Fraction(x) for x in coeffs])

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(q) -> "Cyc":
        return Cyc(1, (Fraction(q),), _reduced=True)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyc":
        return Cyc(n, _zeta_power(n, k), _reduced=True)

    # -- structure ---------------------------------------------------------

    def lift(self, m: int) -> "Cyc":
        """Rewrite over Q(zeta_m); m must be a multiple of the conductor."""
        if m == self.n:
            return self
        if m % self.n:
            raise ScalarError(f"cannot lift conductor {self.n} into {m}")
        step = m // self.n
        phi = euler_phi(m)
        out = [Fraction(0)] * phi
        for j, cj in enumerate(self.c):
            if cj == 0:
                continue
            zj = _zeta_power(m, step * j)
            for i in range(phi):
                out[i] += cj * zj[i]
        return Cyc(m, out, _reduced=True)

    def canonical(self) -> "Cyc":
        """The same value over the smallest cyclotomic field containing it."""
        if self.n == 1:
            return self
        if all(x == 0 for x in self.c[1:]):
            return Cyc(1, (self.c[0],), _reduced=True)
        for d in _divisors(self.n)[:-1]:
            if d == 1:
                continue
            sol = _solve_exact(_subfield_matrix(self.n, d), self.c)
            if sol is not None:
                return Cyc(d, sol, _reduced=True)
        return self

    @property
    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ScalarError(f"{self!r} is not rational")
        return self.c[0]

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(x == 0 for x in self.c)

    def galois(self, k: int) -> "Cyc":
        """Apply zeta -> zeta^k; requires gcd(k, n) = 1."""
        if gcd(k, self.n) != 1:
            raise ScalarError(f"galois exponent {k} not coprime to {self.n}")
        phi = euler_phi(self.n)
        out = [Fraction(0)] * phi
        for j, cj in enumerate(self.c):
            if cj == 0:
                continue
            zj = _zeta_power(self.n, (j * k) % self.n)
            for i in range(phi):
                out[i] += cj * zj[i]
        return Cyc(self.n, out, _reduced=True)

    def conjugate(self) -> "Cyc":
        return self.galois(self.n - 1) if self.n > 1 else self

    def embed(self) -> complex:
        """Image under zeta_n -> exp(2 pi i / n)."""
        return sum(
            float(cj) * cmath.exp(2j * cmath.pi * j / self.n)
            for j, cj in enumerate(self.c) if cj != 0
        ) or 0j

    def sort_key(self):
        s = self.canonical()
        return (s.n, s.c)

    # -- arithmetic --------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, Cyc):
            pass
        elif isinstance(other, (int, Fraction)):
            other = Cyc.rational(other)
        elif isinstance(other, Approx):
            raise MixedBackendError("cannot mix exact and approximate scalars")
        else:
            return None, None
        m = self.n * other.n // gcd(self.n, other.n)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return Cyc(a.n, tuple(x + y for x, y in zip(a.c, b.c)), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, tuple(-x for x in self.c), _reduced=True)

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return Cyc(a.n, tuple(x - y for x, y in zip(a.c, b.c)), _reduced=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyc(self.n, tuple(x * q for x in self.c), _reduced=True)
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if b.is_rational:
            q = b.c[0]
            return Cyc(a.n, tuple(x * q for x in a.c), _reduced=True)
        conv = [Fraction(0)] * (2 * len(a.c) - 1)
        for i, x in enumerate(a.c):
            if x == 0:
                continue
            for j, y in enumerate(b.c):
                if y != 0:
                    conv[i + j] += x * y
        return Cyc(a.n, _reduce(a.n, conv), _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.is_rational:
            return Cyc.rational(Fraction(1) / self.c[0])
        # extended euclid in Q[x] against Phi_n; invariant r_i = s_i * a mod Phi_n
        a = _ptrim(list(self.c))
        b = list(cyclotomic_polynomial(self.n))
        r0, r1 = a, b
        s0, s1 = [Fraction(1)], []
        while r1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # Phi_n is irreducible, so the gcd is a nonzero rational
        g = r0[0]
        return Cyc(self.n, [x / g for x in s0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return Cyc(self.n, tuple(x / q for x in self.c), _reduced=True)
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return Cyc.rational(other) / self if isinstance(other, (int, Fraction)) else NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyc.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(other)
        if isinstance(other, Approx):
            raise MixedBackendError("cannot compare exact and approximate scalars")
        if not isinstance(other, Cyc):
            return NotImplemented
        if self.n == other.n:
            return self.c == other.c
        a, b = self._pair(other)
        return a.c == b.c

    def __hash__(self):
        s = self.canonical()
        return hash((s.n, s.c))

    def __repr__(self):
        s = self.canonical()
        if s.is_rational:
            return f"Cyc({s.c[0]})"
        terms = ", ".join(str(x) for x in s.c)
        return f"Cyc(n={s.n}, [{terms}])"


class Approx:
    """A complex double standing in for a scalar; compared with a tolerance."""

    __slots__ = ("z",)

    def __init__(self, z):
        self.z = complex(z)

    def is_zero(self, tol: float = 0.0) -> bool:
        return abs(self.z) <= tol

    @staticmethod
    def rational(q) -> "Approx":
        return Approx(float(Fraction(q)))

    def embed(self) -> complex:
        return self.z

    @property
    def is_rational(self) -> bool:
        return abs(self.z.imag) < 1e-12

    def canonical(self) -> "Approx":
        return self

    def _lift(self, other):
        if isinstance(other, Approx):
            return other
        if isinstance(other, (int, float, Fraction, complex)):
            return Approx(complex(other))
        if isinstance(other, Cyc):
            raise MixedBackendError("cannot mix exact and approximate scalars")
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Approx(self.z + o.z)

    __radd__ = __add__

    def __neg__(self):
        return Approx(-self.z)

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Approx(self.z - o.z)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Approx(self.z * o.z)

    __rmul__ = __mul__

    def inverse(self) -> "Approx":
        if self.z == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return Approx(1 / self.z)

    def __truediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Approx(self.z / o.z)

    def __rtruediv__(self, other):
        return Approx(other) / self

    def __pow__(self, k: int):
        return Approx(self.z ** k)

    def __eq__(self, other):
        if isinstance(other, Cyc):
            raise MixedBackendError("cannot compare exact and approximate scalars")
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.z == o.z

    def __hash__(self):
        return hash(self.z)

    def __repr__(self):
        return f"Approx({self.z!r})"


# ---------------------------------------------------------------------------
# public helpers
# ---------------------------------------------------------------------------

def make_scalar(conductor: int, coeffs) -> Cyc:
    """Build an exact scalar from rational coordinates; result is canonical."""
    if not isinstance(conductor, int) or conductor <= 0:
        raise ScalarError(f"conductor must be a positive integer, got {conductor!r}")
    try:
        cs = [Fraction(x) for x in coeffs]
    except (ValueError, TypeError) as exc:
        raise ScalarError(f"non-rational coefficient in {coeffs!r}") from exc
    return Cyc(conductor, cs).canonical()


def scalars_equal(a, b, tol: float = 0.0) -> bool:
    ea, eb = isinstance(a, Cyc), isinstance(b, Cyc)
    if ea and eb:
        return a == b
    if not ea and not eb:
        return abs(a.embed() - b.embed()) <= tol
    raise MixedBackendError("cannot compare exact and approximate scalars")


def zero_like(x):
    return Cyc.rational(0) if isinstance(x, Cyc) else Approx(0)


def one_like(x):
    return Cyc.rational(1) if isinstance(x, Cyc) else Approx(1)


def from_int_like(x, k):
    return Cyc.rational(k) if isinstance(x, Cyc) else Approx(k)


def scalar_to_json(x):
    if isinstance(x, Cyc):
        s = x.canonical()
        return {"conductor": s.n, "coeffs": [str(c) for c in s.c]}
    return {"re": x.z.real, "im": x.z.imag}


def scalar_from_json(obj):
    if "conductor" in obj:
        return make_scalar(int(obj["conductor"]), [Fraction(c) for c in obj["coeffs"]])
    if "re" in obj:
        return Approx(complex(float(obj["re"]), float(obj.get("im", 0.0))))
    raise ScalarError(f"unrecognized scalar object {obj!r}")


def to_approx(x) -> Approx:
    return Approx(x.embed()) if isinstance(x, Cyc) else x


@lru_cache(maxsize=None)
def roots_of_unity(n: int):
    """All roots of unity inside Q(zeta_n): the group generated by -1 and zeta_n."""
    out = {}
    for j in range(n):
        for s in (1, -1):
            z = Cyc.zeta(n, j) * s
            out[(z.n, z.c)] = z
    return tuple(out.values())


@lru_cache(maxsize=None)
def _embedding_inverse(n: int):
    """Inverse of the complex matrix V[k][j] = zeta_n^(k j), k coprime to n."""
    units = [k for k in range(1, n + 1) if gcd(k, n) == 1]
    phi = len(units)
    V = [[cmath.exp(2j * cmath.pi * k * j / n) for j in range(phi)] for k in units]
    # Gauss-Jordan with partial pivoting
    aug = [row[:] + [1.0 + 0j if i == r else 0j for i in range(phi)]
           for r, row in enumerate(V)]
    for c in range(phi):
        p = max(range(c, phi), key=lambda i: abs(aug[i][c]))
        aug[c], aug[p] = aug[p], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for i in range(phi):
            if i != c:
                g = aug[i][c]
                if g != 0:
                    aug[i] = [x - g * y for x, y in zip(aug[i], aug[c])]
    inv = [row[phi:] for row in aug]
    return units, inv


def sqrt_in_field(x: Cyc, n: int):
    """A square root of x inside Q(zeta_n), or None when none exists there.

    Candidate coordinates are recognized from the Galois conjugates of x
    (each conjugate of the root is one of the two complex square roots);
    every candidate is verified exactly before being returned.
    """
    x = x.lift(n) if n % x.n == 0 else x.lift(n * x.n // gcd(n, x.n))
    n = x.n
    if x.is_zero():
        return Cyc.rational(0)
    units, inv = _embedding_inverse(n)
    phi = len(units)
    roots = []
    for k in units:
        w = x.galois(k).embed()
        roots.append(cmath.sqrt(w))
    for mask in range(1 << (phi - 1)):
        b = [roots[0]]
        for i in range(1, phi):
            b.append(roots[i] if not (mask >> (i - 1)) & 1 else -roots[i])
        coeffs = []
        ok = True
        for row in inv:
            v = sum(r * bi for r, bi in zip(row, b))
            if abs(v.imag) > 1e-7:
                ok = False
                break
            coeffs.append(Fraction(v.real).limit_denominator(4096))
        if not ok:
            continue
        cand = Cyc(n, coeffs)
        if cand * cand == x:
            return cand
    return None
