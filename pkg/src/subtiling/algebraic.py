"""Exact arithmetic in Q(beta) for beta the dominant eigenvalue of a
substitution matrix.

A NumberField holds a monic irreducible integer minimal polynomial and a
shrinking rational interval that isolates its dominant real root beta > 1.
Field elements are rational coordinate vectors in the power basis
1, beta, ..., beta^(n-1).  Signs of nonzero elements are certified by
rational interval arithmetic: evaluate the coordinate polynomial on the
isolating interval and bisect the interval until zero is excluded.  The
Pisot test counts conjugates in the open unit disk exactly, by a winding
number computed from signed remainder sequences; roots on the unit circle
are detected through the reciprocal-polynomial criterion.  No verdict in
this module ever depends on a float.
"""

from __future__ import annotations

from fractions import Fraction

from . import polys
from .errors import FactorizationFailed


class RatInterval:
    """Closed interval with rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        self.lo = lo
        self.hi = hi

    def __repr__(self):
        return f"RatInterval({self.lo}, {self.hi})"

    @property
    def width(self):
        return self.hi - self.lo

    def __add__(self, other):
        if isinstance(other, RatInterval):
            return RatInterval(self.lo + other.lo, self.hi + other.hi)
        return RatInterval(self.lo + other, self.hi + other)

    def __mul__(self, other):
        if isinstance(other, RatInterval):
            vals = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
            return RatInterval(min(vals), max(vals))
        if other >= 0:
            return RatInterval(self.lo * other, self.hi * other)
        return RatInterval(self.hi * other, self.lo * other)

    def sign(self):
        """+1, -1, or None when the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None


def char_poly(matrix):
    """Monic characteristic polynomial of an integer matrix, ascending
    coefficients, by the Faddeev-LeVerrier recurrence (exact)."""
    m = len(matrix)
    rows = [[Fraction(c) for c in row] for row in matrix]
    coeffs = [Fraction(1)]          # descending: x^m, x^(m-1), ...
    work = [[Fraction(0)] * m for _ in range(m)]
    for k in range(1, m + 1):
        for i in range(m):
            work[i][i] += coeffs[-1]
        work = [[sum(rows[i][t] * work[t][j] for t in range(m))
                 for j in range(m)] for i in range(m)]
        trace = sum(work[i][i] for i in range(m))
        coeffs.append(-trace / k)
    out = []
    for c in reversed(coeffs):
        if c.denominator != 1:
            raise AssertionError("characteristic polynomial not integral")
        out.append(int(c))
    return out


def is_irreducible(p, degree_cap=polys.DEFAULT_DEGREE_CAP):
    """Irreducibility of an integer polynomial over Q."""
    return polys.is_irreducible(p, degree_cap=degree_cap)


class NumberField:
    """Q(beta) with beta > 1 the isolated dominant real root of minpoly."""

    def __init__(self, minpoly, lo, hi):
        minpoly = polys.normalize(minpoly)
        if not minpoly or minpoly[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.minpoly = tuple(int(c) for c in minpoly)
        self.degree = polys.degree(minpoly)
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)
        self.generation = 0
        if self.degree == 1:
            # beta is the integer -minpoly[0]; pin the interval to it.
            root = Fraction(-self.minpoly[0])
            self._lo = self._hi = root
        guard = 0
        while self._lo <= 1:
            if self._hi <= 1 or guard > 512:
                raise ValueError("dominant root is not greater than one")
            self._refine_once()
            guard += 1
        # rows: coordinates of beta^(degree+j) for j = 0..degree-2
        table = []
        if self.degree >= 2:
            base = [Fraction(-c) for c in self.minpoly[:-1]]
            table.append(base)
            row = base
            for _ in range(self.degree - 2):
                overflow = row[-1]
                row = [Fraction(0)] + row[:-1]
                if overflow:
                    row = [a + overflow * b for a, b in zip(row, base)]
                table.append(row)
        self._reduction_rows = table

    # -- interval management -------------------------------------------

    def _refine_once(self):
        if self.degree == 1:
            raise AssertionError("rational beta never needs refinement")
        mid = (self._lo + self._hi) / 2
        v = polys.eval_at(self.minpoly, mid)
        if v == 0:
            raise AssertionError("irreducible minpoly has no rational root")
        lo_sign = polys.eval_at(self.minpoly, self._lo)
        if (v > 0) == (lo_sign > 0):
            self._lo = mid
        else:
            self._hi = mid
        self.generation += 1

    def interval(self):
        return RatInterval(self._lo, self._hi)

    def ensure_width(self, width):
        while self._hi - self._lo > width:
            self._refine_once()

    # -- element constructors ------------------------------------------

    def element(self, coords):
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.degree:
            raise ValueError("coordinate vector longer than field degree")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return FieldElem(self, tuple(coords))

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def rational(self, value):
        return self.element([Fraction(value)])

    def beta(self):
        if self.degree == 1:
            return self.rational(-self.minpoly[0])
        return self.element([0, 1])

    def _reduce(self, coords):
        """Reduce a coordinate list of length <= 2*degree-1 mod minpoly."""
        n = self.degree
        out = list(coords[:n]) + [Fraction(0)] * max(0, n - len(coords))
        for j, c in enumerate(coords[n:]):
            if c:
                row = self._reduction_rows[j]
                for t in range(n):
                    out[t] += c * row[t]
        return tuple(out)

    def __repr__(self):
        return f"NumberField(minpoly={list(self.minpoly)})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)


class FieldElem:
    """Element of Q(beta) as a rational vector in the power basis."""

    __slots__ = ("field", "coords", "_ivl", "_ivl_gen")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords
        self._ivl = None
        self._ivl_gen = -1

    def __repr__(self):
        return f"FieldElem({[str(c) for c in self.coords]})"

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, tuple(a + b for a, b in
                                           zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, tuple(a - b for a, b in
                                           zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.field, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = self.field.degree
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        return FieldElem(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm
        against the minimal polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        minpoly = [Fraction(c) for c in self.field.minpoly]
        a = polys.normalize(list(self.coords))
        # Bezout: u*a + v*minpoly = gcd = constant
        r0, r1 = minpoly, a
        u0, u1 = [], [Fraction(1)]
        while polys.degree(r1) > 0:
            q, r = polys.divmod_rational(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, polys.sub(u0, polys.mul(q, u1))
        if not r1:
            raise AssertionError("element shares a factor with the minpoly")
        c = Fraction(r1[0])
        inv = [Fraction(x) / c for x in u1]
        return FieldElem(self.field, self.field._reduce(inv))

    # -- exact predicates ------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.coords[0]

    def interval(self):
        """Enclosing rational interval, cached per refinement generation."""
        field = self.field
        if self._ivl is not None and self._ivl_gen == field.generation:
            return self._ivl
        if self.is_rational():
            v = self.coords[0]
            ivl = RatInterval(v, v)
        else:
            acc = RatInterval(0, 0)
            x = field.interval()
            for c in reversed(self.coords):
                acc = acc * x + c
            ivl = acc
        self._ivl = ivl
        self._ivl_gen = field.generation
        return ivl

    def sign(self):
        """-1, 0, or +1, certified.

        Zero is a coordinate test.  Otherwise the enclosing interval is
        refined until it excludes zero, which terminates because a nonzero
        vector of degree < n cannot vanish at a root of an irreducible
        polynomial of degree n.
        """
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.coords[0] > 0 else -1
        for _ in range(10_000):
            s = self.interval().sign()
            if s is not None and s != 0:
                return s
            self.field._refine_once()
        raise AssertionError("sign refinement failed to converge")

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0


def arith(a, b, op):
    """Dispatch helper mirroring the arithmetic contract."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def sign(a: FieldElem) -> int:
    return a.sign()


# ---------------------------------------------------------------------------
# Dominant-root field extraction
# ---------------------------------------------------------------------------


def _largest_real_root_interval(factor):
    """Isolating interval of the largest real root of an irreducible monic
    factor, or None when the factor has no real root."""
    if polys.degree(factor) == 1:
        r = Fraction(-factor[0])
        return (r, r)
    iso = polys.isolate_largest_real_root(factor)
    return iso


def _interval_compare(p1, ivl1, p2, ivl2):
    """-1/+1 comparing the real roots isolated in ivl1 and ivl2; the roots
    belong to distinct irreducible polynomials so they are never equal."""
    lo1, hi1 = ivl1
    lo2, hi2 = ivl2
    while True:
        if hi1 < lo2:
            return -1
        if hi2 < lo1:
            return 1
        if hi1 - lo1 >= hi2 - lo2 and hi1 > lo1:
            lo1, hi1 = polys.refine_root_interval(p1, lo1, hi1)
        elif hi2 > lo2:
            lo2, hi2 = polys.refine_root_interval(p2, lo2, hi2)
        else:
            # both intervals are points; distinct rationals
            return -1 if lo1 < lo2 else 1


def perron_factor(p):
    """NumberField generated by the largest real root of a monic integer
    polynomial, e.g. a characteristic polynomial of a primitive matrix."""
    factors = polys.factor_monic(p)
    best = None
    for f in sorted(set(map(tuple, factors))):
        f = list(f)
        ivl = _largest_real_root_interval(f)
        if ivl is None:
            continue
        if best is None or _interval_compare(f, ivl, best[0], best[1]) > 0:
            best = (f, ivl)
    if best is None:
        raise FactorizationFailed("polynomial has no real root")
    minpoly, (lo, hi) = best
    field = NumberField(minpoly, lo, hi)
    return field


# ---------------------------------------------------------------------------
# Pisot test: exact root counting in the unit disk
# ---------------------------------------------------------------------------


def _reciprocal(p):
    return polys.normalize(list(reversed(p)))


def _halved_palindrome(q):
    """For palindromic q of even degree 2k, the degree-k polynomial r with
    q(x) = x^k * r(x + 1/x).  Uses p_j(y) = x^j + x^-j, p_j = y*p_(j-1) - p_(j-2)."""
    n = polys.degree(q)
    k = n // 2
    p_prev = [2]          # p_0
    p_cur = [0, 1]        # p_1
    r = [q[k]]
    for j in range(1, k + 1):
        r = polys.add(r, polys.scale(p_cur if j > 0 else p_prev, q[k + j]))
        p_prev, p_cur = p_cur, polys.sub(polys.mul([0, 1], p_cur), p_prev)
    return r


def has_root_on_unit_circle(q):
    """Exact test for an irreducible integer polynomial.

    A root on the unit circle forces q to agree with its reciprocal up to
    sign.  The anti-palindromic case is reducible for degree >= 2, so only
    the palindromic one remains; there the circle roots correspond to real
    roots of the halved polynomial in (-2, 2), counted by Sturm chains.
    """
    n = polys.degree(q)
    if n == 1:
        return abs(q[0]) == abs(q[1])
    rec = _reciprocal(q)
    if polys.normalize(polys.sub(q, rec)) and \
       polys.normalize(polys.add(q, rec)):
        return False
    if not polys.normalize(polys.add(q, rec)):
        # anti-palindromic: x = 1 is a root, contradicting irreducibility
        return polys.eval_at(q, 1) == 0
    if n % 2 == 1:
        # palindromic odd degree has root -1, contradicting irreducibility
        return polys.eval_at(q, -1) == 0
    r = _halved_palindrome(q)
    return polys.count_real_roots(r, Fraction(-2), Fraction(2)) > 0


def _circle_image(q):
    """Real and imaginary parts of (1+t^2)^n * q(z(t)) where
    z(t) = (1-t^2 + 2it)/(1+t^2) sweeps the unit circle."""
    n = polys.degree(q)
    re, im = [], []
    sq = [1, 0, 1]                      # 1 + t^2
    base_re, base_im = [1, 0, -1], [0, 2]   # (1+it)^2
    pow_re, pow_im = [1], []            # (1+it)^(2k)
    sq_pows = [[1]]
    for _ in range(n):
        sq_pows.append(polys.mul(sq_pows[-1], sq))
    for k, a in enumerate(q):
        if a:
            term_re = polys.scale(polys.mul(pow_re, sq_pows[n - k]), a)
            term_im = polys.scale(polys.mul(pow_im, sq_pows[n - k]), a)
            re = polys.add(re, term_re)
            im = polys.add(im, term_im)
        new_re = polys.sub(polys.mul(pow_re, base_re),
                           polys.mul(pow_im, base_im))
        new_im = polys.add(polys.mul(pow_re, base_im),
                           polys.mul(pow_im, base_re))
        pow_re, pow_im = new_re, new_im
    return re, im


def count_roots_in_open_unit_disk(q):
    """Number of complex roots of q strictly inside the unit circle,
    assuming none lie on the circle.  Winding number of the circle image,
    computed as a signed count of ray crossings via Tarski queries."""
    n = polys.degree(q)
    if n < 1:
        return 0
    re, im = _circle_image(q)
    common = polys.poly_gcd(re, im)
    if polys.count_real_roots(common) > 0:
        raise AssertionError("unexpected root on the unit circle")
    q_at_minus1 = polys.eval_at(q, -1)
    if q_at_minus1 == 0:
        raise ValueError("q(-1) = 0: root on the unit circle")
    crossings = polys.odd_multiplicity_part(im)
    if polys.degree(crossings) < 1:
        return 0
    u = polys.tarski_query(polys.derivative(crossings), crossings)
    w = polys.tarski_query(polys.mul(re, polys.derivative(crossings)),
                           crossings)
    if (u + w) % 2 or (u - w) % 2:
        raise AssertionError("inconsistent crossing parity")
    if q_at_minus1 < 0:
        # count crossings of the positive real axis
        return (u + w) // 2
    return -((u - w) // 2)


def is_pisot(field: NumberField) -> bool:
    """True iff every conjugate of beta other than beta itself has modulus
    strictly below one (a root exactly on the circle fails the test)."""
    q = list(field.minpoly)
    n = field.degree
    if n == 1:
        return -q[0] >= 2
    if has_root_on_unit_circle(q):
        return False
    return count_roots_in_open_unit_disk(q) == n - 1
