"""Exact univariate polynomial arithmetic over Z and Q.

A polynomial is a list of coefficients in ascending degree, so
[a0, a1, a2] stands for a0 + a1*x + a2*x**2.  The zero polynomial is
the empty list.  Coefficients are ints or Fractions; nothing here ever
touches a float.  Degrees stay small (below ~20), so the classical
algorithms are used throughout: signed remainder sequences for Sturm
chains and Tarski queries, Yun's algorithm for squarefree parts, and a
bounded integer factor search for monic polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import DegreeCapExceeded, FactorizationFailed


def normalize(p):
    """Strip trailing zero coefficients."""
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def degree(p):
    return len(p) - 1


def leading(p):
    return p[-1] if p else 0


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return normalize(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    if c == 0:
        return []
    return [a * c for a in p]


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def eval_at(p, x):
    """Horner evaluation; works for int, Fraction, or interval x."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return normalize([i * c for i, c in enumerate(p)][1:])


def divmod_rational(p, q):
    """Exact division with remainder over Q."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in p]
    lead = Fraction(q[-1])
    dq = degree(q)
    quo = [Fraction(0)] * max(len(rem) - dq, 1)
    while len(normalize(rem)) - 1 >= dq:
        rem = normalize(rem)
        k = len(rem) - 1 - dq
        c = rem[-1] / lead
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        rem[-1] = 0
    return normalize(quo), normalize(rem)


def exact_int_divide(p, q):
    """Return p // q when q divides p over Z, else None."""
    quo, rem = divmod_rational(p, q)
    if rem:
        return None
    out = []
    for c in quo:
        if c.denominator != 1:
            return None
        out.append(int(c))
    return normalize(out)


def content(p):
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return g


def primitive_part(p):
    """Integer polynomial divided by its content, leading coefficient > 0."""
    p = normalize(p)
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def to_integer(p):
    """Clear denominators of a rational polynomial; primitive result."""
    lcm = 1
    for c in p:
        c = Fraction(c)
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    return primitive_part([int(Fraction(c) * lcm) for c in p])


def poly_gcd(p, q):
    """Primitive gcd over Z (computed via rational Euclid)."""
    a = [Fraction(c) for c in normalize(p)]
    b = [Fraction(c) for c in normalize(q)]
    while b:
        _, r = divmod_rational(a, b)
        a, b = b, r
    if not a:
        return []
    return to_integer(a)


def squarefree_part(p):
    g = poly_gcd(p, derivative(p))
    if degree(g) < 1:
        return primitive_part(p)
    out = exact_int_divide(primitive_part(p), g)
    if out is None:
        quo, _ = divmod_rational(p, g)
        out = to_integer(quo)
    return out


def yun_squarefree_decomposition(p):
    """Return [(q1, 1), (q2, 2), ...] with p = c * prod qi**i, qi pairwise
    coprime, squarefree, and primitive over Z.

    Intermediate values stay exact rationals; rescaling w and z
    independently would break the z recurrence.
    """
    p = primitive_part(p)
    if degree(p) < 1:
        return []
    dp = derivative(p)
    g = poly_gcd(p, dp)
    if degree(g) < 1:
        return [(p, 1)]
    out = []
    w, _ = divmod_rational(p, g)
    y, _ = divmod_rational(dp, g)
    z = sub(y, derivative(w))
    i = 1
    while degree(w) >= 1:
        if i > degree(p):
            raise AssertionError("squarefree decomposition failed to terminate")
        q = poly_gcd(w, z)
        if degree(q) >= 1:
            out.append((q, i))
            w, _ = divmod_rational(w, q)
            y, _ = divmod_rational(z, q)
        else:
            y = z
        z = sub(y, derivative(w))
        i += 1
    return out


def odd_multiplicity_part(p):
    """Product of the squarefree factors of odd multiplicity, signed so
    that p / result is nonnegative on all of R."""
    parts = yun_squarefree_decomposition(p)
    e = [1]
    for q, i in parts:
        if i % 2 == 1:
            e = mul(e, q)
    if leading(p) * leading(e) < 0:
        e = neg(e)
    return e


def _sign(x):
    return (x > 0) - (x < 0)


def sign_variations(signs):
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _positive_rescale(p):
    """Divide by a positive rational so coefficients become coprime
    integers; the sign pattern is preserved."""
    p = normalize(p)
    if not p:
        return []
    lcm = 1
    for c in p:
        d = Fraction(c).denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(Fraction(c) * lcm) for c in p]
    g = content(ints)
    return [c // g for c in ints]


def signed_remainder_chain(f, g):
    """Generalized Sturm chain f, g, -rem(f, g), ...; entries are rescaled
    by positive rationals, which leaves sign variations unchanged."""
    chain = [_positive_rescale(f)]
    g = _positive_rescale(g)
    if g:
        chain.append(g)
    while len(chain) >= 2 and chain[-1]:
        _, r = divmod_rational(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_positive_rescale(neg(r)))
    return chain


def sturm_chain(p):
    return signed_remainder_chain(p, derivative(p))


def variations_at(chain, x):
    return sign_variations([_sign(eval_at(p, x)) for p in chain])


def variations_at_pos_inf(chain):
    return sign_variations([_sign(leading(p)) for p in chain])


def variations_at_neg_inf(chain):
    return sign_variations(
        [_sign(leading(p)) * (-1) ** (degree(p) % 2) for p in chain]
    )


def count_real_roots(p, lo=None, hi=None):
    """Distinct real roots of p in (lo, hi]; None endpoint means infinity.
    Finite endpoints must not be roots of p."""
    p = squarefree_part(p)
    if degree(p) < 1:
        return 0
    chain = sturm_chain(p)
    va = variations_at_neg_inf(chain) if lo is None else variations_at(chain, lo)
    vb = variations_at_pos_inf(chain) if hi is None else variations_at(chain, hi)
    return va - vb


def tarski_query(g, f):
    """Sum of sign(g(x)) over the distinct real roots x of f."""
    if degree(f) < 1:
        return 0
    chain = signed_remainder_chain(f, mul(derivative(f), g))
    return variations_at_neg_inf(chain) - variations_at_pos_inf(chain)


def cauchy_root_bound(p):
    """Rational B with all real roots of p in [-B, B]."""
    p = normalize(p)
    lead = abs(Fraction(p[-1]))
    m = max((abs(Fraction(c)) for c in p[:-1]), default=Fraction(0))
    return Fraction(1) + m / lead


def isolate_largest_real_root(p):
    """Isolating interval (lo, hi] for the largest real root of p, or None.

    Requires that bisection midpoints are never roots, which holds when p
    has no rational roots (callers factor those out first).
    """
    sf = squarefree_part(p)
    if degree(sf) < 1:
        return None
    chain = sturm_chain(sf)
    bound = cauchy_root_bound(sf)
    lo, hi = -bound, bound
    if variations_at(chain, lo) - variations_at(chain, hi) == 0:
        return None

    def roots_in(a, b):
        return variations_at(chain, a) - variations_at(chain, b)

    # Invariant: the largest root lies in (lo, hi] and none lies above hi.
    while roots_in(lo, hi) > 1:
        mid = (lo + hi) / 2
        if eval_at(sf, mid) == 0:
            raise FactorizationFailed("bisection midpoint hit a rational root")
        if roots_in(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def refine_root_interval(p, lo, hi):
    """One bisection step on an isolating interval with a sign change."""
    mid = (lo + hi) / 2
    s_mid = _sign(eval_at(p, mid))
    if s_mid == 0:
        raise FactorizationFailed("rational root inside isolating interval")
    if s_mid == _sign(eval_at(p, lo)):
        return mid, hi
    return lo, mid


# ---------------------------------------------------------------------------
# Irreducibility and factorization over Z (monic inputs)
# ---------------------------------------------------------------------------

IRREDUCIBILITY_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)
DEFAULT_DEGREE_CAP = 12
DEFAULT_FACTOR_WORK_CAP = 2_000_000


def _modp_normalize(p, m):
    return normalize([c % m for c in p])


def _modp_mul(p, q, m):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = (out[i + j] + a * b) % m
    return normalize(out)


def _modp_rem(p, q, m):
    inv = pow(q[-1], -1, m)
    rem = list(p)
    dq = len(q) - 1
    while len(rem) - 1 >= dq and rem:
        rem = normalize(rem)
        if len(rem) - 1 < dq:
            break
        c = rem[-1] * inv % m
        k = len(rem) - 1 - dq
        for i, b in enumerate(q):
            rem[k + i] = (rem[k + i] - c * b) % m
        rem[-1] = 0
    return normalize(rem)


def _modp_gcd(p, q, m):
    a, b = _modp_normalize(p, m), _modp_normalize(q, m)
    while b:
        a, b = b, _modp_rem(a, b, m)
    return a


def _modp_pow_x(exp, f, m):
    """x**exp mod (f, m) by binary exponentiation."""
    result = [1]
    base = _modp_rem([0, 1], f, m)
    while exp:
        if exp & 1:
            result = _modp_rem(_modp_mul(result, base, m), f, m)
        base = _modp_rem(_modp_mul(base, base, m), f, m)
        exp >>= 1
    return result


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_mod_p(p, m):
    """Rabin's test over F_m; requires the leading coefficient to be a unit."""
    f = _modp_normalize(p, m)
    n = degree(p)
    if len(f) - 1 != n:
        return False
    if n == 1:
        return True
    xq = _modp_pow_x(m**n, f, m)
    if _modp_normalize(sub(xq, [0, 1]), m):
        return False
    for q in _prime_divisors(n):
        xq = _modp_pow_x(m ** (n // q), f, m)
        g = _modp_gcd(_modp_normalize(sub(xq, [0, 1]), m), f, m)
        if degree(g) >= 1:
            return False
    return True


def integer_roots(p):
    """Integer roots of a primitive integer polynomial, with multiplicity."""
    p = normalize(p)
    roots = []
    while p and p[0] == 0:
        roots.append(0)
        p = p[1:]
    if degree(p) < 1:
        return roots, p
    cands = set()
    a0 = abs(p[0])
    for d in range(1, isqrt(a0) + 1):
        if a0 % d == 0:
            cands.update((d, a0 // d, -d, -(a0 // d)))
    for r in sorted(cands):
        while degree(p) >= 1 and eval_at(p, r) == 0:
            roots.append(r)
            p = exact_int_divide(p, [-r, 1])
    return roots, p


def _divisor_pairs(n):
    n = abs(n)
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.extend((d, -d))
            if d != n // d:
                out.extend((n // d, -(n // d)))
    return sorted(out)


def _l2_norm_ceiling(p):
    s = sum(c * c for c in p)
    r = isqrt(s)
    return r if r * r == s else r + 1


def _find_monic_factor(p, work_budget):
    """Smallest-degree monic integer factor of monic p with no integer
    roots, or None if p is irreducible.  Coefficients are bounded by the
    Landau-Mignotte bound 2**d * |p|_2; candidates are pruned by requiring
    g(0) | p(0), g(1) | p(1) and g(-1) | p(-1)."""
    n = degree(p)
    norm = _l2_norm_ceiling(p)
    p0, p1, pm1 = p[0], eval_at(p, 1), eval_at(p, -1)
    work = 0
    for d in range(2, n // 2 + 1):
        bound = (1 << d) * norm
        const_cands = [c for c in _divisor_pairs(p0) if abs(c) <= bound]
        mids = range(-bound, bound + 1)

        def candidates(level, coeffs):
            nonlocal work
            if level == d:
                g = coeffs + [1]
                g1, gm1 = eval_at(g, 1), eval_at(g, -1)
                if g1 == 0 or gm1 == 0:
                    return None
                if p1 % g1 != 0 or pm1 % gm1 != 0:
                    return None
                if exact_int_divide(p, g) is not None:
                    return g
                return None
            pool = const_cands if level == 0 else mids
            for c in pool:
                work += 1
                if work > work_budget:
                    raise FactorizationFailed(
                        f"factor search exceeded {work_budget} candidates"
                    )
                found = candidates(level + 1, coeffs + [c])
                if found is not None:
                    return found
            return None

        g = candidates(0, [])
        if g is not None:
            return g
    return None


def is_irreducible(p, degree_cap=DEFAULT_DEGREE_CAP,
                   work_cap=DEFAULT_FACTOR_WORK_CAP):
    """Irreducibility over Q for an integer polynomial of degree >= 1.

    Fast paths: rational root test, then reduction mod small primes.
    Complete path (monic inputs): bounded search for an integer factor.
    """
    p = primitive_part(p)
    n = degree(p)
    if n < 1:
        return False
    if n > degree_cap:
        raise DegreeCapExceeded(f"degree {n} exceeds cap {degree_cap}")
    if n == 1:
        return True
    if p[0] == 0:
        return False
    roots, _ = integer_roots(p)
    if roots:
        return False
    if n <= 3:
        # No rational roots: degree 2 and 3 are settled already
        # (monic + primitive means rational roots are integral).
        if abs(p[-1]) == 1:
            return True
    for m in IRREDUCIBILITY_PRIMES:
        if p[-1] % m != 0 and is_irreducible_mod_p(p, m):
            return True
    if abs(p[-1]) != 1:
        raise FactorizationFailed(
            "complete factor search supports monic polynomials only"
        )
    q = p if p[-1] == 1 else neg(p)
    return _find_monic_factor(q, work_cap) is None


def factor_monic(p, work_cap=DEFAULT_FACTOR_WORK_CAP):
    """Irreducible monic integer factors of a monic integer polynomial,
    with multiplicity, sorted by (degree, coefficients)."""
    if not p or p[-1] != 1:
        raise ValueError("factor_monic expects a monic integer polynomial")
    factors = []
    roots, rest = integer_roots(p)
    factors.extend([-r, 1] for r in roots)
    stack = [rest] if degree(rest) >= 1 else []
    while stack:
        q = stack.pop()
        if degree(q) == 1:
            factors.append(q)
            continue
        reducible = True
        for m in IRREDUCIBILITY_PRIMES:
            if is_irreducible_mod_p(q, m):
                reducible = False
                break
        if not reducible:
            factors.append(q)
            continue
        g = _find_monic_factor(q, work_cap)
        if g is None:
            factors.append(q)
        else:
            stack.append(g)
            stack.append(exact_int_divide(q, g))
    return sorted(factors, key=lambda f: (degree(f), tuple(f)))
