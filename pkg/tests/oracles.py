"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written from scratch against the defining
formulas (modular arithmetic, explicit matrix entries, exhaustive triple
searches) without importing any ringlab search or construction code, so the
two sides can disagree when either is wrong.
"""

from math import gcd


# --- modular arithmetic facts ------------------------------------------------

def zn_units(n):
    return sorted(a for a in range(n) if gcd(a, n) == 1)


def zn_nilpotents(n):
    return sorted(x for x in range(n) if _zn_is_nilpotent(x, n))


def _zn_is_nilpotent(a, n):
    x = a % n
    for _ in range(n + 1):
        if x == 0:
            return True
        x = (x * a) % n
    return False


def zn_idempotents(n):
    return sorted(a for a in range(n) if (a * a) % n == a)


def zn_radical(n):
    """J(Z_n) = multiples of the product of primes dividing n."""
    r = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            r *= p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        r *= m
    return sorted(range(0, n, r)) if r < n or n == 1 else [0]


# --- independent 2x2 matrix arithmetic over Z_n -------------------------------

def mat_mul(A, B, n):
    (a, b, c, d), (e, f, g, h) = A, B
    return ((a * e + b * g) % n, (a * f + b * h) % n,
            (c * e + d * g) % n, (c * f + d * h) % n)


def mat_add(A, B, n):
    return tuple((x + y) % n for x, y in zip(A, B))


def mat_neg(A, n):
    return tuple((-x) % n for x in A)


# --- independent upper triangular 2x2 over Z_n (entries a, b, d) --------------

def tri_mul(X, Y, n):
    (a, b, d), (e, f, h) = X, Y
    return ((a * e) % n, (a * f + b * h) % n, (d * h) % n)


def tri_add(X, Y, n):
    return tuple((x + y) % n for x, y in zip(X, Y))


# --- generic exhaustive facts from raw operations -----------------------------

def is_nilpotent(order, mul, a):
    x = a
    for _ in range(order + 1):
        if x == 0:
            return True
        x = mul(x, a)
    return False


def idempotent_set(order, mul):
    return [e for e in range(order) if mul(e, e) == e]


def nilpotent_set(order, mul):
    return [a for a in range(order) if is_nilpotent(order, mul, a)]


def unit_set(order, mul, one):
    out = []
    for u in range(order):
        if any(mul(u, v) == one and mul(v, u) == one for v in range(order)):
            out.append(u)
    return out


def wncl_triples(order, add, mul, neg, a):
    """All (e, q, x) with e idempotent, q nilpotent, a - e - q = e*x*a,
    found by a plain triple loop."""
    def sub(u, v):
        return add(u, neg(v))
    triples = []
    for e in idempotent_set(order, mul):
        for q in nilpotent_set(order, mul):
            target = sub(sub(a, e), q)
            for x in range(order):
                if mul(mul(e, x), a) == target:
                    triples.append((e, q, x))
    return triples


def has_wncl(order, add, mul, neg, a):
    return bool(wncl_triples(order, add, mul, neg, a))


def has_nil_clean(order, add, mul, neg, a):
    def sub(u, v):
        return add(u, neg(v))
    return any(is_nilpotent(order, mul, sub(a, e))
               for e in idempotent_set(order, mul))


def has_clean(order, add, mul, neg, one, a):
    def sub(u, v):
        return add(u, neg(v))
    units = set(unit_set(order, mul, one))
    return any(sub(a, e) in units for e in idempotent_set(order, mul))


def has_exchange(order, add, mul, neg, one, a):
    def sub(u, v):
        return add(u, neg(v))
    for e in idempotent_set(order, mul):
        if any(mul(r, a) == e for r in range(order)) and \
           any(mul(s, sub(one, a)) == sub(one, e) for s in range(order)):
            return True
    return False


def pi_regular_pairs(order, mul, a):
    """All (n, r) with a^n * r * a^n = a^n for n up to the point the power
    sequence repeats, computed by naive repeated multiplication."""
    pairs = []
    powers = []
    x = a
    seen = {}
    n = 1
    while x not in seen:
        seen[x] = n
        powers.append(x)
        x = mul(x, a)
        n += 1
    for n, an in enumerate(powers, 1):
        for r in range(order):
            if mul(mul(an, r), an) == an:
                pairs.append((n, r))
    return pairs


def has_strongly_regular(order, mul, a):
    return any(mul(mul(a, a), r) == a for r in range(order))
