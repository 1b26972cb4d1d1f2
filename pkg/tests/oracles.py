"""Independent reference implementations used to freeze expected values.

None of these share code with the package: curve arithmetic uses Fermat
inverses and Euler's criterion, Hilbert functions come from multiplying power
series, and counts come from itertools.
"""

from itertools import product


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def curve_order(p, a, b):
    """1 + sum over x of (1 + legendre(x^3 + ax + b))."""
    return 1 + sum(1 + legendre(x**3 + a * x + b, p) for x in range(p))


def curve_points(p, a, b):
    pts = [None]
    for x in range(p):
        for y in range(p):
            if (y * y - x**3 - a * x - b) % p == 0:
                pts.append((x, y))
    return pts


def affine_add(p, a, P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if P == Q:
        m = (3 * x1 * x1 + a) * pow(2 * y1, p - 2, p) % p
    else:
        m = (y2 - y1) * pow(x2 - x1, p - 2, p) % p
    x3 = (m * m - x1 - x2) % p
    return (x3, (m * (x1 - x3) - y1) % p)


def repeated_add(p, a, k, P):
    if k < 0:
        k, P = -k, (None if P is None else (P[0], (-P[1]) % p))
    acc = None
    for _ in range(k):
        acc = affine_add(p, a, acc, P)
    return acc


def series_coefficients(factors, n_max):
    """Coefficients of prod 1/(1 - t^d) for d in factors, up to t^n_max."""
    coeffs = [1] + [0] * n_max
    for d in factors:
        for n in range(d, n_max + 1):
            coeffs[n] += coeffs[n - d]
    return coeffs


def count_exponents(a, b):
    n = a + b
    if n < 0:
        return 0
    amax = n - (b + 1) // 2
    bmax = n - b // 2
    return sum(
        1
        for al, be in product(range(n + 1), repeat=2)
        if al + be <= n and al <= amax and be <= bmax
    )


def count_admissible_monomials(n, h):
    total = 0
    for al, be in product(range(n + 1), repeat=2):
        lam = n - al - be
        if lam < 0:
            continue
        if (h + 1) // 2 <= be + lam and h // 2 <= al + lam:
            total += 1
    return total
