"""Arithmetic in GF(p) and its quadratic extension GF(p^2).

The extension is realized as F_p(alpha) with alpha^2 = theta, where theta
is the smallest primitive root mod p; elements are pairs (u, w) standing
for u + w*alpha.  The norm of u + w*alpha is u^2 - theta*w^2, and the
norm-1 elements form the cyclic subgroup of order p + 1.
"""

from __future__ import annotations

from .errors import BadDivisor, NotPrime

Fp2 = tuple[int, int]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def multiplicative_order(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    x, n = a, 1
    while x != 1:
        x = x * a % p
        n += 1
    return n


def primitive_root(p: int) -> int:
    """Smallest positive primitive root mod p."""
    require_prime(p)
    if p == 2:
        return 1
    for g in range(2, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise NotPrime(f"no primitive root found; {p} is not prime")  # pragma: no cover


def fp2_mul(a: Fp2, b: Fp2, p: int, theta: int) -> Fp2:
    u1, w1 = a
    u2, w2 = b
    return ((u1 * u2 + theta * w1 * w2) % p, (u1 * w2 + u2 * w1) % p)


def fp2_pow(a: Fp2, e: int, p: int, theta: int) -> Fp2:
    acc: Fp2 = (1, 0)
    base = a
    while e > 0:
        if e & 1:
            acc = fp2_mul(acc, base, p, theta)
        base = fp2_mul(base, base, p, theta)
        e >>= 1
    return acc


def fp2_order(a: Fp2, p: int, theta: int) -> int:
    if a == (0, 0):
        raise ValueError("0 has no multiplicative order")
    x, n = a, 1
    while x != (1, 0):
        x = fp2_mul(x, a, p, theta)
        n += 1
    return n


def fp2_norm(a: Fp2, p: int, theta: int) -> int:
    u, w = a
    return (u * u - theta * w * w) % p


def fp2_generator(p: int, theta: int) -> Fp2:
    """Smallest (u, w) in lexicographic order generating GF(p^2)^*."""
    target = p * p - 1
    for u in range(p):
        for w in range(p):
            if (u, w) == (0, 0):
                continue
            if fp2_order((u, w), p, theta) == target:
                return (u, w)
    raise NotPrime(f"GF({p}^2) has no generator; {p} is not prime")  # pragma: no cover


def norm_one_element(p: int, n: int) -> Fp2:
    """A norm-1 element of GF(p^2)^* of multiplicative order exactly n.

    Requires n | p + 1.  Takes z = g^(p-1) for the canonical generator g of
    GF(p^2)^* (z generates the norm-1 subgroup, of order p + 1), raises it
    to (p+1)/n, and returns the lexicographically smaller of the result and
    its inverse (the two are field conjugates and either is a valid choice).
    """
    require_prime(p)
    if p == 2:
        # alpha^2 = theta = 1 is not a field extension of F_2
        raise BadDivisor("norm-1 construction requires an odd prime")
    if n < 1 or (p + 1) % n != 0:
        raise BadDivisor(f"n = {n} does not divide p + 1 = {p + 1}")
    theta = primitive_root(p)
    g = fp2_generator(p, theta)
    z = fp2_pow(g, p - 1, p, theta)
    w = fp2_pow(z, (p + 1) // n, p, theta)
    assert fp2_order(w, p, theta) == n
    assert fp2_norm(w, p, theta) == 1 % p
    w_inv = fp2_pow(w, n - 1, p, theta)
    return min(w, w_inv)


def diag_param(p: int, n: int) -> int:
    """theta^((p-1)/n): an element of GF(p)^* of order exactly n (n | p-1)."""
    require_prime(p)
    if n < 1 or (p - 1) % n != 0:
        raise BadDivisor(f"n = {n} does not divide p - 1 = {p - 1}")
    theta = primitive_root(p)
    t = pow(theta, (p - 1) // n, p)
    assert multiplicative_order(t, p) == n
    return t
