"""Elementary number theory helpers: primality, prime generation, factoring.

All routines are deterministic.  Miller-Rabin with the fixed base set
[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] is a proven primality test below
3.317e24; above that bound the same bases are used as a strong probable-prime
test (no composite is known to pass them, and nothing desk-scale gets there).
"""

from __future__ import annotations

import math

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, by sieve."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def _pollard_brent(n: int, seed_c: int, max_iters: int) -> int | None:
    """Brent's cycle variant of Pollard rho; returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    y, c, m = 2, seed_c, 128
    g = r = q = 1
    x = ys = y
    count = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
            count += m
            if count > max_iters:
                return None
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def factorize(
    n: int, *, trial_bound: int = 100_000, rho_iters: int = 2_000_000
) -> tuple[dict[int, int], int]:
    """Factor |n| into primes.

    Returns (factors, cofactor) where factors maps prime -> exponent and
    cofactor is 1 on complete success, otherwise an unfactored composite
    remainder (the rho budget was exhausted).  Deterministic.
    """
    n = abs(n)
    factors: dict[int, int] = {}
    if n <= 1:
        return factors, 1
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p <= trial_bound:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += wheel[i]
        i = (i + 1) % 8
    if n == 1:
        return factors, 1
    stack = [n]
    cofactor = 1
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend([root, root])
            continue
        found = None
        for c in (1, 3, 5, 7, 11):
            found = _pollard_brent(m, c, rho_iters)
            if found is not None and found not in (1, m):
                break
            found = None
        if found is None:
            cofactor *= m
        else:
            stack.extend([found, m // found])
    return factors, cofactor
