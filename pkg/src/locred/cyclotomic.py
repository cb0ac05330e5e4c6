"""Gaussian-period subfields of prime cyclotomic fields, exactly.

Elements of Z[zeta_ell] are integer vectors of length ell over the basis
zeta^0..zeta^(ell-1), subject only to the relation 1 + zeta + ... +
zeta^(ell-1) = 0.  A vector is a rational integer iff its coordinates on
zeta^1..zeta^(ell-1) agree, the value then being v[0] - v[1].  Products are
cyclic convolutions of exponents; nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCoprime, NotDividing, NotPrime, Ramified, SearchExhausted
from .intpoly import IntPolynomial
from .ntheory import is_prime, next_prime
from .ratfactor import z_irreducible


def _cyc_mul(u: list[int], v: list[int], ell: int) -> list[int]:
    out = [0] * ell
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    k = i + j
                    if k >= ell:
                        k -= ell
                    out[k] += a * b
    return out


def _cyc_rational(v: list[int]) -> int | None:
    """The rational integer this vector represents, or None."""
    first = v[1]
    for c in v[2:]:
        if c != first:
            return None
    return v[0] - first


def smallest_primitive_root(ell: int) -> int:
    order = ell - 1
    prime_factors = []
    m = order
    d = 2
    while d * d <= m:
        if m % d == 0:
            prime_factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        prime_factors.append(m)
    for g in range(2, ell):
        if all(pow(g, order // r, ell) != 1 for r in prime_factors):
            return g
    raise AssertionError("no primitive root found")  # pragma: no cover


@dataclass(frozen=True)
class PeriodField:
    """The degree-d subfield of Q(zeta_ell) generated by Gaussian periods.

    coset_reps are g^0..g^(d-1) for the smallest primitive root g mod ell;
    the periods are eta_i = sum of zeta^a over a in g^i * H_d, H_d the
    index-d subgroup of (Z/ell)^*.
    """

    ell: int
    d: int
    coset_reps: tuple[int, ...]
    minpoly: IntPolynomial


def period_minpoly(ell: int, d: int) -> PeriodField:
    """Exact minimal polynomial of the Gaussian periods; monic of degree d,
    verified irreducible over Q."""
    if not is_prime(ell):
        raise NotPrime(f"{ell} is not prime")
    if d < 1 or (ell - 1) % d != 0:
        raise NotDividing(f"{d} does not divide {ell} - 1")
    g = smallest_primitive_root(ell)
    h = (ell - 1) // d
    subgroup = [pow(g, d * j, ell) for j in range(h)]
    reps = tuple(pow(g, i, ell) for i in range(d))
    periods = []
    for rep in reps:
        vec = [0] * ell
        for s in subgroup:
            vec[rep * s % ell] += 1
        periods.append(vec)
    # expand prod (x - eta_i) with vector coefficients
    coeffs: list[list[int]] = [[0] * ell]
    coeffs[0][0] = 1  # the constant 1
    for eta in periods:
        nxt = [[0] * ell for _ in range(len(coeffs) + 1)]
        for k, c in enumerate(coeffs):
            nxt[k + 1] = [a + b for a, b in zip(nxt[k + 1], c)]
            prod = _cyc_mul(c, eta, ell)
            nxt[k] = [a - b for a, b in zip(nxt[k], prod)]
        coeffs = nxt
    ints = []
    for vec in coeffs:
        val = _cyc_rational(vec)
        if val is None:  # pragma: no cover - Galois invariance guarantee
            raise AssertionError("symmetric function did not reduce to an integer")
        ints.append(val)
    minpoly = IntPolynomial(ints)
    assert minpoly.is_monic() and minpoly.degree == d
    if d >= 2:
        assert minpoly.coeffs[d - 1] == 1, "period sum must be -1"
    if not z_irreducible(minpoly):  # pragma: no cover - theory guarantee
        raise AssertionError("period minimal polynomial must be irreducible")
    return PeriodField(ell, d, reps, minpoly)


def is_dth_power_mod(a: int, r: int, d: int) -> bool:
    """True iff a is a d-th power modulo the prime r (Euler criterion)."""
    if not is_prime(r):
        raise NotPrime(f"{r} is not prime")
    if d < 1 or (r - 1) % d != 0:
        raise NotDividing(f"{d} does not divide {r} - 1")
    if a % r == 0:
        raise NotCoprime(f"{a} is divisible by {r}")
    return pow(a, (r - 1) // d, r) == 1


def splits_completely_in_period_field(p: int, field: PeriodField) -> bool:
    """True iff the prime p splits completely in the period field, i.e. the
    Frobenius p mod ell lies in the index-d subgroup."""
    if p == field.ell:
        raise Ramified(f"{p} ramifies in the cyclotomic field of level {p}")
    return is_dth_power_mod(p, field.ell, field.d)


def find_r(ell: int, q: int, bound: int = 10**6) -> int:
    """Smallest prime r <= bound, r not in {q, ell}, with r = 1 mod q,
    r a q-th power mod ell, and ell a q-th power mod r.

    Existence is only guaranteed asymptotically; SearchExhausted reports an
    insufficient bound honestly.
    """
    if not is_prime(ell) or not is_prime(q):
        raise NotPrime("both arguments must be prime")
    if (ell - 1) % q != 0:
        raise NotDividing(f"{q} does not divide {ell} - 1")
    r = 2
    while r <= bound:
        if r not in (q, ell) and (r - 1) % q == 0:
            if is_dth_power_mod(r, ell, q) and is_dth_power_mod(ell, r, q):
                return r
        r = next_prime(r)
    raise SearchExhausted(f"no admissible prime r <= {bound} for (ell={ell}, q={q})")
