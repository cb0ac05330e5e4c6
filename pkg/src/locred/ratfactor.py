"""Certified factorization over Q for monic primitive integer polynomials.

Every polynomial this package constructs is reducible modulo every prime,
so no single-prime shortcut can certify irreducibility; instead we lift a
modular factorization past a Mignotte-type coefficient bound and exhaust
factor recombinations (classical Zassenhaus, exponential in the modular
factor count -- fine at the degrees this package works with).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import (
    ExactDivisionFailed,
    LeadingCoefficientDivisible,
    MonicRequired,
    NotCoprime,
    ZeroPolynomial,
)
from .finitefield import FqPolynomial, fq_context, fq_poly_factor
from .intpoly import IntPolynomial, poly_gcd
from .ntheory import next_prime


def mignotte_bound(f: IntPolynomial) -> int:
    """B with |coefficient| <= B for every monic factor of f of degree
    <= deg(f)/2.

    Variant used: binom(m, i) * Mahler(h) <= 2^m * ||f||_2 for a monic divisor
    h of degree m = floor(deg f / 2), so B = 2^m * ceil(||f||_2).
    """
    if f.is_zero():
        raise ZeroPolynomial("bound of zero polynomial")
    m = max(int(f.degree) // 2, 1)
    norm_sq = sum(c * c for c in f.coeffs)
    root = math.isqrt(norm_sq)
    if root * root < norm_sq:
        root += 1
    return 2**m * root


@dataclass(frozen=True)
class HenselPair:
    """A factorization f = g*h mod p^k together with a Bezout certificate.

    Invariants: f = g*h (mod p^k), u*g + v*h = 1 (mod p^k), and g mod p is
    coprime to h mod p.
    """

    p: int
    k: int
    g: IntPolynomial
    h: IntPolynomial
    u: IntPolynomial
    v: IntPolynomial


def _mod_coeffs(f: IntPolynomial, m: int) -> IntPolynomial:
    return IntPolynomial(c % m for c in f.coeffs)


def _sym_coeffs(f: IntPolynomial, m: int) -> IntPolynomial:
    half = m // 2
    return IntPolynomial(((c % m) - m if (c % m) > half else c % m) for c in f.coeffs)


def _polydiv_mod(a: IntPolynomial, b: IntPolynomial, m: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Division with remainder mod m; b must have a unit leading coefficient."""
    binv = pow(b.lc, -1, m)
    rem = [c % m for c in a.coeffs]
    db = len(b.coeffs) - 1
    if len(rem) - 1 < db:
        return IntPolynomial.zero(), IntPolynomial(rem)
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - db - 1, -1, -1):
        top = rem[i + db] % m
        if top:
            q = top * binv % m
            quot[i] = q
            for j, c in enumerate(b.coeffs):
                rem[i + j] = (rem[i + j] - q * c) % m
    return IntPolynomial(quot), IntPolynomial(rem[:db])


def make_hensel_pair(f: IntPolynomial, p: int, g0: IntPolynomial, h0: IntPolynomial) -> HenselPair:
    """Validated starting pair at k = 1 from monic factors of f mod p."""
    if f.lc % p == 0:
        raise LeadingCoefficientDivisible(f"p={p} divides the leading coefficient")
    ctx = fq_context(p, 1)
    gm = FqPolynomial.from_int_polynomial(ctx, g0)
    hm = FqPolynomial.from_int_polynomial(ctx, h0)
    if gm.gcd(hm).degree != 0:
        raise NotCoprime("modular factors share a common factor")
    fm = FqPolynomial.from_int_polynomial(ctx, f)
    if not (fm - gm * hm).is_zero():
        raise ValueError("g0*h0 != f mod p")
    # extended Euclid over F_p for the Bezout pair
    a, b = gm, hm
    sa, sb = FqPolynomial.one(ctx), FqPolynomial.zero(ctx)
    ta, tb = FqPolynomial.zero(ctx), FqPolynomial.one(ctx)
    while not b.is_zero():
        q, r = a.divmod(b)
        a, b = b, r
        sa, sb = sb, sa - q * sb
        ta, tb = tb, ta - q * tb
    inv = pow(a.coeffs[0], p - 2, p)
    u = IntPolynomial(c * inv % p for c in sa.coeffs)
    v = IntPolynomial(c * inv % p for c in ta.coeffs)
    return HenselPair(p, 1, _mod_coeffs(g0, p), _mod_coeffs(h0, p), u, v)


def hensel_lift(f: IntPolynomial, pair: HenselPair, target_k: int) -> HenselPair:
    """Quadratic lift of a valid pair to exponent target_k.

    The invariants are re-verified exactly at every doubling step.
    """
    p = pair.p
    if f.lc % p == 0:
        raise LeadingCoefficientDivisible(f"p={p} divides the leading coefficient")
    ctx = fq_context(p, 1)
    gm = FqPolynomial.from_int_polynomial(ctx, pair.g)
    hm = FqPolynomial.from_int_polynomial(ctx, pair.h)
    if gm.gcd(hm).degree != 0:
        raise NotCoprime("modular factors share a common factor")
    k = pair.k
    q = p**k
    g, h, u, v = pair.g, pair.h, pair.u, pair.v
    if not _valid_pair(f, p, k, g, h, u, v):
        raise ValueError("input pair does not satisfy its stated congruences")
    while k < target_k:
        k2 = min(2 * k, target_k)
        m = p**k2
        e = _mod_coeffs(f - g * h, m)
        t = _mod_coeffs(v * e, m)
        w, t_red = _polydiv_mod(t, g, m)
        g_new = _mod_coeffs(g + t_red, m)
        h_new = _mod_coeffs(h + u * e + h * w, m)
        c = _mod_coeffs(u * g_new + v * h_new - IntPolynomial.one(), m)
        s = _mod_coeffs(u * c, m)
        wprime, s_red = _polydiv_mod(s, h_new, m)
        u_new = _mod_coeffs(u - s_red, m)
        v_new = _mod_coeffs(v - v * c - g_new * wprime, m)
        g, h, u, v = g_new, h_new, u_new, v_new
        k = k2
        if not _valid_pair(f, p, k, g, h, u, v):  # pragma: no cover - exactness guard
            raise AssertionError("lift invariant failed")
    return HenselPair(p, k, g, h, u, v)


def _valid_pair(f, p, k, g, h, u, v) -> bool:
    m = p**k
    return (
        _mod_coeffs(f - g * h, m).is_zero()
        and _mod_coeffs(u * g + v * h - IntPolynomial.one(), m).is_zero()
    )


def _yun_squarefree(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm in characteristic 0: f = prod part_i^i, parts monic."""
    out = []
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return [(f, 1)]
    w = f.divexact(g)
    y = f.derivative().divexact(g)
    z = y - w.derivative()
    i = 1
    while not z.is_zero():
        h = poly_gcd(w, z)
        if h.degree > 0:
            out.append((h, i))
        w = w.divexact(h)
        y = z.divexact(h)
        z = y - w.derivative()
        i += 1
    if w.degree > 0:
        out.append((w, i))
    return out


def _pick_prime(f: IntPolynomial, skip: int) -> tuple[int, list[IntPolynomial]]:
    """Choose among the first 5 admissible primes the one giving the fewest
    modular factors.  Admissible: p does not divide lc(f) * disc-like skip."""
    best: tuple[int, list[IntPolynomial]] | None = None
    p = 1
    tried = 0
    while tried < 5:
        p = next_prime(p)
        if skip % p == 0 or f.lc % p == 0:
            continue
        tried += 1
        ctx = fq_context(p, 1)
        fm = FqPolynomial.from_int_polynomial(ctx, f)
        factors = [IntPolynomial(g.coeffs) for g, _ in fq_poly_factor(fm, seed=0)]
        if best is None or len(factors) < len(best[1]):
            best = (p, factors)
        if len(factors) == 1:
            break
    assert best is not None
    return best


def _factor_squarefree_monic(f: IntPolynomial, seed: int) -> list[IntPolynomial]:
    del seed  # the pipeline is deterministic; kept for interface symmetry
    n = int(f.degree)
    if n <= 1:
        return [f]
    if f.coeffs[0] == 0:
        rest = f.divexact(IntPolynomial.x())
        return sorted([IntPolynomial.x()] + _factor_squarefree_monic(rest, 0), key=lambda g: (g.degree, g.coeffs))
    from .intpoly import discriminant

    disc = discriminant(f)
    p, modular = _pick_prime(f, disc)
    if len(modular) == 1:
        return [f]
    bound = mignotte_bound(f)
    target_k = 1
    while p**target_k <= 2 * bound:
        target_k += 1
    lifted = _lift_tree(f, p, modular, target_k)
    modulus = p**target_k
    # recombination: smallest subsets first, lexicographic within a size
    indices = list(range(len(lifted)))
    result: list[IntPolynomial] = []
    remaining = f
    while True:
        found = None
        max_size = len(indices)
        for size in range(1, max_size // 2 + 1):
            for combo in itertools.combinations(indices, size):
                cand = IntPolynomial.one()
                for i in combo:
                    cand = _mod_coeffs(cand * lifted[i], modulus)
                cand = _sym_coeffs(cand, modulus)
                if cand.degree > remaining.degree:
                    continue
                c0 = cand.coeffs[0]
                if c0 == 0 or remaining.coeffs[0] % c0 != 0:
                    continue
                try:
                    quotient = remaining.divexact(cand)
                except ExactDivisionFailed:
                    continue
                found = (combo, cand, quotient)
                break
            if found:
                break
        if not found:
            break
        combo, cand, quotient = found
        result.append(cand)
        remaining = quotient
        indices = [i for i in indices if i not in combo]
        if not indices:
            break
    if remaining.degree > 0:
        result.append(remaining)
    return sorted(result, key=lambda g: (g.degree, g.coeffs))


def _lift_tree(f: IntPolynomial, p: int, modular: list[IntPolynomial], k: int) -> list[IntPolynomial]:
    """Lift the full modular factor list to mod p^k by recursive pair lifting."""
    if len(modular) == 1:
        return [_mod_coeffs(f, p**k)]
    mid = len(modular) // 2
    left, right = modular[:mid], modular[mid:]
    g0 = IntPolynomial.one()
    for fac in left:
        g0 = _mod_coeffs(g0 * fac, p)
    h0 = IntPolynomial.one()
    for fac in right:
        h0 = _mod_coeffs(h0 * fac, p)
    pair = make_hensel_pair(_mod_coeffs(f, p**k), p, g0, h0)
    pair = hensel_lift(_mod_coeffs(f, p**k), pair, k)
    return _lift_tree(pair.g, p, left, k) + _lift_tree(pair.h, p, right, k)


def z_factor(f: IntPolynomial, seed: int = 0) -> list[tuple[IntPolynomial, int]]:
    """Complete factorization of a monic (after content/sign stripping)
    integer polynomial into monic irreducibles over Q with multiplicities.

    Raises MonicRequired when the primitive part is not monic.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    prim = f.primitive_part()
    if prim.degree <= 0:
        return []
    if not prim.is_monic():
        raise MonicRequired("only monic-after-normalization inputs are supported")
    out: list[tuple[IntPolynomial, int]] = []
    for part, mult in _yun_squarefree(prim):
        for irr in _factor_squarefree_monic(part, seed):
            out.append((irr, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def z_irreducible(f: IntPolynomial, seed: int = 0) -> bool:
    """True iff f has a single irreducible factor of multiplicity 1."""
    factors = z_factor(f, seed)
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree == f.degree
