"""Arithmetic in F_q (q = p^d) and polynomial factorization over F_q.

Field elements are represented on the polynomial basis of the context
modulus: plain ints in [0, p) when d == 1, tuples of d ints otherwise.
Polynomials are dense coefficient tuples, constant term first, canonical.

Factorization is the classical squarefree / distinct-degree / equal-degree
chain; the equal-degree stage is randomized and threads an explicit seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import NotPrime, ZeroPolynomial
from .intpoly import IntPolynomial
from .ntheory import is_prime

Element = int | tuple[int, ...]


def _modpoly_mul(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> tuple[int, ...]:
    """Multiply two F_p coefficient vectors modulo a monic modulus."""
    d = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    # reduce by the monic modulus
    for i in range(len(out) - 1, d - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(d):
                out[i - d + j] = (out[i - d + j] - c * modulus[j]) % p
    out = out[:d]
    out += [0] * (d - len(out))
    return tuple(out)


def _poly_irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p.

    Works directly over the prime-field context (modulus x), so it can
    bootstrap the modulus search for extension contexts.
    """
    ctx = FqContext(p, 1, (0, 1))
    return fq_poly_irreducible(FqPolynomial.from_int_coeffs(ctx, coeffs))


def _prime_divisors(n: int) -> list[int]:
    out = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


@dataclass(frozen=True)
class FqContext:
    """The field F_q, q = p^d, on the basis of a monic irreducible modulus.

    The canonical context (from fq_context) uses the lexicographically
    smallest monic irreducible of degree d over F_p, coefficients compared
    low-to-high.  An explicit modulus may also be supplied, e.g. to realize
    a residue field F_p[t]/(pi).
    """

    p: int
    d: int
    modulus: tuple[int, ...]  # length d+1, monic, over F_p

    @property
    def q(self) -> int:
        return self.p**self.d

    # -- element arithmetic -------------------------------------------------

    def zero(self) -> Element:
        return 0 if self.d == 1 else (0,) * self.d

    def one(self) -> Element:
        return 1 if self.d == 1 else (1,) + (0,) * (self.d - 1)

    def gen(self) -> Element:
        """The residue class of the variable (for d == 1: -modulus[0])."""
        if self.d == 1:
            return (-self.modulus[0]) % self.p
        return (0, 1) + (0,) * (self.d - 2)

    def from_int(self, n: int) -> Element:
        n %= self.p
        return n if self.d == 1 else (n,) + (0,) * (self.d - 1)

    def is_zero(self, a: Element) -> bool:
        return a == 0 if self.d == 1 else not any(a)

    def add(self, a: Element, b: Element) -> Element:
        if self.d == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a: Element, b: Element) -> Element:
        if self.d == 1:
            return (a - b) % self.p
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        if self.d == 1:
            return (-a) % self.p
        return tuple((-x) % self.p for x in a)

    def mul(self, a: Element, b: Element) -> Element:
        if self.d == 1:
            return a * b % self.p
        return _modpoly_mul(a, b, self.modulus, self.p)

    def pow(self, a: Element, e: int) -> Element:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: Element) -> Element:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero field element")
        return self.pow(a, self.q - 2)

    def trace(self, a: Element) -> int:
        """Absolute trace to F_p, returned as an int in [0, p)."""
        acc = a
        frob = a
        for _ in range(self.d - 1):
            frob = self.pow(frob, self.p)
            acc = self.add(acc, frob)
        return acc if self.d == 1 else acc[0]

    def elements(self) -> Iterable[Element]:
        if self.d == 1:
            yield from range(self.p)
        else:
            import itertools

            for tup in itertools.product(range(self.p), repeat=self.d):
                yield tup

    def element_sort_key(self, a: Element):
        return (a,) if self.d == 1 else a


def fq_context(p: int, d: int) -> FqContext:
    """Canonical context for F_{p^d}; deterministic modulus choice."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if d < 1:
        raise ValueError("extension degree must be >= 1")
    if d == 1:
        return FqContext(p, 1, (0, 1))  # modulus x
    import itertools

    for tail in itertools.product(range(p), repeat=d):
        cand = tuple(tail) + (1,)
        if _poly_irreducible_mod_p(cand, p):
            return FqContext(p, d, cand)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def fq_context_from_modulus(p: int, modulus: Sequence[int]) -> FqContext:
    """Context over an explicitly given monic irreducible modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    mod = tuple(c % p for c in modulus)
    if len(mod) < 2 or mod[-1] != 1:
        raise ValueError("modulus must be monic of degree >= 1")
    if len(mod) > 2 and not _poly_irreducible_mod_p(mod, p):
        raise ValueError("modulus is reducible")
    return FqContext(p, len(mod) - 1, mod)


@dataclass(frozen=True)
class FqPolynomial:
    """Dense polynomial over an FqContext, constant term first, canonical."""

    ctx: FqContext = field(compare=False)
    coeffs: tuple[Element, ...] = ()

    def __init__(self, ctx: FqContext, coeffs: Iterable[Element] = ()):
        cs = list(coeffs)
        while cs and ctx.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def from_int_coeffs(ctx: FqContext, coeffs: Iterable[int]) -> "FqPolynomial":
        return FqPolynomial(ctx, (ctx.from_int(c) for c in coeffs))

    @staticmethod
    def from_int_polynomial(ctx: FqContext, f: IntPolynomial) -> "FqPolynomial":
        return FqPolynomial.from_int_coeffs(ctx, f.coeffs)

    @staticmethod
    def zero(ctx: FqContext) -> "FqPolynomial":
        return FqPolynomial(ctx, ())

    @staticmethod
    def one(ctx: FqContext) -> "FqPolynomial":
        return FqPolynomial(ctx, (ctx.one(),))

    @staticmethod
    def x(ctx: FqContext) -> "FqPolynomial":
        return FqPolynomial(ctx, (ctx.zero(), ctx.one()))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def lc(self) -> Element:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one()

    def __add__(self, other: "FqPolynomial") -> "FqPolynomial":
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return FqPolynomial(ctx, out)

    def __sub__(self, other: "FqPolynomial") -> "FqPolynomial":
        ctx = self.ctx
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else ctx.zero()
            y = other.coeffs[i] if i < len(other.coeffs) else ctx.zero()
            out.append(ctx.sub(x, y))
        return FqPolynomial(ctx, out)

    def __mul__(self, other: "FqPolynomial") -> "FqPolynomial":
        ctx = self.ctx
        if self.is_zero() or other.is_zero():
            return FqPolynomial.zero(ctx)
        if ctx.d == 1:
            p = ctx.p
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, x in enumerate(self.coeffs):
                if x:
                    for j, y in enumerate(other.coeffs):
                        out[i + j] = (out[i + j] + x * y) % p
            return FqPolynomial(ctx, out)
        out = [ctx.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not ctx.is_zero(x):
                for j, y in enumerate(other.coeffs):
                    out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
        return FqPolynomial(ctx, out)

    def scale(self, c: Element) -> "FqPolynomial":
        ctx = self.ctx
        return FqPolynomial(ctx, (ctx.mul(c, a) for a in self.coeffs))

    def monic(self) -> "FqPolynomial":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.ctx.inv(self.lc))

    def divmod(self, other: "FqPolynomial") -> tuple["FqPolynomial", "FqPolynomial"]:
        ctx = self.ctx
        if other.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        if self.degree < other.degree:
            return FqPolynomial.zero(ctx), self
        inv_lc = ctx.inv(other.lc)
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        quot = [ctx.zero()] * (dq + 1)
        oc = other.coeffs
        for i in range(dq, -1, -1):
            top = rem[i + len(oc) - 1]
            if ctx.is_zero(top):
                continue
            q = ctx.mul(top, inv_lc)
            quot[i] = q
            for j, c in enumerate(oc):
                rem[i + j] = ctx.sub(rem[i + j], ctx.mul(q, c))
        return FqPolynomial(ctx, quot), FqPolynomial(ctx, rem[: len(oc) - 1])

    def __mod__(self, other: "FqPolynomial") -> "FqPolynomial":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "FqPolynomial") -> "FqPolynomial":
        return self.divmod(other)[0]

    def gcd(self, other: "FqPolynomial") -> "FqPolynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> "FqPolynomial":
        ctx = self.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(ctx.mul(ctx.from_int(i), self.coeffs[i]))
        return FqPolynomial(ctx, out)

    def pow_mod(self, e: int, modulus: "FqPolynomial") -> "FqPolynomial":
        result = FqPolynomial.one(self.ctx)
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def evaluate(self, a: Element) -> Element:
        ctx = self.ctx
        acc = ctx.zero()
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, a), c)
        return acc

    def sort_key(self):
        return (self.degree, tuple(self.ctx.element_sort_key(c) for c in self.coeffs))

    def text(self) -> str:
        """Repo-wide format with field context suffix, e.g. "1,1,1@2" or
        "0:1;1:0@3^2" (semicolon-separated elements, colon-joined digits)."""
        ctx = self.ctx
        if ctx.d == 1:
            body = ",".join(str(c) for c in self.coeffs) or "0"
            return f"{body}@{ctx.p}"
        body = ";".join(":".join(str(x) for x in c) for c in self.coeffs) or "0"
        return f"{body}@{ctx.p}^{ctx.d}"

    def __repr__(self) -> str:
        return f"FqPolynomial(q={self.ctx.q}, {list(self.coeffs)!r})"


def parse_fq_polynomial(text: str) -> FqPolynomial:
    body, _, ctxpart = text.strip().rpartition("@")
    if not ctxpart:
        raise ValueError("missing @p or @p^d context suffix")
    if "^" in ctxpart:
        ps, ds = ctxpart.split("^")
        ctx = fq_context(int(ps), int(ds))
        if body == "0":
            return FqPolynomial.zero(ctx)
        coeffs = [tuple(int(x) % ctx.p for x in el.split(":")) for el in body.split(";")]
        coeffs = [c + (0,) * (ctx.d - len(c)) for c in coeffs]
        return FqPolynomial(ctx, coeffs)
    ctx = fq_context(int(ctxpart), 1)
    if body == "0":
        return FqPolynomial.zero(ctx)
    return FqPolynomial.from_int_coeffs(ctx, (int(c) for c in body.split(",")))


# -- factorization -------------------------------------------------------------


def _pth_root(ctx: FqContext, a: Element) -> Element:
    # x -> x^p is an automorphism; its inverse is x -> x^(q/p)
    return ctx.pow(a, ctx.q // ctx.p)


def squarefree_decomposition(f: FqPolynomial) -> list[tuple[FqPolynomial, int]]:
    """[(g_i, m_i)] with f = lc * prod g_i^(m_i), g_i monic squarefree coprime."""
    ctx = f.ctx
    p = ctx.p
    out: list[tuple[FqPolynomial, int]] = []

    def _sfd(g: FqPolynomial, mult: int) -> None:
        if g.degree < 1:
            return
        gp = g.derivative()
        if gp.is_zero():
            # g is a p-th power: take the p-th root coefficientwise
            root = FqPolynomial(
                ctx, (_pth_root(ctx, g.coeffs[i]) for i in range(0, len(g.coeffs), p))
            )
            _sfd(root, mult * p)
            return
        c = g.gcd(gp)
        w = (g // c).monic()
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            part = w // y
            if part.degree > 0:
                out.append((part.monic(), mult * i))
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            _sfd(c, mult)

    _sfd(f.monic(), 1)
    return out


def _distinct_degree(f: FqPolynomial) -> list[tuple[FqPolynomial, int]]:
    """[(product of irreducible factors of degree k, k)] for monic squarefree f.

    The stage caps at deg f / 2 and declares the remainder irreducible.
    """
    ctx = f.ctx
    q = ctx.q
    out = []
    x = FqPolynomial.x(ctx)
    h = x
    rest = f.monic()
    k = 0
    while rest.degree >= 2 * (k + 1):
        k += 1
        h = h.pow_mod(q, rest)
        g = rest.gcd(h - x)
        if g.degree > 0:
            out.append((g.monic(), k))
            rest = (rest // g).monic()
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _equal_degree_split(f: FqPolynomial, k: int, rng: random.Random) -> FqPolynomial:
    """A proper monic factor of f, where f is a product of >= 2 distinct
    irreducibles all of degree k."""
    ctx = f.ctx
    q = ctx.q
    n = f.degree
    one = FqPolynomial.one(ctx)
    while True:
        u = FqPolynomial(
            ctx,
            tuple(
                ctx.from_int(rng.randrange(ctx.p))
                if ctx.d == 1
                else tuple(rng.randrange(ctx.p) for _ in range(ctx.d))
                for _ in range(n)
            ),
        )
        if u.degree < 1:
            continue
        g = f.gcd(u)
        if 0 < g.degree < n:
            return g.monic()
        if ctx.p == 2:
            # trace map over F_2: sum of u^(2^i) for i < k*d
            t = FqPolynomial.zero(ctx)
            v = u % f
            for _ in range(k * ctx.d):
                t = t + v
                v = (v * v) % f
            g = f.gcd(t)
        else:
            e = (q**k - 1) // 2
            g = f.gcd(u.pow_mod(e, f) - one)
        if 0 < g.degree < n:
            return g.monic()


def _equal_degree_factor(f: FqPolynomial, k: int, rng: random.Random) -> list[FqPolynomial]:
    if f.degree == k:
        return [f.monic()]
    g = _equal_degree_split(f, k, rng)
    h = (f // g).monic()
    return _equal_degree_factor(g, k, rng) + _equal_degree_factor(h, k, rng)


def fq_poly_factor(f: FqPolynomial, seed: int = 0) -> list[tuple[FqPolynomial, int]]:
    """Complete factorization into monic irreducibles with multiplicities.

    The product of factor^multiplicity equals f up to its leading unit.
    Deterministic for a given (input, seed); the factor list is sorted.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = random.Random(seed)
    result: list[tuple[FqPolynomial, int]] = []
    for part, mult in squarefree_decomposition(f):
        for block, k in _distinct_degree(part):
            for irr in _equal_degree_factor(block, k, rng):
                result.append((irr, mult))
    result.sort(key=lambda fm: fm[0].sort_key())
    return result


def fq_poly_irreducible(f: FqPolynomial) -> bool:
    """Rabin's test: x^(q^n) == x mod f, and gcd conditions at maximal
    proper divisors of n."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    ctx = f.ctx
    q = ctx.q
    fm = f.monic()
    x = FqPolynomial.x(ctx)
    for r in _prime_divisors(n):
        h = x.pow_mod(q ** (n // r), fm) - x
        if fm.gcd(h).degree != 0:
            return False
    h = x.pow_mod(q**n, fm) - x
    return (h % fm).is_zero()


def factor_pattern(f: FqPolynomial, seed: int = 0) -> list[int]:
    """Sorted degrees of the irreducible factors, with multiplicity.

    Computed from the squarefree and distinct-degree stages alone (the
    degrees do not require the randomized split); seed is accepted for
    interface uniformity.
    """
    del seed
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    degrees: list[int] = []
    for part, mult in squarefree_decomposition(f):
        for block, k in _distinct_degree(part):
            degrees.extend([k] * (block.degree // k) * mult)
    return sorted(degrees)


def multiply_factors(ctx: FqContext, factors: list[tuple[FqPolynomial, int]]) -> FqPolynomial:
    polys = [f for f, m in factors for _ in range(m)]
    return reduce(lambda a, b: a * b, polys, FqPolynomial.one(ctx))
