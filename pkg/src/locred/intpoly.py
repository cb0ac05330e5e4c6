"""Exact arithmetic on univariate polynomials with integer coefficients.

Coefficients are arbitrary-precision, stored dense with the constant term
first and no trailing zeros; the zero polynomial is the empty tuple and its
degree is reported as -inf.  No floating point is used anywhere.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ConstantPolynomial,
    DegenerateResolvent,
    ExactDivisionFailed,
    NotAPerfectSquare,
    NotSquarefree,
    ZeroPolynomial,
)

NEG_INFINITY = float("-inf")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, constant term first, canonical form."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    # -- construction -----------------------------------------------------

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def x() -> "IntPolynomial":
        return IntPolynomial((0, 1))

    @staticmethod
    def constant(c: int) -> "IntPolynomial":
        return IntPolynomial((c,))

    @staticmethod
    def parse(text: str) -> "IntPolynomial":
        """Parse the repo-wide text format: comma-separated coefficients,
        constant term first, e.g. "1,0,0,0,1" for x^4 + 1."""
        parts = [p.strip() for p in text.strip().split(",")]
        return IntPolynomial(int(p) for p in parts if p != "")

    def text(self) -> str:
        if self.is_zero():
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(
            a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(
            a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-a for a in self.coeffs)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(a * other for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def content(self) -> int:
        """gcd of the coefficients; 0 for the zero polynomial."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "IntPolynomial":
        """self divided by its content, sign-normalized to positive lc."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPolynomial(a // c for a in self.coeffs)

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact division; raises ExactDivisionFailed on nonzero remainder."""
        if other.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        if self.is_zero():
            return IntPolynomial.zero()
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            raise ExactDivisionFailed("degree of divisor exceeds dividend")
        quot = [0] * (dq + 1)
        d = other.coeffs
        lc = d[-1]
        for i in range(dq, -1, -1):
            top = rem[i + len(d) - 1]
            if top % lc != 0:
                raise ExactDivisionFailed("leading coefficient does not divide")
            q = top // lc
            quot[i] = q
            if q:
                for j, b in enumerate(d):
                    rem[i + j] -= q * b
        if any(rem):
            raise ExactDivisionFailed("nonzero remainder")
        return IntPolynomial(quot)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def pretty(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xi = var if i == 1 else f"{var}^{i}"
                body = xi if mag == 1 else f"{mag}*{xi}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)


@dataclass(frozen=True)
class RatPolynomial:
    """Integer polynomial with a single positive denominator, in lowest terms."""

    numerator: IntPolynomial
    denominator: int

    def __init__(self, numerator: IntPolynomial, denominator: int = 1):
        if denominator == 0:
            raise ZeroPolynomial("zero denominator")
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        g = math.gcd(numerator.content(), denominator)
        if g > 1:
            numerator = IntPolynomial(a // g for a in numerator.coeffs)
            denominator //= g
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def is_integral(self) -> bool:
        return self.denominator == 1

    def to_int_polynomial(self) -> IntPolynomial:
        if not self.is_integral():
            raise ExactDivisionFailed(f"denominator {self.denominator} != 1")
        return self.numerator


# -- division helpers ---------------------------------------------------------


def pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a by b."""
    if b.is_zero():
        raise ZeroPolynomial("pseudo-division by zero")
    da, db = len(a.coeffs) - 1, len(b.coeffs) - 1
    if da < db:
        return a
    rem = list(a.coeffs)
    lb = b.lc
    for i in range(da - db, -1, -1):
        top = rem[i + db]
        for j in range(i + db + 1):
            rem[j] *= lb
        if top:
            for j, c in enumerate(b.coeffs):
                rem[i + j] -= top * c
        # entries above the current working degree stay zero
        rem[i + db] = 0
    return IntPolynomial(rem[:db] if db > 0 else ())


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """gcd in Z[x] via the primitive PRS, sign-normalized (lc > 0)."""
    if a.is_zero():
        return b.primitive_part() * abs(b.content()) if not b.is_zero() else a
    if b.is_zero():
        return a.primitive_part() * abs(a.content())
    cont = math.gcd(a.content(), b.content())
    f, g = a.primitive_part(), b.primitive_part()
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero():
        r = pseudo_rem(f, g)
        f, g = g, r.primitive_part()
    return f * cont


def is_squarefree(f: IntPolynomial) -> bool:
    if f.is_zero():
        return False
    if f.degree <= 0:
        return True
    return poly_gcd(f, f.derivative()).degree == 0


# -- resultants ----------------------------------------------------------------


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) by the fraction-free subresultant PRS.

    Equals lc(f)^deg(g) * prod g(alpha_i) over the roots of f.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of zero polynomial")
    if f.degree == 0:
        return f.coeffs[0] ** max(g.degree, 0) if g.degree >= 0 else 1
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    s = 1
    a, b = f, g
    if a.degree < b.degree:
        if (a.degree % 2) and (b.degree % 2):
            s = -s
        a, b = b, a
    gg, h = 1, 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if (da % 2) and (db % 2):
            s = -s
        r = pseudo_rem(a, b)
        if r.is_zero():
            return 0
        a = b
        denom = gg * h**delta
        b = IntPolynomial(c // denom for c in r.coeffs)
        if any(c % denom for c in r.coeffs):  # pragma: no cover - theory guarantee
            raise ExactDivisionFailed("subresultant division failed")
        gg = a.lc
        if delta == 0:
            # h unchanged up to h^(1-0)=h; standard update degenerates
            h = h
        elif delta == 1:
            h = gg
        else:
            h = gg**delta // h ** (delta - 1)
        if b.degree == 0:
            if a.degree == 0:
                return s  # both constant: handled earlier in practice
            num = b.coeffs[0] ** a.degree
            den = h ** (a.degree - 1)
            return s * (num // den)


def sylvester_resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Naive Sylvester-determinant resultant; test oracle for small degrees."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of zero polynomial")
    m, n = f.degree, g.degree
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    mat = [[0] * size for _ in range(size)]
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        for j, c in enumerate(fc):
            mat[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(gc):
            mat[n + i][i + j] = c
    return _bareiss_det(mat)


def _bareiss_det(mat: list[list[int]]) -> int:
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def discriminant(f: IntPolynomial) -> int:
    """disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f), exact."""
    if f.is_zero():
        raise ZeroPolynomial("discriminant of zero polynomial")
    d = f.degree
    if d < 1:
        raise ConstantPolynomial("discriminant needs degree >= 1")
    res = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, f.lc)
    if r:  # pragma: no cover - theory guarantee
        raise ExactDivisionFailed("lc does not divide resultant")
    return q


# -- transforms ------------------------------------------------------------------


def poly_shift(f: IntPolynomial, c: int) -> IntPolynomial:
    """f(x + c), by iterated Horner in (x + c)."""
    if f.is_zero() or c == 0:
        return f
    out: list[int] = []
    for a in reversed(f.coeffs):
        # out <- out * (x + c) + a
        nxt = [0] * (len(out) + 1)
        for i, b in enumerate(out):
            nxt[i] += b * c
            nxt[i + 1] += b
        nxt[0] += a
        out = nxt
    return IntPolynomial(out)


def poly_exact_sqrt(P: IntPolynomial) -> IntPolynomial:
    """g with g*g == P and positive leading coefficient.

    Coefficient recursion from the top; raises NotAPerfectSquare if no exact
    square root exists.
    """
    if P.is_zero():
        return P
    d = P.degree
    if d % 2:
        raise NotAPerfectSquare("odd degree")
    if P.lc < 0:
        raise NotAPerfectSquare("negative leading coefficient")
    k = d // 2
    top = math.isqrt(P.lc)
    if top * top != P.lc:
        raise NotAPerfectSquare("leading coefficient is not a square")
    g = [0] * (k + 1)
    g[k] = top
    for i in range(k - 1, -1, -1):
        # match the coefficient of x^(k+i):  P_{k+i} = 2 g_k g_i + cross terms
        acc = 0
        for a in range(i + 1, k):
            b = k + i - a
            if i < b <= k:
                acc += g[a] * g[b]
        num = P[k + i] - acc
        den = 2 * g[k]
        if num % den:
            raise NotAPerfectSquare("coefficient recursion failed")
        g[i] = num // den
    cand = IntPolynomial(g)
    if cand * cand != P:
        raise NotAPerfectSquare("verification multiply-back failed")
    return cand


def interpolate_integer(points: Sequence[tuple[int, int]]) -> IntPolynomial:
    """Exact Lagrange interpolation; the result must have integer coefficients."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for xi, yi in points:
        # build the Lagrange basis polynomial for xi incrementally
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            denom *= xi - xj
            nxt = [Fraction(0)] * (len(basis) + 1)
            for i, b in enumerate(basis):
                nxt[i] += b * (-xj)
                nxt[i + 1] += b
            basis = nxt
        scale = Fraction(yi) / denom
        for i, b in enumerate(basis):
            coeffs[i] += b * scale
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    num = IntPolynomial(int(c * den) for c in coeffs)
    return RatPolynomial(num, den).to_int_polynomial()


def composition_resultant(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Res_y(f(y), g(x - y)) as a polynomial in x, by evaluation/interpolation.

    For monic f, g this is the monic polynomial whose roots are all sums
    alpha_i + beta_j of roots of f and g.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("composition resultant of zero polynomial")
    D = f.degree * g.degree
    points = []
    for k in range(D + 1):
        # g(k - y) as a polynomial in y
        shifted = poly_shift(g, k)  # g(k + u)
        gk = IntPolynomial(
            (-1) ** i * c for i, c in enumerate(shifted.coeffs)
        )  # u -> -y
        points.append((k, resultant(f, gk)))
    return interpolate_integer(points)


def transformed_root_poly(f: IntPolynomial, c: int) -> IntPolynomial:
    """Monic polynomial whose roots are r^2 + c*r over the roots r of f.

    Computed as Res_x(f(x), y - x^2 - c x) by evaluation/interpolation.
    """
    if f.is_zero():
        raise ZeroPolynomial("transform of zero polynomial")
    D = f.degree
    points = []
    for k in range(D + 1):
        q = IntPolynomial((k, -c, -1))  # k - c x - x^2
        points.append((k, resultant(f, q)))
    return interpolate_integer(points)


def pair_sum_resolvent(f: IntPolynomial) -> IntPolynomial:
    """Degree-6 polynomial with roots r_i + r_j (i < j) for a monic quartic f.

    Res_y(f(y), f(x-y)) is the ordered-pair product; dividing out the
    diagonal 2^4 f(x/2) and taking the exact square root leaves the pair-sum
    polynomial.  Raises DegenerateResolvent when pair sums collide.
    """
    if f.degree != 4:
        raise ValueError("pair-sum resolvent requires degree 4")
    if not f.is_monic():
        raise ValueError("pair-sum resolvent requires a monic quartic")
    if not is_squarefree(f):
        raise NotSquarefree("quartic must be squarefree")
    full = composition_resultant(f, f)
    diag = IntPolynomial(c * 2 ** (4 - i) for i, c in enumerate(f.coeffs))
    quotient = full.divexact(diag)
    g = poly_exact_sqrt(quotient)
    if poly_gcd(g, g.derivative()).degree != 0:
        raise DegenerateResolvent("pair sums collide (resolvent not squarefree)")
    return g
