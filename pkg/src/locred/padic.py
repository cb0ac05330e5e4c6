"""Local reducibility/irreducibility certificates over Q_p.

Two sound, incomplete strategies are combined:

* a coprime split of f mod p (two nontrivial coprime parts Hensel-lift to a
  factorization over Z_p, so f is reducible over Q_p);
* Newton polygons of shifts f(x+c): two or more slopes prove reducibility,
  while a single slope of horizontal length deg(f) whose reduced denominator
  is exactly deg(f) proves irreducibility (total ramification).

"Unknown" is an acceptable outcome; this module proves, it does not decide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotSquarefree, ZeroPolynomial
from .finitefield import FqPolynomial, fq_context, fq_poly_factor, multiply_factors
from .intpoly import IntPolynomial, poly_gcd, poly_shift

PROVED_REDUCIBLE = "proved_reducible"
PROVED_IRREDUCIBLE = "proved_irreducible"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of (i, v_p(a_i)) over the nonzero coefficients."""

    p: int
    points: tuple[tuple[int, int], ...]
    hull: tuple[tuple[int, int], ...]
    slopes: tuple[tuple[Fraction, int], ...]  # (slope, horizontal length)
    x_power: int  # number of x factors stripped (index of first nonzero coeff)

    def total_length(self) -> int:
        return sum(length for _, length in self.slopes)


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def newton_polygon(f: IntPolynomial, p: int) -> NewtonPolygon:
    if f.is_zero():
        raise ZeroPolynomial("newton polygon of zero polynomial")
    pts = [(i, _vp(c, p)) for i, c in enumerate(f.coeffs) if c != 0]
    x_power = pts[0][0]
    # monotone chain for the lower hull; points already sorted by abscissa
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep only right turns (strictly convex from below)
            if (x2 - x1) * (pt[1] - y1) <= (pt[0] - x1) * (y2 - y1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.append((Fraction(y2 - y1, x2 - x1), x2 - x1))
    return NewtonPolygon(p, tuple(pts), tuple(hull), tuple(slopes), x_power)


@dataclass(frozen=True)
class HenselSplitWitness:
    """Two nontrivial coprime parts of f mod p (coefficients in [0, p))."""

    part_a: tuple[int, ...]
    part_b: tuple[int, ...]


@dataclass(frozen=True)
class MultiSlopeWitness:
    shift: int
    slopes: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class EisensteinSlopeWitness:
    """Single Newton slope with root valuation a/deg(f), gcd(a, deg f) = 1."""

    shift: int
    slope: Fraction  # positive: the common valuation of the roots


@dataclass(frozen=True)
class ConstructionWitness:
    reference: str


@dataclass(frozen=True)
class LocalVerdict:
    p: int
    status: str
    witness: object = field(default=None)

    def is_reducible(self) -> bool:
        return self.status == PROVED_REDUCIBLE

    def is_irreducible(self) -> bool:
        return self.status == PROVED_IRREDUCIBLE


def _hensel_split(f: IntPolynomial, p: int) -> HenselSplitWitness | None:
    """Group f mod p by distinct irreducible factors; >= 2 groups give two
    coprime cofactors (f need not be squarefree mod p)."""
    if f.lc % p == 0:
        return None
    ctx = fq_context(p, 1)
    fm = FqPolynomial.from_int_polynomial(ctx, f)
    if fm.degree < 2:
        return None
    factors = fq_poly_factor(fm, seed=0)
    if len(factors) < 2:
        return None
    g0, m0 = factors[0]
    part_a = multiply_factors(ctx, [(g0, m0)])
    part_b = multiply_factors(ctx, factors[1:])
    # absorb the leading unit into part_b
    part_b = part_b.scale(fm.lc)
    return HenselSplitWitness(tuple(part_a.coeffs), tuple(part_b.coeffs))


def check_hensel_split_witness(f: IntPolynomial, p: int, w: HenselSplitWitness) -> bool:
    """Re-check a split witness: nontrivial parts, coprime, product = f mod p."""
    ctx = fq_context(p, 1)
    a = FqPolynomial.from_int_coeffs(ctx, w.part_a)
    b = FqPolynomial.from_int_coeffs(ctx, w.part_b)
    if a.degree < 1 or b.degree < 1:
        return False
    if a.gcd(b).degree != 0:
        return False
    fm = FqPolynomial.from_int_polynomial(ctx, f)
    return (a * b - fm).is_zero()


def _eisenstein_check(np_: NewtonPolygon, degree: int) -> Fraction | None:
    """Positive root valuation a/degree if the polygon is a single segment of
    full length with reduced denominator exactly `degree`."""
    if len(np_.slopes) != 1 or np_.x_power != 0:
        return None
    slope, length = np_.slopes[0]
    if length != degree:
        return None
    val = -slope
    if val.denominator == degree and val > 0:
        return val
    return None


def qp_certificate(
    f: IntPolynomial, p: int, shift_range: int | None = None
) -> LocalVerdict:
    """Local verdict for f over Q_p.

    Strategy order: (a) coprime split of f mod p => reducible; (b) Newton
    polygons of f(x+c) for c = 0..shift_range: two slopes => reducible, a
    full-length single slope with denominator deg(f) => irreducible;
    (c) Unknown.  shift_range defaults to 2p+2, which covers every residue
    mod p with margin.  Requires f squarefree over Q.
    """
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if poly_gcd(f, f.derivative()).degree != 0:
        raise NotSquarefree("qp_certificate requires f squarefree over Q")
    n = int(f.degree)
    if shift_range is None:
        shift_range = 2 * p + 2
    if n <= 1:
        return LocalVerdict(p, UNKNOWN)

    split = _hensel_split(f, p)
    if split is not None:
        verdict = LocalVerdict(p, PROVED_REDUCIBLE, split)
        # consistency guard: a bounded sample of shifts must not produce a
        # totally-ramified certificate
        for c in range(min(shift_range, 8) + 1):
            assert _eisenstein_check(newton_polygon(poly_shift(f, c), p), n) is None, (
                "contradictory local certificates"
            )
        return verdict

    for c in range(shift_range + 1):
        np_ = newton_polygon(poly_shift(f, c), p)
        if len(np_.slopes) >= 2:
            return LocalVerdict(
                p,
                PROVED_REDUCIBLE,
                MultiSlopeWitness(c, (np_.slopes[0][0], np_.slopes[1][0])),
            )
        val = _eisenstein_check(np_, n)
        if val is not None:
            return LocalVerdict(p, PROVED_IRREDUCIBLE, EisensteinSlopeWitness(c, val))
    return LocalVerdict(p, UNKNOWN)
