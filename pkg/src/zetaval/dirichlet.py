"""Dirichlet L-values: the fast series for L(1, chi_Delta) and truncated sums.

The L(1) evaluator follows the incomplete-gamma split

    L(1, chi) = (1/sqrt(Delta)) sum_{n<=m} chi(n) E1(A n^2)
              + sum_{n<=m} (chi(n)/n) erfc(n sqrt(A)) + R_m,
    |R_m| < Delta^(3/2)/pi^2 * exp(-A m^2)/m^3,      A = pi/Delta,

with chi the Kronecker symbol of the fundamental discriminant.  erfc here is
the standard complementary error function (2/sqrt(pi)) int_x^inf e^(-t^2) dt;
the 2/pi prefactor sometimes seen for this formula fails the class-number
cross-check, which the test suite demonstrates explicitly.

E1 and erfc both use their (convergent) power series with an alternating-tail
bound wherever the series is usable at all -- the working precision is raised
by ~1.44x (resp. ~1.44x^2) bits to absorb the cancellation -- and switch to
two-sided exponential sandwiches only far out, where the sandwich gap is
negligible against e^(-x).  Cutting over at x = 1, as the plain formulas
suggest, would leave enclosures about 1e-3 wide and could never certify
8 digits; the series region therefore extends to x <= 34 (E1) and x <= 6
(erfc).

E1 enclosures bottom out near 1e-50 width: the Euler-Mascheroni constant is a
stored 50-digit bracket.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import functions as fn
from . import rounding as rd
from .characters import DirichletCharacter, char_value, make_kronecker
from .errors import DomainError
from .interval import ComplexBox, PrecisionContext, RealInterval
from .zeta import Enclosure

_E1_SERIES_MAX = 34
_ERFC_SERIES_MAX = 6


@dataclass(frozen=True)
class L1Params:
    """Series length m and the enclosure of A = pi/Delta actually used."""

    m: int
    A: RealInterval


def _mag_hi(t: RealInterval) -> rd.MPF:
    return rd.abs_(t.hi if abs(t.hi[0]) >= abs(t.lo[0]) else t.lo)


def _e1_series_point(v: rd.MPF, out_prec: int) -> RealInterval:
    """-gamma - ln x + sum (-1)^(k+1) x^k/(k k!), tail <= first omitted term."""
    xf = rd.to_float(v, rd.CEIL)
    boost = int(1.45 * xf) + 48
    ctx = PrecisionContext(out_prec + boost)
    x = RealInterval(v, v)
    p = ctx.one()  # x^k / k!
    total = ctx.zero()
    k = 0
    cut = -(ctx.prec + 8)
    while True:
        k += 1
        p = ctx.div(ctx.mul(p, x), ctx.interval(k))
        term = ctx.div(p, ctx.interval(k))
        total = ctx.add(total, term) if k % 2 == 1 else ctx.sub(total, term)
        if k > xf and fn._term_small(term, cut):
            break
        if k > 64 * out_prec:
            raise RuntimeError("E1 series failed to converge")
    nxt = ctx.div(ctx.div(ctx.mul(p, x), ctx.interval(k + 1)), ctx.interval(k + 1))
    total = ctx.widen(total, _mag_hi(nxt))
    result = ctx.sub(ctx.sub(total, fn.euler_gamma(ctx)), fn.log(x_iv(v, ctx), ctx))
    return result


def x_iv(v: rd.MPF, ctx: PrecisionContext) -> RealInterval:
    return RealInterval(v, v)


def _e1_sandwich_point(v: rd.MPF, ctx: PrecisionContext) -> RealInterval:
    """e^-x (1/2) ln(1 + 2/x) <= E1(x) <= e^-x ln(1 + 1/x) for x > 0."""
    x = x_iv(v, ctx)
    decay = fn.exp(ctx.neg(x), ctx)
    upper = ctx.mul(decay, fn.log(ctx.add(ctx.one(), ctx.div(ctx.one(), x)), ctx))
    two_over = ctx.div(ctx.interval(2), x)
    lower = ctx.mul(decay, ctx.scale_2exp(fn.log(ctx.add(ctx.one(), two_over), ctx), -1))
    return RealInterval(lower.lo, upper.hi)


def _e1_point(v: rd.MPF, out_prec: int) -> RealInterval:
    if rd.cmp(v, rd.from_int(_E1_SERIES_MAX)) <= 0:
        return _e1_series_point(v, out_prec)
    return _e1_sandwich_point(v, PrecisionContext(out_prec + 16))


def exp_integral(x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    """Enclosure of E1(x) = int_x^inf e^-t / t dt; needs x.lo > 0.

    E1 is strictly decreasing, so the interval image is taken at endpoints.
    """
    if rd.sign(x.lo) <= 0:
        raise DomainError("exp_integral needs x > 0")
    hi_part = _e1_point(x.lo, ctx.prec + 16)
    lo_part = hi_part if x.is_point() else _e1_point(x.hi, ctx.prec + 16)
    return fn._final(ctx, RealInterval(lo_part.lo, hi_part.hi))


def _two_over_sqrt_pi(ctx: PrecisionContext) -> RealInterval:
    return ctx.div(ctx.interval(2), ctx.sqrt(fn.pi(ctx)))


def _erfc_series_point(v: rd.MPF, out_prec: int) -> RealInterval:
    """1 - (2/sqrt(pi)) sum (-1)^k x^(2k+1)/(k! (2k+1)), alternating tail."""
    xf = rd.to_float(v, rd.CEIL)
    boost = int(1.45 * xf * xf) + 48
    ctx = PrecisionContext(out_prec + boost)
    x = x_iv(v, ctx)
    x2 = ctx.sq(x)
    p = x  # x^(2k+1) / k!
    total = ctx.zero()
    k = 0
    cut = -(ctx.prec + 8)
    while True:
        term = ctx.div(p, ctx.interval(2 * k + 1))
        total = ctx.add(total, term) if k % 2 == 0 else ctx.sub(total, term)
        k += 1
        p = ctx.div(ctx.mul(p, x2), ctx.interval(k))
        nxt = ctx.div(p, ctx.interval(2 * k + 1))
        if k > xf * xf and fn._term_small(nxt, cut):
            total = ctx.widen(total, _mag_hi(nxt))
            break
        if k > 64 * out_prec:
            raise RuntimeError("erfc series failed to converge")
    return ctx.sub(ctx.one(), ctx.mul(_two_over_sqrt_pi(ctx), total))


def _erfc_sandwich_point(v: rd.MPF, ctx: PrecisionContext) -> RealInterval:
    """(2/sqrt(pi)) e^(-x^2)/(x + sqrt(x^2 + 2)) <= erfc(x) <=
    (2/sqrt(pi)) e^(-x^2)/(x + sqrt(x^2 + 4/pi)) for x > 0."""
    x = x_iv(v, ctx)
    x2 = ctx.sq(x)
    front = ctx.mul(_two_over_sqrt_pi(ctx), fn.exp(ctx.neg(x2), ctx))
    lo_den = ctx.add(x, ctx.sqrt(ctx.add(x2, ctx.interval(2))))
    hi_den = ctx.add(x, ctx.sqrt(ctx.add(x2, ctx.div(ctx.interval(4), fn.pi(ctx)))))
    lower = ctx.div(front, lo_den)
    upper = ctx.div(front, hi_den)
    return RealInterval(lower.lo, upper.hi)


def _erfc_point(v: rd.MPF, out_prec: int) -> RealInterval:
    if rd.cmp(v, rd.from_int(_ERFC_SERIES_MAX)) <= 0:
        return _erfc_series_point(v, out_prec)
    return _erfc_sandwich_point(v, PrecisionContext(out_prec + 16))


def erfc_enclosure(x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    """Enclosure of erfc(x) = (2/sqrt(pi)) int_x^inf e^(-t^2) dt; x.lo >= 0."""
    if rd.sign(x.lo) < 0:
        raise DomainError("erfc_enclosure needs x >= 0")
    hi_part = _erfc_point(x.lo, ctx.prec + 16)
    lo_part = hi_part if x.is_point() else _erfc_point(x.hi, ctx.prec + 16)
    return fn._final(ctx, RealInterval(lo_part.lo, hi_part.hi))


def l_one_quadratic(D: int, m: int, ctx: PrecisionContext) -> Enclosure:
    """Enclosure of L(1, chi_Delta) for the real quadratic field Q(sqrt(D))."""
    if m < 1:
        raise DomainError("need at least one series term")
    chi = make_kronecker(D)
    delta = chi.discriminant.delta
    A = ctx.div(fn.pi(ctx), ctx.interval(delta))
    sqrt_delta = ctx.sqrt(ctx.interval(delta))
    sqrt_a = ctx.sqrt(A)

    sum_e = ctx.zero()
    sum_erfc = ctx.zero()
    for n in range(1, m + 1):
        s = chi.sign(n)
        if s == 0:
            continue
        e_term = exp_integral(ctx.mul(A, ctx.interval(n * n)), ctx)
        f_term = ctx.div(
            erfc_enclosure(ctx.mul(ctx.interval(n), sqrt_a), ctx), ctx.interval(n)
        )
        if s == 1:
            sum_e = ctx.add(sum_e, e_term)
            sum_erfc = ctx.add(sum_erfc, f_term)
        else:
            sum_e = ctx.sub(sum_e, e_term)
            sum_erfc = ctx.sub(sum_erfc, f_term)
    raw = ctx.add(ctx.div(sum_e, sqrt_delta), sum_erfc)

    # |R_m| < Delta^(3/2)/pi^2 * e^(-A m^2) / m^3, every factor outward
    damp = fn.exp(ctx.neg(ctx.mul(A, ctx.interval(m * m))), ctx)
    d32 = ctx.sqrt(ctx.pow_int(ctx.interval(delta), 3))
    bound = ctx.div(
        ctx.mul(d32, damp),
        ctx.mul(ctx.sq(fn.pi(ctx)), ctx.interval(m**3)),
    )
    radius = bound.hi

    value = ctx.widen(raw, radius)
    zero = ctx.zero()
    return Enclosure(
        value=ComplexBox(value, zero),
        params=L1Params(m=m, A=A),
        remainder_radius=radius,
        certified=True,
        raw_value=ComplexBox(raw, zero),
    )


def l_truncated(
    chi: DirichletCharacter, s: ComplexBox, N: int, ctx: PrecisionContext
) -> Enclosure:
    """First N terms of L(s, chi) plus the trivial tail disc, for Re(s) > 1."""
    if N < 2:
        raise DomainError("need N >= 2")
    if rd.cmp(s.re.lo, rd.ONE) <= 0:
        raise DomainError("l_truncated requires Re(s) > 1")
    table = fn.NegPowerTable(N, s, ctx)
    total = ctx.box(0)
    value_cache: dict[int, ComplexBox] = {}
    for n in range(1, N + 1):
        if chi.kind == "kronecker":
            sgn = chi.sign(n)
            if sgn == 0:
                continue
            term = table[n] if sgn == 1 else ctx.cneg(table[n])
        else:
            e = chi.exponent(n)
            if e is None:
                continue
            cv = value_cache.get(e)
            if cv is None:
                cv = char_value(chi, n, ctx)
                value_cache[e] = cv
            term = ctx.cmul(cv, table[n])
        total = ctx.cadd(total, term)

    # |sum_{n>N} chi(n) n^-s| <= sum_{n>N} n^-sigma <= N^(1-sigma)/(sigma-1)
    sigma_lo = RealInterval(s.re.lo, s.re.lo)
    log_n = fn.log(ctx.interval(N), ctx)
    tail = ctx.div(
        fn.exp(ctx.mul(ctx.sub(ctx.one(), sigma_lo), log_n), ctx),
        ctx.sub(sigma_lo, ctx.one()),
    )
    radius = tail.hi
    return Enclosure(
        value=ctx.cwiden(total, radius),
        params={"N": N, "modulus": chi.modulus},
        remainder_radius=radius,
        certified=True,
        raw_value=total,
    )
