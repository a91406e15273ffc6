"""Weierstrass curves over Q: invariants, reduction data, and L-functions.

``derive_quantities`` computes the standard b/c-coefficients, discriminant and
j-invariant exactly and asserts the two consistency identities
``4 b8 = b2 b6 - b4**2`` and ``1728 disc = c4**3 - c6**2``.

Reduction mod p is taken on the model as given: no minimal-model reduction is
performed, so bad-prime data describes the supplied equation, not an
isomorphism class.  At a good prime the trace comes from an exhaustive point
count; at a bad prime the unique singular point is located and the tangent
cone ``lambda**2 + a1 lambda - (3 x0 + a2)`` decides cusp / split node /
nonsplit node, via Euler's criterion for odd p and an exhaustive check at 2.

The partial Hasse-Weil product multiplies exact local factors over p <= N and
a two-sided tail factor [exp(-B), exp(B)] with

    B = 2 N^(3/2-sigma) / ((sigma-3/2)(1-2^(1/2-sigma))),

which comes from |t_p| <= 2 sqrt(p): each log-factor is at most
-2 log(1 - p^(1/2-sigma)) <= 2 p^(1/2-sigma)/(1-2^(1/2-sigma)), summed by
integral comparison.  Bad-prime factors (|t_p| <= 1) obey the same bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import functions as fn
from . import kernels
from . import rounding as rd
from .errors import DomainError, SingularModel, UncertifiedDivisor
from .exact import is_prime, primes_up_to
from .interval import ComplexBox, PrecisionContext, RealInterval, certify_nonzero
from .zeta import Enclosure


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    j: Fraction | None  # None when disc == 0

    @property
    def is_singular(self) -> bool:
        return self.disc == 0

    def coeffs(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)


def derive_quantities(a1: int, a2: int, a3: int, a4: int, a6: int) -> WeierstrassCurve:
    """Exact invariants of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    disc = -(b2 * b2 * b8) - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if 4 * b8 != b2 * b6 - b4 * b4 or 1728 * disc != c4**3 - c6 * c6:
        raise AssertionError("internal invariant identities violated")
    j = Fraction(c4**3, disc) if disc else None
    return WeierstrassCurve(a1, a2, a3, a4, a6, b2, b4, b6, b8, c4, c6, disc, j)


class ReductionKind(enum.Enum):
    GOOD = "good"
    CUSP = "cusp"
    SPLIT_NODE = "split node"
    NONSPLIT_NODE = "nonsplit node"


@dataclass(frozen=True)
class ReductionInfo:
    p: int
    A_p: int  # F_p-points of the reduced curve, including infinity
    t_p: int
    kind: ReductionKind


def count_points(curve: WeierstrassCurve, p: int) -> int:
    """Points of the reduction mod p, including infinity (any prime p)."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return int(kernels.count_points_batch(curve.coeffs(), [p])[0])


def _singular_point(curve: WeierstrassCurve, p: int) -> tuple[int, int]:
    a1, a2, a3, a4, a6 = (c % p for c in curve.coeffs())
    if p == 2:
        hits = []
        for x in range(2):
            for y in range(2):
                f_val = (y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6) % 2
                fx = (a1 * y - 3 * x * x - 2 * a2 * x - a4) % 2
                fy = (2 * y + a1 * x + a3) % 2
                if f_val == 0 and fx == 0 and fy == 0:
                    hits.append((x, y))
        if len(hits) != 1:
            raise AssertionError("expected exactly one singular point mod 2")
        return hits[0]
    # odd p: complete the square; v^2 = g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6
    g = (4, curve.b2 % p, (2 * curve.b4) % p, curve.b6 % p)
    hits = []
    for x in range(p):
        gx = ((g[0] * x + g[1]) * x + g[2]) * x + g[3]
        dgx = (3 * g[0] * x + 2 * g[1]) * x + g[2]
        if gx % p == 0 and dgx % p == 0:
            hits.append(x)
    if len(hits) != 1:
        raise AssertionError("expected exactly one singular x-coordinate")
    x0 = hits[0]
    inv2 = pow(2, -1, p)
    y0 = (-(a1 * x0 + a3) * inv2) % p
    return x0, y0


def trace(curve: WeierstrassCurve, p: int) -> ReductionInfo:
    """Trace of Frobenius at good p, or the singular-fiber value at bad p."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    a_p = count_points(curve, p)
    if curve.disc % p != 0:
        return ReductionInfo(p=p, A_p=a_p, t_p=1 + p - a_p, kind=ReductionKind.GOOD)
    x0, _y0 = _singular_point(curve, p)
    # tangent cone at the singular point: lambda^2 + q11 lambda + q20
    q11 = curve.a1 % p
    q20 = (-3 * x0 - curve.a2) % p
    if p == 2:
        if q11 == 0:
            kind = ReductionKind.CUSP
        elif q20 == 0:
            kind = ReductionKind.SPLIT_NODE
        else:
            kind = ReductionKind.NONSPLIT_NODE
    else:
        d = (q11 * q11 - 4 * q20) % p
        if d == 0:
            kind = ReductionKind.CUSP
        elif pow(d, (p - 1) // 2, p) == 1:
            kind = ReductionKind.SPLIT_NODE
        else:
            kind = ReductionKind.NONSPLIT_NODE
    t_p = {ReductionKind.CUSP: 0, ReductionKind.SPLIT_NODE: 1, ReductionKind.NONSPLIT_NODE: -1}[kind]
    return ReductionInfo(p=p, A_p=a_p, t_p=t_p, kind=kind)


def _local_factor_inverse_den(
    info: ReductionInfo, s: ComplexBox, ctx: PrecisionContext
) -> ComplexBox:
    """Denominator of the local Euler factor at p for the given reduction."""
    p = info.p
    ps = fn.neg_power(p, s, ctx)  # p^-s
    t_term = ctx.cmul(ctx.box(info.t_p), ps)
    den = ctx.csub(ctx.box(1), t_term)
    if info.kind is ReductionKind.GOOD:
        p_one_2s = ctx.cmul(ctx.box(p), ctx.cmul(ps, ps))  # p^(1-2s)
        den = ctx.cadd(den, p_one_2s)
    return den


def local_zeta(
    curve: WeierstrassCurve, p: int, s: ComplexBox, ctx: PrecisionContext
) -> Enclosure:
    """Artin-Hasse local zeta (1 - t_p p^-s + p^(1-2s)) / ((1-p^-s)(1-p^(1-s)))."""
    if curve.disc == 0 or curve.disc % p == 0:
        raise DomainError(f"p={p} is not a good prime for this model")
    info = trace(curve, p)
    ps = fn.neg_power(p, s, ctx)
    num = _local_factor_inverse_den(info, s, ctx)
    one = ctx.box(1)
    den1 = ctx.csub(one, ps)
    den2 = ctx.csub(one, ctx.cmul(ctx.box(p), ps))
    for d in (den1, den2):
        if not certify_nonzero(d).is_certified:
            raise UncertifiedDivisor("local zeta denominator not certified nonzero")
    value = ctx.cdiv(ctx.cdiv(num, den1), den2)
    return Enclosure(
        value=value,
        params={"p": p, "t_p": info.t_p},
        remainder_radius=rd.ZERO,
        certified=True,
        raw_value=value,
    )


def hasse_weil_partial(
    curve: WeierstrassCurve,
    s: RealInterval,
    primes_to: int,
    ctx: PrecisionContext,
) -> Enclosure:
    """Partial product of inverse local factors over p <= primes_to, with a
    certified two-sided tail factor; needs s.lo > 3/2 + 1e-6."""
    if curve.is_singular:
        raise SingularModel("the model has discriminant zero")
    min_sigma = Fraction(3, 2) + Fraction(1, 10**6)
    if rd.to_fraction(s.lo) <= min_sigma:
        raise DomainError("hasse_weil_partial needs s.lo > 3/2 + 1e-6")
    if primes_to < 3:
        raise DomainError("need primes_to >= 3")

    s_box = ComplexBox(s, ctx.zero())
    primes = primes_up_to(primes_to)
    good = [p for p in primes if curve.disc % p != 0]
    counts = kernels.count_points_batch(curve.coeffs(), good)
    infos: dict[int, ReductionInfo] = {
        p: ReductionInfo(p=p, A_p=int(a), t_p=1 + p - int(a), kind=ReductionKind.GOOD)
        for p, a in zip(good, counts)
    }
    for p in primes:
        if p not in infos:
            infos[p] = trace(curve, p)

    acc = ctx.box(1)
    one = ctx.box(1)
    for p in primes:  # ascending, pinned for reproducible endpoints
        den = _local_factor_inverse_den(infos[p], s_box, ctx)
        if not certify_nonzero(den).is_certified:
            raise UncertifiedDivisor(f"local factor at p={p} not certified nonzero")
        acc = ctx.cmul(acc, ctx.cdiv(one, den))

    # tail: log-product bound B, then the factor lies in [e^-B, e^B]
    sigma_lo = RealInterval(s.lo, s.lo)
    log_n = fn.log(ctx.interval(primes_to), ctx)
    n_pow = fn.exp(ctx.mul(ctx.sub(ctx.interval(Fraction(3, 2)), sigma_lo), log_n), ctx)
    two_pow = fn.exp(
        ctx.mul(ctx.sub(ctx.interval(Fraction(1, 2)), sigma_lo), fn.ln2(ctx)), ctx
    )
    b_bound = ctx.div(
        ctx.scale_2exp(n_pow, 1),
        ctx.mul(
            ctx.sub(sigma_lo, ctx.interval(Fraction(3, 2))),
            ctx.sub(ctx.one(), two_pow),
        ),
    )
    b_up = b_bound.hi
    tail = fn.exp(RealInterval(rd.neg(b_up), b_up), ctx)
    value = ctx.cmul(acc, ComplexBox(tail, ctx.zero()))
    return Enclosure(
        value=value,
        params={"primes_to": primes_to, "log_tail_bound": rd.to_float(b_up, rd.CEIL)},
        remainder_radius=b_up,
        certified=True,
        raw_value=acc,
    )
