"""Validated enclosures of elementary functions and fundamental constants.

Everything here is built from the interval ring operations plus explicit
truncation-error bounds, so the enclosures are rigorous end to end:

* ``pi``/``ln2``: Machin / atanh series of rationals; both alternate or are
  sandwiched, and the tail is bounded by a closed form added outward.
* ``exp``: argument halved until |r| <= 1/2, Taylor series with remainder
  |R_n| <= 2|r|**(n+1)/(n+1)!, then repeated interval squaring.
* ``log``: mantissa reduction to u in [~0.70, ~1.42), atanh series in
  z = (u-1)/(u+1) with geometric tail bound, plus n*ln2.
* ``sin``/``cos``: reduction mod pi/2 with an enclosed pi, alternating Taylor
  series whose remainder is at most the first omitted term for |r| <= 1.
* ``atan``: halving transform t = x/(1+sqrt(1+x^2)) until |x| <= 1/4, then the
  alternating Maclaurin series, first-omitted-term remainder.
* ``euler_gamma``: 50 truncated decimal digits as an exact rational bracket,
  widened one ulp outward per side.

Every function evaluates internally with guard bits and rounds outward into
the caller's working precision, so point arguments come back with widths of a
few ulp.  Constants are derived from cached high-precision references computed
at quantized precision levels; requests at or below the same level therefore
nest under refinement.
"""

from __future__ import annotations

from fractions import Fraction

from . import rounding as rd
from .errors import DomainError
from .interval import ComplexBox, PrecisionContext, RealInterval

_GUARD = 32
_REF_STEP = 512

# truncated (not rounded) leading decimals of the Euler-Mascheroni constant,
# so gamma lies in [digits, digits + 10**-50]
_GAMMA_DIGITS = "0.57721566490153286060651209008240243104215933593992"

_ref_cache: dict[tuple[str, int], RealInterval] = {}


def _ref_level(prec: int) -> int:
    return _REF_STEP * ((prec + 128 + _REF_STEP - 1) // _REF_STEP)


def _final(ctx: PrecisionContext, x: RealInterval) -> RealInterval:
    """Outward round an internally computed interval to the caller precision."""
    p = ctx.prec
    return RealInterval(
        rd.round_to(x.lo[0], x.lo[1], p, rd.FLOOR),
        rd.round_to(x.hi[0], x.hi[1], p, rd.CEIL),
    )


def _widen_upper(ctx: PrecisionContext, x: RealInterval, bound: rd.MPF) -> RealInterval:
    return ctx.widen(x, bound)


def _term_small(t: RealInterval, cut_exp: int) -> bool:
    """True once every point of t has magnitude below 2**cut_exp."""
    m = max(abs(t.lo[0]), abs(t.hi[0]))
    if m == 0:
        return True
    mag = (m, t.lo[1] if abs(t.lo[0]) >= abs(t.hi[0]) else t.hi[1])
    return mag[1] + mag[0].bit_length() <= cut_exp


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------


def _atan_inv_int(q: int, ctx: PrecisionContext) -> RealInterval:
    """Enclosure of atan(1/q) for integer q >= 2.

    Alternating series sum_j (-1)**j / ((2j+1) q**(2j+1)) with decreasing
    terms, so |tail| <= first omitted term.
    """
    inv_q2 = ctx.div(ctx.one(), ctx.interval(q * q))
    p = ctx.div(ctx.one(), ctx.interval(q))
    total = ctx.zero()
    j = 0
    cut = -(ctx.prec + 8)
    while True:
        term = ctx.div(p, ctx.interval(2 * j + 1))
        total = ctx.add(total, term) if j % 2 == 0 else ctx.sub(total, term)
        p = ctx.mul(p, inv_q2)
        j += 1
        nxt = ctx.div(p, ctx.interval(2 * j + 1))
        if _term_small(nxt, cut):
            tail = rd.abs_(nxt.hi)
            return ctx.widen(total, tail)


def pi(ctx: PrecisionContext) -> RealInterval:
    """Enclosure of pi, width a few ulp at the working precision."""
    level = _ref_level(ctx.prec)
    key = ("pi", level)
    ref = _ref_cache.get(key)
    if ref is None:
        rctx = PrecisionContext(level + 16)
        a = _atan_inv_int(5, rctx)
        b = _atan_inv_int(239, rctx)
        ref = rctx.sub(rctx.scale_2exp(a, 4), rctx.scale_2exp(b, 2))
        _ref_cache[key] = ref
    return _final(ctx, ref)


def ln2(ctx: PrecisionContext) -> RealInterval:
    """Enclosure of log(2) = 2*atanh(1/3)."""
    level = _ref_level(ctx.prec)
    key = ("ln2", level)
    ref = _ref_cache.get(key)
    if ref is None:
        rctx = PrecisionContext(level + 16)
        ninth = ctx_div_int(rctx, 1, 9)
        p = ctx_div_int(rctx, 1, 3)
        total = rctx.zero()
        j = 0
        cut = -(rctx.prec + 8)
        while True:
            term = rctx.div(p, rctx.interval(2 * j + 1))
            total = rctx.add(total, term)
            p = rctx.mul(p, ninth)
            j += 1
            nxt = rctx.div(p, rctx.interval(2 * j + 1))
            if _term_small(nxt, cut):
                # remaining positive terms bounded by geometric comparison
                tail = rd.mul(nxt.hi, rd.from_fraction(Fraction(9, 8), 64, rd.CEIL), 64, rd.CEIL)
                total = RealInterval(total.lo, rd.add(total.hi, tail, rctx.prec, rd.CEIL))
                break
        ref = rctx.scale_2exp(total, 1)
        _ref_cache[key] = ref
    return _final(ctx, ref)


def ctx_div_int(ctx: PrecisionContext, a: int, b: int) -> RealInterval:
    return ctx.div(ctx.interval(a), ctx.interval(b))


def euler_gamma(ctx: PrecisionContext) -> RealInterval:
    """Enclosure of the Euler-Mascheroni constant from stored decimals.

    The stored digits are truncated, so gamma is bracketed by
    [digits, digits + 1e-50]; each endpoint is then pushed one ulp outward.
    Enclosures cannot get tighter than 1e-50 however high the precision.
    """
    lo = Fraction(int(_GAMMA_DIGITS[2:]), 10**50)
    hi = lo + Fraction(1, 10**50)
    raw = ctx.interval(lo, hi)
    ulp = (1, raw.hi[1])
    return ctx.widen(raw, ulp)


# ---------------------------------------------------------------------------
# exp and log
# ---------------------------------------------------------------------------


def _exp_point(v: rd.MPF, ctx: PrecisionContext) -> RealInterval:
    """Tiny enclosure of exp(v) at the (already guarded) context precision."""
    if v[0] == 0:
        return ctx.one()
    top = v[1] + abs(v[0]).bit_length()
    k = max(0, top + 1)  # after scaling by 2**-k, |r| <= 1/2
    rv = rd.mul_2exp(v, -k)
    r = RealInterval(rv, rv)
    total = ctx.one()
    term = ctx.one()
    i = 0
    cut = -(ctx.prec + 8)
    while True:
        i += 1
        term = ctx.div(ctx.mul(term, r), ctx.interval(i))
        total = ctx.add(total, term)
        if _term_small(term, cut):
            break
        if i > 4 * ctx.prec + 64:
            raise RuntimeError("exp series failed to converge")
    # |R_i| <= |t_{i+1}| / (1 - |r|) <= 2 |t_i| |r| / (i+1) <= |t_i| / (i+1)
    tail = rd.div(rd.abs_(term.hi if abs(term.hi[0]) >= abs(term.lo[0]) else term.lo),
                  rd.from_int(i + 1), 64, rd.CEIL)
    total = ctx.widen(total, tail)
    for _ in range(k):
        total = ctx.sq(total)
    return total


def exp(x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    """Enclosure of exp over x (monotone: endpoint evaluation)."""
    k_guess = max(0, x.hi[1] + abs(x.hi[0]).bit_length(), x.lo[1] + abs(x.lo[0]).bit_length())
    inner = ctx.with_precision(ctx.prec + _GUARD + k_guess + 8)
    lo = _exp_point(x.lo, inner)
    hi = lo if x.is_point() else _exp_point(x.hi, inner)
    return _final(ctx, RealInterval(lo.lo, hi.hi))


def _log_point(v: rd.MPF, ctx: PrecisionContext) -> RealInterval:
    """Tiny enclosure of log(v) for v > 0 at the guarded context precision."""
    m, e = v
    b = m.bit_length()
    n = e + b
    u = RealInterval((m, -b), (m, -b))  # v * 2**-n, in [1/2, 1)
    # keep |z| small: push u into [~0.707, ~1.414)
    if rd.cmp(u.lo, rd.from_fraction(Fraction(181, 256), 64, rd.FLOOR)) < 0:
        u = ctx.scale_2exp(u, 1)
        n -= 1
    z = ctx.div(ctx.sub(u, ctx.one()), ctx.add(u, ctx.one()))
    z2 = ctx.sq(z)
    p = z
    total = ctx.zero()
    j = 0
    cut = -(ctx.prec + 8)
    while True:
        term = ctx.div(p, ctx.interval(2 * j + 1))
        total = ctx.add(total, term)
        p = ctx.mul(p, z2)
        j += 1
        nxt = ctx.div(p, ctx.interval(2 * j + 1))
        if _term_small(nxt, cut):
            # |tail| <= |z|^(2j+1) / ((2j+1)(1-|z|^2)); |z| <= 0.175 so the
            # geometric factor is below 33/32
            mag = rd.abs_(nxt.hi if abs(nxt.hi[0]) >= abs(nxt.lo[0]) else nxt.lo)
            tail = rd.mul(mag, rd.from_fraction(Fraction(33, 32), 64, rd.CEIL), 64, rd.CEIL)
            total = ctx.widen(total, tail)
            break
    total = ctx.scale_2exp(total, 1)
    if n:
        total = ctx.add(total, ctx.mul(ctx.interval(n), ln2(ctx)))
    return total


def log(x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    """Enclosure of the natural logarithm over x; requires x.lo > 0."""
    if rd.sign(x.lo) <= 0:
        raise DomainError("log needs a strictly positive interval")
    inner = ctx.with_precision(ctx.prec + _GUARD)
    lo = _log_point(x.lo, inner)
    hi = lo if x.is_point() else _log_point(x.hi, inner)
    return _final(ctx, RealInterval(lo.lo, hi.hi))


def sqrt(x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    return ctx.sqrt(x)


# ---------------------------------------------------------------------------
# trigonometric functions
# ---------------------------------------------------------------------------


def _sin_cos_series(r: RealInterval, ctx: PrecisionContext) -> tuple[RealInterval, RealInterval]:
    """Alternating Taylor enclosures of (sin r, cos r) for |r| <= 1."""
    cut = -(ctx.prec + 8)
    r2 = ctx.sq(r)

    sin_total = r
    term = r
    i = 1
    while True:
        term = ctx.div(ctx.mul(term, r2), ctx.interval((i + 1) * (i + 2)))
        sin_total = ctx.sub(sin_total, term) if (i // 2) % 2 == 0 else ctx.add(sin_total, term)
        i += 2
        nxt = ctx.div(ctx.mul(term, r2), ctx.interval((i + 1) * (i + 2)))
        if _term_small(nxt, cut):
            mag = rd.abs_(nxt.hi if abs(nxt.hi[0]) >= abs(nxt.lo[0]) else nxt.lo)
            sin_total = ctx.widen(sin_total, mag)
            break

    cos_total = ctx.one()
    term = ctx.one()
    i = 0
    while True:
        term = ctx.div(ctx.mul(term, r2), ctx.interval((i + 1) * (i + 2)))
        cos_total = ctx.sub(cos_total, term) if (i // 2) % 2 == 0 else ctx.add(cos_total, term)
        i += 2
        nxt = ctx.div(ctx.mul(term, r2), ctx.interval((i + 1) * (i + 2)))
        if _term_small(nxt, cut):
            mag = rd.abs_(nxt.hi if abs(nxt.hi[0]) >= abs(nxt.lo[0]) else nxt.lo)
            cos_total = ctx.widen(cos_total, mag)
            break

    return sin_total, cos_total


def _sin_cos_point(v: rd.MPF, ctx: PrecisionContext) -> tuple[RealInterval, RealInterval]:
    """Tiny enclosures of (sin v, cos v) via reduction mod pi/2."""
    if v[0] == 0:
        return ctx.zero(), ctx.one()
    half_pi = ctx.scale_2exp(pi(ctx), -1)
    # integer multiple estimate from 64-bit directed arithmetic
    q = rd.div(v, half_pi.lo, 64, rd.FLOOR)
    k = round(rd.to_float(q, rd.FLOOR))
    point = RealInterval(v, v)
    r = ctx.sub(point, ctx.mul(ctx.interval(k), half_pi))
    # the estimate can be off by one near multiples of pi/2
    eight_tenths = ctx.interval(Fraction(4, 5))
    for _ in range(4):
        if rd.cmp(r.lo, eight_tenths.hi) > 0:
            k += 1
            r = ctx.sub(point, ctx.mul(ctx.interval(k), half_pi))
        elif rd.cmp(r.hi, rd.neg(eight_tenths.hi)) < 0:
            k -= 1
            r = ctx.sub(point, ctx.mul(ctx.interval(k), half_pi))
        else:
            break
    s, c = _sin_cos_series(r, ctx)
    k %= 4
    if k == 0:
        return s, c
    if k == 1:
        return c, ctx.neg(s)
    if k == 2:
        return ctx.neg(s), ctx.neg(c)
    return ctx.neg(c), s


def _monotone_hull_trig(
    x: RealInterval, ctx: PrecisionContext, which: str
) -> RealInterval:
    import math as _math

    inner = ctx.with_precision(ctx.prec + _GUARD)
    if which == "sin":
        fa = _sin_cos_point(x.lo, inner)[0]
        fb = _sin_cos_point(x.hi, inner)[0]
        max_at, min_at = 0.5, 1.5  # multiples of pi where extrema sit, over 2
    else:
        fa = _sin_cos_point(x.lo, inner)[1]
        fb = _sin_cos_point(x.hi, inner)[1]
        max_at, min_at = 0.0, 1.0
    res = ctx.hull(_final(ctx, fa), _final(ctx, fb))
    lo_f, hi_f = x.to_floats()
    if hi_f - lo_f >= 2 * _math.pi:
        return _final(ctx, ctx.interval(-1, 1))
    two_pi = 2 * _math.pi
    # conservative crossing tests: padding only ever widens the hull
    pad = 1e-9 * (1 + abs(lo_f) + abs(hi_f))
    n0 = _math.ceil((lo_f - max_at * _math.pi - pad) / two_pi)
    if max_at * _math.pi + n0 * two_pi <= hi_f + pad:
        res = ctx.hull(res, ctx.one())
    n1 = _math.ceil((lo_f - min_at * _math.pi - pad) / two_pi)
    if min_at * _math.pi + n1 * two_pi <= hi_f + pad:
        res = ctx.hull(res, ctx.neg(ctx.one()))
    one = ctx.one()
    neg_one = ctx.neg(one)
    lo = neg_one.lo if rd.cmp(res.lo, neg_one.lo) < 0 else res.lo
    hi = one.hi if rd.cmp(res.hi, one.hi) > 0 else res.hi
    return RealInterval(lo, hi)


def sin(x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    return _monotone_hull_trig(x, ctx, "sin")


def cos(x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    return _monotone_hull_trig(x, ctx, "cos")


# ---------------------------------------------------------------------------
# arctangent
# ---------------------------------------------------------------------------


def _atan_point(v: rd.MPF, ctx: PrecisionContext) -> RealInterval:
    if v[0] == 0:
        return ctx.zero()
    if v[0] < 0:
        return ctx.neg(_atan_point(rd.neg(v), ctx))
    x = RealInterval(v, v)
    add_half_pi = False
    if rd.cmp(v, rd.ONE) > 0:
        add_half_pi = True
        x = ctx.div(ctx.one(), x)
    doublings = 0
    quarter = rd.from_fraction(Fraction(1, 4), 64, rd.CEIL)
    while rd.cmp(x.hi, quarter) > 0:
        denom = ctx.add(ctx.one(), ctx.sqrt(ctx.add(ctx.one(), ctx.sq(x))))
        x = ctx.div(x, denom)
        doublings += 1
        if doublings > 6:
            break
    x2 = ctx.sq(x)
    p = x
    total = ctx.zero()
    j = 0
    cut = -(ctx.prec + 8)
    while True:
        term = ctx.div(p, ctx.interval(2 * j + 1))
        total = ctx.add(total, term) if j % 2 == 0 else ctx.sub(total, term)
        p = ctx.mul(p, x2)
        j += 1
        nxt = ctx.div(p, ctx.interval(2 * j + 1))
        if _term_small(nxt, cut):
            mag = rd.abs_(nxt.hi if abs(nxt.hi[0]) >= abs(nxt.lo[0]) else nxt.lo)
            total = ctx.widen(total, mag)
            break
    total = ctx.scale_2exp(total, doublings)
    if add_half_pi:
        total = ctx.sub(ctx.scale_2exp(pi(ctx), -1), total)
    return total


def atan(x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    """Enclosure of arctan over x (monotone: endpoint evaluation)."""
    inner = ctx.with_precision(ctx.prec + _GUARD)
    lo = _atan_point(x.lo, inner)
    hi = lo if x.is_point() else _atan_point(x.hi, inner)
    return _final(ctx, RealInterval(lo.lo, hi.hi))


# ---------------------------------------------------------------------------
# complex helpers and integer powers
# ---------------------------------------------------------------------------


def cexp(z: ComplexBox, ctx: PrecisionContext) -> ComplexBox:
    """Enclosure of exp over a complex box: e^re * (cos im + i sin im)."""
    mag = exp(z.re, ctx)
    c = cos(z.im, ctx)
    s = sin(z.im, ctx)
    return ComplexBox(ctx.mul(mag, c), ctx.mul(mag, s))


def exact_point_int(x: RealInterval) -> int | None:
    """The integer a point interval represents exactly, else None."""
    if not x.is_point():
        return None
    return rd.exact_int(x.lo)


def real_exponent_of(s: ComplexBox) -> int | None:
    """s as an exact small nonnegative integer, when the box is that point."""
    if not (s.im.is_point() and s.im.lo == rd.ZERO):
        return None
    n = exact_point_int(s.re)
    if n is None or n < 0 or n > 64:
        return None
    return n


def neg_power(n: int, s: ComplexBox, ctx: PrecisionContext) -> ComplexBox:
    """Enclosure of n**(-s) for an integer n >= 1 over the box s."""
    if n < 1:
        raise DomainError("neg_power needs n >= 1")
    if n == 1:
        return ctx.box(1)
    k = real_exponent_of(s)
    if k is not None:
        return ctx.box(ctx.interval(Fraction(1, n**k)))
    ln_n = log(ctx.interval(n), ctx)
    w = ComplexBox(ctx.neg(ctx.mul(s.re, ln_n)), ctx.neg(ctx.mul(s.im, ln_n)))
    return cexp(w, ctx)


class NegPowerTable:
    """Enclosures of n**(-s) for 1 <= n <= limit, built multiplicatively.

    Transcendental evaluations happen only at primes; composite entries are
    interval products along the factorization, which preserves containment.
    """

    def __init__(self, limit: int, s: ComplexBox, ctx: PrecisionContext):
        self.limit = limit
        self.ctx = ctx
        spf = _smallest_prime_factors(limit)
        boxes: list[ComplexBox | None] = [None] * (limit + 1)
        if limit >= 1:
            boxes[1] = ctx.box(1)
        for n in range(2, limit + 1):
            p = spf[n]
            if p == n:
                boxes[n] = neg_power(n, s, ctx)
            else:
                boxes[n] = ctx.cmul(boxes[p], boxes[n // p])
        self._boxes = boxes

    def __getitem__(self, n: int) -> ComplexBox:
        b = self._boxes[n]
        if b is None:
            raise IndexError(n)
        return b


def _smallest_prime_factors(limit: int) -> list[int]:
    spf = list(range(limit + 1))
    i = 2
    while i * i <= limit:
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    return spf
