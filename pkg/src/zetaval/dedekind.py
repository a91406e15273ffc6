"""Dedekind zeta of real quadratic fields and its exact value at -1.

For K = Q(sqrt(D)) the ideal-counting function is r_K(n) = sum_{d|n} chi(d)
with chi the Kronecker character of the field discriminant, and

    zeta_K(s) = sum_n r_K(n) n^-s = zeta(s) * L(s, chi).

Both routes are implemented: ``product`` multiplies the Euler-Maclaurin zeta
box by the truncated L-series box; ``direct`` sums r_K(n) n^-s and bounds the
tail by r_K(n) <= sigma_0(n) <= 2 sqrt(n), which needs sigma > 3/2.  The two
must intersect, and the tests use that as an oracle-equivalence check.

Siegel's formula gives the exact rational

    zeta_K(-1) = (1/30) sum_{b odd, b^2 < p} sigma_1((p - b^2)/4)

for prime p = 1 (mod 4); the Hilbert modular orbifold volume is twice that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import functions as fn
from . import rounding as rd
from .characters import make_kronecker
from .dirichlet import l_truncated
from .errors import DomainError
from .exact import QuadraticDiscriminant, is_prime, kronecker, sigma1
from .interval import ComplexBox, PrecisionContext, RealInterval
from .zeta import EMParams, Enclosure, zeta_em


@dataclass(frozen=True)
class RealQuadraticField:
    D: int
    discriminant: QuadraticDiscriminant

    @classmethod
    def of(cls, D: int) -> "RealQuadraticField":
        return cls(D=D, discriminant=QuadraticDiscriminant.from_squarefree(D))


@dataclass(frozen=True)
class DedekindParams:
    em: EMParams = EMParams(32, 6)
    l_terms: int = 2000
    direct_terms: int = 10_000


def siegel_zeta_minus1(p: int) -> Fraction:
    """Exact zeta_K(-1) for K = Q(sqrt(p)), prime p = 1 (mod 4)."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p % 4 != 1:
        raise DomainError("Siegel's formula here needs p = 1 (mod 4)")
    total = 0
    b = 1
    while b * b < p:
        total += sigma1((p - b * b) // 4)
        b += 2
    return Fraction(total, 30)


def hilbert_volume(p: int) -> Fraction:
    """Volume of the Hilbert modular orbifold for Q(sqrt(p)): 2 zeta_K(-1)."""
    return 2 * siegel_zeta_minus1(p)


def ideal_count(K: RealQuadraticField, n: int) -> int:
    """Number of ideals of norm n: r_K(n) = sum_{d | n} chi_Delta(d)."""
    if n < 1:
        raise DomainError("need n >= 1")
    delta = K.discriminant.delta
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += kronecker(delta, d)
            if d != n // d:
                total += kronecker(delta, n // d)
        d += 1
    return total


def dedekind_enclosure(
    K: RealQuadraticField,
    s: RealInterval,
    mode: str = "product",
    params: DedekindParams = DedekindParams(),
    ctx: PrecisionContext = PrecisionContext(),
) -> Enclosure:
    """Enclosure of zeta_K(s) for real s with s.lo > 1.

    ``product`` mode multiplies the zeta and L enclosures (valid for any
    sigma > 1 away from the pole); ``direct`` mode sums the ideal-count
    Dirichlet series and requires sigma > 3/2 for its tail bound.
    """
    if rd.cmp(s.lo, rd.ONE) <= 0:
        raise DomainError("dedekind_enclosure needs s > 1")
    s_box = ComplexBox(s, ctx.zero())
    if mode == "product":
        z = zeta_em(s_box, params.em, ctx)
        chi = make_kronecker(K.D)
        l_val = l_truncated(chi, s_box, params.l_terms, ctx)
        value = ctx.cmul(z.value, l_val.value)
        raw = ctx.cmul(z.raw_value, l_val.raw_value)
        return Enclosure(
            value=value,
            params=params,
            remainder_radius=rd.ZERO,  # both factor widenings already applied
            certified=True,
            raw_value=raw,
        )
    if mode != "direct":
        raise DomainError(f"unknown mode {mode!r}")
    three_halves = rd.from_fraction(Fraction(3, 2), 64, rd.CEIL)
    if rd.cmp(s.lo, three_halves) <= 0:
        raise DomainError("direct mode needs s > 3/2 for its divisor tail bound")

    N = params.direct_terms
    table = fn.NegPowerTable(N, s_box, ctx)
    total = ctx.box(0)
    for n in range(1, N + 1):
        r = ideal_count(K, n)
        if r:
            total = ctx.cadd(total, ctx.cmul(ctx.box(r), table[n]))

    # r_K(n) <= sigma_0(n) <= 2 sqrt(n), so the tail is below
    # 2 sum_{n>N} n^(1/2-sigma) <= 2 N^(3/2-sigma)/(sigma-3/2)
    sigma_lo = RealInterval(s.lo, s.lo)
    log_n = fn.log(ctx.interval(N), ctx)
    expo = ctx.mul(ctx.sub(ctx.interval(Fraction(3, 2)), sigma_lo), log_n)
    tail = ctx.div(
        ctx.scale_2exp(fn.exp(expo, ctx), 1),
        ctx.sub(sigma_lo, ctx.interval(Fraction(3, 2))),
    )
    radius = tail.hi
    return Enclosure(
        value=ctx.cwiden(total, radius),
        params=params,
        remainder_radius=radius,
        certified=True,
        raw_value=total,
    )
