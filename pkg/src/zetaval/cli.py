"""Command-line front end: one evaluator per subcommand, text or JSON lines.

Exit codes: 0 success, 2 domain/precondition error, 3 uncertified result
(pole proximity, uncertifiable divisor), 64 usage error.  Interval endpoints
are printed with the lower bound rounded down and the upper bound rounded up,
so printed output is still a valid enclosure when re-read as exact decimals.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from . import rounding as rd
from .characters import make_elementary
from .dedekind import DedekindParams, RealQuadraticField, dedekind_enclosure, hilbert_volume, siegel_zeta_minus1
from .dirichlet import l_one_quadratic, l_truncated
from .elliptic import ReductionKind, derive_quantities, hasse_weil_partial, local_zeta, trace
from .errors import (
    DivisionByZeroInterval,
    DomainError,
    NotPrime,
    PoleProximity,
    SingularModel,
    UncertifiedDivisor,
)
from .exact import QuadraticDiscriminant
from .interval import ComplexBox, PrecisionContext, RealInterval
from .zeta import EMParams, Enclosure, moduli_volume, zeta_auto, zeta_em, zeta_even, zeta_neg


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


@dataclass
class OutputRecord:
    cmd: str
    params: dict
    value: dict
    remainder: str
    certified: bool
    ms: int
    note: str | None = None

    def to_json(self) -> str:
        payload = {
            "cmd": self.cmd,
            "params": self.params,
            "value": self.value,
            "remainder": self.remainder,
            "certified": self.certified,
            "ms": self.ms,
        }
        return json.dumps(payload, separators=(",", ":"), sort_keys=False)

    def to_text(self) -> str:
        lines = [f"cmd: {self.cmd}"]
        if self.params:
            lines.append("params: " + ", ".join(f"{k}={v}" for k, v in self.params.items()))
        if "rational" in self.value:
            lines.append(f"value = {self.value['rational']}")
        else:
            re = self.value["re"]
            im = self.value["im"]
            lines.append(f"re in [{re['lo']}, {re['hi']}]")
            lines.append(f"im in [{im['lo']}, {im['hi']}]")
        if self.note:
            lines.append(self.note)
        lines.append(f"remainder <= {self.remainder}")
        lines.append(f"certified: {str(self.certified).lower()}")
        lines.append(f"elapsed: {self.ms} ms")
        return "\n".join(lines)


def _parse_exact(text: str) -> Fraction:
    try:
        return Fraction(Decimal(text))
    except InvalidOperation as exc:
        raise UsageError(f"not a decimal number: {text!r}") from exc


def _digits_for(prec: int) -> int:
    return max(17, int(prec * 0.30103) + 2)


def _interval_payload(iv: RealInterval, digits: int) -> dict:
    lo, hi = iv.to_decimal(digits)
    return {"lo": lo, "hi": hi}


def _box_payload(box: ComplexBox, digits: int) -> dict:
    return {"re": _interval_payload(box.re, digits), "im": _interval_payload(box.im, digits)}


def _rational_payload(fr: Fraction) -> dict:
    return {"rational": f"{fr.numerator}/{fr.denominator}" if fr.denominator != 1 else str(fr.numerator)}


def _remainder_str(radius: rd.MPF) -> str:
    if radius == rd.ZERO:
        return "0"
    return rd.to_decimal(radius, 3, rd.CEIL)


def _build_parser() -> _Parser:
    parser = _Parser(prog="zetaval", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit one JSON object per line")
    parser.add_argument("--precision", type=int, default=128, metavar="BITS",
                        help="working precision in bits (default 128)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_zeta = sub.add_parser("zeta", help="zeta(s) enclosure on Re(s) >= 1")
    p_zeta.add_argument("--re", required=True)
    p_zeta.add_argument("--im", default="0")
    p_zeta.add_argument("--N", type=int, default=32)
    p_zeta.add_argument("--k", type=int, default=6)
    p_zeta.add_argument("--width", default=None, help="target width; switches to adaptive mode")

    p_special = sub.add_parser("zeta-special", help="exact zeta values")
    group = p_special.add_mutually_exclusive_group(required=True)
    group.add_argument("--even", type=int, help="n for zeta(2n) = r pi^(2n)")
    group.add_argument("--neg", type=int, help="integer a <= 0 for exact zeta(a)")

    p_lfun = sub.add_parser("lfun", help="L(1, chi_Delta) for a fundamental discriminant")
    p_lfun.add_argument("--delta", type=int, required=True)
    p_lfun.add_argument("--terms", type=int, default=20)

    p_ldir = sub.add_parser("ldir", help="truncated L(s, chi) for prime-modulus chi")
    p_ldir.add_argument("--char", required=True, metavar="q,m")
    p_ldir.add_argument("--s", required=True)
    p_ldir.add_argument("--N", type=int, default=1000)

    p_ded = sub.add_parser("dedekind", help="zeta_K(s) for K = Q(sqrt(D))")
    p_ded.add_argument("--d", type=int, required=True)
    p_ded.add_argument("--s", required=True)
    p_ded.add_argument("--mode", choices=["product", "direct"], default="product")

    p_siegel = sub.add_parser("siegel", help="exact zeta_K(-1) for Q(sqrt(p))")
    p_siegel.add_argument("--p", type=int, required=True)

    p_hv = sub.add_parser("hilbert-volume", help="orbifold volume 2 zeta_K(-1)")
    p_hv.add_argument("--p", type=int, required=True)

    p_mv = sub.add_parser("moduli-volume", help="moduli volume, exact rational")
    p_mv.add_argument("--g", type=int, required=True)

    p_ell = sub.add_parser("elliptic", help="Weierstrass curve evaluators")
    p_ell.add_argument("--coeffs", required=True, metavar="a1,a2,a3,a4,a6")
    mode = p_ell.add_mutually_exclusive_group(required=True)
    mode.add_argument("--invariants", action="store_true")
    mode.add_argument("--trace", type=int, metavar="p")
    mode.add_argument("--local", type=int, metavar="p")
    mode.add_argument("--lseries", action="store_true")
    p_ell.add_argument("--s", default="2")
    p_ell.add_argument("--primes-up-to", type=int, default=1000)

    return parser


def _enclosure_record(cmd: str, params: dict, enc: Enclosure, digits: int, t0: float) -> OutputRecord:
    return OutputRecord(
        cmd=cmd,
        params=params,
        value=_box_payload(enc.value, digits),
        remainder=_remainder_str(enc.remainder_radius),
        certified=enc.certified,
        ms=int((time.monotonic() - t0) * 1000),
    )


def _rational_record(cmd: str, params: dict, fr: Fraction, t0: float, note: str | None = None) -> OutputRecord:
    return OutputRecord(
        cmd=cmd,
        params=params,
        value=_rational_payload(fr),
        remainder="0",
        certified=True,
        ms=int((time.monotonic() - t0) * 1000),
        note=note,
    )


def _run_zeta(args, ctx: PrecisionContext, digits: int, t0: float) -> OutputRecord:
    s = ComplexBox(ctx.interval(_parse_exact(args.re)), ctx.interval(_parse_exact(args.im)))
    if args.width is not None:
        enc = zeta_auto(s, _parse_exact(args.width), ctx)
        params = {
            "re": args.re,
            "im": args.im,
            "width": args.width,
            "N": enc.params.N,
            "k": enc.params.k,
            "precision": ctx.prec,
            "meets_target": enc.meets_target,
        }
    else:
        enc = zeta_em(s, EMParams(args.N, args.k), ctx)
        params = {"re": args.re, "im": args.im, "N": args.N, "k": args.k, "precision": ctx.prec}
    return _enclosure_record("zeta", params, enc, digits, t0)


def _run_zeta_special(args, ctx: PrecisionContext, digits: int, t0: float) -> OutputRecord:
    if args.even is not None:
        ze = zeta_even(args.even)
        enc = ze.enclosure(ctx)
        lo, hi = enc.to_decimal(digits)
        record = OutputRecord(
            cmd="zeta-special",
            params={"even": args.even, "precision": ctx.prec},
            value={
                "rational": f"{ze.coefficient.numerator}/{ze.coefficient.denominator}",
            },
            remainder="0",
            certified=True,
            ms=int((time.monotonic() - t0) * 1000),
            note=f"zeta({2 * args.even}) = r * pi^{ze.pi_power}, enclosed in [{lo}, {hi}]",
        )
        return record
    return _rational_record(
        "zeta-special", {"neg": args.neg}, zeta_neg(args.neg), t0
    )


def _run_elliptic(args, ctx: PrecisionContext, digits: int, t0: float) -> OutputRecord:
    try:
        parts = [int(c) for c in args.coeffs.split(",")]
    except ValueError as exc:
        raise UsageError("coefficients must be integers a1,a2,a3,a4,a6") from exc
    if len(parts) != 5:
        raise UsageError("need exactly five coefficients a1,a2,a3,a4,a6")
    curve = derive_quantities(*parts)
    base_params = {"coeffs": args.coeffs}

    if args.invariants:
        value = {
            "b2": str(curve.b2),
            "b4": str(curve.b4),
            "b6": str(curve.b6),
            "b8": str(curve.b8),
            "c4": str(curve.c4),
            "c6": str(curve.c6),
            "disc": str(curve.disc),
            "j": "undefined" if curve.j is None else f"{curve.j.numerator}/{curve.j.denominator}",
        }
        note = "; ".join(f"{k} = {v}" for k, v in value.items())
        return OutputRecord(
            cmd="elliptic",
            params={**base_params, "invariants": True},
            value={"rational": str(curve.disc)},
            remainder="0",
            certified=not curve.is_singular,
            ms=int((time.monotonic() - t0) * 1000),
            note=note,
        )
    if args.trace is not None:
        info = trace(curve, args.trace)
        if info.kind is ReductionKind.GOOD:
            note = f"good: t_p = {info.t_p}, A_p = {info.A_p}"
        else:
            note = f"bad: {info.kind.value}, t_p = {info.t_p}"
        return _rational_record(
            "elliptic",
            {**base_params, "trace": info.p, "kind": info.kind.value},
            Fraction(info.t_p),
            t0,
            note=note,
        )
    s = ctx.interval(_parse_exact(args.s))
    if args.local is not None:
        enc = local_zeta(curve, args.local, ComplexBox(s, ctx.zero()), ctx)
        return _enclosure_record(
            "elliptic", {**base_params, "local": args.local, "s": args.s}, enc, digits, t0
        )
    enc = hasse_weil_partial(curve, s, args.primes_up_to, ctx)
    return _enclosure_record(
        "elliptic",
        {**base_params, "lseries": True, "s": args.s, "primes_up_to": args.primes_up_to},
        enc,
        digits,
        t0,
    )


def _dispatch(args, ctx: PrecisionContext) -> OutputRecord:
    digits = _digits_for(ctx.prec)
    t0 = time.monotonic()
    if args.command == "zeta":
        return _run_zeta(args, ctx, digits, t0)
    if args.command == "zeta-special":
        return _run_zeta_special(args, ctx, digits, t0)
    if args.command == "lfun":
        disc = QuadraticDiscriminant.from_discriminant(args.delta)
        enc = l_one_quadratic(disc.D, args.terms, ctx)
        return _enclosure_record(
            "lfun", {"delta": args.delta, "terms": args.terms, "precision": ctx.prec}, enc, digits, t0
        )
    if args.command == "ldir":
        try:
            q_str, m_str = args.char.split(",")
            q, m = int(q_str), int(m_str)
        except ValueError as exc:
            raise UsageError("--char expects q,m with integers q and m") from exc
        chi = make_elementary(q, m)
        s = ComplexBox(ctx.interval(_parse_exact(args.s)), ctx.zero())
        enc = l_truncated(chi, s, args.N, ctx)
        return _enclosure_record(
            "ldir", {"char": args.char, "s": args.s, "N": args.N}, enc, digits, t0
        )
    if args.command == "dedekind":
        K = RealQuadraticField.of(args.d)
        enc = dedekind_enclosure(K, ctx.interval(_parse_exact(args.s)), args.mode, DedekindParams(), ctx)
        return _enclosure_record(
            "dedekind", {"d": args.d, "s": args.s, "mode": args.mode}, enc, digits, t0
        )
    if args.command == "siegel":
        return _rational_record("siegel", {"p": args.p}, siegel_zeta_minus1(args.p), t0)
    if args.command == "hilbert-volume":
        return _rational_record("hilbert-volume", {"p": args.p}, hilbert_volume(args.p), t0)
    if args.command == "moduli-volume":
        vol, _enc = moduli_volume(args.g, PrecisionContext(128))
        return _rational_record("moduli-volume", {"g": args.g}, vol, t0)
    if args.command == "elliptic":
        return _run_elliptic(args, ctx, digits, t0)
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    try:
        ctx = PrecisionContext(args.precision)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    try:
        record = _dispatch(args, ctx)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    except (PoleProximity, UncertifiedDivisor) as exc:
        print(f"uncertified: {exc}", file=sys.stderr)
        return 3
    except (DomainError, NotPrime, SingularModel, DivisionByZeroInterval) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    print(record.to_json() if args.json else record.to_text())
    return 0


if __name__ == "__main__":
    sys.exit(main())
