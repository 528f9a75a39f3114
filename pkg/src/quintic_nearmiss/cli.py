"""Command-line front end.

Subcommands::

    gen       stream verified solution records (JSON lines or CSV)
    verify    run every cross-check for n < count and print pass counts
    identity  expand g symbolically and confirm its odd-in-x part vanishes
    gf        print generating-function coefficients
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TextIO

from .genfunc import Which, builtin_gf, gf_coefficients
from .recurrence import (
    Product,
    check_eq4,
    f_closed,
    f_rec,
    product_brute,
    product_closed,
)
from .rings import GaussianInt
from .solutions import (
    NotDivisible,
    SolutionRecord,
    abc_closed,
    abcd_from_f,
    check_d_collapse,
    raw_triples,
    scale,
    solutions,
    verify_quintic,
    verify_unscaled,
)
from .sympoly import BiPoly, build_g, negate_x, odd_part_in_x, quintic_bases

CSV_FIELDS = ("n", "a", "b_re", "b_im", "c_re", "c_im", "sign", "verified")
DEFAULT_COUNT = 10

# Small members of the family, as (n, a, b, c, sign); checked by `verify`.
KNOWN_SOLUTIONS = (
    (1, GaussianInt(3), GaussianInt(-2, 3), GaussianInt(2, 3), -1),
    (2, GaussianInt(13), GaussianInt(-6, 11), GaussianInt(6, 11), 1),
    (3, GaussianInt(47), GaussianInt(-24, 41), GaussianInt(24, 41), -1),
)


@dataclass(frozen=True)
class OutputRecord:
    """Serialized form of a :class:`SolutionRecord`; big integers as decimal strings."""

    n: int
    a: str
    b_re: str
    b_im: str
    c_re: str
    c_im: str
    sign: int
    verified: bool

    @classmethod
    def from_solution(cls, rec: SolutionRecord, verified: bool) -> OutputRecord:
        return cls(
            n=rec.n,
            a=str(rec.a.re),
            b_re=str(rec.b.re),
            b_im=str(rec.b.im),
            c_re=str(rec.c.re),
            c_im=str(rec.c.im),
            sign=rec.sign,
            verified=verified,
        )

    def to_solution(self) -> SolutionRecord:
        return SolutionRecord(
            n=self.n,
            a=GaussianInt(int(self.a)),
            b=GaussianInt(int(self.b_re), int(self.b_im)),
            c=GaussianInt(int(self.c_re), int(self.c_im)),
            sign=self.sign,
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "a": self.a,
                "b_re": self.b_re,
                "b_im": self.b_im,
                "c_re": self.c_re,
                "c_im": self.c_im,
                "sign": self.sign,
                "verified": self.verified,
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, line: str) -> OutputRecord:
        d = json.loads(line)
        return cls(
            n=int(d["n"]),
            a=d["a"],
            b_re=d["b_re"],
            b_im=d["b_im"],
            c_re=d["c_re"],
            c_im=d["c_im"],
            sign=int(d["sign"]),
            verified=bool(d["verified"]),
        )

    def csv_row(self) -> list[str]:
        return [
            str(self.n),
            self.a,
            self.b_re,
            self.b_im,
            self.c_re,
            self.c_im,
            str(self.sign),
            "true" if self.verified else "false",
        ]

    @classmethod
    def from_csv_row(cls, row: dict[str, str]) -> OutputRecord:
        return cls(
            n=int(row["n"]),
            a=row["a"],
            b_re=row["b_re"],
            b_im=row["b_im"],
            c_re=row["c_re"],
            c_im=row["c_im"],
            sign=int(row["sign"]),
            verified=row["verified"] == "true",
        )


def parse_records(text: str, fmt: str) -> list[OutputRecord]:
    """Inverse of ``gen`` output."""
    if fmt == "json":
        lines = [line for line in text.splitlines() if line.strip()]
        return [OutputRecord.from_json(line) for line in lines]
    if fmt == "csv":
        rows = csv.DictReader(io.StringIO(text))
        return [OutputRecord.from_csv_row(row) for row in rows]
    raise ValueError(f"unknown format {fmt!r}")


def cmd_gen(
    count: int,
    fmt: str = "json",
    out: TextIO | None = None,
    err: TextIO | None = None,
    records: Iterable[SolutionRecord] | None = None,
) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    if records is None:
        records = solutions(count)
    writer = None
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
    failures = 0
    for rec in records:
        ok = verify_quintic(rec)
        if not ok:
            failures += 1
            print(f"error: n={rec.n}: a^5 + b^5 - c^5 != {rec.sign}", file=err)
        orec = OutputRecord.from_solution(rec, ok)
        if writer is not None:
            writer.writerow(orec.csv_row())
        else:
            out.write(orec.to_json() + "\n")
    return 1 if failures else 0


def _product_checks() -> list[tuple[str, Callable[[int], bool]]]:
    return [
        (
            f"product_{p.value}",
            lambda n, p=p: product_closed(n, p) == product_brute(n, p),
        )
        for p in Product
    ]


def _scales(n: int) -> bool:
    big_a, big_b, big_c, _ = abcd_from_f(n)
    try:
        scale(n, big_a, big_b, big_c)
    except NotDivisible:
        return False
    return True


def default_checks() -> list[tuple[str, Callable[[int], bool]]]:
    """Per-n checks run by ``verify``; each maps n to pass/fail."""
    return [
        ("f_rec=f_closed", lambda n: f_rec(n) == f_closed(n)),
        ("cassini", check_eq4),
        *_product_checks(),
        ("abcd=closed", lambda n: abcd_from_f(n)[:3] == abc_closed(n)),
        ("unscaled_quintic", verify_unscaled),
        ("d_collapse", check_d_collapse),
        ("divisible", _scales),
    ]


def cmd_verify(
    count: int,
    out: TextIO | None = None,
    err: TextIO | None = None,
    checks: Sequence[tuple[str, Callable[[int], bool]]] | None = None,
) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    if checks is None:
        checks = default_checks()
    passed: Counter[str] = Counter()
    ran: Counter[str] = Counter()
    first_failure: tuple[str, int] | None = None

    def record(name: str, n: int, ok: bool) -> None:
        nonlocal first_failure
        ran[name] += 1
        if ok:
            passed[name] += 1
        elif first_failure is None:
            first_failure = (name, n)

    def guarded(fn: Callable[[int], bool], n: int) -> bool:
        try:
            return bool(fn(n))
        except ArithmeticError:
            return False

    raws = list(raw_triples(count))
    recs: list[SolutionRecord | None] = []
    for n, (big_a, big_b, big_c) in enumerate(raws):
        for name, fn in checks:
            record(name, n, guarded(fn, n))
        try:
            rec = scale(n, big_a, big_b, big_c)
        except NotDivisible:
            rec = None
        recs.append(rec)
        record("quintic", n, rec is not None and verify_quintic(rec))

    for which in Which:
        coeffs = gf_coefficients(builtin_gf(which), count)
        for n, got in enumerate(coeffs):
            rec = recs[n]
            if which.raw:
                want = raws[n][which.component]
            elif rec is not None:
                want = (rec.a, rec.b, rec.c)[which.component]
            else:
                want = None
            record(f"gf_{which.value}", n, got.is_gaussian_integer() and got == want)

    matched = []
    for n, a, b, c, sign in KNOWN_SOLUTIONS:
        if n < count:
            r = recs[n]
            ok = r is not None and (r.a, r.b, r.c, r.sign) == (a, b, c, sign)
            record("known_examples", n, ok)
            if ok:
                matched.append(str(n))

    for name in ran:
        print(f"{name}: {passed[name]}/{ran[name]} passed", file=out)
    if matched:
        print(f"known examples matched for n={','.join(matched)}", file=out)
    if first_failure is not None:
        name, n = first_failure
        print(f"FAIL: first failing check {name} at n={n}", file=err)
        return 1
    total = sum(ran.values())
    print(f"OK: {total} checks passed for n=0..{count - 1}", file=out)
    return 0


def _sign_error_bases() -> tuple[BiPoly, BiPoly]:
    first, _ = quintic_bases()
    x, a = BiPoly.x(), BiPoly.a()
    # correct second form has -2ax
    second = GaussianInt(0, 1) * x * x + 2 * a * x + GaussianInt(0, 2) * a * a
    return first, second


def cmd_identity(
    out: TextIO | None = None,
    err: TextIO | None = None,
    bases: tuple[BiPoly, BiPoly] | None = None,
) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    g = build_g(bases)
    odd = odd_part_in_x(g)
    print(f"g: {len(g)} monomials, deg_x={g.degree_x()}, deg_a={g.degree_a()}", file=out)
    print(f"odd-in-x part: {len(odd)} monomials", file=out)
    even = g == negate_x(g)
    print(f"g(x) == g(-x): {'yes' if even else 'no'}", file=out)
    if odd or not even:
        print(f"FAIL: surviving odd terms {odd!r}", file=err)
        return 1
    return 0


def cmd_gf(
    which: Which, count: int, fmt: str = "text", out: TextIO | None = None
) -> int:
    out = out or sys.stdout
    coeffs = gf_coefficients(builtin_gf(which), count)
    writer = csv.writer(out, lineterminator="\n") if fmt == "csv" else None
    if writer is not None:
        writer.writerow(("n", "re", "im"))
    for n, c in enumerate(coeffs):
        z = c.to_gaussian_int() if c.is_gaussian_integer() else c
        if fmt == "text":
            print(f"{n} {z}", file=out)
        elif fmt == "json":
            row = {"n": n, "re": str(z.re), "im": str(z.im)}
            print(json.dumps(row, separators=(",", ":")), file=out)
        else:
            writer.writerow((n, str(z.re), str(z.im)))
    return 0


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"count must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quintic-nearmiss",
        description="Gaussian-integer solutions of a^5 + b^5 = c^5 +/- 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_count(p: argparse.ArgumentParser) -> None:
        p.add_argument("-n", "--count", type=_positive_int, default=DEFAULT_COUNT)

    p = sub.add_parser("gen", help="emit solution records for n = 0..count-1")
    add_count(p)
    p.add_argument("-f", "--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("verify", help="run all cross-checks for n < count")
    add_count(p)

    p = sub.add_parser("identity", help="prove g(x) = g(-x) by expansion")
    p.add_argument("--inject-sign-error", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("gf", help="print generating-function coefficients")
    add_count(p)
    p.add_argument("-w", "--which", choices=[w.value for w in Which], default="a")
    p.add_argument("-f", "--format", choices=("text", "json", "csv"), default="text")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "gen":
        return cmd_gen(args.count, args.format)
    if args.command == "verify":
        return cmd_verify(args.count)
    if args.command == "identity":
        bases = _sign_error_bases() if args.inject_sign_error else None
        return cmd_identity(bases=bases)
    if args.command == "gf":
        return cmd_gf(Which(args.which), args.count, args.format)
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
