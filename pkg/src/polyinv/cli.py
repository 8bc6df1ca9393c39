"""Command line front end.

Exit status: 0 definitive answer (positive or negative), 1 usage or parse error,
2 budget exhausted / unknown, 3 engine precondition failed, 4 engines disagree.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import groebner as gb
from . import poly as P
from .endo import Curve, CurveNotCentered, NotCentered, PolyMap, compose_maps, evaluate
from .filtration import DEGREE, FiltrationSpec
from .inverse import AdmissibilityError, InverseStatus, iterative_inverse
from .parsing import ParseError, format_point, format_poly, parse_curve, parse_map, parse_point
from .poly import Polynomial
from .preimage import NotAdmissible, PreimageStatus, curve_preimage, line_through, point_preimage
from .random_maps import random_tame_automorphism
from .ring import QQ, ZZ, Domain

EXIT_OK, EXIT_USAGE, EXIT_UNKNOWN, EXIT_ENGINE, EXIT_DISAGREE = 0, 1, 2, 3, 4

log = logging.getLogger("polyinv")


class LinearPartSingular(ValueError):
    pass


# -- affine normalisation ----------------------------------------------------


def _invert_matrix(rows, domain: Domain):
    """Exact Gauss-Jordan inverse; ``None`` if singular over ``domain``."""
    n = len(rows)
    work_dom = domain
    if domain == ZZ:
        work_dom = QQ
    M = [[work_dom.convert(v) for v in row] + [int(i == j) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = work_dom.inv(M[col][col])
        M[col] = [work_dom.mul(v, inv) for v in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [work_dom.sub(a, work_dom.mul(f, b)) for a, b in zip(M[r], M[col])]
    out = [row[n:] for row in M]
    if domain == ZZ:
        if any(Fraction(v).denominator != 1 for row in out for v in row):
            return None
        out = [[int(v) for v in row] for row in out]
    return out


def _affine(domain, matrix, shift, names):
    n = len(matrix)
    comps = []
    for i, row in enumerate(matrix):
        terms = {tuple(int(k == j) for k in range(n)): a for j, a in enumerate(row)}
        terms[(0,) * n] = shift[i]
        comps.append(Polynomial(domain, n, terms))
    return PolyMap(comps, names)


def affine_normalize(F: PolyMap):
    """Split ``F = L o F'`` with ``L`` affine and ``F'`` centered with linear part ``I``.

    Returns ``(L, F_prime)``. Raises :class:`LinearPartSingular` when the linear
    part of ``F`` has no inverse over the coefficient domain.
    """
    dom, n = F.domain, F.n
    A = F.linear_matrix()
    b = [c.constant_term() for c in F]
    Ainv = _invert_matrix(A, dom)
    if Ainv is None:
        raise LinearPartSingular(f"linear part {A} is not invertible over {dom}")
    shifted = [c - bi for c, bi in zip(F, b)]
    comps = []
    for i in range(n):
        acc = Polynomial.zero(dom, n)
        for j in range(n):
            if Ainv[i][j]:
                acc = acc + shifted[j] * Ainv[i][j]
        comps.append(acc)
    return _affine(dom, A, b, F.names), PolyMap(comps, F.names)


def affine_inverse(L: PolyMap) -> PolyMap:
    """Inverse of an affine map ``x -> A x + b``."""
    A = L.linear_matrix()
    b = [c.constant_term() for c in L]
    Ainv = _invert_matrix(A, L.domain)
    if Ainv is None:
        raise LinearPartSingular(f"{A} is singular")
    dom = L.domain
    shift = [dom.neg(sum(dom.mul(Ainv[i][j], b[j]) for j in range(len(b)))) for i in range(len(b))]
    shift = [dom.normalize(v) for v in shift]
    return _affine(dom, Ainv, shift, L.names)


# -- sessions -----------------------------------------------------------------


@dataclass
class SessionConfig:
    filtration: FiltrationSpec = DEGREE
    budget: int | None = None
    max_deg: int | None = None
    engine: str = "iterative"  # iterative | groebner | both
    output: str = "pretty"  # pretty | machine
    order: str = "grevlex"
    verbose: bool = False

    def __post_init__(self):
        if self.engine not in ("iterative", "groebner", "both"):
            raise ValueError(f"unknown engine {self.engine!r}")
        if self.output not in ("pretty", "machine"):
            raise ValueError(f"unknown output format {self.output!r}")
        if self.order not in ("lex", "grevlex"):
            raise ValueError(f"unknown order {self.order!r}")
        for name in ("budget", "max_deg"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_env(cls, **kwargs):
        env = os.environ.get("POLYINV_MAX_DEG")
        if env:
            value = int(env)
            if kwargs.get("budget") is None:
                kwargs["budget"] = value
            if kwargs.get("max_deg") is None:
                kwargs["max_deg"] = value
        return cls(**kwargs)


class Report(dict):
    """Ordered key/value result plus the exit status it implies."""

    def __init__(self, command, **fields):
        super().__init__(command=command, **fields)
        self.exit_code = EXIT_OK

    def render(self, output="pretty"):
        if output == "machine":
            return json.dumps(self, indent=2, default=str)
        lines = []
        for k, v in self.items():
            if isinstance(v, list):
                lines.append(f"{k}:")
                lines.extend(f"  {item}" for item in v)
            elif isinstance(v, dict):
                lines.append(f"{k}:")
                lines.extend(f"  {a}: {b}" for a, b in v.items())
            else:
                lines.append(f"{k}: {v}")
        return "\n".join(lines)


def _ms(t0):
    return round((time.perf_counter() - t0) * 1000, 3)


def _conjugate_inverse(G_prime: PolyMap, L: PolyMap) -> PolyMap:
    return compose_maps(G_prime, affine_inverse(L))


def _iterative_invert(F, config, report):
    if config.filtration.kind == "degree":
        L, Fp = affine_normalize(F)
    else:
        L, Fp = None, F
    out = iterative_inverse(Fp, config.filtration, config.budget)
    report["iterations"] = out.iterations
    if config.verbose:
        report["trace"] = [f"K_{d} = {K.text()}" for d, K in enumerate(out.trace)]
    if out.status is InverseStatus.INVERTED:
        G = out.inverse if L is None else _conjugate_inverse(out.inverse, L)
        return "inverted", G
    return out.status.value, None


def cmd_invert(config, F):
    report = Report("invert", map=F.literal(), filtration=str(config.filtration), engine=config.engine)
    t0 = time.perf_counter()
    it_status = it_G = None
    if config.engine in ("iterative", "both"):
        try:
            it_status, it_G = _iterative_invert(F, config, report)
        except (LinearPartSingular, AdmissibilityError, NotCentered) as exc:
            if config.engine == "iterative":
                report.update(status="engine-error", error=str(exc))
                report["time_ms"] = _ms(t0)
                report.exit_code = EXIT_ENGINE
                return report
            report["iterative"] = f"inapplicable: {exc}"
    gb_G = None
    if config.engine in ("groebner", "both"):
        gb_G = gb.gb_inverse(F, config.order)
        gb_status = "inverted" if gb_G is not None else "not-invertible"
    if config.engine == "iterative":
        status, G = it_status, it_G
    elif config.engine == "groebner":
        status, G = gb_status, gb_G
    else:
        status, G = gb_status, gb_G
        if it_status is not None:
            report["iterative_status"] = it_status
            definitive = it_status != InverseStatus.BUDGET_EXHAUSTED.value
            agree = (it_G == gb_G) if definitive else True
            if not agree:
                report["discrepancy"] = {
                    "iterative": it_G.text() if it_G else it_status,
                    "groebner": gb_G.text() if gb_G else gb_status,
                }
                report.exit_code = EXIT_DISAGREE
    report["status"] = status
    if G is not None:
        report["inverse"] = G.text()
    report["time_ms"] = _ms(t0)
    if status == InverseStatus.BUDGET_EXHAUSTED.value:
        report.exit_code = EXIT_UNKNOWN
    return report


def cmd_gb_invert(config, F):
    report = Report("gb-invert", map=F.literal(), order=config.order)
    t0 = time.perf_counter()
    res = gb.essen_basis(F, config.order)
    G = gb.gb_inverse(F, config.order)
    report["status"] = "inverted" if G is not None else "not-invertible"
    if G is not None:
        report["inverse"] = G.text()
    if config.verbose or G is None:
        names = list(F.names) + [f"{v}_" for v in F.names]
        report["basis"] = [format_poly(g, names) for g in res.basis]
    report["time_ms"] = _ms(t0)
    return report


def cmd_preimage(config, F, point=None, curve=None):
    report = Report("preimage", map=F.literal())
    t0 = time.perf_counter()
    try:
        L, Fp = affine_normalize(F)
    except LinearPartSingular as exc:
        report.update(status="engine-error", error=str(exc))
        report.exit_code = EXIT_ENGINE
        return report
    Linv = affine_inverse(L)
    if point is not None:
        report["point"] = format_point(point)
        target = evaluate(Linv, point)
        f = line_through(target, F.domain)
    else:
        report["curve"] = curve.literal()
        shifted = [P.compose(c, list(curve.components)) for c in Linv]
        if any(c.constant_term() for c in shifted):
            report.update(status="engine-error", error="curve is not centered after normalising F(0) to 0")
            report.exit_code = EXIT_ENGINE
            return report
        f = Curve(shifted, curve.var)
    out = curve_preimage(Fp, f, config.max_deg)
    report["status"] = out.status.value
    report["iterations"] = out.iterations
    report["max_deg"] = out.max_deg
    if config.verbose:
        report["trace"] = [f"K_{d} = {K.text()}" for d, K in sorted(out.trace.items())]
    if out.found:
        if point is not None:
            p = out.curve.at(1)
            report["preimage"] = format_point(p)
            report["check"] = format_point(evaluate(F, p))
        else:
            report["preimage"] = out.curve.text()
    elif out.status is PreimageStatus.NOT_FOUND_WITHIN_DEGREE:
        report.exit_code = EXIT_UNKNOWN
    else:
        report.exit_code = EXIT_ENGINE
    if config.engine == "both":
        other = cmd_gb_preimage(config, F, point, curve)
        report["groebner_status"] = other["status"]
        if out.found and other.get("preimage") != report["preimage"]:
            report["discrepancy"] = {"iterative": report["preimage"], "groebner": other.get("preimage")}
            report.exit_code = EXIT_DISAGREE
    report["time_ms"] = _ms(t0)
    return report


def cmd_gb_preimage(config, F, point=None, curve=None):
    report = Report("gb-preimage", map=F.literal(), order=config.order)
    t0 = time.perf_counter()
    if point is not None:
        report["point"] = format_point(point)
        res = gb.gb_point_preimage(F, point, config.order)
        report["status"] = res.status.value
        if res.point is not None:
            report["preimage"] = format_point(res.point)
        names = list(F.names)
    else:
        report["curve"] = curve.literal()
        res = gb.gb_curve_preimage(F, curve, config.order)
        report["status"] = res.status.value
        if res.curve is not None:
            report["preimage"] = res.curve.text()
        names = list(F.names) + [curve.var]
    if config.verbose or "preimage" not in report:
        report["basis"] = [format_poly(g, names) for g in res.basis.basis]
    report["time_ms"] = _ms(t0)
    return report


def cmd_verify(config, F, G):
    report = Report("verify", F=F.literal(), G=G.literal())
    ident = PolyMap.identity(F.domain, F.n, F.names)
    fg = compose_maps(F, G)
    gf = compose_maps(G, F)
    report["F_of_G"] = fg.text()
    report["G_of_F"] = gf.text()
    ok = fg == ident and gf == ident
    report["status"] = "both compositions identity" if ok else "not inverse"
    return report


def cmd_bench(config, seed=None, count=20, n=2, max_deg=4):
    if seed is None:
        seed = random.SystemRandom().randrange(2**32)
    rng = random.Random(seed)
    report = Report("bench", seed=seed, count=count, n=n, max_deg=max_deg)
    timings = {"iterative_ms": 0.0, "groebner_ms": 0.0, "point_preimage_ms": 0.0}
    agree = 0

    for _ in range(count):
        F, Finv = random_tame_automorphism(rng, n, max_deg=max_deg)
        t0 = time.perf_counter()
        out = iterative_inverse(F)
        timings["iterative_ms"] += _ms(t0)
        t0 = time.perf_counter()
        G = gb.gb_inverse(F, config.order)
        timings["groebner_ms"] += _ms(t0)
        c = tuple(rng.randint(-3, 3) for _ in range(n))
        t0 = time.perf_counter()
        p = point_preimage(F, c, config.max_deg)
        timings["point_preimage_ms"] += _ms(t0)
        if out.inverse == G == Finv and evaluate(Finv, c) == p:
            agree += 1
    report.update({k: round(v, 3) for k, v in timings.items()})
    report["agreement"] = f"{agree}/{count}"
    if agree != count:
        report.exit_code = EXIT_DISAGREE
    return report


def run(config: SessionConfig, command: str, **inputs) -> Report:
    """Dispatch ``command`` with already-parsed inputs and return its report."""
    handlers = {
        "invert": cmd_invert,
        "gb-invert": cmd_gb_invert,
        "preimage": cmd_preimage,
        "gb-preimage": cmd_gb_preimage,
        "verify": cmd_verify,
        "bench": cmd_bench,
    }
    if command not in handlers:
        raise ValueError(f"unknown command {command!r}")
    return handlers[command](config, **inputs)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output", choices=["pretty", "machine"], default="pretty")
    common.add_argument("--verbose", "-v", action="store_true")
    common.add_argument("--order", choices=["lex", "grevlex"], default="grevlex",
                        help="order inside the variable blocks of the Gröbner engines")

    parser = argparse.ArgumentParser(prog="polyinv", description="Invert polynomial automorphisms and compute preimages.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invert", parents=[common], help="iterative inverse")
    p.add_argument("map")
    p.add_argument("--filtration", default="degree", help="degree | padic:<p>")
    p.add_argument("--budget", type=int)
    p.add_argument("--engine", choices=["iterative", "groebner", "both"], default="iterative")

    p = sub.add_parser("gb-invert", parents=[common], help="Gröbner-basis inverse")
    p.add_argument("map")

    for name, helptext in (("preimage", "iterative preimage"), ("gb-preimage", "Gröbner preimage")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("map")
        target = p.add_mutually_exclusive_group(required=True)
        target.add_argument("--point")
        target.add_argument("--curve")
        if name == "preimage":
            p.add_argument("--max-deg", type=int)
            p.add_argument("--filtration", default="degree", help="ignored; the curve engine is t-adic")
            p.add_argument("--engine", choices=["iterative", "both"], default="iterative")

    p = sub.add_parser("verify", parents=[common], help="check that G inverts F")
    p.add_argument("F")
    p.add_argument("G")

    p = sub.add_parser("bench", parents=[common], help="time the engines on seeded tame automorphisms")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--max-deg", type=int, default=4)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        config = SessionConfig.from_env(
            filtration=FiltrationSpec.parse(getattr(args, "filtration", "degree")),
            budget=getattr(args, "budget", None),
            max_deg=getattr(args, "max_deg", None) if args.command == "preimage" else None,
            engine=getattr(args, "engine", "iterative"),
            output=args.output,
            order=args.order,
            verbose=args.verbose,
        )
        inputs = {}
        if args.command in ("invert", "gb-invert", "preimage", "gb-preimage"):
            inputs["F"] = parse_map(args.map)
        if args.command in ("preimage", "gb-preimage"):
            F = inputs["F"]
            if args.point is not None:
                inputs["point"] = parse_point(args.point, F.domain)
                if len(inputs["point"]) != F.n:
                    raise ValueError(f"point has {len(inputs['point'])} coordinates, map has n={F.n}")
            else:
                curve = parse_curve(args.curve)
                if curve.domain != F.domain or curve.n != F.n:
                    raise ValueError("curve must match the map's domain and dimension")
                inputs["curve"] = curve
        if args.command == "verify":
            inputs["F"], inputs["G"] = parse_map(args.F), parse_map(args.G)
        if args.command == "bench":
            inputs.update(seed=args.seed, count=args.count, n=args.n, max_deg=args.max_deg)
    except (ParseError, ValueError) as exc:
        print(f"polyinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run(config, args.command, **inputs)
    except (NotCentered, NotAdmissible, AdmissibilityError, CurveNotCentered, LinearPartSingular) as exc:
        print(f"polyinv: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    print(report.render(config.output))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
