"""Command-line front end: ``logharmonic {render,verify,tables,bohr,inner-radius,generate}``.

All output is deterministic for a fixed argument list: randomness comes
only from ``--seed`` and no timings or dates are written.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np
from matplotlib.colors import hsv_to_rgb

from . import bohr, bounds, diffgeo, lhmap, repgen, slit
from .cseries import ComplexSeries, mobius_series
from .sampling import SamplingConfig, VerificationReport

SUITES = ("distortion", "coeffs", "bohr", "schwarzian", "bloch", "starlike")
TABLES = ("coefficients", "bohr_radii", "inner_radii")


def num(x) -> str:
    """Shortest round-trip decimal of a float."""
    return repr(float(x))


def parse_sweep(text: str) -> np.ndarray:
    """``start:stop:step`` (inclusive) or a single value."""
    parts = [float(p) for p in text.split(":")]
    if len(parts) == 1:
        return np.array(parts)
    if len(parts) != 3 or parts[2] <= 0:
        raise argparse.ArgumentTypeError(f"bad sweep {text!r}; expected start:stop:step")
    a, b, s = parts
    count = int(round((b - a) / s)) + 1
    # rounding keeps 0.15 from printing as 0.15000000000000002
    return np.round(a + s * np.arange(count), 12)


def grid_from(args) -> SamplingConfig:
    return SamplingConfig.polar(count=args.radii, angles=args.angles, tol=args.tol)


def map_from(args) -> lhmap.LogHarmonicMap:
    name = args.map
    if name == "generated":
        return repgen.random_map(np.random.default_rng(args.seed), args.alpha, args.order)
    if name == "koebe_alpha":
        return lhmap.koebe_alpha(args.alpha, args.order)
    if name == "F_lambda":
        return lhmap.f_lambda(args.lam, args.order)
    return lhmap.from_catalog(name, order=args.order)


def emit(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def write_csv(header, rows, out):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([num(x) if isinstance(x, (float, np.floating)) else x for x in row])
    emit(buf.getvalue(), out)


# -- render ------------------------------------------------------------------

def domain_colors(f: np.ndarray) -> np.ndarray:
    """RGB in ``[0, 1]``: hue ``arg f / 2pi``, value ``0.15 + 0.85 |f|/(1+|f|)``."""
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        hue = np.mod(np.angle(f) / (2 * np.pi), 1.0)
        mod = np.abs(f)
        val = 0.15 + 0.85 * np.where(np.isfinite(mod), mod / (1 + mod), 1.0)
    hsv = np.stack([hue, np.ones_like(hue), val], axis=-1)
    return hsv_to_rgb(np.nan_to_num(hsv, nan=0.0))


def render_ppm(m: lhmap.LogHarmonicMap, size: int) -> bytes:
    x = np.linspace(-1, 1, size)
    z = x[None, :] + 1j * x[::-1, None]
    inside = np.abs(z) < 1
    f = np.zeros_like(z)
    f[inside] = lhmap.evaluate_f(m, z[inside])
    rgb = domain_colors(f)
    rgb[~inside] = 1.0
    pix = np.round(rgb * 255).astype(np.uint8)
    return f"P6\n{size} {size}\n255\n".encode() + pix.tobytes()


def cmd_render(args) -> int:
    m = map_from(args)
    if args.format == "csv":
        z = grid_from(args).points().ravel()
        f = lhmap.evaluate_f(m, z)
        write_csv(["re_z", "im_z", "re_f", "im_f"],
                  ((a.real, a.imag, b.real, b.imag) for a, b in zip(z, f)), args.out)
        return 0
    data = render_ppm(m, args.size)
    if args.out in (None, "-"):
        sys.stdout.buffer.write(data)
    else:
        with open(args.out, "wb") as fh:
            fh.write(data)
    return 0


# -- verify ------------------------------------------------------------------

def _alphas(args):
    return [args.alpha] if args.alpha is not None else [0.0, 0.25, 0.5, 0.75]


def suite_distortion(args, rng):
    cfg = grid_from(args)
    reps = []
    for a in _alphas(args):
        for _ in range(args.trials):
            m = repgen.random_map(rng, a, args.order)
            reps.extend(bounds.distortion_parts(m, a, cfg).values())
    return reps


def suite_coeffs(args, rng):
    reps = []
    for a in _alphas(args):
        d = repgen.DiscreteMeasure.dirac()
        ca, cb = repgen.coefficients(d, d, a, args.n_max)
        n = np.arange(1, args.n_max + 1)
        err = max(np.max(np.abs(ca - bounds.coefficient_bound_a(n, a))),
                  np.max(np.abs(cb - bounds.coefficient_bound_b(n, a))))
        reps.append(VerificationReport(f"coefficient_sharpness[alpha={a:g}]", err < 1e-10, 1e-10 - err, 0j,
                                       2 * args.n_max, 1e-10, {"alpha": a}))
        worst = None
        for _ in range(args.trials):
            r = bounds.verify_coefficient_bounds(repgen.DiscreteMeasure.random(rng),
                                                 repgen.DiscreteMeasure.random(rng), a,
                                                 args.n_max, args.tol)
            if worst is None or r.worst_margin < worst.worst_margin:
                worst = r
        worst.theorem_id = f"coefficient_bounds[alpha={a:g}, trials={args.trials}]"
        reps.append(worst)
    return reps


def suite_bohr(args, rng):
    reps = []
    for a in _alphas(args):
        for w, s in bohr.bohr_radii(a).items():
            reps.append(VerificationReport(f"{w}[alpha={a:g}]", abs(s.residual) < 1e-12,
                                           1e-12 - abs(s.residual), complex(s.root), s.iterations, 1e-12,
                                           {"alpha": a, "root": s.root}))
        if a >= 1:
            continue
        maps = [lhmap.koebe_alpha(a, args.order)]
        maps += [repgen.random_map(rng, a, args.order) for _ in range(args.trials)]
        for m in maps:
            for which in ("H", "G", "f"):
                reps.append(bohr.verify_bohr(m, a, which, tol=args.tol))
    return reps


def _mu_map(kind: str) -> diffgeo.NonVanishingMap:
    lh = diffgeo.exp_poly([0, 1, 0.2])
    if kind == "constant":
        mu = ComplexSeries.constant(0.3 + 0.4j, lh.order)
    else:
        mu = ComplexSeries.variable(lh.order)
    return diffgeo.NonVanishingMap.with_dilatation(lh, mu, f"mu={kind}")


def suite_schwarzian(args, rng):
    cfg = grid_from(args)
    m = _mu_map(args.mu)
    z = cfg.points()
    mixed = np.abs(diffgeo.mixed_derivative_Pf(m, z))
    reps = []
    if args.mu == "constant":
        reps.append(VerificationReport.from_margins("harmonic_Pf[mu=constant]", z, 1e-10 - mixed, 0.0))
    else:
        inner = np.abs(z) <= 0.5
        k = int(np.argmax(np.where(inner, mixed, -1)))
        top = float(mixed.ravel()[k])
        reps.append(VerificationReport("nonharmonic_Pf[mu=z]", top > 1e-2, top - 1e-2,
                                       complex(z.ravel()[k]), int(inner.sum()), 0.0, {"max": top}))
    zs = z[np.abs(z) <= 0.8]
    diff = np.abs(diffgeo.mixed_derivative_Pf(m, zs) - diffgeo.mixed_derivative_Pf_fd(m, zs))
    reps.append(VerificationReport.from_margins(f"mixed_fd_agreement[mu={args.mu}]", zs, 1e-5 - diff, 0.0))
    worst, wz = 0.0, 0j
    for _ in range(args.trials):
        f = diffgeo.random_bloch_map(rng, args.order)
        a = 0.7 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        pts = 0.5 * np.sqrt(rng.uniform(size=4)) * np.exp(2j * np.pi * rng.uniform(size=4))
        res = diffgeo.chain_rule_check(f, mobius_series(a, args.order), pts)
        if res > worst:
            worst, wz = res, complex(a)
    reps.append(VerificationReport("chain_rules", worst < 1e-8, 1e-8 - worst, wz, args.trials, 0.0,
                                   {"max_residual": worst}))
    return reps


def suite_bloch(args, rng):
    cfg = grid_from(args)
    reps = []
    for _ in range(args.trials):
        f = diffgeo.random_bloch_map(rng, args.order)
        a = 0.7 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        p, q = rng.normal(size=2) + 1j * rng.normal(size=2)
        reps.append(diffgeo.invariance_checks(f, p, q, a, cfg, tol=args.tol))
    return reps


def suite_starlike(args, rng):
    cfg = grid_from(args)
    reps = []
    for a in _alphas(args):
        for _ in range(args.trials):
            reps.append(lhmap.starlike_order_margin(repgen.random_map(rng, a, args.order), a, cfg))
    return reps


SUITE_FUNCS = {"distortion": suite_distortion, "coeffs": suite_coeffs, "bohr": suite_bohr,
               "schwarzian": suite_schwarzian, "bloch": suite_bloch, "starlike": suite_starlike}


def cmd_verify(args) -> int:
    rng = np.random.default_rng(args.seed)
    reps = SUITE_FUNCS[args.suite](args, rng)
    passed = all(r.passed for r in reps)
    doc = {"suite": args.suite, "seed": args.seed, "passed": passed,
           "failed": [r.theorem_id for r in reps if not r.passed],
           "reports": [r.to_dict() for r in reps]}
    emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if passed else 1


# -- tables ------------------------------------------------------------------

def _bohr_rows(alphas):
    for a in alphas:
        r = bohr.bohr_radii(float(a))
        yield float(a), r["r_H"].root, r["r_G"].root, r["r_f"].root


def cmd_tables(args) -> int:
    if args.which == "coefficients":
        m = map_from(args)
        n = np.arange(1, args.n_max + 1)
        a, b = m.a[: args.n_max], m.b[: args.n_max]
        alpha = m.alpha if m.alpha is not None else 0.0
        rows = ((int(k), x.real, x.imag, y.real, y.imag, bounds.coefficient_bound_a(k, alpha),
                 bounds.coefficient_bound_b(k, alpha)) for k, x, y in zip(n, a, b))
        write_csv(["n", "re_a", "im_a", "re_b", "im_b", "bound_a", "bound_b"], rows, args.out)
    elif args.which == "bohr_radii":
        write_csv(["alpha", "r_H", "r_G", "r_f"], _bohr_rows(parse_sweep(args.sweep or "0:1:0.05")),
                  args.out)
    else:
        _inner_csv(parse_sweep(args.sweep or "0:1:0.1"), args.out)
    return 0


def cmd_bohr(args) -> int:
    alphas = parse_sweep(args.alpha_sweep) if args.alpha_sweep else [args.alpha if args.alpha is not None else 0.0]
    write_csv(["alpha", "r_H", "r_G", "r_f"], _bohr_rows(alphas), args.out)
    return 0


def _inner_csv(lams, out):
    rows = ((float(x), slit.slit_tip(x).real, slit.inner_radius(x)) for x in lams)
    write_csv(["lambda", "tip", "rho0"], rows, out)


def cmd_inner_radius(args) -> int:
    lams = parse_sweep(args.lambda_sweep) if args.lambda_sweep else [args.lam]
    _inner_csv(lams, args.out)
    return 0


def cmd_generate(args) -> int:
    rng = np.random.default_rng(args.seed)
    delta = repgen.DiscreteMeasure.random(rng, args.atoms)
    kappa = repgen.DiscreteMeasure.random(rng, args.atoms)
    a, b = repgen.coefficients(delta, kappa, args.alpha, args.order)
    doc = {"alpha": args.alpha, "seed": args.seed, "delta": delta.to_dict(), "kappa": kappa.to_dict(),
           "a": [[float(x.real), float(x.imag)] for x in a],
           "b": [[float(x.real), float(x.imag)] for x in b]}
    emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    return 0


# -- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=None)
    common.add_argument("--lambda", dest="lam", type=float, default=0.5)
    common.add_argument("--order", type=int, default=64)
    common.add_argument("--radii", type=int, default=40, help="number of grid circles")
    common.add_argument("--angles", type=int, default=256)
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--format", choices=("csv", "json", "ppm"), default=None)
    maps = list(lhmap.CATALOG_NAMES) + ["generated"]

    p = argparse.ArgumentParser(prog="logharmonic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", parents=[common], help="domain-colored image or CSV samples")
    r.add_argument("--map", choices=maps, default="koebe_alpha")
    r.add_argument("--size", type=int, default=256)
    r.set_defaults(func=cmd_render)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--n-max", type=int, default=50)
    v.add_argument("--mu", choices=("constant", "z"), default="constant")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", parents=[common], help="CSV tables")
    t.add_argument("which", choices=TABLES)
    t.add_argument("--map", choices=maps, default="koebe_alpha")
    t.add_argument("--n-max", type=int, default=10)
    t.add_argument("--sweep", default=None)
    t.set_defaults(func=cmd_tables)

    b = sub.add_parser("bohr", parents=[common], help="Bohr radii as CSV")
    b.add_argument("--alpha-sweep", default=None)
    b.set_defaults(func=cmd_bohr)

    i = sub.add_parser("inner-radius", parents=[common], help="slit tips and inner radii as CSV")
    i.add_argument("--lambda-sweep", default=None)
    i.set_defaults(func=cmd_inner_radius)

    g = sub.add_parser("generate", parents=[common], help="random measures and their coefficients")
    g.add_argument("--atoms", type=int, default=5)
    g.set_defaults(func=cmd_generate)
    return p


def _check_format(args):
    allowed = {"render": ("ppm", "csv"), "verify": ("json",), "tables": ("csv",), "bohr": ("csv",),
               "inner-radius": ("csv",), "generate": ("json",)}[args.command]
    if args.format is None:
        args.format = allowed[0]
    elif args.format not in allowed:
        raise SystemExit(f"--format {args.format} is not available for {args.command}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _check_format(args)
    if args.alpha is None and args.command in ("render", "tables", "generate"):
        args.alpha = 0.0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
