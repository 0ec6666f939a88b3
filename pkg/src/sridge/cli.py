"""Command-line interface: ``sridge <command> [flags]``.

Exit codes: 0 success, 1 internal error, 2 malformed input file, 3 precondition
violation (including odd-parity input to a strict inverse). Diagnostics go to stderr.
``SRIDGE_THREADS`` caps the number of BLAS worker threads (0 or unset = library default).
"""

from __future__ import annotations

import argparse
import glob
import os
import re
import sys

from . import bench, hardi, io
from .errors import DomainError, FormatError, InadmissibleError, PreconditionError, SridgeError
from .radon import radon_forward, radon_inverse
from .ridgelet import build_ridgelets, ridgelet_analysis, ridgelet_synthesis
from .sht import sht_forward, sht_inverse
from .wavelet import MultiScaleCoeffs, WaveletParams, build_kernels, wavelet_analysis, wavelet_synthesis

EXIT_OK, EXIT_INTERNAL, EXIT_FORMAT, EXIT_PRECONDITION = 0, 1, 2, 3

TRANSFORMS = ("sht", "isht", "radon", "iradon", "wavelet", "iwavelet", "ridgelet", "iridgelet")
BENCH_CEILING = 256
BENCH_HARD_CEILING = 1024


def _add_common(p):
    p.add_argument("--lmax", type=int, help="band-limit L; must match the input file when given")
    p.add_argument("--spin", type=int, default=None, help="spin of the signal to recover (inverse transforms)")
    p.add_argument("--alpha", type=float, default=2.0, help="wavelet dilation parameter (default 2)")
    p.add_argument("--j0", type=int, default=0, help="minimum wavelet scale (default 0)")
    p.add_argument("--parity", choices=("strict", "project"), default="strict")
    p.add_argument("--format", choices=("bin", "csv"), default="bin", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sridge", description="Spherical Radon, wavelet and ridgelet transforms.")
    sub = parser.add_subparsers(dest="command", required=True)

    for kind in TRANSFORMS:
        p = sub.add_parser(kind, help=f"{kind} transform")
        p.add_argument("input", help="input file (multi-band inputs: path prefix)")
        p.add_argument("output", help="output file (multi-band outputs: path prefix)")
        _add_common(p)

    p = sub.add_parser("random", help="write random harmonic coefficients")
    p.add_argument("output")
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--spin", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--antipodal", action="store_true", help="zero coefficients with l + s odd")

    p = sub.add_parser("bench", help="ridgelet round-trip accuracy and timing sweep")
    p.add_argument("min_L", type=int)
    p.add_argument("max_L", type=int)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spin", type=int, default=0)
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--j0", type=int, default=0)
    p.add_argument("--large", action="store_true", help=f"allow max_L above {BENCH_CEILING} (up to {BENCH_HARD_CEILING})")

    p = sub.add_parser("hardi", help="diffusion MRI phantom, ODF and sparsity comparison")
    p.add_argument("subcommand", choices=("sim", "odf", "sparsity"))
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--lmax", type=int, default=128)
    p.add_argument("--fibers", type=int, default=3)
    p.add_argument("--b", type=float, default=hardi.DEFAULT_B)
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--j0", type=int, default=0)
    p.add_argument("--in", dest="input", help="phantom MapFile to use instead of simulating one")
    p.add_argument("--out-prefix", required=True)
    return parser


def _check_lmax(args, L):
    if args.lmax is not None and args.lmax != L:
        raise PreconditionError(f"--lmax {args.lmax} does not match the input band-limit {L}")


def _write_coeffs(path, c, fmt):
    (io.write_coeffs_csv if fmt == "csv" else io.write_coeffs)(path, c)


def _write_map(path, f, fmt):
    (io.write_map_csv if fmt == "csv" else io.write_map)(path, f)


def _write_bands(prefix, w: MultiScaleCoeffs, fmt):
    _write_map(f"{prefix}.scal", w.scaling, fmt)
    for j, band in zip(w.params.scales, w.bands):
        _write_map(f"{prefix}.j{j}", band, fmt)


def _read_bands(prefix, alpha, j0):
    scaling = io.read_map(f"{prefix}.scal")
    params = WaveletParams(scaling.L, alpha, j0)
    bands = []
    for j in params.scales:
        path = f"{prefix}.j{j}"
        if not os.path.exists(path):
            raise FormatError(f"missing band file {path} (expected scales {params.J0}..{params.J})")
        bands.append(io.read_map(path))
    extra = [
        p for p in glob.glob(glob.escape(prefix) + ".j*")
        if re.fullmatch(r"\d+", p[len(prefix) + 2 :]) and int(p[len(prefix) + 2 :]) not in params.scales
    ]
    if extra:
        raise PreconditionError(
            f"band files {sorted(extra)} lie outside scales {params.J0}..{params.J}; check --alpha/--j0"
        )
    return MultiScaleCoeffs(scaling, tuple(bands), params)


def cmd_transform(args) -> int:
    kind, fmt = args.command, args.format
    if kind == "sht":
        f = io.read_map(args.input)
        _check_lmax(args, f.L)
        _write_coeffs(args.output, sht_forward(f), fmt)
    elif kind == "isht":
        c = io.read_coeffs(args.input)
        _check_lmax(args, c.L)
        _write_map(args.output, sht_inverse(c), fmt)
    elif kind == "radon":
        c = io.read_coeffs(args.input)
        _check_lmax(args, c.L)
        _write_coeffs(args.output, radon_forward(c), fmt)
    elif kind == "iradon":
        g = io.read_coeffs(args.input)
        _check_lmax(args, g.L)
        _write_coeffs(args.output, radon_inverse(g, args.spin or 0, args.parity), fmt)
    elif kind == "wavelet":
        c = io.read_coeffs(args.input)
        _check_lmax(args, c.L)
        bank = build_kernels(WaveletParams(c.L, args.alpha, args.j0))
        _write_bands(args.output, wavelet_analysis(c, bank), fmt)
    elif kind == "iwavelet":
        w = _read_bands(args.input, args.alpha, args.j0)
        _check_lmax(args, w.L)
        bank = build_kernels(w.params)
        _write_coeffs(args.output, wavelet_synthesis(w, bank, args.spin or 0), fmt)
    elif kind == "ridgelet":
        c = io.read_coeffs(args.input)
        _check_lmax(args, c.L)
        rb = build_ridgelets(WaveletParams(c.L, args.alpha, args.j0), c.s)
        _write_bands(args.output, ridgelet_analysis(c, rb), fmt)
    elif kind == "iridgelet":
        g = _read_bands(args.input, args.alpha, args.j0)
        _check_lmax(args, g.L)
        s = args.spin or 0
        rb = build_ridgelets(g.params, s)
        _write_coeffs(args.output, ridgelet_synthesis(g, rb, s, args.parity), fmt)
    return EXIT_OK


def cmd_random(args) -> int:
    c = bench.random_coeffs(args.lmax, args.spin, args.seed, antipodal=args.antipodal)
    io.write_coeffs(args.output, c)
    return EXIT_OK


def _power_of_two(n):
    return n > 0 and n & (n - 1) == 0


def cmd_bench(args) -> int:
    lo, hi = args.min_L, args.max_L
    if not (_power_of_two(lo) and _power_of_two(hi)) or lo < 16 or hi < lo:
        raise PreconditionError(f"band-limits must be powers of two with 16 <= min_L <= max_L, got {lo}, {hi}")
    if hi > BENCH_HARD_CEILING or (hi > BENCH_CEILING and not args.large):
        raise PreconditionError(
            f"max_L {hi} exceeds {BENCH_CEILING}; pass --large to go up to {BENCH_HARD_CEILING}"
        )
    if args.trials < 1:
        raise PreconditionError("--trials must be at least 1")
    Ls = []
    L = lo
    while L <= hi:
        Ls.append(L)
        L *= 2

    def report(rec):
        print(f"L={rec.L} max_abs_error={rec.max_abs_error:.3e} wall_seconds={rec.wall_seconds:.4f}", file=sys.stderr)

    records = bench.run_benchmark(Ls, args.trials, args.seed, args.alpha, args.j0, args.spin, progress=report)
    if args.out:
        bench.write_csv(args.out, records)
    else:
        bench.write_rows(sys.stdout, records)
    if len(records) >= 2:
        Ls = [r.L for r in records]
        err_slope = bench.loglog_slope(Ls, [r.max_abs_error for r in records])
        time_slope = bench.loglog_slope(Ls, [r.wall_seconds for r in records])
        print(f"error_slope={err_slope:.4f}")
        print(f"time_slope={time_slope:.4f}")
    return EXIT_OK


def _phantom(args):
    if args.input:
        f = io.read_map(args.input)
        if f.s != 0:
            raise PreconditionError("HARDI phantoms are spin 0")
        return f
    cfg = hardi.crossing_fibers(args.seed, args.fibers, args.b)
    return hardi.simulate_hardi(cfg, args.lmax)


def cmd_hardi(args) -> int:
    prefix = args.out_prefix
    phantom = _phantom(args)
    if args.subcommand == "sim":
        io.write_map(f"{prefix}_hardi.smap", phantom)
    elif args.subcommand == "odf":
        odf = hardi.compute_odf(phantom)
        io.write_map(f"{prefix}_odf_raw.smap", odf.raw)
        io.write_map(f"{prefix}_odf.smap", odf.display)
    else:
        report = hardi.sparsity_compare(phantom, WaveletParams(phantom.L, args.alpha, args.j0))
        with open(f"{prefix}_sparsity.csv", "w") as fh:
            fh.write("representation,j,gini,top1pct_energy\n")
            for rep, j, g, top in report.rows():
                fh.write(f"{rep},{j},{g!r},{top!r}\n")
        with open(f"{prefix}_hist.csv", "w") as fh:
            fh.write("representation,j,bin_lo,bin_hi,count\n")
            for b in report.bands:
                j = -1 if b.j is None else b.j
                for lo, hi, n in zip(b.edges[:-1], b.edges[1:], b.counts):
                    fh.write(f"{b.representation},{j},{float(lo)!r},{float(hi)!r},{int(n)}\n")
    return EXIT_OK


def _thread_limit():
    raw = os.environ.get("SRIDGE_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise PreconditionError(f"SRIDGE_THREADS must be an integer, got {raw!r}")
    if n < 0:
        raise PreconditionError("SRIDGE_THREADS must be non-negative")
    return n


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"random": cmd_random, "bench": cmd_bench, "hardi": cmd_hardi}
    handler = handlers.get(args.command, cmd_transform)
    try:
        n_threads = _thread_limit()
        if n_threads > 0:
            from threadpoolctl import threadpool_limits

            with threadpool_limits(limits=n_threads):
                return handler(args)
        return handler(args)
    except FormatError as exc:
        print(f"sridge: malformed input: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except InadmissibleError as exc:
        print(f"sridge: inadmissible input: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (PreconditionError, DomainError) as exc:
        print(f"sridge: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SridgeError as exc:
        print(f"sridge: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - last-resort exit code
        print(f"sridge: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
