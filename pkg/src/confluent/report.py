"""Growth-report generator: one CSV table plus rendered figures in a directory.

Separate entry point (`confluent-report`) so the plain CLI stays free of any
plotting dependency at run time; the figures visualize the same rows the CSV
carries.
"""

from __future__ import annotations

import os
import sys

import numpy as np

from .cli import _Parser, _add_param_flags, _fmt
from .core import Params, SeriesBudget
from .errors import ConfluentError, NonConvergence, Inconclusive
from .valuedist import CircleSpec, characteristic_T

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_NUMERIC = 3

_HEADER = ["r", "m", "N", "T", "logM", "nu", "n"]


def build_report(
    p: Params,
    rmin: float,
    rmax: float,
    points: int,
    samples: int,
    outdir: str,
    zero_guard: float = 1e-8,
    budget: SeriesBudget | None = None,
    precision: int = 17,
):
    """Compute the growth table, write CSV and three figures; return the paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(outdir, exist_ok=True)
    radii = np.geomspace(rmin, rmax, points)
    rows = []
    for r in radii:
        row = characteristic_T(p, CircleSpec(float(r), samples, zero_guard), budget)
        rows.append([row.r, row.m_r, row.N_r, row.T_r, row.logM_r, row.nu_r, row.n_r])

    csv_path = os.path.join(outdir, "characteristic.csv")
    with open(csv_path, "w") as fh:
        fh.write(",".join(_HEADER) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v, precision) for v in row) + "\n")

    data = np.array(rows, dtype=float)
    r, m, n_int, t, log_m, nu, n_count = data.T

    growth_path = os.path.join(outdir, "growth.png")
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.loglog(r, np.maximum(t, 1e-12), "o-", label="T(r)")
    ax.loglog(r, np.maximum(log_m, 1e-12), "s--", label="log M(r)")
    ax.set_xlabel("r")
    ax.set_ylabel("growth")
    ax.legend()
    ax.set_title("characteristic and max modulus")
    fig.tight_layout()
    fig.savefig(growth_path, dpi=120)
    plt.close(fig)

    order_path = os.path.join(outdir, "order.png")
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    x = np.log(r)
    y = np.log(np.maximum(log_m, 1e-12))
    ax.plot(x, y, "o", label="log log M")
    half = len(x) // 2
    if len(x) - half >= 2:
        slope, intercept = np.polyfit(x[half:], y[half:], 1)
        ax.plot(x, slope * x + intercept, "-", label=f"slope {slope:.3f}")
    ax.set_xlabel("log r")
    ax.set_ylabel("log log M(r)")
    ax.legend()
    ax.set_title("order regression")
    fig.tight_layout()
    fig.savefig(order_path, dpi=120)
    plt.close(fig)

    zeros_path = os.path.join(outdir, "zeros.png")
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.step(r, n_count, where="post", label="n(r)")
    ax.plot(r, n_int, "d--", label="N(r)")
    ax.set_xlabel("r")
    ax.set_ylabel("zero counts")
    ax.legend()
    ax.set_title("zero counting")
    fig.tight_layout()
    fig.savefig(zeros_path, dpi=120)
    plt.close(fig)

    return {
        "csv": csv_path,
        "growth": growth_path,
        "order": order_path,
        "zeros": zeros_path,
    }


def main(argv=None) -> int:
    parser = _Parser(prog="confluent-report", description=__doc__)
    _add_param_flags(parser, with_z=False)
    parser.add_argument("--rmin", type=float, default=10.0)
    parser.add_argument("--rmax", type=float, default=200.0)
    parser.add_argument("--points", type=int, default=8)
    parser.add_argument("--samples", type=int, default=1024)
    parser.add_argument("--zero-guard", type=float, default=1e-8)
    parser.add_argument("--precision", type=int, default=17)
    parser.add_argument("--outdir", required=True, help="directory for CSV and figures")
    args = parser.parse_args(argv)
    if not 6 <= args.precision <= 17:
        parser.error("--precision must be between 6 and 17")
    if not args.rmin < args.rmax:
        parser.error("--rmin must be smaller than --rmax")
    p = Params(complex(args.alpha_re, args.alpha_im), complex(args.gamma_re, args.gamma_im))
    try:
        paths = build_report(
            p,
            args.rmin,
            args.rmax,
            args.points,
            args.samples,
            args.outdir,
            zero_guard=args.zero_guard,
            precision=args.precision,
        )
    except (NonConvergence, Inconclusive) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ConfluentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print("artifact,path")
    for name, path in paths.items():
        print(f"{name},{path}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
