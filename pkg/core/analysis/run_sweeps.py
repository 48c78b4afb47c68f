import argparse
import math
import os
from datetime import datetime
from typing import List, Sequence

import pandas as pd
from dotenv import load_dotenv
from loguru import logger
from tqdm import tqdm

from core.bounds.checks import theorem_consistency
from core.bounds.formulas import bound_gen
from core.carving.carve import carve, verify_decomposition
from core.carving.recursive import level_bound, recursive_color
from core.coloring.solver import local_chromatic_at_most
from core.config import get_settings
from core.graphs.generators import gnp_corpus
from core.oracle.search import f_oracle

SWEEPS = ("theorem", "carve", "oracle")


def theorem_sweep(
    n_max: int, radii: Sequence[int], palettes: Sequence[int]
) -> pd.DataFrame:
    """One row per (n, r, c): the main bound, the v range checked and the slack of c * t(v) <= n."""
    rows = []
    grid = [(n, r, c) for r in radii for c in palettes for n in range(1, n_max + 1)]
    for n, r, c in tqdm(grid, desc="theorem"):
        report = theorem_consistency(n, r, c)
        rows.append(
            {
                "n": n,
                "r": r,
                "c": c,
                "bound": f"{report.bound.numerator}/{report.bound.denominator}",
                "bound_float": float(report.bound),
                "v_max": report.v_max,
                "max_slack": report.max_slack,
                "min_slack": report.min_slack,
                "violations": len(report.violations),
                "vacuous": report.vacuous,
            }
        )
    return pd.DataFrame(rows)


def carve_sweep(count: int, radii: Sequence[int], c: int) -> pd.DataFrame:
    """Carve every corpus graph at every radius; recursive coloring where every ball is c-colorable."""
    rows = []
    corpus = gnp_corpus(count=count)
    for entry in tqdm(corpus, desc="carve"):
        G = entry.graph
        for r in radii:
            D = carve(G, r)
            report = verify_decomposition(G, r, D)
            levels = None
            if local_chromatic_at_most(G, r, c):
                levels = recursive_color(G, r, c).levels
            rows.append(
                {
                    "index": entry.index,
                    "n": G.n,
                    "m": G.num_edges,
                    "p": str(entry.p),
                    "r": r,
                    "parts": len(D.parts),
                    "separator": len(D.separator),
                    "separator_bound": report.check("separator_bound").passed,
                    "all_checks": report.passed,
                    "levels": levels,
                    "level_bound": level_bound(G.n, r),
                }
            )
    return pd.DataFrame(rows)


def oracle_sweep(vmax: int, params: Sequence[tuple]) -> pd.DataFrame:
    """f_oracle on small (n, r, c), next to the main lower bound."""
    rows = []
    for n, r, c in tqdm(params, desc="oracle"):
        result = f_oracle(n, r, c, vmax)
        floor = math.ceil(bound_gen(n, r, c).value) - 1
        rows.append(
            {
                "n": n,
                "r": r,
                "c": c,
                "mode": result.mode,
                "value": result.value,
                "bound_gen_floor": floor,
                "consistent": result.mode == "LOWER_BOUND" or result.value >= floor,
                "graphs_examined": result.graphs_examined,
            }
        )
    return pd.DataFrame(rows)


def run_sweeps(
    sweeps: Sequence[str],
    n_max: int = 60,
    radii: Sequence[int] = (1, 2, 3),
    palettes: Sequence[int] = (2, 3, 4),
    corpus_size: int = 200,
    vmax: int = 6,
) -> List[str]:
    """Run the selected sweeps and write one CSV per sweep into a dated directory."""
    today = datetime.now().strftime("%Y%m%d")
    run_dir = os.path.join(get_settings().data_dir, f"sweeps_{today}")
    os.makedirs(run_dir, exist_ok=True)
    sink = logger.add(os.path.join(run_dir, "sweeps.log"), rotation="10 MB", level="INFO")

    written = []
    try:
        for sweep in sweeps:
            logger.info(f"Starting {sweep} sweep")
            if sweep == "theorem":
                df = theorem_sweep(n_max, radii, palettes)
            elif sweep == "carve":
                df = carve_sweep(corpus_size, radii, min(palettes))
            elif sweep == "oracle":
                params = [(n, r, c) for n in (1, 2, 3) for r in (1, 2) for c in (2, 3)]
                df = oracle_sweep(vmax, params)
            else:
                raise ValueError(f"Unsupported sweep: {sweep}")
            output_file = os.path.join(run_dir, f"{sweep}.csv")
            df.to_csv(output_file, index=False)
            logger.info(f"{sweep} sweep: {len(df)} rows saved to {output_file}")
            written.append(output_file)
    finally:
        logger.remove(sink)
    return written


if __name__ == "__main__":
    load_dotenv(override=True)

    parser = argparse.ArgumentParser(description="Run experiment sweeps to CSV")
    parser.add_argument("sweeps", nargs="+", choices=SWEEPS)
    parser.add_argument("--n_max", type=int, default=60)
    parser.add_argument("--radii", type=int, nargs="+", default=[1, 2, 3])
    parser.add_argument("--palettes", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--corpus_size", type=int, default=200)
    parser.add_argument("--vmax", type=int, default=6)
    args = parser.parse_args()

    run_sweeps(
        args.sweeps,
        n_max=args.n_max,
        radii=args.radii,
        palettes=args.palettes,
        corpus_size=args.corpus_size,
        vmax=args.vmax,
    )
