"""Charge-2 tour: locus, edges of regression and their conics.

Traces the Lagrangian locus of the charge-2 curve with modulus ``k``,
checks the edges against the closed-form ellipse and hyperbola, and writes
CSV/SVG/OBJ files to ``demos/out/charge2``.

    python3 demos/charge2_tour.py [k]
"""

import math
import sys
from pathlib import Path

import numpy as np

from minitwistor import export
from minitwistor.lagrangian import TraceConfig, trace_locus
from minitwistor.monopoles import charge2, charge2_conics, elliptic_K
from minitwistor.ruled import build_ruled_surface, edge_of_regression


def main(k: float = 0.8) -> None:
    out = Path(__file__).parent / "out" / "charge2"
    out.mkdir(parents=True, exist_ok=True)
    c, params = charge2(k)
    con = charge2_conics(k)
    print(f"k = {k}  K(k) = {elliptic_K(k):.10f}  alpha = {params.alpha:.10f}")

    loc = trace_locus(c, TraceConfig())
    print(f"{len(loc)} components, {len(loc.branch_points)} branch points")
    edges = []
    for i, comp in enumerate(loc):
        e = edge_of_regression(c, comp)
        edges.append(e)
        if comp.passes_branch:
            kind, res = "hyperbola", con.hyperbola_residual(e.points)
        else:
            kind, res = "ellipse", con.ellipse_residual(e.points)
        S = build_ruled_surface(c, comp)
        kmax = np.nanmax(np.abs(S.curvature()))
        print(f"  component {i}: {len(comp):5d} points, edge {kind} (residual {np.max(np.abs(res)):.1e}),"
              f" max|K| = {kmax:.1e}")
        (out / f"surface_{i}.obj").write_text(export.mesh_obj(S.grid, S.faces(), f"component {i}"))

    a, b = con.ellipse_axes
    print(f"ellipse semi-axes {a:.6f}, {b:.6f}; eccentricity {math.sqrt(1 - (b / a) ** 2):.6f}")
    a, b = con.hyperbola_axes
    print(f"hyperbola semi-axes {a:.6f}, {b:.6f}; eccentricity {math.sqrt(1 + (b / a) ** 2):.6f}")

    (out / "locus.csv").write_text(export.locus_csv(loc))
    (out / "locus.svg").write_text(export.locus_svg(loc, [bp.north_xi() for bp in loc.branch_points]))
    (out / "edges.svg").write_text(export.edges_svg(edges))
    print(f"files in {out}")


if __name__ == "__main__":
    main(float(sys.argv[1]) if len(sys.argv) > 1 else 0.8)
