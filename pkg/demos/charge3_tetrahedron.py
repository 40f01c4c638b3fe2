"""Charge-3 tetrahedral monopole: six ruled planes and four curved flat surfaces.

The six locus components over great circles rule planes through the origin;
their triple intersections are the four 3-fold axes of a regular tetrahedron.
The other four components rule flat, non-planar surfaces.

    python3 demos/charge3_tetrahedron.py
"""

import itertools
from pathlib import Path

import numpy as np

from minitwistor import export
from minitwistor.lagrangian import TraceConfig, trace_locus
from minitwistor.monopoles import charge3
from minitwistor.ruled import build_ruled_surface, edge_of_regression, plane_fit
from minitwistor.verification import tetrahedron_from_planes


def main() -> None:
    out = Path(__file__).parent / "out" / "charge3"
    out.mkdir(parents=True, exist_ok=True)
    c = charge3()
    loc = trace_locus(c, TraceConfig())
    print(f"{len(loc)} components, dangling ends: {loc.dangling}")

    normals, curved = [], []
    for i, comp in enumerate(loc):
        S = build_ruled_surface(c, comp)
        _, normal, resid = plane_fit(S.grid)
        kmax = float(np.nanmax(np.abs(S.curvature())))
        planar = resid < 1e-6
        if planar:
            normals.append(normal)
        else:
            curved.append(i)
        print(f"  component {i}: {'plane ' if planar else 'curved'} fit residual {resid:.2e}, max|K| {kmax:.1e}")
        (out / f"surface_{i}.obj").write_text(export.mesh_obj(S.grid, S.faces(), f"component {i}"))

    verts, lengths = tetrahedron_from_planes(normals)
    if lengths:
        spread = (max(lengths) - min(lengths)) / np.mean(lengths)
        print(f"tetrahedron from {len(normals)} planes: edge-length spread {spread:.1e}")
        for v in verts:
            print("  vertex", np.array2string(v, precision=6))
        angles = [np.degrees(np.arccos(np.clip(verts[i] @ verts[j], -1, 1))) for i, j in itertools.combinations(range(4), 2)]
        print(f"  angles between axes: {min(angles):.4f} .. {max(angles):.4f} deg")

    edges = [edge_of_regression(c, comp) for comp in loc]
    (out / "edges.obj").write_text(export.polylines_obj([e.points for e in edges], "edges of regression"))
    (out / "locus.svg").write_text(export.locus_svg(loc, [b.north_xi() for b in loc.branch_points]))
    print(f"curved components: {curved}; files in {out}")


if __name__ == "__main__":
    main()
