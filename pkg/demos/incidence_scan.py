"""How many lines of a spectral curve pass through a point?

Scans a segment across the charge-2 ellipse and prints the distinct-line
count and classification along it. The count drops where the segment
crosses an edge of regression.

    python3 demos/incidence_scan.py
"""

import numpy as np

from minitwistor.correspondence import EuclideanPoint
from minitwistor.incidence import lines_through_point
from minitwistor.monopoles import charge2, charge2_conics


def main(k: float = 0.8) -> None:
    c, _ = charge2(k)
    a, b = charge2_conics(k).ellipse_axes
    print(f"ellipse semi-axes {a:.6f}, {b:.6f}; scanning x1 along the x1-axis")
    for x in np.linspace(0, 1.2 * a, 13):
        res = lines_through_point(c, EuclideanPoint(x, 0.0, 0.0))
        mults = sorted((r.multiplicity for r in res.roots), reverse=True)
        print(f"  x1 = {x:7.4f}: {res.distinct_count} distinct, multiplicities {mults},"
              f" at infinity {res.at_infinity}, {res.classification.value}")
    res = lines_through_point(c, EuclideanPoint(a, 0.0, 0.0))
    print(f"on the vertex x1 = {a:.6f}: {res.classification.value}")


if __name__ == "__main__":
    main()
