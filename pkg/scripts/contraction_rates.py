"""Tabulate how fast iterate distances shrink or grow as the scale varies.

The distance between two iterated points is exactly |lam|**n times the
starting distance, so the table shows the sharp switch in the stable set
at |lam| = 1.

Usage: python scripts/contraction_rates.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from symdyn.core import Point2
from symdyn.dynamics import stable_set
from symdyn.geometry import AxisLine, ReflectScale, apply_T


def measured_ratio(lam: float, phi: float, n: int) -> float:
    m = ReflectScale(lam, AxisLine(phi))
    p, q = Point2(1.0, 0.2), Point2(-0.3, 0.7)
    d0 = p.distance_to(q)
    for _ in range(n):
        p, q = apply_T(m, p), apply_T(m, q)
    return p.distance_to(q) / d0


def main() -> int:
    steps = (1, 10, 30, 60)
    header = "lam      " + "".join(f"n={n:<12}" for n in steps) + "stable set"
    print(header)
    print("-" * len(header))
    for lam in (0.3, 0.7, 0.9, 0.99, 1.0, -1.0, 1.05, 1.5, -2.0):
        cells = []
        for n in steps:
            measured = measured_ratio(lam, 0.6, n)
            predicted = abs(lam) ** n
            assert abs(measured - predicted) <= 1e-9 * (1.0 + predicted)
            cells.append(f"{measured:<12.3e}")
        verdict = stable_set(Point2(1.0, 0.2), lam).value
        print(f"{lam:<9.2f}" + "".join(cells) + verdict)
    return 0


if __name__ == "__main__":
    sys.exit(main())
