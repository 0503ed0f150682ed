#!/usr/bin/env python3
"""Vanishing-polynomial stratifications of the bundled point-cloud examples:
a circle, a coordinate-axis corner, and the nodal cubic y^2 = x^3 + x^2."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from strata.geometry import build_nerve, monomials_up_to_degree, vanishing_presheaf
from strata.shapes import (circle_arc_cover, circle_cloud, corner_cloud,
                           corner_cover, nodal_cubic_cloud, nodal_cubic_cover)
from strata.stratify import coarsest_stratification


def describe(name, nerve, presheaf):
    strat = coarsest_stratification(nerve.space, presheaf)
    print(f"== {name}")
    for s in sorted(nerve.points_for, key=lambda s: (len(s), s)):
        names = "&".join(nerve.simplex_names(s))
        print(f"  stalk {names:28s} dim {presheaf.stalk(s).dimension}")
    for i in range(strat.top_dim, -1, -1):
        labs = strat.strata_labels()[i]
        if labs:
            pretty = [":".join(nerve.simplex_names(s)) for s in sorted(labs)]
            print(f"  S_{i}: {pretty}")


def main():
    cloud = circle_cloud(100)
    nerve = build_nerve(circle_arc_cover(100), max_dim=2)
    describe("circle, degree <= 2", nerve,
             vanishing_presheaf(nerve, cloud, monomials_up_to_degree(2, 2)))

    corner = corner_cloud()
    cnerve = build_nerve(corner_cover(corner), max_dim=3)
    describe("corner, degree <= 2 (exact)", cnerve,
             vanishing_presheaf(cnerve, corner, monomials_up_to_degree(2, 2),
                                exact=True))

    cubic, ts = nodal_cubic_cloud()
    nnerve = build_nerve(nodal_cubic_cover((cubic, ts)), max_dim=5)
    describe("nodal cubic, degree <= 3 (exact)", nnerve,
             vanishing_presheaf(nnerve, cubic, monomials_up_to_degree(2, 3),
                                exact=True))


if __name__ == "__main__":
    main()
