"""Reference complexes and point clouds used by the tests and scripts."""

from __future__ import annotations

import math
from fractions import Fraction

from .geometry import Cover, PointCloud
from .spaces import FiniteSpace, build_from_maximal_simplices

# Four triangles: a fan of three around vertex 0 with a flap attached along
# the edge [0,1].  Its face poset has 17 elements (5 vertices, 8 edges,
# 4 triangles).
AWNING_MAX_SIMPLICES = [[0, 1, 3], [0, 1, 2], [0, 2, 3], [0, 1, 4]]

# One filled triangle [0,1,2] plus a bare two-edge strap joining 0 to 2
# through vertex 3.
TRIANGLE_WITH_STRAP_MAX_SIMPLICES = [[0, 1, 2], [0, 3], [2, 3]]


def awning_space() -> FiniteSpace:
    return build_from_maximal_simplices(AWNING_MAX_SIMPLICES)


def triangle_with_strap_space() -> FiniteSpace:
    return build_from_maximal_simplices(TRIANGLE_WITH_STRAP_MAX_SIMPLICES)


def pinched_torus_complex(columns: int = 2, meridian: int = 3) -> dict:
    """Triangulated pinched torus with a spanning disc along the equator.

    A cylinder grid (``columns`` segments along the axis, ``meridian``
    vertices around) has both boundary circles coned to a single pinch
    vertex ``p``; the longitude through ``p`` at meridian position 0 is the
    equator, and a disc is attached by coning the equator cycle to a fresh
    vertex ``c``.  Returns the space plus the vertex bookkeeping the tests
    need (equator simplices, pinch point, disc center).
    """
    if columns < 1 or meridian < 3:
        raise ValueError("need at least one column and a 3-cycle meridian")
    cols = columns + 1

    def v(s: int, j: int) -> int:
        return s * meridian + (j % meridian)

    pinch = cols * meridian
    center = pinch + 1
    tris: list[list[int]] = []
    for s in range(columns):
        for j in range(meridian):
            a, b = v(s, j), v(s + 1, j)
            c2, d = v(s + 1, j + 1), v(s, j + 1)
            tris.append([a, b, c2])
            tris.append([a, c2, d])
    for j in range(meridian):
        tris.append([pinch, v(0, j), v(0, j + 1)])
        tris.append([pinch, v(columns, j), v(columns, j + 1)])
    equator_path = [v(s, 0) for s in range(cols)]
    cycle = [pinch] + equator_path + [pinch]
    for a, b in zip(cycle, cycle[1:]):
        tris.append([center, a, b])

    space = build_from_maximal_simplices(tris)
    equator_vertices = [pinch] + equator_path
    equator_edges = [tuple(sorted((a, b))) for a, b in zip(cycle, cycle[1:])]
    equator = [(u,) for u in sorted(equator_vertices)] + sorted(set(equator_edges))
    return {
        "space": space,
        "pinch": (pinch,),
        "disc_center": (center,),
        "equator": equator,
    }


def circle_cloud(n: int = 100, radius: float = 1.0) -> PointCloud:
    pts = [(radius * math.cos(2 * math.pi * k / n),
            radius * math.sin(2 * math.pi * k / n)) for k in range(n)]
    return PointCloud.of(pts)


def circle_arc_cover(n: int = 100, arcs: int = 6, width: float = 1.4) -> Cover:
    """Evenly spaced overlapping arcs; width > 1 makes neighbors overlap."""
    sets = {}
    for a in range(arcs):
        lo = (a - width / 2) / arcs
        hi = (a + width / 2) / arcs
        members = []
        for k in range(n):
            t = k / n
            for shift in (-1, 0, 1):
                if lo <= t + shift <= hi:
                    members.append(k)
                    break
        sets[f"arc{a}"] = members
    return Cover.of(sets, n_points=n)


def corner_cloud() -> PointCloud:
    """Grid points on the non-negative x- and y-axes, meeting at the origin."""
    xs = [(Fraction(n, 10), Fraction(0)) for n in range(21)]
    ys = [(Fraction(0), Fraction(n, 10)) for n in range(1, 21)]
    return PointCloud.of(xs + ys)


def corner_cover(cloud: PointCloud) -> Cover:
    """Origin blob, two x-axis windows, one y-axis window."""
    def select(pred) -> list[int]:
        return [i for i, p in enumerate(cloud.coords) if pred(p)]

    sets = {
        "origin": select(lambda p: (p[1] == 0 and p[0] <= Fraction(65, 100))
                         or (p[0] == 0 and p[1] <= Fraction(85, 100))),
        "xmid": select(lambda p: p[1] == 0
                       and Fraction(35, 100) <= p[0] <= Fraction(145, 100)),
        "xouter": select(lambda p: p[1] == 0 and p[0] >= Fraction(115, 100)),
        "yaxis": select(lambda p: p[0] == 0 and p[1] >= Fraction(45, 100)),
    }
    return Cover.of(sets, n_points=len(cloud))


def nodal_cubic_cloud(samples_per_set: int = 20) -> tuple[PointCloud, list[Fraction]]:
    """Rational points on y^2 = x^3 + x^2 via t -> (t^2 - 1, t^3 - t)."""
    ts: list[Fraction] = []
    for k in range(-3 * samples_per_set, 3 * samples_per_set + 1):
        ts.append(Fraction(k, samples_per_set * 2))
    pts = [(t * t - 1, t ** 3 - t) for t in ts]
    return PointCloud.of(pts), ts


def nodal_cubic_cover(cloud_and_ts) -> Cover:
    """Six sets covering the curve: a node blob, two loop arcs, the far end
    of the loop, and the two unbounded branches.

    Windows overlap in at least ten parameter values each, enough to pin
    every stalk to the span of the defining cubic.
    """
    cloud, ts = cloud_and_ts

    def select(lo: Fraction, hi: Fraction, sign: int | None = None) -> list[int]:
        out = []
        for i, t in enumerate(ts):
            if lo <= abs(t) <= hi and (sign is None or (t >= 0) == (sign > 0)):
                out.append(i)
        return out

    sets = {
        "node": select(Fraction(7, 10), Fraction(13, 10)),
        "loop_upper": select(Fraction(2, 10), Fraction(95, 100), sign=-1),
        "loop_lower": select(Fraction(2, 10), Fraction(95, 100), sign=1),
        "loop_end": select(Fraction(0), Fraction(45, 100)),
        "branch_upper": select(Fraction(105, 100), Fraction(3, 2), sign=1),
        "branch_lower": select(Fraction(105, 100), Fraction(3, 2), sign=-1),
    }
    return Cover.of(sets, n_points=len(cloud))


_GOLDEN = (math.sqrt(5) - 1) / 2
_SQRT2_FRAC = math.sqrt(2) - 1


def torus_cloud(n: int = 2000, big: float = 2.0, small: float = 1.0) -> PointCloud:
    """Low-discrepancy sample of a torus of revolution around the x-axis.

    Height is the z-coordinate.  The two angles advance by rationally
    independent irrational steps, so the sample equidistributes over the
    whole surface instead of tracing a closed curve, and every band of the
    height function gets two-dimensionally scattered points.
    """
    pts = []
    for k in range(n):
        u = 2 * math.pi * ((k * _GOLDEN) % 1.0)
        w = 2 * math.pi * ((k * _SQRT2_FRAC) % 1.0)
        ring = big + small * math.cos(w)
        pts.append((small * math.sin(w), ring * math.sin(u), ring * math.cos(u)))
    return PointCloud.of(pts)


TORUS_HEIGHT_INTERVALS = [(2.2, 3.3), (0.6, 2.6), (-0.95, 0.95),
                          (-2.6, -0.6), (-3.3, -2.2)]
TORUS_MAPPER_RADIUS = 0.45


def ellipse_with_branches_cloud(n_ellipse: int = 240, n_branch: int = 14
                                ) -> PointCloud:
    """A tilted ellipse plus two straight whiskers leaving its top and bottom.

    The ellipse lives in the plane x = z so that no coordinate plane contains
    it; the whiskers leave the extreme-height points along a different line,
    so any open set meeting a whisker admits strictly fewer vanishing
    polynomials than a pure ellipse arc.
    """
    pts = []
    for k in range(n_ellipse):
        u = 2 * math.pi * k / n_ellipse
        x = math.cos(u)
        pts.append((x, 2.0 * math.sin(u), x))
    for k in range(1, n_branch + 1):
        t = 0.13 * k
        pts.append((t, 2.0 + 0.8 * t, 0.0))
        pts.append((t, -2.0 - 0.8 * t, 0.0))
    return PointCloud.of(pts)


ELLIPSE_HEIGHT_INTERVALS = [(2.25, 3.6), (1.4, 2.8), (-1.98, 1.98),
                            (-2.8, -1.4), (-3.6, -2.25)]
ELLIPSE_MAPPER_RADIUS = 0.3
MAPPER_KERNEL_TOL = 1e-11
