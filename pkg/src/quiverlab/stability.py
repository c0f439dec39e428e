"""King stability: walls, chambers, the chamber <-> silting correspondence,
and SVG stability pictures for ranks 2 and 3.

All membership tests run on exact rationals; the sampling grids use integer
directions so no epsilon logic is needed anywhere.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from quiverlab import _linalg
from quiverlab.errors import NoChamber, UnsupportedRank
from quiverlab.repmod import (
    ModuleDesc,
    interval_modules,
    path_order,
    submodules,
)
from quiverlab.silting import SiltingPair, silting_pairs


@dataclass(frozen=True)
class Wall:
    """D(M): theta . dim M = 0 plus theta . L <= 0 per proper submodule L."""

    module: ModuleDesc
    normal: tuple  # dim M
    constraints: tuple  # proper nonzero submodule dim vectors

    def contains(self, theta):
        theta = [Fraction(t) for t in theta]
        if sum(t * d for t, d in zip(theta, self.normal)) != 0:
            return False
        return all(
            sum(t * l for t, l in zip(theta, con)) <= 0 for con in self.constraints
        )


@dataclass(frozen=True)
class Chamber:
    silting: SiltingPair
    generators: tuple  # the n g-vectors spanning the closed cone


@dataclass(frozen=True)
class WallHit:
    semistables: tuple  # ModuleDescs semistable at theta


def is_semistable(m, theta):
    """theta-orthogonal with theta . L <= 0 for every submodule."""
    theta = [Fraction(t) for t in theta]
    dims = [dim for dim, _ in submodules(m)]
    mdim = m.dim_vector()
    if sum(t * d for t, d in zip(theta, mdim)) != 0:
        return False
    return all(sum(t * d for t, d in zip(theta, dim)) <= 0 for dim in dims)


def is_stable(m, theta):
    """Strict inequalities over proper nonzero submodules."""
    theta = [Fraction(t) for t in theta]
    mdim = m.dim_vector()
    if sum(t * d for t, d in zip(theta, mdim)) != 0:
        return False
    for dim, _ in submodules(m):
        if not any(dim) or dim == mdim:
            continue
        if sum(t * d for t, d in zip(theta, dim)) >= 0:
            return False
    return True


def walls(q):
    """One wall per indecomposable (every type-A indecomposable has a
    codimension-1 stability space)."""
    path_order(q)  # NotTypeA guard
    out = []
    for m in interval_modules(q):
        mdim = m.dim_vector()
        constraints = tuple(
            dim for dim, _ in submodules(m) if any(dim) and dim != mdim
        )
        out.append(Wall(m, mdim, constraints))
    return out


def chambers(q):
    """One chamber per silting pair; cone generators are the g-vectors."""
    return [
        Chamber(pair, tuple(m.g_vec() for m in pair.members(q)))
        for pair in silting_pairs(q)
    ]


def _cone_coefficients(generators, theta):
    """Solve theta = sum c_i g_i; generators are the columns."""
    n = len(theta)
    matrix = [[generators[j][i] for j in range(n)] for i in range(n)]
    return _linalg.solve(matrix, [Fraction(t) for t in theta])


def cone_contains(generators, theta, strict=True):
    try:
        coeffs = _cone_coefficients(generators, theta)
    except ZeroDivisionError:
        return False
    if strict:
        return all(c > 0 for c in coeffs)
    return all(c >= 0 for c in coeffs)


def chamber_of(q, theta):
    """The chamber whose open cone contains theta, or the WallHit listing all
    semistable indecomposables when theta lies on a wall."""
    if all(t == 0 for t in theta):
        raise ValueError("theta must be nonzero")
    for chamber in chambers(q):
        if cone_contains(chamber.generators, theta, strict=True):
            return chamber
    semistables = tuple(
        m for m in interval_modules(q) if is_semistable(m, theta)
    )
    if not semistables:
        raise NoChamber(f"direction {theta} misses every cone and wall")
    return WallHit(semistables)


def chamber_adjacency(q):
    """Edges between chambers sharing a facet = silting pairs differing in
    exactly one member."""
    chs = chambers(q)
    keys = [frozenset(ch.silting.members(q)) for ch in chs]
    edges = []
    for i in range(len(chs)):
        for j in range(i + 1, len(chs)):
            if len(keys[i] & keys[j]) == q.n - 1:
                edges.append((i, j))
    return chs, edges


# -- integer-direction helpers for the sampling tests -------------------------


def adjugate_and_det(matrix):
    """(adj, det) with adj = det * inverse, both integer for integer input."""
    d = _linalg.det(matrix)
    inv = _linalg.inverse(matrix)
    adj = [[v * d for v in row] for row in inv]
    out = []
    for row in adj:
        out_row = []
        for v in row:
            if v.denominator != 1:
                raise ValueError("non-integer adjugate entry")
            out_row.append(int(v))
        out.append(out_row)
    return out, d


# -- SVG rendering -------------------------------------------------------------

_VIEW = 300  # viewBox is [-300, 300]^2
_STYLE = 'stroke="black" stroke-width="1" fill="none"'


def _fmt(x):
    return f"{x:.3f}"


def _svg_header():
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{-_VIEW} {-_VIEW} {2 * _VIEW} {2 * _VIEW}">'
    )


def _svg_marker(x, y, label):
    return (
        f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="red"/>'
        f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" font-size="12" '
        f'fill="red">{label}</text>'
    )


def _ray_segments_2d(wall):
    """Maximal theta-ray directions of a rank-2 wall as unit-ish endpoints."""
    a, b = wall.normal
    # Directions orthogonal to (a, b): +/- (-b, a).
    rays = []
    for sign in (1, -1):
        d = (-b * sign, a * sign)
        if all(
            sum(t * l for t, l in zip(d, con)) <= 0 for con in wall.constraints
        ):
            rays.append(d)
    return rays


def render_svg(q, rank):
    """Deterministic stability picture: rank 2 draws rays in the plane, rank 3
    stereographically projects the wall circles on the unit sphere from the
    antipode of the all-positive octant (the initial chamber becomes the outer
    region, matching the usual picture orientation)."""
    if rank not in (2, 3) or q.n != rank:
        raise UnsupportedRank(f"rank {rank} picture for n={q.n}")
    path_order(q)  # type A only
    parts = [_svg_header()]
    if rank == 2:
        scale = 0.8 * _VIEW
        for wall in walls(q):
            for d in _ray_segments_2d(wall):
                norm = math.hypot(*d)
                x, y = d[0] / norm * scale, -d[1] / norm * scale
                parts.append(
                    f'<line x1="0" y1="0" x2="{_fmt(x)}" y2="{_fmt(y)}" {_STYLE}/>'
                )
            lo, hi = min(wall.module.support), max(wall.module.support)
            label_dir = _ray_segments_2d(wall)
            if label_dir:
                nx, ny = label_dir[0]
                norm = math.hypot(nx, ny)
                parts.append(
                    f'<text x="{_fmt(nx / norm * scale * 0.9)}" '
                    f'y="{_fmt(-ny / norm * scale * 0.9)}" font-size="12">'
                    f"D({wall.module.literal()})</text>"
                )
        seen = set()
        for pair in silting_pairs(q):
            for m in pair.members(q):
                g = m.g_vec()
                if g in seen:
                    continue
                seen.add(g)
                norm = math.hypot(*g)
                parts.append(
                    _svg_marker(
                        g[0] / norm * scale * 0.5,
                        -g[1] / norm * scale * 0.5,
                        f"g({m.literal()})",
                    )
                )
    else:
        pole = tuple(-1 / math.sqrt(3) for _ in range(3))
        scale = 0.35 * _VIEW

        def project(u):
            dot = sum(a * b for a, b in zip(u, pole))
            if dot > 0.999:
                return None
            rejected = [a - dot * b for a, b in zip(u, pole)]
            factor = scale / (1 - dot)
            # Fixed orthonormal frame in the plane orthogonal to the pole.
            e1 = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
            e2 = (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6))
            x = sum(a * b for a, b in zip(rejected, e1)) * factor
            y = sum(a * b for a, b in zip(rejected, e2)) * factor
            return x, -y

        for wall in walls(q):
            d = wall.normal
            norm = math.hypot(*d)
            unit = tuple(v / norm for v in d)
            # Orthonormal basis of the circle theta . d = 0 on the sphere.
            helper = (1.0, 0.0, 0.0) if abs(unit[0]) < 0.9 else (0.0, 1.0, 0.0)
            u1 = _cross(unit, helper)
            u1 = _normalize(u1)
            u2 = _cross(unit, u1)
            points = []
            segments = 128
            for s in range(segments + 1):
                ang = 2 * math.pi * s / segments
                p = tuple(
                    math.cos(ang) * a + math.sin(ang) * b for a, b in zip(u1, u2)
                )
                ok = all(
                    sum(t * l for t, l in zip(p, con)) <= 1e-9
                    for con in wall.constraints
                )
                if not ok:
                    points.append(None)
                    continue
                points.append(project(p))
            run = []
            for pt in points + [None]:
                if pt is None:
                    if len(run) > 1:
                        path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in run)
                        parts.append(f'<polyline points="{path}" {_STYLE}/>')
                    run = []
                else:
                    run.append(pt)
            anchor = next((p for p in points if p is not None), None)
            if anchor:
                parts.append(
                    f'<text x="{_fmt(anchor[0] + 4)}" y="{_fmt(anchor[1] - 4)}" '
                    f'font-size="12">D({wall.module.literal()})</text>'
                )
        seen = set()
        for pair in silting_pairs(q):
            for m in pair.members(q):
                g = m.g_vec()
                if g in seen:
                    continue
                seen.add(g)
                norm = math.sqrt(sum(v * v for v in g))
                unit = tuple(v / norm for v in g)
                pt = project(unit)
                if pt:
                    parts.append(_svg_marker(pt[0], pt[1], f"g({m.literal()})"))
    parts.append("</svg>")
    return "\n".join(parts)


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _normalize(v):
    norm = math.sqrt(sum(x * x for x in v))
    return tuple(x / norm for x in v)
