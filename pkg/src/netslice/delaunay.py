"""Delaunay triangulation by incremental Bowyer-Watson insertion.

Returns the Delaunay edge set, which is the dual adjacency of the Voronoi
tessellation. Points are inserted in index order inside a super-triangle;
triangles whose circumcircle strictly contains the new point are removed
and the cavity is re-triangulated around it.

Tie-break: a point exactly on a circumcircle (determinant within a
scale-normalized EPS of zero) counts as OUTSIDE, so cocircular
degeneracies keep the triangles built from earlier-indexed points. With
four cocircular points this retains the diagonal created before the last
point's insertion; the outcome is deterministic given point order.
"""

from __future__ import annotations

from typing import NamedTuple


class Point2D(NamedTuple):
    x: float
    y: float


EPS_REL = 1e-12


def _orient(a: Point2D, b: Point2D, c: Point2D) -> float:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def _in_circumcircle(a: Point2D, b: Point2D, c: Point2D, d: Point2D, eps: float) -> bool:
    """True iff d lies strictly inside the circumcircle of (a, b, c)."""
    adx, ady = a.x - d.x, a.y - d.y
    bdx, bdy = b.x - d.x, b.y - d.y
    cdx, cdy = c.x - d.x, c.y - d.y
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        - (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    if _orient(a, b, c) < 0:
        det = -det
    return det > eps


def _in_circle_ext(verts, tri, d: Point2D, eps: float, lin_eps: float) -> bool:
    """Circumcircle containment with super vertices taken to infinity.

    One super vertex: the circle's limit is the open half-plane bounded by
    the line through the two real vertices, on the super vertex's side.
    Two super vertices: the half-plane bounded by the line through the real
    vertex parallel to the two supers' chord, on their side. Three: the
    whole plane.
    """
    sup = [v for v in tri if v < 0]
    if not sup:
        return _in_circumcircle(verts[tri[0]], verts[tri[1]], verts[tri[2]], d, eps)
    if len(sup) == 1:
        a, b = (verts[v] for v in tri if v >= 0)
        s = verts[sup[0]]
        side_d = _orient(a, b, d)
        side_s = _orient(a, b, s)
        return (side_d > lin_eps and side_s > 0) or (side_d < -lin_eps and side_s < 0)
    if len(sup) == 2:
        (a,) = (verts[v] for v in tri if v >= 0)
        s1, s2 = verts[sup[0]], verts[sup[1]]
        dx, dy = s2.x - s1.x, s2.y - s1.y

        def side(p: Point2D) -> float:
            return dx * (p.y - a.y) - dy * (p.x - a.x)

        side_d, side_s = side(d), side(s1)
        return (side_d > lin_eps and side_s > 0) or (side_d < -lin_eps and side_s < 0)
    return True


def _collinear_path(points: list[Point2D]) -> set[tuple[int, int]]:
    # Documented fallback: consecutive points along the line.
    order = sorted(range(len(points)), key=lambda i: (points[i].x, points[i].y))
    edges = set()
    for a, b in zip(order, order[1:]):
        edges.add((min(a, b), max(a, b)))
    return edges


def delaunay(points: list[Point2D]) -> set[tuple[int, int]]:
    """Delaunay edge set over `points`, as (i, j) index pairs with i < j."""
    points = [Point2D(float(p[0]), float(p[1])) for p in points]
    n = len(points)
    if n < 3:
        raise ValueError("delaunay needs at least 3 points")
    if len(set(points)) != n:
        raise ValueError("duplicate points")

    xs = [p.x for p in points]
    ys = [p.y for p in points]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    # The in-circle determinant scales with length^4.
    eps = EPS_REL * span ** 4

    a, b = points[0], points[1]
    if all(abs(_orient(a, b, p)) <= EPS_REL * span * span for p in points[2:]):
        return _collinear_path(points)

    # Super-triangle containing every point; its vertices carry negative
    # pseudo-ids and are treated as points at infinity: circumcircle tests
    # for triangles touching them degenerate into half-plane tests (see
    # _in_circle_ext), so the super-triangle size never distorts results.
    cx = (max(xs) + min(xs)) / 2.0
    cy = (max(ys) + min(ys)) / 2.0
    big = 64.0 * span
    verts = dict(enumerate(points))
    verts[-1] = Point2D(cx - big, cy - big)
    verts[-2] = Point2D(cx + big, cy - big)
    verts[-3] = Point2D(cx, cy + big)
    lin_eps = EPS_REL * span * span

    triangles: set[tuple[int, int, int]] = {(-3, -2, -1)}
    for idx in range(n):
        p = points[idx]
        bad = [t for t in triangles if _in_circle_ext(verts, t, p, eps, lin_eps)]
        # `bad` is never empty: the triangle containing p (super-triangle
        # guarantees one exists) has p strictly inside its circumcircle.
        boundary: dict[tuple[int, int], int] = {}
        for t in bad:
            for e in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
                boundary[e] = boundary.get(e, 0) + 1
            triangles.discard(t)
        for (u, v), count in boundary.items():
            if count == 1:
                triangles.add(tuple(sorted((u, v, idx))))

    edges: set[tuple[int, int]] = set()
    for t in triangles:
        if t[0] >= 0:  # sorted tuple: no super vertices at all
            edges.add((t[0], t[1]))
            edges.add((t[1], t[2]))
            edges.add((t[0], t[2]))
    return edges
