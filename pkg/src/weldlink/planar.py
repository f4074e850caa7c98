"""Planar realization of a Gauss code and SVG emission.

The layout is deliberately simple and deterministic: classical crossings sit
on a horizontal row in identifier order, and the strands connecting their
endpoints are routed as axis-aligned polylines, each in its own horizontal
lane below the row with per-edge rational offsets keeping every segment in
general position.  Any two strand segments that cross outside the crossing
discs meet transversally at a point which becomes a virtual crossing.
Minimizing the number of virtual crossings is a non-goal.

All coordinates are exact :class:`~fractions.Fraction` pairs, so segment
intersections are computed without rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .correspondence import _require_code
from .model import GaussCode, OVER, UNDER

_SPACING = 10  # x distance between consecutive crossing discs


@dataclass(frozen=True)
class ClassicalVertex:
    crossing: int
    sign: int
    center: tuple
    over_start: tuple
    over_end: tuple
    under_start: tuple  # drawing order, not orientation
    under_end: tuple


@dataclass(frozen=True)
class EdgePath:
    """One connecting strand: from the out-port of passage ``start`` of a
    component to the in-port of the next passage, as a polyline."""

    component: int
    start: int
    points: tuple


@dataclass(frozen=True)
class PlanarDiagram:
    classicals: tuple
    virtuals: tuple  # intersection points of connecting strands
    edges: tuple
    free_loops: tuple  # (center, radius) circles for crossing-free components
    components: tuple  # the source Gauss code's components

    def read_out(self) -> GaussCode:
        """Forget the plane data; recover the source Gauss code."""
        return GaussCode(self.components)


class LayoutError(RuntimeError):
    """The router produced a degenerate configuration (should not happen)."""


def realize_planar(code: GaussCode) -> PlanarDiagram:
    """Realize a valid Gauss code in the plane, introducing virtual crossings
    wherever the fixed routing makes strands cross."""
    _require_code(code)
    signs = code.crossings()
    ids = sorted(signs)
    rank = {c: i for i, c in enumerate(ids)}

    classicals = []
    ports = {}  # (crossing, role, "in"|"out") -> point
    for c in ids:
        i = rank[c]
        x0 = Fraction(_SPACING * i)
        a = (x0, Fraction(0))
        b = (x0 + 4, Fraction(0))
        bottom = (x0 + 2, Fraction(-2))
        top = (x0 + 2, Fraction(2))
        classicals.append(
            ClassicalVertex(c, signs[c], (x0 + 2, Fraction(0)), a, b, bottom, top)
        )
        ports[(c, OVER, "in")] = a
        ports[(c, OVER, "out")] = b
        if signs[c] == 1:
            ports[(c, UNDER, "in")] = bottom
            ports[(c, UNDER, "out")] = top
        else:
            ports[(c, UNDER, "in")] = top
            ports[(c, UNDER, "out")] = bottom

    connections = []
    free_loops = []
    for ci, comp in enumerate(code.components):
        if not comp:
            free_loops.append(((Fraction(-10 - _SPACING * ci), Fraction(0)), Fraction(2)))
            continue
        n = len(comp)
        for j in range(n):
            connections.append((ci, j, comp[j], comp[(j + 1) % n]))

    m = len(connections)
    edges = []
    for e, (ci, j, p, q) in enumerate(connections):
        src_off = Fraction(2 * e + 1, 2 * m + 2)
        tgt_off = Fraction(2 * e + 2, 2 * m + 2)
        lane = Fraction(-4 - e)
        src = ports[(p.crossing, p.role, "out")]
        tgt = ports[(q.crossing, q.role, "in")]
        pts = [src]
        pts.extend(_escape(src, rank[p.crossing], src_off, lane, signs[p.crossing], p.role))
        approach = _approach(tgt, rank[q.crossing], tgt_off, lane, signs[q.crossing], q.role)
        pts.append((approach[0][0], lane))  # lane run ends under the approach
        pts.extend(approach)
        pts.append(tgt)
        edges.append(EdgePath(ci, j, tuple(_dedupe(pts))))

    virtuals = _intersections(classicals, edges)
    return PlanarDiagram(
        tuple(classicals),
        tuple(virtuals),
        tuple(edges),
        tuple(free_loops),
        tuple(code.components),
    )


def _escape(src, i, off, lane, sign, role):
    """Points from just after the out-port down to the start of the lane run."""
    x0 = Fraction(_SPACING * i)
    if role == OVER:  # out at B = (x0 + 4, 0)
        col = x0 + 4 + off
        return [(col, Fraction(0)), (col, lane)]
    if sign == 1:  # under-out at the top port
        col = x0 + 4 + off
        lift = Fraction(2) + off
        return [(src[0], lift), (col, lift), (col, lane)]
    # under-out at the bottom port: straight down
    return [(src[0], lane)]


def _approach(tgt, i, off, lane, sign, role):
    """Points from the end of the lane run up to just before the in-port."""
    x0 = Fraction(_SPACING * i)
    if role == OVER:  # in at A = (x0, 0)
        col = x0 - off
        return [(col, lane), (col, Fraction(0))]
    if sign == 1:  # under-in at the bottom port: straight up
        return [(tgt[0], lane)]
    # under-in at the top port: rise beside the disc, then drop onto it
    col = x0 + 4 + off
    lift = Fraction(2) + off
    return [(col, lane), (col, lift), (tgt[0], lift)]


def _dedupe(points):
    out = [points[0]]
    for p in points[1:]:
        if p != out[-1]:
            out.append(p)
    return out


def _segments(points):
    return list(zip(points, points[1:]))


def _intersections(classicals, edges):
    """All pairwise strand intersections; every one must be a transverse
    interior crossing of two axis-aligned segments, and crossing discs must
    not be hit away from their ports."""
    edge_segs = []
    for k, edge in enumerate(edges):
        for seg in _segments(edge.points):
            edge_segs.append((k, seg))
    fixed_segs = []
    for v in classicals:
        fixed_segs.append((v.over_start, v.over_end))
        fixed_segs.append((v.under_start, v.under_end))

    virtuals = []
    for a in range(len(edge_segs)):
        ka, sa = edge_segs[a]
        for b in range(a + 1, len(edge_segs)):
            kb, sb = edge_segs[b]
            if ka == kb and abs(a - b) == 1:
                continue  # consecutive segments of one polyline share a corner
            hit = _cross(sa, sb)
            if hit == "overlap":
                raise LayoutError("collinear overlap between strand segments")
            if hit is not None:
                kind, point = hit
                if kind == "interior":
                    virtuals.append(point)
                elif ka != kb:
                    raise LayoutError("strands touch without crossing at %r" % (point,))
    for _, sa in edge_segs:
        for sb in fixed_segs:
            hit = _cross(sa, sb)
            if hit == "overlap":
                shared = _shared_endpoint(sa, sb)
                if shared is None:
                    raise LayoutError("strand overlaps a crossing disc")
                continue
            if hit is not None:
                kind, point = hit
                if kind == "interior" or not _is_endpoint(point, sa) or not _is_endpoint(point, sb):
                    raise LayoutError(
                        "strand hits a crossing disc away from a port at %r" % (point,)
                    )
    return sorted(set(virtuals))


def _is_endpoint(p, seg):
    return p == seg[0] or p == seg[1]


def _shared_endpoint(sa, sb):
    for p in sa:
        if p in sb:
            return p
    return None


def _cross(sa, sb):
    """Intersection of two axis-aligned segments.

    Returns None (disjoint), "overlap" (collinear with a shared stretch or a
    shared single point on the same line), or (kind, point) with kind
    "interior" when the point is interior to both and "touch" otherwise.
    """
    (ax1, ay1), (ax2, ay2) = sa
    (bx1, by1), (bx2, by2) = sb
    a_vert = ax1 == ax2
    b_vert = bx1 == bx2
    if a_vert == b_vert:
        if a_vert:
            if ax1 != bx1:
                return None
            lo = max(min(ay1, ay2), min(by1, by2))
            hi = min(max(ay1, ay2), max(by1, by2))
        else:
            if ay1 != by1:
                return None
            lo = max(min(ax1, ax2), min(bx1, bx2))
            hi = min(max(ax1, ax2), max(bx1, bx2))
        if lo > hi:
            return None
        if lo < hi:
            return "overlap"
        point = (ax1, lo) if a_vert else (lo, ay1)
        if _is_endpoint(point, sa) and _is_endpoint(point, sb):
            return ("touch", point)
        return "overlap"
    if b_vert:
        sa, sb = sb, sa
        (ax1, ay1), (ax2, ay2) = sa
        (bx1, by1), (bx2, by2) = sb
    # sa vertical at x = ax1, sb horizontal at y = by1
    x, y = ax1, by1
    if not (min(bx1, bx2) <= x <= max(bx1, bx2)):
        return None
    if not (min(ay1, ay2) <= y <= max(ay1, ay2)):
        return None
    point = (x, y)
    interior_a = min(ay1, ay2) < y < max(ay1, ay2)
    interior_b = min(bx1, bx2) < x < max(bx1, bx2)
    if interior_a and interior_b:
        return ("interior", point)
    return ("touch", point)


# ---------------------------------------------------------------------------
# SVG emission.


def emit_svg(diagram: PlanarDiagram) -> bytes:
    """Deterministic SVG 1.1 rendering: classical crossings with a broken
    under-strand, virtual crossings as plain transverse intersections."""
    xs, ys = [Fraction(0)], [Fraction(0)]
    for v in diagram.classicals:
        for p in (v.over_start, v.over_end, v.under_start, v.under_end):
            xs.append(p[0])
            ys.append(p[1])
    for e in diagram.edges:
        for p in e.points:
            xs.append(p[0])
            ys.append(p[1])
    for (cx, cy), r in diagram.free_loops:
        xs.extend([cx - r, cx + r])
        ys.extend([cy - r, cy + r])
    margin = Fraction(2)
    x_min, x_max = min(xs) - margin, max(xs) + margin
    y_min, y_max = min(ys) - margin, max(ys) + margin
    scale = 10

    def pt(p):
        x = float((p[0] - x_min) * scale)
        y = float((y_max - p[1]) * scale)  # flip so +y is up
        return "%.2f,%.2f" % (x, y)

    width = float((x_max - x_min) * scale)
    height = float((y_max - y_min) * scale)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="%.2f" height="%.2f" viewBox="0 0 %.2f %.2f" '
        'data-classical="%d" data-virtual="%d">'
        % (width, height, width, height, len(diagram.classicals), len(diagram.virtuals)),
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]
    for e in diagram.edges:
        lines.append(
            '<polyline class="strand" points="%s"/>'
            % " ".join(pt(p) for p in e.points)
        )
    for (c, r) in diagram.free_loops:
        cxs, cys = pt(c).split(",")
        lines.append(
            '<circle class="free-loop" cx="%s" cy="%s" r="%.2f"/>'
            % (cxs, cys, float(r * scale))
        )
    for v in diagram.classicals:
        lines.append(
            '<g class="classical" data-crossing="%d" data-sign="%+d">'
            % (v.crossing, v.sign)
        )
        a, b = pt(v.over_start).split(","), pt(v.over_end).split(",")
        lines.append(
            '<line class="overstrand" x1="%s" y1="%s" x2="%s" y2="%s"/>'
            % (a[0], a[1], b[0], b[1])
        )
        # under-strand broken at the center: one gap, two halves
        (ux, uy), (vx, vy) = v.under_start, v.under_end
        cx, cy = v.center
        gap = Fraction(1, 2)
        for (p1, p2) in (
            ((ux, uy), (cx, cy - gap) if uy < cy else (cx, cy + gap)),
            ((vx, vy), (cx, cy - gap) if vy < cy else (cx, cy + gap)),
        ):
            a, b = pt(p1).split(","), pt(p2).split(",")
            lines.append(
                '<line class="under-half" x1="%s" y1="%s" x2="%s" y2="%s"/>'
                % (a[0], a[1], b[0], b[1])
            )
        lines.append("</g>")
    lines.append("</g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
