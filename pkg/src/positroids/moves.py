"""Weight-preserving graph moves, lollipops, bridges, and synthesis of a
reduced graph from a bounded affine permutation.

Every move returns a new graph plus the transported edge weights; boundary
measurements are preserved exactly (urban renewal applies its gauge factor at
a recorded vertex to stay exact at the cone level).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import BoundedAffinePermutation
from .linalg import Q, as_fraction
from .plabic import PlabicGraph


@dataclass(frozen=True)
class MoveResult:
    graph: PlabicGraph
    weights: dict
    note: Optional[dict] = None


def _fresh(prefix: str, taken) -> str:
    i = 0
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


def _rotation_replace(rotation, old, new_list):
    out = []
    for e in rotation:
        if e == old:
            out.extend(new_list)
        else:
            out.append(e)
    return out


def contract(graph: PlabicGraph, vertex: str, weights: dict) -> MoveResult:
    """Delete a degree-2 internal vertex not at the boundary, merging its
    neighbors; edges on either side pick up the opposite connecting weight."""
    if vertex not in graph.colors:
        raise ValueError(f"no internal vertex {vertex!r}")
    incident = graph.incident(vertex)
    if len(incident) != 2:
        raise ValueError(f"vertex {vertex!r} has degree {len(incident)}, need 2")
    e1, e2 = sorted(incident)
    u1 = graph.other_end(e1, vertex)
    u2 = graph.other_end(e2, vertex)
    if graph.is_boundary(u1) or graph.is_boundary(u2):
        raise ValueError(f"vertex {vertex!r} is adjacent to the boundary")
    if u1 == u2:
        raise ValueError("contracting a bigon would leave a loop")
    b, c = as_fraction(weights[e1]), as_fraction(weights[e2])
    new_weights = {}
    for e in graph.edges:
        if e in (e1, e2):
            continue
        w = as_fraction(weights[e])
        ends = graph.edges[e]
        if u1 in ends:
            w = w * c
        if u2 in ends:
            w = w * b
        new_weights[e] = w
    colors = dict(graph.colors)
    color = colors.pop(u2)
    colors.pop(vertex)
    edges = {e: ends for e, ends in graph.edges.items() if e not in (e1, e2)}
    edges = {
        e: tuple(u1 if x == u2 else x for x in ends) for e, ends in edges.items()
    }
    rot1 = list(graph.rotations[u1])
    rot2 = list(graph.rotations[u2])
    i2 = rot2.index(e2)
    spliced = rot2[i2 + 1 :] + rot2[:i2]
    rotations = {v: list(r) for v, r in graph.rotations.items() if v not in (vertex, u2)}
    rotations[u1] = _rotation_replace(rot1, e1, spliced)
    return MoveResult(PlabicGraph(graph.n, colors, edges, rotations), new_weights)


def expand(
    graph: PlabicGraph,
    vertex: str,
    first_edge: str,
    count: int,
    weights: dict,
) -> MoveResult:
    """Split ``count`` cyclically consecutive edges (starting at ``first_edge``
    in the rotation) off ``vertex`` onto a same-colored vertex, joined
    through a new degree-2 vertex of the opposite color with unit weights."""
    rot = list(graph.rotations[vertex])
    if first_edge not in rot:
        raise ValueError(f"{first_edge!r} is not incident to {vertex!r}")
    if not 1 <= count <= len(rot) - 1:
        raise ValueError("split must keep at least one edge on each side")
    start = rot.index(first_edge)
    moved = [rot[(start + i) % len(rot)] for i in range(count)]
    kept = [rot[(start + count + i) % len(rot)] for i in range(len(rot) - count)]
    color = graph.colors[vertex]
    other = "black" if color == "white" else "white"
    taken = set(graph.colors) | set(map(str, graph.boundary_vertices()))
    v_new = _fresh("sp", taken)
    v_mid = _fresh("md", taken | {v_new})
    e_a = _fresh("ea", set(graph.edges))
    e_b = _fresh("eb", set(graph.edges) | {e_a})
    colors = dict(graph.colors)
    colors[v_new] = color
    colors[v_mid] = other
    edges = dict(graph.edges)
    for e in moved:
        edges[e] = tuple(v_new if x == vertex else x for x in edges[e])
    edges[e_a] = (vertex, v_mid)
    edges[e_b] = (v_mid, v_new)
    rotations = {v: list(r) for v, r in graph.rotations.items()}
    rotations[vertex] = kept + [e_a]
    rotations[v_mid] = [e_a, e_b]
    rotations[v_new] = moved + [e_b]
    new_weights = dict(weights)
    new_weights[e_a] = Q(1)
    new_weights[e_b] = Q(1)
    return MoveResult(PlabicGraph(graph.n, colors, edges, rotations), new_weights)


def remove_boundary_vertex(graph: PlabicGraph, vertex: str, weights: dict) -> MoveResult:
    """Delete a degree-2 internal vertex adjacent to the boundary; the inner
    edge keeps its weight and reaches the boundary, the merged vertex's other
    edges scale by the removed outer weight."""
    incident = graph.incident(vertex)
    if vertex not in graph.colors or len(incident) != 2:
        raise ValueError(f"vertex {vertex!r} is not a degree-2 internal vertex")
    ends = [graph.other_end(e, vertex) for e in incident]
    boundary_sides = [i for i, x in enumerate(ends) if graph.is_boundary(x)]
    if len(boundary_sides) != 1:
        raise ValueError(f"vertex {vertex!r} is not adjacent to exactly one boundary vertex")
    e_out = incident[boundary_sides[0]]
    e_in = incident[1 - boundary_sides[0]]
    i = ends[boundary_sides[0]]
    u = ends[1 - boundary_sides[0]]
    c = as_fraction(weights[e_out])
    new_weights = {}
    for e in graph.edges:
        if e == e_out:
            continue
        w = as_fraction(weights[e])
        if e != e_in and u in graph.edges[e]:
            w = w * c
        new_weights[e] = w
    colors = dict(graph.colors)
    colors.pop(vertex)
    edges = {e: ends_ for e, ends_ in graph.edges.items() if e != e_out}
    edges[e_in] = tuple(i if x == vertex else x for x in edges[e_in])
    rotations = {v: list(r) for v, r in graph.rotations.items() if v != vertex}
    return MoveResult(PlabicGraph(graph.n, colors, edges, rotations), new_weights)


def add_boundary_vertex(graph: PlabicGraph, i: int, weights: dict) -> MoveResult:
    """Insert a degree-2 vertex of the opposite color in the middle of the
    pendant edge at boundary vertex i; the new outer edge has weight 1."""
    pe = graph.pendant_edge(i)
    u = graph.other_end(pe, i)
    color = "black" if graph.colors[u] == "white" else "white"
    taken = set(graph.colors)
    v_new = _fresh("bd", taken)
    e_new = _fresh("pe", set(graph.edges))
    colors = dict(graph.colors)
    colors[v_new] = color
    edges = dict(graph.edges)
    edges[pe] = (u, v_new)
    edges[e_new] = (v_new, i)
    rotations = {v: list(r) for v, r in graph.rotations.items()}
    rotations[v_new] = [pe, e_new]
    new_weights = dict(weights)
    new_weights[e_new] = Q(1)
    return MoveResult(PlabicGraph(graph.n, colors, edges, rotations), new_weights)


def urban_renewal(graph: PlabicGraph, face_id: str, weights: dict) -> MoveResult:
    """The square move, with weights b_i -> b_{i+2} / (b1 b3 + b2 b4).

    Exactness at the cone level is restored by a gauge transformation by the
    denominator at the lexicographically least internal vertex of the new
    graph, recorded in the note.
    """
    face = graph.face_by_id(face_id)
    if face.kind != "internal" or len(set(face.edges)) != 4 or len(face.edges) != 4:
        raise ValueError(f"face {face_id} is not an internal square")
    walk = list(face.walk)
    corners = [d[2] for d in walk]  # corner idx has face edges old[idx], old[idx+1]
    old = [d[0] for d in walk]
    if len(set(corners)) != 4:
        raise ValueError(f"face {face_id} is not an embedded square")
    b = [as_fraction(weights[e]) for e in old]
    denom = b[0] * b[2] + b[1] * b[3]
    if denom == 0:
        raise ValueError("urban renewal denominator b1*b3 + b2*b4 vanishes")
    taken = set(graph.colors)
    inner = {}
    for v in corners:
        inner[v] = _fresh("uin", taken | set(inner.values()))
    colors = dict(graph.colors)
    edges = dict(graph.edges)
    rotations = {v: list(r) for v, r in graph.rotations.items()}
    new_weights = dict(weights)
    spoke = {}
    for v in corners:
        colors[inner[v]] = "black" if graph.colors[v] == "white" else "white"
        e_sp = _fresh("usp", set(edges))
        edges[e_sp] = (v, inner[v])
        spoke[v] = e_sp
        new_weights[e_sp] = Q(1)
    # replace each corner's adjacent pair of square edges by its spoke
    for idx, v in enumerate(corners):
        e_in = old[idx]
        e_out = old[(idx + 1) % 4]
        rot = rotations[v]
        p_in, p_out = rot.index(e_in), rot.index(e_out)
        if (p_in + 1) % len(rot) == p_out:
            first = p_in
        elif (p_out + 1) % len(rot) == p_in:
            first = p_out
        else:
            raise ValueError(f"square edges not consecutive at corner {v!r}")
        cycled = rot[first:] + rot[:first]
        rotations[v] = [spoke[v]] + cycled[2:]
    # new inner square: the edge parallel to old[idx] gets weight b[idx+2]/denom
    new_sq = []
    for idx in range(4):
        v_prev, v_here = corners[(idx - 1) % 4], corners[idx]
        e_new = _fresh("usq", set(edges))
        edges[e_new] = (inner[v_prev], inner[v_here])
        new_weights[e_new] = b[(idx + 2) % 4] / denom
        new_sq.append(e_new)
    for e in old:
        edges.pop(e)
        new_weights.pop(e)

    def with_inner_rotations(flip: bool) -> PlabicGraph:
        for idx, v in enumerate(corners):
            arriving = new_sq[idx]
            leaving = new_sq[(idx + 1) % 4]
            pair = [leaving, arriving] if flip else [arriving, leaving]
            rotations[inner[v]] = [spoke[v]] + pair
        return PlabicGraph(graph.n, colors, edges, rotations)

    try:
        g2 = with_inner_rotations(False)
    except Exception:
        g2 = with_inner_rotations(True)
    gauge_vertex = min(g2.colors)
    for e in g2.incident(gauge_vertex):
        new_weights[e] = new_weights[e] * denom
    return MoveResult(g2, new_weights, {"gauge_vertex": gauge_vertex, "factor": denom})


@dataclass(frozen=True)
class Move:
    kind: str
    site: object
    params: Optional[dict] = None


def apply_move(graph: PlabicGraph, weights: dict, move: Move) -> MoveResult:
    if move.kind == "contract":
        return contract(graph, move.site, weights)
    if move.kind == "expand":
        return expand(graph, move.site, move.params["first_edge"], move.params["count"], weights)
    if move.kind == "boundary-remove":
        return remove_boundary_vertex(graph, move.site, weights)
    if move.kind == "boundary-add":
        return add_boundary_vertex(graph, move.site, weights)
    if move.kind == "urban-renewal":
        return urban_renewal(graph, move.site, weights)
    if move.kind in ("black-lollipop", "white-lollipop"):
        return add_lollipop(graph, move.site, move.kind.split("-")[0], weights)
    if move.kind in ("left-bridge", "right-bridge"):
        t = as_fraction((move.params or {}).get("t", 1))
        return add_bridge(graph, move.site, move.kind.split("-")[0], t, weights)
    raise ValueError(f"unknown move kind {move.kind!r}")


# -- lollipops and bridges ------------------------------------------------


def _shift_boundary(graph: PlabicGraph, i: int):
    """Relabel boundary vertices to open position i (old j >= i becomes j+1)."""

    def relabel(x):
        if graph.is_boundary(x):
            return x + 1 if x >= i else x
        return x

    edges = {e: (relabel(u), relabel(w)) for e, (u, w) in graph.edges.items()}
    return edges


def add_lollipop(graph: PlabicGraph, i: int, color: str, weights: Optional[dict] = None):
    """Insert a lollipop of the given color at boundary position i."""
    if not 1 <= i <= graph.n + 1:
        raise ValueError(f"position {i} out of range")
    if color not in ("white", "black"):
        raise ValueError(f"bad color {color!r}")
    edges = _shift_boundary(graph, i)
    taken = set(graph.colors)
    v = _fresh("lp", taken)
    e = _fresh("lpe", set(edges))
    colors = dict(graph.colors)
    colors[v] = color
    edges[e] = (i, v)
    rotations = {x: list(r) for x, r in graph.rotations.items()}
    rotations[v] = [e]
    g2 = PlabicGraph(graph.n + 1, colors, edges, rotations)
    new_weights = dict(weights) if weights is not None else None
    if new_weights is not None:
        new_weights[e] = Q(1)
    return MoveResult(g2, new_weights, {"vertex": v, "edge": e})


def add_bridge(
    graph: PlabicGraph,
    i: int,
    side: str,
    t: Fraction = Q(1),
    weights: Optional[dict] = None,
) -> MoveResult:
    """Add a left or right bridge between boundary vertices i and i+1.

    A left bridge hangs a white vertex over i+1 and a black one over i (the
    trip permutation becomes s_i o pi); a right bridge is mirrored (pi o s_i).
    Legality: left needs pi^{-1}(i) > pi^{-1}(i+1), right needs pi(i) > pi(i+1).
    The bridge edge gets weight t and the new pendant stubs weight 1, so the
    Plucker transform has parameter exactly t.
    """
    t = as_fraction(t)
    if t == 0:
        raise ValueError("bridge weight must be nonzero")
    pi = graph.trip_permutation()
    n = graph.n
    j = i % n + 1
    if side == "left":
        if not pi.inverse_value(i) > pi.inverse_value(i + 1):
            raise ValueError(f"left bridge at {i} is illegal for this permutation")
        color_i, color_j = "black", "white"
    elif side == "right":
        if not pi(i) > pi(i + 1):
            raise ValueError(f"right bridge at {i} is illegal for this permutation")
        color_i, color_j = "white", "black"
    else:
        raise ValueError(f"bad side {side!r}")

    g = graph
    w = dict(weights) if weights is not None else {e: Q(1) for e in graph.edges}
    # a same-colored neighbor of degree > 1 gets an opposite-color buffer
    # vertex (a boundary move); a same-colored lollipop is consumed outright,
    # which is the contraction of the transient same-color edge
    for pos, want in ((i, color_i), (j, color_j)):
        neighbor = g.other_end(g.pendant_edge(pos), pos)
        if g.colors[neighbor] == want and len(g.incident(neighbor)) > 1:
            res = add_boundary_vertex(g, pos, w)
            g, w = res.graph, res.weights
    colors = dict(g.colors)
    edges = dict(g.edges)
    rotations = {v: list(r) for v, r in g.rotations.items()}
    new_vertices = {}
    for pos, want in ((i, color_i), (j, color_j)):
        pe = g.pendant_edge(pos)
        u = g.other_end(pe, pos)
        v = _fresh("br", set(colors))
        if colors[u] == want and len(g.incident(u)) == 1:
            # consume the lollipop: the stub inherits the pendant's weight
            colors.pop(u)
            rotations.pop(u)
            colors[v] = want
            e_new = _fresh("bre", set(edges))
            stub_weight = w.pop(pe)
            edges.pop(pe)
            edges[e_new] = (v, pos)
            w[e_new] = stub_weight
            new_vertices[pos] = (v, None, e_new)
        else:
            colors[v] = want
            e_new = _fresh("bre", set(edges))
            edges[pe] = (u, v)
            edges[e_new] = (v, pos)
            w[e_new] = Q(1)
            new_vertices[pos] = (v, pe, e_new)
    e_bridge = _fresh("brg", set(edges))
    v_i, pe_i, stub_i = new_vertices[i]
    v_j, pe_j, stub_j = new_vertices[j]
    edges[e_bridge] = (v_i, v_j)
    w[e_bridge] = t
    # rotations: drawn with the disc above the boundary, i+1 lies to the left
    # of i, so clockwise order at the vertex over i is (up, stub, bridge) and
    # over i+1 it is (up, bridge, stub).
    rotations[v_i] = ([pe_i] if pe_i else []) + [stub_i, e_bridge]
    rotations[v_j] = ([pe_j] if pe_j else []) + [e_bridge, stub_j]
    g2 = PlabicGraph(g.n, colors, edges, rotations)
    return MoveResult(g2, w, {"bridge_edge": e_bridge, "parameter": t})


def synthesis_steps(pi: BoundedAffinePermutation) -> list[Move]:
    """The lollipop/bridge script building a reduced graph for pi.

    Fixed points peel off as lollipops first; otherwise a left bridge goes in
    at the smallest i with pi^{-1}(i) < pi^{-1}(i+1), which is exactly where
    the bridge is legal once fixed points are gone.  Replaying the steps with
    ``apply_move`` onto the first lollipop reproduces ``synthesize(pi)``.
    """
    n = pi.n
    if n == 1:
        color = "black" if pi.values[0] == 1 else "white"
        return [Move(f"{color}-lollipop", 1)]
    for i in range(1, n + 1):
        if pi(i) == i or pi(i) == i + n:
            color = "black" if pi(i) == i else "white"
            return synthesis_steps(_strip_position(pi, i)) + [Move(f"{color}-lollipop", i)]
    for i in range(1, n + 1):
        if pi.inverse_value(i) < pi.inverse_value(i + 1):
            smaller = BoundedAffinePermutation(_compose_s(pi, i, left=True))
            return synthesis_steps(smaller) + [Move("left-bridge", i)]
    raise ValueError("no legal lollipop or bridge step; invalid permutation?")


def synthesize(pi: BoundedAffinePermutation) -> PlabicGraph:
    """A reduced graph with trip permutation pi, by replaying its step script."""
    steps = synthesis_steps(pi)
    first = steps[0]
    color = first.kind.split("-")[0]
    graph = PlabicGraph(1, {"lp0": color}, {"lpe0": (1, "lp0")}, {"lp0": ["lpe0"]})
    weights = {"lpe0": Q(1)}
    for move in steps[1:]:
        result = apply_move(graph, weights, move)
        graph, weights = result.graph, result.weights
    return graph


def _strip_position(pi: BoundedAffinePermutation, i: int) -> BoundedAffinePermutation:
    """The permutation on n-1 letters left after deleting the fixed point at i.

    Uses the order embedding that matches the boundary relabeling of
    ``add_lollipop``: residues below i keep their name, the rest shift up.
    """
    n = pi.n
    m = n - 1

    def up(t: int) -> int:
        s, r = divmod(t - 1, m)
        r += 1
        return (r if r < i else r + 1) + s * n

    def down(y: int) -> int:
        s, r = divmod(y - 1, n)
        r += 1
        if r == i:
            raise ValueError(f"{y} is in the deleted residue class")
        return (r if r < i else r - 1) + s * m

    return BoundedAffinePermutation(
        tuple(down(pi(up(t))) for t in range(1, m + 1))
    )


def _compose_s(pi: BoundedAffinePermutation, i: int, left: bool) -> tuple[int, ...]:
    """Window values of s_i o pi (left) or pi o s_i (right)."""
    n = pi.n

    def s(x: int) -> int:
        r = (x - i) % n
        if r == 0:
            return x + 1
        if r == 1:
            return x - 1
        return x

    values = []
    for a in range(1, n + 1):
        values.append(s(pi(a)) if left else pi(s(a)))
    return tuple(values)
