"""Naive from-scratch validators used as test oracles and leaf checks.

Everything here is written directly against the gluing table with plain
closures; none of the incremental machinery (signed union-find, cyclic
skip lists, link tracking) is used.  The point is independence: when the
fast path and this module agree on thousands of randomized cases, a shared
systematic bug is unlikely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Triangulation, is_connected, is_orientable, relabel, serialize
from .perms import (
    EDGE_INDEX,
    EDGE_PAIRS,
    FACE_EDGES,
    FACE_OPPOSITE,
    FACE_VERTICES,
    GLUING_PERMS,
    PERM4_IMAGES,
    FaceSlot,
)

# Faces of a tetrahedron containing vertex v, ascending (all f != 3-v).
_FACES_AT_VERTEX = tuple(
    tuple(f for f in range(4) if v in FACE_VERTICES[f]) for v in range(4)
)
# Other two vertices of face f besides v, ascending.
_EDGE_ENDS = {
    (v, f): tuple(w for w in FACE_VERTICES[f] if w != v)
    for v in range(4)
    for f in _FACES_AT_VERTEX[v]
}


def _link_edge_id(t: int, v: int, f: int) -> int:
    return 12 * t + 3 * v + _FACES_AT_VERTEX[v].index(f)


def _corner_id(t: int, v: int, w: int) -> int:
    others = tuple(x for x in range(4) if x != v)
    return 12 * t + 3 * v + others.index(w)


class _Closure:
    """Minimal union-find, local to this module on purpose."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        r = x
        while self.parent[r] != r:
            r = self.parent[r]
        while self.parent[x] != r:
            self.parent[x], x = r, self.parent[x]
        return r

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


@dataclass
class LinkSurfaceReport:
    """Shape of the link surface of one vertex class."""

    vertex_class: tuple[tuple[int, int], ...]
    triangles: int
    boundary_edges: int
    boundary_cycles: int
    euler: int
    orientable: bool
    closed: bool
    genus: int | None  # closed orientable links only

    @property
    def is_sphere(self) -> bool:
        return self.closed and self.euler == 2

    @property
    def is_punctured_sphere(self) -> bool:
        """Sphere with >= 0 holes; covers the closed case too."""
        return self.orientable and self.euler + self.boundary_cycles == 2


def _link_gluings(tri: Triangulation):
    """Yield identified link-edge pairs ((t1,v1,f1),(t2,v2,f2), preserves)."""
    for s in range(4 * tri.n):
        d = tri.adj[s]
        if d == -1 or d < s:
            continue
        t1, f1 = s // 4, s % 4
        t2, f2 = d // 4, d % 4
        images = PERM4_IMAGES[tri.perm[s]]
        for v in FACE_VERTICES[f1]:
            yield (t1, v, f1), (t2, images[v], f2), images


def build_links(tri: Triangulation) -> list[LinkSurfaceReport]:
    """Build every vertex link from scratch and report its shape.

    Works on partial triangulations too: unglued link edges count as
    boundary.  One report per vertex class, in vertex-class order.
    """
    n = tri.n
    corners = _Closure(12 * n)
    tris = _Closure(4 * n)
    glued: dict[int, tuple[int, int]] = {}  # link edge id -> (other id, rel sign)

    for (t1, v1, f1), (t2, v2, f2), images in _link_gluings(tri):
        a, b = _EDGE_ENDS[(v1, f1)]
        ia, ib = images[a], images[b]
        corners.union(_corner_id(t1, v1, a), _corner_id(t2, v2, ia))
        corners.union(_corner_id(t1, v1, b), _corner_id(t2, v2, ib))
        tris.union(4 * t1 + v1, 4 * t2 + v2)
        e1 = _link_edge_id(t1, v1, f1)
        e2 = _link_edge_id(t2, v2, f2)
        # The arrow of a link edge runs from the lower other-vertex to the
        # higher; the gluing preserves arrows iff the images stay ordered.
        dirsign = 1 if ia < ib else -1
        rel = -_along(v1, f1) * _along(v2, f2) * dirsign
        glued[e1] = (e2, rel)
        glued[e2] = (e1, rel)

    # orientation flags per link triangle via BFS over glued edges
    orient = [0] * (4 * n)
    comp_orientable: dict[int, bool] = {}
    for start in range(4 * n):
        if orient[start] != 0:
            continue
        orient[start] = 1
        stack = [start]
        ok = True
        while stack:
            tv = stack.pop()
            t, v = tv // 4, tv % 4
            for f in _FACES_AT_VERTEX[v]:
                pair = glued.get(_link_edge_id(t, v, f))
                if pair is None:
                    continue
                other, rel = pair
                ot = other // 12
                ov = (other % 12) // 3
                want = orient[4 * t + v] * rel
                cur = orient[4 * ot + ov]
                if cur == 0:
                    orient[4 * ot + ov] = want
                    stack.append(4 * ot + ov)
                elif cur != want:
                    ok = False
        comp_orientable[tris.find(start)] = ok

    by_root: dict[int, list[int]] = {}
    for tv in range(4 * n):
        by_root.setdefault(tris.find(tv), []).append(tv)

    # boundary cycles: walk unglued link edges corner to corner
    ends_at: dict[int, list[tuple[int, int]]] = {}
    for t in range(n):
        for v in range(4):
            for f in _FACES_AT_VERTEX[v]:
                e = _link_edge_id(t, v, f)
                if e in glued:
                    continue
                a, b = _EDGE_ENDS[(v, f)]
                for w in (a, b):
                    c = corners.find(_corner_id(t, v, w))
                    ends_at.setdefault(c, []).append((e, w))
    assert all(len(v) == 2 for v in ends_at.values()), "pinched boundary corner"
    cycles_of: dict[int, int] = {}  # piece root -> boundary cycle count
    seen_ends: set[tuple[int, int]] = set()
    for c, pair in ends_at.items():
        for start in pair:
            if start in seen_ends:
                continue
            cur = start
            while cur not in seen_ends:
                seen_ends.add(cur)
                e, w = cur
                t, v = e // 12, (e % 12) // 3
                f = _FACES_AT_VERTEX[v][e % 3]
                a, b = _EDGE_ENDS[(v, f)]
                other_end = b if w == a else a
                seen_ends.add((e, other_end))
                root = corners.find(_corner_id(t, v, other_end))
                e1, e2 = ends_at[root]
                cur = e2 if e1 == (e, other_end) else e1
            piece = tris.find(4 * (start[0] // 12) + (start[0] % 12) // 3)
            cycles_of[piece] = cycles_of.get(piece, 0) + 1

    reports = []
    for root, members in sorted(by_root.items(), key=lambda kv: min(kv[1])):
        f_count = len(members)
        edge_ids = [
            _link_edge_id(tv // 4, tv % 4, f)
            for tv in members
            for f in _FACES_AT_VERTEX[tv % 4]
        ]
        boundary = sum(1 for e in edge_ids if e not in glued)
        interior_pairs = (len(edge_ids) - boundary) // 2
        e_count = boundary + interior_pairs
        corner_roots = {
            corners.find(_corner_id(tv // 4, tv % 4, w))
            for tv in members
            for w in range(4)
            if w != tv % 4
        }
        v_count = len(corner_roots)
        euler = v_count - e_count + f_count
        closed = boundary == 0
        orientable = comp_orientable[root]
        genus = (2 - euler) // 2 if closed and orientable else None
        reports.append(
            LinkSurfaceReport(
                vertex_class=tuple((tv // 4, tv % 4) for tv in sorted(members)),
                triangles=f_count,
                boundary_edges=boundary,
                boundary_cycles=cycles_of.get(root, 0),
                euler=euler,
                orientable=orientable,
                closed=closed,
                genus=genus,
            )
        )
    return reports


def _along(v: int, f: int) -> int:
    """+1 when the reference orientation of link triangle (t,v) traverses
    edge (t,v,f) along its arrow, -1 against."""
    others = tuple(x for x in range(4) if x != v)
    return -1 if FACE_OPPOSITE[f] == others[1] else 1


def check_edges(tri: Triangulation) -> list[list[tuple[int, int]]]:
    """Edge classes identified with themselves in reverse.

    Returns the offending classes as sorted (tet, edge index) lists; empty
    means condition (ii) holds.  Plain closure over directed edge slots.
    """
    n = tri.n
    uf = _Closure(12 * n)  # 6n edges x 2 directions
    for s in range(4 * tri.n):
        d = tri.adj[s]
        if d == -1 or d < s:
            continue
        t1, t2 = s // 4, d // 4
        images = PERM4_IMAGES[tri.perm[s]]
        for e in FACE_EDGES[s % 4]:
            a, b = EDGE_PAIRS[e]
            ia, ib = images[a], images[b]
            e2 = EDGE_INDEX[(min(ia, ib), max(ia, ib))]
            fwd = 1 if ia < ib else 0
            uf.union(12 * t1 + 2 * e + 1, 12 * t2 + 2 * e2 + fwd)
            uf.union(12 * t1 + 2 * e, 12 * t2 + 2 * e2 + 1 - fwd)
    bad = []
    seen = set()
    for t in range(n):
        for e in range(6):
            i = 12 * t + 2 * e
            if uf.find(i) != uf.find(i + 1):
                continue
            root = uf.find(i)
            if root in seen:
                continue
            seen.add(root)
            members = sorted(
                (u, g)
                for u in range(n)
                for g in range(6)
                if uf.find(12 * u + 2 * g) == root
            )
            bad.append(members)
    return bad


def is_3manifold(tri: Triangulation) -> bool:
    """Complete triangulation test: every vertex link a 2-sphere and no
    edge identified with itself reversed."""
    if not tri.is_complete():
        raise ValueError("is_3manifold needs a complete triangulation")
    if check_edges(tri):
        return False
    return all(r.is_sphere for r in build_links(tri))


def _all_pairings(n: int):
    """All slot pairings of 4n slots (connected ones only)."""
    adj = [-1] * (4 * n)

    def helper(pairs):
        free = [s for s in range(4 * n) if adj[s] == -1]
        if not free:
            uf = _Closure(n)
            for a, b in pairs:
                uf.union(a // 4, b // 4)
            if len({uf.find(t) for t in range(n)}) == 1:
                yield list(pairs)
            return
        s = free[0]
        for d in free[1:]:
            adj[s], adj[d] = d, s
            pairs.append((s, d))
            yield from helper(pairs)
            pairs.pop()
            adj[s], adj[d] = -1, -1

    yield from helper([])


def brute_census(n: int):
    """Exhaustive census by validation of every complete gluing.

    Only sensible for n <= 2.  Returns (class_reps, orientable_count):
    one representative Triangulation per isomorphism class, where classes
    are computed by expanding full relabelling orbits, never by signature.
    """
    if n > 2:
        raise ValueError("brute_census is a small-n oracle; use the search instead")
    reps: list[Triangulation] = []
    seen: set[str] = set()
    tet_maps = list(itertools.permutations(range(n)))
    vertex_maps = list(itertools.product(range(24), repeat=n))
    for pairing in _all_pairings(n):
        for choice in itertools.product(range(6), repeat=len(pairing)):
            tri = Triangulation(n)
            for (s, d), k in zip(pairing, choice):
                src = FaceSlot.from_index(s)
                dst = FaceSlot.from_index(d)
                tri.glue(src, dst, GLUING_PERMS[src.face][dst.face][k])
            if not is_3manifold(tri):
                continue
            key = serialize(tri)
            if key in seen:
                continue
            reps.append(tri)
            for tm in tet_maps:
                for vm in vertex_maps:
                    seen.add(serialize(relabel(tri, list(tm), list(vm))))
    orientable = sum(1 for r in reps if is_orientable(r))
    return reps, orientable
