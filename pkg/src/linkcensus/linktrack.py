"""Incremental vertex-link bookkeeping for partial gluings.

Tracks three structures as faces are glued and unglued in LIFO order:

  * a signed class structure on the 6n tetrahedron edges, whose sign
    records direction consistency; a conflict means some edge would be
    identified with itself reversed,
  * a signed class structure on the 4n corner triangles of the vertex
    links, whose sign records orientation; a conflict means some link
    surface would become nonorientable,
  * at check level 2, the boundary cycles of the partial link surfaces in
    a cyclic skip list with one element per link edge slot.

Gluing a face pair identifies three tetrahedron edge pairs and three link
edge pairs.  Each link edge gluing either splits a boundary cycle (the two
edges lie on the same cycle), closes pieces off, or merges two cycles.
Merging two distinct cycles that bound the same connected surface piece
would add genus to that piece, and a punctured sphere can never shed
genus, so such gluings are rejected; splits and cross-piece merges keep
every piece a punctured sphere.

All updates are journaled.  Gluing operations hand back integer tokens
and the matching unglue calls consume them strictly last-in first-out,
restoring the previous state exactly.
"""

from __future__ import annotations

from enum import Enum

from .dsu import Outcome, SignedDsu
from .perms import (
    EDGE_INDEX,
    EDGE_PAIRS,
    FACE_EDGES,
    FACE_VERTICES,
    LINK_ALONG,
    LINK_EDGE_POS,
    PERM4_IMAGES,
)
from .skiplist import CyclicSkipList


class GlueOutcome(Enum):
    OK = "ok"
    BAD_EDGE = "bad-edge"          # an edge glued to itself reversed
    BAD_ORIENT = "bad-orient"      # a link surface loses orientability
    BAD_GENUS = "bad-genus"        # a link surface would gain genus


def link_edge_id(t: int, v: int, f: int) -> int:
    """Skip-list element for the edge of (t, v)'s corner triangle in face f."""
    return 12 * t + 3 * v + LINK_EDGE_POS[v][f]


class LinkState:
    """Link invariants of a partial gluing on n tetrahedra.

    `level` 1 maintains the two class structures only; level 2 adds the
    boundary cycle tracking.  Rejected gluings leave the state untouched;
    accepted ones return a token for the matching unglue call.
    """

    def __init__(self, n: int, level: int = 2, seed: int = 0):
        if level not in (1, 2):
            raise ValueError("level must be 1 or 2")
        self.n = n
        self.level = level
        self.edge_cls = SignedDsu(6 * n)
        self.tri_cls = SignedDsu(4 * n)
        self.cycles = None
        self.boundary_edges = 12 * n
        self.cycle_count = 4 * n
        self._tokens: list[tuple] = []  # (token id, marks...)
        self._next_token = 0
        if level >= 2:
            self.cycles = CyclicSkipList(12 * n, seed=seed)
            for t in range(n):
                for v in range(4):
                    e0, e1, e2 = (12 * t + 3 * v + k for k in range(3))
                    # corner traversal: along e0, along e2, against e1
                    self.cycles.make_cycle([(e0, 1), (e2, 1), (e1, 0)])

    # -- queries ------------------------------------------------------------

    def edge_class_count(self) -> int:
        return self.edge_cls.components

    def link_piece_count(self) -> int:
        return self.tri_cls.components

    def closed_complex_is_manifold(self) -> bool:
        """For a complete gluing: every vertex link is a 2-sphere.

        With all faces glued the links are closed surfaces, orientable
        because every gluing passed the orientation check.  The complex
        has V = link pieces, E = edge classes, F = 2n, T = n, and its
        Euler characteristic equals the total link genus, so chi = 0 pins
        every link to a sphere.
        """
        return self.tri_cls.components == self.edge_cls.components - self.n

    # -- gluing -------------------------------------------------------------

    def _mark(self) -> tuple:
        return (
            self.edge_cls.checkpoint(),
            self.tri_cls.checkpoint(),
            self.cycles.checkpoint() if self.cycles is not None else 0,
            self.boundary_edges,
            self.cycle_count,
        )

    def _restore(self, mark) -> None:
        e_mark, t_mark, c_mark, b, cc = mark
        self.edge_cls.rollback(e_mark)
        self.tri_cls.rollback(t_mark)
        if self.cycles is not None:
            self.cycles.rollback(c_mark)
        self.boundary_edges = b
        self.cycle_count = cc

    def _issue(self, mark) -> int:
        token = self._next_token
        self._next_token += 1
        self._tokens.append((token, mark))
        return token

    def _redeem(self, token: int) -> tuple:
        if not self._tokens or self._tokens[-1][0] != token:
            raise RuntimeError("unglue out of order: token is not the most recent")
        self._next_token = token
        return self._tokens.pop()[1]

    def _link_glue(self, t1: int, v1: int, f1: int, t2: int, v2: int, f2: int,
                   dirsign: int) -> GlueOutcome:
        """One link-edge gluing; assumes a caller-held mark covers rollback."""
        rel = -LINK_ALONG[v1][f1] * LINK_ALONG[v2][f2] * dirsign
        out = self.tri_cls.union(4 * t1 + v1, 4 * t2 + v2, rel)
        if out is Outcome.CONFLICT:
            return GlueOutcome.BAD_ORIENT
        if self.cycles is not None:
            x = link_edge_id(t1, v1, f1)
            y = link_edge_id(t2, v2, f2)
            if not self.cycles.same_cycle(x, y) and out is Outcome.REDUNDANT:
                # distinct boundary cycles of one piece: gluing them would
                # raise the genus, which can never come back down
                return GlueOutcome.BAD_GENUS
            self.cycle_count += self.cycles.excise_pair(x, y, dirsign == 1)
        self.boundary_edges -= 2
        return GlueOutcome.OK

    def glue_link_edges(self, x: tuple[int, int, int], y: tuple[int, int, int],
                        dirsign: int) -> tuple[GlueOutcome, int | None]:
        """Glue link edge x = (t, v, f) to y, arrows matching iff dirsign=+1.

        Returns (outcome, token); the token is present only on OK and is
        consumed by unglue_link_edges.
        """
        mark = self._mark()
        out = self._link_glue(*x, *y, dirsign)
        if out is not GlueOutcome.OK:
            self._restore(mark)
            return out, None
        return out, self._issue(mark)

    def unglue_link_edges(self, token: int) -> None:
        self._restore(self._redeem(token))

    def glue_faces(self, t1: int, f1: int, t2: int, f2: int,
                   perm: int) -> tuple[GlueOutcome, int | None]:
        """Apply the face gluing (t1, f1) -> (t2, f2) by Perm4 index `perm`.

        The permutation must carry face f1 onto face f2; gluing tables are
        built that way.  Checks run cheapest first: the three tetrahedron
        edge identifications, then per vertex the orientation and cycle
        steps.  Any failure rolls the whole call back.
        """
        images = PERM4_IMAGES[perm]
        mark = self._mark()

        for e in FACE_EDGES[f1]:
            a, b = EDGE_PAIRS[e]
            ia, ib = images[a], images[b]
            rel = 1 if ia < ib else -1
            if ia > ib:
                ia, ib = ib, ia
            out = self.edge_cls.union(6 * t1 + e, 6 * t2 + EDGE_INDEX[(ia, ib)], rel)
            if out is Outcome.CONFLICT:
                self._restore(mark)
                return GlueOutcome.BAD_EDGE, None

        for v in FACE_VERTICES[f1]:
            w = images[v]
            a, b = (u for u in FACE_VERTICES[f1] if u != v)
            dirsign = 1 if images[a] < images[b] else -1
            out = self._link_glue(t1, v, f1, t2, w, f2, dirsign)
            if out is not GlueOutcome.OK:
                self._restore(mark)
                return out, None

        return GlueOutcome.OK, self._issue(mark)

    def unglue_faces(self, token: int) -> None:
        """Exact LIFO inverse of glue_faces."""
        self._restore(self._redeem(token))

    # -- diagnostics ---------------------------------------------------------

    def boundary_cycles(self) -> list[list[tuple[int, int]]]:
        """Current boundary cycles as (link edge, entered side) walks."""
        if self.cycles is None:
            raise RuntimeError("cycle tracking disabled at this level")
        return self.cycles.cycles()
