"""Combinatorial triangulations: gluing tables, text formats, invariants.

A triangulation of size n is n abstract tetrahedra with some of their 4n
faces glued in pairs.  A gluing rebrands face `f1` of tetrahedron `t1` as
face `f2` of `t2` via a Perm4 carrying vertices of t1 to vertices of t2;
the stored table always keeps both directions consistent (the reverse slot
holds the inverse permutation).

The serialized form is one line:

    n ; t0f0 t0f1 t0f2 t0f3 ; t1f0 ... ; ...

where each token is `-` (unglued) or `T:P` with T the destination
tetrahedron and P the Perm4 index.  `serialize_human` renders the same
data in the letter/digit-triple style used for worked examples
(`C:013` means "to tetrahedron C, sorted face vertices land on 0,1,3").
"""

from __future__ import annotations

import re

from .perms import (
    EDGE_INDEX,
    EDGE_PAIRS,
    FACE_EDGES,
    FACE_OF_VERTICES,
    FACE_OPPOSITE,
    FACE_VERTICES,
    PERM4_IMAGES,
    PERM4_INV,
    PERM4_MUL,
    PERM4_SIGN,
    FaceSlot,
    Perm4,
    extend_face_perm,
)


class ParseError(ValueError):
    pass


class Triangulation:
    """Mutable gluing table over n tetrahedra.

    `adj[s]` is the partner slot index of slot s (or -1) and `perm[s]` the
    Perm4 index mapping vertices of s's tetrahedron to the partner's.
    """

    __slots__ = ("n", "adj", "perm")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one tetrahedron")
        self.n = n
        self.adj = [-1] * (4 * n)
        self.perm = [-1] * (4 * n)

    def copy(self) -> "Triangulation":
        t = Triangulation.__new__(Triangulation)
        t.n = self.n
        t.adj = list(self.adj)
        t.perm = list(self.perm)
        return t

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Triangulation)
            and self.n == other.n
            and self.adj == other.adj
            and self.perm == other.perm
        )

    def __hash__(self):
        return hash((self.n, tuple(self.adj), tuple(self.perm)))

    def is_complete(self) -> bool:
        return -1 not in self.adj

    def glue(self, src: FaceSlot, dst: FaceSlot, p: Perm4 | int) -> None:
        """Glue two distinct unglued slots; p maps src verts to dst verts."""
        pi = p.index if isinstance(p, Perm4) else p
        s, d = src.index(), dst.index()
        if s == d:
            raise ValueError(f"cannot glue {src} to itself")
        if not (0 <= s < 4 * self.n and 0 <= d < 4 * self.n):
            raise ValueError("slot out of range")
        if self.adj[s] != -1 or self.adj[d] != -1:
            raise ValueError(f"slot already glued: {src if self.adj[s] != -1 else dst}")
        if PERM4_IMAGES[pi][FACE_OPPOSITE[src.face]] != FACE_OPPOSITE[dst.face]:
            raise ValueError(
                f"permutation {PERM4_IMAGES[pi]} does not carry face {src.face} "
                f"to face {dst.face}"
            )
        self.adj[s] = d
        self.perm[s] = pi
        self.adj[d] = s
        self.perm[d] = PERM4_INV[pi]

    def unglue(self, slot: FaceSlot) -> None:
        s = slot.index()
        d = self.adj[s]
        if d == -1:
            raise ValueError(f"slot {slot} is not glued")
        self.adj[s] = self.adj[d] = -1
        self.perm[s] = self.perm[d] = -1

    def gluing_of(self, slot: FaceSlot) -> tuple[FaceSlot, Perm4] | None:
        s = slot.index()
        if self.adj[s] == -1:
            return None
        return FaceSlot.from_index(self.adj[s]), Perm4.from_index(self.perm[s])

    def audit(self) -> None:
        """Check the involution invariants; raises AssertionError on corruption."""
        for s in range(4 * self.n):
            d = self.adj[s]
            if d == -1:
                assert self.perm[s] == -1, f"slot {s} has perm but no partner"
                continue
            assert 0 <= d < 4 * self.n and d != s, f"slot {s} partner out of range"
            assert self.adj[d] == s, f"slots {s},{d} not mutually glued"
            assert self.perm[d] == PERM4_INV[self.perm[s]], (
                f"slots {s},{d} perms not inverse"
            )
            fs, fd = s % 4, d % 4
            assert PERM4_IMAGES[self.perm[s]][FACE_OPPOSITE[fs]] == FACE_OPPOSITE[fd]


def serialize(tri: Triangulation) -> str:
    groups = []
    for t in range(tri.n):
        toks = []
        for f in range(4):
            s = 4 * t + f
            if tri.adj[s] == -1:
                toks.append("-")
            else:
                toks.append(f"{tri.adj[s] // 4}:{tri.perm[s]}")
        groups.append(" ".join(toks))
    return f"{tri.n} ; " + " ; ".join(groups)


_TOKEN_RE = re.compile(r"^(\d+):(\d+)$")


def parse_table(text: str) -> Triangulation:
    """Parse the `.tri` line format; raises ParseError with the offending slot."""
    parts = [p.strip() for p in text.strip().split(";")]
    if len(parts) < 1 or not parts[0].isdigit():
        raise ParseError("first field must be the tetrahedron count")
    n = int(parts[0])
    if n < 1:
        raise ParseError("tetrahedron count must be positive")
    if len(parts) != n + 1:
        raise ParseError(f"expected {n} tetrahedron groups, found {len(parts) - 1}")
    tri = Triangulation(n)
    seen: dict[int, tuple[int, int]] = {}
    for t in range(n):
        toks = parts[t + 1].split()
        if len(toks) != 4:
            raise ParseError(f"tetrahedron {t}: expected 4 tokens, found {len(toks)}")
        for f, tok in enumerate(toks):
            if tok == "-":
                continue
            m = _TOKEN_RE.match(tok)
            if not m:
                raise ParseError(f"slot {t}:{f}: bad token {tok!r}")
            dt, pi = int(m.group(1)), int(m.group(2))
            if dt >= n:
                raise ParseError(f"slot {t}:{f}: destination tetrahedron {dt} out of range")
            if pi >= 24:
                raise ParseError(f"slot {t}:{f}: permutation index {pi} out of range")
            seen[4 * t + f] = (dt, pi)
    done = set()
    for s, (dt, pi) in seen.items():
        if s in done:
            continue
        images = PERM4_IMAGES[pi]
        df = FACE_OPPOSITE.index(images[FACE_OPPOSITE[s % 4]])
        d = 4 * dt + df
        if d == s:
            raise ParseError(f"slot {s // 4}:{s % 4}: glued to itself")
        if d in done:
            raise ParseError(f"slot {dt}:{df}: glued more than once")
        back = seen.get(d)
        if back is None:
            raise ParseError(f"slot {dt}:{df}: missing reverse gluing for {s // 4}:{s % 4}")
        if back != (s // 4, PERM4_INV[pi]):
            raise ParseError(f"slot {dt}:{df}: reverse gluing inconsistent")
        tri.glue(FaceSlot.from_index(s), FaceSlot.from_index(d), pi)
        done.add(s)
        done.add(d)
    return tri


_TET_NAMES = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def serialize_human(tri: Triangulation) -> str:
    """Letter/triple rendering, one row per tetrahedron, for small examples."""
    rows = []
    for t in range(tri.n):
        cells = []
        for f in range(4):
            s = 4 * t + f
            if tri.adj[s] == -1:
                cells.append("-")
                continue
            dt = tri.adj[s] // 4
            images = PERM4_IMAGES[tri.perm[s]]
            digits = "".join(str(images[v]) for v in FACE_VERTICES[f])
            name = _TET_NAMES[dt] if dt < 26 else str(dt)
            cells.append(f"{name}:{digits}")
        rows.append(f"{_TET_NAMES[t] if t < 26 else t} | " + " | ".join(cells))
    return "\n".join(rows)


_CELL_RE = re.compile(r"^([A-Za-z]|\d+)\s*:\s*(\d)(\d)(\d)$")


def from_human_rows(rows: list[list[str]]) -> Triangulation:
    """Build a triangulation from `C:013`-style cells, one 4-cell row per tet.

    The digit triple lists, in order, where the sorted vertices of the row's
    face land in the destination tetrahedron.
    """
    n = len(rows)
    tri = Triangulation(n)
    for t, row in enumerate(rows):
        if len(row) != 4:
            raise ParseError(f"row {t}: expected 4 cells")
        for f, cell in enumerate(row):
            cell = cell.strip()
            if cell == "-":
                continue
            m = _CELL_RE.match(cell)
            if not m:
                raise ParseError(f"row {t} face {f}: bad cell {cell!r}")
            who = m.group(1)
            dt = _TET_NAMES.index(who.upper()) if who.isalpha() else int(who)
            images = tuple(int(m.group(i)) for i in (2, 3, 4))
            src = FaceSlot(t, f)
            dst_face = FACE_OF_VERTICES[tuple(sorted(images))]
            p = extend_face_perm(src, dst_face, images)
            if tri.adj[src.index()] != -1:
                # reverse of an earlier cell; just check consistency
                if tri.adj[src.index()] != 4 * dt + dst_face or tri.perm[src.index()] != p.index:
                    raise ParseError(f"row {t} face {f}: inconsistent with earlier cell")
                continue
            tri.glue(src, FaceSlot(dt, dst_face), p)
    tri.audit()
    return tri


class _UnionFind:
    """Plain union-find for closures inside this module."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def vertex_classes(tri: Triangulation) -> list[list[tuple[int, int]]]:
    """Identification classes of the 4n tetrahedron vertices, sorted."""
    uf = _UnionFind(4 * tri.n)
    for s in range(4 * tri.n):
        d = tri.adj[s]
        if d == -1 or d < s:
            continue
        images = PERM4_IMAGES[tri.perm[s]]
        for v in FACE_VERTICES[s % 4]:
            uf.union(4 * (s // 4) + v, 4 * (d // 4) + images[v])
    groups: dict[int, list[tuple[int, int]]] = {}
    for i in range(4 * tri.n):
        groups.setdefault(uf.find(i), []).append((i // 4, i % 4))
    return sorted(sorted(g) for g in groups.values())


def edge_classes(tri: Triangulation) -> list[tuple[list[tuple[int, int]], bool]]:
    """Identification classes of the 6n tetrahedron edges.

    Each class comes with a flag: True when a consistent direction can be
    chosen along the whole class, False when some identification chain maps
    an edge onto itself reversed.
    """
    n6 = 6 * tri.n
    parent = list(range(n6))
    rel = [1] * n6  # orientation of element relative to its parent
    bad: set[int] = set()

    def find(x: int) -> tuple[int, int]:
        # no path compression: rel bookkeeping stays trivial
        s = 1
        while parent[x] != x:
            s *= rel[x]
            x = parent[x]
        return x, s

    for s in range(4 * tri.n):
        d = tri.adj[s]
        if d == -1 or d < s:
            continue
        images = PERM4_IMAGES[tri.perm[s]]
        t1, t2 = s // 4, d // 4
        for e in FACE_EDGES[s % 4]:
            a, b = EDGE_PAIRS[e]
            ia, ib = images[a], images[b]
            sign = 1 if ia < ib else -1
            e2 = EDGE_INDEX[(min(ia, ib), max(ia, ib))]
            x, y = 6 * t1 + e, 6 * t2 + e2
            rx, sx = find(x)
            ry, sy = find(y)
            if rx == ry:
                if sx * sy != sign:
                    bad.add(rx)
                continue
            parent[ry] = rx
            rel[ry] = sx * sign * sy
            if ry in bad:
                bad.discard(ry)
                bad.add(rx)
    groups: dict[int, list[tuple[int, int]]] = {}
    for i in range(n6):
        groups.setdefault(find(i)[0], []).append((i // 6, i % 6))
    out = [(sorted(g), root not in bad) for root, g in groups.items()]
    out.sort(key=lambda item: item[0])
    return out


def is_connected(tri: Triangulation) -> bool:
    uf = _UnionFind(tri.n)
    for s in range(4 * tri.n):
        if tri.adj[s] != -1:
            uf.union(s // 4, tri.adj[s] // 4)
    return len({uf.find(t) for t in range(tri.n)}) == 1


def is_orientable(tri: Triangulation) -> bool:
    """Whether consistent tetrahedron signs exist.

    Convention: a gluing with odd permutation keeps the sign, an even one
    flips it.  Complete and connected triangulations only.
    """
    if not tri.is_complete():
        raise ValueError("orientability needs a complete triangulation")
    if not is_connected(tri):
        raise ValueError("orientability needs a connected triangulation")
    sign = [0] * tri.n
    sign[0] = 1
    stack = [0]
    while stack:
        t = stack.pop()
        for f in range(4):
            s = 4 * t + f
            d = tri.adj[s]
            want = sign[t] * (1 if PERM4_SIGN[tri.perm[s]] == -1 else -1)
            u = d // 4
            if sign[u] == 0:
                sign[u] = want
                stack.append(u)
            elif sign[u] != want:
                return False
    return True


def relabel(tri: Triangulation, tet_map: list[int], vertex_maps: list[int]) -> Triangulation:
    """Rebuild with tetrahedron t renamed tet_map[t] and its vertices permuted
    by the Perm4 index vertex_maps[t]."""
    out = Triangulation(tri.n)
    for s in range(4 * tri.n):
        d = tri.adj[s]
        if d == -1 or d < s:
            continue
        t1, f1 = s // 4, s % 4
        t2, f2 = d // 4, d % 4
        r1, r2 = vertex_maps[t1], vertex_maps[t2]
        # new gluing permutation: r2 . old . r1^-1
        p = PERM4_MUL[PERM4_MUL[r2][tri.perm[s]]][PERM4_INV[r1]]
        nf1 = FACE_OPPOSITE.index(PERM4_IMAGES[r1][FACE_OPPOSITE[f1]])
        nf2 = FACE_OPPOSITE.index(PERM4_IMAGES[r2][FACE_OPPOSITE[f2]])
        out.glue(FaceSlot(tet_map[t1], nf1), FaceSlot(tet_map[t2], nf2), p)
    return out


def canonical_sequence(n: int, adj: list[int], perm: list[int]) -> list[int]:
    """Least relabelled serialization of a complete connected gluing table.

    Tries every (start tetrahedron, start vertex labelling) pair; labels the
    remaining tetrahedra in breadth-first discovery order, where a
    tetrahedron discovered through gluing permutation sigma inherits vertex
    map rho_src . sigma^-1 (so first-discovery gluings serialize as the
    identity).  Returns the lexicographically least of the <= 24n candidate
    serializations, two entries (partner tetrahedron, Perm4 index) per slot.
    """
    best: list[int] | None = None
    for start in range(n):
        for rho0 in range(24):
            new_of_old = [-1] * n
            old_of_new = [0] * n
            rho = [0] * n  # vertex map per old tet, Perm4 index
            new_of_old[start] = 0
            old_of_new[0] = start
            rho[start] = rho0
            found = 1
            cur: list[int] = []
            worse = False
            for ns in range(4 * n):
                nt, nf = ns // 4, ns % 4
                ot = old_of_new[nt]
                r = rho[ot]
                # face nf of the relabelled tet is face of of the original
                of = FACE_OPPOSITE.index(PERM4_IMAGES[PERM4_INV[r]][FACE_OPPOSITE[nf]])
                s = 4 * ot + of
                d = adj[s]
                dt = d // 4
                if new_of_old[dt] == -1:
                    new_of_old[dt] = found
                    old_of_new[found] = dt
                    rho[dt] = PERM4_MUL[r][PERM4_INV[perm[s]]]
                    found += 1
                q = PERM4_MUL[PERM4_MUL[rho[dt]][perm[s]]][PERM4_INV[r]]
                a, b = new_of_old[dt], q
                if best is not None:
                    i = 2 * ns
                    ba, bb = best[i], best[i + 1]
                    if (a, b) > (ba, bb):
                        worse = True
                        break
                    if (a, b) < (ba, bb):
                        best = None  # strictly better: keep building cur
                cur.append(a)
                cur.append(b)
            if worse:
                continue
            if best is None:
                best = cur
    assert best is not None
    return best


_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def sequence_signature(n: int, seq: list[int]) -> str:
    """Render a canonical sequence as the `n;digits` signature string."""
    return f"{n};" + "".join(_DIGITS[v] for v in seq)


def iso_signature(tri: Triangulation) -> str:
    """Canonical label of the isomorphism class.

    Rendered as `n;` followed by two base-36 digits per slot (partner
    tetrahedron, then gluing Perm4 index), so any two isomorphic complete
    triangulations produce the identical string.  Sizes beyond 35
    tetrahedra would need a wider digit and are rejected.
    """
    if not tri.is_complete():
        raise ValueError("signature needs a complete triangulation")
    if not is_connected(tri):
        raise ValueError("signature needs a connected triangulation")
    if tri.n >= 36:
        raise ValueError("signature digits cover at most 35 tetrahedra")
    return sequence_signature(tri.n, canonical_sequence(tri.n, tri.adj, tri.perm))


def decode_signature(sig: str) -> Triangulation:
    """Rebuild the canonical triangulation an iso_signature encodes."""
    head, _, body = sig.partition(";")
    n = int(head)
    if len(body) != 8 * n:
        raise ParseError(f"signature body must have {8 * n} digits")
    tri = Triangulation(n)
    for s in range(4 * n):
        dt = _DIGITS.index(body[2 * s])
        pi = _DIGITS.index(body[2 * s + 1])
        if tri.adj[s] != -1:
            continue
        images = PERM4_IMAGES[pi]
        df = FACE_OPPOSITE.index(images[FACE_OPPOSITE[s % 4]])
        tri.glue(FaceSlot.from_index(s), FaceSlot(dt, df), pi)
    tri.audit()
    if not tri.is_complete():
        raise ParseError("signature does not describe a complete gluing")
    return tri
