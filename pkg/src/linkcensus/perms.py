"""Permutations of 3 and 4 elements plus tetrahedron face conventions.

Everything downstream (gluing tables, link tracking, signatures) works with
Perm4 values as plain integer indices into the tables below, so the tables
are the real interface; the Perm3/Perm4 classes are thin wrappers for code
that wants validation and nice reprs.

Conventions fixed here and relied on everywhere else:

  * Perm4 index = lexicographic rank of its image tuple, so index 0 is the
    identity and index 1 is (0,1,3,2).
  * Faces of a tetrahedron are numbered by their sorted vertex triples in
    lexicographic order: face 0 = 012, 1 = 013, 2 = 023, 3 = 123.  Face f
    is opposite vertex 3-f.
  * Edges of a tetrahedron are numbered by sorted vertex pairs in
    lexicographic order: 01, 02, 03, 12, 13, 23.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

PERM3_IMAGES: tuple[tuple[int, int, int], ...] = tuple(
    itertools.permutations(range(3))
)

PERM4_IMAGES: tuple[tuple[int, int, int, int], ...] = tuple(
    itertools.permutations(range(4))
)

PERM4_INDEX: dict[tuple[int, int, int, int], int] = {
    images: i for i, images in enumerate(PERM4_IMAGES)
}


def _parity(images) -> int:
    inv = sum(
        1
        for i in range(len(images))
        for j in range(i + 1, len(images))
        if images[i] > images[j]
    )
    return inv & 1


# PERM4_SIGN[p] is +1 for even permutations, -1 for odd ones.
PERM4_SIGN: tuple[int, ...] = tuple(
    1 if _parity(im) == 0 else -1 for im in PERM4_IMAGES
)

# PERM4_MUL[p][q] = index of the composition "apply q, then p".
PERM4_MUL: tuple[tuple[int, ...], ...] = tuple(
    tuple(
        PERM4_INDEX[tuple(PERM4_IMAGES[p][PERM4_IMAGES[q][v]] for v in range(4))]
        for q in range(24)
    )
    for p in range(24)
)

PERM4_INV: tuple[int, ...] = tuple(
    next(q for q in range(24) if PERM4_MUL[p][q] == 0) for p in range(24)
)

FACE_VERTICES: tuple[tuple[int, int, int], ...] = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
FACE_OPPOSITE: tuple[int, ...] = (3, 2, 1, 0)
FACE_OF_VERTICES: dict[tuple[int, int, int], int] = {
    verts: f for f, verts in enumerate(FACE_VERTICES)
}

EDGE_PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX: dict[tuple[int, int], int] = {pair: e for e, pair in enumerate(EDGE_PAIRS)}

# The three edges lying inside each face, as indices into EDGE_PAIRS.
FACE_EDGES: tuple[tuple[int, int, int], ...] = tuple(
    tuple(
        EDGE_INDEX[pair]
        for pair in itertools.combinations(FACE_VERTICES[f], 2)
    )
    for f in range(4)
)

# The three faces containing each vertex, in increasing face order.
FACES_AT_VERTEX: tuple[tuple[int, int, int], ...] = tuple(
    tuple(f for f in range(4) if v in FACE_VERTICES[f]) for v in range(4)
)

# Link-edge slot within a corner triangle: vertex v's triangle has one edge
# per face at v, numbered by that face's position in FACES_AT_VERTEX[v].
LINK_EDGE_POS: tuple[dict[int, int], ...] = tuple(
    {f: i for i, f in enumerate(FACES_AT_VERTEX[v])} for v in range(4)
)


def _along(v: int, f: int) -> int:
    # The corner triangle at v is traversed X -> Y -> Z over the corners on
    # the tet edges toward the other three vertices in increasing order; the
    # edge in face f runs low-to-high between the two corners it joins, so
    # the traversal opposes it exactly when f omits the middle vertex.
    others = [u for u in range(4) if u != v]
    return -1 if FACE_OPPOSITE[f] == others[1] else 1


# LINK_ALONG[v][f]: +1 when the canonical traversal of v's corner triangle
# runs along the arrow of its edge in face f, -1 against (0 for f not at v).
LINK_ALONG: tuple[tuple[int, ...], ...] = tuple(
    tuple(_along(v, f) if v in FACE_VERTICES[f] else 0 for f in range(4))
    for v in range(4)
)


def apply_perm4(p: int, v: int) -> int:
    return PERM4_IMAGES[p][v]


def compose(p: int, q: int) -> int:
    """Index of the permutation sending v to p(q(v))."""
    return PERM4_MUL[p][q]


def invert(p: int) -> int:
    return PERM4_INV[p]


@dataclass(frozen=True)
class FaceSlot:
    """One of the 4n gluing slots: face `face` of tetrahedron `tet`."""

    tet: int
    face: int

    def __post_init__(self):
        if self.tet < 0:
            raise ValueError(f"negative tetrahedron index {self.tet}")
        if not 0 <= self.face <= 3:
            raise ValueError(f"face index {self.face} out of range 0..3")

    def index(self) -> int:
        return 4 * self.tet + self.face

    @staticmethod
    def from_index(i: int) -> "FaceSlot":
        return FaceSlot(i // 4, i % 4)


@dataclass(frozen=True)
class Perm3:
    """A permutation of {0,1,2}; `images[i]` is the image of i."""

    images: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [0, 1, 2]:
            raise ValueError(f"not a permutation of 0..2: {self.images}")

    @property
    def index(self) -> int:
        return PERM3_IMAGES.index(self.images)

    @staticmethod
    def from_index(i: int) -> "Perm3":
        return Perm3(PERM3_IMAGES[i])

    def on_face(self, face: int) -> tuple[int, int, int]:
        """Realize this abstract permutation as destination vertices of `face`."""
        fv = FACE_VERTICES[face]
        return tuple(fv[i] for i in self.images)


@dataclass(frozen=True)
class Perm4:
    """A permutation of the four tetrahedron vertices."""

    images: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [0, 1, 2, 3]:
            raise ValueError(f"not a permutation of 0..3: {self.images}")

    @property
    def index(self) -> int:
        return PERM4_INDEX[self.images]

    @property
    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return 0 if PERM4_SIGN[self.index] == 1 else 1

    @staticmethod
    def from_index(i: int) -> "Perm4":
        return Perm4(PERM4_IMAGES[i])

    def __call__(self, v: int) -> int:
        return self.images[v]

    def compose(self, other: "Perm4") -> "Perm4":
        """self after other: (self.compose(other))(v) == self(other(v))."""
        return Perm4.from_index(PERM4_MUL[self.index][other.index])

    def inverse(self) -> "Perm4":
        return Perm4.from_index(PERM4_INV[self.index])


def extend_face_perm(src: FaceSlot, dst_face: int, images) -> Perm4:
    """Extend a face correspondence to a Perm4.

    `images` gives, in order, the destination vertices of the three sorted
    vertices of the source face; they must be exactly the vertices of
    `dst_face` in some order.  The omitted vertex maps to the omitted
    vertex.  A Perm3 is also accepted and is realized on `dst_face` first.
    """
    if isinstance(images, Perm3):
        images = images.on_face(dst_face)
    images = tuple(images)
    if len(images) != 3 or len(set(images)) != 3:
        raise ValueError(f"invalid image triple {images}")
    if sorted(images) != list(FACE_VERTICES[dst_face]):
        raise ValueError(
            f"image vertices {images} are not the vertices of face {dst_face}"
        )
    full = [None] * 4
    for v, w in zip(FACE_VERTICES[src.face], images):
        full[v] = w
    full[FACE_OPPOSITE[src.face]] = FACE_OPPOSITE[dst_face]
    return Perm4(tuple(full))


# GLUING_PERMS[f1][f2][k] = Perm4 index gluing face f1 to face f2 via the
# k-th Perm3, the six search branches in canonical order.
GLUING_PERMS: tuple[tuple[tuple[int, ...], ...], ...] = tuple(
    tuple(
        tuple(
            extend_face_perm(FaceSlot(0, f1), f2, Perm3.from_index(k)).index
            for k in range(6)
        )
        for f2 in range(4)
    )
    for f1 in range(4)
)
