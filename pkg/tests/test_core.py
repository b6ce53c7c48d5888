"""Triangulation table, text formats, and isomorphism signatures."""

import random

import pytest

from linkcensus.core import (
    ParseError,
    Triangulation,
    canonical_sequence,
    decode_signature,
    edge_classes,
    from_human_rows,
    is_connected,
    is_orientable,
    iso_signature,
    parse_table,
    relabel,
    sequence_signature,
    serialize,
    serialize_human,
    vertex_classes,
)
from linkcensus.perms import GLUING_PERMS, PERM4_INV, FaceSlot
from oracles import random_pairing


def random_complete(rng: random.Random, n: int) -> Triangulation:
    """A connected complete triangulation with random gluing permutations."""
    while True:
        fp = random_pairing(n, rng)
        tri = Triangulation(n)
        for s, d in enumerate(fp):
            if s < d:
                pi = GLUING_PERMS[s % 4][d % 4][rng.randrange(6)]
                tri.glue(FaceSlot.from_index(s), FaceSlot.from_index(d), pi)
        if is_connected(tri):
            tri.audit()
            return tri


def test_glue_unglue_roundtrip():
    tri = Triangulation(2)
    assert not tri.is_complete()
    tri.glue(FaceSlot(0, 0), FaceSlot(1, 2), GLUING_PERMS[0][2][3])
    got = tri.gluing_of(FaceSlot(0, 0))
    assert got is not None
    dst, p = got
    assert dst == FaceSlot(1, 2)
    assert p.index == GLUING_PERMS[0][2][3]
    back = tri.gluing_of(FaceSlot(1, 2))
    assert back[0] == FaceSlot(0, 0)
    assert back[1].index == PERM4_INV[GLUING_PERMS[0][2][3]]
    tri.audit()
    tri.unglue(FaceSlot(1, 2))  # either end works
    assert tri.gluing_of(FaceSlot(0, 0)) is None
    assert tri.adj == [-1] * 8


def test_glue_validation():
    tri = Triangulation(2)
    with pytest.raises(ValueError):
        Triangulation(0)
    with pytest.raises(ValueError):
        tri.glue(FaceSlot(0, 0), FaceSlot(0, 0), 0)
    with pytest.raises(ValueError):
        tri.glue(FaceSlot(0, 0), FaceSlot(2, 0), 0)
    with pytest.raises(ValueError):
        # identity does not carry face 0 to face 1
        tri.glue(FaceSlot(0, 0), FaceSlot(0, 1), 0)
    tri.glue(FaceSlot(0, 0), FaceSlot(1, 0), 0)
    with pytest.raises(ValueError):
        tri.glue(FaceSlot(0, 0), FaceSlot(1, 1), GLUING_PERMS[0][1][0])
    with pytest.raises(ValueError):
        tri.unglue(FaceSlot(0, 2))


def test_copy_and_equality():
    rng = random.Random(1)
    tri = random_complete(rng, 2)
    dup = tri.copy()
    assert dup == tri and hash(dup) == hash(tri)
    dup.unglue(FaceSlot(0, 0))
    assert dup != tri


def test_serialize_parse_roundtrip():
    rng = random.Random(2)
    for n in (1, 2, 3):
        for _ in range(5):
            tri = random_complete(rng, n)
            assert parse_table(serialize(tri)) == tri
    # partial tables round trip too
    tri = Triangulation(2)
    tri.glue(FaceSlot(0, 1), FaceSlot(1, 3), GLUING_PERMS[1][3][2])
    assert parse_table(serialize(tri)) == tri


@pytest.mark.parametrize("text,message", [
    ("x ; - - - -", "first field"),
    ("0 ;", "must be positive"),
    ("2 ; - - - -", "expected 2 tetrahedron groups"),
    ("1 ; - - -", "expected 4 tokens"),
    ("1 ; 0:zz - - -", "bad token"),
    ("1 ; 3:0 - - - ", "out of range"),
    ("1 ; 0:99 - - -", "permutation index 99"),
    ("1 ; 0:2 - - -", "glued to itself"),
    ("1 ; 0:3 0:2 0:4 -", "glued more than once"),
    ("2 ; 1:1 - - - ; - - - -", "missing reverse gluing"),
    ("2 ; 1:1 - - - ; - 0:9 - -", "reverse gluing inconsistent"),
])
def test_parse_table_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_table(text)


def test_human_format_roundtrip():
    rng = random.Random(3)
    tri = random_complete(rng, 3)
    rows = [line.split("|")[1:] for line in serialize_human(tri).splitlines()]
    rows = [[cell.strip() for cell in row] for row in rows]
    assert from_human_rows(rows) == tri


def test_human_format_errors():
    with pytest.raises(ParseError, match="expected 4 cells"):
        from_human_rows([["A:012", "-", "-"]])
    with pytest.raises(ParseError, match="bad cell"):
        from_human_rows([["A:01", "-", "-", "-"]])
    with pytest.raises(ParseError, match="inconsistent"):
        from_human_rows([
            ["B:012", "-", "-", "-"],
            ["A:013", "-", "-", "-"],
        ])


def test_class_counts_single_gluing():
    tri = Triangulation(2)
    tri.glue(FaceSlot(0, 0), FaceSlot(1, 0), 0)
    # identity gluing of face 012 merges three corner pairs and three edges
    assert len(vertex_classes(tri)) == 5
    classes = edge_classes(tri)
    assert len(classes) == 9
    assert all(directable for _, directable in classes)
    assert sum(len(members) for members, _ in classes) == 12


def test_connectivity_and_orientability_guards():
    tri = Triangulation(2)
    assert not is_connected(tri)
    with pytest.raises(ValueError, match="complete"):
        is_orientable(tri)
    # complete but disconnected: two tets glued only to themselves
    tri2 = Triangulation(2)
    for t in range(2):
        tri2.glue(FaceSlot(t, 0), FaceSlot(t, 1), GLUING_PERMS[0][1][0])
        tri2.glue(FaceSlot(t, 2), FaceSlot(t, 3), GLUING_PERMS[2][3][0])
    assert tri2.is_complete() and not is_connected(tri2)
    with pytest.raises(ValueError, match="connected"):
        is_orientable(tri2)
    with pytest.raises(ValueError, match="connected"):
        iso_signature(tri2)
    with pytest.raises(ValueError, match="complete"):
        iso_signature(tri)


def test_signature_shape():
    rng = random.Random(4)
    tri = random_complete(rng, 3)
    sig = iso_signature(tri)
    head, _, body = sig.partition(";")
    assert head == "3"
    assert len(body) == 24  # 8 base-36 digits per tetrahedron
    assert sig == sequence_signature(3, canonical_sequence(3, tri.adj, tri.perm))


def test_signature_relabel_invariance():
    rng = random.Random(5)
    for n in (1, 2, 3):
        for _ in range(4):
            tri = random_complete(rng, n)
            sig = iso_signature(tri)
            for _ in range(25):
                tet_map = list(range(n))
                rng.shuffle(tet_map)
                vertex_maps = [rng.randrange(24) for _ in range(n)]
                assert iso_signature(relabel(tri, tet_map, vertex_maps)) == sig


def test_decode_signature_is_inverse():
    rng = random.Random(6)
    for n in (1, 2, 3):
        for _ in range(6):
            tri = random_complete(rng, n)
            sig = iso_signature(tri)
            back = decode_signature(sig)
            back.audit()
            assert back.is_complete()
            assert iso_signature(back) == sig


def test_decode_signature_errors():
    with pytest.raises(ParseError):
        decode_signature("1;0000")  # truncated body
    with pytest.raises(ValueError):
        decode_signature("not a signature")
