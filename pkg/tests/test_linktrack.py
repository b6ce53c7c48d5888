"""Incremental link tracking against the from-scratch link builder."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkcensus.linktrack import GlueOutcome, LinkState, link_edge_id
from linkcensus.perms import GLUING_PERMS, LINK_EDGE_POS
from oracles import linktrack_fuzz_trial


def test_link_edge_id_layout():
    seen = set()
    for t in range(2):
        for v in range(4):
            for f, pos in LINK_EDGE_POS[v].items():
                e = link_edge_id(t, v, f)
                assert e == 12 * t + 3 * v + pos
                seen.add(e)
    assert seen == set(range(24))


def test_fresh_state_counts():
    ls = LinkState(3, level=2, seed=0)
    assert ls.edge_class_count() == 18
    assert ls.link_piece_count() == 12
    assert ls.boundary_edges == 36
    assert ls.cycle_count == 12
    assert len(ls.boundary_cycles()) == 12
    # each corner triangle starts as its own 3-cycle
    assert all(len(walk) == 3 for walk in ls.boundary_cycles())


def test_level_1_skips_cycle_tracking():
    ls = LinkState(2, level=1)
    assert ls.cycles is None
    out, tok = ls.glue_faces(0, 0, 1, 0, GLUING_PERMS[0][0][0])
    assert out is GlueOutcome.OK and tok is not None
    assert ls.boundary_edges == 18
    ls.unglue_faces(tok)
    assert ls.boundary_edges == 24


def test_level_validation():
    with pytest.raises(ValueError):
        LinkState(2, level=0)
    with pytest.raises(ValueError):
        LinkState(2, level=3)


def test_rejected_glue_leaves_state_untouched():
    """Branch 2 of the 0-to-1 gluing maps edge 01 onto itself reversed."""
    ls = LinkState(1, level=2, seed=1)
    before = (ls.edge_cls.components, ls.boundary_edges, ls.cycle_count,
              ls.cycles.structure_dump())
    out, tok = ls.glue_faces(0, 0, 0, 1, GLUING_PERMS[0][1][2])
    assert tok is None
    assert out is GlueOutcome.BAD_EDGE
    after = (ls.edge_cls.components, ls.boundary_edges, ls.cycle_count,
             ls.cycles.structure_dump())
    assert before == after


def test_token_discipline():
    ls = LinkState(2, level=2, seed=7)
    out1, tok1 = ls.glue_faces(0, 0, 1, 0, GLUING_PERMS[0][0][0])
    assert out1 is GlueOutcome.OK
    out2, tok2 = ls.glue_faces(0, 1, 1, 1, GLUING_PERMS[1][1][0])
    assert out2 is GlueOutcome.OK
    with pytest.raises(RuntimeError):
        ls.unglue_faces(tok1)  # out of order
    ls.unglue_faces(tok2)
    ls.unglue_faces(tok1)
    with pytest.raises(RuntimeError):
        ls.unglue_faces(tok1)  # single use


def test_fuzz_against_link_builder():
    total = 0
    for trial in range(120):
        total += linktrack_fuzz_trial(trial)
    assert total >= 2_000


@given(st.integers(0, 2**31))
@settings(max_examples=25, deadline=None)
def test_property_fuzz(seed):
    linktrack_fuzz_trial(seed, ops=30)
