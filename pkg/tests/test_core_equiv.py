from collections import deque
from types import SimpleNamespace

import pytest
from hypothesis import given, strategies as st

from nakayama_gp.algebra import NakayamaAlgebra, Uniserial
from nakayama_gp.core_equiv import (
    core_length,
    distance_to_boundary,
    elementary_filtration,
    position,
    stable_tube,
    tube_distances,
)
from nakayama_gp.errors import DegenerateTube, NotInCore, ProjectiveInCore
from nakayama_gp.gorenstein import build_core, gorenstein_projectives

from strategies import algebras


def fake_core(g, ell):
    return SimpleNamespace(g=g, ell_core=ell)


def bfs_rows(g, ell):
    """Plain BFS on the cylinder, written out by hand."""
    nodes = [(q, m) for q in range(g) for m in range(1, ell)]
    nbrs = {v: set() for v in nodes}
    for q, m in nodes:
        for w in ((q, m + 1), ((q + 1) % g, m - 1)):
            if w in nbrs:
                nbrs[(q, m)].add(w)
                nbrs[w].add((q, m))
    dist = {v: 0 for v in nodes if v[1] in (1, ell - 1)}
    todo = deque(dist)
    while todo:
        v = todo.popleft()
        for w in nbrs[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                todo.append(w)
    return dist


class TestCoreLength:
    def test_45(self, a45):
        core = build_core(a45)
        assert core_length(a45, core, Uniserial(0, 2)) == 1
        assert core_length(a45, core, Uniserial(0, 4)) == 2
        assert elementary_filtration(a45, core, Uniserial(0, 4)) == [Uniserial(0, 2)] * 2

    def test_constant(self):
        A = NakayamaAlgebra((5, 5, 5))
        core = build_core(A)
        for M in A.indecomposables():
            assert core_length(A, core, M) == M.length

    def test_not_in_core(self, a45):
        core = build_core(a45)
        for M in (Uniserial(0, 1), Uniserial(1, 3), Uniserial(0, 3)):
            with pytest.raises(NotInCore):
                core_length(a45, core, M)

    def test_stripping_rejects_independently(self, a45):
        # bypass the top test: the strip itself must refuse M(0,3)
        core = build_core(a45)
        with pytest.raises(NotInCore):
            elementary_filtration(a45, core, Uniserial(0, 3))


class TestDistance:
    @pytest.mark.parametrize("ell, m, d", [(2, 1, 0), (3, 1, 0), (3, 2, 0), (7, 3, 2)])
    def test_values(self, ell, m, d):
        assert distance_to_boundary(fake_core(1, ell), m) == d

    def test_projective(self):
        with pytest.raises(ProjectiveInCore):
            distance_to_boundary(fake_core(1, 3), 3)

    def test_position_golden(self, a45, a3):
        pos = position(a45, build_core(a45), Uniserial(0, 2))
        assert (pos.core_length, pos.distance, pos.ell_v) == (1, 0, 1)
        core3 = build_core(a3)
        assert position(a3, core3, Uniserial(0, 1)).distance == 0
        assert position(a3, core3, Uniserial(0, 2)).distance == 0


class TestTube:
    def test_single_vertex(self):
        G = stable_tube(fake_core(1, 2))
        assert list(G.nodes) == [(0, 1)]
        assert tube_distances(1, 2) == {(0, 1): 0}

    def test_column(self):
        assert tube_distances(1, 4)[(0, 2)] == 1
        assert stable_tube(fake_core(1, 4)).number_of_nodes() == 3

    def test_two_columns(self):
        G = stable_tube(fake_core(2, 4))
        assert G.number_of_nodes() == 6
        d = tube_distances(2, 4)
        assert d[(0, 2)] == d[(1, 2)] == 1

    def test_edges(self):
        G = stable_tube(fake_core(3, 5))
        assert G.has_edge((0, 2), (0, 3)) and G.has_edge((2, 2), (0, 1))
        assert not G.has_edge((0, 4), (0, 5))

    def test_degenerate(self):
        with pytest.raises(DegenerateTube):
            stable_tube(fake_core(1, 1))

    @given(st.integers(1, 6), st.integers(2, 14))
    def test_bfs_matches_closed_form(self, g, ell):
        dist = tube_distances(g, ell)
        assert dist == bfs_rows(g, ell)
        for (q, m), d in dist.items():
            assert d == distance_to_boundary(fake_core(g, ell), m)


@given(algebras())
def test_syzygy_reflection(A):
    core = build_core(A)
    if core is None:
        return
    for E in core.elementaries:
        assert core_length(A, core, A.projective(E.top)) == core.ell_core
    for M in gorenstein_projectives(A):
        m = core_length(A, core, M)
        assert 1 <= m <= core.ell_core - 1
        assert core_length(A, core, A.syzygy(M)) == core.ell_core - m
        assert position(A, core, M).distance == position(A, core, A.syzygy(M)).distance
        factors = elementary_filtration(A, core, M)
        assert tuple(v for E in factors for v in A.composition_factors(E)) == A.composition_factors(M)
