"""Position of a core object inside the Gorenstein core.

The core is equivalent to modules over a self-injective Nakayama algebra with
``g`` simples and Loewy length ``ell_core``. A core object is measured by its
length there (the number of elementary factors), and its stable
Auslander-Reiten position is read off a cylinder with rows 1..ell_core-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .algebra import NakayamaAlgebra, Uniserial
from .errors import DegenerateTube, EmptyCoreQuery, LengthOutOfRange, NotInCore, ProjectiveInCore
from .gorenstein import GorensteinCore, is_in_core


@dataclass(frozen=True)
class CorePosition:
    core_length: int
    distance: int

    @property
    def ell_v(self) -> int:
        return self.distance + 1

    def as_dict(self) -> dict:
        return {"m": self.core_length, "d": self.distance, "ell_v": self.ell_v}


def elementary_filtration(A: NakayamaAlgebra, core: GorensteinCore, M: Uniserial) -> list[Uniserial]:
    """Peel elementary quotients off the top of ``M`` until nothing is left.

    Raises NotInCore as soon as the current top has no elementary, or the
    elementary there is longer than what remains.
    """
    if core is None:
        raise EmptyCoreQuery(f"{A} has an empty Gorenstein core")
    A.check(M)
    factors = []
    U = M
    while True:
        E = core.elementary_at(U.top)
        if E is None or E.length > U.length:
            raise NotInCore(f"{M} has no elementary filtration (stuck at {U})")
        factors.append(E)
        if E.length == U.length:
            break
        U = A.submodule(U, U.length - E.length)
    stripped = tuple(v for E in factors for v in A.composition_factors(E))
    if stripped != A.composition_factors(M):
        raise NotInCore(f"elementary factors of {M} do not rebuild its composition series")
    return factors


def core_length(A: NakayamaAlgebra, core: GorensteinCore, M: Uniserial) -> int:
    if not is_in_core(A, core, M):
        raise NotInCore(f"{M} is not an object of the Gorenstein core of {A}")
    return len(elementary_filtration(A, core, M))


def distance_to_boundary(core: GorensteinCore, m: int) -> int:
    ell = core.ell_core
    if m == ell:
        raise ProjectiveInCore(f"core length {m} = ell_core: projective, no stable position")
    if not 1 <= m < ell:
        raise LengthOutOfRange(f"core length {m} outside 1..{ell - 1}")
    return min(m - 1, ell - 1 - m)


def position(A: NakayamaAlgebra, core: GorensteinCore, M: Uniserial) -> CorePosition:
    m = core_length(A, core, M)
    return CorePosition(m, distance_to_boundary(core, m))


@lru_cache(maxsize=256)
def tube_graph(g: int, ell_core: int) -> nx.DiGraph:
    if ell_core < 2:
        raise DegenerateTube(f"ell_core = {ell_core}: the stable quiver is empty")
    rows = range(1, ell_core)
    G = nx.DiGraph()
    G.add_nodes_from((q, m) for q in range(g) for m in rows)
    for q in range(g):
        for m in rows:
            if m + 1 < ell_core:
                G.add_edge((q, m), (q, m + 1))
            if m - 1 >= 1:
                G.add_edge((q, m), ((q + 1) % g, m - 1))
    return G


def stable_tube(core: GorensteinCore) -> nx.DiGraph:
    """Cylinder with ``g`` columns and rows ``1..ell_core-1`` (shared, do not mutate)."""
    return tube_graph(core.g, core.ell_core)


@lru_cache(maxsize=256)
def tube_distances(g: int, ell_core: int) -> dict[tuple[int, int], int]:
    """Breadth-first distance of every tube vertex to the two boundary rows."""
    G = tube_graph(g, ell_core)
    boundary = [v for v in G if v[1] in (1, ell_core - 1)]
    return dict(nx.multi_source_dijkstra_path_length(G.to_undirected(as_view=True), boundary))
