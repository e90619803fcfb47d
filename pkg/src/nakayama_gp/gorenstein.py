"""Gorenstein-projective modules, elementary modules and the Gorenstein core.

A non-projective uniserial is Gorenstein-projective exactly when it sits on a
cycle of the syzygy map and every projective cover met along that cycle is a
minimal projective. Splicing the covers around the cycle gives the periodic
resolution ``0 -> V -> P_{n-1} -> ... -> P_0 -> V -> 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import ZERO, NakayamaAlgebra, Uniserial
from .errors import CoreInvariantViolation, EmptyCoreQuery, ProjectiveInput


@dataclass(frozen=True)
class SyzygyOrbit:
    preperiod: tuple[Uniserial, ...]
    cycle: tuple[Uniserial, ...] = ()

    @property
    def periodic(self) -> bool:
        return bool(self.cycle)

    def members(self) -> tuple[Uniserial, ...]:
        return self.preperiod + self.cycle


@dataclass(frozen=True)
class GorensteinCore:
    algebra: NakayamaAlgebra
    elementaries: tuple[Uniserial, ...]
    x_set: frozenset[int]
    ell_core: int
    hypothesis_ok: bool
    _by_top: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._by_top.update({E.top: E for E in self.elementaries})

    @property
    def g(self) -> int:
        return len(self.elementaries)

    def elementary_at(self, top: int) -> Uniserial | None:
        return self._by_top.get(top)

    def as_dict(self) -> dict:
        return {
            "kupisch": list(self.algebra.kupisch),
            "g": self.g,
            "elementaries": [E.as_dict() for E in self.elementaries],
            "x_set": sorted(self.x_set),
            "ell_core": self.ell_core,
            "hypothesis_ok": self.hypothesis_ok,
        }


def is_minimal_projective(A: NakayamaAlgebra, v: int) -> bool:
    """True when no proper nonzero submodule of P(v) is projective."""
    c = A.c(v)
    return not any(A.c(v + c - l) == l for l in range(1, c))


def syzygy_orbit(A: NakayamaAlgebra, M: Uniserial) -> SyzygyOrbit:
    A.check(M)
    if A.is_projective(M):
        raise ProjectiveInput(f"{M} is projective; its syzygy orbit is trivial")
    seen: dict[Uniserial, int] = {}
    path: list[Uniserial] = []
    x = M
    while x is not ZERO and x not in seen:
        seen[x] = len(path)
        path.append(x)
        x = A.syzygy(x)
    if x is ZERO:
        return SyzygyOrbit(tuple(path))
    k = seen[x]
    return SyzygyOrbit(tuple(path[:k]), tuple(path[k:]))


@lru_cache(maxsize=4096)
def _periodic_status(A: NakayamaAlgebra) -> dict[Uniserial, bool]:
    # One pass over the functional graph M -> Omega M; every module gets
    # True only if it lies on a cycle whose covers are all minimal.
    minimal = [is_minimal_projective(A, v) for v in range(A.s)]
    status: dict[Uniserial, bool] = {}
    for M in A.indecomposables():
        if M in status:
            continue
        pos: dict[Uniserial, int] = {}
        path: list[Uniserial] = []
        x = M
        while x is not ZERO and x not in status and x not in pos:
            pos[x] = len(path)
            path.append(x)
            x = A.syzygy(x)
        start = pos[x] if (x is not ZERO and x in pos) else len(path)
        for y in path[:start]:
            status[y] = False
        cycle = path[start:]
        ok = all(minimal[y.top] for y in cycle)
        for y in cycle:
            status[y] = ok
    return status


def is_gorenstein_projective(A: NakayamaAlgebra, M: Uniserial) -> bool:
    A.check(M)
    if A.is_projective(M):
        return True
    return _periodic_status(A)[M]


def gorenstein_projectives(A: NakayamaAlgebra, *, include_projective: bool = False) -> list[Uniserial]:
    status = _periodic_status(A)
    out = [M for M in A.indecomposables() if status[M]]
    if include_projective:
        out += [A.projective(v) for v in range(A.s)]
        out.sort()
    return out


def elementaries(A: NakayamaAlgebra) -> list[Uniserial]:
    status = _periodic_status(A)
    found = []
    for v in range(A.s):
        for l in range(1, A.c(v)):
            if status[Uniserial(v, l)]:
                found.append(Uniserial(v, l))
                break
    return found


@lru_cache(maxsize=4096)
def build_core(A: NakayamaAlgebra) -> GorensteinCore | None:
    """Assemble the Gorenstein core, or ``None`` when no non-projective GP module exists."""
    elems = elementaries(A)
    if not elems:
        return None
    s = A.s
    total_e = sum(E.length for E in elems)
    total_p = sum(A.c(E.top) for E in elems)
    if total_e != s:
        raise CoreInvariantViolation(
            f"{A}: elementary lengths sum to {total_e}, expected s = {s}"
        )
    if total_p % s:
        raise CoreInvariantViolation(
            f"{A}: s = {s} does not divide sum of |P(E_i)| = {total_p}"
        )
    return GorensteinCore(
        algebra=A,
        elementaries=tuple(elems),
        x_set=frozenset(E.top for E in elems),
        ell_core=total_p // s,
        hypothesis_ok=all(s < A.c(E.top) for E in elems),
    )


def is_in_core(A: NakayamaAlgebra, core: GorensteinCore | None, M: Uniserial) -> bool:
    """Membership in the core via tops of M and of its syzygy."""
    if core is None:
        raise EmptyCoreQuery(f"{A} has an empty Gorenstein core")
    A.check(M)
    if M.top not in core.x_set:
        return False
    if A.is_projective(M):
        return True
    return A.syzygy(M).top in core.x_set
