"""Universal deformation rings of Gorenstein-projective modules over Nakayama algebras.

For a non-projective core object V the ring is k[[t1..tn]]/J_n(m_V), where
J_n(a) is generated by the entries of the a-th power of the companion-type
matrix N_n and (n, m_V) come from Euclidean division of the boundary
distance and the core Loewy length by the number g of elementaries.
Projective modules have ring k.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .algebra import NakayamaAlgebra, Uniserial
from .core_equiv import position
from .errors import EmptyCore, HypothesisViolated, NonPositiveDimension, NotGorensteinProjective
from .gorenstein import GorensteinCore, build_core, is_gorenstein_projective
from .poly import Matrix, SparsePoly, matpow


def matrix_n(n: int) -> Matrix:
    if n < 1:
        raise NonPositiveDimension(f"N_n needs n >= 1, got {n}")
    zero, one = SparsePoly.zero(n), SparsePoly.one(n)
    rows = []
    for i in range(n):
        row = [zero] * n
        if i:
            row[i - 1] = one
        row[n - 1] = SparsePoly.var(n, n - i)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=512)
def jn_generators(n: int, a: int) -> tuple[SparsePoly, ...]:
    """Distinct nonzero entries of N_n^a, canonically sorted. Empty for n = 0."""
    if n < 0 or a < 0:
        raise ValueError("n and a must be nonnegative")
    if n == 0:
        return ()
    power = matpow(matrix_n(n), a)
    entries = {p for row in power for p in row if p}
    return tuple(sorted(entries, key=SparsePoly.sort_key))


@dataclass(frozen=True)
class DefRingPresentation:
    n: int
    m: int
    generators: tuple[SparsePoly, ...] = ()

    @classmethod
    def from_exponents(cls, n: int, m: int) -> "DefRingPresentation":
        return cls(n, m, jn_generators(n, m))

    @property
    def display(self) -> str:
        if self.n == 0:
            return "k"
        variables = ",".join(f"t{i}" for i in range(1, self.n + 1))
        gens = ", ".join(str(p) for p in self.generators)
        return f"k[[{variables}]]/({gens})"

    def __str__(self):
        return self.display

    def as_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "generators": [p.to_json() for p in self.generators]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "DefRingPresentation":
        data = json.loads(text)
        n = data["n"]
        gens = tuple(SparsePoly.from_json(n, g) for g in data["generators"])
        return cls(n, data["m"], gens)


PROJECTIVE_RING = DefRingPresentation(0, 0, ())


def exponents(core: GorensteinCore, ell_v: int) -> tuple[int, int]:
    """(n, m_V) from ell_C = mu*g + ell' and ell_V = n*g + i."""
    g = core.g
    mu, ell_prime = divmod(core.ell_core, g)
    n, i = divmod(ell_v, g)
    m_v = mu if i <= ell_prime else mu - 1
    return n, m_v


def udr(A: NakayamaAlgebra, core: GorensteinCore | None, M: Uniserial) -> DefRingPresentation:
    """Universal deformation ring of the indecomposable ``M``.

    Projective modules give ``k``. Anything outside the Gorenstein-projective
    class, or an algebra with some ``s >= |P(E_i)|``, is refused.
    """
    A.check(M)
    if A.is_projective(M):
        return PROJECTIVE_RING
    if not is_gorenstein_projective(A, M):
        raise NotGorensteinProjective(f"{M} is not Gorenstein-projective over {A}")
    if core is None:
        core = build_core(A)
        if core is None:
            raise EmptyCore(f"{A} has an empty Gorenstein core")
    if not core.hypothesis_ok:
        bad = [str(E) for E in core.elementaries if A.s >= A.c(E.top)]
        raise HypothesisViolated(
            f"s = {A.s} >= |P(E)| for elementaries {', '.join(bad)}; no formula available"
        )
    pos = position(A, core, M)
    n, m_v = exponents(core, pos.ell_v)
    return DefRingPresentation.from_exponents(n, m_v)
