"""Gorenstein-projective modules over triangular matrix algebras [[Lambda, B], [0, Gamma]].

Lambda is a cyclic Nakayama algebra. Gamma is never built: it is described
by labels for its indecomposable projectives plus two asserted facts (finite
global dimension, Gorensteinness of the triangular algebra). The bimodule B
is described by what B (x) Q(j) looks like as a projective Lambda-module for
every Gamma-projective Q(j). With finite global dimension, a Gorenstein-
projective W over Gamma is projective, so W is just a multiset of labels.

A Sigma-module (V, W, f) is given by V, W and the cokernel of the injective
map f: B (x) W -> V. The certificate is checked structurally: each projective
summand P(v) of B (x) W has to land in its own uniserial component of V as
that component's submodule of length c_v, and the resulting quotients have
to be exactly the declared cokernel.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import NakayamaAlgebra, Uniserial, parse_module, validate_kupisch
from .defring import DefRingPresentation, udr
from .errors import (
    CokerNotGorenstein,
    DecomposableV,
    EmbeddingMismatch,
    InputError,
    InvalidModule,
    LengthMismatch,
    NotGorensteinSigma,
    PreconditionUnmet,
    UnknownLabel,
)
from .gorenstein import build_core, is_gorenstein_projective


@dataclass(frozen=True)
class GammaDescriptor:
    labels: tuple[str, ...]
    gldim_finite: bool = True
    sigma_gorenstein: bool = True


@dataclass(frozen=True)
class BimoduleDescriptor:
    """For each Gamma-projective label, the vertices v of the summands P(v) of B (x) Q(label)."""

    images: Mapping[str, tuple[int, ...]]

    def validate(self, A: NakayamaAlgebra, gamma: GammaDescriptor) -> None:
        for label, vertices in self.images.items():
            if label not in gamma.labels:
                raise UnknownLabel(f"bimodule label {label!r} is not a Gamma-projective label")
            for v in vertices:
                if not 0 <= v < A.s:
                    raise InvalidModule(f"bimodule image of {label!r} names vertex {v} outside 0..{A.s - 1}")


@dataclass(frozen=True)
class TriangularGpModule:
    V: tuple[Uniserial, ...]
    W: tuple[str, ...] = ()
    coker: tuple[Uniserial, ...] = ()


@dataclass(frozen=True)
class TriangularVerdict:
    gorenstein_projective: bool
    v_gorenstein_projective: bool
    tensor_summands: tuple[int, ...]
    embedding: tuple[tuple[int, int], ...]  # (summand vertex, index of V component)

    def as_dict(self) -> dict:
        return {
            "gorenstein_projective": self.gorenstein_projective,
            "v_gorenstein_projective": self.v_gorenstein_projective,
            "tensor_summands": list(self.tensor_summands),
            "embedding": [list(p) for p in self.embedding],
        }


@dataclass(frozen=True)
class TriangularSpec:
    algebra: NakayamaAlgebra
    gamma: GammaDescriptor
    bimodule: BimoduleDescriptor
    module: TriangularGpModule

    @classmethod
    def from_dict(cls, data: dict) -> "TriangularSpec":
        try:
            A = validate_kupisch(data["lambda_kupisch"])
            g = data["gamma"]
            gamma = GammaDescriptor(
                labels=tuple(str(x) for x in g["labels"]),
                gldim_finite=bool(g.get("gldim_finite", False)),
                sigma_gorenstein=bool(g.get("sigma_gorenstein", False)),
            )
            bimod = BimoduleDescriptor(
                {str(k): tuple(int(v) for v in vs) for k, vs in data.get("bimodule", {}).items()}
            )
            mod = data["module"]
            module = TriangularGpModule(
                V=tuple(A.check(parse_module(x)) for x in mod.get("V", [])),
                W=tuple(str(x) for x in mod.get("W", [])),
                coker=tuple(A.check(parse_module(x)) for x in mod.get("coker", [])),
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise InputError(f"malformed triangular spec: {exc}") from exc
        bimod.validate(A, gamma)
        return cls(A, gamma, bimod, module)

    @classmethod
    def load(cls, path) -> "TriangularSpec":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def tensor_bw(bimod: BimoduleDescriptor, W: Sequence[str]) -> tuple[int, ...]:
    out: list[int] = []
    for label in W:
        if label not in bimod.images:
            raise UnknownLabel(f"W uses label {label!r} with no bimodule image")
        out.extend(bimod.images[label])
    return tuple(sorted(out))


def _embeddings(A: NakayamaAlgebra, summands: Sequence[int], V: Sequence[Uniserial]):
    """All injective placements of the projective summands into V components."""
    placed: list[int] = []

    def rec(k):
        if k == len(summands):
            yield tuple(placed)
            return
        v = summands[k]
        c = A.c(v)
        for idx, comp in enumerate(V):
            if idx in placed or comp.length < c:
                continue
            if A.submodule(comp, c).top != v:
                continue
            placed.append(idx)
            yield from rec(k + 1)
            placed.pop()

    yield from rec(0)


def _cokernel(A: NakayamaAlgebra, summands, V, placement) -> Counter:
    out = Counter()
    hit = dict(zip(placement, summands))
    for idx, comp in enumerate(V):
        if idx not in hit:
            out[comp] += 1
            continue
        rest = comp.length - A.c(hit[idx])
        if rest:
            out[A.quotient(comp, rest)] += 1
    return out


def zhang_gp_check(
    A: NakayamaAlgebra,
    gamma: GammaDescriptor,
    bimod: BimoduleDescriptor,
    spec: TriangularGpModule,
) -> TriangularVerdict:
    if not gamma.gldim_finite:
        raise PreconditionUnmet("Gamma must be asserted to have finite global dimension")
    for label in spec.W:
        if label not in gamma.labels:
            raise UnknownLabel(f"W uses label {label!r} unknown to Gamma")
    for M in spec.V + spec.coker:
        A.check(M)
    summands = tensor_bw(bimod, spec.W)

    len_v = sum(M.length for M in spec.V)
    len_bw = sum(A.c(v) for v in summands)
    len_coker = sum(M.length for M in spec.coker)
    if len_v != len_bw + len_coker:
        raise LengthMismatch(
            f"|V| = {len_v} but |B(x)W| + |coker f| = {len_bw} + {len_coker}"
        )

    declared = Counter(spec.coker)
    placement = None
    any_fit = False
    for candidate in _embeddings(A, summands, spec.V):
        any_fit = True
        if _cokernel(A, summands, spec.V, candidate) == declared:
            placement = candidate
            break
    if placement is None:
        if not any_fit:
            raise EmbeddingMismatch(
                f"B(x)W = {[str(A.projective(v)) for v in summands]} does not embed into V"
            )
        raise EmbeddingMismatch("no embedding of B(x)W into V has the declared cokernel")

    bad = [str(M) for M in spec.coker if not is_gorenstein_projective(A, M)]
    if bad:
        raise CokerNotGorenstein(f"cokernel components {', '.join(bad)} are not Gorenstein-projective")

    return TriangularVerdict(
        gorenstein_projective=True,
        v_gorenstein_projective=all(is_gorenstein_projective(A, M) for M in spec.V),
        tensor_summands=summands,
        embedding=tuple(zip(summands, placement)),
    )


def reduce_udr(
    A: NakayamaAlgebra,
    gamma: GammaDescriptor,
    bimod: BimoduleDescriptor,
    spec: TriangularGpModule,
) -> DefRingPresentation:
    """Deformation ring of the Sigma-module, computed as that of its Lambda-part V."""
    if not gamma.sigma_gorenstein:
        raise NotGorensteinSigma("the triangular algebra must be asserted Gorenstein")
    zhang_gp_check(A, gamma, bimod, spec)
    if len(spec.V) != 1:
        raise DecomposableV(
            f"V has {len(spec.V)} indecomposable components; the ring formula needs exactly one"
        )
    return udr(A, build_core(A), spec.V[0])
