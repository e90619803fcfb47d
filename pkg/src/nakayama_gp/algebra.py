"""Cyclic Nakayama algebras given by Kupisch series, and their uniserial modules.

Orientation: arrows go v -> v+1, so the radical layers of the indecomposable
projective P(v) are the simples at v, v+1, ..., v + c_v - 1 (indices mod s).
Vertices are 0-indexed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EmptySeries,
    InputError,
    InvalidModule,
    LengthOutOfRange,
    NotAdmissible,
    SimpleProjectivePresent,
)


class _Zero:
    """The zero module. Kept apart from Uniserial so that ``length >= 1`` always holds."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


@dataclass(frozen=True, order=True)
class Uniserial:
    """Indecomposable module M(top, length)."""

    top: int
    length: int

    def __str__(self):
        return f"M({self.top},{self.length})"

    def as_dict(self) -> dict:
        return {"top": self.top, "len": self.length}


def parse_module(spec) -> Uniserial:
    """Accept ``"v,l"``, ``{"top": v, "len": l}`` or a ``(v, l)`` pair."""
    try:
        if isinstance(spec, Uniserial):
            return spec
        if isinstance(spec, str):
            top, length = (int(p) for p in spec.split(","))
        elif isinstance(spec, dict):
            top, length = int(spec["top"]), int(spec["len"])
        else:
            top, length = (int(p) for p in spec)
    except (ValueError, KeyError, TypeError) as exc:
        raise InvalidModule(f"cannot parse module {spec!r}") from exc
    return Uniserial(top, length)


@dataclass(frozen=True)
class NakayamaAlgebra:
    kupisch: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kupisch", tuple(int(c) for c in self.kupisch))
        if not self.kupisch:
            raise EmptySeries("Kupisch series must be nonempty")
        for v, c in enumerate(self.kupisch):
            if c <= 1:
                raise SimpleProjectivePresent(
                    f"c_{v} = {c}: the projective at vertex {v} is simple or zero"
                )
        s = len(self.kupisch)
        for v, c in enumerate(self.kupisch):
            nxt = self.kupisch[(v + 1) % s]
            if nxt < c - 1:
                raise NotAdmissible(
                    f"c_{(v + 1) % s} = {nxt} < c_{v} - 1 = {c - 1}"
                )

    @property
    def s(self) -> int:
        return len(self.kupisch)

    def __str__(self):
        return "(" + ",".join(map(str, self.kupisch)) + ")"

    def c(self, v: int) -> int:
        return self.kupisch[v % self.s]

    def module(self, top: int, length: int) -> Uniserial:
        return self.check(Uniserial(top, length))

    def check(self, M: Uniserial) -> Uniserial:
        if not 0 <= M.top < self.s:
            raise InvalidModule(f"{M}: vertex {M.top} outside 0..{self.s - 1}")
        if not 1 <= M.length <= self.c(M.top):
            raise InvalidModule(
                f"{M}: length must lie in 1..{self.c(M.top)} at vertex {M.top}"
            )
        return M

    def composition_factors(self, M: Uniserial) -> tuple[int, ...]:
        """Simple tops of the radical layers, top first and socle last."""
        return tuple((M.top + k) % self.s for k in range(M.length))

    def socle(self, M: Uniserial) -> int:
        return (M.top + M.length - 1) % self.s

    def is_projective(self, M: Uniserial) -> bool:
        return M.length == self.c(M.top)

    def projective(self, v: int) -> Uniserial:
        v %= self.s
        return Uniserial(v, self.kupisch[v])

    def projective_cover(self, M: Uniserial) -> Uniserial:
        return self.projective(M.top)

    def syzygy(self, M: Uniserial):
        """Kernel of the projective cover; ``ZERO`` for projective input."""
        c = self.kupisch[M.top]
        if M.length == c:
            return ZERO
        return Uniserial((M.top + M.length) % self.s, c - M.length)

    def quotient(self, M: Uniserial, length: int) -> Uniserial:
        if not 0 < length <= M.length:
            raise LengthOutOfRange(f"quotient of {M} of length {length}")
        return Uniserial(M.top, length)

    def submodule(self, M: Uniserial, length: int) -> Uniserial:
        if not 0 < length <= M.length:
            raise LengthOutOfRange(f"submodule of {M} of length {length}")
        return Uniserial((M.top + M.length - length) % self.s, length)

    def indecomposables(self) -> list[Uniserial]:
        return [
            Uniserial(v, l)
            for v, c in enumerate(self.kupisch)
            for l in range(1, c + 1)
        ]

    def rotate(self, k: int) -> "NakayamaAlgebra":
        """Relabel vertex v as v - k (an isomorphic algebra)."""
        k %= self.s
        return NakayamaAlgebra(self.kupisch[k:] + self.kupisch[:k])


def validate_kupisch(series: Iterable[int]) -> NakayamaAlgebra:
    return NakayamaAlgebra(tuple(series))


def parse_kupisch(text: str) -> NakayamaAlgebra:
    try:
        series = [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise InputError(f"cannot parse Kupisch series {text!r}") from exc
    return validate_kupisch(series)


def load_algebra(path) -> tuple[NakayamaAlgebra, dict]:
    """Read ``{"kupisch": [...]}`` from a JSON file; returns the algebra and the raw payload."""
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if not isinstance(payload, dict) or "kupisch" not in payload:
        raise EmptySeries(f"{path}: expected an object with a 'kupisch' list")
    return validate_kupisch(payload["kupisch"]), payload


def is_admissible(series: Sequence[int]) -> bool:
    s = len(series)
    return s > 0 and all(c >= 2 for c in series) and all(
        series[(v + 1) % s] >= series[v] - 1 for v in range(s)
    )
