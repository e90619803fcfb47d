"""Sparse multivariate polynomials with integer coefficients, and matrices of them."""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class SparsePoly:
    """Polynomial in t1..tn stored as ``{exponent vector: nonzero int coefficient}``."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong arity for {nvars} variables")
            acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def var(cls, nvars: int, i: int) -> "SparsePoly":
        """The variable t_i (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"t{i} is not among t1..t{nvars}")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, int):
            return self == SparsePoly(self.nvars, {(0,) * self.nvars: other})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return SparsePoly(self.nvars, {(0,) * self.nvars: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def monomials(self) -> list[tuple[Exponent, int]]:
        """Terms in graded-lex order, largest first (t1 > t2 > ... > tn)."""
        return sorted(self._terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def degrees(self) -> list[int]:
        return sorted({sum(e) for e in self._terms})

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def sort_key(self):
        # degree first, then number of terms, then the larger leading monomials first
        return (
            self.total_degree(),
            len(self._terms),
            tuple(tuple(-x for x in (sum(e),) + e) for e, _ in self.monomials()),
        )

    def to_json(self) -> list:
        return [[list(e), c] for e, c in self.monomials()]

    @classmethod
    def from_json(cls, nvars: int, data: Sequence) -> "SparsePoly":
        return cls(nvars, [(tuple(e), int(c)) for e, c in data])

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exp, coeff in self.monomials():
            factors = [
                f"t{i}" if k == 1 else f"t{i}^{k}"
                for i, k in enumerate(exp, start=1)
                if k
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {self._terms!r})"


Matrix = tuple[tuple[SparsePoly, ...], ...]


def identity(size: int, nvars: int) -> Matrix:
    one, zero = SparsePoly.one(nvars), SparsePoly.zero(nvars)
    return tuple(tuple(one if i == j else zero for j in range(size)) for i in range(size))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    nvars = a[0][0].nvars
    rows = []
    for i in range(n):
        row = []
        for j in range(m):
            acc: dict[Exponent, int] = {}
            for l in range(k):
                x, y = a[i][l], b[l][j]
                if not x or not y:
                    continue
                for e1, c1 in x._terms.items():
                    for e2, c2 in y._terms.items():
                        e = tuple(p + q for p, q in zip(e1, e2))
                        acc[e] = acc.get(e, 0) + c1 * c2
            row.append(SparsePoly(nvars, acc))
        rows.append(tuple(row))
    return tuple(rows)


def matpow(a: Matrix, power: int) -> Matrix:
    if power < 0:
        raise ValueError("negative matrix power")
    result = identity(len(a), a[0][0].nvars)
    base = a
    while power:
        if power & 1:
            result = matmul(result, base)
        power >>= 1
        if power:
            base = matmul(base, base)
    return result
