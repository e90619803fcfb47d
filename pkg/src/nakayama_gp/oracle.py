"""Exhaustive cross-checks and the Kupisch-series survey.

Each check recomputes a quantity by a second route (brute force over
submodules, per-module orbit walks, breadth-first search on the tube) and
compares. Failures are recorded, never raised, so a survey always finishes.
"""
from __future__ import annotations

import csv
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .algebra import ZERO, NakayamaAlgebra, Uniserial, is_admissible
from .core_equiv import core_length, distance_to_boundary, elementary_filtration, tube_distances
from .defring import udr
from .errors import CoreInvariantViolation, HypothesisViolated, NakayamaError
from .gorenstein import (
    build_core,
    is_gorenstein_projective,
    is_in_core,
    is_minimal_projective,
    syzygy_orbit,
)
from .poly import SparsePoly


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: str = ""


@dataclass(frozen=True)
class Failure:
    kupisch: tuple[int, ...]
    invariant: str
    witness: str


@dataclass(frozen=True)
class Row:
    kupisch: tuple[int, ...]
    g: int
    ell_core: int
    module: Uniserial
    n: int | None
    m: int | None


@dataclass(frozen=True)
class _Examined:
    kupisch: tuple[int, ...]
    checks: tuple[Check, ...]
    rows: tuple[Row, ...]
    g: int | None
    unsupported: bool


class _Recorder:
    def __init__(self):
        self.order: list[str] = []
        self.first_failure: dict[str, str] = {}

    def check(self, name: str, ok: bool, witness=""):
        if name not in self.order:
            self.order.append(name)
        if not ok and name not in self.first_failure:
            self.first_failure[name] = str(witness)

    def result(self) -> tuple[Check, ...]:
        return tuple(
            Check(n, n not in self.first_failure, self.first_failure.get(n, ""))
            for n in self.order
        )


def minimal_projective_bruteforce(A: NakayamaAlgebra, v: int) -> bool:
    P = A.projective(v)
    return not any(A.is_projective(A.submodule(P, l)) for l in range(1, P.length))


def gp_via_orbit(A: NakayamaAlgebra, M: Uniserial) -> bool:
    if A.is_projective(M):
        return True
    orbit = syzygy_orbit(A, M)
    return M in orbit.cycle and all(
        minimal_projective_bruteforce(A, x.top) for x in orbit.cycle
    )


def _examine(A: NakayamaAlgebra) -> _Examined:
    rec = _Recorder()
    mods = A.indecomposables()
    modset = set(mods)
    nonproj = [M for M in mods if not A.is_projective(M)]

    rec.check("enumeration_count", len(modset) == len(mods) == sum(A.kupisch), A)

    for v in range(A.s):
        rec.check(
            "minimal_projective_bruteforce",
            is_minimal_projective(A, v) == minimal_projective_bruteforce(A, v),
            f"vertex {v}",
        )

    for M in mods:
        facs = A.composition_factors(M)
        rec.check("socle_rule", len(facs) == M.length and facs[-1] == A.socle(M), M)
        for l in range(1, M.length):
            joined = A.composition_factors(A.quotient(M, l)) + A.composition_factors(
                A.submodule(M, M.length - l)
            )
            rec.check("submodule_quotient_duality", joined == facs, f"{M} at {l}")
        om = A.syzygy(M)
        if om is ZERO:
            rec.check("syzygy_bookkeeping", A.is_projective(M), M)
            continue
        P = A.projective_cover(M)
        rec.check(
            "syzygy_bookkeeping",
            om in modset
            and om.length + M.length == P.length
            and facs + A.composition_factors(om) == A.composition_factors(P),
            M,
        )

    gp = {M for M in mods if is_gorenstein_projective(A, M)}
    for M in nonproj:
        rec.check("gp_orbit_routes_agree", (M in gp) == gp_via_orbit(A, M), M)
        if M in gp:
            om = A.syzygy(M)
            rec.check("gp_closed_under_syzygy", om is not ZERO and om in gp and not A.is_projective(om), M)

    try:
        core = build_core(A)
    except CoreInvariantViolation as exc:
        rec.check("core_identities", False, exc)
        return _Examined(A.kupisch, rec.result(), (), None, False)
    rec.check("core_identities", True)

    gp_nonproj = [M for M in nonproj if M in gp]
    if core is None:
        rec.check("empty_core_has_no_gp", not gp_nonproj, gp_nonproj[:1])
        return _Examined(A.kupisch, rec.result(), (), None, False)

    elems = core.elementaries
    rec.check("elementary_sum", sum(E.length for E in elems) == A.s, elems)
    total_p = sum(A.c(E.top) for E in elems)
    rec.check("divisibility", total_p % A.s == 0 and core.ell_core * A.s == total_p, total_p)
    rec.check("elementary_tops_distinct", len({E.top for E in elems}) == len(elems), elems)
    rec.check("x_set_is_elementary_tops", core.x_set == {E.top for E in elems}, core.x_set)
    for E in elems:
        proper = [A.quotient(E, l) for l in range(1, E.length)]
        rec.check("elementary_minimal", E in gp and not any(Q in gp for Q in proper), E)
        rec.check(
            "hypothesis_implies_nonprojective",
            not core.hypothesis_ok or E.length < A.c(E.top),
            E,
        )
        rec.check("projective_cover_core_length", core_length(A, core, A.projective(E.top)) == core.ell_core, E)

    for M in nonproj:
        rec.check("gp_iff_core_membership", (M in gp) == is_in_core(A, core, M), M)

    dist = tube_distances(core.g, core.ell_core) if core.ell_core >= 2 else {}
    for (q, m), d in dist.items():
        rec.check("tube_bfs_distance", d == distance_to_boundary(core, m), (q, m))

    for M in gp_nonproj:
        factors = elementary_filtration(A, core, M)
        stitched = tuple(v for E in factors for v in A.composition_factors(E))
        rec.check("filtration_reconstruction", stitched == A.composition_factors(M), M)
        m = len(factors)
        rec.check("core_length_range", 1 <= m <= core.ell_core - 1, M)
        rec.check("syzygy_reflection", core_length(A, core, A.syzygy(M)) == core.ell_core - m, M)

    constant = len(set(A.kupisch)) == 1
    if constant:
        L = A.kupisch[0]
        rec.check(
            "constant_series",
            core.g == A.s
            and list(elems) == [Uniserial(v, 1) for v in range(A.s)]
            and core.ell_core == L
            and len(gp_nonproj) == len(nonproj)
            and all(core_length(A, core, M) == M.length for M in mods),
            A,
        )

    rows = []
    for M in gp_nonproj:
        if not core.hypothesis_ok:
            try:
                udr(A, core, M)
            except HypothesisViolated:
                rec.check("refuses_outside_hypothesis", True)
            else:
                rec.check("refuses_outside_hypothesis", False, M)
            rows.append(Row(A.kupisch, core.g, core.ell_core, M, None, None))
            continue
        R = udr(A, core, M)
        R_om = udr(A, core, A.syzygy(M))
        rec.check("udr_syzygy_invariance", R == R_om, M)
        rec.check("degeneracy_exclusion", (R.n < 1 or R.m >= 1) and (R.n < 2 or R.m >= 2), (M, R.n, R.m))
        rec.check(
            "generators_nonnegative",
            all(c > 0 for p in R.generators for c in p.terms.values()),
            M,
        )
        if R.n == 1:
            expected = (SparsePoly(1, {(R.m,): 1}),)
            rec.check("n1_monomial", R.generators == expected, (M, R))
        rows.append(Row(A.kupisch, core.g, core.ell_core, M, R.n, R.m))
    for P in (A.projective(v) for v in range(A.s)):
        rec.check("projective_ring_is_k", udr(A, core, P).display == "k", P)

    return _Examined(A.kupisch, rec.result(), tuple(rows), core.g, not core.hypothesis_ok)


def verify_algebra(A: NakayamaAlgebra) -> list[Check]:
    try:
        return list(_examine(A).checks)
    except NakayamaError as exc:
        return [Check("unexpected_error", False, f"{type(exc).__name__}: {exc}")]


def canonical_rotation(series) -> tuple[int, ...]:
    t = tuple(series)
    return min(t[k:] + t[:k] for k in range(len(t)))


def enumerate_kupisch(max_s: int, max_c: int) -> list[tuple[int, ...]]:
    """Admissible series with s <= max_s and 2 <= c_v <= max_c, one per rotation class."""
    found = []

    def extend(prefix, s):
        if len(prefix) == s:
            t = tuple(prefix)
            if is_admissible(t) and t == canonical_rotation(t):
                found.append(t)
            return
        lo = max(2, prefix[-1] - 1) if prefix else 2
        for c in range(lo, max_c + 1):
            prefix.append(c)
            extend(prefix, s)
            prefix.pop()

    for s in range(1, max_s + 1):
        extend([], s)
    return found


@dataclass
class SurveyReport:
    algebras_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    presentations: Counter = field(default_factory=Counter)
    g_values: Counter = field(default_factory=Counter)
    empty_cores: int = 0
    unsupported: int = 0
    rows: list[Row] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lines = [
            f"algebras checked: {self.algebras_checked}",
            f"failures: {len(self.failures)}",
            f"empty cores: {self.empty_cores}",
            f"hypothesis violated (unsupported): {self.unsupported}",
            "g distribution: " + ", ".join(f"{g}:{k}" for g, k in sorted(self.g_values.items())),
            "presentations (n,m): "
            + ", ".join(f"({n},{m}):{k}" for (n, m), k in sorted(self.presentations.items())),
        ]
        for f in self.failures[:20]:
            lines.append(f"FAIL {f.kupisch} {f.invariant}: {f.witness}")
        return "\n".join(lines)

    def write_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            out = csv.writer(fh)
            out.writerow(["kupisch", "g", "ell_core", "module", "n", "m"])
            for r in self.rows:
                out.writerow([
                    ",".join(map(str, r.kupisch)),
                    r.g,
                    r.ell_core,
                    f"{r.module.top},{r.module.length}",
                    "unsupported" if r.n is None else r.n,
                    "unsupported" if r.m is None else r.m,
                ])


def _examine_series(series: tuple[int, ...]) -> _Examined:
    A = NakayamaAlgebra(series)
    try:
        return _examine(A)
    except NakayamaError as exc:
        return _Examined(series, (Check("unexpected_error", False, f"{type(exc).__name__}: {exc}"),), (), None, False)


def survey(max_s: int, max_c: int, workers: int = 1) -> SurveyReport:
    if max_s < 1 or max_c < 2:
        raise ValueError("survey needs max_s >= 1 and max_c >= 2")
    series = enumerate_kupisch(max_s, max_c)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_examine_series, series, chunksize=32))
    else:
        results = [_examine_series(t) for t in series]

    report = SurveyReport()
    for res in sorted(results, key=lambda r: (len(r.kupisch), r.kupisch)):
        report.algebras_checked += 1
        for c in res.checks:
            if not c.ok:
                report.failures.append(Failure(res.kupisch, c.name, c.witness))
        if res.g is None:
            report.empty_cores += 1
            continue
        report.g_values[res.g] += 1
        report.unsupported += res.unsupported
        for row in res.rows:
            report.rows.append(row)
            if row.n is not None:
                report.presentations[(row.n, row.m)] += 1
    return report
