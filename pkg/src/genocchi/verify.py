"""Cross-model consistency suite.

Every counting statement in the package is checked from two independent
directions: the triangle recurrences on one side and exhaustive object
enumeration plus the structural maps on the other.  A full run covers

  * triangle identities (row symmetry, borders, row sums, the difference
    identity) and the 2^n divisibility of the median numbers,
  * per-order totals and per-statistic histograms of all five families
    against the Kreweras triangle,
  * serialization round-trips for every enumerated object,
  * the chain <-> settuple and chain <-> pair-tuple bijections with their
    statistic transport, including the closed-form cross-check,
  * the t and r involutions, the reduce/lift order bijections, and the
    permutation embedding,
  * the redundancy statistic against the statistic transported through
    phi_inverse, and the doubled pair count against median_genocchi,
  * the reference order-3 classification of all five families by (k, l).

Failures never raise; they are collected as check records carrying a
replayable witness (a canonical serialization whenever an object is at
fault).  Reports serialize to stable JSON and to plain text.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from . import maps, models, triangles
from .models import MODEL_NAMES

__all__ = [
    "Check",
    "ConsistencyReport",
    "SuiteReport",
    "count_matrix",
    "run_suite",
    "ORDER3_CELLS",
]

# Reference joint (k, l) classification of the seven order-3 objects of each
# family, keyed by model and cell.
ORDER3_CELLS: dict[str, dict[tuple[int, int], str]] = {
    "pd2n": {
        (1, 2): "2 1 6 3 7 4 8 5",
        (1, 3): "2 1 4 3 6 5 8 7",
        (2, 1): "4 1 6 2 7 5 8 3",
        (2, 2): "4 1 6 2 7 3 8 5",
        (2, 3): "4 1 5 2 6 3 8 7",
        (3, 1): "6 1 4 2 7 5 8 3",
        (3, 2): "6 1 4 2 7 3 8 5",
    },
    "dellac": {
        (1, 2): "1 2 2 1 3 3",
        (1, 3): "1 2 3 1 2 3",
        (2, 1): "1 2 1 2 3 3",
        (2, 2): "1 1 2 2 3 3",
        (2, 3): "1 1 3 2 2 3",
        (3, 1): "1 2 1 3 2 3",
        (3, 2): "1 1 2 3 2 3",
    },
    "chain": {
        (1, 2): ";1;1,3;1,2,3",
        (1, 3): ";1;1,2;1,2,3",
        (2, 1): ";3;1,3;1,2,3",
        (2, 2): ";2;1,3;1,2,3",
        (2, 3): ";2;1,2;1,2,3",
        (3, 1): ";3;2,3;1,2,3",
        (3, 2): ";2;2,3;1,2,3",
    },
    "settuple": {
        (1, 2): "1;3;2",
        (1, 3): "1;2;3",
        (2, 1): "3;1;2",
        (2, 2): "2;1,3;2",
        (2, 3): "2;1;3",
        (3, 1): "3;2;1",
        (3, 2): "2;3;1",
    },
    "hetyei": {
        (1, 2): "1,1;1,2;3,3",
        (1, 3): "1,1;2,2;3,3",
        (2, 1): "1,1;1,2;1,3",
        (2, 2): "1,1;1,2;2,3",
        (2, 3): "1,1;2,2;2,3",
        (3, 1): "1,1;2,2;1,3",
        (3, 2): "1,1;1,1;2,3",
    },
}


@dataclass(frozen=True)
class Check:
    """One named consistency check with its outcome and an optional witness."""

    name: str
    model: str  # a family name, "triangles", or "suite"
    n: int | None
    status: str  # "pass" or "fail"
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass
class ConsistencyReport:
    """Totals, histograms, and checks for one order n."""

    n: int
    totals: dict[str, int]
    k_hists: dict[str, tuple[int, ...]]
    l_hists: dict[str, tuple[int, ...]]
    triangle_row: tuple[int, ...]
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)


@dataclass
class SuiteReport:
    """Aggregate of per-order reports plus the order-independent checks."""

    max_n: int
    pairs_n: int | None
    reports: list[ConsistencyReport]
    triangle_checks: list[Check]

    @property
    def checks(self) -> list[Check]:
        out = list(self.triangle_checks)
        for report in self.reports:
            out.extend(report.checks)
        return out

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_records(self) -> list[dict]:
        """Flat JSON-ready records, one per (n, model) group."""
        groups: dict[tuple[int | None, str], list[Check]] = {}
        for check in self.checks:
            groups.setdefault((check.n, check.model), []).append(check)
        records = []
        order = {name: i for i, name in enumerate(MODEL_NAMES)}
        keys = sorted(groups, key=lambda g: (g[0] is not None, g[0] or 0, order.get(g[1], -1)))
        by_n = {report.n: report for report in self.reports}
        for n, model in keys:
            report = by_n.get(n)
            in_matrix = report is not None and model in report.totals
            records.append(
                {
                    "n": n,
                    "model": model,
                    "total": report.totals[model] if in_matrix else None,
                    "k_hist": list(report.k_hists[model]) if in_matrix else None,
                    "l_hist": list(report.l_hists[model]) if in_matrix else None,
                    "checks": [
                        {"name": c.name, "status": c.status, "witness": c.witness}
                        for c in groups[(n, model)]
                    ],
                }
            )
        return records

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_records(), sort_keys=True, indent=indent)

    def to_text(self) -> str:
        lines = []
        for report in self.reports:
            row = " ".join(str(v) for v in report.triangle_row)
            lines.append(f"n={report.n}  reference row: {row}")
            for model in MODEL_NAMES:
                lines.append(
                    f"  {model:8s} total={report.totals[model]}"
                    f"  k={tuple(report.k_hists[model])}  l={tuple(report.l_hists[model])}"
                )
        passed = sum(c.ok for c in self.checks)
        lines.append(f"checks: {passed} passed, {len(self.checks) - passed} failed")
        for c in self.failures():
            where = f" n={c.n}" if c.n is not None else ""
            witness = f"  witness: {c.witness}" if c.witness else ""
            lines.append(f"  FAIL {c.model}/{c.name}{where}{witness}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# check construction helpers


def _check(out: list[Check], name: str, model: str, n: int | None, ok: bool,
           witness: str | None = None) -> None:
    out.append(Check(name, model, n, "pass" if ok else "fail", witness if not ok else None))


def _first_bad(objs, predicate) -> str | None:
    for obj in objs:
        if not predicate(obj):
            return models.serialize(obj)
    return None


def _all_bad(objs, predicate, cap: int = 8) -> str | None:
    bad = [models.serialize(obj) for obj in objs if not predicate(obj)]
    if not bad:
        return None
    shown = " | ".join(bad[:cap])
    if len(bad) > cap:
        shown += f" | +{len(bad) - cap} more"
    return shown


def _enumerate_cells(n: int, limit: int | None, threads: int) -> dict[str, list]:
    def cell(model: str) -> list:
        return list(models.enumerate_model(model, n, limit))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {model: pool.submit(cell, model) for model in MODEL_NAMES}
            return {model: futures[model].result() for model in MODEL_NAMES}
    return {model: cell(model) for model in MODEL_NAMES}


def _histogram(values, n: int) -> tuple[int, ...]:
    out = [0] * n
    for v in values:
        out[v - 1] += 1
    return tuple(out)


def _matrix_report(n: int, cells: dict[str, list]) -> ConsistencyReport:
    row = triangles.kreweras_row(n)
    expected = triangles.normalized_genocchi(n)
    report = ConsistencyReport(
        n=n,
        totals={m: len(objs) for m, objs in cells.items()},
        k_hists={m: _histogram(map(models.k_statistic, objs), n) for m, objs in cells.items()},
        l_hists={m: _histogram(map(models.l_statistic, objs), n) for m, objs in cells.items()},
        triangle_row=row,
    )
    for model in MODEL_NAMES:
        _check(report.checks, "total", model, n, report.totals[model] == expected,
               f"expected {expected}, got {report.totals[model]}")
        _check(report.checks, "k-histogram", model, n, report.k_hists[model] == row,
               f"expected {row}, got {report.k_hists[model]}")
        _check(report.checks, "l-histogram", model, n, report.l_hists[model] == row,
               f"expected {row}, got {report.l_hists[model]}")
    return report


def count_matrix(n: int, *, limit: int | None = models.DEFAULT_ENUMERATION_LIMIT,
                 threads: int = 1) -> ConsistencyReport:
    """Totals and (k, l) histograms of all five families at order n, each
    compared against row n of the Kreweras triangle."""
    return _matrix_report(n, _enumerate_cells(n, limit, threads))


# ---------------------------------------------------------------------------
# per-order deep checks


def _serialization_checks(report: ConsistencyReport, cells: dict[str, list]) -> None:
    n = report.n
    for model, objs in cells.items():
        bad = _first_bad(objs, lambda o, m=model: models.parse(m, models.serialize(o)) == o)
        _check(report.checks, "serialization-roundtrip", model, n, bad is None, bad)
        listing = [models.serialize(o) for o in objs]
        _check(report.checks, "canonical-order", model, n, listing == sorted(listing),
               "enumeration is not sorted by serialization")


def _settuple_checks(report: ConsistencyReport, cells: dict[str, list]) -> None:
    def structure(s) -> bool:
        first, last = s.sets[0], s.sets[-1]
        ones = sum(1 in part for part in s.sets)
        tops = sum(s.n in part for part in s.sets)
        return len(first) == 1 and len(last) == 1 and ones == 1 and tops == 1

    bad = _first_bad(cells["settuple"], structure)
    _check(report.checks, "endpoint-structure", "settuple", report.n, bad is None, bad)


def _hetyei_checks(report: ConsistencyReport, cells: dict[str, list]) -> None:
    n = report.n

    def redundancy_shape(m) -> bool:
        chain = models.redundancy_chain(m)
        red = models.redundant_positions(m)
        return bool(red) and chain[-1] in red and models.k_statistic(m) == n + 1 - max(red)

    bad = _first_bad(cells["hetyei"], redundancy_shape)
    _check(report.checks, "redundancy-structure", "hetyei", n, bad is None, bad)

    total = len(cells["hetyei"])
    doubled = (1 << n) * total
    expected = triangles.median_genocchi(n)
    _check(report.checks, "orbit-doubling", "hetyei", n, doubled == expected,
           f"2^{n} * {total} = {doubled}, expected {expected}")


def _bijection_checks(report: ConsistencyReport, cells: dict[str, list]) -> None:
    n = report.n
    chains, settuples, hetyeis = cells["chain"], cells["settuple"], cells["hetyei"]

    bad = _first_bad(
        chains,
        lambda c: maps.settuple_to_chain(maps.chain_to_settuple(c)) == c,
    )
    _check(report.checks, "chain-settuple-roundtrip", "settuple", n, bad is None, bad)
    bad = _first_bad(
        settuples,
        lambda s: maps.chain_to_settuple(maps.settuple_to_chain(s)) == s,
    )
    _check(report.checks, "settuple-chain-roundtrip", "settuple", n, bad is None, bad)
    bad = _first_bad(
        settuples, lambda s: maps.closed_form_chain(s) == maps.settuple_to_chain(s)
    )
    _check(report.checks, "chain-closed-form", "settuple", n, bad is None, bad)
    bad = _first_bad(
        chains,
        lambda c: models.statistics(maps.chain_to_settuple(c)) == models.statistics(c),
    )
    _check(report.checks, "chain-settuple-statistics", "settuple", n, bad is None, bad)

    images: dict = {}
    collision = None
    for c in chains:
        m = maps.phi(c)
        if m in images:
            collision = models.serialize(c)
            break
        images[m] = c
    _check(report.checks, "phi-injective", "hetyei", n, collision is None, collision)
    _check(report.checks, "phi-image", "hetyei", n, set(images) == set(hetyeis),
           "phi image differs from the enumerated pair tuples")
    bad = _first_bad(chains, lambda c: maps.phi_inverse(maps.phi(c)) == c)
    _check(report.checks, "phi-roundtrip", "hetyei", n, bad is None, bad)
    bad = _first_bad(hetyeis, lambda m: maps.phi(maps.phi_inverse(m)) == m)
    _check(report.checks, "phi-inverse-roundtrip", "hetyei", n, bad is None, bad)
    bad = _first_bad(
        chains, lambda c: models.statistics(maps.phi(c)) == models.statistics(c)
    )
    _check(report.checks, "phi-statistics", "hetyei", n, bad is None, bad)
    bad = _all_bad(
        hetyeis,
        lambda m: models.statistics(m) == models.statistics(maps.phi_inverse(m)),
    )
    _check(report.checks, "redundancy-transport", "hetyei", n, bad is None, bad)


def _involution_checks(report: ConsistencyReport, cells: dict[str, list]) -> None:
    n = report.n
    for model in ("pd2n", "dellac", "settuple"):
        objs = cells[model]
        universe = set(objs)

        def t_ok(o) -> bool:
            k, l = models.statistics(o)
            image = maps.involution_t(o)
            if image not in universe or maps.involution_t(image) != o:
                return False
            if models.statistics(image) != (l, k):
                return False
            return k != l or image == o

        def r_ok(o) -> bool:
            k, l = models.statistics(o)
            image = maps.involution_r(o)
            return (
                image in universe
                and maps.involution_r(image) == o
                and models.statistics(image) == (n + 1 - l, n + 1 - k)
            )

        bad = _first_bad(objs, t_ok)
        _check(report.checks, "involution-t", model, n, bad is None, bad)
        bad = _first_bad(objs, r_ok)
        _check(report.checks, "involution-r", model, n, bad is None, bad)


def _reduction_checks(report: ConsistencyReport, cells: dict[str, list],
                      limit: int | None) -> None:
    n = report.n
    if n < 2:
        return
    smaller = triangles.normalized_genocchi(n - 1)
    for model in ("pd2n", "dellac", "settuple"):
        primed = [o for o in cells[model] if models.l_statistic(o) == n]
        reduced = [maps.reduce(o) for o in primed]
        below = list(models.enumerate_model(model, n - 1, limit))
        ok = (
            len(primed) == smaller
            and len(set(reduced)) == len(reduced)
            and set(reduced) == set(below)
            and all(maps.lift(r) == o for o, r in zip(primed, reduced))
            and all(maps.reduce(maps.lift(o)) == o for o in below)
        )
        witness = None if ok else (models.serialize(primed[0]) if primed else "no primed objects")
        _check(report.checks, "reduce-lift", model, n, ok, witness)


def _embedding_checks(report: ConsistencyReport, cells: dict[str, list]) -> None:
    n = report.n
    images = {maps.embed_permutation(word) for word in permutations(range(1, n + 1))}
    singletons = {
        s for s in cells["settuple"] if all(len(part) == 1 for part in s.sets)
    }
    ok = len(images) == factorial(n) and images == singletons
    _check(report.checks, "permutation-embedding", "settuple", n, ok,
           f"expected {factorial(n)} singleton tuples, got {len(singletons)}")


def _order3_checks(report: ConsistencyReport, cells: dict[str, list]) -> None:
    for model, reference in ORDER3_CELLS.items():
        placed = {
            models.statistics(o): models.serialize(o) for o in cells[model]
        }
        ok = placed == reference and len(cells[model]) == len(reference)
        witness = None
        if not ok:
            diffs = set(placed.items()) ^ set(reference.items())
            witness = "; ".join(f"{cell}: {text}" for cell, text in sorted(diffs))
        _check(report.checks, "order3-reference-cells", model, 3, ok, witness)


def _pair_count_check(report: ConsistencyReport, pair_limit: int | None) -> None:
    n = report.n
    got = models.hetyei_pair_count(n, limit=pair_limit)
    expected = triangles.median_genocchi(n)
    _check(report.checks, "pair-count", "hetyei", n, got == expected,
           f"expected {expected}, got {got}")


# ---------------------------------------------------------------------------
# order-independent triangle checks


def _triangle_checks(identity_n: int, divisibility_n: int) -> list[Check]:
    out: list[Check] = []

    def sweep(name: str, start: int, stop: int, predicate) -> None:
        witness = next(
            (f"n={n}" for n in range(start, stop + 1) if not predicate(n)), None
        )
        _check(out, name, "triangles", None, witness is None, witness)

    def symmetric(n: int) -> bool:
        row = triangles.kreweras_row(n)
        return row == row[::-1]

    def borders(n: int) -> bool:
        row = triangles.kreweras_row(n)
        h = triangles.normalized_genocchi(n - 1)
        return row[0] == h and row[-1] == h

    def row_sum(n: int) -> bool:
        return sum(triangles.kreweras_row(n)) == triangles.normalized_genocchi(n)

    def difference(n: int) -> bool:
        row, prev = triangles.kreweras_row(n), triangles.kreweras_row(n - 1)
        padded = (0,) + row
        for k in range(1, n + 1):
            high = sum(prev[k - 1 : n - 1])
            low = sum(prev[0 : max(0, k - 2)])
            if padded[k] - padded[k - 1] != high - low:
                return False
        return True

    def divisible(n: int) -> bool:
        return triangles.median_genocchi(n) % (1 << n) == 0

    sweep("kreweras-symmetry", 1, identity_n, symmetric)
    sweep("kreweras-borders", 2, identity_n, borders)
    sweep("kreweras-row-sums", 1, identity_n, row_sum)
    sweep("kreweras-difference-identity", 2, identity_n, difference)
    sweep("median-divisibility", 0, divisibility_n, divisible)

    fresh_s, fresh_k = triangles.SeidelTriangle(), triangles.KrewerasTriangle()
    stable = all(
        fresh_s.row(i) == triangles.seidel_row(i) for i in range(1, 25)
    ) and all(fresh_k.row(nn) == triangles.kreweras_row(nn) for nn in range(1, 25))
    _check(out, "determinism", "triangles", None, stable,
           "fresh tables disagree with memoized tables")
    return out


# ---------------------------------------------------------------------------
# the suite


def run_suite(max_n: int = 6, pairs_n: int | None = 4, *,
              limit: int | None = models.DEFAULT_ENUMERATION_LIMIT,
              threads: int = 1, identity_n: int = 60,
              divisibility_n: int = 200) -> SuiteReport:
    """Run every consistency check up to order max_n.

    pairs_n bounds the independent coordinate-pair count (None skips it);
    triangle identities always run over their full stated ranges, which are
    cheap.  threads > 1 parallelizes enumeration cells only; results are
    aggregated deterministically, so the report does not depend on
    scheduling.  Invariant violations are reported, not raised.
    """
    reports = []
    for n in range(1, max_n + 1):
        cells = _enumerate_cells(n, limit, threads)
        report = _matrix_report(n, cells)
        _serialization_checks(report, cells)
        _settuple_checks(report, cells)
        _hetyei_checks(report, cells)
        _bijection_checks(report, cells)
        _involution_checks(report, cells)
        _reduction_checks(report, cells, limit)
        _embedding_checks(report, cells)
        if n == 3:
            _order3_checks(report, cells)
        if pairs_n is not None and n <= pairs_n:
            _pair_count_check(report, max(pairs_n, models.DEFAULT_PAIR_COUNT_LIMIT))
        reports.append(report)
    return SuiteReport(
        max_n=max_n,
        pairs_n=pairs_n,
        reports=reports,
        triangle_checks=_triangle_checks(identity_n, divisibility_n),
    )
