"""Reading, writing and checking tab-separated count tables.

One entry per line: ``e;a1,a2,...;b1,b2,...<TAB>value``.  Either segment may
be empty, and the value is an integer or ``c0+c1x`` / ``c0-c1x``.  Lines
starting with ``#`` are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .affine import AffineCount
from .classes import TangencyKey
from .tables import Solution

__all__ = [
    "FixtureEntry",
    "FixtureSet",
    "FixtureResult",
    "FixtureReport",
    "load_fixtures",
    "parse_fixtures",
    "format_fixtures",
    "check_fixtures",
]


@dataclass(frozen=True)
class FixtureEntry:
    key: TangencyKey
    value: AffineCount
    line: int = 0


@dataclass
class FixtureSet:
    entries: list[FixtureEntry]
    source: str = "<memory>"

    def as_dict(self) -> dict[TangencyKey, AffineCount]:
        return {e.key: e.value for e in self.entries}

    def __len__(self):
        return len(self.entries)


def parse_fixtures(text: str, source: str = "<memory>") -> FixtureSet:
    entries = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            k, v = raw.rstrip("\r\n").split("\t")
            key = TangencyKey.parse(k)
            value = AffineCount.parse(v)
        except ValueError as exc:
            raise ValueError(f"{source}:{lineno}: {exc}") from None
        if key in seen and seen[key] != value:
            raise ValueError(f"{source}:{lineno}: conflicting value for {key}")
        seen[key] = value
        entries.append(FixtureEntry(key, value, lineno))
    return FixtureSet(entries, source)


def load_fixtures(path: str | Path | None = None) -> FixtureSet:
    """Load a fixture file; without ``path`` the bundled tables are used."""
    if path is None:
        text = resources.files("a1count").joinpath("data/reference_tables.tsv").read_text(encoding="utf-8")
        return parse_fixtures(text, "reference_tables.tsv")
    p = Path(path)
    return parse_fixtures(p.read_text(encoding="utf-8"), str(p))


def format_fixtures(values: dict[TangencyKey, AffineCount]) -> str:
    keys = sorted(values, key=lambda k: (k.e, k.b, tuple(-x for x in k.a)))
    return "".join(f"{k}\t{AffineCount.lift(values[k]).fixture_text()}\n" for k in keys)


@dataclass(frozen=True)
class FixtureResult:
    key: TangencyKey
    expected: AffineCount
    got: AffineCount | None
    status: str  # "pass", "fixture-only" or "fail"
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


@dataclass
class FixtureReport:
    results: list[FixtureResult] = field(default_factory=list)

    @property
    def failures(self) -> list[FixtureResult]:
        return [r for r in self.results if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, status: str) -> int:
        return sum(r.status == status for r in self.results)

    def summary(self) -> str:
        return (
            f"{self.count('pass')} derived entries match, "
            f"{self.count('fixture-only')} fixture-only entries consistent, "
            f"{len(self.failures)} failures"
        )


def _check_fixture_only(entry: FixtureEntry, table: dict, solution: Solution) -> FixtureResult:
    k, v = entry.key, entry.value
    if not v.is_integral:
        return FixtureResult(k, v, None, "fail", "non-integral value")
    if k.vanishes() and v:
        return FixtureResult(k, v, AffineCount(), "fail", "key vanishes but value is nonzero")
    norm = k.normalize()
    if norm != k:
        if norm in table and table[norm] != v:
            return FixtureResult(k, v, table[norm], "fail", f"trailing-one partner {norm} differs")
        got = solution.values.get(norm)
        if got is not None:
            return FixtureResult(k, v, got, "pass" if got == v else "fail", "compared through trailing-one")
    longer = TangencyKey(k.e, k.a, k.b + (1,))
    if longer in table and table[longer] != v:
        return FixtureResult(k, v, table[longer], "fail", f"trailing-one partner {longer} differs")
    return FixtureResult(k, v, None, "fixture-only")


def check_fixtures(fixtures: FixtureSet, solution: Solution, x: int | None = None) -> FixtureReport:
    """Compare every fixture entry with the solved tables.

    Keys with at most one contact order must match exactly as affine values,
    before ``x`` is substituted; when ``x`` is given the substituted integers
    are compared as well.  Longer contact sequences are outside the
    relation engine and are checked for vanishing and trailing-one
    consistency only.
    """
    table = fixtures.as_dict()
    report = FixtureReport()
    for entry in fixtures.entries:
        k, v = entry.key, entry.value
        if len(k.b) >= 2:
            report.results.append(_check_fixture_only(entry, table, solution))
            continue
        if k.vanishes():
            got = AffineCount()
        else:
            got = solution.values.get(k)
        if got is None:
            report.results.append(FixtureResult(k, v, None, "fail", "unresolved by the relation engine"))
        elif got != v:
            report.results.append(FixtureResult(k, v, got, "fail", "value mismatch"))
        elif x is not None and got.subs(x) != v.subs(x):
            report.results.append(FixtureResult(k, v, got, "fail", f"mismatch at x = {x}"))
        else:
            report.results.append(FixtureResult(k, v, got, "pass"))
    return report
