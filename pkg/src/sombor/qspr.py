"""Linear structure-property fits for the monocarboxylic acid series.

Each acid ``CH3(CH2)_{m-2}COOH`` is represented by its hydrogen-suppressed
skeleton: a chain of ``m`` carbons whose last carbon also carries the two
oxygens. Its Sombor index is regressed against four thermochemical
properties (kJ/mol):

==========  ====================================
``dhc``     enthalpy of combustion
``dhf``     enthalpy of formation of the liquid
``dhsub``   enthalpy of sublimation
``dhvap``   enthalpy of vaporization
==========  ====================================
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .graph import Graph
from .invariants import INDICES, index_with, sombor

PROPERTIES = ("dhc", "dhf", "dhsub", "dhvap")
PROPERTY_LABELS = {
    "dhc": "enthalpy of combustion",
    "dhf": "enthalpy of formation (liquid)",
    "dhsub": "enthalpy of sublimation",
    "dhvap": "enthalpy of vaporization",
}

# Published fit results for the bundled table, used by ``qspr --check``.
PUBLISHED = {
    "dhc": {"slope": 229.7, "intercept": -1263.0, "r_squared": 0.99998, "rmse": 17.987},
    "dhf": {"slope": 10.65, "intercept": 369.2, "r_squared": 0.99737, "rmse": 8.9567},
    "dhsub": {"slope": 1.212, "intercept": 36.41, "r_squared": 0.99745, "rmse": 1.0034},
    "dhvap": {"slope": 2.559, "intercept": 21.83, "r_squared": 0.99355, "rmse": 3.2771},
}

_PREFIXES = {
    "acetic": 2, "propanoic": 3, "butanoic": 4, "pentanoic": 5, "hexanoic": 6,
    "heptanoic": 7, "octanoic": 8, "nonanoic": 9, "decanoic": 10, "undecanoic": 11,
    "dodecanoic": 12, "tridecanoic": 13, "tetradecanoic": 14, "pentadecanoic": 15,
    "hexadecanoic": 16, "heptadecanoic": 17, "octadecanoic": 18, "nonadecanoic": 19,
    "eicosanoic": 20,
}

SO_MISMATCH_TOL = 1e-4


class DatasetError(ValueError):
    pass


def acid_graph(m: int) -> Graph:
    """Skeleton of the saturated monocarboxylic acid with ``m`` carbons.

    Carbons are ``0..m-1`` along the chain, with the carboxyl carbon last;
    vertices ``m`` and ``m+1`` are its two oxygens.
    """
    if m < 2:
        raise ValueError("an acid needs at least two carbons")
    edges = [(i, i + 1) for i in range(m - 1)]
    edges += [(m - 1, m), (m - 1, m + 1)]
    return Graph.from_edges(m + 2, edges)


def acid_sombor_closed(m: int) -> float:
    if m < 2:
        raise ValueError("an acid needs at least two carbons")
    if m == 2:
        return 3 * math.sqrt(10.0)
    return math.sqrt(5.0) + (m - 3) * 2 * math.sqrt(2.0) + math.sqrt(13.0) + 2 * math.sqrt(10.0)


def carbons_from_name(name: str) -> int:
    key = name.strip().lower().removesuffix(" acid").strip()
    try:
        return _PREFIXES[key]
    except KeyError:
        raise DatasetError(f"cannot infer the carbon count of {name!r}; add a 'carbons' column") from None


@dataclass(frozen=True)
class Row:
    compound: str
    carbons: int
    dhc: float
    dhf: float
    dhsub: float
    dhvap: float
    so: float

    def value(self, prop: str) -> float:
        return getattr(self, prop)


@dataclass(frozen=True)
class Dataset:
    rows: tuple[Row, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> list[float]:
        return [getattr(r, name) for r in self.rows]

    def descriptor(self, index_name: str) -> list[float]:
        if index_name == "sombor":
            return self.column("so")
        w = INDICES[index_name]
        return [index_with(acid_graph(r.carbons), w).total for r in self.rows]


def parse_dataset(text: str) -> Dataset:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise DatasetError("empty dataset")
    fields = [f.strip() for f in reader.fieldnames]
    missing = [f for f in ("compound", *PROPERTIES) if f not in fields]
    if missing:
        raise DatasetError(f"header is missing columns: {', '.join(missing)}")
    rows = []
    for lineno, raw in enumerate(reader, start=2):
        rec = {k.strip(): (v or "").strip() for k, v in raw.items() if k is not None}
        try:
            vals = {p: float(rec[p]) for p in PROPERTIES}
        except ValueError as exc:
            raise DatasetError(f"row {lineno}: {exc}") from None
        name = rec["compound"]
        if not name:
            raise DatasetError(f"row {lineno}: empty compound name")
        try:
            carbons = int(rec["carbons"]) if rec.get("carbons") else carbons_from_name(name)
        except ValueError as exc:
            raise DatasetError(f"row {lineno}: {exc}") from None
        so = sombor(acid_graph(carbons))
        if rec.get("so"):
            try:
                given = float(rec["so"])
            except ValueError as exc:
                raise DatasetError(f"row {lineno}: {exc}") from None
            if abs(given - so) > SO_MISMATCH_TOL:
                raise DatasetError(
                    f"row {lineno}: listed Sombor index {given} differs from computed {so:.6f}")
        for p, v in vals.items():
            if not v > 0:
                raise DatasetError(f"row {lineno}: {p} must be positive")
        rows.append(Row(name, carbons, so=so, **vals))
    if not rows:
        raise DatasetError("dataset has no rows")
    return Dataset(tuple(rows))


def load_dataset(path: str | Path) -> Dataset:
    return parse_dataset(Path(path).read_text())


def bundled_dataset() -> Dataset:
    return parse_dataset(resources.files("sombor.data").joinpath("table1.csv").read_text())


@dataclass(frozen=True)
class RegressionModel:
    slope: float
    intercept: float
    r_squared: float
    rmse: float
    residuals: tuple[float, ...] = field(repr=False)
    ss_res: float = field(repr=False, default=0.0)
    ss_tot: float = field(repr=False, default=0.0)

    @property
    def n(self) -> int:
        return len(self.residuals)

    @property
    def rmse_population(self) -> float:
        """``sqrt(SS_res / n)``; :attr:`rmse` divides by ``n - 2`` instead."""
        return math.sqrt(self.ss_res / self.n)

    @property
    def adjusted_r_squared(self) -> float:
        return 1 - (1 - self.r_squared) * (self.n - 1) / (self.n - 2)

    def predict(self, x: float) -> float:
        return self.slope * x + self.intercept


def ols_fit(x: list[float], y: list[float]) -> RegressionModel:
    """Least-squares line ``y = slope * x + intercept``.

    ``rmse`` uses the residual degrees of freedom, ``sqrt(SS_res / (n - 2))``.
    """
    n = len(x)
    if n != len(y):
        raise ValueError("x and y differ in length")
    if n < 3:
        raise ValueError("need at least three points")
    mx = math.fsum(x) / n
    my = math.fsum(y) / n
    sxx = math.fsum((a - mx) ** 2 for a in x)
    if sxx == 0:
        raise ValueError("x has zero variance")
    sxy = math.fsum((a - mx) * (b - my) for a, b in zip(x, y))
    slope = sxy / sxx
    intercept = my - slope * mx
    residuals = tuple(b - (slope * a + intercept) for a, b in zip(x, y))
    ss_res = math.fsum(r * r for r in residuals)
    ss_tot = math.fsum((b - my) ** 2 for b in y)
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    rmse = math.sqrt(ss_res / (n - 2))
    return RegressionModel(slope, intercept, r2, rmse, residuals, ss_res, ss_tot)


def rmse_convention(model: RegressionModel, reported: float, rel_tol: float = 0.01) -> str | None:
    """Which denominator (``"n-2"`` or ``"n"``) reproduces a reported RMSE."""
    if abs(model.rmse - reported) <= rel_tol * reported:
        return "n-2"
    if abs(model.rmse_population - reported) <= rel_tol * reported:
        return "n"
    return None


@dataclass
class FitSummary:
    models: dict[str, RegressionModel]
    comparison: dict[str, dict[str, float]]


def fit_all(ds: Dataset, compare: bool = True) -> FitSummary:
    """Sombor fits for all four properties; with ``compare`` also the R^2 of
    every index in :data:`sombor.invariants.INDICES` for each property."""
    so = ds.descriptor("sombor")
    models = {p: ols_fit(so, ds.column(p)) for p in PROPERTIES}
    comparison: dict[str, dict[str, float]] = {}
    if compare:
        for name in INDICES:
            x = ds.descriptor(name)
            comparison[name] = {p: ols_fit(x, ds.column(p)).r_squared for p in PROPERTIES}
    return FitSummary(models, comparison)


def check_published(summary: FitSummary) -> list[tuple[str, bool, str]]:
    """Compare fits with :data:`PUBLISHED`.

    Tolerances: coefficients 0.5% relative, R^2 1e-4 absolute, RMSE 1%
    relative under the ``n - 2`` convention.
    """
    out = []
    for p in PROPERTIES:
        ref = PUBLISHED[p]
        m = summary.models[p]
        for key, got, ok in (
            ("slope", m.slope, abs(m.slope - ref["slope"]) <= 5e-3 * abs(ref["slope"])),
            ("intercept", m.intercept,
             abs(m.intercept - ref["intercept"]) <= 5e-3 * abs(ref["intercept"])),
            ("r_squared", m.r_squared, abs(m.r_squared - ref["r_squared"]) <= 1e-4),
            ("rmse", m.rmse, abs(m.rmse - ref["rmse"]) <= 1e-2 * ref["rmse"]),
        ):
            out.append((f"{p}.{key}", bool(ok), f"got {got:.6g}, published {ref[key]:g}"))
    return out
