"""Per-graph evaluation of every inequality, with JSON/CSV/text serialization.

A ``Report`` stores raw values and signed margins (``value - lower`` and
``upper - value``); every pass flag is a pure function of those numbers, see
``derive_flags``.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from .eigbounds import classical_intervals, corollary_degree_bounds, theorem_bounds
from .graph import Graph
from .randic import extreme_eig_bounds, randic_bounds_degrees, randic_lower_global, randic_minus_one_exact
from .spectral import Spectrum, graph_spectrum, moment_check

DEFAULT_TOL = 1e-9
UNBOUNDED = "unbounded"

FAMILIES = (
    "identities",
    "classical",
    "randic_degrees",
    "theorem",
    "corollary_degree",
    "randic_extreme_lower",
    "randic_extreme_upper",
    "randic_global",
    "dominance",
    "nesting",
)

NOTES = (
    "corollary_degree rho_1 lower end uses sqrt(n(n-1-d_max)/((n-2) d_max))/(n-1)",
)

CSV_COLUMNS = (
    "graph", "n", "m", "row", "index", "method",
    "lower", "upper", "value", "margin_lower", "margin_upper", "pass",
)


@dataclass
class Check:
    """One inequality ``lower <= value <= upper``; ``index`` is 0 for R_{-1} checks."""

    index: int
    method: str
    lower: float
    upper: float
    value: float

    @property
    def margin_lower(self) -> float:
        return self.value - self.lower

    @property
    def margin_upper(self) -> float:
        return self.upper - self.value

    def passes(self, tol: float) -> bool:
        return min(self.margin_lower, self.margin_upper) >= -tol


@dataclass
class Report:
    n: int
    m: int
    degrees: list[int]
    source: str
    edges: list[tuple[int, int]]
    spectrum: list[float]
    randic: float
    identity_residuals: tuple[float, float]
    bounds: list[Check]
    randic_bounds: list[Check]
    tolerance: float = DEFAULT_TOL
    flags: dict[str, bool] = field(default_factory=dict)
    notes: tuple[str, ...] = NOTES

    @property
    def all_pass(self) -> bool:
        return all(self.flags.values())

    def equality_attainments(self) -> list[str]:
        """Labels ``method:index:side`` of bound endpoints met within tolerance."""
        out = []
        for c in self.bounds + self.randic_bounds:
            for side, margin in (("lower", c.margin_lower), ("upper", c.margin_upper)):
                if math.isfinite(margin) and abs(margin) <= self.tolerance:
                    out.append(f"{c.method}:{c.index}:{side}")
        return out

    def to_dict(self) -> dict:
        return {
            "graph": {
                "n": self.n,
                "m": self.m,
                "degrees": list(self.degrees),
                "source": self.source,
                "edges": [list(e) for e in self.edges],
            },
            "spectrum": list(self.spectrum),
            "randic": self.randic,
            "identities": {
                "sum_residual": self.identity_residuals[0],
                "square_sum_residual": self.identity_residuals[1],
                "pass": self.flags["identities"],
            },
            "bounds": [_check_dict(c, self.tolerance) for c in self.bounds],
            "randic_bounds": [_check_dict(c, self.tolerance) for c in self.randic_bounds],
            "flags": dict(self.flags),
            "equality": self.equality_attainments(),
            "notes": list(self.notes),
            "tolerance": self.tolerance,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        g = d["graph"]
        rep = cls(
            n=g["n"],
            m=g["m"],
            degrees=list(g["degrees"]),
            source=g["source"],
            edges=[tuple(e) for e in g["edges"]],
            spectrum=list(d["spectrum"]),
            randic=d["randic"],
            identity_residuals=(d["identities"]["sum_residual"], d["identities"]["square_sum_residual"]),
            bounds=[_check_from_dict(c) for c in d["bounds"]],
            randic_bounds=[_check_from_dict(c) for c in d["randic_bounds"]],
            tolerance=d["tolerance"],
            flags=dict(d["flags"]),
            notes=tuple(d.get("notes", NOTES)),
        )
        return rep

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def csv_rows(self) -> list[list[str]]:
        rows = []
        for c in self.bounds + self.randic_bounds:
            rows.append([
                self.source, str(self.n), str(self.m), "bound",
                str(c.index) if c.index else "", c.method,
                fmt(c.lower), fmt(c.upper), fmt(c.value),
                fmt(c.margin_lower), fmt(c.margin_upper), str(c.passes(self.tolerance)).lower(),
            ])
        margins = family_margins(self)
        rows.append([
            self.source, str(self.n), str(self.m), "summary", "", "all",
            "", "", fmt(self.randic),
            fmt(min(c.margin_lower for c in self.bounds + self.randic_bounds)),
            fmt(min(c.margin_upper for c in self.bounds + self.randic_bounds)),
            str(min(margins.values()) >= -self.tolerance).lower(),
        ])
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(self.csv_rows())
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            f"graph: {self.source}  n={self.n} m={self.m} degrees={self.degrees}",
            "spectrum: " + " ".join(f"{x:.12g}" for x in self.spectrum),
            f"R_-1: {self.randic:.15g}",
            "identity residuals: sum={:.3e} squares={:.3e}".format(*self.identity_residuals),
            "",
            f"{'method':<24}{'i':>3}  {'lower':>14} {'value':>14} {'upper':>14}  ok",
        ]
        for c in self.bounds + self.randic_bounds:
            idx = str(c.index) if c.index else "-"
            upper = UNBOUNDED if math.isinf(c.upper) else f"{c.upper:.12g}"
            ok = "yes" if c.passes(self.tolerance) else "NO"
            lines.append(f"{c.method:<24}{idx:>3}  {c.lower:>14.12g} {c.value:>14.12g} {upper:>14}  {ok}")
        lines.append("")
        lines.append("flags: " + " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in self.flags.items()))
        eq = self.equality_attainments()
        lines.append("equality attained: " + (", ".join(eq) if eq else "none"))
        lines.append(f"tolerance: {self.tolerance:g}")
        return "\n".join(lines) + "\n"


def fmt(x: float) -> str:
    """Shortest round-trip decimal; infinite bounds become ``unbounded``."""
    if math.isinf(x):
        return UNBOUNDED if x > 0 else "-" + UNBOUNDED
    return repr(float(x))


def _num(x):
    if isinstance(x, str):
        if x == UNBOUNDED:
            return math.inf
        if x == "-" + UNBOUNDED:
            return -math.inf
        raise ValueError(f"unexpected token {x!r}")
    return float(x)


def _json_num(x: float):
    return fmt(x) if math.isinf(x) else float(x)


def _check_dict(c: Check, tol: float) -> dict:
    return {
        "index": c.index,
        "method": c.method,
        "lower": _json_num(c.lower),
        "upper": _json_num(c.upper),
        "value": c.value,
        "pass": c.passes(tol),
        "margin_lower": _json_num(c.margin_lower),
        "margin_upper": _json_num(c.margin_upper),
    }


def _check_from_dict(d: dict) -> Check:
    return Check(d["index"], d["method"], _num(d["lower"]), _num(d["upper"]), float(d["value"]))


def family_margins(rep: Report) -> dict[str, float]:
    """Worst signed margin per inequality family; negative means violated."""
    by_method: dict[str, list[Check]] = {}
    for c in rep.bounds + rep.randic_bounds:
        by_method.setdefault(c.method, []).append(c)

    def worst(method):
        return min(min(c.margin_lower, c.margin_upper) for c in by_method[method])

    extreme = by_method["randic_extreme_rho1"] + by_method["randic_extreme_rho_last"]
    theorem = {c.index: c for c in by_method["theorem"]}
    corollary = {c.index: c for c in by_method["corollary_degree"]}
    mean = rep.n / (rep.n - 1)
    return {
        "identities": -max(rep.identity_residuals),
        "classical": worst("classical"),
        "randic_degrees": worst("randic_degrees"),
        "theorem": worst("theorem"),
        "corollary_degree": worst("corollary_degree"),
        "randic_extreme_lower": min(c.margin_lower for c in extreme),
        "randic_extreme_upper": min(c.margin_upper for c in extreme),
        "randic_global": worst("randic_global"),
        "dominance": min(theorem[1].lower - mean, mean - theorem[rep.n - 1].upper),
        "nesting": min(
            min(theorem[i].lower - corollary[i].lower, corollary[i].upper - theorem[i].upper)
            for i in theorem
        ),
    }


def derive_flags(rep: Report) -> dict[str, bool]:
    return {k: v >= -rep.tolerance for k, v in family_margins(rep).items()}


def evaluate(g: Graph, source: str = "", tol: float = DEFAULT_TOL,
             spectrum: Spectrum | None = None) -> Report:
    """Compute the spectrum, R_{-1} and every bound for a connected graph with n >= 3."""
    if g.n < 3:
        raise ValueError(f"bounds need n >= 3, got n={g.n}")
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    spec = spectrum if spectrum is not None else graph_spectrum(g)
    n = g.n
    r_exact = randic_minus_one_exact(g)
    r = float(r_exact)
    rho = spec.values
    d_max, d_min = max(g.degrees), min(g.degrees)

    bounds = [Check(b.index, b.method, b.lower, b.upper, rho[b.index - 1]) for b in classical_intervals(n)]
    for i in range(1, n):
        b = theorem_bounds(n, r_exact, i)
        bounds.append(Check(i, b.method, b.lower, b.upper, rho[i - 1]))
    for i in range(1, n):
        b = corollary_degree_bounds(n, d_max, d_min, i)
        bounds.append(Check(i, b.method, b.lower, b.upper, rho[i - 1]))

    ext = extreme_eig_bounds(n, rho[0], rho[n - 2])
    lo_deg, hi_deg = randic_bounds_degrees(g)
    randic_checks = [
        Check(0, "randic_degrees", lo_deg, hi_deg, r),
        Check(0, "randic_global", randic_lower_global(n), math.inf, r),
        Check(0, "randic_extreme_rho1", ext.lower_rho1, ext.upper_rho1, r),
        Check(0, "randic_extreme_rho_last", ext.lower_rho_last, ext.upper_rho_last, r),
        Check(0, "randic_extreme", ext.lo, ext.hi, r),
    ]
    rep = Report(
        n=n,
        m=g.m,
        degrees=sorted(g.degrees, reverse=True),
        source=source,
        edges=list(g.edges),
        spectrum=list(rho),
        randic=r,
        identity_residuals=moment_check(spec, r),
        bounds=bounds,
        randic_bounds=randic_checks,
        tolerance=tol,
    )
    rep.flags = derive_flags(rep)
    return rep
