import csv
import io
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normlap.graph import gen_family, gen_random_connected
from normlap.report import CSV_COLUMNS, FAMILIES, Report, derive_flags, evaluate


def _by(rep, method, index=0):
    return next(c for c in rep.bounds + rep.randic_bounds if c.method == method and c.index == index)


def test_c4_report():
    rep = evaluate(gen_family("cycle", 4), "C4")
    assert rep.all_pass
    assert set(rep.flags) == set(FAMILIES)
    t1 = _by(rep, "theorem", 1)
    assert (t1.lower, t1.upper) == pytest.approx((5 / 3, 2.0), abs=1e-12)
    assert rep.randic == 1.0
    assert "theorem:1:upper" in rep.equality_attainments()


def test_star_report():
    rep = evaluate(gen_family("star", 4))
    c1 = _by(rep, "corollary_degree", 1)
    assert (c1.lower, c1.upper) == pytest.approx((4 / 3, 8 / 3), abs=1e-12)
    assert rep.all_pass


def test_requires_three_vertices():
    with pytest.raises(ValueError):
        evaluate(gen_family("complete", 2))


@given(st.integers(3, 25), st.floats(0.1, 1.0), st.integers(0, 2**32))
@settings(max_examples=30, deadline=None)
def test_json_round_trip_and_flag_consistency(n, p, seed):
    rep = evaluate(gen_random_connected(n, p, seed), f"r{seed}")
    text = rep.to_json()
    assert "Infinity" not in text and "NaN" not in text
    back = Report.from_json(text)
    assert back.spectrum == rep.spectrum
    assert back.randic == rep.randic
    assert back.identity_residuals == rep.identity_residuals
    for a, b in zip(rep.bounds + rep.randic_bounds, back.bounds + back.randic_bounds):
        assert (a.index, a.method, a.lower, a.upper, a.value) == (b.index, b.method, b.lower, b.upper, b.value)
    assert derive_flags(back) == rep.flags == back.flags
    assert back.to_json() == text


def test_json_layout():
    d = json.loads(evaluate(gen_family("path", 5), "P5").to_json())
    assert {"graph", "spectrum", "randic", "identities", "bounds", "randic_bounds",
            "flags", "tolerance"} <= set(d)
    row = d["bounds"][0]
    assert set(row) == {"index", "method", "lower", "upper", "value", "pass", "margin_lower", "margin_upper"}
    assert row["method"] == "classical" and row["upper"] == "unbounded"


def test_flags_follow_margins():
    rep = evaluate(gen_family("cycle", 5))
    # push one theorem upper end below the eigenvalue it must cover
    c = _by(rep, "theorem", 1)
    c.upper = c.value - 1e-6
    flags = derive_flags(rep)
    assert not flags["theorem"]
    assert all(v for k, v in flags.items() if k not in ("theorem", "dominance", "nesting"))


def test_csv_layout():
    rep = evaluate(gen_family("complete", 4), "K4")
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert tuple(rows[0]) == CSV_COLUMNS
    body = rows[1:]
    assert len(body) == len(rep.bounds) + len(rep.randic_bounds) + 1
    assert body[-1][3] == "summary" and body[-1][-1] == "true"
    assert all(float(r[CSV_COLUMNS.index("value")]) == v
               for r, v in zip(body, [c.value for c in rep.bounds]))


def test_text_output_mentions_everything():
    text = evaluate(gen_family("star", 5), "star").to_text()
    for word in ("spectrum", "R_-1", "theorem", "corollary_degree", "randic_extreme", "unbounded", "flags"):
        assert word in text


def test_infinite_margins_serialize_as_marker():
    rep = evaluate(gen_family("path", 4))
    d = rep.to_dict()
    glob = next(r for r in d["randic_bounds"] if r["method"] == "randic_global")
    assert glob["upper"] == "unbounded" and glob["margin_upper"] == "unbounded"
    assert math.isinf(Report.from_dict(d).randic_bounds[1].upper)
