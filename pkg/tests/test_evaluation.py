from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from teddy.catalog import Catalog
from teddy.evaluation import (
    BUILTIN_CONFIGS,
    MetricsReport,
    QueryResult,
    TruthError,
    average_precision,
    bundled_truth_path,
    evaluate,
    load_truth,
    overall_recall,
    query_recall,
    reciprocal_rank,
    render_json,
    render_table,
    sweep,
    validate_truth,
)
from teddy.index import Measure, ThresholdConfig


def test_average_precision_examples():
    assert average_precision(["A"], {"A"}) == 1
    assert average_precision(["X", "A"], {"A"}) == Fraction(1, 2)
    assert average_precision(["A", "X", "B"], {"A", "B"}) == Fraction(5, 6)
    assert average_precision([], {"A"}) == 0


def test_average_precision_needs_relevant_items():
    with pytest.raises(ValueError):
        average_precision(["A"], set())


def test_reciprocal_rank_examples():
    assert reciprocal_rank(["A", "B"], {"A"}) == 1
    assert reciprocal_rank(["B", "A"], {"A"}) == Fraction(1, 2)
    assert reciprocal_rank(["B", "C"], {"A"}) == 0


THREE = [
    QueryResult("q1", ("a", "x"), frozenset({"a", "b"})),
    QueryResult("q2", ("c", "d"), frozenset({"c", "d"})),
    QueryResult("q3", (), frozenset({"e"})),
]


def test_query_and_overall_recall_examples():
    assert query_recall(THREE) == Fraction(3, 4)
    assert overall_recall(THREE) == Fraction(1, 2)


def test_recall_when_nothing_returns():
    empty = [QueryResult("q", (), frozenset({"a"})), QueryResult("r", (), frozenset({"b"}))]
    assert query_recall(empty) is None
    assert overall_recall(empty) == 0


def test_perfect_returned_queries():
    results = [QueryResult("q", ("a", "b"), frozenset({"a", "b"})), QueryResult("r", (), frozenset({"c"}))]
    assert query_recall(results) == 1


def test_ranked_list_rejects_duplicates():
    with pytest.raises(ValueError):
        QueryResult("q", ("a", "a"), frozenset({"a"}))


def test_report_averages():
    report = MetricsReport.from_results(THREE)
    assert report.n_returned == 2 and report.n_queries == 3
    # q1: AP 1/2, RR 1; q2: AP 1, RR 1; q3 returned nothing
    assert report.map_score == Fraction(3, 4)
    assert report.mrr == 1
    assert report.map_all == Fraction(1, 2)
    assert report.mrr_all == Fraction(2, 3)
    assert report.to_dict()["QR"] == 0.75


def test_report_with_nothing_returned():
    report = MetricsReport.from_results([QueryResult("q", (), frozenset({"a"}))])
    assert report.map_score is None and report.qr is None
    assert report.to_dict()["MAP"] is None


# ---- properties ----

_items = [f"i{k}" for k in range(20)]


@st.composite
def query_results(draw):
    n = draw(st.integers(1, 10))
    results = []
    for q in range(n):
        relevant = draw(st.sets(st.sampled_from(_items), min_size=1, max_size=6))
        ranked = draw(st.lists(st.sampled_from(_items), unique=True, max_size=20))
        results.append(QueryResult(f"q{q}", tuple(ranked), frozenset(relevant)))
    return results


@given(query_results(), st.randoms(use_true_random=False))
def test_metrics_bounded_and_order_invariant(results, rnd):
    report = MetricsReport.from_results(results)
    values = [report.map_all, report.mrr_all, report.or_]
    values += [v for v in (report.map_score, report.mrr, report.qr) if v is not None]
    assert all(0 <= v <= 1 for v in values)
    if report.qr is not None:
        assert report.qr >= report.or_
    assert report.n_returned <= report.n_queries
    shuffled = list(results)
    rnd.shuffle(shuffled)
    assert MetricsReport.from_results(shuffled).to_dict() == report.to_dict()


# ---- harness on the bundled corpus ----


@pytest.fixture(scope="module")
def truth():
    return load_truth(bundled_truth_path())


def test_bundled_corpus_layout(truth, catalog):
    groups = [item.group for item in truth.corpus]
    assert (groups.count("Normal"), groups.count("Py"), groups.count("NPy")) == (30, 20, 20)
    assert validate_truth(truth, catalog) == []


def test_empty_relevant_sets_are_rejected(truth, catalog):
    hollow = type(truth)(truth.corpus, {qid: frozenset() for qid in truth.relevance})
    with pytest.raises(TruthError, match="query with empty relevant set"):
        evaluate(catalog, hollow, BUILTIN_CONFIGS["C4"])


def test_truth_file_errors(tmp_path):
    with pytest.raises(TruthError):
        load_truth(tmp_path / "missing.json")
    (tmp_path / "bad.json").write_text(json.dumps({"corpus": [{"id": "x"}]}))
    with pytest.raises(TruthError, match="malformed"):
        load_truth(tmp_path / "bad.json")


def test_single_verbatim_query_under_c4(tmp_path, catalog):
    entry = catalog.get("swap-npy-0")
    (tmp_path / "host.py").write_text("def f(a, b):\n" + "".join("    " + l + "\n" for l in entry.snippet.splitlines()))
    (tmp_path / "plain.py").write_text("def g(x):\n    return x * 2\n")
    subset = Catalog((entry, catalog.get("swap-py-0")))
    manifest = {
        "corpus": [
            {"id": "host", "path": "host.py", "group": "NPy"},
            {"id": "plain", "path": "plain.py", "group": "Normal"},
        ],
        "relevance": {"swap-npy-0": ["host"], "swap-py-0": ["plain"]},
    }
    (tmp_path / "truth.json").write_text(json.dumps(manifest))
    report = evaluate(subset, load_truth(tmp_path / "truth.json"), BUILTIN_CONFIGS["C4"])
    swap = next(r for r in report.per_query if r.query_id == "swap-npy-0")
    assert swap.ranked == ("host",)
    assert average_precision(swap.ranked, swap.relevant) == reciprocal_rank(swap.ranked, swap.relevant) == 1


def test_sweep_requires_configs(truth, catalog):
    with pytest.raises(ValueError):
        sweep(catalog, truth, [])


def test_four_row_table(truth, catalog):
    rows = sweep(catalog, truth, BUILTIN_CONFIGS)
    table = render_table(rows)
    lines = table.splitlines()
    assert len(lines) == 2 + 4
    assert [line.split()[0] for line in lines[2:]] == ["C1", "C2", "C3", "C4"]
    data = json.loads(render_json(rows))
    assert [row["name"] for row in data] == ["C1", "C2", "C3", "C4"]
    by_name = {row.name: row.report for row in rows}
    assert by_name["C4"].map_score > by_name["C1"].map_score
    assert by_name["C1"].or_ >= by_name["C4"].or_


def test_raising_thresholds_never_raises_or(truth, catalog):
    ors = [
        evaluate(catalog, truth, ThresholdConfig.uniform(Measure.NTR, t)).or_ for t in (0, 20, 40, 60, 80)
    ]
    assert ors == sorted(ors, reverse=True)
