from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from teddy.catalog import Catalog, CatalogValidationError, Label, counterpart
from teddy.extract import DiffParseError
from teddy.index import Measure, ThresholdConfig
from teddy.recommend import (
    PREVENTION_CONFIG,
    ConsistencyError,
    Recommendation,
    analyze_diff,
    render_comment,
)


def added_file_diff(path: str, text: str) -> str:
    lines = text.splitlines()
    body = "".join(f"+{line}\n" for line in lines)
    return f"diff --git a/{path} b/{path}\n--- /dev/null\n+++ b/{path}\n@@ -0,0 +1,{len(lines)} @@\n{body}"


def test_default_config_is_c4():
    assert PREVENTION_CONFIG == ThresholdConfig.uniform(Measure.NTR, 40)


def test_verbatim_swap_gives_one_recommendation(catalog):
    (rec,) = analyze_diff(added_file_diff("app.py", catalog.get("swap-npy-0").snippet), catalog)
    assert rec.idiom_type == "variable-swapping"
    assert rec.matched_npy == "swap-npy-0"
    assert rec.suggested_py == "swap-py-0"
    assert (rec.file_path, rec.start_line, rec.end_line) == ("app.py", 1, 3)
    assert rec.score == 100


def test_pythonic_with_open_gives_nothing(catalog):
    assert analyze_diff(added_file_diff("io.py", catalog.get("fileread-py-0").snippet), catalog) == []


def test_empty_diff(catalog):
    assert analyze_diff("", catalog) == []


def test_malformed_diff(catalog):
    with pytest.raises(DiffParseError):
        analyze_diff("--- a/x.py\n+++ b/x.py\n@@ nonsense @@\n+x = 1\n", catalog)


def test_broken_catalog_is_rejected(catalog):
    broken = Catalog(tuple(e for e in catalog if e.id != "swap-py-0"))
    with pytest.raises(CatalogValidationError):
        analyze_diff(added_file_diff("a.py", "x = 1\n"), broken)


def test_unlexable_run_is_skipped(catalog):
    diff = added_file_diff("a.py", 'x = """start of a docstring') + added_file_diff(
        "b.py", catalog.get("swap-npy-0").snippet
    )
    assert [r.file_path for r in analyze_diff(diff, catalog)] == ["b.py"]


def test_every_suggestion_is_the_exact_counterpart(catalog):
    for entry in catalog.with_label(Label.NPY):
        recs = analyze_diff(added_file_diff("f.py", entry.snippet), catalog)
        assert recs, entry.id
        for rec in recs:
            npy = catalog.get(rec.matched_npy)
            py = catalog.get(rec.suggested_py)
            assert npy.label is Label.NPY and py.label is Label.PY
            assert counterpart(catalog, npy.id) == py
            assert npy.idiom_type == py.idiom_type == rec.idiom_type


def rec(path, start, end="swap"):
    return Recommendation(path, start, start + 2, "swap-npy-0", "swap-py-0", Fraction(100), "variable-swapping")


def test_render_empty():
    assert render_comment([], None) == ""


def test_render_one_swap(catalog):
    text = render_comment([rec("app.py", 7)], catalog)
    assert "`app.py` lines 7-9" in text
    assert "```python\na, b = b, a\n```" in text
    assert catalog.get("swap-npy-0").description in text


def test_render_orders_sections(catalog):
    text = render_comment([rec("z.py", 1), rec("a.py", 5), rec("a.py", 2)], catalog)
    positions = [text.index(marker) for marker in ("`a.py` lines 2-4", "`a.py` lines 5-7", "`z.py` lines 1-3")]
    assert positions == sorted(positions)


def test_render_rejects_unknown_entries(catalog):
    bad = Recommendation("a.py", 1, 1, "nope", "swap-py-0", Fraction(50), "variable-swapping")
    with pytest.raises(ConsistencyError):
        render_comment([bad], catalog)


def test_markdown_is_deterministic(catalog):
    diff = added_file_diff("app.py", catalog.get("swap-npy-0").snippet + catalog.get("enumerate-npy-0").snippet)
    first = render_comment(analyze_diff(diff, catalog), catalog)
    assert first == render_comment(analyze_diff(diff, catalog), catalog)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["swap-npy-1", "enumerate-npy-2", "listcomp-npy-0", "ifstmt-npy-1", "format-npy-0"]),
       st.integers(0, 100), st.integers(0, 60))
def test_stricter_thresholds_never_add_recommendations(entry_id, base, bump):
    from teddy.catalog import load_bundled_catalog

    catalog = load_bundled_catalog()
    diff = added_file_diff("m.py", catalog.get(entry_id).snippet)
    loose = ThresholdConfig.uniform(Measure.NTR, base)
    strict = ThresholdConfig.uniform(Measure.NTR, min(100, base + bump))
    strict_locs = {r.location for r in analyze_diff(diff, catalog, strict)}
    assert strict_locs <= {r.location for r in analyze_diff(diff, catalog, loose)}
