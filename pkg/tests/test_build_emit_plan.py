import collections
import json
from pathlib import Path

import pytest

from primeterm.expoly import (ExpoPoly, LinForm, build_F, emit, expand_stats, f32_parts,
                              fhat_parts, parse_json, pow2, qhat_plan, t_term, u_term, x)
from primeterm.expoly.emit import latex_monomial, record_monomial, to_json
from primeterm.term import parse_term
from primeterm.verify import FHAT_SAMPLES, suite_structure

LISTING = Path(__file__).parent / "data" / "fhat_listing.json"


@pytest.fixture(scope="module")
def fhat():
    return build_F("Fhat42")


def test_fhat_counts(fhat):
    mons, nvars, max_deg, _ = expand_stats(fhat)
    assert (mons, nvars, max_deg) == (498, 42, 10)
    assert fhat.variables() == set(range(1, 43))
    assert fhat.uses_n()


def test_fhat_constant(fhat):
    assert fhat.constant_term() == 270
    const = [m for m in fhat.monomials() if not m.degrees and m.exponent.is_constant]
    assert [latex_monomial(m) for m in const] == ["+ 270"]


def test_fhat_matches_published_listing(fhat):
    listed = collections.Counter(record_monomial(r) for r in json.loads(LISTING.read_text()))
    assert listed == collections.Counter(fhat.monomials())


@pytest.mark.parametrize("latex,mono", FHAT_SAMPLES, ids=[s for s, _ in FHAT_SAMPLES])
def test_fhat_samples(fhat, latex, mono):
    assert mono in fhat.monomials()
    assert latex_monomial(mono) == latex


def test_fhat_is_sum_of_its_squares(fhat):
    total = ExpoPoly()
    for part in fhat_parts():
        total = total + part
    assert total == fhat
    assert len(fhat_parts()) == 7


def test_fhat_numeric_samples():
    ok, detail = suite_structure(samples=6, seed=11)
    assert ok, detail


def test_corrected_dialect_differs():
    corrected = build_F("Fhat42", "corrected")
    assert expand_stats(corrected)[:2] == (515, 42)


def test_unknown_variant():
    with pytest.raises(ValueError):
        build_F("F99")


def test_f32_counts():
    F = build_F("F32")
    mons, nvars, _, _ = expand_stats(F)
    assert nvars == 32
    assert (mons, len(F.collapsed())) == (25993, 3151)
    total = ExpoPoly()
    for part in f32_parts():
        total = total + part
    assert total == F


def test_json_deterministic_and_round_trips(fhat):
    text = to_json(fhat)
    assert text == to_json(build_F("Fhat42"))
    again = parse_json(text)
    assert to_json(again) == text
    assert again.collapsed() == fhat.collapsed()
    assert len(json.loads(text)) == 498


def test_json_single_record():
    p = 3 * x(2) ** 2 * pow2(LinForm.of(const=1, n=1, x4=5))
    assert json.loads(emit(p, "json")) == [
        {"c0": "3", "e_const": 1, "e_n": 1,
         "vars": [{"x": 2, "deg": 2, "e2": 0}, {"x": 4, "deg": 0, "e2": 5}]}]


def test_latex_and_text_formats():
    p = 5 * x(1) + x(2) * pow2(LinForm.of(n=1, const=2)) - 270
    assert emit(p, "latex").splitlines() == ["-270", "+ 2^{n + 2} x_{2}", "+ 5 x_{1}"]
    assert emit(ExpoPoly.const(270), "latex") == "+ 270"
    assert "x2^2" in emit(x(2) ** 2, "text")


def test_count_format(fhat):
    assert emit(fhat, "count") == "monomials=498 variables=42"


def test_unknown_format(fhat):
    with pytest.raises(ValueError):
        emit(fhat, "yaml")


def test_plan_counts():
    plan = qhat_plan()
    assert plan.k == 42
    assert plan.counts() == {"descriptors": 498, "C": 1, "A": 497}
    assert [d.coefficient for d in plan.free] == ["270"]
    assert all(len(d.factors) == 42 for d in plan.descriptors if d.kind == "A")
    assert max(f.degree for d in plan.descriptors for f in d.factors) == 10


def test_plan_towers():
    assert t_term(1) == parse_term("2^(2^(2^18))")
    assert u_term() == parse_term("2^(2^(9 * 2^(2^(2^(2*n^4 + 16))) + 8) + 9)")
    plan = qhat_plan()
    assert "descriptors=498" in plan.summary()


def test_plan_descriptor_text():
    plan = qhat_plan()
    a = next(d for d in plan.descriptors if d.kind == "A" and d.monomial.exponent.n)
    text = a.describe()
    assert text.startswith("A: ") and "2^" in text and text.count("G_") == 42
