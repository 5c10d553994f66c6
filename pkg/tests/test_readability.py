import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from levelforge.readability import (
    ComplexityLevel,
    Scheme,
    SchemeMismatchError,
    UnsupportedSchemeError,
    cefr6_to_cefr3,
    corpus_fkgl,
    fkgl,
    fkgl_from_counts,
    level_delta,
    level_of,
    round2,
)


class TestFkglFromCounts:
    def test_floor(self):
        assert math.isclose(fkgl_from_counts(1, 1, 1), -3.40, abs_tol=1e-9)

    def test_direct_substitution(self):
        # 0.39*10 + 11.8*1 - 15.59 = 0.11
        assert math.isclose(fkgl_from_counts(10, 1, 10), 0.11, abs_tol=1e-9)

    def test_zero_words_rejected(self):
        with pytest.raises(ValueError):
            fkgl_from_counts(0, 1, 0)

    def test_zero_sentences_rejected(self):
        with pytest.raises(ValueError):
            fkgl_from_counts(5, 0, 5)

    @given(
        st.integers(min_value=1, max_value=200),
        st.integers(min_value=1, max_value=20),
    )
    def test_monotone_in_syllables(self, words, sents):
        lo = fkgl_from_counts(words, sents, words)
        hi = fkgl_from_counts(words, sents, 2 * words)
        assert hi > lo


class TestFkglText:
    def test_fixture_suite(self, fkgl_fixture):
        for row in fkgl_fixture:
            assert math.isclose(fkgl(row["text"]), row["fkgl"], abs_tol=1e-6), row["text"]

    def test_simple_sentence(self):
        # "I am here.": 3 words, 1 sentence, 3 syllables -> -2.62
        assert round2(fkgl("I am here.")) == -2.62

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            fkgl("")


class TestCorpusFkgl:
    def test_pooled_not_averaged(self):
        texts = ["I am here.", "Photosynthesis converts sunlight into chemical energy."]
        pooled = corpus_fkgl(texts)
        mean_of = (fkgl(texts[0]) + fkgl(texts[1])) / 2
        assert pooled != pytest.approx(mean_of)

    def test_single_text_matches_fkgl(self):
        text = "The cat sat on the mat."
        assert corpus_fkgl([text]) == pytest.approx(fkgl(text))

    def test_concat_invariance(self):
        # Pooling two texts equals scoring them as one document when
        # sentence boundaries are preserved.
        a, b = "The cat sat on the mat.", "Dogs bark loudly at night."
        assert corpus_fkgl([a, b]) == pytest.approx(fkgl(a + " " + b))

    def test_empty_corpus_rejected(self):
        with pytest.raises(ValueError):
            corpus_fkgl([])


class TestComplexityLevel:
    def test_cefr6_labels_roundtrip(self):
        for label in ("A1", "A2", "B1", "B2", "C1", "C2"):
            assert ComplexityLevel.cefr6(label).label == label

    def test_cefr6_rank_order(self):
        ranks = [ComplexityLevel.cefr6(l).complexity_rank for l in ("A1", "A2", "B1", "B2", "C1", "C2")]
        assert ranks == sorted(ranks)

    def test_newsela_rank_inverted(self):
        # Newsela 0 is the complex original, 4 the simplest rewrite.
        assert (
            ComplexityLevel.newsela(0).complexity_rank
            > ComplexityLevel.newsela(4).complexity_rank
        )

    def test_fkgl_value_rounded(self):
        assert ComplexityLevel.fkgl(3.14159).value == 3.14
        assert ComplexityLevel.fkgl(2.675).value == 2.68

    def test_invalid_cefr6(self):
        with pytest.raises(ValueError):
            ComplexityLevel(Scheme.CEFR6, 6)

    def test_invalid_newsela(self):
        with pytest.raises(ValueError):
            ComplexityLevel.newsela(5)

    def test_parse(self):
        assert ComplexityLevel.parse(Scheme.CEFR6, "b2").label == "B2"
        assert ComplexityLevel.parse(Scheme.NEWSELA, "3").value == 3
        assert ComplexityLevel.parse(Scheme.FKGL, "7.125").value == 7.13


class TestLevelOf:
    def test_fkgl_computed(self):
        level = level_of("I am here.")
        assert level.scheme is Scheme.FKGL
        assert level.value == -2.62

    def test_other_schemes_rejected(self):
        for scheme in (Scheme.CEFR6, Scheme.CEFR3, Scheme.NEWSELA):
            with pytest.raises(UnsupportedSchemeError):
                level_of("Some text here.", scheme)


class TestCefr6ToCefr3:
    def test_collapse(self):
        assert cefr6_to_cefr3(ComplexityLevel.cefr6("A1")).label == "A"
        assert cefr6_to_cefr3(ComplexityLevel.cefr6("A2")).label == "A"
        assert cefr6_to_cefr3(ComplexityLevel.cefr6("B1")).label == "B"
        assert cefr6_to_cefr3(ComplexityLevel.cefr6("B2")).label == "B"
        assert cefr6_to_cefr3(ComplexityLevel.cefr6("C1")).label == "C"
        assert cefr6_to_cefr3(ComplexityLevel.cefr6("C2")).label == "C"

    def test_wrong_scheme(self):
        with pytest.raises(SchemeMismatchError):
            cefr6_to_cefr3(ComplexityLevel.cefr3("A"))

    @given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=5))
    def test_order_preserving(self, i, j):
        a = cefr6_to_cefr3(ComplexityLevel(Scheme.CEFR6, i))
        b = cefr6_to_cefr3(ComplexityLevel(Scheme.CEFR6, j))
        if i <= j:
            assert a.value <= b.value


class TestLevelDelta:
    def test_cefr6_example(self):
        # A1 vs B1: two levels apart, A1 simpler.
        assert level_delta(ComplexityLevel.cefr6("A1"), ComplexityLevel.cefr6("B1")) == -2

    def test_newsela_direction(self):
        # Newsela 0 is more complex than Newsela 4.
        assert level_delta(ComplexityLevel.newsela(0), ComplexityLevel.newsela(4)) == 4

    def test_fkgl(self):
        d = level_delta(ComplexityLevel.fkgl(8.50), ComplexityLevel.fkgl(3.25))
        assert d == 5.25

    def test_scheme_mismatch(self):
        with pytest.raises(SchemeMismatchError):
            level_delta(ComplexityLevel.cefr6("A1"), ComplexityLevel.cefr3("A"))

    @given(
        st.integers(min_value=0, max_value=5),
        st.integers(min_value=0, max_value=5),
    )
    def test_antisymmetry(self, i, j):
        a = ComplexityLevel(Scheme.CEFR6, i)
        b = ComplexityLevel(Scheme.CEFR6, j)
        assert level_delta(a, b) == -level_delta(b, a)


class TestRound2:
    def test_half_up(self):
        assert round2(2.675) == 2.68
        assert round2(2.665) == 2.67
        assert round2(-2.675) == -2.68

    def test_already_rounded(self):
        assert round2(1.5) == 1.5
