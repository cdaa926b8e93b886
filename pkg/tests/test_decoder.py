import math
import random

import pytest

import helpers
from codemix_tagger import (
    BOS1,
    BOS2,
    EOS,
    EmptyInput,
    MetaTag,
    ObservationKey,
    TaggedToken,
    TooLarge,
    brute_force_decode,
    emission_prob,
    sequence_score,
    tag_sentence,
    train,
    transition_prob,
    viterbi,
)
from codemix_tagger import decoder as decoder_mod


def obs_of(words, lang="en"):
    return [ObservationKey(w, MetaTag.YYYY, lang) for w in words]


class TestViterbi:
    def test_empty_input(self, micro_model_x5):
        with pytest.raises(EmptyInput):
            viterbi(micro_model_x5, [])

    def test_single_tag_model_always_that_tag(self):
        model = train([[TaggedToken("a", "en", "X"), TaggedToken("b", "en", "X")]] * 3)
        result = viterbi(model, obs_of(["b", "zz", "a", "q"]))
        assert result.tags == ["X", "X", "X", "X"]

    def test_micro_corpus_decodes_itself(self, micro_model_x5):
        result = viterbi(micro_model_x5, obs_of(["a", "b"]))
        assert result.tags == ["X", "Y"]
        assert not result.used_fallback
        oracle = brute_force_decode(micro_model_x5, obs_of(["a", "b"]))
        assert oracle.tags == result.tags
        assert oracle.score == result.score

    def test_score_matches_independent_recompute(self, micro_model_x5):
        # ends in "b" so the only observed pre-EOS context stays reachable
        obs = obs_of(["a", "b", "zz", "a", "b"])
        result = viterbi(micro_model_x5, obs)
        assert not result.used_fallback
        recomputed = sequence_score(micro_model_x5, obs, result.tags)
        assert recomputed == result.score

    def test_determinism(self, micro_model_x5):
        obs = obs_of(["a", "zz", "b"])
        first = viterbi(micro_model_x5, obs)
        for _ in range(3):
            again = viterbi(micro_model_x5, obs)
            assert again == first

    def test_fallback_when_no_path_has_mass(self, micro_corpus):
        # A single training sentence yields lambdas (0, 0, 1), so the
        # sentence-start context (no counted bigram) zeroes every path.
        model = train(micro_corpus)
        assert model.lambdas.lam1 == 0.0
        result = viterbi(model, obs_of(["a", "b"]))
        assert result.used_fallback
        assert result.score == float("-inf")
        # majority unigram tag, ties to first appearance: X
        assert result.tags == ["X", "X"]
        oracle = brute_force_decode(model, obs_of(["a", "b"]))
        assert oracle == result

    def test_monotone_invariance_under_emission_scaling(self, monkeypatch):
        model = train(helpers.synthetic_corpus(25, seed=17))
        rng = random.Random(4)
        sentences = [helpers.random_test_sentence(rng) for _ in range(10)]
        observations = [
            obs_of([t.word for t in sent], "en") for sent in sentences
        ]
        baseline = [viterbi(model, obs).tags for obs in observations]

        scale = 7.5
        orig_emission = decoder_mod.emission_prob
        orig_unknown = decoder_mod.unknown_scores
        monkeypatch.setattr(
            decoder_mod,
            "emission_prob",
            lambda m, o, t: scale * orig_emission(m, o, t),
        )
        monkeypatch.setattr(
            decoder_mod,
            "unknown_scores",
            lambda m, o: {t: scale * v for t, v in orig_unknown(m, o).items()},
        )
        decoder_mod._caches.clear()
        scaled = [viterbi(model, obs).tags for obs in observations]
        assert scaled == baseline
        decoder_mod._caches.clear()


class TestBruteForce:
    def test_length_one_is_direct_argmax(self):
        # X ends half the sentences and Y the other half, so a one-token
        # sequence has mass under either tag and the argmax is decisive.
        model = train(
            [[TaggedToken("a", "en", "X")]] * 3
            + [[TaggedToken("b", "en", "Y")]] * 2
        )
        obs = obs_of(["a"])
        best_tag, best_score = None, -math.inf
        for t in model.tag_set:
            parts = [
                transition_prob(model, BOS1, BOS2, t),
                emission_prob(model, obs[0], t),
                transition_prob(model, BOS2, t, EOS),
            ]
            score = sum(math.log(p) if p > 0 else -math.inf for p in parts)
            if score > best_score:
                best_tag, best_score = t, score
        assert best_tag is not None
        result = brute_force_decode(model, obs)
        assert result.tags == [best_tag]
        assert viterbi(model, obs).tags == [best_tag]

    def test_length_one_unreachable_end_falls_back(self, micro_model_x5):
        # the only observed pre-EOS context is (X, Y): a single token can
        # never reach it, so both decoders agree on the fallback
        result = brute_force_decode(micro_model_x5, obs_of(["a"]))
        assert result.used_fallback and result.tags == ["X"]
        assert viterbi(micro_model_x5, obs_of(["a"])) == result

    def test_guards(self, micro_model_x5):
        with pytest.raises(TooLarge):
            brute_force_decode(micro_model_x5, obs_of(["a"] * 9))
        big = train(
            [
                [TaggedToken(f"w{i}", "en", f"T{i}") for i in range(7)]
            ]
        )
        with pytest.raises(TooLarge):
            brute_force_decode(big, obs_of(["w0"]))

    def test_exhaustive_agreement_short_inputs(self, micro_model_x5):
        for words in [["a"], ["b", "a"], ["a", "zz", "b"], ["zz", "zz"]]:
            obs = obs_of(words)
            assert viterbi(micro_model_x5, obs) == brute_force_decode(
                micro_model_x5, obs
            )


class TestTagSentence:
    def test_shape_and_no_boundary_tags(self, micro_model_x5):
        sent = [TaggedToken("a", "en"), TaggedToken("zz", "bn"), TaggedToken("b", "en")]
        tagged = tag_sentence(micro_model_x5, None, sent)
        assert len(tagged) == len(sent)
        for before, after in zip(sent, tagged):
            assert (after.word, after.lang_tag) == (before.word, before.lang_tag)
            assert after.pos_tag not in (BOS1, BOS2, EOS)
            assert after.pos_tag in micro_model_x5.tag_set

    def test_end_to_end_unambiguous_fixture(self, micro_model_x5):
        # every observation maps to one tag and transitions are deterministic
        sent = [TaggedToken("a", "en"), TaggedToken("b", "en")]
        tagged = tag_sentence(micro_model_x5, None, sent)
        assert [t.pos_tag for t in tagged] == ["X", "Y"]
