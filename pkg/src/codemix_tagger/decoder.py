"""Log-space trigram Viterbi decoding, with a brute-force oracle.

Scores are log-probabilities with -inf for impossible events.  Ties are
broken deterministically toward the state whose (previous tag, current
tag) index pair is smallest in tag-set order; the brute-force oracle
implements the same rule, so the two decoders agree exactly.
"""

import itertools
import math
import weakref
from dataclasses import dataclass

import numpy as np

from .corpus import TaggedToken
from .errors import DecodeError, EmptyInput, TooLarge
from .features import assign_meta_tag, make_observation
from .model import BOS1, BOS2, EOS, emission_prob, transition_prob, unknown_scores

BRUTE_FORCE_MAX_OBS = 8
BRUTE_FORCE_MAX_TAGS = 6

NEG_INF = float("-inf")


@dataclass
class DecodeResult:
    tags: list
    score: float
    used_fallback: bool = False


def _log(p):
    return math.log(p) if p > 0.0 else NEG_INF


class _DecoderCache:
    """Per-model transition cube and emission-vector cache.

    Conditioning axes index real tags then BOS1, BOS2; the predicted axis
    indexes real tags then EOS.  Entries are logs of the exact values
    transition_prob / emission_prob return.
    """

    def __init__(self, model):
        self.model = model
        tags = list(model.tag_set)
        self.tags = tags
        r = len(tags)
        self.i_bos1 = r
        self.i_bos2 = r + 1
        self.i_eos = r
        cond = tags + [BOS1, BOS2]
        pred = tags + [EOS]
        cube = np.empty((r + 2, r + 2, r + 1))
        for i, t2 in enumerate(cond):
            for j, t1 in enumerate(cond):
                row = cube[i, j]
                for k, t0 in enumerate(pred):
                    row[k] = _log(transition_prob(model, t2, t1, t0))
        self.log_trans = cube
        self._emissions = {}

    def log_emissions(self, key):
        vec = self._emissions.get(key)
        if vec is None:
            model = self.model
            if model.counts.obs_total.get(key, 0) > 0:
                vec = np.array(
                    [_log(emission_prob(model, key, t)) for t in self.tags]
                )
            else:
                scores = unknown_scores(model, key)
                vec = np.array([_log(scores[t]) for t in self.tags])
            self._emissions[key] = vec
        return vec


_caches = weakref.WeakKeyDictionary()


def _cache_for(model):
    cache = _caches.get(model)
    if cache is None:
        cache = _DecoderCache(model)
        _caches[model] = cache
    return cache


def _fallback_tags(model, n):
    counts = model.counts.unigram
    best = None
    for t in model.tag_set:
        if best is None or counts[t] > counts[best]:
            best = t
    return [best] * n


def viterbi(model, obs):
    """Best tag sequence for an observation sequence.

    If every complete path has probability zero, falls back to the
    majority unigram tag at every position and flags the result.
    """
    if not obs:
        raise EmptyInput()
    cache = _cache_for(model)
    tags = cache.tags
    log_t = cache.log_trans
    n = len(obs)

    log_e = [cache.log_emissions(o) for o in obs]
    cands = [np.flatnonzero(np.isfinite(e)) for e in log_e]
    if any(len(c) == 0 for c in cands):
        return DecodeResult(_fallback_tags(model, n), NEG_INF, used_fallback=True)

    # Position 0: conditioning context is fixed at (BOS1, BOS2).
    delta = log_t[cache.i_bos1, cache.i_bos2, cands[0]] + log_e[0][cands[0]]

    if n == 1:
        # For a single token the EOS transition conditions on (BOS2, t_1).
        final = delta + log_t[cache.i_bos2, cands[0], cache.i_eos]
        best = int(np.argmax(final))
        score = float(final[best])
        if score == NEG_INF:
            return DecodeResult(_fallback_tags(model, n), NEG_INF, used_fallback=True)
        return DecodeResult([tags[cands[0][best]]], score)

    # Position 1: previous-previous tag is fixed at BOS2, so no backpointer.
    trans = log_t[cache.i_bos2][np.ix_(cands[0], cands[1])]
    delta = (delta[:, None] + trans) + log_e[1][cands[1]][None, :]

    backptrs = []
    for j in range(2, n):
        trans = log_t[np.ix_(cands[j - 2], cands[j - 1], cands[j])]
        scored = delta[:, :, None] + trans
        bp = np.argmax(scored, axis=0)
        delta = np.max(scored, axis=0) + log_e[j][cands[j]][None, :]
        backptrs.append(bp)

    final = delta + log_t[np.ix_(cands[n - 2], cands[n - 1], [cache.i_eos])][:, :, 0]
    flat = int(np.argmax(final))
    a, b = divmod(flat, final.shape[1])
    score = float(final[a, b])
    if score == NEG_INF:
        return DecodeResult(_fallback_tags(model, n), NEG_INF, used_fallback=True)

    path = [0] * n
    path[n - 2] = a
    path[n - 1] = b
    for j in range(n - 1, 1, -1):
        c = int(backptrs[j - 2][path[j - 1], path[j]])
        path[j - 2] = c
    return DecodeResult(
        [tags[cands[j][path[j]]] for j in range(n)], score
    )


def sequence_score(model, obs, tag_seq):
    """Log-score of one complete tagging, summed left to right.

    The accumulation order matches the Viterbi lattice exactly, so equal
    paths produce bitwise-equal scores.
    """
    score = 0.0
    prev2, prev = BOS1, BOS2
    for o, t in zip(obs, tag_seq):
        score = score + _log(transition_prob(model, prev2, prev, t))
        score = score + _log(emission_prob(model, o, t))
        prev2, prev = prev, t
    return score + _log(transition_prob(model, prev2, prev, EOS))


def _tie_key_order(n):
    # Mirrors backward tie resolution: the final (prev, cur) state pair
    # first, then earlier positions from right to left.
    if n == 1:
        return [0]
    return [n - 2, n - 1] + list(range(n - 3, -1, -1))


def brute_force_decode(model, obs):
    """Exhaustive argmax over all tag sequences; test oracle for viterbi."""
    if not obs:
        raise EmptyInput()
    tags = list(model.tag_set)
    if not tags:
        raise DecodeError("cannot decode with an empty tag set")
    n = len(obs)
    if n > BRUTE_FORCE_MAX_OBS or len(tags) > BRUTE_FORCE_MAX_TAGS:
        raise TooLarge(n, len(tags))

    order = _tie_key_order(n)
    best_score = None
    best_key = None
    best_seq = None
    for idx_seq in itertools.product(range(len(tags)), repeat=n):
        seq = [tags[i] for i in idx_seq]
        score = sequence_score(model, obs, seq)
        key = tuple(idx_seq[i] for i in order)
        if (
            best_score is None
            or score > best_score
            or (score == best_score and key < best_key)
        ):
            best_score, best_key, best_seq = score, key, seq
    if best_score == NEG_INF:
        return DecodeResult(_fallback_tags(model, n), NEG_INF, used_fallback=True)
    return DecodeResult(best_seq, best_score)


def tag_sentence(model, dictionary, sentence):
    """Assign POS tags to one sentence; meta-tags never reach the output."""
    obs = [
        make_observation(tok, assign_meta_tag(tok, dictionary, model.config.mode))
        for tok in sentence
    ]
    result = viterbi(model, obs)
    return [
        TaggedToken(tok.word, tok.lang_tag, tag)
        for tok, tag in zip(sentence, result.tags)
    ]
