"""Count statistics, deleted-interpolation smoothing and probability queries.

Training folds a gold-tagged corpus into n-gram count tables over the
padded tag sequence BOS1, BOS2, t_1..t_n, EOS, learns the interpolation
weights by leave-one-out counting over tag trigrams, and builds a suffix
model over the pseudo-words of rare observations (training frequency at
most ``rare_threshold``) for unknown-observation emission scores.
"""

import math
import warnings
from collections import Counter
from dataclasses import dataclass, field

from .errors import EmptyCorpus, KnownObservation, MissingTag, UnknownTag
from .features import (
    CONSTRAINED,
    MODES,
    assign_meta_tag,
    make_observation,
    make_pseudo_word,
)

BOS1 = "-BOS1-"
BOS2 = "-BOS2-"
EOS = "-EOS-"
BOUNDARY_TAGS = (BOS1, BOS2, EOS)

EMISSION_VARIANTS = ("paper", "conditional")


@dataclass(frozen=True)
class ModelConfig:
    mode: str = CONSTRAINED
    emission_variant: str = "paper"
    max_suffix_len: int = 10
    rare_threshold: int = 2

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.emission_variant not in EMISSION_VARIANTS:
            raise ValueError(f"unknown emission variant {self.emission_variant!r}")
        if self.max_suffix_len < 0:
            raise ValueError("max_suffix_len must be >= 0")
        if self.rare_threshold < 0:
            raise ValueError("rare_threshold must be >= 0")


@dataclass(eq=False)
class TagSet:
    """POS tags in order of first appearance in the training data."""

    tags: list

    def __post_init__(self):
        self.index = {tag: i for i, tag in enumerate(self.tags)}
        if len(self.index) != len(self.tags):
            raise ValueError("duplicate tags in tag set")

    def __contains__(self, tag):
        return tag in self.index

    def __len__(self):
        return len(self.tags)

    def __iter__(self):
        return iter(self.tags)


@dataclass(eq=False)
class CountTables:
    unigram: Counter = field(default_factory=Counter)
    bigram: Counter = field(default_factory=Counter)
    trigram: Counter = field(default_factory=Counter)
    joint: Counter = field(default_factory=Counter)
    obs_total: Counter = field(default_factory=Counter)
    token_total: int = 0


@dataclass(frozen=True)
class InterpolationWeights:
    lam1: float  # unigram weight
    lam2: float  # bigram weight
    lam3: float  # trigram weight


@dataclass(eq=False)
class SuffixModel:
    max_suffix_len: int
    theta: float
    counts: dict = field(default_factory=dict)  # (suffix, tag) -> count
    suffix_totals: dict = field(default_factory=dict)  # suffix -> count
    tag_prior: dict = field(default_factory=dict)  # tag -> ML unigram prob


@dataclass(eq=False)
class TrainedModel:
    """Immutable bundle of everything a tagging run needs.

    All probability queries are pure reads; a model may be shared across
    threads freely.
    """

    tag_set: TagSet
    counts: CountTables
    lambdas: InterpolationWeights
    suffix: SuffixModel
    config: ModelConfig


def _padded_tags(sentence, s_idx):
    tags = []
    for t_idx, token in enumerate(sentence):
        if token.pos_tag is None:
            raise MissingTag(s_idx, t_idx)
        tags.append(token.pos_tag)
    return tags


def accumulate_counts(corpus, dictionary=None, config=ModelConfig()):
    """First training pass: n-gram and observation counts.

    Returns (counts, instances) where instances is the flat list of
    (observation key, gold tag) pairs in corpus order, reused by the
    suffix model pass.
    """
    counts = CountTables()
    instances = []
    for s_idx, sentence in enumerate(corpus):
        tags = _padded_tags(sentence, s_idx)
        for tag in tags:
            if tag in BOUNDARY_TAGS:
                raise ValueError(f"training tag {tag!r} collides with a boundary tag")
        padded = [BOS1, BOS2] + tags + [EOS]
        counts.unigram.update(tags)
        # Bigrams start at BOS2 (the (BOS1, BOS2) pair is never counted);
        # trigrams cover the whole padded sequence.
        for i in range(1, len(padded) - 1):
            counts.bigram[(padded[i], padded[i + 1])] += 1
        for i in range(len(padded) - 2):
            counts.trigram[(padded[i], padded[i + 1], padded[i + 2])] += 1
        counts.token_total += len(tags)
        for token, tag in zip(sentence, tags):
            meta = assign_meta_tag(token, dictionary, config.mode)
            key = make_observation(token, meta)
            counts.joint[(key, tag)] += 1
            counts.obs_total[key] += 1
            instances.append((key, tag))
    return counts, instances


def deleted_interpolation(counts):
    """TnT-style leave-one-out weighting of the three tag n-gram orders.

    Each trigram occurrence votes for the n-gram order whose leave-one-out
    estimate is largest; zero-denominator estimates count as 0 and ties go
    to the higher order.  The accumulated votes are normalized to sum to 1.
    """
    acc1 = acc2 = acc3 = 0.0
    unigram = counts.unigram
    bigram = counts.bigram
    n = counts.token_total

    def loo(num, den):
        return 0.0 if den == 0 else num / den

    for (t1, t2, t3), c in counts.trigram.items():
        f3 = loo(c - 1, bigram.get((t1, t2), 0) - 1)
        f2 = loo(bigram.get((t2, t3), 0) - 1, unigram.get(t2, 0) - 1)
        f1 = loo(unigram.get(t3, 0) - 1, n - 1)
        best = max(f3, f2, f1)
        if f3 == best:
            acc3 += c
        elif f2 == best:
            acc2 += c
        else:
            acc1 += c
    total = acc1 + acc2 + acc3
    if total == 0:
        warnings.warn(
            "deleted interpolation saw no usable trigrams; falling back to "
            "a pure unigram model",
            RuntimeWarning,
        )
        return InterpolationWeights(1.0, 0.0, 0.0)
    return InterpolationWeights(acc1 / total, acc2 / total, acc3 / total)


def build_suffix_model(counts, instances, rare_threshold, max_suffix_len):
    """Suffix statistics over pseudo-words of rare training observations.

    Every rare instance contributes all suffixes of its pseudo-word up to
    ``max_suffix_len`` characters, including the empty suffix (the prior
    over rare instances).  theta is the sample standard deviation of the
    ML unigram tag probabilities, the successive-abstraction weight.
    """
    suffix_counts = {}
    suffix_totals = {}
    for key, tag in instances:
        if counts.obs_total[key] > rare_threshold:
            continue
        pseudo = make_pseudo_word(key)
        limit = min(max_suffix_len, len(pseudo))
        for k in range(limit + 1):
            s = pseudo[len(pseudo) - k:] if k else ""
            suffix_counts[(s, tag)] = suffix_counts.get((s, tag), 0) + 1
            suffix_totals[s] = suffix_totals.get(s, 0) + 1

    n = counts.token_total
    tag_prior = {tag: counts.unigram[tag] / n for tag in counts.unigram}
    priors = list(tag_prior.values())
    if len(priors) > 1:
        mean = sum(priors) / len(priors)
        theta = math.sqrt(
            sum((p - mean) ** 2 for p in priors) / (len(priors) - 1)
        )
    else:
        theta = 0.0
    return SuffixModel(
        max_suffix_len=max_suffix_len,
        theta=theta,
        counts=suffix_counts,
        suffix_totals=suffix_totals,
        tag_prior=tag_prior,
    )


def train(corpus, dictionary=None, config=ModelConfig()):
    """Train a model from a gold-tagged corpus."""
    if not corpus:
        raise EmptyCorpus()
    counts, instances = accumulate_counts(corpus, dictionary, config)
    tag_order = []
    seen = set()
    for sentence in corpus:
        for token in sentence:
            if token.pos_tag not in seen:
                seen.add(token.pos_tag)
                tag_order.append(token.pos_tag)
    lambdas = deleted_interpolation(counts)
    suffix = build_suffix_model(
        counts, instances, config.rare_threshold, config.max_suffix_len
    )
    return TrainedModel(
        tag_set=TagSet(tag_order),
        counts=counts,
        lambdas=lambdas,
        suffix=suffix,
        config=config,
    )


def _check_tag(model, tag):
    if tag not in model.tag_set and tag not in BOUNDARY_TAGS:
        raise UnknownTag(tag)


def transition_prob(model, t2, t1, t0):
    """Smoothed P(t0 | t1, t2) with t2 the older conditioning tag.

    Convex combination of the trigram, bigram and unigram ML estimates;
    any estimate with a zero denominator contributes 0.
    """
    for tag in (t2, t1, t0):
        _check_tag(model, tag)
    c = model.counts
    lam = model.lambdas
    big = c.bigram.get((t2, t1), 0)
    ml3 = c.trigram.get((t2, t1, t0), 0) / big if big else 0.0
    uni = c.unigram.get(t1, 0)
    ml2 = c.bigram.get((t1, t0), 0) / uni if uni else 0.0
    ml1 = c.unigram.get(t0, 0) / c.token_total if c.token_total else 0.0
    return lam.lam3 * ml3 + lam.lam2 * ml2 + lam.lam1 * ml1


def emission_prob(model, key, tag):
    """Observation probability; delegates to unknown_prob for unseen keys."""
    if tag not in model.tag_set:
        raise UnknownTag(tag)
    total = model.counts.obs_total.get(key, 0)
    if total == 0:
        return unknown_prob(model, key, tag)
    joint = model.counts.joint.get((key, tag), 0)
    if model.config.emission_variant == "paper":
        return joint / total
    return joint / model.counts.unigram[tag]


def _matched_suffixes(suffix_model, pseudo):
    """Suffixes of pseudo stored in the model, shortest first, empty excluded."""
    chain = []
    limit = min(suffix_model.max_suffix_len, len(pseudo))
    for k in range(1, limit + 1):
        s = pseudo[len(pseudo) - k:]
        if s not in suffix_model.suffix_totals:
            break
        chain.append(s)
    return chain


def suffix_distributions(model, key):
    """P(tag | suffix) at every abstraction level for an unknown key.

    Level 0 is the ML distribution over rare training instances (empty
    suffix); each further level blends the longer suffix's ML estimate
    with the previous level, weighted by theta.  Returns a list of
    {tag: prob} dicts, base level first.
    """
    sm = model.suffix
    tags = list(model.tag_set)
    pseudo = make_pseudo_word(key)
    empty_total = sm.suffix_totals.get("", 0)
    if empty_total == 0:
        # No rare instances at all: fall back to the unigram prior.
        base = {t: sm.tag_prior.get(t, 0.0) for t in tags}
    else:
        base = {t: sm.counts.get(("", t), 0) / empty_total for t in tags}
    levels = [base]
    theta = sm.theta
    for s in _matched_suffixes(sm, pseudo):
        total = sm.suffix_totals[s]
        prev = levels[-1]
        level = {
            t: (sm.counts.get((s, t), 0) / total + theta * prev[t]) / (1.0 + theta)
            for t in tags
        }
        levels.append(level)
    return levels


def unknown_prob(model, key, tag):
    """Emission score for an observation never seen in training.

    Successive abstraction over pseudo-word suffixes gives P(tag|suffix);
    Bayesian inversion by the unigram tag prior turns it into an emission
    score (0 where the prior is 0).
    """
    if tag not in model.tag_set:
        raise UnknownTag(tag)
    if model.counts.obs_total.get(key, 0) > 0:
        raise KnownObservation(key)
    posterior = suffix_distributions(model, key)[-1][tag]
    prior = model.suffix.tag_prior.get(tag, 0.0)
    return posterior / prior if prior > 0 else 0.0


def unknown_scores(model, key):
    """unknown_prob for every tag at once (decoder fast path)."""
    if model.counts.obs_total.get(key, 0) > 0:
        raise KnownObservation(key)
    last = suffix_distributions(model, key)[-1]
    prior = model.suffix.tag_prior
    return {
        t: (p / prior[t] if prior.get(t, 0.0) > 0 else 0.0)
        for t, p in last.items()
    }
