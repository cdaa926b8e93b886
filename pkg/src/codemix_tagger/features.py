"""Meta-tag assignment and observation / pseudo-word construction.

The HMM does not observe bare words: each token becomes the triplet
<word, meta-tag, language-tag>.  The meta-tag encodes hashtag structure
(HB = hash at the beginning, HE = hash elsewhere) or, in unconstrained
mode, the broad POS found in the dictionary; YYYY is the default.
"""

from enum import Enum
from typing import NamedTuple

CONSTRAINED = "constrained"
UNCONSTRAINED = "unconstrained"
MODES = (CONSTRAINED, UNCONSTRAINED)

# Separator for pseudo-words; rejected in all input fields at parse time,
# so pseudo-word construction is injective.
PSEUDO_SEP = "\x1f"


class MetaTag(str, Enum):
    YYYY = "YYYY"
    HB = "HB"
    HE = "HE"
    VERB = "VERB"
    PNON = "PNON"
    CONJ = "CONJ"

    def __str__(self):
        return self.value


class ObservationKey(NamedTuple):
    word: str
    meta: MetaTag
    lang: str


def assign_meta_tag(token, dictionary=None, mode=CONSTRAINED):
    """Pick the meta-tag for one token.

    Hash rules win over the dictionary; the dictionary is consulted only
    in unconstrained mode (and must be supplied exactly then).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if (dictionary is not None) != (mode == UNCONSTRAINED):
        raise ValueError("a dictionary is required iff mode is unconstrained")
    word = token.word
    if word.startswith("#"):
        return MetaTag.HB
    if "#" in word[1:]:
        return MetaTag.HE
    if mode == UNCONSTRAINED:
        broad = dictionary.broad_pos(word)
        if broad is not None:
            return MetaTag(broad)
    return MetaTag.YYYY


def make_observation(token, meta):
    return ObservationKey(token.word, meta, token.lang_tag)


def make_pseudo_word(key):
    """Word, L-tag and meta-tag name joined by U+001F; used for suffix lookup."""
    return f"{key.word}{PSEUDO_SEP}{key.lang}{PSEUDO_SEP}{key.meta.value}"
