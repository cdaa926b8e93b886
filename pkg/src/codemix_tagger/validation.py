"""Input validation helpers for the estimator API."""

from .corpus import TaggedToken


def check_token_sequences(X):
    """Validate a list of sentences given as (word, lang_tag) pairs."""
    if not isinstance(X, (list, tuple)):
        raise TypeError("X must be a list of sentences")
    sentences = []
    for s_idx, sent in enumerate(X):
        if not sent:
            raise ValueError(f"sentence {s_idx} is empty")
        tokens = []
        for t_idx, item in enumerate(sent):
            try:
                word, lang = item
            except (TypeError, ValueError):
                raise ValueError(
                    f"token {t_idx} of sentence {s_idx} is not a "
                    "(word, lang_tag) pair"
                ) from None
            if not isinstance(word, str) or not isinstance(lang, str):
                raise ValueError(
                    f"token {t_idx} of sentence {s_idx} must hold strings"
                )
            tokens.append(TaggedToken(word, lang))
        sentences.append(tokens)
    return sentences


def check_aligned_labels(sentences, y):
    """Validate per-token tag sequences against already-checked sentences."""
    if y is None:
        raise ValueError("y (per-token POS tags) is required")
    if len(y) != len(sentences):
        raise ValueError(
            f"X has {len(sentences)} sentences but y has {len(y)} label sequences"
        )
    tagged = []
    for s_idx, (sent, labels) in enumerate(zip(sentences, y)):
        if len(labels) != len(sent):
            raise ValueError(
                f"sentence {s_idx}: {len(sent)} tokens but {len(labels)} labels"
            )
        tagged.append(
            [
                TaggedToken(tok.word, tok.lang_tag, str(tag))
                for tok, tag in zip(sent, labels)
            ]
        )
    return tagged
