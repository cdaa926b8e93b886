import pytest

from codemix_tagger import parse_training_file, train


@pytest.fixture
def micro_corpus():
    """One sentence, two tokens: the smallest interesting count tables."""
    return parse_training_file("a\ten\tX\nb\ten\tY\n")


@pytest.fixture
def micro_corpus_x5():
    """The same sentence five times; deterministic non-degenerate lambdas."""
    return parse_training_file("a\ten\tX\nb\ten\tY\n\n" * 5)


@pytest.fixture
def micro_model_x5(micro_corpus_x5):
    return train(micro_corpus_x5)
