"""Shared corpus generators for the test suite.

Everything here is seeded and deterministic so fixtures freeze cleanly.
"""

import random

from codemix_tagger import ModelConfig, TaggedToken, train

# Tag -> (language, words) pools for the synthetic code-mixed grammar.
_POOLS = {
    "PR_PRP": [("bn", ["ami", "tumi", "se", "amra", "tomra"]), ("en", ["I", "you", "we"])],
    "V_VM": [
        ("bn", ["khabo", "jabo", "korbo", "dekhbo", "bolbo", "khelbo"]),
        ("en", ["going", "eating", "playing", "watching", "waiting"]),
    ],
    "N_NN": [
        ("bn", ["bhaat", "boi", "gaan", "khela", "chobi"]),
        ("en", ["food", "book", "song", "game", "match", "movie"]),
    ],
    "JJ": [("bn", ["bhalo", "kharap", "notun", "darun"]), ("en", ["good", "bad", "new", "awesome"])],
    "DT": [("en", ["the", "a", "this", "that"])],
    "CC": [("bn", ["ar", "kintu"]), ("en", ["and", "but", "or"])],
    "PSP": [("bn", ["theke", "jonno", "sathe", "por"])],
    "RD_PUNC": [("univ", [".", ",", "!", "?"])],
    "#": [("univ", ["#win", "#fun", "#cricket", "#match#day"])],
    "E": [("univ", [":)", ":D", "<3", ":P"])],
}

_TEMPLATES = [
    ["PR_PRP", "N_NN", "V_VM", "RD_PUNC"],
    ["PR_PRP", "JJ", "N_NN", "V_VM", "E"],
    ["DT", "N_NN", "CC", "DT", "N_NN", "RD_PUNC"],
    ["PR_PRP", "N_NN", "PSP", "V_VM", "RD_PUNC"],
    ["JJ", "N_NN", "E", "#"],
    ["PR_PRP", "V_VM", "CC", "PR_PRP", "V_VM", "RD_PUNC"],
    ["#", "DT", "JJ", "N_NN", "E"],
    ["N_NN", "JJ", "V_VM", "PSP", "N_NN", "RD_PUNC"],
]

# Suffix-bearing stems for occasional novel words, so the suffix model
# has something to learn and test data contains unknown tokens.
_NOVEL = {
    "V_VM": ("bn", ["likh", "par", "ghum", "uth", "nach"], "bo"),
    "N_NN": ("en", ["tour", "road", "tea", "sky", "rain"], "time"),
    "JJ": ("bn", ["mish", "thand", "gor"], "ti"),
}


def synthetic_sentence(rng):
    tokens = []
    for tag in rng.choice(_TEMPLATES):
        if tag in _NOVEL and rng.random() < 0.15:
            lang, stems, suffix = _NOVEL[tag]
            word = rng.choice(stems) + str(rng.randint(0, 40)) + suffix
        else:
            lang, words = rng.choice(_POOLS[tag])
            word = rng.choice(words)
        tokens.append(TaggedToken(word, lang, tag))
    return tokens


def synthetic_corpus(n_sentences, seed=0):
    rng = random.Random(seed)
    return [synthetic_sentence(rng) for _ in range(n_sentences)]


def write_test_file(sentences):
    """Render sentences in the two-column test file format."""
    blocks = [
        "\n".join(f"{t.word}\t{t.lang_tag}" for t in sent) for sent in sentences
    ]
    return "\n\n".join(blocks) + "\n" if blocks else ""


def strip_tags(sentences):
    return [
        [TaggedToken(t.word, t.lang_tag) for t in sent] for sent in sentences
    ]


def random_micro_corpus(rng):
    """Tiny random corpus for oracle cross-checks: <= 4 tags, short sentences."""
    n_tags = rng.randint(2, 4)
    tags = [f"T{i}" for i in range(n_tags)]
    vocab = [f"w{i}" for i in range(rng.randint(3, 6))] + ["#h"]
    langs = ["en", "bn"]
    corpus = []
    for _ in range(rng.randint(2, 6)):
        corpus.append(
            [
                TaggedToken(rng.choice(vocab), rng.choice(langs), rng.choice(tags))
                for _ in range(rng.randint(1, 5))
            ]
        )
    return corpus


def random_micro_model(rng):
    config = ModelConfig(
        emission_variant=rng.choice(["paper", "conditional"]),
        max_suffix_len=rng.choice([3, 10]),
        rare_threshold=rng.choice([1, 2, 3]),
    )
    return train(random_micro_corpus(rng), None, config)


def random_test_sentence(rng, max_len=5):
    """Test input mixing known vocabulary and novel (unknown) words."""
    words = [f"w{rng.randint(0, 5)}" for _ in range(rng.randint(1, max_len))]
    if rng.random() < 0.5:
        words[rng.randrange(len(words))] = f"zz{rng.randint(0, 9)}"
    return [TaggedToken(w, rng.choice(["en", "bn"])) for w in words]
