"""scikit-learn style estimator wrapping the HMM tagger.

X is a list of sentences, each a list of (word, lang_tag) pairs; y is the
matching list of POS tag sequences.  The estimator follows the
get_params/set_params contract so it clones and composes with
scikit-learn tooling, in the spirit of sequence estimators like
sklearn-crfsuite.
"""

from sklearn.base import BaseEstimator

from . import decoder
from .evaluate import evaluate
from .features import CONSTRAINED
from .model import ModelConfig, train
from .validation import check_aligned_labels, check_token_sequences


class HmmPosTagger(BaseEstimator):
    """Trigram HMM part-of-speech tagger for code-mixed text.

    Parameters
    ----------
    mode : "constrained" or "unconstrained"
        Unconstrained mode consults a broad-POS dictionary for meta-tags
        and requires ``dictionary``.
    emission_variant : "paper" or "conditional"
        Observation probability as C(o,t)/C(o) or C(o,t)/C(t).
    max_suffix_len : int
        Longest pseudo-word suffix used for unknown observations.
    rare_threshold : int
        Observations with training frequency at most this feed the
        suffix model.
    dictionary : Dictionary or None
        Word -> broad POS lookup for unconstrained mode.
    """

    def __init__(
        self,
        mode=CONSTRAINED,
        emission_variant="paper",
        max_suffix_len=10,
        rare_threshold=2,
        dictionary=None,
    ):
        self.mode = mode
        self.emission_variant = emission_variant
        self.max_suffix_len = max_suffix_len
        self.rare_threshold = rare_threshold
        self.dictionary = dictionary

    def _config(self):
        return ModelConfig(
            mode=self.mode,
            emission_variant=self.emission_variant,
            max_suffix_len=self.max_suffix_len,
            rare_threshold=self.rare_threshold,
        )

    def fit(self, X, y):
        sentences = check_token_sequences(X)
        tagged = check_aligned_labels(sentences, y)
        self.model_ = train(tagged, self.dictionary, self._config())
        return self

    def predict(self, X):
        if not hasattr(self, "model_"):
            raise ValueError("this HmmPosTagger instance is not fitted yet")
        sentences = check_token_sequences(X)
        out = []
        for sent in sentences:
            tagged = decoder.tag_sentence(self.model_, self.dictionary, sent)
            out.append([tok.pos_tag for tok in tagged])
        return out

    def score(self, X, y):
        """Overall token accuracy on (X, y)."""
        sentences = check_token_sequences(X)
        gold = check_aligned_labels(sentences, y)
        pred = check_aligned_labels(sentences, self.predict(X))
        return evaluate(gold, pred).overall
