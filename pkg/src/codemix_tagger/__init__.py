"""Trigram HMM POS tagger for code-mixed social media text."""

from .corpus import (
    BROAD_POS,
    Dictionary,
    TaggedToken,
    load_dictionary,
    parse_test_file,
    parse_training_file,
    write_tagged_file,
)
from .decoder import (
    DecodeResult,
    brute_force_decode,
    sequence_score,
    tag_sentence,
    viterbi,
)
from .errors import (
    CodemixError,
    CorpusError,
    DecodeError,
    EmptyCorpus,
    EmptyInput,
    EncodingError,
    KnownObservation,
    MalformedLine,
    Misaligned,
    MissingTag,
    ModelError,
    ModelFormatError,
    TooLarge,
    UnknownBroadPos,
    UnknownTag,
)
from .estimator import HmmPosTagger
from .evaluate import EvalReport, TagScore, evaluate, render_report, render_tsv
from .features import (
    CONSTRAINED,
    UNCONSTRAINED,
    MetaTag,
    ObservationKey,
    assign_meta_tag,
    make_observation,
    make_pseudo_word,
)
from .model import (
    BOS1,
    BOS2,
    EOS,
    CountTables,
    InterpolationWeights,
    ModelConfig,
    SuffixModel,
    TagSet,
    TrainedModel,
    deleted_interpolation,
    emission_prob,
    suffix_distributions,
    train,
    transition_prob,
    unknown_prob,
    unknown_scores,
)
from .persist import load_model, save_model

__version__ = "0.1.0"

__all__ = [
    "BROAD_POS",
    "BOS1",
    "BOS2",
    "EOS",
    "CONSTRAINED",
    "UNCONSTRAINED",
    "CodemixError",
    "CorpusError",
    "CountTables",
    "DecodeError",
    "DecodeResult",
    "Dictionary",
    "EmptyCorpus",
    "EmptyInput",
    "EncodingError",
    "EvalReport",
    "HmmPosTagger",
    "InterpolationWeights",
    "KnownObservation",
    "MalformedLine",
    "MetaTag",
    "Misaligned",
    "MissingTag",
    "ModelConfig",
    "ModelError",
    "ModelFormatError",
    "ObservationKey",
    "SuffixModel",
    "TagScore",
    "TagSet",
    "TaggedToken",
    "TooLarge",
    "TrainedModel",
    "UnknownBroadPos",
    "UnknownTag",
    "assign_meta_tag",
    "brute_force_decode",
    "deleted_interpolation",
    "emission_prob",
    "evaluate",
    "load_dictionary",
    "load_model",
    "make_observation",
    "make_pseudo_word",
    "parse_test_file",
    "parse_training_file",
    "render_report",
    "render_tsv",
    "save_model",
    "sequence_score",
    "suffix_distributions",
    "tag_sentence",
    "train",
    "transition_prob",
    "unknown_prob",
    "unknown_scores",
    "viterbi",
    "write_tagged_file",
]
