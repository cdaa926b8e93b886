"""Exception types shared across the package."""


class CodemixError(Exception):
    """Base class for all errors raised by this package."""


class CorpusError(CodemixError):
    """Base class for corpus / dictionary file problems."""


class MalformedLine(CorpusError):
    def __init__(self, line_no, reason=""):
        self.line_no = line_no
        self.reason = reason
        msg = f"malformed line {line_no}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class EncodingError(CorpusError):
    def __init__(self, cause):
        self.cause = cause
        super().__init__(f"input is not valid UTF-8: {cause}")


class UnknownBroadPos(CorpusError):
    def __init__(self, line_no, value):
        self.line_no = line_no
        self.value = value
        super().__init__(
            f"line {line_no}: unknown broad POS {value!r} (expected VERB, PNON or CONJ)"
        )


class MissingTag(CorpusError):
    def __init__(self, sentence_idx, token_idx):
        self.sentence_idx = sentence_idx
        self.token_idx = token_idx
        super().__init__(
            f"token {token_idx} of sentence {sentence_idx} has no POS tag"
        )


class ModelError(CodemixError):
    """Base class for training / model query problems."""


class EmptyCorpus(ModelError):
    def __init__(self):
        super().__init__("training corpus is empty")


class UnknownTag(ModelError):
    def __init__(self, tag):
        self.tag = tag
        super().__init__(f"tag {tag!r} is not in the model's tag set")


class KnownObservation(ModelError):
    def __init__(self, key):
        self.key = key
        super().__init__(
            f"observation {key!r} was seen in training; unknown_prob does not apply"
        )


class ModelFormatError(ModelError):
    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class DecodeError(CodemixError):
    """Base class for decoding problems."""


class EmptyInput(DecodeError):
    def __init__(self):
        super().__init__("cannot decode an empty observation sequence")


class TooLarge(DecodeError):
    def __init__(self, n_obs, n_tags):
        self.n_obs = n_obs
        self.n_tags = n_tags
        super().__init__(
            f"brute-force guard exceeded: {n_obs} observations, {n_tags} tags"
        )


class Misaligned(CodemixError):
    def __init__(self, sentence_idx, reason=""):
        self.sentence_idx = sentence_idx
        self.reason = reason
        msg = f"gold and predicted data diverge at sentence {sentence_idx}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)
