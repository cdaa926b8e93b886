"""Reading and writing the tab-separated token files and the broad-POS dictionary.

Training files carry ``word<TAB>lang<TAB>pos`` lines, test files
``word<TAB>lang``; sentences are separated by one or more blank lines.
Token bytes are never altered: no trimming, case folding or Unicode
normalization happens on either side.
"""

from dataclasses import dataclass, field
from typing import Optional

from .errors import MalformedLine, MissingTag, UnknownBroadPos

BROAD_POS = ("VERB", "PNON", "CONJ")

# U+001F is reserved as the pseudo-word separator, so it may not occur
# in any field of an input file.
_FORBIDDEN_CHARS = ("\t", "\r", "\n", "\x1f")


@dataclass(frozen=True)
class TaggedToken:
    word: str
    lang_tag: str
    pos_tag: Optional[str] = None


# A sentence is simply a non-empty token list.
Sentence = list


@dataclass
class Dictionary:
    """Word -> broad POS (VERB / PNON / CONJ) lookup table."""

    entries: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def broad_pos(self, word):
        return self.entries.get(word)

    def __contains__(self, word):
        return word in self.entries

    def __len__(self):
        return len(self.entries)


def _check_field(value, line_no):
    if not value:
        raise MalformedLine(line_no, "empty field")
    if any(ch in value for ch in _FORBIDDEN_CHARS):
        raise MalformedLine(line_no, "field contains a control character")


def _iter_lines(text):
    """Yield (line_no, line) with trailing CR stripped (CRLF tolerated)."""
    for i, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            line = line[:-1]
        yield i, line


def _parse_columns(text, n_fields, with_pos):
    sentences = []
    current = []
    for line_no, line in _iter_lines(text):
        if line.strip() == "":
            if current:
                sentences.append(current)
                current = []
            continue
        fields = line.split("\t")
        if len(fields) != n_fields:
            raise MalformedLine(
                line_no, f"expected {n_fields} tab-separated fields, got {len(fields)}"
            )
        for value in fields:
            _check_field(value, line_no)
        if with_pos:
            word, lang, pos = fields
            current.append(TaggedToken(word, lang, pos))
        else:
            word, lang = fields
            current.append(TaggedToken(word, lang))
    if current:
        sentences.append(current)
    return sentences


def parse_training_file(text):
    """Parse ``word<TAB>lang<TAB>pos`` lines into sentences with gold tags."""
    return _parse_columns(text, 3, with_pos=True)


def parse_test_file(text):
    """Parse ``word<TAB>lang`` lines into sentences without POS tags."""
    return _parse_columns(text, 2, with_pos=False)


def write_tagged_file(sentences):
    """Render fully tagged sentences back to the training file format.

    Emits LF newlines, one blank line between sentences and exactly one
    trailing newline; round-trips through parse_training_file.
    """
    blocks = []
    for s_idx, sentence in enumerate(sentences):
        lines = []
        for t_idx, token in enumerate(sentence):
            if token.pos_tag is None:
                raise MissingTag(s_idx, t_idx)
            lines.append(f"{token.word}\t{token.lang_tag}\t{token.pos_tag}")
        blocks.append("\n".join(lines))
    if not blocks:
        return ""
    return "\n\n".join(blocks) + "\n"


def load_dictionary(text):
    """Parse ``word<TAB>broad_pos`` lines; the last entry wins on duplicates."""
    entries = {}
    warnings = []
    for line_no, line in _iter_lines(text):
        if line.strip() == "":
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedLine(
                line_no, f"expected 2 tab-separated fields, got {len(fields)}"
            )
        word, broad = fields
        _check_field(word, line_no)
        if broad not in BROAD_POS:
            raise UnknownBroadPos(line_no, broad)
        if word in entries:
            warnings.append(
                f"line {line_no}: duplicate entry for {word!r} "
                f"({entries[word]} -> {broad})"
            )
        entries[word] = broad
    return Dictionary(entries=entries, warnings=warnings)
