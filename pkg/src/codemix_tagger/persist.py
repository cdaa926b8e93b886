"""Versioned text serialization of trained models.

The format is UTF-8, line based, with bracketed section headers and
TAB-separated fields.  Counts are decimal integers; lambdas and theta are
written with 17 significant digits so they round-trip exactly.
"""

from collections import Counter

from .errors import ModelFormatError
from .features import MetaTag, ObservationKey
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
)

HEADER = "CODEMIX-HMM v1"

_SECTIONS = (
    "config",
    "tags",
    "unigram",
    "bigram",
    "trigram",
    "lambda",
    "theta",
    "emission",
    "obs",
    "suffix",
)


def _fmt(x):
    return format(x, ".17g")


def escape_suffix(s):
    return s.replace("\\", "\\\\").replace("\t", "\\t").replace("\x1f", "\\x1f")


def unescape_suffix(s, line_no=None):
    out = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if s.startswith("\\\\", i):
            out.append("\\")
            i += 2
        elif s.startswith("\\t", i):
            out.append("\t")
            i += 2
        elif s.startswith("\\x1f", i):
            out.append("\x1f")
            i += 4
        else:
            raise ModelFormatError(f"bad escape in suffix {s!r}", line_no)
    return "".join(out)


def save_model(model):
    """Serialize a trained model to its text format."""
    tag_idx = {t: i for i, t in enumerate(model.tag_set)}
    for i, t in enumerate((BOS1, BOS2, EOS)):
        tag_idx[t] = len(model.tag_set) + i

    def obs_key(key):
        return (key.word, key.meta.value, key.lang)

    c = model.counts
    lines = [HEADER]
    lines.append("[config]")
    cfg = model.config
    lines.append(f"mode={cfg.mode}")
    lines.append(f"emission_variant={cfg.emission_variant}")
    lines.append(f"max_suffix_len={cfg.max_suffix_len}")
    lines.append(f"rare_threshold={cfg.rare_threshold}")
    lines.append("[tags]")
    lines.extend(model.tag_set)
    lines.append("[unigram]")
    for t in model.tag_set:
        lines.append(f"{t}\t{c.unigram[t]}")
    lines.append("[bigram]")
    for (t1, t2) in sorted(c.bigram, key=lambda k: (tag_idx[k[0]], tag_idx[k[1]])):
        lines.append(f"{t1}\t{t2}\t{c.bigram[(t1, t2)]}")
    lines.append("[trigram]")
    for key in sorted(c.trigram, key=lambda k: tuple(tag_idx[t] for t in k)):
        lines.append("\t".join(key) + f"\t{c.trigram[key]}")
    lines.append("[lambda]")
    lam = model.lambdas
    lines.append(f"{_fmt(lam.lam1)}\t{_fmt(lam.lam2)}\t{_fmt(lam.lam3)}")
    lines.append("[theta]")
    lines.append(_fmt(model.suffix.theta))
    lines.append("[emission]")
    for key, t in sorted(c.joint, key=lambda k: (obs_key(k[0]), tag_idx[k[1]])):
        o = key
        lines.append(
            f"{o.word}\t{o.meta.value}\t{o.lang}\t{t}\t{c.joint[(key, t)]}"
        )
    lines.append("[obs]")
    for key in sorted(c.obs_total, key=obs_key):
        lines.append(
            f"{key.word}\t{key.meta.value}\t{key.lang}\t{c.obs_total[key]}"
        )
    lines.append("[suffix]")
    sm = model.suffix
    for (s, t) in sorted(sm.counts, key=lambda k: (k[0], tag_idx[k[1]])):
        lines.append(f"{escape_suffix(s)}\t{t}\t{sm.counts[(s, t)]}")
    return "\n".join(lines) + "\n"


def _split_sections(text):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise ModelFormatError(f"missing header {HEADER!r}", 1)
    sections = {}
    current = None
    for line_no, line in enumerate(lines[1:], start=2):
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1]
            if name not in _SECTIONS:
                raise ModelFormatError(f"unknown section {line!r}", line_no)
            if name in sections:
                raise ModelFormatError(f"duplicate section {line!r}", line_no)
            current = sections.setdefault(name, [])
        elif current is None:
            raise ModelFormatError("content before first section", line_no)
        else:
            current.append((line_no, line))
    missing = [s for s in _SECTIONS if s not in sections]
    if missing:
        raise ModelFormatError(f"missing sections: {', '.join(missing)}")
    return sections


def _fields(line_no, line, n):
    parts = line.split("\t")
    if len(parts) != n:
        raise ModelFormatError(f"expected {n} fields, got {len(parts)}", line_no)
    return parts


def _int(value, line_no):
    try:
        return int(value)
    except ValueError:
        raise ModelFormatError(f"bad integer {value!r}", line_no) from None


def _float(value, line_no):
    try:
        return float(value)
    except ValueError:
        raise ModelFormatError(f"bad float {value!r}", line_no) from None


def _meta(value, line_no):
    try:
        return MetaTag(value)
    except ValueError:
        raise ModelFormatError(f"unknown meta-tag {value!r}", line_no) from None


def load_model(text):
    """Parse the text format back into a model.

    Every probability query on the result equals the original model's
    exactly, and re-serializing yields identical bytes.
    """
    sections = _split_sections(text)

    cfg_kv = {}
    for line_no, line in sections["config"]:
        if "=" not in line:
            raise ModelFormatError("expected key=value", line_no)
        k, v = line.split("=", 1)
        cfg_kv[k] = v
    try:
        config = ModelConfig(
            mode=cfg_kv["mode"],
            emission_variant=cfg_kv["emission_variant"],
            max_suffix_len=int(cfg_kv["max_suffix_len"]),
            rare_threshold=int(cfg_kv["rare_threshold"]),
        )
    except (KeyError, ValueError) as exc:
        raise ModelFormatError(f"bad [config] section: {exc}") from None

    tags = [line for _, line in sections["tags"]]
    try:
        tag_set = TagSet(tags)
    except ValueError as exc:
        raise ModelFormatError(str(exc)) from None
    known = set(tags) | set((BOS1, BOS2, EOS))

    def check_tag(t, line_no):
        if t not in known:
            raise ModelFormatError(f"unknown tag {t!r}", line_no)
        return t

    counts = CountTables()
    for line_no, line in sections["unigram"]:
        t, n = _fields(line_no, line, 2)
        counts.unigram[check_tag(t, line_no)] = _int(n, line_no)
    for line_no, line in sections["bigram"]:
        t1, t2, n = _fields(line_no, line, 3)
        counts.bigram[(check_tag(t1, line_no), check_tag(t2, line_no))] = _int(
            n, line_no
        )
    for line_no, line in sections["trigram"]:
        t1, t2, t3, n = _fields(line_no, line, 4)
        key = tuple(check_tag(t, line_no) for t in (t1, t2, t3))
        counts.trigram[key] = _int(n, line_no)
    counts.token_total = sum(counts.unigram[t] for t in tags)

    if len(sections["lambda"]) != 1:
        raise ModelFormatError("expected exactly one [lambda] line")
    line_no, line = sections["lambda"][0]
    l1, l2, l3 = (_float(v, line_no) for v in _fields(line_no, line, 3))
    lambdas = InterpolationWeights(l1, l2, l3)

    if len(sections["theta"]) != 1:
        raise ModelFormatError("expected exactly one [theta] line")
    line_no, line = sections["theta"][0]
    theta = _float(line, line_no)

    for line_no, line in sections["emission"]:
        word, meta, lang, t, n = _fields(line_no, line, 5)
        key = ObservationKey(word, _meta(meta, line_no), lang)
        counts.joint[(key, check_tag(t, line_no))] = _int(n, line_no)
    for line_no, line in sections["obs"]:
        word, meta, lang, n = _fields(line_no, line, 4)
        key = ObservationKey(word, _meta(meta, line_no), lang)
        counts.obs_total[key] = _int(n, line_no)

    suffix_counts = {}
    suffix_totals = {}
    for line_no, line in sections["suffix"]:
        s, t, n = _fields(line_no, line, 3)
        s = unescape_suffix(s, line_no)
        n = _int(n, line_no)
        suffix_counts[(s, check_tag(t, line_no))] = n
        suffix_totals[s] = suffix_totals.get(s, 0) + n

    n_total = counts.token_total
    tag_prior = {t: counts.unigram[t] / n_total for t in tags} if n_total else {}
    suffix = SuffixModel(
        max_suffix_len=config.max_suffix_len,
        theta=theta,
        counts=suffix_counts,
        suffix_totals=suffix_totals,
        tag_prior=tag_prior,
    )
    return TrainedModel(
        tag_set=tag_set,
        counts=counts,
        lambdas=lambdas,
        suffix=suffix,
        config=config,
    )
