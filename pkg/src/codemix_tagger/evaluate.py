"""Overall and per-POS-category accuracy between gold and predicted taggings."""

from dataclasses import dataclass, field

from .errors import Misaligned


@dataclass
class TagScore:
    gold_count: int
    correct_count: int
    accuracy: float
    in_gold: bool = True  # False for tags that only occur in predictions


@dataclass
class EvalReport:
    overall: float
    per_tag: dict = field(default_factory=dict)
    token_total: int = 0


def evaluate(gold, pred):
    """Token accuracy plus per-tag recall over gold occurrences.

    Gold and predicted sentences must align exactly in segmentation and
    (word, lang_tag) content.
    """
    if len(gold) != len(pred):
        raise Misaligned(
            min(len(gold), len(pred)),
            f"{len(gold)} gold sentences vs {len(pred)} predicted",
        )
    gold_counts = {}
    correct_counts = {}
    pred_only = set()
    total = 0
    correct = 0
    for s_idx, (g_sent, p_sent) in enumerate(zip(gold, pred)):
        if len(g_sent) != len(p_sent):
            raise Misaligned(s_idx, "sentence lengths differ")
        for g_tok, p_tok in zip(g_sent, p_sent):
            if (g_tok.word, g_tok.lang_tag) != (p_tok.word, p_tok.lang_tag):
                raise Misaligned(s_idx, "token words or language tags differ")
            total += 1
            gold_counts[g_tok.pos_tag] = gold_counts.get(g_tok.pos_tag, 0) + 1
            if p_tok.pos_tag == g_tok.pos_tag:
                correct += 1
                correct_counts[g_tok.pos_tag] = (
                    correct_counts.get(g_tok.pos_tag, 0) + 1
                )
            if p_tok.pos_tag not in gold_counts:
                pred_only.add(p_tok.pos_tag)

    per_tag = {}
    for tag, g_count in gold_counts.items():
        c_count = correct_counts.get(tag, 0)
        per_tag[tag] = TagScore(g_count, c_count, c_count / g_count)
    for tag in pred_only - set(gold_counts):
        per_tag[tag] = TagScore(0, 0, 0.0, in_gold=False)
    overall = correct / total if total else 0.0
    return EvalReport(overall=overall, per_tag=per_tag, token_total=total)


def _pct(x):
    return f"{100.0 * x:.2f}%"


def _sorted_tags(report):
    return sorted(
        report.per_tag.items(), key=lambda kv: (-kv[1].gold_count, kv[0])
    )


def render_report(report, per_tag=True):
    """Human-readable table: an Overall row, then per-tag rows sorted by
    descending gold count and tag name."""
    rows = [("POS/Categorical", "Accuracy"), ("Overall", _pct(report.overall))]
    if per_tag:
        for tag, score in _sorted_tags(report):
            label = tag if score.in_gold else f"{tag} (not in gold)"
            rows.append((label, _pct(score.accuracy)))
    width = max(len(r[0]) for r in rows)
    return "\n".join(f"{name:<{width}}  {value}" for name, value in rows) + "\n"


def render_tsv(report):
    """Machine-readable variant: tag, gold count, correct count, accuracy."""
    lines = [
        f"OVERALL\t{report.token_total}"
        f"\t{round(report.overall * report.token_total)}\t{report.overall!r}"
    ]
    for tag, score in _sorted_tags(report):
        lines.append(
            f"{tag}\t{score.gold_count}\t{score.correct_count}\t{score.accuracy!r}"
        )
    return "\n".join(lines) + "\n"
