"""Command-line interface: train, tag and eval subcommands.

Exit codes: 0 success, 1 data/model errors, 2 usage errors.  Diagnostics
go to stderr; data is written only to the declared output paths.
"""

import argparse
import sys

from . import corpus, decoder, persist
from .errors import CodemixError, EncodingError, Misaligned
from .evaluate import evaluate, render_report, render_tsv
from .features import CONSTRAINED, MODES, UNCONSTRAINED
from .model import EMISSION_VARIANTS, ModelConfig, train

USAGE_ERROR = 2
DATA_ERROR = 1


def _read_text(path):
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(exc) from None


def _write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _fail(code, message):
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_dictionary(path):
    dictionary = corpus.load_dictionary(_read_text(path))
    for warning in dictionary.warnings:
        print(f"warning: {path}: {warning}", file=sys.stderr)
    return dictionary


def cmd_train(args):
    if args.mode == CONSTRAINED and args.dict:
        return _fail(
            USAGE_ERROR,
            "constrained mode forbids external resources; drop --dict",
        )
    if args.mode == UNCONSTRAINED and not args.dict:
        return _fail(USAGE_ERROR, "unconstrained mode requires --dict")
    try:
        config = ModelConfig(
            mode=args.mode,
            emission_variant=args.emission_variant,
            max_suffix_len=args.max_suffix_len,
            rare_threshold=args.rare_threshold,
        )
    except ValueError as exc:
        return _fail(USAGE_ERROR, str(exc))
    try:
        dictionary = _load_dictionary(args.dict) if args.dict else None
        sentences = corpus.parse_training_file(_read_text(args.input))
        if not sentences:
            return _fail(DATA_ERROR, f"{args.input}: no sentences found")
        model = train(sentences, dictionary, config)
        _write_text(args.model, persist.save_model(model))
    except (CodemixError, OSError) as exc:
        return _fail(DATA_ERROR, f"{args.input}: {exc}")
    lam = model.lambdas
    n_tokens = model.counts.token_total
    print(
        f"trained on {len(sentences)} sentences, {n_tokens} tokens, "
        f"{len(model.tag_set)} tags; "
        f"lambda1={lam.lam1:.6f} lambda2={lam.lam2:.6f} lambda3={lam.lam3:.6f}",
        file=sys.stderr,
    )
    return 0


def cmd_tag(args):
    try:
        model = persist.load_model(_read_text(args.model))
    except (CodemixError, OSError) as exc:
        return _fail(DATA_ERROR, f"{args.model}: {exc}")
    if model.config.mode == UNCONSTRAINED and not args.dict:
        return _fail(
            USAGE_ERROR, "model was trained in unconstrained mode; --dict required"
        )
    if model.config.mode == CONSTRAINED and args.dict:
        return _fail(
            USAGE_ERROR,
            "constrained mode forbids external resources; drop --dict",
        )
    try:
        dictionary = _load_dictionary(args.dict) if args.dict else None
        sentences = corpus.parse_test_file(_read_text(args.input))
        tagged = [
            decoder.tag_sentence(model, dictionary, sent) for sent in sentences
        ]
        _write_text(args.output, corpus.write_tagged_file(tagged))
    except (CodemixError, OSError) as exc:
        return _fail(DATA_ERROR, f"{args.input}: {exc}")
    return 0


def cmd_eval(args):
    try:
        gold = corpus.parse_training_file(_read_text(args.gold))
        pred = corpus.parse_training_file(_read_text(args.pred))
        report = evaluate(gold, pred)
    except Misaligned as exc:
        return _fail(DATA_ERROR, str(exc))
    except (CodemixError, OSError) as exc:
        return _fail(DATA_ERROR, str(exc))
    if args.tsv:
        sys.stdout.write(render_tsv(report))
    else:
        sys.stdout.write(render_report(report, per_tag=args.per_tag))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="codemix-tagger",
        description="Trigram HMM POS tagger for code-mixed social media text",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a model from a tagged corpus")
    p_train.add_argument("--input", required=True, help="training file (word<TAB>lang<TAB>pos)")
    p_train.add_argument("--model", required=True, help="output model path")
    p_train.add_argument("--mode", choices=MODES, default=CONSTRAINED)
    p_train.add_argument("--dict", help="broad-POS dictionary (unconstrained mode only)")
    p_train.add_argument(
        "--emission-variant", choices=EMISSION_VARIANTS, default="paper"
    )
    p_train.add_argument("--max-suffix-len", type=int, default=10)
    p_train.add_argument("--rare-threshold", type=int, default=2)
    p_train.set_defaults(func=cmd_train)

    p_tag = sub.add_parser("tag", help="tag a test file with a trained model")
    p_tag.add_argument("--model", required=True)
    p_tag.add_argument("--input", required=True, help="test file (word<TAB>lang)")
    p_tag.add_argument("--output", required=True)
    p_tag.add_argument("--dict", help="dictionary for unconstrained models")
    p_tag.set_defaults(func=cmd_tag)

    p_eval = sub.add_parser("eval", help="score a prediction against gold data")
    p_eval.add_argument("--gold", required=True)
    p_eval.add_argument("--pred", required=True)
    p_eval.add_argument("--per-tag", action="store_true", help="per-tag accuracy rows")
    p_eval.add_argument("--tsv", action="store_true", help="machine-readable output")
    p_eval.set_defaults(func=cmd_eval)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
