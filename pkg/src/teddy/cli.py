"""Command-line entry point: ``teddy <mode> [options]``.

Exit status: 0 success (or nothing found), 1 recommendations emitted
(check-diff only), 2 usage or configuration error, 3 runtime error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from . import __version__
from .catalog import Catalog, CatalogError, bundled_catalog_path, load_catalog, validate_catalog
from .evaluation import (
    BUILTIN_CONFIGS,
    TruthError,
    bundled_truth_path,
    load_truth,
    render_json,
    render_table,
    sweep,
)
from .extract import DiffParseError, is_python_path
from .fsutil import atomic_write
from .history import DETECTION_CONFIG, Dataset, HistoryError, scan_tree, walk_history
from .index import Measure, ThresholdConfig
from .recommend import PREVENTION_CONFIG, analyze_diff, render_comment
from .timeline import emit_timeline

log = logging.getLogger("teddy")

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3

CATALOG_ENV = "TEDDY_CATALOG"

MODE_DEFAULTS: dict[str, ThresholdConfig] = {
    "check-diff": PREVENTION_CONFIG,
    "scan": DETECTION_CONFIG,
    "history": DETECTION_CONFIG,
    "eval": BUILTIN_CONFIGS["C4"],
}


class UsageError(Exception):
    """Bad flags or configuration; maps to exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _threshold(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value <= 100:
        raise argparse.ArgumentTypeError(f"threshold {value} outside [0, 100]")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _common(parser: argparse.ArgumentParser, thresholds: bool = True) -> None:
    parser.add_argument(
        "--catalog",
        type=Path,
        help=f"catalog directory (default: ${CATALOG_ENV}, else the bundled catalog)",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging; repeat for debug")
    if not thresholds:
        return
    group = parser.add_argument_group("thresholds")
    group.add_argument("--config", type=Path, help="JSON file of named threshold configs")
    group.add_argument("--preset", help="named config (C1-C4 or one from --config)")
    group.add_argument("--measure", choices=[m.value for m in Measure])
    group.add_argument("--threshold", type=_threshold, help="set T0-T3 at once")
    for level in range(4):
        group.add_argument(f"--t{level}", type=_threshold, metavar="T")
    group.add_argument("--ngram-n", type=_positive, metavar="N")
    group.add_argument("--top-k", type=_positive, metavar="K")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="teddy", description="Find Pythonic and non-Pythonic idioms in Python code.")
    parser.add_argument("--version", action="version", version=f"teddy {__version__}")
    modes = parser.add_subparsers(dest="mode", metavar="MODE", parser_class=_Parser)
    modes.required = True

    check = modes.add_parser("check-diff", help="recommend Pythonic rewrites for lines added by a patch")
    _common(check)
    check.add_argument("--diff", type=Path, help="unified diff file (default: stdin)")
    check.add_argument("--format", choices=["markdown", "json"], default="markdown")
    check.add_argument("--out", type=Path, help="write the report here instead of stdout")

    scan = modes.add_parser("scan", help="detect idioms in files or directories on disk")
    _common(scan)
    scan.add_argument("paths", nargs="+", type=Path)
    scan.add_argument("--format", choices=["json", "table"], default="json")
    scan.add_argument("--out", type=Path, help="directory for occurrences.jsonl and timeline.html")

    history = modes.add_parser("history", help="detect idioms in every first-parent commit of a git repo")
    _common(history)
    history.add_argument("--repo", type=Path, required=True)
    history.add_argument("--out", type=Path, required=True, help="output directory")
    history.add_argument("--jobs", type=_positive, default=1, metavar="N", help="worker processes")

    evaluate = modes.add_parser("eval", help="retrieval accuracy on a ground-truth corpus")
    _common(evaluate)
    evaluate.add_argument("--truth", type=Path, help="ground-truth manifest (default: bundled corpus)")
    evaluate.add_argument(
        "--sweep",
        help="'builtin' for C1-C4, 'all' for builtin plus --config entries, or comma-separated names",
    )
    evaluate.add_argument("--format", choices=["table", "json"], default="table")
    evaluate.add_argument("--out", type=Path, help="write the report here instead of stdout")

    validate = modes.add_parser("catalog-validate", help="check catalog pairing and lexability")
    _common(validate, thresholds=False)
    validate.add_argument("--format", choices=["table", "json"], default="table")
    return parser


def _load_config_file(path: Path | None) -> tuple[dict[str, ThresholdConfig], dict[str, str]]:
    """Named configs and per-mode default names from a JSON config file.

    Layout: ``{"configs": {"name": {"measure": "NTR", "t0": 40, ...}},
    "defaults": {"check-diff": "name"}}``; both keys are optional.
    """
    named = dict(BUILTIN_CONFIGS)
    if path is None:
        return named, {}
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path}: invalid JSON ({exc})") from None
    if not isinstance(raw, dict):
        raise UsageError(f"config {path}: expected a JSON object")
    unknown = set(raw) - {"configs", "defaults"}
    if unknown:
        raise UsageError(f"config {path}: unknown keys {sorted(unknown)}")
    for name, fields in (raw.get("configs") or {}).items():
        if not isinstance(fields, dict):
            raise UsageError(f"config {path}: entry {name!r} is not an object")
        try:
            named[name] = ThresholdConfig(**fields)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"config {path}: entry {name!r}: {exc}") from None
    defaults = raw.get("defaults") or {}
    if not isinstance(defaults, dict):
        raise UsageError(f"config {path}: 'defaults' must be an object")
    for mode, name in defaults.items():
        if mode not in MODE_DEFAULTS:
            raise UsageError(f"config {path}: no mode {mode!r}")
        if name not in named:
            raise UsageError(f"config {path}: default for {mode} names unknown config {name!r}")
    return named, defaults


def _overrides(args: argparse.Namespace) -> dict:
    changes: dict = {}
    if args.measure is not None:
        changes["measure"] = Measure(args.measure)
    if args.threshold is not None:
        changes.update(t0=args.threshold, t1=args.threshold, t2=args.threshold, t3=args.threshold)
    for level in range(4):
        value = getattr(args, f"t{level}")
        if value is not None:
            changes[f"t{level}"] = value
    if args.ngram_n is not None:
        changes["ngram_n"] = args.ngram_n
    if args.top_k is not None:
        changes["top_k"] = args.top_k
    return changes


def resolve_config(args: argparse.Namespace) -> ThresholdConfig:
    """--preset, else the config file's default for the mode, else the mode default; flags on top."""
    named, defaults = _load_config_file(args.config)
    base = MODE_DEFAULTS[args.mode]
    name = args.preset or defaults.get(args.mode)
    if name is not None:
        if name not in named:
            raise UsageError(f"unknown config {name!r}; known: {', '.join(sorted(named))}")
        base = named[name]
        # a preset without its own top_k keeps the mode's
        if name in BUILTIN_CONFIGS and args.mode in ("scan", "history"):
            base = replace(base, top_k=MODE_DEFAULTS[args.mode].top_k)
    try:
        return replace(base, **_overrides(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def resolve_catalog(args: argparse.Namespace) -> Catalog:
    path = args.catalog or os.environ.get(CATALOG_ENV) or bundled_catalog_path()
    return load_catalog(path)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        atomic_write(out, text)
        log.info("wrote %s", out)


def _check_diff(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    catalog = resolve_catalog(args)
    if args.diff is not None:
        try:
            diff = args.diff.read_text(encoding="utf-8", errors="surrogateescape")
        except OSError as exc:
            raise UsageError(f"cannot read diff {args.diff}: {exc.strerror or exc}") from None
    else:
        diff = sys.stdin.read()
    recs = analyze_diff(diff, catalog, config)
    if args.format == "json":
        text = json.dumps({"recommendations": [r.to_dict() for r in recs]}, indent=2) + "\n"
    else:
        text = render_comment(recs, catalog)
    if text or args.out is not None:
        _emit(text, args.out)
    return EXIT_FINDINGS if recs else EXIT_OK


def _walk_python_files(paths: Sequence[Path]) -> list[tuple[str, str]]:
    files: dict[str, str] = {}
    for root in paths:
        if root.is_file():
            targets = [(root, root.as_posix())]
        elif root.is_dir():
            targets = []
            for dirpath, dirnames, filenames in os.walk(root):
                dirnames[:] = sorted(d for d in dirnames if not d.startswith("."))
                for name in sorted(filenames):
                    full = Path(dirpath) / name
                    if is_python_path(name):
                        targets.append((full, full.relative_to(root).as_posix()))
        else:
            raise UsageError(f"no such file or directory: {root}")
        for full, label in targets:
            try:
                files[label] = full.read_text(encoding="utf-8")
            except UnicodeDecodeError:
                log.warning("%s: not UTF-8, skipped", full)
            except OSError as exc:
                log.warning("%s: unreadable (%s), skipped", full, exc.strerror or exc)
    return sorted(files.items())


def _occurrence_table(dataset: Dataset) -> str:
    header = ("file", "lines", "type", "label", "score")
    rows = [
        (o.file_path, f"{o.start_line}-{o.end_line}", o.idiom_type, o.label, f"{o.score:.2f}")
        for o in dataset.occurrences
    ]
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in [header, *rows]]
    return "\n".join(lines) + "\n"


def _scan(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    catalog = resolve_catalog(args)
    files = _walk_python_files(args.paths)
    warnings: list[str] = []
    dataset = Dataset(scan_tree(files, catalog, config, warnings), commits=[], warnings=warnings)
    if args.out is not None:
        jsonl, page = emit_timeline(dataset, args.out)
        print(f"{len(dataset)} occurrences in {len(files)} files; wrote {jsonl} and {page}")
    elif args.format == "table":
        _emit(_occurrence_table(dataset), None)
    else:
        _emit(dataset.to_jsonl(), None)
    return EXIT_OK


def _history(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    catalog = resolve_catalog(args)
    dataset = walk_history(args.repo, catalog, config, jobs=args.jobs)
    for warning in dataset.warnings:
        log.warning(warning)
    jsonl, page = emit_timeline(dataset, args.out)
    print(f"{len(dataset)} occurrences over {len(dataset.commits)} commits; wrote {jsonl} and {page}")
    return EXIT_OK


def _sweep_configs(args: argparse.Namespace) -> list[tuple[str, ThresholdConfig]]:
    named, _ = _load_config_file(args.config)
    overrides = _overrides(args)
    if args.sweep is None:
        if args.preset is None and not overrides:
            return list(BUILTIN_CONFIGS.items())
        name = args.preset or "custom"
        return [(name, resolve_config(args))]
    if args.preset is not None or set(overrides) - {"ngram_n", "top_k"}:
        raise UsageError("--sweep cannot be combined with --preset, --measure or threshold flags")
    if args.sweep == "builtin":
        names = list(BUILTIN_CONFIGS)
    elif args.sweep == "all":
        names = list(named)
    else:
        names = [name.strip() for name in args.sweep.split(",") if name.strip()]
        missing = [name for name in names if name not in named]
        if missing or not names:
            raise UsageError(f"unknown config(s) in --sweep: {', '.join(missing) or args.sweep!r}")
    return [(name, replace(named[name], **overrides)) for name in names]


def _eval(args: argparse.Namespace) -> int:
    configs = _sweep_configs(args)
    catalog = resolve_catalog(args)
    truth = load_truth(args.truth or bundled_truth_path())
    rows = sweep(catalog, truth, configs)
    text = render_json(rows) if args.format == "json" else render_table(rows)
    _emit(text, args.out)
    return EXIT_OK


def _catalog_validate(args: argparse.Namespace) -> int:
    path = args.catalog or os.environ.get(CATALOG_ENV) or bundled_catalog_path()
    catalog = load_catalog(path, validate=False)
    violations = validate_catalog(catalog)
    if args.format == "json":
        payload = {
            "catalog": str(path),
            "entries": len(catalog),
            "violations": [{"entry_id": v.entry_id, "rule": v.rule, "detail": v.detail} for v in violations],
        }
        _emit(json.dumps(payload, indent=2) + "\n", None)
    elif violations:
        _emit("".join(f"{v}\n" for v in violations), None)
    else:
        _emit(f"{path}: {len(catalog)} entries, no violations\n", None)
    return EXIT_USAGE if violations else EXIT_OK


HANDLERS = {
    "check-diff": _check_diff,
    "scan": _scan,
    "history": _history,
    "eval": _eval,
    "catalog-validate": _catalog_validate,
}


class _StderrHandler(logging.Handler):
    """Writes to whatever ``sys.stderr`` is at emit time."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            sys.stderr.write(self.format(record) + "\n")
        except Exception:  # noqa: BLE001
            self.handleError(record)


def _setup_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    root = logging.getLogger("teddy")
    root.setLevel(level)
    if not any(isinstance(h, _StderrHandler) for h in root.handlers):
        handler = _StderrHandler()
        handler.setFormatter(logging.Formatter("teddy: %(levelname)s: %(message)s"))
        root.addHandler(handler)
        root.propagate = False


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _setup_logging(args.verbose)
    try:
        return HANDLERS[args.mode](args)
    except (UsageError, CatalogError, TruthError, DiffParseError) as exc:
        print(f"teddy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HistoryError as exc:
        print(f"teddy: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except KeyboardInterrupt:
        print("teddy: interrupted", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as exc:  # noqa: BLE001 - last-resort runtime failure
        log.debug("unhandled error", exc_info=True)
        print(f"teddy: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
