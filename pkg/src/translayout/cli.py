"""Command-line driver for the translation pipeline and the evaluator."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .pipeline import EXIT_CONFIG, PipelineConfig, eval_command, run_pipeline


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="translayout",
        description="Layout-preserving document translation and evaluation.",
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command")

    tr = sub.add_parser("translate", help="translate documents preserving layout")
    tr.add_argument("--files", nargs="+", required=True, help="input PDF files")
    tr.add_argument("--lang-in", default="en", help="source language code")
    tr.add_argument("--lang-out", default="zh", help="target language code")
    tr.add_argument("--glossary", default=None, metavar="CSV",
                    help="user glossary CSV (header: source,target[,acronym])")
    tr.add_argument("--translator", default="mock:identity",
                    help="mock:<identity|bracket|expand:F> or an http(s) endpoint[#model]")
    tr.add_argument("--scale-step", type=float, default=0.05, help="scale search step")
    tr.add_argument("--scale-min", type=float, default=0.6, help="scale search floor")
    tr.add_argument("--line-factor", type=float, default=1.2, help="line height factor")
    tr.add_argument("--use-alternating-pages-dual", action="store_true", dest="dual",
                    help="also produce a source/translation alternating document")
    tr.add_argument("--ir-dump", default=None, metavar="DIR",
                    help="dump the IR before and after translation")
    tr.add_argument("--detections", default=None, metavar="FILE",
                    help="external layout detections (JSON) replacing the heuristics")
    tr.add_argument("--font", default=None, metavar="TTF", dest="font_path",
                    help="target-script TrueType font to embed")
    tr.add_argument("--compress", action="store_true", help="Flate-compress content streams")
    tr.add_argument("--lenient", action="store_true",
                    help="downgrade recoverable parse problems to warnings")
    tr.add_argument("--out-dir", default=None, help="output directory (default: beside input)")
    tr.add_argument("--config", default=None, metavar="FILE",
                    help="key = value config file (flags override it)")

    ev = sub.add_parser("eval", help="compare source and translated documents")
    ev.add_argument("src", help="source PDF")
    ev.add_argument("dst", help="translated PDF")
    ev.add_argument("--out", default="eval-report", metavar="STEM",
                    help="report file stem (writes STEM.txt and STEM.json)")
    ev.add_argument("--dual", action="store_true",
                    help="treat dst as dual-alternating; evaluate its translated sides")
    ev.add_argument("--lenient", action="store_true")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.command == "translate":
        overrides: dict = {}
        if args.config:
            try:
                overrides = PipelineConfig.from_file(args.config)
            except (OSError, ValueError) as exc:
                print(f"error: config file unusable: {exc}", file=sys.stderr)
                return EXIT_CONFIG
        config_kwargs = dict(
            files=args.files,
            lang_in=args.lang_in,
            lang_out=args.lang_out,
            translator=args.translator,
            glossary_csv=args.glossary,
            detections=args.detections,
            font_path=args.font_path,
            scale_step=args.scale_step,
            scale_min=args.scale_min,
            line_factor=args.line_factor,
            dual=args.dual,
            ir_dump=args.ir_dump,
            compress=args.compress,
            lenient=args.lenient,
            out_dir=args.out_dir,
        )
        # Config-file values apply only where the flag was left at its default.
        default_map = dict(
            lang_in="en", lang_out="zh", translator="mock:identity",
            glossary_csv=None, detections=None, font_path=None,
            scale_step=0.05, scale_min=0.6, line_factor=1.2, dual=False,
            ir_dump=None, compress=False, lenient=False, out_dir=None,
        )
        for key, value in overrides.items():
            if key == "files":
                continue
            if key in config_kwargs and config_kwargs[key] == default_map.get(key):
                config_kwargs[key] = value
        for path in args.files:
            if not Path(path).exists():
                print(f"error: input not found: {path}", file=sys.stderr)
                return EXIT_CONFIG
        code, reports = run_pipeline(PipelineConfig(**config_kwargs))
        for report in reports:
            name = Path(report.input).name if report.input else "<none>"
            if report.errors:
                for err in report.errors:
                    print(f"{name}: error: {err}", file=sys.stderr)
            else:
                gammas = ", ".join(
                    f"{k}x{v}" for k, v in sorted(report.gamma_histogram.items())
                )
                print(
                    f"{name}: {report.pages} pages, {report.paragraphs} paragraphs, "
                    f"{report.placeholders} placeholders, stitched {report.stitched}, "
                    f"UTB {report.utb_per_page}, scales [{gammas}] -> {report.output}"
                )
                if report.dual_output:
                    print(f"{name}: dual output -> {report.dual_output}")
        return code
    if args.command == "eval":
        out = args.out
        return eval_command(
            args.src, args.dst, f"{out}.txt", f"{out}.json",
            lenient=args.lenient, dual=args.dual,
        )
    parser.print_help()
    return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
