"""End-to-end pipeline: parse, segment, mask, translate, typeset, render.

Stage order is fixed; the only synchronization points are the glossary
pass (before any document batch) and final document assembly.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .errors import (
    BackendProtocolError,
    BackendUnavailable,
    InvalidConfig,
    PdfParseError,
    SchemaError,
    TranslayoutError,
    UnknownMode,
)
from .evaluate import compute_biou, count_utb, write_reports
from .ir import DocumentIR, ParagraphRef, serialize_ir, validate_ir
from .mask import find_maskable_regions, mask_units, unmask
from .reader import read_document
from .segment import (
    SegmentConfig,
    StitchDecision,
    build_paragraphs,
    load_detections,
    merge_stitched,
    reading_order,
    segment_layout,
    stitch_cross_units,
)
from .translate import (
    TranslateConfig,
    extract_glossary,
    load_glossary_csv,
    make_backend,
    merge_glossaries,
    translate_document,
)
from .typeset import FitStatus, TypesetConfig, fit_across, place_glyphs
from .writer import (
    OutputFontRegistry,
    RenderContext,
    RenderedPage,
    assemble_document,
    collect_images,
    load_user_font,
    render_page,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BACKEND = 3
EXIT_RENDER = 4
EXIT_CONFIG = 5


@dataclass
class PipelineConfig:
    files: list[str] = field(default_factory=list)
    lang_in: str = "en"
    lang_out: str = "zh"
    translator: str = "mock:identity"
    glossary_csv: str | None = None
    detections: str | None = None
    font_path: str | None = None
    scale_step: float = 0.05
    scale_min: float = 0.6
    line_factor: float = 1.2
    dual: bool = False
    ir_dump: str | None = None
    compress: bool = False
    lenient: bool = False
    out_dir: str | None = None
    batch_chars: int = 4000
    min_freq: int = 3
    retries: int = 2

    @staticmethod
    def from_file(path: str) -> dict:
        """Parse a ``key = value`` config file into override kwargs."""
        overrides: dict = {}
        aliases = {
            "scale-step": "scale_step",
            "scale-min": "scale_min",
            "line-factor": "line_factor",
            "lang-in": "lang_in",
            "lang-out": "lang_out",
            "out-dir": "out_dir",
            "batch-chars": "batch_chars",
            "min-freq": "min_freq",
        }
        for raw_line in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw_line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, value = (part.strip() for part in line.split("=", 1))
            key = aliases.get(key, key.replace("-", "_"))
            if key in ("scale_step", "scale_min", "line_factor"):
                overrides[key] = float(value)
            elif key in ("batch_chars", "min_freq", "retries"):
                overrides[key] = int(value)
            elif key in ("dual", "compress", "lenient"):
                overrides[key] = value.lower() in ("1", "true", "yes", "on")
            else:
                overrides[key] = value
        return overrides


@dataclass
class FileReport:
    input: str
    output: str = ""
    dual_output: str = ""
    pages: int = 0
    paragraphs: int = 0
    placeholders: int = 0
    stitched: int = 0
    gamma_histogram: dict[str, int] = field(default_factory=dict)
    overflow_at_min: int = 0
    utb_per_page: list[int] = field(default_factory=list)
    utb_mean: float = 0.0
    glossary_entries: int = 0
    user_glossary_entries: int = 0
    failed_paragraphs: int = 0
    warnings: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    seconds: float = 0.0
    prompts: list[str] = field(default_factory=list)  # diagnostics, not serialized

    def to_json(self) -> dict:
        return {
            "tool_version": __version__,
            "input": self.input,
            "output": self.output,
            "dual_output": self.dual_output,
            "pages": self.pages,
            "paragraphs": self.paragraphs,
            "placeholders": self.placeholders,
            "stitched": self.stitched,
            "gamma_histogram": dict(sorted(self.gamma_histogram.items())),
            "overflow_at_min": self.overflow_at_min,
            "utb_per_page": self.utb_per_page,
            "utb_mean": self.utb_mean,
            "glossary_entries": self.glossary_entries,
            "user_glossary_entries": self.user_glossary_entries,
            "failed_paragraphs": self.failed_paragraphs,
            "warnings": self.warnings,
            "errors": self.errors,
            "seconds": round(self.seconds, 3),
        }


# ---------------------------------------------------------------------------
# Stages
# ---------------------------------------------------------------------------


def segment_document(doc: DocumentIR, cfg: SegmentConfig, detections=None) -> None:
    """Populate page_layout and paragraphs (reading order) on every page."""
    for page in doc.pages:
        external = detections.get(page.page_number) if detections else None
        elements = segment_layout(page, cfg, external=external)
        order = reading_order(elements, page.media_box)
        page.page_layout = elements
        page.paragraph = build_paragraphs(page, elements, order, cfg)
        for para in page.paragraph:
            para.page_number = page.page_number


STITCHABLE = {"body_text", "list_item"}


def stitch_document(doc: DocumentIR, lang: str = "en") -> int:
    """Merge paragraphs continuing across columns and pages; returns count."""
    sequence: list[tuple[int, int]] = []
    for pi, page in enumerate(doc.pages):
        for qi in range(len(page.paragraph)):
            sequence.append((pi, qi))
    merged = 0
    by_ref = lambda ref: doc.pages[ref.page].paragraph[ref.index]  # noqa: E731
    for (p_pi, p_qi), (q_pi, q_qi) in zip(sequence, sequence[1:]):
        tail = doc.pages[p_pi].paragraph[p_qi]
        head = doc.pages[q_pi].paragraph[q_qi]
        if tail.layout_label not in STITCHABLE or head.layout_label not in STITCHABLE:
            continue
        if tail.element_id == head.element_id and p_pi == q_pi:
            continue
        crosses_page = q_pi > p_pi
        jumps_up = head.box.y2 > tail.box.y2 + 1.0  # next column starts above
        if not crosses_page and not jumps_up:
            continue
        decision = stitch_cross_units(tail, head, lang)
        if decision is StitchDecision.KEEP:
            continue
        root_ref = ParagraphRef(p_pi, p_qi)
        root = tail
        guard = 0
        while root.continuation_of is not None and guard < 64:
            root_ref = root.continuation_of
            root = by_ref(root_ref)
            guard += 1
        merge_stitched(root, head, decision)
        head.continuation_of = ParagraphRef(p_pi, p_qi)
        merged += 1
    return merged


def mask_document(doc: DocumentIR) -> int:
    """Apply the placeholder protocol to every translation unit; returns count."""
    total = 0
    for page in doc.pages:
        for para in page.paragraph:
            if para.continuation_of is not None:
                para.input = ""
                para.placeholders = []
                continue
            regions = find_maskable_regions(para, page, doc)
            mask_units(para, regions)
            total += len(para.placeholders)
    return total


def _continuation_chain(doc: DocumentIR, page_index: int, para_index: int) -> list:
    """Paragraphs continuing the given root, in document order."""
    chain = []
    for pi in range(page_index, len(doc.pages)):
        for qi, para in enumerate(doc.pages[pi].paragraph):
            ref = para.continuation_of
            if ref is None:
                continue
            root = (ref.page, ref.index)
            while True:
                prev = doc.pages[root[0]].paragraph[root[1]].continuation_of
                if prev is None:
                    break
                root = (prev.page, prev.index)
            if root == (page_index, para_index):
                chain.append(para)
    return chain


def typeset_document(
    doc: DocumentIR, ctx: RenderContext, cfg: TypesetConfig, report: FileReport
) -> None:
    """Fit every translated unit into its box(es) and record placements."""
    for pi, page in enumerate(doc.pages):
        for qi, para in enumerate(page.paragraph):
            if para.continuation_of is not None:
                continue
            if not para.input and not para.pdf_unicode.strip():
                para.placed = []
                continue
            units = unmask(para.output or para.input, para.placeholders)
            chain = _continuation_chain(doc, pi, qi)
            boxes = [para.box] + [c.box for c in chain]
            metrics = ctx.candidates_for(para.font_id)
            base = para.base_size or 10.0
            result, per_box = fit_across(units, boxes, cfg, metrics, base)
            para.fit = result
            key = f"{result.gamma:.2f}"
            report.gamma_histogram[key] = report.gamma_histogram.get(key, 0) + 1
            if result.status is FitStatus.OVERFLOW_AT_MIN:
                report.overflow_at_min += 1
                report.warnings.append(
                    f"page {page.page_number}: paragraph overflows at minimum scale "
                    f"{result.gamma:g}; content will clip"
                )
            targets = [para] + chain
            for target, lines in zip(targets, per_box):
                target.placed = place_glyphs(lines, target.box) if lines is not None else []
            for target in targets[len(per_box):]:
                target.placed = []


def render_document(
    doc: DocumentIR, ctx: RenderContext, dual: bool, compress: bool
) -> tuple[bytes, bytes | None]:
    """Render mono output (and the dual-alternating variant when asked)."""
    images = collect_images(doc)
    mono_pages = [
        RenderedPage(media_box=page.media_box, content=render_page(page, ctx, images))
        for page in doc.pages
    ]
    mono = assemble_document(mono_pages, ctx.registry, images, compress=compress)
    dual_bytes = None
    if dual:
        dual_pages: list[RenderedPage] = []
        for page in doc.pages:
            source_side = RenderedPage(
                media_box=page.media_box,
                content=render_page(page, ctx, images, source_mode=True),
            )
            dual_pages.append(source_side)
            dual_pages.append(
                RenderedPage(media_box=page.media_box, content=render_page(page, ctx, images))
            )
        dual_bytes = assemble_document(dual_pages, ctx.registry, images, compress=compress)
    return mono, dual_bytes


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def _dump_ir(doc: DocumentIR, directory: str, stem: str, stage: str) -> None:
    report = validate_ir(doc)
    if not report.ok:
        raise SchemaError(f"$.{stage}", f"IR invalid before dump: {report.summary()}")
    path = Path(directory) / f"{stem}.{stage}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_ir(doc), encoding="utf-8")


def process_file(path: str, config: PipelineConfig, backend=None) -> tuple[int, FileReport]:
    """Run the full pipeline on one file; returns (exit code, report)."""
    report = FileReport(input=str(path))
    started = time.perf_counter()
    stem = Path(path).stem
    out_dir = Path(config.out_dir) if config.out_dir else Path(path).parent
    out_dir.mkdir(parents=True, exist_ok=True)

    try:
        seg_cfg = SegmentConfig()
        fit_cfg = TypesetConfig(
            step=config.scale_step, min_gamma=config.scale_min, line_factor=config.line_factor
        )
        fit_cfg.validate()
        if backend is None:
            backend = make_backend(config.translator)
    except (InvalidConfig, UnknownMode) as exc:
        report.errors.append(str(exc))
        return EXIT_CONFIG, report
    except BackendUnavailable as exc:
        report.errors.append(f"backend unavailable: {exc}")
        return EXIT_BACKEND, report

    detections = None
    try:
        if config.detections:
            detections = load_detections(config.detections)
    except (OSError, ValueError, KeyError) as exc:
        report.errors.append(f"detections file unusable: {exc}")
        return EXIT_CONFIG, report

    try:
        doc = read_document(
            path,
            lenient=config.lenient,
            source_lang=config.lang_in,
            target_lang=config.lang_out,
        )
    except (PdfParseError, OSError) as exc:
        report.errors.append(f"parse failure: {exc}")
        return EXIT_PARSE, report
    report.warnings.extend(doc.warnings)
    report.pages = len(doc.pages)
    if not doc.pages:
        report.errors.append("EmptyDocument: input has no pages")
        return EXIT_PARSE, report

    try:
        if config.ir_dump:
            _dump_ir(doc, config.ir_dump, stem, "parsed")

        segment_document(doc, seg_cfg, detections)
        report.stitched = stitch_document(doc, config.lang_in)
        report.placeholders = mask_document(doc)
        report.paragraphs = sum(len(p.paragraph) for p in doc.pages)

        auto = extract_glossary(doc, TranslateConfig(min_freq=config.min_freq))
        user = load_glossary_csv(config.glossary_csv) if config.glossary_csv else []
        glossary = merge_glossaries(auto, user)
        report.glossary_entries = len(glossary)
        report.user_glossary_entries = len(user)
    except (ValueError, OSError) as exc:
        report.errors.append(f"configuration failure: {exc}")
        return EXIT_CONFIG, report

    try:
        t_cfg = TranslateConfig(
            min_freq=config.min_freq, batch_chars=config.batch_chars, retries=config.retries
        )
        stats = translate_document(doc, backend, t_cfg, glossary)
        report.failed_paragraphs = stats["failed"]
        report.prompts = stats["prompts"]
    except BackendUnavailable as exc:
        report.errors.append(f"backend unavailable: {exc}")
        return EXIT_BACKEND, report
    except BackendProtocolError as exc:
        report.errors.append(f"backend protocol error: {exc}")
        return EXIT_BACKEND, report

    try:
        registry = OutputFontRegistry()
        user_font = load_user_font(config.font_path) if config.font_path else None
        ctx = RenderContext(doc=doc, registry=registry, user_font=user_font)
        typeset_document(doc, ctx, fit_cfg, report)
        if config.ir_dump:
            _dump_ir(doc, config.ir_dump, stem, "translated")
        mono, dual_bytes = render_document(doc, ctx, config.dual, config.compress)
    except SchemaError as exc:
        report.errors.append(f"IR validation failure: {exc}")
        return EXIT_RENDER, report
    except (TranslayoutError, AssertionError, OSError) as exc:
        report.errors.append(f"render failure: {exc}")
        return EXIT_RENDER, report

    out_path = out_dir / f"{stem}.{config.lang_out}.pdf"
    out_path.write_bytes(mono)
    report.output = str(out_path)
    if dual_bytes is not None:
        dual_path = out_dir / f"{stem}.{config.lang_out}.dual.pdf"
        dual_path.write_bytes(dual_bytes)
        report.dual_output = str(dual_path)

    utb = count_utb(doc)
    report.utb_per_page = utb.per_page
    report.utb_mean = utb.document_mean
    report.seconds = time.perf_counter() - started

    report_path = out_dir / f"{stem}.report.json"
    payload = report.to_json()
    payload.pop("seconds", None)  # keep run artifacts byte-reproducible
    report_path.write_text(
        json.dumps(payload, indent=1, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    return EXIT_OK, report


def run_pipeline(config: PipelineConfig, backend=None) -> tuple[int, list[FileReport]]:
    """Process every input file; the exit code is the first failure's code."""
    if not config.files:
        report = FileReport(input="")
        report.errors.append("no input files given")
        return EXIT_CONFIG, [report]
    reports = []
    code = EXIT_OK
    for path in config.files:
        file_code, report = process_file(path, config, backend=backend)
        reports.append(report)
        if file_code != EXIT_OK and code == EXIT_OK:
            code = file_code
    return code, reports


def eval_command(
    src_pdf: str, dst_pdf: str, out_txt: str, out_json: str, lenient: bool = False,
    dual: bool = False,
) -> int:
    """Compare two documents and write the layout-fidelity report files."""
    from .errors import PageCountMismatch

    try:
        src = read_document(src_pdf, lenient=lenient)
        dst = read_document(dst_pdf, lenient=lenient)
    except (PdfParseError, OSError) as exc:
        logger.error("parse failure: %s", exc)
        return EXIT_PARSE
    if dual:
        from .evaluate import deinterleave_dual

        _, dst = deinterleave_dual(dst)
    try:
        biou = compute_biou(src, dst)
    except PageCountMismatch as exc:
        Path(out_txt).write_text(f"error: {exc}\n", encoding="utf-8")
        logger.error("%s", exc)
        return EXIT_PARSE
    write_reports(biou, None, out_txt, out_json)
    return EXIT_OK
