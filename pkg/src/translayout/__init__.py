"""Layout-preserving document translation through a decoupled page IR.

The package parses a constrained PDF subset into an intermediate
representation, translates text at the document level behind a reversible
placeholder protocol, refits the output with an iterative scale search,
and re-renders a visually faithful document.  An evaluation kit scores
layout fidelity (bounding-box IoU) and counts untranslated blocks.
"""

__version__ = "0.1.0"

from .errors import TranslayoutError
from .evaluate import BIoUReport, compute_biou, count_utb, emit_judge_prompt, iou
from .geometry import Box, Matrix, compose_matrix
from .ir import (
    CharRecord,
    DocumentIR,
    FontRecord,
    GraphicsState,
    LayoutElement,
    PageIR,
    Paragraph,
    Placeholder,
    deserialize_ir,
    serialize_ir,
    validate_ir,
)
from .mask import detect_scripts, mask_units, unmask
from .pipeline import PipelineConfig, eval_command, run_pipeline
from .reader import read_document
from .segment import build_paragraphs, reading_order, segment_layout, stitch_cross_units
from .translate import (
    GlossaryEntry,
    HttpBackend,
    MockBackend,
    build_prompt,
    extract_glossary,
    pseudo_translate,
    translate_batch,
    verify_placeholders,
)
from .typeset import FitStatus, ScalingResult, TypesetConfig, fit_paragraph, layout_lines, place_glyphs
from .writer import assemble_document, embed_font, render_page

__all__ = [
    "BIoUReport",
    "Box",
    "CharRecord",
    "DocumentIR",
    "FitStatus",
    "FontRecord",
    "GlossaryEntry",
    "GraphicsState",
    "HttpBackend",
    "LayoutElement",
    "Matrix",
    "MockBackend",
    "PageIR",
    "Paragraph",
    "PipelineConfig",
    "Placeholder",
    "ScalingResult",
    "TranslayoutError",
    "TypesetConfig",
    "assemble_document",
    "build_paragraphs",
    "build_prompt",
    "compose_matrix",
    "compute_biou",
    "count_utb",
    "deserialize_ir",
    "detect_scripts",
    "embed_font",
    "emit_judge_prompt",
    "eval_command",
    "extract_glossary",
    "fit_paragraph",
    "iou",
    "layout_lines",
    "mask_units",
    "place_glyphs",
    "pseudo_translate",
    "read_document",
    "reading_order",
    "render_page",
    "run_pipeline",
    "segment_layout",
    "serialize_ir",
    "stitch_cross_units",
    "translate_batch",
    "unmask",
    "validate_ir",
    "verify_placeholders",
]
