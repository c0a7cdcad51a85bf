"""Layout-fidelity metrics between source and translated documents.

Bounding-box IoU over matched layout elements (page-size normalized),
untranslated-block counting from IR flags, and emission of the image-judge
prompt artifact.  No model is ever invoked here.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .errors import MissingPath, PageCountMismatch
from .geometry import Box
from .ir import PLACEHOLDER_RE, DocumentIR, LayoutElement, PageIR
from .segment import SegmentConfig, reading_order, segment_layout


def iou(a: Box, b: Box) -> float:
    """Intersection area over union area; 0 when the union is empty."""
    inter = a.intersection_area(b)
    union = a.area() + b.area() - inter
    if union <= 0.0:
        return 0.0
    return inter / union


@dataclass(slots=True)
class MatchedPair:
    src_id: int
    dst_id: int
    iou: float
    src_class: str = ""
    dst_class: str = ""


@dataclass(slots=True)
class PageReport:
    page_number: int
    matched_pairs: list[MatchedPair] = field(default_factory=list)
    unmatched_src: list[int] = field(default_factory=list)
    unmatched_dst: list[int] = field(default_factory=list)
    page_mean: float = 0.0
    coverage: float = 0.0


@dataclass(slots=True)
class BIoUReport:
    per_page: list[PageReport] = field(default_factory=list)
    document_mean: float = 0.0
    coverage: float = 0.0

    def to_json(self) -> dict:
        return {
            "document_mean": self.document_mean,
            "coverage": self.coverage,
            "per_page": [
                {
                    "page_number": p.page_number,
                    "matched_pairs": [
                        {
                            "src_id": m.src_id,
                            "dst_id": m.dst_id,
                            "iou": m.iou,
                            "src_class": m.src_class,
                            "dst_class": m.dst_class,
                        }
                        for m in p.matched_pairs
                    ],
                    "unmatched_src": p.unmatched_src,
                    "unmatched_dst": p.unmatched_dst,
                    "page_mean": p.page_mean,
                    "coverage": p.coverage,
                }
                for p in self.per_page
            ],
        }


MATCH_WINDOW = 3


def match_elements(
    src: list[LayoutElement],
    dst: list[LayoutElement],
    src_order: list[int],
    dst_order: list[int],
) -> tuple[list[tuple[int, int, float]], list[int], list[int]]:
    """Greedy reading-order alignment with a positional window.

    Walks both orders; each source element pairs with the best-IoU
    destination candidate within the window (IoU must be positive).
    Returns (pairs, unmatched_src_ids, unmatched_dst_ids); boxes are
    compared as given (normalize first for page-size invariance).
    """
    src_by_id = {e.id: e for e in src}
    dst_by_id = {e.id: e for e in dst}
    dst_seq = [dst_by_id[i] for i in dst_order if i in dst_by_id]
    used: set[int] = set()
    pairs: list[tuple[int, int, float]] = []
    unmatched_src: list[int] = []
    cursor = 0
    for sid in src_order:
        if sid not in src_by_id:
            continue
        s = src_by_id[sid]
        best = None
        best_iou = 0.0
        for j in range(cursor, min(cursor + MATCH_WINDOW, len(dst_seq))):
            d = dst_seq[j]
            if d.id in used:
                continue
            value = iou(s.box, d.box)
            if value > best_iou:
                best_iou = value
                best = j
        if best is None or best_iou <= 0.0:
            unmatched_src.append(sid)
            continue
        d = dst_seq[best]
        used.add(d.id)
        pairs.append((sid, d.id, best_iou))
        # Advance past fully consumed prefix of the window.
        while cursor < len(dst_seq) and dst_seq[cursor].id in used:
            cursor += 1
    unmatched_dst = [d.id for d in dst_seq if d.id not in used]
    return pairs, unmatched_src, unmatched_dst


def _normalized_elements(page: PageIR, cfg: SegmentConfig | None) -> tuple[list[LayoutElement], list[int]]:
    elements = page.page_layout or segment_layout(page, cfg)
    order = reading_order(elements, page.media_box)
    w = page.media_box.width or 1.0
    h = page.media_box.height or 1.0
    normalized = [
        LayoutElement(
            id=e.id,
            class_name=e.class_name,
            box=Box(
                (e.box.x - page.media_box.x) / w,
                (e.box.y - page.media_box.y) / h,
                (e.box.x2 - page.media_box.x) / w,
                (e.box.y2 - page.media_box.y) / h,
            ),
            conf=e.conf,
        )
        for e in elements
    ]
    return normalized, order


def compute_biou(
    src_doc: DocumentIR, dst_doc: DocumentIR, cfg: SegmentConfig | None = None
) -> BIoUReport:
    """Page-size-normalized BIoU between two parsed documents.

    Pages must correspond one-to-one (de-interleave dual output first).
    Unmatched elements are excluded from the mean but reported through the
    coverage ratio.
    """
    if len(src_doc.pages) != len(dst_doc.pages):
        raise PageCountMismatch(len(src_doc.pages), len(dst_doc.pages))
    report = BIoUReport()
    total_matched = 0
    total_src = 0
    total_dst = 0
    for s_page, d_page in zip(src_doc.pages, dst_doc.pages):
        s_elems, s_order = _normalized_elements(s_page, cfg)
        d_elems, d_order = _normalized_elements(d_page, cfg)
        pairs, un_src, un_dst = match_elements(s_elems, d_elems, s_order, d_order)
        s_by_id = {e.id: e for e in s_elems}
        d_by_id = {e.id: e for e in d_elems}
        page_report = PageReport(page_number=s_page.page_number)
        for sid, did, value in pairs:
            page_report.matched_pairs.append(
                MatchedPair(
                    src_id=sid,
                    dst_id=did,
                    iou=value,
                    src_class=s_by_id[sid].class_name,
                    dst_class=d_by_id[did].class_name,
                )
            )
        page_report.unmatched_src = un_src
        page_report.unmatched_dst = un_dst
        denominator = max(len(s_elems), len(d_elems))
        page_report.coverage = len(pairs) / denominator if denominator else 0.0
        page_report.page_mean = (
            sum(m.iou for m in page_report.matched_pairs) / len(pairs) if pairs else 0.0
        )
        report.per_page.append(page_report)
        total_matched += len(pairs)
        total_src += len(s_elems)
        total_dst += len(d_elems)
    if report.per_page:
        report.document_mean = sum(p.page_mean for p in report.per_page) / len(report.per_page)
    denominator = max(total_src, total_dst)
    report.coverage = total_matched / denominator if denominator else 0.0
    return report


def deinterleave_dual(doc: DocumentIR) -> tuple[DocumentIR, DocumentIR]:
    """Split a dual-alternating document into (source-side, translated-side)."""
    src = DocumentIR(source_lang=doc.source_lang, target_lang=doc.target_lang)
    dst = DocumentIR(source_lang=doc.source_lang, target_lang=doc.target_lang)
    src.fonts = doc.fonts
    dst.fonts = doc.fonts
    src.states = doc.states
    dst.states = doc.states
    src.clips = doc.clips
    dst.clips = doc.clips
    for i, page in enumerate(doc.pages):
        target = src if i % 2 == 0 else dst
        clone = PageIR(
            page_number=len(target.pages),
            media_box=page.media_box,
            page_layout=page.page_layout,
            pdf_font=page.pdf_font,
            pdf_character=page.pdf_character,
            paragraph=page.paragraph,
            passthrough_ops=page.passthrough_ops,
        )
        target.pages.append(clone)
    return src, dst


# ---------------------------------------------------------------------------
# Untranslated text blocks
# ---------------------------------------------------------------------------


def _stripped(text: str) -> str:
    return "".join(PLACEHOLDER_RE.sub("", text).split())


@dataclass(slots=True)
class UtbReport:
    per_page: list[int] = field(default_factory=list)
    document_mean: float = 0.0
    total: int = 0

    def to_json(self) -> dict:
        return {"per_page": self.per_page, "total": self.total, "document_mean": self.document_mean}


def count_utb(doc: DocumentIR) -> UtbReport:
    """Count paragraphs whose translation left them unchanged (or failed).

    Placeholder tokens and whitespace are stripped before comparison, so a
    pure-placeholder paragraph (e.g. a display formula) never counts.
    """
    report = UtbReport()
    for page in doc.pages:
        count = 0
        for para in page.paragraph:
            if para.continuation_of is not None and not para.input:
                continue  # counted through its stitch root
            if para.failed:
                count += 1
                continue
            src = _stripped(para.input)
            out = _stripped(para.output)
            if src and out == src:
                count += 1
        report.per_page.append(count)
        report.total += count
    report.document_mean = report.total / len(doc.pages) if doc.pages else 0.0
    return report


# ---------------------------------------------------------------------------
# Judge prompt artifact
# ---------------------------------------------------------------------------

JUDGE_RUBRICS = (
    "Layout Fidelity",
    "Translation Precision",
    "Visual Aesthetics",
    "Terminology Consistency",
)

JUDGE_PROMPT_TEMPLATE = """Role: You are a senior Academic Journal Editor performing a comparative \
evaluation of PDF translations produced by {n_systems} different translation systems.

Task: Compare ALL {n_systems_upper} translated pages against the Original simultaneously. \
Because you are comparing them side-by-side, score them relative to each other.

Evaluation Rubrics (1-5 each):
- Layout Fidelity: Maintenance of columns, margins, font hierarchies, positioning of figures/tables.
- Translation Precision: Accuracy of academic meaning, scientific claims, data descriptions.
- Visual Aesthetics: Professional typography, line spacing, absence of text overlaps or bleeding.
- Terminology Consistency: Uniform use of domain-specific jargon, citations, figure labels.

Untranslated Blocks Count: Count the number of distinct text blocks that remain in the \
original language. Any text block that appears identical to the Original should be \
counted. Output the integer count.

Output Format:
system|Layout Fidelity:<score>|Translation Precision:<score>|Visual Aesthetics:<score>|\
Terminology Consistency:<count>|Untranslated Blocks:<count>
"""

_NUM_WORDS = {2: "TWO", 3: "THREE", 4: "FOUR", 5: "FIVE"}


def emit_judge_prompt(original_image_paths: list[str], system_image_paths: list[str]) -> str:
    """The comparative-evaluation prompt plus an attachment manifest.

    Purely an artifact: nothing is sent anywhere.  All listed paths must
    exist and at least one system rendering is required.
    """
    if not original_image_paths:
        raise MissingPath("<original image>")
    if not system_image_paths:
        raise MissingPath("<system image>")
    for path in list(original_image_paths) + list(system_image_paths):
        if not os.path.exists(path):
            raise MissingPath(str(path))
    n = len(system_image_paths)
    prompt = JUDGE_PROMPT_TEMPLATE.format(
        n_systems=n, n_systems_upper=_NUM_WORDS.get(n, str(n))
    )
    manifest = ["", "Attachments:"]
    for path in original_image_paths:
        manifest.append(f"original: {path}")
    for i, path in enumerate(system_image_paths, start=1):
        manifest.append(f"system{i}: {path}")
    return prompt + "\n".join(manifest) + "\n"


# ---------------------------------------------------------------------------
# Report files
# ---------------------------------------------------------------------------


def write_reports(
    biou: BIoUReport, utb: UtbReport | None, txt_path: str, json_path: str
) -> None:
    """Write the human-readable table and its machine-readable mirror."""
    lines = ["layout fidelity report", "=" * 60]
    for page in biou.per_page:
        lines.append(
            f"page {page.page_number}: mean IoU {page.page_mean:.4f} "
            f"({len(page.matched_pairs)} matched, {len(page.unmatched_src)} src-only, "
            f"{len(page.unmatched_dst)} out-only, coverage {page.coverage:.3f})"
        )
        for m in page.matched_pairs:
            lines.append(
                f"  {m.src_id:>3} -> {m.dst_id:<3} IoU {m.iou:.4f}  {m.src_class} / {m.dst_class}"
            )
    lines.append("-" * 60)
    lines.append(f"document mean BIoU: {biou.document_mean:.4f}")
    lines.append(f"coverage: {biou.coverage:.4f}")
    payload = {"biou": biou.to_json()}
    if utb is not None:
        lines.append(f"untranslated blocks per page: {utb.per_page} (mean {utb.document_mean:.2f})")
        payload["utb"] = utb.to_json()
    with open(txt_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    with open(json_path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, ensure_ascii=False)
        fh.write("\n")
