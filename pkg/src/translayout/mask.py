"""Script detection and the reversible placeholder protocol.

Non-translatable fragments (citation markers, formula runs, inline images,
code spans, super/subscript runs) are replaced by ``{v<id>}`` tokens before
translation and restored afterwards from recorded geometry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import UnknownPlaceholder
from .geometry import Box
from .ir import (
    CharRecord,
    DocumentIR,
    PageIR,
    Paragraph,
    Placeholder,
    RestoreRecord,
    RestoreUnit,
    placeholder_token,
)

OBJECT_CHAR = "￼"  # stands in for an inline image in paragraph text

SUPERSCRIPT = "superscript"
SUBSCRIPT = "subscript"
NORMAL = "normal"

SIZE_RATIO_MAX = 0.80  # script glyphs are at most this fraction of body size
BASELINE_OFFSET_MIN = 0.15  # of body size, in points

CITATION_RE = re.compile(r"\[\s*\d+(?:\s*[,–—-]\s*\d+)*\s*\]")

_MONO_HINTS = ("courier", "mono")


@dataclass(slots=True)
class ScriptSpan:
    unit_ids: list[int]  # render orders, contiguous within the line
    kind: str  # superscript | subscript | normal
    size_ratio: float
    baseline_offset: float


def _body_size(chars: list[CharRecord]) -> float:
    counts: dict[float, int] = {}
    for c in chars:
        key = round(c.font_size, 3)
        counts[key] = counts.get(key, 0) + 1
    return max(counts.items(), key=lambda kv: (kv[1], kv[0]))[0]


def _line_baseline(chars: list[CharRecord], body: float) -> float:
    candidates = sorted(c.baseline_y for c in chars if abs(c.font_size - body) < 1e-3)
    if not candidates:
        candidates = sorted(c.baseline_y for c in chars)
    return candidates[len(candidates) // 2]


def detect_scripts(line_chars: list[CharRecord]) -> list[ScriptSpan]:
    """Classify a visual line into normal/superscript/subscript runs.

    Body size is the modal font size on the line; a run is scripted when its
    glyphs are small relative to the body and shifted off the line baseline.
    """
    if not line_chars:
        return []
    body = _body_size(line_chars)
    baseline = _line_baseline(line_chars, body)

    def classify(c: CharRecord) -> str:
        ratio = c.font_size / body if body > 0 else 1.0
        offset = c.baseline_y - baseline
        if ratio <= SIZE_RATIO_MAX and offset >= BASELINE_OFFSET_MIN * body:
            return SUPERSCRIPT
        if ratio <= SIZE_RATIO_MAX and offset <= -BASELINE_OFFSET_MIN * body:
            return SUBSCRIPT
        return NORMAL

    spans: list[ScriptSpan] = []
    for c in line_chars:
        kind = classify(c)
        if spans and spans[-1].kind == kind:
            spans[-1].unit_ids.append(c.render_order)
        else:
            spans.append(
                ScriptSpan(
                    unit_ids=[c.render_order],
                    kind=kind,
                    size_ratio=(c.font_size / body) if body > 0 else 1.0,
                    baseline_offset=c.baseline_y - baseline,
                )
            )
    return spans


def compute_offsets(
    span_chars: list[CharRecord], line_baseline_y: float, body_size: float
) -> list[tuple[float, float, float]]:
    """Per-unit (dx, dy, scale) offsets relative to the span's anchor."""
    if not span_chars:
        return []
    anchor_x = min(c.box.x for c in span_chars)
    out = []
    for c in span_chars:
        out.append(
            (
                c.box.x - anchor_x,
                c.baseline_y - line_baseline_y,
                (c.font_size / body_size) if body_size > 0 else 1.0,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Maskable-region discovery
# ---------------------------------------------------------------------------


@dataclass(slots=True)
class MaskRegion:
    start: int  # character range in pdf_unicode, end exclusive
    end: int
    type: str
    priority: int
    restore: RestoreRecord | None = None
    source_units: list[RestoreUnit] = field(default_factory=list)


_PRIORITY = {"formula": 0, "inline_image": 1, "code_span": 2, "symbol_run": 3, "citation_marker": 4}


def _restore_record(
    para: Paragraph,
    page: PageIR,
    doc: DocumentIR,
    start: int,
    end: int,
    baseline_hint: float | None = None,
) -> tuple[RestoreRecord, list[RestoreUnit]]:
    """Build the geometry record for pdf_unicode[start:end]."""
    own_page = para.page_number if para.page_number is not None else page.page_number

    def page_of(number: int) -> PageIR | None:
        if number == page.page_number:
            return page
        if 0 <= number < len(doc.pages):
            return doc.pages[number]
        return None

    char_refs: list[tuple[int, int, CharRecord]] = []
    op_refs: list[tuple[int, int, object]] = []
    for entry in para.unit_map[start:end]:
        kind, ref, pnum = entry
        src = page_of(pnum)
        if src is None:
            continue
        if kind == "char":
            match = next((c for c in src.pdf_character if c.render_order == ref), None)
            if match is not None:
                char_refs.append((ref, pnum, match))
        elif kind == "op":
            match = next((o for o in src.passthrough_ops if o.seq == ref), None)
            if match is not None:
                op_refs.append((ref, pnum, match))
    boxes = [c.box for _, _, c in char_refs] + [o.box for _, _, o in op_refs]
    base = para.base_size or 10.0
    if not boxes:
        anchor = Box(0.0, 0.0, 0.0, 0.0)
        return RestoreRecord(anchor=anchor, baseline_y=0.0, base_size=base), []
    anchor = boxes[0]
    for b in boxes[1:]:
        anchor = anchor.union(b)
    run_chars = [c for _, _, c in char_refs]
    if baseline_hint is not None:
        baseline = baseline_hint
    elif run_chars:
        sizes: dict[float, int] = {}
        for c in run_chars:
            key = round(c.font_size, 3)
            sizes[key] = sizes.get(key, 0) + 1
        run_body = max(sizes.items(), key=lambda kv: (kv[1], kv[0]))[0]
        baselines = sorted(
            c.baseline_y for c in run_chars if abs(c.font_size - run_body) < 1e-3
        )
        baseline = baselines[len(baselines) // 2]
    else:
        baseline = anchor.y
    units = []
    for ref, pnum, c in char_refs:
        units.append(
            RestoreUnit(
                kind="char",
                ref=ref,
                dx=c.box.x - anchor.x,
                dy=c.baseline_y - baseline,
                scale=(c.font_size / base) if base > 0 else 1.0,
                page=None if pnum == own_page else pnum,
            )
        )
    for ref, pnum, op in op_refs:
        units.append(
            RestoreUnit(
                kind="op",
                ref=ref,
                dx=op.box.x - anchor.x,
                dy=op.box.y - baseline,
                scale=1.0,
                page=None if pnum == own_page else pnum,
            )
        )
    record = RestoreRecord(anchor=anchor, baseline_y=baseline, base_size=base, units=units)
    return record, list(units)


def _attach_region_ops(region: MaskRegion, para: Paragraph, page: PageIR) -> None:
    """Fold vector segments under the paragraph box into a formula record."""
    record = region.restore
    known = {(u.kind, u.ref) for u in record.units if u.page is None}
    old_anchor = record.anchor
    anchor = old_anchor
    for op in page.passthrough_ops:
        if op.kind != "path" or ("op", op.seq) in known:
            continue
        if not op.box.intersects(para.box.expanded(3.0)):
            continue
        record.units.append(
            RestoreUnit(
                kind="op",
                ref=op.seq,
                dx=op.box.x - old_anchor.x,
                dy=op.box.y - record.baseline_y,
                scale=1.0,
            )
        )
        anchor = anchor.union(op.box)
    if anchor is not old_anchor:
        shift = old_anchor.x - anchor.x
        for unit in record.units:
            unit.dx += shift
        record.anchor = anchor
        region.source_units = list(record.units)


def _citation_regions(text: str) -> list[tuple[int, int]]:
    """Citation spans with trailing punctuation and one adjacent space absorbed."""
    out = []
    for m in CITATION_RE.finditer(text):
        start, end = m.start(), m.end()
        while end < len(text) and text[end] in ",.;:":
            end += 1
        if end < len(text) and text[end] == " ":
            end += 1
        elif end == len(text) and start > 0 and text[start - 1] == " ":
            start -= 1
        out.append((start, end))
    return out


def find_maskable_regions(
    para: Paragraph, page: PageIR, doc: DocumentIR
) -> list[MaskRegion]:
    """Locate every maskable run in a paragraph's raw text."""
    text = para.pdf_unicode
    regions: list[MaskRegion] = []
    chars = {c.render_order: c for c in page.pdf_character}

    def add(
        start: int, end: int, rtype: str,
        with_restore: bool = True, baseline_hint: float | None = None,
    ) -> None:
        if start >= end:
            return
        record, units = (None, [])
        if with_restore:
            record, units = _restore_record(para, page, doc, start, end, baseline_hint)
        regions.append(
            MaskRegion(
                start=start,
                end=end,
                type=rtype,
                priority=_PRIORITY[rtype],
                restore=record,
                source_units=units,
            )
        )

    if para.layout_label == "formula_region":
        add(0, len(text), "formula")
        region = regions[-1] if regions else None
        if region is not None and region.restore is not None:
            _attach_region_ops(region, para, page)
        return regions

    # Inline images, anchored to the nearest character's baseline.
    def nearest_char_baseline(position: int) -> float | None:
        for offset in range(1, len(para.unit_map)):
            for j in (position - offset, position + offset):
                if 0 <= j < len(para.unit_map):
                    kind, ref, pnum = para.unit_map[j]
                    if kind != "char":
                        continue
                    src = page if pnum == page.page_number else (
                        doc.pages[pnum] if 0 <= pnum < len(doc.pages) else None
                    )
                    if src is None:
                        continue
                    c = next(
                        (c for c in src.pdf_character if c.render_order == ref), None
                    )
                    if c is not None:
                        return c.baseline_y
        return None

    for i, ch in enumerate(text):
        if ch == OBJECT_CHAR:
            add(i, i + 1, "inline_image", baseline_hint=nearest_char_baseline(i))

    # Script runs (index ranges of contiguous scripted characters).
    def char_at(position: int) -> CharRecord | None:
        kind, ref, pnum = para.unit_map[position]
        if kind != "char":
            return None
        if pnum == page.page_number:
            return chars.get(ref)
        if 0 <= pnum < len(doc.pages):
            return next(
                (c for c in doc.pages[pnum].pdf_character if c.render_order == ref), None
            )
        return None

    line: list[CharRecord] = []
    line_positions: list[int] = []

    def flush_line() -> None:
        if not line:
            return
        spans = detect_scripts(line)
        body = _body_size(line)
        line_base = _line_baseline(line, body)
        pos = 0
        for span in spans:
            span_len = len(span.unit_ids)
            if span.kind != NORMAL:
                start = line_positions[pos]
                end = line_positions[pos + span_len - 1] + 1
                add(start, end, "symbol_run", baseline_hint=line_base)
            pos += span_len
        line.clear()
        line_positions.clear()

    prev_char = None
    for i in range(len(para.unit_map)):
        c = char_at(i)
        if c is None:
            continue
        if line and prev_char is not None:
            body = _body_size(line)
            if abs(c.baseline_y - prev_char.baseline_y) > 0.6 * max(body, c.font_size):
                flush_line()
        line.append(c)
        line_positions.append(i)
        prev_char = c
    flush_line()

    # Code spans: monospace-font runs inside a non-monospace paragraph.
    dominant_name = ""
    if para.font_id and para.font_id in doc.fonts:
        dominant_name = doc.fonts[para.font_id].name.lower()
    if not any(h in dominant_name for h in _MONO_HINTS):
        run_start = None
        last_idx = None
        for i in range(len(para.unit_map)):
            c = char_at(i)
            if c is None or c.font_id is None:
                continue
            fname = (doc.fonts[c.font_id].name if c.font_id in doc.fonts else "").lower()
            mono = any(h in fname for h in _MONO_HINTS)
            if mono and run_start is None:
                run_start = i
            if not mono and run_start is not None:
                add(run_start, last_idx + 1, "code_span")
                run_start = None
            last_idx = i
        if run_start is not None and last_idx is not None:
            add(run_start, last_idx + 1, "code_span")

    # Citation markers.
    for start, end in _citation_regions(text):
        add(start, end, "citation_marker")

    return regions


# ---------------------------------------------------------------------------
# Masking and unmasking
# ---------------------------------------------------------------------------


def mask_units(para: Paragraph, regions: list[MaskRegion]) -> Paragraph:
    """Populate ``input`` and ``placeholders`` from maskable regions.

    Overlapping regions are resolved by priority (formula first), then ids
    are assigned densely left to right.
    """
    accepted: list[MaskRegion] = []
    for region in sorted(regions, key=lambda r: (r.priority, r.start, -(r.end - r.start))):
        if all(region.end <= a.start or region.start >= a.end for a in accepted):
            accepted.append(region)
    accepted.sort(key=lambda r: r.start)

    text = para.pdf_unicode
    out: list[str] = []
    placeholders: list[Placeholder] = []
    cursor = 0
    for i, region in enumerate(accepted, start=1):
        out.append(text[cursor : region.start])
        out.append(placeholder_token(i))
        placeholders.append(
            Placeholder(
                type=region.type,
                id=i,
                placeholder=placeholder_token(i),
                source_chars=text[region.start : region.end],
                source_units=region.source_units,
                restore=region.restore,
            )
        )
        cursor = region.end
    out.append(text[cursor:])
    para.input = "".join(out)
    para.placeholders = placeholders
    return para


@dataclass(slots=True)
class TypesetUnit:
    """One flow unit after unmasking: plain text or a restored fragment."""

    kind: str  # "text" | "restore"
    text: str = ""
    placeholder: Placeholder | None = None


_TOKEN_RE = re.compile(r"\{v(\d+)\}")


def unmask(output_text: str, placeholders: list[Placeholder]) -> list[TypesetUnit]:
    """Split translated text into text runs and restoration units.

    Follows output order (translation may legally reorder placeholders);
    referencing an id absent from the record set is an error.
    """
    by_id = {p.id: p for p in placeholders}
    units: list[TypesetUnit] = []
    cursor = 0
    for m in _TOKEN_RE.finditer(output_text):
        pid = int(m.group(1))
        if pid not in by_id:
            raise UnknownPlaceholder(pid)
        if m.start() > cursor:
            units.append(TypesetUnit(kind="text", text=output_text[cursor : m.start()]))
        units.append(TypesetUnit(kind="restore", placeholder=by_id[pid]))
        cursor = m.end()
    if cursor < len(output_text):
        units.append(TypesetUnit(kind="text", text=output_text[cursor:]))
    return units


def flatten_units(units: list[TypesetUnit]) -> str:
    """Rebuild plain text from typeset units (restores contribute source text)."""
    parts = []
    for u in units:
        if u.kind == "text":
            parts.append(u.text)
        else:
            parts.append(u.placeholder.source_chars if u.placeholder else "")
    return "".join(parts)
