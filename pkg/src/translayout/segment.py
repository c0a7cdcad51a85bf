"""Layout segmentation: elements, reading order, paragraphs, stitching.

Heuristic segmentation stands in for a learned layout detector: band rules
for headers and footers, whitespace-gutter column detection, and line-gap
block grouping.  Externally produced detections can replace the heuristics
through :func:`load_detections`.
"""

from __future__ import annotations

import json
import statistics
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .geometry import Box
from .ir import CharRecord, LayoutElement, PageIR, Paragraph
from .mask import detect_scripts

MATH_CHARS = set("=+/*<>()[]{}|\\^~×±∓∑∏∫√∞≈≠≤≥∂∇∈∉⊂⊃∪∩→←↔⇒⇐⇔∀∃−")


def is_cjk(ch: str) -> bool:
    return unicodedata.east_asian_width(ch) in ("W", "F")


@dataclass
class SegmentConfig:
    header_band: float = 0.08  # fraction of page height
    footer_band: float = 0.08
    column_gap_frac: float = 0.03  # of page width
    column_span_frac: float = 0.60  # of text block height
    line_gap_factor: float = 1.6
    indent_em: float = 1.0
    space_gap_factor: float = 0.25
    formula_math_ratio: float = 0.30
    formula_script_ratio: float = 0.25
    heuristic_conf: float = 0.9


@dataclass
class VisualLine:
    chars: list[CharRecord] = field(default_factory=list)
    images: list = field(default_factory=list)  # PassthroughOp, kind == "image"
    _box: Box | None = field(default=None, repr=False)
    _size: float | None = field(default=None, repr=False)
    _baseline: float | None = field(default=None, repr=False)

    def add(self, ch: CharRecord) -> None:
        self.chars.append(ch)
        self._box = self._box.union(ch.box) if self._box is not None else ch.box
        self._size = None
        self._baseline = None

    @property
    def box(self) -> Box:
        if self._box is None:
            b = self.chars[0].box
            for c in self.chars[1:]:
                b = b.union(c.box)
            self._box = b
        return self._box

    @property
    def size(self) -> float:
        """Modal font size; ties resolved toward the larger size."""
        if self._size is None:
            counts: dict[float, int] = {}
            for c in self.chars:
                key = round(c.font_size, 3)
                counts[key] = counts.get(key, 0) + 1
            self._size = max(counts.items(), key=lambda kv: (kv[1], kv[0]))[0]
        return self._size

    @property
    def baseline(self) -> float:
        if self._baseline is None:
            body = self.size
            candidates = [c.baseline_y for c in self.chars if abs(c.font_size - body) < 1e-3]
            if not candidates:
                candidates = [c.baseline_y for c in self.chars]
            self._baseline = statistics.median(candidates)
        return self._baseline

    def text(self) -> str:
        ordered = sorted(self.chars, key=lambda c: c.render_order)
        return "".join(c.char_unicode for c in ordered)


def cluster_lines(
    chars: list[CharRecord],
    split_gap: float | None = None,
    obstacles: tuple[Box, ...] = (),
) -> list[VisualLine]:
    """Group characters into visual lines by baseline proximity.

    The tolerance is generous enough to keep super/subscripts on their body
    line while separating normally leaded lines.  ``split_gap`` breaks a
    baseline run at horizontal gaps that wide (column gutters, table cells)
    so side-by-side columns never merge into one line.
    """
    lines: list[VisualLine] = []
    for ch in sorted(chars, key=lambda c: c.render_order):
        best = None
        best_delta = None
        for line in lines:
            tol = 0.6 * max(ch.font_size, line.size, 1e-6)
            delta = abs(ch.baseline_y - line.baseline)
            if delta <= tol and (best_delta is None or delta < best_delta):
                best = line
                best_delta = delta
        if best is None:
            line = VisualLine()
            line.add(ch)
            lines.append(line)
        else:
            best.add(ch)
    if split_gap is not None and split_gap > 0:
        split: list[VisualLine] = []
        for line in lines:
            ordered = sorted(line.chars, key=lambda c: (c.box.x, c.render_order))
            group = VisualLine()
            group.add(ordered[0])
            right_edge = ordered[0].box.x2
            for ch in ordered[1:]:
                if _free_gap(right_edge, ch.box, obstacles) > split_gap:
                    split.append(group)
                    group = VisualLine()
                group.add(ch)
                right_edge = max(right_edge, ch.box.x2)
            split.append(group)
        lines = split
    lines.sort(key=lambda ln: -ln.baseline)
    return lines


def _free_gap(right_edge: float, next_box: Box, obstacles: tuple[Box, ...]) -> float:
    """Widest obstacle-free stretch between a line's edge and the next char.

    Inline images sit between words without any character in between; they
    must not read as a column gutter.
    """
    gap = next_box.x - right_edge
    if gap <= 0 or not obstacles:
        return gap
    blockers = []
    for ob in obstacles:
        if ob.x2 <= right_edge or ob.x >= next_box.x:
            continue
        if ob.y2 < next_box.y or ob.y > next_box.y2:
            continue
        blockers.append((max(ob.x, right_edge), min(ob.x2, next_box.x)))
    if not blockers:
        return gap
    blockers.sort()
    widest = 0.0
    cursor = right_edge
    for lo, hi in blockers:
        widest = max(widest, lo - cursor)
        cursor = max(cursor, hi)
    widest = max(widest, next_box.x - cursor)
    return widest


def _median_line_height(lines: list[VisualLine]) -> float:
    heights = [ln.box.height for ln in lines if ln.chars]
    return statistics.median(heights) if heights else 10.0


def _math_ratio(line: VisualLine) -> float:
    glyphs = [c.char_unicode for c in line.chars if not c.char_unicode.isspace()]
    if not glyphs:
        return 0.0
    if not any(g[:1].isalnum() for g in glyphs):
        return 0.0  # operators need operands; bare punctuation is not a formula
    hits = sum(1 for g in glyphs if g and g[0] in MATH_CHARS)
    return hits / len(glyphs)


def _script_ratio(line: VisualLine) -> float:
    if not line.chars:
        return 0.0
    ordered = sorted(line.chars, key=lambda c: c.render_order)
    spans = detect_scripts(ordered)
    scripted = sum(len(s.unit_ids) for s in spans if s.kind != "normal")
    return scripted / len(line.chars)


# ---------------------------------------------------------------------------
# segment_layout
# ---------------------------------------------------------------------------


def _find_gutters(lines: list[VisualLine], cfg: SegmentConfig, page_w: float) -> list[float]:
    """Return x positions of column gutters among the given lines.

    A gutter slice must separate real text: lines fully on its left and
    fully on its right at the same heights, with at most a tolerated
    fraction of lines crossing it.
    """
    if not lines:
        return []
    block = lines[0].box
    for ln in lines[1:]:
        block = block.union(ln.box)
    if block.width <= 0 or block.height <= 0:
        return []
    min_gap = cfg.column_gap_frac * page_w
    heights = [ln.box.height for ln in lines]
    median_h = statistics.median(heights) if heights else 10.0
    min_separation = max(2.0 * median_h, 0.1 * block.height)

    def union(intervals: list[tuple[float, float]]) -> list[tuple[float, float]]:
        merged: list[tuple[float, float]] = []
        for y1, y2 in sorted(intervals):
            if merged and y1 <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], y2))
            else:
                merged.append((y1, y2))
        return merged

    def total(intervals: list[tuple[float, float]]) -> float:
        return sum(y2 - y1 for y1, y2 in intervals)

    def intersect(a: list[tuple[float, float]], b: list[tuple[float, float]]) -> float:
        out = 0.0
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if hi > lo:
                out += hi - lo
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        return out

    line_boxes = [(ln.box.x, ln.box.x2, ln.box.y, ln.box.y2) for ln in lines]

    def is_gutter_bin(x: float) -> bool:
        left = union([(y, y2) for (lx, lx2, y, y2) in line_boxes if lx2 <= x])
        right = union([(y, y2) for (lx, lx2, y, y2) in line_boxes if lx >= x])
        separated = intersect(left, right)
        if separated < min_separation:
            return False
        crossing = total(
            union([(y, y2) for (lx, lx2, y, y2) in line_boxes if lx < x < lx2])
        )
        return crossing <= (1.0 - cfg.column_span_frac) * separated

    step = 1.0
    n_bins = max(1, int(block.width / step))
    gutters: list[float] = []
    run_start = None
    for i in range(1, n_bins + 1):
        x = block.x + i * step
        if i < n_bins and is_gutter_bin(x):
            if run_start is None:
                run_start = x
        else:
            if run_start is not None and (x - step) - run_start + step >= min_gap:
                gutters.append((run_start + x - step) / 2.0 + step / 2.0)
            run_start = None
    return gutters


def _classify_block(lines: list[VisualLine]) -> str:
    text = lines[0].text().strip() if lines else ""
    lowered = text.lower()
    if lowered.startswith(("figure ", "fig. ", "table ")):
        return "figure_caption"
    if text[:1] in ("•", "–", "-", "*") and text[1:2] == " ":
        return "list_item"
    if len(text) > 2 and text[0].isdigit() and text[1] in ".)" and text[2] == " ":
        return "list_item"
    return "body_text"


def segment_layout(
    page: PageIR,
    cfg: SegmentConfig | None = None,
    external: list[LayoutElement] | None = None,
) -> list[LayoutElement]:
    """Produce layout elements covering every character of the page.

    With ``external`` detections the supplied elements pass through verbatim
    and uncovered lines get supplemental low-confidence blocks; otherwise
    band, gutter, and gap heuristics label the page.
    """
    cfg = cfg or SegmentConfig()
    split_gap = cfg.column_gap_frac * page.media_box.width
    obstacles = tuple(op.box for op in page.passthrough_ops if op.kind == "image")
    lines = cluster_lines(page.pdf_character, split_gap, obstacles)
    if external is not None:
        elements = [
            LayoutElement(id=i + 1, class_name=e.class_name, box=e.box, conf=e.conf)
            for i, e in enumerate(external)
        ]
        next_id = len(elements) + 1
        orphan: list[VisualLine] = []
        for line in lines:
            b = line.box
            cx, cy = (b.x + b.x2) / 2.0, (b.y + b.y2) / 2.0
            if not any(e.box.expanded(1.0).contains_point(cx, cy) for e in elements):
                orphan.append(line)
        for group in _group_adjacent(orphan, cfg, _median_line_height(lines)):
            box = group[0].box
            for ln in group[1:]:
                box = box.union(ln.box)
            elements.append(LayoutElement(id=next_id, class_name="body_text", box=box, conf=0.5))
            next_id += 1
        return elements
    if not lines:
        return []

    page_h = page.media_box.height
    header_y = page.media_box.y2 - cfg.header_band * page_h
    footer_y = page.media_box.y + cfg.footer_band * page_h

    headers: list[VisualLine] = []
    footers: list[VisualLine] = []
    formulas: list[VisualLine] = []
    body: list[VisualLine] = []
    for line in lines:
        if line.box.y >= header_y:
            headers.append(line)
        elif line.box.y2 <= footer_y:
            footers.append(line)
        elif (
            _math_ratio(line) >= cfg.formula_math_ratio
            or _script_ratio(line) >= cfg.formula_script_ratio
        ):
            formulas.append(line)
        else:
            body.append(line)

    median_h = _median_line_height(lines)
    # Absorb short lines sandwiched into a formula's horizontal extent
    # (e.g. the denominator under a fraction bar).
    changed = True
    while changed and formulas:
        changed = False
        fbox = formulas[0].box
        for ln in formulas[1:]:
            fbox = fbox.union(ln.box)
        for line in list(body):
            b = line.box
            if (
                b.x >= fbox.x - 2.0
                and b.x2 <= fbox.x2 + 2.0
                and (abs(b.y2 - fbox.y) <= 1.5 * median_h or abs(fbox.y2 - b.y) <= 1.5 * median_h)
            ):
                body.remove(line)
                formulas.append(line)
                changed = True

    elements: list[LayoutElement] = []
    next_id = 1

    def emit(group: list[VisualLine], class_name: str, conf: float) -> None:
        nonlocal next_id
        if not group:
            return
        box = group[0].box
        for ln in group[1:]:
            box = box.union(ln.box)
        elements.append(LayoutElement(id=next_id, class_name=class_name, box=box, conf=conf))
        next_id += 1

    for group in _group_adjacent(headers, cfg, median_h):
        emit(group, "page_header_hybrid", cfg.heuristic_conf)

    gutters = _find_gutters(body, cfg, page.media_box.width)

    def column_of(line: VisualLine) -> int | None:
        b = line.box
        for g in gutters:
            if b.x < g - 1.0 and b.x2 > g + 1.0:
                return None  # spans a gutter: full-width line
        cx = (b.x + b.x2) / 2.0
        col = 0
        for g in gutters:
            if cx > g:
                col += 1
        return col

    buckets: dict[object, list[VisualLine]] = {}
    for line in body:
        buckets.setdefault(column_of(line), []).append(line)
    for key in sorted(buckets, key=lambda k: (k is None, k if k is not None else 0)):
        for group in _group_adjacent(buckets[key], cfg, median_h):
            cls = _classify_block(group)
            conf = cfg.heuristic_conf if cls == "body_text" else 0.8
            emit(group, cls, conf)

    path_boxes = [op.box for op in page.passthrough_ops if op.kind == "path"]
    for group in _group_adjacent(formulas, cfg, median_h, gap_factor=2.2):
        box = group[0].box
        for ln in group[1:]:
            box = box.union(ln.box)
        # Vector segments inside the region (fraction bars, radicals) belong to it.
        grown = True
        while grown:
            grown = False
            for pb in path_boxes:
                if pb.intersects(box.expanded(3.0)) and not (
                    pb.x >= box.x and pb.x2 <= box.x2 and pb.y >= box.y and pb.y2 <= box.y2
                ):
                    box = box.union(pb)
                    grown = True
        elements.append(
            LayoutElement(id=next_id, class_name="formula_region", box=box, conf=0.85)
        )
        next_id += 1

    for group in _group_adjacent(footers, cfg, median_h):
        emit(group, "page_footer", cfg.heuristic_conf)

    return elements


def _group_adjacent(
    lines: list[VisualLine],
    cfg: SegmentConfig,
    median_h: float,
    gap_factor: float | None = None,
) -> list[list[VisualLine]]:
    """Split top-to-bottom lines into blocks at large baseline gaps."""
    factor = gap_factor if gap_factor is not None else cfg.line_gap_factor
    ordered = sorted(lines, key=lambda ln: -ln.baseline)
    groups: list[list[VisualLine]] = []
    for line in ordered:
        if groups and (groups[-1][-1].baseline - line.baseline) <= factor * median_h:
            groups[-1].append(line)
        else:
            groups.append([line])
    return groups


# ---------------------------------------------------------------------------
# reading_order
# ---------------------------------------------------------------------------


def _widest_gap(spans: list[tuple[float, float]]) -> tuple[float, float] | None:
    """Widest uncovered interval strictly inside the union of spans."""
    spans = sorted(spans)
    best: tuple[float, float] | None = None
    covered_to = spans[0][1]
    for lo, hi in spans[1:]:
        if lo > covered_to:
            gap = (covered_to, lo)
            if best is None or (gap[1] - gap[0]) > (best[1] - best[0]):
                best = gap
        covered_to = max(covered_to, hi)
    return best


def reading_order(elements: list[LayoutElement], media_box: Box) -> list[int]:
    """Total ordering of element ids by recursive whitespace cuts.

    Column gutters (vertical whitespace) are cut first, then horizontal
    gaps; regions that cannot be cut fall back to top-to-bottom,
    left-to-right, id order.
    """

    def cut(items: list[LayoutElement]) -> list[int]:
        if not items:
            return []
        if len(items) == 1:
            return [items[0].id]
        gap = _widest_gap([(e.box.x, e.box.x2) for e in items])
        if gap is not None:
            mid = (gap[0] + gap[1]) / 2.0
            left = [e for e in items if (e.box.x + e.box.x2) / 2.0 <= mid]
            right = [e for e in items if (e.box.x + e.box.x2) / 2.0 > mid]
            if left and right:
                return cut(left) + cut(right)
        gap = _widest_gap([(e.box.y, e.box.y2) for e in items])
        if gap is not None:
            mid = (gap[0] + gap[1]) / 2.0
            top = [e for e in items if (e.box.y + e.box.y2) / 2.0 > mid]
            bottom = [e for e in items if (e.box.y + e.box.y2) / 2.0 <= mid]
            if top and bottom:
                return cut(top) + cut(bottom)
        ordered = sorted(items, key=lambda e: (-e.box.y2, e.box.x, e.id))
        return [e.id for e in ordered]

    return cut(list(elements))


# ---------------------------------------------------------------------------
# build_paragraphs
# ---------------------------------------------------------------------------


def _assign_lines(
    lines: list[VisualLine], elements: list[LayoutElement]
) -> dict[int, list[VisualLine]]:
    """Map element id -> lines whose centers it contains (smallest wins)."""
    out: dict[int, list[VisualLine]] = {e.id: [] for e in elements}
    for line in lines:
        b = line.box
        cx, cy = (b.x + b.x2) / 2.0, (b.y + b.y2) / 2.0
        candidates = [e for e in elements if e.box.expanded(1.0).contains_point(cx, cy)]
        if not candidates:
            continue
        candidates.sort(key=lambda e: (e.box.area(), e.id))
        out[candidates[0].id].append(line)
    return out


def _needs_space(prev_box: Box, next_box: Box, size: float, cfg: SegmentConfig) -> bool:
    return (next_box.x - prev_box.x2) > cfg.space_gap_factor * size


def build_paragraphs(
    page: PageIR,
    elements: list[LayoutElement],
    order: list[int],
    cfg: SegmentConfig | None = None,
) -> list[Paragraph]:
    """Group characters (and inline images) into paragraphs in reading order."""
    cfg = cfg or SegmentConfig()
    images = [op for op in page.passthrough_ops if op.kind == "image"]
    lines = cluster_lines(
        page.pdf_character,
        cfg.column_gap_frac * page.media_box.width,
        tuple(op.box for op in images),
    )
    for line in lines:
        if not line.chars:
            continue
        lo = min(c.render_order for c in line.chars)
        hi = max(c.render_order for c in line.chars)
        for op in images:
            if lo <= op.char_anchor < hi or (
                op.box.y < line.baseline < op.box.y2
                and line.box.x - 1 <= op.box.x
                and op.box.x2 <= line.box.x2 + 1
            ):
                line.images.append(op)
    by_element = _assign_lines(lines, elements)
    by_id = {e.id: e for e in elements}

    paragraphs: list[Paragraph] = []
    for eid in order:
        element = by_id[eid]
        elines = sorted(by_element.get(eid, []), key=lambda ln: -ln.baseline)
        if not elines:
            continue
        if element.class_name == "formula_region":
            chunks = [elines]
        else:
            chunks = []
            for line in elines:
                indent = line.box.x - element.box.x
                if chunks and indent <= cfg.indent_em * line.size:
                    chunks[-1].append(line)
                else:
                    chunks.append([line])
        for chunk in chunks:
            para = _assemble_paragraph(chunk, element, page.page_number, cfg)
            paragraphs.append(para)
    return paragraphs


def _assemble_paragraph(
    chunk: list[VisualLine], element: LayoutElement, page_number: int, cfg: SegmentConfig
) -> Paragraph:
    text_parts: list[str] = []
    unit_map: list[tuple[str, int, int]] = []
    unit_ids: list[int] = []
    box: Box | None = None
    font_counts: dict[str, int] = {}
    size_counts: dict[float, int] = {}

    def push(text: str, kind: str, ref: int) -> None:
        text_parts.append(text)
        for _ in text:
            unit_map.append((kind, ref, page_number))

    for li, line in enumerate(chunk):
        units: list[tuple] = [("char", c) for c in sorted(line.chars, key=lambda c: c.render_order)]
        for op in sorted(line.images, key=lambda o: o.char_anchor):
            idx = 0
            for i, (kind, c) in enumerate(units):
                if kind == "char" and c.render_order <= op.char_anchor:
                    idx = i + 1
            units.insert(idx, ("op", op))
        if li > 0 and text_parts:
            prev_text = "".join(text_parts)
            first = units[0]
            first_text = first[1].char_unicode if first[0] == "char" else "￼"
            if (
                prev_text.endswith("-")
                and len(prev_text) > 1
                and prev_text[-2].isalpha()
                and first_text[:1].islower()
            ):
                pass  # keep the hyphen; join without a space
            elif prev_text and is_cjk(prev_text[-1]) and is_cjk(first_text[:1] or " "):
                pass
            else:
                push(" ", "space", 0)
        prev = None
        for kind, payload in units:
            if kind == "char":
                ch: CharRecord = payload
                if prev is not None and _needs_space(prev, ch.box, line.size, cfg):
                    push(" ", "space", 0)
                push(ch.char_unicode, "char", ch.render_order)
                unit_ids.append(ch.render_order)
                box = ch.box if box is None else box.union(ch.box)
                if ch.font_id:
                    font_counts[ch.font_id] = font_counts.get(ch.font_id, 0) + 1
                key = round(ch.font_size, 3)
                size_counts[key] = size_counts.get(key, 0) + 1
                prev = ch.box
            else:
                op = payload
                if prev is not None and _needs_space(prev, op.box, line.size, cfg):
                    push(" ", "space", 0)
                push("￼", "op", op.seq)
                box = op.box if box is None else box.union(op.box)
                prev = op.box

    size = max(size_counts.items(), key=lambda kv: (kv[1], kv[0]))[0] if size_counts else 10.0
    font = max(font_counts.items(), key=lambda kv: kv[1])[0] if font_counts else None
    box = box if box is not None else element.box
    if element.class_name == "formula_region":
        box = box.union(element.box)  # the region box carries its vector segments
    para = Paragraph(
        pdf_unicode="".join(text_parts),
        layout_label=element.class_name,
        box=box,
        unit_ids=unit_ids,
    )
    para.element_id = element.id
    para.page_number = page_number
    para.base_size = size
    para.font_id = font
    para.unit_map = unit_map
    return para


# ---------------------------------------------------------------------------
# Cross-column / cross-page stitching
# ---------------------------------------------------------------------------


def load_detections(path: str | Path) -> dict[int, list[LayoutElement]]:
    """Read an external layout-detection file: page -> elements.

    Format: ``{"pages": [{"page_number": N, "elements": [{"class_name",
    "box": {"x","y","x2","y2"}, "conf"}, ...]}]}``.
    """
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    out: dict[int, list[LayoutElement]] = {}
    for page in raw.get("pages", []):
        number = int(page["page_number"])
        elements = []
        for i, e in enumerate(page.get("elements", [])):
            b = e["box"]
            elements.append(
                LayoutElement(
                    id=i + 1,
                    class_name=str(e["class_name"]),
                    box=Box(float(b["x"]), float(b["y"]), float(b["x2"]), float(b["y2"])),
                    conf=float(e.get("conf", 1.0)),
                )
            )
        out[number] = elements
    return out


class StitchDecision(Enum):
    MERGE = "merge"
    MERGE_DEHYPHENATE = "merge_dehyphenate"
    KEEP = "keep"


TERMINAL_PUNCTUATION = ".!?:;。！？"

CONTINUATION_WORDS = {
    "en": {
        "and", "or", "but", "the", "a", "an", "of", "in", "to", "with",
        "for", "on", "at", "by", "is", "are", "was", "were", "that", "which",
    },
}


def _first_word(text: str) -> str:
    stripped = text.lstrip()
    return stripped.split(" ", 1)[0] if stripped else ""


def stitch_cross_units(tail: Paragraph, head: Paragraph, lang: str = "en") -> StitchDecision:
    """Decide whether a column/page-boundary paragraph pair continues."""
    t = tail.pdf_unicode.rstrip()
    h = head.pdf_unicode.lstrip()
    if not t or not h:
        return StitchDecision.KEEP
    if t.endswith("-") and len(t) > 1 and t[-2].isalpha() and h[:1].islower():
        return StitchDecision.MERGE_DEHYPHENATE
    if t[-1] in TERMINAL_PUNCTUATION:
        return StitchDecision.KEEP
    first = _first_word(h)
    continues = (
        h[0].islower()
        or is_cjk(h[0])
        or first in CONTINUATION_WORDS.get(lang, set())
    )
    return StitchDecision.MERGE if continues else StitchDecision.KEEP


def merge_stitched(tail: Paragraph, head: Paragraph, decision: StitchDecision) -> None:
    """Fold ``head`` into ``tail`` as one translation unit.

    The tail absorbs the combined raw text (the unit the translator sees);
    the head keeps its own characters and box and is marked as a
    continuation.
    """
    t = tail.pdf_unicode
    h = head.pdf_unicode
    lead_trim = len(h) - len(h.lstrip())
    if decision is StitchDecision.MERGE_DEHYPHENATE:
        cut = len(t.rstrip()) - 1  # drop the trailing hyphen
        tail.pdf_unicode = t[:cut] + h.lstrip()
        tail.unit_map = tail.unit_map[:cut] + head.unit_map[lead_trim:]
    else:
        sep = "" if (t and h.lstrip() and is_cjk(t[-1]) and is_cjk(h.lstrip()[0])) else " "
        tail.pdf_unicode = t + sep + h.lstrip()
        tail.unit_map = (
            tail.unit_map
            + ([("space", 0, tail.page_number or 0)] if sep else [])
            + head.unit_map[lead_trim:]
        )
