"""Re-rendering the translated IR into a PDF.

Pages are rebuilt from scratch: pass-through graphics re-emitted under
their recorded states (CTM and clips re-established), translated text
placed from typeset runs, and masked fragments redrawn from their restore
records.  Output is PDF 1.7 with a classic xref table; streams are
uncompressed unless compression is requested.
"""

from __future__ import annotations

import base64
import hashlib
import zlib
from dataclasses import dataclass, field

from .errors import MissingFontResource, UntypesetParagraph
from .fonts.metrics import (
    Base14Metrics,
    FallbackMetrics,
    FontMetrics,
    TrueTypeMetrics,
    base14_name,
)
from .fonts.truetype import TrueTypeFont
from .geometry import Box, Matrix
from .ir import CharRecord, ClipRecord, Color, DocumentIR, PageIR, Paragraph, PassthroughOp
from .typeset import PlacedRun

# ---------------------------------------------------------------------------
# Formatting helpers
# ---------------------------------------------------------------------------


def fnum(v: float) -> str:
    """Deterministic compact number: at most 4 decimals, no trailing zeros."""
    if v == int(v) and abs(v) < 1e12:
        return str(int(v))
    out = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if out in ("-0", "") else out


def escape_literal(data: bytes) -> str:
    out = []
    for b in data:
        if b in (0x28, 0x29, 0x5C):
            out.append("\\" + chr(b))
        elif 32 <= b < 127:
            out.append(chr(b))
        else:
            out.append(f"\\{b:03o}")
    return "(" + "".join(out) + ")"


# ---------------------------------------------------------------------------
# Font embedding
# ---------------------------------------------------------------------------


@dataclass
class EmbeddedFont:
    """A TrueType program prepared for CID embedding.

    Codes are glyph ids (identity CIDToGIDMap); widths are per-mille
    advances for the requested glyph set; characters the font lacks map to
    glyph 0 and are listed in ``missing``.
    """

    font: TrueTypeFont
    widths: dict[int, int] = field(default_factory=dict)  # gid -> permille
    encoding: dict[str, int] = field(default_factory=dict)  # char -> gid
    to_unicode: dict[int, str] = field(default_factory=dict)  # gid -> char
    missing: list[str] = field(default_factory=list)

    @property
    def name(self) -> str:
        return self.font.name or "Embedded"


def embed_font(font_bytes: bytes, glyph_set: set[str]) -> EmbeddedFont:
    """Prepare a TrueType font resource for the given characters.

    Identity two-byte encoding (code == glyph id), widths scaled to
    1/1000 em, full font program embedded.  Characters without a glyph fall
    back to .notdef and are recorded.  An empty glyph set yields a minimal
    resource with an empty width map.
    """
    font = TrueTypeFont(font_bytes)  # raises MalformedFont on bad data
    out = EmbeddedFont(font=font)
    for ch in sorted(glyph_set):
        gid = font.glyph_id(ord(ch))
        if gid is None:
            out.missing.append(ch)
            out.encoding[ch] = 0
            continue
        out.encoding[ch] = gid
        out.widths[gid] = font.advance_permille(gid)
        if gid not in out.to_unicode:
            out.to_unicode[gid] = ch
    return out


# ---------------------------------------------------------------------------
# Output font registry
# ---------------------------------------------------------------------------


@dataclass
class FontChoice:
    key: str
    kind: str  # "std14" | "fallback" | "embedded"
    metrics: FontMetrics
    embedded: EmbeddedFont | None = None


class CompositeMetrics(FontMetrics):
    """First-candidate-that-has-the-char metric lookup (render-accurate)."""

    def __init__(self, choices: list[FontChoice]):
        if not choices:
            raise MissingFontResource("no font candidates configured")
        self.choices = choices
        self.name = choices[0].metrics.name
        self.ascent = choices[0].metrics.ascent
        self.descent = choices[0].metrics.descent

    def choose(self, ch: str) -> FontChoice:
        for choice in self.choices:
            if choice.metrics.has_char(ch):
                return choice
        return self.choices[-1]

    def has_char(self, ch: str) -> bool:
        return any(c.metrics.has_char(ch) for c in self.choices)

    def width(self, ch: str) -> int:
        return self.choose(ch).metrics.width(ch)


class OutputFontRegistry:
    """Collects the output fonts a document actually uses."""

    def __init__(self):
        self._std14: dict[str, FontChoice] = {}
        self._fallback: FontChoice | None = None
        self._embedded: dict[str, FontChoice] = {}
        self._fallback_codes: set[int] = set()
        self._order: list[str] = []

    def _next_key(self) -> str:
        return f"TF{len(self._order) + 1}"

    def std14(self, name: str) -> FontChoice:
        if name not in self._std14:
            key = self._next_key()
            choice = FontChoice(key=key, kind="std14", metrics=Base14Metrics(name))
            self._std14[name] = choice
            self._order.append(key)
        return self._std14[name]

    def fallback(self) -> FontChoice:
        if self._fallback is None:
            key = self._next_key()
            self._fallback = FontChoice(key=key, kind="fallback", metrics=FallbackMetrics())
            self._order.append(key)
        return self._fallback

    def embedded(self, font: EmbeddedFont) -> FontChoice:
        tag = hashlib.md5(font.font.data).hexdigest()[:12]
        if tag not in self._embedded:
            key = self._next_key()
            self._embedded[tag] = FontChoice(
                key=key, kind="embedded", metrics=TrueTypeMetrics(font.font), embedded=font
            )
            self._order.append(key)
        return self._embedded[tag]

    def encode(self, choice: FontChoice, text: str) -> str:
        """Content-stream string operand for ``text`` under ``choice``."""
        if choice.kind == "std14":
            data = text.encode("cp1252", "replace")
            return escape_literal(data)
        if choice.kind == "fallback":
            codes = []
            for ch in text:
                cp = ord(ch) if ord(ch) <= 0xFFFF else 0xFFFD
                codes.append(cp)
                self._fallback_codes.add(cp)
            return "<" + "".join(f"{c:04X}" for c in codes) + ">"
        assert choice.embedded is not None
        codes = [choice.embedded.encoding.get(ch, 0) for ch in text]
        return "<" + "".join(f"{c:04X}" for c in codes) + ">"

    # -- object building -------------------------------------------------------

    def build_objects(self, asm: _Assembler) -> dict[str, int]:
        """Emit font objects; returns resource key -> object number."""
        out: dict[str, int] = {}
        for name, choice in self._std14.items():
            metrics = choice.metrics
            widths = [metrics._widths.get(c, 0) for c in range(32, 256)]
            arr = " ".join(str(w) for w in widths)
            out[choice.key] = asm.add(
                (
                    f"<< /Type /Font /Subtype /Type1 /BaseFont /{name} "
                    f"/Encoding /WinAnsiEncoding /FirstChar 32 /LastChar 255 "
                    f"/Widths [{arr}] >>"
                ).encode("latin-1")
            )
        if self._fallback is not None:
            out[self._fallback.key] = self._build_fallback(asm)
        for choice in self._embedded.values():
            out[choice.key] = self._build_embedded(asm, choice.embedded)
        return out

    def _build_fallback(self, asm: _Assembler) -> int:
        metrics = FallbackMetrics()
        codes = sorted(self._fallback_codes) or [0x20]
        w_parts = []
        runs: list[tuple[int, int, int]] = []
        for cp in codes:
            w = metrics.width(chr(cp))
            if runs and cp == runs[-1][1] + 1 and w == runs[-1][2]:
                runs[-1] = (runs[-1][0], cp, w)
            else:
                runs.append((cp, cp, w))
        for lo, hi, w in runs:
            w_parts.append(f"{lo} {hi} {w}")
        cmap = _identity_tounicode(codes)
        cmap_obj = asm.add_stream("", cmap)
        descriptor = asm.add(
            b"<< /Type /FontDescriptor /FontName /MetricsFallback /Flags 4 "
            b"/FontBBox [0 -200 1000 800] /ItalicAngle 0 /Ascent 800 /Descent -200 "
            b"/CapHeight 800 /StemV 80 >>"
        )
        descendant = asm.add(
            (
                "<< /Type /Font /Subtype /CIDFontType2 /BaseFont /MetricsFallback "
                "/CIDSystemInfo << /Registry (Adobe) /Ordering (Identity) /Supplement 0 >> "
                f"/FontDescriptor {descriptor} 0 R /DW 500 /W [{' '.join(w_parts)}] "
                "/CIDToGIDMap /Identity >>"
            ).encode("latin-1")
        )
        return asm.add(
            (
                "<< /Type /Font /Subtype /Type0 /BaseFont /MetricsFallback "
                f"/Encoding /Identity-H /DescendantFonts [{descendant} 0 R] "
                f"/ToUnicode {cmap_obj} 0 R >>"
            ).encode("latin-1")
        )

    def _build_embedded(self, asm: _Assembler, font: EmbeddedFont) -> int:
        scale = 1000.0 / font.font.units_per_em
        ascent = int(round(font.font.ascent * scale))
        descent = int(round(font.font.descent * scale))
        program = asm.add_stream("/Length1 %d" % len(font.font.data), font.font.data)
        name = (font.name or "Embedded").replace(" ", "")
        descriptor = asm.add(
            (
                f"<< /Type /FontDescriptor /FontName /{name} /Flags 4 "
                f"/FontBBox [0 {descent} 1000 {max(ascent, 1)}] /ItalicAngle 0 "
                f"/Ascent {ascent} /Descent {descent} /CapHeight {max(ascent, 1)} "
                f"/StemV 80 /FontFile2 {program} 0 R >>"
            ).encode("latin-1")
        )
        w_parts = [f"{gid} {gid} {w}" for gid, w in sorted(font.widths.items())]
        pairs = sorted((gid, ch) for gid, ch in font.to_unicode.items())
        lines = [
            b"/CIDInit /ProcSet findresource begin",
            b"12 dict begin", b"begincmap",
            b"/CMapName /EmbeddedToUnicode def", b"/CMapType 2 def",
            b"1 begincodespacerange", b"<0000> <FFFF>", b"endcodespacerange",
            f"{max(len(pairs), 1)} beginbfchar".encode(),
        ]
        if pairs:
            for gid, ch in pairs:
                dst = ch.encode("utf-16-be").hex().upper()
                lines.append(f"<{gid:04X}> <{dst}>".encode())
        else:
            lines.append(b"<0000> <FFFD>")
        lines += [b"endbfchar", b"endcmap",
                  b"CMapName currentdict /CMap defineresource pop", b"end", b"end"]
        cmap_obj = asm.add_stream("", b"\n".join(lines))
        descendant = asm.add(
            (
                f"<< /Type /Font /Subtype /CIDFontType2 /BaseFont /{name} "
                "/CIDSystemInfo << /Registry (Adobe) /Ordering (Identity) /Supplement 0 >> "
                f"/FontDescriptor {descriptor} 0 R /DW 500 "
                f"/W [{' '.join(w_parts)}] /CIDToGIDMap /Identity >>"
            ).encode("latin-1")
        )
        return asm.add(
            (
                f"<< /Type /Font /Subtype /Type0 /BaseFont /{name} "
                f"/Encoding /Identity-H /DescendantFonts [{descendant} 0 R] "
                f"/ToUnicode {cmap_obj} 0 R >>"
            ).encode("latin-1")
        )


def _identity_tounicode(codes: list[int]) -> bytes:
    ranges: list[tuple[int, int]] = []
    for code in codes:
        if ranges and code == ranges[-1][1] + 1:
            ranges[-1] = (ranges[-1][0], code)
        else:
            ranges.append((code, code))
    body = [b"/CIDInit /ProcSet findresource begin",
            b"12 dict begin", b"begincmap",
            b"/CMapName /FallbackToUnicode def", b"/CMapType 2 def",
            b"1 begincodespacerange", b"<0000> <FFFF>", b"endcodespacerange",
            f"{len(ranges)} beginbfrange".encode()]
    for lo, hi in ranges:
        body.append(f"<{lo:04X}> <{hi:04X}> <{lo:04X}>".encode())
    body += [b"endbfrange", b"endcmap",
             b"CMapName currentdict /CMap defineresource pop", b"end", b"end"]
    return b"\n".join(body)


# ---------------------------------------------------------------------------
# Render context
# ---------------------------------------------------------------------------


@dataclass
class RenderContext:
    doc: DocumentIR
    registry: OutputFontRegistry
    user_font: EmbeddedFont | None = None
    warnings: list[str] = field(default_factory=list)

    def candidates_for(self, source_font_id: str | None) -> CompositeMetrics:
        """Output-font candidates for text originating in the given font."""
        choices: list[FontChoice] = []
        if self.user_font is not None:
            choices.append(self.registry.embedded(self.user_font))
        record = self.doc.fonts.get(source_font_id) if source_font_id else None
        if record is not None:
            std = base14_name(record.name)
            if std is not None:
                choices.append(self.registry.std14(std))
        choices.append(self.registry.fallback())
        return CompositeMetrics(choices)


@dataclass
class RenderedPage:
    media_box: Box
    content: bytes


# ---------------------------------------------------------------------------
# Content emission
# ---------------------------------------------------------------------------


def _color_ops(color: Color, stroke: bool) -> str:
    comps = " ".join(fnum(c) for c in color.components)
    op = {"gray": "g", "rgb": "rg", "cmyk": "k"}.get(color.space, "g")
    return f"{comps} {op.upper() if stroke else op}"


def _clip_chain(ctx: RenderContext, clip_id: int | None) -> list[ClipRecord]:
    chain: list[ClipRecord] = []
    seen = 0
    while clip_id is not None and clip_id in ctx.doc.clips:
        record = ctx.doc.clips[clip_id]
        chain.append(record)
        clip_id = record.parent
        seen += 1
        if seen > 64:
            break
    chain.reverse()
    return chain


def _path_ops_str(ops: tuple) -> str:
    parts = []
    for op in ops:
        kind = op[0]
        nums = " ".join(fnum(v) for v in op[1:])
        parts.append(f"{nums} {kind}".strip())
    return " ".join(parts)


def _emit_clips(ctx: RenderContext, clip_id: int | None) -> str:
    parts = []
    for record in _clip_chain(ctx, clip_id):
        parts.append(_path_ops_str(record.ops))
        parts.append("W* n" if record.even_odd else "W n")
    return " ".join(parts)


def _emit_passthrough(
    ctx: RenderContext, op: PassthroughOp, page_number: int, images: dict
) -> str:
    state = ctx.doc.states.get(op.state_id) if op.state_id is not None else None
    ctm = state.ctm if state is not None else Matrix.identity()
    parts = ["q"]
    if state is not None:
        clip_ops = _emit_clips(ctx, state.clip_id)
        if clip_ops:
            parts.append(clip_ops)
    if op.kind == "path":
        if state is not None:
            parts.append(_color_ops(state.fill_color, stroke=False))
            parts.append(_color_ops(state.stroke_color, stroke=True))
        parts.append(f"{' '.join(fnum(v) for v in ctm.coefficients())} cm")
        parts.append(_path_ops_str(op.ops))
        parts.append(op.paint)
    else:
        parts.append(f"{' '.join(fnum(v) for v in ctm.coefficients())} cm")
        parts.append(f"/{images[(page_number, op.seq)][0]} Do")
    parts.append("Q")
    return " ".join(parts)


def _emit_text_runs(
    ctx: RenderContext, runs: list[tuple[FontChoice, str, float, float, float]]
) -> str:
    """Emit (choice, text, x, baseline, size) tuples as one text object."""
    if not runs:
        return ""
    parts = ["BT"]
    current_font: tuple[str, float] | None = None
    for choice, text, x, baseline, size in runs:
        if current_font != (choice.key, size):
            parts.append(f"/{choice.key} {fnum(size)} Tf")
            current_font = (choice.key, size)
        parts.append(f"1 0 0 1 {fnum(x)} {fnum(baseline)} Tm")
        parts.append(f"{ctx.registry.encode(choice, text)} Tj")
    parts.append("ET")
    return " ".join(parts)


def _split_by_font(metrics: CompositeMetrics, text: str) -> list[tuple[FontChoice, str]]:
    runs: list[tuple[FontChoice, str]] = []
    for ch in text:
        choice = metrics.choose(ch)
        if runs and runs[-1][0] is choice:
            runs[-1] = (choice, runs[-1][1] + ch)
        else:
            runs.append((choice, ch))
    return runs


def _emit_placed_text(
    ctx: RenderContext, run: PlacedRun, metrics: CompositeMetrics
) -> list[tuple[FontChoice, str, float, float, float]]:
    out = []
    x = run.x
    for choice, segment in _split_by_font(metrics, run.text):
        width = sum(choice.metrics.width(c) for c in segment) / 1000.0 * run.size
        out.append((choice, segment, x, run.baseline, run.size))
        x += width
    return out


def _emit_restore(ctx: RenderContext, run: PlacedRun, page: PageIR, images: dict) -> str:
    """Redraw a masked fragment at its flowed anchor, offsets scaled by gamma."""
    ph = run.placeholder
    if ph is None or ph.restore is None:
        return ""
    record = ph.restore
    gamma = run.gamma
    parts: list[str] = []
    text_runs: list[tuple[FontChoice, str, float, float, float]] = []
    for unit in record.units:
        if unit.kind == "char":
            src_page = page if unit.page is None else ctx.doc.pages[unit.page]
            ch = next(
                (c for c in src_page.pdf_character if c.render_order == unit.ref), None
            )
            if ch is None:
                continue
            metrics = ctx.candidates_for(ch.font_id)
            size = unit.scale * record.base_size * gamma
            x = run.x + unit.dx * gamma
            y = run.baseline + unit.dy * gamma
            for choice, segment in _split_by_font(metrics, ch.char_unicode):
                text_runs.append((choice, segment, x, y, size))
                x += sum(choice.metrics.width(c) for c in segment) / 1000.0 * size
        else:
            src_page = page if unit.page is None else ctx.doc.pages[unit.page]
            op = next((o for o in src_page.passthrough_ops if o.seq == unit.ref), None)
            if op is None:
                continue
            target_x = run.x + unit.dx * gamma
            target_y = run.baseline + unit.dy * gamma
            # Anchor the op's device box corner at the flowed position.
            tx = target_x - gamma * op.box.x
            ty = target_y - gamma * op.box.y
            state = ctx.doc.states.get(op.state_id) if op.state_id is not None else None
            sub = ["q", f"{fnum(gamma)} 0 0 {fnum(gamma)} {fnum(tx)} {fnum(ty)} cm"]
            if op.kind == "path":
                if state is not None:
                    sub.append(_color_ops(state.fill_color, stroke=False))
                    sub.append(_color_ops(state.stroke_color, stroke=True))
                ctm = state.ctm if state is not None else Matrix.identity()
                sub.append(f"{' '.join(fnum(v) for v in ctm.coefficients())} cm")
                sub.append(_path_ops_str(op.ops))
                sub.append(op.paint)
            else:
                ctm = state.ctm if state is not None else Matrix.identity()
                sub.append(f"{' '.join(fnum(v) for v in ctm.coefficients())} cm")
                key = (src_page.page_number, op.seq)
                sub.append(f"/{images[key][0]} Do" if key in images else "n")
            sub.append("Q")
            parts.append(" ".join(sub))
    if text_runs:
        parts.append(_emit_text_runs(ctx, text_runs))
    return " ".join(p for p in parts if p)


def _batch_source_chars(
    ctx: RenderContext, chars: list[CharRecord]
) -> list[tuple[FontChoice, str, float, float, float]]:
    """Group original characters into runs positioned at their own boxes."""
    runs: list[tuple[FontChoice, str, float, float, float]] = []
    pending: tuple[FontChoice, str, float, float, float] | None = None
    cursor_x = 0.0
    for ch in sorted(chars, key=lambda c: c.render_order):
        metrics = ctx.candidates_for(ch.font_id)
        choice = metrics.choose(ch.char_unicode[:1] or " ")
        size = ch.font_size
        if pending is not None:
            _, text, x, baseline, psize = pending
            same = (
                abs(baseline - ch.baseline_y) < 1e-4
                and abs(psize - size) < 1e-4
                and pending[0] is choice
                and abs(cursor_x - ch.box.x) < 0.02
            )
            if same:
                pending = (choice, text + ch.char_unicode, x, baseline, psize)
                cursor_x += sum(choice.metrics.width(c) for c in ch.char_unicode) / 1000.0 * size
                continue
            runs.append(pending)
        pending = (choice, ch.char_unicode, ch.box.x, ch.baseline_y, size)
        cursor_x = ch.box.x + sum(
            choice.metrics.width(c) for c in ch.char_unicode
        ) / 1000.0 * size
    if pending is not None:
        runs.append(pending)
    return runs


def render_page(
    page: PageIR,
    ctx: RenderContext,
    images: dict,
    source_mode: bool = False,
) -> bytes:
    """Build the content stream for one page.

    ``source_mode`` re-emits the original characters (dual-page source
    sides); otherwise paragraphs must carry typeset runs and only
    non-paragraph characters are re-emitted verbatim.
    """
    parts: list[str] = []
    consumed_ops: set[int] = set()
    consumed_chars: set[int] = set()
    if not source_mode:
        for para in page.paragraph:
            for ph in para.placeholders:
                for unit in ph.source_units:
                    if unit.page is not None and unit.page != page.page_number:
                        continue
                    if unit.kind == "op":
                        consumed_ops.add(unit.ref)
                    else:
                        consumed_chars.add(unit.ref)
            consumed_chars.update(para.unit_ids)

    for op in page.passthrough_ops:
        if not source_mode and op.seq in consumed_ops:
            continue
        parts.append(_emit_passthrough(ctx, op, page.page_number, images))

    if source_mode:
        runs = _batch_source_chars(ctx, page.pdf_character)
        text = _emit_text_runs(ctx, runs)
        if text:
            parts.append(text)
    else:
        leftovers = [c for c in page.pdf_character if c.render_order not in consumed_chars]
        if leftovers:
            text = _emit_text_runs(ctx, _batch_source_chars(ctx, leftovers))
            if text:
                parts.append(text)
        for para in page.paragraph:
            if para.merged_into is not None or para.continuation_of is not None:
                placed = para.placed or []
            elif para.placed is None:
                if para.input or para.pdf_unicode.strip():
                    raise UntypesetParagraph(
                        f"paragraph on page {page.page_number} was never typeset"
                    )
                placed = []
            else:
                placed = para.placed
            metrics = ctx.candidates_for(para.font_id)
            text_runs: list[tuple[FontChoice, str, float, float, float]] = []
            for run in placed:
                if run.kind == "text":
                    text_runs.extend(_emit_placed_text(ctx, run, metrics))
                else:
                    if text_runs:
                        parts.append(_emit_text_runs(ctx, text_runs))
                        text_runs = []
                    restored = _emit_restore(ctx, run, page, images)
                    if restored:
                        parts.append(restored)
            if text_runs:
                parts.append(_emit_text_runs(ctx, text_runs))

    content = "\n".join(p for p in parts if p).encode("latin-1", "replace")
    _assert_balanced(content, page.page_number)
    return content


def _assert_balanced(content: bytes, page_number: int) -> None:
    tokens = content.split()
    for open_tok, close_tok in ((b"q", b"Q"), (b"BT", b"ET")):
        if tokens.count(open_tok) != tokens.count(close_tok):
            raise AssertionError(
                f"page {page_number}: unbalanced {open_tok.decode()}/{close_tok.decode()}"
            )


# ---------------------------------------------------------------------------
# Document assembly
# ---------------------------------------------------------------------------


class _Assembler:
    def __init__(self, compress: bool = False):
        self.objects: list[bytes] = []
        self.compress = compress

    def add(self, body: bytes) -> int:
        self.objects.append(body)
        return len(self.objects)

    def reserve(self) -> int:
        self.objects.append(b"")
        return len(self.objects)

    def set(self, num: int, body: bytes) -> None:
        self.objects[num - 1] = body

    def add_stream(self, sdict: str, data: bytes, compressible: bool = False) -> int:
        entries = sdict.strip()
        if self.compress and compressible:
            data = zlib.compress(data)
            entries = (entries + " /Filter /FlateDecode").strip()
        body = f"<< {entries} /Length {len(data)} >>\nstream\n".encode("latin-1")
        return self.add(body + data + b"\nendstream")

    def tobytes(self, root: int) -> bytes:
        out = bytearray(b"%PDF-1.7\n%\xe2\xe3\xcf\xd3\n")
        offsets = [0]
        for i, body in enumerate(self.objects, start=1):
            offsets.append(len(out))
            out += f"{i} 0 obj\n".encode("latin-1")
            out += body
            out += b"\nendobj\n"
        doc_id = hashlib.md5(bytes(out)).hexdigest().upper()
        xref_pos = len(out)
        out += f"xref\n0 {len(self.objects) + 1}\n".encode("latin-1")
        out += b"0000000000 65535 f \n"
        for off in offsets[1:]:
            out += f"{off:010d} 00000 n \n".encode("latin-1")
        out += (
            f"trailer\n<< /Size {len(self.objects) + 1} /Root {root} 0 R "
            f"/ID [<{doc_id}> <{doc_id}>] >>\nstartxref\n{xref_pos}\n%%EOF\n"
        ).encode("latin-1")
        return bytes(out)


def collect_images(doc: DocumentIR) -> dict[tuple[int, int], tuple[str, PassthroughOp]]:
    """Name every image op across the document: (page, seq) -> (name, op)."""
    out: dict[tuple[int, int], tuple[str, PassthroughOp]] = {}
    counter = 0
    for page in doc.pages:
        for op in page.passthrough_ops:
            if op.kind == "image":
                counter += 1
                out[(page.page_number, op.seq)] = (f"XO{counter}", op)
    return out


def assemble_document(
    rendered: list[RenderedPage],
    registry: OutputFontRegistry,
    images: dict[tuple[int, int], tuple[str, PassthroughOp]],
    compress: bool = False,
) -> bytes:
    """Assemble rendered pages into a complete PDF.

    Mono and dual page sequences are decided by the caller; this function
    writes whatever page list it is given, in order.
    """
    asm = _Assembler(compress=compress)
    catalog = asm.reserve()
    pages_obj = asm.reserve()
    font_objects = registry.build_objects(asm)
    image_objects: dict[tuple[int, int], tuple[str, int]] = {}
    for key, (name, op) in images.items():
        entries = (
            f"/Type /XObject /Subtype /Image /Width {op.width} /Height {op.height} "
            f"/ColorSpace /{op.color_space or 'DeviceRGB'} /BitsPerComponent {op.bits}"
        )
        if op.filter:
            entries += f" /Filter /{op.filter}"
        data = base64.b64decode(op.data_b64) if op.data_b64 else b""
        image_objects[key] = (name, asm.add_stream(entries, data))

    page_nums = []
    for page in rendered:
        content_obj = asm.add_stream("", page.content, compressible=True)
        fonts = " ".join(f"/{key} {num} 0 R" for key, num in sorted(font_objects.items()))
        resources = f"<< /Font << {fonts} >>"
        if image_objects:
            xs = " ".join(f"/{name} {num} 0 R" for name, num in image_objects.values())
            resources += f" /XObject << {xs} >>"
        resources += " >>"
        mb = page.media_box
        page_nums.append(
            asm.add(
                (
                    f"<< /Type /Page /Parent {pages_obj} 0 R "
                    f"/MediaBox [{fnum(mb.x)} {fnum(mb.y)} {fnum(mb.x2)} {fnum(mb.y2)}] "
                    f"/Resources {resources} /Contents {content_obj} 0 R >>"
                ).encode("latin-1")
            )
        )
    kids = " ".join(f"{n} 0 R" for n in page_nums)
    asm.set(
        pages_obj,
        f"<< /Type /Pages /Kids [{kids}] /Count {len(page_nums)} >>".encode("latin-1"),
    )
    asm.set(catalog, f"<< /Type /Catalog /Pages {pages_obj} 0 R >>".encode("latin-1"))
    return asm.tobytes(catalog)


def load_user_font(path: str) -> EmbeddedFont:
    """Read a TrueType file for target-script embedding (full BMP on demand)."""
    with open(path, "rb") as fh:
        data = fh.read()
    font = TrueTypeFont(data)
    out = EmbeddedFont(font=font)
    # Pre-register the font's full charmap so any output text is coverable.
    for cp, gid in font.charmap().items():
        ch = chr(cp)
        out.encoding[ch] = gid
        out.widths[gid] = font.advance_permille(gid)
        out.to_unicode.setdefault(gid, ch)
    return out
