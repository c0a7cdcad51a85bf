"""Bundled synthetic test corpus: small hand-assembled PDF documents.

Each builder writes raw PDF syntax directly (classic xref, uncompressed
streams) so the corpus stays independent of the package's own renderer.
The six documents cover the layouts the acceptance suite exercises:
single column, two columns, header/footer bands, a display formula with a
vector bar plus an inline image, citation-dense text, and mixed Latin/CJK
content backed by a synthetic CID font.
"""

from __future__ import annotations

from pathlib import Path

from .fonts.metrics import Base14Metrics

PAGE_W = 612.0
PAGE_H = 792.0

CORPUS_NAMES = (
    "single_column",
    "two_column",
    "header_footer",
    "formula",
    "citations",
    "cjk_mixed",
)


# ---------------------------------------------------------------------------
# Low-level assembly
# ---------------------------------------------------------------------------


class PdfAssembler:
    """Accumulates numbered objects and emits a classic-xref document."""

    def __init__(self):
        self.objects: list[bytes] = []

    def add(self, body: bytes) -> int:
        """Add an object body (without ``N 0 obj`` framing); returns its number."""
        self.objects.append(body)
        return len(self.objects)

    def add_stream(self, sdict: str, data: bytes) -> int:
        body = f"<< {sdict} /Length {len(data)} >>\nstream\n".encode("latin-1")
        return self.add(body + data + b"\nendstream")

    def reserve(self) -> int:
        self.objects.append(b"")
        return len(self.objects)

    def set(self, num: int, body: bytes) -> None:
        self.objects[num - 1] = body

    def tobytes(self, root: int) -> bytes:
        out = bytearray(b"%PDF-1.7\n%\xe2\xe3\xcf\xd3\n")
        offsets = [0]
        for i, body in enumerate(self.objects, start=1):
            offsets.append(len(out))
            out += f"{i} 0 obj\n".encode("latin-1")
            out += body
            out += b"\nendobj\n"
        xref_pos = len(out)
        out += f"xref\n0 {len(self.objects) + 1}\n".encode("latin-1")
        out += b"0000000000 65535 f \n"
        for off in offsets[1:]:
            out += f"{off:010d} 00000 n \n".encode("latin-1")
        out += (
            f"trailer\n<< /Size {len(self.objects) + 1} /Root {root} 0 R >>\n"
            f"startxref\n{xref_pos}\n%%EOF\n"
        ).encode("latin-1")
        return bytes(out)


def lit(text: str) -> str:
    """Escape text for a literal string operand (cp1252 byte range)."""
    out = []
    for ch in text:
        if ch in "()\\":
            out.append("\\" + ch)
        else:
            code = ch.encode("cp1252", "replace")[0]
            out.append(chr(code) if 32 <= code < 127 else f"\\{code:03o}")
    return "(" + "".join(out) + ")"


def hexstr(text: str) -> str:
    """UTF-16BE hex string (two-byte codes for the identity CID font)."""
    return "<" + text.encode("utf-16-be").hex().upper() + ">"


def wrap_text(text: str, width_pt: float, size: float, metrics: Base14Metrics) -> list[str]:
    """Greedy word wrap against the same metrics the extractor will see."""
    words = text.split()
    lines: list[str] = []
    current = ""
    for word in words:
        candidate = word if not current else current + " " + word
        if metrics.text_width(candidate, size) <= width_pt or not current:
            current = candidate
        else:
            lines.append(current)
            current = word
    if current:
        lines.append(current)
    return lines


def text_ops(font: str, size: float, x: float, y: float, leading: float, lines: list[str]) -> str:
    ops = [f"BT /{font} {size:g} Tf {leading:g} TL {x:g} {y:g} Td"]
    for i, line in enumerate(lines):
        if i:
            ops.append("T*")
        ops.append(f"{lit(line)} Tj")
    ops.append("ET")
    return "\n".join(ops)


HELV = Base14Metrics("Helvetica")
HELV_BOLD = Base14Metrics("Helvetica-Bold")


class PageBuilder:
    """Collects content-stream chunks and the resources they need."""

    def __init__(self):
        self.chunks: list[str] = []
        self.fonts: set[str] = set()
        self.use_image = False

    def paragraph(self, text: str, x: float, top_y: float, width: float,
                  size: float = 10.0, font: str = "F1", bold: bool = False) -> float:
        """Lay text as wrapped lines; returns the baseline below the block."""
        metrics = HELV_BOLD if bold else HELV
        lines = wrap_text(text, width, size, metrics)
        leading = 1.2 * size
        self.chunks.append(text_ops(font, size, x, top_y, leading, lines))
        self.fonts.add(font)
        return top_y - leading * len(lines)

    def line(self, text: str, x: float, y: float, size: float = 10.0, font: str = "F1") -> None:
        self.chunks.append(text_ops(font, size, x, y, 1.2 * size, [text]))
        self.fonts.add(font)

    def centered(self, text: str, y: float, size: float = 10.0, font: str = "F1",
                 metrics: Base14Metrics = HELV) -> None:
        w = metrics.text_width(text, size)
        self.line(text, (PAGE_W - w) / 2.0, y, size, font)

    def raw(self, ops: str, fonts: tuple[str, ...] = ()) -> None:
        self.chunks.append(ops)
        self.fonts.update(fonts)

    def content(self) -> bytes:
        return "\n".join(self.chunks).encode("cp1252")


def _standard_fonts_obj(assembler: PdfAssembler) -> dict[str, int]:
    f1 = assembler.add(b"<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica >>")
    f2 = assembler.add(b"<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica-Bold >>")
    return {"F1": f1, "F2": f2}


def assemble_pages(pages: list[PageBuilder], extra_fonts=None, extra_xobjects=None) -> bytes:
    """Wrap built pages into a complete single-xref document."""
    asm = PdfAssembler()
    catalog = asm.reserve()
    pages_obj = asm.reserve()
    font_objs = _standard_fonts_obj(asm)
    if extra_fonts:
        for name, builder in extra_fonts.items():
            font_objs[name] = builder(asm)
    xobj_objs = {}
    if extra_xobjects:
        for name, builder in extra_xobjects.items():
            xobj_objs[name] = builder(asm)
    page_nums = []
    for page in pages:
        content = asm.add_stream("", page.content())
        fonts = " ".join(f"/{n} {font_objs[n]} 0 R" for n in sorted(page.fonts))
        resources = f"<< /Font << {fonts} >>"
        if page.use_image and xobj_objs:
            xs = " ".join(f"/{n} {num} 0 R" for n, num in xobj_objs.items())
            resources += f" /XObject << {xs} >>"
        resources += " >>"
        num = asm.add(
            (
                f"<< /Type /Page /Parent {pages_obj} 0 R /MediaBox [0 0 {PAGE_W:g} {PAGE_H:g}] "
                f"/Resources {resources} /Contents {content} 0 R >>"
            ).encode("latin-1")
        )
        page_nums.append(num)
    kids = " ".join(f"{n} 0 R" for n in page_nums)
    asm.set(pages_obj, f"<< /Type /Pages /Kids [{kids}] /Count {len(page_nums)} >>".encode("latin-1"))
    asm.set(catalog, f"<< /Type /Catalog /Pages {pages_obj} 0 R >>".encode("latin-1"))
    return asm.tobytes(catalog)


# ---------------------------------------------------------------------------
# Corpus documents
# ---------------------------------------------------------------------------

_PROSE = [
    "The workshop stores its records in a plain ledger that anyone on the team "
    "can open and read without special tools. Every entry lists the date, the "
    "job, and the name of the person who carried it out, together with a short "
    "note on the materials drawn from the store room and the time the work "
    "took from start to finish.",
    "When a new order arrives, the clerk copies the key figures onto a fresh "
    "page and files the original in the cabinet near the door. This habit keeps "
    "the desk clear and makes the monthly audit far less painful, because every "
    "question about a delivery can be answered by turning to a single page "
    "rather than by searching through a drawer of loose receipts.",
    "Visitors often remark that the building is quiet even at full capacity. "
    "Thick walls and careful scheduling mean that noisy work happens in the "
    "morning while detailed inspection fills the afternoon hours, and the "
    "lunch break falls exactly between the two so that neither part of the "
    "day feels rushed or crowded to the people on the floor.",
    "Seasonal demand shifts the balance between repair and production, so the "
    "planning board is redrawn each quarter. A short meeting every Monday keeps "
    "the queue honest and the backlog visible to everyone involved, and the "
    "red markers reserved for overdue items are rare enough that a single one "
    "draws immediate attention from the whole room.",
    "The storefront keeps a small shelf of finished samples so that customers "
    "can judge the quality of the joinery before placing an order of their "
    "own. Each sample carries a card naming the wood, the finish, and the "
    "month it was made, which saves the staff from repeating the same answers "
    "many times a day.",
    "Apprentices rotate through every station during their first year, from the "
    "saw pit to the finishing room, and each rotation ends with a short written "
    "review signed by the supervising craftsman. The reviews are kept in a "
    "bound volume that future masters consult when assigning the more "
    "demanding commissions of the spring season.",
]


def build_single_column() -> bytes:
    pages = []
    for pi in range(2):
        page = PageBuilder()
        page.paragraph("A Ledger for the Workshop" if pi == 0 else "Quarterly Planning Notes",
                       72, 720, 460, size=14, font="F2", bold=True)
        y = 690
        for text in _PROSE[pi * 3 : pi * 3 + 3]:
            y = page.paragraph(text, 72, y, 468) - 18
        pages.append(page)
    return assemble_pages(pages)


def build_two_column() -> bytes:
    col_w = 234.0
    left_x, right_x = 56.0, 322.0
    pages = []

    page1 = PageBuilder()
    y = page1.paragraph(_PROSE[0], left_x, 720, col_w) - 18
    page1.paragraph(_PROSE[1], left_x, y, col_w)
    # Tail of the left column ends mid-sentence with a hyphenated break.
    page1.paragraph(
        "The cooperative agreed that every major purchase would follow the same "
        "careful procedure of comparison, negotiation, and final review under "
        "the supervision of the trea-",
        left_x, 330, col_w,
    )
    page1.paragraph(
        "surer, who records the outcome in the shared ledger before the end of "
        "the same working week.",
        right_x, 720, col_w,
    )
    y = page1.paragraph(_PROSE[2], right_x, 620, col_w) - 18
    # Ends without terminal punctuation: stitches onto the next page.
    page1.paragraph(
        "Late in the autumn the committee reviewed the delivery schedule and",
        right_x, y, col_w,
    )
    pages.append(page1)

    page2 = PageBuilder()
    page2.paragraph(
        "agreed to shift two of the heavier shipments into the first week of "
        "winter, when the roads are quieter and the loading bay is free.",
        left_x, 720, col_w,
    )
    y = page2.paragraph(_PROSE[3], left_x, 640, col_w) - 18
    page2.paragraph(_PROSE[4], right_x, 720, col_w)
    page2.paragraph(_PROSE[5], right_x, 620, col_w)
    pages.append(page2)
    return assemble_pages(pages)


def build_header_footer() -> bytes:
    pages = []
    for pi in range(2):
        page = PageBuilder()
        page.centered(f"Workshop Handbook - Chapter {pi + 1}", 762, size=9)
        y = 700
        for text in _PROSE[pi * 2 : pi * 2 + 2]:
            y = page.paragraph(text, 72, y, 468) - 18
        page.paragraph(_PROSE[4 + pi], 72, y, 468)
        page.centered(f"Page {pi + 1} of 2 - internal draft", 30, size=9)
        pages.append(page)
    return assemble_pages(pages)


def build_formula() -> bytes:
    page = PageBuilder()
    page.paragraph("Measuring the Averages", 72, 730, 468, size=14, font="F2", bold=True)
    y = page.paragraph(_PROSE[0], 72, 700, 468) - 18
    # Body sentence with a superscript exponent.
    page.raw(
        "BT /F1 10 Tf 72 {y:g} Td (The floor space grows as x) Tj "
        "/F1 7 Tf 3 Ts (2) Tj /F1 10 Tf 0 Ts "
        "( when both sides are doubled, so the plan) Tj ET".format(y=y),
        fonts=("F1",),
    )
    page.raw(
        f"BT /F1 10 Tf 72 {y - 12:g} Td (allows for growth in every direction.) Tj ET",
        fonts=("F1",),
    )
    # Display formula: y = (a + b) / 2 drawn as a stacked fraction with a bar.
    page.raw("BT /F1 10 Tf 262 634 Td (y = ) Tj ET", fonts=("F1",))
    page.raw("BT /F1 10 Tf 288 642 Td (a + b) Tj ET", fonts=("F1",))
    page.raw("286 638.2 32 0.8 re f")
    page.raw("BT /F1 10 Tf 299 626 Td (2) Tj ET", fonts=("F1",))
    # Inline image between two words.
    page.raw("BT /F1 10 Tf 72 560 Td (Consult the stamped seal) Tj ET", fonts=("F1",))
    page.raw("q 10 0 0 10 193 558 cm /Im1 Do Q")
    page.use_image = True
    page.raw("BT /F1 10 Tf 208 560 Td (before approving the batch.) Tj ET", fonts=("F1",))
    page.paragraph(_PROSE[1], 72, 520, 468)

    def image_xobject(asm: PdfAssembler) -> int:
        pixels = bytes([40, 40, 200] * 16)  # 4x4 RGB
        return asm.add_stream(
            "/Type /XObject /Subtype /Image /Width 4 /Height 4 "
            "/ColorSpace /DeviceRGB /BitsPerComponent 8",
            pixels,
        )

    return assemble_pages([page], extra_xobjects={"Im1": image_xobject})


def build_citations() -> bytes:
    pages = []
    page1 = PageBuilder()
    page1.paragraph("Methods in Recent Surveys", 72, 730, 468, size=14, font="F2", bold=True)
    y = page1.paragraph(
        "Earlier field studies [1], [2] recorded the same seasonal pattern, and "
        "the larger census of river towns [3] confirmed it on a broader scale. "
        "Follow-up interviews [4], [5] suggested the effect persists indoors.",
        72, 700, 468,
    ) - 18
    y = page1.paragraph(
        "DeepWalk [112], APP [197], InfoWalk [200]",
        72, y, 468,
    ) - 18
    page1.paragraph(
        "A combined reading of the registry data [6-9] and the harbor logs "
        "[10, 11] leaves little doubt about the direction of the trend.",
        72, y, 468,
    )
    pages.append(page1)

    page2 = PageBuilder()
    y = page2.paragraph(
        "The committee reports [12] and the later corrections [13], [14] were "
        "merged into a single annotated volume for the archive.",
        72, 720, 468,
    ) - 18
    page2.paragraph(_PROSE[2], 72, y, 468)
    pages.append(page2)
    return assemble_pages(pages)


# -- synthetic CID font ------------------------------------------------------

_CJK_TEXT_1 = "车间的全部记录都保存在一本普通的账册里任何人都可以随时翻阅查对而不需要任何特别的工具"
_CJK_TEXT_2 = "每一条记录都写明日期经手人的姓名以及当天从库房领取的材料数量便于月底逐项核对账目"


def _identity_cmap(chars: set[str]) -> bytes:
    """ToUnicode CMap mapping two-byte codes to the same code points."""
    codes = sorted(ord(c) for c in chars)
    ranges: list[tuple[int, int]] = []
    for code in codes:
        if ranges and code == ranges[-1][1] + 1:
            ranges[-1] = (ranges[-1][0], code)
        else:
            ranges.append((code, code))
    body = ["/CIDInit /ProcSet findresource begin",
            "12 dict begin", "begincmap",
            "/CMapName /Identity-UCS def", "/CMapType 2 def",
            "1 begincodespacerange", "<0000> <FFFF>", "endcodespacerange",
            f"{len(ranges)} beginbfrange"]
    for lo, hi in ranges:
        body.append(f"<{lo:04X}> <{hi:04X}> <{lo:04X}>")
    body += ["endbfrange", "endcmap",
             "CMapName currentdict /CMap defineresource pop", "end", "end"]
    return "\n".join(body).encode("latin-1")


def make_cid_font_builder(chars: set[str]):
    """Builder for a non-embedded identity CID font covering ``chars``."""

    def build(asm: PdfAssembler) -> int:
        cmap = asm.add_stream("", _identity_cmap(chars))
        descriptor = asm.add(
            b"<< /Type /FontDescriptor /FontName /SynthCJK /Flags 4 "
            b"/FontBBox [0 -200 1000 800] /ItalicAngle 0 /Ascent 800 "
            b"/Descent -200 /CapHeight 800 /StemV 80 >>"
        )
        descendant = asm.add(
            (
                "<< /Type /Font /Subtype /CIDFontType2 /BaseFont /SynthCJK "
                "/CIDSystemInfo << /Registry (Adobe) /Ordering (Identity) /Supplement 0 >> "
                f"/FontDescriptor {descriptor} 0 R /DW 1000 /W [32 126 500] "
                "/CIDToGIDMap /Identity >>"
            ).encode("latin-1")
        )
        return asm.add(
            (
                "<< /Type /Font /Subtype /Type0 /BaseFont /SynthCJK "
                f"/Encoding /Identity-H /DescendantFonts [{descendant} 0 R] "
                f"/ToUnicode {cmap} 0 R >>"
            ).encode("latin-1")
        )

    return build


def build_cjk_mixed() -> bytes:
    page = PageBuilder()
    page.paragraph("Bilingual Workshop Notes", 72, 730, 468, size=14, font="F2", bold=True)
    y = page.paragraph(_PROSE[0], 72, 700, 468) - 18
    page.raw(
        f"BT /F3 10 Tf 72 {y:g} Td {hexstr(_CJK_TEXT_1)} Tj 12 TL T* {hexstr(_CJK_TEXT_2)} Tj ET",
        fonts=("F3",),
    )
    page.paragraph(_PROSE[1], 72, y - 42, 468)
    chars = set(_CJK_TEXT_1) | set(_CJK_TEXT_2)
    return assemble_pages([page], extra_fonts={"F3": make_cid_font_builder(chars)})


# ---------------------------------------------------------------------------
# Nested-structure fixture (not part of the six-document corpus)
# ---------------------------------------------------------------------------


def build_nested_form() -> bytes:
    """Glyphs two Form-XObject levels deep under non-trivial matrices and a clip."""
    asm = PdfAssembler()
    catalog = asm.reserve()
    pages_obj = asm.reserve()
    fonts = _standard_fonts_obj(asm)

    inner = asm.add_stream(
        "/Type /XObject /Subtype /Form /BBox [0 0 200 50] "
        "/Matrix [1 0 0 1 5 10] /Resources << /Font << /F1 %d 0 R >> >>" % fonts["F1"],
        b"BT /F1 12 Tf 10 20 Td (Nested Hi) Tj ET",
    )
    outer = asm.add_stream(
        "/Type /XObject /Subtype /Form /BBox [0 0 300 100] "
        "/Matrix [0.8 0 0 0.8 20 30] /Resources << /XObject << /X2 %d 0 R >> >>" % inner,
        b"q 1.5 0 0 1.5 10 5 cm /X2 Do Q",
    )
    content = (
        b"q 30 620 300 120 re W n "  # page-level clip
        b"q 0.5 0 0 0.5 100 100 cm 0 0 40 40 re f Q "
        b"BT /F1 12 Tf 72 700 Td (Hi) Tj ET "
        b"q 2 0 0 2 40 600 cm /X1 Do Q Q"
    )
    stream = asm.add_stream("", content)
    page = asm.add(
        (
            f"<< /Type /Page /Parent {pages_obj} 0 R /MediaBox [0 0 612 792] "
            f"/Resources << /Font << /F1 {fonts['F1']} 0 R >> "
            f"/XObject << /X1 {outer} 0 R >> >> /Contents {stream} 0 R >>"
        ).encode("latin-1")
    )
    asm.set(pages_obj, f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>".encode("latin-1"))
    asm.set(catalog, f"<< /Type /Catalog /Pages {pages_obj} 0 R >>".encode("latin-1"))
    return asm.tobytes(catalog)


_BUILDERS = {
    "single_column": build_single_column,
    "two_column": build_two_column,
    "header_footer": build_header_footer,
    "formula": build_formula,
    "citations": build_citations,
    "cjk_mixed": build_cjk_mixed,
}


def corpus_pdf(name: str) -> bytes:
    return _BUILDERS[name]()


def corpus_target_lang(name: str) -> str:
    return "zh" if name == "cjk_mixed" else "es"


def write_corpus(out_dir: str | Path) -> dict[str, Path]:
    """Materialize all six documents; returns name -> path."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {}
    for name in CORPUS_NAMES:
        path = out / f"{name}.pdf"
        path.write_bytes(corpus_pdf(name))
        paths[name] = path
    return paths


if __name__ == "__main__":
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else "corpus"
    for name, path in write_corpus(target).items():
        print(f"wrote {path}")
