import zlib

import pytest

from translayout.corpus import PdfAssembler, assemble_pages, PageBuilder, build_nested_form
from translayout.errors import (
    CyclicXObject,
    DepthExceeded,
    EncryptedPdf,
    UnsupportedOperator,
)
from translayout.geometry import Box, Matrix, compose_matrix
from translayout.ir import FontRecord, GraphicsState
from translayout.pdf.content import char_box
from translayout.pdf.document import PdfDocument, apply_png_predictor
from translayout.pdf.objects import ObjectParser, PdfName, PdfRef
from translayout.reader import read_document


def single_page_pdf(content: bytes, extra_page_entries: str = "") -> bytes:
    asm = PdfAssembler()
    catalog = asm.reserve()
    pages = asm.reserve()
    font = asm.add(b"<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica >>")
    stream = asm.add_stream("", content)
    page = asm.add(
        (
            f"<< /Type /Page /Parent {pages} 0 R /MediaBox [0 0 612 792] "
            f"/Resources << /Font << /F1 {font} 0 R >> >> "
            f"/Contents {stream} 0 R{extra_page_entries} >>"
        ).encode()
    )
    asm.set(pages, f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>".encode())
    asm.set(catalog, f"<< /Type /Catalog /Pages {pages} 0 R >>".encode())
    return asm.tobytes(catalog)


# ---------------------------------------------------------------------------
# Object syntax
# ---------------------------------------------------------------------------


def test_object_parser_primitives():
    parser = ObjectParser(b"<< /A 1 /B (hi\\)there) /C [1 2.5 /Name] /D <414243> /E true /F null >>")
    obj = parser.parse_object()
    assert obj["A"] == 1
    assert obj["B"] == b"hi)there"
    assert obj["C"] == [1, 2.5, PdfName("Name")]
    assert obj["D"] == b"ABC"
    assert obj["E"] is True
    assert obj["F"] is None


def test_object_parser_references():
    parser = ObjectParser(b"<< /Kids [3 0 R 4 0 R] /Count 2 >>")
    obj = parser.parse_object()
    assert obj["Kids"] == [PdfRef(3, 0), PdfRef(4, 0)]
    assert obj["Count"] == 2


def test_object_parser_name_escapes_and_octal():
    parser = ObjectParser(b"[/A#42C (\\101\\102) (a\\nb)]")
    arr = parser.parse_object()
    assert arr[0] == PdfName("ABC")
    assert arr[1] == b"AB"
    assert arr[2] == b"a\nb"


def test_png_predictor_up_filter():
    # Rows filtered with "Up": row_n = raw_n - raw_{n-1}.
    raw = bytes([10, 20, 30]) + bytes([11, 22, 33])
    filtered = bytes([0, 10, 20, 30]) + bytes([2, 1, 2, 3])
    assert apply_png_predictor(filtered, 1, 8, 3) == raw


# ---------------------------------------------------------------------------
# Page interpretation
# ---------------------------------------------------------------------------


def test_empty_content_stream():
    doc = read_document(single_page_pdf(b""))
    page = doc.pages[0]
    assert page.pdf_character == []
    assert page.passthrough_ops == []


def test_hi_advances_standard_14():
    # Helvetica 'H' = 722, 'i' = 222 per-mille; at 12 pt -> 8.664 and 2.664 pt.
    doc = read_document(single_page_pdf(b"BT /F1 12 Tf 72 700 Td (Hi) Tj ET"))
    chars = doc.pages[0].pdf_character
    assert [c.render_order for c in chars] == [1, 2]
    h, i = chars
    assert h.char_unicode == "H" and i.char_unicode == "i"
    assert h.box.x == pytest.approx(72.0)
    assert h.box.x2 - h.box.x == pytest.approx(8.664)
    assert i.box.x == pytest.approx(80.664)
    assert i.box.x2 - i.box.x == pytest.approx(2.664)
    # Vertical extent from Helvetica ascent 718 / descent -207 at 12 pt.
    assert h.box.y == pytest.approx(700 - 0.207 * 12)
    assert h.box.y2 == pytest.approx(700 + 0.718 * 12)
    assert h.baseline_y == pytest.approx(700.0)


def test_form_xobject_composes_matrix():
    plain = read_document(single_page_pdf(b"BT /F1 12 Tf 72 700 Td (Hi) Tj ET"))
    base_boxes = [c.box for c in plain.pages[0].pdf_character]

    asm = PdfAssembler()
    catalog = asm.reserve()
    pages = asm.reserve()
    font = asm.add(b"<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica >>")
    form = asm.add_stream(
        "/Type /XObject /Subtype /Form /BBox [0 0 612 792] "
        "/Resources << /Font << /F1 %d 0 R >> >>" % font,
        b"BT /F1 12 Tf 72 700 Td (Hi) Tj ET",
    )
    stream = asm.add_stream("", b"q 0.5 0 0 0.5 100 100 cm /X1 Do Q")
    page = asm.add(
        (
            f"<< /Type /Page /Parent {pages} 0 R /MediaBox [0 0 612 792] "
            f"/Resources << /XObject << /X1 {form} 0 R >> >> /Contents {stream} 0 R >>"
        ).encode()
    )
    asm.set(pages, f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>".encode())
    asm.set(catalog, f"<< /Type /Catalog /Pages {pages} 0 R >>".encode())
    nested = read_document(asm.tobytes(catalog))

    for base, got in zip(base_boxes, nested.pages[0].pdf_character):
        # Scale 0.5 then translate (100, 100), per the independent matrix oracle.
        m = Matrix(0.5, 0, 0, 0.5, 100, 100)
        expected = m.apply_box(base)
        assert got.box.x == pytest.approx(expected.x, abs=1e-6)
        assert got.box.y2 == pytest.approx(expected.y2, abs=1e-6)
        assert got.font_size == pytest.approx(6.0)


def test_nested_form_fixture_matches_matrix_oracle():
    doc = read_document(build_nested_form())
    chars = doc.pages[0].pdf_character
    # Page-level "Hi" at 72,700 plus "Nested Hi" two form levels deep.
    by_text = {}
    for c in chars:
        by_text.setdefault(c.char_unicode, []).append(c)
    # CTM chain: cm(2,0,0,2,40,600) o outer Matrix(0.8,..,20,30) o inner cm(1.5,..,10,5)
    # o inner form Matrix(1,0,0,1,5,10); glyph origin Td(10,20).
    m = Matrix.identity()
    m = compose_matrix(Matrix(2, 0, 0, 2, 40, 600), m)
    m = compose_matrix(Matrix(0.8, 0, 0, 0.8, 20, 30), m)
    m = compose_matrix(Matrix(1.5, 0, 0, 1.5, 10, 5), m)
    m = compose_matrix(Matrix(1, 0, 0, 1, 5, 10), m)
    origin = m.apply(10, 20)
    n_char = by_text["N"][0]
    assert n_char.box.x == pytest.approx(origin[0], abs=0.01)
    assert n_char.baseline_y == pytest.approx(origin[1], abs=0.01)
    assert n_char.font_size == pytest.approx(12 * m.vertical_scale(), abs=1e-6)
    assert len(doc.clips) == 3  # page W n rectangle plus both form BBox clips
    assert doc.warnings == []


def test_q_restores_state_exactly():
    content = b"q 2 0 0 2 10 10 cm BT /F1 12 Tf 0 0 Td (A) Tj ET Q BT /F1 12 Tf 72 700 Td (B) Tj ET"
    doc = read_document(single_page_pdf(content))
    a, b = doc.pages[0].pdf_character
    assert a.font_size == pytest.approx(24.0)  # inside the scaled state
    assert b.font_size == pytest.approx(12.0)  # restored
    assert b.box.x == pytest.approx(72.0)


def test_cyclic_xobject_raises():
    asm = PdfAssembler()
    catalog = asm.reserve()
    pages = asm.reserve()
    form = asm.reserve()
    asm.set(
        form,
        (
            "<< /Type /XObject /Subtype /Form /BBox [0 0 100 100] "
            f"/Resources << /XObject << /X1 {form} 0 R >> >> /Length 7 >>\nstream\n/X1 Do\nendstream"
        ).encode(),
    )
    stream = asm.add_stream("", b"/X1 Do")
    page = asm.add(
        (
            f"<< /Type /Page /Parent {pages} 0 R /MediaBox [0 0 612 792] "
            f"/Resources << /XObject << /X1 {form} 0 R >> >> /Contents {stream} 0 R >>"
        ).encode()
    )
    asm.set(pages, f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>".encode())
    asm.set(catalog, f"<< /Type /Catalog /Pages {pages} 0 R >>".encode())
    with pytest.raises(CyclicXObject):
        read_document(asm.tobytes(catalog))


def test_depth_limit_enforced():
    # A chain of forms deeper than the limit (each invokes the next).
    asm = PdfAssembler()
    catalog = asm.reserve()
    pages = asm.reserve()
    n = 6
    numbers = [asm.reserve() for _ in range(n)]
    for i, num in enumerate(numbers):
        if i + 1 < n:
            body = f"/X{i + 1} Do".encode()
            resources = f"/Resources << /XObject << /X{i + 1} {numbers[i + 1]} 0 R >> >>"
        else:
            body = b""
            resources = ""
        asm.set(
            num,
            (
                f"<< /Type /XObject /Subtype /Form /BBox [0 0 10 10] {resources} "
                f"/Length {len(body)} >>\nstream\n".encode() + body + b"\nendstream"
            ),
        )
    stream = asm.add_stream("", b"/X0 Do")
    page = asm.add(
        (
            f"<< /Type /Page /Parent {pages} 0 R /MediaBox [0 0 612 792] "
            f"/Resources << /XObject << /X0 {numbers[0]} 0 R >> >> /Contents {stream} 0 R >>"
        ).encode()
    )
    asm.set(pages, f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>".encode())
    asm.set(catalog, f"<< /Type /Catalog /Pages {pages} 0 R >>".encode())
    data = asm.tobytes(catalog)
    with pytest.raises(DepthExceeded):
        read_document(data, depth_limit=4)
    doc = read_document(data, depth_limit=8)  # deep enough
    assert doc.pages[0].pdf_character == []


def test_unsupported_operator_strict_vs_lenient():
    pdf = single_page_pdf(b"1 0 0 1 0 0 Tzz")
    with pytest.raises(UnsupportedOperator):
        read_document(pdf)
    doc = read_document(pdf, lenient=True)
    assert any("Tzz" in w for w in doc.warnings)


def test_unbalanced_q_strict_vs_lenient():
    pdf = single_page_pdf(b"q q 1 0 0 1 5 5 cm Q")
    with pytest.raises(Exception):
        read_document(pdf)
    doc = read_document(pdf, lenient=True)
    assert any("unbalanced" in w for w in doc.warnings)


def test_encrypted_document_rejected():
    data = single_page_pdf(b"")
    # Splice an /Encrypt entry into the trailer.
    data = data.replace(b"trailer\n<<", b"trailer\n<< /Encrypt 99 0 R")
    with pytest.raises(EncryptedPdf):
        read_document(data)


def test_flate_compressed_content_stream():
    content = b"BT /F1 12 Tf 72 700 Td (Hi) Tj ET"
    asm = PdfAssembler()
    catalog = asm.reserve()
    pages = asm.reserve()
    font = asm.add(b"<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica >>")
    compressed = zlib.compress(content)
    stream = asm.add(
        b"<< /Filter /FlateDecode /Length %d >>\nstream\n" % len(compressed)
        + compressed
        + b"\nendstream"
    )
    page = asm.add(
        (
            f"<< /Type /Page /Parent {pages} 0 R /MediaBox [0 0 612 792] "
            f"/Resources << /Font << /F1 {font} 0 R >> >> /Contents {stream} 0 R >>"
        ).encode()
    )
    asm.set(pages, f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>".encode())
    asm.set(catalog, f"<< /Type /Catalog /Pages {pages} 0 R >>".encode())
    doc = read_document(asm.tobytes(catalog))
    assert len(doc.pages[0].pdf_character) == 2


def _xref_stream_pdf() -> bytes:
    """Minimal document using a cross-reference stream and an object stream."""
    # Objects: 1 catalog (in objstm), 2 pages (in objstm), 3 page, 4 contents,
    # 5 font (in objstm), 6 objstm, 7 xref stream.
    content = b"BT /F1 12 Tf 72 700 Td (Hi) Tj ET"
    out = bytearray(b"%PDF-1.7\n%\xe2\xe3\xcf\xd3\n")
    offsets = {}

    def add(num: int, body: bytes):
        offsets[num] = len(out)
        out.extend(f"{num} 0 obj\n".encode() + body + b"\nendobj\n")

    add(3, b"<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] "
           b"/Resources << /Font << /F1 5 0 R >> >> /Contents 4 0 R >>")
    add(4, b"<< /Length %d >>\nstream\n" % len(content) + content + b"\nendstream")

    inner = [
        (1, b"<< /Type /Catalog /Pages 2 0 R >>"),
        (2, b"<< /Type /Pages /Kids [3 0 R] /Count 1 >>"),
        (5, b"<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica >>"),
    ]
    header = []
    body = b""
    for num, data in inner:
        header.append(f"{num} {len(body)}")
        body += data + b" "
    head_bytes = (" ".join(header) + "\n").encode()
    objstm_data = zlib.compress(head_bytes + body)
    add(6, b"<< /Type /ObjStm /N 3 /First %d /Filter /FlateDecode /Length %d >>\nstream\n"
           % (len(head_bytes), len(objstm_data)) + objstm_data + b"\nendstream")

    xref_pos = len(out)
    entries = []
    table = {
        1: (2, 6, 0), 2: (2, 6, 1), 3: (1, offsets[3], 0), 4: (1, offsets[4], 0),
        5: (2, 6, 2), 6: (1, offsets[6], 0), 7: (1, xref_pos, 0),
    }
    entries.append(bytes([0]) + (0).to_bytes(4, "big") + bytes([255]))
    for num in range(1, 8):
        t, f2, f3 = table[num]
        entries.append(bytes([t]) + f2.to_bytes(4, "big") + bytes([f3]))
    xref_data = zlib.compress(b"".join(entries))
    add(7, b"<< /Type /XRef /Size 8 /W [1 4 1] /Root 1 0 R /Filter /FlateDecode /Length %d >>\nstream\n"
           % len(xref_data) + xref_data + b"\nendstream")
    out.extend(b"startxref\n%d\n%%%%EOF\n" % xref_pos)
    return bytes(out)


def test_xref_stream_and_object_stream():
    doc = read_document(_xref_stream_pdf())
    chars = doc.pages[0].pdf_character
    assert [c.char_unicode for c in chars] == ["H", "i"]


def test_image_xobject_recorded_as_passthrough(corpus_paths):
    doc = read_document(corpus_paths["formula"])
    images = [op for op in doc.pages[0].passthrough_ops if op.kind == "image"]
    assert len(images) == 1
    op = images[0]
    assert op.width == 4 and op.height == 4
    assert op.box.width == pytest.approx(10.0)  # unit square under cm 10 0 0 10
    paths = [op for op in doc.pages[0].passthrough_ops if op.kind == "path"]
    assert len(paths) == 1  # the fraction bar


# ---------------------------------------------------------------------------
# char_box
# ---------------------------------------------------------------------------


HELV = FontRecord(font_id="F1", name="Helvetica", ascent=718, descent=-207,
                  widths={ord("H"): 722})


def test_char_box_helvetica_example():
    state = GraphicsState(id=0, ctm=Matrix.identity(), font_size=12.0)
    box, baseline, size = char_box(ord("H"), HELV, state, pen=(72.0, 700.0))
    assert box.x == pytest.approx(72.0)
    assert box.x2 == pytest.approx(80.664)
    assert box.y == pytest.approx(697.516)
    assert box.y2 == pytest.approx(708.616)
    assert baseline == pytest.approx(700.0)
    assert size == pytest.approx(12.0)


def test_char_box_zero_size():
    state = GraphicsState(id=0, ctm=Matrix.identity(), font_size=0.0)
    box, baseline, size = char_box(ord("H"), HELV, state, pen=(30.0, 40.0))
    assert (box.x, box.y, box.x2, box.y2) == (30.0, 40.0, 30.0, 40.0)
    assert size == 0.0


def test_char_box_uniform_scale_doubles():
    state = GraphicsState(id=0, ctm=Matrix(2, 0, 0, 2, 0, 0), font_size=12.0)
    box, baseline, size = char_box(ord("H"), HELV, state, pen=(72.0, 700.0))
    assert box.x == pytest.approx(144.0)
    assert box.y2 == pytest.approx(2 * 708.616)
    assert size == pytest.approx(24.0)


def test_missing_width_uses_default_and_warns():
    doc = read_document(single_page_pdf(b"BT /F1 12 Tf 10 10 Td (\x7f) Tj ET"), lenient=True)
    # 0x7f has no Helvetica width; the default applies and a warning records it.
    assert any("missing width" in w for w in doc.warnings)
    (c,) = doc.pages[0].pdf_character
    assert c.box.width == pytest.approx(0.5 * 12)


def test_render_order_dense_within_page(corpus_paths):
    doc = read_document(corpus_paths["two_column"])
    for page in doc.pages:
        orders = [c.render_order for c in page.pdf_character]
        assert orders == list(range(1, len(orders) + 1))
