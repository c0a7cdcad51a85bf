import json

import pytest

from translayout.errors import SchemaError
from translayout.geometry import Box, Matrix
from translayout.ir import (
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
    unmask_text,
    validate_ir,
)


def make_listing_paragraph() -> Paragraph:
    return Paragraph(
        input="DeepWalk {v1}APP {v2}InfoWalk{v3}",
        output="DeepWalk {v1}APP {v2}InfoWalk{v3}",
        pdf_unicode="DeepWalk [112], APP [197], InfoWalk [200]",
        layout_label="table_cell_hybrid",
        placeholders=[
            Placeholder(type="citation_marker", id=1, placeholder="{v1}", source_chars="[112], "),
            Placeholder(type="citation_marker", id=2, placeholder="{v2}", source_chars="[197], "),
            Placeholder(type="citation_marker", id=3, placeholder="{v3}", source_chars=" [200]"),
        ],
        box=Box(79, 653, 441, 663),
    )


def make_doc() -> DocumentIR:
    doc = DocumentIR(source_lang="en", target_lang="zh")
    doc.fonts["F189"] = FontRecord(
        font_id="F189", name="KYQJPC+LinBiolinumTB", ascent=693, descent=-234,
        widths={49: 500},
    )
    doc.states[1] = GraphicsState(id=1, ctm=Matrix.identity(), font_id="F189", font_size=7.97)
    page = PageIR(page_number=0, media_box=Box(0, 0, 612, 792))
    page.page_layout = [
        LayoutElement(id=1, class_name="page_header_hybrid", box=Box(79, 653, 441, 663), conf=1.0)
    ]
    page.pdf_font = ["F189"]
    page.pdf_character = [
        CharRecord(
            char_unicode="1", font_id="F189", font_size=7.97,
            box=Box(45.6, 646.5, 49.4, 654.5), render_order=1, baseline_y=648.0, state_id=1,
        )
    ]
    page.paragraph = [make_listing_paragraph()]
    doc.pages.append(page)
    return doc


def test_serialize_empty_document():
    text = serialize_ir(DocumentIR())
    data = json.loads(text)
    assert data["pages"] == []
    assert data["fonts"] == []
    assert data["ir_version"] == "1"


def test_serialize_contains_listing_fields():
    text = serialize_ir(make_doc())
    assert '"placeholder": "{v1}"' in text
    assert '"source_chars": "[112], ' in text
    assert '"page_number": 0' in text
    assert '"unit": "point"' in text
    assert '"class_name": "page_header_hybrid"' in text
    # Key order follows the schema.
    page_obj = json.loads(text)["pages"][0]
    assert list(page_obj)[:4] == ["page_number", "unit", "media_box", "page_layout"]


def test_round_trip_structural_equality():
    doc = make_doc()
    text = serialize_ir(doc)
    clone = deserialize_ir(text)
    assert clone == doc
    assert serialize_ir(clone) == text  # serialize-deserialize-serialize is byte identical


def test_serialize_is_deterministic():
    assert serialize_ir(make_doc()) == serialize_ir(make_doc())


def test_deserialize_listing_shaped_page():
    # The simplified page snippet with inline font dicts, wrapped in an envelope.
    payload = {
        "ir_version": "1",
        "source_lang": "en",
        "target_lang": "zh",
        "fonts": [],
        "states": [],
        "clips": [],
        "pages": [
            {
                "page_number": 0,
                "unit": "point",
                "page_layout": [
                    {
                        "id": 1,
                        "class_name": "page_header_hybrid",
                        "box": {"x": 79, "y": 653, "x2": 441, "y2": 663},
                        "conf": 1.0,
                    }
                ],
                "pdf_font": [
                    {
                        "font_id": "F189",
                        "name": "KYQJPC+LinBiolinumTB",
                        "ascent": 693,
                        "descent": -234,
                    }
                ],
                "pdf_character": [
                    {
                        "char_unicode": "1",
                        "font_size": 7.97,
                        "box": {"x": 45.6, "y": 646.5, "x2": 49.4, "y2": 654.5},
                        "render_order": 1,
                    }
                ],
                "paragraph": [
                    {
                        "input": "DeepWalk {v1}APP {v2}InfoWalk{v3}",
                        "output": "DeepWalk {v1}APP {v2}InfoWalk{v3}",
                        "pdf_unicode": "DeepWalk [112], APP [197], InfoWalk [200]",
                        "layout_label": "table_cell_hybrid",
                        "placeholders": [
                            {
                                "type": "citation_marker",
                                "id": 1,
                                "placeholder": "{v1}",
                                "source_chars": "[112],",
                            }
                        ],
                    }
                ],
            }
        ],
    }
    doc = deserialize_ir(json.dumps(payload))
    para = doc.pages[0].paragraph[0]
    assert len(para.placeholders) == 1
    assert para.placeholders[0].type == "citation_marker"
    assert para.placeholders[0].id == 1
    assert "F189" in doc.fonts  # inline font dict hoisted to the document table
    assert doc.pages[0].pdf_font == ["F189"]


def test_deserialize_rejects_out_of_range_conf():
    doc = make_doc()
    text = serialize_ir(doc)
    bad = text.replace('"conf": 1.0', '"conf": 1.5')
    with pytest.raises(SchemaError) as exc:
        deserialize_ir(bad)
    assert "conf" in str(exc.value)


def test_deserialize_unknown_field_strict_vs_lenient():
    text = serialize_ir(make_doc())
    data = json.loads(text)
    data["pages"][0]["surprise"] = 1
    bad = json.dumps(data)
    with pytest.raises(SchemaError) as exc:
        deserialize_ir(bad)
    assert "surprise" in str(exc.value)
    doc = deserialize_ir(bad, lenient=True)
    assert doc.pages[0].page_number == 0


def test_deserialize_rejects_garbage():
    with pytest.raises(SchemaError):
        deserialize_ir("not json at all {")


def test_validate_well_formed_doc_is_clean():
    assert validate_ir(make_doc()).ok


def test_validate_dangling_font_ref():
    doc = make_doc()
    doc.pages[0].pdf_character[0].font_id = "F9"
    report = validate_ir(doc)
    assert "DanglingFontRef" in report.codes()


def test_validate_malformed_box():
    doc = make_doc()
    doc.pages[0].page_layout[0].box = Box(10.0, 0.0, 5.0, 1.0)  # x2 < x
    report = validate_ir(doc)
    assert "MalformedBox" in report.codes()


def test_validate_render_order_gap():
    doc = make_doc()
    doc.pages[0].pdf_character[0].render_order = 2
    report = validate_ir(doc)
    assert "RenderOrderGap" in report.codes()
    # The paragraph's unit ids were empty so no dangling-unit issue is added.


def test_validate_placeholder_token_mismatch():
    doc = make_doc()
    doc.pages[0].paragraph[0].placeholders.pop()
    report = validate_ir(doc)
    assert "PlaceholderTokenMismatch" in report.codes()


def test_validate_unmask_mismatch():
    doc = make_doc()
    doc.pages[0].paragraph[0].placeholders[0].source_chars = "[999]"
    report = validate_ir(doc)
    assert "UnmaskMismatch" in report.codes()


def test_unmask_identity_on_listing_paragraph():
    para = make_listing_paragraph()
    assert unmask_text(para.input, para.placeholders) == para.pdf_unicode


def test_validate_degenerate_matrix_flagged():
    doc = make_doc()
    doc.states[2] = GraphicsState(id=2, ctm=Matrix(0, 0, 0, 0, 1, 1))
    report = validate_ir(doc)
    assert "DegenerateMatrix" in report.codes()
