import json

import pytest

from translayout.geometry import Box
from translayout.ir import CharRecord, LayoutElement, PageIR, Paragraph
from translayout.reader import read_document
from translayout.segment import (
    SegmentConfig,
    StitchDecision,
    build_paragraphs,
    cluster_lines,
    load_detections,
    reading_order,
    segment_layout,
    stitch_cross_units,
)


def make_char(text, x, baseline, size=10.0, order=1, width=500):
    w = width / 1000.0 * size
    return CharRecord(
        char_unicode=text,
        font_id="F1",
        font_size=size,
        box=Box(x, baseline - 0.2 * size, x + w, baseline + 0.75 * size),
        render_order=order,
        baseline_y=baseline,
    )


def text_line(text, x, baseline, size=10.0, start_order=1):
    chars = []
    cx = x
    for i, ch in enumerate(text):
        c = make_char(ch, cx, baseline, size, start_order + i)
        chars.append(c)
        cx = c.box.x2
    return chars


def page_with(chars, w=612.0, h=792.0):
    page = PageIR(page_number=0, media_box=Box(0, 0, w, h))
    page.pdf_character = sorted(chars, key=lambda c: c.render_order)
    for i, c in enumerate(page.pdf_character, start=1):
        c.render_order = i
    return page


# ---------------------------------------------------------------------------
# segment_layout
# ---------------------------------------------------------------------------


def test_empty_page_yields_no_elements():
    assert segment_layout(page_with([])) == []


def test_centered_top_line_is_header():
    # A single full-width-ish line within the top 5% of the page.
    chars = text_line("Annual Report of the Workshop", 150, 792 * 0.97)
    elements = segment_layout(page_with(chars))
    assert len(elements) == 1
    assert elements[0].class_name == "page_header_hybrid"
    assert elements[0].conf < 1.0


def test_bottom_line_is_footer():
    chars = text_line("Page 3", 290, 20)
    elements = segment_layout(page_with(chars))
    assert elements[0].class_name == "page_footer"


def test_external_detections_pass_through_verbatim(tmp_path):
    payload = {
        "pages": [
            {
                "page_number": 0,
                "elements": [
                    {
                        "class_name": "table_cell_hybrid",
                        "box": {"x": 79, "y": 653, "x2": 441, "y2": 663},
                        "conf": 1.0,
                    }
                ],
            }
        ]
    }
    path = tmp_path / "det.json"
    path.write_text(json.dumps(payload))
    detections = load_detections(path)
    chars = text_line("cell", 80, 655)
    elements = segment_layout(page_with(chars), external=detections[0])
    assert elements[0].class_name == "table_cell_hybrid"
    assert elements[0].box == Box(79, 653, 441, 663)
    assert elements[0].conf == 1.0


def test_external_detections_cover_orphan_lines(tmp_path):
    payload = {"pages": [{"page_number": 0, "elements": [
        {"class_name": "body_text", "box": {"x": 70, "y": 690, "x2": 300, "y2": 710}, "conf": 0.97}
    ]}]}
    path = tmp_path / "det.json"
    path.write_text(json.dumps(payload))
    chars = text_line("inside the box", 72, 700) + text_line("an orphan line", 72, 400, start_order=50)
    elements = segment_layout(page_with(chars), external=load_detections(path)[0])
    classes = [e.class_name for e in elements]
    assert classes[0] == "body_text"
    assert len(elements) == 2  # synthesized block for the orphan
    assert elements[1].conf == 0.5


def test_gutter_splits_same_baseline_lines():
    left = text_line("left column text here", 56, 700)
    right = text_line("right column text too", 322, 700, start_order=100)
    lines = cluster_lines(left + right, split_gap=18.0)
    assert len(lines) == 2


# ---------------------------------------------------------------------------
# reading_order
# ---------------------------------------------------------------------------


def el(i, x, y, x2, y2, cls="body_text"):
    return LayoutElement(id=i, class_name=cls, box=Box(x, y, x2, y2), conf=0.9)


def test_reading_order_single_element():
    assert reading_order([el(7, 0, 0, 10, 10)], Box(0, 0, 612, 792)) == [7]


def test_reading_order_two_columns():
    elements = [
        el(1, 322, 600, 550, 700),  # right top
        el(2, 56, 400, 290, 500),   # left bottom
        el(3, 56, 600, 290, 700),   # left top
        el(4, 322, 400, 550, 500),  # right bottom
    ]
    order = reading_order(elements, Box(0, 0, 612, 792))
    assert order == [3, 2, 1, 4]  # all left before all right, top to bottom


def test_reading_order_header_above_columns():
    elements = [
        el(1, 56, 600, 290, 700),   # left column
        el(2, 322, 600, 550, 700),  # right column
        el(3, 100, 730, 500, 750),  # full-width header
    ]
    order = reading_order(elements, Box(0, 0, 612, 792))
    assert order == [3, 1, 2]


def test_reading_order_is_permutation(identity_runs):
    doc, _, _ = identity_runs["two_column"]
    for page in doc.pages:
        elements = segment_layout(page)
        order = reading_order(elements, page.media_box)
        assert sorted(order) == sorted(e.id for e in elements)


# ---------------------------------------------------------------------------
# build_paragraphs
# ---------------------------------------------------------------------------


def run_segmentation(page):
    elements = segment_layout(page)
    order = reading_order(elements, page.media_box)
    return build_paragraphs(page, elements, order)


def test_single_line_paragraph_text():
    page = page_with(text_line("just one line", 72, 400))
    paras = run_segmentation(page)
    assert len(paras) == 1
    assert paras[0].pdf_unicode == "just one line"


def test_wide_gap_splits_paragraphs():
    # Second line 2.5 line-heights below the first: two paragraphs.
    page = page_with(
        text_line("first paragraph line", 72, 420)
        + text_line("second paragraph line", 72, 396, start_order=100)
    )
    paras = run_segmentation(page)
    assert len(paras) == 2


def test_close_lines_join_into_one_paragraph():
    page = page_with(
        text_line("first line of text", 72, 412)
        + text_line("second line of text", 72, 400, start_order=100)
    )
    paras = run_segmentation(page)
    assert len(paras) == 1
    assert paras[0].pdf_unicode == "first line of text second line of text"


def test_space_inference_between_words():
    # Two runs on one baseline with a 4 pt gap: a space is inferred.
    a = text_line("see", 72, 400)
    b = text_line("here", a[-1].box.x2 + 4.0, 400, start_order=10)
    page = page_with(a + b)
    paras = run_segmentation(page)
    assert paras[0].pdf_unicode == "see here"


def test_inline_image_becomes_subunit(identity_runs):
    doc, _, _ = identity_runs["formula"]
    page = doc.pages[0]
    paras = run_segmentation(page)
    with_image = [p for p in paras if "￼" in p.pdf_unicode]
    assert len(with_image) == 1
    text = with_image[0].pdf_unicode
    assert "seal ￼ before" in text


def test_formula_region_detected(identity_runs):
    doc, _, _ = identity_runs["formula"]
    page = doc.pages[0]
    elements = segment_layout(page)
    formulas = [e for e in elements if e.class_name == "formula_region"]
    assert len(formulas) == 1
    # The region swallows the vector fraction bar.
    bar = next(op for op in page.passthrough_ops if op.kind == "path")
    assert formulas[0].box.x <= bar.box.x and formulas[0].box.x2 >= bar.box.x2


def test_paragraph_coverage_no_orphans(identity_runs):
    for name, (doc, _, _) in identity_runs.items():
        for page in doc.pages:
            elements = segment_layout(page)
            order = reading_order(elements, page.media_box)
            paras = build_paragraphs(page, elements, order)
            covered = set()
            for p in paras:
                covered.update(p.unit_ids)
            all_orders = {c.render_order for c in page.pdf_character}
            assert covered == all_orders, f"{name} page {page.page_number}"


def test_segmentation_is_deterministic(identity_runs):
    doc, _, _ = identity_runs["two_column"]
    page = doc.pages[0]
    a = segment_layout(page)
    b = segment_layout(page)
    assert a == b
    assert reading_order(a, page.media_box) == reading_order(b, page.media_box)


# ---------------------------------------------------------------------------
# stitch_cross_units
# ---------------------------------------------------------------------------


def para(text):
    return Paragraph(pdf_unicode=text)


def test_stitch_dehyphenates():
    decision = stitch_cross_units(para("an adaptive typeset-"), para("ting engine follows"))
    assert decision is StitchDecision.MERGE_DEHYPHENATE


def test_stitch_keeps_after_terminal_punctuation():
    decision = stitch_cross_units(para("end of sentence."), para("The next one starts"))
    assert decision is StitchDecision.KEEP


def test_stitch_merges_lowercase_continuation():
    decision = stitch_cross_units(
        para("the system scans the"), para("intermediate representation")
    )
    assert decision is StitchDecision.MERGE


def test_stitch_keeps_capitalized_head():
    decision = stitch_cross_units(para("a heading without punct"), para("Next Section"))
    assert decision is StitchDecision.KEEP


def test_stitch_merges_cjk():
    decision = stitch_cross_units(para("这一段没有结束"), para("所以继续"))
    assert decision is StitchDecision.MERGE
    decision = stitch_cross_units(para("这一段结束了。"), para("新的段落"))
    assert decision is StitchDecision.KEEP


def test_stitched_fixture_merges(identity_runs):
    _, _, report = identity_runs["two_column"]
    assert report.stitched == 2  # one hyphen merge, one page-break merge


def test_figure_caption_classified():
    chars = text_line("Figure 3: seasonal demand by quarter", 72, 400)
    elements = segment_layout(page_with(chars))
    assert elements[0].class_name == "figure_caption"


def test_list_item_classified():
    chars = text_line("- first point in the list", 90, 400)
    elements = segment_layout(page_with(chars))
    assert elements[0].class_name == "list_item"
