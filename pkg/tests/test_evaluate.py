import random

import pytest

from translayout.errors import MissingPath, PageCountMismatch
from translayout.evaluate import (
    compute_biou,
    count_utb,
    deinterleave_dual,
    emit_judge_prompt,
    iou,
    match_elements,
    write_reports,
)
from translayout.geometry import Box
from translayout.ir import DocumentIR, LayoutElement, PageIR, Paragraph


def el(i, x, y, x2, y2, cls="body_text"):
    return LayoutElement(id=i, class_name=cls, box=Box(x, y, x2, y2), conf=0.9)


# ---------------------------------------------------------------------------
# iou
# ---------------------------------------------------------------------------


def test_iou_self_is_one():
    a = Box(3, 4, 10, 12)
    assert iou(a, a) == 1.0


def test_iou_analytic_third():
    assert iou(Box(0, 0, 1, 1), Box(0.5, 0, 1.5, 1)) == pytest.approx(1 / 3)


def test_iou_disjoint_zero():
    assert iou(Box(0, 0, 1, 1), Box(2, 2, 3, 3)) == 0.0


def test_iou_symmetry_and_range():
    rng = random.Random(5)
    for _ in range(300):
        a = Box(rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(5, 10), rng.uniform(5, 10))
        b = Box(rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(5, 10), rng.uniform(5, 10))
        v = iou(a, b)
        assert v == iou(b, a)
        assert 0.0 <= v <= 1.0


def test_iou_degenerate_union_zero():
    a = Box(1, 1, 1, 1)
    assert iou(a, a) == 0.0


# ---------------------------------------------------------------------------
# match_elements
# ---------------------------------------------------------------------------


def test_identical_lists_identity_pairing():
    src = [el(1, 0, 8, 4, 10), el(2, 0, 4, 4, 6), el(3, 0, 0, 4, 2)]
    dst = [el(1, 0, 8, 4, 10), el(2, 0, 4, 4, 6), el(3, 0, 0, 4, 2)]
    pairs, un_src, un_dst = match_elements(src, dst, [1, 2, 3], [1, 2, 3])
    assert [(s, d) for s, d, _ in pairs] == [(1, 1), (2, 2), (3, 3)]
    assert all(v == 1.0 for _, _, v in pairs)
    assert un_src == [] and un_dst == []


def test_shifted_destination_still_pairs():
    src = [el(1, 0, 8, 4, 10), el(2, 0, 4, 4, 6)]
    dst = [el(1, 0, 7.8, 4, 9.8), el(2, 0, 3.8, 4, 5.8)]  # shifted down slightly
    pairs, un_src, un_dst = match_elements(src, dst, [1, 2], [1, 2])
    assert [(s, d) for s, d, _ in pairs] == [(1, 1), (2, 2)]
    assert all(0 < v < 1 for _, _, v in pairs)


def test_missing_destination_element_left_unmatched():
    src = [el(1, 0, 8, 4, 10), el(2, 0, 4, 4, 6)]
    dst = [el(1, 0, 8, 4, 10)]
    pairs, un_src, un_dst = match_elements(src, dst, [1, 2], [1])
    assert [(s, d) for s, d, _ in pairs] == [(1, 1)]
    assert un_src == [2]
    assert un_dst == []


def test_matching_is_injective():
    src = [el(1, 0, 0, 4, 2), el(2, 0, 0.5, 4, 2.5)]  # both overlap dst 1
    dst = [el(1, 0, 0, 4, 2)]
    pairs, un_src, _ = match_elements(src, dst, [1, 2], [1])
    assert len(pairs) == 1
    assert len(un_src) == 1


# ---------------------------------------------------------------------------
# compute_biou
# ---------------------------------------------------------------------------


def doc_with_elements(elements, w=612.0, h=792.0):
    doc = DocumentIR()
    page = PageIR(page_number=0, media_box=Box(0, 0, w, h))
    page.page_layout = list(elements)
    doc.pages.append(page)
    return doc


def test_biou_self_comparison_is_one():
    doc = doc_with_elements([el(1, 50, 600, 300, 700), el(2, 50, 300, 300, 500)])
    report = compute_biou(doc, doc)
    assert report.document_mean == 1.0
    assert report.coverage == 1.0


def test_biou_scale_invariance_doubling():
    elements = [el(1, 50, 600, 300, 700), el(2, 320, 300, 500, 560)]
    shifted = [el(1, 50, 590, 300, 690), el(2, 320, 290, 500, 550)]
    base = compute_biou(doc_with_elements(elements), doc_with_elements(shifted))
    doubled = compute_biou(
        doc_with_elements([el(e.id, e.box.x * 2, e.box.y * 2, e.box.x2 * 2, e.box.y2 * 2)
                           for e in elements], w=1224, h=1584),
        doc_with_elements([el(e.id, e.box.x * 2, e.box.y * 2, e.box.x2 * 2, e.box.y2 * 2)
                           for e in shifted], w=1224, h=1584),
    )
    assert doubled.document_mean == pytest.approx(base.document_mean, abs=1e-12)


def test_biou_single_pair_analytic_third():
    src = doc_with_elements([el(1, 0, 0, 612, 792)])
    dst = doc_with_elements([el(1, 306, 0, 918, 792)])  # half-shifted horizontally
    report = compute_biou(src, dst)
    assert report.document_mean == pytest.approx(1 / 3)


def test_biou_page_count_mismatch():
    a = doc_with_elements([el(1, 0, 0, 10, 10)])
    b = doc_with_elements([el(1, 0, 0, 10, 10)])
    b.pages.append(PageIR(page_number=1, media_box=Box(0, 0, 612, 792)))
    with pytest.raises(PageCountMismatch):
        compute_biou(a, b)


def test_biou_scale_invariance_property():
    rng = random.Random(11)
    for _ in range(50):
        elements = []
        for i in range(1, rng.randint(2, 6)):
            x, y = rng.uniform(0, 500), rng.uniform(0, 700)
            elements.append(el(i, x, y, x + rng.uniform(10, 100), y + rng.uniform(5, 80)))
        jitter = [
            el(e.id, e.box.x + rng.uniform(-5, 5), e.box.y + rng.uniform(-5, 5),
               e.box.x2 + rng.uniform(-5, 5), e.box.y2 + rng.uniform(-5, 5))
            for e in elements
        ]
        base = compute_biou(doc_with_elements(elements), doc_with_elements(jitter))
        k = rng.uniform(0.5, 4.0)
        scaled_src = doc_with_elements(
            [el(e.id, e.box.x * k, e.box.y * k, e.box.x2 * k, e.box.y2 * k) for e in elements],
            w=612 * k, h=792 * k,
        )
        scaled_dst = doc_with_elements(
            [el(e.id, e.box.x * k, e.box.y * k, e.box.x2 * k, e.box.y2 * k) for e in jitter],
            w=612 * k, h=792 * k,
        )
        scaled = compute_biou(scaled_src, scaled_dst)
        assert scaled.document_mean == pytest.approx(base.document_mean, abs=1e-9)


def test_deinterleave_dual_splits_sides():
    doc = DocumentIR()
    for i in range(6):
        doc.pages.append(PageIR(page_number=i, media_box=Box(0, 0, 612, 792)))
    src, dst = deinterleave_dual(doc)
    assert len(src.pages) == 3 and len(dst.pages) == 3
    assert [p.page_number for p in src.pages] == [0, 1, 2]


# ---------------------------------------------------------------------------
# count_utb
# ---------------------------------------------------------------------------


def make_para(input_text, output_text, failed=False):
    return Paragraph(input=input_text, output=output_text, failed=failed)


def utb_doc(paras_per_page):
    doc = DocumentIR()
    for i, paras in enumerate(paras_per_page):
        page = PageIR(page_number=i, media_box=Box(0, 0, 612, 792))
        page.paragraph = paras
        doc.pages.append(page)
    return doc


def test_utb_zero_when_all_translated():
    doc = utb_doc([[make_para("hello", "⟦hello⟧")]])
    report = count_utb(doc)
    assert report.per_page == [0]
    assert report.document_mean == 0.0


def test_utb_counts_flags_and_identical():
    doc = utb_doc([
        [
            make_para("one", "one"),            # identical -> counted
            make_para("two", "TWO!"),           # translated
            make_para("three", "⟦x⟧", failed=True),  # flagged -> counted
            make_para("four", "quatre"),
            make_para("five", "five"),          # identical -> counted
        ]
    ])
    report = count_utb(doc)
    assert report.per_page == [3]
    assert report.document_mean == 3.0


def test_utb_pure_placeholder_paragraph_not_counted():
    doc = utb_doc([[make_para("{v1}", "{v1}"), make_para("{v1} {v2}", "{v2} {v1}")]])
    report = count_utb(doc)
    assert report.per_page == [0]


def test_utb_bound_by_paragraph_count():
    paras = [make_para(f"t{i}", f"t{i}") for i in range(4)]
    report = count_utb(utb_doc([paras]))
    assert report.per_page[0] <= len(paras)


# ---------------------------------------------------------------------------
# emit_judge_prompt
# ---------------------------------------------------------------------------


def test_judge_prompt_contains_rubrics_and_format(tmp_path):
    original = tmp_path / "orig.png"
    original.write_bytes(b"png")
    systems = []
    for i in range(3):
        p = tmp_path / f"sys{i}.png"
        p.write_bytes(b"png")
        systems.append(str(p))
    prompt = emit_judge_prompt([str(original)], systems)
    for rubric in ("Layout Fidelity", "Translation Precision",
                   "Visual Aesthetics", "Terminology Consistency"):
        assert rubric in prompt
    assert "system|Layout Fidelity:<score>" in prompt
    assert "Untranslated Blocks:<count>" in prompt
    assert str(original) in prompt
    assert all(s in prompt for s in systems)


def test_judge_prompt_no_systems_is_missing_path(tmp_path):
    original = tmp_path / "orig.png"
    original.write_bytes(b"png")
    with pytest.raises(MissingPath):
        emit_judge_prompt([str(original)], [])


def test_judge_prompt_nonexistent_path(tmp_path):
    original = tmp_path / "orig.png"
    original.write_bytes(b"png")
    with pytest.raises(MissingPath):
        emit_judge_prompt([str(original)], [str(tmp_path / "missing.png")])


def test_judge_prompt_deterministic(tmp_path):
    original = tmp_path / "orig.png"
    original.write_bytes(b"png")
    sys1 = tmp_path / "s1.png"
    sys1.write_bytes(b"png")
    args = ([str(original)], [str(sys1)])
    assert emit_judge_prompt(*args) == emit_judge_prompt(*args)


def test_write_reports_files(tmp_path):
    doc = doc_with_elements([el(1, 0, 0, 100, 100)])
    report = compute_biou(doc, doc)
    txt = tmp_path / "r.txt"
    js = tmp_path / "r.json"
    write_reports(report, count_utb(doc), str(txt), str(js))
    assert "document mean BIoU: 1.0000" in txt.read_text()
    import json

    payload = json.loads(js.read_text())
    assert payload["biou"]["document_mean"] == 1.0
