"""Acceptance suite: one test per shipping criterion, tolerances pinned.

Each test prints a PASS/FAIL line (run with ``pytest -s`` to watch them).
The suite is the gate for the whole package: identity and expansion layout
fidelity on the bundled corpus, placeholder and typesetting conformance
fuzzing, nested-structure flattening, self round-trips, UTB diagnostics,
metric correctness, throughput sanity, and glossary behavior.
"""

from __future__ import annotations

import hashlib
import random
import time

import pytest

from translayout.corpus import CORPUS_NAMES, PageBuilder, assemble_pages, build_nested_form, corpus_target_lang
from translayout.evaluate import compute_biou, count_utb, iou
from translayout.fonts.metrics import FallbackMetrics
from translayout.geometry import Box, Matrix, compose_matrix
from translayout.ir import DocumentIR, PageIR, validate_ir
from translayout.mask import TypesetUnit, find_maskable_regions, mask_units, unmask
from translayout.pipeline import PipelineConfig, process_file
from translayout.reader import read_document
from translayout.translate import MockBackend, pseudo_translate, verify_placeholders
from translayout.typeset import (
    OVERFLOW,
    FitStatus,
    TypesetConfig,
    fit_paragraph,
    layout_lines,
)

MONO = FallbackMetrics()


def report_line(criterion: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[acceptance] {status} criterion {criterion}: {detail}")
    assert ok, detail


def run_corpus(corpus_paths, tmp_path_factory, translator: str, tag: str):
    out_dir = tmp_path_factory.mktemp(f"accept_{tag}")
    results = {}
    for name in CORPUS_NAMES:
        config = PipelineConfig(
            files=[str(corpus_paths[name])],
            lang_out=corpus_target_lang(name),
            translator=translator,
            out_dir=str(out_dir),
        )
        code, report = process_file(str(corpus_paths[name]), config)
        assert code == 0, f"{name}: {report.errors}"
        results[name] = report
    return results


# ---------------------------------------------------------------------------
# 1. Identity-pipeline layout fidelity
# ---------------------------------------------------------------------------


def test_criterion_1_identity_layout_fidelity(corpus_paths, tmp_path_factory):
    started = time.perf_counter()
    reports = run_corpus(corpus_paths, tmp_path_factory, "mock:identity", "c1")
    details = []
    ok = True
    for name in CORPUS_NAMES:
        src = read_document(corpus_paths[name])
        dst = read_document(reports[name].output)
        biou = compute_biou(src, dst)
        details.append(f"{name}={biou.document_mean:.4f}/{biou.coverage:.3f}")
        if biou.document_mean < 0.95 or biou.coverage < 0.95:
            ok = False
    elapsed = time.perf_counter() - started
    if elapsed >= 30.0:
        ok = False
    report_line(1, ok, f"identity BIoU/coverage {'; '.join(details)}; runtime {elapsed:.2f}s < 30s")


# ---------------------------------------------------------------------------
# 2. Expansion-pipeline layout fidelity
# ---------------------------------------------------------------------------


def test_criterion_2_expansion_layout_fidelity(corpus_paths, tmp_path_factory):
    reports = run_corpus(corpus_paths, tmp_path_factory, "mock:expand:1.3", "c2")
    details = []
    ok = True
    total_overflow = 0
    for name in CORPUS_NAMES:
        src = read_document(corpus_paths[name])
        dst = read_document(reports[name].output)
        biou = compute_biou(src, dst)
        total_overflow += reports[name].overflow_at_min
        details.append(f"{name}={biou.document_mean:.4f}")
        if biou.document_mean < 0.80:
            ok = False
    if total_overflow != 0:
        ok = False
    report_line(
        2, ok,
        f"expand:1.3 BIoU {'; '.join(details)}; paragraphs at floor scale: {total_overflow}",
    )


# ---------------------------------------------------------------------------
# 3. Placeholder integrity
# ---------------------------------------------------------------------------


def _random_maskable_paragraph(rng: random.Random) -> str:
    words = ["survey", "ledger", "column", "figure", "margin", "detail", "sample"]
    parts = []
    for _ in range(rng.randint(1, 14)):
        roll = rng.random()
        if roll < 0.25:
            n = rng.randint(1, 250)
            if rng.random() < 0.3:
                parts.append(f"[{n},{n + 1}]")
            else:
                parts.append(f"[{n}]")
        elif roll < 0.32:
            parts.append("￼")  # inline image
        elif roll < 0.40:
            parts.append("y = x + " + str(rng.randint(2, 9)))  # formula-ish
        else:
            parts.append(rng.choice(words))
    return " ".join(parts)


def test_criterion_3_placeholder_integrity():
    from translayout.ir import Paragraph, unmask_text

    rng = random.Random(0xBEEF)
    page = PageIR(page_number=0, media_box=Box(0, 0, 612, 792))
    doc = DocumentIR()
    modes = ("identity", "bracket", "expand:1.3")
    backends = {mode: MockBackend(mode) for mode in modes}
    cases = 0
    failures = 0
    for _ in range(3500):
        text = _random_maskable_paragraph(rng)
        para = Paragraph(pdf_unicode=text)
        para.page_number = 0
        para.base_size = 10.0
        para.unit_map = [
            ("space" if c == " " else ("op" if c == "￼" else "char"), i + 1, 0)
            for i, c in enumerate(text)
        ]
        regions = find_maskable_regions(para, page, doc)
        mask_units(para, regions)
        if unmask_text(para.input, para.placeholders) != text:
            failures += 1
        for mode in modes:
            cases += 1
            output = backends[mode].translate([para.input], "p")[0]
            if verify_placeholders(para.input, output, para.placeholders):
                failures += 1

    # The documented round-trip example must hold exactly.
    text = "DeepWalk [112], APP [197], InfoWalk [200]"
    para = Paragraph(pdf_unicode=text)
    para.page_number = 0
    para.base_size = 10.0
    para.unit_map = [("space" if c == " " else "char", i + 1, 0) for i, c in enumerate(text)]
    mask_units(para, find_maskable_regions(para, page, doc))
    exact = (
        para.input == "DeepWalk {v1}APP {v2}InfoWalk{v3}"
        and unmask_text(para.input, para.placeholders) == text
    )
    ok = failures == 0 and cases >= 10000 and exact
    report_line(
        3, ok,
        f"{cases} paragraph-mode cases, {failures} conservation failures; "
        f"documented example round-trips exactly: {exact}",
    )


# ---------------------------------------------------------------------------
# 4. Typesetting algorithm conformance
# ---------------------------------------------------------------------------


def test_criterion_4_typesetting_conformance():
    rng = random.Random(0xF17)
    cfg_cases = 0
    violations = 0
    for _ in range(10000):
        step = rng.choice([0.05, 0.10])
        min_gamma = round(rng.uniform(0.3, 0.95), 2)
        cfg = TypesetConfig(step=step, min_gamma=min_gamma)
        n = rng.randint(0, 90)
        text = "".join(rng.choice("ab cd一二 ") for _ in range(n))
        box = Box(0, 0, rng.uniform(15, 180), rng.uniform(8, 100))
        units = [TypesetUnit(kind="text", text=text)]
        result = fit_paragraph(units, box, cfg, MONO, 10.0)
        cfg_cases += 1
        grid = []
        k = 0
        while True:
            g = round(1.0 - k * step, 9)
            if g <= min_gamma:
                grid.append(min_gamma)
                break
            grid.append(g)
            k += 1
        if result.gamma not in grid:
            violations += 1
            continue
        if result.status is FitStatus.FIT and result.gamma < 1.0:
            bigger = grid[grid.index(result.gamma) - 1]
            if layout_lines(units, box, bigger, MONO, cfg, 10.0) is not OVERFLOW:
                violations += 1
                continue
        prefix_units = [TypesetUnit(kind="text", text=text[: n // 2])]
        prefix = fit_paragraph(prefix_units, box, cfg, MONO, 10.0)
        if prefix.gamma < result.gamma:
            violations += 1

    mono_cfg = TypesetConfig(step=0.05, min_gamma=0.6)
    fixture = fit_paragraph(
        [TypesetUnit(kind="text", text="a" * 100)], Box(0, 0, 100, 44), mono_cfg, MONO, 10.0
    )
    mono_ok = fixture.gamma == pytest.approx(0.80) and fixture.iterations == 5
    column = fit_paragraph(
        [TypesetUnit(kind="text", text="b" * 45)], Box(0, 0, 100, 20), mono_cfg, MONO, 10.0
    )
    col_ok = column.gamma == pytest.approx(0.85) and column.status is FitStatus.FIT
    ok = violations == 0 and cfg_cases >= 10000 and mono_ok and col_ok
    report_line(
        4, ok,
        f"{cfg_cases} fuzz tuples, {violations} invariant violations; monospace fixture "
        f"gamma={fixture.gamma:g} in {fixture.iterations} iterations; "
        f"two-column fixture gamma={column.gamma:g}",
    )


# ---------------------------------------------------------------------------
# 5. Nested-structure flattening
# ---------------------------------------------------------------------------


def test_criterion_5_nested_structure_flattening(tmp_path):
    data = build_nested_form()
    src_path = tmp_path / "nested.pdf"
    src_path.write_bytes(data)
    doc = read_document(data)  # strict mode: any q/Q imbalance would raise
    chars = doc.pages[0].pdf_character

    m = Matrix.identity()
    m = compose_matrix(Matrix(2, 0, 0, 2, 40, 600), m)
    m = compose_matrix(Matrix(0.8, 0, 0, 0.8, 20, 30), m)
    m = compose_matrix(Matrix(1.5, 0, 0, 1.5, 10, 5), m)
    m = compose_matrix(Matrix(1, 0, 0, 1, 5, 10), m)
    origin = m.apply(10, 20)
    nested_chars = [c for c in chars if c.font_size > 20]
    parse_ok = (
        abs(nested_chars[0].box.x - origin[0]) <= 0.01
        and abs(nested_chars[0].baseline_y - origin[1]) <= 0.01
    )

    config = PipelineConfig(files=[str(src_path)], translator="mock:identity",
                            out_dir=str(tmp_path))
    code, report = process_file(str(src_path), config)
    rerender_ok = code == 0
    max_delta = 0.0
    if rerender_ok:
        out = read_document(report.output)  # strict re-parse checks q/Q balance
        src_sorted = sorted(chars, key=lambda c: (round(-c.baseline_y, 2), c.box.x))
        out_sorted = sorted(out.pages[0].pdf_character,
                            key=lambda c: (round(-c.baseline_y, 2), c.box.x))
        rerender_ok = len(src_sorted) == len(out_sorted)
        if rerender_ok:
            for s, o in zip(src_sorted, out_sorted):
                max_delta = max(
                    max_delta,
                    abs(s.box.x - o.box.x), abs(s.box.y - o.box.y),
                    abs(s.box.x2 - o.box.x2), abs(s.box.y2 - o.box.y2),
                )
            rerender_ok = max_delta <= 0.05
    ok = parse_ok and rerender_ok
    report_line(
        5, ok,
        f"device boxes match composition oracle within 0.01pt: {parse_ok}; "
        f"re-render max box delta {max_delta:.4f}pt <= 0.05",
    )


# ---------------------------------------------------------------------------
# 6. Self round-trip
# ---------------------------------------------------------------------------


def test_criterion_6_self_round_trip(corpus_paths, tmp_path_factory):
    out_dir = tmp_path_factory.mktemp("accept_c6")
    ok = True
    details = []
    for name in CORPUS_NAMES:
        config = PipelineConfig(
            files=[str(corpus_paths[name])],
            lang_out=corpus_target_lang(name),
            translator="mock:identity",
            dual=True,
            out_dir=str(out_dir),
        )
        code, report = process_file(str(corpus_paths[name]), config)
        if code != 0:
            ok = False
            details.append(f"{name}: pipeline {report.errors}")
            continue
        reparsed = read_document(report.output)  # strict mode
        validation = validate_ir(reparsed)
        if not validation.ok or reparsed.warnings:
            ok = False
            details.append(f"{name}: {validation.summary()} {reparsed.warnings[:2]}")
            continue
        src = read_document(corpus_paths[name])
        dual = read_document(report.dual_output)
        if len(dual.pages) != 2 * len(src.pages):
            ok = False
            details.append(f"{name}: dual pages {len(dual.pages)} != 2x{len(src.pages)}")
            continue
        for i, s_page in enumerate(src.pages):
            src_text = "".join(c.char_unicode for c in s_page.pdf_character)
            side_text = "".join(c.char_unicode for c in dual.pages[2 * i].pdf_character)
            if side_text != src_text:
                ok = False
                details.append(f"{name}: page {i} source side differs")
                break
        details.append(f"{name}=ok")
    report_line(6, ok, "; ".join(details))


# ---------------------------------------------------------------------------
# 7. UTB diagnostics
# ---------------------------------------------------------------------------


class FaultInjectingBackend:
    """Bracket translation that deterministically drops {v1} from ~10% of texts."""

    name = "fault"

    def __init__(self):
        self.injected_texts: set[str] = set()

    def translate(self, texts, prompt):
        out = []
        for text in texts:
            translated = pseudo_translate(text, "bracket")
            if "{v1}" in text and hashlib.md5(text.encode()).digest()[0] % 10 == 0:
                translated = translated.replace("{v1}", "", 1)
                self.injected_texts.add(text)
            out.append(translated)
        return out


def test_criterion_7_utb_diagnostics(corpus_paths, tmp_path_factory):
    reports = run_corpus(corpus_paths, tmp_path_factory, "mock:bracket", "c7")
    bracket_ok = all(sum(r.utb_per_page) == 0 for r in reports.values())

    out_dir = tmp_path_factory.mktemp("accept_c7b")
    backend = FaultInjectingBackend()
    config = PipelineConfig(
        files=[str(corpus_paths["citations"])], lang_out="es", out_dir=str(out_dir)
    )
    code, report = process_file(str(corpus_paths["citations"]), config, backend=backend)
    injected = len(backend.injected_texts)
    fault_ok = code == 0 and sum(report.utb_per_page) == injected and injected > 0
    ok = bracket_ok and fault_ok
    report_line(
        7, ok,
        f"bracket UTB zero on all fixtures: {bracket_ok}; "
        f"fault injection flagged {sum(report.utb_per_page)} == injected {injected}",
    )


# ---------------------------------------------------------------------------
# 8. Metric correctness
# ---------------------------------------------------------------------------


def test_criterion_8_metric_correctness():
    exact = (
        iou(Box(2, 2, 8, 8), Box(2, 2, 8, 8)) == 1.0
        and iou(Box(0, 0, 1, 1), Box(0.5, 0, 1.5, 1)) == pytest.approx(1 / 3, abs=1e-12)
        and iou(Box(0, 0, 1, 1), Box(5, 5, 6, 6)) == 0.0
    )
    from translayout.ir import LayoutElement

    rng = random.Random(0x10)
    cases = 0
    failures = 0
    for _ in range(1000):
        elements = []
        for i in range(1, rng.randint(2, 7)):
            x, y = rng.uniform(0, 500), rng.uniform(0, 700)
            elements.append(LayoutElement(
                id=i, class_name="body_text",
                box=Box(x, y, x + rng.uniform(10, 120), y + rng.uniform(5, 90)), conf=0.9,
            ))
        jitter = [
            LayoutElement(id=e.id, class_name=e.class_name, conf=e.conf,
                          box=Box(e.box.x + rng.uniform(-8, 8), e.box.y + rng.uniform(-8, 8),
                                  e.box.x2 + rng.uniform(-8, 8), e.box.y2 + rng.uniform(-8, 8)))
            for e in elements
        ]

        def doc_of(els, w, h):
            d = DocumentIR()
            page = PageIR(page_number=0, media_box=Box(0, 0, w, h))
            page.page_layout = list(els)
            d.pages.append(page)
            return d

        base = compute_biou(doc_of(elements, 612, 792), doc_of(jitter, 612, 792))
        k = rng.uniform(0.25, 5.0)

        def scaled(els):
            return [
                LayoutElement(id=e.id, class_name=e.class_name, conf=e.conf,
                              box=e.box.scaled(k, k))
                for e in els
            ]

        scaled_report = compute_biou(
            doc_of(scaled(elements), 612 * k, 792 * k), doc_of(scaled(jitter), 612 * k, 792 * k)
        )
        cases += 1
        if abs(scaled_report.document_mean - base.document_mean) > 1e-9:
            failures += 1
    ok = exact and failures == 0 and cases >= 1000
    report_line(
        8, ok,
        f"analytic IoU values exact: {exact}; scale invariance {cases} cases, "
        f"{failures} failures",
    )


# ---------------------------------------------------------------------------
# 9. Throughput sanity
# ---------------------------------------------------------------------------


def test_criterion_9_throughput(corpus_paths, tmp_path_factory):
    started = time.perf_counter()
    reports = run_corpus(corpus_paths, tmp_path_factory, "mock:bracket", "c9")
    elapsed = time.perf_counter() - started
    pages = sum(r.pages for r in reports.values())
    per_page = elapsed / pages
    ok = per_page <= 5.0
    report_line(9, ok, f"{pages} pages in {elapsed:.2f}s = {per_page:.3f}s/page <= 5s/page")


# ---------------------------------------------------------------------------
# 10. Glossary behavior
# ---------------------------------------------------------------------------


def test_criterion_10_glossary_behavior(tmp_path):
    pages = []
    for i in range(2):
        page = PageBuilder()
        page.paragraph(
            "The Current Transformation Matrix (CTM) governs placement of every "
            "drawing unit. Each nested object composes its own matrix onto the "
            "Current Transformation Matrix before drawing.",
            72, 700, 468,
        )
        pages.append(page)
    src = tmp_path / "ctm.pdf"
    src.write_bytes(assemble_pages(pages))

    from translayout.translate import extract_glossary

    doc = read_document(src)
    from translayout.pipeline import segment_document
    from translayout.segment import SegmentConfig

    segment_document(doc, SegmentConfig())
    entries = extract_glossary(doc)
    terms = {e.source_term: e for e in entries}
    extract_ok = (
        "Current Transformation Matrix" in terms
        and terms["Current Transformation Matrix"].acronym == "CTM"
        and terms["Current Transformation Matrix"].frequency >= 4
    )

    glossary = tmp_path / "terms.csv"
    glossary.write_text(
        "source,target,acronym\n"
        "Current Transformation Matrix,matriz de transformacion actual,CTM\n",
        encoding="utf-8",
    )
    config = PipelineConfig(
        files=[str(src)], lang_out="es", translator="mock:identity",
        glossary_csv=str(glossary), out_dir=str(tmp_path / "out"),
    )
    code, report = process_file(str(src), config)
    prompts_with_term = [
        p for p in report.prompts if "Current Transformation Matrix" in p.split("Segments:")[1]
    ]
    inject_ok = code == 0 and prompts_with_term and all(
        "Current Transformation Matrix ⇒ matriz de transformacion actual" in p
        for p in prompts_with_term
    )
    ok = extract_ok and bool(inject_ok)
    report_line(
        10, ok,
        f"auto-extraction with acronym and frequency >= 4: {extract_ok}; "
        f"user CSV injected into {len(prompts_with_term)} matching prompt(s): {bool(inject_ok)}",
    )
