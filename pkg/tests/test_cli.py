"""Command-line surface: flags, exit codes, artifacts."""

import json

import pytest

from translayout.cli import main
from translayout.corpus import PdfAssembler, assemble_pages, PageBuilder
from translayout.ir import deserialize_ir, validate_ir
from translayout.evaluate import compute_biou
from translayout.reader import read_document


def run_cli(*argv):
    return main(list(argv))


def test_translate_identity_with_ir_dump(corpus_paths, tmp_path):
    out = tmp_path / "out"
    dump = tmp_path / "ir"
    code = run_cli(
        "translate", "--files", str(corpus_paths["single_column"]),
        "--lang-out", "es", "--translator", "mock:identity",
        "--out-dir", str(out), "--ir-dump", str(dump),
    )
    assert code == 0
    parsed = dump / "single_column.parsed.json"
    translated = dump / "single_column.translated.json"
    assert parsed.exists() and translated.exists()
    for path in (parsed, translated):
        doc = deserialize_ir(path.read_text(encoding="utf-8"))
        assert validate_ir(doc).ok
    # Self-BIoU of the identity output against the source.
    src = read_document(corpus_paths["single_column"])
    dst = read_document(out / "single_column.es.pdf")
    report = compute_biou(src, dst)
    assert report.document_mean >= 0.95


def test_eval_subcommand_self_comparison(corpus_paths, tmp_path):
    stem = tmp_path / "report"
    code = run_cli(
        "eval", str(corpus_paths["citations"]), str(corpus_paths["citations"]),
        "--out", str(stem),
    )
    assert code == 0
    assert "document mean BIoU: 1.0000" in (tmp_path / "report.txt").read_text()
    payload = json.loads((tmp_path / "report.json").read_text())
    assert payload["biou"]["document_mean"] == 1.0


def test_eval_page_count_mismatch_exit_2(corpus_paths, tmp_path):
    code = run_cli(
        "eval", str(corpus_paths["single_column"]), str(corpus_paths["formula"]),
        "--out", str(tmp_path / "r"),
    )
    assert code == 2


def test_missing_input_exit_5(tmp_path):
    code = run_cli("translate", "--files", str(tmp_path / "nope.pdf"))
    assert code == 5


def test_unknown_translator_exit_5(corpus_paths, tmp_path):
    code = run_cli(
        "translate", "--files", str(corpus_paths["citations"]),
        "--translator", "fancy:quantum", "--out-dir", str(tmp_path),
    )
    assert code == 5


def test_bad_pdf_exit_2(tmp_path):
    bad = tmp_path / "bad.pdf"
    bad.write_bytes(b"%PDF-1.7\nthis is not really a document")
    code = run_cli("translate", "--files", str(bad), "--out-dir", str(tmp_path))
    assert code == 2


def test_bad_scale_config_exit_5(corpus_paths, tmp_path):
    code = run_cli(
        "translate", "--files", str(corpus_paths["citations"]),
        "--scale-step", "0", "--out-dir", str(tmp_path),
    )
    assert code == 5


def test_dual_flag_doubles_pages(tmp_path):
    # A three-page document comes out as six pages ordered S1 T1 S2 T2 S3 T3.
    pages = []
    for i in range(3):
        page = PageBuilder()
        page.paragraph(f"Page {i + 1} body text for the alternating test.", 72, 700, 400)
        pages.append(page)
    src = tmp_path / "three.pdf"
    src.write_bytes(assemble_pages(pages))
    code = run_cli(
        "translate", "--files", str(src), "--translator", "mock:bracket",
        "--use-alternating-pages-dual", "--out-dir", str(tmp_path),
    )
    assert code == 0
    dual = read_document(tmp_path / "three.zh.dual.pdf")
    assert len(dual.pages) == 6
    for i in range(3):
        side_text = "".join(c.char_unicode for c in dual.pages[2 * i].pdf_character)
        assert f"Page {i + 1}" in side_text
        translated = "".join(c.char_unicode for c in dual.pages[2 * i + 1].pdf_character)
        assert "⟦" in translated  # bracket-mock output on odd indexes


def test_glossary_csv_flows_into_prompts(tmp_path):
    # Fixture where the term appears four times across two pages.
    pages = []
    for i in range(2):
        page = PageBuilder()
        page.paragraph(
            "The Current Transformation Matrix (CTM) defines placement. "
            "Every nested object composes onto the Current Transformation Matrix.",
            72, 700, 468,
        )
        pages.append(page)
    src = tmp_path / "ctm.pdf"
    src.write_bytes(assemble_pages(pages))

    glossary = tmp_path / "terms.csv"
    glossary.write_text(
        "source,target,acronym\nCurrent Transformation Matrix,matriz de transformacion,CTM\n",
        encoding="utf-8",
    )
    from translayout.pipeline import PipelineConfig, process_file

    config = PipelineConfig(
        files=[str(src)], lang_out="es", translator="mock:identity",
        glossary_csv=str(glossary), out_dir=str(tmp_path / "out"),
    )
    code, report = process_file(str(src), config)
    assert code == 0
    assert report.user_glossary_entries == 1
    assert report.glossary_entries >= 1
    matching = [p for p in report.prompts if "Current Transformation Matrix" in p]
    assert matching, "prompts must carry the injected glossary line"
    for prompt in matching:
        assert "Current Transformation Matrix ⇒ matriz de transformacion" in prompt
    payload = json.loads((tmp_path / "out" / "ctm.report.json").read_text())
    assert payload["user_glossary_entries"] == 1


def test_detections_flag(corpus_paths, tmp_path):
    det = tmp_path / "det.json"
    det.write_text(json.dumps({
        "pages": [
            {"page_number": 0, "elements": [
                {"class_name": "body_text",
                 "box": {"x": 40, "y": 40, "x2": 572, "y2": 752}, "conf": 1.0}
            ]},
        ]
    }))
    out = tmp_path / "out"
    code = run_cli(
        "translate", "--files", str(corpus_paths["single_column"]),
        "--detections", str(det), "--out-dir", str(out),
    )
    assert code == 0
    # The supplied detection becomes the page layout of the dumped IR.
    code = run_cli(
        "translate", "--files", str(corpus_paths["single_column"]),
        "--detections", str(det), "--out-dir", str(out), "--ir-dump", str(tmp_path / "ir"),
    )
    doc = deserialize_ir((tmp_path / "ir" / "single_column.translated.json").read_text())
    assert doc.pages[0].page_layout[0].box.x == 40.0
    assert doc.pages[0].page_layout[0].conf == 1.0


def test_config_file_defaults_and_flag_override(corpus_paths, tmp_path):
    cfg = tmp_path / "run.conf"
    cfg.write_text("lang-out = fr\nscale-step = 0.10\n", encoding="utf-8")
    out = tmp_path / "out"
    code = run_cli(
        "translate", "--files", str(corpus_paths["citations"]),
        "--config", str(cfg), "--out-dir", str(out),
    )
    assert code == 0
    assert (out / "citations.fr.pdf").exists()  # config file applied
    code = run_cli(
        "translate", "--files", str(corpus_paths["citations"]),
        "--config", str(cfg), "--lang-out", "de", "--out-dir", str(out),
    )
    assert code == 0
    assert (out / "citations.de.pdf").exists()  # flag beats config file


def test_empty_document_rejected(tmp_path):
    asm = PdfAssembler()
    catalog = asm.reserve()
    pages = asm.add(b"<< /Type /Pages /Kids [] /Count 0 >>")
    asm.set(catalog, f"<< /Type /Catalog /Pages {pages} 0 R >>".encode())
    empty = tmp_path / "empty.pdf"
    empty.write_bytes(asm.tobytes(catalog))
    code = run_cli("translate", "--files", str(empty), "--out-dir", str(tmp_path))
    assert code == 2


def test_run_report_written(corpus_paths, tmp_path):
    out = tmp_path / "out"
    code = run_cli(
        "translate", "--files", str(corpus_paths["two_column"]),
        "--translator", "mock:bracket", "--out-dir", str(out),
    )
    assert code == 0
    payload = json.loads((out / "two_column.report.json").read_text())
    assert payload["pages"] == 2
    assert payload["paragraphs"] > 0
    assert payload["utb_per_page"] == [0, 0]
    assert payload["gamma_histogram"]
    assert payload["stitched"] == 2


def test_deterministic_reports(corpus_paths, tmp_path):
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    for out in (out_a, out_b):
        assert run_cli(
            "translate", "--files", str(corpus_paths["header_footer"]),
            "--out-dir", str(out), "--ir-dump", str(out / "ir"),
        ) == 0
    for rel in ("ir/header_footer.translated.json", "header_footer.zh.pdf"):
        assert (out_a / rel).read_bytes() == (out_b / rel).read_bytes(), rel
    reports = []
    for out in (out_a, out_b):
        payload = json.loads((out / "header_footer.report.json").read_text())
        for key in ("input", "output", "dual_output"):
            payload.pop(key, None)  # paths differ per output directory
        reports.append(payload)
    assert reports[0] == reports[1]


def test_backend_unavailable_exit_3(corpus_paths, tmp_path):
    from translayout.errors import BackendUnavailable
    from translayout.pipeline import PipelineConfig, process_file

    class DeadBackend:
        name = "dead"

        def translate(self, texts, prompt):
            raise BackendUnavailable("connection refused")

    config = PipelineConfig(files=[str(corpus_paths["citations"])], out_dir=str(tmp_path))
    code, report = process_file(str(corpus_paths["citations"]), config, backend=DeadBackend())
    assert code == 3
    assert any("backend unavailable" in e for e in report.errors)


def test_http_translator_without_endpoint_exit_3(corpus_paths, tmp_path, monkeypatch):
    monkeypatch.delenv("TRANSLAYOUT_ENDPOINT", raising=False)
    code = run_cli(
        "translate", "--files", str(corpus_paths["citations"]),
        "--translator", "http", "--out-dir", str(tmp_path),
    )
    assert code == 3
