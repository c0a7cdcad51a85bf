"""Shared fixtures: the synthetic corpus, parsed documents, pipeline runs."""

from __future__ import annotations

import pytest

from translayout import corpus
from translayout.pipeline import PipelineConfig, process_file
from translayout.reader import read_document


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("corpus")
    corpus.write_corpus(out)
    return out


@pytest.fixture(scope="session")
def corpus_paths(corpus_dir):
    return {name: corpus_dir / f"{name}.pdf" for name in corpus.CORPUS_NAMES}


@pytest.fixture(scope="session")
def nested_form_pdf(tmp_path_factory):
    path = tmp_path_factory.mktemp("nested") / "nested_form.pdf"
    path.write_bytes(corpus.build_nested_form())
    return path


def run_fixture(path, out_dir, translator="mock:identity", lang_out="es", **kwargs):
    """Run the pipeline on one fixture; returns (exit_code, report)."""
    config = PipelineConfig(
        files=[str(path)],
        lang_out=lang_out,
        translator=translator,
        out_dir=str(out_dir),
        **kwargs,
    )
    return process_file(str(path), config)


@pytest.fixture(scope="session")
def identity_runs(corpus_paths, tmp_path_factory):
    """name -> (source_doc, output_doc, report) for the identity pipeline."""
    out_dir = tmp_path_factory.mktemp("identity_out")
    results = {}
    for name, path in corpus_paths.items():
        lang = corpus.corpus_target_lang(name)
        code, report = run_fixture(path, out_dir, "mock:identity", lang)
        assert code == 0, f"{name}: {report.errors}"
        results[name] = (
            read_document(path),
            read_document(report.output),
            report,
        )
    return results
