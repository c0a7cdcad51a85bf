"""Top-level document reading: PDF bytes in, IR out."""

from __future__ import annotations

import logging
from pathlib import Path

from .ir import DocumentIR
from .pdf.content import DocumentTables, NestedContext, PageInterpreter
from .pdf.document import PdfDocument

logger = logging.getLogger(__name__)


def read_document(
    source: str | Path | bytes,
    lenient: bool = False,
    source_lang: str = "en",
    target_lang: str = "zh",
    depth_limit: int = 16,
) -> DocumentIR:
    """Parse a PDF into the intermediate representation.

    ``source`` is a path or raw bytes.  Strict mode (default) raises on any
    unsupported construct; ``lenient=True`` downgrades recoverable problems
    to warnings collected on the returned document.
    """
    if isinstance(source, (str, Path)):
        data = Path(source).read_bytes()
    else:
        data = source
    pdf = PdfDocument(data, lenient=lenient)
    doc = DocumentIR(source_lang=source_lang, target_lang=target_lang)
    doc.warnings.extend(pdf.warnings)
    tables = DocumentTables()
    interp = PageInterpreter(pdf, tables, lenient=lenient, warn=doc.warnings.append)
    for number, page_dict in enumerate(pdf.pages()):
        context = NestedContext(depth_limit=depth_limit)
        page = interp.interpret_page(page_dict, context=context, page_number=number)
        doc.pages.append(page)
    doc.fonts = tables.fonts
    doc.states = tables.states
    doc.clips = tables.clips
    if doc.warnings:
        logger.debug("reader produced %d warnings", len(doc.warnings))
    return doc
