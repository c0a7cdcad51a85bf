"""Exception types shared across the pipeline."""

from __future__ import annotations


class TranslayoutError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(TranslayoutError):
    """Serialized document text violates the schema.

    ``path`` points at the first offending field, e.g.
    ``pages[0].page_layout[2].conf``.
    """

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


class PdfParseError(TranslayoutError):
    """Base class for source-document parse failures."""


class MalformedStream(PdfParseError):
    def __init__(self, offset: int, message: str = "malformed stream"):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnsupportedOperator(PdfParseError):
    def __init__(self, op: str, offset: int):
        super().__init__(f"unsupported operator {op!r} at offset {offset}")
        self.op = op
        self.offset = offset


class CyclicXObject(PdfParseError):
    def __init__(self, name: str):
        super().__init__(f"XObject {name!r} invokes itself (directly or transitively)")
        self.name = name


class DepthExceeded(PdfParseError):
    def __init__(self, limit: int):
        super().__init__(f"XObject nesting exceeds depth limit {limit}")
        self.limit = limit


class EncryptedPdf(PdfParseError):
    """Encrypted input files are rejected outright."""


class MissingWidth(TranslayoutError):
    """A glyph lacks an advance width.  Recorded as a warning, not raised."""

    def __init__(self, code: int):
        super().__init__(f"no width for character code {code}")
        self.code = code


class BackendUnavailable(TranslayoutError):
    """Translation backend unreachable after the configured retries."""


class BackendProtocolError(TranslayoutError):
    """Translation backend returned a structurally invalid response."""


class UnknownMode(TranslayoutError):
    def __init__(self, mode: str):
        super().__init__(f"unknown pseudo-translation mode {mode!r}")
        self.mode = mode


class UnknownPlaceholder(TranslayoutError):
    def __init__(self, placeholder_id: int):
        super().__init__(f"output references unknown placeholder id {placeholder_id}")
        self.placeholder_id = placeholder_id


class InvalidConfig(TranslayoutError):
    """A configuration value is out of its legal range."""


class MalformedFont(TranslayoutError):
    """Font program bytes could not be parsed."""


class MissingFontResource(TranslayoutError):
    """A page references a font the renderer was never given."""


class UntypesetParagraph(TranslayoutError):
    """render_page was handed a translated paragraph with no fitted layout."""


class PageCountMismatch(TranslayoutError):
    def __init__(self, src_pages: int, dst_pages: int):
        super().__init__(f"page counts differ: source {src_pages}, translated {dst_pages}")
        self.src_pages = src_pages
        self.dst_pages = dst_pages


class MissingPath(TranslayoutError):
    def __init__(self, path: str):
        super().__init__(f"required path does not exist: {path}")
        self.path = path
