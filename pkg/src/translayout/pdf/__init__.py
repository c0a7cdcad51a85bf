from .content import DocumentTables, NestedContext, PageInterpreter, char_box
from .document import PdfDocument
from .fonts import LoadedFont, load_font, parse_tounicode
from .objects import Lexer, ObjectParser, PdfName, PdfRef, PdfStream

__all__ = [
    "DocumentTables",
    "Lexer",
    "LoadedFont",
    "NestedContext",
    "ObjectParser",
    "PageInterpreter",
    "PdfDocument",
    "PdfName",
    "PdfRef",
    "PdfStream",
    "char_box",
    "load_font",
    "parse_tounicode",
]
