"""Font metric lookups used by extraction, line layout, and rendering.

All widths are horizontal advances in 1/1000 em ("per-mille"); actual point
widths are ``width / 1000 * font_size``.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

from .base14_data import BASE14_METRICS
from .truetype import TrueTypeFont

# Aliases commonly seen in /BaseFont entries, normalized to table names.
_BASE14_ALIASES = {
    "arial": "Helvetica",
    "arial-bold": "Helvetica-Bold",
    "arialmt": "Helvetica",
    "arial-boldmt": "Helvetica-Bold",
    "helvetica": "Helvetica",
    "helvetica-bold": "Helvetica-Bold",
    "helvetica-oblique": "Helvetica-Oblique",
    "helvetica-boldoblique": "Helvetica-BoldOblique",
    "times-roman": "Times-Roman",
    "times-bold": "Times-Bold",
    "times-italic": "Times-Italic",
    "times-bolditalic": "Times-BoldItalic",
    "timesnewroman": "Times-Roman",
    "timesnewromanpsmt": "Times-Roman",
    "courier": "Courier",
    "courier-bold": "Courier-Bold",
    "courier-oblique": "Courier-Oblique",
    "courier-boldoblique": "Courier-BoldOblique",
    "couriernew": "Courier",
}

DEFAULT_WIDTH = 500  # per-mille, used when a glyph has no recorded advance


def strip_subset_prefix(name: str) -> str:
    """Drop the ``ABCDEF+`` prefix subset fonts carry."""
    if len(name) > 7 and name[6] == "+" and name[:6].isalpha() and name[:6].isupper():
        return name[7:]
    return name


def base14_name(base_font: str) -> str | None:
    """Resolve a /BaseFont name to a metrics table name, or None."""
    name = strip_subset_prefix(base_font)
    if name in BASE14_METRICS:
        return name
    return _BASE14_ALIASES.get(name.lower())


class FontMetrics:
    """Character-keyed advance widths plus vertical extent for one font."""

    name: str = ""
    ascent: int = 750
    descent: int = -250

    def has_char(self, ch: str) -> bool:
        raise NotImplementedError

    def width(self, ch: str) -> int:
        raise NotImplementedError

    def text_width(self, text: str, size: float) -> float:
        return sum(self.width(ch) for ch in text) / 1000.0 * size


@dataclass
class Base14Metrics(FontMetrics):
    """Metrics of a built-in text font, keyed by unicode char via cp1252."""

    name: str
    ascent: int = field(init=False)
    descent: int = field(init=False)

    def __post_init__(self):
        table = BASE14_METRICS[self.name]
        self.ascent = table["ascent"]
        self.descent = table["descent"]
        self._widths: dict[int, int] = table["widths"]

    def _code(self, ch: str) -> int | None:
        try:
            return ch.encode("cp1252")[0]
        except UnicodeEncodeError:
            return None

    def has_char(self, ch: str) -> bool:
        code = self._code(ch)
        return code is not None and code in self._widths

    def width(self, ch: str) -> int:
        code = self._code(ch)
        if code is None:
            return DEFAULT_WIDTH
        return self._widths.get(code, DEFAULT_WIDTH)


def metrics_for_base14(base_font: str) -> Base14Metrics | None:
    name = base14_name(base_font)
    return Base14Metrics(name) if name is not None else None


class FallbackMetrics(FontMetrics):
    """Bundled metrics-only font for scripts the base fonts cannot cover.

    East-Asian wide and fullwidth characters advance a full em, everything
    else a half em.  Covers the whole BMP, so any output text is measurable
    even with no user font configured.
    """

    name = "Metrics-Fallback"
    ascent = 800
    descent = -200

    def has_char(self, ch: str) -> bool:
        return ord(ch) <= 0xFFFF

    def width(self, ch: str) -> int:
        if unicodedata.east_asian_width(ch) in ("W", "F"):
            return 1000
        return 500


class TrueTypeMetrics(FontMetrics):
    """Metrics read from a parsed TrueType font, scaled to per-mille."""

    def __init__(self, font: TrueTypeFont):
        self.font = font
        self.name = font.name or "TrueType"
        scale = 1000.0 / font.units_per_em
        self.ascent = int(round(font.ascent * scale))
        self.descent = int(round(font.descent * scale))

    def has_char(self, ch: str) -> bool:
        return self.font.glyph_id(ord(ch)) is not None

    def width(self, ch: str) -> int:
        gid = self.font.glyph_id(ord(ch))
        if gid is None:
            return DEFAULT_WIDTH
        return self.font.advance_permille(gid)
