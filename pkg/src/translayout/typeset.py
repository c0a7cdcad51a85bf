"""Fitting translated text into source boxes via iterative scale search.

The search starts at scale 1.0 and walks down a fixed grid (default step
0.05) until the text fits its box or the lower bound is reached.  Scaling
is uniform: glyph size and line height both shrink with the factor.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidConfig
from .fonts.metrics import FontMetrics
from .geometry import Box
from .ir import Placeholder
from .mask import TypesetUnit

EPS = 1e-6


@dataclass(slots=True)
class TypesetConfig:
    step: float = 0.05
    min_gamma: float = 0.6
    line_factor: float = 1.2

    def validate(self) -> None:
        if self.step <= 0:
            raise InvalidConfig(f"scale step must be positive, got {self.step}")
        if not 0 < self.min_gamma <= 1:
            raise InvalidConfig(f"scale floor must be in (0, 1], got {self.min_gamma}")
        if self.line_factor <= 0:
            raise InvalidConfig(f"line factor must be positive, got {self.line_factor}")


class FitStatus(Enum):
    FIT = "Fit"
    OVERFLOW_AT_MIN = "OverflowAtMin"


class Overflow:
    """Sentinel result of a single layout attempt that did not fit."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Overflow"


OVERFLOW = Overflow()


@dataclass(slots=True)
class Token:
    kind: str  # "word" | "space" | "restore"
    text: str = ""
    base_width: float = 0.0  # at scale 1.0
    ascent: float = 0.0  # at scale 1.0, signed points
    descent: float = 0.0
    placeholder: Placeholder | None = None
    char_widths: list[float] = field(default_factory=list)  # words only, scale 1.0


@dataclass(slots=True)
class Line:
    tokens: list[Token] = field(default_factory=list)
    width: float = 0.0  # at the layout's scale

    def ascent(self, gamma: float) -> float:
        return max((t.ascent * gamma for t in self.tokens), default=0.0)

    def descent(self, gamma: float) -> float:
        return min((t.descent * gamma for t in self.tokens), default=0.0)


@dataclass(slots=True)
class Lines:
    lines: list[Line] = field(default_factory=list)
    gamma: float = 1.0
    base_size: float = 10.0
    line_height: float = 12.0  # at the layout's scale
    height: float = 0.0

    def occupied(self) -> float:
        if not self.lines:
            return 0.0
        return (
            self.lines[0].ascent(self.gamma)
            + self.line_height * (len(self.lines) - 1)
            - self.lines[-1].descent(self.gamma)
        )


@dataclass(slots=True)
class ScalingResult:
    gamma: float
    iterations: int
    status: FitStatus
    lines: Lines | None = None


def _is_cjk(ch: str) -> bool:
    return unicodedata.east_asian_width(ch) in ("W", "F")


def tokenize(
    units: list[TypesetUnit], metrics: FontMetrics, base_size: float
) -> list[Token]:
    """Break typeset units into breakable tokens measured at scale 1.0."""
    glyph_asc = metrics.ascent / 1000.0 * base_size
    glyph_desc = metrics.descent / 1000.0 * base_size
    space_w = metrics.width(" ") / 1000.0 * base_size
    tokens: list[Token] = []

    def word_token(text: str) -> Token:
        widths = [metrics.width(ch) / 1000.0 * base_size for ch in text]
        return Token(
            kind="word",
            text=text,
            base_width=sum(widths),
            ascent=glyph_asc,
            descent=glyph_desc,
            char_widths=widths,
        )

    for unit in units:
        if unit.kind == "restore":
            ph = unit.placeholder
            record = ph.restore if ph is not None else None
            if record is not None and record.anchor.width > 0:
                width = record.anchor.width
                asc = record.anchor.y2 - record.baseline_y
                desc = record.anchor.y - record.baseline_y
            else:
                width = 0.0
                asc, desc = glyph_asc, glyph_desc
            tokens.append(
                Token(kind="restore", base_width=width, ascent=asc, descent=desc, placeholder=ph)
            )
            continue
        current = ""
        for ch in unit.text:
            if ch.isspace():
                if current:
                    tokens.append(word_token(current))
                    current = ""
                tokens.append(
                    Token(kind="space", text=" ", base_width=space_w,
                          ascent=glyph_asc, descent=glyph_desc)
                )
            elif _is_cjk(ch):
                if current:
                    tokens.append(word_token(current))
                    current = ""
                tokens.append(word_token(ch))
            else:
                current += ch
        if current:
            tokens.append(word_token(current))
    return tokens


@dataclass(slots=True)
class _BrokenLine:
    line: Line
    next_index: int  # first unconsumed token index after this line
    carry: Token | None  # remainder of a character-split word, if any


def _split_word(token: Token, width_budget: float, gamma: float) -> tuple[Token | None, Token | None]:
    """Split a word token to fill ``width_budget``; returns (head, remainder)."""
    piece = ""
    piece_widths: list[float] = []
    acc = 0.0
    for ch, cw in zip(token.text, token.char_widths):
        if piece and acc + cw * gamma > width_budget + EPS:
            break
        piece += ch
        piece_widths.append(cw)
        acc += cw * gamma
    if not piece:
        return None, token
    if len(piece) == len(token.text):
        return token, None
    head = Token(kind="word", text=piece, base_width=sum(piece_widths),
                 ascent=token.ascent, descent=token.descent, char_widths=piece_widths)
    rest_widths = token.char_widths[len(piece):]
    rest = Token(kind="word", text=token.text[len(piece):], base_width=sum(rest_widths),
                 ascent=token.ascent, descent=token.descent, char_widths=rest_widths)
    return head, rest


def _break_stream(
    tokens: list[Token], max_w: float, gamma: float
) -> tuple[list[_BrokenLine], bool]:
    """Greedy line breaking of the whole stream against one width.

    Returns the broken lines (with resume positions for multi-box flows)
    and whether an atomic unit was wider than the line.
    """
    lines: list[_BrokenLine] = []
    current = Line()
    atomic_overflow = False
    i = 0
    carry: Token | None = None

    def close(next_index: int, next_carry: Token | None) -> None:
        nonlocal current
        while current.tokens and current.tokens[-1].kind == "space":
            trailing = current.tokens.pop()
            current.width -= trailing.base_width * gamma
        lines.append(_BrokenLine(line=current, next_index=next_index, carry=next_carry))
        current = Line()

    while carry is not None or i < len(tokens):
        token = carry if carry is not None else tokens[i]
        from_carry = carry is not None
        carry = None
        w = token.base_width * gamma
        if token.kind == "space":
            if current.tokens:
                current.tokens.append(token)
                current.width += w
            i += 1
            continue
        if token.kind == "restore" and w > max_w + EPS:
            atomic_overflow = True
        if current.tokens and current.width + w > max_w + EPS:
            if token.kind == "word" and token.char_widths:
                head, rest = _split_word(token, max_w - current.width, gamma)
                if head is not None and rest is not None and current.width + head.base_width * gamma <= max_w + EPS:
                    # Only split mid-line when the word alone cannot fit a line.
                    if token.base_width * gamma > max_w + EPS:
                        current.tokens.append(head)
                        current.width += head.base_width * gamma
                        close(i if from_carry else i + 1, rest)
                        carry = rest
                        if not from_carry:
                            i += 1
                        continue
            close(i, token if from_carry else None)
            carry = token if from_carry else None
            continue
        if token.kind == "word" and w > max_w + EPS and not current.tokens:
            head, rest = _split_word(token, max_w, gamma)
            if head is None:
                head, rest = token, None  # a single glyph wider than the box
            current.tokens.append(head)
            current.width += head.base_width * gamma
            if rest is not None:
                close(i if from_carry else i + 1, rest)
                carry = rest
                if not from_carry:
                    i += 1
                continue
            if not from_carry:
                i += 1
            continue
        current.tokens.append(token)
        current.width += w
        if not from_carry:
            i += 1
    if current.tokens:
        close(len(tokens), None)
    return lines, atomic_overflow


def layout_lines(
    units: list[TypesetUnit] | list[Token],
    box: Box,
    gamma: float,
    font_metrics: FontMetrics | None = None,
    cfg: TypesetConfig | None = None,
    base_size: float = 10.0,
) -> Lines | Overflow:
    """Greedy line breaking at one scale; Overflow is a value, not an error.

    Words break at spaces (per character for unspaced scripts); a word wider
    than the box splits at character boundaries; an atomic restored unit
    wider than the box overflows outright; total occupied height beyond the
    box height overflows.
    """
    cfg = cfg or TypesetConfig()
    if gamma <= 0:
        raise InvalidConfig(f"scale must be positive, got {gamma}")
    if units and isinstance(units[0], TypesetUnit):
        if font_metrics is None:
            from .fonts.metrics import FallbackMetrics

            font_metrics = FallbackMetrics()
        tokens = tokenize(units, font_metrics, base_size)
    else:
        tokens = list(units)

    broken, atomic_overflow = _break_stream(tokens, box.width, gamma)
    if atomic_overflow:
        return OVERFLOW
    result = Lines(
        lines=[b.line for b in broken],
        gamma=gamma,
        base_size=base_size,
        line_height=cfg.line_factor * base_size * gamma,
    )
    result.height = result.occupied()
    if result.height > box.height + EPS:
        return OVERFLOW
    for line in result.lines:
        if line.width > box.width + EPS:
            return OVERFLOW
    return result


def gamma_grid(cfg: TypesetConfig) -> list[float]:
    """Descending scale candidates: 1.0 - k*step, clamped at the floor."""
    out: list[float] = []
    k = 0
    while True:
        gamma = round(1.0 - k * cfg.step, 9)
        if gamma <= cfg.min_gamma:
            out.append(cfg.min_gamma)
            break
        out.append(gamma)
        k += 1
    return out


def fit_paragraph(
    paragraph_units: list[TypesetUnit],
    box: Box,
    cfg: TypesetConfig | None = None,
    font_metrics: FontMetrics | None = None,
    base_size: float = 10.0,
) -> ScalingResult:
    """Find the largest grid scale whose layout fits the box.

    Walks 1.0, 1.0 - step, ... stopping at the first fit; at the floor the
    status turns OverflowAtMin and the floor layout is returned anyway so a
    caller can render-and-clip.
    """
    cfg = cfg or TypesetConfig()
    cfg.validate()
    if font_metrics is None:
        from .fonts.metrics import FallbackMetrics

        font_metrics = FallbackMetrics()
    tokens = tokenize(paragraph_units, font_metrics, base_size)
    iterations = 0
    gamma = 1.0
    for gamma in gamma_grid(cfg):
        iterations += 1
        outcome = layout_lines(tokens, box, gamma, font_metrics, cfg, base_size)
        if outcome is not OVERFLOW:
            return ScalingResult(gamma=gamma, iterations=iterations, status=FitStatus.FIT,
                                 lines=outcome)
    broken, _ = _break_stream(tokens, box.width, gamma)
    floor_lines = Lines(
        lines=[b.line for b in broken],
        gamma=gamma,
        base_size=base_size,
        line_height=cfg.line_factor * base_size * gamma,
    )
    floor_lines.height = floor_lines.occupied()
    return ScalingResult(
        gamma=gamma, iterations=iterations, status=FitStatus.OVERFLOW_AT_MIN, lines=floor_lines
    )


# ---------------------------------------------------------------------------
# Placement
# ---------------------------------------------------------------------------


@dataclass(slots=True)
class PlacedRun:
    """A text run or restored fragment anchored at a device-space baseline."""

    kind: str  # "text" | "restore"
    text: str
    x: float
    baseline: float
    size: float  # effective glyph size (base * gamma); 0 for restore runs
    gamma: float
    placeholder: Placeholder | None = None


def place_glyphs(lines: Lines, box: Box, font_metrics: FontMetrics | None = None) -> list[PlacedRun]:
    """Anchor laid-out lines inside the box: left-aligned, top-down.

    The first baseline sits one line-ascent below the box top; each later
    baseline descends by the line height.
    """
    runs: list[PlacedRun] = []
    if not lines.lines:
        return runs
    gamma = lines.gamma
    size = lines.base_size * gamma
    baseline = box.y2 - lines.lines[0].ascent(gamma)
    for line in lines.lines:
        x = box.x
        text_buf = ""
        text_x = x
        for token in line.tokens:
            if token.kind == "restore":
                if text_buf:
                    runs.append(PlacedRun("text", text_buf, text_x, baseline, size, gamma))
                    text_buf = ""
                runs.append(
                    PlacedRun("restore", "", x, baseline, 0.0, gamma, placeholder=token.placeholder)
                )
                x += token.base_width * gamma
                text_x = x
            else:
                if not text_buf:
                    text_x = x
                text_buf += token.text
                x += token.base_width * gamma
        if text_buf:
            runs.append(PlacedRun("text", text_buf, text_x, baseline, size, gamma))
        baseline -= lines.line_height
    return runs


# ---------------------------------------------------------------------------
# Multi-box flow for stitched paragraphs
# ---------------------------------------------------------------------------


def _take_lines(broken: list[_BrokenLine], box: Box, gamma: float, line_height: float) -> int:
    """How many leading broken lines fit the box height."""
    count = 0
    occupied = 0.0
    for i, b in enumerate(broken):
        if i == 0:
            occupied = b.line.ascent(gamma) - b.line.descent(gamma)
        else:
            prev_desc = -broken[i - 1].line.descent(gamma)
            occupied += line_height - prev_desc - b.line.descent(gamma)
        if occupied > box.height + EPS:
            break
        count = i + 1
    return count


def fit_across(
    units: list[TypesetUnit],
    boxes: list[Box],
    cfg: TypesetConfig | None = None,
    font_metrics: FontMetrics | None = None,
    base_size: float = 10.0,
) -> tuple[ScalingResult, list[Lines]]:
    """Fit one translation unit across several boxes (stitched paragraphs).

    Each box is filled to its line capacity at the candidate scale before
    overflowing into the next, so the split lands at a word (or split-word
    character) boundary proportional to box capacity.
    """
    cfg = cfg or TypesetConfig()
    cfg.validate()
    if font_metrics is None:
        from .fonts.metrics import FallbackMetrics

        font_metrics = FallbackMetrics()
    if len(boxes) == 1:
        result = fit_paragraph(units, boxes[0], cfg, font_metrics, base_size)
        return result, [result.lines] if result.lines is not None else []
    tokens = tokenize(units, font_metrics, base_size)
    iterations = 0
    gamma = 1.0
    for gamma in gamma_grid(cfg):
        iterations += 1
        per_box = _flow_boxes(tokens, boxes, gamma, cfg, base_size)
        if per_box is not None:
            return (
                ScalingResult(gamma=gamma, iterations=iterations, status=FitStatus.FIT,
                              lines=per_box[0]),
                per_box,
            )
    per_box = _flow_boxes(tokens, boxes, gamma, cfg, base_size, forced=True)
    return (
        ScalingResult(gamma=gamma, iterations=iterations,
                      status=FitStatus.OVERFLOW_AT_MIN, lines=per_box[0]),
        per_box,
    )


def _flow_boxes(
    tokens: list[Token],
    boxes: list[Box],
    gamma: float,
    cfg: TypesetConfig,
    base_size: float,
    forced: bool = False,
) -> list[Lines] | None:
    remaining = list(tokens)
    out: list[Lines] = []
    line_height_of = lambda: cfg.line_factor * base_size * gamma  # noqa: E731
    for bi, box in enumerate(boxes):
        if not remaining:
            out.append(Lines(gamma=gamma, base_size=base_size, line_height=line_height_of()))
            continue
        broken, atomic_overflow = _break_stream(remaining, box.width, gamma)
        if atomic_overflow and not forced:
            return None
        last_box = bi == len(boxes) - 1
        take = _take_lines(broken, box, gamma, line_height_of())
        if last_box and take < len(broken) and not forced:
            return None
        if forced and last_box:
            take = len(broken)
        kept = Lines(
            lines=[b.line for b in broken[:take]],
            gamma=gamma,
            base_size=base_size,
            line_height=line_height_of(),
        )
        kept.height = kept.occupied()
        out.append(kept)
        if take >= len(broken):
            remaining = []
        else:
            boundary = broken[take - 1] if take > 0 else None
            if boundary is None:
                remaining = remaining  # nothing fit; push everything onward
            else:
                rest = remaining[boundary.next_index:]
                if boundary.carry is not None:
                    rest = [boundary.carry] + rest
                remaining = rest
            if take == 0 and not forced and bi == 0 and len(broken) > 0:
                # First box cannot hold even one line at this scale.
                return None
    if remaining and not forced:
        return None
    return out
