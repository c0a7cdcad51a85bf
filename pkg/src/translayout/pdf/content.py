"""Content-stream interpretation: graphics state, text, paths, nesting.

Walks the operator stream of a page (and any Form XObjects it invokes),
tracking the CTM, clipping chain, and text state, and emits positioned
characters plus pass-through drawing segments into a :class:`PageIR`.
"""

from __future__ import annotations

import base64
from dataclasses import dataclass, field, replace

from ..errors import (
    CyclicXObject,
    DepthExceeded,
    MalformedStream,
    UnsupportedOperator,
)
from ..geometry import Box, Matrix, compose_matrix
from ..ir import (
    CharRecord,
    ClipRecord,
    Color,
    FontRecord,
    GraphicsState,
    PageIR,
    PassthroughOp,
)
from .fonts import LoadedFont, load_font
from .objects import ObjectParser, PdfName, PdfStream

SUPPORTED_OPERATORS = frozenset(
    """BT ET Tf Td TD Tm T* TL Tc Tw Tz Ts Tj TJ ' " q Q cm Do W W*
       re m l c h n f f* S B gs rg RG g G k K cs CS sc SC scn SCN""".split()
)


def char_box(
    code: int,
    font: FontRecord,
    state: GraphicsState,
    pen: tuple[float, float] = (0.0, 0.0),
    horizontal_scale: float | None = None,
) -> tuple[Box, float, float]:
    """Device-space cell of one glyph drawn at ``pen`` under ``state``.

    ``pen`` is the baseline-left origin in the (pre-CTM) text space.  Returns
    the box, the device baseline y, and the effective (post-CTM) size.
    Glyphs without a recorded width fall back to 500/1000 em; callers that
    care record the warning themselves.
    """
    size = state.font_size
    th = (state.horizontal_scale if horizontal_scale is None else horizontal_scale) / 100.0
    width = font.widths.get(code, 500) if font is not None else 500
    advance = width / 1000.0 * size * th
    ctm = state.ctm
    x0, y0 = pen
    corners = [
        ctm.apply(x0, y0 + font.descent / 1000.0 * size),
        ctm.apply(x0 + advance, y0 + font.descent / 1000.0 * size),
        ctm.apply(x0, y0 + font.ascent / 1000.0 * size),
        ctm.apply(x0 + advance, y0 + font.ascent / 1000.0 * size),
    ]
    box = Box.bounding(corners)
    baseline_y = ctm.apply(x0, y0)[1]
    effective_size = size * ctm.vertical_scale()
    return box, baseline_y, effective_size


@dataclass
class NestedContext:
    """Stacks guarding nested-object expansion."""

    xobject_stack: list = field(default_factory=list)
    state_stack: list = field(default_factory=list)
    depth_limit: int = 16


@dataclass
class _TextState:
    font: LoadedFont | None = None
    font_id: str | None = None
    size: float = 0.0
    char_spacing: float = 0.0
    word_spacing: float = 0.0
    horizontal_scale: float = 100.0
    leading: float = 0.0
    rise: float = 0.0


@dataclass
class _GState:
    ctm: Matrix = field(default_factory=Matrix.identity)
    clip_id: int | None = None
    fill_color: Color = Color.gray()
    stroke_color: Color = Color.gray()
    fill_space: str = "gray"
    stroke_space: str = "gray"
    text: _TextState = field(default_factory=_TextState)

    def copy(self) -> _GState:
        return _GState(
            ctm=self.ctm,
            clip_id=self.clip_id,
            fill_color=self.fill_color,
            stroke_color=self.stroke_color,
            fill_space=self.fill_space,
            stroke_space=self.stroke_space,
            text=replace(self.text),
        )


class DocumentTables:
    """Document-wide font/state/clip registries shared across pages."""

    def __init__(self):
        self.fonts: dict[str, FontRecord] = {}
        self.loaded_fonts: dict[object, tuple[str, LoadedFont]] = {}
        self.states: dict[int, GraphicsState] = {}
        self.clips: dict[int, ClipRecord] = {}
        self._state_ids: dict[tuple, int] = {}

    def intern_state(self, gs: _GState) -> int:
        key = (
            gs.ctm.coefficients(),
            gs.clip_id,
            gs.text.font_id,
            gs.text.size,
            gs.text.char_spacing,
            gs.text.word_spacing,
            gs.text.horizontal_scale,
            gs.text.leading,
            gs.text.rise,
            gs.fill_color,
            gs.stroke_color,
        )
        if key in self._state_ids:
            return self._state_ids[key]
        sid = len(self.states) + 1
        self._state_ids[key] = sid
        self.states[sid] = GraphicsState(
            id=sid,
            ctm=gs.ctm,
            clip_id=gs.clip_id,
            font_id=gs.text.font_id,
            font_size=gs.text.size,
            char_spacing=gs.text.char_spacing,
            word_spacing=gs.text.word_spacing,
            horizontal_scale=gs.text.horizontal_scale,
            leading=gs.text.leading,
            text_rise=gs.text.rise,
            fill_color=gs.fill_color,
            stroke_color=gs.stroke_color,
        )
        return sid

    def add_clip(self, parent: int | None, even_odd: bool, ops: tuple) -> int:
        cid = len(self.clips) + 1
        self.clips[cid] = ClipRecord(id=cid, parent=parent, even_odd=even_odd, ops=ops)
        return cid


class PageInterpreter:
    def __init__(self, doc, tables: DocumentTables, lenient: bool = False, warn=None):
        self.doc = doc
        self.tables = tables
        self.lenient = lenient
        self._warn_sink = warn or (lambda msg: None)
        self._warned: set[tuple] = set()

    def warn(self, message: str) -> None:
        self._warn_sink(message)

    def fail(self, exc: Exception) -> None:
        """Raise in strict mode, warn in lenient mode."""
        if self.lenient:
            self.warn(str(exc))
        else:
            raise exc

    # -- fonts -----------------------------------------------------------------

    def _font_for(self, resources: dict, name: str) -> tuple[str, LoadedFont] | None:
        fonts = self.doc.resolve(resources.get("Font")) or {}
        raw = fonts.get(name)
        if raw is None:
            self.fail(MalformedStream(0, f"font resource /{name} not found"))
            return None
        key = raw if isinstance(raw, (int, str)) else getattr(raw, "num", None)
        if key is None:
            key = id(raw)
        if key in self.tables.loaded_fonts:
            return self.tables.loaded_fonts[key]
        font_dict = self.doc.resolve(raw)
        if not isinstance(font_dict, dict):
            self.fail(MalformedStream(0, f"font resource /{name} is not a dictionary"))
            return None
        loaded = load_font(self.doc, font_dict, self.warn)
        font_id = f"F{len(self.tables.loaded_fonts) + 1}"
        loaded.font_id = font_id
        self.tables.loaded_fonts[key] = (font_id, loaded)
        self.tables.fonts[font_id] = FontRecord(
            font_id=font_id,
            name=loaded.name,
            ascent=loaded.ascent,
            descent=loaded.descent,
            widths={},
            embedded=loaded.embedded,
        )
        return font_id, loaded

    # -- page entry point --------------------------------------------------------

    def interpret_page(
        self,
        page_objects: dict,
        resources: dict | None = None,
        context: NestedContext | None = None,
        page_number: int = 0,
    ) -> PageIR:
        mb = self.doc.media_box(page_objects)
        page = PageIR(page_number=page_number, media_box=Box(*mb))
        self._page = page
        self._char_order = 0
        self._op_seq = 0
        self._page_fonts: list[str] = []
        context = context or NestedContext()
        resources = resources if resources is not None else (
            self.doc.resolve(page_objects.get("Resources")) or {}
        )
        content = self.doc.content_bytes(page_objects)
        gs = _GState()
        base_depth = len(context.state_stack)
        self._execute(content, resources, gs, context)
        if len(context.state_stack) != base_depth:
            self.fail(MalformedStream(len(content), "unbalanced q/Q at end of page"))
            del context.state_stack[base_depth:]
        page.pdf_font = self._page_fonts
        return page

    # -- operator loop ---------------------------------------------------------

    def _execute(self, content: bytes, resources: dict, gs: _GState, context: NestedContext) -> None:
        parser = ObjectParser(content, 0, allow_refs=False)
        lex = parser.lex
        operands: list = []
        in_text = False
        tm = Matrix.identity()
        tlm = Matrix.identity()
        path: list[tuple] = []
        pending_clip: str | None = None

        def num(i: int, default: float = 0.0) -> float:
            if i >= len(operands) or not isinstance(operands[i], (int, float)):
                return default
            return float(operands[i])

        def set_color(which: str, space: str, comps: tuple) -> None:
            color = Color(space, tuple(float(c) for c in comps))
            if which == "fill":
                gs.fill_color = color
            else:
                gs.stroke_color = color

        def show_string(raw: bytes) -> None:
            nonlocal tm
            ts = gs.text
            if ts.font is None:
                self.fail(MalformedStream(lex.pos, "text shown with no font selected"))
                return
            if not in_text:
                self.warn("text-showing operator outside BT/ET")
            record = self.tables.fonts[ts.font_id]
            th = ts.horizontal_scale / 100.0
            for code in ts.font.codes(raw):
                width = ts.font.width_for(code)
                if code in ts.font.missing_widths and (ts.font_id, code) not in self._warned:
                    self._warned.add((ts.font_id, code))
                    self.warn(f"font {ts.font.name}: missing width for code {code}")
                record.widths.setdefault(code, width)
                text = ts.font.unicode_for(code)
                if code in ts.font.missing_unicode and (ts.font_id, -code) not in self._warned:
                    self._warned.add((ts.font_id, -code))
                    self.warn(f"font {ts.font.name}: no unicode mapping for code {code}")
                combined = compose_matrix(tm, gs.ctm)
                snapshot = GraphicsState(
                    id=0,
                    ctm=combined,
                    font_size=ts.size,
                    horizontal_scale=ts.horizontal_scale,
                )
                box, baseline_y, eff_size = char_box(
                    code, record, snapshot, pen=(0.0, ts.rise)
                )
                word_sp = ts.word_spacing if ts.font.is_word_space(code) else 0.0
                advance = (width / 1000.0 * ts.size + ts.char_spacing + word_sp) * th
                self._char_order += 1
                state_id = self.tables.intern_state(gs)
                self._page.pdf_character.append(
                    CharRecord(
                        char_unicode=text,
                        font_id=ts.font_id,
                        font_size=eff_size,
                        box=box,
                        render_order=self._char_order,
                        baseline_y=baseline_y,
                        state_id=state_id,
                    )
                )
                tm = compose_matrix(Matrix.translation(advance, 0.0), tm)

        def next_line(tx: float, ty: float) -> None:
            nonlocal tm, tlm
            tlm = compose_matrix(Matrix.translation(tx, ty), tlm)
            tm = tlm

        def device_path() -> tuple[tuple, ...]:
            out = []
            for op in path:
                kind = op[0]
                if kind in ("m", "l"):
                    out.append((kind, *gs.ctm.apply(op[1], op[2])))
                elif kind == "c":
                    pts = []
                    for i in (1, 3, 5):
                        pts.extend(gs.ctm.apply(op[i], op[i + 1]))
                    out.append(("c", *pts))
                elif kind == "re":
                    x, y, w, h = op[1:]
                    corners = [(x, y), (x + w, y), (x + w, y + h), (x, y)]
                    out.append(("m", *gs.ctm.apply(*corners[0])))
                    for cx, cy in corners[1:3]:
                        out.append(("l", *gs.ctm.apply(cx, cy)))
                    out.append(("l", *gs.ctm.apply(x, y + h)))
                    out.append(("h",))
                else:
                    out.append(("h",))
            return tuple(out)

        def path_box() -> Box | None:
            pts = []
            for op in path:
                kind = op[0]
                if kind in ("m", "l"):
                    pts.append(gs.ctm.apply(op[1], op[2]))
                elif kind == "c":
                    for i in (1, 3, 5):
                        pts.append(gs.ctm.apply(op[i], op[i + 1]))
                elif kind == "re":
                    x, y, w, h = op[1:]
                    for cx, cy in ((x, y), (x + w, y), (x + w, y + h), (x, y + h)):
                        pts.append(gs.ctm.apply(cx, cy))
            if not pts:
                return None
            return Box.bounding(pts)

        def end_path(paint: str) -> None:
            nonlocal path, pending_clip
            box = path_box()
            if paint != "n" and box is not None:
                self._op_seq += 1
                self._page.passthrough_ops.append(
                    PassthroughOp(
                        kind="path",
                        seq=self._op_seq,
                        state_id=self.tables.intern_state(gs),
                        char_anchor=self._char_order,
                        box=box,
                        ops=tuple(path),
                        paint=paint,
                    )
                )
            if pending_clip is not None:
                if path:
                    gs.clip_id = self.tables.add_clip(
                        gs.clip_id, pending_clip == "eo", device_path()
                    )
                pending_clip = None
            path = []

        while True:
            lex.skip_ws()
            if lex.at_end():
                break
            b = lex.peek_byte()
            offset = lex.pos
            if b == 0x2F or b == 0x28 or b == 0x3C or b == 0x5B or b in b"+-.0123456789":
                try:
                    operands.append(parser.parse_object())
                except MalformedStream as exc:
                    self.fail(exc)
                    break
                continue
            word = lex.read_regular_run().decode("latin-1")
            if not word:
                self.fail(MalformedStream(offset, f"stray delimiter {chr(b)!r}"))
                lex.pos = offset + 1
                operands = []
                continue
            if word in ("true", "false", "null"):
                operands.append(word == "true")
                continue
            op = word
            if op not in SUPPORTED_OPERATORS:
                self.fail(UnsupportedOperator(op, offset))
                operands = []
                continue

            if op == "q":
                context.state_stack.append(gs.copy())
            elif op == "Q":
                if not context.state_stack:
                    self.fail(MalformedStream(offset, "Q with empty state stack"))
                else:
                    restored = context.state_stack.pop()
                    gs.ctm = restored.ctm
                    gs.clip_id = restored.clip_id
                    gs.fill_color = restored.fill_color
                    gs.stroke_color = restored.stroke_color
                    gs.fill_space = restored.fill_space
                    gs.stroke_space = restored.stroke_space
                    gs.text = restored.text
            elif op == "cm":
                gs.ctm = compose_matrix(
                    Matrix(num(0), num(1), num(2), num(3), num(4), num(5)), gs.ctm
                )
            elif op == "gs":
                self.warn("extended graphics state (gs) ignored")
            elif op == "BT":
                in_text = True
                tm = Matrix.identity()
                tlm = Matrix.identity()
            elif op == "ET":
                in_text = False
            elif op == "Tf":
                name = operands[0] if operands and isinstance(operands[0], str) else None
                size = num(1)
                if name is not None:
                    got = self._font_for(resources, str(name))
                    if got is not None:
                        gs.text.font_id, gs.text.font = got
                        if got[0] not in self._page_fonts:
                            self._page_fonts.append(got[0])
                gs.text.size = size
            elif op == "Td":
                next_line(num(0), num(1))
            elif op == "TD":
                gs.text.leading = -num(1)
                next_line(num(0), num(1))
            elif op == "Tm":
                tlm = Matrix(num(0), num(1), num(2), num(3), num(4), num(5))
                tm = tlm
            elif op == "T*":
                next_line(0.0, -gs.text.leading)
            elif op == "TL":
                gs.text.leading = num(0)
            elif op == "Tc":
                gs.text.char_spacing = num(0)
            elif op == "Tw":
                gs.text.word_spacing = num(0)
            elif op == "Tz":
                gs.text.horizontal_scale = num(0, 100.0)
            elif op == "Ts":
                gs.text.rise = num(0)
            elif op == "Tj":
                if operands and isinstance(operands[0], bytes):
                    show_string(operands[0])
            elif op == "'":
                next_line(0.0, -gs.text.leading)
                if operands and isinstance(operands[-1], bytes):
                    show_string(operands[-1])
            elif op == '"':
                gs.text.word_spacing = num(0)
                gs.text.char_spacing = num(1)
                next_line(0.0, -gs.text.leading)
                if len(operands) > 2 and isinstance(operands[2], bytes):
                    show_string(operands[2])
            elif op == "TJ":
                if operands and isinstance(operands[0], list):
                    th = gs.text.horizontal_scale / 100.0
                    for item in operands[0]:
                        if isinstance(item, bytes):
                            show_string(item)
                        elif isinstance(item, (int, float)):
                            shift = -float(item) / 1000.0 * gs.text.size * th
                            tm = compose_matrix(Matrix.translation(shift, 0.0), tm)
            elif op == "m":
                path.append(("m", num(0), num(1)))
            elif op == "l":
                path.append(("l", num(0), num(1)))
            elif op == "c":
                path.append(("c", num(0), num(1), num(2), num(3), num(4), num(5)))
            elif op == "re":
                path.append(("re", num(0), num(1), num(2), num(3)))
            elif op == "h":
                path.append(("h",))
            elif op in ("f", "f*", "S", "B", "n"):
                end_path(op)
            elif op in ("W", "W*"):
                pending_clip = "eo" if op == "W*" else "nz"
            elif op == "rg":
                set_color("fill", "rgb", (num(0), num(1), num(2)))
            elif op == "RG":
                set_color("stroke", "rgb", (num(0), num(1), num(2)))
            elif op == "g":
                set_color("fill", "gray", (num(0),))
            elif op == "G":
                set_color("stroke", "gray", (num(0),))
            elif op == "k":
                set_color("fill", "cmyk", (num(0), num(1), num(2), num(3)))
            elif op == "K":
                set_color("stroke", "cmyk", (num(0), num(1), num(2), num(3)))
            elif op == "cs":
                gs.fill_space = str(operands[0]) if operands else "gray"
            elif op == "CS":
                gs.stroke_space = str(operands[0]) if operands else "gray"
            elif op in ("sc", "scn", "SC", "SCN"):
                comps = [v for v in operands if isinstance(v, (int, float))]
                space = {1: "gray", 3: "rgb", 4: "cmyk"}.get(len(comps))
                if space is None:
                    self.warn(f"color operator {op} with pattern operands approximated as gray")
                    space, comps = "gray", [0.0]
                set_color("fill" if op in ("sc", "scn") else "stroke", space, tuple(comps))
            elif op == "Do":
                self._do_xobject(operands, resources, gs, context, offset)
            operands = []

        if in_text:
            self.fail(MalformedStream(len(content), "unterminated BT text object"))
        if path:
            self.warn("path constructed but never painted")

    # -- XObjects ----------------------------------------------------------------

    def _do_xobject(self, operands, resources: dict, gs: _GState, context: NestedContext, offset: int) -> None:
        if not operands or not isinstance(operands[0], str):
            self.fail(MalformedStream(offset, "Do without a name operand"))
            return
        name = str(operands[0])
        xobjects = self.doc.resolve(resources.get("XObject")) or {}
        raw = xobjects.get(name)
        if raw is None:
            self.fail(MalformedStream(offset, f"XObject /{name} not found"))
            return
        key = getattr(raw, "num", None)
        if key is None:
            key = id(raw)
        stream = self.doc.resolve(raw)
        if not isinstance(stream, PdfStream):
            self.fail(MalformedStream(offset, f"XObject /{name} is not a stream"))
            return
        subtype = self.doc.resolve(stream.dict.get("Subtype"))
        if subtype == "Image":
            self._emit_image(name, stream, gs)
            return
        if subtype != "Form":
            self.fail(UnsupportedOperator(f"Do /{name} ({subtype})", offset))
            return
        if key in context.xobject_stack:
            raise CyclicXObject(name)
        if len(context.xobject_stack) >= context.depth_limit:
            raise DepthExceeded(context.depth_limit)

        saved = gs.copy()
        depth = len(context.state_stack)
        context.state_stack.append(saved)
        context.xobject_stack.append(key)
        try:
            matrix = self.doc.resolve(stream.dict.get("Matrix"))
            if isinstance(matrix, list) and len(matrix) == 6:
                gs.ctm = compose_matrix(Matrix(*[float(self.doc.resolve(v)) for v in matrix]), gs.ctm)
            bbox = self.doc.resolve(stream.dict.get("BBox"))
            if isinstance(bbox, list) and len(bbox) == 4:
                x1, y1, x2, y2 = [float(self.doc.resolve(v)) for v in bbox]
                corners = [
                    gs.ctm.apply(min(x1, x2), min(y1, y2)),
                    gs.ctm.apply(max(x1, x2), min(y1, y2)),
                    gs.ctm.apply(max(x1, x2), max(y1, y2)),
                    gs.ctm.apply(min(x1, x2), max(y1, y2)),
                ]
                ops = (
                    ("m", *corners[0]),
                    ("l", *corners[1]),
                    ("l", *corners[2]),
                    ("l", *corners[3]),
                    ("h",),
                )
                gs.clip_id = self.tables.add_clip(gs.clip_id, False, ops)
            form_res = self.doc.resolve(stream.dict.get("Resources"))
            merged = dict(resources)
            if isinstance(form_res, dict):
                merged.update(form_res)
            content = self.doc.decode_stream(stream)
            self._execute(content, merged, gs, context)
            if len(context.state_stack) != depth + 1:
                self.fail(MalformedStream(offset, f"unbalanced q/Q inside form /{name}"))
        finally:
            context.xobject_stack.pop()
            del context.state_stack[depth:]
            gs.ctm = saved.ctm
            gs.clip_id = saved.clip_id
            gs.fill_color = saved.fill_color
            gs.stroke_color = saved.stroke_color
            gs.fill_space = saved.fill_space
            gs.stroke_space = saved.stroke_space
            gs.text = saved.text

    def _emit_image(self, name: str, stream: PdfStream, gs: _GState) -> None:
        resolve = self.doc.resolve
        width = int(resolve(stream.dict.get("Width", 0)) or 0)
        height = int(resolve(stream.dict.get("Height", 0)) or 0)
        cspace = resolve(stream.dict.get("ColorSpace"))
        if isinstance(cspace, list):
            cspace = cspace[0] if cspace else None
            cspace = resolve(cspace)
        bits = int(resolve(stream.dict.get("BitsPerComponent", 8)) or 8)
        filt = resolve(stream.dict.get("Filter"))
        if isinstance(filt, list):
            filt = filt[0] if filt else None
        corners = [
            gs.ctm.apply(0.0, 0.0),
            gs.ctm.apply(1.0, 0.0),
            gs.ctm.apply(1.0, 1.0),
            gs.ctm.apply(0.0, 1.0),
        ]
        if "SMask" in stream.dict:
            self.warn(f"image /{name}: soft mask dropped")
        self._op_seq += 1
        self._page.passthrough_ops.append(
            PassthroughOp(
                kind="image",
                seq=self._op_seq,
                state_id=self.tables.intern_state(gs),
                char_anchor=self._char_order,
                box=Box.bounding(corners),
                name=name,
                width=width,
                height=height,
                color_space=str(cspace) if cspace else "DeviceRGB",
                bits=bits,
                filter=str(filt) if filt else None,
                data_b64=base64.b64encode(stream.raw).decode("ascii"),
            )
        )
