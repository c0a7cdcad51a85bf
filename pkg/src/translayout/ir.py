"""Document intermediate representation: data model, serialization, validation.

The IR decouples semantic text from visual layout so translation can act on
text while rendering reuses the recorded geometry.  The serialized form is a
UTF-8 JSON document with a fixed key order:

* top level: ``ir_version``, ``source_lang``, ``target_lang``, ``fonts``,
  ``states``, ``clips``, ``pages``
* per page: ``page_number``, ``unit``, ``media_box``, ``page_layout``,
  ``pdf_font``, ``pdf_character``, ``paragraph``, ``passthrough_ops``

``clips`` holds the clipping-path table that graphics states reference and
``passthrough_ops`` carries non-text drawing segments to the renderer; both
extend the minimal paragraph/character schema with what re-rendering needs.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Iterator

from .errors import SchemaError
from .geometry import Box, Matrix

IR_VERSION = "1"

PLACEHOLDER_TYPES = ("citation_marker", "formula", "inline_image", "code_span", "symbol_run")

PLACEHOLDER_RE = re.compile(r"\{v(\d+)\}")


def placeholder_token(placeholder_id: int) -> str:
    return "{v%d}" % placeholder_id


def unmask_text(masked: str, placeholders: list[Placeholder]) -> str:
    """Substitute every ``{v<id>}`` token with its recorded source text."""
    by_id = {p.id: p.source_chars for p in placeholders}

    def _sub(m: re.Match) -> str:
        pid = int(m.group(1))
        return by_id.get(pid, m.group(0))

    return PLACEHOLDER_RE.sub(_sub, masked)


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Color:
    space: str  # "gray" | "rgb" | "cmyk"
    components: tuple[float, ...]

    @staticmethod
    def gray(level: float = 0.0) -> Color:
        return Color("gray", (level,))


@dataclass(frozen=True, slots=True)
class GraphicsState:
    """Snapshot of the interpreter state a drawing unit was emitted under."""

    id: int
    ctm: Matrix
    clip_id: int | None = None
    font_id: str | None = None
    font_size: float = 0.0  # points, before the CTM is applied
    char_spacing: float = 0.0
    word_spacing: float = 0.0
    horizontal_scale: float = 100.0
    leading: float = 0.0
    text_rise: float = 0.0
    fill_color: Color = Color.gray()
    stroke_color: Color = Color.gray()


@dataclass(frozen=True, slots=True)
class ClipRecord:
    """Clipping path in device coordinates, chained through ``parent``."""

    id: int
    parent: int | None
    even_odd: bool
    ops: tuple[tuple, ...]  # ("m",x,y) ("l",x,y) ("c",x1,y1,x2,y2,x3,y3) ("h",)


@dataclass(slots=True)
class FontRecord:
    font_id: str
    name: str
    ascent: int  # 1/1000 em
    descent: int  # 1/1000 em, <= 0
    widths: dict[int, int] = field(default_factory=dict)  # char code -> 1/1000 em
    embedded: bool = False


@dataclass(slots=True)
class CharRecord:
    char_unicode: str
    font_id: str | None
    font_size: float  # points, effective (after the CTM)
    box: Box  # device space
    render_order: int
    baseline_y: float
    state_id: int | None = None


@dataclass(slots=True)
class LayoutElement:
    id: int
    class_name: str
    box: Box
    conf: float


@dataclass(slots=True)
class RestoreUnit:
    """One source unit of a masked fragment, positioned relative to the anchor."""

    kind: str  # "char" | "op"
    ref: int  # render_order for chars, passthrough seq for ops
    dx: float
    dy: float
    scale: float
    page: int | None = None  # set only when the unit lives on another page


@dataclass(slots=True)
class RestoreRecord:
    """Geometry needed to redraw a masked fragment at a new anchor point.

    ``anchor`` is the device-space box of the fragment in the source document;
    unit offsets are measured from the anchor's baseline-left corner.
    """

    anchor: Box
    baseline_y: float
    base_size: float = 10.0
    units: list[RestoreUnit] = field(default_factory=list)


@dataclass(slots=True)
class Placeholder:
    type: str
    id: int
    placeholder: str
    source_chars: str
    source_units: list[RestoreUnit] = field(default_factory=list)
    restore: RestoreRecord | None = None

    def __post_init__(self):
        if not self.placeholder:
            self.placeholder = placeholder_token(self.id)


@dataclass(slots=True)
class ParagraphRef:
    page: int
    index: int


@dataclass(slots=True)
class Paragraph:
    input: str = ""
    output: str = ""
    pdf_unicode: str = ""
    layout_label: str = "body_text"
    placeholders: list[Placeholder] = field(default_factory=list)
    box: Box = field(default_factory=lambda: Box(0.0, 0.0, 0.0, 0.0))
    unit_ids: list[int] = field(default_factory=list)
    continuation_of: ParagraphRef | None = None
    failed: bool = False
    # Pipeline-only scratch, never serialized and ignored for equality.
    element_id: int | None = field(default=None, compare=False)
    page_number: int | None = field(default=None, compare=False)
    base_size: float | None = field(default=None, compare=False)
    font_id: str | None = field(default=None, compare=False)
    fit: Any = field(default=None, compare=False)
    placed: Any = field(default=None, compare=False)
    merged_into: ParagraphRef | None = field(default=None, compare=False)
    # Aligned with pdf_unicode: ("char", render_order) | ("op", seq) | ("space", 0)
    unit_map: list = field(default_factory=list, compare=False)


@dataclass(slots=True)
class PassthroughOp:
    """Non-text drawing segment carried through to the renderer unchanged."""

    kind: str  # "path" | "image"
    seq: int
    state_id: int | None
    char_anchor: int  # render_order of the last character emitted before it
    box: Box  # device-space bounds
    # path only
    ops: tuple[tuple, ...] = ()
    paint: str = ""  # "f" | "f*" | "S" | "B" | "n"
    # image only
    name: str = ""
    width: int = 0
    height: int = 0
    color_space: str = ""
    bits: int = 8
    filter: str | None = None
    data_b64: str = ""


@dataclass(slots=True)
class PageIR:
    page_number: int
    media_box: Box
    unit: str = "point"
    page_layout: list[LayoutElement] = field(default_factory=list)
    pdf_font: list[str] = field(default_factory=list)
    pdf_character: list[CharRecord] = field(default_factory=list)
    paragraph: list[Paragraph] = field(default_factory=list)
    passthrough_ops: list[PassthroughOp] = field(default_factory=list)


@dataclass(slots=True)
class DocumentIR:
    pages: list[PageIR] = field(default_factory=list)
    fonts: dict[str, FontRecord] = field(default_factory=dict)
    states: dict[int, GraphicsState] = field(default_factory=dict)
    clips: dict[int, ClipRecord] = field(default_factory=dict)
    source_lang: str = "en"
    target_lang: str = "zh"
    warnings: list[str] = field(default_factory=list, compare=False)

    def page_count(self) -> int:
        return len(self.pages)

    def chars_by_order(self, page: PageIR) -> dict[int, CharRecord]:
        return {c.render_order: c for c in page.pdf_character}

    def ops_by_seq(self, page: PageIR) -> dict[int, PassthroughOp]:
        return {op.seq: op for op in page.passthrough_ops}


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _box_json(b: Box) -> dict:
    return {"x": float(b.x), "y": float(b.y), "x2": float(b.x2), "y2": float(b.y2)}


def _color_json(c: Color) -> dict:
    return {"space": c.space, "components": [float(v) for v in c.components]}


def _restore_unit_json(u: RestoreUnit) -> dict:
    out = {"kind": u.kind, "ref": u.ref, "dx": float(u.dx), "dy": float(u.dy),
           "scale": float(u.scale)}
    if u.page is not None:
        out["page"] = u.page
    return out


def _placeholder_json(p: Placeholder) -> dict:
    out: dict[str, Any] = {
        "type": p.type,
        "id": p.id,
        "placeholder": p.placeholder,
        "source_chars": p.source_chars,
        "source_units": [_restore_unit_json(u) for u in p.source_units],
    }
    if p.restore is not None:
        out["restore"] = {
            "anchor": _box_json(p.restore.anchor),
            "baseline_y": float(p.restore.baseline_y),
            "base_size": float(p.restore.base_size),
            "units": [_restore_unit_json(u) for u in p.restore.units],
        }
    return out


def _paragraph_json(p: Paragraph) -> dict:
    out: dict[str, Any] = {
        "input": p.input,
        "output": p.output,
        "pdf_unicode": p.pdf_unicode,
        "layout_label": p.layout_label,
        "placeholders": [_placeholder_json(ph) for ph in p.placeholders],
        "box": _box_json(p.box),
        "unit_ids": list(p.unit_ids),
    }
    if p.continuation_of is not None:
        out["continuation_of"] = {"page": p.continuation_of.page, "index": p.continuation_of.index}
    if p.failed:
        out["failed"] = True
    return out


def _passthrough_json(op: PassthroughOp) -> dict:
    out: dict[str, Any] = {
        "kind": op.kind,
        "seq": op.seq,
        "state_id": op.state_id,
        "char_anchor": op.char_anchor,
        "box": _box_json(op.box),
    }
    if op.kind == "path":
        out["ops"] = [[o[0]] + [float(v) for v in o[1:]] for o in op.ops]
        out["paint"] = op.paint
    else:
        out["name"] = op.name
        out["width"] = op.width
        out["height"] = op.height
        out["color_space"] = op.color_space
        out["bits"] = op.bits
        out["filter"] = op.filter
        out["data_b64"] = op.data_b64
    return out


def _page_json(page: PageIR) -> dict:
    return {
        "page_number": page.page_number,
        "unit": page.unit,
        "media_box": _box_json(page.media_box),
        "page_layout": [
            {"id": e.id, "class_name": e.class_name, "box": _box_json(e.box),
             "conf": float(e.conf)}
            for e in page.page_layout
        ],
        "pdf_font": list(page.pdf_font),
        "pdf_character": [
            {
                "char_unicode": c.char_unicode,
                "font_id": c.font_id,
                "font_size": float(c.font_size),
                "box": _box_json(c.box),
                "render_order": c.render_order,
                "baseline_y": float(c.baseline_y),
                "state_id": c.state_id,
            }
            for c in page.pdf_character
        ],
        "paragraph": [_paragraph_json(p) for p in page.paragraph],
        "passthrough_ops": [_passthrough_json(op) for op in page.passthrough_ops],
    }


def serialize_ir(doc: DocumentIR) -> str:
    """Render the document as canonical JSON text.

    Keys follow the schema order and collections keep document order, so
    equal documents always serialize to byte-identical text.
    """
    payload = {
        "ir_version": IR_VERSION,
        "source_lang": doc.source_lang,
        "target_lang": doc.target_lang,
        "fonts": [
            {
                "font_id": f.font_id,
                "name": f.name,
                "ascent": f.ascent,
                "descent": f.descent,
                "widths": {str(k): v for k, v in sorted(f.widths.items())},
                "embedded": f.embedded,
            }
            for f in doc.fonts.values()
        ],
        "states": [
            {
                "id": s.id,
                "ctm": [float(v) for v in s.ctm.coefficients()],
                "clip_id": s.clip_id,
                "font_id": s.font_id,
                "font_size": float(s.font_size),
                "char_spacing": float(s.char_spacing),
                "word_spacing": float(s.word_spacing),
                "horizontal_scale": float(s.horizontal_scale),
                "leading": float(s.leading),
                "text_rise": float(s.text_rise),
                "fill_color": _color_json(s.fill_color),
                "stroke_color": _color_json(s.stroke_color),
            }
            for s in sorted(doc.states.values(), key=lambda s: s.id)
        ],
        "clips": [
            {
                "id": c.id,
                "parent": c.parent,
                "even_odd": c.even_odd,
                "ops": [[o[0]] + [float(v) for v in o[1:]] for o in c.ops],
            }
            for c in sorted(doc.clips.values(), key=lambda c: c.id)
        ],
        "pages": [_page_json(p) for p in doc.pages],
    }
    return json.dumps(payload, ensure_ascii=False, indent=1)


# ---------------------------------------------------------------------------
# Deserialization
# ---------------------------------------------------------------------------


_REQUIRED = object()


class _Reader:
    """Schema walker tracking the path of the current field."""

    def __init__(self, strict: bool):
        self.strict = strict

    def err(self, path: str, message: str) -> SchemaError:
        return SchemaError(path, message)

    def obj(self, value, path: str, known: set[str]) -> dict:
        if not isinstance(value, dict):
            raise self.err(path, f"expected object, got {type(value).__name__}")
        if self.strict:
            for key in value:
                if key not in known:
                    raise self.err(f"{path}.{key}", "unknown field")
        return value

    def take(self, obj: dict, path: str, name: str, types, default=_REQUIRED):
        if name not in obj:
            if default is _REQUIRED:
                raise self.err(f"{path}.{name}", "missing required field")
            return default
        value = obj[name]
        if types is not None:
            accepted = types if isinstance(types, tuple) else (types,)
            if isinstance(value, bool) and bool not in accepted:
                raise self.err(f"{path}.{name}", "unexpected boolean")
            if not isinstance(value, accepted):
                names = "/".join(getattr(t, "__name__", str(t)) for t in accepted)
                raise self.err(f"{path}.{name}", f"expected {names}")
        if isinstance(value, float) and (value != value or value in (float("inf"), float("-inf"))):
            raise self.err(f"{path}.{name}", "non-finite number")
        return value

    def box(self, value, path: str) -> Box:
        obj = self.obj(value, path, {"x", "y", "x2", "y2"})
        vals = []
        for k in ("x", "y", "x2", "y2"):
            v = self.take(obj, path, k, (int, float))
            if isinstance(v, bool) or v != v or v in (float("inf"), float("-inf")):
                raise self.err(f"{path}.{k}", "expected finite number")
            vals.append(float(v))
        return Box(*vals)


def _parse_restore_unit(r: _Reader, value, path: str) -> RestoreUnit:
    obj = r.obj(value, path, {"kind", "ref", "dx", "dy", "scale", "page"})
    kind = r.take(obj, path, "kind", str)
    if kind not in ("char", "op"):
        raise r.err(f"{path}.kind", f"expected 'char' or 'op', got {kind!r}")
    return RestoreUnit(
        kind=kind,
        ref=r.take(obj, path, "ref", int),
        dx=float(r.take(obj, path, "dx", (int, float), 0.0)),
        dy=float(r.take(obj, path, "dy", (int, float), 0.0)),
        scale=float(r.take(obj, path, "scale", (int, float), 1.0)),
        page=r.take(obj, path, "page", (int, type(None)), None),
    )


def _parse_placeholder(r: _Reader, value, path: str) -> Placeholder:
    obj = r.obj(value, path, {"type", "id", "placeholder", "source_chars", "source_units", "restore"})
    ptype = r.take(obj, path, "type", str)
    if ptype not in PLACEHOLDER_TYPES:
        raise r.err(f"{path}.type", f"unknown placeholder type {ptype!r}")
    pid = r.take(obj, path, "id", int)
    if pid < 1:
        raise r.err(f"{path}.id", "placeholder id must be positive")
    token = r.take(obj, path, "placeholder", str)
    if token != placeholder_token(pid):
        raise r.err(f"{path}.placeholder", f"token must be {placeholder_token(pid)!r}")
    units = [
        _parse_restore_unit(r, u, f"{path}.source_units[{i}]")
        for i, u in enumerate(r.take(obj, path, "source_units", list, []))
    ]
    restore = None
    raw_restore = r.take(obj, path, "restore", dict, None)
    if raw_restore is not None:
        rpath = f"{path}.restore"
        robj = r.obj(raw_restore, rpath, {"anchor", "baseline_y", "base_size", "units"})
        restore = RestoreRecord(
            anchor=r.box(r.take(robj, rpath, "anchor", dict), f"{rpath}.anchor"),
            baseline_y=float(r.take(robj, rpath, "baseline_y", (int, float), 0.0)),
            base_size=float(r.take(robj, rpath, "base_size", (int, float), 10.0)),
            units=[
                _parse_restore_unit(r, u, f"{rpath}.units[{i}]")
                for i, u in enumerate(r.take(robj, rpath, "units", list, []))
            ],
        )
    return Placeholder(
        type=ptype,
        id=pid,
        placeholder=token,
        source_chars=r.take(obj, path, "source_chars", str),
        source_units=units,
        restore=restore,
    )


def _parse_paragraph(r: _Reader, value, path: str) -> Paragraph:
    known = {
        "input", "output", "pdf_unicode", "layout_label", "placeholders",
        "box", "unit_ids", "continuation_of", "failed",
    }
    obj = r.obj(value, path, known)
    raw_box = r.take(obj, path, "box", dict, None)
    cont = None
    raw_cont = r.take(obj, path, "continuation_of", dict, None)
    if raw_cont is not None:
        cpath = f"{path}.continuation_of"
        cobj = r.obj(raw_cont, cpath, {"page", "index"})
        cont = ParagraphRef(r.take(cobj, cpath, "page", int), r.take(cobj, cpath, "index", int))
    unit_ids = r.take(obj, path, "unit_ids", list, [])
    for i, u in enumerate(unit_ids):
        if not isinstance(u, int) or isinstance(u, bool):
            raise r.err(f"{path}.unit_ids[{i}]", "expected integer render order")
    return Paragraph(
        input=r.take(obj, path, "input", str, ""),
        output=r.take(obj, path, "output", str, ""),
        pdf_unicode=r.take(obj, path, "pdf_unicode", str, ""),
        layout_label=r.take(obj, path, "layout_label", str, "body_text"),
        placeholders=[
            _parse_placeholder(r, p, f"{path}.placeholders[{i}]")
            for i, p in enumerate(r.take(obj, path, "placeholders", list, []))
        ],
        box=r.box(raw_box, f"{path}.box") if raw_box is not None else Box(0.0, 0.0, 0.0, 0.0),
        unit_ids=list(unit_ids),
        continuation_of=cont,
        failed=bool(r.take(obj, path, "failed", bool, False)),
    )


def _parse_passthrough(r: _Reader, value, path: str) -> PassthroughOp:
    known = {
        "kind", "seq", "state_id", "char_anchor", "box",
        "ops", "paint", "name", "width", "height", "color_space", "bits", "filter", "data_b64",
    }
    obj = r.obj(value, path, known)
    kind = r.take(obj, path, "kind", str)
    if kind not in ("path", "image"):
        raise r.err(f"{path}.kind", f"unknown passthrough kind {kind!r}")
    common = dict(
        kind=kind,
        seq=r.take(obj, path, "seq", int),
        state_id=r.take(obj, path, "state_id", int, None),
        char_anchor=r.take(obj, path, "char_anchor", int, 0),
        box=r.box(r.take(obj, path, "box", dict), f"{path}.box"),
    )
    if kind == "path":
        raw_ops = r.take(obj, path, "ops", list, [])
        ops = []
        for i, o in enumerate(raw_ops):
            if not isinstance(o, list) or not o or not isinstance(o[0], str):
                raise r.err(f"{path}.ops[{i}]", "expected [op, ...numbers]")
            ops.append(tuple([o[0]] + [float(v) for v in o[1:]]))
        paint = r.take(obj, path, "paint", str, "f")
        if paint not in ("f", "f*", "S", "B", "n"):
            raise r.err(f"{path}.paint", f"unknown paint op {paint!r}")
        return PassthroughOp(ops=tuple(ops), paint=paint, **common)
    return PassthroughOp(
        name=r.take(obj, path, "name", str, ""),
        width=r.take(obj, path, "width", int, 0),
        height=r.take(obj, path, "height", int, 0),
        color_space=r.take(obj, path, "color_space", str, ""),
        bits=r.take(obj, path, "bits", int, 8),
        filter=r.take(obj, path, "filter", (str, type(None)), None),
        data_b64=r.take(obj, path, "data_b64", str, ""),
        **common,
    )


def _parse_font(r: _Reader, value, path: str) -> FontRecord:
    obj = r.obj(value, path, {"font_id", "name", "ascent", "descent", "widths", "embedded"})
    widths: dict[int, int] = {}
    for k, v in r.take(obj, path, "widths", dict, {}).items():
        try:
            code = int(k)
        except ValueError:
            raise r.err(f"{path}.widths.{k}", "width keys must be integer character codes")
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise r.err(f"{path}.widths.{k}", "expected numeric width")
        widths[code] = int(v)
    return FontRecord(
        font_id=r.take(obj, path, "font_id", str),
        name=r.take(obj, path, "name", str, ""),
        ascent=int(r.take(obj, path, "ascent", (int, float), 0)),
        descent=int(r.take(obj, path, "descent", (int, float), 0)),
        widths=widths,
        embedded=bool(r.take(obj, path, "embedded", bool, False)),
    )


def _parse_char(r: _Reader, value, path: str) -> CharRecord:
    known = {"char_unicode", "font_id", "font_size", "box", "render_order", "baseline_y", "state_id"}
    obj = r.obj(value, path, known)
    box = r.box(r.take(obj, path, "box", dict), f"{path}.box")
    return CharRecord(
        char_unicode=r.take(obj, path, "char_unicode", str),
        font_id=r.take(obj, path, "font_id", (str, type(None)), None),
        font_size=float(r.take(obj, path, "font_size", (int, float))),
        box=box,
        render_order=r.take(obj, path, "render_order", int),
        baseline_y=float(r.take(obj, path, "baseline_y", (int, float), box.y)),
        state_id=r.take(obj, path, "state_id", (int, type(None)), None),
    )


def _parse_element(r: _Reader, value, path: str) -> LayoutElement:
    obj = r.obj(value, path, {"id", "class_name", "box", "conf"})
    conf = float(r.take(obj, path, "conf", (int, float)))
    if not 0.0 <= conf <= 1.0:
        raise r.err(f"{path}.conf", f"conf must be within [0, 1], got {conf}")
    return LayoutElement(
        id=r.take(obj, path, "id", int),
        class_name=r.take(obj, path, "class_name", str),
        box=r.box(r.take(obj, path, "box", dict), f"{path}.box"),
        conf=conf,
    )


def _parse_state(r: _Reader, value, path: str) -> GraphicsState:
    known = {
        "id", "ctm", "clip_id", "font_id", "font_size", "char_spacing", "word_spacing",
        "horizontal_scale", "leading", "text_rise", "fill_color", "stroke_color",
    }
    obj = r.obj(value, path, known)
    ctm_raw = r.take(obj, path, "ctm", list)
    if len(ctm_raw) != 6 or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in ctm_raw):
        raise r.err(f"{path}.ctm", "expected six matrix coefficients")

    def color(name: str) -> Color:
        raw = r.take(obj, path, name, dict, None)
        if raw is None:
            return Color.gray()
        cpath = f"{path}.{name}"
        cobj = r.obj(raw, cpath, {"space", "components"})
        space = r.take(cobj, cpath, "space", str)
        if space not in ("gray", "rgb", "cmyk"):
            raise r.err(f"{cpath}.space", f"unknown color space {space!r}")
        comps = r.take(cobj, cpath, "components", list)
        return Color(space, tuple(float(v) for v in comps))

    return GraphicsState(
        id=r.take(obj, path, "id", int),
        ctm=Matrix(*[float(v) for v in ctm_raw]),
        clip_id=r.take(obj, path, "clip_id", (int, type(None)), None),
        font_id=r.take(obj, path, "font_id", (str, type(None)), None),
        font_size=float(r.take(obj, path, "font_size", (int, float), 0.0)),
        char_spacing=float(r.take(obj, path, "char_spacing", (int, float), 0.0)),
        word_spacing=float(r.take(obj, path, "word_spacing", (int, float), 0.0)),
        horizontal_scale=float(r.take(obj, path, "horizontal_scale", (int, float), 100.0)),
        leading=float(r.take(obj, path, "leading", (int, float), 0.0)),
        text_rise=float(r.take(obj, path, "text_rise", (int, float), 0.0)),
        fill_color=color("fill_color"),
        stroke_color=color("stroke_color"),
    )


def _parse_page(r: _Reader, value, path: str, doc: DocumentIR) -> PageIR:
    known = {
        "page_number", "unit", "media_box", "page_layout",
        "pdf_font", "pdf_character", "paragraph", "passthrough_ops",
    }
    obj = r.obj(value, path, known)
    raw_media = r.take(obj, path, "media_box", dict, None)
    page = PageIR(
        page_number=r.take(obj, path, "page_number", int),
        unit=r.take(obj, path, "unit", str, "point"),
        media_box=r.box(raw_media, f"{path}.media_box") if raw_media is not None
        else Box(0.0, 0.0, 612.0, 792.0),
    )
    page.page_layout = [
        _parse_element(r, e, f"{path}.page_layout[{i}]")
        for i, e in enumerate(r.take(obj, path, "page_layout", list, []))
    ]
    # Listing-style pages may inline full font dicts; hoist them to the table.
    for i, entry in enumerate(r.take(obj, path, "pdf_font", list, [])):
        if isinstance(entry, str):
            page.pdf_font.append(entry)
        elif isinstance(entry, dict):
            rec = _parse_font(r, entry, f"{path}.pdf_font[{i}]")
            doc.fonts.setdefault(rec.font_id, rec)
            page.pdf_font.append(rec.font_id)
        else:
            raise r.err(f"{path}.pdf_font[{i}]", "expected font_id or font object")
    page.pdf_character = [
        _parse_char(r, c, f"{path}.pdf_character[{i}]")
        for i, c in enumerate(r.take(obj, path, "pdf_character", list, []))
    ]
    page.paragraph = [
        _parse_paragraph(r, p, f"{path}.paragraph[{i}]")
        for i, p in enumerate(r.take(obj, path, "paragraph", list, []))
    ]
    for i, p in enumerate(page.paragraph):
        p.page_number = page.page_number
    page.passthrough_ops = [
        _parse_passthrough(r, op, f"{path}.passthrough_ops[{i}]")
        for i, op in enumerate(r.take(obj, path, "passthrough_ops", list, []))
    ]
    return page


def deserialize_ir(text: str, lenient: bool = False) -> DocumentIR:
    """Parse serialized IR text back into a document.

    Strict mode (the default) rejects unknown fields; ``lenient=True``
    tolerates them for forward compatibility.  Field-level range and type
    violations raise :class:`SchemaError` with the offending path either way.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not well-formed JSON: {exc}") from None
    r = _Reader(strict=not lenient)
    known = {"ir_version", "source_lang", "target_lang", "fonts", "states", "clips", "pages"}
    obj = r.obj(raw, "$", known)
    version = r.take(obj, "$", "ir_version", str)
    if version != IR_VERSION:
        raise r.err("$.ir_version", f"unsupported version {version!r}")
    doc = DocumentIR(
        source_lang=r.take(obj, "$", "source_lang", str, "en"),
        target_lang=r.take(obj, "$", "target_lang", str, "zh"),
    )
    for i, f in enumerate(r.take(obj, "$", "fonts", list, [])):
        rec = _parse_font(r, f, f"$.fonts[{i}]")
        doc.fonts[rec.font_id] = rec
    for i, s in enumerate(r.take(obj, "$", "states", list, [])):
        st = _parse_state(r, s, f"$.states[{i}]")
        doc.states[st.id] = st
    for i, c in enumerate(r.take(obj, "$", "clips", list, [])):
        cpath = f"$.clips[{i}]"
        cobj = r.obj(c, cpath, {"id", "parent", "even_odd", "ops"})
        ops = []
        for j, o in enumerate(r.take(cobj, cpath, "ops", list, [])):
            if not isinstance(o, list) or not o or not isinstance(o[0], str):
                raise r.err(f"{cpath}.ops[{j}]", "expected [op, ...numbers]")
            ops.append(tuple([o[0]] + [float(v) for v in o[1:]]))
        rec2 = ClipRecord(
            id=r.take(cobj, cpath, "id", int),
            parent=r.take(cobj, cpath, "parent", (int, type(None)), None),
            even_odd=bool(r.take(cobj, cpath, "even_odd", bool, False)),
            ops=tuple(ops),
        )
        doc.clips[rec2.id] = rec2
    for i, p in enumerate(r.take(obj, "$", "pages", list, [])):
        doc.pages.append(_parse_page(r, p, f"$.pages[{i}]", doc))
    return doc


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ValidationIssue:
    code: str
    path: str
    message: str


@dataclass(slots=True)
class ValidationReport:
    issues: list[ValidationIssue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def codes(self) -> list[str]:
        return [i.code for i in self.issues]

    def add(self, code: str, path: str, message: str) -> None:
        self.issues.append(ValidationIssue(code, path, message))

    def __iter__(self) -> Iterator[ValidationIssue]:
        return iter(self.issues)

    def __len__(self) -> int:
        return len(self.issues)

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{i.code} at {i.path}" for i in self.issues)


def _check_box(report: ValidationReport, box: Box, path: str) -> None:
    if box.x2 < box.x or box.y2 < box.y:
        report.add("MalformedBox", path, f"inverted box {box}")


def validate_ir(doc: DocumentIR) -> ValidationReport:
    """Check every cross-reference and value invariant; violations are data."""
    report = ValidationReport()

    seen_fonts: set[str] = set()
    for fid, font in doc.fonts.items():
        path = f"$.fonts[{fid}]"
        if fid != font.font_id or fid in seen_fonts:
            report.add("DuplicateFontId", path, f"font id {fid!r} inconsistent or repeated")
        seen_fonts.add(fid)
        if font.ascent <= font.descent:
            report.add("AscentDescentOrder", path, f"ascent {font.ascent} <= descent {font.descent}")

    for sid, state in doc.states.items():
        path = f"$.states[{sid}]"
        if state.ctm.is_degenerate():
            report.add("DegenerateMatrix", path, "ctm has zero determinant")
        if state.font_size < 0:
            report.add("NegativeFontSize", path, f"font_size {state.font_size}")
        if state.clip_id is not None and state.clip_id not in doc.clips:
            report.add("DanglingClipRef", path, f"clip {state.clip_id} not recorded")
        if state.font_id is not None and state.font_id not in doc.fonts:
            report.add("DanglingFontRef", path, f"font {state.font_id!r} not in table")

    for cid, clip in doc.clips.items():
        if clip.parent is not None and clip.parent not in doc.clips:
            report.add("DanglingClipRef", f"$.clips[{cid}]", f"parent {clip.parent} not recorded")

    for pi, page in enumerate(doc.pages):
        ppath = f"$.pages[{pi}]"
        if page.page_number != pi:
            report.add("PageNumberMismatch", f"{ppath}.page_number",
                       f"page_number {page.page_number} at position {pi}")
        if page.unit != "point":
            report.add("BadUnit", f"{ppath}.unit", f"unit must be 'point', got {page.unit!r}")
        _check_box(report, page.media_box, f"{ppath}.media_box")

        seen_ids: set[int] = set()
        for ei, el in enumerate(page.page_layout):
            epath = f"{ppath}.page_layout[{ei}]"
            if el.id < 1:
                report.add("NonPositiveId", f"{epath}.id", f"id {el.id}")
            if el.id in seen_ids:
                report.add("DuplicateElementId", f"{epath}.id", f"id {el.id} repeated")
            seen_ids.add(el.id)
            if not 0.0 <= el.conf <= 1.0:
                report.add("BadConf", f"{epath}.conf", f"conf {el.conf}")
            _check_box(report, el.box, f"{epath}.box")

        for fid in page.pdf_font:
            if fid not in doc.fonts:
                report.add("DanglingFontRef", f"{ppath}.pdf_font", f"font {fid!r} not in table")

        orders: set[int] = set()
        prev_order = 0
        for ci, ch in enumerate(page.pdf_character):
            cpath = f"{ppath}.pdf_character[{ci}]"
            _check_box(report, ch.box, f"{cpath}.box")
            if ch.render_order != prev_order + 1:
                report.add("RenderOrderGap", f"{cpath}.render_order",
                           f"expected {prev_order + 1}, got {ch.render_order}")
            prev_order = ch.render_order
            orders.add(ch.render_order)
            if not ch.char_unicode:
                report.add("EmptyCharUnicode", f"{cpath}.char_unicode", "empty text")
            if ch.font_id is None:
                report.add("MissingFontRef", f"{cpath}.font_id", "character has no font")
            elif ch.font_id not in doc.fonts:
                report.add("DanglingFontRef", f"{cpath}.font_id", f"font {ch.font_id!r} not in table")
            if ch.state_id is not None and ch.state_id not in doc.states:
                report.add("DanglingStateRef", f"{cpath}.state_id", f"state {ch.state_id} not recorded")

        op_seqs: set[int] = set()
        for oi, op in enumerate(page.passthrough_ops):
            opath = f"{ppath}.passthrough_ops[{oi}]"
            op_seqs.add(op.seq)
            _check_box(report, op.box, f"{opath}.box")
            if op.state_id is not None and op.state_id not in doc.states:
                report.add("DanglingStateRef", f"{opath}.state_id", f"state {op.state_id} not recorded")

        for gi, para in enumerate(page.paragraph):
            gpath = f"{ppath}.paragraph[{gi}]"
            _check_box(report, para.box, f"{gpath}.box")
            for uid in para.unit_ids:
                if uid not in orders:
                    report.add("DanglingUnitRef", f"{gpath}.unit_ids", f"render_order {uid} absent")
            if para.continuation_of is not None:
                ref = para.continuation_of
                if not (0 <= ref.page < len(doc.pages)) or not (
                    0 <= ref.index < len(doc.pages[ref.page].paragraph)
                ):
                    report.add("BadContinuationRef", f"{gpath}.continuation_of",
                               f"paragraph ({ref.page}, {ref.index}) absent")
            token_ids = [int(m.group(1)) for m in PLACEHOLDER_RE.finditer(para.input)]
            record_ids = [ph.id for ph in para.placeholders]
            seen_ph: set[int] = set()
            for phi, ph in enumerate(para.placeholders):
                phpath = f"{gpath}.placeholders[{phi}]"
                if ph.id < 1:
                    report.add("NonPositiveId", f"{phpath}.id", f"id {ph.id}")
                if ph.id in seen_ph:
                    report.add("DuplicatePlaceholderId", f"{phpath}.id", f"id {ph.id} repeated")
                seen_ph.add(ph.id)
                if ph.placeholder != placeholder_token(ph.id):
                    report.add("BadPlaceholderToken", f"{phpath}.placeholder",
                               f"token {ph.placeholder!r} for id {ph.id}")
                if ph.type not in PLACEHOLDER_TYPES:
                    report.add("BadPlaceholderType", f"{phpath}.type", f"type {ph.type!r}")
                for unit in ph.source_units:
                    if unit.page is None or unit.page == pi:
                        unit_orders, unit_seqs = orders, op_seqs
                    elif 0 <= unit.page < len(doc.pages):
                        other = doc.pages[unit.page]
                        unit_orders = {c.render_order for c in other.pdf_character}
                        unit_seqs = {o.seq for o in other.passthrough_ops}
                    else:
                        report.add("DanglingUnitRef", f"{phpath}.source_units",
                                   f"page {unit.page} absent")
                        continue
                    if unit.kind == "char" and unit.ref not in unit_orders:
                        report.add("DanglingUnitRef", f"{phpath}.source_units",
                                   f"render_order {unit.ref} absent")
                    if unit.kind == "op" and unit.ref not in unit_seqs:
                        report.add("DanglingUnitRef", f"{phpath}.source_units",
                                   f"passthrough seq {unit.ref} absent")
            if para.input:
                if sorted(token_ids) != sorted(record_ids):
                    report.add("PlaceholderTokenMismatch", f"{gpath}.input",
                               f"tokens {sorted(token_ids)} vs records {sorted(record_ids)}")
                elif unmask_text(para.input, para.placeholders) != para.pdf_unicode:
                    report.add("UnmaskMismatch", f"{gpath}.input",
                               "unmasking input does not reproduce pdf_unicode")

    return report
