"""Document-level PDF structure: cross-reference data, objects, pages.

Supports classic xref tables and cross-reference streams (with object
streams), Flate-compressed data with PNG predictors, and versions 1.4-1.7.
Encrypted files are rejected with :class:`EncryptedPdf`.
"""

from __future__ import annotations

import logging
import re
import zlib

from ..errors import EncryptedPdf, MalformedStream, PdfParseError
from .objects import Lexer, ObjectParser, PdfName, PdfRef, PdfStream

logger = logging.getLogger(__name__)

_OBJ_RE = re.compile(rb"(\d+)\s+(\d+)\s+obj\b")


def apply_png_predictor(data: bytes, colors: int, bpc: int, columns: int) -> bytes:
    """Undo PNG row filtering (predictors 10-15)."""
    bpp = max(1, (colors * bpc) // 8)
    row_len = (columns * colors * bpc + 7) // 8
    out = bytearray()
    prev = bytes(row_len)
    pos = 0
    while pos < len(data):
        ftype = data[pos]
        pos += 1
        row = bytearray(data[pos : pos + row_len])
        pos += row_len
        if ftype == 0:
            pass
        elif ftype == 1:  # Sub
            for i in range(bpp, len(row)):
                row[i] = (row[i] + row[i - bpp]) & 0xFF
        elif ftype == 2:  # Up
            for i in range(len(row)):
                row[i] = (row[i] + prev[i]) & 0xFF
        elif ftype == 3:  # Average
            for i in range(len(row)):
                left = row[i - bpp] if i >= bpp else 0
                row[i] = (row[i] + (left + prev[i]) // 2) & 0xFF
        elif ftype == 4:  # Paeth
            for i in range(len(row)):
                a = row[i - bpp] if i >= bpp else 0
                b = prev[i]
                c = prev[i - bpp] if i >= bpp else 0
                p = a + b - c
                pa, pb, pc = abs(p - a), abs(p - b), abs(p - c)
                if pa <= pb and pa <= pc:
                    pred = a
                elif pb <= pc:
                    pred = b
                else:
                    pred = c
                row[i] = (row[i] + pred) & 0xFF
        else:
            raise MalformedStream(pos, f"unknown PNG filter type {ftype}")
        out.extend(row)
        prev = bytes(row)
    return bytes(out)


class PdfDocument:
    def __init__(self, data: bytes, lenient: bool = False):
        if not data.startswith(b"%PDF-"):
            nl = data.find(b"%PDF-")
            if nl < 0:
                raise MalformedStream(0, "missing %PDF header")
            data = data[nl:]
        self.data = data
        self.lenient = lenient
        self.warnings: list[str] = []
        self.xref: dict[int, tuple] = {}  # num -> ("n", offset) | ("o", stm_num, idx)
        self.trailer: dict = {}
        self._cache: dict[int, object] = {}
        self._objstm_cache: dict[int, dict[int, object]] = {}
        try:
            self._load_xref()
        except PdfParseError:
            if not lenient:
                raise
            self.warn("cross-reference data unusable; scanning for objects")
            self._rebuild_xref()
        if not self.xref:
            self._rebuild_xref()
        if "Encrypt" in self.trailer:
            raise EncryptedPdf("encrypted documents are not supported")

    def warn(self, message: str) -> None:
        logger.warning(message)
        self.warnings.append(message)

    # -- cross-reference loading --------------------------------------------

    def _load_xref(self) -> None:
        tail = self.data[-2048:]
        idx = tail.rfind(b"startxref")
        if idx < 0:
            raise MalformedStream(len(self.data), "startxref not found")
        lex = Lexer(tail, idx + len(b"startxref"))
        lex.skip_ws()
        start_raw = lex.read_regular_run()
        try:
            offset = int(start_raw)
        except ValueError:
            raise MalformedStream(len(self.data), f"bad startxref value {start_raw!r}") from None
        seen: set[int] = set()
        while offset is not None and offset not in seen:
            seen.add(offset)
            offset = self._load_xref_section(offset)

    def _load_xref_section(self, offset: int) -> int | None:
        if offset < 0 or offset >= len(self.data):
            raise MalformedStream(offset, "xref offset out of range")
        lex = Lexer(self.data, offset)
        lex.skip_ws()
        if self.data[lex.pos : lex.pos + 4] == b"xref":
            return self._load_xref_table(lex.pos + 4)
        return self._load_xref_stream(offset)

    def _load_xref_table(self, pos: int) -> int | None:
        lex = Lexer(self.data, pos)
        while True:
            lex.skip_ws()
            if self.data[lex.pos : lex.pos + 7] == b"trailer":
                lex.pos += 7
                break
            start_raw = lex.read_regular_run()
            lex.skip_ws()
            count_raw = lex.read_regular_run()
            if not start_raw.isdigit() or not count_raw.isdigit():
                raise MalformedStream(lex.pos, "bad xref subsection header")
            start, count = int(start_raw), int(count_raw)
            for i in range(count):
                lex.skip_ws()
                entry = self.data[lex.pos : lex.pos + 18]
                if len(entry) < 18:
                    raise MalformedStream(lex.pos, "short xref entry")
                off_raw, kind = entry[:10], entry[17:18]
                if not off_raw.isdigit() or kind not in (b"n", b"f"):
                    raise MalformedStream(lex.pos, f"bad xref entry {entry!r}")
                num = start + i
                if kind == b"n" and num not in self.xref:
                    self.xref[num] = ("n", int(off_raw))
                lex.pos += 18
        parser = ObjectParser(self.data, lex.pos)
        trailer = parser.parse_object()
        if not isinstance(trailer, dict):
            raise MalformedStream(lex.pos, "trailer is not a dictionary")
        for key, value in trailer.items():
            self.trailer.setdefault(key, value)
        # Hybrid files point at an additional xref stream.
        if "XRefStm" in trailer:
            try:
                self._load_xref_stream(int(trailer["XRefStm"]))
            except PdfParseError:
                self.warn("broken XRefStm pointer ignored")
        prev = trailer.get("Prev")
        return int(prev) if prev is not None else None

    def _load_xref_stream(self, offset: int) -> int | None:
        parser = ObjectParser(self.data, offset)
        num, gen, stream = self._parse_indirect_at(parser)
        if not isinstance(stream, PdfStream) or stream.dict.get("Type") != "XRef":
            raise MalformedStream(offset, "expected cross-reference stream")
        data = self.decode_stream(stream)
        w = [int(v) for v in stream.dict.get("W", [])]
        if len(w) != 3:
            raise MalformedStream(offset, "xref stream /W must have 3 entries")
        size = int(stream.dict.get("Size", 0))
        index = [int(v) for v in stream.dict.get("Index", [0, size])]
        entry_len = sum(w)
        pos = 0

        def field(raw: bytes, start: int, width: int, default: int) -> int:
            if width == 0:
                return default
            return int.from_bytes(raw[start : start + width], "big")

        for i in range(0, len(index), 2):
            start, count = index[i], index[i + 1]
            for n in range(count):
                raw = data[pos : pos + entry_len]
                pos += entry_len
                if len(raw) < entry_len:
                    raise MalformedStream(offset, "truncated xref stream data")
                ftype = field(raw, 0, w[0], 1)
                f2 = field(raw, w[0], w[1], 0)
                f3 = field(raw, w[0] + w[1], w[2], 0)
                objnum = start + n
                if objnum in self.xref:
                    continue
                if ftype == 1:
                    self.xref[objnum] = ("n", f2)
                elif ftype == 2:
                    self.xref[objnum] = ("o", f2, f3)
        for key, value in stream.dict.items():
            if key not in ("Type", "W", "Index", "Length", "Filter", "DecodeParms"):
                self.trailer.setdefault(key, value)
        prev = stream.dict.get("Prev")
        return int(prev) if prev is not None else None

    def _rebuild_xref(self) -> None:
        """Last-resort scan for ``N G obj`` markers (lenient recovery)."""
        for m in _OBJ_RE.finditer(self.data):
            num = int(m.group(1))
            self.xref[num] = ("n", m.start())
        trailer_idx = self.data.rfind(b"trailer")
        if trailer_idx >= 0:
            try:
                parser = ObjectParser(self.data, trailer_idx + 7)
                trailer = parser.parse_object()
                if isinstance(trailer, dict):
                    for key, value in trailer.items():
                        self.trailer.setdefault(key, value)
            except PdfParseError:
                pass
        if "Root" not in self.trailer:
            # Xref-stream files keep /Root in the stream dictionary.
            for num in sorted(self.xref):
                try:
                    obj = self.get(PdfRef(num))
                except PdfParseError:
                    continue
                if isinstance(obj, PdfStream) and obj.dict.get("Type") == "XRef":
                    for key, value in obj.dict.items():
                        self.trailer.setdefault(key, value)
                if isinstance(obj, dict) and obj.get("Type") == "Catalog":
                    self.trailer.setdefault("Root", PdfRef(num))
                    break

    # -- object access ---------------------------------------------------------

    def _parse_indirect_at(self, parser: ObjectParser) -> tuple[int, int, object]:
        parser.lex.skip_ws()
        num_raw = parser.lex.read_regular_run()
        parser.lex.skip_ws()
        gen_raw = parser.lex.read_regular_run()
        if not num_raw.isdigit() or not gen_raw.isdigit():
            raise MalformedStream(parser.pos, "expected 'num gen obj'")
        parser.expect_keyword(b"obj")
        value = parser.parse_object()
        if isinstance(value, dict):
            parser.lex.skip_ws()
            if self.data[parser.pos : parser.pos + 6] == b"stream":
                parser.pos += 6
                if self.data[parser.pos : parser.pos + 2] == b"\r\n":
                    parser.pos += 2
                elif self.data[parser.pos : parser.pos + 1] in (b"\n", b"\r"):
                    parser.pos += 1
                length = self.resolve(value.get("Length"))
                if not isinstance(length, int):
                    end = self.data.find(b"endstream", parser.pos)
                    if end < 0:
                        raise MalformedStream(parser.pos, "stream without endstream")
                    length = end - parser.pos
                    self.warn("stream /Length missing or invalid; recovered by scanning")
                raw = self.data[parser.pos : parser.pos + length]
                parser.pos += length
                value = PdfStream(value, raw)
        return int(num_raw), int(gen_raw), value

    def get(self, ref: PdfRef):
        if ref.num in self._cache:
            return self._cache[ref.num]
        entry = self.xref.get(ref.num)
        if entry is None:
            self.warn(f"reference to missing object {ref.num}")
            return None
        if entry[0] == "n":
            parser = ObjectParser(self.data, entry[1])
            try:
                num, _gen, value = self._parse_indirect_at(parser)
            except PdfParseError:
                if not self.lenient:
                    raise
                self.warn(f"object {ref.num} unparseable; treated as null")
                value = None
                num = ref.num
            if num != ref.num:
                self.warn(f"xref points object {ref.num} at object {num}")
        else:
            value = self._objstm_object(entry[1], entry[2], ref.num)
        self._cache[ref.num] = value
        return value

    def _objstm_object(self, stm_num: int, idx: int, want: int):
        if stm_num not in self._objstm_cache:
            stream = self.get(PdfRef(stm_num))
            if not isinstance(stream, PdfStream) or stream.dict.get("Type") != "ObjStm":
                raise MalformedStream(0, f"object stream {stm_num} missing or wrong type")
            data = self.decode_stream(stream)
            count = int(self.resolve(stream.dict.get("N", 0)))
            first = int(self.resolve(stream.dict.get("First", 0)))
            header = ObjectParser(data, 0, allow_refs=False)
            offsets: list[tuple[int, int]] = []
            for _ in range(count):
                header.lex.skip_ws()
                onum = int(header.lex.read_regular_run())
                header.lex.skip_ws()
                ooff = int(header.lex.read_regular_run())
                offsets.append((onum, ooff))
            table: dict[int, object] = {}
            for onum, ooff in offsets:
                parser = ObjectParser(data, first + ooff)
                table[onum] = parser.parse_object()
            self._objstm_cache[stm_num] = table
        table = self._objstm_cache[stm_num]
        if want not in table:
            raise MalformedStream(0, f"object {want} not found in object stream {stm_num}")
        return table[want]

    def resolve(self, value):
        seen = 0
        while isinstance(value, PdfRef):
            value = self.get(value)
            seen += 1
            if seen > 32:
                raise MalformedStream(0, "reference chain too deep")
        return value

    # -- stream decoding ---------------------------------------------------------

    def decode_stream(self, stream: PdfStream) -> bytes:
        filters = self.resolve(stream.dict.get("Filter"))
        if filters is None:
            return stream.raw
        if not isinstance(filters, list):
            filters = [filters]
        parms = self.resolve(stream.dict.get("DecodeParms"))
        if not isinstance(parms, list):
            parms = [parms] * len(filters)
        data = stream.raw
        for f, p in zip(filters, parms):
            f = self.resolve(f)
            p = self.resolve(p) or {}
            if f == "FlateDecode":
                try:
                    data = zlib.decompress(data)
                except zlib.error as exc:
                    raise MalformedStream(0, f"flate decode failed: {exc}") from None
                predictor = int(self.resolve(p.get("Predictor", 1)) or 1)
                if predictor >= 10:
                    data = apply_png_predictor(
                        data,
                        int(self.resolve(p.get("Colors", 1)) or 1),
                        int(self.resolve(p.get("BitsPerComponent", 8)) or 8),
                        int(self.resolve(p.get("Columns", 1)) or 1),
                    )
                elif predictor != 1:
                    raise MalformedStream(0, f"unsupported predictor {predictor}")
            else:
                raise MalformedStream(0, f"unsupported stream filter {f!r}")
        return data

    # -- page tree ------------------------------------------------------------

    _INHERITED = ("Resources", "MediaBox", "CropBox", "Rotate")

    def pages(self) -> list[dict]:
        root = self.resolve(self.trailer.get("Root"))
        if not isinstance(root, dict):
            raise MalformedStream(0, "document catalog missing")
        tree = self.resolve(root.get("Pages"))
        if not isinstance(tree, dict):
            raise MalformedStream(0, "page tree missing")
        out: list[dict] = []
        self._walk_pages(tree, {}, out, depth=0)
        return out

    def _walk_pages(self, node: dict, inherited: dict, out: list[dict], depth: int) -> None:
        if depth > 64:
            raise MalformedStream(0, "page tree too deep")
        attrs = dict(inherited)
        for key in self._INHERITED:
            if key in node:
                attrs[key] = node[key]
        ntype = self.resolve(node.get("Type"))
        if ntype == "Page" or ("Kids" not in node and ntype != "Pages"):
            page = dict(node)
            for key, value in attrs.items():
                page.setdefault(key, value)
            out.append(page)
            return
        for kid_ref in self.resolve(node.get("Kids", [])) or []:
            kid = self.resolve(kid_ref)
            if isinstance(kid, dict):
                self._walk_pages(kid, attrs, out, depth + 1)

    def content_bytes(self, page: dict) -> bytes:
        contents = self.resolve(page.get("Contents"))
        if contents is None:
            return b""
        if isinstance(contents, list):
            parts = []
            for ref in contents:
                stream = self.resolve(ref)
                if isinstance(stream, PdfStream):
                    parts.append(self.decode_stream(stream))
            return b"\n".join(parts)
        if isinstance(contents, PdfStream):
            return self.decode_stream(contents)
        return b""

    def media_box(self, page: dict) -> tuple[float, float, float, float]:
        raw = self.resolve(page.get("MediaBox")) or [0, 0, 612, 792]
        vals = [float(self.resolve(v)) for v in raw]
        x1, y1, x2, y2 = vals[:4]
        return (min(x1, x2), min(y1, y2), max(x1, x2), max(y1, y2))
