"""Minimal TrueType (sfnt) reader: enough to embed a font and map glyphs.

Reads head, hhea, maxp, hmtx, cmap (formats 4 and 12), and the name table.
The raw bytes are kept whole for embedding as a PDF font program.
"""

from __future__ import annotations

import struct

from ..errors import MalformedFont


def _u16(data: bytes, off: int) -> int:
    return struct.unpack_from(">H", data, off)[0]


def _i16(data: bytes, off: int) -> int:
    return struct.unpack_from(">h", data, off)[0]


def _u32(data: bytes, off: int) -> int:
    return struct.unpack_from(">I", data, off)[0]


class TrueTypeFont:
    def __init__(self, data: bytes):
        self.data = data
        self.tables: dict[str, tuple[int, int]] = {}
        self._parse_directory()
        self._parse_head()
        self._parse_hhea()
        self._parse_maxp()
        self._parse_hmtx()
        self._cmap: dict[int, int] = {}
        self._parse_cmap()
        self.name = self._parse_name()

    # -- table directory ---------------------------------------------------

    def _parse_directory(self) -> None:
        if len(self.data) < 12:
            raise MalformedFont("font file shorter than the sfnt header")
        version = _u32(self.data, 0)
        if version not in (0x00010000, 0x74727565):  # 1.0 or 'true'
            raise MalformedFont(f"not a TrueType font (sfnt version 0x{version:08x})")
        count = _u16(self.data, 4)
        off = 12
        for _ in range(count):
            if off + 16 > len(self.data):
                raise MalformedFont("truncated table directory")
            tag = self.data[off : off + 4].decode("latin-1")
            rec_off = _u32(self.data, off + 8)
            rec_len = _u32(self.data, off + 12)
            if rec_off + rec_len > len(self.data):
                raise MalformedFont(f"table {tag!r} extends past end of file")
            self.tables[tag] = (rec_off, rec_len)
            off += 16

    def _table(self, tag: str) -> bytes:
        if tag not in self.tables:
            raise MalformedFont(f"required table {tag!r} missing")
        off, length = self.tables[tag]
        return self.data[off : off + length]

    # -- fixed tables --------------------------------------------------------

    def _parse_head(self) -> None:
        head = self._table("head")
        if len(head) < 54:
            raise MalformedFont("head table truncated")
        self.units_per_em = _u16(head, 18)
        if self.units_per_em == 0:
            raise MalformedFont("unitsPerEm is zero")

    def _parse_hhea(self) -> None:
        hhea = self._table("hhea")
        if len(hhea) < 36:
            raise MalformedFont("hhea table truncated")
        self.ascent = _i16(hhea, 4)
        self.descent = _i16(hhea, 6)
        self.num_h_metrics = _u16(hhea, 34)

    def _parse_maxp(self) -> None:
        maxp = self._table("maxp")
        if len(maxp) < 6:
            raise MalformedFont("maxp table truncated")
        self.num_glyphs = _u16(maxp, 4)

    def _parse_hmtx(self) -> None:
        hmtx = self._table("hmtx")
        n = min(self.num_h_metrics, self.num_glyphs)
        if len(hmtx) < 4 * n:
            raise MalformedFont("hmtx table truncated")
        self.advances = [_u16(hmtx, 4 * i) for i in range(n)]

    # -- cmap ----------------------------------------------------------------

    def _parse_cmap(self) -> None:
        cmap = self._table("cmap")
        if len(cmap) < 4:
            raise MalformedFont("cmap table truncated")
        n = _u16(cmap, 2)
        best_off = None
        best_rank = -1
        for i in range(n):
            rec = 4 + 8 * i
            platform = _u16(cmap, rec)
            encoding = _u16(cmap, rec + 2)
            sub_off = _u32(cmap, rec + 4)
            # Prefer full-repertoire unicode, then BMP unicode, then MS symbol.
            rank = {(3, 10): 3, (0, 4): 3, (3, 1): 2, (0, 3): 2, (0, 0): 1}.get(
                (platform, encoding), 0
            )
            if rank > best_rank:
                best_rank = rank
                best_off = sub_off
        if best_off is None or best_rank <= 0:
            raise MalformedFont("no unicode cmap subtable")
        fmt = _u16(cmap, best_off)
        if fmt == 4:
            self._parse_cmap4(cmap, best_off)
        elif fmt == 12:
            self._parse_cmap12(cmap, best_off)
        else:
            raise MalformedFont(f"unsupported cmap subtable format {fmt}")

    def _parse_cmap4(self, cmap: bytes, off: int) -> None:
        seg_x2 = _u16(cmap, off + 6)
        segs = seg_x2 // 2
        ends = [_u16(cmap, off + 14 + 2 * i) for i in range(segs)]
        starts = [_u16(cmap, off + 16 + seg_x2 + 2 * i) for i in range(segs)]
        deltas = [_i16(cmap, off + 16 + 2 * seg_x2 + 2 * i) for i in range(segs)]
        range_off_base = off + 16 + 3 * seg_x2
        for i in range(segs):
            range_off = _u16(cmap, range_off_base + 2 * i)
            for code in range(starts[i], ends[i] + 1):
                if code == 0xFFFF:
                    continue
                if range_off == 0:
                    gid = (code + deltas[i]) & 0xFFFF
                else:
                    idx = range_off_base + 2 * i + range_off + 2 * (code - starts[i])
                    if idx + 2 > len(cmap):
                        continue
                    gid = _u16(cmap, idx)
                    if gid != 0:
                        gid = (gid + deltas[i]) & 0xFFFF
                if gid != 0:
                    self._cmap[code] = gid

    def _parse_cmap12(self, cmap: bytes, off: int) -> None:
        n_groups = _u32(cmap, off + 12)
        for g in range(n_groups):
            rec = off + 16 + 12 * g
            start, end, start_gid = struct.unpack_from(">III", cmap, rec)
            for code in range(start, end + 1):
                self._cmap[code] = start_gid + (code - start)

    # -- name ----------------------------------------------------------------

    def _parse_name(self) -> str:
        if "name" not in self.tables:
            return ""
        name = self._table("name")
        count = _u16(name, 2)
        storage = _u16(name, 4)
        best = ""
        for i in range(count):
            rec = 6 + 12 * i
            if rec + 12 > len(name):
                break
            platform, _enc, _lang, name_id, length, offset = struct.unpack_from(
                ">HHHHHH", name, rec
            )
            if name_id != 6:  # PostScript name
                continue
            raw = name[storage + offset : storage + offset + length]
            try:
                best = raw.decode("utf-16-be") if platform in (0, 3) else raw.decode("latin-1")
            except UnicodeDecodeError:
                continue
            if best:
                break
        return best

    # -- queries ---------------------------------------------------------------

    def glyph_id(self, codepoint: int) -> int | None:
        return self._cmap.get(codepoint)

    def advance(self, gid: int) -> int:
        """Advance in font units; glyphs past numberOfHMetrics repeat the last."""
        if not self.advances:
            return 0
        if gid < len(self.advances):
            return self.advances[gid]
        return self.advances[-1]

    def advance_permille(self, gid: int) -> int:
        return int(round(self.advance(gid) * 1000.0 / self.units_per_em))

    def charmap(self) -> dict[int, int]:
        return dict(self._cmap)
