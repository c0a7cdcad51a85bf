"""PDF object syntax: lexer and recursive object parser.

Operates on raw bytes.  Strings stay ``bytes`` (their interpretation is
font-dependent), names become :class:`PdfName`, indirect references become
:class:`PdfRef`.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import MalformedStream

WHITESPACE = b"\x00\t\n\x0c\r "
DELIMITERS = b"()<>[]{}/%"


def is_regular(byte: int) -> bool:
    return byte not in WHITESPACE and byte not in DELIMITERS


class PdfName(str):
    """Name object; the leading slash is not part of the value."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"/{str(self)}"


@dataclass(frozen=True, slots=True)
class PdfRef:
    num: int
    gen: int = 0


class PdfStream:
    """Stream object: its dictionary plus the raw (still encoded) bytes."""

    __slots__ = ("dict", "raw")

    def __init__(self, sdict: dict, raw: bytes):
        self.dict = sdict
        self.raw = raw

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"<PdfStream {len(self.raw)} bytes {self.dict!r}>"


class Lexer:
    def __init__(self, data: bytes, pos: int = 0):
        self.data = data
        self.pos = pos

    def at_end(self) -> bool:
        return self.pos >= len(self.data)

    def skip_ws(self) -> None:
        data = self.data
        n = len(data)
        while self.pos < n:
            b = data[self.pos]
            if b in WHITESPACE:
                self.pos += 1
            elif b == 0x25:  # '%' comment to end of line
                while self.pos < n and data[self.pos] not in b"\r\n":
                    self.pos += 1
            else:
                return

    def peek_byte(self) -> int | None:
        return self.data[self.pos] if self.pos < len(self.data) else None

    def read_regular_run(self) -> bytes:
        start = self.pos
        data = self.data
        n = len(data)
        while self.pos < n and is_regular(data[self.pos]):
            self.pos += 1
        return data[start : self.pos]

    def read_name(self) -> PdfName:
        assert self.data[self.pos] == 0x2F  # '/'
        self.pos += 1
        raw = bytearray()
        data = self.data
        n = len(data)
        while self.pos < n and is_regular(data[self.pos]):
            b = data[self.pos]
            if b == 0x23 and self.pos + 2 < n:  # '#' hex escape
                try:
                    raw.append(int(data[self.pos + 1 : self.pos + 3], 16))
                    self.pos += 3
                    continue
                except ValueError:
                    pass
            raw.append(b)
            self.pos += 1
        return PdfName(raw.decode("utf-8", "replace"))

    def read_literal_string(self) -> bytes:
        assert self.data[self.pos] == 0x28  # '('
        self.pos += 1
        out = bytearray()
        depth = 1
        data = self.data
        n = len(data)
        while self.pos < n:
            b = data[self.pos]
            if b == 0x5C:  # backslash
                self.pos += 1
                if self.pos >= n:
                    break
                e = data[self.pos]
                if e in b"nrtbf":
                    out.append({0x6E: 10, 0x72: 13, 0x74: 9, 0x62: 8, 0x66: 12}[e])
                    self.pos += 1
                elif e in b"()\\":
                    out.append(e)
                    self.pos += 1
                elif 0x30 <= e <= 0x37:  # octal, up to three digits
                    val = 0
                    for _ in range(3):
                        if self.pos < n and 0x30 <= data[self.pos] <= 0x37:
                            val = val * 8 + (data[self.pos] - 0x30)
                            self.pos += 1
                        else:
                            break
                    out.append(val & 0xFF)
                elif e in b"\r\n":  # line continuation
                    self.pos += 1
                    if e == 0x0D and self.pos < n and data[self.pos] == 0x0A:
                        self.pos += 1
                else:
                    out.append(e)
                    self.pos += 1
            elif b == 0x28:
                depth += 1
                out.append(b)
                self.pos += 1
            elif b == 0x29:
                depth -= 1
                self.pos += 1
                if depth == 0:
                    return bytes(out)
                out.append(b)
            else:
                out.append(b)
                self.pos += 1
        raise MalformedStream(self.pos, "unterminated literal string")

    def read_hex_string(self) -> bytes:
        assert self.data[self.pos] == 0x3C  # '<'
        self.pos += 1
        digits = bytearray()
        data = self.data
        n = len(data)
        while self.pos < n:
            b = data[self.pos]
            if b == 0x3E:  # '>'
                self.pos += 1
                if len(digits) % 2:
                    digits.append(0x30)
                try:
                    return bytes.fromhex(digits.decode("ascii"))
                except ValueError:
                    raise MalformedStream(self.pos, "bad hex string") from None
            if b not in WHITESPACE:
                digits.append(b)
            self.pos += 1
        raise MalformedStream(self.pos, "unterminated hex string")


_NUMBER_BYTES = frozenset(b"+-.0123456789")


class ObjectParser:
    """Parses object syntax; reference resolution is the document's job."""

    def __init__(self, data: bytes, pos: int = 0, allow_refs: bool = True):
        self.lex = Lexer(data, pos)
        self.allow_refs = allow_refs

    @property
    def pos(self) -> int:
        return self.lex.pos

    @pos.setter
    def pos(self, value: int) -> None:
        self.lex.pos = value

    def parse_object(self):
        self.lex.skip_ws()
        b = self.lex.peek_byte()
        if b is None:
            raise MalformedStream(self.pos, "unexpected end of data")
        if b == 0x2F:  # '/'
            return self.lex.read_name()
        if b == 0x28:  # '('
            return self.lex.read_literal_string()
        if b == 0x3C:  # '<' or '<<'
            if self.lex.data[self.pos : self.pos + 2] == b"<<":
                return self._parse_dict()
            return self.lex.read_hex_string()
        if b == 0x5B:  # '['
            return self._parse_array()
        if b in _NUMBER_BYTES:
            return self._parse_number_or_ref()
        word = self.lex.read_regular_run()
        if word == b"true":
            return True
        if word == b"false":
            return False
        if word == b"null":
            return None
        raise MalformedStream(self.pos, f"unexpected token {word!r}")

    def _parse_array(self) -> list:
        self.pos += 1  # '['
        out = []
        while True:
            self.lex.skip_ws()
            if self.lex.peek_byte() == 0x5D:  # ']'
                self.pos += 1
                return out
            if self.lex.at_end():
                raise MalformedStream(self.pos, "unterminated array")
            out.append(self.parse_object())

    def _parse_dict(self) -> dict:
        self.pos += 2  # '<<'
        out: dict[PdfName, object] = {}
        while True:
            self.lex.skip_ws()
            if self.lex.data[self.pos : self.pos + 2] == b">>":
                self.pos += 2
                return out
            if self.lex.at_end():
                raise MalformedStream(self.pos, "unterminated dictionary")
            if self.lex.peek_byte() != 0x2F:
                raise MalformedStream(self.pos, "dictionary key must be a name")
            key = self.lex.read_name()
            out[key] = self.parse_object()

    def _parse_number_or_ref(self):
        raw = self.lex.read_regular_run()
        try:
            if b"." in raw:
                value = float(raw)
            else:
                value = int(raw)
        except ValueError:
            raise MalformedStream(self.pos, f"bad number {raw!r}") from None
        if not self.allow_refs or not isinstance(value, int) or value < 0:
            return value
        # Lookahead for "<int> <int> R"
        save = self.pos
        self.lex.skip_ws()
        b = self.lex.peek_byte()
        if b is not None and b in b"0123456789":
            gen_raw = self.lex.read_regular_run()
            self.lex.skip_ws()
            if gen_raw.isdigit() and self.lex.data[self.pos : self.pos + 1] == b"R":
                nxt = self.lex.data[self.pos + 1 : self.pos + 2]
                if not nxt or not is_regular(nxt[0]):
                    self.pos += 1
                    return PdfRef(value, int(gen_raw))
        self.pos = save
        return value

    def expect_keyword(self, word: bytes) -> None:
        self.lex.skip_ws()
        got = self.lex.read_regular_run()
        if got != word:
            raise MalformedStream(self.pos, f"expected {word!r}, got {got!r}")
