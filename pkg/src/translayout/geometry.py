"""Axis-aligned boxes and affine matrices in PDF user space.

Coordinates are points with the origin at the bottom-left corner and y
increasing upward, matching native PDF user space.  Matrices use the PDF
row-vector convention: a point ``(x, y)`` maps to
``(a*x + c*y + e, b*x + d*y + f)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Box:
    """Rectangle spanning ``[x, x2] x [y, y2]`` with ``x2 >= x`` and ``y2 >= y``."""

    x: float
    y: float
    x2: float
    y2: float

    def __post_init__(self):
        # Inverted boxes are representable; validation reports them as data.
        for name in ("x", "y", "x2", "y2"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"non-finite box coordinate: {self!r}")
            object.__setattr__(self, name, v)

    @property
    def width(self) -> float:
        return self.x2 - self.x

    @property
    def height(self) -> float:
        return self.y2 - self.y

    def area(self) -> float:
        return self.width * self.height

    def union(self, other: Box) -> Box:
        return Box(
            min(self.x, other.x),
            min(self.y, other.y),
            max(self.x2, other.x2),
            max(self.y2, other.y2),
        )

    def intersects(self, other: Box) -> bool:
        return not (
            self.x2 <= other.x
            or other.x2 <= self.x
            or self.y2 <= other.y
            or other.y2 <= self.y
        )

    def intersection_area(self, other: Box) -> float:
        w = min(self.x2, other.x2) - max(self.x, other.x)
        h = min(self.y2, other.y2) - max(self.y, other.y)
        if w <= 0.0 or h <= 0.0:
            return 0.0
        return w * h

    def contains_point(self, px: float, py: float) -> bool:
        return self.x <= px <= self.x2 and self.y <= py <= self.y2

    def expanded(self, margin: float) -> Box:
        return Box(self.x - margin, self.y - margin, self.x2 + margin, self.y2 + margin)

    def scaled(self, sx: float, sy: float) -> Box:
        return Box(self.x * sx, self.y * sy, self.x2 * sx, self.y2 * sy)

    @staticmethod
    def bounding(points: list[tuple[float, float]]) -> Box:
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        return Box(min(xs), min(ys), max(xs), max(ys))


@dataclass(frozen=True, slots=True)
class Matrix:
    """Affine map ``(x, y) -> (a*x + c*y + e, b*x + d*y + f)``."""

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "e", "f"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"non-finite matrix coefficient: {self!r}")
            object.__setattr__(self, name, v)

    @staticmethod
    def identity() -> Matrix:
        return Matrix(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)

    @staticmethod
    def translation(tx: float, ty: float) -> Matrix:
        return Matrix(1.0, 0.0, 0.0, 1.0, tx, ty)

    @staticmethod
    def scaling(sx: float, sy: float) -> Matrix:
        return Matrix(sx, 0.0, 0.0, sy, 0.0, 0.0)

    def apply(self, x: float, y: float) -> tuple[float, float]:
        return (self.a * x + self.c * y + self.e, self.b * x + self.d * y + self.f)

    def apply_box(self, box: Box) -> Box:
        corners = [
            self.apply(box.x, box.y),
            self.apply(box.x2, box.y),
            self.apply(box.x, box.y2),
            self.apply(box.x2, box.y2),
        ]
        return Box.bounding(corners)

    def determinant(self) -> float:
        return self.a * self.d - self.b * self.c

    def is_degenerate(self) -> bool:
        return self.determinant() == 0.0

    def vertical_scale(self) -> float:
        """Length of the image of the unit y-vector."""
        return math.hypot(self.c, self.d)

    def horizontal_scale(self) -> float:
        return math.hypot(self.a, self.b)

    def inverse(self) -> Matrix:
        det = self.determinant()
        if det == 0.0:
            raise ZeroDivisionError(f"singular matrix: {self!r}")
        ia = self.d / det
        ib = -self.b / det
        ic = -self.c / det
        id_ = self.a / det
        ie = (self.c * self.f - self.d * self.e) / det
        if_ = (self.b * self.e - self.a * self.f) / det
        return Matrix(ia, ib, ic, id_, ie, if_)

    def coefficients(self) -> tuple[float, float, float, float, float, float]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)


def compose_matrix(m: Matrix, ctm: Matrix) -> Matrix:
    """Concatenate ``m`` onto ``ctm``: apply ``m`` first, then ``ctm``.

    Satisfies ``compose_matrix(m, ctm).apply(p) == ctm.apply(*m.apply(*p))``.
    """
    return Matrix(
        m.a * ctm.a + m.b * ctm.c,
        m.a * ctm.b + m.b * ctm.d,
        m.c * ctm.a + m.d * ctm.c,
        m.c * ctm.b + m.d * ctm.d,
        m.e * ctm.a + m.f * ctm.c + ctm.e,
        m.e * ctm.b + m.f * ctm.d + ctm.f,
    )
