from .metrics import (
    Base14Metrics,
    FallbackMetrics,
    FontMetrics,
    TrueTypeMetrics,
    base14_name,
    metrics_for_base14,
)
from .truetype import TrueTypeFont

__all__ = [
    "Base14Metrics",
    "FallbackMetrics",
    "FontMetrics",
    "TrueTypeFont",
    "TrueTypeMetrics",
    "base14_name",
    "metrics_for_base14",
]
