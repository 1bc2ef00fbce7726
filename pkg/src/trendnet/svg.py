"""Minimal deterministic SVG assembly.

No drawing library: renders must be byte-reproducible, so documents are
plain strings with fixed attribute order and fixed numeric formatting
(two decimal places for coordinates).
"""

from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr


def fmt(value: float) -> str:
    """Fixed two-decimal coordinate formatting ('12.00', not '12.0')."""
    return f"{float(value):.2f}"


class SvgDoc:
    def __init__(self, width: int, height: int):
        self.width = int(width)
        self.height = int(height)
        self._parts: list[str] = []

    def elem(self, tag: str, text: str | None = None, **attrs: str) -> None:
        """Append one element; attribute order = keyword order (underscores
        become dashes)."""
        rendered = "".join(
            f" {name.replace('_', '-')}={quoteattr(str(value))}"
            for name, value in attrs.items()
        )
        if text is None:
            self._parts.append(f"<{tag}{rendered}/>")
        else:
            self._parts.append(f"<{tag}{rendered}>{escape(text)}</{tag}>")

    def rect(self, x: float, y: float, w: float, h: float, fill: str, **attrs: str) -> None:
        self.elem("rect", x=fmt(x), y=fmt(y), width=fmt(w), height=fmt(h), fill=fill, **attrs)

    def line(self, x1: float, y1: float, x2: float, y2: float, stroke: str, **attrs: str) -> None:
        self.elem("line", x1=fmt(x1), y1=fmt(y1), x2=fmt(x2), y2=fmt(y2), stroke=stroke, **attrs)

    def circle(self, cx: float, cy: float, r: float, fill: str, **attrs: str) -> None:
        self.elem("circle", cx=fmt(cx), cy=fmt(cy), r=fmt(r), fill=fill, **attrs)

    def polyline(self, points: list[tuple[float, float]], stroke: str, **attrs: str) -> None:
        joined = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)
        self.elem("polyline", points=joined, fill="none", stroke=stroke, **attrs)

    def polygon(self, points: list[tuple[float, float]], fill: str, **attrs: str) -> None:
        joined = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)
        self.elem("polygon", points=joined, fill=fill, **attrs)

    def text(self, x: float, y: float, content: str, **attrs: str) -> None:
        self.elem("text", text=content, x=fmt(x), y=fmt(y), **attrs)

    def desc(self, content: str) -> None:
        self.elem("desc", text=content)

    def to_string(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" '
            f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">'
        )
        return head + "\n" + "\n".join(self._parts) + "\n</svg>\n"
