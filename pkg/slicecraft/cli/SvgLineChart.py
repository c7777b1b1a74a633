# -*- coding: utf-8 -*-
from typing import List, Sequence, Tuple

COLORS = ('#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd', '#8c564b')


class SvgLineChart:
    """
    Minimal self-contained SVG line chart with one polyline per series.
    """

    def __init__(self, title: str, x_label: str, y_label: str, width: int = 640, height: int = 400):
        self.__title = title
        self.__x_label = x_label
        self.__y_label = y_label
        self.__width = width
        self.__height = height
        self.__series: List[Tuple[str, List[float], List[float]]] = []

    def add_series(self, label: str, xs: Sequence[float], ys: Sequence[float]):
        self.__series.append((label, list(xs), list(ys)))

    def render(self) -> str:
        margin = 60
        w, h = self.__width, self.__height
        xs = [x for _, sx, _ in self.__series for x in sx] or [0.0]
        ys = [y for _, _, sy in self.__series for y in sy] or [0.0]
        x_lo, x_hi = min(xs), max(xs)
        y_lo, y_hi = min(ys), max(ys)
        if x_hi == x_lo:
            x_hi = x_lo + 1.0
        if y_hi == y_lo:
            y_hi = y_lo + 1.0

        def px(x: float) -> float:
            return margin + (x - x_lo) / (x_hi - x_lo) * (w - 2 * margin)

        def py(y: float) -> float:
            return h - margin - (y - y_lo) / (y_hi - y_lo) * (h - 2 * margin)

        parts = [
            '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" viewBox="0 0 %d %d">' % (w, h, w, h),
            '<rect width="100%" height="100%" fill="white"/>',
            '<text x="%d" y="24" font-size="16" text-anchor="middle">%s</text>' % (w // 2, self.__title),
            '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="black"/>' % (margin, h - margin, w - margin, h - margin),
            '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="black"/>' % (margin, margin, margin, h - margin),
            '<text x="%d" y="%d" font-size="12" text-anchor="middle">%s</text>' % (w // 2, h - 16, self.__x_label),
            '<text x="16" y="%d" font-size="12" text-anchor="middle" transform="rotate(-90 16 %d)">%s</text>'
            % (h // 2, h // 2, self.__y_label),
            '<text x="%d" y="%d" font-size="10" text-anchor="middle">%.3g</text>' % (margin, h - margin + 14, x_lo),
            '<text x="%d" y="%d" font-size="10" text-anchor="middle">%.3g</text>' % (w - margin, h - margin + 14, x_hi),
            '<text x="%d" y="%d" font-size="10" text-anchor="end">%.3g</text>' % (margin - 4, h - margin, y_lo),
            '<text x="%d" y="%d" font-size="10" text-anchor="end">%.3g</text>' % (margin - 4, margin + 4, y_hi)
        ]
        for i, (label, sx, sy) in enumerate(self.__series):
            color = COLORS[i % len(COLORS)]
            points = ' '.join('%.2f,%.2f' % (px(x), py(y)) for x, y in zip(sx, sy))
            parts.append('<polyline fill="none" stroke="%s" stroke-width="2" points="%s"/>' % (color, points))
            for x, y in zip(sx, sy):
                parts.append('<circle cx="%.2f" cy="%.2f" r="3" fill="%s"/>' % (px(x), py(y), color))
            parts.append('<text x="%d" y="%d" font-size="12" fill="%s">%s</text>'
                         % (w - margin + 4, margin + 16 * i, color, label))
        parts.append('</svg>')
        return '\n'.join(parts) + '\n'
