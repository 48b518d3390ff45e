"""JSON shape files.

A shape file is a JSON object::

    {
      "kind": "ellipse",
      "params": {"a": 1, "b": 2},
      "center": [0, 0],               # optional
      "options": {"grid": 4096, "tol": 1e-10}   # optional
    }

``kind`` is one of the keys of :data:`SCHEMA`.  Polygons take their
vertex list either as ``params.vertices`` or as a top-level ``vertices``.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Optional

from . import shapes

_POINTS = "points"

# kind -> {param: (type, required)}
SCHEMA = {
    "disk": {"R": (float, False)},
    "ellipse": {"a": (float, True), "b": (float, True)},
    "regular_polygon": {"n": (int, True), "circumradius": (float, False)},
    "rectangle": {"w": (float, True), "h": (float, True)},
    "square": {"side": (float, False)},
    "triangle": {"points": (_POINTS, True), "center_rule": (str, False)},
    "rhombus": {"p": (float, True), "q": (float, True)},
    "polygon": {"vertices": (_POINTS, True)},
    "cupid": {"c": (float, True)},
    "stadium": {"eps": (float, True)},
    "octagon": {"q": (float, True)},
}
FIXED_CENTER = {"cupid", "stadium", "octagon"}


class ShapeFileError(ValueError):
    """Unreadable or invalid shape file; the message carries the location."""


@dataclass
class ShapeFile:
    kind: str
    params: dict
    center: Optional[tuple] = None
    options: dict = field(default_factory=dict)

    def spec(self):
        """The shape object described by the file."""
        p = dict(self.params)
        c = self.center
        if self.kind == "square":
            side = p.get("side", 2.0)
            return shapes.Rectangle(w=side, h=side, center=c)
        if self.kind == "polygon":
            return shapes.Polygon(points=tuple(map(tuple, p["vertices"])), center=c)
        if self.kind == "triangle":
            p["points"] = tuple(map(tuple, p["points"]))
        cls = shapes.KINDS[self.kind]
        if self.kind in FIXED_CENTER:
            return cls(**p)
        return cls(center=c, **p)

    def with_param(self, name, value):
        p = dict(self.params)
        p[name] = value
        return ShapeFile(self.kind, p, self.center, dict(self.options))


def _line_of(text, key):
    if text is None:
        return None
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _where(source, text, key):
    line = _line_of(text, key)
    loc = f"{source}:{line}" if line else source
    return f"{loc}: field {key!r}"


def _coerce(value, typ, where):
    if typ is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ShapeFileError(f"{where}: expected a number, got {value!r}")
        if not math.isfinite(value):
            raise ShapeFileError(f"{where}: must be finite")
        return float(value)
    if typ is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ShapeFileError(f"{where}: expected an integer, got {value!r}")
        return value
    if typ is str:
        if not isinstance(value, str):
            raise ShapeFileError(f"{where}: expected a string, got {value!r}")
        return value
    # list of [x, y]
    if not isinstance(value, list) or not value:
        raise ShapeFileError(f"{where}: expected a list of [x, y] points")
    out = []
    for i, pt in enumerate(value):
        if (not isinstance(pt, list) or len(pt) != 2
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in pt)):
            raise ShapeFileError(f"{where}[{i}]: expected [x, y], got {pt!r}")
        out.append((float(pt[0]), float(pt[1])))
    return out


def parse_shape(data, *, source="<shape>", text=None) -> ShapeFile:
    """Validate a decoded JSON document."""
    if not isinstance(data, dict):
        raise ShapeFileError(f"{source}: top level must be a JSON object")
    unknown = set(data) - {"kind", "params", "center", "options", "vertices"}
    if unknown:
        k = sorted(unknown)[0]
        raise ShapeFileError(f"{_where(source, text, k)}: unknown key")
    kind = data.get("kind")
    if kind not in SCHEMA:
        raise ShapeFileError(
            f"{_where(source, text, 'kind')}: expected one of {sorted(SCHEMA)}, got {kind!r}"
        )
    raw = data.get("params", {})
    if not isinstance(raw, dict):
        raise ShapeFileError(f"{_where(source, text, 'params')}: expected an object")
    raw = dict(raw)
    if "vertices" in data:
        if kind != "polygon":
            raise ShapeFileError(f"{_where(source, text, 'vertices')}: only for kind 'polygon'")
        raw.setdefault("vertices", data["vertices"])

    schema = SCHEMA[kind]
    params = {}
    for name, value in raw.items():
        if name not in schema:
            raise ShapeFileError(
                f"{_where(source, text, name)}: not a parameter of {kind!r} "
                f"(expected {sorted(schema)})"
            )
        params[name] = _coerce(value, schema[name][0], _where(source, text, name))
    for name, (_, required) in schema.items():
        if required and name not in params:
            raise ShapeFileError(f"{source}: kind {kind!r} needs parameter {name!r}")

    center = data.get("center")
    if center is not None:
        if kind in FIXED_CENTER:
            raise ShapeFileError(
                f"{_where(source, text, 'center')}: {kind!r} is always centered at its symmetry center"
            )
        center = tuple(_coerce([center], _POINTS, _where(source, text, "center"))[0])

    options = data.get("options", {})
    if not isinstance(options, dict):
        raise ShapeFileError(f"{_where(source, text, 'options')}: expected an object")
    opts = {}
    for name, value in options.items():
        if name == "grid":
            v = _coerce(value, int, _where(source, text, name))
            if v < 16:
                raise ShapeFileError(f"{_where(source, text, name)}: grid must be >= 16")
            opts[name] = v
        elif name == "tol":
            v = _coerce(value, float, _where(source, text, name))
            if not v > 0:
                raise ShapeFileError(f"{_where(source, text, name)}: tol must be positive")
            opts[name] = v
        else:
            raise ShapeFileError(f"{_where(source, text, name)}: unknown option")

    sf = ShapeFile(kind, params, center, opts)
    try:
        sf.spec()
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ShapeFileError):
            raise
        from .geometry import GeometryError

        if isinstance(exc, GeometryError):
            return sf  # geometric validity is judged when the boundary is built
        raise ShapeFileError(f"{source}: {exc}") from None
    return sf


def loads(text, source="<string>") -> ShapeFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ShapeFileError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return parse_shape(data, source=source, text=text)


def load(path) -> ShapeFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ShapeFileError(f"{path}: {exc.strerror or exc}") from None
    return loads(text, source=str(path))
