"""JSON shape documents.

Two kinds exist::

    {"kind": "fourier", "coeffs": [{"k": 3, "a": ..., "b": ...}, ...], "meta": {...}}
    {"kind": "reuleaux_polygon", "vertices": [[x, y], ...], "meta": {...}}

Numbers are written with 17 significant digits so doubles round-trip
exactly, and the layout is fixed so identical shapes give identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import __version__
from .errors import ReuleauxError
from .shapes import ReuleauxPolygon, canonical_vertex_order, reuleaux_from_vertices
from .support import FourierWidthFunction, PiecewiseArcFunction, Shape, as_shape

GENERATOR = "reuleaux"


class DocumentError(ReuleauxError):
    exit_code = 1


def _num(x: float) -> str:
    return format(float(x), ".17g")


def serialize(shape, generator: str = GENERATOR) -> str:
    """Canonical document text for a Fourier shape or a Reuleaux polygon."""
    vertices = None
    if isinstance(shape, ReuleauxPolygon):
        label, rep, vertices = shape.label, shape.support, shape.vertices
    else:
        s = as_shape(shape)
        label, rep = s.label, s.rep
    meta = (
        f'  "meta": {{"label": {json.dumps(label)}, '
        f'"generator": {json.dumps(generator)}, "version": {json.dumps(__version__)}}},\n'
    )
    if isinstance(rep, FourierWidthFunction):
        rows = [f'    {{"k": {k}, "a": {_num(a)}, "b": {_num(b)}}}' for k, a, b in rep.terms]
        body = '  "coeffs": [' + ("\n" + ",\n".join(rows) + "\n  " if rows else "") + "]\n"
        kind = "fourier"
    elif isinstance(rep, PiecewiseArcFunction):
        if vertices is None:
            vertices = canonical_vertex_order(rep.vertices)
        rows = [f"    [{_num(x)}, {_num(y)}]" for x, y in vertices]
        body = '  "vertices": [\n' + ",\n".join(rows) + "\n  ]\n"
        kind = "reuleaux_polygon"
    else:
        raise TypeError(f"cannot serialize {type(rep).__name__}")
    return f'{{\n  "kind": "{kind}",\n' + meta + body + "}\n"


def parse(text: str):
    """Rebuild a shape from document text.

    Returns a :class:`ReuleauxPolygon` for polygon documents (validated) and
    a :class:`Shape` for Fourier documents.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not a JSON document: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    label = str((doc.get("meta") or {}).get("label", ""))
    kind = doc.get("kind")
    try:
        if kind == "fourier":
            terms = [(int(c["k"]), float(c["a"]), float(c["b"])) for c in doc["coeffs"]]
            return Shape(FourierWidthFunction(sorted(terms)), label)
        if kind == "reuleaux_polygon":
            verts = [(float(x), float(y)) for x, y in doc["vertices"]]
            return reuleaux_from_vertices(verts, label=label)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ReuleauxError):
            raise
        raise DocumentError(f"malformed {kind} document: {exc}") from exc
    raise DocumentError(f"unknown document kind {kind!r}")


def load(path) -> Shape | ReuleauxPolygon:
    return parse(Path(path).read_text())


def save(shape, path) -> None:
    Path(path).write_text(serialize(shape))
