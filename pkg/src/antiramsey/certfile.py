"""The ``rbcert-v1`` certificate text format.

One JSON object, keys sorted, no insignificant whitespace beyond single
spaces after separators, terminated by a newline::

    {"claimed_colors": 5, "construction_tag": "cliques=3,2", "edge_colors": [...],
     "format": "rbcert-v1", "n": 5, "target": "bull"}

``edge_colors`` lists one color per edge of K_n in edge-index order and must
already be in restricted-growth form. ``target`` is a catalog tag or a graph
literal such as ``5:0-1,0-2,1-2,1-3,2-4``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .coloring import EdgeColoring
from .constructions import Certificate
from .embeddings import num_edges
from .graphs import graph_label, resolve

FORMAT = "rbcert-v1"
FIELDS = ("claimed_colors", "construction_tag", "edge_colors", "format", "n", "target")


class CertificateFormatError(ValueError):
    pass


def dumps(cert: Certificate) -> str:
    record = {
        "claimed_colors": cert.claimed_colors,
        "construction_tag": cert.construction_tag,
        "edge_colors": list(cert.coloring.colors),
        "format": FORMAT,
        "n": cert.n,
        "target": graph_label(cert.target),
    }
    return json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n"


def _field(record, name, kind):
    if name not in record:
        raise CertificateFormatError(f"field {name!r}: missing")
    value = record[name]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise CertificateFormatError(f"field {name!r}: expected an integer, got {value!r}")
    if kind is str and not isinstance(value, str):
        raise CertificateFormatError(f"field {name!r}: expected a string, got {value!r}")
    if kind is list and not isinstance(value, list):
        raise CertificateFormatError(f"field {name!r}: expected a list, got {type(value).__name__}")
    return value


def loads(text: str) -> Certificate:
    """Parse a certificate. The claimed color count is not checked here; see ``Certificate.verify``."""
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(record, dict):
        raise CertificateFormatError("line 1: expected a JSON object")
    unknown = sorted(set(record) - set(FIELDS))
    if unknown:
        raise CertificateFormatError(f"unknown field(s): {', '.join(unknown)}")
    if _field(record, "format", str) != FORMAT:
        raise CertificateFormatError(f"field 'format': expected {FORMAT!r}, got {record['format']!r}")
    n = _field(record, "n", int)
    if not 1 <= n <= 12:
        raise CertificateFormatError(f"field 'n': {n} outside 1..12")
    colors = _field(record, "edge_colors", list)
    if len(colors) != num_edges(n):
        raise CertificateFormatError(
            f"field 'edge_colors': expected {num_edges(n)} entries for n={n}, got {len(colors)}")
    for i, c in enumerate(colors):
        if isinstance(c, bool) or not isinstance(c, int):
            raise CertificateFormatError(f"field 'edge_colors': entry {i} is not an integer")
    try:
        coloring = EdgeColoring(n, tuple(colors))
    except ValueError as exc:
        raise CertificateFormatError(f"field 'edge_colors': {exc}") from None
    try:
        target = resolve(_field(record, "target", str))
    except ValueError as exc:
        raise CertificateFormatError(f"field 'target': {exc}") from None
    if target.order > n:
        raise CertificateFormatError(f"field 'target': {target.order} vertices exceed n={n}")
    claimed = _field(record, "claimed_colors", int)
    tag = _field(record, "construction_tag", str)
    return Certificate(n, target, coloring, claimed, tag)


def write(cert: Certificate, path) -> None:
    Path(path).write_bytes(dumps(cert).encode("utf-8"))


def read(path) -> Certificate:
    return loads(Path(path).read_bytes().decode("utf-8"))
