"""Line-based text formats for groups, graphs, Cayley specs and certificates.

group:        ``degree N`` then one generator per line as an image list
graph:        ``vertices N`` then one ``u v`` edge per line with u < v
cayley spec:  ``group: <path>`` and ``S: i j k`` (indices into the sorted element list)
certificate:  ``cycle`` or ``path`` then the vertex sequence on one line

Blank lines and lines starting with ``#`` are ignored everywhere.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .graphcore import CayleySpec, Graph, GraphError
from .lifting import HamiltonCertificate
from .permgroup import Permutation, PermGroup, PermGroupError


class FormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None, source: str = ""):
        where = f"{source}:{lineno}: " if lineno is not None else (f"{source}: " if source else "")
        super().__init__(where + message)
        self.lineno = lineno


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield i, line


def _ints(line: str, lineno: int, source: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {line!r}", lineno, source) from None


def _header(lines: list[tuple[int, str]], keyword: str, source: str) -> int:
    if not lines:
        raise FormatError(f"missing '{keyword} N' header", 1, source)
    lineno, line = lines[0]
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword:
        raise FormatError(f"expected '{keyword} N', got {line!r}", lineno, source)
    value = _ints(parts[1], lineno, source)[0]
    if value < 1:
        raise FormatError(f"{keyword} must be positive", lineno, source)
    return value


def parse_group(text: str, source: str = "<group>") -> PermGroup:
    lines = list(_lines(text))
    degree = _header(lines, "degree", source)
    gens = []
    for lineno, line in lines[1:]:
        images = _ints(line, lineno, source)
        if len(images) != degree:
            raise FormatError(f"generator has {len(images)} images, degree is {degree}", lineno, source)
        try:
            gens.append(Permutation(tuple(images)))
        except PermGroupError as exc:
            raise FormatError(str(exc), lineno, source) from None
    return PermGroup(degree, gens)


def format_group(g: PermGroup) -> str:
    out = [f"degree {g.degree}"]
    out += [" ".join(map(str, p.images)) for p in g.generators]
    return "\n".join(out) + "\n"


def parse_graph(text: str, source: str = "<graph>") -> Graph:
    lines = list(_lines(text))
    n = _header(lines, "vertices", source)
    edges = []
    for lineno, line in lines[1:]:
        pair = _ints(line, lineno, source)
        if len(pair) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", lineno, source)
        u, v = pair
        if not (0 <= u < v < n):
            raise FormatError(f"edge {u} {v} must satisfy 0 <= u < v < {n}", lineno, source)
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc), source=source) from None


def format_graph(x: Graph) -> str:
    out = [f"vertices {x.vertex_count}"] + [f"{u} {v}" for u, v in x.edges()]
    return "\n".join(out) + "\n"


def parse_cayley(text: str, base: Path | None = None, source: str = "<cayley>") -> CayleySpec:
    group = None
    indices = None
    for lineno, line in _lines(text):
        key, _, value = line.partition(":")
        key = key.strip()
        if key == "group":
            path = Path(value.strip())
            if base is not None and not path.is_absolute():
                path = base / path
            try:
                group = parse_group(path.read_text(), str(path))
            except OSError as exc:
                raise FormatError(f"cannot read group file: {exc}", lineno, source) from None
        elif key == "S":
            indices = _ints(value, lineno, source)
        else:
            raise FormatError(f"unknown key {key!r}", lineno, source)
    if group is None or indices is None:
        raise FormatError("need both 'group:' and 'S:' lines", source=source)
    elems = group.elements()
    bad = [i for i in indices if not 0 <= i < len(elems)]
    if bad:
        raise FormatError(f"element indices out of range: {bad}", source=source)
    try:
        return CayleySpec(group, tuple(elems[i] for i in indices))
    except GraphError as exc:
        raise FormatError(str(exc), source=source) from None


def parse_certificate(text: str, source: str = "<certificate>") -> HamiltonCertificate:
    lines = list(_lines(text))
    if not lines or lines[0][1] not in ("cycle", "path"):
        raise FormatError("first line must be 'cycle' or 'path'", lines[0][0] if lines else 1, source)
    kind = lines[0][1]
    if len(lines) != 2:
        raise FormatError("expected exactly one vertex line", lines[-1][0], source)
    lineno, line = lines[1]
    return HamiltonCertificate(kind, tuple(_ints(line, lineno, source)))


def format_certificate(c: HamiltonCertificate) -> str:
    return f"{c.kind}\n{' '.join(map(str, c.vertices))}\n"
