"""Line-oriented graph files with 1-based vertex ids.

::

    c free-form comment
    p mwbis <n> <m>
    w <vertex> <weight>      (optional; all vertices or none)
    e <u> <v>

Without ``w`` lines the weights default to vertex degrees (MIVC).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphError, WeightedInstance, build_graph


class GraphFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class GraphFile:
    graph: Graph
    weights: tuple | None
    comments: tuple[str, ...] = ()

    def instance(self, k: int) -> WeightedInstance:
        if self.weights is None:
            return WeightedInstance.degree_weighted(self.graph, k)
        return WeightedInstance(self.graph, self.weights, k)


def _number(tok: str):
    try:
        return int(tok)
    except ValueError:
        return float(tok)


def parse_graph(lines: Iterable[str]) -> GraphFile:
    n = m = None
    edges: list[tuple[int, int]] = []
    weights: dict[int, object] = {}
    comments: list[str] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        tag, *rest = line.split()
        try:
            if tag == "c":
                comments.append(line[1:].strip())
            elif tag == "p":
                if n is not None:
                    raise GraphFormatError(lineno, "duplicate header")
                if len(rest) != 3 or rest[0] != "mwbis":
                    raise GraphFormatError(lineno, "header must be 'p mwbis <n> <m>'")
                n, m = int(rest[1]), int(rest[2])
                if n < 0 or m < 0:
                    raise GraphFormatError(lineno, "negative count in header")
            elif tag in ("e", "w"):
                if n is None:
                    raise GraphFormatError(lineno, f"'{tag}' line before header")
                if len(rest) != 2:
                    raise GraphFormatError(lineno, f"'{tag}' line needs two fields")
                if tag == "e":
                    u, v = int(rest[0]), int(rest[1])
                    for x in (u, v):
                        if not 1 <= x <= n:
                            raise GraphFormatError(lineno, f"vertex {x} outside 1..{n}")
                    if u == v:
                        raise GraphFormatError(lineno, f"self-loop at vertex {u}")
                    edges.append((u - 1, v - 1))
                else:
                    v = int(rest[0])
                    if not 1 <= v <= n:
                        raise GraphFormatError(lineno, f"vertex {v} outside 1..{n}")
                    if v - 1 in weights:
                        raise GraphFormatError(lineno, f"duplicate weight for vertex {v}")
                    weights[v - 1] = _number(rest[1])
            else:
                raise GraphFormatError(lineno, f"unknown line type {tag!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(lineno, f"bad number: {exc}") from None
    if n is None:
        raise GraphFormatError(0, "missing 'p mwbis' header")
    if len(edges) != m:
        raise GraphFormatError(0, f"header declares {m} edges, found {len(edges)}")
    if weights and len(weights) != n:
        raise GraphFormatError(0, f"weights given for {len(weights)} of {n} vertices")
    try:
        graph = build_graph(n, edges)
    except GraphError as exc:
        raise GraphFormatError(0, str(exc)) from None
    w = tuple(weights[v] for v in range(n)) if weights else None
    return GraphFile(graph, w, tuple(comments))


def read_graph(path: str | Path) -> GraphFile:
    with open(path) as fh:
        return parse_graph(fh)


def format_graph(graph: Graph, weights: Iterable | None = None,
                 comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p mwbis {graph.n} {graph.m}")
    if weights is not None:
        out.extend(f"w {v + 1} {w}" for v, w in enumerate(weights))
    out.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges())
    return "\n".join(out) + "\n"


def write_graph(path: str | Path, graph: Graph, weights: Iterable | None = None,
                comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_graph(graph, weights, comments))
