from typing import Iterable, List, Optional, Set, TextIO, Tuple, Union

from loguru import logger

from core.errors import GraphParseError
from core.graphs.model import Graph


def _lines(text: Union[str, TextIO, Iterable[str]]) -> Iterable[str]:
    if isinstance(text, str):
        return text.splitlines()
    return text


def parse_dimacs(text: Union[str, TextIO, Iterable[str]]) -> Graph:
    """Parse DIMACS .col ("p edge n m", "e u v" 1-based, "c" comments).

    Duplicate edges collapse; self-loops and out-of-range vertices raise GraphParseError.
    """
    n: Optional[int] = None
    declared_m = 0
    edges: Set[Tuple[int, int]] = set()
    edge_lines = 0
    for line_no, line in enumerate(_lines(text), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphParseError("duplicate header", line_no, line)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphParseError("malformed header", line_no, line)
            try:
                n, declared_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise GraphParseError("malformed header", line_no, line) from None
            if n < 0 or declared_m < 0:
                raise GraphParseError("negative counts in header", line_no, line)
        elif kind == "e":
            if n is None:
                raise GraphParseError("edge before header", line_no, line)
            if len(tokens) != 3:
                raise GraphParseError("malformed edge line", line_no, line)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphParseError("malformed edge line", line_no, line) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(
                    f"vertex index out of range 1..{n}", line_no, line
                )
            if u == v:
                raise GraphParseError("self-loop", line_no, line)
            edges.add((min(u, v) - 1, max(u, v) - 1))
            edge_lines += 1
        else:
            raise GraphParseError(f"unknown line type {kind!r}", line_no, line)
    if n is None:
        raise GraphParseError("missing 'p edge n m' header")
    if edge_lines != declared_m or len(edges) != edge_lines:
        logger.debug(
            f"Header declares {declared_m} edges, read {edge_lines} lines, {len(edges)} distinct"
        )
    return Graph.from_edges(n, edges)


def serialize_dimacs(G: Graph, comments: Optional[List[str]] = None) -> str:
    """Bit-exact DIMACS text: header, then "e u v" with u < v ascending, 1-based."""
    lines = [f"c {comment}" for comment in comments or []]
    lines.append(f"p edge {G.n} {G.num_edges}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def read_dimacs(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as f:
        graph = parse_dimacs(f)
    logger.info(f"Loaded {path}: {graph.n} vertices, {graph.num_edges} edges")
    return graph


def write_dimacs(G: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_dimacs(G))
    logger.info(f"Wrote {path}: {G.n} vertices, {G.num_edges} edges")
