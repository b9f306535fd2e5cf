"""Read and write graphs as edge-list or DIMACS text.

Edge-list format: first line ``n m``, then ``m`` lines ``u v`` with
0-based ids.  DIMACS format: ``c`` comment lines, one ``p edge n m``
line, then ``m`` lines ``e u v`` with 1-based ids.
"""

from __future__ import annotations

from .graph import Graph

FORMATS = ("auto", "edgelist", "dimacs")


class ParseError(ValueError):
    """Input text rejected; carries the offending line number and content."""

    def __init__(self, message: str, line_no: int | None = None, line: str = ""):
        self.line_no = line_no
        self.line = line
        if line_no is not None:
            message = f"line {line_no}: {message}: {line.strip()!r}"
        super().__init__(message)


def detect_format(text: str) -> str:
    """Guess the format from the first non-blank, non-comment token."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        token = line.split()[0]
        if token in ("c", "p", "e"):
            return "dimacs"
        if token.lstrip("-").isdigit():
            return "edgelist"
        raise ParseError(f"unrecognized leading token {token!r}", 1, raw)
    raise ParseError("empty input")


def parse_edgelist(text: str) -> Graph:
    lines = text.splitlines()
    header = None
    edges: list[tuple[int, int]] = []
    declared_m = 0
    for idx, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError("expected header 'n m'", idx, raw)
            try:
                n, declared_m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("non-integer header", idx, raw) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative count in header", idx, raw)
            header = (n, declared_m)
            continue
        if len(parts) != 2:
            raise ParseError("expected edge 'u v'", idx, raw)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("non-integer edge endpoint", idx, raw) from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range [0, {n})", idx, raw)
        if u == v:
            raise ParseError("self-loop", idx, raw)
        edges.append((u, v))
    if header is None:
        raise ParseError("empty input")
    if len(edges) != declared_m:
        raise ParseError(
            f"declared {declared_m} edges but found {len(edges)}",
            len(lines),
            lines[-1] if lines else "",
        )
    try:
        return Graph(header[0], edges)
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def parse_dimacs(text: str) -> Graph:
    lines = text.splitlines()
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    for idx, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", idx, raw)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("expected 'p edge n m'", idx, raw)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer problem line", idx, raw) from None
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", idx, raw)
            if len(parts) != 3:
                raise ParseError("expected 'e u v'", idx, raw)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("non-integer edge endpoint", idx, raw) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range [1, {n}]", idx, raw)
            if u == v:
                raise ParseError("self-loop", idx, raw)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line type {parts[0]!r}", idx, raw)
    if n is None:
        raise ParseError("missing problem line")
    if len(edges) != declared_m:
        raise ParseError(
            f"declared {declared_m} edges but found {len(edges)}",
            len(lines),
            lines[-1] if lines else "",
        )
    try:
        return Graph(n, edges)
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def load_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if fmt == "auto":
        fmt = detect_format(text)
    return parse_edgelist(text) if fmt == "edgelist" else parse_dimacs(text)


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
