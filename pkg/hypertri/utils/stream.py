import re
import sys
from pathlib import Path
from typing import BinaryIO, Iterator, Optional, Union

from ..core.exceptions import StreamParseError
from ..core.hypergraph import MAX_VERTEX_ID, Hyperedge, Hypergraph
from .logger import logger

_SEPARATOR = re.compile(r"[ \t]+")
_TOKEN = re.compile(r"[0-9]+")


class StreamSource:
    """
    Line-per-hyperedge input: a file path, or '-' for standard input.
    Tracks raw bytes consumed (for throughput) and the current line number.
    """

    def __init__(self, origin: Union[str, Path]):
        self.origin = str(origin)
        self.bytes_read = 0
        self.line_number = 0

    def _open(self) -> BinaryIO:
        if self.origin == "-":
            return sys.stdin.buffer
        return open(self.origin, "rb")

    def lines(self) -> Iterator[str]:
        handle = self._open()
        try:
            for raw in handle:
                self.bytes_read += len(raw)
                self.line_number += 1
                try:
                    yield raw.decode("utf-8")
                except UnicodeDecodeError as e:
                    raise StreamParseError(self.line_number, f"not valid UTF-8 ({e.reason})")
        finally:
            if handle is not sys.stdin.buffer:
                handle.close()


def parse_line(text: str, line_number: int) -> Optional[list[int]]:
    """Vertex ids on one line, or None for blank and comment lines."""
    text = text.rstrip("\r\n").strip(" \t")
    if not text or text.startswith("#"):
        return None
    vertices = []
    for token in _SEPARATOR.split(text):
        if not _TOKEN.fullmatch(token):
            raise StreamParseError(line_number, f"malformed vertex id {token!r}")
        value = int(token)
        if value > MAX_VERTEX_ID:
            raise StreamParseError(line_number, f"vertex id {value} does not fit in 32 bits")
        vertices.append(value)
    return vertices


def parse_stream(source: StreamSource) -> Iterator[Hyperedge]:
    """
    Lazily yield hyperedges in file order, 1-based arrival indexes.
    Memory use is bounded by the longest line.
    """
    arrival = 0
    for text in source.lines():
        vertices = parse_line(text, source.line_number)
        if vertices is None:
            continue
        arrival += 1
        edge = Hyperedge.build(arrival, vertices)
        if len(edge) != len(vertices):
            logger.warning("Duplicate vertex ids removed", line=source.line_number,
                           duplicates=len(vertices) - len(edge))
        yield edge


def read_hypergraph(origin: Union[str, Path]) -> Hypergraph:
    return Hypergraph(tuple(parse_stream(StreamSource(origin))))


def write_hypergraph(h: Hypergraph, path: Union[str, Path, None] = None):
    """Write the line format; to stdout when ``path`` is None or '-'."""
    lines = "".join(" ".join(str(v) for v in e.vertices) + "\n" for e in h)
    if path is None or str(path) == "-":
        sys.stdout.write(lines)
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(lines, encoding="utf-8")
