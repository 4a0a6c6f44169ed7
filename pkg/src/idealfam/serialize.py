"""Plain-text family files.

Format::

    n=3
    # comment
    000
    100
    110

Line ``j`` characters are vertices ``0..n-1`` left to right; ``1`` marks
membership.  Writing compresses the ground set to labels ``0..n-1`` in
ascending order, so a minor (which keeps its parent's labels) is written
relabelled; a ``# vertices:`` comment records the original labels.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .core import FamilyError, SetFamily, full_ground


class FormatError(FamilyError):
    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


def parse_family(text: str | Iterable[str]) -> SetFamily:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    n = None
    edges: list[int] = []
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise FormatError("expected header 'n=<k>'", lineno)
            try:
                n = int(line[2:])
            except ValueError:
                raise FormatError(f"bad vertex count {line[2:]!r}", lineno) from None
            if n < 1:
                raise FormatError("ground set must have at least one vertex", lineno)
            continue
        if len(line) != n or set(line) - {"0", "1"}:
            raise FormatError(f"expected a 0/1 string of length {n}, got {line!r}", lineno)
        e = sum(1 << j for j, c in enumerate(line) if c == "1")
        if e in seen:
            raise FormatError(f"duplicate edge (first on line {seen[e]})", lineno)
        seen[e] = lineno
        edges.append(e)
    if n is None:
        raise FormatError("missing header 'n=<k>'")
    try:
        return SetFamily(full_ground(n), tuple(edges))
    except FamilyError as exc:
        raise FormatError(str(exc)) from None


def read_family(path_or_file: str | TextIO) -> SetFamily:
    if hasattr(path_or_file, "read"):
        return parse_family(path_or_file.read())
    with open(path_or_file) as fh:
        return parse_family(fh.read())


def format_family(F: SetFamily, comments: Iterable[str] = ()) -> str:
    labels = F.vertices
    out = [f"n={len(labels)}"]
    out.extend(f"# {c}" for c in comments)
    if labels != list(range(len(labels))):
        out.append("# vertices: " + " ".join(map(str, labels)))
    for e in F.edges:
        out.append("".join("1" if (e >> v) & 1 else "0" for v in labels))
    return "\n".join(out) + "\n"


def relabel_compact(F: SetFamily) -> SetFamily:
    """The same family with its ground set renamed to ``0..n-1`` (order kept)."""
    labels = F.vertices
    edges = tuple(sum(1 << i for i, v in enumerate(labels) if (e >> v) & 1) for e in F.edges)
    return SetFamily(full_ground(len(labels)), edges)


def write_family(F: SetFamily, path: str, comments: Iterable[str] = ()) -> None:
    with open(path, "w") as fh:
        fh.write(format_family(F, comments))

