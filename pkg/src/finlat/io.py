"""Text formats: "poset v1" files, doubling scripts, and DOT export.

A poset file starts with ``poset <n>`` and lists one cover per line as
``a < b`` with 0-based indices.  ``#`` starts a comment anywhere; blank
lines are ignored.  Listed pairs that are transitively implied are not an
error: construction reduces them away silently.
"""

from __future__ import annotations

from pathlib import Path

from .canonical import SimplicialComplex
from .core_label import CoreLabelOrder
from .errors import ParseError
from .lattice import Lattice
from .poset import Poset
from .constructions import Step


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_poset(text: str) -> Poset:
    lines = list(_logical_lines(text))
    if not lines:
        raise ParseError("empty poset file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "poset":
        raise ParseError(f"expected 'poset <n>', got {header!r}", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad element count {parts[1]!r}", lineno) from None
    covers = []
    for lineno, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3 or tokens[1] != "<":
            raise ParseError(f"expected 'a < b', got {line!r}", lineno)
        try:
            covers.append((int(tokens[0]), int(tokens[2])))
        except ValueError:
            raise ParseError(f"bad indices in {line!r}", lineno) from None
    return Poset.from_covers(n, covers)


def load_poset(path) -> Poset:
    return parse_poset(Path(path).read_text())


def format_poset(poset: Poset) -> str:
    lines = [f"poset {poset.n}"]
    lines.extend(f"{a} < {b}" for a, b in poset.covers)
    return "\n".join(lines) + "\n"


def parse_script(text: str) -> list[Step]:
    """One doubling step per line: ``interval a b``, ``filter a``, ``set i j ...``."""
    steps: list[Step] = []
    for lineno, line in _logical_lines(text):
        tokens = line.split()
        try:
            if tokens[0] == "interval" and len(tokens) == 3:
                steps.append(("interval", int(tokens[1]), int(tokens[2])))
            elif tokens[0] == "filter" and len(tokens) == 2:
                steps.append(("filter", int(tokens[1])))
            elif tokens[0] == "set":
                steps.append(("set", frozenset(int(t) for t in tokens[1:])))
            else:
                raise ParseError(f"bad step {line!r}", lineno)
        except ValueError:
            raise ParseError(f"bad indices in {line!r}", lineno) from None
    return steps


def load_script(path) -> list[Step]:
    return parse_script(Path(path).read_text())


def format_script(steps) -> str:
    out = []
    for step in steps:
        if step[0] == "interval":
            out.append(f"interval {step[1]} {step[2]}")
        elif step[0] == "filter":
            out.append(f"filter {step[1]}")
        else:
            out.append("set " + " ".join(str(i) for i in sorted(step[1])))
    return "\n".join(out) + "\n"


def format_core_label_order(clo: CoreLabelOrder) -> str:
    """Poset v1 block followed by one ``elem <i> psi <labels>`` line per node."""
    lines = [format_poset(clo.poset).rstrip("\n")]
    for i, labels in enumerate(clo.label_sets):
        rendered = " ".join(str(v) for v in sorted(labels))
        suffix = f" {rendered}" if rendered else ""
        lines.append(
            f"elem {i} psi{suffix}  # lattice element {clo.lattice_elements[i]}"
        )
    return "\n".join(lines) + "\n"


def format_complex(complex_: SimplicialComplex) -> str:
    """One face per line as space-separated vertex labels; the empty face is
    an empty line (always first)."""
    return "\n".join(
        " ".join(str(v) for v in sorted(face)) for face in complex_.sorted_faces()
    ) + "\n"


# -- DOT -------------------------------------------------------------------------


def dot_hasse(lat: Lattice, edge_labels: dict | None = None) -> str:
    """Cover diagram as DOT, optionally annotating covers with their labels."""
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=circle];"]
    for i in range(lat.n):
        lines.append(f"  {i};")
    for a, b in lat.covers:
        if edge_labels is not None:
            lines.append(f'  {a} -> {b} [label="{edge_labels[(a, b)]}"];')
        else:
            lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_poset(poset: Poset, node_labels: list[str] | None = None) -> str:
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=box];"]
    for i in range(poset.n):
        label = node_labels[i] if node_labels else str(i)
        lines.append(f'  {i} [label="{label}"];')
    for a, b in poset.covers:
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_complex(complex_: SimplicialComplex) -> str:
    """The 1-skeleton as an undirected graph; larger faces become comments."""
    lines = ["graph complex {"]
    for v in complex_.vertices:
        lines.append(f"  {v};")
    for face in complex_.sorted_faces():
        if len(face) == 2:
            a, b = sorted(face)
            lines.append(f"  {a} -- {b};")
        elif len(face) > 2:
            lines.append("  // face: " + " ".join(str(v) for v in sorted(face)))
    lines.append("}")
    return "\n".join(lines) + "\n"
