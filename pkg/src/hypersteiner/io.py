"""Text formats: instance files, tree files and DOT export.

Instance files start with a header line ``msa <m>`` followed by one
terminal per line as an m-character 0/1 string (character 0 leftmost).
Tree files start with ``tree <m>`` followed by one ``parent child`` pair of
bit strings per line.  Lines starting with '#' are comments.
"""

from __future__ import annotations

from .instance import Arborescence, RawInstance
from .nodes import Node


class ParseError(ValueError):
    pass


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def parse_instance(text: str) -> RawInstance:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty instance file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "msa":
        raise ParseError(f"bad instance header {lines[0]!r}")
    try:
        m = int(header[1])
    except ValueError:
        raise ParseError(f"bad dimension {header[1]!r}") from None
    terminals = set()
    for line in lines[1:]:
        if len(line) != m:
            raise ParseError(
                f"terminal {line!r} has length {len(line)}, expected {m}"
            )
        try:
            terminals.add(Node.from_string(line))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if not terminals:
        raise ParseError("instance file lists no terminals")
    return RawInstance(m, frozenset(terminals))


def render_instance(raw: RawInstance) -> str:
    lines = [f"msa {raw.m}"]
    lines.extend(str(t) for t in sorted(raw.terminals))
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> Arborescence:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty tree file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "tree":
        raise ParseError(f"bad tree header {lines[0]!r}")
    try:
        m = int(header[1])
    except ValueError:
        raise ParseError(f"bad dimension {header[1]!r}") from None
    edges = set()
    children = set()
    nodes = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"bad tree line {line!r}")
        try:
            u, v = (Node.from_string(p) for p in parts)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        if u.m != m or v.m != m:
            raise ParseError(f"edge {line!r} does not match dimension {m}")
        edges.add((u, v))
        children.add(v)
        nodes.update((u, v))
    roots = sorted(n for n in nodes if n not in children)
    root = roots[0] if len(roots) == 1 else Node(0, m)
    return Arborescence(root, frozenset(edges))


def render_tree(arb: Arborescence) -> str:
    lines = [f"tree {arb.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(arb.edges))
    return "\n".join(lines) + "\n"


def to_dot(arb: Arborescence, terminals: frozenset[Node] | None = None) -> str:
    """DOT digraph: nodes labeled with their bit strings, edges labeled
    with the mutated character index; terminals drawn doubled."""
    terminals = terminals or frozenset()
    lines = ["digraph arborescence {"]
    for n in sorted(arb.nodes):
        shape = "doublecircle" if n in terminals else "circle"
        lines.append(f'  "{n}" [shape={shape}];')
    for u, v in sorted(arb.edges):
        c = (u.bits ^ v.bits).bit_length() - 1
        lines.append(f'  "{u}" -> "{v}" [label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
