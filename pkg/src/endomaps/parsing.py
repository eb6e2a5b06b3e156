"""Text forms for endofunctions.

Two grammars are accepted:

* table form ``"4: 2 3 1 1"``: the universe size, a colon, then every
  image in order (1-indexed);
* cycle-and-arrow form ``"(1 2 3)(4->1)"``: each parenthesized group is
  either a cycle or a single ``a->b`` assignment; points never assigned
  stay fixed, and the universe is the largest point mentioned.

Both serializers round-trip through the parser.
"""

from __future__ import annotations

import re

from .core import Endofunction
from .errors import ParseError
from .structure import cyclic_core

_TOKEN = re.compile(r"\d+|->|\(|\)|\s+|.")


def _position(text: str, index: int) -> tuple[int, int]:
    line = text.count("\n", 0, index) + 1
    last_newline = text.rfind("\n", 0, index)
    return line, index - last_newline


def _fail(text: str, index: int, message: str) -> ParseError:
    line, column = _position(text, index)
    return ParseError(message, line, column)


def parse_endofunction(text: str) -> Endofunction:
    """Parse either grammar; the colon picks the table form."""
    if ":" in text:
        return _parse_table(text)
    return _parse_cycles(text)


def _parse_table(text: str) -> Endofunction:
    colon = text.index(":")
    head = text[:colon]
    if not head.strip().isdigit():
        raise _fail(text, 0, f"expected a universe size before ':', got {head.strip()!r}")
    n = int(head.strip())
    if n < 1:
        raise _fail(text, 0, "universe size must be at least 1")
    images = []
    tail = text[colon + 1 :]
    for match in re.finditer(r"\S+", tail):
        token = match.group()
        at = colon + 1 + match.start()
        if not token.isdigit():
            raise _fail(text, at, f"expected an integer image, got {token!r}")
        value = int(token)
        if not 1 <= value <= n:
            raise _fail(text, at, f"image {value} out of range 1..{n}")
        if len(images) == n:
            raise _fail(text, at, f"expected exactly {n} images, found more")
        images.append(value)
    if len(images) != n:
        raise _fail(text, len(text), f"expected {n} images, found {len(images)}")
    return Endofunction(tuple(images))


def _parse_cycles(text: str) -> Endofunction:
    groups = []  # (kind, payload, index) with kind "cycle" or "arrow"
    index = 0
    tokens = [(m.group(), m.start()) for m in _TOKEN.finditer(text)]
    tokens = [(tok, at) for tok, at in tokens if not tok.isspace()]
    pos = 0
    if not tokens:
        raise _fail(text, 0, "expected '(' to open a group")
    while pos < len(tokens):
        tok, at = tokens[pos]
        if tok != "(":
            raise _fail(text, at, f"expected '(' to open a group, got {tok!r}")
        pos += 1
        body: list[tuple[str, int]] = []
        while pos < len(tokens) and tokens[pos][0] != ")":
            body.append(tokens[pos])
            pos += 1
        if pos == len(tokens):
            raise _fail(text, at, "unclosed group")
        close_at = tokens[pos][1]
        pos += 1
        if not body:
            raise _fail(text, close_at, "empty group")
        if any(tok == "(" for tok, _ in body):
            raise _fail(text, body[0][1], "nested '(' inside a group")
        if any(tok == "->" for tok, _ in body):
            if len(body) != 3 or body[1][0] != "->" or not body[0][0].isdigit() or not body[2][0].isdigit():
                raise _fail(text, body[0][1], "an arrow group must be exactly 'a->b'")
            groups.append(("arrow", (int(body[0][0]), int(body[2][0])), body[0][1]))
        else:
            for tok, tok_at in body:
                if not tok.isdigit():
                    raise _fail(text, tok_at, f"unexpected token {tok!r} in cycle")
            groups.append(("cycle", [int(tok) for tok, _ in body], body[0][1]))
        index = pos
    del index

    assigned: dict[int, int] = {}
    mentioned: set[int] = set()

    def assign(source: int, image: int, at: int) -> None:
        if source in assigned:
            raise _fail(text, at, f"element {source} assigned twice")
        assigned[source] = image
        mentioned.add(source)
        mentioned.add(image)

    for kind, payload, at in groups:
        if kind == "arrow":
            source, image = payload
            if source < 1 or image < 1:
                raise _fail(text, at, "elements must be positive integers")
            assign(source, image, at)
        else:
            cycle = payload
            if any(v < 1 for v in cycle):
                raise _fail(text, at, "elements must be positive integers")
            if len(set(cycle)) != len(cycle):
                raise _fail(text, at, "repeated element inside a cycle")
            for i, v in enumerate(cycle):
                assign(v, cycle[(i + 1) % len(cycle)], at)

    n = max(mentioned)
    table = [assigned.get(x, x) for x in range(1, n + 1)]
    return Endofunction(tuple(table))


def serialize_table(f: Endofunction) -> str:
    """Explicit image-table text, e.g. "4: 2 3 1 1"."""
    return f"{f.n}: " + " ".join(str(v) for v in f.images)


def serialize_cycles(f: Endofunction) -> str:
    """Canonical cycle-and-arrow text.

    Core cycles come first by ascending minimum (fixed points as
    1-cycles, so every element is mentioned), then one arrow per off-core
    point, sources ascending.
    """
    core = set(cyclic_core(f))
    parts = []
    seen: set[int] = set()
    for x in range(1, f.n + 1):
        if x in core and x not in seen:
            cyc = [x]
            seen.add(x)
            y = f.images[x - 1]
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = f.images[y - 1]
            parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    for x in range(1, f.n + 1):
        if x not in core:
            parts.append(f"({x}->{f.images[x - 1]})")
    return "".join(parts)
