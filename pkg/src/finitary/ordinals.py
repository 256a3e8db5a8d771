"""Ordinal notations below epsilon-zero as nested tuples.

A notation is a finite nested tuple of tuples.  The tuple ``(a1, ..., an)``
denotes the Cantor normal form ``w^a1 + ... + w^an`` (``w`` the first
infinite ordinal), so the empty tuple denotes zero, ``((),)`` denotes one
and ``(((),),)`` denotes ``w``.  A nested tuple is a *valid ordinal* when
every constituent is one and the constituents are weakly decreasing under
`compare`; arbitrary nested tuples ("raw lists") are still totally ordered
by `compare`, they just carry no ordinal meaning.

The canonical interchange form is bracket text: ``[]``, ``[[],[]]``,
``[[[],[]],[[]]]`` and so on, with optional ASCII whitespace and no
trailing commas.
"""

from functools import cmp_to_key
from typing import Iterator

LESS = -1
EQUAL = 0
GREATER = 1

#: A nested tuple of tuples.  ``Ordinal`` values are additionally weakly
#: decreasing at every level; see `is_ordinal`.
RawList = tuple
Ordinal = tuple

ZERO: Ordinal = ()
ONE: Ordinal = ((),)
OMEGA: Ordinal = (((),),)


class ParseError(ValueError):
    """Malformed bracket text; `position` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position


def parse_ordinal(text: str) -> RawList:
    """Parse bracket text into a nested tuple.

    Accepts exactly the bracket grammar: ``[``, ``]``, comma separators and
    ASCII whitespace.  Raises `ParseError` with the offending offset on
    unbalanced brackets, misplaced commas, trailing input or empty input.
    The result round-trips through `render_brackets`; it is *not* checked
    for ordinal validity (use `is_ordinal`).
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos] in " \t\r\n":
            pos += 1

    def parse_list() -> RawList:
        nonlocal pos
        if pos >= n or text[pos] != "[":
            raise ParseError("expected '['", pos)
        pos += 1
        skip_ws()
        if pos < n and text[pos] == "]":
            pos += 1
            return ()
        items = []
        while True:
            items.append(parse_list())
            skip_ws()
            if pos < n and text[pos] == ",":
                pos += 1
                skip_ws()
                continue
            if pos < n and text[pos] == "]":
                pos += 1
                return tuple(items)
            raise ParseError("expected ',' or ']'", pos)

    skip_ws()
    if pos >= n:
        raise ParseError("empty input", pos)
    result = parse_list()
    skip_ws()
    if pos != n:
        raise ParseError("trailing input after list", pos)
    return result


def render_brackets(a: RawList) -> str:
    """Inverse of `parse_ordinal`: canonical bracket text, no whitespace."""
    return "[" + ",".join(render_brackets(x) for x in a) + "]"


def compare(a: RawList, b: RawList) -> int:
    """Total order on nested tuples; LESS/EQUAL/GREATER.

    Recursively lexicographic: compare constituents at the first index
    where the two differ; if one is a constituent-wise equal prefix of the
    other, the shorter one comes first.  Restricted to valid ordinals this
    is the ordinal order of the denoted Cantor normal forms.
    """
    for x, y in zip(a, b):
        c = compare(x, y)
        if c != EQUAL:
            return c
    if len(a) < len(b):
        return LESS
    if len(a) > len(b):
        return GREATER
    return EQUAL


def is_ordinal(a: RawList) -> bool:
    """True iff every constituent is an ordinal and they weakly decrease."""
    return all(is_ordinal(x) for x in a) and all(
        compare(a[i], a[i + 1]) != LESS for i in range(len(a) - 1)
    )


def height(a: Ordinal) -> int:
    """Number of opening brackets before the first closing bracket.

    Equals 1 + height of the first constituent (1 for the empty list) and
    bounds the nesting depth of the leading term.
    """
    h = 1
    while a:
        a = a[0]
        h += 1
    return h


def node_count(a: RawList) -> int:
    """Total number of list nodes, the root included."""
    return 1 + sum(node_count(x) for x in a)


def from_nat(n: int) -> Ordinal:
    """The finite ordinal n: n copies of the empty list."""
    return ((),) * n


def to_nat(a: Ordinal) -> int | None:
    """Inverse of `from_nat` when a is finite, else None."""
    return len(a) if all(x == () for x in a) else None


def successor(a: Ordinal) -> Ordinal:
    """a + 1: append one empty constituent.

    The result is the immediate successor: it is strictly greater than a
    and no ordinal lies strictly between.
    """
    return a + ((),)


def natural_sum(a: Ordinal, b: Ordinal) -> Ordinal:
    """Commutative (Hessenberg) sum: merge the constituents, descending."""
    return tuple(sorted(a + b, key=cmp_to_key(compare), reverse=True))


def omega_power(a: Ordinal) -> Ordinal:
    """w^a, the single-constituent list [a]; strictly greater than a."""
    return (a,)


def render_cnf(a: Ordinal) -> str:
    """Conventional Cantor-normal-form notation for a valid ordinal.

    ``[]`` renders as "0"; runs of k equal exponents collapse to a single
    "·k" factor; w^0 terms render as plain naturals and w^1 as "ω".
    """
    if not a:
        return "0"
    parts = []
    i = 0
    while i < len(a):
        j = i
        while j < len(a) and a[j] == a[i]:
            j += 1
        parts.append(_cnf_term(a[i], j - i))
        i = j
    return "+".join(parts)


def _cnf_term(exponent: Ordinal, k: int) -> str:
    if exponent == ():
        return str(k)
    if exponent == ((),):
        base = "ω"
    else:
        inner = render_cnf(exponent)
        base = "ω^" + (f"({inner})" if "+" in inner or "·" in inner else inner)
    return base if k == 1 else f"{base}·{k}"


def enumerate_ordinals(max_nodes: int) -> list[Ordinal]:
    """All valid ordinals with at most max_nodes list nodes, ascending.

    There are 200 of them for max_nodes=8.  Useful for exhaustive checks
    of order and descent properties at desk scale.
    """
    by_size: list[list[Ordinal]] = [[] for _ in range(max_nodes + 1)]
    if max_nodes >= 1:
        by_size[1] = [()]
    for size in range(2, max_nodes + 1):
        by_size[size] = [tuple(seq) for seq in _descending_seqs(size - 1, None, by_size)]
    out = [o for bucket in by_size for o in bucket]
    out.sort(key=cmp_to_key(compare))
    return out


def _descending_seqs(budget: int, bound, by_size) -> Iterator[list]:
    # weakly decreasing constituent sequences spending the node budget exactly
    if budget == 0:
        yield []
        return
    for size in range(1, budget + 1):
        for head in by_size[size]:
            if bound is not None and compare(head, bound) == GREATER:
                continue
            for tail in _descending_seqs(budget - size, head, by_size):
                yield [head] + tail
