"""Text notation ``H^k(a_1,...,a_n,-b_1,...,-b_p)`` for strata.

Entries may carry a multiplicity, ``-1^3`` standing for ``-1,-1,-1``.  A
negative entry ``v`` with ``|v| >= k`` is a pole of higher order; every
other entry is a conical singularity.  Whitespace is ignored.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .stratum import Stratum

__all__ = ["parse_stratum", "render_stratum"]

_HEAD = re.compile(r"H\^(\d+)\(")
_ENTRY = re.compile(r"(-?\d+)(?:\^(\d+))?")


def parse_stratum(text: str) -> Stratum:
    """Parse the notation; raises ParseError with the offending position."""
    # Positions refer to the text with whitespace removed.
    src = "".join(text.split())
    head = _HEAD.match(src)
    if head is None:
        raise ParseError("expected 'H^<k>('", 0)
    k = int(head.group(1))
    if k < 1:
        raise ParseError("k must be positive", head.start(1))
    pos = head.end()
    values: list[int] = []
    while True:
        entry = _ENTRY.match(src, pos)
        if entry is None:
            raise ParseError("expected an integer entry", pos)
        value = int(entry.group(1))
        count = int(entry.group(2)) if entry.group(2) is not None else 1
        if count < 1:
            raise ParseError("multiplicity must be positive", entry.start(2))
        values.extend([value] * count)
        pos = entry.end()
        if pos < len(src) and src[pos] == ",":
            pos += 1
            continue
        break
    if pos >= len(src) or src[pos] != ")":
        raise ParseError("expected ',' or ')'", pos)
    if pos + 1 != len(src):
        raise ParseError("trailing characters", pos + 1)
    zeros = tuple(v for v in values if not (v < 0 and -v >= k))
    poles = tuple(-v for v in values if v < 0 and -v >= k)
    return Stratum(k, zeros, poles)


def render_stratum(stratum: Stratum) -> str:
    return str(stratum)
