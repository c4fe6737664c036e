"""Text format for rosters and coalitional rankings.

::

    # comment
    roster: x y z w
    tiebreak: y x z w        (optional; defaults to the roster order)
    {x,y,z} {x,y} > {x} {x,z} {y} > {z} {w}

Classes are separated by ``>``; a class lists its coalitions in braces.  A
file without a ranking line (or with the single word ``empty``) holds the
empty-domain ranking.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from socrank.errors import ParseError, ValidationError
from socrank.model import Ranking, Roster, SocialRelation, iter_bits

_NAME = re.compile(r"[A-Za-z0-9_]+")
EMPTY_WORD = "empty"


@dataclass(frozen=True)
class RankingDocument:
    roster: Roster
    ranking: Ranking


def render_coalition(s: int, roster: Roster) -> str:
    return "{" + ",".join(roster.members(s)) + "}"


def render_class(c: int, roster: Roster) -> str:
    return " ".join(render_coalition(s, roster) for s in iter_bits(c))


def render_ranking(ranking: Ranking, roster: Roster) -> str:
    if not ranking:
        return EMPTY_WORD
    return " > ".join(render_class(c, roster) for c in ranking)


def render_document(ranking: Ranking, roster: Roster) -> str:
    lines = ["roster: " + " ".join(roster.individuals)]
    if roster.tiebreak != roster.individuals:
        lines.append("tiebreak: " + " ".join(roster.tiebreak))
    lines.append(render_ranking(ranking, roster))
    return "\n".join(lines) + "\n"


def _names(text: str, line_no: int, col0: int) -> list[str]:
    out = []
    for m in re.finditer(r"[^\s,]+", text):
        if not _NAME.fullmatch(m.group()):
            raise ParseError(f"bad identifier {m.group()!r}", line_no, col0 + m.start() + 1)
        out.append(m.group())
    return out


def parse_ranking_line(text: str, roster: Roster, line_no: int = 1) -> Ranking:
    """Parse one ranking line against ``roster``."""
    if text.strip() == EMPTY_WORD:
        return ()
    classes: list[list[int]] = [[]]
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace() or ch == ",":
            i += 1
        elif ch == ">":
            if not classes[-1]:
                raise ParseError("empty class before '>'", line_no, i + 1)
            classes.append([])
            i += 1
        elif ch == "{":
            close = text.find("}", i)
            if close < 0:
                raise ParseError("unclosed '{'", line_no, i + 1)
            inner = text[i + 1 : close]
            if "{" in inner:
                raise ParseError("nested '{'", line_no, i + 2 + inner.index("{"))
            members = _names(inner, line_no, i + 1)
            if not members:
                raise ParseError("empty coalition", line_no, i + 1)
            mask = 0
            for name in members:
                mask |= 1 << roster.index(name)
            classes[-1].append(mask)
            i = close + 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line_no, i + 1)
    if not classes[-1]:
        col = len(text.rstrip()) or 1
        raise ParseError("empty class at end of line", line_no, col)
    ranking = []
    seen = 0
    for cls_ in classes:
        mask = 0
        for s in cls_:
            bit = 1 << s
            if (seen | mask) & bit:
                raise ValidationError(
                    "DUPLICATE_COALITION", f"{render_coalition(s, roster)} appears twice"
                )
            mask |= bit
        seen |= mask
        ranking.append(mask)
    return tuple(ranking)


def parse_document(text: str) -> RankingDocument:
    roster = None
    tiebreak = None
    ranking_line = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        head, sep, rest = line.partition(":")
        key = head.strip().lower()
        if sep and key in ("roster", "tiebreak"):
            col0 = len(head) + 1
            names = _names(rest, line_no, col0)
            if key == "roster":
                if roster is not None:
                    raise ParseError("roster declared twice", line_no, 1)
                roster = names
            else:
                tiebreak = names
            continue
        if roster is None:
            raise ParseError("ranking given before the roster line", line_no, 1)
        if ranking_line is not None:
            raise ParseError("more than one ranking line", line_no, 1)
        ranking_line = (line_no, line)
    if roster is None:
        raise ParseError("missing 'roster:' line", 1, 1)
    try:
        r = Roster(tuple(roster), tuple(tiebreak) if tiebreak else None)
    except ValueError as exc:
        raise ValidationError("BAD_ROSTER", str(exc)) from None
    if ranking_line is None:
        return RankingDocument(r, ())
    return RankingDocument(r, parse_ranking_line(ranking_line[1], r, ranking_line[0]))


def parse_ranking(text: str, roster: Roster | None = None) -> Ranking:
    """Parse a ranking; with ``roster`` given, ``text`` may be a bare ranking line."""
    if roster is not None and "roster" not in text:
        return parse_ranking_line(text.strip(), roster)
    return parse_document(text).ranking


def render_relation(relation, roster: Roster) -> str:
    """Ordered partition such as ``x > {y,z} > w`` for transitive relations,
    otherwise a pair matrix followed by a CYCLIC or INTRANSITIVE flag."""
    if relation.is_weak_order():
        parts = []
        for cls_ in relation.ordered_classes():
            names = [roster.name(i) for i in cls_]
            parts.append(names[0] if len(names) == 1 else "{" + ",".join(names) + "}")
        return " > ".join(parts)
    width = max(len(name) for name in roster.individuals)
    head = " " * width + " | " + " ".join(name.rjust(width) for name in roster.individuals)
    rows = [head, "-" * len(head)]
    for x in range(roster.n):
        cells = ["1" if relation.holds(x, y) else "0" for y in range(roster.n)]
        rows.append(roster.name(x).rjust(width) + " | " + " ".join(c.rjust(width) for c in cells))
    rows.append("CYCLIC" if relation.has_strict_cycle() else "INTRANSITIVE")
    return "\n".join(rows)


def parse_partition(text: str, roster: Roster):
    """Inverse of the ordered-partition form of :func:`render_relation`."""
    level = {}
    for rank, chunk in enumerate(text.split(">")):
        chunk = chunk.strip()
        if chunk.startswith("{") and chunk.endswith("}"):
            chunk = chunk[1:-1]
        for name in _names(chunk, 1, 1):
            level[roster.index(name)] = rank
    if len(level) != roster.n:
        raise ValueError("an ordered partition must mention every individual once")
    return SocialRelation.from_predicate(roster.n, lambda a, b: level[a] <= level[b])
