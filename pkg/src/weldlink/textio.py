"""Text and structured serialization for Gauss codes and ribbon data.

Gauss text grammar (whitespace insensitive)::

    code      := component (';' component)* [';']
    component := passage*
    passage   := ('O'|'U') uint ('+'|'-')

The empty string is the zero-component code.  A trailing ';' is permitted and
needed exactly when the final component is empty, so that ";" denotes one
empty component (an unknotted circle) rather than nothing.

Ribbon text grammar::

    data  := torus (';' torus)* [';'] ['|' sign*]
    torus := item*
    item  := 'E' uint | 'C' uint
    sign  := uint ':' ('+'|'-')

'C' items belong to the chamber after the nearest preceding 'E' item,
cyclically; an all-'C' torus is a single over-only loop.  If the sign table is
omitted every crossing defaults to sign +.

The JSON interchange format mirrors the in-memory types and carries a
``format``/``version`` pair.
"""

from __future__ import annotations

import json
import re

from .model import (
    OVER,
    UNDER,
    GaussCode,
    Passage,
    SolidRibbonData,
    Torus,
)

GAUSS_FORMAT = "weldlink/gauss-code"
RIBBON_FORMAT = "weldlink/solid-ribbon"
FORMAT_VERSION = 1


class ParseError(ValueError):
    """Syntax error in a textual format, with 1-based line/column."""

    def __init__(self, message, line, column):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\S+")


def _tokens(text):
    """Yield (token, line, column) over all whitespace-separated tokens."""
    for lineno, line in enumerate(text.split("\n"), start=1):
        for m in _TOKEN.finditer(line):
            yield m.group(0), lineno, m.start() + 1


_PASSAGE = re.compile(r"^([OU])(\d+)([+-])$")


def _split_on(tokens, sep):
    parts = [[]]
    for tok in tokens:
        if tok[0] == sep:
            parts.append([])
        else:
            parts[-1].append(tok)
    return parts


def parse_gauss_text(text: str) -> GaussCode:
    """Parse the Gauss text grammar.  Raises :class:`ParseError` on bad syntax.

    The result is not validated; run :func:`weldlink.model.validate_gauss_code`
    to check the semantic invariants.
    """
    toks = []
    for tok, line, col in _tokens(text):
        # allow ';' to abut a passage token
        while tok:
            if tok[0] == ";":
                toks.append((";", line, col))
                tok = tok[1:]
                col += 1
            elif ";" in tok:
                i = tok.index(";")
                toks.append((tok[:i], line, col))
                tok = tok[i:]
                col += i
            else:
                toks.append((tok, line, col))
                tok = ""
    if not toks:
        return GaussCode(())
    parts = _split_on(toks, ";")
    if parts and not parts[-1]:
        parts.pop()  # trailing ';' terminates the final (possibly empty) component
    comps = []
    for part in parts:
        comp = []
        for tok, line, col in part:
            m = _PASSAGE.match(tok)
            if not m:
                raise ParseError("expected passage like 'O3+', got %r" % tok, line, col)
            role, num, sign = m.groups()
            comp.append(Passage(int(num), role, 1 if sign == "+" else -1))
        comps.append(tuple(comp))
    return GaussCode(tuple(comps))


def emit_gauss_text(code: GaussCode) -> str:
    """Inverse of :func:`parse_gauss_text`: round-trips rotations verbatim."""
    if not code.components:
        return ""
    parts = [" ".join(str(p) for p in comp) for comp in code.components]
    return _join_parts(parts)


def _join_parts(parts):
    """Join with ';' separators; a trailing ';' marks a final empty part."""
    toks = []
    for i, part in enumerate(parts):
        if part:
            toks.append(part)
        if i < len(parts) - 1:
            toks.append(";")
    if not parts[-1]:
        toks.append(";")
    return " ".join(toks)


_ITEM = re.compile(r"^([EC])(\d+)$")
_SIGN_ENTRY = re.compile(r"^(\d+):([+-])$")


def parse_ribbon_text(text: str) -> SolidRibbonData:
    """Parse the ribbon text grammar; signs default to + when no table given."""
    toks = []
    for tok, line, col in _tokens(text):
        while tok:
            if tok[0] in ";|":
                toks.append((tok[0], line, col))
                tok = tok[1:]
                col += 1
            else:
                cut = len(tok)
                for sep in ";|":
                    if sep in tok:
                        cut = min(cut, tok.index(sep))
                toks.append((tok[:cut], line, col))
                tok = tok[cut:]
                col += cut
    if not toks:
        return SolidRibbonData((), {})
    head = toks
    sign_toks = []
    for i, t in enumerate(toks):
        if t[0] == "|":
            head, sign_toks = toks[:i], toks[i + 1 :]
            break
    signs = {}
    for tok, line, col in sign_toks:
        m = _SIGN_ENTRY.match(tok)
        if not m:
            raise ParseError("expected sign entry like '3:+', got %r" % tok, line, col)
        signs[int(m.group(1))] = 1 if m.group(2) == "+" else -1

    tori = []
    if head:
        parts = _split_on(head, ";")
        if parts and not parts[-1]:
            parts.pop()
        for part in parts:
            items = []
            for tok, line, col in part:
                m = _ITEM.match(tok)
                if not m:
                    raise ParseError(
                        "expected item like 'E2' or 'C5', got %r" % tok, line, col
                    )
                items.append((m.group(1), int(m.group(2))))
            tori.append(_build_torus(items))
    data = SolidRibbonData(tuple(tori), signs)
    if not signs:
        default = {}
        for t in data.tori:
            for e in t.essentials:
                default[e] = 1
            for c in t.contractibles():
                default[c] = 1
        data = SolidRibbonData(data.tori, default)
    return data


def _build_torus(items):
    if not items:
        return Torus((), ())
    essentials = [n for kind, n in items if kind == "E"]
    if not essentials:
        return Torus((), (frozenset(n for _, n in items),))
    # contractibles attach to the chamber after the nearest preceding essential,
    # cyclically: a leading run of C items wraps onto the final essential.
    chambers = [set() for _ in essentials]
    slot = len(essentials) - 1
    seen = -1
    for kind, n in items:
        if kind == "E":
            seen += 1
            slot = seen
        else:
            chambers[slot].add(n)
    return Torus(tuple(essentials), tuple(frozenset(ch) for ch in chambers))


def emit_ribbon_text(data: SolidRibbonData) -> str:
    """Inverse of :func:`parse_ribbon_text`; chambers emitted sorted ascending."""
    parts = []
    for t in data.tori:
        items = []
        if t.essentials:
            for e, ch in zip(t.essentials, t.chambers):
                items.append("E%d" % e)
                items.extend("C%d" % c for c in sorted(ch))
        elif t.chambers:
            items.extend("C%d" % c for c in sorted(t.chambers[0]))
        parts.append(" ".join(items))
    text = _join_parts(parts) if parts else ""
    if data.signs:
        entries = " ".join(
            "%d:%s" % (c, "+" if s == 1 else "-") for c, s in sorted(data.signs.items())
        )
        text = (text + " | " + entries).lstrip()
    return text


# ---------------------------------------------------------------------------
# Structured (JSON) interchange.


def code_to_obj(code: GaussCode):
    return {
        "format": GAUSS_FORMAT,
        "version": FORMAT_VERSION,
        "components": [
            [[p.role, p.crossing, p.sign] for p in comp] for comp in code.components
        ],
    }


def code_from_obj(obj) -> GaussCode:
    _check_header(obj, GAUSS_FORMAT)
    return GaussCode(
        tuple(
            tuple(Passage(int(c), role, int(s)) for role, c, s in comp)
            for comp in obj["components"]
        )
    )


def ribbon_to_obj(data: SolidRibbonData):
    return {
        "format": RIBBON_FORMAT,
        "version": FORMAT_VERSION,
        "tori": [
            {
                "essentials": list(t.essentials),
                "chambers": [sorted(ch) for ch in t.chambers],
            }
            for t in data.tori
        ],
        "signs": {str(c): s for c, s in sorted(data.signs.items())},
    }


def ribbon_from_obj(obj) -> SolidRibbonData:
    _check_header(obj, RIBBON_FORMAT)
    tori = tuple(
        Torus(tuple(t["essentials"]), tuple(frozenset(ch) for ch in t["chambers"]))
        for t in obj["tori"]
    )
    return SolidRibbonData(tori, {int(c): int(s) for c, s in obj["signs"].items()})


def _check_header(obj, fmt):
    if obj.get("format") != fmt:
        raise ValueError("expected format %r, got %r" % (fmt, obj.get("format")))
    if obj.get("version") != FORMAT_VERSION:
        raise ValueError("unsupported format version %r" % (obj.get("version"),))


def code_to_json(code: GaussCode) -> str:
    return json.dumps(code_to_obj(code), sort_keys=True)


def code_from_json(text: str) -> GaussCode:
    return code_from_obj(json.loads(text))


def ribbon_to_json(data: SolidRibbonData) -> str:
    return json.dumps(ribbon_to_obj(data), sort_keys=True)


def ribbon_from_json(text: str) -> SolidRibbonData:
    return ribbon_from_obj(json.loads(text))
