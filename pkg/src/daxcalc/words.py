"""Parsers for the word and ring-expression grammars.

    word     := "1" | syllable ("*" syllable)*
    syllable := name ("^" signed_int)?
    ringexpr := ["-"] term (("+"|"-") term)* | "0"
    term     := [unsigned_int "*"] word

Whitespace is ignored between tokens.  Canonical output is produced by
str() on GroupElement and RingElement; parse and str round-trip.
"""

from __future__ import annotations

from .errors import ParseError, ValidationError
from .groups import GroupElement, GroupSpec
from .ring import RingElement


def _is_digit(ch: str) -> bool:
    return "0" <= ch <= "9"


def _is_name_char(ch: str) -> bool:
    return ch == "_" or _is_digit(ch) or ("a" <= ch <= "z") or ("A" <= ch <= "Z")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "*+-^":
            tokens.append((ch, ch, i))
            i += 1
        elif _is_digit(ch):
            j = i
            while j < len(text) and _is_digit(text[j]):
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif _is_name_char(ch):
            j = i
            while j < len(text) and _is_name_char(text[j]):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def _parse_syllables(
    tokens: list[tuple[str, object, int]], i: int, spec: GroupSpec
) -> tuple[list[tuple[int, int]], int]:
    """Parse syllable ("*" syllable)* starting at token i."""
    syllables: list[tuple[int, int]] = []
    while True:
        if i >= len(tokens) or tokens[i][0] != "name":
            pos = tokens[i][2] if i < len(tokens) else tokens[i - 1][2] + 1
            raise ParseError("expected a factor name", pos)
        kind, name, pos = tokens[i]
        try:
            index = spec.index_of(name)
        except ValidationError:
            raise ParseError(f"unknown factor name {name!r}", pos) from None
        i += 1
        exp = 1
        if i < len(tokens) and tokens[i][0] == "^":
            i += 1
            sign = 1
            if i < len(tokens) and tokens[i][0] in ("+", "-"):
                sign = -1 if tokens[i][0] == "-" else 1
                i += 1
            if i >= len(tokens) or tokens[i][0] != "int":
                pos = tokens[i][2] if i < len(tokens) else tokens[i - 1][2] + 1
                raise ParseError("expected an integer exponent after '^'", pos)
            exp = sign * tokens[i][1]
            i += 1
        syllables.append((index, exp))
        if i < len(tokens) and tokens[i][0] == "*":
            i += 1
            continue
        return syllables, i


def parse_word(text: str, spec: GroupSpec) -> GroupElement:
    """Parse a word and return its reduced normal form; "1" is the identity."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty word", 0)
    if tokens[0][0] == "int":
        if tokens[0][1] == 1 and len(tokens) == 1:
            return spec.identity()
        raise ParseError("expected a factor name or the identity word '1'", tokens[0][2])
    syllables, i = _parse_syllables(tokens, 0, spec)
    if i != len(tokens):
        raise ParseError("unexpected trailing input", tokens[i][2])
    return spec.element(syllables)


def parse_ringexpr(text: str, spec: GroupSpec) -> RingElement:
    """Parse a signed sum of terms into a ring element, combining like terms."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    if len(tokens) == 1 and tokens[0][0] == "int" and tokens[0][1] == 0:
        return RingElement.zero(spec)
    combined: dict[GroupElement, int] = {}
    i = 0
    sign = 1
    if tokens[0][0] == "-":
        sign = -1
        i = 1
    while True:
        coeff = 1
        if i < len(tokens) and tokens[i][0] == "int":
            value, pos = tokens[i][1], tokens[i][2]
            if i + 1 < len(tokens) and tokens[i + 1][0] == "*":
                coeff = value
                i += 2
            elif value == 1:
                raise ValidationError(
                    "the identity word '1' is not a valid term: values live in the "
                    "group ring with the identity removed"
                )
            else:
                raise ParseError("an integer term must be followed by '*' and a word", pos)
        if i < len(tokens) and tokens[i][0] == "int" and tokens[i][1] == 1:
            raise ValidationError(
                "the identity word '1' is not a valid term: values live in the "
                "group ring with the identity removed"
            )
        syllables, i = _parse_syllables(tokens, i, spec)
        g = spec.element(syllables)
        if g.is_identity:
            raise ValidationError(
                "term reduces to the identity, which is excluded from the group ring support"
            )
        combined[g] = combined.get(g, 0) + sign * coeff
        if i >= len(tokens):
            break
        if tokens[i][0] not in ("+", "-"):
            raise ParseError("expected '+' or '-' between terms", tokens[i][2])
        sign = -1 if tokens[i][0] == "-" else 1
        i += 1
    return RingElement.from_mapping(spec, combined)
