"""Concrete syntax: parser and printer for formulas and terms.

Formulas are plain ASCII.  "/\\" binds tighter than "\\/", both associate
to the right, "T" and "F" are the constants, and "x=y" is an equation
between variable names.  Terms are keyword applications, for example
"comp(pi1(p,q),pair(id(p/\\q),bang(p/\\q)))".  The printer emits a minimal
form that parses back to the same tree.
"""

from __future__ import annotations

import re

from .syntax import (
    ArrowTerm, Bot, Comp, Conj, Copair, Disj, Equation, Formula, FromBot,
    Id, Inj1, Inj2, Join, Meet, Pair, Proj1, Proj2, PropVar, Refl, Sym,
    ToTop, Top, Trans,
)

__all__ = ["ParseError", "parse_formula", "parse_term", "format_formula", "format_term"]


class ParseError(ValueError):
    """Malformed concrete syntax; carries the offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(
    r"[ \t\r\n]+"
    r"|(?P<word>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<conj>/\\)"
    r"|(?P<disj>\\/)"
    r"|(?P<punct>[(),=])"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    position = 0
    while position < len(text):
        matched = _TOKEN.match(text, position)
        if matched is None:
            raise ParseError(f"unexpected character {text[position]!r}", position)
        kind = matched.lastgroup
        if kind == "word":
            tokens.append(("word", matched.group(), position))
        elif kind == "conj":
            tokens.append(("/\\", "/\\", position))
        elif kind == "disj":
            tokens.append(("\\/", "\\/", position))
        elif kind == "punct":
            tokens.append((matched.group(), matched.group(), position))
        position = matched.end()
    tokens.append(("end", "", len(text)))
    return tokens


# Term keyword -> (constructor, argument kinds).
_TERM_FORMS: dict[str, tuple[type, tuple[str, ...]]] = {
    "id": (Id, ("formula",)),
    "pi1": (Proj1, ("formula", "formula")),
    "pi2": (Proj2, ("formula", "formula")),
    "bang": (ToTop, ("formula",)),
    "pair": (Pair, ("term", "term")),
    "comp": (Comp, ("term", "term")),
    "in1": (Inj1, ("formula", "formula")),
    "in2": (Inj2, ("formula", "formula")),
    "cobang": (FromBot, ("formula",)),
    "copair": (Copair, ("term", "term")),
    "refl": (Refl, ("var",)),
    "sym": (Sym, ("var", "var")),
    "trans": (Trans, ("var", "var", "var")),
    "meet": (Meet, ("term", "term")),
    "join": (Join, ("term", "term")),
}


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.cursor = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.cursor]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.cursor]
        self.cursor += 1
        return token

    def expect(self, kind: str, description: str | None = None) -> tuple[str, str, int]:
        token = self.peek()
        if token[0] != kind:
            raise ParseError(f"expected {description or kind!r}", token[2])
        return self.advance()

    def finish(self) -> None:
        token = self.peek()
        if token[0] != "end":
            raise ParseError("unexpected trailing input", token[2])

    # formulas, loosest level first; both connectives associate right
    def formula(self) -> Formula:
        left = self.conjunct()
        if self.peek()[0] == "\\/":
            self.advance()
            return Disj(left, self.formula())
        return left

    def conjunct(self) -> Formula:
        left = self.atom()
        if self.peek()[0] == "/\\":
            self.advance()
            return Conj(left, self.conjunct())
        return left

    def atom(self) -> Formula:
        kind, text, position = self.peek()
        if kind == "(":
            self.advance()
            inner = self.formula()
            self.expect(")")
            return inner
        if kind == "word":
            self.advance()
            if text == "T":
                return Top()
            if text == "F":
                return Bot()
            if self.peek()[0] == "=":
                self.advance()
                return Equation(text, self.variable())
            return PropVar(text)
        raise ParseError("expected a formula", position)

    def variable(self) -> str:
        kind, text, position = self.peek()
        if kind != "word" or text in ("T", "F"):
            raise ParseError("expected a variable name", position)
        self.advance()
        return text

    def term(self) -> ArrowTerm:
        kind, text, position = self.peek()
        if kind != "word":
            raise ParseError("expected a term", position)
        form = _TERM_FORMS.get(text)
        if form is None:
            raise ParseError(f"unknown term constructor {text!r}", position)
        constructor, argument_kinds = form
        self.advance()
        self.expect("(")
        arguments = []
        for index, argument_kind in enumerate(argument_kinds):
            if index:
                self.expect(",")
            if argument_kind == "formula":
                arguments.append(self.formula())
            elif argument_kind == "term":
                arguments.append(self.term())
            else:
                arguments.append(self.variable())
        self.expect(")")
        return constructor(*arguments)


def parse_formula(text: str) -> Formula:
    parser = _Parser(text)
    formula = parser.formula()
    parser.finish()
    return formula


def parse_term(text: str) -> ArrowTerm:
    parser = _Parser(text)
    term = parser.term()
    parser.finish()
    return term


def _format(formula: Formula, level: int) -> str:
    # level 0 admits anything, 1 bars a bare disjunction, 2 atoms only
    match formula:
        case PropVar(name):
            return name
        case Top():
            return "T"
        case Bot():
            return "F"
        case Equation(left, right):
            return f"{left}={right}"
        case Conj(left, right):
            body = _format(left, 2) + "/\\" + _format(right, 1)
            return f"({body})" if level > 1 else body
        case Disj(left, right):
            body = _format(left, 1) + "\\/" + _format(right, 0)
            return f"({body})" if level > 0 else body
    raise TypeError(f"not a formula: {formula!r}")


def format_formula(formula: Formula) -> str:
    """Render with as few parentheses as the grammar allows."""
    return _format(formula, 0)


def format_term(term: ArrowTerm) -> str:
    """Render a term; parsing the result restores the identical tree."""
    match term:
        case Id(formula):
            return f"id({format_formula(formula)})"
        case Proj1(left, right):
            return f"pi1({format_formula(left)},{format_formula(right)})"
        case Proj2(left, right):
            return f"pi2({format_formula(left)},{format_formula(right)})"
        case ToTop(formula):
            return f"bang({format_formula(formula)})"
        case Pair(left, right):
            return f"pair({format_term(left)},{format_term(right)})"
        case Comp(after, before):
            return f"comp({format_term(after)},{format_term(before)})"
        case Inj1(left, right):
            return f"in1({format_formula(left)},{format_formula(right)})"
        case Inj2(left, right):
            return f"in2({format_formula(left)},{format_formula(right)})"
        case FromBot(formula):
            return f"cobang({format_formula(formula)})"
        case Copair(left, right):
            return f"copair({format_term(left)},{format_term(right)})"
        case Refl(var):
            return f"refl({var})"
        case Sym(left, right):
            return f"sym({left},{right})"
        case Trans(left, middle, right):
            return f"trans({left},{middle},{right})"
        case Meet(left, right):
            return f"meet({format_term(left)},{format_term(right)})"
        case Join(left, right):
            return f"join({format_term(left)},{format_term(right)})"
    raise TypeError(f"not a term: {term!r}")
