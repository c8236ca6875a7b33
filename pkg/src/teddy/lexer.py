"""Python tokenizer and the four normalized token representations.

The lexer is deliberately forgiving: it never needs the input to be valid
Python, only free of unterminated string literals.  Layout is reduced to
NEWLINE tokens between logical lines; indentation and comments are dropped.
"""

from __future__ import annotations

import keyword
import re
from dataclasses import dataclass
from enum import Enum

ID_PLACEHOLDER = "ID"
LITERAL_PLACEHOLDER = "LIT"
NEWLINE_TEXT = "\n"

KEYWORDS = frozenset(keyword.kwlist)


class TokenKind(str, Enum):
    IDENTIFIER = "identifier"
    KEYWORD = "keyword"
    NUMBER = "number-literal"
    STRING = "string-literal"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"
    NEWLINE = "newline"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class RepresentationSet:
    """Token texts of one snippet at four abstraction levels.

    r0 keeps layout (NEWLINE tokens), r1 drops it, r2 blinds identifiers and
    r3 additionally blinds number and string literals.
    """

    r0: tuple[str, ...]
    r1: tuple[str, ...]
    r2: tuple[str, ...]
    r3: tuple[str, ...]

    @property
    def levels(self) -> tuple[tuple[str, ...], ...]:
        return (self.r0, self.r1, self.r2, self.r3)


class LexError(ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


_STRING_PREFIX = r"(?:[rRbBuUfF]|[rR][bBfF]|[bBfF][rR])?"
_STRING_START = re.compile(_STRING_PREFIX + r"('''|\"\"\"|'|\")")
_NAME = re.compile(r"[^\W\d]\w*")
_NUMBER = re.compile(
    r"""
    (?:
        0[xX](?:_?[0-9a-fA-F])+
      | 0[oO](?:_?[0-7])+
      | 0[bB](?:_?[01])+
      | (?:
            (?:\d(?:_?\d)*)?\.\d(?:_?\d)*(?:[eE][+-]?\d(?:_?\d)*)?
          | \d(?:_?\d)*\.?(?:[eE][+-]?\d(?:_?\d)*)?
        )
    )[jJ]?
    """,
    re.VERBOSE,
)
# longest first so that "**=" wins over "**" and "*"
_OPERATORS = sorted(
    [
        "**=", "//=", ">>=", "<<=", "...",
        "->", ":=", "==", "!=", "<=", ">=", "<<", ">>", "**", "//",
        "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "@=",
        "+", "-", "*", "/", "%", "&", "|", "^", "~", "<", ">", "=", "@", "!",
    ],
    key=len,
    reverse=True,
)
_PUNCTUATION = frozenset("()[]{},:;.")
_OPENERS = "([{"
_CLOSERS = ")]}"


def _scan_string(source: str, pos: int, quote: str, line: int, column: int) -> int:
    """Return the index just past the closing quote of a string body."""
    triple = len(quote) == 3
    i = pos
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\\":
            i += 2
            continue
        if not triple and ch == "\n":
            break
        if source.startswith(quote, i):
            return i + len(quote)
        i += 1
    raise LexError("unterminated string literal", line, column)


def tokenize(source: str) -> list[Token]:
    """Split Python source into tokens.

    Comments, indentation and blank lines produce nothing; a single NEWLINE
    token separates consecutive logical lines (never leading or trailing).
    """
    tokens: list[Token] = []
    line = 1
    line_start = 0
    depth = 0
    pending_newline = False
    i = 0
    n = len(source)

    def emit(kind: TokenKind, text: str, start: int, start_line: int, start_col: int) -> None:
        nonlocal pending_newline
        if pending_newline and tokens:
            tokens.append(Token(TokenKind.NEWLINE, NEWLINE_TEXT, start_line, start_col))
        pending_newline = False
        tokens.append(Token(kind, text, start_line, start_col))

    while i < n:
        ch = source[i]
        column = i - line_start + 1

        if ch == "\n" or ch == "\r":
            if ch == "\r" and source.startswith("\r\n", i):
                i += 1
            i += 1
            if depth == 0 and tokens:
                pending_newline = True
            line += 1
            line_start = i
            continue
        if ch in " \t\f":
            i += 1
            continue
        if ch == "#":
            while i < n and source[i] not in "\r\n":
                i += 1
            continue
        if ch == "\\" and i + 1 < n and source[i + 1] in "\r\n":
            # explicit line joining
            i += 1
            if source.startswith("\r\n", i):
                i += 1
            i += 1
            line += 1
            line_start = i
            continue

        match = _STRING_START.match(source, i)
        if match:
            end = _scan_string(source, match.end(), match.group(1), line, column)
            text = source[i:end]
            emit(TokenKind.STRING, text, i, line, column)
            newlines = text.count("\n")
            if newlines:
                line += newlines
                line_start = i + text.rfind("\n") + 1
            i = end
            continue

        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            match = _NUMBER.match(source, i)
            if match and match.end() > i:
                emit(TokenKind.NUMBER, match.group(), i, line, column)
                i = match.end()
                continue

        match = _NAME.match(source, i)
        if match:
            text = match.group()
            kind = TokenKind.KEYWORD if text in KEYWORDS else TokenKind.IDENTIFIER
            emit(kind, text, i, line, column)
            i = match.end()
            continue

        for op in _OPERATORS:
            if source.startswith(op, i):
                emit(TokenKind.OPERATOR, op, i, line, column)
                i += len(op)
                break
        else:
            if ch in _PUNCTUATION:
                emit(TokenKind.PUNCTUATION, ch, i, line, column)
                if ch in _OPENERS:
                    depth += 1
                elif ch in _CLOSERS and depth:
                    depth -= 1
            else:
                # stray characters ($, ?, backtick) are kept so lexing stays total
                emit(TokenKind.OPERATOR, ch, i, line, column)
            i += 1

    return tokens


def representations(tokens: list[Token]) -> RepresentationSet:
    r0 = tuple(tok.text for tok in tokens)
    body = [tok for tok in tokens if tok.kind is not TokenKind.NEWLINE]
    r1 = tuple(tok.text for tok in body)
    r2 = tuple(ID_PLACEHOLDER if tok.kind is TokenKind.IDENTIFIER else tok.text for tok in body)
    r3 = tuple(
        ID_PLACEHOLDER
        if tok.kind is TokenKind.IDENTIFIER
        else LITERAL_PLACEHOLDER
        if tok.kind in (TokenKind.NUMBER, TokenKind.STRING)
        else tok.text
        for tok in body
    )
    return RepresentationSet(r0, r1, r2, r3)


def represent(source: str) -> RepresentationSet:
    """Shortcut for ``representations(tokenize(source))``."""
    return representations(tokenize(source))
