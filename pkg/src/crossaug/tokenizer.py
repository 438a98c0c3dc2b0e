"""Word-level tokenization with byte offsets, plus offset-based splicing.

Tokens keep exact byte positions into the source string so that span edits
can be written back without disturbing surrounding whitespace or punctuation.
"""
from __future__ import annotations

from dataclasses import dataclass

# Standalone punctuation marks; one token each unless sandwiched between
# word characters (so "don't" and "3.5" stay whole).
PUNCTUATION = frozenset(".,;:!?\"'()[]")

_WORD, _PUNCT, _SPACE = 0, 1, 2


@dataclass(frozen=True)
class Token:
    """A token plus its byte range [start, end) in the source string."""

    text: str
    start: int
    end: int


@dataclass(frozen=True)
class TokenSeq:
    """Tokenization of one source string, offsets in UTF-8 bytes."""

    source: str
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def __getitem__(self, i: int) -> Token:
        return self.tokens[i]

    def texts(self) -> list[str]:
        return [t.text for t in self.tokens]

    def span_text(self, start: int, stop: int) -> str:
        """Raw source substring covering tokens [start, stop), gaps included."""
        if start >= stop:
            return ""
        raw = self.source.encode("utf-8")
        return raw[self.tokens[start].start : self.tokens[stop - 1].end].decode("utf-8")


def _classify(ch: str) -> int:
    if ch.isspace():
        return _SPACE
    if ch in PUNCTUATION:
        return _PUNCT
    return _WORD


def tokenize(text: str) -> TokenSeq:
    """Split text into word tokens and standalone punctuation tokens.

    A punctuation character is kept inside a token only when both neighbours
    are word characters. Whitespace (any Unicode space) separates tokens and
    is never part of one.
    """
    kinds = [_classify(ch) for ch in text]
    n = len(kinds)

    def is_word_like(i: int) -> bool:
        if kinds[i] == _WORD:
            return True
        if kinds[i] != _PUNCT:
            return False
        return 0 < i < n - 1 and kinds[i - 1] == _WORD and kinds[i + 1] == _WORD

    tokens: list[Token] = []
    byte_pos = 0
    i = 0
    run_start_char = -1
    run_start_byte = -1
    for i, ch in enumerate(text):
        ch_bytes = len(ch.encode("utf-8"))
        if kinds[i] == _SPACE:
            if run_start_char >= 0:
                tokens.append(Token(text[run_start_char:i], run_start_byte, byte_pos))
                run_start_char = -1
        elif is_word_like(i):
            if run_start_char < 0:
                run_start_char = i
                run_start_byte = byte_pos
        else:
            # standalone punctuation: closes any open run, then its own token
            if run_start_char >= 0:
                tokens.append(Token(text[run_start_char:i], run_start_byte, byte_pos))
                run_start_char = -1
            tokens.append(Token(ch, byte_pos, byte_pos + ch_bytes))
        byte_pos += ch_bytes
    if run_start_char >= 0:
        tokens.append(Token(text[run_start_char:], run_start_byte, byte_pos))
    return TokenSeq(text, tuple(tokens))


def splice(seq: TokenSeq, start: int, stop: int, replacement: str) -> str:
    """Replace the bytes covered by tokens [start, stop) with replacement.

    With start == stop the replacement is inserted before token `start`
    (at end of string when start equals the token count). Deletions
    (empty replacement over a non-empty range) collapse the whitespace
    left at the seam to a single space, or trim it at the string edges.
    """
    if not 0 <= start <= stop <= len(seq.tokens):
        raise IndexError(
            f"token range [{start}, {stop}) out of bounds for {len(seq.tokens)} tokens"
        )
    raw = seq.source.encode("utf-8")
    if start == stop:
        at = seq.tokens[start].start if start < len(seq.tokens) else len(raw)
        return (raw[:at] + replacement.encode("utf-8") + raw[at:]).decode("utf-8")

    prefix = raw[: seq.tokens[start].start]
    suffix = raw[seq.tokens[stop - 1].end :]
    if replacement == "":
        p = prefix.rstrip(b" ")
        s = suffix.lstrip(b" ")
        if p != prefix or s != suffix:
            if not p or not s:
                return (p + s).decode("utf-8")
            return (p + b" " + s).decode("utf-8")
        return (prefix + suffix).decode("utf-8")
    return (prefix + replacement.encode("utf-8") + suffix).decode("utf-8")
