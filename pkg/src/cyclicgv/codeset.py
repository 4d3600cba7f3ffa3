"""CodeSet: a finite set of equal-length codewords, plus its file format.

The on-disk format is line-oriented text:

    n=<n> delta=<p>/<q> kind=<autocyclic|packed>
    <word 0>
    <word 1>
    ...

Words are textual bit strings sorted ascending as binary integers, so a
file round-trips byte for byte through parse + re-serialize.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator

from .codeword import Codeword, DistanceThreshold
from .errors import DomainError, ParseError

KINDS = ("autocyclic", "packed")

_HEADER_RE = re.compile(r"^n=(\d+) delta=(\d+)/(\d+) kind=(autocyclic|packed)$")


@dataclass(frozen=True)
class CodeSet:
    """An immutable set of packed word values of common length.

    ``cyclic_closed`` is a claim recorded by the producer; the verify
    module checks it from raw bits and never trusts it.
    """

    length: int
    words: frozenset[int]
    delta: DistanceThreshold | None = None
    kind: str = "autocyclic"
    cyclic_closed: bool = False
    _sorted_cache: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        if self.length < 1:
            raise DomainError("code length must be >= 1")
        if self.kind not in KINDS:
            raise DomainError(f"kind must be one of {KINDS}, got {self.kind!r}")
        limit = 1 << self.length
        for v in self.words:
            if not 0 <= v < limit:
                raise DomainError(
                    f"word value {v} does not fit in {self.length} bits")

    @property
    def size(self) -> int:
        return len(self.words)

    def sorted_values(self) -> list[int]:
        if not self._sorted_cache and self.words:
            # idempotent fill keeps concurrent first calls harmless
            self._sorted_cache[:] = sorted(self.words)
        return self._sorted_cache

    def codewords(self) -> Iterator[Codeword]:
        for v in self.sorted_values():
            yield Codeword(v, self.length)

    def __contains__(self, item) -> bool:
        if isinstance(item, Codeword):
            return item.length == self.length and item.value in self.words
        return item in self.words

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_values())

    def __len__(self) -> int:
        return len(self.words)

    def to_text(self) -> str:
        if self.delta is None:
            raise DomainError("cannot serialize a CodeSet without a threshold")
        lines = [f"n={self.length} delta={self.delta} kind={self.kind}"]
        lines.extend(format(v, f"0{self.length}b") for v in self.sorted_values())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CodeSet":
        lines = text.splitlines()
        if not lines:
            raise ParseError("empty code file")
        m = _HEADER_RE.match(lines[0])
        if not m:
            raise ParseError(f"bad header line: {lines[0]!r}")
        n = int(m.group(1))
        delta = DistanceThreshold(int(m.group(2)), int(m.group(3)))
        kind = m.group(4)
        words = set()
        for idx, line in enumerate(lines[1:], start=2):
            if len(line) != n or any(ch not in "01" for ch in line):
                raise ParseError(f"line {idx}: not a length-{n} word: {line!r}")
            v = int(line, 2)
            if v in words:
                raise ParseError(f"line {idx}: duplicate word {line!r}")
            words.add(v)
        return cls(length=n, words=frozenset(words), delta=delta, kind=kind)

    def to_file(self, path) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.to_text())

    @classmethod
    def from_file(cls, path) -> "CodeSet":
        with open(path, "r", encoding="ascii") as fh:
            return cls.from_text(fh.read())
