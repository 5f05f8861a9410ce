"""Exact word arithmetic in free products of cyclic groups.

Elements are reduced words: sequences of (factor index, exponent) syllables
with adjacent syllables in distinct factors and no zero exponents.  Reduction
by cascading syllable merges solves the word problem for this group class,
which covers every fundamental group the calculator works with (free groups,
finite cyclic groups and their free products, and the trivial group as the
empty product).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import ValidationError

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Factor:
    """One cyclic factor: infinite cyclic when order is None, else Z/order."""

    name: str
    order: int | None = None

    def __post_init__(self):
        if not isinstance(self.name, str) or not _NAME_RE.match(self.name):
            raise ValidationError(f"invalid factor name {self.name!r}")
        if self.order is not None and self.order < 2:
            raise ValidationError(
                f"finite factor {self.name!r} must have order >= 2, got {self.order}"
            )


@dataclass(frozen=True)
class GroupSpec:
    """An ordered free product of cyclic factors; empty means the trivial group."""

    factors: tuple[Factor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        names = [f.name for f in self.factors]
        if len(set(names)) != len(names):
            raise ValidationError("factor names must be pairwise distinct")

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def index_of(self, name: str) -> int:
        for i, f in enumerate(self.factors):
            if f.name == name:
                return i
        raise ValidationError(f"unknown factor name {name!r}")

    def identity(self) -> "GroupElement":
        return GroupElement(self, ())

    def generator(self, name: str) -> "GroupElement":
        return self.element([(name, 1)])

    def element(self, syllables: Iterable[tuple[Union[int, str], int]]) -> "GroupElement":
        """Build the reduced word with the given syllables, merging as needed."""
        stack: list[tuple[int, int]] = []
        for ref, exp in syllables:
            idx = ref if isinstance(ref, int) else self.index_of(ref)
            self._push(stack, idx, exp)
        return GroupElement(self, tuple(stack))

    def _normalize_exponent(self, index: int, exp: int) -> int:
        if not 0 <= index < len(self.factors):
            raise ValidationError(f"factor index {index} out of range")
        order = self.factors[index].order
        return exp % order if order is not None else exp

    def _push(self, stack: list[tuple[int, int]], index: int, exp: int) -> None:
        if stack and stack[-1][0] == index:
            exp += stack.pop()[1]
        exp = self._normalize_exponent(index, exp)
        if exp != 0:
            stack.append((index, exp))

    def __str__(self) -> str:
        if self.is_trivial:
            return "1"
        parts = [f.name if f.order is None else f"{f.name}(order {f.order})" for f in self.factors]
        return " * ".join(parts)


@dataclass(frozen=True)
class GroupElement:
    """A reduced word over a GroupSpec; the empty word is the identity."""

    spec: GroupSpec
    syllables: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "syllables", tuple(tuple(s) for s in self.syllables))
        prev = None
        for index, exp in self.syllables:
            exp_norm = self.spec._normalize_exponent(index, exp)
            if exp_norm == 0 or exp_norm != exp:
                raise ValidationError(f"exponent {exp} not reduced for factor index {index}")
            if prev == index:
                raise ValidationError("adjacent syllables must use distinct factors")
            prev = index

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.spec != self.spec:
            raise ValidationError("cannot multiply elements over different group specs")
        stack = list(self.syllables)
        for index, exp in other.syllables:
            self.spec._push(stack, index, exp)
        return GroupElement(self.spec, tuple(stack))

    def __invert__(self) -> "GroupElement":
        return self.spec.element((index, -exp) for index, exp in reversed(self.syllables))

    def __pow__(self, n: int) -> "GroupElement":
        base = ~self if n < 0 else self
        n = abs(n)
        result = self.spec.identity()
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_two_torsion(self) -> bool:
        """True iff the element is nontrivial and squares to the identity."""
        return not self.is_identity and (self * self).is_identity

    def __str__(self) -> str:
        if self.is_identity:
            return "1"
        parts = []
        for index, exp in self.syllables:
            name = self.spec.factors[index].name
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return "*".join(parts)

    def __lt__(self, other: "GroupElement") -> bool:
        return canonical_key(self) < canonical_key(other)


def canonical_key(g: GroupElement):
    """Sort key realizing the canonical total order on reduced words.

    Shorter words come first; ties break syllable by syllable on
    (factor index, |exponent|, sign) with positive exponents before negative.
    """
    return (
        len(g.syllables),
        tuple((index, abs(exp), 0 if exp > 0 else 1) for index, exp in g.syllables),
    )


def compare_canonical(a: GroupElement, b: GroupElement) -> int:
    """Three-way comparison under the canonical order: -1, 0 or 1."""
    if a.spec != b.spec:
        raise ValidationError("cannot compare elements over different group specs")
    ka, kb = canonical_key(a), canonical_key(b)
    return (ka > kb) - (ka < kb)
