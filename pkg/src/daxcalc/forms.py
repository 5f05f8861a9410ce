"""Disc presentations relative to a base disc, and their move calculus.

A presentation lists double tubes (nontrivial 2-torsion elements) and signed
self-referential discs (nontrivial elements with a sign).  Raw data may repeat
tubes and carry opposite-signed duplicates; normalization applies the three
moves that do not change the isotopy class:

  1. merge each pair of equal double tubes into one +1 self-referential disc
     carrying the same element,
  2. cancel opposite-signed self-referential discs on the same element, and
  3. sort both lists canonically (any permutation is allowed, so the order
     carries no information).

Normalized data satisfies the distinctness and no-opposite-pair constraints
and is a fixed point of normalize.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import ValidationError
from .groups import GroupElement, GroupSpec, canonical_key
from .kernel import ExplicitKernel, KernelSpec


@dataclass(frozen=True)
class SRData:
    """Disc data: double tubes and signed self-referential discs."""

    double_tubes: tuple[GroupElement, ...] = ()
    sr_discs: tuple[tuple[int, GroupElement], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "double_tubes", tuple(self.double_tubes))
        object.__setattr__(self, "sr_discs", tuple(tuple(d) for d in self.sr_discs))

    @property
    def is_empty(self) -> bool:
        return not self.double_tubes and not self.sr_discs


@dataclass(frozen=True)
class ManifoldModel:
    """The ambient data the invariant depends on: group, kernel, a label."""

    group: GroupSpec
    kernel: KernelSpec
    label: str = ""

    def __post_init__(self):
        if isinstance(self.kernel, ExplicitKernel):
            for i, gen in enumerate(self.kernel.generators):
                if gen.spec != self.group:
                    raise ValidationError(
                        f"kernel generators[{i}] is not over the manifold group"
                    )

    def describe(self) -> str:
        return f"group: {self.group}  kernel: {self.kernel.describe()}"


def validate(data: SRData, manifold: ManifoldModel) -> list[str]:
    """Check the raw-data constraints; returns one message per violation."""
    problems: list[str] = []
    for i, tube in enumerate(data.double_tubes):
        if tube.spec != manifold.group:
            problems.append(f"double_tubes[{i}]: element is not over the manifold group")
        elif tube.is_identity:
            problems.append(f"double_tubes[{i}]: element is trivial")
        elif not tube.is_two_torsion():
            problems.append(f"double_tubes[{i}]: element is not 2-torsion")
    for j, (sign, g) in enumerate(data.sr_discs):
        if sign not in (1, -1):
            problems.append(f"sr_discs[{j}]: sign must be +1 or -1, got {sign}")
        if not isinstance(g, GroupElement) or g.spec != manifold.group:
            problems.append(f"sr_discs[{j}]: element is not over the manifold group")
        elif g.is_identity:
            problems.append(f"sr_discs[{j}]: element is trivial")
    return problems


def validate_or_raise(data: SRData, manifold: ManifoldModel) -> None:
    problems = validate(data, manifold)
    if problems:
        raise ValidationError("invalid disc data: " + "; ".join(problems))


def concat(d1: SRData, d2: SRData) -> SRData:
    """List concatenation of the two presentations; no moves applied."""
    specs = {g.spec for g in d1.double_tubes + d2.double_tubes}
    specs.update(g.spec for _, g in d1.sr_discs + d2.sr_discs)
    if len(specs) > 1:
        raise ValidationError("cannot concatenate disc data over different manifolds")
    return SRData(d1.double_tubes + d2.double_tubes, d1.sr_discs + d2.sr_discs)


def normalize(data: SRData, manifold: ManifoldModel) -> SRData:
    """Apply tube merging, disc cancellation and canonical sorting to a fixed point."""
    validate_or_raise(data, manifold)
    tube_counts = Counter(data.double_tubes)
    tubes = [t for t, count in tube_counts.items() if count % 2 == 1]
    net = Counter()
    for t, count in tube_counts.items():
        net[t] += count // 2
    for sign, g in data.sr_discs:
        net[g] += sign
    discs: list[tuple[int, GroupElement]] = []
    for g, total in net.items():
        if total:
            discs.extend([(1 if total > 0 else -1, g)] * abs(total))
    tubes.sort(key=canonical_key)
    discs.sort(key=lambda item: (canonical_key(item[1]), -item[0]))
    return SRData(tuple(tubes), tuple(discs))


def negate_data(data: SRData) -> SRData:
    """Data whose invariant value is the negative of the input's.

    Signs of self-referential discs flip; each double tube keeps a copy and
    gains a -1 self-referential disc on the same element, since two equal
    tubes merge into a single +1 disc.
    """
    tubes = data.double_tubes
    discs = [(-sign, g) for sign, g in data.sr_discs]
    discs.extend((-1, t) for t in tubes)
    return SRData(tubes, tuple(discs))
