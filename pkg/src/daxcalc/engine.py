"""The disc invariant and the three-valued isotopy comparison.

phi sends a presentation to the reduced sum of its tube elements and signed
pairs g + g^-1 in the quotient of the group ring by the kernel.  A nonzero
phi difference certifies non-isotopy; equality of normalized data certifies
isotopy; over the trivial group everything is isotopic.  When phi values
agree but the data differ the answer is UNKNOWN: the kernel of phi is not
known in general, and the calculator never overclaims.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .forms import ManifoldModel, SRData, normalize, validate_or_raise
from .kernel import equal_mod_kernel
from .ring import RingElement, dax_sum, monomial

ISOTOPIC = "ISOTOPIC"
NOT_ISOTOPIC = "NOT_ISOTOPIC"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Verdict:
    outcome: str
    certificate: str
    rule: str


def phi(data: SRData, manifold: ManifoldModel) -> RingElement:
    """Invariant value of a presentation, reduced modulo the manifold kernel."""
    validate_or_raise(data, manifold)
    total = RingElement.zero(manifold.group)
    for tube in data.double_tubes:
        total = total + monomial(tube, 1)
    for sign, g in data.sr_discs:
        total = total + dax_sum(g, sign)
    return manifold.kernel.reduce(total)


def compare(d1: SRData, d2: SRData, manifold: ManifoldModel) -> Verdict:
    """Decide (non-)isotopy of two presentations over the same manifold."""
    validate_or_raise(d1, manifold)
    validate_or_raise(d2, manifold)
    if manifold.group.is_trivial:
        return Verdict(ISOTOPIC, "pi1(M) = 1", "pi1-trivial")
    n1 = normalize(d1, manifold)
    n2 = normalize(d2, manifold)
    if n1 == n2:
        return Verdict(ISOTOPIC, _format_data(n1), "equal-normal-form")
    v1 = phi(d1, manifold)
    v2 = phi(d2, manifold)
    if not equal_mod_kernel(v1, v2, manifold.kernel):
        difference = manifold.kernel.reduce(v1 - v2)
        if difference.is_zero:
            raise ValidationError("internal: zero certificate for a nonzero difference")
        return Verdict(NOT_ISOTOPIC, str(difference), "phi-difference")
    return Verdict(UNKNOWN, str(v1), "phi-coincide")


def _format_data(data: SRData) -> str:
    tubes = ", ".join(str(t) for t in data.double_tubes)
    discs = ", ".join(f"{'+' if s > 0 else '-'}{g}" for s, g in data.sr_discs)
    return f"tubes [{tubes}] discs [{discs}]"
