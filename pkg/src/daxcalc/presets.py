"""Built-in manifold models.

Three presets cover the worked examples: the boundary connect sum of
S^2 x D^2 and S^1 x B^3 (infinite cyclic group, zero kernel), the interior
connect sum of the same pieces (infinite cyclic group, inverse-pair kernel),
and a simply connected manifold (trivial group, zero kernel).  Kernels for
other manifolds are supplied by the user as explicit generator lists.
"""

from __future__ import annotations

from .errors import ValidationError
from .forms import ManifoldModel
from .groups import Factor, GroupSpec
from .kernel import InversePairsKernel, TrivialKernel

PRESET_IDS = ("boundary_connect_sum", "connect_sum", "simply_connected")


def instantiate(preset_id: str) -> ManifoldModel:
    if preset_id == "boundary_connect_sum":
        return ManifoldModel(
            GroupSpec((Factor("t"),)),
            TrivialKernel(),
            "boundary connect sum of S^2 x D^2 and S^1 x B^3",
        )
    if preset_id == "connect_sum":
        return ManifoldModel(
            GroupSpec((Factor("t"),)),
            InversePairsKernel(),
            "connect sum of S^2 x D^2 and S^1 x B^3",
        )
    if preset_id == "simply_connected":
        return ManifoldModel(GroupSpec(), TrivialKernel(), "simply connected manifold")
    raise ValidationError(
        f"unknown preset {preset_id!r}; available: {', '.join(PRESET_IDS)}"
    )
