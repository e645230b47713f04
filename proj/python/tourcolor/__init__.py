"""Dichromatic and domination numbers of tournaments."""

import json

from ._core import (
    InfeasibleError,
    ParseError,
    Tournament,
    TourcolorError,
    dichromatic_number,
    domination_number,
    locality,
    run_cli,
    theorem_constants,
)
from ._core import color_t_local as _color_t_local
from ._core import extract as _extract


def color_t_local(t):
    return json.loads(_color_t_local(t))


def extract(t, k, permissive=False):
    return json.loads(_extract(t, k, permissive))


__all__ = [
    "InfeasibleError",
    "ParseError",
    "Tournament",
    "TourcolorError",
    "color_t_local",
    "dichromatic_number",
    "domination_number",
    "extract",
    "locality",
    "run_cli",
    "theorem_constants",
]
