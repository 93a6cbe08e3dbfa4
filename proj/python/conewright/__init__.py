"""Hyperbolic polyhedra: volumes, face gluings, holonomy and framing checks.

Thin Python veneer over the compiled core.  Structured results cross the
boundary as JSON text so Python sees exactly the numbers the C++ side prints.
"""
from __future__ import annotations

import json
from typing import Any, Dict, List, Sequence, Tuple

from conewright._core import (  # noqa: F401
    angles_from_b,
    b_from_angles,
    build_geometry_json,
    check_weave4_json,
    classify_json,
    cone_check_json,
    framing_group_json,
    lift_check_json,
    lobachevsky,
    schlafli_json,
    sphere_volume,
    structure_volume,
)

__all__ = [
    "lobachevsky",
    "structure_volume",
    "sphere_volume",
    "angles_from_b",
    "b_from_angles",
    "build_geometry",
    "check_weave4",
    "classify",
    "cone_check",
    "lift_check",
    "framing_group",
    "schlafli_check",
]


def build_geometry(q: Sequence[float], t: float) -> Dict[str, Any]:
    """Full derived geometry of the shape with side ratios q and height t."""
    return json.loads(build_geometry_json(list(q), float(t)))


def schlafli_check(
    q0: Sequence[float], t0: float, q1: Sequence[float], t1: float, steps: int = 1000
) -> Dict[str, Any]:
    """First-variation check along the straight parameter path."""
    return json.loads(schlafli_json(list(q0), float(t0), list(q1), float(t1), int(steps)))


def check_weave4(q: Sequence[float], t: float) -> List[Dict[str, Any]]:
    """Edge-cycle reports of the shipped four-copy gluing."""
    return json.loads(check_weave4_json(list(q), float(t)))


def classify(matrix: Sequence[float]) -> Dict[str, Any]:
    """Conjugacy class of a unit-determinant matrix given as eight reals."""
    return json.loads(classify_json(list(matrix)))


def lift_check(rep: Dict[str, Any]) -> Dict[str, Any]:
    """Relator verification plus the sign-lift decision."""
    return json.loads(lift_check_json(json.dumps(rep)))


def cone_check(rep: Dict[str, Any]) -> Dict[str, Any]:
    """Cone-pair / cusp classification of the representation's (mu, lambda)."""
    return json.loads(cone_check_json(json.dumps(rep)))


def framing_group(handles: Dict[str, Any]) -> Dict[str, Any]:
    """Structure of the unobstructed correction group."""
    return json.loads(framing_group_json(json.dumps(handles)))


def b_from_angles_list(alpha: Sequence[float]) -> Tuple[List[float], float]:
    """Inverse angle map returning plain Python containers."""
    q, t = b_from_angles(list(alpha))
    return list(q), float(t)
