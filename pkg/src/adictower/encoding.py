"""JSON-friendly encodings of ring elements, matrices and module data.

Ring elements become strings through the ring's own formatter, so the
encodings stay exact and round-trip through ``Ring.parse``.
"""

from __future__ import annotations

from typing import List

from .exactalg.matrices import Matrix
from .exactalg.rings import Ring
from .fpmod.modules import FpModule, ModuleMorphism
from .towers import CoherentElement


def element_to_json(ring: Ring, value) -> str:
    return ring.format(value)


def element_from_json(ring: Ring, text: str):
    return ring.parse(text)


def matrix_to_json(matrix: Matrix) -> List[List[str]]:
    ring = matrix.ring
    return [[ring.format(v) for v in row] for row in matrix.entries]


def matrix_from_json(ring: Ring, rows: List[List[str]], cols: int = 0) -> Matrix:
    if not rows:
        return Matrix.zeros(ring, 0, cols)
    parsed = [[ring.parse(v) for v in row] for row in rows]
    return Matrix.from_rows(ring, parsed)


def module_to_json(module: FpModule) -> dict:
    return {
        "generators": module.generators,
        "relations": matrix_to_json(module.relations),
        "relation_count": module.relations.cols,
    }


def module_from_json(ring: Ring, data: dict) -> FpModule:
    gens = int(data["generators"])
    rel = matrix_from_json(ring, data["relations"], cols=int(data["relation_count"]))
    if rel.rows == 0 and gens > 0:
        rel = Matrix.zeros(ring, gens, int(data["relation_count"]))
    return FpModule(ring, gens, rel)


def morphism_to_json(f: ModuleMorphism) -> dict:
    return {
        "source": module_to_json(f.source),
        "target": module_to_json(f.target),
        "matrix": matrix_to_json(f.matrix),
    }


def coherent_to_json(ring: Ring, elem: CoherentElement) -> dict:
    return {
        "level": elem.level,
        "components": [ring.format(c) for c in elem.components],
    }
