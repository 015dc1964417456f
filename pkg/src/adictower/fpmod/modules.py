"""Finitely presented modules over a Euclidean domain.

A module is a generator count plus a relations matrix whose columns are the
relations.  Normalization brings a presentation to invariant-factor form
through a Smith decomposition of the relations; the change-of-coordinates
maps are kept so elements and morphisms can be moved between a module and
its normal form exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..exactalg.matrices import Matrix, matrices_equal, smith_form
from ..exactalg.rings import Ring, RingElement


class FpModule:
    """Module given by generators and a matrix of relation columns."""

    def __init__(self, ring: Ring, generators: int, relations: Matrix):
        if relations.ring != ring:
            raise ValueError("relations matrix over the wrong ring")
        if relations.rows != generators:
            raise ValueError(
                f"relations have {relations.rows} rows for {generators} generators"
            )
        self.ring = ring
        self.generators = generators
        self.relations = relations
        self._normalization: Optional["Normalization"] = None

    def same_presentation(self, other: "FpModule") -> bool:
        return (
            self.ring == other.ring
            and self.generators == other.generators
            and matrices_equal(self.relations, other.relations)
        )

    def __repr__(self):
        return f"FpModule(gens={self.generators}, rels={self.relations.cols})"


@dataclass(frozen=True)
class ModuleMorphism:
    """Morphism determined by generator images, the columns of ``matrix``."""

    source: FpModule
    target: FpModule
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.target.generators:
            raise ValueError("morphism matrix has wrong number of rows")
        if self.matrix.cols != self.source.generators:
            raise ValueError("morphism matrix has wrong number of columns")
        if self.matrix.ring != self.source.ring or self.source.ring != self.target.ring:
            raise ValueError("morphism endpoints over different rings")

    @property
    def ring(self) -> Ring:
        return self.source.ring


@dataclass(frozen=True)
class Normalization:
    """Invariant-factor data of a presentation.

    ``factors`` are the non-unit nonzero invariant factors in divisibility
    order, ``rank`` the number of free generators.  ``to_standard`` and
    ``from_standard`` are mutually inverse up to the relations and identify
    the module with ``standard`` (torsion generators first, then free).
    """

    factors: Tuple[RingElement, ...]
    rank: int
    standard: FpModule
    to_standard: ModuleMorphism
    from_standard: ModuleMorphism


def free_module(ring: Ring, n: int) -> FpModule:
    return FpModule(ring, n, Matrix.zeros(ring, n, 0))


def zero_module(ring: Ring) -> FpModule:
    return free_module(ring, 0)


def cyclic_module(ring: Ring, d) -> FpModule:
    return FpModule(ring, 1, Matrix.from_rows(ring, [[d]]))


def normalize(module: FpModule) -> Normalization:
    if module._normalization is not None:
        return module._normalization
    ring = module.ring
    sf = smith_form(module.relations)
    diag = sf.diagonal()
    torsion_idx: List[int] = []
    free_idx: List[int] = []
    for i in range(module.generators):
        d = diag[i] if i < len(diag) else ring.zero
        if d == ring.zero:
            free_idx.append(i)
        elif not ring.is_unit(d):
            torsion_idx.append(i)
    kept = torsion_idx + free_idx
    factors = tuple(diag[i] for i in torsion_idx)
    rank = len(free_idx)
    std_rel = Matrix(
        ring,
        len(kept),
        len(factors),
        tuple(
            tuple(factors[j] if i == j else ring.zero for j in range(len(factors)))
            for i in range(len(kept))
        ),
    )
    standard = FpModule(ring, len(kept), std_rel)
    to_std = ModuleMorphism(module, standard, sf.p.rows_at(kept))
    from_std = ModuleMorphism(standard, module, sf.p_inv.columns(kept))
    norm = Normalization(factors, rank, standard, to_std, from_std)
    module._normalization = norm
    return norm


def module_order(module: FpModule) -> Optional[int]:
    """Number of elements, or None for modules with free part."""
    norm = normalize(module)
    if norm.rank > 0:
        return None
    count = 1
    for f in norm.factors:
        count *= module.ring.residue_count(f)
    return count


def is_zero_module(module: FpModule) -> bool:
    norm = normalize(module)
    return norm.rank == 0 and not norm.factors


def annihilator_generator(module: FpModule) -> RingElement:
    """Canonical generator of Ann(M); 0 with free part, 1 for the zero module."""
    norm = normalize(module)
    if norm.rank > 0:
        return module.ring.zero
    if not norm.factors:
        return module.ring.one
    return norm.factors[-1]


def element_key(module: FpModule, column: Matrix) -> tuple:
    """Canonical coordinates of an element; equal classes get equal keys."""
    ring = module.ring
    norm = normalize(module)
    coords = norm.to_standard.matrix @ column
    key = []
    for i in range(norm.standard.generators):
        v = coords.entries[i][0]
        if i < len(norm.factors):
            v = ring.rem(v, norm.factors[i])
        key.append(v)
    return tuple(key)


def module_elements(module: FpModule, bound: int) -> Optional[List[Matrix]]:
    """All elements as generator columns, one per class, or None when the
    module is infinite or larger than ``bound``."""
    ring = module.ring
    norm = normalize(module)
    if norm.rank > 0:
        return None
    order = module_order(module)
    if order is None or order > bound:
        return None
    out = []
    for combo in itertools.product(*[list(ring.residues(f)) for f in norm.factors]):
        coords = Matrix.column(ring, list(combo))
        out.append(norm.from_standard.matrix @ coords)
    return out


def direct_sum(modules) -> Tuple[FpModule, List[ModuleMorphism], List[ModuleMorphism]]:
    """Finite direct sum with injections and projections (block layout)."""
    mods = list(modules)
    if not mods:
        raise ValueError("direct sum of no modules needs an explicit ring")
    ring = mods[0].ring
    total = sum(m.generators for m in mods)
    total_rels = sum(m.relations.cols for m in mods)
    rows = [[ring.zero] * total_rels for _ in range(total)]
    goff = 0
    roff = 0
    offsets = []
    for m in mods:
        offsets.append(goff)
        for i in range(m.generators):
            for j in range(m.relations.cols):
                rows[goff + i][roff + j] = m.relations.entries[i][j]
        goff += m.generators
        roff += m.relations.cols
    summed = FpModule(ring, total, Matrix(ring, total, total_rels, tuple(tuple(r) for r in rows)))
    injections = []
    projections = []
    for off, m in zip(offsets, mods):
        inj = Matrix(
            ring,
            total,
            m.generators,
            tuple(
                tuple(
                    ring.one if i == off + j else ring.zero
                    for j in range(m.generators)
                )
                for i in range(total)
            ),
        )
        proj = inj.transpose()
        injections.append(ModuleMorphism(m, summed, inj))
        projections.append(ModuleMorphism(summed, m, proj))
    return summed, injections, projections
