"""Exactness checks for complexes of finitely presented modules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from ..exactalg.matrices import Matrix, hstack, kernel_basis
from .modules import FpModule, ModuleMorphism
from .morphisms import (
    compose,
    is_injective,
    is_surjective,
    is_zero_morphism,
    submodule_contains,
    zero_morphism,
)


class ExactnessResult(NamedTuple):
    ok: bool
    failing_index: Optional[int]


def _kernel_columns(f: ModuleMorphism) -> Matrix:
    stacked = hstack([f.matrix, f.target.relations])
    basis = kernel_basis(stacked)
    return basis.row_slice(0, f.source.generators)


def is_exact(maps: List[ModuleMorphism]) -> ExactnessResult:
    """Exactness at every interior node of a composable chain.

    ``failing_index`` is the first interior position (0-based, counting the
    target of maps[0] as position 0) where image and kernel differ.
    """
    for left, right in zip(maps, maps[1:]):
        if not right.source.same_presentation(left.target):
            raise ValueError("chain maps do not compose")
    for i in range(len(maps) - 1):
        left, right = maps[i], maps[i + 1]
        node = left.target
        if not is_zero_morphism(compose(right, left)):
            return ExactnessResult(False, i)
        ker_cols = _kernel_columns(right)
        if not submodule_contains(node, left.matrix, ker_cols):
            return ExactnessResult(False, i)
    return ExactnessResult(True, None)


@dataclass(frozen=True)
class ShortExactSeq:
    left: FpModule
    middle: FpModule
    right: FpModule
    inject: ModuleMorphism
    surject: ModuleMorphism

    def validate(self) -> Tuple[bool, str]:
        """Full short-exactness: injectivity, surjectivity, middle exactness."""
        if not self.inject.source.same_presentation(self.left):
            return False, "inject does not start at the left module"
        if not self.inject.target.same_presentation(self.middle):
            return False, "inject does not end at the middle module"
        if not self.surject.source.same_presentation(self.middle):
            return False, "surject does not start at the middle module"
        if not self.surject.target.same_presentation(self.right):
            return False, "surject does not end at the right module"
        if not is_injective(self.inject):
            return False, "inject has nontrivial kernel"
        if not is_surjective(self.surject):
            return False, "surject is not onto"
        result = is_exact([self.inject, self.surject])
        if not result.ok:
            return False, "image of inject differs from kernel of surject"
        return True, ""


def submodule_quotient(
    ambient: FpModule, columns: Matrix
) -> Tuple[FpModule, ModuleMorphism, FpModule, ModuleMorphism]:
    """Submodule generated by the columns, its inclusion, the quotient by it,
    and the projection."""
    from .morphisms import submodule

    sub = submodule(ambient, columns)
    rel = hstack([ambient.relations, columns])
    quot = FpModule(ambient.ring, ambient.generators, rel)
    proj = ModuleMorphism(
        ambient, quot, Matrix.identity(ambient.ring, ambient.generators)
    )
    return sub.module, sub.inclusion, quot, proj


def complex_is_zero_composite(maps: List[ModuleMorphism]) -> bool:
    """Whether all consecutive composites vanish (complex condition only)."""
    for left, right in zip(maps, maps[1:]):
        if not is_zero_morphism(compose(right, left)):
            return False
    return True


def make_bounded_complex(
    left_end: FpModule, maps: List[ModuleMorphism], right_end: FpModule
) -> List[ModuleMorphism]:
    """Pad a chain with zero maps from/to the given end modules."""
    if not maps:
        raise ValueError("empty chain")
    head = zero_morphism(left_end, maps[0].source)
    tail = zero_morphism(maps[-1].target, right_end)
    return [head] + list(maps) + [tail]
