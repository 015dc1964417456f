"""Operations on morphisms of finitely presented modules.

Everything here reduces to exact linear algebra against presentation
matrices: well-definedness and equality are solvability questions, kernels
come from kernel bases of block matrices, cokernels from augmented
relations.  Isomorphism checks return certificates (the inverse, or the
failing side) rather than bare booleans where the callers need them.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional, Tuple

from ..exactalg.matrices import (
    Matrix,
    hstack,
    kernel_basis,
    solve_matrix,
)
from .modules import (
    FpModule,
    ModuleMorphism,
    is_zero_module,
    normalize,
)


class WellDefined(NamedTuple):
    ok: bool
    certificate: Optional[Matrix]


def identity_morphism(module: FpModule) -> ModuleMorphism:
    return ModuleMorphism(module, module, Matrix.identity(module.ring, module.generators))


def zero_morphism(source: FpModule, target: FpModule) -> ModuleMorphism:
    return ModuleMorphism(
        source, target, Matrix.zeros(source.ring, target.generators, source.generators)
    )


def is_well_defined(f: ModuleMorphism) -> WellDefined:
    """Check that f sends source relations into target relations.

    The certificate expresses the images of the source relations as
    combinations of target relations.
    """
    images = f.matrix @ f.source.relations
    if images.cols == 0 or images.is_zero():
        return WellDefined(True, Matrix.zeros(f.ring, f.target.relations.cols, images.cols))
    cert = solve_matrix(f.target.relations, images)
    return WellDefined(cert is not None, cert)


def compose(second: ModuleMorphism, first: ModuleMorphism) -> ModuleMorphism:
    if not second.source.same_presentation(first.target):
        raise ValueError("composition endpoint mismatch")
    return ModuleMorphism(first.source, second.target, second.matrix @ first.matrix)


def equal_morphisms(f: ModuleMorphism, g: ModuleMorphism) -> bool:
    """Equality as maps, i.e. the difference lands in the target relations."""
    if not f.source.same_presentation(g.source) or not f.target.same_presentation(
        g.target
    ):
        raise ValueError("comparing morphisms with different endpoints")
    diff = f.matrix.sub(g.matrix)
    if diff.is_zero():
        return True
    return solve_matrix(f.target.relations, diff) is not None


def is_zero_morphism(f: ModuleMorphism) -> bool:
    return equal_morphisms(f, zero_morphism(f.source, f.target))


class Submodule(NamedTuple):
    module: FpModule
    inclusion: ModuleMorphism


def submodule(ambient: FpModule, columns: Matrix) -> Submodule:
    """Submodule generated by the given columns of the ambient module.

    The presentation is saturated: a combination of the generators is a
    relation exactly when it lands in the ambient relations.
    """
    if columns.rows != ambient.generators:
        raise ValueError("submodule generators have wrong length")
    ring = ambient.ring
    stacked = hstack([columns, ambient.relations])
    basis = kernel_basis(stacked)
    rel = basis.row_slice(0, columns.cols)
    module = FpModule(ring, columns.cols, rel)
    inclusion = ModuleMorphism(module, ambient, columns)
    return Submodule(module, inclusion)


def kernel(f: ModuleMorphism) -> Submodule:
    """Kernel as a saturated submodule of the source."""
    stacked = hstack([f.matrix, f.target.relations])
    basis = kernel_basis(stacked)
    gens = basis.row_slice(0, f.source.generators)
    return submodule(f.source, gens)


def cokernel(f: ModuleMorphism) -> Tuple[FpModule, ModuleMorphism]:
    """Target modulo the image, with the projection."""
    rel = hstack([f.target.relations, f.matrix])
    quot = FpModule(f.ring, f.target.generators, rel)
    proj = ModuleMorphism(
        f.target, quot, Matrix.identity(f.ring, f.target.generators)
    )
    return quot, proj


class ImageFactorization(NamedTuple):
    module: FpModule
    inclusion: ModuleMorphism
    surjection: ModuleMorphism


def image(f: ModuleMorphism) -> ImageFactorization:
    """Image submodule of the target, factoring f as inclusion o surjection."""
    sub = submodule(f.target, f.matrix)
    surj = ModuleMorphism(
        f.source, sub.module, Matrix.identity(f.ring, f.source.generators)
    )
    return ImageFactorization(sub.module, sub.inclusion, surj)


def is_injective(f: ModuleMorphism) -> bool:
    return is_zero_module(kernel(f).module)


def is_surjective(f: ModuleMorphism) -> bool:
    quot, _ = cokernel(f)
    return is_zero_module(quot)


def is_isomorphism(f: ModuleMorphism) -> bool:
    return is_well_defined(f).ok and is_injective(f) and is_surjective(f)


def invert_isomorphism(f: ModuleMorphism) -> ModuleMorphism:
    """Two-sided inverse of an isomorphism (raises on non-isomorphisms)."""
    ring = f.ring
    stacked = hstack([f.matrix, f.target.relations])
    sol = solve_matrix(stacked, Matrix.identity(ring, f.target.generators))
    if sol is None:
        raise ValueError("morphism is not surjective, cannot invert")
    back = ModuleMorphism(
        f.target, f.source, sol.row_slice(0, f.source.generators)
    )
    if not is_well_defined(back).ok:
        raise ValueError("morphism is not invertible")
    if not equal_morphisms(compose(back, f), identity_morphism(f.source)):
        raise ValueError("morphism is not injective, cannot invert")
    return back


def submodule_contains(ambient: FpModule, big: Matrix, small: Matrix) -> bool:
    """True when every column of ``small`` lies in the span of ``big`` plus
    the ambient relations."""
    stacked = hstack([big, ambient.relations])
    return solve_matrix(stacked, small) is not None


def submodules_equal(ambient: FpModule, a: Matrix, b: Matrix) -> bool:
    return submodule_contains(ambient, a, b) and submodule_contains(ambient, b, a)


def find_isomorphism(source: FpModule, target: FpModule) -> Optional[ModuleMorphism]:
    """An explicit isomorphism between the modules, or None.

    Both normal forms must agree (same invariant factors and rank); the map
    is assembled through the standard forms.
    """
    if source.ring != target.ring:
        return None
    ns, nt = normalize(source), normalize(target)
    if ns.factors != nt.factors or ns.rank != nt.rank:
        return None
    mat = nt.from_standard.matrix @ ns.to_standard.matrix
    return ModuleMorphism(source, target, mat)


def morphism_from_images(
    source: FpModule, target: FpModule, columns: List[Matrix]
) -> ModuleMorphism:
    if len(columns) != source.generators:
        raise ValueError("one image column per source generator required")
    if columns:
        mat = hstack(columns)
    else:
        mat = Matrix.zeros(source.ring, target.generators, 0)
    return ModuleMorphism(source, target, mat)
