"""Hom and tensor constructions on finitely presented modules.

Both functors land back in finitely presented modules with explicit
presentations.  The hom module carries an encoder/decoder pair between its
elements and actual morphisms; the tensor module carries a pure-tensor
encoder.  Induced maps (pre/post composition, tensoring a morphism) are
computed columnwise through those encoders, so they stay consistent with
the presentations by construction.
"""

from __future__ import annotations

from typing import List, NamedTuple

from ..exactalg.matrices import Matrix, hstack, kronecker
from .modules import FpModule, ModuleMorphism, normalize
from .morphisms import compose


class _HomBasisEntry(NamedTuple):
    source_index: int
    target_index: int
    scale: object
    annihilator: object


class HomModule:
    """Hom(M, N) presented on a basis of elementary morphisms.

    Between standard-form generators R/(d) -> R/(e) the morphisms are
    multiples of 1 -> e/gcd(d, e), with coefficient well defined modulo
    gcd(d, e); free-to-free components are a full copy of R.  ``decode``
    turns a coefficient column into a ModuleMorphism, ``encode`` inverts it
    (and raises on matrices that do not define a morphism).
    """

    def __init__(self, source: FpModule, target: FpModule):
        ring = source.ring
        if target.ring != ring:
            raise ValueError("hom of modules over different rings")
        self.source = source
        self.target = target
        self.ring = ring
        ns, nt = normalize(source), normalize(target)
        self._ns, self._nt = ns, nt
        basis: List[_HomBasisEntry] = []
        grid = {}
        for i in range(ns.standard.generators):
            d = ns.factors[i] if i < len(ns.factors) else None
            for j in range(nt.standard.generators):
                e = nt.factors[j] if j < len(nt.factors) else None
                if e is None:
                    if d is None:
                        grid[(i, j)] = ("basis", len(basis))
                        basis.append(_HomBasisEntry(i, j, ring.one, ring.zero))
                    else:
                        grid[(i, j)] = ("zero",)
                    continue
                dd = d if d is not None else ring.zero
                g = ring.gcd(dd, e)
                scale = ring.div(e, g)
                if ring.is_unit(g):
                    grid[(i, j)] = ("divisible", scale)
                else:
                    grid[(i, j)] = ("basis", len(basis))
                    basis.append(_HomBasisEntry(i, j, scale, g))
        self.basis = tuple(basis)
        self._grid = grid
        ann_cols = [t for t, b in enumerate(basis) if b.annihilator != ring.zero]
        rel = Matrix(
            ring,
            len(basis),
            len(ann_cols),
            tuple(
                tuple(
                    basis[t].annihilator if t == ann_cols[c] else ring.zero
                    for c in range(len(ann_cols))
                )
                for t in range(len(basis))
            ),
        )
        self.module = FpModule(ring, len(basis), rel)

    def decode(self, column: Matrix) -> ModuleMorphism:
        """Morphism represented by a coefficient column of the hom module."""
        if column.rows != self.module.generators or column.cols != 1:
            raise ValueError("hom coefficient column has wrong shape")
        ring = self.ring
        ns, nt = self._ns, self._nt
        std = [
            [ring.zero] * ns.standard.generators
            for _ in range(nt.standard.generators)
        ]
        for t, b in enumerate(self.basis):
            std[b.target_index][b.source_index] = ring.mul(
                column.entries[t][0], b.scale
            )
        std_mat = Matrix(
            ring,
            nt.standard.generators,
            ns.standard.generators,
            tuple(tuple(row) for row in std),
        )
        mat = nt.from_standard.matrix @ std_mat @ ns.to_standard.matrix
        return ModuleMorphism(self.source, self.target, mat)

    def encode(self, f: ModuleMorphism) -> Matrix:
        """Coefficient column of a morphism; inverse of decode up to the hom
        module relations."""
        if not f.source.same_presentation(self.source) or not f.target.same_presentation(self.target):
            raise ValueError("encoding a morphism with different endpoints")
        ring = self.ring
        ns, nt = self._ns, self._nt
        std = nt.to_standard.matrix @ f.matrix @ ns.from_standard.matrix
        coeffs = [ring.zero] * len(self.basis)
        for i in range(ns.standard.generators):
            for j in range(nt.standard.generators):
                entry = std.entries[j][i]
                tag = self._grid[(i, j)]
                if tag[0] == "basis":
                    b = self.basis[tag[1]]
                    c = ring.try_div(entry, b.scale)
                    if c is None:
                        raise ValueError("matrix does not define a morphism")
                    if b.annihilator != ring.zero:
                        c = ring.rem(c, b.annihilator)
                    coeffs[tag[1]] = c
                elif tag[0] == "zero":
                    if entry != ring.zero:
                        raise ValueError("matrix does not define a morphism")
                else:
                    if ring.try_div(entry, tag[1]) is None:
                        raise ValueError("matrix does not define a morphism")
        return Matrix.column(ring, coeffs)

    def basis_morphism(self, t: int) -> ModuleMorphism:
        ring = self.ring
        col = Matrix.column(
            ring,
            [ring.one if k == t else ring.zero for k in range(self.module.generators)],
        )
        return self.decode(col)


def hom_module(source: FpModule, target: FpModule) -> HomModule:
    return HomModule(source, target)


def induced_hom(f: ModuleMorphism, other: FpModule, variance: str) -> ModuleMorphism:
    """Map between hom modules induced by f.

    variance "pre":  Hom(f.target, other) -> Hom(f.source, other), phi -> phi o f
    variance "post": Hom(other, f.source) -> Hom(other, f.target), phi -> f o phi
    """
    if variance == "pre":
        src_hom = hom_module(f.target, other)
        dst_hom = hom_module(f.source, other)

        def transport(phi):
            return compose(phi, f)

    elif variance == "post":
        src_hom = hom_module(other, f.source)
        dst_hom = hom_module(other, f.target)

        def transport(phi):
            return compose(f, phi)

    else:
        raise ValueError(f"unknown variance {variance!r}")
    cols = [
        dst_hom.encode(transport(src_hom.basis_morphism(t)))
        for t in range(src_hom.module.generators)
    ]
    if cols:
        mat = hstack(cols)
    else:
        mat = Matrix.zeros(f.ring, dst_hom.module.generators, 0)
    return ModuleMorphism(src_hom.module, dst_hom.module, mat)


class TensorModule:
    """M (x) N on generator pairs, index (i, j) -> i * N.generators + j."""

    def __init__(self, left: FpModule, right: FpModule):
        ring = left.ring
        if right.ring != ring:
            raise ValueError("tensor of modules over different rings")
        self.left = left
        self.right = right
        self.ring = ring
        left_block = kronecker(left.relations, Matrix.identity(ring, right.generators))
        right_block = kronecker(Matrix.identity(ring, left.generators), right.relations)
        gens = left.generators * right.generators
        if left_block.cols or right_block.cols:
            rel = hstack([left_block, right_block])
        else:
            rel = Matrix.zeros(ring, gens, 0)
        self.module = FpModule(ring, gens, rel)

    def pure(self, x: Matrix, y: Matrix) -> Matrix:
        """Column of the pure tensor x (x) y."""
        if x.rows != self.left.generators or y.rows != self.right.generators:
            raise ValueError("pure tensor factors have wrong lengths")
        if x.cols != 1 or y.cols != 1:
            raise ValueError("pure tensor factors must be columns")
        return kronecker(x, y)


def tensor_module(left: FpModule, right: FpModule) -> TensorModule:
    return TensorModule(left, right)


def tensor_map_left(f: ModuleMorphism, other: FpModule) -> ModuleMorphism:
    """f (x) id: tensor_module(f.source, other) -> tensor_module(f.target, other)."""
    src = tensor_module(f.source, other)
    dst = tensor_module(f.target, other)
    mat = kronecker(f.matrix, Matrix.identity(f.ring, other.generators))
    return ModuleMorphism(src.module, dst.module, mat)


def tensor_map_right(other: FpModule, f: ModuleMorphism) -> ModuleMorphism:
    """id (x) f: tensor_module(other, f.source) -> tensor_module(other, f.target)."""
    src = tensor_module(other, f.source)
    dst = tensor_module(other, f.target)
    mat = kronecker(Matrix.identity(f.ring, other.generators), f.matrix)
    return ModuleMorphism(src.module, dst.module, mat)
