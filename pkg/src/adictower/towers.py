"""Adic filtration towers and their truncated inverse limits.

A tower over a Euclidean domain R and a principal ideal (g) is the chain of
cyclic level modules R/(g^n) for n = 1..depth, linked upward by
multiplication-by-g inclusions.  Downward transition maps between levels
are not written out directly: they are reconstructed through stabilized hom
modules into high levels and certified surjective, and the truncated
inverse limit is computed as an honest kernel inside the direct sum of the
levels.  The limit carrier carries an exact ring structure (componentwise
multiplication of coherent residue strings).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

from .exactalg.matrices import (
    Matrix,
    hstack,
    smith_form,
    solve_from_smith,
)
from .exactalg.rings import Ideal, Ring, RingElement, RingError
from .fpmod.modules import (
    FpModule,
    ModuleMorphism,
    cyclic_module,
    direct_sum,
    free_module,
    zero_module,
)
from .fpmod.functors import HomModule, hom_module, induced_hom
from .fpmod.morphisms import (
    compose,
    identity_morphism,
    invert_isomorphism,
    is_injective,
    is_isomorphism,
    is_surjective,
    is_well_defined,
    kernel,
    submodules_equal,
    zero_morphism,
)


class TowerError(RuntimeError):
    """A structural tower invariant failed to verify."""


class StabilizationError(TowerError):
    """A hom system did not become constant within the available depth."""


class AdicTower:
    """Levels R/(g^n) with their multiplication-by-g inclusions."""

    def __init__(
        self,
        ring: Ring,
        ideal: Ideal,
        depth: int,
        levels: Tuple[FpModule, ...],
        inclusions: Tuple[ModuleMorphism, ...],
    ):
        self.ring = ring
        self.ideal = ideal
        self.depth = depth
        self.levels = levels
        self.inclusions = inclusions
        self.transitions: List[Optional[ModuleMorphism]] = [None] * max(depth - 1, 0)

    def level(self, n: int) -> FpModule:
        if not 1 <= n <= self.depth:
            raise ValueError(f"level {n} outside 1..{self.depth}")
        return self.levels[n - 1]

    def inclusion(self, n: int) -> ModuleMorphism:
        if not 1 <= n <= self.depth - 1:
            raise ValueError(f"no inclusion at level {n}")
        return self.inclusions[n - 1]

    def level_modulus(self, n: int) -> RingElement:
        return self.ideal.generator_power(n)


def build_adic_tower(ring: Ring, generator, depth: int) -> AdicTower:
    """Construct and validate the tower for the ideal (generator).

    Rejects zero or unit generators and non-positive depth; checks that
    every inclusion is well defined and injective.
    """
    if depth < 1:
        raise RingError(f"depth must be at least 1, got {depth}")
    ideal = Ideal(ring, generator)
    g = ideal.generator
    levels = tuple(
        cyclic_module(ring, ideal.generator_power(n)) for n in range(1, depth + 1)
    )
    inclusions = []
    for n in range(1, depth):
        mu = ModuleMorphism(
            levels[n - 1], levels[n], Matrix.from_rows(ring, [[g]])
        )
        if not is_well_defined(mu).ok:
            raise TowerError(f"inclusion at level {n} is not well defined")
        if not is_injective(mu):
            raise TowerError(f"inclusion at level {n} is not injective")
        inclusions.append(mu)
    return AdicTower(ring, ideal, depth, levels, tuple(inclusions))


def inclusion_composite(tower: AdicTower, m: int, n: int) -> ModuleMorphism:
    """Composite inclusion from level m up to level n (identity when equal)."""
    if not 1 <= m <= n <= tower.depth:
        raise ValueError(f"bad inclusion range {m}..{n}")
    result = identity_morphism(tower.level(m))
    for k in range(m, n):
        result = compose(tower.inclusion(k), result)
    return result


def reduction_morphism(tower: AdicTower, n: int) -> ModuleMorphism:
    """The directly-written residue map from level n+1 onto level n."""
    if not 1 <= n <= tower.depth - 1:
        raise ValueError(f"no reduction at level {n}")
    return ModuleMorphism(
        tower.level(n + 1), tower.level(n), Matrix.identity(tower.ring, 1)
    )


class ColimitHom(NamedTuple):
    stable_module: FpModule
    stable_hom: HomModule
    stable_index: int
    step_isomorphic: Tuple[bool, ...]


def hom_into_colimit(tower: AdicTower, m: int) -> ColimitHom:
    """Stabilized value of Hom(level m, level n) as n grows to depth.

    The connecting maps are postcomposition with the inclusions.  Returns
    the minimal index from which every later connecting map is an
    isomorphism along with that stable value; raises StabilizationError
    when the final step is still moving.
    """
    if not 1 <= m <= tower.depth:
        raise ValueError(f"level {m} outside 1..{tower.depth}")
    zm = tower.level(m)
    flags = []
    for n in range(m, tower.depth):
        step = induced_hom(tower.inclusion(n), zm, "post")
        flags.append(is_isomorphism(step))
    if flags and not flags[-1]:
        raise StabilizationError(
            f"hom system at level {m} still moving at depth {tower.depth}"
        )
    stable_index = tower.depth
    for k in range(tower.depth - 1, m - 1, -1):
        if flags[k - m]:
            stable_index = k
        else:
            break
    stable_hom = hom_module(zm, tower.level(stable_index))
    return ColimitHom(stable_hom.module, stable_hom, stable_index, tuple(flags))


def canonical_hom_embedding(
    tower: AdicTower, m: int, s: int
) -> Tuple[HomModule, ModuleMorphism]:
    """The map level_m -> Hom(level_m, level_s) sending the generator to the
    composite inclusion; certified an isomorphism."""
    hom = hom_module(tower.level(m), tower.level(s))
    col = hom.encode(inclusion_composite(tower, m, s))
    can = ModuleMorphism(tower.level(m), hom.module, col)
    if not is_isomorphism(can):
        raise TowerError(
            f"canonical map into Hom(level {m}, level {s}) is not an isomorphism"
        )
    return hom, can


def build_transition(tower: AdicTower, n: int) -> ModuleMorphism:
    """Transition map from level n+1 down to level n.

    Reconstructed, not written down: conjugate precomposition-with-inclusion
    between the stabilized hom values Hom(level n+1, level s) and
    Hom(level n, level s) at s = n+1 through the canonical isomorphisms.
    Certified surjective.
    """
    if not 1 <= n <= tower.depth - 1:
        raise ValueError(f"no transition at level {n}")
    cached = tower.transitions[n - 1]
    if cached is not None:
        return cached
    s = n + 1
    _, can_top = canonical_hom_embedding(tower, n + 1, s)
    _, can_bot = canonical_hom_embedding(tower, n, s)
    restrict = induced_hom(tower.inclusion(n), tower.level(s), "pre")
    delta = compose(invert_isomorphism(can_bot), compose(restrict, can_top))
    if not is_well_defined(delta).ok:
        raise TowerError(f"transition at level {n} is not well defined")
    if not is_surjective(delta):
        raise TowerError(f"transition at level {n} is not surjective")
    tower.transitions[n - 1] = delta
    return delta


def build_transitions(tower: AdicTower) -> List[ModuleMorphism]:
    return [build_transition(tower, n) for n in range(1, tower.depth)]


def transition_composite(tower: AdicTower, j: int, i: int) -> ModuleMorphism:
    """Composite transition from level i down to level j (identity at j = i)."""
    if not 1 <= j <= i <= tower.depth:
        raise ValueError(f"bad transition range {j}..{i}")
    result = identity_morphism(tower.level(i))
    for n in range(i - 1, j - 1, -1):
        result = compose(build_transition(tower, n), result)
    return result


ML_HOLDS = "holds"
ML_HOLDS_BY_SURJECTIVITY = "holds-by-surjectivity"
ML_NOT_STABILIZED = "not-stabilized-within-horizon"


class MittagLefflerCheck(NamedTuple):
    verdict: str
    surjective_maps: Tuple[bool, ...]
    plateau_starts: Dict[int, int]


def mittag_leffler_check(
    modules: List[FpModule], maps: List[ModuleMorphism], horizon: int
) -> MittagLefflerCheck:
    """Image-stabilization check for an inverse system.

    ``maps[k]`` must run from ``modules[k+1]`` to ``modules[k]``.  If every
    map is surjective the condition holds outright.  Otherwise, for each
    index the images of the composites from higher levels are compared as
    submodules over a window of ``horizon`` steps; the verdict reports
    whether each image chain has flattened by the end of its window.
    """
    if len(maps) != len(modules) - 1:
        raise ValueError("need exactly one map between consecutive modules")
    for k, f in enumerate(maps):
        if not f.source.same_presentation(modules[k + 1]) or not f.target.same_presentation(
            modules[k]
        ):
            raise ValueError(f"map {k} does not match its modules")
    surjective = tuple(is_surjective(f) for f in maps)
    if all(surjective):
        return MittagLefflerCheck(ML_HOLDS_BY_SURJECTIVITY, surjective, {})
    plateau: Dict[int, int] = {}
    verdict = ML_HOLDS
    for i in range(1, len(modules) + 1):
        window = min(horizon, len(modules) - i)
        if window == 0:
            continue
        target = modules[i - 1]
        composite = identity_morphism(target)
        images = [composite.matrix]
        for t in range(1, window + 1):
            composite = compose(composite, maps[i + t - 2])
            images.append(composite.matrix)
        start = window
        for t in range(window - 1, -1, -1):
            if submodules_equal(target, images[t], images[window]):
                start = t
            else:
                break
        plateau[i] = start
        if start == window:
            verdict = ML_NOT_STABILIZED
    return MittagLefflerCheck(verdict, surjective, plateau)


class InverseLimit(NamedTuple):
    carrier: FpModule
    include: ModuleMorphism
    projections: List[ModuleMorphism]
    ambient: FpModule


def inverse_limit(modules: List[FpModule], maps: List[ModuleMorphism]) -> InverseLimit:
    """Limit of a finite inverse system as a kernel in the direct sum.

    The coherence map sends a tuple (x_1, ..., x_N) to the differences
    x_n - maps[n](x_{n+1}); its kernel, with the saturated presentation, is
    the limit, and the level projections are restrictions of the sum
    projections.
    """
    if not modules:
        raise ValueError("inverse limit of an empty system")
    if len(maps) != len(modules) - 1:
        raise ValueError("need exactly one map between consecutive modules")
    ring = modules[0].ring
    summed, injections, projections = direct_sum(modules)
    if len(modules) == 1:
        coherence = zero_morphism(summed, zero_module(ring))
    else:
        lower, low_inj, _ = direct_sum(modules[:-1])
        rows = [[ring.zero] * summed.generators for _ in range(lower.generators)]
        row_off = 0
        col_off = 0
        for n, m in enumerate(modules[:-1]):
            nxt = modules[n + 1]
            for i in range(m.generators):
                rows[row_off + i][col_off + i] = ring.one
            dmat = maps[n].matrix
            for i in range(m.generators):
                for j in range(nxt.generators):
                    rows[row_off + i][col_off + m.generators + j] = ring.neg(
                        dmat.entries[i][j]
                    )
            row_off += m.generators
            col_off += m.generators
        coherence = ModuleMorphism(
            summed,
            lower,
            Matrix(ring, lower.generators, summed.generators, tuple(tuple(r) for r in rows)),
        )
    carrier, include = kernel(coherence)
    level_projections = [compose(p, include) for p in projections]
    return InverseLimit(carrier, include, level_projections, summed)


@dataclass(frozen=True)
class CoherentElement:
    """Residue string (x_1, ..., x_N), canonical at each level."""

    level: int
    components: Tuple[RingElement, ...]


class TruncatedLimit:
    """Inverse limit of the first N tower levels, with its ring structure."""

    def __init__(self, tower: AdicTower, upto: int, lim: InverseLimit):
        self.tower = tower
        self.level = upto
        self.carrier = lim.carrier
        self.include = lim.include
        self.projections = lim.projections
        self.ambient = lim.ambient
        self.ring = tower.ring
        self.top = lim.projections[upto - 1]
        self._moduli = [tower.level_modulus(n) for n in range(1, upto + 1)]
        self._solver = hstack([self.include.matrix, self.ambient.relations])
        self._solver_smith = smith_form(self._solver)

    def moduli(self) -> List[RingElement]:
        return list(self._moduli)

    def element(self, components) -> CoherentElement:
        """Canonicalize and validate a residue string against the tower's
        transition maps."""
        ring = self.ring
        comps = [ring.canonical(c) for c in components]
        if len(comps) != self.level:
            raise ValueError(
                f"expected {self.level} components, got {len(comps)}"
            )
        comps = [ring.rem(c, self._moduli[n]) for n, c in enumerate(comps)]
        for n in range(self.level - 1):
            delta = build_transition(self.tower, n + 1)
            dropped = ring.rem(
                ring.mul(delta.matrix.entries[0][0], comps[n + 1]),
                self._moduli[n],
            )
            if dropped != comps[n]:
                raise ValueError(
                    f"incoherent element: level {n + 1} component does not "
                    f"match the transition of level {n + 2}"
                )
        return CoherentElement(self.level, tuple(comps))

    def zero(self) -> CoherentElement:
        return self.from_scalar(self.ring.zero)

    def one(self) -> CoherentElement:
        return self.from_scalar(self.ring.one)

    def from_scalar(self, r) -> CoherentElement:
        """Image of a ring scalar under the canonical ring map."""
        ring = self.ring
        r = ring.canonical(r)
        return self.element([ring.rem(r, m) for m in self._moduli])

    def multiply(self, a: CoherentElement, b: CoherentElement) -> CoherentElement:
        ring = self.ring
        self._check(a)
        self._check(b)
        return self.element(
            [
                ring.rem(ring.mul(x, y), self._moduli[n])
                for n, (x, y) in enumerate(zip(a.components, b.components))
            ]
        )

    def add(self, a: CoherentElement, b: CoherentElement) -> CoherentElement:
        ring = self.ring
        self._check(a)
        self._check(b)
        return self.element(
            [ring.add(x, y) for x, y in zip(a.components, b.components)]
        )

    def column(self, elem: CoherentElement) -> Matrix:
        """Carrier coordinates of a coherent element."""
        self._check(elem)
        stacked = Matrix.column(self.ring, list(elem.components))
        sol = solve_from_smith(self._solver_smith, stacked)
        if sol is None:
            raise TowerError("coherent element is outside the carrier")
        return sol.row_slice(0, self.carrier.generators)

    def element_from_column(self, col: Matrix) -> CoherentElement:
        """Coherent residue string of a carrier coordinate column."""
        amb = self.include.matrix @ col
        ring = self.ring
        return self.element(
            [amb.entries[n][0] for n in range(self.level)]
        )

    def multiplication_morphism(self, elem: CoherentElement) -> ModuleMorphism:
        """Multiplication by a fixed coherent element as a carrier endomorphism."""
        self._check(elem)
        ring = self.ring
        n = self.level
        big = Matrix(
            ring,
            n,
            n,
            tuple(
                tuple(elem.components[i] if i == j else ring.zero for j in range(n))
                for i in range(n)
            ),
        )
        return self._restrict(big)

    def structure_ring_map(self) -> ModuleMorphism:
        """The canonical map from the free rank-1 module into the carrier."""
        one_col = self.column(self.one())
        return ModuleMorphism(free_module(self.ring, 1), self.carrier, one_col)

    def _restrict(self, big: Matrix) -> ModuleMorphism:
        out = connect_carriers(self, self, big)
        return out

    def _check(self, elem: CoherentElement) -> None:
        if not isinstance(elem, CoherentElement) or elem.level != self.level:
            raise ValueError("element from a different truncation level")


def truncated_limit(tower: AdicTower, upto: int) -> TruncatedLimit:
    """Limit of levels 1..upto; the top projection must be an isomorphism."""
    if not 1 <= upto <= tower.depth:
        raise ValueError(f"truncation level {upto} outside 1..{tower.depth}")
    modules = [tower.level(n) for n in range(1, upto + 1)]
    maps = [build_transition(tower, n) for n in range(1, upto)]
    lim = inverse_limit(modules, maps)
    limit = TruncatedLimit(tower, upto, lim)
    if not is_isomorphism(limit.top):
        raise TowerError(
            f"top projection of the truncated limit at level {upto} "
            "is not an isomorphism"
        )
    return limit


def connect_carriers(
    src: TruncatedLimit, dst: TruncatedLimit, big: Matrix
) -> ModuleMorphism:
    """Restrict an ambient-level map to a map between limit carriers.

    ``big`` maps the source ambient sum to the destination ambient sum and
    must carry the source carrier into the destination carrier; the
    restriction is recovered by exact solving against the destination
    inclusion.
    """
    rhs = big @ src.include.matrix
    sol = solve_from_smith(dst._solver_smith, rhs)
    if sol is None:
        raise TowerError("ambient map does not preserve the limit carriers")
    mat = sol.row_slice(0, dst.carrier.generators)
    out = ModuleMorphism(src.carrier, dst.carrier, mat)
    if not is_well_defined(out).ok:
        raise TowerError("restricted carrier map is not well defined")
    return out


def shift_endomorphism(limit: TruncatedLimit) -> ModuleMorphism:
    """The weighted shift on the truncated limit.

    Sends a coherent string (x_1, ..., x_N) to (0, mu(x_1), ..., mu(x_{N-1})),
    dropping the top component and pushing every other one up a level
    through the inclusion.
    """
    if limit.level < 2:
        raise ValueError("shift endomorphism needs at least two levels")
    ring = limit.ring
    n = limit.level
    g = limit.tower.ideal.generator
    big = Matrix(
        ring,
        n,
        n,
        tuple(
            tuple(g if i == j + 1 else ring.zero for j in range(n))
            for i in range(n)
        ),
    )
    return connect_carriers(limit, limit, big)


def truncation_morphism(src: TruncatedLimit, dst: TruncatedLimit) -> ModuleMorphism:
    """Forget the top components: limit at level N -> limit at level M < N."""
    if src.tower is not dst.tower or dst.level >= src.level:
        raise ValueError("truncation goes from a deeper limit of the same tower")
    ring = src.ring
    big = Matrix(
        ring,
        dst.level,
        src.level,
        tuple(
            tuple(ring.one if i == j else ring.zero for j in range(src.level))
            for i in range(dst.level)
        ),
    )
    return connect_carriers(src, dst, big)


def shift_embedding(src: TruncatedLimit, dst: TruncatedLimit) -> ModuleMorphism:
    """Embed the limit at level N-1 into the limit at level N as the image
    of the shift: (x_1, ..., x_{N-1}) -> (0, mu(x_1), ..., mu(x_{N-1}))."""
    if src.tower is not dst.tower or dst.level != src.level + 1:
        raise ValueError("shift embedding raises the level by exactly one")
    ring = src.ring
    g = src.tower.ideal.generator
    big = Matrix(
        ring,
        dst.level,
        src.level,
        tuple(
            tuple(g if i == j + 1 else ring.zero for j in range(src.level))
            for i in range(dst.level)
        ),
    )
    return connect_carriers(src, dst, big)
