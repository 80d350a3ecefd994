"""Slice-cell combinatorics and slice towers of Eilenberg-MacLane spectra.

A regular cell induced from a subgroup of order h has dimension n*h (n
copies of the regular representation); the irregular variant drops one
trivial coordinate and has dimension n*h - 1.  Cells are reported up to
conjugacy of the inducing subgroup.

The towers computed here are the regular slice towers of the suspension
and desuspension of an Eilenberg-MacLane spectrum, assembled from the two
filtrations of the underlying Mackey functor, plus the irregular tower of
the unsuspended spectrum obtained by shifting the suspended one down.
Geometric fixed points act on cells by quotienting the inducing subgroup
and on towers by inflation, with slice degrees scaled by the order of the
normal subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abelian import FgAbGroup, _columns, subgroup_generated
from .errors import DomainError
from .groups import quotient_group, subgroup_lattice
from .mackey import (
    SubMackey,
    constant_mackey,
    hill_filtration,
    inflate_mackey,
    order_generated_filtration,
    quotient_mackey,
    sub_as_mackey,
    zero_submackey,
)


@dataclass(frozen=True)
class SliceCell:
    """An induced (de)suspended sphere, recorded by its inducing subgroup.

    subgroup_id names a conjugacy-class representative; n counts copies
    of the regular representation of that subgroup.
    """
    group: object
    subgroup_id: str
    subgroup_order: int
    n: int
    regular: bool

    @property
    def dimension(self):
        d = self.n * self.subgroup_order
        return d if self.regular else d - 1


def slice_cells(G, k, regular_only=False):
    """All cells of dimension k, one per conjugacy class per valid n."""
    lat = subgroup_lattice(G)
    out = []
    for rep in lat.class_representatives():
        h = lat.subgroup(rep).order
        if k % h == 0:
            out.append(SliceCell(G, rep, h, k // h, True))
        if not regular_only and (k + 1) % h == 0:
            out.append(SliceCell(G, rep, h, (k + 1) // h, False))
    return out


def cell_dual(c):
    """Spanier-Whitehead dual of a regular cell: negate n and dimension."""
    if not c.regular:
        raise DomainError("cell_dual: duals of irregular cells are not slice cells")
    return SliceCell(c.group, c.subgroup_id, c.subgroup_order, -c.n, True)


@dataclass(frozen=True)
class FiltrationBounds:
    """Degree bookkeeping for one cell.

    slice_degree is exact.  regular_degree is exact for regular cells and
    a lower bound for irregular ones (an irregular cell of dimension k is
    regular-degree >= k - (|G| - 1)).  suspension_regular_degree records
    that the suspension of a degree-k cell lands at regular degree k + 1.
    """
    slice_degree: int
    regular_degree: int
    suspension_regular_degree: int


def filtration_bounds(c):
    d = c.dimension
    if c.regular:
        return FiltrationBounds(d, d, d + 1)
    return FiltrationBounds(d, d - (c.group.order - 1), d + 1)


def geometric_fixed_points_cell(c, N):
    """Image of a regular cell under geometric fixed points of normal N.

    Returns None (the zero spectrum) when the inducing subgroup does not
    contain N; otherwise the cell over G/N induced from H/N with the same
    n, so the dimension divides by |N| exactly.
    """
    G = c.group
    if N.parent != G:
        raise DomainError("geometric_fixed_points_cell: N is not a subgroup of the cell's group")
    if not N.is_normal():
        raise DomainError("geometric_fixed_points_cell: N must be normal")
    if not c.regular:
        raise DomainError("geometric_fixed_points_cell: cell must be regular")
    if N.is_trivial():
        return c
    lat = subgroup_lattice(G)
    H = lat.subgroup(c.subgroup_id)
    if not set(H.elements) >= set(N.elements):
        return None
    qdata = quotient_group(G, N)
    image = qdata.project_subgroup(H)
    qlat = subgroup_lattice(qdata.group)
    rep = qlat.class_representative(image.id)
    return SliceCell(qdata.group, rep, image.order, c.n, True)


def pullback_degree(m, N):
    """Slice-degree transport under geometric fixed points: ceil(m/|N|)."""
    if N.is_trivial():
        raise DomainError("pullback_degree: trivial N rejected (degree unchanged)")
    if not N.is_normal():
        raise DomainError("pullback_degree: N must be normal")
    return -((-m) // N.order)


@dataclass(frozen=True)
class GeneratorSet:
    """Sphere generators of a localizing subcategory.

    The nonnegative part is infinite and reported as a rule (all induced
    spheres of degree >= min_nonnegative_degree) plus a finite sample;
    the negative part is the complete finite list.
    """
    group: object
    min_nonnegative_degree: int
    negative: tuple            # regular cells of negative dimension
    nonnegative_sample: tuple  # regular cells, a finite prefix of the rule


def negative_generators(G, n, display_cap=3):
    """Generators of the localizing subcategory at degree -n.

    Negative generators are the regular cells with parameter -k where
    k*|H| <= n, so the list is finite and empty for n = 0.
    """
    if n < 0:
        raise DomainError("negative_generators: n must be nonnegative")
    lat = subgroup_lattice(G)
    negative = []
    sample = []
    for rep in lat.class_representatives():
        h = lat.subgroup(rep).order
        k = 1
        while k * h <= n:
            negative.append(SliceCell(G, rep, h, -k, True))
            k += 1
        for k in range(0, display_cap + 1):
            sample.append(SliceCell(G, rep, h, k, True))
    return GeneratorSet(G, 0, tuple(negative), tuple(sample))


def tau_one_generators(G, display_cap=3):
    """The degree-one variant: induced spheres of degree >= 1 only."""
    lat = subgroup_lattice(G)
    sample = []
    for rep in lat.class_representatives():
        h = lat.subgroup(rep).order
        for k in range(1, display_cap + 1):
            sample.append(SliceCell(G, rep, h, k, True))
    return GeneratorSet(G, 1, (), tuple(sample))


class EMTower:
    """A slice tower: nested stages and their successive quotients.

    stage(k) is clamped to the computed window (the ends are the full and
    the zero subfunctor); slice(k) is the zero functor outside the stored
    degrees.  shift is +1 or -1 for the regular towers of the suspended
    and desuspended spectrum, 0 for the irregular tower of the spectrum
    itself.
    """

    def __init__(self, base, shift, variant, stages, slices, support):
        self.base = base
        self.shift = shift
        self.variant = variant
        self.stages = stages
        self.slices = slices
        self.support = support
        self._zero = None

    def stage(self, k):
        lo, hi = min(self.stages), max(self.stages)
        return self.stages[min(max(k, lo), hi)]

    def slice(self, k):
        if k in self.slices:
            return self.slices[k]
        if self._zero is None:
            self._zero = constant_mackey(self.base.group, FgAbGroup(0, ()))
        return self._zero

    def slice_degrees(self):
        return tuple(sorted(self.slices))

    def nonzero_slice_degrees(self):
        return tuple(k for k in sorted(self.slices) if not self.slices[k].is_zero())

    def __repr__(self):
        return "EMTower(shift=%+d, %s, slices %s)" % (
            self.shift, self.variant, list(self.nonzero_slice_degrees()))


def _tower_quotient(stage_k, stage_next):
    """stage_k / stage_next as a Mackey functor.

    stage_k is first presented as a functor in its own right; stage_next
    is then re-expressed inside it through the level inclusions.
    """
    A = sub_as_mackey(stage_k)
    inner = {}
    for hid, sub in stage_k.levels.items():
        nxt = stage_next.levels[hid]
        coords = []
        for col in _columns(nxt.inclusion.matrix, nxt.ambient.ngens, nxt.group.ngens):
            w = sub.coordinates(col)
            if w is None:
                raise DomainError("slice tower: stages are not nested")
            coords.append(w)
        inner[hid] = subgroup_generated(A.levels[hid], coords)
    return quotient_mackey(A, SubMackey(A, inner))


def em_tower_plus(M):
    """Regular slice tower of the suspension of the EM spectrum of M.

    Stage k is the order filtration from below: elements restricting to
    zero below order k.  Slices live in degrees 1..|G|.
    """
    n = M.group.order
    stages = {k: hill_filtration(M, k) for k in range(1, n + 2)}
    slices = {k: _tower_quotient(stages[k], stages[k + 1]) for k in range(1, n + 1)}
    return EMTower(M, 1, "regular", stages, slices, (1, n))


def em_tower_minus(M):
    """Regular slice tower of the desuspension of the EM spectrum of M.

    Stage -m is the subfunctor generated by levels of order <= m; slices
    live in degrees -|G|..-1.
    """
    n = M.group.order
    stages = {-m: order_generated_filtration(M, m) for m in range(1, n + 1)}
    stages[0] = zero_submackey(M)
    slices = {-m: _tower_quotient(stages[-m], stages[-m + 1]) for m in range(1, n + 1)}
    return EMTower(M, -1, "regular", stages, slices, (-n, -1))


def irregular_tower_from_regular(T):
    """Shift the suspended regular tower down to the unsuspended spectrum.

    Irregular stage n of the spectrum is the desuspension of regular
    stage n+1 of its suspension, so slices move to degrees 0..|G|-1.
    """
    if T.shift != 1 or T.variant != "regular":
        raise DomainError("irregular_tower_from_regular: input must be the "
                          "regular tower of the suspension (shift +1)")
    stages = {k - 1: s for k, s in T.stages.items()}
    slices = {k - 1: s for k, s in T.slices.items()}
    return EMTower(T.base, 0, "irregular", stages, slices,
                   (T.support[0] - 1, T.support[1] - 1))


def _inflate_submackey(S, base, qdata, G):
    from .abelian import zero_subgroup

    lat = subgroup_lattice(G)
    kernel_elems = set(qdata.cosets[0])
    levels = {}
    for H in lat.subgroups:
        if kernel_elems <= set(H.elements):
            levels[H.id] = S.levels[qdata.project_subgroup(H).id]
        else:
            levels[H.id] = zero_subgroup(base.levels[H.id])
    return SubMackey(base, levels)


def pullback_tower(Y, N):
    """Pull a regular tower over G/N back to G along geometric fixed points.

    The pulled-back tower is concentrated over subgroups containing N;
    its slice at degree k|N| is the inflation of Y's slice at k and every
    other slice is zero.  Trivial N returns the tower unchanged.
    """
    G = N.parent
    if Y.variant != "regular":
        raise DomainError("pullback_tower: tower must be regular")
    if N.is_trivial():
        return Y
    if not N.is_normal():
        raise DomainError("pullback_tower: N must be normal")
    qdata = quotient_group(G, N)
    if Y.base.group != qdata.group:
        raise DomainError("pullback_tower: tower is not over the canonical "
                          "coset model of G/N")
    base = inflate_mackey(Y.base, qdata, G)
    d = N.order
    lo, hi = min(Y.stages), max(Y.stages)
    inflated = {k: _inflate_submackey(S, base, qdata, G) for k, S in Y.stages.items()}
    stages = {}
    for m in range(d * (lo - 1) + 1, d * hi + 2):
        k = -((-m) // d)
        stages[m] = inflated[min(max(k, lo), hi)]
    slices = {k * d: inflate_mackey(S, qdata, G) for k, S in Y.slices.items()}
    degrees = sorted(slices)
    support = (degrees[0], degrees[-1]) if degrees else (d * Y.support[0], d * Y.support[1])
    return EMTower(base, Y.shift, Y.variant, stages, slices, support)


def homotopy_filtration(M, n, m):
    """Slice filtration of the homotopy of a (-n-1)-connected spectrum.

    For bottom homotopy in degree -n, the relevant subfunctor of M is the
    order filtration at the fraction m/n.
    """
    if n <= 0:
        raise DomainError("homotopy_filtration: n must be positive")
    if m < 0:
        raise DomainError("homotopy_filtration: m must be nonnegative")
    return order_generated_filtration(M, Fraction(m, n))
