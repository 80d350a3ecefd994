"""Concrete finite groups as permutation groups on {0, ..., degree-1}.

Permutations are tuples of images (one-line notation) and composition is
function composition: perm_mul(p, q) applies q first.  Groups are closed
element lists built by breadth-first multiplication; the closure size is
capped (default 10000, overridable by the SLICEKIT_ELEMENT_CAP variable
or an explicit argument) so malformed generator sets fail fast.

Subgroups are identified by a canonical string id derived from their
sorted element list, which makes ids stable across runs and equal for
equal subgroups regardless of how they were produced.
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass

from .errors import DomainError

DEFAULT_ELEMENT_CAP = 10000
ELEMENT_CAP_VAR = "SLICEKIT_ELEMENT_CAP"

Perm = tuple


def identity_perm(degree):
    return tuple(range(degree))


def perm_mul(p, q):
    """Composite permutation applying q first, then p."""
    return tuple(p[i] for i in q)


def perm_inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_conj(g, h):
    """g h g^{-1}."""
    return perm_mul(perm_mul(g, h), perm_inv(g))


def perm_key(p):
    return ".".join(str(i) for i in p)


def perm_sign(p):
    """Parity of a permutation: +1 or -1."""
    seen = [False] * len(p)
    sign = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _closure(degree, gens, cap):
    seen = {identity_perm(degree)}
    frontier = list(seen)
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = perm_mul(g, p)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise DomainError(
                            "group closure exceeded the element cap of %d" % cap)
                    new.append(q)
        frontier = new
    return tuple(sorted(seen))


def _resolve_cap(element_cap):
    if element_cap is not None:
        return element_cap
    raw = os.environ.get(ELEMENT_CAP_VAR)
    if raw is None:
        return DEFAULT_ELEMENT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError("%s must be an integer, got %r" % (ELEMENT_CAP_VAR, raw))
    if cap <= 0:
        raise DomainError("%s must be positive" % ELEMENT_CAP_VAR)
    return cap


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple
    elements: tuple

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return identity_perm(self.degree)

    def whole_subgroup(self):
        return Subgroup(self, self.elements)

    def trivial_subgroup(self):
        return Subgroup(self, (self.identity,))

    def subgroup(self, elements):
        """Wrap an element list that is already a subgroup (verified)."""
        elems = tuple(sorted(set(elements)))
        sub = Subgroup(self, elems)
        if not sub.is_closed():
            raise DomainError("subgroup: element set is not closed")
        return sub

    def generated_subgroup(self, gens):
        gens = tuple(gens)
        for g in gens:
            if g not in set(self.elements):
                raise DomainError("generated_subgroup: generator not in group")
        return Subgroup(self, _closure(self.degree, gens, self.order))

    def __repr__(self):
        return "PermGroup(degree=%d, order=%d)" % (self.degree, self.order)


@dataclass(frozen=True)
class Subgroup:
    parent: PermGroup
    elements: tuple

    @property
    def order(self):
        return len(self.elements)

    @property
    def id(self):
        return subgroup_id(self.elements)

    def is_closed(self):
        elems = set(self.elements)
        if identity_perm(self.parent.degree) not in elems:
            return False
        return all(perm_mul(a, b) in elems for a in elems for b in elems)

    def contains(self, other):
        return set(other.elements) <= set(self.elements)

    def is_normal(self):
        elems = set(self.elements)
        return all(perm_conj(g, h) in elems
                   for g in self.parent.generators for h in self.elements)

    def conjugate(self, g):
        return Subgroup(self.parent, tuple(sorted(perm_conj(g, h) for h in self.elements)))

    def is_trivial(self):
        return self.order == 1

    def __repr__(self):
        return "Subgroup(order=%d)" % self.order


def subgroup_id(elements):
    return "-".join(perm_key(p) for p in sorted(elements))


def group_from_generators(degree, gens, element_cap=None):
    """Close a generator list into a PermGroup.

    Every generator must be a bijection on {0, ..., degree-1}; the closure
    aborts once it exceeds the cap.
    """
    if degree < 1:
        raise DomainError("group_from_generators: degree must be >= 1")
    cap = _resolve_cap(element_cap)
    checked = []
    for g in gens:
        p = tuple(g)
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise DomainError(
                "group_from_generators: %r is not a permutation of degree %d" % (g, degree))
        checked.append(p)
    elements = _closure(degree, checked, cap)
    return PermGroup(degree, tuple(checked), elements)


NAMED_GENERATORS = {
    # Stable small models; Q8 acts on itself by left translation with the
    # elements ordered 1, i, j, k, -1, -i, -j, -k.
    "trivial": (1, ()),
    "C2": (2, ((1, 0),)),
    "C3": (3, ((1, 2, 0),)),
    "C4": (4, ((1, 2, 3, 0),)),
    "V4": (4, ((1, 0, 3, 2), (2, 3, 0, 1))),
    "S3": (3, ((1, 2, 0), (1, 0, 2))),
    "D8": (4, ((1, 2, 3, 0), (3, 2, 1, 0))),
    "Q8": (8, ((1, 4, 3, 6, 5, 0, 7, 2), (2, 7, 4, 1, 6, 3, 0, 5))),
}

PRESET_GROUPS = tuple(NAMED_GENERATORS)


def named_group(name):
    """Preset groups: trivial, C2, C3, C4, V4, S3, D8 (degree 4), Q8."""
    if name not in NAMED_GENERATORS:
        raise DomainError("unknown group preset %r (choose from %s)"
                          % (name, ", ".join(NAMED_GENERATORS)))
    degree, gens = NAMED_GENERATORS[name]
    return group_from_generators(degree, gens)


@dataclass(frozen=True)
class SubgroupLattice:
    group: PermGroup
    subgroups: tuple           # sorted by (order, id)
    by_id: dict
    conjugacy_classes: tuple   # tuples of ids, each sorted, rep = first

    def subgroup(self, sub_id):
        if sub_id not in self.by_id:
            raise DomainError("unknown subgroup id %r" % sub_id)
        return self.by_id[sub_id]

    def ids(self):
        return tuple(s.id for s in self.subgroups)

    def subgroups_of(self, H):
        hset = set(H.elements)
        return tuple(s for s in self.subgroups if set(s.elements) <= hset)

    def class_of(self, sub_id):
        for cls in self.conjugacy_classes:
            if sub_id in cls:
                return cls
        raise DomainError("unknown subgroup id %r" % sub_id)

    def class_representative(self, sub_id):
        return self.class_of(sub_id)[0]

    def class_representatives(self):
        return tuple(cls[0] for cls in self.conjugacy_classes)

    def label(self, sub_id):
        """Short display label: 1 for trivial, G for the whole group,
        and H<order><letter> for the rest (letter by id order)."""
        sub = self.subgroup(sub_id)
        if sub.order == 1:
            return "1"
        if sub.order == self.group.order:
            return "G"
        same = [s.id for s in self.subgroups if s.order == sub.order]
        index = same.index(sub_id)
        suffix = chr(ord("a") + index) if len(same) > 1 else ""
        return "H%d%s" % (sub.order, suffix)


@functools.lru_cache(maxsize=None)
def subgroup_lattice(G):
    """Enumerate all subgroups by breadth-first closure of generated subgroups."""
    trivial = G.trivial_subgroup()
    seen = {trivial.elements: trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for S in frontier:
            inside = set(S.elements)
            for x in G.elements:
                if x in inside:
                    continue
                T = Subgroup(G, _closure(G.degree, S.elements + (x,), G.order))
                if T.elements not in seen:
                    seen[T.elements] = T
                    new.append(T)
        frontier = new
    subs = tuple(sorted(seen.values(), key=lambda s: (s.order, s.id)))
    by_id = {s.id: s for s in subs}
    classes = []
    assigned = set()
    for s in subs:
        if s.id in assigned:
            continue
        orbit = sorted({s.conjugate(g).id for g in G.elements})
        assigned.update(orbit)
        classes.append(tuple(orbit))
    return SubgroupLattice(G, subs, by_id, tuple(classes))


@dataclass(frozen=True)
class QuotientData:
    group: PermGroup
    projection: dict     # element of G -> element of quotient
    cosets: tuple        # sorted element tuples, one per coset

    def project_subgroup(self, H):
        return self.group.subgroup(tuple(sorted({self.projection[h] for h in H.elements})))


def quotient_group(G, N):
    """G/N acting on the left cosets of N, with the projection map.

    The cosets are sorted by their minimal element, so the action model is
    deterministic; quotient by the trivial subgroup is the left-regular
    action of G on itself.
    """
    if N.parent != G:
        raise DomainError("quotient_group: subgroup of a different group")
    if not N.is_normal():
        raise DomainError("quotient_group: subgroup is not normal")
    nset = set(N.elements)
    cosets = []
    covered = set()
    for g in G.elements:
        if g in covered:
            continue
        coset = tuple(sorted(perm_mul(g, n) for n in nset))
        covered.update(coset)
        cosets.append(coset)
    cosets.sort()
    index = {}
    for i, coset in enumerate(cosets):
        for g in coset:
            index[g] = i
    k = len(cosets)
    action = {}
    for g in G.elements:
        action[g] = tuple(index[perm_mul(g, coset[0])] for coset in cosets)
    gens = tuple(action[g] for g in G.generators) or (identity_perm(k),)
    Q = PermGroup(k, gens, tuple(sorted(set(action.values()))))
    return QuotientData(Q, action, tuple(cosets))


def double_cosets(H, J, K):
    """Representatives g of the double cosets J\\H/K, in sorted order.

    Both J and K must sit inside H; the representatives are the minimal
    uncovered elements of H, so the list is deterministic.
    """
    if not H.contains(J) or not H.contains(K):
        raise DomainError("double_cosets: J and K must be subgroups of H")
    reps = []
    covered = set()
    for g in H.elements:
        if g in covered:
            continue
        reps.append(g)
        covered.update(perm_mul(perm_mul(j, g), k)
                       for j in J.elements for k in K.elements)
    return tuple(reps)


def family_not_containing(G, N):
    """Ids of subgroups that do not contain N, and of those that do."""
    lat = subgroup_lattice(G)
    nset = set(N.elements)
    family = frozenset(s.id for s in lat.subgroups if not nset <= set(s.elements))
    complement = frozenset(s.id for s in lat.subgroups if nset <= set(s.elements))
    return family, complement


@dataclass(frozen=True)
class WeylData:
    group: PermGroup     # N_G(H)/H as a permutation group
    coset_reps: tuple    # one element of G per Weyl element, minimal in its coset


def weyl_group(G, H):
    """W_G(H) = N_G(H)/H with coset representatives acting on level H."""
    if H.parent != G:
        raise DomainError("weyl_group: subgroup of a different group")
    hset = set(H.elements)
    normalizer = tuple(g for g in G.elements
                       if all(perm_conj(g, h) in hset for h in H.elements))
    NG = PermGroup(G.degree, normalizer, normalizer)
    data = quotient_group(NG, Subgroup(NG, H.elements))
    reps = tuple(coset[0] for coset in data.cosets)
    return WeylData(data.group, reps)
