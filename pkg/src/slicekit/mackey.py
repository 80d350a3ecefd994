"""Mackey functors over a concrete finite group.

A Mackey functor assigns a finitely generated abelian group to every
subgroup (one level per subgroup, not per conjugacy class), with
restriction and transfer maps for every nested pair and a conjugation map
for every group element.  Maps are stored for all pairs, so the axiom
checker and the filtrations are plain table lookups.

The two filtrations computed here are the ones the towers are built from:
hill_filtration(M, k) keeps the elements whose restrictions to all
subgroups of order < k vanish, and order_generated_filtration(M, c) is
the subfunctor generated by everything living at levels of order <= c.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .abelian import (
    AbElement,
    AbHom,
    ColumnSolver,
    FgAbGroup,
    IntLattice,
    SubgroupInclusion,
    _columns,
    _from_columns,
    _identity,
    _freeze,
    free_group,
    full_subgroup,
    identity_hom,
    kernel_basis,
    preimage_basis,
    quotient,
    subgroup_generated,
    zero_hom,
    zero_subgroup,
)
from .errors import DomainError
from .groups import (
    PermGroup,
    Subgroup,
    identity_perm,
    perm_inv,
    perm_key,
    perm_mul,
    perm_sign,
    subgroup_lattice,
)


class MackeyFunctor:
    """Levels plus res/tr/conj tables over the full subgroup lattice.

    levels: subgroup id -> FgAbGroup.
    res[(H, K)]: level H -> level K, for every K <= H.
    tr[(H, K)]: level K -> level H, for every K <= H.
    conj[(g, H)]: level H -> level gHg^{-1}, for every g in G.
    """

    def __init__(self, group, levels, res, tr, conj):
        self.group = group
        self.lattice = subgroup_lattice(group)
        self.levels = levels
        self.res = res
        self.tr = tr
        self.conj = conj
        self._validate_structure()

    def _validate_structure(self):
        lat = self.lattice
        for H in lat.subgroups:
            if H.id not in self.levels:
                raise DomainError("MackeyFunctor: missing level %r" % H.id)
        for H in lat.subgroups:
            for K in lat.subgroups_of(H):
                r = self.res.get((H.id, K.id))
                t = self.tr.get((H.id, K.id))
                if r is None or t is None:
                    raise DomainError("MackeyFunctor: missing res/tr at (%s, %s)"
                                      % (lat.label(H.id), lat.label(K.id)))
                if r.source != self.levels[H.id] or r.target != self.levels[K.id]:
                    raise DomainError("MackeyFunctor: res endpoints wrong at (%s, %s)"
                                      % (lat.label(H.id), lat.label(K.id)))
                if t.source != self.levels[K.id] or t.target != self.levels[H.id]:
                    raise DomainError("MackeyFunctor: tr endpoints wrong at (%s, %s)"
                                      % (lat.label(H.id), lat.label(K.id)))
            for g in self.group.elements:
                c = self.conj.get((g, H.id))
                if c is None:
                    raise DomainError("MackeyFunctor: missing conj at (%s, %s)"
                                      % (perm_key(g), lat.label(H.id)))
                target_id = H.conjugate(g).id
                if c.source != self.levels[H.id] or c.target != self.levels[target_id]:
                    raise DomainError("MackeyFunctor: conj endpoints wrong at (%s, %s)"
                                      % (perm_key(g), lat.label(H.id)))

    def level(self, sub_id):
        if sub_id not in self.levels:
            raise DomainError("unknown level %r" % sub_id)
        return self.levels[sub_id]

    def res_map(self, h_id, k_id):
        if (h_id, k_id) not in self.res:
            raise DomainError("no restriction for (%s, %s)" % (h_id, k_id))
        return self.res[(h_id, k_id)]

    def tr_map(self, h_id, k_id):
        if (h_id, k_id) not in self.tr:
            raise DomainError("no transfer for (%s, %s)" % (h_id, k_id))
        return self.tr[(h_id, k_id)]

    def conj_map(self, g, h_id):
        if (g, h_id) not in self.conj:
            raise DomainError("no conjugation for (%s, %s)" % (perm_key(g), h_id))
        return self.conj[(g, h_id)]

    def level_invariants(self):
        return {hid: self.levels[hid].invariant_factors() for hid in self.levels}

    def is_zero(self):
        return all(level.is_zero() for level in self.levels.values())

    def element(self, sub_id, coords):
        return MackeyElement(self, sub_id, self.level(sub_id).element(coords))

    def __repr__(self):
        return "MackeyFunctor(order %d group, %d levels)" % (
            self.group.order, len(self.levels))


class MackeyElement:
    """An element of one level of a Mackey functor."""

    def __init__(self, functor, subgroup_id, element):
        if not isinstance(element, AbElement):
            element = functor.level(subgroup_id).element(element)
        if element.group != functor.level(subgroup_id):
            raise DomainError("MackeyElement: element not in the named level")
        self.functor = functor
        self.subgroup_id = subgroup_id
        self.element = element

    def __repr__(self):
        return "MackeyElement(level %s, %r)" % (self.subgroup_id, self.element.coords)


# ---------------------------------------------------------------------------
# constructors

def _conj_pairs(G, lat):
    return [(g, H) for g in G.elements for H in lat.subgroups]


def burnside_mackey(G):
    """Burnside-ring functor: level H is free on H-classes of subgroups of H.

    Restriction decomposes an orbit H/L into K-orbits via double cosets,
    transfer is induction [K/L] -> [H/L], conjugation relabels.
    """
    from .groups import double_cosets

    lat = subgroup_lattice(G)
    reps = {}    # H id -> list of representative subgroup ids, in (order, id) order
    index = {}   # H id -> {subgroup id of any L <= H: column index}
    for H in lat.subgroups:
        rlist, imap = [], {}
        for S in lat.subgroups_of(H):
            if S.id in imap:
                continue
            orbit = {S.conjugate(h).id for h in H.elements}
            pos = len(rlist)
            rlist.append(S.id)
            for sid in orbit:
                imap[sid] = pos
        reps[H.id] = rlist
        index[H.id] = imap
    levels = {H.id: free_group(len(reps[H.id])) for H in lat.subgroups}

    res, tr, conj = {}, {}, {}
    for H in lat.subgroups:
        hset = set(H.elements)
        for K in lat.subgroups_of(H):
            rows_r = [[0] * len(reps[H.id]) for _ in reps[K.id]]
            for col, lid in enumerate(reps[H.id]):
                L = lat.subgroup(lid)
                for g in double_cosets(H, K, L):
                    gL = set(L.conjugate(g).elements)
                    meet = Subgroup(G, tuple(sorted(set(K.elements) & gL)))
                    rows_r[index[K.id][meet.id]][col] += 1
            res[(H.id, K.id)] = AbHom(levels[H.id], levels[K.id], _freeze(rows_r))
            rows_t = [[0] * len(reps[K.id]) for _ in reps[H.id]]
            for col, lid in enumerate(reps[K.id]):
                rows_t[index[H.id][lid]][col] += 1
            tr[(H.id, K.id)] = AbHom(levels[K.id], levels[H.id], _freeze(rows_t))
        for g in G.elements:
            tid = H.conjugate(g).id
            rows_c = [[0] * len(reps[H.id]) for _ in reps[tid]]
            for col, lid in enumerate(reps[H.id]):
                img = lat.subgroup(lid).conjugate(g).id
                rows_c[index[tid][img]][col] += 1
            conj[(g, H.id)] = AbHom(levels[H.id], levels[tid], _freeze(rows_c))
    return MackeyFunctor(G, levels, res, tr, conj)


def constant_mackey(G, A):
    """Constant functor: every level A, res = id, tr = index multiple."""
    lat = subgroup_lattice(G)
    levels = {H.id: A for H in lat.subgroups}
    res, tr, conj = {}, {}, {}
    ident = identity_hom(A)
    for H in lat.subgroups:
        for K in lat.subgroups_of(H):
            res[(H.id, K.id)] = ident
            m = H.order // K.order
            tr[(H.id, K.id)] = AbHom(
                A, A, tuple(tuple(m if i == j else 0 for j in range(A.ngens))
                            for i in range(A.ngens)), _checked=True)
        for g in G.elements:
            conj[(g, H.id)] = ident
    return MackeyFunctor(G, levels, res, tr, conj)


def fixed_point_mackey(G, matrices, dim=None):
    """Fixed points of an integer representation given on the generators.

    The assignment generator -> matrix must extend to the whole group;
    this is checked by closing the assignment over every product, so a
    non-action raises.  Level H is the fixed sublattice of H, restriction
    re-expresses a fixed vector in the finer basis, transfer sums over
    cosets, and conjugation applies the group action.
    """
    if len(matrices) != len(G.generators):
        raise DomainError("fixed_point_mackey: need one matrix per generator")
    mats = [_freeze(M) for M in matrices]
    if mats:
        m = len(mats[0])
    elif dim is not None:
        m = dim
    else:
        raise DomainError("fixed_point_mackey: dimension required with no generators")
    for M in mats:
        if len(M) != m or any(len(row) != m for row in M):
            raise DomainError("fixed_point_mackey: matrices must be square of equal size")
        for row in M:
            for x in row:
                if not isinstance(x, int):
                    raise DomainError("fixed_point_mackey: matrix entries must be integers")
    if dim is not None and dim != m:
        raise DomainError("fixed_point_mackey: dim disagrees with matrix size")

    # close generator images over the group, verifying consistency
    rep = {G.identity: _freeze(_identity(m))}
    frontier = [G.identity]
    while frontier:
        new = []
        for e in frontier:
            E = rep[e]
            for s, S in zip(G.generators, mats):
                p = perm_mul(s, e)
                P = _freeze([[sum(S[i][t] * E[t][j] for t in range(m))
                              for j in range(m)] for i in range(m)])
                if p in rep:
                    if rep[p] != P:
                        raise DomainError(
                            "fixed_point_mackey: matrices do not define a group action "
                            "(inconsistent at element %s)" % perm_key(p))
                else:
                    rep[p] = P
                    new.append(p)
        frontier = new

    lat = subgroup_lattice(G)
    ident = identity_perm(G.degree)
    basis = {}
    levels = {}
    solvers = {}
    for H in lat.subgroups:
        others = [h for h in H.elements if h != ident]
        if not others:
            cols = [tuple(1 if i == j else 0 for i in range(m)) for j in range(m)]
        else:
            stacked = []
            for h in others:
                A = rep[h]
                for i in range(m):
                    stacked.append([A[i][j] - (1 if i == j else 0) for j in range(m)])
            cols = kernel_basis(stacked, len(stacked), m)
        basis[H.id] = cols
        levels[H.id] = free_group(len(cols))
        solvers[H.id] = ColumnSolver(_from_columns(cols, m), m, len(cols))

    def express(hid, vectors):
        out = []
        for v in vectors:
            w = solvers[hid].solve(list(v))
            if w is None:
                raise DomainError("fixed_point_mackey: internal solve failed")
            out.append(w)
        return _freeze(_from_columns(out, levels[hid].ngens))

    res, tr, conj = {}, {}, {}
    for H in lat.subgroups:
        for K in lat.subgroups_of(H):
            res[(H.id, K.id)] = AbHom(levels[H.id], levels[K.id],
                                      express(K.id, basis[H.id]), _checked=True)
            # coset representatives of K in H, by least element
            covered, creps = set(), []
            for h in H.elements:
                if h in covered:
                    continue
                creps.append(h)
                covered.update(perm_mul(h, k) for k in K.elements)
            summed = []
            for v in basis[K.id]:
                w = [0] * m
                for h in creps:
                    A = rep[h]
                    for i in range(m):
                        w[i] += sum(A[i][j] * v[j] for j in range(m))
                summed.append(tuple(w))
            tr[(H.id, K.id)] = AbHom(levels[K.id], levels[H.id],
                                     express(H.id, summed), _checked=True)
        for g in G.elements:
            tid = H.conjugate(g).id
            A = rep[g]
            moved = [tuple(sum(A[i][j] * v[j] for j in range(m)) for i in range(m))
                     for v in basis[H.id]]
            conj[(g, H.id)] = AbHom(levels[H.id], levels[tid],
                                    express(tid, moved), _checked=True)
    return MackeyFunctor(G, levels, res, tr, conj)


def sign_action_mackey(G):
    return fixed_point_mackey(G, [((perm_sign(s),),) for s in G.generators], dim=1)


def regular_action_mackey(G):
    """Fixed-point functor of the left-translation action on Z[G]."""
    elems = G.elements
    index = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    mats = []
    for s in G.generators:
        M = [[0] * n for _ in range(n)]
        for g in elems:
            M[index[perm_mul(s, g)]][index[g]] = 1
        mats.append(M)
    return fixed_point_mackey(G, mats, dim=n)


# ---------------------------------------------------------------------------
# axiom checking

class AxiomFailure:
    def __init__(self, identity, witness):
        self.identity = identity
        self.witness = witness

    def __str__(self):
        return "%s fails at %s" % (self.identity, self.witness)

    def __repr__(self):
        return "AxiomFailure(%r, %r)" % (self.identity, self.witness)


class AxiomReport:
    def __init__(self, failures):
        self.failures = failures

    @property
    def passed(self):
        return not self.failures

    def __str__(self):
        if self.passed:
            return "PASS"
        return "\n".join(str(f) for f in self.failures)


def check_mackey_axioms(M):
    """Verify every functor identity exactly; failures become report rows.

    Covers identity maps, res/tr transitivity, conjugation being an action
    that is trivial on inner elements (so the Weyl group acts), conj/res
    and conj/tr compatibility, and the double coset formula for every
    triple K, J <= H.
    """
    from .groups import double_cosets

    failures = []
    lat = M.lattice
    G = M.group

    def lab(sid):
        return lat.label(sid)

    for H in lat.subgroups:
        ident = identity_hom(M.levels[H.id])
        if M.res[(H.id, H.id)] != ident:
            failures.append(AxiomFailure("res identity", "H=%s" % lab(H.id)))
        if M.tr[(H.id, H.id)] != ident:
            failures.append(AxiomFailure("tr identity", "H=%s" % lab(H.id)))
        for h in H.elements:
            if M.conj[(h, H.id)] != ident:
                failures.append(AxiomFailure(
                    "inner conjugation identity", "H=%s, h=%s" % (lab(H.id), perm_key(h))))

    for L in lat.subgroups:
        for H in lat.subgroups_of(L):
            for K in lat.subgroups_of(H):
                if M.res[(L.id, K.id)] != M.res[(H.id, K.id)] @ M.res[(L.id, H.id)]:
                    failures.append(AxiomFailure(
                        "res transitivity",
                        "K=%s <= H=%s <= L=%s" % (lab(K.id), lab(H.id), lab(L.id))))
                if M.tr[(L.id, K.id)] != M.tr[(L.id, H.id)] @ M.tr[(H.id, K.id)]:
                    failures.append(AxiomFailure(
                        "tr transitivity",
                        "K=%s <= H=%s <= L=%s" % (lab(K.id), lab(H.id), lab(L.id))))

    for H in lat.subgroups:
        for g1 in G.elements:
            mid = H.conjugate(g1).id
            for g2 in G.elements:
                lhs = M.conj[(perm_mul(g2, g1), H.id)]
                rhs = M.conj[(g2, mid)] @ M.conj[(g1, H.id)]
                if lhs != rhs:
                    failures.append(AxiomFailure(
                        "conjugation action",
                        "H=%s, g1=%s, g2=%s" % (lab(H.id), perm_key(g1), perm_key(g2))))

    for H in lat.subgroups:
        for K in lat.subgroups_of(H):
            for g in G.elements:
                gH, gK = H.conjugate(g).id, K.conjugate(g).id
                if M.conj[(g, K.id)] @ M.res[(H.id, K.id)] != M.res[(gH, gK)] @ M.conj[(g, H.id)]:
                    failures.append(AxiomFailure(
                        "conjugation/restriction compatibility",
                        "K=%s <= H=%s, g=%s" % (lab(K.id), lab(H.id), perm_key(g))))
                if M.conj[(g, H.id)] @ M.tr[(H.id, K.id)] != M.tr[(gH, gK)] @ M.conj[(g, K.id)]:
                    failures.append(AxiomFailure(
                        "conjugation/transfer compatibility",
                        "K=%s <= H=%s, g=%s" % (lab(K.id), lab(H.id), perm_key(g))))

    for H in lat.subgroups:
        for J in lat.subgroups_of(H):
            for K in lat.subgroups_of(H):
                lhs = M.res[(H.id, J.id)] @ M.tr[(H.id, K.id)]
                rhs = zero_hom(M.levels[K.id], M.levels[J.id])
                for g in double_cosets(H, J, K):
                    # P = J meet gKg^{-1}, and conj_g maps level(g^{-1}Jg meet K) onto it
                    gK = set(K.conjugate(g).elements)
                    P = Subgroup(G, tuple(sorted(set(J.elements) & gK)))
                    Pg_set = set(J.conjugate(perm_inv(g)).elements) & set(K.elements)
                    Pg = Subgroup(G, tuple(sorted(Pg_set)))
                    rhs = rhs + (M.tr[(J.id, P.id)]
                                 @ M.conj[(g, Pg.id)]
                                 @ M.res[(K.id, Pg.id)])
                if lhs != rhs:
                    failures.append(AxiomFailure(
                        "double coset formula",
                        "H=%s, J=%s, K=%s" % (lab(H.id), lab(J.id), lab(K.id))))
    return AxiomReport(failures)


# ---------------------------------------------------------------------------
# subfunctors, quotients, filtrations

class SubMackey:
    """A sub-Mackey functor: one subgroup-with-inclusion per level.

    Membership queries per level run against a cached integer lattice, so
    closure checks and containment comparisons stay cheap even when they
    are repeated for every map of the functor.
    """

    def __init__(self, base, levels):
        self.base = base
        self.levels = levels
        for H in base.lattice.subgroups:
            if H.id not in levels:
                raise DomainError("SubMackey: missing level %r" % H.id)
            if levels[H.id].ambient != base.levels[H.id]:
                raise DomainError("SubMackey: level %r has the wrong ambient group" % H.id)

    def level(self, sub_id):
        return self.levels[sub_id]

    def is_zero(self):
        return all(s.is_zero() for s in self.levels.values())

    def is_full(self):
        return all(s.is_full() for s in self.levels.values())

    def level_invariants(self):
        return {hid: self.levels[hid].invariant_factors() for hid in self.levels}

    def _gen_columns(self, hid):
        sub = self.levels[hid]
        return _columns(sub.inclusion.matrix, sub.ambient.ngens, sub.group.ngens)

    def closure_violations(self):
        """Maps whose image escapes the subfunctor, as witness strings."""
        M = self.base
        lat = M.lattice
        bad = []
        for H in lat.subgroups:
            cols = self._gen_columns(H.id)
            for K in lat.subgroups_of(H):
                down = M.res[(H.id, K.id)]
                if not all(self.levels[K.id].contains_vector(down.apply_coords(c))
                           for c in cols):
                    bad.append("res (%s -> %s)" % (lat.label(H.id), lat.label(K.id)))
                up = M.tr[(H.id, K.id)]
                if not all(self.levels[H.id].contains_vector(up.apply_coords(c))
                           for c in self._gen_columns(K.id)):
                    bad.append("tr (%s -> %s)" % (lat.label(K.id), lat.label(H.id)))
            for g in M.group.elements:
                c_map = M.conj[(g, H.id)]
                tid = lat.subgroup(H.id).conjugate(g).id
                if not all(self.levels[tid].contains_vector(c_map.apply_coords(c))
                           for c in cols):
                    bad.append("conj (g=%s, %s)" % (perm_key(g), lat.label(H.id)))
        return bad

    def is_closed(self):
        return not self.closure_violations()

    def contains(self, other):
        if other.base is not self.base:
            raise DomainError("SubMackey.contains: different base functor")
        return all(self.levels[hid].contains_subgroup(other.levels[hid])
                   for hid in self.levels)

    def equals(self, other):
        return self.contains(other) and other.contains(self)


def full_submackey(M):
    return SubMackey(M, {H.id: full_subgroup(M.levels[H.id])
                         for H in M.lattice.subgroups})


def zero_submackey(M):
    return SubMackey(M, {H.id: zero_subgroup(M.levels[H.id])
                         for H in M.lattice.subgroups})


def _generated_from_seeds(M, seeds):
    """Close seed coordinate vectors under res, tr and conj.

    Each level keeps an IntLattice preloaded with the level's relation
    lattice; only vectors that genuinely enlarge a level are queued, so
    the loop terminates once every image is absorbed.
    """
    lat = M.lattice
    work = {H.id: IntLattice(M.levels[H.id].ngens, M.levels[H.id].relation_basis)
            for H in lat.subgroups}
    gens = {H.id: [] for H in lat.subgroups}
    queue = deque()

    def push(hid, vec):
        if work[hid].add(vec):
            vec = tuple(vec)
            gens[hid].append(vec)
            queue.append((hid, vec))

    for hid in sorted(seeds):
        for vec in seeds[hid]:
            push(hid, vec)

    supers = {H.id: [L for L in lat.subgroups if L.contains(H)]
              for H in lat.subgroups}
    while queue:
        hid, vec = queue.popleft()
        H = lat.subgroup(hid)
        for K in lat.subgroups_of(H):
            push(K.id, M.res[(hid, K.id)].apply_coords(vec))
        for L in supers[hid]:
            push(L.id, M.tr[(L.id, hid)].apply_coords(vec))
        for g in M.group.elements:
            push(H.conjugate(g).id, M.conj[(g, hid)].apply_coords(vec))
    return SubMackey(M, {hid: subgroup_generated(M.levels[hid], gens[hid])
                         for hid in gens})


def sub_mackey_generated(M, elems):
    """Smallest subfunctor containing the given Mackey elements."""
    seeds = {}
    for el in elems:
        if el.functor is not M:
            raise DomainError("sub_mackey_generated: element of a different functor")
        seeds.setdefault(el.subgroup_id, []).append(el.element.coords)
    return _generated_from_seeds(M, seeds)


def quotient_mackey(M, S, verify=False):
    """Levelwise quotient by a closed subfunctor, same generator matrices.

    Each quotient level keeps the generators of the original level and
    gains the subgroup's generators as relators, so every structure map
    descends with its matrix unchanged.
    """
    if S.base is not M:
        raise DomainError("quotient_mackey: subfunctor of a different functor")
    violations = S.closure_violations()
    if violations:
        raise DomainError("quotient_mackey: subfunctor not closed under %s"
                          % violations[0])
    lat = M.lattice
    levels = {}
    for H in lat.subgroups:
        Q, _ = quotient(M.levels[H.id], S.levels[H.id])
        levels[H.id] = Q
    res = {key: AbHom(levels[key[0]], levels[key[1]], f.matrix, _checked=True)
           for key, f in M.res.items()}
    tr = {key: AbHom(levels[key[1]], levels[key[0]], f.matrix, _checked=True)
          for key, f in M.tr.items()}
    conj = {}
    for (g, hid), f in M.conj.items():
        tid = lat.subgroup(hid).conjugate(g).id
        conj[(g, hid)] = AbHom(levels[hid], levels[tid], f.matrix, _checked=True)
    out = MackeyFunctor(M.group, levels, res, tr, conj)
    if verify:
        report = check_mackey_axioms(out)
        if not report.passed:
            raise DomainError("quotient_mackey: axioms fail after quotient: %s"
                              % report.failures[0])
    return out


def hill_filtration(M, k):
    """Elements whose restrictions vanish on all subgroups of order < k.

    Level H is the joint kernel of res^H_J over J <= H with |J| < k; in
    particular the level is zero as soon as |H| < k (res^H_H is among the
    killed restrictions) and everything for k <= 1.  The result is a
    subfunctor: transfers into it stay inside because restriction of a
    transfer is a double-coset sum of restrictions of order < k.
    """
    lat = M.lattice
    levels = {}
    for H in lat.subgroups:
        A = M.levels[H.id]
        if H.order < k:
            levels[H.id] = zero_subgroup(A)
            continue
        targets = [J for J in lat.subgroups_of(H) if J.order < k]
        if not targets:
            levels[H.id] = full_subgroup(A)
            continue
        stacked = []
        lattice_cols = []
        offsets = []
        total = 0
        for J in targets:
            offsets.append(total)
            total += M.levels[J.id].ngens
        for J in targets:
            for row in M.res[(H.id, J.id)].matrix:
                stacked.append(list(row))
        for J, off in zip(targets, offsets):
            nJ = M.levels[J.id].ngens
            for col in M.levels[J.id].relation_basis:
                padded = [0] * total
                for i, x in enumerate(col):
                    padded[off + i] = x
                lattice_cols.append(tuple(padded))
        basis = preimage_basis(stacked, total, A.ngens, lattice_cols)
        levels[H.id] = subgroup_generated(A, basis)
    S = SubMackey(M, levels)
    violations = S.closure_violations()
    if violations:
        raise DomainError("hill_filtration: result not closed under %s "
                          "(the input functor violates the axioms)" % violations[0])
    return S


def order_generated_filtration(M, c):
    """Subfunctor generated by all elements at levels of order <= c.

    c may be an int or a Fraction; generation uses the level generators,
    which suffices because closure images are additive.
    """
    bound = Fraction(c)
    lat = M.lattice
    seeds = {}
    for H in lat.subgroups:
        if Fraction(H.order) <= bound:
            n = M.levels[H.id].ngens
            seeds[H.id] = [tuple(1 if i == j else 0 for i in range(n))
                           for j in range(n)]
    return _generated_from_seeds(M, seeds)


def reg_coh(M, H):
    """Subgroup of level H killed by every proper restriction.

    Computed directly from the stacked proper res matrices; it agrees
    with hill_filtration(M, |H|) at level H.
    """
    lat = M.lattice
    if H.id not in M.levels:
        raise DomainError("reg_coh: subgroup not in the functor's lattice")
    A = M.levels[H.id]
    targets = [J for J in lat.subgroups_of(H) if J.order < H.order]
    if not targets:
        return full_subgroup(A)
    stacked = []
    lattice_cols = []
    offsets = []
    total = 0
    for J in targets:
        offsets.append(total)
        total += M.levels[J.id].ngens
    for J in targets:
        for row in M.res[(H.id, J.id)].matrix:
            stacked.append(list(row))
    for J, off in zip(targets, offsets):
        for col in M.levels[J.id].relation_basis:
            padded = [0] * total
            for i, x in enumerate(col):
                padded[off + i] = x
            lattice_cols.append(tuple(padded))
    basis = preimage_basis(stacked, total, A.ngens, lattice_cols)
    return subgroup_generated(A, basis)


def restrict_mackey(M, H):
    """The functor seen from a subgroup: levels and maps at K <= H only."""
    if H.parent != M.group:
        raise DomainError("restrict_mackey: subgroup of a different group")
    if H.elements == M.group.elements:
        return M
    GH = PermGroup(M.group.degree, H.elements, H.elements)
    lat = subgroup_lattice(GH)
    levels = {S.id: M.levels[S.id] for S in lat.subgroups}
    res, tr, conj = {}, {}, {}
    for S in lat.subgroups:
        for K in lat.subgroups_of(S):
            res[(S.id, K.id)] = M.res[(S.id, K.id)]
            tr[(S.id, K.id)] = M.tr[(S.id, K.id)]
        for g in GH.elements:
            conj[(g, S.id)] = M.conj[(g, S.id)]
    return MackeyFunctor(GH, levels, res, tr, conj)


def sub_as_mackey(S):
    """Present a closed subfunctor as a Mackey functor in its own right.

    Each structure map is re-expressed in the subgroup generators by
    solving through the level inclusions; a solver per target level is
    shared across all maps into it.
    """
    M = S.base
    lat = M.lattice

    def induced(f, src_id, tgt_id):
        src = S.levels[src_id]
        tgt = S.levels[tgt_id]
        cols = []
        for c in _columns(src.inclusion.matrix, src.ambient.ngens, src.group.ngens):
            w = tgt.coordinates(f.apply_coords(c))
            if w is None:
                raise DomainError("sub_as_mackey: subfunctor not closed under a map")
            cols.append(w)
        return AbHom(src.group, tgt.group, _freeze(_from_columns(cols, tgt.group.ngens)))

    levels = {hid: S.levels[hid].group for hid in S.levels}
    res, tr, conj = {}, {}, {}
    for H in lat.subgroups:
        for K in lat.subgroups_of(H):
            res[(H.id, K.id)] = induced(M.res[(H.id, K.id)], H.id, K.id)
            tr[(H.id, K.id)] = induced(M.tr[(H.id, K.id)], K.id, H.id)
        for g in M.group.elements:
            tid = H.conjugate(g).id
            conj[(g, H.id)] = induced(M.conj[(g, H.id)], H.id, tid)
    return MackeyFunctor(M.group, levels, res, tr, conj)


def inflate_mackey(Mq, qdata, G):
    """Pull a functor on a quotient group back to the full group.

    Levels at subgroups containing the kernel reuse the quotient levels
    via the subgroup projection; every other level is zero, matching the
    concentrated-over-the-kernel picture.
    """
    lat = subgroup_lattice(G)
    kernel_elems = set(qdata.cosets[0])
    if identity_perm(G.degree) not in kernel_elems:
        # cosets are sorted by minimal element and the identity is minimal
        raise DomainError("inflate_mackey: malformed quotient data")
    zero = FgAbGroup(0, ())
    over = {}
    levels = {}
    for H in lat.subgroups:
        if kernel_elems <= set(H.elements):
            over[H.id] = qdata.project_subgroup(H).id
            levels[H.id] = Mq.levels[over[H.id]]
        else:
            levels[H.id] = zero
    res, tr, conj = {}, {}, {}
    for H in lat.subgroups:
        for K in lat.subgroups_of(H):
            if H.id in over and K.id in over:
                res[(H.id, K.id)] = Mq.res[(over[H.id], over[K.id])]
                tr[(H.id, K.id)] = Mq.tr[(over[H.id], over[K.id])]
            else:
                res[(H.id, K.id)] = zero_hom(levels[H.id], levels[K.id])
                tr[(H.id, K.id)] = zero_hom(levels[K.id], levels[H.id])
        for g in G.elements:
            tid = H.conjugate(g).id
            if H.id in over:
                conj[(g, H.id)] = Mq.conj[(qdata.projection[g], over[H.id])]
            else:
                conj[(g, H.id)] = zero_hom(levels[H.id], levels[tid])
    return MackeyFunctor(G, levels, res, tr, conj)


# ---------------------------------------------------------------------------
# presets

MACKEY_PRESETS = ("burnside", "constant-Z", "fixed-sign", "fixed-regular")


def mackey_preset(G, token):
    """Build a preset functor: burnside, constant-Z, constant-Z<n>,
    fixed-sign, or fixed-regular."""
    if token == "burnside":
        return burnside_mackey(G)
    if token == "fixed-sign":
        return sign_action_mackey(G)
    if token == "fixed-regular":
        return regular_action_mackey(G)
    if token.startswith("constant-Z"):
        rest = token[len("constant-Z"):]
        if rest == "":
            from .abelian import cyclic_group
            return constant_mackey(G, cyclic_group(0))
        if rest.isdigit() and int(rest) > 0:
            from .abelian import cyclic_group
            return constant_mackey(G, cyclic_group(int(rest)))
    raise DomainError("unknown Mackey preset %r (try burnside, constant-Z, "
                      "constant-Z<n>, fixed-sign, fixed-regular)" % token)
