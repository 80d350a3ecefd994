"""Canonical JSON forms for groups, Mackey functors and towers.

Emission is deterministic (sorted keys, fixed indentation, integers only)
so that emit -> parse -> emit is byte-identical.  Parsing is strict:
wrong shapes, missing levels or unknown keys raise ParseError, while
semantically invalid data (a matrix that fails to respect the declared
relations, say) raises DomainError.

Matrix JSON is row-major.  A restriction entry "H,K" maps level-H
coordinates to level-K coordinates, so its row count is the K level's
generator count; transfers go the other way.  Conjugation keys are
"g,H" with g written in one-line image notation joined by dots.
"""

from __future__ import annotations

import json

from .abelian import AbHom, FgAbGroup
from .errors import DomainError, ParseError
from .groups import (
    NAMED_GENERATORS,
    group_from_generators,
    named_group,
    perm_key,
    subgroup_lattice,
)
from .mackey import MackeyFunctor, mackey_preset


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _require(cond, message):
    if not cond:
        raise ParseError(message)


def _int_matrix(obj, rows, cols, where):
    _require(isinstance(obj, list) and len(obj) == rows,
             "%s: expected %d matrix rows" % (where, rows))
    out = []
    for row in obj:
        _require(isinstance(row, list) and len(row) == cols,
                 "%s: expected rows of length %d" % (where, cols))
        for x in row:
            _require(isinstance(x, int) and not isinstance(x, bool),
                     "%s: matrix entries must be integers" % where)
        out.append(tuple(row))
    return tuple(out)


# ---------------------------------------------------------------------------
# groups

def group_to_json(G):
    return {"degree": G.degree, "generators": [list(g) for g in G.generators]}


def parse_group_obj(obj, element_cap=None):
    _require(isinstance(obj, dict), "group: expected an object")
    if "preset" in obj:
        name = obj["preset"]
        _require(isinstance(name, str), "group: preset must be a string")
        if name not in NAMED_GENERATORS:
            raise ParseError("group: unknown preset %r" % name)
        return named_group(name)
    _require("degree" in obj and "generators" in obj,
             "group: need degree and generators")
    degree = obj["degree"]
    _require(isinstance(degree, int) and not isinstance(degree, bool) and degree >= 1,
             "group: degree must be a positive integer")
    gens_obj = obj["generators"]
    _require(isinstance(gens_obj, list), "group: generators must be a list")
    gens = []
    for g in gens_obj:
        _require(isinstance(g, list) and all(
            isinstance(x, int) and not isinstance(x, bool) for x in g),
            "group: each generator is a list of integers")
        _require(len(g) == degree and sorted(g) == list(range(degree)),
                 "group: %r is not a permutation of 0..%d" % (g, degree - 1))
        gens.append(tuple(g))
    return group_from_generators(degree, gens, element_cap)


# ---------------------------------------------------------------------------
# presentations and invariant factors

def presentation_to_json(A):
    return {"ngens": A.ngens, "relations": [list(r) for r in A.relations]}


def parse_presentation(obj, where):
    _require(isinstance(obj, dict), "%s: expected an object" % where)
    _require(set(obj) == {"ngens", "relations"},
             "%s: expected exactly ngens and relations" % where)
    n = obj["ngens"]
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 0,
             "%s: ngens must be a nonnegative integer" % where)
    rel_obj = obj["relations"]
    _require(isinstance(rel_obj, list), "%s: relations must be a list" % where)
    rels = []
    for row in rel_obj:
        _require(isinstance(row, list) and len(row) == n and all(
            isinstance(x, int) and not isinstance(x, bool) for x in row),
            "%s: each relation is a length-%d integer list" % (where, n))
        rels.append(tuple(row))
    return FgAbGroup(n, tuple(rels))


def invariants_to_json(inv):
    free, torsion = inv
    return {"free_rank": free, "torsion": list(torsion)}


# ---------------------------------------------------------------------------
# Mackey functors

def mackey_to_json(M):
    lat = M.lattice
    levels = {hid: presentation_to_json(M.levels[hid]) for hid in M.levels}
    res = {}
    tr = {}
    for H in lat.subgroups:
        for K in lat.subgroups_of(H):
            key = "%s,%s" % (H.id, K.id)
            res[key] = [list(row) for row in M.res[(H.id, K.id)].matrix]
            tr[key] = [list(row) for row in M.tr[(H.id, K.id)].matrix]
    conj = {}
    for (g, hid), f in M.conj.items():
        conj["%s,%s" % (perm_key(g), hid)] = [list(row) for row in f.matrix]
    return {
        "group": group_to_json(M.group),
        "levels": levels,
        "res": res,
        "tr": tr,
        "conj": conj,
    }


def _parse_preset_mackey(obj, G):
    if G is None:
        raise ParseError("mackey preset: no group given")
    kind = obj["preset"]
    _require(isinstance(kind, str), "mackey: preset must be a string")
    if kind == "burnside":
        _require(set(obj) <= {"preset"}, "mackey: unexpected keys for burnside preset")
        return mackey_preset(G, "burnside")
    if kind == "constant":
        _require(set(obj) <= {"preset", "modulus"},
                 "mackey: unexpected keys for constant preset")
        modulus = obj.get("modulus", 0)
        _require(isinstance(modulus, int) and not isinstance(modulus, bool)
                 and modulus >= 0, "mackey: modulus must be a nonnegative integer")
        token = "constant-Z" if modulus == 0 else "constant-Z%d" % modulus
        return mackey_preset(G, token)
    if kind == "fixed":
        _require(set(obj) <= {"preset", "action", "matrices"},
                 "mackey: unexpected keys for fixed preset")
        if "matrices" in obj:
            mats = obj["matrices"]
            _require(isinstance(mats, list), "mackey: matrices must be a list")
            parsed = []
            for i, m_obj in enumerate(mats):
                _require(isinstance(m_obj, list) and m_obj and all(
                    isinstance(r, list) for r in m_obj),
                    "mackey: matrices[%d] must be a nonempty list of rows" % i)
                dim = len(m_obj)
                parsed.append(_int_matrix(m_obj, dim, dim, "mackey: matrices[%d]" % i))
            from .mackey import fixed_point_mackey
            return fixed_point_mackey(G, parsed)
        action = obj.get("action")
        if action == "sign":
            return mackey_preset(G, "fixed-sign")
        if action == "regular":
            return mackey_preset(G, "fixed-regular")
        raise ParseError("mackey: fixed preset needs action sign|regular or matrices")
    raise ParseError("mackey: unknown preset %r" % kind)


def parse_mackey_obj(obj, group=None, element_cap=None):
    """Parse a functor object; returns (functor, from_preset).

    Preset objects build trusted constructors; full objects are parsed
    strictly and should be axiom-checked by the caller before use.
    """
    _require(isinstance(obj, dict), "mackey: expected an object")
    if "preset" in obj:
        return _parse_preset_mackey(obj, group), True
    _require(set(obj) == {"group", "levels", "res", "tr", "conj"},
             "mackey: expected exactly group, levels, res, tr, conj")
    G = parse_group_obj(obj["group"], element_cap)
    if group is not None and (group.degree != G.degree
                              or group.elements != G.elements):
        raise DomainError("the requested group conflicts with the functor file's group")
    lat = subgroup_lattice(G)
    levels_obj = obj["levels"]
    _require(isinstance(levels_obj, dict), "mackey: levels must be an object")
    ids = set(lat.ids())
    _require(set(levels_obj) == ids,
             "mackey: levels must have exactly one entry per subgroup id")
    levels = {hid: parse_presentation(levels_obj[hid], "mackey level %s" % hid)
              for hid in levels_obj}

    res_obj, tr_obj, conj_obj = obj["res"], obj["tr"], obj["conj"]
    for name, table in (("res", res_obj), ("tr", tr_obj), ("conj", conj_obj)):
        _require(isinstance(table, dict), "mackey: %s must be an object" % name)
    res, tr = {}, {}
    wanted = set()
    for H in lat.subgroups:
        for K in lat.subgroups_of(H):
            key = "%s,%s" % (H.id, K.id)
            wanted.add(key)
            _require(key in res_obj, "mackey: missing res[%s]" % key)
            _require(key in tr_obj, "mackey: missing tr[%s]" % key)
            nH, nK = levels[H.id].ngens, levels[K.id].ngens
            rmat = _int_matrix(res_obj[key], nK, nH, "mackey res[%s]" % key)
            tmat = _int_matrix(tr_obj[key], nH, nK, "mackey tr[%s]" % key)
            try:
                res[(H.id, K.id)] = AbHom(levels[H.id], levels[K.id], rmat)
                tr[(H.id, K.id)] = AbHom(levels[K.id], levels[H.id], tmat)
            except DomainError:
                raise DomainError(
                    "mackey: res/tr at (%s, %s) does not respect the level relations"
                    % (lat.label(H.id), lat.label(K.id)))
    _require(set(res_obj) == wanted, "mackey: unexpected res keys")
    _require(set(tr_obj) == wanted, "mackey: unexpected tr keys")

    conj = {}
    wanted_conj = set()
    for H in lat.subgroups:
        for g in G.elements:
            key = "%s,%s" % (perm_key(g), H.id)
            wanted_conj.add(key)
            _require(key in conj_obj, "mackey: missing conj[%s]" % key)
            tid = H.conjugate(g).id
            mat = _int_matrix(conj_obj[key], levels[tid].ngens, levels[H.id].ngens,
                              "mackey conj[%s]" % key)
            try:
                conj[(g, H.id)] = AbHom(levels[H.id], levels[tid], mat)
            except DomainError:
                raise DomainError(
                    "mackey: conj at (%s, %s) does not respect the level relations"
                    % (perm_key(g), lat.label(H.id)))
    _require(set(conj_obj) == wanted_conj, "mackey: unexpected conj keys")
    return MackeyFunctor(G, levels, res, tr, conj), False


# ---------------------------------------------------------------------------
# towers

def tower_to_json(T):
    lat = T.base.lattice
    slices = {}
    for k in T.nonzero_slice_degrees():
        S = T.slices[k]
        entry = {}
        for rep in lat.class_representatives():
            inv = S.levels[rep].invariant_factors()
            if inv != (0, ()):
                entry[rep] = invariants_to_json(inv)
        slices[str(k)] = entry
    return {
        "base": mackey_to_json(T.base),
        "shift": T.shift,
        "variant": T.variant,
        "slices": slices,
    }


def slices_view_json(T):
    """The slices section alone, with the group but not the full functor."""
    full = tower_to_json(T)
    return {
        "group": group_to_json(T.base.group),
        "shift": T.shift,
        "variant": T.variant,
        "slices": full["slices"],
    }
