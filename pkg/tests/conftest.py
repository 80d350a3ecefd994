"""Shared fixtures.

Groups, preset functors and towers are expensive enough to matter at
the D8/Q8 end, so they are built once per session and shared by every
suite.  All tests treat them as immutable.
"""

from __future__ import annotations

import pytest

from slicekit import (
    em_tower_minus,
    em_tower_plus,
    mackey_preset,
    named_group,
    subgroup_lattice,
)

GROUP_NAMES = ("trivial", "C2", "C3", "C4", "V4", "S3", "D8", "Q8")
FUNCTOR_TOKENS = ("burnside", "constant-Z", "constant-Z2", "fixed-sign",
                  "fixed-regular")


@pytest.fixture(scope="session")
def groups():
    return {name: named_group(name) for name in GROUP_NAMES}


@pytest.fixture(scope="session")
def functors(groups):
    out = {}
    for name, G in groups.items():
        for token in FUNCTOR_TOKENS:
            out[(name, token)] = mackey_preset(G, token)
    return out


@pytest.fixture(scope="session")
def towers(functors):
    out = {}
    for (name, token), M in functors.items():
        out[(name, token, 1)] = em_tower_plus(M)
        out[(name, token, -1)] = em_tower_minus(M)
    return out


@pytest.fixture(scope="session")
def lattices(groups):
    return {name: subgroup_lattice(G) for name, G in groups.items()}


@pytest.fixture(scope="session")
def geometric_c2(groups):
    """Functor over C2 concentrated at the top level (zero at the trivial
    subgroup, Z at the whole group, all maps between levels zero)."""
    from slicekit.abelian import AbHom, FgAbGroup, free_group
    from slicekit.mackey import MackeyFunctor

    G = groups["C2"]
    e_id, g_id = "0.1", "0.1-1.0"
    zero = FgAbGroup(0, ())
    Z = free_group(1)
    levels = {e_id: zero, g_id: Z}
    res = {
        (e_id, e_id): AbHom(zero, zero, (), _checked=True),
        (g_id, g_id): AbHom(Z, Z, ((1,),), _checked=True),
        (g_id, e_id): AbHom(Z, zero, (), _checked=True),
    }
    tr = {
        (e_id, e_id): AbHom(zero, zero, (), _checked=True),
        (g_id, g_id): AbHom(Z, Z, ((1,),), _checked=True),
        (g_id, e_id): AbHom(zero, Z, ((),), _checked=True),
    }
    conj = {}
    for g in G.elements:
        conj[(g, e_id)] = AbHom(zero, zero, (), _checked=True)
        conj[(g, g_id)] = AbHom(Z, Z, ((1,),), _checked=True)
    return MackeyFunctor(G, levels, res, tr, conj)
