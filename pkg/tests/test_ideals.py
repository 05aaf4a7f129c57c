"""Tilting ideals: word map, axioms, Hasse quiver, right-mutation homs."""

from math import factorial

import pytest

from tau_atlas import algebra as alg
from tau_atlas import ideals as idl
from tau_atlas import modules as mod
from tau_atlas import symgroup as sg
from expected_small import (TILT_N2_ARROWS, TILT_N2_VERTICES, TILT_N3_ARROWS,
                            TILT_N3_VERTICES)


def layers_of(m):
    """Radical layers as sorted vertex tuples with multiplicity."""
    out = []
    for layer in mod.radical_layer_dims(m):
        row = []
        for v, d in enumerate(layer):
            row.extend([v + 1] * d)
        out.append(tuple(row))
    return tuple(out)


def test_maximal_ideal_structure():
    a = alg.build_auslander(2, 2)
    i1 = idl.maximal_ideal(a, 1)
    assert idl.ideal_component_module(i1, 1).dims == (0, 1)
    assert mod.is_isomorphic(idl.ideal_component_module(i1, 2), mod.projective(a, 2))
    a3 = alg.build_auslander(3, 2)
    i2 = idl.maximal_ideal(a3, 2)
    assert idl.ideal_component_module(i2, 2).dims == (1, 1, 2)
    for n in (2, 3, 4):
        an = alg.build_auslander(n, 2)
        for i in range(1, n + 1):
            assert an.dim - idl.maximal_ideal(an, i).dim == 1


def test_maximal_ideal_components_match_radicals():
    for n in (2, 3, 4):
        a = alg.build_auslander(n, 2)
        for i in range(1, n + 1):
            I = idl.maximal_ideal(a, i)
            for j in range(1, n + 1):
                comp = idl.ideal_component_module(I, j)
                if j == i:
                    want, _ = mod.radical(mod.projective(a, i))
                else:
                    want = mod.projective(a, j)
                assert mod.is_isomorphic(comp, want)


def test_ideal_of_word_examples():
    a = alg.build_auslander(3, 2)
    assert idl.ideal_of_word(a, (1, 2, 3)).dim == a.dim
    t = idl.ideal_of_word(a, sg.evaluate_word((2, 1), 3))
    assert [idl.ideal_component_module(t, j).dims for j in (1, 2, 3)] == \
        [(0, 1, 1), (0, 1, 2), (1, 2, 3)]
    bottom = idl.ideal_of_word(a, (3, 2, 1))
    i1, i2 = idl.maximal_ideal(a, 1), idl.maximal_ideal(a, 2)
    assert bottom.key == alg.ideal_product(alg.ideal_product(i1, i2), i1).key
    with pytest.raises(ValueError):
        idl.ideal_of_word(a, (1, 2))


def test_word_map_well_defined_on_all_reduced_words():
    for n in (3, 4):
        a = alg.build_auslander(n, 2)
        for w in sg.all_permutations(n):
            keys = {idl.ideal_of_letters(a, word).key
                    for word in sg.all_reduced_words(w)}
            assert len(keys) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tilt_counts(n):
    a = alg.build_auslander(n, 2)
    cat = idl.tilt_enumerate(a)
    assert len(cat) == factorial(n)
    assert cat.hasse.n_arrows == factorial(n) * (n - 1) // 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_semigroup_relations(n):
    a = alg.build_auslander(n, 2)
    rep = idl.check_semigroup_relations(a)
    assert rep["ok"], rep["failures"]


def test_hasse_n2_matches_expected():
    a = alg.build_auslander(2, 2)
    cat = idl.tilt_enumerate(a)
    for w, want in TILT_N2_VERTICES.items():
        rec = cat.record_of_word(w)
        got = tuple(layers_of(s) for s in cat.summands_of(cat.by_word[w]))
        assert got == want
    got_arrows = {(cat.records[cat.hasse.index[cat.hasse.keys[u]]].word,
                   cat.records[cat.hasse.index[cat.hasse.keys[v]]].word, t)
                  for u, v, t in cat.hasse.arrows}
    want_arrows = TILT_N2_ARROWS
    assert {(a_, b, t) for a_, b, t in got_arrows} == want_arrows


def test_hasse_n3_matches_expected():
    a = alg.build_auslander(3, 2)
    cat = idl.tilt_enumerate(a)
    key_to_word = {cat.records[i].ideal.key: cat.records[i].word
                   for i in range(len(cat))}
    for w, want in TILT_N3_VERTICES.items():
        got = tuple(layers_of(s) for s in cat.summands_of(cat.by_word[w]))
        assert got == want, f"summands at {w}"
    got_arrows = {(key_to_word[cat.hasse.keys[u]], key_to_word[cat.hasse.keys[v]], t)
                  for u, v, t in cat.hasse.arrows}
    assert got_arrows == TILT_N3_ARROWS


@pytest.mark.parametrize("n", [1, 2, 3])
def test_every_enumerated_ideal_is_tilting(n):
    a = alg.build_auslander(n, 2)
    cat = idl.tilt_enumerate(a)
    for k in range(len(cat)):
        cert = idl.is_tilting(cat.summands_of(k))
        assert cert.ok, cert


def test_last_maximal_ideal_is_not_tilting():
    a = alg.build_auslander(3, 2)
    i3 = idl.maximal_ideal(a, 3)
    comps = [idl.ideal_component_module(i3, j) for j in (1, 2, 3)]
    cert = idl.is_tilting(comps)
    assert not cert.ok
    assert cert.failed_axiom() == "T3'"
    assert cert.summand_count == 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_end_ring_is_the_algebra(n):
    a = alg.build_auslander(n, 2)
    cat = idl.tilt_enumerate(a)
    for rec in cat.records:
        assert idl.end_ring_matches_algebra(a, rec.ideal)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_no_homs_to_own_simple(n):
    a = alg.build_auslander(n, 2)
    for i in range(1, n + 1):
        I = idl.maximal_ideal(a, i)
        comps = [idl.ideal_component_module(I, j) for j in range(1, n + 1)]
        total, _, _ = mod.direct_sum(a, comps)
        assert mod.hom_dim(total, mod.simple(a, i)) == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_right_products_stay_tilting(n):
    a = alg.build_auslander(n, 2)
    cat = idl.tilt_enumerate(a)
    for rec in cat.records:
        for i in range(1, n):
            prod = alg.ideal_product(rec.ideal, idl.maximal_ideal(a, i))
            if prod.key != rec.ideal.key:
                assert prod.key in cat.by_key
                assert idl.end_ring_matches_algebra(a, prod)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_suffix_chain_strictly_decreasing(n):
    a = alg.build_auslander(n, 2)
    for w in sg.all_permutations(n):
        word = sg.canonical_reduced_word(w)
        if not word:
            continue
        dims = []
        t = alg.unit_ideal(a)
        for i in reversed(word):
            t = alg.ideal_product(idl.maximal_ideal(a, i), t)
            dims.append(t.dim)
        assert all(x > y for x, y in zip(dims, dims[1:]))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_last_projective_always_a_summand(n):
    from tau_atlas.context import workspace

    ws = workspace(n, 2)
    a, cat = ws.algebra, ws.tilt
    pn = mod.projective(a, n)
    for k in range(len(cat)):
        comp = idl.ideal_component_module(cat.records[k].ideal, n)
        assert comp.dims == pn.dims
        assert mod.is_isomorphic(comp, pn)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_tilt_anti_isomorphic_to_weak_order(n):
    from tau_atlas.context import workspace

    cat = workspace(n, 2).tilt
    weak = sg.weak_left_hasse(n)
    word_of = {rec.ideal.key: sg.perm_key(rec.word) for rec in cat.records}
    assert cat.hasse.is_anti_isomorphic_to(weak, lambda k: word_of[k])


@pytest.mark.parametrize("n", [2, 3])
def test_hasse_equals_generation_order_covers(n):
    # rebuild the order by generation (trace) and compare covering relations
    a = alg.build_auslander(n, 2)
    cat = idl.tilt_enumerate(a)
    mods = [cat.summands_of(k) for k in range(len(cat))]
    below = {}
    for x in range(len(cat)):
        for y in range(len(cat)):
            if x != y and all(mod.in_fac(s, mods[x]) for s in mods[y]):
                below.setdefault(x, set()).add(y)
    covers = set()
    for x, ys in below.items():
        for y in ys:
            if not any(y in below.get(z, ()) for z in ys if z != y):
                covers.add((cat.records[x].ideal.key, cat.records[y].ideal.key))
    got = {(cat.hasse.keys[u], cat.hasse.keys[v]) for u, v, _ in cat.hasse.arrows}
    assert got == covers


# --- the right-mutation direction computed as a hom module -----------------

@pytest.mark.parametrize("n", [2, 3])
def test_hom_from_ideal_dichotomy(n):
    a = alg.build_auslander(n, 2)
    cat = idl.tilt_enumerate(a)
    for rec in cat.records:
        for i in range(1, n):
            I = idl.maximal_ideal(a, i)
            H, incl, tmod = idl.hom_from_ideal(a, i, rec.ideal)
            assert all(m.shape[0] <= H.dims[v] or True for v, m in enumerate(incl.mats))
            assert incl.check_commutes()
            right = alg.ideal_product(rec.ideal, I)
            grew = H.total_dim > tmod.total_dim
            if right.key != rec.ideal.key:
                # right multiplication moves down, so the hom side is closed
                assert not grew
                assert H.dims == tmod.dims
            else:
                assert grew
                # the quotient is a power of the simple at i
                quot_dims = tuple(h - t for h, t in zip(H.dims, tmod.dims))
                assert sum(quot_dims) == quot_dims[i - 1]


def test_hom_from_ideal_recovers_algebra():
    a = alg.build_auslander(2, 2)
    i1 = idl.maximal_ideal(a, 1)
    H, incl, tmod = idl.hom_from_ideal(a, 1, i1)
    # Hom(I_1, I_1) is the free module again: the quotient by I_1 is one simple
    assert sum(H.dims) - sum(tmod.dims) == 1
    lam = mod.free_module(a).rep
    assert mod.is_isomorphic(H, lam)


def test_hom_from_unit_ideal_is_identity():
    a = alg.build_auslander(3, 2)
    for i in (1, 2):
        H, incl, tmod = idl.hom_from_ideal(a, i, alg.unit_ideal(a))
        assert H.dims == tmod.dims
        lam = mod.free_module(a).rep
        assert mod.is_isomorphic(H, lam)


@pytest.mark.parametrize("n", [2, 3])
def test_hom_from_ideal_proj_dim(n):
    a = alg.build_auslander(n, 2)
    cat = idl.tilt_enumerate(a)
    for rec in cat.records:
        for i in range(1, n):
            H, _, _ = idl.hom_from_ideal(a, i, rec.ideal)
            assert mod.proj_dim(H) <= 1


def test_tilt_catalog_json_schema():
    import jsonschema

    a = alg.build_auslander(3, 2)
    cat = idl.tilt_enumerate(a)
    jsonschema.validate(idl.tilt_catalog_json(cat), idl.TILT_CATALOG_JSON_SCHEMA)
