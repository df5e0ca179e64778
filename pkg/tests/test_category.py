from random import Random

import pytest

from taucat.category import (FunctorData, GradedCatPresentation, Morphism,
                             NatTransData, basis_morphism, compose,
                             compose_functors, direct_sum_cat, find_invertible,
                             find_shift, identity_functor, identity_morphism,
                             invert, is_simple, are_disjoint_deg1,
                             verify_axioms, verify_functor, verify_nat,
                             zero_morphism)
from taucat.cochains import d1_cochain, random_cochain1
from taucat.fields import field
from taucat.groups import coset_space, cyclic_group, subgroup
from taucat.mtau import (build_skeleton, cyclic_subgroup_of_order,
                         cyclic_table_category, mtau_spec, parity_tau,
                         trivial_spec)

F5 = field(5)
TAU = parity_tau()


def twisted_skeleton(seed=11, k=2, g=0):
    L = cyclic_subgroup_of_order(k)
    sp = coset_space(cyclic_group(8), L)
    psi = d1_cochain(random_cochain1(F5, sp, Random(seed)))
    return mtau_spec(TAU, F5, L, psi, g)


def test_c2_table_category_verifies():
    assert verify_axioms(cyclic_table_category(F5, 2)).ok


def test_c8_grading_discrepancy():
    verdict = verify_axioms(cyclic_table_category(F5, 8))
    assert not verdict.ok
    grading = [v for v in verdict.violations if v[0] == "grading"]
    assert grading[0] == ("grading", 0, 0, 1)


def test_one_object_identity_only():
    tau = parity_tau()
    cat = GradedCatPresentation(tau, F5, [0], {(0, 0, 0): 1},
                                {(0, 0, 0, 0, 0): (((1,),),)}, [(1,)])
    assert verify_axioms(cat).ok


def test_compose_unit_and_zero():
    cat = cyclic_table_category(F5, 2)
    f = basis_morphism(cat, 0, 1, 1, 0)
    assert compose(cat, identity_morphism(cat, 0), f) == f
    assert compose(cat, f, identity_morphism(cat, 1)) == f
    z = zero_morphism(cat, 0, 1, 1)
    assert compose(cat, z, basis_morphism(cat, 1, 2, 1, 0)).is_zero()


def test_compose_in_skeleton():
    spec = trivial_spec(TAU, F5, cyclic_subgroup_of_order(2))
    cat = build_skeleton(spec)
    sp = spec.psi.space
    e3 = Morphism(0, sp.coset_of[3], 3, (1,))
    e2 = Morphism(sp.coset_of[3], sp.coset_of[5], 2, (1,))
    out = compose(cat, e3, e2)
    assert out == Morphism(0, sp.coset_of[5], 5, (1,))


def test_invert_identity_and_zero():
    cat = cyclic_table_category(F5, 2)
    idm = identity_morphism(cat, 0)
    assert invert(cat, idm) == idm
    assert invert(cat, zero_morphism(cat, 0, 1, 1)) is None


def test_invert_skeleton_basis():
    spec = twisted_skeleton(3)
    cat = build_skeleton(spec)
    sp = spec.psi.space
    for i in range(sp.size):
        for a in range(8):
            e = Morphism(i, cat.shifts[(i, a)][0], a, (1,))
            g = invert(cat, e)
            assert g is not None
            assert compose(cat, e, g) == identity_morphism(cat, i)
            assert compose(cat, g, e) == identity_morphism(cat, e.dst)
            assert g.degree == cyclic_group(8).inv(a)


def test_find_shift_examples():
    cat = cyclic_table_category(F5, 2)
    assert find_shift(cat, 0, 0) == (0, identity_morphism(cat, 0))
    y, iso = find_shift(cat, 0, 1)
    assert y == 1
    assert invert(cat, iso) is not None
    for x in cat.objects():
        for a in range(8):
            y, iso = find_shift(cat, x, a)
            assert y == (x + a) % 4


def test_simplicity_and_disjointness():
    cat = cyclic_table_category(F5, 2)
    assert all(is_simple(cat, x) for x in cat.objects())
    assert are_disjoint_deg1(cat, 0, 1)
    assert not are_disjoint_deg1(cat, 0, 0)


def test_direct_sum_cat():
    c2 = cyclic_table_category(F5, 2)
    assert direct_sum_cat([c2]) == c2
    both = direct_sum_cat([c2, c2])
    assert both.n_objects == 8
    assert verify_axioms(both).ok
    for x in range(4):
        for y in range(4, 8):
            for h in range(8):
                assert both.rank(x, y, h) == 0
    simples = [x for x in both.objects() if is_simple(both, x)]
    assert simples == list(range(8))


def test_identity_functor_and_composition():
    cat = cyclic_table_category(F5, 2)
    F = identity_functor(cat)
    assert verify_functor(F).ok
    assert compose_functors(F, F) == F


def test_functor_perturbation_detected():
    cat = cyclic_table_category(F5, 2)
    F = identity_functor(cat)
    maps = dict(F.hom_maps)
    maps[(0, 1, 1)] = ((3,),)  # scale one hom map only: breaks composition
    broken = FunctorData(cat, cat, F.obj_map, maps)
    verdict = verify_functor(broken)
    assert not verdict.ok
    assert any(v[0] == "compose" for v in verdict.violations)


def test_functor_composition_verifies():
    spec = twisted_skeleton(5)
    cat = build_skeleton(spec)
    F = identity_functor(cat)
    G = compose_functors(F, F)
    assert verify_functor(G).ok


def test_nat_trans_identity():
    cat = cyclic_table_category(F5, 2)
    F = identity_functor(cat)
    nt = NatTransData(F, F, [identity_morphism(cat, x) for x in cat.objects()])
    assert verify_nat(nt).ok


def test_nat_trans_violation():
    cat = cyclic_table_category(F5, 2)
    F = identity_functor(cat)
    comps = [identity_morphism(cat, x) for x in cat.objects()]
    comps[2] = Morphism(2, 2, 0, (3,))
    nt = NatTransData(F, F, comps)
    assert not verify_nat(nt).ok


def test_find_invertible_zero_rank():
    cat = cyclic_table_category(F5, 2)
    assert find_invertible(cat, 0, 1, 0) is None  # no degree-1 part between 0,1
