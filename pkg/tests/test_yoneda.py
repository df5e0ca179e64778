from random import Random

import pytest

from taucat.category import (Morphism, basis_morphism, find_invertible,
                             identity_morphism)
from taucat.cochains import d1_cochain, random_cochain1
from taucat.completion import AdditiveCompletion
from taucat.fields import field
from taucat.groups import coset_space, cyclic_group
from taucat.mtau import (build_skeleton, cyclic_subgroup_of_order,
                         cyclic_table_category, mtau_spec, parity_tau)
from taucat.yoneda import (apply_rep_to_value, evaluate_yoneda,
                           has_invertible_nat, nat_equal, nat_space, phi,
                           phi_inv, rep_sum, representable, value_layout,
                           verify_graded_nat, whisker_object_morphism)

F5 = field(5)
TAU = parity_tau()
C2CAT = cyclic_table_category(F5, 2)


def twisted_cat(seed=71):
    L = cyclic_subgroup_of_order(2)
    sp = coset_space(cyclic_group(8), L)
    psi = d1_cochain(random_cochain1(F5, sp, Random(seed)))
    return build_skeleton(mtau_spec(TAU, F5, L, psi, 0))


def test_evaluate_examples():
    # identity sits in the a^-1 component at Y = X
    gm = evaluate_yoneda(C2CAT, 0, 0, 0)
    assert gm.dim(0) == 1
    gm = evaluate_yoneda(C2CAT, 0, 1, 0)
    assert gm.dim(7) == 1  # (yo^x_0 0)_{x^-1} contains the identity
    gm = evaluate_yoneda(C2CAT, 0, 1, 1)
    assert gm.dim(0) == 1  # degree-x morphisms 0 -> 1


def test_evaluate_zero_between_disjoint_blocks():
    from taucat.category import direct_sum_cat

    both = direct_sum_cat([C2CAT, C2CAT])
    for a in range(8):
        gm = evaluate_yoneda(both, 0, a, 4)
        assert gm.total_dim() == 0


def test_nat_dimension_is_reverse_hom():
    for cat in (C2CAT, twisted_cat()):
        for x in cat.objects():
            for y in cat.objects():
                for a in range(8):
                    basis = nat_space(cat, x, a, representable(a, y))
                    assert len(basis) == cat.rank(y, x, 0)


def test_nat_space_cross_block_zero():
    from taucat.category import direct_sum_cat

    both = direct_sum_cat([C2CAT, C2CAT])
    assert nat_space(both, 0, 1, representable(1, 4)) == []


def test_phi_round_trips():
    for cat in (C2CAT, twisted_cat(72)):
        for x in cat.objects():
            for y in cat.objects():
                for a in (0, 1, 3, 6):
                    F = representable(a, y)
                    for nt in nat_space(cat, x, a, F):
                        v = phi(cat, nt)
                        back = phi_inv(cat, x, a, F, v)
                        assert nat_equal(cat, F, nt, back)
                        assert phi(cat, back) == v


def test_phi_inv_zero_vector():
    F = representable(1, 1)
    width = sum(r for (_, _, r) in value_layout(C2CAT, F, 0, 1))
    nt = phi_inv(C2CAT, 0, 1, F, (0,) * width)
    assert nt.blocks == {}


def test_phi_of_identity_transformation():
    # the transformation built from id_X evaluates back to id_X coordinates
    x, a = 0, 1
    F = representable(a, x)
    v = identity_morphism(C2CAT, x).coords
    nt = phi_inv(C2CAT, x, a, F, v)
    assert phi(C2CAT, nt) == tuple(v)
    assert verify_graded_nat(C2CAT, nt)


def test_phi_natural_in_anchor_object():
    # a completion presentation supplies degree-1 morphisms between distinct
    # objects, which the skeletal categories lack
    comp = AdditiveCompletion(C2CAT)
    pres = comp.presentation_of([(0,), (0, 0), (1,), (2,)])
    gH = pres.tau.source
    for a in (0, 1, 5):
        for y in pres.objects():
            F = representable(a, y)
            for x in pres.objects():
                for x2 in pres.objects():
                    r = pres.rank(x, x2, gH.identity)
                    for k in range(r):
                        xm = basis_morphism(pres, x, x2, gH.identity, k)
                        for nt in nat_space(pres, x, a, F):
                            lhs = phi(pres, whisker_object_morphism(pres, nt, xm))
                            rhs = tuple(apply_rep_to_value(pres, F, xm, a,
                                                           phi(pres, nt)))
                            assert lhs == rhs


def test_rep_sum_dimensions_add():
    x, a = 0, 1
    single = nat_space(C2CAT, x, a, representable(a, 1))
    double = nat_space(C2CAT, x, a, rep_sum((a, 1), (a, 1)))
    assert len(double) == 2 * len(single)
    for nt in double:
        v = phi(C2CAT, nt)
        back = phi_inv(C2CAT, x, a, rep_sum((a, 1), (a, 1)), v)
        assert nat_equal(C2CAT, nt.F, nt, back)


def test_shift_representability_cross_check():
    for x in C2CAT.objects():
        for y in C2CAT.objects():
            for a in range(8):
                direct = find_invertible(C2CAT, x, y, a) is not None
                via_nat = has_invertible_nat(C2CAT, y, 0, representable(a, x))
                assert direct == via_nat
