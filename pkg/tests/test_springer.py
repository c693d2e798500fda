from fractions import Fraction

import pytest

from springercenter import rootdata, bgg
from springercenter.bmodule import sub_n, check_serre
from springercenter.springer import (
    duality_partner, ambient_bases, build_vk_component,
    trivial_summand_witness, WitnessNotInvariant, delta_subspace,
)


def test_duality_partner_involution():
    for m in (2, 3, 4):
        n = m * (m - 1) // 2
        for k in range(0, 2 * n + 1):
            for r in range(0, n + 1):
                k2, r2 = duality_partner(m, k, r)
                assert duality_partner(m, k2, r2) == (k, r)


def test_lowest_weight_component_is_wedge_of_n():
    # when r = k every generator comes from n, so the quotient is just
    # the k-th wedge of n
    for m, k in [(2, 1), (3, 2), (3, 3)]:
        comp = build_vk_component(m, k, k)
        expect = sub_n(m)
        from springercenter.bmodule import wedge
        if k > 1:
            expect = wedge(sub_n(m), k)
        assert comp.module.character() == expect.character()


def test_degree_minus_two_tangent_is_n():
    for m in (2, 3, 4):
        comp = build_vk_component(m, 1, 1)
        assert comp.module.character() == sub_n(m).character()


def test_degree_zero_tangent_weight_zero_dimension():
    # (g + u(x)n)/Delta(b) at weight 0: the ambient space has dimension
    # (m-1) + #positive roots and Delta(b) injects, leaving n dimensions
    for m in (2, 3, 4):
        n = m * (m - 1) // 2
        comp = build_vk_component(m, 1, 0)
        zero = tuple([0] * (m - 1))
        assert comp.module.weight_dim(zero) == n


def test_quotient_dimensions_are_consistent():
    for (m, k, r) in [(3, 2, 1), (3, 3, 2), (4, 2, 1)]:
        bases = ambient_bases(m, k, r)
        comp = build_vk_component(m, k, r)
        for mu, amb in bases.items():
            cut = len(delta_subspace(m, k, r, mu))
            assert comp.module.weight_dim(mu) <= len(amb)
            # the spanning set can be redundant but never undershoots
            assert len(amb) - comp.module.weight_dim(mu) <= cut


def test_graded_duality_of_characters():
    # V_k^{-2r} and its partner are isomorphic as graded B-modules, so
    # in particular their characters agree
    for m in (2, 3):
        n = m * (m - 1) // 2
        for k in range(0, 2 * n + 1):
            for r in range(max(0, k - n), min(k, n) + 1):
                k2, r2 = duality_partner(m, k, r)
                if (k2, r2) < (k, r):
                    continue
                a = build_vk_component(m, k, r).module.character()
                b = build_vk_component(m, k2, r2).module.character()
                assert a == b, (m, k, r)


def test_components_respect_serre_relations():
    for (m, k, r) in [(3, 2, 1), (3, 1, 0), (4, 2, 1)]:
        check_serre(build_vk_component(m, k, r).module)


def test_windowed_component_matches_complete_on_window():
    m, k, r = 3, 2, 1
    full = build_vk_component(m, k, r)
    window = bgg.cochain_window(m)
    part = build_vk_component(m, k, r, window=window)
    for mu in window:
        assert part.module.weight_dim(mu) == full.module.weight_dim(mu)


def test_witness_is_b_invariant():
    for m in (2, 3, 4):
        comp, lift = trivial_summand_witness(m)
        zero = tuple([0] * (m - 1))
        vec = comp.project(zero, lift)
        assert vec, "witness projects to zero"
        for i in range(1, m):
            mat = comp.module.lower_matrix(i, zero)
            assert not mat.apply(vec), "witness is not killed by f_%d" % i


def test_witness_is_the_poisson_bivector():
    # the b-invariant line in V_2^{-2} is spanned by
    # sum_gamma e_gamma (x) f_gamma + e_theta (x) f_1 ^ f_2 for sl3
    comp, lift = trivial_summand_witness(3)
    zero = (0, 0)
    explicit = {((), (("E", a, b),), (("E", b, a),)): Fraction(1)
                for (a, b) in [(0, 1), (1, 2), (0, 2)]}
    explicit[((("E", 0, 2),), (), (("E", 1, 0), ("E", 2, 1)))] = Fraction(1)
    assert comp.project(zero, explicit) == comp.project(zero, lift)


def test_top_witness_exists():
    # the top wedge power also contains exactly one trivial line
    for m in (2, 3):
        n = m * (m - 1) // 2
        comp, lift = trivial_summand_witness(m, 2 * n, n)
        assert lift


def test_missing_witness_raises():
    with pytest.raises(WitnessNotInvariant):
        trivial_summand_witness(2, 1, 1)  # V_1^{-2} = n has no weight 0
