import itertools
import random
from fractions import Fraction

import pytest

from springercenter import rootdata
from springercenter.bmodule import (
    bracket, gl_label_weight, adjoint_g, sub_n, sub_b, quotient_u,
    trivial_module, natural_module, irreducible_module, tensor, wedge,
    sym, direct_sum, dual, quotient, check_serre, BModule,
    MissingWeightSpace, NotSubmodule,
)


def all_labels(m):
    out = [("H", i) for i in range(1, m)]
    out += [("E", a, b) for a in range(m) for b in range(m) if a != b]
    return out


def test_bracket_antisymmetry_and_jacobi():
    rng = random.Random(5)
    for m in (3, 4):
        labels = all_labels(m)
        for _ in range(60):
            x, y, z = (rng.choice(labels) for _ in range(3))
            xy = bracket(m, x, y)
            yx = bracket(m, y, x)
            assert xy == {k: -v for k, v in yx.items()}

            def br_into(coeffs, w):
                out = {}
                for lbl, c in coeffs.items():
                    for lbl2, c2 in bracket(m, lbl, w).items():
                        out[lbl2] = out.get(lbl2, 0) + c * c2
                return {k: v for k, v in out.items() if v}

            jac = {}
            for term in (br_into(xy, z),
                         br_into(bracket(m, y, z), x),
                         br_into(bracket(m, z, x), y)):
                for lbl, c in term.items():
                    jac[lbl] = jac.get(lbl, 0) + c
            assert not any(jac.values())


def test_bracket_weights_add():
    for m in (3, 4):
        labels = all_labels(m)
        for x in labels:
            for y in labels:
                wsum = rootdata.add(gl_label_weight(m, x), gl_label_weight(m, y))
                for lbl in bracket(m, x, y):
                    assert gl_label_weight(m, lbl) == wsum


def test_standard_module_dimensions():
    for m in (2, 3, 4):
        n = m * (m - 1) // 2
        assert adjoint_g(m).dim == m * m - 1
        assert sub_n(m).dim == n
        assert quotient_u(m).dim == n
        assert sub_b(m).dim == n + m - 1
        assert trivial_module(m).dim == 1
        assert natural_module(m).dim == m


def test_serre_relations_hold_on_standard_modules():
    for m in (2, 3, 4):
        for mod in (adjoint_g(m), sub_n(m), quotient_u(m), sub_b(m)):
            check_serre(mod)
    check_serre(tensor(sub_n(3), quotient_u(3)))
    check_serre(wedge(adjoint_g(3), 2))


def test_adjoint_lowering_matches_bracket():
    for m in (3, 4):
        g = adjoint_g(m)
        for mu in g.weights():
            for i in range(1, m):
                tgt = rootdata.sub(mu, rootdata.simple_root(m, i))
                mat = g.lower_matrix(i, mu)
                for col, lbl in enumerate(g.labels(mu)):
                    expect = bracket(m, ("E", i, i - 1), lbl)
                    got = {}
                    for (r, c), v in mat.entries.items():
                        if c == col:
                            got[g.labels(tgt)[r]] = v
                    expect = {k: Fraction(v) for k, v in expect.items()
                              if k in set(g.labels(tgt))}
                    assert got == expect


def test_natural_module_lowering_chain():
    m = 4
    nat = natural_module(m)
    vec = {0: Fraction(1)}
    mu = nat.weights()[-1]
    # f_1 v_0 = v_1, then f_2 v_1 = v_2, then f_3 v_2 = v_3
    tgt, vec = nat.apply_word((1, 2, 3), rootdata.from_eps([1, 0, 0, 0]), vec)
    assert vec == {0: Fraction(1)}
    assert tgt == rootdata.from_eps([0, 0, 0, 1])


def test_apply_word_is_left_to_right_composition():
    g = adjoint_g(3)
    mu = (1, 1)  # highest root
    vec = {0: Fraction(1)}
    t1, v1 = g.apply_lower(1, mu, vec)
    t2, v2 = g.apply_lower(2, t1, v1)
    tw, vw = g.apply_word((1, 2), mu, {0: Fraction(1)})
    assert (tw, vw) == (t2, v2)


def test_tensor_wedge_sym_dimensions():
    g = adjoint_g(3)
    n = sub_n(3)
    assert tensor(g, n).dim == 8 * 3
    assert wedge(g, 2).dim == 8 * 7 // 2
    assert sym(n, 2).dim == 3 * 4 // 2
    assert direct_sum(g, n).dim == 11


def test_character_multiplicativity_under_tensor():
    a = sub_n(3)
    b = quotient_u(3)
    ca, cb = a.character(), b.character()
    expect = {}
    for mu, da in ca.items():
        for nu, db in cb.items():
            key = rootdata.add(mu, nu)
            expect[key] = expect.get(key, 0) + da * db
    assert tensor(a, b).character() == expect


def test_dual_negates_weights():
    n = sub_n(3)
    d = dual(n)
    assert d.character() == {tuple(-c for c in mu): v
                             for mu, v in n.character().items()}
    check_serre(d)


def test_quotient_u_equals_g_mod_b():
    for m in (2, 3):
        g = adjoint_g(m)
        # quotient by the span of the Cartan and lowering basis vectors
        vecs = []
        for mu in g.weights():
            labels = g.labels(mu)
            for k, lbl in enumerate(labels):
                if lbl[0] == "H" or lbl[1] > lbl[2]:
                    vecs.append((mu, {k: Fraction(1)}))
        q = quotient(g, vecs)
        assert q.character() == quotient_u(m).character()


def test_quotient_rejects_non_invariant_subspace():
    g = adjoint_g(3)
    # a single raising root vector does not span a b-submodule
    mu = (2, -1)
    k = g.labels(mu).index(("E", 0, 1))
    with pytest.raises(NotSubmodule):
        quotient(g, [(mu, {k: Fraction(1)})])


def test_irreducible_module_dimensions():
    cases = [(2, (3,)), (3, (1, 1)), (3, (2, 0)), (4, (1, 0, 1)), (4, (0, 1, 0))]
    for m, lam in cases:
        mod = irreducible_module(m, lam)
        assert mod.dim == rootdata.weyl_dim(lam)
        check_serre(mod)


def test_irreducible_adjoint_matches_adjoint_character():
    for m in (3, 4):
        theta = tuple([1] + [0] * (m - 3) + [1]) if m > 2 else (2,)
        mod = irreducible_module(m, theta)
        assert mod.character() == adjoint_g(m).character()


def test_incomplete_module_raises_outside_window():
    g = adjoint_g(3)
    windowed = BModule(3, {mu: g.labels(mu) for mu in [(1, 1)]},
                       {}, complete=False, known_weights={(1, 1)})
    with pytest.raises(MissingWeightSpace):
        windowed.lower_matrix(1, (0, 0))
