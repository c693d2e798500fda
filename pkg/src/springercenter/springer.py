"""Graded pieces of the exterior powers of the pushed-down tangent sheaf.

The degree -2r piece of the k-th exterior power is the B-module

    V_k^{-2r} = ( direct sum of S^p(u) (x) wedge^a(g) (x) wedge^b(n)
                  over a+b = k, p = b - r )
                / ( Delta(S(u) (x) b) wedged against wedge^{k-1} )

where Delta(s (x) x) = s (x) x  +  sum_t (s u_t) (x) n_t with
ad(x) = sum_t u_t (x) n_t the coadjoint expansion of the b-action on the
fiber n.  Gradings: g and b sit in degree 0, n in degree -2, u in +2.

Everything is constructed one weight space at a time, since the
denominator is weight-homogeneous.  A construction can be windowed to a
set of weights (enough for running a resolution complex over it), or
built on all weights of the ambient space, which yields a complete
BModule suitable for Lie algebra cohomology.
"""

import itertools
from fractions import Fraction
from functools import lru_cache

from .exactla import SparseMatrix, RowReducer, kernel_basis
from . import rootdata
from . import bmodule
from .bmodule import BModule, MissingWeightSpace, bracket, gl_label_weight


class WitnessNotInvariant(Exception):
    pass


def duality_partner(m, k, r):
    """The wedge degree and internal degree pairing with (k, -2r) under
    the symplectic duality of the total exterior algebra."""
    n = m * (m - 1) // 2
    return (2 * n - k, n + r - k)


def _n_labels(m):
    return sorted(("E", a, b) for a in range(m) for b in range(a))


def _u_labels(m):
    return sorted(("E", a, b) for a in range(m) for b in range(a + 1, m))


def _g_labels(m):
    out = [("E", a, b) for a in range(m) for b in range(m) if a != b]
    out += [("H", i) for i in range(1, m)]
    return sorted(out)


def _b_labels(m):
    return _n_labels(m) + [("H", i) for i in range(1, m)]


@lru_cache(maxsize=None)
def _act_g(m, i):
    return {x: bmodule.bracket(m, bmodule.f_label(m, i), x) for x in _g_labels(m)}


@lru_cache(maxsize=None)
def _act_n(m, i):
    return {x: bmodule.bracket(m, bmodule.f_label(m, i), x) for x in _n_labels(m)}


@lru_cache(maxsize=None)
def _act_u(m, i):
    upper = set(_u_labels(m))
    out = {}
    for x in _u_labels(m):
        out[x] = {k: v for k, v in bmodule.bracket(m, bmodule.f_label(m, i), x).items()
                  if k in upper}
    return out


@lru_cache(maxsize=None)
def _ad_n(m):
    """ad(x) in u (x) n for x in b: sum over gamma of e_gamma (x) [x, f_gamma],
    with e_gamma = E_{ab} the trace-form dual of f_gamma = E_{ba}."""
    out = {}
    for x in _b_labels(m):
        terms = []
        for f in _n_labels(m):
            e = ("E", f[2], f[1])
            for nl, c in bmodule.bracket(m, x, f).items():
                assert nl[0] == "E" and nl[1] > nl[2]
                terms.append((e, nl, c))
        out[x] = terms
    return out


def _graded_tuples(m, labels, size, strict):
    gen = itertools.combinations if strict else itertools.combinations_with_replacement
    out = {}
    zero = tuple([0] * (m - 1))
    for combo in gen(labels, size):
        mu = zero
        for lbl in combo:
            mu = rootdata.add(mu, gl_label_weight(m, lbl))
        out.setdefault(mu, []).append(combo)
    return out


@lru_cache(maxsize=None)
def _wedge_g_basis(m, a):
    return _graded_tuples(m, _g_labels(m), a, strict=True)


@lru_cache(maxsize=None)
def _wedge_n_basis(m, b):
    return _graded_tuples(m, _n_labels(m), b, strict=True)


@lru_cache(maxsize=None)
def _sym_u_basis(m, p):
    return _graded_tuples(m, _u_labels(m), p, strict=False)


def _ambient_params(m, k, r):
    n_dim = m * (m - 1) // 2
    g_dim = m * m - 1
    out = []
    for b in range(max(r, 0), min(k, n_dim) + 1):
        a = k - b
        p = b - r
        if a < 0 or a > g_dim or p < 0:
            continue
        out.append((a, b, p))
    return out


_ambient_cache = {}


def ambient_bases(m, k, r):
    """All weight spaces of the ambient sum; dict weight -> list of
    (mono, gset, nset) labels."""
    key = (m, k, r)
    if key in _ambient_cache:
        return _ambient_cache[key]
    out = {}
    for (a, b, p) in _ambient_params(m, k, r):
        wg = _wedge_g_basis(m, a)
        wn = _wedge_n_basis(m, b)
        su = _sym_u_basis(m, p)
        for mug, gl in wg.items():
            for mun, nl in wn.items():
                mugn = rootdata.add(mug, mun)
                for muu, ul in su.items():
                    mu = rootdata.add(mugn, muu)
                    lst = out.setdefault(mu, [])
                    for s in ul:
                        for g in gl:
                            for nn in nl:
                                lst.append((s, g, nn))
    _ambient_cache[key] = out
    return out


def ambient_component(m, k, r, mu):
    return ambient_bases(m, k, r).get(mu, [])


def _insert_sorted(tup, x):
    """Insert x into a strictly increasing tuple; returns (tuple, position)
    or (None, None) when x already occurs."""
    if x in tup:
        return None, None
    pos = 0
    while pos < len(tup) and tup[pos] < x:
        pos += 1
    return tup[:pos] + (x,) + tup[pos:], pos


def _ambient_act(m, i, label):
    """f_i applied to an ambient basis element; dict label -> coeff."""
    mono, gset, nset = label
    out = {}

    def accum(lbl, c):
        if c:
            out[lbl] = out.get(lbl, 0) + c

    au = _act_u(m, i)
    for t, ul in enumerate(mono):
        for ul2, c in au[ul].items():
            accum((tuple(sorted(mono[:t] + (ul2,) + mono[t + 1:])), gset, nset), c)
    ag = _act_g(m, i)
    for t, gl in enumerate(gset):
        for gl2, c in ag[gl].items():
            rest = gset[:t] + gset[t + 1:]
            new, pos = _insert_sorted(rest, gl2)
            if new is None:
                continue
            sign = (-1) ** (pos - t) if pos > t else (-1) ** (t - pos)
            accum((mono, new, nset), c * sign)
    an = _act_n(m, i)
    for t, nl in enumerate(nset):
        for nl2, c in an[nl].items():
            rest = nset[:t] + nset[t + 1:]
            new, pos = _insert_sorted(rest, nl2)
            if new is None:
                continue
            sign = (-1) ** (pos - t) if pos > t else (-1) ** (t - pos)
            accum((mono, gset, new), c * sign)
    return {lbl: c for lbl, c in out.items() if c}


def _delta_wedge(m, s_mono, x, omega):
    """Delta(s (x) x) wedged with an ambient element of one lower wedge
    degree; dict label -> coeff."""
    mono_o, gset, nset = omega
    out = {}
    # inclusion part: x enters the g wedge factor
    new_g, pos = _insert_sorted(gset, x)
    if new_g is not None:
        mono = tuple(sorted(s_mono + mono_o))
        lbl = (mono, new_g, nset)
        out[lbl] = out.get(lbl, 0) + (-1) ** pos
    # coadjoint part: one extra linear function, one n wedge factor
    for (e_lbl, n_lbl, c) in _ad_n(m)[x]:
        new_n, pos = _insert_sorted(nset, n_lbl)
        if new_n is None:
            continue
        mono = tuple(sorted(s_mono + (e_lbl,) + mono_o))
        sign = (-1) ** (len(gset) + pos)
        lbl = (mono, gset, new_n)
        out[lbl] = out.get(lbl, 0) + c * sign
    return {lbl: v for lbl, v in out.items() if v}


def delta_subspace(m, k, r, mu):
    """Spanning vectors (index dicts over ambient_component(m,k,r,mu)) of
    the subspace being quotiented out at weight mu."""
    amb = ambient_component(m, k, r, mu)
    if not amb:
        return []
    idx = {lbl: j for j, lbl in enumerate(amb)}
    n_dim = m * (m - 1) // 2
    pmax = min(k - 1, n_dim) - r
    vectors = []
    zero = tuple([0] * (m - 1))
    for p in range(0, pmax + 1):
        sub = ambient_bases(m, k - 1, r + p)
        su = _sym_u_basis(m, p)
        for x in _b_labels(m):
            wx = gl_label_weight(m, x)
            for ws, s_list in su.items():
                wo = rootdata.sub(rootdata.sub(mu, wx), ws)
                olist = sub.get(wo)
                if not olist:
                    continue
                for s in s_list:
                    for omega in olist:
                        vec = _delta_wedge(m, s, x, omega)
                        if vec:
                            vectors.append({idx[lbl]: v for lbl, v in vec.items()})
    return vectors


class VkComponent:
    """The quotient module V_k^{-2r}, weight space by weight space."""

    def __init__(self, m, k, r, window=None):
        self.m, self.k, self.r = m, k, r
        bases = ambient_bases(m, k, r)
        complete = window is None
        window = set(bases) if window is None else set(window)
        self.window = window
        self._reducer = {}
        self._colmap = {}
        self._amb_index = {}
        spaces = {}
        for mu in window:
            amb = bases.get(mu)
            if not amb:
                continue
            red = RowReducer()
            for vec in delta_subspace(m, k, r, mu):
                red.add(vec)
            pivots = set(red.echelon)
            keep = [c for c in range(len(amb)) if c not in pivots]
            self._reducer[mu] = red
            self._amb_index[mu] = {lbl: j for j, lbl in enumerate(amb)}
            if keep:
                spaces[mu] = [amb[c] for c in keep]
                self._colmap[mu] = {c: q for q, c in enumerate(keep)}
        lower = {}
        for mu, lbls in spaces.items():
            for i in range(1, m):
                target = rootdata.sub(mu, rootdata.simple_root(m, i))
                if target not in window:
                    continue
                ent = {}
                for col, lbl in enumerate(lbls):
                    img = _ambient_act(m, i, lbl)
                    for q, v in self._project_labels(target, img).items():
                        ent[(q, col)] = v
                if ent:
                    lower[(i, mu)] = SparseMatrix(len(spaces[target]), len(lbls), ent)
        self.module = BModule(m, spaces, lower, complete=complete,
                              name="V_%d^{-%d}" % (k, 2 * r),
                              known_weights=window)

    def _project_labels(self, mu, label_vec):
        if mu not in self.window:
            raise MissingWeightSpace("weight %r outside window" % (mu,))
        if mu not in self._amb_index:
            assert not label_vec, "image lands outside the ambient space"
            return {}
        idx = self._amb_index[mu]
        vec = {idx[lbl]: v for lbl, v in label_vec.items()}
        red = self._reducer[mu]
        res = red.reduce(vec)
        if not res:
            return {}
        cm = self._colmap.get(mu)
        assert cm is not None, "nonzero residue in a killed weight space"
        return {cm[c]: v for c, v in res.items()}

    def project(self, mu, label_vec):
        """Project an ambient vector, given as dict label -> coeff, to
        quotient coordinates at weight mu."""
        return self._project_labels(mu, label_vec)


def build_vk_component(m, k, r, window=None):
    return VkComponent(m, k, r, window=window)


def trivial_summand_witness(m, k=2, r=1):
    """The b-invariant vector of weight 0 in V_k^{-2r}.

    Returns (component, lift) where lift is an ambient representative as
    dict label -> coefficient.  Raises WitnessNotInvariant when the joint
    kernel of the lowering operators on the weight-0 quotient is trivial.
    """
    zero = tuple([0] * (m - 1))
    window = {zero}
    for i in range(1, m):
        window.add(tuple(-c for c in rootdata.simple_root(m, i)))
    comp = build_vk_component(m, k, r, window=window)
    mod = comp.module
    dim0 = mod.weight_dim(zero)
    if dim0 == 0:
        raise WitnessNotInvariant("weight-0 space of V_%d^{-%d} is zero" % (k, 2 * r))
    rows = {}
    offset = 0
    entries = {}
    for i in range(1, m):
        mat = mod.lower_matrix(i, zero)
        for (rr, cc), v in mat.entries.items():
            entries[(offset + rr, cc)] = v
        offset += mat.nrows
    stacked = SparseMatrix(offset, dim0, entries)
    kern = kernel_basis(stacked)
    if not kern:
        raise WitnessNotInvariant(
            "no b-invariant vector in V_%d^{-%d} at weight 0" % (k, 2 * r))
    assert len(kern) == 1, "trivial summand of V_%d^{-%d} is not a line" % (k, 2 * r)
    vec = kern[0]
    labels = mod.labels(zero)
    lift = {labels[c]: v for c, v in vec.items()}
    return comp, lift
