"""Resolution complexes of weight spaces for computing multiplicities.

For a module E over the Borel, the multiplicity of the simple L_lam in
the cohomology of the associated sheaf is the cohomology of

    0 -> E[lam] -> ... -> (+)_{l(w)=j} E[w.lam] -> ... -> E[w0.lam] -> 0

where the differentials act by lowering operators.  The maps between
terms come from explicit matrices over U(n) acting on the free modules
by right multiplication; on weight spaces they act by the word-reversed
elements (dualization is an anti-homomorphism on words).

The matrices for the zero weight are hardcoded below for m = 2, 3, 4.
Node names are reduced words in the simple reflections.  The data is
validated structurally: reduced words, full Weyl group coverage, weight
homogeneity of every arrow, and d.d == 0 on each module it is run over.
"""

import logging
from fractions import Fraction
from functools import lru_cache

from .exactla import SparseMatrix, CochainComplex
from . import rootdata, springer

log = logging.getLogger(__name__)


class LoweringPolynomial:
    """A Q-linear combination of words in the lowering generators."""

    def __init__(self, terms):
        self.terms = [(Fraction(c), tuple(w)) for c, w in terms]

    def weight_drop(self, m):
        drops = set()
        for _, word in self.terms:
            d = tuple([0] * (m - 1))
            for i in word:
                d = rootdata.add(d, rootdata.simple_root(m, i))
            drops.add(d)
        if len(drops) != 1:
            raise ValueError("inhomogeneous polynomial")
        return drops.pop()

    def reversed_words(self):
        return LoweringPolynomial([(c, w[::-1]) for c, w in self.terms])

    def __repr__(self):
        return "LoweringPolynomial(%r)" % (self.terms,)


# Right-multiplication matrices of the resolution of the trivial module,
# as pairs (shorter word, longer word) -> terms.  Single letters denote
# generator subscripts, so (2, (1, 2)) stands for 2 f_1 f_2.
_RESOLUTION = {
    2: {
        ((), (1,)): [(1, (1,))],
    },
    3: {
        ((), (1,)): [(1, (1,))],
        ((), (2,)): [(1, (2,))],
        ((1,), (2, 1)): [(1, (2, 2))],
        ((1,), (1, 2)): [(-2, (1, 2)), (1, (2, 1))],
        ((2,), (1, 2)): [(1, (1, 1))],
        ((2,), (2, 1)): [(-2, (2, 1)), (1, (1, 2))],
        ((2, 1), (1, 2, 1)): [(1, (1,))],
        ((1, 2), (1, 2, 1)): [(1, (2,))],
    },
    4: {
        # length 0 -> 1
        ((), (1,)): [(1, (1,))],
        ((), (2,)): [(1, (2,))],
        ((), (3,)): [(1, (3,))],
        # length 1 -> 2
        ((1,), (2, 1)): [(-1, (2, 2))],
        ((1,), (1, 2)): [(2, (1, 2)), (-1, (2, 1))],
        ((1,), (3, 1)): [(-1, (3,))],
        ((2,), (2, 1)): [(2, (2, 1)), (-1, (1, 2))],
        ((2,), (1, 2)): [(-1, (1, 1))],
        ((2,), (3, 2)): [(1, (3, 3))],
        ((2,), (2, 3)): [(1, (3, 2)), (-2, (2, 3))],
        ((3,), (3, 1)): [(1, (1,))],
        ((3,), (3, 2)): [(1, (2, 3)), (-2, (3, 2))],
        ((3,), (2, 3)): [(1, (2, 2))],
        # length 2 -> 3
        ((2, 1), (1, 2, 1)): [(-1, (1,))],
        ((2, 1), (3, 2, 1)): [(1, (3, 3, 3))],
        ((2, 1), (2, 3, 1)): [(3, (2, 3)), (-2, (3, 2))],
        ((1, 2), (1, 2, 1)): [(-1, (2,))],
        ((1, 2), (3, 1, 2)): [(1, (3, 3))],
        ((1, 2), (1, 2, 3)): [(6, (1, 2, 3)), (-4, (2, 1, 3)),
                              (-3, (1, 3, 2)), (2, (3, 2, 1))],
        ((3, 1), (3, 2, 1)): [(-1, (3, 3, 2, 2)), (-4, (3, 2, 3, 2)),
                              (-2, (2, 3, 2, 3)), (6, (3, 2, 2, 3))],
        ((3, 1), (2, 3, 1)): [(-1, (2, 2, 2))],
        ((3, 1), (3, 1, 2)): [(4, (1, 3, 2)), (-2, (3, 2, 1)),
                              (-2, (1, 2, 3)), (1, (2, 3, 1))],
        ((3, 1), (1, 2, 3)): [(1, (1, 1, 2, 2)), (4, (1, 2, 1, 2)),
                              (2, (2, 1, 2, 1)), (-6, (1, 2, 2, 1))],
        ((3, 2), (3, 2, 1)): [(-6, (3, 2, 1)), (4, (2, 1, 3)),
                              (3, (1, 3, 2)), (-2, (1, 2, 3))],
        ((3, 2), (3, 1, 2)): [(1, (1, 1))],
        ((3, 2), (2, 3, 2)): [(1, (2,))],
        ((2, 3), (2, 3, 1)): [(3, (2, 1)), (-2, (1, 2))],
        ((2, 3), (1, 2, 3)): [(-1, (1, 1, 1))],
        ((2, 3), (2, 3, 2)): [(1, (3,))],
        # length 3 -> 4
        ((1, 2, 1), (1, 3, 2, 1)): [(-1, (3, 3, 3))],
        ((1, 2, 1), (1, 2, 3, 1)): [(6, (1, 2, 3)), (-4, (1, 3, 2)),
                                    (-3, (2, 1, 3)), (2, (3, 2, 1))],
        ((1, 2, 1), (2, 3, 1, 2)): [(1, (2, 2, 3, 3)), (4, (2, 3, 2, 3)),
                                    (2, (3, 2, 3, 2)), (-6, (2, 3, 3, 2))],
        ((3, 2, 1), (1, 3, 2, 1)): [(-1, (1,))],
        ((3, 2, 1), (2, 3, 2, 1)): [(1, (2,))],
        ((2, 3, 1), (2, 3, 2, 1)): [(-1, (3, 3))],
        ((2, 3, 1), (1, 2, 3, 1)): [(1, (1, 1))],
        ((2, 3, 1), (2, 3, 1, 2)): [(4, (2, 1, 3)), (-2, (1, 2, 3)),
                                    (-2, (3, 2, 1)), (1, (1, 3, 2))],
        ((3, 1, 2), (1, 3, 2, 1)): [(2, (2, 3)), (-3, (3, 2))],
        ((3, 1, 2), (2, 3, 1, 2)): [(1, (2, 2, 2))],
        ((3, 1, 2), (1, 2, 3, 2)): [(2, (2, 1)), (-3, (1, 2))],
        ((1, 2, 3), (1, 2, 3, 1)): [(1, (2,))],
        ((1, 2, 3), (1, 2, 3, 2)): [(1, (3,))],
        ((2, 3, 2), (2, 3, 2, 1)): [(6, (3, 2, 1)), (-4, (1, 3, 2)),
                                    (-3, (2, 1, 3)), (2, (1, 2, 3))],
        ((2, 3, 2), (2, 3, 1, 2)): [(-1, (2, 2, 1, 1)), (-4, (2, 1, 2, 1)),
                                    (-2, (1, 2, 1, 2)), (6, (2, 1, 1, 2))],
        ((2, 3, 2), (1, 2, 3, 2)): [(1, (1, 1, 1))],
        # length 4 -> 5
        ((1, 3, 2, 1), (2, 3, 1, 2, 1)): [(1, (2, 2))],
        ((1, 3, 2, 1), (1, 2, 3, 2, 1)): [(1, (2, 1)), (-2, (1, 2))],
        ((2, 3, 2, 1), (2, 3, 1, 2, 1)): [(2, (2, 1)), (-1, (1, 2))],
        ((2, 3, 2, 1), (1, 2, 3, 2, 1)): [(-1, (1, 1))],
        ((1, 2, 3, 1), (1, 2, 3, 2, 1)): [(-1, (3, 3))],
        ((1, 2, 3, 1), (2, 1, 2, 3, 2)): [(1, (3, 2)), (-2, (2, 3))],
        ((2, 3, 1, 2), (2, 3, 1, 2, 1)): [(1, (3,))],
        ((2, 3, 1, 2), (2, 1, 2, 3, 2)): [(1, (1,))],
        ((1, 2, 3, 2), (1, 2, 3, 2, 1)): [(2, (3, 2)), (-1, (2, 3))],
        ((1, 2, 3, 2), (2, 1, 2, 3, 2)): [(1, (2, 2))],
        # length 5 -> 6
        ((2, 3, 1, 2, 1), (1, 2, 3, 1, 2, 1)): [(-1, (1,))],
        ((1, 2, 3, 2, 1), (1, 2, 3, 1, 2, 1)): [(-1, (2,))],
        ((2, 1, 2, 3, 2), (1, 2, 3, 1, 2, 1)): [(1, (3,))],
    },
}


class BGGData:
    def __init__(self, m, resolution):
        self.m = m
        self.arrows = {pair: LoweringPolynomial(terms).reversed_words()
                       for pair, terms in resolution.items()}
        max_len = m * (m - 1) // 2
        self.nodes = [[] for _ in range(max_len + 1)]
        seen = set()
        for (w, w2) in resolution:
            for word in (w, w2):
                if word not in seen:
                    seen.add(word)
                    self.nodes[len(word)].append(word)
        for layer in self.nodes:
            layer.sort()
        self._validate()

    def node_weight(self, word, lam=None):
        if lam is None:
            lam = tuple([0] * (self.m - 1))
        return rootdata.WeylElement.from_word(self.m, word).dot(lam)

    def _validate(self):
        m = self.m
        elems = {}
        for length, layer in enumerate(self.nodes):
            for word in layer:
                w = rootdata.WeylElement.from_word(m, word)
                assert w.length() == len(word) == length, "word %r is not reduced" % (word,)
                assert w.perm not in elems, "duplicate node %r" % (word,)
                elems[w.perm] = word
        assert len(elems) == len(rootdata.weyl_group(m)), "nodes miss Weyl elements"
        for (w, w2), poly in self.arrows.items():
            drop = poly.weight_drop(m)
            expect = rootdata.sub(self.node_weight(w), self.node_weight(w2))
            assert drop == expect, "arrow %r -> %r has wrong weight" % (w, w2)


@lru_cache(maxsize=None)
def bgg_data(m, lam=None):
    # the combinatorial data is lam-independent; weights come out of
    # node_weight(word, lam) at use sites
    if m not in _RESOLUTION:
        raise ValueError("resolution matrices are only available for m = 2, 3, 4")
    return BGGData(m, _RESOLUTION[m])


def cochain_window(m, lam=None):
    """All weights touched while running the complex: node weights plus
    every intermediate weight along each word of each arrow."""
    data = bgg_data(m)
    window = set()
    for layer in data.nodes:
        for word in layer:
            window.add(data.node_weight(word, lam))
    for (w, _), poly in data.arrows.items():
        mu = data.node_weight(w, lam)
        for _, word in poly.terms:
            cur = mu
            for i in word:
                cur = rootdata.sub(cur, rootdata.simple_root(m, i))
                window.add(cur)
    return window


def bgg_cochain(e, lam=None):
    """The complex of weight spaces of e with the lowering differentials.

    lam must be the zero weight (the hardcoded matrices are for the
    resolution of the trivial module); use multiplicity() for general lam.
    """
    m = e.m
    zero = tuple([0] * (m - 1))
    if lam is not None and lam != zero:
        raise ValueError("explicit matrices only cover the zero weight")
    data = bgg_data(m)
    node_wt = {}
    offsets = []
    dims = []
    for layer in data.nodes:
        off = {}
        total = 0
        for word in layer:
            node_wt[word] = data.node_weight(word)
            off[word] = total
            total += e.weight_dim(node_wt[word])
        offsets.append(off)
        dims.append(total)
    maps = []
    for t in range(len(data.nodes) - 1):
        ent = {}
        for w in data.nodes[t]:
            mu = node_wt[w]
            d = e.weight_dim(mu)
            if not d:
                continue
            for w2 in data.nodes[t + 1]:
                poly = data.arrows.get((w, w2))
                if poly is None:
                    continue
                for col in range(d):
                    tgt, vec = e.apply_lowering_polynomial(poly, mu, {col: Fraction(1)})
                    assert tgt == node_wt[w2]
                    for row, v in vec.items():
                        key = (offsets[t + 1][w2] + row, offsets[t][w] + col)
                        ent[key] = ent.get(key, 0) + v
        maps.append(SparseMatrix(dims[t + 1], dims[t], ent))
    return CochainComplex(dims, maps)


def multiplicity(e, lam=None):
    """Multiplicity profile of L_lam in the sheaf cohomology of e, one
    entry per cohomological degree.

    For lam = 0 this runs the full hardcoded complex.  For nonzero
    dominant lam the first map is f_i^(lam_i + 1) into the simple
    reflection terms; when weight spaces deeper in the order vanish this
    truncated complex already computes everything, otherwise the
    computation falls back to the Lie algebra cohomology route.
    """
    m = e.m
    zero = tuple([0] * (m - 1))
    if lam is None or lam == zero:
        return bgg_cochain(e).cohomology_dims()
    if not rootdata.is_dominant(lam):
        raise ValueError("lam must be dominant")
    data = bgg_data(m)
    deep = 0
    for layer in data.nodes[2:]:
        for word in layer:
            deep += e.weight_dim(data.node_weight(word, lam))
    if deep:
        from . import ce_oracle
        return ce_oracle.ce_cohomology(e, lam)
    dims = [e.weight_dim(lam)]
    off = {}
    total = 0
    for word in data.nodes[1]:
        off[word] = total
        total += e.weight_dim(data.node_weight(word, lam))
    dims.append(total)
    ent = {}
    for word in data.nodes[1]:
        i = word[0]
        power = lam[i - 1] + 1
        mu2 = data.node_weight(word, lam)
        for col in range(dims[0]):
            tgt, vec = e.apply_word((i,) * power, lam, {col: Fraction(1)})
            assert tgt == mu2
            for row, v in vec.items():
                ent[(off[word] + row, col)] = v
    maps = [SparseMatrix(dims[1], dims[0], ent)]
    length = m * (m - 1) // 2
    while len(dims) < length + 1:
        maps.append(SparseMatrix(0, dims[-1]))
        dims.append(0)
    return CochainComplex(dims, maps).cohomology_dims()


def diamond_entries(m):
    n = m * (m - 1) // 2
    return [(i, j) for j in range(2 * n + 1)
            for i in range(min(j, 2 * n - j) + 1) if (i + j) % 2 == 0]


def hodge_entry(m, i, j):
    """dim of the (-i-j)-graded part of H^i of the j-th exterior power of
    the tangent sheaf, as a multiplicity of the trivial module."""
    n = m * (m - 1) // 2
    if not (0 <= i <= min(j, 2 * n - j) and (i + j) % 2 == 0):
        raise ValueError("no diamond entry at (%d, %d)" % (i, j))
    if j > n:
        j = 2 * n - j  # symplectic pairing against the top power
    r = (i + j) // 2
    window = cochain_window(m)
    comp = springer.build_vk_component(m, j, r, window=window)
    cx = bgg_cochain(comp.module)
    log.info("entry (%d,%d): window %d weights, module dim %d, maps %s",
             i, j, len(window), comp.module.dim,
             ["%dx%d" % (mp.nrows, mp.ncols) for mp in cx.maps])
    return cx.cohomology_dims()[i]


def _entry_task(args):
    m, i, j = args
    return (i, j), hodge_entry(m, i, j)


def hodge_diamond(m, jobs=1):
    """All bigraded dimensions as a dict (i, j) -> h."""
    n = m * (m - 1) // 2
    entries = diamond_entries(m)
    direct = [(i, j) for (i, j) in entries if j <= n]
    out = {}
    if jobs and jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for key, h in ex.map(_entry_task, [(m, i, j) for (i, j) in direct]):
                out[key] = h
    else:
        for (i, j) in direct:
            out[(i, j)] = hodge_entry(m, i, j)
    for (i, j) in entries:
        if j > n:
            out[(i, j)] = out[(i, 2 * n - j)]
    return out


def diamond_total(diamond):
    return sum(diamond.values())
