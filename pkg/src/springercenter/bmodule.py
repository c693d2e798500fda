"""Weight-graded modules over the Borel of sl_m.

A BModule stores a basis split into weight spaces together with the
matrices of the simple lowering operators f_i = E_{i+1,i}.  That is all
the structure the resolution complexes and the Lie algebra cohomology
computations need: the Borel action is generated by the f_i (the torus
part is the grading itself), and non-simple root vectors act through
iterated commutators.

Modules built by the constructors here are "complete": a weight absent
from the table genuinely has a zero weight space.  The quotient bundles
constructed in springer.py can be windowed to a subset of weights, in
which case asking for a matrix into a non-materialized weight raises
MissingWeightSpace instead of silently returning zero.
"""

import itertools
from fractions import Fraction

from .exactla import SparseMatrix, RowReducer
from . import rootdata


class MissingWeightSpace(Exception):
    """A windowed module was asked for a weight it never materialized."""


def _diag_to_h(diag):
    """Express a traceless diagonal (d_1..d_m) in the h_i basis."""
    assert sum(diag) == 0
    out = {}
    acc = 0
    for i in range(len(diag) - 1):
        acc += diag[i]
        if acc:
            out[("H", i + 1)] = acc
    return out


def bracket(m, x, y):
    """Bracket of gl basis labels, expanded in the E/H basis of sl_m.

    Labels are ("E", a, b) with 0 <= a != b < m, or ("H", i) with
    h_i = E_{ii} - E_{i+1,i+1}, i in 1..m-1.
    """
    def expand(lbl):
        # to a dict of gl matrix units E_{ab} (a may equal b)
        if lbl[0] == "E":
            return {(lbl[1], lbl[2]): 1}
        i = lbl[1]
        return {(i - 1, i - 1): 1, (i, i): -1}

    acc = {}
    for (p, q), cx in expand(x).items():
        for (a, b), cy in expand(y).items():
            if q == a:
                acc[(p, b)] = acc.get((p, b), 0) + cx * cy
            if b == p:
                acc[(a, q)] = acc.get((a, q), 0) - cx * cy
    out = {}
    diag = [0] * m
    for (a, b), c in acc.items():
        if not c:
            continue
        if a == b:
            diag[a] += c
        else:
            out[("E", a, b)] = out.get(("E", a, b), 0) + c
    for lbl, c in _diag_to_h(diag).items():
        out[lbl] = out.get(lbl, 0) + c
    return {k: v for k, v in out.items() if v}


def gl_label_weight(m, lbl):
    if lbl[0] == "H":
        return tuple([0] * (m - 1))
    return rootdata.root_weight(m, lbl[1], lbl[2])


def f_label(m, i):
    return ("E", i, i - 1)


class BModule:
    def __init__(self, m, spaces, lower, complete=True, name="", known_weights=None):
        self.m = m
        self.name = name
        self.complete = complete
        self.spaces = {mu: list(lbls) for mu, lbls in spaces.items() if lbls}
        self.lower = lower
        self.index = {mu: {lbl: k for k, lbl in enumerate(lbls)}
                      for mu, lbls in self.spaces.items()}
        # weights a windowed module has materialized (possibly as zero)
        self.known_weights = set(known_weights) if known_weights else set(self.spaces)

    @property
    def dim(self):
        return sum(len(v) for v in self.spaces.values())

    def weights(self):
        return sorted(self.spaces)

    def weight_dim(self, mu):
        return len(self.spaces.get(mu, ()))

    def labels(self, mu):
        return self.spaces.get(mu, [])

    def character(self):
        return {mu: len(lbls) for mu, lbls in self.spaces.items()}

    def _require(self, mu):
        if self.complete:
            return
        if mu not in self.spaces and mu not in self.known_weights:
            raise MissingWeightSpace("weight %r not materialized in %s" % (mu, self.name))

    def lower_matrix(self, i, mu):
        """Matrix of f_i from the mu weight space to the mu - alpha_i one."""
        target = rootdata.sub(mu, rootdata.simple_root(self.m, i))
        self._require(mu)
        self._require(target)
        key = (i, mu)
        if key in self.lower:
            return self.lower[key]
        return SparseMatrix(self.weight_dim(target), self.weight_dim(mu))

    def apply_lower(self, i, mu, vec):
        target = rootdata.sub(mu, rootdata.simple_root(self.m, i))
        return target, self.lower_matrix(i, mu).apply(vec)

    def apply_word(self, word, mu, vec):
        """Apply the generators in the order listed: word[0] acts first.

        Cochain-side lowering words are stored in application order (the
        reverse of how the product is written on the free-module side)."""
        for i in word:
            mu, vec = self.apply_lower(i, mu, vec)
        return mu, vec

    def apply_lowering_polynomial(self, poly, mu, vec):
        """poly is a LoweringPolynomial (or its term list); all terms must
        share a weight drop."""
        terms = poly.terms if hasattr(poly, "terms") else poly
        drop = None
        total = {}
        out_mu = None
        for coeff, word in terms:
            w_mu, w_vec = mu, dict(vec)
            for i in word:
                w_mu, w_vec = self.apply_lower(i, w_mu, w_vec)
            if drop is None:
                drop = rootdata.sub(mu, w_mu)
                out_mu = w_mu
            elif rootdata.sub(mu, w_mu) != drop:
                raise ValueError("inhomogeneous lowering polynomial")
            for k, v in w_vec.items():
                total[k] = total.get(k, 0) + coeff * v
        return out_mu, {k: v for k, v in total.items() if v}

    def root_lower_matrix(self, root, mu):
        """Matrix of the negative root vector f_{(a,b)} = E_{b,a} on the mu
        weight space, via f_{(a,b)} = [f_b, f_{(a,b-1)}] (0-indexed root
        (a,b), 1-indexed simple generators)."""
        a, b = root
        if b == a + 1:
            return self.lower_matrix(b, mu)
        inner = self.root_lower_matrix((a, b - 1), mu)
        mid1 = rootdata.sub(mu, rootdata.root_weight(self.m, a, b - 1))
        first = self.lower_matrix(b, mu)
        mid2 = rootdata.sub(mu, rootdata.simple_root(self.m, b))
        # [f_b, f_{(a,b-1)}] = f_b f_{(a,b-1)} - f_{(a,b-1)} f_b
        t1 = self.lower_matrix(b, mid1).matmul(inner)
        t2 = self.root_lower_matrix((a, b - 1), mid2).matmul(first)
        out = dict(t1.entries)
        for k, v in t2.entries.items():
            out[k] = out.get(k, 0) - v
        return SparseMatrix(t1.nrows, t1.ncols, out)


def _module_from_action(m, labeled, act, name=""):
    """Build a complete BModule from elementwise generator action.

    labeled: list of (label, weight); act(i, label) -> dict label -> coeff.
    """
    spaces = {}
    for lbl, mu in labeled:
        spaces.setdefault(mu, []).append(lbl)
    index = {mu: {lbl: k for k, lbl in enumerate(lbls)} for mu, lbls in spaces.items()}
    weight_of = {lbl: mu for lbl, mu in labeled}
    lower = {}
    for mu, lbls in spaces.items():
        for i in range(1, m):
            target = rootdata.sub(mu, rootdata.simple_root(m, i))
            if target not in spaces:
                continue
            ent = {}
            for col, lbl in enumerate(lbls):
                for out_lbl, c in act(i, lbl).items():
                    assert weight_of[out_lbl] == target
                    ent[(index[target][out_lbl], col)] = c
            if ent:
                lower[(i, mu)] = SparseMatrix(len(spaces[target]), len(lbls), ent)
    return BModule(m, spaces, lower, complete=True, name=name)


def adjoint_g(m):
    labels = [("E", a, b) for a in range(m) for b in range(m) if a != b]
    labels += [("H", i) for i in range(1, m)]

    def act(i, lbl):
        return bracket(m, f_label(m, i), lbl)

    return _module_from_action(m, [(l, gl_label_weight(m, l)) for l in labels], act, name="g")


def sub_n(m):
    """Nilradical of the Borel: strictly lower triangular matrices."""
    labels = [("E", a, b) for a in range(m) for b in range(a)]

    def act(i, lbl):
        return bracket(m, f_label(m, i), lbl)

    return _module_from_action(m, [(l, gl_label_weight(m, l)) for l in labels], act, name="n")


def sub_b(m):
    labels = [("E", a, b) for a in range(m) for b in range(a)]
    labels += [("H", i) for i in range(1, m)]

    def act(i, lbl):
        return bracket(m, f_label(m, i), lbl)

    return _module_from_action(m, [(l, gl_label_weight(m, l)) for l in labels], act, name="b")


def quotient_u(m):
    """g/b, realized on strictly upper triangular matrix units."""
    labels = [("E", a, b) for a in range(m) for b in range(a + 1, m)]
    upper = set(labels)

    def act(i, lbl):
        return {k: v for k, v in bracket(m, f_label(m, i), lbl).items() if k in upper}

    return _module_from_action(m, [(l, gl_label_weight(m, l)) for l in labels], act, name="u")


def trivial_module(m):
    zero = tuple([0] * (m - 1))
    return BModule(m, {zero: ["1"]}, {}, name="trivial")


def _basis_enum(mod):
    """Fixed global order of a module's basis: (gid -> (mu, idx, label))."""
    out = []
    for mu in sorted(mod.spaces):
        for idx, lbl in enumerate(mod.spaces[mu]):
            out.append((mu, idx, lbl))
    return out


def _elementwise(mod):
    """act(i, gid) -> dict gid -> coeff, plus gid weight/label tables."""
    basis = _basis_enum(mod)
    gid_of = {}
    for g, (mu, idx, lbl) in enumerate(basis):
        gid_of[(mu, idx)] = g

    cols_cache = {}

    def act(i, g):
        mu, idx, _ = basis[g]
        key = (i, mu)
        if key not in cols_cache:
            mat = mod.lower_matrix(i, mu)
            target = rootdata.sub(mu, rootdata.simple_root(mod.m, i))
            cols = {}
            for (r, c), v in mat.entries.items():
                cols.setdefault(c, {})[gid_of[(target, r)]] = v
            cols_cache[key] = cols
        return cols_cache[key].get(idx, {})

    return basis, act


def tensor(a, b, name=None):
    basis_a, act_a = _elementwise(a)
    basis_b, act_b = _elementwise(b)
    labeled = []
    for ga, (mua, _, la) in enumerate(basis_a):
        for gb, (mub, _, lb) in enumerate(basis_b):
            labeled.append(((ga, gb), rootdata.add(mua, mub)))

    label_a = {g: basis_a[g][2] for g in range(len(basis_a))}
    label_b = {g: basis_b[g][2] for g in range(len(basis_b))}

    def act(i, lbl):
        ga, gb = lbl
        out = {}
        for g2, c in act_a(i, ga).items():
            out[(g2, gb)] = out.get((g2, gb), 0) + c
        for g2, c in act_b(i, gb).items():
            out[(ga, g2)] = out.get((ga, g2), 0) + c
        return out

    mod = _module_from_action(a.m, labeled, act,
                              name=name or "(%s)x(%s)" % (a.name, b.name))
    mod.component_labels = (label_a, label_b)
    return mod


def _sorted_with_sign(tup):
    """Sort a tuple of distinct ints, tracking the permutation sign."""
    lst = list(tup)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    return tuple(lst), sign


def wedge(a, k, name=None):
    basis_a, act_a = _elementwise(a)
    n = len(basis_a)
    labeled = []
    for combo in itertools.combinations(range(n), k):
        mu = tuple([0] * (a.m - 1))
        for g in combo:
            mu = rootdata.add(mu, basis_a[g][0])
        labeled.append((combo, mu))

    def act(i, combo):
        out = {}
        for t, g in enumerate(combo):
            for g2, c in act_a(i, g).items():
                if g2 in combo:
                    continue
                new = combo[:t] + (g2,) + combo[t + 1:]
                new, sign = _sorted_with_sign(new)
                out[new] = out.get(new, 0) + sign * c
        return {kk: v for kk, v in out.items() if v}

    return _module_from_action(a.m, labeled, act, name=name or "wedge^%d(%s)" % (k, a.name))


def sym(a, p, name=None):
    basis_a, act_a = _elementwise(a)
    n = len(basis_a)
    labeled = []
    for combo in itertools.combinations_with_replacement(range(n), p):
        mu = tuple([0] * (a.m - 1))
        for g in combo:
            mu = rootdata.add(mu, basis_a[g][0])
        labeled.append((combo, mu))

    def act(i, combo):
        out = {}
        for t, g in enumerate(combo):
            if t > 0 and combo[t - 1] == g:
                continue  # act once per distinct slot value
            mult = combo.count(g)
            for g2, c in act_a(i, g).items():
                new = tuple(sorted(combo[:t] + (g2,) + combo[t + 1:]))
                out[new] = out.get(new, 0) + mult * c
        return {kk: v for kk, v in out.items() if v}

    return _module_from_action(a.m, labeled, act, name=name or "sym^%d(%s)" % (p, a.name))


def direct_sum(a, b, name=None):
    basis_a, act_a = _elementwise(a)
    basis_b, act_b = _elementwise(b)
    labeled = [(("L", g), basis_a[g][0]) for g in range(len(basis_a))]
    labeled += [(("R", g), basis_b[g][0]) for g in range(len(basis_b))]

    def act(i, lbl):
        side, g = lbl
        inner = act_a(i, g) if side == "L" else act_b(i, g)
        return {(side, g2): c for g2, c in inner.items()}

    return _module_from_action(a.m, labeled, act,
                               name=name or "(%s)+(%s)" % (a.name, b.name))


def dual(a, name=None):
    spaces = {}
    for mu, lbls in a.spaces.items():
        neg = tuple(-c for c in mu)
        spaces[neg] = [("dual", l) for l in lbls]
    lower = {}
    for mu in a.spaces:
        for i in range(1, a.m):
            # f_i on the dual of E[mu - alpha_i] is minus the transpose of
            # f_i : E[mu] -> E[mu - alpha_i]
            src = rootdata.sub(mu, rootdata.simple_root(a.m, i))
            if src not in a.spaces:
                continue
            mat = a.lower_matrix(i, mu)
            ent = {(c, r): -v for (r, c), v in mat.entries.items()}
            if ent:
                neg_src = tuple(-c for c in src)
                lower[(i, neg_src)] = SparseMatrix(mat.ncols, mat.nrows, ent)
    return BModule(a.m, spaces, lower, name=name or "dual(%s)" % a.name)


class NotSubmodule(Exception):
    pass


def quotient(a, vectors, name=None, check=True):
    """Quotient of a complete module by the span of the given vectors.

    vectors: list of (mu, dict index -> coeff) in weight-space coordinates.
    The span must be f_i-stable; with check=True this is verified.
    """
    reducers = {}
    for mu, vec in vectors:
        reducers.setdefault(mu, RowReducer()).add(vec)
    spaces = {}
    colmap = {}
    for mu, lbls in a.spaces.items():
        red = reducers.get(mu)
        pivots = set(red.echelon) if red else set()
        keep = [c for c in range(len(lbls)) if c not in pivots]
        if keep:
            spaces[mu] = [lbls[c] for c in keep]
            colmap[mu] = {c: k for k, c in enumerate(keep)}

    def project(mu, vec):
        red = reducers.get(mu)
        res = red.reduce(vec) if red else vec
        if not res:
            return {}
        return {colmap[mu][c]: v for c, v in res.items() if v}

    if check:
        for mu, red in reducers.items():
            for i in range(1, a.m):
                target = rootdata.sub(mu, rootdata.simple_root(a.m, i))
                mat = a.lower_matrix(i, mu)
                tred = reducers.get(target)
                for row in red.echelon.values():
                    img = mat.apply(row)
                    if img and (tred is None or tred.reduce(img)):
                        raise NotSubmodule("span not stable under f_%d at %r" % (i, mu))
    lower = {}
    for mu in spaces:
        srccols = sorted(colmap[mu])
        for i in range(1, a.m):
            target = rootdata.sub(mu, rootdata.simple_root(a.m, i))
            mat = a.lower_matrix(i, mu)
            if target not in spaces:
                continue
            ent = {}
            for newcol, c in enumerate(srccols):
                img = mat.apply({c: Fraction(1)})
                for r, v in project(target, img).items():
                    ent[(r, newcol)] = v
            if ent:
                lower[(i, mu)] = SparseMatrix(len(spaces[target]), len(srccols), ent)
    return BModule(a.m, spaces, lower, name=name or "quotient(%s)" % a.name)


def natural_module(m):
    labels = [("v", a) for a in range(m)]

    def wt(lbl):
        v = [0] * m
        v[lbl[1]] = 1
        return rootdata.from_eps(v)

    def act(i, lbl):
        # E_{i+1,i} v_a = delta_{a,i-1} v_i (0-indexed basis positions)
        if lbl[1] == i - 1:
            return {("v", i): 1}
        return {}

    return _module_from_action(m, [(l, wt(l)) for l in labels], act, name="natural")


def irreducible_module(m, lam):
    """The irreducible L_lam, cut out of a product of fundamental carriers
    by lowering from the highest weight vector."""
    if not rootdata.is_dominant(lam):
        raise ValueError("highest weight must be dominant")
    nat = natural_module(m)
    carrier = None
    for i, mult in enumerate(lam, start=1):
        for _ in range(mult):
            piece = wedge(nat, i)
            carrier = piece if carrier is None else tensor(carrier, piece)
    if carrier is None:
        return trivial_module(m)

    # The weight-lam space of the carrier is a line: lam is the sum of the
    # factor top weights and every factor weight is dominated by its top,
    # so each factor must sit at its top.  Lowering from that line spans L_lam.
    hw_weight = lam
    assert len(carrier.spaces[hw_weight]) == 1, "carrier top weight space is not a line"

    reducers = {}
    sub_rows = {}
    queue = [(hw_weight, {0: Fraction(1)})]
    reducers[hw_weight] = RowReducer()
    reducers[hw_weight].add(queue[0][1])
    sub_rows[hw_weight] = [dict(queue[0][1])]
    while queue:
        mu, vec = queue.pop()
        for i in range(1, m):
            tgt, img = carrier.apply_lower(i, mu, vec)
            if not img:
                continue
            red = reducers.setdefault(tgt, RowReducer())
            before = red.rank
            # remember the new basis row in un-normalized ambient coords is
            # recoverable from the reducer itself
            if red.add(img):
                assert red.rank == before + 1
                queue.append((tgt, img))

    spaces = {}
    for mu, red in reducers.items():
        spaces[mu] = [("v", mu, k) for k in range(red.rank)]
    pivots = {mu: sorted(red.echelon) for mu, red in reducers.items()}
    rows = {mu: [red.echelon[p] for p in pivots[mu]] for mu, red in reducers.items()}

    lower = {}
    for mu in spaces:
        for i in range(1, m):
            target = rootdata.sub(mu, rootdata.simple_root(m, i))
            if target not in spaces:
                continue
            mat = carrier.lower_matrix(i, mu)
            ent = {}
            for col, row in enumerate(rows[mu]):
                img = mat.apply(row)
                # img lies in the span; in RREF coordinates its basis
                # coefficients are just its values at the pivot columns
                for r, p in enumerate(pivots[target]):
                    if p in img:
                        ent[(r, col)] = img[p]
            if ent:
                lower[(i, mu)] = SparseMatrix(len(spaces[target]), len(spaces[mu]), ent)
    mod = BModule(m, spaces, lower, name="L%r" % (lam,))
    assert mod.dim == rootdata.weyl_dim(lam), "character has wrong dimension"
    return mod


def _wedge_top_weight(m, i):
    v = [0] * m
    for a in range(i):
        v[a] = 1
    return rootdata.from_eps(v)


def check_serre(mod):
    """Verify the Serre relations for the stored lowering matrices.

    For |i-j| == 1: f_i^2 f_j - 2 f_i f_j f_i + f_j f_i^2 = 0; for
    |i-j| >= 2 the operators commute.  Returns the number of weight
    spaces checked; raises AssertionError on failure.
    """
    m = mod.m
    checked = 0

    def word_matrix(word, mu):
        cur = mu
        mats = []
        for i in reversed(word):
            mats.append(mod.lower_matrix(i, cur))
            cur = rootdata.sub(cur, rootdata.simple_root(m, i))
        out = mats[0]
        for mt in mats[1:]:
            out = mt.matmul(out)
        return out

    for mu in mod.spaces:
        for i in range(1, m):
            for j in range(1, m):
                if i == j:
                    continue
                if abs(i - j) >= 2:
                    combo = [(1, (i, j)), (-1, (j, i))]
                else:
                    combo = [(1, (i, i, j)), (-2, (i, j, i)), (1, (j, i, i))]
                acc = {}
                shape = None
                for coeff, word in combo:
                    mt = word_matrix(word, mu)
                    shape = (mt.nrows, mt.ncols)
                    for k, v in mt.entries.items():
                        acc[k] = acc.get(k, 0) + coeff * v
                assert all(v == 0 for v in acc.values()), \
                    "Serre relation (%d,%d) fails at weight %r" % (i, j, mu)
                checked += 1
    return checked
