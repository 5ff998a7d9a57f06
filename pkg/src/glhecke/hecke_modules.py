"""Finite-dimensional graded Hecke algebra modules as explicit matrices.

A module is the list of generator matrices for s_1..s_{m-1} and y_1..y_m over
Q.  Everything downstream is exact linear algebra: parabolic induction on the
minimal-coset basis, weight (generalized joint eigenvalue) decompositions,
intertwiner spaces, simple quotients, composition series, invariant forms,
Bernstein-Zelevinsky derivatives.

Induction bookkeeping: modules built by induce() carry a basis tree recording
how each basis vector arises from a seed vector by one generator application.
Intertwiner computations exploit the tree (a hom is determined by the seed
images), which keeps the large sweeps exact and fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import caps, hecke_algebra as ha
from .exact_linalg import (
    Matrix,
    RowSpace,
    Subspace,
    determinant,
    generalized_eigenspace,
    nullspace,
    rational_roots,
    solve_linear,
)
from .multisegment import Multisegment, Segment, multisegments_with_content, normalize_order
from .rational import ONE, ZERO, Rational, rat
from .symgroup import (
    Permutation,
    cycle_class_size,
    hook_dimension,
    min_coset_reps,
    partitions,
    seminormal_rep,
    sm_character,
)


class ModuleError(RuntimeError):
    pass


@dataclass(frozen=True)
class BasisTree:
    """Seed/link structure over the basis: child = gen applied to parent.

    Links are exact: applying the generator to the parent basis vector gives
    the child basis vector with coefficient one and nothing else.  Seeds are
    true joint eigenvectors of the y's whenever `eigen_seeds` is set.
    """

    seeds: tuple
    links: dict  # child index -> (("s", i) or ("y", j), parent index)
    eigen_seeds: bool


class HeckeModule:
    """An H_m-module: dim x dim matrices for each generator."""

    def __init__(self, m, dim, s_mats, y_mats, label=None, tree=None, multisegment=None,
                 factors=None):
        if len(s_mats) != max(m - 1, 0) or len(y_mats) != m:
            raise ValueError("generator count mismatch for rank %d" % m)
        for mat in list(s_mats) + list(y_mats):
            if mat.rows != dim or mat.cols != dim:
                raise ValueError("generator matrices must be %d x %d" % (dim, dim))
        self.m = m
        self.dim = dim
        self.s_mats = list(s_mats)
        self.y_mats = list(y_mats)
        self.label = label
        self.tree = tree
        self.multisegment = multisegment  # provenance (normalized multiset)
        self.factors = factors            # provenance (Steinberg factor order)
        self._perm_cache = {}

    def s(self, i: int) -> Matrix:
        return self.s_mats[i - 1]

    def y(self, j: int) -> Matrix:
        return self.y_mats[j - 1]

    def apply_gen(self, gen, vec):
        kind, idx = gen
        mat = self.s(idx) if kind == "s" else self.y(idx)
        return mat.mat_vec(vec)

    def gens(self):
        out = [("s", i) for i in range(1, self.m)]
        out += [("y", j) for j in range(1, self.m + 1)]
        return out

    def perm_matrix(self, w: Permutation) -> Matrix:
        key = w.one_line
        if key not in self._perm_cache:
            mat = Matrix.identity(self.dim)
            for i in w.reduced_word():
                mat = mat * self.s(i)
            self._perm_cache[key] = mat
        return self._perm_cache[key]

    def element_matrix(self, elt: ha.HeckeElement) -> Matrix:
        if elt.m != self.m:
            raise ValueError("rank mismatch")
        total = Matrix.zeros(self.dim, self.dim)
        for (w, alpha), c in elt.terms.items():
            mat = self.perm_matrix(Permutation(w))
            for j, e in enumerate(alpha):
                for _ in range(e):
                    mat = mat * self.y(j + 1)
            total = total + mat.scale(c)
        return total

    def relabel(self, label) -> "HeckeModule":
        out = HeckeModule(self.m, self.dim, self.s_mats, self.y_mats, label, self.tree,
                          self.multisegment, self.factors)
        out._perm_cache = self._perm_cache
        return out

    def __repr__(self):  # pragma: no cover
        return "HeckeModule(m=%d, dim=%d, label=%r)" % (self.m, self.dim, self.label)

    def to_json(self):
        from .rational import rat_str

        return {
            "m": self.m,
            "dim": self.dim,
            "s": [[[rat_str(x) for x in mat.row(i)] for i in range(mat.rows)] for mat in self.s_mats],
            "y": [[[rat_str(x) for x in mat.row(i)] for i in range(mat.rows)] for mat in self.y_mats],
            "label": self.label,
        }

    @staticmethod
    def from_json(d) -> "HeckeModule":
        s_mats = [Matrix.from_rows(rows) for rows in d["s"]]
        y_mats = [Matrix.from_rows(rows) for rows in d["y"]]
        return HeckeModule(d["m"], d["dim"], s_mats, y_mats, d.get("label"))


# -- elementary modules --------------------------------------------------------


def unit_module() -> HeckeModule:
    """The rank-0 unit module (H_0 = Q acting on a line)."""
    tree = BasisTree(seeds=(0,), links={}, eigen_seeds=True)
    return HeckeModule(0, 1, [], [], label="unit", tree=tree, multisegment=Multisegment([]),
                       factors=())


def character_module(c) -> HeckeModule:
    """The rank-1 character y -> c."""
    c = rat(c)
    tree = BasisTree(seeds=(0,), links={}, eigen_seeds=True)
    return HeckeModule(
        1, 1, [], [Matrix.from_rows([[c]])],
        label="psi_%s" % (c,),
        tree=tree,
        multisegment=Multisegment([Segment.point(c)]),
        factors=(Segment.point(c),),
    )


def steinberg(seg: Segment) -> HeckeModule:
    """St([a,b]): one-dimensional, every s_i -> -1, y_j -> a + j - 1."""
    if seg.is_empty:
        raise ValueError("Steinberg module of an empty segment")
    k = seg.length
    caps.check_rank(k)
    minus = Matrix.from_rows([[-1]])
    s_mats = [minus for _ in range(k - 1)]
    y_mats = [Matrix.from_rows([[seg.a + j]]) for j in range(k)]
    tree = BasisTree(seeds=(0,), links={}, eigen_seeds=True)
    return HeckeModule(k, 1, s_mats, y_mats, label="St(%r)" % (seg,), tree=tree,
                       multisegment=Multisegment([seg]), factors=(seg,))


# -- parabolic induction --------------------------------------------------------


def induce(p1: HeckeModule, p2: HeckeModule) -> HeckeModule:
    """The induced module H_m (x)_{H_m1 (x) H_m2} (p1 boxtimes p2).

    Basis: u (x) (v_a (x) v_b) over minimal left-coset representatives u of
    S_m/(S_m1 x S_m2); the generator action multiplies into u, decomposes
    parabolcially, and routes the subalgebra part through the factor matrices.
    """
    m1, m2 = p1.m, p2.m
    m = m1 + m2
    d1, d2 = p1.dim, p2.dim
    if m1 == 0 or m2 == 0:
        return _tensor_with_trivial_rank(p1, p2)
    caps.check_rank(m)
    reps = min_coset_reps((m1, m2))
    dim = len(reps) * d1 * d2
    caps.check_dim(dim)
    assert len(reps) == factorial(m) // (factorial(m1) * factorial(m2))

    rep_index = {w.one_line: ri for ri, w in enumerate(reps)}

    def flat(ri, a, b):
        return (ri * d1 + a) * d2 + b

    # precompute the parabolic decomposition of g*u for every generator and rep
    gen_elts = [("s", i, ha.HeckeElement.s_gen(m, i)) for i in range(1, m)]
    gen_elts += [("y", j, ha.HeckeElement.y_gen(m, j)) for j in range(1, m + 1)]

    mats = {}
    for kind, idx, gelt in gen_elts:
        cols = [[ZERO] * dim for _ in range(dim)]  # cols[src] = image vector
        for ri, u in enumerate(reps):
            prod = ha.multiply(gelt, ha.HeckeElement.from_permutation(u))
            decomp = ha.parabolic_decompose(prod, (m1, m2))
            for u2, h in decomp.items():
                ri2 = rep_index[u2]
                for (sigma, alpha), coeff in h.terms.items():
                    w1, a1, w2, a2 = ha.split_subalgebra_term(sigma, alpha, m1)
                    # factor actions: y-monomial first, then the group element
                    for a in range(d1):
                        v1 = _apply_factor_term(p1, w1, a1, a)
                        for b in range(d2):
                            v2 = _apply_factor_term(p2, w2, a2, b)
                            src = flat(ri, a, b)
                            col = cols[src]
                            for i1, c1 in enumerate(v1):
                                if not c1:
                                    continue
                                cc = coeff * c1
                                base = flat(ri2, i1, 0)
                                for i2, c2 in enumerate(v2):
                                    if c2:
                                        col[base + i2] += cc * c2
        entries = [ZERO] * (dim * dim)
        for src in range(dim):
            col = cols[src]
            for row in range(dim):
                if col[row]:
                    entries[row * dim + src] = col[row]
        mats[(kind, idx)] = Matrix(dim, dim, entries)

    s_mats = [mats[("s", i)] for i in range(1, m)]
    y_mats = [mats[("y", j)] for j in range(1, m + 1)]

    tree = _induced_tree(p1, p2, reps, d1, d2, flat)
    label = "(%s x %s)" % (p1.label, p2.label)
    ms = None
    if p1.multisegment is not None and p2.multisegment is not None:
        ms = Multisegment(tuple(p1.multisegment) + tuple(p2.multisegment))
    facs = None
    if p1.factors is not None and p2.factors is not None:
        facs = p1.factors + p2.factors
    out = HeckeModule(m, dim, s_mats, y_mats, label=label, tree=tree, multisegment=ms,
                      factors=facs)
    return out


def _apply_factor_term(p: HeckeModule, w: tuple, alpha: tuple, basis_idx: int):
    """Apply the subalgebra term (w, y^alpha) to a factor basis vector."""
    v = [ZERO] * p.dim
    v[basis_idx] = ONE
    for j, e in enumerate(alpha):
        for _ in range(e):
            v = p.y(j + 1).mat_vec(v)
    wp = Permutation(w)
    if wp.length():
        v = p.perm_matrix(wp).mat_vec(v)
    return v


def _tensor_with_trivial_rank(p1: HeckeModule, p2: HeckeModule) -> HeckeModule:
    """induce() when one factor has rank 0: a multiplicity-space tensor."""
    if p1.m == 0 and p2.m == 0:
        big, small, scale_first = p1, p2, True
    elif p1.m == 0:
        big, small, scale_first = p2, p1, False
    else:
        big, small, scale_first = p1, p2, True
    dim = p1.dim * p2.dim
    caps.check_dim(dim)
    k = small.dim

    def blow(mat: Matrix) -> Matrix:
        out = [ZERO] * (dim * dim)
        for i, j, v in mat.nonzeros():
            for t in range(k):
                if scale_first and big is p1:
                    r, c = i * k + t, j * k + t
                else:
                    r, c = t * big.dim + i, t * big.dim + j
                out[r * dim + c] = v
        return Matrix(dim, dim, out)

    s_mats = [blow(mat) for mat in big.s_mats]
    y_mats = [blow(mat) for mat in big.y_mats]
    ms = None
    if p1.multisegment is not None and p2.multisegment is not None:
        ms = Multisegment(tuple(p1.multisegment) + tuple(p2.multisegment))
    facs = None
    if p1.factors is not None and p2.factors is not None:
        facs = p1.factors + p2.factors
    return HeckeModule(big.m, dim, s_mats, y_mats,
                       label="(%s x %s)" % (p1.label, p2.label), multisegment=ms,
                       factors=facs)


def _induced_tree(p1, p2, reps, d1, d2, flat):
    """Exact basis tree for the induced module, when both factors carry one."""
    if p1.tree is None or p2.tree is None:
        return None
    if not (p1.tree.eigen_seeds and p2.tree.eigen_seeds):
        return None
    m1 = p1.m
    links = {}
    seeds = []
    e_index = next(ri for ri, u in enumerate(reps) if u.length() == 0)
    for ri, u in enumerate(reps):
        for a in range(d1):
            for b in range(d2):
                idx = flat(ri, a, b)
                if u.length() > 0:
                    i = _coset_dropping_descent(u, m1)
                    parent_u = (Permutation.transposition(u.m, i) * u).one_line
                    parent_ri = next(r for r, w in enumerate(reps) if w.one_line == parent_u)
                    links[idx] = (("s", i), flat(parent_ri, a, b))
                elif a in p1.tree.links:
                    gen, pa = p1.tree.links[a]
                    links[idx] = (gen, flat(e_index, pa, b))
                elif b in p2.tree.links:
                    (kind, gi), pb = p2.tree.links[b]
                    shifted = ("s", gi + m1) if kind == "s" else ("y", gi + m1)
                    links[idx] = (shifted, flat(e_index, a, pb))
                else:
                    seeds.append(idx)
    return BasisTree(seeds=tuple(seeds), links=links, eigen_seeds=True)


def _coset_dropping_descent(u: Permutation, m1: int) -> int:
    """A left descent i of u with s_i u in a shorter, different coset."""
    inv = u.inverse()
    for i in range(1, u.m):
        if inv(i) > inv(i + 1):  # left descent
            # same coset iff positions of values i, i+1 sit in the same block
            p1pos = inv(i) <= m1
            p2pos = inv(i + 1) <= m1
            if p1pos != p2pos:
                return i
    raise AssertionError("no coset-dropping descent on a nontrivial minimal rep")


def standard_module(ms: Multisegment) -> HeckeModule:
    """lambda(ms): the product of Steinbergs in normalized order."""
    segs = normalize_order(ms)
    return product_of_steinbergs(segs, multisegment=ms)


def product_of_steinbergs(segs, multisegment=None) -> HeckeModule:
    """Left-fold induced product of St(seg) in the given order."""
    acc = None
    for seg in segs:
        stn = steinberg(seg)
        acc = stn if acc is None else induce(acc, stn)
    if acc is None:
        acc = unit_module()
    if multisegment is not None:
        acc = HeckeModule(acc.m, acc.dim, acc.s_mats, acc.y_mats,
                          label="lambda(%r)" % (multisegment,), tree=acc.tree,
                          multisegment=multisegment, factors=acc.factors)
    return acc


# -- relations -----------------------------------------------------------------


def check_relations(mod: HeckeModule, collect=False):
    """Exact verification of the six defining relation families.

    Returns True/False; with collect=True returns the list of violations.
    """
    bad = []
    m = mod.m
    I = Matrix.identity(mod.dim)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if mod.y(i) * mod.y(j) != mod.y(j) * mod.y(i):
                bad.append("y%d y%d != y%d y%d" % (i, j, j, i))
    for i in range(1, m):
        if mod.s(i) * mod.s(i) != I:
            bad.append("s%d^2 != 1" % i)
    for i in range(1, m):
        for j in range(i + 2, m):
            if mod.s(i) * mod.s(j) != mod.s(j) * mod.s(i):
                bad.append("s%d s%d != s%d s%d" % (i, j, j, i))
    for i in range(1, m - 1):
        if mod.s(i) * mod.s(i + 1) * mod.s(i) != mod.s(i + 1) * mod.s(i) * mod.s(i + 1):
            bad.append("braid s%d s%d" % (i, i + 1))
    for i in range(1, m):
        if mod.s(i) * mod.y(i) - mod.y(i + 1) * mod.s(i) != I:
            bad.append("s%d y%d - y%d s%d != 1" % (i, i, i + 1, i))
        for j in range(1, m + 1):
            if j in (i, i + 1):
                continue
            if mod.s(i) * mod.y(j) != mod.y(j) * mod.s(i):
                bad.append("s%d y%d != y%d s%d" % (i, j, j, i))
    if collect:
        return bad
    return not bad


# -- weights -------------------------------------------------------------------


def _min_poly(mat: Matrix):
    """Minimal polynomial coefficients (monic) via Krylov spans."""
    n = mat.rows
    poly = [ONE]  # the constant polynomial 1
    covered = RowSpace(n)
    for start in range(n):
        e = [ZERO] * n
        e[start] = ONE
        if covered.contains(e):
            continue
        # local minimal polynomial on the Krylov space of e
        kry = RowSpace(n)
        vecs = []
        v = e
        while kry.add(v):
            vecs.append(v)
            covered.add(v)
            v = mat.mat_vec(v)
        # v is dependent: solve for coefficients
        sub = Subspace(vecs)
        coords = sub.express(v)
        local = [-c for c in coords] + [ONE]
        poly = _poly_lcm(poly, local)
        if len(poly) - 1 == n:
            break
    return poly


def _poly_divmod(a, b):
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    q = [ZERO] * max(da - db + 1, 0)
    while len(a) - 1 >= db and any(a):
        while a and not a[-1]:
            a.pop()
        if len(a) - 1 < db:
            break
        f = a[-1] / b[-1]
        q[len(a) - 1 - db] = f
        for k in range(db + 1):
            a[len(a) - 1 - db + k] -= f * b[k]
        a.pop()
    while a and not a[-1]:
        a.pop()
    return q, a


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while b and any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


def _poly_mul(a, b):
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_lcm(a, b):
    g = _poly_gcd(a, b)
    q, r = _poly_divmod(_poly_mul(a, b), g)
    assert not any(r)
    return q


class NonRationalWeight(ModuleError):
    pass


def weights_with_spaces(mod: HeckeModule):
    """Generalized joint eigenspace decomposition of the commuting y's.

    Returns a list of (weight tuple, list of basis vectors); the dimensions
    sum to dim.  Raises NonRationalWeight when an eigenvalue is irrational
    (cannot occur for modules this engine builds; guarded anyway).
    """
    if mod.dim == 0:
        return []
    spaces = [([_unit_vec(mod.dim, i) for i in range(mod.dim)], ())]
    for j in range(1, mod.m + 1):
        nxt = []
        for vecs, prefix in spaces:
            sub = Subspace(vecs)
            images = [mod.y(j).mat_vec(v) for v in vecs]
            small = Matrix.from_rows([sub.express(img) for img in images]).transpose()
            roots, split = rational_roots(_min_poly(small))
            if not split:
                raise NonRationalWeight("non-rational weight in y_%d" % j)
            seen = []
            total = 0
            for lam in sorted(set(roots)):
                basis = generalized_eigenspace(small, lam)
                if not basis:
                    continue
                lifted = [_combine(vecs, coords) for coords in basis]
                nxt.append((lifted, prefix + (lam,)))
                total += len(basis)
                seen.append(lam)
            if total != len(vecs):
                raise NonRationalWeight("generalized eigenspaces do not fill")
        spaces = nxt
    return [(prefix, vecs) for vecs, prefix in spaces]


def weights(mod: HeckeModule):
    """Multiset of (weight vector, multiplicity), sorted."""
    out = {}
    for chi, vecs in weights_with_spaces(mod):
        out[chi] = out.get(chi, 0) + len(vecs)
    return sorted(out.items())


def _unit_vec(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


def _combine(vecs, coords):
    out = [ZERO] * len(vecs[0])
    for c, v in zip(coords, vecs):
        if c:
            for t, x in enumerate(v):
                if x:
                    out[t] += c * x
    return out


def true_eigenspace(mod: HeckeModule, chi) -> list:
    """Basis of the simultaneous true eigenspace for the weight chi."""
    chi = [rat(x) for x in chi]
    vecs = [_unit_vec(mod.dim, i) for i in range(mod.dim)]
    for j in range(1, mod.m + 1):
        if not vecs:
            return []
        rows = []
        for v in vecs:
            img = mod.y(j).mat_vec(v)
            rows.append([a - chi[j - 1] * b for a, b in zip(img, v)])
        ker = nullspace(Matrix.from_rows(rows).transpose())
        vecs = [_combine(vecs, coords) for coords in ker]
    return vecs


def _sparse_kernel(rows_nonzeros, ncols):
    """Nullspace of a sparse matrix given as a list of {col: value} rows."""
    rows = [dict(r) for r in rows_nonzeros if r]
    pivots = {}
    reduced = []
    for r in rows:
        while True:
            hit = None
            for c in r:
                if c in pivots:
                    hit = c
                    break
            if hit is None:
                break
            f = r[hit]
            prow = reduced[pivots[hit]]
            for c2, v2 in prow.items():
                nv = r.get(c2, ZERO) - f * v2
                if nv:
                    r[c2] = nv
                else:
                    r.pop(c2, None)
        if r:
            p = min(r)
            inv = ONE / r[p]
            if inv != ONE:
                r = {c: v * inv for c, v in r.items()}
            pivots[p] = len(reduced)
            reduced.append(r)
    basis = []
    pivot_cols = set(pivots)
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        # back-substitute in increasing pivot order (rows are reduced forward
        # only, so solve from the largest pivot down)
        for p in sorted(pivots, reverse=True):
            row = reduced[pivots[p]]
            s = ZERO
            for c, val in row.items():
                if c != p and v[c]:
                    s += val * v[c]
            if s:
                v[p] = -s
        basis.append(v)
    return basis


def true_eigenspace_sparse(mod: HeckeModule, chi) -> list:
    """true_eigenspace via sparse elimination; useful at large dimensions."""
    chi = [rat(x) for x in chi]
    dim = mod.dim
    vecs = None
    for j in range(1, mod.m + 1):
        if vecs is None:
            rows = [dict() for _ in range(dim)]
            for r, c, v in mod.y(j).nonzeros():
                rows[r][c] = v
            for t in range(dim):
                d = rows[t].get(t, ZERO) - chi[j - 1]
                if d:
                    rows[t][t] = d
                else:
                    rows[t].pop(t, None)
            vecs = _sparse_kernel(rows, dim)
        else:
            if not vecs:
                return []
            rows = []
            for v in vecs:
                img = mod.y(j).mat_vec(v)
                rows.append([a - chi[j - 1] * b for a, b in zip(img, v)])
            ker = nullspace(Matrix.from_rows(rows).transpose())
            vecs = [_combine(vecs, coords) for coords in ker]
    return vecs if vecs is not None else []


# -- S_m structure ---------------------------------------------------------------


def cycle_type_representative(m: int, ct) -> Permutation:
    one = list(range(1, m + 1))
    pos = 0
    for k in ct:
        for t in range(k):
            one[pos + t] = pos + 1 + (t + 1) % k
        pos += k
    return Permutation(tuple(one))


def sm_character_decompose(mod: HeckeModule) -> dict:
    """Multiplicity of each S_m irreducible in the restriction to C[S_m]."""
    m = mod.m
    if m == 0:
        return {(): mod.dim} if mod.dim else {}
    traces = {}
    for ct in partitions(m):
        traces[ct] = mod.perm_matrix(cycle_type_representative(m, ct)).trace()
    out = {}
    fact = factorial(m)
    for p in partitions(m):
        tot = sum(cycle_class_size(ct) * sm_character(p, ct) * traces[ct] for ct in partitions(m))
        q = tot / fact
        if q.denominator != 1 or q < 0:
            raise ModuleError("non-integral S_m multiplicity %s for %r" % (q, p))
        if q:
            out[p] = int(q)
    return out


# -- intertwiners -----------------------------------------------------------------


class _Tree:
    """Uniform view of a basis tree for hom computations."""

    def __init__(self, order, seeds, links, vectors, expansions, inv_basis):
        self.order = order            # processing order, parents first
        self.seeds = seeds            # list of tree indices
        self.links = links            # t -> (gen, parent)
        self.vectors = vectors       # tree vectors in ambient coordinates
        self.expansions = expansions  # gen -> list over t of [(t2, coeff)]
        self.inv_basis = inv_basis    # None for the standard-basis tree


def _native_tree(mod: HeckeModule) -> _Tree | None:
    if mod.tree is None:
        return None
    links = mod.tree.links
    seeds = list(mod.tree.seeds)
    order = list(seeds)
    placed = set(seeds)
    pending = dict(links)
    while pending:
        progressed = False
        for child in list(pending):
            if pending[child][1] in placed:
                order.append(child)
                placed.add(child)
                del pending[child]
                progressed = True
        if not progressed:
            return None  # malformed tree; fall back to generic
    vectors = [_unit_vec(mod.dim, t) for t in range(mod.dim)]
    expansions = {}
    for gen in mod.gens():
        kind, idx = gen
        mat = mod.s(idx) if kind == "s" else mod.y(idx)
        cols = [[] for _ in range(mod.dim)]
        for i, j, v in mat.nonzeros():
            cols[j].append((i, v))
        expansions[gen] = cols
    return _Tree(order, seeds, links, vectors, expansions, None)


def _generic_tree(mod: HeckeModule) -> _Tree:
    """Orbit tree from generalized-weight seed vectors."""
    dim = mod.dim
    span = RowSpace(dim)
    vectors = []
    seeds = []
    links = {}
    order = []
    seed_pool = []
    for chi, vecs in weights_with_spaces(mod):
        seed_pool.extend(vecs)
    for seed in seed_pool:
        if not span.add(seed):
            continue
        t0 = len(vectors)
        vectors.append(seed)
        seeds.append(t0)
        order.append(t0)
        frontier = [t0]
        while frontier:
            t = frontier.pop(0)
            for gen in mod.gens():
                img = mod.apply_gen(gen, vectors[t])
                if span.add(img):
                    t2 = len(vectors)
                    vectors.append(img)
                    links[t2] = (gen, t)
                    order.append(t2)
                    frontier.append(t2)
        if len(vectors) == dim:
            break
    sub = Subspace(vectors)
    expansions = {}
    for gen in mod.gens():
        cols = []
        for t in range(dim):
            img = mod.apply_gen(gen, vectors[t])
            coords = sub.express(img)
            cols.append([(t2, c) for t2, c in enumerate(coords) if c])
        expansions[gen] = cols
    inv_basis = sub
    return _Tree(order, seeds, links, vectors, expansions, inv_basis)


def _seed_weight(mod: HeckeModule, vec):
    """The weight of vec if it is a true joint eigenvector, else None."""
    chi = []
    for j in range(1, mod.m + 1):
        img = mod.y(j).mat_vec(vec)
        lam = None
        for a, b in zip(img, vec):
            if b:
                lam = a / b
                break
        if lam is None:
            lam = ZERO
        if any(a != lam * b for a, b in zip(img, vec)):
            return None
        chi.append(lam)
    return tuple(chi)


def hom_space(A: HeckeModule, B: HeckeModule) -> list:
    """Basis of intertwiners T: A -> B (as dim(B) x dim(A) matrices).

    A hom is determined by the images of the tree seeds of A; each seed image
    is confined to the matching (generalized or true) weight space of B, and
    the remaining constraints are imposed by iterative exact refinement.
    """
    if A.m != B.m:
        raise ValueError("rank mismatch")
    if A.dim == 0 or B.dim == 0:
        return []
    if A.m == 0:
        # H_0-modules are plain vector spaces: all matrices intertwine
        out = []
        for i in range(B.dim):
            for j in range(A.dim):
                mat = Matrix.zeros(B.dim, A.dim).to_lists()
                mat[i][j] = ONE
                out.append(Matrix.from_rows(mat))
        return out
    tree = _native_tree(A) or _generic_tree(A)
    dB = B.dim
    r = len(tree.seeds)

    # per-seed parameter spaces inside B
    seed_spaces = []
    gen_spaces_cache = {}
    for t in tree.seeds:
        vec = tree.vectors[t]
        chi = _seed_weight(A, vec)
        if chi is not None:
            basis = (
                true_eigenspace_sparse(B, chi) if dB > 200 else true_eigenspace(B, chi)
            )
        else:
            chi_gen = _generalized_weight_of(A, vec)
            if chi_gen is None:
                basis = [_unit_vec(dB, i) for i in range(dB)]
            else:
                key = tuple(chi_gen)
                if key not in gen_spaces_cache:
                    gen_spaces_cache[key] = _generalized_joint_space(B, chi_gen)
                basis = gen_spaces_cache[key]
        seed_spaces.append(basis)

    # joint parameter space: block direct sum of seed spaces
    params = []
    for si, basis in enumerate(seed_spaces):
        for v in basis:
            block = [ZERO] * (r * dB)
            block[si * dB : (si + 1) * dB] = v
            params.append(block)
    if not params:
        return []

    def transports(param):
        """Images x_t of every tree vector under the hom with these seeds."""
        xs = [None] * len(tree.vectors)
        for si, t in enumerate(tree.seeds):
            xs[t] = param[si * dB : (si + 1) * dB]
        for t in tree.order:
            if xs[t] is None:
                gen, parent = tree.links[t]
                xs[t] = B.apply_gen(gen, xs[parent])
        return xs

    basis_transports = [transports(p) for p in params]
    while True:
        k = len(params)
        if k == 0:
            return []
        violated = []
        for gen in A.gens():
            exp = tree.expansions[gen]
            for t in range(len(tree.vectors)):
                res = []
                nonzero = False
                for xs in basis_transports:
                    rvec = B.apply_gen(gen, xs[t])
                    for t2, c in exp[t]:
                        x2 = xs[t2]
                        rvec = [a - c * b for a, b in zip(rvec, x2)]
                    res.append(rvec)
                    if any(rvec):
                        nonzero = True
                if nonzero:
                    violated.append(res)
        if not violated:
            break
        rows = []
        for res in violated:
            for coord in range(dB):
                row = [res[i][coord] for i in range(k)]
                if any(row):
                    rows.append(row)
        ker = nullspace(Matrix.from_rows(rows))
        if not ker:
            return []
        params = [_combine(params, coords) for coords in ker]
        basis_transports = [
            [_combine([bt[t] for bt in basis_transports], coords) for t in range(len(tree.vectors))]
            for coords in ker
        ]

    # assemble matrices: T(tree vector t) = x_t
    homs = []
    for xs in basis_transports:
        if tree.inv_basis is None:
            cols = xs  # tree vectors are the standard basis in order
            T = Matrix.zeros(dB, A.dim).to_lists()
            for t, col in enumerate(cols):
                for i, v in enumerate(col):
                    if v:
                        T[i][t] = v
            homs.append(Matrix.from_rows(T))
        else:
            # T * P = X with P the tree-vector matrix
            X = Matrix.from_rows(xs).transpose()  # dB x ntree
            P = Matrix.from_rows(tree.vectors).transpose()  # dA x ntree
            Pinv = _inverse(P)
            homs.append(X * Pinv)
    return homs


def _generalized_weight_of(mod, vec):
    """Weight of the generalized joint eigenspace containing vec, or None."""
    for chi, vecs in weights_with_spaces(mod):
        sub = RowSpace(mod.dim)
        for v in vecs:
            sub.add(v)
        if sub.contains(vec):
            return chi
    return None


def _generalized_joint_space(mod, chi) -> list:
    vecs = [_unit_vec(mod.dim, i) for i in range(mod.dim)]
    for j in range(1, mod.m + 1):
        if not vecs:
            return []
        sub = Subspace(vecs)
        images = [mod.y(j).mat_vec(v) for v in vecs]
        small = Matrix.from_rows([sub.express(img) for img in images]).transpose()
        basis = generalized_eigenspace(small, rat(chi[j - 1]))
        vecs = [_combine(vecs, coords) for coords in basis]
    return vecs


def _inverse(M: Matrix) -> Matrix:
    sol = solve_linear(M, Matrix.identity(M.rows))
    if not sol.consistent or sol.nullity:
        raise ModuleError("matrix not invertible")
    return sol.particular


def is_isomorphic(A: HeckeModule, B: HeckeModule) -> bool:
    """Exact isomorphism test.

    Fast negatives on dimension, weight and S_m-character mismatches; then an
    invertible element is sought in the hom space by determinant evaluation
    on a deterministic grid whose size exceeds the determinant's degree in
    each variable.
    """
    if A.m != B.m or A.dim != B.dim:
        return False
    if A.dim == 0:
        return True
    if weights(A) != weights(B):
        return False
    if A.m > 0 and sm_character_decompose(A) != sm_character_decompose(B):
        return False
    homs = hom_space(A, B)
    if not homs:
        return False
    k = len(homs)
    d = A.dim
    total = None
    for T in homs:
        if determinant(T):
            return True
        total = T if total is None else total + T
    if k == 1:
        return False
    if determinant(total):
        return True
    # full deterministic grid: (d+1) points per variable suffice
    import itertools

    grid_points = (d + 1) ** k
    if grid_points > 200000:
        raise ModuleError("isomorphism search grid too large (%d homs, dim %d)" % (k, d))
    for point in itertools.product(range(d + 1), repeat=k):
        T = Matrix.zeros(d, d)
        for c, H in zip(point, homs):
            if c:
                T = T + H.scale(c)
        if determinant(T):
            return True
    return False


# -- sub/quotient constructors ----------------------------------------------------


def restrict_to_submodule(mod: HeckeModule, vectors, label=None) -> HeckeModule:
    """The submodule spanned by the given (independent) invariant vectors."""
    if not vectors:
        return HeckeModule(mod.m, 0, [Matrix.zeros(0, 0)] * max(mod.m - 1, 0),
                           [Matrix.zeros(0, 0)] * mod.m, label=label)
    sub = Subspace(vectors)

    def restrict(mat):
        cols = []
        for v in vectors:
            img = mat.mat_vec(v)
            coords = sub.express(img)
            if coords is None:
                raise ModuleError("subspace is not invariant")
            cols.append(coords)
        return Matrix.from_rows(cols).transpose()

    return HeckeModule(mod.m, len(vectors), [restrict(s) for s in mod.s_mats],
                       [restrict(y) for y in mod.y_mats], label=label)


def quotient_by_submodule(mod: HeckeModule, sub_vectors, label=None) -> HeckeModule:
    """The quotient of mod by the submodule spanned by sub_vectors."""
    space = RowSpace(mod.dim)
    for v in sub_vectors:
        space.add(v)
    piv = set(space.pivots)
    free = [j for j in range(mod.dim) if j not in piv]

    def project(vec):
        red = space.reduce(vec)
        return [red[j] for j in free]

    def push(mat):
        cols = []
        for j in free:
            cols.append(project(mat.col(j)))
        return Matrix.from_rows(cols).transpose()

    return HeckeModule(mod.m, len(free), [push(s) for s in mod.s_mats],
                       [push(y) for y in mod.y_mats], label=label)


def direct_sum(mods) -> HeckeModule:
    mods = list(mods)
    if not mods:
        raise ValueError("empty direct sum")
    m = mods[0].m
    if any(x.m != m for x in mods):
        raise ValueError("rank mismatch in direct sum")
    dim = sum(x.dim for x in mods)

    def block(mats):
        out = [ZERO] * (dim * dim)
        off = 0
        for x, mat in mats:
            for i, j, v in mat.nonzeros():
                out[(off + i) * dim + (off + j)] = v
            off += x.dim
        return Matrix(dim, dim, out)

    s_mats = [block([(x, x.s(i)) for x in mods]) for i in range(1, m)]
    y_mats = [block([(x, x.y(j)) for x in mods]) for j in range(1, m + 1)]
    return HeckeModule(m, dim, s_mats, y_mats,
                       label=" + ".join(str(x.label) for x in mods))


# -- simplicity certificates --------------------------------------------------------


def _spectral_projector(mod: HeckeModule, j: int, lam) -> Matrix:
    """Projector onto the generalized lam-eigenspace of y_j, along the rest.

    As the spectral projector of a single operator it is a polynomial in y_j,
    hence lies in the acting algebra and preserves every submodule.
    """
    A = mod.y(j)
    roots, split = rational_roots(_min_poly(A))
    if not split:
        raise NonRationalWeight("irrational eigenvalue in y_%d" % j)
    basis = []
    sizes = []
    for mu in sorted(set(roots)):
        vecs = generalized_eigenspace(A, mu)
        basis.extend(vecs)
        sizes.append((mu, len(vecs)))
    U = Matrix.from_rows(basis).transpose()
    Uinv = _inverse(U)
    diag = []
    for mu, k in sizes:
        diag.extend([ONE if mu == lam else ZERO] * k)
    return U * Matrix.diagonal(diag) * Uinv


def _orbit_span(mats, start, dim) -> RowSpace:
    span = RowSpace(dim)
    span.add(start)
    frontier = [start]
    while frontier and span.dim < dim:
        v = frontier.pop()
        for mat in mats:
            img = mat.mat_vec(v)
            if span.add(img):
                frontier.append(img)
    return span


def _norton_element(mod: HeckeModule):
    """Search for an algebra element with one-dimensional kernel.

    Candidates: y_j - c, then (I - pi_chi) + sum t^j (y_j - chi_j) pi_chi over
    joint spectral projectors pi_chi.  Returns (kernel_vector, z) or None.
    """
    dim = mod.dim
    for j in range(1, mod.m + 1):
        roots, split = rational_roots(_min_poly(mod.y(j)))
        if not split:
            raise NonRationalWeight("irrational eigenvalue in y_%d" % j)
        for lam in sorted(set(roots)):
            z = mod.y(j) - Matrix.identity(dim).scale(lam)
            ker = nullspace(z)
            if len(ker) == 1:
                return ker[0], z
    spaces = weights_with_spaces(mod)
    spaces.sort(key=lambda cv: len(cv[1]))
    proj_cache = {}
    for chi, vecs in spaces:
        pi = Matrix.identity(dim)
        for j in range(1, mod.m + 1):
            key = (j, chi[j - 1])
            if key not in proj_cache:
                proj_cache[key] = _spectral_projector(mod, j, chi[j - 1])
            pi = pi * proj_cache[key]
        complement = Matrix.identity(dim) - pi
        for t in (1, 2, 3, 5, 7):
            N = Matrix.zeros(dim, dim)
            tt = ONE
            for j in range(1, mod.m + 1):
                term = (mod.y(j) - Matrix.identity(dim).scale(chi[j - 1])).scale(tt)
                N = N + term
                tt = tt * t
            z = complement + N * pi
            ker = nullspace(z)
            if len(ker) == 1:
                return ker[0], z
    return None


def is_simple(mod: HeckeModule) -> bool:
    """Deterministic exact simplicity test.

    Primary path: Norton's criterion with a nullity-one algebra element (the
    kernel vector must generate, and the transpose kernel vector must generate
    under the transposed action).  Fallback: full algebra image, zero radical
    action plus one-dimensional endomorphism ring.
    """
    if mod.dim == 0:
        return False
    if mod.dim == 1:
        return True
    if mod.m == 0:
        return mod.dim == 1
    found = _norton_element(mod)
    gens = [mod.s(i) for i in range(1, mod.m)] + [mod.y(j) for j in range(1, mod.m + 1)]
    if found is not None:
        v, z = found
        if _orbit_span(gens, v, mod.dim).dim < mod.dim:
            return False
        kt = nullspace(z.transpose())
        assert len(kt) == 1
        gents = [g.transpose() for g in gens]
        return _orbit_span(gents, kt[0], mod.dim).dim == mod.dim
    # fallback: semisimple with scalar endomorphisms
    rad_vecs = radical_action_vectors(mod)
    if rad_vecs:
        return False
    return len(hom_space(mod, mod)) == 1


def algebra_image_basis(mod: HeckeModule, stop_at=None):
    """Basis (as matrices) of the unital algebra generated by the action.

    stop_at: early-exit dimension (e.g. dim^2 for a Burnside check).
    """
    dim = mod.dim
    gens = [mod.s(i) for i in range(1, mod.m)] + [mod.y(j) for j in range(1, mod.m + 1)]
    span = RowSpace(dim * dim)
    mats = []
    frontier = []
    start = Matrix.identity(dim)
    span.add(start.entries)
    mats.append(start)
    frontier.append(start)
    while frontier:
        if stop_at is not None and span.dim >= stop_at:
            break
        X = frontier.pop()
        for g in gens:
            Y = X * g
            if span.add(Y.entries):
                mats.append(Y)
                frontier.append(Y)
                if stop_at is not None and span.dim >= stop_at:
                    break
    return mats


def trace_radical(mats):
    """Radical of the spanned algebra via the characteristic-zero trace form."""
    k = len(mats)
    gram = [[(mats[i] * mats[j]).trace() for j in range(k)] for i in range(k)]
    ker = nullspace(Matrix.from_rows(gram))
    rad = []
    for coords in ker:
        R = Matrix.zeros(mats[0].rows, mats[0].cols)
        for c, X in zip(coords, mats):
            if c:
                R = R + X.scale(c)
        rad.append(R)
    return rad


def radical_action_vectors(mod: HeckeModule) -> list:
    """Spanning vectors of rad(B) . M computed by the trace-form criterion."""
    mats = algebra_image_basis(mod)
    rad = trace_radical(mats)
    span = RowSpace(mod.dim)
    out = []
    for R in rad:
        for j in range(mod.dim):
            col = R.col(j)
            if span.add(col):
                out.append(col)
    return out


def is_absolutely_irreducible(mod: HeckeModule, literal_cap: int = 16):
    """Absolute irreducibility with an exact certificate.

    For dim <= literal_cap the literal Burnside check runs: the algebra image
    has dimension dim^2 (hence zero radical).  Above the cap, simplicity via
    Norton plus a one-dimensional endomorphism ring certifies the same fact
    (Jacobson density in characteristic zero).
    """
    d = mod.dim
    if d == 0:
        return False
    if d <= literal_cap:
        mats = algebra_image_basis(mod, stop_at=d * d)
        if len(mats) != d * d:
            return False
        return not trace_radical(mats)
    return is_simple(mod) and len(hom_space(mod, mod)) == 1


# -- simple quotients and composition series ------------------------------------------


class NotUniqueMaximal(ModuleError):
    pass


def reversed_standard(ms: Multisegment) -> HeckeModule:
    """Product of Steinbergs in the reversed (ascending-start) order."""
    return product_of_steinbergs(tuple(reversed(normalize_order(ms))))


def simple_quotient(mod: HeckeModule) -> HeckeModule:
    """The unique simple quotient of a (standard) cyclic module.

    For modules with multisegment provenance the quotient is realized as the
    image of the canonical intertwiner into the reversed-order product; the
    intertwiner space must be one-dimensional and the image must pass the
    simplicity certificate, else NotUniqueMaximal is raised.  Without
    provenance the maximal submodule comes from the trace-form radical.
    """
    if mod.dim == 0:
        raise ModuleError("zero module has no simple quotient")
    if mod.dim == 1:
        return mod
    if mod.factors is not None or mod.multisegment is not None:
        if mod.dim <= 200 and is_simple(mod):
            return mod.relabel("St(%r)" % (mod.multisegment,))
        if mod.factors is not None:
            rev = product_of_steinbergs(tuple(reversed(mod.factors)))
        else:
            rev = reversed_standard(mod.multisegment)
        homs = hom_space(mod, rev)
        if len(homs) != 1:
            raise NotUniqueMaximal(
                "intertwiner space to the reversed product has dimension %d" % len(homs)
            )
        T = homs[0]
        span = RowSpace(rev.dim)
        image = []
        for t in range(mod.dim):
            col = T.col(t)
            if span.add(col):
                image.append(col)
        if not image:
            raise NotUniqueMaximal("canonical intertwiner vanished")
        quo = restrict_to_submodule(rev, image, label="St(%r)" % (mod.multisegment,))
        quo.multisegment = mod.multisegment
        if not is_simple(quo):
            raise NotUniqueMaximal("intertwiner image is not simple")
        return quo
    # generic path: radical via trace form
    rad = radical_action_vectors(mod)
    quo = quotient_by_submodule(mod, rad, label="head(%s)" % mod.label)
    if not is_simple(quo):
        raise NotUniqueMaximal("head is not simple")
    return quo


_ST_CACHE = {}


def simple_module(ms: Multisegment) -> HeckeModule:
    """St(ms), cached."""
    if ms not in _ST_CACHE:
        _ST_CACHE[ms] = simple_quotient(standard_module(ms))
    return _ST_CACHE[ms]


@dataclass
class CompositionTable:
    """Composition multiplicities keyed by multisegment."""

    entries: dict

    def total_dim(self) -> int:
        return sum(mult * simple_module(ms).dim for ms, mult in self.entries.items())

    def __eq__(self, other):
        return isinstance(other, CompositionTable) and self.entries == other.entries

    def to_json(self):
        return [
            {"multisegment": ms.to_json(), "multiplicity": mult}
            for ms, mult in sorted(self.entries.items(), key=lambda kv: repr(kv[0]))
        ]


def composition_factors(mod: HeckeModule, candidates=None) -> CompositionTable:
    """Jordan-Hoelder multiplicities by radical-chain head matching.

    The module splits into central-character blocks (grouped generalized
    weight spaces).  In each block the head multiplicity of a candidate
    simple is dim Hom(block, St(ms')); iterating on the kernel intersection
    walks down the radical filtration.  Candidates default to all
    multisegments with the block's content (complete by the classification
    theorem); a dimension-conservation check guards the bookkeeping.
    """
    if mod.dim == 0:
        return CompositionTable({})
    blocks = {}
    for chi, vecs in weights_with_spaces(mod):
        key = tuple(sorted(chi))
        blocks.setdefault(key, []).extend(vecs)
    table = {}
    for content, vecs in sorted(blocks.items()):
        block = restrict_to_submodule(mod, vecs, label="block%s" % (content,))
        cands = candidates
        if cands is None and mod.multisegment is not None:
            # factors of (sub)quotients of standard modules live below the
            # provenance multisegment in the intersection-union order
            from .multisegment import intersection_union_closure

            cands = sorted(intersection_union_closure(mod.multisegment), key=repr)
        if cands is None:
            cands = multisegments_with_content(content)
        cands = [ms for ms in cands if ms.content() == content]
        simples = []
        for ms in cands:
            S = simple_module(ms)
            if len(hom_space(S, S)) != 1:
                raise ModuleError("endomorphism ring of St(%r) is not scalar" % (ms,))
            simples.append((ms, S))
        current = block
        accounted = 0
        while current.dim > 0:
            layer_mults = {}
            all_kernel_rows = []
            for ms, S in simples:
                homs = hom_space(current, S)
                if homs:
                    layer_mults[ms] = len(homs)
                    for T in homs:
                        all_kernel_rows.extend(T.to_lists())
            if not layer_mults:
                raise ModuleError("candidate match failed: no head found for %r" % (content,))
            for ms, k in layer_mults.items():
                table[ms] = table.get(ms, 0) + k
                accounted += k * simple_module(ms).dim
            ker = nullspace(Matrix.from_rows(all_kernel_rows))
            if len(ker) == current.dim:
                raise ModuleError("candidate match failed: radical did not shrink")
            current = restrict_to_submodule(current, ker, label="rad")
        if accounted != block.dim:
            raise ModuleError("candidate match failed: dimensions do not add up")
    total = sum(mult * simple_module(ms).dim for ms, mult in table.items())
    if total != mod.dim:
        raise ModuleError("candidate match failed: dimension conservation")
    return CompositionTable(table)


# -- Hermitian forms -----------------------------------------------------------------


def star_dual(mod: HeckeModule) -> HeckeModule:
    """The star-dual module: g acts by rho(g*)^T."""
    s_mats = [mod.s(i).transpose() for i in range(1, mod.m)]
    y_mats = []
    for j in range(1, mod.m + 1):
        ystar = ha.star(ha.HeckeElement.y_gen(mod.m, j))
        y_mats.append(mod.element_matrix(ystar).transpose())
    ms = mod.multisegment.negated() if mod.multisegment is not None else None
    return HeckeModule(mod.m, mod.dim, s_mats, y_mats,
                       label="(%s)*" % mod.label, multisegment=ms)


@dataclass
class FormReport:
    """Outcome of the invariant-form computation."""

    exists: bool
    gram: Matrix | None
    signature: tuple | None  # (positive, negative, zero)
    unitary: bool
    unique: bool = True


def hermitian_form(mod: HeckeModule) -> FormReport:
    """Solve S rho(g) = rho(g*)^T S for symmetric S over all generators.

    The solution space is Hom(mod, star_dual(mod)); an invariant form exists
    when it contains an invertible symmetric element.  With a one-dimensional
    solution space the signature is computed and definiteness (either global
    sign) reported as unitarity.  A higher-dimensional space is reported via
    unique=False, not treated as fatal.
    """
    if mod.dim == 0:
        return FormReport(False, None, None, False)
    homs = hom_space(mod, star_dual(mod))
    # keep the symmetric part of the solution space
    sym = []
    if homs:
        rows = []
        for T in homs:
            diff = T - T.transpose()
            rows.append(diff.entries)
        ker = nullspace(Matrix.from_rows(rows).transpose())
        for coords in ker:
            S = Matrix.zeros(mod.dim, mod.dim)
            for c, T in zip(coords, homs):
                if c:
                    S = S + T.scale(c)
            if not S.is_zero():
                sym.append(S)
    if not sym:
        return FormReport(False, None, None, False)
    unique = len(sym) == 1
    S = sym[0]
    if determinant(S) == 0 and unique:
        return FormReport(False, S, None, False, unique=True)
    if not unique:
        inv = next((X for X in sym if determinant(X)), None)
        if inv is None:
            return FormReport(False, sym[0], None, False, unique=False)
        S = inv
    pos, neg, zero = symmetric_signature_of(S)
    unitary = zero == 0 and (pos == 0 or neg == 0)
    return FormReport(True, S, (pos, neg, zero), unitary, unique=unique)


def symmetric_signature_of(S: Matrix):
    from .exact_linalg import symmetric_signature

    return symmetric_signature(S)


# -- BZ derivatives and the IM twist ----------------------------------------------------


def im_twist(mod: HeckeModule) -> HeckeModule:
    """Precompose with the Iwahori-Matsumoto involution: negate all generators."""
    return HeckeModule(mod.m, mod.dim, [(-s) for s in mod.s_mats],
                       [(-y) for y in mod.y_mats], label="IM(%s)" % mod.label)


def _sym_group_idempotent(mod: HeckeModule, tau, i: int) -> Matrix:
    """Matrix of a primitive idempotent of C[S_i] cutting the tau multiplicity space.

    For the trivial and sign representations this is the central idempotent;
    in general it is the seminormal matrix-unit idempotent
    (dim tau / i!) sum_w [Y(w^{-1})]_{11} w.
    """
    from itertools import permutations as iterperms

    dim = mod.dim
    fact = factorial(i)
    total = Matrix.zeros(dim, dim)
    if tau == tuple([i]) or tau == (i,):
        for p in iterperms(range(1, i + 1)):
            w = Permutation(tuple(p) + tuple(range(i + 1, mod.m + 1)))
            total = total + mod.perm_matrix(w)
        return total.scale(Rational(1, fact))
    if tau == tuple([1] * i):
        for p in iterperms(range(1, i + 1)):
            w = Permutation(tuple(p) + tuple(range(i + 1, mod.m + 1)))
            total = total + mod.perm_matrix(w).scale(w.sign())
        return total.scale(Rational(1, fact))
    mats = [Matrix.from_rows(rows) for rows in seminormal_rep(tau)]
    dtau = hook_dimension(tau)

    def rep_of(word):
        out = Matrix.identity(dtau)
        for idx in word:
            out = out * mats[idx - 1]
        return out

    for p in iterperms(range(1, i + 1)):
        small = Permutation(tuple(p))
        winv = small.inverse()
        coeff = rep_of(winv.reduced_word())[0, 0]
        if coeff:
            w = Permutation(tuple(p) + tuple(range(i + 1, mod.m + 1)))
            total = total + mod.perm_matrix(w).scale(coeff)
    return total.scale(Rational(dtau, fact))


def bz_derivative(mod: HeckeModule, tau) -> HeckeModule:
    """The Bernstein-Zelevinsky derivative BZ_tau: Hom_{S_i}(tau, mod).

    tau is a partition of i <= m labelling an S_i-irreducible ((i) trivial,
    (1,..,1) sign).  The multiplicity space is cut by an exact primitive
    idempotent; the H_{m-i} structure comes from the index-shifted generators
    restricted to it.
    """
    tau = tuple(int(x) for x in tau)
    i = sum(tau)
    if i == 0:
        return mod
    if i > mod.m:
        raise ValueError("derivative order %d exceeds rank %d" % (i, mod.m))
    E = _sym_group_idempotent(mod, tau, i)
    span = RowSpace(mod.dim)
    basis = []
    for j in range(mod.dim):
        col = E.col(j)
        if any(col) and span.add(col):
            basis.append(col)
    new_m = mod.m - i
    if not basis:
        return HeckeModule(new_m, 0, [Matrix.zeros(0, 0)] * max(new_m - 1, 0),
                           [Matrix.zeros(0, 0)] * new_m,
                           label="BZ_%s(%s)" % (tau, mod.label))
    sub = Subspace(basis)

    def restrict(mat):
        cols = []
        for v in basis:
            coords = sub.express(mat.mat_vec(v))
            if coords is None:
                raise ModuleError("multiplicity space not invariant")
            cols.append(coords)
        return Matrix.from_rows(cols).transpose()

    s_mats = [restrict(mod.s(i + k)) for k in range(1, new_m)]
    y_mats = [restrict(mod.y(i + k)) for k in range(1, new_m + 1)]
    return HeckeModule(new_m, len(basis), s_mats, y_mats,
                       label="BZ_%s(%s)" % (tau, mod.label))
