"""The transfer functor from GL(n,C) parameters to Hecke modules.

Realized through its structure theorems: a principal series maps to the
product of Steinberg modules of the attached segments (at the height, zero
elsewhere), an irreducible parameter maps to the simple quotient of the
standard module of its multisegment.  A direct tensor-space model of the
same functor serves as an independent oracle, together with checkers for
parabolic-induction, derivative/tensor and Schur-Weyl compatibility and the
induction-reducibility detector.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import caps
from .gl_params import (
    GLParam,
    chi_twist,
    concat,
    dirac_cohomology_finite_dim,  # noqa: F401  (transfer-level surface)
    height,
    is_finite_dimensional,
    k_type_multiplicity,
    rho,
    segment_of_character,
    sort_to_standard,
)
from .hecke_modules import (
    HeckeModule,
    bz_derivative,
    composition_factors,
    direct_sum,
    induce,
    is_isomorphic,
    is_simple,
    product_of_steinbergs,
    simple_quotient,
    sm_character_decompose,
    standard_module,
)
from .multisegment import Multisegment, from_params
from .rational import ONE, ZERO, Rational, rat, rat_vector
from .symgroup import Permutation, conjugate_partition, lr_coefficient, check_partition
from .exact_linalg import Matrix


@dataclass
class TransferResult:
    """Image of the transfer at a fixed tensor rank: zero or a module."""

    zero: bool
    module: HeckeModule | None
    multisegment: Multisegment | None

    def to_json(self):
        out = {"zero": self.zero}
        if not self.zero:
            out["multisegment"] = self.multisegment.to_json() if self.multisegment else None
            out["module_ref"] = self.module.label
            out["dim"] = self.module.dim
        return out


_ZERO_RESULT = TransferResult(True, None, None)


def gamma_dim(p: GLParam, m: int) -> int:
    """Dimension of the transfer image: the multinomial at the height, else 0."""
    h = height(p)
    if h is None or m != h:
        return 0
    from math import factorial

    mu = [int(x.numerator) for x in p.mu]
    out = factorial(m)
    for k in mu:
        out //= factorial(k)
    return out


def gamma_standard(p: GLParam, m: int) -> TransferResult:
    """Image of the principal series X(p): Steinberg product in input order."""
    h = height(p)
    if h is None or m != h:
        return _ZERO_RESULT
    segs = [segment_of_character(a, b) for a, b in p.pairs()]
    segs = [s for s in segs if not s.is_empty]
    module = product_of_steinbergs(segs)
    ms = Multisegment(segs)
    module.multisegment = ms
    return TransferResult(False, module, ms)


def gamma_irreducible(p: GLParam, m: int) -> TransferResult:
    """Image of the irreducible J(p): the simple module of its multisegment."""
    h = height(p)
    if h is None or m != h:
        return _ZERO_RESULT
    ms = from_params(p.lambda_L, p.lambda_R)
    std = standard_module(ms)
    simple = simple_quotient(std)
    if not is_simple(simple):
        raise RuntimeError("transfer image failed the irreducibility assertion")
    return TransferResult(False, simple, ms)


def direct_model(p: GLParam, m: int) -> HeckeModule:
    """Tensor-space model of the transfer on a principal series (oracle).

    Basis: pure tensors e_{i_1} x ... x e_{i_m} with index j occurring mu_j
    times.  s_l is the negated slot swap; y_l carries the torus value
    lambda_R_{i_l} + 1/2 plus the same-index count to the left, plus signed
    partial swaps (descending pairs to the left, ascending to the right).
    """
    h = height(p)
    if h is None or m != h:
        raise ValueError("direct model defined only at the height")
    caps.check_rank(m)
    mu = [int(x.numerator) for x in p.mu]
    n = p.n
    basis = []

    def build(prefix, remaining):
        if len(prefix) == m:
            basis.append(tuple(prefix))
            return
        for j in range(n):
            if remaining[j]:
                remaining[j] -= 1
                build(prefix + [j + 1], remaining)
                remaining[j] += 1

    build([], list(mu))
    caps.check_dim(len(basis))
    index = {b: t for t, b in enumerate(basis)}
    dim = len(basis)

    def swap(b, k, l):
        v = list(b)
        v[k], v[l] = v[l], v[k]
        return index[tuple(v)]

    s_mats = []
    for l in range(1, m):
        cols = [[ZERO] * dim for _ in range(dim)]
        for t, b in enumerate(basis):
            cols[t][swap(b, l - 1, l)] = -ONE
        s_mats.append(_from_cols(cols, dim))
    half = Rational(1, 2)
    y_mats = []
    for l in range(1, m + 1):
        cols = [[ZERO] * dim for _ in range(dim)]
        for t, b in enumerate(basis):
            il = b[l - 1]
            diag = p.lambda_R[il - 1] + half + sum(1 for k in range(l - 1) if b[k] == il)
            cols[t][t] += diag
            for k in range(l - 1):
                if b[k] > il:
                    cols[t][swap(b, k, l - 1)] += ONE
            for k in range(l, m):
                if b[k] < il:
                    cols[t][swap(b, k, l - 1)] -= ONE
        y_mats.append(_from_cols(cols, dim))
    return HeckeModule(m, dim, s_mats, y_mats, label="direct_model(%r)" % (p,))


def _from_cols(cols, dim):
    entries = [ZERO] * (dim * dim)
    for src, col in enumerate(cols):
        for row, v in enumerate(col):
            if v:
                entries[row * dim + src] = v
    return Matrix(dim, dim, entries)


def check_parabolic_compat(p1: GLParam, p2: GLParam) -> bool:
    """Transfer of a product vs product of transfers, at the height split.

    Only the height summand survives; factors of height minus-infinity make
    both sides zero.
    """
    h1, h2 = height(p1), height(p2)
    joined = concat(p1, p2)
    if h1 is None or h2 is None:
        return height(joined) is None
    lhs = gamma_standard(joined, h1 + h2)
    g1 = gamma_standard(p1, h1)
    g2 = gamma_standard(p2, h2)
    rhs = induce(g1.module, g2.module)
    return is_isomorphic(lhs.module, rhs)


def schur_functor_param(tau, n: int) -> GLParam | None:
    """The parameter of the Schur functor applied to the conjugate standard rep.

    S_tau(V) is the finite-dimensional module with K-highest weight
    -w0(tau'); as a parameter it is (rho, tau' + rho).  None when tau has
    more than n columns (the functor vanishes).
    """
    tau = check_partition(tau) if tau else ()
    tconj = conjugate_partition(tau)
    if len(tconj) > n:
        return None
    padded = tuple(tconj) + (0,) * (n - len(tconj))
    r = rho(n)
    return GLParam(r, tuple(rat(a) + b for a, b in zip(padded, r)))


def tensor_decomposition(p: GLParam, tau) -> list:
    """Decompose J(p) (x) S_tau(V) for finite-dimensional p.

    Returns [(multiplicity, GLParam)]: the left factor is untouched, the right
    highest weight runs over the Littlewood-Richardson decomposition of
    (lambda_R - rho) (x) tau'.
    """
    if not is_finite_dimensional(p):
        raise ValueError("not computable on GL side: parameter not finite-dimensional")
    q = sort_to_standard(p)
    n = q.n
    tconj = conjugate_partition(tau)
    if len(tconj) > n:
        return []
    tpad = tuple(rat(x) for x in tconj + (0,) * (n - len(tconj)))
    r = rho(n)
    b = tuple(y - t for y, t in zip(q.lambda_R, r))
    out = []
    for gamma in _dominant_summands(b, tpad):
        mult = lr_coefficient(b, tpad, gamma)
        if mult:
            out.append((mult, GLParam(q.lambda_L, tuple(g + t for g, t in zip(gamma, r)))))
    return out


def _dominant_summands(b, c):
    """Dominant gamma containing b with |gamma/b| = |c| (the tensor support)."""
    n = len(b)
    budget = int(sum(c))
    out = []

    def rec(k, gains, left):
        if k == n:
            if left == 0:
                gamma = tuple(x + g for x, g in zip(b, gains))
                if all(gamma[i] >= gamma[i + 1] for i in range(n - 1)):
                    out.append(gamma)
            return
        for g in range(left + 1):
            rec(k + 1, gains + [g], left - g)

    rec(0, [], budget)
    return out


def _zero_module(m: int) -> HeckeModule:
    return HeckeModule(m, 0, [Matrix.zeros(0, 0)] * max(m - 1, 0), [Matrix.zeros(0, 0)] * m)


def _rectangle_width(tau, n: int):
    """c when tau = (n^c) (so S_tau(V) is the c-th inverse thickening power)."""
    tau = tuple(tau)
    if tau and all(part == n for part in tau):
        return len(tau)
    return None


def check_bz_compat(p: GLParam, tau, m: int) -> bool:
    """Derivative of the transfer against the transfer of the tensor twist.

    Computable when tau is a full-width rectangle (n^c) (the Schur functor is
    then a power of the inverse thickening character, twisting any parameter)
    or when p is finite-dimensional (tensor decomposed by
    Littlewood-Richardson on the right factor).
    """
    tau = check_partition(tau) if tau else ()
    i = sum(tau)
    n = p.n
    h = height(p)
    if h is None:
        raise ValueError("not computable on GL side: height is minus infinity")
    # left side: the derivative of the transfer at rank m + i
    big = gamma_irreducible(p, m + i)
    lhs = bz_derivative(big.module, tau) if not big.zero else _zero_module(m)
    # right side: transfer of J(p) (x) S_tau(V) at rank m
    width = _rectangle_width(tau, n)
    if width is not None:
        summands = [(1, chi_twist(p, -width))]
    elif is_finite_dimensional(p):
        summands = tensor_decomposition(p, tau)
    else:
        raise ValueError("not computable on GL side")
    modules = []
    for mult, q in summands:
        res = gamma_irreducible(q, m)
        if not res.zero:
            modules.extend([res.module] * mult)
    if not modules:
        return lhs.dim == 0
    rhs = direct_sum(modules)
    return is_isomorphic(lhs, rhs)


def check_schur_weyl(p: GLParam, alpha) -> bool:
    """Match S_m and K multiplicities through the transfer.

    alpha labels the S_m irreducible (standard convention); the matched
    K-type is F_{alpha'} (transpose), per the pinned bookkeeping.  The K side
    needs p principal-series-computable or finite-dimensional.
    """
    alpha = check_partition(alpha)
    m = height(p)
    if m is None or sum(alpha) != m:
        raise ValueError("alpha must be a partition of the height")
    n = p.n
    tconj = conjugate_partition(alpha)
    if is_finite_dimensional(p):
        image = gamma_irreducible(p, m).module
        if len(tconj) > n:
            k_mult = 0
        else:
            gamma = tuple(rat(x) for x in tconj + (0,) * (n - len(tconj)))
            k_mult = k_type_multiplicity(p, gamma, "finite-dim")
    else:
        image = gamma_standard(p, m).module
        if len(tconj) > n:
            k_mult = 0
        else:
            gamma = tuple(rat(x) for x in tconj + (0,) * (n - len(tconj)))
            k_mult = k_type_multiplicity(p, gamma, "principal-series")
    s_mult = sm_character_decompose(image).get(alpha, 0)
    return s_mult == k_mult


def detect_reducibility(p1: GLParam, p2: GLParam) -> str:
    """Irreducibility of the product of two irreducible parameters.

    Jointly thicken (smallest k making the concatenated parameter thickened:
    every composition factor of the twisted product is then thickened),
    transfer both factors, induce, and count composition factors.  The
    combined rank is capped; oversize instances raise CapExceeded.
    """
    all_l = p1.lambda_L + p2.lambda_L
    all_r = p1.lambda_R + p2.lambda_R
    gap = max(all_r) - min(all_l)
    k = 0
    if gap > 0:
        k = int(gap.numerator // gap.denominator)
        if rat(k) < gap:
            k += 1
    q1 = chi_twist(p1, k)
    q2 = chi_twist(p2, k)
    caps.check_rank(height(q1) + height(q2))
    g1 = gamma_irreducible(q1, height(q1))
    g2 = gamma_irreducible(q2, height(q2))
    prod = induce(g1.module, g2.module)
    table = composition_factors(prod)
    total = sum(table.entries.values())
    return "irreducible" if total == 1 else "reducible"
