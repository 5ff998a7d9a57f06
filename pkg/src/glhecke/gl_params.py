"""GL(n,C) Langlands parameters as a calculus on pairs of rational vectors.

A parameter is (lambda_L, lambda_R) with integral coordinatewise difference
mu = lambda_L - lambda_R; nu = lambda_L + lambda_R.  Heights, thickening
twists, Hermitian duals, finite-dimensionality, K-type multiplicities and the
finite-dimensional character formula all live here.  Parameters are rational
(real); complex entries are out of scope and rejected at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as iterpermutations

from .multisegment import Segment
from .rational import ONE, ZERO, Rational, is_integral, rat, rat_str, rat_vector
from .symgroup import Permutation, kostka, lr_coefficient


@dataclass(frozen=True)
class GLParam:
    """A pair (lambda_L, lambda_R) of rational n-vectors, integral difference."""

    lambda_L: tuple
    lambda_R: tuple

    def __post_init__(self):
        ll = rat_vector(self.lambda_L)
        lr = rat_vector(self.lambda_R)
        if len(ll) != len(lr):
            raise ValueError("lambda_L and lambda_R must have equal length")
        for x, y in zip(ll, lr):
            if not is_integral(x - y):
                raise ValueError("lambda_L - lambda_R must be integral coordinatewise")
        object.__setattr__(self, "lambda_L", ll)
        object.__setattr__(self, "lambda_R", lr)

    @property
    def n(self) -> int:
        return len(self.lambda_L)

    @property
    def mu(self) -> tuple:
        return tuple(x - y for x, y in zip(self.lambda_L, self.lambda_R))

    @property
    def nu(self) -> tuple:
        return tuple(x + y for x, y in zip(self.lambda_L, self.lambda_R))

    def pairs(self):
        return list(zip(self.lambda_L, self.lambda_R))

    def __repr__(self):
        return "GLParam((%s),(%s))" % (
            ",".join(rat_str(x) for x in self.lambda_L),
            ",".join(rat_str(x) for x in self.lambda_R),
        )

    def to_json(self):
        return {
            "lambda_L": [rat_str(x) for x in self.lambda_L],
            "lambda_R": [rat_str(x) for x in self.lambda_R],
        }

    @staticmethod
    def from_json(d) -> "GLParam":
        return GLParam(tuple(rat(x) for x in d["lambda_L"]), tuple(rat(x) for x in d["lambda_R"]))


@dataclass(frozen=True)
class SignedParamSum:
    """A formal signed combination of principal-series parameters."""

    terms: tuple  # ((sign, GLParam), ...)

    def to_json(self):
        return [{"sign": s, "param": p.to_json()} for s, p in self.terms]


def height(p: GLParam):
    """Sum of mu when all entries are nonnegative, else None (minus infinity)."""
    mu = p.mu
    if any(x < 0 for x in mu):
        return None
    total = sum(mu, ZERO)
    return int(total.numerator)  # integral by construction


def is_thickened(p: GLParam) -> bool:
    """Every lambda_L_i - lambda_R_j >= 0, i.e. min(L) >= max(R)."""
    if p.n == 0:
        return True
    return min(p.lambda_L) >= max(p.lambda_R)


def sort_to_standard(p: GLParam) -> GLParam:
    """Jointly permute coordinates so lambda_L is weakly decreasing.

    Ties are broken by lambda_R descending.  When the input admits a
    dominant nu under this sort, the output has it; that is asserted by the
    property suite rather than assumed here.
    """
    pairs = sorted(p.pairs(), key=lambda xy: (xy[0], xy[1]), reverse=True)
    return GLParam(tuple(x for x, _ in pairs), tuple(y for _, y in pairs))


def hermitian_dual(p: GLParam) -> GLParam:
    """(-lambda_R, -lambda_L): the Hermitian dual for real parameters."""
    return GLParam(tuple(-y for y in p.lambda_R), tuple(-x for x in p.lambda_L))


def chi_twist(p: GLParam, k: int) -> GLParam:
    """Tensor by the k-th power of the thickening character: lambda_R -= k."""
    k = rat(int(k))
    return GLParam(p.lambda_L, tuple(y - k for y in p.lambda_R))


def thicken(p: GLParam):
    """Minimal k >= 0 with chi_twist(p, k) thickened, with the twist."""
    if p.n == 0:
        return p, 0
    gap = max(p.lambda_R) - min(p.lambda_L)
    k = 0
    if gap > 0:
        k = int(gap.numerator // gap.denominator)
        if rat(k) < gap:
            k += 1
    return chi_twist(p, k), k


def pair_reducibility(chi1, chi2) -> bool:
    """Reducibility of the product of two GL_1 characters chi_{a,b}.

    True iff p = a1-a2 and q = b1-b2 are nonzero integers of equal sign.
    """
    a1, b1 = rat(chi1[0]), rat(chi1[1])
    a2, b2 = rat(chi2[0]), rat(chi2[1])
    if not is_integral(a1 - b1) or not is_integral(a2 - b2):
        raise ValueError("characters must have integral a - b")
    pq = (a1 - a2, b1 - b2)
    if not all(is_integral(x) for x in pq):
        return False
    pp, qq = pq
    if not pp or not qq:
        return False
    return (pp > 0) == (qq > 0)


def segment_of_character(a, b) -> Segment:
    """The segment [b + 1/2, a - 1/2] attached to chi_{a,b} (a - b >= 0)."""
    half = Rational(1, 2)
    return Segment(rat(b) + half, rat(a) - half)


def is_finite_dimensional(p: GLParam) -> bool:
    """Whether J(p) is finite-dimensional.

    Requires lambda_L and lambda_R regular (distinct coordinates), internally
    integrally spaced, and simultaneously dominated: one permutation must sort
    both strictly decreasing.  (The last condition pins the statement to the
    parameter as given: coordinates may only be permuted jointly.)
    """
    ll, lr = p.lambda_L, p.lambda_R
    if len(set(ll)) != p.n or len(set(lr)) != p.n:
        return False
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if not is_integral(ll[i] - ll[j]) or not is_integral(lr[i] - lr[j]):
                return False
    pairs = sorted(p.pairs(), reverse=True)
    return all(pairs[i][1] > pairs[i + 1][1] for i in range(p.n - 1))


def rho(n: int) -> tuple:
    """Half the sum of positive roots: ((n-1)/2, (n-3)/2, ..., -(n-1)/2)."""
    return tuple(Rational(n - 1 - 2 * i, 2) for i in range(n))


def k_type_multiplicity(p: GLParam, gamma, mode: str) -> int:
    """Multiplicity of the K-type F_gamma in X(p) or J(p).

    mode="principal-series": Frobenius on Ind_T^K gives kostka(gamma, mu).
    mode="finite-dim": J(p)|_K = F_{lambda_L - rho} (x) F_{-w0(lambda_R - rho)},
    decomposed by Littlewood-Richardson (requires is_finite_dimensional).
    """
    gamma = rat_vector(gamma)
    if any(gamma[i] < gamma[i + 1] for i in range(len(gamma) - 1)):
        raise ValueError("gamma must be dominant")
    if mode == "principal-series":
        return kostka(gamma, p.mu)
    if mode != "finite-dim":
        raise ValueError("unknown mode %r" % mode)
    if not is_finite_dimensional(p):
        raise ValueError("parameter is not finite-dimensional")
    q = sort_to_standard(p)
    r = rho(q.n)
    a = tuple(x - t for x, t in zip(q.lambda_L, r))
    b_raw = tuple(y - t for y, t in zip(q.lambda_R, r))
    b = tuple(-x for x in reversed(b_raw))  # -w0(lambda_R - rho)
    return lr_coefficient(a, b, gamma)


def char_formula_finite_dim(lam) -> SignedParamSum:
    """The alternating principal-series resolution sum_w det(w) X(lam, -w w0 lam)."""
    lam = rat_vector(lam)
    n = len(lam)
    if len(set(lam)) != n:
        raise ValueError("lambda must be regular")
    w0lam = tuple(reversed(lam))
    terms = []
    for perm in sorted(iterpermutations(range(n))):
        w = Permutation(tuple(i + 1 for i in perm))
        lr = tuple(-w0lam[w.inverse()(i + 1) - 1] for i in range(n))
        terms.append((w.sign(), GLParam(lam, lr)))
    return SignedParamSum(tuple(terms))


def speh_param(n: int, d: int) -> GLParam:
    """The parameter of the unitary character det^d/|det^d| of GL_n."""
    if n < 1 or d < 1:
        raise ValueError("n, d must be >= 1")
    ll = tuple(Rational((n - 1 - 2 * i) + d, 2) for i in range(n))
    lr = tuple(Rational((n - 1 - 2 * i) - d, 2) for i in range(n))
    return GLParam(ll, lr)


def concat(p1: GLParam, p2: GLParam) -> GLParam:
    return GLParam(p1.lambda_L + p2.lambda_L, p1.lambda_R + p2.lambda_R)


def dirac_cohomology_finite_dim(lam) -> dict:
    """Dirac cohomology datum of the finite-dimensional J(lam, -w0 lam).

    Returns the K-type 2*lam - rho with multiplicity 2^floor(n/2); the
    spin-module computation itself is out of scope.
    """
    lam = rat_vector(lam)
    n = len(lam)
    if len(set(lam)) != n:
        raise ValueError("lambda must be regular")
    r = rho(n)
    weight = tuple(2 * x - t for x, t in zip(lam, r))
    return {"k_type": weight, "multiplicity": 2 ** (n // 2)}
