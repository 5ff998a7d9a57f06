"""Element arithmetic in the type-A graded Hecke algebra.

Elements are kept in PBW normal form: group element on the left, monomial in
the commuting generators y_1..y_m on the right, with exact rational
coefficients and no zero terms stored.  Multiplication rewrites by pushing
monomials rightward through reduced words with the three-case rule

    y_i s_i = s_i y_{i+1} + 1,   y_{i+1} s_i = s_i y_i - 1,
    y_j s_i = s_i y_j            (j != i, i+1).

The star map is the Hermitian anti-involution s_i* = s_i,
y_i* = -w0 y_{m+1-i} w0^{-1}; the IM involution is w -> (-1)^l(w) w,
y -> -y.
"""

from __future__ import annotations

from functools import lru_cache

from .rational import ONE, ZERO, Rational, rat, rat_str
from .symgroup import Permutation, coset_decompose


class HeckeElement:
    """An element of the rank-m graded Hecke algebra in normal form.

    terms maps (one_line tuple, exponent tuple) -> nonzero Rational.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None):
        self.m = m
        clean = {}
        for key, c in (terms or {}).items():
            c = rat(c)
            if c:
                w, alpha = key
                clean[(tuple(w), tuple(int(a) for a in alpha))] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(m: int) -> "HeckeElement":
        return HeckeElement(m)

    @staticmethod
    def one(m: int) -> "HeckeElement":
        return HeckeElement(m, {(_id(m), (0,) * m): ONE})

    @staticmethod
    def s_gen(m: int, i: int) -> "HeckeElement":
        w = Permutation.transposition(m, i)
        return HeckeElement(m, {(w.one_line, (0,) * m): ONE})

    @staticmethod
    def y_gen(m: int, j: int) -> "HeckeElement":
        if not 1 <= j <= m:
            raise ValueError("y_%d undefined at rank %d" % (j, m))
        alpha = [0] * m
        alpha[j - 1] = 1
        return HeckeElement(m, {(_id(m), tuple(alpha)): ONE})

    @staticmethod
    def from_permutation(w: Permutation) -> "HeckeElement":
        return HeckeElement(w.m, {(w.one_line, (0,) * w.m): ONE})

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return HeckeElement(self.m, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(-1)

    def scale(self, c) -> "HeckeElement":
        c = rat(c)
        return HeckeElement(self.m, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElement) and self.m == other.m and self.terms == other.terms
        )

    def __hash__(self):  # pragma: no cover
        return hash((self.m, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if self.m != other.m:
            raise ValueError("rank mismatch: %d vs %d" % (self.m, other.m))

    def __repr__(self):  # pragma: no cover
        if not self.terms:
            return "0"
        bits = []
        for (w, alpha), c in sorted(self.terms.items()):
            mono = "".join(
                "y%d^%d" % (j + 1, e) if e > 1 else ("y%d" % (j + 1) if e else "")
                for j, e in enumerate(alpha)
            )
            bits.append("%s*%s%s" % (rat_str(c), w, mono))
        return " + ".join(bits)

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        out = []
        for (w, alpha), c in sorted(self.terms.items()):
            out.append({"w": list(w), "alpha": list(alpha), "c": rat_str(c)})
        return out

    @staticmethod
    def from_json(m: int, arr) -> "HeckeElement":
        terms = {}
        for d in arr:
            terms[(tuple(d["w"]), tuple(d["alpha"]))] = rat(d["c"])
        return HeckeElement(m, terms)


def _id(m: int) -> tuple:
    return tuple(range(1, m + 1))


@lru_cache(maxsize=None)
def _mono_times_s(alpha: tuple, i: int):
    """Normal form of y^alpha * s_i as ((has_s, alpha'), coeff) pairs.

    has_s records whether the term carries the group factor s_i on the left.
    """
    if not any(alpha):
        return (((True, alpha), 1),)
    k = next(j for j, e in enumerate(alpha) if e)  # 0-based position of y_{k+1}
    beta = list(alpha)
    beta[k] -= 1
    out = {}
    for (has_s, a2), c in _mono_times_s(tuple(beta), i):
        if not has_s:
            g = list(a2)
            g[k] += 1
            key = (False, tuple(g))
            out[key] = out.get(key, 0) + c
        else:
            # y_{k+1} * s_i
            tgt = k
            corr = 0
            if k + 1 == i:
                tgt = k + 1
                corr = 1
            elif k + 1 == i + 1:
                tgt = k - 1
                corr = -1
            g = list(a2)
            g[tgt] += 1
            key = (True, tuple(g))
            out[key] = out.get(key, 0) + c
            if corr:
                key = (False, a2)
                out[key] = out.get(key, 0) + corr * c
    return tuple((k, c) for k, c in out.items() if c)


def multiply(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Exact product in normal form."""
    x._check(y)
    m = x.m
    out = {}
    perm_cache = {}
    for (w1, alpha1), c1 in x.terms.items():
        for (w2, alpha2), c2 in y.terms.items():
            if w2 not in perm_cache:
                perm_cache[w2] = Permutation(w2).reduced_word()
            word = perm_cache[w2]
            # push y^alpha1 through the reduced word of w2
            state = {(_id(m), alpha1): ONE}
            for i in word:
                si = Permutation.transposition(m, i)
                new_state = {}
                for (u, alpha), c in state.items():
                    for (has_s, a2), cc in _mono_times_s(alpha, i):
                        u2 = (Permutation(u) * si).one_line if has_s else u
                        key = (u2, a2)
                        new_state[key] = new_state.get(key, ZERO) + c * cc
                state = {k: v for k, v in new_state.items() if v}
            base = c1 * c2
            pw1 = Permutation(w1)
            for (u, alpha), c in state.items():
                wu = (pw1 * Permutation(u)).one_line
                gamma = tuple(a + b for a, b in zip(alpha, alpha2))
                key = (wu, gamma)
                out[key] = out.get(key, ZERO) + base * c
    return HeckeElement(m, out)


def star(x: HeckeElement) -> HeckeElement:
    """The Hermitian anti-involution, extended anti-multiplicatively.

    On a normal-form term c w y^alpha it gives
    c (-1)^{|alpha|} (w0 y^{rev alpha}) (w0^{-1} w^{-1}), renormalized.
    """
    m = x.m
    w0 = Permutation.longest(m)
    out = HeckeElement.zero(m)
    for (w, alpha), c in x.terms.items():
        rev = tuple(reversed(alpha))
        sign = -ONE if sum(alpha) % 2 else ONE
        left = HeckeElement(m, {(w0.one_line, rev): c * sign})
        right = HeckeElement.from_permutation(w0.inverse() * Permutation(w).inverse())
        out = out + multiply(left, right)
    return out


def im_involution(x: HeckeElement) -> HeckeElement:
    """Iwahori-Matsumoto involution: w -> (-1)^l(w) w, y_j -> -y_j."""
    out = {}
    for (w, alpha), c in x.terms.items():
        sign = (-1) ** (Permutation(w).length() + sum(alpha))
        out[(w, alpha)] = c * sign
    return HeckeElement(x.m, out)


def parabolic_decompose(x: HeckeElement, c) -> dict:
    """Decompose x as sum_u u . h_u over minimal left-coset representatives.

    c = (m1, m2) with m1 + m2 = m (zero parts allowed).  Each h_u lies in the
    embedded image of H_{m1} (x) H_{m2}: its group parts stay in the Young
    subgroup and its monomials split across the two index blocks.
    """
    m1, m2 = (int(a) for a in c)
    if m1 < 0 or m2 < 0 or m1 + m2 != x.m:
        raise ValueError("invalid composition %r for rank %d" % (c, x.m))
    comp = tuple(a for a in (m1, m2) if a > 0)
    out = {}
    for (w, alpha), coeff in x.terms.items():
        u, sigma = coset_decompose(Permutation(w), comp)
        key = u.one_line
        part = out.setdefault(key, {})
        tk = (sigma.one_line, alpha)
        part[tk] = part.get(tk, ZERO) + coeff
    return {u: HeckeElement(x.m, terms) for u, terms in out.items()}


def reassemble(decomp: dict, m: int) -> HeckeElement:
    """Inverse of parabolic_decompose: sum_u u * h_u."""
    total = HeckeElement.zero(m)
    for u, h in decomp.items():
        total = total + multiply(HeckeElement.from_permutation(Permutation(u)), h)
    return total


def split_subalgebra_term(w: tuple, alpha: tuple, m1: int):
    """Split a Young-subgroup term into its two tensor factors.

    Returns (w1, alpha1, w2, alpha2) with entries renumbered to ranks m1 and
    m - m1."""
    m = len(w)
    w1 = tuple(w[:m1])
    w2 = tuple(v - m1 for v in w[m1:])
    return w1, tuple(alpha[:m1]), w2, tuple(alpha[m1:])
