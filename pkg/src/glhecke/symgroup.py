"""Symmetric group and partition combinatorics.

Permutations use one-line notation on {1..m}; composition is left-to-right
function composition, (w * u)(x) = w(u(x)).  Coset representatives follow the
left-coset convention: the minimal representative of w(S_c) is the unique
coset element increasing on each block of the composition's domain.

Character values are Murnaghan-Nakayama with memoization; Kostka numbers come
from Gelfand-Tsetlin pattern counts, Littlewood-Richardson coefficients from
lattice-word tableau counting.  Negative dominant weights are handled by a
common integer shift before the partition-based algorithms run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .rational import ONE, ZERO, Rational, as_int, is_integral, rat


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..m} in one-line notation."""

    one_line: tuple

    def __post_init__(self):
        m = len(self.one_line)
        if sorted(self.one_line) != list(range(1, m + 1)):
            raise ValueError("not a permutation of 1..%d: %r" % (m, self.one_line))

    @staticmethod
    def identity(m: int) -> "Permutation":
        return Permutation(tuple(range(1, m + 1)))

    @staticmethod
    def transposition(m: int, i: int) -> "Permutation":
        """The simple transposition s_i swapping i and i+1."""
        if not 1 <= i < m:
            raise ValueError("s_%d undefined at rank %d" % (i, m))
        v = list(range(1, m + 1))
        v[i - 1], v[i] = v[i], v[i - 1]
        return Permutation(tuple(v))

    @staticmethod
    def from_word(m: int, word) -> "Permutation":
        w = Permutation.identity(m)
        for i in word:
            w = w * Permutation.transposition(m, i)
        return w

    @staticmethod
    def longest(m: int) -> "Permutation":
        return Permutation(tuple(range(m, 0, -1)))

    @property
    def m(self) -> int:
        return len(self.one_line)

    def __call__(self, x: int) -> int:
        return self.one_line[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.m != other.m:
            raise ValueError("rank mismatch")
        return Permutation(tuple(self.one_line[other.one_line[x] - 1] for x in range(self.m)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.m
        for x, y in enumerate(self.one_line, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Coxeter length: number of inversions."""
        v = self.one_line
        return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] > v[j])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def reduced_word(self) -> tuple:
        """A reduced word (i1, ..., il) with self = s_{i1} * ... * s_{il}."""
        v = list(self.one_line)
        word = []
        changed = True
        while changed:
            changed = False
            for i in range(len(v) - 1):
                if v[i] > v[i + 1]:
                    v[i], v[i + 1] = v[i + 1], v[i]
                    word.append(i + 1)
                    changed = True
        # v * s_{word} = e, hence self = s reversed
        return tuple(reversed(word))

    def cycle_type(self) -> tuple:
        seen = [False] * self.m
        parts = []
        for x in range(1, self.m + 1):
            if seen[x - 1]:
                continue
            n = 0
            y = x
            while not seen[y - 1]:
                seen[y - 1] = True
                y = self(y)
                n += 1
            parts.append(n)
        return tuple(sorted(parts, reverse=True))


# -- partitions / compositions ------------------------------------------------


def check_partition(p) -> tuple:
    p = tuple(int(x) for x in p)
    if any(a <= 0 for a in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError("not a partition: %r" % (p,))
    return p


def partitions(n: int):
    """All partitions of n, reverse-lexicographic ((n) first)."""

    def gen(n, maxpart):
        if n == 0:
            yield ()
            return
        for k in range(min(n, maxpart), 0, -1):
            for rest in gen(n - k, k):
                yield (k,) + rest

    return list(gen(n, n))


def conjugate_partition(p) -> tuple:
    p = check_partition(p) if p else ()
    if not p:
        return ()
    return tuple(sum(1 for a in p if a > i) for i in range(p[0]))


def hook_dimension(p) -> int:
    """Number of standard Young tableaux of shape p (hook-length formula)."""
    p = check_partition(p) if p else ()
    n = sum(p)
    conj = conjugate_partition(p)
    prod = 1
    for i, row in enumerate(p):
        for j in range(row):
            prod *= row - j + conj[j] - i - 1
    return factorial(n) // prod


def cycle_class_size(ct) -> int:
    """Size of the S_m conjugacy class with the given cycle type."""
    m = sum(ct)
    z = 1
    counts = {}
    for k in ct:
        counts[k] = counts.get(k, 0) + 1
    for k, c in counts.items():
        z *= k**c * factorial(c)
    return factorial(m) // z


@lru_cache(maxsize=None)
def _mn(shape: tuple, ct: tuple) -> int:
    """Murnaghan-Nakayama recursion via beta-sets.

    Border strips of size r removable from `shape` correspond to beta-numbers
    b with b - r >= 0 and b - r not already a beta-number; the strip height is
    the number of beta-numbers strictly between b - r and b.
    """
    if not ct:
        return 1
    r = ct[0]
    rest = ct[1:]
    k = len(shape) + r  # enough rows to expose every strip
    padded = list(shape) + [0] * (k - len(shape))
    beta = [padded[i] + (k - 1 - i) for i in range(k)]  # strictly decreasing
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_shape = tuple(
            x - (k - 1 - i) for i, x in enumerate(new_beta) if x - (k - 1 - i) > 0
        )
        total += (-1) ** height * _mn(new_shape, rest)
    return total


def sm_character(p, cycle_type) -> Rational:
    """Exact irreducible S_m character value chi_p(cycle_type)."""
    p = check_partition(p)
    ct = check_partition(cycle_type)
    if sum(p) != sum(ct):
        raise ValueError("partition sizes differ: %r vs %r" % (p, ct))
    return rat(_mn(p, ct))


# -- coset representatives ----------------------------------------------------


def check_composition(c) -> tuple:
    c = tuple(int(x) for x in c)
    if not c or any(a < 1 for a in c):
        raise ValueError("composition parts must be positive: %r" % (c,))
    return c


def composition_blocks(c) -> list:
    """Domain blocks [ranges] of a composition, 1-based inclusive."""
    blocks = []
    start = 1
    for part in c:
        blocks.append(range(start, start + part))
        start += part
    return blocks


def min_coset_reps(c) -> list:
    """Minimal-length representatives of S_m / (S_{c1} x ... x S_{ck}).

    Each representative is increasing on every block of the composition's
    domain; there are m!/(prod c_i!) of them.  Order is deterministic
    (lexicographic in one-line notation).
    """
    c = check_composition(c)
    m = sum(c)
    blocks = composition_blocks(c)

    def assign(avail, bi):
        if bi == len(blocks):
            yield ()
            return
        size = len(blocks[bi])
        for chosen in itertools.combinations(sorted(avail), size):
            rest = avail - set(chosen)
            for tail in assign(rest, bi + 1):
                yield chosen + tail

    reps = []
    for values in assign(set(range(1, m + 1)), 0):
        reps.append(Permutation(values))
    reps.sort(key=lambda w: w.one_line)
    return reps


def coset_decompose(w: Permutation, c) -> tuple:
    """Write w = u * sigma with u the minimal left-coset rep, sigma in S_c."""
    c = tuple(int(x) for x in c if int(x) > 0)
    blocks = composition_blocks(c)
    one = list(w.one_line)
    u = list(one)
    for b in blocks:
        vals = sorted(one[x - 1] for x in b)
        for x, v in zip(b, vals):
            u[x - 1] = v
    u = Permutation(tuple(u))
    sigma = u.inverse() * w
    return u, sigma


# -- weight multiplicities ----------------------------------------------------


def _dominant_int_vector(v) -> tuple:
    v = tuple(rat(x) for x in v)
    if any(v[i] < v[i + 1] for i in range(len(v) - 1)):
        raise ValueError("weight not dominant: %r" % (v,))
    return v


def as_int_floor(x) -> int:
    x = rat(x)
    return x.numerator // x.denominator


def _common_shift_to_ints(*vectors):
    """Remove a shared fractional part, returning integer tuples.

    Every entry across all vectors must be congruent mod 1 (a common rational
    shift, tolerated and normalized away here); raises ValueError otherwise.
    """
    allv = [rat(x) for vec in vectors for x in vec]
    if not allv:
        return [tuple(v) for v in vectors]
    frac = allv[0] - as_int_floor(allv[0])
    for x in allv:
        if not is_integral(x - frac):
            raise ValueError("entries do not share an integral structure")
    return [tuple(as_int(rat(x) - frac) for x in vec) for vec in vectors]


def kostka(gamma, mu) -> int:
    """Multiplicity of weight mu in the irreducible GL_n-module F_gamma.

    Computed by Gelfand-Tsetlin pattern enumeration after a common integer
    shift making all entries nonnegative.  gamma must be dominant.
    """
    gamma = _dominant_int_vector(gamma)
    mu = tuple(rat(x) for x in mu)
    if len(gamma) != len(mu):
        raise ValueError("length mismatch")
    if sum(gamma) != sum(mu):
        return 0
    # gamma and mu must differ by integer vectors for a nonzero count
    try:
        g, m = _common_shift_to_ints(gamma, mu)
    except ValueError:
        return 0
    if any(x < 0 for x in g + m):
        bump = -min(g + m)
        g = tuple(x + bump for x in g)
        m = tuple(x + bump for x in m)

    n = len(g)

    @lru_cache(maxsize=None)
    def count(row: tuple, level: int) -> int:
        # row has `level` entries; consume weight m[level-1] going down
        if level == 1:
            return 1 if row[0] == m[0] else 0
        target = sum(row) - m[level - 1]
        total = 0
        for nxt in _interlacing(row, target):
            total += count(nxt, level - 1)
        return total

    def _interlacing(row, target):
        # all weakly decreasing rows nxt with row[i] >= nxt[i] >= row[i+1]
        k = len(row) - 1

        def rec(i, acc, remaining):
            if i == k:
                if remaining == 0:
                    yield tuple(acc)
                return
            hi = row[i] if not acc else min(row[i], acc[-1])
            lo = row[i + 1]
            for v in range(lo, hi + 1):
                # bound feasibility of the remainder
                rest_hi = sum(min(row[j], v) for j in range(i + 1, k))
                rest_lo = sum(row[j + 1] for j in range(i + 1, k))
                if rest_lo <= remaining - v <= rest_hi:
                    yield from rec(i + 1, acc + [v], remaining - v)

        if k == 0:
            if target == 0:
                yield ()
            return
        yield from rec(0, [], target)

    return count(tuple(g), n)


def weyl_dimension(gamma) -> int:
    """Dimension of the irreducible GL_n-module with highest weight gamma."""
    gamma = _dominant_int_vector(gamma)
    n = len(gamma)
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= as_int((gamma[i] - gamma[j])) + (j - i)
            den *= j - i
    return num // den


def lr_coefficient(a, b, gamma) -> int:
    """Littlewood-Richardson coefficient c^gamma_{a,b} for GL_n weights.

    Invariant under the simultaneous shift a -> a + k(1,..,1),
    gamma -> gamma + k(1,..,1); weight-sum mismatches return 0.
    """
    a = _dominant_int_vector(a)
    b = _dominant_int_vector(b)
    gamma = _dominant_int_vector(gamma)
    if not (len(a) == len(b) == len(gamma)):
        raise ValueError("length mismatch")
    if sum(a) + sum(b) != sum(gamma):
        return 0
    n = len(a)
    # each vector must be integrally spaced within itself, and the fractional
    # parts must be compatible: frac(gamma) = frac(a) + frac(b) mod 1
    (a2,) = _common_shift_to_ints(a)
    (b2,) = _common_shift_to_ints(b)
    fa = a[0] - a2[0]
    fb = b[0] - b2[0]
    g_shift = [rat(x) - fa - fb for x in gamma]
    if not all(is_integral(x) for x in g_shift):
        return 0
    g2 = tuple(as_int(x) for x in g_shift)
    ka = -min(min(a2), 0)
    a2 = tuple(x + ka for x in a2)
    g2 = tuple(x + ka for x in g2)
    kb = -min(min(b2), 0)
    b2 = tuple(x + kb for x in b2)
    g2 = tuple(x + kb for x in g2)
    if any(x < 0 for x in g2):
        return 0
    if any(a2[i] > g2[i] for i in range(n)):
        return 0
    return _lr_tableaux(a2, b2, g2)


def _lr_tableaux(inner, content, outer) -> int:
    """Count LR skew tableaux of shape outer/inner with the given content.

    Column-strict fillings whose reverse reading word is a lattice word.
    """
    n = len(outer)
    rows = [(inner[i], outer[i]) for i in range(n)]
    total = 0

    def fill(i, tableau, counts):
        nonlocal total
        if i == n:
            total += 1
            return
        lo, hi = rows[i]
        width = hi - lo

        # cells are placed right-to-left so that the running counts follow the
        # reverse reading word, where the lattice condition is prefix-checked
        def cells_rl(j, row_rev):
            if j == width:
                row = list(reversed(row_rev))
                if any(row[t] > row[t + 1] for t in range(width - 1)):
                    return
                fill(i + 1, tableau + [row], counts)
                return
            col = hi - 1 - j
            above = None
            if i > 0:
                pin, pout = rows[i - 1]
                if pin <= col < pout:
                    above = tableau[i - 1][col - pin]
            for v in range(1, len(content) + 1):
                if counts[v - 1] >= content[v - 1]:
                    continue
                if above is not None and v <= above:
                    continue
                if v > 1 and counts[v - 1] + 1 > counts[v - 2]:
                    continue  # lattice word violated
                counts[v - 1] += 1
                cells_rl(j + 1, row_rev + [v])
                counts[v - 1] -= 1

        cells_rl(0, [])

    fill(0, [], [0] * len(content))
    return total


# -- Young seminormal representation -----------------------------------------


def standard_tableaux(p) -> list:
    """All standard Young tableaux of shape p, as tuples of row tuples."""
    p = check_partition(p)
    n = sum(p)

    def rec(filled, rows):
        if filled == n:
            yield tuple(tuple(r) for r in rows)
            return
        v = filled + 1
        for i in range(len(p)):
            if len(rows[i]) < p[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                yield from rec(filled + 1, rows)
                rows[i].pop()

    return list(rec(0, [[] for _ in p]))


def seminormal_rep(p) -> list:
    """Young's seminormal matrices for s_1..s_{k-1} on SYT(p), exact over Q.

    Returns a list of (dim x dim) row-lists; the representation is rational
    (the orthogonal form would need square roots, the seminormal one does not).
    """
    p = check_partition(p)
    k = sum(p)
    tabs = standard_tableaux(p)
    index = {t: i for i, t in enumerate(tabs)}
    dim = len(tabs)

    def position(t, v):
        for i, row in enumerate(t):
            for j, x in enumerate(row):
                if x == v:
                    return i, j
        raise AssertionError

    def swap(t, v):
        rows = [list(r) for r in t]
        (i1, j1), (i2, j2) = position(t, v), position(t, v + 1)
        rows[i1][j1], rows[i2][j2] = rows[i2][j2], rows[i1][j1]
        cand = tuple(tuple(r) for r in rows)
        return cand if cand in index else None

    mats = []
    for s in range(1, k):
        m = [[ZERO] * dim for _ in range(dim)]
        for t, ti in index.items():
            (i1, j1), (i2, j2) = position(t, s), position(t, s + 1)
            d = (j2 - i2) - (j1 - i1)  # axial distance
            dr = ONE / rat(d)
            other = swap(t, s)
            m[ti][ti] = dr  # same row: d=1 -> +1; same column: d=-1 -> -1
            if other is not None:
                oi = index[other]
                # column ti holds the image of e_ti; the pair convention is
                # coefficient 1 on the positive-distance side
                m[oi][ti] = ONE if d > 0 else ONE - dr * dr
        mats.append(m)
    return mats
