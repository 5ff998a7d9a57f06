"""Dense exact linear algebra over Q.

Matrices are dense and row-major; every kernel here (echelon forms, linear
solves, generalized eigenspaces, Sylvester signatures, characteristic
polynomials) is exact.  Pivoting is deterministic (first nonzero) so echelon
forms and all downstream results are reproducible.

Matrices are immutable after construction in spirit: no public method mutates
entries, so values can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import ONE, ZERO, Rational, rat


class Matrix:
    """Dense rows x cols matrix of Rationals, entries stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_nz")

    def __init__(self, rows: int, cols: int, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count %d != %d x %d" % (len(entries), rows, cols))
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._nz = None

    # -- construction -----------------------------------------------------

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, [ZERO] * (rows * cols))

    @staticmethod
    def identity(n: int) -> "Matrix":
        m = [ZERO] * (n * n)
        for i in range(n):
            m[i * n + i] = ONE
        return Matrix(n, n, m)

    @staticmethod
    def from_rows(rows) -> "Matrix":
        rows = [[rat(x) for x in r] for r in rows]
        n = len(rows)
        c = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != c:
                raise ValueError("ragged rows")
            flat.extend(r)
        return Matrix(n, c, flat)

    @staticmethod
    def diagonal(values) -> "Matrix":
        values = [rat(v) for v in values]
        n = len(values)
        m = [ZERO] * (n * n)
        for i, v in enumerate(values):
            m[i * n + i] = v
        return Matrix(n, n, m)

    @staticmethod
    def column(vec) -> "Matrix":
        vec = [rat(v) for v in vec]
        return Matrix(len(vec), 1, vec)

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i) -> list:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_lists(self):
        return [self.row(i) for i in range(self.rows)]

    def nonzeros(self):
        """Cached list of (i, j, value) over nonzero entries."""
        if self._nz is None:
            nz = []
            e = self.entries
            c = self.cols
            for k, v in enumerate(e):
                if v:
                    nz.append((k // c, k % c, v))
            self._nz = nz
        return self._nz

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):  # pragma: no cover
        return hash((self.rows, self.cols, tuple(self.entries)))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = [ZERO] * (self.rows * other.cols)
        oc = other.cols
        for i, k, v in self.nonzeros():
            orow = other.entries[k * oc : (k + 1) * oc]
            base = i * oc
            for j, w in enumerate(orow):
                if w:
                    out[base + j] += v * w
        return Matrix(self.rows, other.cols, out)

    def mat_vec(self, vec) -> list:
        """Apply to a column vector (sparse-aware)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = [ZERO] * self.rows
        for i, j, v in self.nonzeros():
            w = vec[j]
            if w:
                out[i] += v * w
        return out

    def transpose(self) -> "Matrix":
        out = [ZERO] * (self.rows * self.cols)
        for i, j, v in self.nonzeros():
            out[j * self.rows + i] = v
        return Matrix(self.cols, self.rows, out)

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), ZERO)

    def is_zero(self) -> bool:
        return all(not v for v in self.entries)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(i + 1, self.cols):
                if self[i, j] != self[j, i]:
                    return False
        return True

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __repr__(self):  # pragma: no cover
        return "Matrix(%d x %d)" % (self.rows, self.cols)


# -- echelon machinery -------------------------------------------------------


def rref(rows):
    """Reduced row echelon form of a list of row lists (copied, exact).

    Returns (rref_rows, pivot_columns).  First-nonzero pivoting.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = ONE / rows[r][c]
        if inv != ONE:
            rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [a - f * b for a, b in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


class RowSpace:
    """Incrementally built row space with reduced echelon basis.

    add() reduces a vector against the current basis and inserts the residue
    when nonzero; contains()/reduce() answer membership questions.  This is
    the workhorse behind orbit spans and algebra closures.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows = []      # echelon rows, each normalized to pivot 1
        self.pivots = []    # pivot column per row, increasing order not enforced

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert vec's residue; True if the dimension grew."""
        v = self.reduce(vec)
        p = None
        for j, x in enumerate(v):
            if x:
                p = j
                break
        if p is None:
            return False
        inv = ONE / v[p]
        if inv != ONE:
            v = [x * inv for x in v]
        # back-reduce existing rows against the new pivot
        for i, row in enumerate(self.rows):
            c = row[p]
            if c:
                self.rows[i] = [a - c * b for a, b in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, vec) -> bool:
        return all(not x for x in self.reduce(vec))

    def basis(self) -> list:
        return [list(r) for r in self.rows]


class Subspace:
    """A subspace with a fixed spanning basis and coordinate solving.

    Keeps an augmented echelon form so that express() writes any member of
    the space in the original basis coordinates.
    """

    def __init__(self, basis_vectors):
        self.vectors = [list(v) for v in basis_vectors]
        if not self.vectors:
            self.ncols = 0
        else:
            self.ncols = len(self.vectors[0])
        self._rows = []
        self._coeffs = []
        self._pivots = []
        for idx, v in enumerate(self.vectors):
            coeff = [ZERO] * len(self.vectors)
            coeff[idx] = ONE
            r, c = self._reduce(v, coeff)
            p = next((j for j, x in enumerate(r) if x), None)
            if p is None:
                raise ValueError("basis vectors are dependent")
            inv = ONE / r[p]
            if inv != ONE:
                r = [x * inv for x in r]
                c = [x * inv for x in c]
            self._rows.append(r)
            self._coeffs.append(c)
            self._pivots.append(p)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def _reduce(self, vec, coeff):
        v = list(vec)
        c = list(coeff)
        for row, cc, p in zip(self._rows, self._coeffs, self._pivots):
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
                c = [a - f * b for a, b in zip(c, cc)]
        return v, c

    def express(self, vec):
        """Coordinates of vec in the spanning basis, or None if outside."""
        v, c = self._reduce(vec, [ZERO] * len(self.vectors))
        if any(x for x in v):
            return None
        return [-x for x in c]


# -- solving ------------------------------------------------------------------


@dataclass
class LinearSolution:
    """Outcome of an exact linear solve A X = B."""

    consistent: bool
    particular: Matrix | None      # one solution, cols matching B
    nullspace: list                # basis vectors of ker A

    @property
    def nullity(self) -> int:
        return len(self.nullspace)


def nullspace(A: Matrix) -> list:
    """Exact basis of ker(A) as a list of length-cols vectors."""
    rows, pivots = rref(A.to_lists())
    free = [j for j in range(A.cols) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * A.cols
        v[f] = ONE
        for r, p in zip(rows, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis


def solve_linear(A: Matrix, B: Matrix) -> LinearSolution:
    """Solve A X = B exactly: particular solution plus nullspace basis.

    Raises ValueError on a row-count mismatch.  Inconsistent systems return
    consistent=False with no particular solution.
    """
    if A.rows != B.rows:
        raise ValueError("A and B must have the same number of rows")
    aug = [A.row(i) + B.row(i) for i in range(A.rows)]
    rows, pivots = rref(aug)
    n = A.cols
    for r, p in zip(rows, pivots):
        if p >= n:
            return LinearSolution(False, None, nullspace(A))
    part = [[ZERO] * B.cols for _ in range(n)]
    for r, p in zip(rows, pivots):
        for j in range(B.cols):
            part[p][j] = r[n + j]
    particular = Matrix.from_rows(part) if n else Matrix.zeros(0, B.cols)
    return LinearSolution(True, particular, nullspace(A))


def generalized_eigenspace(A: Matrix, lam) -> list:
    """Basis of ker((A - lam I)^rows): the full generalized eigenspace."""
    if A.rows != A.cols:
        raise ValueError("square matrix required")
    lam = rat(lam)
    n = A.rows
    M = A - Matrix.identity(n).scale(lam)
    power = M
    prev_dim = -1
    basis = []
    for _ in range(n):
        basis = nullspace(power)
        if len(basis) == prev_dim:
            break
        prev_dim = len(basis)
        if len(basis) == n:
            break
        power = power * M
    return basis


def symmetric_signature(S: Matrix):
    """Sylvester signature (positive, negative, zero) of a symmetric matrix.

    Exact symmetric (Lagrange) congruence diagonalization; raises ValueError
    on non-symmetric input.
    """
    if not S.is_symmetric():
        raise ValueError("symmetric matrix required")
    n = S.rows
    m = S.to_lists()
    pos = neg = 0
    for k in range(n):
        if not m[k][k]:
            # look for a later nonzero diagonal entry to swap in
            sw = next((j for j in range(k + 1, n) if m[j][j]), None)
            if sw is not None:
                m[k], m[sw] = m[sw], m[k]
                for row in m:
                    row[k], row[sw] = row[sw], row[k]
            else:
                # all remaining diagonal zero: find off-diagonal entry
                hit = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if m[i][j]:
                            hit = (i, j)
                            break
                    if hit:
                        break
                if hit is None:
                    break  # remaining block is zero
                i, j = hit
                # row/col i += row/col j makes m[i][i] = 2 m[i][j] != 0
                m[i] = [a + b for a, b in zip(m[i], m[j])]
                for row in m:
                    row[i] = row[i] + row[j]
                if i != k:
                    m[k], m[i] = m[i], m[k]
                    for row in m:
                        row[k], row[i] = row[i], row[k]
        piv = m[k][k]
        if not piv:
            break
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = m[i][k] / piv
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
                for row in m:
                    row[i] = row[i] - f * row[k]
    return pos, neg, n - pos - neg


def char_poly(A: Matrix) -> list:
    """Characteristic polynomial det(tI - A) via Faddeev-LeVerrier.

    Returns coefficients [c0, c1, ..., c_{n-1}, 1] with p(t) = sum c_k t^k.
    """
    if A.rows != A.cols:
        raise ValueError("square matrix required")
    n = A.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    M = Matrix.zeros(n, n)
    I = Matrix.identity(n)
    for k in range(1, n + 1):
        M = A * M + I.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(A * M).trace() / k
    return coeffs


def _small_prime_factors(n: int, bound: int = 100000):
    """Trial-division factorization; raises if a cofactor survives the bound.

    Eigenvalue data in this engine is built from half-integers with small
    numerators, so constant terms factor completely over small primes.
    """
    n = abs(n)
    factors = {}
    d = 2
    while d * d <= n and d <= bound:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if n > bound * bound:
            raise ArithmeticError("constant term does not factor over small primes")
        factors[n] = factors.get(n, 0) + 1
    return factors


def _divisors(factors):
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots(coeffs):
    """All rational roots (with multiplicity) of a Rational-coefficient poly.

    Returns (roots_with_multiplicity, fully_split) where fully_split is True
    when the polynomial factors completely into rational linear factors.
    Candidate roots come from the rational root theorem after clearing
    denominators.
    """
    from math import lcm

    coeffs = [rat(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial")
    roots = []
    while len(coeffs) > 1 and not coeffs[0]:
        coeffs.pop(0)
        roots.append(ZERO)
    if len(coeffs) == 1:
        return roots, True
    den = lcm(*[int(c.denominator) for c in coeffs])
    ints = [int(c * den) for c in coeffs]
    candidates = set()
    for q in _divisors(_small_prime_factors(ints[-1])):
        for p in _divisors(_small_prime_factors(ints[0])):
            candidates.add(Rational(p, q))
            candidates.add(Rational(-p, q))
    for cand in sorted(candidates):
        while len(coeffs) > 1:
            acc = ZERO
            for c in reversed(coeffs):
                acc = acc * cand + c
            if acc:
                break
            # synthetic division by (t - cand); cand != 0 keeps coeffs[0] != 0
            newc = []
            carry = ZERO
            for c in reversed(coeffs[1:]):
                carry = carry * cand + c
                newc.append(carry)
            coeffs = list(reversed(newc))
            roots.append(cand)
    return roots, len(coeffs) == 1


def determinant(A: Matrix):
    """Exact determinant by fraction-preserving Gaussian elimination."""
    if A.rows != A.cols:
        raise ValueError("square matrix required")
    m = A.to_lists()
    n = A.rows
    det = ONE
    for k in range(n):
        pr = next((i for i in range(k, n) if m[i][k]), None)
        if pr is None:
            return ZERO
        if pr != k:
            m[k], m[pr] = m[pr], m[k]
            det = -det
        piv = m[k][k]
        det *= piv
        for i in range(k + 1, n):
            if m[i][k]:
                f = m[i][k] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    return det
