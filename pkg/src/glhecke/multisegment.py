"""Segments, multisegments and their Zelevinsky-style operations.

A segment [a,b] is the arithmetic progression {a, a+1, ..., b} with rational
endpoints and integral length; b = a-1 encodes the empty segment.  A
multisegment is a multiset of nonempty segments, stored canonically in
normalized order (start descending, then end descending).

Endpoints are restricted to rationals: the complex case is out of scope for
this engine and inputs carrying imaginary parts are rejected at construction,
never silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .rational import ONE, Rational, as_int, is_integral, rat, rat_str, rat_vector


@total_ordering
@dataclass(frozen=True)
class Segment:
    """The segment [a, b]; empty when b = a - 1."""

    a: Rational
    b: Rational

    def __post_init__(self):
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "b", rat(self.b))
        if not is_integral(self.b - self.a):
            raise ValueError("segment endpoints must differ by an integer")
        if self.b - self.a < -1:
            raise ValueError("segment [%s,%s] has negative length" % (self.a, self.b))

    @staticmethod
    def point(c) -> "Segment":
        return Segment(c, c)

    @property
    def is_empty(self) -> bool:
        return self.b == self.a - 1

    @property
    def length(self) -> int:
        return as_int(self.b - self.a) + 1

    def elements(self) -> list:
        return [self.a + k for k in range(self.length)]

    def contains(self, other: "Segment") -> bool:
        return self.a <= other.a and other.b <= self.b

    def negated(self) -> "Segment":
        """The segment -[a,b] = [-b,-a]."""
        return Segment(-self.b, -self.a)

    def __lt__(self, other):
        return (self.a, self.b) < (other.a, other.b)

    def __repr__(self):
        return "[%s,%s]" % (rat_str(self.a), rat_str(self.b))

    def to_json(self):
        return {"a": rat_str(self.a), "b": rat_str(self.b)}

    @staticmethod
    def from_json(d) -> "Segment":
        return Segment(rat(d["a"]), rat(d["b"]))


def is_linked(s1: Segment, s2: Segment) -> bool:
    """Linked: the union is a segment and neither contains the other."""
    if s1.is_empty or s2.is_empty:
        raise ValueError("linkedness undefined for empty segments")
    if not is_integral(s1.a - s2.a):
        return False  # different translation classes never interact
    if s1.contains(s2) or s2.contains(s1):
        return False
    # union is a segment iff the intervals overlap or abut
    lo, hi = (s1, s2) if s1.a <= s2.a else (s2, s1)
    return hi.a <= lo.b + 1


def precedes(s1: Segment, s2: Segment) -> bool:
    """s1 < s2 in the Zelevinsky order: linked with s1 starting earlier."""
    return is_linked(s1, s2) and s1.a < s2.a


class Multisegment:
    """An immutable multiset of nonempty segments in normalized order."""

    __slots__ = ("segments",)

    def __init__(self, segments=()):
        segs = []
        for s in segments:
            if not isinstance(s, Segment):
                s = Segment(*s)
            if not s.is_empty:
                segs.append(s)
        segs.sort(key=lambda s: (-s.a, -s.b))
        object.__setattr__(self, "segments", tuple(segs))

    def __setattr__(self, *a):  # immutability guard
        raise AttributeError("Multisegment is immutable")

    def __iter__(self):
        return iter(self.segments)

    def __len__(self):
        return len(self.segments)

    def __eq__(self, other):
        return isinstance(other, Multisegment) and self.segments == other.segments

    def __hash__(self):
        return hash(self.segments)

    def __repr__(self):
        return "{%s}" % ", ".join(repr(s) for s in self.segments)

    @property
    def total(self) -> int:
        """Sum of segment lengths (the rank of the attached module)."""
        return sum(s.length for s in self.segments)

    def content(self) -> tuple:
        """Sorted multiset of all segment elements."""
        out = []
        for s in self.segments:
            out.extend(s.elements())
        return tuple(sorted(out))

    def negated(self) -> "Multisegment":
        return Multisegment(s.negated() for s in self.segments)

    def to_json(self):
        return [s.to_json() for s in self.segments]

    @staticmethod
    def from_json(arr) -> "Multisegment":
        return Multisegment(Segment.from_json(d) for d in arr)


def normalize_order(m: Multisegment) -> tuple:
    """Segments sorted with starts descending (ties: ends descending).

    This realizes the no-precedes chain condition: with starts descending no
    adjacent pair can satisfy precedes().
    """
    return m.segments


def from_params(lambda_l, lambda_r) -> Multisegment:
    """The multisegment {[lambda_R_i + 1/2, lambda_L_i - 1/2]}, empties dropped.

    Requires lambda_L - lambda_R integral and coordinatewise >= 0.
    """
    ll = rat_vector(lambda_l)
    lr = rat_vector(lambda_r)
    if len(ll) != len(lr):
        raise ValueError("length mismatch")
    half = Rational(1, 2)
    segs = []
    for x, y in zip(ll, lr):
        if not is_integral(x - y):
            raise ValueError("lambda_L - lambda_R must be integral")
        if x - y < 0:
            raise ValueError("negative-height coordinate: %s - %s" % (x, y))
        segs.append(Segment(y + half, x - half))
    return Multisegment(segs)


def left_shrink(m: Multisegment) -> Multisegment:
    """Shrink every [a,b] to [a+1,b], dropping segments that become empty."""
    return Multisegment(Segment(s.a + 1, s.b) for s in m)


def speh(n: int, d: int) -> Multisegment:
    """The Speh multisegment: n segments of length d, each shifted down by 1.

    Segment k (k = 0..n-1) is [(n-d)/2 - k, (n+d)/2 - 1 - k]; total = n*d.
    """
    if n < 1 or d < 1:
        raise ValueError("n, d must be >= 1")
    lo = Rational(n - d, 2)
    hi = Rational(n + d, 2) - 1
    return Multisegment(Segment(lo - k, hi - k) for k in range(n))


@dataclass(frozen=True)
class ClassifyReport:
    content: tuple
    is_ladder: bool
    is_twisted_elliptic: bool
    temp_witness: Multisegment | None
    total: int


def classify(m: Multisegment) -> ClassifyReport:
    """Content, ladder and twisted-elliptic status of a multisegment.

    Twisted-elliptic: the content matches that of some {[-c_i, c_i]}.  The
    search is greedy and complete: the maximal remaining content element M
    must be the top of a symmetric segment [-M, M], so the witness is forced
    step by step.
    """
    content = list(m.content())
    segs = m.segments
    is_ladder = bool(segs) and all(
        segs[i].a > segs[i + 1].a and segs[i].b > segs[i + 1].b for i in range(len(segs) - 1)
    )
    remaining = list(content)
    witness = []
    elliptic = True
    while remaining:
        top = remaining[-1]
        if top < 0:
            elliptic = False
            break
        need = Segment(-top, top).elements()
        rem = list(remaining)
        ok = True
        for x in need:
            if x in rem:
                rem.remove(x)
            else:
                ok = False
                break
        if not ok:
            elliptic = False
            break
        witness.append(Segment(-top, top))
        remaining = rem
    report_witness = Multisegment(witness) if elliptic and witness else (
        Multisegment([]) if elliptic else None
    )
    return ClassifyReport(
        content=tuple(content),
        is_ladder=is_ladder,
        is_twisted_elliptic=elliptic,
        temp_witness=report_witness,
        total=m.total,
    )


def dirac_series_test(evens, odds) -> bool:
    """Dirac-series membership test for a product of Speh factors.

    Each list holds (n, d) pairs for one parity family: within a family all
    n+d-1 must share a parity, and the two families (when both nonempty) must
    have opposite parities.  Within each family, in the given order, the
    interlaced chain n_i+d_i-1 >= -n_i+d_i+1 > n_{i+1}+d_{i+1}-1 >= ... must
    hold (weak inside a factor, strict between factors).
    """

    def chain_ok(lst):
        vals = []
        for n, d in lst:
            if n < 1 or d < 1:
                raise ValueError("Speh parameters must be >= 1")
            hi = n + d - 1
            lo = -n + d + 1
            if hi < lo:
                return False  # never happens for n >= 1: hi - lo = 2n - 2 >= 0
            vals.append((hi, lo))
        for i in range(len(vals) - 1):
            if not vals[i][1] > vals[i + 1][0]:
                return False
        return True

    def parity(lst):
        ps = {(n + d - 1) % 2 for n, d in lst}
        return ps

    pe, po = parity(evens), parity(odds)
    if len(pe) > 1 or len(po) > 1:
        return False
    if pe and po and pe == po:
        return False
    return chain_ok(evens) and chain_ok(odds)


def intersection_union_closure(m: Multisegment) -> set:
    """Smallest set containing m closed under linked-pair union/intersection.

    A linked pair D1 < D2 is replaced by {D1 u D2, D1 n D2}, dropping empty
    intersections.  Terminates because each operation strictly lowers the
    sorted-length key of the multisegment.
    """
    seen = {m}
    frontier = [m]
    while frontier:
        cur = frontier.pop()
        segs = cur.segments
        for i in range(len(segs)):
            for j in range(len(segs)):
                if i == j:
                    continue
                s1, s2 = segs[i], segs[j]
                if not precedes(s1, s2):
                    continue
                union = Segment(min(s1.a, s2.a), max(s1.b, s2.b))
                inter = Segment(max(s1.a, s2.a), min(s1.b, s2.b) )
                rest = list(segs)
                for k in sorted((i, j), reverse=True):
                    del rest[k]
                rest.append(union)
                if not inter.is_empty:
                    rest.append(inter)
                new = Multisegment(rest)
                if new not in seen:
                    seen.add(new)
                    frontier.append(new)
    return seen


def multisegments_with_content(content) -> list:
    """All multisegments whose content equals the given multiset.

    Enumerated by repeatedly choosing the segment covering the largest
    remaining element; used to list candidate simple modules sharing a
    central character.
    """
    content = tuple(sorted(rat(x) for x in content))

    def rec(remaining):
        if not remaining:
            yield ()
            return
        top = remaining[-1]
        # segments [a, top] consuming elements from the remainder
        a = top
        while True:
            seg = Segment(a, top)
            rem = list(remaining)
            ok = True
            for x in seg.elements():
                if x in rem:
                    rem.remove(x)
                else:
                    ok = False
                    break
            if not ok:
                break
            for rest in rec(tuple(rem)):
                yield (seg,) + rest
            a = a - 1
    out = {Multisegment(segs) for segs in rec(content)}
    return sorted(out, key=lambda ms: tuple((-s.a, -s.b) for s in ms.segments))
