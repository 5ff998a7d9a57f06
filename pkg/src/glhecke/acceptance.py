"""The acceptance suite: one callable per criterion, shared by CLI and tests.

Every criterion is exact (tolerance zero).  Sweeps run over fixed,
deterministic grids defined here; modules constructed along the way are
registered so the relation-integrity criterion can audit them afterwards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import caps
from .gl_params import (
    GLParam,
    height,
    hermitian_dual,
    pair_reducibility,
    speh_param,
)
from .hecke_modules import (
    HeckeModule,
    bz_derivative,
    character_module,
    check_relations,
    composition_factors,
    hermitian_form,
    hom_space,
    im_twist,
    induce,
    is_absolutely_irreducible,
    is_isomorphic,
    is_simple,
    simple_module,
    standard_module,
    star_dual,
    steinberg,
    weights,
)
from .multisegment import (
    Multisegment,
    Segment,
    classify,
    from_params,
    is_linked,
    left_shrink,
    speh,
)
from .rational import Rational, rat
from .symgroup import partitions
from .transfer import (
    check_parabolic_compat,
    check_schur_weyl,
    direct_model,
    gamma_dim,
    gamma_irreducible,
    gamma_standard,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str


class _Registry:
    """Modules built during the run, audited by the relation criterion."""

    def __init__(self, dim_cap=260):
        self.modules = []
        self.dim_cap = dim_cap

    def track(self, mod: HeckeModule) -> HeckeModule:
        if mod.dim <= self.dim_cap:
            self.modules.append(mod)
        return mod


H = Rational(1, 2)


def param_grid():
    """The fixed parameter grid: n <= 3, rational entries, heights <= 5.

    Includes half-integral parameters and several height-minus-infinity
    entries; deterministic order.
    """
    grid = []
    # n = 1
    for b in (rat(-1), -H, rat(0), H, rat(1)):
        for mu in range(0, 5):
            grid.append(GLParam((b + mu,), (b,)))
    grid.append(GLParam((0,), (1,)))       # height -inf
    grid.append(GLParam((-H,), (H,)))      # height -inf
    # n = 2
    base_r2 = ((rat(0), rat(0)), (rat(1), rat(0)), (H, -H), (rat(0), rat(-1)))
    mus2 = ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 1), (1, 3), (0, 2), (4, 1))
    for lr in base_r2:
        for mu in mus2:
            grid.append(GLParam(tuple(x + m for x, m in zip(lr, mu)), lr))
    grid.append(GLParam((0, 1), (1, 0)))   # height -inf
    grid.append(GLParam((2, 0), (1, 1)))   # height -inf
    # n = 3
    base_r3 = ((rat(0), rat(0), rat(0)), (rat(1), rat(0), rat(-1)), (H, -H, rat(-3) / 2))
    mus3 = ((1, 1, 1), (2, 1, 0), (1, 0, 1), (2, 2, 1), (1, 1, 3), (0, 1, 0))
    for lr in base_r3:
        for mu in mus3:
            grid.append(GLParam(tuple(x + m for x, m in zip(lr, mu)), lr))
    grid.append(GLParam((1, 0, 0), (0, 1, 0)))  # height -inf
    return grid


def grid_multisegments():
    """Multisegments arising from the finite-height grid parameters."""
    seen = []
    for p in param_grid():
        if height(p) is None or height(p) == 0:
            continue
        ms = from_params(p.lambda_L, p.lambda_R)
        if ms not in seen:
            seen.append(ms)
    return seen


def _segment_pool_ints(lo, hi):
    out = []
    for a in range(lo, hi + 1):
        for b in range(a, hi + 1):
            out.append(Segment(a, b))
    return out


def _segment_pool_halves(lo_num, hi_num):
    out = []
    vals = [Rational(k, 2) for k in range(lo_num, hi_num + 1, 2)]
    for i, a in enumerate(vals):
        for b in vals[i:]:
            out.append(Segment(a, b))
    return out


def small_multisegments(max_total=5, max_segments=3):
    """Deterministic pool: segments inside [0,3] (integer endpoints)."""
    pool = _segment_pool_ints(0, 3)
    out = []
    seen = set()

    def rec(start, chosen, total):
        ms = Multisegment(chosen)
        if chosen and ms not in seen:
            seen.add(ms)
            out.append(ms)
        if len(chosen) == max_segments:
            return
        for k in range(start, len(pool)):
            seg = pool[k]
            if total + seg.length <= max_total:
                rec(k, chosen + [seg], total + seg.length)

    rec(0, [], 0)
    return out


# -- criteria -------------------------------------------------------------------


def criterion_2(reg):
    """Dimension formula for the transfer over the grid."""
    bad = []
    for p in param_grid():
        h = height(p)
        for m in range(0, 7):
            expected = gamma_dim(p, m)
            res = gamma_standard(p, m)
            got = 0 if res.zero else reg.track(res.module).dim
            if got != expected:
                bad.append("%r m=%d: dim %d != %d" % (p, m, got, expected))
        if h is not None and h <= 5:
            res = gamma_standard(p, h)
            got = 0 if res.zero else res.module.dim
            if got != gamma_dim(p, h):
                bad.append("%r at height" % (p,))
    return CriterionResult(2, "transfer dimension formula", not bad,
                           "grid size %d" % len(param_grid()) if not bad else "; ".join(bad[:3]))


def criterion_3(reg):
    """Induction dimension formula on 50 constructed pairs."""
    from math import factorial

    pieces = [character_module(c) for c in (rat(0), rat(1), -H, rat(2))]
    pieces += [steinberg(Segment(0, 1)), steinberg(Segment(-1, 1)), steinberg(Segment(H, H + 2))]
    pieces.append(induce(character_module(1), character_module(0)))
    pieces.append(standard_module(Multisegment([Segment(0, 1), Segment(0, 0)])))
    pieces.append(simple_module(speh(2, 2)))
    pairs = list(itertools.product(pieces, pieces))[:50]
    bad = []
    for a, b in pairs:
        prod = reg.track(induce(a, b))
        expected = a.dim * b.dim * factorial(a.m + b.m) // (factorial(a.m) * factorial(b.m))
        if prod.dim != expected:
            bad.append("%s x %s" % (a.label, b.label))
    return CriterionResult(3, "induction dimension formula", not bad,
                           "%d pairs" % len(pairs) if not bad else "; ".join(bad[:3]))


def criterion_4(reg):
    """Two-segment reducibility against linkedness, both sides."""
    pool = _segment_pool_ints(-2, 2) + _segment_pool_halves(-3, 3)
    bad = []
    checked = 0
    with caps.caps(max_dim=600, max_rank=10):
        for i, s1 in enumerate(pool):
            for s2 in pool[i:]:
                checked += 1
                M = reg.track(induce(steinberg(s1), steinberg(s2)))
                linked = is_linked(s1, s2)
                if not linked:
                    if not is_simple(M):
                        bad.append("unlinked %r x %r not simple" % (s1, s2))
                        continue
                else:
                    table = composition_factors(M).entries
                    union = Segment(min(s1.a, s2.a), max(s1.b, s2.b))
                    inter = Segment(max(s1.a, s2.a), min(s1.b, s2.b))
                    expected = {Multisegment([s1, s2]): 1,
                                Multisegment([union, inter]): 1}
                    if table != expected:
                        bad.append("linked %r x %r factors %r" % (s1, s2, table))
                        continue
                # GL-side cross-check: chi_{a,b} with segment [b+1/2, a-1/2]
                chi1 = (s1.b + H, s1.a - H)
                chi2 = (s2.b + H, s2.a - H)
                red = pair_reducibility(chi1, chi2)
                if linked and not red:
                    bad.append("linked pair %r %r not GL-reducible" % (s1, s2))
                thick = min(chi1[0], chi2[0]) >= max(chi1[1], chi2[1])
                if thick and red != linked:
                    bad.append("thickened pair %r %r mismatch" % (s1, s2))
    return CriterionResult(4, "two-segment reducibility", not bad,
                           "%d pairs" % checked if not bad else "; ".join(bad[:3]))


def criterion_5(reg):
    """Absolute irreducibility and labels of transfer images over the grid."""
    bad = []
    count = 0
    for p in param_grid():
        h = height(p)
        if h is None or h == 0 or h > 5:
            continue
        count += 1
        ms = from_params(p.lambda_L, p.lambda_R)
        res = gamma_irreducible(p, h)
        mod = reg.track(res.module)
        if res.multisegment != ms:
            bad.append("label mismatch for %r" % (p,))
            continue
        if not is_absolutely_irreducible(mod):
            bad.append("image of %r fails absolute irreducibility" % (p,))
            continue
        content = []
        for chi, mult in weights(mod):
            content.append((tuple(sorted(chi)), mult))
        if any(c != ms.content() for c, _ in content):
            bad.append("central character mismatch for %r" % (p,))
    return CriterionResult(5, "irreducibility of the transfer", not bad,
                           "%d parameters" % count if not bad else "; ".join(bad[:3]))


def criterion_6(reg):
    """Hermitian duality through the transfer (n <= 2)."""
    bad = []
    count = 0
    for p in param_grid():
        if p.n > 2:
            continue
        h = height(p)
        if h is None or h > 4:
            continue
        count += 1
        a = gamma_irreducible(hermitian_dual(p), h)
        b = gamma_irreducible(p, h)
        if a.zero != b.zero:
            bad.append("zero mismatch %r" % (p,))
            continue
        if not a.zero and not is_isomorphic(reg.track(a.module), reg.track(star_dual(b.module))):
            bad.append("dual mismatch %r" % (p,))
    return CriterionResult(6, "Hermitian duality", not bad,
                           "%d parameters" % count if not bad else "; ".join(bad[:3]))


def criterion_7(reg):
    """Speh unitarity: definite one-dimensional form space, nd <= 6."""
    bad = []
    cases = sorted((n, d) for n in range(1, 7) for d in range(1, 7) if n * d <= 6)
    with caps.caps(max_dim=800):
        for n, d in cases:
            p = speh_param(n, d)
            res = gamma_irreducible(p, n * d)
            mod = reg.track(res.module)
            rep = hermitian_form(mod)
            if not (rep.exists and rep.unique and rep.unitary):
                bad.append("a(%d,%d): exists=%s unique=%s unitary=%s"
                           % (n, d, rep.exists, rep.unique, rep.unitary))
                continue
            pos, neg, zero = rep.signature
            if zero or (pos and neg):
                bad.append("a(%d,%d) signature %r" % (n, d, rep.signature))
    return CriterionResult(7, "Speh unitarity", not bad,
                           "%d modules" % len(cases) if not bad else "; ".join(bad[:3]))


def criterion_8(reg):
    """Highest derivative: BZ_triv_k St(ms) = St(left_shrink(ms)), total <= 5."""
    bad = []
    pool = [ms for ms in small_multisegments(5, 3)]
    for ms in pool:
        S = reg.track(simple_module(ms))
        k = len(ms.segments)
        der = reg.track(bz_derivative(S, (k,)))
        target_ms = left_shrink(ms)
        if target_ms.total == 0:
            ok = der.m == 0 and der.dim == 1
        else:
            ok = is_isomorphic(der, reg.track(simple_module(target_ms)))
        if not ok:
            bad.append("%r" % (ms,))
    return CriterionResult(8, "BZ highest derivative", not bad,
                           "%d multisegments" % len(pool) if not bad else "; ".join(bad[:3]))


def criterion_9(reg):
    """IM conjugation: IM . BZ_sgn . IM = BZ_triv on St(ms), total <= 4."""
    bad = []
    pool = [ms for ms in small_multisegments(4, 3)]
    count = 0
    for ms in pool:
        S = simple_module(ms)
        for i in range(1, ms.total + 1):
            count += 1
            lhs = reg.track(im_twist(bz_derivative(im_twist(S), (1,) * i)))
            rhs = reg.track(bz_derivative(S, (i,)))
            if lhs.dim != rhs.dim:
                bad.append("%r i=%d dims" % (ms, i))
                continue
            if lhs.dim and not is_isomorphic(lhs, rhs):
                bad.append("%r i=%d" % (ms, i))
    return CriterionResult(9, "IM conjugation of derivatives", not bad,
                           "%d instances" % count if not bad else "; ".join(bad[:3]))


def criterion_10(reg):
    """Multiplicity one for derivative homs, content inside {0,1,2,3}."""
    from .multisegment import multisegments_with_content

    universes = []
    base = (0, 1, 2, 3)
    for r in range(1, 5):
        for sub in itertools.combinations(base, r):
            universes.extend(multisegments_with_content(sub))
    by_rank = {}
    for ms in universes:
        by_rank.setdefault(ms.total, []).append(ms)
    bad = []
    count = 0
    for ms in universes:
        S = simple_module(ms)
        for i in range(1, ms.total + 1):
            for tau in ((i,), (1,) * i):
                der = bz_derivative(S, tau)
                if der.dim == 0:
                    continue
                for ms2 in by_rank.get(ms.total - i, []):
                    count += 1
                    T = simple_module(ms2)
                    if der.m != T.m:
                        continue
                    k = len(hom_space(der, T))
                    if k > 1:
                        bad.append("Hom(BZ_%s St(%r), St(%r)) = %d" % (tau, ms, ms2, k))
    return CriterionResult(10, "derivative multiplicity one", not bad,
                           "%d hom spaces" % count if not bad else "; ".join(bad[:3]))


def criterion_11(reg):
    """The documented twisted-elliptic verdicts."""
    m1 = Multisegment([Segment(3, 4), Segment(0, 1), Segment(-1, 0), Segment(-4, -3)])
    c1 = classify(m1)
    m2 = Multisegment([Segment(0, 7), Segment(-3, 4), Segment(-4, 3), Segment(-7, 0)])
    c2 = classify(m2)
    witness = Multisegment([Segment(-7, 7), Segment(-4, 4), Segment(-3, 3), Segment(0, 0)])
    ok = (not c1.is_twisted_elliptic) and c2.is_twisted_elliptic and c2.temp_witness == witness
    return CriterionResult(11, "Dirac criteria reproduction", ok,
                           "both verdicts and the witness" if ok else "mismatch")


def criterion_12(reg):
    """Character-formula identity at n=2: signed tables collapse to the ladder."""
    m1 = from_params((2, 1), (-1, -2))
    m2 = from_params((2, 1), (-2, -1))
    t1 = composition_factors(reg.track(standard_module(m1))).entries
    t2 = composition_factors(reg.track(standard_module(m2))).entries
    diff = dict(t1)
    for k, v in t2.items():
        diff[k] = diff.get(k, 0) - v
    diff = {k: v for k, v in diff.items() if v}
    ok = diff == {m1: 1} and classify(m1).is_ladder
    return CriterionResult(12, "Grothendieck character identity", ok,
                           "difference = {St(%r): 1}" % (m1,) if ok else "difference %r" % (diff,))


def criterion_13(reg):
    """Schur-Weyl matching for Sp_{2,1} and principal-series sweeps."""
    bad = []
    count = 0
    for alpha in partitions(2):
        count += 1
        if not check_schur_weyl(speh_param(2, 1), alpha):
            bad.append("Sp_{2,1} alpha=%r" % (alpha,))
    for p in param_grid():
        h = height(p)
        if h is None or h == 0 or h > 4 or p.n > 3:
            continue
        for alpha in partitions(h):
            count += 1
            if not check_schur_weyl(p, alpha):
                bad.append("%r alpha=%r" % (p, alpha))
    return CriterionResult(13, "Schur-Weyl matching", not bad,
                           "%d instances" % count if not bad else "; ".join(bad[:3]))


def criterion_14(reg):
    """Parabolic compatibility on 20 character pairs including swaps."""
    chars = [(2, 0), (1, 0), (2, 1), (0, 0), (1, -1), (H + 1, H), (3, 1), (H, -H), (0, -2), (2, -1)]
    pairs = []
    for i in range(len(chars)):
        j = (i + 1) % len(chars)
        pairs.append((chars[i], chars[j]))
        pairs.append((chars[j], chars[i]))
    bad = []
    for c1, c2 in pairs:
        p1 = GLParam((rat(c1[0]),), (rat(c1[1]),))
        p2 = GLParam((rat(c2[0]),), (rat(c2[1]),))
        if not check_parabolic_compat(p1, p2):
            bad.append("%r %r" % (p1, p2))
    return CriterionResult(14, "parabolic compatibility", not bad,
                           "%d pairs" % len(pairs) if not bad else "; ".join(bad[:3]))


def criterion_15(reg):
    """Direct tensor model isomorphic to the symbolic transfer, n <= 2, m <= 3."""
    bad = []
    count = 0
    for p in param_grid():
        if p.n > 2:
            continue
        h = height(p)
        if h is None or h == 0 or h > 3:
            continue
        count += 1
        dm = reg.track(direct_model(p, h))
        ref = gamma_standard(p, h)
        if not check_relations(dm):
            bad.append("relations %r" % (p,))
            continue
        if not is_isomorphic(dm, ref.module):
            bad.append("model mismatch %r" % (p,))
    return CriterionResult(15, "direct model oracle", not bad,
                           "%d parameters" % count if not bad else "; ".join(bad[:3]))


def criterion_1(reg):
    """Relation integrity of every module built above, plus a rank-6 case."""
    extra = standard_module(Multisegment([Segment(0, 1), Segment(1, 2), Segment(0, 0), Segment(2, 2)]))
    reg.track(extra)
    bad = []
    for mod in reg.modules:
        if not check_relations(mod):
            bad.append(mod.label or "dim %d" % mod.dim)
    return CriterionResult(1, "relation integrity", not bad,
                           "%d modules audited (max rank %d)" % (
                               len(reg.modules), max(m.m for m in reg.modules))
                           if not bad else "; ".join(str(b) for b in bad[:3]))


def run_all(verbose=True):
    """Run the full acceptance suite; returns the list of CriterionResult."""
    reg = _Registry()
    results = []
    for fn in (criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
               criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
               criterion_12, criterion_13, criterion_14, criterion_15):
        results.append(fn(reg))
    results.append(criterion_1(reg))
    results.sort(key=lambda r: r.number)
    if verbose:
        for r in results:
            print("%s  %2d. %s  (%s)" % ("PASS" if r.passed else "FAIL", r.number, r.name, r.detail))
    return results
