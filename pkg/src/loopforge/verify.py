"""Desk-scale verification suites: every classification statement the engine
implements is re-checked here against independent brute-force oracles over
exhaustive small corpora and seeded random data."""

from __future__ import annotations

import itertools
import os
import random
import warnings
from functools import lru_cache

from .core import (
    LoopTable,
    _in_nucleus,
    automorphisms,
    commutant,
    identity_perm,
    is_normal,
    left_transversals,
    loop_properties,
    nucleus,
    subloop_closure,
)
from .decomposition import (
    DataPair,
    all_t_inner,
    apply_shift,
    canonical_pair,
    decompose,
    has_automorphism_free_decomposition,
    has_schreier_decomposition,
    precompose_automorphism,
    schreier_data_from_pair,
    shift_transversal,
    t_factorization_check,
    t_is_homomorphism,
)
from .equivalence import equivalence_oracle, equivalent, wide_equivalent
from .extensions import SchreierData, group_conditions, schreier_loop
from .gallery import (
    enumerate_loops,
    example_commutator,
    example_conjugation,
    named_group,
    right_inner_group,
    example_bol,
    symmetric_group,
)

DEFAULT_SEED = 988


# ---------------------------------------------------------------------------
# corpora

@lru_cache(maxsize=None)
def small_loops(max_order=6):
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_loops(n))
    return tuple(out)


@lru_cache(maxsize=None)
def normal_group_subsets(L):
    """All normal subloops of L that are groups, via closures of subsets."""
    seen = set()
    for size in range(L.order + 1):
        for subset in itertools.combinations(range(L.order), size):
            seen.add(subloop_closure(L, subset))
    out = []
    for s in sorted(seen, key=lambda s: (len(s), s)):
        t = LoopTable([[s.index(L.mul(a, b)) for b in s] for a in s]) \
            if all(L.mul(a, b) in s for a in s for b in s) else None
        if t is None or not t.is_associative:
            continue
        if is_normal(L, s):
            out.append(s)
    return tuple(out)


@lru_cache(maxsize=None)
def small_groups(max_order=6):
    return tuple(L for L in small_loops(max_order) if L.is_associative)


def all_schreier_data(K, G):
    """Every (Theta, f) over the given carriers, lexicographic order."""
    auts = automorphisms(G)
    k = K.order
    ident = identity_perm(G.order)
    free = [(s, t) for s in range(1, k) for t in range(1, k)]
    for thetas in itertools.product(auts, repeat=k - 1):
        theta = (ident,) + thetas
        for fvals in itertools.product(range(G.order), repeat=len(free)):
            f = [[0] * k for _ in range(k)]
            for (s, t), v in zip(free, fvals):
                f[s][t] = v
            yield SchreierData(K, G, theta, tuple(tuple(r) for r in f))


def random_schreier_data(rng, max_k=4, max_g=6):
    ks = [L for L in small_loops(4)]
    gs = [g for g in small_groups(6)]
    K = rng.choice([L for L in ks if L.order <= max_k])
    G = rng.choice([g for g in gs if g.order <= max_g])
    auts = automorphisms(G)
    theta = (identity_perm(G.order),) + tuple(rng.choice(auts)
                                              for _ in range(K.order - 1))
    f = [[0] * K.order for _ in range(K.order)]
    for s in range(1, K.order):
        for t in range(1, K.order):
            f[s][t] = rng.randrange(G.order)
    return SchreierData(K, G, theta, tuple(tuple(r) for r in f))


# ---------------------------------------------------------------------------
# named fixtures

@lru_cache(maxsize=None)
def fixture_z4_factor():
    z2 = LoopTable.cyclic(2)
    return SchreierData(z2, LoopTable.cyclic(2), (identity_perm(2),) * 2,
                        ((0, 0), (0, 1)), label="z4-factor")


@lru_cache(maxsize=None)
def fixture_s3_factor():
    z2 = LoopTable.cyclic(2)
    s3 = symmetric_group(3)
    # element 2 of S3 in sorted order is the transposition swapping 0 and 1
    return SchreierData(z2, s3, (identity_perm(6),) * 2,
                        ((0, 0), (0, 2)), label="s3-factor")


@lru_cache(maxsize=None)
def fixture_v4_swap():
    z2 = LoopTable.cyclic(2)
    v4 = named_group("v4")
    swap = (0, 2, 1, 3)      # exchanges the two generators
    return SchreierData(z2, v4, (identity_perm(4), swap),
                        ((0, 0), (0, 0)), label="v4-swap")


@lru_cache(maxsize=None)
def fixture_bol8():
    for L in enumerate_loops(8, {"right_bol": True}):
        if not L.is_associative:
            return L
    raise AssertionError("no nonassociative right Bol loop of order 8 found")


@lru_cache(maxsize=None)
def fixture_commutator36():
    s3 = symmetric_group(3)
    phi = {0: 0, 3: 3, 4: 4}   # inclusion of the 3-cycles
    return example_commutator(s3, s3, phi)


@lru_cache(maxsize=None)
def fixture_bol16():
    bol8 = fixture_bol8()
    h_table, _ = right_inner_group(bol8)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return example_bol(bol8, h_table, tuple(range(h_table.order)))


@lru_cache(maxsize=None)
def fixture_conjugation36():
    s3 = symmetric_group(3)
    return example_conjugation(s3, s3, tuple(range(6)))


def gallery_cases():
    """(L, G-subset) pairs from the construction fixtures."""
    cases = []
    for data in (fixture_z4_factor(), fixture_s3_factor(), fixture_v4_swap(),
                 fixture_commutator36(), fixture_bol16(),
                 fixture_conjugation36()):
        cases.append((schreier_loop(data), tuple(range(data.G.order))))
    return cases


# ---------------------------------------------------------------------------
# criteria

def _mr_nuclear(L, members):
    return all(_in_nucleus(L, "middle", u) and _in_nucleus(L, "right", u)
               for u in members)


def criterion_1():
    """Decomposition existence iff middle and right nuclearity, order <= 6."""
    checked = 0
    for L in small_loops(6):
        for g in normal_group_subsets(L):
            expected = _mr_nuclear(L, g)
            if has_schreier_decomposition(L, g) != expected:
                return False, "mismatch on order %d, subgroup %r" % (L.order, g)
            checked += 1
    return True, "%d (loop, subgroup) cases" % checked


def _positive_cases():
    for L in small_loops(6):
        for g in normal_group_subsets(L):
            if _mr_nuclear(L, g):
                yield L, g


def criterion_2():
    """Reconstruction round-trip over every transversal of every positive case."""
    checked = 0
    for L, g in _positive_cases():
        base = canonical_pair(L, g)
        for sigma in left_transversals(L, g):
            pair = DataPair(base.K, base.kappa, sigma)
            decompose(L, g, pair)      # asserts F and kappa internally
            checked += 1
    return True, "%d (loop, subgroup, transversal) round-trips" % checked


def _division_corpus(seed):
    for K in small_loops(3):
        for G in small_groups(3):
            yield from all_schreier_data(K, G)
    rng = random.Random(seed)
    for _ in range(200):
        yield random_schreier_data(rng)


def criterion_3(seed=DEFAULT_SEED):
    """Closed-form divisions agree with table division everywhere."""
    from .extensions import schreier_divide
    checked = 0
    for data in _division_corpus(seed):
        L = schreier_loop(data)
        m = data.G.order
        for a in range(L.order):
            for b in range(L.order):
                pa, pb = divmod(a, m), divmod(b, m)
                k, v = schreier_divide(data, "left", pa, pb)
                if k * m + v != L.ldiv(a, b):
                    return False, "left division mismatch on %s" % (data,)
                k, v = schreier_divide(data, "right", pa, pb)
                if k * m + v != L.rdiv(a, b):
                    return False, "right division mismatch on %s" % (data,)
        checked += 1
    return True, "%d data instances, all pairs" % checked


def criterion_4(seed=DEFAULT_SEED):
    """Associativity iff both group conditions, for associative K."""
    checked = 0
    for data in _division_corpus(seed):
        if not data.K.is_associative:
            continue
        eq2, eq3 = group_conditions(data)
        if (eq2 and eq3) != schreier_loop(data).is_associative:
            return False, "group-condition mismatch on %s" % (data,)
        checked += 1
    return True, "%d data instances" % checked


def criterion_5():
    """Induced-automorphism suite on the positive corpus plus gallery fixtures."""
    checked = 0
    cases = list(_positive_cases()) + gallery_cases()
    for L, g in cases:
        if not t_factorization_check(L, g):
            return False, "factorization identity failed on %r" % (L,)
        hom = t_is_homomorphism(L, g)
        left = all(_in_nucleus(L, "left", u) for u in g)
        if hom != left:
            return False, "homomorphy/left-nuclearity mismatch on %r" % (L,)
        inner, _ = all_t_inner(L, g)
        comm = set(commutant(L, g))
        scan = any(set(sigma) <= comm for sigma in left_transversals(L, g))
        if inner != scan:
            return False, "inner/commutant-transversal mismatch on %r" % (L,)
        checked += 1
    return True, "%d (loop, subgroup) cases" % checked


def _transform_corpus(seed):
    for K in small_loops(3):
        for G in small_groups(3):
            yield from all_schreier_data(K, G)
    rng = random.Random(seed + 1)
    picked = 0
    while picked < 12:
        data = random_schreier_data(rng)
        if data.K.order == 4 or data.G.order == 4:
            picked += 1
            yield data


def criterion_6(seed=DEFAULT_SEED):
    """Transversal shifts: formula path equals re-extraction for every shift;
    precomposition always yields an embedded-subgroup-fixing isomorphism."""
    shifts = 0
    for data in _transform_corpus(seed):
        L = schreier_loop(data)
        g = tuple(range(data.G.order))
        pair = canonical_pair(L, g)
        extracted = schreier_data_from_pair(L, g, pair)
        if extracted.theta != data.theta or extracted.f != data.f:
            return False, "canonical extraction does not round-trip %s" % (data,)
        for n in itertools.product(range(data.G.order), repeat=data.K.order - 1):
            shift_transversal(L, g, pair, (0,) + n)   # asserts both paths agree
            shifts += 1
        for mu in automorphisms(data.K):
            precompose_automorphism(data, mu)          # asserts the isomorphism
    return True, "%d shift cross-checks" % shifts


def _raw_precompose(data, mu):
    k = data.K.order
    theta = tuple(data.theta[mu[t]] for t in range(k))
    f = tuple(tuple(data.f[mu[s]][mu[t]] for t in range(k)) for s in range(k))
    return SchreierData(data.K, data.G, theta, f)


def _key(data):
    return data.theta, data.f


def criterion_7(seed=DEFAULT_SEED, pair_budget=1500):
    """Shift/automorphism deciders agree with the isomorphism-search oracle.

    Classes are computed by the transform action; the oracle is compared on
    every (member, representative) pair and on cross-class representative
    pairs, which pins down all pairs since both relations are transitive.
    Large families are sampled under a seeded budget.
    """
    rng = random.Random(seed + 2)
    checked = 0
    for K in small_loops(3):
        for G in small_groups(4):
            data_list = list(all_schreier_data(K, G))
            index = {_key(d): i for i, d in enumerate(data_list)}
            shifts = list(itertools.product(range(G.order), repeat=K.order - 1))
            auts = automorphisms(K)

            def orbits(wide):
                cls = [-1] * len(data_list)
                reps = []
                for i, d in enumerate(data_list):
                    if cls[i] >= 0:
                        continue
                    cid = len(reps)
                    reps.append(i)
                    frontier = [d]
                    cls[i] = cid
                    while frontier:
                        cur = frontier.pop()
                        moved = [apply_shift(cur, (0,) + n) for n in shifts]
                        if wide:
                            moved += [_raw_precompose(cur, mu) for mu in auts]
                        for nd in moved:
                            j = index[_key(nd)]
                            if cls[j] < 0:
                                cls[j] = cid
                                frontier.append(nd)
                return cls, reps

            for wide in (False, True):
                cls, reps = orbits(wide)
                decider = (lambda a, b: wide_equivalent(a, b) is not None) if wide \
                    else (lambda a, b: equivalent(a, b) is not None)
                members = list(range(len(data_list)))
                if len(members) > pair_budget:
                    members = rng.sample(members, pair_budget)
                for i in members:
                    r = reps[cls[i]]
                    if not decider(data_list[r], data_list[i]):
                        return False, "decider missed an in-class pair (wide=%s)" % wide
                    if not equivalence_oracle(data_list[r], data_list[i], wide):
                        return False, "oracle missed an in-class pair (wide=%s)" % wide
                    checked += 1
                cross = [(a, b) for a in range(len(reps)) for b in range(len(reps))
                         if a != b]
                if len(cross) > pair_budget:
                    cross = rng.sample(cross, pair_budget)
                for a, b in cross:
                    d1, d2 = data_list[reps[a]], data_list[reps[b]]
                    if decider(d1, d2):
                        return False, "decider joined distinct classes (wide=%s)" % wide
                    if equivalence_oracle(d1, d2, wide):
                        return False, "oracle joined distinct classes (wide=%s)" % wide
                    checked += 1
    ok, detail = _relation_properties(seed)
    if not ok:
        return False, detail
    return True, "%d oracle agreements, relation laws verified" % checked


def _relation_properties(seed):
    """Reflexivity, symmetry and transitivity on witnessed triples."""
    rng = random.Random(seed + 3)
    for _ in range(25):
        d1 = random_schreier_data(rng, max_k=3, max_g=4)
        G = d1.G
        k = d1.K.order
        if equivalent(d1, d1) != (0,) * k:
            return False, "reflexive witness is not the trivial shift"
        n1 = (0,) + tuple(rng.randrange(G.order) for _ in range(k - 1))
        n2 = (0,) + tuple(rng.randrange(G.order) for _ in range(k - 1))
        d2 = apply_shift(d1, n1)
        d3 = apply_shift(d2, n2)
        w12 = equivalent(d1, d2)
        w23 = equivalent(d2, d3)
        if w12 is None or w23 is None:
            return False, "decider missed a constructed shift"
        back = tuple(G.inv(v) for v in w12)
        if _key(apply_shift(d2, back)) != _key(d1):
            return False, "symmetry: inverse witness failed"
        comp = tuple(G.mul(w12[s], w23[s]) for s in range(k))
        if _key(apply_shift(d1, comp)) != _key(d3):
            return False, "transitivity: composed witness failed"
    return True, ""


def criterion_8():
    """Middle+right nuclear normal subgroups are fully nuclear in loops with
    the left inverse, left alternative or flexible property."""
    checked = 0
    full_scan = []
    for L in small_loops(6):
        props = loop_properties(L)
        if not (props.left_inverse or props.left_alternative or props.flexible):
            continue
        nuc = set(nucleus(L, "full"))
        for g in normal_group_subsets(L):
            if _mr_nuclear(L, g):
                if not set(g) <= nuc:
                    return False, ("counterexample: loop %r, subgroup %r not nuclear"
                                   % (L.table, g))
                checked += 1
    return True, "%d cases, no counterexample" % checked


def criterion_9():
    """Bit-exact fixture checks."""
    z4 = LoopTable.cyclic(4)
    pair = DataPair(LoopTable.cyclic(2), (0, 1), (0, 1))
    d = schreier_data_from_pair(z4, (0, 2), pair)
    if d.f[1][1] != 1 or (0, 2)[d.f[1][1]] != 2:
        return False, "Z4 extraction: f(a,a) != 2"
    s3f = schreier_loop(fixture_s3_factor())
    g6 = tuple(range(6))
    if s3f.is_associative:
        return False, "the S3-factor loop is associative"
    if not _mr_nuclear(s3f, g6):
        return False, "S3-factor loop: embedded subgroup not middle+right nuclear"
    if all(_in_nucleus(s3f, "left", u) for u in g6):
        return False, "S3-factor loop: embedded subgroup unexpectedly left nuclear"
    v4_loop = schreier_loop(fixture_v4_swap())
    if has_automorphism_free_decomposition(v4_loop, tuple(range(4)))[0]:
        return False, "the V4-swap loop has an automorphism-free decomposition"
    l36 = schreier_loop(fixture_commutator36())
    if l36.order != 36 or l36.is_associative:
        return False, "commutator example is not nonassociative of order 36"
    return True, "all four fixtures exact"


def criterion_10():
    """Enumeration counts, stable under the worker-count environment knob."""
    counts = {}
    for threads in ("1", "4"):
        os.environ["LOOPFORGE_THREADS"] = threads
        four = sum(1 for _ in enumerate_loops(4))
        fives = list(enumerate_loops(5))
        counts[threads] = (four, len(fives),
                           sum(1 for L in fives if L.is_associative))
    os.environ.pop("LOOPFORGE_THREADS", None)
    if counts["1"] != counts["4"]:
        return False, "counts unstable across thread settings: %r" % counts
    four, five, groups5 = counts["1"]
    if (four, five, groups5) != (2, 6, 1):
        return False, "counts (%d, %d, %d) != (2, 6, 1)" % (four, five, groups5)
    return True, "order 4: 2 loops; order 5: 6 loops, 1 group"


CRITERIA = (
    ("1 decomposition existence gate", criterion_1),
    ("2 reconstruction round-trip", criterion_2),
    ("3 division formulas", criterion_3),
    ("4 group conditions", criterion_4),
    ("5 induced automorphism suite", criterion_5),
    ("6 transversal/automorphism transforms", criterion_6),
    ("7 equivalence deciders vs oracle", criterion_7),
    ("8 nuclearity from weak inverse laws", criterion_8),
    ("9 fixtures", criterion_9),
    ("10 enumeration sanity", criterion_10),
)


def run_all(out=print):
    failures = 0
    for name, fn in CRITERIA:
        try:
            ok, detail = fn()
        except Exception as exc:          # a blown assert is a failure, not a crash
            ok, detail = False, "%s: %s" % (type(exc).__name__, exc)
        out("%s  criterion %s  (%s)" % ("PASS" if ok else "FAIL", name, detail))
        if not ok:
            failures += 1
    return failures
