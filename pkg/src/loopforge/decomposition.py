"""Extraction of Schreier data from a loop with a distinguished middle and
right nuclear normal subgroup, the reconstruction isomorphism, the analysis
of the automorphisms induced on the subgroup, and the transversal/
automorphism transforms with the existence characterizations they decide."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    LoopError,
    LoopTable,
    NotAGroupError,
    NotNormalError,
    _in_nucleus,
    automorphisms,
    commutant,
    compose,
    factor_loop,
    identity_perm,
    inner_automorphism,
    inner_automorphisms,
    invert_perm,
    is_bijective,
    is_homomorphic,
    is_normal,
    left_transversals,
    middle_inner,
)
from .extensions import InvalidDataError, SchreierData, schreier_loop


class NotMiddleRightNuclearError(LoopError):
    pass


class InvalidPairError(LoopError):
    pass


class BadShiftError(LoopError):
    pass


class NotAnAutomorphismError(LoopError):
    pass


@dataclass(frozen=True)
class DataPair:
    """(kappa, Sigma): an isomorphism K -> L/G given as coset indices, plus a
    left transversal through the identity."""

    K: LoopTable
    kappa: tuple
    sigma: tuple


@dataclass(frozen=True)
class Decomposition:
    data: SchreierData
    iso: tuple              # flattened (sigma, s) -> element of L
    pair: DataPair


# ---------------------------------------------------------------------------
# preconditions and shared plumbing

def _subgroup_table(L, subset):
    """Cayley table of a subset (local indices 0..|S|-1) plus the local-to-L
    element map.  Members are sorted, so the identity gets local index 0."""
    members = tuple(sorted(subset))
    if not members or members[0] != 0:
        raise NotAGroupError("subgroup must contain the identity")
    local = {g: i for i, g in enumerate(members)}
    try:
        rows = [[local[L.mul(a, b)] for b in members] for a in members]
    except KeyError:
        raise NotAGroupError("%r is not closed under multiplication" % (members,))
    table = LoopTable(rows)
    if not table.is_associative:
        raise NotAGroupError("%r is not associative" % (members,))
    return table, members


def check_mr_nuclear(L, G):
    """Validate that G is a middle and right nuclear normal subgroup; returns
    the subgroup table and the local-to-L map."""
    table, members = _subgroup_table(L, G)
    if not is_normal(L, members):
        raise NotNormalError("%r is not normal" % (members,))
    if not all(_in_nucleus(L, "middle", u) and _in_nucleus(L, "right", u)
               for u in members):
        raise NotMiddleRightNuclearError("%r is not middle and right nuclear" % (members,))
    return table, members


def t_restriction(L, G):
    """T_x restricted to G for every x, as local image tuples.

    Each restriction is an automorphism of G; on elements of G itself it is
    the corresponding inner automorphism (both asserted).
    """
    g_table, members = check_mr_nuclear(L, G)
    local = {g: i for i, g in enumerate(members)}
    out = []
    for x in range(L.order):
        tx = middle_inner(L, x)
        images = tuple(local[tx[g]] for g in members)
        assert is_bijective(images, g_table.order)
        assert is_homomorphic(images, g_table, g_table)
        out.append(images)
    for r in members:
        assert out[r] == inner_automorphism(g_table, local[r])
    return out


def t_factorization_check(L, G):
    """T_{x.r}|G = T_x|G o conj_r and T_{r.x}|G = conj_r o T_x|G for all x, r.

    Always holds for a middle and right nuclear normal subgroup; a False
    return is a defect signal.
    """
    g_table, members = check_mr_nuclear(L, G)
    local = {g: i for i, g in enumerate(members)}
    restr = t_restriction(L, G)
    for x in range(L.order):
        for r in members:
            conj = inner_automorphism(g_table, local[r])
            if restr[L.mul(x, r)] != compose(restr[x], conj):
                return False
            if restr[L.mul(r, x)] != compose(conj, restr[x]):
                return False
    return True


def outer_map(L, G):
    """Coset index of L/G -> the coset of T_x in Aut(G) modulo inner
    automorphisms, labeled by its lexicographically least member."""
    g_table, members = check_mr_nuclear(L, G)
    restr = t_restriction(L, G)
    inner = inner_automorphisms(g_table)
    fl = factor_loop(L, members)
    out = {}
    for ci, block in enumerate(fl.cosets):
        labels = {min(compose(restr[x], i) for i in inner) for x in block}
        # independence of the coset representative
        assert len(labels) == 1
        out[ci] = labels.pop()
    return out


def all_t_inner(L, G):
    """Whether every induced automorphism of G is inner.

    When true, also returns a left transversal inside the commutant of G,
    built as {x.g(x)^-1} from inner-automorphism witnesses; when false, an
    exhaustive scan asserts that no transversal lies in the commutant.
    """
    g_table, members = check_mr_nuclear(L, G)
    restr = t_restriction(L, G)
    inner = {}
    for s in range(g_table.order):
        inner.setdefault(inner_automorphism(g_table, s), s)
    if all(restr[x] in inner for x in range(L.order)):
        base = next(left_transversals(L, members))
        witness = []
        for x in base:
            g = inner[restr[x]]          # least s with T_x|G = conj_s
            witness.append(L.mul(x, L.inv(members[g])))
        witness = tuple(sorted(witness))
        assert set(witness) <= set(commutant(L, members))
        return True, witness
    comm = set(commutant(L, members))
    for sigma in left_transversals(L, members):
        assert not set(sigma) <= comm
    return False, None


def t_is_homomorphism(L, G):
    """Whether x -> T_x|G is multiplicative; equals left-nuclearity of G
    (asserted both directions)."""
    g_table, members = check_mr_nuclear(L, G)
    restr = t_restriction(L, G)
    result = all(restr[L.mul(x, y)] == compose(restr[x], restr[y])
                 for x in range(L.order) for y in range(L.order))
    assert result == all(_in_nucleus(L, "left", u) for u in members)
    return result


# ---------------------------------------------------------------------------
# data pairs and extraction

def validate_pair(L, G, pair):
    """Check the pair invariants; returns (section l, subgroup table, members,
    factor loop)."""
    g_table, members = check_mr_nuclear(L, G)
    fl = factor_loop(L, members)
    K = pair.K
    kappa = tuple(pair.kappa)
    if K.order != len(fl.cosets) or len(kappa) != K.order:
        raise InvalidPairError("kappa must be a bijection onto the cosets")
    if not is_bijective(kappa, K.order) or not is_homomorphic(kappa, K, fl.quotient):
        raise InvalidPairError("kappa is not an isomorphism onto L/G")
    sigma = set(pair.sigma)
    if 0 not in sigma or len(sigma) != len(fl.cosets):
        raise InvalidPairError("sigma must contain the identity, one element per coset")
    section = []
    for k in range(K.order):
        hits = [x for x in fl.cosets[kappa[k]] if x in sigma]
        if len(hits) != 1:
            raise InvalidPairError("sigma does not meet coset %d exactly once" % kappa[k])
        section.append(hits[0])
    return section, g_table, members, fl


def canonical_pair(L, G):
    """K = the factor loop itself, kappa the identity, sigma the
    lexicographically first transversal."""
    g_table, members = check_mr_nuclear(L, G)
    fl = factor_loop(L, members)
    k = len(fl.cosets)
    return DataPair(fl.quotient, tuple(range(k)), next(left_transversals(L, members)))


def schreier_data_from_pair(L, G, pair):
    """Theta_s = (T_{l_s})^-1 on G and f(s,t) = l_{st} \\ l_s.l_t."""
    section, g_table, members, fl = validate_pair(L, G, pair)
    local = {g: i for i, g in enumerate(members)}
    restr = t_restriction(L, G)
    K = pair.K
    theta = tuple(invert_perm(restr[section[s]]) for s in range(K.order))
    f = []
    for s in range(K.order):
        row = []
        for t in range(K.order):
            v = L.ldiv(section[K.mul(s, t)], L.mul(section[s], section[t]))
            if v not in local:
                raise InvalidPairError("factor value %d lies outside the subgroup" % v)
            row.append(local[v])
        f.append(tuple(row))
    return SchreierData(K, g_table, theta, tuple(f))


def decompose(L, G, pair):
    """Extract data via the l-section and build F(s, t) = l_s.t; asserts that
    F is an isomorphism fixing G pointwise with underlying isomorphism kappa."""
    data = schreier_data_from_pair(L, G, pair)
    section, g_table, members, fl = validate_pair(L, G, pair)
    K = pair.K
    m = g_table.order
    iso = []
    for s in range(K.order):
        for t in range(m):
            iso.append(L.mul(section[s], members[t]))
    iso = tuple(iso)
    model = schreier_loop(data)
    assert sorted(iso) == list(range(L.order))
    assert all(iso[model.table[a][b]] == L.mul(iso[a], iso[b])
               for a in range(model.order) for b in range(model.order))
    assert all(iso[t] == members[t] for t in range(m))
    assert all(fl.projection[iso[s * m]] == pair.kappa[s] for s in range(K.order))
    return Decomposition(data, iso, pair)


def has_schreier_decomposition(L, G):
    """Existence of a decomposition, decided by independent nucleus scans and
    cross-checked against the extraction machinery."""
    table, members = _subgroup_table(L, G)
    if not is_normal(L, members):
        raise NotNormalError("%r is not normal" % (members,))
    result = all(_in_nucleus(L, "middle", u) and _in_nucleus(L, "right", u)
                 for u in members)
    if result:
        decompose(L, G, canonical_pair(L, G))
    else:
        fl = factor_loop(L, members)
        assert any(not _raw_extraction_holds(L, table, members, fl, sigma)
                   for sigma in left_transversals(L, members))
    return result


def _raw_extraction_holds(L, g_table, members, fl, sigma):
    """Run the section-based extraction without nuclearity preconditions and
    report whether it yields valid data reconstructing L."""
    local = {g: i for i, g in enumerate(members)}
    m = g_table.order
    k = len(fl.cosets)
    section = [next(x for x in block if x in set(sigma)) for block in fl.cosets]
    theta = []
    for s in range(k):
        tx = middle_inner(L, section[s])
        images = [tx[g] for g in members]
        if any(v not in local for v in images):
            return False
        theta.append(invert_perm(tuple(local[v] for v in images)))
    f = []
    for s in range(k):
        row = []
        for t in range(k):
            v = L.ldiv(section[fl.quotient.mul(s, t)], L.mul(section[s], section[t]))
            if v not in local:
                return False
            row.append(local[v])
        f.append(tuple(row))
    try:
        data = SchreierData(fl.quotient, g_table, tuple(theta), tuple(f))
        model = schreier_loop(data)
    except (LoopError, AssertionError):
        return False
    iso = [L.mul(section[s], members[t]) for s in range(k) for t in range(m)]
    return all(iso[model.table[a][b]] == L.mul(iso[a], iso[b])
               for a in range(model.order) for b in range(model.order))


# ---------------------------------------------------------------------------
# transforms

def shift_transversal(L, G, pair, n):
    """Replace the transversal by {l_s.n(s)} and return the new pair together
    with the transformed data, computed by the closed formulas and asserted
    against direct re-extraction.

    `n` maps K to G-local indices with n at the identity = e.
    """
    section, g_table, members, fl = validate_pair(L, G, pair)
    K = pair.K
    n = tuple(n)
    if len(n) != K.order or n[0] != 0:
        raise BadShiftError("shift must be K-indexed with value e at the identity")
    if any(v not in range(g_table.order) for v in n):
        raise BadShiftError("shift values must be G-local indices")
    data = schreier_data_from_pair(L, G, pair)
    new_sigma = tuple(sorted(L.mul(section[s], members[n[s]]) for s in range(K.order)))
    new_pair = DataPair(K, pair.kappa, new_sigma)
    shifted = apply_shift(data, n)
    extracted = schreier_data_from_pair(L, G, new_pair)
    assert shifted.theta == extracted.theta and shifted.f == extracted.f
    return new_pair, extracted


def apply_shift(data, n):
    """The transversal-change formulas on raw data:
    Theta'_s = conj_{n(s)}^-1 o Theta_s,
    f'(s,t) = n(st)^-1.f(s,t).Theta_t(n(s)).n(t)."""
    K, G = data.K, data.G
    theta = tuple(compose(invert_perm(inner_automorphism(G, n[s])), data.theta[s])
                  for s in range(K.order))
    f = []
    for s in range(K.order):
        row = []
        for t in range(K.order):
            v = G.mul(G.inv(n[K.mul(s, t)]), data.f[s][t])
            v = G.mul(v, data.theta[t][n[s]])
            v = G.mul(v, n[t])
            row.append(v)
        f.append(tuple(row))
    return SchreierData(K, G, theta, tuple(f), label=data.label)


def precompose_automorphism(data, mu):
    """Relabel the K-coordinate by an automorphism of K:
    Theta'_t = Theta_{mu(t)}, f'(s,t) = f(mu(s), mu(t)).

    The map (s, x) -> (mu(s), x) is an isomorphism from the new loop onto the
    old one fixing the embedded G pointwise (asserted).
    """
    K, G = data.K, data.G
    mu = tuple(mu)
    if not is_bijective(mu, K.order) or not is_homomorphic(mu, K, K):
        raise NotAnAutomorphismError("mu is not an automorphism of K")
    theta = tuple(data.theta[mu[t]] for t in range(K.order))
    f = tuple(tuple(data.f[mu[s]][mu[t]] for t in range(K.order))
              for s in range(K.order))
    new = SchreierData(K, G, theta, f, label=data.label)
    old_loop = schreier_loop(data)
    new_loop = schreier_loop(new)
    m = G.order
    emb = [0] * new_loop.order
    for s in range(K.order):
        for x in range(m):
            emb[s * m + x] = mu[s] * m + x
    assert all(emb[t] == t for t in range(m))
    assert all(emb[new_loop.table[a][b]] == old_loop.mul(emb[a], emb[b])
               for a in range(new_loop.order) for b in range(new_loop.order))
    return new


# ---------------------------------------------------------------------------
# existence characterizations

def has_automorphism_free_decomposition(L, G):
    """True iff some left transversal lies in the commutant of G; the witness
    pair extracts to Theta = Id."""
    g_table, members = check_mr_nuclear(L, G)
    comm = set(commutant(L, members))
    fl = factor_loop(L, members)
    k = len(fl.cosets)
    found = None
    for sigma in left_transversals(L, members):
        if set(sigma) <= comm:
            found = sigma
            break
    inner_result, _ = all_t_inner(L, G)
    assert inner_result == (found is not None)
    if found is None:
        return False, None
    pair = DataPair(fl.quotient, tuple(range(k)), found)
    data = schreier_data_from_pair(L, G, pair)
    assert all(p == identity_perm(g_table.order) for p in data.theta)
    return True, pair


def has_factor_free_decomposition(L, G):
    """True iff some left transversal is a subloop of L; the witness pair
    extracts to f = e."""
    from .core import is_subloop
    g_table, members = check_mr_nuclear(L, G)
    fl = factor_loop(L, members)
    k = len(fl.cosets)
    for sigma in left_transversals(L, members):
        if is_subloop(L, sigma):
            pair = DataPair(fl.quotient, tuple(range(k)), sigma)
            data = schreier_data_from_pair(L, G, pair)
            assert all(v == 0 for row in data.f for v in row)
            return True, pair
    return False, None
