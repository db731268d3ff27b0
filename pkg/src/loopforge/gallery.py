"""Parametric generators for the three example families of Schreier data,
a registry of small named groups, and the small-order loop enumerator that
feeds the verification corpus."""

from __future__ import annotations

import itertools
import warnings

from .core import (
    LoopError,
    LoopTable,
    NotAGroupError,
    OrderTooLargeError,
    center,
    commutator_subgroup,
    compose,
    find_homomorphisms,
    find_isomorphism,
    identity_perm,
    loop_properties,
    right_inner,
    cycle_type,
)
from .extensions import SchreierData, classify_schreier, schreier_loop


class NotRightBolError(LoopError):
    pass


class NotAHomomorphismError(LoopError):
    pass


# ---------------------------------------------------------------------------
# named small groups

def symmetric_group(n):
    return LoopTable.from_permutations(
        itertools.permutations(range(n)), label="S%d" % n)


def dihedral_group(n):
    """Order 2n, acting on the vertices of an n-gon (n >= 3)."""
    rot = tuple((i + 1) % n for i in range(n))
    flip = tuple((n - i) % n for i in range(n))
    perms = set()
    p = identity_perm(n)
    for _ in range(n):
        perms.add(p)
        perms.add(compose(flip, p))
        p = compose(rot, p)
    return LoopTable.from_permutations(perms, label="D%d" % n)


def quaternion_group():
    """{1,-1,i,-i,j,-j,k,-k} indexed as unit*2 + sign bit."""
    bm = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }
    rows = [[0] * 8 for _ in range(8)]
    for u in range(4):
        for su in (1, -1):
            for v in range(4):
                for sv in (1, -1):
                    w, sw = bm[u, v]
                    sign = su * sv * sw
                    rows[u * 2 + (su < 0)][v * 2 + (sv < 0)] = w * 2 + (sign < 0)
    return LoopTable(rows, label="Q8")


def named_group(name):
    name = name.lower()
    if name.startswith("z") and name[1:].isdigit():
        return LoopTable.cyclic(int(name[1:]))
    if name == "v4" or name == "d2":
        return LoopTable.direct_product(LoopTable.cyclic(2), LoopTable.cyclic(2),
                                        label="V4")
    if name in ("s3", "d3"):
        return symmetric_group(3)
    if name == "d4":
        return dihedral_group(4)
    if name == "q8":
        return quaternion_group()
    raise LoopError("unknown group name %r" % name)


GROUP_NAMES = ("z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8",
               "v4", "s3", "d4", "q8")


# ---------------------------------------------------------------------------
# example families

def right_inner_group(K):
    """The permutation group generated by the right inner mappings of K, as a
    Cayley table (identity first, then sorted) plus the member permutations."""
    gens = {right_inner(K, x, y) for x in range(K.order) for y in range(K.order)}
    members = set(gens) | {identity_perm(K.order)}
    frontier = list(members)
    while frontier:
        new = []
        for p in list(members):
            for q in frontier:
                for r in (compose(p, q), compose(q, p)):
                    if r not in members:
                        members.add(r)
                        new.append(r)
        frontier = new
    table = LoopTable.from_permutations(members)
    return table, table.permutations


def _warn_if_central(G, image, what):
    if set(image) <= set(center(G)):
        warnings.warn("%s has central image; the construction degenerates" % what)


def example_bol(K, G, chi):
    """Theta = Id and f(t,s) = chi of the right inner mapping of (s, t).

    K must be right Bol; chi a homomorphism from the right-inner-mapping
    group H into G, given as an image tuple over the elements of H.
    """
    if not loop_properties(K).right_bol:
        raise NotRightBolError("K is not a right Bol loop")
    if not G.is_associative:
        raise NotAGroupError("G must be a group")
    h_table, perms = right_inner_group(K)
    chi = tuple(chi)
    if len(chi) != h_table.order or not all(
            chi[h_table.mul(a, b)] == G.mul(chi[a], chi[b])
            for a in range(h_table.order) for b in range(h_table.order)):
        raise NotAHomomorphismError("chi is not a homomorphism H -> G")
    _warn_if_central(G, chi, "chi")
    index = {p: i for i, p in enumerate(perms)}
    k = K.order
    f = tuple(tuple(chi[index[right_inner(K, sigma, tau)]] for sigma in range(k))
              for tau in range(k))
    data = SchreierData(K, G, tuple([identity_perm(G.order)] * k), f)
    report = classify_schreier(data)
    assert loop_properties(schreier_loop(data)).right_bol, \
        "constructed loop lost the right Bol property"
    if not set(chi) <= set(center(G)):
        assert not report.g_bar_nuclear
    return data


def example_commutator(K, G, phi):
    """Theta = Id and f(t,s) = phi of the commutator of s and t.

    phi: a homomorphism from the commutator subgroup of K into G, as a dict
    keyed by K-elements.
    """
    if not K.is_associative or not G.is_associative:
        raise NotAGroupError("K and G must be groups")
    derived = commutator_subgroup(K)
    if derived == (0,):
        warnings.warn("K is abelian; the factor function degenerates to e")
    if set(phi) != set(derived):
        raise NotAHomomorphismError("phi must be defined exactly on the commutator subgroup")
    if not all(phi[K.mul(a, b)] == G.mul(phi[a], phi[b])
               for a in derived for b in derived):
        raise NotAHomomorphismError("phi is not a homomorphism K' -> G")
    _warn_if_central(G, phi.values(), "phi")
    k = K.order
    f = []
    for tau in range(k):
        row = []
        for sigma in range(k):
            c = K.mul(K.mul(K.mul(K.inv(sigma), K.inv(tau)), sigma), tau)
            row.append(phi[c])
        f.append(tuple(row))
    data = SchreierData(K, G, tuple([identity_perm(G.order)] * k), tuple(f))
    report = classify_schreier(data)
    if not set(phi.values()) <= set(center(G)):
        assert not report.g_bar_nuclear
    return data


def example_conjugation(K, G, phi):
    """f = e and Theta_s = inverse conjugation by phi(s): u -> phi(s)^-1.u.phi(s).

    Structural claims about the result are measured via classify_schreier by
    the caller, not assumed here.
    """
    if not K.is_associative or not G.is_associative:
        raise NotAGroupError("K and G must be groups")
    phi = tuple(phi)
    if len(phi) != K.order or not all(
            phi[K.mul(a, b)] == G.mul(phi[a], phi[b])
            for a in range(K.order) for b in range(K.order)):
        raise NotAHomomorphismError("phi is not a homomorphism K -> G")
    _warn_if_central(G, phi, "phi")
    theta = []
    for sigma in range(K.order):
        g = phi[sigma]
        gi = G.inv(g)
        theta.append(tuple(G.mul(G.mul(gi, u), g) for u in range(G.order)))
    zero = tuple([0] * K.order)
    return SchreierData(K, G, tuple(theta), tuple([zero] * K.order))


def commutator_homomorphisms(K, G):
    """All homomorphisms from the commutator subgroup of K into G, as dicts."""
    derived = commutator_subgroup(K)
    local = {g: i for i, g in enumerate(derived)}
    rows = [[local[K.mul(a, b)] for b in derived] for a in derived]
    d_table = LoopTable(rows)
    return [{g: h[local[g]] for g in derived}
            for h in find_homomorphisms(d_table, G)]


# ---------------------------------------------------------------------------
# loop enumeration

def _reduced_tables(n):
    """All Latin squares with identity row and column, row-major DFS order."""
    if n == 1:
        yield ((0,),)
        return
    rows_acc = [tuple(range(n))]
    col_used = [{j} for j in range(n)]

    def rec(x):
        if x == n:
            yield tuple(rows_acc)
            return
        row = [x] + [-1] * (n - 1)
        used = {x}

        def cell(j):
            if j == n:
                for jj in range(n):
                    col_used[jj].add(row[jj])
                rows_acc.append(tuple(row))
                yield from rec(x + 1)
                rows_acc.pop()
                for jj in range(n):
                    col_used[jj].discard(row[jj])
                return
            for v in range(n):
                if v not in used and v not in col_used[j]:
                    row[j] = v
                    used.add(v)
                    yield from cell(j + 1)
                    used.discard(v)
                    row[j] = -1

        yield from cell(1)

    yield from rec(1)


def _right_bol_tables(n):
    """Loops built from their right translations: the set {rho_j} must be
    sharply transitive and closed under rho_x rho_y rho_x, which equals
    rho at rho_x(rho_y(x)).  Forced assignments are propagated eagerly."""

    def propagate(cols):
        changed = True
        while changed:
            changed = False
            assigned = [j for j in range(n) if cols[j] is not None]
            for x in assigned:
                for y in assigned:
                    c = compose(cols[x], compose(cols[y], cols[x]))
                    t = c[0]
                    if cols[t] is not None:
                        if cols[t] != c:
                            return False
                    else:
                        for k in assigned:
                            if any(c[i] == cols[k][i] for i in range(n)):
                                return False
                        cols[t] = c
                        changed = True
        return True

    def candidates(cols, j):
        assigned = [k for k in range(n) if cols[k] is not None]
        blocked = [{cols[k][i] for k in assigned} for i in range(n)]
        p = [j] + [-1] * (n - 1)
        used = {j}

        def cell(i):
            if i == n:
                yield tuple(p)
                return
            for v in range(n):
                if v not in used and v not in blocked[i]:
                    p[i] = v
                    used.add(v)
                    yield from cell(i + 1)
                    used.discard(v)
                    p[i] = -1

        yield from cell(1)

    def rec(cols):
        j = next((k for k in range(n) if cols[k] is None), -1)
        if j < 0:
            yield tuple(tuple(cols[jj][i] for jj in range(n)) for i in range(n))
            return
        for p in candidates(cols, j):
            new = list(cols)
            new[j] = p
            if propagate(new):
                yield from rec(new)

    start = [None] * n
    start[0] = identity_perm(n)
    yield from rec(start)


def _invariant_key(L):
    n = L.order
    t = L.table
    items = sorted((cycle_type(L.row(x)), cycle_type(L.col(x)), t[x][x] == x)
                   for x in range(n))
    fails = sum(1 for x in range(n) for y in range(n) for z in range(n)
                if t[t[x][y]][z] != t[x][t[y][z]])
    return tuple(items), fails


def enumerate_loops(n, filter=None):
    """All loops of order n up to isomorphism, as a deterministic stream.

    Exhaustive for n <= 6; for n in {7, 8} only the right-Bol filter is
    supported, with pruning built into the generation.
    """
    if n < 1 or n > 8:
        raise OrderTooLargeError("order must be between 1 and 8")
    wanted = dict(filter or {})
    if n > 6 and not wanted.get("right_bol"):
        raise OrderTooLargeError(
            "orders 7 and 8 require a filter with right_bol=True")
    gen = _right_bol_tables(n) if n > 6 else _reduced_tables(n)
    reps_by_key = {}
    for rows in gen:
        L = LoopTable(rows)
        if wanted and not loop_properties(L).matches(wanted):
            continue
        key = _invariant_key(L)
        bucket = reps_by_key.setdefault(key, [])
        if any(find_isomorphism(L, rep) is not None for rep in bucket):
            continue
        bucket.append(L)
        yield L
