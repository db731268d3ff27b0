"""Finite loops as Cayley tables.

Validation, divisions, translations and inner mappings, nuclei, commutants,
subloop/normality/factor machinery, identity predicates and morphism search.
All carriers are index sets [0, n) with the identity pinned at 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property


class LoopError(Exception):
    """Base class for domain errors."""


class NotLatinError(LoopError):
    pass


class NoIdentityError(LoopError):
    pass


class NotAGroupError(LoopError):
    pass


class NotASubloopError(LoopError):
    pass


class NotNormalError(LoopError):
    pass


class OrderTooLargeError(LoopError):
    pass


# ---------------------------------------------------------------------------
# permutations (maps on [0, n) stored as image tuples)

def identity_perm(n):
    return tuple(range(n))


def compose(p, q):
    """(p o q)(x) = p[q[x]], q applied first."""
    return tuple(p[x] for x in q)


def invert_perm(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def cycle_type(p):
    n = len(p)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        lengths.append(ln)
    return tuple(sorted(lengths))


def is_bijective(images, n):
    return len(images) == n and sorted(images) == list(range(n))


def is_homomorphic(images, src, dst):
    """images[x.y] == images[x].images[y] for all pairs."""
    t = src.table
    d = dst.table
    return all(images[t[x][y]] == d[images[x]][images[y]]
               for x in range(src.order) for y in range(src.order))


# ---------------------------------------------------------------------------
# loop tables

class LoopTable:
    """A finite loop: an n x n Latin square with identity at index 0."""

    def __init__(self, rows, label=None):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise NotLatinError("empty table")
        full = frozenset(range(n))
        for i, row in enumerate(rows):
            if len(row) != n:
                raise NotLatinError("row %d has length %d, expected %d" % (i, len(row), n))
            if frozenset(row) != full:
                raise NotLatinError("row %d is not a permutation of 0..%d" % (i, n - 1))
        for j in range(n):
            col = frozenset(rows[i][j] for i in range(n))
            if col != full:
                raise NotLatinError("column %d is not a permutation of 0..%d" % (j, n - 1))
        if any(rows[0][j] != j for j in range(n)) or any(rows[i][0] != i for i in range(n)):
            hint = next((e for e in range(n)
                         if all(rows[e][j] == j for j in range(n))
                         and all(rows[i][e] == i for i in range(n))), None)
            if hint is None:
                raise NoIdentityError("element 0 is not a two-sided identity and no other element is")
            raise NoIdentityError(
                "element 0 is not the identity; element %d is -- relabel the table" % hint)
        self.order = n
        self.table = rows
        self.label = label

    # -- constructors

    @classmethod
    def cyclic(cls, n, label=None):
        return cls([[(i + j) % n for j in range(n)] for i in range(n)],
                   label=label or ("Z%d" % n))

    @classmethod
    def direct_product(cls, a, b, label=None):
        """Pairs (x, y) flattened as x*|b| + y."""
        m = b.order
        n = a.order * m
        rows = [[0] * n for _ in range(n)]
        for x in range(a.order):
            for y in range(m):
                for u in range(a.order):
                    for v in range(m):
                        rows[x * m + y][u * m + v] = a.table[x][u] * m + b.table[y][v]
        return cls(rows, label=label)

    @classmethod
    def from_permutations(cls, perms, label=None):
        """Cayley table of a closed set of permutations under composition
        (right factor applied first).  Identity must be present."""
        perms = list(perms)
        n = len(perms[0])
        ident = identity_perm(n)
        if ident not in perms:
            raise NotAGroupError("identity permutation missing")
        ordered = [ident] + sorted(p for p in perms if p != ident)
        index = {p: i for i, p in enumerate(ordered)}
        rows = []
        for p in ordered:
            row = []
            for q in ordered:
                r = compose(p, q)
                if r not in index:
                    raise NotAGroupError("permutation set not closed under composition")
                row.append(index[r])
            rows.append(row)
        table = cls(rows, label=label)
        table.permutations = tuple(ordered)
        return table

    # -- basic operations

    def mul(self, x, y):
        return self.table[x][y]

    @cached_property
    def _ldiv(self):
        # _ldiv[x][y] = z with x.z = y
        n = self.order
        out = [[0] * n for _ in range(n)]
        for x in range(n):
            for z in range(n):
                out[x][self.table[x][z]] = z
        return tuple(tuple(r) for r in out)

    @cached_property
    def _rdiv(self):
        # _rdiv[y][x] = z with z.y = x
        n = self.order
        out = [[0] * n for _ in range(n)]
        for z in range(n):
            for y in range(n):
                out[y][self.table[z][y]] = z
        return tuple(tuple(r) for r in out)

    def ldiv(self, x, y):
        """x \\ y, the unique z with x.z = y."""
        return self._ldiv[x][y]

    def rdiv(self, x, y):
        """x / y, the unique z with z.y = x."""
        return self._rdiv[y][x]

    def divide(self, side, x, y):
        if side == "left":
            return self.ldiv(x, y)
        if side == "right":
            return self.rdiv(x, y)
        raise ValueError("side must be 'left' or 'right'")

    def inv(self, x):
        """x \\ e; the group inverse when the table is associative."""
        return self._ldiv[x][0]

    def row(self, x):
        """Left translation of x as an image tuple."""
        return self.table[x]

    def col(self, x):
        """Right translation of x as an image tuple."""
        return tuple(self.table[i][x] for i in range(self.order))

    @cached_property
    def is_associative(self):
        t = self.table
        n = self.order
        return all(t[t[x][y]][z] == t[x][t[y][z]]
                   for x in range(n) for y in range(n) for z in range(n))

    # -- plumbing

    def __eq__(self, other):
        return isinstance(other, LoopTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        name = self.label or "order %d" % self.order
        return "LoopTable(%s)" % name


def validate_loop(raw, label=None):
    """Check the Latin and identity invariants and wrap the table."""
    return LoopTable(raw, label=label)


# ---------------------------------------------------------------------------
# translations and inner mappings

def middle_inner(L, x):
    """T_x : y -> (x.y)/x."""
    return tuple(L.rdiv(L.mul(x, y), x) for y in range(L.order))


def right_inner(L, x, y):
    """z -> ((z.y).x)/(y.x)."""
    yx = L.mul(y, x)
    return tuple(L.rdiv(L.mul(L.mul(z, y), x), yx) for z in range(L.order))


# ---------------------------------------------------------------------------
# nuclei, commutant, center

def _in_nucleus(L, part, u):
    t = L.table
    n = L.order
    if part == "left":
        return all(t[t[u][x]][y] == t[u][t[x][y]] for x in range(n) for y in range(n))
    if part == "right":
        return all(t[t[x][y]][u] == t[x][t[y][u]] for x in range(n) for y in range(n))
    if part == "middle":
        return all(t[t[x][u]][y] == t[x][t[u][y]] for x in range(n) for y in range(n))
    raise ValueError("unknown nucleus part %r" % part)


def nucleus(L, part="full"):
    if part == "full":
        members = [u for u in range(L.order)
                   if _in_nucleus(L, "left", u) and _in_nucleus(L, "right", u)
                   and _in_nucleus(L, "middle", u)]
    else:
        members = [u for u in range(L.order) if _in_nucleus(L, part, u)]
    result = tuple(members)
    # every nucleus is a subgroup
    assert 0 in result
    s = set(result)
    assert all(L.mul(a, b) in s for a in result for b in result)
    assert all(L.mul(L.mul(a, b), c) == L.mul(a, L.mul(b, c))
               for a in result for b in result for c in result)
    return result


def commutant(L, S):
    """Elements commuting with every element of S."""
    return tuple(u for u in range(L.order)
                 if all(L.mul(u, s) == L.mul(s, u) for s in S))


def center(L):
    nuc = set(nucleus(L, "full"))
    return tuple(u for u in commutant(L, range(L.order)) if u in nuc)


# ---------------------------------------------------------------------------
# subloops, normality, factor loops

def subloop_closure(L, S):
    """Smallest subset containing S and 0 closed under the three operations.

    Closure under multiplication suffices on a finite loop: restricted
    translations are injective, hence bijective, so divisions stay inside.
    """
    members = set(S) | {0}
    frontier = list(members)
    while frontier:
        new = []
        for a in list(members):
            for b in frontier:
                for c in (L.mul(a, b), L.mul(b, a)):
                    if c not in members:
                        members.add(c)
                        new.append(c)
        frontier = new
    return tuple(sorted(members))


def is_subloop(L, S):
    s = set(S)
    if not s or 0 not in s:
        return False
    return all(L.mul(a, b) in s for a in s for b in s)


def commutator_subgroup(G):
    if not G.is_associative:
        raise NotAGroupError("commutator subgroup requires an associative table")
    comms = set()
    for s in range(G.order):
        for t in range(G.order):
            c = G.mul(G.mul(G.mul(G.inv(s), G.inv(t)), s), t)
            comms.add(c)
    return subloop_closure(G, comms)


def left_cosets(L, S):
    """Blocks {x.s : s in S} in order of least representative, or None if the
    blocks fail to partition the carrier."""
    n = L.order
    size = len(S)
    if n % size != 0:
        return None
    blocks = {}
    for x in range(n):
        b = frozenset(L.mul(x, s) for s in S)
        if len(b) != size:
            return None
        blocks[x] = b
    for x in range(n):
        if any(blocks[y] != blocks[x] for y in blocks[x]):
            return None
    out = []
    seen = set()
    for x in range(n):
        if x not in seen:
            out.append(tuple(sorted(blocks[x])))
            seen |= blocks[x]
    return out


def is_normal(L, S):
    """Block-partition well-definedness test for left cosets of S."""
    if not is_subloop(L, S):
        raise NotASubloopError("%r is not a subloop" % (tuple(S),))
    cosets = left_cosets(L, S)
    if cosets is None:
        return False
    idx = {}
    for i, block in enumerate(cosets):
        for y in block:
            idx[y] = i
    n = L.order
    for x in range(n):
        for y in range(n):
            target = idx[L.mul(x, y)]
            for s in S:
                xs = L.mul(x, s)
                for t in S:
                    if idx[L.mul(xs, L.mul(y, t))] != target:
                        return False
    return True


@dataclass(frozen=True)
class FactorLoop:
    quotient: LoopTable
    projection: tuple       # element of L -> quotient index
    cosets: tuple           # one sorted tuple per quotient element


def factor_loop(L, N):
    if not is_normal(L, N):
        raise NotNormalError("%r is not normal in the loop" % (tuple(N),))
    cosets = left_cosets(L, N)
    idx = {}
    for i, block in enumerate(cosets):
        for y in block:
            idx[y] = i
    reps = [block[0] for block in cosets]
    k = len(cosets)
    rows = [[idx[L.mul(reps[i], reps[j])] for j in range(k)] for i in range(k)]
    quotient = LoopTable(rows)
    projection = tuple(idx[x] for x in range(L.order))
    # projection is a homomorphism with kernel exactly N
    assert all(projection[L.mul(x, y)] == quotient.mul(projection[x], projection[y])
               for x in range(L.order) for y in range(L.order))
    assert tuple(x for x in range(L.order) if projection[x] == 0) == tuple(sorted(N))
    return FactorLoop(quotient, projection, tuple(cosets))


def left_transversals(L, N):
    """All sets of left-coset representatives containing 0, lexicographically."""
    cosets = left_cosets(L, N)
    if cosets is None:
        raise NotASubloopError("left cosets of %r are not well defined" % (tuple(N),))
    choices = [(0,) if 0 in block else block for block in cosets]
    for combo in itertools.product(*choices):
        yield tuple(sorted(combo))


# ---------------------------------------------------------------------------
# identity predicates

@dataclass(frozen=True)
class LoopProperties:
    associative: bool
    commutative: bool
    left_inverse: bool
    right_inverse: bool
    left_alternative: bool
    right_alternative: bool
    flexible: bool
    left_bol: bool
    right_bol: bool
    inverse_maps_coincide: bool

    def matches(self, wanted):
        return all(getattr(self, key) == val for key, val in wanted.items())


def loop_properties(L):
    """Exhaustively test each defining identity.

    The left and right inverse properties are each tested with their own
    candidate inverse map (x\\e, respectively e/x); whether the two maps
    coincide is reported separately.
    """
    t = L.table
    n = L.order
    rng = range(n)
    linv = [L.ldiv(x, 0) for x in rng]
    rinv = [L.rdiv(0, x) for x in rng]
    return LoopProperties(
        associative=L.is_associative,
        commutative=all(t[x][y] == t[y][x] for x in rng for y in rng),
        left_inverse=all(t[linv[x]][t[x][y]] == y for x in rng for y in rng),
        right_inverse=all(t[t[y][x]][rinv[x]] == y for x in rng for y in rng),
        left_alternative=all(t[x][t[x][y]] == t[t[x][x]][y] for x in rng for y in rng),
        right_alternative=all(t[t[y][x]][x] == t[y][t[x][x]] for x in rng for y in rng),
        flexible=all(t[x][t[y][x]] == t[t[x][y]][x] for x in rng for y in rng),
        left_bol=all(t[t[x][t[y][x]]][z] == t[x][t[y][t[x][z]]]
                     for x in rng for y in rng for z in rng),
        right_bol=all(t[z][t[t[x][y]][x]] == t[t[t[z][x]][y]][x]
                      for x in rng for y in rng for z in rng),
        inverse_maps_coincide=(linv == rinv),
    )


# ---------------------------------------------------------------------------
# morphism search

def _iso_solutions(L1, L2, fixed, allowed):
    n = L1.order
    if L2.order != n:
        return
    img = [-1] * n
    pre = [-1] * n
    trail = []

    def assign(x, v):
        stack = [(x, v)]
        while stack:
            x, v = stack.pop()
            cur = img[x]
            if cur >= 0:
                if cur != v:
                    return False
                continue
            if pre[v] >= 0:
                return False
            if allowed is not None and not allowed(x, v):
                return False
            img[x] = v
            pre[v] = x
            trail.append((x, v))
            for y in range(n):
                iy = img[y]
                if iy >= 0:
                    stack.append((L1.table[x][y], L2.table[v][iy]))
                    stack.append((L1.table[y][x], L2.table[iy][v]))
        return True

    def undo(mark):
        while len(trail) > mark:
            x, v = trail.pop()
            img[x] = -1
            pre[v] = -1

    def dfs():
        x = next((i for i in range(n) if img[i] < 0), -1)
        if x < 0:
            yield tuple(img)
            return
        for v in range(n):
            if pre[v] < 0:
                mark = len(trail)
                if assign(x, v):
                    yield from dfs()
                undo(mark)

    # a bijective homomorphism sends identity to identity
    if not assign(0, 0):
        return
    if fixed:
        for x, v in sorted(fixed.items()):
            if not assign(x, v):
                return
    yield from dfs()


def find_isomorphism(L1, L2, fixed=None, allowed=None):
    """First bijective homomorphism L1 -> L2 extending `fixed`, or None.

    Backtracking over elements in index order with forced-product
    propagation; images are tried in increasing order, so the result is
    deterministic and lexicographically least.
    """
    for sol in _iso_solutions(L1, L2, fixed, allowed):
        return sol
    return None


def find_isomorphisms(L1, L2, fixed=None, allowed=None):
    """All bijective homomorphisms L1 -> L2 extending `fixed`."""
    yield from _iso_solutions(L1, L2, fixed, allowed)


def automorphisms(L):
    """Complete list of automorphisms in lexicographic order."""
    return list(_iso_solutions(L, L, None, None))


def inner_automorphism(G, s):
    """t -> s.t.s^-1 on an associative table."""
    if not G.is_associative:
        raise NotAGroupError("inner automorphisms require an associative table")
    si = G.inv(s)
    return tuple(G.mul(G.mul(s, t), si) for t in range(G.order))


def inner_automorphisms(G):
    """Duplicate-free listing of the inner automorphism subgroup."""
    return sorted({inner_automorphism(G, s) for s in range(G.order)})


def find_homomorphisms(L1, L2):
    """All homomorphisms L1 -> L2 (not necessarily injective), lex order."""
    n = L1.order
    img = [-1] * n
    trail = []

    def assign(x, v):
        stack = [(x, v)]
        while stack:
            x, v = stack.pop()
            cur = img[x]
            if cur >= 0:
                if cur != v:
                    return False
                continue
            img[x] = v
            trail.append(x)
            for y in range(n):
                if img[y] >= 0:
                    stack.append((L1.table[x][y], L2.table[v][img[y]]))
                    stack.append((L1.table[y][x], L2.table[img[y]][v]))
        return True

    def undo(mark):
        while len(trail) > mark:
            img[trail.pop()] = -1

    def dfs():
        x = next((i for i in range(n) if img[i] < 0), -1)
        if x < 0:
            yield tuple(img)
            return
        for v in range(L2.order):
            mark = len(trail)
            if assign(x, v):
                yield from dfs()
            undo(mark)

    if assign(0, 0):
        yield from dfs()
