"""Equivalence of Schreier data over a common K and G: the shift-function
criterion, its wide-sense variant allowing an automorphism of K, and an
independent isomorphism-search oracle."""

from __future__ import annotations

import itertools

from .core import LoopError, automorphisms, find_isomorphism, invert_perm
from .decomposition import apply_shift, precompose_automorphism
from .extensions import schreier_loop


class CarrierMismatchError(LoopError):
    pass


def _check_carriers(d1, d2):
    if d1.K.table != d2.K.table or d1.G.table != d2.G.table:
        raise CarrierMismatchError("data must share the same K and G")


def _shift_candidates(K, G):
    """All functions K -> G with value e at the identity, lex order."""
    for rest in itertools.product(range(G.order), repeat=K.order - 1):
        yield (0,) + rest


def equivalent(d1, d2):
    """A shift function n transforming d1 into d2 exactly, or None.

    Exhaustive over the |G|^(|K|-1) candidates; the first witness in
    lexicographic order is returned.
    """
    _check_carriers(d1, d2)
    for n in _shift_candidates(d1.K, d1.G):
        moved = apply_shift(d1, n)
        if moved.theta == d2.theta and moved.f == d2.f:
            return n
    return None


def wide_equivalent(d1, d2):
    """A pair (mu, n) with mu an automorphism of K, or None.

    Searching m = n o mu reduces each mu-slice to the plain shift search on
    the mu-precomposed data.
    """
    _check_carriers(d1, d2)
    for mu in automorphisms(d1.K):
        relabeled = precompose_automorphism(d1, mu)
        m = equivalent(relabeled, d2)
        if m is not None:
            mu_inv = invert_perm(mu)
            n = tuple(m[mu_inv[s]] for s in range(d1.K.order))
            return mu, n
    return None


def equivalence_oracle(d1, d2, wide):
    """Search for an isomorphism between the constructed loops fixing the
    embedded G pointwise; narrow mode also pins the induced map on K-labels
    to the identity."""
    _check_carriers(d1, d2)
    l1 = schreier_loop(d1)
    l2 = schreier_loop(d2)
    m = d1.G.order
    fixed = {t: t for t in range(m)}
    allowed = None
    if not wide:
        allowed = lambda x, v: x // m == v // m
    return find_isomorphism(l1, l2, fixed=fixed, allowed=allowed) is not None
