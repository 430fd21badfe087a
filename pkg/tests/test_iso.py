"""Isomorphism testing: invariant screens, backtracking search, verified maps."""

import numpy as np
import pytest

from finring.construct import (
    column_bimodule,
    cyclic,
    formal_triangular,
    galois,
    upper_triangular,
)
from finring.iso import element_invariants, fingerprint, is_isomorphic
from finring.presentation import build_from_text
from finring.table import RingTable, opposite


def relabel(R, seed):
    """The same ring with elements shuffled by a seeded permutation."""
    rng = np.random.default_rng(seed)
    pi = rng.permutation(R.order)
    sigma = np.argsort(pi)
    add = pi[R.add[np.ix_(sigma, sigma)]]
    mul = pi[R.mul[np.ix_(sigma, sigma)]]
    labels = [R.labels[sigma[i]] + "s" for i in range(R.order)]
    return RingTable(R.order, labels, add, mul, int(pi[R.zero]), int(pi[R.one]))


def assert_valid_mapping(R, S, phi):
    phi = np.asarray(phi)
    assert len(np.unique(phi)) == R.order
    assert np.array_equal(S.add[np.ix_(phi, phi)], phi[R.add])
    assert np.array_equal(S.mul[np.ix_(phi, phi)], phi[R.mul])
    assert phi[R.zero] == S.zero and phi[R.one] == S.one


# -- invariant screens --------------------------------------------------------


def test_characteristic_separates_order_four_local_rings():
    r = is_isomorphic(cyclic(4), build_from_text("F2<x>/(x^2)"))
    assert r.isomorphic is False
    assert r.reason == "fingerprint:characteristic"


def test_order_mismatch_is_cheap():
    r = is_isomorphic(cyclic(4), cyclic(8))
    assert r.isomorphic is False
    assert r.reason == "fingerprint:order"


def test_fingerprint_is_stable_under_relabeling():
    R = upper_triangular(galois(2), 2)
    assert fingerprint(R) == fingerprint(relabel(R, 3))


def test_element_invariants_shape():
    R = cyclic(4)
    inv = element_invariants(R)
    assert inv.shape[0] == 4
    # zero and one land in singleton classes distinct from each other
    assert not np.array_equal(inv[R.zero], inv[R.one])


# -- positive searches --------------------------------------------------------


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_shuffled_copy_is_found_isomorphic(seed):
    R = build_from_text("F2<u,v>/(u^3,v^2,vu,u^2-uv)")
    S = relabel(R, seed)
    r = is_isomorphic(R, S)
    assert r.isomorphic is True
    assert_valid_mapping(R, S, r.mapping)


def test_triangular_ring_matches_its_opposite():
    R = upper_triangular(galois(2), 2)
    S = opposite(R)
    r = is_isomorphic(R, S)
    assert r.isomorphic is True
    assert_valid_mapping(R, S, r.mapping)


def test_identity_is_found_quickly():
    R = cyclic(9)
    r = is_isomorphic(R, R)
    assert r.isomorphic is True
    assert_valid_mapping(R, R, r.mapping)


# -- negative searches --------------------------------------------------------


def test_order_128_triangular_ring_differs_from_its_opposite():
    A, B, spec = column_bimodule(galois(2), 2)
    T = formal_triangular(A, B, spec)
    r = is_isomorphic(T, opposite(T))
    assert r.isomorphic is False
    assert r.reason.startswith("fingerprint:")


def test_order_sixteen_siblings_are_distinguished():
    Ra = build_from_text("F2<u,v>/(u^3,v^3,vu,u^2-uv,v^2-uv)")
    Rb = build_from_text("F2<u,v>/(u^3,v^2,vu,u^2-uv)")
    assert is_isomorphic(Ra, Rb).isomorphic is False


# -- resource limits ----------------------------------------------------------


def test_tiny_budget_returns_inconclusive():
    R = build_from_text("F2<u,v>/(u^3,v^2,u^2+uv+vu,uvu)")
    r = is_isomorphic(R, relabel(R, 7), node_budget=1)
    assert r.isomorphic is None
    assert r.reason == "budget"
    assert bool(r) is False  # inconclusive is falsy
