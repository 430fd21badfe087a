"""Canonical forms over Z/q, cross-checked against brute-force span closure."""

import numpy as np
import pytest

from finring.howell import gcdex, howell, prime_power, reduce_vectors, span_size


def brute_span(rows, q, width=None):
    """Every Z/q-combination of the rows, as a frozen set of tuples."""
    rows = [tuple(int(v) % q for v in r) for r in rows]
    if width is None:
        width = len(rows[0])
    seen = {tuple([0] * width)}
    frontier = list(seen)
    while frontier:
        base = frontier.pop()
        for r in rows:
            nxt = tuple((a + b) % q for a, b in zip(base, r))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def test_gcdex_identity():
    for a, b in [(12, 18), (0, 5), (7, 0), (36, 48), (1, 1)]:
        g, x, y = gcdex(a, b)
        assert g == x * a + y * b
        assert g >= 0


def test_prime_power_decomposition():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(2) == (2, 1)
    with pytest.raises(Exception):
        prime_power(12)


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9])
def test_howell_row_space_preserved(q):
    rng = np.random.default_rng(7)
    for _ in range(25):
        m = rng.integers(1, 5)
        n = rng.integers(1, 5)
        M = rng.integers(0, q, size=(m, n))
        H, piv = howell(M.copy(), q)
        assert brute_span(M.tolist(), q) == brute_span(H.tolist(), q, int(n))


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9])
def test_span_size_matches_brute_force(q):
    p, _ = prime_power(q)
    rng = np.random.default_rng(11)
    for _ in range(25):
        m = rng.integers(1, 5)
        n = rng.integers(1, 5)
        M = rng.integers(0, q, size=(m, n))
        H, piv = howell(M.copy(), q)
        # span_size reports |Z_q^n / span|, so the span itself has q^n / that
        assert q ** int(n) // span_size(piv, n, q, p) == len(brute_span(M.tolist(), q))


def test_howell_is_canonical_under_row_moves():
    q = 4
    M = np.array([[2, 1, 3], [0, 2, 2], [2, 3, 1]])
    H1, p1 = howell(M.copy(), q)
    rng = np.random.default_rng(3)
    for _ in range(10):
        perm = rng.permutation(M.shape[0])
        scale = 1 + 2 * rng.integers(0, 2, size=(M.shape[0], 1))  # odd units mod 4
        M2 = (M[perm] * scale) % q
        # add a random multiple of another row
        M2[0] = (M2[0] + rng.integers(0, q) * M2[1]) % q
        H2, p2 = howell(M2, q)
        assert brute_span(M.tolist(), q) == brute_span(M2.tolist(), q)
        assert np.array_equal(H1, H2)
        assert p1 == p2


def test_annihilator_row_appears():
    # 2*(2) = 0 mod 4: span of [2,1] needs the annihilator row [0,2]
    H, piv = howell(np.array([[2, 1]]), 4)
    assert len(brute_span(H.tolist(), 4)) == len(brute_span([[2, 1]], 4))
    assert any(v > 0 for _, v in piv) or H.shape[0] > 1


def test_reduce_vectors_idempotent_and_member_zero():
    q, p = 8, 2
    M = np.array([[4, 2, 1], [0, 4, 2]])
    H, piv = howell(M.copy(), q)
    members = np.array(sorted(brute_span(M.tolist(), q)))
    red = reduce_vectors(members.copy(), H, piv, q, p)
    assert not red.any(), "members of the span must reduce to zero"
    V = np.array([[1, 0, 0], [0, 1, 0]])
    r1 = reduce_vectors(V.copy(), H, piv, q, p)
    r2 = reduce_vectors(r1.copy(), H, piv, q, p)
    assert np.array_equal(r1, r2)


def test_prime_field_degenerates_to_rref():
    H, piv = howell(np.array([[1, 2], [2, 4]]), 5)
    assert H.shape[0] == 1
    assert np.array_equal(H[0], [1, 2])
    assert piv == [(0, 0)]
