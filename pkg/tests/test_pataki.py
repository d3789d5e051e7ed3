from math import comb

import pytest

from gramspec.errors import InvalidSliceDim
from gramspec.pataki import PatakiInterval, pataki_binary, pataki_general


def brute_force(n, m):
    """Ranks satisfying both inequalities, by direct scan."""
    return [r for r in range(0, n + 1)
            if m >= comb(n - r + 1, 2) and m + comb(r + 1, 2) <= comb(n + 1, 2)]


def test_general_examples():
    assert pataki_general(2, 0).to_json() == {"r_min": 2, "r_max": 2}
    assert (pataki_general(4, 3).r_min, pataki_general(4, 3).r_max) == (2, 3)


def test_n5_m6_against_scan():
    assert brute_force(5, 6) == [2, 3]
    P = pataki_general(5, 6)
    assert (P.r_min, P.r_max) == (2, 3)


def test_binary_examples():
    assert list(pataki_binary(1).ranks()) == [2]
    assert list(pataki_binary(3).ranks()) == [2, 3]
    assert list(pataki_binary(5).ranks()) == [2, 3, 4]


def test_invalid_slice():
    with pytest.raises(InvalidSliceDim):
        pataki_general(2, 4)


def test_brute_force_agreement():
    for n in range(1, 41):
        for m in range(comb(n + 1, 2) + 1):
            P = pataki_general(n, m)
            expected = brute_force(n, m)
            if expected:
                assert list(P.ranks()) == expected, (n, m)
            else:
                assert P.is_empty, (n, m)


def test_binary_matches_general():
    for d in range(1, 51):
        B, G = pataki_binary(d), pataki_general(d + 1, comb(d, 2))
        assert (B.r_min, B.r_max) == (G.r_min, G.r_max)
        assert comb(B.r_max + 1, 2) <= 2 * d + 1 < comb(B.r_max + 2, 2)


def test_empty_interval_is_representable():
    P = PatakiInterval(3, 2, 4, 0)
    assert P.is_empty and 2 not in P and list(P.ranks()) == []
