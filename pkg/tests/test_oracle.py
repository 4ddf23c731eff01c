import random

import pytest

from topfacering.errors import DuplicateLabelSets, NotAcyclic, NotInFaceRing
from topfacering.facering import (
    decompose,
    element,
    hilbert,
    multiply,
    perturb,
    random_member,
    tau,
    zero,
)
from topfacering.linalg import Echelon, rank
from topfacering.algebra import GF2, QQ
from topfacering.models import BUILTINS, build_builtin
from topfacering.oracle import brute_basis_hilbert, brute_basis_report, naive_membership, sr_hilbert


def test_rank_small_cases():
    assert rank([{0: 1, 1: 2}, {0: 2, 1: 4}], QQ) == 1
    assert rank([{0: 1, 1: 1}, {0: 1, 1: -1}], QQ) == 2
    assert rank([{0: 1, 1: 1}, {0: 1, 1: -1}], GF2) == 1
    assert rank([], QQ) == 0


def test_echelon_solve():
    ech = Echelon(QQ)
    ech.add("u", {0: 1, 1: 1})
    ech.add("v", {1: 2, 2: 1})
    assert ech.solve({0: 1, 1: 3, 2: 1}) == {"u": 1, "v": 1}
    assert ech.solve({2: 1}) is None
    assert ech.solve({}) == {}


def test_sr_triangle(triangle):
    assert sr_hilbert(triangle, 8) == [1, 0, 3, 0, 6, 0, 9, 0, 12]


def test_sr_rejects_duplicate_labels(bigon):
    with pytest.raises(DuplicateLabelSets):
        sr_hilbert(bigon, 4)


def test_sr_rejects_cohomology(csum):
    with pytest.raises(NotAcyclic):
        sr_hilbert(csum, 4)


def test_sr_no_boundary():
    from topfacering.models import build_complex

    C = build_complex(QQ, {"Q": set()}, [])
    assert sr_hilbert(C, 5) == [1, 0, 0, 0, 0, 0]


def test_brute_bigon_independent(bigon):
    report = brute_basis_report(bigon, 6)
    assert [r.rank for r in report] == [1, 0, 2, 0, 4, 0, 6]
    assert all(r.independent for r in report)


def test_brute_connected_sum(csum):
    assert brute_basis_hilbert(csum, 6) == [1, 2, 3, 0, 6, 0, 9]


def test_brute_matches_sr_triangle(triangle):
    assert brute_basis_hilbert(triangle, 8) == sr_hilbert(triangle, 8)


@pytest.mark.parametrize("name", BUILTINS)
def test_brute_matches_closed_form(name):
    C = build_builtin(name).complex
    assert brute_basis_hilbert(C, 12) == hilbert(C, 12)


def test_sr_matches_square():
    C = build_builtin("square").complex
    assert sr_hilbert(C, 12) == hilbert(C, 12)


def test_naive_product_matches_decompose(bigon):
    prod = multiply(bigon, tau(bigon, 1), tau(bigon, 2))
    res = naive_membership(bigon, prod)
    assert res.member
    dec = decompose(bigon, prod)
    expected = {(E, m, k): c for E, p in dec.parts.items() for m, vec in p.terms.items() for k, c in enumerate(vec) if c}
    assert res.coefficients == expected


def test_naive_rejects_incompatible(bigon):
    bad = element(bigon, {bigon.by_name("F1"): {((1, 1),): (1,)}})
    assert not naive_membership(bigon, bad).member
    assert naive_membership(bigon, zero(bigon)).member


CASES = [(name, None) for name in BUILTINS] + [(name, 3) for name in BUILTINS if name != "rp2-no-boundary"]


@pytest.mark.parametrize("seed, name, characteristic", [(k, *case) for k, case in enumerate(CASES)])
def test_membership_agreement(seed, name, characteristic):
    C = build_builtin(name, characteristic).complex
    rng = random.Random(seed)
    for k in range(40):
        a = random_member(C, rng)
        if k % 2:
            a = perturb(C, a, rng)
        try:
            decompose(C, a)
            fast = True
        except NotInFaceRing:
            fast = False
        assert naive_membership(C, a).member == fast
