import random
from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import comb

import pytest

from barett_rsk.rsk import all_matrices, phi
from barett_rsk.schur import (
    ExponentMonomial,
    F_from_barett,
    F_schur,
    alpha_census,
    count_square_fillings,
    enumerate_tableaux,
    schur_eval,
    specialize_two_values,
    t_substitution_count,
    two_value_symmetrization,
)
from barett_rsk.tableaux import YoungTableau, partitions_in_box

from .oracles import brute_force_schur, brute_force_tableaux


def rand_point(rng, n):
    def draw():
        return Fraction(rng.randint(1, 30), rng.randint(1, 9))

    chi = [draw() for _ in range(n)]
    delta = []
    while len(delta) < n:
        d = draw()
        if d not in delta:
            delta.append(d)
    return chi, delta


def test_enumerate_examples():
    assert [t.rows for t in enumerate_tableaux((1, 1), 2)] == [((1,), (2,))]
    assert sorted(t.rows for t in enumerate_tableaux((2,), 2)) == [((1, 1),), ((1, 2),), ((2, 2),)]
    assert list(enumerate_tableaux((1, 1, 1), 2)) == []


def test_enumerate_contains_displayed_tableau():
    target = YoungTableau(((1, 1, 1, 4), (2, 2), (3, 5)))
    found = list(enumerate_tableaux((4, 2, 2), 5))
    assert target in found
    assert len(found) == len(set(found))


def test_schur_eval_examples():
    assert schur_eval((1,), (2, 3, 7)) == 12
    assert schur_eval((1, 1), (1,) * 6) == comb(6, 2)
    assert schur_eval((2, 1), (1, 1, 1)) == 8 == len(brute_force_tableaux((2, 1), 3))


def test_schur_against_brute_force():
    for n in range(1, 5):
        for lam in partitions_in_box(4, 4):
            if lam.size > 8:
                continue
            expected = len(brute_force_tableaux(lam.parts, n))
            assert sum(1 for _ in enumerate_tableaux(lam, n)) == expected
            assert schur_eval(lam, (1,) * n) == expected


def test_schur_counts_for_large_shapes():
    # Hook-content formula: s_{(4,4)}(1^4) = 105 and s_{(4,4,4,4)}(1^4) = 1.
    assert schur_eval((4, 4), (1,) * 4) == 105
    assert schur_eval((4, 4, 4, 4), (1,) * 4) == 1


def test_schur_weighted_brute_force():
    vals = (2, 3, 5)
    for lam in [(2, 1), (3,), (2, 2), (3, 1, 1)]:
        assert schur_eval(lam, vals) == brute_force_schur(lam, vals)


def test_schur_is_symmetric():
    vals = (Fraction(1, 2), 3, 7, 11)
    base = schur_eval((3, 2, 1), vals)
    for perm in permutations(vals):
        assert schur_eval((3, 2, 1), perm) == base


def test_F_examples():
    assert F_schur(1).terms == {ExponentMonomial((1,), (0,)): 1}
    f2 = F_schur(2)
    assert f2.multiset_size == 8
    assert f2((1, 2), (3, 5)) == F_from_barett((1, 2), (3, 5))
    assert F_from_barett((1, 1), (2, 3)) == 115
    assert F_from_barett((Fraction(7),), (Fraction(4),)) == 4


def test_F_sizes():
    assert [F_schur(n).multiset_size for n in (1, 2, 3)] == [1, 8, 256]
    # Distinct supports are fewer than tableau pairs once n = 3.
    assert [F_schur(n).distinct_size for n in (1, 2, 3)] == [1, 8, 189]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_F_degree_and_s1(n):
    for mono in F_schur(n).terms:
        assert mono.degree == n * n
        assert len(mono.delta) == len(mono.chi) == n
        # The full first row alone holds n delta letters.
        assert sum(mono.delta) >= n


@pytest.mark.parametrize("n", [1, 2, 3])
def test_F_oracle_equivalence(n):
    rng = random.Random(n)
    f = F_schur(n)
    for _ in range(5):
        chi, delta = rand_point(rng, n)
        assert f(chi, delta) == F_from_barett(chi, delta)


def test_F_symmetry():
    f = F_schur(3)
    chi, delta = [Fraction(2), Fraction(5, 3), Fraction(7)], [Fraction(1, 2), 3, Fraction(11, 4)]
    base = f(chi, delta)
    for pc in permutations(chi):
        for pd in permutations(delta):
            assert f(list(pc), list(pd)) == base


@pytest.mark.parametrize("n", [1, 2, 3])
def test_support_matches_bijection(n):
    from_phi = Counter()
    for m in all_matrices(n):
        s = phi(m)
        if s.satisfies_s1():
            from_phi[ExponentMonomial(*s.monomial())] += 1
    assert from_phi == F_schur(n).as_counter()


def test_F_from_barett_rejects_duplicates():
    with pytest.raises(ValueError):
        F_from_barett((1, 1), (2, 2))


def test_count_square_fillings():
    assert [count_square_fillings(n) for n in (1, 2, 3)] == [1, 8, 256]
    with pytest.raises(ValueError):
        count_square_fillings(4)
    assert alpha_census(3) == {"formula": 256, "enumerated": 256, "match": True}


def test_t_substitution():
    assert t_substitution_count(1, 5) == 5
    assert t_substitution_count(2, 2) == 576
    assert [t_substitution_count(n, 1) for n in (1, 2, 3, 4)] == [1, 8, 256, 2**15]
    with pytest.raises(ValueError):
        t_substitution_count(2, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("t", [2, Fraction(3, 2)])
def test_t_substitution_matches_F(n, t):
    t = Fraction(t)
    powers = [t**i for i in range(1, n + 1)]
    assert F_schur(n)(powers, powers) == t_substitution_count(n, t)


def test_two_value_specialization():
    assert specialize_two_values(1) == [0, 1]
    for n in (1, 2, 3):
        sym, binom = two_value_symmetrization(n)
        assert sym == binom
    assert two_value_symmetrization(2)[0] == [1, 4, 6, 4, 1]
    assert sum(specialize_two_values(3)) == 256


def test_symbolic_bound():
    with pytest.raises(ValueError):
        F_schur(4)
    with pytest.raises(ValueError):
        F_schur(0)
