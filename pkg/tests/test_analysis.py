import random

import pytest

from braidpi.analysis import (AbelianInvariants, CosetLimitExceeded, abelian_invariants,
                              det, holds_in, is_abelian, mat_mul, relation_matrix,
                              smith_normal_form, todd_coxeter,
                              trivial_in_abelianization)
from braidpi.presentation import Presentation
from braidpi.word_core import GenSym, Word, alphabet

from .bruteforce import group_order_by_enumeration

A, B = GenSym("a"), GenSym("b")


def word(*pairs):
    return Word.of(pairs)


def pres(names, rels):
    return Presentation(alphabet(*names), rels)


Z5 = pres(["a"], [word((A, 1)) ** 5])
S3 = pres(["a", "b"], [word((A, 1)) ** 2, word((B, 1)) ** 2,
                       (word((A, 1)) * word((B, 1))) ** 3])


def test_todd_coxeter_examples():
    assert todd_coxeter(Z5).order == 5
    assert todd_coxeter(S3).order == 6


def test_todd_coxeter_free_group_overflow():
    with pytest.raises(CosetLimitExceeded):
        todd_coxeter(pres(["a", "b"], []), max_cosets=50)


def test_todd_coxeter_deterministic():
    t1 = todd_coxeter(S3)
    t2 = todd_coxeter(S3)
    assert t1.rows == t2.rows


def test_todd_coxeter_trivial_group():
    assert todd_coxeter(pres(["a"], [word((A, 1))])).order == 1
    assert todd_coxeter(pres([], [])).order == 1


def test_table_validates():
    t = todd_coxeter(S3)
    t.validate(S3)
    assert t.complete


def test_holds_in():
    t = todd_coxeter(Z5)
    assert holds_in(t, word((A, 1)) ** 5)
    assert holds_in(t, word((A, 1)) ** 10)
    assert not holds_in(t, word((A, 1)) ** 2)
    t3 = todd_coxeter(S3)
    assert holds_in(t3, (word((A, 1)) * word((B, 1))) ** 3)
    assert not holds_in(t3, word((A, 1)) * word((B, 1)))


def test_is_abelian():
    assert not is_abelian(todd_coxeter(S3))
    assert is_abelian(todd_coxeter(Z5))
    z2z2 = pres(["a", "b"], [word((A, 1)) ** 2, word((B, 1)) ** 2,
                             word((A, 1), (B, 1), (A, -1), (B, -1))])
    assert is_abelian(todd_coxeter(z2z2))


C = GenSym("c")

ORACLE_CORPUS = [
    # (names, relator builder, expected order, enumeration bound)
    (["a"], lambda: [word((A, 1)) ** 5], 5, 7),
    (["a"], lambda: [word((A, 1)) ** 12], 12, 14),
    (["a"], lambda: [word((A, 1)) ** 24], 24, 26),
    (["a", "b"], lambda: [word((A, 1)) ** 2, word((B, 1)) ** 2,
                          (word((A, 1)) * word((B, 1))) ** 3], 6, 8),       # S3
    (["a", "b"], lambda: [word((A, 1)) ** 4, word((B, 1)) ** 2,
                          (word((A, 1)) * word((B, 1))) ** 2], 8, 7),       # D4
    (["a", "b"], lambda: [word((A, 1)) ** 6, word((B, 1)) ** 2,
                          (word((A, 1)) * word((B, 1))) ** 2], 12, 8),      # D6
    (["a", "b"], lambda: [word((A, 1)) ** 2, word((B, 1)) ** 2,
                          word((A, 1), (B, 1), (A, -1), (B, -1))], 4, 6),
    (["a", "b"], lambda: [word((A, 1)) ** 4, word((B, 1)) ** 2,
                          word((A, 1), (B, 1), (A, -1), (B, -1))], 8, 7),
    (["a", "b"], lambda: [word((A, 1)) ** 4, word((B, 1)) ** 4,
                          word((A, 1), (B, 1), (A, -1), (B, -1))], 16, 9),
    (["a", "b"], lambda: [word((A, 1)) ** 4, word((A, 1), (A, 1), (B, -1), (B, -1)),
                          word((B, -1), (A, 1), (B, 1), (A, 1))], 8, 8),    # quaternions
    (["a", "b", "c"], lambda: [word((A, 1)) ** 2, word((B, 1)) ** 2, word((C, 1)) ** 2,
                               word((A, 1), (B, 1), (A, -1), (B, -1)),
                               word((A, 1), (C, 1), (A, -1), (C, -1)),
                               word((B, 1), (C, 1), (B, -1), (C, -1))], 8, 6),
    (["a", "b"], lambda: [word((A, 1)) ** 4, word((B, 1)) ** 2,
                          (word((A, 1)) * word((B, 1))) ** 3], 24, 9),      # S4
]


def test_todd_coxeter_against_enumeration_oracle():
    assert len(ORACLE_CORPUS) >= 10
    for names, rels, expected, bound in ORACLE_CORPUS:
        p = pres(names, rels())
        assert todd_coxeter(p).order == expected
        assert group_order_by_enumeration(p, bound) == expected


def test_smith_normal_form_examples():
    d, u, v = smith_normal_form([[4, 0], [0, 4]])
    assert [d[0][0], d[1][1]] == [4, 4]
    d, u, v = smith_normal_form([[2, 0], [0, 3]])
    assert [d[0][0], d[1][1]] == [1, 6]
    d, u, v = smith_normal_form([[0]])
    assert d == [[0]]


def _check_snf(m):
    rows, cols = len(m), len(m[0])
    d, u, v = smith_normal_form(m)
    assert mat_mul(mat_mul(u, m), v) == d
    assert det(u) in (1, -1) and det(v) in (1, -1)
    diag = [d[i][i] for i in range(min(rows, cols))]
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert d[i][j] == 0
    for i in range(len(diag) - 1):
        if diag[i] == 0:
            assert diag[i + 1] == 0
        else:
            assert diag[i + 1] % diag[i] == 0
    assert all(x >= 0 for x in diag)


def test_smith_normal_form_random():
    rng = random.Random(41)
    for _ in range(100):
        rows = rng.randrange(1, 9)
        cols = rng.randrange(1, 9)
        m = [[rng.randint(-50, 50) for _ in range(cols)] for _ in range(rows)]
        _check_snf(m)


def test_abelian_invariants_examples():
    p = pres(["a", "b"], [word((A, 1)) ** 4, word((B, 1)) ** 4,
                          word((A, 1), (B, 1), (A, -1), (B, -1))])
    assert abelian_invariants(p) == AbelianInvariants((4, 4), 0)
    p = pres(["a", "b"], [word((A, 1)) ** 4, word((B, 1)) ** 2,
                          word((A, 1), (B, 1), (A, -1), (B, -1))])
    assert abelian_invariants(p) == AbelianInvariants((2, 4), 0)
    assert abelian_invariants(pres(["a", "b"], [])).free_rank == 2
    assert abelian_invariants(Z5) == AbelianInvariants((5,), 0)


def test_order_matches_invariants_for_finite_abelian():
    p = pres(["a", "b"], [word((A, 1)) ** 4, word((B, 1)) ** 4,
                          word((A, 1), (B, 1), (A, -1), (B, -1))])
    t = todd_coxeter(p)
    inv = abelian_invariants(p)
    assert is_abelian(t) and inv.free_rank == 0
    assert t.order == inv.order() == 16


def test_relation_matrix():
    p = pres(["a", "b"], [word((A, 1), (B, -1), (A, 1))])
    assert relation_matrix(p) == [[2, -1]]


def test_trivial_in_abelianization():
    p = pres(["a", "b"], [word((A, 1)) ** 2, word((B, 1)) ** 3])
    assert trivial_in_abelianization(p, word((A, 1)) ** 4)
    assert trivial_in_abelianization(p, word((A, 1)) ** 2 * word((B, 1)) ** 3)
    assert not trivial_in_abelianization(p, word((A, 1)))
    assert not trivial_in_abelianization(p, word((A, 1), (B, 1)))
    free = pres(["a"], [])
    assert trivial_in_abelianization(free, word((A, 1), (A, -1)))
    assert not trivial_in_abelianization(free, word((A, 1)))
