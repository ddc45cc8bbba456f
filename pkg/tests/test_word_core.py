import random

import pytest

from braidpi.word_core import (Alphabet, AlphabetError, GenSym, MissingImageError,
                               Word, alphabet, format_word, invert, multiply,
                               reduce, substitute)

A, B, C = GenSym("a"), GenSym("b"), GenSym("c")
D1, D2, D4, D5 = (GenSym("d", i) for i in (1, 2, 4, 5))


def w(*letters):
    return Word.of(letters)


def test_reduce_cancellation():
    assert reduce([(A, 1), (A, -1)]).is_identity()
    assert reduce([(A, 1), (B, 1), (B, -1), (A, 1)]) == w((A, 1), (A, 1))
    assert reduce([(A, 1), (B, -1), (A, -1)]) == w((A, 1), (B, -1), (A, -1))


def test_reduce_idempotent():
    rng = random.Random(10)
    syms = [A, B, C]
    for _ in range(2000):
        letters = [(rng.choice(syms), rng.choice((1, -1))) for _ in range(rng.randrange(12))]
        once = reduce(letters)
        assert reduce(once.letters) == once


def test_multiply_examples():
    assert w((A, 1), (B, 1)) * w((B, -1), (C, 1)) == w((A, 1), (C, 1))
    assert w((A, 1)) * Word.identity() == w((A, 1))
    assert (w((D4, 1), (D5, 1)) * w((D5, 1), (D4, 1))
            == w((D4, 1), (D5, 1), (D5, 1), (D4, 1)))


def test_invert_examples():
    assert invert(w((A, 1), (B, -1))) == w((B, 1), (A, -1))
    assert invert(Word.identity()).is_identity()
    assert invert(w((D2, -1), (D1, 1), (D2, 1))) == w((D2, -1), (D1, -1), (D2, 1))


def test_free_group_axioms_random():
    rng = random.Random(11)
    syms = [A, B, C]

    def rand_word():
        return Word.of((rng.choice(syms), rng.choice((1, -1)))
                       for _ in range(rng.randrange(10)))

    for _ in range(10000):
        u, v, z = rand_word(), rand_word(), rand_word()
        assert (u * v) * z == u * (v * z)
        assert (u * u.inverse()).is_identity()
        assert u * Word.identity() == u == Word.identity() * u


def test_substitute_examples():
    images = {A: w((B, 1), (C, 1))}
    assert substitute(w((A, 1), (A, 1)), images) == w((B, 1), (C, 1), (B, 1), (C, 1))
    images = {A: Word.identity(), B: w((B, 1))}
    assert substitute(w((A, 1), (B, 1), (A, -1)), images) == w((B, 1))


def test_substitute_missing_image():
    with pytest.raises(MissingImageError):
        substitute(w((A, 1)), {B: w((B, 1))})


def test_substitute_is_homomorphism_random():
    rng = random.Random(12)
    syms = [A, B, C]

    def rand_word(k):
        return Word.of((rng.choice(syms), rng.choice((1, -1))) for _ in range(k))

    for _ in range(500):
        images = {s: rand_word(rng.randrange(5)) for s in syms}
        u = rand_word(rng.randrange(8))
        v = rand_word(rng.randrange(8))
        assert substitute(u * v, images) == substitute(u, images) * substitute(v, images)
        assert substitute(u.inverse(), images) == substitute(u, images).inverse()


def test_power_and_cyclic_reduction():
    word = w((A, 1), (B, 1))
    assert word ** 3 == w((A, 1), (B, 1), (A, 1), (B, 1), (A, 1), (B, 1))
    assert word ** -1 == word.inverse()
    assert word ** 0 == Word.identity()
    conj = w((C, 1)) * word * w((C, -1))
    assert conj.cyclically_reduced() == word


def test_gensym_parse_roundtrip():
    for text in ("d1", "G", "A2_0", "s_3", "x"):
        assert str(GenSym.parse(text)) == text
    assert GenSym.parse("d12") == GenSym("d", 12)
    with pytest.raises(ValueError):
        GenSym("d1")  # trailing digit belongs in the index
    with pytest.raises(ValueError):
        GenSym("")


def test_alphabet_order_and_encoding():
    alph = alphabet("d1", "d2", "G")
    assert alph.index(GenSym("d", 2)) == 1
    word = w((GenSym("G"), -1), (GenSym("d", 1), 1))
    assert alph.decode(alph.encode(word)) == word
    with pytest.raises(AlphabetError):
        alph.encode(w((A, 1)))
    with pytest.raises(AlphabetError):
        Alphabet([A, A])


def test_exponent_sums():
    word = w((A, 1), (B, -1), (A, 1), (B, 1), (A, -1))
    assert word.exponent_sums() == {A: 1, B: 0}


def test_format_word():
    assert format_word(Word.identity()) == "1"
    assert format_word(w((A, 1), (A, 1), (A, 1))) == "a^3"
    assert format_word(w((A, 1), (B, -1))) == "a b'"
    assert format_word(w((A, -1), (A, -1))) == "a^-2"
