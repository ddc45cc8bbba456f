import pytest

from braidpi.analysis import todd_coxeter
from braidpi.presentation import Presentation, tietze_simplify
from braidpi.schreier import (CyclicMap, QuotientMapError, Transversal,
                              TransversalError, subgroup_presentation)
from braidpi.word_core import GenSym, Word, alphabet

A, B = GenSym("a"), GenSym("b")


def word(*pairs):
    return Word.of(pairs)


def free(*names):
    return Presentation(alphabet(*names), [])


def test_index_three_subgroup_of_z():
    p = free("a")
    q = CyclicMap.onto(p, 3, {A: 1})
    sub, gens = subgroup_presentation(p, q)
    assert len(sub.alphabet) == 1 and sub.relators == ()
    x = sub.alphabet.symbols[0]
    assert gens.backmap[x] == Word.gen(A) ** 3


@pytest.mark.parametrize("n", [2, 3, 5])
@pytest.mark.parametrize("g", [2, 3])
def test_nielsen_schreier_rank(n, g):
    names = ["a", "b", "c"][:g]
    p = free(*names)
    images = {GenSym(nm): (1 if i == 0 else 0) for i, nm in enumerate(names)}
    q = CyclicMap.onto(p, n, images)
    sub, _ = subgroup_presentation(p, q)
    simplified, _ = tietze_simplify(sub)
    assert simplified.relators == ()
    assert len(simplified.alphabet) == n * (g - 1) + 1


def test_mixed_image_free_rank():
    p = free("a", "b")
    q = CyclicMap.onto(p, 3, {A: 1, B: 2})
    sub, _ = subgroup_presentation(p, q)
    simplified, _ = tietze_simplify(sub)
    assert len(simplified.alphabet) == 4 and simplified.relators == ()


def test_inconsistent_map_rejected():
    p = Presentation(alphabet("a"), [word((A, 1)) ** 5])
    with pytest.raises(QuotientMapError):
        CyclicMap.onto(p, 3, {A: 1})  # a^5 maps to 5 != 0 mod 3
    with pytest.raises(QuotientMapError):
        CyclicMap.onto(free("a", "b"), 4, {A: 2, B: 0})  # not onto
    with pytest.raises(QuotientMapError):
        CyclicMap.onto(free("a", "b"), 2, {A: 1})  # missing image


def test_transversal_validation():
    p = free("a", "b")
    q = CyclicMap.onto(p, 2, {A: 1, B: 0})
    Transversal.of([Word.identity(), Word.gen(A)]).validate(q)
    with pytest.raises(TransversalError):
        Transversal.of([Word.gen(A), Word.identity()]).validate(q)
    with pytest.raises(TransversalError):
        Transversal.of([Word.identity(), Word.gen(B)]).validate(q)
    with pytest.raises(TransversalError):
        # maps correctly but is not prefix-closed
        Transversal.of([Word.identity(), word((B, 1), (A, 1), (B, -1))]).validate(q)


def test_default_transversal_is_schreier():
    p = free("a", "b")
    q = CyclicMap.onto(p, 5, {A: 2, B: 1})
    t = Transversal.schreier_default(p, q)
    t.validate(q)
    assert t.reps[0].is_identity()


def test_index_times_subgroup_order():
    # S3 = <a, b | a^2, b^2, (ab)^3>, kernel of a,b -> 1 mod 2 is C3
    alph = alphabet("a", "b")
    p = Presentation(alph, [word((A, 1)) ** 2, word((B, 1)) ** 2,
                            (word((A, 1)) * word((B, 1))) ** 3])
    q = CyclicMap.onto(p, 2, {A: 1, B: 1})
    sub, _ = subgroup_presentation(p, q)
    assert todd_coxeter(p).order == 2 * todd_coxeter(sub).order == 6

    # Z12 = <a | a^12>, kernel of a -> 1 mod 4 is Z3
    z12 = Presentation(alphabet("a"), [word((A, 1)) ** 12])
    q4 = CyclicMap.onto(z12, 4, {A: 1})
    sub4, _ = subgroup_presentation(z12, q4)
    assert todd_coxeter(sub4).order == 3


def test_backmaps_lie_in_kernel():
    alph = alphabet("a", "b")
    p = Presentation(alph, [word((A, 1)) ** 4, word((B, 1)) ** 4])
    q = CyclicMap.onto(p, 2, {A: 1, B: 1})
    sub, gens = subgroup_presentation(p, q)
    for sym, back in gens.backmap.items():
        assert q.residue(back) == 0
    # rewriting then backmapping returns the original kernel word
    for kernel_word in (word((A, 1), (B, 1)), word((A, 1), (A, 1)),
                        word((B, 1), (A, -1))):
        rewritten = gens.rewrite(kernel_word)
        assert gens.backmap_word(rewritten) == kernel_word


def test_rewrite_rejects_nonkernel_word():
    p = free("a", "b")
    q = CyclicMap.onto(p, 2, {A: 1, B: 0})
    _, gens = subgroup_presentation(p, q)
    with pytest.raises(QuotientMapError):
        gens.rewrite(Word.gen(A))


def test_named_generators():
    p = free("a")
    q = CyclicMap.onto(p, 2, {A: 1})
    x = GenSym("x")
    sub, gens = subgroup_presentation(p, q, names={(1, A): x})
    assert x in sub.alphabet
    assert gens.backmap[x] == Word.gen(A) ** 2
