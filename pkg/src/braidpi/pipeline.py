"""The five-step computation of the orbifold fundamental groups.

Data and stages
---------------
The plane-curve monodromy enters as five braids on 5 strands (b0, b1,
b-1, b+, b-).  Stage one presents the group named Pi' here: generators
d1..d5 (fiber) and G, with stabilizer relations d_i = (d_i) beta for
beta in {b0, b-, b+, b1 b0 b1^-1, b1 b- b1^-1, b1 b+ b1^-1} and
conjugation relations G d_i G^-1 = (d_i) b1^2.

Stage two adjoins d_i^2 and (d1...d5)^2; stage three takes the kernel of
d_i -> 1, G -> 0 (mod 2) with transversal {1, d1}, writing its Schreier
generators D = d1^2, A_i = d1 d_i, B_i = d_i d1^-1, G, s = d1 G d1^-1.
Stage four, for the cover parameter k (m = k+1), adjoins G^m and s^m and
takes the kernel of A_i -> 0, G, s -> 1 (mod m) with transversal {G^i},
producing generators A2_i = G^i A2 G^-i, ..., s_i, and Gh = G^m.  The
resulting group is finite; its order, abelian invariants (Z/4 + Z/4 for
odd k, Z/2 + Z/4 for even k) and commutativity are certified by coset
enumeration and Smith normal form.

Every stage is Tietze-simplified before the next cover; the raw
mechanical relators (up to thousands of letters) and the simplified ones
present the same group, and the regression corpus never compares relator
strings, only consequences.

Regression corpus
-----------------
All relations displayed along the reduction are checked as consequences
in one finite quotient per k: the group T(k) obtained by adjoining
d_i^2, (d1..d5)^2, G^m and (d1 G d1^-1)^m to Pi' (T(k) has order
2m * |final group|).  Words at later stages are pushed down to the
d/G alphabet by composing the Schreier backmaps, then traced from every
coset of T(k)'s table.  The one suspect entry, the printed
(B4 A5)^6 = (B5 A4)^3, is quarantined: both it and its exponent-6
correction are reported, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .analysis import (AbelianInvariants, CosetTable, abelian_invariants, holds_in,
                       is_abelian, todd_coxeter, trivial_in_abelianization)
from .braid import Braid
from .presentation import Presentation, add_relators, tietze_simplify
from .schreier import CyclicMap, SchreierGenSet, Transversal, subgroup_presentation
from .word_core import Alphabet, GenSym, Word

D = [None] + [GenSym("d", i) for i in range(1, 6)]
GAMMA = GenSym("G")
DELTA = GenSym("D")
SIGMA = GenSym("s")
A = {i: GenSym("A", i) for i in range(2, 6)}
B = {i: GenSym("B", i) for i in range(2, 6)}
GHAT = GenSym("Gh")


def fiber_alphabet() -> Alphabet:
    return Alphabet(D[1:6])


def full_alphabet() -> Alphabet:
    return Alphabet(D[1:6] + [GAMMA])


def _braid(letters: list[int]) -> Braid:
    return Braid(5, tuple((abs(l), 1 if l > 0 else -1) for l in letters))


def paper_braids() -> dict[str, Braid]:
    """The five monodromy braids, letter for letter as printed."""
    b0 = _braid([4] * 12 + [2] * 2)
    b1 = _braid([-1, 2, 3, 1, -2, 1])
    bm1 = _braid([-4] * 6 + [-2]) * b1 * _braid([2] + [4] * 6)
    bp = _braid([-1, -1, 2, 3, 4, -3, -2, 1, 1])
    bm = _braid([-4] * 6 + [-2]) * bp * _braid([2] + [4] * 6)
    return {"b0": b0, "b1": b1, "b-1": bm1, "b+": bp, "b-": bm}


def _w(*letters: tuple[GenSym, int] | GenSym) -> Word:
    out = []
    for l in letters:
        out.append((l, 1) if isinstance(l, GenSym) else l)
    return Word.of(out)


def pi_prime_relators() -> list[Word]:
    """The 35 raw relators: 30 stabilizer + 5 conjugation, before normalization."""
    beta = paper_braids()
    fiber = fiber_alphabet()
    b1 = beta["b1"]
    stabilizing = [beta["b0"], beta["b-"], beta["b+"],
                   b1 * beta["b0"] * b1.inverse(),
                   b1 * beta["b-"] * b1.inverse(),
                   b1 * beta["b+"] * b1.inverse()]
    rels: list[Word] = []
    for b in stabilizing:
        for i in range(1, 6):
            rels.append(Word.gen(D[i], -1) * b.act(Word.gen(D[i]), fiber))
    sq = b1 * b1
    for i in range(1, 6):
        conj = _w(GAMMA, D[i], (GAMMA, -1))
        rels.append(conj * sq.act(Word.gen(D[i]), fiber).inverse())
    return rels


def pi_prime() -> Presentation:
    return Presentation(full_alphabet(), pi_prime_relators())


def _squares_and_twist() -> list[Word]:
    twist = Word.of([(D[i], 1) for i in range(1, 6)])
    return [Word.gen(D[i]) ** 2 for i in range(1, 6)] + [twist ** 2]


def z2_parent() -> Presentation:
    """Pi' with d_i^2 and (d1...d5)^2 adjoined."""
    return add_relators(pi_prime(), _squares_and_twist())


@lru_cache(maxsize=None)
def _pi_prime_simplified() -> Presentation:
    p, _ = tietze_simplify(pi_prime(), protect=full_alphabet())
    return p


@lru_cache(maxsize=None)
def _z2_parent_simplified() -> Presentation:
    p, _ = tietze_simplify(add_relators(_pi_prime_simplified(), _squares_and_twist()),
                           protect=full_alphabet())
    return p


def _z2_names() -> dict[tuple[int, GenSym], GenSym]:
    names = {(1, D[1]): DELTA, (0, GAMMA): GAMMA, (1, GAMMA): SIGMA}
    for i in range(2, 6):
        names[(0, D[i])] = B[i]
        names[(1, D[i])] = A[i]
    return names


def _z2_map(p: Presentation) -> CyclicMap:
    return CyclicMap.onto(p, 2, {**{D[i]: 1 for i in range(1, 6)}, GAMMA: 0})


def _z2_transversal() -> Transversal:
    return Transversal.of([Word.identity(), Word.gen(D[1])])


@lru_cache(maxsize=None)
def _z2_cover_raw() -> tuple[Presentation, SchreierGenSet]:
    parent = _z2_parent_simplified()
    return subgroup_presentation(parent, _z2_map(parent), _z2_transversal(), _z2_names())


_Z2_PROTECT = (A[2], A[4], GAMMA, SIGMA)


@lru_cache(maxsize=None)
def _z2_cover_simplified() -> Presentation:
    p, _ = tietze_simplify(_z2_cover_raw()[0], protect=_Z2_PROTECT)
    return p


def z2_cover_presentation(simplify: bool = True) -> tuple[Presentation, SchreierGenSet]:
    """Presentation of the double-cover group on D, A_i, B_i, G, s.

    With ``simplify`` the relator list is Tietze-reduced, keeping the
    generators A2, A4, G, s that the next stage is named through; the
    generator set object always describes the full Schreier family.
    """
    raw, gens = _z2_cover_raw()
    return (_z2_cover_simplified() if simplify else raw), gens


def _gamma_exponent(w: Word) -> int:
    return w.exponent_sums().get(GAMMA, 0)


def _orbifold_map(p: Presentation, gens: SchreierGenSet, m: int) -> CyclicMap:
    images = {s: _gamma_exponent(gens.backmap[s]) % m for s in p.alphabet}
    return CyclicMap.onto(p, m, images)


def _orbifold_names(p: Presentation, m: int) -> dict[tuple[int, GenSym], GenSym]:
    return {(m - 1, GAMMA): GHAT}


@lru_cache(maxsize=None)
def _orbifold_cover(k: int) -> tuple[Presentation, SchreierGenSet, Presentation]:
    """(raw cover presentation, its Schreier generators, orbifold parent)."""
    if k < 1:
        raise ValueError("cover parameter k must be >= 1")
    m = k + 1
    z, zgens = z2_cover_presentation()
    parent = add_relators(z, [Word.gen(GAMMA) ** m, Word.gen(SIGMA) ** m])
    q = _orbifold_map(parent, zgens, m)
    t = Transversal.of([Word.gen(GAMMA) ** i for i in range(m)])
    pres, gens = subgroup_presentation(parent, q, t, _orbifold_names(parent, m))
    return pres, gens, parent


@lru_cache(maxsize=None)
def _orbifold_simplified(k: int) -> Presentation:
    p, _ = tietze_simplify(_orbifold_cover(k)[0])
    return p


def orbifold_presentation(k: int, simplify: bool = True) -> Presentation:
    """Presentation of the orbifold fundamental group for cover parameter k."""
    return _orbifold_simplified(k) if simplify else _orbifold_cover(k)[0]


# ---------------------------------------------------------------------------
# the finite regression quotient

class FiniteQuotient:
    """T(k): the d/G-alphabet group in which every printed relation is traced."""

    def __init__(self, k: int):
        m = k + 1
        sigma_word = _w(D[1], GAMMA, (D[1], -1))
        rels = list(_z2_parent_simplified().relators)
        rels += [Word.gen(GAMMA) ** m, sigma_word ** m]
        pres, _ = tietze_simplify(Presentation(full_alphabet(), rels),
                                  protect=full_alphabet())
        self.k = k
        self.m = m
        self.presentation = pres
        self.table: CosetTable = todd_coxeter(pres)

    def holds(self, w: Word) -> bool:
        return holds_in(self.table, w)


@lru_cache(maxsize=None)
def finite_quotient(k: int) -> FiniteQuotient:
    return FiniteQuotient(k)


# ---------------------------------------------------------------------------
# regression corpus: every relation displayed along the reduction

@dataclass(frozen=True)
class CorpusEntry:
    ident: str
    stage: str          # pi_prime | z2 | orbifold
    relation: Word      # lhs * rhs^-1 over the stage alphabet
    suspect: bool = False
    note: str = ""


def _eq(lhs: Word, rhs: Word) -> Word:
    return lhs * rhs.inverse()


def _d(i: int, e: int = 1) -> Word:
    return Word.gen(D[i], 1 if e > 0 else -1) ** abs(e)


def _pi_prime_entries() -> list[CorpusEntry]:
    beta = paper_braids()
    fiber = fiber_alphabet()
    b1inv = beta["b1"].inverse()
    g = Word.gen(GAMMA)
    d45 = _d(4) * _d(5)
    d12 = _d(1) * _d(2)
    e: list[tuple[str, Word]] = []
    e.append(("b0 twist: (d4 d5)^6 = (d5 d4)^6",
              _eq(d45 ** 6, (_d(5) * _d(4)) ** 6)))
    e.append(("b0 commutation: d2 d3 = d3 d2",
              _eq(_d(2) * _d(3), _d(3) * _d(2))))
    e.append(("b+ : d5 = d2' d1' d2 d1 d2",
              _eq(_d(5), _d(2, -1) * _d(1, -1) * _d(2) * _d(1) * _d(2))))
    e.append(("b- : d3' d1' d3 d1 d3 = (d4 d5)^-3 d5 (d4 d5)^3",
              _eq(_d(3, -1) * _d(1, -1) * _d(3) * _d(1) * _d(3),
                  d45 ** -3 * _d(5) * d45 ** 3)))
    e.append(("conj b0: (d1 d2)^6 = (d2 d1)^6",
              _eq(d12 ** 6, (_d(2) * _d(1)) ** 6)))
    e.append(("conj b0: d5 d3 d5' d4' d5 d4 = d4' d5 d4 d5 d3 d5'",
              _eq(_d(5) * _d(3) * _d(5, -1) * _d(4, -1) * _d(5) * _d(4),
                  _d(4, -1) * _d(5) * _d(4) * _d(5) * _d(3) * _d(5, -1))))
    e.append(("conj b+: d5 = d2' d1 d2 d4' d5 d3 d5' d4 d2' d1' d2",
              _eq(_d(5), _d(2, -1) * _d(1) * _d(2) * _d(4, -1) * _d(5) * _d(3)
                  * _d(5, -1) * _d(4) * _d(2, -1) * _d(1, -1) * _d(2))))
    e.append(("conj b-: d3' d1 d2 d1' d3 = (d4 d5)^-2 d5 (d4 d5)^2",
              _eq(_d(3, -1) * _d(1) * _d(2) * _d(1, -1) * _d(3),
                  d45 ** -2 * _d(5) * d45 ** 2)))
    # the five G-conjugation relations, as printed
    g2rhs = (_d(2, -1) * _d(1) * _d(2) * _d(3, -1) * _d(5) * _d(3)
             * _d(2, -1) * _d(1, -1) * _d(2))
    e.append(("G d2 G' = d2' d1 d2 d3' d5 d3 d2' d1' d2",
              _eq(g * _d(2) * g.inverse(), g2rhs)))
    g4rhs = (_d(4, -1) * _d(2, -1) * _d(1, -1) * _d(2) * _d(4)
             * _d(2, -1) * _d(1) * _d(2) * _d(4))
    e.append(("G d4 G' = d4' d2' d1' d2 d4 d2' d1 d2 d4",
              _eq(g * _d(4) * g.inverse(), g4rhs)))
    e.append(("G d5 G' = d5", _eq(g * _d(5) * g.inverse(), _d(5))))
    g3rhs = (_d(4, -1) * _d(2, -1) * _d(1, -1) * _d(2) * _d(4) * _d(2, -1)
             * _d(1) * _d(2) * _d(3, -1) * _d(5, -1) * _d(3) * _d(5) * _d(3)
             * _d(2, -1) * _d(1, -1) * _d(2) * _d(4, -1) * _d(2, -1) * _d(1)
             * _d(2) * _d(4))
    e.append(("G d3 G' = (printed 21-letter word)",
              _eq(g * _d(3) * g.inverse(), g3rhs)))
    g1rhs = (g * _d(2) * g.inverse() * _d(4, -1) * _d(2, -1) * _d(1) * _d(2)
             * _d(4) * g * _d(2, -1) * g.inverse())
    e.append(("G d1 G' = (G d2 G') d4' d2' d1 d2 d4 (G d2' G')",
              _eq(g * _d(1) * g.inverse(), g1rhs)))
    # displayed action identities that the text reduces with earlier relations
    e.append(("(d4 d5) b1^-1 = d1 d2 (modulo the b+ relation)",
              _eq(b1inv.act(d45, fiber), d12)))
    e.append(("((d4 d5)^-3 d5 (d4 d5)^3) b1^-1 = (d1 d2)^-4 d2 (d1 d2)^4",
              _eq(b1inv.act(d45 ** -3 * _d(5) * d45 ** 3, fiber),
                  d12 ** -4 * _d(2) * d12 ** 4)))
    d13a = (_d(1) * _d(2) * _d(3) * _d(5, -1) * _d(4) * _d(5) * _d(3, -1)
            * _d(5, -1) * _d(4, -1) * _d(5) * _d(4) * _d(2, -1) * _d(1, -1) * _d(2))
    e.append(("(d1 d3) b1^-1 = (printed 14-letter word)",
              _eq(b1inv.act(_d(1) * _d(3), fiber), d13a)))
    d13b = (_d(1) * _d(2) * _d(3) * _d(4) * _d(5) * _d(3, -1) * _d(5, -1)
            * _d(2, -1) * _d(1, -1) * _d(2))
    d13c = _d(1) * _d(2) * _d(3) * _d(4) * _d(5) * _d(3, -1) * _d(2, -1) * _d(1, -1)
    e.append(("(d1 d3) b1^-1, second printed form", _eq(d13a, d13b)))
    e.append(("(d1 d3) b1^-1, third printed form", _eq(d13b, d13c)))
    w1 = (_d(1) * _d(2) * _d(3) * _d(5, -1) * _d(4, -1)
          * (_d(3, -1) * _d(5, -1) * _d(4, -1) * _d(5) * _d(4) * _d(5) * _d(3))
          * _d(4) * _d(5) * _d(3, -1) * _d(2, -1) * _d(1, -1))
    e.append(("conjugated b- relation, first printed form",
              _eq(b1inv.act((_d(1) * _d(3)).inverse() * _d(3) * _d(1) * _d(3), fiber), w1)))
    w2 = (_d(1) * _d(2) * _d(3) * _d(5, -1) * _d(4, -1)
          * (_d(5, -1) * _d(4, -1) * _d(5) * _d(4) * _d(5))
          * _d(4) * _d(5) * _d(3, -1) * _d(2, -1) * _d(1, -1))
    w3 = _d(1) * _d(2) * _d(3) * d45 ** -2 * _d(5) * d45 ** 2 * _d(3, -1) * _d(2, -1) * _d(1, -1)
    e.append(("conjugated b- relation, second printed form", _eq(w1, w2)))
    e.append(("conjugated b- relation, third printed form", _eq(w2, w3)))
    e.append(("d3 (d4 d5)^-2 d5 (d4 d5)^2 d3' = (d1 d2)^-5 d2 (d1 d2)^5",
              _eq(_d(3) * d45 ** -2 * _d(5) * d45 ** 2 * _d(3, -1),
                  d12 ** -5 * _d(2) * d12 ** 5)))
    e.append(("(d1 d2)^-5 d2 (d1 d2)^5 = d1 d2 d1'",
              _eq(d12 ** -5 * _d(2) * d12 ** 5, _d(1) * _d(2) * _d(1, -1))))
    return [CorpusEntry(f"pi_prime: {name}", "pi_prime", rel) for name, rel in e]


def _s(sym: GenSym, e: int = 1) -> Word:
    return Word.gen(sym, 1 if e > 0 else -1) ** abs(e)


def _z2_entries() -> list[CorpusEntry]:
    g, s = Word.gen(GAMMA), Word.gen(SIGMA)
    b4a5 = _s(B[4]) * _s(A[5])
    b5a4 = _s(B[5]) * _s(A[4])
    entries: list[CorpusEntry] = []

    def add(name: str, rel: Word, suspect=False, note=""):
        entries.append(CorpusEntry(f"z2: {name}", "z2", rel, suspect, note))

    add("(B4 A5)^6 = (B5 A4)^3 as printed", _eq(b4a5 ** 6, b5a4 ** 3),
        suspect=True, note="suspected typo: exponent 3 should read 6")
    add("(B4 A5)^6 = (B5 A4)^6 (exponent-6 correction)", _eq(b4a5 ** 6, b5a4 ** 6))
    add("B3 A2 = B2 A3", _eq(_s(B[3]) * _s(A[2]), _s(B[2]) * _s(A[3])))
    add("B5 = B2^3", _eq(_s(B[5]), _s(B[2]) ** 3))
    add("B3^3 = (B5 A4)^6 B5", _eq(_s(B[3]) ** 3, b5a4 ** 6 * _s(B[5])))
    add("A2^12 = 1", _s(A[2]) ** 12)
    add("B5 A3 B5 A4 B5 A4 = B4 A5 B4 A5 B3 A5",
        _eq(_s(B[5]) * _s(A[3]) * _s(B[5]) * _s(A[4]) * _s(B[5]) * _s(A[4]),
            _s(B[4]) * _s(A[5]) * _s(B[4]) * _s(A[5]) * _s(B[3]) * _s(A[5])))
    add("B5 = B2^2 A4 B5 A3 B5 A4 B2^2",
        _eq(_s(B[5]), _s(B[2]) ** 2 * _s(A[4]) * _s(B[5]) * _s(A[3]) * _s(B[5])
            * _s(A[4]) * _s(B[2]) ** 2))
    add("B3 B2 B3 = (B5 A4)^4 B5",
        _eq(_s(B[3]) * _s(B[2]) * _s(B[3]), b5a4 ** 4 * _s(B[5])))
    add("s A2^2 G' = A4 B2^2 A4",
        _eq(s * _s(A[2]) ** 2 * g.inverse(), _s(A[4]) * _s(B[2]) ** 2 * _s(A[4])))
    add("G B2 s' = B2^2 A3 B5 A3 B2^2",
        _eq(g * _s(B[2]) * s.inverse(),
            _s(B[2]) ** 2 * _s(A[3]) * _s(B[5]) * _s(A[3]) * _s(B[2]) ** 2))
    add("G B3 s' = B4 A2^2 B4 A2^2 B3 A5 B3 A5 B3 A2^2 B4 A2^2 B4",
        _eq(g * _s(B[3]) * s.inverse(),
            _s(B[4]) * _s(A[2]) ** 2 * _s(B[4]) * _s(A[2]) ** 2 * _s(B[3])
            * _s(A[5]) * _s(B[3]) * _s(A[5]) * _s(B[3]) * _s(A[2]) ** 2
            * _s(B[4]) * _s(A[2]) ** 2 * _s(B[4])))
    add("G B4 s' = B4 A2^2 B4 A2^2 B4",
        _eq(g * _s(B[4]) * s.inverse(),
            _s(B[4]) * _s(A[2]) ** 2 * _s(B[4]) * _s(A[2]) ** 2 * _s(B[4])))
    add("G B5 s' = B5", _eq(g * _s(B[5]) * s.inverse(), _s(B[5])))
    add("A2 B3 A4 B5 B2 A3 B4 A5 = 1",
        _s(A[2]) * _s(B[3]) * _s(A[4]) * _s(B[5]) * _s(B[2]) * _s(A[3])
        * _s(B[4]) * _s(A[5]))
    add("A2 A3' A4 A5' A2' A3 A4' A5 = 1",
        _s(A[2]) * _s(A[3], -1) * _s(A[4]) * _s(A[5], -1) * _s(A[2], -1)
        * _s(A[3]) * _s(A[4], -1) * _s(A[5]))
    add("D = 1 (the cancellation relation)", _s(DELTA))
    for i in range(2, 6):
        add(f"B{i} A{i} = 1", _s(B[i]) * _s(A[i]))
    add("B4 A2 B4 = B5 A3 B5",
        _eq(_s(B[4]) * _s(A[2]) * _s(B[4]), _s(B[5]) * _s(A[3]) * _s(B[5])))
    add("B2^4 = 1", _s(B[2]) ** 4)
    add("B5 = A2", _eq(_s(B[5]), _s(A[2])))
    add("(A2 A4)^2 = A3 A2 B3^2",
        _eq((_s(A[2]) * _s(A[4])) ** 2, _s(A[3]) * _s(A[2]) * _s(B[3]) ** 2))
    add("B3 B2 = A2 A3", _eq(_s(B[3]) * _s(B[2]), _s(A[2]) * _s(A[3])))
    add("B3 = B4 A2 B4", _eq(_s(B[3]), _s(B[4]) * _s(A[2]) * _s(B[4])))
    add("A2 A4 = A4 A2", _eq(_s(A[2]) * _s(A[4]), _s(A[4]) * _s(A[2])))
    add("A4^4 = 1", _s(A[4]) ** 4)
    add("A5 = A2'", _eq(_s(A[5]), _s(A[2], -1)))
    add("A3 = A2' A4^2", _eq(_s(A[3]), _s(A[2], -1) * _s(A[4]) ** 2))
    add("A2^4 = 1", _s(A[2]) ** 4)
    add("s A2^2 G' = A2^2 A4^2",
        _eq(s * _s(A[2]) ** 2 * g.inverse(), _s(A[2]) ** 2 * _s(A[4]) ** 2))
    add("G A2' = A2' s", _eq(g * _s(A[2], -1), _s(A[2], -1) * s))
    add("G A2 A4^2 = A2 A4^2 s",
        _eq(g * _s(A[2]) * _s(A[4]) ** 2, _s(A[2]) * _s(A[4]) ** 2 * s))
    add("G A4' = A4 s", _eq(g * _s(A[4], -1), _s(A[4]) * s))
    add("G A2 = A2 s", _eq(g * _s(A[2]), _s(A[2]) * s))
    return entries


def _a2(i: int, m: int, e: int = 1) -> Word:
    return Word.gen(GenSym("A2_", i % m), 1 if e > 0 else -1) ** abs(e)


def _a4(i: int, m: int, e: int = 1) -> Word:
    return Word.gen(GenSym("A4_", i % m), 1 if e > 0 else -1) ** abs(e)


def _sig(i: int, m: int, e: int = 1) -> Word:
    return Word.gen(GenSym("s_", i % m), 1 if e > 0 else -1) ** abs(e)


def _orbifold_entries(m: int) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    seen: set[tuple] = set()

    def add(name: str, rel: Word):
        key = rel.cyclically_reduced().letters
        if key in seen or not key:
            return
        seen.add(key)
        entries.append(CorpusEntry(f"orbifold: {name}", "orbifold", rel))

    for i in range(m):
        j = i + 1
        add(f"A2_{i}^4 = 1", _a2(i, m) ** 4)
        add(f"A4_{i}^4 = 1", _a4(i, m) ** 4)
        add(f"A2_{i} A4_{i} = A4_{i} A2_{i}",
            _eq(_a2(i, m) * _a4(i, m), _a4(i, m) * _a2(i, m)))
        add(f"s_{i} A2_{j}^2 = A2_{i}^2 A4_{i}^2",
            _eq(_sig(i, m) * _a2(j, m) ** 2, _a2(i, m) ** 2 * _a4(i, m) ** 2))
        add(f"A2_{j}' = A2_{i}' s_{i}",
            _eq(_a2(j, m, -1), _a2(i, m, -1) * _sig(i, m)))
        add(f"A2_{j} A4_{j}^2 = A2_{i} A4_{i}^2 s_{i}",
            _eq(_a2(j, m) * _a4(j, m) ** 2, _a2(i, m) * _a4(i, m) ** 2 * _sig(i, m)))
        add(f"A4_{j}' = A4_{i} s_{i}", _eq(_a4(j, m, -1), _a4(i, m) * _sig(i, m)))
        add(f"A2_{j} = A2_{i} s_{i}", _eq(_a2(j, m), _a2(i, m) * _sig(i, m)))
        # the six displayed expressions for s_i
        add(f"s_{i} = A2_{i}^2 A4_{i}^2 A2_{j}^2",
            _eq(_sig(i, m), _a2(i, m) ** 2 * _a4(i, m) ** 2 * _a2(j, m) ** 2))
        add(f"s_{i} = A2_{i} A2_{j}'", _eq(_sig(i, m), _a2(i, m) * _a2(j, m, -1)))
        add(f"s_{i} = A4_{i}^2 A2_{i}' A2_{j} A4_{j}^2",
            _eq(_sig(i, m), _a4(i, m) ** 2 * _a2(i, m, -1) * _a2(j, m) * _a4(j, m) ** 2))
        add(f"s_{i} = A2_{i}' A4_{i}^2 A4_{j}^2 A2_{j}",
            _eq(_sig(i, m), _a2(i, m, -1) * _a4(i, m) ** 2 * _a4(j, m) ** 2 * _a2(j, m)))
        add(f"s_{i} = A4_{i}' A4_{j}'", _eq(_sig(i, m), _a4(i, m, -1) * _a4(j, m, -1)))
        add(f"s_{i} = A2_{i}' A2_{j}", _eq(_sig(i, m), _a2(i, m, -1) * _a2(j, m)))
        add(f"A2_{i}^2 = A2_0^2", _eq(_a2(i, m) ** 2, _a2(0, m) ** 2))
        add(f"s_{i} = A4_{i}^2", _eq(_sig(i, m), _a4(i, m) ** 2))
        add(f"A4_{i} = A4_0", _eq(_a4(i, m), _a4(0, m)))
        add(f"s_{i} = A4_0^2", _eq(_sig(i, m), _a4(0, m) ** 2))
        add(f"A4_0^2 = A2_{i}' A2_{j}", _eq(_a4(0, m) ** 2, _a2(i, m, -1) * _a2(j, m)))
        add(f"A4_0^2 = A2_{i} A2_{j}'", _eq(_a4(0, m) ** 2, _a2(i, m) * _a2(j, m, -1)))
        add(f"A2_{2 * i % m} = A2_0 (even index)", _eq(_a2(2 * i, m), _a2(0, m)))
        add(f"A2_{(2 * i + 1) % m} = A2_0 A4_0^2 (odd index)",
            _eq(_a2(2 * i + 1, m), _a2(0, m) * _a4(0, m) ** 2))
    sig_product = Word.identity()
    for i in range(m):
        sig_product = sig_product * _sig(i, m)
    add("s_0 s_1 ... s_(m-1) = 1", sig_product)
    add("A4_0^(2m) = 1", _a4(0, m) ** (2 * m))
    if m % 2 == 1:
        add("A4_0^2 = 1 (m odd)", _a4(0, m) ** 2)
    add("commutative: A2_0 A4_0 = A4_0 A2_0",
        _eq(_a2(0, m) * _a4(0, m), _a4(0, m) * _a2(0, m)))
    return entries


def regression_corpus(k: int) -> list[CorpusEntry]:
    """Every relation displayed along the reduction, instantiated for this k."""
    return _pi_prime_entries() + _z2_entries() + _orbifold_entries(k + 1)


def _to_base_word(entry: CorpusEntry, k: int) -> Word:
    """Push a corpus relation down to the d/G alphabet via Schreier backmaps."""
    w = entry.relation
    if entry.stage == "orbifold":
        _, gens, _ = _orbifold_cover(k)
        w = gens.backmap_word(w)
    if entry.stage in ("orbifold", "z2"):
        _, zgens = _z2_cover_raw()
        w = zgens.backmap_word(w)
    return w


# ---------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class StageInfo:
    name: str
    generators: tuple[str, ...]
    relator_count: int
    total_length: int

    @staticmethod
    def of(name: str, p: Presentation) -> "StageInfo":
        return StageInfo(name, tuple(str(g) for g in p.alphabet),
                         len(p.relators), p.total_length())


@dataclass(frozen=True)
class SuspectVerdict:
    ident: str
    printed_holds: bool
    corrected_holds: bool
    printed_refuted_in_abelianization: bool

    def summary(self) -> str:
        return (f"printed variant holds: {self.printed_holds}; "
                f"exponent-6 variant holds: {self.corrected_holds}; "
                f"printed variant refuted in the double-cover abelianization: "
                f"{self.printed_refuted_in_abelianization}")


@dataclass(frozen=True)
class PipelineReport:
    k: int
    m: int
    stages: tuple[StageInfo, ...]
    order: int
    invariants: AbelianInvariants
    abelian: bool
    regressions: dict[str, bool]
    suspects: tuple[SuspectVerdict, ...]

    @property
    def all_regressions_hold(self) -> bool:
        return all(self.regressions.values())

    def to_dict(self) -> dict:
        return {
            "schema": "braidpi/1",
            "k": self.k,
            "m": self.m,
            "stages": [{"stage": s.name, "generators": list(s.generators),
                        "relatorCount": s.relator_count, "totalLength": s.total_length}
                       for s in self.stages],
            "order": self.order,
            "invariants": list(self.invariants.torsion),
            "freeRank": self.invariants.free_rank,
            "abelian": self.abelian,
            "regressions": dict(sorted(self.regressions.items())),
            "suspects": [{"id": s.ident, "printedHolds": s.printed_holds,
                          "exponent6Holds": s.corrected_holds,
                          "printedRefutedInAbelianization":
                              s.printed_refuted_in_abelianization}
                         for s in self.suspects],
        }


class PipelineError(AssertionError):
    """An internal consistency claim of the computation failed."""


def run(k: int, max_cosets: int = 10**6) -> PipelineReport:
    """Execute all stages for cover parameter k and certify the result."""
    if k < 1:
        raise ValueError("cover parameter k must be >= 1")
    m = k + 1
    zraw, zgens = _z2_cover_raw()
    cover, gens, parent = _orbifold_cover(k)
    final = _orbifold_simplified(k)
    stages = (
        StageInfo.of("pi_prime", pi_prime()),
        StageInfo.of("pi_prime_simplified", _pi_prime_simplified()),
        StageInfo.of("z2_parent", _z2_parent_simplified()),
        StageInfo.of("z2_cover", zraw),
        StageInfo.of("z2_cover_simplified", _z2_cover_simplified()),
        StageInfo.of("orbifold_parent", parent),
        StageInfo.of("orbifold_cover", cover),
        StageInfo.of("orbifold_simplified", final),
    )
    table = todd_coxeter(final, max_cosets)
    invs = abelian_invariants(final)
    abelian = is_abelian(table)
    if abelian and invs.free_rank == 0 and table.order != invs.order():
        raise PipelineError(
            f"order {table.order} != product of invariants {invs.order()}")
    quotient = finite_quotient(k)
    regressions: dict[str, bool] = {}
    suspects: list[SuspectVerdict] = []
    for entry in regression_corpus(k):
        holds = quotient.holds(_to_base_word(entry, k))
        if entry.suspect:
            corrected = quotient.holds(_to_base_word(
                CorpusEntry(entry.ident, entry.stage,
                            _eq((_s(B[4]) * _s(A[5])) ** 6, (_s(B[5]) * _s(A[4])) ** 6)),
                k))
            refuted = not trivial_in_abelianization(
                _z2_cover_simplified(),
                _z2_cover_simplified().alphabet.check_word(
                    _suspect_in_simplified_alphabet()))
            suspects.append(SuspectVerdict(entry.ident, holds, corrected, refuted))
        else:
            regressions[entry.ident] = holds
    return PipelineReport(k, m, stages, table.order, invs, abelian,
                          regressions, tuple(suspects))


def _suspect_in_simplified_alphabet() -> Word:
    """(B4 A5)^6 (B5 A4)^-3 written over the simplified double-cover generators
    (B_i = A_i^-1, A5 = A2^-1, A3 = A2^-1 A4^2 eliminate the rest)."""
    a2, a4 = _s(A[2]), _s(A[4])
    b4a5 = a4.inverse() * a2.inverse()
    b5a4 = a2 * a4
    return _eq(b4a5 ** 6, b5a4 ** 3)


def step5_crosscheck(m: int) -> tuple[AbelianInvariants, AbelianInvariants]:
    """Impose G^m, s^m before vs after the Schreier rewriting; the two final
    presentations must have identical abelian invariants."""
    if m < 2:
        raise ValueError("m must be >= 2")
    before = abelian_invariants(orbifold_presentation(m - 1))
    z, zgens = z2_cover_presentation()
    q = _orbifold_map(z, zgens, m)
    t = Transversal.of([Word.gen(GAMMA) ** i for i in range(m)])
    pres, gens = subgroup_presentation(z, q, t, _orbifold_names(z, m))
    orb = [gens.rewrite(Word.gen(GAMMA) ** m, r) for r in range(m)]
    orb += [gens.rewrite(Word.gen(SIGMA) ** m, r) for r in range(m)]
    with_orbifold = add_relators(pres, orb)
    simplified, _ = tietze_simplify(with_orbifold)
    after = abelian_invariants(simplified)
    return before, after
