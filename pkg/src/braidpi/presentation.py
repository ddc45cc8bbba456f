"""Finitely presented groups and Tietze simplification.

A ``Presentation`` stores freely *and cyclically* reduced relators with
no duplicates up to rotation and inversion (two such relators have the
same normal closure, so they are one relator).  Identity relators are
dropped.

``tietze_simplify`` applies the classical moves:

  (a) eliminate a generator occurring exactly once in some relator
      (shortest such relator first, ties by alphabet order),
  (b) shorten relators by rewriting common substrings against other
      relators: if a cyclic variant of s factors as p q with |p| > |q|
      and p occurs cyclically in r, rewrite r with p replaced by q^-1,
  (c) drop duplicates / rotations / inversions.

Every change is a recorded ``TietzeMove``; the engine and
``TietzeLog.replay`` mutate state through the same application routine,
so replaying the log over the source presentation reproduces the result
exactly, and the output presents an isomorphic group by construction.
The substring search in (b) runs a suffix automaton over the pool of
candidate reducers, which keeps the grinding of very long relators
(thousands of letters) fast.  All iteration orders are fixed, so results
are deterministic for a given budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .braid import Braid, act
from .word_core import Alphabet, GenSym, Word

IntWord = tuple[int, ...]

# encoded letters start above the segment separator used by the reducer pool
_SEP = "\x01"
_OFS = 0x20


def _enc(w: IntWord) -> str:
    return "".join(chr(_OFS + 2 * abs(l) + (0 if l > 0 else 1)) for l in w)


def _iinv(w: IntWord) -> IntWord:
    return tuple(-l for l in reversed(w))


def _ired(letters: Iterable[int]) -> IntWord:
    out: list[int] = []
    for l in letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def _icyc(w: IntWord) -> IntWord:
    w = _ired(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def _least_rotation(s: IntWord) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    n = len(s)
    s2 = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s2[j]
        i = f[j - k - 1]
        while i != -1 and sj != s2[k + i + 1]:
            if sj < s2[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s2[k + i + 1]:
            if sj < s2[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def _canon_key(w: IntWord) -> IntWord:
    """Canonical representative of w under rotation and inversion."""
    if not w:
        return w
    i = _least_rotation(w)
    a = w[i:] + w[:i]
    iw = _iinv(w)
    j = _least_rotation(iw)
    b = iw[j:] + iw[:j]
    return a if a <= b else b


def _isubst(w: IntWord, g: int, expr: IntWord) -> IntWord:
    out: list[int] = []
    for l in w:
        repl = expr if l == g else (_iinv(expr) if l == -g else (l,))
        for x in repl:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


class Presentation:
    """Generator alphabet plus normalized relator list."""

    def __init__(self, alphabet: Alphabet, relators: Iterable[Word]):
        self.alphabet = alphabet
        normalized: list[Word] = []
        seen: set[IntWord] = set()
        for w in relators:
            alphabet.check_word(w)
            w = w.cyclically_reduced()
            if w.is_identity():
                continue
            key = _canon_key(alphabet.encode(w))
            if key in seen:
                continue
            seen.add(key)
            normalized.append(w)
        self.relators: tuple[Word, ...] = tuple(normalized)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Presentation)
                and self.alphabet == other.alphabet
                and self.relators == other.relators)

    def __hash__(self) -> int:
        return hash((self.alphabet, self.relators))

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def encoded_relators(self) -> list[IntWord]:
        return [self.alphabet.encode(r) for r in self.relators]

    def __str__(self) -> str:
        gens = " ".join(str(s) for s in self.alphabet)
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {gens} | {rels} >"

    def __repr__(self) -> str:
        return (f"Presentation({len(self.alphabet)} generators, "
                f"{len(self.relators)} relators, total length {self.total_length()})")


def monodromy_relators(fiber: Alphabet, pairs: Sequence[tuple[GenSym, Braid]]) -> Presentation:
    """Semidirect-type presentation: gamma^-1 d gamma = (d) beta for each pair.

    The alphabet is the fiber followed by the base generators; relators are
    gamma_j^-1 d_i gamma_j ((d_i) beta_j)^-1 over all i, j.
    """
    alph = fiber.extend(g for g, _ in pairs)
    rels: list[Word] = []
    for gamma, beta in pairs:
        for d in fiber:
            image = act(beta, Word.gen(d), fiber)
            conj = Word.of([(gamma, -1), (d, 1), (gamma, 1)])
            rels.append(conj * image.inverse())
    return Presentation(alph, rels)


def stabilizer_relators(fiber: Alphabet, braids: Sequence[Braid]) -> list[Word]:
    """Relators d_i^-1 (d_i) beta stating that each braid fixes the fiber."""
    out: list[Word] = []
    seen: set[IntWord] = set()
    for beta in braids:
        for d in fiber:
            w = (Word.gen(d, -1) * act(beta, Word.gen(d), fiber)).cyclically_reduced()
            if w.is_identity():
                continue
            key = _canon_key(fiber.encode(w))
            if key not in seen:
                seen.add(key)
                out.append(w)
    return out


def add_relators(p: Presentation, ws: Iterable[Word]) -> Presentation:
    return Presentation(p.alphabet, list(p.relators) + list(ws))


# ---------------------------------------------------------------------------
# Tietze moves: one application routine shared by the engine and replay

@dataclass(frozen=True)
class TietzeMove:
    kind: str  # add-relator | remove-relator | add-generator | eliminate-generator
    payload: tuple


class _TietzeState:
    """Mutable (alphabet, relator list) that only changes via apply()."""

    def __init__(self, p: Presentation):
        self.source = p.alphabet  # int codes stay relative to the source alphabet
        self.symbols: list[GenSym] = list(p.alphabet.symbols)
        self.rels: list[IntWord] = []
        seen: set[IntWord] = set()
        for r in p.encoded_relators():
            key = _canon_key(r)
            if key not in seen:
                seen.add(key)
                self.rels.append(r)

    def enc(self, w: Word) -> IntWord:
        return _icyc(self.source.encode(w))

    def apply(self, move: TietzeMove) -> None:
        if move.kind == "add-relator":
            self.rels.append(self.enc(move.payload[0]))
        elif move.kind == "remove-relator":
            self.rels.remove(self.enc(move.payload[0]))
        elif move.kind == "add-generator":
            sym, defining = move.payload
            self.symbols.append(sym)
            self.source = Alphabet(self.source.symbols + (sym,))
            self.rels.append(self.enc(defining))
        elif move.kind == "eliminate-generator":
            sym, expr, defining = move.payload
            g = self.source.index(sym) + 1
            self.rels.remove(self.enc(defining))
            e = self.source.encode(expr)
            self.rels = [w for w in (_icyc(_isubst(r, g, e)) for r in self.rels) if w]
            self.symbols.remove(sym)
        else:
            raise ValueError(f"unknown move kind {move.kind}")

    def presentation(self) -> Presentation:
        return Presentation(Alphabet(self.symbols),
                            [self.source.decode(r) for r in self.rels])


@dataclass
class TietzeLog:
    moves: list[TietzeMove] = field(default_factory=list)

    def eliminations(self) -> list[tuple[GenSym, Word]]:
        return [(m.payload[0], m.payload[1]) for m in self.moves
                if m.kind == "eliminate-generator"]

    def rewrite(self, w: Word) -> Word:
        """Map a word over the source alphabet to the target alphabet."""
        for g, expr in self.eliminations():
            if g in w.symbols():
                w = w.substitute({s: (expr if s == g else Word.gen(s))
                                  for s in w.symbols()})
        return w

    def replay(self, p: Presentation) -> Presentation:
        """Re-apply the recorded moves to ``p``, reproducing the target."""
        state = _TietzeState(p)
        for mv in self.moves:
            state.apply(mv)
        return state.presentation()


# ---------------------------------------------------------------------------
# suffix automaton for the common-substring search

class _SuffixAutomaton:
    __slots__ = ("nxt", "link", "length", "fpos")

    def __init__(self, s: str):
        self.nxt: list[dict[str, int]] = [{}]
        self.link: list[int] = [-1]
        self.length: list[int] = [0]
        self.fpos: list[int] = [-1]
        last = 0
        nxt, link, length, fpos = self.nxt, self.link, self.length, self.fpos
        for i, ch in enumerate(s):
            cur = len(length)
            nxt.append({})
            link.append(0)
            length.append(length[last] + 1)
            fpos.append(i)
            p = last
            while p != -1 and ch not in nxt[p]:
                nxt[p][ch] = cur
                p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = nxt[p][ch]
                if length[p] + 1 == length[q]:
                    link[cur] = q
                else:
                    clone = len(length)
                    nxt.append(dict(nxt[q]))
                    link.append(link[q])
                    length.append(length[p] + 1)
                    fpos.append(fpos[q])
                    while p != -1 and nxt[p].get(ch) == q:
                        nxt[p][ch] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur

    def walk(self, t: str):
        """Yield (end_index_in_t, match_length, first_occurrence_end) along t."""
        v = l = 0
        nxt, link, length, fpos = self.nxt, self.link, self.length, self.fpos
        for i, ch in enumerate(t):
            while v and ch not in nxt[v]:
                v = link[v]
                l = length[v]
            if ch in nxt[v]:
                v = nxt[v][ch]
                l += 1
            else:
                v = 0
                l = 0
            yield i, l, fpos[v]


def _reducer_automaton(s: IntWord) -> _SuffixAutomaton:
    """Automaton holding every cyclic subword of s and of s^-1."""
    return _SuffixAutomaton(_enc(s + s) + _SEP + _enc(_iinv(s) + _iinv(s)))


# ---------------------------------------------------------------------------
# the simplifier

class _Simplifier:
    def __init__(self, p: Presentation, budget: int, protect: frozenset[GenSym]):
        self.state = _TietzeState(p)
        self.protect = {p.alphabet.index(s) + 1 for s in protect}
        self.moves: list[TietzeMove] = []
        self.budget = budget

    @property
    def rels(self) -> list[IntWord]:
        return self.state.rels

    def _afford(self, n: int) -> bool:
        if self.budget < n:
            return False
        self.budget -= n
        return True

    def _word(self, w: IntWord) -> Word:
        return self.state.source.decode(w)

    def _emit(self, kind: str, *payload) -> None:
        mv = TietzeMove(kind, payload)
        self.moves.append(mv)
        self.state.apply(mv)

    def _replace(self, old: IntWord, new: IntWord) -> None:
        self._emit("add-relator", self._word(new))
        self._emit("remove-relator", self._word(old))

    # -- (c) normalization --------------------------------------------------

    def normalize(self) -> bool:
        changed = False
        for ow in list(self.rels):
            nw = _icyc(ow)
            if nw != ow:
                if not self._afford(2):
                    return changed
                self._replace(ow, nw)
                changed = True
        seen: set[IntWord] = set()
        for w in list(self.rels):
            if not w:
                if not self._afford(1):
                    return changed
                self._emit("remove-relator", self._word(w))
                changed = True
                continue
            key = _canon_key(w)
            if key in seen:
                if not self._afford(1):
                    return changed
                self._emit("remove-relator", self._word(w))
                changed = True
            else:
                seen.add(key)
        return changed

    # -- (b) common-substring shortening --------------------------------------

    def _collect_arcs(self, owner: int, r: IntWord, autos):
        """Disjoint positive-gain replacement arcs on the cyclic word r.

        Walks r + r through each reducer's automaton (reducers are other
        relators with |s| <= |r|, always at their *current* value: rewriting
        against a relator no longer in the presentation is not a Tietze move
        and can change the group).  Collects every match with
        2 |match| > |s| and greedily keeps a disjoint set, best gain first.
        Returns arcs (start, cut, complement) in the coordinates of r.
        """
        L = len(r)
        target = _enc(r + r)
        cands: list[tuple[int, int, int, int, int]] = []
        for j, s, sa in autos:
            if j == owner or not s or len(s) > L:
                continue
            slen = len(s)
            for end_t, l, fend in sa.walk(target):
                cut = min(l, slen, L)
                if 2 * cut <= slen:
                    continue
                start = (end_t - cut + 1) % L
                cands.append((2 * cut - slen, start, cut, j, fend))
        if not cands:
            return []
        cands.sort(key=lambda c: (-c[0], c[1], c[3], c[2]))
        taken = [False] * L
        arcs = []
        for gain, start, cut, j, fend in cands:
            if any(taken[(start + k) % L] for k in range(cut)):
                continue
            for k in range(cut):
                taken[(start + k) % L] = True
            s = autos[j][1]
            slen = len(s)
            if fend < 2 * slen:          # match inside the s + s half
                u, end_u = s, fend
            else:                        # match inside the s^-1 + s^-1 half
                u, end_u = _iinv(s), fend - (2 * slen + 1)
            start_u = (end_u - cut + 1) % slen
            complement = tuple(u[(start_u + cut + k) % slen] for k in range(slen - cut))
            arcs.append((start, cut, complement))
        return arcs

    @staticmethod
    def _apply_arcs(r: IntWord, arcs) -> IntWord:
        """Replace each arc's piece by the inverse of its complement.

        Rotates r so that no arc wraps (arcs are disjoint, so the position
        after any arc is interior to none), then splices right to left.
        """
        L = len(r)
        base = (arcs[0][0] + arcs[0][1]) % L
        linear = list(r[base:] + r[:base])
        rel = sorted(((start - base) % L, cut, comp) for start, cut, comp in arcs)
        for start, cut, comp in reversed(rel):
            linear[start:start + cut] = list(_iinv(comp))
        return _icyc(_ired(tuple(linear)))

    def shorten(self) -> bool:
        """Rewriting rounds until no relator shrinks.

        Reducer automata are built once per round (over s + s for each
        relator s), so grinding a long relator re-walks it but never
        rebuilds an automaton.
        """
        any_change = False
        while self.budget > 0:
            self.normalize()
            if not self.rels:
                return any_change
            autos = [(j, s, _reducer_automaton(s)) for j, s in enumerate(self.rels)]
            order = sorted(range(len(self.rels)),
                           key=lambda j: (-len(self.rels[j]), self.rels[j]))
            snapshot = list(self.rels)
            changed = False
            for j in order:
                cur = snapshot[j]
                moved = False
                while cur and cur in self.rels:
                    arcs = self._collect_arcs(j, cur, autos)
                    if not arcs or not self._afford(2):
                        break
                    new = self._apply_arcs(cur, arcs)
                    if new == cur:
                        break
                    self._replace(cur, new)
                    cur = new
                    moved = True
                    changed = True
                    any_change = True
                if moved:
                    # later targets may reduce against this relator's new value
                    autos[j] = (j, cur, _reducer_automaton(cur))
            if not changed:
                return any_change
        return any_change

    # -- (a) generator elimination ---------------------------------------------

    def _candidate(self):
        for r in sorted(self.rels, key=lambda w: (len(w), w)):
            counts: dict[int, int] = {}
            for l in r:
                counts[abs(l)] = counts.get(abs(l), 0) + 1
            for g in sorted(counts):
                if counts[g] == 1 and g not in self.protect:
                    return r, g
        return None

    def eliminate_once(self) -> bool:
        cand = self._candidate()
        if cand is None or not self._afford(1):
            return False
        r, g = cand
        at = next(k for k, l in enumerate(r) if abs(l) == g)
        rot = r[at:] + r[:at]
        expr = _iinv(rot[1:]) if rot[0] > 0 else rot[1:]
        sym = self.state.source.symbols[g - 1]
        self._emit("eliminate-generator", sym, self._word(expr), self._word(r))
        return True

    # -- driver ------------------------------------------------------------------

    def _snapshot(self):
        quality = (sum(len(r) for r in self.rels), len(self.state.symbols), len(self.rels))
        return quality, len(self.moves)

    def run(self):
        best = self._snapshot()
        while self.budget > 0:
            self.shorten()
            best = min(best, self._snapshot(), key=lambda s: s[0])
            if not self.eliminate_once():
                break
            self.normalize()
            best = min(best, self._snapshot(), key=lambda s: s[0])
        return best


def tietze_simplify(p: Presentation, budget: int = 20000,
                    protect: Iterable[GenSym] = ()) -> tuple[Presentation, TietzeLog]:
    """Deterministic simplification by Tietze moves; see module docstring.

    ``budget`` caps the number of applied moves; on exhaustion the best
    state reached so far is returned.  Symbols in ``protect`` are never
    eliminated.  Total relator length of the result never exceeds the
    input's, and replaying the returned log on ``p`` reproduces the
    result exactly.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    sim = _Simplifier(p, budget, frozenset(protect))
    (_, nmoves) = sim.run()
    log = TietzeLog(sim.moves[:nmoves])
    return log.replay(p), log
