"""Independent brute-force oracles used to pin down engine expectations.

The quotient oracle builds each graded slice the slow, obviously-correct
way: enumerate every free word of the degree, span the full two-sided
relation-ideal slice u * rho * v inside the free slice, and eliminate.
The engine's recursive construction must reproduce its basis and normal
forms exactly.
"""

from __future__ import annotations

from ncreflect.exprs import FreePoly, Word, p_degree
from ncreflect.linalg import SparseEch
from ncreflect.scalars import Cyc, ONE


def free_words(nletters: int, weights: list[int], degree: int) -> list[Word]:
    if degree == 0:
        return [()]
    out: list[Word] = []
    for i in range(nletters):
        if weights[i] <= degree:
            out.extend((i,) + rest for rest in free_words(nletters, weights, degree - weights[i]))
    return out


class QuotientOracle:
    """Full free-slice elimination of a presentation, one degree at a time."""

    def __init__(self, nletters: int, relations: list[FreePoly], weights: list[int] | None = None):
        self.nletters = nletters
        self.weights = weights if weights is not None else [1] * nletters
        self.relations = relations

    def slice(self, degree: int):
        words = sorted(free_words(self.nletters, self.weights, degree), reverse=True)
        idx = {w: c for c, w in enumerate(words)}
        ech = SparseEch(len(words))
        for rel in self.relations:
            n = p_degree(rel, self.weights)
            for a in range(degree - n + 1):
                for u in free_words(self.nletters, self.weights, a):
                    for v in free_words(self.nletters, self.weights, degree - n - a):
                        vec: dict[int, Cyc] = {}
                        for w, c in rel.items():
                            pos = idx[u + w + v]
                            cur = vec.get(pos)
                            new = c if cur is None else cur + c
                            if new.is_zero():
                                if cur is not None:
                                    del vec[pos]
                            else:
                                vec[pos] = new
                        ech.insert(vec)
        normal = sorted(words[c] for c in range(len(words)) if c not in ech.rows)
        return words, idx, ech, normal

    def dim(self, degree: int) -> int:
        return len(self.slice(degree)[3])

    def basis(self, degree: int) -> list[Word]:
        return self.slice(degree)[3]

    def nf(self, word: Word) -> dict[Word, Cyc]:
        degree = sum(self.weights[i] for i in word)
        words, idx, ech, _ = self.slice(degree)
        reduced = ech.reduce({idx[word]: ONE})
        return {words[c]: coeff for c, coeff in reduced.items()}
