"""DNA correspondence between GF(4^(2s)) and 2s-mers over {A, T, G, C}.

The table satisfies tau(theta(b)) == reversed(tau(b)), which turns string
reversal of a DNA codeword into the field-level map
(c_0, ..., c_{n-1}) -> (theta(c_{n-1}), ..., theta(c_0)).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

import numpy as np

from .codes import SkewCyclicCode, all_codewords, closed_under
from .errors import UsageError
from .gf import ZERO, Field
from .skewpoly import THETA_PALINDROMIC, is_palindromic, palindromic_normalize

NUCLEOTIDES = "ACGT"

# GF(16) pairs, keyed by log index (None for zero).
GF16_TABLE = {
    None: "AA",
    0: "TT",
    1: "AT",
    2: "GC",
    3: "AG",
    4: "TA",
    5: "CC",
    6: "AC",
    7: "GT",
    8: "CG",
    9: "CA",
    10: "GG",
    11: "CT",
    12: "GA",
    13: "TG",
    14: "TC",
}


@dataclass(frozen=True)
class DnaTable:
    field: Field
    forward: dict[int, str]
    backward: dict[str, int] = dc_field(repr=False)

    @property
    def word_length(self) -> int:
        return 2 * self.field.s

    def tau(self, b: int) -> str:
        return self.forward[b]

    def element(self, word: str) -> int:
        try:
            return self.backward[word]
        except KeyError:
            raise UsageError(f"{word!r} is not a DNA {self.word_length}-mer") from None


def build_table(F: Field) -> DnaTable:
    """The standard GF(16) table for s = 1, a greedy reversal-respecting pairing otherwise."""
    if F.s == 1:
        forward = {ZERO if k is None else k: w for k, w in GF16_TABLE.items()}
    else:
        forward = _greedy_table(F)
    return DnaTable(F, forward, {w: b for b, w in forward.items()})


def _greedy_table(F: Field) -> dict[int, str]:
    words = ["".join(p) for p in product(NUCLEOTIDES, repeat=2 * F.s)]
    palindromes = iter(w for w in words if w == w[::-1])
    others = [w for w in words if w != w[::-1]]
    forward: dict[int, str] = {}
    used: set[str] = set()
    for b in F.elements():
        if F.is_fixed(b):
            forward[b] = next(palindromes)
    pos = 0
    for b in F.elements():
        if b in forward:
            continue
        while others[pos] in used:
            pos += 1
        w = others[pos]
        forward[b] = w
        forward[F.theta(b)] = w[::-1]
        used.update((w, w[::-1]))
    return forward


def tau(table: DnaTable, b: int) -> str:
    return table.tau(b)


def phi(table: DnaTable, word) -> str:
    return "".join(table.tau(c) for c in word)


def phi_inverse(table: DnaTable, dna: str) -> tuple[int, ...]:
    L = table.word_length
    if len(dna) % L:
        raise UsageError(f"DNA string length {len(dna)} is not a multiple of {L}")
    return tuple(table.element(dna[i : i + L]) for i in range(0, len(dna), L))


def dna_reverse_vector(F: Field, word) -> tuple[int, ...]:
    return tuple(F.theta(c) for c in reversed(word))


def is_reversible_dna_code(code: SkewCyclicCode, table: DnaTable | None = None, guard: int | None = None) -> bool:
    """Exhaustive check that the DNA reverse of every codeword is a codeword.

    Given the table's reversal law this is the same predicate as closure of
    phi(C) under string reversal.
    """
    F = code.field
    if table is not None and not table_reversal_law_holds(table):
        raise UsageError("DNA table does not satisfy tau(theta(b)) = reverse(tau(b))")
    return closed_under(code, lambda w: F.theta_table[w[:, ::-1]], guard)


def is_reversible_dna_by_generator(code: SkewCyclicCode) -> bool:
    """Decide DNA reversibility from the generator alone, without enumeration."""
    g = code.g
    if code.n % 2 == 0 and g.degree % 2 == 1:
        return palindromic_normalize(g, THETA_PALINDROMIC) is not None
    return is_palindromic(g)


def table_reversal_law_holds(table: DnaTable) -> bool:
    F = table.field
    return all(table.tau(F.theta(b)) == table.tau(b)[::-1] for b in F.elements())


def table_rows(table: DnaTable) -> list[tuple[str, str, str]]:
    """(word, multiplicative form, additive form), in the order 0, 1, a, a^2, ..."""
    F = table.field
    return [(table.tau(b), F.format(b), F.format_additive(b)) for b in F.elements()]


def table_tsv(table: DnaTable) -> str:
    lines = ["word\tmultiplicative\tadditive"]
    lines += ["\t".join(row) for row in table_rows(table)]
    return "\n".join(lines) + "\n"


def export_codewords(code: SkewCyclicCode, table: DnaTable, fasta: bool = False, guard: int | None = None) -> str:
    words = all_codewords(code, guard)
    log = np.asarray(code.field.log, dtype=np.int64)
    lines = []
    for i, w in enumerate(words):
        if fasta:
            lines.append(f">cw{i}")
        lines.append("".join(table.forward[int(c)] for c in log[w]))
    return "\n".join(lines) + ("\n" if lines else "")
