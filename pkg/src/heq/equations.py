"""The group H*<x> of equations over a matrix subgroup H of PSL2(Z).

An EqWord is a raw word over the signed letters h1..hs, x (letter i <= s is
h_i, letter s+1 is the variable).  Its normal form as an element of H*<x>
is an HEquation: an alternating sequence c0 x^e1 c1 ... x^ed cd whose
coefficients are multiplied out as matrices, with x x^-1 pairs flanking a
trivial coefficient cancelled away.  Coefficient triviality is always
decided by matrix equality with the identity, never by the letters: H may
have torsion, so a nonempty coefficient word can still be trivial in H.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .freewords import Word, format_word, free_reduce, invert_word, parse_word
from .psl2 import IDENTITY, ProjMat2
from .words import AB_ZERO, ABWord, C2xC3, abelianize, decompose, eval_ab

EqWord = Word


@dataclass(frozen=True)
class HContext:
    """The ambient data of an analysis: H = <h_1..h_s> and the element g.

    Matrices come with their canonical a/b-word decompositions so that
    images in C2 x C3 are a letter count away.
    """

    h_mats: tuple[ProjMat2, ...]
    h_words: tuple[ABWord, ...]
    g_mat: ProjMat2
    g_word: ABWord

    def __post_init__(self):
        for mat, word in zip(self.h_mats, self.h_words):
            assert eval_ab(word) == mat
        assert eval_ab(self.g_word) == self.g_mat

    @classmethod
    def from_matrices(cls, h_mats: Sequence[ProjMat2], g_mat: ProjMat2) -> "HContext":
        return cls(tuple(h_mats), tuple(decompose(m) for m in h_mats),
                   g_mat, decompose(g_mat))

    @property
    def s(self) -> int:
        return len(self.h_mats)

    @property
    def x_letter(self) -> int:
        return self.s + 1

    @property
    def letter_names(self) -> tuple[str, ...]:
        return tuple(f"h{i}" for i in range(1, self.s + 1)) + ("x",)

    def letter_matrix(self, let: int) -> ProjMat2:
        base = self.g_mat if abs(let) == self.x_letter else self.h_mats[abs(let) - 1]
        return base if let > 0 else base.inv()

    def h_images(self) -> tuple[C2xC3, ...]:
        return tuple(abelianize(w) for w in self.h_words)

    def g_image(self) -> C2xC3:
        return abelianize(self.g_word)

    def letter_image(self, let: int) -> C2xC3:
        img = self.g_image() if abs(let) == self.x_letter else self.h_images()[abs(let) - 1]
        return img if let > 0 else -img

    def word_image(self, word: EqWord) -> C2xC3:
        img = AB_ZERO
        for let in word:
            img = img + self.letter_image(let)
        return img


class HEquation:
    """Reduced element of H*<x>.

    coeffs[i] is a pair (matrix, provenance), the provenance being the
    h-letter word the coefficient was multiplied out from; signs[i] is the
    exponent of the i-th occurrence of x.  Equality compares coefficient
    matrices and signs only, which is exactly equality in H*<x>; provenance
    is kept for printing.
    """

    __slots__ = ("coeffs", "signs")

    def __init__(self, coeffs: Sequence[tuple[ProjMat2, Word]], signs: Sequence[int]):
        assert len(coeffs) == len(signs) + 1
        self.coeffs = tuple(coeffs)
        self.signs = tuple(signs)

    @property
    def degree(self) -> int:
        return len(self.signs)

    def is_balanced(self) -> bool:
        return sum(self.signs) == 0

    def is_trivial(self) -> bool:
        return self.degree == 0 and self.coeffs[0][0] == IDENTITY

    def coefficient_matrices(self) -> tuple[ProjMat2, ...]:
        return tuple(mat for mat, _ in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HEquation):
            return NotImplemented
        return (self.coefficient_matrices() == other.coefficient_matrices()
                and self.signs == other.signs)

    def __hash__(self) -> int:
        return hash((self.coefficient_matrices(), self.signs))

    def __repr__(self) -> str:
        return f"HEquation(degree={self.degree}, coeffs={self.coefficient_matrices()}, signs={self.signs})"


def reduce_equation(word: EqWord, ctx: HContext) -> HEquation:
    """Normal form of a raw equation word in H*<x>."""
    x = ctx.x_letter
    coeffs: list[tuple[ProjMat2, Word]] = []
    signs: list[int] = []
    cur_mat, cur_prov = IDENTITY, ()
    for let in word:
        if abs(let) == x:
            coeffs.append((cur_mat, cur_prov))
            signs.append(1 if let > 0 else -1)
            cur_mat, cur_prov = IDENTITY, ()
        else:
            cur_mat = cur_mat * ctx.letter_matrix(let)
            cur_prov = cur_prov + (let,)
    coeffs.append((cur_mat, cur_prov))

    # cancel x^e 1 x^-e pairs until the reducedness invariant holds
    changed = True
    while changed:
        changed = False
        for i in range(1, len(signs)):
            if coeffs[i][0] == IDENTITY and signs[i - 1] == -signs[i]:
                merged_mat = coeffs[i - 1][0] * coeffs[i][0] * coeffs[i + 1][0]
                merged_prov = coeffs[i - 1][1] + coeffs[i][1] + coeffs[i + 1][1]
                coeffs[i - 1:i + 2] = [(merged_mat, merged_prov)]
                del signs[i - 1:i + 1]
                changed = True
                break
    return HEquation(coeffs, signs)


def evaluate(w: EqWord | HEquation, ctx: HContext) -> ProjMat2:
    """The matrix w(g): image under the evaluation homomorphism x -> g."""
    if isinstance(w, HEquation):
        m = w.coeffs[0][0]
        for sign, (mat, _) in zip(w.signs, w.coeffs[1:]):
            m = m * (ctx.g_mat if sign > 0 else ctx.g_mat.inv()) * mat
        return m
    m = IDENTITY
    for let in w:
        m = m * ctx.letter_matrix(let)
    return m


def substitute(relator: Word, ws: Sequence[EqWord]) -> EqWord:
    """Replace each abstract letter x_i of the relator by ws[i-1]."""
    out: list[int] = []
    for let in relator:
        if not 1 <= abs(let) <= len(ws):
            raise IndexError(f"relator letter {let} outside 1..{len(ws)}")
        part = ws[abs(let) - 1]
        out.extend(part if let > 0 else invert_word(part))
    return free_reduce(out)


# ---------------------------------------------------------------------------
# text forms
# ---------------------------------------------------------------------------

def parse_eq_word(text: str, ctx: HContext) -> EqWord:
    return parse_word(text, ctx.letter_names)


def format_eq_word(word: EqWord, ctx: HContext) -> str:
    return format_word(word, ctx.letter_names)


def _x_runs(eq: HEquation) -> list[tuple[int, int, int]]:
    """Maximal runs of equal-signed x's separated by trivial coefficients:
    (start index into signs, run length, sign)."""
    runs = []
    i = 0
    while i < len(eq.signs):
        j = i + 1
        while (j < len(eq.signs) and eq.coeffs[j][0] == IDENTITY
               and eq.signs[j] == eq.signs[i]):
            j += 1
        runs.append((i, j - i, eq.signs[i]))
        i = j
    return runs


def render_equation(eq: HEquation, ctx: HContext, matrices: bool = False) -> str:
    """Display rendering: 'h1 x^-1 h1^-1 x ...' or the matrix form with
    X tokens.  Identity coefficients are omitted and consecutive x's with
    trivial coefficients in between are collected into powers."""
    if eq.is_trivial():
        return "I" if matrices else "1"
    var = "X" if matrices else "x"
    parts: list[str] = []

    def emit_coeff(idx: int) -> None:
        mat, prov = eq.coeffs[idx]
        if mat == IDENTITY:
            return
        if matrices:
            parts.append(str(mat))
        elif prov:
            parts.append(format_word(prov, ctx.letter_names))
        else:
            parts.append(str(mat))
    emit_coeff(0)
    for start, length, sign in _x_runs(eq):
        exp = length * sign
        parts.append(var if exp == 1 else f"{var}^{exp}")
        emit_coeff(start + length)
    return " ".join(parts)
