"""End-to-end algebraicity analysis over PSL2(Z).

Given matrices h_1..h_s and g, decide whether g is algebraic over
H = <h_1..h_s> and produce equations that normally generate the ideal of
all equations g satisfies:

 1. decompose the inputs into a/b-words and map them to C2 x C3;
 2. build the Schreier graph of the index-<=6 subgroup of H*<x> consisting
    of the equations whose value at g lies in the free kernel F (membership
    is a letterwise image sum, no matrix products);
 3. read the subgroup generators w_1(x)..w_p(x) off the non-tree edges;
 4. evaluate v_i = w_i(g), rewrite each as a free word in {p, q};
 5. present V = <v_1..v_p> on those generators;
 6. push every relator through w_1..w_p and reduce: these equations
    normally generate the ideal;
 7. g is transcendental iff every resulting equation is trivial.

Each step re-checks the invariants it relies on and raises RuntimeError
rather than ever returning a silently wrong report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .equations import (
    EqWord,
    HContext,
    HEquation,
    evaluate,
    format_eq_word,
    parse_eq_word,
    reduce_equation,
    render_equation,
    substitute,
)
from .freewords import (
    FreeWord,
    format_free_word,
    format_word,
    matrix_to_free_word,
    parse_free_word,
    parse_word,
    pq_to_matrix,
    Word,
)
from .psl2 import IDENTITY, ProjMat2
from .schreier import SchreierGraph, build_schreier, subgroup_generators
from .stallings import PresentationOnGenerators, subgroup_presentation
from .words import AB_ZERO, format_ab_word, parse_ab_word, quotient_subgroup

DEFAULT_INDEX_CAP = 6

VERDICT_ALGEBRAIC = "algebraic"
VERDICT_TRANSCENDENTAL = "transcendental"


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the pipeline computed, plus enough raw data to re-check it.

    v_words/v_matrices run parallel to nontrivial_indices (the positions of
    the generators that are nontrivial as equations; trivial generators stay
    in w_words, flagged, but contribute nothing downstream).  ideal_words
    holds one substituted relator per presentation relator, unfiltered.
    """

    ctx: HContext
    index: int
    schreier: SchreierGraph
    w_words: tuple[EqWord, ...]
    w_equations: tuple[HEquation, ...]
    nontrivial_indices: tuple[int, ...]
    v_words: tuple[FreeWord, ...]
    v_matrices: tuple[ProjMat2, ...]
    presentation: PresentationOnGenerators
    ideal_words: tuple[EqWord, ...]
    ideal_equations: tuple[HEquation, ...]
    verdict: str

    def nontrivial_ideal_equations(self) -> tuple[HEquation, ...]:
        return tuple(e for e in self.ideal_equations if not e.is_trivial())

    def to_dict(self) -> dict:
        ctx = self.ctx
        relnames = tuple(f"x{i}" for i in range(1, self.presentation.generator_count + 1))
        return {
            "h": [m.rows() for m in ctx.h_mats],
            "g": ctx.g_mat.rows(),
            "h_words": [format_ab_word(w) for w in ctx.h_words],
            "g_word": format_ab_word(ctx.g_word),
            "h_images": [list(img) for img in ctx.h_images()],
            "g_image": list(ctx.g_image()),
            "index": self.index,
            "generators": [
                {"word": format_eq_word(w, ctx), "trivial": eq.is_trivial()}
                for w, eq in zip(self.w_words, self.w_equations)
            ],
            "v_words": [format_free_word(v) for v in self.v_words],
            "v_matrices": [m.rows() for m in self.v_matrices],
            "presentation": {
                "generators": self.presentation.generator_count,
                "rank": self.presentation.rank,
                "basis": [format_free_word(b) for b in self.presentation.basis],
                "relators": [format_word(r, relnames) for r in self.presentation.relators],
            },
            "equations": [
                {
                    "word": format_eq_word(w, ctx),
                    "trivial": eq.is_trivial(),
                    "text": render_equation(eq, ctx),
                    "matrix_form": render_equation(eq, ctx, matrices=True),
                }
                for w, eq in zip(self.ideal_words, self.ideal_equations)
            ],
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        h_mats = [ProjMat2(*[x for row in rows for x in row]) for rows in data["h"]]
        g_mat = ProjMat2(*[x for row in data["g"] for x in row])
        ctx = HContext(tuple(h_mats), tuple(parse_ab_word(w) for w in data["h_words"]),
                       g_mat, parse_ab_word(data["g_word"]))
        w_words = tuple(parse_eq_word(g["word"], ctx) for g in data["generators"])
        w_equations = tuple(reduce_equation(w, ctx) for w in w_words)
        nontrivial = tuple(i for i, eq in enumerate(w_equations) if not eq.is_trivial())
        v_words = tuple(parse_free_word(v) for v in data["v_words"])
        v_matrices = tuple(ProjMat2(*[x for row in rows for x in row])
                           for rows in data["v_matrices"])
        pres = data["presentation"]
        relnames = tuple(f"x{i}" for i in range(1, pres["generators"] + 1))
        presentation = PresentationOnGenerators(
            pres["generators"], pres["rank"],
            tuple(parse_free_word(b) for b in pres["basis"]),
            tuple(parse_word(r, relnames) for r in pres["relators"]),
        )
        ideal_words = tuple(parse_eq_word(e["word"], ctx) for e in data["equations"])
        ideal_equations = tuple(reduce_equation(w, ctx) for w in ideal_words)
        # the Schreier graph is not serialized; rebuild it from the context
        graph = equation_schreier_graph(ctx, max(data["index"], 1))
        return cls(ctx, data["index"], graph, w_words, w_equations, nontrivial,
                   v_words, v_matrices, presentation, ideal_words,
                   ideal_equations, data["verdict"])


def equation_schreier_graph(ctx: HContext, index_cap: int) -> SchreierGraph:
    """Coset graph of the equations whose value at g lies in the kernel F.

    The membership oracle sums letter images in C2 x C3; no matrices are
    multiplied while the graph grows.
    """
    images = list(ctx.h_images()) + [ctx.g_image()]

    def oracle(word: Word) -> bool:
        img = AB_ZERO
        for let in word:
            step = images[abs(let) - 1]
            img = img + (step if let > 0 else -step)
        return img == AB_ZERO

    return build_schreier(ctx.letter_names, oracle, index_cap)


def analyze(h_mats: Sequence[ProjMat2], g_mat: ProjMat2,
            index_cap: int = DEFAULT_INDEX_CAP) -> AnalysisReport:
    """Run the full pipeline; see the module docstring for the steps."""
    ctx = HContext.from_matrices(h_mats, g_mat)

    graph = equation_schreier_graph(ctx, index_cap)
    index = graph.index
    expected = len(quotient_subgroup(list(ctx.h_images()) + [ctx.g_image()]))
    if index != expected:
        raise RuntimeError(f"Schreier index {index} != quotient order {expected}")

    w_words = subgroup_generators(graph)
    w_equations = tuple(reduce_equation(w, ctx) for w in w_words)
    expected_count = len(ctx.letter_names) * index - (index - 1)
    if len(w_words) != expected_count:
        raise RuntimeError("generator count does not match the Schreier graph")

    nontrivial = tuple(i for i, eq in enumerate(w_equations) if not eq.is_trivial())
    v_words: list[FreeWord] = []
    v_matrices: list[ProjMat2] = []
    for i in nontrivial:
        if ctx.word_image(w_words[i]) != AB_ZERO:
            raise RuntimeError("generator value does not lie in the kernel F")
        value = evaluate(w_words[i], ctx)
        free = matrix_to_free_word(value)
        if pq_to_matrix(free) != value:
            raise RuntimeError("kernel rewriting disagrees with evaluation")
        v_words.append(free)
        v_matrices.append(value)

    presentation = subgroup_presentation(v_words)

    ideal_words = tuple(
        substitute(rel, [w_words[i] for i in nontrivial])
        for rel in presentation.relators
    )
    ideal_equations = tuple(reduce_equation(w, ctx) for w in ideal_words)
    for word, eq in zip(ideal_words, ideal_equations):
        if evaluate(word, ctx) != IDENTITY or evaluate(eq, ctx) != IDENTITY:
            raise RuntimeError("ideal generator does not evaluate to the identity")

    verdict = (VERDICT_ALGEBRAIC
               if any(not eq.is_trivial() for eq in ideal_equations)
               else VERDICT_TRANSCENDENTAL)
    return AnalysisReport(ctx, index, graph, w_words, w_equations, nontrivial,
                          tuple(v_words), tuple(v_matrices), presentation,
                          ideal_words, ideal_equations, verdict)


@dataclass(frozen=True)
class VerificationResult:
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def summary(self) -> str:
        return "\n".join(
            f"{'PASS' if passed else 'FAIL'} {name}: {detail}"
            for name, passed, detail in self.checks
        )


def verify(report: AnalysisReport) -> VerificationResult:
    """Re-check a report from its raw words, independently of how it was made.

    (a) every ideal generator evaluates to the identity at g;
    (b) every relator applied to the v-words freely reduces to nothing;
    (c) the v-words match the evaluated generators as matrices;
    (d) every generator's image in C2 x C3 is trivial;
    (e) the verdict agrees with the triviality of the ideal generators.
    """
    ctx = report.ctx
    checks: list[tuple[str, bool, str]] = []

    bad = [i for i, w in enumerate(report.ideal_words)
           if evaluate(w, ctx) != IDENTITY]
    checks.append(("ideal generators evaluate to I", not bad,
                   f"{len(report.ideal_words)} equations" if not bad
                   else f"equations {bad} fail"))

    bad = [i for i, rel in enumerate(report.presentation.relators)
           if substitute(rel, report.v_words) != ()]
    checks.append(("relators kill the v-words", not bad,
                   f"{len(report.presentation.relators)} relators" if not bad
                   else f"relators {bad} fail"))

    values = [evaluate(report.w_words[i], ctx) for i in report.nontrivial_indices]
    ok = (len(values) == len(report.v_words)
          and all(pq_to_matrix(v) == m for v, m in zip(report.v_words, values))
          and all(vm == m for vm, m in zip(report.v_matrices, values)))
    checks.append(("v-words match evaluated generators", ok,
                   f"{len(values)} values"))

    bad = [i for i, w in enumerate(report.w_words)
           if ctx.word_image(w) != AB_ZERO]
    checks.append(("generators land in the kernel", not bad,
                   f"{len(report.w_words)} generators" if not bad
                   else f"generators {bad} fail"))

    algebraic = any(not reduce_equation(w, ctx).is_trivial()
                    for w in report.ideal_words)
    expected = VERDICT_ALGEBRAIC if algebraic else VERDICT_TRANSCENDENTAL
    checks.append(("verdict is consistent", report.verdict == expected,
                   f"verdict {report.verdict!r}, recomputed {expected!r}"))

    return VerificationResult(tuple(checks))
