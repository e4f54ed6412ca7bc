"""Stallings automata over {p, q}: folding, membership and presentations.

A flower automaton has one petal per generator word.  Folding merges edges
that violate determinism or co-determinism; a folding step is *closed* when
the two merged edges are already parallel, and each closed step kills one
free-group relation among the petals.

To recover those relations, every edge carries a memory word over abstract
petal letters x1..xp.  The invariant maintained throughout is that the
memory product along any closed path at the basepoint is a preimage (in the
free group on the petal letters) of that loop's homotopy class.  Merging two
edges whose memories disagree is preceded by a "gauge" move at the absorbed
vertex, which re-routes the discrepancy onto the other incident edges and
keeps the invariant intact; a closed folding then reads its relator straight
off the two memories.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .freewords import (
    FreeWord,
    Word,
    format_word,
    free_reduce,
    invert_word,
    PQ_NAMES,
)

NUM_LABELS = 2  # p, q


@dataclass
class Edge:
    src: int
    label: int  # 1 = p, 2 = q
    dst: int
    mem: Word = ()
    prov: tuple[int, int] | None = None  # (petal, position), 1-based


@dataclass(frozen=True)
class FoldStep:
    closed: bool
    label: int
    kept_prov: tuple[int, int] | None
    merged_prov: tuple[int, int] | None
    relator: Word | None = None


@dataclass(frozen=True)
class FoldingLog:
    steps: tuple[FoldStep, ...]

    @property
    def closed_count(self) -> int:
        return sum(1 for s in self.steps if s.closed)

    @property
    def relators(self) -> tuple[Word, ...]:
        return tuple(s.relator for s in self.steps if s.closed)


class StallingsAutomaton:
    """Labeled based graph; immutable once handed out.

    Unfolded instances (fresh flowers) carry folded=False; fold() produces
    the folded automaton together with its log.
    """

    def __init__(self, base: int, edges: Sequence[Edge], folded: bool = False,
                 trivial_petals: tuple[int, ...] = ()):
        self.base = base
        self.edges = list(edges)
        self.folded = folded
        self.trivial_petals = trivial_petals

    def vertices(self) -> set[int]:
        verts = {self.base}
        for e in self.edges:
            verts.add(e.src)
            verts.add(e.dst)
        return verts

    def rank(self) -> int:
        return len(self.edges) - (len(self.vertices()) - 1)

    def copy(self) -> "StallingsAutomaton":
        return StallingsAutomaton(self.base, [replace(e) for e in self.edges],
                                  self.folded, self.trivial_petals)

    # -- traversal ---------------------------------------------------------

    def _adjacency(self) -> dict[int, list[tuple[int, int, int, int]]]:
        """vertex -> [(label, direction 0=out/1=in, edge index, other end)]."""
        adj: dict[int, list[tuple[int, int, int, int]]] = {v: [] for v in self.vertices()}
        for i, e in enumerate(self.edges):
            adj[e.src].append((e.label, 0, i, e.dst))
            adj[e.dst].append((e.label, 1, i, e.src))
        for lst in adj.values():
            lst.sort()
        return adj

    def bfs_order(self) -> list[int]:
        adj = self._adjacency()
        order = [self.base]
        seen = {self.base}
        head = 0
        while head < len(order):
            v = order[head]
            head += 1
            for _, _, _, other in adj[v]:
                if other not in seen:
                    seen.add(other)
                    order.append(other)
        return order

    def trace(self, word: Word) -> tuple[int, Word] | None:
        """Follow a word from the basepoint.

        Returns (end vertex, memory product along the path), or None when
        some letter cannot be read.  Requires a folded automaton so that the
        walk is deterministic.
        """
        out: dict[tuple[int, int], tuple[int, Edge]] = {}
        inc: dict[tuple[int, int], tuple[int, Edge]] = {}
        for e in self.edges:
            out[(e.src, e.label)] = (e.dst, e)
            inc[(e.dst, e.label)] = (e.src, e)
        v = self.base
        mem: list[int] = []
        for let in word:
            if let > 0:
                hop = out.get((v, let))
                if hop is None:
                    return None
                v = hop[0]
                mem.extend(hop[1].mem)
            else:
                hop = inc.get((v, -let))
                if hop is None:
                    return None
                v = hop[0]
                mem.extend(invert_word(hop[1].mem))
        return v, free_reduce(mem)

    # -- spanning tree and basis -------------------------------------------

    def spanning_tree(self) -> tuple[set[int], dict[int, Word]]:
        """BFS tree: (set of tree edge indices, vertex -> label path from base)."""
        adj = self._adjacency()
        tree: set[int] = set()
        path: dict[int, Word] = {self.base: ()}
        queue = [self.base]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for label, direction, idx, other in adj[v]:
                if other not in path:
                    path[other] = path[v] + ((label,) if direction == 0 else (-label,))
                    tree.add(idx)
                    queue.append(other)
        return tree, path

    def basis_words(self) -> tuple[FreeWord, ...]:
        """One loop word per non-tree edge, in deterministic order."""
        tree, path = self.spanning_tree()
        bfs_index = {v: i for i, v in enumerate(self.bfs_order())}
        nontree = [i for i in range(len(self.edges)) if i not in tree]
        nontree.sort(key=lambda i: (bfs_index[self.edges[i].src], self.edges[i].label,
                                    bfs_index[self.edges[i].dst], i))
        words = []
        for i in nontree:
            e = self.edges[i]
            words.append(free_reduce(path[e.src] + (e.label,) + invert_word(path[e.dst])))
        return tuple(words)

    def is_folded(self) -> bool:
        seen_out: set[tuple[int, int]] = set()
        seen_in: set[tuple[int, int]] = set()
        for e in self.edges:
            if (e.src, e.label) in seen_out or (e.dst, e.label) in seen_in:
                return False
            seen_out.add((e.src, e.label))
            seen_in.add((e.dst, e.label))
        return True

    # -- canonical form and dump -------------------------------------------

    def canonical_edges(self) -> tuple[tuple[int, int, int], ...]:
        """Edges renumbered by BFS order; equal iff automata are isomorphic
        as based labeled graphs (for folded automata)."""
        index = {v: i for i, v in enumerate(self.bfs_order())}
        return tuple(sorted((index[e.src], e.label, index[e.dst]) for e in self.edges))

    def dump(self) -> str:
        """One line per edge 'src --label--> dst'; the basepoint prints as *."""
        index = {v: i for i, v in enumerate(self.bfs_order())}

        def name(v: int) -> str:
            return f"{index[v]}*" if v == self.base else str(index[v])

        lines = [
            f"{name(e.src)} --{PQ_NAMES[e.label - 1]}--> {name(e.dst)}"
            for e in sorted(self.edges, key=lambda e: (index[e.src], e.label, index[e.dst]))
        ]
        return "\n".join(lines)


def build_flower(words: Sequence[FreeWord]) -> StallingsAutomaton:
    """Flower automaton: one petal per word, all attached at the basepoint.

    Empty words cannot form a petal; their (1-based) indices are recorded in
    trivial_petals and fold() turns each into the immediate relator x_i.
    The last edge of petal i carries the memory letter x_i.
    """
    edges: list[Edge] = []
    trivial: list[int] = []
    next_vertex = 1
    for petal, word in enumerate(words, start=1):
        if not word:
            trivial.append(petal)
            continue
        cur = 0
        for pos, let in enumerate(word, start=1):
            last = pos == len(word)
            nxt = 0 if last else next_vertex
            if not last:
                next_vertex += 1
            mem: Word = (petal,) if last else ()
            if let > 0:
                edges.append(Edge(cur, let, nxt, mem, (petal, pos)))
            else:
                edges.append(Edge(nxt, -let, cur, invert_word(mem), (petal, pos)))
            cur = nxt
    return StallingsAutomaton(0, edges, folded=False, trivial_petals=tuple(trivial))


# ---------------------------------------------------------------------------
# folding engine
# ---------------------------------------------------------------------------

def _mem_path(aut: StallingsAutomaton, target: int) -> Word:
    """Memory product along a BFS path base -> target in the current graph."""
    if target == aut.base:
        return ()
    adj = aut._adjacency()
    mem: dict[int, Word] = {aut.base: ()}
    queue = [aut.base]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for _, direction, idx, other in adj[v]:
            if other in mem:
                continue
            e = aut.edges[idx]
            step = e.mem if direction == 0 else invert_word(e.mem)
            mem[other] = free_reduce(mem[v] + step)
            if other == target:
                return mem[other]
            queue.append(other)
    raise AssertionError(f"vertex {target} unreachable from basepoint")


def _find_foldable(aut: StallingsAutomaton, order_variant: int
                   ) -> tuple[int, int, int] | None:
    """First foldable pair (direction, edge index kept, edge index merged).

    Default order: vertices in BFS discovery order, labels p before q,
    outgoing duplicates before incoming.  order_variant=1 flips both (used
    to exercise folding confluence).
    """
    labels = range(1, NUM_LABELS + 1) if order_variant == 0 else range(NUM_LABELS, 0, -1)
    directions = (0, 1) if order_variant == 0 else (1, 0)
    by_out: dict[tuple[int, int], list[int]] = {}
    by_in: dict[tuple[int, int], list[int]] = {}
    for i, e in enumerate(aut.edges):
        by_out.setdefault((e.src, e.label), []).append(i)
        by_in.setdefault((e.dst, e.label), []).append(i)
    for v in aut.bfs_order():
        for label in labels:
            for direction in directions:
                bucket = (by_out if direction == 0 else by_in).get((v, label), [])
                if len(bucket) >= 2:
                    return direction, bucket[0], bucket[1]
    return None


def _gauge(aut: StallingsAutomaton, vertex: int, gamma: Word) -> None:
    """Multiply edge memories so path products through `vertex` are unchanged:
    incoming memories pick up gamma on the right, outgoing gamma^-1 on the left."""
    if not gamma:
        return
    inv_gamma = invert_word(gamma)
    for e in aut.edges:
        if e.src == vertex:
            e.mem = free_reduce(inv_gamma + e.mem)
        if e.dst == vertex:
            e.mem = free_reduce(e.mem + gamma)


def _fold_pair(aut: StallingsAutomaton, direction: int, keep_i: int, merge_i: int,
               steps: list[FoldStep]) -> None:
    keep, merge = aut.edges[keep_i], aut.edges[merge_i]
    if keep.src == merge.src and keep.dst == merge.dst:
        # closed folding: the two edges are parallel; read the relator around
        # the redundant cycle, conjugated back to the basepoint
        path = _mem_path(aut, keep.src)
        relator = free_reduce(path + keep.mem + invert_word(merge.mem) + invert_word(path))
        assert relator, "closed folding produced an empty relator"
        steps.append(FoldStep(True, keep.label, keep.prov, merge.prov, relator))
        del aut.edges[merge_i]
        return
    if direction == 0:
        # same source, distinct targets: absorb one target into the other
        y, z = merge.dst, keep.dst
        if y == aut.base:
            keep, merge = merge, keep
            y, z = merge.dst, keep.dst
        _gauge(aut, y, free_reduce(invert_word(merge.mem) + keep.mem))
    else:
        y, z = merge.src, keep.src
        if y == aut.base:
            keep, merge = merge, keep
            y, z = merge.src, keep.src
        _gauge(aut, y, free_reduce(merge.mem + invert_word(keep.mem)))
    steps.append(FoldStep(False, keep.label, keep.prov, merge.prov, None))
    for idx, e in enumerate(aut.edges):
        if e is merge:
            del aut.edges[idx]
            break
    for e in aut.edges:
        if e.src == y:
            e.src = z
        if e.dst == y:
            e.dst = z


def _trim(aut: StallingsAutomaton) -> None:
    """Remove hanging trees: non-basepoint vertices of total degree <= 1."""
    while True:
        degree: dict[int, int] = {v: 0 for v in aut.vertices()}
        for e in aut.edges:
            degree[e.src] += 1
            degree[e.dst] += 1
        dead = [v for v, d in degree.items() if d <= 1 and v != aut.base]
        if not dead:
            return
        aut.edges = [e for e in aut.edges if e.src not in dead and e.dst not in dead]


def _fold_in_place(aut: StallingsAutomaton, order_variant: int = 0) -> list[FoldStep]:
    steps: list[FoldStep] = []
    while True:
        pair = _find_foldable(aut, order_variant)
        if pair is None:
            break
        _fold_pair(aut, *pair, steps)
    _trim(aut)
    aut.folded = True
    return steps


def fold(aut: StallingsAutomaton, _order_variant: int = 0
         ) -> tuple[StallingsAutomaton, FoldingLog]:
    """Fold an automaton; returns the folded copy and the step log.

    Trivial petals recorded by build_flower surface as immediate closed
    steps with relator x_i.  Folding an already-folded automaton returns it
    unchanged with an empty log.
    """
    work = aut.copy()
    steps = [FoldStep(True, 0, (i, 0), (i, 0), (i,)) for i in aut.trivial_petals]
    steps += _fold_in_place(work, _order_variant)
    work.trivial_petals = ()
    return work, FoldingLog(tuple(steps))


def stallings_membership(aut: StallingsAutomaton, word: FreeWord) -> bool:
    """True iff the (freely reduced) word labels a closed path at the basepoint."""
    if not aut.folded:
        raise ValueError("membership requires a folded automaton")
    hit = aut.trace(word)
    return hit is not None and hit[0] == aut.base


# ---------------------------------------------------------------------------
# subgroup presentations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PresentationOnGenerators:
    """Presentation of <gens> on the given generators.

    relators are words over abstract letters x1..xp (p = generator_count);
    substituting gens[i-1] for x_i in any relator freely reduces to the
    empty word, and the relators normally generate the kernel of x_i -> gens[i-1].
    """

    generator_count: int
    rank: int
    basis: tuple[FreeWord, ...]
    relators: tuple[Word, ...]

    def relator_names(self) -> tuple[str, ...]:
        names = tuple(f"x{i}" for i in range(1, self.generator_count + 1))
        return tuple(format_word(r, names) for r in self.relators)


def _attach_petal(aut: StallingsAutomaton, petal: int, word: FreeWord) -> None:
    base = aut.base
    fresh = max(aut.vertices(), default=base) + 1
    cur = base
    for pos, let in enumerate(word, start=1):
        last = pos == len(word)
        nxt = base if last else fresh
        if not last:
            fresh += 1
        mem: Word = (petal,) if last else ()
        if let > 0:
            aut.edges.append(Edge(cur, let, nxt, mem, (petal, pos)))
        else:
            aut.edges.append(Edge(nxt, -let, cur, invert_word(mem), (petal, pos)))
        cur = nxt


def subgroup_presentation(gens: Sequence[FreeWord]) -> PresentationOnGenerators:
    """Rank, basis and defining relators of the subgroup <gens> of F(p, q).

    Petals are folded in one at a time.  A generator already readable in the
    current automaton would fold on with a single closed folding, so its
    relator E(x1..x_{i-1}) x_i^-1 is emitted directly (E being the memory
    product along the accepting path) and the automaton is left untouched;
    this matches reading the new generator in the old ones.  Anything else
    is attached and folded for real, which may cascade.
    """
    relators: list[Word] = []
    aut = StallingsAutomaton(0, [], folded=True)
    for petal, word in enumerate(gens, start=1):
        word = free_reduce(word)
        if not word:
            relators.append((petal,))
            continue
        hit = aut.trace(word)
        if hit is not None and hit[0] == aut.base:
            relators.append(free_reduce(hit[1] + (-petal,)))
            continue
        _attach_petal(aut, petal, word)
        steps = _fold_in_place(aut)
        relators.extend(s.relator for s in steps if s.closed)

    rank = aut.rank()
    if len(relators) != len(gens) - rank:
        raise AssertionError(
            f"relator count {len(relators)} != {len(gens)} - rank {rank}")
    for rel in relators:
        value: list[int] = []
        for let in rel:
            part = gens[abs(let) - 1]
            value.extend(part if let > 0 else invert_word(part))
        if free_reduce(value):
            raise AssertionError("relator does not evaluate to the identity")
    return PresentationOnGenerators(len(gens), rank, aut.basis_words(), tuple(relators))
