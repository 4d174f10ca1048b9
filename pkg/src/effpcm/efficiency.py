"""Pareto efficiency of weight vectors via the Blanquero-Carrizosa-Conde digraph.

For a matrix A and positive weight vector w, the BCC digraph has an arc
i -> j whenever w_i/w_j >= a_ij.  A weight vector is efficient exactly when
this digraph is strongly connected; for tournaments (no perfectly estimated
pair) that is in turn equivalent to having a directed Hamiltonian cycle.

Exact weight vectors are compared exactly.  Float vectors get a relative
equality band (default 1e-9, overridable through EFFPCM_TOL) so that a
perfectly estimated pair is still recognized as carrying both arcs.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    DimensionTooLargeError,
)
from .pcm import Pcm, WeightVector, compare_ratio

DEFAULT_EQUALITY_BAND = 1e-9


def float_equality_band() -> float:
    """Relative tolerance for treating a float ratio as a perfect estimate."""
    return float(os.environ.get("EFFPCM_TOL", DEFAULT_EQUALITY_BAND))


@dataclass(frozen=True)
class BccDigraph:
    """Arc set over the alternatives induced by comparing w_i/w_j to a_ij."""

    n: int
    arcs: frozenset[tuple[int, int]]
    equality_pairs: frozenset[tuple[int, int]]  # unordered, stored with i < j

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self.arcs

    def successors(self, i: int) -> list[int]:
        return [j for j in range(1, self.n + 1) if (i, j) in self.arcs]


def bcc_digraph(pcm: Pcm, w: WeightVector, band: float | None = None) -> BccDigraph:
    """Build the BCC digraph of (pcm, w); both arcs appear on equality."""
    if pcm.n != w.n:
        raise DimensionMismatchError(
            f"DimensionMismatch: {pcm.n}x{pcm.n} matrix with {w.n}-weight vector"
        )
    if band is None:
        band = float_equality_band()
    arcs = set()
    equalities = set()
    for i in range(1, pcm.n + 1):
        for j in range(i + 1, pcm.n + 1):
            sign = compare_ratio(w, i, j, pcm.entries[i - 1][j - 1], band)
            if sign >= 0:
                arcs.add((i, j))
            if sign <= 0:
                arcs.add((j, i))
            if sign == 0:
                equalities.add((i, j))
    return BccDigraph(pcm.n, frozenset(arcs), frozenset(equalities))


def strongly_connected(g: BccDigraph) -> bool:
    """True iff every ordered vertex pair is joined by a directed path."""
    n = g.n
    if n <= 1:
        return True
    succ = {i: [] for i in range(1, n + 1)}
    for (a, b) in g.arcs:
        succ[a].append(b)
    order = _tarjan_components(n, succ)
    return len(order) == 1


def _tarjan_components(n: int, succ: dict[int, list[int]]) -> list[list[int]]:
    """Iterative Tarjan strongly-connected-components over vertices 1..n."""
    index = {}
    lowlink = {}
    on_stack = set()
    stack: list[int] = []
    components: list[list[int]] = []
    counter = itertools.count()

    for root in range(1, n + 1):
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = lowlink[root] = next(counter)
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for u in it:
                if u not in index:
                    index[u] = lowlink[u] = next(counter)
                    stack.append(u)
                    on_stack.add(u)
                    work.append((u, iter(succ[u])))
                    advanced = True
                    break
                if u in on_stack:
                    lowlink[v] = min(lowlink[v], index[u])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = []
                while True:
                    u = stack.pop()
                    on_stack.discard(u)
                    component.append(u)
                    if u == v:
                        break
                components.append(component)
    return components


def is_efficient(pcm: Pcm, w: WeightVector, band: float | None = None) -> bool:
    """Efficiency test: strong connectivity of the BCC digraph."""
    return strongly_connected(bcc_digraph(pcm, w, band))


def hamiltonian_cycle_exists(g: BccDigraph) -> bool:
    """Brute-force directed Hamiltonian cycle search, capped at n <= 8."""
    if g.n > 8:
        raise DimensionTooLargeError(
            f"DimensionTooLarge: Hamiltonian enumeration capped at n=8, got n={g.n}"
        )
    if g.n == 1:
        return True
    vertices = list(range(2, g.n + 1))
    for rest in itertools.permutations(vertices):
        ordering = (1,) + rest
        if all(
            (ordering[k], ordering[(k + 1) % g.n]) in g.arcs
            for k in range(g.n)
        ):
            return True
    return False


@dataclass(frozen=True)
class DominanceVerdict:
    dominates: bool
    strict_pair: tuple[int, int] | None

    def __post_init__(self):
        if self.dominates and self.strict_pair is None:
            raise ValueError("a dominating vector must exhibit a strict pair")


def dominates(pcm: Pcm, w_new: WeightVector, w_old: WeightVector) -> DominanceVerdict:
    """Pareto dominance: w_new approximates every entry at least as well as
    w_old, and at least one entry strictly better.

    Exact arithmetic when both vectors are exact; otherwise float arithmetic.
    The first strictly improved ordered pair (row-major) is reported.
    """
    if pcm.n != w_new.n or pcm.n != w_old.n:
        raise DimensionMismatchError("DimensionMismatch: matrix and weight vectors disagree")
    exact = w_new.exact and w_old.exact
    strict: tuple[int, int] | None = None
    for i in range(1, pcm.n + 1):
        for j in range(1, pcm.n + 1):
            if i == j:
                continue
            a = pcm.entries[i - 1][j - 1]
            if exact:
                err_new = abs(a - w_new.ratio(i, j))
                err_old = abs(a - w_old.ratio(i, j))
            else:
                a = float(a)
                err_new = abs(a - float(w_new.components[i - 1]) / float(w_new.components[j - 1]))
                err_old = abs(a - float(w_old.components[i - 1]) / float(w_old.components[j - 1]))
            if err_new > err_old:
                return DominanceVerdict(False, None)
            if strict is None and err_new < err_old:
                strict = (i, j)
    if strict is None:
        return DominanceVerdict(False, None)
    return DominanceVerdict(True, strict)


_PERTURBATION_SCALES = (1.0, 0.25, 0.0625)


def find_dominator_sample(
    pcm: Pcm,
    w: WeightVector,
    trials: int,
    seed: int,
) -> WeightVector | None:
    """Randomized multiplicative search for a dominating vector.

    Each trial perturbs w by component-wise factors exp(u) with u uniform on
    a symmetric range (base [-0.5, 0.5], cycled down for fine moves) and
    normalizes; the first candidate that dominates w is returned.  Trials
    alternate between independent per-component factors and a single shared
    factor on a random vertex subset.  The shared-factor move keeps ratios
    inside the subset exactly unchanged, which is essential whenever some
    entry is estimated perfectly: a dominator must reproduce that equality
    exactly, an event of probability zero under independent factors.

    For exact w the factors are converted to rationals, so the dominance
    re-check is exact and a returned vector always truly dominates.
    Positivity is preserved by construction; deterministic for a fixed seed.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    n = pcm.n
    subsets = [
        [i for i in range(n) if mask >> i & 1]
        for mask in range(1, 2 ** n - 1)
    ]
    for trial in range(trials):
        scale = _PERTURBATION_SCALES[trial % len(_PERTURBATION_SCALES)]
        if rng.random() < 0.5:
            shifts = [rng.uniform(-0.5, 0.5) * scale for _ in range(n)]
        else:
            shift = rng.uniform(-0.5, 0.5) * scale
            member = rng.choice(subsets)
            shifts = [shift if i in member else 0.0 for i in range(n)]
        factors = [math.exp(u) for u in shifts]
        if w.exact:
            components = tuple(
                c * Fraction(f).limit_denominator(10 ** 6)
                for c, f in zip(w.components, factors)
            )
        else:
            components = tuple(c * f for c, f in zip(w.components, factors))
        candidate = WeightVector(components).normalized()
        if dominates(pcm, candidate, w).dominates:
            return candidate
    return None
