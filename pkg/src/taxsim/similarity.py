"""Concept-pair similarity and distance measures, plus word-level scoring.

Eight measures: resnik, jcn_dist, jcn_norm, lin (IC-based), rada_dist,
wup, lch (path/depth-based), and the comprehensive measure ``new`` built
on the subsumer-count IC. Word-level scores take the max over all sense
pairs for similarities and the min for distances.
"""

import math
from dataclasses import dataclass

from .errors import InvalidCombinationError, UnusableModelError
from .ic import ic_hybrid

SIMILARITY = "similarity"
DISTANCE = "distance"


@dataclass(frozen=True)
class Score:
    value: float
    kind: str


def _require_ic(ic):
    if ic is None:
        raise InvalidCombinationError("this measure requires an IC table")
    return ic


def sim_resnik(taxonomy, ic, c1, c2):
    """IC of the lowest common subsumer."""
    _require_ic(ic)
    return Score(ic[taxonomy.lcs(c1, c2)], SIMILARITY)


def dist_jcn(taxonomy, ic, c1, c2):
    """Jiang-Conrath distance: IC(c1) + IC(c2) - 2 IC(lcs)."""
    _require_ic(ic)
    d = ic[c1] + ic[c2] - 2.0 * ic[taxonomy.lcs(c1, c2)]
    return Score(max(d, 0.0), DISTANCE)


def sim_jcn_norm(taxonomy, ic, c1, c2):
    """Jiang-Conrath distance linearly mapped to [0, 1]; needs IC in [0, 1]."""
    _require_ic(ic)
    if not ic.normalized:
        raise InvalidCombinationError(
            f"jcn_norm needs a normalized IC table, got model {ic.model!r}")
    return Score(1.0 - dist_jcn(taxonomy, ic, c1, c2).value / 2.0, SIMILARITY)


def sim_lin(taxonomy, ic, c1, c2):
    """2 IC(lcs) / (IC(c1) + IC(c2)); 0 when both ICs are 0."""
    _require_ic(ic)
    denom = ic[c1] + ic[c2]
    if denom == 0.0:
        return Score(0.0, SIMILARITY)
    return Score(2.0 * ic[taxonomy.lcs(c1, c2)] / denom, SIMILARITY)


def dist_rada(taxonomy, c1, c2):
    """Edge count of the shortest undirected hypernym path."""
    return Score(float(taxonomy.shortest_path_edges(c1, c2)), DISTANCE)


def sim_wup(taxonomy, c1, c2):
    """Wu-Palmer: 2 d / (len + 2 d) with d the node-count depth of the lcs."""
    d = taxonomy.depth(taxonomy.lcs(c1, c2))
    length = taxonomy.shortest_path_edges(c1, c2)
    return Score(2.0 * d / (length + 2.0 * d), SIMILARITY)


def sim_lch(taxonomy, c1, c2):
    """Leacock-Chodorow: -ln(path node count / (2 * max taxonomy depth))."""
    len_nodes = taxonomy.shortest_path_edges(c1, c2) + 1
    return Score(-math.log(len_nodes / (2.0 * taxonomy.max_depth)), SIMILARITY)


def sim_new(taxonomy, c1, c2):
    """Comprehensive measure on the subsumer-count IC.

    value = ln(2 ln M / D) with M the maximum subsumer count in the
    taxonomy and D = ln s1 + ln s2 - 2 ln s_lcs floored at
    eps = ln((M+1)/M) so identical pairs get the maximal finite score.
    """
    m = taxonomy.max_subsumer_count
    if m < 2:
        raise UnusableModelError("sim_new needs a taxonomy with max subsumer count >= 2")
    eps = math.log((m + 1) / m)
    d = ic_hybrid(taxonomy, c1) + ic_hybrid(taxonomy, c2) \
        - 2.0 * ic_hybrid(taxonomy, taxonomy.lcs(c1, c2))
    d = max(d, eps)
    return Score(math.log(2.0 * math.log(m) / d), SIMILARITY)


class Measure:
    __slots__ = ("name", "kind", "needs_ic", "_func")

    def __init__(self, name, kind, needs_ic, func):
        self.name = name
        self.kind = kind
        self.needs_ic = needs_ic
        self._func = func

    def __call__(self, taxonomy, c1, c2, ic=None):
        if self.needs_ic:
            return self._func(taxonomy, _require_ic(ic), c1, c2)
        return self._func(taxonomy, c1, c2)


MEASURES = {
    m.name: m
    for m in (
        Measure("resnik", SIMILARITY, True, sim_resnik),
        Measure("jcn_dist", DISTANCE, True, dist_jcn),
        Measure("jcn_norm", SIMILARITY, True, sim_jcn_norm),
        Measure("lin", SIMILARITY, True, sim_lin),
        Measure("rada_dist", DISTANCE, False, dist_rada),
        Measure("wup", SIMILARITY, False, sim_wup),
        Measure("lch", SIMILARITY, False, sim_lch),
        Measure("new", SIMILARITY, False, sim_new),
    )
}


def get_measure(name):
    try:
        return MEASURES[name]
    except KeyError:
        raise ValueError(f"unknown measure {name!r}; "
                         f"choose from {sorted(MEASURES)}") from None


def word_similarity(taxonomy, index, measure, w1, w2, ic=None):
    """Score two words: best score over all sense pairs.

    Similarities take the maximum, distances the minimum, so "best" always
    means "most similar". Raises OutOfVocabularyError for unknown lemmas.
    """
    if isinstance(measure, str):
        measure = get_measure(measure)
    senses1 = index.senses(w1)
    senses2 = index.senses(w2)
    best = None
    for c1 in senses1:
        for c2 in senses2:
            s = measure(taxonomy, c1, c2, ic=ic)
            if best is None:
                best = s
            elif measure.kind == DISTANCE:
                best = s if s.value < best.value else best
            else:
                best = s if s.value > best.value else best
    return best


def explain_word_pair(taxonomy, index, measure, w1, w2, ic=None):
    """Like word_similarity but also returns the winning sense pair and
    its lcs/depth/subsumer details, for the CLI --explain output."""
    if isinstance(measure, str):
        measure = get_measure(measure)
    best = None
    best_pair = None
    for c1 in index.senses(w1):
        for c2 in index.senses(w2):
            s = measure(taxonomy, c1, c2, ic=ic)
            better = (
                best is None
                or (measure.kind == DISTANCE and s.value < best.value)
                or (measure.kind != DISTANCE and s.value > best.value)
            )
            if better:
                best, best_pair = s, (c1, c2)
    c1, c2 = best_pair
    lcs = taxonomy.lcs(c1, c2)
    detail = {
        "sense1": c1,
        "sense2": c2,
        "lcs": lcs,
        "depth1": taxonomy.depth(c1),
        "depth2": taxonomy.depth(c2),
        "depth_lcs": taxonomy.depth(lcs),
        "subsumers1": taxonomy.subsumer_count(c1),
        "subsumers2": taxonomy.subsumer_count(c2),
        "subsumers_lcs": taxonomy.subsumer_count(lcs),
        "path_edges": taxonomy.shortest_path_edges(c1, c2),
    }
    return best, detail
