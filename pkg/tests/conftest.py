import io
import os
import random
from collections import deque

import pytest

from taxsim.taxonomy import Synset, build_taxonomy
from taxsim.wordnet import load_tsv_taxonomy

# 7-node toy taxonomy: R -> {A, B}; A -> {C, D}; C -> {E, F}
T7_TSV = (
    "A\tR\n"
    "B\tR\n"
    "C\tA\n"
    "D\tA\n"
    "E\tC\n"
    "F\tC\n"
    "x\t#\tE\n"
    "x\t#\tD\n"
    "y\t#\tF\n"
)


@pytest.fixture
def t7():
    taxonomy, _ = load_tsv_taxonomy(io.StringIO(T7_TSV))
    return taxonomy


@pytest.fixture
def t7_index():
    _, index = load_tsv_taxonomy(io.StringIO(T7_TSV))
    return index


@pytest.fixture
def t7_both():
    return load_tsv_taxonomy(io.StringIO(T7_TSV))


def random_dag(rng, n, max_parents=2):
    """Random single-rooted DAG: node i > 0 draws 1..max_parents parents
    among nodes 0..i-1 (node 0 is the root)."""
    synsets = [Synset(id="n000", lemmas=("n000",))]
    for i in range(1, n):
        k = rng.randint(1, min(max_parents, i))
        parents = rng.sample(range(i), k)
        synsets.append(
            Synset(id=f"n{i:03d}", lemmas=(f"n{i:03d}",),
                   hypernyms=tuple(f"n{p:03d}" for p in parents))
        )
    return build_taxonomy(synsets)


def random_tree(rng, n):
    return random_dag(rng, n, max_parents=1)


# -- brute-force oracles, independent of the Taxonomy caches -------------


def oracle_ancestors(taxonomy, start):
    """Fixpoint of BFS over hypernym edges from start, start included."""
    seen = {start}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for parent in taxonomy.synsets[node].hypernyms:
            if parent not in seen:
                seen.add(parent)
                queue.append(parent)
    return seen


def oracle_undirected_bfs(taxonomy, src, dst):
    """Plain undirected BFS distance over hypernym links."""
    children = {sid: [] for sid in taxonomy.synsets}
    for sid, s in taxonomy.synsets.items():
        for parent in s.hypernyms:
            children[parent].append(sid)
    dist = {src: 0}
    queue = deque([src])
    while queue:
        node = queue.popleft()
        if node == dst:
            return dist[node]
        neighbors = list(taxonomy.synsets[node].hypernyms) + children[node]
        for other in neighbors:
            if other not in dist:
                dist[other] = dist[node] + 1
                queue.append(other)
    return -1


def oracle_depth(taxonomy, node):
    """Node-count depth via BFS from the root over child edges."""
    return oracle_undirected_down_depth(taxonomy)[node]


def oracle_undirected_down_depth(taxonomy):
    children = {sid: [] for sid in taxonomy.synsets}
    for sid, s in taxonomy.synsets.items():
        for parent in s.hypernyms:
            children[parent].append(sid)
    depth = {taxonomy.root: 1}
    queue = deque([taxonomy.root])
    while queue:
        node = queue.popleft()
        for child in children[node]:
            if child not in depth:
                depth[child] = depth[node] + 1
                queue.append(child)
    return depth


def wordnet_dir():
    """WordNet 3.0 dict directory, or None when unavailable in this env."""
    directory = os.environ.get("WORDNET_DIR")
    if directory and os.path.isfile(os.path.join(directory, "data.noun")):
        return directory
    return None


needs_wordnet = pytest.mark.skipif(
    wordnet_dir() is None,
    reason="WordNet 3.0 data not available (set WORDNET_DIR to the dict directory)",
)
