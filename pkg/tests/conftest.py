import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from signedbalance.graph import build_graph  # noqa: E402


def random_graph(rng: random.Random, n: int, density: float, pos_share: float = 0.5):
    triples = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < density:
                triples.append((u, v, 1 if rng.random() < pos_share else -1))
    return build_graph(triples, nodes=range(n))


@st.composite
def signed_digraphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=len(chosen), max_size=len(chosen)))
    return build_graph([(u, v, s) for (u, v), s in zip(chosen, signs)], nodes=range(n))


@pytest.fixture
def rng():
    return random.Random(20240101)
