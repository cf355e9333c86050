import itertools

from hypothesis import settings
from hypothesis import strategies as st

from ol21 import PathPattern, build_graph

settings.register_profile("suite", deadline=None, derandomize=True, max_examples=60)
settings.load_profile("suite")


@st.composite
def oriented_graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        state = draw(st.integers(min_value=0, max_value=2))
        if state == 1:
            arcs.append((u, v))
        elif state == 2:
            arcs.append((v, u))
    return build_graph(n, arcs)


constraint_sets = st.sets(st.sampled_from(list(PathPattern))).map(frozenset)
