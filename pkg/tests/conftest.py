import itertools

import pytest

from plumbed_hf.graph import PlumbingGraph, brieskorn_family_graph, validate
from plumbed_hf.lattice import IntersectionForm


def family_form(n):
    return IntersectionForm.from_graph(brieskorn_family_graph(n))


def family_basic(n, i):
    """K_i = (1, 0, -1, -4n-3+2i, 0, ..., 0)."""
    return (1, 0, -1, -4 * n - 3 + 2 * i) + (0,) * (n - 1)


def small_graphs(max_weight=5):
    """Every negative-definite forest on 1-3 labelled vertices with |m(v)| <= max_weight
    and at most one bad vertex (up to the choice of shape below)."""
    shapes = {1: [()], 2: [(), ((0, 1),)], 3: [(), ((0, 1),), ((0, 1), (1, 2))]}
    for size, edge_sets in shapes.items():
        for edges in edge_sets:
            for ws in itertools.product(range(-max_weight, 0), repeat=size):
                g = PlumbingGraph(ws, edges)
                rep = validate(g)
                if rep.negative_definite and len(rep.bad_vertices) <= 1:
                    yield g


@pytest.fixture(params=[1, 2, 3])
def small_n(request):
    return request.param
