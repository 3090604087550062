import random

from wlplab import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_01_matrix(rng: random.Random, rows: int, cols: int, density: float = 0.5):
    return [[1 if rng.random() < density else 0 for _ in range(cols)]
            for _ in range(rows)]
