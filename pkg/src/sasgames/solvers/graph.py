"""
    Graph helpers on top of `scipy.sparse.csgraph`.
"""
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components


def strongly_connected_components(
    successors: Sequence[Sequence[int]],
    members: Optional[Iterable[int]] = None,
) -> List[List[int]]:
    """
    Strongly connected components of the graph restricted to `members`.

    Args:
        successors: Adjacency lists over ids `0..n-1`.
        members: Vertices to keep, default all.

    Returns:
        Components as ascending id lists, ordered by their smallest id.
    """
    nodes = list(range(len(successors))) if members is None else sorted(set(members))
    if not nodes:
        return []
    index = {v: i for i, v in enumerate(nodes)}
    rows, cols = [], []
    for v in nodes:
        for u in successors[v]:
            j = index.get(u)
            if j is not None:
                rows.append(index[v])
                cols.append(j)
    k = len(nodes)
    matrix = csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(k, k)
    )
    _, labels = connected_components(matrix, directed=True, connection="strong")
    groups: Dict[int, List[int]] = {}
    for i, label in enumerate(labels):
        groups.setdefault(int(label), []).append(nodes[i])
    return sorted(groups.values(), key=lambda c: c[0])


def is_nontrivial(component: Sequence[int], successors: Sequence[Sequence[int]]) -> bool:
    """True if the component carries a cycle (more than one vertex or a self-loop)."""
    if len(component) > 1:
        return True
    v = component[0]
    return v in successors[v]


def reachable(successors: Sequence[Sequence[int]], sources: Iterable[int]) -> List[int]:
    """Vertices reachable from `sources` (sources included), ascending."""
    seen = set(sources)
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for u in successors[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return sorted(seen)


def backward_reachable(
    predecessors: Sequence[Sequence[int]],
    targets: Iterable[int],
    members: Optional[Sequence[bool]] = None,
) -> List[int]:
    """Vertices (inside `members`) with a path to `targets`, ascending."""
    seen = set(targets)
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for u in predecessors[v]:
            if u not in seen and (members is None or members[u]):
                seen.add(u)
                queue.append(u)
    return sorted(seen)


def shortest_path(
    successors: Sequence[Sequence[int]],
    source: int,
    goal: Iterable[int],
    members: Optional[Sequence[bool]] = None,
) -> Optional[List[int]]:
    """Breadth-first path from `source` to the nearest vertex of `goal`, both ends included."""
    goal = set(goal)
    parent = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v in goal:
            path = []
            while v is not None:
                path.append(v)
                v = parent[v]
            return path[::-1]
        for u in successors[v]:
            if u not in parent and (members is None or members[u]):
                parent[u] = v
                queue.append(u)
    return None
