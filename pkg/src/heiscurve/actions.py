"""Permutation actions of Gamma-bar(2) on finite sets.

A ``PermAction`` records where the generators A and B send each point under
a right action.  Permutations are plain lists: ``p[i]`` is the image of i.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, List, Sequence


def perm_inverse(p: Sequence[int]) -> List[int]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return inv


def perm_compose(first: Sequence[int], second: Sequence[int]) -> List[int]:
    """Apply ``first`` then ``second`` (right-action convention)."""
    return [second[first[i]] for i in range(len(first))]


def perm_cycles(p: Sequence[int]) -> List[List[int]]:
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        cycles.append(cyc)
    return cycles


def perm_cycle_type(p: Sequence[int]) -> List[int]:
    return sorted(len(c) for c in perm_cycles(p))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def orbits(degree: int, perms: Iterable[Sequence[int]]) -> List[List[int]]:
    perms = list(perms)
    parent = list(range(degree))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p in perms:
        for i in range(degree):
            ri, rj = find(i), find(p[i])
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict = {}
    for i in range(degree):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


@dataclass(frozen=True)
class PermAction:
    """Right action of A (``x``) and B (``y``) on ``range(degree)``."""

    x: tuple
    y: tuple

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise ValueError("x and y act on sets of different sizes")
        if not (is_permutation(self.x) and is_permutation(self.y)):
            raise ValueError("x and y must be permutations of range(degree)")

    @classmethod
    def from_lists(cls, x: Sequence[int], y: Sequence[int]) -> "PermAction":
        return cls(tuple(x), tuple(y))

    @property
    def degree(self) -> int:
        return len(self.x)

    @property
    def p_inf(self) -> List[int]:
        return list(self.x)

    @property
    def p_zero(self) -> List[int]:
        return list(self.y)

    @property
    def p_one(self) -> List[int]:
        # image of A^-1 B: apply x^-1, then y
        return perm_compose(perm_inverse(self.x), self.y)

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(orbits(self.degree, [self.x, self.y])) == 1

    def to_json(self) -> str:
        return json.dumps({"degree": self.degree, "x": list(self.x), "y": list(self.y)}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PermAction":
        data = json.loads(text)
        act = cls(tuple(data["x"]), tuple(data["y"]))
        if "degree" in data and data["degree"] != act.degree:
            raise ValueError("degree field disagrees with permutation length")
        return act


def action_from_group(
    points: Sequence[Hashable],
    act_x: Callable[[Hashable], Hashable],
    act_y: Callable[[Hashable], Hashable],
) -> PermAction:
    """Build a PermAction from a point list and the two right multiplications."""
    index = {p: i for i, p in enumerate(points)}
    x = [index[act_x(p)] for p in points]
    y = [index[act_y(p)] for p in points]
    return PermAction(tuple(x), tuple(y))


def orbit_closure(start: Hashable, moves: Sequence[Callable[[Hashable], Hashable]]) -> List[Hashable]:
    """Breadth-first orbit of ``start`` under the given maps, in discovery order."""
    seen = {start}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for move in moves:
                q = move(p)
                if q not in seen:
                    seen.add(q)
                    order.append(q)
                    nxt.append(q)
        frontier = nxt
    return order
