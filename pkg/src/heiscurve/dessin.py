"""Dessins d'enfants of coverings of X(2) given by a PermAction.

Edges are the points of the action.  Black vertices (cusps above 0) are the
cycles of pi_y, white vertices (cusps above oo) the cycles of pi_x^-1, and
faces (cusps above 1) the cycles of pi_1 = pi_x^-1 then pi_y.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .actions import PermAction, perm_compose, perm_cycles, perm_inverse
from .heisenberg import HeisParams, heisenberg_level, regular_action


class DessinError(ValueError):
    pass


@dataclass(frozen=True)
class Dessin:
    black: Tuple[int, ...]
    white: Tuple[int, ...]
    face: Tuple[int, ...]
    labels: Optional[Tuple[Tuple[int, int, int], ...]] = None

    @property
    def num_edges(self) -> int:
        return len(self.black)

    def black_vertices(self) -> List[List[int]]:
        return sorted(perm_cycles(self.black))

    def white_vertices(self) -> List[List[int]]:
        return sorted(perm_cycles(self.white))

    def faces(self) -> List[List[int]]:
        return sorted(perm_cycles(self.face))

    def vertex_degrees(self) -> Dict[str, List[int]]:
        return {
            "black": sorted(len(c) for c in self.black_vertices()),
            "white": sorted(len(c) for c in self.white_vertices()),
        }

    def euler_characteristic(self) -> int:
        return len(self.black_vertices()) + len(self.white_vertices()) - self.num_edges + len(self.faces())


def build_dessin(action: PermAction, labels: Optional[List[Tuple[int, int, int]]] = None) -> Dessin:
    if not action.is_transitive():
        raise DessinError("action is not transitive; the dessin would be disconnected")
    white = perm_inverse(action.x)
    face = perm_compose(white, action.y)
    if labels is not None and len(labels) != action.degree:
        raise DessinError("one label per edge is required")
    return Dessin(tuple(action.y), tuple(white), tuple(face), tuple(map(tuple, labels)) if labels else None)


def heisenberg_labels(params: HeisParams) -> List[Tuple[int, int, int]]:
    """(a, c, b) for each point of ``regular_action(params)``."""
    out = []
    for a in range(params.M):
        for c in range(params.L):
            for b in range(params.N):
                out.append((a, c, b))
    return out


def heisenberg_dessin(N: int) -> Dessin:
    """Dessin of X'_N, edges labelled by the elements of H_{N,N,N'}."""
    params = heisenberg_level(N)
    return build_dessin(regular_action(params), heisenberg_labels(params))


def dessin_genus(d: Dessin) -> int:
    chi = d.euler_characteristic()
    if chi % 2:
        raise DessinError(f"odd Euler characteristic {chi}")
    return (2 - chi) // 2


def export_dot(d: Dessin) -> str:
    bl = {e: k for k, cyc in enumerate(d.black_vertices()) for e in cyc}
    wh = {e: k for k, cyc in enumerate(d.white_vertices()) for e in cyc}
    lines = ["graph dessin {"]
    for k in range(len(d.black_vertices())):
        lines.append(f'  b_{k} [style=filled, fillcolor=black, fontcolor=white];')
    for k in range(len(d.white_vertices())):
        lines.append(f'  w_{k} [style=solid];')
    for e in range(d.num_edges):
        attr = ""
        if d.labels:
            a, c, b = d.labels[e]
            attr = f' [label="({a},{c},{b})"]'
        lines.append(f"  b_{bl[e]} -- w_{wh[e]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(d: Dessin) -> str:
    data = {
        "black": list(d.black),
        "white": list(d.white),
        "face": list(d.face),
        "labels": [list(l) for l in d.labels] if d.labels else None,
    }
    return json.dumps(data, sort_keys=True)


def from_json(text: str) -> Dessin:
    data = json.loads(text)
    labels = tuple(tuple(l) for l in data["labels"]) if data.get("labels") else None
    d = Dessin(tuple(data["black"]), tuple(data["white"]), tuple(data["face"]), labels)
    if list(d.face) != perm_compose(list(d.white), list(d.black)):
        raise DessinError("face permutation is inconsistent with black and white")
    return d


def _relabel_family():
    """Maps (a, c, b) -> (sa * a, s*c + t*ab + u*a + v*b + w*a(a-1)/2 + q*b(b-1)/2, b)."""
    vals = (-1, 0, 1)
    for sa in (1, -1):
        for s in (1, -1):
            for t in vals:
                for u in vals:
                    for v in vals:
                        for w in vals:
                            for q in vals:
                                yield (sa, s, t, u, v, w, q)


def adjacency_rule_check(N: int) -> dict:
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {N}")
    params = heisenberg_level(N)
    Np = params.L
    d = heisenberg_dessin(N)
    labels = d.labels

    def norm(a, c, b):
        return (a % N, c % Np, b % N)

    black_ok = all(labels[d.black[i]] == norm(a, c, b + 1) for i, (a, c, b) in enumerate(labels))
    truth_ok = all(labels[d.white[i]] == norm(a - 1, c + b, b) for i, (a, c, b) in enumerate(labels))
    printed_ok = all(labels[d.white[i]] == norm(a - 1, c - a * b, b) for i, (a, c, b) in enumerate(labels))

    def inv(a, c, b):
        return (b % N, (c + a * b) % Np)

    invariant_ok = all(inv(*labels[d.white[i]]) == inv(*l) for i, l in enumerate(labels))
    printed_invariant_ok = all(inv(*norm(a - 1, c - a * b, b)) == inv(a, c, b) for (a, c, b) in labels)

    reconciling = []
    for sa, s, t, u, v, w, q in _relabel_family():
        f = {}
        for (a, c, b) in labels:
            f[(a, c, b)] = norm(sa * a, s * c + t * a * b + u * a + v * b + w * (a * (a - 1) // 2) + q * (b * (b - 1) // 2), b)
        if len(set(f.values())) != len(labels):
            continue
        good = True
        for i, l in enumerate(labels):
            a2, c2, b2 = f[l]
            if f[labels[d.black[i]]] != norm(a2, c2, b2 + 1) or f[labels[d.white[i]]] != norm(a2 - 1, c2 - a2 * b2, b2):
                good = False
                break
        if good:
            reconciling.append({"sa": sa, "s": s, "t": t, "u": u, "v": v, "w": w, "q": q})
    return {
        "N": N,
        "black_rule_matches": black_ok,
        "white_rule_ground_truth": "(a-1, c+b, b)",
        "white_ground_truth_holds": truth_ok,
        "white_printed_rule_matches": printed_ok,
        "white_edges_preserve_invariant": invariant_ok,
        "printed_rule_preserves_invariant": printed_invariant_ok,
        "relabelings_searched": 2 * 2 * 3 ** 5,
        "reconciling_relabelings": reconciling,
        "edges": d.num_edges,
    }
