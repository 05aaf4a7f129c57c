"""Hasse quivers of finite posets, with DOT and JSON export.

A HassePoset stores the covering-relation digraph directly: vertices carry a
stable key and a display label, arrows point from the larger element to the
smaller one and may carry an integer tag (the mutation coordinate that
produced them).
"""

from __future__ import annotations

import json


class HassePoset:
    def __init__(self, vertices=None):
        # vertices: list of (key, label)
        self.keys: list = []
        self.labels: list[str] = []
        self.index: dict = {}
        self.arrows: list[tuple[int, int, int | None]] = []
        self._arrow_set: set[tuple[int, int]] = set()
        if vertices:
            for key, label in vertices:
                self.add_vertex(key, label)

    def add_vertex(self, key, label=None) -> int:
        if key in self.index:
            return self.index[key]
        idx = len(self.keys)
        self.index[key] = idx
        self.keys.append(key)
        self.labels.append(str(key) if label is None else str(label))
        return idx

    def add_arrow(self, src: int, dst: int, tag=None):
        if (src, dst) not in self._arrow_set:
            self._arrow_set.add((src, dst))
            self.arrows.append((src, dst, tag))

    def __len__(self) -> int:
        return len(self.keys)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def out_arrows(self, idx: int):
        return [a for a in self.arrows if a[0] == idx]

    def in_arrows(self, idx: int):
        return [a for a in self.arrows if a[1] == idx]

    def undirected_degrees(self) -> list[int]:
        deg = [0] * len(self.keys)
        for u, v, _ in self.arrows:
            deg[u] += 1
            deg[v] += 1
        return deg

    def sources(self) -> list[int]:
        has_in = {v for _, v, _ in self.arrows}
        return [i for i in range(len(self.keys)) if i not in has_in]

    def sinks(self) -> list[int]:
        has_out = {u for u, _, _ in self.arrows}
        return [i for i in range(len(self.keys)) if i not in has_out]

    def reachability(self) -> list[set[int]]:
        """reach[u] = set of vertices strictly below u (proper descendants)."""
        n = len(self.keys)
        children = [[] for _ in range(n)]
        for u, v, _ in self.arrows:
            children[u].append(v)
        reach: list[set[int] | None] = [None] * n
        order = self._topo_order(children)  # postorder: descendants come first
        for u in order:
            acc: set[int] = set()
            for v in children[u]:
                acc.add(v)
                acc |= reach[v]
            reach[u] = acc
        return reach

    def _topo_order(self, children) -> list[int]:
        n = len(self.keys)
        state = [0] * n
        order = []

        def visit(u):
            stack = [(u, iter(children[u]))]
            state[u] = 1
            while stack:
                node, it = stack[-1]
                advanced = False
                for v in it:
                    if state[v] == 0:
                        state[v] = 1
                        stack.append((v, iter(children[v])))
                        advanced = True
                        break
                    if state[v] == 1:
                        raise ValueError("cycle detected; not a poset quiver")
                if not advanced:
                    state[node] = 2
                    order.append(node)
                    stack.pop()

        for u in range(n):
            if state[u] == 0:
                visit(u)
        return order

    def leq(self, u: int, v: int, _reach=None) -> bool:
        """True iff key[u] <= key[v] in the order generated by the arrows."""
        reach = _reach if _reach is not None else self.reachability()
        return u == v or u in reach[v]

    def covers(self) -> set[tuple[int, int]]:
        """Covering pairs (u, v) of the reachability order (u covers v)."""
        reach = self.reachability()
        out = set()
        for u in range(len(self.keys)):
            for v in reach[u]:
                if not any(v in reach[w] for w in reach[u] if w != v):
                    out.add((u, v))
        return out

    def arrow_key_pairs(self) -> set[tuple]:
        return {(self.keys[u], self.keys[v]) for u, v, _ in self.arrows}

    def is_anti_isomorphic_to(self, other: "HassePoset", key_map) -> bool:
        """True iff key_map sends this quiver to ``other`` with arrows reversed."""
        if len(self) != len(other):
            return False
        mapped = {(key_map(self.keys[v]), key_map(self.keys[u])) for u, v, _ in self.arrows}
        return mapped == other.arrow_key_pairs()

    def is_isomorphic_to(self, other: "HassePoset", key_map) -> bool:
        if len(self) != len(other):
            return False
        mapped = {(key_map(self.keys[u]), key_map(self.keys[v])) for u, v, _ in self.arrows}
        return mapped == other.arrow_key_pairs()

    def to_json(self) -> dict:
        return {
            "vertices": [
                {"key": str(self.keys[i]), "label": self.labels[i]}
                for i in range(len(self.keys))
            ],
            "arrows": [
                {"from": u, "to": v, **({"tag": t} if t is not None else {})}
                for u, v, t in sorted(self.arrows)
            ],
        }

    def to_dot(self, name: str = "hasse") -> str:
        lines = [f"digraph {name} {{"]
        for i in range(len(self.keys)):
            lines.append(f'  v{i} [label="{self.labels[i]}"];')
        for u, v, t in sorted(self.arrows):
            attr = f' [label="{t}"]' if t is not None else ""
            lines.append(f"  v{u} -> v{v}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=False)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text
