"""Finite-depth forests and trees stored as level sets with parent maps.

A forest is a sequence of finite levels ``A_0, A_1, ...`` together with
parent maps ``A_{n+1} -> A_n``.  Storage is truncated at the degree: beyond
the last stored level every vertex implicitly continues as a chain of
singleton fibers (parent maps are bijections from there on), and validity
requires the truncation to be minimal.  Vertices are addressed as
``(level, index)`` pairs.

Bare forests are unordered: isomorphism is decided by a canonical form
that encodes each vertex as the sorted multiset of its children's
encodings.  Sibling order only becomes meaningful in the modules that add
interval structure on fibers.
"""

from __future__ import annotations

from dataclasses import dataclass

Vertex = tuple[int, int]


def _is_bijection(values: tuple[int, ...], cod_size: int) -> bool:
    return len(values) == cod_size and len(set(values)) == cod_size


@dataclass(frozen=True)
class LevelTree:
    """A forest as level sizes plus dense parent maps, truncated at degree.

    ``levels[n]`` is the size of the level-``n`` vertex set and
    ``parents[n][i]`` the parent index at level ``n`` of vertex
    ``(n+1, i)``.
    """

    levels: tuple[int, ...]
    parents: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.levels:
            raise ValueError("a forest stores at least level 0")
        if any(size < 0 for size in self.levels):
            raise ValueError("level sizes must be non-negative")
        if len(self.parents) != len(self.levels) - 1:
            raise ValueError("one parent map is required per stored step")
        for n, pmap in enumerate(self.parents):
            if len(pmap) != self.levels[n + 1]:
                raise ValueError(f"parent map at step {n} has wrong arity")
            if any(not 0 <= p < self.levels[n] for p in pmap):
                raise ValueError(f"parent map at step {n} has values out of range")
        if self.parents and _is_bijection(self.parents[-1], self.levels[-2]):
            raise ValueError(
                "storage is not truncated at the degree (top parent map is a bijection)"
            )

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def level_size(self, n: int) -> int:
        """Size of level ``n``, following the implicit continuation."""
        return self.levels[min(n, self.depth)]

    def parent(self, level: int, index: int) -> int:
        """Parent index of vertex ``(level, index)``; ``level >= 1``."""
        if level <= self.depth:
            return self.parents[level - 1][index]
        return index

    def children(self, level: int, index: int) -> list[int]:
        """Child indices of vertex ``(level, index)`` at level ``level + 1``."""
        if level + 1 <= self.depth:
            return [
                j for j, p in enumerate(self.parents[level]) if p == index
            ]
        return [index]

    def vertices(self):
        """All stored vertices as ``(level, index)`` pairs."""
        for n, size in enumerate(self.levels):
            for i in range(size):
                yield (n, i)

    @property
    def is_tree(self) -> bool:
        return self.levels[0] == 1

    @property
    def is_empty(self) -> bool:
        return self.levels[0] == 0

    def to_dict(self) -> dict:
        return {
            "kind": "tree",
            "levels": list(self.levels),
            "parents": [list(p) for p in self.parents],
        }

    @staticmethod
    def from_dict(data: dict) -> "LevelTree":
        return make_level_tree(
            tuple(int(s) for s in data["levels"]),
            tuple(tuple(int(p) for p in pmap) for pmap in data["parents"]),
        )


def make_level_tree(
    levels: tuple[int, ...], parents: tuple[tuple[int, ...], ...]
) -> LevelTree:
    """Build a :class:`LevelTree`, truncating trailing bijective steps."""
    levels = tuple(levels)
    parents = tuple(tuple(p) for p in parents)
    while parents and _is_bijection(parents[-1], levels[-2]):
        levels = levels[:-1]
        parents = parents[:-1]
    return LevelTree(levels, parents)


EMPTY_FOREST = LevelTree((0,), ())
POINT_TREE = LevelTree((1,), ())


def degree(a: LevelTree) -> int:
    """The least level from which all parent maps are bijections.

    Because storage is truncated exactly there, this is the stored depth.
    """
    return a.depth


def _restrict_keep(a: LevelTree, x: Vertex) -> list[list[int]]:
    """Per-level original indices of the subtree over ``x`` (stored part).

    Vertices beyond the stored depth belong to the implicit chain
    continuation, so their subtree is a single chain.
    """
    n, i = x
    if not (0 <= n and 0 <= i < a.level_size(n)):
        raise ValueError(f"unknown vertex {x}")
    if n >= a.depth:
        return [[i]]
    keep = [[i]]
    for lvl in range(n + 1, a.depth + 1):
        members = set(keep[-1])
        keep.append(
            [j for j, p in enumerate(a.parents[lvl - 1]) if p in members]
        )
    return keep


def restrict(a: LevelTree, x: Vertex) -> LevelTree:
    """The subtree rooted at vertex ``x``, re-truncated at its own degree."""
    keep = _restrict_keep(a, x)
    n = x[0]
    levels = tuple(len(part) for part in keep)
    parents = []
    for lvl in range(1, len(keep)):
        pos = {old: new for new, old in enumerate(keep[lvl - 1])}
        parents.append(
            tuple(pos[a.parents[n + lvl - 1][j]] for j in keep[lvl])
        )
    return make_level_tree(levels, tuple(parents))


def suspend(forest: LevelTree) -> LevelTree:
    """Prepend a fresh root whose children are the forest's roots."""
    return make_level_tree(
        (1,) + forest.levels, ((0,) * forest.levels[0],) + forest.parents
    )


def coproduct(forests: list[LevelTree]) -> LevelTree:
    """Disjoint union of forests, level-wise, in list order."""
    if not forests:
        return EMPTY_FOREST
    depth = max(f.depth for f in forests)
    levels = tuple(
        sum(f.level_size(n) for f in forests) for n in range(depth + 1)
    )
    parents = []
    for n in range(1, depth + 1):
        step: list[int] = []
        offset = 0
        for f in forests:
            if n <= f.depth:
                step.extend(p + offset for p in f.parents[n - 1])
            else:
                step.extend(i + offset for i in range(f.level_size(n)))
            offset += f.level_size(n - 1)
        parents.append(tuple(step))
    return make_level_tree(levels, tuple(parents))


def _encode_at_depth(a: LevelTree, depth: int) -> tuple:
    """Canonical unordered encoding of the forest truncated at ``depth``."""
    sizes = [a.level_size(n) for n in range(depth + 1)]
    encs: list[tuple] = [() for _ in range(sizes[depth])]
    for lvl in range(depth - 1, -1, -1):
        groups: list[list[tuple]] = [[] for _ in range(sizes[lvl])]
        for j in range(sizes[lvl + 1]):
            groups[a.parent(lvl + 1, j)].append(encs[j])
        encs = [tuple(sorted(g)) for g in groups]
    return tuple(sorted(encs))


def canonical_encoding(a: LevelTree) -> tuple:
    """A value equal for two forests exactly when they are isomorphic."""
    return (a.depth, _encode_at_depth(a, a.depth))


def is_isomorphic(a: LevelTree, b: LevelTree) -> bool:
    """Unordered isomorphism of forests (levels and parent fibers match)."""
    if a.depth != b.depth:
        return False
    return _encode_at_depth(a, a.depth) == _encode_at_depth(b, b.depth)


@dataclass(frozen=True)
class TreeMap:
    """A level-wise map of forests commuting with the parent maps.

    ``level_maps`` stores one map per level up to the larger of the two
    stored depths; beyond that both sides continue by bijections and the
    map continues unchanged.
    """

    dom: LevelTree
    cod: LevelTree
    level_maps: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        span = max(self.dom.depth, self.cod.depth) + 1
        if len(self.level_maps) != span:
            raise ValueError(
                f"expected {span} level maps, got {len(self.level_maps)}"
            )
        for n, fmap in enumerate(self.level_maps):
            if len(fmap) != self.dom.level_size(n):
                raise ValueError(f"level map {n} has wrong arity")
            if any(not 0 <= v < self.cod.level_size(n) for v in fmap):
                raise ValueError(f"level map {n} has values out of range")
        for n in range(1, span):
            for i in range(self.dom.level_size(n)):
                if self.cod.parent(n, self.level_maps[n][i]) != self.level_maps[
                    n - 1
                ][self.dom.parent(n, i)]:
                    raise ValueError(
                        f"map does not commute with parents at level {n}, index {i}"
                    )

    def at_level(self, n: int) -> tuple[int, ...]:
        return self.level_maps[min(n, len(self.level_maps) - 1)]

    def __call__(self, v: Vertex) -> Vertex:
        return (v[0], self.at_level(v[0])[v[1]])


def identity_tree_map(a: LevelTree) -> TreeMap:
    return TreeMap(
        a, a, tuple(tuple(range(size)) for size in a.levels)
    )


def compose_tree_maps(g: TreeMap, f: TreeMap) -> TreeMap:
    if f.cod != g.dom:
        raise ValueError("tree maps do not compose")
    span = max(f.dom.depth, g.cod.depth) + 1
    maps = tuple(
        tuple(g.at_level(n)[v] for v in f.at_level(n)[: f.dom.level_size(n)])
        for n in range(span)
    )
    return TreeMap(f.dom, g.cod, maps)


def restrict_map(f: TreeMap, x: Vertex) -> TreeMap:
    """The induced map between the subtree over ``x`` and the one over
    ``f(x)``."""
    n = x[0]
    y = f(x)
    sub_dom = restrict(f.dom, x)
    sub_cod = restrict(f.cod, y)
    keep_dom = _restrict_keep(f.dom, x)
    keep_cod = _restrict_keep(f.cod, y)
    span = max(sub_dom.depth, sub_cod.depth) + 1
    maps = []
    for k in range(span):
        old_dom = keep_dom[min(k, len(keep_dom) - 1)]
        old_cod = keep_cod[min(k, len(keep_cod) - 1)]
        cod_pos = {old: new for new, old in enumerate(old_cod)}
        maps.append(
            tuple(cod_pos[f.at_level(n + k)[old]] for old in old_dom)
        )
    return TreeMap(sub_dom, sub_cod, tuple(maps))
