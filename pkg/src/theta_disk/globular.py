"""Globular sets and globular cardinals.

A globular set stores, per dimension, how many cells it has and the
source/target cell of each cell one dimension down, subject to the usual
globular identities.  A globular cardinal is a finite globular set whose
cells are linearly ordered by the relation generated by placing every
cell strictly between its source and its target.

Cardinals are kept in canonical form: within each dimension the cell
indices appear in ascending order along the linear order.  Structural
equality of canonical forms then decides isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from itertools import product
from typing import Iterable, Sequence

Vertex = tuple[int, int]


@dataclass(frozen=True)
class GlobSet:
    """A finite globular set: cell counts plus source/target tables."""

    levels: tuple[int, ...]
    src: tuple[tuple[int, ...], ...]
    tgt: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if any(size <= 0 for size in self.levels):
            raise ValueError("levels are positive; truncate trailing zeros")
        expected = max(len(self.levels) - 1, 0)
        if len(self.src) != expected or len(self.tgt) != expected:
            raise ValueError(f"expected {expected} source and target tables")
        for k, (s, t) in enumerate(zip(self.src, self.tgt)):
            if len(s) != self.levels[k + 1] or len(t) != self.levels[k + 1]:
                raise ValueError(f"tables at dimension {k + 1} have wrong arity")
            if any(not 0 <= v < self.levels[k] for v in s + t):
                raise ValueError(
                    f"tables at dimension {k + 1} point outside dimension {k}"
                )
        for k in range(len(self.src) - 1):
            s, t = self.src[k], self.tgt[k]
            for w in range(self.levels[k + 2]):
                a, b = self.src[k + 1][w], self.tgt[k + 1][w]
                if s[a] != s[b] or t[a] != t[b]:
                    raise ValueError(
                        f"globular identities fail at dimension {k + 2}, "
                        f"cell {w}"
                    )

    @property
    def dim(self) -> int:
        return len(self.levels) - 1

    def vertices(self) -> list[Vertex]:
        return [
            (k, i) for k, size in enumerate(self.levels) for i in range(size)
        ]

    def source(self, v: Vertex) -> Vertex:
        return (v[0] - 1, self.src[v[0] - 1][v[1]])

    def target(self, v: Vertex) -> Vertex:
        return (v[0] - 1, self.tgt[v[0] - 1][v[1]])

    def to_dict(self) -> dict:
        return {
            "kind": "globcard",
            "levels": list(self.levels),
            "src": [list(s) for s in self.src],
            "tgt": [list(t) for t in self.tgt],
        }

    @staticmethod
    def from_dict(data: dict) -> "GlobSet":
        return GlobSet(
            tuple(int(v) for v in data["levels"]),
            tuple(tuple(int(v) for v in s) for s in data["src"]),
            tuple(tuple(int(v) for v in t) for t in data["tgt"]),
        )


def _reachability(gset: GlobSet) -> dict[Vertex, set[Vertex]]:
    """Strict reachability of the order generated by source < cell < target."""
    succ: dict[Vertex, set[Vertex]] = {v: set() for v in gset.vertices()}
    for k in range(1, len(gset.levels)):
        for i in range(gset.levels[k]):
            v = (k, i)
            succ[gset.source(v)].add(v)
            succ[v].add(gset.target(v))
    reach: dict[Vertex, set[Vertex]] = {}
    for v in succ:
        seen: set[Vertex] = set()
        stack = list(succ[v])
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(succ[u])
        reach[v] = seen
    return reach


@lru_cache(maxsize=None)
def _linear_order(gset: GlobSet) -> tuple[Vertex, ...] | None:
    """The unique linear order compatible with the spans, if it exists."""
    reach = _reachability(gset)
    verts = gset.vertices()
    if any(v in reach[v] for v in verts):
        return None
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            u, v = verts[a], verts[b]
            if v not in reach[u] and u not in reach[v]:
                return None
    return tuple(
        sorted(verts, key=cmp_to_key(lambda u, v: -1 if v in reach[u] else 1))
    )


@dataclass(frozen=True)
class GlobCard:
    """A globular cardinal in canonical form.

    The constructor checks that the span-generated order is total and that
    the given cell numbering lists each dimension in ascending order along
    it; use :func:`linearize` to bring an arbitrarily numbered globular
    set into this form.
    """

    gset: GlobSet

    def __post_init__(self) -> None:
        order = _linear_order(self.gset)
        if order is None:
            raise ValueError(
                "the span-generated order is not total; not a cardinal"
            )
        last = [-1] * len(self.gset.levels)
        for k, i in order:
            if i <= last[k]:
                raise ValueError(
                    "cell numbering is not canonical; apply linearize first"
                )
            last[k] = i

    @property
    def dim(self) -> int:
        return self.gset.dim

    @property
    def levels(self) -> tuple[int, ...]:
        return self.gset.levels

    def linear_order(self) -> tuple[Vertex, ...]:
        order = _linear_order(self.gset)
        assert order is not None
        return order

    def position(self, v: Vertex) -> int:
        return self.linear_order().index(v)

    def size(self) -> int:
        return sum(self.gset.levels)

    def to_dict(self) -> dict:
        return self.gset.to_dict()

    @staticmethod
    def from_dict(data: dict) -> "GlobCard":
        return GlobCard(GlobSet.from_dict(data))


EMPTY_CARDINAL = GlobCard(GlobSet((), (), ()))
POINT_CARDINAL = GlobCard(GlobSet((1,), (), ()))
ARROW_CARDINAL = GlobCard(GlobSet((2, 1), ((0,),), ((1,),)))


def linearize(gset: GlobSet) -> GlobCard | None:
    """Canonically renumber a globular set into a cardinal, if it is one."""
    order = _linear_order(gset)
    if order is None:
        return None
    rank: dict[Vertex, int] = {}
    counters = [0] * len(gset.levels)
    for k, i in order:
        rank[(k, i)] = counters[k]
        counters[k] += 1
    inverse: list[list[int]] = [[0] * size for size in gset.levels]
    for (k, i), r in rank.items():
        inverse[k][r] = i
    src = tuple(
        tuple(
            rank[(k - 1, gset.src[k - 1][inverse[k][ni]])]
            for ni in range(gset.levels[k])
        )
        for k in range(1, len(gset.levels))
    )
    tgt = tuple(
        tuple(
            rank[(k - 1, gset.tgt[k - 1][inverse[k][ni]])]
            for ni in range(gset.levels[k])
        )
        for k in range(1, len(gset.levels))
    )
    return GlobCard(GlobSet(gset.levels, src, tgt))


def consecutive(x: GlobCard, u: Vertex, v: Vertex) -> bool:
    """Whether ``v`` directly follows ``u`` among cells of their dimension."""
    if u[0] != v[0] or u == v:
        return False
    order = x.linear_order()
    pu, pv = order.index(u), order.index(v)
    if pu >= pv:
        return False
    return not any(
        w[0] == u[0] for w in order[pu + 1 : pv]
    )


@dataclass(frozen=True)
class GlobMor:
    """A morphism of globular sets between cardinals."""

    dom: GlobCard
    cod: GlobCard
    level_maps: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        dlevels = self.dom.gset.levels
        if len(self.level_maps) != len(dlevels):
            raise ValueError("one cell map per dimension of the domain")
        if len(dlevels) > len(self.cod.gset.levels):
            raise ValueError("codomain has no cells in some needed dimension")
        for k, fmap in enumerate(self.level_maps):
            if len(fmap) != dlevels[k]:
                raise ValueError(f"cell map at dimension {k} has wrong arity")
            if any(
                not 0 <= v < self.cod.gset.levels[k] for v in fmap
            ):
                raise ValueError(
                    f"cell map at dimension {k} has values out of range"
                )
        for k in range(1, len(dlevels)):
            for i in range(dlevels[k]):
                image = (k, self.level_maps[k][i])
                if self.cod.gset.source(image) != self(
                    self.dom.gset.source((k, i))
                ) or self.cod.gset.target(image) != self(
                    self.dom.gset.target((k, i))
                ):
                    raise ValueError(
                        f"map does not commute with source/target at "
                        f"dimension {k}, cell {i}"
                    )

    def __call__(self, v: Vertex) -> Vertex:
        return (v[0], self.level_maps[v[0]][v[1]])

    def to_dict(self) -> dict:
        return {
            "kind": "globmor",
            "dom": self.dom.to_dict(),
            "cod": self.cod.to_dict(),
            "level_maps": [list(m) for m in self.level_maps],
        }

    @staticmethod
    def from_dict(data: dict) -> "GlobMor":
        return GlobMor(
            GlobCard.from_dict(data["dom"]),
            GlobCard.from_dict(data["cod"]),
            tuple(tuple(int(v) for v in m) for m in data["level_maps"]),
        )


def identity_glob_mor(x: GlobCard) -> GlobMor:
    return GlobMor(
        x, x, tuple(tuple(range(size)) for size in x.gset.levels)
    )


def compose_glob_mors(g: GlobMor, f: GlobMor) -> GlobMor:
    if f.cod != g.dom:
        raise ValueError("globular morphisms do not compose")
    maps = tuple(
        tuple(g.level_maps[k][v] for v in f.level_maps[k])
        for k in range(len(f.level_maps))
    )
    return GlobMor(f.dom, g.cod, maps)


def is_incremental_map(values: Sequence[int]) -> bool:
    """Whether a map of linear orders is injective with an interval image."""
    if any(values[i] >= values[i + 1] for i in range(len(values) - 1)):
        return False
    return not values or values[-1] - values[0] + 1 == len(values)


def is_order_embedding(f: GlobMor) -> bool:
    """Whether every cell map is strictly increasing.

    This holds for all morphisms of globular cardinals; on top of it the
    dimension-0 map always has an interval image (is incremental), while
    higher cell maps may skip cells.
    """
    return all(
        all(fmap[i] < fmap[i + 1] for i in range(len(fmap) - 1))
        for fmap in f.level_maps
    )


def enumerate_glob_morphisms(x: GlobCard, y: GlobCard) -> list[GlobMor]:
    """All globular morphisms ``x -> y``, deterministically ordered."""
    dlevels = x.gset.levels
    if not dlevels:
        return [GlobMor(x, y, ())]
    if len(dlevels) > len(y.gset.levels):
        return []
    partials: list[tuple[tuple[int, ...], ...]] = [
        (combo,)
        for combo in product(range(y.gset.levels[0]), repeat=dlevels[0])
    ]
    for k in range(1, len(dlevels)):
        extended = []
        for partial in partials:
            options = []
            for i in range(dlevels[k]):
                s = partial[k - 1][x.gset.src[k - 1][i]]
                t = partial[k - 1][x.gset.tgt[k - 1][i]]
                candidates = [
                    j
                    for j in range(y.gset.levels[k])
                    if y.gset.src[k - 1][j] == s and y.gset.tgt[k - 1][j] == t
                ]
                options.append(candidates)
            if any(not o for o in options):
                continue
            for combo in product(*options):
                extended.append(partial + (combo,))
        partials = extended
    return [GlobMor(x, y, maps) for maps in partials]


def sub_globcard(
    x: GlobCard, keep: Sequence[Iterable[int]]
) -> tuple[GlobCard, GlobMor]:
    """The cardinal on the kept cells, with its inclusion into ``x``.

    ``keep`` lists the kept cell indices per dimension and must be closed
    under sources and targets.
    """
    kept = [sorted(set(level)) for level in keep]
    while kept and not kept[-1]:
        kept.pop()
    if len(kept) > len(x.gset.levels):
        raise ValueError("kept cells exceed the dimensions present")
    rank: list[dict[int, int]] = [
        {old: new for new, old in enumerate(level)} for level in kept
    ]
    for k in range(1, len(kept)):
        for i in kept[k]:
            if (
                x.gset.src[k - 1][i] not in rank[k - 1]
                or x.gset.tgt[k - 1][i] not in rank[k - 1]
            ):
                raise ValueError(
                    "kept cells are not closed under sources and targets"
                )
    gset = GlobSet(
        tuple(len(level) for level in kept),
        tuple(
            tuple(rank[k - 1][x.gset.src[k - 1][i]] for i in kept[k])
            for k in range(1, len(kept))
        ),
        tuple(
            tuple(rank[k - 1][x.gset.tgt[k - 1][i]] for i in kept[k])
            for k in range(1, len(kept))
        ),
    )
    sub = GlobCard(gset)
    incl = GlobMor(sub, x, tuple(tuple(level) for level in kept))
    return sub, incl


def _restrict_data(
    x: GlobCard, a: Vertex, b: Vertex
) -> tuple[GlobCard, list[list[int]]]:
    """The cells strictly between two same-dimension cells, one dimension
    up and beyond, pruned to the largest globular subfunctor and re-based
    to start at dimension 0.  Also returns the kept original indices."""
    if a[0] != b[0]:
        raise ValueError("restriction endpoints live in one dimension")
    n = a[0]
    order = x.linear_order()
    pa, pb = order.index(a), order.index(b)
    if pa >= pb:
        raise ValueError("restriction endpoints are not in order")
    between = set(order[pa + 1 : pb])
    kept: list[list[int]] = []
    for m in range(len(x.gset.levels) - n - 1):
        k = n + 1 + m
        layer = [i for i in range(x.gset.levels[k]) if (k, i) in between]
        if m > 0:
            prev = set(kept[m - 1])
            layer = [
                i
                for i in layer
                if x.gset.src[k - 1][i] in prev
                and x.gset.tgt[k - 1][i] in prev
            ]
        if not layer:
            break
        kept.append(layer)
    rank = [{old: new for new, old in enumerate(level)} for level in kept]
    gset = GlobSet(
        tuple(len(level) for level in kept),
        tuple(
            tuple(
                rank[m - 1][x.gset.src[n + m][i]] for i in kept[m]
            )
            for m in range(1, len(kept))
        ),
        tuple(
            tuple(
                rank[m - 1][x.gset.tgt[n + m][i]] for i in kept[m]
            )
            for m in range(1, len(kept))
        ),
    )
    return GlobCard(gset), kept


def restrict_gc(x: GlobCard, a: Vertex, b: Vertex) -> GlobCard:
    """The cardinal of cells strictly between ``a`` and ``b``, re-based."""
    return _restrict_data(x, a, b)[0]


def restrict_gc_mor(f: GlobMor, a: Vertex, b: Vertex) -> GlobMor:
    """The induced morphism between restrictions at ``a``, ``b`` and their
    images."""
    dom, dom_kept = _restrict_data(f.dom, a, b)
    cod, cod_kept = _restrict_data(f.cod, f(a), f(b))
    n = a[0]
    cod_rank = [
        {old: new for new, old in enumerate(level)} for level in cod_kept
    ]
    maps = []
    for m, layer in enumerate(dom_kept):
        row = []
        for i in layer:
            image = f.level_maps[n + 1 + m][i]
            if m >= len(cod_rank) or image not in cod_rank[m]:
                raise ValueError(
                    "morphism does not carry the restriction into the "
                    "restriction of its image"
                )
            row.append(cod_rank[m][image])
        maps.append(tuple(row))
    return GlobMor(dom, cod, tuple(maps))


def suspend_gc(components: Sequence[GlobCard]) -> GlobCard:
    """One dimension up: object cells separating the given cardinals.

    The result has ``len(components) + 1`` cells in dimension 0 and the
    ``i``-th component's cells, shifted one dimension, strictly between
    cells ``i`` and ``i + 1``.
    """
    if any(not c.gset.levels for c in components):
        raise ValueError("suspension components are non-empty")
    depth = max((len(c.gset.levels) for c in components), default=0)
    levels = [len(components) + 1]
    src: list[tuple[int, ...]] = []
    tgt: list[tuple[int, ...]] = []
    for k in range(depth):
        sizes = [
            c.gset.levels[k] if k < len(c.gset.levels) else 0
            for c in components
        ]
        offsets = [sum(sizes[:i]) for i in range(len(components))]
        levels.append(sum(sizes))
        if k == 0:
            src.append(
                tuple(
                    i
                    for i, c in enumerate(components)
                    for _ in range(sizes[i])
                )
            )
            tgt.append(
                tuple(
                    i + 1
                    for i, c in enumerate(components)
                    for _ in range(sizes[i])
                )
            )
        else:
            prev_sizes = [
                c.gset.levels[k - 1] if k - 1 < len(c.gset.levels) else 0
                for c in components
            ]
            prev_offsets = [
                sum(prev_sizes[:i]) for i in range(len(components))
            ]
            src.append(
                tuple(
                    prev_offsets[i] + c.gset.src[k - 1][j]
                    for i, c in enumerate(components)
                    for j in range(sizes[i])
                )
            )
            tgt.append(
                tuple(
                    prev_offsets[i] + c.gset.tgt[k - 1][j]
                    for i, c in enumerate(components)
                    for j in range(sizes[i])
                )
            )
    return GlobCard(GlobSet(tuple(levels), tuple(src), tuple(tgt)))


def suspend_gc_mor(
    offset: int,
    family: Sequence[GlobMor],
    dom_components: Sequence[GlobCard],
    cod_components: Sequence[GlobCard],
) -> GlobMor:
    """The suspension of a family of morphisms under an object offset.

    ``family[i]`` runs from ``dom_components[i]`` into
    ``cod_components[offset + i]``.
    """
    dom = suspend_gc(dom_components)
    cod = suspend_gc(cod_components)
    if len(family) != len(dom_components):
        raise ValueError("one morphism per domain component")
    maps: list[tuple[int, ...]] = [
        tuple(i + offset for i in range(len(dom_components) + 1))
    ]
    for k in range(1, len(dom.gset.levels)):
        cod_sizes = [
            c.gset.levels[k - 1] if k - 1 < len(c.gset.levels) else 0
            for c in cod_components
        ]
        cod_offsets = [sum(cod_sizes[:i]) for i in range(len(cod_components))]
        row: list[int] = []
        for i, f in enumerate(family):
            if k - 1 >= len(f.level_maps):
                continue
            base = cod_offsets[offset + i]
            row.extend(base + v for v in f.level_maps[k - 1])
        maps.append(tuple(row))
    return GlobMor(dom, cod, tuple(maps))


def comp_subfunctor(
    y: GlobCard, a: Vertex, b: Vertex
) -> tuple[GlobCard, GlobMor]:
    """The sub-cardinal spanned by two same-dimension cells, everything
    strictly between them, and their iterated sources and targets below;
    with its inclusion."""
    _, kept = _restrict_data(y, a, b)
    n = a[0]
    below: list[set[int]] = []
    current = {a[1], b[1]}
    for k in range(n, 0, -1):
        current = {
            table[i]
            for i in current
            for table in (y.gset.src[k - 1], y.gset.tgt[k - 1])
        }
        below.append(current)
    keep: list[Iterable[int]] = [set(level) for level in reversed(below)]
    keep.append({a[1], b[1]})
    keep.extend(kept)
    return sub_globcard(y, keep)
