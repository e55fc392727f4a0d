"""Disks: finite-degree trees whose fibers carry interval structure.

A disk is stored canonically: within every fiber the vertices are numbered
by their interval order, and the fibers of a level are concatenated in the
order of their parent vertices, so the parent maps are monotone and the
endpoint sections are simply the first and last element of each fiber.
Structural equality of the canonical form then decides disk isomorphism.

The validity conditions are: every vertex below the degree has a non-empty
fiber; on each level above the root the vertices with singleton fibers are
exactly the fiber endpoints from the previous level; and the root fiber is
a singleton only in the degree-0 (trivial) disks.

``phi_obj``/``phi_mor`` convert disks into inductive interval trees by
reading the root fiber as an interval and recursing into the subtrees over
its elements; ``phi_inverse_obj`` rebuilds the disk by suspending the
coproduct of the children's disks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from theta_disk.forest import (
    LevelTree,
    TreeMap,
    coproduct,
    make_level_tree,
    restrict,
    restrict_map,
    suspend,
)
from theta_disk.itree import (
    INTERVAL,
    ITreeMor,
    ITreeObj,
    marker,
    trivial_obj,
)
from theta_disk.ordinal import OrdMap, Ordinal, enumerate_interval_maps


@dataclass(frozen=True)
class Disk:
    """A disk in canonical form: a tree with monotone parent maps."""

    tree: LevelTree

    def __post_init__(self) -> None:
        if not self.tree.is_tree:
            raise ValueError("a disk is carried by a tree (single root)")
        for n, pmap in enumerate(self.tree.parents):
            if any(pmap[i] > pmap[i + 1] for i in range(len(pmap) - 1)):
                raise ValueError(
                    f"parent map at step {n} is not monotone; the canonical "
                    "form numbers fibers consecutively in parent order"
                )

    @property
    def degree(self) -> int:
        return self.tree.depth

    @property
    def is_trivial(self) -> bool:
        return self.degree == 0

    def fiber(self, level: int, index: int) -> range:
        """Indices at ``level + 1`` of the fiber over ``(level, index)``."""
        if level + 1 > self.tree.depth:
            return range(index, index + 1)
        pmap = self.tree.parents[level]
        lo = next(
            (j for j, p in enumerate(pmap) if p == index), len(pmap)
        )
        hi = lo
        while hi < len(pmap) and pmap[hi] == index:
            hi += 1
        return range(lo, hi)

    def to_dict(self) -> dict:
        return {
            "kind": "disk",
            "levels": list(self.tree.levels),
            "parents": [list(p) for p in self.tree.parents],
            "fiber_sizes": [
                [len(self.fiber(n, i)) for i in range(size)]
                for n, size in enumerate(self.tree.levels[:-1])
            ],
        }

    @staticmethod
    def from_dict(data: dict) -> "Disk":
        d = Disk(
            make_level_tree(
                tuple(int(s) for s in data["levels"]),
                tuple(tuple(int(p) for p in pmap) for pmap in data["parents"]),
            )
        )
        if "fiber_sizes" in data:
            declared = [
                [int(v) for v in row] for row in data["fiber_sizes"]
            ]
            actual = [
                [len(d.fiber(n, i)) for i in range(size)]
                for n, size in enumerate(d.tree.levels[:-1])
            ]
            if declared != actual:
                raise ValueError("declared fiber sizes disagree with parents")
        return d


def trivial_disk() -> Disk:
    return Disk(LevelTree((1,), ()))


def validate_disk(d: Disk, strict: bool = False) -> list[str]:
    """Diagnostics for the disk conditions; empty means valid.

    With ``strict=True`` the degree-0 disks are also rejected (the
    relaxation admitting a singleton root fiber is turned off).
    """
    problems: list[str] = []
    tree = d.tree
    deg = d.degree
    if strict and deg == 0:
        problems.append("level 0: strict disks exclude the degree-0 shapes")
    if deg >= 1 and tree.levels[1] < 2:
        problems.append(
            "level 0: the root fiber of a positive-degree disk has at "
            "least two elements"
        )
    for n in range(1, deg):
        if any(
            len(d.fiber(n, i)) == 0 for i in range(tree.levels[n])
        ):
            problems.append(
                f"level {n}: every vertex below the degree has a "
                "non-empty fiber"
            )
            break
    for n in range(1, deg + 1):
        singleton = {
            i for i in range(tree.levels[n]) if len(d.fiber(n, i)) == 1
        }
        ends: set[int] = set()
        for parent_index in range(tree.levels[n - 1]):
            fib = d.fiber(n - 1, parent_index)
            if fib:
                ends.add(fib[0])
                ends.add(fib[-1])
        if singleton != ends:
            problems.append(
                f"level {n}: vertices with singleton fibers are "
                f"{sorted(singleton)} but the fiber endpoints from below "
                f"are {sorted(ends)}"
            )
    return problems


def restrict_disk(d: Disk, i: int) -> Disk:
    """The disk over the ``i``-th element of the root fiber."""
    return Disk(restrict(d.tree, (1, i)))


@dataclass(frozen=True)
class DiskMor:
    """A disk morphism: a tree map, monotone and endpoint-preserving on
    every fiber."""

    dom: Disk
    cod: Disk
    tree_map: TreeMap

    def __post_init__(self) -> None:
        f = self.tree_map
        if f.dom != self.dom.tree or f.cod != self.cod.tree:
            raise ValueError("tree map does not run between the given disks")
        span = max(self.dom.tree.depth, self.cod.tree.depth)
        for n in range(span):
            cur = f.at_level(n + 1)
            for x in range(self.dom.tree.level_size(n)):
                fib = self.dom.fiber(n, x)
                target = self.cod.fiber(n, f.at_level(n)[x])
                values = [cur[j] for j in fib]
                if any(
                    values[a] > values[a + 1] for a in range(len(values) - 1)
                ):
                    raise ValueError(
                        f"fiber over level-{n} vertex {x} is not mapped "
                        "monotonely"
                    )
                if values[0] != target[0] or values[-1] != target[-1]:
                    raise ValueError(
                        f"fiber over level-{n} vertex {x} does not preserve "
                        "endpoints"
                    )


def identity_disk_mor(d: Disk) -> DiskMor:
    from theta_disk.forest import identity_tree_map

    return DiskMor(d, d, identity_tree_map(d.tree))


def compose_disk_mors(g: DiskMor, f: DiskMor) -> DiskMor:
    from theta_disk.forest import compose_tree_maps

    if f.cod != g.dom:
        raise ValueError("disk morphisms do not compose")
    return DiskMor(f.dom, g.cod, compose_tree_maps(g.tree_map, f.tree_map))


def restrict_disk_mor(f: DiskMor, i: int) -> DiskMor:
    """The induced morphism between the disks over root-fiber elements."""
    j = f.tree_map.at_level(1)[i]
    return DiskMor(
        restrict_disk(f.dom, i),
        restrict_disk(f.cod, j),
        restrict_map(f.tree_map, (1, i)),
    )


def phi_obj(d: Disk) -> ITreeObj:
    """Read a disk as an inductive interval tree."""
    if problems := validate_disk(d):
        raise ValueError(f"invalid disk: {problems[0]}")
    return _phi_obj(d)


def _phi_obj(d: Disk) -> ITreeObj:
    if d.is_trivial:
        return trivial_obj(INTERVAL)
    k = d.tree.levels[1]
    children = tuple(_phi_obj(restrict_disk(d, i)) for i in range(k))
    return ITreeObj(INTERVAL, Ordinal(k - 1), children)


def phi_mor(f: DiskMor) -> ITreeMor:
    """Read a disk morphism as an inductive interval tree morphism."""
    dom_t, cod_t = _phi_obj(f.dom), _phi_obj(f.cod)
    if f.cod.is_trivial:
        return marker(dom_t, cod_t)
    if f.dom.is_trivial:
        raise ValueError(
            "no disk morphism runs from the trivial disk to a non-trivial one"
        )
    k_dom, k_cod = f.dom.tree.levels[1], f.cod.tree.levels[1]
    root = OrdMap(
        Ordinal(k_dom - 1), Ordinal(k_cod - 1), f.tree_map.at_level(1)
    )
    children = tuple(
        phi_mor(restrict_disk_mor(f, i)) for i in range(k_dom)
    )
    return ITreeMor(dom_t, cod_t, root, children)


def _assemble(children: list[Disk]) -> Disk:
    """The disk with the given root-fiber subtree disks, in order."""
    return Disk(suspend(coproduct([c.tree for c in children])))


def phi_inverse_obj(h: ITreeObj) -> Disk:
    """The canonical disk whose interval-tree reading is ``h``."""
    if h.flavor != INTERVAL:
        raise ValueError("disks correspond to interval-flavor trees")
    if h.is_trivial:
        return trivial_disk()
    return _assemble([phi_inverse_obj(c) for c in h.children])


def enumerate_disks(max_degree: int, max_fiber: int) -> list[Disk]:
    """All valid disks with bounded degree and fiber sizes."""
    return [trivial_disk()] + _nontrivial_disks(max_degree, max_fiber)


def _nontrivial_disks(max_degree: int, max_fiber: int) -> list[Disk]:
    if max_degree <= 0:
        return []
    interior_choices = _nontrivial_disks(max_degree - 1, max_fiber)
    out = []
    for k in range(2, max_fiber + 1):
        for combo in product(interior_choices, repeat=k - 2):
            out.append(
                _assemble([trivial_disk(), *combo, trivial_disk()])
            )
    return out


def enumerate_disk_morphisms(a: Disk, b: Disk) -> list[DiskMor]:
    """All disk morphisms ``a -> b``, deterministically ordered."""
    if b.is_trivial:
        span = max(a.tree.depth, 0) + 1
        collapse = TreeMap(
            a.tree,
            b.tree,
            tuple((0,) * a.tree.level_size(n) for n in range(span)),
        )
        return [DiskMor(a, b, collapse)]
    if a.is_trivial:
        return []
    k_dom, k_cod = a.tree.levels[1], b.tree.levels[1]
    out = []
    for root in enumerate_interval_maps(Ordinal(k_dom - 1), Ordinal(k_cod - 1)):
        sub_options = [
            enumerate_disk_morphisms(
                restrict_disk(a, i), restrict_disk(b, root(i))
            )
            for i in range(k_dom)
        ]
        if any(not opts for opts in sub_options):
            continue
        for subs in product(*sub_options):
            out.append(_assemble_mor(a, b, root, list(subs)))
    return out


def _assemble_mor(
    a: Disk, b: Disk, root: OrdMap, subs: list[DiskMor]
) -> DiskMor:
    """Glue per-subtree morphisms under a root-fiber map into one."""
    span = max(a.tree.depth, b.tree.depth) + 1
    level_maps: list[tuple[int, ...]] = [(0,)]
    if span > 1:
        level_maps.append(tuple(root.images))
    for lvl in range(2, span):
        row: list[int] = []
        for i, sub in enumerate(subs):
            dom_base = sum(
                s.dom.tree.level_size(lvl - 1) for s in subs[:i]
            )
            cod_base = sum(
                restrict_disk(b, j).tree.level_size(lvl - 1)
                for j in range(root(i))
            )
            local = sub.tree_map.at_level(lvl - 1)
            row.extend(
                local[x]
                + cod_base
                for x in range(sub.dom.tree.level_size(lvl - 1))
            )
            assert dom_base == len(row) - sub.dom.tree.level_size(lvl - 1)
        level_maps.append(tuple(row))
    return DiskMor(a, b, TreeMap(a.tree, b.tree, tuple(level_maps)))
