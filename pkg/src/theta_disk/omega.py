"""Free omega-categories on globular cardinals and on ordinal graphs.

Two models of the cells of a free omega-category are implemented and
compared:

* ``Cell``: an n-cell of the free omega-category on a globular cardinal
  ``base`` is a globular morphism from a ``shape`` cardinal into it,
  together with a nominal dimension (cells whose nominal dimension
  exceeds the shape dimension are iterated identities).  Sources and
  targets keep the least/greatest cell of each band; composition glues
  shapes along a shared boundary and re-canonicalizes.

* ``EnrichedCell``: an n-cell of the free omega-category on an ordinal
  graph is an object, an identity marker on an object, or a vertex span
  ``h < k`` with one (n-1)-cell chosen from the free omega-category of
  each edge along the span.

``comparison_L`` translates the first model into the second, one
dimension at a time, and is a bijection commuting with boundaries and
compositions.  ``psi_obj``/``psi_mor`` present the free omega-category
of an ordinal-flavor inductive tree and the action of a tree morphism
on generating cells; ``enumerate_omega_functors`` enumerates all
functors between presented free omega-categories by assigning
generators compatibly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from theta_disk.globular import (
    GlobCard,
    GlobMor,
    GlobSet,
    _linear_order,
    comp_subfunctor,
    compose_glob_mors,
    enumerate_glob_morphisms,
    restrict_gc,
    restrict_gc_mor,
    sub_globcard,
)
from theta_disk.itree import ORDINAL, ITreeMor, ITreeObj
from theta_disk.ograph import (
    OGraph,
    enumerate_ographs,
    gamma,
    upsilon,
)
from theta_disk.ordinal import wedge_map

# ---------------------------------------------------------------------------
# Cells over a globular cardinal


@dataclass(frozen=True)
class Cell:
    """A cell of the free omega-category on a globular cardinal."""

    base: GlobCard
    shape: GlobCard
    map: GlobMor
    nominal_dim: int

    def __post_init__(self) -> None:
        if not self.shape.gset.levels:
            raise ValueError("a cell has a non-empty shape")
        if self.map.dom != self.shape or self.map.cod != self.base:
            raise ValueError("the cell map runs from the shape to the base")
        if self.nominal_dim < self.shape.dim:
            raise ValueError(
                "nominal dimension is at least the shape dimension"
            )

    @property
    def is_proper(self) -> bool:
        return self.nominal_dim == self.shape.dim

    @property
    def is_degenerate(self) -> bool:
        return self.nominal_dim > self.shape.dim

    def to_dict(self) -> dict:
        return {
            "kind": "cell",
            "base": self.base.to_dict(),
            "shape": self.shape.to_dict(),
            "map": [list(m) for m in self.map.level_maps],
            "dim": self.nominal_dim,
        }

    @staticmethod
    def from_dict(data: dict) -> "Cell":
        base = GlobCard.from_dict(data["base"])
        shape = GlobCard.from_dict(data["shape"])
        level_maps = tuple(tuple(int(v) for v in m) for m in data["map"])
        return Cell(base, shape, GlobMor(shape, base, level_maps), int(data["dim"]))


def promote_cell(c: Cell, n: int) -> Cell:
    """The same underlying data at a higher nominal dimension."""
    if n < c.nominal_dim:
        raise ValueError("promotion does not lower the nominal dimension")
    return Cell(c.base, c.shape, c.map, n)


def identity_cell(c: Cell) -> Cell:
    """The identity on a cell: the same data one dimension up."""
    return promote_cell(c, c.nominal_dim + 1)


def enumerate_cells(x: GlobCard, n: int) -> list[Cell]:
    """All cells of nominal dimension ``n`` over the cardinal ``x``."""
    if n < 0:
        raise ValueError("cells live in non-negative dimensions")
    out = []
    for g in enumerate_ographs(x.size(), n):
        if g.is_empty:
            continue
        shape = _cardinal_of_graph(g)
        if len(shape.gset.levels) > len(x.gset.levels):
            continue
        if any(
            shape.gset.levels[k] > x.gset.levels[k]
            for k in range(len(shape.gset.levels))
        ):
            continue
        for f in enumerate_glob_morphisms(shape, x):
            out.append(Cell(x, shape, f, n))
    return out


def _cardinal_of_graph(g: OGraph) -> GlobCard:
    from theta_disk.ograph import gamma_prime

    return gamma_prime(g)


def _bands(shape: GlobCard, m: int) -> list[list[int]]:
    """Indices of level-``m`` cells grouped by source/target pair, in order."""
    size = shape.gset.levels[m]
    if m == 0:
        return [list(range(size))]
    groups: dict[tuple[int, int], list[int]] = {}
    for i in range(size):
        key = (shape.gset.src[m - 1][i], shape.gset.tgt[m - 1][i])
        groups.setdefault(key, []).append(i)
    return [groups[key] for key in sorted(groups)]


def _boundary_keep(shape: GlobCard, m: int, least: bool) -> list[list[int]]:
    keep: list[list[int]] = [
        list(range(size)) for size in shape.gset.levels[:m]
    ]
    keep.append(
        [band[0] if least else band[-1] for band in _bands(shape, m)]
    )
    return keep


def _boundary(c: Cell, m: int, least: bool) -> Cell:
    if not 0 <= m < c.nominal_dim:
        raise ValueError("boundary dimension out of range")
    if m >= c.shape.dim:
        return Cell(c.base, c.shape, c.map, m)
    sub, incl = sub_globcard(c.shape, _boundary_keep(c.shape, m, least))
    return Cell(c.base, sub, compose_glob_mors(c.map, incl), m)


def m_source(c: Cell, m: int) -> Cell:
    """The m-dimensional source: least cell of each band at level ``m``."""
    return _boundary(c, m, least=True)


def m_target(c: Cell, m: int) -> Cell:
    """The m-dimensional target: greatest cell of each band at level ``m``."""
    return _boundary(c, m, least=False)


def compose_cells(beta: Cell, alpha: Cell, m: int) -> Cell:
    """The composite ``beta after alpha`` along their m-boundary.

    The shapes are glued along the m-target of ``alpha``'s shape (equal,
    as a cell, to the m-source of ``beta``'s shape), re-canonicalized, and
    the maps are combined; the inclusions of both shapes into the glued
    shape are checked to recover the original maps.
    """
    if alpha.base != beta.base:
        raise ValueError("cells over different bases do not compose")
    if alpha.nominal_dim != beta.nominal_dim:
        raise ValueError("cells of different nominal dimensions do not compose")
    n = alpha.nominal_dim
    if not 0 <= m < n:
        raise ValueError("composition dimension out of range")
    if m_target(alpha, m) != m_source(beta, m):
        raise ValueError("cells are not composable at this dimension")
    y, z = alpha.shape, beta.shape
    keep_y = (
        _boundary_keep(y, m, least=False)
        if m < y.dim
        else [list(range(s)) for s in y.gset.levels]
    )
    keep_z = (
        _boundary_keep(z, m, least=True)
        if m < z.dim
        else [list(range(s)) for s in z.gset.levels]
    )
    # Position of each identified z-cell and its y-counterpart.
    glued: dict[tuple[int, int], tuple[int, int]] = {}
    for lvl in range(len(keep_z)):
        for pos, zi in enumerate(keep_z[lvl]):
            glued[(lvl, zi)] = (lvl, keep_y[lvl][pos])
    depth = max(len(y.gset.levels), len(z.gset.levels))
    y_sizes = [
        y.gset.levels[k] if k < len(y.gset.levels) else 0
        for k in range(depth)
    ]
    extra_z: list[list[int]] = [
        [
            i
            for i in range(
                z.gset.levels[k] if k < len(z.gset.levels) else 0
            )
            if (k, i) not in glued
        ]
        for k in range(depth)
    ]
    z_rank: dict[tuple[int, int], int] = {}
    for k, extras in enumerate(extra_z):
        for offset, i in enumerate(extras):
            z_rank[(k, i)] = y_sizes[k] + offset

    def raw_of_z(v: tuple[int, int]) -> tuple[int, int]:
        if v in glued:
            return glued[v]
        return (v[0], z_rank[v])

    levels = tuple(
        y_sizes[k] + len(extra_z[k]) for k in range(depth)
    )
    src: list[list[int]] = [[0] * size for size in levels[1:]]
    tgt: list[list[int]] = [[0] * size for size in levels[1:]]
    for k in range(1, len(y.gset.levels)):
        for i in range(y.gset.levels[k]):
            src[k - 1][i] = y.gset.src[k - 1][i]
            tgt[k - 1][i] = y.gset.tgt[k - 1][i]
    for k in range(1, len(z.gset.levels)):
        for i in extra_z[k]:
            raw = z_rank[(k, i)]
            src[k - 1][raw] = raw_of_z((k - 1, z.gset.src[k - 1][i]))[1]
            tgt[k - 1][raw] = raw_of_z((k - 1, z.gset.tgt[k - 1][i]))[1]
    raw = GlobSet(
        levels, tuple(tuple(r) for r in src), tuple(tuple(r) for r in tgt)
    )
    order = _linear_order(raw)
    if order is None:
        raise ValueError("glued shape is not a cardinal")
    rank: dict[tuple[int, int], int] = {}
    counters = [0] * len(levels)
    for k, i in order:
        rank[(k, i)] = counters[k]
        counters[k] += 1
    inverse: list[list[int]] = [[0] * size for size in levels]
    for (k, i), r in rank.items():
        inverse[k][r] = i
    glued_shape = GlobCard(
        GlobSet(
            levels,
            tuple(
                tuple(
                    rank[(k - 1, src[k - 1][inverse[k][ni]])]
                    for ni in range(levels[k])
                )
                for k in range(1, len(levels))
            ),
            tuple(
                tuple(
                    rank[(k - 1, tgt[k - 1][inverse[k][ni]])]
                    for ni in range(levels[k])
                )
                for k in range(1, len(levels))
            ),
        )
    )
    incl_y = GlobMor(
        y,
        glued_shape,
        tuple(
            tuple(rank[(k, i)] for i in range(y.gset.levels[k]))
            for k in range(len(y.gset.levels))
        ),
    )
    incl_z = GlobMor(
        z,
        glued_shape,
        tuple(
            tuple(
                rank[raw_of_z((k, i))] for i in range(z.gset.levels[k])
            )
            for k in range(len(z.gset.levels))
        ),
    )
    combined: list[list[int]] = [[0] * size for size in levels]
    for k in range(len(y.gset.levels)):
        for i in range(y.gset.levels[k]):
            combined[k][rank[(k, i)]] = alpha.map.level_maps[k][i]
    for k in range(len(z.gset.levels)):
        for i in range(z.gset.levels[k]):
            combined[k][rank[raw_of_z((k, i))]] = beta.map.level_maps[k][i]
    glued_map = GlobMor(
        glued_shape, alpha.base, tuple(tuple(r) for r in combined)
    )
    if compose_glob_mors(glued_map, incl_y) != alpha.map:
        raise AssertionError("glued map does not restrict to the first cell")
    if compose_glob_mors(glued_map, incl_z) != beta.map:
        raise AssertionError("glued map does not restrict to the second cell")
    return Cell(alpha.base, glued_shape, glued_map, n)


def is_indecomposable(c: Cell) -> bool:
    """Whether the cell is proper with a globe shape."""
    n = c.nominal_dim
    return c.is_proper and c.shape.gset.levels == (2,) * n + (1,)


def is_m_indecomposable(c: Cell, m: int) -> bool:
    """Whether no band at level ``m`` has more than two cells (more than
    two object cells for ``m = 0``)."""
    if m >= len(c.shape.gset.levels):
        return True
    if m == 0:
        return c.shape.gset.levels[0] <= 2
    return all(len(band) <= 2 for band in _bands(c.shape, m))


def zero_decompose(c: Cell) -> list[Cell]:
    """The column cells between consecutive object cells of the shape."""
    if c.nominal_dim < 1:
        raise ValueError("only positive-dimensional cells decompose")
    p = c.shape.gset.levels[0]
    if p <= 1:
        return [c]
    parts = []
    for i in range(p - 1):
        sub, incl = comp_subfunctor(c.shape, (0, i), (0, i + 1))
        parts.append(
            Cell(
                c.base,
                sub,
                compose_glob_mors(c.map, incl),
                c.nominal_dim,
            )
        )
    return parts


# ---------------------------------------------------------------------------
# Enriched cells over an ordinal graph


@dataclass(frozen=True, order=True)
class EnrichedCell:
    """A cell of the free omega-category on an ordinal graph.

    ``h == k`` with no parts is an object (dimension 0) or an identity
    marker on the object (higher dimension); otherwise ``parts`` holds
    one cell of one dimension less per edge along the span.
    """

    dim: int
    h: int
    k: int
    parts: tuple["EnrichedCell", ...] = ()

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("dimension is non-negative")
        if self.h > self.k:
            raise ValueError("spans run forward")
        if self.h == self.k:
            if self.parts:
                raise ValueError("markers carry no parts")
        else:
            if self.dim == 0:
                raise ValueError("objects have no extent")
            if len(self.parts) != self.k - self.h:
                raise ValueError("one part per edge along the span")
            if any(p.dim != self.dim - 1 for p in self.parts):
                raise ValueError("parts live one dimension down")

    def to_dict(self) -> dict:
        return {
            "kind": "enriched-cell",
            "dim": self.dim,
            "h": self.h,
            "k": self.k,
            "parts": [p.to_dict() for p in self.parts],
        }

    @staticmethod
    def from_dict(data: dict) -> "EnrichedCell":
        return EnrichedCell(
            int(data["dim"]),
            int(data["h"]),
            int(data["k"]),
            tuple(EnrichedCell.from_dict(p) for p in data["parts"]),
        )


@dataclass(frozen=True, order=True)
class TerminalCell:
    """The unique cell per dimension of the terminal omega-category."""

    dim: int


def free_on_ograph_cells(g: OGraph, n: int) -> list[EnrichedCell]:
    """All cells of nominal dimension ``n`` of the free omega-category on
    an ordinal graph."""
    if n < 0:
        raise ValueError("cells live in non-negative dimensions")
    if n == 0:
        return [EnrichedCell(0, i, i) for i in range(g.vertices)]
    out = [EnrichedCell(n, h, h) for h in range(g.vertices)]
    for h in range(g.vertices):
        for k in range(h + 1, g.vertices):
            options = [
                free_on_ograph_cells(g.edges[j], n - 1) for j in range(h, k)
            ]
            for combo in product(*options):
                out.append(EnrichedCell(n, h, k, combo))
    return out


def enriched_m_source(c: EnrichedCell, m: int) -> EnrichedCell:
    if not 0 <= m < c.dim:
        raise ValueError("boundary dimension out of range")
    if m == 0:
        return EnrichedCell(0, c.h, c.h)
    return EnrichedCell(
        m, c.h, c.k, tuple(enriched_m_source(p, m - 1) for p in c.parts)
    )


def enriched_m_target(c: EnrichedCell, m: int) -> EnrichedCell:
    if not 0 <= m < c.dim:
        raise ValueError("boundary dimension out of range")
    if m == 0:
        return EnrichedCell(0, c.k, c.k)
    return EnrichedCell(
        m, c.h, c.k, tuple(enriched_m_target(p, m - 1) for p in c.parts)
    )


def compose_enriched(
    beta: EnrichedCell, alpha: EnrichedCell, m: int
) -> EnrichedCell:
    """The composite ``beta after alpha`` along dimension ``m``."""
    if alpha.dim != beta.dim:
        raise ValueError("cells of different dimensions do not compose")
    n = alpha.dim
    if not 0 <= m < n:
        raise ValueError("composition dimension out of range")
    if m == 0:
        if alpha.k != beta.h:
            raise ValueError("spans do not meet")
        return EnrichedCell(n, alpha.h, beta.k, alpha.parts + beta.parts)
    if alpha.h != beta.h or alpha.k != beta.k:
        raise ValueError("spans differ")
    return EnrichedCell(
        n,
        alpha.h,
        alpha.k,
        tuple(
            compose_enriched(bp, ap, m - 1)
            for bp, ap in zip(beta.parts, alpha.parts)
        ),
    )


def enriched_identity(c: EnrichedCell) -> EnrichedCell:
    """The identity on a cell, one dimension up."""
    return EnrichedCell(
        c.dim + 1, c.h, c.k, tuple(enriched_identity(p) for p in c.parts)
    )


def demote_enriched(c: EnrichedCell) -> EnrichedCell | None:
    """The cell this one is the identity of, or None if it is not one."""
    if c.dim == 0:
        return None
    if c.h == c.k:
        return EnrichedCell(c.dim - 1, c.h, c.k)
    if c.dim == 1:
        return None
    demoted = tuple(demote_enriched(p) for p in c.parts)
    if any(p is None for p in demoted):
        return None
    return EnrichedCell(c.dim - 1, c.h, c.k, demoted)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# The comparison between the two models


def comparison_L(c: Cell) -> EnrichedCell:
    """Translate a cell over a cardinal into an enriched cell over its
    ordinal graph, by restricting between consecutive object cells."""
    f = c.map
    if c.nominal_dim == 0:
        v = f.level_maps[0][0]
        return EnrichedCell(0, v, v)
    h = f.level_maps[0][0]
    k = f.level_maps[0][-1]
    parts = []
    for i in range(1, c.shape.gset.levels[0]):
        shape_r = restrict_gc(c.shape, (0, i - 1), (0, i))
        base_r = restrict_gc(c.base, (0, h + i - 1), (0, h + i))
        map_r = restrict_gc_mor(f, (0, i - 1), (0, i))
        parts.append(
            comparison_L(Cell(base_r, shape_r, map_r, c.nominal_dim - 1))
        )
    return EnrichedCell(c.nominal_dim, h, k, tuple(parts))


# ---------------------------------------------------------------------------
# Presentations and functors


@dataclass(frozen=True)
class OmegaPresentation:
    """A finitely presented free omega-category."""

    tag: str
    cardinal: GlobCard | None = None
    graph: OGraph | None = None

    def __post_init__(self) -> None:
        if self.tag not in {"empty", "terminal", "free_globcard", "free_ograph"}:
            raise ValueError(f"unknown presentation tag {self.tag!r}")
        if (self.tag == "free_globcard") != (self.cardinal is not None):
            raise ValueError("cardinal presentations carry exactly a cardinal")
        if (self.tag == "free_ograph") != (self.graph is not None):
            raise ValueError("graph presentations carry exactly a graph")

    def to_dict(self) -> dict:
        base: dict | None = None
        if self.cardinal is not None:
            base = self.cardinal.to_dict()
        if self.graph is not None:
            base = self.graph.to_dict()
        return {"kind": "omega-presentation", "tag": self.tag, "base": base}

    @staticmethod
    def from_dict(data: dict) -> "OmegaPresentation":
        tag = data["tag"]
        if tag == "free_globcard":
            return OmegaPresentation(tag, cardinal=GlobCard.from_dict(data["base"]))
        if tag == "free_ograph":
            return OmegaPresentation(tag, graph=OGraph.from_dict(data["base"]))
        return OmegaPresentation(tag)


EMPTY_PRESENTATION = OmegaPresentation("empty")
TERMINAL_PRESENTATION = OmegaPresentation("terminal")


def free_on_cardinal(x: GlobCard) -> OmegaPresentation:
    return OmegaPresentation("free_globcard", cardinal=x)


def free_on_graph(g: OGraph) -> OmegaPresentation:
    return OmegaPresentation("free_ograph", graph=g)


def _graph_of(p: OmegaPresentation) -> OGraph | None:
    """The generating ordinal graph of a free presentation, if any."""
    if p.tag == "free_ograph":
        return p.graph
    if p.tag == "free_globcard":
        assert p.cardinal is not None
        return gamma(p.cardinal)
    return None


def presentation_cells(p: OmegaPresentation, n: int):
    """The cells of nominal dimension ``n`` of a presented omega-category."""
    if p.tag == "empty":
        return []
    if p.tag == "terminal":
        return [TerminalCell(n)]
    g = _graph_of(p)
    assert g is not None
    return free_on_ograph_cells(g, n)


def enriched_generators(g: OGraph, n: int) -> list[EnrichedCell]:
    """The generating (indecomposable proper) cells at dimension ``n``."""
    if n == 0:
        return [EnrichedCell(0, i, i) for i in range(g.vertices)]
    return [
        EnrichedCell(n, j, j + 1, (y,))
        for j in range(max(g.vertices - 1, 0))
        for y in enriched_generators(g.edges[j], n - 1)
    ]


def all_enriched_generators(g: OGraph) -> list[EnrichedCell]:
    return [
        gen
        for n in range(g.dim + 1)
        for gen in enriched_generators(g, n)
    ]


@dataclass(frozen=True)
class GeneratorAction:
    """An omega-functor between presentations, by its generator images."""

    dom: OmegaPresentation
    cod: OmegaPresentation
    assignments: tuple[tuple[EnrichedCell, object], ...]

    def image_of(self, gen: EnrichedCell):
        for g, img in self.assignments:
            if g == gen:
                return img
        raise KeyError(f"no assignment for generator {gen}")


def identity_action(p: OmegaPresentation) -> GeneratorAction:
    g = _graph_of(p)
    if g is None and p.tag != "empty":
        raise ValueError("identity actions exist for free presentations")
    gens = all_enriched_generators(g) if g is not None else []
    return GeneratorAction(
        p, p, tuple(sorted((gen, gen) for gen in gens))
    )


class _Evaluator:
    """Evaluates a generator action on arbitrary enriched cells."""

    def __init__(self, action: GeneratorAction):
        self.action = action
        self.table = dict(action.assignments)
        self.terminal = action.cod.tag == "terminal"
        self.cache: dict[EnrichedCell, object] = {}

    def __call__(self, c: EnrichedCell):
        if c in self.cache:
            return self.cache[c]
        result = self._eval(c)
        self.cache[c] = result
        return result

    def _identity(self, img):
        if self.terminal:
            return TerminalCell(img.dim + 1)
        return enriched_identity(img)

    def _compose(self, b, a, m):
        if self.terminal:
            return TerminalCell(a.dim)
        return compose_enriched(b, a, m)

    def _eval(self, c: EnrichedCell):
        if c in self.table:
            return self.table[c]
        if c.dim == 0:
            raise KeyError(f"no assignment for object {c}")
        if c.h == c.k:
            obj_img = self(EnrichedCell(0, c.h, c.h))
            if self.terminal:
                return TerminalCell(c.dim)
            result = obj_img
            for _ in range(c.dim):
                result = enriched_identity(result)
            return result
        if c.k - c.h >= 2:
            columns = [
                EnrichedCell(c.dim, c.h + i, c.h + i + 1, (c.parts[i],))
                for i in range(c.k - c.h)
            ]
            result = self(columns[0])
            for col in columns[1:]:
                result = self._compose(self(col), result, 0)
            return result
        part = c.parts[0]
        demoted = demote_enriched(c)
        if demoted is not None:
            return self._identity(self(demoted))
        split = _find_split(part)
        if split is None:
            raise KeyError(f"no assignment for generator {c}")
        m, first, second = split
        lifted_first = EnrichedCell(c.dim, c.h, c.k, (first,))
        lifted_second = EnrichedCell(c.dim, c.h, c.k, (second,))
        return self._compose(self(lifted_second), self(lifted_first), m + 1)


def _find_split(y: EnrichedCell):
    """A non-trivial factorization ``y = second after first`` along some
    dimension, or None if ``y`` is an object, marker, or single-edged."""
    if y.dim == 0 or y.h == y.k:
        return None
    if y.k - y.h >= 2:
        first = EnrichedCell(y.dim, y.h, y.h + 1, (y.parts[0],))
        second = EnrichedCell(y.dim, y.h + 1, y.k, y.parts[1:])
        return (0, first, second)
    sub = _find_split(y.parts[0])
    if sub is None:
        return None
    m, first, second = sub
    return (
        m + 1,
        EnrichedCell(y.dim, y.h, y.k, (first,)),
        EnrichedCell(y.dim, y.h, y.k, (second,)),
    )


def eval_functor(action: GeneratorAction, c: EnrichedCell):
    """Evaluate the functor presented by an action on any cell."""
    return _Evaluator(action)(c)


def compose_actions(
    second: GeneratorAction, first: GeneratorAction
) -> GeneratorAction:
    if first.cod != second.dom:
        raise ValueError("actions do not compose")
    evaluate = _Evaluator(second)
    return GeneratorAction(
        first.dom,
        second.cod,
        tuple(
            sorted((gen, evaluate(img)) for gen, img in first.assignments)
        ),
    )


def enumerate_omega_functors(
    a: OmegaPresentation, b: OmegaPresentation, depth: int | None = None
) -> list[GeneratorAction]:
    """All omega-functors between presented free omega-categories."""
    if a.tag == "empty":
        return [GeneratorAction(a, b, ())]
    g = _graph_of(a)
    if g is None:
        raise ValueError("functors are enumerated out of free presentations")
    max_dim = g.dim if depth is None else min(depth, g.dim)
    object_candidates = presentation_cells(b, 0)
    partials: list[dict[EnrichedCell, object]] = []
    objects = enriched_generators(g, 0)
    for combo in product(object_candidates, repeat=len(objects)):
        partials.append(dict(zip(objects, combo)))
    for n in range(1, max_dim + 1):
        gens = enriched_generators(g, n)
        candidates = presentation_cells(b, n)
        extended = []
        for partial in partials:
            action = GeneratorAction(a, b, tuple(partial.items()))
            evaluate = _Evaluator(action)
            options = []
            for gen in gens:
                want_s = evaluate(enriched_m_source(gen, n - 1))
                want_t = evaluate(enriched_m_target(gen, n - 1))
                matches = [
                    cand
                    for cand in candidates
                    if _cand_source(cand, n - 1) == want_s
                    and _cand_target(cand, n - 1) == want_t
                ]
                options.append(matches)
            if any(not o for o in options):
                continue
            for combo in product(*options):
                new = dict(partial)
                new.update(zip(gens, combo))
                extended.append(new)
        partials = extended
    return [
        GeneratorAction(a, b, tuple(sorted(partial.items())))
        for partial in partials
    ]


def _cand_source(cand, m: int):
    if isinstance(cand, TerminalCell):
        return TerminalCell(m)
    return enriched_m_source(cand, m)


def _cand_target(cand, m: int):
    if isinstance(cand, TerminalCell):
        return TerminalCell(m)
    return enriched_m_target(cand, m)


def hom_graph_count(g: OGraph, h: OGraph) -> int:
    """The number of ordinal-graph maps from ``g`` into the underlying
    graph of the free omega-category on ``h``(the adjunction count)."""
    if g.is_empty:
        return 1
    total = 0
    for objmap in product(range(h.vertices), repeat=g.vertices):
        term = 1
        for i, e in enumerate(g.edges):
            term *= _edge_count(e, h, objmap[i], objmap[i + 1])
            if term == 0:
                break
        total += term
    return total


def _edge_count(e: OGraph, h: OGraph, u: int, v: int) -> int:
    if u > v:
        return 0
    if u == v:
        return 1
    total = 1
    for j in range(u + 1, v + 1):
        total *= hom_graph_count(e, h.edges[j - 1])
    return total


# ---------------------------------------------------------------------------
# The functor from ordinal-flavor inductive trees


def psi_obj(h: ITreeObj) -> OmegaPresentation:
    """Present the free omega-category of an ordinal-flavor tree."""
    if h.flavor != ORDINAL:
        raise ValueError("presentations are built from ordinal-flavor trees")
    if h.is_trivial:
        return EMPTY_PRESENTATION
    return free_on_graph(upsilon(h))


def psi_apply(g: ITreeMor, c: EnrichedCell) -> EnrichedCell:
    """Apply the functor of a tree morphism to an enriched cell."""
    if g.root_map is None:
        raise ValueError("the empty omega-category has no cells")
    root = g.root_map
    h_img = root(c.h)
    k_img = root(c.k)
    if c.h == c.k:
        return EnrichedCell(c.dim, h_img, h_img)
    back = wedge_map(root)
    parts = []
    for j in range(h_img + 1, k_img + 1):
        i = back(j)
        parts.append(psi_apply(g.children[j], c.parts[i - c.h - 1]))
    return EnrichedCell(c.dim, h_img, k_img, tuple(parts))


def psi_mor(g: ITreeMor) -> GeneratorAction:
    """The action of a tree morphism's functor on generating cells."""
    dom_p = psi_obj(g.dom)
    cod_p = psi_obj(g.cod)
    if g.dom.is_trivial:
        return GeneratorAction(dom_p, cod_p, ())
    graph = upsilon(g.dom)
    return GeneratorAction(
        dom_p,
        cod_p,
        tuple(
            sorted(
                (gen, psi_apply(g, gen))
                for gen in all_enriched_generators(graph)
            )
        ),
    )
