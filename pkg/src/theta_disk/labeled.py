"""Trees labeled by finite linear orders, with fiber constraints and dualities.

A labeled tree pairs a stored forest with one label per vertex, drawn
from the interval world (labels ``[m]`` with ``m >= 0``, components
preserving both endpoints) or from the ordinal world (labels down to
``[-1]``, arbitrary monotone components).  Every label prescribes a
number of child slots -- ``m + 1`` for an interval label ``[m]``,
``m + 2`` for an ordinal label -- and a constrained tree realizes that
prescription exactly, fiber by fiber, in sibling order.  Cropped trees
additionally end every branch at single-slot labels, placed exactly at
the two outer positions of each fiber.

Morphisms follow the flavor: interval-labeled morphisms carry a forward
tree map with one endpoint-preserving component per domain vertex, while
ordinal-labeled morphisms are stored as op-morphisms -- the tree map runs
from the codomain's tree to the domain's, with one monotone component
per codomain vertex.  Relabeling through the ordinal dualities swaps the
two flavors contravariantly, and cropped single-root trees convert back
and forth with the inductive tree categories vertex for vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from theta_disk.forest import (
    LevelTree,
    POINT_TREE,
    TreeMap,
    Vertex,
    compose_tree_maps,
    coproduct,
    identity_tree_map,
    make_level_tree,
    restrict,
    restrict_map,
    suspend,
)
from theta_disk.itree import (
    INTERVAL,
    ORDINAL,
    ITreeMor,
    ITreeObj,
    enumerate_objects,
    marker,
    trivial_obj,
    trivial_root,
)
from theta_disk.ordinal import (
    OrdMap,
    Ordinal,
    compose as compose_ord,
    enumerate_interval_maps,
    enumerate_ord_maps,
    identity as identity_ord,
    vee_map,
    vee_obj,
    wedge_map,
    wedge_obj,
)


def label_slots(flavor: str, label: Ordinal) -> int:
    """Number of child slots a vertex label prescribes."""
    if flavor == INTERVAL:
        return label.size
    if flavor == ORDINAL:
        return label.size + 1
    raise ValueError(f"unknown flavor {flavor!r}")


@dataclass(frozen=True, eq=False)
class LabeledTree:
    """A stored forest with one interval- or ordinal-label per vertex.

    Vertices beyond the stored depth continue as single chains and

    implicitly carry the single-slot label of the flavor.
    """

    flavor: str
    tree: LevelTree
    labels: tuple[tuple[Ordinal, ...], ...]

    def __post_init__(self) -> None:
        if self.flavor not in (INTERVAL, ORDINAL):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if len(self.labels) != len(self.tree.levels):
            raise ValueError("one label row per stored level is required")
        for n, row in enumerate(self.labels):
            if len(row) != self.tree.levels[n]:
                raise ValueError(f"label row {n} has the wrong arity")
        if self.flavor == INTERVAL and any(
            lab.n < 0 for row in self.labels for lab in row
        ):
            raise ValueError("interval labels must be at least [0]")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledTree):
            return NotImplemented
        return (
            self.flavor == other.flavor
            and self.tree == other.tree
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.flavor, self.tree, self.labels))

    @property
    def depth(self) -> int:
        return self.tree.depth

    @property
    def is_trivial(self) -> bool:
        """A single root carrying the single-slot label and nothing below."""
        return self.tree == POINT_TREE and self.labels[0][0] == trivial_root(
            self.flavor
        )

    def label(self, v: Vertex) -> Ordinal:
        """Label of vertex ``v``, following the implicit continuation."""
        n, i = v
        if n < 0 or not 0 <= i < self.tree.level_size(n):
            raise ValueError(f"unknown vertex {v}")
        if n <= self.depth:
            return self.labels[n][i]
        return trivial_root(self.flavor)

    def to_dict(self) -> dict:
        return {
            "kind": "labeled-tree",
            "flavor": self.flavor,
            "levels": list(self.tree.levels),
            "parents": [list(p) for p in self.tree.parents],
            "labels": [[lab.n for lab in row] for row in self.labels],
        }

    @staticmethod
    def from_dict(data: dict) -> "LabeledTree":
        tree = make_level_tree(
            tuple(int(s) for s in data["levels"]),
            tuple(tuple(int(p) for p in pmap) for pmap in data["parents"]),
        )
        rows = tuple(
            tuple(Ordinal(int(n)) for n in row) for row in data["labels"]
        )
        return LabeledTree(data["flavor"], tree, rows[: tree.depth + 1])


@dataclass(frozen=True, eq=False)
class ConstrainedTree(LabeledTree):
    """A labeled forest whose fibers realize the labels' slot counts."""

    def __post_init__(self) -> None:
        super().__post_init__()
        problems = validate_constrained(self)
        if problems:
            raise ValueError(problems[0])


@dataclass(frozen=True, eq=False)
class CroppedTree(ConstrainedTree):
    """A constrained forest ending every branch at outer single-slot labels."""

    def __post_init__(self) -> None:
        LabeledTree.__post_init__(self)
        problems = validate_cropped(self)
        if problems:
            raise ValueError(problems[0])


def trivial_labeled(flavor: str) -> CroppedTree:
    """The single-vertex tree carrying the flavor's single-slot label."""
    return CroppedTree(flavor, POINT_TREE, ((trivial_root(flavor),),))


def validate_constrained(t: LabeledTree) -> list[str]:
    """Diagnostics for the fiber-realization rules; empty means valid."""
    problems: list[str] = []
    for step, row in enumerate(t.tree.parents):
        if any(row[q] > row[q + 1] for q in range(len(row) - 1)):
            problems.append(
                f"parents of level {step + 1} are not sorted; fibers must be "
                "stored contiguously in slot order"
            )
    for n in range(t.depth):
        for i, lab in enumerate(t.labels[n]):
            want = label_slots(t.flavor, lab)
            got = len(t.tree.children(n, i))
            if want != got:
                problems.append(
                    f"vertex ({n}, {i}) has label {lab} prescribing {want} "
                    f"children but its fiber has {got}"
                )
    return problems


def validate_cropped(t: LabeledTree) -> list[str]:
    """Diagnostics for the branch-ending rules on top of the fiber law."""
    problems = validate_constrained(t)
    single = trivial_root(t.flavor)
    d = t.depth
    for i, lab in enumerate(t.labels[d]):
        if lab != single:
            problems.append(
                f"vertex ({d}, {i}) at the stored depth must carry the "
                f"single-slot label {single}, got {lab}"
            )
    for n in range(d):
        for i in range(t.tree.levels[n]):
            kids = t.tree.children(n, i)
            for pos, j in enumerate(kids):
                outer = pos == 0 or pos == len(kids) - 1
                if outer != (t.labels[n + 1][j] == single):
                    problems.append(
                        f"vertex ({n + 1}, {j}): single-slot labels must sit "
                        "exactly at the outer positions of a fiber"
                    )
    return problems


def _subtree_rows(tree: LevelTree, x: Vertex) -> list[list[int]]:
    """Per-level original indices of the stored subtree over ``x``."""
    n, i = x
    if n < 0 or not 0 <= i < tree.level_size(n):
        raise ValueError(f"unknown vertex {x}")
    rows = [[i]]
    for lvl in range(n + 1, tree.depth + 1):
        members = set(rows[-1])
        rows.append(
            [j for j, p in enumerate(tree.parents[lvl - 1]) if p in members]
        )
    return rows


def restrict_labeled(t: LabeledTree, x: Vertex) -> LabeledTree:
    """The labeled subtree over vertex ``x``, re-truncated at its degree."""
    shape = restrict(t.tree, x)
    rows = _subtree_rows(t.tree, x)
    n = x[0]
    labels = tuple(
        tuple(t.label((n + k, j)) for j in rows[k])
        for k in range(shape.depth + 1)
    )
    return LabeledTree(t.flavor, shape, labels)


def coproduct_labeled(
    flavor: str, trees: list[LabeledTree]
) -> LabeledTree:
    """Disjoint union of labeled forests, level-wise, in list order."""
    for t in trees:
        if t.flavor != flavor:
            raise ValueError("all summands must share the flavor")
    shape = coproduct([t.tree for t in trees])
    labels = tuple(
        tuple(
            t.label((n, i))
            for t in trees
            for i in range(t.tree.level_size(n))
        )
        for n in range(shape.depth + 1)
    )
    return LabeledTree(flavor, shape, labels)


def suspend_labeled(forest: list[LabeledTree], c: Ordinal) -> LabeledTree:
    """Put a fresh ``c``-labeled root over the trees, one per slot of ``c``."""
    if not forest:
        raise ValueError("suspension requires at least one summand")
    flavor = forest[0].flavor
    if len(forest) != label_slots(flavor, c):
        raise ValueError(
            f"label {c} prescribes {label_slots(flavor, c)} children, "
            f"got {len(forest)} trees"
        )
    base = coproduct_labeled(flavor, forest)
    shape = suspend(base.tree)
    stacked = ((c,),) + base.labels
    return LabeledTree(flavor, shape, stacked[: shape.depth + 1])


@dataclass(frozen=True)
class LabeledTreeMor:
    """A fiber-compatible morphism between cropped labeled forests.

    Interval flavor: ``tree_map`` runs from the domain's tree to the
    codomain's and ``alphas[n][i]`` is an endpoint-preserving component
    from the domain label to the codomain label at the image vertex.
    Ordinal flavor (op-morphisms): ``tree_map`` runs from the codomain's
    tree to the domain's and ``alphas[n][x]`` is a monotone component
    from the domain label at the image to the codomain label at ``x``.
    In both flavors each component determines where the children of its
    vertex land, slot by slot, and the tree map must agree.
    """

    dom: LabeledTree
    cod: LabeledTree
    tree_map: TreeMap
    alphas: tuple[tuple[OrdMap, ...], ...]

    def __post_init__(self) -> None:
        if self.dom.flavor != self.cod.flavor:
            raise ValueError("morphism ends must share a flavor")
        for end, name in ((self.dom, "domain"), (self.cod, "codomain")):
            problems = validate_cropped(end)
            if problems:
                raise ValueError(f"{name} is not cropped: {problems[0]}")
        if self.flavor == INTERVAL:
            index_side, value_side = self.dom, self.cod
            if self.tree_map.dom != self.dom.tree:
                raise ValueError("tree map must start at the domain's tree")
            if self.tree_map.cod != self.cod.tree:
                raise ValueError("tree map must land in the codomain's tree")
        else:
            index_side, value_side = self.cod, self.dom
            if self.tree_map.dom != self.cod.tree:
                raise ValueError(
                    "op-morphism tree map must start at the codomain's tree"
                )
            if self.tree_map.cod != self.dom.tree:
                raise ValueError(
                    "op-morphism tree map must land in the domain's tree"
                )
        if len(self.alphas) != index_side.depth + 1:
            raise ValueError(
                f"expected {index_side.depth + 1} component rows, "
                f"got {len(self.alphas)}"
            )
        for n, row in enumerate(self.alphas):
            if len(row) != index_side.tree.levels[n]:
                raise ValueError(f"component row {n} has the wrong arity")
            for i, alpha in enumerate(row):
                here = index_side.labels[n][i]
                there = value_side.label(self.tree_map((n, i)))
                if self.flavor == INTERVAL:
                    want_dom, want_cod = here, there
                else:
                    want_dom, want_cod = there, here
                if alpha.dom != want_dom or alpha.cod != want_cod:
                    raise ValueError(
                        f"component at vertex ({n}, {i}) must run "
                        f"{want_dom} -> {want_cod}, got {alpha.dom} -> "
                        f"{alpha.cod}"
                    )
                if self.flavor == INTERVAL and not alpha.is_interval:
                    raise ValueError(
                        f"component at vertex ({n}, {i}) must preserve "
                        "both endpoints"
                    )
        for n in range(index_side.depth):
            for i in range(index_side.tree.levels[n]):
                kids_here = index_side.tree.children(n, i)
                target = self.tree_map.at_level(n)[i]
                kids_there = value_side.tree.children(n, target)
                alpha = self.alphas[n][i]
                slot_map = alpha if self.flavor == INTERVAL else wedge_map(alpha)
                for pos, j in enumerate(kids_here):
                    if self.tree_map.at_level(n + 1)[j] != kids_there[
                        slot_map(pos)
                    ]:
                        raise ValueError(
                            f"children of vertex ({n}, {i}) do not land in "
                            "the slots its component selects"
                        )

    @property
    def flavor(self) -> str:
        return self.dom.flavor

    def to_dict(self) -> dict:
        return {
            "kind": "labeled-tree-mor",
            "direction": "forward" if self.flavor == INTERVAL else "op",
            "dom": self.dom.to_dict(),
            "cod": self.cod.to_dict(),
            "level_maps": [list(row) for row in self.tree_map.level_maps],
            "alphas": [[a.to_dict() for a in row] for row in self.alphas],
        }

    @staticmethod
    def from_dict(data: dict) -> "LabeledTreeMor":
        dom = LabeledTree.from_dict(data["dom"])
        cod = LabeledTree.from_dict(data["cod"])
        direction = data["direction"]
        if direction not in ("forward", "op"):
            raise ValueError(f"unknown direction {direction!r}")
        if (direction == "forward") != (dom.flavor == INTERVAL):
            raise ValueError(
                f"direction {direction!r} does not match flavor {dom.flavor!r}"
            )
        ends = (dom.tree, cod.tree) if direction == "forward" else (
            cod.tree,
            dom.tree,
        )
        rows = tuple(tuple(int(v) for v in row) for row in data["level_maps"])
        alphas = tuple(
            tuple(OrdMap.from_dict(a) for a in row) for row in data["alphas"]
        )
        return LabeledTreeMor(dom, cod, TreeMap(*ends, rows), alphas)


def _alpha_at(m: LabeledTreeMor, level: int, i: int) -> OrdMap:
    """Component at a vertex, following the implicit chain continuation."""
    if level < len(m.alphas):
        return m.alphas[level][i]
    return identity_ord(trivial_root(m.flavor))


def identity_labeled(t: LabeledTree) -> LabeledTreeMor:
    return LabeledTreeMor(
        t,
        t,
        identity_tree_map(t.tree),
        tuple(tuple(identity_ord(lab) for lab in row) for row in t.labels),
    )


def compose_labeled(g: LabeledTreeMor, f: LabeledTreeMor) -> LabeledTreeMor:
    """The composite ``g after f``."""
    if f.flavor != g.flavor:
        raise ValueError("morphisms must share a flavor")
    if f.cod != g.dom:
        raise ValueError("labeled morphisms do not compose")
    if f.flavor == INTERVAL:
        tree_map = compose_tree_maps(g.tree_map, f.tree_map)
        alphas = tuple(
            tuple(
                compose_ord(
                    _alpha_at(g, n, f.tree_map.at_level(n)[i]), f.alphas[n][i]
                )
                for i in range(len(f.alphas[n]))
            )
            for n in range(len(f.alphas))
        )
        return LabeledTreeMor(f.dom, g.cod, tree_map, alphas)
    tree_map = compose_tree_maps(f.tree_map, g.tree_map)
    alphas = tuple(
        tuple(
            compose_ord(
                g.alphas[n][x], _alpha_at(f, n, g.tree_map.at_level(n)[x])
            )
            for x in range(len(g.alphas[n]))
        )
        for n in range(len(g.alphas))
    )
    return LabeledTreeMor(f.dom, g.cod, tree_map, alphas)


def restrict_labeled_mor(m: LabeledTreeMor, x: Vertex) -> LabeledTreeMor:
    """The morphism induced between the subtrees over ``x`` and its image.

    ``x`` addresses the side that indexes the components: the domain for
    the interval flavor, the codomain for the ordinal flavor.
    """
    index_tree = m.dom if m.flavor == INTERVAL else m.cod
    other = m.cod if m.flavor == INTERVAL else m.dom
    sub_here = restrict_labeled(index_tree, x)
    sub_there = restrict_labeled(other, m.tree_map(x))
    sub_tm = restrict_map(m.tree_map, x)
    rows = _subtree_rows(index_tree.tree, x)
    n = x[0]
    alphas = tuple(
        tuple(_alpha_at(m, n + k, j) for j in rows[k])
        for k in range(sub_here.depth + 1)
    )
    if m.flavor == INTERVAL:
        return LabeledTreeMor(sub_here, sub_there, sub_tm, alphas)
    return LabeledTreeMor(sub_there, sub_here, sub_tm, alphas)


def con_dualize(t: LabeledTree) -> CroppedTree:
    """Relabel a cropped forest through the duality, swapping the flavor."""
    problems = validate_cropped(t)
    if problems:
        raise ValueError(problems[0])
    if t.flavor == INTERVAL:
        flavor, relabel = ORDINAL, vee_obj
    else:
        flavor, relabel = INTERVAL, wedge_obj
    labels = tuple(tuple(relabel(lab) for lab in row) for row in t.labels)
    return CroppedTree(flavor, t.tree, labels)


def con_dualize_mor(m: LabeledTreeMor) -> LabeledTreeMor:
    """The dual of a labeled morphism; contravariant, same tree map."""
    recomponent = vee_map if m.flavor == INTERVAL else wedge_map
    alphas = tuple(
        tuple(recomponent(a) for a in row) for row in m.alphas
    )
    return LabeledTreeMor(
        con_dualize(m.cod), con_dualize(m.dom), m.tree_map, alphas
    )


def _require_cropped_tree(t: LabeledTree, flavor: str) -> None:
    if t.flavor != flavor:
        raise ValueError(f"expected {flavor}-flavor labels, got {t.flavor}")
    problems = validate_cropped(t)
    if problems:
        raise ValueError(problems[0])
    if not t.tree.is_tree:
        raise ValueError("a single-root tree is required")


def _xi_obj(t: LabeledTree) -> ITreeObj:
    if t.depth == 0:
        return trivial_obj(t.flavor)
    kids = tuple(
        _xi_obj(restrict_labeled(t, (1, j)))
        for j in t.tree.children(0, 0)
    )
    return ITreeObj(t.flavor, t.labels[0][0], kids)


def xi_interval(t: LabeledTree) -> ITreeObj:
    """Convert a cropped interval-labeled tree to an inductive tree."""
    _require_cropped_tree(t, INTERVAL)
    return _xi_obj(t)


def xi_ordinal(t: LabeledTree) -> ITreeObj:
    """Convert a cropped ordinal-labeled tree to an inductive tree."""
    _require_cropped_tree(t, ORDINAL)
    return _xi_obj(t)


def _xi_mor(m: LabeledTreeMor) -> ITreeMor:
    dom_obj = _xi_obj(m.dom)
    cod_obj = _xi_obj(m.cod)
    collapsing_end = cod_obj if m.flavor == INTERVAL else dom_obj
    if collapsing_end.is_trivial:
        return marker(dom_obj, cod_obj)
    index_tree = m.dom if m.flavor == INTERVAL else m.cod
    kids = tuple(
        _xi_mor(restrict_labeled_mor(m, (1, j)))
        for j in index_tree.tree.children(0, 0)
    )
    return ITreeMor(dom_obj, cod_obj, m.alphas[0][0], kids)


def xi_interval_mor(m: LabeledTreeMor) -> ITreeMor:
    """Convert an interval-labeled morphism to an inductive tree morphism."""
    _require_cropped_tree(m.dom, INTERVAL)
    _require_cropped_tree(m.cod, INTERVAL)
    return _xi_mor(m)


def xi_ordinal_mor(m: LabeledTreeMor) -> ITreeMor:
    """Convert an ordinal-labeled op-morphism to an inductive tree morphism."""
    _require_cropped_tree(m.dom, ORDINAL)
    _require_cropped_tree(m.cod, ORDINAL)
    return _xi_mor(m)


def xi_inverse(h: ITreeObj) -> CroppedTree:
    """Rebuild the cropped labeled tree presenting an inductive tree."""
    if h.is_trivial:
        return trivial_labeled(h.flavor)
    t = suspend_labeled([xi_inverse(c) for c in h.children], h.root)
    return CroppedTree(t.flavor, t.tree, t.labels)


def enumerate_cropped_trees(
    flavor: str, max_height: int, max_root: int
) -> list[CroppedTree]:
    """All cropped single-root trees within the inductive-tree bounds."""
    return [
        xi_inverse(h) for h in enumerate_objects(flavor, max_height, max_root)
    ]


def _assemble_mor(
    dom: LabeledTree,
    cod: LabeledTree,
    root_alpha: OrdMap,
    subs: tuple[LabeledTreeMor, ...],
    child_of: OrdMap | None,
) -> LabeledTreeMor:
    """Glue a root component and per-child morphisms into one morphism.

    ``dom``/``cod`` are the morphism's ends; the tree map runs from
    ``index`` (the domain for the interval flavor, the codomain for the
    ordinal flavor) to ``value``, and ``child_of`` sends an index-side
    child position to the value-side child position it lands on.
    """
    if dom.flavor == INTERVAL:
        index_side, value_side = dom, cod
    else:
        index_side, value_side = cod, dom
    index_rows = [
        _subtree_rows(index_side.tree, (1, j))
        for j in range(index_side.tree.levels[1])
    ]
    value_rows = [
        _subtree_rows(value_side.tree, (1, j))
        for j in range(value_side.tree.levels[1])
    ]
    span = max(index_side.depth, value_side.depth) + 1
    level_maps: list[tuple[int, ...]] = [(0,)]
    for lvl in range(1, span):
        row: list[int] = []
        for j, sub in enumerate(subs):
            here = index_rows[j][min(lvl, index_side.depth) - 1]
            there = value_rows[child_of(j)][min(lvl, value_side.depth) - 1]
            local = sub.tree_map.at_level(lvl - 1)
            row.extend(there[local[t]] for t in range(len(here)))
        level_maps.append(tuple(row))
    alphas: list[tuple[OrdMap, ...]] = [(root_alpha,)]
    for lvl in range(1, index_side.depth + 1):
        alphas.append(
            tuple(
                _alpha_at(sub, lvl - 1, t)
                for j, sub in enumerate(subs)
                for t in range(len(index_rows[j][lvl - 1]))
            )
        )
    tree_map = TreeMap(index_side.tree, value_side.tree, tuple(level_maps))
    return LabeledTreeMor(dom, cod, tree_map, tuple(alphas))


def _enum_mors(a: LabeledTree, b: LabeledTree) -> list[LabeledTreeMor]:
    if a.depth == 0 and b.depth == 0:
        return [identity_labeled(a)]
    if a.flavor == INTERVAL:
        if a.depth == 0:
            return []
        if b.depth == 0:
            span = a.depth + 1
            tree_map = TreeMap(
                a.tree,
                b.tree,
                tuple((0,) * a.tree.level_size(n) for n in range(span)),
            )
            alphas = tuple(
                tuple(
                    OrdMap(lab, trivial_root(INTERVAL), (0,) * lab.size)
                    for lab in row
                )
                for row in a.labels
            )
            return [LabeledTreeMor(a, b, tree_map, alphas)]
        out: list[LabeledTreeMor] = []
        for g in enumerate_interval_maps(a.labels[0][0], b.labels[0][0]):
            options = [
                _enum_mors(
                    restrict_labeled(a, (1, i)), restrict_labeled(b, (1, g(i)))
                )
                for i in range(a.tree.levels[1])
            ]
            if any(not opts for opts in options):
                continue
            for combo in product(*options):
                out.append(_assemble_mor(a, b, g, combo, g))
        return out
    if a.depth == 0:
        span = b.depth + 1
        tree_map = TreeMap(
            b.tree,
            a.tree,
            tuple((0,) * b.tree.level_size(n) for n in range(span)),
        )
        alphas = tuple(
            tuple(OrdMap(Ordinal(-1), lab, ()) for lab in row)
            for row in b.labels
        )
        return [LabeledTreeMor(a, b, tree_map, alphas)]
    if b.depth == 0:
        return []
    out = []
    for g in enumerate_ord_maps(a.labels[0][0], b.labels[0][0]):
        back = wedge_map(g)
        options = [
            _enum_mors(
                restrict_labeled(a, (1, back(j))), restrict_labeled(b, (1, j))
            )
            for j in range(b.tree.levels[1])
        ]
        if any(not opts for opts in options):
            continue
        for combo in product(*options):
            out.append(_assemble_mor(a, b, g, combo, back))
    return out


def enumerate_labeled_mors(
    a: LabeledTree, b: LabeledTree
) -> list[LabeledTreeMor]:
    """All morphisms ``a -> b`` of cropped trees, deterministically ordered."""
    if a.flavor != b.flavor:
        raise ValueError("hom-sets require a common flavor")
    _require_cropped_tree(a, a.flavor)
    _require_cropped_tree(b, b.flavor)
    return _enum_mors(a, b)
