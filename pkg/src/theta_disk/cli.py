"""Command-line front end: enumerate, convert, count, verify, render."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from theta_disk.disk import (
    Disk,
    enumerate_disk_morphisms,
    enumerate_disks,
    phi_inverse_obj,
    phi_obj,
)
from theta_disk.forest import LevelTree
from theta_disk.globular import GlobCard, GlobMor, enumerate_glob_morphisms
from theta_disk.itree import (
    INTERVAL,
    ORDINAL,
    ITreeObj,
    enumerate_morphisms,
    enumerate_objects,
    vee,
    wedge,
)
from theta_disk.labeled import (
    LabeledTree,
    LabeledTreeMor,
    con_dualize,
    con_dualize_mor,
    enumerate_cropped_trees,
    enumerate_labeled_mors,
    xi_interval,
    xi_inverse,
    xi_ordinal,
)
from theta_disk.ograph import (
    OGraph,
    count_ograph_morphisms,
    enumerate_ographs,
    gamma,
    gamma_prime,
    upsilon,
    upsilon_prime,
)
from theta_disk.omega import (
    Cell,
    EnrichedCell,
    OmegaPresentation,
    comparison_L,
    enumerate_cells,
    psi_obj,
)
from theta_disk.ordinal import (
    OrdMap,
    Ordinal,
    enumerate_interval_maps,
    enumerate_ord_maps,
    vee_map,
    vee_obj,
    wedge_map,
    wedge_obj,
)
from theta_disk.verify import CHECKS, Bounds, parse_bounds, render_reports, run_all

_PARSERS = {
    "ordinal": Ordinal.from_dict,
    "ordmap": OrdMap.from_dict,
    "tree": LevelTree.from_dict,
    "disk": Disk.from_dict,
    "itree": ITreeObj.from_dict,
    "globcard": GlobCard.from_dict,
    "globmor": GlobMor.from_dict,
    "ograph": OGraph.from_dict,
    "labeled-tree": LabeledTree.from_dict,
    "labeled-tree-mor": LabeledTreeMor.from_dict,
    "cell": Cell.from_dict,
    "enriched-cell": EnrichedCell.from_dict,
    "omega-presentation": OmegaPresentation.from_dict,
}

FUNCTORS = (
    "vee",
    "wedge",
    "phi",
    "phi-inverse",
    "gamma",
    "gamma-prime",
    "upsilon",
    "upsilon-prime",
    "xi",
    "xi-inverse",
    "L",
    "psi",
    "con-dualize",
)

ENUMERATIONS = (
    "ordinal",
    "disk",
    "itree-interval",
    "itree-ordinal",
    "globcard",
    "ograph",
    "cropped-interval",
    "cropped-ordinal",
)

_INPUT_HELP = (
    'Objects are JSON with a "kind" field, given as a file path or inline.\n'
    "Examples:\n"
    '  {"kind": "ordinal", "n": 3}\n'
    '  {"kind": "ordmap", "dom": 1, "cod": 2, "images": [0, 2]}\n'
    '  {"kind": "tree", "levels": [1, 2], "parents": [[0, 0]]}\n'
    '  {"kind": "disk", "levels": [1], "parents": [], "fiber_sizes": []}\n'
    '  {"kind": "itree", "flavor": "interval", "root": 0, "children": []}\n'
    '  {"kind": "globcard", "levels": [1], "src": [], "tgt": []}\n'
    '  {"kind": "ograph", "vertices": 2, "edges": [{"kind": "ograph", '
    '"vertices": 1, "edges": []}]}\n'
    '  {"kind": "labeled-tree", "flavor": "interval", "levels": [1], '
    '"parents": [], "labels": [[0]]}\n'
    '  {"kind": "cell", "base": {...}, "shape": {...}, "map": [...], "dim": 1}\n'
)

_BOUNDS_HELP = (
    "comma-separated caps: height=..,degree=..,label=..,vertices=..,dim=.. "
    "(missing entries keep the defaults; THETA_DISK_BOUNDS supplies a base)"
)


def _load_object(source: str):
    path = Path(source)
    try:
        is_file = path.is_file()
    except OSError:
        is_file = False
    raw = path.read_text() if is_file else source
    data = json.loads(raw)
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError('objects are JSON dictionaries with a "kind" field')
    kind = data["kind"]
    if kind not in _PARSERS:
        raise ValueError(f"unknown object kind {kind!r}")
    return _PARSERS[kind](data)


def _dump(data: dict) -> str:
    return json.dumps(data, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _resolve_bounds(flag: str | None) -> Bounds:
    base = parse_bounds(os.environ.get("THETA_DISK_BOUNDS", ""))
    return parse_bounds(flag or "", base=base)


def _apply_functor(name: str, obj):
    if name == "vee":
        if isinstance(obj, Ordinal):
            return vee_obj(obj)
        if isinstance(obj, OrdMap):
            return vee_map(obj)
        if isinstance(obj, ITreeObj):
            return vee(obj)
    elif name == "wedge":
        if isinstance(obj, Ordinal):
            return wedge_obj(obj)
        if isinstance(obj, OrdMap):
            return wedge_map(obj)
        if isinstance(obj, ITreeObj):
            return wedge(obj)
    elif name == "phi":
        if isinstance(obj, Disk):
            return phi_obj(obj)
    elif name == "phi-inverse":
        if isinstance(obj, ITreeObj):
            return phi_inverse_obj(obj)
    elif name == "gamma":
        if isinstance(obj, GlobCard):
            return gamma(obj)
    elif name == "gamma-prime":
        if isinstance(obj, OGraph):
            return gamma_prime(obj)
    elif name == "upsilon":
        if isinstance(obj, ITreeObj):
            return upsilon(obj)
    elif name == "upsilon-prime":
        if isinstance(obj, OGraph):
            return upsilon_prime(obj)
    elif name == "xi":
        if isinstance(obj, LabeledTree):
            convert = xi_interval if obj.flavor == INTERVAL else xi_ordinal
            return convert(obj)
    elif name == "xi-inverse":
        if isinstance(obj, ITreeObj):
            return xi_inverse(obj)
    elif name == "L":
        if isinstance(obj, Cell):
            return comparison_L(obj)
    elif name == "psi":
        if isinstance(obj, ITreeObj):
            return psi_obj(obj)
    elif name == "con-dualize":
        if isinstance(obj, LabeledTreeMor):
            return con_dualize_mor(obj)
        if isinstance(obj, LabeledTree):
            return con_dualize(obj)
    raise ValueError(
        f"functor {name!r} does not apply to {type(obj).__name__} inputs"
    )


def _enumerate(kind: str, bounds: Bounds) -> list:
    if kind == "ordinal":
        return [Ordinal(n) for n in range(-1, bounds.max_label + 1)]
    if kind == "disk":
        return enumerate_disks(bounds.max_degree, bounds.max_label)
    if kind == "itree-interval":
        return enumerate_objects(INTERVAL, bounds.max_height, bounds.max_label)
    if kind == "itree-ordinal":
        return enumerate_objects(ORDINAL, bounds.max_height, bounds.max_label)
    if kind == "globcard":
        return [
            gamma_prime(g)
            for g in enumerate_ographs(bounds.max_vertices, bounds.max_dim)
        ]
    if kind == "ograph":
        return enumerate_ographs(bounds.max_vertices, bounds.max_dim)
    if kind == "cropped-interval":
        return enumerate_cropped_trees(
            INTERVAL, bounds.max_height, bounds.max_label + 1
        )
    return enumerate_cropped_trees(ORDINAL, bounds.max_height, bounds.max_label)


def _hom_count(a, b, maps: str) -> int:
    if isinstance(a, Ordinal) and isinstance(b, Ordinal):
        if maps == "interval":
            return len(enumerate_interval_maps(a, b))
        return len(enumerate_ord_maps(a, b))
    if isinstance(a, Disk) and isinstance(b, Disk):
        return len(enumerate_disk_morphisms(a, b))
    if isinstance(a, ITreeObj) and isinstance(b, ITreeObj):
        return len(enumerate_morphisms(a, b))
    if isinstance(a, GlobCard) and isinstance(b, GlobCard):
        return len(enumerate_glob_morphisms(a, b))
    if isinstance(a, OGraph) and isinstance(b, OGraph):
        return count_ograph_morphisms(a, b)
    if isinstance(a, LabeledTree) and isinstance(b, LabeledTree):
        return len(enumerate_labeled_mors(a, b))
    raise ValueError(
        "hom-count requires two objects of the same kind; got "
        f"{type(a).__name__} and {type(b).__name__}"
    )


def _walk_level_tree(tree: LevelTree, line_for) -> list[str]:
    lines: list[str] = []

    def rec(level: int, index: int, depth: int) -> None:
        lines.append("  " * depth + line_for(level, index))
        if level < tree.depth:
            for child in tree.children(level, index):
                rec(level + 1, child, depth + 1)

    for root in range(tree.levels[0]):
        rec(0, root, 0)
    return lines


def _render_text(obj) -> str:
    if isinstance(obj, LabeledTree):
        lines = _walk_level_tree(
            obj.tree,
            lambda n, i: f"({n}, {i}) [{obj.labels[n][i].n}]",
        )
    elif isinstance(obj, Disk):
        def disk_line(n: int, i: int) -> str:
            if n < obj.tree.depth:
                return f"({n}, {i}) fiber {len(obj.fiber(n, i))}"
            return f"({n}, {i})"

        lines = _walk_level_tree(obj.tree, disk_line)
    elif isinstance(obj, LevelTree):
        lines = _walk_level_tree(obj, lambda n, i: f"({n}, {i})")
    elif isinstance(obj, ITreeObj):
        lines = []

        def rec(node: ITreeObj, depth: int) -> None:
            lines.append("  " * depth + f"[{node.root.n}]")
            for child in node.children:
                rec(child, depth + 1)

        rec(obj, 0)
    else:
        raise ValueError(
            f"rendering covers tree-shaped objects, not {type(obj).__name__}"
        )
    return "\n".join(lines) + "\n"


def _dot_level_tree(tree: LevelTree, label_for) -> str:
    lines = [
        "digraph tree {",
        "  rankdir=TB;",
        "  node [shape=box, ordering=out];",
    ]
    for n in range(tree.depth + 1):
        for i in range(tree.levels[n]):
            lines.append(f'  v{n}_{i} [label="{label_for(n, i)}"];')
        members = " ".join(f"v{n}_{i};" for i in range(tree.levels[n]))
        lines.append(f"  {{ rank=same; {members} }}")
    for n, row in enumerate(tree.parents):
        for child, parent in enumerate(row):
            lines.append(f"  v{n}_{parent} -> v{n + 1}_{child};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_dot(obj) -> str:
    if isinstance(obj, LabeledTree):
        return _dot_level_tree(
            obj.tree, lambda n, i: f"({n},{i}) [{obj.labels[n][i].n}]"
        )
    if isinstance(obj, Disk):
        def disk_label(n: int, i: int) -> str:
            if n < obj.tree.depth:
                return f"({n},{i}) fiber {len(obj.fiber(n, i))}"
            return f"({n},{i})"

        return _dot_level_tree(obj.tree, disk_label)
    if isinstance(obj, LevelTree):
        return _dot_level_tree(obj, lambda n, i: f"({n},{i})")
    if isinstance(obj, ITreeObj):
        lines = [
            "digraph tree {",
            "  rankdir=TB;",
            "  node [shape=box, ordering=out];",
        ]
        counter = iter(range(10**9))

        def rec(node: ITreeObj) -> int:
            my_id = next(counter)
            lines.append(f'  n{my_id} [label="[{node.root.n}]"];')
            for slot, child in enumerate(node.children):
                child_id = rec(child)
                lines.append(f'  n{my_id} -> n{child_id} [label="{slot}"];')
            return my_id

        rec(obj)
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(
        f"rendering covers tree-shaped objects, not {type(obj).__name__}"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="theta-disk",
        description="Finite categories of trees, disks, and free "
        "omega-categories: enumerate objects, apply the structure "
        "functors, count hom-sets, and verify the structural laws.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--bounds", help=_BOUNDS_HELP)
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser(
        "enumerate",
        help="list the objects of a named family under the bounds",
        description="Emit one canonical JSON object per line.",
        epilog=_INPUT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--kind", choices=ENUMERATIONS, required=True)
    add_common(p)

    p = sub.add_parser(
        "convert",
        help="apply a named functor to a serialized object",
        description="Read one object, apply the functor, print the image.",
        epilog=_INPUT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--functor", choices=FUNCTORS, required=True)
    p.add_argument("input", help="path to a JSON file, or inline JSON")
    add_common(p)

    p = sub.add_parser(
        "hom-count",
        help="count the morphisms between two serialized objects",
        description="Both inputs must deserialize to the same kind of object.",
        epilog=_INPUT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("dom", help="path to a JSON file, or inline JSON")
    p.add_argument("cod", help="path to a JSON file, or inline JSON")
    p.add_argument(
        "--kind",
        choices=("interval", "ordinal"),
        default="ordinal",
        help="for a pair of ordinals: count endpoint-preserving interval "
        "maps or all monotone maps (default)",
    )
    add_common(p)

    p = sub.add_parser(
        "cells",
        help="count free-category cells per dimension over a base",
        description="Input is a globcard or ograph; dimensions run from 0 "
        "to the dim bound.",
        epilog=_INPUT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("input", help="path to a JSON file, or inline JSON")
    add_common(p)

    p = sub.add_parser(
        "verify",
        help="run the exhaustive structure checks",
        description="Reports are JSON lines; the exit status is 1 when any "
        "check fails.",
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", choices=sorted(CHECKS))
    group.add_argument("--all", action="store_true")
    add_common(p)

    p = sub.add_parser(
        "render",
        help="pretty-print a tree-shaped object",
        description="Formats: text (indented), dot (Graphviz; levels are "
        "ranks, fiber order is left-to-right), json (canonical).",
        epilog=_INPUT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("input", help="path to a JSON file, or inline JSON")
    p.add_argument("--format", choices=("text", "dot", "json"), default="text")
    add_common(p)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON ({exc})", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    bounds = _resolve_bounds(args.bounds)
    if args.verb == "enumerate":
        objects = _enumerate(args.kind, bounds)
        _emit("".join(_dump(o.to_dict()) for o in objects), args.out)
        return 0
    if args.verb == "convert":
        image = _apply_functor(args.functor, _load_object(args.input))
        _emit(_dump(image.to_dict()), args.out)
        return 0
    if args.verb == "hom-count":
        count = _hom_count(
            _load_object(args.dom), _load_object(args.cod), args.kind
        )
        _emit(_dump({"kind": "hom-count", "count": count}), args.out)
        return 0
    if args.verb == "cells":
        base = _load_object(args.input)
        if isinstance(base, OGraph):
            base = gamma_prime(base)
        if not isinstance(base, GlobCard):
            raise ValueError("cells requires a globcard or ograph input")
        counts = [
            len(enumerate_cells(base, n)) for n in range(bounds.max_dim + 1)
        ]
        _emit(_dump({"kind": "cell-counts", "counts": counts}), args.out)
        return 0
    if args.verb == "verify":
        reports = (
            run_all(bounds) if args.all else [CHECKS[args.check](bounds)]
        )
        _emit(render_reports(reports), args.out)
        return 0 if all(r.passed for r in reports) else 1
    renderer = {
        "text": _render_text,
        "dot": _render_dot,
        "json": lambda obj: _dump(obj.to_dict()),
    }[args.format]
    _emit(renderer(_load_object(args.input)), args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
