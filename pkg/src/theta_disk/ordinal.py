"""Finite ordinals, monotone maps, and the interval/ordinal adjoint calculus.

Objects are the finite linear orders ``[n] = {0 < 1 < ... < n}``, with
``[-1]`` the empty order.  A monotone map is stored densely as the tuple of
its values.  Interval maps are the monotone maps between non-empty ordinals
that preserve both the least and the greatest element; they are recognised
by :meth:`OrdMap.is_interval` rather than wrapped in a separate type.

The two constructions ``vee`` (drop the top, pass to the right adjoint) and
``wedge`` (add a top, pass to the left adjoint) translate between interval
maps and arbitrary monotone maps in opposite directions, and are mutually
inverse; the rest of the package leans on them for every duality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement


@dataclass(frozen=True, order=True)
class Ordinal:
    """The finite linear order ``[n] = {0, ..., n}``; ``[-1]`` is empty."""

    n: int

    def __post_init__(self) -> None:
        if self.n < -1:
            raise ValueError(f"ordinal index must be >= -1, got {self.n}")

    @property
    def size(self) -> int:
        return self.n + 1

    def elements(self) -> range:
        return range(self.n + 1)

    def __repr__(self) -> str:
        return f"[{self.n}]"

    def to_dict(self) -> dict:
        return {"kind": "ordinal", "n": self.n}

    @staticmethod
    def from_dict(data: dict) -> "Ordinal":
        return Ordinal(int(data["n"]))


@dataclass(frozen=True)
class OrdMap:
    """A monotone map between finite ordinals, stored by its value tuple."""

    dom: Ordinal
    cod: Ordinal
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.dom.size:
            raise ValueError(
                f"expected {self.dom.size} values for a map out of {self.dom}, "
                f"got {len(self.images)}"
            )
        prev = 0
        for j in self.images:
            if not 0 <= j <= self.cod.n:
                raise ValueError(f"value {j} outside {self.cod}")
            if j < prev:
                raise ValueError(f"values {self.images} are not monotone")
            prev = j

    def __call__(self, i: int) -> int:
        return self.images[i]

    @property
    def is_identity(self) -> bool:
        return self.dom == self.cod and self.images == tuple(self.dom.elements())

    @property
    def is_interval(self) -> bool:
        """True when the map preserves both endpoints of non-empty ordinals."""
        if self.dom.n < 0 or self.cod.n < 0:
            return False
        return self.images[0] == 0 and self.images[-1] == self.cod.n

    def __repr__(self) -> str:
        return f"OrdMap({self.dom}->{self.cod}: {self.images})"

    def to_dict(self) -> dict:
        return {
            "kind": "ordmap",
            "dom": self.dom.n,
            "cod": self.cod.n,
            "images": list(self.images),
        }

    @staticmethod
    def from_dict(data: dict) -> "OrdMap":
        return OrdMap(
            Ordinal(int(data["dom"])),
            Ordinal(int(data["cod"])),
            tuple(int(v) for v in data["images"]),
        )


def identity(a: Ordinal) -> OrdMap:
    """The identity map on ``a``."""
    return OrdMap(a, a, tuple(a.elements()))


def require_interval(f: OrdMap) -> OrdMap:
    """Return ``f`` unchanged, raising unless it is an interval map."""
    if not f.is_interval:
        raise ValueError(f"{f} is not an interval map")
    return f


def compose(g: OrdMap, f: OrdMap) -> OrdMap:
    """The composite ``g after f``."""
    if f.cod != g.dom:
        raise ValueError(f"cannot compose {g} after {f}")
    return OrdMap(f.dom, g.cod, tuple(g.images[j] for j in f.images))


def left_adjoint(g: OrdMap) -> OrdMap:
    """The map ``j -> least i with j <= g(i)``.

    Defined exactly when ``g`` preserves the greatest element (for the empty
    map this forces an empty codomain).  The result preserves the least
    element, and sends ``j`` to 0 only for ``j = 0``.
    """
    m, n = g.dom.n, g.cod.n
    if m == -1:
        if n == -1:
            return OrdMap(g.cod, g.dom, ())
        raise ValueError("empty map into a non-empty ordinal has no left adjoint")
    if g.images[-1] != n:
        raise ValueError(f"{g} does not preserve the greatest element")
    values = []
    i = 0
    for j in range(n + 1):
        while g.images[i] < j:
            i += 1
        values.append(i)
    return OrdMap(g.cod, g.dom, tuple(values))


def right_adjoint(g: OrdMap) -> OrdMap:
    """The map ``j -> greatest i with g(i) <= j``.

    Defined exactly when ``g`` preserves the least element (for the empty
    map this forces an empty codomain).  The result preserves the greatest
    element, and sends ``j`` to the top only for ``j = n``.
    """
    m, n = g.dom.n, g.cod.n
    if m == -1:
        if n == -1:
            return OrdMap(g.cod, g.dom, ())
        raise ValueError("empty map into a non-empty ordinal has no right adjoint")
    if g.images[0] != 0:
        raise ValueError(f"{g} does not preserve the least element")
    values = []
    i = 0
    for j in range(n + 1):
        while i < m and g.images[i + 1] <= j:
            i += 1
        values.append(i)
    return OrdMap(g.cod, g.dom, tuple(values))


def vee_obj(m: Ordinal) -> Ordinal:
    """Drop the top element: ``[m] -> [m-1]``.  Requires ``m`` non-empty."""
    if m.n < 0:
        raise ValueError("vee is defined on non-empty ordinals only")
    return Ordinal(m.n - 1)


def vee_map(f: OrdMap) -> OrdMap:
    """Turn an interval map ``[m] -> [n]`` into the monotone map
    ``[n-1] -> [m-1]`` restricting its right adjoint below the top."""
    require_interval(f)
    r = right_adjoint(f)
    return OrdMap(vee_obj(f.cod), vee_obj(f.dom), r.images[:-1])


def wedge_obj(m: Ordinal) -> Ordinal:
    """Add a new top element: ``[m] -> [m+1]``."""
    return Ordinal(m.n + 1)


def wedge_map(g: OrdMap) -> OrdMap:
    """Turn a monotone map ``[m] -> [n]`` into the interval map
    ``[n+1] -> [m+1]``: extend by topmost values, pass to the left adjoint."""
    ext = OrdMap(
        wedge_obj(g.dom), wedge_obj(g.cod), g.images + (g.cod.n + 1,)
    )
    return left_adjoint(ext)


def wedge_fiber(g: OrdMap, j: int) -> set[int]:
    """The fiber of ``wedge_map(g)`` over ``j`` in ``wedge_obj(g.dom)``.

    Equals ``{g(j-1)+1, ..., g(j)}`` with the conventions ``g(-1)+1 = 0``
    at the bottom and a top fiber running up to ``g.cod.n + 1``.
    """
    if not 0 <= j <= g.dom.n + 1:
        raise ValueError(f"{j} is not an element of {wedge_obj(g.dom)}")
    w = wedge_map(g)
    return {i for i in range(w.dom.size) if w.images[i] == j}


def endpoint_outside(g: OrdMap, i: int) -> bool:
    """Whether ``wedge_map(g)`` sends ``i`` to an endpoint of its codomain.

    Computed directly from the image of ``g``: true iff ``i`` is at most the
    least value of ``g`` or exceeds the greatest (always true for the empty
    map).
    """
    if not 0 <= i <= g.cod.n + 1:
        raise ValueError(f"{i} is not an element of {wedge_obj(g.cod)}")
    if not g.images:
        return True
    return i <= g.images[0] or i > g.images[-1]


def enumerate_ord_maps(m: Ordinal, n: Ordinal) -> list[OrdMap]:
    """All monotone maps ``m -> n`` in lexicographic order of value tuples."""
    if m.n == -1:
        return [OrdMap(m, n, ())]
    if n.n == -1:
        return []
    return [
        OrdMap(m, n, images)
        for images in combinations_with_replacement(range(n.size), m.size)
    ]


def enumerate_interval_maps(m: Ordinal, n: Ordinal) -> list[OrdMap]:
    """All interval maps ``m -> n`` in lexicographic order of value tuples."""
    if m.n < 0 or n.n < 0:
        raise ValueError("interval maps run between non-empty ordinals")
    if m.n == 0:
        return [OrdMap(m, n, (0,))] if n.n == 0 else []
    return [
        OrdMap(m, n, (0, *mid, n.n))
        for mid in combinations_with_replacement(range(n.size), m.n - 1)
    ]
