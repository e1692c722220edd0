"""Space expression trees, canonical forms, and integral homology.

The supported families are the one-point space, spheres S^n, wedge
sums, Moore spaces M(A, n) with n >= 2, Eilenberg-MacLane spaces
K(A, n) for finitely generated abelian A, complex projective spaces
CP^n with n >= 2, and finite products.  Homology is computed degreewise
from the standard tables, with the Kunneth formula (tensor plus Tor
correction) handling products.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .abelian import (
    TRIVIAL,
    Z,
    FgAbelianGroup,
    direct_sum,
    group_sort_key,
    tensor,
    tor,
)

__all__ = [
    "SpaceExpr",
    "Point",
    "POINT",
    "Sphere",
    "Wedge",
    "Moore",
    "EilenbergMacLane",
    "ComplexProjective",
    "Product",
    "HomologyProfile",
    "UnsupportedSpaceError",
    "wedge",
    "product",
    "canonicalize",
    "space_sort_key",
    "homology",
    "homology_profile",
    "homological_dimension",
    "is_homology_supported",
    "fundamental_group_free_rank",
]


class UnsupportedSpaceError(ValueError):
    """An operation was asked about a space outside its supported table."""


@dataclass(frozen=True)
class Point:
    pass


@dataclass(frozen=True)
class Sphere:
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("sphere dimension must be >= 1")


@dataclass(frozen=True)
class Wedge:
    children: tuple[SpaceExpr, ...]

    def __post_init__(self) -> None:
        children = tuple(self.children)
        if not children:
            raise ValueError("a wedge needs at least one child")
        object.__setattr__(self, "children", children)


@dataclass(frozen=True)
class Moore:
    """Simply connected space with a single nonzero reduced homology group
    (``group`` in degree ``degree``).  Undefined in degree 1."""

    group: FgAbelianGroup
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 2:
            raise ValueError(
                "Moore spaces are not defined in degree 1; degree must be >= 2"
            )


@dataclass(frozen=True)
class EilenbergMacLane:
    """Space with a single nonzero homotopy group (``group`` in degree
    ``degree``); only abelian coefficient groups are representable here."""

    group: FgAbelianGroup
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("Eilenberg-MacLane degree must be >= 1")


@dataclass(frozen=True)
class ComplexProjective:
    dim: int

    def __post_init__(self) -> None:
        if self.dim == 1:
            raise ValueError("CP^1 is the 2-sphere; write S^2")
        if self.dim < 2:
            raise ValueError("complex projective index must be >= 2")


@dataclass(frozen=True)
class Product:
    children: tuple[SpaceExpr, ...]

    def __post_init__(self) -> None:
        children = tuple(self.children)
        if len(children) < 2:
            raise ValueError("a product needs at least two factors")
        object.__setattr__(self, "children", children)


SpaceExpr = Union[
    Point, Sphere, Wedge, Moore, EilenbergMacLane, ComplexProjective, Product
]

POINT = Point()


def wedge(*children: SpaceExpr) -> SpaceExpr:
    """Wedge sum; the empty wedge is the point and a single child is itself."""
    if not children:
        return POINT
    if len(children) == 1:
        return children[0]
    return Wedge(tuple(children))


def product(*children: SpaceExpr) -> SpaceExpr:
    """Cartesian product; empty product is the point, one factor is itself."""
    if not children:
        return POINT
    if len(children) == 1:
        return children[0]
    return Product(tuple(children))


# ---------------------------------------------------------------------------
# canonical form


def space_sort_key(space: SpaceExpr) -> tuple:
    """Fixed total order used to sort wedge and product children."""
    if isinstance(space, Point):
        return (0,)
    if isinstance(space, Sphere):
        return (1, space.dim)
    if isinstance(space, Moore):
        return (2, space.degree, group_sort_key(space.group))
    if isinstance(space, ComplexProjective):
        return (3, space.dim)
    if isinstance(space, EilenbergMacLane):
        return (4, space.degree, group_sort_key(space.group))
    if isinstance(space, Product):
        return (5, len(space.children)) + tuple(space_sort_key(c) for c in space.children)
    if isinstance(space, Wedge):
        return (6, len(space.children)) + tuple(space_sort_key(c) for c in space.children)
    raise TypeError(f"not a space expression: {space!r}")


def _moore_parts(group: FgAbelianGroup, degree: int) -> list[SpaceExpr]:
    # M(A (+) B, n) splits as M(A, n) v M(B, n); peel the free part off as
    # spheres and keep the torsion in a single Moore space.
    parts: list[SpaceExpr] = [Sphere(degree)] * group.free_rank
    torsion = group.torsion()
    if not torsion.is_trivial():
        parts.append(Moore(torsion, degree))
    return parts


def canonicalize(space: SpaceExpr) -> SpaceExpr:
    """Rewrite to the canonical form, preserving homotopy type.

    Wedges and products are flattened, stripped of point children, and
    sorted; Moore spaces shed their free rank as spheres (M(Z, n) is
    S^n) and vanish when the coefficient group is trivial; K(0, n) is a
    point and K(Z, 1) is the circle.  Idempotent.
    """
    if isinstance(space, (Point, Sphere, ComplexProjective)):
        return space
    if isinstance(space, Moore):
        return wedge(*sorted(_moore_parts(space.group, space.degree), key=space_sort_key))
    if isinstance(space, EilenbergMacLane):
        if space.group.is_trivial():
            return POINT
        if space.group == Z and space.degree == 1:
            return Sphere(1)
        return space
    if isinstance(space, Wedge):
        flat: list[SpaceExpr] = []
        for child in space.children:
            child = canonicalize(child)
            if isinstance(child, Wedge):
                flat.extend(child.children)
            elif not isinstance(child, Point):
                flat.append(child)
        # same-degree Moore children merge (M(A,n) v M(B,n) is M(A+B, n)),
        # so a canonical wedge has at most one torsion Moore space per degree
        torsion_by_degree: dict[int, FgAbelianGroup] = {}
        rest: list[SpaceExpr] = []
        for child in flat:
            if isinstance(child, Moore):
                merged = torsion_by_degree.get(child.degree, TRIVIAL)
                torsion_by_degree[child.degree] = direct_sum(merged, child.group)
            else:
                rest.append(child)
        rest.extend(Moore(g, n) for n, g in torsion_by_degree.items())
        return wedge(*sorted(rest, key=space_sort_key))
    if isinstance(space, Product):
        flat = []
        for child in space.children:
            child = canonicalize(child)
            if isinstance(child, Product):
                flat.extend(child.children)
            elif not isinstance(child, Point):
                flat.append(child)
        return product(*sorted(flat, key=space_sort_key))
    raise TypeError(f"not a space expression: {space!r}")


# ---------------------------------------------------------------------------
# homology


def _em_supported(space: EilenbergMacLane) -> bool:
    g, n = space.group, space.degree
    return (n == 1 and g.is_finite() and g.is_cyclic() and not g.is_trivial()) or (
        n == 2 and g == Z
    )


def is_homology_supported(space: SpaceExpr) -> bool:
    """True when every Eilenberg-MacLane node sits in the homology table
    (finite cyclic in degree 1, or Z in degree 2)."""
    space = canonicalize(space)

    def walk(node: SpaceExpr) -> bool:
        if isinstance(node, EilenbergMacLane):
            return _em_supported(node)
        if isinstance(node, (Wedge, Product)):
            return all(walk(c) for c in node.children)
        return True

    return walk(space)


def _kunneth(left: list[FgAbelianGroup], right: list[FgAbelianGroup]) -> list[FgAbelianGroup]:
    # H_n(X x Y) = sum_{i+j=n} H_i (x) H_j  +  sum_{i+j=n-1} Tor(H_i, H_j)
    top = len(left) - 1
    out = []
    for n in range(top + 1):
        pieces = [tensor(left[i], right[n - i]) for i in range(n + 1)]
        pieces.extend(tor(left[i], right[n - 1 - i]) for i in range(n))
        out.append(direct_sum(*pieces))
    return out


def _homology_list(space: SpaceExpr, top: int) -> list[FgAbelianGroup]:
    """Groups H_0 .. H_top of a canonical space."""
    groups = [TRIVIAL] * (top + 1)

    if isinstance(space, Point):
        groups[0] = Z
    elif isinstance(space, Sphere):
        groups[0] = Z
        if space.dim <= top:
            groups[space.dim] = Z
    elif isinstance(space, Moore):
        groups[0] = Z
        if space.degree <= top:
            groups[space.degree] = space.group
    elif isinstance(space, ComplexProjective):
        for n in range(0, min(2 * space.dim, top) + 1, 2):
            groups[n] = Z
    elif isinstance(space, EilenbergMacLane):
        if not _em_supported(space):
            raise UnsupportedSpaceError(
                f"homology of K({space.group}, {space.degree}) is outside the "
                "supported table (finite cyclic in degree 1, or Z in degree 2)"
            )
        if space.degree == 1:
            groups[0] = Z
            for n in range(1, top + 1, 2):
                groups[n] = space.group
        else:
            for n in range(0, top + 1, 2):
                groups[n] = Z
    elif isinstance(space, Wedge):
        children = [_homology_list(c, top) for c in space.children]
        groups[0] = Z
        for n in range(1, top + 1):
            groups[n] = direct_sum(*(c[n] for c in children))
    elif isinstance(space, Product):
        lists = [_homology_list(c, top) for c in space.children]
        combined = lists[0]
        for nxt in lists[1:]:
            combined = _kunneth(combined, nxt)
        groups = combined
    else:
        raise TypeError(f"not a space expression: {space!r}")
    return groups


def homology(space: SpaceExpr, n: int) -> FgAbelianGroup:
    """The integral homology group H_n, in canonical form."""
    if n < 0:
        raise ValueError("homology degree must be >= 0")
    return _homology_list(canonicalize(space), n)[n]


def homological_dimension(space: SpaceExpr) -> int | None:
    """Largest degree with possibly nonzero homology, or None when the
    homology is unbounded (an Eilenberg-MacLane factor is present)."""
    space = canonicalize(space)
    if isinstance(space, Point):
        return 0
    if isinstance(space, Sphere):
        return space.dim
    if isinstance(space, Moore):
        return space.degree
    if isinstance(space, ComplexProjective):
        return 2 * space.dim
    if isinstance(space, EilenbergMacLane):
        return None
    dims = [homological_dimension(c) for c in space.children]
    if any(d is None for d in dims):
        return None
    return max(dims) if isinstance(space, Wedge) else sum(dims)


@dataclass(frozen=True)
class HomologyProfile:
    """Degreewise homology table H_0 .. H_bound.

    ``exact_above_bound`` certifies that every degree above the bound is
    trivial; it holds exactly when the space is finite-dimensional and
    the bound reaches its homological dimension.
    """

    groups: tuple[FgAbelianGroup, ...]
    exact_above_bound: bool

    @property
    def bound(self) -> int:
        return len(self.groups) - 1

    def group(self, n: int) -> FgAbelianGroup:
        if n <= self.bound:
            return self.groups[n]
        if self.exact_above_bound:
            return TRIVIAL
        raise ValueError(f"degree {n} exceeds the computed bound {self.bound}")

    def as_dict(self) -> dict[int, FgAbelianGroup]:
        return dict(enumerate(self.groups))


def homology_profile(space: SpaceExpr, bound: int) -> HomologyProfile:
    if bound < 0:
        raise ValueError("profile bound must be >= 0")
    canon = canonicalize(space)
    groups = tuple(_homology_list(canon, bound))
    dim = homological_dimension(canon)
    return HomologyProfile(groups, dim is not None and bound >= dim)


# ---------------------------------------------------------------------------
# fundamental group


def fundamental_group_free_rank(space: SpaceExpr) -> int:
    """Rank of the (free) fundamental group; 0 means simply connected.

    Circles contribute 1 each through wedges; the other atomic families
    in scope are simply connected.  Raises when the fundamental group is
    not a finitely generated free group (torsion K(A, 1), or a product
    with a non-simply-connected factor).
    """
    space = canonicalize(space)

    def rank(node: SpaceExpr) -> int:
        if isinstance(node, Sphere):
            return 1 if node.dim == 1 else 0
        if isinstance(node, (Point, Moore, ComplexProjective)):
            return 0
        if isinstance(node, EilenbergMacLane):
            if node.degree >= 2:
                return 0
            raise UnsupportedSpaceError(
                f"the fundamental group of K({node.group}, 1) is not free"
            )
        if isinstance(node, Wedge):
            return sum(rank(c) for c in node.children)
        if isinstance(node, Product):
            if any(rank(c) for c in node.children):
                raise UnsupportedSpaceError(
                    "products with non-simply-connected factors are outside "
                    "the scope of this computation"
                )
            return 0
        raise TypeError(f"not a space expression: {node!r}")

    return rank(space)
