"""
Closed surfaces in classification normal form.

A connected closed surface is either orientable of genus ``g`` (written
``O<g>``) or non-orientable with ``k >= 1`` crosscaps (written ``N<k>``).
A :class:`Surface` is a finite disjoint union of such components; the
position of a component in :attr:`Surface.components` is its identifier.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Tuple, Union


class SurfaceError(ValueError):
    """Raised for surfaces that violate a domain constraint."""


class Kind(enum.IntEnum):
    ORIENTABLE = 0
    NONORIENTABLE = 1


@dataclass(frozen=True, order=True)
class SurfaceComponent:
    """One closed connected surface. Orders orientable-first, then by genus."""

    kind: Kind
    genus: int

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 0:
            raise SurfaceError(f"genus must be a non-negative integer, got {self.genus!r}")
        if self.kind is Kind.NONORIENTABLE and self.genus < 1:
            raise SurfaceError("non-orientable genus must be >= 1")
        object.__setattr__(self, "kind", Kind(self.kind))

    @property
    def orientable(self) -> bool:
        return self.kind is Kind.ORIENTABLE

    def __str__(self) -> str:
        return ("O" if self.orientable else "N") + str(self.genus)

    def __repr__(self) -> str:
        return f"SurfaceComponent({self})"


def orientable(g: int) -> SurfaceComponent:
    return SurfaceComponent(Kind.ORIENTABLE, g)


def nonorientable(k: int) -> SurfaceComponent:
    return SurfaceComponent(Kind.NONORIENTABLE, k)


SPHERE = orientable(0)
TORUS = orientable(1)
PROJECTIVE_PLANE = nonorientable(1)
KLEIN_BOTTLE = nonorientable(2)


@dataclass(frozen=True)
class Surface:
    """
    A finite disjoint union of connected closed surfaces.

    Component identifiers are the indices ``0..n-1`` into ``components``.
    Equality and hashing ignore identifiers and compare the sorted
    multiset of components.
    """

    components: Tuple[SurfaceComponent, ...] = ()

    def __init__(self, components: Iterable[SurfaceComponent] = ()) -> None:
        comps = tuple(components)
        for c in comps:
            if not isinstance(c, SurfaceComponent):
                raise SurfaceError(f"not a surface component: {c!r}")
        object.__setattr__(self, "components", comps)

    @property
    def key(self) -> Tuple[SurfaceComponent, ...]:
        return tuple(sorted(self.components))

    def canonical(self) -> "Surface":
        return Surface(self.key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Surface):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, ident: int) -> SurfaceComponent:
        return self.components[ident]

    def __str__(self) -> str:
        if not self.components:
            return "(empty)"
        return " + ".join(str(c) for c in self.key)

    def __repr__(self) -> str:
        return f"Surface({' + '.join(str(c) for c in self.components) or 'empty'})"


def normal_form(tori: int, crosscaps: int) -> SurfaceComponent:
    """
    Normalize the connected sum of ``tori`` tori and ``crosscaps``
    projective planes.

    In the presence of a crosscap each torus summand trades for two
    crosscaps, so the Euler characteristic ``2 - 2*tori - crosscaps`` is
    unchanged.
    """
    if tori < 0 or crosscaps < 0:
        raise SurfaceError("summand counts must be non-negative")
    if crosscaps == 0:
        return orientable(tori)
    return nonorientable(2 * tori + crosscaps)


def nonorientable_genus(x: Union[SurfaceComponent, Surface]) -> int:
    """Crosscap count: 0 on orientable components, additive over disjoint union."""
    if isinstance(x, SurfaceComponent):
        return 0 if x.orientable else x.genus
    return sum(nonorientable_genus(c) for c in x.components)


def odd_count(s: Surface) -> int:
    """Number of components whose non-orientable genus is odd."""
    return sum(1 for c in s.components if nonorientable_genus(c) % 2 == 1)


def even_genus(c: SurfaceComponent) -> int:
    """Largest even integer not exceeding the non-orientable genus of ``c``."""
    p = nonorientable_genus(c)
    return p - (p % 2)


def euler_characteristic(x: Union[SurfaceComponent, Surface]) -> int:
    if isinstance(x, SurfaceComponent):
        return 2 - 2 * x.genus if x.orientable else 2 - x.genus
    return sum(euler_characteristic(c) for c in x.components)


def connected_sum(a: SurfaceComponent, b: SurfaceComponent) -> SurfaceComponent:
    if a.orientable and b.orientable:
        return orientable(a.genus + b.genus)
    # an orientable summand of genus g counts as 2g crosscaps
    ka = a.genus if not a.orientable else 2 * a.genus
    kb = b.genus if not b.orientable else 2 * b.genus
    return nonorientable(ka + kb)


def components_within(max_nonorientable: int, max_orientable: int):
    """All component types with bounded genus, in canonical order."""
    return [orientable(g) for g in range(max_orientable + 1)] + [
        nonorientable(k) for k in range(1, max_nonorientable + 1)
    ]
