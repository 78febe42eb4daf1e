"""Integer geometry of the triangular lattice.

Sites are stored in axial integer coordinates (m, n), meaning the point
m*e1 + n*e2 with e1 = (1, 0) and e2 = (1/2, sqrt(3)/2).  Core logic stays
in exact integer arithmetic; Cartesian floats appear only at measurement
and output boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

SQRT3 = math.sqrt(3.0)


class Site(NamedTuple):
    """Lattice site m*e1 + n*e2 in axial integer coordinates."""

    m: int
    n: int


# The six unit steps, counter-clockwise, 60 degrees apart, starting at e1.
NEIGHBOR_STEPS: tuple[Site, ...] = (
    Site(1, 0),
    Site(0, 1),
    Site(-1, 1),
    Site(-1, 0),
    Site(0, -1),
    Site(1, -1),
)


def to_cartesian(site) -> tuple[float, float]:
    """Cartesian image of a site (or real axial pair)."""
    m, n = site
    return (m + 0.5 * n, 0.5 * SQRT3 * n)


def neighbors(site) -> frozenset[Site]:
    """The six sites at Euclidean distance exactly 1."""
    m, n = site
    return frozenset(Site(m + dm, n + dn) for dm, dn in NEIGHBOR_STEPS)


def hex_norm(site) -> int:
    """Graph distance from the origin (hexagonal norm of an axial pair)."""
    m, n = site
    return (abs(m) + abs(n) + abs(m + n)) // 2


def _rot60(m: int, n: int) -> tuple[int, int]:
    # 60-degree CCW rotation in the (e1, e2) basis: e1 -> e2, e2 -> e2 - e1.
    return (-n, m + n)


def _reflect(m: int, n: int) -> tuple[int, int]:
    # Reflection across the e1 axis: (x, y) -> (x, -y) pulled back to axial.
    return (m + n, -n)


@dataclass(frozen=True)
class Isometry:
    """Lattice isometry x -> R(x) + t.

    The linear part R is one of the 12 point symmetries: an optional
    reflection across the e1 axis applied first, followed by ``rotation``
    CCW steps of 60 degrees.  All 12 map the lattice onto itself and
    preserve the neighbor relation.
    """

    rotation: int = 0
    reflect: bool = False
    translation: Site = Site(0, 0)

    def __post_init__(self):
        object.__setattr__(self, "rotation", self.rotation % 6)
        object.__setattr__(self, "translation", Site(*self.translation))

    def linear(self, site) -> Site:
        m, n = site
        if self.reflect:
            m, n = _reflect(m, n)
        for _ in range(self.rotation):
            m, n = _rot60(m, n)
        return Site(m, n)

    def __call__(self, site) -> Site:
        m, n = self.linear(site)
        return Site(m + self.translation.m, n + self.translation.n)

    def compose(self, other: "Isometry") -> "Isometry":
        """The isometry acting as ``self`` after ``other``."""
        if self.reflect:
            rot = self.rotation - other.rotation
        else:
            rot = self.rotation + other.rotation
        tm, tn = self.linear(other.translation)
        return Isometry(
            rot % 6,
            self.reflect ^ other.reflect,
            Site(tm + self.translation.m, tn + self.translation.n),
        )

    def inverse(self) -> "Isometry":
        rot = self.rotation if self.reflect else (-self.rotation) % 6
        tm, tn = Isometry(rot, self.reflect).linear(self.translation)
        return Isometry(rot, self.reflect, Site(-tm, -tn))


IDENTITY = Isometry()

# The 12 point symmetries fixing the origin (dihedral group of the lattice).
POINT_GROUP: tuple[Isometry, ...] = tuple(
    Isometry(r, f) for f in (False, True) for r in range(6)
)


def apply_isometry(iso: Isometry, site) -> Site:
    """Integer-exact image of a site under an isometry."""
    return iso(site)


def apply_to_sites(iso: Isometry, sites: Iterable) -> frozenset[Site]:
    return frozenset(iso(s) for s in sites)


def canonical_form(sites: Iterable) -> frozenset[Site]:
    """Canonical representative of the orbit under translations and the point group.

    Chosen as the lexicographically smallest sorted coordinate tuple over
    the 12 point-symmetry images, each translated so its smallest site
    lands on the origin.  Constant on isometry orbits and idempotent.
    """
    pts = [Site(*s) for s in sites]
    if not pts:
        raise ValueError("canonical_form of an empty site set")
    best = None
    for g in POINT_GROUP:
        img = sorted(g.linear(p) for p in pts)
        om, on = img[0]
        cand = tuple((m - om, n - on) for m, n in img)
        if best is None or cand < best:
            best = cand
    return frozenset(Site(m, n) for m, n in best)
