"""Finite atomic configurations on the lattice: bonds, energy, boundary structure.

Two atoms are bonded when their distance is exactly 1; each bond
contributes -2 to the total energy (the pair potential is -1 per ordered
pair at distance 1, +infinity below distance 1, 0 beyond).  Distinct
lattice sites are never closer than 1, so the infinite-energy overlap is
unreachable here; raw input files are screened for duplicates at parse
time instead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import isqrt, pi
from typing import Iterable, Iterator

from .lattice import NEIGHBOR_STEPS, Site


class StructureError(Exception):
    """A configuration violates a structural precondition (hole, cut vertex, ...)."""


# One step per bond direction, so each unordered pair is counted once.
_HALF_STEPS = (Site(1, 0), Site(0, 1), Site(-1, 1))


def _ceil_sqrt(v: int) -> int:
    # Exact integer bracketing; float sqrt flips floors near perfect squares.
    s = isqrt(v)
    return s if s * s == v else s + 1


def max_bond_formula(n: int) -> int:
    """Largest bond count any n-site lattice subset attains: floor(3n - sqrt(12n - 3)).

    Computed with exact integer square-root bracketing, valid for n up to
    at least 10**12.
    """
    if n <= 0:
        raise ValueError(f"need n >= 1, got {n}")
    return 3 * n - _ceil_sqrt(12 * n - 3)


def ground_state_energy(n: int) -> int:
    """Minimal energy of n atoms: -6n + 2*ceil(sqrt(12n - 3))."""
    return -2 * max_bond_formula(n)


def boundary_size_formula(n: int) -> int:
    """Boundary atom count of an n-atom ground state: -floor(3 - sqrt(12n - 3))."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return _ceil_sqrt(12 * n - 3) - 3


class Configuration:
    """Immutable finite set of lattice sites with an eagerly cached bond count."""

    def __init__(self, sites: Iterable = ()):
        self._sites = frozenset(Site(*s) for s in sites)
        count = 0
        for m, n in self._sites:
            for dm, dn in _HALF_STEPS:
                if (m + dm, n + dn) in self._sites:
                    count += 1
        self._bond_count = count

    @property
    def sites(self) -> frozenset[Site]:
        return self._sites

    @property
    def n(self) -> int:
        return len(self._sites)

    @property
    def bond_count(self) -> int:
        return self._bond_count

    @property
    def energy(self) -> int:
        return -2 * self._bond_count

    def degree(self, site) -> int:
        m, n = site
        return sum((m + dm, n + dn) in self._sites for dm, dn in NEIGHBOR_STEPS)

    def __len__(self) -> int:
        return len(self._sites)

    def __iter__(self) -> Iterator[Site]:
        return iter(self._sites)

    def __contains__(self, site) -> bool:
        return site in self._sites

    def __eq__(self, other) -> bool:
        return isinstance(other, Configuration) and self._sites == other._sites

    def __hash__(self) -> int:
        return hash(self._sites)

    def __repr__(self) -> str:
        return f"Configuration(n={self.n}, bonds={self._bond_count})"


def bond_count(config: Configuration) -> int:
    """Number of unordered site pairs at distance exactly 1."""
    return config.bond_count


def energy(config: Configuration) -> int:
    """Total pair energy, -2 per bond."""
    return config.energy


def boundary_sites(config: Configuration) -> frozenset[Site]:
    """Sites with at most 5 occupied neighbors."""
    return frozenset(s for s in config.sites if config.degree(s) <= 5)


def is_connected(config: Configuration) -> bool:
    """Graph connectivity under unit-distance bonds."""
    sites = config.sites
    if len(sites) <= 1:
        return True
    start = next(iter(sites))
    seen = {start}
    queue = deque([start])
    while queue:
        m, n = queue.popleft()
        for dm, dn in NEIGHBOR_STEPS:
            nb = Site(m + dm, n + dn)
            if nb in sites and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(sites)


def is_simply_connected(config: Configuration) -> bool:
    """True when no unoccupied lattice site is enclosed by the configuration.

    Flood-fills the complement from outside a bounding box; any unoccupied
    cell the fill cannot reach is an enclosed hole.
    """
    sites = config.sites
    if not sites:
        return True
    m_lo = min(s.m for s in sites) - 1
    m_hi = max(s.m for s in sites) + 1
    n_lo = min(s.n for s in sites) - 1
    n_hi = max(s.n for s in sites) + 1
    start = (m_lo, n_lo)
    seen = {start}
    queue = deque([start])
    while queue:
        m, n = queue.popleft()
        for dm, dn in NEIGHBOR_STEPS:
            nb = (m + dm, n + dn)
            if (
                m_lo <= nb[0] <= m_hi
                and n_lo <= nb[1] <= n_hi
                and nb not in sites
                and nb not in seen
            ):
                seen.add(nb)
                queue.append(nb)
    box_cells = (m_hi - m_lo + 1) * (n_hi - n_lo + 1)
    return len(seen) == box_cells - len(sites)


@dataclass(frozen=True)
class BoundaryPolygon:
    """Counter-clockwise boundary cycle with interior angles.

    ``vertices[i]`` connects to ``vertices[i+1]`` by a unit edge;
    ``angle_steps[i]`` is the interior angle at vertex i in units of 60
    degrees (values 1, 2, 3, 4 for pi/3, 2pi/3, pi, 4pi/3).
    """

    vertices: tuple[Site, ...]
    angle_steps: tuple[int, ...]

    @property
    def angles(self) -> tuple[float, ...]:
        return tuple(step * pi / 3.0 for step in self.angle_steps)

    @property
    def perimeter(self) -> float:
        """Euclidean length: one unit per edge."""
        return float(len(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)


def boundary_polygon(config: Configuration) -> BoundaryPolygon:
    """Trace the outer boundary counter-clockwise, interior kept on the left.

    Starts from the lexicographically smallest boundary site.  Raises
    StructureError for configurations with fewer than 3 sites, holes, cut
    vertices, or disconnected site sets.
    """
    sites = config.sites
    if len(sites) < 3:
        raise StructureError(f"boundary polygon needs at least 3 sites, got {len(sites)}")
    if not is_connected(config):
        raise StructureError("configuration is not connected")
    if not is_simply_connected(config):
        raise StructureError("configuration encloses a hole")

    v0 = min(sites)
    # From the lexicographic minimum, steps 2..4 point to smaller (m, n)
    # and cannot be occupied; scanning 5, 0, 1 picks the most clockwise
    # occupied direction, which starts the CCW traversal.
    d0 = None
    for k in (5, 0, 1):
        dm, dn = NEIGHBOR_STEPS[k]
        if (v0.m + dm, v0.n + dn) in sites:
            d0 = k
            break
    if d0 is None:  # pragma: no cover - impossible for connected n >= 3
        raise StructureError("isolated start site")

    verts = [v0]
    dirs = [d0]
    step = NEIGHBOR_STEPS[d0]
    cur = Site(v0.m + step.m, v0.n + step.n)
    d = d0
    while True:
        nd = None
        for off in range(6):
            cand = (d + 4 + off) % 6
            dm, dn = NEIGHBOR_STEPS[cand]
            if (cur.m + dm, cur.n + dn) in sites:
                nd = cand
                break
        if cur == v0 and nd == d0:
            break
        verts.append(cur)
        dirs.append(nd)
        dm, dn = NEIGHBOR_STEPS[nd]
        cur = Site(cur.m + dm, cur.n + dn)
        d = nd

    if len(set(verts)) != len(verts):
        seen: set[Site] = set()
        for v in verts:
            if v in seen:
                raise StructureError(f"cut vertex at {tuple(v)}")
            seen.add(v)

    m = len(verts)
    codes = []
    for i in range(m):
        d_out = dirs[i]
        d_back = (dirs[i - 1] + 3) % 6
        code = (d_back - d_out) % 6
        if code not in (1, 2, 3, 4):
            raise StructureError(f"degenerate boundary angle at {tuple(verts[i])}")
        codes.append(code)
    # CCW turning number 1: sum of (pi - angle) equals 2*pi.
    assert sum(3 - c for c in codes) == 6
    return BoundaryPolygon(tuple(verts), tuple(codes))


def unit_triangle_count(config: Configuration) -> int:
    """Number of unit lattice triangles with all three vertices occupied.

    For a connected, hole-free configuration this satisfies
    n - bonds + triangles = 1 (Euler relation for the bond graph).
    """
    sites = config.sites
    if not sites or not is_connected(config) or not is_simply_connected(config):
        raise StructureError("triangle count needs a nonempty connected hole-free configuration")
    count = 0
    for m, n in sites:
        if (m + 1, n) in sites and (m, n + 1) in sites:
            count += 1  # upward triangle
        if (m + 1, n) in sites and (m + 1, n - 1) in sites:
            count += 1  # downward triangle
    return count
