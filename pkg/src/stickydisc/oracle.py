"""Exhaustive brute-force search over connected lattice site-animals.

Enumerates every connected N-site subset of the triangular lattice exactly
once per translation class (Redelmeier-style growth from a root cell that
is the row-major minimum), tracks the maximum bond count per size, and can
collect all maximizers up to isometry.  This is the independent verifier
for the closed-form bond formula at desk scale.

Cells are packed into single integers for speed: cell = (m + PAD) * STRIDE
+ (n + PAD), so the six neighbor offsets become constant integer deltas.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .configuration import Configuration, max_bond_formula
from .lattice import Site, canonical_form

__all__ = [
    "OracleResult",
    "BudgetExhausted",
    "max_bonds",
    "count_maximizers",
    "verify_formula_range",
    "fixed_animal_counts",
]

_STRIDE = 64
_PAD = 28
_ORIGIN = _PAD * _STRIDE + _PAD
# steps e1, e2, e2-e1, -e1, -e2, e1-e2 in packed form
_DELTAS = (_STRIDE, 1, 1 - _STRIDE, -_STRIDE, -1, _STRIDE - 1)
_MAX_N = 24  # packing head-room; exhaustive work tops out far below this


class BudgetExhausted(Exception):
    """Raised internally when the node budget runs out mid-search."""


def _decode(cell: int) -> Site:
    return Site(cell // _STRIDE - _PAD, cell % _STRIDE - _PAD)


def _in_region(cell: int) -> bool:
    # Root normalization: every animal is grown with its row-major smallest
    # cell at the origin, so cells below row 0, or left of the origin in
    # row 0, are excluded.
    r = cell % _STRIDE
    if r > _PAD:
        return True
    return r == _PAD and cell >= _ORIGIN


@dataclass
class OracleResult:
    """Outcome of an exhaustive (or budget-limited) max-bond search."""

    n: int
    max_bonds: int
    maximizer_count: int
    maximizers: tuple[frozenset[Site], ...]
    nodes_explored: int
    complete: bool


def _traverse(n_max, budget, visit):
    """Visit every connected animal with at most n_max cells exactly once.

    ``visit(size, bonds, occupied)`` is called for each animal; it returns
    True when the current branch should be extended further.  Returns the
    number of nodes visited; raises BudgetExhausted beyond ``budget``.
    """
    occupied: set[int] = {_ORIGIN}
    seen: set[int] = {_ORIGIN}
    nodes = 0

    def rec(untried, size, bonds):
        nonlocal nodes
        occ = occupied
        while untried:
            cell = untried.pop()
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted
            gain = 0
            fresh = []
            for delta in _DELTAS:
                nb = cell + delta
                if nb in occ:
                    gain += 1
                elif nb not in seen and _in_region(nb):
                    fresh.append(nb)
            nb_bonds = bonds + gain
            new_size = size + 1
            occ.add(cell)
            extend = visit(new_size, nb_bonds, occ)
            if extend and new_size < n_max:
                seen.update(fresh)
                rec(untried + fresh, new_size, nb_bonds)
                seen.difference_update(fresh)
            occ.discard(cell)

    # The root cell is handled by the same machinery: initial untried holds
    # only the origin, and gain is 0 for it.
    occupied.discard(_ORIGIN)
    try:
        rec([_ORIGIN], 0, 0)
    finally:
        occupied.add(_ORIGIN)
    return nodes


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > _MAX_N:
        raise ValueError(f"exhaustive search supports n <= {_MAX_N}, got {n}")


def max_bonds(n: int, budget: int = 10**9, list_maximizers: bool = True) -> OracleResult:
    """Exhaustive maximum bond count over all connected n-site animals.

    Two passes: the first finds the maximum value, the second re-walks the
    tree pruned against that value and collects every maximizer up to
    isometry.  ``complete`` is False when the node budget ran out, in which
    case the reported values are best-effort lower bounds.
    """
    _check_n(n)

    best = [-1] * (n + 1)

    def visit_max(size, bonds, occ):
        if bonds > best[size]:
            best[size] = bonds
        return True

    complete = True
    nodes = 0
    try:
        nodes = _traverse(n, budget, visit_max)
    except BudgetExhausted:
        complete = False
        nodes = budget

    target = best[n]
    canonicals: set[frozenset[Site]] = set()

    if complete and target >= 0:
        def visit_collect(size, bonds, occ):
            # A branch stays alive only while 6 bonds per missing atom could
            # still reach the target (a new atom never adds more than 6).
            if size == n:
                if bonds == target:
                    canonicals.add(canonical_form(_decode(c) for c in occ))
                return False
            return bonds + 6 * (n - size) >= target

        try:
            nodes += _traverse(n, budget, visit_collect)
        except BudgetExhausted:
            complete = False

    maximizers = tuple(sorted(canonicals, key=sorted)) if list_maximizers else ()
    return OracleResult(
        n=n,
        max_bonds=target,
        maximizer_count=len(canonicals),
        maximizers=maximizers,
        nodes_explored=nodes,
        complete=complete,
    )


def count_maximizers(n: int, budget: int = 10**9) -> int:
    """Number of maximizers of the bond count, up to isometry."""
    return max_bonds(n, budget=budget, list_maximizers=False).maximizer_count


@dataclass
class RangeReport:
    """Per-size comparison of the exhaustive maximum with the closed formula."""

    rows: list[tuple[int, int, int]] = field(default_factory=list)  # (n, oracle, formula)
    nodes_explored: int = 0
    complete: bool = True

    def all_match(self) -> bool:
        return all(o == f for _, o, f in self.rows)


def verify_formula_range(n_max: int = 12, budget: int = 10**9) -> RangeReport:
    """Assert oracle max == floor(3n - sqrt(12n - 3)) for every n <= n_max.

    A mismatch raises AssertionError carrying a serialized counterexample.
    """
    _check_n(n_max)
    best = [-1] * (n_max + 1)
    witness: list = [None] * (n_max + 1)

    def visit(size, bonds, occ):
        if bonds > best[size]:
            best[size] = bonds
            witness[size] = tuple(occ)
        return True

    report = RangeReport()
    try:
        report.nodes_explored = _traverse(n_max, budget, visit)
    except BudgetExhausted:
        report.complete = False
        raise RuntimeError(
            f"node budget {budget} exhausted before exhausting n <= {n_max}"
        )
    for n in range(1, n_max + 1):
        formula = max_bond_formula(n)
        report.rows.append((n, best[n], formula))
        if best[n] != formula:
            cells = sorted(_decode(c) for c in witness[n])
            raise AssertionError(
                f"formula mismatch at n={n}: oracle {best[n]} vs formula {formula}; "
                f"best found {cells}"
            )
    return report


def fixed_animal_counts(n_max: int, budget: int = 10**9) -> list[int]:
    """Number of connected animals per size, counted once per translation class."""
    _check_n(n_max)
    counts = [0] * (n_max + 1)

    def visit(size, bonds, occ):
        counts[size] += 1
        return True

    _traverse(n_max, budget, visit)
    return counts[1:]


def maximizer_configurations(result: OracleResult) -> list[Configuration]:
    """Materialize an oracle result's maximizers as configurations."""
    return [Configuration(sites) for sites in result.maximizers]
