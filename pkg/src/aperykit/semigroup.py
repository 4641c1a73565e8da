"""Numerical monoids and their classical invariants, straight from definitions.

Everything in this module works by dynamic programming over an explicit
membership table: no polynomial machinery is involved.  That makes these
routines slow-ish but transparently correct, so they double as the oracle
against which the staircase pipeline is validated.

A numerical monoid is the set of all nonnegative integer combinations of
generators ``a_1 < ... < a_k`` with ``gcd(a_1, ..., a_k) = 1``.  Its gap set
(nonnegative integers outside the monoid) is finite; the largest gap is the
Frobenius number ``f``, the gap count is the genus ``g``.  The Apery set
``Ap(S, s)`` collects the smallest member of each residue class mod ``s``,
equivalently ``{x in S : x - s not in S}``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import InternalInvariantError, NotAMemberError, NotMinimalError, ScanLimitError

_DEFAULT_MAX_SCAN = 10**7


def max_scan_limit() -> int:
    """Scan guard for membership tables and gap hunts (env APERYKIT_MAX_SCAN)."""
    raw = os.environ.get("APERYKIT_MAX_SCAN")
    if raw is None:
        return _DEFAULT_MAX_SCAN
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"APERYKIT_MAX_SCAN must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("APERYKIT_MAX_SCAN must be positive")
    return value


def _membership_table(generators, size):
    """Boolean table t with t[m] = 1 iff m is a Z>=0-combination of generators."""
    table = bytearray(size)
    table[0] = 1
    for m in range(1, size):
        for a in generators:
            if m >= a and table[m - a]:
                table[m] = 1
                break
    return table


class NumericalSemigroup:
    """A numerical monoid, held as its minimal generator list.

    Construction rejects non-monoids (gcd above 1) and, with a distinct
    error, non-minimal generator lists: a redundant generator would break
    the one-variable-per-generator convention used everywhere downstream.

    Instances are immutable except for the membership cache, which only
    ever grows and is swapped in atomically, so concurrent readers are safe.
    """

    __slots__ = ("generators", "_table")

    def __init__(self, generators):
        gens = tuple(int(a) for a in generators)
        if not gens:
            raise ValueError("at least one generator is required")
        if any(a < 1 for a in gens):
            raise ValueError(f"generators must be >= 1, got {gens}")
        if any(b <= a for a, b in zip(gens, gens[1:])):
            raise ValueError(f"generators must be strictly increasing, got {gens}")
        if math.gcd(*gens) != 1:
            raise ValueError(f"gcd of generators must be 1, got {gens}")
        for i, a in enumerate(gens):
            others = gens[:i] + gens[i + 1 :]
            if others and _membership_table(others, a + 1)[a]:
                raise NotMinimalError(
                    f"generator {a} is a combination of the others in {gens}"
                )
        self.generators = gens
        self._table = bytearray([1])

    def _members_up_to(self, n: int) -> bytearray:
        table = self._table
        if n < len(table):
            return table
        if n >= max_scan_limit():
            raise ScanLimitError(
                f"membership scan to {n} exceeds APERYKIT_MAX_SCAN={max_scan_limit()}"
            )
        size = max(n + 1, 2 * len(table))
        new = _membership_table(self.generators, size)
        # single attribute assignment: readers see the old or the new table
        self._table = new
        return new

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dim(self) -> int:
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"NumericalSemigroup({list(self.generators)})"


@dataclass(frozen=True)
class InvariantReport:
    """Frobenius number, genus, gap list and the symmetry flag of a monoid."""

    frobenius: int
    genus: int
    gaps: tuple[int, ...]
    symmetric: bool


def contains(S: NumericalSemigroup, n: int) -> bool:
    """Membership test; negative integers are never members."""
    if n < 0:
        return False
    return bool(S._members_up_to(n)[n])


def gaps(S: NumericalSemigroup) -> list[int]:
    """All positive integers outside S, in increasing order.

    The scan stops once ``a_1`` consecutive members have been seen: from
    that point on every residue class mod ``a_1`` has a representative, so
    no further gaps exist.
    """
    a1 = S.generators[0]
    out: list[int] = []
    run = 0
    m = 0
    limit = max_scan_limit()
    while run < a1:
        m += 1
        if m > limit:
            raise ScanLimitError(f"gap scan exceeded APERYKIT_MAX_SCAN={limit}")
        if contains(S, m):
            run += 1
        else:
            run = 0
            out.append(m)
    return out


def apery_bruteforce(S: NumericalSemigroup, s: int) -> list[int]:
    """Ap(S, s): the smallest member of S in each residue class mod s.

    Cross-checked on the fly against the alternative characterization
    {x in S : x - s not in S}; a disagreement would be a bug, not bad input.
    """
    if s <= 0 or not contains(S, s):
        raise NotAMemberError(f"{s} is not a nonzero element of {S!r}")
    found: dict[int, int] = {}
    m = 0
    limit = max_scan_limit()
    while len(found) < s:
        if m > limit:
            raise ScanLimitError(f"Apery scan exceeded APERYKIT_MAX_SCAN={limit}")
        if contains(S, m):
            r = m % s
            if r not in found:
                found[r] = m
        m += 1
    elements = sorted(found.values())
    top = elements[-1]
    lemma_set = [x for x in range(top + 1) if contains(S, x) and not contains(S, x - s)]
    if lemma_set != elements:
        raise InternalInvariantError(
            f"Apery characterizations disagree for {S!r}, s={s}: {elements} vs {lemma_set}"
        )
    return elements


def selmer_invariants(S: NumericalSemigroup, s: int) -> InvariantReport:
    """Frobenius number and genus from Ap(S, s), checked against the gap scan.

    f = max Ap(S, s) - s and g = (sum of Ap(S, s)) / s - (s - 1) / 2.  Note
    the minus sign in the genus term; the formula occasionally appears in
    print with the sign flipped, which already fails on small examples.
    """
    ap = apery_bruteforce(S, s)
    frobenius = ap[-1] - s
    numerator = 2 * sum(ap) - s * (s - 1)
    if numerator % (2 * s):
        raise InternalInvariantError(f"Selmer genus is not an integer for {S!r}, s={s}")
    genus = numerator // (2 * s)
    gap_list = gaps(S)
    if genus != len(gap_list):
        raise InternalInvariantError(
            f"Selmer genus {genus} != gap count {len(gap_list)} for {S!r}"
        )
    if frobenius != (gap_list[-1] if gap_list else -1):
        raise InternalInvariantError(
            f"Selmer Frobenius {frobenius} disagrees with gap scan for {S!r}"
        )
    return InvariantReport(
        frobenius=frobenius,
        genus=genus,
        gaps=tuple(gap_list),
        symmetric=2 * genus == frobenius + 1,
    )


def leq_S(S: NumericalSemigroup, x: int, y: int) -> bool:
    """Divisibility-style partial order: x <=_S y iff y - x is in S."""
    return contains(S, y - x)


def pf_bruteforce(S: NumericalSemigroup) -> list[int]:
    """Pseudo-Frobenius numbers: x not in S with x + s in S for all nonzero s in S.

    It suffices to add generators.  For S = Z>=0 (no gaps) the answer is
    {-1}, matching the f = -1 convention.
    """
    gap_list = gaps(S)
    if not gap_list:
        return [-1]
    gens = S.generators
    return [x for x in gap_list if all(contains(S, x + a) for a in gens)]


def typeset_bruteforce(S: NumericalSemigroup) -> list[int]:
    """T(S) = {m in Ap(S, a_k) : m + a_i not in Ap(S, a_k) for every i}."""
    if len(S.generators) < 2:
        raise ValueError("the type set needs at least two generators")
    ak = S.generators[-1]
    ap = set(apery_bruteforce(S, ak))
    return sorted(m for m in ap if all(m + a not in ap for a in S.generators))


def hasse_diagram(S: NumericalSemigroup, s: int) -> list[tuple[int, int]]:
    """Covering relations of <=_S restricted to Ap(S, s), as (lower, upper) pairs.

    The sinks of the resulting DAG for s = a_k are exactly the type set.
    """
    nodes = apery_bruteforce(S, s)
    below = {
        (x, y) for x in nodes for y in nodes if x != y and contains(S, y - x)
    }
    return sorted(
        (x, y)
        for (x, y) in below
        if not any((x, z) in below and (z, y) in below for z in nodes)
    )
