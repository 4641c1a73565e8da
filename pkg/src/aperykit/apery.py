"""Apery sets, gap classification, extremal elements and the type set,
all read off reduced bases of the defining binomial ideal.

The central fact: under an elimination ordering for x, the normal form of
x^l is a monomial whose exponent vector tells you where l lives.  A
positive x-coordinate means l is a gap; an x-free exponent encodes a
factorization of l over the generators.  Under the four-layer orderings
of :func:`aperykit.orders.apery_order` more is true: l belongs to
Ap(S, a_j) exactly when the normal form of x^l avoids both x and y_j.
That equivalence is what this module executes, and what the oracle-based
tests validate from the definitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InternalInvariantError, OrderNotEliminationError, ScanLimitError
from .groebner import (
    GroebnerBasis,
    PackedReducer,
    buchberger,
    divides,
    ideal_generators,
    phi_degree,
    unpack_exponent,
)
from .orders import apery_order, is_elimination_for_x
from .semigroup import NumericalSemigroup, max_scan_limit

Exponent = tuple[int, ...]

_FIELD = (1 << 64) - 1


@dataclass(frozen=True)
class AperyReport:
    """Ap(S, a_j) with, per element, its normal-form exponent vector.

    Representations are x-free and y_j-free by construction; the weighted
    degree of each representation recovers the element itself.
    """

    generators: tuple[int, ...]
    wrt: int
    elements: tuple[int, ...]
    representations: dict[int, Exponent]
    order_used: str


@dataclass(frozen=True)
class TypeReport:
    """Type set, pseudo-Frobenius numbers and the per-ordering extremal sets."""

    type_set: tuple[int, ...]
    pf: tuple[int, ...]
    type: int
    gorenstein: bool
    extremal_sets: dict[str, tuple[int, ...]]


class Classification(NamedTuple):
    in_monoid: bool
    exponent: Exponent


def classify(S: NumericalSemigroup, l: int, basis: GroebnerBasis) -> Classification:
    """Decide membership of l via the normal form of x^l.

    Returns the normal-form exponent alongside the verdict: membership
    exactly when its x-coordinate vanishes.
    """
    if not is_elimination_for_x(basis.order):
        raise OrderNotEliminationError(
            f"ordering {basis.order.label!r} does not eliminate x"
        )
    if not 0 <= l <= max_scan_limit():
        raise ValueError(f"l must be in 0..APERYKIT_MAX_SCAN, got {l}")
    m = basis.order.num_vars
    reducer = PackedReducer.for_basis(basis)
    e = unpack_exponent(reducer.reduce_packed(l), m)  # x^l packs to the integer l
    return Classification(in_monoid=e[0] == 0, exponent=e)


def gaps_via_groebner(S: NumericalSemigroup, basis: GroebnerBasis) -> list[int]:
    """Gap list recovered by classifying x^l for l = 1 .. f(S).

    The Frobenius bound comes from an Apery computation with respect to
    the smallest generator (f = max Ap(S, a_1) - a_1), keeping this path
    free of the brute-force oracle.
    """
    if not is_elimination_for_x(basis.order):
        raise OrderNotEliminationError(
            f"ordering {basis.order.label!r} does not eliminate x"
        )
    report = apery_delta(S, 1)
    frobenius = report.elements[-1] - S.generators[0]
    m = basis.order.num_vars
    reducer = PackedReducer.for_basis(basis)
    out = []
    v = 0
    for l in range(1, frobenius + 1):
        v = reducer.reduce_packed(v + 1)
        if v & _FIELD:
            out.append(l)
    return out


def _delta_scan(S, j, basis, reducer) -> dict[int, Exponent]:
    """Walk l = 0, 1, 2, ... collecting the Apery elements of a_j.

    The normal form of x^l is maintained incrementally (bump x, rewrite),
    and an element is recorded when its exponent avoids x and y_j.  One
    element per residue class mod a_j exists, so the walk stops after a_j
    hits; a repeated residue class would falsify the theory and raises.
    """
    aj = S.generators[j - 1]
    m = basis.order.num_vars
    face_mask = _FIELD | (_FIELD << (64 * j))
    limit = max_scan_limit()
    found: dict[int, tuple[int, Exponent]] = {}
    v = 0
    l = 0
    while len(found) < aj:
        if l:
            v = reducer.reduce_packed(v + 1)
        if v & face_mask == 0:
            r = l % aj
            if r in found:
                raise InternalInvariantError(
                    f"residue class {r} mod {aj} filled twice during the scan"
                )
            found[r] = (l, unpack_exponent(v, m))
        l += 1
        if l > limit:
            raise ScanLimitError(f"Apery scan exceeded APERYKIT_MAX_SCAN={limit}")
    return {element: e for element, e in found.values()}


def _delta_direct(S, j, basis) -> dict[int, Exponent]:
    """Enumerate the staircase-complement points of the {x = y_j = 0} face.

    The face complement is downward closed, so a breadth-first walk from
    the origin that stops at corner-divisible points visits exactly the
    complement.  Finiteness has a certificate: every free variable has a
    pure-power corner (a relation y_i^u = (multiple of a_j) exists, and
    its lead must appear in the staircase), which the code checks before
    walking.
    """
    gens = S.generators
    k = len(gens)
    m = k + 1
    free_cols = [c for c in range(1, m) if c != j]
    face_corners = [
        q for q in basis.corners if q[0] == 0 and q[j] == 0
    ]
    for c in free_cols:
        if not any(q[c] and all(q[d] == 0 for d in range(m) if d != c) for q in face_corners):
            raise InternalInvariantError(
                f"no pure-power corner bounds variable {c}; complement may be infinite"
            )
    out: dict[int, Exponent] = {}
    seen = {(0,) * m}
    frontier = [(0,) * m]
    while frontier:
        point = frontier.pop()
        out[phi_degree(point, gens)] = point
        for c in free_cols:
            nxt = point[:c] + (point[c] + 1,) + point[c + 1 :]
            if nxt in seen:
                continue
            seen.add(nxt)
            if not any(divides(q, nxt) for q in face_corners):
                frontier.append(nxt)
    return out


def apery_delta(
    S: NumericalSemigroup,
    j: int,
    inner=None,
    flavor: str = "lex",
    method: str = "scan",
    basis: GroebnerBasis | None = None,
) -> AperyReport:
    """Ap(S, a_j) computed through a reduced basis under an Apery ordering.

    ``inner``/``flavor`` choose the tie-break layer of the ordering; the
    element set provably does not depend on them, only the representations
    do.  ``method="scan"`` (default) classifies x^l for increasing l until
    every residue class mod a_j is filled; ``method="direct"`` enumerates
    the staircase-complement face instead (same answer, different route).
    A prebuilt ``basis`` for the matching ordering may be supplied to skip
    the Buchberger run.
    """
    gens = S.generators
    k = len(gens)
    if not 1 <= j <= k:
        raise ValueError(f"j must be in 1..{k}, got {j}")
    if method not in ("scan", "direct"):
        raise ValueError(f"unknown method {method!r}")
    order = apery_order(k, j, gens, inner=inner, flavor=flavor)
    if basis is None:
        basis = buchberger(ideal_generators(S, order), order)
    elif basis.order.label != order.label:
        raise ValueError(
            f"supplied basis was built for {basis.order.label!r}, need {order.label!r}"
        )
    if method == "scan":
        reps = _delta_scan(S, j, basis, PackedReducer.for_basis(basis))
    else:
        reps = _delta_direct(S, j, basis)
    aj = gens[j - 1]
    elements = tuple(sorted(reps))
    _check_report_invariants(gens, aj, elements, reps, j)
    return AperyReport(
        generators=gens,
        wrt=aj,
        elements=elements,
        representations=reps,
        order_used=order.label,
    )


def _check_report_invariants(gens, aj, elements, reps, j):
    if len(elements) != aj:
        raise InternalInvariantError(
            f"expected {aj} Apery elements, found {len(elements)}"
        )
    if len({e % aj for e in elements}) != aj or 0 not in elements:
        raise InternalInvariantError("Apery residues are not a full system")
    for element, rep in reps.items():
        if rep[0] != 0 or rep[j] != 0:
            raise InternalInvariantError(f"representation of {element} touches x or y_j")
        if phi_degree(rep, gens) != element:
            raise InternalInvariantError(
                f"representation of {element} has degree {phi_degree(rep, gens)}"
            )


def extremal_set(
    S: NumericalSemigroup, report: AperyReport, basis: GroebnerBasis
) -> list[int]:
    """Apery elements whose representation admits no growth inside the face.

    N stays when bumping any non-eliminated coordinate of its normal-form
    exponent lands inside the staircase, i.e. the bumped vector is
    divisible by a corner.  Only corner-divisibility is consulted, one
    check per coordinate per element.
    """
    if report.order_used != basis.order.label:
        raise ValueError("report and basis were built under different orderings")
    if report.wrt != S.generators[-1]:
        raise ValueError("extremal sets are defined with respect to a_k")
    k = len(S.generators)
    corners = list(basis.corners)
    out = []
    for element in report.elements:
        rep = report.representations[element]
        for i in range(1, k):
            bumped = rep[:i] + (rep[i] + 1,) + rep[i + 1 :]
            if not any(divides(q, bumped) for q in corners):
                break
        else:
            out.append(element)
    return out


def _rotation_sequence(k: int, i: int) -> tuple[int, ...]:
    """Tie-break sequence whose reverse-lex reading makes y_i decisive."""
    return tuple([p for p in range(1, k) if p != i] + [i])


def type_set(S: NumericalSemigroup, extra_orders=()) -> TypeReport:
    """Type set as the intersection of extremal sets over k-1 orderings.

    For each i < k the Apery ordering with the reverse-lex layer ending at
    y_i flushes out pretenders N with N + a_i still in the Apery set; the
    intersection over all i is exactly the type set.  ``extra_orders`` may
    add more (inner, flavor) tie-break choices to intersect; they cannot
    change the result, since the type set is contained in every extremal
    set, but they are useful for cross-checking.
    """
    gens = S.generators
    k = len(gens)
    if k < 2:
        raise ValueError("the type set needs at least two generators")
    ak = gens[-1]
    extremal: dict[str, tuple[int, ...]] = {}
    running: set[int] | None = None
    choices = [(_rotation_sequence(k, i), "revlex") for i in range(1, k)]
    choices.extend(extra_orders)
    for inner, flavor in choices:
        order = apery_order(k, k, gens, inner=inner, flavor=flavor)
        basis = buchberger(ideal_generators(S, order), order)
        report = apery_delta(S, k, inner=inner, flavor=flavor, basis=basis)
        part = extremal_set(S, report, basis)
        extremal[order.label] = tuple(part)
        running = set(part) if running is None else running & set(part)
    ts = tuple(sorted(running))
    return TypeReport(
        type_set=ts,
        pf=tuple(m - ak for m in ts),
        type=len(ts),
        gorenstein=len(ts) == 1,
        extremal_sets=extremal,
    )
