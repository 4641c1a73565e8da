"""Pseudo-Frobenius detection through simplicial homology.

For a in S, the complex on the generator indices whose faces F satisfy
a - sum(a_i, i in F) in S carries the syzygy information of the monoid.
The fact used here: x is pseudo-Frobenius exactly when the complex of
a = x + a_1 + ... + a_k has the reduced rational homology of a
(k-2)-sphere, i.e. rank one in degree k-2 and zero elsewhere.  That gives
a membership test for PF(S) that shares nothing with the other two
computations in this package, which is the point.

Ranks are computed by fraction-free Gaussian elimination over the
integers, so every number in sight is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .semigroup import NumericalSemigroup, contains, gaps

Face = frozenset


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    faces: frozenset[Face]


def build_delta(S: NumericalSemigroup, a: int) -> SimplicialComplex:
    """Faces F of {1..k} with a - sum of the picked generators in S.

    All 2^k subsets are tested directly against the membership oracle; the
    family is downward closed because S is closed under addition, but that
    is verified where it matters rather than assumed here.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    gens = S.generators
    k = len(gens)
    faces = []
    for r in range(k + 1):
        for combo in combinations(range(1, k + 1), r):
            rest = a - sum(gens[i - 1] for i in combo)
            if contains(S, rest):
                faces.append(Face(combo))
    return SimplicialComplex(vertex_count=k, faces=frozenset(faces))


def _rank_fraction_free(rows: list[list[int]]) -> int:
    """Rank over Q by Bareiss elimination; all intermediates stay integers."""
    if not rows or not rows[0]:
        return 0
    mat = [row[:] for row in rows]
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank][col]
        for r in range(rank + 1, n_rows):
            factor = mat[r][col]
            mat[r] = [
                (p * x - factor * y) // prev
                for x, y in zip(mat[r], mat[rank])
            ]
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def reduced_homology_ranks(C: SimplicialComplex) -> tuple[int, ...]:
    """Ranks of the reduced rational homology in degrees -1 .. k-1.

    The chain complex is augmented: the empty face spans degree -1, faces
    of size i+1 span degree i.  The face family must be downward closed
    for the boundary maps to make sense; a violation raises ValueError.
    """
    k = C.vertex_count
    faces = C.faces
    for f in faces:
        for v in f:
            if f - {v} not in faces:
                raise ValueError(f"face family is not downward closed at {sorted(f)}")
    by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(k + 1)]
    for f in faces:
        by_dim[len(f)].append(tuple(sorted(f)))
    for bucket in by_dim:
        bucket.sort()
    index = [{f: i for i, f in enumerate(bucket)} for bucket in by_dim]

    def boundary_rank(i: int) -> int:
        # map from degree-i chains (faces of size i+1) to degree i-1
        cols = by_dim[i + 1]
        rows_n = len(by_dim[i])
        if not cols or not rows_n:
            return 0
        matrix = [[0] * len(cols) for _ in range(rows_n)]
        for c, face in enumerate(cols):
            for pos, v in enumerate(face):
                sub = face[:pos] + face[pos + 1 :]
                matrix[index[i][sub]][c] = -1 if pos % 2 else 1
        return _rank_fraction_free(matrix)

    ranks = []
    for i in range(-1, k):
        dim_i = len(by_dim[i + 1])
        rank_in = boundary_rank(i) if i >= 0 else 0
        rank_out = boundary_rank(i + 1) if i + 1 <= k - 1 else 0
        ranks.append(dim_i - rank_in - rank_out)
    return tuple(ranks)


def pf_via_homology(S: NumericalSemigroup) -> list[int]:
    """PF(S) found purely by the sphere-homology test over the gap list."""
    gens = S.generators
    k = len(gens)
    if k < 2:
        raise ValueError("the homology route needs at least two generators")
    total = sum(gens)
    sphere = tuple(1 if i == k - 1 else 0 for i in range(k + 1))
    out = []
    for a in gaps(S):
        complex_ = build_delta(S, a + total)
        if reduced_homology_ranks(complex_) == sphere:
            out.append(a)
    return out
