"""Generalized Cartan matrices: validation, sub-diagrams, finite type."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from weylfaces.errors import GcmViolation, NotSymmetrizable
from weylfaces.linalg import determinant, rank, rref


@dataclass(frozen=True)
class CartanData:
    """A validated generalized Cartan matrix.

    Nodes are the indices ``0 .. n-1``; ``labels`` only affect I/O.
    Simple roots are the coordinate axes of the root-offset space used by
    :class:`weylfaces.weyl.Weight`.
    """

    matrix: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    rank_A: int
    realization_dim: int
    _finite_cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def nodes(self) -> frozenset[int]:
        return frozenset(range(self.n))

    @property
    def corank(self) -> int:
        return self.n - self.rank_A

    def a(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def neighbours(self, i: int) -> frozenset[int]:
        return frozenset(j for j in range(self.n) if j != i and self.matrix[i][j] != 0)

    def connected_to(self, i: int, subset: Iterable[int]) -> bool:
        return any(j != i and self.matrix[i][j] != 0 for j in subset)

    def node(self, ref) -> int:
        """Resolve a label (str) or a 0-based index (int) to an index."""
        if isinstance(ref, bool):
            raise TypeError("node reference cannot be a bool")
        if isinstance(ref, int):
            if not 0 <= ref < self.n:
                raise ValueError(f"node index {ref} out of range")
            return ref
        try:
            return self.labels.index(str(ref))
        except ValueError:
            raise ValueError(f"unknown node label {ref!r}") from None

    def subset(self, refs: Iterable) -> frozenset[int]:
        return frozenset(self.node(r) for r in refs)

    def label_list(self, subset: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in sorted(subset)]

    @cached_property
    def realization_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Pairing matrix ``[A | B]`` of a fixed realization of h*.

        Coordinates on h* are taken in the basis (alpha_1..alpha_n,
        Lambda_1..Lambda_c) with c = corank; row i lists the values of the
        coroot i on that basis.  B consists of unit columns picked greedily
        so that the coroots become linearly independent.
        """
        extra: list[int] = []
        current = self.rank_A
        for m in range(self.n):
            if current == self.n:
                break
            trial = [
                list(self.matrix[k]) + [1 if k == e else 0 for e in extra + [m]]
                for k in range(self.n)
            ]
            r = rank(trial)
            if r > current:
                extra.append(m)
                current = r
        return tuple(
            tuple(self.matrix[k]) + tuple(1 if k == e else 0 for e in extra) for k in range(self.n)
        )


def validate_gcm(matrix: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> CartanData:
    n = len(matrix)
    rows = []
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise GcmViolation(i, None, "matrix is not square")
        out = []
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int):
                if isinstance(x, Fraction) and x.denominator == 1:
                    x = int(x)
                else:
                    raise GcmViolation(i, j, "entry is not an integer")
            out.append(x)
        rows.append(tuple(out))
    for i in range(n):
        for j in range(n):
            a = rows[i][j]
            if i == j:
                if a != 2:
                    raise GcmViolation(i, j, "a_ii must equal 2")
                continue
            if a > 0:
                raise GcmViolation(i, j, "a_ij must be <= 0 off the diagonal")
            if a == 0 and rows[j][i] != 0:
                raise GcmViolation(i, j, "a_ij=0 but a_ji≠0")
    if labels is None:
        labels = [str(i + 1) for i in range(n)]
    labels = tuple(str(x) for x in labels)
    if len(labels) != n or len(set(labels)) != n:
        raise ValueError("labels must be distinct and one per node")
    r = rank(rows) if n else 0
    return CartanData(matrix=tuple(rows), labels=labels, rank_A=r, realization_dim=2 * n - r)


def components(c: CartanData, J: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the sub-diagram on J, ordered by smallest node."""
    remaining = set(J)
    out = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        remaining.discard(start)
        while stack:
            i = stack.pop()
            for j in list(remaining):
                if c.matrix[i][j] != 0:
                    remaining.discard(j)
                    comp.add(j)
                    stack.append(j)
        out.append(frozenset(comp))
    return out


def symmetrizer(c: CartanData, J: Iterable[int]) -> dict[int, Fraction]:
    """Positive d_j with d_i a_ij = d_j a_ji on J, normalised to 1 at each component root."""
    d: dict[int, Fraction] = {}
    for comp in components(c, J):
        root = min(comp)
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in comp:
                if j == i or c.matrix[i][j] == 0:
                    continue
                dj = d[i] * c.matrix[i][j] / c.matrix[j][i]
                if j not in d:
                    d[j] = dj
                    stack.append(j)
                elif d[j] != dj:
                    raise NotSymmetrizable(f"no symmetrizer on component {sorted(comp)}")
    return d


def is_finite_type(c: CartanData, J: Iterable[int] | None = None) -> bool:
    """Positive definiteness of D_J A_J via leading principal minors."""
    J = c.nodes if J is None else frozenset(J)
    cached = c._finite_cache.get(J)
    if cached is not None:
        return cached
    d = symmetrizer(c, J)
    idx = sorted(J)
    sym = [[d[i] * c.matrix[i][j] for j in idx] for i in idx]
    result = all(determinant([row[:k] for row in sym[:k]]) > 0 for k in range(1, len(idx) + 1))
    c._finite_cache[J] = result
    return result


def principal_rank(c: CartanData, J: Iterable[int]) -> int:
    idx = sorted(J)
    if not idx:
        return 0
    return len(rref([[c.matrix[i][j] for j in idx] for i in idx])[1])
