"""Weyl group actions on weights, orbits and parabolic indices.

Word convention: a word ``(u1, ..., uk)`` stands for the group element
``s_u1 s_u2 ... s_uk``.  ``apply_word`` therefore applies ``s_uk`` first.
``to_dominant`` returns the reflections in the order they were applied, so
``apply_word(c, word, dominant) == original``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from weylfaces import config
from weylfaces.cartan import CartanData, components, is_finite_type
from weylfaces.errors import CapExceeded, NotDominant
from weylfaces.extpoly import INF
from weylfaces.linalg import frac_vector

Offset = tuple  # tuple[Fraction, ...]


@dataclass(frozen=True)
class Weight:
    """The point ``lambda_base - sum_i offset_i alpha_i`` of h*.

    ``base`` holds the pairings of the reference weight with the simple
    coroots.  Keeping the root offset separately keeps the Weyl action
    faithful when the Cartan matrix is singular.
    """

    base: tuple
    offset: tuple

    def __post_init__(self):
        object.__setattr__(self, "base", frac_vector(self.base))
        object.__setattr__(self, "offset", frac_vector(self.offset))
        if len(self.base) != len(self.offset):
            raise ValueError("base and offset must have the same length")

    @classmethod
    def from_pairings(cls, pairings: Sequence) -> "Weight":
        p = frac_vector(pairings)
        return cls(p, (Fraction(0),) * len(p))

    @classmethod
    def rho(cls, n: int) -> "Weight":
        return cls.from_pairings([1] * n)

    @property
    def n(self) -> int:
        return len(self.base)

    def pairings(self, c: CartanData) -> tuple:
        m = c.matrix
        x = self.offset
        return tuple(
            b - sum(m[i][j] * x[j] for j in range(len(x)) if x[j]) for i, b in enumerate(self.base)
        )

    def pairing(self, c: CartanData, i: int) -> Fraction:
        row = c.matrix[i]
        return self.base[i] - sum(row[j] * x for j, x in enumerate(self.offset) if x)

    def with_offset(self, offset: Sequence) -> "Weight":
        return Weight(self.base, offset)

    def lower(self, beta: Sequence) -> "Weight":
        """``self - sum beta_i alpha_i``."""
        return Weight(self.base, tuple(x + Fraction(b) for x, b in zip(self.offset, beta)))

    def rebased(self, c: CartanData) -> "Weight":
        """Same point, expressed with zero offset (only faithful for invertible A)."""
        return Weight.from_pairings(self.pairings(c))


def reflect(c: CartanData, i: int, w: Weight) -> Weight:
    p = w.pairing(c, i)
    if p == 0:
        return w
    off = list(w.offset)
    off[i] += p
    return Weight(w.base, tuple(off))


def apply_word(c: CartanData, word: Sequence[int], w: Weight) -> Weight:
    for i in reversed(word):
        w = reflect(c, i, w)
    return w


def inverse_word(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(word))


def reflect_root(c: CartanData, i: int, beta: Sequence) -> tuple:
    """s_i on a vector given in simple-root coordinates."""
    row = c.matrix[i]
    p = sum(row[k] * b for k, b in enumerate(beta) if b)
    if p == 0:
        return tuple(beta)
    out = list(beta)
    out[i] -= p
    return tuple(out)


def apply_word_root(c: CartanData, word: Sequence[int], beta: Sequence) -> tuple:
    beta = tuple(beta)
    for i in reversed(word):
        beta = reflect_root(c, i, beta)
    return beta


def reflect_coweight(c: CartanData, j: int, v: Sequence) -> tuple:
    """s_j on a coweight given by its pairings with the simple roots."""
    vj = v[j]
    if vj == 0:
        return tuple(v)
    row = c.matrix[j]
    return tuple(x - vj * row[k] for k, x in enumerate(v))


def apply_word_coweight(c: CartanData, word: Sequence[int], v: Sequence) -> tuple:
    v = tuple(v)
    for j in reversed(word):
        v = reflect_coweight(c, j, v)
    return v


def is_dominant(c: CartanData, J: Iterable[int], w: Weight) -> bool:
    return all(w.pairing(c, j) >= 0 for j in J)


def descend(
    c: CartanData,
    J: Iterable[int],
    w: Weight,
    cap: int | None = None,
    floor: Sequence | None = None,
):
    """Reflection descent to the J-dominant chamber.

    Reflects at the smallest j in J with negative pairing.  Returns
    ``(dominant, word)``.  When ``floor`` is given and some offset
    coordinate drops strictly below it, returns ``None`` instead: offsets
    only decrease along the descent, so the dominant representative (if it
    exists) also lies below the floor.
    """
    cap = config.dominance_cap(cap)
    Js = sorted(set(J))
    m = c.matrix
    off = list(w.offset)
    pairs = list(w.pairings(c))
    word: list[int] = []
    if floor is not None and any(a < b for a, b in zip(off, floor)):
        return None
    while True:
        j = next((j for j in Js if pairs[j] < 0), None)
        if j is None:
            return Weight(w.base, tuple(off)), word
        if len(word) >= cap:
            raise CapExceeded("dominance descent", cap)
        p = pairs[j]
        off[j] += p
        for k in range(len(pairs)):
            a = m[k][j]
            if a:
                pairs[k] -= p * a
        word.append(j)
        if floor is not None and off[j] < floor[j]:
            return None


def to_dominant(c: CartanData, J: Iterable[int], w: Weight, cap: int | None = None):
    """J-dominant representative of ``w`` and the reflections applied."""
    return descend(c, J, w, cap)


@dataclass
class OrbitReport:
    """BFS closure of a weight under the simple reflections in J.

    ``words[offset]`` is a shortest word taking the start point to that
    offset (so it is reduced and a minimal coset representative).
    """

    base: tuple
    words: dict = field(default_factory=dict)
    truncated: bool = False

    @property
    def points(self) -> list:
        return list(self.words)

    def __len__(self):
        return len(self.words)

    def weights(self) -> list[Weight]:
        return [Weight(self.base, off) for off in self.words]


def orbit(c: CartanData, J: Iterable[int], w: Weight, cap: int | None = None) -> OrbitReport:
    cap = config.orbit_cap(cap)
    Js = sorted(set(J))
    m = c.matrix
    n = c.n
    start = tuple(w.offset)
    report = OrbitReport(base=w.base, words={start: ()})
    queue = deque([(start, tuple(w.pairings(c)))])
    while queue:
        off, pairs = queue.popleft()
        word = report.words[off]
        for j in Js:
            p = pairs[j]
            if p == 0:
                continue
            new_off = off[:j] + (off[j] + p,) + off[j + 1 :]
            if new_off in report.words:
                continue
            if len(report.words) >= cap:
                report.truncated = True
                return report
            new_pairs = tuple(pairs[k] - p * m[k][j] for k in range(n))
            report.words[new_off] = (j,) + word
            queue.append((new_off, new_pairs))
    return report


def orbit_is_finite(c: CartanData, J: Iterable[int], w: Weight, cap: int | None = None) -> bool:
    """Finite W_J-orbit test without enumeration.

    The orbit is finite iff each infinite-type component of J pairs to zero
    with the J-dominant representative.
    """
    J = frozenset(J)
    dom, _ = to_dominant(c, J, w, cap)
    pairs = dom.pairings(c)
    for comp in components(c, J):
        if not is_finite_type(c, comp) and any(pairs[j] != 0 for j in comp):
            return False
    return True


def stabilizer_nodes(c: CartanData, J: Iterable[int], w: Weight) -> frozenset[int]:
    pairs = w.pairings(c)
    J = frozenset(J)
    bad = [j for j in J if pairs[j] < 0]
    if bad:
        raise NotDominant(f"negative pairing at nodes {sorted(bad)}")
    return frozenset(j for j in J if pairs[j] == 0)


def in_tits_cone_interior(c: CartanData, J: Iterable[int], w: Weight, cap: int | None = None) -> bool:
    J = frozenset(J)
    dom, _ = to_dominant(c, J, w, cap)
    return is_finite_type(c, stabilizer_nodes(c, J, dom))


def marker(c: CartanData, zero: Iterable[int], one: Iterable[int]) -> Weight:
    """Weight with pairing 1 on ``one`` and 0 everywhere else (``zero`` is for readability)."""
    one = frozenset(one)
    if one & frozenset(zero):
        raise ValueError("marker node sets overlap")
    return Weight.from_pairings([1 if i in one else 0 for i in range(c.n)])


def parabolic_index(c: CartanData, J: Iterable[int], K: Iterable[int], cap: int | None = None):
    """[W_J : W_K] for K a subset of J, as an int or ``INF``."""
    J = frozenset(J)
    K = frozenset(K)
    if not K <= J:
        raise ValueError("K must be a subset of J")
    for comp in components(c, J):
        if not is_finite_type(c, comp) and not comp <= K:
            return INF
    cap = config.orbit_cap(cap)
    rep = orbit(c, J, marker(c, K, J - K), cap)
    if rep.truncated:
        raise CapExceeded("parabolic index orbit", cap)
    return len(rep)


def weyl_group_order(c: CartanData, J: Iterable[int], cap: int | None = None):
    return parabolic_index(c, J, frozenset(), cap)


def group_elements(c: CartanData, J: Iterable[int], cap: int | None = None) -> OrbitReport:
    """Reduced words of the elements of W_J, via the orbit of a J-regular marker."""
    J = frozenset(J)
    return orbit(c, J, marker(c, frozenset(), J), cap)
