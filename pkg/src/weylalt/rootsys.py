"""Rank-2 root system data and Weyl groups.

Everything is expressed in the basis of simple roots (alpha1, alpha2) with
exact rational coordinates.  The five simple rank-2 types are supported:
A2, B2, C2, D2 (= A1 x A1) and G2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, List, Tuple

Weight = Tuple[Q, Q]  # coordinates in the simple-root basis
Matrix = Tuple[Tuple[Q, Q], Tuple[Q, Q]]  # columns act on root-basis vectors

ALGEBRAS = ("A2", "B2", "C2", "D2", "G2")


def _w(a, b) -> Weight:
    return (Q(a), Q(b))


def _m(a, b, c, d) -> Matrix:
    """Matrix with rows (a, b), (c, d)."""
    return ((Q(a), Q(b)), (Q(c), Q(d)))


# Simple reflections as matrices on root-basis column vectors.  Column j is
# the image of alpha_j.
_GENERATORS: Dict[str, Tuple[Matrix, Matrix]] = {
    "A2": (_m(-1, 1, 0, 1), _m(1, 0, 1, -1)),
    "B2": (_m(-1, 1, 0, 1), _m(1, 0, 2, -1)),
    "C2": (_m(-1, 2, 0, 1), _m(1, 0, 1, -1)),
    "D2": (_m(-1, 0, 0, 1), _m(1, 0, 0, -1)),
    "G2": (_m(-1, 3, 0, 1), _m(1, 0, 1, -1)),
}

# Positive roots, root-basis coordinates, simple roots first.
_POSITIVE_ROOTS: Dict[str, Tuple[Weight, ...]] = {
    "A2": (_w(1, 0), _w(0, 1), _w(1, 1)),
    "B2": (_w(1, 0), _w(0, 1), _w(1, 1), _w(1, 2)),
    "C2": (_w(1, 0), _w(0, 1), _w(1, 1), _w(2, 1)),
    "D2": (_w(1, 0), _w(0, 1)),
    "G2": (_w(1, 0), _w(0, 1), _w(1, 1), _w(2, 1), _w(3, 1), _w(3, 2)),
}

# Fundamental weights in root-basis coordinates.
_FUNDAMENTAL: Dict[str, Tuple[Weight, Weight]] = {
    "A2": (_w(Q(2, 3), Q(1, 3)), _w(Q(1, 3), Q(2, 3))),
    "B2": (_w(1, 1), _w(Q(1, 2), 1)),
    "C2": (_w(1, Q(1, 2)), _w(1, 1)),
    "D2": (_w(Q(1, 2), 0), _w(0, Q(1, 2))),
    "G2": (_w(2, 1), _w(3, 2)),
}

_GROUP_ORDER = {"A2": 6, "B2": 8, "C2": 8, "D2": 4, "G2": 12}


@dataclass(frozen=True)
class WeylElement:
    """One Weyl group element: reduced word over {1, 2} plus its matrix."""

    word: Tuple[int, ...]
    matrix: Matrix

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        """Determinant (-1)^length of the reflection word."""
        return -1 if self.length % 2 else 1

    def name(self) -> str:
        if not self.word:
            return "e"
        return "".join(f"s{i}" for i in self.word)


def check_algebra(alg: str) -> str:
    if alg not in ALGEBRAS:
        raise ValueError(f"unknown algebra {alg!r}; expected one of {ALGEBRAS}")
    return alg


def positive_roots(alg: str) -> Tuple[Weight, ...]:
    return _POSITIVE_ROOTS[check_algebra(alg)]


def simple_roots(alg: str) -> Tuple[Weight, Weight]:
    check_algebra(alg)
    return (_w(1, 0), _w(0, 1))


def fundamental_weights(alg: str) -> Tuple[Weight, Weight]:
    return _FUNDAMENTAL[check_algebra(alg)]


def rho(alg: str) -> Weight:
    """Half the sum of the positive roots (= sum of fundamental weights)."""
    w1, w2 = fundamental_weights(alg)
    return (w1[0] + w2[0], w1[1] + w2[1])


def generator_matrix(alg: str, i: int) -> Matrix:
    if i not in (1, 2):
        raise ValueError(f"generator index must be 1 or 2, got {i}")
    return _GENERATORS[check_algebra(alg)][i - 1]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_apply(m: Matrix, v: Weight) -> Weight:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


IDENTITY: Matrix = _m(1, 0, 0, 1)


def _build_group(alg: str) -> Tuple[WeylElement, ...]:
    # Breadth-first closure over the two generators.  Words are extended on
    # the right and visited in (length, lexicographic) order, so the first
    # word seen for each matrix is the canonical reduced word.
    gens = _GENERATORS[alg]
    seen: Dict[Matrix, Tuple[int, ...]] = {IDENTITY: ()}
    frontier: List[Tuple[Tuple[int, ...], Matrix]] = [((), IDENTITY)]
    elements = [WeylElement((), IDENTITY)]
    while frontier:
        next_frontier: List[Tuple[Tuple[int, ...], Matrix]] = []
        for word, mat in frontier:
            for i in (1, 2):
                new_word = word + (i,)
                new_mat = mat_mul(mat, gens[i - 1])
                if new_mat in seen:
                    continue
                seen[new_mat] = new_word
                next_frontier.append((new_word, new_mat))
        next_frontier.sort(key=lambda wm: wm[0])
        elements.extend(WeylElement(w, m) for w, m in next_frontier)
        frontier = next_frontier
    return tuple(elements)


_GROUP_CACHE: Dict[str, Tuple[WeylElement, ...]] = {}


def weyl_group(alg: str) -> Tuple[WeylElement, ...]:
    """All Weyl group elements, ordered by (length, lexicographic word)."""
    check_algebra(alg)
    if alg not in _GROUP_CACHE:
        group = _build_group(alg)
        assert len(group) == _GROUP_ORDER[alg]
        _GROUP_CACHE[alg] = group
    return _GROUP_CACHE[alg]


def apply_element(sigma: WeylElement, v: Weight) -> Weight:
    return mat_apply(sigma.matrix, v)


def element_by_word(alg: str, word: Tuple[int, ...]) -> WeylElement:
    """Resolve any word over {1, 2} to its canonical group element."""
    mat = IDENTITY
    for i in word:
        mat = mat_mul(mat, generator_matrix(alg, i))
    for el in weyl_group(alg):
        if el.matrix == mat:
            return el
    raise AssertionError("unreachable: closed group")


def inverse_element(alg: str, sigma: WeylElement) -> WeylElement:
    """The group inverse (the element whose matrix composes to identity)."""
    for el in weyl_group(alg):
        if mat_mul(el.matrix, sigma.matrix) == IDENTITY:
            return el
    raise ValueError(f"{sigma} is not an element of W({alg})")


def element_index(alg: str, sigma: WeylElement) -> int:
    for k, el in enumerate(weyl_group(alg)):
        if el.matrix == sigma.matrix:
            return k
    raise ValueError(f"{sigma} is not an element of W({alg})")
