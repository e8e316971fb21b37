"""Closed-form membership conditions for Weyl alternation sets.

Each algebra carries a fixed table of affine inequalities in four parameters
and, per Weyl group element, the pair of inequalities equivalent to
membership in A(lambda, mu).  The parameter conventions follow the
coordinate systems in which the inequalities are simplest:

* B2, C2, D2: lambda = c1*omega1 + c2*omega2, mu = n*omega1 + m*omega2,
  parameters (c1, c2, n, m) in fundamental coordinates;
* G2: lambda = c1*alpha1 + c2*alpha2, mu = n*alpha1 + m*alpha2,
  parameters (c1, c2, n, m) in root coordinates (the two lattices agree);
* A2: lambda = (3x + y)*omega1 + y*omega2 (which is exactly the condition
  for lambda - mu to stay in the root lattice), mu = n*alpha1 + m*alpha2,
  parameters (x, y, n, m).

All conditions have the form <coeffs, params> + const >= 0 with exact
rational coefficients; no inequality is ever evaluated in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, Optional, Sequence, Tuple

from .multiplicity import AltSet
from .rootsys import Weight, WeylElement, check_algebra, element_by_word, weyl_group
from .weightlat import FundCoords, in_root_lattice, sl3_param, sub, to_root_basis

Params = Tuple[Q, Q, Q, Q]
Word = Tuple[int, ...]


@dataclass(frozen=True)
class Condition:
    label: str
    coeffs: Params  # over the algebra's (c1, c2, n, m) or (x, y, n, m)
    const: Q

    def value(self, params: Params) -> Q:
        return sum((c * p for c, p in zip(self.coeffs, params)), self.const)

    def holds(self, params: Params) -> bool:
        return self.value(params) >= 0


def _cond(label: str, a, b, c, d, const) -> Condition:
    return Condition(label, (Q(a), Q(b), Q(c), Q(d)), Q(const))


H = Q(1, 2)

_CONDITIONS: Dict[str, Tuple[Condition, ...]] = {
    "A2": (
        _cond("A1", 2, 1, -1, 0, 0),
        _cond("A2", 1, 1, 0, -1, 0),
        _cond("A3", -1, 0, -1, 0, -1),
        _cond("A4", 1, 0, 0, -1, -1),
        _cond("A5", -1, -1, -1, 0, -2),
        _cond("A6", -2, -1, 0, -1, -2),
    ),
    "B2": (
        _cond("J1", 1, H, -1, -H, 0),
        _cond("J2", 1, 1, -1, -1, 0),
        _cond("J3", 0, H, -1, -H, -1),
        _cond("J4", 1, 0, -1, -1, -1),
        _cond("J5", -1, 0, -1, -1, -3),
        _cond("J6", 0, -H, -1, -H, -2),
        _cond("J7", -1, -H, -1, -H, -3),
        _cond("J8", -1, -1, -1, -1, -4),
    ),
    "C2": (
        _cond("L1", 1, 1, -1, -1, 0),
        _cond("L2", H, 1, -H, -1, 0),
        _cond("L3", 0, 1, -1, -1, -1),
        _cond("L4", H, 0, -H, -1, -1),
        _cond("L5", -H, 0, -H, -1, -2),
        _cond("L6", 0, -1, -1, -1, -3),
        _cond("L7", -1, -1, -1, -1, -4),
        _cond("L8", -H, -1, -H, -1, -3),
    ),
    "D2": (
        _cond("D1", H, 0, -H, 0, 0),
        _cond("D2", -H, 0, -H, 0, -1),
        _cond("D3", 0, H, 0, -H, 0),
        _cond("D4", 0, -H, 0, -H, -1),
    ),
    "G2": (
        _cond("K1", 1, 0, -1, 0, 0),
        _cond("K2", 0, 1, 0, -1, 0),
        _cond("K3", -1, 3, -1, 0, -1),
        _cond("K4", 1, -1, 0, -1, -1),
        _cond("K5", 2, -3, -1, 0, -4),
        _cond("K6", -1, 2, 0, -1, -2),
        _cond("K7", -1, 0, -1, 0, -10),
        _cond("K8", 0, -1, 0, -1, -6),
        _cond("K9", 1, -3, -1, 0, -9),
        _cond("K10", -1, 1, 0, -1, -5),
        _cond("K11", -2, 3, -1, 0, -6),
        _cond("K12", 1, -2, 0, -1, -4),
    ),
}

# Per element (by any reduced word), the two conditions equivalent to
# membership.  The first entry is the alpha1 coefficient of
# sigma(lambda + rho) - (mu + rho), the second the alpha2 coefficient.
_MEMBERSHIP: Dict[str, Dict[Word, Tuple[str, str]]] = {
    "A2": {
        (): ("A1", "A2"),
        (1,): ("A3", "A2"),
        (2,): ("A1", "A4"),
        (1, 2): ("A5", "A4"),
        (2, 1): ("A3", "A6"),
        (1, 2, 1): ("A5", "A6"),
    },
    "B2": {
        (): ("J1", "J2"),
        (1,): ("J3", "J2"),
        (2,): ("J1", "J4"),
        (1, 2): ("J6", "J4"),
        (2, 1): ("J3", "J5"),
        (1, 2, 1): ("J7", "J5"),
        (2, 1, 2): ("J6", "J8"),
        (2, 1, 2, 1): ("J7", "J8"),
    },
    "C2": {
        (): ("L1", "L2"),
        (1,): ("L3", "L2"),
        (2,): ("L1", "L4"),
        (1, 2): ("L6", "L4"),
        (2, 1): ("L3", "L5"),
        (1, 2, 1): ("L7", "L5"),
        (2, 1, 2): ("L6", "L8"),
        (2, 1, 2, 1): ("L7", "L8"),
    },
    "D2": {
        (): ("D1", "D3"),
        (1,): ("D2", "D3"),
        (2,): ("D1", "D4"),
        (2, 1): ("D2", "D4"),
    },
    "G2": {
        (): ("K1", "K2"),
        (1,): ("K3", "K2"),
        (2,): ("K1", "K4"),
        (1, 2): ("K5", "K4"),
        (2, 1): ("K3", "K6"),
        (1, 2, 1): ("K11", "K6"),
        (2, 1, 2): ("K5", "K12"),
        (1, 2, 1, 2): ("K9", "K12"),
        (2, 1, 2, 1): ("K11", "K10"),
        (1, 2, 1, 2, 1): ("K7", "K10"),
        (2, 1, 2, 1, 2): ("K9", "K8"),
        (1, 2, 1, 2, 1, 2): ("K7", "K8"),
    },
}


def condition_table(alg: str) -> Tuple[Condition, ...]:
    return _CONDITIONS[check_algebra(alg)]


def condition_by_label(alg: str, label: str) -> Condition:
    for cond in condition_table(alg):
        if cond.label == label:
            return cond
    raise KeyError(f"no condition {label!r} for {alg}")


def serialize_conditions(alg: str) -> str:
    """Plain-text audit form: one line per condition with its exact affine
    coefficients over the algebra's four parameters."""
    names = ("x", "y", "n", "m") if alg == "A2" else ("c1", "c2", "n", "m")
    lines = [f"# {alg}: label, {', '.join(names)}, const"]
    for cond in condition_table(alg):
        parts = [cond.label] + [str(c) for c in cond.coeffs] + [str(cond.const)]
        lines.append(",".join(parts))
    return "\n".join(lines) + "\n"


def _params(alg: str, lam: FundCoords, mu: FundCoords) -> Optional[Params]:
    """Condition-table parameters, or None when lambda - mu leaves the root
    lattice (in which case every partition term vanishes)."""
    if alg == "A2":
        lam_root = to_root_basis(alg, lam)
        n, m = Q(mu[0]), Q(mu[1])  # mu given in root coordinates
        if not in_root_lattice(alg, sub(lam_root, (n, m))):
            return None
        # lambda = (3x + y) omega1 + y omega2; x, y may be rational as long
        # as the lattice gate above holds.
        x = (Q(lam[0]) - Q(lam[1])) / 3
        y = Q(lam[1])
        return (x, y, n, m)
    if alg == "G2":
        vec = (Q(lam[0]), Q(lam[1]), Q(mu[0]), Q(mu[1]))
        if any(v.denominator != 1 for v in vec):
            return None
        return vec
    # B2 / C2 / D2: fundamental coordinates; the gate is that the root-basis
    # coordinates of lambda - mu are integers.
    diff = sub(to_root_basis(alg, lam), to_root_basis(alg, mu))
    if not in_root_lattice(alg, diff):
        return None
    return (Q(lam[0]), Q(lam[1]), Q(mu[0]), Q(mu[1]))


_PAIR_CACHE: Dict[str, Tuple[Tuple[Condition, Condition], ...]] = {}


def _pairs_by_index(alg: str) -> Tuple[Tuple[Condition, Condition], ...]:
    """Membership condition pairs aligned with the canonical group order."""
    if alg not in _PAIR_CACHE:
        group = weyl_group(alg)
        by_matrix = {}
        for word, (l1, l2) in _MEMBERSHIP[alg].items():
            el = element_by_word(alg, word)
            by_matrix[el.matrix] = (
                condition_by_label(alg, l1),
                condition_by_label(alg, l2),
            )
        _PAIR_CACHE[alg] = tuple(by_matrix[el.matrix] for el in group)
    return _PAIR_CACHE[alg]


def membership_pair(alg: str, sigma: WeylElement) -> Tuple[Condition, Condition]:
    check_algebra(alg)
    for el, pair in zip(weyl_group(alg), _pairs_by_index(alg)):
        if el.matrix == sigma.matrix:
            return pair
    raise ValueError(f"{sigma} is not an element of W({alg})")


def evaluate_condition(alg: str, label: str, lam: FundCoords, mu: FundCoords) -> bool:
    """Truth value of one labelled inequality at (lambda, mu); the lattice
    gate is not applied here."""
    params = _params(alg, lam, mu)
    if params is None:
        raise ValueError(f"lambda - mu is outside the root lattice for {alg}")
    return condition_by_label(alg, label).holds(params)


def member_closed(alg: str, sigma: WeylElement, lam: FundCoords, mu: FundCoords) -> bool:
    """Closed-form membership test: sigma is in A(lambda, mu) iff the
    lattice gate passes and the element's two inequalities hold."""
    params = _params(alg, lam, mu)
    if params is None:
        return False
    c1, c2 = membership_pair(alg, sigma)
    return c1.holds(params) and c2.holds(params)


def alt_set_closed(alg: str, lam: FundCoords, mu: FundCoords) -> AltSet:
    """Weyl alternation set from the condition tables alone."""
    check_algebra(alg)
    params = _params(alg, lam, mu)
    if params is None:
        return AltSet(alg, ())
    idx = tuple(
        k
        for k, pair in enumerate(_pairs_by_index(alg))
        if pair[0].holds(params) and pair[1].holds(params)
    )
    return AltSet(alg, idx)


# ---------------------------------------------------------------------------
# Case tables: disjoint signatures (two conditions hold, two fail) covering
# every nonempty alternation set for dominant mu.


@dataclass(frozen=True)
class Case:
    words: Tuple[Word, ...]
    positive: Tuple[str, str]
    negative: Tuple[str, str]

    def label(self, alg: str) -> str:
        names = []
        for w in self.words:
            el = element_by_word(alg, w)
            names.append("1" if el.length == 0 else el.name())
        return "{" + ", ".join(names) + "}"


def _case(words, pos, neg) -> Case:
    return Case(tuple(tuple(w) for w in words), tuple(pos), tuple(neg))


_E: Word = ()
_S1: Word = (1,)
_S2: Word = (2,)
_S12: Word = (1, 2)
_S21: Word = (2, 1)
_S121: Word = (1, 2, 1)
_S212: Word = (2, 1, 2)
_LONG4: Word = (2, 1, 2, 1)

_CASES: Dict[str, Tuple[Case, ...]] = {
    "B2": (
        _case([_E], ("J1", "J2"), ("J3", "J4")),
        _case([_S1], ("J2", "J3"), ("J1", "J5")),
        _case([_S2], ("J1", "J4"), ("J2", "J6")),
        _case([_S21], ("J3", "J5"), ("J2", "J7")),
        _case([_S12], ("J6", "J4"), ("J8", "J1")),
        _case([_S121], ("J7", "J5"), ("J8", "J3")),
        _case([_S212], ("J6", "J8"), ("J4", "J7")),
        _case([_LONG4], ("J7", "J8"), ("J5", "J6")),
        _case([_E, _S1], ("J1", "J3"), ("J4", "J5")),
        _case([_E, _S2], ("J2", "J4"), ("J3", "J6")),
        _case([_S1, _S21], ("J2", "J5"), ("J1", "J7")),
        _case([_S2, _S12], ("J1", "J6"), ("J2", "J8")),
        _case([_S21, _S121], ("J3", "J7"), ("J2", "J8")),
        _case([_S12, _S212], ("J4", "J8"), ("J1", "J7")),
        _case([_S121, _LONG4], ("J5", "J8"), ("J6", "J3")),
        _case([_S212, _LONG4], ("J6", "J7"), ("J5", "J4")),
        _case([_E, _S1, _S2], ("J3", "J4"), ("J5", "J6")),
        _case([_E, _S1, _S21], ("J1", "J5"), ("J4", "J7")),
        _case([_E, _S2, _S12], ("J2", "J6"), ("J3", "J8")),
        _case([_S1, _S21, _S121], ("J7", "J2"), ("J8", "J1")),
        _case([_S2, _S12, _S212], ("J1", "J8"), ("J2", "J7")),
        _case([_S21, _S121, _LONG4], ("J3", "J8"), ("J2", "J6")),
        _case([_S12, _S212, _LONG4], ("J7", "J4"), ("J5", "J1")),
        _case([_S212, _LONG4, _S121], ("J6", "J5"), ("J4", "J3")),
    ),
    "C2": (
        _case([_E], ("L1", "L2"), ("L4", "L3")),
        _case([_S1], ("L3", "L2"), ("L5", "L1")),
        _case([_S2], ("L1", "L4"), ("L2", "L6")),
        _case([_S21], ("L3", "L5"), ("L2", "L7")),
        _case([_S12], ("L6", "L4"), ("L8", "L1")),
        _case([_S121], ("L7", "L5"), ("L8", "L3")),
        _case([_S212], ("L6", "L8"), ("L4", "L7")),
        _case([_LONG4], ("L7", "L8"), ("L5", "L6")),
        _case([_E, _S1], ("L1", "L3"), ("L4", "L5")),
        _case([_E, _S2], ("L2", "L4"), ("L3", "L6")),
        _case([_S1, _S21], ("L2", "L5"), ("L1", "L7")),
        _case([_S2, _S12], ("L1", "L6"), ("L2", "L8")),
        _case([_S21, _S121], ("L3", "L7"), ("L2", "L8")),
        _case([_S12, _S212], ("L4", "L8"), ("L1", "L7")),
        _case([_S121, _LONG4], ("L5", "L8"), ("L6", "L3")),
        _case([_S212, _LONG4], ("L6", "L7"), ("L5", "L4")),
        _case([_E, _S1, _S21], ("L1", "L5"), ("L4", "L7")),
        _case([_E, _S1, _S2], ("L3", "L4"), ("L5", "L6")),
        _case([_E, _S2, _S12], ("L2", "L6"), ("L3", "L8")),
        _case([_S2, _S12, _S212], ("L1", "L8"), ("L2", "L7")),
        _case([_S12, _S212, _LONG4], ("L7", "L4"), ("L5", "L1")),
        _case([_S212, _LONG4, _S121], ("L6", "L5"), ("L4", "L3")),
        _case([_LONG4, _S121, _S21], ("L3", "L8"), ("L2", "L6")),
        _case([_S1, _S21, _S121], ("L7", "L2"), ("L8", "L1")),
    ),
    "D2": (
        _case([_E], ("D1", "D3"), ("D2", "D4")),
        _case([_S1], ("D2", "D3"), ("D1", "D4")),
        _case([_S2], ("D1", "D4"), ("D2", "D3")),
        _case([_S21], ("D2", "D4"), ("D1", "D3")),
    ),
}


@dataclass(frozen=True)
class CaseResult:
    label: str
    alt_set: AltSet


def theorem_case(alg: str, lam: FundCoords, mu: FundCoords) -> Optional[CaseResult]:
    """Match (lambda, mu) against the algebra's case table (B2, C2, D2 only;
    mu must be dominant).  Returns None when no case fires, i.e. when the
    alternation set is empty; raises if more than one signature matches."""
    check_algebra(alg)
    if alg not in _CASES:
        raise ValueError(f"no case table for {alg}")
    n, m = Q(mu[0]), Q(mu[1])
    if n < 0 or m < 0:
        raise ValueError(f"mu must be dominant, got {mu}")
    params = _params(alg, lam, mu)
    if params is None:
        return None
    hits = []
    for case in _CASES[alg]:
        pos_ok = all(condition_by_label(alg, l).holds(params) for l in case.positive)
        neg_ok = all(not condition_by_label(alg, l).holds(params) for l in case.negative)
        if pos_ok and neg_ok:
            hits.append(case)
    if not hits:
        return None
    if len(hits) > 1:
        labels = ", ".join(c.label(alg) for c in hits)
        raise ValueError(f"case signatures overlap at lam={lam}, mu={mu}: {labels}")
    case = hits[0]
    elements = [element_by_word(alg, w) for w in case.words]
    return CaseResult(case.label(alg), AltSet.from_elements(alg, elements))
