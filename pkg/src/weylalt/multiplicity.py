"""Kostant's weight multiplicity formula and Weyl alternation sets.

m(lambda, mu) = sum over sigma in W of
    (-1)^len(sigma) * partition(sigma(lambda + rho) - (mu + rho))

The alternation set A(lambda, mu) collects the sigma whose partition term is
nonzero; the alternating sum restricted to it equals the full sum.
All weights here are in root-basis coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Tuple

from .kostant import partition, partition_positive
from .rootsys import (
    Weight,
    WeylElement,
    apply_element,
    check_algebra,
    element_index,
    rho,
    weyl_group,
)
from .weightlat import add, sub


def sigma_shift(alg: str, sigma: WeylElement, lam: Weight, mu: Weight) -> Weight:
    """sigma(lambda + rho) - (mu + rho)."""
    r = rho(alg)
    return sub(apply_element(sigma, add(lam, r)), add(mu, r))


@dataclass(frozen=True)
class AltSet:
    """A subset of the Weyl group, stored by canonical element index."""

    alg: str
    indices: Tuple[int, ...]  # strictly increasing

    @staticmethod
    def from_elements(alg: str, elements: Iterable[WeylElement]) -> "AltSet":
        idx = sorted({element_index(alg, el) for el in elements})
        return AltSet(alg, tuple(idx))

    @property
    def mask(self) -> int:
        """Bitmask over the canonical group ordering (bit k = element k)."""
        out = 0
        for k in self.indices:
            out |= 1 << k
        return out

    def elements(self) -> Tuple[WeylElement, ...]:
        group = weyl_group(self.alg)
        return tuple(group[k] for k in self.indices)

    def words(self) -> Tuple[str, ...]:
        return tuple(el.name() for el in self.elements())

    def __contains__(self, sigma: WeylElement) -> bool:
        return element_index(self.alg, sigma) in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def describe(self, identity: str = "1") -> str:
        names = [identity if el.length == 0 else el.name() for el in self.elements()]
        return "{" + ", ".join(names) + "}"


def multiplicity(
    alg: str,
    lam: Weight,
    mu: Weight,
    partition_fn: Optional[Callable[[Weight], int]] = None,
) -> int:
    """Weight multiplicity of mu in the highest-weight module of lambda,
    by the alternating sum over the whole Weyl group."""
    check_algebra(alg)
    p = partition_fn or (lambda xi: partition(alg, xi))
    total = 0
    for sigma in weyl_group(alg):
        total += sigma.sign * p(sigma_shift(alg, sigma, lam, mu))
    return total


def alt_set_oracle(alg: str, lam: Weight, mu: Weight) -> AltSet:
    """Alternation set computed directly from the partition function.

    Uses the early-exit existence check, which agrees with partition > 0
    (tested property) but avoids counting every expression.
    """
    check_algebra(alg)
    idx = tuple(
        k
        for k, sigma in enumerate(weyl_group(alg))
        if partition_positive(alg, sigma_shift(alg, sigma, lam, mu))
    )
    return AltSet(alg, idx)


def multiplicity_restricted(
    alg: str,
    lam: Weight,
    mu: Weight,
    s: AltSet,
    partition_fn: Optional[Callable[[Weight], int]] = None,
) -> int:
    """Alternating sum restricted to s; s must contain every nonzero term."""
    check_algebra(alg)
    if s.alg != alg:
        raise ValueError(f"set is over W({s.alg}), not W({alg})")
    p = partition_fn or (lambda xi: partition(alg, xi))
    group = weyl_group(alg)
    members = set(s.indices)
    total = 0
    for k, sigma in enumerate(group):
        term = p(sigma_shift(alg, sigma, lam, mu))
        if k in members:
            total += sigma.sign * term
        elif term != 0:
            raise ValueError(
                f"element {sigma.name()} contributes {term} but is outside the set"
            )
    return total
