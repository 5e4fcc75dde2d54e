"""Discrete covering-space lab: flat torus quotient graphs with BFS diameters,
the doubling subgroup tower of a rank-k lattice, and normalized Betti-number
ratio sequences along that tower.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, TooLarge

__all__ = [
    "DEFAULT_VERTEX_CAP",
    "TorusQuotientGraph",
    "TowerLevel",
    "Tower",
    "tower",
    "CoverDiameter",
    "cover_diameter",
    "l2_betti_ratio",
]

DEFAULT_VERTEX_CAP = 10**6


def _check_moduli(moduli):
    moduli = tuple(moduli)
    if not moduli:
        raise DomainError("moduli must be non-empty")
    for n in moduli:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DomainError(f"moduli must be positive integers, got {n!r}")
    return moduli


class TorusQuotientGraph:
    """Cayley graph of prod Z/n_i with unit-weight generator edges +-e_i."""

    __slots__ = ("moduli", "vertex_cap")

    def __init__(self, moduli, vertex_cap: int = DEFAULT_VERTEX_CAP):
        self.moduli = _check_moduli(moduli)
        self.vertex_cap = int(vertex_cap)
        if self.vertex_count > self.vertex_cap:
            raise TooLarge(
                f"{self.vertex_count} vertices exceeds the cap of {self.vertex_cap}"
            )

    @property
    def k(self) -> int:
        return len(self.moduli)

    @property
    def vertex_count(self) -> int:
        return math.prod(self.moduli)

    def closed_form_diameter(self) -> int:
        """sum of floor(n_i / 2); the oracle the BFS must reproduce."""
        return sum(n // 2 for n in self.moduli)

    def diameter(self) -> int:
        """Eccentricity of the origin by BFS; equals the graph diameter by
        vertex-transitivity."""
        moduli = self.moduli
        strides = []
        acc = 1
        for n in moduli:
            strides.append(acc)
            acc *= n
        count = acc
        dist = [-1] * count
        dist[0] = 0
        queue = deque([0])
        farthest = 0
        while queue:
            idx = queue.popleft()
            d = dist[idx]
            farthest = d
            for axis in range(len(moduli)):
                n = moduli[axis]
                if n == 1:
                    continue
                stride = strides[axis]
                coord = (idx // stride) % n
                for step in (1, n - 1):
                    nxt = idx + ((coord + step) % n - coord) * stride
                    if dist[nxt] < 0:
                        dist[nxt] = d + 1
                        queue.append(nxt)
        return farthest


@dataclass(frozen=True)
class TowerLevel:
    """Level j holds the sublattice (scale * Z)^k with scale = 2^(j-1)."""

    j: int
    scale: int
    index: int


@dataclass(frozen=True)
class Tower:
    k: int
    levels: list

    def indices(self):
        return [level.index for level in self.levels]


def tower(k: int, J: int) -> Tower:
    """Doubling tower of sublattices of Z^k, depth J; level j has index
    2^((j-1)*k), so the indices strictly increase and are unbounded in J."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"rank k must be a positive integer, got {k!r}")
    if not isinstance(J, int) or isinstance(J, bool) or J < 1:
        raise DomainError(f"depth J must be a positive integer, got {J!r}")
    levels = [TowerLevel(j=j, scale=2 ** (j - 1), index=2 ** ((j - 1) * k)) for j in range(1, J + 1)]
    return Tower(k=k, levels=levels)


@dataclass(frozen=True)
class CoverDiameter:
    base_diam: int
    cover_diam: int
    index: int
    inequality_holds: bool


def cover_diameter(k, base_moduli, sub_factor: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> CoverDiameter:
    """BFS diameters of a torus quotient and its degree-(sub_factor^k) cover
    (moduli scaled componentwise), plus the cover-diameter inequality
    cover_diam <= index * base_diam."""
    base_moduli = _check_moduli(base_moduli)
    if len(base_moduli) != k:
        raise DomainError(f"expected {k} moduli, got {len(base_moduli)}")
    if not isinstance(sub_factor, int) or isinstance(sub_factor, bool) or sub_factor < 1:
        raise DomainError(f"sub_factor must be a positive integer, got {sub_factor!r}")
    base = TorusQuotientGraph(base_moduli, vertex_cap=vertex_cap)
    cover = TorusQuotientGraph(tuple(sub_factor * n for n in base_moduli), vertex_cap=vertex_cap)
    index = sub_factor**k
    base_diam = base.diameter()
    cover_diam = cover.diameter()
    return CoverDiameter(
        base_diam=base_diam,
        cover_diam=cover_diam,
        index=index,
        inequality_holds=cover_diam <= index * base_diam,
    )


def l2_betti_ratio(k: int, p: int, J: int) -> list:
    """Normalized degree-p Betti numbers binom(k, p) / 2^((j-1)*k) along the
    doubling tower, j = 1..J; strictly decreasing to 0 once J >= 2."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"rank k must be a positive integer, got {k!r}")
    if not isinstance(J, int) or isinstance(J, bool) or J < 1:
        raise DomainError(f"depth J must be a positive integer, got {J!r}")
    if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p <= k:
        raise DomainError(f"degree p must satisfy 0 <= p <= k = {k}, got {p!r}")
    betti = math.comb(k, p)
    return [Fraction(betti, 2 ** ((j - 1) * k)) for j in range(1, J + 1)]
