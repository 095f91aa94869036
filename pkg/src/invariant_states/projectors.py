"""Projector families spanning the locally invariant operator algebras.

For one qudit pair there are two natural resolutions of the identity:

* the symmetric/antisymmetric split built from the exchange operator F,
  which spans everything commuting with U (x) U, and
* the split built from the maximally entangled projector E, namely
  {I - E, E}, which spans everything commuting with U (x) conj(U).

For K pairs arranged as slots (i, K+i) of a 2K-slot space, choosing one
resolution per pair (a bit vector sigma) and one member per pair (a bit
vector alpha) yields 2^K families of 2^K mutually orthogonal projectors,
each family summing to the identity.  Their traces factor into per-pair
closed forms.

Constructors are cached per argument tuple, since fidelity computations
reuse the same projectors many times.  Cached operators are immutable and
safe for concurrent readers.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from typing import Iterable

import numpy as np

from .bits import as_bits
from .operators import MAX_SIDE, Operator, identity


@lru_cache(maxsize=None)
def flip(d: int) -> Operator:
    """Exchange (swap) operator on a pair: F (x |i>|j>) = |j>|i>."""
    d = int(d)
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    mat = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            mat[i * d + j, j * d + i] = 1.0
    return Operator(d, 2, mat)


@lru_cache(maxsize=None)
def max_entangled_projector(d: int) -> Operator:
    """Rank-1 projector onto the canonical maximally entangled pair state."""
    d = int(d)
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    mat = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            mat[i * d + i, j * d + j] = 1.0 / d
    return Operator(d, 2, mat)


@lru_cache(maxsize=None)
def werner_projector(d: int, alpha: int) -> Operator:
    """Projector onto the (-1)^alpha eigenspace of the exchange operator.

    alpha = 0 is the symmetric subspace, alpha = 1 the antisymmetric one.
    The two projectors are orthogonal, sum to the identity, and have
    traces d(d+1)/2 and d(d-1)/2.
    """
    if alpha not in (0, 1):
        raise ValueError(f"alpha must be 0 or 1, got {alpha}")
    sign = 1.0 if alpha == 0 else -1.0
    return (identity(int(d), 2) + sign * flip(int(d))) * 0.5


@lru_cache(maxsize=None)
def isotropic_projector(d: int, alpha: int) -> Operator:
    """Maximally entangled projector (alpha = 1) or its complement (alpha = 0)."""
    if alpha not in (0, 1):
        raise ValueError(f"alpha must be 0 or 1, got {alpha}")
    ent = max_entangled_projector(int(d))
    return ent if alpha == 1 else identity(int(d), 2) - ent


def pair_projector(d: int, sigma: int, alpha: int) -> Operator:
    """Family member for one pair: Werner split if sigma = 0, isotropic if 1."""
    if sigma not in (0, 1):
        raise ValueError(f"sigma must be 0 or 1, got {sigma}")
    if sigma == 0:
        return werner_projector(d, alpha)
    return isotropic_projector(d, alpha)


def _permute_slots(mat: np.ndarray, d: int, n: int, current: tuple[int, ...]) -> np.ndarray:
    """Reorder tensor slots of a dense matrix from `current` labels to 1..n."""
    pos = [current.index(t) for t in range(1, n + 1)]
    axes = pos + [n + p for p in pos]
    side = d**n
    return mat.reshape((d,) * (2 * n)).transpose(axes).reshape(side, side)


@lru_cache(maxsize=None)
def _invariant_projector(d: int, sigma: tuple[int, ...], alpha: tuple[int, ...]) -> Operator:
    k = len(sigma)
    side = d ** (2 * k)
    if side > MAX_SIDE:
        raise ValueError(
            f"scale exceeded: d={d}, K={k} needs matrix side {side} > {MAX_SIDE}"
        )
    mats = [pair_projector(d, s, a).mat for s, a in zip(sigma, alpha)]
    mat = reduce(np.kron, mats)
    if k > 1:
        # the kron above lives on slot order (1, K+1, 2, K+2, ...); the
        # canonical layout interleaves all first members before all second
        current = tuple(x for i in range(1, k + 1) for x in (i, k + i))
        mat = _permute_slots(mat, d, 2 * k, current)
    return Operator(d, 2 * k, mat)


def invariant_projector(d: int, sigma: Iterable[int], alpha: Iterable[int]) -> Operator:
    """K-pair family projector on the 2K-slot space.

    Pair i of the tensor product acts on slots (i, K+i).  For fixed sigma
    the 2^K projectors over alpha are mutually orthogonal and sum to the
    identity.
    """
    sigma, alpha = as_bits(sigma), as_bits(alpha)
    if len(sigma) != len(alpha):
        raise ValueError(f"length mismatch: sigma has {len(sigma)}, alpha has {len(alpha)}")
    return _invariant_projector(int(d), sigma, alpha)


def projector_trace(d: int, sigma: Iterable[int], alpha: Iterable[int]) -> float:
    """Closed-form trace of :func:`invariant_projector`.

    Per pair: d(d + (-1)^alpha)/2 for a Werner-split factor, and 1 or
    d^2 - 1 for the entangled projector or its complement.
    """
    sigma, alpha = as_bits(sigma), as_bits(alpha)
    if len(sigma) != len(alpha):
        raise ValueError(f"length mismatch: sigma has {len(sigma)}, alpha has {len(alpha)}")
    total = 1.0
    for s, a in zip(sigma, alpha):
        if s == 0:
            total *= d * (d + (-1) ** a) / 2
        elif a == 1:
            total *= 1.0
        else:
            total *= d * d - 1
    return total


def clear_caches():
    """Drop all cached projectors (mainly for memory-sensitive sweeps)."""
    _invariant_projector.cache_clear()
    isotropic_projector.cache_clear()
    werner_projector.cache_clear()
    max_entangled_projector.cache_clear()
    flip.cache_clear()
