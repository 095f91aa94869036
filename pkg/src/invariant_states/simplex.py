"""The simplex of locally invariant states and its separability geometry.

A 2K-qudit state that commutes with every U_1 (x) ... (x) U_K (x) W_1 (x)
... (x) W_K, where W_i is U_i or conj(U_i) according to a per-pair bit
sigma_i, is a convex mixture of the 2^K normalized family projectors for
that sigma.  The mixture weights, called fidelities, are the coordinates
used throughout this module:

* states map to points of a (2^K - 1)-simplex (:class:`StateDescriptor`);
* group averaging (twirling) maps any state to its fidelity vector;
* partial transposition of selected pairs acts on fidelities through
  small transfer matrices obtained as Kronecker products of two 2 x 2
  blocks; positivity of the transformed vector is the PPT test;
* extremal fully product states land on computable points, whose convex
  hull gives linear inequality bounds (necessary separability conditions).

Bit-vector arguments follow the convention of :mod:`.bits`: the first bit
is the most significant in fidelity indexing, and a 1 in position i of a
transposition pattern transposes the second member of pair i (slot K+i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional

import numpy as np

from . import bits as bv
from .bits import Bits, all_vectors, as_bits, bits_str
from .operators import (
    Operator,
    Rng,
    _haar_sample,
    basis_ket,
    partial_trace,
    partial_transpose,
    projector_onto,
    tensor_product,
)
from .projectors import invariant_projector, projector_trace

FIDELITY_NEG_ATOL = 1e-12
FIDELITY_SUM_ATOL = 1e-10
PPT_ATOL = 1e-12
ROW_SUM_ATOL = 1e-12


@dataclass(frozen=True)
class StateDescriptor:
    """A point of the invariant-state simplex: (d, sigma, fidelities).

    fidelities has length 2^K for K = len(sigma), is indexed by the bit
    encoding of :mod:`.bits`, and must be nonnegative (within 1e-12) and
    sum to 1 (within 1e-10).  The described state is the corresponding
    mixture of normalized family projectors; see :func:`synthesize`.
    """

    d: int
    sigma: Bits
    fidelities: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "sigma", as_bits(self.sigma))
        f = np.asarray(self.fidelities, dtype=float).reshape(-1)
        if self.d < 2:
            raise ValueError(f"local dimension must be >= 2, got {self.d}")
        if f.size != 2 ** len(self.sigma):
            raise ValueError(
                f"need 2**K = {2 ** len(self.sigma)} fidelities, got {f.size}"
            )
        if float(f.min()) < -FIDELITY_NEG_ATOL:
            raise ValueError(f"fidelities must be nonnegative, got min {f.min():.3e}")
        if abs(float(f.sum()) - 1.0) > FIDELITY_SUM_ATOL:
            raise ValueError(f"fidelities must sum to 1, got {f.sum():.12g}")
        f.setflags(write=False)
        object.__setattr__(self, "fidelities", f)

    @property
    def K(self) -> int:
        return len(self.sigma)


def _check_state_shape(rho: Operator, sigma) -> Bits:
    sigma = as_bits(sigma)
    if rho.n != 2 * len(sigma):
        raise ValueError(
            f"state acts on {rho.n} subsystems but sigma has {len(sigma)} pairs"
        )
    return sigma


def extract_fidelities(rho: Operator, sigma: Iterable[int]) -> np.ndarray:
    """Raw overlaps Tr(rho P) with each family projector, no validation.

    Unlike :func:`fidelities_of` this never rejects negative entries, so
    it can be used on partial transposes of states.
    """
    sigma = _check_state_shape(rho, sigma)
    out = np.empty(2 ** len(sigma))
    for idx, alpha in enumerate(all_vectors(len(sigma))):
        proj = invariant_projector(rho.d, sigma, alpha)
        out[idx] = np.einsum("ij,ji->", rho.mat, proj.mat).real
    return out


def fidelities_of(rho: Operator, sigma: Iterable[int]) -> StateDescriptor:
    """Fidelity coordinates of a unit-trace state in the sigma family.

    If rho is already invariant for this sigma, synthesizing the result
    reproduces rho.  For a general state the result describes its
    projection onto the invariant subspace; see :func:`exact_twirl`.
    """
    sigma = _check_state_shape(rho, sigma)
    tr = rho.trace()
    if abs(tr - 1.0) > 1e-10:
        raise ValueError(f"state must have unit trace, got {tr:.12g}")
    return StateDescriptor(rho.d, sigma, extract_fidelities(rho, sigma))


def synthesize(desc: StateDescriptor) -> Operator:
    """Dense state described by a simplex point: sum of f * P / Tr(P)."""
    side = desc.d ** (2 * desc.K)
    mat = np.zeros((side, side), dtype=np.complex128)
    for idx, alpha in enumerate(all_vectors(desc.K)):
        proj = invariant_projector(desc.d, desc.sigma, alpha)
        mat += (desc.fidelities[idx] / projector_trace(desc.d, desc.sigma, alpha)) * proj.mat
    return Operator(desc.d, 2 * desc.K, mat)


def exact_twirl(rho: Operator, sigma: Iterable[int]) -> StateDescriptor:
    """Descriptor of the group average of rho over the sigma symmetry.

    The average is the orthogonal projection onto the span of the family
    projectors, so it is fully determined by the overlaps Tr(rho P): no
    integration is performed.  Twirling an already invariant state
    returns its own descriptor.
    """
    return fidelities_of(rho, sigma)


def mc_twirl(rho: Operator, sigma: Iterable[int], samples: int, rng: Rng) -> Operator:
    """Monte-Carlo estimate of the group average by Haar sampling.

    Averages V rho V^dag over ``samples`` draws, where V applies an
    independent Haar unitary U_i to slot i and U_i or conj(U_i) to slot
    K+i according to sigma_i.  The estimator is unbiased and deterministic
    in ``rng``; sample s consumes the sub-stream ``rng.at(s)``, so results
    do not depend on how the sample range might be partitioned.
    """
    sigma = _check_state_shape(rho, sigma)
    samples = int(samples)
    if samples < 1:
        raise ValueError(f"sample count must be >= 1, got {samples}")
    k = len(sigma)
    d = rho.d
    acc = np.zeros_like(rho.mat)
    for s in range(samples):
        gen = rng.at(s).generator()
        us = [_haar_sample(gen, d) for _ in range(k)]
        ws = [u if bit == 0 else u.conj() for u, bit in zip(us, sigma)]
        v = reduce(np.kron, us + ws)
        acc += v @ rho.mat @ v.conj().T
    return Operator(d, 2 * k, acc / samples)


# ---------------------------------------------------------------------------
# fidelity transfer under partial transposition


@dataclass(frozen=True)
class TransferMatrix:
    """Linear action of a pair-wise partial transposition on fidelities.

    ``mat`` is 2^K x 2^K and real; row alpha holds the expansion of the
    transposed normalized projector alpha in the target family.  Every row
    sums to 1, but entries may be negative, which is what makes the PPT
    test nontrivial.  ``mu`` is the transposition pattern, ``nu`` the
    family it acts on; the target family is ``xor(mu, nu)``.
    """

    mat: np.ndarray
    mu: Bits
    nu: Bits
    d: int

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=float)
        k = len(self.mu)
        if m.shape != (2**k, 2**k):
            raise ValueError(f"expected shape {(2**k, 2**k)}, got {m.shape}")
        rows = m.sum(axis=1)
        if float(np.max(np.abs(rows - 1.0))) > ROW_SUM_ATOL:
            raise ValueError(f"rows must sum to 1, got sums {rows}")
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)


def werner_pt_matrix(d: int) -> TransferMatrix:
    """Fidelity map of one pair transposition applied in the Werner family."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    mat = np.array([[d - 1.0, 1.0], [d + 1.0, -1.0]]) / d
    return TransferMatrix(mat, (1,), (0,), d)


def isotropic_pt_matrix(d: int) -> TransferMatrix:
    """Fidelity map of one pair transposition applied in the isotropic family.

    Inverse of :func:`werner_pt_matrix`, since transposing twice is the
    identity.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    mat = np.array([[1.0, 1.0], [1.0 + d, 1.0 - d]]) / 2
    return TransferMatrix(mat, (1,), (1,), d)


def pt_matrix(mu: Iterable[int], nu: Iterable[int], d: int) -> TransferMatrix:
    """K-pair transfer matrix: Kronecker product of per-pair blocks.

    Pair i contributes the identity if mu_i = 0, the Werner-family block
    if (mu_i, nu_i) = (1, 0) and the isotropic-family block if (1, 1).
    Blocks multiply in pair order, first pair most significant, matching
    the fidelity indexing.
    """
    mu, nu = as_bits(mu), as_bits(nu)
    if len(mu) != len(nu):
        raise ValueError(f"length mismatch: mu has {len(mu)}, nu has {len(nu)}")
    factors = []
    for m_bit, n_bit in zip(mu, nu):
        if m_bit == 0:
            factors.append(np.eye(2))
        elif n_bit == 0:
            factors.append(werner_pt_matrix(d).mat)
        else:
            factors.append(isotropic_pt_matrix(d).mat)
    return TransferMatrix(reduce(np.kron, factors), mu, nu, d)


def transform_fidelities(desc: StateDescriptor, mu: Iterable[int]) -> np.ndarray:
    """Fidelity vector of the mu-partial transpose of a described state.

    The result lives in the family xor(mu, desc.sigma).  Entries always
    sum to 1 but may be negative; a negative entry certifies that the
    transposed operator is not positive semidefinite.
    """
    mu = as_bits(mu)
    if len(mu) != desc.K:
        raise ValueError(f"mu has length {len(mu)}, expected {desc.K}")
    return desc.fidelities @ pt_matrix(mu, desc.sigma, desc.d).mat


# ---------------------------------------------------------------------------
# separability criteria


@dataclass(frozen=True)
class ConstraintFailure:
    constraint: str
    value: float
    bound: float


@dataclass(frozen=True)
class SeparabilityVerdict:
    """Outcome of one criterion: satisfied iff no constraint failed.

    ``failures`` lists each violated inequality with its raw margin, so
    callers can apply their own thresholds.  ``necessary_only`` marks
    criteria that can only certify non-separability, never separability.
    """

    criterion: str
    failures: tuple[ConstraintFailure, ...]
    necessary_only: bool = False
    biseparable: Optional["SeparabilityVerdict"] = None

    @property
    def satisfied(self) -> bool:
        return not self.failures

    @property
    def outcome(self) -> str:
        return "satisfied" if self.satisfied else "violated"


def check_ppt(desc: StateDescriptor, mu: Iterable[int]) -> SeparabilityVerdict:
    """Positivity of the mu-partial transpose, decided on fidelities.

    The transposed state is positive semidefinite exactly when every
    transformed fidelity is nonnegative; entries below -1e-12 fail.
    """
    mu = as_bits(mu)
    transformed = transform_fidelities(desc, mu)
    failures = []
    for idx, value in enumerate(transformed):
        if value < -PPT_ATOL:
            alpha = bv.from_index(idx, desc.K)
            failures.append(
                ConstraintFailure(
                    constraint=f"mu={bits_str(mu)},alpha={bits_str(alpha)}",
                    value=float(value),
                    bound=0.0,
                )
            )
    return SeparabilityVerdict(f"ppt:{bits_str(mu)}", tuple(failures))


def check_biseparable(desc: StateDescriptor) -> SeparabilityVerdict:
    """Separability across the single cut grouping all first members.

    For invariant states this is equivalent to positivity under the
    all-pairs transposition, so the verdict is the (1...1) PPT test.
    """
    ones = (1,) * desc.K
    inner = check_ppt(desc, ones)
    return SeparabilityVerdict("bisep", inner.failures)


def check_ppt_all(desc: StateDescriptor) -> SeparabilityVerdict:
    """PPT under every transposition pattern; the full-separability test.

    An invariant state is separable into all 2K parties exactly when all
    2^K patterns pass.  The all-ones sub-verdict doubles as the
    biseparability test and is reported alongside.
    """
    failures = []
    for mu in all_vectors(desc.K):
        failures.extend(check_ppt(desc, mu).failures)
    return SeparabilityVerdict(
        "ppt-all", tuple(failures), biseparable=check_biseparable(desc)
    )


def check_polytope(desc: StateDescriptor) -> SeparabilityVerdict:
    """Linear bounds carved out by extremal product states.

    Checks every fidelity against its hull bound (1/2^|alpha|) *
    (2/d)^|sigma*alpha| and the monotonicity f_alpha <= f_beta whenever
    |alpha| > |beta|.  These conditions are necessary for full
    separability; they can hold for states that fail a PPT test, so the
    verdict is flagged ``necessary_only``.
    """
    failures = []
    f = desc.fidelities
    vectors = list(all_vectors(desc.K))
    for idx, alpha in enumerate(vectors):
        overlap = bv.weight(bv.bit_and(desc.sigma, alpha))
        bound = (0.5 ** bv.weight(alpha)) * (2.0 / desc.d) ** overlap
        if f[idx] > bound + PPT_ATOL:
            failures.append(
                ConstraintFailure(
                    constraint=f"bound,alpha={bits_str(alpha)}",
                    value=float(f[idx]),
                    bound=bound,
                )
            )
    for i, alpha in enumerate(vectors):
        for j, beta in enumerate(vectors):
            if bv.weight(alpha) > bv.weight(beta) and f[i] > f[j] + PPT_ATOL:
                failures.append(
                    ConstraintFailure(
                        constraint=f"order,alpha={bits_str(alpha)},beta={bits_str(beta)}",
                        value=float(f[i]),
                        bound=float(f[j]),
                    )
                )
    return SeparabilityVerdict("polytope", tuple(failures), necessary_only=True)


# ---------------------------------------------------------------------------
# extremal product states


def _check_overlaps(overlaps) -> np.ndarray:
    a = np.asarray(overlaps, dtype=float).reshape(-1)
    if a.size < 1:
        raise ValueError("need at least one overlap")
    if float(a.min()) < 0.0 or float(a.max()) > 1.0:
        raise ValueError(f"overlaps must lie in [0, 1], got {a}")
    return a


def extremal_fidelities(sigma: Iterable[int], overlaps, d: int) -> np.ndarray:
    """Fidelities of a transposed fully product state with given overlaps.

    overlaps[i] is the squared inner product a_i between the two pure
    states of pair i.  Per pair the factor is 1 + (-1)^alpha_i * a_i for a
    Werner-split pair and 1 - (alpha_i + (-1)^alpha_i * a_i / d) for an
    isotropic one, with an overall 1 / 2^(K - |sigma|).  The output is a
    valid fidelity vector and, being a projection of a separable state,
    satisfies every separability criterion in this module.
    """
    sigma = as_bits(sigma)
    a = _check_overlaps(overlaps)
    if a.size != len(sigma):
        raise ValueError(f"need {len(sigma)} overlaps, got {a.size}")
    k = len(sigma)
    prefactor = 0.5 ** (k - bv.weight(sigma))
    out = np.empty(2**k)
    for idx, alpha in enumerate(all_vectors(k)):
        term = prefactor
        for s_bit, a_bit, a_i in zip(sigma, alpha, a):
            if s_bit == 0:
                term *= 1.0 + (-1.0) ** a_bit * a_i
            else:
                term *= 1.0 - (a_bit + (-1.0) ** a_bit * a_i / d)
        out[idx] = term
    return out


def extremal_product_state(d: int, sigma: Iterable[int], overlaps) -> Operator:
    """Dense realization of the product state behind :func:`extremal_fidelities`.

    Pair i uses |0> on the first member and cos(t)|0> + sin(t)|1> on the
    second with cos(t)^2 = overlaps[i]; the sigma pattern of transposes is
    then applied to the second members.  Intended as the brute-force
    counterpart for checking the closed form.
    """
    sigma = as_bits(sigma)
    a = _check_overlaps(overlaps)
    if a.size != len(sigma):
        raise ValueError(f"need {len(sigma)} overlaps, got {a.size}")
    k = len(sigma)
    first = [basis_ket(d, [0]) for _ in range(k)]
    second = []
    for a_i in a:
        vec = np.zeros(d, dtype=np.complex128)
        vec[0] = np.sqrt(a_i)
        vec[1] = np.sqrt(1.0 - a_i)
        second.append(vec)
    factors = [projector_onto(d, v) for v in first + second]
    rho = reduce(tensor_product, factors)
    transposed = [k + i for i in range(1, k + 1) if sigma[i - 1] == 1]
    return partial_transpose(rho, transposed)


def biseparable_fidelities(proj_a: Operator, proj_b: Operator) -> np.ndarray:
    """Werner-family fidelities of the twirled product of two pair projectors.

    proj_a and proj_b are projectors on two-qudit spaces, placed on slots
    (1, 2) and (3, 4); the pairs of the four-slot space are then (1, 3)
    and (2, 4).  The four fidelities have the closed form

        q = 1/4 * (1 +- s1 +- s2 +- s12)

    with s1, s2 the overlaps of the single-slot marginals and s12 the full
    overlap Tr(proj_a proj_b); the signs follow the fidelity index.  These
    states are separable across the (1,2)|(3,4) cut by construction, so q
    always passes the all-ones PPT test, yet q can fail other patterns.
    """
    if proj_a.n != 2 or proj_b.n != 2:
        raise ValueError("both operators must act on exactly two subsystems")
    if proj_a.d != proj_b.d:
        raise ValueError(f"local dimension mismatch: {proj_a.d} vs {proj_b.d}")
    for name, p in (("first", proj_a), ("second", proj_b)):
        dev = float(np.max(np.abs((p @ p - p).mat)))
        if dev > 1e-10:
            raise ValueError(f"{name} operator is not a projector (deviation {dev:.3e})")
    s0 = (proj_a.trace() * proj_b.trace()).real  # equals 1 for rank-1 inputs
    s1 = (partial_trace(proj_a, {1}) @ partial_trace(proj_b, {1})).trace().real
    s2 = (partial_trace(proj_a, {2}) @ partial_trace(proj_b, {2})).trace().real
    s12 = (proj_a @ proj_b).trace().real
    return 0.25 * np.array(
        [
            s0 + s1 + s2 + s12,
            s0 - s1 + s2 - s12,
            s0 + s1 - s2 - s12,
            s0 - s1 - s2 + s12,
        ]
    )


# ---------------------------------------------------------------------------
# reductions


def reduce_pair(desc: StateDescriptor, i: int) -> StateDescriptor:
    """Trace out both members of pair i; fidelities marginalize over bit i."""
    if desc.K < 2:
        raise ValueError("reduction needs at least two pairs")
    if not 1 <= i <= desc.K:
        raise ValueError(f"pair index {i} out of range 1..{desc.K}")
    marginal = desc.fidelities.reshape((2,) * desc.K).sum(axis=i - 1).reshape(-1)
    sigma = desc.sigma[: i - 1] + desc.sigma[i:]
    return StateDescriptor(desc.d, sigma, marginal)


def maximally_mixed_pair(d: int) -> StateDescriptor:
    """Descriptor of I / d^2 on one pair (Werner-family coordinates)."""
    return StateDescriptor(d, (0,), np.array([(d + 1) / (2 * d), (d - 1) / (2 * d)]))


def reduce_mixed_pair(desc: StateDescriptor, i: int, j: int) -> StateDescriptor:
    """Trace out the first member of pair i and the second member of pair j.

    For i != j this orphans the partners of both pairs, which end up
    maximally mixed and uncorrelated with the rest, so the result carries
    the same information as dropping pairs i and j entirely.  With only
    two pairs nothing invariant remains and the leftover two slots are
    exactly maximally mixed; that descriptor is returned (in Werner-family
    coordinates, though for I / d^2 every family agrees).
    """
    if i == j:
        raise ValueError("pair indices must differ; use reduce_pair for a matched pair")
    for idx in (i, j):
        if not 1 <= idx <= desc.K:
            raise ValueError(f"pair index {idx} out of range 1..{desc.K}")
    if desc.K == 2:
        return maximally_mixed_pair(desc.d)
    return reduce_pair(reduce_pair(desc, max(i, j)), min(i, j))
