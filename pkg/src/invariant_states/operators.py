"""Dense complex operators on tensor powers of a qudit space.

Everything is stored as a full d^n x d^n complex matrix; nothing here is
sparse-aware and supported sizes are deliberately small (matrix side up
to 4096).  Subsystems are numbered 1..n, matching the usual reading of a
basis label |i_1 i_2 ... i_n> from left to right.

All values are immutable after construction: matrices are frozen with the
numpy writeable flag, so operators can be shared freely between threads
and cached without defensive copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_SIDE = 4096

HERMITICITY_ATOL = 1e-10


def _frozen(mat: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(mat, dtype=np.complex128)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class Operator:
    """A dense operator on ``n`` qudits of local dimension ``d``.

    Attributes:
        d: local dimension of each subsystem, at least 2.
        n: number of subsystems, at least 1.
        mat: complex matrix of shape (d**n, d**n), read-only.
    """

    d: int
    n: int
    mat: np.ndarray

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"local dimension must be >= 2, got {self.d}")
        if self.n < 1:
            raise ValueError(f"subsystem count must be >= 1, got {self.n}")
        side = self.d**self.n
        if side > MAX_SIDE:
            raise ValueError(
                f"scale exceeded: matrix side {side} is larger than the "
                f"supported maximum {MAX_SIDE}"
            )
        m = np.asarray(self.mat)
        if m.shape != (side, side):
            raise ValueError(
                f"matrix shape {m.shape} does not match d**n = {side} for "
                f"d={self.d}, n={self.n}"
            )
        object.__setattr__(self, "mat", _frozen(m))

    @property
    def side(self) -> int:
        return self.d**self.n

    def trace(self) -> complex:
        return complex(np.trace(self.mat))

    def dag(self) -> "Operator":
        return Operator(self.d, self.n, self.mat.conj().T)

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        return float(np.max(np.abs(self.mat - self.mat.conj().T))) <= atol

    def __add__(self, other: "Operator") -> "Operator":
        self._check_same_space(other)
        return Operator(self.d, self.n, self.mat + other.mat)

    def __sub__(self, other: "Operator") -> "Operator":
        self._check_same_space(other)
        return Operator(self.d, self.n, self.mat - other.mat)

    def __mul__(self, scalar) -> "Operator":
        return Operator(self.d, self.n, self.mat * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Operator":
        return Operator(self.d, self.n, self.mat / complex(scalar))

    def __neg__(self) -> "Operator":
        return Operator(self.d, self.n, -self.mat)

    def __matmul__(self, other: "Operator") -> "Operator":
        self._check_same_space(other)
        return Operator(self.d, self.n, self.mat @ other.mat)

    def _check_same_space(self, other: "Operator"):
        if not isinstance(other, Operator):
            raise TypeError(f"expected Operator, got {type(other).__name__}")
        if (self.d, self.n) != (other.d, other.n):
            raise ValueError(
                f"operator spaces differ: d={self.d},n={self.n} vs "
                f"d={other.d},n={other.n}"
            )


def identity(d: int, n: int = 1) -> Operator:
    return Operator(d, n, np.eye(d**n))


def basis_ket(d: int, digits: str | Sequence[int]) -> np.ndarray:
    """Computational basis vector |i_1 ... i_n> as a length d**n array."""
    if isinstance(digits, str):
        digits = [int(c) for c in digits]
    digits = list(digits)
    if not digits or any(not 0 <= i < d for i in digits):
        raise ValueError(f"digits must lie in [0, {d}), got {digits}")
    index = 0
    for i in digits:
        index = index * d + i
    ket = np.zeros(d ** len(digits), dtype=np.complex128)
    ket[index] = 1.0
    return ket


def projector_onto(d: int, vector: np.ndarray) -> Operator:
    """Rank-1 projector |v><v| onto a (normalized) vector of length d**n."""
    v = np.asarray(vector, dtype=np.complex128).reshape(-1)
    n = round(np.log(v.size) / np.log(d))
    if d**n != v.size:
        raise ValueError(f"vector length {v.size} is not a power of d={d}")
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ValueError("cannot project onto the zero vector")
    v = v / norm
    return Operator(d, n, np.outer(v, v.conj()))


def tensor_product(a: Operator, b: Operator) -> Operator:
    """Kronecker product with a's subsystems leading."""
    if a.d != b.d:
        raise ValueError(f"local dimension mismatch: {a.d} vs {b.d}")
    return Operator(a.d, a.n + b.n, np.kron(a.mat, b.mat))


def _check_subsystems(subsystems: Iterable[int], n: int, allow_empty=False) -> tuple[int, ...]:
    subs = [int(s) for s in subsystems]
    out = tuple(sorted(set(subs)))
    if len(out) != len(subs):
        raise ValueError(f"duplicate subsystem index in {subs}")
    if not out and not allow_empty:
        raise ValueError("subsystem set must be nonempty")
    if out and (out[0] < 1 or out[-1] > n):
        raise ValueError(f"subsystem indices {out} out of range 1..{n}")
    return out


def partial_trace(a: Operator, subsystems: Iterable[int]) -> Operator:
    """Trace out the listed subsystems (1-based).

    The result acts on the complement subsystems in their original order
    and has the same total trace as the input.
    """
    subs = _check_subsystems(subsystems, a.n)
    keep = [s for s in range(1, a.n + 1) if s not in subs]
    if not keep:
        raise ValueError("cannot trace out every subsystem; use .trace()")
    tensor = a.mat.reshape((a.d,) * (2 * a.n))
    letters = "abcdefghijklmnopqrstuvwxyz"
    row = list(letters[: a.n])
    col, out_row, out_col = [], [], []
    extra = a.n
    for s in range(1, a.n + 1):
        if s in subs:
            col.append(row[s - 1])
        else:
            col.append(letters[extra])
            out_row.append(row[s - 1])
            out_col.append(letters[extra])
            extra += 1
    subscripts = "".join(row) + "".join(col) + "->" + "".join(out_row) + "".join(out_col)
    reduced = np.einsum(subscripts, tensor)
    side = a.d ** len(keep)
    return Operator(a.d, len(keep), reduced.reshape(side, side))


def partial_transpose(a: Operator, subsystems: Iterable[int]) -> Operator:
    """Transpose the listed tensor factors in the computational basis.

    An empty subsystem set is allowed and returns the operator unchanged.
    Applying the same transposition twice restores the input exactly.
    """
    subs = _check_subsystems(subsystems, a.n, allow_empty=True)
    if not subs:
        return a
    axes = list(range(2 * a.n))
    for s in subs:
        axes[s - 1], axes[a.n + s - 1] = axes[a.n + s - 1], axes[s - 1]
    out = a.mat.reshape((a.d,) * (2 * a.n)).transpose(axes).reshape(a.side, a.side)
    return Operator(a.d, a.n, out)


def min_eigenvalue(a: Operator, herm_atol: float = HERMITICITY_ATOL) -> float:
    """Smallest eigenvalue of a Hermitian operator.

    Raises ValueError if the input deviates from Hermiticity by more than
    ``herm_atol`` in any entry.
    """
    deviation = float(np.max(np.abs(a.mat - a.mat.conj().T)))
    if deviation > herm_atol:
        raise ValueError(f"matrix is not Hermitian (max deviation {deviation:.3e})")
    return float(np.linalg.eigvalsh(a.mat)[0])


def frobenius_distance(a: Operator, b: Operator) -> float:
    if a.mat.shape != b.mat.shape:
        raise ValueError(f"shape mismatch: {a.mat.shape} vs {b.mat.shape}")
    return float(np.linalg.norm(a.mat - b.mat))


@dataclass(frozen=True)
class Rng:
    """Deterministic random stream identified by (seed, counter).

    Built on the counter-based Philox generator, so identical (seed,
    counter) values reproduce identical samples on every platform, and
    distinct counters give non-overlapping streams.  Rng values are
    immutable; derive fresh streams with :meth:`at`.
    """

    seed: int
    counter: int = 0

    def at(self, offset: int) -> "Rng":
        """The stream ``offset`` counter steps ahead of this one."""
        return Rng(self.seed, self.counter + int(offset))

    def generator(self) -> np.random.Generator:
        # each counter value owns a disjoint 2**128-sample block
        return np.random.Generator(
            np.random.Philox(key=self.seed, counter=self.counter << 128)
        )


def _haar_sample(gen: np.random.Generator, d: int) -> np.ndarray:
    """One Haar-distributed d x d unitary drawn from an open generator.

    Ginibre matrix, QR decomposition, then the R-diagonal phase correction
    that makes the distribution exactly Haar rather than merely unitary.
    """
    z = (gen.standard_normal((d, d)) + 1j * gen.standard_normal((d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def haar_unitary(d: int, rng: Rng) -> Operator:
    """A Haar-random unitary on a single d-dimensional system.

    Deterministic in ``rng``: the same (seed, counter) yields the same
    matrix bit for bit.  Draw sequences with ``haar_unitary(d, rng.at(i))``.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    return Operator(d, 1, _haar_sample(rng.generator(), d))
