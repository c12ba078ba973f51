"""Dense Hermitian linear algebra on small matrices.

Everything downstream (means, inequality checks) is built from the pieces
here: a cyclic Jacobi eigensolver for complex Hermitian matrices, spectral
matrix functions, congruence, Kronecker/Hadamard products, and Loewner-order
comparison with explicit margins.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-13          # relative symmetry slack accepted on input
PD_RELATIVE_FLOOR = 1e-12      # smallest eigenvalue must exceed this times the largest
CONDITION_CAP = 1e12           # PD construction rejects worse-conditioned matrices
JACOBI_SWEEP_TOL = 1e-14       # off-diagonal Frobenius norm target, relative
JACOBI_MAX_SWEEPS = 64
DECOMP_TOL = 1e-12             # reconstruction / unitarity budget
TENSOR_DIM_CAP = 64            # kron refuses results larger than this


class LinalgError(Exception):
    """Base class for errors raised by this module."""


class DimensionError(LinalgError):
    pass


class HermitianError(LinalgError):
    pass


class NotPositiveDefiniteError(LinalgError):
    pass


class ConvergenceError(LinalgError):
    def __init__(self, message, off_residual):
        super().__init__(message)
        self.off_residual = off_residual


class FunctionDomainError(LinalgError):
    pass


class TensorSizeError(LinalgError):
    pass


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending, real) and a unitary of eigenvectors."""

    eigenvalues: np.ndarray
    unitary: np.ndarray

    @property
    def n(self):
        return self.eigenvalues.shape[0]


class HermitianMatrix:
    """An n-by-n self-adjoint complex matrix.

    Input arrays are validated to be Hermitian within a relative slack of
    ``HERMITIAN_TOL`` and then symmetrized exactly, so ``entries`` always
    satisfies A = A* to machine precision.  Instances are immutable; the
    spectral decomposition is computed lazily and cached.
    """

    __slots__ = ("_a", "_spec")

    def __init__(self, entries):
        a = np.array(entries, dtype=np.complex128)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionError(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] < 1:
            raise DimensionError("dimension must be at least 1")
        if not np.all(np.isfinite(a.view(np.float64))):
            raise HermitianError("matrix contains non-finite entries")
        scale = np.max(np.abs(a)) if a.size else 0.0
        dev = np.max(np.abs(a - a.conj().T))
        if dev > HERMITIAN_TOL * max(scale, 1e-300):
            raise HermitianError(
                f"matrix is not Hermitian: asymmetry {dev:.3e} exceeds "
                f"{HERMITIAN_TOL:.0e} * {scale:.3e}"
            )
        a = (a + a.conj().T) / 2.0
        a.flags.writeable = False
        self._a = a
        self._spec = None

    @property
    def array(self):
        """Read-only complex128 view of the entries."""
        return self._a

    @property
    def n(self):
        return self._a.shape[0]

    @staticmethod
    def identity(n):
        return HermitianMatrix(np.eye(n))

    @staticmethod
    def diagonal(values):
        return HermitianMatrix(np.diag(np.asarray(values, dtype=float)))

    def decomposition(self):
        """Cached spectral decomposition (computed by the Jacobi solver)."""
        if self._spec is None:
            self._spec = eig_hermitian(self)
        return self._spec

    def norm_fro(self):
        return float(np.linalg.norm(self._a))

    def norm_2(self):
        lam = self.decomposition().eigenvalues
        return float(max(abs(lam[0]), abs(lam[-1])))

    def trace(self):
        return float(np.real(np.trace(self._a)))

    def __add__(self, other):
        _require_same_dim(self, other)
        return HermitianMatrix(self._a + other.array)

    def __sub__(self, other):
        _require_same_dim(self, other)
        return HermitianMatrix(self._a - other.array)

    def __mul__(self, scalar):
        return HermitianMatrix(self._a * float(scalar))

    __rmul__ = __mul__

    def __repr__(self):
        return f"HermitianMatrix(n={self.n})"


class PDMatrix:
    """A positive definite Hermitian matrix.

    Construction runs the eigensolver and rejects matrices whose smallest
    eigenvalue is not strictly positive relative to the largest (condition
    number above ``CONDITION_CAP``).
    """

    __slots__ = ("_h",)

    def __init__(self, hermitian):
        if isinstance(hermitian, np.ndarray) or isinstance(hermitian, (list, tuple)):
            hermitian = HermitianMatrix(hermitian)
        spec = hermitian.decomposition()
        lam = spec.eigenvalues
        lo, hi = float(lam[0]), float(lam[-1])
        if hi <= 0.0 or lo <= PD_RELATIVE_FLOOR * hi:
            raise NotPositiveDefiniteError(
                f"not positive definite: eigenvalue range [{lo:.3e}, {hi:.3e}]"
            )
        if hi / lo > CONDITION_CAP:
            raise NotPositiveDefiniteError(
                f"condition number {hi / lo:.3e} exceeds cap {CONDITION_CAP:.0e}"
            )
        self._h = hermitian

    @property
    def hermitian(self):
        return self._h

    @property
    def array(self):
        return self._h.array

    @property
    def n(self):
        return self._h.n

    def decomposition(self):
        return self._h.decomposition()

    def norm_2(self):
        return self._h.norm_2()

    @staticmethod
    def identity(n):
        return PDMatrix(HermitianMatrix.identity(n))

    @staticmethod
    def _from_eigensystem(eigenvalues, unitary):
        """Trusted constructor from a known spectral decomposition.

        Used by spectral maps (e.g. matrix powers) where the eigensystem of
        the result is available exactly; avoids re-running the eigensolver.
        """
        order = np.argsort(eigenvalues, kind="stable")
        lam = np.ascontiguousarray(np.asarray(eigenvalues, dtype=float)[order])
        u = np.ascontiguousarray(unitary[:, order])
        a = (u * lam) @ u.conj().T
        h = HermitianMatrix(a)
        lam.flags.writeable = False
        u.flags.writeable = False
        h._spec = SpectralDecomposition(lam, u)
        lo, hi = float(lam[0]), float(lam[-1])
        if hi <= 0.0 or lo <= PD_RELATIVE_FLOOR * hi or hi / lo > CONDITION_CAP:
            raise NotPositiveDefiniteError(
                f"not positive definite: eigenvalue range [{lo:.3e}, {hi:.3e}]"
            )
        return PDMatrix(h)

    def __repr__(self):
        return f"PDMatrix(n={self.n})"


@dataclass(frozen=True)
class LoewnerVerdict:
    """Outcome of testing A <= B in the Loewner order.

    ``margin`` is the smallest eigenvalue of B - A; the comparison passes
    when the margin is no worse than -tolerance * max(1, scale) with
    scale = ||A||_2 + ||B||_2.
    """

    holds: bool
    margin: float
    scale: float
    tolerance: float


def _require_same_dim(a, b):
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")


def eig_hermitian(A, max_sweeps=JACOBI_MAX_SWEEPS):
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns a SpectralDecomposition with eigenvalues ascending.  Converges
    when the off-diagonal Frobenius norm drops below
    ``JACOBI_SWEEP_TOL * ||A||_F``; raises ConvergenceError (carrying the
    off-diagonal residual) if that does not happen within ``max_sweeps``
    sweeps.  Deterministic for a fixed input.
    """
    if isinstance(A, HermitianMatrix):
        m = np.array(A.array, dtype=np.complex128)
    else:
        m = np.array(HermitianMatrix(A).array, dtype=np.complex128)
    n = m.shape[0]
    u = np.eye(n, dtype=np.complex128)
    fro = np.linalg.norm(m)
    if n == 1 or fro == 0.0:
        return _finish_decomposition(m, u, A)

    target = JACOBI_SWEEP_TOL * fro
    converged = False
    for _ in range(max_sweeps):
        off = _offdiag_norm(m)
        if off <= target:
            converged = True
            break
        skip = target / (n * n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                absb = abs(apq)
                if absb <= skip:
                    continue
                app = m[p, p].real
                aqq = m[q, q].real
                phase = apq / absb
                tau = (aqq - app) / (2.0 * absb)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # G = diag(1, conj(phase)) . [[c, s], [-s, c]]
                g = np.array(
                    [[c, s], [-s * phase.conjugate(), c * phase.conjugate()]],
                    dtype=np.complex128,
                )
                m[:, (p, q)] = m[:, (p, q)] @ g
                m[(p, q), :] = g.conj().T @ m[(p, q), :]
                m[p, q] = 0.0
                m[q, p] = 0.0
                m[p, p] = m[p, p].real
                m[q, q] = m[q, q].real
                u[:, (p, q)] = u[:, (p, q)] @ g
    else:
        converged = False
    if not converged:
        off = _offdiag_norm(m)
        if off > target:
            raise ConvergenceError(
                f"Jacobi sweep limit {max_sweeps} reached with off-diagonal "
                f"residual {off:.3e} (target {target:.3e})",
                off_residual=float(off),
            )
    return _finish_decomposition(m, u, A)


def _offdiag_norm(m):
    off = m - np.diag(np.diagonal(m))
    return float(np.linalg.norm(off))


def _finish_decomposition(m, u, original):
    lam = np.real(np.diagonal(m)).copy()
    order = np.argsort(lam, kind="stable")
    lam = np.ascontiguousarray(lam[order])
    u = np.ascontiguousarray(u[:, order])
    a = original.array if isinstance(original, HermitianMatrix) else np.asarray(original)
    fro = np.linalg.norm(a)
    recon = float(np.linalg.norm((u * lam) @ u.conj().T - a))
    ortho = float(np.linalg.norm(u.conj().T @ u - np.eye(len(lam))))
    if recon > DECOMP_TOL * max(1.0, fro) or ortho > DECOMP_TOL:
        raise ConvergenceError(
            f"eigendecomposition failed validation: reconstruction {recon:.3e}, "
            f"unitarity {ortho:.3e}",
            off_residual=recon,
        )
    lam.flags.writeable = False
    u.flags.writeable = False
    return SpectralDecomposition(lam, u)


def apply_function(A, fn):
    """Spectral application of a scalar function to a PD matrix.

    Returns U diag(fn(lambda_i)) U* as a HermitianMatrix.  Raises
    FunctionDomainError naming the offending eigenvalue if fn is undefined
    or non-finite there.
    """
    spec = A.decomposition()
    values = np.empty(spec.n, dtype=float)
    for i, lam in enumerate(spec.eigenvalues):
        try:
            v = fn(float(lam))
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise FunctionDomainError(
                f"function undefined at eigenvalue {lam!r}: {exc}"
            ) from exc
        v = complex(v)
        if abs(v.imag) > 1e-12 * max(1.0, abs(v.real)) or not math.isfinite(v.real):
            raise FunctionDomainError(
                f"function value {v!r} at eigenvalue {lam!r} is not finite real"
            )
        values[i] = v.real
    u = spec.unitary
    out = (u * values) @ u.conj().T
    return HermitianMatrix((out + out.conj().T) / 2.0)


def power(A, t):
    """Fractional power of a PD matrix; power(A, 0) = I, power(A, -1) = inverse."""
    spec = A.decomposition()
    return PDMatrix._from_eigensystem(spec.eigenvalues ** float(t), spec.unitary)


def congruence(C, X):
    """The congruence transform C* X C, symmetrized exactly."""
    c = np.asarray(C, dtype=np.complex128)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise DimensionError(f"congruence matrix must be square, got {c.shape}")
    if c.shape[0] != X.n:
        raise DimensionError(f"dimension mismatch: {c.shape[0]} vs {X.n}")
    out = c.conj().T @ X.array @ c
    return HermitianMatrix((out + out.conj().T) / 2.0)


def kron(A, B, dim_cap=TENSOR_DIM_CAP):
    """Kronecker (tensor) product of two Hermitian matrices."""
    out = A.n * B.n
    if out > dim_cap:
        raise TensorSizeError(
            f"tensor product dimension {out} exceeds cap {dim_cap}"
        )
    return HermitianMatrix(np.kron(A.array, B.array))


def hadamard(A, B):
    """Entrywise (Hadamard) product of two same-size Hermitian matrices."""
    _require_same_dim(A, B)
    return HermitianMatrix(A.array * B.array)


def kron_diagonal_block(T, n):
    """Principal submatrix of an (n*n)-dim tensor product on indices i*(n+1).

    For T = kron(A, B) this recovers hadamard(A, B).
    """
    if T.n != n * n:
        raise DimensionError(f"expected dimension {n * n}, got {T.n}")
    idx = np.arange(n) * (n + 1)
    return HermitianMatrix(T.array[np.ix_(idx, idx)])


def loewner_leq(A, B, tol=1e-8):
    """Test A <= B in the Loewner order, reporting the margin either way."""
    _require_same_dim(A, B)
    a = A.hermitian if isinstance(A, PDMatrix) else A
    b = B.hermitian if isinstance(B, PDMatrix) else B
    diff = b - a
    margin = float(diff.decomposition().eigenvalues[0])
    scale = a.norm_2() + b.norm_2()
    holds = margin >= -tol * max(1.0, scale)
    return LoewnerVerdict(holds=holds, margin=margin, scale=scale, tolerance=tol)


def rel_residual(X, Y):
    """Relative Frobenius distance, floored at unit scale."""
    x = X.hermitian if isinstance(X, PDMatrix) else X
    y = Y.hermitian if isinstance(Y, PDMatrix) else Y
    _require_same_dim(x, y)
    denom = max(1.0, x.norm_fro(), y.norm_fro())
    return float(np.linalg.norm(x.array - y.array)) / denom


def pd_sum(mats, scale=1.0):
    """Positive definite sum (optionally scaled) of PD matrices."""
    if not mats:
        raise DimensionError("empty sum")
    acc = mats[0].array.copy()
    for m in mats[1:]:
        acc = acc + m.array
    return PDMatrix(HermitianMatrix(acc * float(scale)))


# ---------------------------------------------------------------------------
# Matrix file format: {"n": int, "field": "real"|"complex",
#                      "entries": [[re, im], ...]} row-major, length n^2.
# ---------------------------------------------------------------------------

def matrix_to_dict(A):
    a = A.array if isinstance(A, (HermitianMatrix, PDMatrix)) else np.asarray(A)
    n = a.shape[0]
    is_real = float(np.max(np.abs(a.imag))) == 0.0
    entries = [[float(v.real), float(v.imag)] for v in a.reshape(-1)]
    return {"n": n, "field": "real" if is_real else "complex", "entries": entries}


def matrix_from_dict(d):
    n = int(d["n"])
    entries = d["entries"]
    if len(entries) != n * n:
        raise DimensionError(
            f"matrix file claims n={n} but has {len(entries)} entries"
        )
    a = np.array(
        [complex(re, im) for re, im in entries], dtype=np.complex128
    ).reshape(n, n)
    if d.get("field") == "real" and np.max(np.abs(a.imag)) != 0.0:
        raise HermitianError("field declared real but imaginary parts present")
    return HermitianMatrix(a)


def save_matrix(path, A):
    with open(path, "w") as fh:
        json.dump(matrix_to_dict(A), fh)


def load_matrix(path):
    with open(path) as fh:
        return matrix_from_dict(json.load(fh))
