"""Dense complex linear algebra for few-mode quantum operators.

Everything in this package works on plain numpy arrays.  A register of n
two-level modes lives in dimension 2**n, and mode 1 is stored as the most
significant bit of the basis index, so the product ket |abc> sits at index
4a + 2b + c.  Mode indices are 1-based throughout.  The sign convention is
sigma_z |0> = +|0>.

Operators never exceed dimension 16 (four modes), so the eigensolver is a
cyclic Jacobi iteration on the Hermitian matrix rather than a general
purpose routine.  All functions are pure and never mutate their inputs.
"""

from __future__ import annotations

import numpy as np

MAX_DIM = 16
HERMITICITY_ATOL = 1e-10

__all__ = [
    "MAX_DIM",
    "mode_count",
    "tensor",
    "density",
    "partial_trace",
    "partial_transpose",
    "hermitian_eigenvalues",
    "trace_norm",
    "expectation",
    "purity",
    "check_state",
    "check_density",
]


def mode_count(dim: int) -> int:
    """Number of two-level modes for a Hilbert space of dimension ``dim``."""
    n = int(dim).bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def tensor(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of the factors, leftmost factor most significant.

    ``tensor(a, b)[i*db + k, j*db + l] = a[i, j] * b[k, l]`` with
    ``db = b.shape[0]``, which realizes the |abc> -> 4a+2b+c ordering.
    """
    if not factors:
        raise ValueError("tensor needs at least one factor")
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


def density(psi: np.ndarray) -> np.ndarray:
    """Rank-one density operator |psi><psi| from a state vector."""
    v = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(v, v.conj())


def _square_operator(rho: np.ndarray) -> tuple[np.ndarray, int]:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {rho.shape}")
    return rho, mode_count(rho.shape[0])


def partial_trace(rho: np.ndarray, mode: int) -> np.ndarray:
    """Trace out one mode of a multi-mode operator.

    Parameters
    ----------
    rho : 2^n x 2^n operator
    mode : 1-based index of the mode to discard

    Returns the reduced operator on the remaining modes, in their original
    order.  The trace is preserved exactly.
    """
    rho, n = _square_operator(rho)
    if n < 2:
        raise ValueError("cannot trace out the only mode")
    if not 1 <= mode <= n:
        raise ValueError(f"mode {mode} out of range 1..{n}")
    t = rho.reshape((2,) * (2 * n))
    t = np.trace(t, axis1=mode - 1, axis2=mode - 1 + n)
    d = 2 ** (n - 1)
    return t.reshape(d, d)


def partial_transpose(rho: np.ndarray, mode: int) -> np.ndarray:
    """Transpose the indices of a single mode, leaving the rest alone.

    The result is Hermitian whenever the input is, has the same trace, and
    is an involution: applying it twice on the same mode gives the input
    back exactly.
    """
    rho, n = _square_operator(rho)
    if not 1 <= mode <= n:
        raise ValueError(f"mode {mode} out of range 1..{n}")
    t = rho.reshape((2,) * (2 * n))
    t = np.swapaxes(t, mode - 1, mode - 1 + n)
    return t.reshape(rho.shape)


def _require_hermitian(matrix: np.ndarray, atol: float = HERMITICITY_ATOL) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DIM:
        raise ValueError(f"dimension {m.shape[0]} exceeds the supported maximum {MAX_DIM}")
    residual = float(np.max(np.abs(m - m.conj().T)))
    if residual > atol:
        raise ValueError(f"matrix is not Hermitian (residual {residual:.3e} > {atol:.0e})")
    return m


def hermitian_eigenvalues(
    matrix: np.ndarray, off_tol: float = 1e-14, max_sweeps: int = 100
) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, in ascending order.

    Cyclic Jacobi iteration: each sweep visits every off-diagonal pair
    (p, q) and applies the complex Givens rotation that zeroes a[p, q].
    Sweeps repeat until the Frobenius mass of the off-diagonal part drops
    below ``off_tol``; convergence is quadratic, so a handful of sweeps
    suffices at dimension <= 16.
    """
    a = _require_hermitian(matrix).copy()
    a = (a + a.conj().T) / 2.0
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real])
    for _ in range(max_sweeps):
        off_part = a.copy()
        np.fill_diagonal(off_part, 0.0)
        if np.linalg.norm(off_part) < off_tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                if abs(g) < 1e-300:
                    a[p, q] = a[q, p] = 0.0
                    continue
                phase = g / abs(g)
                tau = (a[q, q].real - a[p, p].real) / (2.0 * abs(g))
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # unitary J: J[p,p]=c, J[p,q]=s, J[q,p]=-s*conj(phase), J[q,q]=c*conj(phase)
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(phase) * col_q
                a[:, q] = s * col_p + c * np.conj(phase) * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * row_p + c * phase * row_q
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    else:
        raise RuntimeError("Jacobi eigensolver did not converge")
    return np.sort(np.real(np.diag(a)))


def trace_norm(matrix: np.ndarray) -> float:
    """Trace norm of a Hermitian matrix: the sum of absolute eigenvalues."""
    return float(np.sum(np.abs(hermitian_eigenvalues(matrix))))


def expectation(rho: np.ndarray, observable: np.ndarray) -> float:
    """Real part of Tr[rho O]."""
    return float(np.einsum("ij,ji->", np.asarray(rho, complex), np.asarray(observable, complex)).real)


def purity(rho: np.ndarray) -> float:
    """Tr[rho^2]; equals 1 exactly for pure states."""
    rho = np.asarray(rho, dtype=complex)
    return float(np.einsum("ij,ji->", rho, rho).real)


def check_state(psi: np.ndarray, atol: float = 1e-12) -> np.ndarray:
    """Validate that psi is a normalized state vector; returns it as complex."""
    v = np.asarray(psi, dtype=complex).reshape(-1)
    mode_count(v.size)
    norm_sq = float(np.sum(np.abs(v) ** 2))
    if abs(norm_sq - 1.0) > atol:
        raise ValueError(f"state vector is not normalized (|psi|^2 = {norm_sq!r})")
    return v


def check_density(
    rho: np.ndarray,
    herm_atol: float = 1e-12,
    trace_atol: float = 1e-12,
    eig_floor: float = -1e-10,
) -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity of a density operator.

    Raises ValueError with the offending residual; returns rho as complex
    on success.  Positivity is checked against ``eig_floor`` to allow for
    roundoff in the smallest eigenvalue.
    """
    rho, _ = _square_operator(rho)
    herm = float(np.max(np.abs(rho - rho.conj().T)))
    if herm > herm_atol:
        raise ValueError(f"density operator not Hermitian (residual {herm:.3e})")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > trace_atol:
        raise ValueError(f"density operator trace is {tr!r}, expected 1")
    lowest = float(hermitian_eigenvalues((rho + rho.conj().T) / 2.0)[0])
    if lowest < eig_floor:
        raise ValueError(f"density operator has negative eigenvalue {lowest:.3e}")
    return rho
