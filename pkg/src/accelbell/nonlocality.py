"""Bipartite CHSH and tripartite Svetlichny quantities with their closed bounds.

Setting conventions
-------------------
CHSH: party 1 measures along a or a', party 2 along b or b'.  Svetlichny:
party 1 chooses a/a', party 2 chooses c/c', party 3 chooses b/b'; the
Svetlichny combination implemented here is the standard eight-term form

    S = A(CK' + C'K) + A'(CK - C'K'),    K = B + B',  K' = B - B',

whose local-realistic-nonlocal hybrid bound is 4 and whose algebraic
quantum maximum is 4 sqrt(2) (a flip of b' maps it to the textbook
sign pattern with +1 on zero- or one-primed terms).

Directions may be given as unit 3-vectors or (theta, phi) pairs, and the
evaluators accept stacked direction arrays with leading batch axes.
A value only counts as a violation when it clears the classical bound by
more than ``VIOLATION_TOL``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import expectation, hermitian_eigenvalues, tensor
from .states import as_direction, pauli_dot, spin_observable

CHSH_CLASSICAL_BOUND = 2.0
CHSH_QUANTUM_MAX = 2.0 * math.sqrt(2.0)
SVETLICHNY_CLASSICAL_BOUND = 4.0
SVETLICHNY_QUANTUM_MAX = 4.0 * math.sqrt(2.0)
VIOLATION_TOL = 1e-9

# maximizer of |sin^2 g + cos g| on [0, pi]: cos g = 1/2
GAMMA_STAR = math.pi / 3.0

__all__ = [
    "CHSH_CLASSICAL_BOUND",
    "CHSH_QUANTUM_MAX",
    "SVETLICHNY_CLASSICAL_BOUND",
    "SVETLICHNY_QUANTUM_MAX",
    "VIOLATION_TOL",
    "GAMMA_STAR",
    "ChshSettings",
    "SvetlichnySettings",
    "ChshThreshold",
    "GghzBound",
    "correlation",
    "chsh_value",
    "chsh_restricted",
    "restricted_settings",
    "chsh_restricted_max",
    "chsh_threshold",
    "horodecki_max",
    "svetlichny_value",
    "svetlichny_bound_gghz",
    "svetlichny_bound_ms_pair",
    "svetlichny_bound_ms_slice",
    "violates_chsh",
    "violates_svetlichny",
]


@dataclass(frozen=True)
class ChshSettings:
    """Four measurement directions: a, a' on mode 1 and b, b' on mode 2."""

    a: object
    a_prime: object
    b: object
    b_prime: object

    def as_array(self) -> np.ndarray:
        return np.stack([as_direction(d) for d in (self.a, self.a_prime, self.b, self.b_prime)])


@dataclass(frozen=True)
class SvetlichnySettings:
    """Six directions: a/a' on mode 1, c/c' on mode 2, b/b' on mode 3."""

    a: object
    a_prime: object
    c: object
    c_prime: object
    b: object
    b_prime: object

    def as_array(self) -> np.ndarray:
        return np.stack(
            [as_direction(d) for d in (self.a, self.a_prime, self.c, self.c_prime, self.b, self.b_prime)]
        )


def _settings_array(settings, count: int) -> np.ndarray:
    """Normalize settings to a float array of unit vectors, shape (..., count, 3)."""
    if hasattr(settings, "as_array"):
        arr = settings.as_array()
    else:
        arr = np.asarray(settings, dtype=float)
        if arr.ndim >= 2 and arr.shape[-1] == 2:
            theta, phi = arr[..., 0], arr[..., 1]
            st = np.sin(theta)
            arr = np.stack([st * np.cos(phi), st * np.sin(phi), np.cos(theta)], axis=-1)
    if arr.ndim < 2 or arr.shape[-2] != count or arr.shape[-1] != 3:
        raise ValueError(f"expected {count} directions of dimension 3, got shape {arr.shape}")
    norms = np.einsum("...i,...i->...", arr, arr)
    if np.max(np.abs(norms - 1.0)) > 1e-10:
        raise ValueError("all measurement directions must be unit vectors")
    return arr


def _check_rho(rho: np.ndarray, modes: int) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    d = 2**modes
    if rho.shape != (d, d):
        raise ValueError(f"expected a {modes}-mode operator of shape {(d, d)}, got {rho.shape}")
    return rho


def _kron2(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    out = np.einsum("...ij,...kl->...ikjl", x, y)
    return out.reshape(out.shape[:-4] + (4, 4))


def _kron3(x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
    out = np.einsum("...ij,...kl,...mn->...ikmjln", x, y, z)
    return out.reshape(out.shape[:-6] + (8, 8))


def _maybe_scalar(values: np.ndarray):
    return float(values) if values.ndim == 0 else values


def correlation(rho: np.ndarray, a, b) -> float:
    """Tr[rho (a.sigma x b.sigma)] for a two-mode operator; lies in [-1, 1]."""
    rho = _check_rho(rho, 2)
    return expectation(rho, tensor(spin_observable(a), spin_observable(b)))


def chsh_value(rho: np.ndarray, settings) -> float | np.ndarray:
    """|C(a,b) + C(a',b) + C(a,b') - C(a',b')| for a two-mode operator.

    ``settings`` is a ChshSettings or an (..., 4, 3) direction stack in the
    order (a, a', b, b'); batched stacks return an array of values.
    """
    rho = _check_rho(rho, 2)
    dirs = _settings_array(settings, 4)
    obs = pauli_dot(dirs)
    a, ap, b, bp = (obs[..., m, :, :] for m in range(4))
    combo = _kron2(a, b + bp) + _kron2(ap, b - bp)
    vals = np.abs(np.einsum("...ij,ji->...", combo, rho).real)
    assert np.all(vals <= CHSH_QUANTUM_MAX + VIOLATION_TOL), "CHSH value above the quantum maximum"
    return _maybe_scalar(vals)


def restricted_settings(gamma: float, r: float = 0.0) -> ChshSettings:
    """The z-symmetric two-setting family realizing the restricted CHSH form.

    a = b = z, and the primed vectors sit at polar angle gamma.  At r = 0
    they lie in a common plane on opposite sides of z (the coplanar
    configuration with a'/b' angle 2 gamma).  The damped singlet carries
    correlation matrix diag(-cos r, -cos r, -cos^2 r): transverse
    components damp more slowly than the z-z one, so for r > 0 the primed
    vectors are splayed to azimuthal separation arccos(-cos r), which keeps
    their transverse correlation equal to -cos^2(r) cos(2 gamma) and makes
    the closed form of ``chsh_restricted`` exact for every r.
    """
    g = float(gamma)
    split = math.pi - float(r)
    return ChshSettings(
        a=np.array([0.0, 0.0, 1.0]),
        a_prime=np.array([math.sin(g) * math.cos(split), math.sin(g) * math.sin(split), math.cos(g)]),
        b=np.array([0.0, 0.0, 1.0]),
        b_prime=np.array([math.sin(g), 0.0, math.cos(g)]),
    )


def chsh_restricted(r, gamma):
    """CHSH value of the damped singlet on the restricted family:
    2 cos^2(r) |sin^2(gamma) + cos(gamma)|.  Values above 2 are violations."""
    r = np.asarray(r, dtype=float)
    g = np.asarray(gamma, dtype=float)
    vals = 2.0 * np.cos(r) ** 2 * np.abs(np.sin(g) ** 2 + np.cos(g))
    return _maybe_scalar(vals)


def chsh_restricted_max(r):
    """Maximum of the restricted CHSH value over gamma, attained at
    gamma* = pi/3 independently of r (the r-dependence factorizes)."""
    return chsh_restricted(r, GAMMA_STAR)


@dataclass(frozen=True)
class ChshThreshold:
    """Where the coplanar CHSH violation dies as acceleration grows."""

    r_t: float
    cos2_rt: float
    a_t_over_omega_c: float
    gamma_star: float


def chsh_threshold() -> ChshThreshold:
    """Damping threshold of the coplanar CHSH violation.

    The gamma maximum of |sin^2 g + cos g| is 5/4, so the violation
    condition 2 cos^2(r) * 5/4 > 2 fails once cos^2(r) <= 4/5, i.e. at
    r_t = arccos(2/sqrt(5)).  In acceleration units this is
    a_t / (omega c) = 2 pi / ln 4.
    """
    return ChshThreshold(
        r_t=math.acos(2.0 / math.sqrt(5.0)),
        cos2_rt=0.8,
        a_t_over_omega_c=2.0 * math.pi / math.log(4.0),
        gamma_star=GAMMA_STAR,
    )


def horodecki_max(rho: np.ndarray) -> float:
    """Largest CHSH value of a two-qubit state over all projective settings.

    Closed form 2 sqrt(t1 + t2) with t1 >= t2 the two largest eigenvalues
    of T^T T, where T_ij = Tr[rho sigma_i x sigma_j].  Used as the
    independent oracle for the numerical maximizer.
    """
    from .states import PAULI

    rho = _check_rho(rho, 2)
    t = np.array([[expectation(rho, tensor(PAULI[i], PAULI[j])) for j in range(3)] for i in range(3)])
    evs = hermitian_eigenvalues(t.T @ t)
    return float(2.0 * math.sqrt(max(evs[-1] + evs[-2], 0.0)))


def svetlichny_value(rho: np.ndarray, settings) -> float | np.ndarray:
    """|Tr[rho S]| for the Svetlichny combination on a three-mode operator.

    ``settings`` is a SvetlichnySettings or an (..., 6, 3) direction stack
    in the order (a, a', c, c', b, b').
    """
    rho = _check_rho(rho, 3)
    dirs = _settings_array(settings, 6)
    obs = pauli_dot(dirs)
    a, ap, c, cp, b, bp = (obs[..., m, :, :] for m in range(6))
    k = b + bp
    kp = b - bp
    s = _kron3(a, c, kp) + _kron3(a, cp, k) + _kron3(ap, c, k) - _kron3(ap, cp, kp)
    vals = np.abs(np.einsum("...ij,ji->...", s, rho).real)
    assert np.all(vals <= SVETLICHNY_QUANTUM_MAX + VIOLATION_TOL), "Svetlichny value above the algebraic maximum"
    return _maybe_scalar(vals)


@dataclass(frozen=True)
class GghzBound:
    """Branch diagnostics of the damped-GGHZ Svetlichny maximum.

    The closed-form maximum has an axial branch, reached by settings along
    z, and an equatorial branch reached in the x-y plane.  ``bound`` is the
    branch selected by comparing the squared weights (axial wins ties);
    ``envelope`` is the larger of the two branch values and is what the
    numerical maximum is compared against.
    """

    bound: float
    branch: str
    axial_weight: float
    equatorial_weight: float
    axial_value: float
    equatorial_value: float
    envelope: float


def svetlichny_bound_gghz(theta1: float, r: float) -> GghzBound:
    """Closed-form Svetlichny maximum of the generalized GHZ state with the
    third qubit damped at angle r.

    Axial branch 4(2 cos^2 t1 cos^2 r - 1), equatorial branch
    4 sqrt(2) sin(2 t1) cos(r); the axial branch applies when its squared
    weight (2 cos^2 t1 cos^2 r - 1)^2 is at least sin^2(2 t1) cos^2(r).
    """
    t1 = float(theta1)
    r = float(r)
    axial_amp = 2.0 * math.cos(t1) ** 2 * math.cos(r) ** 2 - 1.0
    axial_weight = axial_amp**2
    equatorial_weight = math.sin(2.0 * t1) ** 2 * math.cos(r) ** 2
    axial_value = 4.0 * axial_amp
    equatorial_value = 4.0 * math.sqrt(2.0) * math.sin(2.0 * t1) * math.cos(r)
    if axial_weight >= equatorial_weight:
        branch, bound = "axial", axial_value
    else:
        branch, bound = "equatorial", equatorial_value
    return GghzBound(
        bound=bound,
        branch=branch,
        axial_weight=axial_weight,
        equatorial_weight=equatorial_weight,
        axial_value=axial_value,
        equatorial_value=equatorial_value,
        envelope=max(axial_value, equatorial_value),
    )


def svetlichny_bound_ms_pair(theta3, r):
    """Svetlichny maximum of the maximal slice state when the accelerated
    observer holds one of the paired qubits (1 or 2):
    4 cos(r) sqrt(cos^2 t3 + 2 sin^2 t3).  Exceeds 4 iff sin^2 t3 > tan^2 r."""
    t3 = np.asarray(theta3, dtype=float)
    r = np.asarray(r, dtype=float)
    vals = 4.0 * np.cos(r) * np.sqrt(np.cos(t3) ** 2 + 2.0 * np.sin(t3) ** 2)
    return _maybe_scalar(vals)


def svetlichny_bound_ms_slice(theta3, r):
    """Svetlichny maximum of the maximal slice state when the accelerated
    observer holds the slice qubit (3):
    4 sqrt(cos^2 t3 cos^2 2r + 2 sin^2 t3 cos^2 r)."""
    t3 = np.asarray(theta3, dtype=float)
    r = np.asarray(r, dtype=float)
    vals = 4.0 * np.sqrt(np.cos(t3) ** 2 * np.cos(2.0 * r) ** 2 + 2.0 * np.sin(t3) ** 2 * np.cos(r) ** 2)
    return _maybe_scalar(vals)


def violates_chsh(value: float) -> bool:
    """True when a CHSH value clears the classical bound 2 beyond tolerance."""
    return bool(value > CHSH_CLASSICAL_BOUND + VIOLATION_TOL)


def violates_svetlichny(value: float) -> bool:
    """True when a Svetlichny value clears the hybrid bound 4 beyond tolerance."""
    return bool(value > SVETLICHNY_CLASSICAL_BOUND + VIOLATION_TOL)
