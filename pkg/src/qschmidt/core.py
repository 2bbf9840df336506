"""Foundational two-qubit state operations.

A two-qubit pure state is a length-4 complex vector over the product basis,
with amplitudes ordered ``(c00, c01, c10, c11)``.  The first index labels
subsystem A, the second labels subsystem B, so the associated 2x2 coefficient
matrix is ``[[c00, c01], [c10, c11]]`` (rows indexed by A, columns by B).

All functions are pure: inputs are never mutated and identical inputs yield
bit-identical outputs.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import (
    NotFiniteError,
    NotNormalizedError,
    NotUnitaryError,
    ZeroVectorError,
)

#: Classification tolerance: product/entangled/maximal labels, diagonality
#: dispatch, and constructor admissibility checks.
DEFAULT_TOL = 1e-10

#: Verification tolerance: orthonormality, reconstruction, cross-checks.
VERIFY_TOL = 1e-12

# Below this squared norm a vector is treated as exactly zero.
_ZERO_FLOOR = 1e-300

KET0 = np.array([1.0 + 0.0j, 0.0 + 0.0j])
KET1 = np.array([0.0 + 0.0j, 1.0 + 0.0j])
PLUS = np.array([1.0 + 0.0j, 1.0 + 0.0j]) / math.sqrt(2.0)
MINUS = np.array([1.0 + 0.0j, -1.0 + 0.0j]) / math.sqrt(2.0)

PHI_PLUS = np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) / math.sqrt(2.0)
PHI_MINUS = np.array([1.0, 0.0, 0.0, -1.0], dtype=complex) / math.sqrt(2.0)
PSI_PLUS = np.array([0.0, 1.0, 1.0, 0.0], dtype=complex) / math.sqrt(2.0)
PSI_MINUS = np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / math.sqrt(2.0)


def _checked_complex(value, name: str) -> complex:
    z = complex(value)
    if not (cmath.isfinite(z)):
        raise NotFiniteError(f"{name} must be finite, got {value!r}")
    return z


def amplitudes(state) -> tuple[complex, complex, complex, complex]:
    """Return the four amplitudes of ``state`` as finite Python complex numbers."""
    if len(state) != 4:
        raise ValueError(f"a two-qubit state has 4 amplitudes, got {len(state)}")
    c00 = _checked_complex(state[0], "c00")
    c01 = _checked_complex(state[1], "c01")
    c10 = _checked_complex(state[2], "c10")
    c11 = _checked_complex(state[3], "c11")
    return c00, c01, c10, c11


def make_state(c00, c01, c10, c11, normalize: bool = False) -> np.ndarray:
    """Build a unit-norm two-qubit state from four amplitudes.

    With ``normalize`` off, inputs whose norm deviates from 1 by more than
    1e-10 are rejected; tiny drift is still scaled away so the returned state
    is always unit norm.
    """
    c = [_checked_complex(v, n) for v, n in
         zip((c00, c01, c10, c11), ("c00", "c01", "c10", "c11"))]
    nrm2 = sum(z.real * z.real + z.imag * z.imag for z in c)
    if nrm2 <= _ZERO_FLOOR:
        raise ZeroVectorError("all four amplitudes are zero")
    nrm = math.sqrt(nrm2)
    if not normalize and abs(nrm - 1.0) > 1e-10:
        raise NotNormalizedError(
            f"state norm is {nrm!r}; pass normalize=True to rescale")
    return np.array(c, dtype=complex) / nrm


def make_qubit(v0, v1, normalize: bool = False) -> np.ndarray:
    """Build a unit-norm single-qubit vector from two amplitudes."""
    a = _checked_complex(v0, "v0")
    b = _checked_complex(v1, "v1")
    nrm2 = a.real * a.real + a.imag * a.imag + b.real * b.real + b.imag * b.imag
    if nrm2 <= _ZERO_FLOOR:
        raise ZeroVectorError("both amplitudes are zero")
    nrm = math.sqrt(nrm2)
    if not normalize and abs(nrm - 1.0) > 1e-10:
        raise NotNormalizedError(
            f"vector norm is {nrm!r}; pass normalize=True to rescale")
    return np.array([a, b], dtype=complex) / nrm


def inner(a, b) -> complex:
    """Inner product of two two-qubit states, conjugate linear in ``a``."""
    a0, a1, a2, a3 = amplitudes(a)
    b0, b1, b2, b3 = amplitudes(b)
    return (a0.conjugate() * b0 + a1.conjugate() * b1
            + a2.conjugate() * b2 + a3.conjugate() * b3)


def coefficient_matrix(state) -> np.ndarray:
    """The state's 2x2 coefficient matrix, rows indexed by A, columns by B."""
    c00, c01, c10, c11 = amplitudes(state)
    return np.array([[c00, c01], [c10, c11]])


def gram(state) -> np.ndarray:
    """Gram matrix M^dagger M of the state's coefficient matrix M.

    Hermitian, positive semi-definite, unit trace for a unit state.
    """
    m = coefficient_matrix(state)
    return m.conj().T @ m


def concurrence(state) -> float:
    """Concurrence 2|c00*c11 - c01*c10|: 0 for product states, 1 when
    maximally entangled."""
    c00, c01, c10, c11 = amplitudes(state)
    return 2.0 * abs(c00 * c11 - c01 * c10)


def gram_offdiagonal(state) -> complex:
    """The (0, 1) entry of the Gram matrix, c00^* c01 + c10^* c11.

    This single scalar decides which closed-form decomposition branch
    applies: it vanishes exactly when the coefficient-matrix columns are
    orthogonal.
    """
    c00, c01, c10, c11 = amplitudes(state)
    return c00.conjugate() * c01 + c10.conjugate() * c11


def is_diagonal(state, tol: float = DEFAULT_TOL) -> bool:
    """True when the Gram matrix is diagonal within ``tol``."""
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    return abs(gram_offdiagonal(state)) <= tol


def tensor(a, b) -> np.ndarray:
    """Tensor product of two unit single-qubit vectors, c_jk = a_j * b_k."""
    a0 = _checked_complex(a[0], "a0")
    a1 = _checked_complex(a[1], "a1")
    b0 = _checked_complex(b[0], "b0")
    b1 = _checked_complex(b[1], "b1")
    for name, (x, y) in (("a", (a0, a1)), ("b", (b0, b1))):
        nrm = math.sqrt(x.real * x.real + x.imag * x.imag
                        + y.real * y.real + y.imag * y.imag)
        if abs(nrm - 1.0) > 1e-10:
            raise NotNormalizedError(f"factor {name} has norm {nrm!r}")
    return np.array([a0 * b0, a0 * b1, a1 * b0, a1 * b1])


def is_unitary(u, tol: float = VERIFY_TOL) -> bool:
    """True when ``u`` is a 2x2 matrix with u^dagger u = I within ``tol``."""
    m = np.asarray(u, dtype=complex)
    if m.shape != (2, 2):
        return False
    if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        return False
    return bool(np.max(np.abs(m.conj().T @ m - np.eye(2))) <= tol)


def apply_local(state, u_a, u_b) -> np.ndarray:
    """Apply local unitaries to each subsystem: the coefficient matrix maps
    as M -> u_a M u_b^T.  Concurrence is invariant under this action."""
    if not is_unitary(u_a):
        raise NotUnitaryError("u_a is not unitary within 1e-12")
    if not is_unitary(u_b):
        raise NotUnitaryError("u_b is not unitary within 1e-12")
    m = coefficient_matrix(state)
    out = np.asarray(u_a, dtype=complex) @ m @ np.asarray(u_b, dtype=complex).T
    return out.reshape(4)


def orthogonal_complement(v) -> np.ndarray:
    """The unit vector orthogonal to a unit single-qubit vector ``v``."""
    v0 = complex(v[0])
    v1 = complex(v[1])
    return np.array([-v1.conjugate(), v0.conjugate()])
