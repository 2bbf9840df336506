"""Closed-form Schmidt decomposition of two-qubit pure states.

Two explicit formulas cover every state, selected by whether the state's
Gram matrix is diagonal:

* diagonal branch: the coefficients are the column norms of the coefficient
  matrix and the A-side basis is the normalized columns, with the
  computational basis on the B side;
* non-diagonal branch: the coefficients follow from the concurrence and the
  bases from the Gram-matrix eigenvectors written in closed form.

`schmidt` dispatches between the branches; `reconstruct` inverts any valid
decomposition exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, _ZERO_FLOOR, amplitudes
from .errors import DiagonalError, NotDiagonalError, ZeroVectorError

_E0 = (1.0 + 0.0j, 0.0 + 0.0j)
_E1 = (0.0 + 0.0j, 1.0 + 0.0j)


@dataclass
class SchmidtDecomposition:
    """Coefficients and single-qubit bases of a two-qubit decomposition.

    ``coeffs`` holds the two non-negative coefficients in descending order
    with ``coeffs[0]**2 + coeffs[1]**2 == 1``.  ``basis_a`` and ``basis_b``
    are 2x2 complex arrays whose *rows* are the A-side and B-side basis
    vectors; row ``j`` pairs with ``coeffs[j]``.  ``degenerate`` marks
    rank-1 inputs whose second basis pair was completed arbitrarily.
    """

    coeffs: np.ndarray
    basis_a: np.ndarray
    basis_b: np.ndarray
    degenerate: bool = False


def _wrap(parts) -> SchmidtDecomposition:
    (l0, l1), (a0, a1), (b0, b1), degenerate = parts
    return SchmidtDecomposition(
        coeffs=np.array([l0, l1]),
        basis_a=np.array([a0, a1]),
        basis_b=np.array([b0, b1]),
        degenerate=degenerate,
    )


def _perp(v):
    return (-v[1].conjugate(), v[0].conjugate())


def _diag_parts(c00, c01, c10, c11):
    """Diagonal-branch decomposition from the four amplitudes."""
    n0 = c00.real * c00.real + c00.imag * c00.imag \
        + c10.real * c10.real + c10.imag * c10.imag
    n1 = c01.real * c01.real + c01.imag * c01.imag \
        + c11.real * c11.real + c11.imag * c11.imag
    if n0 <= _ZERO_FLOOR or n1 <= _ZERO_FLOOR:
        if n0 <= _ZERO_FLOOR and n1 <= _ZERO_FLOOR:
            raise ZeroVectorError("state vector is zero")
        # Rank 1: one column vanishes.  Complete the bases with the
        # orthogonal computational complement and flag the result.
        if n0 > n1:
            l0 = math.sqrt(n0)
            a0 = (c00 / l0, c10 / l0)
            b0, b1 = _E0, _E1
        else:
            l0 = math.sqrt(n1)
            a0 = (c01 / l0, c11 / l0)
            b0, b1 = _E1, _E0
        return (l0, 0.0), (a0, _perp(a0)), (b0, b1), True
    l0 = math.sqrt(n0)
    l1 = math.sqrt(n1)
    a0 = (c00 / l0, c10 / l0)
    a1 = (c01 / l1, c11 / l1)
    if l1 > l0:
        return (l1, l0), (a1, a0), (_E1, _E0), False
    return (l0, l1), (a0, a1), (_E0, _E1), False


def _nondiag_parts(c00, c01, c10, c11, tol):
    """Non-diagonal-branch decomposition from the four amplitudes."""
    g = c00.conjugate() * c01 + c10.conjugate() * c11
    g2 = g.real * g.real + g.imag * g.imag
    if g2 <= tol * tol:
        raise DiagonalError(
            "state satisfies the diagonal condition; the non-diagonal "
            "formula's internal vectors vanish (use the diagonal branch)")
    r0 = c00.real * c00.real + c00.imag * c00.imag \
        + c10.real * c10.real + c10.imag * c10.imag
    r1 = c01.real * c01.real + c01.imag * c01.imag \
        + c11.real * c11.real + c11.imag * c11.imag
    u = 0.5 * (r1 - r0)
    half_gap = math.sqrt(u * u + g2)
    lam0 = math.sqrt(0.5 * (r0 + r1) + half_gap)
    det = c00 * c11 - c01 * c10
    conc = 2.0 * abs(det)
    lam1 = conc / (2.0 * lam0)  # stable for small concurrence

    # Second components of the eigenvector pair (g, s_j).  The smaller one
    # follows from s0 * s1 = -|g|^2, avoiding cancellation.
    if u >= 0.0:
        s0 = u + half_gap
        s1 = -g2 / s0
    else:
        s1 = u - half_gap
        s0 = -g2 / s1
    ny0 = math.sqrt(g2 + s0 * s0)
    ny1 = math.sqrt(g2 + s1 * s1)
    gc = g.conjugate()
    b0 = (gc / ny0, s0 / ny0)
    b1 = (gc / ny1, s1 / ny1)

    x00 = c00 * g + c01 * s0
    x01 = c10 * g + c11 * s0
    nx0 = math.sqrt(x00.real * x00.real + x00.imag * x00.imag
                    + x01.real * x01.real + x01.imag * x01.imag)
    a0 = (x00 / nx0, x01 / nx0)
    # The second A-side vector is the exact orthogonal complement of the
    # first, phase aligned with the formula's (possibly tiny) image vector.
    w = _perp(a0)
    x10 = c00 * g + c01 * s1
    x11 = c10 * g + c11 * s1
    z = w[0].conjugate() * x10 + w[1].conjugate() * x11
    az = abs(z)
    phase = z / az if az > 0.0 else 1.0 + 0.0j
    a1 = (phase * w[0], phase * w[1])
    return (lam0, lam1), (a0, a1), (b0, b1), False


def _parts(c00, c01, c10, c11, tol):
    g = c00.conjugate() * c01 + c10.conjugate() * c11
    if abs(g) <= tol:
        return _diag_parts(c00, c01, c10, c11)
    return _nondiag_parts(c00, c01, c10, c11, tol)


def _reconstruct_parts(parts):
    (l0, l1), (a0, a1), (b0, b1), _ = parts
    return (
        l0 * a0[0] * b0[0] + l1 * a1[0] * b1[0],
        l0 * a0[0] * b0[1] + l1 * a1[0] * b1[1],
        l0 * a0[1] * b0[0] + l1 * a1[1] * b1[0],
        l0 * a0[1] * b0[1] + l1 * a1[1] * b1[1],
    )


def schmidt_diagonal(state, tol: float = DEFAULT_TOL,
                     check: bool = True) -> SchmidtDecomposition:
    """Decompose a state whose coefficient-matrix columns are orthogonal.

    Coefficients are the column norms sorted in descending order, the A-side
    basis the normalized columns, the B-side basis computational.  With
    ``check`` off the formula is applied regardless of the diagonal
    condition; on a non-diagonal state this reproduces the well-known
    failure mode in which the returned A-side vectors are not orthogonal.
    """
    c00, c01, c10, c11 = amplitudes(state)
    if check:
        g = c00.conjugate() * c01 + c10.conjugate() * c11
        if abs(g) > tol:
            raise NotDiagonalError(
                f"Gram off-diagonal magnitude {abs(g)!r} exceeds tol {tol!r}")
    return _wrap(_diag_parts(c00, c01, c10, c11))


def schmidt_nondiagonal(state, tol: float = DEFAULT_TOL) -> SchmidtDecomposition:
    """Decompose a state that violates the diagonal condition.

    Raises :class:`DiagonalError` on diagonal input, where the formula's
    eigenvector seeds are zero vectors.
    """
    c00, c01, c10, c11 = amplitudes(state)
    return _wrap(_nondiag_parts(c00, c01, c10, c11, tol))


def schmidt(state, tol: float = DEFAULT_TOL) -> SchmidtDecomposition:
    """Schmidt decomposition of any two-qubit pure state.

    Dispatches on the diagonal condition with tolerance ``tol``; the
    boundary itself takes the diagonal branch, which is exact there.
    """
    c00, c01, c10, c11 = amplitudes(state)
    return _wrap(_parts(c00, c01, c10, c11, tol))


def reconstruct(decomposition: SchmidtDecomposition) -> np.ndarray:
    """Rebuild the state  sum_j coeffs[j] * basis_a[j] (x) basis_b[j]."""
    d = decomposition
    l0, l1 = float(d.coeffs[0]), float(d.coeffs[1])
    a0, a1 = d.basis_a[0], d.basis_a[1]
    b0, b1 = d.basis_b[0], d.basis_b[1]
    parts = ((l0, l1),
             ((complex(a0[0]), complex(a0[1])), (complex(a1[0]), complex(a1[1]))),
             ((complex(b0[0]), complex(b0[1])), (complex(b1[0]), complex(b1[1]))),
             d.degenerate)
    return np.array(_reconstruct_parts(parts))
