"""Constructors for orthogonal pairs of two-qubit states.

Each constructor fixes the first member in a canonical form and produces the
general second member orthogonal to it, together with the second member's
Schmidt decomposition.  Pair patterns name the members in order: P product,
E entangled (M maximally entangled).  Arbitrary pairs of a pattern follow by
applying the same local unitaries to both members, which leaves the pattern
unchanged.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_TOL, _ZERO_FLOOR, _checked_complex, tensor
from .errors import (
    AccidentallyDiagonalError,
    ConditionViolatedError,
    DegenerateParametersError,
    GammaOutOfRangeError,
    NotNormalizedError,
    ZeroParameterError,
    ZeroVectorError,
)
from .schmidt import (
    SchmidtDecomposition,
    schmidt,
    schmidt_diagonal,
    schmidt_nondiagonal,
)

A_SIDE = "a-side"
B_SIDE = "b-side"

_KET00 = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)


@dataclass
class OrthoPair:
    """Two mutually orthogonal states with the second member's Schmidt data."""

    first: np.ndarray
    second: np.ndarray
    type_label: str
    schmidt_second: SchmidtDecomposition
    variant: str | None = None
    params: dict = field(default_factory=dict)


def _require_nonzero(value: complex, name: str) -> complex:
    z = _checked_complex(value, name)
    if z == 0:
        raise ZeroParameterError(f"parameter {name} must be nonzero")
    return z


def _rescale(values, weights, target, strict, what):
    """Scale a parameter group so that sum(w_i * |v_i|^2) equals ``target``."""
    total = sum(w * (v.real * v.real + v.imag * v.imag)
                for v, w in zip(values, weights))
    if total <= _ZERO_FLOOR:
        raise ZeroVectorError(f"{what}: parameters are all zero")
    if strict and abs(total - target) > 1e-10:
        raise NotNormalizedError(
            f"{what}: weighted squared magnitudes sum to {total!r}, "
            f"expected {target!r} (strict mode)")
    t = math.sqrt(target / total)
    return [v * t for v in values]


def _check_variant(variant: str) -> str:
    if variant not in (A_SIDE, B_SIDE):
        raise ValueError(f"variant must be '{A_SIDE}' or '{B_SIDE}', got {variant!r}")
    return variant


def _as_unit_qubit(v, strict: bool, name: str) -> np.ndarray:
    a = _checked_complex(v[0], name + "[0]")
    b = _checked_complex(v[1], name + "[1]")
    nrm2 = a.real * a.real + a.imag * a.imag + b.real * b.real + b.imag * b.imag
    if nrm2 <= _ZERO_FLOOR:
        raise ZeroVectorError(f"{name} is the zero vector")
    nrm = math.sqrt(nrm2)
    if strict and abs(nrm - 1.0) > 1e-10:
        raise NotNormalizedError(f"{name} has norm {nrm!r} (strict mode)")
    return np.array([a / nrm, b / nrm])


def construct_pp(variant: str, single, *, strict: bool = False,
                 tol: float = DEFAULT_TOL) -> OrthoPair:
    """Product state orthogonal to |00>.

    ``variant`` chooses which subsystem carries the free single-qubit vector:
    ``"a-side"`` gives single (x) |1>, ``"b-side"`` gives |1> (x) single.
    """
    _check_variant(variant)
    u = _as_unit_qubit(single, strict, "single")
    e1 = np.array([0.0 + 0.0j, 1.0 + 0.0j])
    second = tensor(u, e1) if variant == A_SIDE else tensor(e1, u)
    return OrthoPair(
        first=_KET00.copy(),
        second=second,
        type_label="PP",
        schmidt_second=schmidt(second, tol),
        variant=variant,
        params={"single": (complex(u[0]), complex(u[1]))},
    )


def construct_pe_diagonal(a, b, *, strict: bool = False,
                          tol: float = DEFAULT_TOL) -> OrthoPair:
    """Entangled diagonal state a|01> + b|10| orthogonal to |00>.

    Both parameters must be nonzero; they are scaled so |a|^2 + |b|^2 = 1.
    The Schmidt coefficients are (|a|, |b|) sorted in descending order.
    """
    a = _require_nonzero(a, "a")
    b = _require_nonzero(b, "b")
    a, b = _rescale((a, b), (1.0, 1.0), 1.0, strict, "pe-diagonal")
    second = np.array([0.0, a, b, 0.0], dtype=complex)
    if 2.0 * abs(a * b) <= tol:
        raise ZeroParameterError(
            "parameters too small to yield an entangled member")
    return OrthoPair(
        first=_KET00.copy(),
        second=second,
        type_label="PE",
        schmidt_second=schmidt(second, tol),
        variant="diagonal",
        params={"a": a, "b": b},
    )


def construct_pe_nondiagonal(a, b, c, *, strict: bool = False,
                             tol: float = DEFAULT_TOL) -> OrthoPair:
    """Entangled non-diagonal state a|01> + b|10> + c|11> orthogonal to |00>.

    All three parameters must be nonzero (c = 0 belongs to the diagonal
    constructor); they are scaled to a unit state.  The Schmidt coefficients
    come out as sqrt((1 +- sqrt(1 - 4|ab|^2)) / 2).
    """
    a = _require_nonzero(a, "a")
    b = _require_nonzero(b, "b")
    c = _require_nonzero(c, "c")
    a, b, c = _rescale((a, b, c), (1.0, 1.0, 1.0), 1.0, strict, "pe-nondiagonal")
    if 2.0 * abs(a * b) <= tol:
        raise ZeroParameterError(
            "parameters too small to yield an entangled member")
    if abs(b.conjugate() * c) <= tol:
        raise ZeroParameterError(
            "parameters land on the diagonal branch; use the diagonal constructor")
    second = np.array([0.0, a, b, c], dtype=complex)
    return OrthoPair(
        first=_KET00.copy(),
        second=second,
        type_label="PE",
        schmidt_second=schmidt(second, tol),
        variant="nondiagonal",
        params={"a": a, "b": b, "c": c},
    )


def construct_ep(gamma: float, a, b, sign: int = 1, *,
                 tol: float = DEFAULT_TOL) -> OrthoPair:
    """Product state orthogonal to sqrt(gamma)|00> + sqrt(1-gamma)|11>.

    The second member is the tensor product of the two single-qubit factors

        ( sqrt(a),  -+ i (gamma/(1-gamma))^(1/4) sqrt(b) )  and
        ( +- i ((1-gamma)/gamma)^(1/4) sqrt(b),  sqrt(a) ),

    each normalized before the product is taken (the raw factors are not
    generally unit).  ``sign`` selects the +-i branch; complex square roots
    use the principal branch.  ``a`` and ``b`` may be any complex numbers
    that are not both zero.
    """
    gamma = float(gamma)
    if not (0.0 < gamma < 1.0) or math.isnan(gamma):
        raise GammaOutOfRangeError(f"gamma must lie in (0, 1), got {gamma!r}")
    a = _checked_complex(a, "a")
    b = _checked_complex(b, "b")
    if a == 0 and b == 0:
        raise DegenerateParametersError("a and b must not both be zero")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    sa = cmath.sqrt(a)
    sb = cmath.sqrt(b)
    ratio_ab = (gamma / (1.0 - gamma)) ** 0.25
    ratio_ba = ((1.0 - gamma) / gamma) ** 0.25
    factor_a = np.array([sa, -sign * 1j * ratio_ab * sb])
    factor_b = np.array([sign * 1j * ratio_ba * sb, sa])
    na = np.linalg.norm(factor_a)
    nb = np.linalg.norm(factor_b)
    if na <= 1e-150 or nb <= 1e-150:
        raise DegenerateParametersError("constructed factor has zero norm")
    second = tensor(factor_a / na, factor_b / nb)
    first = np.array([math.sqrt(gamma), 0.0, 0.0, math.sqrt(1.0 - gamma)],
                     dtype=complex)
    return OrthoPair(
        first=first,
        second=second,
        type_label="EP",
        schmidt_second=schmidt(second, tol),
        params={"gamma": gamma, "a": a, "b": b, "sign": sign},
    )


def _ee_second(gamma: float, a: complex, b: complex, c: complex) -> np.ndarray:
    ratio = math.sqrt(gamma / (1.0 - gamma))
    return np.array([a, b, c, -ratio * a])


def _ee_conditions(gamma, a, b, c):
    """The entanglement and diagonality scalars for the EE constructors."""
    sg = math.sqrt(gamma)
    s1g = math.sqrt(1.0 - gamma)
    entangled = sg * a * a + s1g * b * c
    diagonal = sg * a * c.conjugate() - s1g * a.conjugate() * b
    return entangled, diagonal


def _ee_prepare(gamma, a, b, c, strict, what):
    gamma = float(gamma)
    if not (0.0 < gamma < 1.0) or math.isnan(gamma):
        raise GammaOutOfRangeError(f"gamma must lie in (0, 1), got {gamma!r}")
    a = _checked_complex(a, "a")
    b = _checked_complex(b, "b")
    c = _checked_complex(c, "c")
    weights = (1.0 / (1.0 - gamma), 1.0, 1.0)
    a, b, c = _rescale((a, b, c), weights, 1.0, strict, what)
    return gamma, a, b, c


def construct_ee_diagonal(gamma: float, a, b, c, *, strict: bool = False,
                          tol: float = DEFAULT_TOL) -> OrthoPair:
    """Entangled diagonal state orthogonal to sqrt(gamma)|00> + sqrt(1-gamma)|11>.

    The second member is a|00> + b|01> + c|10> - sqrt(gamma/(1-gamma)) a |11>.
    Parameters are scaled so |a|^2/(1-gamma) + |b|^2 + |c|^2 = 1 and must
    satisfy, within ``tol``:

    * entanglement:  sqrt(gamma) a^2 + sqrt(1-gamma) b c != 0
    * diagonality:   sqrt(gamma) a c^* - sqrt(1-gamma) a^* b  = 0

    The Schmidt coefficients are sqrt(|a|^2 + |c|^2) and
    sqrt(|b|^2 + gamma/(1-gamma) |a|^2), sorted.
    """
    gamma, a, b, c = _ee_prepare(gamma, a, b, c, strict, "ee-diagonal")
    entangled, diagonal = _ee_conditions(gamma, a, b, c)
    if abs(entangled) <= tol:
        raise ConditionViolatedError(
            "entangled", "second member would be a product state")
    if abs(diagonal) > tol:
        raise ConditionViolatedError(
            "diagonal", f"diagonality residual {abs(diagonal)!r} exceeds {tol!r}")
    second = _ee_second(gamma, a, b, c)
    first = np.array([math.sqrt(gamma), 0.0, 0.0, math.sqrt(1.0 - gamma)],
                     dtype=complex)
    return OrthoPair(
        first=first,
        second=second,
        type_label="EE",
        schmidt_second=schmidt_diagonal(second, tol, check=False),
        variant="diagonal",
        params={"gamma": gamma, "a": a, "b": b, "c": c},
    )


def construct_ee_nondiagonal(gamma: float, a, b, c, *, strict: bool = False,
                             tol: float = DEFAULT_TOL) -> OrthoPair:
    """Entangled non-diagonal state orthogonal to the same first member.

    Same state form and normalization as the diagonal variant, but the
    diagonality residual must exceed ``tol``; parameters that satisfy the
    diagonal condition are rejected with AccidentallyDiagonalError.
    """
    gamma, a, b, c = _ee_prepare(gamma, a, b, c, strict, "ee-nondiagonal")
    entangled, diagonal = _ee_conditions(gamma, a, b, c)
    if abs(entangled) <= tol:
        raise ConditionViolatedError(
            "entangled", "second member would be a product state")
    if abs(diagonal) <= tol:
        raise AccidentallyDiagonalError(
            "parameters satisfy the diagonal condition; "
            "use construct_ee_diagonal")
    second = _ee_second(gamma, a, b, c)
    first = np.array([math.sqrt(gamma), 0.0, 0.0, math.sqrt(1.0 - gamma)],
                     dtype=complex)
    return OrthoPair(
        first=first,
        second=second,
        type_label="EE",
        schmidt_second=schmidt_nondiagonal(second, tol),
        variant="nondiagonal",
        params={"gamma": gamma, "a": a, "b": b, "c": c},
    )
