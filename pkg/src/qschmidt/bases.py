"""Constructors and checks for orthonormal two-qubit bases.

Closed forms exist for the PPPP pattern, the three PPEE cases, and two
families built around maximally entangled members: PMEE (one maximal member)
and MMEE (two maximal members, with diagonal and non-diagonal variants for
the remaining pair).  A PPPE basis cannot exist: completing any three
orthonormal product states always yields a fourth product state, which
`complete_ppp` demonstrates constructively.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_TOL, _checked_complex, concurrence, inner
from .errors import (
    AccidentallyDiagonalError,
    ConditionViolatedError,
    COutOfRangeError,
    DegenerateParametersError,
    NotPPPError,
    ZeroParameterError,
)
from .pairs import A_SIDE, OrthoPair, _check_variant, _require_nonzero, _rescale
from .schmidt import (
    SchmidtDecomposition,
    schmidt,
    schmidt_diagonal,
)
from .triples import OrthoTriple, construct_ppe_case2, construct_ppe_case3, orthonormal_qubit_basis

_KET00 = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
_KET01 = np.array([0.0, 1.0, 0.0, 0.0], dtype=complex)
_KET10 = np.array([0.0, 0.0, 1.0, 0.0], dtype=complex)
_KET11 = np.array([0.0, 0.0, 0.0, 1.0], dtype=complex)
_SQRT_HALF = math.sqrt(0.5)


@dataclass
class OrthoBasis:
    """Four mutually orthogonal unit states with per-state Schmidt data."""

    states: list
    type_label: str
    schmidt_all: list
    case_id: int | None = None
    variant: str | None = None
    params: dict = field(default_factory=dict)


def _tensor_rows(l0, l1, a0, a1, b0, b1) -> np.ndarray:
    """sum_j l_j a_j (x) b_j for scalar 2-tuples, as a length-4 array."""
    return np.array([
        l0 * a0[0] * b0[0] + l1 * a1[0] * b1[0],
        l0 * a0[0] * b0[1] + l1 * a1[0] * b1[1],
        l0 * a0[1] * b0[0] + l1 * a1[1] * b1[0],
        l0 * a0[1] * b0[1] + l1 * a1[1] * b1[1],
    ])


def _split_roots(total: float, product_neg: float) -> tuple[float, float]:
    """Roots (t0 >= 0 >= t1) of t^2 - total*t - product_neg = 0.

    ``product_neg`` is the positive magnitude of the (negative) root product.
    The larger-magnitude root is computed directly, the other from the
    product, so neither suffers cancellation.
    """
    disc = math.sqrt(total * total + 4.0 * product_neg)
    if total >= 0.0:
        t0 = 0.5 * (total + disc)
        t1 = -product_neg / t0 if t0 > 0.0 else 0.0
    else:
        t1 = 0.5 * (total - disc)
        t0 = -product_neg / t1
    return t0, t1


def construct_pppp(variant: str, basis, *, strict: bool = False,
                   tol: float = DEFAULT_TOL) -> OrthoBasis:
    """All-product orthonormal basis from |00> and a qubit basis.

    The a-side variant is (|00>, basis0 (x) |1>, basis1 (x) |1>, |10>); the
    b-side variant mirrors it with the roles of the subsystems swapped.
    """
    _check_variant(variant)
    v0, v1 = orthonormal_qubit_basis(basis, strict=strict)
    if variant == A_SIDE:
        states = [
            _KET00.copy(),
            np.array([0.0, v0[0], 0.0, v0[1]], dtype=complex),
            np.array([0.0, v1[0], 0.0, v1[1]], dtype=complex),
            _KET10.copy(),
        ]
    else:
        states = [
            _KET00.copy(),
            np.array([0.0, 0.0, v0[0], v0[1]], dtype=complex),
            np.array([0.0, 0.0, v1[0], v1[1]], dtype=complex),
            _KET01.copy(),
        ]
    return OrthoBasis(
        states=states,
        type_label="PPPP",
        schmidt_all=[schmidt(s, tol) for s in states],
        variant=variant,
        params={"basis": [(complex(v0[0]), complex(v0[1])),
                          (complex(v1[0]), complex(v1[1]))]},
    )


def _det3(m) -> complex:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def complete_ppp(triple, *, tol: float = DEFAULT_TOL):
    """Complete a PPP triple to an orthonormal basis.

    Returns the unique (up to phase) unit vector orthogonal to all three
    states, phase fixed so its first nonzero amplitude is real positive,
    together with that vector's concurrence.  No product triple has an
    entangled completion, so the returned concurrence never exceeds the
    product threshold; callers may assert it rather than trust it.
    """
    states = list(triple.states) if isinstance(triple, OrthoTriple) else list(triple)
    if len(states) != 3:
        raise NotPPPError(f"need exactly 3 states, got {len(states)}")
    amps = []
    for i, s in enumerate(states):
        a = [_checked_complex(s[k], f"states[{i}][{k}]") for k in range(4)]
        nrm = math.sqrt(sum(z.real * z.real + z.imag * z.imag for z in a))
        if abs(nrm - 1.0) > 1e-8:
            raise NotPPPError(f"states[{i}] has norm {nrm!r}")
        if concurrence(s) > tol:
            raise NotPPPError(f"states[{i}] is entangled; the triple is not PPP")
        amps.append(a)
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(inner(states[i], states[j])) > 1e-8:
                raise NotPPPError(f"states {i} and {j} are not orthogonal")

    rows = [[z.conjugate() for z in a] for a in amps]
    comp = []
    for k in range(4):
        minor = [[row[c] for c in range(4) if c != k] for row in rows]
        comp.append((-1) ** k * _det3(minor))
    nrm = math.sqrt(sum(z.real * z.real + z.imag * z.imag for z in comp))
    if nrm < 1e-6:
        raise NotPPPError("states are linearly dependent")
    comp = [z / nrm for z in comp]
    for z in comp:
        if abs(z) > 1e-9:
            phase = z.conjugate() / abs(z)
            comp = [w * phase for w in comp]
            break
    completion = np.array(comp)
    return completion, concurrence(completion)


def construct_ppee_case1(a, b, *, strict: bool = False,
                         tol: float = DEFAULT_TOL) -> OrthoBasis:
    """Basis (|00>, |11>, a|01> + b|10>, b^*|01> - a^*|10>).

    Both entangled members are diagonal and share the concurrence 2|ab|.
    """
    a = _require_nonzero(a, "a")
    b = _require_nonzero(b, "b")
    a, b = _rescale((a, b), (1.0, 1.0), 1.0, strict, "ppee-case1")
    if 2.0 * abs(a * b) <= tol:
        raise ZeroParameterError(
            "parameters too small to yield entangled members")
    third = np.array([0.0, a, b, 0.0], dtype=complex)
    fourth = np.array([0.0, b.conjugate(), -a.conjugate(), 0.0], dtype=complex)
    states = [_KET00.copy(), _KET11.copy(), third, fourth]
    return OrthoBasis(
        states=states,
        type_label="PPEE",
        schmidt_all=[schmidt(states[0], tol), schmidt(states[1], tol),
                     schmidt_diagonal(third, tol), schmidt_diagonal(fourth, tol)],
        case_id=1,
        params={"a": a, "b": b},
    )


def construct_ppee_case2(a, b, c, d, *, strict: bool = False,
                         tol: float = DEFAULT_TOL) -> OrthoBasis:
    """Basis extending the case-2 PPE triple.

    The fourth member shares the third's Schmidt coefficients and, with the
    index order flipped, its B-side Schmidt basis; its A-side vectors are
    z_j = (b^* (k_j^2 - |c|^2), -a^* k_j^2) normalized, where k_j are the
    shared coefficients.
    """
    triple = construct_ppe_case2(a, b, c, d, strict=strict, tol=tol)
    a = triple.params["a"]
    b = triple.params["b"]
    c = triple.params["c"]
    d = triple.params["d"]
    dec3 = triple.schmidt_third
    k0, k1 = float(dec3.coeffs[0]), float(dec3.coeffs[1])
    # t_j = k_j^2 - |c|^2: roots of a quadratic with sum 1 - 2|c|^2 and
    # product -|acd|^2, evaluated without cancellation.
    c2 = c.real * c.real + c.imag * c.imag
    prod = (a.real * a.real + a.imag * a.imag) * c2 \
        * (d.real * d.real + d.imag * d.imag)
    t0, t1 = _split_roots(1.0 - 2.0 * c2, prod)
    ac = a.conjugate()
    bc_ = b.conjugate()
    z0 = (bc_ * t0, -ac * k0 * k0)
    z1 = (bc_ * t1, -ac * k1 * k1)
    n0 = math.sqrt(abs(z0[0]) ** 2 + abs(z0[1]) ** 2)
    n1 = math.sqrt(abs(z1[0]) ** 2 + abs(z1[1]) ** 2)
    z0 = (z0[0] / n0, z0[1] / n0)
    z1 = (z1[0] / n1, z1[1] / n1)
    bb0 = (complex(dec3.basis_b[0][0]), complex(dec3.basis_b[0][1]))
    bb1 = (complex(dec3.basis_b[1][0]), complex(dec3.basis_b[1][1]))
    fourth = _tensor_rows(k0, k1, z0, z1, bb1, bb0)
    dec4 = SchmidtDecomposition(
        coeffs=np.array([k0, k1]),
        basis_a=np.array([z0, z1]),
        basis_b=np.array([bb1, bb0]),
    )
    states = [triple.states[0], triple.states[1], triple.states[2], fourth]
    return OrthoBasis(
        states=states,
        type_label="PPEE",
        schmidt_all=[schmidt(states[0], tol), schmidt(states[1], tol),
                     dec3, dec4],
        case_id=2,
        params={"a": a, "b": b, "c": c, "d": d},
    )


def construct_ppee_case3(a, b, c, d, *, strict: bool = False,
                         tol: float = DEFAULT_TOL) -> OrthoBasis:
    """Basis extending the case-3 PPE triple.

    Here the two entangled members share the A-side Schmidt basis with the
    index order flipped; the fourth member's B-side vectors are the
    conjugates of w_j = (-a^* b |c|^2, n_j^2 - |bc|^2) normalized, with n_j
    the shared coefficients.
    """
    triple = construct_ppe_case3(a, b, c, d, strict=strict, tol=tol)
    a = triple.params["a"]
    b = triple.params["b"]
    c = triple.params["c"]
    d = triple.params["d"]
    dec3 = triple.schmidt_third
    n0, n1 = float(dec3.coeffs[0]), float(dec3.coeffs[1])
    b2 = b.real * b.real + b.imag * b.imag
    c2 = c.real * c.real + c.imag * c.imag
    prod = (a.real * a.real + a.imag * a.imag) * b2 * c2 * c2
    u0, u1 = _split_roots(1.0 - 2.0 * b2 * c2, prod)
    w0 = (-a.conjugate() * b * c2, complex(u0))
    w1 = (-a.conjugate() * b * c2, complex(u1))
    m0 = math.sqrt(abs(w0[0]) ** 2 + u0 * u0)
    m1 = math.sqrt(abs(w1[0]) ** 2 + u1 * u1)
    wc0 = (w0[0].conjugate() / m0, w0[1].conjugate() / m0)
    wc1 = (w1[0].conjugate() / m1, w1[1].conjugate() / m1)
    aa0 = (complex(dec3.basis_a[0][0]), complex(dec3.basis_a[0][1]))
    aa1 = (complex(dec3.basis_a[1][0]), complex(dec3.basis_a[1][1]))
    fourth = _tensor_rows(n0, n1, aa1, aa0, wc0, wc1)
    dec4 = SchmidtDecomposition(
        coeffs=np.array([n0, n1]),
        basis_a=np.array([aa1, aa0]),
        basis_b=np.array([wc0, wc1]),
    )
    states = [triple.states[0], triple.states[1], triple.states[2], fourth]
    return OrthoBasis(
        states=states,
        type_label="PPEE",
        schmidt_all=[schmidt(states[0], tol), schmidt(states[1], tol),
                     dec3, dec4],
        case_id=3,
        params={"a": a, "b": b, "c": c, "d": d},
    )


def construct_pm(theta: float, theta_prime: float, *,
                 tol: float = DEFAULT_TOL) -> OrthoPair:
    """Pair (|00>, (e^{i theta}|01> + e^{i theta'}|10>)/sqrt(2)).

    Every maximally entangled state orthogonal to |00> has this form; the
    second member's concurrence is exactly 1.
    """
    theta = float(theta)
    theta_prime = float(theta_prime)
    second = np.array([
        0.0,
        cmath.exp(1j * theta) * _SQRT_HALF,
        cmath.exp(1j * theta_prime) * _SQRT_HALF,
        0.0,
    ])
    return OrthoPair(
        first=_KET00.copy(),
        second=second,
        type_label="PM",
        schmidt_second=schmidt_diagonal(second, tol),
        params={"theta": theta, "theta_prime": theta_prime},
    )


def construct_pmee(theta: float, theta_prime: float, theta_dprime: float, c, *,
                   tol: float = DEFAULT_TOL) -> OrthoBasis:
    """Basis with one product member, one maximally entangled member and two
    entangled members.

    The first two members are those of :func:`construct_pm`.  The remaining
    two are parametrized by a real angle ``theta_dprime`` and a complex
    number ``c`` with 0 < |c| < 1/sqrt(2), strictly: at either boundary the
    set degrades to a PPEE pattern and those constructors apply instead.
    Coefficients: xi_j = sqrt((1 +- sqrt(1 - 4|c|^4)) / 2) for the third
    member and ups_j = sqrt((1 +- 2|c| sqrt(1 - |c|^2)) / 2) for the fourth.
    """
    theta = float(theta)
    theta_prime = float(theta_prime)
    theta_dprime = float(theta_dprime)
    c = _checked_complex(c, "c")
    mag = abs(c)
    if mag <= tol or mag >= _SQRT_HALF - tol:
        raise COutOfRangeError(
            f"|c| must lie strictly inside (0, 1/sqrt(2)), got {mag!r}; "
            "at the boundaries the basis degrades to a PPEE pattern, "
            "use the PPEE constructors")
    c2 = mag * mag
    # sqrt(1 - 4|c|^4) as a product, avoiding cancellation near the boundary.
    h_xi = math.sqrt((1.0 - 2.0 * c2) * (1.0 + 2.0 * c2))
    xi0 = math.sqrt(0.5 * (1.0 + h_xi))
    xi1 = c2 / xi0
    ups0 = math.sqrt(0.5 * (1.0 + 2.0 * mag * math.sqrt(1.0 - c2)))
    ups1 = (0.5 - c2) / ups0
    root_uu = math.sqrt(0.5 - c2)  # sqrt(ups0 * ups1)

    ph_dd = cmath.exp(1j * theta_dprime)
    ph_y = cmath.exp(-1j * (theta - theta_prime + theta_dprime))
    x0 = (c, ph_dd * xi0)
    x1 = (-c, ph_dd * xi1)
    ys0 = (-ph_y * c, complex(xi0))
    ys1 = (-ph_y * c, complex(-xi1))
    nx0 = math.sqrt(c2 + xi0 * xi0)
    nx1 = math.sqrt(c2 + xi1 * xi1)
    x0 = (x0[0] / nx0, x0[1] / nx0)
    x1 = (x1[0] / nx1, x1[1] / nx1)
    ys0 = (ys0[0] / nx0, ys0[1] / nx0)
    ys1 = (ys1[0] / nx1, ys1[1] / nx1)
    third = _tensor_rows(xi0, xi1, x0, x1, ys0, ys1)

    cc = c.conjugate()
    z0 = (ph_dd.conjugate() * root_uu * mag, -cc * ups0)
    z1 = (-ph_dd.conjugate() * root_uu * mag, -cc * ups1)
    ws0 = (ph_y * root_uu * c, complex(mag * ups0))
    ws1 = (ph_y * root_uu * c, complex(-mag * ups1))
    nz0 = mag * math.sqrt(root_uu * root_uu + ups0 * ups0)
    nz1 = mag * math.sqrt(root_uu * root_uu + ups1 * ups1)
    z0 = (z0[0] / nz0, z0[1] / nz0)
    z1 = (z1[0] / nz1, z1[1] / nz1)
    ws0 = (ws0[0] / nz0, ws0[1] / nz0)
    ws1 = (ws1[0] / nz1, ws1[1] / nz1)
    fourth = _tensor_rows(ups0, ups1, z0, z1, ws0, ws1)

    pm = construct_pm(theta, theta_prime, tol=tol)
    states = [pm.first, pm.second, third, fourth]
    dec3 = SchmidtDecomposition(coeffs=np.array([xi0, xi1]),
                                basis_a=np.array([x0, x1]),
                                basis_b=np.array([ys0, ys1]))
    dec4 = SchmidtDecomposition(coeffs=np.array([ups0, ups1]),
                                basis_a=np.array([z0, z1]),
                                basis_b=np.array([ws0, ws1]))
    return OrthoBasis(
        states=states,
        type_label="PMEE",
        schmidt_all=[schmidt(states[0], tol), pm.schmidt_second, dec3, dec4],
        params={"theta": theta, "theta_prime": theta_prime,
                "theta_dprime": theta_dprime, "c": c},
    )


def _mmee_prepare(theta, theta_prime, a, b, strict, what):
    theta = float(theta)
    theta_prime = float(theta_prime)
    a = _checked_complex(a, "a")
    b = _checked_complex(b, "b")
    a, b = _rescale((a, b), (1.0, 1.0), 0.5, strict, what)
    delta = theta_prime - theta
    ph_half = cmath.exp(0.5j * delta)
    ph_full = ph_half * ph_half
    entangled = a * a - ph_full * b * b
    d_real = 2.0 * (ph_half * a.conjugate() * b).real
    return theta, theta_prime, a, b, delta, ph_half, ph_full, entangled, d_real


def _mmee_first_second(theta, theta_prime):
    first = np.array([_SQRT_HALF, 0.0, 0.0, _SQRT_HALF], dtype=complex)
    second = np.array([
        0.0,
        cmath.exp(1j * theta) * _SQRT_HALF,
        cmath.exp(1j * theta_prime) * _SQRT_HALF,
        0.0,
    ])
    return first, second


def construct_mmee_diagonal(theta: float, theta_prime: float, a, b, *,
                            strict: bool = False,
                            tol: float = DEFAULT_TOL) -> OrthoBasis:
    """Basis of two maximally entangled members plus two diagonal members.

    The first two members are (|00> + |11>)/sqrt(2) and
    (e^{i theta}|01> + e^{i theta'}|10>)/sqrt(2).  Parameters are scaled so
    |a|^2 + |b|^2 = 1/2 and must satisfy, with Delta = theta' - theta:

    * entanglement:  e^{i Delta} b^2 != a^2
    * diagonality:   D = e^{i Delta/2} a^* b + e^{-i Delta/2} a b^* = 0

    All four members then turn out maximally entangled.
    """
    (theta, theta_prime, a, b, delta, _ph_half, ph_full,
     entangled, d_real) = _mmee_prepare(theta, theta_prime, a, b, strict,
                                        "mmee-diagonal")
    if abs(entangled) <= tol:
        raise ConditionViolatedError(
            "entangled", "e^{i Delta} b^2 equals a^2; members 3 and 4 "
            "would be product states")
    if abs(d_real) > tol:
        raise ConditionViolatedError(
            "diagonal", f"diagonality residual {abs(d_real)!r} exceeds {tol!r}")
    third = np.array([a, b, -ph_full * b, -a])
    fourth = np.array([b.conjugate(), -a.conjugate(),
                       ph_full * a.conjugate(), -b.conjugate()])
    first, second = _mmee_first_second(theta, theta_prime)
    states = [first, second, third, fourth]
    return OrthoBasis(
        states=states,
        type_label="MMEE",
        schmidt_all=[schmidt(first, tol), schmidt(second, tol),
                     schmidt_diagonal(third, tol, check=False),
                     schmidt_diagonal(fourth, tol, check=False)],
        variant="diagonal",
        params={"theta": theta, "theta_prime": theta_prime, "a": a, "b": b},
    )


def construct_mmee_nondiagonal(theta: float, theta_prime: float, a, b, *,
                               strict: bool = False,
                               tol: float = DEFAULT_TOL) -> OrthoBasis:
    """Basis of two maximally entangled members plus two non-diagonal members.

    Same first two members and normalization as the diagonal variant, but
    the diagonality scalar D must be nonzero.  The last two members share
    the coefficients tau_j = sqrt((1 +- sqrt(1 - 4 E^2)) / 2) with
    E = |a^2 - e^{i Delta} b^2|, and the fourth member's Schmidt bases are
    the conjugates of the third's with the subsystems swapped and an
    alternating sign.
    """
    (theta, theta_prime, a, b, delta, ph_half, ph_full,
     entangled, d_real) = _mmee_prepare(theta, theta_prime, a, b, strict,
                                        "mmee-nondiagonal")
    big_e = abs(entangled)
    if big_e <= tol:
        raise ConditionViolatedError(
            "entangled", "e^{i Delta} b^2 equals a^2; members 3 and 4 "
            "would be product states")
    if abs(d_real) <= tol:
        raise AccidentallyDiagonalError(
            "diagonality scalar D vanishes; use construct_mmee_diagonal")
    sigma = 1.0 if d_real > 0.0 else -1.0
    h = math.sqrt(max(1.0 - 4.0 * big_e * big_e, 0.0))
    tau0 = math.sqrt(0.5 * (1.0 + h))
    tau1 = big_e / tau0

    sig_half = sigma * ph_half.conjugate()
    c0 = sig_half * a + b
    c1 = sig_half * a - b
    if abs(c0) <= 1e-150 or abs(c1) <= 1e-150:
        raise DegenerateParametersError(
            "phase coefficient C_j vanished; the A-side direction is undefined")
    alpha_col = -sig_half  # shared first component of the A-side vectors
    beta_col = sigma * ph_half
    a0 = (c0 / abs(c0)) * _SQRT_HALF
    a1 = (c1 / abs(c1)) * _SQRT_HALF
    alpha0 = (a0 * alpha_col, a0)
    alpha1 = (a1 * alpha_col, -a1)
    beta0 = (beta_col * _SQRT_HALF, complex(_SQRT_HALF))
    beta1 = (beta_col * _SQRT_HALF, complex(-_SQRT_HALF))
    third = _tensor_rows(tau0, tau1, alpha0, alpha1, beta0, beta1)

    bstar0 = (beta0[0].conjugate(), beta0[1].conjugate())
    bstar1 = (-beta1[0].conjugate(), -beta1[1].conjugate())
    astar0 = (alpha0[0].conjugate(), alpha0[1].conjugate())
    astar1 = (alpha1[0].conjugate(), alpha1[1].conjugate())
    fourth = _tensor_rows(tau0, tau1, bstar0, bstar1, astar0, astar1)

    first, second = _mmee_first_second(theta, theta_prime)
    states = [first, second, third, fourth]
    dec3 = SchmidtDecomposition(coeffs=np.array([tau0, tau1]),
                                basis_a=np.array([alpha0, alpha1]),
                                basis_b=np.array([beta0, beta1]))
    dec4 = SchmidtDecomposition(coeffs=np.array([tau0, tau1]),
                                basis_a=np.array([bstar0, bstar1]),
                                basis_b=np.array([astar0, astar1]))
    return OrthoBasis(
        states=states,
        type_label="MMEE",
        schmidt_all=[schmidt(first, tol), schmidt(second, tol), dec3, dec4],
        variant="nondiagonal",
        params={"theta": theta, "theta_prime": theta_prime, "a": a, "b": b},
    )
