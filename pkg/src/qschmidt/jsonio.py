"""JSON conventions shared by the CLI and the library.

A complex scalar serializes as ``[re, im]``; a two-qubit state as an array
of four such pairs in the fixed amplitude order; a Schmidt decomposition as
``{"coeffs": [l0, l1], "basis_a": [[..], [..]], "basis_b": [[..], [..]]}``
where each basis row is a 2-vector of complex pairs.  Floats keep Python's
shortest round-trip representation, so nothing is lost to formatting.
"""

from __future__ import annotations

import numpy as np

from .core import make_state
from .errors import NotFiniteError, QuantumStateError


def complex_to_pair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(obj) -> complex:
    """Parse ``[re, im]`` (or a bare real number) into a complex scalar."""
    if isinstance(obj, (int, float)):
        z = complex(float(obj), 0.0)
    elif isinstance(obj, (list, tuple)) and len(obj) == 2 \
            and all(isinstance(x, (int, float)) for x in obj):
        z = complex(float(obj[0]), float(obj[1]))
    else:
        raise QuantumStateError(
            f"expected a complex scalar as [re, im], got {obj!r}")
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise NotFiniteError(f"complex scalar must be finite, got {obj!r}")
    return z


def state_to_obj(state) -> list:
    return [complex_to_pair(z) for z in state]


def state_from_obj(obj, *, normalize: bool = False) -> np.ndarray:
    if not isinstance(obj, (list, tuple)) or len(obj) != 4:
        raise QuantumStateError(
            f"expected a state as 4 complex pairs, got {obj!r}")
    c = [pair_to_complex(x) for x in obj]
    return make_state(*c, normalize=normalize)


def qubit_from_obj(obj) -> np.ndarray:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise QuantumStateError(
            f"expected a single-qubit vector as 2 complex pairs, got {obj!r}")
    return np.array([pair_to_complex(x) for x in obj])


def vector2_to_obj(v) -> list:
    return [complex_to_pair(z) for z in v]


def matrix_to_obj(m) -> list:
    return [[complex_to_pair(z) for z in row] for row in np.asarray(m)]


def schmidt_to_obj(d) -> dict:
    return {
        "coeffs": [float(d.coeffs[0]), float(d.coeffs[1])],
        "basis_a": [vector2_to_obj(d.basis_a[0]), vector2_to_obj(d.basis_a[1])],
        "basis_b": [vector2_to_obj(d.basis_b[0]), vector2_to_obj(d.basis_b[1])],
        "degenerate": bool(d.degenerate),
    }


def params_to_obj(params: dict) -> dict:
    out = {}
    for key, value in params.items():
        if isinstance(value, complex):
            out[key] = complex_to_pair(value)
        elif isinstance(value, (list, tuple)):
            out[key] = [complex_to_pair(v) if isinstance(v, (complex,)) else
                        (vector2_to_obj(v) if not np.isscalar(v) else v)
                        for v in value]
        else:
            out[key] = value
    return out


def pair_to_obj(p) -> dict:
    out = {
        "type": p.type_label,
        "first": state_to_obj(p.first),
        "second": state_to_obj(p.second),
        "schmidt_second": schmidt_to_obj(p.schmidt_second),
        "params": params_to_obj(p.params),
    }
    if p.variant:
        out["variant"] = p.variant
    return out


def triple_to_obj(t) -> dict:
    out = {
        "type": t.type_label,
        "states": [state_to_obj(s) for s in t.states],
        "schmidt_third": schmidt_to_obj(t.schmidt_third),
        "params": params_to_obj(t.params),
    }
    if t.case_id is not None:
        out["case"] = t.case_id
    if t.variant:
        out["variant"] = t.variant
    return out


def basis_to_obj(b) -> dict:
    out = {
        "type": b.type_label,
        "states": [state_to_obj(s) for s in b.states],
        "schmidt": [schmidt_to_obj(d) for d in b.schmidt_all],
        "params": params_to_obj(b.params),
    }
    if b.case_id is not None:
        out["case"] = b.case_id
    if b.variant:
        out["variant"] = b.variant
    return out


def set_to_obj(obj) -> dict:
    """Serialize an OrthoPair, OrthoTriple or OrthoBasis."""
    if hasattr(obj, "schmidt_second"):
        return pair_to_obj(obj)
    if hasattr(obj, "schmidt_third"):
        return triple_to_obj(obj)
    return basis_to_obj(obj)


def states_from_obj(obj, *, normalize: bool = False) -> list:
    """Extract a list of states from any of the JSON shapes the CLI emits.

    Accepts a bare list of states, an object with a ``"states"`` key, or a
    pair object with ``"first"``/``"second"`` keys.
    """
    if isinstance(obj, dict):
        if "states" in obj:
            obj = obj["states"]
        elif "first" in obj and "second" in obj:
            obj = [obj["first"], obj["second"]]
        else:
            raise QuantumStateError(
                "object form needs a 'states' key or 'first'/'second' keys")
    if not isinstance(obj, (list, tuple)) or len(obj) == 0:
        raise QuantumStateError("expected a non-empty list of states")
    if len(obj) == 4 and all(isinstance(x, (list, tuple)) and len(x) == 2
                             for x in obj):
        # A bare 4-amplitude state; treat as a one-state set.
        return [state_from_obj(obj, normalize=normalize)]
    return [state_from_obj(s, normalize=normalize) for s in obj]


def report_to_obj(r) -> dict:
    return {
        "max_pairwise_overlap": float(r.max_pairwise_overlap),
        "per_state": [
            {
                "reconstruction_error": float(s.reconstruction_error),
                "coefficient_mismatch_vs_oracle":
                    float(s.coefficient_mismatch_vs_oracle),
                "concurrence": float(s.concurrence),
                "label": s.label,
            }
            for s in r.per_state
        ],
        "passed": bool(r.passed),
    }
