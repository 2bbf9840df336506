"""Command-line front end.

Verbs map one-to-one onto library operations and speak the shared JSON
conventions on stdin/stdout: ``decompose``, ``construct``, ``verify``,
``classify``, ``sample`` and ``mix``.  Exit codes: 0 success, 1 domain
error (error JSON on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bases, jsonio, mixed, oracle, pairs, triples
from .core import DEFAULT_TOL
from .errors import QuantumStateError
from .schmidt import schmidt


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qschmidt",
        description="Schmidt decompositions and orthogonal-set construction "
                    "for two-qubit states (JSON in, JSON out).")
    sub = p.add_subparsers(dest="verb", required=True)

    d = sub.add_parser("decompose", help="Schmidt-decompose a state")
    d.add_argument("--state", required=True,
                   help="state as JSON: [[re,im],[re,im],[re,im],[re,im]]")
    d.add_argument("--tol", type=float, default=DEFAULT_TOL)
    d.add_argument("--strict", action="store_true",
                   help="reject input whose norm is off by more than 1e-10 "
                        "instead of normalizing")

    c = sub.add_parser("construct", help="construct an orthogonal set")
    c.add_argument("--type", required=True, dest="set_type",
                   choices=["pp", "pe", "ep", "ee", "ppp", "ppe", "pppp",
                            "ppee", "pm", "pmee", "mmee"])
    c.add_argument("--case", type=int, choices=[1, 2, 3])
    c.add_argument("--variant",
                   choices=["diagonal", "nondiagonal", "a-side", "b-side"])
    c.add_argument("--params", required=True, help="constructor parameters as JSON")
    c.add_argument("--tol", type=float, default=DEFAULT_TOL)
    c.add_argument("--strict", action="store_true")

    v = sub.add_parser("verify", help="verify a set of 1..4 states")
    v.add_argument("--set", dest="set_json",
                   help="states as JSON (defaults to stdin; accepts construct output)")
    v.add_argument("--tol", type=float, default=DEFAULT_TOL)

    k = sub.add_parser("classify", help="label a set of states")
    k.add_argument("--set", dest="set_json")
    k.add_argument("--refine-m", action="store_true",
                   help="label maximally entangled members M instead of E")
    k.add_argument("--tol", type=float, default=DEFAULT_TOL)

    s = sub.add_parser("sample", help="draw seeded random sets of one type")
    s.add_argument("--type", required=True, dest="set_type")
    s.add_argument("--case", type=int, choices=[1, 2, 3])
    s.add_argument("--variant",
                   choices=["diagonal", "nondiagonal", "a-side", "b-side"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)

    m = sub.add_parser("mix", help="spectrally mix orthogonal states")
    m.add_argument("--set", dest="set_json")
    m.add_argument("--weights", required=True, help="positive weights as JSON")
    m.add_argument("--reduce", choices=["a", "b"],
                   help="also trace out the other subsystem")
    m.add_argument("--tol", type=float, default=DEFAULT_TOL)
    return p


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuantumStateError(f"invalid JSON for {what}: {exc}") from exc


def _set_input(args):
    text = args.set_json if args.set_json is not None else sys.stdin.read()
    return _load_json(text, "--set")


def _get_complex(params: dict, key: str) -> complex:
    if key not in params:
        raise QuantumStateError(f"params missing required key {key!r}")
    return jsonio.pair_to_complex(params[key])


def _get_real(params: dict, key: str) -> float:
    if key not in params:
        raise QuantumStateError(f"params missing required key {key!r}")
    value = params[key]
    if not isinstance(value, (int, float)):
        raise QuantumStateError(f"params[{key!r}] must be a real number")
    return float(value)


def _get_basis(params: dict):
    if "basis" not in params:
        raise QuantumStateError("params missing required key 'basis'")
    basis = params["basis"]
    if not isinstance(basis, (list, tuple)) or len(basis) != 2:
        raise QuantumStateError("params['basis'] must hold two qubit vectors")
    return [jsonio.qubit_from_obj(v) for v in basis]


def _need(value, flag: str, why: str):
    if value is None:
        raise QuantumStateError(f"{flag} is required {why}")
    return value


def _construct(args):
    params = _load_json(args.params, "--params")
    if not isinstance(params, dict):
        raise QuantumStateError("--params must be a JSON object")
    t = args.set_type
    variant = args.variant
    case = args.case
    tol = args.tol
    strict = args.strict
    if t == "pp":
        if "single" not in params:
            raise QuantumStateError("params missing required key 'single'")
        obj = pairs.construct_pp(
            _need(variant, "--variant", "for type pp (a-side or b-side)"),
            jsonio.qubit_from_obj(params["single"]), strict=strict, tol=tol)
    elif t == "pe":
        _need(variant, "--variant", "for type pe (diagonal or nondiagonal)")
        if variant == "diagonal":
            obj = pairs.construct_pe_diagonal(
                _get_complex(params, "a"), _get_complex(params, "b"),
                strict=strict, tol=tol)
        else:
            obj = pairs.construct_pe_nondiagonal(
                _get_complex(params, "a"), _get_complex(params, "b"),
                _get_complex(params, "c"), strict=strict, tol=tol)
    elif t == "ep":
        sign = params.get("sign", "+")
        if sign in ("+", 1, "+1"):
            sign = 1
        elif sign in ("-", -1, "-1"):
            sign = -1
        else:
            raise QuantumStateError(f"params['sign'] must be '+' or '-', got {sign!r}")
        obj = pairs.construct_ep(
            _get_real(params, "gamma"), _get_complex(params, "a"),
            _get_complex(params, "b"), sign, tol=tol)
    elif t == "ee":
        _need(variant, "--variant", "for type ee (diagonal or nondiagonal)")
        ctor = pairs.construct_ee_diagonal if variant == "diagonal" \
            else pairs.construct_ee_nondiagonal
        obj = ctor(_get_real(params, "gamma"), _get_complex(params, "a"),
                   _get_complex(params, "b"), _get_complex(params, "c"),
                   strict=strict, tol=tol)
    elif t == "ppp":
        obj = triples.construct_ppp(
            _need(variant, "--variant", "for type ppp"), _get_basis(params),
            strict=strict, tol=tol)
    elif t == "ppe":
        case = _need(case, "--case", "for type ppe")
        if case == 1:
            obj = triples.construct_ppe_case1(
                _get_complex(params, "c"), _get_complex(params, "d"),
                strict=strict, tol=tol)
        else:
            ctor = triples.construct_ppe_case2 if case == 2 \
                else triples.construct_ppe_case3
            obj = ctor(_get_complex(params, "a"), _get_complex(params, "b"),
                       _get_complex(params, "c"), _get_complex(params, "d"),
                       strict=strict, tol=tol)
    elif t == "pppp":
        obj = bases.construct_pppp(
            _need(variant, "--variant", "for type pppp"), _get_basis(params),
            strict=strict, tol=tol)
    elif t == "ppee":
        case = _need(case, "--case", "for type ppee")
        if case == 1:
            obj = bases.construct_ppee_case1(
                _get_complex(params, "a"), _get_complex(params, "b"),
                strict=strict, tol=tol)
        else:
            ctor = bases.construct_ppee_case2 if case == 2 \
                else bases.construct_ppee_case3
            obj = ctor(_get_complex(params, "a"), _get_complex(params, "b"),
                       _get_complex(params, "c"), _get_complex(params, "d"),
                       strict=strict, tol=tol)
    elif t == "pm":
        obj = bases.construct_pm(_get_real(params, "theta"),
                                 _get_real(params, "theta_prime"), tol=tol)
    elif t == "pmee":
        obj = bases.construct_pmee(
            _get_real(params, "theta"), _get_real(params, "theta_prime"),
            _get_real(params, "theta_dprime"), _get_complex(params, "c"),
            tol=tol)
    else:  # mmee
        _need(variant, "--variant", "for type mmee (diagonal or nondiagonal)")
        ctor = bases.construct_mmee_diagonal if variant == "diagonal" \
            else bases.construct_mmee_nondiagonal
        obj = ctor(_get_real(params, "theta"), _get_real(params, "theta_prime"),
                   _get_complex(params, "a"), _get_complex(params, "b"),
                   strict=strict, tol=tol)
    return jsonio.set_to_obj(obj)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.verb == "decompose":
            state = jsonio.state_from_obj(
                _load_json(args.state, "--state"), normalize=not args.strict)
            payload = jsonio.schmidt_to_obj(schmidt(state, args.tol))
        elif args.verb == "construct":
            payload = _construct(args)
        elif args.verb == "verify":
            states = jsonio.states_from_obj(_set_input(args))
            payload = jsonio.report_to_obj(oracle.verify_set(states, args.tol))
        elif args.verb == "classify":
            states = jsonio.states_from_obj(_set_input(args))
            payload = {"pattern": oracle.classify(states, args.tol,
                                                  refine_m=args.refine_m)}
        elif args.verb == "sample":
            spec = oracle.SampleSpec(set_type=args.set_type, case_id=args.case,
                                     variant=args.variant, seed=args.seed,
                                     count=args.count)
            payload = [jsonio.set_to_obj(s) for s in oracle.sample(spec, args.tol)]
        else:  # mix
            states = jsonio.states_from_obj(_set_input(args), normalize=True)
            weights = _load_json(args.weights, "--weights")
            if not isinstance(weights, list):
                raise QuantumStateError("--weights must be a JSON list")
            rho = mixed.spectral_mix(states, weights, tol=args.tol)
            if args.reduce == "a":
                payload = {"system": "a", "density": jsonio.matrix_to_obj(mixed.reduce_a(rho))}
            elif args.reduce == "b":
                payload = {"system": "b", "density": jsonio.matrix_to_obj(mixed.reduce_b(rho))}
            else:
                payload = {"system": "ab", "density": jsonio.matrix_to_obj(rho)}
    except QuantumStateError as exc:
        json.dump({"error": type(exc).__name__, "message": str(exc)},
                  sys.stderr)
        sys.stderr.write("\n")
        return 1
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
