import io
import json
import math

import numpy as np
import pytest

import qschmidt as q
from qschmidt.cli import main
from qschmidt import jsonio
from helpers import GOLD_PE, KET00, R12


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDecompose:
    def test_five_decimal_amplitudes_are_normalized(self, capsys):
        code, out, _ = run(capsys, "decompose", "--state",
                           "[[0.57735,0],[0.40825,0],[0.40825,0],[-0.57735,0]]")
        assert code == 0
        payload = json.loads(out)
        assert payload["coeffs"] == pytest.approx([R12, R12], abs=1e-4)
        assert payload["basis_a"][0][0][0] == pytest.approx(math.sqrt(2 / 3),
                                                            abs=1e-4)

    def test_strict_rejects_off_norm(self, capsys):
        code, _, err = run(capsys, "decompose", "--strict", "--state",
                           "[[0.57735,0],[0.40825,0],[0.40825,0],[-0.57735,0]]")
        assert code == 1
        assert json.loads(err)["error"] == "NotNormalizedError"

    def test_exact_state_round_trips(self, capsys):
        state_json = json.dumps(jsonio.state_to_obj(GOLD_PE))
        code, out, _ = run(capsys, "decompose", "--state", state_json)
        assert code == 0
        payload = json.loads(out)
        dec = q.SchmidtDecomposition(
            coeffs=np.array(payload["coeffs"]),
            basis_a=np.array([[complex(*p) for p in row]
                              for row in payload["basis_a"]]),
            basis_b=np.array([[complex(*p) for p in row]
                              for row in payload["basis_b"]]),
        )
        assert np.max(np.abs(q.reconstruct(dec) - GOLD_PE)) <= 1e-12

    def test_bad_json_is_domain_error(self, capsys):
        code, _, err = run(capsys, "decompose", "--state", "[[oops")
        assert code == 1
        assert "error" in json.loads(err)


class TestConstruct:
    def test_ppee_case1_bell_members(self, capsys):
        code, out, _ = run(capsys, "construct", "--type", "ppee", "--case", "1",
                           "--params",
                           '{"a":[0.7071067811865476,0],'
                           '"b":[0.7071067811865476,0]}')
        assert code == 0
        payload = json.loads(out)
        states = [jsonio.state_from_obj(s) for s in payload["states"]]
        np.testing.assert_array_equal(states[0], KET00)
        np.testing.assert_allclose(states[2], q.PSI_PLUS, atol=1e-12)
        np.testing.assert_allclose(states[3], q.PSI_MINUS, atol=1e-12)
        assert payload["case"] == 1

    def test_construct_pipes_into_verify(self, capsys, monkeypatch):
        code, out, _ = run(capsys, "construct", "--type", "mmee",
                           "--variant", "nondiagonal", "--params",
                           '{"theta":0.4,"theta_prime":-0.9,'
                           '"a":[0.61237243569579447,0],"b":[0.35355339059327379,0]}')
        assert code == 0
        monkeypatch.setattr("sys.stdin", io.StringIO(out))
        code2, out2, _ = run(capsys, "verify")
        assert code2 == 0
        report = json.loads(out2)
        assert report["passed"] is True
        assert report["max_pairwise_overlap"] <= 1e-12

    def test_domain_error_exit_code(self, capsys):
        code, _, err = run(capsys, "construct", "--type", "pe",
                           "--variant", "diagonal",
                           "--params", '{"a":[0,0],"b":[1,0]}')
        assert code == 1
        assert json.loads(err)["error"] == "ZeroParameterError"

    def test_missing_variant_is_domain_error(self, capsys):
        code, _, err = run(capsys, "construct", "--type", "pe",
                           "--params", '{"a":[1,0],"b":[1,0]}')
        assert code == 1
        assert "variant" in json.loads(err)["message"]

    def test_every_type_constructs(self, capsys):
        invocations = [
            ("pp", None, "a-side", '{"single":[[1,0],[0,0]]}'),
            ("pe", None, "diagonal", '{"a":[0.6,0],"b":[0,0.8]}'),
            ("pe", None, "nondiagonal",
             '{"a":[0.7071067811865476,0],"b":[0.5,0],"c":[0.5,0]}'),
            ("ep", None, None, '{"gamma":0.4,"a":[1,0],"b":[0.5,0.5],"sign":"-"}'),
            ("ee", None, "diagonal",
             '{"gamma":0.5,"a":[0,0],"b":[0,0.7071067811865476],'
             '"c":[0.7071067811865476,0]}'),
            ("ee", None, "nondiagonal",
             '{"gamma":0.4,"a":[0.5,0],"b":[0.5,0],"c":[0.5,0]}'),
            ("ppp", None, "b-side", '{"basis":[[[1,0],[0,0]],[[0,0],[1,0]]]}'),
            ("ppe", 1, None, '{"c":[0.6,0],"d":[0,0.8]}'),
            ("ppe", 2, None,
             '{"a":[0.6,0],"b":[0.8,0],"c":[0.6,0],"d":[0.8,0]}'),
            ("ppe", 3, None,
             '{"a":[0.6,0],"b":[0.8,0],"c":[0.6,0],"d":[0.8,0]}'),
            ("pppp", None, "a-side", '{"basis":[[[1,0],[0,0]],[[0,0],[1,0]]]}'),
            ("ppee", 2, None,
             '{"a":[0.6,0],"b":[0.8,0],"c":[0.6,0],"d":[0.8,0]}'),
            ("ppee", 3, None,
             '{"a":[0.6,0],"b":[0.8,0],"c":[0.6,0],"d":[0.8,0]}'),
            ("pm", None, None, '{"theta":0.785,"theta_prime":-1.047}'),
            ("pmee", None, None,
             '{"theta":0,"theta_prime":0.5,"theta_dprime":1.0,"c":[0.3,0.3]}'),
            ("mmee", None, "diagonal",
             '{"theta":0,"theta_prime":0,"a":[0.5,0],"b":[0,0.5]}'),
        ]
        for set_type, case, variant, params in invocations:
            argv = ["construct", "--type", set_type, "--params", params]
            if case:
                argv += ["--case", str(case)]
            if variant:
                argv += ["--variant", variant]
            code, out, err = run(capsys, *argv)
            assert code == 0, (set_type, err)
            payload = json.loads(out)
            states = jsonio.states_from_obj(payload)
            assert q.verify_set(states).passed, set_type


class TestClassify:
    def test_pattern_and_refinement(self, capsys):
        set_json = json.dumps([jsonio.state_to_obj(KET00),
                               jsonio.state_to_obj(q.PSI_PLUS)])
        code, out, _ = run(capsys, "classify", "--set", set_json)
        assert code == 0 and json.loads(out)["pattern"] == "PE"
        code, out, _ = run(capsys, "classify", "--refine-m", "--set", set_json)
        assert code == 0 and json.loads(out)["pattern"] == "PM"


class TestSample:
    def test_deterministic_output(self, capsys):
        args = ("sample", "--type", "ee", "--variant", "nondiagonal",
                "--seed", "7", "--count", "2")
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        payload = json.loads(out1)
        assert len(payload) == 2
        for item in payload:
            assert q.verify_set(jsonio.states_from_obj(item)).passed

    def test_pppe_rejected(self, capsys):
        code, _, err = run(capsys, "sample", "--type", "pppe", "--seed", "1")
        assert code == 1
        payload = json.loads(err)
        assert payload["error"] == "UnknownTypeError"
        assert "exist" in payload["message"]


class TestMix:
    def test_full_density_and_reduction(self, capsys):
        set_json = json.dumps([jsonio.state_to_obj(KET00),
                               jsonio.state_to_obj(GOLD_PE)])
        code, out, _ = run(capsys, "mix", "--set", set_json,
                           "--weights", "[0.3, 0.7]")
        assert code == 0
        payload = json.loads(out)
        assert payload["system"] == "ab"
        rho = np.array([[complex(*p) for p in row]
                        for row in payload["density"]])
        assert rho.shape == (4, 4)
        assert np.trace(rho) == pytest.approx(1.0, abs=1e-12)

        code, out, _ = run(capsys, "mix", "--set", set_json,
                           "--weights", "[0.3, 0.7]", "--reduce", "a")
        payload = json.loads(out)
        ra = np.array([[complex(*p) for p in row]
                       for row in payload["density"]])
        expect = 0.3 * np.array([[1, 0], [0, 0]]) \
            + 0.7 / (2 * math.sqrt(2)) * np.array(
                [[math.sqrt(2), 1], [1, math.sqrt(2)]])
        np.testing.assert_allclose(ra, expect, atol=1e-12)

    def test_bad_weights_domain_error(self, capsys):
        set_json = json.dumps([jsonio.state_to_obj(KET00)])
        code, _, err = run(capsys, "mix", "--set", set_json,
                           "--weights", "[0.5]")
        assert code == 1
        assert json.loads(err)["error"] == "BadWeightsError"


class TestUsageErrors:
    def test_unknown_verb_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_required_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["decompose"])
        assert exc.value.code == 2


class TestJsonRoundTrip:
    def test_output_reverifies_without_drift(self, capsys):
        code, out, _ = run(capsys, "construct", "--type", "pmee", "--params",
                           '{"theta":0.2,"theta_prime":1.3,'
                           '"theta_dprime":-0.7,"c":[0.35,0.2]}')
        assert code == 0
        states = jsonio.states_from_obj(json.loads(out))
        report = q.verify_set(states)
        assert report.passed
        assert report.max_pairwise_overlap <= 1e-12
