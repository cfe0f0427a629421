"""CLI exit codes, reports, instance round-trips, and the certify harness."""

import json

import numpy as np
import pytest

from nframe import (
    GenConfig,
    Instance,
    build_induced_space,
    certify,
    dumps_instance,
    frame_operator,
    gen_anchor_set,
    gen_frame,
    load_instance,
    loads_instance,
    nspace,
    optimal_bounds,
    save_instance,
)
from nframe.cli import main

MB_DOC = {
    "dimension": 3,
    "anchors": [[0.0, 0.0, 1.0]],
    "frame": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [1.0, 1.0, 0.0]],
    "frame2": [[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [1.0, -1.0, 0.0]],
    "operators": {
        "U": [[2.0, 0.0], [0.0, 2.0]],
        "P": [[1.0, 0.0], [0.0, 0.0]],
        "L1": [[1.0, 0.0], [0.0, 1.0]],
        "L2": [[0.0, 0.0], [0.0, 0.0]],
        "NEG": [[-1.0, 0.0], [0.0, -1.0]],
    },
    "vectors": {"f": [5.0, -2.0, 7.0], "x": [1.0, 2.0, 3.0], "y": [4.0, 5.0, 6.0]},
}


@pytest.fixture
def mb_file(tmp_path):
    path = tmp_path / "mb.json"
    path.write_text(json.dumps(MB_DOC))
    return str(path)


@pytest.fixture
def nonframe_file(tmp_path):
    doc = {
        "dimension": 3,
        "anchors": [[0.0, 0.0, 1.0]],
        "frame": [[1.0, 0.0, 0.0]],
        "vectors": {"f": [1.0, 2.0, 3.0]},
    }
    path = tmp_path / "nonframe.json"
    path.write_text(json.dumps(doc))
    return str(path)


def run_json(capsys, argv):
    rc = main(argv + ["--json"])
    out = capsys.readouterr().out
    return rc, json.loads(out)


class TestCheck:
    def test_frame_instance(self, mb_file, capsys):
        rc, rep = run_json(capsys, ["check", "--instance", mb_file])
        assert rc == 0
        assert rep["results"]["lower_bound"] == pytest.approx(1.0, abs=1e-12)
        assert rep["results"]["upper_bound"] == pytest.approx(3.0, abs=1e-12)
        assert rep["verdicts"]["frame"] is True
        assert rep["verdicts"]["tight"] is False

    def test_non_frame_instance(self, nonframe_file, capsys):
        rc, rep = run_json(capsys, ["check", "--instance", nonframe_file])
        assert rc == 1
        assert rep["verdicts"]["frame"] is False

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["check", "--instance", str(path)]) == 2

    def test_missing_file(self):
        assert main(["check", "--instance", "/nonexistent/inst.json"]) == 2

    def test_dependent_anchors(self, tmp_path):
        doc = {
            "dimension": 3,
            "anchors": [[1.0, 1.0, 0.0], [2.0, 2.0, 0.0]],
            "frame": [[1.0, 0.0, 0.0]],
        }
        path = tmp_path / "dep.json"
        path.write_text(json.dumps(doc))
        assert main(["check", "--instance", str(path)]) == 2

    def test_bad_operator_shape(self, tmp_path):
        doc = dict(MB_DOC, operators={"U": [[1.0]]})
        path = tmp_path / "badop.json"
        path.write_text(json.dumps(doc))
        assert main(["check", "--instance", str(path)]) == 2

    def test_table_output(self, mb_file, capsys):
        rc = main(["check", "--instance", mb_file, "--table"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "results.lower_bound = 1.0" in out


class TestInnerNorm:
    def test_inner_value(self, mb_file, capsys):
        rc, rep = run_json(capsys, ["inner", "--instance", mb_file, "--x", "x", "--y", "y"])
        assert rc == 0
        assert rep["results"]["inner"] == pytest.approx(14.0)

    def test_norm_value(self, mb_file, capsys):
        rc, rep = run_json(capsys, ["norm", "--instance", mb_file, "--x", "x"])
        assert rc == 0
        assert rep["results"]["norm"] == pytest.approx(np.sqrt(5.0))

    def test_unknown_vector(self, mb_file):
        assert main(["inner", "--instance", mb_file, "--x", "nope", "--y", "y"]) == 2


class TestBounds:
    def test_bounds_and_certificate(self, mb_file, capsys):
        rc, rep = run_json(capsys, ["bounds", "--instance", mb_file])
        assert rc == 0
        res = rep["results"]
        assert res["lower_bound"] == pytest.approx(1.0, abs=1e-12)
        assert res["upper_bound"] == pytest.approx(3.0, abs=1e-12)
        assert res["synthesis_surjective"] is True
        assert res["pseudo_inverse_lower_bound"] == pytest.approx(1.0, rel=1e-8)


class TestDual:
    def test_dual_report(self, mb_file, capsys):
        rc, rep = run_json(capsys, ["dual", "--instance", mb_file])
        assert rc == 0
        res = rep["results"]
        assert res["dual_lower_bound"] == pytest.approx(1.0 / 3.0, abs=1e-10)
        assert res["dual_upper_bound"] == pytest.approx(1.0, abs=1e-10)
        expected = [
            [2.0 / 3.0, -1.0 / 3.0, 0.0],
            [-1.0 / 3.0, 2.0 / 3.0, 0.0],
            [1.0 / 3.0, 1.0 / 3.0, 0.0],
        ]
        np.testing.assert_allclose(res["dual_vectors"], expected, atol=1e-12)
        assert res["max_reconstruction_residual"] <= 1e-8

    def test_orthonormal_self_dual(self, tmp_path, capsys):
        doc = {
            "dimension": 3,
            "anchors": [[0.0, 0.0, 1.0]],
            "frame": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
        }
        path = tmp_path / "ortho.json"
        path.write_text(json.dumps(doc))
        rc, rep = run_json(capsys, ["dual", "--instance", str(path)])
        assert rc == 0
        np.testing.assert_allclose(rep["results"]["dual_vectors"], doc["frame"], atol=1e-12)

    def test_non_frame_exits_one(self, nonframe_file):
        assert main(["dual", "--instance", nonframe_file]) == 1


class TestTight:
    def test_tight_report(self, mb_file, capsys):
        rc, rep = run_json(capsys, ["tight", "--instance", mb_file])
        assert rc == 0
        assert rep["results"]["deviation_from_unit_bounds"] <= 1e-8
        assert rep["verdicts"]["unit_bounds"] is True

    def test_already_tight_scales(self, tmp_path, capsys):
        doc = {
            "dimension": 3,
            "anchors": [[0.0, 0.0, 2.0]],
            "frame": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
        }
        path = tmp_path / "tight.json"
        path.write_text(json.dumps(doc))
        rc, rep = run_json(capsys, ["tight", "--instance", str(path)])
        assert rc == 0
        # frame operator is 4I, so canonicalization scales by 1/2
        expected = [[0.5, 0.0, 0.0], [0.0, 0.5, 0.0]]
        np.testing.assert_allclose(rep["results"]["tight_vectors"], expected, atol=1e-12)

    def test_non_frame_exits_one(self, nonframe_file):
        assert main(["tight", "--instance", nonframe_file]) == 1


class TestReconstruct:
    def test_reconstruct_all_vectors(self, mb_file, capsys):
        rc, rep = run_json(capsys, ["reconstruct", "--instance", mb_file])
        assert rc == 0
        recs = rep["results"]["reconstructions"]
        assert recs["f"]["residual"] <= 1e-10
        np.testing.assert_allclose(recs["f"]["coordinates"], [5.0, -2.0], atol=1e-10)

    def test_non_frame_exits_one(self, nonframe_file):
        assert main(["reconstruct", "--instance", nonframe_file]) == 1


class TestImage:
    def test_doubling_operator(self, mb_file, capsys):
        rc, rep = run_json(capsys, ["image", "--instance", mb_file, "--operator", "U"])
        assert rc == 0
        assert rep["results"]["lower_bound"] == pytest.approx(4.0, abs=1e-10)
        assert rep["results"]["upper_bound"] == pytest.approx(12.0, abs=1e-10)
        assert rep["results"]["conjugation_agreement"] <= 1e-10

    def test_rank_deficient_operator(self, mb_file, capsys):
        rc, rep = run_json(capsys, ["image", "--instance", mb_file, "--operator", "P"])
        assert rc == 1
        assert rep["verdicts"]["frame"] is False

    def test_unknown_operator(self, mb_file):
        assert main(["image", "--instance", mb_file, "--operator", "XX"]) == 2


class TestCombine:
    def test_projection_to_first(self, mb_file, capsys):
        rc, rep = run_json(
            capsys, ["combine", "--instance", mb_file, "--op1", "L1", "--op2", "L2"]
        )
        assert rc == 0
        assert rep["results"]["lower_bound"] == pytest.approx(1.0, abs=1e-10)
        assert rep["results"]["upper_bound"] == pytest.approx(3.0, abs=1e-10)

    def test_cancellation_fails(self, tmp_path, capsys):
        doc = dict(MB_DOC, frame2=MB_DOC["frame"])
        path = tmp_path / "cancel.json"
        path.write_text(json.dumps(doc))
        rc, rep = run_json(
            capsys, ["combine", "--instance", str(path), "--op1", "L1", "--op2", "NEG"]
        )
        assert rc == 1
        assert rep["verdicts"]["frame"] is False

    def test_missing_second_frame(self, tmp_path):
        doc = {k: v for k, v in MB_DOC.items() if k != "frame2"}
        path = tmp_path / "nof2.json"
        path.write_text(json.dumps(doc))
        assert main(["combine", "--instance", str(path)]) == 2


class TestRoundTrip:
    def test_bit_identical_computations(self, tmp_path):
        cfg = GenConfig(seed=99)
        anchors = gen_anchor_set(cfg, 6, 3, index=0)
        space = build_induced_space(anchors)
        fs = gen_frame(cfg, space, 7, index=0)
        inst = Instance(
            dimension=6,
            anchors=anchors.anchors,
            frame=fs.vectors,
            vectors={"f": np.array([0.1, -0.2, 0.3, 0.7, -1.1, 0.5])},
        )
        path = tmp_path / "round.json"
        save_instance(path, inst)
        reread = load_instance(path)
        assert np.array_equal(reread.anchors, inst.anchors)
        assert np.array_equal(reread.frame, inst.frame)
        b1 = optimal_bounds(fs)
        fs2 = reread.frame_system(reread.induced_space())
        b2 = optimal_bounds(fs2)
        assert b1.lower == b2.lower and b1.upper == b2.upper
        s1 = frame_operator(fs).matrix
        s2 = frame_operator(fs2).matrix
        assert np.array_equal(s1, s2)

    def test_text_round_trip(self):
        inst = Instance(
            dimension=3,
            anchors=np.array([[0.0, 0.0, 1.0]]),
            frame=np.array([[0.1234567890123456789, 1.0, 0.0]]),
        )
        reread = loads_instance(dumps_instance(inst))
        assert np.array_equal(reread.frame, inst.frame)


class TestInstanceValidation:
    def test_missing_fields(self):
        from nframe.instances import from_dict
        from nframe import InstanceFormatError

        with pytest.raises(InstanceFormatError):
            from_dict({"dimension": 3, "frame": [[1.0, 0.0, 0.0]]})
        with pytest.raises(InstanceFormatError):
            from_dict({"anchors": [[0.0, 0.0, 1.0]], "frame": [[1.0, 0.0, 0.0]]})

    def test_anchor_overflow(self):
        from nframe.instances import from_dict
        from nframe import InstanceFormatError

        doc = {
            "dimension": 2,
            "anchors": [[1.0, 0.0], [0.0, 1.0]],
            "frame": [[1.0, 0.0]],
        }
        with pytest.raises(InstanceFormatError):
            from_dict(doc)

    def test_non_finite_rejected(self):
        from nframe.instances import from_dict
        from nframe import InstanceFormatError

        doc = dict(MB_DOC, vectors={"f": [float("nan"), 0.0, 0.0]})
        with pytest.raises(InstanceFormatError):
            from_dict(doc)


class TestCertify:
    def test_small_run_passes(self, capsys):
        rc, rep = run_json(capsys, ["certify", "--seed", "7", "--trials", "5"])
        assert rc == 0
        assert rep["verdicts"]["all_passed"] is True
        assert len(rep["results"]["suites"]) == len(certify.SUITE_NAMES)
        assert rep["results"]["counterexample"] is None

    def test_zero_trials_rejected(self, capsys):
        assert main(["certify", "--trials", "0"]) == 2

    def test_injected_bug_is_caught(self, capsys, monkeypatch):
        # sanity of the harness: a sign flip in the n-inner product must
        # break the Cauchy-Schwarz suite and dump a counterexample
        true_inner = nspace.n_inner
        monkeypatch.setattr(nspace, "n_inner", lambda x, y, a: -true_inner(x, y, a))
        rc, rep = run_json(capsys, ["certify", "--seed", "7", "--trials", "3"])
        assert rc == 1
        suites = {s["name"]: s for s in rep["results"]["suites"]}
        assert suites["cauchy_schwarz"]["failures"] > 0
        assert rep["results"]["counterexample"] is not None
        assert "instance" in rep["results"]["counterexample"]

    def test_determinism_of_reports(self, capsys):
        rc1, rep1 = run_json(capsys, ["certify", "--seed", "11", "--trials", "4"])
        rc2, rep2 = run_json(capsys, ["certify", "--seed", "11", "--trials", "4"])
        assert rc1 == rc2 == 0
        r1 = [(s["name"], s["worst_residual"]) for s in rep1["results"]["suites"]]
        r2 = [(s["name"], s["worst_residual"]) for s in rep2["results"]["suites"]]
        assert r1 == r2
