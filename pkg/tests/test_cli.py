import io
import json
import logging

import numpy as np
import pandas as pd
import pytest

import main_angspec
from angspec_pkg.blockmat import random_instance
from angspec_pkg.commands.spectrum import efun_samples
from angspec_pkg.solvers import SpectrumEntry
from angspec_pkg.solvers.base import THETA_GRID


def run(capsys, *argv):
    code = main_angspec.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize_argv():
    argv = ["bounds", "--k", "-5..4", "--n", "1", "--am", "-0.25", "--verbose"]
    assert main_angspec.normalize_argv(argv) == ["bounds", "--k=-5..4", "--n", "1", "--am=-0.25", "--verbose"]


def test_unknown_command(capsys):
    code, _, _ = run(capsys, "plot")
    assert code == 2


def test_bad_flag(capsys):
    code, _, _ = run(capsys, "bounds", "--n0", "auto", "--bogus")
    assert code == 2


def test_bounds_table1(capsys):
    code, out, _ = run(capsys, "bounds", "--am", "0.25", "--aomega", "0.75", "--k", "-5..4", "--n", "1")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    first = frame[frame["n0"] == 0].set_index("k")
    assert list(first.index) == list(range(-5, 5))
    assert first.loc[-5, "lam_check"] == pytest.approx(3.93330, abs=5e-6)
    assert first.loc[-5, "lamQ"] == pytest.approx(3.75, abs=5e-6)
    assert first.loc[4, "lam_hat"] == pytest.approx(5.95636, abs=5e-6)
    assert np.isnan(first.loc[-1, "lamQ"])
    # k = -1 has no certified shift without a spectrum
    assert set(frame.loc[frame["k"] == -1, "n0"]) == {0, 1}
    assert "n0_uncertified" in frame.loc[frame["k"] == -1, "flag"].iloc[0]


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--am", "0.005", "--aomega", "0.015", "--k", "0", "--n", "2",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "bounds"
    assert [row["n"] for row in doc["rows"]] == [1, 2]
    assert doc["rows"][0]["lam_check"] == pytest.approx(0.995, abs=5e-6)


def test_bounds_refinements(capsys):
    code, out, _ = run(capsys, "bounds", "--am", "0.25", "--aomega", "0.75", "--k", "-5", "--n", "1",
                       "--unverified-refinements")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert frame.loc[0, "refined_tag"] == "UNVERIFIED"
    assert frame.loc[0, "comb_lo"] == pytest.approx(4.18330, abs=5e-6)


def test_bounds_to_file(capsys, tmp_path):
    target = tmp_path / "bounds.csv"
    code, out, _ = run(capsys, "bounds", "--a", "0", "--k", "0", "--n", "3", "--out", str(target))
    assert code == 0 and out == ""
    frame = pd.read_csv(target)
    assert list(frame["comb_lo"]) == pytest.approx([1.0, 2.0, 3.0])


def test_table_bounds_only(capsys):
    code, out, _ = run(capsys, "table", "2", "--bounds_only")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert frame["passed"].all()


def test_verify_random(capsys):
    code, out, _ = run(capsys, "verify", "--instances", "3", "--dims", "4,4", "--seed", "7")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert set(frame["instance"]) == {0, 1, 2}
    assert frame["passed"].all()


def test_verify_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "--instances", "2", "--dims", "3,3", "--seed", "11")
    _, second, _ = run(capsys, "verify", "--instances", "2", "--dims", "3,3", "--seed", "11")
    assert first == second


def test_verify_counterexample(capsys, tmp_path):
    M = random_instance(np.random.default_rng(1), 2)
    doc = json.loads(M.to_json())
    doc["t11"][0][1] = [5.0, 0.0]
    fixture = tmp_path / "bad.json"
    fixture.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", "--fixture", str(fixture))
    assert code == 5
    assert "counterexample" in err


def test_sweep_figure2_orderings(capsys):
    code, out, _ = run(capsys, "sweep", "--figure", "2")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out)).dropna(subset=["lamQ"])
    assert (frame["lamQ"] > frame["lam_check_1"]).any()
    assert (frame["lamQ"] < frame["lam_check_1"]).any()
    assert frame["a"].is_monotonic_increasing


def test_sweep_constant_at_zero_rotation(capsys):
    code, out, _ = run(capsys, "sweep", "--param", "omega", "--from", "0", "--to", "1", "--steps", "5", "--a", "0")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    for column in ("lamQ", "lam_check_1", "lam_hat_1"):
        assert frame[column].nunique() == 1


def test_sweep_integer_k(capsys):
    code, out, _ = run(capsys, "sweep", "--param", "k", "--from", "-4", "--to", "5", "--a", "1", "--m", "0.25",
                       "--omega", "0.75")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame["k"]) == list(range(-4, 6))
    row = frame.set_index("k")
    assert row.loc[-3, "lamQ"] == pytest.approx(1.75)
    assert row.loc[2, "lamQ"] == pytest.approx(3.25)
    assert np.isnan(row.loc[-1, "lamQ"])


def test_sweep_needs_range(capsys):
    code, _, _ = run(capsys, "sweep", "--param", "a")
    assert code == 2


@pytest.mark.slow
def test_spectrum_command(capsys):
    code, out, _ = run(capsys, "spectrum", "--am", "0.005", "--aomega", "0.015", "--k", "0", "--n", "-1..1")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out)).set_index("n")
    assert list(frame.index) == [-1, 1]
    assert frame.loc[1, "lambda"] == pytest.approx(1.00836, abs=5e-3)
    assert (frame["residual"] < 1e-6).all()


@pytest.mark.slow
def test_spectrum_both_methods(capsys):
    code, out, _ = run(capsys, "spectrum", "--am", "0.25", "--aomega", "0.75", "--k", "0", "--n", "1,2",
                       "--method", "both")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert (frame["agreement"] < 1e-6).all()


@pytest.mark.slow
@pytest.mark.parametrize("table_id", [1, 2, 3, 4])
def test_table_with_solver(capsys, table_id):
    code, out, _ = run(capsys, "table", str(table_id))
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert (frame["kind"] == "enclosure").any()
    assert frame.loc[frame["kind"] == "enclosure", "passed"].all()


def test_verify_scalar_smoke(capsys):
    code, _, _ = run(capsys, "verify", "--instances", "1", "--dims", "1,1")
    assert code == 0


def test_bounds_drop_spt_without_shift_identity(capsys):
    # |am| >= 1/2 certifies n0 = 0 but not n0 = m+
    code, out, _ = run(capsys, "bounds", "--am", "0.6", "--aomega", "0", "--k", "3", "--n", "1")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame["n0"]) == [0]
    assert "spt_dropped" in frame.loc[0, "flag"]
    assert np.isnan(frame.loc[0, "spt_lo"])
    assert frame.loc[0, "active_lo"] != "spt"


def test_efun_samples_even_grid():
    entry = SpectrumEntry(lam=1.0, samples=np.ones((THETA_GRID.size, 2)))
    picked = efun_samples(entry, 5)
    assert picked["theta"][0] == THETA_GRID[0]
    assert picked["theta"][-1] == THETA_GRID[-1]
    assert len(picked["f"]) == len(picked["g"]) == 5
    assert efun_samples(SpectrumEntry(lam=1.0), 5) is None


def test_samples_need_json(capsys):
    code, _, _ = run(capsys, "spectrum", "--am", "0.005", "--aomega", "0.015", "--samples", "5")
    assert code == 2


@pytest.mark.slow
def test_spectrum_json_samples(capsys):
    code, out, _ = run(capsys, "spectrum", "--am", "0.005", "--aomega", "0.015", "--k", "0", "--n", "1",
                       "--format", "json", "--samples", "9")
    assert code == 0
    efun = json.loads(out)["rows"][0]["efun"]
    assert len(efun["theta"]) == 9
    assert np.all(np.diff(efun["theta"]) > 0)
    assert 0.0 < np.sum(np.square(efun["f"])) + np.sum(np.square(efun["g"])) <= 1.0 + 1e-12


@pytest.mark.slow
def test_verify_acceptance_run(capsys):
    code, out, err = run(capsys, "verify", "--instances", "100", "--seed", "2599", "--dims", "8,8")
    assert code == 0, err
    frame = pd.read_csv(io.StringIO(out))
    assert frame["instance"].nunique() == 100
    assert frame["passed"].all()


def test_args_report_logged_at_info(capsys, caplog):
    with caplog.at_level(logging.INFO):
        code, _, _ = run(capsys, "bounds", "--a", "0", "--k", "0", "--n", "1")
    assert code == 0
    assert any(r.levelno == logging.INFO and "args Report" in r.getMessage() for r in caplog.records)
