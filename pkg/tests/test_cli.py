import pandas as pd
import pytest
from click.testing import CliRunner

from strapnav.cli.interface import main
from strapnav.navigator import io


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def dataset(runner, spec_file, tmp_path):
    traj = spec_file("traj.cfg", {"kind": "stationary", "duration": 5, "l_rate": 100})
    err = spec_file("err.cfg", {"gyro_arw": 0.05, "accel_vrw": 0.001})
    gnss = spec_file("gnss.cfg", {"pos_sigma": 0.5, "vel_sigma": 0.05})
    out = tmp_path / "data"
    result = runner.invoke(main, ["sim", "--traj", str(traj), "--err", str(err), "--gnss", str(gnss),
                                  "--seed", "11", "-o", str(out)])
    assert result.exit_code == 0, result.output
    return out


def invoke_run(runner, dataset, out, *args):
    return runner.invoke(main, ["run", "-i", str(dataset), "-o", str(out), *args])


class TestSim:
    def test_writes_dataset(self, dataset):
        assert len(pd.read_csv(dataset / "imu.csv")) == 500
        assert len(pd.read_csv(dataset / "truth.csv")) == 501
        assert len(pd.read_csv(dataset / "gnss.csv")) == 5
        meta = (dataset / "meta.txt").read_text(encoding="utf-8")
        assert "seed = 11" in meta

    def test_same_seed_same_bytes(self, runner, dataset, spec_file, tmp_path):
        traj = spec_file("traj.cfg", {"kind": "stationary", "duration": 5, "l_rate": 100})
        err = spec_file("err.cfg", {"gyro_arw": 0.05, "accel_vrw": 0.001})
        gnss = spec_file("gnss.cfg", {"pos_sigma": 0.5, "vel_sigma": 0.05})
        again = tmp_path / "again"
        result = runner.invoke(main, ["sim", "--traj", str(traj), "--err", str(err), "--gnss", str(gnss),
                                      "--seed", "11", "-o", str(again)])
        assert result.exit_code == 0
        for name in ("imu.csv", "gnss.csv", "truth.csv", "meta.txt"):
            assert (again / name).read_bytes() == (dataset / name).read_bytes()

    def test_invalid_spec(self, runner, spec_file, tmp_path):
        traj = spec_file("bad.cfg", {"kind": "figure-eight"})
        result = runner.invoke(main, ["sim", "--traj", str(traj), "-o", str(tmp_path / "x")])
        assert result.exit_code == 2
        assert "figure-eight" in result.output

    def test_missing_spec_file(self, runner, tmp_path):
        result = runner.invoke(main, ["sim", "--traj", str(tmp_path / "none.cfg"), "-o", str(tmp_path / "x")])
        assert result.exit_code == 2


class TestRun:
    def test_eskf(self, runner, dataset, tmp_path):
        out = tmp_path / "eskf"
        result = invoke_run(runner, dataset, out, "--filter", "eskf")
        assert result.exit_code == 0, result.output
        assert "rms_attitude_deg" in result.output
        assert len(pd.read_csv(out / io.ESTIMATE_FILE)) == 50
        assert len(pd.read_csv(out / io.INNOVATIONS_FILE)) == 5
        metrics = pd.read_csv(out / io.METRICS_FILE)
        assert metrics["filter"].iloc[0] == "eskf"
        assert metrics["epochs"].iloc[0] == 50
        assert "filter = eskf" in (out / io.RUN_CONFIG_FILE).read_text(encoding="utf-8")

    def test_config_file_and_override(self, runner, dataset, spec_file, tmp_path):
        cfg = spec_file("run.cfg", {"filter": "comp", "kp": 2.0})
        out = tmp_path / "comp"
        result = invoke_run(runner, dataset, out, "--config", str(cfg), "--set", "ki=0.2")
        assert result.exit_code == 0, result.output
        saved = (out / io.RUN_CONFIG_FILE).read_text(encoding="utf-8")
        assert "kp = 2.0" in saved
        assert "ki = 0.2" in saved
        estimate = pd.read_csv(out / io.ESTIMATE_FILE)
        assert estimate["lat"].isna().all()

    def test_cross_filter_key(self, runner, dataset, tmp_path):
        result = invoke_run(runner, dataset, tmp_path / "o", "--filter", "eskf", "--set", "kp=2")
        assert result.exit_code == 2
        assert "only applies to filter 'comp'" in result.output

    def test_unknown_key(self, runner, dataset, tmp_path):
        result = invoke_run(runner, dataset, tmp_path / "o", "--set", "wobble=1")
        assert result.exit_code == 2

    def test_bad_override_syntax(self, runner, dataset, tmp_path):
        result = invoke_run(runner, dataset, tmp_path / "o", "--set", "wobble")
        assert result.exit_code == 2

    def test_missing_dataset(self, runner, tmp_path):
        result = invoke_run(runner, tmp_path / "nowhere", tmp_path / "o", "--filter", "ins")
        assert result.exit_code == 2

    def test_divergence(self, runner, spec_file, tmp_path):
        traj = spec_file("traj.cfg", {"kind": "stationary", "velocity": "5,0,0", "duration": 5, "l_rate": 100})
        data = tmp_path / "moving"
        assert runner.invoke(main, ["sim", "--traj", str(traj), "-o", str(data)]).exit_code == 0
        out = tmp_path / "o"
        result = invoke_run(runner, data, out, "--filter", "ins", "--set", "earth_radius=1")
        assert result.exit_code == 3
        assert "Last good epoch: t = 0.200000 s" in result.output
        assert (out / io.ESTIMATE_FILE).exists()


class TestCompare:
    def test_identical_runs(self, runner, dataset, tmp_path):
        for name in ("a", "b"):
            assert invoke_run(runner, dataset, tmp_path / name, "--filter", "eskf").exit_code == 0
        table_path = tmp_path / "cmp.csv"
        result = runner.invoke(main, ["compare", str(tmp_path / "a"), str(tmp_path / "b"), "--output", str(table_path)])
        assert result.exit_code == 0, result.output
        table = pd.read_csv(table_path)
        assert len(table) == 2
        assert (table["rms_attitude_deg_delta"] == 0.0).all()

    def test_filters_side_by_side(self, runner, dataset, tmp_path):
        for name in ("ins", "eskf", "gd"):
            assert invoke_run(runner, dataset, tmp_path / name, "--filter", name).exit_code == 0
        dirs = [str(tmp_path / name) for name in ("ins", "eskf", "gd")]
        result = runner.invoke(main, ["compare", *dirs, "--output", str(tmp_path / "cmp.csv")])
        assert result.exit_code == 0, result.output
        assert list(pd.read_csv(tmp_path / "cmp.csv")["filter"]) == ["ins", "eskf", "gd"]

    def test_missing_run_dir(self, runner, dataset, tmp_path):
        invoke_run(runner, dataset, tmp_path / "a", "--filter", "ins")
        result = runner.invoke(main, ["compare", str(tmp_path / "a"), str(tmp_path / "nope")])
        assert result.exit_code == 2

    def test_mismatched_time_bases(self, runner, dataset, tmp_path):
        invoke_run(runner, dataset, tmp_path / "a", "--filter", "ins")
        invoke_run(runner, dataset, tmp_path / "b", "--filter", "ins", "--set", "l_per_m=5")
        result = runner.invoke(main, ["compare", str(tmp_path / "a"), str(tmp_path / "b"),
                                      "--output", str(tmp_path / "cmp.csv")])
        assert result.exit_code == 2
        assert "Time base" in result.output


class TestSettings:
    def test_missing_settings_file(self, runner, tmp_path):
        result = runner.invoke(main, ["--settings", str(tmp_path / "none.toml"), "compare", "a", "b"])
        assert result.exit_code == 2

    def test_run_defaults_from_settings(self, runner, dataset, tmp_path):
        settings = tmp_path / "settings.toml"
        settings.write_text('[run]\nfilter = "ins"\n', encoding="utf-8")
        out = tmp_path / "o"
        result = runner.invoke(main, ["--settings", str(settings), "run", "-i", str(dataset), "-o", str(out)])
        assert result.exit_code == 0, result.output
        assert pd.read_csv(out / io.METRICS_FILE)["filter"].iloc[0] == "ins"
