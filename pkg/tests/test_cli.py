"""Config parsing, presets, and file emission."""

import json

import pytest

from nrivapor import SweepSpec, preset_params, run_sweep
from nrivapor.cli import (
    BadValue,
    MissingPresetAndParams,
    UnknownKey,
    emit,
    main,
    parse_config,
)


class TestParseConfig:
    def test_preset_fig2(self):
        cfg = parse_config(["--preset", "fig2-oc1.0"])
        p = cfg.spec.base
        assert p.delta_c == 0 and p.delta_s == 0
        assert p.gamma1 == 0.05 and p.gamma2 == 0.01 and p.gamma3 == 0.01
        assert p.gamma4 == 0.1
        assert p.omega_p == 0.1 and p.omega_s == 0.1 and p.omega_c == 1.0
        assert p.number_density == 5e24
        assert (cfg.spec.start, cfg.spec.stop, cfg.spec.points) == (-6.0, 6.0, 1201)

    def test_preset_fig3(self):
        cfg = parse_config(["--preset", "fig3-oc3.5"])
        p = cfg.spec.base
        assert p.delta_c == -1.5 and p.delta_s == 1.5
        assert p.omega_p == 0.8 and p.omega_s == 0.8 and p.omega_c == 3.5
        assert (cfg.spec.start, cfg.spec.stop) == (-12.0, 14.0)

    def test_empty_invocation(self):
        with pytest.raises(MissingPresetAndParams):
            parse_config([])

    def test_unknown_key(self):
        with pytest.raises(UnknownKey):
            parse_config(["--preset", "fig2-oc1.0", "--param", "omega_q=1.0"])

    def test_bad_value(self):
        with pytest.raises(BadValue):
            parse_config(["--preset", "fig2-oc1.0", "--param", "omega_c=strong"])

    def test_invariant_violation_is_bad_value(self):
        with pytest.raises(BadValue):
            parse_config(["--preset", "fig2-oc1.0", "--param", "gamma1=-0.1"])

    def test_param_overrides_preset(self):
        cfg = parse_config(["--preset", "fig2-oc1.0", "--param", "omega_c=2.5"])
        assert cfg.spec.base.omega_c == 2.5

    def test_sweep_flag(self):
        cfg = parse_config(["--preset", "fig2-oc1.0", "--sweep=-1,1,11"])
        assert (cfg.spec.start, cfg.spec.stop, cfg.spec.points) == (-1.0, 1.0, 11)

    def test_config_file_and_flag_precedence(self, tmp_path):
        f = tmp_path / "run.cfg"
        f.write_text("omega_c = 2.0\nstart = -3\nstop = 3\npoints = 21\n# comment\n")
        cfg = parse_config(["--preset", "fig2-oc1.0", "--config", str(f),
                            "--param", "omega_c=3.0"])
        assert cfg.spec.base.omega_c == 3.0  # flag wins over file
        assert (cfg.spec.start, cfg.spec.stop, cfg.spec.points) == (-3.0, 3.0, 21)

    def test_config_file_unknown_key(self, tmp_path):
        f = tmp_path / "run.cfg"
        f.write_text("rabi = 2.0\n")
        with pytest.raises(UnknownKey):
            parse_config(["--preset", "fig2-oc1.0", "--config", str(f)])

    def test_explicit_params_without_preset(self):
        cfg = parse_config(["--param", "omega_c=1.0", "--sweep=-1,1,5"])
        assert cfg.spec.points == 5

    def test_params_without_sweep_rejected(self):
        with pytest.raises(MissingPresetAndParams):
            parse_config(["--param", "omega_c=1.0"])


def small_result():
    spec = SweepSpec(base=preset_params("fig2-oc1.0"), start=-1, stop=1, points=2)
    return run_sweep(spec), spec


class TestEmit:
    def test_csv_shape(self, tmp_path):
        result, spec = small_result()
        cfg = parse_config(["--preset", "fig2-oc1.0", "--sweep=-1,1,2",
                            "--out", str(tmp_path / "o.csv")])
        paths = emit(result, cfg)
        lines = open(paths[0]).read().splitlines()
        assert len(lines) == 3  # header + 2 data rows
        header = lines[0].split(",")
        assert header[0] == "delta_p_over_gamma"
        assert header[-1] == "status"
        summary = json.loads(open(paths[1]).read())
        assert "zero_absorption_intervals" in summary

    def test_csv_round_trip_bit_exact(self, tmp_path):
        result, _ = small_result()
        cfg = parse_config(["--preset", "fig2-oc1.0", "--sweep=-1,1,2",
                            "--out", str(tmp_path / "o.csv")])
        path = emit(result, cfg)[0]
        lines = open(path).read().splitlines()[1:]
        for line, row in zip(lines, result.rows):
            cells = line.split(",")
            assert float(cells[0]) == row.axis_value
            assert float(cells[1]) == row.response.eps_r.real
            assert float(cells[6]) == row.response.n.imag
            assert float(cells[9]) == row.response.gamma_m.real

    def test_populations_columns(self, tmp_path):
        result, _ = small_result()
        cfg = parse_config(["--preset", "fig2-oc1.0", "--sweep=-1,1,2",
                            "--out", str(tmp_path / "o.csv"), "--emit-populations"])
        path = emit(result, cfg)[0]
        header = open(path).read().splitlines()[0].split(",")
        assert header[-4:] == ["rho11", "rho22", "rho33", "rho44"]
        row = open(path).read().splitlines()[1].split(",")
        pops = [float(c) for c in row[-4:]]
        assert abs(sum(pops) - 1) < 1e-10

    def test_error_row_kept_with_status(self, tmp_path):
        base = preset_params("fig2-oc1.0")
        spec = SweepSpec(base=base, axis="omega_p", start=0.0, stop=0.2, points=3)
        result = run_sweep(spec)
        cfg = parse_config(["--preset", "fig2-oc1.0", "--out", str(tmp_path / "o.csv")])
        path = emit(result, cfg)[0]
        lines = open(path).read().splitlines()
        first = lines[1].split(",")
        assert first[-1] == "ZeroProbe"
        assert first[1] == ""  # numeric fields empty on error

    def test_json_format(self, tmp_path):
        result, _ = small_result()
        cfg = parse_config(["--preset", "fig2-oc1.0", "--sweep=-1,1,2",
                            "--format", "json", "--out", str(tmp_path / "o.json")])
        paths = emit(result, cfg)
        assert len(paths) == 1
        doc = json.loads(open(paths[0]).read())
        assert len(doc["rows"]) == 2
        assert doc["summary"]["axis"] == "delta_p"

    def test_no_partial_files(self, tmp_path):
        result, _ = small_result()
        out = tmp_path / "sub" / "o.csv"  # parent missing -> IoFailure
        cfg = parse_config(["--preset", "fig2-oc1.0", "--out", str(out)])
        from nrivapor.cli import IoFailure
        with pytest.raises(IoFailure):
            emit(result, cfg)
        assert not out.exists()
        assert list(tmp_path.iterdir()) == []


class TestMain:
    def test_success_exit_code(self, tmp_path, capsys):
        rc = main(["--preset", "fig2-oc1.0", "--sweep=-1,1,5",
                   "--out", str(tmp_path / "o.csv")])
        assert rc == 0
        out = capsys.readouterr().out
        assert "zero-absorption intervals" in out
        assert (tmp_path / "o.csv").exists()

    def test_error_exit_code(self, capsys):
        rc = main([])
        assert rc != 0
        assert "MissingPresetAndParams" in capsys.readouterr().err
