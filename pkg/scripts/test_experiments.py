"""
Tests de los experimentos Monte Carlo de punta a punta.
Cada test fija la semilla maestra, así que los resultados son reproducibles.
"""

import sys, pathlib
import json
import math

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]   # carpeta del proyecto
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))

from domain.errors import ConfigError
from domain.experiments.config import ExperimentConfig
from domain.experiments.group_sweep import relator_count, sweep_monotone
from domain.pipeline import build_and_run, run_experiment
from domain.summary import CSV_COLUMNS, extras_to_frame, summary_to_frame, wilson_interval
from infrastructure.exporters import results_csv, trials_csv, write_outputs
from utils.styles import VERDICT_COLORS, verdict_legend
from utils.table_utils import style_results, verdict_style

SEED = 20240501


def _cfg(**kwargs):
    kwargs.setdefault("master_seed", SEED)
    return ExperimentConfig(**kwargs)


def _cell(summary, **match):
    for cell in summary.cells:
        if all(getattr(cell, k) == v for k, v in match.items()):
            return cell
    raise AssertionError(f"No hay celda con {match}")


# ------------------------------------------------------------------
# Wilson
# ------------------------------------------------------------------

def test_wilson_interval_values():
    lo, hi = wilson_interval(8, 10)
    assert lo == pytest.approx(0.4902, abs=1e-3)
    assert hi == pytest.approx(0.9433, abs=1e-3)
    assert wilson_interval(0, 10)[0] == 0.0
    assert wilson_interval(10, 10)[1] == 1.0
    lo, hi = wilson_interval(5, 10)
    assert 0.5 - lo == pytest.approx(hi - 0.5)
    with pytest.raises(ValueError):
        wilson_interval(0, 0)


# ------------------------------------------------------------------
# Configuración
# ------------------------------------------------------------------

def test_config_scalar_grids_and_alias():
    cfg = ExperimentConfig.model_validate({"kind": "group_cprime_sweep", "ell": 30, "lambda": 0.5, "d": 0.1})
    assert cfg.lam == [0.5] and cfg.ell == [30] and cfg.m == [2]
    assert cfg.high == 0.8 and cfg.low == 0.2
    assert [idx for idx, _ in cfg.cells("m", "ell", "lam", "d")] == [0]


@pytest.mark.parametrize("data", [
    {"kind": "intersection", "n": [100], "alpha": [0.5]},
    {"kind": "intersection", "n": [1], "alpha": [0.5], "beta": [0.5]},
    {"kind": "intersection", "n": [100], "alpha": [1.5], "beta": [0.5]},
    {"kind": "group_cprime_sweep", "ell": [10], "d": [0.1], "lambda": [1.0]},
    {"kind": "group_cprime_sweep", "m": [1], "ell": [10], "d": [0.1], "lambda": [0.5]},
    {"kind": "multidim", "n": [100], "d": [0.5]},
    {"kind": "multidim", "n": [100], "d": [0.5], "tuple_set": {"family": "random"}},
    {"kind": "bernoulli_empty", "n": [100], "d": [0.0], "colour": "red"},
    {"kind": "multidim", "n": [50], "d": [0.5], "k": 3, "tuple_set": {"family": "star"}},
    {"kind": "multidim", "n": [50, 200], "d": [0.5], "tuple_set": {"family": "explicit", "tuples": [[0, 99]]}},
    {"kind": "multidim", "n": [50], "d": [0.5], "tuple_set": {"family": "explicit", "tuples": [[0, 1, 2]]}},
    {"kind": "multidim", "n": [50], "d": [0.5], "tuple_set": {"family": "ring"}},
])
def test_config_rejects_invalid(data):
    with pytest.raises(ValueError):
        ExperimentConfig.model_validate(data)


# ------------------------------------------------------------------
# Intersección
# ------------------------------------------------------------------

def test_intersection_supercritical_and_subcritical():
    cfg = _cfg(kind="intersection", n=[10**4], alpha=[0.25, 0.4, 0.8], beta=[0.25, 0.4, 0.8], trials=200)
    summary = run_experiment(cfg)
    assert len(summary.cells) == 9
    high = _cell(summary, alpha=0.8, beta_or_d=0.8)
    assert high.p_hat >= 0.95 and high.verdict == "pass"
    assert high.extras["predicted_density"] == pytest.approx(0.6)
    assert high.extras["exact_mean"] == pytest.approx(1584 ** 2 / 10**4)
    low = _cell(summary, alpha=0.25, beta_or_d=0.25)
    assert low.p_hat >= 0.95
    assert low.extras["predicted_density"] == -math.inf
    # E|A∩B| = 39²/10⁴ ≈ 0.15 a este n: vacío con probabilidad ≈ 0.86
    assert _cell(summary, alpha=0.4, beta_or_d=0.4).p_hat >= 0.78


def test_intersection_critical_line():
    cell = run_experiment(_cfg(kind="intersection", n=[10**4], alpha=[0.5], beta=[0.5], trials=20)).cells[0]
    assert cell.verdict == "critical"
    assert cell.extras["predicted_density"] is None


def test_intersection_bernoulli_full_sets():
    cell = run_experiment(_cfg(kind="intersection", model="bernoulli", n=[500], alpha=[1.0], beta=[1.0],
                               trials=10)).cells[0]
    assert cell.p_hat == 1.0
    assert cell.extras["mean_count"] == 500


def test_intersection_extra_densities():
    # tres conjuntos: 3 − (0.9 + 0.9 + 0.9) = 0.7
    cell = run_experiment(_cfg(kind="intersection", n=[10**4], alpha=[0.9], beta=[0.9], extra_densities=[0.9],
                               trials=50)).cells[0]
    assert cell.extras["predicted_density"] == pytest.approx(0.7)
    assert "exact_mean" not in cell.extras
    assert cell.p_hat >= 0.9


def test_bernoulli_empty_one_over_e():
    cell = run_experiment(_cfg(kind="bernoulli_empty", n=[10**6], d=[0.0], trials=2000)).cells[0]
    assert abs(cell.p_hat - math.exp(-1)) <= 0.03
    assert cell.extras["exact_empty_probability"] == pytest.approx(math.exp(-1), abs=1e-6)


# ------------------------------------------------------------------
# Multidimensional
# ------------------------------------------------------------------

def test_multidim_random_x():
    cfg = _cfg(kind="multidim", n=[1000], d=[0.8], alpha=[0.9], tuple_set={"family": "random"}, trials=200)
    cell = run_experiment(cfg).cells[0]
    assert abs(cell.extras["median_exponent"] - 0.7) <= 0.1
    assert cell.extras["small_self_intersection"]["holds"]
    assert cell.verdict != "condition_failed"


def test_multidim_random_x_subcritical():
    cfg = _cfg(kind="multidim", n=[1000], d=[0.5], alpha=[0.2], tuple_set={"family": "random"}, trials=200)
    cell = run_experiment(cfg).cells[0]
    assert cell.extras["predicted_exponent"] < 0
    assert cell.p_hat >= 0.95


def test_multidim_star_counterexample():
    cfg = _cfg(kind="multidim", n=[10**4], d=[0.75], tuple_set={"family": "star"}, trials=200)
    cell = run_experiment(cfg).cells[0]
    assert cell.verdict == "condition_failed"
    assert not cell.extras["small_self_intersection"]["holds"]
    assert cell.extras["exponent_deviation"] > 0.1
    assert cell.extras["predicted_exponent"] == pytest.approx(0.25, abs=1e-3)


# ------------------------------------------------------------------
# Grupos
# ------------------------------------------------------------------

def test_relator_count_and_clamp():
    cfg = _cfg(kind="group_cprime_sweep", ell=[3], d=[1.0], lam=[0.5])
    assert relator_count(cfg, 2, 3, 1.0) == (44, False)
    assert relator_count(cfg, 2, 3, 0.0) == (1, False)
    fixed = _cfg(kind="group_cprime_sweep", ell=[3], d=[0.5], lam=[0.5], relators=100)
    assert relator_count(fixed, 2, 3, 0.5) == (44, True)


def test_cprime_phase_separation():
    cfg = _cfg(kind="group_cprime_sweep", m=[2], ell=[30], lam=[0.5], d=[0.1, 0.4], trials=50)
    summary = run_experiment(cfg)
    below, above = _cell(summary, beta_or_d=0.1), _cell(summary, beta_or_d=0.4)
    assert below.p_hat >= 0.8 and below.verdict == "pass"
    assert above.p_hat <= 0.2 and above.verdict == "pass"
    assert below.p_hat - above.p_hat >= 0.5
    assert below.extras["cross_only_rate"] >= below.p_hat
    assert sweep_monotone(summary)


def test_trivialization_above_half():
    cfg = _cfg(kind="trivialization_sweep", m=[2], ell=[16], d=[0.6], trials=50)
    cell = run_experiment(cfg).cells[0]
    assert cell.p_hat >= 0.9
    assert set(cell.extras["witness_fraction"]) == {"a", "b"}
    assert min(cell.extras["witness_fraction"].values()) >= cell.p_hat


# ------------------------------------------------------------------
# Salidas
# ------------------------------------------------------------------

def test_same_seed_byte_identical_outputs(tmp_path):
    cfg = _cfg(kind="intersection", n=[2000], alpha=[0.7, 0.3], beta=[0.6], trials=30)
    first, second = run_experiment(cfg), run_experiment(cfg)
    assert results_csv(first) == results_csv(second)
    assert trials_csv(first) == trials_csv(second)
    paths_a = write_outputs(first, tmp_path / "a")
    paths_b = write_outputs(second, tmp_path / "b")
    for key in ("results", "summary", "trials"):
        assert paths_a[key].read_bytes() == paths_b[key].read_bytes()
    other = run_experiment(cfg.model_copy(update={"master_seed": SEED + 1}))
    assert trials_csv(other) != trials_csv(first)


def test_results_frame_schema():
    summary = run_experiment(_cfg(kind="bernoulli_empty", n=[1000, 100], d=[0.0], trials=20))
    df = summary_to_frame(summary)
    assert list(df.columns) == CSV_COLUMNS
    assert list(df["n_or_ell"]) == [100, 1000]
    assert df["m"].isna().all()
    assert not extras_to_frame(summary).empty
    header = results_csv(summary).splitlines()[0]
    assert header.split(",") == CSV_COLUMNS


def test_build_and_run_from_file(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"kind": "bernoulli_empty", "n": [1000], "d": [0.0, 0.5], "trials": 20}),
                      encoding="utf-8")
    summary = build_and_run(path=config, out_dir=tmp_path / "out")
    assert (tmp_path / "out" / "results.csv").exists()
    assert len(summary.cells) == 2
    with pytest.raises(ConfigError):
        build_and_run()
    with pytest.raises(ConfigError):
        build_and_run(path=config, cfg=summary.config)


def test_verdict_colouring():
    legend = verdict_legend()
    for verdict, color in VERDICT_COLORS.items():
        assert f"verdict-{verdict}" in legend
        assert color in verdict_style(verdict)
    assert verdict_style("desconocido") == ""
    summary = run_experiment(ExperimentConfig(kind="bernoulli_empty", n=[50], d=[0.0], trials=20, master_seed=3))
    html = style_results(summary_to_frame(summary)).to_html()
    assert "veredicto" in html
