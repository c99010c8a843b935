"""
Tests de los cargadores de archivos y de la línea de comandos.
"""

import sys, pathlib
import json
import os
import logging

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]   # carpeta del proyecto
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))

from app.cli import main
from domain.errors import ConfigError
from domain.experiments.config import ExperimentConfig
from domain.groups.models import RelatorSet
from domain.multidim import StarTupleSet
from infrastructure.loaders import (
    clear_cache, config_from_dict, detect_load, get_config, get_presentation, load_config, load_tuple_set,
    parse_presentation, read_json,
)

CONFIGS = ROOT / "data" / "configs"


# ------------------------------------------------------------------
# JSON y configuraciones
# ------------------------------------------------------------------

def test_read_json_errors(tmp_path):
    with pytest.raises(ConfigError):
        read_json(tmp_path / "no_existe.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{kind: 1", encoding="utf-8")
    with pytest.raises(ConfigError):
        read_json(bad)


def test_config_from_dict_wraps_validation():
    with pytest.raises(ConfigError):
        config_from_dict({"kind": "intersection", "n": [100]})
    cfg = config_from_dict({"kind": "bernoulli_empty", "n": [10], "d": [0.0]})
    assert cfg.kind == "bernoulli_empty"


@pytest.mark.parametrize("name", sorted(p.name for p in CONFIGS.glob("*.json")))
def test_shipped_configs_load(name):
    cfg = load_config(CONFIGS / name)
    assert isinstance(cfg, ExperimentConfig)
    assert cfg.trials > 0


def test_load_config_rejects_lists(tmp_path):
    path = tmp_path / "list.json"
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(path)


# ------------------------------------------------------------------
# Presentaciones
# ------------------------------------------------------------------

def test_parse_presentation_example():
    relators = parse_presentation((ROOT / "data" / "presentations" / "example.txt").read_text(encoding="utf-8"))
    assert relators.m == 2
    assert [str(w) for w in relators.relators] == ["abab", "aab", "abb"]


@pytest.mark.parametrize("text", [
    "",
    "# solo comentarios\n",
    "rango 2\nab\n",
    "rank\nab\n",
    "rank x\nab\n",
    "rank 2\nabc\n",
    "rank 2\naA\n",
    "rank 2\nab\nab\n",
    "rank 2\nb\nabA\n",
])
def test_parse_presentation_errors(text):
    with pytest.raises(ConfigError):
        parse_presentation(text)


def test_parse_presentation_cyclic_reduction_warns(caplog):
    with caplog.at_level(logging.WARNING, logger="infrastructure.loaders"):
        relators = parse_presentation("rank 2\nabA\n")
    assert str(relators.relators[0]) == "b"
    assert "cíclicamente" in caplog.text


# ------------------------------------------------------------------
# Detección por firma
# ------------------------------------------------------------------

def test_detect_load_by_signature(tmp_path):
    assert isinstance(detect_load(CONFIGS / "intersection.json"), ExperimentConfig)
    assert isinstance(detect_load(ROOT / "data" / "presentations" / "example.txt"), RelatorSet)
    tuples = tmp_path / "star.json"
    tuples.write_text(json.dumps({"family": "star", "n": 10}), encoding="utf-8")
    assert isinstance(detect_load(tuples), StarTupleSet)
    other = tmp_path / "other.json"
    other.write_text(json.dumps({"foo": 1}), encoding="utf-8")
    with pytest.raises(ConfigError):
        detect_load(other)
    with pytest.raises(ConfigError):
        detect_load(tmp_path / "missing.txt")


def test_load_tuple_set_needs_universe():
    with pytest.raises(ConfigError):
        load_tuple_set(ROOT / "data" / "tuple_sets" / "star.json")
    x = load_tuple_set(ROOT / "data" / "tuple_sets" / "star.json", n=20)
    assert x.cardinality == 19


def test_cached_config(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"kind": "bernoulli_empty", "n": [10], "d": [0.0]}), encoding="utf-8")
    clear_cache()
    first = get_config(path)
    assert get_config(path) is first
    clear_cache()
    again = get_config(path)
    assert again is not first and again == first


# ------------------------------------------------------------------
# CLI
# ------------------------------------------------------------------

def test_cli_bernoulli_empty_writes_outputs(tmp_path, capsys):
    code = main(["bernoulli-empty", "--n", "1000", "--d", "0.0", "--trials", "10", "--seed", "1",
                 "--out", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "results.csv").exists()
    assert "Resultados" in capsys.readouterr().out


def test_cli_config_with_overrides(tmp_path):
    code = main(["group", "sweep", "--config", str(CONFIGS / "group_sweep.json"), "--ell", "10",
                 "--d", "0.1", "--trials", "5", "--out", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "summary.json").exists()


def test_cli_config_errors_exit_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "intersection", "n": [100], "alpha": [0.5]}), encoding="utf-8")
    assert main(["intersect-sim", "--config", str(bad), "--out", str(tmp_path)]) == 2
    # el archivo es de otro tipo de experimento
    assert main(["intersect-sim", "--config", str(CONFIGS / "group_sweep.json"), "--out", str(tmp_path)]) == 2
    assert main(["intersect-sim", "--config", str(tmp_path / "missing.json")]) == 2


def test_cli_thresholds(capsys):
    assert main(["thresholds", "--m", "2", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [row["m"] for row in data] == [2, 3]
    assert data[0]["d_ao"] == pytest.approx(1.503e-3, rel=1e-3)
    assert main(["thresholds", "--m", "1"]) == 2


def test_cli_moments(capsys):
    assert main(["moments", "--n", "100", "--ka", "10", "--kb", "10"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["intersection_moments"]["mean"] == pytest.approx(1.0)


def test_cli_words_count(capsys):
    assert main(["words", "count", "--m", "2", "--ell", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [row["S_t"] for row in data["rows"]] == ["4", "12", "28"]
    assert [row["B_t"] for row in data["rows"]] == ["4", "16", "44"]
    assert data["sandwich_holds"]


def test_cli_words_enumerate_and_sample(capsys):
    assert main(["words", "enumerate", "--m", "2", "--t", "2", "--limit", "5"]) == 0
    assert len(capsys.readouterr().out.split()) == 5
    assert main(["words", "sample", "--m", "2", "--ell", "6", "--count", "4", "--seed", "3"]) == 0
    sampled = capsys.readouterr().out.split()
    assert len(set(sampled)) == 4


def test_cli_group_check(capsys):
    assert main(["group", "check", "--presentation", str(ROOT / "data" / "presentations" / "example.txt"),
                 "--lambda", "0.8"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["relators"] == 3
    # "aba" es subpalabra cíclica de abab y de aab: pieza de razón 1
    assert not report["c_prime"]["satisfied"]
    assert report["pieces"]["max_ratio"] == 1
    assert set(report["trivializing_pairs"]) == {"a", "b"}


def test_cli_invalid_tuple_set_exits_two(tmp_path):
    # la estrella sólo existe para k = 2
    assert main(["multidim-sim", "--n", "50", "--d", "0.5", "--k", "3", "--tuple-set", "star",
                 "--trials", "5", "--out", str(tmp_path)]) == 2
    outside = tmp_path / "outside.json"
    outside.write_text(json.dumps({"family": "explicit", "tuples": [[0, 99]]}), encoding="utf-8")
    assert main(["multidim-sim", "--n", "50", "--d", "0.5", "--tuple-set", str(outside),
                 "--trials", "5", "--out", str(tmp_path)]) == 2
    assert not (tmp_path / "results.csv").exists()


def test_cached_presentation_follows_file(tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("rank 2\nabab\n", encoding="utf-8")
    clear_cache()
    first = get_presentation(path)
    assert get_presentation(path) is first
    path.write_text("rank 2\nab\naab\n", encoding="utf-8")
    later = path.stat().st_mtime + 5
    os.utime(path, (later, later))
    changed = get_presentation(path)
    assert [str(r) for r in changed.relators] == ["ab", "aab"]
    with pytest.raises(ConfigError):
        get_presentation(tmp_path / "no_existe.txt")
