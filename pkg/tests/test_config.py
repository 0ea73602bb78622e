import argparse

import pytest

from polyanti.config import ConfigManager, SearchLimits
from polyanti.utils import ValidationError


class TestSearchLimits:
    def test_defaults(self):
        limits = SearchLimits()
        assert limits.chain_cap == 10_000
        assert limits.workers == 1
        assert limits.seed == 0

    @pytest.mark.parametrize("field, value", [("chain_cap", 0), ("workers", -1), ("seed", -1), ("node_cap", True)])
    def test_rejects_bad_values(self, field, value):
        with pytest.raises(ValidationError):
            SearchLimits(**{field: value})

    def test_from_args_keeps_defaults_for_none(self):
        args = argparse.Namespace(chain_cap=5, seed=None, workers=2)
        limits = SearchLimits.from_args(args)
        assert limits == SearchLimits(chain_cap=5, workers=2)

    def test_staircase_kwargs(self):
        kwargs = SearchLimits(max_sequence_length=3).staircase_kwargs()
        assert kwargs["max_length"] == 3
        assert set(kwargs) == {"maximal_cuboid_cap", "cuboid_cap", "max_length", "node_cap"}


class TestConfigManager:
    def test_json_round_trip(self, tmp_path):
        path = str(tmp_path / "cfg" / "limits.json")
        ConfigManager.save_config(SearchLimits(subset_cap=99), path)
        config = ConfigManager.load_config(path)
        assert config["subset_cap"] == 99
        assert SearchLimits(**config) == SearchLimits(subset_cap=99)

    def test_yaml_round_trip(self, tmp_path):
        pytest.importorskip("yaml")
        path = str(tmp_path / "limits.yaml")
        ConfigManager.save_config(SearchLimits(seed=12), path)
        assert ConfigManager.load_config(path)["seed"] == 12

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            ConfigManager.load_config(str(tmp_path / "none.json"))

    def test_command_line_wins(self):
        args = argparse.Namespace(chain_cap=3, node_cap=None)
        ConfigManager.apply_config_to_args(args, {"chain_cap": 50, "node_cap": 60, "colour": "red"})
        assert args.chain_cap == 3
        assert args.node_cap == 60
        assert not hasattr(args, "colour")

    def test_validate(self):
        result = ConfigManager.validate_config({"chain_cap": 0, "seed": -2, "colour": "red"})
        assert not result["valid"]
        assert len(result["errors"]) == 2
        assert result["warnings"] == ["Unknown field ignored: colour"]

    def test_validate_non_mapping(self):
        assert not ConfigManager.validate_config(["chain_cap"])["valid"]

    def test_too_many_workers_warns(self):
        result = ConfigManager.validate_config({"workers": 100_000})
        assert result["valid"]
        assert result["warnings"]
