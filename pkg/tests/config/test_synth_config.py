import pytest
from synthlib.config import SynthConfig, SynthParameterError


class TestSynthConfig:
    def test_init(self):
        config = SynthConfig(env_vars={})
        assert len(config) == 0
        with pytest.raises(AttributeError):
            _ = config.abc
        with pytest.raises(KeyError):
            _ = config["abc"]

    def test_complex_init(self):
        config = SynthConfig(env_vars={}, length={"value": 3}, count={"value": 100, "cast_to": int})
        assert len(config) == 2
        assert config.length == 3
        assert config["count"] == 100
        with pytest.raises(AttributeError):
            _ = config.seed

    def test_init_needs_value_field(self):
        with pytest.raises(ValueError):
            _ = SynthConfig(env_vars={}, length={"default": 3})

    def test_simple_setter(self):
        config = SynthConfig(env_vars={}, length={"value": 3})
        config["seed"] = 7
        config.workers = 2
        assert len(config) == 3
        assert config.seed == 7
        assert config["workers"] == 2

    def test_param_setter(self):
        config = SynthConfig(env_vars={})
        config.add_param(name="length", value=2, required=True, checks=[{"type": "between", "op": (1, 5)}])
        assert config.get_param("length").value == 2
        with pytest.raises(SynthParameterError):
            config.add_param(name="count", value=None, required=True)
        with pytest.raises(SynthParameterError):
            config.add_param(name="length", value=9, checks=[{"type": "between", "op": (1, 5)}])

    def test_env_vars(self):
        config = SynthConfig(
            env_vars={"SYNTHLIB__SEED": "11", "SYNTHLIB__BUDGET_CANDIDATES": "5000", "SYNTHLIB__LENGTH": "4"}
        )
        config.add_param(name="seed", cast_to=int)
        config.add_param(name="budget_candidates", cast_to=int)
        config.add_param(name="length", value=2, cast_to=int)
        assert config.seed == 11
        assert config.budget_candidates == 5000
        assert config.length == 2

    def test_env_prefix(self):
        config = SynthConfig(env_vars={"BENCH_WORKERS": "3"}, env_prefix="BENCH_", workers={"value": None, "cast_to": int})
        assert config.workers == 3

    def test_iteration(self):
        config = SynthConfig(env_vars={}, length={"value": 3}, seed={"value": 0})
        assert list(config) == ["length", "seed"]
        assert dict(config) == {"length": 3, "seed": 0}
