import pytest
from synthlib.config.custom_check import CustomCheck, CustomCheckError


class TestCustomCheck:
    def test_init(self):
        custom_check = CustomCheck(type='exists')
        assert custom_check.type == 'exists'
        with pytest.raises(CustomCheckError):
            _ = CustomCheck(type='unknown_type')

    def test_exists(self):
        custom_check = CustomCheck(type='exists')
        assert custom_check.run(0) is None
        for empty in ['', [], None]:
            with pytest.raises(CustomCheckError):
                custom_check.run(empty)

    def test_in(self):
        custom_check = CustomCheck(type='in', op=["dfs", "saa", "prior-dfs", "prior-saa"])
        assert custom_check.run("saa") is None
        with pytest.raises(CustomCheckError):
            custom_check.run("beam")

    def test_sup(self):
        custom_check = CustomCheck(type='sup', op=0)
        assert custom_check.run(1) is None
        with pytest.raises(CustomCheckError):
            custom_check.run(0)

    def test_sup_eq(self):
        custom_check = CustomCheck(type='sup_eq', op=0)
        assert custom_check.run(0) is None
        with pytest.raises(CustomCheckError):
            custom_check.run(-1)

    def test_inf_eq(self):
        custom_check = CustomCheck(type='inf_eq', op=5)
        assert custom_check.run(5) is None
        with pytest.raises(CustomCheckError):
            custom_check.run(6)

    def test_between(self):
        custom_check = CustomCheck(type='between', op=(1, 20))
        assert custom_check.run(1) is None
        assert custom_check.run(20) is None
        with pytest.raises(CustomCheckError) as err:
            custom_check.run(21)
        assert 'between 1 and 20' in str(err.value)

    def test_finite(self):
        custom_check = CustomCheck(type='finite')
        assert custom_check.run(1e-3) is None
        for value in [float("nan"), float("inf")]:
            with pytest.raises(CustomCheckError):
                custom_check.run(value)

    def test_is_type(self):
        custom_check = CustomCheck(type='is_type', op=int)
        assert custom_check.run(3) is None
        with pytest.raises(CustomCheckError) as err:
            custom_check.run("3")
        assert str(err.value) == 'Should be of type int (Currently str).'

    def test_is_castable(self):
        custom_check = CustomCheck(type='is_castable', op=int)
        assert custom_check.run("3") is None
        with pytest.raises(CustomCheckError):
            custom_check.run("three")

    def test_is_subset(self):
        custom_check = CustomCheck(type='is_subset', op=["dfs", "saa"])
        assert custom_check.run(["saa"]) is None
        with pytest.raises(CustomCheckError):
            custom_check.run(["saa", "beam"])

    def test_path_exists(self, tmp_path):
        custom_check = CustomCheck(type='path_exists')
        assert custom_check.run(tmp_path) is None
        with pytest.raises(CustomCheckError) as err:
            custom_check.run(tmp_path / "missing.jsonl")
        assert 'does not exist' in str(err.value)

    def test_custom(self):
        assert CustomCheck(type='custom', op=True).run() is None
        with pytest.raises(CustomCheckError) as err:
            CustomCheck(type='custom', op=False, err_msg='Model-guided strategies need a model').run()
        assert str(err.value) == 'Model-guided strategies need a model'

    def test_parent_exists(self, tmp_path):
        custom_check = CustomCheck(type='parent_exists')
        assert custom_check.run(tmp_path / "model.weights") is None
        with pytest.raises(CustomCheckError) as err:
            custom_check.run(tmp_path / "missing" / "model.weights")
        assert 'missing' in str(err.value)

    def test_castable_message(self):
        with pytest.raises(CustomCheckError) as err:
            CustomCheck(type='is_castable', op=float).run("fast")
        assert str(err.value) == "Should be castable to float (Currently 'fast' of type str)."
