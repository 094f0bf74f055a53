import pytest

from synthlib.dsl import (
    AttributeKind,
    FunctionId,
    LambdaId,
    NUM_ATTRIBUTES,
    Step,
    attribute_names,
    catalog,
    steps,
)


def test_catalog_size():
    assert NUM_ATTRIBUTES == 34
    assert len(catalog()) == 34
    assert [entry.index for entry in catalog()] == list(range(34))


def test_catalog_order():
    kinds = [entry.kind for entry in catalog()]
    assert kinds[:10] == [AttributeKind.FIRST_ORDER] * 10
    assert kinds[10:15] == [AttributeKind.HIGHER_ORDER] * 5
    assert kinds[15:] == [AttributeKind.LAMBDA] * 19
    names = attribute_names()
    assert names[0] == "HEAD"
    assert names[10] == "MAP"
    assert names[15] == "(+1)"
    assert names[-1] == "MAX"


def test_catalog_signatures():
    signatures = {entry.name: entry.signature for entry in catalog()}
    assert signatures["TAKE"] == "int->[int]->[int]"
    assert signatures["MAP"] == "(int->int)->[int]->[int]"
    assert signatures["ZIPWITH"] == "(int->int->int)->[int]->[int]->[int]"
    assert signatures["(%2==0)"] == "int->bool"


def test_steps():
    all_steps = steps()
    assert len(all_steps) == 38
    assert len(set(all_steps)) == 38
    assert all_steps[0] == Step(FunctionId.HEAD)
    assert Step(FunctionId.MAP, LambdaId.TIMES_FOUR) in all_steps
    assert Step(FunctionId.MAP, LambdaId.POSITIVE) not in all_steps
    assert all(step.lambda_id is None for step in all_steps[:10])


@pytest.mark.parametrize(
    "step,indices",
    [
        (Step(FunctionId.SORT), (8,)),
        (Step(FunctionId.FILTER, LambdaId.NEGATIVE), (11, 26)),
        (Step(FunctionId.SCANL1, LambdaId.MAX), (14, 33)),
    ],
)
def test_step_attribute_indices(step, indices):
    assert step.attribute_indices == indices
