import pytest

from synthlib.dsl import FunctionId, LambdaId, TypeTag
from synthlib.interpreter import SignatureError, apply, to_json, to_value, value_type

F, L = FunctionId, LambdaId


@pytest.mark.parametrize(
    "function,lambda_id,args,expected",
    [
        (F.HEAD, None, [(3, 1, 2)], 3),
        (F.HEAD, None, [()], None),
        (F.LAST, None, [(3, 1, 2)], 2),
        (F.LAST, None, [()], None),
        (F.TAKE, None, [2, (5, 6, 7)], (5, 6)),
        (F.TAKE, None, [9, (5, 6, 7)], (5, 6, 7)),
        (F.TAKE, None, [-1, (5, 6, 7)], ()),
        (F.DROP, None, [2, (5, 6, 7)], (7,)),
        (F.DROP, None, [-1, (5, 6, 7)], (5, 6, 7)),
        (F.ACCESS, None, [1, (5, 6, 7)], 6),
        (F.ACCESS, None, [3, (5, 6, 7)], None),
        (F.ACCESS, None, [-1, (5, 6, 7)], None),
        (F.MINIMUM, None, [(4, -2, 9)], -2),
        (F.MINIMUM, None, [()], None),
        (F.MAXIMUM, None, [(4, -2, 9)], 9),
        (F.REVERSE, None, [(1, 2, 3)], (3, 2, 1)),
        (F.SORT, None, [(3, -1, 2)], (-1, 2, 3)),
        (F.SUM, None, [(3, -1, 2)], 4),
        (F.SUM, None, [()], 0),
        (F.MAP, L.DIV_TWO, [(-3, 3)], (-2, 1)),
        (F.MAP, L.DIV_THREE, [(-4, 4)], (-2, 1)),
        (F.MAP, L.NEGATE, [(-3, 3)], (3, -3)),
        (F.MAP, L.SQUARE, [(-3, 2)], (9, 4)),
        (F.FILTER, L.ODD, [(-3, -2, 1, 4)], (-3, 1)),
        (F.FILTER, L.POSITIVE, [(0, -1, 2)], (2,)),
        (F.COUNT, L.EVEN, [(0, 1, 2, 3)], 2),
        (F.ZIPWITH, L.SUBTRACT, [(5, 6, 7), (1, 1)], (4, 5)),
        (F.ZIPWITH, L.MIN, [(5, 0), (1, 9)], (1, 0)),
        (F.ZIPWITH, L.MULTIPLY, [(1, 2, 3), (4, 5)], (4, 10)),
        (F.SCANL1, L.ADD, [(1, 2, 3)], (1, 3, 6)),
        (F.SCANL1, L.SUBTRACT, [(1, 2, 3)], (1, -1, -4)),
        (F.SCANL1, L.MIN, [(8, 5, 7, 2, 5)], (8, 5, 5, 2, 2)),
        (F.SCANL1, L.MAX, [()], ()),
    ],
)
def test_apply(function, lambda_id, args, expected):
    assert apply(function, lambda_id, args) == expected


@pytest.mark.parametrize(
    "function,lambda_id,args",
    [
        (F.SORT, None, [None]),
        (F.TAKE, None, [None, (1, 2)]),
        (F.MAP, L.PLUS_ONE, [None]),
        (F.ZIPWITH, L.ADD, [(1,), None]),
    ],
)
def test_null_propagates(function, lambda_id, args):
    assert apply(function, lambda_id, args) is None


@pytest.mark.parametrize(
    "function,lambda_id,args",
    [
        (F.SORT, None, [3]),
        (F.SORT, None, [(1,), (2,)]),
        (F.MAP, None, [(1,)]),
        (F.SORT, L.PLUS_ONE, [(1,)]),
        (F.FILTER, L.ADD, [(1,)]),
        (F.TAKE, None, [(1,), (2,)]),
    ],
)
def test_signature_errors(function, lambda_id, args):
    with pytest.raises(SignatureError):
        apply(function, lambda_id, args)


def test_value_conversion():
    assert to_value([1, -2]) == (1, -2)
    assert to_value(5) == 5
    assert to_value(None) is None
    assert to_json((1, -2)) == [1, -2]
    assert value_type((1,)) == TypeTag.LIST
    assert value_type(0) == TypeTag.INT
    assert value_type(None) is None
    with pytest.raises(SignatureError):
        value_type(True)
