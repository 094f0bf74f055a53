# -*- coding: utf-8 -*-
# This is a test file intended to be used with pytest
# pytest automatically runs all the function starting with "test_"
# see https://docs.pytest.org for more information

import pytest

from synthlib.dsl import parse_program
from synthlib.interpreter import (
    Example,
    ExampleSet,
    InputSignatureError,
    PrefixCache,
    PrefixCacheMiss,
    check_inputs,
    consistent,
    evaluate,
    run_program,
    run_with_cache,
)


# ==============================================================================
# CONSTANT DEFINITION
# ==============================================================================

FILTER_MAP_SORT_REVERSE = parse_program("a <- [int]\nb <- FILTER (<0) a\nc <- MAP (*4) b\nd <- SORT c\ne <- REVERSE d")
NEGATIVES_INPUT = (-17, -3, 4, 11, 0, -5, -9, 13, 6, 6, -8, 11)
NEGATIVES_OUTPUT = (-12, -20, -32, -36, -68)

NEGATIVES_EXAMPLES = ExampleSet(
    [
        Example((NEGATIVES_INPUT,), NEGATIVES_OUTPUT),
        Example(((-3, 5, -7, 2),), (-12, -28)),
        Example(((1, 2, 3),), ()),
    ]
)


# ==============================================================================
# TESTS
# ==============================================================================


def test_run_program():
    assert run_program(FILTER_MAP_SORT_REVERSE, [NEGATIVES_INPUT]) == NEGATIVES_OUTPUT


def test_evaluate_exposes_every_variable():
    environment = evaluate(FILTER_MAP_SORT_REVERSE, [(-1, 2, -3)])
    assert environment == ((-1, 2, -3), (-1, -3), (-4, -12), (-12, -4), (-4, -12))


def test_literal_arguments():
    program = parse_program("a <- [int]\nb <- DROP 2 a\nc <- ACCESS 0 b")
    assert run_program(program, [(7, 8, 9)]) == 9
    assert run_program(program, [(7, 8)]) is None


def test_int_input():
    program = parse_program("a <- int\nb <- [int]\nc <- SORT b\nd <- TAKE a c\ne <- SUM d")
    assert run_program(program, [2, (5, -1, 3)]) == 2


@pytest.mark.parametrize(
    "text, inputs, output",
    [
        ("k <- int\nb <- [int]\nc <- SORT b\nd <- TAKE k c\ne <- SUM d", [2, (3, 5, 4, 7, 5)], 7),
        ("w <- [int]\nt <- [int]\nc <- MAP (*3) w\nd <- ZIPWITH (+) c t\ne <- MAXIMUM d",
         [(6, 2, 4, 7, 9), (5, 3, 6, 1, 0)], 27),
        # argument order of the subtraction matches the other listings, where (-) takes first minus second
        ("a <- [int]\nb <- [int]\nc <- ZIPWITH (-) a b\nd <- COUNT (>0) c", [(6, 2, 4, 7, 9), (5, 3, 2, 1, 0)], 4),
        ("h <- [int]\nb <- SCANL1 MIN h\nc <- ZIPWITH (-) h b\nd <- FILTER (>0) c\ne <- SUM d", [(8, 5, 7, 2, 5)], 5),
        ("a <- [int]\nb <- REVERSE a\nc <- ZIPWITH MIN a b", [(3, 7, 5, 2, 8)], (3, 2, 5, 2, 3)),
        ("t <- [int]\np <- [int]\nc <- MAP (-1) t\nd <- MAP (-1) p\ne <- ZIPWITH (+) c d\nf <- MINIMUM e",
         [(4, 8, 11, 2), (2, 3, 4, 1)], 1),
        ("s <- [int]\np <- [int]\nc <- SCANL1 (+) p\nd <- ZIPWITH (*) s c\ne <- SUM d", [(4, 7, 2, 3), (2, 1, 3, 1)], 62),
        ("s <- [int]\nb <- REVERSE s\nc <- ZIPWITH (-) b s\nd <- FILTER (>0) c\ne <- SUM d", [(1, 2, 4, 5, 7)], 9),
    ],
)
def test_example_programs(text, inputs, output):
    assert run_program(parse_program(text), inputs) == output


def test_consistent():
    assert consistent(FILTER_MAP_SORT_REVERSE, NEGATIVES_EXAMPLES)
    assert not consistent(parse_program("a <- [int]\nb <- SORT a"), NEGATIVES_EXAMPLES)


def test_null_output_never_matches():
    program = parse_program("a <- [int]\nb <- HEAD a")
    examples = ExampleSet([Example(((),), 0)])
    assert run_program(program, [()]) is None
    assert not consistent(program, examples)


@pytest.mark.parametrize("inputs", [[], [3], [None], [(1,), (2,)]])
def test_check_inputs(inputs):
    with pytest.raises(InputSignatureError):
        check_inputs(FILTER_MAP_SORT_REVERSE, inputs)


def test_consistent_signature_mismatch():
    examples = ExampleSet([Example((1, (2,)), 3)])
    with pytest.raises(InputSignatureError):
        consistent(FILTER_MAP_SORT_REVERSE, examples)


class TestExampleSet:
    def test_signature(self):
        assert [t.value for t in NEGATIVES_EXAMPLES.input_types] == ["[int]"]
        assert NEGATIVES_EXAMPLES.output_type.value == "[int]"
        assert NEGATIVES_EXAMPLES.outputs()[0] == NEGATIVES_OUTPUT

    def test_json_round_trip(self):
        assert ExampleSet.from_json(NEGATIVES_EXAMPLES.to_json()) == NEGATIVES_EXAMPLES

    @pytest.mark.parametrize(
        "examples",
        [
            [],
            [Example(((1,),), 2), Example((3,), 2)],
            [Example(((1,),), 2), Example(((1,),), (2,))],
            [Example(((1,),), None)],
            [Example(((1,), (1,), (1,), (1,)), 2)],
        ],
    )
    def test_invalid(self, examples):
        with pytest.raises(InputSignatureError):
            ExampleSet(examples)

    def test_within_bounds(self):
        assert NEGATIVES_EXAMPLES.within_bounds()
        assert not ExampleSet([Example(((300,),), 1)]).within_bounds()
        assert not ExampleSet([Example((tuple(range(21)),), 1)]).within_bounds()

    def test_permuted(self):
        permuted = NEGATIVES_EXAMPLES.permuted([2, 0, 1])
        assert permuted[0] == NEGATIVES_EXAMPLES[2]
        assert len(permuted) == 3


class TestPrefixCache:
    def test_matches_full_evaluation(self):
        cache = PrefixCache()
        key = cache.seed(NEGATIVES_EXAMPLES.inputs())
        for statement in FILTER_MAP_SORT_REVERSE.statements[1:]:
            values = run_with_cache(key, statement, cache)
            key = cache.extend(key, statement, values)
        expected = tuple(evaluate(FILTER_MAP_SORT_REVERSE, example.inputs) for example in NEGATIVES_EXAMPLES)
        assert cache.lookup(key) == expected
        assert cache.statements(key) == list(FILTER_MAP_SORT_REVERSE.statements[1:])

    def test_release(self):
        cache = PrefixCache()
        root = cache.seed(NEGATIVES_EXAMPLES.inputs())
        statement = FILTER_MAP_SORT_REVERSE.statements[1]
        child = cache.extend(root, statement, run_with_cache(root, statement, cache))
        assert child in cache
        assert len(cache) == 2
        cache.release(child)
        assert child not in cache
        with pytest.raises(PrefixCacheMiss):
            run_with_cache(child, FILTER_MAP_SORT_REVERSE.statements[2], cache)

    def test_unknown_key(self):
        with pytest.raises(PrefixCacheMiss):
            PrefixCache().lookup(0)
        assert isinstance(PrefixCacheMiss(0), KeyError)
