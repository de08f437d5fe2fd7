import re

import pytest

from catalan_parity.logic_oracle import census
from catalan_parity.seqcore import (
    a_total,
    catalan,
    fruitful_total,
    triangle_row,
    triangle_term,
)
from catalan_parity.tree_model import (
    build_shape,
    component_count,
    decorate,
    decorate_custom,
    fruitful_component_count,
    symbolic_repr,
    symbolic_template,
    to_dot,
)
from catalan_parity.utils import CensusMode, FruitKind, SeqKind

NODE_LINE = re.compile(r"^\s+(\w+) \[")


def _node_names(dot: str):
    return [
        m.group(1)
        for m in map(NODE_LINE.match, dot.splitlines())
        if m is not None and m.group(1) != "node"
    ]


def test_shapes():
    assert build_shape(4).sub_branch_group_sizes == (2, 1, 2)
    assert build_shape(5).sub_branch_group_sizes == (5, 2, 2, 5)
    shape = build_shape(5)
    assert shape.main_branches == 4
    assert shape.sub_branches == 14


def test_bare_root():
    shape = build_shape(1)
    assert shape.main_branches == 0
    assert component_count(shape) == 1
    assert symbolic_repr(shape) == "(1)\n"


def test_rejects_non_positive_n():
    with pytest.raises(ValueError):
        build_shape(0)


@pytest.mark.parametrize("n, expected", [(2, 3), (4, 9), (9, 1439), (10, 4872)])
def test_component_count(n, expected):
    assert component_count(build_shape(n)) == expected


@pytest.mark.parametrize("n", range(2, 40))
def test_component_count_matches_a(n):
    assert component_count(build_shape(n)) == a_total(n)


def test_symbolic_repr():
    shape = build_shape(4)
    assert symbolic_repr(shape) == "(2,1,2)\n(1,1,1)\n(1)\n"
    fruitful = decorate(shape, FruitKind.F)
    assert symbolic_repr(fruitful) == "((1,3), (3), (7,5))\n(2,1,2)\n(1,1,1)\n(1)\n"


def test_f_fruits_follow_census_order():
    tree = decorate(build_shape(5), "f")
    assert tree.fruit_groups == (
        (1, 3, 3, 7, 5),
        (3, 9),
        (7, 5),
        (15, 13, 13, 9, 11),
    )
    assert tree.group_sums() == (19, 12, 12, 61)
    assert tree.total_fruit == 104
    assert fruitful_component_count(tree) == 123


def test_t_fruits():
    tree = decorate(build_shape(5), FruitKind.T)
    assert tree.fruit_groups[0] == (31, 29, 29, 25, 27)
    assert tree.total_fruit == 344
    assert fruitful_component_count(tree) == 19 + 344


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("fruit", [FruitKind.F, FruitKind.T])
def test_fruitful_component_count_matches_sequence(n, fruit):
    tree = decorate(build_shape(n), fruit)
    assert fruitful_component_count(tree) == fruitful_total(n, SeqKind(fruit.value))


def test_decorate_with_supplied_census():
    oracle = census(4, CensusMode.TRUTH_TABLE)
    tree = decorate(build_shape(4), FruitKind.F, oracle=oracle)
    assert tree.labels[1] == ("(p1→p2)→(p3→p4)",)
    with pytest.raises(ValueError):
        decorate(build_shape(5), FruitKind.F, oracle=oracle)


def test_decorate_refuses_custom():
    with pytest.raises(ValueError):
        decorate(build_shape(3), FruitKind.CUSTOM)


def test_decorate_custom():
    tree = decorate_custom(build_shape(4), [[1, 1], [2], [0, 5]])
    assert tree.fruit_kind is FruitKind.CUSTOM
    assert tree.total_fruit == 9
    assert fruitful_component_count(tree) == 18
    assert tree.labels == ()


@pytest.mark.parametrize(
    "groups",
    [
        [[1, 1], [2]],
        [[1], [2], [0, 5]],
        [[1, 1], [-2], [0, 5]],
    ],
)
def test_decorate_custom_validation(groups):
    with pytest.raises(ValueError):
        decorate_custom(build_shape(4), groups)


def test_symbolic_template():
    plain = symbolic_template()
    assert plain.splitlines() == [
        "(C_1C_{n-1}, C_2C_{n-2}, ..., C_{n-2}C_2, C_{n-1}C_1)",
        "(1, 1, ..., 1, 1)",
        "(1)",
    ]
    f_lines = symbolic_template(FruitKind.F).splitlines()
    assert len(f_lines) == 4
    assert f_lines[0].startswith("((2^1C_1-f_1)f_{n-1}, ")
    assert "(2^{n-2}C_{n-2}-f_{n-2})f_2" in f_lines[0]
    t_lines = symbolic_template("t").splitlines()
    assert t_lines[0].startswith("(2^n-(2^1C_1-f_1)f_{n-1}, ")
    with pytest.raises(ValueError):
        symbolic_template(FruitKind.CUSTOM)


def test_dot_shape_nodes():
    dot = to_dot(build_shape(4))
    assert dot.startswith("digraph A_4 {\n")
    assert dot.endswith("}\n")
    names = _node_names(dot)
    assert len(names) == 9
    assert names[:2] == ["root", "m1"]
    assert "  root -> m3;" in dot.splitlines()


def test_dot_fruitful_tree():
    tree = decorate(build_shape(5), FruitKind.F)
    dot = to_dot(tree)
    assert dot.startswith("digraph A_5_f {\n")
    names = _node_names(dot)
    fruits = [name for name in names if name.startswith("fruit")]
    assert len(names) - len(fruits) == 19
    assert len(fruits) == 14
    labels = re.findall(r'fruit\d+_\d+ \[shape=box, label="(\d+)"\]', dot)
    assert sum(int(v) for v in labels) == 104
    assert len(names) - len(fruits) + sum(int(v) for v in labels) == 123
    assert 'xlabel="p1→(p2→(p3→(p4→p5)))"' in dot


def test_dot_is_deterministic():
    assert to_dot(decorate(build_shape(6), "t")) == to_dot(
        decorate(build_shape(6), "t")
    )


@pytest.mark.parametrize("n", range(2, 13))
def test_fruit_group_sums(n):
    shape = build_shape(n)
    f_tree = decorate(shape, FruitKind.F)
    t_tree = decorate(shape, FruitKind.T)
    assert f_tree.group_sums() == triangle_row(n).terms
    for i, t_sum in enumerate(t_tree.group_sums(), start=1):
        rows = (catalan(i) * catalan(n - i)) << n
        assert t_sum == rows - triangle_term(n, i)
    for f_group, t_group in zip(f_tree.fruit_groups, t_tree.fruit_groups):
        assert all(f + t == 2**n for f, t in zip(f_group, t_group))
    assert fruitful_component_count(f_tree) == fruitful_total(n, SeqKind.F)
    assert fruitful_component_count(t_tree) == fruitful_total(n, SeqKind.T)
