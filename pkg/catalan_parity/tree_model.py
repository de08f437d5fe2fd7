"""Catalan trees and fruitful trees as explicit graph objects.

The n-th Catalan tree A_n has one root, n - 1 main branches and C_n
sub-branches; main branch i carries C_i C_{n-i} of them. A fruitful tree
hangs one fruit value on every sub-branch. Sub-branches are identified with
the bracketings of the oracle (main branch i holds the trees whose root splits
after variable i), so fruit order follows the oracle's canonical enumeration.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .logic_oracle import Census, census
from .seqcore import BigCount, SeqEngine, default_engine
from .utils import CensusMode, FruitKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalanTreeShape:
    n: int
    main_branches: int
    sub_branch_group_sizes: Tuple[int, ...]

    @property
    def sub_branches(self) -> int:
        return sum(self.sub_branch_group_sizes)


@dataclass(frozen=True)
class FruitfulTree:
    shape: CatalanTreeShape
    fruit_kind: FruitKind
    fruit_groups: Tuple[Tuple[BigCount, ...], ...]
    # bracketing of each sub-branch, same layout as fruit_groups; empty if
    # the fruits did not come from the oracle
    labels: Tuple[Tuple[str, ...], ...] = ()

    def group_sums(self) -> Tuple[BigCount, ...]:
        return tuple(sum(group) for group in self.fruit_groups)

    @property
    def total_fruit(self) -> BigCount:
        return sum(self.group_sums())


TreeLike = Union[CatalanTreeShape, FruitfulTree]


def _shape_of(tree: TreeLike) -> CatalanTreeShape:
    return tree.shape if isinstance(tree, FruitfulTree) else tree


def build_shape(n: int, engine: Optional[SeqEngine] = None) -> CatalanTreeShape:
    """Shape of A_n; A_1 is a bare root."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    engine = engine or default_engine()
    sizes = tuple(engine.catalan(i) * engine.catalan(n - i) for i in range(1, n))
    return CatalanTreeShape(n=n, main_branches=n - 1, sub_branch_group_sizes=sizes)


def component_count(tree: TreeLike) -> BigCount:
    """Root, main branches and sub-branches: a_n = C_n + n for n > 1."""
    shape = _shape_of(tree)
    return 1 + shape.main_branches + shape.sub_branches


def fruitful_component_count(tree: FruitfulTree) -> BigCount:
    """Shape components plus every fruit, i.e. a_n(mu_n) for n > 1."""
    return component_count(tree) + tree.total_fruit


def decorate(
    shape: CatalanTreeShape,
    kind: Union[FruitKind, str],
    oracle: Optional[Census] = None,
) -> FruitfulTree:
    """Hang f or t fruits on the sub-branches of ``shape``.

    The f fruit of a sub-branch is the false-row count of its bracketing; the
    t fruit is 2^n minus that. Counts come from a product-mode census unless
    ``oracle`` is supplied.
    """
    kind = FruitKind(kind)
    if kind is FruitKind.CUSTOM:
        raise ValueError("custom fruits go through decorate_custom")
    if oracle is None:
        oracle = census(shape.n, CensusMode.PRODUCT)
    elif oracle.n != shape.n:
        raise ValueError(f"census is for n={oracle.n}, shape is for n={shape.n}")
    rows = 1 << shape.n
    groups = []
    labels = []
    for group in oracle.groups:
        if kind is FruitKind.F:
            groups.append(tuple(tc.false_rows for tc in group))
        else:
            groups.append(tuple(rows - tc.false_rows for tc in group))
        labels.append(tuple(tc.tree.formula() for tc in group))
    logger.debug("decorated A_%d with %s fruits", shape.n, kind.value)
    return FruitfulTree(shape, kind, tuple(groups), tuple(labels))


def decorate_custom(
    shape: CatalanTreeShape, fruit_groups: Sequence[Sequence[int]]
) -> FruitfulTree:
    """Attach caller-supplied fruit values, one group per main branch."""
    if len(fruit_groups) != shape.main_branches:
        raise ValueError(
            f"expected {shape.main_branches} fruit groups, got {len(fruit_groups)}"
        )
    for i, (group, size) in enumerate(
        zip(fruit_groups, shape.sub_branch_group_sizes), start=1
    ):
        if len(group) != size:
            raise ValueError(
                f"fruit group {i} needs {size} values, got {len(group)}"
            )
        if any(value < 0 for value in group):
            raise ValueError(f"fruit group {i} has a negative value")
    groups = tuple(tuple(int(v) for v in group) for group in fruit_groups)
    return FruitfulTree(shape, FruitKind.CUSTOM, groups)


def _tuple_text(values: Sequence[object], sep: str = ",") -> str:
    return "(" + sep.join(str(v) for v in values) + ")"


def symbolic_repr(tree: TreeLike) -> str:
    """Row notation: fruits, sub-branch partition, main branches, root."""
    shape = _shape_of(tree)
    lines: List[str] = []
    if isinstance(tree, FruitfulTree) and tree.fruit_groups:
        lines.append(
            _tuple_text([_tuple_text(g) for g in tree.fruit_groups], sep=", ")
        )
    if shape.n > 1:
        lines.append(_tuple_text(shape.sub_branch_group_sizes))
        lines.append(_tuple_text([1] * shape.main_branches))
    lines.append("(1)")
    return "\n".join(lines) + "\n"


def symbolic_template(kind: Optional[Union[FruitKind, str]] = None) -> str:
    """General-n row notation for A_n, A_n(f_n) or A_n(t_n).

    The penultimate f term is written with f_2; reading it as C_2 would break
    the symmetry every other term has.
    """
    lines = []
    if kind is not None:
        kind = FruitKind(kind)
        f_terms = [
            "(2^1C_1-f_1)f_{n-1}",
            "(2^2C_2-f_2)f_{n-2}",
            "...",
            "(2^{n-2}C_{n-2}-f_{n-2})f_2",
            "(2^{n-1}C_{n-1}-f_{n-1})f_1",
        ]
        if kind is FruitKind.F:
            lines.append(_tuple_text(f_terms, sep=", "))
        elif kind is FruitKind.T:
            t_terms = [t if t == "..." else f"2^n-{t}" for t in f_terms]
            lines.append(_tuple_text(t_terms, sep=", "))
        else:
            raise ValueError("custom fruits have no general template")
    lines.append("(C_1C_{n-1}, C_2C_{n-2}, ..., C_{n-2}C_2, C_{n-1}C_1)")
    lines.append("(1, 1, ..., 1, 1)")
    lines.append("(1)")
    return "\n".join(lines) + "\n"


def _dot_label(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(tree: TreeLike) -> str:
    """Graphviz description with fixed node names.

    Nodes are ``root``, ``m<i>`` for main branches, ``s<i>_<j>`` for
    sub-branches and ``fruit<i>_<j>`` for fruits (box-shaped, labelled with the
    fruit value).
    """
    fruits = tree if isinstance(tree, FruitfulTree) else None
    shape = _shape_of(tree)
    name = f"A_{shape.n}"
    if fruits is not None:
        name += f"_{fruits.fruit_kind.value}"
    lines = [f"digraph {name} {{", "  node [shape=circle];", '  root [label="1"];']
    for i, size in enumerate(shape.sub_branch_group_sizes, start=1):
        lines.append(f'  m{i} [label="{i}"];')
        lines.append(f"  root -> m{i};")
        for j in range(1, size + 1):
            if fruits is not None and fruits.labels:
                label = _dot_label(fruits.labels[i - 1][j - 1])
                lines.append(f"  s{i}_{j} [shape=point, xlabel={label}];")
            else:
                lines.append(f"  s{i}_{j} [shape=point];")
            lines.append(f"  m{i} -> s{i}_{j};")
            if fruits is not None:
                value = fruits.fruit_groups[i - 1][j - 1]
                lines.append(f'  fruit{i}_{j} [shape=box, label="{value}"];')
                lines.append(f"  s{i}_{j} -> fruit{i}_{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
