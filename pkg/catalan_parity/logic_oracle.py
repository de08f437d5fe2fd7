"""Brute-force census of bracketed implication chains.

Every full parenthesization of p1 -> p2 -> ... -> pn is enumerated and its
truth table counted, without using any of the sequence recurrences. Two
counting modes exist:

- ``truth_table`` evaluates each formula under all 2^n assignments;
- ``product`` uses falseRows(L -> R) = trueRows(L) * falseRows(R), which holds
  because L and R share no variables.

Trees are enumerated with root splits ascending and, within a split, the
right subtree varying fastest. That order is the canonical order for census
rows and for the fruits of the tree model.
"""
from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .seqcore import BigCount
from .utils import CensusMode, check_cap

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("n", "split_i", "tree_index", "false_rows", "true_rows")


@dataclass(frozen=True, eq=False)
class ImplTree:
    """A bracketing of an implication chain.

    Only the shape is stored: leaves are the chain variables in order, so the
    leaf at position k (counting from the left, 1-based) is p_k.
    """

    size: int
    left: Optional[ImplTree] = None
    right: Optional[ImplTree] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def split(self) -> int:
        """Variables left of the outermost implication; 0 for a leaf."""
        return 0 if self.left is None else self.left.size

    def formula(self, arrow: str = "→", first: int = 1) -> str:
        if self.left is None or self.right is None:
            return f"p{first}"
        left = self.left.formula(arrow, first)
        right = self.right.formula(arrow, first + self.left.size)
        if not self.left.is_leaf:
            left = f"({left})"
        if not self.right.is_leaf:
            right = f"({right})"
        return f"{left}{arrow}{right}"

    def __str__(self) -> str:
        return self.formula()


_LEAF = ImplTree(1)


@dataclass(frozen=True)
class TreeCount:
    tree: ImplTree
    false_rows: BigCount
    true_rows: BigCount


@dataclass(frozen=True)
class CensusTotals:
    f: BigCount
    t: BigCount
    g: BigCount


@dataclass(frozen=True)
class Census:
    """Per-tree counts grouped by root split i = 1..n-1.

    ``groups[i-1]`` holds the trees whose root splits after variable i.
    For n = 1 there are no groups and the single leaf is kept in ``leaf``.
    """

    n: int
    mode: CensusMode
    groups: Tuple[Tuple[TreeCount, ...], ...]
    totals: CensusTotals
    leaf: Optional[TreeCount] = field(default=None, repr=False)

    def group_sums(self) -> Tuple[BigCount, ...]:
        return tuple(sum(tc.false_rows for tc in group) for group in self.groups)

    def group_sizes(self) -> Tuple[int, ...]:
        return tuple(len(group) for group in self.groups)

    def rows(self) -> Iterator[Tuple[int, int, TreeCount]]:
        """(split_i, tree_index, count) in canonical order, index from 0."""
        if self.leaf is not None:
            yield 0, 0, self.leaf
            return
        index = 0
        for i, group in enumerate(self.groups, start=1):
            for tc in group:
                yield i, index, tc
                index += 1


@lru_cache(maxsize=None)
def _shapes(size: int) -> Tuple[ImplTree, ...]:
    if size == 1:
        return (_LEAF,)
    return tuple(
        ImplTree(size, left, right)
        for split in range(1, size)
        for left in _shapes(split)
        for right in _shapes(size - split)
    )


def enumerate_trees(
    n: int, mode: CensusMode = CensusMode.PRODUCT
) -> Iterator[ImplTree]:
    """All C_n bracketings of p1 -> ... -> pn, in canonical order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    check_cap(n, mode)
    return iter(_shapes(n))


@lru_cache(maxsize=8)
def _truth_columns(n: int) -> List[np.ndarray]:
    # p1 is the most significant bit of the row index
    rows = np.arange(1 << n, dtype=np.int64)
    return [((rows >> (n - k)) & 1).astype(bool) for k in range(1, n + 1)]


def _evaluate(tree: ImplTree, columns: List[np.ndarray], first: int) -> np.ndarray:
    if tree.left is None or tree.right is None:
        return columns[first - 1]
    antecedent = _evaluate(tree.left, columns, first)
    consequent = _evaluate(tree.right, columns, first + tree.left.size)
    return ~antecedent | consequent


def truth_table_counts(tree: ImplTree) -> TreeCount:
    """Count false and true rows by evaluating all 2^n assignments."""
    check_cap(tree.size, CensusMode.TRUTH_TABLE)
    column = _evaluate(tree, _truth_columns(tree.size), 1)
    true_rows = int(np.count_nonzero(column))
    return TreeCount(tree, (1 << tree.size) - true_rows, true_rows)


def _false_rows(tree: ImplTree) -> int:
    if tree.left is None or tree.right is None:
        return 1
    left_true = (1 << tree.left.size) - _false_rows(tree.left)
    return left_true * _false_rows(tree.right)


def product_counts(tree: ImplTree) -> TreeCount:
    """Count rows with the product rule; no assignment is enumerated."""
    false_rows = _false_rows(tree)
    return TreeCount(tree, false_rows, (1 << tree.size) - false_rows)


@lru_cache(maxsize=None)
def _counted(size: int) -> Tuple[TreeCount, ...]:
    """Product-rule counts for every shape of ``size``, canonical order.

    Built bottom-up so each subtree count is computed once.
    """
    if size == 1:
        return (TreeCount(_LEAF, 1, 1),)
    rows = 1 << size
    out = []
    for split in range(1, size):
        for left in _counted(split):
            for right in _counted(size - split):
                false_rows = left.true_rows * right.false_rows
                tree = ImplTree(size, left.tree, right.tree)
                out.append(TreeCount(tree, false_rows, rows - false_rows))
    return tuple(out)


def census(n: int, mode: Union[CensusMode, str] = CensusMode.PRODUCT) -> Census:
    """Per-tree, per-split counts with totals f, t and g = 2^n C_n."""
    mode = CensusMode(mode)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    check_cap(n, mode)
    if mode is CensusMode.PRODUCT:
        counts = _counted(n)
    else:
        counts = tuple(truth_table_counts(tree) for tree in _shapes(n))
    logger.debug("census n=%d mode=%s: %d trees", n, mode.value, len(counts))
    return aggregate(n, mode, counts)


def aggregate(n: int, mode: CensusMode, counts: Sequence[TreeCount]) -> Census:
    """Group per-tree counts by root split and total them.

    Trees keep their input order within a group.
    """
    if len(counts) == 0:
        raise ValueError("no tree counts to aggregate")
    if any(tc.tree.size != n for tc in counts):
        raise ValueError(f"every tree must have {n} variables")
    f = sum(tc.false_rows for tc in counts)
    t = sum(tc.true_rows for tc in counts)
    totals = CensusTotals(f=f, t=t, g=f + t)
    if n == 1:
        return Census(n, mode, (), totals, leaf=counts[0])
    grouped: Dict[int, List[TreeCount]] = {i: [] for i in range(1, n)}
    for tc in counts:
        grouped[tc.tree.split].append(tc)
    groups = tuple(tuple(grouped[i]) for i in range(1, n))
    return Census(n, mode, groups, totals)


def census_to_csv(result: Census) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for split, index, tc in result.rows():
        writer.writerow((result.n, split, index, tc.false_rows, tc.true_rows))
    return buffer.getvalue()


def census_to_dict(result: Census) -> Dict[str, Any]:
    """JSON-ready mirror of the census; counts are decimal strings."""
    groups = []
    trees_by_split: Dict[int, List[Dict[str, Any]]] = {}
    for split, index, tc in result.rows():
        trees_by_split.setdefault(split, []).append(
            {
                "tree_index": index,
                "formula": tc.tree.formula(),
                "false_rows": str(tc.false_rows),
                "true_rows": str(tc.true_rows),
            }
        )
    for split, trees in trees_by_split.items():
        groups.append({"split_i": split, "trees": trees})
    return {
        "n": result.n,
        "mode": result.mode.value,
        "groups": groups,
        "totals": {
            "f": str(result.totals.f),
            "t": str(result.totals.t),
            "g": str(result.totals.g),
        },
    }


def census_to_json(result: Census) -> str:
    return json.dumps(census_to_dict(result), indent=2, ensure_ascii=False) + "\n"
