from catalan_parity.logic_oracle import Census, ImplTree, TreeCount, census
from catalan_parity.parity import (
    Mod2Table,
    ParityVerdict,
    mod2_engine,
    verify_parity,
)
from catalan_parity.seqcore import (
    SeqEngine,
    TriangleRow,
    a_total,
    catalan,
    f_false,
    t_true,
)
from catalan_parity.series import Series, expand_A_closed_form
from catalan_parity.tree_model import CatalanTreeShape, FruitfulTree, build_shape
from catalan_parity.utils import CensusMode, FruitKind, Parity, SeqKind
from catalan_parity.verification import Suite, run_suite

__all__ = [
    "Census",
    "CatalanTreeShape",
    "CensusMode",
    "FruitKind",
    "FruitfulTree",
    "ImplTree",
    "Mod2Table",
    "Parity",
    "ParityVerdict",
    "SeqEngine",
    "SeqKind",
    "Series",
    "Suite",
    "TreeCount",
    "TriangleRow",
    "a_total",
    "build_shape",
    "catalan",
    "census",
    "expand_A_closed_form",
    "f_false",
    "mod2_engine",
    "run_suite",
    "t_true",
    "verify_parity",
]
