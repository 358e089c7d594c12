"""Exact computation of the Szczarba map between the rigidification and the loop-group functor on standard simplices."""

from .categories import (
    GHomElement,
    HomPoset,
    SubsetMorphism,
    chain_degeneracy,
    chain_face,
    compose_c,
    compose_g,
    enumerate_nerve,
    enumerate_sequences,
    seq_to_chain,
)
from .core import (
    DegenerateSequenceError,
    SzResult,
    alpha,
    alpha_table,
    build_operator,
    hin_vertex,
    omega,
    sz_elementwise,
    sz_operator_route,
    verify_instance,
    verify_range,
)
from .simplicial_ops import (
    InvalidWordError,
    NormalOperator,
    apply,
    compose,
    d,
    normalize,
    parse_operator,
    parse_word,
    s,
    shift,
)

__version__ = "0.1.0"
