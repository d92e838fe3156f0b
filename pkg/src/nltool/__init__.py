"""Nonlinearity of Boolean functions by Walsh, integer-polynomial and F_2 ideal methods."""

from .boolean import (
    BooleanFunction,
    DomainError,
    MultilinearPolyF2,
    affine_function,
    algebraic_degree,
    anf_of,
    distance,
    evaluate,
    function_of,
    is_affine,
)
from .f2solver import (
    LinearRep,
    SquareFreeMonomial,
    lr_add_generator,
    lr_init,
    lr_solution_count,
    monomial_stream,
    simonetti_generator,
    simonetti_nonlinearity,
    variety_empty_f2,
    weight_ideal_normal_form,
)
from .formats import ParseError, parse_anf, parse_tt_hex
from .nlpoly import (
    NlPolynomial,
    build_nl_poly,
    distance_spectrum,
    nl_evaluations,
    nonlinearity_nnf,
    nonlinearity_q_loop,
    variety_nonempty_q,
)
from .transforms import (
    IntegerMultilinearPoly,
    WalshSpectrum,
    evaluations_from_nnf,
    mobius,
    nnf_from_evaluations,
    nonlinearity_fwt,
    walsh_spectrum,
)

__version__ = "0.1.0"
