"""Finite-group toolkit for the SIP, SSIP and POEC subgroup-intersection properties."""

from .constructions import direct_product, realize
from .core import FiniteGroup, element_order, enumerate_elements, exponent, order_profile
from .dsl import format_spec, parse_group_expr
from .errors import (
    BudgetExceeded,
    GroupLabError,
    InvalidAction,
    InvalidBackend,
    NotNormal,
    ParameterRangeError,
    ParseError,
    PrimeDoesNotDivide,
    TooLarge,
    TrivialGroup,
)
from .lattice import all_subgroups, is_lagrangian, is_supersolvable, sip_by_definition, ssip_by_definition
from .properties import classify, is_poec, is_poec_via_sqf, is_sip, is_ssip, prime_structure

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "FiniteGroup", "GroupLabError", "InvalidAction", "InvalidBackend", "NotNormal",
    "ParameterRangeError", "ParseError", "PrimeDoesNotDivide", "TooLarge", "TrivialGroup",
    "all_subgroups", "classify", "direct_product", "element_order", "enumerate_elements", "exponent",
    "format_spec", "is_lagrangian", "is_poec", "is_poec_via_sqf", "is_sip", "is_ssip", "is_supersolvable",
    "order_profile", "parse_group_expr", "prime_structure", "realize", "sip_by_definition",
    "ssip_by_definition",
]
