"""Graded characters of skew Specht modules for cyclotomic quiver Hecke algebras in affine type A,
and the identification of real cuspidal modules with shifted skew hook Specht modules."""
from .characters import GradedCharacter, check_join_identity, join_report, shuffle_product, specht_character
from .cuspidal import CuspidalResult, cuspidal_shape, cuspidal_table, is_cuspidal_character
from .diagrams import Node, SkewShape, content, parse_shape
from .errors import DomainError, ParseError
from .laurent import LaurentPoly
from .preorders import PreorderSpec, minimal_pairs
from .root_system import PositiveRoot, RootVector, parse_root

__version__ = "0.1.0"

__all__ = [
    "CuspidalResult", "DomainError", "GradedCharacter", "LaurentPoly", "Node", "ParseError",
    "PositiveRoot", "PreorderSpec", "RootVector", "SkewShape", "check_join_identity", "content",
    "cuspidal_shape", "cuspidal_table", "is_cuspidal_character", "join_report", "minimal_pairs",
    "parse_root", "parse_shape", "shuffle_product", "specht_character",
]
