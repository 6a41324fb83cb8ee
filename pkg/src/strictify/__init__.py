"""Tensor products of finite 2-categories via computads and shuffles."""
from .computad import GeneratorAssignment, check_relations, elementary, tensor_computad
from .decomposition import canonical_decomposition, compose_slices, evaluate_two, resort
from .f2c import dump_f2c, load_f2c, parse_f2c
from .fin2cat import FinTwoCategory, Violation, validate
from .laxnest import LaxNestObject, dlaw_enum, from_assignment, to_assignment, validate_object
from .shuffles import Shuffle, enumerate_shuffles, is_valid_morphism
from .simplicial import IntervalMap, MonotoneMap
from .tensor import TensorCategory, TensorOneCell, TensorTwoCell

__all__ = [
    "FinTwoCategory", "GeneratorAssignment", "IntervalMap", "LaxNestObject", "MonotoneMap", "Shuffle",
    "TensorCategory", "TensorOneCell", "TensorTwoCell", "Violation", "canonical_decomposition",
    "check_relations", "compose_slices", "dlaw_enum", "dump_f2c", "elementary", "enumerate_shuffles",
    "evaluate_two", "from_assignment", "is_valid_morphism", "load_f2c", "parse_f2c", "resort",
    "tensor_computad", "to_assignment", "validate", "validate_object",
]
