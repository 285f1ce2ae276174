"""Finite-geometry LDPC codes used as entanglement-assisted quantum codes."""

from .channel import ChannelConfig, PauliErrorPattern, sample_error, sample_errors
from .decoder import DecoderConfig, DecodeOutcome, build_tanner, decode_batch, spa_decode, spa_decode_perturbed
from .eaqecc import CodeSpec, EaqeccParams, code_spec, derive_params, generate_table
from .field import FieldElement, FiniteField, make_field
from .geometry import build_eg, build_pg
from .gf2 import BinaryMatrix, gram, rank_gf2, row_space_contains
from .matrices import build, build_h_eg1, build_h_eg2, build_h_pg1, build_h_pg2
from .simulate import SimRecord, run_sweep, run_trial, wilson_interval

__all__ = [
    "BinaryMatrix", "ChannelConfig", "CodeSpec", "DecodeOutcome", "DecoderConfig", "EaqeccParams",
    "FieldElement", "FiniteField", "PauliErrorPattern", "SimRecord", "build", "build_eg",
    "build_h_eg1", "build_h_eg2", "build_h_pg1", "build_h_pg2", "build_pg", "build_tanner",
    "code_spec", "decode_batch", "derive_params", "generate_table", "gram", "make_field",
    "rank_gf2", "row_space_contains", "run_sweep", "run_trial", "sample_error", "sample_errors",
    "spa_decode", "spa_decode_perturbed", "wilson_interval",
]
