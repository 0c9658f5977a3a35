"""Prefix coding for geometric run-lengths bounded by a known integer.

Public surface: bit I/O, the bounded-geometric code itself, the
reference codes it is built from, branch-free primitives, verification
oracles, and the redundancy evaluation harness.
"""

from .bitio import BitReader, BitWriter, Codeword
from .bounded import (
    CodeLayout,
    GeometricParams,
    codeword_length,
    decode,
    derive_params,
    encode,
    encode_into,
    enumerate_codewords,
    expected_length,
    layout,
    make_layout,
)
from .branchfree import ceil_lg32, encode_branchfree
from .codes import (
    balanced_decode,
    balanced_encode,
    compute_m,
    golomb_decode,
    golomb_encode,
    golomb_expected_length_bounded,
    unary_decode,
    unary_encode,
)
from .evaluate import ExperimentConfig, EvalReport, emit_report, run_experiment, spot_check
from .oracle import (
    entropy,
    horibe_bound,
    huffman_expected_length,
    huffman_length_multiset,
    weight_balanced_expected_length,
)

__version__ = "0.1.0"
