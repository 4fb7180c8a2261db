"""Threshold sharing of a secret supersingular isogeny path.

The dealer encodes a torsion point and its image under the secret isogeny
into a binary erasure-correcting codeword, hands each participant one
block of bits, and any t participants can decode the codeword, rebuild
both points, and recover the isogeny chain with an exhaustive
torsion-point recovery search.
"""

from .codes import (
    BinaryExpandedCode,
    LinearCode,
    ReedSolomonCode,
    burst_symbol_span,
    contract_binary,
    expand_binary,
    hyperoval_code,
    min_distance_bruteforce,
    rs_generator_poly,
    subfield_code,
)
from .codec import PointBits, decode_point, encode_point
from .curves import (
    CurvePoint,
    CurveSpec,
    INFINITY,
    is_supersingular,
    j_invariant,
    point_add,
    point_order,
    random_point_of_order,
    scalar_mul,
)
from .fields import (
    BinaryField,
    BinaryFieldElement,
    Fp,
    Fp2,
    element_from_bits,
    element_to_bits,
    fp2_sqrt,
)
from .isogeny import (
    IsogenyChain,
    IsogenyStep,
    evaluate_chain,
    random_walk,
    recover_isogeny,
    velu_step,
)
from .scheme import (
    DealResult,
    RecoveryResult,
    SchemeParams,
    Share,
    admissible_t_interval,
    attack_cost_bits,
    burst_recover,
    distribute_bits,
    recover_isogeny_path,
    share_isogeny_path,
    validate_params,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
