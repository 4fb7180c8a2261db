"""The (n, t)-threshold scheme over an isogeny secret.

A dealer encodes the torsion pair (P, I(P)) of a secret isogeny chain I
into a codeword of a binary erasure-correcting code and hands each of the
n participants one gamma-bit block.  Any t participants rebuild the
codeword (missing blocks are erasures), decode the two points, and call
the isogeny-recovery oracle to get the chain back.
"""

import math
from dataclasses import dataclass, field

from .codec import (
    PointBits,
    decode_point,
    encode_point,
    min_encoding_length,
)
from .codes import ERASED, BinaryExpandedCode, LinearCode, contract_binary, expand_binary
from .curves import CurvePoint, CurveSpec, is_supersingular, point_order
from .errors import (
    Ambiguous,
    DuplicateShare,
    InvalidParams,
    LengthMismatch,
    NotEnoughShares,
)
from .fields import GF2
from .isogeny import IsogenyChain, evaluate_chain, recover_isogeny


@dataclass(frozen=True)
class SchemeParams:
    """Public parameters of one threshold deal."""

    n: int
    t: int
    gamma: int
    curve: CurveSpec
    torsion_order: int
    ell_iso: int
    e_iso: int
    code: LinearCode
    security_bits: int = 128

    @property
    def isogeny_degree(self) -> int:
        return self.ell_iso**self.e_iso


@dataclass(frozen=True)
class Share:
    index: int
    bits: tuple[int, ...]


@dataclass(frozen=True)
class DealResult:
    shares: tuple[Share, ...]
    e0: CurveSpec
    e1: CurveSpec
    params: SchemeParams


@dataclass(frozen=True)
class RecoveryResult:
    chain: IsogenyChain
    point: CurvePoint
    image: CurvePoint


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    t_interval: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def admissible_t_interval(n: int, gamma: int, k: int, security_bits: int = 128):
    """Inclusive [t_min, t_max]: ceil(k/gamma) <= t <= floor(n - lambda/gamma + 1)."""
    lower = -(-k // gamma)
    upper = n + 1 + (-security_bits // gamma)
    return lower, upper


def attack_cost_bits(params: SchemeParams, shares_held: int) -> int:
    """Brute-force exponent facing a coalition holding `shares_held` shares."""
    if not 0 <= shares_held <= params.n:
        raise ValueError("shares held must be in [0, n]")
    return params.gamma * (params.n - shares_held)


def _largest_square_divisor(n: int) -> int:
    best = 1
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            best *= d * d
            n //= d * d
        d += 1
    return best


def _erasure_capability_ok(params: SchemeParams) -> bool:
    """Can the code fill in n - t missing gamma-bit blocks?"""
    missing = params.n - params.t
    if missing == 0:
        return True
    code = params.code
    if isinstance(code, BinaryExpandedCode):
        # Whole-block erasures hit a bounded run of symbols per block; the
        # worst case is the `missing` largest spans all erased at once.
        spans = sorted(code.block_symbol_spans(params.gamma, params.n))
        return sum(spans[-missing:]) <= code.base.d - 1
    if code.design_distance is not None:
        return code.design_distance - 1 >= params.gamma * missing
    return False


def validate_params(params: SchemeParams) -> ValidationReport:
    report = ValidationReport()
    n, t, gamma = params.n, params.t, params.gamma
    k = params.code.dimension
    lower, upper = admissible_t_interval(n, gamma, k, params.security_bits)
    report.t_interval = (lower, upper)
    if n < 2:
        report.violations.append(f"need at least 2 participants, got n = {n}")
    if not 1 <= t <= n:
        report.violations.append(f"threshold t = {t} outside [1, {n}]")
    if params.code.length != gamma * n:
        report.violations.append(
            f"code length {params.code.length} != gamma*n = {gamma * n}"
        )
    if t < lower:
        report.violations.append(f"t = {t} < ceil(k/gamma) = {lower}")
    if t > upper:
        report.violations.append(
            f"t = {t} > n - {params.security_bits}/gamma + 1 = {upper}"
        )
    if not _erasure_capability_ok(params):
        report.violations.append(
            f"code cannot correct {gamma * (n - t)} erased bits from "
            f"{n - t} missing blocks"
        )
    if math.gcd(params.torsion_order, params.isogeny_degree) != 1:
        report.violations.append(
            f"torsion order {params.torsion_order} not coprime to isogeny "
            f"degree {params.isogeny_degree}"
        )
    if (params.curve.p + 1) % params.torsion_order != 0:
        report.violations.append(
            f"torsion order {params.torsion_order} does not divide p+1"
        )
    if k % 2 != 0 or k // 2 < min_encoding_length(params.curve.p):
        report.violations.append(
            f"code dimension {k} cannot carry two point encodings of "
            f">= {min_encoding_length(params.curve.p)} bits each"
        )
    if not is_supersingular(params.curve):
        report.violations.append("starting curve is not supersingular")
    if _largest_square_divisor(params.torsion_order) == 1:
        report.warnings.append(
            "torsion order has no nontrivial square factor; the polynomial "
            "recovery algorithm this oracle stands in for needs one"
        )
    return report


def distribute_bits(bits, gamma: int, n: int) -> tuple[Share, ...]:
    """Block partition: share i carries bits [i*gamma, (i+1)*gamma)."""
    bits = tuple(bits)
    if len(bits) != gamma * n:
        raise LengthMismatch(f"expected {gamma * n} bits, got {len(bits)}")
    return tuple(
        Share(i, bits[i * gamma : (i + 1) * gamma]) for i in range(n)
    )


def share_isogeny_path(
    secret: IsogenyChain, point: CurvePoint, params: SchemeParams, force: bool = False
) -> DealResult:
    """Deal the secret chain: encode (P, I(P)), spread the codeword."""
    report = validate_params(params)
    if not report.ok and not force:
        raise InvalidParams("; ".join(report.violations))
    if secret.domain != params.curve:
        raise InvalidParams("secret chain does not start on the scheme curve")
    if secret.degree != params.isogeny_degree:
        raise InvalidParams(
            f"chain degree {secret.degree} != ell^e = {params.isogeny_degree}"
        )
    if point_order(params.curve, point) != params.torsion_order:
        raise InvalidParams("torsion point does not have the declared order")
    e1 = secret.codomain
    image = evaluate_chain(secret, point)
    half = params.code.dimension // 2
    s_p = encode_point(params.curve, point, half)
    s_q = encode_point(e1, image, half)
    msg = [GF2(b) for b in s_p.bits + s_q.bits]
    codeword = params.code.encode(msg)
    bits = tuple(int(s) for s in codeword)
    return DealResult(
        shares=distribute_bits(bits, params.gamma, params.n),
        e0=params.curve,
        e1=e1,
        params=params,
    )


def _check_shares(shares, params: SchemeParams) -> dict[int, tuple[int, ...]]:
    by_index: dict[int, tuple[int, ...]] = {}
    for share in shares:
        if not 0 <= share.index < params.n:
            raise InvalidParams(f"share index {share.index} outside [0, {params.n})")
        if share.index in by_index:
            raise DuplicateShare(f"two shares carry index {share.index}")
        if len(share.bits) != params.gamma:
            raise LengthMismatch(
                f"share {share.index} has {len(share.bits)} bits, "
                f"expected {params.gamma}"
            )
        by_index[share.index] = tuple(share.bits)
    return by_index


def _erasure_word(by_index, params: SchemeParams):
    word = []
    for i in range(params.n):
        if i in by_index:
            word.extend(GF2(b) for b in by_index[i])
        else:
            word.extend([ERASED] * params.gamma)
    return word


def _finish(message_bits, params: SchemeParams, e1: CurveSpec) -> RecoveryResult:
    half = params.code.dimension // 2
    point = decode_point(params.curve, PointBits(message_bits[:half]))
    image = decode_point(e1, PointBits(message_bits[half:]))
    chain = recover_isogeny(
        params.curve, e1, point, image, params.ell_iso, params.e_iso
    )
    return RecoveryResult(chain=chain, point=point, image=image)


def recover_isogeny_path(shares, params: SchemeParams, e1: CurveSpec) -> RecoveryResult:
    """Rebuild the codeword from >= t shares and recover the secret chain."""
    by_index = _check_shares(shares, params)
    word = _erasure_word(by_index, params)
    try:
        codeword = params.code.erasure_decode(word)
    except Ambiguous as amb:
        raise NotEnoughShares(
            f"{amb.count} codewords fit the {len(by_index)} known blocks"
        ) from amb
    message_bits = tuple(int(s) for s in params.code.extract(codeword))
    return _finish(message_bits, params, e1)


def burst_recover(
    shares,
    params: SchemeParams,
    e1: CurveSpec,
    enforce_conditions: bool = True,
) -> RecoveryResult:
    """Recovery through the base RS code of a binary-expanded code.

    Each missing gamma-bit block erases a bounded run of adjacent RS
    symbols; decoding happens at symbol level, then the word is re-expanded.
    """
    code = params.code
    if not isinstance(code, BinaryExpandedCode):
        raise InvalidParams("burst recovery needs a binary-expanded RS code")
    if enforce_conditions:
        if code.r <= params.gamma - 2:
            raise InvalidParams(
                f"symbol width r = {code.r} must exceed gamma - 2 = "
                f"{params.gamma - 2}"
            )
        if code.base.d < 2 * (params.n - params.t) + 1:
            raise InvalidParams(
                f"base distance {code.base.d} < 2(n - t) + 1 = "
                f"{2 * (params.n - params.t) + 1}"
            )
    by_index = _check_shares(shares, params)
    word = _erasure_word(by_index, params)
    symbols = contract_binary(code.base, word)
    erased = sum(1 for s in symbols if s is ERASED)
    if erased > code.base.d - 1:
        raise NotEnoughShares(
            f"{erased} symbol erasures exceed the {code.base.d - 1} the base "
            "code is sure to correct"
        )
    try:
        rs_codeword = code.base.erasure_decode(symbols)
    except Ambiguous as amb:
        raise NotEnoughShares(
            f"{amb.count} base codewords fit the known symbols"
        ) from amb
    binary_codeword = expand_binary(code.base, rs_codeword)
    message_bits = tuple(int(s) for s in code.extract(binary_codeword))
    return _finish(message_bits, params, e1)
