"""Linear codes over GF(2) and GF(2^r): Reed-Solomon codes, their binary
subfield codes and binary expansions, erasure decoding, and brute-force
oracles for tests.

Erasure decoding solves the parity-check system restricted to the erased
coordinates, so it works uniformly for every code here and succeeds on any
pattern that pins the codeword down uniquely, not just the worst-case
d - 1 bound.
"""

from . import linalg
from .errors import Ambiguous, BadDistance, Inconsistent, NotACodeword, TooLarge
from .fields import GF2, BinaryField, element_from_bits, element_to_bits

ERASED = None

_BRUTE_FORCE_GUARD = 1 << 20


def poly_mul(a, b):
    """Product of coefficient lists (lowest degree first)."""
    field = a[0].field
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def poly_divmod(num, den):
    field = num[0].field
    num = list(num)
    q = [field.zero] * max(1, len(num) - len(den) + 1)
    inv_lead = den[-1].inverse()
    for shift in range(len(num) - len(den), -1, -1):
        coeff = num[shift + len(den) - 1] * inv_lead
        q[shift] = coeff
        for i, dcoeff in enumerate(den):
            num[shift + i] = num[shift + i] - coeff * dcoeff
    rem = num[: len(den) - 1] or [field.zero]
    return q, rem


def rs_generator_poly(r: int, d: int, m: int = 0):
    """Generator polynomial prod_{j=1}^{d-1} (x + tau^(m+j)) over GF(2^r)."""
    field = BinaryField(r)
    if not 2 <= d <= field.size - 1:
        raise BadDistance(f"need 2 <= d <= {field.size - 1}, got {d}")
    g = [field.one]
    for j in range(1, d):
        g = poly_mul(g, [field.tau ** (m + j), field.one])
    return g


def _dot(row, vec, field):
    acc = field.zero
    for a, b in zip(row, vec):
        if a and b:
            acc = acc + a * b
    return acc


class LinearCode:
    """A linear code given by a generator matrix, held in systematic form.

    Message symbols are carried verbatim at `info_positions` (the first k
    coordinates unless the construction dictates otherwise).
    """

    def __init__(self, field, rows, info_positions=None, kind="generic",
                 design_distance=None):
        rows = [list(r) for r in rows]
        length = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != length:
                raise ValueError("ragged generator matrix")
        if info_positions is not None:
            reduced, pivots = linalg.rref(rows, length, pivot_order=info_positions)
            if list(pivots) != list(info_positions) or len(reduced) != len(rows):
                raise ValueError("info positions are not an information set")
        else:
            reduced, pivots = linalg.rref(rows, length)
            reduced = [row for _, row in sorted(zip(pivots, reduced))]
            pivots = sorted(pivots)
        self.field = field
        self.length = length
        self.generator = [tuple(r) for r in reduced]
        self.info_positions = tuple(pivots)
        self.dimension = len(self.generator)
        self.kind = kind
        self.design_distance = design_distance
        self.parity = [
            tuple(h) for h in linalg.nullspace(self.generator, length, field)
        ]

    def encode(self, msg):
        """Systematic encoding of a length-k message."""
        msg = list(msg)
        if len(msg) != self.dimension:
            from .errors import LengthMismatch

            raise LengthMismatch(
                f"message length {len(msg)} != dimension {self.dimension}"
            )
        cw = [self.field.zero] * self.length
        for coeff, row in zip(msg, self.generator):
            if not coeff:
                continue
            for j, g in enumerate(row):
                if g:
                    cw[j] = cw[j] + coeff * g
        return tuple(cw)

    def contains(self, cw) -> bool:
        return all(not _dot(h, cw, self.field) for h in self.parity)

    def extract(self, cw):
        """Inverse of encode; rejects vectors outside the code."""
        cw = tuple(cw)
        if len(cw) != self.length or not self.contains(cw):
            raise NotACodeword("vector fails the parity checks")
        return tuple(cw[j] for j in self.info_positions)

    def erasure_decode(self, word):
        """The unique codeword agreeing with `word` off its ERASED slots."""
        word = list(word)
        if len(word) != self.length:
            from .errors import LengthMismatch

            raise LengthMismatch(f"word length {len(word)} != {self.length}")
        unknown = [j for j, s in enumerate(word) if s is ERASED]
        known = [j for j, s in enumerate(word) if s is not ERASED]
        rows = []
        rhs = []
        for h in self.parity:
            rows.append([h[j] for j in unknown])
            acc = self.field.zero
            for j in known:
                if h[j] and word[j]:
                    acc = acc + h[j] * word[j]
            rhs.append(-acc)
        solution, free = linalg.solve(rows, rhs, len(unknown), self.field)
        if solution is None:
            raise Inconsistent("known symbols violate the parity checks")
        if free:
            raise Ambiguous(self.field.size ** free)
        filled = list(word)
        for j, value in zip(unknown, solution):
            filled[j] = value
        return tuple(filled)

    def consistent_count(self, word) -> int:
        """Number of codewords agreeing with `word` off its erasures."""
        try:
            self.erasure_decode(word)
            return 1
        except Ambiguous as amb:
            return amb.count
        except Inconsistent:
            return 0

    def __repr__(self):
        return (
            f"LinearCode([{self.length}, {self.dimension}] over "
            f"GF({self.field.size}), kind={self.kind!r})"
        )


class ReedSolomonCode(LinearCode):
    """Cyclic RS code of length 2^r - 1 and dimension 2^r - d over GF(2^r)."""

    def __init__(self, r: int, d: int, m: int = 0):
        g = rs_generator_poly(r, d, m)
        field = g[0].field
        length = field.size - 1
        k = field.size - d
        rows = []
        for i in range(k):
            row = [field.zero] * length
            for j, coeff in enumerate(g):
                row[i + j] = coeff
            rows.append(row)
        super().__init__(
            field,
            rows,
            info_positions=range(k),
            kind="reed-solomon",
            design_distance=d,
        )
        self.r = r
        self.d = d
        self.m = m
        self.generator_poly = tuple(g)


def hyperoval_code(r: int) -> LinearCode:
    """The [2^r + 2, 3, 2^r] triply-extended RS (hyperoval) code."""
    if r < 2:
        raise ValueError("hyperoval codes need r >= 2")
    field = BinaryField(r)
    alphas = list(field.elements())
    row0 = [field.one] * field.size + [field.zero, field.zero]
    row1 = [a for a in alphas] + [field.one, field.zero]
    row2 = [a * a for a in alphas] + [field.zero, field.one]
    return LinearCode(
        field,
        [row0, row1, row2],
        info_positions=range(3),
        kind="hyperoval",
        design_distance=field.size,
    )


def subfield_code(code: LinearCode) -> LinearCode:
    """Binary subfield code: the intersection of `code` with {0,1}^length.

    Each GF(2^r) parity constraint splits into r binary constraints on the
    coefficient bits; the nullspace over GF(2) generates the subfield code.
    """
    r = code.field.r
    binary_rows = []
    for h in code.parity:
        for b in range(r):
            binary_rows.append([GF2((coeff.val >> b) & 1) for coeff in h])
    gen = linalg.nullspace(binary_rows, code.length, GF2)
    return LinearCode(GF2, gen, kind="subfield", design_distance=code.design_distance)


def expand_binary(base: ReedSolomonCode, cw):
    """Binary image of an RS codeword: per symbol, its r coefficient bits
    followed by one overall parity bit."""
    out = []
    for sym in cw:
        bits = element_to_bits(sym)
        out.extend(GF2(b) for b in bits)
        out.append(GF2(sum(bits) & 1))
    return tuple(out)


def contract_binary(base: ReedSolomonCode, word):
    """Collapse a binary word with erasures back to RS symbols.

    A block with any erased bit, or a failing parity check, becomes an
    erased symbol; clean blocks collapse through the coefficient map.
    """
    r = base.r
    block = r + 1
    word = list(word)
    from .errors import LengthMismatch

    if len(word) != block * base.length:
        raise LengthMismatch(
            f"binary word length {len(word)} != {block * base.length}"
        )
    symbols = []
    for i in range(base.length):
        chunk = word[i * block : (i + 1) * block]
        if any(b is ERASED for b in chunk):
            symbols.append(ERASED)
            continue
        ints = [int(b) for b in chunk]
        if sum(ints) & 1:
            symbols.append(ERASED)
            continue
        symbols.append(element_from_bits(ints[:r], base.field))
    return symbols


class BinaryExpandedCode(LinearCode):
    """Binary expansion of an RS code with one parity bit per symbol block.

    Parameters [(r+1)(2^r - 1), r*(2^r - d)] with minimum distance at least
    2d.  Message bits sit in the data-bit slots of the first k_rs blocks.
    """

    def __init__(self, r: int, d: int, m: int = 0):
        base = ReedSolomonCode(r, d, m)
        k_bits = r * base.dimension
        info = [
            (r + 1) * j + b for j in range(base.dimension) for b in range(r)
        ]
        rows = []
        for i in range(k_bits):
            msg_bits = [0] * k_bits
            msg_bits[i] = 1
            symbols = [
                element_from_bits(msg_bits[j * r : (j + 1) * r], base.field)
                for j in range(base.dimension)
            ]
            rows.append(list(expand_binary(base, base.encode(symbols))))
        super().__init__(
            GF2,
            rows,
            info_positions=info,
            kind="binary-expanded-rs",
            design_distance=2 * d,
        )
        self.base = base
        self.r = r

    def block_symbol_spans(self, block_bits: int, n_blocks: int) -> list[int]:
        """RS symbols hit by each of n_blocks consecutive share blocks."""
        block = self.r + 1
        spans = []
        for i in range(n_blocks):
            start = i * block_bits
            end = start + block_bits - 1
            spans.append(end // block - start // block + 1)
        return spans


def burst_symbol_span(burst_len: int, symbol_bits: int) -> int:
    """Max adjacent symbols a burst of consecutive bits can touch."""
    if burst_len < 1 or symbol_bits < 1:
        raise ValueError("lengths must be positive")
    return (burst_len - 1 + symbol_bits - 1) // symbol_bits + 1


def enumerate_codewords(code: LinearCode):
    """All codewords; guarded against oversize enumerations."""
    total = code.field.size ** code.dimension
    if total > _BRUTE_FORCE_GUARD:
        raise TooLarge(f"{total} codewords exceeds the enumeration guard")
    msg = [0] * code.dimension
    for _ in range(total):
        yield code.encode([code.field(v) for v in msg])
        for i in range(code.dimension):
            msg[i] += 1
            if msg[i] < code.field.size:
                break
            msg[i] = 0


def min_distance_bruteforce(code: LinearCode) -> int:
    """Minimum nonzero-codeword weight by full enumeration."""
    best = None
    for cw in enumerate_codewords(code):
        weight = sum(1 for s in cw if s)
        if weight and (best is None or weight < best):
            best = weight
    if best is None:
        raise ValueError("the zero code has no minimum distance")
    return best
