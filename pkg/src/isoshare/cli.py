"""Command-line surface: deal shares to files, recover from share files,
and audit parameters.

Exit codes: 0 ok, 2 invalid config/params, 3 I/O failure, 4 not enough
shares, 5 digest mismatch, 6 corrupted share or codeword.
"""

import argparse
import hashlib
import itertools
import os
import sys

from .codes import BinaryExpandedCode, hyperoval_code, subfield_code
from .curves import CurveSpec, j_invariant, random_point_of_order
from .errors import (
    Inconsistent,
    InvalidEncoding,
    InvalidParams,
    IsoshareError,
    NoIsogenyFound,
    NotACodeword,
    NotEnoughShares,
)
from .fields import Fp2
from .isogeny import random_walk
from .scheme import (
    SchemeParams,
    Share,
    admissible_t_interval,
    attack_cost_bits,
    burst_recover,
    recover_isogeny_path,
    share_isogeny_path,
    validate_params,
)

SHARE_MAGIC = "ISOSHARE 1"
PUBLIC_MAGIC = "ISOSHARE-PUBLIC 1"

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_NOT_ENOUGH = 4
EXIT_DIGEST = 5
EXIT_CORRUPT = 6


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def bits_to_hex(bits) -> str:
    """MSB-first nibble packing, zero fill in the final nibble."""
    bits = tuple(bits)
    padded = bits + (0,) * (-len(bits) % 4)
    return "".join(
        f"{int(''.join(map(str, padded[i:i + 4])), 2):x}"
        for i in range(0, len(padded), 4)
    )


def hex_to_bits(text: str, nbits: int) -> tuple[int, ...]:
    if len(text) != -(-nbits // 4):
        raise ValueError(f"expected {-(-nbits // 4)} hex digits")
    bits = []
    for ch in text:
        v = int(ch, 16)
        bits.extend((v >> i) & 1 for i in (3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ValueError("nonzero fill bits")
    return tuple(bits[:nbits])


def parse_config(path: str) -> dict[str, str]:
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as ex:
        raise CliError(EXIT_IO, f"cannot read config: {ex}") from ex
    config = {}
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(EXIT_INVALID, f"{path}:{lineno}: expected key = value")
        key, value = line.split("=", 1)
        config[key.strip()] = value.strip()
    return config


def _fp2(text: str, p: int) -> Fp2:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) == 1:
        parts.append("0")
    return Fp2(int(parts[0]), int(parts[1]), p)


def _fp2_str(el: Fp2) -> str:
    return f"{el.c0},{el.c1}"


def build_code(kind: str, config: dict[str, str]):
    if kind == "binary-expanded-rs":
        return BinaryExpandedCode(
            int(config["code.r"]),
            int(config["code.d"]),
            int(config.get("code.m", "0")),
        )
    if kind == "subfield-hyperoval":
        return subfield_code(hyperoval_code(int(config["code.r"])))
    raise CliError(EXIT_INVALID, f"unknown code.kind {kind!r}")


def params_from_config(config: dict[str, str]) -> SchemeParams:
    try:
        p = int(config["p"])
        curve = CurveSpec(_fp2(config["a"], p), _fp2(config["b"], p), p)
        return SchemeParams(
            n=int(config["n"]),
            t=int(config["t"]),
            gamma=int(config["gamma"]),
            curve=curve,
            torsion_order=int(config["N"]),
            ell_iso=int(config["ell_iso"]),
            e_iso=int(config["e_iso"]),
            code=build_code(config["code.kind"], config),
            security_bits=int(config.get("lambda", "128")),
        )
    except CliError:
        raise
    except (KeyError, ValueError, IsoshareError) as ex:
        raise CliError(EXIT_INVALID, f"bad config: {ex}") from ex


def _context_lines(params: SchemeParams, e1: CurveSpec) -> list[str]:
    code = params.code
    lines = [
        f"p {params.curve.p}",
        f"a {_fp2_str(params.curve.a)}",
        f"b {_fp2_str(params.curve.b)}",
        f"e1_a {_fp2_str(e1.a)}",
        f"e1_b {_fp2_str(e1.b)}",
        f"n {params.n}",
        f"t {params.t}",
        f"gamma {params.gamma}",
        f"lambda {params.security_bits}",
        f"N {params.torsion_order}",
        f"ell_iso {params.ell_iso}",
        f"e_iso {params.e_iso}",
        f"code.kind {code.kind}",
    ]
    if isinstance(code, BinaryExpandedCode):
        lines += [
            f"code.r {code.r}",
            f"code.d {code.base.d}",
            f"code.m {code.base.m}",
        ]
    return lines


def context_digest(lines: list[str]) -> str:
    return hashlib.sha256("\n".join(lines).encode()).hexdigest()


def _atomic_write(path: str, text: str) -> None:
    tmp = path + ".tmp"
    try:
        with open(tmp, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as ex:
        raise CliError(EXIT_IO, f"cannot write {path}: {ex}") from ex


def _parse_kv_file(path: str, magic: str) -> dict[str, str]:
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as ex:
        raise CliError(EXIT_IO, f"cannot read {path}: {ex}") from ex
    if not lines or lines[0] != magic:
        raise CliError(EXIT_INVALID, f"{path}: missing {magic!r} header")
    fields = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        key, _, value = line.partition(" ")
        fields[key] = value.strip()
    return fields


def cmd_deal(args) -> int:
    config = parse_config(args.config)
    params = params_from_config(config)
    report = validate_params(params)
    for warning in report.warnings:
        print(f"warning: {warning}")
    if not report.ok:
        for violation in report.violations:
            print(f"violation: {violation}")
        if not args.force:
            raise CliError(EXIT_INVALID, "parameter validation failed")
    seed = args.seed or config.get("seed", "0")
    walk_seed = hashlib.sha256(f"{seed}/walk".encode()).hexdigest()
    point_seed = hashlib.sha256(f"{seed}/point".encode()).hexdigest()
    secret = random_walk(params.curve, params.ell_iso, params.e_iso, walk_seed)
    point = random_point_of_order(params.curve, params.torsion_order, point_seed)
    deal = share_isogeny_path(secret, point, params, force=args.force)
    context = _context_lines(params, deal.e1)
    digest = context_digest(context)
    try:
        os.makedirs(args.output, exist_ok=True)
    except OSError as ex:
        raise CliError(EXIT_IO, f"cannot create {args.output}: {ex}") from ex
    public_path = os.path.join(args.output, "public.isoshare")
    _atomic_write(
        public_path, "\n".join([PUBLIC_MAGIC, f"digest {digest}"] + context) + "\n"
    )
    for share in deal.shares:
        body = [
            SHARE_MAGIC,
            f"digest {digest}",
            f"index {share.index}",
            f"gamma {params.gamma}",
            f"bits {bits_to_hex(share.bits)}",
        ]
        _atomic_write(
            os.path.join(args.output, f"share_{share.index}.isoshare"),
            "\n".join(body) + "\n",
        )
    print(f"dealt: {params.n}")
    print(f"output: {args.output}")
    print(f"digest: {digest}")
    return EXIT_OK


def load_public(path: str):
    fields = _parse_kv_file(path, PUBLIC_MAGIC)
    try:
        p = int(fields["p"])
        curve = CurveSpec(_fp2(fields["a"], p), _fp2(fields["b"], p), p)
        e1 = CurveSpec(_fp2(fields["e1_a"], p), _fp2(fields["e1_b"], p), p)
        params = SchemeParams(
            n=int(fields["n"]),
            t=int(fields["t"]),
            gamma=int(fields["gamma"]),
            curve=curve,
            torsion_order=int(fields["N"]),
            ell_iso=int(fields["ell_iso"]),
            e_iso=int(fields["e_iso"]),
            code=build_code(fields["code.kind"], fields),
            security_bits=int(fields["lambda"]),
        )
    except (KeyError, ValueError, IsoshareError) as ex:
        raise CliError(EXIT_INVALID, f"bad public file: {ex}") from ex
    digest = fields.get("digest", "")
    if context_digest(_context_lines(params, e1)) != digest:
        raise CliError(EXIT_DIGEST, "public file digest does not match its contents")
    return params, e1, digest


def load_share(path: str, digest: str, gamma: int) -> Share:
    fields = _parse_kv_file(path, SHARE_MAGIC)
    if fields.get("digest", "") != digest:
        raise CliError(EXIT_DIGEST, f"{path}: digest does not match public context")
    try:
        index = int(fields["index"])
        share_gamma = int(fields["gamma"])
        if share_gamma != gamma:
            raise ValueError(f"share gamma {share_gamma} != {gamma}")
        bits = hex_to_bits(fields["bits"], gamma)
    except (KeyError, ValueError) as ex:
        raise CliError(EXIT_INVALID, f"{path}: {ex}") from ex
    return Share(index, bits)


def _burst_applicable(params: SchemeParams) -> bool:
    code = params.code
    return (
        isinstance(code, BinaryExpandedCode)
        and code.r > params.gamma - 2
        and code.base.d >= 2 * (params.n - params.t) + 1
    )


def cmd_recover(args) -> int:
    params, e1, digest = load_public(args.public)
    shares = [load_share(path, digest, params.gamma) for path in args.shares]
    try:
        if _burst_applicable(params):
            result = burst_recover(shares, params, e1)
        else:
            result = recover_isogeny_path(shares, params, e1)
    except NotEnoughShares as ex:
        raise CliError(EXIT_NOT_ENOUGH, f"not enough shares: {ex}") from ex
    except (Inconsistent, NotACodeword, InvalidEncoding, NoIsogenyFound) as ex:
        raise CliError(EXIT_CORRUPT, f"corrupted share data: {ex}") from ex
    print(f"degree: {result.chain.degree}")
    print(f"steps: {len(result.chain.steps)}")
    for i, step in enumerate(result.chain.steps):
        print(f"step_{i}_kernel_x: {_fp2_str(step.kernel.x)}")
        print(f"step_{i}_kernel_y: {_fp2_str(step.kernel.y)}")
        print(f"step_{i}_j: {_fp2_str(j_invariant(step.codomain))}")
    print(f"codomain_a: {_fp2_str(result.chain.codomain.a)}")
    print(f"codomain_b: {_fp2_str(result.chain.codomain.b)}")
    print(f"point_x: {_fp2_str(result.point.x)}")
    print(f"point_y: {_fp2_str(result.point.y)}")
    print(f"image_x: {_fp2_str(result.image.x)}")
    print(f"image_y: {_fp2_str(result.image.y)}")
    return EXIT_OK


def cmd_check(args) -> int:
    config = parse_config(args.config)
    params = params_from_config(config)
    report = validate_params(params)
    lower, upper = report.t_interval
    if lower > upper:
        print("t_interval: none")
    else:
        print(f"t_interval: [{lower}, {upper}]")
    for s in range(params.n + 1):
        print(f"cost_bits_s{s}: {attack_cost_bits(params, s)}")
    code = params.code
    if code.kind == "subfield":
        slo, shi = admissible_t_interval(
            params.n, params.gamma, code.dimension, params.security_bits
        )
        print(f"subfield_t_interval: [{slo}, {shi}]" if slo <= shi
              else "subfield_t_interval: none")
    if isinstance(code, BinaryExpandedCode):
        width_ok = code.r > params.gamma - 2
        dist_ok = code.base.d >= 2 * (params.n - params.t) + 1
        print(f"burst_width_condition: {'ok' if width_ok else 'violated'}")
        print(f"burst_distance_condition: {'ok' if dist_ok else 'violated'}")
    for warning in report.warnings:
        print(f"warning: {warning}")
    for violation in report.violations:
        print(f"violation: {violation}")
    print(f"valid: {'yes' if report.ok else 'no'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoshare",
        description="Threshold sharing of a secret isogeny path",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    deal = sub.add_parser("deal", help="deal shares to files")
    deal.add_argument("-c", "--config", required=True)
    deal.add_argument("-o", "--output", required=True)
    deal.add_argument("--seed", default=None)
    deal.add_argument("--force", action="store_true",
                      help="deal even if validation reports violations")
    deal.set_defaults(func=cmd_deal)

    recover = sub.add_parser("recover", help="recover the secret from shares")
    recover.add_argument("-p", "--public", required=True)
    recover.add_argument("shares", nargs="+")
    recover.set_defaults(func=cmd_recover)

    check = sub.add_parser("check", help="audit scheme parameters")
    check.add_argument("-c", "--config", required=True)
    check.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return ex.code


if __name__ == "__main__":
    sys.exit(main())
