"""Command-line interface: parameter inspection, code tables, file
encode/decode in the FGC1 container format, and evaluation runs.

Container layout (all integers little-endian):

    magic   4 bytes  "FGC1"
    version 1 byte   = 1
    mode    1 byte   0 = constant bound, 1 = sidecar bounds
    m       4 bytes
    m''     4 bytes
    n       8 bytes  (0 in mode 1)
    count   8 bytes  number of encoded values
    payload           bitstream, MSB-first within bytes, final byte
                      zero-padded

Exit codes: 0 success, 2 usage error, 3 data error.
"""

import argparse
import struct
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bounded
from .bitio import BitReader, BitWriter
from .codes import golomb_codeword_length, golomb_expected_length_bounded
from .evaluate import ExperimentConfig, emit_report, run_experiment
from .oracle import entropy, huffman_expected_length, huffman_value_depths

__all__ = ["main", "DataError", "Fgc1Container", "write_container", "read_container"]

MAGIC = b"FGC1"
VERSION = 1
_HEADER = struct.Struct("<4sBBIIQQ")


class DataError(Exception):
    """Invalid input data or corrupt container; maps to exit code 3."""


@dataclass(frozen=True)
class Fgc1Container:
    mode: int
    m: int
    m2: int
    n: int  # 0 in sidecar mode
    count: int
    payload: bytes


def write_container(c: Fgc1Container) -> bytes:
    return _HEADER.pack(MAGIC, VERSION, c.mode, c.m, c.m2, c.n, c.count) + c.payload


def read_container(data: bytes) -> Fgc1Container:
    if len(data) < _HEADER.size:
        raise DataError("container truncated: %d bytes" % len(data))
    magic, version, mode, m, m2, n, count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise DataError("bad magic %r" % magic)
    if version != VERSION:
        raise DataError("unsupported version %d" % version)
    if mode not in (0, 1):
        raise DataError("bad mode %d" % mode)
    if not 1 <= m < m2 <= 2 * m:
        raise DataError("invalid parameters m=%d m''=%d" % (m, m2))
    return Fgc1Container(mode=mode, m=m, m2=m2, n=n, count=count,
                         payload=data[_HEADER.size:])


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r") as f:
        return f.read()


def _parse_ints(text: str, what: str) -> list[int]:
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise DataError("%s line %d: not an integer: %r" % (what, lineno, line))
    return values


def _encode_values(values: list[int], m: int, m2: int,
                   bounds: list[int] | None, n: int) -> bytes:
    w = BitWriter()
    layouts: dict[int, bounded.CodeLayout] = {}
    for lineno, v in enumerate(values, start=1):
        bound = bounds[lineno - 1] if bounds is not None else n
        if not 0 <= v <= bound:
            raise DataError("input line %d: value %d exceeds bound %d" % (lineno, v, bound))
        lay = layouts.get(bound)
        if lay is None:
            lay = layouts[bound] = bounded.make_layout(m, m2, bound)
        bounded.encode_into(lay, v, w)
    return w.flush()


def cmd_encode(args) -> int:
    params = bounded.derive_params(args.p)
    values = _parse_ints(_read_text(args.input), "input")
    if args.bounds is not None:
        bounds = _parse_ints(_read_text(args.bounds), "bounds")
        if len(bounds) != len(values):
            raise DataError("bounds file has %d entries for %d values"
                            % (len(bounds), len(values)))
        for lineno, b in enumerate(bounds, start=1):
            if b < 0:
                raise DataError("bounds line %d: negative bound %d" % (lineno, b))
        payload = _encode_values(values, params.m, params.m2, bounds, 0)
        cont = Fgc1Container(mode=1, m=params.m, m2=params.m2, n=0,
                             count=len(values), payload=payload)
    else:
        payload = _encode_values(values, params.m, params.m2, None, args.n)
        cont = Fgc1Container(mode=0, m=params.m, m2=params.m2, n=args.n,
                             count=len(values), payload=payload)
    data = write_container(cont)
    if args.out == "-":
        sys.stdout.buffer.write(data)
    else:
        with open(args.out, "wb") as f:
            f.write(data)
    return 0


def cmd_decode(args) -> int:
    if args.input == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(args.input, "rb") as f:
            data = f.read()
    cont = read_container(data)
    if cont.mode == 1:
        if args.bounds is None:
            raise DataError("container uses sidecar bounds; --bounds required")
        bounds = _parse_ints(_read_text(args.bounds), "bounds")
        if len(bounds) != cont.count:
            raise DataError("bounds file has %d entries for %d values"
                            % (len(bounds), cont.count))
    else:
        if args.bounds is not None:
            raise DataError("container has a constant bound; --bounds not applicable")
        bounds = [cont.n] * cont.count
    r = BitReader(cont.payload)
    layouts: dict[int, bounded.CodeLayout] = {}
    out = []
    for bound in bounds:
        lay = layouts.get(bound)
        if lay is None:
            lay = layouts[bound] = bounded.make_layout(cont.m, cont.m2, bound)
        out.append(bounded.decode(lay, r))
    pos = r.bit_pos
    if len(cont.payload) != (pos + 7) // 8:
        raise DataError("payload is %d bytes, expected %d for %d bits"
                        % (len(cont.payload), (pos + 7) // 8, pos))
    if pos % 8 and cont.payload and cont.payload[-1] & ((1 << (8 - pos % 8)) - 1):
        raise DataError("nonzero padding bits in final payload byte")
    text = "".join("%d\n" % v for v in out)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as f:
            f.write(text)
    return 0


def cmd_params(args, parser) -> int:
    if args.p is not None:
        if args.m is not None or args.m2 is not None:
            parser.error("give either --p or --m/--m2, not both")
        try:
            params = bounded.derive_params(args.p)
        except ValueError as e:
            parser.error(str(e))
        m, m2 = params.m, params.m2
    else:
        if args.m is None or args.m2 is None:
            parser.error("either --p or both --m and --m2 are required")
        m, m2 = args.m, args.m2
        if m < 1 or not m < m2 <= 2 * m:
            parser.error("m'' must lie in (m, 2m]")
    print("m = %d" % m)
    print("m'' = %d" % m2)
    if args.n is not None:
        lay = bounded.make_layout(m, m2, args.n)
        print("n = %d" % lay.n)
        print("m' = %d" % lay.m1)
        print("d_t = %d" % lay.d_t)
        print("h = %d" % lay.h)
        print("s = %d" % lay.s)
        print("h' = %d" % lay.h1)
        print("s' = %d" % lay.s1)
        print("e_n = %d" % lay.e_n)
    return 0


def cmd_table(args) -> int:
    params = bounded.derive_params(args.p)
    lay = bounded.layout(params, args.n)
    table = bounded.enumerate_codewords(lay)
    compare = args.compare
    if compare:
        hdepths = huffman_value_depths(args.p, args.n)
        print("value bits length huffman golomb")
    else:
        print("value bits length")
    kraft = Fraction(0)
    for i, cw in table:
        if cw.length:
            kraft += Fraction(1, 2 ** cw.length)
        if compare:
            print("%d %s %d %d %d" % (i, cw.bits() or "-", cw.length,
                                      hdepths[i], golomb_codeword_length(i, params.m)))
        else:
            print("%d %s %d" % (i, cw.bits() or "-", cw.length))
    print("kraft_sum = %s" % kraft)
    if compare:
        print("H = %.6f" % entropy(args.p, args.n))
        print("L = %.6f" % bounded.expected_length(args.p, lay))
        print("L_huffman = %.6f" % huffman_expected_length(args.p, args.n))
        print("L_golomb = %.6f" % golomb_expected_length_bounded(args.p, args.n, params.m))
    return 0


def cmd_eval(args) -> int:
    cfg = ExperimentConfig(num_p=args.num_p, comparison=args.comparison,
                           seed=args.seed, n_draws_per_p=args.draws)
    report = run_experiment(cfg)
    text = emit_report(report, args.format)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as f:
            f.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geomcode",
        description="Prefix coding for geometric run-lengths with a known bound.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_params = sub.add_parser("params", help="show derived code parameters")
    p_params.add_argument("--p", type=float, help="success probability in [0.5, 1)")
    p_params.add_argument("--m", type=int, help="bunch size (with --m2)")
    p_params.add_argument("--m2", type=int, help="tail threshold m'' (with --m)")
    p_params.add_argument("--n", type=int, help="bound; also print the layout")

    p_table = sub.add_parser("table", help="print the full code table")
    p_table.add_argument("--p", type=float, required=True)
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--compare", action="store_true",
                         help="add Huffman/Golomb lengths and expected lengths")

    p_enc = sub.add_parser("encode", help="encode integers into an FGC1 container")
    p_enc.add_argument("--p", type=float, required=True)
    group = p_enc.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="constant bound for all values")
    group.add_argument("--bounds", help="sidecar file with one bound per value")
    p_enc.add_argument("input", nargs="?", default="-",
                       help="newline-separated decimal integers (default stdin)")
    p_enc.add_argument("--out", default="-", help="output container file (default stdout)")

    p_dec = sub.add_parser("decode", help="decode an FGC1 container")
    p_dec.add_argument("input", nargs="?", default="-", help="container file (default stdin)")
    p_dec.add_argument("--bounds", help="sidecar bounds file (mode 1 containers)")
    p_dec.add_argument("--out", default="-", help="output text file (default stdout)")

    p_eval = sub.add_parser("eval", help="run the redundancy evaluation")
    p_eval.add_argument("--comparison", choices=("entropy", "huffman", "golomb"),
                        required=True)
    p_eval.add_argument("--num-p", dest="num_p", type=int, default=10000)
    p_eval.add_argument("--draws", type=int, default=10)
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--format", choices=("csv", "markdown"), default="markdown")
    p_eval.add_argument("--out", default="-")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "params":
            return cmd_params(args, parser)
        if args.command == "table":
            return cmd_table(args)
        if args.command == "encode":
            return cmd_encode(args)
        if args.command == "decode":
            return cmd_decode(args)
        if args.command == "eval":
            return cmd_eval(args)
    except DataError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    return 2


if __name__ == "__main__":
    sys.exit(main())
