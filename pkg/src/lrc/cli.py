"""Command-line front end: ``lrc bound|build|encode|decode|verify``."""

import argparse
import sys

from . import codec, linalg, verify
from .constructions import LrcParams, ParameterError, Variant, build, claimed_distance, report
from .gf import FieldError, field_new, parse_field

SPEC_KEYS = ("m", "n", "ell", "g", "field", "variant")


class UsageError(Exception):
    pass


def parse_spec_text(text):
    """Key/value code spec: one ``key = value`` (or ``key: value``) per line."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for sep in ("=", ":"):
            if sep in line:
                key, value = (s.strip() for s in line.split(sep, 1))
                break
        else:
            parts = line.split(None, 1)
            if len(parts) != 2:
                raise UsageError(f"spec line {lineno}: expected 'key = value'")
            key, value = parts
        key = key.lower()
        if key == "l":
            key = "ell"
        if key not in SPEC_KEYS:
            raise UsageError(f"spec line {lineno}: unknown key {key!r}")
        values[key] = value
    return values


def _params_from(values):
    missing = [k for k in SPEC_KEYS if values.get(k) is None]
    if missing:
        raise UsageError("missing code parameters: " + ", ".join(missing))
    try:
        ints = {k: int(values[k]) for k in ("m", "n", "ell", "g")}
    except ValueError as exc:
        raise UsageError(f"bad integer parameter: {exc}") from None
    return LrcParams(field=parse_field(str(values["field"])),
                     variant=Variant.parse(str(values["variant"])), **ints)


def params_from_args(args):
    values = {}
    if getattr(args, "spec", None):
        with open(args.spec) as fh:
            values.update(parse_spec_text(fh.read()))
    for key in SPEC_KEYS:
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    return _params_from(values)


def _code_from_args(args):
    params = params_from_args(args)
    return codec.LrcCode(params, force=getattr(args, "force", False))


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_bound(args):
    m, n, ell, g = args.m, args.n, args.ell, args.g
    # field and variant do not enter the bound
    params = LrcParams(m, n, ell, g, field_new(1))
    rep = report(params)
    print(f"code: m={m} n={n} ell={ell} g={g}")
    print(f"[length, dimension]: [{rep.length}, {rep.dimension}]")
    print(f"locality: {rep.locality}")
    print(f"bound: d <= {rep.bound_d}")
    print(f"ell + g < n: {'yes' if ell + g < n else 'no'}")
    return 0


def cmd_build(args):
    params = params_from_args(args)
    H = build(params, force=args.force)
    _write(args.out, linalg.format_matrix(H))
    info = sys.stdout if args.out not in (None, "-") else sys.stderr
    f = params.field
    print(f"shape: {H.rows}x{H.cols}", file=info)
    print(f"field: {f.name} poly={f.poly:#x}", file=info)
    claim = claimed_distance(params)
    if claim is None:
        print("optimality claim: none (outside the construction's regime)", file=info)
    else:
        print(f"claimed distance: {claim}", file=info)
    return 0


def cmd_encode(args):
    code = _code_from_args(args)
    data = codec.parse_word(_read(args.data), code.field, code.dimension)
    _write(args.out, codec.format_word(codec.encode(code, data)))
    return 0


def _erasures(args, code):
    n, m = code.params.n, code.params.m
    positions = []
    if args.erasures:
        positions += codec.ErasurePattern.parse(args.erasures, code.length).positions
    if args.erasures_rc:
        positions += codec.ErasurePattern.parse_rc(args.erasures_rc, n, m).positions
    return codec.ErasurePattern(positions, code.length)


def cmd_decode(args):
    code = _code_from_args(args)
    received = codec.parse_word(_read(args.received), code.field, code.length)
    pattern = _erasures(args, code)
    try:
        word = codec.decode(code, received, pattern)
    except codec.UnrecoverableError as exc:
        print("unrecoverable", file=sys.stderr)
        print("dependent columns: " + ",".join(map(str, exc.witness)), file=sys.stderr)
        return 1
    _write(args.out, codec.format_word(word))
    return 0


def cmd_verify(args):
    code = _code_from_args(args)
    rep = verify.verify_code(code, delta=args.distance, pmds=args.pmds, sd=args.sd,
                             jobs=args.jobs)
    sys.stdout.write(rep.format())
    return 0 if rep.ok else 1


def _add_code_args(p, with_force=True):
    p.add_argument("--spec", help="code spec file (key = value lines)")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--field", help="field name such as gf2^4")
    p.add_argument("--variant", help="gc, gc-ext, diag or diag-ext")
    if with_force:
        p.add_argument("--force", action="store_true",
                       help="build even when the field-size condition fails")


def make_parser():
    parser = argparse.ArgumentParser(prog="lrc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="length, dimension and distance bound")
    for name in ("m", "n", "ell", "g"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("build", help="write a parity-check matrix in exponent form")
    _add_code_args(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("encode", help="encode k data symbols into a codeword")
    _add_code_args(p)
    p.add_argument("--data", required=True, help="file of k symbols ('-' for stdin)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="fill in erased symbols of a received word")
    _add_code_args(p)
    p.add_argument("--received", required=True, help="file of mn symbols ('-' for stdin)")
    p.add_argument("--erasures", help="comma-separated coordinates, e.g. 3,7,12")
    p.add_argument("--erasures-rc", help="row:col pairs, e.g. 0:2,1:4")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="exhaustive distance and optimality check")
    _add_code_args(p)
    p.add_argument("--distance", type=int, metavar="D",
                   help="only check that the distance is at least D")
    p.add_argument("--pmds", action="store_true")
    p.add_argument("--sd", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError, FieldError) as exc:
        parser.error(str(exc))
    except (codec.CodecError, linalg.MatrixError, verify.BudgetExceeded, OSError) as exc:
        print(f"lrc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
