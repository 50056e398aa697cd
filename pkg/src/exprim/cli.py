"""Command-line interface, file formats, and the bundled-corpus runner.

Formats (line-based ASCII, '#' comments and blank lines ignored on read,
never written):

  .g2m   matrix group: 'dim D', optional 'order N', optional 'name STR',
         then per generator a 'gen' line followed by D rows of D chars
         from {0,1}; row i is the image of basis vector i, character j is
         the coefficient of basis vector j (row-vector convention).
  .perm  permutation group: 'points N', then per generator a 'gen' line
         followed by one line of N space-separated 1-based images.
  .cls   class data: 'dim D', 'horder-exp P/Q', then lines
         'class LABEL order R size S fixdim F'.

Exit codes: 0 when all verdicts match any --expect assertions, 1 on a
mismatch, 2 on usage or resource errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ExprimError
from .gf2 import GF2Matrix, JordanType, tensor_jordan_involutions
from .groups import (
    ClassData,
    ClassRecord,
    MatrixGroup,
    build_classical,
    build_deleted_perm_module,
    build_semilinear,
    group_order,
    perm_matrix,
    prime_order_class_data,
    semilinear_report,
)

__all__ = [
    "main",
    "load_group",
    "save_group",
    "serialize_group",
    "load_perms",
    "save_perms",
    "load_class_data",
    "save_class_data",
    "data_path",
]


# ---------------------------------------------------------------------------
# file formats


def _content_lines(text: str) -> list:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def serialize_group(G: MatrixGroup) -> str:
    """Canonical form: dim, order (if known), name (if set), generators."""
    lines = [f"dim {G.dim}"]
    if G.order is not None:
        lines.append(f"order {G.order}")
    if G.name:
        lines.append(f"name {G.name}")
    for g in G.generators:
        lines.append("gen")
        for r in g.rows:
            lines.append("".join("1" if (r >> j) & 1 else "0" for j in range(G.dim)))
    return "\n".join(lines) + "\n"


def save_group(G: MatrixGroup, path: str):
    with open(path, "w") as f:
        f.write(serialize_group(G))


def load_group(path: str) -> MatrixGroup:
    from .errors import FormatError

    lines = _content_lines(open(path).read())
    if not lines or not lines[0].startswith("dim "):
        raise FormatError(f"{path}: expected leading 'dim D' line")
    dim = int(lines[0].split()[1])
    order = None
    name = None
    i = 1
    while i < len(lines) and not lines[i] == "gen":
        key, _, val = lines[i].partition(" ")
        if key == "order":
            order = int(val)
        elif key == "name":
            name = val
        else:
            raise FormatError(f"{path}: unexpected line {lines[i]!r}")
        i += 1
    gens = []
    while i < len(lines):
        if lines[i] != "gen":
            raise FormatError(f"{path}: expected 'gen', got {lines[i]!r}")
        rows = lines[i + 1:i + 1 + dim]
        if len(rows) != dim or any(len(r) != dim or set(r) - {"0", "1"} for r in rows):
            raise FormatError(f"{path}: generator needs {dim} rows of {dim} binary chars")
        gens.append(GF2Matrix.from_rows01(rows))
        i += 1 + dim
    if not gens:
        raise FormatError(f"{path}: no generators")
    return MatrixGroup(dim, tuple(gens), order=order, name=name,
                       order_declared=order is not None)


def save_perms(perms: Sequence[Sequence[int]], path: str):
    n = len(perms[0])
    lines = [f"points {n}"]
    for p in perms:
        lines.append("gen")
        lines.append(" ".join(str(x + 1) for x in p))
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def load_perms(path: str) -> list:
    from .errors import FormatError

    lines = _content_lines(open(path).read())
    if not lines or not lines[0].startswith("points "):
        raise FormatError(f"{path}: expected leading 'points N' line")
    n = int(lines[0].split()[1])
    perms = []
    i = 1
    while i < len(lines):
        if lines[i] != "gen":
            raise FormatError(f"{path}: expected 'gen', got {lines[i]!r}")
        imgs = [int(x) - 1 for x in lines[i + 1].split()]
        if sorted(imgs) != list(range(n)):
            raise FormatError(f"{path}: line is not a permutation of 1..{n}")
        perms.append(imgs)
        i += 2
    if not perms:
        raise FormatError(f"{path}: no generators")
    return perms


def save_class_data(data: ClassData, path: str):
    lines = [f"dim {data.dim}",
             f"horder-exp {data.h_exp.numerator}/{data.h_exp.denominator}"]
    for r in data.records:
        lines.append(f"class {r.label} order {r.order} size {r.size} fixdim {r.fix_dim}")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def load_class_data(path: str) -> ClassData:
    from .errors import FormatError

    lines = _content_lines(open(path).read())
    if len(lines) < 2 or not lines[0].startswith("dim ") \
            or not lines[1].startswith("horder-exp "):
        raise FormatError(f"{path}: expected 'dim D' then 'horder-exp P/Q'")
    dim = int(lines[0].split()[1])
    p, _, q = lines[1].split()[1].partition("/")
    h_exp = Fraction(int(p), int(q) if q else 1)
    records = []
    for line in lines[2:]:
        tok = line.split()
        if len(tok) != 8 or tok[0] != "class" or tok[2] != "order" \
                or tok[4] != "size" or tok[6] != "fixdim":
            raise FormatError(f"{path}: bad class line {line!r}")
        records.append(ClassRecord(tok[1], int(tok[3]), int(tok[5]), int(tok[7])))
    return ClassData(dim, tuple(records), h_exp)


def data_path(name: str) -> str:
    """Path of a bundled corpus file."""
    return os.path.join(os.path.dirname(__file__), "data", name)


# ---------------------------------------------------------------------------
# commands


def _threads() -> int:
    env = os.environ.get("EXPRIM_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _cmd_ep_check(args) -> int:
    from .action import is_extremely_primitive

    G = load_group(args.group)
    v = is_extremely_primitive(G)
    detail = ""
    if v.reason == "imprimitive-orbit":
        detail = f" orbit={v.orbit_label} blocksize={v.block_size}"
    print(f"RESULT: EP={'true' if v.is_ep else 'false'} reason={v.reason}{detail}")
    for i, rep in enumerate(v.per_orbit):
        stab = rep.stabiliser_order if rep.stabiliser_order else "?"
        print(f"  orbit {i}: size={rep.size} primitive={rep.primitive} stabiliser={stab}")
    if args.expect:
        want = args.expect == "ep"
        return 0 if v.is_ep == want else 1
    return 0


def _cmd_orbits(args) -> int:
    from .action import orbits_on_nonzero

    G = load_group(args.group)
    dec = orbits_on_nonzero(G)
    sizes = ",".join(str(s) for s in sorted(dec.sizes))
    print(f"RESULT: orbits={len(dec.sizes)} sizes={sizes}")
    return 0


def _cmd_regular(args) -> int:
    from .regorbit import counting_bound, fixed_space_cover, regular_orbit_exact

    G = load_group(args.group)
    if args.method == "exact":
        exists, witness = regular_orbit_exact(G)
        wit = f" witness={witness.to01()}" if witness else ""
        print(f"RESULT: regular-orbit={'true' if exists else 'false'}{wit}")
        verdict = exists
    elif args.method == "cover":
        covered = fixed_space_cover(G)
        # covered by fixed spaces <=> no regular orbit
        print(f"RESULT: fixed-space-cover={'true' if covered else 'false'} "
              f"regular-orbit={'false' if covered else 'true'}")
        verdict = not covered
    else:
        if args.classdata:
            data = load_class_data(args.classdata)
        else:
            data = prime_order_class_data(G)
        res = counting_bound(data, G.dim)
        print(f"RESULT: counting-bound={res}")
        verdict = res == "regular-orbit-certified"
    if args.expect:
        want = args.expect == "regular"
        return 0 if verdict == want else 1
    return 0


def _parse_ell_range(spec: str) -> list:
    if ".." in spec:
        a, b = spec.split("..")
        return list(range(int(a), int(b) + 1))
    return [int(spec)]


def _cmd_bound(args) -> int:
    from .bounds import certify_named_bound, tail_certify

    if (args.d is None) == (args.ell is None):
        raise ExprimError("bound needs exactly one of --d or --ell")
    params = [args.d] if args.d is not None else _parse_ell_range(args.ell)
    report = certify_named_bound(args.name, params)
    ok = True
    for p, verdict, claimed in report.results:
        note = "" if claimed is None else f" claimed={claimed}"
        print(f"RESULT: {args.name}({p})={verdict}{note}")
        if args.expect and verdict != args.expect:
            ok = False
    if args.tail:
        t = tail_certify(args.name, params[0])
        print(f"RESULT: {args.name} tail from {params[0]}: {t}")
        if args.expect == "holds" and t != "certified":
            ok = False
    return 0 if ok else 1


def _cmd_weyl(args) -> int:
    from .weyl import Weight, weyl_orbit_size

    w = Weight.from_bits(args.ell, args.coeffs)
    print(f"RESULT: {weyl_orbit_size(w)}")
    return 0


def _cmd_weyl_floor(args) -> int:
    from .weyl import unitary_dim_floor_check

    r = unitary_dim_floor_check(args.ell)
    print(f"RESULT: minimal-k={r.minimal_k} floor={r.floor} ok={'true' if r.ok else 'false'}")
    return 0 if r.ok else 1


def _cmd_jordan(args) -> int:
    factors = []
    for part in args.factors.split("|"):
        blocks = tuple(sorted((int(x) for x in part.split(",")), reverse=True))
        factors.append(JordanType(blocks))
    if args.pad_identity:
        factors.append(JordanType((1,) * args.pad_identity))
    jt = tensor_jordan_involutions(factors)
    print(f"RESULT: jordan={jt} dim={jt.dim} fixdim={jt.fixed_dim}")
    return 0


def _cmd_chop(args) -> int:
    from .meataxe import chop

    perms = load_perms(args.perm)
    mats = [perm_matrix(p) for p in perms]
    pieces = chop(mats)
    dims = ",".join(str(c.dim) for c in pieces)
    print(f"RESULT: constituents={dims}")
    return 0


def _cmd_irreducible(args) -> int:
    from .meataxe import is_irreducible

    G = load_group(args.group)
    irr, witness = is_irreducible(list(G.generators))
    extra = "" if irr else f" witness-dim={len(witness)}"
    print(f"RESULT: irreducible={'true' if irr else 'false'}{extra}")
    return 0


def _cmd_make(args) -> int:
    fam = args.family
    if fam in ("gl", "sp", "omega+", "omega-", "o+", "o-"):
        if args.dim is None:
            raise ExprimError(f"make --family {fam} needs --dim")
        G = build_classical(fam, args.dim)
    elif fam == "deleted-perm":
        if not args.perm:
            raise ExprimError("make --family deleted-perm needs --perm FILE")
        perms = load_perms(args.perm)
        G = build_deleted_perm_module(perms, name=f"deleted-perm({args.perm})")
        group_order(G)
    elif fam == "semilinear":
        if args.dim is None or args.r is None or args.e is None:
            raise ExprimError("make --family semilinear needs --dim, --r, --e")
        rep = semilinear_report(args.dim, args.r, args.e)
        G = build_semilinear(args.dim, args.r, args.e)
        notes = []
        if not rep["prime"]:
            notes.append("r is not prime")
        if not rep["ppd"]:
            notes.append("r is not a primitive prime divisor")
        if notes:
            print(f"note: {'; '.join(notes)}")
    else:
        raise ExprimError(f"unknown family {fam!r}")
    save_group(G, args.out)
    print(f"RESULT: wrote {args.out} dim={G.dim} order={G.order}")
    return 0


def _cmd_corpus(args) -> int:
    from .corpus import run_corpus

    return run_corpus(args.run, threads=_threads())


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="exprim",
        description="verification toolkit for extreme primitivity over GF(2)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ep-check", help="decide extreme primitivity of V:H")
    p.add_argument("--group", required=True)
    p.add_argument("--expect", choices=["ep", "not-ep"])
    p.set_defaults(func=_cmd_ep_check)

    p = sub.add_parser("orbits", help="orbit sizes on nonzero vectors")
    p.add_argument("--group", required=True)
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("regular", help="regular-orbit certification")
    p.add_argument("--group", required=True)
    p.add_argument("--method", required=True, choices=["exact", "cover", "bound"])
    p.add_argument("--classdata")
    p.add_argument("--expect", choices=["regular", "no-regular"])
    p.set_defaults(func=_cmd_regular)

    p = sub.add_parser("bound", help="certify a named power-of-two inequality")
    p.add_argument("--name", required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--ell")
    p.add_argument("--tail", action="store_true")
    p.add_argument("--expect", choices=["holds", "fails"])
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("weyl", help="Weyl orbit size of a 0/1 weight")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--coeffs", required=True)
    p.set_defaults(func=_cmd_weyl)

    p = sub.add_parser("weyl-floor", help="symmetric-weight dimension floor check")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=_cmd_weyl_floor)

    p = sub.add_parser("jordan", help="Jordan type of a tensor of involutions")
    p.add_argument("--factors", required=True,
                   help="factors as block lists, e.g. '2,1,1|2,1,1'")
    p.add_argument("--pad-identity", type=int, default=0)
    p.set_defaults(func=_cmd_jordan)

    p = sub.add_parser("chop", help="composition factors of a permutation module")
    p.add_argument("--perm", required=True)
    p.set_defaults(func=_cmd_chop)

    p = sub.add_parser("irreducible", help="irreducibility of a matrix group module")
    p.add_argument("--group", required=True)
    p.set_defaults(func=_cmd_irreducible)

    p = sub.add_parser("make", help="build a standard group and write a .g2m file")
    p.add_argument("--family", required=True,
                   choices=["gl", "sp", "omega+", "omega-", "o+", "o-",
                            "deleted-perm", "semilinear"])
    p.add_argument("--dim", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--perm")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_make)

    p = sub.add_parser("corpus", help="run the bundled verification corpus")
    p.add_argument("--run", required=True, choices=["all", "ep", "bounds"])
    p.set_defaults(func=_cmd_corpus)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return args.func(args)
    except ExprimError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
