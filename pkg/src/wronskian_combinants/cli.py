"""Command line entry point.

Every command prints one JSON document on stdout.  Failures go to stderr as
``{"error": <code>, "message": <text>}`` with exit status 2 (parse),
3 (precondition) or 4 (verification failure / not in image).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import suite
from .binform import BinaryForm, multiply
from .combinant import (express_in_basis, gamma, kernel, psi_matrix,
                        recover_subspace, verify_keyprop, wronskian_combinants)
from .errors import IdentityViolation, NotInImageError, NotInSpanError
from .grassmann import canonicalize, pluecker_point
from .sampling import random_independent_forms, rng_for
from .serialize import (ParseError, combinants_from_json, combinants_to_json,
                        form_to_json, parse_form, parse_rational, rational_str)
from .transvect import transvectant
from .wronskian import wronskian

EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY = 2, 3, 4


class VerificationFailed(Exception):
    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


def _int(text):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}") from None


def _forms(args, texts):
    return [parse_form(t, args.binomial) for t in texts]


def _read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON: {exc}") from exc
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc


def cmd_transvect(args):
    E, F = _forms(args, [args.E, args.F])
    return form_to_json(transvectant(E, F, _int(args.k)), args.binomial)


def cmd_wronskian(args):
    return form_to_json(wronskian(_forms(args, args.forms)), args.binomial)


def cmd_combinants(args):
    return combinants_to_json(wronskian_combinants(_forms(args, args.forms)), args.binomial)


def cmd_psi_kernel(args):
    E = combinants_from_json(_read_json(args.efile), args.binomial)
    M = psi_matrix(E)
    rk = M.rank()
    basis = [BinaryForm(v, E.d) for v in kernel(M)]
    return {
        "rank": rk,
        "kernel_dimension": len(basis),
        "kernel": [form_to_json(f, args.binomial) for f in basis],
        "rank_bound": E.d - E.r + 1,
        "in_image": rk <= E.d - E.r + 1,
    }


def cmd_recover(args):
    E = combinants_from_json(_read_json(args.efile), args.binomial)
    sub, k = recover_subspace(E)
    return {
        "r": sub.r,
        "d": sub.d,
        "subspace": [form_to_json(f, args.binomial) for f in sub.basis],
        "k": rational_str(k),
    }


def cmd_gamma(args):
    B = parse_form(args.B, args.binomial)
    return form_to_json(gamma(B, _forms(args, args.forms), _int(args.p)), args.binomial)


def cmd_verify_keyprop(args):
    B = parse_form(args.B, args.binomial)
    report = verify_keyprop(B, _forms(args, args.forms))
    out = dict(report._asdict(), passed=report.all())
    if not report.all():
        raise VerificationFailed(out)
    return out


def cmd_embed(args):
    P = pluecker_point(canonicalize(_forms(args, args.forms)))
    return {
        "r": P.r,
        "d": P.d,
        "orders": {str(q): n for q, n in P.orders},
        "vector": [str(v) for v in P.vector],
    }


def cmd_verify_suite(args):
    results = suite.run_suite(args.seed, args.cases, args.rmax, args.dmax, jobs=args.jobs)
    out = {
        "seed": args.seed,
        "cases": args.cases,
        "rmax": args.rmax,
        "dmax": args.dmax,
        "checks": {r.name: {"passed": r.passed, "failures": r.failures} for r in results},
        "passed": all(r.passed for r in results),
    }
    if not out["passed"]:
        raise VerificationFailed(out)
    return out


def quintic_identity(seed, cases=1):
    """Coefficients of C_0 (A1, A2)_5 in the basis C_2^2, (C_0, C_0)_4, (C_0, C_2)_2."""
    found = []
    for i in range(cases):
        A1, A2 = random_independent_forms(rng_for(seed, "quintic", i), 2, 5)
        C = wronskian_combinants([A1, A2])
        C0, C2 = C[0], C[2]
        target = multiply(C0, transvectant(A1, A2, 5))
        cands = [multiply(C2, C2), transvectant(C0, C0, 4), transvectant(C0, C2, 2)]
        found.append(express_in_basis(target, cands))
    return found


def cmd_quintic_identity(args):
    found = quintic_identity(args.seed, args.cases)
    coeffs = {tuple(e.coefficients) for e in found}
    out = {
        "seed": args.seed,
        "basis": ["C2^2", "(C0,C0)_4", "(C0,C2)_2"],
        "coefficients": [rational_str(c) for c in found[0].coefficients],
        "consistent": len(coeffs) == 1,
        "independent": all(e.independent for e in found),
    }
    if len(coeffs) != 1:
        raise VerificationFailed(out)
    return out


def build_parser():
    p = argparse.ArgumentParser(
        prog="wronskian-combinants",
        description="Exact transvectants, Wronskians and Wronskian combinants of binary forms.")
    p.add_argument("--binomial", action="store_true",
                   help="read and write coefficient lists as binomially weighted a_j")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("transvect", help="k-th transvectant (E, F)_k")
    s.add_argument("E"); s.add_argument("F"); s.add_argument("k")
    s.set_defaults(func=cmd_transvect)

    s = sub.add_parser("wronskian", help="Wronskian of forms of equal order")
    s.add_argument("forms", nargs="+")
    s.set_defaults(func=cmd_wronskian)

    s = sub.add_parser("combinants", help="Wronskian combinants C_q")
    s.add_argument("forms", nargs="+")
    s.set_defaults(func=cmd_combinants)

    s = sub.add_parser("psi-kernel", help="kernel and rank of psi_E for a combinant file")
    s.add_argument("efile", help="JSON file as written by 'combinants' ('-' for stdin)")
    s.set_defaults(func=cmd_psi_kernel)

    s = sub.add_parser("recover", help="subspace and scalar k with E = k C(subspace)")
    s.add_argument("efile")
    s.set_defaults(func=cmd_recover)

    s = sub.add_parser("gamma", help="the alternating sum Gamma_p(B; A_1..A_r)")
    s.add_argument("B"); s.add_argument("p"); s.add_argument("forms", nargs="+")
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("verify-keyprop", help="check the three Gamma_p identities")
    s.add_argument("B"); s.add_argument("forms", nargs="+")
    s.set_defaults(func=cmd_verify_keyprop)

    s = sub.add_parser("embed", help="normalized projective point of the combinants")
    s.add_argument("forms", nargs="+")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("verify-suite", help="run every randomized exact check")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=100)
    s.add_argument("--rmax", type=int, default=4)
    s.add_argument("--dmax", type=int, default=8)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify_suite)

    s = sub.add_parser("quintic-identity", help="reproduce t_5 C_0 = 50 C_2^2 - 15 (C_0,C_0)_4 - 40 (C_0,C_2)_2")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=1)
    s.set_defaults(func=cmd_quintic_identity)
    return p


def _fail(code, status, message):
    print(json.dumps({"error": code, "message": message}), file=sys.stderr)
    return status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except ParseError as exc:
        return _fail("parse", EXIT_PARSE, str(exc))
    except VerificationFailed as exc:
        print(json.dumps(exc.payload, indent=2))
        return _fail("verification", EXIT_VERIFY, "one or more exact checks failed")
    except NotInImageError as exc:
        return _fail("not-in-image", EXIT_VERIFY, str(exc))
    except NotInSpanError as exc:
        return _fail("not-in-span", EXIT_VERIFY, str(exc))
    except IdentityViolation as exc:
        return _fail("identity-violation", EXIT_VERIFY, str(exc))
    except ValueError as exc:
        return _fail("precondition", EXIT_PRECONDITION, str(exc))
    print(json.dumps(out, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
