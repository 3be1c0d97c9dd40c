"""Batch command line for centralizer computations over R/I.

Usage:
    python -m imatrix preimage --spec problem.json
    python -m imatrix imatrix '{"ring": "Zx", "ideal": ["40x^3", "16x^4"],
                                "matrix": [["7x^2", "24x^5+8x^4+4x^2"], ["14x", "0"]]}'

Problem JSON keys: ring ("Z" | "Fp_x" | "Zx" | "Fp_xy"), p (for F_p rings),
ideal (list of polynomials), matrix (grid of polynomials), element (one
polynomial), candidate (a matrix to decompose), count (samples for verify).

Exit codes:
    0: computed (positive result)
    1: computed negative result (refuted, not a member, mismatches)
    2: unknown within budget
    3: input error
"""
from __future__ import annotations

import argparse
import json
import sys

from .classify import classify
from .ideals import TermIdeal, UnsupportedIdealError
from .lifting import i_preimage, is_i_invertible, try_inverse
from .matrices import format_matrix, mat, reduce_matrix
from .oracle import MATRIX_GUARD, FiniteRingSpec, compare, sample_commuting
from .theorem import (LAYOUTS, DecompositionCertificate, NotMember, counterexample_44,
                      counterexample_45, decompose, theorem41_description)
from .ufd import Ring

EXIT_OK, EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3

COMMANDS = ("preimage", "invertible", "i-invertible", "imatrix", "centralizer",
            "decompose", "verify", "demo-counterexamples")


class InputError(ValueError):
    pass


def load_problem(spec_file=None, inline=None):
    if spec_file is not None:
        try:
            with open(spec_file) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {spec_file}: {exc.strerror}") from None
    elif inline is not None:
        text = inline
    else:
        raise InputError("a problem is required (--spec FILE or inline JSON)")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"JSON error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError("the problem must be a JSON object")
    return data


class Problem:
    def __init__(self, data):
        self.data = data
        kind = data.get("ring")
        try:
            self.ring = Ring(kind, data.get("p"))
        except (ValueError, TypeError) as exc:
            raise InputError(f"ring: {exc}") from None
        gens = data.get("ideal")
        if not isinstance(gens, list) or not gens:
            raise InputError("ideal must be a nonempty list of polynomials")
        try:
            self.ideal = TermIdeal(self.ring, [self.poly(g, "ideal") for g in gens])
        except UnsupportedIdealError as exc:
            raise InputError(f"ideal: {exc}") from None
        except ValueError as exc:
            raise InputError(f"ideal: {exc}") from None

    def poly(self, text, where):
        if isinstance(text, int):
            text = str(text)
        if not isinstance(text, str):
            raise InputError(f"{where}: expected a polynomial string, got {text!r}")
        try:
            return self.ring(text)
        except ValueError as exc:
            raise InputError(f"{where}: {text!r}: {exc}") from None

    def element(self, key="element"):
        if key not in self.data:
            raise InputError(f"missing key {key!r}")
        return self.poly(self.data[key], key)

    def matrix(self, key="matrix", size=None):
        grid = self.data.get(key)
        if not isinstance(grid, list) or not grid or any(
                not isinstance(r, list) or len(r) != len(grid) for r in grid):
            raise InputError(f"{key} must be a square grid of polynomials")
        if size is not None and len(grid) != size:
            raise InputError(f"{key} must be {size}x{size}")
        return mat([[self.poly(x, f"{key}[{i}][{j}]") for j, x in enumerate(row)]
                    for i, row in enumerate(grid)])


def _s(x):
    return str(x) if x is not None else None


def _inverse_json(res):
    out = {"residue": _s(res.residue), "inverse": _s(res.inverse), "tag": res.tag}
    if res.detail:
        out["detail"] = res.detail
    cert = res.certificate
    if cert is not None:
        out["certificate"] = {"l": cert.l, "unit": str(cert.unit),
                              "factors": [str(f) for f in cert.factors],
                              "residual": str(cert.residual), "verified": cert.verify()}
    return out


def _preimage_json(pre):
    return {"r": str(pre.r), "delta": str(pre.delta),
            "trace": [{"prime": str(s.prime), "q": s.q, "m": s.m,
                       "generator": _s(s.generator), "cofactor": _s(s.cofactor)}
                      for s in pre.trace]}


def _verdict_json(v):
    out = {"verdict": v.status, "audit": list(v.audit)}
    if v.reason:
        out["reason"] = v.reason
    c = v.certificate
    if c is not None:
        out["certificate"] = {"pair": list(c.pair_names), "t": str(c.t),
                              "alpha": str(c.alpha), "beta": str(c.beta),
                              "verified": c.verify()}
    return out


def _view_json(view):
    return {"annihilates": [str(r) for r in view.annihilated],
            "closed_form": ([str(g) for g in view.closed_form.generators]
                            if view.closed_form is not None else None)}


def _description_json(desc, variant):
    out = {"case": desc.case,
           "m_R": _s(desc.m_R), "m_k": _s(desc.m_k),
           "B_doubleprime": (format_matrix(desc.B_doubleprime)
                             if desc.B_doubleprime is not None else None),
           "variant": variant,
           "blocks": [[_view_json(v) for v in row] for row in desc.grid(variant)]}
    if desc.verdict is not None:
        out["classifier"] = _verdict_json(desc.verdict)
    return out


def _decomposition_json(res):
    if isinstance(res, DecompositionCertificate):
        return {"member": True, "v": str(res.v_hat), "d": str(res.d_hat),
                "K": format_matrix(res.K_hat), "B_doubleprime": format_matrix(res.B_doubleprime),
                "t": _s(res.t), "w": _s(res.w), "m_k": _s(res.m_k),
                "variant": res.variant, "verified": res.verify()}
    return {"member": False if isinstance(res, NotMember) else None, "reason": res.reason}


def _finite_spec(prob):
    """Exhaustive test bed for Z_n and F_p[x]/<x^m> within the enumeration guard."""
    R, I = prob.ring, prob.ideal
    if R.kind == "Z":
        size = I.k.int_value()
        if size ** 4 <= MATRIX_GUARD:
            return FiniteRingSpec.zn(size)
    elif R.kind == "Fp_x" and I.k.is_term():
        if R.p ** (4 * I.k.degree()) <= MATRIX_GUARD:
            return FiniteRingSpec.fpx_trunc(R.p, I.k.degree())
    return None


def run(command, prob: Problem, args):
    """Returns (exit code, report dict)."""
    if command == "demo-counterexamples":
        f44, f45a, f45b = counterexample_44(), counterexample_45(3), counterexample_45(4)
        out = {"command": command,
               "counterexample_44": {"B": format_matrix(f44.B), "witness": format_matrix(f44.witness),
                                     "decompose": _decomposition_json(f44.decomposition),
                                     "classifier": f44.verdict.status, "checks": f44.checks},
               "counterexample_45": [{"n": len(f.B), "witness": format_matrix(f.witness),
                                      "checks": f.checks} for f in (f45a, f45b)]}
        return EXIT_OK, out
    I = prob.ideal
    if command == "preimage":
        e = prob.element()
        pre = i_preimage(I.residue(e), e)
        return EXIT_OK, {"command": command, "residue": str(pre.residue), **_preimage_json(pre)}
    if command == "invertible":
        res = try_inverse(I.residue(prob.element()), args.budget)
        code = EXIT_OK if res.found else EXIT_NEGATIVE if res.refuted else EXIT_UNKNOWN
        return code, {"command": command, **_inverse_json(res)}
    if command == "i-invertible":
        e = prob.element()
        v = is_i_invertible(I.residue(e), e, args.budget)
        code = {"Yes": EXIT_OK, "No": EXIT_NEGATIVE}.get(v.verdict, EXIT_UNKNOWN)
        out = {"command": command, "verdict": v.verdict, "reason": v.reason,
               "preimage": _preimage_json(v.preimage)}
        if v.inverse is not None:
            out["inverse"] = _inverse_json(v.inverse)
        return code, out
    L = prob.matrix("matrix", 2)
    Bhat = reduce_matrix(L, I)
    if command == "imatrix":
        v = classify(Bhat, L, args.budget)
        code = {"Certified": EXIT_OK, "Refuted": EXIT_NEGATIVE}.get(v.status, EXIT_UNKNOWN)
        return code, {"command": command, **_verdict_json(v)}
    desc = theorem41_description(Bhat, lift=L, budget=args.budget)
    base_code = {"Certified": EXIT_OK, "Refuted": EXIT_NEGATIVE}.get(
        desc.verdict.status if desc.verdict else "Certified", EXIT_UNKNOWN)
    if desc.case == "Full":
        base_code = EXIT_OK
    if command == "centralizer":
        return base_code, {"command": command, **_description_json(desc, args.variant)}
    if command == "decompose":
        A = reduce_matrix(prob.matrix("candidate", 2), I)
        res = decompose(A, desc, args.variant, args.budget)
        code = (EXIT_OK if isinstance(res, DecompositionCertificate)
                else EXIT_NEGATIVE if isinstance(res, NotMember) else EXIT_UNKNOWN)
        return code, {"command": command, **_decomposition_json(res)}
    if command == "verify":
        spec = _finite_spec(prob)
        if spec is not None:
            rep = compare(desc, spec, args.variant, seed=args.seed)
            code = EXIT_OK if rep.ok else EXIT_NEGATIVE
            return code, {"command": command, "mode": "exhaustive", **rep.to_json()}
        count = int(prob.data.get("count", 100))
        bad = []
        for A in sample_commuting(desc, count, args.seed, args.variant):
            res = decompose(A, desc, args.variant, args.budget)
            if not isinstance(res, DecompositionCertificate):
                bad.append(format_matrix(A))
        code = EXIT_OK if not bad else EXIT_NEGATIVE
        return code, {"command": command, "mode": "sampled", "seed": args.seed,
                      "samples": count, "failures": bad}
    raise InputError(f"unknown command {command!r}")


def _human(report, indent=0):
    lines = []
    pad = "  " * indent
    for key, val in report.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_human(val, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(val, sort_keys=True)}")
    return lines


def build_parser():
    ap = argparse.ArgumentParser(prog="imatrix",
                                 description="Centralizers of 2x2 matrices over factor rings R/I")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("problem", nargs="?", help="inline JSON problem")
    ap.add_argument("--spec", metavar="FILE", help="problem JSON file")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--variant", type=int, choices=sorted(LAYOUTS), default=71)
    ap.add_argument("--budget", type=int, default=None, help="degree budget for bounded searches")
    ap.add_argument("--json", action="store_true", help="emit a JSON report")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        prob = None
        if args.command != "demo-counterexamples" or args.spec or args.problem:
            prob = Problem(load_problem(args.spec, args.problem))
        code, report = run(args.command, prob, args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(_human(report)))
    return code


if __name__ == "__main__":
    sys.exit(main())
