"""Command-line interface.

Every pipeline stage is a subcommand with machine-readable JSON output
(``--format text`` for human-readable tables).  Exit codes: 0 success,
1 validation error, 2 precision exhaustion.  Commands that produce zero
sets can also render the constellation to an image with ``--plot``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from mpmath import mp

from . import __version__
from .chebyshev import check_chebyshev_identities
from .config import DEFAULT_MAX_DEN, DEFAULT_TRIAL_BOUND, Settings
from .construct import (
    check_split_identity,
    de_moivre_poly,
    family_bruen,
    family_filaseta,
    make_instance,
    radical_split_poly,
    split_cofactor_poly,
)
from .errors import InvalidInstanceError, PrecisionError
from .exact import format_rational
from .galois import (
    brute_factor_oracle,
    classify_galois_group,
    irreducible_by_power_test,
    irreducible_by_rational_root,
    irreducible_by_valuation,
)
from .numeric import DEFAULT_PRECISION_BITS
from .polys import RatPoly
from .zeros import reconstruct_zero, splitting_field_data, zeros_all

_ENV_PRECISION = "DEMOIVRE_PRECISION_BITS"


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; we reserve 2 for precision
    exhaustion, so downgrade usage problems to the validation exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _default_precision() -> int:
    raw = os.environ.get(_ENV_PRECISION)
    if raw:
        try:
            return max(64, int(raw))
        except ValueError:
            pass
    return DEFAULT_PRECISION_BITS


def _add_instance_args(p: _Parser) -> None:
    p.add_argument("--n", type=int, help="odd degree >= 3")
    p.add_argument("--d", type=str, help='rational d, e.g. "26" or "-1/8"')
    p.add_argument("--R", type=str, help='rational R (must not be a square)')
    p.add_argument(
        "--family",
        choices=["filaseta", "bruen"],
        help="use a named parameter family instead of raw n, d, R",
    )
    p.add_argument("--p", type=int, help="family prime degree")
    p.add_argument("--m", type=int, help="filaseta family parameter m >= 2")
    p.add_argument("--s", type=str, help="bruen family scale s")


def _add_common_args(p: _Parser, plot: bool = False) -> None:
    p.add_argument(
        "--precision-bits",
        type=int,
        default=_default_precision(),
        help="working precision in bits (default 192, env %s)" % _ENV_PRECISION,
    )
    p.add_argument("--max-den", type=int, default=DEFAULT_MAX_DEN)
    p.add_argument("--trial-bound", type=int, default=DEFAULT_TRIAL_BOUND)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out", type=str, help="write the report here instead of stdout")
    p.add_argument(
        "--deterministic",
        action="store_true",
        help="suppress the timestamp field so identical runs are byte-identical",
    )
    if plot:
        p.add_argument("--plot", type=str, help="render a zero-constellation image to this file")


def _build_parser() -> _Parser:
    parser = _Parser(prog="demoivre", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    specs = {
        "construct": ("build the polynomial and its companion polynomials", False),
        "identities": ("verify the exact polynomial identities", False),
        "zeros": ("enumerate all zeros with residuals", True),
        "reconstruct": ("rebuild every zero from three of them", True),
        "irreducible": ("decide irreducibility with certificates", False),
        "galois": ("classify the Galois group of the splitting field", False),
        "oracle": ("brute-force exact factorization (small degrees)", False),
        "example": ("run the built-in n=9, d=26, R=675 regression", True),
    }
    for name, (help_text, plot) in specs.items():
        p = sub.add_parser(name, help=help_text)
        if name != "example":
            _add_instance_args(p)
        _add_common_args(p, plot=plot)
        if name == "identities":
            p.add_argument("--n-max", type=int, default=64, help="recurrence identity sweep bound")
        if name == "oracle":
            p.add_argument("--max-n", type=int, default=15, help="degree cap for the oracle")
    return parser


def _resolve_instance(args):
    if args.family == "filaseta":
        if args.p is None or args.m is None:
            raise InvalidInstanceError("--family filaseta needs --p and --m")
        return family_filaseta(args.p, args.m)
    if args.family == "bruen":
        if args.p is None or args.d is None or args.s is None:
            raise InvalidInstanceError("--family bruen needs --p, --d and --s")
        return family_bruen(args.p, Fraction(args.d), Fraction(args.s))
    if args.n is None or args.d is None or args.R is None:
        raise InvalidInstanceError("need --n, --d and --R (or a --family)")
    return make_instance(args.n, Fraction(args.d), Fraction(args.R))


def _settings(args) -> Settings:
    return Settings(
        precision_bits=args.precision_bits,
        max_den=args.max_den,
        trial_bound=args.trial_bound,
    )


def _cmd_construct(args) -> dict:
    inst = _resolve_instance(args)
    return {
        "instance": inst.to_json(),
        "polynomial": de_moivre_poly(inst).to_json(),
        "split_poly": radical_split_poly(inst).to_json(),
        "cofactor_poly": split_cofactor_poly(inst).to_json(),
    }


def _cmd_identities(args) -> dict:
    inst = _resolve_instance(args)
    cheb = check_chebyshev_identities(args.n_max)
    return {
        "instance": inst.to_json(),
        "split_identity": check_split_identity(inst),
        "chebyshev_identities": {
            "n_max": cheb.n_max,
            "all_pass": cheb.all_pass,
            "failures": cheb.failures,
        },
    }


def _cmd_zeros(args) -> dict:
    inst = _resolve_instance(args)
    zs = zeros_all(inst, args.precision_bits)
    sf = splitting_field_data(inst, args.precision_bits)
    payload = {
        "instance": inst.to_json(),
        "precision_bits": zs.precision_bits,
        "orientation": zs.orientation,
        "zeros": [z.to_json()["value"] for z in zs.zeros],
        "max_residual": mp.nstr(zs.max_residual, 8),
        "max_formula_gap": mp.nstr(zs.max_formula_gap, 8),
        "real_count": zs.real_count(),
        "splitting_field": {
            "generator": sf.generator.to_json()["value"],
            "matches_zero_difference": sf.matches_zero_difference,
            "collapses_to_cyclotomic_part": sf.collapses_to_cyclotomic_part,
            "rational_zero": (
                format_rational(sf.rational_zero) if sf.rational_zero is not None else None
            ),
        },
    }
    if getattr(args, "plot", None):
        from .plotting import plot_zero_set

        payload["plot"] = plot_zero_set(
            [complex(z) for z in zs.zeros],
            args.plot,
            title=f"zeros of the degree-{inst.n} polynomial {inst}",
        )
    return payload


def _cmd_reconstruct(args) -> dict:
    inst = _resolve_instance(args)
    zs = zeros_all(inst, args.precision_bits)
    u, u1, un1 = zs.zeros[0], zs.zeros[1], zs.zeros[-1]
    table = []
    recs = []
    with mp.workprec(zs.precision_bits):
        for k in range(1, inst.n):
            rec = reconstruct_zero(u, u1, un1, inst, k)
            recs.append(rec)
            diff = abs(rec.to_mpc() - zs.zeros[k].to_mpc())
            table.append(
                {
                    "k": k,
                    "reconstructed": rec.to_json()["value"],
                    "direct": zs.zeros[k].to_json()["value"],
                    "abs_diff": mp.nstr(diff, 8),
                }
            )
    payload = {
        "instance": inst.to_json(),
        "precision_bits": zs.precision_bits,
        "table": table,
    }
    if getattr(args, "plot", None):
        from .plotting import plot_zero_set

        payload["plot"] = plot_zero_set(
            [complex(z) for z in zs.zeros],
            args.plot,
            title=f"direct vs reconstructed zeros {inst}",
            reconstructed=[complex(z) for z in recs],
        )
    return payload


def _cmd_irreducible(args) -> dict:
    inst = _resolve_instance(args)
    settings = _settings(args)
    power = irreducible_by_power_test(inst, settings)
    payload = {
        "instance": inst.to_json(),
        "power_test": power.to_json(),
        "valuation_test": irreducible_by_valuation(inst, args.trial_bound).to_json(),
    }
    from .exact import is_prime

    if is_prime(inst.n):
        payload["rational_root_test"] = irreducible_by_rational_root(inst).to_json()
    else:
        payload["rational_root_test"] = None
    return payload


def _cmd_galois(args) -> dict:
    inst = _resolve_instance(args)
    cls, verdict = classify_galois_group(inst, _settings(args))
    return {
        "instance": inst.to_json(),
        "classification": cls.to_json(),
        "irreducibility": verdict.to_json(),
    }


def _cmd_oracle(args) -> dict:
    inst = _resolve_instance(args)
    factors = brute_factor_oracle(inst, args.precision_bits, args.max_n)
    return {
        "instance": inst.to_json(),
        "factors": [f.to_json() for f in factors],
        "factors_pretty": [str(f) for f in factors],
        "irreducible": len(factors) == 1,
    }


_EXAMPLE_TOL = 1e-5


def _cmd_example(args) -> dict:
    """Regression against the reference values for n=9, d=26, R=675."""
    inst = make_instance(9, 26, 675)
    checks = []

    f = de_moivre_poly(inst)
    cubic = RatPoly(-4, -3, 0, 1)
    sextic = RatPoly(13, -12, 9, 4, -6, 0, 1)
    checks.append(
        {
            "name": "polynomial factors exactly as (Z^3-3Z-4)(Z^6-6Z^4+4Z^3+9Z^2-12Z+13)",
            "pass": cubic * sextic == f,
        }
    )

    zs = zeros_all(inst, args.precision_bits)
    with mp.workprec(zs.precision_bits):
        u = zs.zeros[0]
        a_of_u = radical_split_poly(inst).eval_mpc(u.to_mpc())
        expected_a = -0.017445
        checks.append(
            {
                "name": "A(u) = -0.017445",
                "actual": mp.nstr(a_of_u.real, 8),
                "pass": bool(abs(a_of_u - expected_a) < _EXAMPLE_TOL),
            }
        )
        u1 = zs.zeros[1].to_mpc()
        checks.append(
            {
                "name": "u_1 = 1.682098 - 0.582651i",
                "actual": mp.nstr(u1, 8),
                "pass": bool(abs(u1 - mp.mpc(1.682098, -0.582651)) < _EXAMPLE_TOL),
            }
        )
        checks.append(
            {
                "name": "u_8 is the conjugate of u_1",
                "pass": bool(abs(zs.zeros[8].to_mpc() - mp.conj(u1)) < 1e-30),
            }
        )
        u7 = reconstruct_zero(zs.zeros[0], zs.zeros[1], zs.zeros[8], inst, 7)
        checks.append(
            {
                "name": "reconstructed u_7 = 0.381301 + 0.892673i",
                "actual": mp.nstr(u7.to_mpc(), 8),
                "pass": bool(abs(u7.to_mpc() - mp.mpc(0.381301, 0.892673)) < _EXAMPLE_TOL),
            }
        )

    verdict = irreducible_by_power_test(inst, _settings(args))
    root = verdict.witnesses.get(3)
    checks.append(
        {
            "name": "reducible with exact cube witness",
            "actual": str(root.root) if root and root.root else None,
            "pass": verdict.verdict.value == "reducible",
        }
    )

    payload = {
        "instance": inst.to_json(),
        "checks": checks,
        "all_pass": all(c["pass"] for c in checks),
    }
    if getattr(args, "plot", None):
        from .plotting import plot_zero_set

        payload["plot"] = plot_zero_set(
            [complex(z) for z in zs.zeros],
            args.plot,
            title="zeros of the degree-9 reference instance",
        )
    return payload


_DISPATCH = {
    "construct": _cmd_construct,
    "identities": _cmd_identities,
    "zeros": _cmd_zeros,
    "reconstruct": _cmd_reconstruct,
    "irreducible": _cmd_irreducible,
    "galois": _cmd_galois,
    "oracle": _cmd_oracle,
    "example": _cmd_example,
}


def _render_text(payload, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for key, val in payload.items():
            if isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)):
                lines.append(_render_text(item, indent))
                lines.append("")
            else:
                lines.append(f"{pad}- {_scalar(item)}")
        while lines and lines[-1] == "":
            lines.pop()
    else:
        lines.append(f"{pad}{_scalar(payload)}")
    return "\n".join(lines)


def _scalar(val) -> str:
    if val is None:
        return "-"
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, list):
        return "[" + ", ".join(_scalar(v) for v in val) + "]"
    return str(val)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload = _DISPATCH[args.command](args)
    except (InvalidInstanceError, ValueError) as exc:
        _emit({"error": str(exc), "kind": "validation"}, args, error=True)
        return 1
    except PrecisionError as exc:
        _emit({"error": str(exc), "kind": "precision"}, args, error=True)
        return 2
    if not args.deterministic:
        payload["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    _emit(payload, args)
    if args.command == "example" and not payload["all_pass"]:
        return 1
    return 0


def _emit(payload: dict, args, error: bool = False) -> None:
    if getattr(args, "format", "json") == "json":
        text = json.dumps(payload, indent=2)
    else:
        text = _render_text(payload)
    out_path = getattr(args, "out", None)
    if out_path and not error:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=sys.stderr if error else sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
