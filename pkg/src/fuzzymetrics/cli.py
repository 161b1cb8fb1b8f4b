"""Command-line front end.

Subcommands: ``dist`` (certified distance between two fuzzy-number JSON
files), ``verify`` (one inequality campaign), ``oracle-check`` (fast path vs
brute-force oracle), ``gen`` (write a fuzzy number from a spec string) and
``verify-all`` (every campaign, with combined JSON and CSV summaries).

Exit codes: 0 success / no violations, 1 at least one certified violation
(reproduction data emitted), 2 usage or input-format error, 3 resource
limit.  All parameter defaults are printed into every report header so runs
are reproducible without shell history.
"""

import argparse
import csv
import json
import sys

from .core import fuzzy_to_dict, load_fuzzy, save_fuzzy
from .errors import FuzzyError, ResourceLimit
from .generators import PRNG_NAME, generate
from .metrics import metric_D, metric_Gamma, metric_dinf, metric_dq
from .propsuite import (
    check_chain,
    check_convex_combo,
    check_endograph,
    check_metric_axioms,
    check_oracle_agreement,
    check_scalar,
    check_sum,
    convergence_reports,
    run_all,
    support_bounded_reports,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

THEOREMS = (
    "thm2.1",
    "cor2.1",
    "thm2.2",
    "thm2.3",
    "thm2.4",
    "chain",
    "convergence",
    "endograph",
    "axioms",
)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fuzzymetrics",
        description="certified fuzzy-number metrics and inequality campaigns",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="certified distance between two fuzzy-number JSON files")
    p.add_argument("--metric", required=True, choices=["D", "gamma", "dinf", "dq"])
    p.add_argument("--q", type=float, default=2.0, help="exponent for --metric dq")
    p.add_argument("--h", type=float, default=None, help="sample spacing (default: 1%% of joint diameter)")
    p.add_argument("a", help="first fuzzy-number JSON file")
    p.add_argument("b", help="second fuzzy-number JSON file")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", help="run one inequality campaign")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", choices=["1", "2", "mixed"], default="mixed")
    p.add_argument("--h", type=float, default=0.02)
    p.add_argument("--q", type=float, default=2.0)
    p.add_argument("--out", default=None, help="write the report(s) as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-check", help="fast path vs brute-force oracle agreement")
    p.add_argument("--metric", required=True, choices=["D", "gamma", "dq"])
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--h", type=float, default=0.02)
    p.add_argument("--budget", type=float, default=None, help="oracle point budget")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("gen", help="generate a fuzzy number from a spec string")
    p.add_argument("--spec", required=True,
                   help='e.g. "triangular:0,1,2" or "random:seed=42,dim=1,levels=5,scale=10"')
    p.add_argument("--out", default=None, help="output JSON file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify-all", help="run every campaign and emit JSON + CSV summaries")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--h", type=float, default=0.02)
    p.add_argument("--q", type=float, default=2.0)
    p.add_argument("--json", dest="json_path", default="verify_all_report.json")
    p.add_argument("--csv", dest="csv_path", default="verify_all_summary.csv")
    p.set_defaults(func=cmd_verify_all)

    return parser


def cmd_dist(args):
    u = load_fuzzy(args.a)
    v = load_fuzzy(args.b)
    if args.metric == "D":
        res = metric_D(u, v, h=args.h)
    elif args.metric == "gamma":
        res = metric_Gamma(u, v, h=args.h)
    elif args.metric == "dinf":
        res = metric_dinf(u, v)
    else:
        res = metric_dq(u, v, q=args.q)
    out = {"metric": args.metric, "value": res.value, "half_width": res.half_width}
    if args.metric == "dq":
        out["q"] = args.q
    if args.metric in ("D", "gamma"):
        out["h"] = args.h
    print(json.dumps(out))
    return EXIT_OK


def _campaigns_for(args):
    t, s, d, h, q = args.trials, args.seed, args.dim, args.h, args.q
    theorem = args.theorem
    if theorem == "thm2.1":
        return [check_convex_combo(t, s, d, h, which="thm2.1")]
    if theorem == "cor2.1":
        return [check_convex_combo(t, s, d, h, which="cor2.1")]
    if theorem == "thm2.2":
        return support_bounded_reports()
    if theorem == "thm2.3":
        return [check_scalar(t, s, d, h)]
    if theorem == "thm2.4":
        return [check_sum(t, s, d, None, h)]
    if theorem == "chain":
        return [check_chain(t, s, d, h, q)]
    if theorem == "convergence":
        return convergence_reports(q=q)
    if theorem == "endograph":
        return [check_endograph(t, s, d, h)]
    return [check_metric_axioms(t, s, d, h, q)]


def _flag_counterexamples(reports, stream=None):
    stream = stream if stream is not None else sys.stdout
    for rep in reports:
        if rep.theorem_id == "endograph" and rep.violations:
            print("POTENTIAL COUNTEREXAMPLE: the endograph inequalities are stated "
                  "without proof; reproduction data follows.", file=stream)
            print(json.dumps(rep.violations, indent=2), file=stream)


def cmd_verify(args):
    reports = _campaigns_for(args)
    for rep in reports:
        print(rep.summary_line())
    _flag_counterexamples(reports)
    if args.out:
        payload = [rep.to_dict() for rep in reports]
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload[0] if len(payload) == 1 else payload, fh, indent=2)
            fh.write("\n")
    return EXIT_VIOLATIONS if any(rep.violations for rep in reports) else EXIT_OK


def cmd_oracle_check(args):
    budget = int(args.budget) if args.budget is not None else None
    rep = check_oracle_agreement(args.metric, args.trials, args.seed, args.h, budget=budget)
    print(rep.summary_line())
    return EXIT_VIOLATIONS if rep.violations else EXIT_OK


def cmd_gen(args):
    u = generate(args.spec)
    if args.out:
        save_fuzzy(u, args.out)
    else:
        print(json.dumps(fuzzy_to_dict(u)))
    return EXIT_OK


def cmd_verify_all(args):
    reports = run_all(seed=args.seed, trials=args.trials, h=args.h, q=args.q)
    for rep in reports:
        print(rep.summary_line())
    _flag_counterexamples(reports)
    combined = {
        "seed": args.seed,
        "prng": PRNG_NAME,
        "params": {"trials": args.trials, "h": args.h, "q": args.q},
        "reports": [rep.to_dict() for rep in reports],
    }
    with open(args.json_path, "w", encoding="utf-8") as fh:
        json.dump(combined, fh, indent=2)
        fh.write("\n")
    with open(args.csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theorem_id", "trials", "seed", "dim", "h", "violations",
                         "max_slack", "runtime_ms"])
        for rep in reports:
            writer.writerow([rep.theorem_id, rep.trials, rep.seed, rep.dim, rep.h,
                             len(rep.violations), rep.max_slack, f"{rep.runtime_ms:.1f}"])
    print(f"wrote {args.json_path} and {args.csv_path}")
    return EXIT_VIOLATIONS if any(rep.violations for rep in reports) else EXIT_OK


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (FuzzyError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
