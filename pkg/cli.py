"""
Command-line entry point
Verification of the certified codes, generator-matrix search, bounds and code transforms
"""

import argparse
import json
import logging
import os
import sys
import time
from typing import List, Optional

import numpy as np

from config import Config
from utils import LOG_LEVELS, format_duration, get_system_info, resolve_jobs, save_json_report, setup_logging
from src.bounds import bound_record
from src.code_io import CodeFormatError, format_code, format_matrix, read_code, write_code
from src.codes import (
    LinearCode,
    MonomialTransform,
    ZeroCodeError,
    apply_monomial,
    euclidean_dual,
    hermitian_dual,
    puncture,
    shorten,
    standard_form,
    weight_enumerator,
)
from src.certified_codes import (
    UnknownCodeError,
    build,
    derive_optimality,
    verify,
    verify_all,
    witness_table,
)
from src.search import (
    CheckpointError,
    SearchConfig,
    SearchMode,
    resume_search,
    run_search,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcd4",
        description="Quaternary Hermitian LCD codes: verify, search, bounds and transforms.",
    )
    parser.add_argument("--log-level", default=None, type=str.upper, choices=LOG_LEVELS,
                        help="Logging level (default from config)")
    parser.add_argument("--seed", type=int, default=None, help="Seed for randomized transforms")
    parser.add_argument("--data-dir", default=None, help="Directory holding the certified matrix files")
    sub = parser.add_subparsers(dest="command", required=True)

    verify_parser = sub.add_parser("verify", help="Verify certified codes")
    verify_parser.add_argument("name", nargs="?", help="Certificate name, e.g. C15")
    verify_parser.add_argument("--all", action="store_true", help="Verify every certificate")
    verify_parser.add_argument("--json", action="store_true", help="Print JSON reports")
    verify_parser.add_argument("--save-report", default=None, metavar="DIR",
                               help="Also save the JSON reports to a timestamped file in DIR")

    search_parser = sub.add_parser("search", help="Search for Hermitian LCD [n,k,d]_4 codes")
    search_parser.add_argument("--n", type=int, required=True)
    search_parser.add_argument("--k", type=int, required=True)
    search_parser.add_argument("--d", type=int, required=True)
    search_parser.add_argument("--mode", choices=["exhaustive", "first", "first_hit"], default=None)
    search_parser.add_argument("--jobs", type=int, default=None, help="Worker processes; 0 = one per core")
    search_parser.add_argument("--checkpoint", default=None, help="Checkpoint file")
    search_parser.add_argument("--resume", action="store_true", help="Resume from --checkpoint")
    search_parser.add_argument("--max-nodes", type=int, default=None, help="Node budget")

    bounds_parser = sub.add_parser("bounds", help="Bounds on d4(n,k)")
    bounds_parser.add_argument("--n", type=int, default=None)
    bounds_parser.add_argument("--k", type=int, default=None)
    bounds_parser.add_argument("--json", action="store_true")
    bounds_parser.add_argument("--derive", action="store_true", help="Derive the optimality claims")

    dump_parser = sub.add_parser("dump", help="Print a certified code in the code-file format")
    dump_parser.add_argument("name")
    dump_parser.add_argument("--enumerator", action="store_true", help="Print the weight enumerator instead")

    transform_parser = sub.add_parser("transform", help="Transform a code file")
    transform_parser.add_argument("file")
    operation = transform_parser.add_mutually_exclusive_group(required=True)
    operation.add_argument("--shorten", type=int, metavar="I", help="Shorten on coordinate I (1-based)")
    operation.add_argument("--puncture", type=int, metavar="I", help="Puncture coordinate I (1-based)")
    operation.add_argument("--hermitian-dual", action="store_true")
    operation.add_argument("--euclidean-dual", action="store_true")
    operation.add_argument("--standard-form", action="store_true")
    operation.add_argument("--random-monomial", action="store_true")
    transform_parser.add_argument("--output", default=None, help="Write the result here instead of stdout")
    return parser


def cmd_verify(args, cfg: Config) -> int:
    if args.all == bool(args.name):
        print("error: give exactly one of NAME or --all", file=sys.stderr)
        return EXIT_USAGE
    data_dir = args.data_dir or cfg.get("certified_codes.data_directory")
    max_k = cfg.get("codes.direct_enumeration_max_k")
    if args.all:
        reports = verify_all(data_dir, direct_max_k=max_k)
    else:
        reports = [verify(args.name, data_dir, direct_max_k=max_k)]

    if args.json:
        payload = [r.to_json_dict() for r in reports]
        print(json.dumps(payload if args.all else payload[0], indent=2))
    else:
        for report in reports:
            print(report.summary())
            for mismatch in report.mismatches:
                print(f"    {mismatch}")
        print(f"{sum(r.passed for r in reports)}/{len(reports)} passed")
    if args.save_report:
        path = save_json_report([r.to_json_dict() for r in reports], directory=args.save_report)
        logger.info("Saved verification report to %s", path)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE


def cmd_search(args, cfg: Config) -> int:
    mode = SearchMode(args.mode or cfg.get("search.mode"))
    jobs = resolve_jobs(args.jobs if args.jobs is not None else cfg.get("search.jobs"))
    max_row_length = cfg.get("search.max_row_length")
    if args.n - args.k > max_row_length:
        print(f"error: n - k = {args.n - args.k} exceeds the configured maximum {max_row_length}",
              file=sys.stderr)
        return EXIT_FAILURE
    if args.resume and not args.checkpoint:
        print("error: --resume needs --checkpoint", file=sys.stderr)
        return EXIT_USAGE

    search_cfg = SearchConfig(n=args.n, k=args.k, d=args.d, mode=mode, parallel_width=jobs)
    logger.info("System: %s", get_system_info())
    options = dict(
        max_nodes=args.max_nodes,
        checkpoint_path=args.checkpoint,
        checkpoint_every=cfg.get("search.checkpoint_every"),
        block_elements=cfg.get("search.filter_block_elements"),
    )
    started = time.perf_counter()
    if args.resume:
        if not os.path.exists(args.checkpoint):
            print(f"error: checkpoint {args.checkpoint} does not exist", file=sys.stderr)
            return EXIT_FAILURE
        outcome = resume_search(search_cfg, args.checkpoint, **options)
    else:
        outcome = run_search(search_cfg, **options)
    elapsed = format_duration(time.perf_counter() - started)

    complete = "true" if outcome.complete else "false"
    if outcome.nonexistence:
        print(f"no code exists; complete={complete}")
    elif outcome.found:
        print(f"found {len(outcome.found)} code(s); complete={complete}")
        print(format_code(outcome.found[0]), end="")
    else:
        frontier = " ".join(str(i) for i in outcome.frontier)
        print(f"no code found yet; complete={complete}; frontier={frontier}")
    print(f"nodes_visited={outcome.nodes_visited} elapsed={elapsed}")
    return EXIT_OK


def cmd_bounds(args, cfg: Config) -> int:
    if args.derive:
        data_dir = args.data_dir or cfg.get("certified_codes.data_directory")
        claims = derive_optimality(verify_all(data_dir, direct_max_k=cfg.get("codes.direct_enumeration_max_k")))
        if args.json:
            print(json.dumps([c.model_dump(mode="json") for c in claims], indent=2))
        else:
            for claim in claims:
                witness = f" (witness {claim.witness})" if claim.witness else ""
                print(f"{claim.statement()}{witness}")
        return EXIT_OK
    if args.n is None or args.k is None:
        print("error: bounds needs --n and --k, or --derive", file=sys.stderr)
        return EXIT_USAGE
    record = bound_record(args.n, args.k, witness_table())
    if args.json:
        print(json.dumps(record.model_dump(mode="json"), indent=2))
    else:
        print(record.describe())
    return EXIT_OK


def cmd_dump(args, cfg: Config) -> int:
    code = build(args.name, args.data_dir or cfg.get("certified_codes.data_directory"))
    if args.enumerator:
        enumerator = weight_enumerator(code, direct_max_k=cfg.get("codes.direct_enumeration_max_k"))
        print(enumerator.to_pairs())
    else:
        print(format_code(code), end="")
    return EXIT_OK


def cmd_transform(args, cfg: Config) -> int:
    code = read_code(args.file)
    if args.shorten is not None:
        result = shorten(code, args.shorten)
    elif args.puncture is not None:
        result = puncture(code, args.puncture)
    elif args.hermitian_dual:
        result = hermitian_dual(code)
    elif args.euclidean_dual:
        result = euclidean_dual(code)
    elif args.standard_form:
        matrix, transform = standard_form(code)
        logger.info("Column permutation: %s", " ".join(str(p) for p in transform.permutation))
        result = LinearCode(matrix)
    else:
        seed = args.seed if args.seed is not None else cfg.get("random.seed")
        transform = MonomialTransform.random(code.n, np.random.default_rng(seed))
        result = apply_monomial(code, transform)

    if args.output:
        write_code(result, args.output)
        logger.info("Wrote [%d,%d] code to %s", result.n, result.k, args.output)
    else:
        print(format_matrix(result.generator), end="")
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "search": cmd_search,
    "bounds": cmd_bounds,
    "dump": cmd_dump,
    "transform": cmd_transform,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        cfg = Config.from_env()
        logging_config = cfg.get_logging_config()
        setup_logging(args.log_level or logging_config["level"], logging_config["file"], logging_config["format"])
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args, cfg)
    except UnknownCodeError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except CodeFormatError as e:
        print(f"error: {getattr(args, 'file', '')}: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except (CheckpointError, ZeroCodeError, IndexError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
