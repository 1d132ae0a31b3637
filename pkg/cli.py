"""
Local-Group Workbench - CLI

Command-line interface for the workbench checks. Results go to stdout
(or --out), logs go to stderr.

Exit codes: 0 pass, 1 mathematical failure, 2 unknown or limit hit,
3 input error.
"""

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from src.config import get_config
from src.logging_config import setup_logging, get_logger
from src.errors import (
    CompletionLimitError, FormatError, IncompleteSystemError, InapplicableMoveError, MorphismError, NeatnessError,
    PipelineStageError, PrecisionError, PreconditionError, ResourceLimitError, WorkbenchError,
)
from src.core import (
    FiniteGroup, FiniteLocalGroup, Status, Verdict, check_axioms, load_local_group,
)
from src.core.local_group import read_json
from src.instances import BallSet, EndoSpec, InstanceView, PadicInt, as_local_group_view, load_endo, load_instance
from src.words import check_global_assoc, eval_some, search_non_associative
from src.moves import MoveTrace, commutation_bound, make_special
from src.globalization import (
    MorphismSpec, RewriteSystem, complete, extend_instance_morphism, extend_morphism, present, verify_iota,
)
from src.contractive import (
    PseudoAutoCheckConfig, check_pseudo_automorphism, shrink_neighborhood, structure_pipeline,
)
from src.contractive.pipeline import default_V

logger = get_logger("cli")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3

STATUS_EXIT = {Status.PASS: EXIT_PASS, Status.FAIL: EXIT_FAIL, Status.UNKNOWN: EXIT_UNKNOWN}


# ==================== INPUT ====================

def load_group_file(path: Optional[str]) -> FiniteLocalGroup:
    """A local group, or a total group table read as a local group."""
    if not path:
        raise FormatError("--group is required")
    data = read_json(path)
    if isinstance(data, dict) and "elements" in data:
        return FiniteGroup.from_dict(data).as_local_group()
    return load_local_group(path)


def load_instance_file(path: Optional[str]) -> InstanceView:
    if not path:
        raise FormatError("--instance is required")
    return as_local_group_view(load_instance(path))


def load_view(args) -> Any:
    if args.group:
        return load_group_file(args.group)
    if args.instance:
        return load_instance_file(args.instance)
    raise FormatError("give --group or --instance")


def parse_word(G: Any, text: Optional[str]) -> List[Any]:
    """Comma-separated carrier elements; an empty string is the empty word."""
    if text is None:
        raise FormatError("--word is required")
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if isinstance(G, InstanceView):
        return [G.parse_element(t) for t in tokens]
    labels = {str(x): x for x in G.carrier}
    try:
        return [labels[t] for t in tokens]
    except KeyError as e:
        raise FormatError(f"{e} is not an element of {G.name}") from None


def load_endo_for(args, view: InstanceView) -> EndoSpec:
    return load_endo(args.endo) if args.endo else EndoSpec.default_for(view.spec)


def load_phi(path: str, G: FiniteLocalGroup) -> Dict[Any, Any]:
    data = read_json(path)
    try:
        phi = {x: y for x, y in data["images"]}
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"Malformed element map in {path}: {e}") from None
    missing = [x for x in G.carrier if x not in phi]
    if missing:
        raise FormatError(f"element map leaves {missing} unassigned")
    return phi


def load_rules(args, G: Optional[FiniteLocalGroup]) -> RewriteSystem:
    if args.rules:
        return RewriteSystem.load(args.rules)
    if G is None:
        raise FormatError("give --rules or --group")
    return complete(present(G), max_rules=args.max_rules, max_len=args.max_rule_len)


# ==================== OUTPUT ====================

def encode_value(value: Any) -> Any:
    """JSON form of elements inside witnesses and results."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, PadicInt):
        return value.encode()
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((encode_value(v) for v in value), key=repr)
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value


def emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"Wrote {args.out}")
    else:
        sys.stdout.write(text)


def emit_json(args, data: Any) -> None:
    emit(args, json.dumps(data, indent=2, sort_keys=False, ensure_ascii=False))


def emit_verdict(args, verdict: Verdict, **extra: Any) -> int:
    data = verdict.to_dict(encode_value)
    data.update({k: encode_value(v) for k, v in extra.items()})
    emit_json(args, data)
    return STATUS_EXIT[verdict.status]


def _text(encoded: Any) -> str:
    if isinstance(encoded, list):
        return "(" + ", ".join(_text(v) for v in encoded) + ")"
    return str(encoded)


def render_set(G: Any, values) -> str:
    items = sorted(values, key=G.sort_key)
    if isinstance(G, InstanceView):
        return "{" + ", ".join(_text(G.encode_element(x)) for x in items) + "}"
    return "{" + ", ".join(str(x) for x in items) + "}"


# ==================== COMMANDS ====================

def check_axioms_cmd(args) -> int:
    G = load_group_file(args.group)
    report = check_axioms(G)
    emit_json(args, report.to_dict())
    return EXIT_PASS if report.passed else EXIT_FAIL


def assoc_cmd(args) -> int:
    G = load_view(args)
    verdict = check_global_assoc(G, max_len=args.max_len, samples=args.samples, seed=args.seed,
                                 workers=args.workers)
    return emit_verdict(args, verdict)


def eval_cmd(args) -> int:
    G = load_view(args)
    values = eval_some(G, parse_word(G, args.word))
    emit(args, render_set(G, values))
    return EXIT_PASS


def normalize_trace_cmd(args) -> int:
    G = load_view(args)
    parse = G.parse_element if isinstance(G, InstanceView) else None
    try:
        trace = MoveTrace.from_dict(read_json(args.trace), G, parse)
    except InapplicableMoveError as e:
        raise FormatError(f"trace {args.trace} does not replay: {e}") from None
    special, steps = make_special(G, trace)
    contractions = sum(1 for m in trace.moves if m.kind.is_contraction)
    expansions = len(trace.moves) - contractions
    logger.info(f"Special form after {steps} commutations (bound {commutation_bound(contractions, expansions)})",
                extra={"steps": steps})
    encode = G.encode_element if isinstance(G, InstanceView) else None
    emit(args, special.to_json(encode))
    return EXIT_PASS


def globalize_cmd(args) -> int:
    G = load_group_file(args.group)
    presentation = present(G)
    try:
        rs = complete(presentation, max_rules=args.max_rules, max_len=args.max_rule_len)
    except CompletionLimitError as e:
        emit(args, e.partial.to_json())
        logger.warning(str(e), extra={"group": G.name, "verdict": Status.UNKNOWN.value})
        return EXIT_UNKNOWN
    verdict = verify_iota(G, rs, presentation)
    emit(args, rs.to_json())
    if not verdict.passed:
        logger.warning(f"iota check: {verdict.detail}", extra={"group": G.name, "verdict": verdict.status.value})
    return STATUS_EXIT[verdict.status]


def nf_cmd(args) -> int:
    G = load_group_file(args.group) if args.group else None
    rs = load_rules(args, G)
    word = rs.parse(args.word or "")
    emit(args, rs.render(rs.encode(rs.normal_form(word))))
    return EXIT_PASS


def extend_cmd(args) -> int:
    if args.instance:
        view = load_instance_file(args.instance)
        spec = MorphismSpec.from_dict(read_json(args.morphism))
        ext = extend_instance_morphism(view, spec.target, spec.image, samples=args.samples, seed=args.seed)
        extra = {}
        if args.word:
            word = parse_word(view, args.word)
            extra = {"value": ext.evaluate(word), "ambient": ext.ambient(word)}
        return emit_verdict(args, ext.replay_contractions(samples=args.samples, seed=args.seed,
                                                          max_len=args.max_len), **extra)

    G = load_group_file(args.group)
    spec = MorphismSpec.from_dict(read_json(args.morphism), source=G)
    presentation = present(G)
    rs = load_rules(args, G)
    ext = extend_morphism(G, spec, rs, presentation)
    word = rs.parse(args.word or "")
    form = rs.normal_form(word)
    emit_json(args, {
        "word": " ".join(word) or "ε",
        "normal_form": " ".join(form) or "ε",
        "value": encode_value(ext.evaluate(form)),
        "in_kernel": ext.in_kernel(form),
    })
    return EXIT_PASS


def contract_check_cmd(args) -> int:
    G = load_view(args)
    if isinstance(G, InstanceView):
        phi = load_endo_for(args, G)
    else:
        if not args.phi:
            raise FormatError("finite local groups need --phi")
        phi = load_phi(args.phi, G)
    cfg = PseudoAutoCheckConfig(budget=args.budget, samples=args.samples, seed=args.seed)
    return emit_verdict(args, check_pseudo_automorphism(G, phi, cfg))


def shrink_cmd(args) -> int:
    view = load_instance_file(args.instance)
    endo = load_endo_for(args, view)
    V = BallSet.from_dict(read_json(args.ball)) if args.ball else default_V(view.spec)
    result = shrink_neighborhood(view.spec, endo, V, depth=args.depth)
    emit_json(args, result.to_dict())
    statuses = {v.status for v in result.properties.values()}
    if Status.FAIL in statuses:
        return EXIT_FAIL
    return EXIT_UNKNOWN if Status.UNKNOWN in statuses else EXIT_PASS


def pipeline_cmd(args) -> int:
    view = load_instance_file(args.instance)
    endo = load_endo_for(args, view)
    try:
        report = structure_pipeline(view.spec, endo, samples=args.samples, seed=args.seed, max_len=args.max_len)
    except PipelineStageError as e:
        emit(args, e.report.to_json() if args.format == "json" else e.report.render())
        raise
    emit(args, report.to_json() if args.format == "json" else report.render())
    return EXIT_PASS


def search_witness_cmd(args) -> int:
    found = search_non_associative(n=args.size, max_len=args.max_len, seed=args.seed, attempts=args.attempts)
    if found is None:
        return EXIT_UNKNOWN
    emit(args, found.group.to_json())
    logger.info(f"Witness word {found.verdict.witness['word']} after {found.attempts} draws",
                extra={"word": found.verdict.witness["word"], "steps": found.attempts})
    return EXIT_PASS


# ==================== ENTRY POINT ====================

def exit_code_for(error: WorkbenchError) -> int:
    if isinstance(error, (FormatError, PreconditionError)):
        return EXIT_INPUT
    if isinstance(error, PipelineStageError) and error.undecided:
        return EXIT_UNKNOWN
    if isinstance(error, (PrecisionError, ResourceLimitError, IncompleteSystemError)):
        return EXIT_UNKNOWN
    if isinstance(error, (InapplicableMoveError, NeatnessError, MorphismError, PipelineStageError)):
        return EXIT_FAIL
    return EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Local-Group Workbench CLI",
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument("--log-level", default=None, help="Override the configured log level")

    subparsers = parser.add_subparsers(dest="command", help="Commands")

    def command(name: str, func: Callable, help: str, *inputs: str) -> argparse.ArgumentParser:
        p = subparsers.add_parser(name, help=help)
        if "group" in inputs:
            p.add_argument("--group", help="Local group or group table (JSON)")
        if "instance" in inputs:
            p.add_argument("--instance", help="Instance spec (JSON)")
        p.add_argument("--seed", type=int, default=None, help="Random seed (default from config)")
        p.add_argument("--out", help="Write the result here instead of stdout")
        p.set_defaults(func=func)
        return p

    def limits(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-len", type=int, default=None, help="Word length bound")
        p.add_argument("--samples", type=int, default=None, help="Samples for instance checks")

    def completion(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-rules", type=int, default=None, help="Knuth-Bendix rule budget")
        p.add_argument("--max-rule-len", type=int, default=None, help="Longest rule left side")

    command("check-axioms", check_axioms_cmd, "Check the local-group axioms", "group")

    p = command("assoc", assoc_cmd, "Check global associativity up to --max-len", "group", "instance")
    limits(p)
    p.add_argument("--workers", type=int, default=None, help="Processes for the exhaustive check")

    p = command("eval", eval_cmd, "Values of a word over all bracketings", "group", "instance")
    p.add_argument("--word", required=True, help="Comma-separated elements")

    p = command("normalize-trace", normalize_trace_cmd, "Put a move trace in special form", "group", "instance")
    p.add_argument("--trace", required=True, help="Move trace (JSON)")

    p = command("globalize", globalize_cmd, "Present and complete the globalization", "group")
    completion(p)

    p = command("nf", nf_cmd, "Normal form of a generator word", "group")
    p.add_argument("--rules", help="Persisted rewriting system (JSON)")
    p.add_argument("--word", default="", help="Generator symbols, comma or space separated")
    completion(p)

    p = command("extend", extend_cmd, "Extend a morphism to the globalization", "group", "instance")
    p.add_argument("--morphism", required=True, help="Morphism spec (JSON)")
    p.add_argument("--rules", help="Persisted rewriting system (JSON)")
    p.add_argument("--word", default="", help="Word to evaluate")
    limits(p)
    completion(p)

    p = command("contract-check", contract_check_cmd, "Check a contractive pseudo-automorphism", "group", "instance")
    p.add_argument("--phi", help="Element map for a finite local group (JSON)")
    p.add_argument("--endo", help="Endomorphism spec for an instance (JSON)")
    p.add_argument("--budget", type=int, default=None, help="Iterations per point")
    p.add_argument("--samples", type=int, default=None, help="Sampled points")

    p = command("shrink", shrink_cmd, "Shrink a closed ball to a phi-invariant neighborhood", "instance")
    p.add_argument("--endo", help="Endomorphism spec (JSON)")
    p.add_argument("--ball", help="Starting ball V (JSON)")
    p.add_argument("--depth", type=int, default=None, help="Levels -depth..depth")

    p = command("pipeline", pipeline_cmd, "Run the structure pipeline on an instance", "instance")
    p.add_argument("--endo", help="Endomorphism spec (JSON)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    limits(p)

    p = command("search-witness", search_witness_cmd, "Search random tables for a non-associative one")
    p.add_argument("--size", type=int, default=5, help="Carrier size")
    p.add_argument("--attempts", type=int, default=20000, help="Tables to draw")
    p.add_argument("--max-len", type=int, default=None, help="Word length bound")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """CLI main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return EXIT_INPUT

    config = get_config()
    setup_logging(level=args.log_level or config.log_level, json_format=config.json_logs, stream=sys.stderr)

    try:
        return args.func(args)
    except WorkbenchError as e:
        logger.error(str(e), extra={"stage": e.stage} if isinstance(e, PipelineStageError) else {})
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
