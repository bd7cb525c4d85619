"""Command-line entry point: `sobertool {classify|powerspace|reflect|verify|oracle-sample}`."""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from importlib import metadata

from . import finite, powerspace, reflection
from .errors import InputError
from .finite import FiniteSpace
from .gallery import GALLERY_NAMES, make_gallery_space
from .gallery.classify import classify_symbolic
from .gallery.sampling import consistency_sample
from .verify import EXAMPLES, verify_all, verify_nonreflective

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2
SYMBOLIC_WARNING = "representative-family verification only"
POWER_KINDS = ("hoare", "smyth", "sobrify")
CLASSES = tuple(reflection.CLASS_FLAGS)


def tool_version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0+unknown"


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


def digest(obj) -> str:
    return hashlib.sha256(canonical(obj).encode()).hexdigest()


# -- inputs -----------------------------------------------------------------


def load_space_file(path: str) -> FiniteSpace:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None
    return FiniteSpace.from_json(data)


def load_source(args):
    """Return (space, input description); the space is finite or a gallery oracle."""
    if args.gallery and args.file:
        raise InputError("give either --gallery or --file, not both")
    if args.gallery:
        if args.gallery not in GALLERY_NAMES:
            raise InputError(f"unknown gallery space {args.gallery!r}; choose from {', '.join(GALLERY_NAMES)}")
        return make_gallery_space(args.gallery), {"gallery": args.gallery}
    if args.file:
        X = load_space_file(args.file)
        return X, {"file": X.to_json()}
    raise InputError("a space is required: pass --gallery NAME or --file PATH")


def require_finite(X, command):
    if not isinstance(X, FiniteSpace):
        raise InputError(f"{command} works on finite spaces only; pass --file PATH")
    return X


def check_cutoff(value):
    if value is not None and value < 1:
        raise InputError(f"--cutoff must be positive, got {value}")


# -- commands ---------------------------------------------------------------


def cmd_classify(args):
    X, source = load_source(args)
    if isinstance(X, FiniteSpace):
        return {"classification": finite.classify(X).to_dict()}, [], True, source
    cutoff = args.cutoff or reflection.DEFAULT_CUTOFF
    report = classify_symbolic(X, cutoff)
    results = {"classification": report.to_dict(), "oracle": X.metadata(), "cutoff": cutoff}
    return results, [SYMBOLIC_WARNING], True, source


def cmd_powerspace(args):
    X, source = load_source(args)
    X = require_finite(X, "powerspace")
    kind = args.kind or "hoare"
    if kind not in POWER_KINDS:
        raise InputError(f"unknown power space kind {kind!r}; choose from {', '.join(POWER_KINDS)}")
    if kind == "hoare":
        fams = powerspace.families(X)
        name = args.family or "all_closed"
        if name not in fams:
            raise InputError(f"unknown family {name!r}; choose from {', '.join(sorted(fams))}")
        res = powerspace.hoare_space(X, fams[name])
        source["family"] = name
    elif kind == "smyth":
        res = powerspace.smyth_space(X)
    else:
        res = powerspace.sobrification(X)
    source["kind"] = kind
    results = {
        "kind": kind,
        "space": res.space.to_json(),
        "classification": finite.classify(res.space).to_dict(),
        "eta": None if res.eta is None else {x: res.eta(x) for x in sorted(X.points)},
        "eta_is_embedding": None if res.eta is None else finite.is_embedding(res.eta),
    }
    return results, [], True, source


def _extension_summary(ext):
    S = ext.space
    if isinstance(S, FiniteSpace):
        space = S.to_json()
    else:
        space = {"name": S.name, "closed_grammar": "closed sets of the base (the base carrier removed) "
                                                   "plus the carrier with the new top"}
    return {"kind": ext.kind, "added_point": str(ext.added_point), "space": space,
            "checks": ext.checks, "base_top": None if ext.base_top is None else str(ext.base_top)}


def cmd_reflect(args):
    X, source = load_source(args)
    kind = args.kind or reflection.FLAT
    if kind not in (reflection.FLAT, reflection.NATURAL):
        raise InputError(f"unknown extension kind {kind!r}; choose flat or natural")
    source["kind"] = kind
    cutoff = args.cutoff or reflection.DEFAULT_CUTOFF
    ext = reflection.make_extension(X, kind, cutoff)
    results = {"extension": _extension_summary(ext),
               "negative_conditions": {c: reflection.is_K_neg(X, c).to_dict() for c in CLASSES}}
    warnings = []
    if not isinstance(X, FiniteSpace):
        cert = reflection.sobrification_iso_check(X, ext, cutoff)
        results["sobrification"] = cert.to_dict()
        warnings.append(SYMBOLIC_WARNING)
        return results, warnings, cert.ok, source
    return results, warnings, all(ext.checks.values()) if ext.checks else True, source


def cmd_verify(args):
    target = args.target or "all"
    if target != "all" and target not in EXAMPLES:
        raise InputError(f"unknown example {target!r}; choose all or one of {', '.join(EXAMPLES)}")
    cutoff = args.cutoff or reflection.DEFAULT_CUTOFF
    reports = verify_all(cutoff=cutoff) if target == "all" else [verify_nonreflective(target, cutoff=cutoff)]
    results = {"examples": [r.to_dict() for r in reports],
               "summary": {r.example: {"items": len(r.items), "passed": sum(i.status == "pass" for i in r.items)}
                           for r in reports}}
    return results, [SYMBOLIC_WARNING], all(r.passed for r in reports), {"verify": target, "cutoff": cutoff}


def cmd_oracle_sample(args):
    if args.file or not args.gallery:
        raise InputError("oracle-sample needs --gallery NAME")
    X, source = load_source(args)
    cutoff = args.cutoff or reflection.DEFAULT_CUTOFF
    source["cutoff"] = cutoff
    sample = consistency_sample(X, cutoff)
    return {"sample": sample}, [SYMBOLIC_WARNING], sample["ok"], source


COMMANDS = {
    "classify": cmd_classify,
    "powerspace": cmd_powerspace,
    "reflect": cmd_reflect,
    "verify": cmd_verify,
    "oracle-sample": cmd_oracle_sample,
}


# -- output -----------------------------------------------------------------


def _text_rows(prefix, value, rows):
    if isinstance(value, dict) and value:
        for k in sorted(value):
            _text_rows(f"{prefix}.{k}" if prefix else str(k), value[k], rows)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for n, v in enumerate(value):
            _text_rows(f"{prefix}[{n}]", v, rows)
    else:
        rows.append((prefix, canonical(value) if isinstance(value, (dict, list)) else str(value)))


def render_text(report: dict) -> str:
    if report["command"] == "verify" and "examples" in report.get("results", {}):
        lines = []
        for ex in report["results"]["examples"]:
            lines.append(f"{ex['example']}")
            for item in ex["items"]:
                lines.append(f"  {item['id']:<6} {item['status']:<5} {item['claim']}")
            lines.append(f"  refuted: {', '.join(ex['categories_refuted']) or '-'}")
        lines.append(f"status: {report['status']}")
        return "\n".join(lines) + "\n"
    rows = []
    _text_rows("", report, rows)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sobertool", description="Sobriety-class checks for finite and "
                                     "symbolic topological spaces.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {tool_version()}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "verify":
            p.add_argument("target", nargs="?", default="all", help="example name or 'all'")
        p.add_argument("--gallery", help=f"gallery space: {', '.join(GALLERY_NAMES)}")
        p.add_argument("--file", help="JSON finite space {\"points\": [...], \"closed\": [[...], ...]}")
        p.add_argument("--kind", help="hoare|smyth|sobrify for powerspace, flat|natural for reflect")
        p.add_argument("--family", help="closed-set family for hoare power spaces")
        p.add_argument("--cutoff", type=int, help="truncation cutoff for symbolic spaces")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    report = {"tool": "sobertool", "version": tool_version(), "command": args.command}
    try:
        check_cutoff(args.cutoff)
        results, warnings, ok, source = COMMANDS[args.command](args)
        report.update(input=source, input_digest=digest({"command": args.command, "input": source}),
                      results=results, warnings=warnings, status="ok" if ok else "failed")
        code = EXIT_OK if ok else EXIT_FAILED
    except InputError as exc:
        error = {"type": type(exc).__name__, "message": str(exc)}
        if getattr(exc, "witness", None) is not None:
            error["witness"] = exc.witness
        report.update(status="input_error", error=json.loads(canonical(error)))
        code = EXIT_INPUT
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - started, 3)
    if args.format == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2, default=str) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
