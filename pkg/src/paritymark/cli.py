"""Command-line interface: ``paritymark embed|detect|attack|eval|org``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import codec
from .config import ConfigError, ToolkitConfig
from .engine import extract, insert
from .harness.attacks import AttackSpec, attack
from .harness.corpus import load_corpus
from .harness.evaluate import evaluate, indistinguishability, write_rows
from .orgs import OrganizationProfile, Registry, RegistryError
from .source_model import ParseError, parse


def _config(args) -> ToolkitConfig:
    config = ToolkitConfig.load(args.config) if args.config else ToolkitConfig()
    return config.override(seed=args.seed, code_id=getattr(args, "code", None),
                           registry_path=getattr(args, "registry", None))


def _registry(config: ToolkitConfig) -> Registry:
    if config.registry_path:
        return Registry.load(config.registry_path)
    return Registry.demo()


def _err(path, exc) -> None:
    print(f"{path}: error: {exc}", file=sys.stderr)


def _read(path: Path):
    return parse(path.read_text(encoding="utf-8"), str(path))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _output_path(src: Path, out: str | None, many: bool) -> Path:
    if out is None:
        return src.with_name(src.stem + ".wm.py")
    target = Path(out)
    if many or target.is_dir() or not target.suffix:
        target.mkdir(parents=True, exist_ok=True)
        return target / src.name
    return target


def cmd_embed(args) -> int:
    config = _config(args)
    try:
        org = _registry(config).get(args.org)
    except (RegistryError, OSError) as exc:
        _err(args.org, exc)
        return 1
    k = codec.params(config.code_id).message_length
    if len(args.message) != k or set(args.message) - {"0", "1"}:
        _err("--message", f"message must be {k} bits for {config.code_id}, got {args.message!r}")
        return 1
    status = 0
    for i, name in enumerate(args.inputs):
        src = Path(name)
        try:
            program = _read(src)
        except (ParseError, OSError, UnicodeDecodeError) as exc:
            _err(src, exc)
            status = 1
            continue
        marked, report = insert(program, args.message, org, config,
                                np.random.default_rng([config.seed, i]))
        dst = _output_path(src, args.out, len(args.inputs) > 1)
        dst.write_text(marked.text, encoding="utf-8")
        dst.with_name(dst.name + ".report.json").write_text(_dump(report.to_dict()) + "\n")
        print(f"{src} -> {dst}: formal={report.formal.case} natural={report.natural.case}")
        if not report.combined and status == 0:
            status = 2
    return status


def cmd_detect(args) -> int:
    config = _config(args)
    registry = _registry(config)
    org_id = None if args.all_orgs else args.org
    results = []
    for name in args.inputs:
        try:
            report = extract(_read(Path(name)), registry, config, org_id=org_id).to_dict()
        except (ParseError, OSError, UnicodeDecodeError, RegistryError) as exc:
            _err(name, exc)
            results.append({"file": name, "error": str(exc)})
            continue
        report["file"] = name
        report["verdict"] = report["strict"] if args.strict else report["combined"]
        results.append(report)
    print(_dump(results))
    return 0


def cmd_attack(args) -> int:
    spec = AttackSpec.parse(args.attack, args.seed or 0)
    status = 0
    for i, name in enumerate(args.inputs):
        src = Path(name)
        try:
            hit = attack(_read(src), spec, np.random.default_rng([spec.seed, i]))
        except (ParseError, OSError, NotImplementedError) as exc:
            _err(src, exc)
            status = 1
            continue
        dst = _output_path(src, args.out, len(args.inputs) > 1) if args.out else None
        if dst is None:
            sys.stdout.write(hit.text)
        else:
            dst.write_text(hit.text, encoding="utf-8")
    return status


def cmd_eval(args) -> int:
    config = _config(args)
    registry = _registry(config)
    items = load_corpus(args.corpus)
    seed = config.seed
    attacks = [AttackSpec.parse(a, seed) for a in args.attack]
    result = evaluate(items, registry, args.org, attacks, config, seed)
    result.write(args.csv, args.summary)
    print(f"files={result.summary['files']} tpr={result.summary['tpr']:.4f} "
          f"fpr_strict={result.summary['fpr_strict']:.4f}")
    for spec in attacks:
        print(f"{spec.label()} tpr={result.summary[spec.label()]['tpr']:.4f}")
    if args.indist:
        template = items[args.template].text if args.template is not None else _first_template(items)
        stats = indistinguishability(template, codec.all_words(codec.params(config.code_id).message_length),
                                     100, registry.get(args.org), config, seed)
        prefix = Path(args.indist)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        keys = stats["messages"]
        write_rows([dict(zip(["message", *keys], [m, *row])) for m, row in zip(keys, stats["jsd_matrix"])],
                   f"{prefix}_jsd.csv")
        for m in keys:
            np.savetxt(f"{prefix}_similarity_{m}.csv", np.array(stats["similarity"][m]),
                       delimiter=",", fmt="%.4f")
        print(f"jsd_mean={stats['jsd_mean']:.4f} mi_total={stats['mi_total']:.4f} "
              f"similarity_range={stats['similarity_range']:.4f}")
    return 0


def _first_template(items):
    from .anchors import FORMAL, identify_anchors
    for item in items:
        if identify_anchors(parse(item.text)).count(FORMAL) >= 12:
            return item.text
    raise SystemExit("no corpus file has 12 formal anchors")


def cmd_org(args) -> int:
    path = Path(args.registry)
    if args.action == "list":
        registry = Registry.load(path) if path.exists() else Registry()
        for org in registry:
            print(f"{org.org_id}\tseed={org.seed}\tfixed_code={org.fixed_code}")
        return 0
    if args.id is None or args.org_seed is None:
        _err(path, "--id and --seed are required")
        return 1
    try:
        org = OrganizationProfile(args.id, args.org_seed, args.fixed_code)
        if args.action == "init" and not path.exists():
            registry = Registry()
        else:
            registry = Registry.load(path) if path.exists() else Registry()
        registry.add(org)
    except (RegistryError, ValueError) as exc:
        _err(path, exc)
        return 1
    registry.save(path)
    print(f"{org.org_id} registered in {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paritymark", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, registry=True):
        p.add_argument("--config", help="JSON config file")
        p.add_argument("--seed", type=int, help="random seed (overrides config)")
        p.add_argument("--code", choices=[codec.BCH421, codec.HAM74], help="message code")
        if registry:
            p.add_argument("--registry", help="org registry JSON (default: built-in demo orgs)")

    p = sub.add_parser("embed", help="watermark files")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--message", "-m", required=True)
    p.add_argument("--org", required=True)
    p.add_argument("--out", "-o", help="output file or directory")
    common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("detect", help="check files for watermarks")
    p.add_argument("inputs", nargs="+")
    who = p.add_mutually_exclusive_group()
    who.add_argument("--org")
    who.add_argument("--all-orgs", action="store_true")
    p.add_argument("--strict", action="store_true", help="require both channels")
    common(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("attack", help="apply an attack")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--attack", required=True, help="kind:intensity, e.g. rename:1.0")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("eval", help="evaluate over a corpus")
    p.add_argument("--corpus", help="corpus directory (default: bundled)")
    p.add_argument("--org", default="O1")
    p.add_argument("--attack", action="append", default=[])
    p.add_argument("--csv", default="eval.csv")
    p.add_argument("--summary", default="eval.json")
    p.add_argument("--indist", metavar="PREFIX", help="also write JSD/similarity CSVs")
    p.add_argument("--template", type=int, help="corpus index of the indistinguishability template")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("org", help="manage the org registry")
    p.add_argument("action", choices=["init", "add", "list"])
    p.add_argument("--registry", default="registry.json")
    p.add_argument("--id")
    p.add_argument("--seed", dest="org_seed", type=int)
    p.add_argument("--fixed-code", default="01")
    p.set_defaults(func=cmd_org)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
