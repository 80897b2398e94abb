"""Command-line operator surface: prepare, master, socialize, plot."""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import zlib
from pathlib import Path

from . import __version__, plotting, resources
from .apprentice import BridgeApprentice, BridgeError, ReferenceApprentice
from .evolution import EvolutionConfig, generate_master_corpus
from .manifest import write_manifest
from .metrics import MetricTrajectory
from .phonetics import ProsodyWeights, Transcriber, load_inventory
from .semantics import load_embeddings
from .socialization import (
    PARENTING_STYLES,
    ExperimentConfig,
    ExperimentError,
    MasterJudge,
    run_experiment,
    write_outputs,
)
from .textdata import (
    DataFormatError,
    dedupe_pairs,
    filter_titles,
    load_lexicon,
    match_comment,
    preprocess_comment,
    read_comments,
    read_corpus,
    read_titles,
    write_corpus,
)

PLOT_METRICS = ("bleu_master", "pinc_master", "bleu_peer", "pinc_peer", "liking_rate")


def derive_seed(seed: int, token: str) -> int:
    """Per-style sub-seed: base seed XOR CRC32 of the style name."""
    return seed ^ zlib.crc32(token.encode("utf-8"))


def _read_config_file(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    values = {}
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise DataFormatError(path, line_no, f"expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def _pick(flag_value, config: dict[str, str], key: str, default, cast=str):
    """Flags beat the config file, the config file beats defaults."""
    if flag_value is not None:
        return flag_value
    if key in config:
        raw = config[key]
        if cast is bool:
            return raw.lower() in ("1", "true", "yes", "on")
        return cast(raw)
    return default


def _scoring_config(config: dict[str, str], seed: int = 0, **overrides) -> EvolutionConfig:
    """EvolutionConfig from config-file keys plus explicit overrides."""
    weights = ProsodyWeights()
    raw = config.get("prosody-weights")
    if raw:
        parts = [float(v) for v in raw.split(",")]
        if len(parts) != 4:
            raise ValueError("prosody-weights needs 4 comma-separated values")
        weights = ProsodyWeights(*parts)
    return EvolutionConfig(
        weights=weights,
        food_anchor=config.get("food-anchor", "food"),
        food_sim_scope=config.get("food-sim-scope", "all"),
        seed=seed,
        **overrides,
    )


def _load_scoring(args, config):
    food = resources.resource_path("food", _pick(args.lexicon, config, "lexicon", None))
    pos = resources.resource_path("pos", _pick(getattr(args, "pos", None), config, "pos", None))
    emb = resources.resource_path("embeddings", _pick(args.embeddings, config, "embeddings", None))
    pron = resources.resource_path("pron", _pick(args.pron_dict, config, "pron-dict", None))
    inventory_path = resources.resource_path(
        "inventory", _pick(getattr(args, "inventory", None), config, "inventory", None)
    )
    dim = _pick(getattr(args, "dim", None), config, "dim", resources.EMBEDDING_DIM, int)
    lexicon = load_lexicon(food, pos)
    store = load_embeddings(emb, dim)
    vowels = load_inventory(inventory_path) if inventory_path.exists() else None
    transcriber = (
        Transcriber.from_file(pron, vowels) if vowels else Transcriber.from_file(pron)
    )
    inputs = {"food": food, "pos": pos, "embeddings": emb, "pron": pron}
    return lexicon, store, transcriber, inputs


def cmd_prepare(args) -> int:
    config = _read_config_file(args.config)
    min_votes = _pick(args.min_votes, config, "min-votes", 100_000, int)
    titles_path = resources.resource_path("titles", _pick(args.titles, config, "titles", None))
    comments_path = resources.resource_path("comments", _pick(args.comments, config, "comments", None))
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    records = read_titles(titles_path)
    titles = filter_titles(records, min_votes, require_multiword=True)
    if not titles:
        print("warning: no titles survived filtering", file=sys.stderr)

    matched = []
    rejected = 0
    for comment in read_comments(comments_path):
        words = preprocess_comment(comment)
        if not words or not titles:
            rejected += 1
            continue
        pair = match_comment(words, titles)
        if pair is None:
            rejected += 1
        else:
            matched.append(pair)
    peer_corpus = dedupe_pairs(matched)

    titles_out = out_dir / "titles.txt"
    corpus_out = out_dir / "peer_corpus.tsv"
    titles_out.write_text("\n".join(" ".join(t) for t in titles) + ("\n" if titles else ""), encoding="utf-8")
    write_corpus(corpus_out, peer_corpus)
    settings = {"min_votes": min_votes, "command": "prepare"}
    write_manifest(
        out_dir, __version__, 0, settings,
        {"titles": titles_path, "comments": comments_path},
        [titles_out, corpus_out],
    )
    print(f"titles kept: {len(titles)}")
    print(f"comments matched: {len(matched)} (unique pairs: {len(peer_corpus)}), rejected: {rejected}")
    return 0


def cmd_master(args) -> int:
    config = _read_config_file(args.config)
    lexicon, store, transcriber, inputs = _load_scoring(args, config)
    titles_path = resources.resource_path("titles", _pick(args.titles, config, "titles", None))
    min_votes = _pick(args.min_votes, config, "min-votes", 100_000, int)
    evo = _scoring_config(
        config,
        seed=_pick(args.seed, config, "seed", 0, int),
        mu=_pick(args.mu, config, "mu", 100, int),
        lambda_=_pick(args.lambda_, config, "lambda", 100, int),
        generations=_pick(args.generations, config, "generations", 10, int),
        crossover_prob=_pick(args.crossover_prob, config, "crossover-prob", 0.5, float),
    )
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    records = read_titles(titles_path)
    titles = filter_titles(records, min_votes, require_multiword=True)
    if not titles:
        print("warning: no eligible titles to evolve", file=sys.stderr)

    log_path = out_dir / "evolution_log.jsonl"
    with open(log_path, "w", encoding="utf-8") as log_file:
        def log(record: dict) -> None:
            log_file.write(json.dumps(record, sort_keys=True) + "\n")

        corpus = generate_master_corpus(titles, lexicon, store, transcriber, evo, log=log)

    corpus_out = out_dir / "master_corpus.tsv"
    write_corpus(corpus_out, corpus)
    settings = {
        "command": "master", "mu": evo.mu, "lambda": evo.lambda_,
        "generations": evo.generations, "crossover_prob": evo.crossover_prob,
        "min_votes": min_votes, "seed": evo.seed,
    }
    inputs["titles"] = titles_path
    write_manifest(out_dir, __version__, evo.seed, settings, inputs, [corpus_out, log_path])
    print(f"titles evolved: {len(titles)}; master pairs written: {len(corpus)}")
    return 0


def _make_apprentice(spec: str):
    if spec == "reference":
        return ReferenceApprentice()
    if spec.startswith("bridge:"):
        command = shlex.split(spec[len("bridge:"):])
        if not command:
            raise ValueError("empty bridge command")
        return BridgeApprentice(command)
    raise ValueError(f"unknown apprentice {spec!r} (use 'reference' or 'bridge:<command>')")


def cmd_socialize(args) -> int:
    config = _read_config_file(args.config)
    lexicon, store, transcriber, inputs = _load_scoring(args, config)
    titles_path = resources.resource_path("titles", _pick(args.titles, config, "titles", None))
    min_votes = _pick(args.min_votes, config, "min-votes", 100_000, int)
    seed = _pick(args.seed, config, "seed", 0, int)
    iterations = _pick(args.iterations, config, "iterations", 20, int)
    steps = _pick(args.steps, config, "steps", 1000, int)
    apprentice_spec = _pick(args.apprentice, config, "apprentice", "reference")
    master_path = _pick(args.master_corpus, config, "master-corpus", None)
    peer_path = _pick(args.peer_corpus, config, "peer-corpus", None)
    if master_path is None or peer_path is None:
        print("error: --master-corpus and --peer-corpus are required", file=sys.stderr)
        return 2

    records = read_titles(titles_path)
    titles = filter_titles(records, min_votes, require_multiword=True)
    master_corpus = read_corpus(master_path)
    peer_corpus = read_corpus(peer_path)
    judge = MasterJudge(lexicon, store, transcriber, _scoring_config(config))

    styles = list(PARENTING_STYLES) if args.style == "all" else [args.style]
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    results = {}
    for style in styles:
        experiment = ExperimentConfig(
            style=style, iterations=iterations, steps_per_iteration=steps,
            seed=derive_seed(seed, style),
            permissive_includes_master=_pick(
                None, config, "permissive-includes-master", True, bool
            ),
            same_title_only=_pick(None, config, "same-title-only", False, bool),
        )
        client = _make_apprentice(apprentice_spec)
        try:
            result = run_experiment(experiment, titles, master_corpus, peer_corpus, judge, client)
        finally:
            close = getattr(client, "close", None)
            if close:
                close()
        results[style] = result
        style_dir = out_dir / style
        style_dir.mkdir(parents=True, exist_ok=True)
        trajectory_path = style_dir / "trajectory.csv"
        outputs_path = style_dir / "outputs.tsv"
        result.trajectory.write_csv(trajectory_path)
        write_outputs(outputs_path, result.final_outputs)
        settings = {
            "command": "socialize", "style": style, "iterations": iterations,
            "steps": steps, "seed": seed, "style_seed": experiment.seed,
            "apprentice": apprentice_spec, "min_votes": min_votes,
        }
        style_inputs = dict(inputs)
        style_inputs.update({"titles": titles_path, "master_corpus": master_path, "peer_corpus": peer_path})
        write_manifest(style_dir, __version__, seed, settings, style_inputs, [trajectory_path, outputs_path])
        final = result.trajectory.rows[-1]
        print(
            f"{style}: {iterations} iterations, corpus {final.corpus_size}, "
            f"liking {final.liking_rate:.3f}"
        )

    if args.style == "all":
        plot_dir = out_dir / "plotdata"
        plot_dir.mkdir(parents=True, exist_ok=True)
        iterations_axis = [row.iteration for row in results[styles[0]].trajectory.rows]
        data_files = []
        for metric_name in PLOT_METRICS:
            series = {
                style: [getattr(row, metric_name) for row in results[style].trajectory.rows]
                for style in styles
            }
            path = plot_dir / f"{metric_name}.tsv"
            plotting.write_series_data(path, iterations_axis, series)
            data_files.append(path)
        write_manifest(
            plot_dir, __version__, seed, {"command": "socialize", "style": "all"},
            {}, data_files,
        )
    return 0


def cmd_plot(args) -> int:
    run_dirs = [Path(d) for d in args.runs]
    series_by_dir: dict[str, MetricTrajectory] = {}
    for run_dir in run_dirs:
        direct = run_dir / "trajectory.csv"
        if direct.exists():
            series_by_dir[run_dir.name] = MetricTrajectory.read_csv(direct)
            continue
        found = False
        for child in sorted(run_dir.iterdir()):
            candidate = child / "trajectory.csv"
            if child.is_dir() and candidate.exists():
                series_by_dir[child.name] = MetricTrajectory.read_csv(candidate)
                found = True
        if not found:
            print(f"error: no trajectory.csv under {run_dir}", file=sys.stderr)
            return 1
    if not series_by_dir:
        print("error: nothing to plot", file=sys.stderr)
        return 1

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for metric_name in PLOT_METRICS:
        series = {
            name: [(row.iteration, getattr(row, metric_name)) for row in trajectory.rows]
            for name, trajectory in series_by_dir.items()
        }
        path = out_dir / f"{metric_name}.svg"
        plotting.render_line_chart(path, metric_name.replace("_", " "), series)
        written.append(path)
    write_manifest(
        out_dir, __version__, 0, {"command": "plot", "metrics": list(PLOT_METRICS)},
        {}, written,
    )
    print(f"wrote {len(written)} charts to {out_dir}")
    return 0


def _add_resource_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lexicon", help="food word list (one word per line)")
    parser.add_argument("--pos", help="POS lexicon (word<TAB>tag)")
    parser.add_argument("--embeddings", help="embedding text file")
    parser.add_argument("--dim", type=int, help="embedding dimension")
    parser.add_argument("--pron-dict", dest="pron_dict", help="pronunciation dictionary")
    parser.add_argument("--inventory", help="phoneme inventory file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="punsocial",
        description="Generate food-pun movie titles with an evolutionary master "
        "and socialize a trainable apprentice under four parenting styles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prepare", help="filter titles and match peer comments")
    p.add_argument("--titles", help="title<TAB>votes file")
    p.add_argument("--comments", help="raw comments, one per line")
    p.add_argument("--min-votes", dest="min_votes", type=int)
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_prepare)

    p = sub.add_parser("master", help="run the evolutionary master over all titles")
    p.add_argument("--titles")
    p.add_argument("--min-votes", dest="min_votes", type=int)
    _add_resource_flags(p)
    p.add_argument("--mu", type=int)
    p.add_argument("--lambda", dest="lambda_", type=int)
    p.add_argument("--generations", type=int)
    p.add_argument("--crossover-prob", dest="crossover_prob", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--config")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_master)

    p = sub.add_parser("socialize", help="run parenting-style training experiments")
    p.add_argument("--style", choices=PARENTING_STYLES + ("all",), default="all")
    p.add_argument("--iterations", type=int)
    p.add_argument("--steps", type=int)
    p.add_argument("--apprentice", help="'reference' or 'bridge:<command>'")
    p.add_argument("--master-corpus", dest="master_corpus")
    p.add_argument("--peer-corpus", dest="peer_corpus")
    p.add_argument("--titles")
    p.add_argument("--min-votes", dest="min_votes", type=int)
    _add_resource_flags(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--config")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_socialize)

    p = sub.add_parser("plot", help="render metric trajectories as SVG line charts")
    p.add_argument("--runs", nargs="+", required=True, help="socialize output directories")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (DataFormatError, ExperimentError, BridgeError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
