"""Command-line interface: scenario runs, replay, benchmarks, the service."""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import numpy as np

from .config import PipelineConfig, load_config


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scene", help="scene document (JSON) overriding the scenario's")
    parser.add_argument("--config", help="pipeline config file (JSON)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--mode", default="high_level_gesture",
                        choices=("teleop", "low_level_gesture", "high_level_gesture"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="handlang",
                                     description="gesture sentence interpreter and tabletop simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario end to end")
    _common(p_run)
    p_run.add_argument("--scenario", required=True)
    p_run.add_argument("--session", help="session file instead of the scripted one")
    p_run.add_argument("--events-out", help="write the outbound event log (JSONL)")

    p_replay = sub.add_parser("replay", help="re-run a recorded session")
    _common(p_replay)
    p_replay.add_argument("session", help="session file (JSONL)")
    p_replay.add_argument("--events-out")

    p_bench = sub.add_parser("bench", help="classifier benchmarks (method x balanced accuracy)")
    _common(p_bench)
    p_bench.add_argument("--samples", type=int, default=200, help="static samples per class")
    p_bench.add_argument("--dynamic-samples", type=int, default=60)
    p_bench.add_argument("--noise", type=float, default=0.004)

    p_train = sub.add_parser("train-static", help="train the static gesture model")
    _common(p_train)
    p_train.add_argument("--out", required=True, help="model file to write")
    p_train.add_argument("--samples", type=int, default=200)
    p_train.add_argument("--noise", type=float, default=0.004)

    p_plot = sub.add_parser("plot-episode", help="emit the probability/activation table of an event log")
    _common(p_plot)
    p_plot.add_argument("events", help="event log (JSONL) from run/replay")

    p_serve = sub.add_parser("serve", help="run the websocket event service")
    _common(p_serve)
    p_serve.add_argument("--scenario", default="put_in_bowl")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8765)

    p_explain = sub.add_parser("explain", help="dump a scenario's behavior tree outline")
    _common(p_explain)
    p_explain.add_argument("--scenario", required=True)

    p_metrics = sub.add_parser("bench-modes",
                               help="evaluated scenarios x assistance modes comparison table")
    _common(p_metrics)
    return parser


def _config(args) -> PipelineConfig:
    return load_config(args.config) if args.config else PipelineConfig()


def cmd_run(args) -> int:
    from .service import read_session, run_scenario, _serialize_event

    source = None
    if args.session:
        _, source = read_session(args.session)
    scene = None
    if args.scene:
        with open(args.scene, "r", encoding="utf-8") as fh:
            scene = json.load(fh)
    report, pipeline = run_scenario(args.scenario, args.mode, source, seed=args.seed,
                                    scene_override=scene, config=_config(args),
                                    collect_events=True)
    if args.events_out:
        with open(args.events_out, "w", encoding="utf-8") as fh:
            for event in pipeline.events:
                fh.write(_serialize_event(event) + "\n")
    print(json.dumps(report.to_doc(), indent=2, sort_keys=True))
    return 0 if report.success else 1


def cmd_replay(args) -> int:
    from .service import replay

    report, lines = replay(args.session)
    if args.events_out:
        with open(args.events_out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    print(json.dumps(report.to_doc(), indent=2, sort_keys=True))
    return 0 if report.success else 1


def cmd_bench(args) -> int:
    from .classify import (GestureSet, StaticRules, balanced_accuracy, classify_dynamic,
                           classify_static, classify_static_deterministic, euclidean_baseline,
                           train_static, DynamicTemplates)
    from .handstream import FeatureVector
    from .synth import default_templates, dynamic_dataset, static_dataset

    gs = GestureSet()
    x, y = static_dataset(gs.static_labels, args.samples, noise=args.noise, seed=args.seed)
    rng = np.random.default_rng(args.seed + 1)
    idx = rng.permutation(len(x))
    cut = int(0.75 * len(x))
    train_idx, test_idx = idx[:cut], idx[cut:]
    model = train_static(x[train_idx], [y[i] for i in train_idx], gs, seed=args.seed)
    rules = StaticRules()
    nn_preds, det_preds, truth = [], [], []
    for i in test_idx:
        fv = FeatureVector(values=x[i])
        nn_preds.append(model.labels[int(np.argmax(classify_static(model, fv)))])
        det_preds.append(classify_static_deterministic(rules, fv))
        truth.append(y[i])
    templates = DynamicTemplates(templates=default_templates())
    samples, dyn_truth = dynamic_dataset(args.dynamic_samples, seed=args.seed + 2)
    dtw_preds = [classify_dynamic(templates, s)[0] for s in samples]
    euc_preds = [euclidean_baseline(templates, s)[0] for s in samples]

    rows = [
        ("static", "deterministic", balanced_accuracy(det_preds, truth)),
        ("static", "probabilistic-nn", balanced_accuracy(nn_preds, truth)),
        ("dynamic", "euclidean", balanced_accuracy(euc_preds, dyn_truth)),
        ("dynamic", "dtw", balanced_accuracy(dtw_preds, dyn_truth)),
    ]
    print(f"{'type':<8} {'method':<18} {'BA':>6}")
    for kind, method, ba in rows:
        print(f"{kind:<8} {method:<18} {100 * ba:>5.1f}%")
    return 0


def cmd_train_static(args) -> int:
    from .classify import GestureSet, train_static
    from .synth import static_dataset

    gs = GestureSet()
    x, y = static_dataset(gs.static_labels, args.samples, noise=args.noise, seed=args.seed)
    model = train_static(x, y, gs, seed=args.seed)
    model.save(args.out)
    print(f"wrote {args.out} ({len(gs.static_labels)} classes, layout {model.layout_tag})")
    return 0


def cmd_plot_episode(args) -> int:
    from .service import episode_table, format_episode_table

    with open(args.events, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line.strip()]
    print(format_episode_table(episode_table(lines)))
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    try:
        asyncio.run(serve(args.host, args.port, scenario_id=args.scenario,
                          mode=args.mode, seed=args.seed))
    except KeyboardInterrupt:
        pass
    return 0


def cmd_explain(args) -> int:
    from .behavior import build_tree, render_tree
    from .scenarios import catalog
    from .sentence import Intent
    from .simworld import load_scene

    scn = catalog()[args.scenario]
    if scn.expected_intent is None:
        print(f"scenario {args.scenario!r} has no single intent to explain", file=sys.stderr)
        return 2
    action, target, ap = scn.expected_intent
    locations = tuple(a for a in ap if isinstance(a, str))
    metrics = tuple(("angle" if action in ("rotate", "pour") else "speed", a)
                    for a in ap if not isinstance(a, str))
    world = load_scene(scn.scene)
    config = _config(args).with_overrides(**scn.config_overrides)
    intent = Intent(action=action, target_object=target, locations=locations, metrics=metrics)
    tree = build_tree(intent, world, config)
    from .behavior import tick
    tick(tree, world)
    print(render_tree(tree.root))
    return 0


def cmd_bench_modes(args) -> int:
    from .service import evaluation_reports, format_metrics, report_metrics

    reports = evaluation_reports(seed=args.seed)
    print(format_metrics(report_metrics(reports)))
    return 0


COMMANDS = {
    "run": cmd_run,
    "replay": cmd_replay,
    "bench": cmd_bench,
    "train-static": cmd_train_static,
    "plot-episode": cmd_plot_episode,
    "serve": cmd_serve,
    "explain": cmd_explain,
    "bench-modes": cmd_bench_modes,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
