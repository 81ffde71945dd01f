"""Scenario runner, session replay, metrics reports and the event service.

Sessions are append-only JSONL logs of inbound messages; replays of a session
under a fixed seed are byte-identical. The live service speaks the same
messages over a single WebSocket channel and broadcasts every outbound event
to all connected clients.
"""

from __future__ import annotations

import asyncio
import json
import statistics
from dataclasses import asdict, dataclass, field

from .config import PipelineConfig
from .pipeline import GesturePipeline, PipelineModels, default_models, jsonable
from .scenarios import EVAL_SCENARIOS, Scenario, catalog
from .simworld import load_scene

SESSION_SCHEMA = "session/v1"

MODES = ("teleop", "low_level_gesture", "high_level_gesture")


@dataclass
class ScenarioReport:
    scenario: str
    mode: str
    success: bool
    failure_reason: str | None
    ticks: int
    interaction_events: int
    total_input_events: int
    wall_time: float
    seed: int

    def to_doc(self) -> dict:
        return jsonable(asdict(self))


def _serialize_event(event: dict) -> str:
    return json.dumps(event, sort_keys=True, separators=(",", ":"))


def run_scenario(scenario_id: str, mode: str, session_source=None, *, seed: int = 0,
                 models: PipelineModels | None = None, scene_override: dict | None = None,
                 config: PipelineConfig | None = None,
                 collect_events: bool = False):
    """Run one scenario session through the full pipeline.

    Returns the report, or (report, pipeline) with collect_events for callers
    that need the outbound log and final world.
    """
    scenarios = catalog()
    if scenario_id not in scenarios:
        raise ValueError(f"unknown scenario {scenario_id!r}")
    scn = scenarios[scenario_id]
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    config = (config or PipelineConfig()).with_overrides(**scn.config_overrides)
    world = load_scene(scene_override if scene_override is not None else scn.scene)
    pipeline = GesturePipeline(world, config, models or default_models(),
                               seed=seed, mode=mode)
    if session_source is None:
        builder = scn.sessions.get(mode)
        if builder is None:
            raise ValueError(f"scenario {scenario_id!r} has no scripted {mode} session")
        messages = builder()
    else:
        messages = list(session_source)
    t0 = messages[0].get("t", 0.0) if messages else 0.0
    for message in messages:
        pipeline.handle(message)
    pipeline.flush()
    success = bool(scn.goal(pipeline.world)) and not pipeline.failures
    reason = None
    if not success:
        if pipeline.failures:
            reason = pipeline.failures[-1]
        elif not messages:
            reason = "no-intent"
        else:
            reason = f"goal not reached: {scn.goal_desc}"
    last_t = pipeline._last_t
    report = ScenarioReport(
        scenario=scenario_id, mode=mode, success=success, failure_reason=reason,
        ticks=pipeline.tick_count, interaction_events=pipeline.interaction_events,
        total_input_events=pipeline.total_input_events,
        wall_time=round(max(0.0, last_t - t0), 6), seed=seed)
    if collect_events:
        return report, pipeline
    return report


# -- session files ---------------------------------------------------------------

def write_session(path, scenario_id: str, mode: str, messages, *, seed: int = 0) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_serialize_event({"schema": SESSION_SCHEMA, "scenario": scenario_id,
                                   "mode": mode, "seed": seed}) + "\n")
        for message in messages:
            fh.write(_serialize_event(jsonable(message)) + "\n")


def read_session(path) -> tuple[dict, list[dict]]:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty session file")
    header = json.loads(lines[0])
    if header.get("schema") != SESSION_SCHEMA:
        raise ValueError(f"not a {SESSION_SCHEMA} file")
    return header, [json.loads(line) for line in lines[1:]]


def replay(path, *, models: PipelineModels | None = None):
    """Re-run a recorded session; returns (report, serialized event lines)."""
    header, messages = read_session(path)
    report, pipeline = run_scenario(header["scenario"], header["mode"], messages,
                                    seed=int(header.get("seed", 0)), models=models,
                                    collect_events=True)
    lines = [_serialize_event(e) for e in pipeline.events]
    return report, lines


# -- metrics ----------------------------------------------------------------------

def report_metrics(reports) -> dict:
    """Per-scenario, per-mode medians plus gesture-vs-teleop reductions."""
    if not reports:
        raise ValueError("no reports")
    table: dict[tuple[str, str], list[ScenarioReport]] = {}
    for r in reports:
        table.setdefault((r.scenario, r.mode), []).append(r)
    rows = []
    for (scenario, mode), rs in sorted(table.items()):
        rows.append({
            "scenario": scenario, "mode": mode,
            "runs": len(rs),
            "success_rate": sum(1 for r in rs if r.success) / len(rs),
            "median_wall_time": statistics.median(r.wall_time for r in rs),
            "median_interactions": statistics.median(r.interaction_events for r in rs),
        })
    reductions = {}
    by_key = {(row["scenario"], row["mode"]): row for row in rows}
    for scenario in sorted({r.scenario for r in reports}):
        teleop = by_key.get((scenario, "teleop"))
        gesture = by_key.get((scenario, "high_level_gesture"))
        if teleop and gesture and teleop["median_interactions"] > 0:
            reductions[scenario] = round(
                1.0 - gesture["median_interactions"] / teleop["median_interactions"], 4)
    return {"rows": rows, "interaction_reduction_vs_teleop": reductions}


def format_metrics(metrics: dict) -> str:
    lines = [f"{'scenario':<16} {'mode':<20} {'runs':>4} {'ok%':>5} {'time':>8} {'events':>7}"]
    for row in metrics["rows"]:
        lines.append(f"{row['scenario']:<16} {row['mode']:<20} {row['runs']:>4} "
                     f"{100 * row['success_rate']:>5.0f} {row['median_wall_time']:>8.2f} "
                     f"{row['median_interactions']:>7.0f}")
    for scenario, reduction in metrics["interaction_reduction_vs_teleop"].items():
        lines.append(f"{scenario}: high-level gesture needs "
                     f"{100 * (1 - reduction):.0f}% of teleop interactions "
                     f"({100 * reduction:.0f}% reduction)")
    return "\n".join(lines)


def evaluation_reports(*, seed: int = 0, models: PipelineModels | None = None) -> list[ScenarioReport]:
    """The three evaluated scenarios across all three assistance modes."""
    models = models or default_models()
    reports = []
    for sid in EVAL_SCENARIOS:
        for mode in MODES:
            reports.append(run_scenario(sid, mode, seed=seed, models=models))
    return reports


# -- episode log table ----------------------------------------------------------------

def episode_table(event_lines) -> list[dict]:
    """Flatten probs/activation events into plottable rows (the UI renders)."""
    rows = []
    for line in event_lines:
        event = json.loads(line) if isinstance(line, str) else line
        if event.get("type") == "probs":
            row = {"t": event["t"]}
            for label, p in event.get("static", {}).items():
                row[f"static:{label}"] = p
            for label, p in event.get("dynamic", {}).items():
                row[f"dynamic:{label}"] = p
            rows.append(row)
        elif event.get("type") == "episode_close":
            for ev in event.get("events", []):
                rows.append({"t": ev["start"], "activation": ev["label"],
                             "channel": ev["channel"], "until": ev["end"]})
    return rows


def format_episode_table(rows) -> str:
    if not rows:
        return "(no detection samples)"
    keys: list[str] = []
    for row in rows:
        for k in row:
            if k not in keys:
                keys.append(k)
    lines = ["\t".join(keys)]
    for row in rows:
        lines.append("\t".join("" if row.get(k) is None else str(row.get(k)) for k in keys))
    return "\n".join(lines)


# -- the websocket event service --------------------------------------------------------

class EventService:
    """One operator pipeline, broadcast to every connected client.

    Outbound queues are bounded; overflowed events are counted and reported
    to the affected client once it drains (never silently dropped).
    """

    def __init__(self, scenario_id: str = "put_in_bowl", mode: str = "high_level_gesture",
                 *, seed: int = 0, models: PipelineModels | None = None,
                 queue_size: int = 512):
        scn = catalog()[scenario_id]
        self.scenario = scn
        self.config = PipelineConfig().with_overrides(**scn.config_overrides)
        self.models = models or default_models()
        self.queue_size = queue_size
        self.pipeline = GesturePipeline(load_scene(scn.scene), self.config, self.models,
                                        seed=seed, mode=mode, emit=self._broadcast)
        self.clients: dict[object, dict] = {}

    def _broadcast(self, event: dict) -> None:
        for state in self.clients.values():
            queue: asyncio.Queue = state["queue"]
            if queue.full():
                state["overflow"] += 1
            else:
                queue.put_nowait(event)

    def hello_event(self) -> dict:
        return {"schema": "event/v1", "type": "hello", "t": self.pipeline._last_t,
                "scenario": self.scenario.sid, "mode": self.pipeline.control_mode,
                "interpreter_mode": self.pipeline.interpreter_mode,
                "world": jsonable(self.pipeline.world.to_doc())}

    async def handle_client(self, websocket) -> None:
        state = {"queue": asyncio.Queue(maxsize=self.queue_size), "overflow": 0}
        self.clients[websocket] = state
        sender = asyncio.create_task(self._sender(websocket, state))
        try:
            await websocket.send(_serialize_event(self.hello_event()))
            async for raw in websocket:
                try:
                    message = json.loads(raw)
                except json.JSONDecodeError as exc:
                    await websocket.send(_serialize_event(
                        {"schema": "event/v1", "type": "error", "t": self.pipeline._last_t,
                         "message": f"bad message: {exc.msg}"}))
                    continue
                self.pipeline.handle(message)
        finally:
            self.clients.pop(websocket, None)
            sender.cancel()

    async def _sender(self, websocket, state) -> None:
        while True:
            event = await state["queue"].get()
            if state["overflow"] and not state["queue"].full():
                dropped, state["overflow"] = state["overflow"], 0
                await websocket.send(_serialize_event(
                    {"schema": "event/v1", "type": "overflow", "t": event["t"],
                     "dropped": dropped}))
            await websocket.send(_serialize_event(event))

    async def pump(self, period: float = 0.1) -> None:
        """Advance pending plan execution on the wall clock (live mode only)."""
        while True:
            await asyncio.sleep(period)
            self.pipeline.advance(period)


async def serve(host: str = "127.0.0.1", port: int = 8765, *, scenario_id: str = "put_in_bowl",
                mode: str = "high_level_gesture", seed: int = 0,
                models: PipelineModels | None = None, ready: asyncio.Event | None = None):
    """Run the websocket event service until cancelled."""
    import websockets

    service = EventService(scenario_id, mode, seed=seed, models=models)
    async with websockets.serve(service.handle_client, host, port):
        pump = asyncio.create_task(service.pump())
        if ready is not None:
            ready.set()
        try:
            await asyncio.Future()
        finally:
            pump.cancel()
