"""Scenario configuration schema and bundled experiment presets.

A ScenarioConfig fully determines a batch: arena and objects, robot variant,
timing, plasticity and dopamine options, and the seed.  Configs round-trip
through plain dicts (JSON), unknown or out-of-range fields fail validation
with the offending field named, and every preset below is expressible as
config alone.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
import math

from .architecture import (DA_BACKGROUND_DRIVE, INHIB_REST_OFFSET, LAYOUTS,
                           MOTOR_REST_OFFSET, NOISE_AMP, NOISE_BIAS,
                           SENSOR_REST_OFFSET, TOUCH_REST_OFFSET, VARIANTS)
from .plasticity import (A_MINUS, A_PLUS, DA_BASELINE, DA_BURST_THRESHOLD,
                         DA_DELAY_MS, DA_PER_SPIKE, DA_TAU_S,
                         DAMPEN_MEAN_LIMIT, DAMPEN_STEP, TAU_ELIG_S,
                         TAU_MINUS_S, TAU_PLUS_S)
from .sensorimotor import EXPLORATION_MEAN, RANGE_GAIN, TOUCH_MEAN, WINDOW_MS
from .world import SPEED_MAX, SPEED_MIN, turning_radius


@dataclass
class DopamineConfig:
    baseline: float = DA_BASELINE
    per_spike: float = DA_PER_SPIKE
    burst_threshold: int = DA_BURST_THRESHOLD
    decay_tau_s: float = DA_TAU_S
    release_delay_ms: int = DA_DELAY_MS
    background_drive: float = DA_BACKGROUND_DRIVE
    poison_context_ms: int = 50


@dataclass
class StdpConfig:
    a_plus: float = A_PLUS
    a_minus: float = A_MINUS
    tau_plus_s: float = TAU_PLUS_S
    tau_minus_s: float = TAU_MINUS_S
    elig_tau_s: float = TAU_ELIG_S


@dataclass
class NeuronConfig:
    literal_ab: bool = False
    noise_bias: float = NOISE_BIAS
    noise_amp: float = NOISE_AMP
    sensor_offset: float = SENSOR_REST_OFFSET
    touch_offset: float = TOUCH_REST_OFFSET
    motor_offset: float = MOTOR_REST_OFFSET
    inhib_offset: float = INHIB_REST_OFFSET
    da_burst: bool = True


@dataclass
class EncodeConfig:
    window_ms: int = WINDOW_MS
    range_gain: float = RANGE_GAIN
    touch_mean: float = TOUCH_MEAN
    exploration_mean: float = EXPLORATION_MEAN


@dataclass
class DampeningConfig:
    mean_limit: float = DAMPEN_MEAN_LIMIT
    step: float = DAMPEN_STEP


@dataclass
class RobotStart:
    """Start pose and wheel speeds; None fields fall back to arena defaults
    (centre position, heading 0, midpoint speeds)."""
    x: float | None = None
    y: float | None = None
    heading: float = 0.0
    v_left: float | None = None
    v_right: float | None = None


@dataclass
class ScenarioConfig:
    name: str
    kind: str
    variant: str
    arena_width: float = 100.0
    arena_height: float = 100.0
    duration_s: float = 1000.0
    trials: int = 20
    seed: int = 1
    n_food: int = 0
    n_food_containers: int = 0
    n_empty_containers: int = 0
    food_positions: list | None = None
    switch_to_poison_s: float | None = None
    robot: RobotStart = field(default_factory=RobotStart)
    dopamine: DopamineConfig = field(default_factory=DopamineConfig)
    stdp: StdpConfig = field(default_factory=StdpConfig)
    neuron: NeuronConfig = field(default_factory=NeuronConfig)
    encode: EncodeConfig = field(default_factory=EncodeConfig)
    dampening: DampeningConfig = field(default_factory=DampeningConfig)
    log_spikes: bool = False

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def validate(self) -> None:
        """Raise ValueError naming the offending field on any bad value."""
        _require(self.kind in LAYOUTS,
                 f"kind: must be one of {sorted(LAYOUTS)}, got {self.kind!r}")
        _require(self.variant in VARIANTS[self.kind],
                 f"variant: unknown name {self.variant!r} for kind {self.kind}")
        _require(_pos(self.arena_width), "arena_width: must be > 0")
        _require(_pos(self.arena_height), "arena_height: must be > 0")
        _require(_num(self.duration_s) and self.duration_s >= 0,
                 "duration_s: must be >= 0")
        _require(isinstance(self.trials, int) and self.trials >= 1,
                 "trials: must be an integer >= 1")
        _require(isinstance(self.seed, int) and self.seed >= 0,
                 "seed: must be a non-negative integer")
        for fname in ("n_food", "n_food_containers", "n_empty_containers"):
            val = getattr(self, fname)
            _require(isinstance(val, int) and val >= 0,
                     f"{fname}: must be a non-negative integer")
        if self.kind == "food_only":
            _require(self.n_food_containers == 0 and self.n_empty_containers == 0,
                     "n_food_containers: containers not allowed for kind food_only")
            _require(self.n_food >= 1 or self.food_positions,
                     "n_food: food_only scenarios need at least one food object")
        else:
            _require(self.n_food == 0 and not self.food_positions,
                     "n_food: loose food not allowed for kind food_container")
            _require(self.n_food_containers + self.n_empty_containers >= 1,
                     "n_food_containers: container scenarios need at least one container")
            _require(self.switch_to_poison_s is None,
                     "switch_to_poison_s: only valid for kind food_only")
        if self.food_positions is not None:
            for i, pos in enumerate(self.food_positions):
                ok = (len(pos) == 2 and _num(pos[0]) and _num(pos[1])
                      and 0 <= pos[0] <= self.arena_width
                      and 0 <= pos[1] <= self.arena_height)
                _require(ok, f"food_positions[{i}]: must be [x, y] inside the arena")
        if self.switch_to_poison_s is not None:
            _require(_num(self.switch_to_poison_s) and self.switch_to_poison_s >= 0,
                     "switch_to_poison_s: must be >= 0")
        r = self.robot
        if r.x is not None:
            _require(_num(r.x) and 0 <= r.x <= self.arena_width,
                     "robot.x: must lie inside the arena")
        if r.y is not None:
            _require(_num(r.y) and 0 <= r.y <= self.arena_height,
                     "robot.y: must lie inside the arena")
        _require(_num(r.heading), "robot.heading: must be a number")
        for fname in ("v_left", "v_right"):
            val = getattr(r, fname)
            if val is not None:
                _require(_pos(val), f"robot.{fname}: must be > 0")
        da = self.dopamine
        _require(_num(da.baseline), "dopamine.baseline: must be a number")
        _require(_num(da.per_spike), "dopamine.per_spike: must be a number")
        _require(isinstance(da.burst_threshold, int) and da.burst_threshold >= 0,
                 "dopamine.burst_threshold: must be a non-negative integer")
        _require(_pos(da.decay_tau_s) and da.decay_tau_s > 0.001,
                 "dopamine.decay_tau_s: must be > 0.001")
        _require(isinstance(da.release_delay_ms, int) and da.release_delay_ms >= 0,
                 "dopamine.release_delay_ms: must be a non-negative integer")
        _require(_num(da.background_drive), "dopamine.background_drive: must be a number")
        _require(isinstance(da.poison_context_ms, int) and da.poison_context_ms >= 0,
                 "dopamine.poison_context_ms: must be a non-negative integer")
        st = self.stdp
        _require(_num(st.a_plus) and st.a_plus >= 0, "stdp.a_plus: must be >= 0")
        _require(_num(st.a_minus) and st.a_minus >= 0, "stdp.a_minus: must be >= 0")
        _require(_pos(st.tau_plus_s), "stdp.tau_plus_s: must be > 0")
        _require(_pos(st.tau_minus_s), "stdp.tau_minus_s: must be > 0")
        _require(_pos(st.elig_tau_s) and st.elig_tau_s > 0.001,
                 "stdp.elig_tau_s: must be > 0.001")
        ne = self.neuron
        _require(isinstance(ne.literal_ab, bool), "neuron.literal_ab: must be a boolean")
        _require(_num(ne.noise_bias), "neuron.noise_bias: must be a number")
        _require(_num(ne.noise_amp) and ne.noise_amp >= 0,
                 "neuron.noise_amp: must be >= 0")
        _require(_num(ne.sensor_offset), "neuron.sensor_offset: must be a number")
        _require(_num(ne.touch_offset), "neuron.touch_offset: must be a number")
        _require(_num(ne.motor_offset), "neuron.motor_offset: must be a number")
        _require(_num(ne.inhib_offset), "neuron.inhib_offset: must be a number")
        _require(isinstance(ne.da_burst, bool), "neuron.da_burst: must be a boolean")
        en = self.encode
        _require(isinstance(en.window_ms, int) and en.window_ms >= 1,
                 "encode.window_ms: must be an integer >= 1")
        _require(_num(en.range_gain) and en.range_gain >= 0,
                 "encode.range_gain: must be >= 0")
        _require(_num(en.touch_mean) and en.touch_mean >= 0,
                 "encode.touch_mean: must be >= 0")
        _require(_num(en.exploration_mean) and en.exploration_mean >= 0,
                 "encode.exploration_mean: must be >= 0")
        dp = self.dampening
        _require(_pos(dp.mean_limit), "dampening.mean_limit: must be > 0")
        _require(_num(dp.step) and dp.step >= 0, "dampening.step: must be >= 0")
        _require(isinstance(self.log_spikes, bool), "log_spikes: must be a boolean")


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise ValueError(message)


def _num(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def _pos(x) -> bool:
    return _num(x) and x > 0


def _merge(obj, data: dict, path: str) -> None:
    names = {f.name for f in dataclasses.fields(obj)}
    for key, val in data.items():
        if key not in names:
            raise ValueError(f"{path}{key}: unknown field")
        cur = getattr(obj, key)
        if dataclasses.is_dataclass(cur) and isinstance(val, dict):
            _merge(cur, val, f"{path}{key}.")
        else:
            setattr(obj, key, val)


def config_from_dict(data: dict) -> ScenarioConfig:
    """Build and validate a config from a plain (JSON-loaded) dict."""
    if not isinstance(data, dict):
        raise ValueError("config: top level must be an object")
    for fname in ("kind", "variant"):
        if fname not in data:
            raise ValueError(f"{fname}: required field")
    cfg = ScenarioConfig(name=str(data.get("name", "custom")),
                         kind=data["kind"], variant=data["variant"])
    rest = {k: v for k, v in data.items() if k not in ("name", "kind", "variant")}
    _merge(cfg, rest, "")
    cfg.validate()
    return cfg


# the stable orbit circles food placed at the arena centre: with the wheels
# held at the extreme speeds the turning radius is ~4.53 cm, so starting that
# far below the food pointing +x locks a counter-clockwise orbit immediately
ORBIT_RADIUS = turning_radius(SPEED_MIN, SPEED_MAX)


def preset_orbiting() -> ScenarioConfig:
    return ScenarioConfig(
        name="orbiting", kind="food_only", variant="TaxisInitLearning",
        arena_width=100.0, arena_height=100.0, duration_s=40.0, trials=20,
        food_positions=[[50.0, 50.0]],
        robot=RobotStart(x=50.0, y=50.0 - ORBIT_RADIUS, heading=0.0,
                         v_left=SPEED_MIN, v_right=SPEED_MAX))


def preset_food_only() -> ScenarioConfig:
    return ScenarioConfig(
        name="food_only", kind="food_only", variant="Learning",
        arena_width=100.0, arena_height=100.0, duration_s=1000.0, trials=20,
        n_food=20)


def preset_food_poison() -> ScenarioConfig:
    return ScenarioConfig(
        name="food_poison", kind="food_only", variant="Learning",
        arena_width=100.0, arena_height=100.0, duration_s=2000.0, trials=20,
        n_food=20, switch_to_poison_s=1000.0)


def preset_dopamine_transfer() -> ScenarioConfig:
    return ScenarioConfig(
        name="dopamine_transfer", kind="food_container",
        variant="DopamineTransfer",
        arena_width=300.0, arena_height=300.0, duration_s=3000.0, trials=20,
        n_food_containers=12, n_empty_containers=12)


def preset_secondary_behaviour() -> ScenarioConfig:
    return ScenarioConfig(
        name="secondary_behaviour", kind="food_container",
        variant="ContainerDopamineLearning",
        arena_width=300.0, arena_height=300.0, duration_s=2000.0, trials=20,
        n_food_containers=17)


def preset_dual_learning() -> ScenarioConfig:
    return ScenarioConfig(
        name="dual_learning", kind="food_container", variant="DualLearning",
        arena_width=300.0, arena_height=300.0, duration_s=5000.0, trials=20,
        n_food_containers=20)


PRESETS = {
    "orbiting": preset_orbiting,
    "food_only": preset_food_only,
    "food_poison": preset_food_poison,
    "dopamine_transfer": preset_dopamine_transfer,
    "secondary_behaviour": preset_secondary_behaviour,
    "dual_learning": preset_dual_learning,
}


def get_preset(name: str) -> ScenarioConfig:
    if name not in PRESETS:
        raise ValueError(f"preset: unknown name {name!r}, "
                         f"available: {', '.join(sorted(PRESETS))}")
    cfg = PRESETS[name]()
    cfg.validate()
    return cfg
