"""Toroidal arena, two-wheeled robot kinematics, objects and range sensing.

Distances and bearings use minimum-image conventions on the torus.  Range
sensors cover a quadrant each: the left sensor sees relative bearings in
[0, pi/2], the right sensor [-pi/2, 0]; an object dead ahead is seen by
both, and the per-modality winner-take-all resolves the tie randomly.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

WHEEL_SEPARATION_CM = 1.0
SPEED_MIN = 25.0
SPEED_MAX = 31.2
ROBOT_CONTACT_RADIUS = 0.5
FOOD_RADIUS = 2.4
CONTAINER_RADIUS = 14.0
FOOD_SENSE_RANGE = 30.0
CONTAINER_SENSE_RANGE = 60.0

EV_FOOD = 0
EV_POISON = 1
EV_ENTER_FOOD_CONTAINER = 2
EV_ENTER_EMPTY_CONTAINER = 3
EV_EXIT_CONTAINER = 4

HALF_PI = math.pi / 2.0
TWO_PI = 2.0 * math.pi
BEARING_EPS = 1e-9


@njit(cache=True)
def torus_delta(diff: float, size: float) -> float:
    """Minimum-image displacement component on a periodic axis."""
    half = 0.5 * size
    d = diff % size
    if d > half:
        d -= size
    elif d < -half:
        d += size
    return d


@njit(cache=True)
def torus_distance(ax, ay, bx, by, w, h) -> float:
    dx = torus_delta(bx - ax, w)
    dy = torus_delta(by - ay, h)
    return math.sqrt(dx * dx + dy * dy)


@njit(cache=True)
def wrap_position(x: float, size: float) -> float:
    x = x % size
    if x < 0.0:
        x += size
    return x


@njit(cache=True)
def wrap_heading(theta: float) -> float:
    theta = theta % TWO_PI
    if theta < 0.0:
        theta += TWO_PI
    return theta


@njit(cache=True)
def advance_robot(x, y, heading, v_left, v_right, dt_s, w, h):
    """Exact arc integration of the differential-drive pose over dt_s."""
    omega = (v_right - v_left) / WHEEL_SEPARATION_CM
    v = 0.5 * (v_right + v_left)
    if abs(omega) < 1e-12:
        x += v * dt_s * math.cos(heading)
        y += v * dt_s * math.sin(heading)
    else:
        r = v / omega
        x += r * (math.sin(heading + omega * dt_s) - math.sin(heading))
        y -= r * (math.cos(heading + omega * dt_s) - math.cos(heading))
        heading += omega * dt_s
    return wrap_position(x, w), wrap_position(y, h), wrap_heading(heading)


def turning_radius(v_left: float, v_right: float) -> float:
    """Radius of the circle traced when the wheels hold unequal speeds."""
    return (WHEEL_SEPARATION_CM / 2.0) * (v_left + v_right) / abs(v_right - v_left)


@njit(cache=True)
def sense_sides(rx, ry, heading, w, h, ox, oy, mask, sense_range):
    """Closest-object quadrant responses (left, right), before winner-take-all.

    Response falls off linearly with centre distance: max(0, 1 - d/range).
    """
    left = 0.0
    right = 0.0
    for i in range(ox.shape[0]):
        if not mask[i]:
            continue
        dx = torus_delta(ox[i] - rx, w)
        dy = torus_delta(oy[i] - ry, h)
        d = math.sqrt(dx * dx + dy * dy)
        if d >= sense_range:
            continue
        resp = 1.0 - d / sense_range
        bearing = math.atan2(dy, dx) - heading
        while bearing > math.pi:
            bearing -= TWO_PI
        while bearing <= -math.pi:
            bearing += TWO_PI
        # tolerance keeps the quadrant edges stable when an object sits at
        # exactly +-pi/2, e.g. while circling it at the minimum turn radius
        if -BEARING_EPS <= bearing <= HALF_PI + BEARING_EPS and resp > left:
            left = resp
        if -HALF_PI - BEARING_EPS <= bearing <= BEARING_EPS and resp > right:
            right = resp
    return left, right


@njit(cache=True)
def winner_take_all(left, right, tie_draw):
    """Suppress the weaker side; equal nonzero responses break randomly."""
    if left > right:
        return left, 0.0
    if right > left:
        return 0.0, right
    if left == 0.0:
        return 0.0, 0.0
    if tie_draw < 0.5:
        return left, 0.0
    return 0.0, right


@njit(cache=True)
def respawn_free_position(g, w, h, avoid_x, avoid_y, avoid_r, cx, cy, c_clear):
    """Uniform rejection sample keeping clear of one point and the containers.

    avoid_*: exclusion disc (typically the robot); cx/cy with c_clear give a
    per-container clearance radius.  Gives up after 1000 tries and returns
    the last candidate, which on the sparse arenas used here never happens.
    """
    x = g.random() * w
    y = g.random() * h
    for _ in range(1000):
        x = g.random() * w
        y = g.random() * h
        if torus_distance(x, y, avoid_x, avoid_y, w, h) <= avoid_r:
            continue
        ok = True
        for j in range(cx.shape[0]):
            if torus_distance(x, y, cx[j], cy[j], w, h) <= c_clear[j]:
                ok = False
                break
        if ok:
            break
    return x, y


@njit(cache=True)
def log_event(ev_t, ev_kind, counters, t_ms, kind):
    k = counters[0]
    if k < ev_t.shape[0]:
        ev_t[k] = t_ms
        ev_kind[k] = kind
        counters[0] = k + 1


@njit(cache=True)
def resolve_contacts_food(g, t_ms, rx, ry, fx, fy, fkind, w, h,
                          ev_t, ev_kind, counters, touch_flags):
    """Collection pass for the open-arena layout.

    Touched objects respawn uniformly away from the robot.  counters:
    [0]=events logged, [1]=food collected, [2]=poison collected.  Returns
    True when a poison object was touched this tick.
    """
    contact = FOOD_RADIUS + ROBOT_CONTACT_RADIUS
    no_containers = np.zeros(0)
    poison_hit = False
    for i in range(fx.shape[0]):
        if torus_distance(rx, ry, fx[i], fy[i], w, h) < contact:
            if fkind[i] == 0:
                log_event(ev_t, ev_kind, counters, t_ms, EV_FOOD)
                counters[1] += 1
            else:
                log_event(ev_t, ev_kind, counters, t_ms, EV_POISON)
                counters[2] += 1
                poison_hit = True
            touch_flags[0] = True
            nx, ny = respawn_free_position(g, w, h, rx, ry, contact + 0.1,
                                           no_containers, no_containers,
                                           no_containers)
            fx[i] = nx
            fy[i] = ny
    return poison_hit


@njit(cache=True)
def resolve_contacts_containers(g, t_ms, rx, ry, cx, cy, ckind, fx, fy, w, h,
                                inside, ev_t, ev_kind, counters, touch_flags):
    """Collection and entry/exit pass for the container layout.

    Food lives at its container's centre and is collectable only while the
    robot is inside that container; collecting relocates the container with
    fresh food, which also puts the robot back outside.  inside: one-slot
    array holding the current container index or -1.
    """
    contact = FOOD_RADIUS + ROBOT_CONTACT_RADIUS
    n = cx.shape[0]
    ins = inside[0]
    if ins >= 0 and ckind[ins] == 0:
        if torus_distance(rx, ry, fx[ins], fy[ins], w, h) < contact:
            log_event(ev_t, ev_kind, counters, t_ms, EV_FOOD)
            counters[1] += 1
            touch_flags[0] = True
            ox = np.empty(n - 1)
            oy = np.empty(n - 1)
            clear = np.full(n - 1, 2.0 * CONTAINER_RADIUS)
            k = 0
            for j in range(n):
                if j != ins:
                    ox[k] = cx[j]
                    oy[k] = cy[j]
                    k += 1
            nx, ny = respawn_free_position(g, w, h, rx, ry,
                                           CONTAINER_RADIUS + 1.0,
                                           ox, oy, clear)
            cx[ins] = nx
            cy[ins] = ny
            fx[ins] = nx
            fy[ins] = ny
            inside[0] = -1
            log_event(ev_t, ev_kind, counters, t_ms, EV_EXIT_CONTAINER)
    ins = inside[0]
    if ins >= 0:
        if torus_distance(rx, ry, cx[ins], cy[ins], w, h) >= CONTAINER_RADIUS:
            inside[0] = -1
            log_event(ev_t, ev_kind, counters, t_ms, EV_EXIT_CONTAINER)
    if inside[0] < 0:
        for j in range(n):
            if torus_distance(rx, ry, cx[j], cy[j], w, h) < CONTAINER_RADIUS:
                inside[0] = j
                if ckind[j] == 0:
                    log_event(ev_t, ev_kind, counters, t_ms,
                              EV_ENTER_FOOD_CONTAINER)
                    touch_flags[1] = True
                else:
                    log_event(ev_t, ev_kind, counters, t_ms,
                              EV_ENTER_EMPTY_CONTAINER)
                    touch_flags[2] = True
                break
    return False


class Arena:
    """Mutable world state for one trial.

    Two layouts exist: free food objects scattered in the open, or circular
    containers each of which either holds one food object at its centre or
    is empty.  Food inside a container is only sensed and collectable while
    the robot is inside that container; containers are only sensed while the
    robot is outside all of them.
    """

    def __init__(self, width: float, height: float,
                 n_food: int = 0, n_food_containers: int = 0,
                 n_empty_containers: int = 0,
                 rng: np.random.Generator | None = None):
        self.width = float(width)
        self.height = float(height)
        self.rng = rng if rng is not None else np.random.default_rng()
        self.has_containers = (n_food_containers + n_empty_containers) > 0

        if self.has_containers:
            n = n_food_containers + n_empty_containers
            self.container_x = np.zeros(n)
            self.container_y = np.zeros(n)
            # kind 0 holds food, kind 1 is empty
            self.container_kind = np.concatenate([
                np.zeros(n_food_containers, dtype=np.int8),
                np.ones(n_empty_containers, dtype=np.int8)])
            self._scatter_containers()
            self.food_x = self.container_x[:n_food_containers].copy()
            self.food_y = self.container_y[:n_food_containers].copy()
            self.food_kind = np.zeros(n_food_containers, dtype=np.int8)
        else:
            self.container_x = np.zeros(0)
            self.container_y = np.zeros(0)
            self.container_kind = np.zeros(0, dtype=np.int8)
            self.food_x = self.rng.random(n_food) * self.width
            self.food_y = self.rng.random(n_food) * self.height
            self.food_kind = np.zeros(n_food, dtype=np.int8)

    def _scatter_containers(self) -> None:
        n = self.container_x.shape[0]
        clear = np.full(n, 2.0 * CONTAINER_RADIUS)
        for i in range(n):
            x, y = respawn_free_position(
                self.rng, self.width, self.height, -1e9, -1e9, 0.0,
                self.container_x[:i], self.container_y[:i], clear[:i])
            self.container_x[i] = x
            self.container_y[i] = y

    def switch_food_to_poison(self) -> None:
        self.food_kind[:] = 1
