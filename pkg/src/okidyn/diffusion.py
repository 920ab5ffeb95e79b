"""Deterministic technology trajectories for innovator and follower sectors.

Innovating coefficients decay exponentially toward their frontier values in
closed form.  Follower coefficients satisfy a gap-driven ODE: their adoption
rate is proportional to how much of the innovator's transition is already
complete, so the follower starts frozen and accelerates as the innovator
finishes.  Constant paths cover coefficients that never change.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .economy import TechnologyState
from .errors import ValidationError, WrongKindError

INNOVATOR = "innovator"
FOLLOWER = "follower"
CONSTANT = "constant"
_KINDS = (INNOVATOR, FOLLOWER, CONSTANT)

_TARGET_RE = re.compile(r"^(A([1-9])([1-9])|l([1-9]))$")


@dataclass(frozen=True)
class CoefficientPath:
    """Time path of a single technical coefficient.

    ``initial`` is the value at t = 0, ``frontier`` the asymptote, ``kappa``
    the adoption speed (per unit time).  Technical progress only: the
    frontier may not exceed the initial value.
    """

    initial: float
    frontier: float
    kappa: float = 0.0
    kind: str = CONSTANT

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValidationError(f"unknown path kind {self.kind!r}")
        if self.initial < 0 or self.frontier < 0:
            raise ValidationError("coefficients must be nonnegative")
        if self.frontier > self.initial:
            raise ValidationError(
                f"frontier {self.frontier} exceeds initial {self.initial}; "
                "technical progress must weakly lower coefficients"
            )
        if self.kind != CONSTANT and self.kappa <= 0:
            raise ValidationError(f"{self.kind} path needs a positive adoption speed")


def innovator_value(path: CoefficientPath, t: float) -> float:
    """Closed-form innovator coefficient: frontier plus a decaying gap."""
    if path.kind != INNOVATOR:
        raise WrongKindError(f"innovator_value called on a {path.kind} path")
    return path.frontier + (path.initial - path.frontier) * math.exp(-path.kappa * t)


def innovator_rate(path: CoefficientPath, t: float) -> float:
    """Time derivative of the innovator closed form; nonpositive."""
    if path.kind != INNOVATOR:
        raise WrongKindError(f"innovator_rate called on a {path.kind} path")
    return -path.kappa * (path.initial - path.frontier) * math.exp(-path.kappa * t)


def gap_factor(innovator_path: CoefficientPath, t: float) -> float:
    """Fraction of the innovator's transition completed by time t.

    Equals ``1 - exp(-kappa * t)``, rising from 0 toward 1.  A degenerate
    path (initial == frontier) counts as already complete and returns 1.
    """
    if innovator_path.kind != INNOVATOR:
        raise WrongKindError(f"gap_factor called on a {innovator_path.kind} path")
    if innovator_path.initial == innovator_path.frontier:
        return 1.0
    return 1.0 - math.exp(-innovator_path.kappa * t)


def follower_rhs(current: float, path: CoefficientPath, gap: float) -> float:
    """Adoption rate of a follower coefficient, scaled by the innovator gap.

    Zero at the frontier and while the innovator has not moved; nonpositive
    whenever the coefficient sits at or above its frontier.
    """
    if path.kind != FOLLOWER:
        raise WrongKindError(f"follower_rhs called on a {path.kind} path")
    return -path.kappa * (current - path.frontier) * gap


def parse_target(target: str, n: int):
    """Turn a coefficient identifier like ``A12`` or ``l2`` into an index.

    Returns ``("A", i, j)`` or ``("l", j)`` with 0-based indices.
    """
    m = _TARGET_RE.match(target)
    if not m:
        raise ValidationError(f"bad coefficient target {target!r} (expected e.g. 'A12' or 'l1')")
    if m.group(2) is not None:
        i, j = int(m.group(2)) - 1, int(m.group(3)) - 1
        if i >= n or j >= n:
            raise ValidationError(f"target {target!r} out of range for {n} sectors")
        return ("A", i, j)
    j = int(m.group(4)) - 1
    if j >= n:
        raise ValidationError(f"target {target!r} out of range for {n} sectors")
    return ("l", j)


@dataclass(frozen=True)
class DiffusionSchedule:
    """One CoefficientPath per matrix entry and per labor coefficient.

    ``paths`` maps targets ("A11", ..., "l1", ...) to paths; every
    coefficient must be covered exactly once.  Followers are driven by the
    unique innovator path of the same family (matrix entries track the
    innovator matrix entry, labor entries the innovator labor entry).
    """

    paths: dict[str, CoefficientPath]
    n: int
    _drivers: dict[str, str] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        expected = {f"A{i + 1}{j + 1}" for i in range(self.n) for j in range(self.n)}
        expected |= {f"l{j + 1}" for j in range(self.n)}
        missing = expected - self.paths.keys()
        extra = self.paths.keys() - expected
        if missing:
            raise ValidationError(f"schedule misses paths for {sorted(missing)}")
        if extra:
            raise ValidationError(f"schedule has paths for unknown targets {sorted(extra)}")

        drivers: dict[str, str] = {}
        for family in ("A", "l"):
            members = {k: p for k, p in self.paths.items() if k.startswith(family)}
            innovators = [k for k, p in members.items() if p.kind == INNOVATOR]
            followers = [k for k, p in members.items() if p.kind == FOLLOWER]
            if followers and len(innovators) != 1:
                raise ValidationError(
                    f"family {family!r} has follower paths but {len(innovators)} "
                    "innovator paths; followers need exactly one to track"
                )
            for k in followers:
                drivers[k] = innovators[0]
        object.__setattr__(self, "_drivers", drivers)

    def driver_for(self, target: str) -> CoefficientPath:
        """Innovator path whose gap drives the given follower target."""
        return self.paths[self._drivers[target]]

    def follower_targets(self) -> list[str]:
        """Follower targets in a fixed (sorted) order; defines the ODE state layout."""
        return sorted(k for k, p in self.paths.items() if p.kind == FOLLOWER)

    def initial_follower_values(self) -> dict[str, float]:
        return {k: self.paths[k].initial for k in self.follower_targets()}


def technology_at(
    schedule: DiffusionSchedule,
    t: float,
    follower_values: dict[str, float] | None = None,
) -> TechnologyState:
    """Assemble A(t), l(t) from closed forms and integrated follower values.

    ``follower_values`` holds the current integrated value of every follower
    coefficient (as advanced by the dynamics module); it may be omitted only
    when the schedule has no follower paths.
    """
    follower_values = follower_values or {}
    import numpy as np

    A = np.empty((schedule.n, schedule.n))
    l = np.empty(schedule.n)
    for target, path in schedule.paths.items():
        if path.kind == CONSTANT:
            value = path.initial
        elif path.kind == INNOVATOR:
            value = innovator_value(path, t)
        else:
            if target not in follower_values:
                raise ValidationError(f"no integrated value supplied for follower {target!r}")
            value = follower_values[target]
        idx = parse_target(target, schedule.n)
        if idx[0] == "A":
            A[idx[1], idx[2]] = value
        else:
            l[idx[1]] = value
    return TechnologyState(A=A, l=l)


def technology_rhs(
    schedule: DiffusionSchedule,
    t: float,
    follower_values: dict[str, float] | None = None,
):
    """Time derivatives (dA/dt, dl/dt) of all coefficients at time t.

    Constant paths contribute zero, innovators their closed-form rate, and
    followers the gap-driven rate at their current integrated value.
    """
    follower_values = follower_values or {}
    import numpy as np

    dA = np.zeros((schedule.n, schedule.n))
    dl = np.zeros(schedule.n)
    for target, path in schedule.paths.items():
        if path.kind == CONSTANT:
            continue
        if path.kind == INNOVATOR:
            rate = innovator_rate(path, t)
        else:
            gap = gap_factor(schedule.driver_for(target), t)
            rate = follower_rhs(follower_values[target], path, gap)
        idx = parse_target(target, schedule.n)
        if idx[0] == "A":
            dA[idx[1], idx[2]] = rate
        else:
            dl[idx[1]] = rate
    return dA, dl
