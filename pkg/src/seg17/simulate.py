"""Deterministic simulation of a time-multiplexed display driver.

One tick is one position's on-window: tick t asserts position t mod N
with that position's segment word (zero for unfilled positions).  A
frame is N consecutive ticks, so every position is lit exactly once per
frame and the duty cycle settles at 1/N over whole frames.  Timestamps
are integer microseconds, floored, for reproducible traces.

No blanking interval between positions is modeled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import SimulationError
from .segments import FULL_WORD, word_hex

MAX_POSITIONS = 64


@dataclass(frozen=True)
class DisplayConfig:
    positions: int
    refresh_hz: float
    content: tuple[int, ...] = ()

    def __post_init__(self):
        if not 1 <= self.positions <= MAX_POSITIONS:
            raise SimulationError(
                f"positions must be 1..{MAX_POSITIONS}, got {self.positions}"
            )
        if self.refresh_hz <= 0:
            raise SimulationError(f"refresh rate must be positive, got {self.refresh_hz}")
        if len(self.content) > self.positions:
            raise SimulationError(
                f"content holds {len(self.content)} words but only "
                f"{self.positions} positions exist"
            )
        for word in self.content:
            if not 0 <= word <= FULL_WORD:
                raise SimulationError(f"content word {word:#x} out of range")

    @property
    def tick_rate(self) -> float:
        """Ticks per second: refresh rate times position count."""
        return self.refresh_hz * self.positions


@dataclass(frozen=True)
class TickRecord:
    tick: int
    us: int
    position: int
    word: int


@dataclass(frozen=True)
class FrameTrace:
    positions: int
    ticks: tuple[TickRecord, ...]


def run_simulation(config: DisplayConfig, ticks: int) -> FrameTrace:
    """Run the scan for a number of ticks and record every line state."""
    if ticks < 0:
        raise SimulationError(f"tick count must be non-negative, got {ticks}")
    words = list(config.content) + [0] * (config.positions - len(config.content))
    rate = config.tick_rate
    # exact integer floor when the rate is whole, float floor otherwise
    if rate == int(rate):
        stamp = lambda t: t * 1_000_000 // int(rate)
    else:
        stamp = lambda t: int(t * 1_000_000 / rate)
    records = tuple(
        TickRecord(
            tick=t,
            us=stamp(t),
            position=t % config.positions,
            word=words[t % config.positions],
        )
        for t in range(ticks)
    )
    return FrameTrace(config.positions, records)


def duty_cycle(trace: FrameTrace, position: int) -> float:
    """Fraction of ticks the position was active; 0.0 for an empty trace."""
    if not 0 <= position < trace.positions:
        raise SimulationError(
            f"position {position} out of range (trace has {trace.positions})"
        )
    if not trace.ticks:
        return 0.0
    active = sum(1 for record in trace.ticks if record.position == position)
    return active / len(trace.ticks)


def trace_to_csv(trace: FrameTrace) -> str:
    """CSV dump: tick,us,position,word_hex with one row per tick."""
    lines = ["tick,us,position,word_hex"]
    lines += [
        f"{r.tick},{r.us},{r.position},{word_hex(r.word)}" for r in trace.ticks
    ]
    return "\n".join(lines) + "\n"
