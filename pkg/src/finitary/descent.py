"""Weakly decreasing ordinal sequences and stabilization monitoring.

A `SequenceProgram` is a finitely presented generator: a deterministic
step function from an opaque state to (output ordinal, next state).
`monitor` runs one for a bounded number of steps, verifies weak decrease
at every adjacent pair, and reports either a *sound* stabilization
certificate (the program revisited a state and the output over the cycle
is constant, so the tail is provably constant) or, on budget exhaustion,
an inconclusive trailing-window observation.  The two are never conflated.
"""

from dataclasses import dataclass
from typing import Any, Callable, Optional

from .ordinals import GREATER, LESS, Ordinal, compare, render_brackets

#: Default size of the trailing equal-output window reported as an
#: inconclusive heuristic when the budget runs out.
DEFAULT_WINDOW = 8

CERT_STATE_CYCLE = "state-cycle"
CERT_BUDGET_WINDOW = "budget-window"


@dataclass(frozen=True)
class SequenceProgram:
    """A deterministic ordinal-sequence generator.

    ``step`` maps a state to (output, next state); the output depends only
    on the current state.  States must be hashable for cycle detection.
    ``state_space_bound`` may record a known bound on the number of
    distinct states of a finite-state program.
    """

    initial_state: Any
    step: Callable[[Any], tuple[Ordinal, Any]]
    state_space_bound: Optional[int] = None
    description: str = ""


@dataclass
class DescentReport:
    """Outcome of monitoring a sequence program.

    ``violation`` and ``stabilized_at`` are mutually exclusive (1-based
    indices).  ``certificate`` qualifies ``stabilized_at``: "state-cycle"
    is sound, "budget-window" is a heuristic observation only.
    """

    inspected: int
    strict_decreases: int
    violation: Optional[int]
    stabilized_at: Optional[int]
    certificate: Optional[str]
    final_value: Ordinal

    def to_line(self) -> str:
        return (
            f"inspected={self.inspected}"
            f" decreases={self.strict_decreases}"
            f" violation={self.violation if self.violation is not None else '-'}"
            f" stabilized_at={self.stabilized_at if self.stabilized_at is not None else '-'}"
            f" certificate={self.certificate or '-'}"
            f" final={render_brackets(self.final_value)}"
        )

    def to_payload(self) -> dict:
        return {
            "inspected": self.inspected,
            "strict_decreases": self.strict_decreases,
            "violation": self.violation,
            "stabilized_at": self.stabilized_at,
            "certificate": self.certificate,
            "final_value": render_brackets(self.final_value),
        }


def monitor(program: SequenceProgram, budget: int, window: int = DEFAULT_WINDOW) -> DescentReport:
    """Run a program for up to ``budget`` steps and audit the outputs.

    Flags the first weak-decrease violation (index i with a_i < a_{i+1}).
    When the program revisits a state, the future output is the detected
    cycle repeated forever, so the monitor either certifies stabilization
    (constant cycle output) or pinpoints the violation the wrap-around
    implies.  Without a revisit, a trailing window of ``window`` equal
    outputs at budget exhaustion is reported as inconclusive.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    outputs: list[Ordinal] = []
    strict = 0
    state = program.initial_state
    seen = {state: 1}  # state -> index of the step it precedes
    for i in range(1, budget + 1):
        value, state = program.step(state)
        outputs.append(value)
        if i >= 2:
            c = compare(outputs[i - 2], value)
            if c == LESS:
                return DescentReport(i, strict, i - 1, None, None, value)
            if c == GREATER:
                strict += 1
        first = seen.get(state)
        if first is not None:
            cycle = outputs[first - 1 : i]
            if all(v == cycle[0] for v in cycle):
                at = i
                while at > 1 and outputs[at - 2] == value:
                    at -= 1
                return DescentReport(i, strict, None, at, CERT_STATE_CYCLE, value)
            # non-constant cycle: the next output a_{i+1} equals a_first,
            # which strictly exceeds a_i, so the wrap is a violation at i
            return DescentReport(i, strict, i, None, None, value)
        seen[state] = i + 1
    if len(outputs) >= window and all(v == outputs[-1] for v in outputs[-window:]):
        at = len(outputs)
        while at > 1 and outputs[at - 2] == outputs[-1]:
            at -= 1
        return DescentReport(budget, strict, None, at, CERT_BUDGET_WINDOW, outputs[-1])
    return DescentReport(budget, strict, None, None, None, outputs[-1])


def canonical_descent(start: Ordinal, rule_seed: int) -> SequenceProgram:
    """A descent program from ``start`` down to the empty list.

    Each step rewrites the current ordinal: if its last constituent is
    empty, drop it; otherwise replace the last constituent c with
    ``rule_seed`` copies of c minus its own last constituent (a strictly
    smaller ordinal).  Outputs strictly decrease until the empty list is
    reached and then stay constant, so every run stabilizes.
    """
    if rule_seed < 0:
        raise ValueError("rule_seed must be >= 0")

    def advance(a: Ordinal) -> Ordinal:
        if not a:
            return a
        last = a[-1]
        if not last:
            return a[:-1]
        return a[:-1] + (last[:-1],) * rule_seed

    def step(state: Ordinal) -> tuple[Ordinal, Ordinal]:
        return state, advance(state)

    return SequenceProgram(
        initial_state=start,
        step=step,
        description=f"descent from {render_brackets(start)} (seed {rule_seed})",
    )


def constant_program(value: Ordinal) -> SequenceProgram:
    def step(state):
        return value, state
    return SequenceProgram((), step, state_space_bound=1,
                           description=f"constant {render_brackets(value)}")


def replay_program(values: list[Ordinal]) -> SequenceProgram:
    """Emit the given ordinals in order, then repeat the last forever."""
    if not values:
        raise ValueError("need at least one value")
    frozen = tuple(values)
    last = len(frozen) - 1

    def step(i: int) -> tuple[Ordinal, int]:
        return frozen[i], min(i + 1, last)

    return SequenceProgram(0, step, state_space_bound=len(frozen),
                           description=f"replay of {len(frozen)} values")
