"""Iterative group growth: at step a every group of a + 1 participants interacts.

Step 1 pairs everyone off (the complete graph), and each later step grows the
groups by one member until a single group holds all participants. The network
at step a is the closed union of everything emitted up to a.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence
from dataclasses import asdict, dataclass
from itertools import combinations

from .complex import DEFAULT_SIMPLEX_CAP, Simplex, SimplicialComplex, VertexUniverse
from .errors import RangeError
from .ses import OrderClass, SenNetwork, build_ses, ses_to_sen

__all__ = [
    "GrowthRun",
    "GrowthStep",
    "LedgerRow",
    "DEMO_PARTICIPANTS",
    "generate_step",
    "ledger_csv",
    "ledger_json",
    "participant_ids",
    "run_growth",
    "step_order_class",
]

DEMO_PARTICIPANTS = ("v_i", "v_j", "v_k", "v_l", "v_m")

LEDGER_COLUMNS = (
    "step",
    "input_count",
    "input_dimension",
    "simplex_dimension",
    "order_class",
    "output_count",
)


def participant_ids(n: int) -> tuple[str, ...]:
    if n == len(DEMO_PARTICIPANTS):
        return DEMO_PARTICIPANTS
    width = len(str(n - 1))
    return tuple(f"v{i:0{width}d}" for i in range(n))


def _check_step(n: int, step: int) -> None:
    if n < 2:
        raise RangeError(f"need at least 2 participants, got {n}")
    if not 1 <= step <= n - 1:
        raise RangeError(f"step {step} out of range 1..{n - 1} for {n} participants")


def generate_step(vertices: VertexUniverse | int, step: int) -> list[Simplex]:
    """All (step + 1)-member groups over the participants, in lexicographic order."""
    n = vertices if isinstance(vertices, int) else len(vertices)
    _check_step(n, step)
    return [Simplex._trusted(c) for c in combinations(range(n), step + 1)]


def step_order_class(step: int) -> OrderClass:
    if step < 1:
        raise RangeError(f"step must be at least 1, got {step}")
    return OrderClass.LOWER if step == 1 else OrderClass.HIGHER


@dataclass(frozen=True)
class GrowthStep:
    step: int
    emitted: tuple[Simplex, ...]
    cumulative: SimplicialComplex
    input_count: int

    @property
    def group_size(self) -> int:
        return self.step + 1

    @property
    def order_class(self) -> OrderClass:
        return step_order_class(self.step)


@dataclass(frozen=True)
class LedgerRow:
    step: int
    input_count: int
    input_dimension: int
    simplex_dimension: int
    order_class: str
    output_count: int

    def describe(self) -> str:
        plural = "simplex" if self.output_count == 1 else "simplices"
        return (
            f"{self.step}\t{self.input_count} {self.input_dimension}-simplices\t"
            f"dim={self.simplex_dimension}\t{self.order_class}\t"
            f"{self.output_count} {self.simplex_dimension}-{plural}"
        )


@dataclass(frozen=True)
class GrowthRun:
    network: SenNetwork
    steps: tuple[GrowthStep, ...]

    def ledger(self) -> list[LedgerRow]:
        return [
            LedgerRow(
                step=s.step,
                input_count=s.input_count,
                input_dimension=s.step - 1,
                simplex_dimension=s.step,
                order_class=s.order_class.value,
                output_count=len(s.emitted),
            )
            for s in self.steps
        ]


def run_growth(
    vertices: Sequence[str] | int,
    last_step: int,
    *,
    simplex_cap: int = DEFAULT_SIMPLEX_CAP,
) -> GrowthRun:
    """Run steps 1..last_step and assemble the cumulative network."""
    ids = participant_ids(vertices) if isinstance(vertices, int) else tuple(vertices)
    n = len(ids)
    _check_step(n, last_step)
    ses = build_ses(ids, (), allow_single_kind=True)
    emitted = {a: generate_step(n, a) for a in range(1, last_step + 1)}

    def cumulative(alpha: int):
        # largest groups first: their closure already contains the smaller ones
        for a in range(alpha, 0, -1):
            yield from emitted[a]

    network = ses_to_sen(ses, cumulative, range(1, last_step + 1), simplex_cap=simplex_cap)
    steps = []
    for a in network.time_index:
        input_count = n if a == 1 else len(emitted[a - 1])
        steps.append(GrowthStep(a, tuple(emitted[a]), network.at(a), input_count))
    return GrowthRun(network, tuple(steps))


def ledger_csv(rows: Sequence[LedgerRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=LEDGER_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(asdict(row))
    return buf.getvalue()


def ledger_json(rows: Sequence[LedgerRow]) -> str:
    return json.dumps({"columns": list(LEDGER_COLUMNS), "rows": [asdict(r) for r in rows]}, indent=2) + "\n"
