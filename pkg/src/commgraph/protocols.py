"""Two-party simulation of graph queries with per-query bit accounting.

Both parties know the construction; only the input bits are private.
A query is answered through the construction's lazy rules, with every
input-coordinate access routed through an explicit exchange: the first
party reveals its bit, the second reveals its bit, 2 bits on the wire.
Queries whose answers never touch an input coordinate cost 0 bits.

Capability separation is enforced dynamically: each party's input lives
in a guarded container that only the owning party's context may read.
Any other access raises CapabilityViolation and aborts the run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .bits import BitVec
from .embeddings.base import Embedding
from .graph import Query, QueryAnswer, query_kind
from .rng import derive_seed


class CapabilityViolation(RuntimeError):
    """A party's code path touched the other party's input."""


class BudgetExceeded(RuntimeError):
    """The algorithm tried to exceed its query budget."""


@dataclass
class TranscriptEntry:
    query_kind: str
    bits: int


@dataclass
class Transcript:
    entries: list[TranscriptEntry] = field(default_factory=list)

    @property
    def total_bits(self) -> int:
        return sum(e.bits for e in self.entries)

    @property
    def query_count(self) -> int:
        return len(self.entries)

    @property
    def max_bits_per_query(self) -> int:
        return max((e.bits for e in self.entries), default=0)

    def csv_rows(self, trial: int) -> list[tuple]:
        rows = []
        cumulative = 0
        for idx, e in enumerate(self.entries):
            cumulative += e.bits
            rows.append((trial, idx, e.query_kind, e.bits, cumulative))
        return rows


TRANSCRIPT_CSV_HEADER = ("trial", "query_index", "query_kind", "bits", "cumulative_bits")


class _GuardedBits:
    """Read access restricted to the owning party's active context."""

    __slots__ = ("_bits", "_owner", "_session")

    def __init__(self, bits: BitVec, owner: str, session: "ProtocolSession"):
        self._bits = bits
        self._owner = owner
        self._session = session

    def __getitem__(self, i: int) -> int:
        if self._session._active_party != self._owner:
            raise CapabilityViolation(
                f"{self._owner}'s input read outside {self._owner}'s context"
            )
        return self._bits[i]

    def __len__(self) -> int:
        return self._bits.n


class ProtocolSession:
    """One two-party run over a fixed instance.

    The session owns the transcript; queries are answered via
    ``simulate`` and charged 2 bits per input coordinate exchanged.
    """

    def __init__(self, inst: Embedding, seed: int):
        self.instance = inst
        self.alice_input = _GuardedBits(inst.pp.x, "alice", self)
        self.bob_input = _GuardedBits(inst.pp.y, "bob", self)
        self.shared_rng = random.Random(derive_seed(seed, 0xA))
        self.transcript = Transcript()
        self._active_party: Optional[str] = None
        self._current_coords: Optional[set[int]] = None

    def _read_as(self, party: str, guarded: _GuardedBits, coord: int) -> int:
        previous = self._active_party
        self._active_party = party
        try:
            return guarded[coord]
        finally:
            self._active_party = previous

    def exchange(self, coord: int) -> int:
        """Run the designated coordinate protocol: Alice sends her bit, Bob
        sends his.  Returns the AND.  Charged once per coordinate per query."""
        if self._current_coords is None:
            raise RuntimeError("exchange outside of a query simulation")
        xb = self._read_as("alice", self.alice_input, coord)
        yb = self._read_as("bob", self.bob_input, coord)
        self._current_coords.add(coord)
        return xb & yb

    def simulate(self, q: Query) -> QueryAnswer:
        self._current_coords = set()
        try:
            answer = self.instance.answer(q, self.exchange, self.shared_rng)
        finally:
            coords = self._current_coords
            self._current_coords = None
        self.transcript.entries.append(
            TranscriptEntry(query_kind(q), 2 * len(coords))
        )
        return answer


def simulate_query(sess: ProtocolSession, inst: Embedding, q: Query) -> QueryAnswer:
    if sess.instance is not inst and (
        sess.instance.pp != inst.pp or sess.instance.kind != inst.kind
    ):
        raise ValueError("session inputs differ from the instance's inputs")
    return sess.simulate(q)


class ReductionOracle:
    """Oracle view handed to an algorithm: every answer goes through the
    two-party simulation, and an optional budget caps the query count."""

    def __init__(self, session: ProtocolSession, budget: Optional[int] = None):
        self._session = session
        self.n = session.instance.n
        self.supported = session.instance.supported
        self.budget = budget
        self.queries_made = 0

    def answer(self, q: Query) -> QueryAnswer:
        if self.budget is not None and self.queries_made + 1 > self.budget:
            raise BudgetExceeded(f"budget of {self.budget} queries exhausted")
        ans = self._session.simulate(q)
        self.queries_made += 1
        return ans


Algorithm = Callable[[ReductionOracle, random.Random], int]


def run_reduction(
    inst: Embedding,
    algorithm: Algorithm,
    seed: int,
    budget: Optional[int] = None,
) -> tuple[int, Transcript]:
    """Run an oracle algorithm with every query routed through the two-party
    simulation.  The algorithm's randomness is the parties' shared stream, so
    its output plus the transcript is a communication protocol for the
    instance's promise problem."""
    session = ProtocolSession(inst, seed)
    oracle = ReductionOracle(session, budget)
    output = algorithm(oracle, session.shared_rng)
    return output, session.transcript
