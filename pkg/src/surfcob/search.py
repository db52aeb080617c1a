"""
Breadth-first witness search and bounded verification of the existence
criterion in :mod:`surfcob.decision`.

Search states are deduplicated up to homeomorphism: a state records the
phase, and the multiset of trace classes, each class being the sorted
components that are already linked through the trace graph.  The trace
graph of a witness is connected exactly when a single class remains,
because every trace node has a descendant at the last step.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .decision import decide
from .handles import (
    HandleMove,
    Join,
    Phase,
    Split,
    Witness,
    apply,
    legal_moves,
    validate,
)
from .surface import (
    Surface,
    SurfaceError,
    components_within,
    nonorientable_genus,
)


@dataclass(frozen=True)
class SearchBounds:
    """
    Limits of a bounded search.

    ``max_components``, ``max_p`` and ``max_genus`` bound the endpoint
    surfaces (components per side, crosscaps and orientable genus per
    component); the genus caps also apply to every intermediate
    component.  ``max_moves=None`` uses :func:`move_budget` per pair.
    ``max_live`` caps the number of components of intermediate surfaces.
    """

    max_components: int
    max_p: int
    max_genus: int
    max_moves: Optional[int] = None
    max_live: Optional[int] = None

    def __post_init__(self):
        if self.max_components < 1:
            raise SurfaceError("max_components must be >= 1")
        if self.max_p < 0 or self.max_genus < 0:
            raise SurfaceError("genus bounds must be >= 0")
        if self.max_moves is not None and self.max_moves < 1:
            raise SurfaceError("max_moves must be >= 1")

    @property
    def live_cap(self) -> int:
        if self.max_live is not None:
            return self.max_live
        return 2 * self.max_components + self.max_p + 1

    def holds(self, s: Surface) -> bool:
        if not 1 <= len(s) <= self.max_components:
            return False
        for c in s:
            if c.genus > (self.max_genus if c.orientable else self.max_p):
                return False
        return True

    def budget(self, fa: Surface, fb: Surface) -> int:
        h = move_budget(fa, fb)
        return h if self.max_moves is None else min(h, self.max_moves)


def move_budget(fa: Surface, fb: Surface) -> int:
    return nonorientable_genus(fa) + nonorientable_genus(fb) + 2 * (len(fa) + len(fb)) + 4


def surfaces_within(bounds: SearchBounds) -> List[Surface]:
    """Every surface (canonical form) satisfying ``bounds``, in canonical order."""
    types = components_within(bounds.max_p, bounds.max_genus)
    out = []
    for n in range(1, bounds.max_components + 1):
        out.extend(Surface(c) for c in itertools.combinations_with_replacement(types, n))
    return out


# -- state space ------------------------------------------------------------

StateKey = Tuple[int, Tuple[Tuple, ...]]


@dataclass
class _Node:
    surface: Surface
    labels: Tuple[int, ...]
    phase: Phase
    depth: int
    parent: Optional[StateKey]
    move: Optional[HandleMove]
    classes: int


def _key(surface: Surface, labels, phase: Phase) -> StateKey:
    groups: Dict[int, list] = {}
    for c, lab in zip(surface.components, labels):
        groups.setdefault(lab, []).append(c)
    return (int(phase), tuple(sorted(tuple(sorted(g)) for g in groups.values())))


def _relabel(labels, links, size) -> Tuple[int, ...]:
    """Trace-class labels after a move; a join merges its two parents' classes."""
    parents: List[List[int]] = [[] for _ in range(size)]
    for old, child in links:
        parents[child].append(labels[old])
    merged = {max(ps): min(ps) for ps in parents if len(set(ps)) == 2}
    return tuple(merged.get(min(ps), min(ps)) for ps in parents)


class _Explorer:
    """Breadth-first search over phase-ordered, trace-tracked handle sequences."""

    def __init__(self, start: Surface, bounds: SearchBounds, budget: int, interleave=False):
        self.start = start
        self.bounds = bounds
        self.budget = budget
        self.interleave = interleave
        self.nodes: Dict[StateKey, _Node] = {}
        # endpoint surface -> key of the first (shallowest) node reaching it
        self.endpoints: Dict[Surface, StateKey] = {}

    def _successors(self, node: _Node) -> Iterator[Tuple[HandleMove, Phase]]:
        phases = [Phase.TWO_HANDLE, Phase.ONE_HANDLE]
        if node.phase is Phase.ONE_HANDLE and not self.interleave:
            phases = [Phase.ONE_HANDLE]
        for phase in phases:
            seen = set()
            for m in legal_moves(node.surface, phase, self.bounds.max_p, self.bounds.max_genus):
                # moves on interchangeable components give the same state
                sig = _move_signature(node, m)
                if sig in seen:
                    continue
                seen.add(sig)
                yield m, (Phase.TWO_HANDLE if self.interleave else phase)

    def _hopeless(self, surface: Surface, classes: int, depth: int, target_size: int) -> bool:
        if len(surface) > self.bounds.live_cap:
            return True
        joins_needed = max(classes - 1, len(surface) - target_size)
        return depth + joins_needed > self.budget

    def run(self, target: Optional[Surface] = None) -> Optional[StateKey]:
        target_size = len(target) if target is not None else self.bounds.max_components
        labels = tuple(range(len(self.start)))
        root = _Node(self.start, labels, Phase.TWO_HANDLE, 0, None, None, len(self.start))
        root_key = ("root",)
        self.nodes[root_key] = root
        queue = deque([root_key])
        while queue:
            key = queue.popleft()
            node = self.nodes[key]
            if node.depth >= self.budget:
                continue
            for move, phase in self._successors(node):
                surface, links = apply(node.surface, move)
                new_labels = _relabel(node.labels, links, len(surface))
                classes = len(set(new_labels))
                depth = node.depth + 1
                if self._hopeless(surface, classes, depth, target_size):
                    continue
                child_key = _key(surface, new_labels, phase)
                if child_key in self.nodes:
                    continue
                self.nodes[child_key] = _Node(surface, new_labels, phase, depth, key, move, classes)
                queue.append(child_key)
                if classes == 1:
                    end = surface.canonical()
                    self.endpoints.setdefault(end, child_key)
                    if target is not None and end == target:
                        return child_key
        return None

    def witness(self, key: StateKey) -> Witness:
        moves = []
        while self.nodes[key].parent is not None:
            node = self.nodes[key]
            moves.append(node.move)
            key = node.parent
        return Witness.from_moves(self.start, reversed(moves))


def _move_signature(node: _Node, m: HandleMove):
    comps, labels = node.surface.components, node.labels
    if isinstance(m, Join):
        ends = sorted(((comps[m.first], labels[m.first]), (comps[m.second], labels[m.second])))
        same_class = labels[m.first] == labels[m.second]
        return ("join", same_class, tuple((c, lab) for c, lab in ends))
    payload = (m.left, m.right) if isinstance(m, Split) else (m.result,)
    return (type(m).__name__, comps[m.target], labels[m.target], payload)


def _check_inputs(bounds: SearchBounds, *surfaces: Surface) -> None:
    for s in surfaces:
        if len(s) == 0:
            raise SurfaceError("surface is empty")
        if not bounds.holds(s):
            raise SurfaceError(f"bounds too small to hold {s}")


def find_witness(fa: Surface, fb: Surface, bounds: SearchBounds) -> Optional[Witness]:
    """
    Shortest phase-ordered witness from ``fa`` to ``fb`` within ``bounds``.

    ``None`` only means nothing was found within the budget.
    """
    _check_inputs(bounds, fa, fb)
    explorer = _Explorer(fa, bounds, bounds.budget(fa, fb))
    key = explorer.run(target=fb.canonical())
    return None if key is None else explorer.witness(key)


def _reach_budget(fa: Surface, bounds: SearchBounds) -> int:
    if bounds.max_moves is not None:
        return bounds.max_moves
    widest = Surface([components_within(bounds.max_p, 0)[-1]] * bounds.max_components)
    return move_budget(fa, widest)


def enumerate_reachable(
    fa: Surface, bounds: SearchBounds, interleave: bool = False
) -> Dict[Surface, int]:
    """
    Surfaces within ``bounds`` reachable from ``fa`` by a witness, mapped to
    the length of the shortest one.

    With ``interleave=True`` 2-handles may follow 1-handles; this does not
    correspond to a single singular level and is kept for experiments.
    """
    _check_inputs(bounds, fa)
    explorer = _Explorer(fa, bounds, _reach_budget(fa, bounds), interleave=interleave)
    explorer.run()
    return {
        s: explorer.nodes[k].depth for s, k in explorer.endpoints.items() if bounds.holds(s)
    }


# -- verification -----------------------------------------------------------


@dataclass(frozen=True)
class PairRecord:
    source: str
    target: str
    exists: bool
    budget: int
    witness_length: Optional[int]
    witness_valid: Optional[bool]
    status: str  # "ok", "mismatch" or "undecided"


@dataclass
class VerificationReport:
    bounds: SearchBounds
    records: List[PairRecord] = field(default_factory=list)

    @property
    def checked_pairs(self) -> int:
        return len(self.records)

    @property
    def mismatches(self) -> List[PairRecord]:
        return [r for r in self.records if r.status == "mismatch"]

    @property
    def undecided(self) -> List[PairRecord]:
        return [r for r in self.records if r.status == "undecided"]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "bounds": asdict(self.bounds),
            "checked_pairs": self.checked_pairs,
            "mismatches": len(self.mismatches),
            "undecided": len(self.undecided),
            "pairs": [asdict(r) for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _verify_source(args) -> List[PairRecord]:
    fa, targets, bounds = args
    budgets = {fb: bounds.budget(fa, fb) for fb in targets}
    explorer = _Explorer(fa, bounds, max(budgets.values()))
    explorer.run()
    records = []
    for fb in targets:
        exists = decide(fa, fb).exists
        key = explorer.endpoints.get(fb)
        # breadth-first: the first node reaching fb is a shortest witness
        if key is not None and explorer.nodes[key].depth > budgets[fb]:
            key = None
        length = valid = None
        if key is not None:
            w = explorer.witness(key)
            length, valid = len(w), bool(validate(w)) and w.end == fb
        if key is not None and not valid:
            status = "mismatch"
        elif exists == (key is not None):
            status = "ok"
        elif exists:
            status = "undecided"
        else:
            status = "mismatch"
        records.append(
            PairRecord(str(fa), str(fb), exists, budgets[fb], length, valid, status)
        )
    return records


def verify_theorem(bounds: SearchBounds, workers: int = 1) -> VerificationReport:
    """
    Compare :func:`decide` with witness existence on every pair of surfaces
    within ``bounds``.
    """
    surfaces = surfaces_within(bounds)
    tasks = [(fa, surfaces, bounds) for fa in surfaces]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_verify_source, tasks))
    else:
        chunks = [_verify_source(t) for t in tasks]
    order = {str(s): i for i, s in enumerate(surfaces)}
    records = sorted(
        (r for chunk in chunks for r in chunk),
        key=lambda r: (order[r.source], order[r.target]),
    )
    return VerificationReport(bounds, records)
