"""
Handle moves on closed surfaces.

A 2-handle attached along a circle on a level surface either splits a
component into two connected summands (:class:`Split`) or surgers a
non-separating circle (:class:`Surger`).  A 1-handle either joins two
components by a connected sum (:class:`Join`) or is attached with both
feet on one component (:class:`SelfAttach`).  Every 2-handle raises the
Euler characteristic of the level surface by 2 and every 1-handle lowers
it by 2.

Moves address components by identifier.  :func:`apply` renumbers densely:

* Split replaces the target by ``left`` and appends ``right``;
* Surger and SelfAttach rewrite the target in place;
* Join puts the sum at the smaller of the two identifiers and removes
  the larger one, shifting later components down.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .surface import (
    Surface,
    SurfaceComponent,
    connected_sum,
    euler_characteristic,
    nonorientable,
    orientable,
)


class IllegalMoveError(ValueError):
    pass


class Phase(enum.IntEnum):
    TWO_HANDLE = 2
    ONE_HANDLE = 1


@dataclass(frozen=True)
class Split:
    target: int
    left: SurfaceComponent
    right: SurfaceComponent
    phase = Phase.TWO_HANDLE


@dataclass(frozen=True)
class Surger:
    target: int
    result: SurfaceComponent
    phase = Phase.TWO_HANDLE


@dataclass(frozen=True)
class Join:
    first: int
    second: int
    phase = Phase.ONE_HANDLE


@dataclass(frozen=True)
class SelfAttach:
    target: int
    result: SurfaceComponent
    phase = Phase.ONE_HANDLE


HandleMove = Union[Split, Surger, Join, SelfAttach]
Link = Tuple[int, int]


def factorizations(c: SurfaceComponent) -> List[Tuple[SurfaceComponent, SurfaceComponent]]:
    """All unordered pairs ``(left, right)`` with ``left # right == c``, ``left <= right``."""
    out = []
    if c.orientable:
        for a in range(c.genus // 2 + 1):
            out.append((orientable(a), orientable(c.genus - a)))
        return out
    k = c.genus
    for g in range((k - 1) // 2 + 1):
        out.append((orientable(g), nonorientable(k - 2 * g)))
    for a in range(1, k // 2 + 1):
        out.append((nonorientable(a), nonorientable(k - a)))
    return sorted(out)


def self_attach_results(c: SurfaceComponent) -> List[SurfaceComponent]:
    # an orientable component can receive the handle with either framing
    if c.orientable:
        return [orientable(c.genus + 1), nonorientable(2 * c.genus + 2)]
    return [nonorientable(c.genus + 2)]


def surgery_results(c: SurfaceComponent) -> List[SurfaceComponent]:
    """Components ``r`` with ``c`` in ``self_attach_results(r)``, sorted."""
    if c.orientable:
        return [orientable(c.genus - 1)] if c.genus >= 1 else []
    out = []
    if c.genus >= 3:
        out.append(nonorientable(c.genus - 2))
    if c.genus % 2 == 0:
        out.append(orientable((c.genus - 2) // 2))
    return sorted(out)


def _fits(c: SurfaceComponent, max_nonorientable, max_orientable) -> bool:
    if c.orientable:
        return max_orientable is None or c.genus <= max_orientable
    return max_nonorientable is None or c.genus <= max_nonorientable


def legal_moves(
    s: Surface,
    phase: Phase,
    max_nonorientable: Optional[int] = None,
    max_orientable: Optional[int] = None,
) -> List[HandleMove]:
    """
    Every legal move of ``phase`` on ``s`` whose new components respect
    the genus caps.  Order: by variant, then target identifier, then
    parameters.
    """
    fits = lambda c: _fits(c, max_nonorientable, max_orientable)  # noqa: E731
    moves: List[HandleMove] = []
    comps = s.components
    if phase is Phase.TWO_HANDLE:
        for i, c in enumerate(comps):
            for left, right in factorizations(c):
                if fits(left) and fits(right):
                    moves.append(Split(i, left, right))
        for i, c in enumerate(comps):
            for r in surgery_results(c):
                if fits(r):
                    moves.append(Surger(i, r))
    else:
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                if fits(connected_sum(comps[i], comps[j])):
                    moves.append(Join(i, j))
        for i, c in enumerate(comps):
            for r in self_attach_results(c):
                if fits(r):
                    moves.append(SelfAttach(i, r))
    return moves


def _check_target(s: Surface, ident: int) -> SurfaceComponent:
    if not isinstance(ident, int) or not 0 <= ident < len(s):
        raise IllegalMoveError(f"component #{ident} does not exist (surface has {len(s)})")
    return s[ident]


def apply(s: Surface, move: HandleMove) -> Tuple[Surface, Tuple[Link, ...]]:
    """
    Apply ``move`` to ``s``.

    Returns the new surface and the parent/child identifier links
    ``(old_id, new_id)`` used to build trace graphs.
    """
    comps = list(s.components)
    n = len(comps)
    if isinstance(move, Split):
        c = _check_target(s, move.target)
        if connected_sum(move.left, move.right) != c:
            raise IllegalMoveError(
                f"split: {move.left} # {move.right} = "
                f"{connected_sum(move.left, move.right)}, not target {c}"
            )
        comps[move.target] = move.left
        comps.append(move.right)
        links = [(i, i) for i in range(n)] + [(move.target, n)]
    elif isinstance(move, Surger):
        c = _check_target(s, move.target)
        if c not in self_attach_results(move.result):
            raise IllegalMoveError(f"surger: {c} cannot be surgered to {move.result}")
        comps[move.target] = move.result
        links = [(i, i) for i in range(n)]
    elif isinstance(move, SelfAttach):
        c = _check_target(s, move.target)
        if move.result not in self_attach_results(c):
            raise IllegalMoveError(f"self-attach: {c} cannot become {move.result}")
        comps[move.target] = move.result
        links = [(i, i) for i in range(n)]
    elif isinstance(move, Join):
        a = _check_target(s, move.first)
        b = _check_target(s, move.second)
        if move.first == move.second:
            raise IllegalMoveError(f"join: both feet on component #{move.first}")
        lo, hi = sorted((move.first, move.second))
        comps[lo] = connected_sum(a, b)
        del comps[hi]
        links = [(i, i if i < hi else i - 1) for i in range(n) if i != hi] + [(hi, lo)]
        links.sort()
    else:
        raise IllegalMoveError(f"not a handle move: {move!r}")
    return Surface(comps), tuple(links)


def inverse(s: Surface, move: HandleMove) -> HandleMove:
    """
    The dual move undoing ``move`` on ``apply(s, move)``.
    """
    apply(s, move)  # raises if the move is illegal on s
    if isinstance(move, Split):
        return Join(move.target, len(s))
    if isinstance(move, Surger):
        return SelfAttach(move.target, s[move.target])
    if isinstance(move, SelfAttach):
        return Surger(move.target, s[move.target])
    lo, hi = sorted((move.first, move.second))
    return Split(lo, s[lo], s[hi])


@dataclass
class TraceGraph:
    """Components at each step, with parent/child links between consecutive steps."""

    sizes: List[int] = field(default_factory=list)
    edges: List[Tuple[Tuple[int, int], Tuple[int, int]]] = field(default_factory=list)

    @property
    def nodes(self) -> List[Tuple[int, int]]:
        return [(step, i) for step, n in enumerate(self.sizes) for i in range(n)]

    def is_connected(self) -> bool:
        nodes = self.nodes
        if not nodes:
            return False
        adj: Dict[Tuple[int, int], List[Tuple[int, int]]] = {v: [] for v in nodes}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(nodes)

    def orphans(self) -> List[Tuple[int, int]]:
        """Nodes after the first step that have no parent."""
        children = {v for _, v in self.edges}
        return [v for v in self.nodes if v[0] > 0 and v not in children]


def replay(start: Surface, moves: Sequence[HandleMove]) -> Tuple[List[Surface], TraceGraph]:
    """All intermediate surfaces (``start`` first) and the trace graph. Raises on illegal moves."""
    states = [start]
    trace = TraceGraph(sizes=[len(start)])
    for step, m in enumerate(moves):
        nxt, links = apply(states[-1], m)
        states.append(nxt)
        trace.sizes.append(len(nxt))
        trace.edges.extend(((step, a), (step + 1, b)) for a, b in links)
    return states, trace


@dataclass(frozen=True)
class Validation:
    ok: bool
    violation: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Witness:
    """
    A phase-ordered handle sequence from ``start`` to ``end``.

    ``middle`` is the surface after the last 2-handle and before the
    first 1-handle.
    """

    start: Surface
    moves: Tuple[HandleMove, ...]
    end: Surface
    middle: Surface

    @classmethod
    def from_moves(cls, start: Surface, moves: Sequence[HandleMove]) -> "Witness":
        moves = tuple(moves)
        states, _ = replay(start, moves)
        n_two = sum(1 for m in moves if m.phase is Phase.TWO_HANDLE)
        return cls(start=start, moves=moves, end=states[-1], middle=states[n_two])

    @property
    def trace(self) -> TraceGraph:
        return replay(self.start, self.moves)[1]

    def __len__(self) -> int:
        return len(self.moves)

    def to_text(self) -> str:
        return format_moves(self.moves)


def validate(w: Witness) -> Validation:
    if not w.moves:
        return Validation(False, "no handles: the function needs a singular value")
    seen_one = False
    for i, m in enumerate(w.moves):
        if m.phase is Phase.ONE_HANDLE:
            seen_one = True
        elif seen_one:
            return Validation(False, f"phase order: 2-handle at step {i} after a 1-handle")
    try:
        states, trace = replay(w.start, w.moves)
    except IllegalMoveError as exc:
        return Validation(False, f"replay: {exc}")
    for i, m in enumerate(w.moves):
        delta = euler_characteristic(states[i + 1]) - euler_characteristic(states[i])
        if delta != (2 if m.phase is Phase.TWO_HANDLE else -2):
            return Validation(False, f"euler characteristic changed by {delta} at step {i}")
    n_two = sum(1 for m in w.moves if m.phase is Phase.TWO_HANDLE)
    if states[n_two] != w.middle:
        return Validation(False, f"middle surface is {states[n_two]}, witness claims {w.middle}")
    if states[-1] != w.end:
        return Validation(False, f"replay ends at {states[-1]}, witness claims {w.end}")
    expected = euler_characteristic(w.start) + 2 * n_two - 2 * (len(w.moves) - n_two)
    if euler_characteristic(w.end) != expected:
        return Validation(False, "euler characteristic ledger does not balance")
    if trace.orphans():
        return Validation(False, f"trace nodes without parent: {trace.orphans()}")
    if not trace.is_connected():
        return Validation(False, "trace graph is disconnected: singular level is not connected")
    return Validation(True)


# -- line format ------------------------------------------------------------

_ATOM = r"([ON]\d+)"
_LINE_PATTERNS = [
    (re.compile(rf"^2H\s+split\s+#(\d+)\s*->\s*{_ATOM}\s*\+\s*{_ATOM}$"), "split"),
    (re.compile(rf"^2H\s+surger\s+#(\d+)\s*->\s*{_ATOM}$"), "surger"),
    (re.compile(r"^1H\s+join\s+#(\d+)\s+#(\d+)$"), "join"),
    (re.compile(rf"^1H\s+self\s+#(\d+)\s*->\s*{_ATOM}$"), "self"),
]


def _atom(text: str) -> SurfaceComponent:
    n = int(text[1:])
    return orientable(n) if text[0] == "O" else nonorientable(n)


def format_move(m: HandleMove) -> str:
    if isinstance(m, Split):
        return f"2H split #{m.target} -> {m.left} + {m.right}"
    if isinstance(m, Surger):
        return f"2H surger #{m.target} -> {m.result}"
    if isinstance(m, Join):
        return f"1H join #{m.first} #{m.second}"
    return f"1H self #{m.target} -> {m.result}"


def format_moves(moves: Sequence[HandleMove]) -> str:
    return "".join(format_move(m) + "\n" for m in moves)


def parse_move(line: str) -> HandleMove:
    text = line.strip()
    for pattern, verb in _LINE_PATTERNS:
        match = pattern.match(text)
        if not match:
            continue
        g = match.groups()
        try:
            if verb == "split":
                return Split(int(g[0]), _atom(g[1]), _atom(g[2]))
            if verb == "surger":
                return Surger(int(g[0]), _atom(g[1]))
            if verb == "join":
                return Join(int(g[0]), int(g[1]))
            return SelfAttach(int(g[0]), _atom(g[1]))
        except ValueError as exc:
            raise ValueError(f"bad move line {line!r}: {exc}") from None
    raise ValueError(f"bad move line {line!r}")


def parse_moves(text: str) -> List[HandleMove]:
    return [parse_move(line) for line in text.splitlines() if line.strip()]
