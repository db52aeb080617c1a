"""
Existence test for a Morse function with a single singular value on a
3-dimensional cobordism between two closed surfaces.

For a source surface ``Fa`` and target ``Fb`` the function exists iff

* the odd-component counts of ``Fa`` and ``Fb`` have the same parity, and
* ``odd_count(Fb) <= nonorientable_genus(Fa)`` and
  ``odd_count(Fa) <= nonorientable_genus(Fb)``.

:func:`classify` reports which of the three older sufficient conditions
(``"A"``, ``"B"``, ``"C"``) a pair satisfies, if any.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import FrozenSet, List, Optional

from .surface import (
    Surface,
    SurfaceComponent,
    SurfaceError,
    even_genus,
    nonorientable_genus,
    odd_count,
)


@dataclass(frozen=True)
class Invariants:
    P_a: int
    P_b: int
    P_o_a: int
    P_o_b: int
    sum_P_prime_a: int
    sum_P_prime_b: int


@dataclass(frozen=True)
class Decision:
    exists: bool
    cond1_holds: bool
    cond2_holds: bool
    abc_class: Optional[str]
    diagnostics: Invariants

    def violations(self) -> List[str]:
        """Human-readable reasons for a negative verdict, empty when it exists."""
        d = self.diagnostics
        out = []
        if not self.cond1_holds:
            out.append(
                f"condition (1) fails: P_o(F_b) - P_o(F_a) = {d.P_o_b - d.P_o_a} is odd"
            )
        if d.P_o_b > d.P_a:
            out.append(f"condition (2) fails: P_o(F_b) = {d.P_o_b} > P(F_a) = {d.P_a}")
        if d.P_o_a > d.P_b:
            out.append(f"condition (2) fails: P_o(F_a) = {d.P_o_a} > P(F_b) = {d.P_b}")
        return out

    def to_dict(self) -> dict:
        return {
            "exists": self.exists,
            "cond1": self.cond1_holds,
            "cond2": self.cond2_holds,
            "abc_class": self.abc_class,
            "invariants": asdict(self.diagnostics),
            "violations": self.violations(),
        }


def _require_nonempty(fa: Surface, fb: Surface) -> None:
    if len(fa) == 0:
        raise SurfaceError("source surface F_a is empty")
    if len(fb) == 0:
        raise SurfaceError("target surface F_b is empty")


def is_cobordant(fa: Surface, fb: Surface) -> bool:
    _require_nonempty(fa, fb)
    return (odd_count(fb) - odd_count(fa)) % 2 == 0


def invariants(fa: Surface, fb: Surface) -> Invariants:
    return Invariants(
        P_a=nonorientable_genus(fa),
        P_b=nonorientable_genus(fb),
        P_o_a=odd_count(fa),
        P_o_b=odd_count(fb),
        sum_P_prime_a=sum(even_genus(c) for c in fa),
        sum_P_prime_b=sum(even_genus(c) for c in fb),
    )


def classify(fa: Surface, fb: Surface) -> Optional[str]:
    """Return ``"A"``, ``"B"``, ``"C"`` or ``None``; the sign conditions make them exclusive."""
    _require_nonempty(fa, fb)
    inv = invariants(fa, fb)
    gap = inv.P_o_b - inv.P_o_a
    if gap == 0:
        return "A"
    if 0 < gap <= inv.sum_P_prime_a:
        return "B"
    if 0 < -gap <= inv.sum_P_prime_b:
        return "C"
    return None


def decide(fa: Surface, fb: Surface) -> Decision:
    cond1 = is_cobordant(fa, fb)
    inv = invariants(fa, fb)
    cond2 = inv.P_o_b <= inv.P_a and inv.P_o_a <= inv.P_b
    return Decision(
        exists=cond1 and cond2,
        cond1_holds=cond1,
        cond2_holds=cond2,
        abc_class=classify(fa, fb),
        diagnostics=inv,
    )


@dataclass(frozen=True)
class EdgeSets:
    """Component identifiers of the odd (A) and non-orientable (B) ends of each side."""

    A_low: FrozenSet[int]
    A_up: FrozenSet[int]
    B_low: FrozenSet[int]
    B_up: FrozenSet[int]

    def memberships(self, side: str, ident: int) -> List[str]:
        suffix = "low" if side == "a" else "up"
        return [
            name
            for name in (f"A_{suffix}", f"B_{suffix}")
            if ident in getattr(self, name)
        ]


def edge_sets(fa: Surface, fb: Surface) -> EdgeSets:
    _require_nonempty(fa, fb)

    def odd(s):
        return frozenset(i for i, c in enumerate(s) if nonorientable_genus(c) % 2 == 1)

    def positive(s):
        return frozenset(i for i, c in enumerate(s) if nonorientable_genus(c) > 0)

    return EdgeSets(A_low=odd(fa), A_up=odd(fb), B_low=positive(fa), B_up=positive(fb))


def signed_genus(c: SurfaceComponent) -> int:
    """Orientable genus for orientable ``c``, minus the crosscap count otherwise."""
    return c.genus if c.orientable else -c.genus


def even_abs_signed_genus(c: SurfaceComponent) -> int:
    r = abs(signed_genus(c))
    return r - (r % 2)
