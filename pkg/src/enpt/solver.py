"""Minimal P3 representations of pairs ``(G, C)`` satisfying P1 and P2.

For ``n = 4`` the answer is one of two frozen representations.  For larger
``n`` a YES instance is a Hamiltonian outerplanar graph whose outer faces are
all BBR triangles; its weak dual tree hosts a planar tour whose short paths
sit at the apexes of those triangles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .core import HostTree, PairGC, Representation, TreePath
from .errors import InvariantViolation, MalformedInputError
from .generators import Tour, fixture
from .pairs import (
    TriangleKind,
    bbr_apex,
    classify_triangle,
    contractible_edges,
    is_k4p4_free,
    is_outerplanar_with_outer_cycle,
    weak_dual_tree,
)
from .verifier import check_p3, verify_representation


class Reason(enum.Enum):
    NOT_OUTERPLANAR = "NotOuterplanar"
    FACE_NOT_BBR = "FaceNotBBR"
    P1_VIOLATED = "P1Violated"
    P2_VIOLATED = "P2Violated"
    BAD_N = "BadN"


@dataclass(frozen=True)
class SolverOutcome:
    representation: Optional[Representation] = None
    reason: Optional[Reason] = None
    tour: Optional[Tour] = None

    @property
    def yes(self) -> bool:
        return self.representation is not None

    def __str__(self) -> str:
        return "YES" if self.yes else f"NO ({self.reason.value})"


def _no(reason: Reason) -> SolverOutcome:
    return SolverOutcome(reason=reason)


def _shift(r: Representation, k: int) -> Representation:
    """Move path ``i`` to label ``i + k`` (mod n)."""
    n = r.n
    paths: list[TreePath] = [r.paths[0]] * n
    for i, path in enumerate(r.paths):
        paths[(i + k) % n] = path
    return Representation(r.tree, tuple(paths))


def solve_c4(p: PairGC) -> SolverOutcome:
    if p.n != 4:
        raise MalformedInputError(f"solve_c4 needs n = 4, got {p.n}")
    chords = p.chords
    if not chords:
        # C4 itself would be a hole of length 4 made of blue edges
        return _no(Reason.P1_VIOLATED)
    if len(chords) == 2:
        return SolverOutcome(representation=fixture("c4_k4"))
    if chords == {(1, 3)}:
        return SolverOutcome(representation=fixture("c4_diamond"))
    return SolverOutcome(representation=_shift(fixture("c4_diamond"), 1))


def _screen(p: PairGC) -> Optional[Reason]:
    if contractible_edges(p):
        return Reason.P1_VIOLATED
    if not is_k4p4_free(p):
        return Reason.P2_VIOLATED
    return None


def build_planar_tour(p: PairGC, screen: bool = True) -> SolverOutcome:
    """Planar tour of the weak dual tree, or a refusal.

    With ``screen=False`` the P1/P2 checks are skipped and the outerplanar
    face test decides on its own; a pair passing it satisfies P1 and P2
    anyway, so the output is still sound.
    """
    n = p.n
    if n <= 4:
        raise MalformedInputError(f"build_planar_tour needs n > 4, got {n}")
    if screen and (reason := _screen(p)) is not None:
        return _no(reason)
    if not is_outerplanar_with_outer_cycle(p):
        return _no(Reason.NOT_OUTERPLANAR)
    w = weak_dual_tree(p)
    apex_of: dict[int, int] = {}
    for idx, face in enumerate(w.faces):
        if w.blue_edges(idx) == 0:
            continue
        if len(face) != 3 or classify_triangle(p, face) is not TriangleKind.BBR:
            return _no(Reason.FACE_NOT_BBR)
        apex_of[bbr_apex(p, face)] = idx
    host = HostTree(len(w.faces), w.adjacency)
    apexes = sorted(apex_of)
    k = len(apexes)
    if 2 * k != n or any((apexes[(j + 1) % k] - apexes[j]) % n != 2 for j in range(k)):
        raise InvariantViolation(f"BBR apexes {apexes} do not alternate around C{n}")
    order = tuple(apex_of[a] for a in apexes)
    paths: list[TreePath] = [TreePath((0, 1))] * n
    for j, a in enumerate(apexes):
        leaf, nxt = order[j], order[(j + 1) % k]
        paths[a] = TreePath((leaf, host.adjacency[leaf][0]))
        paths[(a + 1) % n] = host.path_between(leaf, nxt)
    r = Representation(host, tuple(paths))
    tour = Tour(
        tree=host,
        leaf_order=order,
        long_paths=tuple((a + 1) % n for a in apexes),
        short_paths=tuple(apexes),
    )
    if not verify_representation(r, p).ok or not check_p3(r, p).ok:
        raise InvariantViolation("planar tour does not realize the pair")
    return SolverOutcome(representation=r, tour=tour)


def solve(p: PairGC) -> SolverOutcome:
    if p.n < 4:
        return _no(Reason.BAD_N)
    if p.n == 4:
        return solve_c4(p)
    return build_planar_tour(p)


__all__ = ["Reason", "SolverOutcome", "solve", "solve_c4", "build_planar_tour"]
