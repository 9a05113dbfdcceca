"""Truncated simplicial and cyclic sets with exhaustive identity checking.

A level set stores, for every degree n up to a cap, the list of
n-simplices together with face, degeneracy and (optionally) cyclic
operators as index tables.  Nerves of nontrivial groups are nonzero in
every degree, so enumeration is always capped; downstream consumers
carry the cap along as a validity bound and never extrapolate past it.

Simplices are plain integer tuples.  Degenerate simplices are enumerated
(the free cyclic space needs their index arithmetic) but flagged, and the
flags are computed from the degeneracy tables themselves rather than
from any structural shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True)
class IdentityViolation:
    """A failed simplicial/cyclic identity with one witnessing simplex."""

    identity: str
    level: int
    i: int
    j: int
    simplex_index: int
    simplex: tuple

    def __str__(self) -> str:
        ij = f"i={self.i}" + (f", j={self.j}" if self.j >= 0 else "")
        return (f"{self.identity} fails at level {self.level} ({ij}) "
                f"on simplex #{self.simplex_index} = {self.simplex}")


@dataclass
class SimplicialLevelSet:
    """Simplices by degree with face and degeneracy index tables.

    levels[n][k] is the k-th n-simplex; faces[n][i][k] is the index of
    its i-th face at level n-1 (n >= 1); degens[n][i][k] the index of its
    i-th degeneracy at level n+1 (n < max_level).  degenerate[n][k] flags
    membership in the image of some degeneracy map.
    """

    max_level: int
    levels: list[list[tuple]]
    faces: list[Optional[list[list[int]]]]
    degens: list[Optional[list[list[int]]]]
    degenerate: list[list[bool]] = field(default_factory=list)

    def __post_init__(self):
        if not self.degenerate:
            self.degenerate = _degeneracy_flags(self)

    def level_size(self, n: int) -> int:
        return len(self.levels[n])

    def simplex(self, n: int, k: int) -> tuple:
        return self.levels[n][k]

    def face(self, n: int, i: int) -> list[int]:
        if n < 1 or n > self.max_level or not 0 <= i <= n:
            raise IndexError(f"no face map d_{i} at level {n}")
        return self.faces[n][i]

    def degeneracy(self, n: int, i: int) -> list[int]:
        if n < 0 or n >= self.max_level or not 0 <= i <= n:
            raise IndexError(f"no degeneracy map s_{i} at level {n}")
        return self.degens[n][i]

    def is_degenerate(self, n: int, k: int) -> bool:
        return self.degenerate[n][k]

    def nondegenerate_indices(self, n: int) -> list[int]:
        return [k for k, d in enumerate(self.degenerate[n]) if not d]

    @property
    def has_cyclic(self) -> bool:
        return False


@dataclass
class CyclicLevelSet(SimplicialLevelSet):
    """A simplicial level set with a compatible cyclic operator per level."""

    cyclic: list[list[int]] = field(default_factory=list)

    @property
    def has_cyclic(self) -> bool:
        return True

    def cyclic_map(self, n: int) -> list[int]:
        if n < 0 or n > self.max_level:
            raise IndexError(f"no cyclic map at level {n}")
        return self.cyclic[n]


def _degeneracy_flags(ls: SimplicialLevelSet) -> list[list[bool]]:
    flags = [[False] * len(level) for level in ls.levels]
    for n in range(ls.max_level):
        if ls.degens[n] is None:
            continue
        for table in ls.degens[n]:
            row = flags[n + 1]
            for target in table:
                row[target] = True
    return flags


def build_level_set(
    levels: list[list[tuple]],
    face_fn: Callable[[int, tuple], list[tuple]],
    degen_fn: Callable[[int, tuple], list[tuple]],
    cyclic_fn: Callable[[int, tuple], tuple] | None = None,
) -> SimplicialLevelSet:
    """Tabulate structure maps given per-simplex payload formulas.

    face_fn(n, s) must return the list [d_0 s, ..., d_n s] of level-(n-1)
    payloads, degen_fn(n, s) the list [s_0 s, ..., s_n s] of level-(n+1)
    payloads.  Every produced payload must already be enumerated.
    """
    max_level = len(levels) - 1
    index = [{s: k for k, s in enumerate(level)} for level in levels]
    faces: list[Optional[list[list[int]]]] = [None]
    for n in range(1, max_level + 1):
        below = index[n - 1]
        per_i = [[0] * len(levels[n]) for _ in range(n + 1)]
        for k, s in enumerate(levels[n]):
            for i, t in enumerate(face_fn(n, s)):
                per_i[i][k] = below[t]
        faces.append(per_i)
    degens: list[Optional[list[list[int]]]] = []
    for n in range(max_level):
        above = index[n + 1]
        per_i = [[0] * len(levels[n]) for _ in range(n + 1)]
        for k, s in enumerate(levels[n]):
            for i, t in enumerate(degen_fn(n, s)):
                per_i[i][k] = above[t]
        degens.append(per_i)
    degens.append(None)
    if cyclic_fn is None:
        return SimplicialLevelSet(max_level, levels, faces, degens)
    cyc = []
    for n in range(max_level + 1):
        here = index[n]
        cyc.append([here[cyclic_fn(n, s)] for s in levels[n]])
    return CyclicLevelSet(max_level, levels, faces, degens, cyclic=cyc)


def free_cyclic(x: SimplicialLevelSet) -> CyclicLevelSet:
    """Free cyclic set on a simplicial set.

    Level n is Z_{n+1} x X_n with elements written (r, k) for the r-th
    rotation of the k-th base simplex.  Structure maps follow the usual
    case split: an operator index below r acts through the wrap-around
    part of the rotation, one at or above r acts through the tail.
    The point base case gives the standard simplicial circle.
    """
    cap = x.max_level
    levels: list[list[tuple]] = [
        [(r, k) for r in range(n + 1) for k in range(x.level_size(n))]
        for n in range(cap + 1)
    ]

    faces: list[Optional[list[list[int]]]] = [None]
    for n in range(1, cap + 1):
        size_below = x.level_size(n - 1)
        per_i = []
        for i in range(n + 1):
            table = []
            for r, k in levels[n]:
                if r <= i:
                    rr, kk = r % n, x.faces[n][i - r][k]
                else:
                    rr, kk = r - 1, x.faces[n][n - r + i + 1][k]
                table.append(rr * size_below + kk)
            per_i.append(table)
        faces.append(per_i)

    degens: list[Optional[list[list[int]]]] = []
    for n in range(cap):
        size_above = x.level_size(n + 1)
        per_i = []
        for i in range(n + 1):
            table = []
            for r, k in levels[n]:
                if r <= i:
                    rr, kk = r, x.degens[n][i - r][k]
                else:
                    rr, kk = r + 1, x.degens[n][n - r + i + 1][k]
                table.append(rr * size_above + kk)
            per_i.append(table)
        degens.append(per_i)
    degens.append(None)

    cyc = []
    for n in range(cap + 1):
        size = x.level_size(n)
        cyc.append([((r + 1) % (n + 1)) * size + k for r, k in levels[n]])
    return CyclicLevelSet(cap, levels, faces, degens, cyclic=cyc)


def verify_identities(x: SimplicialLevelSet) -> list[IdentityViolation]:
    """Exhaustively check all simplicial (and cyclic) identities.

    Every identity instance whose source and target levels fall inside
    the enumeration is tested on every simplex; an empty report means all
    hold.  Each failing (identity, level, i, j) contributes one witness.
    """
    out: list[IdentityViolation] = []
    cap = x.max_level
    F = [None] + [[np.asarray(t, dtype=np.int64) for t in x.faces[n]]
                  for n in range(1, cap + 1)]
    S = [[np.asarray(t, dtype=np.int64) for t in x.degens[n]]
         for n in range(cap)]
    T = None
    if x.has_cyclic:
        T = [np.asarray(t, dtype=np.int64) for t in x.cyclic]

    def witness(name, n, i, j, lhs, rhs):
        bad = np.nonzero(lhs != rhs)[0]
        if bad.size:
            k = int(bad[0])
            out.append(IdentityViolation(name, n, i, j, k, x.simplex(n, k)))

    for n in range(2, cap + 1):
        for j in range(1, n + 1):
            for i in range(j):
                witness("d_i d_j = d_{j-1} d_i", n, i, j,
                        F[n - 1][i][F[n][j]], F[n - 1][j - 1][F[n][i]])

    for n in range(cap - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                witness("s_i s_j = s_{j+1} s_i", n, i, j,
                        S[n + 1][i][S[n][j]], S[n + 1][j + 1][S[n][i]])

    for n in range(cap):
        ident = np.arange(x.level_size(n), dtype=np.int64)
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = F[n + 1][i][S[n][j]]
                if i < j:
                    rhs = S[n - 1][j - 1][F[n][i]]
                elif i in (j, j + 1):
                    rhs = ident
                else:
                    rhs = S[n - 1][j][F[n][i - 1]]
                witness("d_i s_j mixed relation", n, i, j, lhs, rhs)

    if T is None:
        return out

    for n in range(cap + 1):
        ident = np.arange(x.level_size(n), dtype=np.int64)
        power = ident
        for _ in range(n + 1):
            power = T[n][power]
        witness("t^{n+1} = id", n, -1, -1, power, ident)

    for n in range(1, cap + 1):
        for i in range(1, n + 1):
            witness("d_i t = t d_{i-1}", n, i, -1,
                    F[n][i][T[n]], T[n - 1][F[n][i - 1]])

    for n in range(cap):
        for i in range(1, n + 1):
            witness("s_i t = t s_{i-1}", n, i, -1,
                    S[n][i][T[n]], T[n + 1][S[n][i - 1]])
    return out


@dataclass
class LevelMap:
    """A per-level map between level sets, checkable against structure maps."""

    source: SimplicialLevelSet
    target: SimplicialLevelSet
    maps: list[list[int]]

    def apply(self, n: int, k: int) -> int:
        return self.maps[n][k]

    def is_level_bijection(self) -> bool:
        return all(
            len(set(m)) == len(m) == self.target.level_size(n)
            for n, m in enumerate(self.maps)
        )

    def verify(self, check_cyclic: bool | None = None) -> list[IdentityViolation]:
        """Report where the map fails to commute with structure maps.

        Cyclic compatibility is checked when both sides carry a cyclic
        operator (or as forced by check_cyclic).
        """
        if check_cyclic is None:
            check_cyclic = self.source.has_cyclic and self.target.has_cyclic
        out: list[IdentityViolation] = []
        cap = min(self.source.max_level, self.target.max_level)
        M = [np.asarray(m, dtype=np.int64) for m in self.maps]

        def witness(name, n, i, lhs, rhs):
            bad = np.nonzero(lhs != rhs)[0]
            if bad.size:
                k = int(bad[0])
                out.append(IdentityViolation(name, n, i, -1, k,
                                             self.source.simplex(n, k)))

        for n in range(1, cap + 1):
            for i in range(n + 1):
                fs = np.asarray(self.source.faces[n][i], dtype=np.int64)
                ft = np.asarray(self.target.faces[n][i], dtype=np.int64)
                witness("map d_i = d_i map", n, i, M[n - 1][fs], ft[M[n]])
        for n in range(cap):
            for i in range(n + 1):
                ss = np.asarray(self.source.degens[n][i], dtype=np.int64)
                st = np.asarray(self.target.degens[n][i], dtype=np.int64)
                witness("map s_i = s_i map", n, i, M[n + 1][ss], st[M[n]])
        if check_cyclic:
            for n in range(cap + 1):
                ts = np.asarray(self.source.cyclic[n], dtype=np.int64)
                tt = np.asarray(self.target.cyclic[n], dtype=np.int64)
                witness("map t = t map", n, -1, M[n][ts], tt[M[n]])
        return out


def compose_level_maps(f: LevelMap, g: LevelMap) -> LevelMap:
    """The composite "f then g" levelwise."""
    maps = [[g.maps[n][v] for v in f.maps[n]] for n in range(len(f.maps))]
    return LevelMap(f.source, g.target, maps)


def is_identity_map(f: LevelMap) -> bool:
    return all(m == list(range(len(m))) for m in f.maps)
