"""Nerve, cyclic nerve and inertia level sets of a finite groupoid.

Level-n simplices are tuples of morphism indices:

* nerve: composable chains (g_1, ..., g_n); level 0 holds the objects as
  one-element tuples (x,).
* cyclic nerve: loops (g_0, ..., g_n) of n+1 composable arrows whose
  last target returns to the first source.  The cyclic operator rotates
  the last arrow to the front.
* inertia: pairs-of-data (a, v_1, ..., v_n) with a an automorphism and
  the whole tuple a composable chain.  These are exactly the chains of
  the inertia groupoid's nerve, relabelled.

Faces compose adjacent arrows (the cyclic nerve's top face wraps around),
degeneracies insert identity arrows.  The mutually inverse maps

    f(a, v_1..v_n) = (inv(v_n..v_1) . a, v_1, ..., v_n)
    h(g_0, ..., g_n) = (g_1 ... g_n g_0, g_1, ..., g_n)

identify the inertia presentation with the cyclic nerve compatibly with
every face, degeneracy and cyclic operator.
"""

from __future__ import annotations

from .groupoid import FiniteGroupoid, InertiaLabels, inertia
from .simplicial import (
    CyclicLevelSet,
    LevelMap,
    SimplicialLevelSet,
    build_level_set,
)


def composable_chains(g: FiniteGroupoid, length: int) -> list[list[tuple]]:
    """All composable arrow chains of each length up to the given one.

    Entry k lists the k-tuples (k >= 1); entry 0 is a placeholder.
    Chains extend lexicographically by arrows leaving the running target,
    so enumeration order is deterministic.
    """
    out_of = [g.morphisms_from(x) for x in range(g.n_objects)]
    chains: list[list[tuple]] = [[], [(m,) for m in range(g.n_morphisms)]]
    for _ in range(2, length + 1):
        nxt = []
        for c in chains[-1]:
            for m in out_of[g.tgt[c[-1]]]:
                nxt.append(c + (m,))
        chains.append(nxt)
    return chains[: length + 1]


def nerve(g: FiniteGroupoid, cap: int) -> SimplicialLevelSet:
    """Nerve of a groupoid up to degree cap.

    d_0 drops the first arrow, d_n the last, and d_i composes the i-th
    arrow with its successor; s_i inserts the identity at vertex i.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    chains = composable_chains(g, cap)
    levels: list[list[tuple]] = [[(x,) for x in range(g.n_objects)]]
    levels += [chains[n] for n in range(1, cap + 1)]

    def face(n, s):
        if n == 1:
            return [(g.tgt[s[0]],), (g.src[s[0]],)]
        out = [s[1:]]
        for i in range(1, n):
            out.append(s[: i - 1] + (g.compose(s[i - 1], s[i]),) + s[i + 1:])
        out.append(s[:-1])
        return out

    def degen(n, s):
        if n == 0:
            return [(g.ident[s[0]],)]
        out = [(g.ident[g.src[s[0]]],) + s]
        for i in range(1, n + 1):
            out.append(s[:i] + (g.ident[g.tgt[s[i - 1]]],) + s[i:])
        return out

    return build_level_set(levels, face, degen)


def cyclic_nerve(g: FiniteGroupoid, cap: int) -> CyclicLevelSet:
    """Cyclic nerve of a groupoid up to degree cap.

    Level n holds the loops of n+1 composable arrows.  The wrap face d_n
    composes the last arrow into the first, degeneracy s_i inserts the
    identity after position i, and t rotates right.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    chains = composable_chains(g, cap + 1)
    levels = [
        [c for c in chains[n + 1] if g.tgt[c[-1]] == g.src[c[0]]]
        for n in range(cap + 1)
    ]

    def face(n, s):
        out = []
        for i in range(n):
            out.append(s[:i] + (g.compose(s[i], s[i + 1]),) + s[i + 2:])
        out.append((g.compose(s[n], s[0]),) + s[1:n])
        return out

    def degen(n, s):
        return [
            s[: i + 1] + (g.ident[g.tgt[s[i]]],) + s[i + 1:]
            for i in range(n + 1)
        ]

    def cyc(n, s):
        return s[-1:] + s[:-1]

    return build_level_set(levels, face, degen, cyc)


def inertia_simplicial(g: FiniteGroupoid, cap: int) -> CyclicLevelSet:
    """Inertia presentation of the cyclic nerve, up to degree cap.

    Level n holds the tuples (a, v_1, ..., v_n) with a an automorphism.
    d_0 conjugates a through v_1, middle faces compose adjacent v's, d_n
    drops v_n.  The cyclic operator conjugates a all the way around the
    loop and prepends the accumulated arrow:

        t(a, v_1..v_n) = (w^-1 a w, inv(v_n..v_1).a, v_1, ..., v_{n-1})

    with w = v_1 ... v_n.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    chains = composable_chains(g, cap + 1)
    levels = [
        [c for c in chains[n + 1] if g.src[c[0]] == g.tgt[c[0]]]
        for n in range(cap + 1)
    ]

    def face(n, s):
        a, vs = s[0], s[1:]
        out = [(g.compose(g.compose(g.inv[vs[0]], a), vs[0]),) + vs[1:]]
        for i in range(1, n):
            out.append((a,) + vs[: i - 1] + (g.compose(vs[i - 1], vs[i]),) + vs[i + 1:])
        out.append((a,) + vs[:-1])
        return out

    def degen(n, s):
        return [
            s[: i + 1] + (g.ident[g.tgt[s[i]]],) + s[i + 1:]
            for i in range(n + 1)
        ]

    def cyc(n, s):
        if n == 0:
            return s
        a, vs = s[0], s[1:]
        w = g.compose_chain(vs)
        back = g.compose(g.inv[w], a)
        return (g.compose(back, w), back) + vs[:-1]

    return build_level_set(levels, face, degen, cyc)


def inertia_to_cyclic(g: FiniteGroupoid, s: tuple) -> tuple:
    """f: send (a, v_1..v_n) to the loop (inv(v_n..v_1).a, v_1, ..., v_n)."""
    a, vs = s[0], s[1:]
    if not vs:
        return s
    return (g.compose(g.inv[g.compose_chain(vs)], a),) + vs


def cyclic_to_inertia(g: FiniteGroupoid, s: tuple) -> tuple:
    """h: send the loop (g_0, ..., g_n) to (g_1 ... g_n g_0, g_1, ..., g_n)."""
    g0, rest = s[0], s[1:]
    if not rest:
        return s
    return (g.compose(g.compose_chain(rest), g0),) + rest


def iso_f(g: FiniteGroupoid, inert: CyclicLevelSet, cyc: CyclicLevelSet) -> LevelMap:
    """The level map f from the inertia presentation to the cyclic nerve."""
    maps = []
    for n in range(min(inert.max_level, cyc.max_level) + 1):
        target = {s: k for k, s in enumerate(cyc.levels[n])}
        maps.append([target[inertia_to_cyclic(g, s)] for s in inert.levels[n]])
    return LevelMap(inert, cyc, maps)


def iso_h(g: FiniteGroupoid, cyc: CyclicLevelSet, inert: CyclicLevelSet) -> LevelMap:
    """The level map h from the cyclic nerve to the inertia presentation."""
    maps = []
    for n in range(min(inert.max_level, cyc.max_level) + 1):
        target = {s: k for k, s in enumerate(inert.levels[n])}
        maps.append([target[cyclic_to_inertia(g, s)] for s in cyc.levels[n]])
    return LevelMap(cyc, inert, maps)


def inertia_chain_map(
    g: FiniteGroupoid,
    inert: CyclicLevelSet,
    inertia_nerve: SimplicialLevelSet,
    labels: InertiaLabels,
) -> LevelMap:
    """Canonical identification of the inertia level set with nerve(inertia(g)).

    (a, v_1, ..., v_n) corresponds to the chain of inertia-groupoid
    arrows (a, v_1), (a^v_1, v_2), ..., each conjugating the running
    automorphism one step further.
    """
    obj_of = {a: i for i, a in enumerate(labels.object_auto)}
    mor_of = {p: i for i, p in enumerate(labels.morphism_pair)}

    def conj(a, v):
        return g.compose(g.compose(g.inv[v], a), v)

    maps = []
    for n in range(min(inert.max_level, inertia_nerve.max_level) + 1):
        target = {s: k for k, s in enumerate(inertia_nerve.levels[n])}
        table = []
        for s in inert.levels[n]:
            a, vs = s[0], s[1:]
            if not vs:
                table.append(target[(obj_of[a],)])
                continue
            arrows = []
            for v in vs:
                arrows.append(mor_of[(a, v)])
                a = conj(a, v)
            table.append(target[tuple(arrows)])
        maps.append(table)
    return LevelMap(inert, inertia_nerve, maps)


def inertia_structures(g: FiniteGroupoid, cap: int):
    """Convenience bundle: inertia groupoid, its labels, level set, nerve."""
    ig, labels = inertia(g)
    return ig, labels, inertia_simplicial(g, cap), nerve(ig, cap)
