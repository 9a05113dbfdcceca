"""Finite groupoids and their derived constructions.

A finite groupoid is a small category with finitely many objects and
morphisms in which every morphism is invertible.  Composition is written
in diagrammatic order throughout the package: ``comp(g, h)`` means
"g then h" and is defined exactly when ``tgt(g) == src(h)``.  All chain
and face-map formulas elsewhere are transcribed in this convention.

Objects and morphisms carry string labels for reporting; every
computation runs on integer indices.  Derived groupoids (one-object
groups, action groupoids, the inertia groupoid) enumerate their parts in
lexicographic index order, so outputs are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class GroupoidStructureError(ValueError):
    """Tables are malformed (ids out of range, ragged rows, wrong lengths).

    Distinct from an axiom violation: a structurally broken table cannot
    even be interrogated, so construction fails instead of producing a
    validation report.
    """


class NotAGroupError(ValueError):
    """A multiplication table failed one of the group axioms."""

    def __init__(self, axiom: str, message: str):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom


class NotAnActionError(ValueError):
    """An action table failed one of the right-action axioms."""


@dataclass(frozen=True)
class AxiomViolation:
    """One failed groupoid axiom together with the witnessing elements."""

    axiom: str
    witnesses: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.axiom} at ({', '.join(self.witnesses)}): {self.message}"


@dataclass(frozen=True)
class FiniteGroupoid:
    """A finite groupoid as explicit source/target/composition tables.

    comp[g][h] is the index of "g then h", or -1 when undefined;
    ident[x] is the identity morphism at object x.
    """

    objects: tuple[str, ...]
    morphisms: tuple[str, ...]
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    comp: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    ident: tuple[int, ...]

    def __post_init__(self):
        n_obj, n_mor = len(self.objects), len(self.morphisms)
        if len(self.src) != n_mor or len(self.tgt) != n_mor:
            raise GroupoidStructureError("src/tgt tables must have one entry per morphism")
        if len(self.inv) != n_mor or len(self.ident) != n_obj:
            raise GroupoidStructureError("inv/ident tables have wrong length")
        if len(self.comp) != n_mor or any(len(row) != n_mor for row in self.comp):
            raise GroupoidStructureError("comp table must be square of morphism size")
        for name, seq, bound in (
            ("src", self.src, n_obj),
            ("tgt", self.tgt, n_obj),
            ("inv", self.inv, n_mor),
            ("ident", self.ident, n_mor),
        ):
            for v in seq:
                if not 0 <= v < bound:
                    raise GroupoidStructureError(f"{name} entry {v} out of range")
        for row in self.comp:
            for v in row:
                if v != -1 and not 0 <= v < n_mor:
                    raise GroupoidStructureError(f"comp entry {v} out of range")

    # -- basic accessors -------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    def is_composable(self, g: int, h: int) -> bool:
        return self.tgt[g] == self.src[h]

    def compose(self, g: int, h: int) -> int:
        """Diagrammatic composite "g then h"."""
        k = self.comp[g][h]
        if k == -1:
            raise ValueError(
                f"morphisms {self.morphisms[g]} and {self.morphisms[h]} do not compose"
            )
        return k

    def compose_chain(self, ms) -> int:
        """Composite of a nonempty composable sequence, left to right."""
        it = iter(ms)
        acc = next(it)
        for m in it:
            acc = self.compose(acc, m)
        return acc

    def inverse(self, g: int) -> int:
        return self.inv[g]

    def identity(self, x: int) -> int:
        return self.ident[x]

    def is_identity(self, g: int) -> bool:
        return self.ident[self.src[g]] == g

    def automorphisms(self) -> list[int]:
        """Morphisms with equal source and target, in index order."""
        return [g for g in range(self.n_morphisms) if self.src[g] == self.tgt[g]]

    def morphisms_from(self, x: int) -> list[int]:
        return [g for g in range(self.n_morphisms) if self.src[g] == x]

    def hom(self, x: int, y: int) -> list[int]:
        return [g for g in range(self.n_morphisms) if self.src[g] == x and self.tgt[g] == y]

    def __repr__(self) -> str:
        return f"FiniteGroupoid({self.n_objects} objects, {self.n_morphisms} morphisms)"


def validate_groupoid(g: FiniteGroupoid) -> list[AxiomViolation]:
    """Check every groupoid axiom; an empty report means the input is valid.

    Each violation names the axiom and the witnessing elements.  Structural
    problems (ids out of range) raise GroupoidStructureError at
    construction time and never reach this function.
    """
    out: list[AxiomViolation] = []
    mor = g.morphisms

    for x in range(g.n_objects):
        e = g.ident[x]
        if g.src[e] != x or g.tgt[e] != x:
            out.append(AxiomViolation(
                "identity-endpoints", (g.objects[x], mor[e]),
                "ident(x) must have source and target x"))

    for a in range(g.n_morphisms):
        for b in range(g.n_morphisms):
            defined = g.comp[a][b] != -1
            composable = g.tgt[a] == g.src[b]
            if defined and not composable:
                out.append(AxiomViolation(
                    "composability", (mor[a], mor[b]),
                    "comp defined on a non-composable pair"))
            elif composable and not defined:
                out.append(AxiomViolation(
                    "composability", (mor[a], mor[b]),
                    "comp undefined on a composable pair"))
            elif defined:
                c = g.comp[a][b]
                if g.src[c] != g.src[a] or g.tgt[c] != g.tgt[b]:
                    out.append(AxiomViolation(
                        "composite-endpoints", (mor[a], mor[b], mor[c]),
                        "src(g.h) must be src(g) and tgt(g.h) must be tgt(h)"))

    for a in range(g.n_morphisms):
        ea, eb = g.ident[g.src[a]], g.ident[g.tgt[a]]
        if g.comp[ea][a] != a or g.comp[a][eb] != a:
            out.append(AxiomViolation(
                "unit", (mor[a],), "identities must be two-sided units"))

    for a in range(g.n_morphisms):
        b = g.inv[a]
        if g.src[b] != g.tgt[a] or g.tgt[b] != g.src[a]:
            out.append(AxiomViolation(
                "inverse-endpoints", (mor[a], mor[b]),
                "inv(g) must run backwards along g"))
            continue
        if g.comp[a][b] != g.ident[g.src[a]] or g.comp[b][a] != g.ident[g.tgt[a]]:
            out.append(AxiomViolation(
                "inverse", (mor[a], mor[b]),
                "comp(g, inv(g)) and comp(inv(g), g) must be identities"))

    for a in range(g.n_morphisms):
        for b in range(g.n_morphisms):
            if g.comp[a][b] == -1:
                continue
            for c in range(g.n_morphisms):
                if g.comp[b][c] == -1:
                    continue
                if g.comp[g.comp[a][b]][c] != g.comp[a][g.comp[b][c]]:
                    out.append(AxiomViolation(
                        "associativity", (mor[a], mor[b], mor[c]),
                        "(g.h).k differs from g.(h.k)"))
    return out


def check_group_table(table: list[list[int]] | tuple) -> int:
    """Verify a square multiplication table is a group; return the identity.

    Raises NotAGroupError naming the first failed axiom.  table[i][j] is
    the product "i then j" in the same diagrammatic convention used for
    groupoid composition.
    """
    n = len(table)
    if n == 0:
        raise NotAGroupError("nonempty", "a group has at least one element")
    if any(len(row) != n for row in table):
        raise NotAGroupError("shape", "table must be square")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise NotAGroupError("closure", f"entry ({i},{j}) = {v} out of range")
    e = None
    for i in range(n):
        if all(table[i][j] == j and table[j][i] == j for j in range(n)):
            e = i
            break
    if e is None:
        raise NotAGroupError("identity", "no two-sided identity row/column")
    for i in range(n):
        if not any(table[i][j] == e and table[j][i] == e for j in range(n)):
            raise NotAGroupError("inverses", f"element {i} has no two-sided inverse")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise NotAGroupError(
                        "associativity", f"({i}.{j}).{k} != {i}.({j}.{k})")
    return e


def group_as_groupoid(table, elements: list[str] | None = None,
                      object_label: str = "*") -> FiniteGroupoid:
    """One-object groupoid of a finite group given by its Cayley table."""
    e = check_group_table(table)
    n = len(table)
    if elements is None:
        elements = [f"g{i}" for i in range(n)]
    if len(elements) != n:
        raise GroupoidStructureError("element labels must match table size")
    inv = [0] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == e and table[j][i] == e:
                inv[i] = j
                break
    return FiniteGroupoid(
        objects=(object_label,),
        morphisms=tuple(elements),
        src=(0,) * n,
        tgt=(0,) * n,
        comp=tuple(tuple(row) for row in table),
        inv=tuple(inv),
        ident=(e,),
    )


def action_groupoid(group: FiniteGroupoid, points: list[str],
                    act: list[list[int]]) -> FiniteGroupoid:
    """Action groupoid of a right action of a one-object groupoid on a set.

    act[g][p] is the index of the point p.g.  Objects are the points;
    morphisms are the pairs (point, group element) with src (x, g) = x and
    tgt (x, g) = x.g, enumerated lexicographically.
    """
    if group.n_objects != 1:
        raise NotAnActionError("acting groupoid must have one object")
    n, k = group.n_morphisms, len(points)
    if len(act) != n or any(len(row) != k for row in act):
        raise NotAnActionError("action table must be |G| x |points|")
    for row in act:
        for v in row:
            if not 0 <= v < k:
                raise NotAnActionError(f"action value {v} out of range")
    e = group.ident[0]
    for p in range(k):
        if act[e][p] != p:
            raise NotAnActionError(
                f"identity moves point {points[p]}: not an action")
    for g in range(n):
        for h in range(n):
            gh = group.comp[g][h]
            for p in range(k):
                if act[gh][p] != act[h][act[g][p]]:
                    raise NotAnActionError(
                        f"p.(g.h) != (p.g).h at (g={group.morphisms[g]}, "
                        f"h={group.morphisms[h]}, p={points[p]})")

    pairs = [(p, g) for p in range(k) for g in range(n)]
    idx = {pg: i for i, pg in enumerate(pairs)}
    src = tuple(p for p, _ in pairs)
    tgt = tuple(act[g][p] for p, g in pairs)
    comp = [[-1] * len(pairs) for _ in pairs]
    for i, (p, g) in enumerate(pairs):
        for j, (q, h) in enumerate(pairs):
            if act[g][p] == q:
                comp[i][j] = idx[(p, group.comp[g][h])]
    inv = tuple(idx[(act[g][p], group.inv[g])] for p, g in pairs)
    ident = tuple(idx[(p, e)] for p in range(k))
    labels = tuple(f"({points[p]},{group.morphisms[g]})" for p, g in pairs)
    return FiniteGroupoid(tuple(points), labels, src, tgt,
                          tuple(tuple(r) for r in comp), inv, ident)


@dataclass(frozen=True)
class InertiaLabels:
    """Dictionary between inertia-groupoid indices and base-groupoid data.

    object_auto[i] is the base automorphism a behind inertia object i;
    morphism_pair[m] is the pair (a, v) behind inertia morphism m, with
    source a and target inv(v).a.v.
    """

    object_auto: tuple[int, ...]
    morphism_pair: tuple[tuple[int, int], ...]


def inertia(g: FiniteGroupoid) -> tuple[FiniteGroupoid, InertiaLabels]:
    """Inertia groupoid: objects are automorphisms, morphisms conjugate them.

    A morphism is a pair (a, v) with a an automorphism and v any arrow
    leaving src(a); it runs from a to inv(v).a.v, and (a, v) then
    (inv(v).a.v, w) is (a, v.w).  Components of the result are the
    twisted sectors of g.
    """
    autos = g.automorphisms()
    obj_of = {a: i for i, a in enumerate(autos)}
    pairs = [(a, v) for a in autos for v in g.morphisms_from(g.src[a])]
    idx = {av: i for i, av in enumerate(pairs)}

    def conj(a: int, v: int) -> int:
        return g.compose(g.compose(g.inv[v], a), v)

    src = tuple(obj_of[a] for a, _ in pairs)
    tgt = tuple(obj_of[conj(a, v)] for a, v in pairs)
    comp = [[-1] * len(pairs) for _ in pairs]
    for i, (a, v) in enumerate(pairs):
        cav = conj(a, v)
        for j, (b, w) in enumerate(pairs):
            if b == cav and g.is_composable(v, w):
                comp[i][j] = idx[(a, g.compose(v, w))]
    inv = tuple(idx[(conj(a, v), g.inv[v])] for a, v in pairs)
    ident = tuple(idx[(a, g.ident[g.src[a]])] for a in autos)
    obj_labels = tuple(g.morphisms[a] for a in autos)
    mor_labels = tuple(f"({g.morphisms[a]}|{g.morphisms[v]})" for a, v in pairs)
    out = FiniteGroupoid(obj_labels, mor_labels, src, tgt,
                         tuple(tuple(r) for r in comp), inv, ident)
    return out, InertiaLabels(tuple(autos), tuple(pairs))


def connected_components(g: FiniteGroupoid) -> list[list[int]]:
    """Partition of the objects by morphism reachability.

    Blocks are ordered by least object id; this quotient is the coarse
    space of the groupoid.
    """
    parent = list(range(g.n_objects))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in range(g.n_morphisms):
        a, b = find(g.src[m]), find(g.tgt[m])
        if a != b:
            parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for x in range(g.n_objects):
        blocks.setdefault(find(x), []).append(x)
    return [blocks[r] for r in sorted(blocks)]


def isotropy_group(g: FiniteGroupoid, x: int) -> tuple[list[int], list[list[int]]]:
    """Automorphism group at object x as a closed multiplication table.

    Returns (morphism ids, table) where table[i][j] indexes into the id
    list.  For the inertia groupoid this is the centralizer of the
    object's underlying automorphism.
    """
    if not 0 <= x < g.n_objects:
        raise ValueError(f"unknown object id {x}")
    elems = [m for m in range(g.n_morphisms) if g.src[m] == x and g.tgt[m] == x]
    pos = {m: i for i, m in enumerate(elems)}
    table = [[pos[g.compose(a, b)] for b in elems] for a in elems]
    return elems, table


def disjoint_union(a: FiniteGroupoid, b: FiniteGroupoid) -> FiniteGroupoid:
    """Disjoint union, with labels prefixed to stay unique."""
    na, ma = a.n_objects, a.n_morphisms
    objects = tuple(f"0:{x}" for x in a.objects) + tuple(f"1:{x}" for x in b.objects)
    morphisms = tuple(f"0:{m}" for m in a.morphisms) + tuple(f"1:{m}" for m in b.morphisms)
    src = a.src + tuple(s + na for s in b.src)
    tgt = a.tgt + tuple(t + na for t in b.tgt)
    comp = [[-1] * (ma + b.n_morphisms) for _ in range(ma + b.n_morphisms)]
    for i, j in product(range(ma), range(ma)):
        comp[i][j] = a.comp[i][j]
    for i, j in product(range(b.n_morphisms), range(b.n_morphisms)):
        v = b.comp[i][j]
        comp[ma + i][ma + j] = -1 if v == -1 else v + ma
    inv = a.inv + tuple(v + ma for v in b.inv)
    ident = a.ident + tuple(e + ma for e in b.ident)
    return FiniteGroupoid(objects, morphisms, src, tgt,
                          tuple(tuple(r) for r in comp), inv, ident)
