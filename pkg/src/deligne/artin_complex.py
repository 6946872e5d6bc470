"""The Artin complex of a spherical Artin group, handled as coset data.

A vertex of type ``s^`` is a left coset ``g A_{S-{s}}``; a set of vertices spans a
simplex when the cosets have a common element (a chamber).  Cosets are stored
by a canonical representative obtained from the retraction onto the standard
face, so vertex equality is structural and adjacency is decided exactly by a
product-membership test that always comes with a witness chamber.
"""
from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coxeter import CoxeterType
from .errors import NotClosed, NotInParabolic, SameType, TypeMismatch
from .garside import ArtinGroup, GarsideElem, artin_group

Chamber = GarsideElem


@dataclass(frozen=True, order=True)
class VertexCoset:
    vtype: int
    rep: GarsideElem

    def to_json(self) -> dict:
        return {"type": self.rep.ctype.gen_name(self.vtype), "rep": self.rep.to_json()}


@dataclass(frozen=True, order=True)
class Midpoint:
    """Midpoint of an edge between vertices of types d1^ and d2^ (in that order)."""
    ends: tuple

    @property
    def vtype(self) -> str:
        return "m"

    def to_json(self) -> dict:
        return {"type": "m", "ends": [v.to_json() for v in self.ends]}


class TypeOrder:
    """Partial order on vertex types of D_n: {d1^, d2^} < d3^ < ... < dn^."""

    def __init__(self, ctype: CoxeterType):
        if ctype.family != "D":
            raise TypeMismatch("the type order is defined for D_n only")
        self.ctype = ctype

    @staticmethod
    def level(s: int) -> int:
        return 1 if s in (1, 2) else s

    def less(self, a: int, b: int) -> bool:
        return self.level(a) < self.level(b)

    def comparable(self, a: int, b: int) -> bool:
        return a == b or self.level(a) != self.level(b)


def t_value(v) -> int:
    if isinstance(v, Midpoint):
        return 2
    return TypeOrder.level(v.vtype)


@dataclass(frozen=True)
class Hexagon:
    group: ArtinGroup = field(compare=False, repr=False)
    types: tuple
    words: tuple
    vertices: tuple
    witnesses: tuple

    def __len__(self):
        return len(self.vertices)

    @property
    def is_embedded(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def coxeter_shadow(self) -> dict:
        """Image in the Coxeter complex: faces ``w(g) W_{S-{a}}`` and the distinct edges between them."""
        A = self.group
        W = A.W
        S = frozenset(W.S)
        verts = []
        prefix = A.identity()
        for a, w in zip(self.types, self.words):
            verts.append(W.face(A.coxeter_image(prefix), S - {a}))
            prefix = prefix * w
        edges = set()
        n = len(verts)
        for i in range(n):
            u, v = verts[i], verts[(i + 1) % n]
            if u != v:
                edges.add(frozenset((u, v)))
        return {"vertices": verts, "edges": sorted(tuple(sorted(e)) for e in edges)}

    def to_json(self) -> dict:
        ct = self.group.ctype
        return {
            "type": ct.name,
            "types": [ct.gen_name(a) for a in self.types],
            "words": [[list(l) for l in self.group.to_letters(w)] for w in self.words],
        }


class ArtinComplex:
    def __init__(self, ctype: CoxeterType | str):
        if isinstance(ctype, str):
            ctype = CoxeterType.parse(ctype)
        self.ctype = ctype
        self.A: ArtinGroup = artin_group(ctype.name)
        self.W = self.A.W
        self.S = frozenset(self.W.S)
        self._adj_cache: dict = {}
        self._ball_cache: dict = {}

    def __repr__(self):
        return f"ArtinComplex({self.ctype.name})"

    def hat(self, s: int) -> frozenset:
        return self.S - {s}

    # -- vertices and adjacency -----------------------------------------

    def vertex_of(self, chamber: Chamber, s: int) -> VertexCoset:
        return VertexCoset(s, self.A.coset_representative(chamber, self.hat(s)))

    def chamber_vertices(self, chamber: Chamber) -> tuple:
        return tuple(self.vertex_of(chamber, s) for s in sorted(self.S))

    def same_vertex(self, v: VertexCoset, w: VertexCoset) -> bool:
        """Coset equality through the membership test (independent of canonical reps)."""
        if v.vtype != w.vtype:
            return False
        return self.A.parabolic_membership(self.A.left_divide(w.rep, v.rep), self.hat(v.vtype))

    def contains(self, v: VertexCoset, chamber: Chamber) -> bool:
        return self.A.parabolic_membership(self.A.left_divide(v.rep, chamber), self.hat(v.vtype))

    def adjacent_witness(self, v: VertexCoset, w: VertexCoset, radius: int = 0) -> Chamber | None:
        """A chamber lying in both cosets, or None when the cosets are disjoint."""
        if v.vtype == w.vtype:
            raise SameType(f"both vertices have type {self.ctype.gen_name(v.vtype)}^")
        key = (v, w)
        if key in self._adj_cache:
            return self._adj_cache[key]
        g = self.A.left_divide(v.rep, w.rep)
        a = self.A.product_membership_witness(g, self.hat(v.vtype), self.hat(w.vtype), radius)
        f = None if a is None else v.rep * a
        if len(self._adj_cache) > 500_000:
            self._adj_cache.clear()
        self._adj_cache[key] = f
        self._adj_cache[(w, v)] = f
        return f

    def adjacent(self, v: VertexCoset, w: VertexCoset) -> bool:
        if v.vtype == w.vtype:
            return False
        return self.adjacent_witness(v, w) is not None

    def validate_witness(self, f: Chamber, *vertices: VertexCoset) -> bool:
        return all(self.contains(v, f) for v in vertices)

    def simplex_witness(self, vertices: Sequence[VertexCoset]) -> Chamber | None:
        """A chamber containing all given vertices (pairwise distinct types), or None."""
        vertices = list(vertices)
        if not vertices:
            return self.A.identity()
        f = vertices[0].rep
        types = {vertices[0].vtype}
        for v in vertices[1:]:
            if v.vtype in types:
                raise SameType("repeated vertex type in a simplex")
            # chambers through the current face are f * A_{S - types}
            a = self.A.product_membership_witness(self.A.left_divide(f, v.rep), self.S - types, self.hat(v.vtype))
            if a is None:
                return None
            f = f * a
            types.add(v.vtype)
        return f

    # -- cycles ---------------------------------------------------------

    def cycle_from_words(self, types: Sequence, words: Sequence) -> Hexagon:
        A = self.A
        types = tuple(self.ctype.parse_generator(a) for a in types)
        words = tuple(w if isinstance(w, GarsideElem) else A.from_word(w) for w in words)
        if len(types) != len(words):
            raise ValueError("types and words differ in length")
        for i, (a, w) in enumerate(zip(types, words)):
            if not A.parabolic_membership(w, self.hat(a)):
                raise NotInParabolic(i)
        prefix = A.identity()
        vertices, witnesses = [], []
        for a, w in zip(types, words):
            vertices.append(self.vertex_of(prefix, a))
            prefix = prefix * w
            witnesses.append(prefix)
        if not prefix.is_identity:
            raise NotClosed("the product of the words is not the identity")
        return Hexagon(A, types, words, tuple(vertices), tuple(witnesses))

    def hexagon_from_words(self, types: Sequence, words: Sequence) -> Hexagon:
        if len(types) != 6:
            raise ValueError("a hexagon needs six types")
        return self.cycle_from_words(types, words)

    def hexagon_from_json(self, data: dict) -> Hexagon:
        return self.hexagon_from_words(data["types"], [[tuple(l) for l in w] for w in data["words"]])

    def is_induced(self, vertices: Sequence[VertexCoset]) -> bool:
        n = len(vertices)
        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                if self.adjacent(vertices[i], vertices[j]):
                    return False
        return True

    def is_cycle(self, vertices: Sequence[VertexCoset]) -> bool:
        n = len(vertices)
        return all(self.adjacent(vertices[i], vertices[(i + 1) % n]) for i in range(n))

    # -- center searches --------------------------------------------------

    def _link_candidates(self, base: Chamber, occupied: Iterable[int], c: int, radius: int):
        """Vertices of type ``c^`` spanning a simplex with the face of ``base`` of the given types."""
        T = self.S - set(occupied)
        if c not in T:
            return
        K = next(comp for comp in self.ctype.components(T) if c in comp)
        for a in self.A.ball(radius, K):
            yield self.vertex_of(base * a, c)

    def _adjacent_to_all(self, z: VertexCoset, targets: Sequence[VertexCoset]) -> bool:
        return all(z == x or self.adjacent(z, x) for x in targets)

    def _component_size(self, occupied, c) -> int:
        T = self.S - set(occupied)
        if c not in T:
            return 0
        return len(next(comp for comp in self.ctype.components(T) if c in comp))

    def search_center(self, cycle, ctype: int, radius: int) -> VertexCoset | None:
        """A vertex of type ``ctype^`` adjacent to every vertex of the cycle.

        Candidates are the type ``ctype^`` vertices spanning a simplex with some
        edge of the cycle, taken over a Garside ball of the given radius in the
        relevant parabolic of the edge stabilizer.
        """
        vertices = list(cycle.vertices if isinstance(cycle, Hexagon) else cycle)
        n = len(vertices)
        for v in vertices:
            if v.vtype == ctype and self._adjacent_to_all(v, vertices):
                return v
        edges = []
        for i in range(n):
            u, w = vertices[i], vertices[(i + 1) % n]
            if u.vtype == w.vtype:
                continue
            if isinstance(cycle, Hexagon):
                f = cycle.witnesses[i]
            else:
                f = self.adjacent_witness(u, w)
                if f is None:
                    continue
            edges.append((self._component_size((u.vtype, w.vtype), ctype), i, f, (u.vtype, w.vtype)))
        edges.sort(key=lambda e: (e[0], e[1]))
        seen = set()
        for r in range(radius + 1):
            for _, i, f, occ in edges:
                for z in self._link_candidates(f, occ, ctype, r):
                    if z in seen:
                        continue
                    seen.add(z)
                    if self._adjacent_to_all(z, vertices):
                        return z
        return None

    def search_adjacent_vertex(self, targets: Sequence[VertexCoset], radius: int,
                               types: Iterable[int] | None = None) -> VertexCoset | None:
        """A vertex adjacent to every target, drawn from the link of one target."""
        targets = list(targets)
        target_types = {x.vtype for x in targets}
        types = sorted(self.S - target_types if types is None else types)
        plans = []
        for c in types:
            for x in targets:
                if c == x.vtype:
                    continue
                plans.append((self._component_size((x.vtype,), c), c, x))
        plans.sort(key=lambda p: (p[0], p[1], p[2]))
        seen = set()
        for r in range(radius + 1):
            for _, c, x in plans:
                for z in self._link_candidates(x.rep, (x.vtype,), c, r):
                    if z in seen:
                        continue
                    seen.add(z)
                    if all(self.adjacent(z, y) for y in targets):
                        return z
        return None

    def search_quasi_center(self, cycle, radius: int, parities: Sequence[int] = (0, 1),
                            types: Iterable[int] | None = None):
        vertices = list(cycle.vertices if isinstance(cycle, Hexagon) else cycle)
        for p in parities:
            targets = vertices[p::2]
            z = self.search_adjacent_vertex(targets, radius, types)
            if z is not None:
                return z, p
        return None

    # -- zigzag classification ---------------------------------------------

    def classify_zigzag(self, cycle) -> dict:
        order = TypeOrder(self.ctype)
        types = list(cycle.types if isinstance(cycle, Hexagon) else (v.vtype for v in cycle))
        n = len(types)
        admissible = all(order.comparable(types[i], types[(i + 1) % n]) and types[i] != types[(i + 1) % n]
                         for i in range(n))
        local_max = [i for i in range(n)
                     if order.less(types[i - 1], types[i]) and order.less(types[(i + 1) % n], types[i])]
        local_min = [i for i in range(n)
                     if order.less(types[i], types[i - 1]) and order.less(types[i], types[(i + 1) % n])]
        alternating = (len(local_max) == n // 2 and len(local_min) == n // 2
                       and all((i % 2) == (local_max[0] % 2) for i in local_max))
        return {
            "admissible": admissible,
            "local_max": local_max,
            "local_min": local_min,
            "zigzag": admissible and n % 2 == 0 and alternating,
        }

    # -- chamber balls ----------------------------------------------------

    def chamber_ball(self, radius: int, cap: int | None = None) -> "ChamberBall":
        key = radius
        if key not in self._ball_cache:
            kwargs = {} if cap is None else {"cap": cap}
            chambers = list(self.A.enumerate_ball(radius, **kwargs))
            self._ball_cache[key] = ChamberBall(self, chambers)
        return self._ball_cache[key]


class ChamberBall:
    """Vertices and edges spanned by a finite set of chambers; every edge keeps a witness."""

    def __init__(self, cx: ArtinComplex, chambers: Sequence[Chamber]):
        self.cx = cx
        self.chambers = list(chambers)
        self.chamber_verts: list[tuple] = []
        self.neighbors: dict = defaultdict(set)
        self.edge_witness: dict = {}
        for f in self.chambers:
            verts = cx.chamber_vertices(f)
            self.chamber_verts.append(verts)
            for u, v in itertools.combinations(verts, 2):
                self.neighbors[u].add(v)
                self.neighbors[v].add(u)
                self.edge_witness.setdefault(frozenset((u, v)), f)
        self.vertices = sorted(self.neighbors)

    def __len__(self):
        return len(self.vertices)

    def num_edges(self) -> int:
        return len(self.edge_witness)

    def relative(self, types: Iterable[int]) -> dict:
        """Induced subgraph on vertices whose types are listed."""
        types = set(types)
        keep = [v for v in self.vertices if v.vtype in types]
        keep_set = set(keep)
        return {v: sorted(self.neighbors[v] & keep_set) for v in keep}


def relative_complex(ball: ChamberBall, types: Iterable[int]) -> dict:
    return ball.relative(types)


def _cycle_key(cycle: Sequence) -> tuple:
    """Canonical key of a cycle up to rotation and reflection."""
    n = len(cycle)
    best = None
    for seq in (list(cycle), list(reversed(cycle))):
        for r in range(n):
            rot = tuple(seq[r:] + seq[:r])
            if best is None or rot < best:
                best = rot
    return best


def ball_four_cycles(ball: ChamberBall) -> list[tuple]:
    """4-cycles of the ball graph whose diagonals are not ball edges, each listed once."""
    index = {v: i for i, v in enumerate(ball.vertices)}
    nbrs = [frozenset(index[u] for u in ball.neighbors[v]) for v in ball.vertices]
    out = []
    for a in range(len(nbrs)):
        for c in range(a + 1, len(nbrs)):
            if c in nbrs[a]:
                continue
            common = sorted(x for x in nbrs[a] & nbrs[c] if x > a)
            for b, d in itertools.combinations(common, 2):
                if d not in nbrs[b]:
                    out.append(tuple(ball.vertices[i] for i in (a, b, c, d)))
    return out


def four_wheel_check(ball: ChamberBall, search_radius: int, shard: int = 0, shards: int = 1) -> dict:
    """Search a center of allowed type for every induced 4-cycle of the ball."""
    cx = ball.cx
    ct = cx.ctype
    checked = centered = 0
    failures, skipped = [], 0
    by_types: dict = defaultdict(int)
    for cyc in ball_four_cycles(ball)[shard::shards]:
        if cx.adjacent(cyc[0], cyc[2]) or cx.adjacent(cyc[1], cyc[3]):
            skipped += 1
            continue
        checked += 1
        allowed = ct.subtree(v.vtype for v in cyc)
        center = None
        for c in sorted(allowed):
            center = cx.search_center(cyc, c, search_radius)
            if center is not None:
                break
        if center is None:
            failures.append([v.to_json() for v in cyc])
        else:
            centered += 1
            by_types[tuple(sorted({v.vtype for v in cyc}))] += 1
    return {
        "vertices": len(ball),
        "edges": ball.num_edges(),
        "induced_cycles": checked,
        "not_induced_skipped": skipped,
        "centered": centered,
        "unresolved": len(failures),
        "refuted": 0,
        "unresolved_cycles": failures[:20],
        "type_sets": {",".join(ct.gen_name(s) for s in k): n for k, n in sorted(by_types.items())},
    }


def link_check(ball: ChamberBall, v: VertexCoset) -> dict:
    """Cross-component pairs in the link of ``v`` must be adjacent (join decomposition)."""
    cx = ball.cx
    if v not in ball.neighbors:
        return {"vertex": None, "pairs": 0, "adjacent": 0, "failures": []}
    comps = cx.ctype.components(cx.hat(v.vtype))
    comp_of = {s: i for i, comp in enumerate(comps) for s in comp}
    link = sorted(ball.neighbors[v])
    pairs = ok = 0
    failures = []
    for x, y in itertools.combinations(link, 2):
        if comp_of[x.vtype] == comp_of[y.vtype]:
            continue
        pairs += 1
        f = cx.adjacent_witness(x, y)
        if f is not None and cx.validate_witness(f, x, y):
            ok += 1
        else:
            failures.append([x.to_json(), y.to_json()])
    return {"vertex": v.to_json(), "components": [sorted(c) for c in comps],
            "pairs": pairs, "adjacent": ok, "failures": failures}


class Subdivision:
    """The (d1, d2)-subdivision of a chamber ball with its order relation."""

    def __init__(self, ball: ChamberBall):
        cx = ball.cx
        if cx.ctype.family != "D":
            raise TypeMismatch("the subdivision is defined for D_n only")
        self.ball = ball
        self.cx = cx
        self.up: dict = defaultdict(set)    # x -> {y : x < y}
        nodes = set()
        for verts in ball.chamber_verts:
            by_type = {v.vtype: v for v in verts}
            m = Midpoint((by_type[1], by_type[2]))
            cell = [m] + list(verts)
            nodes.update(cell)
            for x, y in itertools.combinations(cell, 2):
                if {getattr(x, "vtype", None), getattr(y, "vtype", None)} == {1, 2}:
                    continue  # the subdivided edge
                if t_value(x) < t_value(y):
                    self.up[x].add(y)
                elif t_value(y) < t_value(x):
                    self.up[y].add(x)
        self.nodes = sorted(nodes, key=_node_key)
        self.down: dict = defaultdict(set)
        for x, ys in self.up.items():
            for y in ys:
                self.down[y].add(x)

    def lower_set(self, y) -> set:
        """Elements ``z <= y`` within the ball."""
        return self.down[y] | {y}

    def is_below(self, z, y) -> bool:
        """Exact test of ``z <= y`` in the full subdivision."""
        if z == y:
            return True
        if t_value(z) >= t_value(y):
            return False
        cx = self.cx
        if isinstance(y, Midpoint):
            return z in y.ends
        if isinstance(z, Midpoint):
            return cx.simplex_witness([z.ends[0], z.ends[1], y]) is not None
        return cx.adjacent(z, y)

    def _index_data(self):
        index = {x: i for i, x in enumerate(self.nodes)}
        lower = [frozenset(index[z] for z in self.lower_set(y)) for y in self.nodes]
        partner: list = [set() for _ in self.nodes]
        by_lower: dict = defaultdict(set)
        for i, low in enumerate(lower):
            for z in low:
                by_lower[z].add(i)
        for ys in by_lower.values():
            for i in ys:
                partner[i].update(ys)
        for i, p in enumerate(partner):
            p.discard(i)
        return lower, partner

    def qualifying_index_triples(self, shard: int = 0, shards: int = 1):
        """Index triples ``i < j < k`` whose pairs each have a lower bound in the ball,
        together with the intersection of the three lower sets.  Sharding splits on ``i``."""
        lower, partner = self._index_data()
        for i in range(shard, len(self.nodes), shards):
            later = sorted(j for j in partner[i] if j > i)
            for a, j in enumerate(later):
                pj = partner[j]
                lij = lower[i] & lower[j]
                for k in later[a + 1:]:
                    if k in pj:
                        yield i, j, k, lij & lower[k]

    def qualifying_triples(self, limit: int | None = None):
        """Triples (by node order) where each pair has a lower bound in the ball."""
        for count, (i, j, k, _) in enumerate(self.qualifying_index_triples(), 1):
            yield self.nodes[i], self.nodes[j], self.nodes[k]
            if limit is not None and count >= limit:
                return

    def common_lower_in_ball(self, triple) -> object | None:
        common = set.intersection(*(self.lower_set(y) for y in triple))
        return min(common, key=_node_key) if common else None

    def search_common_lower(self, triple, radius: int):
        """Common lower bound found beyond the ball by link searches of each member."""
        cx = self.cx
        originals = [y for y in triple if not isinstance(y, Midpoint)]
        mids = [y for y in triple if isinstance(y, Midpoint)]
        if mids:
            # below a midpoint only its ends and itself
            for z in sorted({e for m in mids for e in m.ends} | set(mids), key=_node_key):
                if all(self.is_below(z, y) for y in triple):
                    return z
            return None
        for y in originals:
            if all(self.is_below(y, w) for w in triple):
                return y
        types = sorted(s for s in cx.S if t_value(VertexCoset(s, None)) < min(t_value(y) for y in triple))
        z = cx.search_adjacent_vertex(originals, radius, types=types)
        return z


def _node_key(x):
    if isinstance(x, Midpoint):
        return (2, 0, x.ends)
    return (t_value(x), x.vtype, (x,))


def downward_flag_check(ball: ChamberBall, search_radius: int, limit: int | None = None,
                        shard: int = 0, shards: int = 1) -> dict:
    sub = Subdivision(ball)
    triples = in_ball = beyond = 0
    unresolved = []
    for i, j, k, common in sub.qualifying_index_triples(shard, shards):
        if limit is not None and triples >= limit:
            break
        triples += 1
        if common:
            in_ball += 1
            continue
        triple = (sub.nodes[i], sub.nodes[j], sub.nodes[k])
        z = sub.search_common_lower(triple, search_radius)
        if z is not None:
            beyond += 1
        else:
            unresolved.append([y.to_json() for y in triple])
    return {
        "nodes": len(sub.nodes),
        "midpoints": sum(isinstance(x, Midpoint) for x in sub.nodes),
        "qualifying_triples": triples,
        "lower_bound_in_ball": in_ball,
        "lower_bound_by_search": beyond,
        "unresolved": len(unresolved),
        "refuted": 0,
        "unresolved_triples": unresolved[:20],
    }


# -- hexagon samplers ---------------------------------------------------------

def alternating_family(cx: ArtinComplex, ball_radius: int = 2, kmax: int = 2) -> list[tuple]:
    """All closed words ``w1 d1^k1 w2 d1^k2 w3 d1^k3`` with ``w1, w2`` in the radius ball of
    ``A_{d1^}``, ``0 < |ki| <= kmax`` and ``w3`` in ``A_{d1^}`` forced by closure.

    Matching is done on cosets of ``A_{d1^}``: closure with ``w3`` in the parabolic means
    ``d1^-k1 w1^-1 d1^-k3`` and ``w2 d1^k2`` lie in the same left coset.
    """
    A = cx.A
    X = cx.hat(1)
    ks = [k for k in range(-kmax, kmax + 1) if k]
    d = {k: A.power(A.generator(1), k) for k in ks}
    words = A.ball(ball_radius, X)
    right: dict = defaultdict(list)
    for w2 in words:
        for k2 in ks:
            right[A.coset_representative(w2 * d[k2], X)].append((w2, k2))
    out = []
    for w1 in words:
        w1i = ~w1
        for k1 in ks:
            for k3 in ks:
                key = A.coset_representative(d[-k1] * w1i * d[-k3], X)
                for w2, k2 in right.get(key, ()):
                    w3 = ~(w1 * d[k1] * w2 * d[k2]) * d[-k3]
                    out.append((w1, k1, w2, k2, w3, k3))
    return out


def alternating_hexagon(cx: ArtinComplex, w1, k1, w2, k2, w3, k3) -> Hexagon:
    A = cx.A
    d1 = A.generator(1)
    return cx.hexagon_from_words((1, 3) * 3, (w1, A.power(d1, k1), w2, A.power(d1, k2), w3, A.power(d1, k3)))


def sample_alternating_hexagons(cx: ArtinComplex, count: int, seed: int, ball_radius: int = 2,
                                kmax: int = 2, embedded: bool = True) -> list[Hexagon]:
    """Seeded selection of distinct hexagons from :func:`alternating_family`."""
    rng = random.Random(seed)
    family = alternating_family(cx, ball_radius, kmax)
    rng.shuffle(family)
    out, seen = [], set()
    for params in family:
        h = alternating_hexagon(cx, *params)
        if embedded and not h.is_embedded:
            continue
        key = _cycle_key(list(h.vertices))
        if key in seen:
            continue
        seen.add(key)
        out.append(h)
        if len(out) >= count:
            break
    return out


def zigzag_patterns(ctype: CoxeterType) -> list[tuple]:
    """Zigzag type sequences of length 6 starting at a local max, up to rotation by two."""
    order = TypeOrder(ctype)
    gens = ctype.generators
    out = set()
    for seq in itertools.product(gens, repeat=6):
        if not all(order.less(seq[i - 1], seq[i]) and order.less(seq[i + 1], seq[i]) for i in (0, 2, 4)):
            continue
        rots = [seq[r:] + seq[:r] for r in (0, 2, 4)]
        out.add(min(rots))
    return sorted(out)


def cycle_to_hexagon(cx: ArtinComplex, cycle: Sequence[VertexCoset], witnesses: Sequence[Chamber]) -> Hexagon:
    """Words of a ball cycle; ``witnesses[i]`` contains ``cycle[i]`` and ``cycle[i+1]``.

    The cycle is translated so that the last witness is the identity chamber.
    """
    A = cx.A
    shift = ~witnesses[-1]
    theta = [shift * f for f in witnesses]
    words, prev = [], A.identity()
    for t in theta:
        words.append(~prev * t)
        prev = t
    return cx.cycle_from_words([v.vtype for v in cycle], words)


def sample_zigzag_hexagons(cx: ArtinComplex, ball: "ChamberBall", count: int, seed: int,
                           attempts: int = 200_000) -> list[Hexagon]:
    """Embedded zigzag 6-cycles of the ball graph, found by seeded randomized search."""
    rng = random.Random(seed)
    patterns = zigzag_patterns(cx.ctype)
    by_type: dict = defaultdict(list)
    for v in ball.vertices:
        by_type[v.vtype].append(v)
    typed_nbrs: dict = {}

    def nbrs(v, t):
        key = (v, t)
        if key not in typed_nbrs:
            typed_nbrs[key] = sorted(u for u in ball.neighbors[v] if u.vtype == t)
        return typed_nbrs[key]

    out, seen = [], set()
    for _ in range(attempts):
        if len(out) >= count:
            break
        pat = rng.choice(patterns)
        if not by_type[pat[0]]:
            continue
        path = [rng.choice(by_type[pat[0]])]
        ok = True
        for i in range(1, 6):
            options = [u for u in nbrs(path[-1], pat[i]) if u not in path]
            if i == 5:
                options = [u for u in options if u in ball.neighbors[path[0]]]
            if not options:
                ok = False
                break
            path.append(rng.choice(options))
        if not ok:
            continue
        key = _cycle_key(path)
        if key in seen:
            continue
        seen.add(key)
        wit = [ball.edge_witness[frozenset((path[i], path[(i + 1) % 6]))] for i in range(6)]
        h = cycle_to_hexagon(cx, path, wit)
        if h.is_embedded and cx.classify_zigzag(h)["zigzag"]:
            out.append(h)
    return out
