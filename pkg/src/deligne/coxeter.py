"""Finite Coxeter groups of types A_n and D_n and the geometry of their Davis complex.

Elements are stored in one-line notation: a permutation of ``1..n+1`` for A_n
and an even-signed permutation of ``1..n`` for D_n, as a plain tuple.  The
product ``u*v`` is composition of maps, ``(u*v)(i) = u(v(i))``, so right
multiplication by a generator acts on positions and left multiplication acts
on values.

Generators are the integers ``1..n``.  For D_n, generator 1 (``d1``) is the
sign-swapping transposition of positions 1 and 2 and generator ``i >= 2`` is
the transposition of positions ``i-1, i``; so ``d1`` and ``d2`` both hang off
``d3`` and ``d3 - d4 - ... - dn`` is a chain.
"""
from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .errors import ConfigError, HypothesisViolation, NotAdjacent, NotParallel, UnknownGenerator

CoxElem = tuple
MAX_RANK = 8


@dataclass(frozen=True, order=True)
class CoxeterType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D"):
            raise ConfigError(f"unsupported family {self.family!r}")
        if self.rank < 1 or (self.family == "D" and self.rank < 3):
            raise ConfigError(f"rank {self.rank} is too small for type {self.family}")
        if self.rank > MAX_RANK:
            raise ConfigError(f"rank {self.rank} exceeds the configured cap {MAX_RANK}")

    @classmethod
    def parse(cls, text: str) -> "CoxeterType":
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise ConfigError(f"cannot parse Coxeter type {text!r}")
        return cls(text[0], int(text[1:]))

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self):
        return self.name

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        n = self.rank
        if self.family == "A":
            return tuple((i, i + 1) for i in range(1, n))
        return ((1, 3), (2, 3)) + tuple((i, i + 1) for i in range(3, n))

    def m(self, s: int, t: int) -> int:
        if s == t:
            return 1
        return 3 if (min(s, t), max(s, t)) in self.edges else 2

    def coxeter_matrix(self) -> list[list[int]]:
        gens = self.generators
        return [[self.m(s, t) for t in gens] for s in gens]

    def gen_name(self, s: int) -> str:
        return ("d" if self.family == "D" else "s") + str(s)

    def parse_generator(self, name) -> int:
        if isinstance(name, int):
            s = name
        else:
            name = str(name).strip().lower()
            if name[:1] in ("d", "s", "a", "b") and name[1:].isdigit():
                name = name[1:]
            if not name.isdigit():
                raise UnknownGenerator(f"unknown generator {name!r}")
            s = int(name)
        if s not in self.generators:
            raise UnknownGenerator(f"generator {s} not in {self.name}")
        return s

    def order(self) -> int:
        n = self.rank
        if self.family == "A":
            return factorial(n + 1)
        return 2 ** (n - 1) * factorial(n)

    def num_reflections(self) -> int:
        n = self.rank
        return n * (n + 1) // 2 if self.family == "A" else n * (n - 1)

    def components(self, subset: Iterable[int]) -> list[frozenset]:
        """Connected components of the Dynkin diagram restricted to ``subset``."""
        subset = set(subset)
        comps = []
        while subset:
            stack = [subset.pop()]
            comp = set(stack)
            while stack:
                s = stack.pop()
                for t in list(subset):
                    if self.m(s, t) == 3:
                        subset.discard(t)
                        comp.add(t)
                        stack.append(t)
            comps.append(frozenset(comp))
        return sorted(comps, key=sorted)

    def subtree(self, gens: Iterable[int]) -> frozenset:
        """Smallest subtree of the (tree) Dynkin diagram containing ``gens``."""
        gens = set(gens)
        if len(gens) <= 1:
            return frozenset(gens)
        adj = {s: [t for t in self.generators if self.m(s, t) == 3] for s in self.generators}

        def path(a, b):
            prev = {a: None}
            queue = deque([a])
            while queue:
                u = queue.popleft()
                for v in adj[u]:
                    if v not in prev:
                        prev[v] = u
                        queue.append(v)
            out = []
            while b is not None:
                out.append(b)
                b = prev[b]
            return out

        first = min(gens)
        tree = set()
        for g in gens:
            tree.update(path(first, g))
        return frozenset(tree)


@dataclass(frozen=True, order=True)
class Face:
    """Standard coset ``rep * W_T``; ``rep`` is the minimal-length representative."""
    rep: CoxElem
    ftype: frozenset = field(default_factory=frozenset)

    @property
    def dim(self) -> int:
        return len(self.ftype)

    def key(self):
        return (tuple(sorted(self.ftype)), self.rep)


class CoxeterGroup:
    def __init__(self, ctype: CoxeterType | str):
        if isinstance(ctype, str):
            ctype = CoxeterType.parse(ctype)
        self.ctype = ctype
        self.rank = ctype.rank
        self.S = ctype.generators
        self.degree = ctype.rank + 1 if ctype.family == "A" else ctype.rank
        self.identity: CoxElem = tuple(range(1, self.degree + 1))
        self._gens = {s: self.right_mul_gen(self.identity, s) for s in self.S}
        self._length_cache: dict = {}
        self._parabolic_cache: dict = {}
        self._w0_cache: dict = {}
        self._reflections = None
        self._gate_cache: dict = {}
        self._index = None
        self._gate_tables: dict = {}

    def __repr__(self):
        return f"CoxeterGroup({self.ctype.name})"

    def __eq__(self, other):
        return isinstance(other, CoxeterGroup) and other.ctype == self.ctype

    def __hash__(self):
        return hash(self.ctype)

    # -- arithmetic -----------------------------------------------------

    def generator(self, s: int) -> CoxElem:
        return self._gens[s]

    def mul(self, u: CoxElem, v: CoxElem) -> CoxElem:
        return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)

    def inverse(self, w: CoxElem) -> CoxElem:
        out = [0] * len(w)
        for i, x in enumerate(w, 1):
            if x > 0:
                out[x - 1] = i
            else:
                out[-x - 1] = -i
        return tuple(out)

    def right_mul_gen(self, w: CoxElem, s: int) -> CoxElem:
        w = list(w)
        if self.ctype.family == "A":
            w[s - 1], w[s] = w[s], w[s - 1]
        elif s == 1:
            w[0], w[1] = -w[1], -w[0]
        else:
            w[s - 2], w[s - 1] = w[s - 1], w[s - 2]
        return tuple(w)

    def left_mul_gen(self, s: int, w: CoxElem) -> CoxElem:
        return self.mul(self._gens[s], w)

    def from_word(self, word: Iterable[int]) -> CoxElem:
        w = self.identity
        for s in word:
            w = self.right_mul_gen(w, abs(s))
        return w

    def length(self, w: CoxElem) -> int:
        cached = self._length_cache.get(w)
        if cached is not None:
            return cached
        n = len(w)
        count = 0
        for i in range(n):
            wi = w[i]
            for j in range(i + 1, n):
                if wi > w[j]:
                    count += 1
                if self.ctype.family == "D" and wi + w[j] < 0:
                    count += 1
        if len(self._length_cache) < 2_000_000:
            self._length_cache[w] = count
        return count

    def is_right_descent(self, w: CoxElem, s: int) -> bool:
        if self.ctype.family == "A":
            return w[s - 1] > w[s]
        if s == 1:
            return w[0] + w[1] < 0
        return w[s - 2] > w[s - 1]

    def right_descents(self, w: CoxElem) -> frozenset:
        return frozenset(s for s in self.S if self.is_right_descent(w, s))

    def left_descents(self, w: CoxElem) -> frozenset:
        return self.right_descents(self.inverse(w))

    def distance(self, u: CoxElem, v: CoxElem) -> int:
        return self.length(self.mul(self.inverse(u), v))

    def reduced_word(self, w: CoxElem) -> list[int]:
        """Reduced word obtained by always stripping the lowest-index right descent."""
        word = []
        while True:
            for s in self.S:
                if self.is_right_descent(w, s):
                    word.append(s)
                    w = self.right_mul_gen(w, s)
                    break
            else:
                break
        word.reverse()
        return word

    def parabolic_decompose(self, w: CoxElem, T: Iterable[int]) -> tuple[CoxElem, CoxElem]:
        """Split ``w = minrep * tail`` with ``tail`` in ``W_T`` and ``minrep`` T-reduced on the right."""
        T = sorted(set(T))
        tail_word = []
        while True:
            for s in T:
                if self.is_right_descent(w, s):
                    tail_word.append(s)
                    w = self.right_mul_gen(w, s)
                    break
            else:
                break
        tail_word.reverse()
        return w, self.from_word(tail_word)

    def in_parabolic(self, w: CoxElem, T: Iterable[int]) -> bool:
        return self.parabolic_decompose(w, T)[0] == self.identity

    def w0(self, T: Iterable[int] | None = None) -> CoxElem:
        T = frozenset(self.S if T is None else T)
        cached = self._w0_cache.get(T)
        if cached is None:
            w = self.identity
            order = sorted(T)
            while True:
                for s in order:
                    if not self.is_right_descent(w, s):
                        w = self.right_mul_gen(w, s)
                        break
                else:
                    break
            cached = self._w0_cache[T] = w
        return cached

    def parabolic_elements(self, T: Iterable[int] | None = None) -> list[CoxElem]:
        """All elements of ``W_T`` (breadth first, so sorted by length)."""
        T = frozenset(self.S if T is None else T)
        cached = self._parabolic_cache.get(T)
        if cached is None:
            seen = {self.identity}
            order = [self.identity]
            queue = deque(order)
            gens = sorted(T)
            while queue:
                w = queue.popleft()
                for s in gens:
                    v = self.right_mul_gen(w, s)
                    if v not in seen:
                        seen.add(v)
                        order.append(v)
                        queue.append(v)
            cached = self._parabolic_cache[T] = order
        return cached

    def elements(self) -> list[CoxElem]:
        return self.parabolic_elements(self.S)

    def order_of(self, w: CoxElem) -> int:
        k, x = 1, w
        while x != self.identity:
            x = self.mul(x, w)
            k += 1
        return k

    def coxeter_matrix_from_orders(self) -> list[list[int]]:
        """Recompute m(s,t) as the order of ``st``; validates the generator dictionary."""
        g = self._gens
        return [[self.order_of(self.mul(g[s], g[t])) for t in self.S] for s in self.S]

    # -- walls ----------------------------------------------------------

    def reflections(self) -> frozenset:
        if self._reflections is None:
            refl = set()
            for w in self.elements():
                winv = self.inverse(w)
                for s in self.S:
                    refl.add(self.mul(self.mul(w, self._gens[s]), winv))
            self._reflections = frozenset(refl)
        return self._reflections

    def parabolic_reflections(self, T: Iterable[int]) -> frozenset:
        T = frozenset(T)
        out = set()
        for a in self.parabolic_elements(T):
            ainv = self.inverse(a)
            for s in T:
                out.add(self.mul(self.mul(a, self._gens[s]), ainv))
        return frozenset(out)

    def separates(self, t: CoxElem, u: CoxElem, v: CoxElem) -> bool:
        lu = self.length(self.mul(t, u)) < self.length(u)
        lv = self.length(self.mul(t, v)) < self.length(v)
        return lu != lv

    # -- faces ----------------------------------------------------------

    def face(self, w: CoxElem, T: Iterable[int] = ()) -> Face:
        T = frozenset(T)
        return Face(self.parabolic_decompose(w, T)[0], T)

    def faces_of_type(self, T: Iterable[int]) -> list[Face]:
        T = frozenset(T)
        reps = {self.parabolic_decompose(w, T)[0] for w in self.elements()}
        return [Face(r, T) for r in sorted(reps)]

    def all_faces(self, max_rank: int | None = None) -> list[Face]:
        out = []
        top = self.rank if max_rank is None else max_rank
        for k in range(top + 1):
            for T in itertools.combinations(self.S, k):
                out.extend(self.faces_of_type(T))
        return out

    def face_vertices(self, F: Face) -> list[CoxElem]:
        return [self.mul(F.rep, u) for u in self.parabolic_elements(F.ftype)]

    def face_contains(self, F: Face, w: CoxElem) -> bool:
        return self.in_parabolic(self.mul(self.inverse(F.rep), w), F.ftype)

    def face_subset(self, E: Face, F: Face) -> bool:
        return E.ftype <= F.ftype and self.face_contains(F, E.rep)

    def split_product(self, g: CoxElem, I: Iterable[int], J: Iterable[int]):
        """Return ``(a, b)`` with ``g = a*b``, ``a`` in ``W_I``, ``b`` in ``W_J``, or None."""
        m, tail = self.parabolic_decompose(self.inverse(g), I)
        b = self.inverse(m)
        if not self.in_parabolic(b, J):
            return None
        return self.inverse(tail), b

    def faces_intersect(self, E: Face, F: Face) -> bool:
        return self.split_product(self.mul(self.inverse(E.rep), F.rep), E.ftype, F.ftype) is not None

    def face_intersection(self, E: Face, F: Face) -> Face | None:
        split = self.split_product(self.mul(self.inverse(E.rep), F.rep), E.ftype, F.ftype)
        if split is None:
            return None
        return self.face(self.mul(E.rep, split[0]), E.ftype & F.ftype)

    def gate_vertex(self, x: CoxElem, F: Face) -> CoxElem:
        key = (x, F)
        g = self._gate_cache.get(key)
        if g is None:
            m, _ = self.parabolic_decompose(self.mul(self.inverse(x), F.rep), F.ftype)
            g = self.mul(x, m)
            if len(self._gate_cache) > 1_000_000:
                self._gate_cache.clear()
            self._gate_cache[key] = g
        return g

    def indexing(self):
        """``(elements, index, right)`` with ``right[s][i]`` the index of ``elements[i] * s``."""
        if self._index is None:
            elems = self.elements()
            index = {w: i for i, w in enumerate(elems)}
            right = {s: [index[self.right_mul_gen(w, s)] for w in elems] for s in self.S}
            self._index = (elems, index, right)
        return self._index

    def gate_table(self, F: Face) -> list[int]:
        """Indices of the gates onto ``F`` of all elements, in indexing order."""
        table = self._gate_tables.get(F)
        if table is None:
            elems, index, _ = self.indexing()
            table = [index[self.gate_vertex(w, F)] for w in elems]
            if len(self._gate_tables) > 10_000:
                self._gate_tables.clear()
            self._gate_tables[F] = table
        return table

    def wall_in_face(self, t: CoxElem, F: Face) -> bool:
        r = self.mul(self.mul(self.inverse(F.rep), t), F.rep)
        return self.in_parabolic(r, F.ftype)

    def walls_of_face(self, F: Face) -> frozenset:
        rinv = self.inverse(F.rep)
        return frozenset(self.mul(self.mul(F.rep, r), rinv) for r in self.parabolic_reflections(F.ftype))

    def proj_face(self, E: Face, F: Face) -> Face:
        """Face of ``F`` whose vertex set is the gate image of ``E``'s vertices."""
        p = self.gate_vertex(E.rep, F)
        q = self.mul(self.inverse(E.rep), p)  # E.rep^-1 p
        qinv = self.inverse(q)
        K = set()
        for s in F.ftype:
            # p s p^-1 in W(E)  <=>  E.rep^-1 p s p^-1 E.rep in W_I
            conj = self.mul(self.mul(q, self._gens[s]), qinv)
            if self.in_parabolic(conj, E.ftype):
                K.add(s)
        return self.face(p, K)

    def pair_gate(self, E: Face, F: Face):
        """Return ``(E', F', bij)`` with ``bij`` mapping vertices of ``E'`` to their gates in ``F'``."""
        Ep = self.proj_face(F, E)
        Fp = self.proj_face(E, F)
        bij = {x: self.gate_vertex(x, F) for x in self.face_vertices(Ep)}
        return Ep, Fp, bij

    def face_distance(self, E: Face, F: Face) -> int:
        x = self.proj_face(F, E).rep
        return self.distance(x, self.gate_vertex(x, F))

    def are_parallel(self, E: Face, F: Face) -> bool:
        return E.dim == F.dim and self.walls_of_face(E) == self.walls_of_face(F)

    def are_adjacent_parallel(self, E: Face, F: Face) -> bool:
        if E == F or not self.are_parallel(E, F):
            return False
        for s in self.S:
            if s in E.ftype:
                continue
            big = self.face(E.rep, E.ftype | {s})
            if self.face_subset(F, big):
                return True
        return False

    def elementary_segment(self, E: Face, F: Face, start: CoxElem | None = None) -> list[int]:
        """Word of a shortest path from a vertex of ``E`` to its parallel translate in ``F``."""
        if E == F:
            raise NotAdjacent("a face is not adjacent to itself")
        if not self.are_parallel(E, F):
            raise NotParallel("faces have different wall sets")
        if not self.are_adjacent_parallel(E, F):
            raise NotAdjacent("parallel faces do not lie in a common face of one higher dimension")
        x = E.rep if start is None else start
        y = self.gate_vertex(x, F)
        return self.reduced_word(self.mul(self.inverse(x), y))

    def support_of_face(self, F: Face) -> frozenset:
        return F.ftype


def support(word: Iterable) -> frozenset:
    """Letters occurring in a word, ignoring signs (letters may be ints or (gen, sign) pairs)."""
    out = set()
    for letter in word:
        if isinstance(letter, tuple):
            letter = letter[0]
        out.add(abs(letter))
    return frozenset(out)


@lru_cache(maxsize=None)
def coxeter_group(name: str) -> CoxeterGroup:
    return CoxeterGroup(CoxeterType.parse(name))


def verify_projection_location(group: CoxeterGroup, triple: Sequence[int]) -> dict:
    """Exhaustively check the projection-location lemma for the A_3 triple ``(s_i, s_i+1, s_i+2)``.

    Every 4-tuple of pairwise distinct faces with C1, C3 of type S - {s_i},
    C2, C4 of type S - {s_i+1} and consecutive faces meeting is enumerated.
    """
    ct = group.ctype
    a, b, c = triple
    for x in triple:
        if x not in group.S:
            raise HypothesisViolation(f"generator {x} not in {ct.name}")
    if not (ct.m(a, b) == 3 and ct.m(b, c) == 3 and ct.m(a, c) == 2):
        raise HypothesisViolation(f"{triple} does not span a linear A_3 in {ct.name}")
    S = frozenset(group.S)
    type1 = S - {a}
    type2 = S - {b}
    faces1 = group.faces_of_type(type1)
    faces2 = group.faces_of_type(type2)
    meets = {}
    for F in faces1:
        for G in faces2:
            meets[F, G] = group.faces_intersect(F, G)
    inter_cache = {}

    def inter(F, G):
        key = (F, G)
        if key not in inter_cache:
            inter_cache[key] = group.face_intersection(F, G)
        return inter_cache[key]

    checked = 0
    counterexamples = []
    for C1 in faces1:
        for C2 in faces2:
            if not meets[C1, C2]:
                continue
            I12 = inter(C1, C2)
            for C3 in faces1:
                if C3 == C1 or not meets[C3, C2]:
                    continue
                I23 = inter(C3, C2)
                P13 = group.proj_face(C3, C1)
                ok1a = group.face_subset(P13, I12)
                for C4 in faces2:
                    if C4 == C2 or not meets[C3, C4]:
                        continue
                    checked += 1
                    P24 = group.proj_face(C4, C2)
                    ok1b = group.face_subset(P24, I23)
                    P14 = group.proj_face(C4, C1)
                    supp = P14.ftype
                    ok2 = (c not in supp) or (b not in supp)
                    if not (ok1a and ok1b and ok2):
                        counterexamples.append({
                            "faces": [face_to_json(group, F) for F in (C1, C2, C3, C4)],
                            "conclusion1": bool(ok1a and ok1b),
                            "conclusion2": bool(ok2),
                        })
    counterexamples.sort(key=lambda r: str(r["faces"]))
    names = [ct.gen_name(x) for x in triple]
    return {
        "type": ct.name,
        "triple": names,
        "configurations": checked,
        "counterexamples": counterexamples,
        "passed": not counterexamples,
        "readings": {
            "codim1_faces": {"configurations": checked, "counterexamples": len(counterexamples)},
            "all_faces_of_stated_type": {
                "configurations": checked,
                "counterexamples": len(counterexamples),
                "note": "in a finite Davis complex the faces of type S-{s} are exactly its codimension-one faces",
            },
        },
    }


def bfs_distances(group: CoxeterGroup) -> dict:
    """Word length of every element from a breadth-first search of the Cayley graph."""
    dist = {group.identity: 0}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for s in group.S:
                u = group.right_mul_gen(w, s)
                if u not in dist:
                    dist[u] = dist[w] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def verify_gate_suite(group: CoxeterGroup, max_rank: int = 2) -> dict:
    """Every gate is the unique nearest vertex of its face (brute-force distances)."""
    dist = bfs_distances(group)
    elems = group.elements()
    checked, failures = 0, []
    for F in group.all_faces(max_rank):
        verts = group.face_vertices(F)
        for x in elems:
            xi = group.inverse(x)
            ds = [dist[group.mul(xi, v)] for v in verts]
            best = min(ds)
            nearest = [v for v, d in zip(verts, ds) if d == best]
            checked += 1
            if nearest != [group.gate_vertex(x, F)]:
                failures.append({"face": face_to_json(group, F), "x": group.reduced_word(x)})
    return {"suite": "gate", "checked": checked, "failures": failures[:20], "failed": len(failures)}


def verify_pair_gate_suite(group: CoxeterGroup, max_rank: int = 2, translate: bool = False) -> dict:
    """Pair gates realize the nearest vertex sets, the mutual gate bijection and the wall identity.

    With ``translate`` the first face runs over standard faces only; every pair is a
    translate of such a pair and all checked properties are equivariant.
    """
    dist = bfs_distances(group)
    faces = group.all_faces(max_rank)
    firsts = [F for F in faces if F.rep == group.identity] if translate else faces
    verts = {F: group.face_vertices(F) for F in faces}
    walls = {F: group.walls_of_face(F) for F in faces}
    checked, failures = 0, []
    inv = {w: group.inverse(w) for w in dist}
    dcache: dict = {}

    def d(u, v):
        key = (u, v)
        if key not in dcache:
            dcache[key] = dist[group.mul(inv[u], v)]
        return dcache[key]

    def walls_of(F):
        if F not in walls:
            walls[F] = group.walls_of_face(F)
        return walls[F]

    for E in firsts:
        for F in faces:
            checked += 1
            problems = []
            Ep, Fp, bij = group.pair_gate(E, F)
            table = {(x, y): d(x, y) for x in verts[E] for y in verts[F]}
            dmin = min(table.values())
            X = sorted({x for (x, y), v in table.items() if v == dmin})
            Y = sorted({y for (x, y), v in table.items() if v == dmin})
            if not (group.face_subset(Ep, E) and group.face_subset(Fp, F)):
                problems.append("not contained")
            if sorted(group.face_vertices(Ep)) != X or sorted(group.face_vertices(Fp)) != Y:
                problems.append("nearest sets")
            if sorted(bij.values()) != Y or any(group.gate_vertex(y, E) != x for x, y in bij.items()):
                problems.append("bijection")
            common = walls[E] & walls[F]
            if not (walls_of(Ep) == common == walls_of(Fp)):
                problems.append("walls")
            if walls[E] == walls[F] and (Ep != E or Fp != F):
                problems.append("parallel")
            if problems:
                failures.append({"E": face_to_json(group, E), "F": face_to_json(group, F), "problems": problems})
    return {"suite": "pair_gate", "checked": checked, "translated": translate,
            "failures": failures[:20], "failed": len(failures)}


def verify_wall_suite(group: CoxeterGroup, pairs: int | None = None, seed: int = 0) -> dict:
    """Separating-wall counts equal Cayley-graph distances (all pairs, or a seeded sample)."""
    dist = bfs_distances(group)
    elems = group.elements()
    refl = sorted(group.reflections())
    if pairs is None:
        todo = [(u, v) for u in elems for v in elems]
    else:
        rng = random.Random(seed)
        todo = [(rng.choice(elems), rng.choice(elems)) for _ in range(pairs)]
    failures = []
    for u, v in todo:
        count = sum(group.separates(t, u, v) for t in refl)
        if count != dist[group.mul(group.inverse(u), v)]:
            failures.append([group.reduced_word(u), group.reduced_word(v)])
    return {"suite": "walls", "checked": len(todo), "failures": failures[:20], "failed": len(failures)}


def default_triples(ctype: CoxeterType) -> list[tuple[int, int, int]]:
    """The linear A_3 triples used by the projection-location check."""
    if ctype.family == "D":
        return [(1, 3, 4)] if ctype.rank >= 4 else []
    return [(i, i + 1, i + 2) for i in range(1, ctype.rank - 1)][:1]


def face_to_json(group: CoxeterGroup, F: Face) -> dict:
    ct = group.ctype
    return {"rep": [ct.gen_name(s) for s in group.reduced_word(F.rep)],
            "type": [ct.gen_name(s) for s in sorted(F.ftype)]}

