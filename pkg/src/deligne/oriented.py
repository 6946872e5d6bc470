"""Signed edge paths in the oriented Davis complex and the retraction onto a face.

A path is a base vertex of the Davis complex plus a list of ``(generator, sign)``
letters.  Retracting onto a face sends each vertex to its gate; an edge whose
endpoints have distinct gates is sent to the edge between the gates with the
sign of the source letter, and collapsed otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coxeter import CoxElem, CoxeterGroup, Face
from .errors import TypePatternMismatch

Letter = tuple  # (generator, +1 | -1)


@dataclass(frozen=True)
class SignedWord:
    base: CoxElem
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(s), int(e)) for s, e in self.letters))

    def __len__(self):
        return len(self.letters)


def trajectory(group: CoxeterGroup, sw: SignedWord) -> list[CoxElem]:
    out = [sw.base]
    w = sw.base
    for s, _ in sw.letters:
        w = group.right_mul_gen(w, s)
        out.append(w)
    return out


def is_closed(group: CoxeterGroup, sw: SignedWord) -> bool:
    return trajectory(group, sw)[-1] == sw.base


def retract_letters(group: CoxeterGroup, base: CoxElem, letters: Iterable[Letter], F: Face):
    """Retract the path ``(base, letters)`` onto ``F``; returns ``(new_base, new_letters)``."""
    elems, index, right = group.indexing()
    gate = group.gate_table(F)
    w = index[base]
    g = gate[w]
    out = []
    for s, sign in letters:
        w = right[s][w]
        g2 = gate[w]
        if g2 != g:
            t = next(t for t in F.ftype if right[t][g] == g2)
            out.append((t, sign))
            g = g2
    return elems[gate[index[base]]], out


def retract_path(group: CoxeterGroup, sw: SignedWord, F: Face) -> SignedWord:
    base, letters = retract_letters(group, sw.base, sw.letters, F)
    return SignedWord(base, tuple(letters))


def word_support(sw: SignedWord | Sequence[Letter]) -> frozenset:
    letters = sw.letters if isinstance(sw, SignedWord) else sw
    return frozenset(s for s, _ in letters)


def _retract_segments(group, segments, F):
    """Retract a concatenation of letter lists from the identity; return the retracted pieces."""
    w = group.identity
    pieces = []
    for seg in segments:
        pieces.append(retract_letters(group, w, seg, F)[1])
        w = _advance(group, w, seg)
    return pieces


SHADOW_CASES = {
    1: "single edge: excluded by hypothesis",
    2: "two edges: contradiction case (should not occur for embedded hexagons)",
    "3-star": "three edges with a common vertex: contradiction case (should not occur for embedded hexagons)",
    "3-path": "path with three edges",
    4: "four or five edges: degenerate 4-cycle case",
    6: "embedded 6-cycle",
}


def analyze_tight_hexagon(hexagon, t1: int, t2: int, t3: int, targets: Sequence[int] | None = None) -> dict:
    """Coxeter-shadow classification and retraction support bookkeeping for an alternating hexagon.

    ``hexagon`` alternates types ``S-{t1}`` / ``S-{t2}`` starting with ``S-{t1}``;
    ``t1 - t2 - t3`` must be a linear A_3 in the Dynkin diagram.  ``targets``
    selects which of the three ``S-{t1}`` positions (0, 2, 4) to retract onto.
    """
    A = hexagon.group
    W = A.W
    ct = W.ctype
    if not (ct.m(t1, t2) == 3 and ct.m(t2, t3) == 3 and ct.m(t1, t3) == 2):
        raise TypePatternMismatch("t1, t2, t3 do not form a linear A_3")
    expected = [t1, t2] * 3
    if list(hexagon.types) != expected:
        raise TypePatternMismatch(f"hexagon types {hexagon.types} do not alternate {t1}/{t2}")
    shadow = hexagon.coxeter_shadow()
    verts, edges = shadow["vertices"], shadow["edges"]
    n_edges = len(edges)
    if n_edges <= 1:
        case = 1
    elif n_edges == 2:
        case = 2
    elif n_edges == 3:
        degree = {}
        for a, b in edges:
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
        case = "3-star" if max(degree.values()) == 3 else "3-path"
    elif n_edges in (4, 5):
        case = 4
    else:
        case = 6
    report = {
        "shadow_edges": n_edges,
        "shadow_vertices": len(set(verts)),
        "case": str(case),
        "classification": SHADOW_CASES[case],
        "targets": [],
    }
    if case not in ("3-path", 6):
        report["pattern_met"] = None
        return report
    S = frozenset(W.S)
    segments = [A.to_letters(w) for w in hexagon.words]
    # W-image of the chamber before segment i; segment i runs in the face (chamber_i, S - {a_i})
    chambers = [W.identity]
    for seg in segments:
        chambers.append(_advance(W, chambers[-1], seg))
    met_any = False
    for pos in (targets if targets is not None else (0, 2, 4)):
        F = W.face(chambers[pos], S - {hexagon.types[pos]})
        pieces = _retract_segments(W, segments, F)
        order = [(pos + j) % 6 for j in range(6)]
        # after the target segment P: (Q P) pair, Q, (P Q) pair
        a_idx = [order[1], order[2]]
        b_idx = [order[3]]
        c_idx = [order[4], order[5]]
        supp_a = frozenset().union(*(word_support(pieces[i]) for i in a_idx))
        supp_b = frozenset().union(*(word_support(pieces[i]) for i in b_idx))
        supp_c = frozenset().union(*(word_support(pieces[i]) for i in c_idx))
        avoid12 = frozenset({t1, t2})
        avoid13 = frozenset({t1, t3})
        met = not (supp_a & avoid12) and not (supp_c & avoid12) and not (supp_b & avoid13)
        contradiction_branch = not (supp_a & avoid12) and not (supp_c & avoid12) and not (supp_b & avoid12)
        met_any = met_any or met
        report["targets"].append({
            "position": pos,
            "face_type": [ct.gen_name(s) for s in sorted(F.ftype)],
            "segment_supports": [[ct.gen_name(s) for s in sorted(word_support(p))] for p in pieces],
            "pre_support": [ct.gen_name(s) for s in sorted(supp_a)],
            "middle_support": [ct.gen_name(s) for s in sorted(supp_b)],
            "post_support": [ct.gen_name(s) for s in sorted(supp_c)],
            "pattern_met": met,
            "collapse_branch": contradiction_branch,
        })
    report["pattern_met"] = met_any
    return report


def _advance(group: CoxeterGroup, w: CoxElem, letters) -> CoxElem:
    for s, _ in letters:
        w = group.right_mul_gen(w, s)
    return w
