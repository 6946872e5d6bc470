"""Free groups, the braid action on F_{n-1}, and the semidirect model of A(D_n).

``A(D_n)`` is isomorphic to ``F_{n-1} x| A(A_{n-1})`` where the braid group acts by
the automorphisms ``rho(alpha_i)`` below.  Free generators are ``beta_1..beta_{n-1}``
and braid generators ``alpha_1..alpha_{n-1}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ConfigError, IndexOutOfRange, NotInParabolic
from .garside import ArtinGroup, GarsideElem, artin_group

MAX_ISO_RANK = 6


def reduce_letters(letters: Iterable[tuple[int, int]]) -> tuple:
    out: list = []
    for i, e in letters:
        if out and out[-1][0] == i and out[-1][1] == -e:
            out.pop()
        else:
            out.append((i, e))
    return tuple(out)


@dataclass(frozen=True, order=True)
class FreeWord:
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", reduce_letters((int(i), 1 if e > 0 else -1) for i, e in self.letters))

    @classmethod
    def gen(cls, i: int, sign: int = 1) -> "FreeWord":
        return cls(((i, sign),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def __invert__(self) -> "FreeWord":
        return self.inverse()

    def __pow__(self, k: int) -> "FreeWord":
        return fw_power(self, k)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def to_json(self) -> list:
        return [list(l) for l in self.letters]

    def __repr__(self):
        if not self.letters:
            return "FreeWord(1)"
        return "FreeWord(" + " ".join(f"b{i}" + ("" if e > 0 else "^-1") for i, e in self.letters) + ")"


EMPTY = FreeWord()


def fw_multiply(x: FreeWord, y: FreeWord) -> FreeWord:
    return x * y


def fw_inverse(x: FreeWord) -> FreeWord:
    return x.inverse()


def fw_power(x: FreeWord, k: int) -> FreeWord:
    if k < 0:
        x, k = x.inverse(), -k
    return FreeWord(x.letters * k)


def substitute(x: FreeWord, images: Sequence[FreeWord]) -> FreeWord:
    """Image of ``x`` under the endomorphism ``beta_i -> images[i-1]``."""
    out: list = []
    for i, e in x.letters:
        out.extend(images[i - 1].letters if e > 0 else images[i - 1].inverse().letters)
    return FreeWord(tuple(out))


@dataclass(frozen=True)
class FreeAut:
    images: tuple
    inverse_images: tuple

    def __post_init__(self):
        n = len(self.images)
        for i in range(1, n + 1):
            b = FreeWord.gen(i)
            if substitute(substitute(b, self.inverse_images), self.images) != b or \
                    substitute(substitute(b, self.images), self.inverse_images) != b:
                raise ValueError("inverse images do not invert the automorphism")

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, x: FreeWord) -> FreeWord:
        return substitute(x, self.images)

    def inverse(self) -> "FreeAut":
        return FreeAut(self.inverse_images, self.images)

    def compose(self, other: "FreeAut") -> "FreeAut":
        """``self o other``."""
        return FreeAut(tuple(self(y) for y in other.images),
                       tuple(other.inverse()(y) for y in self.inverse_images))


def _w(*letters) -> FreeWord:
    return FreeWord(tuple((abs(i), 1 if i > 0 else -1) for i in letters))


@lru_cache(maxsize=None)
def rho_generator(i: int, n: int) -> FreeAut:
    """``rho(alpha_i)`` on ``F_{n-1}``."""
    r = n - 1
    if not 1 <= i <= r:
        raise IndexOutOfRange(f"alpha_{i} is not a generator of A(A_{r})")
    ident = [_w(j) for j in range(1, r + 1)]
    images, inv = list(ident), list(ident)
    if i == 1:
        for j in range(2, r + 1):
            images[j - 1] = _w(-1, j)
            inv[j - 1] = _w(1, j)
    else:
        # b_{i-1} -> b_i, b_i -> b_i b_{i-1}^-1 b_i
        images[i - 2] = _w(i)
        images[i - 1] = _w(i, -(i - 1), i)
        # inverse: b_i -> b_{i-1}, b_{i-1} -> b_{i-1} b_i^-1 b_{i-1}
        inv[i - 1] = _w(i - 1)
        inv[i - 2] = _w(i - 1, -i, i - 1)
    return FreeAut(tuple(images), tuple(inv))


def braid_group(n: int) -> ArtinGroup:
    """The acting group ``A(A_{n-1})``."""
    return artin_group(f"A{n - 1}")


def apply(b: GarsideElem, x: FreeWord, n: int | None = None) -> FreeWord:
    """``rho(b)(x)``; letters of ``b`` act right to left so that rho is a homomorphism."""
    if n is None:
        n = b.ctype.rank + 1
    B = braid_group(n)
    for s, sign in reversed(B.to_letters(b)):
        aut = rho_generator(s, n)
        x = aut(x) if sign > 0 else aut.inverse()(x)
    return x


@dataclass(frozen=True)
class SemidirectElem:
    a: FreeWord
    b: GarsideElem

    @property
    def n(self) -> int:
        return self.b.ctype.rank + 1

    def __mul__(self, other: "SemidirectElem") -> "SemidirectElem":
        return semi_multiply(self, other)

    def inverse(self) -> "SemidirectElem":
        return semi_inverse(self)


def semi_identity(n: int) -> SemidirectElem:
    return SemidirectElem(EMPTY, braid_group(n).identity())


def semi_multiply(x: SemidirectElem, y: SemidirectElem) -> SemidirectElem:
    if x.b.ctype != y.b.ctype:
        raise ConfigError("semidirect elements of different ranks")
    return SemidirectElem(x.a * apply(x.b, y.a), x.b * y.b)


def semi_inverse(x: SemidirectElem) -> SemidirectElem:
    binv = ~x.b
    return SemidirectElem(apply(binv, x.a.inverse()), binv)


def semi_alpha(i: int, n: int, sign: int = 1) -> SemidirectElem:
    return SemidirectElem(EMPTY, braid_group(n).generator(i, sign))


def semi_beta(i: int, n: int, sign: int = 1) -> SemidirectElem:
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"beta_{i} is not a generator of F_{n - 1}")
    return SemidirectElem(FreeWord.gen(i, sign), braid_group(n).identity())


# -- generator dictionaries -------------------------------------------------

def dn_generator_to_semi(i: int, n: int) -> SemidirectElem:
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"d{i} is not a generator of A(D_{n})")
    if i == 1:
        return semi_multiply(semi_beta(1, n), semi_alpha(1, n))
    return semi_alpha(i - 1, n)


def dn_to_semi(word, n: int | None = None) -> SemidirectElem:
    """Image of a signed word (or a GarsideElem of A(D_n)) in the semidirect product."""
    if isinstance(word, GarsideElem):
        n = word.ctype.rank
        letters = word.group.to_letters(word)
    else:
        if n is None:
            raise ConfigError("the rank n is needed for a plain word")
        A = artin_group(f"D{n}")
        letters = [A.parse_letter(l) for l in word]
    out = semi_identity(n)
    for s, sign in letters:
        g = dn_generator_to_semi(s, n)
        out = out * (g if sign > 0 else g.inverse())
    return out


def beta_word(i: int, n: int) -> list[tuple[int, int]]:
    """``d_{i+1} .. d_3 d_1 d_2^-1 d_3^-1 .. d_{i+1}^-1`` (for ``i = 1`` just ``d_1 d_2^-1``)."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"beta_{i} is not a generator of F_{n - 1}")
    prefix = [(j, 1) for j in range(i + 1, 2, -1)]
    return prefix + [(1, 1), (2, -1)] + [(j, -1) for j in range(3, i + 2)]


def alpha_word(i: int, n: int) -> list[tuple[int, int]]:
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"alpha_{i} is not a generator of A(A_{n - 1})")
    return [(i + 1, 1)]


def semi_to_dn(x: SemidirectElem, beta_dict=None, alpha_dict=None) -> GarsideElem:
    n = x.n
    A = artin_group(f"D{n}")
    beta_dict = beta_dict or beta_word
    alpha_dict = alpha_dict or alpha_word
    letters = []
    for i, e in x.a.letters:
        w = beta_dict(i, n)
        letters.extend(w if e > 0 else [(s, -t) for s, t in reversed(w)])
    B = braid_group(n)
    for i, e in B.to_letters(x.b):
        w = alpha_dict(i, n)
        letters.extend(w if e > 0 else [(s, -t) for s, t in reversed(w)])
    return A.from_word(letters)


# -- isomorphism check -------------------------------------------------------

def _braid_relations(ctype) -> list[tuple[list, list]]:
    rels = []
    for s, t in itertools.combinations(ctype.generators, 2):
        m = ctype.m(s, t)
        lhs = [(s if k % 2 == 0 else t, 1) for k in range(m)]
        rhs = [(t if k % 2 == 0 else s, 1) for k in range(m)]
        rels.append((lhs, rhs))
    return rels


def verify_isomorphism(n: int, beta_dict=None, alpha_dict=None) -> dict:
    if not 3 <= n <= MAX_ISO_RANK:
        raise ConfigError(f"n = {n} outside 3..{MAX_ISO_RANK}")
    A = artin_group(f"D{n}")
    B = braid_group(n)
    failures = []

    def semi_word(letters):
        out = semi_identity(n)
        for kind, i, e in letters:
            g = semi_beta(i, n) if kind == "b" else semi_alpha(i, n)
            out = out * (g if e > 0 else g.inverse())
        return out

    # (a) composites on generators
    comp_d = 0
    for i in A.S:
        back = semi_to_dn(dn_generator_to_semi(i, n), beta_dict, alpha_dict)
        comp_d += 1
        if back != A.generator(i):
            failures.append(f"semi_to_dn(dn_to_semi(d{i})) != d{i}")
    comp_s = 0
    for i in range(1, n):
        for kind, g in (("b", semi_beta(i, n)), ("a", semi_alpha(i, n))):
            comp_s += 1
            img = semi_to_dn(g, beta_dict, alpha_dict)
            if dn_to_semi(img) != g:
                failures.append(f"dn_to_semi(semi_to_dn({kind}{i})) != {kind}{i}")
    # (b) relations of A(D_n) hold in the semidirect product
    rel_d = 0
    for lhs, rhs in _braid_relations(A.ctype):
        rel_d += 1
        if dn_to_semi(lhs, n) != dn_to_semi(rhs, n):
            failures.append(f"D-relation {lhs} = {rhs} fails in the semidirect product")
    # (c) relations of the semidirect product hold in A(D_n)
    rel_s = 0
    for lhs, rhs in _braid_relations(B.ctype):
        rel_s += 1
        l = semi_to_dn(semi_word([("a", s, e) for s, e in lhs]), beta_dict, alpha_dict)
        r = semi_to_dn(semi_word([("a", s, e) for s, e in rhs]), beta_dict, alpha_dict)
        if l != r:
            failures.append(f"braid relation {lhs} = {rhs} fails in A(D_{n})")
    for i in range(1, n):
        for j in range(1, n):
            rel_s += 1
            # alpha_i beta_j alpha_i^-1 = rho(alpha_i)(beta_j)
            lhs = semi_to_dn(semi_word([("a", i, 1), ("b", j, 1), ("a", i, -1)]), beta_dict, alpha_dict)
            img = rho_generator(i, n)(FreeWord.gen(j))
            rhs = semi_to_dn(SemidirectElem(img, B.identity()), beta_dict, alpha_dict)
            if lhs != rhs:
                failures.append(f"action relation a{i} b{j} a{i}^-1 fails in A(D_{n})")
    return {
        "n": n,
        "composites_checked": comp_d + comp_s,
        "d_relations_checked": rel_d,
        "semidirect_relations_checked": rel_s,
        "failures": failures,
        "passed": not failures,
    }


# -- the free-group equation behind the alternating hexagons -----------------

def hexagon_to_free_equation(w1: GarsideElem, w2: GarsideElem, w3: GarsideElem,
                             k1: int, k2: int, k3: int):
    """Both sides of ``w1 d1^k1 w2 = d1^-k3 w3^-1 d1^-k2`` split into free and braid parts.

    Returns ``(lhsF, rhsF, lhsB, rhsB)`` with
    ``lhsF = (w1 b1 w1^-1)^k1`` and ``rhsF = b1^-k3 (a1^-k3 w3^-1 b1 w3 a1^k3)^-k2``.
    """
    A = w1.group
    n = A.ctype.rank
    hat1 = frozenset(A.S) - {1}
    ws = []
    for idx, w in enumerate((w1, w2, w3)):
        if not A.parabolic_membership(w, hat1):
            raise NotInParabolic(idx)
        sw = dn_to_semi(w)
        ws.append(sw.b)
    b1, b2, b3 = ws
    B = braid_group(n)
    a1 = B.generator(1)
    beta1 = FreeWord.gen(1)
    lhsF = fw_power(apply(b1, beta1, n), k1)
    conj = apply(B.power(a1, -k3) * ~b3, beta1, n)
    rhsF = fw_power(beta1, -k3) * fw_power(conj, -k2)
    lhsB = b1 * B.power(a1, k1) * b2
    rhsB = B.power(a1, -k3) * ~b3 * B.power(a1, -k2)
    return lhsF, rhsF, lhsB, rhsB


# -- Lyndon-Schutzenberger ----------------------------------------------------

def ls_check(x: FreeWord, y: FreeWord, z: FreeWord, M: int, N: int, P: int) -> bool:
    """Decide ``x^M = y^N z^P``."""
    return fw_power(x, M) == fw_power(y, N) * fw_power(z, P)


def commute(x: FreeWord, y: FreeWord) -> bool:
    return x * y == y * x


def common_root(*words: FreeWord) -> bool:
    """True when all words are powers of one element (pairwise commuting in a free group)."""
    nontrivial = [w for w in words if w]
    return all(commute(u, v) for u, v in itertools.combinations(nontrivial, 2))


def free_words(rank: int, maxlen: int) -> list[FreeWord]:
    out = [EMPTY]
    frontier = [()]
    letters = [(i, e) for i in range(1, rank + 1) for e in (1, -1)]
    for _ in range(maxlen):
        nxt = []
        for w in frontier:
            for l in letters:
                if w and w[-1] == (l[0], -l[1]):
                    continue
                nxt.append(w + (l,))
        out.extend(FreeWord(w) for w in nxt)
        frontier = nxt
    return out


def ls_bruteforce(maxlen: int = 3, expset: Iterable[int] = (2, 3), rank: int = 2) -> dict:
    exps = sorted(set(expset))
    if any(e < 2 for e in exps):
        raise ConfigError("exponents must be at least 2")
    words = free_words(rank, maxlen)
    powers = {(w, e): fw_power(w, e) for w in words for e in exps}
    solutions = violations = 0
    examples = []
    by_lhs: dict = {}
    for x in words:
        for M in exps:
            by_lhs.setdefault(powers[(x, M)], []).append((x, M))
    for y in words:
        for N in exps:
            yN = powers[(y, N)]
            for z in words:
                for P in exps:
                    rhs = yN * powers[(z, P)]
                    for x, M in by_lhs.get(rhs, ()):
                        solutions += 1
                        if not common_root(x, y, z):
                            violations += 1
                            if len(examples) < 10:
                                examples.append({"x": x.to_json(), "y": y.to_json(), "z": z.to_json(),
                                                 "M": M, "N": N, "P": P})
    return {
        "rank": rank,
        "maxlen": maxlen,
        "exponents": exps,
        "words": len(words),
        "equations": len(words) ** 3 * len(exps) ** 3,
        "solutions": solutions,
        "violations": violations,
        "examples": examples,
    }
