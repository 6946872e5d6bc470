"""Left-greedy Garside normal forms for the spherical Artin groups A(A_n), A(D_n).

An element is ``Delta^inf * x_1 * ... * x_m`` where the ``x_i`` are proper simple
elements (Coxeter elements other than ``e`` and ``w0``) and every consecutive pair
is left-weighted: each left descent of ``x_{i+1}`` is a right descent of ``x_i``.
This representation is unique, so structural equality decides the word problem.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .coxeter import CoxElem, CoxeterGroup, CoxeterType, Face, coxeter_group
from .errors import BallTooLarge, NegativeLetter, TypeMismatch, UnknownGenerator
from .oriented import retract_letters

DEFAULT_BALL_CAP = 2_000_000


@dataclass(frozen=True, order=True)
class GarsideElem:
    ctype: CoxeterType
    inf: int = 0
    factors: tuple = ()

    @property
    def group(self) -> "ArtinGroup":
        return artin_group(self.ctype.name)

    def __mul__(self, other: "GarsideElem") -> "GarsideElem":
        return self.group.multiply(self, other)

    def __invert__(self) -> "GarsideElem":
        return self.group.inverse(self)

    def __pow__(self, k: int) -> "GarsideElem":
        return self.group.power(self, k)

    @property
    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    @property
    def is_positive(self) -> bool:
        return self.inf >= 0

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_json(self) -> dict:
        W = self.group.W
        return {"inf": self.inf, "factors": [W.reduced_word(x) for x in self.factors]}

    def __repr__(self):
        return f"GarsideElem({self.ctype.name}, inf={self.inf}, factors={[self.group.W.reduced_word(x) for x in self.factors]})"


class ArtinGroup:
    def __init__(self, ctype: CoxeterType | str):
        if isinstance(ctype, str):
            ctype = CoxeterType.parse(ctype)
        self.ctype = ctype
        self.W: CoxeterGroup = coxeter_group(ctype.name)
        self.S = self.W.S
        self.delta = self.W.w0()
        self.e = self.W.identity
        self._ld: dict = {}
        self._rd: dict = {}
        self._tau: dict = {}
        self._lw: dict = {}
        self._word: dict = {}
        self._supp: dict = {}
        self._balls: dict = {}

    def __repr__(self):
        return f"ArtinGroup({self.ctype.name})"

    # -- simple-element helpers -----------------------------------------

    def left_desc(self, x: CoxElem) -> frozenset:
        d = self._ld.get(x)
        if d is None:
            d = self._ld[x] = self.W.left_descents(x)
        return d

    def right_desc(self, x: CoxElem) -> frozenset:
        d = self._rd.get(x)
        if d is None:
            d = self._rd[x] = self.W.right_descents(x)
        return d

    def tau(self, x: CoxElem) -> CoxElem:
        """Conjugation by Delta, an involutive diagram automorphism on simples."""
        t = self._tau.get(x)
        if t is None:
            t = self._tau[x] = self.W.mul(self.W.mul(self.delta, x), self.delta)
        return t

    def word_of(self, x: CoxElem) -> tuple:
        w = self._word.get(x)
        if w is None:
            w = self._word[x] = tuple(self.W.reduced_word(x))
        return w

    def simple_support(self, x: CoxElem) -> frozenset:
        sp = self._supp.get(x)
        if sp is None:
            sp = self._supp[x] = frozenset(self.word_of(x))
        return sp

    def is_left_weighted(self, x: CoxElem, y: CoxElem) -> bool:
        return self.left_desc(y) <= self.right_desc(x)

    def _left_weight(self, x: CoxElem, y: CoxElem) -> tuple[CoxElem, CoxElem]:
        key = (x, y)
        out = self._lw.get(key)
        if out is not None:
            return out
        W = self.W
        while True:
            extra = self.left_desc(y) - self.right_desc(x)
            if not extra:
                break
            s = min(extra)
            x = W.right_mul_gen(x, s)
            y = W.left_mul_gen(s, y)
        if len(self._lw) > 2_000_000:
            self._lw.clear()
        self._lw[key] = (x, y)
        return x, y

    def _append(self, inf: int, factors: list, x: CoxElem) -> int:
        """Right-multiply the normal form ``(inf, factors)`` in place by the simple ``x``."""
        if x == self.e:
            return inf
        if x == self.delta:
            for i, f in enumerate(factors):
                factors[i] = self.tau(f)
            return inf + 1
        factors.append(x)
        for i in range(len(factors) - 1, 0, -1):
            a, b = self._left_weight(factors[i - 1], factors[i])
            if a == factors[i - 1]:
                break
            factors[i - 1], factors[i] = a, b
        while factors and factors[0] == self.delta:
            factors.pop(0)
            inf += 1
        while factors and factors[-1] == self.e:
            factors.pop()
        return inf

    def _make(self, inf: int, factors) -> GarsideElem:
        return GarsideElem(self.ctype, inf, tuple(factors))

    def _check(self, *gs: GarsideElem):
        for g in gs:
            if not isinstance(g, GarsideElem) or g.ctype != self.ctype:
                raise TypeMismatch(f"expected an element of A({self.ctype.name}), got {g!r}")

    # -- constructors ---------------------------------------------------

    def identity(self) -> GarsideElem:
        return self._make(0, ())

    def delta_power(self, k: int) -> GarsideElem:
        return self._make(k, ())

    def simple(self, x: CoxElem) -> GarsideElem:
        factors: list = []
        inf = self._append(0, factors, x)
        return self._make(inf, factors)

    def generator(self, s, sign: int = 1) -> GarsideElem:
        s = self.ctype.parse_generator(s)
        g = self.simple(self.W.generator(s))
        return g if sign > 0 else self.inverse(g)

    def from_json(self, data: dict) -> GarsideElem:
        """Inverse of :meth:`GarsideElem.to_json`; the factors must form a normal form."""
        factors = [self.W.from_word(w) for w in data["factors"]]
        g = self.delta_power(int(data["inf"]))
        for x in factors:
            g = self.multiply(g, self.simple(x))
        return g

    def parse_letter(self, letter) -> tuple[int, int]:
        """Accepts ``±s`` ints, ``(s, sign)`` pairs, or names like ``d1``, ``d1^-1``, ``D1``."""
        if isinstance(letter, tuple):
            s, sign = letter
            sign = 1 if sign > 0 else -1
            return self.ctype.parse_generator(s), sign
        if isinstance(letter, int):
            if letter == 0:
                raise UnknownGenerator("generator 0")
            return self.ctype.parse_generator(abs(letter)), (1 if letter > 0 else -1)
        text = str(letter).strip()
        sign = 1
        for suffix in ("^-1", "^(-1)", "'", "-"):
            if text.endswith(suffix):
                text, sign = text[: -len(suffix)], -1
                break
        else:
            if text[:1].isupper() and text[:1].isalpha():
                sign = -1
        return self.ctype.parse_generator(text.lower()), sign

    def from_word(self, letters: Iterable) -> GarsideElem:
        """Normal form of a word in ``S`` and ``S^-1``.

        Maximal positive runs are packed into simples by right multiplication and
        maximal negative runs into inverses of simples, which keeps the number of
        normalisation sweeps small.
        """
        W = self.W
        inf, factors = 0, []
        pos = self.e
        neg = self.e  # negative run s_1^-1 ... s_k^-1 = (s_k ... s_1)^-1

        def flush_neg(inf):
            # g * y^-1 = g * (y^-1 w0) * Delta^-1
            inf = self._append(inf, factors, W.mul(W.inverse(neg), self.delta))
            for i, f in enumerate(factors):
                factors[i] = self.tau(f)
            return inf - 1

        for letter in letters:
            s, sign = self.parse_letter(letter)
            if sign > 0:
                if neg != self.e:
                    inf = flush_neg(inf)
                    neg = self.e
                if W.is_right_descent(pos, s):
                    inf = self._append(inf, factors, pos)
                    pos = self.e
                pos = W.right_mul_gen(pos, s)
            else:
                if pos != self.e:
                    inf = self._append(inf, factors, pos)
                    pos = self.e
                if s in self.left_desc(neg):
                    inf = flush_neg(inf)
                    neg = self.e
                neg = W.left_mul_gen(s, neg)
        if pos != self.e:
            inf = self._append(inf, factors, pos)
        if neg != self.e:
            inf = flush_neg(inf)
        return self._make(inf, factors)

    def parse_word(self, text: str) -> GarsideElem:
        tokens = text.replace(",", " ").split()
        return self.from_word(tokens)

    # -- group operations ----------------------------------------------

    def multiply(self, g: GarsideElem, h: GarsideElem) -> GarsideElem:
        self._check(g, h)
        factors = list(g.factors)
        if h.inf % 2:
            factors = [self.tau(f) for f in factors]
        inf = g.inf + h.inf
        for x in h.factors:
            inf = self._append(inf, factors, x)
        return self._make(inf, factors)

    def inverse(self, g: GarsideElem) -> GarsideElem:
        self._check(g)
        W = self.W
        m, k = len(g.factors), g.inf
        seq = []
        for j, x in enumerate(reversed(g.factors)):
            z = W.mul(W.inverse(x), self.delta)
            if (m - j + k) % 2:
                z = self.tau(z)
            seq.append(z)
        factors: list = []
        inf = -m - k
        for z in seq:
            inf = self._append(inf, factors, z)
        return self._make(inf, factors)

    def equals(self, g: GarsideElem, h: GarsideElem) -> bool:
        self._check(g, h)
        return g == h

    def power(self, g: GarsideElem, k: int) -> GarsideElem:
        if k < 0:
            g, k = self.inverse(g), -k
        out = self.identity()
        for _ in range(k):
            out = self.multiply(out, g)
        return out

    def conjugate(self, g: GarsideElem, h: GarsideElem) -> GarsideElem:
        """``h g h^-1``."""
        return self.multiply(self.multiply(h, g), self.inverse(h))

    def commute(self, g: GarsideElem, h: GarsideElem) -> bool:
        return self.multiply(g, h) == self.multiply(h, g)

    def to_letters(self, g: GarsideElem) -> list[tuple[int, int]]:
        """A signed word for ``g``.

        Elements with ``inf >= 0`` give ``Delta^inf`` followed by the factors; others
        are read from the reduced left fraction ``p^-1 q``, which keeps words short.
        """
        out = []
        if g.inf >= 0:
            dword = self.word_of(self.delta)
            for _ in range(g.inf):
                out.extend((s, 1) for s in dword)
            for x in g.factors:
                out.extend((s, 1) for s in self.word_of(x))
            return out
        dpow, den, num = self._fraction_simples(g)
        for y in reversed(den):
            out.extend((s, -1) for s in reversed(self.word_of(y)))
        for _ in range(dpow):
            out.extend((s, -1) for s in reversed(self.word_of(self.delta)))
        for x in num:
            out.extend((s, 1) for s in self.word_of(x))
        return out

    def coxeter_image(self, g: GarsideElem) -> CoxElem:
        return self.W.from_word(s for s, _ in self.to_letters(g))

    # -- Garside and central elements -----------------------------------

    def garside_element(self, T: Iterable[int] | None = None) -> GarsideElem:
        return self.simple(self.W.w0(T))

    def central_power(self, T: Iterable[int] | None = None) -> GarsideElem:
        T = frozenset(self.S if T is None else T)
        d = self.garside_element(T)
        gens = [self.generator(s) for s in sorted(T)]
        if all(self.commute(d, a) for a in gens):
            return d
        return self.multiply(d, d)

    # -- positive elements and lattice operations ------------------------

    def positive_support(self, word: Iterable) -> frozenset:
        out = set()
        for letter in word:
            s, sign = self.parse_letter(letter)
            if sign < 0:
                raise NegativeLetter(f"negative letter {letter!r} in a positive word")
            out.add(s)
        return frozenset(out)

    def element_support(self, g: GarsideElem) -> frozenset:
        """Letters of any positive word for a positive element."""
        if g.inf < 0:
            raise NegativeLetter("element is not positive")
        if g.inf > 0:
            return frozenset(self.S)
        out = set()
        for x in g.factors:
            out |= self.simple_support(x)
        return frozenset(out)

    def _head(self, g: GarsideElem) -> CoxElem:
        if g.inf > 0:
            return self.delta
        return g.factors[0] if g.factors else self.e

    def _meet(self, x: CoxElem, y: CoxElem) -> CoxElem:
        W = self.W
        d = self.e
        while True:
            common = self.left_desc(x) & self.left_desc(y)
            if not common:
                return d
            s = min(common)
            d = W.right_mul_gen(d, s)
            x = W.left_mul_gen(s, x)
            y = W.left_mul_gen(s, y)

    def left_divide(self, d: GarsideElem, g: GarsideElem) -> GarsideElem:
        return self.multiply(self.inverse(d), g)

    def left_gcd(self, p: GarsideElem, q: GarsideElem) -> GarsideElem:
        self._check(p, q)
        if p.inf < 0 or q.inf < 0:
            raise NegativeLetter("left_gcd needs positive elements")
        k = min(p.inf, q.inf)
        out = self.delta_power(k)
        p = self.left_divide(out, p)
        q = self.left_divide(out, q)
        while True:
            d = self._meet(self._head(p), self._head(q))
            if d == self.e:
                return out
            ds = self.simple(d)
            out = self.multiply(out, ds)
            p = self.left_divide(ds, p)
            q = self.left_divide(ds, q)

    def reverse(self, g: GarsideElem) -> GarsideElem:
        """Word-reversal anti-automorphism."""
        return self.from_word(reversed(self.to_letters(g)))

    def left_lcm(self, p: GarsideElem, q: GarsideElem) -> GarsideElem:
        """Least common right multiple of positive ``p`` and ``q``."""
        self._check(p, q)
        if p.inf < 0 or q.inf < 0:
            raise NegativeLetter("left_lcm needs positive elements")
        N = max(p.sup, q.sup)
        dN = self.delta_power(N)
        pc = self.left_divide(p, dN)
        qc = self.left_divide(q, dN)
        r = self.reverse(self.left_gcd(self.reverse(pc), self.reverse(qc)))
        return self.multiply(dN, self.inverse(r))

    def left_divides(self, d: GarsideElem, g: GarsideElem) -> bool:
        return self.left_divide(d, g).inf >= 0

    # -- fractions and parabolic membership ------------------------------

    def _fraction_simples(self, g: GarsideElem):
        """Simples of the reduced left fraction read off the normal form.

        For ``g = Delta^-r x_1 .. x_m`` with ``r > 0`` and ``k = min(r, m)`` the
        denominator is ``d(x_k) * tau(d(x_(k-1))) * ... * Delta^(r-k)`` where
        ``d(x) = x^-1 Delta``, and the numerator is ``x_(k+1) .. x_m``.  The Delta
        power is moved to the front, twisting the other simples.  Returns
        ``(delta_power, denominator_simples, numerator_simples)``.
        """
        r, xs = -g.inf, g.factors
        W = self.W
        k = min(r, len(xs))
        den = []
        for i in range(k, 0, -1):
            y = W.mul(W.inverse(xs[i - 1]), self.delta)
            if (k - i + r - k) % 2:
                y = self.tau(y)
            den.append(y)
        return r - k, den, list(xs[k:])

    def left_fraction(self, g: GarsideElem) -> tuple[GarsideElem, GarsideElem]:
        """Positive ``(p, q)`` with ``g = p^-1 q`` and ``left_gcd(p, q) = 1``."""
        self._check(g)
        if g.inf >= 0:
            return self.identity(), g
        dpow, den, num = self._fraction_simples(g)
        p = self.delta_power(dpow)
        for y in den:
            p = self.multiply(p, self.simple(y))
        return p, self._make(0, num)

    def left_fraction_by_gcd(self, g: GarsideElem) -> tuple[GarsideElem, GarsideElem]:
        """Same fraction, obtained by dividing ``(Delta^r, x_1..x_m)`` by their left gcd."""
        self._check(g)
        if g.inf >= 0:
            return self.identity(), g
        p = self.delta_power(-g.inf)
        q = self._make(0, g.factors)
        d = self.left_gcd(p, q)
        return self.left_divide(d, p), self.left_divide(d, q)

    def parabolic_membership(self, g: GarsideElem, X: Iterable[int]) -> bool:
        X = frozenset(X)
        if g.inf > 0:
            return X >= frozenset(self.S)
        if g.inf == 0:
            return all(self.simple_support(x) <= X for x in g.factors)
        dpow, den, num = self._fraction_simples(g)
        if dpow > 0 and not X >= frozenset(self.S):
            return False
        return all(self.simple_support(x) <= X for x in itertools.chain(den, num))

    def parabolic_retraction(self, g: GarsideElem, X: Iterable[int]) -> GarsideElem:
        """Image of ``g`` under the retraction of the oriented complex onto the face ``(e, X)``.

        The result lies in ``A_X``, equals ``g`` when ``g`` is in ``A_X``, and the map
        is left ``A_X``-equivariant.
        """
        X = frozenset(X)
        F = Face(self.e, X)
        _, letters = retract_letters(self.W, self.e, self.to_letters(g), F)
        return self.from_word(letters)

    def coset_representative(self, g: GarsideElem, X: Iterable[int]) -> GarsideElem:
        """Canonical element of the left coset ``g A_X``."""
        X = frozenset(X)
        if not X:
            return g
        return self.multiply(g, self.parabolic_retraction(self.inverse(g), X))

    def product_membership_witness(self, g: GarsideElem, X: Iterable[int], Y: Iterable[int],
                                   radius: int = 0) -> GarsideElem | None:
        """Return ``a`` in ``A_X`` with ``a^-1 g`` in ``A_Y``, or None.

        The retraction candidate is tried first; it succeeds whenever ``g`` lies in
        ``A_X A_Y``.  A bounded search over the ``A_X`` ball of the given radius is the
        fallback.
        """
        X, Y = frozenset(X), frozenset(Y)
        if self.parabolic_membership(g, Y):
            return self.identity()
        if self.parabolic_membership(g, X):
            return g
        a = self.parabolic_retraction(g, X)
        if self.parabolic_membership(self.left_divide(a, g), Y):
            return a
        if radius > 0:
            for a in self.enumerate_ball(radius, X):
                if self.parabolic_membership(self.left_divide(a, g), Y):
                    return a
        return None

    # -- enumeration ----------------------------------------------------

    def proper_simples(self, T: Iterable[int] | None = None) -> list[CoxElem]:
        T = frozenset(self.S if T is None else T)
        top = self.W.w0(T)
        return sorted(x for x in self.W.parabolic_elements(T) if x != self.e and x != top)

    def _successors(self, simples: list[CoxElem]) -> dict:
        return {x: [y for y in simples if self.left_desc(y) <= self.right_desc(x)] for x in simples}

    def ball_size(self, radius: int, T: Iterable[int] | None = None) -> int:
        simples = self.proper_simples(T)
        succ = self._successors(simples)
        counts = {x: 1 for x in simples}
        total = 1
        for m in range(1, radius + 1):
            total += sum(counts.values())
            if m < radius:
                nxt = dict.fromkeys(simples, 0)
                for x, c in counts.items():
                    for y in succ[x]:
                        nxt[y] += c
                counts = nxt
        return total * (2 * radius + 1)

    def enumerate_ball(self, radius: int, T: Iterable[int] | None = None,
                       cap: int = DEFAULT_BALL_CAP, infs: Iterable[int] | None = None) -> Iterator[GarsideElem]:
        """All ``Delta_T^k x_1..x_m`` with ``|k| <= radius`` and ``m <= radius``, in the order
        ``(k, m, factors)``.  Elements of a proper parabolic are returned in the ambient group."""
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        T = frozenset(self.S if T is None else T)
        size = self.ball_size(radius, T)
        if size > cap:
            raise BallTooLarge(f"ball of radius {radius} has {size} elements (cap {cap})")
        simples = self.proper_simples(T)
        succ = self._successors(simples)
        full = T == frozenset(self.S)
        dT = self.garside_element(T)

        def sequences(m):
            if m == 0:
                yield ()
                return
            stack = [(x,) for x in reversed(simples)]
            while stack:
                seq = stack.pop()
                if len(seq) == m:
                    yield seq
                    continue
                for y in reversed(succ[seq[-1]]):
                    stack.append(seq + (y,))

        for k in (range(-radius, radius + 1) if infs is None else sorted(infs)):
            head = self.power(dT, k) if not full else None
            for m in range(radius + 1):
                for seq in sequences(m):
                    if full:
                        yield self._make(k, seq)
                    else:
                        g = head
                        for x in seq:
                            g = self.multiply(g, self.simple(x))
                        yield g

    def ball(self, radius: int, T: Iterable[int] | None = None) -> list[GarsideElem]:
        """Cached list form of :meth:`enumerate_ball`."""
        key = (radius, frozenset(self.S if T is None else T))
        out = self._balls.get(key)
        if out is None:
            out = self._balls[key] = list(self.enumerate_ball(radius, key[1]))
        return out

    # -- random words ---------------------------------------------------

    def random_word(self, length: int, rng: random.Random, gens: Sequence[int] | None = None,
                    positive: bool = False) -> list[tuple[int, int]]:
        gens = list(self.S if gens is None else gens)
        return [(rng.choice(gens), 1 if positive else rng.choice((1, -1))) for _ in range(length)]

    def relator_insertions(self, word: Sequence[tuple[int, int]], rng: random.Random, moves: int = 3):
        """An equal word obtained by inserting free cancellations, braid relators and
        commutation relators at random positions."""
        word = list(word)
        for _ in range(moves):
            pos = rng.randint(0, len(word))
            s, t = rng.sample(list(self.S), 2) if len(self.S) > 1 else (self.S[0], self.S[0])
            kind = rng.randrange(3) if len(self.S) > 1 else 0
            if kind == 0:
                e = rng.choice((1, -1))
                piece = [(s, e), (s, -e)]
            else:
                m = self.ctype.m(s, t)
                left = [(s if i % 2 == 0 else t, 1) for i in range(m)]
                right = [(t if i % 2 == 0 else s, 1) for i in range(m)]
                piece = left + [(x, -1) for x, _ in reversed(right)]
                if rng.random() < 0.5:
                    piece = [(x, -e) for x, e in reversed(piece)]
            word[pos:pos] = piece
        return word


@lru_cache(maxsize=None)
def artin_group(name: str) -> ArtinGroup:
    return ArtinGroup(CoxeterType.parse(name))
