"""Finite, possibly non-unital rings given by structure constants.

A ring lives on an additive group ⊕_i Z/d_i; elements are coordinate tuples
in canonical reduced form and multiplication is the bilinear extension of a
k×k table of generator products.  Ideals and subrings are additive subgroups
canonicalized by the Hermite form of their preimage lattice, so equality
tests never enumerate elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm, prod
from typing import Callable, Iterable, Iterator

from .lattices import (
    hermite_form,
    in_hermite_span,
    invert_matrix,
    smith_form,
    vec_mat,
)

Element = tuple[int, ...]

# lazy multiplication cache is only kept for rings up to this order
MUL_CACHE_MAX_ORDER = 4096
# element lists are materialized up to this order, streamed above it
ELEMENT_LIST_MAX_ORDER = 65536

LEFT = "left"
RIGHT = "right"
TWOSIDED = "twosided"
SIDES = (LEFT, RIGHT, TWOSIDED)


class RingError(Exception):
    """Base class for structural errors in ring construction."""


class IllDefined(RingError):
    def __init__(self, i: int, j: int):
        super().__init__(
            f"generator product ({i},{j}) is not annihilated by the "
            f"additive orders of its factors"
        )
        self.pair = (i, j)


class NonAssociative(RingError):
    def __init__(self, i: int, j: int, l: int):
        super().__init__(f"associativity fails on generator triple ({i},{j},{l})")
        self.triple = (i, j, l)


class NotUnital(RingError):
    pass


class WrongSide(RingError):
    pass


@dataclass(frozen=True)
class AdditiveGroup:
    """The additive carrier ⊕_i Z/d_i; every d_i >= 2."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        for d in self.cyclic_orders:
            if d < 2:
                raise ValueError(f"cyclic order {d} < 2")

    @cached_property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    @cached_property
    def zero(self) -> Element:
        return (0,) * len(self.cyclic_orders)

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    def reduce(self, v: Iterable[int]) -> Element:
        return tuple(c % d for c, d in zip(v, self.cyclic_orders))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.cyclic_orders))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % d for a, d in zip(x, self.cyclic_orders))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple((a - b) % d for a, b, d in zip(x, y, self.cyclic_orders))

    def smul(self, n: int, x: Element) -> Element:
        return tuple((n * a) % d for a, d in zip(x, self.cyclic_orders))

    def element_order(self, x: Element) -> int:
        return lcm(*(d // gcd(d, a) for a, d in zip(x, self.cyclic_orders))) if x else 1

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic coordinate order."""
        return itertools.product(*(range(d) for d in self.cyclic_orders))

    def generator(self, i: int) -> Element:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def lattice_rows(self) -> list[list[int]]:
        k = self.rank
        return [[self.cyclic_orders[i] if j == i else 0 for j in range(k)]
                for i in range(k)]


class Subgroup:
    """Additive subgroup of an AdditiveGroup, canonical under Hermite form.

    `key` is the full-rank Hermite form of the preimage lattice (generators
    plus the order relations); two subgroups are equal iff keys are equal.
    `basis` is the human-facing generating set: nonzero key rows reduced.
    """

    __slots__ = ("group", "key", "basis", "size", "_elements", "_sorted")

    def __init__(self, group: AdditiveGroup, key: tuple[tuple[int, ...], ...]):
        self.group = group
        self.key = key
        self.basis = tuple(
            r for r in (group.reduce(row) for row in key) if any(r)
        )
        det = prod(key[i][i] for i in range(len(key))) if key else 1
        self.size = group.order // det
        self._elements = None
        self._sorted = None

    @classmethod
    def from_generators(cls, group: AdditiveGroup, gens: Iterable[Element]) -> "Subgroup":
        rows = [list(group.reduce(g)) for g in gens]
        rows.extend(group.lattice_rows())
        return cls(group, hermite_form(rows, group.rank))

    @classmethod
    def zero(cls, group: AdditiveGroup) -> "Subgroup":
        return cls.from_generators(group, ())

    def contains(self, x: Element) -> bool:
        return in_hermite_span(self.key, x)

    def elements(self) -> frozenset:
        if self._elements is None:
            add = self.group.add
            seen = {self.group.zero}
            frontier = [self.group.zero]
            while frontier:
                v = frontier.pop()
                for b in self.basis:
                    w = add(v, b)
                    if w not in seen:
                        seen.add(w)
                        frontier.append(w)
            assert len(seen) == self.size
            self._elements = frozenset(seen)
        return self._elements

    def sorted_elements(self) -> tuple[Element, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements()))
        return self._sorted

    def join(self, other: "Subgroup") -> "Subgroup":
        return Subgroup.from_generators(self.group, self.basis + other.basis)

    def intersect(self, other: "Subgroup") -> "Subgroup":
        small, big = (self, other) if self.size <= other.size else (other, self)
        gens = [x for x in small.elements() if big.contains(x)]
        return Subgroup.from_generators(self.group, gens)

    def is_zero(self) -> bool:
        return self.size == 1

    def is_all(self) -> bool:
        return self.size == self.group.order

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup)
                and self.group.cyclic_orders == other.group.cyclic_orders
                and self.key == other.key)

    def __hash__(self):
        return hash((self.group.cyclic_orders, self.key))

    def __lt__(self, other: "Subgroup") -> bool:
        return self.key < other.key

    def __repr__(self):
        return f"Subgroup(size={self.size}, basis={list(self.basis)})"


class FiniteRing:
    """A finite ring: additive group plus generator structure constants.

    Instances are immutable after validation; the multiplication cache is
    populated lazily and is safe to precompute before sharing across workers.
    """

    def __init__(self, additive: AdditiveGroup, mul_table, unit: Element | None,
                 name: str | None = None):
        self.additive = additive
        self.cyclic_orders = additive.cyclic_orders
        self.mul_table = tuple(tuple(additive.reduce(c) for c in row)
                               for row in mul_table)
        self.unit = unit
        self.name = name or "R" + "x".join(map(str, additive.cyclic_orders))
        self.order = additive.order
        self.exponent = additive.exponent
        self.rank = additive.rank
        self.zero = additive.zero
        self._mul_cache: dict | None = {} if self.order <= MUL_CACHE_MAX_ORDER else None
        self._element_list: tuple[Element, ...] | None = None
        self._principal: dict = {}
        self._extra: dict = {}

    # -- additive structure ------------------------------------------------
    def add(self, x: Element, y: Element) -> Element:
        return self.additive.add(x, y)

    def neg(self, x: Element) -> Element:
        return self.additive.neg(x)

    def sub(self, x: Element, y: Element) -> Element:
        return self.additive.sub(x, y)

    def smul(self, n: int, x: Element) -> Element:
        return self.additive.smul(n, x)

    # -- multiplication ----------------------------------------------------
    def mul(self, x: Element, y: Element) -> Element:
        cache = self._mul_cache
        if cache is not None:
            v = cache.get((x, y))
            if v is not None:
                return v
        orders = self.cyclic_orders
        acc = [0] * self.rank
        table = self.mul_table
        for i, xi in enumerate(x):
            if xi:
                row = table[i]
                for j, yj in enumerate(y):
                    if yj:
                        c = row[j]
                        f = xi * yj
                        for t in range(self.rank):
                            acc[t] += f * c[t]
        out = tuple(a % d for a, d in zip(acc, orders))
        if cache is not None:
            cache[(x, y)] = out
        return out

    def power_of_subgroup(self, sub: Subgroup, other: Subgroup) -> Subgroup:
        """Additive span of pairwise products of two subgroups."""
        prods = [self.mul(a, b) for a in sub.basis for b in other.basis]
        return Subgroup.from_generators(self.additive, prods)

    # -- enumeration ---------------------------------------------------------
    def elements(self) -> Iterator[Element]:
        if self._element_list is not None:
            return iter(self._element_list)
        return self.additive.elements()

    def element_list(self) -> tuple[Element, ...]:
        if self._element_list is None:
            if self.order > ELEMENT_LIST_MAX_ORDER:
                raise RingError(f"ring too large to materialize ({self.order})")
            self._element_list = tuple(self.additive.elements())
        return self._element_list

    def generator(self, i: int) -> Element:
        return self.additive.generator(i)

    def generators(self) -> list[Element]:
        return [self.additive.generator(i) for i in range(self.rank)]

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def is_identity(self, u: Element) -> bool:
        return all(self.mul(u, g) == g and self.mul(g, u) == g
                   for g in self.generators()) if self.rank else True

    def table_key(self):
        return (self.cyclic_orders, self.mul_table, self.unit)

    def __repr__(self):
        return f"FiniteRing({self.name}, order={self.order})"

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_mul_cache"] = {} if self._mul_cache is not None else None
        state["_element_list"] = None
        state["_principal"] = {}
        state["_extra"] = {}
        return state


def validate_ring(cyclic_orders, table, unit_hint: Element | None = None,
                  name: str | None = None) -> FiniteRing:
    """Validate raw structure constants and return the ring.

    Checks bilinear well-definedness and associativity on generator triples
    (which suffices by biadditivity), then detects a two-sided identity.
    """
    group = AdditiveGroup(tuple(int(d) for d in cyclic_orders))
    k = group.rank
    if len(table) != k or any(len(row) != k for row in table):
        raise RingError(f"table must be {k}x{k}")
    reduced = [[group.reduce(c) for c in row] for row in table]
    for c_row in reduced:
        for c in c_row:
            if len(c) != k:
                raise RingError("structure constant of wrong length")
    for i in range(k):
        for j in range(k):
            c = reduced[i][j]
            di, dj = group.cyclic_orders[i], group.cyclic_orders[j]
            if any(group.smul(di, c)) or any(group.smul(dj, c)):
                raise IllDefined(i, j)
    ring = FiniteRing(group, reduced, None, name=name)
    gens = ring.generators()
    for i in range(k):
        for j in range(k):
            cij = reduced[i][j]
            for l in range(k):
                left = ring.mul(cij, gens[l])
                right = ring.mul(gens[i], reduced[j][l])
                if left != right:
                    raise NonAssociative(i, j, l)
    unit = None
    if unit_hint is not None:
        u = group.reduce(unit_hint)
        if not ring.is_identity(u):
            raise NotUnital(f"claimed identity {u} is not one")
        unit = u
    elif ring.order <= ELEMENT_LIST_MAX_ORDER:
        for u in ring.elements():
            if ring.is_identity(u):
                unit = u
                break
    if k == 0:
        unit = ()
    ring.unit = unit
    return ring


# -- constructors -----------------------------------------------------------

def cyclic_ring(d: int, c: int = 1, name: str | None = None) -> FiniteRing:
    """Z/d with generator product e*e = c*e (c=1 gives the unital ring Z/d)."""
    return validate_ring((d,), [[(c % d,)]], name=name or f"z{d}" + (f"_c{c}" if c != 1 else ""))


def zero_mult_ring(group: AdditiveGroup | tuple[int, ...], name: str | None = None) -> FiniteRing:
    """Ring with all products zero on the given additive group."""
    if not isinstance(group, AdditiveGroup):
        group = AdditiveGroup(tuple(group))
    zero = group.zero
    table = [[zero for _ in range(group.rank)] for _ in range(group.rank)]
    return validate_ring(group.cyclic_orders, table,
                         name=name or "zm" + "x".join(map(str, group.cyclic_orders)))


def unitalize(ring: FiniteRing) -> FiniteRing:
    """Adjoin an identity: Z/e ⊕ R with e the additive exponent of R.

    Multiplication is (m,x)(n,y) = (mn, my+nx+xy); the original ring embeds
    as the two-sided ideal of elements with first coordinate zero.
    """
    e = ring.exponent
    if e == 1:
        return validate_ring((), [], name=f"{ring.name}_unital")
    k = ring.rank
    orders = (e,) + ring.cyclic_orders
    zero = (0,) * (k + 1)

    def emb(x: Element) -> Element:
        return (0,) + x

    table = [[zero for _ in range(k + 1)] for _ in range(k + 1)]
    table[0][0] = (1,) + ring.zero
    for i in range(k):
        gi = emb(ring.generator(i))
        table[0][i + 1] = gi
        table[i + 1][0] = gi
        for j in range(k):
            table[i + 1][j + 1] = emb(ring.mul_table[i][j])
    unit = (1,) + ring.zero
    return validate_ring(orders, table, unit_hint=unit, name=f"{ring.name}_unital")


def embed_in_unitalization(x: Element) -> Element:
    return (0,) + x


def direct_product(rings: list[FiniteRing], name: str | None = None) -> FiniteRing:
    """Componentwise product ring."""
    if not rings:
        raise RingError("empty product")
    orders: tuple[int, ...] = ()
    offsets = []
    for r in rings:
        offsets.append(len(orders))
        orders += r.cyclic_orders
    k = len(orders)
    zero = (0,) * k

    def scatter(vec: Element, off: int) -> Element:
        out = [0] * k
        out[off:off + len(vec)] = vec
        return tuple(out)

    table = [[zero for _ in range(k)] for _ in range(k)]
    for r, off in zip(rings, offsets):
        for i in range(r.rank):
            for j in range(r.rank):
                table[off + i][off + j] = scatter(r.mul_table[i][j], off)
    unit = None
    if all(r.is_unital for r in rings):
        out = [0] * k
        for r, off in zip(rings, offsets):
            out[off:off + r.rank] = r.unit
        unit = tuple(out)
    return validate_ring(orders, table, unit_hint=unit,
                         name=name or "x".join(r.name for r in rings))


def matrix_ring(ring: FiniteRing, n: int, name: str | None = None) -> FiniteRing:
    """n×n matrices over a unital ring, on the matrix-unit generator basis."""
    if not ring.is_unital:
        raise NotUnital("matrix ring needs a unital coefficient ring")
    if n < 1:
        raise RingError("matrix size must be >= 1")
    k = ring.rank
    dim = n * n * k
    orders = tuple(ring.cyclic_orders[t] for _ in range(n * n) for t in range(k))
    zero = (0,) * dim

    def pos(i: int, j: int, t: int) -> int:
        return (i * n + j) * k + t

    def scatter(vec: Element, i: int, j: int) -> Element:
        out = [0] * dim
        for t, c in enumerate(vec):
            out[pos(i, j, t)] = c
        return tuple(out)

    table = [[zero for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for s in range(k):
                for jj in range(n):
                    for l in range(n):
                        for t in range(k):
                            if j == jj:
                                table[pos(i, j, s)][pos(jj, l, t)] = scatter(
                                    ring.mul_table[s][t], i, l)
    unit = [0] * dim
    for i in range(n):
        for t, c in enumerate(ring.unit):
            unit[pos(i, i, t)] = c
    return validate_ring(orders, table, unit_hint=tuple(unit),
                         name=name or f"m{n}({ring.name})")


def group_ring(ring: FiniteRing, cayley, name: str | None = None) -> FiniteRing:
    """Group ring R[H] for unital R and H given by a Cayley table of indices."""
    if not ring.is_unital:
        raise NotUnital("group ring needs a unital coefficient ring")
    n = len(cayley)
    if any(len(row) != n for row in cayley):
        raise RingError("Cayley table must be square")
    ident = None
    for e in range(n):
        if all(cayley[e][x] == x and cayley[x][e] == x for x in range(n)):
            ident = e
            break
    if ident is None:
        raise RingError("Cayley table has no identity")
    for a in range(n):
        if ident not in cayley[a]:
            raise RingError(f"element {a} has no inverse")
        for b in range(n):
            for c in range(n):
                if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]:
                    raise RingError("Cayley table is not associative")
    k = ring.rank
    dim = n * k
    orders = tuple(ring.cyclic_orders[t] for _ in range(n) for t in range(k))
    zero = (0,) * dim

    def scatter(vec: Element, h: int) -> Element:
        out = [0] * dim
        for t, c in enumerate(vec):
            out[h * k + t] = c
        return tuple(out)

    table = [[zero for _ in range(dim)] for _ in range(dim)]
    for h1 in range(n):
        for s in range(k):
            for h2 in range(n):
                for t in range(k):
                    table[h1 * k + s][h2 * k + t] = scatter(
                        ring.mul_table[s][t], cayley[h1][h2])
    unit = scatter(ring.unit, ident)
    return validate_ring(orders, table, unit_hint=unit,
                         name=name or f"{ring.name}[H{n}]")


# -- ideals and subrings ------------------------------------------------------

class Ideal:
    """A sided ideal, stored as an additive subgroup of the parent ring."""

    __slots__ = ("ring", "side", "sub")

    def __init__(self, ring: FiniteRing, side: str, sub: Subgroup):
        if side not in SIDES:
            raise WrongSide(f"unknown side {side!r}")
        self.ring = ring
        self.side = side
        self.sub = sub

    @property
    def basis(self):
        return self.sub.basis

    @property
    def size(self) -> int:
        return self.sub.size

    @property
    def key(self):
        return self.sub.key

    def elements(self):
        return self.sub.elements()

    def contains(self, x: Element) -> bool:
        return self.sub.contains(x)

    def is_zero(self) -> bool:
        return self.sub.is_zero()

    def verify_closure(self) -> bool:
        ring = self.ring
        for b in self.basis:
            for g in ring.generators():
                if self.side in (LEFT, TWOSIDED) and not self.contains(ring.mul(g, b)):
                    return False
                if self.side in (RIGHT, TWOSIDED) and not self.contains(ring.mul(b, g)):
                    return False
        return True

    @classmethod
    def from_basis(cls, ring: FiniteRing, side: str, gens, verify: bool = True) -> "Ideal":
        ideal = cls(ring, side, Subgroup.from_generators(ring.additive, gens))
        if verify and not ideal.verify_closure():
            raise RingError("generators do not span a sided ideal")
        return ideal

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ring is other.ring
                and self.side == other.side and self.sub == other.sub)

    def __hash__(self):
        return hash((id(self.ring), self.side, self.sub.key))

    def __repr__(self):
        return f"Ideal({self.side}, size={self.size}, basis={list(self.basis)})"


def generated_ideal(ring: FiniteRing, gens: Iterable[Element], side: str) -> Ideal:
    """Smallest sided ideal containing `gens`.

    Closure runs with the unitalization convention, so the generators are
    always contained in the result.
    """
    if side not in SIDES:
        raise WrongSide(f"unknown side {side!r}")
    sub = Subgroup.from_generators(ring.additive, gens)
    ring_gens = ring.generators()
    while True:
        new = []
        for b in sub.basis:
            for g in ring_gens:
                if side in (LEFT, TWOSIDED):
                    p = ring.mul(g, b)
                    if not sub.contains(p):
                        new.append(p)
                if side in (RIGHT, TWOSIDED):
                    p = ring.mul(b, g)
                    if not sub.contains(p):
                        new.append(p)
        if not new:
            break
        sub = Subgroup.from_generators(ring.additive, sub.basis + tuple(new))
    return Ideal(ring, side, sub)


@dataclass
class RingImage:
    """An abstract copy of a subquotient with coordinate maps both ways."""

    ring: FiniteRing
    to_image: Callable[[Element], Element]
    from_image: Callable[[Element], Element]


class SubringView:
    """A multiplicatively closed additive subgroup of a parent ring."""

    __slots__ = ("ring", "sub", "_image")

    def __init__(self, ring: FiniteRing, sub: Subgroup, verify: bool = True):
        self.ring = ring
        self.sub = sub
        self._image = None
        if verify:
            for a in sub.basis:
                for b in sub.basis:
                    if not sub.contains(ring.mul(a, b)):
                        raise RingError("subgroup is not multiplicatively closed")

    @classmethod
    def from_elements(cls, ring: FiniteRing, elems, verify: bool = True) -> "SubringView":
        return cls(ring, Subgroup.from_generators(ring.additive, elems), verify=verify)

    @property
    def basis(self):
        return self.sub.basis

    @property
    def size(self) -> int:
        return self.sub.size

    def elements(self):
        return self.sub.elements()

    def contains(self, x: Element) -> bool:
        return self.sub.contains(x)

    def image(self, name: str | None = None) -> RingImage:
        """Realize the subring as a FiniteRing of its own, with maps."""
        if self._image is None:
            self._image = _subgroup_ring_image(
                self.ring, self.sub, name or f"{self.ring.name}^sub")
        return self._image

    def __repr__(self):
        return f"SubringView(size={self.size}, basis={list(self.basis)})"


def _subgroup_ring_image(parent: FiniteRing, sub: Subgroup, name: str) -> RingImage:
    group = parent.additive
    k = group.rank
    b_rows = [list(r) for r in sub.key]
    b_inv = invert_matrix(b_rows)
    d_rows = group.lattice_rows()
    m_rows = []
    for i in range(k):
        row = vec_mat(d_rows[i], b_inv)
        if any(f.denominator != 1 for f in row):
            raise RingError("order lattice does not lie in the subgroup lattice")
        m_rows.append([int(f) for f in row])
    diag, v, vinv = smith_form(m_rows, k)
    kept = [j for j in range(k) if diag[j] > 1]
    orders = tuple(diag[j] for j in kept)

    def to_image(x: Element) -> Element:
        c = vec_mat(x, b_inv)
        if any(f.denominator != 1 for f in c):
            raise RingError(f"{x} is not in the subring")
        y = vec_mat([int(f) for f in c], v)
        return tuple(y[j] % diag[j] for j in kept)

    def from_image(y: Element) -> Element:
        full = [0] * k
        for t, j in enumerate(kept):
            full[j] = y[t]
        c = vec_mat(full, vinv)
        return group.reduce(vec_mat(c, b_rows))

    gens = [from_image(tuple(1 if t == a else 0 for t in range(len(kept))))
            for a in range(len(kept))]
    table = [[to_image(parent.mul(ga, gb)) for gb in gens] for ga in gens]
    ring = validate_ring(orders, table, name=name)
    assert ring.order == sub.size
    if sub.size <= 4096:
        for x in sub.elements():
            if from_image(to_image(x)) != x:
                raise RingError("subring coordinate maps do not round-trip")
    return RingImage(ring, to_image, from_image)


@dataclass
class Quotient:
    """Quotient ring together with the projection and a canonical section."""

    ring: FiniteRing
    project: Callable[[Element], Element]
    lift: Callable[[Element], Element]


def quotient_by_ideal(parent: FiniteRing, ideal: Ideal, name: str | None = None) -> Quotient:
    """Quotient by a two-sided ideal; the projection is a verified ring map."""
    if ideal.side != TWOSIDED:
        raise WrongSide("can only quotient by a two-sided ideal")
    group = parent.additive
    k = group.rank
    diag, v, vinv = smith_form([list(r) for r in ideal.sub.key], k)
    kept = [j for j in range(k) if diag[j] > 1]
    orders = tuple(diag[j] for j in kept)

    def project(x: Element) -> Element:
        y = vec_mat(x, v)
        return tuple(y[j] % diag[j] for j in kept)

    def lift(y: Element) -> Element:
        full = [0] * k
        for t, j in enumerate(kept):
            full[j] = y[t]
        return group.reduce(vec_mat(full, vinv))

    gens = [lift(tuple(1 if t == a else 0 for t in range(len(kept))))
            for a in range(len(kept))]
    table = [[project(parent.mul(ga, gb)) for gb in gens] for ga in gens]
    unit = project(parent.unit) if parent.is_unital else None
    ring = validate_ring(orders, table, unit_hint=unit,
                         name=name or f"{parent.name}/I")
    assert ring.order * ideal.size == parent.order
    if parent.order <= 4096:
        sample = parent.element_list() if parent.order <= 256 else list(
            itertools.islice(parent.elements(), 64))
        for x in sample:
            for y in sample[:16]:
                if project(parent.mul(x, y)) != ring.mul(project(x), project(y)):
                    raise RingError("projection is not multiplicative")
                if project(parent.add(x, y)) != ring.add(project(x), project(y)):
                    raise RingError("projection is not additive")
    return Quotient(ring, project, lift)
