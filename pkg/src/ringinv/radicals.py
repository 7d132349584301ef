"""Radical and structure theory of finite rings.

The prime radical (largest nilpotent ideal) and the Jacobson radical
(quasi-regularity) are computed by genuinely independent algorithms; their
agreement on finite rings is asserted whenever a profile is built, never
assumed.  Uniform dimension, regular elements, annihilators, and composition
lengths of finite modules round out the structure data the checkers need.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .caps import Caps, DEFAULT_CAPS
from .ring_core import (
    LEFT,
    RIGHT,
    TWOSIDED,
    AdditiveGroup,
    Element,
    FiniteRing,
    Ideal,
    RingError,
    Subgroup,
    generated_ideal,
)
from .lattices import smith_form, vec_mat


class SizeCap(RingError):
    pass


class CrossCheckError(RingError):
    pass


# -- nilpotency ------------------------------------------------------------------

def nilpotency_index(ring: FiniteRing, sub: Subgroup | None = None) -> int | None:
    """Least k with the k-fold product span zero; None when it stabilizes
    at a nonzero value (descending chains of ideal powers must stabilize)."""
    if sub is None:
        sub = Subgroup.from_generators(ring.additive, ring.generators())
    if sub.is_zero():
        return 1
    current = sub
    k = 1
    while True:
        nxt = ring.power_of_subgroup(sub, current)
        k += 1
        if nxt.is_zero():
            return k
        if nxt == current:
            return None
        current = nxt


# -- principal ideals, cached on the ring -----------------------------------------

def principal_ideal(ring: FiniteRing, x: Element, side: str) -> Ideal:
    cache = ring._principal.setdefault(side, {})
    out = cache.get(x)
    if out is None:
        out = generated_ideal(ring, [x], side)
        cache[x] = out
    return out


# -- the two radicals --------------------------------------------------------------

def prime_radical(ring: FiniteRing) -> Ideal:
    """Largest nilpotent ideal: elements whose principal two-sided ideal is
    nilpotent.  The result is verified to be a nilpotent two-sided ideal."""
    cached = ring._extra.get("prime_radical")
    if cached is not None:
        return cached
    members = []
    for x in ring.elements():
        ideal = principal_ideal(ring, x, TWOSIDED)
        if nilpotency_index(ring, ideal.sub) is not None:
            members.append(x)
    out = Ideal.from_basis(ring, TWOSIDED, members, verify=True)
    assert nilpotency_index(ring, out.sub) is not None
    ring._extra["prime_radical"] = out
    return out


def is_quasi_regular(ring: FiniteRing, y: Element) -> bool:
    """Left quasi-regularity: some z satisfies z + y + z*y = 0."""
    cache = ring._extra.setdefault("qr", {})
    got = cache.get(y)
    if got is None:
        got = any(
            ring.add(ring.add(z, y), ring.mul(z, y)) == ring.zero
            for z in ring.elements()
        )
        cache[y] = got
    return got


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """Quasi-regularity radical: x belongs iff every member of the left ideal
    generated by x (unitalization convention) is left quasi-regular."""
    cached = ring._extra.get("jacobson_radical")
    if cached is not None:
        return cached
    members = []
    for x in ring.elements():
        ideal = principal_ideal(ring, x, LEFT)
        if all(is_quasi_regular(ring, y) for y in ideal.elements()):
            members.append(x)
    out = Ideal.from_basis(ring, TWOSIDED, members, verify=True)
    ring._extra["jacobson_radical"] = out
    return out


@dataclass
class RadicalProfile:
    prime_radical: Ideal
    jacobson_radical: Ideal
    nilpotency_index_of_rad: int
    semiprime: bool
    semisimple_artinian: bool


def radical_profile(ring: FiniteRing) -> RadicalProfile:
    """Compute both radicals independently and insist that they agree."""
    nil = prime_radical(ring)
    rad = jacobson_radical(ring)
    if nil.sub != rad.sub:
        raise CrossCheckError(
            f"prime and Jacobson radicals disagree on {ring.name}: "
            f"{sorted(nil.elements())} vs {sorted(rad.elements())}")
    idx = nilpotency_index(ring, rad.sub)
    assert idx is not None
    return RadicalProfile(
        prime_radical=nil,
        jacobson_radical=rad,
        nilpotency_index_of_rad=idx,
        semiprime=nil.is_zero(),
        semisimple_artinian=rad.is_zero(),
    )


def is_semiprime(ring: FiniteRing) -> bool:
    return prime_radical(ring).is_zero()


def is_semisimple_artinian(ring: FiniteRing) -> bool:
    return jacobson_radical(ring).is_zero()


# -- ideal lattices -----------------------------------------------------------------

def enumerate_ideals(ring: FiniteRing, side: str, caps: Caps = DEFAULT_CAPS):
    """All sided ideals (join closure of the principal ones), or a flagged
    sample when the ring or the lattice outgrows the caps."""
    key = ("ideals", side, caps.exhaustive_ideal_order, caps.ideal_count,
           caps.sample_count)
    cached = ring._extra.get(key)
    if cached is not None:
        return cached
    if ring.order > caps.exhaustive_ideal_order:
        rng = random.Random(ring.order * 17 + len(side))
        elems = list(itertools.islice(ring.elements(), 4096))
        base = [principal_ideal(ring, rng.choice(elems), side)
                for _ in range(caps.sample_count)]
        base.append(generated_ideal(ring, [], side))
        out = (sorted({i.key: i for i in base}.values(), key=lambda i: i.key),
               False)
        ring._extra[key] = out
        return out
    base = {}
    for x in ring.elements():
        ideal = principal_ideal(ring, x, side)
        base.setdefault(ideal.key, ideal)
    found = dict(base)
    frontier = list(base.values())
    exhaustive = True
    while frontier:
        cur = frontier.pop()
        for b in base.values():
            joined = cur.sub.join(b.sub)
            if joined.key not in found:
                if len(found) >= caps.ideal_count:
                    exhaustive = False
                    frontier = []
                    break
                ideal = Ideal(ring, side, joined)
                found[joined.key] = ideal
                frontier.append(ideal)
    out = (sorted(found.values(), key=lambda i: i.key), exhaustive)
    ring._extra[key] = out
    return out


def minimal_ideals(ring: FiniteRing, side: str, caps: Caps = DEFAULT_CAPS):
    """Atoms of the sided ideal lattice: minimal nonzero principal ideals."""
    principals = {}
    for x in ring.elements():
        if x == ring.zero:
            continue
        ideal = principal_ideal(ring, x, side)
        principals.setdefault(ideal.key, ideal)
    atoms = []
    for ideal in principals.values():
        minimal = all(
            principal_ideal(ring, y, side).sub == ideal.sub
            for y in ideal.elements() if y != ring.zero
        )
        if minimal:
            atoms.append(ideal)
    return sorted(atoms, key=lambda i: i.key)


@dataclass
class UdimCertificate:
    value: int
    witness: list
    maximality: str          # "exhaustive" | "capped"
    side: str


def uniform_dimension(ring: FiniteRing, side: str,
                      caps: Caps = DEFAULT_CAPS) -> UdimCertificate:
    """Largest direct sum of nonzero sided ideals.

    A maximal independent family can always be chosen among the atoms, so
    the search is branch-and-bound over atoms.  Above the exhaustive cap a
    greedy-with-restarts lower bound is reported and flagged.
    """
    key = ("udim", side, caps.udim_exhaustive_order)
    cached = ring._extra.get(key)
    if cached is not None:
        return cached
    if ring.order == 1:
        out = UdimCertificate(0, [], "exhaustive", side)
        ring._extra[key] = out
        return out
    if ring.order > caps.udim_exhaustive_order:
        out = _udim_greedy(ring, side, caps)
        ring._extra[key] = out
        return out
    atoms = minimal_ideals(ring, side, caps)
    best: list = []

    def extend(start: int, family: list, span: Subgroup):
        nonlocal best
        if len(family) > len(best):
            best = family[:]
        remaining_room = (ring.order // span.size).bit_length() - 1
        if len(family) + remaining_room <= len(best):
            return
        for idx in range(start, len(atoms)):
            atom = atoms[idx]
            if span.intersect(atom.sub).is_zero():
                extend(idx + 1, family + [atom], span.join(atom.sub))

    extend(0, [], Subgroup.zero(ring.additive))
    cert = UdimCertificate(len(best), best, "exhaustive", side)
    _verify_udim_witness(ring, cert)
    if is_semisimple_artinian(ring):
        greedy = _greedy_semisimple_count(ring, side, atoms)
        if greedy != cert.value:
            raise CrossCheckError(
                f"udim disagrees with the semisimple decomposition on "
                f"{ring.name}: {cert.value} vs {greedy}")
    ring._extra[key] = cert
    return cert


def _verify_udim_witness(ring: FiniteRing, cert: UdimCertificate) -> None:
    span = Subgroup.zero(ring.additive)
    for ideal in cert.witness:
        assert not ideal.is_zero()
        assert span.intersect(ideal.sub).is_zero()
        span = span.join(ideal.sub)


def _greedy_semisimple_count(ring: FiniteRing, side: str, atoms) -> int:
    span = Subgroup.zero(ring.additive)
    count = 0
    for atom in atoms:
        if span.intersect(atom.sub).is_zero():
            span = span.join(atom.sub)
            count += 1
    if span.size != ring.order:
        raise CrossCheckError(
            f"semisimple ring {ring.name} is not a direct sum of its atoms")
    return count


def _udim_greedy(ring: FiniteRing, side: str, caps: Caps) -> UdimCertificate:
    rng = random.Random(ring.order * 1009 + len(side))
    elems = list(itertools.islice(ring.elements(), 4096))
    best: list = []
    for _ in range(8):
        rng.shuffle(elems)
        span = Subgroup.zero(ring.additive)
        family = []
        for x in elems[:caps.sample_count]:
            if x == ring.zero:
                continue
            ideal = principal_ideal(ring, x, side)
            if span.intersect(ideal.sub).is_zero():
                family.append(ideal)
                span = span.join(ideal.sub)
        if len(family) > len(best):
            best = family
    cert = UdimCertificate(len(best), best, "capped", side)
    _verify_udim_witness(ring, cert)
    return cert


# -- regular elements and the degenerate quotient ring ------------------------------

@dataclass
class RegularElements:
    regular: tuple
    goldie: bool
    quotient_status: str      # "equals-ring" | "degenerate-undefined"
    units: tuple | None
    regular_are_units: bool | None


def regular_elements_quotient(ring: FiniteRing) -> RegularElements:
    """Non-zero-divisors and the (degenerate) quotient ring situation.

    A finite ring is always Goldie (finite lattices give both chain
    conditions); in a finite unital ring regular elements are units, which
    collapses the quotient ring to the ring itself.
    """
    cached = ring._extra.get("regular")
    if cached is not None:
        return cached
    regular = []
    elems = list(ring.elements())
    for r in elems:
        if all(ring.mul(r, x) != ring.zero and ring.mul(x, r) != ring.zero
               for x in elems if x != ring.zero):
            regular.append(r)
    if ring.is_unital:
        units = []
        for r in elems:
            inv = next((y for y in elems
                        if ring.mul(r, y) == ring.unit
                        and ring.mul(y, r) == ring.unit), None)
            if inv is not None:
                units.append(r)
        regular_are_units = set(regular) == set(units)
        if not regular_are_units:
            raise CrossCheckError(
                f"regular elements of unital finite {ring.name} are not "
                f"exactly the units")
        out = RegularElements(tuple(sorted(regular)), True, "equals-ring",
                              tuple(sorted(units)), True)
    else:
        out = RegularElements(tuple(sorted(regular)), True,
                              "degenerate-undefined", None, None)
    ring._extra["regular"] = out
    return out


def left_annihilator(ring: FiniteRing, xs) -> Ideal:
    """Elements r with r*x = 0 for every x in the set; a left ideal."""
    xs = list(xs)
    members = [r for r in ring.elements()
               if all(ring.mul(r, x) == ring.zero for x in xs)]
    return Ideal.from_basis(ring, LEFT, members, verify=True)


# -- finite modules and composition length -------------------------------------------

class FiniteModule:
    """A finite sided module over a finite ring, given by an action table.

    Submodule generation uses the unitalization convention, so a generator
    always lies in the submodule it generates.
    """

    def __init__(self, ring: FiniteRing, side: str, add: AdditiveGroup, action,
                 name: str = "M", validate: bool = True):
        if side not in (LEFT, RIGHT):
            raise RingError("module side must be left or right")
        self.ring = ring
        self.side = side
        self.add_group = add
        self.action = tuple(tuple(add.reduce(v) for v in row) for row in action)
        self.name = name
        self.size = add.order
        if validate:
            self._validate()

    def _validate(self) -> None:
        ring, add = self.ring, self.add_group
        if len(self.action) != ring.rank or any(
                len(row) != add.rank for row in self.action):
            raise RingError("action table has wrong shape")
        for i in range(ring.rank):
            for j in range(add.rank):
                v = self.action[i][j]
                if any(add.smul(ring.cyclic_orders[i], v)):
                    raise RingError("action not killed by scalar order")
                if any(add.smul(add.cyclic_orders[j], v)):
                    raise RingError("action not killed by module order")
        for a in range(ring.rank):
            for b in range(ring.rank):
                sc = (ring.mul_table[a][b] if self.side == LEFT
                      else ring.mul_table[b][a])
                for j in range(add.rank):
                    lhs = self._act_vec(sc, self.add_group.generator(j))
                    rhs = self._act_vec(ring.generator(a),
                                        self._act_vec(ring.generator(b),
                                                      self.add_group.generator(j)))
                    if lhs != rhs:
                        raise RingError("module action is not associative")

    def _act_vec(self, s: Element, m: Element) -> Element:
        add = self.add_group
        out = add.zero
        for i, si in enumerate(s):
            if si:
                for j, mj in enumerate(m):
                    if mj:
                        out = add.add(out, add.smul(si * mj, self.action[i][j]))
        return out

    def act(self, s: Element, m: Element) -> Element:
        """s·m for left modules, m·s for right modules (s is a ring element)."""
        return self._act_vec(s, m)

    def submodule(self, gens) -> Subgroup:
        sub = Subgroup.from_generators(self.add_group, gens)
        ring_gens = self.ring.generators()
        while True:
            new = []
            for b in sub.basis:
                for s in ring_gens:
                    v = self._act_vec(s, b)
                    if not sub.contains(v):
                        new.append(v)
            if not new:
                break
            sub = Subgroup.from_generators(self.add_group, sub.basis + tuple(new))
        return sub

    def quotient(self, sub: Subgroup) -> "FiniteModule":
        k = self.add_group.rank
        diag, v, vinv = smith_form([list(r) for r in sub.key], k)
        kept = [j for j in range(k) if diag[j] > 1]
        orders = tuple(diag[j] for j in kept)

        def project(x: Element) -> Element:
            y = vec_mat(x, v)
            return tuple(y[j] % diag[j] for j in kept)

        def lift(y: Element) -> Element:
            full = [0] * k
            for t, j in enumerate(kept):
                full[j] = y[t]
            return self.add_group.reduce(vec_mat(full, vinv))

        new_add = AdditiveGroup(orders)
        action = []
        for i in range(self.ring.rank):
            row = []
            for j in range(len(kept)):
                gen = lift(tuple(1 if t == j else 0 for t in range(len(kept))))
                row.append(project(self._act_vec(self.ring.generator(i), gen)))
            action.append(row)
        return FiniteModule(self.ring, self.side, new_add, action,
                            name=f"{self.name}/sub")

    def minimal_submodules(self) -> list[Subgroup]:
        principals = {}
        for x in self.add_group.elements():
            if not any(x):
                continue
            sub = self.submodule([x])
            principals.setdefault(sub.key, sub)
        atoms = []
        for sub in principals.values():
            if all(self.submodule([y]) == sub
                   for y in sub.elements() if any(y)):
                atoms.append(sub)
        return sorted(atoms, key=lambda s: s.key)


def ring_as_module(ring: FiniteRing, side: str,
                   scalars: FiniteRing | None = None, embed=None) -> FiniteModule:
    """The ring as a module over itself or over an embedded scalar ring.

    `embed` maps scalar-ring elements into the ring; required when `scalars`
    is given.
    """
    scalars = scalars or ring
    if embed is None:
        if scalars is not ring:
            raise RingError("an embedded scalar ring needs its embedding map")
        embed = lambda x: x  # noqa: E731 - identity embedding
    action = []
    for i in range(scalars.rank):
        s = embed(scalars.generator(i))
        row = []
        for j in range(ring.rank):
            g = ring.generator(j)
            row.append(ring.mul(s, g) if side == LEFT else ring.mul(g, s))
        action.append(row)
    return FiniteModule(scalars, side, ring.additive, action, name=ring.name)


def module_length(module: FiniteModule, caps: Caps = DEFAULT_CAPS) -> int:
    """Composition length, splitting off the least minimal submodule each step."""
    if module.size > caps.module_order:
        raise SizeCap(f"module of size {module.size} exceeds the cap")
    length = 0
    current = module
    while current.size > 1:
        atom = current.minimal_submodules()[0]
        current = current.quotient(atom)
        length += 1
    return length
