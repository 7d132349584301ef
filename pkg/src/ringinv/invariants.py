"""Everything a group action induces on a finite ring: fixed subrings, traces,
torsion ideals, bad primes, ideal extension/restriction, splitting structures,
and centralizers/normalizers.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .caps import Caps, DEFAULT_CAPS
from .groups import (
    AutomorphismGroup,
    RingAutomorphism,
    factorize,
    fixed_subgroup,
    p_normal_complement,
    quotient_action,
)
from .lattices import solve_mod_p
from .ring_core import (
    LEFT,
    RIGHT,
    TWOSIDED,
    Element,
    FiniteRing,
    Ideal,
    RingError,
    RingImage,
    Subgroup,
    SubringView,
    generated_ideal,
)


class NotInvertible(RingError):
    pass


class NotInFixedRing(RingError):
    pass


# -- splitting data -----------------------------------------------------------

@dataclass
class SplittingData:
    """A decomposition R = R^G ⊕ B with B a bimodule over the fixed ring.

    `projection` maps every element to its fixed-ring component; it is the
    additive idempotent with image R^G and kernel B.
    """

    fixed: Subgroup
    complement: Subgroup
    projection: dict
    source: str = "search"
    bimodule_checked: bool = True

    def project(self, x: Element) -> Element:
        return self.projection[x]

    @property
    def key(self):
        return self.complement.key


def _make_splitting(ring: FiniteRing, fixed: Subgroup, complement: Subgroup,
                    source: str) -> SplittingData:
    """Build and verify splitting data from the two subgroups."""
    if fixed.size * complement.size != ring.order:
        raise RingError("subgroups do not complement each other")
    if not fixed.intersect(complement).is_zero():
        raise RingError("subgroups intersect nontrivially")
    for s in fixed.basis:
        for b in complement.basis:
            if not complement.contains(ring.mul(s, b)):
                raise RingError("complement is not closed under left products")
            if not complement.contains(ring.mul(b, s)):
                raise RingError("complement is not closed under right products")
    proj = {}
    for s in fixed.elements():
        for b in complement.elements():
            proj[ring.add(s, b)] = s
    assert len(proj) == ring.order
    return SplittingData(fixed, complement, proj, source=source)


@dataclass
class SplittingSearchResult:
    found: SplittingData | None
    exhaustive: bool
    tried: int = 0


@dataclass
class ProperSplittingReport:
    status: str                      # "yes" | "no" | "capped"
    witness: Ideal | None = None     # violating invariant ideal, when "no"
    exhaustive: bool = True
    equality_holds: bool | None = None   # e(I) == I ∩ R^G over the scanned ideals


@dataclass
class PrimeData:
    """Per-prime record of the bad-prime analysis."""

    p: int
    torsion: Ideal
    complement: AutomorphismGroup | None
    quotient_order: int | None = None
    fixed_image: RingImage | None = None
    induced: AutomorphismGroup | None = None
    trace_image: Subgroup | None = None
    d: int | None = None
    d_stabilized: bool = False
    d_cap: int = 0


@dataclass
class BadPrimeProfile:
    primes: tuple[int, ...]
    data: dict = field(default_factory=dict)


# -- the action context ---------------------------------------------------------

class GActionContext:
    """A finite group acting on a finite ring, with caching for the searches.

    The fixed subring is computed and verified at construction; all further
    data (bad primes, splittings, invariant ideals) is derived lazily and
    keyed by the caps that shaped it.
    """

    def __init__(self, ring: FiniteRing, group: AutomorphismGroup,
                 ring_name: str | None = None, group_name: str | None = None):
        if group.ring is not ring:
            raise RingError("group does not act on this ring")
        self.ring = ring
        self.group = group
        self.n = group.order
        self.ring_name = ring_name or ring.name
        self.group_name = group_name or f"G{group.order}"
        self.fixed = SubringView(ring, fixed_subgroup(ring, group.elements))
        self._cache: dict = {}

    # -- basics -----------------------------------------------------------
    def fixed_image(self) -> RingImage:
        if "fixed_image" not in self._cache:
            self._cache["fixed_image"] = self.fixed.image(
                name=f"{self.ring_name}^G")
        return self._cache["fixed_image"]

    def trace(self, r: Element) -> Element:
        out = self.ring.zero
        for g in self.group.elements:
            out = self.ring.add(out, g.apply(r))
        return out

    def trace_image(self, xs=None) -> Subgroup:
        """Additive span of the traces of the given elements (default: all)."""
        if xs is None:
            if "trace_image" not in self._cache:
                gens = {self.trace(x) for x in self.ring.elements()}
                self._cache["trace_image"] = Subgroup.from_generators(
                    self.ring.additive, gens)
            return self._cache["trace_image"]
        return Subgroup.from_generators(
            self.ring.additive, [self.trace(x) for x in xs])

    def is_torsion_free(self, n: int) -> bool:
        return torsion_ideal(self.ring, n).is_zero()

    # -- bad primes ---------------------------------------------------------
    def bad_primes(self, caps: Caps = DEFAULT_CAPS) -> BadPrimeProfile:
        key = ("bad_primes", caps.d_search)
        if key not in self._cache:
            self._cache[key] = self._compute_bad_primes(caps)
        return self._cache[key]

    def _compute_bad_primes(self, caps: Caps) -> BadPrimeProfile:
        profile = BadPrimeProfile(primes=())
        bad = []
        for p in sorted(factorize(self.n)):
            tor = torsion_ideal(self.ring, p)
            if tor.is_zero():
                continue
            bad.append(p)
            data = PrimeData(p=p, torsion=tor, complement=None)
            comp = p_normal_complement(self.group, p)
            if comp is not None:
                data.complement = comp
                data.quotient_order = self.n // comp.order
                sub = SubringView(self.ring,
                                  fixed_subgroup(self.ring, comp.elements))
                data.fixed_image = sub.image(name=f"{self.ring_name}^N{p}")
                induced, coset_map = quotient_action(self.group, comp, sub)
                data.induced = induced
                cosets = self.group.left_cosets(comp)
                reps = [c[0] for c in cosets]
                sring = data.fixed_image.ring
                traces = set()
                for y in sring.elements():
                    x = data.fixed_image.from_image(y)
                    t = self.ring.zero
                    for rep in reps:
                        t = self.ring.add(t, rep.apply(x))
                    traces.add(data.fixed_image.to_image(t))
                data.trace_image = Subgroup.from_generators(
                    sring.additive, traces)
                d, stab = subgroup_power_nilpotency(
                    sring, data.trace_image, caps.d_search)
                data.d = d
                data.d_stabilized = stab
                data.d_cap = caps.d_search
            profile.data[p] = data
        profile.primes = tuple(bad)
        return profile

    # -- invariant ideal enumeration -------------------------------------------
    def invariant_ideals(self, side: str, caps: Caps = DEFAULT_CAPS):
        """All G-invariant sided ideals, or a flagged sample above the caps.

        Returns (ideals, exhaustive).  Every invariant ideal is a join of
        ideals generated by single G-orbits, so join-closure of those
        generators enumerates the lattice.
        """
        key = ("inv_ideals", side, caps.exhaustive_ideal_order, caps.ideal_count,
               caps.sample_count)
        if key not in self._cache:
            self._cache[key] = self._compute_invariant_ideals(side, caps)
        return self._cache[key]

    def _compute_invariant_ideals(self, side: str, caps: Caps):
        ring = self.ring
        if ring.order > caps.exhaustive_ideal_order:
            rng = random.Random(ring.order * 31 + len(side))
            elems = list(itertools.islice(ring.elements(), 4096))
            seeds = [rng.choice(elems) for _ in range(caps.sample_count)]
            base = [self.invariant_ideal_from(x, side) for x in seeds]
            base.append(generated_ideal(ring, [], side))
            return sorted(_dedupe_ideals(base), key=lambda i: i.key), False
        base = _dedupe_ideals(
            [self.invariant_ideal_from(x, side) for x in ring.elements()])
        lattice, exhaustive = _join_closure(ring, side, base, caps.ideal_count)
        return sorted(lattice, key=lambda i: i.key), exhaustive

    def invariant_ideal_from(self, x: Element, side: str) -> Ideal:
        orbit = {g.apply(x) for g in self.group.elements}
        return generated_ideal(self.ring, orbit, side)

    # -- splittings ------------------------------------------------------------
    def averaging_splitting(self) -> SplittingData:
        """The splitting cut out by the averaging idempotent; needs |G| a unit."""
        if "averaging" in self._cache:
            out = self._cache["averaging"]
            if isinstance(out, NotInvertible):
                raise out
            return out
        try:
            out = averaging_idempotent(self)
        except NotInvertible as exc:
            self._cache["averaging"] = exc
            raise
        self._cache["averaging"] = out
        return out

    def splittings(self, caps: Caps = DEFAULT_CAPS):
        key = ("splittings", caps.splitting_enum)
        if key not in self._cache:
            self._cache[key] = enumerate_splittings(self, caps)
        return self._cache[key]

    def proper_splitting(self, side: str, caps: Caps = DEFAULT_CAPS):
        """First proper splitting on the given side, with certainty flags.

        Returns (splitting | None, report: ProperSplittingReport-ish status):
        status "yes" with the splitting, "no" when certainly none exists,
        "capped" when the search was cut short.
        """
        key = ("proper", side, caps.splitting_enum, caps.exhaustive_ideal_order,
               caps.ideal_count)
        if key not in self._cache:
            self._cache[key] = self._compute_proper_splitting(side, caps)
        return self._cache[key]

    def _compute_proper_splitting(self, side: str, caps: Caps):
        candidates, exhaustive = self.splittings(caps)
        any_capped = not exhaustive
        for sd in candidates:
            report = is_proper_splitting(self, sd, side, caps)
            if report.status == "yes":
                return sd, "yes"
            if report.status == "capped":
                any_capped = True
        if any_capped:
            return None, "capped"
        return None, "no"


# -- free functions matching the operation surface ------------------------------

def fixed_ring_view(ring: FiniteRing, group: AutomorphismGroup) -> SubringView:
    return SubringView(ring, fixed_subgroup(ring, group.elements))


def trace(ring: FiniteRing, group: AutomorphismGroup, r: Element) -> Element:
    out = ring.zero
    for g in group.elements:
        out = ring.add(out, g.apply(r))
    return out


def trace_image(ring: FiniteRing, group: AutomorphismGroup, xs) -> Subgroup:
    return Subgroup.from_generators(
        ring.additive, [trace(ring, group, x) for x in xs])


def relative_trace(ring: FiniteRing, group: AutomorphismGroup,
                   normal: AutomorphismGroup, r: Element) -> Element:
    """Trace over coset representatives, for r fixed by the normal subgroup.

    Representatives are the least member of each coset; independence of the
    choice is verified on the input.
    """
    for h in normal.elements:
        if h.apply(r) != r:
            raise NotInFixedRing(f"{r} is not fixed by the normal subgroup")
    out = ring.zero
    for coset in group.left_cosets(normal):
        rep = coset[0]
        val = rep.apply(r)
        for other in coset[1:]:
            if other.apply(r) != val:
                raise RingError("coset members disagree on a fixed element")
        out = ring.add(out, val)
    return out


def torsion_ideal(ring: FiniteRing, n: int) -> Ideal:
    """Elements killed by a power of n: the span of the n-primary parts of
    the generators.  Always a two-sided ideal; closure is verified."""
    if n < 1:
        raise ValueError("torsion index must be >= 1")
    gens = []
    for i, d in enumerate(ring.cyclic_orders):
        cop = d
        while (g := _gcd_reduce(cop, n)) > 1:
            cop //= g
        # cop is the largest divisor of d coprime to n; cop*e_i spans the
        # n-primary component of the i-th cyclic factor
        if cop != d:
            gens.append(ring.smul(cop, ring.generator(i)))
    ideal = Ideal.from_basis(ring, TWOSIDED, gens, verify=True)
    return ideal


def _gcd_reduce(a: int, n: int) -> int:
    from math import gcd
    return gcd(a, n)


def extend_ideal(ctx: GActionContext, basis, side: str) -> Ideal:
    """Extension of a fixed-ring ideal to the ambient ring (it contains the
    generators by the closure convention)."""
    for b in basis:
        if not ctx.fixed.contains(b):
            raise NotInFixedRing(f"{b} is not in the fixed ring")
    return generated_ideal(ctx.ring, basis, side)


def restrict_ideal(ctx: GActionContext, ideal: Ideal) -> Ideal:
    """Restriction I ∩ R^G, returned as an ideal of the realized fixed ring."""
    image = ctx.fixed_image()
    meet = ideal.sub.intersect(ctx.fixed.sub)
    gens = [image.to_image(x) for x in meet.basis]
    return Ideal.from_basis(image.ring, ideal.side, gens, verify=True)


def subgroup_power_nilpotency(ring: FiniteRing, sub: Subgroup, cap: int):
    """Least d with sub^d = 0 under span-of-products powers.

    Returns (d, stabilized): d is None when no power <= cap vanishes;
    stabilized is True when a repeated nonzero power proves none ever will.
    """
    if sub.is_zero():
        return 1, False
    current = sub
    seen = {sub.key}
    for d in range(2, cap + 1):
        current = ring.power_of_subgroup(sub, current)
        if current.is_zero():
            return d, False
        if current.key in seen:
            return None, True
        seen.add(current.key)
    return None, False


def _dedupe_ideals(ideals):
    seen = {}
    for ideal in ideals:
        seen.setdefault(ideal.key, ideal)
    return list(seen.values())


def _join_closure(ring: FiniteRing, side: str, base, count_cap: int):
    """Close a list of ideals under pairwise joins (sums of ideals are ideals)."""
    found = {i.key: i for i in base}
    frontier = list(found.values())
    while frontier:
        cur = frontier.pop()
        for b in base:
            joined = cur.sub.join(b.sub)
            if joined.key not in found:
                if len(found) >= count_cap:
                    return list(found.values()), False
                ideal = Ideal(ring, side, joined)
                found[joined.key] = ideal
                frontier.append(ideal)
    return list(found.values()), True


def averaging_idempotent(ctx: GActionContext) -> SplittingData:
    """Splitting from averaging over the group, when |G| is invertible.

    The projection is r -> |G|^{-1} * trace(r); its idempotency and image are
    verified elementwise.
    """
    ring = ctx.ring
    if not ring.is_unital:
        raise NotInvertible("ring has no identity")
    n_one = ring.smul(ctx.n, ring.unit)
    inv = None
    for x in ring.elements():
        if ring.mul(x, n_one) == ring.unit and ring.mul(n_one, x) == ring.unit:
            inv = x
            break
    if inv is None:
        raise NotInvertible(f"|G| = {ctx.n} is not a unit")
    proj = {}
    image_elems = set()
    for r in ring.elements():
        e_r = ring.mul(inv, ctx.trace(r))
        proj[r] = e_r
        image_elems.add(e_r)
    for r in ring.elements():
        if proj[proj[r]] != proj[r]:
            raise RingError("averaging map is not idempotent")
    image = Subgroup.from_generators(ring.additive, image_elems)
    if image != ctx.fixed.sub:
        raise RingError("averaging image differs from the fixed ring")
    complement = Subgroup.from_generators(
        ring.additive, [ring.sub(r, proj[r]) for r in ring.elements()])
    sd = _make_splitting(ring, ctx.fixed.sub, complement, source="averaging")
    assert sd.projection == proj
    return sd


def splitting_search(ctx: GActionContext,
                     caps: Caps = DEFAULT_CAPS) -> SplittingSearchResult:
    """First splitting in canonical order, or none with an exhaustiveness flag.

    When the averaging idempotent exists its complement is returned (the
    canonical splitting); otherwise the least complement found by
    enumeration.
    """
    found, exhaustive = ctx.splittings(caps)
    if not found:
        return SplittingSearchResult(None, exhaustive, 0)
    try:
        avg = ctx.averaging_splitting()
    except NotInvertible:
        avg = None
    if avg is not None:
        match = next((sd for sd in found if sd.key == avg.key), None)
        if match is None and exhaustive:
            raise RingError("averaging complement missing from enumeration")
        return SplittingSearchResult(avg, exhaustive, len(found))
    return SplittingSearchResult(found[0], exhaustive, len(found))


def enumerate_splittings(ctx: GActionContext, caps: Caps = DEFAULT_CAPS):
    """All complements realizing R = R^G ⊕ B as bimodules, sorted canonically.

    Uses a linear solve over Z/p when the additive group is elementary
    abelian, otherwise an exhaustive subgroup search; both honor the caps.
    Returns (list, exhaustive).
    """
    ring = ctx.ring
    fixed = ctx.fixed.sub
    if fixed.size == ring.order:
        return [_make_splitting(ring, fixed, Subgroup.zero(ring.additive),
                                source="trivial")], True
    if fixed.size == 1:
        whole = Subgroup.from_generators(ring.additive, ring.generators())
        return [_make_splitting(ring, fixed, whole, source="trivial")], True
    orders = set(ring.cyclic_orders)
    if len(orders) == 1 and _is_prime(next(iter(orders))):
        return _splittings_linear(ctx, next(iter(orders)), caps)
    return _splittings_subgroup_search(ctx, caps)


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _splittings_linear(ctx: GActionContext, p: int, caps: Caps):
    """Solve the projection constraints over Z/p and enumerate the solutions."""
    ring = ctx.ring
    k = ring.rank
    sbasis = list(ctx.fixed.sub.basis)
    m = len(sbasis)
    nvars = k * m  # lambda[x][j]: e(gen_x) = sum_j lambda[x][j] * s_j

    def e_row_coeffs(x: int):
        # coefficient index helper for row x of the unknown matrix
        return [x * m + j for j in range(m)]

    equations = []
    rhs = []

    def add_equation(coeff_map: dict[int, int], value: int):
        row = [0] * nvars
        for idx, c in coeff_map.items():
            row[idx] = (row[idx] + c) % p
        equations.append(row)
        rhs.append(value % p)

    # e fixes the fixed-ring basis: e(s) = s for each s in sbasis
    for s in sbasis:
        # e(s) = sum_x s[x] * e(gen_x) = sum_x s[x] sum_j L[x][j] s_j
        for t in range(k):
            coeffs: dict[int, int] = {}
            for x in range(k):
                if s[x]:
                    for j in range(m):
                        idx = x * m + j
                        coeffs[idx] = (coeffs.get(idx, 0) + s[x] * sbasis[j][t]) % p
            add_equation(coeffs, s[t])
    # bimodule map conditions: e(u*gen_x) = u*e(gen_x), e(gen_x*u) = e(gen_x)*u
    for u in sbasis:
        for x in range(k):
            gx = ring.generator(x)
            left_in = ring.mul(u, gx)     # e applied to this
            right_in = ring.mul(gx, u)
            for t in range(k):
                # e(u*gx)_t - (u * e(gx))_t = 0
                coeffs = {}
                for y in range(k):
                    if left_in[y]:
                        for j in range(m):
                            idx = y * m + j
                            coeffs[idx] = (coeffs.get(idx, 0)
                                           + left_in[y] * sbasis[j][t]) % p
                for j in range(m):
                    us_j = ring.mul(u, sbasis[j])
                    idx = x * m + j
                    coeffs[idx] = (coeffs.get(idx, 0) - us_j[t]) % p
                add_equation(coeffs, 0)
                coeffs = {}
                for y in range(k):
                    if right_in[y]:
                        for j in range(m):
                            idx = y * m + j
                            coeffs[idx] = (coeffs.get(idx, 0)
                                           + right_in[y] * sbasis[j][t]) % p
                for j in range(m):
                    s_ju = ring.mul(sbasis[j], u)
                    idx = x * m + j
                    coeffs[idx] = (coeffs.get(idx, 0) - s_ju[t]) % p
                add_equation(coeffs, 0)

    solved = solve_mod_p(equations, rhs, nvars, p)
    if solved is None:
        return [], True
    particular, nullspace = solved
    dim = len(nullspace)
    total = p ** dim
    exhaustive = total <= caps.splitting_enum
    count = min(total, caps.splitting_enum)
    out = {}
    for idx, coeffs in enumerate(itertools.product(range(p), repeat=dim)):
        if idx >= count:
            break
        lam = list(particular)
        for c, vec in zip(coeffs, nullspace):
            if c:
                lam = [(a + c * b) % p for a, b in zip(lam, vec)]
        # build the projection matrix rows e(gen_x)
        rows = []
        for x in range(k):
            row = ring.zero
            for j in range(m):
                c = lam[x * m + j]
                if c:
                    row = ring.add(row, ring.smul(c, sbasis[j]))
            rows.append(row)
        # kernel of x -> x·E is the complement
        kernel = [x for x in ring.elements()
                  if _apply_rows(ring, rows, x) == ring.zero]
        comp = Subgroup.from_generators(ring.additive, kernel)
        if comp.size * ctx.fixed.size != ring.order:
            continue
        if comp.key not in out:
            try:
                out[comp.key] = _make_splitting(ring, ctx.fixed.sub, comp,
                                                source="search")
            except RingError:
                continue
    found = sorted(out.values(), key=lambda sd: sd.key)
    return found, exhaustive


def _apply_rows(ring: FiniteRing, rows, x: Element) -> Element:
    out = ring.zero
    for c, row in zip(x, rows):
        if c:
            out = ring.add(out, ring.smul(c, row))
    return out


def _splittings_subgroup_search(ctx: GActionContext, caps: Caps):
    """Exhaustive complement search over the subgroup lattice, with caps."""
    ring = ctx.ring
    fixed = ctx.fixed.sub
    target = ring.order // fixed.size
    subgroups, exhaustive = _enumerate_subgroups(ring, caps.splitting_enum * 8)
    out = {}
    for sub in subgroups:
        if sub.size != target or not fixed.intersect(sub).is_zero():
            continue
        try:
            sd = _make_splitting(ring, fixed, sub, source="search")
        except RingError:
            continue
        out[sd.key] = sd
    found = sorted(out.values(), key=lambda sd: sd.key)
    return found, exhaustive


def _enumerate_subgroups(ring: FiniteRing, count_cap: int):
    """All additive subgroups by join closure of the cyclic ones."""
    cyclics = {}
    for x in ring.elements():
        s = Subgroup.from_generators(ring.additive, [x])
        cyclics.setdefault(s.key, s)
    base = list(cyclics.values())
    found = dict(cyclics)
    frontier = base[:]
    exhaustive = True
    while frontier:
        cur = frontier.pop()
        for b in base:
            j = cur.join(b)
            if j.key not in found:
                if len(found) >= count_cap:
                    exhaustive = False
                    frontier = []
                    break
                found[j.key] = j
                frontier.append(j)
    return sorted(found.values(), key=lambda s: s.key), exhaustive


def is_proper_splitting(ctx: GActionContext, sd: SplittingData, side: str,
                        caps: Caps = DEFAULT_CAPS) -> ProperSplittingReport:
    """Check e(I) ⊆ I ∩ R^G over the G-invariant sided ideals.

    Also records whether the equality form e(I) = I ∩ R^G held throughout
    (the reverse containment is automatic and is asserted along the way).
    """
    ring = ctx.ring
    ideals, exhaustive = ctx.invariant_ideals(side, caps)
    equality = True
    for ideal in ideals:
        e_image = Subgroup.from_generators(
            ring.additive, [sd.project(b) for b in ideal.basis])
        meet = ideal.sub.intersect(ctx.fixed.sub)
        for x in meet.basis:
            assert e_image.contains(x), "fixed part of an ideal escaped e(I)"
        ok = all(meet.contains(x) for x in e_image.basis)
        if not ok:
            return ProperSplittingReport(status="no", witness=ideal,
                                         exhaustive=exhaustive,
                                         equality_holds=False)
        if e_image != meet:
            equality = False
    status = "yes" if exhaustive else "capped"
    return ProperSplittingReport(status=status, witness=None,
                                 exhaustive=exhaustive, equality_holds=equality)


@dataclass
class CentralizerData:
    centralizer: SubringView
    normalizer: SubringView
    units: tuple
    central_units: tuple
    normalizing_units: tuple


def centralizer_normalizer(ring: FiniteRing, sub: SubringView) -> CentralizerData:
    """Centralizer and normalizer of a subring, with their unit parts."""
    cent = []
    norm = []
    sub_elems = sub.elements()
    for b in ring.elements():
        if all(ring.mul(b, a) == ring.mul(a, b) for a in sub.basis):
            cent.append(b)
        if {ring.mul(b, a) for a in sub_elems} == {ring.mul(a, b) for a in sub_elems}:
            norm.append(b)
    cview = SubringView.from_elements(ring, cent)
    nview = SubringView.from_elements(ring, norm)
    for x in cview.basis:
        assert nview.contains(x), "centralizer escaped the normalizer"
    units = tuple(sorted(unit_group(ring)))
    central_units = tuple(u for u in units if cview.contains(u))
    normalizing_units = tuple(u for u in units if nview.contains(u))
    return CentralizerData(cview, nview, units, central_units, normalizing_units)


def unit_group(ring: FiniteRing) -> list[Element]:
    if not ring.is_unital:
        return []
    units = []
    for x in ring.elements():
        inv = next((y for y in ring.elements()
                    if ring.mul(x, y) == ring.unit and ring.mul(y, x) == ring.unit),
                   None)
        if inv is not None:
            units.append(x)
    return units


def inner_automorphism(ring: FiniteRing, u: Element) -> RingAutomorphism:
    """Conjugation by a unit, as a validated automorphism."""
    if not ring.is_unital:
        raise NotInvertible("inner automorphisms need a unital ring")
    uinv = next((y for y in ring.elements()
                 if ring.mul(u, y) == ring.unit and ring.mul(y, u) == ring.unit),
                None)
    if uinv is None:
        raise NotInvertible(f"{u} is not a unit")
    images = [ring.mul(ring.mul(u, g), uinv) for g in ring.generators()]
    return RingAutomorphism(ring, images)


def nondegenerate_trace_check(ctx: GActionContext, caps: Caps = DEFAULT_CAPS):
    """Fixed ring semiprime plus nonzero trace on every nonzero invariant
    one-sided ideal.  Returns (status, witness)."""
    from .radicals import prime_radical

    image = ctx.fixed_image()
    if not prime_radical(image.ring).is_zero():
        return "no", ("fixed ring not semiprime", None)
    capped = False
    for side in (LEFT, RIGHT):
        ideals, exhaustive = ctx.invariant_ideals(side, caps)
        capped = capped or not exhaustive
        for ideal in ideals:
            if ideal.is_zero():
                continue
            t_img = Subgroup.from_generators(
                ctx.ring.additive, [ctx.trace(x) for x in ideal.basis])
            if t_img.is_zero():
                return "no", ("zero trace on nonzero invariant ideal", ideal)
    return ("capped" if capped else "yes"), None
