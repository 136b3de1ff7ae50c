"""Generic ballean machinery on explicit finite instances.

An explicit ballean stores its ball table outright, so the three axioms
(containment, symmetry, upper multiplicativity) are directly checkable and
every derived construction — products, coproducts, cellularization, the
exp-hyperballean — is a finite table transformation. Finite subsets of
concrete abelian groups get the group-ball operations and the exact mu set
metric on top.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence, Union

from .groups import FiniteAbelianGroup
from .lattices import ExtNat

Point = Hashable
Radius = Hashable

EXP_SUPPORT_LIMIT = 12
PRODUCT_SIZE_LIMIT = 4096


@dataclass(frozen=True)
class ExplicitBallean:
    """A finite ballean given by its full ball table.

    Construction only normalizes the table; axiom checking is the separate
    validate_ballean so that deliberately broken instances can be built and
    reported on.
    """

    support: tuple[Point, ...]
    radii: tuple[Radius, ...]
    balls: dict[tuple[Point, Radius], frozenset]

    @classmethod
    def from_table(cls, support: Iterable[Point], radii: Iterable[Radius],
                   balls: dict) -> "ExplicitBallean":
        sup = tuple(support)
        rad = tuple(radii)
        table = {}
        for x in sup:
            for a in rad:
                table[(x, a)] = frozenset(balls.get((x, a), {x}))
        return cls(sup, rad, table)

    def ball(self, x: Point, a: Radius) -> frozenset:
        try:
            return self.balls[(x, a)]
        except KeyError:
            raise ValueError("unknown point or radius") from None

    def set_ball(self, points: Iterable[Point], a: Radius) -> frozenset:
        out = set()
        for x in points:
            out |= self.ball(x, a)
        return frozenset(out)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "support": list(self.support),
            "radii": list(self.radii),
            "balls": {f"({x},{a})": sorted(self.balls[(x, a)])
                      for x in self.support for a in self.radii},
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExplicitBallean":
        sup = [_norm_id(x) for x in data["support"]]
        rad = [_norm_id(a) for a in data["radii"]]
        table = {}
        for key, members in data["balls"].items():
            inner = key.strip()
            if not (inner.startswith("(") and inner.endswith(")")):
                raise ValueError(f"bad ball key: {key!r}")
            x_str, a_str = inner[1:-1].rsplit(",", 1)
            table[(_norm_id(x_str), _norm_id(a_str))] = frozenset(
                _norm_id(m) for m in members)
        b = cls.from_table(sup, rad, table)
        report = validate_ballean(b)
        if not report.ok:
            raise ValueError(f"invalid ballean: {report.describe()}")
        return b


def _norm_id(x):
    """JSON round-trip identifier normalization: ints stay ints."""
    if isinstance(x, int):
        return x
    s = str(x).strip()
    try:
        return int(s)
    except ValueError:
        return s


def discrete_ballean(support: Iterable[Point],
                     radii: Iterable[Radius] = ("*",)) -> ExplicitBallean:
    sup = tuple(support)
    return ExplicitBallean.from_table(sup, radii, {})


def bounded_ballean(support: Iterable[Point],
                    radii: Iterable[Radius] = ("*",)) -> ExplicitBallean:
    sup = tuple(support)
    everything = frozenset(sup)
    table = {(x, a): everything for x in sup for a in radii}
    return ExplicitBallean.from_table(sup, radii, table)


# ---------------------------------------------------------------------------
# axioms


@dataclass(frozen=True)
class BalleanValidation:
    ok: bool
    containment_violation: Optional[tuple] = None      # (x, radius)
    symmetry_violation: Optional[tuple] = None         # (x, y, radius)
    multiplicativity_violation: Optional[tuple] = None  # (radius, radius, x)

    def describe(self) -> str:
        if self.ok:
            return "valid"
        if self.containment_violation:
            x, a = self.containment_violation
            return f"containment fails: {x!r} not in its own ball at {a!r}"
        if self.symmetry_violation:
            x, y, a = self.symmetry_violation
            return f"symmetry fails between {x!r} and {y!r} at {a!r}"
        a, b, x = self.multiplicativity_violation
        return (f"no radius contains the composed ball at {x!r} "
                f"for radii {a!r}, {b!r}")

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok}
        if not self.ok:
            out["violation"] = self.describe()
        return out


def validate_ballean(b: ExplicitBallean) -> BalleanValidation:
    """Check containment, symmetry, and witnessed upper multiplicativity.

    Multiplicativity demands, for each radius pair (a, b), a single radius g
    with B(B(x,a),b) subset of B(x,g) simultaneously for every x.
    """
    for x in b.support:
        for a in b.radii:
            if x not in b.ball(x, a):
                return BalleanValidation(False, containment_violation=(x, a))
    for a in b.radii:
        for x in b.support:
            for y in b.ball(x, a):
                if x not in b.ball(y, a):
                    return BalleanValidation(False, symmetry_violation=(x, y, a))
    for a in b.radii:
        for c in b.radii:
            composed = {x: b.set_ball(b.ball(x, a), c) for x in b.support}
            if not any(all(composed[x] <= b.ball(x, g) for x in b.support)
                       for g in b.radii):
                worst = max(b.support, key=lambda x: len(composed[x]))
                return BalleanValidation(
                    False, multiplicativity_violation=(a, c, worst))
    return BalleanValidation(True)


def ball_iterate(b: ExplicitBallean, x: Point, a: Radius, n: int) -> frozenset:
    """The n-fold composition B(B(...B(x,a)...,a),a)."""
    if n < 0:
        raise ValueError("iteration count must be >= 0")
    if x not in b.support:
        raise ValueError("unknown point")
    cur = frozenset({x})
    for _ in range(n):
        cur = b.set_ball(cur, a)
    return cur


def _ball_closure(b: ExplicitBallean, x: Point, a: Radius) -> frozenset:
    cur = frozenset({x})
    while True:
        nxt = b.set_ball(cur, a)
        if nxt == cur:
            return cur
        cur = nxt


def cellularization(b: ExplicitBallean) -> ExplicitBallean:
    """Replace each ball with its transitive closure; idempotent."""
    table = {(x, a): _ball_closure(b, x, a)
             for x in b.support for a in b.radii}
    return ExplicitBallean(b.support, b.radii, table)


def is_cellular(b: ExplicitBallean) -> bool:
    return cellularization(b).balls == b.balls


def connected_components(b: ExplicitBallean) -> list[frozenset]:
    """Partition of the support under reachability through any ball."""
    neighbors = {x: set() for x in b.support}
    for x in b.support:
        for a in b.radii:
            neighbors[x] |= b.ball(x, a)
    seen: set = set()
    out = []
    for x in b.support:
        if x in seen:
            continue
        comp = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for z in neighbors[y]:
                if z not in comp:
                    comp.add(z)
                    frontier.append(z)
        seen |= comp
        out.append(frozenset(comp))
    return out


# ---------------------------------------------------------------------------
# products, coproducts, exp


def product_ballean(bs: Sequence[ExplicitBallean]) -> ExplicitBallean:
    """Pointwise product: tuple points, tuple radii, cartesian balls."""
    if not bs:
        raise ValueError("product of an empty list")
    size = 1
    for b in bs:
        size *= len(b.support)
    if size > PRODUCT_SIZE_LIMIT:
        raise ValueError("product support exceeds the size limit")
    support = list(itertools.product(*(b.support for b in bs)))
    radii = list(itertools.product(*(b.radii for b in bs)))
    table = {}
    for xs in support:
        for rs in radii:
            factors = [b.ball(x, a) for b, x, a in zip(bs, xs, rs)]
            table[(xs, rs)] = frozenset(itertools.product(*factors))
    return ExplicitBallean(tuple(support), tuple(radii), table)


def coproduct_ballean(bs: Sequence[ExplicitBallean]) -> ExplicitBallean:
    """Disjoint union; a radius picks, per summand, a radius there or None.

    The ball of (i, x) is the injected summand ball when coordinate i of the
    radius is a radius of summand i, and the singleton {(i, x)} when it is
    None — the finite-support case split of the coproduct radii.
    """
    if not bs:
        raise ValueError("coproduct of an empty list")
    support = [(i, x) for i, b in enumerate(bs) for x in b.support]
    radii = list(itertools.product(*((None,) + tuple(b.radii) for b in bs)))
    table = {}
    for i, b in enumerate(bs):
        for x in b.support:
            for rs in radii:
                if rs[i] is None:
                    table[((i, x), rs)] = frozenset({(i, x)})
                else:
                    table[((i, x), rs)] = frozenset(
                        (i, y) for y in b.ball(x, rs[i]))
    return ExplicitBallean(tuple(support), tuple(radii), table)


def exp_hyperballean_of(b: ExplicitBallean) -> ExplicitBallean:
    """The hyperballean on all nonempty subsets: Z is within radius a of Y
    iff Z is inside B(Y,a) and Y is inside B(Z,a)."""
    n = len(b.support)
    if n > EXP_SUPPORT_LIMIT:
        raise ValueError("support too large for exp enumeration")
    subsets = [frozenset(c)
               for size in range(1, n + 1)
               for c in itertools.combinations(b.support, size)]
    table = {}
    for a in b.radii:
        blown = {y: b.set_ball(y, a) for y in subsets}
        for y in subsets:
            table[(y, a)] = frozenset(
                z for z in subsets if z <= blown[y] and y <= blown[z])
    return ExplicitBallean(tuple(subsets), b.radii, table)


# ---------------------------------------------------------------------------
# finite subsets of concrete groups


@dataclass(frozen=True)
class ZWindow:
    """The integers restricted to a working window [-half_width, half_width].

    Group-ball operations raise instead of silently truncating whenever a
    result could leave the window.
    """

    half_width: int

    def __post_init__(self) -> None:
        if self.half_width < 0:
            raise ValueError("window half-width must be >= 0")

    def normalize(self, x: int) -> int:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError("window elements must be integers")
        if abs(x) > self.half_width:
            raise ValueError("element outside the working window")
        return x

    def add(self, a: int, b: int) -> int:
        c = a + b
        if abs(c) > self.half_width:
            raise ValueError("sum leaves the working window")
        return c

    def neg(self, a: int) -> int:
        return -a


Parent = Union[FiniteAbelianGroup, ZWindow]


@dataclass(frozen=True)
class FiniteSubset:
    """A nonempty finite subset of a finite abelian group or of a window
    of the integers; the points of the exp-hyperballean."""

    parent: Parent
    elements: frozenset

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValueError("exp excludes the empty set")

    @classmethod
    def of(cls, parent: Parent, elements: Iterable) -> "FiniteSubset":
        return cls(parent, frozenset(parent.normalize(e) for e in elements))

    def __len__(self) -> int:
        return len(self.elements)


def _identity(parent: Parent):
    if isinstance(parent, ZWindow):
        return 0
    return parent.zero


def symmetrize_radius(parent: Parent, radius: Iterable) -> frozenset:
    """F becomes F ∪ -F ∪ {e}, the canonical group-ball radius."""
    out = {_identity(parent)}
    for g in radius:
        g = parent.normalize(g)
        out.add(g)
        out.add(parent.neg(g))
    return frozenset(out)


def group_ball(parent: Parent, x, radius_sym: frozenset) -> frozenset:
    """{x} ∪ (F + x) for symmetric-closed F containing the identity."""
    return frozenset(parent.add(g, x) for g in radius_sym)


def exp_ball_membership(z: FiniteSubset, y: FiniteSubset,
                        radius: Iterable) -> bool:
    """Z ∈ exp B(Y, F): mutual containment in each other's group ball."""
    if z.parent != y.parent:
        raise ValueError("subsets of different parents")
    f = symmetrize_radius(z.parent, radius)
    by = set().union(*(group_ball(y.parent, e, f) for e in y.elements))
    if not z.elements <= by:
        return False
    bz = set().union(*(group_ball(z.parent, e, f) for e in z.elements))
    return y.elements <= bz


def exp_ball_enumerate_centered_identity(parent: Parent,
                                         radius: Iterable) -> set[frozenset]:
    """All Z with Z ∈ exp B({e}, F); every such Z lies inside {e} ∪ F."""
    f = symmetrize_radius(parent, radius)
    e = _identity(parent)
    center = FiniteSubset.of(parent, [e])
    universe = sorted(group_ball(parent, e, f))
    out = set()
    for size in range(1, len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            z = FiniteSubset(parent, frozenset(combo))
            if exp_ball_membership(z, center, radius):
                out.add(z.elements)
    return out


def g_exp_ball(y: FiniteSubset, radius: Iterable) -> set[frozenset]:
    """{Y} ∪ {g + Y : g ∈ A}; the radius set is used as given, unsymmetrized."""
    out = {y.elements}
    for g in radius:
        g = y.parent.normalize(g)
        out.add(frozenset(y.parent.add(g, e) for e in y.elements))
    return out


# ---------------------------------------------------------------------------
# the exact mu set metric


def _min_cover_size(universe: frozenset, sets: Sequence[frozenset]) -> Optional[int]:
    """Exact minimum number of sets covering the universe, or None if the
    union falls short. Branch and bound on the rarest uncovered element,
    with a greedy initial upper bound."""
    if not universe:
        return 0
    sets = [s & universe for s in sets if s & universe]
    if not sets or not frozenset().union(*sets) >= universe:
        return None

    # greedy upper bound
    remaining = set(universe)
    greedy = 0
    while remaining:
        best = max(sets, key=lambda s: len(s & remaining))
        remaining -= best
        greedy += 1

    best_known = greedy
    by_element: dict = {e: [s for s in sets if e in s] for e in universe}

    def search(covered: frozenset, used: int) -> None:
        nonlocal best_known
        if used >= best_known:
            return
        missing = universe - covered
        if not missing:
            best_known = used
            return
        # simple lower bound: largest candidate set caps per-step progress
        biggest = max(len(s - covered) for s in sets)
        if used + -(-len(missing) // biggest) >= best_known:
            return
        pivot = min(missing, key=lambda e: len(by_element[e]))
        for s in by_element[pivot]:
            search(covered | s, used + 1)

    search(frozenset(), 0)
    return best_known


def _free_add(parent: Parent, a, b):
    """Group addition for translate bookkeeping.

    Window bounds are deliberately not enforced here: covering translates of
    window subsets are differences of window elements and may exceed the
    window while every covered point still lies inside it.
    """
    if isinstance(parent, ZWindow):
        return a + b
    return parent.add(a, b)


def _free_neg(parent: Parent, a):
    if isinstance(parent, ZWindow):
        return -a
    return parent.neg(a)


def _translate_cover_sets(parent: Parent, base: frozenset,
                          targets: frozenset) -> dict:
    """For each useful translate g, the part of targets inside g + base."""
    out: dict = {}
    for t in targets:
        for b in base:
            g = _free_add(parent, t, _free_neg(parent, b))
            if g not in out:
                out[g] = frozenset(
                    x for x in targets
                    if _free_add(parent, _free_neg(parent, g), x) in base)
    return out


@dataclass(frozen=True)
class MuReport:
    """Both variants of the covering distance between nonempty subsets.

    mu is min over pairs (F, S) with e in both, F+Y covering Z and S+Z
    covering Y, of max(|F|, |S|); the two cover problems are independent, so
    mu = max of the two separate minima. single_set is the one-S variant
    where the same set must cover both directions.
    """

    mu: ExtNat
    single_set: ExtNat

    def to_json(self) -> dict:
        return {"mu": self.mu.to_json(), "single_set": self.single_set.to_json()}


def mu_set_distance(y: FiniteSubset, z: FiniteSubset) -> ExtNat:
    return mu_report(y, z).mu


def mu_report(y: FiniteSubset, z: FiniteSubset) -> MuReport:
    """Exact mu(Y,Z) and the single-set variant, by exact minimum set cover."""
    if y.parent != z.parent:
        raise ValueError("subsets of different parents")
    parent = y.parent
    e = _identity(parent)

    def forced_cover(base: FiniteSubset, target: FiniteSubset) -> Optional[int]:
        # min |F| with e in F and F + base covering target
        remaining = target.elements - base.elements
        covers = _translate_cover_sets(parent, base.elements, frozenset(remaining))
        covers.pop(e, None)
        extra = _min_cover_size(frozenset(remaining), list(covers.values()))
        return None if extra is None else 1 + extra

    fy = forced_cover(y, z)
    sz = forced_cover(z, y)
    if fy is None or sz is None:
        mu = ExtNat.infinity()
    else:
        mu = ExtNat.finite(max(fy, sz))

    # single S: one translate set covers both directions at once; the forced
    # identity already covers Y ∩ Z in each
    uni = frozenset(("z", t) for t in z.elements - y.elements) | \
        frozenset(("y", t) for t in y.elements - z.elements)
    candidates: dict = {}
    for tag, t in uni:
        base = y.elements if tag == "z" else z.elements
        for b in base:
            g = _free_add(parent, t, _free_neg(parent, b))
            if g == e or g in candidates:
                continue
            candidates[g] = frozenset(
                (tg, x) for tg, x in uni
                if _free_add(parent, _free_neg(parent, g), x)
                in (y.elements if tg == "z" else z.elements))
    extra = _min_cover_size(uni, list(candidates.values()))
    single = ExtNat.infinity() if extra is None else ExtNat.finite(1 + extra)
    return MuReport(mu, single)


# ---------------------------------------------------------------------------
# Hamming points


@dataclass(frozen=True)
class HammingPoint:
    """A finitely supported point of the Hamming space over an index set."""

    support_set: frozenset

    @classmethod
    def of(cls, items: Iterable) -> "HammingPoint":
        return cls(frozenset(items))


def hamming_distance(f: Union[HammingPoint, frozenset, set],
                     g: Union[HammingPoint, frozenset, set]) -> int:
    """|supp f △ supp g|."""
    fs = f.support_set if isinstance(f, HammingPoint) else frozenset(f)
    gs = g.support_set if isinstance(g, HammingPoint) else frozenset(g)
    return len(fs ^ gs)
