"""Finite-group engine with explicit element enumeration.

Groups are stored as explicit element lists with a structural multiplication
rule; a full multiplication table is materialized for small orders.  The
families constructed here are the ones needed for the reducibility
obstructions: a cyclic group acting fixed-point-freely on the additive group
of a finite field, elementary-abelian products, and two related
prime-on-prime-module actions.

Everything is deterministic: element order, subgroup enumeration order, and
the field generator conventions are all fixed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .errors import (
    DegenerateModule,
    DifferentParents,
    NotASubgroup,
    NotCoprime,
    TooLarge,
)
from .finitefield import FqContext, fq_context
from .ntheory import is_prime

_TABLE_LIMIT = 2048  # build the full multiplication table below this order
_ENUM_CAP = 5000  # documented cap for subgroup enumeration


@dataclass(frozen=True)
class SemidirectParams:
    q: int
    m: int
    t: int
    field_modulus: tuple[int, ...]
    generator: object  # multiplicative generator of F_{q^t}, smallest encoding
    zeta: object  # chosen generator of mu_m


@dataclass(frozen=True)
class PrimeActionParams:
    p: int
    s: int
    subcase: str  # "ps": C_p acting on an F_s-module; "sp": C_s on an F_p-module
    module_dim: int
    acting_order: int


class GroupSpec:
    """A finite group: explicit elements, multiplication, identity, inverses.

    Identity and inverses are verified exhaustively on construction;
    associativity is checked in full for |G| <= 200 and on 1000 seeded random
    triples otherwise.
    """

    def __init__(
        self,
        elements: list,
        mult: Callable,
        name: str = "group",
        params: object = None,
        validate: bool = True,
    ):
        self.elements = list(elements)
        self.name = name
        self.params = params
        self.order = len(self.elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != self.order:
            raise ValueError("duplicate elements")
        self._mult_raw = mult
        self._table: Optional[list[list[int]]] = None
        if self.order <= _TABLE_LIMIT:
            idx = self._index
            els = self.elements
            self._table = [
                [idx[mult(a, b)] for b in els] for a in els
            ]
        self.identity = self._find_identity()
        self.inverse = self._find_inverses()
        self.designated: dict[str, "SubgroupHandle"] = {}
        if validate:
            self._validate()

    # -- core operations ------------------------------------------------------

    def mult(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self._index[self._mult_raw(self.elements[i], self.elements[j])]

    def _find_identity(self) -> int:
        for i in range(self.order):
            if self.mult(i, 0) == 0 and self.mult(0, i) == 0:
                if all(self.mult(i, j) == j for j in range(self.order)):
                    return i
        raise ValueError("no identity element")

    def _find_inverses(self) -> list[int]:
        inv = [-1] * self.order
        e = self.identity
        for i in range(self.order):
            for j in range(self.order):
                if self.mult(i, j) == e:
                    if self.mult(j, i) != e:
                        raise ValueError("one-sided inverse")
                    inv[i] = j
                    break
            if inv[i] < 0:
                raise ValueError("missing inverse")
        return inv

    def _validate(self) -> None:
        n = self.order
        if n <= 200:
            for i in range(n):
                for j in range(n):
                    ij = self.mult(i, j)
                    for k in range(n):
                        if self.mult(ij, k) != self.mult(i, self.mult(j, k)):
                            raise ValueError("associativity failed")
        else:
            rng = random.Random(0)
            for _ in range(1000):
                i, j, k = (rng.randrange(n) for _ in range(3))
                if self.mult(self.mult(i, j), k) != self.mult(i, self.mult(j, k)):
                    raise ValueError("associativity failed")

    def element_order(self, i: int) -> int:
        e = self.identity
        if i == e:
            return 1
        order = 1
        acc = i
        while acc != e:
            acc = self.mult(acc, i)
            order += 1
        return order

    def conjugate(self, g: int, x: int) -> int:
        return self.mult(self.mult(g, x), self.inverse[g])

    def closure(self, generators: Iterable[int]) -> frozenset[int]:
        gens = sorted(set(generators) | {self.identity})
        seen = set(gens)
        frontier = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mult(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        # gens may not include inverses explicitly; finite closure under
        # multiplication already yields a subgroup, but iterate until the
        # seen set is closed under products of its own elements
        changed = True
        while changed:
            changed = False
            snapshot = sorted(seen)
            for x in snapshot:
                for g in sorted(gens):
                    y = self.mult(x, g)
                    if y not in seen:
                        seen.add(y)
                        changed = True
        return frozenset(seen)

    def subgroup(self, elements: Iterable[int]) -> "SubgroupHandle":
        return SubgroupHandle(self, frozenset(elements))

    def full_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, frozenset(range(self.order)))

    def trivial_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, frozenset([self.identity]))

    def exponent(self) -> int:
        from math import lcm

        out = 1
        for i in range(self.order):
            out = lcm(out, self.element_order(i))
        return out

    def __repr__(self) -> str:
        return f"GroupSpec({self.name}, order={self.order})"


@dataclass(frozen=True)
class SubgroupHandle:
    parent: GroupSpec = field(compare=False)
    elements: frozenset[int] = frozenset()

    def __post_init__(self):
        G = self.parent
        els = self.elements
        if G.identity not in els:
            raise NotASubgroup("missing identity")
        for a in els:
            if G.inverse[a] not in els:
                raise NotASubgroup("not closed under inverse")
            for b in els:
                if G.mult(a, b) not in els:
                    raise NotASubgroup("not closed under multiplication")
        if G.order % len(els) != 0:  # pragma: no cover - Lagrange, cheap guard
            raise NotASubgroup("order does not divide |G|")

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self) -> int:
        return self.parent.order // self.order

    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def __repr__(self) -> str:
        return f"SubgroupHandle(order={self.order} in {self.parent.name})"


# -- builders ---------------------------------------------------------------


def _smallest_generator(ctx: FqContext):
    """Multiplicative generator of F_q^* with the smallest encoding."""
    target = ctx.q - 1
    for el in ctx.elements():
        if ctx.is_zero(el):
            continue
        order = 1
        acc = el
        while acc != ctx.one():
            acc = ctx.mul(acc, el)
            order += 1
        if order == target:
            return el
    raise AssertionError("F_q^* is cyclic")  # pragma: no cover


def build_semidirect(q: int, m: int) -> GroupSpec:
    """C_m acting on the additive group V of F_{q^t} by multiplication by the
    m-th roots of unity, t the multiplicative order of q mod m.

    Elements are (i, v) with i mod m; (i, v)(j, w) = (i + j, v * zeta^j + w).
    The designated subgroup "H" is the hyperplane {v : v[0] = 0} of V, of
    index q, so [G : H] = q*m.
    """
    if not is_prime(q):
        raise NotCoprime(f"{q} must be prime")
    if m <= 1:
        raise ValueError("m must exceed 1")
    if m % q == 0:
        raise NotCoprime(f"gcd({q}, {m}) != 1")
    t = 1
    acc = q % m
    while acc != 1:
        acc = acc * q % m
        t += 1
    ctx = fq_context(q, t)
    gamma = _smallest_generator(ctx)
    zeta = ctx.pow(gamma, (ctx.q - 1) // m)
    # fixed-point-freeness: v*zeta = v only for v = 0
    assert zeta != ctx.one()
    zeta_powers = [ctx.one()]
    for _ in range(m - 1):
        zeta_powers.append(ctx.mul(zeta_powers[-1], zeta))

    elements = [(i, v) for i in range(m) for v in ctx.elements()]

    def mult(a, b):
        (i, v), (j, w) = a, b
        return ((i + j) % m, ctx.add(ctx.mul(v, zeta_powers[j]), w))

    params = SemidirectParams(q, m, t, ctx.modulus, gamma, zeta)
    G = GroupSpec(elements, mult, name=f"semidirect(q={q},m={m})", params=params)

    def in_hyperplane(v) -> bool:
        return (v == 0) if ctx.d == 1 else (v[0] == 0)

    hyper = [G._index[(0, v)] for v in ctx.elements() if in_hyperplane(v)]
    G.designated["H"] = G.subgroup(hyper)
    G.designated["V"] = G.subgroup([G._index[(0, v)] for v in ctx.elements()])
    return G


def build_abelian(q: int, m: int) -> GroupSpec:
    """C_q x C_q x C_m with the trivial designated subgroup (index q^2 m)."""
    if not is_prime(q):
        raise NotCoprime(f"{q} must be prime")
    if m < 1:
        raise ValueError("m must be positive")
    elements = [(a, b, c) for a in range(q) for b in range(q) for c in range(m)]

    def mult(x, y):
        return ((x[0] + y[0]) % q, (x[1] + y[1]) % q, (x[2] + y[2]) % m)

    G = GroupSpec(elements, mult, name=f"abelian(q={q},m={m})")
    G.designated["H"] = G.trivial_subgroup()
    return G


def build_prime_action_group(p: int, s: int, subcase: str | None = None) -> GroupSpec:
    """Order-p cyclic group on an F_s-module, or order-s on an F_p-module.

    subcase "ps": G = C_p x| V with V = F_{s^u}, u = ord of s mod p, C_p acting
    through an order-p unit; designated H is an index-s subgroup of V.
    subcase "sp": G = C_s x| V with V = F_{p^u}, u = ord of p mod s (must
    exceed 1); designated H is an index-p subgroup of V.
    When subcase is omitted: "ps" if p does not divide s - 1, else "sp".
    """
    if not (is_prime(p) and is_prime(s)) or p == s:
        raise ValueError("p, s must be distinct primes")
    if subcase is None:
        subcase = "ps" if (s - 1) % p != 0 else "sp"
    if subcase == "ps":
        acting, char = p, s
    elif subcase == "sp":
        acting, char = s, p
    else:
        raise ValueError("subcase must be 'ps' or 'sp'")
    u = 1
    acc = char % acting
    while acc != 1:
        acc = acc * char % acting
        u += 1
    if subcase == "sp" and u == 1:
        raise DegenerateModule(
            f"the faithful irreducible constituent over F_{p} has dimension 1"
        )
    ctx = fq_context(char, u)
    gamma = _smallest_generator(ctx)
    zeta = ctx.pow(gamma, (ctx.q - 1) // acting)
    zeta_powers = [ctx.one()]
    for _ in range(acting - 1):
        zeta_powers.append(ctx.mul(zeta_powers[-1], zeta))
    elements = [(i, v) for i in range(acting) for v in ctx.elements()]

    def mult(a, b):
        (i, v), (j, w) = a, b
        return ((i + j) % acting, ctx.add(ctx.mul(v, zeta_powers[j]), w))

    params = PrimeActionParams(p, s, subcase, u, acting)
    G = GroupSpec(elements, mult, name=f"prime_action(p={p},s={s},{subcase})", params=params)

    def in_hyperplane(v) -> bool:
        return (v == 0) if ctx.d == 1 else (v[0] == 0)

    hyper = [G._index[(0, v)] for v in ctx.elements() if in_hyperplane(v)]
    G.designated["H"] = G.subgroup(hyper)
    G.designated["V"] = G.subgroup([G._index[(0, v)] for v in ctx.elements()])
    return G


def build_from_table(table: list[list[int]], name: str = "table") -> GroupSpec:
    n = len(table)
    elements = list(range(n))

    def mult(a, b):
        return table[a][b]

    return GroupSpec(elements, mult, name=name)


# -- predicates and reports ----------------------------------------------------


def has_element_of_order(G: GroupSpec, n: int) -> bool:
    return any(G.element_order(i) == n for i in range(G.order))


@dataclass(frozen=True)
class CosetAction:
    degree: int
    core: SubgroupHandle
    image_order: int
    permutations: tuple[tuple[int, ...], ...]  # one permutation per group element


def coset_action(G: GroupSpec, H: SubgroupHandle) -> CosetAction:
    """Left-multiplication action on the left cosets of H; the kernel is the
    intersection of the conjugates of H (the core)."""
    if H.parent is not G:
        raise NotASubgroup("subgroup of a different group")
    coset_of = [-1] * G.order
    reps: list[int] = []
    for i in range(G.order):
        if coset_of[i] < 0:
            c = len(reps)
            reps.append(i)
            for h in H.elements:
                coset_of[G.mult(i, h)] = c
    degree = len(reps)
    perms = []
    kernel = []
    for g in range(G.order):
        perm = tuple(coset_of[G.mult(g, rep)] for rep in reps)
        perms.append(perm)
        if all(perm[c] == c for c in range(degree)):
            kernel.append(g)
    core = G.subgroup(kernel)
    return CosetAction(degree, core, G.order // len(kernel), tuple(perms))


def subgroup_product_size(D: SubgroupHandle, H: SubgroupHandle) -> int:
    """|DH| = |D| |H| / |D intersect H| (a set size; DH need not be a group)."""
    if D.parent is not H.parent:
        raise DifferentParents("subgroups of different groups")
    inter = len(D.elements & H.elements)
    return D.order * H.order // inter


def enumerate_subgroups(G: GroupSpec) -> list[SubgroupHandle]:
    """All subgroups, by closing the cyclic subgroups under pairwise joins.

    Deterministic order: sorted by (order, sorted element tuple).
    """
    if G.order > _ENUM_CAP:
        raise TooLarge(f"|G| = {G.order} exceeds the enumeration cap {_ENUM_CAP}")
    cyclic: dict[frozenset[int], tuple[int, ...]] = {}
    for i in range(G.order):
        cyc = G.closure([i])
        cyclic.setdefault(cyc, (i,))
    generators: dict[frozenset[int], tuple[int, ...]] = dict(cyclic)
    subs: set[frozenset[int]] = set(cyclic.keys())
    subs.add(frozenset([G.identity]))
    generators.setdefault(frozenset([G.identity]), ())
    frontier = list(subs)
    while frontier:
        new: list[frozenset[int]] = []
        for S in frontier:
            gen_s = generators[S]
            for C, gen_c in cyclic.items():
                if C <= S:
                    continue
                gens = tuple(sorted(set(gen_s) | set(gen_c)))
                J = G.closure(gens)
                if J not in subs:
                    subs.add(J)
                    generators[J] = gens
                    new.append(J)
        frontier = new
    handles = [SubgroupHandle(G, s) for s in sorted(subs, key=lambda s: (len(s), sorted(s)))]
    return handles


def cyclic_subgroups(G: GroupSpec, within: frozenset[int] | None = None) -> list[frozenset[int]]:
    universe = range(G.order) if within is None else sorted(within)
    seen = set()
    for i in universe:
        c = G.closure([i])
        if within is not None and not c <= within:
            continue  # pragma: no cover - closure of a member stays inside
        seen.add(c)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def is_metacyclic(M: SubgroupHandle) -> bool:
    """True iff M has a cyclic normal subgroup with cyclic quotient."""
    G = M.parent
    mels = M.elements
    for N in cyclic_subgroups(G, mels):
        # normal in M?
        if not all(G.conjugate(m, n) in N for m in mels for n in N):
            continue
        k = len(mels) // len(N)
        if k == 1:
            return True
        # quotient cyclic <=> some coset has order k in M/N
        for m in mels:
            acc = m
            j = 1
            while acc not in N:
                acc = G.mult(acc, m)
                j += 1
            if j == k:
                return True
    return False


@dataclass(frozen=True)
class ModpObstructionReport:
    """Index-n subgroup present, no element of order n: the group-theoretic
    reason a degree-n polynomial with this Galois group factors mod every p."""

    passed: bool
    n: int
    index: int
    order: int
    exponent: int
    violating_element: Optional[int]  # index of an order-n element, if any

    def to_json(self) -> dict:
        return {
            "check": "index_n_subgroup_no_order_n_element",
            "passed": self.passed,
            "n": self.n,
            "subgroup_index": self.index,
            "group_order": self.order,
            "group_exponent": self.exponent,
            "violating_element": self.violating_element,
        }


def check_modp_obstruction(G: GroupSpec, H: SubgroupHandle, n: int) -> ModpObstructionReport:
    index = H.index()
    violating = None
    for i in range(G.order):
        if G.element_order(i) == n:
            violating = i
            break
    passed = (index == n) and violating is None
    return ModpObstructionReport(passed, n, index, G.order, G.exponent(), violating)


@dataclass(frozen=True)
class LocalObstructionReport:
    """Index-n subgroup with trivial core such that M*H stays proper for every
    metacyclic M: the reason every completion sees a proper factor."""

    passed: bool
    n: int
    index: int
    core_order: int
    order: int
    metacyclic_count: int
    max_product: int
    maximizing_order: int  # |M| for a maximizing metacyclic subgroup

    def to_json(self) -> dict:
        return {
            "check": "metacyclic_product_proper",
            "passed": self.passed,
            "n": self.n,
            "subgroup_index": self.index,
            "core_order": self.core_order,
            "group_order": self.order,
            "metacyclic_subgroups": self.metacyclic_count,
            "max_product_size": self.max_product,
            "maximizing_subgroup_order": self.maximizing_order,
        }


def check_local_obstruction(G: GroupSpec, H: SubgroupHandle, n: int) -> LocalObstructionReport:
    index = H.index()
    action = coset_action(G, H)
    core_order = action.core.order
    best = 0
    best_order = 0
    count = 0
    for S in enumerate_subgroups(G):
        if not is_metacyclic(S):
            continue
        count += 1
        size = subgroup_product_size(S, H)
        if size > best or (size == best and S.order > best_order):
            best, best_order = size, S.order
    passed = index == n and core_order == 1 and best < G.order
    return LocalObstructionReport(
        passed, n, index, core_order, G.order, count, best, best_order
    )


def check_no_cyclic_normal(G: GroupSpec) -> bool:
    """True iff no nontrivial cyclic subgroup is normal in G."""
    if G.order > _ENUM_CAP:
        raise TooLarge(f"|G| = {G.order} exceeds the enumeration cap {_ENUM_CAP}")
    all_els = range(G.order)
    for N in cyclic_subgroups(G):
        if len(N) == 1:
            continue
        if all(G.conjugate(g, x) in N for g in all_els for x in N):
            return False
    return True


def parse_family(descriptor: str) -> GroupSpec:
    """Build a group from a text descriptor: "semidirect:q=2,m=5",
    "abelian:q=3,m=2", or "t4:p=2,s=5[,subcase=ps|sp]"."""
    kind, _, args = descriptor.partition(":")
    kv = {}
    if args:
        for part in args.split(","):
            key, _, val = part.partition("=")
            kv[key.strip()] = val.strip()
    if kind == "semidirect":
        return build_semidirect(int(kv["q"]), int(kv["m"]))
    if kind == "abelian":
        return build_abelian(int(kv["q"]), int(kv["m"]))
    if kind == "t4":
        return build_prime_action_group(int(kv["p"]), int(kv["s"]), kv.get("subcase"))
    raise ValueError(f"unknown family {kind!r}")
