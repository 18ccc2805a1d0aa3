"""The order canonical E-lattice of a finite abelian group.

An E-lattice relative to phi: L -> L carries two associative, commutative
operations with a ^ a = a v a = phi(a) and a ^ (a v b) = a v (a ^ b) = phi(a).
For a finite abelian group, phi sends every element to the chosen
representative of its order class, and a ^ b (a v b) is the representative
of order gcd (lcm) of the two orders. Its fixed points form a lattice
isomorphic to the divisors of the exponent.

`descriptor` is the compact form (divisor lattice plus class sizes) and is
what `iso` works on; `build_explicit` materializes the carrier for small
groups so that `check_axioms` can verify everything element by element.
"""

import logging
from enum import Enum
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import attr
import numpy as np

from orderlattice.errors import SizeLimitError
from orderlattice.group import oracle
from orderlattice.group.model import AbelianGroup
from orderlattice.group.spectra import spectrum
from orderlattice.util.arith import (
    DEFAULT_DIVISOR_CAP,
    DivisorLattice,
    lattice_shape,
)

logger = logging.getLogger(__name__)

DEFAULT_ELEMENT_CAP = 5000
DEFAULT_TRIPLE_CAP = 100

Element = Tuple[int, ...]


@attr.s(frozen=True, auto_attribs=True)
class ELatticeDescriptor:
    fix_lattice: DivisorLattice
    class_size: Mapping[int, int]
    group: Optional[AbelianGroup] = None

    @property
    def exponent(self) -> int:
        return self.fix_lattice.top

    @property
    def order(self) -> int:
        return sum(self.class_size.values())

    def size_at(self, vector: Sequence[int]) -> int:
        return self.class_size[self.fix_lattice.value(vector)]


@lru_cache(maxsize=8192)
def descriptor(
    group: AbelianGroup, cap: int = DEFAULT_DIVISOR_CAP
) -> ELatticeDescriptor:
    spec = spectrum(group, cap)
    fix_lattice = DivisorLattice.from_factorization(group.exponent_factorization, cap)

    return ELatticeDescriptor(fix_lattice, spec.entries, group=group)


def descriptor_shape(d: ELatticeDescriptor) -> Tuple[int, ...]:
    return lattice_shape(d.fix_lattice)


class Decision(str, Enum):
    ISOMORPHIC = "isomorphic"
    NOT_ISOMORPHIC = "not_isomorphic"


@attr.s(frozen=True, auto_attribs=True)
class IsoResult:
    decision: Decision
    witness: Optional[Dict[int, int]] = None

    @property
    def isomorphic(self) -> bool:
        return self.decision is Decision.ISOMORPHIC

    def __bool__(self) -> bool:
        return self.isomorphic


def _prime_bijections(
    left: DivisorLattice, right: DivisorLattice
) -> Iterator[Dict[int, int]]:
    """Lattice isomorphisms L_left -> L_right as prime maps, lexicographic.

    Primes may only be matched when their exponents agree."""
    sources = left.base.pairs
    targets = right.base.pairs
    used = [False] * len(targets)
    chosen: List[int] = []

    def extend(i: int) -> Iterator[Dict[int, int]]:
        if i == len(sources):
            yield {p: targets[j][0] for (p, _), j in zip(sources, chosen)}

            return

        for j, (_, e) in enumerate(targets):
            if not used[j] and e == sources[i][1]:
                used[j] = True
                chosen.append(j)
                yield from extend(i + 1)
                chosen.pop()
                used[j] = False

    return extend(0)


def _preserves_class_sizes(
    prime_map: Dict[int, int], left: ELatticeDescriptor, right: ELatticeDescriptor
) -> bool:
    left_primes = left.fix_lattice.base.primes
    right_primes = right.fix_lattice.base.primes
    position = [right_primes.index(prime_map[p]) for p in left_primes]

    for d, vector in zip(left.fix_lattice.values, left.fix_lattice.elements):
        image = [0] * len(vector)

        for i, k in zip(position, vector):
            image[i] = k

        if left.class_size[d] != right.size_at(image):
            return False

    return True


def iso_descriptors(left: ELatticeDescriptor, right: ELatticeDescriptor) -> IsoResult:
    if lattice_shape(left.fix_lattice) != lattice_shape(right.fix_lattice):
        return IsoResult(Decision.NOT_ISOMORPHIC)

    for prime_map in _prime_bijections(left.fix_lattice, right.fix_lattice):
        if _preserves_class_sizes(prime_map, left, right):
            return IsoResult(Decision.ISOMORPHIC, prime_map)

    return IsoResult(Decision.NOT_ISOMORPHIC)


def iso(
    group: AbelianGroup, other: AbelianGroup, cap: int = DEFAULT_DIVISOR_CAP
) -> IsoResult:
    """Decide whether the order canonical E-lattices are isomorphic.

    An E-lattice isomorphism is a lattice isomorphism of the fixed points
    together with bijections between corresponding classes; finite classes
    of equal size always admit one, so only class sizes are compared."""

    return iso_descriptors(descriptor(group, cap), descriptor(other, cap))


@attr.s(frozen=True, auto_attribs=True, eq=False)
class ExplicitELattice:
    """Carrier-level E-lattice of an enumerated group.

    Elements are referred to by their index in `carrier` (row-major residue
    tuples). Class k holds the elements of order `fix_lattice.values[k]`;
    its representative is its lexicographically smallest element."""

    group: AbelianGroup
    carrier: Tuple[Element, ...]
    orders: np.ndarray
    class_index: np.ndarray
    representatives: np.ndarray
    fix_lattice: DivisorLattice

    def __len__(self) -> int:
        return len(self.carrier)

    @cached_property
    def _positions(self) -> Dict[Element, int]:
        return {x: ix for ix, x in enumerate(self.carrier)}

    @cached_property
    def phi(self) -> np.ndarray:
        return self.representatives[self.class_index]

    @cached_property
    def class_meet(self) -> np.ndarray:
        k = len(self.fix_lattice)

        return np.array(
            [[self.fix_lattice.meet_index(i, j) for j in range(k)] for i in range(k)],
            dtype=np.int64,
        ).reshape(k, k)

    @cached_property
    def class_join(self) -> np.ndarray:
        k = len(self.fix_lattice)

        return np.array(
            [[self.fix_lattice.join_index(i, j) for j in range(k)] for i in range(k)],
            dtype=np.int64,
        ).reshape(k, k)

    def _expand(self, class_table: np.ndarray) -> np.ndarray:
        representatives = self.representatives.astype(np.min_scalar_type(len(self)))
        classes = class_table.astype(np.min_scalar_type(len(self.fix_lattice)))
        cls = self.class_index

        return representatives[classes[cls[:, None], cls[None, :]]]

    @cached_property
    def meet(self) -> np.ndarray:
        """meet[a, b] = index of a ^ b."""

        return self._expand(self.class_meet)

    @cached_property
    def join(self) -> np.ndarray:
        """join[a, b] = index of a v b."""

        return self._expand(self.class_join)

    def index(self, x: Sequence[int]) -> int:
        try:
            return self._positions[tuple(x)]
        except KeyError:
            raise ValueError(f"[ExplicitELattice.index] {tuple(x)} is not an element")

    def element(self, ix: int) -> Element:
        return self.carrier[int(ix)]

    def phi_of(self, x: Sequence[int]) -> Element:
        return self.element(self.phi[self.index(x)])

    def meet_of(self, a: Sequence[int], b: Sequence[int]) -> Element:
        return self.element(self.meet[self.index(a), self.index(b)])

    def join_of(self, a: Sequence[int], b: Sequence[int]) -> Element:
        return self.element(self.join[self.index(a), self.index(b)])

    @property
    def fixed_points(self) -> List[Element]:
        fixed = np.flatnonzero(self.phi == np.arange(len(self.carrier)))

        return [self.element(ix) for ix in fixed]

    def class_sizes(self) -> Dict[int, int]:
        counts = np.bincount(self.class_index, minlength=len(self.fix_lattice))

        return {d: int(c) for d, c in zip(self.fix_lattice.values, counts)}


def build_explicit(
    group: AbelianGroup,
    element_cap: int = DEFAULT_ELEMENT_CAP,
    cap: int = DEFAULT_DIVISOR_CAP,
) -> ExplicitELattice:
    if group.order > element_cap:
        raise SizeLimitError(f"elements of {group.spec}", group.order, element_cap)

    factors = group.invariant_factors
    logger.info(f"[build_explicit] Enumerating {group.order} elements of {group.spec}")
    carrier = tuple(oracle.iter_elements(factors))
    orders = np.fromiter(oracle.iter_element_orders(factors), dtype=np.int64)

    # first occurrence in row-major order is the lexicographically smallest
    class_orders, representatives, class_index = np.unique(
        orders, return_index=True, return_inverse=True
    )
    fix_lattice = DivisorLattice.from_factorization(group.exponent_factorization, cap)

    if tuple(int(d) for d in class_orders) != fix_lattice.values:
        raise RuntimeError(
            f"[build_explicit] element orders of {group.spec} are not the divisors "
            f"of {group.exponent}"
        )

    return ExplicitELattice(
        group=group,
        carrier=carrier,
        orders=orders,
        class_index=class_index.reshape(-1),
        representatives=representatives,
        fix_lattice=fix_lattice,
    )


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@attr.s(frozen=True, auto_attribs=True)
class AxiomCheck:
    name: str
    status: Status
    witness: Optional[Tuple[Element, ...]] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status is not Status.FAIL


@attr.s(frozen=True, auto_attribs=True)
class AxiomReport:
    checks: Tuple[AxiomCheck, ...]
    n_elements: int

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[AxiomCheck]:
        return [check for check in self.checks if check.status is Status.FAIL]

    def __getitem__(self, name: str) -> AxiomCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def _verdict(
    name: str,
    holds: np.ndarray,
    lattice: ExplicitELattice,
    detail: str = "",
    positions: Optional[np.ndarray] = None,
) -> AxiomCheck:
    """PASS if `holds` is all True, else FAIL with the first failing index tuple.

    `positions` maps the axes of `holds` back to carrier indices when it was
    computed on a sub-carrier."""
    bad = np.argwhere(~holds)

    if len(bad) == 0:
        return AxiomCheck(name, Status.PASS, detail=detail)
    first = bad[0] if positions is None else positions[bad[0]]
    witness = tuple(lattice.element(ix) for ix in first)

    return AxiomCheck(name, Status.FAIL, witness=witness, detail=detail)


def check_axioms(
    lattice: ExplicitELattice,
    triple_cap: int = DEFAULT_TRIPLE_CAP,
    pairwise_cap: int = DEFAULT_ELEMENT_CAP,
) -> AxiomReport:
    """Exhaustively verify the E-lattice axioms on the carrier.

    Pairwise identities are checked up to `pairwise_cap` elements;
    associativity needs all triples and is skipped above `triple_cap`."""
    n = len(lattice)

    if n > pairwise_cap:
        raise SizeLimitError("E-lattice carrier", n, pairwise_cap)

    ar = np.arange(n)
    a, b = ar[:, None], ar[None, :]
    phi = lattice.phi
    meet = lattice.meet
    join = lattice.join
    orders = lattice.orders
    checks: List[AxiomCheck] = []

    checks.append(_verdict("phi_idempotent", phi[phi] == phi, lattice))
    is_fixed = phi == ar
    image = np.zeros(n, dtype=bool)
    image[phi] = True
    checks.append(_verdict("image_equals_fix", image == is_fixed, lattice))

    same_class = phi[a] == phi[b]
    same_order = orders[a] == orders[b]
    checks.append(
        _verdict("classes_are_order_classes", same_class == same_order, lattice)
    )

    # a) associativity
    for name, table in (("meet_associative", meet), ("join_associative", join)):
        if n > triple_cap:
            skipped = f"{n} elements > triple cap {triple_cap}"
            checks.append(AxiomCheck(name, Status.SKIPPED, detail=skipped))
        else:
            left = table[table[:, :, None], ar[None, None, :]]
            right = table[ar[:, None, None], table[None, :, :]]
            checks.append(_verdict(name, left == right, lattice))

    # b) commutativity
    checks.append(_verdict("meet_commutative", meet == meet.T, lattice))
    checks.append(_verdict("join_commutative", join == join.T, lattice))

    # c) a ^ a = a v a = phi(a)
    checks.append(
        _verdict(
            "diagonal_is_phi",
            (np.diagonal(meet) == phi) & (np.diagonal(join) == phi),
            lattice,
        )
    )

    # d) a ^ (a v b) = a v (a ^ b) = phi(a)
    checks.append(
        _verdict(
            "absorption",
            (meet[a, join] == phi[:, None]) & (join[a, meet] == phi[:, None]),
            lattice,
        )
    )

    checks.append(
        _verdict(
            "phi_absorption",
            (meet[ar, phi] == phi) & (join[ar, phi] == phi),
            lattice,
        )
    )

    for name, table in (("meet_phi_compatible", meet), ("join_phi_compatible", join)):
        on_phi = table[phi[:, None], phi[None, :]]
        holds = (
            (table[a, phi[None, :]] == on_phi)
            & (table[phi[:, None], b] == on_phi)
            & (phi[table] == on_phi)
        )
        checks.append(_verdict(name, holds, lattice))

    checks.append(_verdict("canonical", is_fixed[meet] & is_fixed[join], lattice))

    gcds = np.gcd(orders[a], orders[b])
    lcms = np.lcm(orders[a], orders[b])
    checks.append(_verdict("meet_is_gcd", orders[meet] == gcds, lattice))
    checks.append(_verdict("join_is_lcm", orders[join] == lcms, lattice))

    fixed = np.flatnonzero(is_fixed)
    on_fixed = np.ix_(fixed, fixed)
    closed = is_fixed[meet[on_fixed]] & is_fixed[join[on_fixed]]
    checks.append(
        _verdict(
            "fix_closed",
            closed,
            lattice,
            detail=f"{len(fixed)} fixed points",
            positions=fixed,
        )
    )

    report = AxiomReport(tuple(checks), n_elements=n)
    logger.info(
        f"[check_axioms] {lattice.group.spec}: "
        f"{len(report.failures)} of {len(checks)} checks failed"
    )

    return report


def realize_isomorphism(
    lattice: ExplicitELattice, other: ExplicitELattice, witness: Dict[int, int]
) -> np.ndarray:
    """Carrier bijection induced by a prime map between the exponents.

    Each class is sent onto its image class in ascending element order, so
    representatives go to representatives."""
    source = lattice.fix_lattice
    target = other.fix_lattice
    position = [target.base.primes.index(witness[p]) for p in source.base.primes]
    mapping = np.full(len(lattice), -1, dtype=np.int64)

    for k, vector in enumerate(source.elements):
        image = [0] * len(vector)

        for i, e in zip(position, vector):
            image[i] = e
        k_image = target.index(target.value(image))
        members = np.flatnonzero(lattice.class_index == k)
        image_members = np.flatnonzero(other.class_index == k_image)

        if len(members) != len(image_members):
            raise ValueError(
                f"[realize_isomorphism] class of order {source.values[k]} has "
                f"{len(members)} elements, its image has {len(image_members)}"
            )
        mapping[members] = image_members

    return mapping


def is_elattice_isomorphism(
    lattice: ExplicitELattice, other: ExplicitELattice, mapping: np.ndarray
) -> bool:
    n = len(lattice)

    if len(other) != n or len(mapping) != n:
        return False

    if sorted(mapping.tolist()) != list(range(n)):
        return False

    f = mapping
    commutes = np.array_equal(f[lattice.phi], other.phi[f])
    meets = np.array_equal(f[lattice.meet], other.meet[f[:, None], f[None, :]])
    joins = np.array_equal(f[lattice.join], other.join[f[:, None], f[None, :]])

    return bool(commutes and meets and joins)
