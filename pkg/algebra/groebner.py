# floer-ring/algebra/groebner.py
"""
Gröbner bases, normal forms and linear algebra on finite-dimensional quotients.

All ideals live in ℚ[α, β, γ] (or a sub-ring on a subset of the generators,
recorded in ``GroebnerBasis.variables``) under lex order with α > β > γ.
Linear algebra on quotients uses sympy's ``DomainMatrix`` over ``QQ`` so that
ranks and characteristic polynomials are exact.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import Poly, QQ, Symbol
from sympy.polys.matrices import DomainMatrix

from algebra.polyalg import (
    ASCII_VARIABLE_NAMES,
    Monomial,
    PoincarePoly,
    Polynomial,
    z4_poincare_of_monomials,
)
from utils.logging_utils import log_message

CHARPOLY_VARIABLE = Symbol("x")
ALL_VARIABLES = (0, 1, 2)


@dataclass(frozen=True)
class MonomialOrder:
    """Lex order with α > β > γ; the only order the engine uses."""

    name: str = "lex"

    def key(self, mono: Monomial) -> tuple:
        return tuple(mono)

    def __str__(self) -> str:
        return "lex(α > β > γ)"


LEX = MonomialOrder()


@dataclass(frozen=True)
class GroebnerBasis:
    generators: Tuple[Polynomial, ...]
    order: MonomialOrder = LEX
    variables: Tuple[int, ...] = ALL_VARIABLES
    stats: Mapping[str, int] = field(default_factory=dict, compare=False, hash=False)

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.leading_monomial(self.order.key) for g in self.generators)

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.generators)

    def initial_ideal(self) -> Tuple[Monomial, ...]:
        """Minimal generators of the initial ideal (leading monomials of a reduced basis)."""
        return self.leading_monomials

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self) -> str:
        return "{" + ", ".join(str(g) for g in self.generators) + "}"


@dataclass(frozen=True)
class QuotientBasis:
    """Standard monomials of a zero-dimensional ideal, in increasing lex order."""

    standard_monomials: Tuple[Monomial, ...]

    def __post_init__(self):
        ordered = tuple(sorted(Monomial(*m) for m in self.standard_monomials))
        object.__setattr__(self, "standard_monomials", ordered)
        object.__setattr__(self, "_index", {m: i for i, m in enumerate(ordered)})

    def __len__(self) -> int:
        return len(self.standard_monomials)

    def __iter__(self):
        return iter(self.standard_monomials)

    def __contains__(self, mono) -> bool:
        return Monomial(*mono) in self._index

    def index(self, mono: Monomial) -> int:
        return self._index[mono]

    def poincare(self) -> PoincarePoly:
        return z4_poincare_of_monomials(self.standard_monomials)

    def coordinates(self, p: Polynomial) -> List[Fraction]:
        """Coefficient vector of a normal form in this basis."""
        vector = [Fraction(0)] * len(self)
        for mono, coeff in p.terms.items():
            if mono not in self._index:
                raise ValueError(f"{mono.to_string()} is not a standard monomial; was the input reduced?")
            vector[self._index[mono]] = coeff
        return vector


# --- Division ---
def _reduce(p: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = LEX) -> Polynomial:
    """Full multivariate division of ``p`` by ``divisors``; returns the remainder."""
    heads = [(g.leading_monomial(order.key), g.leading_coefficient(order.key), g) for g in divisors if g]
    work: Dict[Monomial, Fraction] = dict(p.terms)
    remainder: Dict[Monomial, Fraction] = {}
    # max-heap on the order key; entries whose term has cancelled are skipped
    queue = [(_descending(order, m), m) for m in work]
    heapq.heapify(queue)
    while queue:
        mono = heapq.heappop(queue)[1]
        if mono not in work:
            continue
        coeff = work.pop(mono)
        for lead, lead_coeff, g in heads:
            if not lead.divides(mono):
                continue
            shift = mono.quotient(lead)
            factor = coeff / lead_coeff
            for g_mono, g_coeff in g.terms.items():
                if g_mono == lead:
                    continue
                target = g_mono.times(shift)
                present = target in work
                value = work.get(target, 0) - factor * g_coeff
                if value:
                    work[target] = value
                    if not present:
                        heapq.heappush(queue, (_descending(order, target), target))
                else:
                    work.pop(target, None)
            break
        else:
            remainder[mono] = coeff
    return Polynomial(remainder)


def _descending(order: MonomialOrder, mono: Monomial) -> tuple:
    return tuple(-e for e in order.key(mono))


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return _reduce(p, gb.generators, gb.order)


def ideal_member(p: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(p, gb).is_zero()


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = LEX) -> Polynomial:
    lead_f, lead_g = f.leading_monomial(order.key), g.leading_monomial(order.key)
    lcm = lead_f.lcm(lead_g)
    return (f.mul_term(lcm.quotient(lead_f), 1 / f.terms[lead_f])
            - g.mul_term(lcm.quotient(lead_g), 1 / g.terms[lead_g]))


# --- Buchberger ---
def _check_variables(polys: Iterable[Polynomial], variables: Tuple[int, ...]):
    outside = [v for v in ALL_VARIABLES if v not in variables]
    for p in polys:
        for mono in p.monomials():
            if any(mono[v] for v in outside):
                names = [ASCII_VARIABLE_NAMES[v] for v in variables]
                raise ValueError(f"Generator {p} involves a variable outside the ring {names}")


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder = LEX,
               variables: Tuple[int, ...] = ALL_VARIABLES) -> GroebnerBasis:
    """
    Computes the reduced Gröbner basis of the ideal spanned by ``generators``.

    Critical pairs sit in a heap keyed by the weighted degree of their lcm, then
    by the lcm itself (the normal strategy). Each new polynomial runs the
    Gebauer-Möller update: redundant new pairs are dropped, old pairs whose lcm
    the new leading monomial strictly divides are dropped, and basis elements
    whose leading monomial it divides leave the reducer set. The result is
    monic, inter-reduced, and sorted by decreasing leading monomial.

    Args:
        generators: Non-empty list of polynomials.
        order: Monomial order (lex).
        variables: Indices of the ring generators (0=α, 1=β, 2=γ).

    Returns:
        GroebnerBasis: The reduced basis, with pair statistics in ``stats``.
    """
    if not generators:
        raise ValueError("buchberger needs at least one generator")
    _check_variables(generators, variables)
    key = order.key

    basis: List[Polynomial] = []
    leads: List[Monomial] = []
    active: List[int] = []
    pending: Dict[Tuple[int, int], Monomial] = {}
    heap: list = []
    stats = {"pairs": 0, "coprime_skips": 0, "chain_skips": 0, "reductions_to_zero": 0}

    def unit_basis() -> GroebnerBasis:
        log_message('debug', "Groebner: ideal is the unit ideal.")
        return GroebnerBasis((Polynomial.constant(1),), order, variables, stats)

    def reducers() -> List[Polynomial]:
        return [basis[i] for i in active]

    def update(poly: Polynomial):
        nonlocal active
        poly = poly.monic(key)
        new = len(basis)
        basis.append(poly)
        lead = poly.leading_monomial(key)
        leads.append(lead)

        lcms = {g: lead.lcm(leads[g]) for g in active}
        candidates = list(active)
        kept: List[int] = []
        while candidates:
            g = candidates.pop(0)
            lcm = lcms[g]
            if lead.is_coprime_to(leads[g]) or not any(lcms[o].divides(lcm) for o in candidates + kept):
                kept.append(g)
            else:
                stats["chain_skips"] += 1

        for pair, lcm in list(pending.items()):
            i, j = pair
            if lead.divides(lcm) and lead.lcm(leads[i]) != lcm and lead.lcm(leads[j]) != lcm:
                del pending[pair]
                stats["chain_skips"] += 1

        for g in kept:
            if lead.is_coprime_to(leads[g]):
                stats["coprime_skips"] += 1
                continue
            lcm = lcms[g]
            pending[(g, new)] = lcm
            heapq.heappush(heap, (lcm.degree, key(lcm), g, new))

        active = [g for g in active if not lead.divides(leads[g])] + [new]

    for p in generators:
        remainder = _reduce(p, reducers(), order) if active else p
        if remainder.is_zero():
            continue
        if remainder.is_constant():
            return unit_basis()
        update(remainder)
    if not active:
        return GroebnerBasis((), order, variables, stats)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if pending.pop((i, j), None) is None:
            continue
        stats["pairs"] += 1
        remainder = _reduce(s_polynomial(basis[i], basis[j], order), reducers(), order)
        if remainder.is_zero():
            stats["reductions_to_zero"] += 1
            continue
        if remainder.is_constant():
            return unit_basis()
        update(remainder)

    # minimal basis: a divisor of a leading monomial precedes it in increasing order
    minimal: List[Polynomial] = []
    for poly in sorted(reducers(), key=lambda g: key(g.leading_monomial(key))):
        lead = poly.leading_monomial(key)
        if not any(q.leading_monomial(key).divides(lead) for q in minimal):
            minimal.append(poly)

    reduced = []
    for index, poly in enumerate(minimal):
        lead = poly.leading_monomial(key)
        others = minimal[:index] + minimal[index + 1:]
        tail = poly - Polynomial.monomial(lead, poly.terms[lead])
        reduced.append(Polynomial.monomial(lead) + _reduce(tail, others, order))
    reduced.sort(key=lambda g: key(g.leading_monomial(key)), reverse=True)

    log_message('info', f"Groebner: reduced basis with {len(reduced)} generators after {stats['pairs']} pairs "
                        f"({stats['coprime_skips'] + stats['chain_skips']} skipped by criteria).")
    return GroebnerBasis(tuple(reduced), order, variables, stats)


def is_groebner(gb: GroebnerBasis) -> bool:
    """True when every S-polynomial of the generators reduces to zero."""
    gens = gb.generators
    return all(_reduce(s_polynomial(gens[i], gens[j], gb.order), gens, gb.order).is_zero()
               for i, j in itertools.combinations(range(len(gens)), 2))


def is_reduced(gb: GroebnerBasis) -> bool:
    leads = gb.leading_monomials
    for index, g in enumerate(gb.generators):
        if g.leading_coefficient(gb.order.key) != 1:
            return False
        for other, lead in enumerate(leads):
            if other != index and any(lead.divides(m) for m in g.monomials()):
                return False
    return True


# --- Quotients ---
def quotient_basis(gb: GroebnerBasis) -> QuotientBasis:
    """
    Standard monomials of R/I for R the ring on ``gb.variables``.

    Raises:
        ValueError: if some ring variable has no pure power among the leading
            monomials, i.e. the quotient is infinite-dimensional.
    """
    if gb.is_unit():
        return QuotientBasis(())
    leads = gb.leading_monomials
    bounds = [1, 1, 1]
    for v in gb.variables:
        pure = [m[v] for m in leads if m[v] > 0 and all(m[w] == 0 for w in ALL_VARIABLES if w != v)]
        if not pure:
            raise ValueError(f"Infinite staircase: no pure power of {ASCII_VARIABLE_NAMES[v]} "
                             f"among the leading monomials {[m.to_string() for m in leads]}")
        bounds[v] = min(pure)
    standard = [Monomial(*exps) for exps in itertools.product(*(range(b) for b in bounds))
                if not any(lead.divides(Monomial(*exps)) for lead in leads)]
    return QuotientBasis(tuple(standard))


def graded_poincare(gb: GroebnerBasis) -> PoincarePoly:
    return quotient_basis(gb).poincare()


# --- Exact linear algebra ---
def to_fraction(value) -> Fraction:
    """Converts a sympy QQ element (python or gmpy flavour) to a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


def _domain_matrix(rows: Sequence[Sequence[Fraction]], shape: Tuple[int, int]) -> DomainMatrix:
    return DomainMatrix([[QQ(int(f.numerator), int(f.denominator)) for f in row] for row in rows], shape, QQ)


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    return _domain_matrix(rows, (len(rows), len(rows[0]))).rank()


@dataclass(frozen=True)
class MultOperator:
    """Matrix of multiplication by ``element`` on a quotient; column j is the image of basis[j]."""

    element: Polynomial
    basis: QuotientBasis
    matrix: Tuple[Tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.basis)

    def as_domain_matrix(self) -> DomainMatrix:
        return _domain_matrix(self.matrix, (self.size, self.size))

    def degree_shift(self) -> int:
        """The ℤ/4 degree by which the operator moves basis vectors (0 for the zero operator)."""
        monos = self.basis.standard_monomials
        shifts = {(monos[i].z4_degree - monos[j].z4_degree) % 4
                  for i, row in enumerate(self.matrix) for j, entry in enumerate(row) if entry}
        if len(shifts) > 1:
            raise ValueError(f"Multiplication by {self.element} does not respect the ℤ/4 grading "
                             f"(shifts {sorted(shifts)})")
        return shifts.pop() if shifts else 0

    def rank(self) -> int:
        return matrix_rank(self.matrix)

    def is_invertible(self) -> bool:
        return self.rank() == self.size

    def compose(self, other: "MultOperator") -> DomainMatrix:
        return self.as_domain_matrix() * other.as_domain_matrix()

    def commutes_with(self, other: "MultOperator") -> bool:
        if self.basis != other.basis:
            raise ValueError("Operators act on different quotient bases")
        if self.size == 0:
            return True
        return self.compose(other) == other.compose(self)

    def nilpotency_index(self) -> Optional[int]:
        """Smallest k with M^k = 0, or None if M is not nilpotent."""
        if self.size == 0:
            return 0
        matrix = self.as_domain_matrix()
        power = matrix
        for k in range(1, self.size + 1):
            if power.is_zero_matrix:
                return k
            power = power * matrix
        return None


def mult_operator(element: Polynomial, gb: GroebnerBasis, basis: Optional[QuotientBasis] = None) -> MultOperator:
    basis = basis if basis is not None else quotient_basis(gb)
    columns = [basis.coordinates(normal_form(element.mul_term(mono, 1), gb)) for mono in basis]
    rows = tuple(tuple(columns[j][i] for j in range(len(basis))) for i in range(len(basis)))
    return MultOperator(element, basis, rows)


def _graded_blocks(op: MultOperator, basis: Optional[QuotientBasis], preserve_grading: bool):
    if basis is not None and basis != op.basis:
        raise ValueError("Quotient basis does not match the operator's basis")
    shift = op.degree_shift()
    if preserve_grading and shift:
        raise ValueError(f"Multiplication by {op.element} shifts the ℤ/4 degree by {shift}; "
                         f"pass preserve_grading=False to bucket by the shifted blocks")
    monos = op.basis.standard_monomials
    by_degree = {k: [i for i, m in enumerate(monos) if m.z4_degree == k] for k in range(4)}
    return shift, by_degree


def kernel_graded_dims(op: MultOperator, basis: Optional[QuotientBasis] = None,
                       preserve_grading: bool = True) -> PoincarePoly:
    """
    Graded kernel dimensions, indexed by the degree of the source vector.

    By default the operator must preserve the ℤ/4 grading. With
    ``preserve_grading=False`` a homogeneous operator of any shift is accepted.
    """
    shift, by_degree = _graded_blocks(op, basis, preserve_grading)
    dims = []
    for k in range(4):
        cols, rows = by_degree[k], by_degree[(k + shift) % 4]
        block = [[op.matrix[i][j] for j in cols] for i in rows]
        dims.append(len(cols) - (matrix_rank(block) if rows and cols else 0))
    return PoincarePoly(tuple(dims))


def cokernel_graded_dims(op: MultOperator, basis: Optional[QuotientBasis] = None,
                         preserve_grading: bool = True) -> PoincarePoly:
    """Graded cokernel dimensions, indexed by the degree of the target vector."""
    shift, by_degree = _graded_blocks(op, basis, preserve_grading)
    dims = []
    for k in range(4):
        rows, cols = by_degree[k], by_degree[(k - shift) % 4]
        block = [[op.matrix[i][j] for j in cols] for i in rows]
        dims.append(len(rows) - (matrix_rank(block) if rows and cols else 0))
    return PoincarePoly(tuple(dims))


def char_poly(op: MultOperator) -> Poly:
    """Characteristic polynomial det(x·I − M) in ``x`` over QQ (division-free Berkowitz)."""
    if op.size == 0:
        return Poly(1, CHARPOLY_VARIABLE, domain=QQ)
    coeffs = op.as_domain_matrix().charpoly()
    return Poly(list(coeffs), CHARPOLY_VARIABLE, domain=QQ)


def root_multiplicities(charpoly: Poly, factors: Sequence[Poly]) -> Tuple[List[int], Poly]:
    """
    Divides out each factor as often as it goes in.

    Returns:
        The multiplicity of every factor and the leftover cofactor. The roots
        are confined to the factors' roots exactly when the cofactor is constant.
    """
    remaining = charpoly
    multiplicities = []
    for factor in factors:
        count = 0
        while remaining.degree() >= factor.degree() > 0:
            quotient, remainder = remaining.div(factor)
            if not remainder.is_zero:
                break
            remaining, count = quotient, count + 1
        multiplicities.append(count)
    return multiplicities, remaining
