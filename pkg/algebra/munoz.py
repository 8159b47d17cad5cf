# floer-ring/algebra/munoz.py
"""
Recursive generator families ζ_k and the ideals they span.

Four families share the shape ζ₀ = 1, ζ_{<0} = 0:

* full:      ζ_{k+1} = αζ_k + k²(β + (−1)^k·8)ζ_{k−1} + 2k(k−1)γζ_{k−2}
* plus:      the full recursion with β = 8 (the middle term vanishes for odd k)
* minus:     the full recursion with β = −8 (the middle term vanishes for even k)
* classical: ζ'_{k+1} = αζ'_k + 2k(k−1)γζ'_{k−2}

Each family gives ideals (ζ_g, ζ_{g+1}, ζ_{g+2}); the signed families also give
their γ = 0 images in ℚ[α]. Gröbner bases are computed once per (kind, genus)
and shared through a ``MunozRing``.
"""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Tuple, Union

from algebra.groebner import (
    GroebnerBasis,
    QuotientBasis,
    buchberger,
    normal_form,
    quotient_basis,
)
from algebra.polyalg import ALPHA, BETA, GAMMA, ONE, ZERO, PoincarePoly, Polynomial
from utils.logging_utils import log_message


class ZetaKind(str, Enum):
    FULL = "full"
    PLUS = "plus"
    MINUS = "minus"
    CLASSICAL = "classical"


class IdealKind(str, Enum):
    J = "J"
    JPLUS = "Jplus"
    JMINUS = "Jminus"
    JCLASSICAL = "Jclassical"
    IPLUS = "Iplus"
    IMINUS = "Iminus"


IDEAL_SOURCE = {
    IdealKind.J: ZetaKind.FULL,
    IdealKind.JPLUS: ZetaKind.PLUS,
    IdealKind.JMINUS: ZetaKind.MINUS,
    IdealKind.JCLASSICAL: ZetaKind.CLASSICAL,
    IdealKind.IPLUS: ZetaKind.PLUS,
    IdealKind.IMINUS: ZetaKind.MINUS,
}

IDEAL_VARIABLES = {
    IdealKind.J: (0, 1, 2),
    IdealKind.JPLUS: (0, 2),
    IdealKind.JMINUS: (0, 2),
    IdealKind.JCLASSICAL: (0, 2),
    IdealKind.IPLUS: (0,),
    IdealKind.IMINUS: (0,),
}

# K^± = ker(β ± 8) has the graded size of the quotient by J^∓.
KERNEL_IDEAL = {+1: IdealKind.JMINUS, -1: IdealKind.JPLUS}

SignLike = Union[int, str]


def parse_sign(sign: SignLike) -> int:
    if sign in (1, "+", "+1", "plus"):
        return 1
    if sign in (-1, "-", "-1", "minus"):
        return -1
    raise ValueError(f"sign must be +1 or -1, got {sign!r}")


# --- Check reports ---
class CheckPreconditionError(ValueError):
    """A property suite was asked for an index outside its domain."""


@dataclass
class CheckReport:
    """Outcome of one property suite. Failures are recorded, never raised."""

    name: str
    cases: List[Dict[str, Any]] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, case: str, ok: bool, **details) -> bool:
        self.cases.append({"case": case, "passed": bool(ok), **details})
        if not ok:
            self.failures.append(case)
            log_message('warning', f"Munoz: check '{self.name}' failed on {case}.")
        return bool(ok)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "failures": self.failures}


def guarded(func: Callable[..., CheckReport]) -> Callable[..., CheckReport]:
    """Turns an unexpected exception inside a check into a failed report; bad arguments still raise."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> CheckReport:
        try:
            return func(*args, **kwargs)
        except CheckPreconditionError:
            raise
        except Exception as e:
            log_message('error', f"Munoz: check {func.__name__} raised {type(e).__name__}: {e}", exc_info=True)
            report = CheckReport(func.__name__)
            report.record("exception", False, error=f"{type(e).__name__}: {e}")
            return report

    return wrapper


# --- ζ families ---
class ZetaFamily:
    """
    Memoized ζ_k for one family. The cache is append-only; appends are
    serialized by a lock so concurrent readers always see complete entries.
    """

    def __init__(self, kind: Union[ZetaKind, str], corrupt: bool = False):
        self.kind = ZetaKind(kind)
        self.corrupt = corrupt
        self._cache: List[Polynomial] = [ONE]
        self._lock = threading.Lock()

    def __getitem__(self, k: int) -> Polynomial:
        if k < 0:
            return ZERO
        if k >= len(self._cache):
            with self._lock:
                while len(self._cache) <= k:
                    self._cache.append(self._next(len(self._cache) - 1))
        return self._cache[k]

    def __len__(self) -> int:
        return len(self._cache)

    def _at(self, k: int) -> Polynomial:
        return ZERO if k < 0 else self._cache[k]

    def middle_coefficient(self, k: int) -> Polynomial:
        """Coefficient of ζ_{k−1} in the formula for ζ_{k+1}."""
        # The corrupted recursion flips the sign in β + (−1)^k·8.
        parity = (k + 1) % 2 if self.corrupt else k % 2
        if self.kind is ZetaKind.FULL:
            return (BETA + (8 if parity == 0 else -8)) * (k * k)
        if self.kind is ZetaKind.PLUS:
            return Polynomial.constant(16 * k * k if parity == 0 else 0)
        if self.kind is ZetaKind.MINUS:
            return Polynomial.constant(-16 * k * k if parity == 1 else 0)
        return ZERO

    def _next(self, k: int) -> Polynomial:
        gamma_coefficient = 2 * k * (k - 1)
        return (ALPHA * self._at(k)
                + self.middle_coefficient(k) * self._at(k - 1)
                + GAMMA * self._at(k - 2) * gamma_coefficient)


# --- Ideals ---
class IdealFamily:
    """The ideal (ζ_g, ζ_{g+1}, ζ_{g+2}) of one family; its Gröbner basis is computed on first use."""

    def __init__(self, kind: IdealKind, genus: int, generators: Tuple[Polynomial, ...], variables: Tuple[int, ...]):
        self.kind = kind
        self.genus = genus
        self.generators = generators
        self.variables = variables
        self._gb = None
        self._basis = None
        self._lock = threading.Lock()

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    log_message('info', f"Munoz: computing Gröbner basis of {self.kind.value}_{self.genus}.")
                    self._gb = buchberger(list(self.generators), variables=self.variables)
        return self._gb

    @property
    def quotient_basis(self) -> QuotientBasis:
        if self._basis is None:
            self._basis = quotient_basis(self.gb)
        return self._basis

    @property
    def degree(self) -> int:
        """dim R/J."""
        return len(self.quotient_basis)

    def poincare(self) -> PoincarePoly:
        return self.quotient_basis.poincare()

    def __repr__(self) -> str:
        return f"IdealFamily({self.kind.value}, genus={self.genus})"


def _validate_genus(genus: int, minimum: int = 0) -> int:
    if isinstance(genus, bool) or not isinstance(genus, int) or genus < minimum:
        raise ValueError(f"genus must be an integer >= {minimum}, got {genus!r}")
    return genus


class MunozRing:
    """Shared cache of ζ families and ideals. ``corrupt`` flips the sign of the ±8 term in every recursion."""

    def __init__(self, corrupt: bool = False):
        self.corrupt = corrupt
        self.families = {kind: ZetaFamily(kind, corrupt) for kind in ZetaKind}
        self._ideals: Dict[Tuple[IdealKind, int], IdealFamily] = {}
        self._lock = threading.Lock()
        if corrupt:
            log_message('warning', "Munoz: ring built with a corrupted ζ recursion.")

    def zeta(self, kind: Union[ZetaKind, str], k: int) -> Polynomial:
        return self.families[ZetaKind(kind)][k]

    def ideal(self, kind: Union[IdealKind, str], genus: int) -> IdealFamily:
        kind = IdealKind(kind)
        _validate_genus(genus)
        key = (kind, genus)
        with self._lock:
            cached = self._ideals.get(key)
            if cached is None:
                if genus == 0:
                    log_message('debug', f"Munoz: {kind.value}_0 contains ζ₀ = 1 and is the unit ideal.")
                family = self.families[IDEAL_SOURCE[kind]]
                generators = tuple(family[genus + i] for i in range(3))
                if kind in (IdealKind.IPLUS, IdealKind.IMINUS):
                    generators = tuple(g.drop_gamma() for g in generators)
                cached = IdealFamily(kind, genus, generators, IDEAL_VARIABLES[kind])
                self._ideals[key] = cached
        return cached

    def groebner(self, kind: Union[IdealKind, str], genus: int) -> GroebnerBasis:
        return self.ideal(kind, genus).gb

    def poincare(self, kind: Union[IdealKind, str], genus: int) -> PoincarePoly:
        return self.ideal(kind, genus).poincare()


DEFAULT_RING = MunozRing()


def zeta(kind: Union[ZetaKind, str], k: int) -> Polynomial:
    return DEFAULT_RING.zeta(kind, k)


def ideal(kind: Union[IdealKind, str], genus: int) -> IdealFamily:
    return DEFAULT_RING.ideal(kind, genus)


# --- Helper products in β ---
BETA_MINUS = BETA - 8
BETA_PLUS = BETA + 8


def beta_r(r: int) -> Polynomial:
    """β_r = β + (−1)^r·8."""
    return BETA_PLUS if r % 2 == 0 else BETA_MINUS


def phi(r: int) -> Polynomial:
    return BETA_MINUS ** (r // 2 + 1) * BETA_PLUS ** ((r + 1) // 2)


def psi(r: int) -> Polynomial:
    return BETA_MINUS ** (r // 2) * BETA_PLUS ** ((r + 1) // 2)


def rho(j: int) -> Polynomial:
    if j < 1:
        return ONE
    return BETA_MINUS ** (2 * ((j - 1) // 2)) * BETA_PLUS ** (j - 1)


def eta(j: int) -> Polynomial:
    # η₀ is taken to be 1, like ρ₀
    if j < 1:
        return ONE
    return BETA_MINUS ** (j - 1) * BETA_PLUS ** (j - 1)


# --- Nilpotency of β² − 64 ---
U_SQUARED_MINUS_64 = BETA ** 2 - 64


def expected_nilpotency_degree(genus: int) -> int:
    return 2 * ((genus + 1) // 2) - 1


def nilpotency_degree(genus: int, ring: MunozRing = DEFAULT_RING) -> int:
    """
    Smallest n >= 1 with (β² − 64)^n ∈ J_g, found by repeated multiplication
    and reduction.

    Raises:
        ValueError: for genus < 1.
        ArithmeticError: if the power has not vanished after dim R/J_g steps,
            which means β² − 64 is not nilpotent on the quotient.
    """
    _validate_genus(genus, minimum=1)
    family = ring.ideal(IdealKind.J, genus)
    gb = family.gb
    bound = family.degree
    power = normal_form(U_SQUARED_MINUS_64, gb)
    n = 1
    while not power.is_zero():
        if n > bound:
            raise ArithmeticError(f"β² − 64 is not nilpotent modulo J_{genus} (checked up to power {bound})")
        power = normal_form(power * U_SQUARED_MINUS_64, gb)
        n += 1
    log_message('info', f"Munoz: nilpotency degree of β² − 64 modulo J_{genus} is {n}.")
    return n


# --- Evaluation maps ---
def _parse_family(family: Union[ZetaKind, str]) -> ZetaKind:
    family = ZetaKind(family)
    if family not in (ZetaKind.PLUS, ZetaKind.MINUS):
        raise ValueError(f"ev_map is defined for the plus and minus families, got {family.value}")
    return family


def evaluation_indices(g: int, family: Union[ZetaKind, str]) -> range:
    """Admissible j for ev_map: 1..(g−1)/2 for minus (g odd), 1..g/2 for plus (g even)."""
    family = _parse_family(family)
    if family is ZetaKind.MINUS:
        if g % 2 != 1:
            raise ValueError(f"minus-family evaluation maps need odd genus, got {g}")
        return range(1, (g - 1) // 2 + 1)
    if g % 2 != 0:
        raise ValueError(f"plus-family evaluation maps need even genus, got {g}")
    return range(1, g // 2 + 1)


def ev_map(g: int, j: int, sign: SignLike, family: Union[ZetaKind, str],
           p: Polynomial) -> Union[Fraction, Tuple[Fraction, Fraction]]:
    """
    Evaluates a β-free polynomial at γ = 0 and α = ±4(g − 2j) (minus family)
    or α = ±4(g − 2j)·i (plus family).

    Returns:
        A Fraction for the minus family; (real part, imaginary part) for the plus family.
    """
    family = _parse_family(family)
    sign = parse_sign(sign)
    if j not in evaluation_indices(g, family):
        raise ValueError(f"j={j} is out of range for the {family.value} family at genus {g}")
    if p.involves_beta():
        raise ValueError("ev_map expects a polynomial free of β")
    point = sign * 4 * (g - 2 * j)
    if family is ZetaKind.MINUS:
        return p.evaluate(point, 0, 0)
    real, imag = Fraction(0), Fraction(0)
    for mono, coeff in p.terms.items():
        if mono.gamma:
            continue
        value = coeff * Fraction(point) ** mono.alpha
        phase = mono.alpha % 4
        if phase == 0:
            real += value
        elif phase == 1:
            imag += value
        elif phase == 2:
            real -= value
        else:
            imag -= value
    return real, imag


def is_unit_by_evaluation(u: Polynomial, g: int, family: Union[ZetaKind, str]) -> bool:
    """u is a unit modulo J_g^± iff it vanishes at none of the evaluation points."""
    family = _parse_family(family)
    for j in evaluation_indices(g, family):
        for sign in (1, -1):
            value = ev_map(g, j, sign, family, u)
            if family is ZetaKind.MINUS and value == 0:
                return False
            if family is ZetaKind.PLUS and value == (0, 0):
                return False
    return True
