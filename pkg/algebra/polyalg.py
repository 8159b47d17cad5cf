# floer-ring/algebra/polyalg.py
"""
Exact sparse polynomial arithmetic in the three generators α, β, γ.

Coefficients are ``fractions.Fraction`` values, so every operation is exact.
Each monomial carries two gradings: the integer degree (deg α = 2, deg β = 4,
deg γ = 6) and its reduction mod 4, under which β is invisible. Graded
dimension counts live in ``PoincarePoly``, an element of ℤ[t]/(t⁴ − 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Tuple, Union

# --- Grading Conventions ---
VARIABLE_NAMES = ("α", "β", "γ")
ASCII_VARIABLE_NAMES = ("alpha", "beta", "gamma")
Z_DEGREES = (2, 4, 6)
Z4_DEGREES = (2, 0, 2)
SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")

Scalar = Union[int, Fraction]


class Monomial(NamedTuple):
    """Exponent vector α^alpha β^beta γ^gamma. Tuple comparison is lex with α > β > γ."""

    alpha: int = 0
    beta: int = 0
    gamma: int = 0

    @property
    def degree(self) -> int:
        return Z_DEGREES[0] * self.alpha + Z_DEGREES[1] * self.beta + Z_DEGREES[2] * self.gamma

    @property
    def z4_degree(self) -> int:
        return (Z4_DEGREES[0] * self.alpha + Z4_DEGREES[2] * self.gamma) % 4

    @property
    def total_exponent(self) -> int:
        return self.alpha + self.beta + self.gamma

    def is_one(self) -> bool:
        return self.alpha == 0 and self.beta == 0 and self.gamma == 0

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.alpha + other.alpha, self.beta + other.beta, self.gamma + other.gamma)

    def divides(self, other: "Monomial") -> bool:
        return self.alpha <= other.alpha and self.beta <= other.beta and self.gamma <= other.gamma

    def quotient(self, divisor: "Monomial") -> "Monomial":
        if not divisor.divides(self):
            raise ValueError(f"{divisor} does not divide {self}")
        return Monomial(self.alpha - divisor.alpha, self.beta - divisor.beta, self.gamma - divisor.gamma)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.alpha, other.alpha), max(self.beta, other.beta), max(self.gamma, other.gamma))

    def is_coprime_to(self, other: "Monomial") -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self, other))

    def to_string(self, ascii_names: bool = False) -> str:
        if self.is_one():
            return "1"
        names = ASCII_VARIABLE_NAMES if ascii_names else VARIABLE_NAMES
        parts = []
        for name, exp in zip(names, self):
            if exp == 1:
                parts.append(name)
            elif exp > 1:
                parts.append(f"{name}^{exp}" if ascii_names else f"{name}{str(exp).translate(SUPERSCRIPT)}")
        return ("*" if ascii_names else "").join(parts)


ONE_MONOMIAL = Monomial(0, 0, 0)

# Lex with α > β > γ is plain tuple comparison.
LexKey = Callable[[Monomial], tuple]


def _lex_key(m: Monomial) -> tuple:
    return m


class Polynomial:
    """
    Immutable sparse polynomial: a map Monomial -> Fraction with no zero entries.

    The zero polynomial is the empty map. Integers and Fractions are accepted
    wherever a Polynomial operand is expected.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Tuple[int, int, int], Scalar]] = None):
        clean: Dict[Monomial, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            mono = Monomial(*exps)
            if min(mono) < 0:
                raise ValueError(f"Negative exponent in monomial {tuple(exps)}")
            value = clean.get(mono, Fraction(0)) + Fraction(coeff)
            if value:
                clean[mono] = value
            else:
                clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        value = Fraction(value)
        return cls._from_clean({ONE_MONOMIAL: value} if value else {})

    @classmethod
    def monomial(cls, mono: Tuple[int, int, int], coeff: Scalar = 1) -> "Polynomial":
        return cls({tuple(mono): coeff})

    # --- Inspection ---
    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def monomials(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def coefficient(self, mono: Tuple[int, int, int]) -> Fraction:
        return self._terms.get(Monomial(*mono), Fraction(0))

    def sorted_terms(self, key: LexKey = _lex_key) -> list:
        """Terms in decreasing monomial order."""
        return sorted(self._terms.items(), key=lambda item: key(item[0]), reverse=True)

    def leading_monomial(self, key: LexKey = _lex_key) -> Monomial:
        if not self._terms:
            raise ValueError("The zero polynomial has no leading monomial")
        return max(self._terms, key=key)

    def leading_coefficient(self, key: LexKey = _lex_key) -> Fraction:
        return self._terms[self.leading_monomial(key)]

    def monic(self, key: LexKey = _lex_key) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coefficient(key))

    def is_constant(self) -> bool:
        return all(m.is_one() for m in self._terms)

    def involves_beta(self) -> bool:
        return any(m.beta for m in self._terms)

    def degree_in(self, index: int) -> int:
        """Largest exponent of variable ``index`` (0=α, 1=β, 2=γ); -1 for zero."""
        return max((m[index] for m in self._terms), default=-1)

    @property
    def degree(self) -> int:
        """Largest integer degree of a term; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self._terms}) <= 1

    def z4_degrees(self) -> set:
        return {m.z4_degree for m in self._terms}

    def is_z4_homogeneous(self) -> bool:
        return len(self.z4_degrees()) <= 1

    @property
    def z4_degree(self) -> int:
        degrees = self.z4_degrees()
        if len(degrees) != 1:
            raise ValueError(f"Polynomial is not ℤ/4-homogeneous (degrees {sorted(degrees)})")
        return degrees.pop()

    # --- Arithmetic ---
    @staticmethod
    def _coerce(other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = result.get(mono, 0) + coeff
            if value:
                result[mono] = value
            else:
                result.pop(mono, None)
        return Polynomial._from_clean(result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = Monomial(m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                value = result.get(mono, 0) + c1 * c2
                if value:
                    result[mono] = value
                else:
                    result.pop(mono, None)
        return Polynomial._from_clean(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Polynomial powers must be non-negative integers")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return ZERO
        return Polynomial._from_clean({m: c * factor for m, c in self._terms.items()})

    def mul_term(self, mono: Monomial, coeff: Scalar) -> "Polynomial":
        """Multiply by the single term coeff·mono."""
        coeff = Fraction(coeff)
        if not coeff:
            return ZERO
        return Polynomial._from_clean({m.times(mono): c * coeff for m, c in self._terms.items()})

    # --- Substitution ---
    def evaluate(self, alpha: Scalar = 0, beta: Scalar = 0, gamma: Scalar = 0) -> Fraction:
        a, b, g = Fraction(alpha), Fraction(beta), Fraction(gamma)
        total = Fraction(0)
        for m, c in self._terms.items():
            total += c * a ** m.alpha * b ** m.beta * g ** m.gamma
        return total

    def substitute_beta(self, value: Scalar) -> "Polynomial":
        value = Fraction(value)
        result: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            mono = Monomial(m.alpha, 0, m.gamma)
            result[mono] = result.get(mono, 0) + c * value ** m.beta
        return Polynomial._from_clean({m: c for m, c in result.items() if c})

    def drop_gamma(self) -> "Polynomial":
        """Image under γ ↦ 0."""
        return Polynomial._from_clean({m: c for m, c in self._terms.items() if m.gamma == 0})

    def drop_alpha(self) -> "Polynomial":
        """Image under α ↦ 0."""
        return Polynomial._from_clean({m: c for m, c in self._terms.items() if m.alpha == 0})

    # --- Equality and display ---
    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                # agree with the hash of the equal scalar
                self._hash = hash(self._terms.get(ONE_MONOMIAL, Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_string(self, ascii_names: bool = False) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, (mono, coeff) in enumerate(self.sorted_terms()):
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            body = mono.to_string(ascii_names)
            if mono.is_one():
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}" if ascii_names else f"{magnitude}{body}"
            if index == 0:
                pieces.append(f"-{text}" if sign == "-" else text)
            else:
                pieces.append(f" {sign} {text}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string(ascii_names=True)!r})"


ZERO = Polynomial._from_clean({})
ONE = Polynomial.constant(1)
ALPHA = Polynomial.monomial((1, 0, 0))
BETA = Polynomial.monomial((0, 1, 0))
GAMMA = Polynomial.monomial((0, 0, 1))


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def evaluate(p: Polynomial, alpha_val: Scalar, beta_val: Scalar, gamma_val: Scalar) -> Fraction:
    return p.evaluate(alpha_val, beta_val, gamma_val)


def specialize_beta(p: Polynomial, sign: int) -> Polynomial:
    """Image of ``p`` under β ↦ 8·sign."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return p.substitute_beta(8 * sign)


# --- Graded dimension vectors ---
@dataclass(frozen=True)
class PoincarePoly:
    """Element c₀ + c₁t + c₂t² + c₃t³ of ℤ[t]/(t⁴ − 1) with non-negative coefficients."""

    coeffs: Tuple[int, int, int, int] = (0, 0, 0, 0)

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) != 4:
            raise ValueError(f"PoincarePoly needs exactly four coefficients, got {len(coeffs)}")
        if any(not isinstance(c, int) or c < 0 for c in coeffs):
            raise ValueError(f"PoincarePoly coefficients must be non-negative integers, got {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "PoincarePoly":
        counts = [0, 0, 0, 0]
        for degree in degrees:
            counts[degree % 4] += 1
        return cls(tuple(counts))

    @classmethod
    def t_power(cls, k: int, multiplicity: int = 1) -> "PoincarePoly":
        counts = [0, 0, 0, 0]
        counts[k % 4] = multiplicity
        return cls(tuple(counts))

    def __getitem__(self, index: int) -> int:
        return self.coeffs[index % 4]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "PoincarePoly") -> "PoincarePoly":
        return PoincarePoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> "PoincarePoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, PoincarePoly):
            return NotImplemented
        counts = [0, 0, 0, 0]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                counts[(i + j) % 4] += a * b
        return PoincarePoly(tuple(counts))

    __rmul__ = __mul__

    def scale(self, factor: int) -> "PoincarePoly":
        return PoincarePoly(tuple(factor * c for c in self.coeffs))

    def shift(self, k: int) -> "PoincarePoly":
        """Multiply by t^k."""
        return PoincarePoly(tuple(self.coeffs[(i - k) % 4] for i in range(4)))

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    @property
    def euler_characteristic(self) -> int:
        c0, c1, c2, c3 = self.coeffs
        return c0 - c1 + c2 - c3

    def relabel(self, epsilon: int) -> Tuple[int, int, int, int]:
        """Coefficients listed at labels ε, 1+ε, 2+ε, 3+ε."""
        return tuple(self[i + epsilon] for i in range(4))

    def __str__(self) -> str:
        pieces = []
        for power, coeff in enumerate(self.coeffs):
            if not coeff:
                continue
            if power == 0:
                pieces.append(str(coeff))
            else:
                t = "t" if power == 1 else f"t^{power}"
                pieces.append(t if coeff == 1 else f"{coeff}{t}")
        return " + ".join(pieces) or "0"


ONE_PLUS_T3 = PoincarePoly((1, 0, 0, 1))


def z4_poincare_of_monomials(basis: Iterable[Monomial]) -> PoincarePoly:
    return PoincarePoly.from_degrees(Monomial(*m).z4_degree for m in basis)
