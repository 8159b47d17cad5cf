# floer-ring/algebra/ideal_checks.py
"""
Property suites over the ideal families: the membership and proportionality
statements behind the nilpotency bound, the identities relating consecutive
signed ideals, Gröbner shapes, eigenvalue confinement and kernel cross-checks.

Every check returns a ``CheckReport``; a failed property is recorded, not raised.
"""

from __future__ import annotations

import random
from math import comb
from typing import List, Sequence

from sympy import Poly, QQ

from algebra.betti import closed_form_poincare_jminus, closed_form_poincare_jplus
from algebra.groebner import (
    CHARPOLY_VARIABLE,
    GroebnerBasis,
    buchberger,
    char_poly,
    cokernel_graded_dims,
    ideal_member,
    is_groebner,
    kernel_graded_dims,
    matrix_rank,
    mult_operator,
    normal_form,
    root_multiplicities,
)
from algebra.munoz import (
    BETA_MINUS,
    BETA_PLUS,
    DEFAULT_RING,
    IDEAL_VARIABLES,
    CheckPreconditionError,
    CheckReport,
    IdealKind,
    MunozRing,
    ZetaKind,
    beta_r,
    eta,
    evaluation_indices,
    guarded,
    is_unit_by_evaluation,
    phi,
    psi,
    rho,
)
from algebra.polyalg import ALPHA, BETA, GAMMA, ONE, Monomial, Polynomial, specialize_beta

X = CHARPOLY_VARIABLE
SIGNED_IDEALS = {ZetaKind.PLUS: IdealKind.JPLUS, ZetaKind.MINUS: IdealKind.JMINUS,
                 ZetaKind.CLASSICAL: IdealKind.JCLASSICAL}


def _require(condition: bool, message: str):
    if not condition:
        raise CheckPreconditionError(message)


def staircase_generators(g: int) -> List[Monomial]:
    """γ^i α^{max(g−2i, 0)} for 0 ≤ i ≤ ⌈g/2⌉, the initial ideals of the two-variable families."""
    return sorted({Monomial(max(g - 2 * i, 0), 0, i) for i in range((g + 1) // 2 + 1)}, reverse=True)


def expected_groebner_set(kind: ZetaKind, g: int, ring: MunozRing = DEFAULT_RING) -> List[Polynomial]:
    """{γ^i ζ_{g−2i} : 0 ≤ i ≤ ⌊g/2⌋} ∪ {γ^{⌈g/2⌉}}."""
    polys = [GAMMA ** i * ring.zeta(kind, g - 2 * i) for i in range(g // 2 + 1)]
    polys.append(GAMMA ** ((g + 1) // 2))
    return polys


def _same_ideal(generators: Sequence[Polynomial], gb: GroebnerBasis) -> bool:
    return buchberger(list(generators), variables=gb.variables) == gb


# --- Helper products and recursions ---
@guarded
def check_helper_identities(max_index: int = 8) -> CheckReport:
    _require(max_index >= 1, "max_index must be positive")
    report = CheckReport(f"helper_identities[≤{max_index}]")
    report.record("phi_0 = beta_minus, psi_0 = 1", phi(0) == BETA_MINUS and psi(0) == ONE)
    report.record("rho_1 = eta_1 = 1", rho(1) == ONE and eta(1) == ONE)
    for r in range(max_index):
        report.record(f"phi_{r + 1} = beta_{r} phi_{r}", phi(r + 1) == beta_r(r) * phi(r))
        report.record(f"psi_{r + 1} = beta_{r} psi_{r}", psi(r + 1) == beta_r(r) * psi(r))
        report.record(f"phi_{r} = beta_minus psi_{r}", phi(r) == BETA_MINUS * psi(r))
    for j in range(2, max_index + 1):
        if j % 2:
            report.record(f"rho_{j} odd step", rho(j) == BETA_MINUS ** 2 * BETA_PLUS * rho(j - 1) and rho(j) == eta(j))
        else:
            report.record(f"rho_{j} even step", rho(j) == BETA_PLUS * rho(j - 1) and BETA_MINUS * rho(j) == eta(j))
    return report


@guarded
def check_specialization(max_k: int = 14, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """β ↦ ±8 carries the full family onto the plus and minus families."""
    _require(max_k >= 0, "max_k must be non-negative")
    report = CheckReport(f"specialization[k≤{max_k}]")
    for k in range(max_k + 1):
        full = ring.zeta(ZetaKind.FULL, k)
        report.record(f"k={k}, beta=+8", specialize_beta(full, 1) == ring.zeta(ZetaKind.PLUS, k))
        report.record(f"k={k}, beta=-8", specialize_beta(full, -1) == ring.zeta(ZetaKind.MINUS, k))
    return report


@guarded
def check_leading_terms(max_k: int = 14, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """ζ_k = α^k + lower terms in every family; ζ_k is ℤ/4-homogeneous of degree 2k; ζ'_k is homogeneous of degree 2k."""
    _require(max_k >= 0, "max_k must be non-negative")
    report = CheckReport(f"leading_terms[k≤{max_k}]")
    for kind in ZetaKind:
        for k in range(max_k + 1):
            z = ring.zeta(kind, k)
            lead = z.leading_monomial()
            report.record(f"{kind.value} k={k} lead", lead == Monomial(k, 0, 0) and z.terms[lead] == 1)
            report.record(f"{kind.value} k={k} z4", z.z4_degrees() == {(2 * k) % 4})
    for k in range(max_k + 1):
        z = ring.zeta(ZetaKind.CLASSICAL, k)
        report.record(f"classical k={k} homogeneous", z.is_homogeneous() and z.degree == 2 * k)
    return report


# --- Nilpotency bookkeeping ---
@guarded
def check_recursion_memberships(r: int, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """ρ_jφ_{r−j}ζ_{r−j} ∈ J_r and αη_jψ_{r−j}ζ_{r−j} ∈ J_r for 0 ≤ j ≤ r."""
    _require(r >= 1, f"r must be >= 1, got {r}")
    report = CheckReport(f"recursion_memberships[r={r}]")
    gb = ring.groebner(IdealKind.J, r)
    for j in range(r + 1):
        z = ring.zeta(ZetaKind.FULL, r - j)
        report.record(f"r={r}, j={j}, rho*phi*zeta", ideal_member(rho(j) * phi(r - j) * z, gb))
        report.record(f"r={r}, j={j}, alpha*eta*psi*zeta", ideal_member(ALPHA * eta(j) * psi(r - j) * z, gb))
    return report


@guarded
def check_odd_genus_proportionality(g: int, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """β₋^{j+(g−1)/2} β₊^{g−1} ζ_{g−2j−1} ≡ c·γ^{g−1} mod J_g with c > 0, for odd g."""
    _require(g >= 1 and g % 2 == 1, f"g must be odd and positive, got {g}")
    report = CheckReport(f"odd_genus_proportionality[g={g}]")
    gb = ring.groebner(IdealKind.J, g)
    target = normal_form(GAMMA ** (g - 1), gb)
    report.record(f"g={g}, gamma^{g - 1} not in J_{g}", not target.is_zero())
    if target.is_zero():
        return report
    lead = target.leading_monomial()
    for j in range((g - 1) // 2 + 1):
        element = BETA_MINUS ** (j + (g - 1) // 2) * BETA_PLUS ** (g - 1) * ring.zeta(ZetaKind.FULL, g - 2 * j - 1)
        reduced = normal_form(element, gb)
        ratio = reduced.coefficient(lead) / target.terms[lead]
        proportional = reduced == target.scale(ratio)
        report.record(f"g={g}, j={j}", proportional and ratio > 0, constant=str(ratio))
    return report


# --- Structure of the signed ideals ---
def _random_nonmember(rng: random.Random, standard: Sequence[Monomial],
                      generators: Sequence[Polynomial]) -> Polynomial:
    """A nonzero combination of standard monomials plus a random ideal element."""
    chosen = rng.sample(list(standard), k=rng.randint(1, len(standard)))
    u = Polynomial({m: rng.choice([-3, -2, -1, 1, 2, 3]) for m in chosen})
    for gen in generators:
        u = u + gen * Polynomial({(rng.randint(0, 2), 0, rng.randint(0, 1)): rng.randint(-2, 2)})
    return u


@guarded
def check_signed_structure(g: int, ring: MunozRing = DEFAULT_RING, seed: int = 0, samples: int = 6) -> CheckReport:
    """
    Identities between consecutive signed ideals at genus ``g``.

    * J_g^− = J_{g−1}^− (g odd), and J_g^− = (ζ_g^−, γJ_{g−2}^−) (g even)
    * J_g^+ = (ζ_g^+, γJ_{g−2}^+) (g odd, g ≥ 3)
    * for even g: J_g^+ = J_{g−1}^+ if 4 | g; otherwise deg J_g^+ = deg J_{g−1}^+ + 1,
      J_{g−1}^+ = (J_g^+, γ^{g/2}) and γ^{g/2} ∉ J_g^+
    * for even g: the cokernel of α on ℚ[α,γ]/J_g^+ is one-dimensional
    * for even g ≥ 4: sampled u ∉ J_{g−4}^+ have γ²u ∉ J_g^+
    """
    _require(g >= 1, f"g must be >= 1, got {g}")
    report = CheckReport(f"signed_structure[g={g}]")
    rng = random.Random(seed * 1000 + g)
    minus = ring.ideal(IdealKind.JMINUS, g)
    plus = ring.ideal(IdealKind.JPLUS, g)

    if g % 2 == 1:
        report.record(f"J-_{g} = J-_{g - 1}", minus.gb == ring.groebner(IdealKind.JMINUS, g - 1))
    else:
        previous = ring.ideal(IdealKind.JMINUS, g - 2)
        generators = [ring.zeta(ZetaKind.MINUS, g)] + [GAMMA * p for p in previous.generators]
        report.record(f"J-_{g} = (zeta-_{g}, gamma J-_{g - 2})", _same_ideal(generators, minus.gb))

    if g % 2 == 1 and g >= 3:
        previous = ring.ideal(IdealKind.JPLUS, g - 2)
        generators = [ring.zeta(ZetaKind.PLUS, g)] + [GAMMA * p for p in previous.generators]
        report.record(f"J+_{g} = (zeta+_{g}, gamma J+_{g - 2})", _same_ideal(generators, plus.gb))

    if g % 2 == 0:
        before = ring.ideal(IdealKind.JPLUS, g - 1)
        if g % 4 == 0:
            report.record(f"J+_{g} = J+_{g - 1}", plus.gb == before.gb)
        else:
            gamma_power = GAMMA ** (g // 2)
            report.record(f"deg J+_{g} = deg J+_{g - 1} + 1", plus.degree == before.degree + 1,
                          degrees=[before.degree, plus.degree])
            report.record(f"J+_{g - 1} = (J+_{g}, gamma^{g // 2})",
                          _same_ideal(list(plus.gb.generators) + [gamma_power], before.gb))
            report.record(f"gamma^{g // 2} not in J+_{g}", not ideal_member(gamma_power, plus.gb))
        alpha_op = mult_operator(ALPHA, plus.gb, plus.quotient_basis)
        cokernel = cokernel_graded_dims(alpha_op, preserve_grading=False)
        report.record(f"coker(alpha) on J+_{g} is one-dimensional", cokernel.total == 1)

    if g % 2 == 0 and g >= 4:
        lower = ring.ideal(IdealKind.JPLUS, g - 4)
        standard = lower.quotient_basis.standard_monomials
        if not standard:
            report.record(f"gamma^2 u test at g={g}", True, note=f"J+_{g - 4} is the unit ideal")
        for index in range(samples if standard else 0):
            u = _random_nonmember(rng, standard, lower.gb.generators)
            report.record(f"gamma^2 u not in J+_{g}, sample {index}", not ideal_member(GAMMA ** 2 * u, plus.gb))
    return report


@guarded
def check_signed_shape(kind: ZetaKind, g: int, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """
    Gröbner shape of J_g^± or J'_g: the set {γ^iζ_{g−2i}} ∪ {γ^{⌈g/2⌉}} generates the
    ideal and is a Gröbner basis; the initial ideal is (γ^iα^{g−2i}); the graded
    dimensions match the closed forms.
    """
    kind = ZetaKind(kind)
    _require(kind in SIGNED_IDEALS, f"no two-variable ideal family for {kind.value}")
    _require(g >= 1, f"g must be >= 1, got {g}")
    if kind is ZetaKind.MINUS:
        _require(g % 2 == 0, "the minus-family shape applies to even genus")
    if kind is ZetaKind.PLUS:
        _require(g % 2 == 1, "the plus-family shape applies to odd genus")
    report = CheckReport(f"groebner_shape[{kind.value}, g={g}]")
    family = ring.ideal(SIGNED_IDEALS[kind], g)
    gb = family.gb
    expected = expected_groebner_set(kind, g, ring)

    report.record("initial ideal", list(gb.initial_ideal()) == staircase_generators(g),
                  initial=[m.to_string() for m in gb.initial_ideal()])
    report.record("stated set generates the ideal", _same_ideal(expected, gb))
    report.record("stated set is a Gröbner basis",
                  is_groebner(GroebnerBasis(tuple(expected), variables=IDEAL_VARIABLES[SIGNED_IDEALS[kind]])))
    report.record(f"gamma^{(g + 1) // 2} in ideal", ideal_member(GAMMA ** ((g + 1) // 2), gb))

    if kind is ZetaKind.MINUS:
        report.record("deg = g(g+2)/4", family.degree == g * (g + 2) // 4)
        report.record("Poincaré closed form", family.poincare() == closed_form_poincare_jminus(g))
    elif kind is ZetaKind.PLUS:
        report.record("deg = (g+1)^2/4", family.degree == (g + 1) ** 2 // 4)
        report.record("Poincaré closed form", family.poincare() == closed_form_poincare_jplus(g))
    else:
        if g >= 2:
            previous = ring.ideal(IdealKind.JCLASSICAL, g - 2)
            generators = [ring.zeta(ZetaKind.CLASSICAL, g)] + [GAMMA * p for p in previous.generators]
            report.record(f"J'_{g} = (zeta'_{g}, gamma J'_{g - 2})", _same_ideal(generators, gb))
        signed = IdealKind.JMINUS if g % 2 == 0 else IdealKind.JPLUS
        report.record(f"P(J'_{g}) = P({signed.value}_{g})", family.poincare() == ring.poincare(signed, g))
    return report


@guarded
def check_closed_form_poincare(g: int, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """Graded dimensions of J_g^± at every parity against their closed forms."""
    _require(g >= 0, f"g must be >= 0, got {g}")
    report = CheckReport(f"closed_form_poincare[g={g}]")
    report.record("J-", ring.poincare(IdealKind.JMINUS, g) == closed_form_poincare_jminus(g))
    report.record("J+", ring.poincare(IdealKind.JPLUS, g) == closed_form_poincare_jplus(g))
    return report


@guarded
def check_principal_cokernels(g: int, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """I_g^− (g even) and I_g^+ (g odd) are generated by one polynomial of degree g in α."""
    _require(g >= 1, f"g must be >= 1, got {g}")
    kind = IdealKind.IMINUS if g % 2 == 0 else IdealKind.IPLUS
    report = CheckReport(f"principal_cokernel[{kind.value}, g={g}]")
    gb = ring.groebner(kind, g)
    principal = len(gb) == 1 and gb.generators[0].leading_monomial() == Monomial(g, 0, 0)
    report.record(f"{kind.value}_{g} principal of degree {g}", principal, basis=[str(p) for p in gb])
    return report


# --- Invariant part of the full ring ---
@guarded
def check_invariant_basis(g: int, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """dim R/J_g = C(g+2, 3) with basis α^iβ^jγ^k (i+j+k < g); γ^{g−1} ∉ J_g, γ^g ∈ J_g."""
    _require(g >= 1, f"g must be >= 1, got {g}")
    report = CheckReport(f"invariant_basis[g={g}]")
    family = ring.ideal(IdealKind.J, g)
    gb, basis = family.gb, family.quotient_basis
    report.record("dimension C(g+2,3)", len(basis) == comb(g + 2, 3), dimension=len(basis))
    monomials = [Monomial(i, j, k) for i in range(g) for j in range(g) for k in range(g) if i + j + k < g]
    rows = [basis.coordinates(normal_form(Polynomial.monomial(m), gb)) for m in monomials]
    report.record("monomials with i+j+k<g independent", matrix_rank(rows) == len(monomials))
    report.record(f"gamma^{g - 1} not in J_{g}", not ideal_member(GAMMA ** (g - 1), gb))
    report.record(f"gamma^{g} in J_{g}", ideal_member(GAMMA ** g, gb))
    gamma_op = mult_operator(GAMMA, gb, basis)
    report.record("gamma nilpotent of index g", gamma_op.nilpotency_index() == g)
    return report


@guarded
def check_nesting(g: int, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """J_g ⊂ J_{g−1} and γJ_g ⊂ J_{g+1}."""
    _require(g >= 2, f"g must be >= 2, got {g}")
    report = CheckReport(f"nesting[g={g}]")
    gens = ring.ideal(IdealKind.J, g).generators
    lower, upper = ring.groebner(IdealKind.J, g - 1), ring.groebner(IdealKind.J, g + 1)
    report.record(f"J_{g} in J_{g - 1}", all(ideal_member(p, lower) for p in gens))
    report.record(f"gamma J_{g} in J_{g + 1}", all(ideal_member(GAMMA * p, upper) for p in gens))
    return report


@guarded
def check_eigenvalues(g: int, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """
    Root confinement of characteristic polynomials:
    β on R/J_g has roots ±8; α on R/J_g has roots 0, ±4m (m odd) and ±4m·i (m even), m < g;
    α on ℚ[α,γ]/J_g^− (g odd) has roots ±4(g−2j); α on ℚ[α,γ]/J_g^+ (g even) has roots ±4(g−2j)·i and 0.
    The α, β, γ operators on R/J_g commute pairwise.
    """
    _require(g >= 1, f"g must be >= 1, got {g}")
    report = CheckReport(f"eigenvalues[g={g}]")
    family = ring.ideal(IdealKind.J, g)
    ops = {name: mult_operator(p, family.gb, family.quotient_basis)
           for name, p in (("alpha", ALPHA), ("beta", BETA), ("gamma", GAMMA))}

    multiplicities, rest = root_multiplicities(char_poly(ops["beta"]), [Poly(X - 8, X, domain=QQ),
                                                                       Poly(X + 8, X, domain=QQ)])
    report.record("beta roots in {8, -8}", rest.degree() == 0, multiplicities=multiplicities)

    alpha_factors = [Poly(X, X, domain=QQ)]
    for m in range(1, g):
        quadratic = X ** 2 - 16 * m * m if m % 2 else X ** 2 + 16 * m * m
        alpha_factors.append(Poly(quadratic, X, domain=QQ))
    multiplicities, rest = root_multiplicities(char_poly(ops["alpha"]), alpha_factors)
    report.record("alpha roots on R/J_g confined", rest.degree() == 0, multiplicities=multiplicities)

    for first, second in (("alpha", "beta"), ("alpha", "gamma"), ("beta", "gamma")):
        report.record(f"{first} commutes with {second}", ops[first].commutes_with(ops[second]))

    signed_kind, signed_ideal = (ZetaKind.MINUS, IdealKind.JMINUS) if g % 2 else (ZetaKind.PLUS, IdealKind.JPLUS)
    signed = ring.ideal(signed_ideal, g)
    factors = []
    for j in evaluation_indices(g, signed_kind):
        m = g - 2 * j
        if signed_kind is ZetaKind.MINUS:
            factors.append(Poly(X ** 2 - 16 * m * m, X, domain=QQ))
        elif m:
            factors.append(Poly(X ** 2 + 16 * m * m, X, domain=QQ))
    if signed_kind is ZetaKind.PLUS:
        factors.append(Poly(X, X, domain=QQ))
    alpha_signed = mult_operator(ALPHA, signed.gb, signed.quotient_basis)
    multiplicities, rest = root_multiplicities(char_poly(alpha_signed), factors)
    report.record(f"alpha roots on {signed_ideal.value}_{g} confined", rest.degree() == 0,
                  multiplicities=multiplicities)
    return report


@guarded
def check_kernel_cross(g: int, ring: MunozRing = DEFAULT_RING) -> CheckReport:
    """ker(β − 8) ≅ R/J_g^+ and ker(β + 8) ≅ R/J_g^− as graded spaces; ker(β² − 64) is their sum."""
    _require(g >= 1, f"g must be >= 1, got {g}")
    report = CheckReport(f"kernel_cross[g={g}]")
    family = ring.ideal(IdealKind.J, g)
    gb, basis = family.gb, family.quotient_basis
    kernels = {}
    for sign, ideal_kind in ((1, IdealKind.JMINUS), (-1, IdealKind.JPLUS)):
        op = mult_operator(BETA + 8 * sign, gb, basis)
        kernels[sign] = kernel_graded_dims(op)
        label = "beta+8" if sign == 1 else "beta-8"
        report.record(f"ker({label}) ~ {ideal_kind.value}_{g}", kernels[sign] == ring.poincare(ideal_kind, g),
                      kernel=list(kernels[sign]))
    square = mult_operator(BETA ** 2 - 64, gb, basis)
    report.record("ker(beta^2-64) = ker(beta-8) + ker(beta+8)",
                  kernel_graded_dims(square) == kernels[1] + kernels[-1])
    report.record("coker(beta^2-64) matches kernel", cokernel_graded_dims(square) == kernel_graded_dims(square))
    return report


@guarded
def check_unit_test(g: int, ring: MunozRing = DEFAULT_RING, seed: int = 0, samples: int = 6) -> CheckReport:
    """The evaluation-map unit test agrees with invertibility of the multiplication operator."""
    _require(g >= 1, f"g must be >= 1, got {g}")
    kind, ideal_kind = (ZetaKind.MINUS, IdealKind.JMINUS) if g % 2 else (ZetaKind.PLUS, IdealKind.JPLUS)
    report = CheckReport(f"unit_test[{kind.value}, g={g}]")
    family = ring.ideal(ideal_kind, g)
    rng = random.Random(seed * 7919 + g)
    candidates = [ONE, ALPHA, GAMMA, ALPHA + 4, ALPHA - 4 * (g - 2), ALPHA ** 2 + 16]
    for _ in range(samples):
        candidates.append(Polynomial({(a, 0, c): rng.randint(-4, 4) for a in range(3) for c in range(2)}) + 1)
    for index, u in enumerate(candidates):
        by_evaluation = is_unit_by_evaluation(u, g, kind)
        by_matrix = mult_operator(u, family.gb, family.quotient_basis).is_invertible()
        report.record(f"candidate {index}: {u}", by_evaluation == by_matrix, unit=by_matrix)
    return report
