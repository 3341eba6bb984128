"""Coefficient-matching solver for spherically symmetric bound states.

For a radial bracket W(r) = E + (potential terms) + A/r and a trial state

    psi = exp(-a r + sum_s b_s r^s) r^gamma sum_nu a_nu r^nu,

the four-solution square of the state vector imposes the pointwise condition

    W(r)^2 = m^2 - u(r)^2 + (j + 1/2)^2 / r^2,

with u = -a + sum_s s b_s r^{s-1} + (gamma + nu + 1)/r, the +-i(j+1/2)/r
cross terms having cancelled over the four sign choices.  Equating Laurent
coefficients gives one relation per power of r.  Each supported family
matches the subset of those relations that its printed derivation uses
(extreme powers fix the exponent coefficients, the potential-Coulomb cross
fixes gamma at the series head, and the constant/1/r/1/r^2 trio at the
series tail fixes a and the energy); the remaining cross relations are
reported unmatched.  Four families are supported:

* confining: V = sigma r (+ constant), bracket E - q sigma r + q A / r
* coulomb:   bracket E + q A / r, hydrogen-like level series
* oscillator: bracket E + c2 r^2 + A / r, levels E = -m (1/2 + n') / (j + 1/2)
* inverse multipole (Lennard-Jones, dipolar, ...): powers <= -2, oscillator levels

Exact (Gaussian-rational / surd) arithmetic throughout via sympy; floats
only when the caller passes floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import sympy as sp
from sympy import I, Rational, Symbol, sqrt

__all__ = [
    "PotentialSpec",
    "QuantumNumbers",
    "Relation",
    "AnsatzBranch",
    "AnsatzSolution",
    "LevelSeries",
    "UnsupportedPotentialError",
    "InconsistentSystemError",
    "SupercriticalCouplingError",
    "match_coefficients",
    "coulomb_levels",
    "oscillator_levels",
    "lennard_jones_solution",
    "residual_verify",
    "residual_detail",
    "infrared_radius",
    "lmin",
]


class UnsupportedPotentialError(ValueError):
    """Potential outside the four solvable families."""


class InconsistentSystemError(ValueError):
    def __init__(self, power: int, message: str):
        self.power = power
        super().__init__(f"{message} (offending power r^{power})")


class SupercriticalCouplingError(ValueError):
    """q^2 A^2 >= (j + 1/2)^2: no real Coulomb-type level."""


def _num(x):
    """Coerce to an exact sympy number when possible, else keep the float."""
    if isinstance(x, Fraction):
        return Rational(x.numerator, x.denominator)
    if isinstance(x, (int, Rational)):
        return sp.Integer(x) if isinstance(x, int) else x
    if isinstance(x, sp.Expr):
        return x
    if isinstance(x, float):
        return sp.Float(x)
    return sp.sympify(x)


@dataclass(frozen=True)
class PotentialSpec:
    """Laurent-polynomial potential with its Coulomb phase tracked separately.

    ``terms`` maps integer powers n to coefficients c_n of c_n r^n; the
    mandatory spherical-symmetry phase A/r lives in ``coulomb_phase`` rather
    than in terms[-1], and ``coupling`` is the charge strength q
    (q = sqrt(alpha_s) for the strong family, 1 where not applicable).
    """

    terms: dict
    coulomb_phase: object = 0
    coupling: object = 1

    def normalized(self) -> "PotentialSpec":
        terms = {int(n): _num(c) for n, c in self.terms.items() if _num(c) != 0}
        return PotentialSpec(terms, _num(self.coulomb_phase), _num(self.coupling))

    def to_dict(self) -> dict:
        return {
            "terms": {str(n): str(c) for n, c in self.terms.items()},
            "coulombPhase": str(self.coulomb_phase),
            "q": str(self.coupling),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PotentialSpec":
        def parse(v):
            s = str(v)
            try:
                return Fraction(s)
            except ValueError:
                return float(s)

        return cls(
            {int(k): parse(v) for k, v in d.get("terms", {}).items()},
            parse(d.get("coulombPhase", 0)),
            parse(d.get("q", 1)),
        )


@dataclass(frozen=True)
class QuantumNumbers:
    j: object  # half-integer total angular momentum
    n_prime: int = 0

    def __post_init__(self):
        if _num(self.j) < Rational(1, 2):
            raise ValueError("j must be at least 1/2")
        if self.n_prime < 0:
            raise ValueError("n' must be nonnegative")

    @property
    def j_plus_half(self):
        return _num(self.j) + Rational(1, 2)


@dataclass(frozen=True)
class Relation:
    """One Laurent-coefficient relation expr == 0 at the given power of r."""

    power: int
    expr: sp.Expr
    matched: bool
    note: str = ""


@dataclass(frozen=True)
class AnsatzBranch:
    """One sign branch of the solved trial state.

    ``exp_coefficients`` are the literal exponent-polynomial coefficients
    (exponent = -a r + sum_s b_s r^s); ``solver_vars`` carries the family's
    own variable names (b, c, ...) as they appear in the derivations.
    """

    a: sp.Expr
    exp_coefficients: dict
    gamma: sp.Expr
    n_prime: int
    solver_vars: dict
    subs: dict
    decaying: "bool | None" = None

    def to_dict(self) -> dict:
        return {
            "a": str(self.a),
            "expCoefficients": {str(k): str(v) for k, v in self.exp_coefficients.items()},
            "gamma": str(self.gamma),
            "nPrime": self.n_prime,
            "solverVars": {k: str(v) for k, v in self.solver_vars.items()},
            "decaying": self.decaying,
        }


@dataclass(frozen=True)
class LevelSeries:
    family: str  # coulomb | confining | oscillator
    levels: Callable  # (j, n_prime) -> E/m

    def table(self, js, n_primes) -> list[dict]:
        return [
            {"j": str(j), "nPrime": n, "E_over_m": float(self.levels(j, n))}
            for j in js
            for n in n_primes
        ]


@dataclass(frozen=True)
class AnsatzSolution:
    family: str
    potential: PotentialSpec
    quantum_numbers: QuantumNumbers
    branches: tuple[AnsatzBranch, ...]
    relations: tuple[Relation, ...]
    level_series: "LevelSeries | None" = None

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "potential": self.potential.to_dict(),
            "j": str(self.quantum_numbers.j),
            "nPrime": self.quantum_numbers.n_prime,
            "branches": [b.to_dict() for b in self.branches],
            "relations": [
                {"power": r.power, "expr": str(r.expr), "matched": r.matched, "note": r.note}
                for r in self.relations
            ],
        }


# solver symbols
_a, _b, _c, _g0, _gt = sp.symbols("a b c gamma0 gammat")
E_SYM, M_SYM = sp.symbols("E m")


def _detect_family(V: PotentialSpec) -> str:
    powers = sorted(V.terms)
    positive = [n for n in powers if n > 0]
    negative = [n for n in powers if n < 0]
    if 0 in powers:
        raise UnsupportedPotentialError(
            "constant offsets must be absorbed into E before solving (E' = E - qC)"
        )
    if not powers:
        if V.coulomb_phase == 0:
            raise UnsupportedPotentialError("potential has no terms and no Coulomb phase")
        return "coulomb"
    if positive == [1] and not negative:
        return "confining"
    if positive == [2] and not negative:
        return "oscillator"
    if not positive and all(n <= -2 for n in negative):
        return "inverse"
    if positive == [1, 2]:
        raise InconsistentSystemError(3, "r and r^2 terms cannot be matched together")
    raise UnsupportedPotentialError(
        f"unsupported potential powers {powers}; supported: r, r^2, A/r, inverse powers <= -2"
    )


def _solve_confining(V, qn, E, m):
    q, A = V.coupling, V.coulomb_phase
    sigma = V.terms[1]
    J = qn.j_plus_half
    n = qn.n_prime
    relations = (
        Relation(2, q**2 * sigma**2 + 4 * _b**2, True),
        Relation(1, -2 * q * sigma * E + 4 * _a * _b, True),
        Relation(-1, 2 * q * A * E - 2 * _a * _gt, True),
        Relation(0, E**2 - 2 * q**2 * sigma * A + _a**2 - 4 * _b * _gt - m**2, False,
                 "left open by the three-equation solution"),
        Relation(-2, q**2 * A**2 + _gt**2 - J**2, False,
                 "left open by the three-equation solution"),
    )
    branches = []
    for s in (1, -1):
        b = s * I * q * sigma / 2
        a = q * sigma * E / (2 * b)
        gt = q * A * E / a
        branches.append(
            AnsatzBranch(
                a=a,
                exp_coefficients={2: -b},
                gamma=sp.expand(gt - 1 - n),
                n_prime=n,
                solver_vars={"b": b, "a": a, "gamma_plus_nu_plus_1": gt},
                subs={_a: a, _b: b, _gt: gt},
            )
        )
    return "confining", tuple(branches), relations, None


def _coulomb_gamma_t(qA, J):
    disc = J**2 - qA**2
    if disc.is_number and not disc.is_positive:
        raise SupercriticalCouplingError(
            f"q^2 A^2 = {qA**2} reaches (j+1/2)^2 = {J**2}: no subcritical solution"
        )
    return sqrt(disc)


def _solve_coulomb(V, qn, E, m):
    q, A = V.coupling, V.coulomb_phase
    qA = q * A
    J = qn.j_plus_half
    n = qn.n_prime
    relations = (
        Relation(-2, qA**2 + _g0**2 - J**2, True,
                 "series head, nu = 0: the indicial condition fixing gamma"),
        Relation(-1, 2 * qA * E - 2 * _a * _gt, True, "series tail, nu = n'"),
        Relation(0, E**2 + _a**2 - M_SYM**2, True, "fixes the level through m"),
    )
    g0_root = _coulomb_gamma_t(qA, J)
    branches = []
    for s in (1, -1):
        g0 = s * g0_root          # gamma + 1
        gt = g0 + n               # gamma + nu + 1 at termination
        a = qA * E / gt
        m_expr = sqrt(E**2 + a**2)
        branches.append(
            AnsatzBranch(
                a=a,
                exp_coefficients={},
                gamma=g0 - 1,
                n_prime=n,
                solver_vars={"a": a, "one_plus_gamma": g0,
                             "gamma_plus_nu_plus_1": gt, "m": m_expr},
                subs={_a: a, _g0: g0, _gt: gt, M_SYM: m_expr},
                decaying=(s == 1),
            )
        )

    def levels(j, n_prime, _qA=qA):
        return coulomb_levels(float(_qA), j, n_prime)

    return "coulomb", tuple(branches), relations, LevelSeries("coulomb", levels)


def _oscillator_levels_callable():
    def levels(j, n_prime):
        return oscillator_levels(1, j, n_prime)

    return LevelSeries("oscillator", levels)


def _solve_oscillator(V, qn, E, m):
    q, A = V.coupling, V.coulomb_phase
    if A == 0:
        raise InconsistentSystemError(-2, "spherical symmetry forces a nonzero Coulomb phase term")
    w2 = q * V.terms[2]
    qA = q * A
    J = qn.j_plus_half
    n = qn.n_prime
    relations = (
        Relation(4, w2**2 + 9 * _b**2, True),
        Relation(1, 2 * w2 * qA + 6 * _b * _g0, True, "series head, nu = 0"),
        Relation(0, E**2 + _a**2 - m**2, True),
        Relation(-1, 2 * qA * E - 2 * _a * _gt, False,
                 "tail equation; with 1/r^2 it eliminates to the level formula"),
        Relation(-2, qA**2 + _gt**2 - J**2, False,
                 "tail equation; with 1/r it eliminates to the level formula"),
        Relation(2, 2 * E * w2 - 6 * _a * _b, False,
                 "cross term left open by the printed derivation"),
    )
    branches = []
    for s in (1, -1):
        b = s * I * w2 / 3
        g0 = -w2 * qA / (3 * b)  # 1 + gamma = -+ i q A
        gt = g0 + n
        a = sqrt(m**2 - E**2)
        # tail elimination: m^2 gt^2 / E^2 = J^2, the level series
        energy = -m * gt / J
        branches.append(
            AnsatzBranch(
                a=a,
                exp_coefficients={3: b},
                gamma=g0 - 1,
                n_prime=n,
                solver_vars={
                    "b": b,
                    "one_plus_gamma": g0,
                    "a": a,
                    "gamma_plus_nu_plus_1": gt,
                    "E_level": energy,
                },
                subs={_a: a, _b: b, _g0: g0, _gt: gt},
            )
        )
    return "oscillator", tuple(branches), relations, _oscillator_levels_callable()


def _solve_inverse(V, qn, E, m):
    q, A = V.coupling, V.coulomb_phase
    if A == 0:
        raise InconsistentSystemError(-2, "spherical symmetry forces a nonzero Coulomb phase term")
    qA = q * A
    J = qn.j_plus_half
    n = qn.n_prime
    powers = sorted(V.terms, reverse=True)  # closest to zero first
    if len(powers) > 2:
        raise UnsupportedPotentialError("at most two inverse-power terms are supported")
    coeffs = {p: q * V.terms[p] for p in powers}
    u_syms = {p: Symbol(f"u{abs(p)}") for p in powers}

    relations = [Relation(2 * powers[-1], coeffs[powers[-1]] ** 2 + u_syms[powers[-1]] ** 2, True)]
    for hi, lo in zip(powers, powers[1:]):
        relations.append(
            Relation(hi + lo, 2 * coeffs[hi] * coeffs[lo] + 2 * u_syms[hi] * u_syms[lo], True)
        )
    for p in powers:
        relations.append(
            Relation(p - 1, 2 * qA * coeffs[p] + 2 * u_syms[p] * _g0, True,
                     "series head, nu = 0")
        )
    relations += [
        Relation(0, E**2 + _a**2 - m**2, True),
        Relation(-1, 2 * qA * E - 2 * _a * _gt, False,
                 "tail equation; with 1/r^2 it eliminates to the level formula"),
        Relation(-2, qA**2 + _gt**2 - J**2, False,
                 "tail equation; with 1/r it eliminates to the level formula"),
    ]
    for p in powers:
        relations.append(
            Relation(p, 2 * E * coeffs[p] - 2 * _a * u_syms[p], False,
                     "cross term left open by the printed derivation")
        )

    branches = []
    for s in (1, -1):
        u_vals = {}
        deepest = powers[-1]
        u_vals[deepest] = s * I * coeffs[deepest]
        for hi, lo in zip(reversed(powers[:-1]), reversed(powers[1:])):
            u_vals[hi] = -coeffs[hi] * coeffs[lo] / u_vals[lo]
        g0 = -qA * coeffs[powers[0]] / u_vals[powers[0]]
        gt = g0 + n
        a = sqrt(m**2 - E**2)
        energy = -m * gt / J
        subs = {_a: a, _g0: g0, _gt: gt}
        subs.update({u_syms[p]: u_vals[p] for p in powers})
        named = {}
        for idx, p in enumerate(powers):
            named[chr(ord("b") + idx)] = u_vals[p]
        branches.append(
            AnsatzBranch(
                a=a,
                exp_coefficients={p + 1: u_vals[p] / (p + 1) for p in powers},
                gamma=g0 - 1,
                n_prime=n,
                solver_vars={
                    **named,
                    "one_plus_gamma": g0,
                    "a": a,
                    "gamma_plus_nu_plus_1": gt,
                    "E_level": energy,
                },
                subs=subs,
            )
        )
    return "inverse-multipole", tuple(branches), tuple(relations), _oscillator_levels_callable()


_FAMILY_SOLVERS = {
    "confining": _solve_confining,
    "coulomb": _solve_coulomb,
    "oscillator": _solve_oscillator,
    "inverse": _solve_inverse,
}


def match_coefficients(V: PotentialSpec, qn: QuantumNumbers, E=None, m=None) -> AnsatzSolution:
    """Solve the coefficient relations for a supported potential family.

    E and m default to symbols; families that pin one of them (the Coulomb
    series pins m through E, the oscillator-type families pin E through m)
    return the pinned expression inside each branch.  An explicit c_{-1}
    term folds into the phase with the family's bracket sign (negatively
    for the confining family, where potential terms enter as -qV).
    """
    Vn = V.normalized()
    c_m1 = Vn.terms.pop(-1, sp.Integer(0))
    family = _detect_family(Vn)
    if c_m1 != 0:
        phase = Vn.coulomb_phase + (-c_m1 if family == "confining" else c_m1)
        Vn = PotentialSpec(Vn.terms, phase, Vn.coupling)
    E = E_SYM if E is None else _num(E)
    m = M_SYM if m is None else _num(m)
    name, branches, relations, series = _FAMILY_SOLVERS[family](Vn, qn, E, m)
    return AnsatzSolution(name, Vn, qn, branches, tuple(relations), series)


def residual_detail(sol: AnsatzSolution, matched_only: bool = True) -> dict:
    """Per-(branch, power) residuals of the coefficient relations."""
    out = {}
    for bi, branch in enumerate(sol.branches):
        for rel in sol.relations:
            if matched_only and not rel.matched:
                continue
            value = sp.expand(sp.simplify(rel.expr.subs(branch.subs)))
            out[(bi, rel.power)] = value
    return out


def _residual_magnitude(value: sp.Expr) -> float:
    value = sp.expand(value)
    if value == 0:
        return 0.0
    free = sorted(value.free_symbols, key=str)
    if not free:
        return abs(complex(sp.N(value)))
    coeffs = sp.Poly(value, *free).coeffs()
    return max(abs(complex(sp.N(c))) for c in coeffs)


def residual_verify(V: PotentialSpec, sol: AnsatzSolution, qn: QuantumNumbers) -> float:
    """Largest absolute residual coefficient over the matched relations.

    Exact zero for rational inputs; bounded by 1e-10 for float inputs.
    Unsolved symbols (the free E and m of families that leave them open)
    are treated as polynomial variables, the residual being the largest
    coefficient magnitude.
    """
    worst = 0.0
    for value in residual_detail(sol, matched_only=True).values():
        worst = max(worst, _residual_magnitude(value))
    return worst


# ---------------------------------------------------------------------------
# closed-form level series
# ---------------------------------------------------------------------------


def coulomb_levels(qA: float, j, n_prime: int) -> float:
    """E/m = (1 + q^2 A^2 / (sqrt((j+1/2)^2 - q^2 A^2) + n')^2)^(-1/2)."""
    J = float(j) + 0.5
    if qA * qA >= J * J:
        raise SupercriticalCouplingError(f"q^2 A^2 = {qA*qA} >= (j+1/2)^2 = {J*J}")
    gt = math.sqrt(J * J - qA * qA) + n_prime
    return (1.0 + (qA * qA) / (gt * gt)) ** -0.5


def oscillator_levels(m, j, n_prime: int):
    """E = -m (1/2 + n') / (j + 1/2); equally spaced with spacing m/(j+1/2)."""
    if isinstance(m, (int, Fraction)) and isinstance(j, (int, Fraction)):
        return -Fraction(m) * (Fraction(1, 2) + n_prime) / (Fraction(j) + Fraction(1, 2))
    return -float(m) * (0.5 + n_prime) / (float(j) + 0.5)


def lennard_jones_solution(A, B, C, qn: QuantumNumbers) -> AnsatzSolution:
    """Inverse 6-12 potential B/r^6 - C/r^12 with Coulomb phase A.

    The two eigenvalue coefficients come out imaginary with opposite signs
    (c = +-iC against b = -+iB) and the level series is the oscillator one.
    """
    V = PotentialSpec({-6: B, -12: -_num(C)}, coulomb_phase=A)
    return match_coefficients(V, qn)


# ---------------------------------------------------------------------------
# confinement geometry
# ---------------------------------------------------------------------------


def infrared_radius(E: float, q: float, sigma: float) -> float:
    """Confinement radius r = 2E/(q sigma) where the running phase stalls.

    With E the (reduced) constituent energy in GeV, q the colour charge and
    sigma the string tension in GeV/fm, the result is in fm.  E = 1.5 GeV
    would give 7.5 fm; the quoted ~4 fm corresponds to the reduced-mass
    reading E ~ 0.75 GeV.  Both readings use this same formula.
    """
    if q <= 0 or sigma <= 0:
        raise ValueError("coupling and string tension must be positive")
    return 2.0 * E / (q * sigma)


def lmin(a: float, b: float, c: float) -> float:
    """Minimal total flux-tube length for three charges on a triangle a,b,c.

    L_min = sqrt((a^2+b^2+c^2)/2 + (sqrt(3)/2) sqrt((a+b+c)(-a+b+c)(a-b+c)(a+b-c))).
    For a = b = c this is 3 times the circumradius distance a/sqrt(3).
    """
    if min(a, b, c) < 0:
        raise ValueError("side lengths must be nonnegative")
    heron = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
    if heron < 0:
        raise ValueError(f"triangle inequality violated for sides {(a, b, c)}")
    return math.sqrt((a * a + b * b + c * c) / 2.0 + math.sqrt(3.0) / 2.0 * math.sqrt(heron))
