"""Exact arithmetic in the 64-element Dirac group and its 32-blade real algebra.

The algebra is generated by three commuting layers:

* a central complex unit ``i`` with i^2 = -1,
* one quaternion copy ``qi, qj, qk`` (the charge-side units),
* three multivariate vector units ``vi, vj, vk`` with vv = +1 and
  vi*vj = i*vk (cyclic), vi*vj = -vj*vi.

A basis blade is one product i^e * q * v, giving 2*4*4 = 32 blades; with both
signs these form a group of order 64.  Internally the vector units are the
complexified second quaternion copy (v = i*q2), so a single composition rule
(two quaternion tables plus the central i) yields every product.

Multivectors are rational linear combinations of blades.  All arithmetic is
exact; there is no floating point anywhere in this module except in the
convenience conversion of the matrix oracle to numpy complex output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _iproduct

import numpy as np

__all__ = [
    "BasisBlade",
    "GroupElement",
    "Multivector",
    "GammaPentad",
    "DualAlgebra",
    "DualElement",
    "blade_mul",
    "blade_name",
    "parse_blade",
    "generate_group",
    "group_center",
    "matrix_rep",
    "matrix_rep_complex",
    "matrices_equal",
    "dual_element_image",
    "gamma_pentad",
    "dual_generate",
    "dual_to_dirac_map",
    "element_order_census",
    "Cq",
    "MV",
]

# ---------------------------------------------------------------------------
# blade composition
# ---------------------------------------------------------------------------

# quaternion unit table, indices 0..3 = (1, i, j, k): QUAT[a][b] = (sign, a*b)
QUAT = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)

# i^n reduced to (sign, n mod 2)
_IPOW = ((1, 0), (1, 1), (-1, 0), (-1, 1))


def _blade_index(i_power: int, q1: int, vec: int) -> int:
    return (i_power << 4) | (q1 << 2) | vec


def _blade_parts(idx: int) -> tuple[int, int, int]:
    return (idx >> 4) & 1, (idx >> 2) & 3, idx & 3


def _compose(idx_a: int, idx_b: int) -> tuple[int, int]:
    """Product of two blades through the underlying C (x) H (x) H structure.

    Each vector unit carries a hidden central-i factor (v = i*q2), so the
    i-power bookkeeping below is what turns two quaternion tables into the
    mixed rules vv = +1 and vi*vj = i*vk.
    """
    ea, qa, va = _blade_parts(idx_a)
    eb, qb, vb = _blade_parts(idx_b)
    sq, q = QUAT[qa][qb]
    sv, v = QUAT[va][vb]
    ipow = ea + eb + (va != 0) + (vb != 0) - (v != 0)
    si, e = _IPOW[ipow % 4]
    return sq * sv * si, _blade_index(e, q, v)


MUL_SIGN = [[0] * 32 for _ in range(32)]
MUL_IDX = [[0] * 32 for _ in range(32)]
for _a, _b in _iproduct(range(32), range(32)):
    MUL_SIGN[_a][_b], MUL_IDX[_a][_b] = _compose(_a, _b)

_Q_NAMES = ("", "qi", "qj", "qk")
_V_NAMES = ("", "vi", "vj", "vk")


def blade_name(idx: int) -> str:
    """Dot-separated factor name, fixed order i, q, v (e.g. ``"i.qj.vk"``)."""
    e, q, v = _blade_parts(idx)
    parts = []
    if e:
        parts.append("i")
    if q:
        parts.append(_Q_NAMES[q])
    if v:
        parts.append(_V_NAMES[v])
    return ".".join(parts) if parts else "1"


def parse_blade(name: str) -> "BasisBlade":
    """Inverse of :func:`blade_name`; accepts factors in any order."""
    e, q, v = 0, 0, 0
    if name.strip() != "1":
        for part in name.strip().split("."):
            if part == "i":
                if e:
                    raise ValueError(f"repeated factor in blade name {name!r}")
                e = 1
            elif part in _Q_NAMES:
                if q:
                    raise ValueError(f"repeated factor in blade name {name!r}")
                q = _Q_NAMES.index(part)
            elif part in _V_NAMES:
                if v:
                    raise ValueError(f"repeated factor in blade name {name!r}")
                v = _V_NAMES.index(part)
            else:
                raise ValueError(f"unknown factor {part!r} in blade name {name!r}")
    return BasisBlade(e, q, v)


@dataclass(frozen=True, order=True)
class BasisBlade:
    """One of the 32 basis blades i^e * q1 * v."""

    i_power: int
    q1: int
    vec: int

    def __post_init__(self):
        if self.i_power not in (0, 1) or not 0 <= self.q1 <= 3 or not 0 <= self.vec <= 3:
            raise ValueError(f"invalid blade coordinates {(self.i_power, self.q1, self.vec)}")

    @property
    def index(self) -> int:
        return _blade_index(self.i_power, self.q1, self.vec)

    @classmethod
    def from_index(cls, idx: int) -> "BasisBlade":
        return cls(*_blade_parts(idx))

    @property
    def name(self) -> str:
        return blade_name(self.index)

    def __repr__(self):
        return f"BasisBlade({self.name})"


def blade_mul(a: BasisBlade, b: BasisBlade) -> tuple[int, BasisBlade]:
    """Signed product of two blades: returns (sign, blade)."""
    s, idx = MUL_SIGN[a.index][b.index], MUL_IDX[a.index][b.index]
    return s, BasisBlade.from_index(idx)


@dataclass(frozen=True)
class GroupElement:
    """A signed blade; the 64 of them form the Dirac group."""

    sign: int
    blade: BasisBlade

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +/-1")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        s, b = blade_mul(self.blade, other.blade)
        return GroupElement(self.sign * other.sign * s, b)

    def inverse(self) -> "GroupElement":
        # order of every element divides 4; cube of x is its inverse iff x^4 = 1
        x = self * self * self
        return x if (x * self) == IDENTITY else self * self

    def order(self) -> int:
        n, x = 1, self
        while x != IDENTITY:
            x, n = x * self, n + 1
        return n

    def __repr__(self):
        return f"{'+' if self.sign > 0 else '-'}{self.blade.name}"


IDENTITY = GroupElement(1, BasisBlade(0, 0, 0))


def generate_group(generators: "set[GroupElement] | None" = None) -> set[GroupElement]:
    """Closure of the generators under multiplication.

    Default generators are -1, the central i, the quaternion units and the
    vector units; the closure then has exactly 64 elements.
    """
    if generators is None:
        generators = {
            GroupElement(-1, BasisBlade(0, 0, 0)),
            GroupElement(1, BasisBlade(1, 0, 0)),
            GroupElement(1, BasisBlade(0, 1, 0)),
            GroupElement(1, BasisBlade(0, 2, 0)),
            GroupElement(1, BasisBlade(0, 3, 0)),
            GroupElement(1, BasisBlade(0, 0, 1)),
            GroupElement(1, BasisBlade(0, 0, 2)),
            GroupElement(1, BasisBlade(0, 0, 3)),
        }
    closure = {IDENTITY} | set(generators)
    frontier = set(closure)
    while frontier:
        new = {a * b for a in frontier for b in closure} | {a * b for a in closure for b in frontier}
        frontier = new - closure
        closure |= frontier
    return closure


def group_center(group: "set[GroupElement] | None" = None) -> set[GroupElement]:
    """Elements commuting with the whole group (brute-force scan)."""
    if group is None:
        group = generate_group()
    return {g for g in group if all(g * h == h * g for h in group)}


# ---------------------------------------------------------------------------
# multivectors
# ---------------------------------------------------------------------------


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"multivector coefficients must be exact rationals, got {type(x).__name__}")


class Multivector:
    """Exact rational linear combination of the 32 basis blades."""

    __slots__ = ("_c",)

    def __init__(self, coefficients=None):
        c: dict[int, Fraction] = {}
        if coefficients:
            for blade, coef in coefficients.items():
                idx = blade.index if isinstance(blade, BasisBlade) else int(blade)
                f = _as_fraction(coef)
                if f:
                    c[idx] = c.get(idx, Fraction(0)) + f
        self._c = {k: v for k, v in c.items() if v}

    # construction helpers -------------------------------------------------
    @classmethod
    def from_blade(cls, blade: BasisBlade, coef=1) -> "Multivector":
        return cls({blade.index: coef})

    @classmethod
    def from_name(cls, name: str, coef=1) -> "Multivector":
        return cls({parse_blade(name).index: coef})

    @classmethod
    def scalar(cls, value) -> "Multivector":
        return cls({0: value})

    @classmethod
    def zero(cls) -> "Multivector":
        return cls()

    # inspection ------------------------------------------------------------
    def coefficient(self, blade) -> Fraction:
        idx = blade.index if isinstance(blade, BasisBlade) else parse_blade(blade).index
        return self._c.get(idx, Fraction(0))

    @property
    def scalar_part(self) -> Fraction:
        return self._c.get(0, Fraction(0))

    def blades(self) -> dict[BasisBlade, Fraction]:
        return {BasisBlade.from_index(i): v for i, v in sorted(self._c.items())}

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def is_scalar(self) -> bool:
        return not self._c or set(self._c) == {0}

    # arithmetic ------------------------------------------------------------
    def __add__(self, other: "Multivector") -> "Multivector":
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, Fraction(0)) + v
        out = Multivector.__new__(Multivector)
        out._c = {k: v for k, v in c.items() if v}
        return out

    def __neg__(self) -> "Multivector":
        out = Multivector.__new__(Multivector)
        out._c = {k: -v for k, v in self._c.items()}
        return out

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            c: dict[int, Fraction] = {}
            for ka, va in self._c.items():
                srow, irow = MUL_SIGN[ka], MUL_IDX[ka]
                for kb, vb in other._c.items():
                    k = irow[kb]
                    c[k] = c.get(k, Fraction(0)) + srow[kb] * va * vb
            out = Multivector.__new__(Multivector)
            out._c = {k: v for k, v in c.items() if v}
            return out
        f = _as_fraction(other)
        out = Multivector.__new__(Multivector)
        out._c = {k: v * f for k, v in self._c.items()} if f else {}
        return out

    def __rmul__(self, other):
        return self.__mul__(other)  # scalars commute

    def __eq__(self, other):
        return isinstance(other, Multivector) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for idx, coef in sorted(self._c.items()):
            name = blade_name(idx)
            mag = abs(coef)
            term = name if (mag == 1 and name != "1") else (str(mag) if name == "1" else f"{mag}*{name}")
            parts.append(("- " if coef < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    # serialization ----------------------------------------------------------
    def to_dict(self) -> dict[str, str]:
        return {blade_name(i): str(v) for i, v in sorted(self._c.items())}

    @classmethod
    def from_dict(cls, d: dict) -> "Multivector":
        return cls({parse_blade(k).index: Fraction(v) for k, v in d.items()})


def MV(name: str, coef=1) -> Multivector:
    """Shorthand for a single-blade multivector, e.g. ``MV("i.qk")``."""
    return Multivector.from_name(name, coef)


def mv_mul(a: Multivector, b: Multivector) -> Multivector:
    """Exact product; bilinear extension of :func:`blade_mul`."""
    return a * b


# ---------------------------------------------------------------------------
# matrix oracle
# ---------------------------------------------------------------------------


class Cq:
    """Exact complex number with Fraction real and imaginary parts.

    Minimal scalar type for the 4x4 matrix oracle, so that the oracle check
    against blade multiplication is exact rather than floating point.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __add__(self, other):
        other = Cq._coerce(other)
        return Cq(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = Cq._coerce(other)
        return Cq(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return Cq(-self.re, -self.im)

    def __mul__(self, other):
        other = Cq._coerce(other)
        return Cq(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = Cq._coerce(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return f"Cq({self.re}, {self.im})"

    @staticmethod
    def _coerce(x) -> "Cq":
        if isinstance(x, Cq):
            return x
        return Cq(_as_fraction(x))


_C0, _C1, _CI = Cq(0), Cq(1), Cq(0, 1)

# standard 2x2 complex images of the quaternion units 1, i, j, k
_Q2X2 = (
    ((_C1, _C0), (_C0, _C1)),
    ((_CI, _C0), (_C0, -_CI)),
    ((_C0, _C1), (-_C1, _C0)),
    ((_C0, _CI), (_CI, _C0)),
)


def _qmat(u: int) -> np.ndarray:
    return np.array(_Q2X2[u], dtype=object)


def _blade_matrix(idx: int) -> np.ndarray:
    """4x4 image: q1 on the first tensor factor, the hidden q2 on the second,
    vector units carrying their central-i factor (v = i*q2)."""
    e, q, v = _blade_parts(idx)
    m = np.kron(_qmat(q), _qmat(v))
    phase = (e + (1 if v else 0)) % 4
    for _ in range(phase):
        m = m * _CI
    return m


BLADE_MATRICES = tuple(_blade_matrix(i) for i in range(32))

_ZERO4 = np.array([[_C0] * 4 for _ in range(4)], dtype=object)


def matrix_rep(x: Multivector) -> np.ndarray:
    """4x4 matrix image with exact complex-rational entries.

    Ring homomorphism: matrix_rep(a*b) equals matrix_rep(a) @ matrix_rep(b)
    entrywise, with exact equality.
    """
    m = _ZERO4
    for idx, coef in x._c.items():
        m = m + BLADE_MATRICES[idx] * Cq(coef)
    return m


def matrix_rep_complex(x: Multivector) -> np.ndarray:
    """Float view of :func:`matrix_rep` for display and numpy interop."""
    return np.array([[complex(e) for e in row] for row in matrix_rep(x)], dtype=complex)


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return all(x == y for x, y in zip(a.flat, b.flat))


# ---------------------------------------------------------------------------
# gamma pentads
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GammaPentad:
    """Five mutually anticommuting elements with squares (+1, -1, -1, -1, +1)."""

    gamma0: Multivector
    gamma1: Multivector
    gamma2: Multivector
    gamma3: Multivector
    gamma5: Multivector
    representation_tag: str

    def __iter__(self):
        return iter((self.gamma0, self.gamma1, self.gamma2, self.gamma3, self.gamma5))

    @property
    def spatial(self) -> tuple[Multivector, Multivector, Multivector]:
        return (self.gamma1, self.gamma2, self.gamma3)


def gamma_pentad(tag: str = "mapping-2") -> GammaPentad:
    """The two unit mappings onto the gamma operators.

    mapping-2 (the pinned default): g0 = i*qk, g_a = qi*v_a, g5 = i*qj.
    mapping-1: g0 = -i*qi, g_a = qk*v_a, g5 = i*qj; left multiplication by qj
    carries mapping-1 onto mapping-2.
    """
    if tag == "mapping-2":
        return GammaPentad(
            MV("i.qk"), MV("qi.vi"), MV("qi.vj"), MV("qi.vk"), MV("i.qj"), tag
        )
    if tag == "mapping-1":
        return GammaPentad(
            MV("i.qi", -1), MV("qk.vi"), MV("qk.vj"), MV("qk.vk"), MV("i.qj"), tag
        )
    raise ValueError(f"unknown pentad tag {tag!r} (expected 'mapping-1' or 'mapping-2')")


# ---------------------------------------------------------------------------
# iterative dualling
# ---------------------------------------------------------------------------

DUAL_STEPS = (
    (2, "conjugation", None),
    (4, "complexification", "i1"),
    (8, "dimensionalization", "j1"),
    (16, "complexification", "i2"),
    (32, "dimensionalization", "j2"),
    (64, "complexification", "i3"),
)

_DUAL_GENS = ("i1", "j1", "i2", "j2", "i3")
# each generator squares to -1; these pairs anticommute, all others commute.
# The pairing is what makes the order-64 stage close onto the Dirac group:
# (i1, j1) span the charge quaternions, i2 is the central i, and (j2, i3)
# span the hidden second quaternion copy behind the vector units.
_ANTI = {("i1", "j1"), ("j2", "i3")}


def _anticommute(a: str, b: str) -> bool:
    return (a, b) in _ANTI or (b, a) in _ANTI


@dataclass(frozen=True)
class DualElement:
    """Signed word in the dualling generators (exponent bitmask per generator)."""

    sign: int
    flags: tuple[int, ...]  # one bit per generator in _DUAL_GENS order

    def __mul__(self, other: "DualElement") -> "DualElement":
        sign = self.sign * other.sign
        # move each factor of `other` left past the tail of `self`
        for ib, gb in enumerate(_DUAL_GENS):
            if not other.flags[ib]:
                continue
            for ia in range(len(_DUAL_GENS) - 1, ib, -1):
                if self.flags[ia] and _anticommute(_DUAL_GENS[ia], gb):
                    sign = -sign
            if self.flags[ib]:
                sign = -sign  # g*g = -1
        flags = tuple(a ^ b for a, b in zip(self.flags, other.flags))
        return DualElement(sign, flags)

    def order(self) -> int:
        n, x = 1, self
        while x != DUAL_ONE:
            x, n = x * self, n + 1
        return n

    def __repr__(self):
        word = "".join(g for g, f in zip(_DUAL_GENS, self.flags) if f) or "1"
        return ("+" if self.sign > 0 else "-") + word


DUAL_ONE = DualElement(1, (0, 0, 0, 0, 0))


@dataclass(frozen=True)
class DualAlgebra:
    order: int
    elements: frozenset[DualElement]
    history: tuple[tuple[int, str], ...]


def dual_generate(target_order: int) -> DualAlgebra:
    """Iterative dualling: each step doubles the element count.

    The step sequence is conjugation, then alternating complexification and
    dimensionalization; the order-8 stage is the quaternion group and the
    order-64 stage is isomorphic to the full Dirac group.
    """
    valid = [o for o, _, _ in DUAL_STEPS]
    if target_order not in valid:
        raise ValueError(f"target order must be one of {valid}, got {target_order}")
    elements = {DUAL_ONE}
    history = []
    for order, step, gen in DUAL_STEPS:
        if order == 2:
            elements |= {DualElement(-1, e.flags) for e in elements}
        else:
            gidx = _DUAL_GENS.index(gen)
            flags = tuple(1 if i == gidx else 0 for i in range(len(_DUAL_GENS)))
            g = DualElement(1, flags)
            elements |= {e * g for e in elements}
        history.append((order, step))
        if order == target_order:
            break
    return DualAlgebra(target_order, frozenset(elements), tuple(history))


def dual_to_dirac_map() -> dict[str, GroupElement]:
    """Candidate generator map onto the Dirac group.

    i1, j1 -> charge quaternions qi, qj; i2 -> the central i; j2, i3 -> the
    hidden second quaternion copy (-i*vj, -i*vi) behind the vector units.
    """
    return {
        "i1": GroupElement(1, BasisBlade(0, 1, 0)),
        "j1": GroupElement(1, BasisBlade(0, 2, 0)),
        "i2": GroupElement(1, BasisBlade(1, 0, 0)),
        "j2": GroupElement(-1, BasisBlade(1, 0, 2)),
        "i3": GroupElement(-1, BasisBlade(1, 0, 1)),
    }


def dual_element_image(e: DualElement, gen_map: "dict[str, GroupElement] | None" = None) -> GroupElement:
    gen_map = gen_map or dual_to_dirac_map()
    out = GroupElement(e.sign, BasisBlade(0, 0, 0))
    for g, f in zip(_DUAL_GENS, e.flags):
        if f:
            out = out * gen_map[g]
    return out


def element_order_census(elements) -> dict[int, int]:
    census: dict[int, int] = {}
    for e in elements:
        n = e.order()
        census[n] = census.get(n, 0) + 1
    return census
