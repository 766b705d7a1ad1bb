"""Working substances: single qubit, coupled qutrit, and two-qubit XXZ.

Each substance exposes its spectrum as affine functions of the adiabatic
field B with stable level labels. Levels whose energy does not depend on
B are "idle": they exchange heat between the strokes but contribute no
work, which is the mechanism behind efficiencies away from 1 - Bi/Bf.

All three substances have B-independent eigenvectors, so level tracking
across the adiabatic stroke is exact label bookkeeping.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import HermitianOperator, hermitian_eigensystem
from .errors import InvalidField
from .tolerances import TOL

_SQ2 = np.sqrt(2.0)


class SubstanceKind(enum.Enum):
    QUBIT = "qubit"
    QUTRIT = "qutrit"
    XXZ = "xxz"


@dataclass(frozen=True)
class SubstanceSpec:
    """Which working substance, plus its coupling constants.

    Fields that do not apply to the chosen kind must stay zero; use the
    qubit()/qutrit()/xxz() constructors.
    """

    kind: SubstanceKind
    J: float = 0.0
    Jxy: float = 0.0
    Jz: float = 0.0

    def __post_init__(self):
        for name in ("J", "Jxy", "Jz"):
            if not np.isfinite(getattr(self, name)):
                raise InvalidField(f"{name} must be finite")
        used = {SubstanceKind.QUBIT: (), SubstanceKind.QUTRIT: ("J",),
                SubstanceKind.XXZ: ("Jxy", "Jz")}[self.kind]
        for name in ("J", "Jxy", "Jz"):
            if name not in used and getattr(self, name) != 0.0:
                raise InvalidField(f"{name} is meaningless for {self.kind.value}")

    @classmethod
    def qubit(cls) -> "SubstanceSpec":
        return cls(kind=SubstanceKind.QUBIT)

    @classmethod
    def qutrit(cls, J: float) -> "SubstanceSpec":
        return cls(kind=SubstanceKind.QUTRIT, J=J)

    @classmethod
    def xxz(cls, Jxy: float, Jz: float) -> "SubstanceSpec":
        return cls(kind=SubstanceKind.XXZ, Jxy=Jxy, Jz=Jz)

    @property
    def dim(self) -> int:
        return {SubstanceKind.QUBIT: 2, SubstanceKind.QUTRIT: 3,
                SubstanceKind.XXZ: 4}[self.kind]


@dataclass(frozen=True)
class Level:
    label: str
    energy: float
    idle: bool


@dataclass(frozen=True)
class LabelledSpectrum:
    """Energy levels with stable labels, evaluated at one field value."""

    levels: tuple
    field_value: float

    @property
    def labels(self) -> tuple:
        return tuple(lv.label for lv in self.levels)

    @property
    def energies(self) -> np.ndarray:
        return np.array([lv.energy for lv in self.levels])

    @property
    def idle_labels(self) -> tuple:
        return tuple(lv.label for lv in self.levels if lv.idle)


def _level_table(spec: SubstanceSpec):
    """Per-label (label, slope, offset, idle): energy(B) = slope*B + offset."""
    if spec.kind is SubstanceKind.QUBIT:
        return (("+B", 1.0, 0.0, False),
                ("-B", -1.0, 0.0, False))
    if spec.kind is SubstanceKind.QUTRIT:
        return (("+B", 1.0, 0.0, False),
                ("-B", -1.0, 0.0, False),
                ("-J", 0.0, -spec.J, True))
    return (("2B", 2.0, 0.0, False),
            ("2(Jxy-Jz)", 0.0, 2.0 * (spec.Jxy - spec.Jz), True),
            ("-2(Jxy+Jz)", 0.0, -2.0 * (spec.Jxy + spec.Jz), True),
            ("-2B", -2.0, 0.0, False))


def labelled_basis(spec: SubstanceSpec) -> dict:
    """Eigenvector per label (B-independent for all three substances)."""
    if spec.kind is SubstanceKind.QUBIT:
        return {"+B": np.array([1, 0], dtype=complex),
                "-B": np.array([0, 1], dtype=complex)}
    if spec.kind is SubstanceKind.QUTRIT:
        return {"+B": np.array([1, 1, 0], dtype=complex) / _SQ2,
                "-B": np.array([-1, 1, 0], dtype=complex) / _SQ2,
                "-J": np.array([0, 0, 1], dtype=complex)}
    return {"2B": np.array([1, 0, 0, 0], dtype=complex),
            "2(Jxy-Jz)": np.array([0, 1, 1, 0], dtype=complex) / _SQ2,
            "-2(Jxy+Jz)": np.array([0, 1, -1, 0], dtype=complex) / _SQ2,
            "-2B": np.array([0, 0, 0, 1], dtype=complex)}


def build_hamiltonian(spec: SubstanceSpec, B: float) -> HermitianOperator:
    """Hamiltonian matrix at field B, with its eigensystem.

    Qubit: diag(B, -B). Qutrit: B swaps |0>,|1> plus a fixed level at -J.
    XXZ (computational basis |00>,|01>,|10>,|11>): Zeeman term 2B on the
    fully aligned states, Jxy exchange on the middle block, Jz shifts so
    the aligned states sit exactly at +-2B.
    """
    if not (np.isfinite(B) and B > 0):
        raise InvalidField(f"field B must be positive, got {B}")
    if spec.kind is SubstanceKind.QUBIT:
        m = np.diag([B, -B]).astype(complex)
    elif spec.kind is SubstanceKind.QUTRIT:
        m = np.array([[0, B, 0],
                      [B, 0, 0],
                      [0, 0, -spec.J]], dtype=complex)
    else:
        m = np.diag([2 * B, -2 * spec.Jz, -2 * spec.Jz, -2 * B]).astype(complex)
        m[1, 2] = m[2, 1] = 2 * spec.Jxy
    return hermitian_eigensystem(m)


def labelled_spectrum(spec: SubstanceSpec, B: float) -> LabelledSpectrum:
    """Closed-form energies with stable labels and idle flags (no solver)."""
    if not (np.isfinite(B) and B > 0):
        raise InvalidField(f"field B must be positive, got {B}")
    levels = tuple(Level(label, slope * B + offset, idle)
                   for label, slope, offset, idle in _level_table(spec))
    return LabelledSpectrum(levels=levels, field_value=B)


def check_uniform_gap_ratio(spec: SubstanceSpec, Bi: float, Bf: float):
    """Return r = Bf/Bi if every level gap scales by r, else None."""
    if not 0 < Bi < Bf:
        raise InvalidField(f"need 0 < Bi < Bf, got Bi={Bi}, Bf={Bf}")
    ei = labelled_spectrum(spec, Bi).energies
    ef = labelled_spectrum(spec, Bf).energies
    r = Bf / Bi
    for n in range(len(ei)):
        for m in range(n + 1, len(ei)):
            if abs((ef[n] - ef[m]) - r * (ei[n] - ei[m])) > TOL.gap_ratio:
                return None
    return r


def detect_level_crossing(spec: SubstanceSpec, Bi: float, Bf: float):
    """Field values in [Bi, Bf] where two labelled energies coincide.

    Identically degenerate label pairs (equal slope and offset) are not
    crossings and are excluded; only transversal intersections count.
    """
    if not 0 < Bi < Bf:
        raise InvalidField(f"need 0 < Bi < Bf, got Bi={Bi}, Bf={Bf}")
    table = _level_table(spec)
    found = []
    for n in range(len(table)):
        for m in range(n + 1, len(table)):
            la, sa, ca, _ = table[n]
            lb, sb, cb, _ = table[m]
            if sa == sb:
                continue
            bstar = (cb - ca) / (sa - sb)
            if Bi <= bstar <= Bf:
                found.append(((la, lb), float(bstar)))
    return found
