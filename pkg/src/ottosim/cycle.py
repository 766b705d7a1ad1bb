"""Four-stroke Otto cycle execution and heat/work/efficiency accounting.

Stroke order: cold-bath thermalization at field Bi; adiabatic ramp
Bi -> Bf with populations pinned to their labelled levels; energy
injection at Bf (hot-bath thermalization or a non-selective measurement);
adiabatic return Bf -> Bi. Signs: W < 0 means work extracted, Qh > 0
means the stroke-3 source delivered energy into the substance.

Per-level bookkeeping is exact label arithmetic: q_h[l] = E_l(Bf) dp_l
and q_c[l] = -E_l(Bi) dp_l, so conservation W = -(Qh + Qc), the flux
decompositions, and the idle passthrough q_c = -q_h hold to rounding.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

import numpy as np

from .channels import KrausChannel
from .core import BathSpec, boltzmann_populations
from .errors import (DimensionMismatch, InvalidField, MeasurementCoolsWarning,
                     NotAnEngine)
from .substances import (SubstanceSpec, detect_level_crossing, labelled_basis,
                         labelled_spectrum, check_uniform_gap_ratio)
from .tolerances import TOL


@dataclass(frozen=True)
class TwoBath:
    """Stroke 3 thermalizes with a hot bath."""

    hot: BathSpec


@dataclass(frozen=True)
class Measurement:
    """Stroke 3 applies a non-selective quantum channel."""

    channel: KrausChannel


Protocol = Union[TwoBath, Measurement]


@dataclass(frozen=True)
class CycleConfig:
    spec: SubstanceSpec
    Bi: float
    Bf: float
    cold: BathSpec
    protocol: Protocol

    def __post_init__(self):
        if not (np.isfinite(self.Bi) and np.isfinite(self.Bf)
                and 0 < self.Bi < self.Bf):
            raise InvalidField(f"need 0 < Bi < Bf, got Bi={self.Bi}, Bf={self.Bf}")
        if isinstance(self.protocol, Measurement):
            if self.protocol.channel.dim != self.spec.dim:
                raise DimensionMismatch(
                    f"channel dim {self.protocol.channel.dim} vs substance "
                    f"dim {self.spec.dim}")
        elif not isinstance(self.protocol, TwoBath):
            raise InvalidField(f"unknown protocol {self.protocol!r}")


@dataclass(frozen=True)
class CycleRecord:
    """Complete accounting for one cycle.

    eta is None unless engine_mode (W < 0 and Qh > 0); eta_raw carries
    the ratio -W/Qh whenever Qh is nonzero, which sweeps use to plot the
    non-engine tail. Maps are keyed by level label.
    """

    labels: tuple
    idle_labels: tuple
    Qh: float
    Qc: float
    W: float
    eta: Optional[float]
    eta_raw: Optional[float]
    eta0: float
    per_level_flux_hot: dict
    per_level_flux_cold: dict
    delta_p: dict
    populations_cold: dict
    populations_hot: dict
    engine_mode: bool
    crossing_warning: bool


def run_cycle(cfg: CycleConfig) -> CycleRecord:
    """Execute one Otto cycle and return its full record.

    The cold-stroke populations are Boltzmann weights of the labelled
    spectrum at Bi. Under TwoBath the stroke-3 populations are Boltzmann
    weights at Bf; under Measurement the thermal state is carried to Bf
    along its labels and pushed through the channel's transfer matrix in
    the labelled eigenbasis at Bf. A cooling measurement (Qh < 0) raises
    MeasurementCoolsWarning but still returns the record.
    """
    spec = cfg.spec
    spec_i = labelled_spectrum(spec, cfg.Bi)
    spec_f = labelled_spectrum(spec, cfg.Bf)
    labels = spec_i.labels
    ei = spec_i.energies
    ef = spec_f.energies
    p_cold = boltzmann_populations(ei, cfg.cold.beta)

    if isinstance(cfg.protocol, TwoBath):
        p_hot = boltzmann_populations(ef, cfg.protocol.hot.beta)
    else:
        # The input state is diagonal in the labelled basis, so only the
        # diagonal transfer p' = T p matters.
        basis = labelled_basis(spec)
        vecs = [basis[label] for label in labels]
        t = np.zeros((spec.dim, spec.dim))
        for a in range(spec.dim):
            for b in range(spec.dim):
                t[a, b] = sum(abs(vecs[a].conj() @ m @ vecs[b]) ** 2
                              for m in cfg.protocol.channel.operators)
        p_hot = t @ p_cold
        # Levels the channel leaves alone must not pick up rounding noise:
        # a stray 1e-16 would misclassify a no-op stroke as an engine.
        still = np.abs(p_hot - p_cold) <= TOL.population_snap
        p_hot[still] = p_cold[still]

    flux_hot = {}
    flux_cold = {}
    delta_p = {}
    for k, label in enumerate(labels):
        dp = float(p_hot[k]) - float(p_cold[k])
        delta_p[label] = dp
        flux_hot[label] = float(ef[k]) * dp
        flux_cold[label] = -float(ei[k]) * dp
    Qh = sum(flux_hot.values())
    Qc = sum(flux_cold.values())
    W = -(Qh + Qc)
    eta0 = 1.0 - cfg.Bi / cfg.Bf
    eta_raw = (-W / Qh) if Qh != 0.0 else None
    engine = (W < 0.0) and (Qh > 0.0)

    if isinstance(cfg.protocol, Measurement) and Qh < 0.0:
        warnings.warn("measurement stroke removed energy (Qh < 0)",
                      MeasurementCoolsWarning, stacklevel=2)

    return CycleRecord(
        labels=labels,
        idle_labels=spec_i.idle_labels,
        Qh=Qh, Qc=Qc, W=W,
        eta=eta_raw if engine else None,
        eta_raw=eta_raw,
        eta0=eta0,
        per_level_flux_hot=flux_hot,
        per_level_flux_cold=flux_cold,
        delta_p=delta_p,
        populations_cold={l: float(p) for l, p in zip(labels, p_cold)},
        populations_hot={l: float(p) for l, p in zip(labels, p_hot)},
        engine_mode=engine,
        crossing_warning=bool(detect_level_crossing(spec, cfg.Bi, cfg.Bf)),
    )


class ClosedForm(NamedTuple):
    Qh: float
    Qc: float
    W: float
    eta: Optional[float]


def closed_form_two_bath_qutrit(J: float, Bi: float, Bf: float,
                                beta_c: float, beta_h: float) -> ClosedForm:
    """Analytic two-bath qutrit heats, work, and efficiency.

    Direct evaluation of the closed forms; W obeys the extraction sign
    convention W = -(Qh + Qc). The efficiency comes from the compact
    ratio (Bf - Bi)/(Bf + Omega J); when its denominator vanishes eta
    is returned as None.
    """
    if not 0 < Bi < Bf:
        raise InvalidField(f"need 0 < Bi < Bf, got Bi={Bi}, Bf={Bf}")
    if beta_c <= 0 or beta_h <= 0:
        raise InvalidField("bath inverse temperatures must be positive")
    zh = 2.0 * math.cosh(beta_h * Bf) + math.exp(beta_h * J)
    zc = 2.0 * math.cosh(beta_c * Bi) + math.exp(beta_c * J)
    hot_num = (2.0 * math.exp(-beta_h * Bf) + math.exp(beta_h * J))
    cold_num = (2.0 * math.exp(-beta_c * Bi) + math.exp(beta_c * J))
    Qh = ((hot_num * Bf - J * math.exp(beta_h * J)) / zh
          - (cold_num * Bf - J * math.exp(beta_c * J)) / zc)
    Qc = (-(hot_num * Bi - J * math.exp(beta_h * J)) / zh
          + (cold_num * Bi - J * math.exp(beta_c * J)) / zc)
    W = -(Qh + Qc)

    num = (math.exp(beta_c * (Bi + J)) + math.exp(beta_c * (Bi + J) + 2 * beta_h * Bf)
           - math.exp(beta_h * (Bf + J) + 2 * beta_c * Bi)
           - math.exp(beta_h * (Bf + J)))
    den = (2.0 * (math.exp(2 * beta_c * Bi) - math.exp(2 * beta_h * Bf))
           + math.exp(beta_c * (Bi + J)) - math.exp(beta_h * (Bf + J))
           - math.exp(beta_c * (Bi + J) + 2 * beta_h * Bf)
           + math.exp(beta_h * (Bf + J) + 2 * beta_c * Bi))
    eta = None
    if den != 0.0:
        omega = num / den
        ratio_den = Bf + omega * J
        if ratio_den != 0.0:
            eta = (Bf - Bi) / ratio_den
    return ClosedForm(Qh=Qh, Qc=Qc, W=W, eta=eta)


def efficiency_ratio_identity(rec: CycleRecord) -> float:
    """1 - (sum of idle-level hot fluxes)/Qh; equals eta/eta0 in engine mode."""
    if not rec.engine_mode:
        raise NotAnEngine("efficiency ratio is defined only in engine mode")
    idle_sum = sum(rec.per_level_flux_hot[label] for label in rec.idle_labels)
    return 1.0 - idle_sum / rec.Qh


def uniform_ratio_efficiency_check(cfg: CycleConfig) -> Optional[float]:
    """1 - 1/r when all gaps scale uniformly by r = Bf/Bi, else None.

    When this returns a value, run_cycle's efficiency equals it for any
    hot bath and any unital measurement channel.
    """
    r = check_uniform_gap_ratio(cfg.spec, cfg.Bi, cfg.Bf)
    return None if r is None else 1.0 - 1.0 / r
