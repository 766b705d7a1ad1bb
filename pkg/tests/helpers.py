"""Shared test utilities: cycle shorthands and independent brute-force routes.

The oracle_* functions are deliberately plain numpy re-derivations that do
not touch the library's code paths, so tests can compare two routes.
"""

import numpy as np

import ottosim as o


def two_bath(spec, Bi=3.0, Bf=4.0, beta_c=1.0, beta_h=0.5):
    cfg = o.CycleConfig(spec=spec, Bi=Bi, Bf=Bf, cold=o.BathSpec(beta_c),
                        protocol=o.TwoBath(hot=o.BathSpec(beta_h)))
    return o.run_cycle(cfg)


def measurement(spec, channel, Bi=3.0, Bf=4.0, beta_c=1.0):
    cfg = o.CycleConfig(spec=spec, Bi=Bi, Bf=Bf, cold=o.BathSpec(beta_c),
                        protocol=o.Measurement(channel))
    return o.run_cycle(cfg)


def su3(theta, phi, chi, psi):
    return o.su3_projective_channel(
        o.Su3Angles(theta=theta, phi=phi, chi=chi, psi=psi))


def idle_flux_sum(rec):
    return sum(rec.per_level_flux_hot[label] for label in rec.idle_labels)


def random_hermitian(rng, dim):
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return 0.5 * (a + a.conj().T)


def random_density(rng, dim):
    """Random full-rank mixed state."""
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    p = a @ a.conj().T
    return p / np.trace(p).real


def random_direction(rng):
    v = rng.standard_normal(3)
    v = v / np.linalg.norm(v)
    return o.SpinDirection(*v)


# Independent routes (no library calls).

def oracle_boltzmann(energies, beta):
    e = np.asarray(energies, dtype=float)
    w = np.exp(-beta * (e - e.min()))
    return w / w.sum()


def oracle_apply(kraus_mats, rho):
    out = np.zeros_like(np.asarray(rho, dtype=complex))
    for m in kraus_mats:
        out += m @ rho @ np.asarray(m).conj().T
    return out


def oracle_transfer(kraus_mats, vectors):
    d = len(vectors)
    t = np.zeros((d, d))
    for a in range(d):
        for b in range(d):
            t[a, b] = sum(abs(vectors[a].conj() @ m @ vectors[b]) ** 2
                          for m in kraus_mats)
    return t
