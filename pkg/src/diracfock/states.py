"""Wave-function families: one normalized 16-component vector per wave vector.

The two-component form superposes the empty state with one occupied mode,

    sqrt(1 - rho) e^{i chi} |empty>  +  sqrt(rho) e^{i xi} |{s}>,

where rho, chi, xi depend on |k| only.  The general form supplies all
sixteen coefficients as a function of the wave vector and is checked for
normalization at the sampled nodes.

Each family carries its own momentum cutoff so the quadrature knows where
the density stops contributing; hard cutoffs (step, tabulated) are exact
support boundaries and are not rescaled by refinement.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .fock import DIM

_TAIL = 40.0  # profile argument beyond which exp(-2r) tails are negligible


def _zero(r: np.ndarray) -> np.ndarray:
    return np.zeros_like(np.asarray(r, dtype=float))


@dataclass(frozen=True)
class RhoStateFamily:
    """Two-component family with radial density rho and phases chi, xi."""

    occupied: int
    rho: Callable[[np.ndarray], np.ndarray]
    chi: Callable[[np.ndarray], np.ndarray] = _zero
    xi: Callable[[np.ndarray], np.ndarray] = _zero
    k_cutoff: float = _TAIL
    hard_cutoff: bool = False
    # |k| values where the density is only piecewise smooth, if any
    breakpoints: tuple = ()

    def __post_init__(self):
        if self.occupied not in (1, 2, 3, 4):
            raise ValueError(f"occupied mode must be 1..4, got {self.occupied}")
        if self.k_cutoff <= 0:
            raise ValueError("k_cutoff must be positive")

    @property
    def charge_sign(self) -> int:
        """+1 when the occupied mode is a particle mode, -1 otherwise."""
        return 1 if self.occupied in (1, 2) else -1

    def radial_density(self, kmag) -> np.ndarray:
        out = np.asarray(self.rho(np.asarray(kmag, dtype=float)), dtype=float)
        if np.any(out < -1e-12) or np.any(out > 1.0 + 1e-12):
            raise ValueError("density values must lie in [0, 1]")
        return np.clip(out, 0.0, 1.0)

    def coefficients(self, kvecs: np.ndarray) -> np.ndarray:
        """Stack of 16-component state vectors, one per wave vector row."""
        kvecs = np.atleast_2d(np.asarray(kvecs, dtype=float))
        r = np.linalg.norm(kvecs, axis=-1)
        rho = self.radial_density(r)
        z = np.zeros((len(r), DIM), dtype=np.complex128)
        z[:, 0] = np.sqrt(1.0 - rho) * np.exp(1.0j * np.asarray(self.chi(r), dtype=float))
        z[:, 1 << (self.occupied - 1)] = np.sqrt(rho) * np.exp(
            1.0j * np.asarray(self.xi(r), dtype=float)
        )
        return z


@dataclass(frozen=True)
class GeneralStateFamily:
    """Family given by an arbitrary coefficient map k -> 16 complex values."""

    z: Callable[[np.ndarray], np.ndarray]
    k_cutoff: float
    hard_cutoff: bool = False
    breakpoints: tuple = ()

    def __post_init__(self):
        if self.k_cutoff <= 0:
            raise ValueError("k_cutoff must be positive")

    def coefficients(self, kvecs: np.ndarray) -> np.ndarray:
        kvecs = np.atleast_2d(np.asarray(kvecs, dtype=float))
        out = np.asarray(self.z(kvecs), dtype=np.complex128)
        if out.shape != (len(kvecs), DIM):
            raise ValueError(f"coefficient map must return shape (n, {DIM})")
        norms = np.sum(np.abs(out) ** 2, axis=-1)
        if np.max(np.abs(norms - 1.0)) > 1e-12:
            raise ValueError("state family is not normalized at sampled wave vectors")
        return out


StateFamily = RhoStateFamily | GeneralStateFamily


def vacuum_family() -> RhoStateFamily:
    return RhoStateFamily(occupied=1, rho=_zero)


def sech2_family(a: float, occupied: int = 1, chi=_zero, xi=_zero) -> RhoStateFamily:
    """rho(k) = 1/cosh^2(a|k|), the worked spin-up example for occupied=1."""
    if a <= 0:
        raise ValueError("scale a must be positive")
    return RhoStateFamily(occupied, lambda r: 1.0 / np.cosh(a * r) ** 2, chi, xi, _TAIL / a)


def gaussian_family(a: float, occupied: int = 1, chi=_zero, xi=_zero) -> RhoStateFamily:
    if a <= 0:
        raise ValueError("scale a must be positive")
    # exp(-(a k)^2) reaches the sech-like tail level at a k = sqrt(2 * _TAIL)
    return RhoStateFamily(
        occupied, lambda r: np.exp(-((a * r) ** 2)), chi, xi, np.sqrt(2.0 * _TAIL) / a
    )


def step_family(k_max: float, occupied: int = 1, chi=_zero, xi=_zero) -> RhoStateFamily:
    """Fully occupied ball: rho = 1 up to k_max, then 0."""
    if k_max <= 0:
        raise ValueError("k_max must be positive")
    return RhoStateFamily(
        occupied,
        lambda r: np.where(np.asarray(r) <= k_max, 1.0, 0.0),
        chi,
        xi,
        k_max,
        hard_cutoff=True,
    )


def tabulated_family(kpoints, values, occupied: int = 1, chi=_zero, xi=_zero) -> RhoStateFamily:
    """Linear interpolation through (|k|, rho) samples, zero outside."""
    kpoints = np.asarray(kpoints, dtype=float)
    values = np.asarray(values, dtype=float)
    if kpoints.ndim != 1 or kpoints.shape != values.shape or len(kpoints) < 2:
        raise ValueError("need matching 1d arrays with at least two samples")
    if np.any(np.diff(kpoints) <= 0):
        raise ValueError("sample points must increase")
    if np.any(values < 0) or np.any(values > 1):
        raise ValueError("density samples must lie in [0, 1]")

    def rho(r):
        return np.interp(np.asarray(r, dtype=float), kpoints, values, left=values[0], right=0.0)

    return RhoStateFamily(
        occupied,
        rho,
        chi,
        xi,
        float(kpoints[-1]),
        hard_cutoff=True,
        breakpoints=tuple(kpoints),
    )


PROFILE_LIBRARY = {
    "sech2": sech2_family,
    "gaussian": gaussian_family,
    "step": step_family,
}


def family_from_config(config: dict) -> RhoStateFamily:
    """Build a two-component family from a parsed config mapping.

    Keys: profile (sech2 | gaussian | step | tabulated), the profile's scale
    (a or kmax, or k/rho sample arrays), optional occupied mode and constant
    phases chi, xi.
    """
    if not isinstance(config, dict):
        raise ValueError("state config must be a mapping")
    profile = config.get("profile")
    occupied = int(config.get("occupied", 1))
    chi0 = float(config.get("chi", 0.0))
    xi0 = float(config.get("xi", 0.0))

    def chi(r):
        return np.full_like(np.asarray(r, dtype=float), chi0)

    def xi(r):
        return np.full_like(np.asarray(r, dtype=float), xi0)

    if profile in ("sech2", "gaussian"):
        return PROFILE_LIBRARY[profile](float(config.get("a", 1.0)), occupied, chi, xi)
    if profile == "step":
        if "kmax" not in config:
            raise ValueError("step profile needs kmax")
        return step_family(float(config["kmax"]), occupied, chi, xi)
    if profile == "tabulated":
        if "k" not in config or "rho" not in config:
            raise ValueError("tabulated profile needs k and rho arrays")
        return tabulated_family(config["k"], config["rho"], occupied, chi, xi)
    raise ValueError(f"unknown profile {profile!r}")
