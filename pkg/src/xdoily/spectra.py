"""Closed-form and numeric spectra, and PPT-based classification.

The numeric route (eig_hermitian4, backed by LAPACK) acts as the oracle for
the closed forms.  Validity means the density matrix itself is positive
semidefinite; a valid state is entangled exactly when its partial transpose
has a negative eigenvalue, and separable otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import point_to_pauli
from .hyperplanes import group_of
from .states import (
    Group1Params,
    Group2Params,
    HyperplaneState,
    build_density_matrix,
    group2_state,
    partial_transpose,
)

# A closed-form-exact boundary state assembled in doubles can dip this far
# below zero; anything beyond it counts as genuinely negative.
VALIDITY_TOL = 1e-10


def eig_hermitian4(h, hermitian_tol: float = 1e-12) -> np.ndarray:
    """Ascending eigenvalues of a 4x4 Hermitian matrix.

    Rejects inputs that are not Hermitian to within hermitian_tol.
    """
    h = np.asarray(h, dtype=complex)
    if h.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {h.shape}")
    if np.max(np.abs(h - h.conj().T)) > hermitian_tol:
        raise ValueError("matrix is not Hermitian to tolerance")
    return np.linalg.eigvalsh(h)


def group1_eigenvalues(params: Group1Params) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form spectrum of a Group-1 state; equals that of its partial transpose."""
    plus = float(np.linalg.norm(params.beta + params.tau))
    minus = float(np.linalg.norm(params.beta - params.tau))
    t0 = params.tau0
    eigs = np.sort(
        [
            0.25 * (1.0 + t0 + plus),
            0.25 * (1.0 + t0 - plus),
            0.25 * (1.0 - t0 + minus),
            0.25 * (1.0 - t0 - minus),
        ]
    )
    return eigs, eigs.copy()


def group2_eigenvalues(params: Group2Params) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form spectra (rho, partial transpose) of a Group-2 family.

    The two forms differ by swapping the spectra; params.t selects which one
    applies.
    """
    b1, b2 = params.m[0, 0], params.m[0, 1]
    b3, b4 = params.m[1, 0], params.m[1, 1]
    t1, t2 = params.tau1, params.tau2
    b0 = params.beta0

    def half_spectrum(shift: float, radical: float) -> list[float]:
        return [0.25 * (1.0 + shift + radical), 0.25 * (1.0 + shift - radical)]

    rad_diag = float(np.sqrt((b1 - b4) ** 2 + (b2 + b3) ** 2 + (t1 + t2) ** 2))
    rad_sum = float(np.sqrt((b1 + b4) ** 2 + (b2 - b3) ** 2 + (t1 - t2) ** 2))
    lam = np.sort(half_spectrum(b0, rad_diag) + half_spectrum(-b0, rad_sum))

    rad_diag_g = float(np.sqrt((b1 + b4) ** 2 + (b2 - b3) ** 2 + (t1 + t2) ** 2))
    rad_sum_g = float(np.sqrt((b1 - b4) ** 2 + (b2 + b3) ** 2 + (t1 - t2) ** 2))
    gam = np.sort(half_spectrum(b0, rad_diag_g) + half_spectrum(-b0, rad_sum_g))

    if params.t == 2:
        lam, gam = gam, lam
    elif params.t != 1:
        raise ValueError(f"type tag must be 1 or 2, got {params.t!r}")
    return lam, gam


@dataclass
class SpectralReport:
    eigs_rho: np.ndarray
    eigs_gamma: np.ndarray
    valid: bool
    separable: bool
    entangled: bool

    @property
    def verdict(self) -> str:
        if not self.valid:
            return "invalid"
        return "entangled" if self.entangled else "separable"

    def to_json(self) -> dict:
        return {
            "eigenvalues": [float(x) for x in self.eigs_rho],
            "eigenvalues_gamma": [float(x) for x in self.eigs_gamma],
            "valid": self.valid,
            "separable": self.separable,
            "entangled": self.entangled,
        }


def classify_matrix(rho, tol: float = VALIDITY_TOL) -> SpectralReport:
    """PPT classification of an arbitrary 4x4 Hermitian matrix."""
    eigs_rho = eig_hermitian4(rho)
    eigs_gamma = eig_hermitian4(partial_transpose(rho))
    valid = bool(eigs_rho[0] >= -tol)
    entangled = bool(valid and eigs_gamma[0] < -tol)
    separable = bool(valid and not entangled)
    return SpectralReport(eigs_rho, eigs_gamma, valid, separable, entangled)


def classify(state: HyperplaneState, tol: float = VALIDITY_TOL) -> SpectralReport:
    """Assemble the state's density matrix and classify it via PPT."""
    return classify_matrix(build_density_matrix(state), tol=tol)


_TYPE_CACHE: dict[tuple, int] = {}


def detect_type(center: int, draws: int = 120, seed: int = 20, tol: float = 1e-8) -> int:
    """Resolve which closed eigenvalue form a Group-2 family follows.

    Both forms are evaluated against the numeric eigensolver over seeded
    random coefficient draws on the family's perp-set; the one that matches
    every draw wins.  Failure of both (or of neither to separate) signals a
    parameter-embedding bug and raises.
    """
    if group_of(center) != 2:
        raise ValueError("detect_type needs a Group-2 center")
    key = (center, draws, seed, tol)
    cached = _TYPE_CACHE.get(key)
    if cached is not None:
        return cached
    rng = np.random.default_rng((seed, center))
    alive = {1: True, 2: True}
    for _ in range(draws):
        tau1, tau2, beta0 = rng.uniform(-1.0, 1.0, 3)
        m = rng.uniform(-1.0, 1.0, (2, 2))
        state = group2_state(center, tau1, tau2, beta0, m)
        rho = build_density_matrix(state)
        eigs = eig_hermitian4(rho)
        eigs_g = eig_hermitian4(partial_transpose(rho))
        for t in (1, 2):
            if not alive[t]:
                continue
            lam, gam = group2_eigenvalues(Group2Params(tau1, tau2, beta0, m, t))
            if np.max(np.abs(lam - eigs)) > tol or np.max(np.abs(gam - eigs_g)) > tol:
                alive[t] = False
        if not alive[1] and not alive[2]:
            break
    label = point_to_pauli(center)
    if alive[1] == alive[2]:
        state_word = "neither" if not alive[1] else "both"
        raise RuntimeError(f"type detection for {label} matched {state_word} forms")
    t = 1 if alive[1] else 2
    _TYPE_CACHE[key] = t
    return t


def detected_types(draws: int = 120, seed: int = 20) -> dict[str, int]:
    """Type tag for each of the nine Group-2 families, keyed by center label."""
    from .gf2 import POINTS

    return {
        point_to_pauli(p): detect_type(p, draws=draws, seed=seed)
        for p in POINTS
        if group_of(p) == 2
    }
