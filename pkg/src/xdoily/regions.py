"""Planar disc geometry of validity, separability and entanglement.

For a Group-2 family with maximally mixed subsystems (both tau coefficients
zero) the classification reduces to disc memberships in the plane: with
C = (beta4, beta3), E = (beta1, -beta2), r = 1 - |beta0| and R = 1 + |beta0|,
the state is valid when s*E lies in (C,r) n (-C,R), separable when E lies in
(C,r) n (-C,r), and entangled otherwise, where s = (-1)^t sgn(beta0) and
sgn(0) is taken as +1.

The dual route plays the same game with the mirror pair: discs centered at
D = (beta1, beta2) and membership of F = (beta4, -beta3).  (Centering the
dual discs at E instead breaks the equivalence with the spectral route; the
D-centered form is the one that agrees with PPT on every draw.)

Boundary membership uses closed discs with the same 1e-10 tolerance as the
spectral validity test, so both routes classify boundary states alike.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import POINTS, point_to_pauli
from .hyperplanes import group_of
from .spectra import classify, detect_type
from .states import Group2Params, extract_group2_params, group2_state

MEMBERSHIP_TOL = 1e-10

CLASSES = ("invalid", "separable", "entangled")


@dataclass
class RegionGeometry:
    """Planar data of a tau=0 Group-2 family."""

    c: np.ndarray  # (beta4, beta3)
    d: np.ndarray  # (beta1, beta2); stored for completeness, drives no logic
    e: np.ndarray  # (beta1, -beta2)
    f: np.ndarray  # (beta4, -beta3)
    r: float       # 1 - |beta0|
    big_r: float   # 1 + |beta0|
    sign_factor: float  # (-1)^t * sgn(beta0), sgn(0) := +1

    @property
    def l_plus(self) -> float:
        """Distance from C to -E."""
        return float(np.hypot(*(self.c + self.e)))

    @property
    def l_minus(self) -> float:
        """Distance from C to E."""
        return float(np.hypot(*(self.c - self.e)))


def region_geometry(params: Group2Params) -> RegionGeometry:
    b1, b2 = float(params.m[0, 0]), float(params.m[0, 1])
    b3, b4 = float(params.m[1, 0]), float(params.m[1, 1])
    sign = 1.0 if params.beta0 >= 0.0 else -1.0
    return RegionGeometry(
        c=np.array([b4, b3]),
        d=np.array([b1, b2]),
        e=np.array([b1, -b2]),
        f=np.array([b4, -b3]),
        r=1.0 - abs(params.beta0),
        big_r=1.0 + abs(params.beta0),
        sign_factor=((-1.0) ** params.t) * sign,
    )


def l_plus(params: Group2Params) -> float:
    """sqrt((b1 + b4)^2 + (b2 - b3)^2)."""
    return region_geometry(params).l_plus


def l_minus(params: Group2Params) -> float:
    """sqrt((b1 - b4)^2 + (b2 + b3)^2)."""
    return region_geometry(params).l_minus


def _inside(point: np.ndarray, center: np.ndarray, radius: float, tol: float) -> bool:
    return bool(np.hypot(*(point - center)) <= radius + tol)


def _require_tau_zero(params: Group2Params, tol: float) -> None:
    if abs(params.tau1) > tol or abs(params.tau2) > tol:
        raise ValueError("region classification requires tau1 = tau2 = 0")


def classify_by_region(params: Group2Params, tol: float = MEMBERSHIP_TOL) -> str:
    """Disc-membership classification; agrees with the PPT route."""
    _require_tau_zero(params, tol)
    g = region_geometry(params)
    e_signed = g.sign_factor * g.e
    valid = _inside(e_signed, g.c, g.r, tol) and _inside(e_signed, -g.c, g.big_r, tol)
    if not valid:
        return "invalid"
    if _inside(g.e, g.c, g.r, tol) and _inside(g.e, -g.c, g.r, tol):
        return "separable"
    return "entangled"


def dual_classify_by_region(params: Group2Params, tol: float = MEMBERSHIP_TOL) -> str:
    """Mirror-route classification through D-centered discs and the point F."""
    _require_tau_zero(params, tol)
    g = region_geometry(params)
    f_signed = g.sign_factor * g.f
    valid = _inside(f_signed, g.d, g.r, tol) and _inside(f_signed, -g.d, g.big_r, tol)
    if not valid:
        return "invalid"
    if _inside(g.f, g.d, g.r, tol) and _inside(g.f, -g.d, g.r, tol):
        return "separable"
    return "entangled"


def region_emptiness(beta0: float, beta3: float, beta4: float) -> tuple[bool, bool]:
    """(validity region nonempty, separability region nonempty)."""
    c_sq = beta3 * beta3 + beta4 * beta4
    r = 1.0 - abs(beta0)
    return (c_sq <= 1.0, c_sq <= r * r)


def sample_region(
    beta0: float, beta3: float, beta4: float, t: int, resolution: int
) -> list[tuple[float, float, str]]:
    """Classify the cell centers of a resolution^2 grid over [-2, 2]^2.

    Rows run over beta1 (outer) then beta2 (inner); each row carries the cell
    center coordinates and its class.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    if t not in (1, 2):
        raise ValueError("type tag must be 1 or 2")
    step = 4.0 / resolution
    centers = [-2.0 + (i + 0.5) * step for i in range(resolution)]
    rows = []
    for b1 in centers:
        for b2 in centers:
            params = Group2Params(
                0.0, 0.0, beta0, np.array([[b1, b2], [beta3, beta4]]), t
            )
            rows.append((b1, b2, classify_by_region(params)))
    return rows


def region_csv(rows) -> str:
    lines = ["beta1,beta2,class"]
    lines += [f"{b1!r},{b2!r},{cls}" for b1, b2, cls in rows]
    return "\n".join(lines) + "\n"


def region_params_for_state(state, tol: float = 1e-12) -> Group2Params | None:
    """Group-2 parameters of a state when the disc route applies, else None.

    The route needs a Group-2 perp-set or a grid other than Q0, with every
    Bloch (tau) coefficient zero.
    """
    h = state.hyperplane
    if h.kind == "ovoid":
        return None
    if h.kind == "grid" and h.index == 0:
        return None
    if h.kind == "perp" and group_of(h.center) != 2:
        return None
    if np.max(np.abs(state.coeffs.tau_a)) > tol or np.max(np.abs(state.coeffs.tau_b)) > tol:
        return None
    return extract_group2_params(state)


@dataclass
class SignRuleReport:
    """Fuzz outcome for the sign rule: beta0 < 0 iff L+ > L- on valid entangled states."""

    draws: int
    tested: int
    counterexamples: list

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def _first_type1_center() -> int:
    for p in POINTS:
        if group_of(p) == 2 and detect_type(p) == 1:
            return p
    raise RuntimeError("no family follows the first closed form")


def sign_rule_fuzz(draws: int, seed: int = 42, center: int | None = None) -> SignRuleReport:
    """Check beta0 < 0 iff L+ > L- over random valid entangled tau=0 states.

    The rule is stated for the first closed form, so draws are embedded in a
    family of type 1; validity and entanglement are decided by the numeric
    PPT route, keeping the check independent of the disc geometry.
    """
    if draws < 0:
        raise ValueError("draws must be nonnegative")
    if center is None:
        center = _first_type1_center()
    elif detect_type(center) != 1:
        raise ValueError(f"{point_to_pauli(center)} is not a type-1 family")
    rng = np.random.default_rng(seed)
    tested = 0
    counterexamples = []
    for _ in range(draws):
        beta0 = float(rng.uniform(-1.0, 1.0))
        m = rng.uniform(-1.0, 1.0, (2, 2))
        state = group2_state(center, 0.0, 0.0, beta0, m)
        report = classify(state)
        if not (report.valid and report.entangled) or abs(beta0) <= 1e-12:
            continue
        tested += 1
        params = Group2Params(0.0, 0.0, beta0, m, 1)
        if (beta0 < 0.0) != (l_plus(params) > l_minus(params)):
            if len(counterexamples) < 10:
                counterexamples.append(
                    {"beta0": beta0, "m": m.tolist(), "l_plus": l_plus(params), "l_minus": l_minus(params)}
                )
    return SignRuleReport(draws=draws, tested=tested, counterexamples=counterexamples)
