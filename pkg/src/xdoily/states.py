"""Two-qubit density matrices carried by hyperplanes of W(3,2).

A hyperplane state is a hyperplane together with one real coefficient per
Pauli label, supported only on the hyperplane's points.  Its density matrix
is rho = (I + sum_k c_k P_k) / 4, Hermitian with unit trace by construction;
positive semidefiniteness is a property decided spectrally, never assumed.

Coefficients enter and leave as sparse maps from two-letter Pauli labels to
reals.  A coefficient keyed by a label outside the chosen hyperplane is a
validation error rather than being dropped silently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import POINTS, pauli_to_point, point_to_pauli
from .hyperplanes import (
    Hyperplane,
    associated_center,
    group_of,
    hyperplane_by_id,
    hyperplane_by_points,
    perp_set,
    quadric_q0,
)

AXES = "xyz"
_AXIS = {"x": 0, "y": 1, "z": 2}

_P1 = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_PAULI4 = {a + b: np.kron(_P1[a], _P1[b]) for a in "IXYZ" for b in "IXYZ"}
for _m in _PAULI4.values():
    _m.setflags(write=False)

# All 15 nontrivial labels in canonical point order.
ALL_LABELS = tuple(point_to_pauli(p) for p in POINTS)

_AXIS_FOR_PAULI = {"X": "x", "Y": "y", "Z": "z"}


class StateDescriptorError(ValueError):
    """Malformed state descriptor or coefficient off the hyperplane."""


def pauli_matrix(label: str) -> np.ndarray:
    """The 4x4 matrix of a two-letter Pauli label (read-only view)."""
    m = _PAULI4.get(label)
    if m is None:
        raise ValueError(f"not a two-qubit Pauli label: {label!r}")
    return m


def _validate_label(label) -> str:
    if not isinstance(label, str) or label not in _PAULI4 or label == "II":
        raise StateDescriptorError(f"not a coefficient label: {label!r}")
    return label


@dataclass
class StateCoeffs:
    """Dense coefficient storage for the 15 nontrivial Pauli slots.

    tau_a holds the XI, YI, ZI coefficients, tau_b the IX, IY, IZ ones, and
    beta[i, j] multiplies sigma_i (x) sigma_j with i, j running over x, y, z.
    """

    tau_a: np.ndarray
    tau_b: np.ndarray
    beta: np.ndarray

    @classmethod
    def zeros(cls) -> "StateCoeffs":
        return cls(np.zeros(3), np.zeros(3), np.zeros((3, 3)))

    @classmethod
    def from_labels(cls, mapping) -> "StateCoeffs":
        c = cls.zeros()
        for label, value in mapping.items():
            c.set(label, value)
        return c

    def get(self, label: str) -> float:
        a, b = _validate_label(label)
        if a == "I":
            return float(self.tau_b[_AXIS[_AXIS_FOR_PAULI[b]]])
        if b == "I":
            return float(self.tau_a[_AXIS[_AXIS_FOR_PAULI[a]]])
        return float(self.beta[_AXIS[_AXIS_FOR_PAULI[a]], _AXIS[_AXIS_FOR_PAULI[b]]])

    def set(self, label: str, value) -> None:
        a, b = _validate_label(label)
        value = float(value)
        if not np.isfinite(value):
            raise StateDescriptorError(f"coefficient for {label} is not finite")
        if a == "I":
            self.tau_b[_AXIS[_AXIS_FOR_PAULI[b]]] = value
        elif b == "I":
            self.tau_a[_AXIS[_AXIS_FOR_PAULI[a]]] = value
        else:
            self.beta[_AXIS[_AXIS_FOR_PAULI[a]], _AXIS[_AXIS_FOR_PAULI[b]]] = value

    def label_map(self) -> dict[str, float]:
        return {label: self.get(label) for label in ALL_LABELS}

    def support(self) -> tuple[str, ...]:
        return tuple(label for label in ALL_LABELS if self.get(label) != 0.0)

    def copy(self) -> "StateCoeffs":
        return StateCoeffs(self.tau_a.copy(), self.tau_b.copy(), self.beta.copy())


@dataclass
class HyperplaneState:
    hyperplane: Hyperplane
    coeffs: StateCoeffs

    def __post_init__(self) -> None:
        allowed = set(self.hyperplane.labels())
        for label in self.coeffs.support():
            if label not in allowed:
                raise StateDescriptorError(
                    f"coefficient on {label} is off the hyperplane "
                    f"({self.hyperplane.kind} {self.hyperplane.id})"
                )


def hyperplane_state(hyperplane: Hyperplane, coefficients=None) -> HyperplaneState:
    """Build a state from a sparse label-to-value map, validating support."""
    coefficients = dict(coefficients or {})
    allowed = set(hyperplane.labels())
    coeffs = StateCoeffs.zeros()
    for label, value in coefficients.items():
        label = _validate_label(label)
        if label not in allowed:
            raise StateDescriptorError(
                f"label {label} is not on the hyperplane ({hyperplane.kind} {hyperplane.id})"
            )
        coeffs.set(label, value)
    return HyperplaneState(hyperplane, coeffs)


def state_from_descriptor(obj) -> HyperplaneState:
    """Parse {"hyperplane": {"kind": ..., "id": ...}, "coefficients": {...}}."""
    if not isinstance(obj, dict):
        raise StateDescriptorError("state descriptor must be a JSON object")
    hp = obj.get("hyperplane")
    if not isinstance(hp, dict) or "kind" not in hp or "id" not in hp:
        raise StateDescriptorError('descriptor needs "hyperplane": {"kind", "id"}')
    coefficients = obj.get("coefficients", {})
    if not isinstance(coefficients, dict):
        raise StateDescriptorError('"coefficients" must be an object')
    extra = set(obj) - {"hyperplane", "coefficients"}
    if extra:
        raise StateDescriptorError(f"unknown descriptor fields: {sorted(extra)}")
    try:
        hyperplane = hyperplane_by_id(hp["kind"], hp["id"])
    except ValueError as exc:
        raise StateDescriptorError(str(exc)) from None
    for value in coefficients.values():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise StateDescriptorError(f"coefficient values must be numbers, got {value!r}")
    return hyperplane_state(hyperplane, coefficients)


def state_descriptor(state: HyperplaneState) -> dict:
    """Inverse of state_from_descriptor (nonzero coefficients only)."""
    return {
        "hyperplane": {"kind": state.hyperplane.kind, "id": state.hyperplane.id},
        "coefficients": {label: state.coeffs.get(label) for label in state.coeffs.support()},
    }


def density_from_coeffs(coeffs: StateCoeffs) -> np.ndarray:
    rho = np.eye(4, dtype=complex)
    for label in ALL_LABELS:
        v = coeffs.get(label)
        if v:
            rho = rho + v * _PAULI4[label]
    return rho / 4.0


def build_density_matrix(state: HyperplaneState) -> np.ndarray:
    """rho = (I + sum_k c_k P_k) / 4."""
    return density_from_coeffs(state.coeffs)


def decompose_density_matrix(rho) -> StateCoeffs:
    """Recover Pauli coefficients through c_k = Re tr(rho P_k)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    c = StateCoeffs.zeros()
    for label in ALL_LABELS:
        c.set(label, float(np.trace(rho @ _PAULI4[label]).real))
    return c


def partial_transpose(rho) -> np.ndarray:
    """Transpose over the second tensor factor: entry (2a+b, 2c+d) -> (2a+d, 2c+b)."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return r.transpose(0, 3, 2, 1).reshape(4, 4)


def reduced_states(rho) -> tuple[np.ndarray, np.ndarray]:
    """Partial traces (rho_A, rho_B) over the second and first factor."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return np.einsum("abcb->ac", r), np.einsum("abad->bd", r)


@dataclass
class Group1Params:
    """Generalised parameters of a Group-1 perp-set state.

    tau0 is the coefficient of the center's own observable, tau the Bloch
    coordinates of the other subsystem, and beta[i] the correlation
    coefficient sharing its single-qubit axis with tau[i].
    """

    tau0: float
    tau: np.ndarray
    beta: np.ndarray


@dataclass
class Group2Params:
    """Generalised parameters of a Group-2 family.

    beta0 is the coefficient of the family center's observable; m is the
    complementary 2x2 correlation block, rows following the remaining
    first-factor axes and columns the remaining second-factor axes, both in
    x, y, z order.  t tags which of the two closed eigenvalue forms the
    family follows.
    """

    tau1: float
    tau2: float
    beta0: float
    m: np.ndarray
    t: int


def extract_group1_params(state: HyperplaneState) -> Group1Params:
    h = state.hyperplane
    if h.kind != "perp" or group_of(h.center) != 1:
        raise ValueError("extract_group1_params needs a Group-1 perp-set state")
    label = point_to_pauli(h.center)
    a, b = label
    c = state.coeffs
    if a == "I":
        tau0 = c.tau_b[_AXIS[_AXIS_FOR_PAULI[b]]]
        tau = c.tau_a.copy()
        beta = c.beta[:, _AXIS[_AXIS_FOR_PAULI[b]]].copy()
    else:
        tau0 = c.tau_a[_AXIS[_AXIS_FOR_PAULI[a]]]
        tau = c.tau_b.copy()
        beta = c.beta[_AXIS[_AXIS_FOR_PAULI[a]], :].copy()
    return Group1Params(float(tau0), tau, beta)


def extract_group2_params(state: HyperplaneState, t: int | None = None) -> Group2Params:
    """Generalised parameters of a Group-2 perp-set or non-Q0 grid state.

    For grids the two center-aligned Bloch coordinates are off-support and
    therefore zero; any other tau coefficients a grid state may carry are
    outside this parameterisation.  When t is None the family type is
    resolved empirically through spectra.detect_type.
    """
    h = state.hyperplane
    if h.kind == "perp":
        if group_of(h.center) != 2:
            raise ValueError("Group-1 perp-sets have no beta0/M split")
        center = h.center
    elif h.kind == "grid":
        center = associated_center(h)  # rejects Q0
    else:
        raise ValueError("ovoid states have no beta0/M split")
    a, b = point_to_pauli(center)
    i, j = _AXIS[_AXIS_FOR_PAULI[a]], _AXIS[_AXIS_FOR_PAULI[b]]
    rows = [r for r in range(3) if r != i]
    cols = [s for s in range(3) if s != j]
    c = state.coeffs
    if t is None:
        from .spectra import detect_type

        t = detect_type(center)
    return Group2Params(
        tau1=float(c.tau_a[i]),
        tau2=float(c.tau_b[j]),
        beta0=float(c.beta[i, j]),
        m=c.beta[np.ix_(rows, cols)].copy(),
        t=int(t),
    )


def group2_state(center: int, tau1, tau2, beta0, m) -> HyperplaneState:
    """Perp-set state of a Group-2 center built from generalised parameters."""
    if group_of(center) != 2:
        raise ValueError("group2_state needs a Group-2 center")
    a, b = point_to_pauli(center)
    i, j = _AXIS[_AXIS_FOR_PAULI[a]], _AXIS[_AXIS_FOR_PAULI[b]]
    rows = [r for r in range(3) if r != i]
    cols = [s for s in range(3) if s != j]
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2):
        raise ValueError("m must be a 2x2 block")
    coeffs = StateCoeffs.zeros()
    coeffs.tau_a[i] = float(tau1)
    coeffs.tau_b[j] = float(tau2)
    coeffs.beta[i, j] = float(beta0)
    for ri, r in enumerate(rows):
        for ci, s in enumerate(cols):
            coeffs.beta[r, s] = m[ri, ci]
    return HyperplaneState(perp_set(center), coeffs)


def group1_state(center: int, tau0, tau, beta) -> HyperplaneState:
    """Perp-set state of a Group-1 center built from generalised parameters."""
    if group_of(center) != 1:
        raise ValueError("group1_state needs a Group-1 center")
    a, b = point_to_pauli(center)
    tau = np.asarray(tau, dtype=float)
    beta = np.asarray(beta, dtype=float)
    if tau.shape != (3,) or beta.shape != (3,):
        raise ValueError("tau and beta must be 3-vectors")
    coeffs = StateCoeffs.zeros()
    if a == "I":
        j = _AXIS[_AXIS_FOR_PAULI[b]]
        coeffs.tau_b[j] = float(tau0)
        coeffs.tau_a[:] = tau
        coeffs.beta[:, j] = beta
    else:
        i = _AXIS[_AXIS_FOR_PAULI[a]]
        coeffs.tau_a[i] = float(tau0)
        coeffs.tau_b[:] = tau
        coeffs.beta[i, :] = beta
    return HyperplaneState(perp_set(center), coeffs)


_Q5_LABELS = ("XI", "ZI", "IX", "IZ", "XX", "YY", "ZZ", "ZX", "XZ")
_O1_LABELS = ("IX", "IZ", "XY", "ZY", "YY")

NAMED_STATES = ("epr_phi_plus", "werner", "q0_state", "q5_state", "ovoid_o1_state")


def make_named_state(name: str, p: float | None = None, coefficients=None) -> HyperplaneState:
    """Convenience constructors for the featured families.

    epr_phi_plus and werner (which needs the mixing parameter p) live on the
    ZZ perp-set; q0_state, q5_state and ovoid_o1_state take an optional
    coefficient map on the corresponding grid or ovoid support.
    """
    if name == "epr_phi_plus":
        return hyperplane_state(
            perp_set(pauli_to_point("ZZ")), {"XX": 1.0, "YY": -1.0, "ZZ": 1.0}
        )
    if name == "werner":
        if p is None:
            raise ValueError("werner needs the mixing parameter p")
        p = float(p)
        return hyperplane_state(
            perp_set(pauli_to_point("ZZ")), {"XX": p, "YY": -p, "ZZ": p}
        )
    if name == "q0_state":
        return hyperplane_state(quadric_q0(), coefficients)
    if name == "q5_state":
        return hyperplane_state(hyperplane_by_points(_Q5_LABELS), coefficients)
    if name == "ovoid_o1_state":
        return hyperplane_state(hyperplane_by_points(_O1_LABELS), coefficients)
    raise ValueError(f"unknown named state {name!r}; choose from {NAMED_STATES}")
