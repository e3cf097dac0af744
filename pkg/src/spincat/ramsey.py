"""Ramsey detection signals for cavity-generated cat states.

The second Ramsey zone, parameterized like a coherent-state preparation by
(alpha, beta), acts as a projection onto <alpha, beta|; the measured
signal is the probability of then finding every atom in the ground state,
|<alpha,beta|psi>|^2. Sweeping beta produces interference fringes whose
harmonic content separates a coherent cat state from the incoherent
mixture of its branches and from the unevolved (no-cavity) state.
"""

import math
from dataclasses import dataclass

import numpy as np

from .dicke import (
    ALGEBRAIC_TOL,
    DickeState,
    check_atom_count,
    coherent_state,
    norm,
    overlap,
)
from .dynamics import CAT_TIME, propagate
from .errors import NormalizationError


def detection_probability(state: DickeState, alpha: float, beta: float) -> float:
    """Probability |<alpha,beta|state>|^2 of an all-ground detection."""
    bra = coherent_state(state.n, alpha, beta)
    return float(abs(overlap(bra, state)) ** 2)


def beta_grid(beta_min: float, beta_max: float, steps: int) -> np.ndarray:
    """Uniform half-open grid: steps values covering [beta_min, beta_max)."""
    steps = int(steps)
    if steps < 2:
        raise ValueError(f"beta grid needs at least 2 steps, got {steps}")
    if not beta_max > beta_min:
        raise ValueError(
            f"degenerate beta grid: need beta_max > beta_min, got "
            f"[{beta_min!r}, {beta_max!r})"
        )
    return np.linspace(beta_min, beta_max, steps, endpoint=False)


def fringe_sweep(
    state: DickeState, alpha: float, beta_min: float, beta_max: float, steps: int
) -> tuple[np.ndarray, np.ndarray]:
    """Detection probability of one state over a beta grid.

    Returns (betas, probabilities). Each point is the plain
    detection_probability at (alpha, beta_i), so the sweep is
    deterministic and embarrassingly parallel.
    """
    betas = beta_grid(beta_min, beta_max, steps)
    probs = np.array([detection_probability(state, alpha, b) for b in betas])
    return betas, probs


@dataclass(frozen=True)
class MixtureSpec:
    """Classical mixture of Dicke states: ((weight, state), ...).

    Weights must be nonnegative and sum to 1 within 1e-12; all states must
    share the same atom count.
    """

    branches: tuple

    def __post_init__(self):
        branches = tuple((float(w), s) for w, s in self.branches)
        if not branches:
            raise ValueError("mixture needs at least one branch")
        # comparisons phrased so NaN weights fail them too
        if not all(w >= 0.0 for w, _ in branches):
            raise ValueError("mixture weights must be nonnegative")
        total = math.fsum(w for w, _ in branches)
        if not abs(total - 1.0) <= 1e-12:
            raise ValueError(f"mixture weights must sum to 1, got {total!r}")
        counts = {s.n for _, s in branches}
        if len(counts) != 1:
            raise ValueError(f"mixture mixes different atom counts: {sorted(counts)}")
        object.__setattr__(self, "branches", branches)

    @property
    def n(self) -> int:
        return self.branches[0][1].n


def mixture_probability(mixture: MixtureSpec, alpha: float, beta: float) -> float:
    """Detection probability of a classical mixture.

    fsum makes the accumulation exact, so the result is independent of
    branch order.
    """
    return math.fsum(
        w * detection_probability(s, alpha, beta) for w, s in mixture.branches
    )


@dataclass(frozen=True)
class FringeSeries:
    """Three detection channels sampled over one beta grid.

    Invariants enforced at construction: channels match the grid length,
    betas strictly increasing, every probability in [0, 1 + 1e-12].
    """

    n: int
    alpha: float
    betas: np.ndarray
    p_coherent: np.ndarray
    p_mixture: np.ndarray
    p_no_cavity: np.ndarray
    theta: float
    phi: float
    tau: float

    def __post_init__(self):
        for name in ("betas", "p_coherent", "p_mixture", "p_no_cavity"):
            arr = np.array(getattr(self, name), dtype=np.float64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if not np.all(np.diff(self.betas) > 0):
            raise ValueError("betas must be strictly increasing")
        for name in ("p_coherent", "p_mixture", "p_no_cavity"):
            channel = getattr(self, name)
            if channel.shape != self.betas.shape:
                raise ValueError(f"{name} length does not match the beta grid")
            if not np.all((channel >= 0.0) & (channel <= 1.0 + 1e-12)):
                raise ValueError(f"{name} contains values outside [0, 1 + 1e-12]")


def _cat_branch_mixture(n: int, theta: float, phi: float) -> MixtureSpec:
    return MixtureSpec(
        (
            (0.5, coherent_state(n, theta, phi - math.pi * (n - 1) / 2)),
            (0.5, coherent_state(n, theta, phi - math.pi * (n - 3) / 2)),
        )
    )


def _dephased_mixture(state: DickeState) -> MixtureSpec:
    """Diagonal-in-k mixture of a state (all k-coherences dropped)."""
    weights = np.abs(state.amps) ** 2
    branches = []
    for k in range(state.n + 1):
        basis = np.zeros(state.n + 1, dtype=np.complex128)
        basis[k] = 1.0
        branches.append((float(weights[k]), DickeState(state.n, basis)))
    return MixtureSpec(tuple(branches))


def compare_channels(
    n: int,
    theta: float,
    phi: float,
    tau: float,
    alpha: float,
    beta_min: float,
    beta_max: float,
    steps: int,
) -> FringeSeries:
    """Sweep the coherent, incoherent-mixture and no-cavity channels.

    Channels, all swept over the same grid with the same second zone
    (alpha, beta):

    * coherent: the first-zone state |theta, phi> evolved for tau.
    * mixture: for tau = pi/2 (exact float equality) the equal-weight
      incoherent mixture of the two cat branches at (theta, phi); for any
      other tau the diagonal-in-k dephased evolved state, an extension
      that keeps the channel total. A dephased state has no k-coherences,
      so that variant is beta-independent (flat).
    * no_cavity: the first-zone state swept unevolved (tau treated as 0).
    """
    n = check_atom_count(n)
    prepared = coherent_state(n, theta, phi)
    evolved = propagate(prepared, tau)
    if abs(norm(evolved) - 1.0) > ALGEBRAIC_TOL:
        raise NormalizationError("evolved first-zone state lost normalization")
    betas = beta_grid(beta_min, beta_max, steps)
    if tau == CAT_TIME:
        mixture = _cat_branch_mixture(n, theta, phi)
    else:
        mixture = _dephased_mixture(evolved)
    p_coherent = np.array([detection_probability(evolved, alpha, b) for b in betas])
    p_mixture = np.array([mixture_probability(mixture, alpha, b) for b in betas])
    p_no_cavity = np.array([detection_probability(prepared, alpha, b) for b in betas])
    return FringeSeries(
        n=n,
        alpha=alpha,
        betas=betas,
        p_coherent=p_coherent,
        p_mixture=p_mixture,
        p_no_cavity=p_no_cavity,
        theta=theta,
        phi=phi,
        tau=tau,
    )


def harmonic_magnitudes(
    betas: np.ndarray, values: np.ndarray, max_harmonic: int
) -> np.ndarray:
    """Fourier magnitudes |sum_i p_i e^{-i h beta_i}| / len for h = 0..max.

    Requires a strictly increasing uniform grid covering exactly one
    2*pi period (e.g. [0, 2*pi) or [-pi, pi)) with at least
    2*max_harmonic + 2 points.
    """
    betas = np.asarray(betas, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    if betas.ndim != 1 or betas.shape != values.shape:
        raise ValueError("betas and values must be 1-d arrays of equal length")
    max_harmonic = int(max_harmonic)
    if max_harmonic < 0:
        raise ValueError("max_harmonic must be >= 0")
    if len(betas) < 2 * max_harmonic + 2:
        raise ValueError(
            f"grid too short: need >= {2 * max_harmonic + 2} points for "
            f"harmonics up to {max_harmonic}, got {len(betas)}"
        )
    deltas = np.diff(betas)
    # "not <=" phrasing keeps NaN grids from slipping through
    if not np.all(deltas > 0):
        raise ValueError("beta grid must be strictly increasing")
    if not np.all(np.abs(deltas - deltas[0]) <= 1e-9):
        raise ValueError("beta grid must be uniform")
    span = betas[-1] - betas[0] + deltas[0]
    if not abs(span - math.tau) <= 1e-9:
        raise ValueError(f"beta grid must span one 2*pi period, spans {span!r}")
    h = np.arange(max_harmonic + 1)
    phases = np.exp(-1j * np.outer(h, betas))
    return np.abs(phases @ values) / len(betas)
