"""Connes spectral distance on finite triples, with a brute-force oracle.

The distance between states w, w' of a commutative internal algebra is

    d(w, w') = sup { |w(a) - w'(a)| : a = a*, ||[D_F, a]|| <= 1 },

with ||.|| the spectral norm.  For algebras represented by diagonal
generators g_k the supremum is a finite-dimensional problem over the real
coefficients c of a = sum_k c_k g_k: maximize d.c subject to
||sum_k c_k [D_F, g_k]|| <= 1 with d_k = w_k - w'_k.  The constraint is
blind to coefficient directions annihilated by the commutator map (for
partition-of-unity generators the identity direction always is).  When the
objective vanishes on that null space the problem restricts to its
orthogonal complement; otherwise a feasible ray makes the objective
unbounded and the distance is +inf.

The optimizer does multi-start projected gradient ascent on the
scale-invariant ratio (d.c)/||K(c)||; the oracle is an exhaustive grid
search over feasible coefficients and is guaranteed to return a value <=
the true supremum.  Restricting to self-adjoint a (real c) is the standard
reduction; tests spot-check that complex coefficients never do better.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OracleIntractable, StateError, UnsupportedAlgebra
from .finite_triple import FiniteTriple

_KERNEL_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class AlgebraState:
    """Convex weights over the diagonal-generator decomposition.

    The state evaluates a = sum_k c_k g_k to sum_k w_k c_k; vertices of the
    simplex are the pure states.
    """

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        object.__setattr__(self, "weights", w)
        if w.size == 0:
            raise StateError("state needs at least one weight")
        if np.any(w < -1e-12):
            raise StateError(f"negative weight in {w.tolist()}")
        if abs(float(w.sum()) - 1.0) > 1e-12:
            raise StateError(f"weights sum to {float(w.sum())!r}, expected 1")

    @classmethod
    def pure(cls, index: int, n: int) -> "AlgebraState":
        if not 0 <= index < n:
            raise StateError(f"pure-state index {index} out of range for {n} generators")
        w = np.zeros(n)
        w[index] = 1.0
        return cls(w)

    @classmethod
    def two_point_mixed(cls, xi: float) -> "AlgebraState":
        """The interpolating state with weights (xi, 1 - xi)."""
        return cls(np.array([xi, 1.0 - xi]))


@dataclass(frozen=True, eq=False)
class DistanceResult:
    """Distance value (may be +inf), the maximizing element, and oracle gap."""

    value: float
    maximizer: np.ndarray | None = None
    gap: float | None = None

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)


@dataclass(frozen=True)
class GridSpec:
    """Grid parameters for the brute-force oracle.

    step is the coefficient spacing; radius overrides the per-axis box
    half-width (default 1.05 / ||[D_F, g_k]||, exact for the two-point
    family).  feasibility_slack admits boundary points that round just
    outside the constraint.
    """

    step: float = 1e-3
    radius: float | None = None
    feasibility_slack: float = 1e-9
    max_points: int = 2_000_000


def _diagonal_generators(triple: FiniteTriple):
    gens = triple.algebra_generators
    if not gens:
        raise UnsupportedAlgebra("triple has no algebra generators")
    for g in gens:
        off = g - np.diag(np.diag(g))
        if np.max(np.abs(off), initial=0.0) > 1e-14:
            raise UnsupportedAlgebra(
                "distance is implemented for diagonally represented "
                "(commutative) internal algebras only")
    return gens


def _state_vector(state: AlgebraState, n: int) -> np.ndarray:
    if not isinstance(state, AlgebraState):
        raise StateError(f"expected AlgebraState, got {type(state).__name__}")
    if state.weights.size != n:
        raise StateError(f"state has {state.weights.size} weights, algebra has {n} generators")
    return state.weights


def _commutators(triple: FiniteTriple, gens) -> np.ndarray:
    return np.stack([triple.D_F @ g - g @ triple.D_F for g in gens])


def _row_and_kernel(comms: np.ndarray):
    """Orthonormal bases of the effective coefficient space and its kernel."""
    n = comms.shape[0]
    flat = comms.reshape(n, -1)
    mat = np.concatenate([flat.real, flat.imag], axis=1).T
    _, s, vt = np.linalg.svd(mat, full_matrices=True)
    cutoff = max(float(s[0]) * _KERNEL_RTOL, 1e-14) if s.size else 0.0
    rank = int(np.sum(s > cutoff))
    return vt[:rank].T, vt[rank:].T


def _spectral_norm(mat: np.ndarray) -> float:
    return float(np.linalg.svd(mat, compute_uv=False)[0])


def connes_distance(triple: FiniteTriple, state_a: AlgebraState, state_b: AlgebraState,
                    *, seed: int = 0, starts: int = 16, max_iter: int = 200,
                    oracle_step: float | None = None, tol: float = 1e-12) -> DistanceResult:
    """Spectral distance between two states of a diagonal internal algebra.

    Deterministic for a fixed seed: the multi-start ascent draws its starting
    directions from a seeded generator and reduces with first-best argmax, so
    the result does not depend on evaluation order.  Pass oracle_step to also
    run the grid oracle and record |optimizer - oracle| in the gap field.
    """
    gens = _diagonal_generators(triple)
    n = len(gens)
    d = _state_vector(state_a, n) - _state_vector(state_b, n)
    if float(np.max(np.abs(d), initial=0.0)) <= tol:
        gap = None
        if oracle_step is not None:
            gap = connes_distance_oracle(triple, state_a, state_b,
                                         GridSpec(step=oracle_step))
        return DistanceResult(0.0, np.zeros_like(triple.D_F), gap)

    comms = _commutators(triple, gens)
    row, kernel = _row_and_kernel(comms)
    if kernel.shape[1] and float(np.linalg.norm(kernel.T @ d)) > 1e-12 * float(np.linalg.norm(d)):
        return DistanceResult(math.inf, None, None)

    gen_stack = np.stack(gens)

    def seminorm(c):
        return _spectral_norm(np.tensordot(c, comms, axes=(0, 0)))

    def ratio(c):
        nu = seminorm(c)
        if nu <= 1e-300:
            return -math.inf
        return float(d @ c) / nu

    def seminorm_grad(c):
        k = np.tensordot(c, comms, axes=(0, 0))
        u, s, vh = np.linalg.svd(k)
        u1 = u[:, 0]
        v1 = vh[0].conj()
        grad = np.array([float(np.real(np.vdot(u1, comms[j] @ v1))) for j in range(n)])
        return float(s[0]), grad

    rng = np.random.default_rng(seed)
    d_eff = row @ (row.T @ d)
    start_dirs = [d_eff] + [row @ rng.standard_normal(row.shape[1])
                            for _ in range(max(0, starts - 1))]

    best_val = 0.0
    best_c = None
    for c0 in start_dirs:
        nrm = float(np.linalg.norm(c0))
        if nrm < 1e-14:
            continue
        c = c0 / nrm
        if float(d @ c) < 0:
            c = -c
        f = ratio(c)
        for _ in range(max_iter):
            nu, gnu = seminorm_grad(c)
            grad = d / nu - (float(d @ c) / nu**2) * gnu
            grad = row @ (row.T @ grad)
            if float(np.linalg.norm(grad)) <= 1e-14 * max(1.0, abs(f)):
                break
            step, improved = 1.0, False
            while step > 1e-14:
                cand = c + step * grad
                cn = float(np.linalg.norm(cand))
                if cn > 1e-14:
                    fc = ratio(cand / cn)
                    if fc > f + 1e-15:
                        c, f, improved = cand / cn, fc, True
                        break
                step *= 0.5
            if not improved:
                break
        if f > best_val:
            best_val, best_c = f, c

    value = max(best_val, 0.0)
    maximizer = None
    if best_c is not None:
        maximizer = np.tensordot(best_c / seminorm(best_c), gen_stack, axes=(0, 0))

    gap = None
    if oracle_step is not None:
        oracle = connes_distance_oracle(triple, state_a, state_b,
                                        GridSpec(step=oracle_step))
        gap = abs(value - oracle)
    return DistanceResult(value, maximizer, gap)


def connes_distance_oracle(triple: FiniteTriple, state_a: AlgebraState,
                           state_b: AlgebraState, grid: GridSpec = GridSpec()) -> float:
    """Exhaustive grid search over feasible coefficients; a certified lower bound.

    When the generators partition the identity, the identity direction is
    gauge-fixed away (it changes neither objective nor constraint), which
    drops one grid dimension.  Axes whose commutator vanishes contribute
    nothing to the objective of a finite instance and are dropped; if such an
    axis carries objective weight the supremum is infinite and no finite grid
    applies.
    """
    gens = _diagonal_generators(triple)
    n = len(gens)
    d = _state_vector(state_a, n) - _state_vector(state_b, n)
    if float(np.max(np.abs(d), initial=0.0)) == 0.0:
        return 0.0

    comms = _commutators(triple, gens)
    total = np.sum(np.stack([np.diag(g) for g in gens]), axis=0)
    partitions = bool(np.max(np.abs(total - 1.0)) <= 1e-12)
    active = list(range(n - 1)) if partitions else list(range(n))

    axes = []
    kept = []
    for k in active:
        nu_k = _spectral_norm(comms[k])
        if nu_k <= 1e-13:
            if abs(d[k]) > 1e-12:
                raise OracleIntractable(
                    "a null coefficient direction carries objective weight; "
                    "the supremum is not finite")
            continue
        radius = grid.radius if grid.radius is not None else 1.05 / nu_k
        axes.append(np.arange(-radius, radius + 0.5 * grid.step, grid.step))
        kept.append(k)

    if not kept:
        return 0.0
    if len(kept) > 4:
        raise OracleIntractable(f"{len(kept)} grid dimensions exceed the supported 4")
    n_points = int(np.prod([a.size for a in axes]))
    if n_points > grid.max_points:
        raise OracleIntractable(f"grid of {n_points} points exceeds {grid.max_points}")

    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.stack([m.ravel() for m in mesh], axis=1)
    m_active = comms[kept]
    d_active = d[kept]

    best = 0.0
    for lo in range(0, points.shape[0], 65536):
        chunk = points[lo:lo + 65536]
        k_all = np.tensordot(chunk, m_active, axes=(1, 0))
        sigma = np.linalg.svd(k_all, compute_uv=False)[:, 0]
        feasible = sigma <= 1.0 + grid.feasibility_slack
        if np.any(feasible):
            vals = np.abs(chunk[feasible] @ d_active)
            best = max(best, float(vals.max()))
    return best


def product_distance_sq(d_m: float, d_f: float) -> float:
    """Squared distance of the product geometry: d_M^2 + d_F^2."""
    if d_m < 0 or d_f < 0:
        raise DomainError(f"distances must be nonnegative, got ({d_m}, {d_f})")
    return float(d_m) ** 2 + float(d_f) ** 2
