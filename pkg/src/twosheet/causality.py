"""Causal structure of flat spacetime and of the two-sheet space.

Events live in Minkowski space with signature (-,+,+,+) and c = 1; "future"
means increasing t.  The two-sheet space attaches a sheet index in {0, 1} to
each event; crossing the sheets costs proper time pi/(2|m|), which is what
the rescaled extremal length squared

    L2_m = (4/pi^2) L2(x, y) + (i != j) / |m|^2

encodes: two pure points are causally related iff x precedes y and
L2_m <= 0.  Interpolating states carry a weight xi in [0, 1] instead of a
sheet index; they are causally related iff x precedes y and the proper time
reaches |arcsin(sqrt(eta)) - arcsin(sqrt(xi))| / |m|.

All causal inequalities are non-strict: null separations and exact
thresholds count as related.  Because the threshold arithmetic rounds, the
comparisons include a small absolute slack (default 1e-12) so that exact
boundary cases land on the causal side.
"""

import math
from dataclasses import dataclass

import numpy as np

from .clifford import GammaBasis
from .errors import CausalityError, DomainError, InternalError, StateError

BOUNDARY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Event:
    """A point of Minkowski space: time t and spatial 3-vector x."""

    t: float
    x: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float).reshape(-1)
        if x.shape != (3,):
            raise DomainError(f"spatial part must be a 3-vector, got shape {x.shape}")
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "x", x)
        if not (math.isfinite(self.t) and np.all(np.isfinite(x))):
            raise DomainError("event components must be finite")

    @property
    def four_vector(self) -> np.ndarray:
        return np.concatenate(([self.t], self.x))


@dataclass(frozen=True)
class SheetPoint:
    """An event together with the sheet it sits on."""

    event: Event
    sheet: int

    def __post_init__(self):
        if self.sheet not in (0, 1):
            raise DomainError(f"sheet must be 0 or 1, got {self.sheet}")


@dataclass(frozen=True)
class MixedState:
    """An event with an interpolation weight xi between the two sheets."""

    event: Event
    xi: float

    def __post_init__(self):
        object.__setattr__(self, "xi", float(self.xi))
        if not 0.0 <= self.xi <= 1.0:
            raise StateError(f"xi must lie in [0, 1], got {self.xi}")


@dataclass(frozen=True, eq=False)
class EmbeddingMetric:
    """diag(-1, 1, 1, 1, 1/|m|^2): the ambient 5d metric of the two sheets."""

    g: np.ndarray
    m: complex

    @property
    def infinite_fiber(self) -> bool:
        return bool(math.isinf(self.g[4, 4]))


def minkowski_precedes(x: Event, y: Event) -> bool:
    """x precedes y: y is in the (closed) causal future of x."""
    return y.t >= x.t and extremal_length_sq(x, y) <= 0.0


def extremal_length_sq(x: Event, y: Event) -> float:
    """Signed squared separation -(dt)^2 + |dx|^2; <= 0 iff causally relatable."""
    dx = y.x - x.x
    dt = y.t - x.t
    return float(-dt * dt + dx @ dx)


def proper_time(x: Event, y: Event) -> float:
    """Longest proper time along causal curves from x to y (the straight line)."""
    if not minkowski_precedes(x, y):
        raise CausalityError("events are not causally related in this order")
    return math.sqrt(max(0.0, -extremal_length_sq(x, y)))


def proper_time_curve_oracle(x: Event, y: Event, *, n_curves: int = 200,
                             n_segments: int = 8, seed: int = 0,
                             amplitude: float = 0.3) -> float:
    """Longest proper time found over random piecewise-linear causal curves.

    Perturbs the interior nodes of the straight line and shrinks each
    perturbation until every segment is causal, accumulating segment lengths
    sqrt(dt^2 - |dx|^2).  The unperturbed straight line is always included,
    so the returned value is a tight lower bound on the true supremum; it is
    independent of the closed form used by proper_time.
    """
    if not minkowski_precedes(x, y):
        raise CausalityError("events are not causally related in this order")
    rng = np.random.default_rng(seed)
    base = np.linspace(x.four_vector, y.four_vector, n_segments + 1)
    scale = amplitude * (abs(y.t - x.t) + np.linalg.norm(y.x - x.x) + 1.0) / n_segments

    def length(nodes):
        seg = np.diff(nodes, axis=0)
        dt = seg[:, 0]
        dr = np.linalg.norm(seg[:, 1:], axis=1)
        if np.any(dt < dr):
            return None
        return float(np.sum(np.sqrt(np.maximum(0.0, dt * dt - dr * dr))))

    best = length(base)
    for _ in range(n_curves):
        delta = np.zeros_like(base)
        delta[1:-1] = scale * rng.standard_normal((n_segments - 1, 4))
        lo, hi = 0.0, 1.0
        if length(base + delta) is not None:
            lo = 1.0
        else:
            for _ in range(30):
                mid = 0.5 * (lo + hi)
                if length(base + mid * delta) is not None:
                    lo = mid
                else:
                    hi = mid
        val = length(base + lo * delta)
        if val is not None and val > best:
            best = val
    return best


def extremal_length_sq_sheets(p: SheetPoint, q: SheetPoint, m: complex) -> float:
    """Extremal length squared on the two-sheet space (+inf for m = 0 crossings)."""
    base = (4.0 / math.pi**2) * extremal_length_sq(p.event, q.event)
    if p.sheet == q.sheet:
        return base
    if m == 0:
        return math.inf
    return base + 1.0 / abs(m) ** 2


def causally_related_pure(p: SheetPoint, q: SheetPoint, m: complex,
                          tol: float = BOUNDARY_TOL) -> bool:
    """Causal structure on pure points: precedence plus L2_m <= 0."""
    if not minkowski_precedes(p.event, q.event):
        return False
    return extremal_length_sq_sheets(p, q, m) <= tol


def causally_related_mixed(a: MixedState, b: MixedState, m: complex,
                           tol: float = BOUNDARY_TOL) -> bool:
    """Causal relation between interpolating states via the arcsin threshold."""
    if not minkowski_precedes(a.event, b.event):
        return False
    if m == 0:
        return abs(a.xi - b.xi) <= tol
    threshold = abs(math.asin(math.sqrt(b.xi)) - math.asin(math.sqrt(a.xi))) / abs(m)
    return proper_time(a.event, b.event) >= threshold - tol


def crossing_threshold(m: complex) -> float:
    """Minimal proper time for a sheet crossing: pi/(2|m|), +inf at m = 0."""
    if m == 0:
        return math.inf
    return math.pi / (2.0 * abs(m))


def _hermitian_or_die(mat, context: str) -> np.ndarray:
    dev = float(np.max(np.abs(mat - mat.conj().T), initial=0.0))
    if dev > 1e-12 * max(1.0, float(np.max(np.abs(mat), initial=0.0))):
        raise InternalError(f"{context}: assembled matrix is not Hermitian (dev {dev:.3e})")
    return 0.5 * (mat + mat.conj().T)


def affine_cone_matrix(k, basis: GammaBasis) -> np.ndarray:
    """J * [D, f] = J * (-i gamma^mu k_mu) for an affine f with gradient k."""
    k = np.asarray(k, dtype=float).reshape(-1)
    if k.shape != (4,):
        raise DomainError(f"gradient must be a real 4-vector, got shape {k.shape}")
    commutator = -1j * sum(k[mu] * basis.gamma[mu] for mu in range(4))
    return _hermitian_or_die(basis.fundamental_symmetry @ commutator,
                             "affine_cone_matrix")


def is_causal_affine_function(k, basis: GammaBasis, tol: float = BOUNDARY_TOL) -> bool:
    """Whether the affine function with gradient covector k is causal.

    [D, f] = -i gamma^mu k_mu for affine f, so the causal-cone condition
    (psi, [D, f] psi) <= 0 for all psi is exactly negative semidefiniteness
    of the Hermitian matrix J * (-i gamma^mu k_mu).  Equivalent to k being a
    future-directed causal covector, k_0 >= |k_vec|.
    """
    return bool(np.max(np.linalg.eigvalsh(affine_cone_matrix(k, basis))) <= tol)


def two_sheet_cone_matrix(k0, k1, c0: float, c1: float, m: complex,
                          event: Event, basis: GammaBasis) -> np.ndarray:
    """(J (x) 1_2) [D, a] at one event, for a = a0 (+) a1 affine per sheet.

    The commutator splits into a slope part -i gamma^mu (x) diag(d_mu a0,
    d_mu a1) and the internal part gamma5 (x) [D_F, diag(a0(x), a1(x))].
    """
    k0 = np.asarray(k0, dtype=float).reshape(-1)
    k1 = np.asarray(k1, dtype=float).reshape(-1)
    if k0.shape != (4,) or k1.shape != (4,):
        raise DomainError("per-sheet gradients must be real 4-vectors")
    d_f = np.array([[0.0, m], [np.conj(m), 0.0]], dtype=complex)
    j_ext = np.kron(basis.fundamental_symmetry, np.eye(2))
    slope = sum(-1j * np.kron(basis.gamma[mu], np.diag([k0[mu], k1[mu]]).astype(complex))
                for mu in range(4))
    values = np.diag([k0 @ event.four_vector + c0,
                      k1 @ event.four_vector + c1]).astype(complex)
    comm = d_f @ values - values @ d_f
    return _hermitian_or_die(j_ext @ (slope + np.kron(basis.gamma5, comm)),
                             "two_sheet_cone_matrix")


def is_causal_element_two_sheet(k0, k1, c0: float, c1: float, m: complex,
                                sample_events, basis: GammaBasis,
                                tol: float = BOUNDARY_TOL) -> bool:
    """Grid-sampled causal-cone test for a two-sheet element a = a0 (+) a1.

    a_i(x) = k_i . (t, x) + c_i affine with real coefficients.  The cone
    matrix must be negative semidefinite at every sample event.  This is a
    necessary condition only: the exact cone condition quantifies over all
    of spacetime, while this check covers the supplied sample set.
    """
    events = list(sample_events)
    if not events:
        raise DomainError("sample event set is empty")
    for ev in events:
        mat = two_sheet_cone_matrix(k0, k1, c0, c1, m, ev, basis)
        if float(np.max(np.linalg.eigvalsh(mat))) > tol:
            return False
    return True


def embedding_metric(m: complex) -> EmbeddingMetric:
    """The 5d metric diag(-1, 1, 1, 1, 1/|m|^2); infinite fiber at m = 0."""
    fiber = math.inf if m == 0 else 1.0 / abs(m) ** 2
    g = np.diag([-1.0, 1.0, 1.0, 1.0, fiber])
    g.setflags(write=False)
    return EmbeddingMetric(g=g, m=complex(m))
