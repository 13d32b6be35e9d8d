"""Perturbative approximation of dual and tight frames, with error bounds.

Three truncated-series schemes approximate the inverse (or inverse square
root) of the frame operator S given declared bounds A <= B:

* Neumann: with R = I - (2/(A+B)) S, the dual vectors are the geometric
  series (2/(A+B)) sum_k R^k phi_i; the reconstruction error after N terms
  is at most ((B-A)/(B+A))^(N+1).
* BinomialHalf: the tight-family vectors come from the binomial series of
  (I - R)^(-1/2); the error bound converges only when B < 3A.
* Logarithmic: S^(-1) = exp(c R_log)/sqrt(A B) for a base-dependent
  logarithmic remainder R_log; truncating the exponential series gives
  factorially convergent bounds, which is what makes large B/A tractable.

Every scheme is paired with its analytical bound and with a convergence
harness that measures the worst reconstruction error over seeded probes and
checks it against the bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

import numpy as np

from .frames import Frame, NotAFrameError, frame_operator, optimal_bounds
from .linalg import jacobi_eigh, operator_norm, spectral_apply, symmetrize

__all__ = [
    "BOUND_ABS_SLACK",
    "BOUND_REL_SLACK",
    "BinomialBounds",
    "ConvergenceReport",
    "ConvergenceRow",
    "LogRegime",
    "RegimeKind",
    "Scheme",
    "binomial_bounds",
    "binomial_half_coefficients",
    "binomial_remainder_norm",
    "binomial_tight",
    "bound_satisfied",
    "log_bound",
    "log_dual",
    "log_exact_inverse",
    "log_regime",
    "log_remainder_norm",
    "neumann_R",
    "neumann_bound",
    "neumann_dual",
    "run_convergence",
    "write_csv",
    "zn_bound",
]

# With optimal declared bounds the Neumann error attains its bound exactly on
# extreme eigenvectors, so a strict float comparison would be a coin flip at a
# few ulps. These slacks sit orders of magnitude below every stated tolerance.
BOUND_REL_SLACK = 1e-12
BOUND_ABS_SLACK = 1e-13

BOUNDS_RTOL = 1e-9


class Scheme(Enum):
    NEUMANN = "Neumann"
    BINOMIAL_HALF = "BinomialHalf"
    LOGARITHMIC = "Logarithmic"


class RegimeKind(Enum):
    BOUNDS_ABOVE_ONE = "BoundsAboveOne"
    BOUNDS_BELOW_ONE = "BoundsBelowOne"
    STRADDLING = "Straddling"


@dataclass(frozen=True)
class LogRegime:
    """Dispatch data for the logarithmic scheme.

    ``contraction`` is the derived constant in (0, 1] (log_B A above one,
    log_A B below one, log_b 2 with b = 2B/A when the bounds straddle one)
    and ``log_scale`` is the matching natural-log magnitude (ln B, |ln A|,
    or ln b).
    """

    kind: RegimeKind
    lower: float
    upper: float
    contraction: float
    log_scale: float


class BinomialBounds(NamedTuple):
    """Truncation-operator bound, reconstruction bound, and convergence flag."""

    tn_bound: float
    reconstruction_bound: float
    convergent: bool


@dataclass(frozen=True)
class ConvergenceRow:
    order: int
    measured_error: float
    analytical_bound: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Measured worst reconstruction error versus analytical bound, per order.

    ``samples`` and ``seed`` record how the probe vectors were drawn so runs
    are reproducible.
    """

    scheme: Scheme
    lower: float
    upper: float
    rows: tuple[ConvergenceRow, ...]
    samples: int
    seed: int

    def violations(self) -> list[ConvergenceRow]:
        return [
            row
            for row in self.rows
            if not bound_satisfied(row.measured_error, row.analytical_bound)
        ]

    @property
    def passed(self) -> bool:
        return not self.violations()


def bound_satisfied(measured: float, bound: float) -> bool:
    """Dominance check with floating-point slack for equality-tight rows."""
    return measured <= bound * (1.0 + BOUND_REL_SLACK) + BOUND_ABS_SLACK


def _check_bounds(lower: float, upper: float) -> tuple[float, float]:
    lower = float(lower)
    upper = float(upper)
    if not (0.0 < lower <= upper) or not math.isfinite(upper):
        raise ValueError(f"bounds must satisfy 0 < A <= B, got ({lower}, {upper})")
    return lower, upper


def _check_frame_bounds(frame: Frame, lower: float, upper: float) -> tuple[float, float]:
    lower, upper = _check_bounds(lower, upper)
    lam_min, lam_max = optimal_bounds(frame)
    slack = BOUNDS_RTOL * max(1.0, abs(lam_max))
    if lower > lam_min + slack or lam_max > upper + slack:
        raise ValueError(
            f"declared bounds ({lower}, {upper}) do not enclose the "
            f"frame-operator spectrum [{lam_min}, {lam_max}]"
        )
    return lower, upper


def _check_order(order: int) -> int:
    order = int(order)
    if order < 0:
        raise ValueError(f"series order must be non-negative, got {order}")
    return order


# ---------------------------------------------------------------------------
# Neumann scheme
# ---------------------------------------------------------------------------


def neumann_R(frame: Frame, lower: float, upper: float) -> np.ndarray:
    """The remainder operator R = I - (2/(A+B)) S; ||R|| <= (B-A)/(B+A)."""
    lower, upper = _check_frame_bounds(frame, lower, upper)
    operator = frame_operator(frame)
    return symmetrize(np.eye(frame.dim) - (2.0 / (lower + upper)) * operator)


def _series_terms(vectors: np.ndarray, op: np.ndarray, order: int) -> Iterator[np.ndarray]:
    """Yield vectors @ op^k for k = 0..order, one matrix product per step."""
    term = vectors
    yield term
    for _ in range(order):
        term = term @ op
        yield term


def neumann_dual(frame: Frame, lower: float, upper: float, order: int) -> Frame:
    """Order-N geometric-series approximation of the canonical dual."""
    order = _check_order(order)
    remainder = neumann_R(frame, lower, upper)
    acc = np.zeros_like(frame.vectors)
    for term in _series_terms(frame.vectors, remainder, order):
        acc = acc + term
    return Frame(frame.dim, (2.0 / (lower + upper)) * acc)


def neumann_bound(lower: float, upper: float, order: int) -> float:
    """Worst relative reconstruction error of the order-N Neumann dual."""
    lower, upper = _check_bounds(lower, upper)
    order = _check_order(order)
    return ((upper - lower) / (upper + lower)) ** (order + 1)


# ---------------------------------------------------------------------------
# Binomial square-root scheme
# ---------------------------------------------------------------------------


def binomial_half_coefficients(order: int) -> np.ndarray:
    """Binomial coefficients C(-1/2, k) for k = 0..order via the recurrence
    C(-1/2, 0) = 1, C(-1/2, k) = C(-1/2, k-1) * (-1/2 - k + 1) / k."""
    order = _check_order(order)
    coeffs = np.empty(order + 1)
    coeffs[0] = 1.0
    for k in range(1, order + 1):
        coeffs[k] = coeffs[k - 1] * (-0.5 - k + 1.0) / k
    return coeffs


def binomial_tight(frame: Frame, lower: float, upper: float, order: int) -> Frame:
    """Order-N binomial-series approximation of the Parseval-tight family.

    Truncates sqrt(2/(A+B)) * (I - R)^(-1/2) phi_i; the series itself
    converges for any valid bounds, but the analytical error bound only
    converges when B < 3A.
    """
    order = _check_order(order)
    remainder = neumann_R(frame, lower, upper)
    coeffs = binomial_half_coefficients(order)
    acc = np.zeros_like(frame.vectors)
    for k, term in enumerate(_series_terms(frame.vectors, remainder, order)):
        sign = -1.0 if k % 2 else 1.0
        acc = acc + (coeffs[k] * sign) * term
    return Frame(frame.dim, math.sqrt(2.0 / (lower + upper)) * acc)


def binomial_bounds(lower: float, upper: float, order: int) -> BinomialBounds:
    """Truncation and reconstruction bounds for the binomial scheme.

    ``convergent`` is False when B >= 3A, where the bound ratio (B-A)/(2A)
    reaches one and the estimates no longer shrink with N.
    """
    lower, upper = _check_bounds(lower, upper)
    order = _check_order(order)
    ratio = (upper - lower) / (2.0 * lower)
    stretch = math.sqrt(upper / lower)
    tn = ratio ** (order + 1) * math.sqrt((lower + upper) / (2.0 * lower))
    reconstruction = stretch * ratio ** (order + 1) * (
        2.0 + stretch * ratio ** (order + 1)
    )
    return BinomialBounds(tn, reconstruction, upper < 3.0 * lower)


def binomial_remainder_norm(frame: Frame, lower: float, upper: float, order: int) -> float:
    """Spectral norm of (I-R)^(-1/2) minus its order-N binomial truncation."""
    order = _check_order(order)
    remainder = neumann_R(frame, lower, upper)
    exact = spectral_apply(remainder, lambda r: (1.0 - r) ** -0.5)
    coeffs = binomial_half_coefficients(order)
    acc = np.zeros_like(remainder)
    for k, term in enumerate(_series_terms(np.eye(frame.dim), remainder, order)):
        sign = -1.0 if k % 2 else 1.0
        acc = acc + (coeffs[k] * sign) * term
    return operator_norm(symmetrize(exact - acc))


# ---------------------------------------------------------------------------
# Logarithmic scheme
# ---------------------------------------------------------------------------


def log_regime(lower: float, upper: float) -> LogRegime:
    """Classify declared bounds for the logarithmic scheme.

    Boundary values (A = 1 or B = 1) route to the straddling construction,
    which is valid there, so the dispatch is total.
    """
    lower, upper = _check_bounds(lower, upper)
    if lower > 1.0:
        return LogRegime(
            RegimeKind.BOUNDS_ABOVE_ONE,
            lower,
            upper,
            contraction=math.log(lower) / math.log(upper),
            log_scale=math.log(upper),
        )
    if upper < 1.0:
        return LogRegime(
            RegimeKind.BOUNDS_BELOW_ONE,
            lower,
            upper,
            contraction=math.log(upper) / math.log(lower),
            log_scale=abs(math.log(lower)),
        )
    base = 2.0 * upper / lower
    return LogRegime(
        RegimeKind.STRADDLING,
        lower,
        upper,
        contraction=math.log(2.0) / math.log(base),
        log_scale=math.log(base),
    )


def _log_generator(frame: Frame, lower: float, upper: float) -> tuple[float, np.ndarray]:
    """Exponent prefactor c and remainder operator R_log with S^(-1) =
    exp(c R_log)/sqrt(A B)."""
    regime = log_regime(lower, upper)
    operator = frame_operator(frame)
    s = regime.contraction
    if regime.kind is RegimeKind.BOUNDS_ABOVE_ONE:
        log_op = spectral_apply(operator, lambda lam: math.log(lam) / math.log(upper))
        prefactor = math.log(upper) * (1.0 + s) / 2.0
    elif regime.kind is RegimeKind.BOUNDS_BELOW_ONE:
        log_op = spectral_apply(operator, lambda lam: math.log(lam) / math.log(lower))
        prefactor = math.log(lower) * (1.0 + s) / 2.0
    else:
        base = 2.0 * upper / lower
        log_op = spectral_apply(
            operator, lambda lam: math.log(2.0 * lam / lower) / math.log(base)
        )
        prefactor = math.log(base) * (1.0 + s) / 2.0
    remainder = symmetrize(np.eye(frame.dim) - (2.0 / (1.0 + s)) * log_op)
    return prefactor, remainder


def log_exact_inverse(frame: Frame, lower: float, upper: float) -> np.ndarray:
    """Inverse frame operator written as exp(c R_log)/sqrt(A B).

    Exponential and logarithm are evaluated exactly through the spectrum, so
    the result matches the spectral inverse of S in every regime.
    """
    lower, upper = _check_frame_bounds(frame, lower, upper)
    prefactor, remainder = _log_generator(frame, lower, upper)
    exponential = spectral_apply(prefactor * remainder, math.exp)
    return symmetrize(exponential / math.sqrt(lower * upper))


def log_dual(frame: Frame, lower: float, upper: float, order: int) -> Frame:
    """Order-N exponential-series approximation of the canonical dual.

    The zeroth order is phi_i / sqrt(A B): the geometric mean of the bounds
    replaces the arithmetic mean of the Neumann scheme.
    """
    order = _check_order(order)
    lower, upper = _check_frame_bounds(frame, lower, upper)
    prefactor, remainder = _log_generator(frame, lower, upper)
    scale = 1.0 / math.sqrt(lower * upper)
    term = frame.vectors
    acc = frame.vectors
    for k in range(1, order + 1):
        term = (term @ remainder) * (prefactor / k)
        acc = acc + term
    return Frame(frame.dim, scale * acc)


def log_bound(lower: float, upper: float, order: int) -> float:
    """Worst relative reconstruction error of the order-N logarithmic dual:
    (B/A) * ((1-s) L / 2)^(N+1) / (N+1)! with regime constants (s, L)."""
    regime = log_regime(lower, upper)
    order = _check_order(order)
    s = regime.contraction
    radius = (1.0 - s) / 2.0 * regime.log_scale
    return (upper / lower) * radius ** (order + 1) / math.factorial(order + 1)


def zn_bound(lower: float, upper: float, order: int) -> float:
    """Bound on the exponential-series truncation operator:
    sqrt(B/A) * ((1-s) L / 2)^(N+1) / (N+1)!."""
    regime = log_regime(lower, upper)
    order = _check_order(order)
    s = regime.contraction
    radius = (1.0 - s) / 2.0 * regime.log_scale
    return math.sqrt(upper / lower) * radius ** (order + 1) / math.factorial(order + 1)


def log_remainder_norm(frame: Frame, lower: float, upper: float, order: int) -> float:
    """Spectral norm of exp(c R_log) minus its order-N Taylor truncation."""
    order = _check_order(order)
    lower, upper = _check_frame_bounds(frame, lower, upper)
    prefactor, remainder = _log_generator(frame, lower, upper)
    generator = symmetrize(prefactor * remainder)
    exact = spectral_apply(generator, math.exp)
    term = np.eye(frame.dim)
    acc = np.eye(frame.dim)
    for k in range(1, order + 1):
        term = (term @ generator) / k
        acc = acc + term
    return operator_norm(symmetrize(exact - acc))


# ---------------------------------------------------------------------------
# Convergence harness
# ---------------------------------------------------------------------------


def run_convergence(
    frame: Frame,
    scheme: Scheme,
    lower: float,
    upper: float,
    n_max: int,
    samples: int,
    seed: int,
) -> ConvergenceReport:
    """Measure worst reconstruction error against the analytical bound.

    Probes are ``samples`` seeded unit vectors plus every eigenvector of the
    frame operator. Neumann and Logarithmic reconstruct with exact analysis
    coefficients and approximate duals; BinomialHalf uses the approximate
    tight family on both sides. BinomialHalf refuses bounds with B >= 3A,
    where its error bound does not converge.
    """
    scheme = Scheme(scheme)
    lower, upper = _check_frame_bounds(frame, lower, upper)
    n_max = _check_order(n_max)
    if samples < 0:
        raise ValueError("samples must be non-negative")
    if scheme is Scheme.BINOMIAL_HALF and not upper < 3.0 * lower:
        raise ValueError(
            f"BinomialHalf requires B < 3A: bounds ({lower}, {upper}) violate "
            "the convergence condition of its error bound"
        )

    decomp = jacobi_eigh(frame_operator(frame))
    rng = np.random.default_rng(seed)
    columns = [_unit_column(rng, frame.dim) for _ in range(samples)]
    columns.append(np.array(decomp.eigenvectors))
    probes = np.column_stack(columns) if len(columns) > 1 else columns[0]
    probe_norms = np.linalg.norm(probes, axis=0)

    if scheme is Scheme.LOGARITHMIC:
        prefactor, op = _log_generator(frame, lower, upper)
        scale = 1.0 / math.sqrt(lower * upper)
    else:
        op = neumann_R(frame, lower, upper)
        if scheme is Scheme.NEUMANN:
            prefactor = None
            scale = 2.0 / (lower + upper)
        else:
            prefactor = None
            scale = math.sqrt(2.0 / (lower + upper))
            coeffs = binomial_half_coefficients(n_max)

    exact_coeffs = frame.vectors @ probes
    term = frame.vectors
    acc = None
    rows = []
    for order in range(n_max + 1):
        if order == 0:
            acc = frame.vectors.copy()
        elif scheme is Scheme.LOGARITHMIC:
            term = (term @ op) * (prefactor / order)
            acc = acc + term
        elif scheme is Scheme.NEUMANN:
            term = term @ op
            acc = acc + term
        else:
            term = term @ op
            sign = -1.0 if order % 2 else 1.0
            acc = acc + (coeffs[order] * sign) * term
        family = scale * acc

        if scheme is Scheme.BINOMIAL_HALF:
            reconstruction = family.T @ (family @ probes)
        else:
            reconstruction = family.T @ exact_coeffs
        errors = np.linalg.norm(reconstruction - probes, axis=0) / probe_norms
        measured = float(np.max(errors))

        if scheme is Scheme.NEUMANN:
            bound = neumann_bound(lower, upper, order)
        elif scheme is Scheme.BINOMIAL_HALF:
            bound = binomial_bounds(lower, upper, order).reconstruction_bound
        else:
            bound = log_bound(lower, upper, order)
        rows.append(ConvergenceRow(order, measured, bound))

    return ConvergenceReport(
        scheme=scheme,
        lower=lower,
        upper=upper,
        rows=tuple(rows),
        samples=samples,
        seed=seed,
    )


def _unit_column(rng: np.random.Generator, dim: int) -> np.ndarray:
    while True:
        v = rng.standard_normal((dim, 1))
        norm = float(np.linalg.norm(v))
        if norm > 1e-12:
            return v / norm


def write_csv(report: ConvergenceReport, stream) -> None:
    """Serialize a convergence report; floats use 17 significant digits."""
    stream.write("scheme,A,B,N,measured_error,analytical_bound\n")
    for row in report.rows:
        stream.write(
            f"{report.scheme.value},{report.lower:.17g},{report.upper:.17g},"
            f"{row.order},{row.measured_error:.17g},{row.analytical_bound:.17g}\n"
        )
