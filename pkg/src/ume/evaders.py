"""Evader Markov chains and exact capture-probability evaluation.

An evader is a row-substochastic Markov chain over the shared node index
space: a source distribution ``a``, a transition matrix ``M`` whose
``target`` row is zero (reaching the target kills the evader), and a
scenario weight. Mass missing from a row is leakage: the evader vanishes
in place, which counts as "never reaches the target" and therefore
contributes to the capture objective.

The capture probability of a chain against a plan (r, d) is

    J = 1 - (a [I - (M - M*r*d)]^-1)_t

with * the elementwise product. Undetected passage over (u, v) scales
the transition by (1 - r[u,v] d[u,v]); the resolvent sums the expected
undetected arrivals at t, which is 0 or 1 because t is killing. The
value is computed by a single LU-factored left-solve with ``a``; the
inverse is never formed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import get_lapack_funcs, lu_factor, lu_solve

from .errors import DimensionMismatchError, SingularSystemError, UmeError
from .interdiction import InterdictionPlan

PROB_TOL = 1e-12
#: reciprocal-condition estimates below this signal structural recurrence
#: rather than roundoff
RCOND_FLOOR = 1e-12
#: values may stray this far outside [0, 1] before evaluation refuses
CLAMP_TOL = 1e-9


@dataclass(frozen=True)
class EvaderChain:
    """One evader: source distribution, transition matrix, killing target,
    and scenario weight.

    The constructor only enforces shapes; probabilistic invariants are
    checked by :func:`validate_chain`, which reports rather than raises so
    that deliberately broken chains can be inspected.
    """

    source: np.ndarray
    transition: np.ndarray
    target: int
    weight: float = 1.0

    def __post_init__(self):
        src = np.asarray(self.source, dtype=float)
        trans = np.asarray(self.transition, dtype=float)
        if src.ndim != 1:
            raise ValueError(f"source must be a vector, got shape {src.shape}")
        n = src.shape[0]
        if trans.shape != (n, n):
            raise ValueError(
                f"transition must be {n}x{n} to match the source, got {trans.shape}"
            )
        if not 0 <= self.target < n:
            raise ValueError(f"target {self.target} outside node range 0..{n - 1}")
        src = src.copy()
        trans = trans.copy()
        src.setflags(write=False)
        trans.setflags(write=False)
        object.__setattr__(self, "source", src)
        object.__setattr__(self, "transition", trans)

    @property
    def n(self):
        return self.source.shape[0]


@dataclass(frozen=True)
class Violation:
    kind: str
    where: object
    detail: str

    def __str__(self):
        return f"{self.kind} at {self.where}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self):
        return not self.violations

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(str(v) for v in self.violations)


def validate_chain(chain: EvaderChain) -> ValidationReport:
    """Report every violated chain invariant with its location."""
    out = []
    a, m, t = chain.source, chain.transition, chain.target
    total = float(a.sum())
    if abs(total - 1.0) > PROB_TOL:
        out.append(Violation("source-sum", None, f"sums to {total!r}, expected 1"))
    for i in np.nonzero(a < 0)[0]:
        out.append(Violation("negative-source", int(i), f"a[{i}] = {a[i]!r}"))
    rows, cols = np.nonzero(m < 0)
    for i, j in zip(rows, cols):
        out.append(Violation("negative-entry", (int(i), int(j)), f"M[{i},{j}] = {m[i, j]!r}"))
    rows, cols = np.nonzero(m > 1 + PROB_TOL)
    for i, j in zip(rows, cols):
        out.append(Violation("entry-above-one", (int(i), int(j)), f"M[{i},{j}] = {m[i, j]!r}"))
    sums = m.sum(axis=1)
    for i in np.nonzero(sums > 1 + PROB_TOL)[0]:
        out.append(Violation("row-sum", int(i), f"row {i} sums to {sums[i]!r} > 1"))
    for j in np.nonzero(m[t] != 0)[0]:
        out.append(
            Violation("target-row", (t, int(j)), f"killing row M[{t},{j}] = {m[t, j]!r} != 0")
        )
    if not 0 < chain.weight <= 1:
        out.append(Violation("weight", None, f"weight {chain.weight!r} outside (0, 1]"))
    return ValidationReport(tuple(out))


class EvaderEnsemble:
    """Ordered evaders over one node index space, with weights summing to 1."""

    def __init__(self, chains):
        chains = tuple(chains)
        if not chains:
            raise ValueError("ensemble needs at least one evader")
        n = chains[0].n
        for k, c in enumerate(chains):
            if c.n != n:
                raise ValueError(f"evader {k} has dimension {c.n}, expected {n}")
        total = sum(c.weight for c in chains)
        if abs(total - 1.0) > PROB_TOL:
            raise ValueError(f"evader weights sum to {total!r}, expected 1")
        self.chains = chains
        self.n = n

    def __iter__(self):
        return iter(self.chains)

    def __len__(self):
        return len(self.chains)

    def __getitem__(self, k):
        return self.chains[k]

    def __eq__(self, other):
        if not isinstance(other, EvaderEnsemble) or len(self) != len(other):
            return False
        return all(
            a.target == b.target
            and a.weight == b.weight
            and np.array_equal(a.source, b.source)
            and np.array_equal(a.transition, b.transition)
            for a, b in zip(self.chains, other.chains)
        )

    def __repr__(self):
        return f"EvaderEnsemble(k={len(self.chains)}, n={self.n})"


def _passage_kernel(chain, plan):
    """M - M*r*d: transition probabilities surviving undetected."""
    n = chain.n
    rd = plan.detection_matrix(n)
    return chain.transition * (1.0 - rd)


def capture_probability(chain: EvaderChain, plan: InterdictionPlan) -> float:
    """Exact capture probability J of one chain under one plan.

    Raises SingularSystemError when I - (M - M*r*d) is numerically singular
    (reciprocal condition estimate below 1e-12), which signals a recurrent
    class with no leakage under the plan, and DimensionMismatchError when
    the plan references nodes outside the chain's index space.
    """
    kernel = _passage_kernel(chain, plan)
    n = chain.n
    system = np.eye(n) - kernel
    # left-solve a^T [I - K]^{-1}: factor the transpose once, solve with a
    at = system.T.copy()
    anorm = np.linalg.norm(at, 1)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lu, piv = lu_factor(at)
    gecon = get_lapack_funcs("gecon", (at,))
    rcond, _ = gecon(lu, anorm, norm="1")
    if not rcond >= RCOND_FLOOR:
        raise SingularSystemError(
            f"passage system is singular (rcond {rcond!r}): "
            "a recurrent class never leaks mass under this plan"
        )
    visits = lu_solve((lu, piv), chain.source)
    j = 1.0 - float(visits[chain.target])
    if j < 0.0:
        if j < -CLAMP_TOL:
            raise ValueError(f"capture probability {j!r} below 0 beyond tolerance")
        return 0.0
    if j > 1.0:
        if j > 1.0 + CLAMP_TOL:
            raise ValueError(f"capture probability {j!r} above 1 beyond tolerance")
        return 1.0
    return j


def weighted_capture(ensemble: EvaderEnsemble, plan: InterdictionPlan) -> float:
    """Expected capture probability sum_k w_k J_k over the ensemble."""
    total = 0.0
    for k, chain in enumerate(ensemble):
        try:
            total += chain.weight * capture_probability(chain, plan)
        except UmeError as exc:
            raise type(exc)(f"evader {k}: {exc}") from exc
    return total
