"""Vector-space structure carried onto n-tuples through a bijection.

Given any invertible map from n-tuples onto the standard space R^k, the
operations defined by conjugation,

    x (+) y = back(fwd(x) + fwd(y))        c (*) x = back(c * fwd(x)),

turn the set of n-tuples into a k-dimensional vector space and the map
into a linear isomorphism by construction.  This module provides the
transported operations, the image of a basis with exact coordinates,
and randomized exact checkers that witness the eight vector-space
axioms and the linearity identities on seeded samples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import sampling
from .atlas import BijectionHandle
from .errors import ArityError, BasisError
from .pairing import RealTuple
from .rational import format_rational

__all__ = [
    "KVector",
    "TransportedSpace",
    "standard_space",
    "CheckResult",
    "VerificationReport",
    "check_axioms",
    "check_isomorphism",
]

KVector = tuple[Fraction, ...]


def _vec(values, arity: int, label: str) -> KVector:
    coords = tuple(Fraction(v) for v in values)
    if len(coords) != arity:
        raise ArityError(f"arity mismatch: expected {arity} {label} coordinates")
    return coords


def _add(u: KVector, v: KVector) -> KVector:
    return tuple(a + b for a, b in zip(u, v))


def _scale(c: Fraction, u: KVector) -> KVector:
    return tuple(c * a for a in u)


def _solve(columns: Sequence[KVector], rhs: KVector) -> list[Fraction]:
    """Solve sum_j coords[j] * columns[j] = rhs by exact elimination.

    Fraction-preserving Gaussian elimination with first-nonzero pivot
    selection; raises BasisError when the column matrix is singular.
    """
    k = len(rhs)
    rows = [
        [Fraction(columns[j][i]) for j in range(k)] + [Fraction(rhs[i])]
        for i in range(k)
    ]
    for col in range(k):
        pivot = next((r for r in range(col, k) if rows[r][col] != 0), None)
        if pivot is None:
            raise BasisError("not a basis")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col]
        for r in range(col + 1, k):
            factor = rows[r][col] / lead[col]
            if factor:
                for c in range(col, k + 1):
                    rows[r][c] -= factor * lead[c]
    coords = [Fraction(0)] * k
    for i in reversed(range(k)):
        acc = rows[i][k]
        for j in range(i + 1, k):
            acc -= rows[i][j] * coords[j]
        coords[i] = acc / rows[i][i]
    return coords


@dataclass(frozen=True)
class TransportedSpace:
    """The set of n-tuples with operations imitating the standard R^k."""

    n: int
    k: int
    phi: BijectionHandle

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise ArityError("zero arity")
        if self.phi.source.arity != self.n or self.phi.target.arity != self.k:
            raise ArityError("arity mismatch: handle does not fit (n, k)")

    def vadd(self, x: RealTuple, y: RealTuple) -> RealTuple:
        """Transported vector addition back(fwd(x) + fwd(y))."""
        x = _vec(x, self.n, "source")
        y = _vec(y, self.n, "source")
        return self.phi.backward(_add(self.phi.forward(x), self.phi.forward(y)))

    def smul(self, c: Fraction, x: RealTuple) -> RealTuple:
        """Transported scalar multiplication back(c * fwd(x))."""
        x = _vec(x, self.n, "source")
        return self.phi.backward(_scale(Fraction(c), self.phi.forward(x)))

    def zero(self) -> RealTuple:
        """Additive identity: the preimage of the zero k-vector."""
        return self.phi.backward((Fraction(0),) * self.k)

    def neg(self, x: RealTuple) -> RealTuple:
        """Additive inverse: the preimage of -fwd(x)."""
        x = _vec(x, self.n, "source")
        return self.phi.backward(_scale(Fraction(-1), self.phi.forward(x)))

    def basis(self, vectors: Sequence[KVector]) -> list[RealTuple]:
        """Preimages of a basis of R^k; a basis of the transported space."""
        vecs = self._checked_basis(vectors)
        return [self.phi.backward(v) for v in vecs]

    def coordinates(self, vectors: Sequence[KVector], x: RealTuple) -> list[Fraction]:
        """The unique coordinates of x in the transported basis.

        These are exactly the coordinates of fwd(x) in the given basis
        of R^k, computed by exact elimination.
        """
        vecs = self._checked_basis(vectors)
        x = _vec(x, self.n, "source")
        return _solve(vecs, self.phi.forward(x))

    def _checked_basis(self, vectors: Sequence[KVector]) -> list[KVector]:
        vecs = [tuple(Fraction(c) for c in v) for v in vectors]
        if len(vecs) != self.k or any(len(v) != self.k for v in vecs):
            raise BasisError("not a basis")
        _solve(vecs, (Fraction(0),) * self.k)  # singularity probe
        return vecs


def standard_space(n: int, k: int) -> TransportedSpace:
    """The transported space over the interleaving bijection R^n <-> R^k."""
    from .pairing import build_phi

    return TransportedSpace(n, k, build_phi(n, k))


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check over all trials."""

    name: str
    trials: int
    passes: int
    first_counterexample: dict | None

    @property
    def passed(self) -> bool:
        return self.passes == self.trials

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "passes": self.passes,
            "first_counterexample": self.first_counterexample,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Machine-readable record of an exact randomized verification."""

    kind: str
    n: int
    k: int
    trials: int
    seed: int
    generator: str
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "space": {"n": self.n, "k": self.k},
            "trials": self.trials,
            "seed": self.seed,
            "generator": self.generator,
            "all_passed": self.all_passed,
            "checks": [check.to_dict() for check in self.checks],
        }


def _fmt(value) -> list[str] | str:
    if isinstance(value, tuple):
        return [format_rational(c) for c in value]
    return format_rational(value)


class _Recorder:
    """Accumulates pass counts and the first counterexample per check."""

    def __init__(self, names: Sequence[str]):
        self.names = list(names)
        self.passes = {name: 0 for name in names}
        self.counterexamples: dict[str, dict | None] = {name: None for name in names}

    def record(self, name: str, lhs, rhs, inputs: dict) -> None:
        if lhs == rhs:
            self.passes[name] += 1
        elif self.counterexamples[name] is None:
            detail = {key: _fmt(value) for key, value in inputs.items()}
            detail["lhs"] = _fmt(lhs)
            detail["rhs"] = _fmt(rhs)
            self.counterexamples[name] = detail

    def results(self, trials: int) -> tuple[CheckResult, ...]:
        return tuple(
            CheckResult(name, trials, self.passes[name], self.counterexamples[name])
            for name in self.names
        )


_AXIOM_NAMES = (
    "commutativity of addition",
    "associativity of addition",
    "additive identity",
    "additive inverse",
    "scalar identity",
    "scalar compatibility",
    "distributivity over vector addition",
    "distributivity over scalar addition",
)


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed * 1_000_003 + trial)


def check_axioms(space: TransportedSpace, trials: int = 100, seed: int = 0) -> VerificationReport:
    """Evaluate both sides of all eight vector-space axioms, exactly.

    Inputs are drawn per trial through the space's own bijection: random
    terminating-decimal k-vectors are pulled back to source tuples, and
    scalars come from the same family.  That keeps every intermediate
    value cheap to expand while still exercising the full machinery; the
    sampling recipe is recorded in the report.  Failures are reported,
    not raised.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    recorder = _Recorder(_AXIOM_NAMES)
    zero = space.zero()
    one = Fraction(1)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        x = space.phi.backward(sampling.terminating_vector(rng, space.k))
        y = space.phi.backward(sampling.terminating_vector(rng, space.k))
        z = space.phi.backward(sampling.terminating_vector(rng, space.k))
        c = sampling.terminating_scalar(rng)
        c1 = sampling.terminating_scalar(rng)
        c2 = sampling.terminating_scalar(rng)
        inputs = {"x": x, "y": y, "z": z, "c": c, "c1": c1, "c2": c2}

        recorder.record(
            _AXIOM_NAMES[0], space.vadd(x, y), space.vadd(y, x), inputs
        )
        recorder.record(
            _AXIOM_NAMES[1],
            space.vadd(x, space.vadd(y, z)),
            space.vadd(space.vadd(x, y), z),
            inputs,
        )
        recorder.record(_AXIOM_NAMES[2], space.vadd(x, zero), x, inputs)
        recorder.record(_AXIOM_NAMES[3], space.vadd(x, space.neg(x)), zero, inputs)
        recorder.record(_AXIOM_NAMES[4], space.smul(one, x), x, inputs)
        recorder.record(
            _AXIOM_NAMES[5],
            space.smul(c1, space.smul(c2, x)),
            space.smul(c1 * c2, x),
            inputs,
        )
        recorder.record(
            _AXIOM_NAMES[6],
            space.smul(c, space.vadd(x, y)),
            space.vadd(space.smul(c, x), space.smul(c, y)),
            inputs,
        )
        recorder.record(
            _AXIOM_NAMES[7],
            space.smul(c1 + c2, x),
            space.vadd(space.smul(c1, x), space.smul(c2, x)),
            inputs,
        )
    return VerificationReport(
        "axioms",
        space.n,
        space.k,
        trials,
        seed,
        sampling.AXIOM_GENERATOR_NOTE,
        recorder.results(trials),
    )


_ISO_NAMES = (
    "additivity",
    "homogeneity",
    "round trip source",
    "round trip target",
)


def check_isomorphism(space: TransportedSpace, trials: int = 100, seed: int = 0) -> VerificationReport:
    """Witness that the bijection is linear: it respects (+) and (*).

    Checks fwd(x (+) y) = fwd(x) + fwd(y) and fwd(c (*) x) = c * fwd(x)
    together with both round trips, on the same seeded orbit samples as
    :func:`check_axioms`.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    recorder = _Recorder(_ISO_NAMES)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        target = sampling.terminating_vector(rng, space.k)
        x = space.phi.backward(sampling.terminating_vector(rng, space.k))
        y = space.phi.backward(sampling.terminating_vector(rng, space.k))
        c = sampling.terminating_scalar(rng)
        inputs = {"x": x, "y": y, "c": c, "target": target}

        recorder.record(
            _ISO_NAMES[0],
            space.phi.forward(space.vadd(x, y)),
            _add(space.phi.forward(x), space.phi.forward(y)),
            inputs,
        )
        recorder.record(
            _ISO_NAMES[1],
            space.phi.forward(space.smul(c, x)),
            _scale(Fraction(c), space.phi.forward(x)),
            inputs,
        )
        recorder.record(
            _ISO_NAMES[2], space.phi.backward(space.phi.forward(x)), x, inputs
        )
        recorder.record(
            _ISO_NAMES[3], space.phi.forward(space.phi.backward(target)), target, inputs
        )
    return VerificationReport(
        "isomorphism",
        space.n,
        space.k,
        trials,
        seed,
        sampling.AXIOM_GENERATOR_NOTE,
        recorder.results(trials),
    )
