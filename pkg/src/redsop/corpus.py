"""Deterministic seeded corpora: random monomial ideals and sequences.

All sampling goes through explicit :class:`random.Random` instances
(Mersenne Twister), so a seed pins every fixture byte for byte.  Bounds
default to desk scale and are enforced unless ``force`` is set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .groebner import _monomial_ideal
from .poly import Polynomial, PolyRing, monomials_of_degree
from .sop import CyclicModule

_VAR_POOL = ("X", "Y", "Z", "W", "V", "U", "T", "S")

MAX_VARS = 4
MAX_GENS = 6
MAX_DEGREE = 4


@dataclass(frozen=True)
class CorpusSpec:
    """Bounds for random monomial-ideal fixtures."""

    n: int = 3
    max_gens: int = 4
    max_degree: int = 3
    squarefree: bool = False
    count: int = 10
    seed: int = 0
    p: int = 32003
    force: bool = False

    def validate(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.n < 1 or self.n > len(_VAR_POOL):
            raise ValueError(f"n must lie in [1, {len(_VAR_POOL)}]")
        if self.max_gens < 1 or self.max_degree < 1:
            raise ValueError("generator count and degree bounds must be positive")
        if not self.force:
            if self.n > MAX_VARS:
                raise ValueError(f"n > {MAX_VARS}; pass force to override the cap")
            if self.max_gens > MAX_GENS:
                raise ValueError(f"max_gens > {MAX_GENS}; pass force to override the cap")
            if self.max_degree > MAX_DEGREE:
                raise ValueError(f"max_degree > {MAX_DEGREE}; pass force to override the cap")


def default_ring(n, p=32003):
    return PolyRing(_VAR_POOL[:n], p)


def random_monomial_exact(rng, n, deg):
    """Random exponent tuple of total degree exactly ``deg``."""
    e = [0] * n
    for _ in range(deg):
        e[rng.randrange(n)] += 1
    return tuple(e)


def random_monomial(rng, n, max_degree, squarefree=False):
    """Random nonconstant exponent tuple of degree at most ``max_degree``."""
    if squarefree:
        size = rng.randint(1, n)
        chosen = rng.sample(range(n), size)
        return tuple(1 if i in chosen else 0 for i in range(n))
    return random_monomial_exact(rng, n, rng.randint(1, max_degree))


def random_monomial_ideal(ring, rng, max_gens, max_degree, squarefree=False):
    """Random proper monomial ideal with minimalized generators."""
    k = rng.randint(1, max_gens)
    exps = [random_monomial(rng, ring.n, max_degree, squarefree) for _ in range(k)]
    return _monomial_ideal(ring, exps)


def fixtures(spec):
    """The deterministic fixture list described by the spec."""
    spec.validate()
    rng = random.Random(spec.seed)
    ring = default_ring(spec.n, spec.p)
    out = []
    while len(out) < spec.count:
        J = random_monomial_ideal(ring, rng, spec.max_gens, spec.max_degree,
                                  spec.squarefree)
        if J.is_proper():
            out.append(J)
    return out


def module_stream(seed, n_values=(2, 3, 4), max_gens=5, max_degree=4,
                  squarefree=False, p=32003, min_dim=0):
    """Yield (module, per-instance rng) pairs forever, deterministically."""
    master = random.Random(seed)
    while True:
        sub = master.getrandbits(64)
        rng = random.Random(sub)
        n = rng.choice(list(n_values))
        ring = default_ring(n, p)
        J = random_monomial_ideal(ring, rng, max_gens, max_degree, squarefree)
        if not J.is_proper():
            continue
        M = CyclicModule(ring, J)
        if M.d < min_dim:
            continue
        yield M, rng


def random_homogeneous_element(ring, rng, max_degree=3, monomial_bias=0.5):
    """Random nonzero homogeneous polynomial of positive degree."""
    deg = rng.randint(1, max_degree)
    if rng.random() < monomial_bias:
        m = random_monomial(rng, ring.n, deg)
        return Polynomial(ring, {m: 1})
    while True:
        terms = {}
        for m in monomials_of_degree(ring.n, deg):
            if rng.random() < 0.5:
                c = ring.coeff(rng.randrange(1, ring.p) if ring.p else rng.randint(1, 99))
                terms[m] = c
        if terms:
            return Polynomial(ring, terms, _raw=True)


def greedy_monomial_sequence(M, length, rng, step_tries=24):
    """Monomial sequence dropping the dimension by one at every step.

    Builds part of a system of parameters out of monomials when the
    candidate pool allows it; returns None when some step gets stuck
    (many modules admit no monomial parameters at all).
    """
    ring = M.ring
    J = M.ideal
    d = M.d
    elems = []
    for i in range(1, length + 1):
        candidates = []
        for v in range(ring.n):
            for e in (1, 2):
                m = [0] * ring.n
                m[v] = e
                candidates.append(tuple(m))
        for _ in range(step_tries):
            candidates.append(random_monomial(rng, ring.n, 3))
        rng.shuffle(candidates)
        step = None
        for m in candidates:
            x = Polynomial(ring, {m: 1})
            K = J + (x,)
            if K.dim_quotient() == d - i:
                step = x
                break
        if step is None:
            return None
        elems.append(step)
        J = J + (step,)
    return elems
