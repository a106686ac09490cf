"""Combinatorial brute-force oracle for monomial ideals.

Everything here is exact and finite: irreducible decomposition by
generator splitting, associated primes as radicals of the irredundant
components, membership of arbitrary polynomials in monomial primes, and
localization at a monomial prime by turning the outside variables into
units.  The rest of the package cross-validates its general-purpose
predicates against these answers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import Ideal, _minimalize_monomials, _monomial_ideal
from .poly import Polynomial, PolyRing, mono_lcm


@dataclass(frozen=True)
class MonomialPrime:
    """Prime generated by a subset of the variables; empty set is (0)."""

    ring: PolyRing
    vars: frozenset

    @property
    def dim(self):
        """Dimension of R/P."""
        return self.ring.n - len(self.vars)

    def sorted_vars(self):
        return tuple(n for n in self.ring.var_names if n in self.vars)

    def to_ideal(self):
        return Ideal(self.ring, tuple(self.ring.var(n) for n in self.sorted_vars()))

    def contains(self, f):
        return member_of_monomial_prime(f, self)

    def __le__(self, other):
        return self.vars <= other.vars

    def __lt__(self, other):
        return self.vars < other.vars

    def __str__(self):
        return "(" + ", ".join(self.sorted_vars()) + ")"


@dataclass(frozen=True)
class IrreducibleComponent:
    """Ideal generated by pure variable powers x_i^(a_i)."""

    ring: PolyRing
    powers: tuple  # ((var_index, exponent), ...) sorted by index

    def support(self):
        return frozenset(i for i, _ in self.powers)

    def radical(self):
        names = frozenset(self.ring.var_names[i] for i, _ in self.powers)
        return MonomialPrime(self.ring, names)

    def to_ideal(self):
        n = self.ring.n
        exps = []
        for i, a in self.powers:
            m = [0] * n
            m[i] = a
            exps.append(tuple(m))
        return _monomial_ideal(self.ring, exps)

    def contains_component(self, other):
        """Ideal containment other <= self, by per-variable exponents.

        Each generator x_i^(a_i) of ``other`` must lie in ``self``, i.e.
        ``self`` must bound the same variable by a smaller-or-equal power.
        """
        mine = dict(self.powers)
        return all(i in mine and mine[i] <= a for i, a in other.powers)

    def __str__(self):
        parts = []
        for i, a in self.powers:
            name = self.ring.var_names[i]
            parts.append(name if a == 1 else f"{name}^{a}")
        return "(" + ", ".join(parts) + ")"


def monomial_exponents_strict(J):
    """Exponent tuples of a monomial ideal; rejects other generators."""
    exps = J.monomial_exponents()
    if exps is None:
        raise ValueError("non-monomial generator")
    if any(sum(m) == 0 for m in exps):
        raise ValueError("ideal must be proper")
    return list(exps)


def irreducible_decomposition(J):
    """Irredundant irreducible components of a proper monomial ideal.

    Splits any generator with two or more variables in its support into
    the two ideals obtained by separating one pure power, recursing with
    a memo keyed on the minimalized generator set, then filters pairwise
    containments (sound here because irreducible monomial ideals are
    meet-prime among monomial ideals).
    """
    exps = monomial_exponents_strict(J)
    memo = {}

    def split(fs):
        cached = memo.get(fs)
        if cached is not None:
            return cached
        gens = _minimalize_monomials(list(fs))
        target = None
        for g in gens:
            support = [i for i, e in enumerate(g) if e]
            if len(support) >= 2:
                target = (g, support[0])
                break
        if target is None:
            comp = tuple((i, e) for m in gens for i, e in enumerate(m) if e)
            result = frozenset({tuple(sorted(comp))})
        else:
            g, i0 = target
            pure = tuple(e if i == i0 else 0 for i, e in enumerate(g))
            rest = tuple(0 if i == i0 else e for i, e in enumerate(g))
            others = [m for m in gens if m != g]
            result = split(frozenset(others + [pure])) | split(frozenset(others + [rest]))
        memo[fs] = result
        return result

    raw = split(frozenset(_minimalize_monomials(exps)))
    comps = [IrreducibleComponent(J.ring, powers) for powers in raw]
    irredundant = []
    for c in comps:
        if any(o is not c and c.contains_component(o) and c.powers != o.powers for o in comps):
            continue
        irredundant.append(c)
    # exact duplicates already collapsed by the frozenset; drop strict containments
    return sorted(irredundant, key=lambda c: (len(c.powers), c.powers))


def ass_monomial(J):
    """Associated primes of R/J for proper monomial J."""
    return {c.radical() for c in irreducible_decomposition(J)}


def oracle_dim(J):
    """Krull dimension of R/J read off the associated primes."""
    return max(p.dim for p in ass_monomial(J))


def assh_monomial(J):
    """Associated primes of maximal dimension."""
    primes = ass_monomial(J)
    d = max(p.dim for p in primes)
    return {p for p in primes if p.dim == d}


def member_of_monomial_prime(f, P):
    """True when f lies in P, i.e. every term involves a variable of P."""
    if f.ring != P.ring:
        raise ValueError("ring mismatch")
    idx = {P.ring.var_names.index(n) for n in P.vars}
    return all(any(m[i] for i in idx) for m in f.terms)


def localize_at_monomial_prime(J, P):
    """Present (R/J) localized at P over the subring in P's variables.

    Variables outside P become units, so each monomial generator maps to
    its sub-monomial in P's variables; a generator supported entirely
    outside P collapses to a unit, which happens exactly when P is not in
    the support of R/J.  P must involve at least one variable.
    """
    if J.ring != P.ring:
        raise ValueError("ring mismatch")
    if not P.vars:
        raise ValueError("localization at the zero prime is the fraction field")
    exps = J.monomial_exponents()
    if exps is None:
        raise ValueError("non-monomial generator")
    ring = J.ring
    kept = [i for i, n in enumerate(ring.var_names) if n in P.vars]
    sub = PolyRing(tuple(ring.var_names[i] for i in kept), ring.p)
    mapped = []
    for m in exps:
        restricted = tuple(m[i] for i in kept)
        if sum(restricted) == 0:
            return Ideal(sub, (sub.one,))
        mapped.append(restricted)
    return _monomial_ideal(sub, mapped)


def restrict_monomial_poly(f, P):
    """Image of a monomial under localization at P, over the subring."""
    if len(f.terms) != 1:
        raise ValueError("expected a monomial")
    ring = f.ring
    kept = [i for i, n in enumerate(ring.var_names) if n in P.vars]
    sub = PolyRing(tuple(ring.var_names[i] for i in kept), ring.p)
    (m, c), = f.terms.items()
    return Polynomial(sub, {tuple(m[i] for i in kept): c})


def monomial_intersection(A, B):
    """Combinatorial A cap B: pairwise lcms of the generators."""
    if A.ring != B.ring:
        raise ValueError("ring mismatch")
    ea = A.monomial_exponents()
    eb = B.monomial_exponents()
    if ea is None or eb is None:
        raise ValueError("non-monomial generator")
    return _monomial_ideal(A.ring, [mono_lcm(a, b) for a in ea for b in eb])


def is_zero_divisor_oracle(f, J):
    """Zero-divisor test on R/J: membership in some associated prime."""
    return any(member_of_monomial_prime(f, P) for P in ass_monomial(J))


def monomial_primes(ring):
    """Every monomial prime of the ring, the zero prime included."""
    names = ring.var_names
    out = []
    for mask in range(1 << len(names)):
        sub = frozenset(n for i, n in enumerate(names) if mask >> i & 1)
        out.append(MonomialPrime(ring, sub))
    return sorted(out, key=lambda p: (len(p.vars), p.sorted_vars()))


def monomial_primes_over(J):
    """Monomial primes containing J, i.e. the monomial part of Supp R/J."""
    exps = monomial_exponents_strict(J)
    ring = J.ring
    out = []
    for P in monomial_primes(ring):
        idx = {ring.var_names.index(n) for n in P.vars}
        if all(any(m[i] for i in idx) for m in exps):
            out.append(P)
    return out
