"""The classical symmetric-polynomial families, exactly.

Complete homogeneous and elementary polynomials live in the power-sum
coordinates t; (skew-)Schur polynomials come from the determinant identity
det(h_{lam_i - mu_j - i + j}); monomial and Hall-Littlewood polynomials live
in a finite alphabet x1..xN, the latter carrying the deformation parameter Q.
``miwa_push`` moves a t-polynomial into the alphabet via
t_j -> (1/j) * (x1^j + ... + xN^j).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache
from itertools import permutations
from math import factorial

from .characters import character
from .partitions import ConjugacyClass, YoungDiagram, partitions_of
from .polyalgebra import Polynomial, Variable, exact_divide, determinant, q_var, t_var, x_var

__all__ = [
    "MiwaContext",
    "AlphabetContext",
    "homogeneous",
    "elementary",
    "schur",
    "schur_via_characters",
    "monomial",
    "hall_littlewood",
    "miwa_push",
]


@dataclass(frozen=True)
class MiwaContext:
    """Provides the power-sum variables t1..t_count."""

    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be positive")

    def variables(self) -> tuple[Variable, ...]:
        return tuple(t_var(i) for i in range(1, self.count + 1))


@dataclass(frozen=True)
class AlphabetContext:
    """Provides the alphabet variables x1..x_count."""

    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be positive")

    def variables(self) -> tuple[Variable, ...]:
        return tuple(x_var(i) for i in range(1, self.count + 1))


@lru_cache(maxsize=None)
def homogeneous(n: int) -> Polynomial:
    """Complete homogeneous polynomial h_n in the t-coordinates.

    h_n sums, over all multiplicity vectors with sum j*k_j = n, the products
    of t_j^{k_j} / k_j!; h_0 = 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = Polynomial.zero()
    for lam in partitions_of(n):
        denom = 1
        exps = {}
        for j, k in lam.conjugacy_class().multiplicities.items():
            denom *= factorial(k)
            exps[t_var(j)] = k
        total = total + Polynomial.term(Fraction(1, denom), exps)
    return total


@lru_cache(maxsize=None)
def elementary(n: int) -> Polynomial:
    """Elementary polynomial e_n = (-1)^n h_n with every t_j negated."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    h = homogeneous(n)
    flips = {v: -Polynomial.variable(v) for v in h.variables()}
    e = h.substitute(flips)
    return -e if n % 2 else e


def _h_or_zero(k: int) -> Polynomial:
    return Polynomial.zero() if k < 0 else homogeneous(k)


def schur(lam: YoungDiagram, mu: YoungDiagram | None = None) -> Polynomial:
    """(Skew-)Schur polynomial in the t-coordinates via the h-determinant.

    The matrix is square of side max(rows(lam), rows(mu)), both partitions
    zero-padded, so the determinant vanishes whenever mu is not contained in
    lam.  With mu omitted this is the straight Schur polynomial.
    """
    inner = mu if mu is not None else YoungDiagram()
    m = max(lam.rows, inner.rows)
    if m == 0:
        return Polynomial.one()
    lp = lam.parts + (0,) * (m - lam.rows)
    mp = inner.parts + (0,) * (m - inner.rows)
    rows = [
        [_h_or_zero(lp[i] - mp[j] - (i + 1) + (j + 1)) for j in range(m)]
        for i in range(m)
    ]
    return determinant(rows)


def schur_via_characters(lam: YoungDiagram) -> Polynomial:
    """Schur polynomial as the character-weighted sum over cycle types.

    Independent route: sum over all mu of the same weight of
    chi^lam(mu) * prod_j t_j^{k_j} / k_j!.
    """
    total = Polynomial.zero()
    for mu in partitions_of(lam.boxes):
        cc = mu.conjugacy_class()
        chi = character(lam, cc)
        if not chi:
            continue
        denom = 1
        exps = {}
        for j, k in cc.multiplicities.items():
            denom *= factorial(k)
            exps[t_var(j)] = k
        total = total + Polynomial.term(Fraction(chi, denom), exps)
    return total


def _distinct_permutations(seq: tuple[int, ...]):
    """All distinct arrangements of a multiset, by repeated next-permutation."""
    current = sorted(seq)
    n = len(current)
    while True:
        yield tuple(current)
        k = n - 2
        while k >= 0 and current[k] >= current[k + 1]:
            k -= 1
        if k < 0:
            return
        j = n - 1
        while current[j] <= current[k]:
            j -= 1
        current[k], current[j] = current[j], current[k]
        current[k + 1:] = reversed(current[k + 1:])


def monomial(lam: YoungDiagram, alphabet: AlphabetContext) -> Polynomial:
    """Monomial symmetric polynomial: all distinct permutations of the exponents."""
    n = alphabet.count
    if lam.rows > n:
        return Polynomial.zero()
    padded = lam.parts + (0,) * (n - lam.rows)
    terms = {}
    for alpha in _distinct_permutations(padded):
        mono = tuple((x_var(i + 1), e) for i, e in enumerate(alpha) if e)
        terms[mono] = Fraction(1)
    return Polynomial(terms)


@cache
def _signed_permutations(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Every permutation of 0..n-1 with its sign."""
    out = []
    for perm in permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        out.append((-1 if inversions % 2 else 1, perm))
    return tuple(out)


def _sort_sign(alpha: tuple[int, ...]) -> tuple[tuple[int, ...], int] | None:
    """Descending sort of distinct entries with permutation sign, None on repeats."""
    n = len(alpha)
    inversions = 0
    for i in range(n):
        for j in range(i + 1, n):
            if alpha[i] == alpha[j]:
                return None
            if alpha[i] < alpha[j]:
                inversions += 1
    return tuple(sorted(alpha, reverse=True)), -1 if inversions % 2 else 1


def _pair_product(n: int) -> dict[tuple[int, tuple[int, ...]], int]:
    """Expansion of prod_{i<j} (x_i - Q x_j) as {(Q power, exponents): coeff}."""
    terms: dict[tuple[int, tuple[int, ...]], int] = {(0, (0,) * n): 1}
    for i in range(n):
        for j in range(i + 1, n):
            nxt: dict[tuple[int, tuple[int, ...]], int] = {}
            for (k, alpha), c in terms.items():
                up = list(alpha)
                up[i] += 1
                key = (k, tuple(up))
                nxt[key] = nxt.get(key, 0) + c
                down = list(alpha)
                down[j] += 1
                key = (k + 1, tuple(down))
                nxt[key] = nxt.get(key, 0) - c
            terms = {key: c for key, c in nxt.items() if c}
    return terms


def _expand_alternants(
    classes: dict[tuple[int, tuple[int, ...]], int],
    perms: tuple[tuple[int, tuple[int, ...]], ...],
) -> dict[tuple[int, tuple[int, ...]], int]:
    out: dict[tuple[int, tuple[int, ...]], int] = {}
    for sgn, perm in perms:
        for (k, beta), c in classes.items():
            alpha = tuple(beta[p] for p in perm)
            key = (k, alpha)
            out[key] = out.get(key, 0) + sgn * c
    return out


def _q_bracket(j: int) -> Polynomial:
    """1 + Q + ... + Q^{j-1}."""
    return Polynomial({((q_var(), a),) if a else (): Fraction(1) for a in range(j)})


def hall_littlewood(lam: YoungDiagram, alphabet: AlphabetContext, workers: int = 1) -> Polynomial:
    """Hall-Littlewood polynomial P_lam(x1..xN; Q).

    Computed without rational-function arithmetic: antisymmetrize
    x^lam * prod_{i<j}(x_i - Q x_j) over the full symmetric group, divide
    exactly by the Vandermonde product, then divide by the Q-factorial of
    every row-multiplicity (zero rows counting N - rows(lam)).  At Q=0 this
    degenerates to the Schur polynomial and at Q=1 to the monomial one.
    """
    n = alphabet.count
    if lam.rows > n:
        raise ValueError(f"partition has {lam.rows} rows but the alphabet only {n} variables")
    if workers < 1:
        raise ValueError("workers must be positive")
    padded = lam.parts + (0,) * (n - lam.rows)

    # One expansion of x^lam * prod (x_i - Q x_j), collapsed onto alternant
    # classes: terms whose exponent vector repeats an entry antisymmetrize
    # to zero and are dropped here.
    classes: dict[tuple[int, tuple[int, ...]], int] = {}
    for (k, alpha), c in _pair_product(n).items():
        shifted = tuple(a + p for a, p in zip(alpha, padded))
        sorted_sign = _sort_sign(shifted)
        if sorted_sign is None:
            continue
        beta, sgn = sorted_sign
        key = (k, beta)
        s = classes.get(key, 0) + sgn * c
        if s:
            classes[key] = s
        else:
            del classes[key]

    # Full antisymmetrized numerator, the permutation sum split over workers;
    # exact coefficients make the merge order irrelevant.
    perms = _signed_permutations(n)
    if workers == 1 or len(perms) < 2 * workers:
        chunks = [_expand_alternants(classes, perms)]
    else:
        size = (len(perms) + workers - 1) // workers
        slices = [perms[i: i + size] for i in range(0, len(perms), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda s: _expand_alternants(classes, s), slices))
    merged: dict[tuple[int, tuple[int, ...]], int] = {}
    for chunk in chunks:
        for key, c in chunk.items():
            s = merged.get(key, 0) + c
            if s:
                merged[key] = s
            else:
                del merged[key]

    terms = {}
    for (k, alpha), c in merged.items():
        mono = (((q_var(), k),) if k else ()) + tuple(
            (x_var(i + 1), e) for i, e in enumerate(alpha) if e
        )
        terms[mono] = Fraction(c)
    numerator = Polynomial(terms)

    quotient = numerator
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            vandermonde_factor = Polynomial.variable(x_var(i)) - Polynomial.variable(x_var(j))
            quotient = exact_divide(quotient, vandermonde_factor)

    row_counts = list(lam.conjugacy_class().multiplicities.values())
    row_counts.append(n - lam.rows)
    for count in row_counts:
        for j in range(2, count + 1):
            quotient = exact_divide(quotient, _q_bracket(j))
    return quotient


def miwa_push(p: Polynomial, alphabet: AlphabetContext) -> Polynomial:
    """Rewrite a t-polynomial in the alphabet via the power sums."""
    bad = [v for v in p.variables() if v.kind != "t"]
    if bad:
        raise ValueError(f"polynomial must use only t-variables, found {bad[0].name}")
    n = alphabet.count
    bindings = {}
    for v in p.variables():
        power_sum = Polynomial.zero()
        for i in range(1, n + 1):
            power_sum = power_sum + Polynomial.term(Fraction(1, v.index), {x_var(i): v.index})
        bindings[v] = power_sum
    return p.substitute(bindings)
