"""Type C_n weights: dominant weights, the Weyl dimension product and small irreducibles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

MAX_RANK = 8


@dataclass(frozen=True)
class DominantWeight:
    """``m_1 w_1 + ... + m_n w_n`` with nonnegative integer ``m_i``."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(m) for m in self.coeffs)
        if not coeffs:
            raise ValueError("weight needs rank n >= 1")
        if any(m < 0 for m in coeffs):
            raise ValueError(f"weight {coeffs} is not dominant (negative coefficient)")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, n: int) -> "DominantWeight":
        return cls((0,) * n)

    @classmethod
    def fundamental(cls, k: int, n: int, mult: int = 1) -> "DominantWeight":
        if not 1 <= k <= n:
            raise ValueError(f"fundamental weight index {k} out of range 1..{n}")
        c = [0] * n
        c[k - 1] = mult
        return cls(tuple(c))

    @classmethod
    def parse(cls, text: str, n: int = None) -> "DominantWeight":
        try:
            coeffs = tuple(int(t) for t in text.split(","))
        except ValueError:
            raise ValueError(f"weight must look like 'm1,...,mn', got {text!r}") from None
        if n is not None and len(coeffs) != n:
            raise ValueError(f"weight {text!r} has {len(coeffs)} coefficients, expected {n}")
        return cls(coeffs)

    def __add__(self, other: "DominantWeight") -> "DominantWeight":
        if self.n != other.n:
            raise ValueError("weights of different rank")
        return DominantWeight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def degree(self) -> int:
        return sum(self.coeffs)

    def __str__(self):
        terms = []
        for i, m in enumerate(self.coeffs, start=1):
            if m:
                terms.append(f"w{i}" if m == 1 else f"{m}w{i}")
        return "+".join(terms) if terms else "0"


def weyl_dim(lam: DominantWeight) -> int:
    """Dimension of the irreducible ``sp(2n, C)``-module of highest weight ``lam``.

    Evaluates the three-factor product over ``i < j`` (twice) and ``i`` in
    exact rationals, then insists the result is a positive integer.
    """
    m, n = lam.coeffs, lam.n
    # tail[i] = m_i + ... + m_n (0-based: m[i:])
    tail = [sum(m[i:]) for i in range(n + 1)]
    dim = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            seg = tail[i - 1] - tail[j - 1]  # m_i + ... + m_{j-1}
            dim *= 1 + Fraction(seg, j - i)
            dim *= 1 + Fraction(seg + 2 * tail[j - 1], 2 * n + 2 - j - i)
    for i in range(1, n + 1):
        dim *= 1 + Fraction(tail[i - 1], n + 1 - i)
    if dim.denominator != 1 or dim < 1:
        raise ArithmeticError(f"non-integral dimension {dim} for {lam.coeffs}")
    return int(dim)


def fundamental_dim(k: int, n: int) -> int:
    """``C(2n, k) - C(2n, k-2)``, the dimension of ``V(w_k)``."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return comb(2 * n, k) - (comb(2 * n, k - 2) if k >= 2 else 0)


def sp_dim(n: int) -> int:
    return n * (2 * n + 1)


# Closed forms for a few small modules, as functions of the rank.
CLOSED_FORMS = {
    "w1": ((1,), lambda n: 2 * n),
    "2w1": ((2,), lambda n: n * (2 * n + 1)),
    "w2": ((0, 1), lambda n: n * (2 * n - 1) - 1),
    "w1+w3": ((1, 0, 1), lambda n: (n + 1) * (2 * n + 1) * (2 * n - 1) * (n - 2) // 2),
    "2w2": ((0, 2), lambda n: n * (n - 1) * (2 * n - 1) * (2 * n + 3) // 3),
    "w1+w2": ((1, 1), lambda n: 8 * n * (n - 1) * (n + 1) // 3),
}


def closed_form_weight(label: str, n: int) -> DominantWeight:
    prefix, _ = CLOSED_FORMS[label]
    if len(prefix) > n:
        raise ValueError(f"{label} needs rank >= {len(prefix)}")
    return DominantWeight(prefix + (0,) * (n - len(prefix)))


def closed_form_mismatches(n: int) -> list:
    """Every closed form and ``D_k^n`` compared with :func:`weyl_dim`; returns the disagreements."""
    bad = []
    for label, (prefix, f) in CLOSED_FORMS.items():
        if len(prefix) > n:
            continue
        got = weyl_dim(closed_form_weight(label, n))
        if got != f(n):
            bad.append({"weight": label, "n": n, "weyl_dim": got, "closed_form": f(n)})
    for k in range(1, n + 1):
        got = weyl_dim(DominantWeight.fundamental(k, n))
        if got != fundamental_dim(k, n):
            bad.append({"weight": f"w{k}", "n": n, "weyl_dim": got, "closed_form": fundamental_dim(k, n)})
    return bad


def check_L14(n: int) -> bool:
    """Whether every ``V(w_k)`` with ``3 <= k <= n`` is larger than ``sp(2n)``."""
    if n <= 3:
        raise ValueError("the bound on fundamental modules needs n > 3")
    return all(fundamental_dim(k, n) > sp_dim(n) for k in range(3, n + 1))


def enumerate_small_reps(n: int, bound="auto", max_rank: int = MAX_RANK, violations: list = None) -> list:
    """All nonzero dominant weights with ``weyl_dim <= bound``.

    Grows weights from the fundamental ones by adding ``w_i``; a weight above
    the bound is not extended. This is exhaustive provided the dimension
    strictly increases along every step, which is checked on each edge
    visited; failures are appended to ``violations`` when given.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    if n > max_rank:
        raise ValueError(f"rank {n} exceeds the enumeration cap {max_rank}")
    if bound == "auto":
        bound = sp_dim(n)
    bound = int(bound)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    steps = [DominantWeight.fundamental(i, n) for i in range(1, n + 1)]
    zero = DominantWeight.zero(n)
    seen = {zero: 1}
    frontier = [zero]
    found = []
    while frontier:
        nxt = []
        for lam in frontier:
            base = seen[lam]
            for w in steps:
                mu = lam + w
                d = seen.get(mu)
                if d is None:
                    d = weyl_dim(mu)
                    seen[mu] = d
                    if d <= bound:
                        found.append(mu)
                        nxt.append(mu)
                if d <= base and violations is not None:
                    violations.append({"from": list(lam.coeffs), "to": list(mu.coeffs), "dims": [base, d]})
        frontier = nxt
    return sorted(found, key=lambda lam: (lam.degree(), tuple(-m for m in lam.coeffs)))


def check_L11_dims(n: int) -> bool:
    """``dim V(2w_1) + dim V(w_1+w_3) = dim Lambda^2 V(w_2)``."""
    if n < 3:
        raise ValueError("needs n >= 3")
    d = weyl_dim(DominantWeight.fundamental(2, n))
    lhs = weyl_dim(DominantWeight.fundamental(1, n, 2)) + weyl_dim(closed_form_weight("w1+w3", n))
    return lhs == comb(d, 2)


def check_C12_exclusions(n: int) -> bool:
    """``V(2w_2)`` and ``V(w_1+w_2)`` match their closed forms and exceed ``sp(2n)``."""
    if n < 3:
        raise ValueError("needs n >= 3")
    for label in ("2w2", "w1+w2"):
        d = weyl_dim(closed_form_weight(label, n))
        if d != CLOSED_FORMS[label][1](n) or d <= sp_dim(n):
            return False
    return True
