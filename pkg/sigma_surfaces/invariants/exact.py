"""Closed-form invariants of the Veronese-based solutions P_beta of G(m,n).

All quantities are exact: integers for alpha, r and q, Fractions for H^2 and K.
The boundary convention beta_{-1} = beta_n = 0 and alpha_{0,n} = alpha_{n,n} = 0
lets every sum run over j = 0..n.
"""
from fractions import Fraction
from typing import List, Tuple

from ..exceptions import IndexRangeError
from .records import InvariantRecord
from .selection import BetaVector


def alpha(i: int, n: int) -> int:
    """alpha_{i,n} = i(n-i), defined for 0 <= i <= n"""
    if n < 1:
        raise IndexRangeError(f"n must be positive, got {n}")
    if not 0 <= i <= n:
        raise IndexRangeError(f"alpha index i={i} outside [0, {n}]")
    return i * (n - i)


def _alpha_or_zero(j: int, n: int) -> int:
    return alpha(j, n) if 0 <= j <= n else 0


def cp_invariants(i: int, n: int) -> InvariantRecord:
    """Invariants of Z_i in CP^{n-1}: r_i, q_i and H_i^2 = (r^2 + 3q^2)/r^2"""
    if n < 2:
        raise IndexRangeError(f"CP^(n-1) needs n >= 2, got {n}")
    if not 0 <= i <= n - 1:
        raise IndexRangeError(f"tower index i={i} outside [0, {n - 1}]")
    r = n - 1 + 2 * i * (n - 1 - i)
    q = n - 1 - 2 * i
    h2 = Fraction(r * r + 3 * q * q, r * r)
    return InvariantRecord.build(n=n, m=1, r=r, q=q, h2=h2)


def alpha_via_recurrence(m: int, j: int, n: int) -> int:
    """alpha_{m+j,n} rebuilt from (r_m, q_m) of CP^{n-1}"""
    if j < 0:
        raise IndexRangeError(f"recurrence step j={j} must be non-negative")
    if not 0 <= m + j <= n:
        raise IndexRangeError(f"m+j={m + j} outside [0, {n}]")
    cp = cp_invariants(m, n)
    doubled = int(cp.r) + (2 * j - 1) * cp.q
    return doubled // 2 - j * (j - 1)


def _transition_weights(beta: BetaVector) -> List[int]:
    """c_j alpha_j with c_j = (beta_{j-1} - beta_j)^2, for j = 0..n"""
    n = beta.n
    return [
        (beta.bit(j - 1) - beta.bit(j)) ** 2 * _alpha_or_zero(j, n)
        for j in range(n + 1)
    ]


def commutator_norm_sum(beta: BetaVector) -> Fraction:
    """S2 = sum_j w_j (w_j - w_{j+1}/2 - w_{j-1}/2), w_j = c_j alpha_j"""
    w = _transition_weights(beta)

    def at(j: int) -> int:
        return w[j] if 0 <= j < len(w) else 0

    return sum(
        (Fraction(w[j]) * (w[j] - Fraction(at(j + 1), 2) - Fraction(at(j - 1), 2))
         for j in range(len(w))),
        Fraction(0),
    )


def beta_invariants(beta: BetaVector) -> InvariantRecord:
    """Exact (r, q, H^2, K) of P_beta built on the Veronese curve"""
    n = beta.n
    if beta.m in (0, n):
        raise IndexRangeError("beta must have weight 1 <= m <= n-1")
    r = sum(_transition_weights(beta))
    q = sum((beta.bit(j - 1) - beta.bit(j)) * alpha(j, n) for j in range(1, n))
    h2 = 4 * commutator_norm_sum(beta) / Fraction(r * r)
    return InvariantRecord.build(n=n, m=beta.m, r=r, q=q, h2=h2)


def rq_interaction_split(beta: BetaVector) -> Tuple[int, int]:
    """(r - q, r + q) written with the consecutive-projector interaction term"""
    n = beta.n
    b = beta.bit
    interaction = sum(b(j) * b(j - 1) * alpha(j, n) for j in range(1, n))
    lower = 2 * sum(b(j) * alpha(j, n) for j in range(1, n)) - 2 * interaction
    upper = 2 * sum(b(j - 1) * alpha(j, n) for j in range(1, n)) - 2 * interaction
    return lower, upper


def charge_split(n: int) -> List[int]:
    """Per-direction charges q_j = alpha_{j+1} - alpha_j, so q_beta = sum beta_j q_j"""
    return [alpha(j + 1, n) - alpha(j, n) for j in range(n)]


def g2_closed_forms(i: int, j: int, n: int) -> InvariantRecord:
    """G(2,n) closed forms for the grid (i, j), dispatched on the gap j - i"""
    if n < 3:
        raise IndexRangeError(f"G(2,n) needs n >= 3, got n={n}")
    if j <= i:
        raise IndexRangeError(f"need i < j, got ({i}, {j})")
    if i < 0 or j > n - 1:
        raise IndexRangeError(f"grid ({i}, {j}) does not fit in n={n}")
    a = [_alpha_or_zero(t, n) for t in range(n + 2)]

    if j == i + 1:
        q = 2 * (n - 2 - 2 * i)
        r = 2 * (n - 2 + i * (n - 2 - i))
        num = a[i] ** 2 + a[i + 2] ** 2
        den = a[i] + a[i + 2]
    else:
        q = 2 * (n - 1 - i - j)
        r = 2 * (n - 1 + i * (n - 1 - i) + j * (n - 1 - j))
        if j == i + 2:
            w = a[i:i + 4]
            num = (w[0] ** 2 - w[0] * w[1] + w[1] ** 2 - w[1] * w[2]
                   + w[2] ** 2 - w[2] * w[3] + w[3] ** 2)
            den = sum(w)
        else:
            num = (a[i] ** 2 - a[i] * a[i + 1] + a[i + 1] ** 2
                   + a[j] ** 2 - a[j] * a[j + 1] + a[j + 1] ** 2)
            den = a[i] + a[i + 1] + a[j] + a[j + 1]

    return InvariantRecord.build(n=n, m=2, r=r, q=q, h2=Fraction(4 * num, den * den))


def holomorphic_beta(m: int, n: int) -> Tuple[BetaVector, InvariantRecord]:
    """beta = (1,...,1,0,...,0): r = q = m(n-m) and H = 2"""
    if not 1 <= m < n:
        raise IndexRangeError(f"need 1 <= m < n, got m={m}, n={n}")
    beta = BetaVector.from_grid(n, range(m))
    return beta, beta_invariants(beta)


def complement(beta: BetaVector) -> BetaVector:
    """P -> I - P; keeps r and H^2, negates q"""
    return beta.complement()


def reversal(beta: BetaVector) -> BetaVector:
    """beta_j -> beta_{n-1-j}; keeps r and H^2, negates q"""
    return beta.reversal()
