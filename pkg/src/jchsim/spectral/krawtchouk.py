"""
Krawtchouk polynomials K_k(l; p, M) = 2F1(-k, -l; -M; 1/p).

Values come from the three-term recurrence in the degree k rather than from
factorial or Pochhammer ratios, which overflow in double precision near
M ~ 170. For p = 1/2 the symmetry K_{M-k}(l) = (-1)^l K_k(l) lets every
evaluation stop at k <= M/2, where the forward recurrence is stable.
"""

import numpy as np
from scipy.special import gammaln

from jchsim.domain.errors import ValidationError


def _check_domain(k: int, l: int, p: float, order: int) -> None:
    if order < 0:
        raise ValidationError(f"order must be >= 0, got {order}")
    if not 0 <= k <= order:
        raise ValidationError(f"degree k must be in 0..{order}, got {k}")
    if not 0 <= l <= order:
        raise ValidationError(f"argument l must be in 0..{order}, got {l}")
    if not 0 < p < 1:
        raise ValidationError(f"p must be in (0, 1), got {p}")


def krawtchouk(k: int, l: int, p: float, order: int) -> float:
    """
    Evaluate K_k(l; p, order).

    Args:
        k: Degree, 0..order
        l: Argument, 0..order
        p: Parameter in (0, 1)
        order: Polynomial family order (M = N - 1 for an N-site chain)

    Returns:
        The polynomial value

    Raises:
        ValidationError: On domain violations

    Example:
        >>> krawtchouk(1, 3, 0.5, 6)
        0.0
        >>> krawtchouk(2, 3, 0.5, 6)
        -0.2
    """
    _check_domain(k, l, p, order)

    sign = 1.0
    if p == 0.5 and 2 * k > order:
        k = order - k
        sign = -1.0 if l % 2 else 1.0

    prev, cur = 0.0, 1.0
    q = 1.0 - p
    for n in range(k):
        a = p * (order - n)
        cur, prev = ((a + n * q - l) * cur - n * q * prev) / a, cur
    return sign * cur


def recurrence_defect(k: int, l: int, p: float, order: int) -> float:
    """
    Relative residual of the three-term recurrence at (k, l), 1 <= k < order.

    -l K_k = p(M-k) K_{k+1} - [p(M-k) + k(1-p)] K_k + k(1-p) K_{k-1}
    """
    if not 1 <= k < order:
        raise ValidationError(f"recurrence needs 1 <= k < {order}, got {k}")
    q = 1.0 - p
    km, k0, kp = (krawtchouk(j, l, p, order) for j in (k - 1, k, k + 1))
    terms = np.array(
        [p * (order - k) * kp, -(p * (order - k) + k * q) * k0, k * q * km, l * k0]
    )
    scale = max(float(np.max(np.abs(terms))), 1.0)
    return abs(float(terms.sum())) / scale


def krawtchouk_eigenvectors(order: int) -> np.ndarray:
    """
    Orthonormal eigenvectors of the (order+1)-site parabolic adjacency.

    Column k holds sqrt(C(M,l) C(M,k) / 2^M) K_k(l; 1/2, M) over sites
    l = 0..M, eigenvalue M - 2k. The binomial weights are folded into the
    recurrence so nothing overflows: psi_n = sqrt(C(M,n)) K_n satisfies

        sqrt((n+1)(M-n)) psi_{n+1} = (M - 2x) psi_n - sqrt(n(M-n+1)) psi_{n-1}

    which is run for n <= M/2 and mirrored for the rest.

    Args:
        order: M = N - 1

    Returns:
        (M+1) x (M+1) real matrix, symmetric, first row positive
    """
    m = order
    size = m + 1
    x = np.arange(size, dtype=float)
    row_weight = np.exp(
        0.5 * (gammaln(m + 1) - gammaln(x + 1) - gammaln(m - x + 1) - m * np.log(2.0))
    )

    psi = np.zeros((size, size))
    half = m // 2
    psi[0] = row_weight
    if m >= 1:
        psi[1] = (m - 2 * x) * psi[0] / np.sqrt(m)
    for n in range(1, half):
        psi[n + 1] = (
            (m - 2 * x) * psi[n] - np.sqrt(n * (m - n + 1)) * psi[n - 1]
        ) / np.sqrt((n + 1) * (m - n))

    parity = np.where(x.astype(int) % 2, -1.0, 1.0)
    for n in range(half + 1, size):
        psi[n] = parity * psi[m - n]

    psi /= np.linalg.norm(psi, axis=0)
    return psi
