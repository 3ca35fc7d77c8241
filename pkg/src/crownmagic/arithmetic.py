"""Number-theoretic kernel: bounded Bezout pairs and the conflict values.

For distinct odd primes p, q there is exactly one pair x, x' = pq - x + 1 in
(1, pq) with gcd(x, pq) != 1 and gcd(x - 1, pq) != 1; it comes from the Bezout
identity alpha*p + beta*q = 1 with both |alpha*p| and |beta*q| bounded by
(pq+1)/2, and it governs which translation shifts need the composite-cycle
rescue labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exceptions import InvalidInput
from .translation import gcd_exception

# Keeps pq and p^k q comfortably inside exact machine range in downstream code.
MAX_MODULUS = 2**31


def is_odd_prime(x: int) -> bool:
    if x < 3 or x % 2 == 0:
        return False
    f = 3
    while f * f <= x:
        if x % f == 0:
            return False
        f += 2
    return True


def _check_pair(p: int, q: int, prime: bool = True):
    if p % 2 == 0 or q % 2 == 0:
        raise InvalidInput(f"need odd inputs, got {p} and {q}")
    if prime and (not is_odd_prime(p) or not is_odd_prime(q)):
        raise InvalidInput(f"need odd primes, got {p} and {q}")
    if p == q or gcd(p, q) != 1:
        raise InvalidInput(f"need distinct coprime inputs, got {p} and {q}")
    if p * q > MAX_MODULUS:
        raise InvalidInput(f"modulus {p * q} exceeds supported bound {MAX_MODULUS}")


@dataclass(frozen=True)
class BezoutData:
    """Bounded Bezout pair for (p, q) and the derived conflict values."""

    p: int
    q: int
    alpha: int
    beta: int
    x: int
    x_prime: int
    alpha_prime: int
    beta_prime: int

    def __post_init__(self):
        assert self.alpha * self.p + self.beta * self.q == 1
        assert max(abs(self.alpha * self.p), abs(self.beta * self.q)) <= (self.p * self.q + 1) // 2
        assert self.x_prime == self.p * self.q - self.x + 1

    @property
    def positive_prime(self) -> int:
        """The factor of pq dividing x (it plays the inner-cycle role downstream)."""
        return self.p if self.x % self.p == 0 else self.q


def bounded_bezout(p: int, q: int) -> BezoutData:
    """Bezout coefficients with max(|alpha p|, |beta q|) <= (pq+1)/2.

    Works for any distinct odd coprime p, q.  x is whichever of alpha*p,
    beta*q is positive (exactly one is), and x' = pq - x + 1.
    """
    _check_pair(p, q, prime=False)
    m = p * q
    # alpha*p lies in a fixed residue class mod pq; pick the centered representative.
    ap = (pow(p, -1, q) * p) % m
    if ap > (m + 1) // 2:
        ap -= m
    alpha = ap // p
    beta = (1 - ap) // q
    x = ap if ap > 0 else 1 - ap
    return BezoutData(
        p=p,
        q=q,
        alpha=alpha,
        beta=beta,
        x=x,
        x_prime=m - x + 1,
        alpha_prime=(q + 1) // 2 - alpha,
        beta_prime=(p + 3) // 2,
    )


def conflict_pair(p: int, q: int) -> tuple[int, int]:
    """The unique x < x' in (1, pq) with both y and y-1 sharing a factor with pq."""
    _check_pair(p, q)
    data = bounded_bezout(p, q)
    lo, hi = sorted((data.x, data.x_prime))
    for y in (lo, hi):
        assert gcd(y, p * q) != 1 and gcd(y - 1, p * q) != 1 and 1 < y < p * q
    return lo, hi


def conflict_values(p: int, k: int, q: int) -> list[int]:
    """All y in (1, p^k q) with gcd(y, p^k q) != 1 and gcd(y-1, p^k q) != 1.

    There are exactly 2 p^(k-1) of them: the pq-conflict pair repeated every
    pq.
    """
    _check_pair(p, q)
    if k < 1:
        raise InvalidInput(f"exponent must be >= 1, got {k}")
    if p**k * q > MAX_MODULUS:
        raise InvalidInput(f"modulus {p**k * q} exceeds supported bound {MAX_MODULUS}")
    x, x_prime = conflict_pair(p, q)
    values = sorted(
        y + lam * p * q for y in (x, x_prime) for lam in range(p ** (k - 1))
    )
    assert len(values) == 2 * p ** (k - 1)
    return values


def exceptional_r(p: int, q: int, n: int) -> list[int]:
    """All shifts r in [1, mn+1] (m = pq) where both orientation gcd tests fail."""
    _check_pair(p, q)
    if n < 1:
        raise InvalidInput(f"need n >= 1, got {n}")
    m = p * q
    return [r for r in range(1, m * n + 2) if gcd_exception(m, r)]


def scan_conflict_values(m: int) -> list[int]:
    """Direct scan of (1, m) for values sharing a factor with m at both y and y-1.

    Independent of the Bezout route; also the honest answer for moduli that
    are not of the form p^k q.
    """
    if m < 3 or m % 2 == 0:
        raise InvalidInput(f"needs odd m >= 3, got {m}")
    if m > 10**7:
        raise InvalidInput(f"scan bound exceeded for m = {m}")
    return [y for y in range(2, m) if gcd(y, m) != 1 and gcd(y - 1, m) != 1]
