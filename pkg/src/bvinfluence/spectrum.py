"""Exact Walsh spectra, influences via two independent routes, autocorrelation.

Everything here is integer arithmetic. Walsh coefficients are kept in
their integer form ``W(y) = sum_x (-1)^(f(x) + y.x)``; the normalized
transform is ``W(y) / 2^n``. Influences come out as ``Fraction`` values
with power-of-two denominators and are only converted to floats at the
reporting boundary.

int64 is safe throughout: for n <= 24 every coefficient is bounded by
2^n <= 2^24, and every partial sum of squared coefficients is bounded by
4^n <= 2^48 (Parseval), far below 2^63.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .boolfn import TruthTable, _check_index

NAIVE_CORRELATION_MAX_N = 16


def fwht(values) -> np.ndarray:
    """Unnormalized fast Walsh-Hadamard transform, out[y] = sum_x v[x]*(-1)^(x.y).

    Self-inverse up to a factor 2^n. Input length must be a power of two.
    """
    out = np.array(values, dtype=np.int64)
    size = out.size
    if size == 0 or size & (size - 1):
        raise ValueError(f"transform length must be a power of two, got {size}")
    h = 1
    while h < size:
        view = out.reshape(-1, 2, h)
        low = view[:, 0, :]
        high = view[:, 1, :]
        diff = low - high
        low += high
        high[...] = diff
        h *= 2
    return out


class WalshSpectrum:
    """Integer Walsh coefficients W(y) for all 2^n values of y, in enc order."""

    def __init__(self, n: int, w):
        arr = np.asarray(w, dtype=np.int64)
        if arr.size != (1 << n):
            raise ValueError(f"spectrum for n={n} needs {1 << n} coefficients, got {arr.size}")
        arr = arr.copy()
        arr.flags.writeable = False
        self.n = n
        self.w = arr
        self._squares = None

    def squares(self) -> np.ndarray:
        if self._squares is None:
            sq = self.w * self.w
            sq.flags.writeable = False
            self._squares = sq
        return self._squares

    def square_sum(self) -> int:
        return int(self.squares().sum())

    def ones_square_sum(self, i: int) -> int:
        """Sum of W(y)^2 over y with y_i = 1."""
        _check_index(i, self.n)
        half = 1 << (i - 1)
        return int(self.squares().reshape(-1, 2, half)[:, 1, :].sum())

    def __eq__(self, other):
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.w, other.w)

    def __repr__(self):
        return f"WalshSpectrum(n={self.n})"


def walsh_spectrum(f: TruthTable) -> WalshSpectrum:
    """Exact spectrum of f by FWHT on the (-1)^f(x) table; O(n 2^n)."""
    return WalshSpectrum(f.n, fwht(f.signs()))


def influence_counts(f: TruthTable, i: int) -> tuple[int, int]:
    """(|V_0|, |V_1|): how many inputs keep / change f when bit i is flipped.

    Exhaustive enumeration; the definitional ground truth for influence.
    """
    _check_index(i, f.n)
    half = 1 << (i - 1)
    pairs = f.bits.reshape(-1, 2, half)
    changed = 2 * int(np.count_nonzero(pairs[:, 0, :] != pairs[:, 1, :]))
    return (1 << f.n) - changed, changed


def influence_by_definition(f: TruthTable, i: int) -> Fraction:
    """|V_1| / 2^n, straight from the definition of influence."""
    _, v1 = influence_counts(f, i)
    return Fraction(v1, 1 << f.n)


def influence_by_spectrum(s: WalshSpectrum, i: int) -> Fraction:
    """Influence of variable i as the spectral mass on y_i = 1.

    Equals influence_by_definition for every function; the equality is
    exercised exactly (integer arithmetic) in the test suite.
    """
    return Fraction(s.ones_square_sum(i), 1 << (2 * s.n))


class InfluenceVector:
    """All n influences of a function, as exact rationals, plus their sum."""

    def __init__(self, n: int, values):
        values = tuple(Fraction(v) for v in values)
        if len(values) != n:
            raise ValueError(f"expected {n} influence values, got {len(values)}")
        for v in values:
            if not 0 <= v <= 1:
                raise ValueError(f"influence {v} outside [0, 1]")
        self.n = n
        self.values = values
        self.total = sum(values, Fraction(0))

    def __getitem__(self, i: int) -> Fraction:
        """1-based access, matching variable numbering."""
        _check_index(i, self.n)
        return self.values[i - 1]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, InfluenceVector):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __repr__(self):
        return f"InfluenceVector({[str(v) for v in self.values]}, total={self.total})"

    def as_floats(self) -> list[float]:
        return [float(v) for v in self.values]


def influence_vector(f: TruthTable) -> InfluenceVector:
    """Every variable's influence from one spectrum pass."""
    s = walsh_spectrum(f)
    denom = 1 << (2 * f.n)
    return InfluenceVector(f.n, [Fraction(s.ones_square_sum(i), denom) for i in range(1, f.n + 1)])


class Correlation:
    """Autocorrelation C(gamma) = sum_x (-1)^(f(x) + f(x xor gamma)), all gamma."""

    def __init__(self, n: int, c):
        arr = np.asarray(c, dtype=np.int64)
        if arr.size != (1 << n):
            raise ValueError(f"correlation for n={n} needs {1 << n} entries, got {arr.size}")
        arr = arr.copy()
        arr.flags.writeable = False
        self.n = n
        self.c = arr

    def __eq__(self, other):
        if not isinstance(other, Correlation):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.c, other.c)

    def __repr__(self):
        return f"Correlation(n={self.n})"


def correlation(f: TruthTable) -> Correlation:
    """Autocorrelation by direct O(4^n) summation; the verification oracle.

    Capped at n <= 16; use correlation_fast for larger functions.
    """
    if f.n > NAIVE_CORRELATION_MAX_N:
        raise ValueError(f"naive autocorrelation capped at n={NAIVE_CORRELATION_MAX_N}, got n={f.n}")
    size = 1 << f.n
    index = np.arange(size, dtype=np.intp)
    bits = f.bits
    out = np.empty(size, dtype=np.int64)
    for gamma in range(size):
        mismatches = int(np.count_nonzero(bits != bits[index ^ gamma]))
        out[gamma] = size - 2 * mismatches
    return Correlation(f.n, out)


def correlation_fast(f: TruthTable) -> Correlation:
    """Autocorrelation via the transform route: C = FWHT(W^2) / 2^n, O(n 2^n)."""
    s = walsh_spectrum(f)
    transformed = fwht(s.squares())
    quotient, remainder = np.divmod(transformed, np.int64(1 << f.n))
    if remainder.any():
        raise AssertionError("transform-route autocorrelation was not exactly divisible by 2^n")
    return Correlation(f.n, quotient)


def verify_identities(f: TruthTable) -> list[dict]:
    """Run the spectral identity suite on one function.

    Checks, all in exact integer arithmetic:
      * per-variable equality of the definitional and spectral influences,
      * Parseval: sum of squared coefficients equals 4^n,
      * the autocorrelation transform identity FWHT(C)(y) = W(y)^2,
        using the naive O(4^n) autocorrelation as ground truth when it
        is affordable and the transform route otherwise.

    Returns one {identity, passed, detail} record per check.
    """
    s = walsh_spectrum(f)
    checks = []

    mismatched = [
        i for i in range(1, f.n + 1)
        if influence_by_definition(f, i) != influence_by_spectrum(s, i)
    ]
    checks.append({
        "identity": "influence_definition_equals_spectral",
        "passed": not mismatched,
        "detail": "exact match for all variables" if not mismatched
        else f"mismatch at variables {mismatched}",
    })

    total = s.square_sum()
    checks.append({
        "identity": "parseval",
        "passed": total == 1 << (2 * f.n),
        "detail": f"sum W^2 = {total}, 4^n = {1 << (2 * f.n)}",
    })

    route = "naive" if f.n <= 12 else "transform"
    corr = correlation(f) if route == "naive" else correlation_fast(f)
    ok = bool(np.array_equal(fwht(corr.c), s.squares()))
    checks.append({
        "identity": "autocorrelation_transform",
        "passed": ok,
        "detail": f"FWHT(C) == W^2 via {route} autocorrelation",
    })

    return checks
