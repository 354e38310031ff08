"""Boolean functions on up to 24 variables: truth tables, ANF, evaluation.

Conventions used throughout the package:

* An input assignment ``x = (x_1, ..., x_n)`` is encoded as the integer
  ``enc(x) = sum_i x_i * 2**(i-1)``, i.e. ``x_1`` is the least
  significant bit. Truth tables, Walsh spectra and sampled outputs are
  all indexed in this order.
* Variables are 1-based: ``x1`` is bit 0 of the encoded integer.

Values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .rng import make_generator, resolve_seed

MAX_VARIABLES = 24

Monomial = frozenset[int]


class AnfSyntaxError(ValueError):
    """Raised when an ANF expression string fails to parse.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VARIABLES:
        raise ValueError(f"variable count must be in 1..{MAX_VARIABLES}, got {n}")


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"variable index must be in 1..{n}, got {i}")


def enc_input(x: Sequence[int]) -> int:
    """Encode an assignment (x_1, ..., x_n) as an integer, x_1 = LSB."""
    value = 0
    for pos, bit in enumerate(x):
        if bit not in (0, 1):
            raise ValueError(f"assignment bits must be 0 or 1, got {bit!r}")
        value |= bit << pos
    return value


def dec_input(value: int, n: int) -> tuple[int, ...]:
    """Decode an integer back into the assignment tuple (x_1, ..., x_n)."""
    _check_n(n)
    if not 0 <= value < (1 << n):
        raise ValueError(f"encoded input {value} out of range for n={n}")
    return tuple((value >> pos) & 1 for pos in range(n))


def point_mask(i: int, n: int) -> int:
    """Encoded unit vector with a single 1 in position i."""
    _check_index(i, n)
    return 1 << (i - 1)


class TruthTable:
    """Evaluation table of a Boolean function over all 2^n inputs.

    ``bits[k]`` holds f(x) for the assignment with ``enc(x) == k``.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits):
        _check_n(n)
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim != 1 or arr.size != (1 << n):
            raise ValueError(f"truth table for n={n} needs exactly {1 << n} bits, got shape {arr.shape}")
        if arr.size and arr.max() > 1:
            raise ValueError("truth table entries must be 0 or 1")
        arr = arr.copy()
        arr.flags.writeable = False
        super().__setattr__("n", n)
        super().__setattr__("bits", arr)

    def __setattr__(self, name, value):
        raise AttributeError("TruthTable is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __repr__(self) -> str:
        return f"TruthTable(n={self.n}, weight={int(self.bits.sum())})"

    def signs(self) -> np.ndarray:
        """(-1)^f(x) for every x, as int64."""
        return 1 - 2 * self.bits.astype(np.int64)

    def ones_fraction(self) -> Fraction:
        return Fraction(int(self.bits.sum()), 1 << self.n)


def evaluate(f: TruthTable, x) -> int:
    """Evaluate f on an assignment given as a bit sequence or encoded int."""
    if isinstance(x, (int, np.integer)):
        index = int(x)
        if not 0 <= index < (1 << f.n):
            raise ValueError(f"encoded input {index} out of range for n={f.n}")
    else:
        if len(x) != f.n:
            raise ValueError(f"assignment has {len(x)} bits, function has {f.n} variables")
        index = enc_input(x)
    return int(f.bits[index])


def flip_input(x, i: int):
    """x with variable i toggled (x XOR alpha^i); an involution.

    Accepts either an encoded int or a bit sequence and returns the same
    form. For the int form only ``i >= 1`` can be checked here.
    """
    if isinstance(x, (int, np.integer)):
        if i < 1:
            raise ValueError(f"variable index must be >= 1, got {i}")
        return int(x) ^ (1 << (i - 1))
    _check_index(i, len(x))
    flipped = list(x)
    flipped[i - 1] ^= 1
    return tuple(flipped)


class Anf:
    """Algebraic normal form: an XOR of AND-monomials over GF(2).

    ``monomials`` is a frozenset of frozensets of 1-based variable
    indices; the empty frozenset denotes the constant term 1, and an
    empty collection of monomials is the constant 0 function.
    """

    __slots__ = ("n", "monomials")

    def __init__(self, monomials: Iterable[Iterable[int]], n: int):
        _check_n(n)
        monos = frozenset(frozenset(m) for m in monomials)
        for mono in monos:
            for k in mono:
                _check_index(k, n)
        super().__setattr__("n", n)
        super().__setattr__("monomials", monos)

    def __setattr__(self, name, value):
        raise AttributeError("Anf is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Anf):
            return NotImplemented
        return self.n == other.n and self.monomials == other.monomials

    def __hash__(self) -> int:
        return hash((self.n, self.monomials))

    def __repr__(self) -> str:
        return f"Anf({self.to_text()!r}, n={self.n})"

    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)

    def evaluate(self, x) -> int:
        """Direct ANF evaluation: XOR over monomials of the AND of its bits."""
        if not isinstance(x, (int, np.integer)):
            x = enc_input(x)
        acc = 0
        for mono in self.monomials:
            acc ^= all((x >> (k - 1)) & 1 for k in mono)
        return int(acc)

    def to_text(self) -> str:
        """Canonical rendering; parsing it back yields an equal Anf."""
        if not self.monomials:
            return "0"
        ordered = sorted(self.monomials, key=lambda m: (len(m), sorted(m)))
        terms = []
        for mono in ordered:
            terms.append("1" if not mono else "*".join(f"x{k}" for k in sorted(mono)))
        return " + ".join(terms)


_TOKEN = re.compile(r"x(\d+)|[10+*]")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise AnfSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1) is not None:
            tokens.append(("var", int(m.group(1)), pos))
        else:
            tokens.append((m.group(0), None, pos))
        pos = m.end()
    return tokens


def from_anf(text: str, n: int) -> Anf:
    """Parse an ANF expression: terms joined by '+', XOR-reducing duplicates.

    Each term is '1', '0' (empty XOR), or 'x<k>' factors joined by '*'
    with 1 <= k <= n. '+' is GF(2) addition, so repeated monomials
    cancel. Whitespace is ignored.
    """
    _check_n(n)
    tokens = _tokenize(text)
    if not tokens:
        raise AnfSyntaxError("empty expression", 0)

    monomials: set[Monomial] = set()

    def toggle(mono: Monomial) -> None:
        if mono in monomials:
            monomials.remove(mono)
        else:
            monomials.add(mono)

    idx = 0
    while True:
        kind, value, pos = tokens[idx]
        if kind == "1":
            toggle(frozenset())
            idx += 1
        elif kind == "0":
            idx += 1
        elif kind == "var":
            factors = set()
            while True:
                if value < 1 or value > n:
                    raise AnfSyntaxError(f"variable x{value} out of range for n={n}", pos)
                factors.add(value)
                idx += 1
                if idx < len(tokens) and tokens[idx][0] == "*":
                    idx += 1
                    if idx >= len(tokens):
                        raise AnfSyntaxError("dangling '*'", tokens[idx - 1][2])
                    kind, value, pos = tokens[idx]
                    if kind != "var":
                        raise AnfSyntaxError("expected variable after '*'", pos)
                else:
                    break
            toggle(frozenset(factors))
        else:
            raise AnfSyntaxError(f"expected a term, found {kind!r}", pos)

        if idx == len(tokens):
            break
        kind, _, pos = tokens[idx]
        if kind != "+":
            raise AnfSyntaxError(f"expected '+', found {kind!r}", pos)
        idx += 1
        if idx == len(tokens):
            raise AnfSyntaxError("dangling '+'", pos)

    return Anf(monomials, n)


def to_truth_table(f: Anf) -> TruthTable:
    """Tabulate an ANF: T[enc(x)] = XOR over monomials of AND of x's bits."""
    size = 1 << f.n
    index = np.arange(size, dtype=np.uint32)
    bits = np.zeros(size, dtype=np.uint8)
    for mono in f.monomials:
        mask = np.uint32(0)
        for k in mono:
            mask |= np.uint32(1 << (k - 1))
        bits ^= ((index & mask) == mask).astype(np.uint8)
    return TruthTable(f.n, bits)


def random_function(n: int, seed: int | None = None) -> TruthTable:
    """Uniformly random truth table; deterministic for a given seed."""
    _check_n(n)
    rng = make_generator(resolve_seed(seed))
    return TruthTable(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))
