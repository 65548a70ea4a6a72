"""Subshifts of finite type over a finite alphabet, in normalized window form.

A subshift of finite type (SFT) is described by an alphabet size ``b`` and a
finite set of forbidden words.  Everything downstream wants the *normalized*
form in which every forbidden word has one common length ``window_len``: a
bi-infinite sequence belongs to the subshift iff none of its windows of that
length is forbidden.  Normalization pads shorter patterns on the right with
every possible extension, which preserves the set of bi-infinite sequences.

Words of the common length are stored as integer codes in base ``b`` with
position 0 as the most significant digit.  That makes the two operations the
transition graph needs cheap arithmetic:

* drop the first symbol and append ``s``:  ``(code % b**(l-1)) * b + s``
* drop the last symbol:                     ``code // b``
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError

# Codes are held in int64 arrays; keep b**window_len clear of the sign bit.
ENCODE_LIMIT = 1 << 63

# Default ceiling on how many word codes a single normalization or
# construction step may materialize at once (length of the largest
# intermediate array, not bytes).
DEFAULT_MATERIALIZE_BUDGET = 1 << 27

_CHUNK = 1 << 19


@dataclass(frozen=True)
class Alphabet:
    """A finite alphabet {0, 1, ..., size-1}."""

    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise ValueError(f"alphabet size must be a positive integer, got {self.size!r}")

    def __int__(self):
        return self.size


def _alphabet(value) -> Alphabet:
    if isinstance(value, Alphabet):
        return value
    return Alphabet(int(value))


def encode_word(word, base) -> int:
    """Encode a word (sequence of symbols) as a base-``base`` integer.

    Position 0 is the most significant digit, so lexicographic order of words
    of equal length agrees with numeric order of codes.
    """
    b = int(_alphabet(base))
    code = 0
    for sym in word:
        s = int(sym)
        if not 0 <= s < b:
            raise ValueError(f"symbol {s} out of range for alphabet of size {b}")
        code = code * b + s
    if code >= ENCODE_LIMIT:
        raise CapacityError(
            f"word code {code} exceeds the 63-bit encoding limit",
            required=code,
            budget=ENCODE_LIMIT,
        )
    return code


def decode_word(code, base, length) -> tuple:
    """Inverse of :func:`encode_word` for a word of known length."""
    b = int(_alphabet(base))
    code = int(code)
    length = int(length)
    if code < 0:
        raise ValueError("word codes are nonnegative")
    out = []
    for _ in range(length):
        out.append(code % b)
        code //= b
    if code:
        raise ValueError(f"code has more than {length} base-{b} digits")
    out.reverse()
    return tuple(out)


def _check_code_space(base, window_len, budget):
    """Validate b**window_len against the hard encode limit and a budget."""
    b = int(base)
    space = b**window_len
    if space > ENCODE_LIMIT:
        raise CapacityError(
            f"code space {b}**{window_len} exceeds the 63-bit encoding limit",
            required=space,
            budget=ENCODE_LIMIT,
        )
    if budget is not None and space > budget:
        raise CapacityError(
            f"code space {b}**{window_len} = {space} exceeds budget {budget}",
            required=space,
            budget=budget,
        )
    return space


@dataclass(frozen=True, eq=False)
class Sft:
    """A subshift of finite type in normalized (uniform window) form.

    ``forbidden_codes`` is a sorted, duplicate-free, read-only int64 array of
    the codes of the forbidden words of length ``window_len``.
    """

    alphabet: Alphabet
    window_len: int
    forbidden_codes: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _alphabet(self.alphabet))
        if not isinstance(self.window_len, int) or self.window_len < 1:
            raise ValueError(f"window_len must be a positive integer, got {self.window_len!r}")
        space = self.alphabet.size**self.window_len
        if space > ENCODE_LIMIT:
            raise CapacityError(
                f"code space {self.alphabet.size}**{self.window_len} exceeds the encoding limit",
                required=space,
                budget=ENCODE_LIMIT,
            )
        codes = np.unique(np.asarray(self.forbidden_codes, dtype=np.int64))
        if codes.size and (codes[0] < 0 or codes[-1] >= space):
            raise ValueError("forbidden code out of range for this alphabet and window length")
        codes.setflags(write=False)
        object.__setattr__(self, "forbidden_codes", codes)

    @property
    def code_space(self) -> int:
        """Number of words of length window_len, allowed or not."""
        return self.alphabet.size**self.window_len

    @property
    def num_forbidden(self) -> int:
        return int(self.forbidden_codes.size)

    @property
    def num_allowed(self) -> int:
        return self.code_space - self.num_forbidden

    def is_forbidden_code(self, code) -> bool:
        code = int(code)
        if not 0 <= code < self.code_space:
            raise ValueError(f"code {code} out of range")
        i = int(np.searchsorted(self.forbidden_codes, code))
        return i < self.forbidden_codes.size and int(self.forbidden_codes[i]) == code

    def forbidden_mask(self, codes: np.ndarray) -> np.ndarray:
        """Boolean mask, per element of ``codes``, of membership in the forbidden set."""
        codes = np.asarray(codes, dtype=np.int64)
        if self.forbidden_codes.size == 0:
            return np.zeros(codes.shape, dtype=bool)
        idx = np.searchsorted(self.forbidden_codes, codes)
        idx_clipped = np.minimum(idx, self.forbidden_codes.size - 1)
        return self.forbidden_codes[idx_clipped] == codes

    def forbidden_words(self) -> frozenset:
        """The forbidden words as tuples of symbols (intended for small sets)."""
        b = self.alphabet.size
        return frozenset(decode_word(c, b, self.window_len) for c in self.forbidden_codes)

    def digest(self) -> str:
        """Stable content hash, used as a cache key for decision results."""
        h = hashlib.sha256()
        h.update(f"b={self.alphabet.size};l={self.window_len};".encode())
        h.update(np.ascontiguousarray(self.forbidden_codes).tobytes())
        return h.hexdigest()


@dataclass(frozen=True)
class GeneratorSet:
    """A finite symmetric generating set of the integers, kept as its
    positive representatives ``a_1 < a_2 < ... < a_n`` with gcd 1."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(int(a) for a in self.generators)
        if not gens:
            raise ValueError("generator set must be nonempty")
        if any(a < 1 for a in gens):
            raise ValueError("generators must be positive")
        if any(x >= y for x, y in zip(gens, gens[1:])):
            raise ValueError("generators must be strictly increasing")
        if math.gcd(*gens) != 1:
            raise ValueError(f"generators {gens} have gcd {math.gcd(*gens)}, expected 1 "
                             "(otherwise the Cayley graph is disconnected)")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def parse(cls, text: str) -> "GeneratorSet":
        """Parse a comma- or space-separated list like ``"1,5,8"``."""
        parts = text.replace(",", " ").split()
        if not parts:
            raise ValueError("empty generator list")
        return cls(tuple(int(p) for p in parts))

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def max_generator(self) -> int:
        return self.generators[-1]

    def __iter__(self):
        return iter(self.generators)

    def __str__(self):
        return ",".join(str(a) for a in self.generators)


def normalize(alphabet, patterns, *, budget=DEFAULT_MATERIALIZE_BUDGET) -> Sft:
    """Build a normalized :class:`Sft` from forbidden patterns of mixed lengths.

    Each pattern shorter than the longest is extended on the right by every
    word over the alphabet, which does not change the subshift.  An empty
    pattern list yields the full shift with window length 1.
    """
    alphabet = _alphabet(alphabet)
    b = alphabet.size
    pats = [tuple(int(s) for s in p) for p in patterns]
    for p in pats:
        if len(p) == 0:
            raise ValueError("forbidden patterns must be nonempty")
        if any(not 0 <= s < b for s in p):
            raise ValueError(f"pattern {p} has symbols outside alphabet of size {b}")
    if not pats:
        return Sft(alphabet, 1, np.empty(0, dtype=np.int64))
    ell = max(len(p) for p in pats)
    _check_code_space(b, ell, None)
    total = sum(b ** (ell - len(p)) for p in pats)
    if budget is not None and total > budget:
        raise CapacityError(
            f"normalization would materialize {total} codes, budget is {budget}",
            required=total,
            budget=budget,
        )
    chunks = []
    for p in pats:
        pad = ell - len(p)
        base_code = encode_word(p, b) * (b**pad)
        chunks.append(base_code + np.arange(b**pad, dtype=np.int64))
    codes = np.unique(np.concatenate(chunks))
    return Sft(alphabet, ell, codes)


def coloring_sft(gens, colors, *, budget=DEFAULT_MATERIALIZE_BUDGET) -> Sft:
    """The SFT of proper colorings for a generating set.

    Over the alphabet of ``colors`` symbols, with window length max(S)+1, a
    word is forbidden iff two positions at distance a (for some generator a)
    carry the same symbol.  Bi-infinite allowed sequences are exactly the
    proper colorings of the integer line graph with edge distances S.
    """
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(tuple(gens))
    b = int(colors)
    if b < 1:
        raise ValueError("need at least one color")
    ell = gens.max_generator + 1
    space = _check_code_space(b, ell, budget)

    forb = []
    powers = [b ** (ell - 1 - i) for i in range(ell)]
    for start in range(0, space, _CHUNK):
        stop = min(start + _CHUNK, space)
        codes = np.arange(start, stop, dtype=np.int64)
        bad = np.zeros(codes.shape, dtype=bool)
        digits = [(codes // powers[i]) % b for i in range(ell)]
        for a in gens:
            for i in range(ell - a):
                bad |= digits[i] == digits[i + a]
        forb.append(codes[bad])
    codes = np.concatenate(forb) if forb else np.empty(0, dtype=np.int64)
    return Sft(Alphabet(b), ell, codes)


def is_allowed(sft: Sft, word) -> bool:
    """Whether a finite word avoids every forbidden window.

    Words shorter than the window length contain no window at all and are
    vacuously allowed.  Symbols are validated against the alphabet.
    """
    b = sft.alphabet.size
    ell = sft.window_len
    w = [int(s) for s in word]
    for s in w:
        if not 0 <= s < b:
            raise ValueError(f"symbol {s} out of range for alphabet of size {b}")
    if len(w) < ell:
        return True
    mod = b ** (ell - 1)
    code = encode_word(w[:ell], b)
    if sft.is_forbidden_code(code):
        return False
    for s in w[ell:]:
        code = (code % mod) * b + s
        if sft.is_forbidden_code(code):
            return False
    return True


def parse_sft_text(text: str) -> Sft:
    """Parse the plain-text SFT format.

    First non-comment line: ``alphabet B``.  Each following non-comment line
    is one forbidden pattern, its symbols separated by spaces.  ``#`` starts
    a comment.  Patterns of mixed lengths are accepted and normalized.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty SFT description")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "alphabet":
        raise ValueError(f"expected 'alphabet B' header, got {lines[0]!r}")
    b = int(head[1])
    patterns = [tuple(int(tok) for tok in line.split()) for line in lines[1:]]
    return normalize(b, patterns)


def sft_to_text(sft: Sft) -> str:
    """Serialize in the format read by :func:`parse_sft_text`."""
    out = [f"alphabet {sft.alphabet.size}"]
    b = sft.alphabet.size
    for code in sft.forbidden_codes:
        word = decode_word(int(code), b, sft.window_len)
        out.append(" ".join(str(s) for s in word))
    return "\n".join(out) + "\n"
