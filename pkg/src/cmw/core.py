"""Exact scalars, sparse formal sums, wedge signs and weight windows.

Everything downstream is built on :class:`FormalSum`, a finitely supported
map from hashable basis keys to :class:`fractions.Fraction` coefficients.
Zero coefficients are never stored, so two sums are equal exactly when
their dictionaries are equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, Iterator, Optional, Tuple

__all__ = [
    "Fraction", "Q", "FormalSum", "WeightWindow", "MalformedInput",
    "IntegrityError", "TruncationError", "wedge_normalize", "weight_of",
    "truncate", "add_into", "sort_key", "fmt_scalar", "parse_scalar",
    "to_json_terms", "from_json_terms", "key_to_json", "key_from_json",
]


class MalformedInput(ValueError):
    """Raised when an operation receives structurally invalid input."""


class IntegrityError(ArithmeticError):
    """Raised when an internal algebraic invariant fails (e.g. d*d != 0)."""


class TruncationError(ValueError):
    """Raised when a jet or window is too small for the requested operation."""


def Q(x) -> Fraction:
    """Coerce ints, strings "p/q" and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def fmt_scalar(c: Fraction) -> str:
    c = Q(c)
    return "%d/%d" % (c.numerator, c.denominator)


def parse_scalar(s: str) -> Fraction:
    return Fraction(s)


def add_into(acc: dict, key, c) -> None:
    """acc[key] += c, dropping the entry when it cancels."""
    if not c:
        return
    v = acc.get(key)
    if v is None:
        acc[key] = c
    else:
        v = v + c
        if v:
            acc[key] = v
        else:
            del acc[key]


def sort_key(k):
    """Total order on heterogeneous keys: ints < strings < tuples."""
    if isinstance(k, bool):
        return (0, int(k))
    if isinstance(k, int):
        return (0, k)
    if isinstance(k, str):
        return (1, k)
    if isinstance(k, tuple):
        return (2, tuple(sort_key(x) for x in k))
    if isinstance(k, Fraction):
        return (0, k)
    raise MalformedInput("unsortable key component %r" % (k,))


class FormalSum:
    """A finitely supported linear combination with Fraction coefficients.

    >>> v = FormalSum({("x", 1): 2}) + FormalSum.basis(("x", 1), -2)
    >>> v.is_zero()
    True
    """

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t: Dict[Hashable, Fraction] = {}
        if terms:
            it = terms.items() if isinstance(terms, dict) else terms
            for k, c in it:
                add_into(t, k, Q(c))
        self._t = t

    @classmethod
    def _raw(cls, d: dict) -> "FormalSum":
        # trusted constructor: d already has no zero entries
        v = cls.__new__(cls)
        v._t = d
        return v

    @classmethod
    def basis(cls, key, coeff=1) -> "FormalSum":
        c = Q(coeff)
        return cls._raw({key: c} if c else {})

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls._raw({})

    # -- container protocol -------------------------------------------------
    def items(self):
        return self._t.items()

    def keys(self):
        return self._t.keys()

    def coeff(self, key) -> Fraction:
        return self._t.get(key, Fraction(0))

    __getitem__ = coeff

    def __contains__(self, key) -> bool:
        return key in self._t

    def __len__(self) -> int:
        return len(self._t)

    def __iter__(self) -> Iterator:
        return iter(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def as_dict(self) -> dict:
        return dict(self._t)

    # -- vector space ------------------------------------------------------
    def __add__(self, other: "FormalSum") -> "FormalSum":
        if isinstance(other, int) and other == 0:
            return self
        d = dict(self._t)
        for k, c in other._t.items():
            add_into(d, k, c)
        return FormalSum._raw(d)

    __radd__ = __add__

    def __neg__(self) -> "FormalSum":
        return FormalSum._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        d = dict(self._t)
        for k, c in other._t.items():
            add_into(d, k, -c)
        return FormalSum._raw(d)

    def __mul__(self, s) -> "FormalSum":
        s = Q(s)
        if not s:
            return FormalSum._raw({})
        return FormalSum._raw({k: c * s for k, c in self._t.items()})

    __rmul__ = __mul__

    def __truediv__(self, s) -> "FormalSum":
        return self * (1 / Q(s))

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalSum):
            return self._t == other._t
        if isinstance(other, int) and other == 0:
            return not self._t
        return NotImplemented

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # mutable-looking container; compare by value

    # -- linear-map helpers ------------------------------------------------
    def apply(self, fn: Callable) -> "FormalSum":
        """Extend fn: key -> FormalSum|dict|None linearly."""
        acc: dict = {}
        for k, c in self._t.items():
            img = fn(k)
            if not img:
                continue
            it = img._t.items() if isinstance(img, FormalSum) else img.items()
            for k2, c2 in it:
                add_into(acc, k2, c * c2)
        return FormalSum._raw(acc)

    def map_keys(self, fn: Callable) -> "FormalSum":
        """Relabel keys; fn may return None (drop) or (key, sign)."""
        acc: dict = {}
        for k, c in self._t.items():
            r = fn(k)
            if r is None:
                continue
            k2, s = r
            add_into(acc, k2, c * s)
        return FormalSum._raw(acc)

    def filter(self, pred: Callable) -> "FormalSum":
        return FormalSum._raw({k: c for k, c in self._t.items() if pred(k)})

    def tensor(self, other: "FormalSum", combine: Callable = None) -> "FormalSum":
        """Bilinear product; combine(k1, k2) returns a key, (key, sign), a dict
        or None."""
        acc: dict = {}
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                if combine is None:
                    add_into(acc, (k1, k2), c1 * c2)
                    continue
                r = combine(k1, k2)
                if r is None:
                    continue
                if isinstance(r, dict):
                    for k3, c3 in r.items():
                        add_into(acc, k3, c1 * c2 * c3)
                elif isinstance(r, FormalSum):
                    for k3, c3 in r._t.items():
                        add_into(acc, k3, c1 * c2 * c3)
                else:
                    add_into(acc, r, c1 * c2)
        return FormalSum._raw(acc)

    # -- presentation --------------------------------------------------------
    def sorted_items(self):
        return sorted(self._t.items(), key=lambda kv: sort_key(kv[0]))

    def __repr__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for k, c in self.sorted_items():
            parts.append("%s*%r" % (c, k))
        return " + ".join(parts)


def wedge_normalize(word) -> Optional[Tuple[tuple, int]]:
    """Sort a wedge word, returning (sorted_word, sign) or None for Zero.

    Entries must be comparable keys of one family: plain ints, or tagged
    tuples (tag, index) sharing the tag.
    """
    word = list(word)
    if word:
        first = word[0]
        if isinstance(first, tuple):
            tag = first[0]
            for w in word:
                if not isinstance(w, tuple) or w[0] != tag:
                    raise MalformedInput("mixed-family wedge word %r" % (word,))
        else:
            for w in word:
                if isinstance(w, tuple):
                    raise MalformedInput("mixed-family wedge word %r" % (word,))
    if len(set(word)) != len(word):
        return None
    sign = 1
    # insertion sort, counting transpositions
    w = word[:]
    for i in range(1, len(w)):
        j = i
        while j > 0 and sort_key(w[j - 1]) > sort_key(w[j]):
            w[j - 1], w[j] = w[j], w[j - 1]
            sign = -sign
            j -= 1
    return tuple(w), sign


_FAMILY_WEIGHT = {
    "e": lambda i: i,          # W1 basis e_i = x^{i+1} d/dx
    "x": lambda j: j,          # x^j in Omega^0
    "f": lambda j: j + 1,      # x^j dx in Omega^1
    "t": lambda i: -i,         # theta^i, dual to e_i
}


def weight_of(key) -> int:
    """Weight (e_0-eigenvalue) of a tagged basis key or composite.

    Tagged keys: ("e", i), ("x", j), ("f", j), ("t", i), ("X", monomial),
    ("S", word), ("N", word).  A tuple whose entries are themselves tuples
    is a composite and its weight is the sum of the parts.
    """
    if isinstance(key, tuple) and key and isinstance(key[0], str):
        tag = key[0]
        if tag in _FAMILY_WEIGHT:
            return _FAMILY_WEIGHT[tag](key[1])
        if tag in ("X", "S", "N"):
            return sum(key[1])
        if tag in ("wedge", "tensor"):
            return sum(weight_of(k) for k in key[1:])
        raise MalformedInput("unknown key family %r" % (tag,))
    if isinstance(key, tuple):
        return sum(weight_of(k) for k in key)
    raise MalformedInput("not a basis key: %r" % (key,))


class WeightWindow:
    """Closed integer interval [lo, hi] of admissible weights."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: int, hi: int):
        if lo > hi:
            raise MalformedInput("empty window [%d, %d]" % (lo, hi))
        self.lo, self.hi = lo, hi

    def __contains__(self, w: int) -> bool:
        return self.lo <= w <= self.hi

    def __repr__(self):
        return "WeightWindow(%d, %d)" % (self.lo, self.hi)

    def fits(self, v: FormalSum, weight: Callable = weight_of) -> bool:
        return all(weight(k) in self for k in v.keys())


def truncate(v: FormalSum, w: WeightWindow, weight: Callable = weight_of) -> FormalSum:
    """Drop every key whose weight lies outside the window."""
    return v.filter(lambda k: weight(k) in w)


# -- canonical text / JSON serialization -----------------------------------

def key_to_json(k):
    if isinstance(k, tuple):
        return [key_to_json(x) for x in k]
    return k


def key_from_json(j):
    if isinstance(j, list):
        return tuple(key_from_json(x) for x in j)
    return j


def to_json_terms(v: FormalSum) -> list:
    return [{"coeff": fmt_scalar(c), "key": key_to_json(k)} for k, c in v.sorted_items()]


def from_json_terms(terms: Iterable[dict]) -> FormalSum:
    return FormalSum((key_from_json(t["key"]), parse_scalar(t["coeff"])) for t in terms)
