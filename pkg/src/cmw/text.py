"""Human-readable notation for cochains, e.g. "−2(1⊗θ⁻¹⊗x₁)".

Three key shapes are rendered:

* bicomplex keys (form, S, N) -- N is a word of theta indices (kind "lie")
  or a tuple of F(N) monomials (kind "hopf");
* cyclic keys (form, ((mono, (a, b)), ...)) -- legs in H = F(N) ⋊ U(s);
* values (form, S) of group cochains.

The parser accepts the rendered form and ASCII variants: "1⊗θ0",
"x^2 (x) theta^-1", "-1/2 f1⊗θ-1∧θ0⊗x_1x_2".
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .core import FormalSum, MalformedInput
from .lie import S_WORDS

SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")
SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
UNSUP = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")
UNSUB = str.maketrans("₀₁₂₃₄₅₆₇₈₉−", "0123456789-")
MINUS = "−"


def sup(n: int) -> str:
    return str(n).translate(SUP)


def sub(n: int) -> str:
    return str(n).translate(SUB)


def _scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def render_form(form) -> str:
    kind, j = form
    if kind == "x":
        return "1" if j == 0 else "x" + sup(j)
    return "f" + sup(j)


def render_theta(word) -> str:
    return "∧".join("θ" + sup(i) for i in word)


def render_mono(m) -> str:
    if not m:
        return "1"
    out = []
    for i in sorted(set(m)):
        e = m.count(i)
        out.append("x" + sub(i) + (sup(e) if e > 1 else ""))
    return "".join(out)


def render_h(h) -> str:
    m, (a, b) = h
    parts = [] if not m else [render_mono(m)]
    if a:
        parts.append("e₋₁" + (sup(a) if a > 1 else ""))
    if b:
        parts.append("e₀" + (sup(b) if b > 1 else ""))
    return "".join(parts) or "1"


def render_key(k, kind: str = "hopf") -> str:
    if len(k) == 2 and isinstance(k[1], tuple) and all(isinstance(i, int) for i in k[1]):
        form, S = k
        return "⊗".join([render_form(form)] + ([render_theta(S)] if S else []))
    if len(k) == 2:
        form, legs = k
        return "⊗".join([render_form(form)] + [render_h(h) for h in legs])
    form, S, N = k
    parts = [render_form(form)]
    if S:
        parts.append(render_theta(S))
    if kind == "lie":
        if N:
            parts.append(render_theta(N))
    else:
        parts += [render_mono(m) for m in N]
    return "⊗".join(parts)


def render(v: FormalSum, kind: str = "hopf") -> str:
    if not v:
        return "0"
    out = []
    for i, (k, c) in enumerate(v.sorted_items()):
        sign = MINUS if c < 0 else "+"
        a = abs(c)
        body = render_key(k, kind)
        term = body if a == 1 and len(v) == 1 and c > 0 else ("(%s)" % body if a == 1 else "%s(%s)" % (_scalar(a), body))
        if i == 0:
            out.append((MINUS if c < 0 else "") + term)
        else:
            out.append(" %s %s" % (sign, term))
    return "".join(out)


# -- parsing -----------------------------------------------------------------

_TENSOR = re.compile(r"\s*(?:⊗|\(x\))\s*")
_WEDGE = re.compile(r"\s*(?:∧|\^\^|/\\)\s*")


def _norm(s: str) -> str:
    s = re.sub("[⁰¹²³⁴⁵⁶⁷⁸⁹⁻]+", lambda m: "^" + m.group(0).translate(UNSUP), s)
    s = re.sub("[₀₁₂₃₄₅₆₇₈₉₋]+", lambda m: "_" + m.group(0).replace("₋", "-").translate(UNSUB), s)
    return s.replace("−", "-").replace("theta", "θ").replace(" ", "")


def parse_form(s: str):
    s = _norm(s)
    if s == "1":
        return ("x", 0)
    m = re.fullmatch(r"([xf])\^?(\d+)?", s)
    if not m:
        raise MalformedInput("bad form factor %r" % s)
    return (m.group(1), int(m.group(2) or 1))


def parse_theta(s: str) -> Tuple[int, ...]:
    idx = []
    for t in _WEDGE.split(_norm(s)):
        m = re.fullmatch(r"θ\^?(-?\d+)", t)
        if not m:
            raise MalformedInput("bad theta factor %r" % t)
        idx.append(int(m.group(1)))
    return tuple(idx)


def parse_mono(s: str) -> Tuple[int, ...]:
    s = _norm(s)
    if s == "1":
        return ()
    out: List[int] = []
    pos = 0
    pat = re.compile(r"x(?:_(\d+)|(\d))(?:\^(\d+))?")
    while pos < len(s):
        m = pat.match(s, pos)
        if not m:
            raise MalformedInput("bad monomial %r" % s)
        out += [int(m.group(1) or m.group(2))] * int(m.group(3) or 1)
        pos = m.end()
    return tuple(sorted(out))


def parse_key(s: str, kind: str = "hopf"):
    factors = [f for f in _TENSOR.split(s.strip()) if f]
    if not factors:
        raise MalformedInput("empty term")
    form = parse_form(factors[0])
    S: Tuple[int, ...] = ()
    N: list = []
    for f in factors[1:]:
        if _norm(f).startswith("θ"):
            word = parse_theta(f)
            neg = tuple(i for i in word if i <= 0)
            pos = tuple(i for i in word if i > 0)
            if neg:
                if S or N or neg not in S_WORDS:
                    raise MalformedInput("bad s* factor %r" % f)
                S = neg
            if pos:
                if kind != "lie":
                    raise MalformedInput("theta^i with i >= 1 only occurs in the Lie bicomplex")
                N += list(pos)
        else:
            if kind == "lie":
                raise MalformedInput("F(N) legs only occur in the Hopf bicomplex")
            N.append(parse_mono(f))
    return (form, S, tuple(N))


def _split_terms(s: str) -> List[Tuple[int, str]]:
    """Split at top-level + / - signs (not inside parentheses or exponents)."""
    s = s.replace(MINUS, "-").strip()
    out, depth, cur, sign = [], 0, "", 1
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "(" and s[i:i + 3] != "(x)":
            depth += 1
        elif ch == ")" and depth and s[i - 2:i + 1] != "(x)":
            depth -= 1
        if ch in "+-" and depth == 0 and cur.strip() and not re.search(r"(θ|theta|θ\^|theta\^|[xf]\^)$", cur.rstrip()):
            out.append((sign, cur))
            sign, cur = (1 if ch == "+" else -1), ""
        elif ch in "+-" and depth == 0 and not cur.strip():
            sign = sign * (1 if ch == "+" else -1)
        else:
            cur += ch
        i += 1
    if cur.strip():
        out.append((sign, cur))
    return out


def parse(s: str, kind: str = "hopf") -> FormalSum:
    s = s.strip()
    if s == "0":
        return FormalSum()
    acc = FormalSum()
    for sign, t in _split_terms(s):
        t = t.strip()
        m = re.match(r"(\d+(?:/\d+)?)\s*(\*\s*|(?=\((?!x\))))", t)
        c = Fraction(1)
        if m:
            c = Fraction(m.group(1))
            t = t[m.end():].strip()
        if t.startswith("(") and t.endswith(")") and t != "(x)":
            t = t[1:-1]
        acc = acc + FormalSum.basis(parse_key(t, kind), sign * c)
    return acc
