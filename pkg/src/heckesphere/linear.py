"""Finitely supported linear combinations with LaurentPoly coefficients.

Shared backing store for Hecke-algebra elements (keys: group elements) and
spherical-module elements (keys: minimal coset representatives).  Keys are
canonical reduced-word tuples throughout.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .laurent import LaurentPoly


Coeffs = dict[tuple, LaurentPoly]


def combo(items: Mapping | Iterable[tuple] = ()) -> Coeffs:
    """Build a canonical coefficient dict, dropping zeros and merging keys."""
    pairs = items.items() if isinstance(items, Mapping) else items
    out: Coeffs = {}
    for key, c in pairs:
        if isinstance(c, int):
            c = LaurentPoly.from_int(c)
        if key in out:
            c = out[key] + c
        if c:
            out[key] = c
        elif key in out:
            del out[key]
    return out


def add_into(acc: Coeffs, key: tuple, c: LaurentPoly):
    """acc[key] += c, keeping canonical form."""
    if not c:
        return
    cur = acc.get(key)
    if cur is None:
        acc[key] = c
        return
    tot = cur + c
    if tot:
        acc[key] = tot
    else:
        del acc[key]


def add(a: Coeffs, b: Coeffs) -> Coeffs:
    out = dict(a)
    for k, c in b.items():
        add_into(out, k, c)
    return out


def sub(a: Coeffs, b: Coeffs) -> Coeffs:
    out = dict(a)
    for k, c in b.items():
        add_into(out, k, -c)
    return out


def scale(a: Coeffs, c: LaurentPoly | int) -> Coeffs:
    if isinstance(c, int):
        c = LaurentPoly.from_int(c)
    if not c:
        return {}
    return {k: x * c for k, x in a.items()}


def sorted_items(a: Coeffs) -> Iterator[tuple[tuple, LaurentPoly]]:
    """(key, coeff) pairs sorted by (length, ShortLex) of the key."""
    return iter(sorted(a.items(), key=lambda kv: (len(kv[0]), kv[0])))
