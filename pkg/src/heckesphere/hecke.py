"""The Hecke algebra of a Coxeter system over Z[v, v^-1].

Elements are stored in the standard basis: a HeckeElt wraps a map from group
element (canonical reduced word) to nonzero LaurentPoly.  Multiplication uses
the quadratic relation delta_s^2 = 1 + (v^-1 - v) delta_s one generator at a
time.  The Kazhdan-Lusztig basis is computed by the usual recursion
b_s * b_{sx} minus mu-corrections, where mu(z, y) is the coefficient of v in
h_{z,y}; only the characterizing properties (bar-invariance, unitriangularity,
coefficients in vZ[v]) are asserted.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from . import linear
from .coxeter import IDENTITY, CoxeterSystem, Word
from .errors import InternalInconsistency, NotDivisible
from .laurent import LaurentPoly, ONE, V, VINV


class HeckeElt:
    """A finitely supported sum of standard basis elements delta_x."""

    __slots__ = ("support",)

    def __init__(self, support: Mapping[Word, LaurentPoly] | Iterable = ()):
        self.support = linear.combo(support)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.support == other.support

    def __hash__(self) -> int:
        return hash(frozenset(self.support.items()))

    def __bool__(self) -> bool:
        return bool(self.support)

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        out = HeckeElt.__new__(HeckeElt)
        out.support = linear.add(self.support, other.support)
        return out

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        out = HeckeElt.__new__(HeckeElt)
        out.support = linear.sub(self.support, other.support)
        return out

    def __neg__(self) -> "HeckeElt":
        return self.scale(-1)

    def scale(self, c: LaurentPoly | int) -> "HeckeElt":
        out = HeckeElt.__new__(HeckeElt)
        out.support = linear.scale(self.support, c)
        return out

    def coeff(self, x: Word) -> LaurentPoly:
        return self.support.get(x, LaurentPoly.zero())

    def items(self):
        """(element, coefficient) pairs sorted by (length, ShortLex)."""
        return linear.sorted_items(self.support)

    def __repr__(self) -> str:
        return f"HeckeElt({dict(self.support)!r})"

    def to_json(self, system: CoxeterSystem) -> dict:
        return {
            "terms": [
                {"elt": system.format_word(x), "coeff": c.to_json()}
                for x, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data: dict, system: CoxeterSystem) -> "HeckeElt":
        return cls(
            (system.element(system.parse_word(t["elt"])), LaurentPoly.from_json(t["coeff"]))
            for t in data["terms"]
        )


class HeckeAlgebra:
    def __init__(self, system: CoxeterSystem):
        self.system = system
        self._kl_memo: dict[Word, HeckeElt] = {}
        self._bar_delta_memo: dict[Word, HeckeElt] = {IDENTITY: HeckeElt({IDENTITY: ONE})}

    # -- basis elements -------------------------------------------------------

    def zero(self) -> HeckeElt:
        return HeckeElt()

    def delta(self, x: Word, coeff: LaurentPoly | int = 1) -> HeckeElt:
        return HeckeElt({x: coeff})

    def unit(self) -> HeckeElt:
        return self.delta(IDENTITY)

    def b_s(self, s: int) -> HeckeElt:
        return HeckeElt({(s,): ONE, IDENTITY: V})

    def from_word(self, word: Iterable[int]) -> HeckeElt:
        """Product b_{s_1} ... b_{s_n} over a (not necessarily reduced) word."""
        out = self.unit()
        for s in word:
            out = self.multiply(out, self.b_s(s))
        return out

    # -- ring structure ---------------------------------------------------------

    def _mult_gen(self, a: HeckeElt, s: int) -> HeckeElt:
        sys = self.system
        out: linear.Coeffs = {}
        for x, c in a.support.items():
            xs = sys.right_mult(x, s)
            if len(xs) > len(x):
                linear.add_into(out, xs, c)
            else:
                linear.add_into(out, xs, c)
                linear.add_into(out, x, c * (VINV - V))
        elt = HeckeElt.__new__(HeckeElt)
        elt.support = out
        return elt

    def multiply(self, a: HeckeElt, b: HeckeElt) -> HeckeElt:
        out = self.zero()
        for y, c in b.support.items():
            part = a.scale(c)
            for s in y:
                part = self._mult_gen(part, s)
            out = out + part
        return out

    # -- bar involution ----------------------------------------------------------

    def _bar_delta(self, w: Word) -> HeckeElt:
        """bar(delta_w) = delta_{w^-1}^{-1}, built along the reduced word.

        delta_s^{-1} = delta_s + (v - v^-1) delta_e, and
        delta_w^{-1} = delta_{s_n}^{-1} ... delta_{s_1}^{-1} for w = s_1...s_n;
        since bar(delta_w) multiplies in the same letter order as w itself we
        just fold left to right.
        """
        memo = self._bar_delta_memo
        got = memo.get(w)
        if got is not None:
            return got
        prefix = self._bar_delta(w[:-1])
        s = w[-1]
        inv_s = HeckeElt({(s,): ONE, IDENTITY: V - VINV})
        out = self.multiply(prefix, inv_s)
        memo[w] = out
        return out

    def bar(self, a: HeckeElt) -> HeckeElt:
        out = self.zero()
        for x, c in a.support.items():
            out = out + self._bar_delta(x).scale(c.bar())
        return out

    # -- Kazhdan-Lusztig basis -----------------------------------------------------

    def kl_basis(self, x: Word) -> HeckeElt:
        got = self._kl_memo.get(x)
        if got is not None:
            return got
        if not x:
            out = self.unit()
        else:
            s = x[0]
            sx = self.system.left_mult(s, x)
            cand = self.multiply(self.b_s(s), self.kl_basis(sx))
            # Remove lower KL terms whose coefficient has a constant term,
            # largest length first so each correction is final.
            for y, c in sorted(cand.support.items(), key=lambda kv: -len(kv[0])):
                if y == x:
                    continue
                mu = cand.coeff(y)[0]
                if mu:
                    cand = cand - self.kl_basis(y).scale(mu)
            out = cand
        if out.coeff(x) != ONE:
            raise InternalInconsistency(f"KL recursion lost unitriangularity at {x}")
        for y, c in out.support.items():
            if y != x and not c.in_v_times_nonneg():
                raise InternalInconsistency(
                    f"KL coefficient h_({y},{x}) = {c} escapes vZ[v]"
                )
        self._kl_memo[x] = out
        return out

    # -- trace, anti-involution, bilinear form -----------------------------------------

    def trace(self, a: HeckeElt) -> LaurentPoly:
        """Coefficient of delta_e."""
        return a.coeff(IDENTITY)

    def anti_involution(self, a: HeckeElt) -> HeckeElt:
        """i(delta_x) = delta_{x^-1}, coefficient-linear."""
        return HeckeElt(
            (self.system.inverse(x), c) for x, c in a.support.items()
        )

    def pairing_trace(self, a: HeckeElt, b: HeckeElt) -> LaurentPoly:
        """<a, b> = trace(i(a) * b), the defining formula."""
        return self.trace(self.multiply(self.anti_involution(a), b))

    def pairing(self, a: HeckeElt, b: HeckeElt) -> LaurentPoly:
        """<a, b> computed coordinatewise (the standard basis is orthonormal)."""
        out = LaurentPoly.zero()
        small, large = (a, b) if len(a.support) <= len(b.support) else (b, a)
        for x, c in small.support.items():
            d = large.support.get(x)
            if d is not None:
                out = out + c * d
        return out

    # -- parabolic data ------------------------------------------------------------------

    def b_wJ_and_pi(self, J: Iterable[int]) -> tuple[HeckeElt, LaurentPoly]:
        """b_{w_J} (closed form, cross-checked against the KL recursion) and
        the Hilbert polynomial pi(J) with b_{w_J}^2 = pi(J) b_{w_J}."""
        J = frozenset(J)
        members = self.system.parabolic_elements(J)
        d_J = max(len(w) for w in members)
        b = HeckeElt((w, LaurentPoly.monomial(d_J - len(w))) for w in members)
        w_J = next(w for w in members if len(w) == d_J)
        if b != self.kl_basis(w_J):
            raise InternalInconsistency(
                f"closed form for b_(w_J) disagrees with the KL recursion, J={sorted(J)}"
            )
        pi = LaurentPoly((2 * len(w) - d_J, 1) for w in members)
        if self.multiply(b, b) != b.scale(pi):
            raise InternalInconsistency(f"b_(w_J)^2 != pi(J) b_(w_J) for J={sorted(J)}")
        return b, pi

    def schur_compose(self, h1: HeckeElt, h2: HeckeElt, J: Iterable[int]) -> HeckeElt:
        """h1 *_J h2 = h1 h2 / pi(J); NotDivisible flags inputs outside the
        ideals H b_{w_J} and b_{w_J} H."""
        _, pi = self.b_wJ_and_pi(J)
        prod = self.multiply(h1, h2)
        return HeckeElt((x, c.divide_exact(pi)) for x, c in prod.support.items())

    # -- rendering -----------------------------------------------------------------------

    def format(self, a: HeckeElt) -> str:
        if not a:
            return "0"
        parts = []
        for x, c in a.items():
            name = self.system.format_word(x) or "e"
            parts.append(f"({c}) d_{name}")
        return " + ".join(parts)
