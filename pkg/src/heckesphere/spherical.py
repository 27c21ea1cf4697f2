"""The spherical right H-module M(J) in its standard basis.

M(J) has basis m_x indexed by the minimal coset representatives ^J W.  The
generator action is

    m_x b_s = m_{xs} + v^-1 m_x   if xs < x and xs is an mcr,
              m_{xs} + v    m_x   if xs > x and xs is an mcr,
              (v + v^-1)    m_x   if xs is not an mcr,

and delta_s acts as (b_s-action) - v * id.  The bar involution comes through
the identification m_x = 1 (x) delta_x: bar(m_x) = m_e acted on by
bar(delta_x).  The KL basis c_x is self-dualized by the same constant-term
correction scheme as in the algebra.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from . import linear
from .coxeter import IDENTITY, Word
from .errors import InternalInconsistency, PreconditionViolated
from .hecke import HeckeAlgebra, HeckeElt
from .laurent import LaurentPoly, ONE, V, VINV


class SphericalElt:
    """A finitely supported sum of standard basis elements m_x, x in ^J W."""

    __slots__ = ("support",)

    def __init__(self, support: Mapping[Word, LaurentPoly] | Iterable = ()):
        self.support = linear.combo(support)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SphericalElt):
            return NotImplemented
        return self.support == other.support

    def __hash__(self) -> int:
        return hash(frozenset(self.support.items()))

    def __bool__(self) -> bool:
        return bool(self.support)

    def __add__(self, other: "SphericalElt") -> "SphericalElt":
        out = SphericalElt.__new__(SphericalElt)
        out.support = linear.add(self.support, other.support)
        return out

    def __sub__(self, other: "SphericalElt") -> "SphericalElt":
        out = SphericalElt.__new__(SphericalElt)
        out.support = linear.sub(self.support, other.support)
        return out

    def __neg__(self) -> "SphericalElt":
        return self.scale(-1)

    def scale(self, c: LaurentPoly | int) -> "SphericalElt":
        out = SphericalElt.__new__(SphericalElt)
        out.support = linear.scale(self.support, c)
        return out

    def coeff(self, x: Word) -> LaurentPoly:
        return self.support.get(x, LaurentPoly.zero())

    def items(self):
        return linear.sorted_items(self.support)

    def __repr__(self) -> str:
        return f"SphericalElt({dict(self.support)!r})"


class SphericalModule:
    def __init__(self, algebra: HeckeAlgebra, J: Iterable[int]):
        self.algebra = algebra
        self.system = algebra.system
        self.J = frozenset(J)
        # Certifies J is finitary (BudgetExceeded otherwise) and caches pi(J).
        self.b_wJ, self.pi = algebra.b_wJ_and_pi(self.J)
        self.d_J = max(len(w) for w in self.b_wJ.support)
        self._kl_memo: dict[Word, SphericalElt] = {}

    # -- basis ------------------------------------------------------------------

    def zero(self) -> SphericalElt:
        return SphericalElt()

    def m(self, x: Word, coeff: LaurentPoly | int = 1) -> SphericalElt:
        if not self.system.is_mcr(x, self.J):
            raise PreconditionViolated(
                f"{x} is not a minimal coset representative for J={sorted(self.J)}"
            )
        return SphericalElt({x: coeff})

    def unit(self) -> SphericalElt:
        return SphericalElt({IDENTITY: ONE})

    # -- the action -----------------------------------------------------------------

    def act_bs(self, a: SphericalElt, s: int) -> SphericalElt:
        sys = self.system
        out: linear.Coeffs = {}
        for x, c in a.support.items():
            xs = sys.right_mult(x, s)
            if not sys.is_mcr(xs, self.J):
                linear.add_into(out, x, c * (V + VINV))
            elif len(xs) > len(x):
                linear.add_into(out, xs, c)
                linear.add_into(out, x, c * V)
            else:
                linear.add_into(out, xs, c)
                linear.add_into(out, x, c * VINV)
        elt = SphericalElt.__new__(SphericalElt)
        elt.support = out
        return elt

    def act_delta(self, a: SphericalElt, s: int) -> SphericalElt:
        return self.act_bs(a, s) - a.scale(V)

    def act(self, a: SphericalElt, h: HeckeElt) -> SphericalElt:
        out = self.zero()
        for y, c in h.support.items():
            part = a.scale(c)
            for s in y:
                part = self.act_delta(part, s)
            out = out + part
        return out

    def expand_expression(self, word: Iterable[int]) -> SphericalElt:
        """1 (x) b_{x_} = m_e b_{s_1} ... b_{s_n}."""
        out = self.unit()
        for s in word:
            out = self.act_bs(out, s)
        return out

    # -- bar involution ----------------------------------------------------------------

    def bar(self, a: SphericalElt) -> SphericalElt:
        out = self.zero()
        for x, c in a.support.items():
            out = out + self.act(self.unit(), self.algebra._bar_delta(x)).scale(c.bar())
        return out

    # -- KL basis ---------------------------------------------------------------------

    def kl_c(self, x: Word) -> SphericalElt:
        got = self._kl_memo.get(x)
        if got is not None:
            return got
        if not x:
            out = self.unit()
        else:
            s = x[-1]
            xs = self.system.right_mult(x, s)
            # xs < x; xs is automatically an mcr (a non-mcr neighbor across
            # the wall would be longer, not shorter).
            cand = self.act_bs(self.kl_c(xs), s)
            for y, c in sorted(cand.support.items(), key=lambda kv: -len(kv[0])):
                if y == x:
                    continue
                mu = cand.coeff(y)[0]
                if mu:
                    cand = cand - self.kl_c(y).scale(mu)
            out = cand
        if out.coeff(x) != ONE:
            raise InternalInconsistency(f"spherical KL recursion lost unitriangularity at {x}")
        for y, c in out.support.items():
            if y != x and not c.in_v_times_nonneg():
                raise InternalInconsistency(
                    f"spherical KL coefficient at {y} of c_{x} = {c} escapes vZ[v]"
                )
        if self.bar(out) != out:
            raise InternalInconsistency(f"c_{x} is not self-dual")
        self._kl_memo[x] = out
        return out

    # -- form and embedding ---------------------------------------------------------------

    def phi_embed(self, a: SphericalElt) -> HeckeElt:
        """m_x -> b_{w_J} delta_x, extended linearly (injective: the leading
        term delta_{w_J x} of each image is distinct)."""
        alg = self.algebra
        out = alg.zero()
        for x, c in a.support.items():
            out = out + alg.multiply(self.b_wJ, alg.delta(x)).scale(c)
        return out

    def pairing(self, a: SphericalElt, b: SphericalElt) -> LaurentPoly:
        """<a, b>_M, coordinatewise (the m_x are orthonormal), cross-checked
        against the embedded formula v^{-d_J} trace(i(phi a) *_J phi b)."""
        out = LaurentPoly.zero()
        small, large = (a, b) if len(a.support) <= len(b.support) else (b, a)
        for x, c in small.support.items():
            d = large.support.get(x)
            if d is not None:
                out = out + c * d
        alg = self.algebra
        prod = alg.multiply(alg.anti_involution(self.phi_embed(a)), self.phi_embed(b))
        via_form = alg.trace(prod).divide_exact(self.pi).shift(-self.d_J)
        if via_form != out:
            raise InternalInconsistency(
                f"spherical pairing paths disagree: {out} vs {via_form}"
            )
        return out

    # -- rendering ---------------------------------------------------------------------------

    def format(self, a: SphericalElt) -> str:
        if not a:
            return "0"
        parts = []
        for x, c in a.items():
            name = self.system.format_word(x) or "e"
            parts.append(f"({c}) m_{name}")
        return " + ".join(parts)

    def to_json(self, a: SphericalElt) -> dict:
        return {
            "basis": "spherical-standard",
            "J": [self.system.matrix.generators[s] for s in sorted(self.J)],
            "terms": [
                {"elt": self.system.format_word(x), "coeff": c.to_json()}
                for x, c in a.items()
            ],
        }
