import pytest

from heckesphere.coxeter import IDENTITY
from heckesphere.errors import NotDivisible
from heckesphere.hecke import HeckeElt
from heckesphere.laurent import LaurentPoly, ONE, V, VINV, ZERO

S, T = 0, 1


class TestMultiply:
    def test_quadratic_relation(self, a2_algebra):
        alg = a2_algebra
        got = alg.multiply(alg.delta((S,)), alg.delta((S,)))
        assert got == HeckeElt({IDENTITY: ONE, (S,): VINV - V})

    def test_lengths_add(self, a2_algebra):
        alg = a2_algebra
        assert alg.multiply(alg.delta((S,)), alg.delta((T,))) == alg.delta((S, T))

    def test_bs_squared(self, a2_algebra):
        alg = a2_algebra
        bs = alg.b_s(S)
        assert alg.multiply(bs, bs) == bs.scale(V + VINV)


class TestBar:
    def test_fixes_identity(self, a2_algebra):
        alg = a2_algebra
        assert alg.bar(alg.unit()) == alg.unit()

    def test_delta_s(self, a2_algebra):
        alg = a2_algebra
        got = alg.bar(alg.delta((S,)))
        assert got == HeckeElt({(S,): ONE, IDENTITY: V - VINV})
        # It really is the inverse of delta_s.
        assert alg.multiply(got, alg.delta((S,))) == alg.unit()

    def test_fixes_bs(self, a2_algebra):
        alg = a2_algebra
        assert alg.bar(alg.b_s(S)) == alg.b_s(S)

    def test_involutive(self, b2_algebra):
        alg = b2_algebra
        for x in alg.system.elements():
            d = alg.delta(x, V)
            assert alg.bar(alg.bar(d)) == d


class TestKLBasis:
    def test_identity(self, a2_algebra):
        assert a2_algebra.kl_basis(IDENTITY) == a2_algebra.unit()

    def test_simple(self, a2_algebra):
        assert a2_algebra.kl_basis((S,)) == a2_algebra.b_s(S)

    def test_a2_longest(self, a2_algebra):
        alg = a2_algebra
        want = HeckeElt({
            (S, T, S): ONE,
            (S, T): V,
            (T, S): V,
            (S,): V * V,
            (T,): V * V,
            IDENTITY: V ** 3,
        })
        assert alg.kl_basis((S, T, S)) == want

    def test_bar_invariant_everywhere(self, b2_algebra):
        alg = b2_algebra
        for x in alg.system.elements():
            b = alg.kl_basis(x)
            assert alg.bar(b) == b
            assert b.coeff(x) == ONE
            for y, c in b.support.items():
                if y != x:
                    assert c.in_v_times_nonneg()


class TestPairing:
    def test_standard_orthonormal(self, a2_algebra):
        alg = a2_algebra
        for x in alg.system.elements():
            for y in alg.system.elements():
                want = ONE if x == y else ZERO
                assert alg.pairing_trace(alg.delta(x), alg.delta(y)) == want

    def test_bs_with_itself(self, a2_algebra):
        alg = a2_algebra
        assert alg.pairing(alg.b_s(S), alg.b_s(S)) == 1 + V * V

    def test_zero(self, a2_algebra):
        alg = a2_algebra
        assert alg.pairing(alg.zero(), alg.b_s(S)) == ZERO

    def test_paths_agree_on_kl(self, a2_algebra, b2_algebra):
        for alg in (a2_algebra, b2_algebra):
            for x in alg.system.elements():
                for y in alg.system.elements():
                    a, b = alg.kl_basis(x), alg.kl_basis(y)
                    assert alg.pairing(a, b) == alg.pairing_trace(a, b)


class TestBwJ:
    def test_empty_J(self, a2_algebra):
        b, pi = a2_algebra.b_wJ_and_pi(set())
        assert b == a2_algebra.unit() and pi == ONE

    def test_singleton(self, a2_algebra):
        b, pi = a2_algebra.b_wJ_and_pi({S})
        assert b == a2_algebra.b_s(S)
        assert pi == V + VINV

    def test_full_a2(self, a2_algebra):
        _, pi = a2_algebra.b_wJ_and_pi({S, T})
        assert pi == LaurentPoly([(3, 1), (1, 2), (-1, 2), (-3, 1)])


class TestSchur:
    def test_bs_star_bs(self, a2_algebra):
        alg = a2_algebra
        assert alg.schur_compose(alg.b_s(S), alg.b_s(S), {S}) == alg.b_s(S)

    def test_empty_J_is_plain_product(self, a2_algebra):
        alg = a2_algebra
        h = alg.kl_basis((S, T))
        assert alg.schur_compose(alg.unit(), h, set()) == h

    def test_not_in_ideal(self, a2_algebra):
        alg = a2_algebra
        with pytest.raises(NotDivisible):
            alg.schur_compose(alg.b_s(S), alg.unit(), {S})


class TestSerialization:
    def test_json_round_trip(self, a2_algebra):
        alg = a2_algebra
        b = alg.kl_basis((S, T, S))
        data = b.to_json(alg.system)
        assert data["terms"][0]["elt"] == ""
        assert HeckeElt.from_json(data, alg.system) == b
