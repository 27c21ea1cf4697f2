import itertools

import pytest

from heckesphere.coxeter import IDENTITY
from heckesphere.errors import PreconditionViolated
from heckesphere.hecke import HeckeAlgebra, HeckeElt
from heckesphere.laurent import ONE, V, VINV, ZERO
from heckesphere.spherical import SphericalElt, SphericalModule

S, T = 0, 1


@pytest.fixture(scope="module")
def mod_a2_s(a2_algebra):
    return SphericalModule(a2_algebra, {S})


class TestAction:
    def test_up_case(self, mod_a2_s):
        got = mod_a2_s.act_bs(mod_a2_s.unit(), T)
        assert got == SphericalElt({(T,): ONE, IDENTITY: V})

    def test_wall_case(self, mod_a2_s):
        got = mod_a2_s.act_bs(mod_a2_s.unit(), S)
        assert got == SphericalElt({IDENTITY: V + VINV})

    def test_up_from_t(self, mod_a2_s):
        got = mod_a2_s.act_bs(mod_a2_s.m((T,)), S)
        assert got == SphericalElt({(T, S): ONE, (T,): V})

    def test_down_case(self, mod_a2_s):
        got = mod_a2_s.act_bs(mod_a2_s.m((T,)), T)
        assert got == SphericalElt({IDENTITY: ONE, (T,): VINV})

    def test_module_axiom_exhaustive(self, mod_a2_s, a2_algebra):
        alg = a2_algebra
        mcrs = [IDENTITY, (T,), (T, S)]
        for x in mcrs:
            m = mod_a2_s.m(x)
            for w1, w2 in itertools.product(alg.system.elements(2), repeat=2):
                h1, h2 = alg.delta(w1), alg.delta(w2)
                assert mod_a2_s.act(mod_a2_s.act(m, h1), h2) == mod_a2_s.act(
                    m, alg.multiply(h1, h2)
                )

    def test_non_mcr_key_rejected(self, mod_a2_s):
        with pytest.raises(PreconditionViolated):
            mod_a2_s.m((S,))


class TestBar:
    def test_fixes_unit(self, mod_a2_s):
        assert mod_a2_s.bar(mod_a2_s.unit()) == mod_a2_s.unit()

    def test_m_t(self, mod_a2_s):
        got = mod_a2_s.bar(mod_a2_s.m((T,)))
        assert got == SphericalElt({(T,): ONE, IDENTITY: V - VINV})

    def test_coefficient_bar(self, mod_a2_s):
        assert mod_a2_s.bar(mod_a2_s.m(IDENTITY, V)) == mod_a2_s.m(IDENTITY, VINV)

    def test_involutive(self, mod_a2_s):
        for x in [IDENTITY, (T,), (T, S)]:
            m = mod_a2_s.m(x)
            assert mod_a2_s.bar(mod_a2_s.bar(m)) == m


class TestKLC:
    def test_identity(self, mod_a2_s):
        assert mod_a2_s.kl_c(IDENTITY) == mod_a2_s.unit()

    def test_c_t(self, mod_a2_s):
        assert mod_a2_s.kl_c((T,)) == SphericalElt({(T,): ONE, IDENTITY: V})

    def test_c_ts(self, mod_a2_s):
        want = SphericalElt({(T, S): ONE, (T,): V, IDENTITY: V * V})
        assert mod_a2_s.kl_c((T, S)) == want

    def test_characterizing_properties_b2(self, b2_algebra):
        for J in map(frozenset, [set(), {S}, {T}, {S, T}]):
            mod = SphericalModule(b2_algebra, J)
            sys = b2_algebra.system
            for x in sys.min_coset_reps(J):
                c = mod.kl_c(x)
                assert mod.bar(c) == c
                assert c.coeff(x) == ONE
                for y, p in c.support.items():
                    if y != x:
                        assert p.in_v_times_nonneg()


class TestPairing:
    def test_orthonormal(self, mod_a2_s):
        mcrs = [IDENTITY, (T,), (T, S)]
        for x in mcrs:
            for y in mcrs:
                want = ONE if x == y else ZERO
                assert mod_a2_s.pairing(mod_a2_s.m(x), mod_a2_s.m(y)) == want

    def test_derived_example(self, mod_a2_s):
        a = SphericalElt({(T,): ONE, IDENTITY: V})
        assert mod_a2_s.pairing(a, a) == 1 + V * V

    def test_zero(self, mod_a2_s):
        assert mod_a2_s.pairing(mod_a2_s.zero(), mod_a2_s.unit()) == ZERO


class TestPhi:
    def test_unit_goes_to_bwj(self, mod_a2_s):
        assert mod_a2_s.phi_embed(mod_a2_s.unit()) == mod_a2_s.b_wJ

    def test_m_t(self, mod_a2_s):
        got = mod_a2_s.phi_embed(mod_a2_s.m((T,)))
        assert got == HeckeElt({(S, T): ONE, (T,): V})

    def test_equivariance_instance(self, mod_a2_s, a2_algebra):
        alg = a2_algebra
        lhs = mod_a2_s.phi_embed(mod_a2_s.act_bs(mod_a2_s.unit(), S))
        rhs = alg.multiply(alg.b_s(S), alg.b_s(S))
        assert lhs == rhs

    def test_equivariance_exhaustive(self, b2_algebra):
        alg = b2_algebra
        sys = alg.system
        for J in map(frozenset, [set(), {S}, {T}, {S, T}]):
            mod = SphericalModule(alg, J)
            for x in sys.min_coset_reps(J):
                m = mod.m(x)
                for s in range(sys.matrix.rank):
                    assert mod.phi_embed(mod.act_bs(m, s)) == alg.multiply(
                        mod.phi_embed(m), alg.b_s(s)
                    )


class TestExpand:
    def test_empty(self, mod_a2_s):
        assert mod_a2_s.expand_expression(()) == mod_a2_s.unit()

    def test_single_letters(self, mod_a2_s):
        assert mod_a2_s.expand_expression((T,)) == SphericalElt(
            {(T,): ONE, IDENTITY: V}
        )
        assert mod_a2_s.expand_expression((S,)) == SphericalElt(
            {IDENTITY: V + VINV}
        )


class TestSerialization:
    def test_json_tags(self, mod_a2_s):
        data = mod_a2_s.to_json(mod_a2_s.m((T,), V))
        assert data["basis"] == "spherical-standard"
        assert data["J"] == ["s"]
        assert data["terms"] == [{"elt": "t", "coeff": [[1, 1]]}]
