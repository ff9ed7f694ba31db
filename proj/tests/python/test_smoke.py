"""Smoke tests for the python bindings."""

import pytest

import grlwe


def test_params_and_report():
    p = grlwe.build_params(8, grlwe.Profile.DEFAULT)
    assert p.n == 8 and p.m == 4 and p.q == 73
    assert grlwe.validate(p) == []
    assert "q=73" in grlwe.param_report(p)
    with pytest.raises(grlwe.GrlweError):
        grlwe.build_params(3, grlwe.Profile.DEFAULT)


def test_ring_arithmetic_matches_oracle():
    rng = grlwe.Rng(1)
    p = grlwe.build_params(8, grlwe.Profile.TOY)
    for _ in range(25):
        x = grlwe.sample_uniform(p.m, p.q, rng)
        y = grlwe.sample_uniform(p.m, p.q, rng)
        assert grlwe.mul(x, y) == grlwe.mul_oracle(x, y)
    r = grlwe.RingElement([0, 1, 0, 0], [0, 0, 0, 0], p.q)
    s = grlwe.RingElement([0, 0, 0, 0], [1, 0, 0, 0], p.q)
    assert grlwe.mul(r, s) != grlwe.mul(s, r)


def test_inverse_and_spectra():
    q = 17
    one = grlwe.one(2, q)
    assert grlwe.inverse(one) == one
    one_plus_s = grlwe.RingElement([1, 0], [1, 0], q)
    assert not grlwe.is_invertible_real(one_plus_s)
    with pytest.raises(grlwe.GrlweError):
        grlwe.inverse(one_plus_s)
    assert grlwe.matrix_norm(one) == pytest.approx(1.0)
    profile = grlwe.spectral_profile(one_plus_s)
    for _, af, ag in profile:
        assert af == pytest.approx(1.0)
        assert ag == pytest.approx(1.0)


def test_pke_round_trip_and_serialization():
    p = grlwe.build_params(64, grlwe.Profile.DEFAULT)
    rng = grlwe.Rng(7)
    pk, sk = grlwe.keygen(p, rng)
    bits = [(i * 5 + 3) % 2 for i in range(p.n)]
    ct = grlwe.encrypt(pk, bits, rng)
    assert grlwe.decrypt(sk, ct) == bits

    blob = grlwe.serialize_public_key(pk)
    assert len(blob) == 16 + 2 * p.n * 4
    pk2 = grlwe.deserialize_public_key(blob)
    assert grlwe.serialize_public_key(pk2) == blob
    with pytest.raises(grlwe.GrlweError):
        grlwe.deserialize_secret_key(blob)


def test_lattice_checks():
    rng = grlwe.Rng(11)
    p = grlwe.build_params(4, grlwe.Profile.TOY)
    found = 0
    while found < 5:
        coeffs = [rng.next_u64() % 3 - 1 for _ in range(p.n)]
        h = grlwe.RingElement(
            [c % p.q for c in coeffs[: p.m]], [c % p.q for c in coeffs[p.m :]], p.q
        )
        if not grlwe.invertible_over_Q(h):
            continue
        found += 1
        assert grlwe.check_dual_permutation(h)


def test_failure_estimate():
    p = grlwe.build_params(32, grlwe.Profile.DEFAULT)
    rng = grlwe.Rng(23)
    est = grlwe.estimate_failure_rate(p, 100, rng)
    assert est["trials"] == 100
    assert est["noise_within_quarter_q"] == 1.0
