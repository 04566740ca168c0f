"""Cross-checks the bindings against the pure-Python reference pipeline."""

import random
from fractions import Fraction as Fr

import gdgap
import reference_pipeline as ref


def rational_config(rng):
    while True:
        pts = [(Fr(rng.randint(-30, 30), rng.randint(1, 6)),
                Fr(rng.randint(-30, 30), rng.randint(1, 6))) for _ in range(3)]
        x, y, z = pts
        a0 = ref.twice_area(x, y, z)
        if a0 == 0:
            continue
        if a0 < 0:
            y, z = z, y
        t = [Fr(rng.randint(1, 9)) for _ in range(3)]
        ts = sum(t)
        c = tuple((t[0] * x[i] + t[1] * y[i] + t[2] * z[i]) / ts for i in range(2))
        A, B = ref.critical_pair(x, y, z, c)
        rc2 = A / B
        q = Fr(1)
        while q * q >= rc2:
            q /= 2
        return x, y, z, c, q * Fr(rng.randint(1, 9), 10)


def as_cfg(x, y, z, c, r):
    s = lambda v: str(v)
    return gdgap.make_config((s(x[0]), s(x[1])), (s(y[0]), s(y[1])),
                             (s(z[0]), s(z[1])), (s(c[0]), s(c[1])), s(r))


def test_random_configs_match_reference():
    rng = random.Random(314159)
    for _ in range(20):
        x, y, z, c, r = rational_config(rng)
        cfg = as_cfg(x, y, z, c, r)

        w_ref = ref.apex(x, y, z, c, r)
        w = gdgap.apex(cfg)
        assert [str(v) for v in w] == [str(v) for v in w_ref]

        _, o_ref, R2_ref, d2_ref = ref.sphere_metrics(x, y, z, c, r)
        m = gdgap.metrics(cfg)
        assert str(m.R2) == str(R2_ref)
        assert str(m.d2) == str(d2_ref)
        assert [str(v) for v in m.o] == [str(v) for v in o_ref]

        assert str(gdgap.gap(cfg)) == str(ref.gap(x, y, z, c, r))


def test_quartic_matches_reference():
    rng = random.Random(2718)
    for _ in range(5):
        x, y, z, c, r = rational_config(rng)
        cfg = as_cfg(x, y, z, c, r)
        A, B = ref.critical_pair(x, y, z, c)
        rc2 = A / B
        q = Fr(1)
        while q * q >= rc2:
            q /= 2
        probes = [q * Fr(i, i + 3) for i in (1, 2, 3)]
        alpha, beta, gamma = ref.quartic_coefficients(x, y, z, c, probes)
        cert = gdgap.certificate(cfg)
        assert (str(cert.alpha), str(cert.beta), str(cert.gamma)) == \
            (str(alpha), str(beta), str(gamma))
        disc = 4 * alpha * gamma - beta * beta
        dis = ref.exact_sqrt(disc)
        assert dis is not None
        assert str(cert.dis) == str(dis)


def test_extension_fixture_matches_reference():
    s2 = ref.Ext(0, 1, 2)
    x, y, z, c = (-s2, ref.Ext(-1)), (s2, ref.Ext(-1)), (ref.Ext(0), ref.Ext(1)), \
        (ref.Ext(0), ref.Ext(0))
    r = ref.Ext(Fr(1, 3))
    cfg = gdgap.make_config(("-sqrt(2)", "-1"), ("sqrt(2)", "-1"), ("0", "1"),
                            ("0", "0"), "1/3")
    g_ref = ref.gap(x, y, z, c, r)
    assert str(gdgap.gap(cfg)) == str(g_ref) == "7/81"
