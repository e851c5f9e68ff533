"""Momentum-space Dirac matrix and the spinor classification quotient."""

import numpy as np
import pytest

import twosheet as ts


def mode(E, p, internal=0, spinor=None):
    kwargs = {} if spinor is None else {"spinor": spinor}
    return ts.PlaneWaveMode(E=E, p=np.asarray(p, dtype=float), internal=internal, **kwargs)


class TestDiracMomentum:
    def test_rest_frame_is_internal_part(self, basis):
        t = ts.two_point_triple(1.5)
        d = ts.dirac_momentum(t, mode(0.0, [0, 0, 0]), basis)
        assert ts.matrices_close(d, np.kron(basis.gamma5, t.D_F), tol=0)
        assert ts.matrices_close(d @ d, abs(1.5) ** 2 * np.eye(8), tol=1e-12)

    def test_square_block_identity(self, basis, rng):
        for triple in (ts.two_point_triple(0.8 - 0.2j), ts.electroweak_triple(1.1)):
            n = triple.dim_H
            for _ in range(20):
                E = rng.uniform(-3, 3)
                p = rng.uniform(-3, 3, size=3)
                d = ts.dirac_momentum(triple, mode(E, p), basis)
                expected = ((p @ p - E**2) * np.eye(4 * n)
                            + np.kron(np.eye(4), triple.D_F @ triple.D_F))
                assert ts.matrices_close(d @ d, expected, tol=1e-12)

    def test_cross_terms_vanish(self, basis, rng):
        k = rng.uniform(-2, 2, size=4)
        gk = sum(k[mu] * basis.gamma[mu] for mu in range(4))
        assert ts.matrices_close(gk @ basis.gamma5 + basis.gamma5 @ gk,
                                 np.zeros((4, 4)), tol=0)

    def test_krein_anti_self_adjoint(self, basis, rng):
        t = ts.two_point_triple(1.0 + 0.5j)
        for _ in range(20):
            d = ts.dirac_momentum(t, mode(rng.uniform(-3, 3), rng.uniform(-3, 3, 3)), basis)
            assert ts.matrices_close(ts.krein_adjoint(d, basis), -d, tol=1e-12)


class TestKreinRatio:
    def test_on_shell_vanishes(self, basis):
        t = ts.two_point_triple(4.0)
        assert ts.krein_ratio(t, mode(5.0, [3, 0, 0]), basis) == pytest.approx(0.0, abs=1e-12)

    def test_massless_value(self, basis):
        # E^2 - |p|^2 = 4 - 1 on a massless internal state
        t = ts.electroweak_triple(1.0)
        nu = t.label_index("nu_R")
        assert ts.krein_ratio(t, mode(2.0, [1, 0, 0], internal=nu), basis) == pytest.approx(3.0)

    def test_pure_internal_contribution(self, basis):
        t = ts.two_point_triple(1.0)
        assert ts.krein_ratio(t, mode(0.0, [0, 0, 0]), basis) == pytest.approx(-1.0)

    def test_closed_form_identity(self, basis, rng):
        # the module's central check: matrix-algebra quotient equals
        # E^2 - |p|^2 - m_i^2 on both mass branches
        ew = ts.electroweak_triple(1.7)
        cases = [
            (ew, ew.label_index("nu_R"), 0.0),
            (ew, ew.label_index("e_R"), 1.7),
            (ts.two_point_triple(0.9 + 1.2j), 0, abs(0.9 + 1.2j)),
        ]
        for _ in range(300):
            E = rng.uniform(-5, 5)
            p = rng.uniform(-5, 5, size=3)
            for triple, internal, mass in cases:
                ratio = ts.krein_ratio(triple, mode(E, p, internal=internal), basis)
                assert ratio == pytest.approx(E**2 - p @ p - mass**2, abs=1e-11)

    def test_spinor_independence(self, basis, rng):
        t = ts.two_point_triple(1.3)
        reference = ts.krein_ratio(t, mode(2.0, [0.5, -0.3, 1.0]), basis)
        found = 0
        while found < 30:
            spinor = rng.standard_normal(4) + 1j * rng.standard_normal(4)
            norm = ts.krein_product(spinor, spinor, basis)
            if abs(norm) < 0.3:
                continue
            found += 1
            ratio = ts.krein_ratio(t, mode(2.0, [0.5, -0.3, 1.0], spinor=spinor), basis)
            assert ratio == pytest.approx(reference, abs=1e-11)
            scaled = ts.krein_ratio(
                t, mode(2.0, [0.5, -0.3, 1.0], spinor=2.7j * spinor), basis)
            assert scaled == pytest.approx(reference, abs=1e-11)

    def test_krein_null_spinor_rejected(self, basis):
        t = ts.two_point_triple(1.0)
        null = np.array([1.0, 0.0, 1.0, 0.0]) / np.sqrt(2)
        with pytest.raises(ts.KreinNullError):
            ts.krein_ratio(t, mode(1.0, [0, 0, 0], spinor=null), basis)

    def test_internal_index_range(self, basis):
        t = ts.two_point_triple(1.0)
        with pytest.raises(ts.DomainError):
            ts.krein_ratio(t, mode(1.0, [0, 0, 0], internal=2), basis)


class TestClassify:
    def test_harmonic_on_shell(self, basis):
        t = ts.two_point_triple(4.0)
        result = ts.classify_spinor(t, mode(5.0, [3, 0, 0]), basis)
        assert result.kind is ts.SpinorKind.HARMONIC
        assert abs(result.ratio) <= result.tolerance

    def test_causal_above_shell(self, basis):
        t = ts.two_point_triple(1.0)
        result = ts.classify_spinor(t, mode(10.0, [1, 0, 0]), basis)
        assert result.kind is ts.SpinorKind.CAUSAL
        assert result.ratio == pytest.approx(98.0)

    def test_non_causal_below_shell(self, basis):
        t = ts.two_point_triple(1.0)
        result = ts.classify_spinor(t, mode(0.0, [1, 0, 0]), basis)
        assert result.kind is ts.SpinorKind.NON_CAUSAL
        assert result.ratio == pytest.approx(-2.0)

    def test_on_shell_families(self, basis, rng):
        for _ in range(40):
            m = rng.uniform(0.5, 3.0)
            p = rng.uniform(-3, 3, size=3)
            t = ts.two_point_triple(m)
            E = ts.on_shell_energy(p, m)
            assert ts.classify_spinor(t, mode(E, p), basis).kind is ts.SpinorKind.HARMONIC


class TestCrossModule:
    def test_threshold_and_on_shell_share_the_mass_scale(self, basis):
        # the same |m| that sets the sheet-crossing proper time pi/(2|m|)
        # is the rest energy of the harmonic mode
        for m in (0.5, 1.0, 2.0):
            origin = ts.SheetPoint(ts.Event(0.0, np.zeros(3)), 0)
            crossing = ts.SheetPoint(ts.Event(ts.crossing_threshold(m), np.zeros(3)), 1)
            assert ts.causally_related_pure(origin, crossing, m)
            triple = ts.two_point_triple(m)
            rest = mode(ts.on_shell_energy([0, 0, 0], m), [0, 0, 0])
            assert ts.classify_spinor(triple, rest, basis).kind is ts.SpinorKind.HARMONIC
            early = ts.SheetPoint(ts.Event(0.99 * ts.crossing_threshold(m), np.zeros(3)), 1)
            assert not ts.causally_related_pure(origin, early, m)
            slow = mode(0.99 * ts.on_shell_energy([0, 0, 0], m), [0, 0, 0])
            assert ts.classify_spinor(triple, slow, basis).kind is ts.SpinorKind.NON_CAUSAL


class TestOnShellEnergy:
    def test_examples(self):
        assert ts.on_shell_energy([3, 0, 0], 4.0) == 5.0
        assert ts.on_shell_energy([0, 0, 0], 2.5) == 2.5
        assert ts.on_shell_energy([1, 1, 1], 0.0) == pytest.approx(np.sqrt(3))

    def test_negative_mass_rejected(self):
        with pytest.raises(ts.DomainError):
            ts.on_shell_energy([1, 0, 0], -1.0)


def test_internal_mass():
    ew = ts.electroweak_triple(2.5)
    assert ts.internal_mass(ew, ew.label_index("nu_L")) == 0.0
    assert ts.internal_mass(ew, ew.label_index("e_L")) == pytest.approx(2.5)


def test_mode_validation():
    with pytest.raises(ts.DomainError):
        ts.PlaneWaveMode(E=1.0, p=np.zeros(2))
    with pytest.raises(ts.DomainError):
        ts.PlaneWaveMode(E=1.0, p=np.zeros(3), spinor=np.zeros(4))
