"""Gauss sum values, separability, and the tau evaluation for real characters."""

import cmath
import math

import pytest

from charsum.characters import build_character_group, fundamental_discriminants, real_primitive_character
from charsum.gauss_sums import (
    GAUSS_TOLERANCE,
    gauss_sum,
    quadratic_tau_residual,
    separability_residual,
    tau,
)


def brute_gauss(chi, n):
    """Independent two-line evaluation via cmath, term by term."""
    q = chi.modulus
    return sum(chi(k) * cmath.exp(2j * math.pi * k * n / q) for k in range(1, q))


def test_gauss_sum_odd_mod4_is_2i():
    chi = build_character_group(4).character_by_index(1)
    value = gauss_sum(chi, 1).value
    assert abs(value - 2j) < 1e-14
    # n = 1 twist equals e(1/4) - e(3/4) by hand
    assert abs(value - (cmath.exp(2j * math.pi / 4) - cmath.exp(2j * math.pi * 3 / 4))) < 1e-14


def test_gauss_sum_principal_zero_twist_counts_units():
    for q in (2, 7, 12):
        chi = build_character_group(q).character_by_index(0)
        value = gauss_sum(chi, 0).value
        phi = sum(1 for k in range(1, q) if math.gcd(k, q) == 1)
        assert abs(value - phi) < 1e-12


def test_gauss_sum_legendre_mod5_is_sqrt5():
    chi = real_primitive_character(5)
    assert abs(gauss_sum(chi, 1).value - math.sqrt(5)) < 1e-10


def test_gauss_sum_matches_bruteforce():
    for q in (3, 5, 8, 9, 21):
        for chi in build_character_group(q).characters():
            for n in (0, 1, 2, q - 1, q + 3):
                assert abs(gauss_sum(chi, n).value - brute_gauss(chi, n)) < 1e-11


def test_tau_examples():
    assert abs(tau(real_primitive_character(-3)).value - 1j * math.sqrt(3)) < 1e-10
    assert abs(tau(real_primitive_character(5)).value - math.sqrt(5)) < 1e-10
    assert abs(tau(real_primitive_character(-4)).value - 2j) < 1e-10


def test_gauss_sum_residual_metadata():
    chi = real_primitive_character(5)
    gs = gauss_sum(chi, 2)
    assert gs.modulus == 5 and gs.twist == 2 and gs.character_label == chi.label
    assert gs.residual == abs(abs(gs.value) - math.sqrt(5)) < 1e-9
    # residual not attached for non-coprime twists
    assert gauss_sum(chi, 5).residual == 0.0


def test_separability_odd_mod4_n3():
    chi = build_character_group(4).character_by_index(1)
    assert separability_residual(chi, 3) < 1e-12
    # both sides equal -2i
    assert abs(gauss_sum(chi, 3).value + 2j) < 1e-13


def test_separability_vanishing_twist():
    chi = real_primitive_character(5)
    assert separability_residual(chi, 5) < 1e-12
    assert abs(gauss_sum(chi, 5).value) < 1e-12


def test_separability_exhaustive_small_moduli():
    worst = 0.0
    for q in range(3, 51):
        for chi in build_character_group(q).primitive_characters():
            for n in range(q):
                worst = max(worst, separability_residual(chi, n))
    assert worst <= GAUSS_TOLERANCE


def test_separability_rejects_imprimitive():
    chi = build_character_group(8).character_by_index(0)
    with pytest.raises(ValueError, match="primitive"):
        separability_residual(chi, 1)


def test_quadratic_tau_examples():
    assert quadratic_tau_residual(5) <= 1e-10
    assert quadratic_tau_residual(-3) <= 1e-10
    with pytest.raises(ValueError):
        quadratic_tau_residual(9)


def test_quadratic_tau_sweep():
    worst = max(quadratic_tau_residual(d) for d in fundamental_discriminants(500))
    assert worst <= 1e-9


def test_tau_magnitude_all_primitive():
    for q in range(3, 101):
        for chi in build_character_group(q).primitive_characters():
            assert abs(abs(tau(chi).value) - math.sqrt(q)) <= 1e-9, chi.label


def test_conjugation_relation():
    # G(-n, chi) = conj(G(n, conj(chi))) and G(n, chi) = chi(-1) conj(G(n, conj(chi))),
    # exercised for both parities
    for q in (5, 7, 8, 12):
        for chi in build_character_group(q).primitive_characters():
            sign = 1.0 if chi.is_even else -1.0
            for n in (1, 2, 3):
                conj_side = gauss_sum(chi.conjugate(), n).value.conjugate()
                assert abs(gauss_sum(chi, -n).value - conj_side) <= 1e-9, (q, chi.label, n)
                assert abs(gauss_sum(chi, n).value - sign * conj_side) <= 1e-9, (q, chi.label, n)
