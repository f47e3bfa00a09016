from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from galg.numtheory import (
    QuadForm,
    anisotropic_at_prime,
    anisotropic_by_criterion,
    anisotropy_certificate,
    brute_force_isotropy,
    construct_counterexample,
    diagonalize_kabcd,
    find_witness_prime,
    is_prime,
    is_square,
    k_abcd_matrix,
    legendre,
    prime_factors,
    rational_diagonal_form,
    squarefree_part,
)
from galg.seifert import alexander_polynomial, signature
from strategies import residue_table

SMALL_PRIMES = [p for p in range(3, 200) if all(p % d for d in range(2, int(p**0.5) + 1))]


def naive_isotropy(diag, bound):
    """Plain enumeration oracle, same ordering: max-norm shells, then lexicographic."""
    rng = range(-bound, bound + 1)
    hits = [v for v in product(rng, repeat=len(diag)) if any(v) and sum(d * x * x for d, x in zip(diag, v)) == 0]
    return min(hits, key=lambda v: (max(map(abs, v)), v)) if hits else None


class TestPrimes:
    def test_is_prime_small(self):
        assert [n for n in range(60) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]

    def test_is_prime_large(self):
        assert is_prime(2**61 - 1)
        assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
        assert not is_prime((2**31 - 1) * (2**19 - 1))

    @given(st.integers(2, 10**6))
    def test_factors_multiply_back(self, n):
        out = 1
        for p in prime_factors(n):
            assert is_prime(p)
            k = n
            while k % p == 0:
                k //= p
                out *= p
        assert out == n

    def test_squarefree_part(self):
        assert squarefree_part(72) == 2
        assert squarefree_part(-50) == -2
        assert squarefree_part(1) == 1


class TestLegendre:
    def test_examples(self):
        assert legendre(2, 3) == -1
        assert legendre(4, 7) == 1
        assert legendre(6, 3) == 0

    def test_residue_table(self):
        for p in SMALL_PRIMES:
            table = residue_table(p)
            for n in range(1, 201):
                expected = 0 if n % p == 0 else (1 if n % p in table else -1)
                assert legendre(n, p) == expected

    def test_negative_argument(self):
        assert legendre(-1, 3) == -1 and legendre(-1, 5) == 1

    @pytest.mark.parametrize("p", [2, 9, 1, -3])
    def test_bad_modulus(self, p):
        with pytest.raises(ValueError):
            legendre(3, p)


class TestWitnessPrime:
    def test_examples(self):
        assert find_witness_prime(2) == 3
        assert find_witness_prime(3) == 5
        with pytest.raises(ValueError, match="every odd prime gives symbol 0 or 1"):
            find_witness_prime(9)

    @given(st.integers(1, 5000).filter(lambda n: not is_square(n)))
    def test_smallest(self, n):
        p = find_witness_prime(n)
        assert legendre(n, p) == -1
        assert all(legendre(n, q) != -1 for q in SMALL_PRIMES if q < p)


class TestCriterion:
    def test_examples(self):
        assert anisotropic_by_criterion(1, 2, 3, 1, 1)
        assert not anisotropic_by_criterion(1, 1, 3, 1, 1)

    def test_recomputed_row(self):
        # (2/5) = -1 by Euler (2^2 = 4 = -1 mod 5), but (-6/5) = (4/5) = +1, so the p-part
        # 2 x3^2 + 3 x4^2 is isotropic mod 5 and the form is isotropic over Q_5
        assert pow(2, 2, 5) == 4 and legendre(2, 5) == -1
        assert legendre(-6, 5) == 1
        assert not anisotropic_by_criterion(2, 1, 5, 2, 3)
        assert not anisotropic_at_prime(QuadForm((2, -1, 10, 15)), 5)

    def test_domain(self):
        with pytest.raises(ValueError, match="must be positive"):
            anisotropic_by_criterion(0, 2, 3, 1, 1)
        with pytest.raises(ValueError, match="divisible by p"):
            anisotropic_by_criterion(1, 2, 3, 3, 1)

    @settings(max_examples=300)
    @given(st.integers(1, 30), st.integers(1, 30), st.sampled_from([3, 5, 7, 11]), st.integers(1, 30), st.integers(1, 30))
    def test_sound_against_search(self, a, b, p, M, N):
        if any(v % p == 0 for v in (a, b, M, N)):
            return
        if anisotropic_by_criterion(a, b, p, M, N):
            form = QuadForm((a, -b, p * M, p * N))
            assert anisotropic_at_prime(form, p)
            assert brute_force_isotropy(form, 6) is None


class TestLocalAnisotropy:
    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(-40, 40).filter(bool), min_size=2, max_size=4), st.sampled_from([3, 5, 7]))
    def test_never_contradicts_search(self, diag, p):
        form = QuadForm(diag)
        if anisotropic_at_prime(form, p):
            assert naive_isotropy(form.diag, 3 if len(diag) == 4 else 6) is None

    def test_known_isotropic(self):
        assert not anisotropic_at_prime(QuadForm((1, -1, 3, 66)), 3)
        assert not anisotropic_at_prime(QuadForm((1, 1, 1, 1, 1)), 3)


class TestBruteForce:
    def test_examples(self):
        assert brute_force_isotropy(QuadForm((1, -1, 3, 66)), 5) == (-1, -1, 0, 0)
        assert brute_force_isotropy(QuadForm((1, -2, 3, 66)), 25) is None
        assert brute_force_isotropy(QuadForm((5,)), 10) is None

    @settings(max_examples=150, deadline=None)
    @given(st.lists(st.integers(-12, 12).filter(bool), min_size=1, max_size=4), st.integers(1, 3))
    def test_matches_naive(self, diag, bound):
        assert brute_force_isotropy(QuadForm(diag), bound) == naive_isotropy(diag, bound)


class TestKabcd:
    def test_unknot(self):
        assert alexander_polynomial(k_abcd_matrix(0, 0, 5, -7)).coeffs == {0: 1}

    def test_signature(self):
        assert signature(k_abcd_matrix(1, 1, 1, 1)) == 4

    def test_example_matrix(self):
        assert k_abcd_matrix(1, -2, 1, 4).mat == ((1, 0, 1, 0), (0, -2, 0, 1), (0, 0, 1, 0), (0, 0, 0, 4))

    @pytest.mark.parametrize(
        "args, diag",
        [((1, -2, 1, 4), (1, -2, 3, 66)), ((1, -1, 1, 1), (1, -1, 3, 5)), ((2, -1, 2, 5), (2, -1, 30, 21))],
    )
    def test_diagonalize(self, args, diag):
        assert diagonalize_kabcd(*args).diag == diag

    def test_diagonalize_domain(self):
        with pytest.raises(ValueError):
            diagonalize_kabcd(-1, -2, 1, 1)

    @given(st.integers(1, 6), st.integers(-6, -1), st.integers(1, 6), st.integers(1, 6))
    def test_diagonalization_same_square_classes(self, a, b, c, d):
        # the Q-diagonalization computed independently has the same product of square classes
        form, zeros = rational_diagonal_form(k_abcd_matrix(a, b, c, d))
        mine = diagonalize_kabcd(a, b, c, d)
        prod_a = prod_b = 1
        for x in form.diag:
            prod_a *= x
        for x in mine.diag:
            prod_b *= x
        assert zeros == 0 and is_square(prod_a * prod_b)
        assert sorted(x > 0 for x in form.diag) == sorted(x > 0 for x in mine.diag)


class TestCertificates:
    def test_definite(self):
        cert = anisotropy_certificate(((-1, 1), (0, -1)))
        assert cert.kind == "definite"

    def test_local(self):
        cert = anisotropy_certificate(k_abcd_matrix(1, -2, 1, 4))
        assert cert.kind == "local" and cert.prime == 3

    def test_isotropic_none(self):
        assert anisotropy_certificate(QuadForm((1, -1))) is None
        assert anisotropy_certificate(((0, 1), (0, 0))) is None


class TestConstruction:
    def test_examples(self):
        c = construct_counterexample(1, -2)
        assert (c.a, c.b, c.c, c.d, c.p) == (1, -2, 1, 4, 3)
        c = construct_counterexample(2, -1)
        assert (c.a, c.b, c.c, c.d, c.p) == (2, -1, 2, 5, 3)

    def test_square_obstruction(self):
        with pytest.raises(ValueError, match="perfect square"):
            construct_counterexample(1, -1)

    def test_all_squares_rejected(self):
        for m, n in product(range(-25, 26), repeat=2):
            if is_square(-m * n):
                with pytest.raises(ValueError):
                    construct_counterexample(m, n)

    def test_swapped_order(self):
        c = construct_counterexample(-2, 1)
        assert (c.a, c.b) == (1, -2) and (c.m, c.n) == (-2, 1)

    @pytest.mark.parametrize("m, n, sigma", [(1, 2, 4), (3, 5, 4), (-1, -2, -4)])
    def test_signature_branch(self, m, n, sigma):
        c = construct_counterexample(m, n)
        assert c.method == "signature" and c.signature == sigma
        assert signature(c.matrix) == sigma
        assert alexander_polynomial(k_abcd_matrix(0, 0, c.c, c.d)).coeffs == {0: 1}

    def test_lines(self):
        lines = construct_counterexample(1, -2).lines()
        assert "p=3" in lines and "exhausted=true" in lines and "diag_form=1,-2,3,66" in lines

    def test_isotropic_identity_pair(self):
        # (1, -1, *, *) is always isotropic via (1, 1, 0, 0)
        for c, d in product(range(1, 6), repeat=2):
            form = diagonalize_kabcd(1, -1, c, d)
            assert form((1, 1, 0, 0)) == 0

    @pytest.mark.parametrize("m", range(1, 8))
    @pytest.mark.parametrize("n", range(-8, 0))
    def test_grid_invariants(self, m, n):
        if is_square(-m * n):
            return
        c = construct_counterexample(m, n, search_bound=8)
        c.check()
        assert alexander_polynomial(k_abcd_matrix(0, 0, c.c, c.d)).coeffs == {0: 1}
        assert anisotropic_at_prime(c.diag_form, c.p)
