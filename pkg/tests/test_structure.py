import pytest

from gooddecomp import (
    Digraph,
    cartesian_product,
    complete,
    cycle,
    ear_decomposition,
    hamiltonian_cycle_bruteforce,
    hamiltonian_cycle_semicomplete,
    is_semicomplete,
    is_strong,
    path,
    s4,
    validate_ear_decomposition,
)
from gooddecomp.oracle import enumerate_semicomplete
from gooddecomp.structure import cycle_arcs, is_cycle_of

from conftest import random_strong_digraph


class TestEarDecomposition:
    def test_cycle_single_ear(self):
        dec = ear_decomposition(cycle(4))
        assert len(dec.ears) == 1 and dec.ears[0].closed

    def test_complete3_with_start_cycle(self):
        d = complete(3)
        dec = ear_decomposition(d, start_cycle=(0, 1, 2))
        assert dec.ears[0].vertices == (0, 1, 2)
        validate_ear_decomposition(d, dec)  # any valid sequence

    def test_non_strong_rejected(self):
        with pytest.raises(ValueError):
            ear_decomposition(path(3))

    def test_bad_start_cycle_rejected(self):
        with pytest.raises(ValueError):
            ear_decomposition(complete(3), start_cycle=(0, 0, 1))

    def test_ear_count_formula(self, rng):
        for _ in range(40):
            d = random_strong_digraph(rng, 6)
            dec = ear_decomposition(d)
            validate_ear_decomposition(d, dec)
            assert len(dec.ears) == d.m - d.n + 1


class TestHamiltonianSemicomplete:
    def test_triangle(self):
        assert hamiltonian_cycle_semicomplete(cycle(3)) == (0, 1, 2)

    def test_digon(self):
        assert hamiltonian_cycle_semicomplete(cycle(2)) == (0, 1)

    def test_s4(self):
        hc = hamiltonian_cycle_semicomplete(s4())
        assert is_cycle_of(s4(), hc) and len(hc) == 4

    def test_rejects_non_semicomplete(self):
        with pytest.raises(ValueError):
            hamiltonian_cycle_semicomplete(cycle(4))

    def test_rejects_non_strong(self):
        d = Digraph(3, [(0, 1), (0, 2), (1, 2)])  # transitive tournament
        with pytest.raises(ValueError):
            hamiltonian_cycle_semicomplete(d)

    def test_exhaustive_small_orders(self):
        # every strong semicomplete digraph of order <= 5, up to isomorphism
        for n in range(2, 6):
            for d in enumerate_semicomplete(n, min_arc_strong=1):
                hc = hamiltonian_cycle_semicomplete(d)
                assert is_cycle_of(d, hc) and len(hc) == n
                assert hamiltonian_cycle_bruteforce(d) is not None

    def test_random_orders_six_seven(self, rng):
        # exhaustive enumeration is infeasible past order 5; random sampling
        found = 0
        while found < 60:
            n = rng.choice((6, 7))
            arcs = set()
            for u in range(n):
                for v in range(u + 1, n):
                    state = rng.randint(0, 2)
                    if state != 1:
                        arcs.add((u, v))
                    if state != 0:
                        arcs.add((v, u))
            d = Digraph(n, arcs)
            if not is_strong(d):
                continue
            assert is_semicomplete(d)
            hc = hamiltonian_cycle_semicomplete(d)
            assert is_cycle_of(d, hc) and len(hc) == n
            found += 1


class TestHamiltonianBruteforce:
    def test_cycle(self):
        assert hamiltonian_cycle_bruteforce(cycle(6)) == tuple(range(6))

    def test_c2_box_c3_none(self):
        d = cartesian_product(cycle(2), cycle(3)).digraph
        assert hamiltonian_cycle_bruteforce(d) is None  # gcd(2,3)=1

    def test_c2_box_c2_found(self):
        d = cartesian_product(cycle(2), cycle(2)).digraph
        hc = hamiltonian_cycle_bruteforce(d)
        assert hc is not None and is_cycle_of(d, hc) and len(hc) == 4

    def test_bound_enforced(self):
        with pytest.raises(ValueError):
            hamiltonian_cycle_bruteforce(Digraph(37, []))

    def test_cycle_arcs_helper(self):
        assert cycle_arcs((0, 1, 2)) == [(0, 1), (1, 2), (2, 0)]
