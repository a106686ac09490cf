import pytest

from redsop import (
    CyclicModule,
    HomogeneityError,
    Ideal,
    ParamSequence,
    PolyRing,
    depth_oracle,
    is_cm_depth,
    is_cm_reducing,
    is_part_of_reducing_sop,
    is_part_of_sop,
    is_reducing_sop,
    is_regular_sequence,
    make_reducing,
    make_reducing_part,
    max_assoc_dim_containing,
    quotient_module,
    random_sop,
)
from redsop.sop import depth_with_certificate


def seq(ring, text):
    return ParamSequence.parse(ring, text)


# --- module and sequence construction ---------------------------------------

def test_module_requires_proper_ideal(R):
    with pytest.raises(ValueError):
        CyclicModule(R, R.ideal("1"))


def test_module_requires_homogeneous_ideal(R):
    with pytest.raises(HomogeneityError):
        CyclicModule(R, R.ideal("X^2 + Y"))


def test_sequence_requires_positive_degree(R):
    with pytest.raises(ValueError):
        ParamSequence(R, (R.poly("7"),))
    with pytest.raises(HomogeneityError):
        ParamSequence(R, (R.poly("X^2 + Y"),))


def test_dimension_of_fixture(M):
    assert M.d == 2


# --- quotient_module ---------------------------------------------------------

def test_quotient_module_drops_to_zero_dim(R, M):
    N = quotient_module(M, seq(R, "Y; X+Y+Z"))
    assert N is not None and N.d == 0


def test_quotient_module_empty_sequence(R, M):
    assert quotient_module(M, seq(R, "")) is M


def test_quotient_module_redundant_element():
    ring = PolyRing(("X", "Y"))
    N = CyclicModule(ring, ring.ideal("X"))
    out = quotient_module(N, ParamSequence(ring, (ring.poly("X"),)))
    assert out.d == 1 and out.ideal == ring.ideal("X")


# --- is_part_of_sop ----------------------------------------------------------

def test_fixture_sop(R, M):
    assert is_part_of_sop(seq(R, "Y; X+Y+Z"), M)


def test_single_element_not_dropping_dimension(R, M):
    assert not is_part_of_sop(seq(R, "X"), M)


def test_empty_sequence_is_part_of_sop(R, M):
    assert is_part_of_sop(seq(R, ""), M)


def test_part_of_sop_length_check(R, M):
    with pytest.raises(ValueError):
        is_part_of_sop(seq(R, "X; Y; Z"), M)


# --- the dimension filter ----------------------------------------------------

def test_filter_on_zero_divisor(R, M):
    assert max_assoc_dim_containing(R.poly("Y"), M) == 1


def test_filter_on_non_zero_divisor(R, M):
    assert max_assoc_dim_containing(R.poly("X+Y+Z"), M) == -1


def test_filter_on_top_component(R, M):
    assert max_assoc_dim_containing(R.poly("X"), M) == 2


# --- reducing checks ---------------------------------------------------------

def test_fixture_order_dependence(R, M):
    bad = is_reducing_sop(seq(R, "Y; X+Y+Z"), M)
    assert not bad.ok
    w = bad.witness
    assert w.kind == "associated_prime"
    assert w.index == 1 and w.threshold == 1 and w.dim == 1
    assert w.ideal == R.ideal("Y", "Z")
    assert w.prime is not None and w.prime.vars == frozenset({"Y", "Z"})

    good = is_reducing_sop(seq(R, "X+Y+Z; Y"), M)
    assert good.ok and good.witness is None


def test_reducing_non_sop_witness(R, M):
    chk = is_reducing_sop(seq(R, "X; Y"), M)
    assert not chk.ok and chk.witness.kind == "not_system_of_parameters"


def test_reducing_vacuous_in_dimension_one():
    ring = PolyRing(("X", "Y"))
    M1 = CyclicModule(ring, ring.ideal("XY"))
    assert M1.d == 1
    assert is_reducing_sop(ParamSequence.parse(ring, "X+Y"), M1).ok


def test_reducing_length_check(R, M):
    with pytest.raises(ValueError):
        is_reducing_sop(seq(R, "Y"), M)


def test_part_of_reducing(R, M):
    assert is_part_of_reducing_sop(seq(R, "X+Y"), M).ok
    bad = is_part_of_reducing_sop(seq(R, "Y"), M)
    assert not bad.ok and bad.witness.ideal == R.ideal("Y", "Z")


def test_part_of_reducing_rejects_full_length(R, M):
    with pytest.raises(ValueError):
        is_part_of_reducing_sop(seq(R, "Y; X+Y+Z"), M)


def test_non_zero_divisor_is_reducing_part(R, M):
    # a non-zero-divisor that is part of a sop is always a reducing part
    assert is_part_of_reducing_sop(seq(R, "X+Y+Z"), M).ok


# --- constructions -----------------------------------------------------------

def test_make_reducing_fixes_fixture(R, M):
    res = make_reducing(seq(R, "Y; X+Y+Z"), M, seed=5)
    assert res.ok
    assert Ideal(R, res.sequence.elems) == Ideal(R, seq(R, "Y; X+Y+Z").elems)
    assert is_reducing_sop(res.sequence, M).ok


def test_make_reducing_returns_already_reducing_input(R, M):
    xs = seq(R, "X+Y+Z; Y")
    res = make_reducing(xs, M, seed=5)
    assert res.ok and res.attempts == 0 and res.sequence == xs


def test_make_reducing_on_regular_ring():
    ring = PolyRing(("X", "Y"))
    free = CyclicModule(ring, Ideal(ring, ()))
    res = make_reducing(ParamSequence.parse(ring, "X+Y; Y"), free, seed=1)
    assert res.ok and is_reducing_sop(res.sequence, free).ok


def test_make_reducing_rejects_non_sop(R, M):
    with pytest.raises(ValueError):
        make_reducing(seq(R, "X; Y"), M, seed=0)


def test_make_reducing_part_identity(R, M):
    xs = seq(R, "X+Y")
    res = make_reducing_part(xs, M, seed=9)
    assert res.ok and res.sequence == xs


def test_make_reducing_part_fails_on_obstructed_element(R, M):
    # every scalar multiple of Y stays inside the bad associated prime
    res = make_reducing_part(seq(R, "Y"), M, seed=9)
    assert not res.ok
    assert res.witness is not None and res.witness.kind == "associated_prime"


def test_make_reducing_part_on_free_module():
    ring = PolyRing(("X", "Y", "Z"))
    free = CyclicModule(ring, Ideal(ring, ()))
    res = make_reducing_part(ParamSequence.parse(ring, "Y; X+Y+Z"), free, seed=2)
    assert res.ok


def test_random_sop_contract(R, M):
    xs = random_sop(M, seed=123)
    assert xs.r == 2 and is_part_of_sop(xs, M)
    assert xs == random_sop(M, seed=123)  # deterministic


def test_random_sop_avoids_components():
    ring = PolyRing(("X", "Y"))
    M1 = CyclicModule(ring, ring.ideal("XY"))
    xs = random_sop(M1, seed=77)
    assert xs.r == 1 and is_part_of_sop(xs, M1)


def test_random_sop_zero_dimensional(R):
    M0 = CyclicModule(R, R.irrelevant_ideal())
    assert random_sop(M0, seed=1).r == 0


# --- regular sequences -------------------------------------------------------

def test_fixture_reducing_sop_not_regular(R, M):
    assert not is_regular_sequence(seq(R, "X+Y+Z; Y"), M)


def test_single_nzd_is_regular(R, M):
    assert is_regular_sequence(seq(R, "X+Y+Z"), M)


def test_variables_regular_on_free_module():
    ring = PolyRing(("X", "Y"))
    free = CyclicModule(ring, Ideal(ring, ()))
    assert is_regular_sequence(ParamSequence.parse(ring, "X; Y"), free)


# --- depth and Cohen-Macaulay tests -------------------------------------------

def test_depth_of_fixture(M):
    assert depth_oracle(M, seed=4) == 1


def test_depth_of_free_module(R):
    free = CyclicModule(R, Ideal(R, ()))
    assert depth_oracle(free, seed=4) == 3


def test_depth_zero():
    ring = PolyRing(("X", "Y"))
    N = CyclicModule(ring, ring.ideal("X^2", "XY"))
    assert depth_oracle(N, seed=4) == 0


def test_depth_certificate_is_regular_sequence(R, M):
    depth, cuts = depth_with_certificate(M, seed=4)
    assert depth == 1 == len(cuts)
    assert is_regular_sequence(ParamSequence(R, cuts), M)


def test_cm_tests_on_fixture(M):
    ok, cert = is_cm_reducing(M, seed=21)
    assert not ok
    assert cert.sop is not None and not cert.last_is_nzd
    assert not is_cm_depth(M, seed=22)


def test_cm_tests_on_hypersurface():
    ring = PolyRing(("X", "Y"))
    M1 = CyclicModule(ring, ring.ideal("XY"))
    assert is_cm_reducing(M1, seed=31)[0]
    assert is_cm_depth(M1, seed=32)


def test_cm_tests_on_free_module(R):
    free = CyclicModule(R, Ideal(R, ()))
    assert is_cm_reducing(free, seed=41)[0]
    assert is_cm_depth(free, seed=42)


def test_cm_tests_zero_dimensional(R):
    M0 = CyclicModule(R, R.irrelevant_ideal())
    ok, cert = is_cm_reducing(M0, seed=5)
    assert ok and cert.sop is None
    assert is_cm_depth(M0, seed=5)
