import pytest

import dismal


def test_worked_example():
    a, b = dismal.Number("169"), dismal.Number("248")
    assert str(a + b) == "269"
    assert str(a * b) == "12468"


def test_binary_product():
    assert str(dismal.evaluate("(1101@2)*(101@2)")) == "111101@2"


def test_divisors_and_primes():
    assert dismal.divisor_count(dismal.Number("11")) == 90
    assert dismal.is_prime(dismal.Number("19"))
    assert not dismal.is_prime(dismal.Number("119"))
    assert dismal.prime_count(2, 10) == 168


def test_big_integers_are_python_ints():
    s = dismal.d2_ones_series(16)
    assert s[16] == 5719
    assert isinstance(dismal.d_ones(10, 5), int)
    assert dismal.d_ones(10, 5) == 67968


def test_partitions_and_phi():
    assert dismal.partition_count(dismal.Number("21", 3)) == 22
    assert dismal.phi(dismal.Number.from_value(17, 2)) == 30


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        dismal.Number("12", 2)
    with pytest.raises(dismal.DismalError):
        dismal.evaluate("1@2+1@3")


def test_sequence():
    assert dict(dismal.sequence("Triangular", 10, 10, 10))[10] == "19"
