import itertools
import random
from fractions import Fraction

import pytest

from src.errors import FormatError, PrecisionError
from src.instances import (
    BallSet, EndoSpec, Family, InstanceSpec, PadicInt, as_local_group_view, cofinal_balls, partial_product,
    sample, strong_ball,
)


def test_padic_digits_and_valuation():
    x = PadicInt.from_int(3, 18, 5)         # 18 = 0 + 0*3 + 2*9
    assert x.digits == (0, 0, 2, 0, 0)
    assert x.valuation() == 2
    assert x.value == 18
    assert (-x + x).is_zero()
    assert x.times_p().valuation() == 3
    assert x.in_ball(2) and not x.in_ball(3)
    assert PadicInt.parse(3, x.encode()) == x


def test_padic_precision_limits():
    zero = PadicInt.zero(5, 3)
    with pytest.raises(PrecisionError):
        zero.in_ball(4)
    with pytest.raises(PrecisionError):
        PadicInt(5, ()) + PadicInt(5, ())
    with pytest.raises(FormatError):
        PadicInt(3, (0, 3))


def test_instance_validation():
    with pytest.raises(FormatError):
        InstanceSpec.arc("1/3")
    with pytest.raises(FormatError):
        InstanceSpec.padic(4)
    with pytest.raises(FormatError):
        InstanceSpec.padic(3, e=8, precision=8)
    with pytest.raises(FormatError):
        InstanceSpec.from_dict({"family": "torus"})


def test_instance_round_trip(product_spec):
    assert InstanceSpec.from_dict(product_spec.to_dict()) == product_spec


def test_interval_products(interval):
    assert partial_product(interval, Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert partial_product(interval, Fraction(1, 2), Fraction(1, 2)) is None
    view = as_local_group_view(interval)
    assert view.inverse(Fraction(-2, 7)) == Fraction(2, 7)
    assert not view.contains(Fraction(1))


def test_product_view_is_componentwise(product_spec):
    view = as_local_group_view(product_spec)
    x = (Fraction(1, 2), PadicInt.from_int(3, 1, 8))
    y = (Fraction(1, 4), PadicInt.from_int(3, 2, 8))
    xy = view.product(x, y)
    assert xy == (Fraction(3, 4), PadicInt.from_int(3, 3, 8))
    assert view.product(x, x) is None
    assert view.parse_element("1/2|1:0:0:0:0:0:0:0") == x


def test_sampling_is_seeded_and_in_carrier(arc, padic3):
    assert sample(arc, 7, 50) == sample(arc, 7, 50)
    view = as_local_group_view(arc)
    assert all(view.contains(x) for x in sample(arc, 1, 300))
    padic_view = as_local_group_view(padic3)
    assert all(padic_view.contains(x) for x in sample(padic3, 2, 100))


def test_endomorphisms_apply_exactly(interval, padic3, halving):
    view = as_local_group_view(interval)
    assert view.apply_endo(halving, Fraction(3, 4), 3) == Fraction(3, 32)
    pview = as_local_group_view(padic3)
    x = PadicInt.from_int(3, 5, 8)
    assert pview.apply_endo(EndoSpec.times_p(), x, 2) == PadicInt.from_int(3, 45, 8)
    with pytest.raises(FormatError):
        EndoSpec.scaling(Family.INTERVAL, 2)
    with pytest.raises(FormatError):
        EndoSpec.times_p().validate_for(interval)


def test_ball_inclusions():
    closed_half = BallSet.closed_ball(Family.INTERVAL, Fraction(1, 2))
    open_half = BallSet.open_ball(Family.INTERVAL, Fraction(1, 2))
    assert open_half.subset_of(closed_half)
    assert not closed_half.subset_of(open_half)
    assert closed_half.contains(Fraction(1, 2)) and not open_half.contains(Fraction(1, 2))
    assert closed_half.interior() == open_half
    assert BallSet.padic_ball(3).subset_of(BallSet.padic_ball(1))


def test_ball_images_and_preimages(interval, padic3, halving):
    V = BallSet.closed_ball(Family.INTERVAL, Fraction(1, 2))
    assert V.image(halving) == BallSet.closed_ball(Family.INTERVAL, Fraction(1, 4))
    # the preimage is cut back to the carrier
    assert V.preimage(halving, interval) == BallSet.whole(interval)
    assert V.power_image(halving, interval, 3) == BallSet.closed_ball(Family.INTERVAL, Fraction(1, 16))
    P = BallSet.padic_ball(2)
    assert P.image(EndoSpec.times_p()) == BallSet.padic_ball(3)
    assert P.power_image(EndoSpec.times_p(), padic3, -5) == BallSet.padic_ball(0)


def test_pairs_in_omega(interval):
    assert BallSet.open_ball(Family.INTERVAL, Fraction(1, 2)).pairs_in_omega(interval)
    assert not BallSet.closed_ball(Family.INTERVAL, Fraction(1, 2)).pairs_in_omega(interval)


def test_cofinal_and_strong_balls(interval, padic3, product_spec):
    balls = cofinal_balls(interval, 3)
    assert [b.radius for b in balls] == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]
    assert cofinal_balls(padic3, 2) == [BallSet.padic_ball(1), BallSet.padic_ball(2)]
    assert strong_ball(interval, 4) == BallSet.open_ball(Family.INTERVAL, Fraction(1, 4))
    assert strong_ball(padic3, 9) == BallSet.whole(padic3)
    assert strong_ball(product_spec, 2).left.radius == Fraction(1, 2)


def test_ball_round_trip():
    ball = BallSet.pair(BallSet.closed_ball(Family.ARC, Fraction(1, 8)), BallSet.padic_ball(2))
    assert BallSet.from_dict(ball.to_dict()) == ball


def test_arc_globalizes_to_the_line(arc):
    view = as_local_group_view(arc)
    fifth = Fraction(1, 5)
    assert view.globalize([fifth] * 5) == 1
    rng = random.Random(0)
    word = view.sample(rng, 4)
    assert view.globalize(word) == sum(word)


def test_instances_satisfy_the_local_group_laws(interval, arc, padic3, product_spec):
    for spec in (interval, arc, padic3, product_spec):
        view = as_local_group_view(spec)
        e = view.identity
        rng = random.Random(31)
        points = view.sample(rng, 300)
        for x, y, z in zip(points[0::3], points[1::3], points[2::3]):
            assert view.product(e, x) == x and view.product(x, e) == x
            assert view.product(x, view.inverse(x)) == e
            xy, yz = view.product(x, y), view.product(y, z)
            if xy is not None and yz is not None:
                left, right = view.product(xy, z), view.product(x, yz)
                if left is not None and right is not None:
                    assert left == right
            # neat: (xy) y^-1 is defined and gives x back
            if xy is not None:
                assert view.product(xy, view.inverse(y)) == x


def test_endomorphisms_separate_sampled_points(interval, arc, padic3):
    for spec in (interval, arc, padic3):
        view = as_local_group_view(spec)
        endo = EndoSpec.default_for(spec)
        points = view.sample(random.Random(32), 60)
        for x, y in itertools.combinations(points, 2):
            if x == y:
                continue
            # times_p drops the last tracked digit
            if spec.family is Family.PADIC and (x + (-y)).valuation() >= spec.precision - 1:
                continue
            assert view.apply_endo(endo, x) != view.apply_endo(endo, y), (x, y)
