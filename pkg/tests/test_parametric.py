import random
from fractions import Fraction

import pytest

from okbodies.errors import InfeasibleEverywhere, UnboundedValue
from okbodies.parametric import parametric_value_function
from okbodies.simplex import OPTIMAL, solve_raw

F = Fraction


def _lp_at(A, b0, b1, objective, sense, t):
    cons = [(row, p + q * t) for row, p, q in zip(A, b0, b1)]
    out = solve_raw(cons, objective, sense)
    assert out.status == OPTIMAL
    return out.value


def test_simple_growing_bound():
    # min x s.t. x >= t on [0, 3]: value t
    res = parametric_value_function([[F(1)]], [F(0)], [F(1)], [F(1)], "min",
                                    (F(0), F(3)))
    assert res.feasible_start == 0 and res.feasible_end == 3
    f = res.function
    assert f.breakpoints == ((0, 0), (3, 3))


def test_breakpoint_from_competing_constraints():
    # min x s.t. x >= t, x >= 2 - t on [0, 2]: value max(t, 2-t)
    res = parametric_value_function([[F(1)], [F(1)]], [F(0), F(2)],
                                    [F(1), F(-1)], [F(1)], "min", (F(0), F(2)))
    assert res.function.breakpoints == ((0, 2), (1, 1), (2, 2))
    assert res.function.shape == "convex"


def test_matches_direct_lp_at_random_t():
    rng = random.Random(21)
    A = [[F(1), F(0)], [F(0), F(1)], [F(1), F(1)], [F(-1), F(-2)]]
    b0 = [F(0), F(0), F(1), F(-10)]
    b1 = [F(1), F(-1), F(2), F(-1)]
    obj = [F(2), F(3)]
    res = parametric_value_function(A, b0, b1, obj, "min", (F(0), F(2)))
    lo, hi = res.feasible_start, res.feasible_end
    for _ in range(20):
        t = lo + (hi - lo) * F(rng.randint(1, 99), 100)
        assert res.function.value_at(t) == _lp_at(A, b0, b1, obj, "min", t)


def test_concave_max_with_tail():
    # max u s.t. 0 <= u <= min(2 + 4t, 4), t >= 0: breaks at 1/2, constant after
    A = [[F(1)], [F(-1)], [F(-1)]]
    b0 = [F(0), F(-2), F(-4)]
    b1 = [F(0), F(-4), F(0)]
    res = parametric_value_function(A, b0, b1, [F(1)], "max", (F(0), None))
    f = res.function
    assert f.breakpoints == ((0, 2), (F(1, 2), 4))
    assert f.tail_slope == 0
    assert f.shape == "concave"


def test_infeasible_everywhere():
    with pytest.raises(InfeasibleEverywhere):
        parametric_value_function([[F(1)], [F(-1)]], [F(1), F(0)],
                                  [F(0), F(0)], [F(1)], "min", (F(0), F(5)))


def test_unbounded_value():
    with pytest.raises(UnboundedValue):
        parametric_value_function([[F(1)]], [F(0)], [F(0)], [F(-1)], "min",
                                  (F(0), F(1)))


def test_feasibility_window_detected():
    # x >= t and x <= 1 (so -x >= -1): feasible only for t <= 1
    res = parametric_value_function([[F(1)], [F(-1)]], [F(0), F(-1)],
                                    [F(1), F(0)], [F(1)], "min", (F(0), F(5)))
    assert res.feasible_start == 0
    assert res.feasible_end == 1
