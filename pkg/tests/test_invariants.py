import time

import pytest

from numonoid import (
    BudgetExceeded,
    CatenaryReport,
    DeltaSet,
    InvalidInput,
    NotAnElement,
    NumericalMonoid,
    ShiftedFamily,
    TameReport,
    catenary_of_element,
    catenary_of_monoid,
    default_window,
    delta_set,
    delta_set_of_element,
    monoid_at,
    monoid_catenary_report,
    monotone_equal_catenary,
    tame_degree,
    tame_degree_windowed,
)

M = NumericalMonoid((6, 9, 20))
F = ShiftedFamily((6, 9, 20))


def test_default_window():
    assert default_window(M) == 9 * 20 + 2 * 20
    assert default_window(NumericalMonoid((5,))) == 5 * 5 + 2 * 5


def test_catenary_of_element():
    assert catenary_of_element(M, 60) == 7
    assert catenary_of_element(M, 18) == 3
    assert catenary_of_element(M, 6) == 0  # unique factorization
    assert catenary_of_element(NumericalMonoid((74, 77, 88)), 1078) == 11
    with pytest.raises(NotAnElement):
        catenary_of_element(M, 7)


def test_catenary_of_monoid():
    assert catenary_of_monoid(M) == 7
    assert catenary_of_monoid(NumericalMonoid((2, 3))) == 3
    assert catenary_of_monoid(NumericalMonoid((1,))) == 0
    M401 = NumericalMonoid((401, 407, 410, 421))
    assert catenary_of_monoid(M401) == 23
    # a precomputed Betti list short-circuits the scan
    assert (
        catenary_of_monoid(M401, betti=[1221, 2867, 3280, 9223, 9229, 9262])
        == 23
    )


def test_monotone_equal_catenary():
    # 1078 in <74,77,88> forces a detour through a longer factorization:
    # the monotone and equal degrees exceed the ordinary one
    H = NumericalMonoid((74, 77, 88))
    assert monotone_equal_catenary(H, 1078) == (14, 14)
    assert catenary_of_element(H, 1078) == 11
    # all length classes of Z(60) are singletons
    assert monotone_equal_catenary(M, 60) == (7, 0)
    assert monotone_equal_catenary(M, 126) == (14, 14)
    assert monotone_equal_catenary(NumericalMonoid((2, 3)), 6) == (3, 0)
    assert monotone_equal_catenary(M, 6) == (0, 0)
    with pytest.raises(NotAnElement):
        monotone_equal_catenary(M, 7)


def test_monoid_catenary_report_windowed():
    rep = monoid_catenary_report(M, window=200)
    assert rep == CatenaryReport(
        ordinary=7, monotone=14, equal=14, exact=False, window=200
    )


def test_monoid_catenary_report_family_exact():
    member = monoid_at(F, 450)
    rep = monoid_catenary_report(member.monoid, member=member)
    # bottleneck sits at the largest Betti element 11706, whose two
    # factorizations (25,1,0,0) and (0,0,4,21) are distance 26 apart
    assert rep == CatenaryReport(
        ordinary=26, monotone=26, equal=26, exact=True, window=None
    )


def test_monoid_catenary_report_rejects_mismatched_member():
    with pytest.raises(InvalidInput):
        monoid_catenary_report(M, member=monoid_at(F, 450))


def test_delta_set_of_element():
    assert delta_set_of_element(M, 60) == frozenset({1, 4})
    assert delta_set_of_element(M, 18) == frozenset({1})
    assert delta_set_of_element(M, 6) == frozenset()


def test_delta_set_windowed():
    ds = delta_set(M, window=200)
    assert ds == DeltaSet(frozenset({1, 2, 3, 4}), False, 200)
    assert min(ds.values) == 1
    ds = delta_set(NumericalMonoid((3, 14)))
    assert ds.values == frozenset({11})
    assert ds.window == default_window(NumericalMonoid((3, 14)))


def test_delta_set_family_exact():
    member = monoid_at(F, 450)
    assert delta_set(member.monoid, member=member) == DeltaSet(
        frozenset({1}), True, None
    )
    G = ShiftedFamily((6, 9))
    member = monoid_at(G, 82)
    assert delta_set(member.monoid, member=member) == DeltaSet(
        frozenset({3}), True, None
    )


def test_tame_degree():
    assert tame_degree(M, 18) == 3
    assert tame_degree(M, 6) == 0
    assert tame_degree(NumericalMonoid((401, 407, 410, 421)), 10869) == 27
    with pytest.raises(NotAnElement):
        tame_degree(M, 7)


def test_tame_degree_windowed():
    assert tame_degree_windowed(M, window=200) == TameReport(10, 60, 200)


def test_tame_degree_windowed_matches_brute_force():
    from numonoid import factorization_buckets
    from numonoid.core import contains
    from numonoid.factorizations import distance

    window = 120
    buckets = factorization_buckets(M.generators, window)
    best, attained = -1, None
    for a in range(window + 1):
        zs = buckets.get(a, [])
        if not zs:
            continue
        ta = 0
        for i, g in enumerate(M.generators):
            if a < g or not contains(M, a - g):
                continue
            users = [z for z in zs if z[i] > 0]
            for z in zs:
                if z[i] == 0:
                    ta = max(ta, min(distance(z, zp) for zp in users))
        if ta > best:
            best, attained = ta, a
    rep = tame_degree_windowed(M, window=window)
    assert (rep.value, rep.attained_at) == (best, attained)


def test_deadline_is_enforced():
    past = time.monotonic() - 1.0
    with pytest.raises(BudgetExceeded):
        catenary_of_monoid(NumericalMonoid((401, 407, 410, 421)), deadline=past)
    with pytest.raises(BudgetExceeded):
        delta_set(M, window=200, deadline=past)
    with pytest.raises(BudgetExceeded):
        tame_degree_windowed(M, window=200, deadline=past)
