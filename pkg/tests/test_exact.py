import json
import random

import pytest

from pslab import BudgetError
from pslab.exact import CountTable, count_table, parse_m, pentagonal_oracle


def test_parse_m():
    assert parse_m("inf") == float("inf")
    assert parse_m(None) == float("inf")
    assert parse_m("3") == 3
    with pytest.raises(ValueError):
        parse_m(0)
    with pytest.raises(ValueError):
        parse_m(1.5)


def test_examples():
    assert count_table(1, "inf", 4)[4] == 5
    assert count_table(2, "inf", 4)[4] == 2
    assert count_table(1, 1, 5)[5] == 3


def test_square_root_parts_n3(brute):
    # values 1, 2, 3 come from 3, 5 and 7 indices: 10 + 15 + 7 multisets
    t = count_table("1/2", "inf", 3)
    assert t[3] == brute("1/2", "inf", 3)[3] == 32


def test_pentagonal_examples():
    p = pentagonal_oracle(100)
    assert p[5] == 7
    assert p[100] == 190569292
    assert pentagonal_oracle(5, distinct=True)[5] == 3


@pytest.mark.parametrize("m, distinct", [("inf", False), (1, True)])
def test_kappa_one_matches_pentagonal(m, distinct):
    for method in ("groups", "euler"):
        assert list(count_table(1, m, 500, method=method).counts) == pentagonal_oracle(500, distinct)


@pytest.mark.parametrize("kappa", ["1/2", "3/2", "2"])
@pytest.mark.parametrize("m", [1, 2, "inf"])
def test_brute_force_small(kappa, m, brute):
    expected = brute(kappa, m, 12)
    for method in ("groups", "euler"):
        assert list(count_table(kappa, m, 12, method=method).counts) == expected


@pytest.mark.parametrize("kappa", ["1/2", "1/3", "3/2", "2", "2/3"])
@pytest.mark.parametrize("m", [1, 3, "inf"])
def test_methods_agree(kappa, m):
    a = count_table(kappa, m, 300, method="groups").counts
    b = count_table(kappa, m, 300, method="euler").counts
    assert a == b


@pytest.mark.parametrize("kappa", ["1/2", "2"])
def test_monotone_in_m(kappa):
    t1 = count_table(kappa, 1, 100).counts
    t2 = count_table(kappa, 2, 100).counts
    ti = count_table(kappa, "inf", 100).counts
    assert all(a <= b <= c for a, b, c in zip(t1, t2, ti))
    assert t1[0] == t2[0] == ti[0] == 1


def test_group_order_does_not_matter():
    base = count_table("1/2", 2, 200, method="groups").counts
    from pslab.sequence import part_groups
    values, _ = part_groups(200, "1/2")
    order = list(range(len(values)))
    random.Random(7).shuffle(order)
    assert count_table("1/2", 2, 200, method="groups", order=order).counts == base


def test_budget_guard():
    with pytest.raises(BudgetError):
        count_table("1/10", "inf", 10 ** 4)


def test_n_zero_and_negative():
    assert count_table(1, "inf", 0).counts == (1,)
    with pytest.raises(ValueError):
        count_table(1, "inf", -1)


def test_csv_and_json_roundtrip():
    t = count_table("1/2", "inf", 100)
    lines = t.to_csv().splitlines()
    assert lines[0] == "n,count"
    assert lines[101] == f"100,{t[100]}"
    assert t[100] > 2 ** 64  # exceeds 64 bits, serialised as a decimal string
    data = json.loads(t.to_json())
    assert data["counts"][100] == str(t[100])
    assert CountTable.from_json(t.to_json()) == t


def test_large_table_runtime():
    t = count_table("1/2", "inf", 2000)
    assert t[2000] > 0
