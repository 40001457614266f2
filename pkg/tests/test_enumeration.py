import pytest

from ocrank.enumeration import (
    Overpartition,
    Partition,
    anomalous_count,
    crank,
    crank_table_enum,
    overpartitions,
    partitions,
    pbar,
    residual_crank,
    residual_part,
)

from oracles import count_overpartitions


def op(*parts):
    """'2b' is an overlined 2."""
    return Overpartition(tuple((int(str(p).rstrip("b")), str(p).endswith("b")) for p in parts))


def test_partition_counts():
    assert [p.parts for p in partitions(0)] == [()]
    assert sum(1 for _ in partitions(4)) == 5
    assert sum(1 for _ in partitions(6)) == 11


def test_partitions_are_distinct_and_valid():
    seen = {p.parts for p in partitions(12)}
    assert len(seen) == 77
    assert all(sum(p) == 12 for p in seen)


def test_overpartitions_of_three():
    got = {lam.parts for lam in overpartitions(3)}
    want = {op(3), op("3b"), op(2, 1), op(2, "1b"), op("2b", 1), op("2b", "1b"),
            op(1, 1, 1), op("1b", 1, 1)}
    assert got == {w.parts for w in want}
    assert len(got) == 8


def test_overpartition_counts():
    assert sum(1 for _ in overpartitions(0)) == 1
    assert sum(1 for _ in overpartitions(5)) == 24
    assert pbar(3) == 8 and pbar(0) == 1 and pbar(6) == 40


@pytest.mark.parametrize("n", range(0, 14))
def test_overpartition_stream_has_no_duplicates(n):
    lams = [lam.parts for lam in overpartitions(n)]
    assert len(lams) == len(set(lams))
    assert all(Overpartition(p).size == n for p in lams)


def test_overpartition_validation():
    with pytest.raises(ValueError):
        Overpartition(((2, False), (2, True)))
    with pytest.raises(ValueError):
        Overpartition(((2, True), (2, True)))
    with pytest.raises(ValueError):
        Overpartition(((1, False), (2, False)))
    with pytest.raises(ValueError):
        Partition((1, 3))


def test_crank():
    assert crank(Partition((4, 1))) == 0
    assert crank(Partition((2,))) == 2
    assert crank(Partition((1,))) == -1
    assert crank(Partition((3, 2, 1))) == 1
    assert crank(Partition(())) == 0


def test_residual_part_and_crank():
    lam = op(4, "2b", 1)
    assert residual_part(lam, 1).parts == (4, 1)
    assert residual_part(lam, 2).parts == (2,)
    assert residual_part(op("3b"), 3).parts == ()
    assert residual_crank(lam, 1) == 0
    assert residual_crank(lam, 2) == 2
    assert residual_crank(op("1b", 1, 1), 1) == -2


@pytest.mark.parametrize("n", range(2, 16))
def test_ordinary_crank_symmetry(n):
    counts = {}
    for p in partitions(n):
        counts[crank(p)] = counts.get(crank(p), 0) + 1
    assert all(counts.get(-m, 0) == c for m, c in counts.items())


def test_crank_of_size_one_is_not_symmetric():
    assert [crank(p) for p in partitions(1)] == [-1]


@pytest.mark.parametrize("d", [1, 2, 3, 5])
def test_residual_crank_zero_without_divisible_parts(d):
    for n in range(10):
        for lam in overpartitions(n):
            if not any(v % d == 0 and not o for v, o in lam.parts):
                assert residual_crank(lam, d) == 0


def test_table_small_cases():
    t = crank_table_enum(1, 1, "product")
    assert (t.entry(-1, 1), t.entry(0, 1), t.entry(1, 1)) == (1, 0, 1)
    c = crank_table_enum(1, 1, "combinatorial")
    assert (c.entry(-1, 1), c.entry(0, 1), c.entry(1, 1)) == (1, 1, 0)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_enum_table_invariants(d):
    t = crank_table_enum(d, 14, "product")
    assert t.column_sums() == [count_overpartitions(n) for n in range(15)]
    assert t.is_symmetric()
    assert all(v >= 0 for n in range(15) for m, v in t.column(n).items() if m)


def test_anomalous_count():
    # overpartitions of 5 whose only plain part divisible by 2 is a single 2
    want = sum(1 for lam in overpartitions(5) if residual_part(lam, 2).parts == (1,))
    assert anomalous_count(2, 5) == want
    assert anomalous_count(3, 2) == 0


def test_cap():
    with pytest.raises(ValueError):
        crank_table_enum(1, 41)
    with pytest.raises(ValueError):
        pbar(50)
    with pytest.raises(ValueError):
        crank_table_enum(1, 3, "weird")
