import pytest

from widthone.bench import BenchPlan, BenchRow, monotone_violations, run_bench, to_csv


def test_plan_validation():
    with pytest.raises(ValueError):
        BenchPlan("x", 3, (1,))
    with pytest.raises(ValueError):
        BenchPlan("d", 3, ())
    with pytest.raises(ValueError):
        BenchPlan("d", 3, (1,), repetitions=0)
    with pytest.raises(ValueError):
        BenchPlan("d", 3, (1,), methods=("oracle",))


def test_point_orientation():
    assert BenchPlan("d", 30, (5,)).point(5) == (30, 5)
    assert BenchPlan("n", 5, (100,)).point(100) == (100, 5)


def test_rows_and_csv():
    rows = run_bench(BenchPlan("n", 3, (2, 4), repetitions=2))
    assert [(r.sweep_value, r.method) for r in rows] == [
        (2, "rsk"), (2, "stanley"), (4, "rsk"), (4, "stanley")
    ]
    assert all(len(r.samples) == 2 and r.seconds > 0 for r in rows)
    assert to_csv(rows).splitlines()[0] == "sweep_value,method,seconds"


def test_monotone_violations():
    rows = [BenchRow(1, "rsk", 0.1), BenchRow(2, "rsk", 0.05), BenchRow(3, "rsk", 0.2)]
    assert monotone_violations(rows) == [("rsk", 1, 2)]


@pytest.mark.slow
def test_monotone_on_a_wide_sweep():
    # sizes an order of magnitude apart, so OS noise cannot reorder them
    rows = run_bench(BenchPlan("n", 5, (300, 3000, 30000), methods=("rsk",), repetitions=3))
    assert monotone_violations(rows) == []
