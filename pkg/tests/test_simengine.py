import numpy as np
import pytest

from eonsim import CostSpec, Demand, Metric, SimulationError, TrafficConfig, generate_trace, run, run_sweep
from eonsim.topology import _build


def two_node_topology(length=100.0):
    return _build("pair", 2, [(0, 0, 1, length)])


def demand(id, arrival, hold, bitrate=50, src=0, dst=1):
    return Demand(
        id=id, arrival_time=arrival, source=src, destination=dst,
        bitrate_gbps=bitrate, holding_time=hold,
    )


TRAFFIC = TrafficConfig(lam=10.0, mu=1.0, num_demands=2, seed=0)


def test_single_demand_served_and_cleaned_up():
    topo = two_node_topology()
    trace = [demand(0, arrival=0.5, hold=2.0)]
    traffic = TrafficConfig(lam=10.0, mu=1.0, num_demands=1, seed=0)
    result, log = run(topo, CostSpec(metric=Metric.LL), trace, traffic)
    assert result.blocking_probability == 0.0
    assert result.served == 1
    assert result.num_demands == 1
    assert log[0][1] == "served"


def test_second_overlapping_demand_spectrum_blocks():
    # 2-slot grid: each 50 Gb/s demand needs 1 data + 1 guard = the whole grid
    topo = two_node_topology()
    trace = [demand(0, arrival=1.0, hold=10.0), demand(1, arrival=2.0, hold=10.0)]
    result, log = run(topo, CostSpec(metric=Metric.LL), trace, TRAFFIC, total_slots=2)
    assert result.blocking_probability == 0.5
    assert result.blocked_spectrum == 1
    assert result.blocked_distance == 0
    assert [row[1] for row in log] == ["served", "blocked"]


def test_departure_frees_capacity_for_later_arrival():
    topo = two_node_topology()
    trace = [demand(0, arrival=1.0, hold=1.0), demand(1, arrival=2.5, hold=1.0)]
    result, _ = run(topo, CostSpec(metric=Metric.LL), trace, TRAFFIC, total_slots=2)
    assert result.blocking_probability == 0.0


def test_departure_processed_before_simultaneous_arrival():
    # second demand arrives exactly when the first departs; freed-first rule admits it
    topo = two_node_topology()
    trace = [demand(0, arrival=1.0, hold=1.0), demand(1, arrival=2.0, hold=1.0)]
    result, _ = run(topo, CostSpec(metric=Metric.LL), trace, TRAFFIC, total_slots=2)
    assert result.blocking_probability == 0.0


def test_transceiver_accounting_counts_data_slots():
    topo = two_node_topology()  # 100 km -> 16QAM at 50 Gb/s per slot
    trace = [demand(0, arrival=0.1, hold=1.0, bitrate=50),  # 1 data slot
             demand(1, arrival=5.0, hold=1.0, bitrate=26)]  # 26/50 -> 1 data slot
    result, _ = run(topo, CostSpec(metric=Metric.LL), trace, TRAFFIC)
    assert result.transceivers_total == 2
    assert result.transceivers_per_served == 1.0


def test_run_is_deterministic(nsfnet):
    traffic = TrafficConfig(lam=10.0, mu=10.0 / 300, num_demands=400, seed=5)
    trace = generate_trace(traffic, nsfnet)
    spec = CostSpec(metric=Metric.LLU)
    first = run(nsfnet, spec, trace, traffic)
    second = run(nsfnet, spec, trace, traffic)
    assert first == second


def test_trace_not_mutated_by_run(nsfnet):
    traffic = TrafficConfig(lam=10.0, mu=10.0 / 250, num_demands=200, seed=9)
    trace = generate_trace(traffic, nsfnet)
    snapshot = list(trace)
    run(nsfnet, CostSpec(metric=Metric.LLP), trace, traffic)
    assert trace == snapshot


@pytest.mark.parametrize("metric", list(Metric))
def test_audit_mode_passes_on_real_runs(nsfnet, metric):
    traffic = TrafficConfig(lam=10.0, mu=10.0 / 300, num_demands=300, seed=3)
    trace = generate_trace(traffic, nsfnet)
    result, _ = run(nsfnet, CostSpec(metric=metric), trace, traffic, audit=True)
    assert result.served + result.blocked_total == result.num_demands


def test_conservation_and_result_invariants(usbackbone):
    traffic = TrafficConfig(lam=10.0, mu=10.0 / 400, num_demands=600, seed=11)
    trace = generate_trace(traffic, usbackbone)
    result, log = run(usbackbone, CostSpec(metric=Metric.LLU), trace, traffic)
    assert result.served + result.blocked_total == result.num_demands == 600
    assert result.blocked_total == result.blocked_distance + result.blocked_spectrum
    assert result.blocking_probability == result.blocked_total / 600
    assert len(log) == 600


def test_warmup_excludes_early_demands_from_counters():
    topo = two_node_topology()
    trace = [demand(0, arrival=1.0, hold=10.0), demand(1, arrival=2.0, hold=10.0),
             demand(2, arrival=3.0, hold=10.0)]
    traffic = TrafficConfig(lam=10.0, mu=1.0, num_demands=3, seed=0)
    result, log = run(topo, CostSpec(metric=Metric.LL), trace, traffic,
                      total_slots=2, warmup_demands=1)
    # demand 0 fills the grid but is not counted; 1 and 2 both block
    assert result.num_demands == 2
    assert result.blocked_spectrum == 2
    assert result.served == 0
    assert len(log) == 3  # the log still covers every demand


def test_empty_trace_rejected(nsfnet):
    with pytest.raises(ValueError):
        run(nsfnet, CostSpec(metric=Metric.LL), [], TRAFFIC)


def test_negative_event_time_is_internal_error():
    topo = two_node_topology()
    trace = [demand(0, arrival=-1.0, hold=1.0)]
    with pytest.raises(SimulationError):
        run(topo, CostSpec(metric=Metric.LL), trace, TRAFFIC)


class TestSweep:
    def test_cardinality(self, nsfnet):
        specs = [CostSpec(metric=m) for m in (Metric.LL, Metric.U, Metric.LLU, Metric.LLP)]
        loads = [(10.0, 10.0 / L) for L in (150, 250, 350, 450, 550)]
        results = run_sweep(nsfnet, specs, loads, [1, 2, 3], num_demands=60)
        assert len(results) == 4 * 5 * 3

    def test_sweep_deterministic_and_ordered(self, nsfnet):
        specs = [CostSpec(metric=Metric.LL), CostSpec(metric=Metric.LLU)]
        loads = [(10.0, 0.05), (10.0, 0.025)]
        a = run_sweep(nsfnet, specs, loads, [1, 2], num_demands=150)
        b = run_sweep(nsfnet, specs, loads, [1, 2], num_demands=150)
        assert a == b
        keys = [(r.metric, r.load_erlang, r.seed) for r in a]
        assert keys == [
            (s.metric.value, lam / mu, seed)
            for s in specs for lam, mu in loads for seed in (1, 2)
        ]

    def test_single_cell_sweep_equals_plain_run(self, nsfnet):
        spec = CostSpec(metric=Metric.LLP)
        traffic = TrafficConfig(lam=10.0, mu=0.04, num_demands=120, seed=77)
        trace = generate_trace(traffic, nsfnet)
        direct, _ = run(nsfnet, spec, trace, traffic)
        [swept] = run_sweep(nsfnet, [spec], [(10.0, 0.04)], [77], num_demands=120)
        assert swept == direct

    def test_parallel_matches_serial(self, nsfnet):
        specs = [CostSpec(metric=Metric.LL), CostSpec(metric=Metric.U)]
        loads = [(10.0, 0.05)]
        serial = run_sweep(nsfnet, specs, loads, [1, 2], num_demands=200, jobs=1)
        parallel = run_sweep(nsfnet, specs, loads, [1, 2], num_demands=200, jobs=2)
        assert serial == parallel

    def test_log_sink_receives_runs_in_order(self, nsfnet):
        seen = []
        specs = [CostSpec(metric=Metric.LL), CostSpec(metric=Metric.U)]
        run_sweep(
            nsfnet, specs, [(10.0, 0.05)], [4, 5], num_demands=50,
            log_sink=lambda r, log: seen.append((r.metric, r.seed, len(log))),
        )
        assert seen == [("LL", 4, 50), ("LL", 5, 50), ("U", 4, 50), ("U", 5, 50)]

    def test_empty_axis_rejected(self, nsfnet):
        with pytest.raises(ValueError):
            run_sweep(nsfnet, [], [(10.0, 1.0)], [1])
