import io
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbert_resources import counts
from hilbert_resources.counts import Kind
from hilbert_resources.errors import InvalidArgument, InvalidSpec, UnreachableTarget
from hilbert_resources.solver import (
    SEARCH_CAP,
    action_per_dof,
    min_modes,
    min_particles,
    phase_space_volume,
    solve_point,
    sweep,
    total_action,
    write_csv,
)


def minimal(req):
    assert req.is_minimal(), req
    assert req.achieved_log2 >= req.target_qubits - 1e-12
    return req.solved_value


def test_action_per_dof_examples():
    assert action_per_dof(100, 100) == pytest.approx(2.0)
    assert action_per_dof(8, 4) == pytest.approx(4.0)
    assert action_per_dof(10, 3) == pytest.approx(10.079, abs=1e-3)
    with pytest.raises(InvalidArgument):
        action_per_dof(10, 0)


@pytest.mark.parametrize("N, T", [(10, 3), (100, 7), (64, 64), (33.5, 4), (1, 1)])
def test_action_per_dof_reproduces_dimension(N, T):
    assert action_per_dof(N, T) ** T == pytest.approx(2.0**N, rel=1e-9)


def test_total_action_examples():
    assert total_action(100, 100) == pytest.approx(200.0)
    assert total_action(10, 1) == pytest.approx(1024.0)
    values = {T: total_action(10, T) for T in range(1, 101)}
    best = min(values, key=values.get)
    assert best == 7
    assert values[7] == pytest.approx(7 * 2 ** (10 / 7), rel=1e-12)
    assert values[7] == pytest.approx(18.86, abs=0.05)


@pytest.mark.parametrize("N", [10, 20])
def test_total_action_unimodal(N):
    values = [total_action(N, T) for T in range(1, N + 1)]
    peak = values.index(min(values))
    assert all(a > b for a, b in zip(values[:peak], values[1 : peak + 1]))
    assert all(a < b for a, b in zip(values[peak:], values[peak + 1 :]))


def test_phase_space_volume():
    assert phase_space_volume([2, 2, 2]).value == pytest.approx(8)
    assert phase_space_volume([8]).value == pytest.approx(8)
    assert phase_space_volume([]).value == 1


def test_min_modes_examples():
    assert minimal(min_modes(Kind.BOSE_FIXED, 1, 4)) == 16
    assert minimal(min_modes(Kind.BOSE_FIXED, 2, 4)) == 6
    assert minimal(min_modes(Kind.FERMI, 0, 0)) == 1


def test_min_particles_examples():
    assert minimal(min_particles(Kind.BOSE_VARIABLE, 4, M=1)) == 15
    with pytest.raises(UnreachableTarget):
        min_particles(Kind.FERMI, 3, M=4)
    req = min_particles(Kind.DISTINGUISHABLE, 3, K=3, D=2)
    assert minimal(req) == 2
    assert counts.distinguishable_dimension(3, 2, 2).value == 12


@pytest.mark.parametrize("N", range(0, 61))
def test_single_particle_and_single_mode_exact(N):
    assert minimal(min_modes(Kind.BOSE_FIXED, 1, N)) == 2**N
    assert minimal(min_particles(Kind.BOSE_VARIABLE, N, M=1)) == 2**N - 1


def test_real_valued_targets():
    # 2^3.5 = 11.31: a single boson needs 12 modes
    assert minimal(min_modes(Kind.BOSE_FIXED, 1, 3.5)) == 12
    # 2^7.25 = 152.2 lies between C(10,3) = 120 and C(11,3) = 165
    assert minimal(min_modes(Kind.FERMI, 3, 7.25)) == 11


def test_large_targets_use_log_space():
    req = min_modes(Kind.BOSE_FIXED, 1000, 2000)
    minimal(req)
    req = min_particles(Kind.FERMI, 900, M=1000)
    minimal(req)
    assert req.solved_value <= 500


def test_cap_makes_target_unreachable():
    with pytest.raises(UnreachableTarget):
        min_modes(Kind.BOSE_FIXED, 1, 1000)
    with pytest.raises(UnreachableTarget):
        min_modes(Kind.BOSE_FIXED, 0, 5)
    with pytest.raises(UnreachableTarget):
        min_particles(Kind.BOSE_FIXED, 5, M=1)
    with pytest.raises(UnreachableTarget):
        min_particles(Kind.DISTINGUISHABLE, 10, K=3, D=2)
    assert SEARCH_CAP == 2**128


def test_invalid_solver_input():
    with pytest.raises(InvalidArgument):
        min_modes(Kind.BOSE_FIXED, 2, -1)
    with pytest.raises(InvalidSpec):
        min_modes(Kind.DISTINGUISHABLE, 2, 4)
    with pytest.raises(InvalidSpec):
        min_particles(Kind.FERMI, 4)
    with pytest.raises(InvalidSpec):
        min_modes(Kind.DEGREES_OF_FREEDOM, 2, 4)


@settings(max_examples=80, deadline=None)
@given(
    kind=st.sampled_from([Kind.BOSE_FIXED, Kind.BOSE_VARIABLE, Kind.FERMI]),
    L=st.integers(1, 40),
    N=st.floats(0, 80, allow_nan=False),
)
def test_min_modes_minimal_property(kind, L, N):
    minimal(min_modes(kind, L, N))


@settings(max_examples=80, deadline=None)
@given(
    kind=st.sampled_from([Kind.BOSE_FIXED, Kind.BOSE_VARIABLE, Kind.FERMI, Kind.DISTINGUISHABLE]),
    size=st.integers(2, 60),
    N=st.floats(0, 50, allow_nan=False),
)
def test_min_particles_minimal_property(kind, size, N):
    try:
        if kind is Kind.DISTINGUISHABLE:
            req = min_particles(kind, N, K=size, D=3)
        else:
            req = min_particles(kind, N, M=size)
    except UnreachableTarget:
        return
    minimal(req)


def test_sweep_examples():
    rows = sweep(Kind.BOSE_FIXED, "L", lambda N: 1, [2, 4, 6])
    assert [r.solved_value for r in rows] == [4, 16, 64]
    rows = sweep(Kind.DEGREES_OF_FREEDOM, "T", lambda N: N, [2, 4, 6])
    assert all(r.solved_value == pytest.approx(2.0) for r in rows)
    rows = sweep("bose", "L", lambda N: N, [8, 16, 32, 64, 128])
    ratios = [r.solved_value / r.fixed["L"] for r in rows]
    # the filling ratio is measured, not assumed; it settles into a narrow band
    assert all(0.25 < x < 0.7 for x in ratios)
    assert abs(ratios[-1] - ratios[-2]) < abs(ratios[1] - ratios[0])


def test_sweep_flags_failures_and_keeps_rows():
    rows = sweep(Kind.FERMI, "M", lambda N: 4, [1, 2, 3, 4])
    assert [r.ok for r in rows] == [True, True, False, False]
    assert rows[2].status.startswith("unreachable-target")
    buf = io.StringIO()
    write_csv(rows, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "n,M,L,log2dim,status"
    assert len(lines) == 1 + 4


def test_sweep_rejects_bad_input():
    with pytest.raises(InvalidArgument):
        sweep(Kind.BOSE_FIXED, "L", lambda N: 1, [4, 2])
    with pytest.raises(InvalidSpec):
        sweep(Kind.FERMI, "K", lambda N: 1, [4])


def test_solve_point_dispatch():
    assert solve_point(Kind.DEGREES_OF_FREEDOM, "T", 4, 8) == pytest.approx(4.0)
    assert minimal(solve_point(Kind.DISTINGUISHABLE, "L", 3, 3, D=2)) == 3
    assert minimal(solve_point(Kind.FERMI, "M", 10, 5)) == 2
    assert math.comb(10, 2) >= 32
