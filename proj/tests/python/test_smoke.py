"""Smoke tests for the python bindings."""

import json
import math

import numpy as np
import pytest

import nlgs


def test_kernel_basics():
    k = nlgs.Kernel.exponential(2.0)
    assert k.density(0.0) == pytest.approx(1.0)
    assert k.density(1.3) == k.density(-1.3)
    assert k.tail_mass(1.0) == pytest.approx(math.exp(-2.0))

    a = nlgs.Kernel.algebraic(1.0)
    assert a.density(0.0) == pytest.approx(2.0 / math.pi)
    assert a.f1(0.0) == 0.0
    with pytest.raises(nlgs.ConfigError):
        nlgs.Kernel.exponential(-1.0)


def test_weights_are_symmetric():
    grid = nlgs.Grid.from_half_width(1.0, 32)
    ws = nlgs.compute_weights(nlgs.Kernel.exponential(3.0), grid)
    assert ws.at(0) == 0.0
    for j in range(1, 33):
        assert ws.at(j) == ws.at(-j)


def test_operator_annihilates_constants():
    grid = nlgs.Grid.from_half_width(1.0, 64)
    op = nlgs.assemble(
        nlgs.Kernel.exponential(4.0),
        grid,
        nlgs.BoundaryConstraint("dirichlet", value=1.0),
    )
    out = op.apply(np.ones(grid.node_count))
    assert np.max(np.abs(out)) <= 1e-12


def test_neumann_extension_constant():
    grid = nlgs.Grid.from_half_width(2.0, 64)
    op = nlgs.assemble(
        nlgs.Kernel.exponential(3.0),
        grid,
        nlgs.BoundaryConstraint("neumann", q=2.0, u_ref=0.5, ell=1.0),
    )
    ext = nlgs.NeumannExtension(op)
    full = ext.extend(np.full(ext.inner_count, 0.5))
    assert np.max(np.abs(full - 0.5)) <= 1e-12


def test_symbol_values():
    ke = nlgs.Kernel.exponential(2.0)
    assert nlgs.symbol(ke, 0.0) == 0.0
    assert nlgs.symbol(ke, 2.0) == pytest.approx(-0.5)


def test_observed_order():
    assert nlgs.observed_order(4.0, 1.0, 0.2, 0.1) == pytest.approx(2.0)
    assert nlgs.observed_order(0.0, 1.0, 0.2, 0.1) is None


def test_pulse_initial_conditions():
    grid = nlgs.Grid.from_half_width(18.75, 256)
    state = nlgs.pulse_initial_conditions(grid, alpha=0.1, beta=3.0)
    assert state.u[0] == pytest.approx(1.0)
    assert state.u[128] == pytest.approx(-1.6729132786895989)
    assert state.v[128] == pytest.approx(3.6623111959654073)


def test_small_simulation_runs(tmp_path):
    config = json.loads(nlgs.preset_json("pulse-exp-free", desk=True))
    config["grid"]["M"] = 128
    config["stepper"]["nmax"] = 50
    result = nlgs.simulate_json(json.dumps(config), str(tmp_path / "run"))
    assert result["steps"] == 50
    assert np.all(np.isfinite(result["u"]))
    assert np.all(np.isfinite(result["v"]))
    assert (tmp_path / "run" / "profile.csv").exists()
    assert (tmp_path / "run" / "history.csv").exists()


def test_presets_round_trip():
    names = nlgs.preset_names()
    assert "table1-mms" in names
    assert "pulse-exp-free" in names
    for name in names:
        doc = json.loads(nlgs.preset_json(name))
        assert "experiment" in doc
