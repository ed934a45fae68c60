import os
import subprocess
import sys

import numpy as np

from greyrank._kernels import (
    distance_grid,
    distance_grid_numpy,
    pairwise_deviation_sums,
    pairwise_deviation_sums_numpy,
    using_numba,
    warmup,
)

from oracles import brute_deviation_coefficients, random_generalized_matrix


def test_warmup_runs():
    warmup()


def test_pairwise_deviation_paths_agree():
    rng = np.random.default_rng(71)
    for n, m in [(1, 1), (2, 3), (7, 5), (300, 2)]:
        x = random_generalized_matrix(rng, n, m, scale=10.0)
        a = pairwise_deviation_sums(x)
        b = pairwise_deviation_sums_numpy(x)
        np.testing.assert_allclose(a, b, rtol=1e-10, atol=1e-10)


def test_pairwise_deviation_matches_brute_force():
    rng = np.random.default_rng(72)
    x = random_generalized_matrix(rng, 6, 4)
    np.testing.assert_allclose(
        pairwise_deviation_sums(x), brute_deviation_coefficients(x), rtol=1e-12
    )


def test_numpy_blocking_is_seamless():
    rng = np.random.default_rng(73)
    x = random_generalized_matrix(rng, 50, 3)
    small_blocks = pairwise_deviation_sums_numpy(x, block=7)
    one_block = pairwise_deviation_sums_numpy(x, block=1000)
    np.testing.assert_allclose(small_blocks, one_block, rtol=1e-12)


def test_distance_grid_paths_agree():
    rng = np.random.default_rng(74)
    y = random_generalized_matrix(rng, 8, 5)
    ref = y.max(axis=0)
    np.testing.assert_allclose(
        distance_grid(y, ref), distance_grid_numpy(y, ref), rtol=1e-12
    )


def test_env_flag_disables_numba():
    code = (
        "import greyrank._kernels as k; import numpy as np; "
        "assert not k.using_numba(); "
        "x = np.sort(np.random.default_rng(0).random((4, 3, 4)), axis=2); "
        "a = k.pairwise_deviation_sums(x); b = k.pairwise_deviation_sums_numpy(x); "
        "assert np.allclose(a, b); print('numpy-path-ok')"
    )
    env = dict(os.environ, GREYRANK_NO_NUMBA="1")
    proc = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    assert "numpy-path-ok" in proc.stdout


def test_flag_value_zero_keeps_numba_active():
    code = "import greyrank._kernels as k; print('active' if k.using_numba() else 'off')"
    env = dict(os.environ, GREYRANK_NO_NUMBA="0")
    proc = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    assert "active" in proc.stdout


def test_using_numba_reports_current_process():
    # in this test process the flag decides; either way both paths must agree
    assert isinstance(using_numba(), bool)
