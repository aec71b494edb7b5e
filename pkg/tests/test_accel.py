import json
import os
import subprocess
import sys

import numpy as np
import pytest

from specbounds import _accel, families, kernels
from specbounds.bounds import bound_report

SAMPLES = [families.petersen(), families.join_family(2), families.grid(3, 4), families.cycle(7)]


@pytest.mark.parametrize("g", SAMPLES, ids=["petersen", "H2", "grid3x4", "C7"])
def test_jit_and_python_kernels_agree(g):
    adj = g.masks
    for name, args in [
        ("bipartite_search", (adj, g.n)),
        ("densest_subset", (adj, g.n)),
        ("max_independent_set", (adj, g.n, 0)),
        ("k_coloring", (adj, g.n, 3)),
    ]:
        fn = getattr(kernels, name)
        fast, slow = fn(*args), fn.py_func(*args)
        if isinstance(fast, tuple):
            assert all(np.array_equal(np.asarray(a), np.asarray(b)) for a, b in zip(fast, slow)), name
        else:
            assert np.array_equal(np.asarray(fast), np.asarray(slow)), name
    a = g.adjacency_matrix().astype(float)
    w1 = kernels.jacobi_eigh(a.copy(), 1e-12, 100)[0]
    w2 = kernels.jacobi_eigh.py_func(a.copy(), 1e-12, 100)[0]
    assert np.allclose(np.sort(w1), np.sort(w2), atol=1e-12)


def test_pure_path_via_env_flag():
    code = (
        "import json; from specbounds import _accel, families;"
        "from specbounds.bounds import bound_report;"
        "g = families.petersen(); r = bound_report(g).to_json();"
        "print(json.dumps({'numba': _accel.USE_NUMBA, 'report': r}))"
    )
    env = dict(os.environ, SPECBOUNDS_DISABLE_NUMBA="1")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    out = json.loads(proc.stdout)
    assert out["numba"] is False
    here = bound_report(families.petersen()).to_json()
    assert out["report"]["eta_bound"] == here["eta_bound"]
    assert out["report"]["explicit_bound"] == here["explicit_bound"]
    assert out["report"]["lambda_min"] == pytest.approx(here["lambda_min"], abs=1e-12)


def test_flag_values():
    assert _accel.USE_NUMBA == (not _accel.DISABLED and _accel.numba is not None)
