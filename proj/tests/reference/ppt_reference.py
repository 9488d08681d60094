# Copyright 2026 The qinflate Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference values frozen into tests/test_opt.cpp.

Builds the AB cut witness with numpy einsum, solves the PPT relaxation with
cvxpy/SCS at tight tolerance, and minimises over product vectors with scipy.
Run: python3 tests/reference/ppt_reference.py
"""
import numpy as np
import cvxpy as cp
from scipy.optimize import minimize


def tri_bell(a):
    v = np.zeros(8, complex)
    v[4] = a
    v[1] = v[2] = np.sqrt((1 - a * a) / 2)
    return v


def ghz():
    v = np.zeros(8, complex)
    v[0] = v[7] = 1 / np.sqrt(2)
    return v


def witness_ab(psi):
    t = np.einsum("abc,def->abcdef", psi.reshape(2, 2, 2), psi.conj().reshape(2, 2, 2))
    ra = np.einsum("abcdbc->ad", t)
    rb = np.einsum("abcaec->be", t)
    rc = np.einsum("abcabf->cf", t)
    rac = np.einsum("abcdbf->acdf", t).reshape(4, 4)
    rbc = np.einsum("abcaef->bcef", t).reshape(4, 4)
    i2 = np.eye(2)
    w = np.eye(8) - np.kron(np.kron(ra, i2), i2) - np.kron(np.kron(i2, rb), i2) - np.kron(np.kron(i2, i2), rc)
    w = w + np.kron(np.kron(ra, rb), i2)
    w = w + np.einsum("acdf,be->abcdef", rac.reshape(2, 2, 2, 2), i2).reshape(8, 8)
    w = w + np.kron(i2, rbc)
    return (w + w.conj().T) / 2


def pt(x, k):
    t = x.reshape(2, 2, 2, 2, 2, 2)
    axes = [0, 1, 2, 3, 4, 5]
    axes[k], axes[k + 3] = axes[k + 3], axes[k]
    return t.transpose(axes).reshape(8, 8)


def ppt_min(w):
    rho = cp.Variable((8, 8), hermitian=True)
    cons = [rho >> 0, cp.real(cp.trace(rho)) == 1]
    for k in range(3):
        cons.append(cp.partial_transpose(rho, [2, 2, 2], k) >> 0)
    prob = cp.Problem(cp.Minimize(cp.real(cp.trace(w @ rho))), cons)
    prob.solve(solver=cp.SCS, eps=1e-9, max_iters=200000)
    return prob.value


def product_min(w, seed=1):
    rng = np.random.default_rng(seed)

    def vec(x):
        out = np.ones(1, complex)
        for k in range(3):
            th, ph = x[2 * k], x[2 * k + 1]
            out = np.kron(out, np.array([np.cos(th), np.exp(1j * ph) * np.sin(th)]))
        return out

    best = np.inf
    for _ in range(200):
        r = minimize(lambda x: np.real(vec(x).conj() @ w @ vec(x)), rng.uniform(0, 2 * np.pi, 6),
                     method="BFGS", options={"gtol": 1e-12})
        best = min(best, r.fun)
    return best


if __name__ == "__main__":
    for name, psi in [("ghz", ghz()), ("tri_bell 0.7", tri_bell(0.7)), ("tri_bell 0.9", tri_bell(0.9))]:
        w = witness_ab(psi)
        print(f"{name}: min_eig {np.linalg.eigvalsh(w)[0]:.10f} ppt {ppt_min(w):.10f} product {product_min(w):.10f}")
