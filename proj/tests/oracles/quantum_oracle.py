# Copyright 2026 The opdiscord Authors
# SPDX-License-Identifier: Apache-2.0
"""Independent oracle for qubit discord values.

Inner problem: exact trace-norm SDP over block-diagonal candidates (cvxpy).
Outer problem: dense (theta, phi) grid over measurement directions followed by
Nelder-Mead polish. Entropic discord uses a dense grid over directions.
"""
import json
import sys
import warnings

import cvxpy as cp
import numpy as np
from scipy.optimize import minimize

warnings.filterwarnings("ignore")


def ket(v):
    v = np.array(v, dtype=complex)
    return v / np.linalg.norm(v)


def proj(v):
    v = ket(v)
    return np.outer(v, v.conj())


def basis(th, ph):
    return [np.array([np.cos(th / 2), np.exp(1j * ph) * np.sin(th / 2)]),
            np.array([-np.exp(-1j * ph) * np.sin(th / 2), np.cos(th / 2)])]


def inner_sdp(rho, b, db=2):
    s = [cp.Variable((db, db), hermitian=True) for _ in b]
    sig = sum(cp.kron(np.outer(x, x.conj()), s[k]) for k, x in enumerate(b))
    n = rho.shape[0]
    p = cp.Variable((n, n), hermitian=True)
    q = cp.Variable((n, n), hermitian=True)
    cons = [p >> 0, q >> 0, rho - sig == p - q] + [x >> 0 for x in s] + [sum(cp.real(cp.trace(x)) for x in s) == 1]
    prob = cp.Problem(cp.Minimize(cp.real(cp.trace(p))), cons)
    prob.solve(solver="CLARABEL")
    return prob.value


def discord(rho, coarse=9):
    best, arg = 9.0, None
    for th in np.linspace(0, np.pi, coarse):
        for ph in np.linspace(0, 2 * np.pi, 2 * coarse - 2, endpoint=False):
            v = inner_sdp(rho, basis(th, ph))
            if v < best:
                best, arg = v, (th, ph)
    res = minimize(lambda x: inner_sdp(rho, basis(*x)), arg, method="Nelder-Mead",
                   options=dict(xatol=1e-5, fatol=1e-8, maxiter=200))
    return min(best, res.fun)


def entropy(m):
    w = np.linalg.eigvalsh(m)
    w = w[w > 1e-12]
    return float(-(w * np.log2(w)).sum())


def ptrace_a(m):
    return np.trace(m.reshape(2, 2, 2, 2), axis1=0, axis2=2)


def ptrace_b(m):
    return np.trace(m.reshape(2, 2, 2, 2), axis1=1, axis2=3)


def entropic(rho, n=120):
    s_b = entropy(ptrace_a(rho))
    mi = entropy(ptrace_b(rho)) + s_b - entropy(rho)
    best_j = -9.0
    for th in np.linspace(0, np.pi, n):
        for ph in np.linspace(0, 2 * np.pi, n, endpoint=False):
            j = s_b
            for x in basis(th, ph):
                c = np.kron(x.conj()[None, :], np.eye(2)) @ rho @ np.kron(x[:, None], np.eye(2))
                p = np.trace(c).real
                if p > 1e-15:
                    j -= p * entropy(c / p)
            best_j = max(best_j, j)
    return mi, best_j, mi - best_j


def swap(m):
    return m.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)


def main():
    bell = proj([1, 0, 0, 1])
    wit = 0.5 * (np.kron(proj([1, 0]), proj([1, 0])) + np.kron(proj([1, 1]), proj([0, 1])))
    werner = 0.5 * bell + 0.5 * np.eye(4) / 4
    out = {
        "bell_discord": discord(bell),
        "witness_discord": discord(wit),
        "witness_swapped_discord": discord(swap(wit)),
        "bell_entropic": entropic(bell),
        "werner_0.5_entropic": entropic(werner),
        "witness_entropic": entropic(wit),
    }
    json.dump(out, sys.stdout, indent=2)
    print()


if __name__ == "__main__":
    main()
