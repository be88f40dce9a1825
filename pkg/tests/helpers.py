"""Shared test utilities: random generators and slow independent oracles."""

import numpy as np

from rqgames import state_from_amplitudes


def random_state(rng, dims=(2, 2)):
    amps = rng.normal(size=dims) + 1j * rng.normal(size=dims)
    return state_from_amplitudes(amps, normalize=True)


def random_product_state(rng, dims=(2, 2)):
    left = rng.normal(size=dims[0]) + 1j * rng.normal(size=dims[0])
    right = rng.normal(size=dims[1]) + 1j * rng.normal(size=dims[1])
    return state_from_amplitudes(np.outer(left, right), normalize=True)


def balanced_triple(rng):
    # a + c = 2b holds exactly in integers, so the 2x2 builder stays quiet
    b = int(rng.integers(2, 60))
    spread = int(rng.integers(1, b))
    return float(b + spread), float(b), float(b - spread)


def random_bimatrix(rng, max_side=4):
    m = int(rng.integers(2, max_side + 1))
    n = int(rng.integers(2, max_side + 1))
    return rng.uniform(0.0, 100.0, (m, n)), rng.uniform(0.0, 100.0, (m, n))


def enumerate_induced(state, payoffs, moves_p, moves_r):
    """Induced-game oracle: plain-Python enumeration of every outcome."""
    dp, dr = state.dims
    probs = [[abs(state.amps[k, l]) ** 2 for l in range(dr)] for k in range(dp)]
    m, n = len(moves_p), len(moves_r)
    proposer = np.zeros((m, n))
    responder = np.zeros((m, n))
    for i in range(m):
        for j in range(n):
            for k in range(dp):
                for l in range(dr):
                    kk = moves_p.apply(i, k)
                    ll = moves_r.apply(j, l)
                    proposer[i, j] += probs[k][l] * payoffs.proposer[kk, ll]
                    responder[i, j] += probs[k][l] * payoffs.responder[kk, ll]
    return proposer, responder


def ultimatum_entries_2x2(probs, a, b, c):
    """Frozen entry formulas for the induced 2x2 ultimatum game."""
    p = probs
    proposer = np.array(
        [
            [a * p[1][1] + b * p[0][1], a * p[1][0] + b * p[0][0]],
            [b * p[1][1] + a * p[0][1], b * p[1][0] + a * p[0][0]],
        ]
    )
    responder = np.array(
        [
            [c * p[1][1] + b * p[0][1], c * p[1][0] + b * p[0][0]],
            [b * p[1][1] + c * p[0][1], b * p[1][0] + c * p[0][0]],
        ]
    )
    return proposer, responder
