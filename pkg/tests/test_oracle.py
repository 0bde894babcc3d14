import numpy as np
import pytest

import bruteforce as bf
from maxplus_sylvester.instance_io import GeneratorConfig, generate_instance
from maxplus_sylvester.matrix import (
    TropicalMatrix,
    conjugate,
    max_plus_matadd,
    max_plus_matmul,
    min_plus_matadd,
    unvec,
    vec,
)
from maxplus_sylvester.opcount import semiring_ops
from maxplus_sylvester.oracle import (
    OracleSizeError,
    kron_reformulate,
    oracle_principal_solution,
    oracle_solve,
)
from maxplus_sylvester.semiring import NEG_INF
from maxplus_sylvester.solver import (
    SylvesterInstance,
    solve_sylvester,
    sylvester_apply,
    sylvester_principal_solution,
)

M = TropicalMatrix


def rand(rng, rows, cols, neg=0.0, pos=0.0):
    return M(bf.random_entries(rng, rows, cols, neg_density=neg, pos_density=pos))


def random_instance(rng, max_side=6, max_terms=4):
    cfg = GeneratorConfig(
        m=int(rng.integers(1, max_side + 1)),
        n=int(rng.integers(1, max_side + 1)),
        p=int(rng.integers(1, max_terms + 1)),
        seed=int(rng.integers(0, 2**63)),
        mode="raw_random",
    )
    return generate_instance(cfg)[0]


def test_kron_reformulate_scalar():
    inst = SylvesterInstance(A=(M([[2]]),), B=(M([[3]]),), C=M([[9]]))
    K, c = kron_reformulate(inst)
    assert K == M([[5]])
    assert c == M([[9]])


def test_kron_reformulate_unit_right_factor_is_block_diagonal():
    rng = np.random.default_rng(30)
    A = rand(rng, 2, 2)
    inst = SylvesterInstance(A=(A,), B=(M.max_plus_unit(3),), C=rand(rng, 2, 3))
    K, _ = kron_reformulate(inst)
    for r in range(3):
        for s in range(3):
            block = K.data[2 * r:2 * r + 2, 2 * s:2 * s + 2]
            if r == s:
                assert np.array_equal(block, A.data)
            else:
                assert (block == NEG_INF).all()


def test_kron_index_identity_via_indicator_matrices():
    # columns of K are vec(A ⊗ E_kl ⊗ B) where E_kl has a lone 0 entry,
    # which pins K[(j*m+i), (l*m+k)] = B[l][j] + A[i][k]
    rng = np.random.default_rng(31)
    m = n = 2
    A, B = rand(rng, m, m), rand(rng, n, n)
    inst = SylvesterInstance(A=(A,), B=(B,), C=rand(rng, m, n))
    K, _ = kron_reformulate(inst)
    a, b = A.tolist(), B.tolist()
    for k in range(m):
        for l in range(n):
            indicator = [[0.0 if (i, j) == (k, l) else NEG_INF for j in range(n)] for i in range(m)]
            column = bf.vec(bf.sylvester_apply([a], [b], indicator))
            for idx in range(m * n):
                assert K.data[idx, l * m + k] == column[idx][0]
    for i in range(m):
        for kk in range(m):
            for j in range(n):
                for l in range(n):
                    assert K.data[j * m + i, l * m + kk] == bf.mul_max(b[l][j], a[i][kk])


def test_oracle_principal_solution_examples():
    inst = SylvesterInstance(A=(M([[1]]), M([[0]])), B=(M([[0]]), M([[2]])), C=M([[5]]))
    K, _ = kron_reformulate(inst)
    assert K == M([[2]])
    assert oracle_principal_solution(inst) == M([[3]])

    rng = np.random.default_rng(32)
    C = rand(rng, 3, 2)
    units = SylvesterInstance(A=(M.max_plus_unit(3),), B=(M.max_plus_unit(2),), C=C)
    assert oracle_principal_solution(units) == C


def test_oracle_solve_examples():
    unsolvable = SylvesterInstance(A=(M([[0, 0], [0, 0]]),), B=(M([[0]]),), C=M([[0], [1]]))
    r = oracle_solve(unsolvable)
    assert not r.solvable and r.mismatches == ((1, 0),)

    rng = np.random.default_rng(33)
    for _ in range(30):
        cfg = GeneratorConfig(
            m=int(rng.integers(1, 5)), n=int(rng.integers(1, 5)), p=int(rng.integers(1, 4)),
            seed=int(rng.integers(0, 2**63)), mode="solvable_by_construction",
        )
        inst, _ = generate_instance(cfg)
        assert oracle_solve(inst).solvable


def test_size_cap():
    rng = np.random.default_rng(34)
    inst = SylvesterInstance(A=(rand(rng, 3, 3),), B=(rand(rng, 3, 3),), C=rand(rng, 3, 3))
    with pytest.raises(OracleSizeError):
        kron_reformulate(inst, size_cap=8)
    with pytest.raises(OracleSizeError):
        oracle_solve(inst, size_cap=8)
    assert oracle_solve(inst, size_cap=9).solvable in (True, False)
    assert oracle_solve(inst, size_cap=None) == oracle_solve(inst)


def test_vec_consistency():
    rng = np.random.default_rng(35)
    for _ in range(100):
        inst = random_instance(rng, max_side=5)
        X = rand(rng, inst.m, inst.n, neg=0.1)
        K, _ = kron_reformulate(inst)
        via_kron = unvec(max_plus_matmul(K, vec(X)), inst.m, inst.n)
        assert via_kron == sylvester_apply(inst.A, inst.B, X)


def test_conjugate_distributes_over_entrywise_max():
    rng = np.random.default_rng(36)
    for _ in range(100):
        m, n = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        P, Q = rand(rng, m, n, 0.2, 0.1), rand(rng, m, n, 0.2, 0.1)
        assert conjugate(max_plus_matadd(P, Q)) == min_plus_matadd(conjugate(P), conjugate(Q))


def test_fast_path_agrees_with_oracle():
    rng = np.random.default_rng(37)
    for _ in range(250):
        inst = random_instance(rng)
        fast = solve_sylvester(inst)
        slow = oracle_solve(inst)
        assert fast.principal == slow.principal
        assert fast.solvable == slow.solvable
        assert fast.mismatches == slow.mismatches
        assert sylvester_principal_solution(inst) == oracle_principal_solution(inst)


def test_oracle_op_count_is_exact():
    rng = np.random.default_rng(38)
    for _ in range(15):
        inst = random_instance(rng, max_side=5)
        before = semiring_ops.total
        oracle_solve(inst)
        used = semiring_ops.total - before
        cells = inst.m * inst.n
        assert used == 2 * (inst.p + 1) * cells * cells
