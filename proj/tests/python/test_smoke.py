import pytest

import minvar

MINUS_I3 = [[[-1, 0, 0], [0, -1, 0], [0, 0, -1]]]
G1 = [[[-1, 0, 0], [0, 0, 1], [0, 1, 0]]]
S3 = [[[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1, 0, 0], [0, 0, 1], [0, 1, 0]]]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_snf():
    a = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    s, u, v = minvar.snf(a)
    assert matmul(matmul(u, a), v) == s
    assert [s[i][i] for i in range(3)] == [2, 6, 12]


def test_big_integers_pass_through():
    big = 10**30
    s, u, v = minvar.snf([[big, 0], [0, 1]])
    assert s[1][1] == big


def test_groups_and_cohomology():
    assert minvar.group_order(S3) == 6
    assert len(minvar.group_elements(G1)) == 2
    assert minvar.group_order([], n=3) == 1
    assert minvar.cohomology_dims(S3, 3, 6) == [1, 0, 0, 1, 1, 0, 0]
    assert minvar.mu_p(S3, 3) == (3, True)
    assert minvar.mu_p(S3, 5) == (None, True)
    assert minvar.mu_action(G1, 2) == (1, True)
    assert minvar.height_ir(G1) == 2


def test_classify():
    v = minvar.classify(MINUS_I3, 2, audit=True)
    assert (v["status"], v["rule"]) == ("NotCM", "R5")
    assert v["consistent"]
    for n in range(1, 6):
        gen = [[-1 if i == j else 0 for j in range(n)] for i in range(n)]
        assert minvar.classify([gen], 2)["status"] == ("CM" if n <= 2 else "NotCM")
    assert minvar.classify(G1, 3)["rule"] == "R1"


def test_invariants():
    assert minvar.invariant_dim_in_ball([[[-1]]], 2, 2) == (3, 3)
    d = minvar.check_g1_decomposition(2, 2)
    assert d["holds"] and d["dim_g1"] == d["dim_gamma"] + d["dim_theta"]


def test_reports():
    spec = minvar.builtin_jobspec("S3", 3)
    assert minvar.cohomology(spec, 6)["betti"] == [1, 0, 0, 1, 1, 0, 0]
    assert minvar.analyze(minvar.builtin_jobspec("G1"))["height_ir"] == 2
    assert minvar.invariants({"n": 1, "p": 2, "generators": [[[-1]]]}, 2)["dim"] == 3
    assert "inversion3" in minvar.builtin_names()


def test_errors():
    with pytest.raises(ValueError):
        minvar.classify([[[2, 0], [0, 1]]], 2)
    with pytest.raises(ValueError):
        minvar.classify(G1, 4)
    with pytest.raises(ValueError):
        minvar.run("classify", {"n": 2, "p": 2})
    with pytest.raises(minvar.BoundExceeded):
        minvar.group_order([[[1, 1], [0, 1]]], max_order=20)


def test_selftest():
    report = minvar.selftest()
    assert report["passed"]
    assert [c["id"] for c in report["criteria"]] == list(range(1, 10))
