import schubert


def test_polynomials():
    assert schubert.double_schubert("21") == "x1 - y1"
    assert schubert.single_schubert("321") == "x1^2*x2"
    assert schubert.evaluate("321", 1, -1) == "8"


def test_labelings():
    assert schubert.bsl_count("4321") == 64
    assert len(schubert.enumerate_bsl("321")) == 8


def test_complex():
    assert schubert.complex_ranks("2413") == [2, 6, 6, 2]
    assert schubert.dd_zero("1423")
    eye = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert schubert.homology("2413", eye) == [0, 0, 0, 0]
    assert schubert.homology("1423", [[0] * 4 for _ in range(4)], mod_p=True) == [3, 6, 3]


def test_ideal():
    assert len(schubert.ideal_generators("2413")) == 5
    point = [[0, 0, 5, 1], [2, 3, -1, 7], [4, 6, 2, "1/2"], [1, -3, 8, 9]]
    assert schubert.locus_membership("2413", point)


def test_verify():
    report = schubert.verify("paper-examples", seed=3)
    assert report["passed"]
