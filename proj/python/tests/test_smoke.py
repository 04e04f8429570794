from fractions import Fraction

import pytest

import ronco


def test_lyndon_and_witt():
    assert ronco.lyndon_words(2, 4) == ["1112", "1122", "1222"]
    assert [ronco.witt_dim(2, n) for n in range(1, 7)] == [2, 1, 2, 3, 6, 9]
    assert ronco.graded_dim(2, 3) == 2


def test_leibniz_and_ronco_eval():
    assert ronco.leib_eval("[g1,[g2,g3]]", 3) == {"123": Fraction(1), "132": Fraction(-1)}
    assert ronco.leib_eval("[g1,[g2,g2]]", 2) == {}
    zero = ronco.ronco_eval("[[g1,g1],g2]", 2)
    assert zero == {"degree1": {}, "higher": {}}
    half = ronco.ronco_eval("1/2 * [[g1,g2],g1]", 2)
    assert half["higher"] == {("12", 1): Fraction(1, 2)}


def test_graded_kernels():
    assert [len(ronco.graded_kernel(2, n)) for n in range(2, 7)] == [3, 0, 1, 0, 3]


def test_algebra_round_trip_and_homology():
    trunc = ronco.truncate(2, 4)
    assert trunc["dim"] == 12
    assert ronco.verify(trunc, "ronco")["ok"]
    mu = ronco.convert(trunc, "mu")
    assert mu["kind"] == "mu"
    assert ronco.verify(mu, "mu")["ok"]
    assert ronco.convert(mu, "ronco") == trunc
    nil = ronco.free_nil2(3)
    assert ronco.homology(nil, "hr0")["dimension"] == 7
    assert ronco.homology(nil, "hl2")["dimension"] == ronco.homology(nil, "h1ad")["dimension"]


def test_errors():
    with pytest.raises(ronco.SyntaxError):
        ronco.leib_eval("[g1 g2]", 2)
    with pytest.raises(ronco.DegreeOverflow):
        ronco.leib_eval("[[[[[[[[g1,g2],g1],g1],g1],g1],g1],g1],g2]", 2)
    with pytest.raises(ronco.VerificationFailure):
        ronco.homology(ronco.truncate(1, 2), "hr0")


def test_cli_in_process():
    code, out, _ = ronco.run_cli(["witt", "--gens", "2", "--max", "4"])
    assert code == 0
    assert out == "1\t2\n2\t1\n3\t2\n4\t3\n"


def test_error_hierarchy():
    assert issubclass(ronco.SyntaxError, ronco.Error)
    assert issubclass(ronco.Error, ValueError)
