import pytest

import hopfkit


def test_gen_and_validate():
    s3 = hopfkit.gen("S3", 7)
    assert s3["dim"] == 6
    assert s3["ring"] == {"p": 7, "n": 1, "m": 1, "modulus": [0, 1]}
    report = hopfkit.validate(s3)
    assert report["verified"]
    assert len(report["checks"]) == 10


def test_analyze():
    c3 = hopfkit.analyze(hopfkit.gen("C3", 3))
    assert not c3["semisimple"]
    assert c3["cosemisimple"]
    s3 = hopfkit.analyze(hopfkit.gen("S3", 7))
    assert s3["trace_s2"] == [6]
    assert s3["antipode_order"] == 2


def test_dual_round_trip():
    c2 = hopfkit.gen("C2", 5)
    assert hopfkit.dual(hopfkit.dual(c2)) == c2


def test_double_and_cohomology():
    d = hopfkit.double(hopfkit.gen("C2", 5))
    assert d["hopf"]["dim"] == 4
    assert len(d["R"]) == 4
    assert hopfkit.cohomology(hopfkit.gen("C2", 5)) == [0, 0, 0]
    assert hopfkit.cohomology(hopfkit.gen("C2", 5), [1], invariants=True) == [0]


def test_lift_pipeline():
    c2 = hopfkit.gen("C2", 5)
    a = hopfkit.lift(c2, 3)
    b = hopfkit.lift(c2, 3, "perturbed:4")
    assert a["precision"] == 3
    assert a["current"]["ring"]["n"] == 3
    assert hopfkit.validate(b["current"])["verified"]
    eta = hopfkit.reconcile(a, a)
    assert eta["coeffs"] == [[1], [0], [0], [1]]
    ident = {"source": c2, "target": c2, "map": {"in": 1, "out": 1, "coeffs": [[1], [0], [0], [1]]}}
    lifted = hopfkit.lift_morphism(ident, a, b)
    assert lifted["target"]["ring"]["n"] == 3


def test_rmatrix_lift():
    c2 = hopfkit.gen("C2", 5)
    r1 = [[[3], [3]], [[3], [2]]]
    state = hopfkit.lift(c2, 2)
    assert hopfkit.lift_rmatrix(c2, r1, state) == [[[13], [13]], [[13], [12]]]


def test_arithmetic():
    assert hopfkit.cyclotomic(6) == [1, -1, 1]
    assert hopfkit.conjugate_product([2, 1, 1], 3) == 1
    rep = hopfkit.nonvanishing_verdict([2, 1, 1], 3, 7)
    assert rep["bound"] == 4 and rep["conclusion"]
    assert hopfkit.threshold(8) == 64
    assert hopfkit.threshold(30) == 30**4


def test_errors_carry_codes():
    with pytest.raises(hopfkit.HopfkitError) as info:
        hopfkit.threshold(2)
    assert info.value.code == "DimensionTooSmall"
    with pytest.raises(hopfkit.HopfkitError) as info:
        hopfkit.gen("C2", 6)
    assert info.value.code == "NotPrime"
    broken = hopfkit.gen("C2", 5)
    del broken["S"]
    with pytest.raises(hopfkit.HopfkitError) as info:
        hopfkit.validate(broken)
    assert info.value.code == "SchemaViolation"
    assert ".S" in str(info.value)


def test_acceptance_subset():
    assert hopfkit._hopfkit.acceptance_count() == 11
    [(cid, title, passed, detail, seconds)] = hopfkit.run_acceptance([11])
    assert cid == 11 and passed
