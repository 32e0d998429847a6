"""Smoke test for the superplactic_py extension module.

Build and install first:
    pip install --no-build-isolation -e crates/python
"""

import json

import superplactic_py as sp


def main():
    assert sp.count_ssyt([2, 1], 1, 1) == 2
    tabs = sp.enumerate_ssyt([2, 1], 1, 1)
    assert [str(t) for t in tabs] == ["1,1/1'", "1,1'/1'"]
    assert tabs[0].shape == [2, 1]
    assert sp.Tableau("1,1/1'") == tabs[0]
    assert sp.conjugate([3, 1]) == [2, 1, 1]
    assert sp.in_hook([3, 3], 1, 3) and not sp.in_hook([2, 2, 2], 1, 1)

    assert sp.hook_schur([2, 1], 2, 2) == sp.hook_schur([2, 1], 2, 2, route="factorized")
    assert sp.hook_identity_holds(1, 1, 6)
    assert sp.schur_identity_holds(2, 5)

    sign, tab = sp.normal_form("2',1',2'")
    assert sign == 1 and tab.reading_word() == "2',1',2'"
    assert ("1',2',2'", -1) in sp.knuth_neighbors("2',1',2'")
    assert json.loads(sp.verify_class_bijection(1, 1, 4))["pass"]

    assert sp.hilbert_series(1, 1, 5) == [1, 2, 4, 6, 8, 10]
    assert [sp.quotient_dim(1, 1, r) for r in range(5)] == [1, 2, 4, 6, 8]
    assert sp.quotient_dim(2, 1, 3, q="7/3") == 3**3 - sp.count_ssyt([2, 1], 2, 1)

    e = sp.HeckeElement.eulerian_idempotent_q()
    assert e * e == e
    assert sp.HeckeElement.omega() * e == e
    assert dict((tuple(w), c) for w, c in e.specialize("1"))[(1, 2, 3)] == "1/3"

    assert len(sp.gamma_elements(2, 2)) == 20
    image = json.loads(sp.idempotent_image(2, 1))
    assert image["pass"] and image["rank"] == 8
    assert json.loads(sp.verify_ybe(1, 2))["pass"]
    assert json.loads(sp.verify_gl_relations(1, 1))["closing"] == "Standard"
    assert json.loads(sp.verify_commutant(1, 1, 3))["rank"] == 6

    report = json.loads(sp.report_all(1, 1, 3))
    assert report["overall"] == "pass", report
    print("smoke test passed: %d checks" % len(report["checks"]))


if __name__ == "__main__":
    main()
