import g2chev


def test_roots():
    roots = g2chev.roots()
    assert len(roots) == 12
    assert roots[0] == "-3a-2b"
    assert roots[-1] == "3a+2b"
    assert g2chev.inner("a", "a") == 2
    assert g2chev.inner("a", "b") == -3
    assert g2chev.chain_p("a", "2a+b") == 2


def test_structure_constants():
    symbolic = g2chev.structure_constants()
    assert len(symbolic) == 60
    assert symbolic["a|b"] == "e1"
    assert symbolic["a+b|2a+b"] == "-3e5"

    allplus = g2chev.structure_constants("++++")
    assert allplus["a|b"] == 1
    assert allplus["a+b|2a+b"] == -3
    assert set(allplus) == set(symbolic)


def test_formulas():
    eq = g2chev.render_formula("b", "a")
    assert eq == (
        "[x_b(u), x_a(t)] = x_{a+b}(-e1tu) x_{2a+b}(e1e2t^2u) "
        "x_{3a+b}(-e1e2e3t^3u) x_{3a+2b}(-e2e5t^3u^2)"
    )
    assert g2chev.render_formula("b", "a", "++++").endswith("x_{3a+2b}(-t^3u^2)")
    assert "\\epsilon_1" in g2chev.render_formula("b", "a", format="latex")

    f = g2chev.commutator_formula("b", "a")
    assert f["left"] == "b"
    assert f["right"] == "a"
    assert [t["target"] for t in f["terms"]] == ["a+b", "2a+b", "3a+b", "3a+2b"]
    assert f["terms"][0]["coeff"] == "e1"
    assert g2chev.commutator_formula("b", "a", "++++")["terms"][0]["coeff"] == 1

    pairs = g2chev.reference_pairs()
    assert len(pairs) == 41
    assert pairs[0] == ("b", "a")


def test_verify_one_assignment():
    summary = g2chev.verify("++++")
    assert summary["ok"] is True
    assert summary["formulas_passed"] == 60
    assert summary["formulas_total"] == 60
    assert summary["jacobi_passed"] == 1
    assert summary["relation_suites_passed"] == 1
