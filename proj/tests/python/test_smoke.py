"""Smoke tests for the Python bindings."""

import alfa


def test_canon_graph():
    assert alfa.canon_graph("(b a)") == alfa.canon_graph("(a b)")
    assert alfa.canon_graph("#") == alfa.canon_graph("()")


def test_translate_embed_round_trip():
    graph = alfa.embed("p & (q -> r)")
    back = alfa.translate(graph)
    assert alfa.ipc_valid(f"(p & (q -> r) -> ({back})) & (({back}) -> p & (q -> r))")


def test_oracles_disagree_on_double_negation():
    f = "~~p -> p"
    assert alfa.classical_valid(f)
    assert not alfa.ipc_valid(f)
    assert alfa.countermodel(f) is not None


def test_check_script():
    script = """
    system alfao
    theorem mp
    vars a b
    from: a (a (b))
      step R5 => a ((b))
      step R2 => ((b))
      step R6 => b
    qed
    """
    results = alfa.check_script(script)
    assert len(results) == 1
    assert results[0]["ok"]
    assert results[0]["target"] == "b"


def test_check_script_rejects_bad_step():
    script = """
    system alfao
    theorem bad
    from: a
      step R2 => a b
    qed
    """
    results = alfa.check_script(script)
    assert len(results) == 1
    assert not results[0]["ok"]


def test_search_finds_detachment():
    out = alfa.search("alfao", "a (a (b))", "b", 4)
    assert out is not None
    assert "qed" in out


def test_compile_nd():
    proofs = alfa.compile_nd(
        """
        proof modus
        hyp (p)
        hyp (p -> q)
        IMP_E (q) {
          HYP (p -> q)
          HYP (p)
        }
        end
        """
    )
    assert len(proofs) == 1
    assert proofs[0]["ok"]
    assert proofs[0]["target"] == "q"
