import itertools

import pytest

import hatkit


def named(name):
    return dict(hatkit.census())[name]


def test_graph6_round_trip():
    k4 = hatkit.parse_graph6("C~")
    assert k4.order == 4 and k4.size == 6
    assert hatkit.write_graph6(k4) == "C~"
    g = hatkit.Graph(5, [(0, 1), (1, 2), (4, 3)])
    assert hatkit.parse_graph6(g.to_graph6()) == g
    assert g.edges() == [(0, 1), (1, 2), (3, 4)]
    with pytest.raises(hatkit.HatError, match="MalformedGraph6"):
        hatkit.parse_graph6("C~~")
    with pytest.raises(hatkit.HatError, match="LoopEdge"):
        hatkit.Graph(2, [(1, 1)])


def test_automorphism_order_against_brute_force():
    p = named("petersen")
    assert hatkit.automorphism_group_order(p) == 120
    g = hatkit.Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5)])
    brute = sum(
        all(g.adjacent(perm[u], perm[v]) for u, v in g.edges())
        for perm in itertools.permutations(range(6))
    )
    assert hatkit.automorphism_group_order(g) == brute


def test_transitivity_and_alternating_cycles():
    holt = named("holt")
    t = hatkit.transitivity(holt)
    assert t["half_arc_transitive"] and not t["arc_transitive"]
    alt = hatkit.alternating_cycles(holt)
    assert (alt["radius"], alt["attachment"]) == (9, 9)
    assert len(alt["orientation"]) == holt.size


def test_dart_graph():
    dart, report = hatkit.dart_graph(named("heawood"))
    assert dart.order == 42
    assert report["forward"]["passed"]
    assert report["forward"]["radius"] == 3
    with pytest.raises(hatkit.HatError, match="NotCubic"):
        hatkit.dart_graph(hatkit.resolve("c5"))


def test_cover_pipeline():
    dart, _ = hatkit.dart_graph(named("petersen"))
    # The lifted group, not Aut(Dart(Petersen)), is half-arc-transitive.
    with pytest.raises(hatkit.HatError):
        hatkit.cover_pipeline(dart)
    assert hatkit.is_isomorphic(hatkit.line_graph(named("k4")), hatkit.wreath_graph(3))


def test_analyze_and_verify():
    report = hatkit.analyze("holt")
    assert report["violations"] == []
    assert report["results"][0]["half_arc_analysis"]["ell"] == 2
    for suite in ("dart-theorem", "cover-theorem", "divisibility", "all"):
        result = hatkit.verify(suite)
        assert result["passed"], result
    with pytest.raises(hatkit.HatError, match="UnknownInput"):
        hatkit.verify("nothing")
