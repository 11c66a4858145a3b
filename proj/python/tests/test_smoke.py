import pytest

import scpp


def evaluate(n, word):
    p = list(range(1, n + 1))
    for x in word:
        p[x - 1], p[x] = p[x], p[x - 1]
    return p


def compose(p, q):
    return [p[i - 1] for i in q]


def inverse(p):
    r = [0] * len(p)
    for i, v in enumerate(p, 1):
        r[v - 1] = i
    return r


def test_solve():
    s = scpp.solve(7, [6, 4, 1, 2])
    px, py = evaluate(7, s["x"]), evaluate(7, s["y"])
    assert compose(compose(px, py), compose(inverse(px), inverse(py))) == s["sigma"]
    assert s["sigma"] == scpp.evaluate(7, [6, 4, 1, 2])
    assert [c for c in s["tau"] if len(c) > 1] == [[1, 2], [4, 5]]
    assert s["trace"][0]["branch"] in {"peel-odd", "peel-even-pair"}


def test_errors():
    with pytest.raises(scpp.PromiseViolation):
        scpp.solve(4, [1])
    with pytest.raises(scpp.MalformedInput):
        scpp.solve(4, [7])
    assert issubclass(scpp.PromiseViolation, ValueError)


def test_permutations():
    assert scpp.decompose(7, [6, 4, 1, 2]) == [[1, 2, 3], [4, 5], [6, 7]]
    assert scpp.canonical(4, [2, 1, 2]) == [1, 2, 1]
    assert scpp.two_ncycle_product(3, "1 2 3 0 0") == "1 2 3 0 1 2 3 0 0 1 2 3 0 1 2 3 0 0 0"
    assert len(scpp.complete_sn(4)) == 7


def test_braids():
    assert scpp.rgnf(3, [1, 2, -1, -2]) == ([[1, 2], [2]], -1)
    assert scpp.format_rgnf(3, [1, 2, -1, -2]) == "[1 2][2] OMEGA^-1"
    assert scpp.braid_equal(3, [1, 2, 1], [2, 1, 2])
    assert not scpp.braid_equal(3, [1], [2])
    x, y = scpp.scpp_permutation_braids(3, [2, 1, 1, 2, 1, -1, -2, -1, -2, -1])
    assert x == [2, 1]
    assert scpp.scpp_permutation_braids(3, [1, 1, 2, -1, -1, -2]) is None
    pure, (a, b) = scpp.pure_braid_factorization(3, [1, 2, -1, -2])
    assert scpp.evaluate(3, [abs(g) for g in pure]) == [1, 2, 3]


def test_search_and_machines():
    a = scpp.search(3, [1, 1, 2, -1, -1, -2], 8, 3)
    b = scpp.search(3, [1, 1, 2, -1, -1, -2], 8, 3)
    assert a["text"] == b["text"]
    if a["success"]:
        x, y = a["result"]
        w = x + y + [-g for g in reversed(x)] + [-g for g in reversed(y)]
        assert scpp.braid_equal(3, w, [1, 1, 2, -1, -1, -2])
    assert scpp.run_adder(["1", "1"]) == ("10", 5, True)
    tape, steps, halted = scpp.run_machine("initial a\nhalt h\nalphabet 1\na 1 -> h R\n", ["1"], 5)
    assert halted and steps == 1
    assert scpp.operation_count(16, [6, 4, 1, 2]) > 0
