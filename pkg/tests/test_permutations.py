import itertools

from jackpoly import permutations as perm


def test_identity_and_simple():
    assert perm.identity(3) == (0, 1, 2)
    assert perm.simple(2, 1) == (1, 0)
    assert perm.simple(3, 2) == (0, 2, 1)
    assert perm.transposition(3, 1, 3) == (2, 1, 0)


def test_compose_and_inverse():
    s1 = perm.simple(3, 1)
    s2 = perm.simple(3, 2)
    assert perm.compose(s1, s2) == (1, 2, 0)
    assert perm.compose(s2, s1) == (2, 0, 1)
    for w in perm.all_permutations(4):
        assert perm.compose(w, perm.inverse(w)) == perm.identity(4)


def test_length_is_inversion_count():
    assert perm.coxeter_length(perm.identity(4)) == 0
    assert perm.coxeter_length((3, 2, 1, 0)) == 6
    assert perm.coxeter_length(perm.simple(4, 2)) == 1


def test_apply_to_tuple():
    s1 = perm.simple(2, 1)
    assert perm.apply_to_tuple(s1, (5, 7)) == (7, 5)
    w = (1, 2, 0)  # sends position k to w[k]
    assert perm.apply_to_tuple(w, ("a", "b", "c")) == ("c", "a", "b")


def test_descending_chain():
    assert perm.descending_chain(3, 3) == perm.identity(3)
    # s_2 alone
    assert perm.descending_chain(3, 2) == perm.simple(3, 2)
    # s_1 s_2 sends 3 -> 1
    w = perm.descending_chain(3, 1)
    assert w == perm.compose(perm.simple(3, 1), perm.simple(3, 2))
    assert w[2] == 0


def _bruhat_leq_oracle(u, v, cover_up):
    # chain characterization: u <= v iff v is reachable from u through
    # transposition steps that raise the length by exactly one
    if u == v:
        return True
    seen = {u}
    frontier = [u]
    target_len = perm.coxeter_length(v)
    while frontier:
        nxt = []
        for w in frontier:
            for z in cover_up[w]:
                if z == v:
                    return True
                if z not in seen and perm.coxeter_length(z) < target_len:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return False


def test_bruhat_matches_chain_oracle_on_s4():
    n = 4
    elements = list(perm.all_permutations(n))
    transpositions = [perm.transposition(n, i, j)
                      for i in range(1, n) for j in range(i + 1, n + 1)]
    cover_up = {}
    for w in elements:
        ups = []
        for t in transpositions:
            z = perm.compose(w, t)
            if perm.coxeter_length(z) == perm.coxeter_length(w) + 1:
                ups.append(z)
        cover_up[w] = ups
    for u in elements:
        for v in elements:
            assert perm.bruhat_leq(u, v) == _bruhat_leq_oracle(u, v, cover_up)


def test_bruhat_basic_properties_s4():
    n = 4
    elements = list(perm.all_permutations(n))
    e = perm.identity(n)
    for w in elements:
        assert perm.bruhat_leq(e, w)
        assert perm.bruhat_leq(w, w)
    for u, v in itertools.combinations(elements, 2):
        assert not (perm.bruhat_leq(u, v) and perm.bruhat_leq(v, u))
