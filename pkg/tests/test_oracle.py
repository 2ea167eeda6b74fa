import itertools

import pytest

from src.errors import CapExceeded
from src.services import GroupOracle, coxeter_word


@pytest.fixture(scope="module")
def tables():
    """Cayley tables keyed by system name, built once."""
    cache = {}

    def get(tk):
        if tk.name not in cache:
            oracle = GroupOracle(tk.system)
            cache[tk.name] = (oracle, oracle.enumerate_group())
        return cache[tk.name]

    return get


def coxeter_index(table, n):
    return table.index_of_word(tuple(range(1, n + 1)))


@pytest.mark.parametrize("name, order, reflections", [
    ("A2", 6, 3), ("B2", 8, 4), ("A1xA1", 4, 2), ("I2(5)", 10, 5), ("I2(6)", 12, 6), ("A3", 24, 6),
])
def test_group_orders(name, order, reflections, toolkit_for, tables):
    """Test group orders and reflection counts."""
    _, table = tables(toolkit_for(name))
    assert table.order == order
    assert len(table.reflections) == reflections
    assert table.elements[0] == toolkit_for(name).system.identity


def test_infinite_group_hits_cap(i2inf):
    """Test that enumeration of an infinite group stops at the cap."""
    with pytest.raises(CapExceeded):
        GroupOracle(i2inf.system).enumerate_group(cap=100)


def test_reflection_words_rebuild_reflections(finite, tables):
    """Test that every oracle reflection word is a reflection of the main path."""
    _, table = tables(finite)
    for k, t in enumerate(table.reflections):
        reflection = finite.t(*table.reflection_words[k])
        assert finite.system.reflection_matrix(reflection) == table.elements[t]


@pytest.mark.parametrize("name, length, count", [("A2", 2, 3), ("B2", 2, 4), ("A2", 3, 0)])
def test_factorization_counts(name, length, count, toolkit_for, tables):
    """Test the number of factorizations of s_1 s_2."""
    oracle, table = tables(toolkit_for(name))
    assert len(oracle.all_factorizations(table, coxeter_index(table, 2), length)) == count


def test_identity_has_one_empty_factorization(a2, tables):
    """Test the length-0 edge case."""
    oracle, table = tables(a2)
    assert oracle.all_factorizations(table, 0, 0) == [()]
    assert oracle.all_factorizations(table, 1, 0) == []


@pytest.mark.parametrize("name, length, sizes", [
    ("A2", 2, [3]),
    ("B2", 2, [4]),
    ("I2(5)", 2, [5]),
    ("A3", 3, [16]),
])
def test_orbit_partition_anchors(name, length, sizes, toolkit_for, tables):
    """Test brute-force orbit sizes of reduced factorizations."""
    tk = toolkit_for(name)
    oracle, table = tables(tk)
    states = oracle.all_factorizations(table, coxeter_index(table, tk.system.rank), length)
    assert sorted(len(o) for o in oracle.orbit_partition(table, states)) == sizes


def test_b2_length_four_has_two_orbits(b2, tables):
    """Test the two class multisets {1, 3} and {3, 1} in B2."""
    oracle, table = tables(b2)
    states = oracle.all_factorizations(table, coxeter_index(table, 2), 4)
    orbits = oracle.orbit_partition(table, states)
    assert len(orbits) == 2
    classes = oracle.brute_conjugacy(table)
    multisets = {tuple(sorted(classes[k] for k in min(o))) for o in orbits}
    assert multisets == {(1, 2, 2, 2), (1, 1, 1, 2)}


def test_brute_conjugacy_matches_class_of(finite, tables):
    """Test classes by exhaustion against depth reduction."""
    oracle, table = tables(finite)
    classes = oracle.brute_conjugacy(table)
    assert set(classes) == set(range(len(table.reflections)))
    for k, word in enumerate(table.reflection_words):
        assert finite.system.class_of(finite.t(*word), finite.labeling) == classes[k]


@pytest.mark.parametrize("name, lengths", [
    ("A2", (2, 4, 6)), ("B2", (2, 4, 6)), ("A1xA1", (2, 4, 6)), ("I2(5)", (2, 4, 6)), ("I2(6)", (2, 4, 6)),
    ("A3", (3, 5)),
])
def test_orbits_are_class_multiset_fibres(name, lengths, toolkit_for, tables):
    """Test that Hurwitz orbits coincide with the class-multiset partition."""
    tk = toolkit_for(name)
    oracle, table = tables(tk)
    classes = oracle.brute_conjugacy(table)
    for length in lengths:
        states = oracle.all_factorizations(table, coxeter_index(table, tk.system.rank), length)
        assert oracle.orbit_partition(table, states) == oracle.class_multiset_partition(states, classes)


@pytest.mark.parametrize("name, lengths", [("A2", (2, 4)), ("I2(5)", (2, 4)), ("A3", (3, 5))])
def test_single_orbit_when_all_labels_are_odd(name, lengths, toolkit_for, tables):
    """Test one orbit per length when every label is odd."""
    tk = toolkit_for(name)
    oracle, table = tables(tk)
    for length in lengths:
        states = oracle.all_factorizations(table, coxeter_index(table, tk.system.rank), length)
        assert len(oracle.orbit_partition(table, states)) == 1


def test_oracle_orbits_match_breadth_first_search(b2, i26, tables):
    """Test orbit sizes from the oracle against the main-path BFS."""
    for tk in (b2, i26):
        oracle, table = tables(tk)
        states = oracle.all_factorizations(table, coxeter_index(table, 2), 4)
        for orbit in oracle.orbit_partition(table, states):
            f = oracle.to_factorization(table, min(orbit))
            assert tk.hurwitz.orbit_bfs(f).size == len(orbit)


@pytest.mark.parametrize("name, lengths", [("A2", (2, 4)), ("I2(5)", (2, 4)), ("A3", (3, 5))])
def test_decide_accepts_every_pair_when_all_labels_are_odd(name, lengths, toolkit_for, tables):
    """Test that decide reports equivalence for every pair of equal-length factorizations."""
    tk = toolkit_for(name)
    oracle, table = tables(tk)
    for length in lengths:
        states = oracle.all_factorizations(table, coxeter_index(table, tk.system.rank), length)
        factorizations = [oracle.to_factorization(table, state) for state in states]
        if len(factorizations) <= 150:
            pairs = itertools.product(factorizations, repeat=2)
        else:
            pairs = itertools.chain(
                ((factorizations[0], g) for g in factorizations),
                zip(factorizations, factorizations[1:] + factorizations[:1]),
            )
        for f, g in pairs:
            assert tk.connector.decide(f, g).equivalent


@pytest.mark.parametrize("name, lengths", [
    ("A2", (2, 4, 6)), ("B2", (2, 4, 6)), ("A1xA1", (2, 4, 6)), ("I2(5)", (2, 4)), ("I2(6)", (2, 4)),
    ("A3", (3, 5)),
])
def test_normalize_and_canonicalize_every_factorization(name, lengths, toolkit_for, tables):
    """Test normal-form postconditions and that canonical forms match class multisets one to one."""
    tk = toolkit_for(name)
    oracle, table = tables(tk)
    classes = oracle.brute_conjugacy(table)
    n = tk.system.rank
    cw = coxeter_word(tk.diagram, list(range(1, n + 1)))
    for length in lengths:
        states = oracle.all_factorizations(table, coxeter_index(table, n), length)
        multisets_by_form = {}
        for state in states:
            f = oracle.to_factorization(table, state)

            normal = tk.rewriter.normalize(f, coxeter=cw)
            assert len(normal.core) == n
            assert len(normal.pairs) == (length - n) // 2
            assert tk.rewriter.profile(normal.core).all_up
            assert tk.hurwitz.replay(f, normal.braid).key == normal.flat().key
            assert all(r.sum_after < r.sum_before for r in normal.resolutions)

            canonical, braid = tk.connector.canonicalize(f, cw)
            assert tk.hurwitz.replay(f, braid).key == canonical.key
            multiset = tuple(sorted(classes[k] for k in state))
            multisets_by_form.setdefault(canonical.key, set()).add(multiset)

        assert all(len(multisets) == 1 for multisets in multisets_by_form.values())
        distinct = {tuple(sorted(classes[k] for k in state)) for state in states}
        assert len(multisets_by_form) == len(distinct)
