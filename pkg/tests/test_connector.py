import random

import pytest

from src.errors import LengthError, ParityError, PreconditionError, ProductMismatch
from src.models import BraidWord
from src.services.diagrams import coxeter_word, parabolic_coxeter_word


def standard_word(tk):
    return coxeter_word(tk.diagram, list(range(1, tk.system.rank + 1)))


def random_braid(rng, length, max_moves=6):
    return BraidWord(
        tuple(rng.choice((1, -1)) * rng.randint(1, length - 1) for _ in range(rng.randint(0, max_moves)))
    )


def test_validate_coxeter_target(a2, a3):
    """Test product, parity, length and parabolic checks."""
    cw = coxeter_word(a2.diagram, [1, 2])
    a2.connector.validate_coxeter_target(cw, a2.f([1], [2]))
    with pytest.raises(ParityError):
        a2.connector.validate_coxeter_target(cw, a2.f([1], [2], [1]))
    with pytest.raises(ProductMismatch):
        a2.connector.validate_coxeter_target(cw, a2.f([2], [1]))
    with pytest.raises(LengthError):
        a3.connector.validate_coxeter_target(standard_word(a3), a3.f([1]))
    with pytest.raises(PreconditionError):
        a3.connector.validate_coxeter_target(parabolic_coxeter_word(a3.diagram, [1, 3]), a3.f([1], [3]))


def test_decide_examples(a2, b2):
    """Test decisions by class multiset."""
    decision = b2.connector.decide(b2.f([1], [2], [2], [2]), b2.f([1], [1], [1], [2]))
    assert not decision.equivalent
    assert decision.witness is None
    assert decision.to_json() == {
        "equivalent": False,
        "certificate": {"f": {"1": 1, "2": 3}, "g": {"1": 3, "2": 1}},
    }

    f = a2.f([1], [2], [1], [1])
    assert a2.connector.decide(f, a2.f([2], [1, 2, 1], [2], [2])).equivalent
    assert a2.connector.decide(f, f).equivalent


def test_decide_rejects_length_mismatch(a2):
    """Test that lengths must agree."""
    with pytest.raises(LengthError):
        a2.connector.decide(a2.f([1], [2]), a2.f([1], [2], [1], [1]))


def test_conjugate_pair_by_prefix_entry(a2):
    """Test (s_1, s_2, s_1, s_1) with entry 2 -> pair (s_2 s_1 s_2, s_2 s_1 s_2)."""
    f = a2.f([1], [2], [1], [1])
    result, braid = a2.connector.conjugate_pair_by_prefix_entry(f, 3, 2)
    assert result.factors == (a2.t(1), a2.t(2), a2.t(2, 1, 2), a2.t(2, 1, 2))
    assert a2.hurwitz.replay(f, braid).key == result.key

    same, _ = a2.connector.conjugate_pair_by_prefix_entry(f, 3, 1)
    assert same.key == f.key


def test_conjugate_pair_by_distant_prefix_entry(b3):
    """Test conjugation by an entry that is not adjacent to the pair."""
    f = b3.f([1], [2], [3], [2], [2])
    result, braid = b3.connector.conjugate_pair_by_prefix_entry(f, 4, 1)
    expected = b3.system.reflect(b3.t(2), b3.t(1))
    assert result.factors == (b3.t(1), b3.t(2), b3.t(3), expected, expected)
    assert b3.hurwitz.replay(f, braid).key == result.key


def test_conjugate_pair_by_prefix_entry_preconditions(a2):
    """Test that the entry must precede an equal pair."""
    f = a2.f([1], [2], [1], [1])
    with pytest.raises(PreconditionError):
        a2.connector.conjugate_pair_by_prefix_entry(f, 3, 3)
    with pytest.raises(PreconditionError):
        a2.connector.conjugate_pair_by_prefix_entry(f, 2, 1)


def test_conjugate_pair_by_word(a2, b2):
    """Test letterwise pair conjugation through the core."""
    f = a2.f([1], [2], [1], [1])
    same, braid = a2.connector.conjugate_pair_by_word(f, 3, ())
    assert same.key == f.key
    assert braid.moves == ()

    moved, _ = a2.connector.conjugate_pair_by_word(f, 3, (2,))
    assert moved.factor(3) == a2.t(2, 1, 2)

    g = b2.f([1], [2], [2], [2])
    result, braid = b2.connector.conjugate_pair_by_word(g, 3, (1, 2))
    expected = b2.system.conjugate(b2.t(2), b2.g(1, 2))
    assert result.factors == (b2.t(1), b2.t(2), expected, expected)
    assert b2.hurwitz.replay(g, braid).key == result.key


def test_conjugate_pair_by_word_needs_letter_in_core(a3):
    """Test the error when the prefix lacks a generator."""
    f = a3.f([1], [3], [2], [2])
    with pytest.raises(PreconditionError):
        a3.connector.conjugate_pair_by_word(f, 3, (2,))


def test_class_representative_conjugator(a2, b3, i2inf):
    """Test u s_q u^-1 = t with q the class representative."""
    assert a2.connector.class_representative_conjugator(a2.t(1)) == ()
    assert a2.connector.class_representative_conjugator(a2.t(1, 2, 1)) == (2,)
    for tk, word in ((a2, [2]), (b3, [3, 2, 1, 2, 3]), (b3, [2, 3, 2]), (i2inf, [2, 1, 2, 1, 2])):
        t = tk.t(*word)
        u = tk.connector.class_representative_conjugator(t)
        q = tk.labeling.representative(tk.system.class_of(t, tk.labeling))
        assert tk.system.conjugate(tk.t(q), tk.g(*u)) == t


def test_canonicalize_examples(a2, b2):
    """Test canonical forms in A2 and B2."""
    cw = coxeter_word(a2.diagram, [1, 2])
    t = [1, 2, 1]
    f = a2.f(t, t, [1], [2])
    canonical, braid = a2.connector.canonicalize(f, cw)
    assert canonical.factors == (a2.t(1), a2.t(2), a2.t(1), a2.t(1))
    assert a2.hurwitz.replay(f, braid).key == canonical.key

    # s_2 s_1 s_2 is conjugate to s_1 in B2
    g = b2.f([1], [2], [2, 1, 2], [2, 1, 2])
    canonical, braid = b2.connector.canonicalize(g, coxeter_word(b2.diagram, [1, 2]))
    assert canonical.factors == (b2.t(1), b2.t(2), b2.t(1), b2.t(1))
    assert b2.hurwitz.replay(g, braid).key == canonical.key


def test_canonicalize_fixed_point(a2):
    """Test that a canonical factorization needs no moves."""
    f = a2.f([1], [2], [1], [1])
    canonical, braid = a2.connector.canonicalize(f, coxeter_word(a2.diagram, [1, 2]))
    assert canonical.key == f.key
    assert braid.moves == ()


def test_canonicalize_sorts_pairs(b2):
    """Test that pairs are sorted by class id."""
    f = b2.f([1], [2], [2], [2], [1], [1])
    canonical, _ = b2.connector.canonicalize(f, coxeter_word(b2.diagram, [1, 2]))
    assert canonical.factors == (b2.t(1), b2.t(2), b2.t(1), b2.t(1), b2.t(2), b2.t(2))


def test_connect_examples(a2, b2):
    """Test witnesses and negative decisions."""
    cw = coxeter_word(a2.diagram, [1, 2])
    f = a2.f([1], [2], [1], [1])
    g = a2.f([2], [1, 2, 1], [2], [2])
    decision = a2.connector.connect(f, g, cw)
    assert decision.equivalent
    assert a2.hurwitz.replay(f, decision.witness).key == g.key

    same = a2.connector.connect(f, f, cw)
    assert a2.hurwitz.replay(f, same.witness).key == f.key

    negative = b2.connector.connect(
        b2.f([1], [2], [2], [2]), b2.f([1], [1], [1], [2]), coxeter_word(b2.diagram, [1, 2])
    )
    assert not negative.equivalent
    assert negative.witness is None


def test_connect_with_reversed_coxeter_word(a3):
    """Test a Coxeter element other than s_1 s_2 s_3."""
    cw = coxeter_word(a3.diagram, [3, 1, 2])
    f = a3.hurwitz.replay(a3.f([3], [1], [2], [2], [2]), BraidWord((1, -3, 2, 4)))
    g = a3.hurwitz.replay(a3.f([3], [1], [2], [1], [1]), BraidWord((-2, 3, 1)))
    decision = a3.connector.connect(f, g, cw)
    assert decision.equivalent
    assert a3.hurwitz.replay(f, decision.witness).key == g.key


@pytest.mark.parametrize("name, count, extra, seed", [
    ("A2", 30, 1, 11),
    ("B2", 30, 1, 12),
    ("A1xA1", 20, 1, 13),
    ("I2(5)", 30, 1, 14),
    ("I2(6)", 30, 2, 15),
    ("A3", 20, 1, 16),
    ("I2(inf)", 40, 1, 17),
])
def test_random_equivalent_pairs_connect(name, count, extra, seed, toolkit_for):
    """Test that scrambled copies of one factorization are connected by a verified witness."""
    tk = toolkit_for(name)
    rng = random.Random(seed)
    n = tk.system.rank
    cw = standard_word(tk)
    for _ in range(count):
        words = [[i] for i in range(1, n + 1)]
        for _ in range(extra):
            p = [rng.randint(1, n)]
            words.extend((p, p))
        base = tk.f(*words)
        f = tk.hurwitz.replay(base, random_braid(rng, len(base)))
        g = tk.hurwitz.replay(base, random_braid(rng, len(base)))
        decision = tk.connector.connect(f, g, cw)
        assert decision.equivalent
        assert tk.hurwitz.replay(f, decision.witness).key == g.key
