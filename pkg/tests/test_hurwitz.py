import random

import pytest

from src.errors import BraidIndexError, NotConnected, PreconditionError
from src.models import BraidWord, ClassMultiset


def random_factorization(tk, rng, length, max_word=5):
    words = []
    for _ in range(length):
        u = [rng.randint(1, tk.system.rank) for _ in range(rng.randint(0, max_word // 2))]
        words.append(u + [rng.randint(1, tk.system.rank)] + u[::-1])
    return tk.f(*words)


def test_apply_generator_examples(a2):
    """Test sigma_1 on (s_1, s_2) in A2."""
    f = a2.f([1], [2])
    moved = a2.hurwitz.apply_generator(f, 1, 1)
    assert moved.factors == (a2.t(1, 2, 1), a2.t(1))
    assert a2.hurwitz.apply_generator(moved, 1, -1).key == f.key


def test_generator_cycle_in_a2(a2):
    """Test that sigma_1 has order 3 on (s_1, s_2)."""
    f = a2.f([1], [2])
    assert a2.hurwitz.replay(f, BraidWord((1, 1, 1))).key == f.key
    assert a2.hurwitz.replay(f, BraidWord()).key == f.key


def test_replay_b2(b2):
    """Test a single move in B2."""
    f = b2.f([1], [2])
    assert b2.hurwitz.replay(f, BraidWord((1,))).factors == (b2.t(1, 2, 1), b2.t(1))


def test_apply_generator_index_range(a2):
    """Test index validation."""
    f = a2.f([1], [2])
    with pytest.raises(PreconditionError):
        a2.hurwitz.apply_generator(f, 2, 1)
    with pytest.raises(PreconditionError):
        a2.hurwitz.apply_generator(f, 1, 0)


def test_replay_reports_position(a2):
    """Test that bad moves are reported with their position."""
    f = a2.f([1], [2], [1], [1])
    with pytest.raises(BraidIndexError) as exc:
        a2.hurwitz.replay(f, BraidWord((1, -3, 4)))
    assert exc.value.position == 2
    assert exc.value.location == {"position": 2}


def test_braid_word_rejects_zero():
    """Test braid word validation and inversion."""
    with pytest.raises(PreconditionError):
        BraidWord((1, 0))
    assert BraidWord((1, -2, 3)).inverse().moves == (-3, 2, -1)
    assert BraidWord.power(2, -3).moves == (-2, -2, -2)


def test_class_multisets(b2):
    """Test class multisets in B2."""
    assert b2.hurwitz.class_multiset(b2.f([1], [2], [2], [2]), b2.labeling).to_json() == {"1": 1, "2": 3}
    assert b2.hurwitz.class_multiset(b2.f([1], [1, 2, 1], [2], [2]), b2.labeling).to_json() == {"1": 1, "2": 3}
    assert b2.hurwitz.class_multiset(b2.f(), b2.labeling) == ClassMultiset()
    assert b2.hurwitz.class_multiset(b2.f([1], [2], [2], [2]), b2.labeling).total == 4


def test_move_invariants(a2, b2, i2inf, b3):
    """Test product and class-multiset preservation and the braid relations on 1000 factorizations."""
    rng = random.Random(2024)
    for tk in (a2, b2, i2inf, b3):
        for _ in range(250):
            length = rng.randint(3, 5)
            f = random_factorization(tk, rng, length)
            multiset = tk.hurwitz.class_multiset(f, tk.labeling)
            i = rng.randint(1, length - 1)
            sign = rng.choice((1, -1))
            moved = tk.hurwitz.apply_generator(f, i, sign)
            assert tk.system.product(moved.factors) == f.target
            assert tk.hurwitz.class_multiset(moved, tk.labeling) == multiset
            assert tk.hurwitz.apply_generator(moved, i, -sign).key == f.key
            if i + 1 <= length - 1:
                left = tk.hurwitz.replay(f, BraidWord((i, i + 1, i)))
                right = tk.hurwitz.replay(f, BraidWord((i + 1, i, i + 1)))
                assert left.key == right.key
            for j in range(1, length):
                if abs(i - j) >= 2:
                    assert (
                        tk.hurwitz.replay(f, BraidWord((i, j))).key
                        == tk.hurwitz.replay(f, BraidWord((j, i))).key
                    )


def test_shift_pair_right(a2):
    """Test moving an equal pair one slot right."""
    t = [1, 2, 1]
    f = a2.f(t, t, [1])
    shifted, braid = a2.hurwitz.shift_pair_right(f, 1)
    assert braid.moves == (2, 1)
    assert shifted.factors == (a2.t(1), a2.t(*t), a2.t(*t))

    g = a2.f(t, t, [1], [2])
    once, b1 = a2.hurwitz.shift_pair_right(g, 1)
    twice, b2 = a2.hurwitz.shift_pair_right(once, 2)
    assert (b1 + b2).moves == (2, 1, 3, 2)
    assert twice.factors == (a2.t(1), a2.t(2), a2.t(*t), a2.t(*t))


def test_shift_pair_right_preconditions(a2):
    """Test that a pair at the end or unequal factors are rejected."""
    with pytest.raises(PreconditionError):
        a2.hurwitz.shift_pair_right(a2.f([1], [1]), 1)
    with pytest.raises(PreconditionError):
        a2.hurwitz.shift_pair_right(a2.f([1], [2], [1]), 1)


def test_swap_pair_blocks(b2):
    """Test (t, t, r, r) -> (r, r, t, t)."""
    f = b2.f([2], [2], [1], [1])
    swapped, braid = b2.hurwitz.swap_pair_blocks(f, 1)
    assert braid.moves == (2, 1, 3, 2)
    assert swapped.factors == (b2.t(1), b2.t(1), b2.t(2), b2.t(2))
    with pytest.raises(PreconditionError):
        b2.hurwitz.swap_pair_blocks(b2.f([2], [1], [1], [2]), 1)


@pytest.mark.parametrize("name, size", [("A2", 3), ("B2", 4), ("I2(5)", 5), ("I2(6)", 6), ("A1xA1", 2)])
def test_orbit_sizes_of_reduced_factorizations(name, size, toolkit_for):
    """Test orbit sizes of (s_1, s_2)."""
    tk = toolkit_for(name)
    result = tk.hurwitz.orbit_bfs(tk.f([1], [2]))
    assert result.size == size
    assert not result.truncated


def test_orbit_a3_reduced(a3):
    """Test the 16 reduced factorizations of the A3 Coxeter element."""
    assert a3.hurwitz.orbit_bfs(a3.f([1], [2], [3])).size == 16


def test_orbit_truncation(i2inf):
    """Test that an infinite orbit is truncated at the cap."""
    result = i2inf.hurwitz.orbit_bfs(i2inf.f([1], [1], [1], [2]), cap=50)
    assert result.truncated
    assert result.size == 50

    assert i2inf.hurwitz.orbit_bfs(i2inf.f([1], [2]), cap=1).size == 1


@pytest.mark.parametrize("options", [{"cap": 0}, {"cap": -3}, {"threads": 0}])
def test_orbit_rejects_non_positive_limits(a2, options):
    """Test that a zero or negative cap is not mistaken for the default."""
    with pytest.raises(PreconditionError):
        a2.hurwitz.orbit_bfs(a2.f([1], [2]), **options)
    with pytest.raises(PreconditionError):
        a2.hurwitz.connect_bfs(a2.f([1], [2]), a2.f([1, 2, 1], [1]), cap=0)


@pytest.mark.asyncio
async def test_orbit_async_matches_sequential(b2):
    """Test that threaded layer expansion gives the same states in the same order."""
    f = b2.f([1], [2], [2], [2])
    sequential = b2.hurwitz.orbit_bfs(f, threads=1)
    threaded = await b2.hurwitz.orbit_bfs_async(f, cap=10000, threads=4)
    assert threaded.keys() == sequential.keys()
    assert threaded.size == sequential.size


def test_orbit_threads_option(a2):
    """Test the synchronous entry point with worker threads."""
    assert a2.hurwitz.orbit_bfs(a2.f([1], [2], [1], [1]), threads=2).size == \
        a2.hurwitz.orbit_bfs(a2.f([1], [2], [1], [1])).size


def test_connect_bfs_examples(a2, b2):
    """Test bidirectional search witnesses."""
    f = a2.f([1], [2])
    assert a2.hurwitz.connect_bfs(f, f).moves == ()
    assert a2.hurwitz.connect_bfs(f, a2.f([1, 2, 1], [1])).moves == (1,)

    g = b2.f([1], [2])
    h = b2.f([2], [2, 1, 2])
    braid = b2.hurwitz.connect_bfs(g, h)
    assert 1 <= len(braid) <= 3
    assert b2.hurwitz.replay(g, braid).key == h.key


def test_connect_bfs_infinite_group(i2inf):
    """Test a connection inside an infinite orbit."""
    rng = random.Random(9)
    f = i2inf.f([1], [2], [2], [2])
    braid = BraidWord(tuple(rng.choice((1, -1, 2, -2, 3, -3)) for _ in range(6)))
    g = i2inf.hurwitz.replay(f, braid)
    found = i2inf.hurwitz.connect_bfs(f, g)
    assert i2inf.hurwitz.replay(f, found).key == g.key


def test_connect_bfs_different_orbits(b2):
    """Test exhaustion between distinct finite orbits."""
    with pytest.raises(NotConnected):
        b2.hurwitz.connect_bfs(b2.f([1], [2], [2], [2]), b2.f([1], [1], [1], [2]))
