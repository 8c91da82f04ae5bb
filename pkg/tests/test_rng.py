from hyperdom.rng import (
    SplitMix64,
    random_connected_uniform,
    random_hypergraph,
    random_prufer,
    random_uniform_hypergraph,
)
from hyperdom.trees import from_prufer


def test_reference_stream():
    # published SplitMix64 outputs for seed 0
    r = SplitMix64(0)
    assert [r.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_below_and_between_ranges():
    r = SplitMix64(7)
    draws = [r.below(5) for _ in range(2000)]
    assert set(draws) == set(range(5))
    assert all(3 <= r.between(3, 4) <= 4 for _ in range(100))


def test_sample_is_distinct():
    r = SplitMix64(1)
    for _ in range(100):
        s = r.sample(range(10), 4)
        assert len(set(s)) == 4 and all(0 <= x < 10 for x in s)


def test_derive_is_reproducible():
    a = [SplitMix64(3).derive(i).next_u64() for i in range(5)]
    root = SplitMix64(3)
    b = [root.derive(i).next_u64() for i in range(5)]
    assert a[0] == b[0]
    assert len(set(b)) == 5
    again = SplitMix64(3)
    assert b == [again.derive(i).next_u64() for i in range(5)]


def test_generators_respect_shape():
    r = SplitMix64(11)
    for _ in range(50):
        h = random_uniform_hypergraph(r, 9, 3, 5)
        assert h.m == 5 and h.is_k_uniform(3)
        g = random_hypergraph(r, 6, 8)
        assert 1 <= g.m <= 8
        c = random_connected_uniform(r, 12, 4, extra=2)
        assert c.is_connected() and not c.has_isolated_vertices() and c.is_k_uniform(4)
        t = from_prufer(random_prufer(r, 9))
        assert t.n == 9
