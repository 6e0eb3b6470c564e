import random

import pytest

from chromastab import generate, graph6, iso, oracles
from chromastab.generate import Catalog, GenSpec, GenerateError


def test_known_counts_small():
    for n in range(1, 7):
        assert generate.class_count(n) == generate.KNOWN_CLASS_COUNTS[n]


def test_spec_validation():
    with pytest.raises(GenerateError):
        GenSpec(0).validate()
    with pytest.raises(GenerateError):
        GenSpec(11).validate()
    with pytest.raises(GenerateError):
        GenSpec(5, max_degree=9).validate()
    with pytest.raises(GenerateError):
        GenSpec(5, predicate="nope").validate()
    with pytest.raises(GenerateError):
        generate.enumerate_catalog(GenSpec(12))


def test_matches_bruteforce_dedup_n5():
    keys = set()
    for g in oracles.all_labeled_graphs(5):
        keys.add(oracles.brute_canonical_key(g)[0])
    level = generate.levels_up_to(5)
    assert len(level) == len(keys) == 34
    # the enumerated representatives cover exactly the brute-force classes
    enum_keys = set()
    for _key, rows in level:
        from chromastab.graph import Graph

        enum_keys.add(oracles.brute_canonical_key(Graph(5, rows))[0])
    assert enum_keys == keys


def test_connected_only_counts():
    cat5 = generate.enumerate_catalog(GenSpec(5, connected_only=True))
    assert len(cat5.entries) == 21
    cat6 = generate.enumerate_catalog(GenSpec(6, connected_only=True))
    assert len(cat6.entries) == 112


def test_degree_bound_matches_postfilter():
    for bound in (2, 3):
        bounded = {key for key, _ in generate.levels_up_to(6, max_degree=bound)}
        unbounded = generate.levels_up_to(6)
        from chromastab.graph import Graph

        filtered = {
            key
            for key, rows in unbounded
            if Graph(6, rows).max_degree <= bound
        }
        assert bounded == filtered


def test_predicate_filter_matches_postfilter():
    def chi3(g):
        from chromastab import chromatic

        return chromatic.chromatic_number(g) == 3

    cat = generate.enumerate_catalog(GenSpec(6, predicate=chi3))
    full = generate.enumerate_catalog(GenSpec(6))
    expected = {e.key for e in full.entries if e.report.chromatic_number == 3}
    assert set(cat.keys()) == expected
    assert cat.meta["funnel"]["predicate"] == len(expected)


def test_catalog_keys_strictly_increasing(s9_catalog):
    keys = s9_catalog.keys()
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_no_two_catalog_entries_isomorphic(s9_catalog):
    graphs = s9_catalog.graphs()
    rng = random.Random(1)
    for _ in range(100):
        i, j = rng.sample(range(len(graphs)), 2)
        assert not iso.are_isomorphic(graphs[i], graphs[j])


def test_edge_addition_links_n4():
    cat = generate.enumerate_catalog(GenSpec(4))
    links = generate.edge_addition_links(cat)
    # brute-force recomputation over the 11 classes
    brute = set()
    graphs = {e.key: graph6.decode(e.key) for e in cat.entries}
    for ka, a in graphs.items():
        for u in range(4):
            for v in range(u + 1, 4):
                if a.has_edge(u, v):
                    continue
                child = a.add_edges([(u, v)])
                for kb, b in graphs.items():
                    if oracles.brute_is_isomorphic(child, b):
                        brute.add((ka, kb))
    assert set(links) == brute
    assert len(set(b for _a, b in links)) == 10  # every nonempty graph has a parent


def test_edge_addition_links_edge_cases():
    cat = generate.enumerate_catalog(GenSpec(3))
    single = Catalog(cat.entries[:1], {})
    assert generate.edge_addition_links(single) == []
    mixed = Catalog(
        generate.enumerate_catalog(GenSpec(2)).entries + cat.entries[:1], {}
    )
    with pytest.raises(GenerateError):
        generate.edge_addition_links(mixed)


def test_count_planar():
    cat = generate.enumerate_catalog(GenSpec(4))
    assert generate.count_planar(cat) == 11
    assert generate.count_planar(Catalog((), {})) == 0


def test_catalog_roundtrip(tmp_path):
    cat = generate.enumerate_catalog(GenSpec(5))
    path = tmp_path / "c5.catalog"
    generate.write_catalog(cat, path)
    back = generate.read_catalog(path)
    assert back.keys() == cat.keys()
    assert [e.report for e in back.entries] == [e.report for e in cat.entries]
    assert back.meta["funnel"] == cat.meta["funnel"]


def test_worker_count_determinism(tmp_path):
    spec = GenSpec(6, predicate="family-members")
    a = tmp_path / "a.catalog"
    b = tmp_path / "b.catalog"
    generate.write_catalog(generate.enumerate_catalog(spec, jobs=1), a)
    generate.write_catalog(generate.enumerate_catalog(spec, jobs=2), b)
    assert a.read_bytes() == b.read_bytes()


def test_family_member_filter_is_empty_below_order_9():
    # the color-class bound forces at least ivs * chi = 9 vertices
    cat = generate.enumerate_catalog(GenSpec(8, max_degree=4, predicate="family-members"))
    assert len(cat.entries) == 0
    assert cat.meta["funnel"]["ivs=3"] == 0
