"""Acceptance suite: one test per acceptance criterion, each printing a
pass/fail line with its runtime and enforcing its time budget.

Run with `pytest tests/test_acceptance.py -s` to see the lines.
"""

import time
from contextlib import contextmanager

from clusterkit.builders import (build_gamma_ell, build_rank2,
                                 build_unitriangular_seed)
from clusterkit.explore import (classify_finite_type, enumerate_exchange_graph,
                                f_polynomials, random_walk_laurent_check,
                                verify_positivity)
from clusterkit.flagvar import (enumerate_types, euler_characteristic,
                                flag_count_details, module_from_json)
from clusterkit.minors import minor_context, minor_symbolic, verify_exchange_identities


@contextmanager
def criterion(name, budget_seconds):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    elapsed = time.perf_counter() - start
    if elapsed >= budget_seconds:
        print(f"[FAIL] {name} ({elapsed:.3f}s over the {budget_seconds}s budget)")
        raise AssertionError(f"{name}: {elapsed:.3f}s exceeds {budget_seconds}s")
    print(f"[PASS] {name} ({elapsed:.3f}s)")


def test_rank2_a1_pentagon():
    with criterion("rank-2 a=1: 5 clusters and the 5 exact variables", 0.1):
        seed = build_rank2(1)
        report = enumerate_exchange_graph(seed)
        assert report.n_clusters == 5
        expected = {seed.ctx.parse(t) for t in [
            "x1",
            "x2",
            "x1^-1 + x1^-1*x2",                # (1+x2)/x1
            "x1^-1 + x1^-1*x2^-1 + x2^-1",     # (1+x1+x2)/(x1 x2)
            "x1*x2^-1 + x2^-1",                # (1+x1)/x2
        ]}
        assert set(report.variables) == expected


def test_rank2_a2_aperiodic_but_laurent_positive():
    with criterion("rank-2 a=2: depth-12 alternation, distinct Laurent positive", 1.0):
        seed = build_rank2(2)
        variables = [seed.vars[0], seed.vars[1]]
        k = 0
        for _ in range(12):
            seed = seed.mutate(k)
            variables.append(seed.vars[k])
            k = 1 - k
        assert len(set(variables)) == len(variables)
        assert all(v.is_positive() for v in variables)


def test_sl4_unitriangular_class():
    with criterion("SL4 seed: 14 clusters, 12 variables (3 frozen), 3-regular", 1.0):
        report = enumerate_exchange_graph(build_unitriangular_seed(3))
        assert report.n_clusters == 14
        assert report.n_variables == 12
        assert report.n_frozen == 3
        assert set(report.neighbor_counts()) == {3}


def test_symbolic_minor_identities():
    with criterion("minor oracle: all SL4 exchange identities, D_{2,3}, SL3 relation", 5.0):
        report = verify_exchange_identities(build_unitriangular_seed(3), depth=20)
        assert report.clusters_seen == 14
        assert report.all_polynomial
        assert ((), 0, "D_{2,3}") in report.minor_matches

        ctx = minor_context(3)
        lhs = minor_symbolic(3, (1,), (2,), ctx) * minor_symbolic(3, (2,), (3,), ctx)
        rhs = minor_symbolic(3, (1,), (3,), ctx) + minor_symbolic(3, (1, 2), (2, 3), ctx)
        assert lhs == rhs


def test_gamma_classification_small_levels():
    with criterion("grid quivers: (A1, l) -> A_l for l=1..4, (A2,1) -> A2, (A3,1) -> A3", 5.0):
        catalan = {1: 2, 2: 5, 3: 14, 4: 42}
        for ell in range(1, 5):
            seed = build_gamma_ell("A1", ell)
            verdict = classify_finite_type(seed.quiver)
            assert verdict.components == (("A", ell),)
            assert enumerate_exchange_graph(seed).n_clusters == catalan[ell]
        for typ, rank in (("A2", 2), ("A3", 3)):
            verdict = classify_finite_type(build_gamma_ell(typ, 1).quiver)
            assert verdict.components == (("A", rank),)


def test_gamma_a2_level2_is_d4():
    with criterion("grid quiver (A2, l=2): D4, 50 clusters, 16 + 2 variables", 30.0):
        seed = build_gamma_ell("A2", 2)
        verdict = classify_finite_type(seed.quiver)
        assert verdict.components == (("D", 4),)
        report = enumerate_exchange_graph(seed)
        assert report.n_clusters == 50
        assert report.n_variables - report.n_frozen == 16
        assert report.n_frozen == 2


def test_flag_euler_oracle():
    with criterion("flag counts: Euler numbers 1,1,2,2 totalling 6, lines count q+1", 10.0):
        import json
        from pathlib import Path
        module = module_from_json(json.loads(Path("data/a3_flag.json").read_text()))
        types = enumerate_types(module)
        assert types == [(2, 1, 2, 3), (2, 2, 1, 3), (2, 2, 3, 1), (2, 3, 2, 1)]
        eulers = {t: euler_characteristic(module, t) for t in types}
        assert eulers == {(2, 1, 2, 3): 1, (2, 3, 2, 1): 1,
                          (2, 2, 1, 3): 2, (2, 2, 3, 1): 2}
        assert sum(eulers.values()) == 6
        for t in [(2, 2, 1, 3), (2, 2, 3, 1)]:
            counts = dict(flag_count_details(module, t).counts)
            assert all(counts[q] == q + 1 for q in (2, 3, 5))


def test_laurent_phenomenon_walks():
    with criterion("Laurent suite: 200 depth-8 walks each from SL4 and grid A2 l=1", 60.0):
        for seed in (build_unitriangular_seed(3), build_gamma_ell("A2", 1)):
            for rng_seed in range(200):
                result = random_walk_laurent_check(seed, 8, rng_seed)
                assert result.ok, result


def test_positivity_across_all_finite_classes():
    with criterion("positivity: no negative coefficient in any finite class above", 60.0):
        seeds = [build_rank2(1), build_unitriangular_seed(3),
                 build_gamma_ell("A2", 1), build_gamma_ell("A3", 1),
                 build_gamma_ell("A2", 2)]
        seeds += [build_gamma_ell("A1", ell) for ell in range(1, 5)]
        for seed in seeds:
            report = enumerate_exchange_graph(seed)
            assert not report.truncated
            assert verify_positivity(report) == []


def test_f_polynomials_normalized_and_faithful():
    with criterion("coefficient polynomials: constant term 1, specialize to recover", 5.0):
        for seed in (build_rank2(1), build_gamma_ell("A2", 1)):
            table = f_polynomials(seed)
            assert all(f.constant_term() == 1 for f in table.values())
            report = enumerate_exchange_graph(seed)
            assert set(table) == set(report.variables)
