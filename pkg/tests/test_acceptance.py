"""Acceptance criteria, one test each.

Every test prints a single ``PASS`` or ``FAIL`` line (visible in ``pytest -v``
output even with capture on) and then asserts.  The file also runs as a script:
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time

import pytest

from idealfam.core import (
    SetFamily,
    degree,
    degree_one_family,
    degrees,
    is_ideal,
    is_intersection_closed,
    nds,
    rare_vertex_certificate,
    rare_vertices,
    tsh,
    validate_ideal,
)
from idealfam.enumeration import (
    count_downward_closed,
    count_ideal_families,
    enumerate_ideal_families,
    ideal_family_masks,
    random_ideal_family,
    run_campaign,
    search_intersection_closed_violations,
    search_is_exhaustive,
    verify_rare_vertex_conjecture,
)
from idealfam.minors import (
    check_decomposition_identities,
    contraction,
    degree_one_characterization,
    ideal_deletion,
    trace,
)
from idealfam.replay import replay_induction
from idealfam.serialize import format_family, parse_family


@pytest.fixture
def report(capsys):
    def emit(num: int, ok: bool, detail: str, t0: float) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail} ({time.perf_counter() - t0:.2f}s)"
        with capsys.disabled():
            print("\n" + line)
    return emit


# The three worked families, 0-based vertices.
POWER_SET_2 = SetFamily(3, (0, 1, 2, 3))
IDEAL_3 = SetFamily(7, (0, 1, 2, 4, 3, 5, 7))
INTERSECTION_CLOSED_3 = SetFamily(7, (0, 1, 3, 5, 7))


def test_criterion_1_golden_examples(report):
    t0 = time.perf_counter()
    got = [
        (len(POWER_SET_2), tsh(POWER_SET_2), nds(POWER_SET_2)),
        (tuple(degrees(IDEAL_3)), tsh(IDEAL_3), nds(IDEAL_3)),
        (nds(INTERSECTION_CLOSED_3), is_ideal(INTERSECTION_CLOSED_3), rare_vertices(INTERSECTION_CLOSED_3)),
    ]
    want = [(4, 4, 0), ((4, 3, 3), 10, -1), (1, False, [1, 2])]
    ok = got == want
    report(1, ok, f"golden examples {got}", t0)
    assert ok


def test_criterion_2_degree_one_closed_form(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 11):
        F = degree_one_family(n) if n > 1 else validate_ideal(SetFamily(1, (0, 1)))
        # n = 1: the only ideal family is {0, U}; the formulas still apply
        want = (2 ** (n - 1) + 1, (n - 1) * 2 ** (n - 2) + n if n > 1 else 1, n - 2 ** (n - 1))
        got = (len(F), tsh(F), nds(F))
        if got != want:
            bad.append((n, got, want))
    report(2, not bad, f"closed form n=1..10, mismatches={bad}", t0)
    assert not bad


def test_criterion_3_exhaustive_n_le_5(report):
    t0 = time.perf_counter()
    counts, problems = [], []
    for n in range(1, 6):
        fams = list(enumerate_ideal_families(n))
        counts.append(len(fams))
        for F in fams:
            if nds(F) > 0:
                problems.append(("nds", F))
            cert = rare_vertex_certificate(F)
            if cert.problems(F):
                problems.append(("certificate", F))
            if n >= 2:
                for v in F.vertices:
                    if not check_decomposition_identities(F, v).ok:
                        problems.append(("identity", F, v))
    agree = sorted(ideal_family_masks(5, "downset").tolist()) == sorted(ideal_family_masks(5, "antichain").tolist())
    ok = counts == [1, 4, 18, 166, 7579] and not problems and agree
    report(3, ok, f"counts={counts} strategies_agree={agree} problems={len(problems)}", t0)
    assert ok, problems[:5]


def test_criterion_4_n6_campaign(report):
    t0 = time.perf_counter()
    st = run_campaign(6, deep=True)
    downsets = count_downward_closed(6)
    antichain = count_ideal_families(6, "antichain")
    ok = (st.families_visited == 7_828_352 and st.violations == 0 and st.nds_max <= 0
          and downsets - 2 == st.families_visited and antichain == st.families_visited)
    report(4, ok, f"n=6 visited={st.families_visited} violations={st.violations} nds_max={st.nds_max} "
                  f"downsets-2={downsets - 2} antichain={antichain}", t0)
    assert ok


def _tree_ok(cert) -> bool:
    return cert.depth() <= cert.family.n and all(
        node.identity_lhs == node.identity_rhs and node.nds <= 0 for node in cert.nodes())


def test_criterion_5_replay(report):
    t0 = time.perf_counter()
    failures, replays = 0, 0
    for n in range(1, 6):
        for F in enumerate_ideal_families(n):
            replays += 1
            failures += not _tree_ok(replay_induction(F))
    for seed in range(1000):
        replays += 1
        failures += not _tree_ok(replay_induction(random_ideal_family(8, seed)))
    ok = failures == 0 and replays == 7768 + 1000
    report(5, ok, f"replays={replays} failures={failures}", t0)
    assert ok


def test_criterion_6_counterexample_search(report):
    t0 = time.perf_counter()
    found = list(search_intersection_closed_violations(3, True, True))
    ok = (bool(found) and search_is_exhaustive(3) and INTERSECTION_CLOSED_3 in found
          and all(is_intersection_closed(F) and nds(F) > 0 and not is_ideal(F) for F in found))
    report(6, ok, f"n=3 found={len(found)} worked example present={INTERSECTION_CLOSED_3 in found}", t0)
    assert ok


def test_criterion_7_conjecture_small_n(report):
    t0 = time.perf_counter()
    reps = [verify_rare_vertex_conjecture(n) for n in range(1, 5)]
    ok = all(r.failures == 0 for r in reps)
    report(7, ok, "checked=" + ",".join(str(r.families_checked) for r in reps)
           + " failures=" + str(sum(r.failures for r in reps)), t0)
    assert ok


def _property_failures(F) -> list[str]:
    out = []
    if tsh(F) != sum(degrees(F)) or tsh(F) != sum(e.bit_count() for e in F.edges):
        out.append("double counting")
    text = format_family(F)
    G = parse_family(text)
    if G != F or format_family(G) != text:
        out.append("round trip")
    if F.n < 2:
        return out
    for v in F.vertices:
        if not is_ideal(ideal_deletion(F, v)):
            out.append("ideal deletion")
        if (1 << v) in F and not is_ideal(contraction(F, v)):
            out.append("contraction")
        if not is_ideal(trace(F, v)):
            out.append("trace")
        d = degree(F, v)
        if degree_one_characterization(F, v) != (d != 1) or ((1 << v) in F) != (d != 1):
            out.append("degree one")
        if d == 1 and trace(F, v) != ideal_deletion(F, v):
            out.append("trace = ideal deletion")
    return out


def test_criterion_8_property_suite(report):
    t0 = time.perf_counter()
    tally: dict[str, int] = {}
    for seed in range(10_000):
        F = random_ideal_family(1 + seed % 12, seed)
        for name in _property_failures(F):
            tally[name] = tally.get(name, 0) + 1
    ok = not tally
    report(8, ok, f"10000 families n in [1,12], failures={tally}", t0)
    assert ok


@pytest.mark.deep
def test_n6_isomorphism_classes():
    st = run_campaign(6, verify_nds=False, up_to_iso=True, deep=True)
    assert st.families_visited == 7_828_352
    assert st.classes is not None and 208 < st.classes < st.families_visited


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
