import json

import pytest

from idealfam.core import IdealFamily, PreconditionError, degree_one_family, nds, power_set, validate_ideal
from idealfam.enumeration import enumerate_ideal_families, random_ideal_family
from idealfam.minors import contraction_ideal, ideal_deletion
from idealfam.replay import (
    CaseTag,
    IdentityMismatch,
    check_case_identity,
    classify_case,
    replay_induction,
)


def test_classify_examples(fam32):
    assert classify_case(IdealFamily(1, (0, 1)), 0) is CaseTag.BASE
    assert classify_case(degree_one_family(4), 3) is CaseTag.DEG1_WITH_UV
    assert classify_case(validate_ideal(fam32), 2) is CaseTag.DEG_GE2_WITH_UV


def test_classify_remaining_cases():
    # {0},{1},{0,1} present, {2} only via U, U - {2} present -> deg 1 with UV
    F = IdealFamily(7, (0, 1, 2, 3, 7))
    assert classify_case(F, 2) is CaseTag.DEG1_WITH_UV
    # U - {2} = {0,1} absent, deg(2) = 1
    G = IdealFamily(7, (0, 1, 2, 7))
    assert classify_case(G, 2) is CaseTag.DEG1_NO_UV
    # {2} present, U - {2} absent
    H = IdealFamily(7, (0, 1, 2, 4, 7))
    assert classify_case(H, 2) is CaseTag.DEG_GE2_NO_UV


def test_classify_rejects_non_rare(fam32):
    with pytest.raises(PreconditionError):
        classify_case(validate_ideal(fam32), 0)


def test_case_identity_fam32(fam32):
    F = validate_ideal(fam32)
    lhs, rhs = check_case_identity(F, 2, CaseTag.DEG_GE2_WITH_UV)
    assert (lhs, rhs) == (-1, -1)
    assert nds(ideal_deletion(F, 2)) == 0
    assert nds(contraction_ideal(F, 2)) == 0


def test_case_identity_deg1_closed_form():
    F = IdealFamily(7, (0, 1, 2, 3, 7))
    assert check_case_identity(F, 2, CaseTag.DEG1_WITH_UV) == (-1, -1)


def test_case_identity_base():
    assert check_case_identity(IdealFamily(1, (0, 1)), 0, CaseTag.BASE) == (0, 0)


def test_case_identity_tag_mismatch(fam32):
    with pytest.raises(PreconditionError):
        check_case_identity(validate_ideal(fam32), 2, CaseTag.DEG1_NO_UV)


def test_replay_base():
    cert = replay_induction(IdealFamily(1, (0, 1)))
    assert cert.case is CaseTag.BASE and cert.children == () and cert.depth() == 1


def test_replay_fam32(fam32):
    cert = replay_induction(validate_ideal(fam32))
    assert cert.case is CaseTag.DEG_GE2_WITH_UV
    assert len(cert.children) == 2
    assert all(node.nds <= 0 for node in cert.nodes())
    d = json.loads(cert.to_json())
    assert d["case"] == "DegGe2WithUV" and len(d["children"]) == 2
    assert "DegGe2WithUV" in cert.render()


@pytest.mark.parametrize("n", range(2, 7))
def test_replay_degree_one_family_is_leaf(n):
    cert = replay_induction(degree_one_family(n))
    assert cert.case is CaseTag.DEG1_WITH_UV
    assert cert.children == ()
    assert cert.nds == n - 2 ** (n - 1)


def _check_tree(cert):
    for node in cert.nodes():
        assert node.identity_lhs == node.identity_rhs
        assert node.nds <= 0
        F = node.family
        if node.case is CaseTag.DEG1_WITH_UV:
            n = F.n
            assert len(F) == 2 ** (n - 1) + 1
            assert sum(e.bit_count() for e in F.edges) == (n - 1) * 2 ** (n - 2) + n
        if node.case is CaseTag.DEG_GE2_NO_UV:
            delp, con = node.children
            assert delp.nds <= 0 and con.nds <= 0 and F.n >= 2
        if node.case in (CaseTag.BASE, CaseTag.DEG1_WITH_UV):
            assert node.children == ()
    assert cert.depth() <= cert.family.n


@pytest.mark.parametrize("n", range(1, 5))
def test_replay_exhaustive(n):
    seen = set()
    for F in enumerate_ideal_families(n):
        cert = replay_induction(F)
        _check_tree(cert)
        seen.update(node.case for node in cert.nodes())
    if n >= 3:
        assert seen == set(CaseTag)


def test_replay_random_n8():
    for seed in range(100):
        _check_tree(replay_induction(random_ideal_family(8, seed)))


def test_replay_power_sets():
    for n in range(1, 7):
        _check_tree(replay_induction(power_set(n)))


def test_identity_mismatch_is_raised(monkeypatch, fam32):
    import idealfam.replay as rp

    monkeypatch.setattr(rp, "nds", lambda F: 5)
    with pytest.raises(IdentityMismatch):
        rp.check_case_identity(validate_ideal(fam32), 2, CaseTag.DEG_GE2_WITH_UV)
