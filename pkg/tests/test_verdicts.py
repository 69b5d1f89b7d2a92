import random
import warnings

import pytest

from calibfree.manifolds import CATALOG, ManifoldClass, catalog_lookup, char_class_status, multi_sum
from calibfree.verdicts import (
    EXTERNAL,
    Reason,
    Verdict,
    cayley_free_embedding,
    chi_vanishing_g2_target,
    coassociative_free_immersion,
    full_report,
    gauss_contractibility,
    parallelizable,
    replay,
)

K3 = catalog_lookup("K3")
T4 = catalog_lookup("T4")
S4 = catalog_lookup("S4")
FAMILY1 = multi_sum([(1, catalog_lookup("M1", (11,))), (2, K3)])


def random_tuples(n, seed=20261014):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        spin = rng.random() < 0.5
        tau = 16 * rng.randint(-3, 3) if spin else rng.randint(-40, 40)
        chi = tau + 2 * rng.randint(-30, 30)
        if rng.random() < 0.1:
            chi = tau = 0
        out.append(ManifoldClass(f"X{len(out)}", chi, tau, spin))
    return out


def catalog_sample():
    out = []
    for e in CATALOG:
        if e.arity == 0:
            out.append(e.build(()))
        elif e.arity == 1:
            out.extend(e.build((n,)) for n in range(1, 6))
        else:
            out.extend(e.build((g, h)) for g in range(1, 4) for h in range(1, 4))
    return out


SAMPLE = catalog_sample() + random_tuples(500)


class TestImmersion:
    def test_t4(self):
        v = coassociative_free_immersion(T4)
        assert v.yes
        assert any(r.kind == EXTERNAL for r in v.reasons)

    def test_family1_no(self):
        v = coassociative_free_immersion(FAMILY1)
        assert not v.yes
        assert v.reasons[0].values == {"i_ass": 48, "i_ass_tilde": 48}

    def test_s4_no(self):
        assert not coassociative_free_immersion(S4).yes


class TestCayley:
    def test_zero_tuple(self):
        v = cayley_free_embedding(ManifoldClass("X", 0, 0, True))
        assert v.yes

    def test_k3(self):
        v = cayley_free_embedding(K3)
        assert not v.yes
        assert v.reasons[0].values == {"i_cay": -36, "i_cay_tilde": -12}

    def test_parallelizable_family_member(self):
        m = multi_sum([(1, catalog_lookup("M1", (1,))), (2, catalog_lookup("S2xS2"))])
        assert m.invariants == (0, 0, True)
        assert cayley_free_embedding(m).yes


class TestChiCriterion:
    def test_nonzero_chi(self):
        assert not chi_vanishing_g2_target(ManifoldClass("X", 4, 0, True)).yes

    def test_silent(self):
        v = chi_vanishing_g2_target(ManifoldClass("X", 0, 0, True))
        assert v.yes
        assert "necessary, not sufficient" in v.reasons[0].claim

    def test_cross_reference(self):
        m = ManifoldClass("X", 0, 16, False)
        v = chi_vanishing_g2_target(m)
        assert v.yes and len(v.reasons) == 2
        assert v.reasons[1].supports is None
        assert "still fails" in v.reasons[1].claim
        assert not coassociative_free_immersion(m).yes


class TestParallelizable:
    def test_zero(self):
        assert parallelizable(ManifoldClass("X", 0, 0, True)).yes
        assert parallelizable(T4).yes

    def test_family1(self):
        v = parallelizable(FAMILY1)
        assert not v.yes
        p1 = [r for r in v.reasons if "p1" in r.values][0]
        assert p1.values["p1"] == -96 and p1.supports is False
        assert [r.supports for r in v.reasons] == [True, True, True, False]

    def test_non_spin(self):
        assert not parallelizable(ManifoldClass("X", 0, 0, False)).yes


class TestLedger:
    def test_contractible(self):
        led = gauss_contractibility(ManifoldClass("X", 0, 0, True))
        assert led.contractible
        assert [s.vanishes for s in led.stages] == [True, True, True]
        assert led.hurewicz.provable
        assert any("parallelizable" in n for n in led.notes)

    def test_blocked_o2(self):
        led = gauss_contractibility(ManifoldClass("X", 0, 0, False))
        assert led.conclusion == "blocked-at-o2"
        assert led.o2.vanishes is False
        assert led.o3.vanishes is None and led.o4.vanishes is None
        assert led.o3.status == "unevaluated"
        assert led.hurewicz is None

    def test_blocked_o4(self):
        led = gauss_contractibility(K3)
        assert led.conclusion == "blocked-at-o4"
        assert led.o2.vanishes and led.o3.vanishes and led.o4.vanishes is False
        assert (led.o4.values["cp2"], led.o4.values["cp2bar"]) == (36, 12)

    def test_groups(self):
        led = gauss_contractibility(T4)
        assert led.o2.group == "H^2(M; Z2)"
        assert "Z + Z" in led.o4.group


def test_verdict_consistency_checks():
    r = Reason("c", "x", supports=False)
    with pytest.raises(ValueError):
        Verdict("q", "yes", (r,))
    with pytest.raises(ValueError):
        Verdict("q", "maybe", (r,))
    with pytest.raises(ValueError):
        Verdict("q", "no", (Reason("c", "x"),))


def test_equivalent_criteria_agree():
    for m in SAMPLE:
        zero = (m.euler, m.signature) == (0, 0)
        assert coassociative_free_immersion(m).yes == zero
        assert cayley_free_embedding(m).yes == zero


def test_implication_chain():
    for m in SAMPLE:
        if gauss_contractibility(m).contractible:
            assert parallelizable(m).yes
        if parallelizable(m).yes:
            assert coassociative_free_immersion(m).yes
            assert char_class_status(m).all_vanish


def test_chi_criterion_never_contradicts():
    for m in SAMPLE:
        if coassociative_free_immersion(m).yes:
            assert chi_vanishing_g2_target(m).yes


def test_certificates_replay():
    for m in SAMPLE[:200]:
        rep = full_report(m)
        for v in rep.verdicts.values():
            for r in v.reasons:
                assert replay(r), (m, r)


def test_replay_detects_tampering():
    r = coassociative_free_immersion(K3).reasons[0]
    bad = Reason(r.claim, r.citation, r.kind, r.operation, r.args, {"i_ass": 35}, r.supports)
    assert not replay(bad)


class TestFullReport:
    def test_t4_all_yes(self):
        rep = full_report(T4)
        assert all(v.yes for v in rep.verdicts.values())
        assert rep.ledger.contractible

    def test_cp2_all_no(self):
        rep = full_report(catalog_lookup("CP2"))
        assert not any(v.yes for v in rep.verdicts.values())
        assert rep.ledger.conclusion == "blocked-at-o2"

    def test_m2(self):
        m = catalog_lookup("M2", (1, 1))
        rep = full_report(m)
        assert m.euler == -4
        assert not rep.verdicts["coassociative_free_immersion"].yes
        assert not rep.verdicts["parallelizable"].yes

    def test_intersections(self):
        rep = full_report(K3)
        assert rep.intersections == {"ass": 36, "ass_tilde": 12, "ass_degree8": 36,
                                     "cay": -36, "cay_tilde": -12}
        assert rep.gauss_g37.as_tuple() == (36, 12)
