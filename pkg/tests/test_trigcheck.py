import mpmath as mp
import pytest

from fibmod5.quintic import sin_odd_ratio, sin_ratio
from fibmod5.trigcheck import (
    CHECK_IDS,
    cor10_check,
    cosecant_sum_check,
    lemma1_check,
    run_check,
    sample_points,
    t_u_trig_check,
    waring_trig_check,
    z1mhbc2_check,
)


def _all_pass(records):
    for r in records:
        if r.skipped:
            assert r.skip_reason, r
            assert r.lhs is None and r.passed is None
        else:
            assert r.passed, (r.check_id, r.n, float(r.abs_error))


def test_sample_point_set_shape():
    pts = sample_points()
    assert len(pts) == 14
    assert all(0 < float(p) < float(mp.pi) + 1e-12 for p in pts)
    with mp.workprec(120):
        assert abs(pts[-2] - mp.pi / 5) < mp.mpf("1e-30")
        assert abs(pts[-1] - 3 * mp.pi / 5) < mp.mpf("1e-30")


def test_positive_n_required():
    for fn in (lambda: lemma1_check(0, mp.mpf("0.3")),
               lambda: waring_trig_check(0, mp.mpf("0.3")),
               lambda: t_u_trig_check(0, mp.mpf("0.3")),
               lambda: cosecant_sum_check(0, mp.mpf("0.3")),
               lambda: z1mhbc2_check(0, 0),
               lambda: cor10_check(0)):
        with pytest.raises(ValueError):
            fn()


def test_lemma1_n1_sin_form_is_one():
    recs = lemma1_check(1, mp.mpf("0.7"))
    sin_rec = [r for r in recs if r.check_id == "lemma1/sin"][0]
    assert sin_rec.lhs == 1
    assert abs(sin_rec.rhs - 1) < mp.mpf("1e-30")


def test_waring_parity_selection():
    ids_odd = {r.check_id for r in waring_trig_check(3, mp.mpf("0.3"))}
    ids_even = {r.check_id for r in waring_trig_check(2, mp.mpf("0.3"))}
    assert "waring-trig/sin-odd" in ids_odd and "waring-trig/cos-even" not in ids_odd
    assert "waring-trig/cos-even" in ids_even and "waring-trig/sin-odd" not in ids_even


def test_cosecant_single_term_case():
    with mp.workprec(150):
        x = mp.mpf("1.0")
        rec = cosecant_sum_check(1, x)[0]
        assert abs(rec.lhs - (-1 / (mp.cos(x) + 1))) < mp.mpf("1e-40")
        assert rec.passed


def test_cosecant_skips_at_poles():
    # x = pi/5 is a node cos(pi*k/n) whenever 5 divides n.
    rec = cosecant_sum_check(5, mp.pi / 5)[0]
    assert rec.skipped and "node" in rec.skip_reason


def test_z1mhbc2_point_example():
    recs = z1mhbc2_check(1, 0)
    lucas_rec = [r for r in recs if r.check_id == "z1mhbc2/lucas"][0]
    assert abs(lucas_rec.rhs - (-1)) < mp.mpf("1e-30")
    assert lucas_rec.passed


def test_z1mhbc2_skips_multiples_of_five():
    recs = z1mhbc2_check(10, 3)
    assert all(r.skipped for r in recs)
    assert all("n = 0 (mod 5)" in r.skip_reason for r in recs)
    recs = cor10_check(15)
    assert all(r.skipped for r in recs)


def test_exact_numeric_coherence_at_quintic_angles():
    # dual-Waring sum at pi/5 equals the exact golden-ring sine ratio.
    for n in range(1, 40):
        rec = [r for r in waring_trig_check(n, mp.pi / 5)
               if r.check_id == "waring-trig/dual-cos"][0]
        assert abs(rec.lhs - sin_ratio(n + 1).to_float()) < 1e-10, n
    # odd-ratio sum at pi/5 equals the exact (2n+1) sine ratio.
    for n in range(1, 40):
        rec = [r for r in t_u_trig_check(n, mp.pi / 5)
               if r.check_id == "t-u-trig/odd-ratio"][0]
        assert abs(rec.lhs - sin_odd_ratio(n).to_float()) < 1e-10, n


def test_all_suites_pass_up_to_n25():
    for cid in CHECK_IDS:
        _all_pass(run_check(cid, (1, 25), (-3, 3)))


def test_no_silent_skips():
    for cid in CHECK_IDS:
        for r in run_check(cid, (1, 25), (-2, 2)):
            if r.skipped:
                assert isinstance(r.skip_reason, str) and r.skip_reason


def test_run_check_rejects_unknown_id():
    with pytest.raises(ValueError):
        run_check("nope", (1, 5), (0, 0))


def test_records_are_deterministic():
    a = run_check("lemma1", (1, 8), (0, 0))
    b = run_check("lemma1", (1, 8), (0, 0))
    assert [(r.check_id, r.n, mp.nstr(r.x, 20)) for r in a] == \
        [(r.check_id, r.n, mp.nstr(r.x, 20)) for r in b]
    assert all(ra.lhs == rb.lhs for ra, rb in zip(a, b) if not ra.skipped)
