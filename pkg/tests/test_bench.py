import pytest

from incsig import SchemeParams
from incsig.analysis import cost_model
from incsig.bench import format_csv, format_report, measure_sign, measure_update, speedup_report

P2 = SchemeParams(256, 128, 2)
P4 = SchemeParams(256, 64, 4)
P8 = SchemeParams(256, 32, 8)


class TestMeasureSign:
    @pytest.mark.parametrize("m,want", [(1, (1, 0, 0)), (10, (10, 9, 0)), (200, (200, 199, 0))])
    def test_counters(self, m, want):
        counters, seconds = measure_sign(P2, m)
        assert counters.as_tuple() == want
        assert seconds > 0


class TestMeasureUpdate:
    @pytest.mark.parametrize("params", [P2, P4, P8])
    def test_counters_match_cost_model(self, params):
        model = cost_model(params, 64)
        for kind in ("insert", "replace", "delete"):
            counters, _ = measure_update(params, 64, kind)
            assert counters.as_tuple() == getattr(model, kind)

    def test_length_independent(self):
        for kind in ("insert", "replace", "delete"):
            small, _ = measure_update(P4, 100, kind)
            large, _ = measure_update(P4, 10_000, kind)
            assert small.as_tuple() == large.as_tuple()

    def test_odd_d_matches_closed_forms_too(self):
        # The closed forms are stated for even d; they hold for odd d as well.
        for params in (SchemeParams(24, 8, 3), SchemeParams(40, 8, 5)):
            model = cost_model(params, 64)
            for kind in ("insert", "replace", "delete"):
                counters, _ = measure_update(params, 64, kind)
                assert counters.as_tuple() == getattr(model, kind)

    def test_interior_index_required(self):
        with pytest.raises(ValueError):
            measure_update(P8, 4, "replace")


class TestSpeedupReport:
    def test_eval_ratio(self):
        rows = speedup_report(P2, [100, 400], op_kind="replace")
        assert [r.m for r in rows] == [100, 400]
        assert rows[0].eval_ratio == 100 / 2
        assert rows[1].eval_ratio == 400 / 2
        assert rows[0].update_counters.as_tuple() == rows[1].update_counters.as_tuple()

    def test_formatting(self):
        rows = speedup_report(P2, [50])
        text = format_report(rows)
        assert "50" in text and "ratio" in text
        csv = format_csv(rows)
        assert csv.splitlines()[0].startswith("m,sign_hash_evals")
        assert csv.splitlines()[1].startswith("50,50,49,0,2,1,1,")
