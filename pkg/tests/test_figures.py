from pillai.bounds import lemma15_bound, theorem2_fixed_points
from pillai.figures import render_bound_crossing, render_findings
from pillai.search import SearchBox, run_search


class TestBoundFigure:
    def test_fixed_point_report(self, tmp_path):
        report = theorem2_fixed_points()[0]
        path = render_bound_crossing(report, tmp_path / "case1.png")
        assert path.exists() and path.stat().st_size > 1000

    def test_lemma15_report_without_cap(self, tmp_path):
        report = lemma15_bound(1, 1, 2, 2, 5, 4)
        path = render_bound_crossing(report, tmp_path / "l15.png")
        assert path.exists() and path.stat().st_size > 1000


class TestFindingsFigure:
    def test_populated(self, tmp_path):
        box = SearchBox(
            a_range=(2, 5),
            b_range=(2, 5),
            r_range=(1, 4),
            s_range=(1, 4),
            c_range=(1, 12),
            exp_cap=16,
            min_n=3,
        )
        findings = list(run_search(box))
        assert findings
        path = render_findings(findings, tmp_path / "findings.png")
        assert path.exists() and path.stat().st_size > 1000

    def test_empty(self, tmp_path):
        path = render_findings([], tmp_path / "empty.png")
        assert path.exists() and path.stat().st_size > 0
