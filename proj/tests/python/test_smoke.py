import os
import sys

module_dir = os.environ.get("LIYORKE_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

import _core as ly  # noqa: E402


def test_iterate_doubling():
    p = ly.iterate(ly.System.doubling(), ly.Point(0.1), 1)
    assert abs(p.coord - 0.2) < 1e-15


def test_metric_eval():
    m = ly.Metric.circle_arc()
    assert m.eval(ly.Point(0.0), ly.Point(0.5)) == 0.5
    sm = ly.Metric.sum_product(ly.Metric.circle_arc(), 1.0)
    assert sm.eval(ly.Point(0.4, 0), ly.Point(0.4, 1)) == 1.0


def test_density_contrast():
    cfg = ly.AnalysisConfig.with_horizon(2000, 300, 7)
    rot = ly.li_yorke_density(ly.System.rotation(), ly.Metric.circle_arc(), cfg)
    assert rot.value == 0.0
    dbl = ly.li_yorke_density(ly.System.doubling(), ly.Metric.circle_arc(), cfg)
    assert dbl.value >= 0.95


def test_exact_oracles():
    assert ly.doubling_joint_exact(8, 3, 5, 10) == (1 / 8) * (1 / 8)
    assert abs(ly.rotation_joint_exact(0.25, 4, 0, 3, 1) - 0.25) < 1e-12


def test_spillover_refusal():
    try:
        ly.build_spillover_metric(ly.System.periodic_hybrid(0.5))
    except ValueError:
        pass
    else:
        raise AssertionError("expected a refusal")


def test_theorem_suite_quick():
    suite = ly.run_theorems(seed=7, scale="quick")
    assert suite["all_pass"] is True
    assert len(suite["checks"]) == 8


def test_catalog():
    assert "doubling" in ly.catalog_systems()
    sys_ = ly.catalog_system("rotation")
    assert "isometry_admitting" in sys_.tags
