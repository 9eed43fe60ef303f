#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liyorke/catalog.hpp"
#include "liyorke/report.hpp"

namespace py = pybind11;
using namespace liyorke;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Li-Yorke sensitivity laboratory core";
  m.attr("__version__") = kVersion;

  py::class_<Point>(m, "Point")
      .def(py::init([](double coord, int label) {
             return Point{coord, label};
           }),
           py::arg("coord"), py::arg("label") = 0)
      .def_readwrite("coord", &Point::coord)
      .def_readwrite("label", &Point::label)
      .def("__repr__", [](const Point& p) {
        return "Point(" + format_double(p.coord) + ", " +
               std::to_string(p.label) + ")";
      });

  py::class_<System>(m, "System")
      .def_static("rotation", &System::rotation, py::arg("alpha") = kGoldenAlpha)
      .def_static("doubling", &System::doubling)
      .def_static("product", &System::product, py::arg("base"), py::arg("k"))
      .def_static("periodic_hybrid", &System::periodic_hybrid,
                  py::arg("periodic_fraction"))
      .def_static("identity", &System::identity)
      .def_property_readonly("name", &System::name)
      .def_property_readonly("components", &System::component_count)
      .def_property_readonly("tags", [](const System& s) {
        std::vector<std::string> out;
        for (GroundTruth t : s.tags()) out.emplace_back(ground_truth_name(t));
        return out;
      });

  py::class_<Metric>(m, "Metric")
      .def_static("circle_arc", &Metric::circle_arc)
      .def_static("euclidean", &Metric::euclidean)
      .def_static("discrete", &Metric::discrete)
      .def_static("pullback", &Metric::pullback, py::arg("xs"), py::arg("ys"))
      .def_static("sum_product", &Metric::sum_product, py::arg("base"),
                  py::arg("label_distance"))
      .def_static("arc_partition", &Metric::arc_partition, py::arg("m"),
                  py::arg("intra"))
      .def_static("dynamic_sup", &Metric::dynamic_sup, py::arg("base"),
                  py::arg("horizon"))
      .def_property_readonly("name", &Metric::name)
      .def("eval",
           [](const Metric& metric, const Point& p, const Point& q,
              const System* sys) {
             return sys ? metric.eval(p, q, *sys) : metric.eval(p, q);
           },
           py::arg("p"), py::arg("q"), py::arg("system") = nullptr);

  py::class_<AnalysisConfig>(m, "AnalysisConfig")
      .def(py::init<>())
      .def_readwrite("horizon", &AnalysisConfig::horizon)
      .def_readwrite("burn_in", &AnalysisConfig::burn_in)
      .def_readwrite("eps", &AnalysisConfig::eps_prox)
      .def_readwrite("delta", &AnalysisConfig::delta_sep)
      .def_readwrite("pairs", &AnalysisConfig::pair_count)
      .def_readwrite("seed", &AnalysisConfig::seed)
      .def_static("with_horizon", &AnalysisConfig::with_horizon, py::arg("n"),
                  py::arg("pairs"), py::arg("seed"));

  py::class_<PairStats>(m, "PairStats")
      .def_readonly("tail_min", &PairStats::tail_min)
      .def_readonly("tail_max", &PairStats::tail_max);

  py::class_<LiYorkeVerdict>(m, "LiYorkeVerdict")
      .def_readonly("proximal", &LiYorkeVerdict::proximal)
      .def_readonly("separated", &LiYorkeVerdict::separated)
      .def_readonly("li_yorke", &LiYorkeVerdict::li_yorke);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("value", &Estimate::value)
      .def_readonly("half_width", &Estimate::half_width);

  py::class_<CorrelationReport>(m, "CorrelationReport")
      .def_readonly("score", &CorrelationReport::score)
      .def_readonly("partition", &CorrelationReport::partition)
      .def_readonly("cells", &CorrelationReport::cells)
      .def_readonly("pair_means", &CorrelationReport::pair_means);

  m.def("iterate", &iterate, py::arg("system"), py::arg("point"), py::arg("n"));
  m.def("circle_distance", &circle_distance, py::arg("x"), py::arg("y"));
  m.def("build_eigenfunction_partition", &build_eigenfunction_partition,
        py::arg("m"));
  m.def("build_spillover_metric", &build_spillover_metric, py::arg("system"));

  m.def("pair_stats", &pair_stats, py::arg("system"), py::arg("metric"),
        py::arg("p"), py::arg("q"), py::arg("config"));
  m.def("classify", &classify, py::arg("stats"), py::arg("config"));
  m.def("li_yorke_density", &li_yorke_density, py::arg("system"),
        py::arg("metric"), py::arg("config"), py::arg("threads") = 1);
  m.def("sensitivity_profile", &sensitivity_profile, py::arg("system"),
        py::arg("metric"), py::arg("x"), py::arg("config"),
        py::arg("threads") = 1);
  m.def("weak_mixing_score", &weak_mixing_score, py::arg("system"),
        py::arg("k"), py::arg("horizon"), py::arg("samples"), py::arg("seed"),
        py::arg("threads") = 1);
  m.def("classify_weak_mixing", &classify_weak_mixing, py::arg("report"),
        py::arg("threshold") = kWeakMixingThreshold);
  m.def("doubling_joint_exact", &doubling_joint_exact);
  m.def("rotation_joint_exact", &rotation_joint_exact);

  m.def("catalog_systems", &catalog_system_names);
  m.def("catalog_metrics", &catalog_metric_names);
  m.def("catalog_system", &catalog_system, py::arg("name"));
  m.def("catalog_metric", &catalog_metric, py::arg("name"), py::arg("system"));

  m.def(
      "run_theorems",
      [](std::uint64_t seed, const std::string& scale, int threads,
         const std::string& metric_override) {
        SuiteResult suite =
            run_theorem_suite(seed, scale == "full" ? Scale::Full : Scale::Quick,
                              threads, metric_override);
        return py::module_::import("json").attr("loads")(
            suite_to_json(suite).dump());
      },
      py::arg("seed") = 7, py::arg("scale") = "quick", py::arg("threads") = 1,
      py::arg("metric_override") = "");
}
