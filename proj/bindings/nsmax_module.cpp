#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsmax/bounds.hpp"
#include "nsmax/certify.hpp"
#include "nsmax/ggm.hpp"
#include "nsmax/greedy.hpp"
#include "nsmax/matroid.hpp"
#include "nsmax/poisson_tail.hpp"
#include "nsmax/random_instances.hpp"
#include "nsmax/scenario_io.hpp"
#include "nsmax/set_function.hpp"
#include "nsmax/simulate.hpp"
#include "nsmax/visibility.hpp"

namespace py = pybind11;
using namespace nsmax;

namespace {

Subset to_subset(int n, const std::vector<int>& elements) {
  Subset s(n);
  for (int v : elements) s.insert(v);
  return s;
}

BaselineMethod baseline_from_name(const std::string& name) {
  if (name == "random") return BaselineMethod::kRandom;
  if (name == "CP") return BaselineMethod::kCompetitionPrioritized;
  if (name == "UP") return BaselineMethod::kUserRatePrioritized;
  if (name == "CUP") return BaselineMethod::kCombined;
  throw std::invalid_argument("unknown baseline method '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_nsmax, m) {
  m.doc() = "Greedy maximization of monotone non-submodular set functions under matroid "
            "constraints, with brute-force certification and the top-K visibility and "
            "Gaussian-tree applications";

  py::class_<SetFunction>(m, "SetFunction")
      .def(py::init([](int n, py::function oracle, bool memoize) {
             return SetFunction(
                 n,
                 [oracle](const Subset& s) { return oracle(s.elements()).cast<double>(); },
                 memoize);
           }),
           py::arg("ground_size"), py::arg("oracle"), py::arg("memoize") = true,
           "Value oracle over subsets (lists of element ids); normalized so that "
           "the empty set evaluates to 0.")
      .def_property_readonly("ground_size", &SetFunction::ground_size)
      .def_property_readonly("eval_count", &SetFunction::eval_count)
      .def("value",
           [](const SetFunction& f, const std::vector<int>& s) {
             return f.value(to_subset(f.ground_size(), s));
           })
      .def("marginal", [](const SetFunction& f, const std::vector<int>& omega,
                          const std::vector<int>& base) {
        return f.marginal(to_subset(f.ground_size(), omega), to_subset(f.ground_size(), base));
      });

  m.def("modular_function", [](std::vector<double> w) { return modular_function(std::move(w)); });
  m.def(
      "check_monotone",
      [](const SetFunction& f, double tol) { return check_monotone(f, tol); }, py::arg("f"),
      py::arg("tol") = kZeroGainTol);
  m.def(
      "is_submodular", [](const SetFunction& f, double tol) { return is_submodular(f, tol); },
      py::arg("f"), py::arg("tol") = 1e-9);

  py::class_<Matroid>(m, "Matroid")
      .def_static("uniform", &Matroid::uniform, py::arg("ground_size"), py::arg("k"))
      .def_static("partition", &Matroid::partition, py::arg("block_of"), py::arg("capacities"))
      .def_static("graphic", &Matroid::graphic, py::arg("n_vertices"), py::arg("edges"))
      .def_property_readonly("ground_size", &Matroid::ground_size)
      .def_property_readonly("kind", &Matroid::kind_name)
      .def("is_independent",
           [](const Matroid& mat, const std::vector<int>& s) {
             return mat.is_independent(to_subset(mat.ground_size(), s));
           })
      .def("rank", [](const Matroid& mat) { return mat.rank(); })
      .def("rank", [](const Matroid& mat, const std::vector<int>& s) {
        return mat.rank(to_subset(mat.ground_size(), s));
      });

  m.def("verify_axioms", [](const Matroid& mat) {
    AxiomReport report = verify_axioms(mat);
    py::dict out;
    out["non_emptiness"] = report.non_emptiness;
    out["heredity"] = report.heredity;
    out["exchange"] = report.exchange;
    out["all_pass"] = report.all_pass();
    return out;
  });

  py::class_<GreedyTrace>(m, "GreedyTrace")
      .def_readonly("selected", &GreedyTrace::selected)
      .def_readonly("considered", &GreedyTrace::considered)
      .def_readonly("gains", &GreedyTrace::gains)
      .def_readonly("final_value", &GreedyTrace::final_value)
      .def_readonly("oracle_calls", &GreedyTrace::oracle_calls)
      .def_readonly("negative_gain_warning", &GreedyTrace::negative_gain_warning)
      .def("to_csv", &trace_to_csv);

  m.def("greedy_maximize", &greedy_maximize, py::arg("f"), py::arg("matroid"));
  m.def("brute_force_opt", [](const SetFunction& f, const Matroid& mat) {
    OptResult r = brute_force_opt(f, mat);
    return py::make_tuple(r.argmax.elements(), r.value);
  });

  py::class_<RatioCertificate>(m, "RatioCertificate")
      .def_readonly("gamma", &RatioCertificate::gamma)
      .def_readonly("alpha", &RatioCertificate::alpha)
      .def_readonly("monotone", &RatioCertificate::monotone)
      .def_property_readonly("witness_gamma",
                             [](const RatioCertificate& c) -> py::object {
                               if (!c.witness_gamma) return py::none();
                               return py::make_tuple(c.witness_gamma->omega.elements(),
                                                     c.witness_gamma->base.elements(),
                                                     c.witness_gamma->ratio);
                             })
      .def_property_readonly("witness_alpha", [](const RatioCertificate& c) -> py::object {
        if (!c.witness_alpha) return py::none();
        return py::make_tuple(c.witness_alpha->element, c.witness_alpha->small.elements(),
                              c.witness_alpha->large.elements(), c.witness_alpha->ratio);
      });

  m.def(
      "submodularity_ratio_bruteforce",
      [](const SetFunction& f, double tol) { return submodularity_ratio_bruteforce(f, tol); },
      py::arg("f"), py::arg("tol") = kZeroGainTol);
  m.def(
      "generalized_curvature_bruteforce",
      [](const SetFunction& f, double tol) { return generalized_curvature_bruteforce(f, tol); },
      py::arg("f"), py::arg("tol") = kZeroGainTol);
  m.def(
      "ds_compose",
      [](const SetFunction& f1, const SetFunction& f2, double tol) {
        DsComposition comp = ds_compose(f1, f2, tol);
        return py::make_tuple(comp.difference, comp.alpha_star);
      },
      py::arg("f1"), py::arg("f2"), py::arg("tol") = kZeroGainTol);
  m.def("eps_approx_counterexample", [](double eps, double delta) {
    CounterexamplePair pair = eps_approx_counterexample(eps, delta);
    return py::make_tuple(pair.g, pair.f_delta);
  });

  m.def("bound_weak", &bound_weak, py::arg("gamma"), py::arg("rank"));
  m.def("bound_curvature", &bound_curvature, py::arg("alpha"));
  m.def("lemma1_constants", [](double gamma, int rank) {
    Lemma1Constants c = lemma1_constants(gamma, rank);
    return py::make_tuple(c.alpha_star, c.theta);
  });
  m.def(
      "asymptotic_regime",
      [](double gamma, int rank, double threshold) {
        return asymptotic_regime(gamma, rank, threshold).form;
      },
      py::arg("gamma"), py::arg("rank"), py::arg("threshold") = 2.0);
  m.def("ratio_bound_rsc", &ratio_bound_rsc, py::arg("strong_concavity"), py::arg("smoothness"));
  m.def("ggm_gamma_bound", &ggm::ggm_gamma_bound, py::arg("eigen_lower"), py::arg("eigen_upper"));

  // ---- visibility ----
  py::class_<IntensityProfile>(m, "IntensityProfile")
      .def(py::init<double, std::vector<double>, std::vector<double>>(), py::arg("period"),
           py::arg("breakpoints"), py::arg("values"))
      .def_static("constant", &IntensityProfile::constant)
      .def_property_readonly("period", &IntensityProfile::period)
      .def("value_at", &IntensityProfile::value_at)
      .def("integrate", &IntensityProfile::integrate);

  m.def("regularized_gamma_q", &regularized_gamma_q, py::arg("k"), py::arg("x"));
  m.def("gamma_antiderivative", &gamma_antiderivative, py::arg("k"), py::arg("x"));
  m.def("position_probability", &position_probability, py::arg("mu"), py::arg("gamma"),
        py::arg("k"), py::arg("t"));
  m.def("expected_top_k", &expected_top_k, py::arg("mu"), py::arg("gamma"), py::arg("top_k"),
        py::arg("t"));

  py::class_<BroadcastScenario>(m, "BroadcastScenario")
      .def_property_readonly("num_broadcasters", &BroadcastScenario::num_broadcasters)
      .def_property_readonly("num_feeds", &BroadcastScenario::num_feeds)
      .def_readonly("candidate_edges", &BroadcastScenario::candidate_edges)
      .def_readonly("budgets", &BroadcastScenario::budgets)
      .def_readonly("top_k", &BroadcastScenario::top_k)
      .def_readonly("t_start", &BroadcastScenario::t_start)
      .def_readonly("t_end", &BroadcastScenario::t_end)
      .def("to_json", [](const BroadcastScenario& sc) { return scenario_to_json(sc).dump(2); });

  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def("scenario_from_json", [](const std::string& text) {
    return scenario_from_json(nlohmann::json::parse(text));
  });
  m.def("toy_scenario", &toy_scenario);
  m.def(
      "random_scenario", [](std::uint64_t seed) { return random_scenario(seed); },
      py::arg("seed"));

  m.def("visibility_objective", [](const BroadcastScenario& sc) {
    VisibilityObjective obj = visibility_objective(sc);
    return py::make_tuple(obj.objective, obj.constraint);
  });
  m.def("visibility_edge", [](const BroadcastScenario& sc, const std::vector<int>& edges,
                              int feed) {
    return visibility_edge(sc, to_subset(sc.num_edges(), edges), feed);
  });
  m.def("xi_zeta_rho_estimates", [](const BroadcastScenario& sc) {
    ScenarioConstants c = xi_zeta_rho_estimates(sc);
    py::dict out;
    out["xi"] = c.xi;
    out["zeta"] = c.zeta;
    out["rho"] = c.rho;
    out["xi_paper_bound"] = c.xi_paper_bound;
    out["zeta_per_feed"] = c.zeta_per_feed;
    return out;
  });
  m.def("curvature_bound_weak", &curvature_bound_weak, py::arg("xi"), py::arg("zeta"),
        py::arg("top_k"));
  m.def("curvature_bound_strong", &curvature_bound_strong, py::arg("xi"), py::arg("zeta"),
        py::arg("rho"));
  m.def(
      "select_baseline",
      [](const BroadcastScenario& sc, const std::string& method, std::uint64_t seed) {
        return select_baseline(sc, baseline_from_name(method), seed).elements();
      },
      py::arg("scenario"), py::arg("method"), py::arg("seed") = 0);
  m.def(
      "empirical_visibility",
      [](const BroadcastScenario& sc, const std::vector<int>& edges, int n_realizations,
         std::uint64_t seed, int jobs) {
        auto logs = simulate_realizations(sc, to_subset(sc.num_edges(), edges), n_realizations,
                                          seed, jobs);
        EmpiricalVisibility est = empirical_visibility(logs, sc.top_k, sc.t_start, sc.t_end);
        py::dict out;
        out["total"] = est.total;
        out["per_feed"] = est.per_feed;
        out["realizations"] = est.realizations;
        return out;
      },
      py::arg("scenario"), py::arg("edges"), py::arg("n_realizations"), py::arg("seed") = 0,
      py::arg("jobs") = 1);

  // ---- ggm ----
  py::class_<ggm::TreeStructure>(m, "TreeStructure")
      .def_readonly("n_vertices", &ggm::TreeStructure::n_vertices)
      .def_readonly("edges", &ggm::TreeStructure::edges);

  m.def(
      "random_tree", [](int n, std::uint64_t seed) { return ggm::random_tree(n, seed); },
      py::arg("n"), py::arg("seed"));
  m.def(
      "make_tree_model",
      [](const ggm::TreeStructure& tree, std::uint64_t seed) {
        ggm::TreeModel model = ggm::make_tree_model(tree, seed);
        return py::make_tuple(model.precision, model.covariance);
      },
      py::arg("tree"), py::arg("seed"));
  m.def(
      "sample_gaussian",
      [](const Eigen::MatrixXd& covariance, int n_samples, std::uint64_t seed) {
        return ggm::sample_gaussian(covariance, n_samples, seed).samples();
      },
      py::arg("covariance"), py::arg("n_samples"), py::arg("seed"));
  m.def(
      "greedy_tree_fit",
      [](const Eigen::MatrixXd& samples, bool center) {
        return ggm::greedy_tree_fit(ggm::SampleSet(samples, center));
      },
      py::arg("samples"), py::arg("center") = false);
  m.def(
      "mst_baseline",
      [](const Eigen::MatrixXd& samples, bool center) {
        return ggm::mst_baseline(ggm::SampleSet(samples, center));
      },
      py::arg("samples"), py::arg("center") = false);
  m.def(
      "forest_loglik",
      [](const std::vector<std::pair<int, int>>& forest, const Eigen::MatrixXd& samples,
         bool center) { return ggm::forest_loglik(forest, ggm::SampleSet(samples, center)); },
      py::arg("forest"), py::arg("samples"), py::arg("center") = false);
  m.def(
      "gaussian_tree_nll",
      [](const ggm::TreeStructure& tree, const Eigen::MatrixXd& samples, bool center) {
        return ggm::gaussian_tree_nll(tree, ggm::SampleSet(samples, center));
      },
      py::arg("tree"), py::arg("samples"), py::arg("center") = false);
  m.def("edge_error", &ggm::edge_error, py::arg("estimated"), py::arg("truth"));
}
