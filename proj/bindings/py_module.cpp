#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wann/cartpole.hpp"
#include "wann/ensemble.hpp"
#include "wann/evaluation.hpp"
#include "wann/genome.hpp"
#include "wann/inspect.hpp"
#include "wann/mnist.hpp"
#include "wann/ranking.hpp"
#include "wann/search.hpp"
#include "wann/tuner.hpp"
#include "wann/variation.hpp"

namespace py = pybind11;
using namespace wann;

PYBIND11_MODULE(_core, m) {
    m.doc() = "weight-agnostic topology search core";

    py::enum_<ActivationKind>(m, "ActivationKind")
        .value("Linear", ActivationKind::Linear)
        .value("Step", ActivationKind::Step)
        .value("Sin", ActivationKind::Sin)
        .value("Cosine", ActivationKind::Cosine)
        .value("Gaussian", ActivationKind::Gaussian)
        .value("Tanh", ActivationKind::Tanh)
        .value("Sigmoid", ActivationKind::Sigmoid)
        .value("Abs", ActivationKind::Abs)
        .value("Invert", ActivationKind::Invert)
        .value("ReLU", ActivationKind::ReLU);

    py::class_<Genome>(m, "Genome")
        .def_readonly("n_inputs", &Genome::n_inputs)
        .def_readonly("n_outputs", &Genome::n_outputs)
        .def_property_readonly("n_nodes", [](const Genome& g) { return g.nodes.size(); })
        .def_property_readonly("n_enabled", &Genome::enabled_count)
        .def("to_json", [](const Genome& g) { return genome_to_json(g); })
        .def_static("from_json",
                    [](const std::string& text) { return genome_from_json(text); })
        .def("__repr__", [](const Genome& g) {
            return "<Genome " + std::to_string(g.n_inputs) + "->" + std::to_string(g.n_outputs) +
                   ", " + std::to_string(g.enabled_count()) + " connections>";
        });

    m.def("make_base_genome", &make_base_genome, py::arg("n_inputs"), py::arg("n_outputs"),
          py::arg("output_activation") = ActivationKind::Linear);
    m.def("load_genome", [](const std::string& path) { return load_genome(path); });
    m.def("save_genome",
          [](const Genome& g, const std::string& path) { save_genome(g, path); });

    m.def("forward", [](const Genome& g, const std::vector<double>& inputs, double w) {
        return forward(g, inputs, w);
    });
    m.def("forward_individual",
          [](const Genome& g, const std::vector<double>& inputs,
             const std::map<std::int64_t, double>& weights) {
              return forward_individual(g, inputs, weights);
          });

    py::class_<MutationConfig>(m, "MutationConfig")
        .def(py::init<>())
        .def_readwrite("p_change_activation", &MutationConfig::p_change_activation)
        .def_readwrite("p_add_node", &MutationConfig::p_add_node)
        .def_readwrite("p_add_conn", &MutationConfig::p_add_conn)
        .def_readwrite("initial_active_frac", &MutationConfig::initial_active_frac);

    py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>(), py::arg("seed") = 0);
    py::class_<InnovationCounter>(m, "InnovationCounter")
        .def(py::init<std::int64_t>(), py::arg("start") = 0)
        .def("peek", &InnovationCounter::peek);

    m.def("init_population", &init_population, py::arg("size"), py::arg("n_inputs"),
          py::arg("n_outputs"), py::arg("cfg"), py::arg("rng"), py::arg("innovations"));
    m.def("mutate", &mutate);

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("mean_perf", &EvalResult::mean_perf)
        .def_readonly("max_perf", &EvalResult::max_perf)
        .def_readonly("n_conn", &EvalResult::n_conn)
        .def_readonly("per_weight", &EvalResult::per_weight);

    py::class_<Task>(m, "Task")
        .def_property_readonly("name", &Task::name)
        .def_property_readonly("n_inputs", &Task::n_inputs)
        .def_property_readonly("n_outputs", &Task::n_outputs)
        .def("rollout", &Task::rollout);

    m.def(
        "make_task",
        [](const std::string& name, const std::string& mnist_dir, int mnist_batch) {
            SearchConfig cfg = SearchConfig::defaults_for(name);
            cfg.mnist_dir = mnist_dir;
            cfg.mnist_batch = mnist_batch;
            return make_task(cfg);
        },
        py::arg("name"), py::arg("mnist_dir") = "data/mnist", py::arg("mnist_batch") = 1000);

    m.def(
        "evaluate",
        [](const Genome& g, const Task& task, const std::vector<double>& series, int episodes,
           std::uint64_t seed) {
            WeightSeries s;
            s.values = series.empty() ? WeightSeries::search_default().values : series;
            return evaluate(g, task, s, episodes, seed);
        },
        py::arg("genome"), py::arg("task"), py::arg("series") = std::vector<double>{},
        py::arg("episodes_per_weight") = 1, py::arg("seed") = 0);

    m.def("search_weight_series", [] { return WeightSeries::search_default().values; });
    m.def("extended_weight_series", [] { return WeightSeries::extended().values; });

    m.def(
        "sweep_shared_weight",
        [](const Genome& g, const Task& task, int episodes, std::uint64_t seed) {
            return sweep_shared_weight(g, task, default_sweep_grid(), episodes, seed);
        },
        py::arg("genome"), py::arg("task"), py::arg("episodes") = 8, py::arg("seed") = 0);

    m.def(
        "reinforce_tune",
        [](const Genome& g, const Task& task, int population, int episodes, int generations,
           double step_size, double noise_scale, std::uint64_t seed) {
            TuneConfig cfg;
            cfg.population = population;
            cfg.episodes_per_candidate = episodes;
            cfg.generations = generations;
            cfg.step_size = step_size;
            cfg.noise_scale = noise_scale;
            return reinforce_tune(g, task, cfg, seed);
        },
        py::arg("genome"), py::arg("task"), py::arg("population") = 384,
        py::arg("episodes") = 16, py::arg("generations") = 3000, py::arg("step_size") = 0.03,
        py::arg("noise_scale") = 0.1, py::arg("seed") = 0);

    py::class_<ChampionArchive>(m, "ChampionArchive")
        .def_readonly("task", &ChampionArchive::task)
        .def_readonly("has_best", &ChampionArchive::has_best)
        .def_readonly("best", &ChampionArchive::best)
        .def_readonly("best_mean", &ChampionArchive::best_mean);

    m.def("run_search",
          [](const std::string& config_text) { return run_search(parse_search_config(config_text)); });
    m.def("default_config", [](const std::string& task) {
        return format_search_config(SearchConfig::defaults_for(task));
    });
    m.def("load_archive", &load_archive);

    m.def("export_dot", &export_dot);
    m.def("trace_subnetwork", &trace_subnetwork);

    m.def(
        "mnist_accuracy",
        [](const Genome& g, double w, const std::string& mnist_dir, const std::string& split) {
            return mnist_accuracy(g, w, *load_mnist_split(mnist_dir, split));
        },
        py::arg("genome"), py::arg("shared_weight"), py::arg("mnist_dir") = "data/mnist",
        py::arg("split") = "test");
    m.def(
        "ensemble_accuracy",
        [](const Genome& g, const std::string& mnist_dir, const std::string& split) {
            return ensemble_accuracy(g, EnsembleSpec{}, *load_mnist_split(mnist_dir, split));
        },
        py::arg("genome"), py::arg("mnist_dir") = "data/mnist", py::arg("split") = "test");

    py::register_exception<Error>(m, "WannError");
}
