#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betlogic/calculus.hpp"
#include "betlogic/io.hpp"
#include "betlogic/properties.hpp"
#include "betlogic/semantics.hpp"
#include "betlogic/synthesis.hpp"
#include "betlogic/syntax.hpp"

namespace py = pybind11;
using namespace betlogic;

namespace {

std::vector<std::string> names(const Frame& f, const EventSet& s) {
  std::vector<std::string> out;
  for (int w = 0; w < f.size(); ++w) {
    if (s.contains(w)) out.push_back(f.world_name(w));
  }
  return out;
}

std::vector<std::vector<std::string>> cells(const Frame& f) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : f.cells()) out.push_back(names(f, c));
  return out;
}

Threshold threshold(const std::string& c) { return Threshold(Rational::parse(c)); }

AnyModel builtin(const std::string& name) {
  if (name == "horses1") return corpus::horses();
  if (name == "horses2") return corpus::horses_split();
  if (name == "horses3") return corpus::horses_uniform();
  if (name == "walley-fine") return corpus::walley_fine();
  throw Error(ErrorCode::Io, "unknown builtin model " + name);
}

py::object wrap(const AnyModel& m) {
  return std::visit([](const auto& x) { return py::cast(x); }, m);
}

py::list report(const PropertyReport& r, const Frame& f) {
  py::list out;
  for (const auto& v : r.verdicts) {
    py::dict d;
    d["property"] = v.property;
    d["holds"] = v.holds;
    if (v.witness) {
      auto sets = [&](const std::vector<EventSet>& xs) {
        std::vector<std::vector<std::string>> o;
        for (const auto& x : xs) o.push_back(names(f, x));
        return o;
      };
      d["sets"] = sets(v.witness->sets);
      d["xs"] = sets(v.witness->xs);
      d["ys"] = sets(v.witness->ys);
      d["note"] = v.witness->note;
    }
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_betlogic, m) {
  m.doc() = "Exact model checking, measure synthesis and proof checking for probabilistic belief";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(error_code_name(e.code()), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<ProbabilityModel>(m, "ProbabilityModel")
      .def_property_readonly("worlds", [](const ProbabilityModel& pm) { return pm.frame().worlds(); })
      .def_property_readonly("cells", [](const ProbabilityModel& pm) { return cells(pm.frame()); })
      .def("weights", [](const ProbabilityModel& pm) {
        std::map<std::string, std::string> out;
        for (int w = 0; w < pm.frame().size(); ++w) out[pm.frame().world_name(w)] = pm.weight(w).fraction_str();
        return out;
      })
      .def("conditional_probability",
           [](const ProbabilityModel& pm, const std::string& world, const std::vector<std::string>& event) {
             return conditional_probability(pm, world, event).fraction_str();
           })
      .def("to_json", [](const ProbabilityModel& pm) { return save_model(pm); })
      .def("__eq__", [](const ProbabilityModel& a, const ProbabilityModel& b) { return a == b; });

  py::class_<NeighborhoodModel>(m, "NeighborhoodModel")
      .def_property_readonly("worlds", [](const NeighborhoodModel& nm) { return nm.frame().worlds(); })
      .def_property_readonly("cells", [](const NeighborhoodModel& nm) { return cells(nm.frame()); })
      .def("generators", [](const NeighborhoodModel& nm) {
        std::vector<std::vector<std::vector<std::string>>> out;
        for (int k = 0; k < nm.frame().cell_count(); ++k) {
          std::vector<std::vector<std::string>> g;
          for (const auto& x : nm.generators(k)) g.push_back(names(nm.frame(), x));
          out.push_back(g);
        }
        return out;
      })
      .def("is_neighborhood",
           [](const NeighborhoodModel& nm, const std::string& world, const std::vector<std::string>& event) {
             return nm.is_neighborhood(nm.frame().world_index(world), nm.frame().set_of(event));
           })
      .def("to_json", [](const NeighborhoodModel& nm) { return save_model(nm); })
      .def("__eq__", [](const NeighborhoodModel& a, const NeighborhoodModel& b) { return a == b; });

  m.def("load_model", [](const std::string& text) { return wrap(load_model(text)); });
  m.def("builtin_model", [](const std::string& name) { return wrap(builtin(name)); });
  m.def("normalize_formula", [](const std::string& text) { return to_string(parse_kb(text)); });

  m.def("evaluate_probability",
        [](const ProbabilityModel& pm, const std::string& world, const std::string& formula,
           const std::string& c) {
          const int w = pm.frame().world_index(world);
          return eval_kb_prob(pm, w, parse_kb(formula), threshold(c));
        });
  m.def("evaluate_linear", [](const ProbabilityModel& pm, const std::string& world, const std::string& formula) {
    return eval_l(pm, pm.frame().world_index(world), parse_l(formula));
  });
  m.def("evaluate_neighborhood", [](const NeighborhoodModel& nm, const std::string& world, const std::string& formula) {
    return eval_kb_nbhd(nm, nm.frame().world_index(world), parse_kb(formula));
  });

  m.def("derive_neighborhoods",
        [](const ProbabilityModel& pm, const std::string& c) { return derive_neighborhoods(pm, threshold(c)); });
  m.def("synthesize", [](const NeighborhoodModel& nm, const std::string& c) -> std::optional<ProbabilityModel> {
    SynthesisResult r = synthesize_measure(nm, threshold(c));
    if (!r.feasible) return std::nullopt;
    return std::move(r.model);
  });
  m.def("check_agreement", [](const NeighborhoodModel& nm, const ProbabilityModel& pm, const std::string& c) {
    return check_agreement(nm, pm, threshold(c)).holds;
  });
  m.def(
      "check_properties",
      [](const NeighborhoodModel& nm, bool mid_threshold, std::optional<std::string> conjectured, int m_max) {
        BruteForceBudget budget;
        budget.m_max = m_max;
        PropertyReport r = check_base_properties(nm);
        if (mid_threshold) {
          for (auto& v : check_mid_threshold(nm, budget).verdicts) r.verdicts.push_back(std::move(v));
        }
        if (conjectured) {
          for (auto& v : check_conjectured(nm, threshold(*conjectured), budget).verdicts) {
            r.verdicts.push_back(std::move(v));
          }
        }
        return report(r, nm.frame());
      },
      py::arg("model"), py::arg("mid_threshold") = false, py::arg("conjectured") = py::none(),
      py::arg("m_max") = 3);

  m.def(
      "find_countermodel",
      [](const std::string& formula, int max_worlds, bool mid_threshold) -> py::object {
        const CountermodelResult r = find_nbhd_countermodel(parse_kb(formula), max_worlds, mid_threshold);
        if (!r.found) return py::none();
        return py::make_tuple(*r.nbhd_model, r.nbhd_model->frame().world_name(r.world));
      },
      py::arg("formula"), py::arg("max_worlds") = 3, py::arg("mid_threshold") = false);

  m.def(
      "check_proof",
      [](const std::string& text, const std::string& theory, bool allow_tautology) {
        CheckOptions opts;
        opts.allow_tautology = allow_tautology;
        const CheckResult r = check_derivation(parse_derivation(text), parse_theory(theory), opts);
        return py::make_tuple(r.accepted, r.line, r.reason);
      },
      py::arg("text"), py::arg("theory"), py::arg("allow_tautology") = false);

  m.def(
      "realize_comparative",
      [](const std::string& text, const std::vector<std::string>& worlds,
         bool full_support) -> std::optional<std::map<std::string, std::string>> {
        const LPResult r = realize_comparative(parse_comparative(text, worlds), full_support);
        if (!r.feasible) return std::nullopt;
        std::map<std::string, std::string> out;
        for (const auto& w : worlds) {
          auto it = r.assignment.find(w);
          out[w] = it == r.assignment.end() ? "0" : it->second.fraction_str();
        }
        return out;
      },
      py::arg("text"), py::arg("worlds"), py::arg("full_support") = false);
}
