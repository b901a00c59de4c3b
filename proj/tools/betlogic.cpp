#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "betlogic/builders.hpp"
#include "betlogic/calculus.hpp"
#include "betlogic/error.hpp"
#include "betlogic/io.hpp"
#include "betlogic/properties.hpp"
#include "betlogic/semantics.hpp"
#include "betlogic/synthesis.hpp"
#include "betlogic/syntax.hpp"
#include "json.hpp"

using namespace betlogic;
using nlohmann::json;

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kFailure = 2;

bool g_json = false;

AnyModel load_any(const std::string& spec) {
  if (spec == "horses1") return corpus::horses();
  if (spec == "horses2") return corpus::horses_split();
  if (spec == "horses3") return corpus::horses_uniform();
  if (spec == "walley-fine") return corpus::walley_fine();
  return load_model_file(spec);
}

ProbabilityModel load_prob(const std::string& spec) {
  AnyModel m = load_any(spec);
  if (auto* p = std::get_if<ProbabilityModel>(&m)) return *p;
  throw Error(ErrorCode::InvalidModel, spec + ": expected a probability model");
}

NeighborhoodModel load_nbhd(const std::string& spec) {
  AnyModel m = load_any(spec);
  if (auto* n = std::get_if<NeighborhoodModel>(&m)) return *n;
  throw Error(ErrorCode::InvalidModel, spec + ": expected a neighborhood model");
}

void emit(const json& j, const std::string& text) {
  if (g_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

json names_json(const Frame& f, const std::vector<EventSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(f.names_of(s));
  return out;
}

std::string sets_text(const Frame& f, const std::vector<EventSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? ", " : "") + f.format_set(sets[i]);
  return out;
}

json report_json(const Frame& f, const PropertyReport& r) {
  json out = json::object();
  for (const auto& v : r.verdicts) {
    json e;
    e["holds"] = v.holds;
    if (v.witness) {
      json w;
      w["cell"] = v.witness->cell;
      if (!v.witness->sets.empty()) w["sets"] = names_json(f, v.witness->sets);
      if (!v.witness->xs.empty()) w["xs"] = names_json(f, v.witness->xs);
      if (!v.witness->ys.empty()) w["ys"] = names_json(f, v.witness->ys);
      if (!v.witness->note.empty()) w["note"] = v.witness->note;
      e["witness"] = w;
    }
    out[v.property] = e;
  }
  return out;
}

std::string report_text(const Frame& f, const PropertyReport& r) {
  std::ostringstream out;
  for (const auto& v : r.verdicts) {
    out << "(" << v.property << ") " << (v.holds ? "holds" : "FAILS");
    if (v.witness) {
      const auto& w = *v.witness;
      out << " in cell " << f.format_set(f.cells()[w.cell]);
      if (!w.sets.empty()) out << ": " << sets_text(f, w.sets);
      if (!w.xs.empty()) out << "\n    X: " << sets_text(f, w.xs) << "\n    Y: " << sets_text(f, w.ys);
      if (!w.note.empty()) out << " (" << w.note << ")";
    }
    out << "\n";
  }
  return out.str();
}

FormulaKB read_kb(const std::string& s) { return parse_kb(s); }

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string model, world, formula, threshold = "1/2", semantics;
};

int cmd_eval(const EvalArgs& a) {
  AnyModel m = load_any(a.model);
  const Threshold c(Rational::parse(a.threshold));
  bool value = false;
  std::string used;
  if (auto* p = std::get_if<ProbabilityModel>(&m)) {
    const int w = p->frame().world_index(a.world);
    if (a.semantics == "nbhd") {
      value = eval_kb_nbhd(derive_neighborhoods(*p, c), w, read_kb(a.formula));
      used = "nbhd";
    } else {
      std::optional<FormulaKB> kb;
      std::optional<SyntaxError> kb_error;
      try {
        kb = parse_kb(a.formula);
      } catch (const SyntaxError& e) {
        kb_error = e;
      }
      if (kb) {
        value = eval_kb_prob(*p, w, *kb, c);
      } else {
        std::optional<FormulaL> l;
        try {
          l = parse_l(a.formula);
        } catch (const SyntaxError& e) {
          // report whichever reading got further into the text
          if (kb_error->offset() >= e.offset()) throw *kb_error;
          throw;
        }
        value = eval_l(*p, w, *l);
      }
      used = "prob";
    }
  } else {
    const auto& n = std::get<NeighborhoodModel>(m);
    if (a.semantics == "prob") throw Error(ErrorCode::InvalidModel, "prob semantics needs a probability model");
    value = eval_kb_nbhd(n, n.frame().world_index(a.world), read_kb(a.formula));
    used = "nbhd";
  }
  json j{{"value", value}, {"world", a.world}, {"semantics", used}};
  emit(j, std::string(value ? "true" : "false") + "\n");
  return value ? kPositive : kNegative;
}

struct CheckArgs {
  std::string model, conjectured;
  bool mid = false;
  int m_max = 3;
};

int cmd_check(const CheckArgs& a) {
  const NeighborhoodModel m = load_nbhd(a.model);
  BruteForceBudget budget;
  budget.m_max = a.m_max;
  PropertyReport r = check_base_properties(m);
  if (a.mid) {
    for (auto& v : check_mid_threshold(m, budget).verdicts) r.verdicts.push_back(v);
  }
  if (!a.conjectured.empty()) {
    const Threshold c(Rational::parse(a.conjectured));
    for (auto& v : check_conjectured(m, c, budget).verdicts) r.verdicts.push_back(v);
  }
  emit(report_json(m.frame(), r), report_text(m.frame(), r));
  return r.all_hold() ? kPositive : kNegative;
}

int cmd_derive(const std::string& model, const std::string& threshold) {
  const NeighborhoodModel n = derive_neighborhoods(load_prob(model), Threshold(Rational::parse(threshold)));
  std::cout << save_model(n);
  return kPositive;
}

int cmd_synthesize(const std::string& model, const std::string& threshold, bool dump_lp) {
  const NeighborhoodModel n = load_nbhd(model);
  const Threshold c(Rational::parse(threshold));
  if (dump_lp) {
    for (int cell = 0; cell < n.frame().cell_count(); ++cell) {
      std::cerr << "# cell " << n.frame().format_set(n.frame().cells()[cell]) << "\n"
                << format_system(agreement_system(n, cell, c));
    }
  }
  const SynthesisResult r = synthesize_measure(n, c);
  if (!r.feasible) {
    json j{{"feasible", false}, {"failing_cell", n.frame().names_of(n.frame().cells()[r.failing_cell])}};
    emit(j, "INFEASIBLE\n");
    return kNegative;
  }
  if (g_json) {
    emit(json{{"feasible", true}, {"model", json::parse(save_model(*r.model))}}, "");
  } else {
    std::cout << save_model(*r.model);
  }
  return kPositive;
}

int cmd_agree(const std::string& nbhd, const std::string& prob, const std::string& threshold) {
  const NeighborhoodModel n = load_nbhd(nbhd);
  const ProbabilityModel p = load_prob(prob);
  const AgreementResult r = check_agreement(n, p, Threshold(Rational::parse(threshold)));
  if (r.holds) {
    emit(json{{"holds", true}}, "Holds\n");
    return kPositive;
  }
  const Frame& f = n.frame();
  json j{{"holds", false},
         {"world", f.world_name(r.world)},
         {"set", f.names_of(r.set)},
         {"in_neighborhood", r.in_neighborhood},
         {"probability", r.probability.fraction_str()}};
  emit(j, "Fails at " + f.world_name(r.world) + " for " + f.format_set(r.set) + ": " +
              (r.in_neighborhood ? "neighborhood" : "not a neighborhood") + ", P = " + r.probability.str() + "\n");
  return kNegative;
}

struct CounterArgs {
  std::string formula, threshold = "1/2";
  int max_worlds = 3, trials = 1000, m_max = 3;
  bool mid = false, prob = false;
  std::uint64_t seed = 1;
};

int cmd_countermodel(const CounterArgs& a) {
  const FormulaKB f = read_kb(a.formula);
  CountermodelResult r;
  if (a.prob) {
    r = sample_prob_countermodel(f, Threshold(Rational::parse(a.threshold)), a.trials, a.max_worlds, a.seed);
  } else {
    r = find_nbhd_countermodel(f, a.max_worlds, a.mid, a.m_max);
  }
  if (!r.found) {
    emit(json{{"found", false}, {"bound", r.bound}, {"models_checked", r.models_checked}}, "NONE (" + r.bound + ")\n");
    return kNegative;
  }
  const std::string model = r.prob_model ? save_model(*r.prob_model) : save_model(*r.nbhd_model);
  const Frame& fr = r.prob_model ? r.prob_model->frame() : r.nbhd_model->frame();
  if (g_json) {
    emit(json{{"found", true}, {"world", fr.world_name(r.world)}, {"model", json::parse(model)}}, "");
  } else {
    std::cout << "# false at " << fr.world_name(r.world) << "\n" << model;
  }
  return kPositive;
}

int cmd_prove(const std::string& theory, const std::string& path, bool taut) {
  const Derivation d = parse_derivation(read_file(path));
  CheckOptions opt;
  opt.allow_tautology = taut;
  const CheckResult r = check_derivation(d, parse_theory(theory), opt);
  if (r.accepted) {
    emit(json{{"accepted", true}, {"lines", d.lines.size()}, {"conclusion", to_string(d.lines.back().formula)}},
         "Accepted: " + to_string(d.lines.back().formula) + "\n");
    return kPositive;
  }
  emit(json{{"accepted", false}, {"line", r.line}, {"reason", r.reason}},
       "RejectedAt " + std::to_string(r.line) + ": " + r.reason + "\n");
  return kNegative;
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string statement_text(const ComparativeRelation& rel, const ComparativeStatement& st) {
  auto side = [&](const EventSet& x) {
    std::string out = "{";
    bool first = true;
    for (int i : x.members()) {
      out += (first ? "" : ",") + rel.worlds[i];
      first = false;
    }
    return out + "}";
  };
  const char* op = st.rel == Comparison::Less ? " < " : (st.rel == Comparison::LessEq ? " <= " : " = ");
  return side(st.x) + op + side(st.y);
}

json measure_json(const LPResult& r, const std::vector<std::string>& worlds) {
  json m = json::object();
  for (const auto& w : worlds) m[w] = r.assignment.count(w) ? r.assignment.at(w).fraction_str() : "0/1";
  return m;
}

int report_realization(const ComparativeRelation& rel, bool full_support) {
  const LPResult r = realize_comparative(rel, full_support);
  if (!r.feasible) {
    emit(json{{"feasible", false}}, "INFEASIBLE\n");
    return kNegative;
  }
  std::string text;
  for (const auto& w : rel.worlds) text += w + " = " + (r.assignment.count(w) ? r.assignment.at(w).str() : "0") + "\n";
  emit(json{{"feasible", true}, {"measure", measure_json(r, rel.worlds)}}, text);
  return kPositive;
}

json definetti_json(const PropertyReport& r) {
  json out = json::object();
  for (const auto& v : r.verdicts) out[v.property] = v.holds;
  return out;
}

std::string definetti_text(const PropertyReport& r) {
  std::string out;
  for (const auto& v : r.verdicts) out += v.property + ": " + (v.holds ? "holds" : "FAILS") + "\n";
  return out;
}

int cmd_comparative(const std::string& universe, const std::string& statements, bool definetti,
                    const std::string& weights, bool full_support) {
  const auto worlds = split_words(universe);
  if (definetti) {
    std::vector<Rational> w;
    for (const auto& s : split_words(weights)) w.push_back(Rational::parse(s));
    if (w.empty()) throw Error(ErrorCode::InvalidModel, "--definetti needs --weights");
    if (w.size() != worlds.size()) throw Error(ErrorCode::InvalidModel, "one weight per world expected");
    const PropertyReport r = check_definetti(induced_table(w));
    emit(definetti_json(r), definetti_text(r));
    return r.all_hold() ? kPositive : kNegative;
  }
  const ComparativeRelation rel = parse_comparative(read_file(statements), worlds);
  return report_realization(rel, full_support);
}

// ---------------------------------------------------------------------------
// Demos

bool set_from_letters(const Frame& f, const std::string& letters, EventSet& out) {
  std::vector<std::string> names;
  for (char ch : letters) names.emplace_back(1, ch);
  out = f.set_of(names);
  return true;
}

int demo_walley_fine() {
  const NeighborhoodModel m = corpus::walley_fine();
  const Frame& f = m.frame();
  json j;
  std::ostringstream text;
  bool ok = true;

  const PropertyReport base = check_base_properties(m);
  j["base_properties"] = report_json(f, base);
  text << "base properties: " << (base.all_hold() ? "all hold" : "FAIL") << "\n";
  ok = ok && base.all_hold();

  std::vector<EventSet> xs, ys;
  for (const auto& s : corpus::walley_fine_x()) set_from_letters(f, s, xs.emplace_back());
  for (const auto& s : corpus::walley_fine_y()) set_from_letters(f, s, ys.emplace_back());
  const bool replay = is_scott_violation(m, 0, xs, ys);
  j["scott_witness"] = {{"m", 7}, {"xs", corpus::walley_fine_x()}, {"ys", corpus::walley_fine_y()}, {"violation", replay}};
  text << "(scott) violation, m = 7: " << (replay ? "confirmed" : "NOT confirmed") << "\n"
       << "  X: " << sets_text(f, xs) << "\n  Y: " << sets_text(f, ys) << "\n";
  ok = ok && replay;

  const PropertyReport mid = check_mid_threshold(m);
  j["mid_threshold"] = report_json(f, mid);
  text << report_text(f, mid);

  bool counts = true;
  json occ = json::object();
  for (int w = 0; w < f.size(); ++w) {
    int in_x = 0, in_y = 0;
    for (const auto& x : xs) in_x += x.contains(w);
    for (const auto& y : ys) in_y += y.contains(w);
    occ[f.world_name(w)] = {in_x, in_y};
    counts = counts && in_x == 3 && in_y == 4;
  }
  bool disjoint = true;
  for (const auto& y : ys) disjoint = disjoint && !m.is_neighborhood_in_cell(0, y);
  j["occurrences"] = occ;
  j["counting_identities"] = counts;
  j["y_outside_n"] = disjoint;
  text << "each world in 3 members of X and 4 of Y: " << (counts ? "yes" : "NO") << "\n"
       << "no member of Y is a neighborhood: " << (disjoint ? "yes" : "NO") << "\n";
  ok = ok && counts && disjoint;

  json synth = json::object();
  for (const char* c : {"1/3", "1/2", "3/5", "2/3", "3/4"}) {
    const bool feasible = synthesize_measure(m, Threshold(Rational::parse(c))).feasible;
    synth[c] = feasible ? "FEASIBLE" : "INFEASIBLE";
    text << "synthesize at c = " << c << ": " << (feasible ? "FEASIBLE" : "INFEASIBLE") << "\n";
    ok = ok && !feasible;
  }
  j["synthesis"] = synth;
  emit(j, text.str());
  return ok ? kPositive : kNegative;
}

int demo_kps() {
  const ComparativeRelation rel = kps_statements();
  json j;
  std::ostringstream text;
  json st = json::array();
  for (const auto& s : rel.statements) {
    st.push_back(statement_text(rel, s));
    text << statement_text(rel, s) << "\n";
  }
  j["statements"] = st;
  const LPResult r = realize_comparative(rel);
  j["realizable"] = r.feasible;
  text << (r.feasible ? "FEASIBLE" : "INFEASIBLE") << "\n";

  const KpsExtension ext = kps_extension();
  const PropertyReport df = check_definetti(ext.table);
  json base = json::array();
  for (const auto& w : ext.base_weights) base.push_back(w.fraction_str());
  j["extension"] = {{"base_weights", base}, {"definetti", definetti_json(df)}};
  const ComparativeRelation strict = strict_part(ext.table, rel.worlds);
  const bool strict_feasible = realize_comparative(strict).feasible;
  j["extension"]["strict_part_realizable"] = strict_feasible;
  text << "de Finetti extension (tie-broken from weights";
  for (const auto& w : ext.base_weights) text << " " << w.str();
  text << "):\n" << definetti_text(df) << "strict part (" << strict.statements.size()
       << " statements): " << (strict_feasible ? "FEASIBLE" : "INFEASIBLE") << "\n";
  emit(j, text.str());
  return (!r.feasible && df.all_hold() && !strict_feasible) ? kPositive : kNegative;
}

int demo_horses() {
  json j;
  std::ostringstream text;
  bool ok = true;
  const ProbabilityModel m22 = corpus::horses(), m23 = corpus::horses_split(), m35 = corpus::horses_uniform();
  const Rational p1 = conditional_probability(m22, "w1", {"w1", "w3"});
  const Rational p2 = conditional_probability(m23, "w1", {"w3"});
  j["horses1_P_w1_w1w3"] = p1.fraction_str();
  j["horses2_P_w1_w3"] = p2.fraction_str();
  text << "horses1: P_w1({w1, w3}) = " << p1 << "\n"
       << "horses2: P_w1({w3}) = " << p2 << "\n";
  ok = ok && p1 == Rational(2, 3) && p2 == Rational(0);
  const Threshold half(Rational(1, 2));
  const std::pair<const char*, bool> judgments[] = {
      {"B (h1 | h2 | h3)", true},
      {"B (h1 | h2) & B (h1 | h3) & B (h2 | h3)", true},
      {"B ~h1 & B ~h2 & B ~h3", true},
      {"B (~h1 & ~h2)", false},
  };
  json items = json::array();
  for (const auto& [s, expected] : judgments) {
    const bool v = valid_in_model(m35, parse_kb(s), half);
    items.push_back({{"formula", s}, {"value", v}});
    text << "horses3 |= " << s << " : " << (v ? "true" : "false") << "\n";
    ok = ok && v == expected;
  }
  j["horses3"] = items;
  const NeighborhoodModel n = derive_neighborhoods(m35, half);
  j["horses3_neighborhoods"] = json::parse(save_model(n))["generators"];
  text << "horses3 neighborhoods at 1/2 generated by " << sets_text(n.frame(), n.generators(0)) << "\n";
  emit(j, text.str());
  return ok ? kPositive : kNegative;
}

int cmd_corpus_write(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& p : corpus_proofs()) {
    std::ofstream out(std::filesystem::path(dir) / (p.name + ".proof"));
    out << "# theory: " << theory_name(p.theory) << "\n"
        << "# goal: " << to_string(p.goal) << "\n"
        << format_derivation(p.derivation);
  }
  const std::pair<const char*, AnyModel> models[] = {
      {"horses1", corpus::horses()}, {"horses2", corpus::horses_split()},
      {"horses3", corpus::horses_uniform()}, {"walley-fine", corpus::walley_fine()},
      {"horses3-half", derive_neighborhoods(corpus::horses_uniform(), Threshold(Rational(1, 2)))}};
  const auto models_dir = std::filesystem::path(dir).parent_path() / "models";
  std::filesystem::create_directories(models_dir);
  for (const auto& [name, m] : models) {
    std::ofstream out(models_dir / (std::string(name) + ".json"));
    std::visit([&](const auto& x) { out << save_model(x); }, m);
  }
  return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact model checking, measure synthesis and proof checking for probabilistic belief"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Machine-readable output");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a world");
  eval->add_option("--model", ev.model, "Model file or builtin name")->required();
  eval->add_option("--world", ev.world)->required();
  eval->add_option("--formula", ev.formula)->required();
  eval->add_option("--threshold", ev.threshold);
  eval->add_option("--semantics", ev.semantics)->check(CLI::IsMember({"prob", "nbhd"}));

  CheckArgs ck;
  auto* check = app.add_subcommand("check-model", "Check neighborhood-model properties");
  check->add_option("--model", ck.model)->required();
  check->add_flag("--mid-threshold", ck.mid);
  check->add_option("--conjectured", ck.conjectured, "Threshold for the candidate conditions");
  check->add_option("--m-max", ck.m_max)->check(CLI::Range(1, 8));

  std::string model, threshold = "1/2", nbhd, prob;
  bool dump_lp = false;
  auto* derive = app.add_subcommand("derive", "Neighborhood model induced by a measure");
  derive->add_option("--model", model)->required();
  derive->add_option("--threshold", threshold)->required();

  auto* synth = app.add_subcommand("synthesize", "Find an agreeing measure");
  synth->add_option("--model", model)->required();
  synth->add_option("--threshold", threshold)->required();
  synth->add_flag("--dump-lp", dump_lp, "Print the per-cell systems to stderr");

  auto* agree = app.add_subcommand("agree", "Check agreement of a neighborhood model and a measure");
  agree->add_option("--nbhd", nbhd)->required();
  agree->add_option("--prob", prob)->required();
  agree->add_option("--threshold", threshold)->required();

  CounterArgs ca;
  auto* counter = app.add_subcommand("countermodel", "Search for a falsifying model");
  counter->add_option("--formula", ca.formula)->required();
  counter->add_option("--max-worlds", ca.max_worlds);
  counter->add_flag("--mid-threshold", ca.mid);
  counter->add_option("--m-max", ca.m_max);
  counter->add_flag("--prob", ca.prob, "Sample probability models instead");
  counter->add_option("--threshold", ca.threshold);
  counter->add_option("--trials", ca.trials);
  counter->add_option("--seed", ca.seed);

  std::string theory, proof;
  bool taut = false;
  auto* prove = app.add_subcommand("prove", "Check a derivation");
  prove->add_option("--theory", theory)->required()->check(CLI::IsMember({"kb", "kb-half", "kb-half-minus"}));
  prove->add_option("--proof", proof)->required();
  prove->add_flag("--allow-tautology", taut, "Accept TAUT lines by truth table");

  std::string universe, statements, weights;
  bool definetti = false, full_support = false;
  auto* comp = app.add_subcommand("comparative", "Realize a comparative probability relation");
  comp->add_option("--universe", universe)->required();
  comp->add_option("--statements", statements);
  comp->add_flag("--definetti", definetti, "Check the five conditions on the relation induced by --weights");
  comp->add_option("--weights", weights);
  comp->add_flag("--full-support", full_support);

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Run a corpus scenario");
  demo->add_option("name", demo_name)->required()->check(CLI::IsMember({"walley-fine", "kps", "horses"}));

  std::string corpus_dir;
  auto* corpus_cmd = app.add_subcommand("write-corpus", "Write the proof corpus and builtin models");
  corpus_cmd->add_option("dir", corpus_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFailure;
  }

  try {
    if (*eval) return cmd_eval(ev);
    if (*check) return cmd_check(ck);
    if (*derive) return cmd_derive(model, threshold);
    if (*synth) return cmd_synthesize(model, threshold, dump_lp);
    if (*agree) return cmd_agree(nbhd, prob, threshold);
    if (*counter) return cmd_countermodel(ca);
    if (*prove) return cmd_prove(theory, proof, taut);
    if (*comp) {
      if (!definetti && statements.empty()) throw Error(ErrorCode::Io, "--statements is required");
      return cmd_comparative(universe, statements, definetti, weights, full_support);
    }
    if (*demo) {
      if (demo_name == "walley-fine") return demo_walley_fine();
      if (demo_name == "kps") return demo_kps();
      return demo_horses();
    }
    if (*corpus_cmd) return cmd_corpus_write(corpus_dir);
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
