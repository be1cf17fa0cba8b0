#include "gatelat/workbench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <set>
#include <thread>

#include "gatelat/error.hpp"
#include "gatelat/json_io.hpp"
#include "gatelat/parity.hpp"

namespace gatelat {

namespace {

// Task kind -> argument keys that name workbench objects.
std::map<std::string, std::vector<std::string>> const &task_kinds() {
  static std::map<std::string, std::vector<std::string>> const kinds = {
      {"mixing", {"shift"}},
      {"even-fillings", {"shift"}},
      {"paths", {"shift"}},
      {"block-presentation", {"shift"}},
      {"parity", {"gate"}},
      {"is-even", {"gate"}},
      {"commutator-witness", {"gate"}},
      {"evenize", {"lattice"}},
      {"refine", {"lattice"}},
      {"simple-symmetry", {"lattice"}},
      {"conjugate", {"automaton"}},
      {"kin-check", {"automaton", "gate"}},
      {"separating-gate", {"automaton"}},
      {"trace", {"word", "target"}},
      {"word-equal", {"lhs", "rhs"}},
      {"apply", {}},
      {"ore", {}},
      {"an-closure", {}},
  };
  return kinds;
}

std::string section_of(std::string const &key) {
  if (key == "shift")
    return "shifts";
  if (key == "gate")
    return "gates";
  if (key == "lattice" || key == "target")
    return "lattices";
  if (key == "automaton")
    return "automata";
  return "words";
}

[[noreturn]] void invalid(std::string const &what, std::string const &msg) {
  fail(ErrorCode::ValidationError, what + ": " + msg);
}

template <class F> auto guarded(std::string const &what, F &&f) {
  try {
    return f();
  } catch (json::exception const &e) {
    fail(ErrorCode::ParseError, what + ": " + e.what());
  } catch (Error const &e) {
    if (e.code() == ErrorCode::ParseError)
      fail(ErrorCode::ParseError, what + ": " + e.what());
    invalid(what, e.what());
  }
}

template <class M>
auto const &lookup(M const &m, std::string const &name,
                   std::string const &kind) {
  auto it = m.find(name);
  if (it == m.end())
    fail(ErrorCode::ValidationError, "unknown " + kind + " '" + name + "'");
  return it->second;
}

std::string str_arg(json const &task, char const *key) {
  if (!task.contains(key) || !task[key].is_string())
    fail(ErrorCode::ValidationError,
         std::string("task needs a string '") + key + "'");
  return task[key].get<std::string>();
}

int int_arg(json const &task, char const *key, std::optional<int> dflt = {}) {
  if (!task.contains(key)) {
    if (dflt)
      return *dflt;
    fail(ErrorCode::ValidationError,
         std::string("task needs an integer '") + key + "'");
  }
  if (!task[key].is_number_integer())
    fail(ErrorCode::ValidationError,
         std::string("'") + key + "' must be an integer");
  return task[key].get<int>();
}

ShiftPtr shift_ref(Workbench const &wb, json const &j, std::string const &what) {
  if (!j.contains("shift") || !j["shift"].is_string())
    invalid(what, "needs a 'shift' name");
  auto name = j["shift"].get<std::string>();
  auto it = wb.shifts.find(name);
  if (it == wb.shifts.end())
    invalid(what, "unknown shift '" + name + "'");
  return it->second;
}

GateLattice lattice_ref(Workbench const &wb, json const &j,
                        ShiftPtr const &shift, std::string const &what) {
  if (j.is_string())
    return lookup(wb.lattices, j.get<std::string>(), "lattice");
  if (!j.is_object() || !j.contains("gate") || !j.contains("period"))
    invalid(what, "lattice must be a name or {gate, period, offset}");
  Gate g = j["gate"].is_string()
               ? lookup(wb.gates, j["gate"].get<std::string>(), "gate")
               : gate_from_json(shift, j["gate"]);
  int period = j["period"].get<int>();
  int offset = j.value("offset", 0);
  return make_lattice(std::move(g), period, offset);
}

LatticeWord word_from(Workbench const &wb, json const &j,
                      std::string const &what) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
    invalid(what, "word needs a 'factors' array");
  ShiftPtr shift;
  if (j.contains("shift"))
    shift = shift_ref(wb, j, what);
  LatticeWord w{shift, {}};
  for (auto const &f : j["factors"]) {
    if (!f.is_object() || !f.contains("lattice"))
      invalid(what, "factor needs a 'lattice'");
    int exp = f.value("exp", 1);
    if (exp != 1 && exp != -1)
      invalid(what, "factor exponent must be +1 or -1");
    ShiftPtr fs = shift;
    if (!fs && f["lattice"].is_object() && f["lattice"].contains("shift"))
      fs = shift_ref(wb, f["lattice"], what);
    GateLattice lat = lattice_ref(wb, f["lattice"], fs, what);
    if (!w.shift)
      w.shift = lat.gate.shift_ptr();
    require_same_shift(w.shift, lat.gate.shift_ptr());
    w.factors.push_back({std::move(lat), exp});
  }
  if (!w.shift)
    invalid(what, "empty word needs a 'shift'");
  return w;
}

CA automaton_from(Workbench const &wb, json const &j, std::string const &what) {
  ShiftPtr shift = shift_ref(wb, j, what);
  if (j.contains("builtin")) {
    auto kind = j["builtin"].get<std::string>();
    int power = j.value("power", 1);
    if (kind == "identity")
      return CA::identity(shift, power);
    if (kind == "shift")
      return CA::shift_map(shift, j.value("k", 1), power);
    invalid(what, "unknown builtin '" + kind + "'");
  }
  if (j.contains("lattice"))
    return word_eval(word_of(lattice_ref(wb, j["lattice"], shift, what)));
  if (j.contains("word")) {
    auto const &w = lookup(wb.words, j["word"].get<std::string>(), "word");
    return word_eval(w);
  }
  return ca_from_json(shift, j);
}

json section(json const &doc, char const *name) {
  if (!doc.contains(name))
    return json::object();
  if (!doc[name].is_object())
    fail(ErrorCode::ParseError, std::string("'") + name + "' must be an object");
  return doc[name];
}

} // namespace

Workbench parse_workbench_json(json const &doc, bool trim) {
  if (!doc.is_object())
    fail(ErrorCode::ParseError, "workbench file must be a JSON object");
  Workbench wb;
  json const shifts = section(doc, "shifts");
  for (auto const &[name, j] : shifts.items())
    wb.shifts.emplace(name, guarded("shift '" + name + "'", [&] {
                        return make_shift(graph_from_json(j), trim);
                      }));
  json const gates = section(doc, "gates");
  for (auto const &[name, j] : gates.items())
    wb.gates.emplace(name, guarded("gate '" + name + "'", [&] {
                       return gate_from_json(
                           shift_ref(wb, j, "gate '" + name + "'"), j);
                     }));
  json const lattices = section(doc, "lattices");
  for (auto const &[name, j] : lattices.items())
    wb.lattices.emplace(name, guarded("lattice '" + name + "'", [&] {
                          std::string what = "lattice '" + name + "'";
                          ShiftPtr shift;
                          if (j.is_object() && j.contains("shift"))
                            shift = shift_ref(wb, j, what);
                          if (j.is_object() && j.contains("gate") &&
                              !j["gate"].is_string() && !shift)
                            invalid(what, "inline gate needs a 'shift'");
                          return lattice_ref(wb, j, shift, what);
                        }));
  json const words = section(doc, "words");
  for (auto const &[name, j] : words.items())
    wb.words.emplace(name, guarded("word '" + name + "'", [&] {
                       return word_from(wb, j, "word '" + name + "'");
                     }));
  json const automata = section(doc, "automata");
  for (auto const &[name, j] : automata.items())
    wb.automata.emplace(name, guarded("automaton '" + name + "'", [&] {
                          return automaton_from(wb, j,
                                                "automaton '" + name + "'");
                        }));

  if (doc.contains("tasks")) {
    if (!doc["tasks"].is_array())
      fail(ErrorCode::ParseError, "'tasks' must be an array");
    for (std::size_t i = 0; i < doc["tasks"].size(); ++i) {
      json const &t = doc["tasks"][i];
      std::string what = "task " + std::to_string(i);
      if (!t.is_object() || !t.contains("kind") || !t["kind"].is_string())
        fail(ErrorCode::ParseError, what + ": needs a string 'kind'");
      auto kind = t["kind"].get<std::string>();
      auto it = task_kinds().find(kind);
      if (it == task_kinds().end())
        invalid(what, "unknown task kind '" + kind + "'");
      for (auto const &key : it->second) {
        if (!t.contains(key) || !t[key].is_string())
          invalid(what, "needs a '" + key + "' name");
        auto name = t[key].get<std::string>();
        auto sec = section_of(key);
        bool found = (sec == "shifts" && wb.shifts.count(name)) ||
                     (sec == "gates" && wb.gates.count(name)) ||
                     (sec == "lattices" && wb.lattices.count(name)) ||
                     (sec == "automata" && wb.automata.count(name)) ||
                     (sec == "words" &&
                      (wb.words.count(name) || name == "identity"));
        if (!found)
          invalid(what, "unknown " + sec + " entry '" + name + "'");
      }
      wb.tasks.push_back(t);
    }
  }
  return wb;
}

Workbench parse_workbench(std::filesystem::path const &path, bool trim) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (json::exception const &e) {
    fail(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return parse_workbench_json(doc, trim);
}

namespace {

json parity_rows(Gate const &g) {
  return to_json(parity_report(g), g.shift());
}

json moved_edges(SimpleSymmetry const &sym) {
  json out = json::array();
  auto const &bs = *sym.blocks.shift;
  for (int e = 0; e < bs.num_edges(); ++e)
    if (sym.edge_perm[e] != static_cast<unsigned>(e))
      out.push_back({bs.edge_name(e), bs.edge_name(sym.edge_perm[e])});
  return out;
}

void verified_or_fail(bool ok, std::string const &what) {
  if (!ok)
    fail(ErrorCode::VerificationFailed, what);
}

LatticeWord word_named(Workbench const &wb, std::string const &name,
                       ShiftPtr const &fallback) {
  if (name == "identity")
    return LatticeWord{fallback, {}};
  return lookup(wb.words, name, "word");
}

json task_result(Workbench const &wb, json const &task, Budget &budget) {
  auto kind = task["kind"].get<std::string>();

  if (kind == "mixing") {
    auto r = is_mixing(*lookup(wb.shifts, str_arg(task, "shift"), "shift"));
    return {{"mixing", r.mixing},
            {"exponent", r.exponent ? json(*r.exponent) : json(nullptr)}};
  }
  if (kind == "even-fillings") {
    auto n = has_even_fillings(
        *lookup(wb.shifts, str_arg(task, "shift"), "shift"));
    return {{"n", n ? json(*n) : json(nullptr)}};
  }
  if (kind == "paths") {
    auto const &shift = *lookup(wb.shifts, str_arg(task, "shift"), "shift");
    Context ctx = context_from_json(shift, task["left"], task["right"]);
    auto paths = enumerate_paths(shift, ctx, int_arg(task, "n"));
    json list = json::array();
    for (auto const &p : paths)
      list.push_back(path_to_json(shift, p.edges));
    return {{"count", paths.size()}, {"paths", list}};
  }
  if (kind == "block-presentation") {
    auto const &shift = *lookup(wb.shifts, str_arg(task, "shift"), "shift");
    auto bp = block_presentation(shift, int_arg(task, "n"),
                                 int_arg(task, "c", 0));
    return {{"shift", to_json(*bp.shift)},
            {"vertices", bp.shift->num_vertices()},
            {"edges", bp.shift->num_edges()}};
  }
  if (kind == "parity") {
    Gate g = lookup(wb.gates, str_arg(task, "gate"), "gate");
    if (task.contains("translate"))
      g = translate(g, int_arg(task, "translate"));
    json reports = json::array();
    if (task.contains("supports")) {
      for (auto const &s : task["supports"])
        reports.push_back(parity_rows(rebase(g, interval_from_json(s))));
    } else {
      reports.push_back(parity_rows(g));
    }
    return {{"reports", reports}};
  }
  if (kind == "is-even") {
    auto const &g = lookup(wb.gates, str_arg(task, "gate"), "gate");
    auto r = is_even(g);
    return {{"even", r.even},
            {"minimal", to_json(r.minimal, g.shift())},
            {"enlarged", to_json(r.enlarged, g.shift())},
            {"decisive", to_json(r.decisive, g.shift())},
            {"enlargement", r.enlargement}};
  }
  if (kind == "commutator-witness") {
    auto const &g = lookup(wb.gates, str_arg(task, "gate"), "gate");
    auto w = commutator_witness(g);
    bool ok = gates_equal(gate_commutator(w.g1, w.g2), g);
    verified_or_fail(ok, "commutator witness does not reproduce the gate");
    return {{"support", to_json(w.support)},
            {"g1", to_json(w.g1)},
            {"g2", to_json(w.g2)},
            {"verified", ok}};
  }
  if (kind == "evenize") {
    auto const &lat = lookup(wb.lattices, str_arg(task, "lattice"), "lattice");
    auto r = evenize(lat);
    json factors = json::array();
    bool all_even = true;
    for (auto const &f : r.factors) {
      bool even = is_even(f.gate).even;
      all_even = all_even && even;
      factors.push_back({{"lattice", to_json(f)}, {"even", even}});
    }
    json normalized = json::array();
    for (auto const &f : r.normalized)
      normalized.push_back(to_json(f));
    int power = std::lcm(word_period(word_of(r.factors)), lat.period);
    CA product = word_eval(word_of(r.factors), power);
    CA input = gate_lattice_to_ca(lat, power);
    bool equal = ca_equal(product, input);
    verified_or_fail(all_even && equal, "evenization failed verification");
    return {{"m", r.m},
            {"p", r.p},
            {"already_even", r.already_even},
            {"normalized", normalized},
            {"factors", factors},
            {"input_hash", hex64(ca_hash(input))},
            {"product_hash", hex64(ca_hash(product))},
            {"product_equal", equal}};
  }
  if (kind == "refine") {
    auto const &lat = lookup(wb.lattices, str_arg(task, "lattice"), "lattice");
    auto parts = refine(lat, int_arg(task, "m"));
    json list = json::array();
    for (auto const &p : parts)
      list.push_back(to_json(p));
    bool equal = word_equal(word_of(parts), word_of(lat));
    verified_or_fail(equal, "refinement product differs from the lattice");
    return {{"factors", list}, {"product_equal", equal}};
  }
  if (kind == "simple-symmetry") {
    auto const &lat = lookup(wb.lattices, str_arg(task, "lattice"), "lattice");
    auto sym = simple_symmetry_form(lat, int_arg(task, "m"));
    CA sc = symmetry_to_ca(sym, lat.gate.shift_ptr());
    bool equal =
        ca_equal(sc, gate_lattice_to_ca(lat, sym.block_length));
    verified_or_fail(equal, "symmetry differs from the lattice automaton");
    return {{"m", sym.m},
            {"block_length", sym.block_length},
            {"phase", sym.phase},
            {"moved_edges", moved_edges(sym)},
            {"equal", equal}};
  }
  if (kind == "conjugate") {
    auto const &f = lookup(wb.automata, str_arg(task, "automaton"), "automaton");
    if (task.contains("gate")) {
      auto const &g = lookup(wb.gates, str_arg(task, "gate"), "gate");
      return {{"gate", to_json(conjugate_by_automorphism(g, f))}};
    }
    auto const &lat = lookup(wb.lattices, str_arg(task, "lattice"), "lattice");
    int step = std::lcm(lat.period, f.power());
    CA f_inv = ca_invert(f, 8);
    int bound = conjugation_bound(lat, f, f_inv);
    int K = int_arg(task, "K", (std::max(bound, 1) + step - 1) / step * step);
    auto parts = conjugate_lattice(lat, f, K);
    CA expected = ca_minimize(ca_compose(
        ca_lift(f_inv, K),
        ca_compose(gate_lattice_to_ca(lat, K), ca_lift(f, K))));
    bool equal = ca_equal(word_eval(word_of(parts), K), expected);
    verified_or_fail(equal, "conjugated lattices differ from f^-1 L f");
    json list = json::array();
    for (auto const &p : parts)
      list.push_back(to_json(p));
    return {{"K", K}, {"bound", bound}, {"lattices", list}, {"verified", equal}};
  }
  if (kind == "kin-check") {
    auto const &f = lookup(wb.automata, str_arg(task, "automaton"), "automaton");
    auto const &g = lookup(wb.gates, str_arg(task, "gate"), "gate");
    int K = int_arg(task, "K", kin_bound(f, g));
    auto r = kin_commutator_check(f, g, K);
    return {{"equal", r.equal},
            {"K", r.K},
            {"bound", r.bound},
            {"commutator_support", to_json(r.commutator_support)},
            {"note", r.note}};
  }
  if (kind == "separating-gate") {
    auto const &f = lookup(wb.automata, str_arg(task, "automaton"), "automaton");
    Gate chi = separating_gate(f);
    return {{"gate", to_json(chi)}, {"even", is_even(chi).even}};
  }
  if (kind == "trace") {
    auto const &w = lookup(wb.words, str_arg(task, "word"), "word");
    auto const &target =
        lookup(wb.lattices, str_arg(task, "target"), "lattice");
    auto cert = normal_generation_trace(w, target, budget);
    json out = to_json(cert);
    out["term_count"] = cert.terms.size();
    return out;
  }
  if (kind == "word-equal") {
    auto ln = str_arg(task, "lhs"), rn = str_arg(task, "rhs");
    ShiftPtr shift = ln != "identity" ? lookup(wb.words, ln, "word").shift
                     : rn != "identity" ? lookup(wb.words, rn, "word").shift
                                        : nullptr;
    if (!shift)
      fail(ErrorCode::ValidationError, "word-equal needs one named word");
    auto a = word_named(wb, ln, shift), b = word_named(wb, rn, shift);
    int p = std::lcm(word_period(a), word_period(b));
    CA ca = word_eval(a, p), cb = word_eval(b, p);
    return {{"equal", ca_equal(ca, cb)},
            {"lhs_hash", hex64(ca_hash(ca))},
            {"rhs_hash", hex64(ca_hash(cb))}};
  }
  if (kind == "apply") {
    ShiftPtr shift;
    std::function<PeriodicConfiguration(PeriodicConfiguration const &)> run;
    if (task.contains("lattice")) {
      auto const &lat = lookup(wb.lattices, str_arg(task, "lattice"), "lattice");
      shift = lat.gate.shift_ptr();
      run = [&](auto const &x) { return apply_lattice(lat, x); };
    } else if (task.contains("word")) {
      auto const &w = lookup(wb.words, str_arg(task, "word"), "word");
      shift = w.shift;
      run = [&](auto const &x) { return apply_word(w, x); };
    } else {
      auto const &f =
          lookup(wb.automata, str_arg(task, "automaton"), "automaton");
      shift = f.shift_ptr();
      run = [&](auto const &x) { return ca_apply(f, x); };
    }
    PeriodicConfiguration x{path_from_json(*shift, task["config"])};
    return {{"result", path_to_json(*shift, run(x).edges)}};
  }
  if (kind == "ore") {
    Perm p = perm_from_json(task["perm"]);
    auto [q, r] = perm_commutator_factor(p);
    bool ok = commutator(q, r) == p;
    verified_or_fail(ok, "commutator factorization failed");
    return {{"q", to_json(q)}, {"r", to_json(r)}, {"verified", ok}};
  }
  if (kind == "an-closure") {
    Perm p = perm_from_json(task["perm"]);
    auto cert = alt_normal_closure(p);
    json terms = json::array();
    for (auto const &t : cert.terms)
      terms.push_back({{"conjugator", to_json(t.conjugator)}, {"exp", t.exp}});
    return {{"target", to_json(cert.target)},
            {"terms", terms},
            {"verified", cert.verified}};
  }
  fail(ErrorCode::ValidationError, "unknown task kind '" + kind + "'");
}

} // namespace

Report run_task(Workbench const &wb, json const &task,
                RunOptions const &options) {
  Report report;
  report.body = {{"task", task}};
  Budget budget(options.budget);
  auto start = std::chrono::steady_clock::now();
  try {
    report.body["result"] = task_result(wb, task, budget);
    report.body["status"] = "ok";
  } catch (Error const &e) {
    report.body["status"] = "error";
    report.body["error"] = {{"code", error_name(e.code())},
                            {"message", e.what()}};
    report.exit_code = exit_code(e.code());
  } catch (json::exception const &e) {
    report.body["status"] = "error";
    report.body["error"] = {{"code", "ValidationError"},
                            {"message", e.what()}};
    report.exit_code = exit_code(ErrorCode::ValidationError);
  }
  if (options.timing)
    report.body["timing_ms"] =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
  return report;
}

Report run_all(Workbench const &wb, RunOptions const &options, int jobs) {
  std::vector<Report> reports(wb.tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < wb.tasks.size();)
      reports[i] = run_task(wb, wb.tasks[i], options);
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(wb.tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
    for (auto &th : pool)
      th.join();
  }
  Report all;
  all.body = {{"reports", json::array()}};
  for (auto &r : reports) {
    all.body["reports"].push_back(std::move(r.body));
    all.exit_code = std::max(all.exit_code, r.exit_code);
  }
  return all;
}

std::vector<std::string> const &suite_names() {
  static std::vector<std::string> const names = {
      "decomposition", "zperfect", "kin", "ore", "an-closure", "generation"};
  return names;
}

namespace {

struct SuiteBuilder {
  json properties = json::array();
  bool passed = true;

  void add(std::string const &name, bool pass, std::string const &detail = "") {
    properties.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    passed = passed && pass;
  }

  template <class F> void check(std::string const &name, F &&f) {
    try {
      auto [pass, detail] = f();
      add(name, pass, detail);
    } catch (Error const &e) {
      add(name, false, e.what());
    }
  }
};

std::string cfg_string(EdgeShift const &shift, PeriodicConfiguration const &x) {
  std::string s;
  for (int e : x.edges)
    s += (s.empty() ? "" : " ") + shift.edge_name(e);
  return s;
}

void suite_decomposition(Workbench const &wb, SuiteBuilder &sb) {
  for (auto const &[name, lat] : wb.lattices)
    for (int m = 1; m <= 4; ++m)
      sb.check(name + " refine " + std::to_string(m), [&] {
        auto parts = refine(lat, m);
        if (!word_equal(word_of(parts), word_of(lat)))
          return std::pair{false, std::string("compiled product differs")};
        auto const &shift = lat.gate.shift();
        for (int P = m * lat.period; P <= 12; P += m * lat.period)
          for (auto const &x : periodic_points(shift, P))
            if (apply_word(word_of(parts), x) != apply_lattice(lat, x))
              return std::pair{false, "differs on " + cfg_string(shift, x)};
        return std::pair{true, std::string()};
      });
}

void suite_zperfect(Workbench const &wb, SuiteBuilder &sb) {
  for (auto const &[name, lat] : wb.lattices) {
    if (!is_mixing(lat.gate.shift()).mixing)
      continue;
    sb.check(name + " evenize", [&] {
      auto r = evenize(lat);
      for (std::size_t k = 0; k < r.factors.size(); ++k)
        if (!is_even(r.factors[k].gate).even)
          return std::pair{false, "factor " + std::to_string(k) + " is odd"};
      int p = std::lcm(word_period(word_of(r.factors)), lat.period);
      bool eq = ca_equal(word_eval(word_of(r.factors), p),
                         gate_lattice_to_ca(lat, p));
      return std::pair{eq, eq ? std::string() : "product differs"};
    });
  }
}

void suite_kin(Workbench const &wb, SuiteBuilder &sb) {
  for (auto const &[fname, f] : wb.automata)
    for (auto const &[gname, g] : wb.gates) {
      if (!same_shift(f.shift_ptr(), g.shift_ptr()))
        continue;
      sb.check(fname + " x " + gname, [&] {
        int K = kin_bound(f, g);
        auto r = kin_commutator_check(f, g, K);
        return std::pair{r.equal, "K = " + std::to_string(K) +
                                      (r.note.empty() ? "" : "; " + r.note)};
      });
    }
}

void suite_ore(SuiteBuilder &sb) {
  for (unsigned n = 5; n <= 7; ++n)
    sb.check("even permutations of " + std::to_string(n) + " points", [&] {
      std::vector<unsigned> images(n);
      std::iota(images.begin(), images.end(), 0u);
      int count = 0;
      do {
        Perm p(images);
        if (!p.is_even())
          continue;
        auto [q, r] = perm_commutator_factor(p);
        if (commutator(q, r) != p)
          return std::pair{false, "failed on " + p.str()};
        ++count;
      } while (std::next_permutation(images.begin(), images.end()));
      return std::pair{true, std::to_string(count) + " factored"};
    });
}

void suite_an_closure(SuiteBuilder &sb) {
  for (unsigned n = 5; n <= 6; ++n)
    sb.check("non-identity permutations of " + std::to_string(n) + " points",
             [&] {
               std::vector<unsigned> images(n);
               std::iota(images.begin(), images.end(), 0u);
               int count = 0;
               while (std::next_permutation(images.begin(), images.end())) {
                 Perm p(images);
                 auto cert = alt_normal_closure(p);
                 if (!cert.verified ||
                     evaluate_terms(p, cert.terms) != cert.target)
                   return std::pair{false, "failed on " + p.str()};
                 ++count;
               }
               return std::pair{true, std::to_string(count) + " certified"};
             });
}

void suite_generation(Workbench const &wb, RunOptions const &options,
                      SuiteBuilder &sb) {
  for (std::size_t i = 0; i < wb.tasks.size(); ++i) {
    auto const &t = wb.tasks[i];
    if (t["kind"] != "trace")
      continue;
    sb.check("task " + std::to_string(i) + " trace", [&] {
      Budget budget(options.budget);
      auto cert = normal_generation_trace(
          wb.words.at(t["word"].get<std::string>()),
          wb.lattices.at(t["target"].get<std::string>()), budget);
      return std::pair{cert.verified,
                       std::to_string(cert.terms.size()) + " terms"};
    });
  }
}

} // namespace

Report verify_suite(Workbench const &wb, std::string const &name,
                    RunOptions const &options) {
  Report report;
  auto const &names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    report.body = {{"suite", name},
                   {"status", "error"},
                   {"error",
                    {{"code", "UnknownSuite"},
                     {"message", "UnknownSuite: no suite named '" + name + "'"}}}};
    report.exit_code = exit_code(ErrorCode::UnknownSuite);
    return report;
  }
  SuiteBuilder sb;
  if (name == "decomposition")
    suite_decomposition(wb, sb);
  else if (name == "zperfect")
    suite_zperfect(wb, sb);
  else if (name == "kin")
    suite_kin(wb, sb);
  else if (name == "ore")
    suite_ore(sb);
  else if (name == "an-closure")
    suite_an_closure(sb);
  else
    suite_generation(wb, options, sb);
  report.body = {{"suite", name},
                 {"status", sb.passed ? "ok" : "error"},
                 {"passed", sb.passed},
                 {"properties", sb.properties}};
  report.exit_code = sb.passed ? 0 : 4;
  return report;
}

} // namespace gatelat
