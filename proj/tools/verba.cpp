#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "verba/caps.hpp"
#include "verba/catalog.hpp"
#include "verba/criteria.hpp"
#include "verba/errors.hpp"
#include "verba/structure.hpp"
#include "verba/sweep.hpp"
#include "verba/values.hpp"
#include "verba/word.hpp"

namespace {

using nlohmann::json;
using namespace verba;

struct GroupSpec {
  std::string group;
  unsigned degree = 0;
  std::vector<std::string> gens;
};

void add_group_options(CLI::App* cmd, GroupSpec& spec) {
  cmd->add_option("--group", spec.group, "catalog name or group file path");
  cmd->add_option("--degree", spec.degree, "degree for --gens");
  cmd->add_option("--gens", spec.gens, "generators in cycle notation");
}

NamedGroup resolve(const GroupSpec& spec) {
  if (!spec.group.empty()) {
    if (spec.degree != 0 || !spec.gens.empty())
      throw std::invalid_argument("--group excludes --degree/--gens");
    return make_group(spec.group);
  }
  if (spec.degree == 0 || spec.gens.empty())
    throw std::invalid_argument("need --group, or --degree with --gens");
  std::vector<Perm> gens;
  for (const auto& c : spec.gens) gens.push_back(Perm::from_cycles(spec.degree, c));
  return NamedGroup{"custom", PermGroup(spec.degree, gens)};
}

bool g_pretty = false;

void emit(const json& j) {
  std::cout << (g_pretty ? j.dump(2) : j.dump()) << '\n';
}

void emit(const CheckReport& r) {
  std::cout << (g_pretty ? report_pretty(r) : report_line(r)) << '\n';
}

// 0 when every non-skipped report holds, otherwise 1.
int verdict(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.skipped && !r.holds) return 1;
  return 0;
}

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  return std::stoull(v);
}

// Transposition products in alt5 under both readings of "products of two
// transpositions": disjoint pairs only, or every pair.
ValueSet transposition_products(const PermGroup& A, bool disjoint_only) {
  std::vector<Perm> transpositions;
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = i + 1; j < 5; ++j) {
      std::vector<unsigned> img = {0, 1, 2, 3, 4};
      img[i] = j;
      img[j] = i;
      transpositions.push_back(Perm(std::move(img)));
    }
  std::vector<Perm> products = {Perm(5)};
  for (const Perm& a : transpositions)
    for (const Perm& b : transpositions) {
      Perm p = a * b;
      if (disjoint_only && !p.is_identity() && element_order(p) != 2) continue;
      if (!p.is_identity()) products.push_back(p);
    }
  return external_value_set(A, std::move(products));
}

int run_counterexamples() {
  std::vector<CheckReport> reports;
  json facts = json::array();
  bool ok = true;

  // The power word x^15 on alt5: the property holds for every prime dividing
  // the order, yet the values generate the whole group, which is not
  // p-nilpotent for any of them.
  {
    PermGroup A = alternating_group(5);
    Word w = word_from_descriptor("pow:15");
    std::uint64_t expo = exponent(A);
    ValueSet V = word_values(A, w);
    PermGroup verbal = verbal_subgroup(A, w);
    json entry{{"group", "alt5"},
               {"word", "pow:15"},
               {"exponent", expo},
               {"value_count", V.values.size()},
               {"verbal_order", verbal.order()}};
    ok = ok && expo == 30 && V.values.size() == 16 && verbal.order() == A.order();
    json per_prime = json::object();
    for (std::uint64_t p : {2, 3, 5}) {
      CheckReport r = satisfies_p_property(A, "alt5", w, p);
      reports.push_back(r);
      bool pn = is_p_nilpotent(verbal, p);
      per_prime[std::to_string(p)] = json{{"property", r.holds}, {"pnilp", pn}};
      ok = ok && r.holds && !pn;  // the non-equivalence is the point
    }
    entry["per_prime"] = std::move(per_prime);

    // "Identity and all products of two transpositions" has two readings;
    // evaluate both and record which one satisfies the claimed property.
    ValueSet disjoint = transposition_products(A, true);
    ValueSet all_pairs = transposition_products(A, false);
    bool disjoint_matches_powers = disjoint.values == V.values;
    json readings = json::object();
    for (const auto* set : {&disjoint, &all_pairs}) {
      const bool is_disjoint = set == &disjoint;
      json verdicts = json::object();
      bool holds_all = true;
      for (std::uint64_t p : {2, 3, 5}) {
        CheckReport r = property_on_set("alt5", *set, p);
        verdicts[std::to_string(p)] = r.holds;
        holds_all = holds_all && r.holds;
      }
      readings[is_disjoint ? "disjoint_pairs" : "all_pairs"] =
          json{{"size", set->values.size()},
               {"property_per_prime", verdicts},
               {"satisfies_claim", holds_all}};
      if (is_disjoint) ok = ok && holds_all && disjoint_matches_powers;
    }
    entry["value_set_readings"] = std::move(readings);
    entry["disjoint_reading_equals_power_values"] = disjoint_matches_powers;
    facts.push_back(std::move(entry));
  }

  // g72 at p = 3: the commutator word fails the property and the derived
  // subgroup is not 3-nilpotent, while one step further down the series is a
  // 3-group and the property holds again. Both directions of the
  // equivalence, on one group.
  {
    Group72 gg = group_72();
    CheckReport r2 = satisfies_p_property(gg.group, "g72", gamma_word(2), 3);
    CheckReport r3 = satisfies_p_property(gg.group, "g72", gamma_word(3), 3);
    reports.push_back(r2);
    reports.push_back(r3);
    PermGroup t2 = lower_central_term(gg.group, 2);
    PermGroup t3 = lower_central_term(gg.group, 3);
    CheckReport thm2 = check_theorem_gamma(gg.group, "g72", 2, 3);
    CheckReport thm3 = check_theorem_gamma(gg.group, "g72", 3, 3);
    reports.push_back(thm2);
    reports.push_back(thm3);
    json entry{{"group", "g72"},
               {"p", 3},
               {"gamma2_order", t2.order()},
               {"gamma3_order", t3.order()},
               {"gamma3_invariants", abelian_invariants(t3)},
               {"property_gamma2", r2.holds},
               {"property_gamma3", r3.holds},
               {"pnilp_gamma2", is_p_nilpotent(t2, 3)},
               {"pnilp_gamma3", is_p_nilpotent(t3, 3)},
               {"theorems_agree", thm2.holds && thm3.holds}};
    if (!r2.witness.is_null()) entry["witness"] = r2.witness;
    bool witness_order_2 = !r2.holds && r2.witness.is_object() &&
                           r2.witness.value("product_order", std::uint64_t{0}) == 2;
    ok = ok && !r2.holds && witness_order_2 && r3.holds && t2.order() == 18 &&
         t3.order() == 9 && thm2.holds && thm3.holds;
    facts.push_back(std::move(entry));
  }

  for (const auto& r : reports) emit(r);
  emit(json{{"counterexamples", facts}, {"consistent", ok}});
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group word-value property checker"};
  app.require_subcommand(1);

  std::uint64_t enum_cap = env_cap("VERBA_ENUM_CAP", global_caps().enumeration);
  std::uint64_t tuple_cap = env_cap("VERBA_TUPLE_CAP", global_caps().tuples);
  app.add_flag("--pretty", g_pretty, "human-readable output");
  app.add_option("--enum-cap", enum_cap, "group enumeration bound");
  app.add_option("--tuple-cap", tuple_cap, "tuple enumeration bound");

  GroupSpec spec;
  std::string word_text, kind = "lower_central", config_path, lemma_id;
  unsigned k = 2, jobs = 0;
  std::uint64_t p = 2, q = 2;

  CLI::App* c_order = app.add_subcommand("order", "group order and degree");
  add_group_options(c_order, spec);

  CLI::App* c_series = app.add_subcommand("series", "term orders of a series");
  add_group_options(c_series, spec);
  c_series->add_option("--kind", kind, "lower_central or derived");

  CLI::App* c_values = app.add_subcommand("values", "value set of a word");
  add_group_options(c_values, spec);
  c_values->add_option("--word", word_text, "word or shortcut")->required();

  CLI::App* c_checkp = app.add_subcommand("check-p", "the property for a word");
  add_group_options(c_checkp, spec);
  c_checkp->add_option("--word", word_text)->required();
  c_checkp->add_option("--p", p)->required();

  CLI::App* c_pnilp = app.add_subcommand("pnilp", "p-nilpotency");
  add_group_options(c_pnilp, spec);
  c_pnilp->add_option("--p", p)->required();

  CLI::App* c_ta = app.add_subcommand("theorem-a", "property vs p-nilpotency of the k-th lower central term");
  add_group_options(c_ta, spec);
  c_ta->add_option("--k", k)->required();
  c_ta->add_option("--p", p)->required();

  CLI::App* c_tb = app.add_subcommand("theorem-b", "property vs p-nilpotency of the k-th derived term");
  add_group_options(c_tb, spec);
  c_tb->add_option("--k", k)->required();
  c_tb->add_option("--p", p)->required();

  CLI::App* c_frob = app.add_subcommand("frobenius", "normalizer quotient test");
  add_group_options(c_frob, spec);
  c_frob->add_option("--p", p)->required();

  CLI::App* c_lem = app.add_subcommand("lemmas", "lemma suite or one lemma");
  add_group_options(c_lem, spec);
  c_lem->add_option("--id", lemma_id, "one lemma id");
  c_lem->add_option("--k", k);
  c_lem->add_option("--p", p);
  c_lem->add_option("--q", q);
  c_lem->add_option("--word", word_text);

  app.add_subcommand("counterexamples", "the documented non-equivalences");

  CLI::App* c_sweep = app.add_subcommand("sweep", "run a sweep config");
  c_sweep->add_option("--config", config_path, "sweep config path")->required();
  c_sweep->add_option("--jobs", jobs, "worker count override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  global_caps().enumeration = enum_cap;
  global_caps().tuples = tuple_cap;

  try {
    if (c_order->parsed()) {
      NamedGroup g = resolve(spec);
      emit(json{{"group", g.name},
                {"degree", g.group.degree()},
                {"order", g.group.order()}});
      return 0;
    }
    if (c_series->parsed()) {
      NamedGroup g = resolve(spec);
      Series s;
      if (kind == "lower_central")
        s = lower_central_series(g.group);
      else if (kind == "derived")
        s = derived_series(g.group);
      else
        throw std::invalid_argument("kind must be lower_central or derived");
      json orders = json::array();
      for (const auto& t : s.terms) orders.push_back(t.order());
      emit(json{{"group", g.name}, {"kind", kind}, {"orders", orders}});
      return 0;
    }
    if (c_values->parsed()) {
      NamedGroup g = resolve(spec);
      Word w = word_from_descriptor(word_text);
      ValueSet V = word_values(g.group, w);
      json vals = json::array();
      for (const Perm& v : V.values) vals.push_back(v.cycle_string());
      emit(json{{"group", g.name},
                {"word", descriptor(w)},
                {"count", V.values.size()},
                {"verbal_order", verbal_subgroup(g.group, w).order()},
                {"values", vals}});
      return 0;
    }
    if (c_checkp->parsed()) {
      NamedGroup g = resolve(spec);
      CheckReport r =
          satisfies_p_property(g.group, g.name, word_from_descriptor(word_text), p);
      emit(r);
      return r.holds ? 0 : 1;
    }
    if (c_pnilp->parsed()) {
      NamedGroup g = resolve(spec);
      emit(json{{"group", g.name}, {"p", p}, {"p_nilpotent", is_p_nilpotent(g.group, p)}});
      return 0;
    }
    if (c_ta->parsed()) {
      NamedGroup g = resolve(spec);
      CheckReport r = check_theorem_gamma(g.group, g.name, k, p);
      emit(r);
      return verdict({r});
    }
    if (c_tb->parsed()) {
      NamedGroup g = resolve(spec);
      CheckReport r = check_theorem_delta(g.group, g.name, k, p);
      emit(r);
      return verdict({r});
    }
    if (c_frob->parsed()) {
      NamedGroup g = resolve(spec);
      CheckReport r = frobenius_p_nilpotent(g.group, g.name, p);
      emit(r);
      bool agrees = !r.witness.is_object() || !r.witness.value("mismatch", false);
      return agrees ? 0 : 1;
    }
    if (c_lem->parsed()) {
      NamedGroup g = resolve(spec);
      std::vector<CheckReport> reports;
      if (lemma_id.empty()) {
        reports = lemma_suite(g.group, g.name);
      } else {
        LemmaParams lp;
        lp.k = k;
        lp.p = p;
        lp.q = q;
        if (!word_text.empty()) lp.word = word_from_descriptor(word_text);
        reports.push_back(lemma_check(lemma_id, g.group, g.name, lp));
      }
      for (const auto& r : reports) emit(r);
      return verdict(reports);
    }
    if (app.get_subcommand("counterexamples")->parsed()) return run_counterexamples();
    if (c_sweep->parsed()) {
      SweepConfig cfg = load_sweep_config(config_path);
      if (jobs != 0) cfg.jobs = jobs;
      SweepResult res = run_sweep(cfg);
      std::cout << render_sweep(res, g_pretty);
      return res.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
