#include "verba/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "verba/structure.hpp"

namespace verba {
namespace {

using nlohmann::json;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
  }
};

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t single_prime_base(std::uint64_t n) {
  // 0 when n is not a nontrivial prime power.
  if (n < 2) return 0;
  auto ds = prime_divisors(n);
  if (ds.size() != 1) return 0;
  return is_power_of(n, ds[0]) ? ds[0] : 0;
}

struct Scan {
  bool holds = true;
  std::optional<Perm> x;
  std::optional<Perm> y;
  std::uint64_t product_order = 0;
};

// First violation in ascending order: x outer, y inner.
Scan scan_set(const ValueSet& V, std::uint64_t p) {
  const auto& vals = V.values;
  std::vector<std::uint64_t> ord(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) ord[i] = element_order(vals[i]);
  Scan s;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (ord[i] % p == 0) continue;  // x must have p'-order
    for (std::size_t j = 0; j < vals.size(); ++j) {
      if (ord[j] % p != 0) continue;  // y needs order divisible by p
      std::uint64_t po = element_order(vals[i] * vals[j]);
      if (po % p != 0) {
        s.holds = false;
        s.x = vals[i];
        s.y = vals[j];
        s.product_order = po;
        return s;
      }
    }
  }
  return s;
}

json scan_witness(const Scan& s) {
  return json{{"x", s.x->cycle_string()},
              {"y", s.y->cycle_string()},
              {"product_order", s.product_order}};
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

CheckReport base_report(std::string check, std::string group) {
  CheckReport r;
  r.check = std::move(check);
  r.group = std::move(group);
  return r;
}

}  // namespace

bool verify_property_witness(const ValueSet& V, std::uint64_t p, const Perm& x,
                             const Perm& y) {
  if (!V.contains(x) || !V.contains(y)) return false;
  if (y.is_identity()) return false;
  if (element_order(x) % p == 0) return false;
  if (element_order(y) % p != 0) return false;
  return element_order(x * y) % p != 0;
}

CheckReport property_on_set(const std::string& group_name, const ValueSet& V,
                            std::uint64_t p) {
  require_prime(p);
  if (V.values.empty()) throw std::invalid_argument("empty value set");
  bool has_id = false;
  for (const auto& v : V.values)
    if (v.is_identity()) { has_id = true; break; }
  if (!has_id) throw std::invalid_argument("value set lacks the identity");
  Timer t;
  CheckReport r = base_report("P", group_name);
  r.word = V.label;
  r.p = p;
  Scan s = scan_set(V, p);
  r.holds = s.holds;
  if (!s.holds) r.witness = scan_witness(s);
  r.ms = t.ms();
  return r;
}

CheckReport satisfies_p_property(const PermGroup& G, const std::string& group_name,
                                 const Word& w, std::uint64_t p) {
  require_prime(p);
  Timer t;
  CheckReport r = base_report("P", group_name);
  r.word = descriptor(w);
  r.p = p;
  Scan s = scan_set(word_values(G, w), p);
  r.holds = s.holds;
  if (!s.holds) r.witness = scan_witness(s);
  r.ms = t.ms();
  return r;
}

CheckReport check_corollary_a(const PermGroup& G, const std::string& group_name,
                              std::uint64_t p) {
  require_prime(p);
  Timer t;
  CheckReport r = base_report("corollary_a", group_name);
  r.p = p;
  ValueSet all{"x1", G.elements()};
  Scan s = scan_set(all, p);
  bool pn = is_p_nilpotent(G, p);
  r.holds = s.holds;
  json w;
  w["pnilp"] = pn;
  if (!s.holds) {
    json sw = scan_witness(s);
    for (auto& [key, val] : sw.items()) w[key] = val;
  }
  if (s.holds != pn) w["mismatch"] = true;
  r.witness = w;
  r.ms = t.ms();
  return r;
}

CheckReport check_theorem_gamma(const PermGroup& G, const std::string& group_name,
                                unsigned k, std::uint64_t p) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  Timer t;
  CheckReport r = base_report("theorem_gamma", group_name);
  r.word = "gamma:" + std::to_string(k);
  r.k = static_cast<int>(k);
  r.p = p;
  Scan s = scan_set(word_values(G, gamma_word(k)), p);
  bool pn = is_p_nilpotent(lower_central_term(G, k), p);
  r.holds = (s.holds == pn);
  json w;
  w["p_holds"] = s.holds;
  w["pnilp"] = pn;
  if (!s.holds) {
    json sw = scan_witness(s);
    for (auto& [key, val] : sw.items()) w[key] = val;
  }
  r.witness = w;
  r.ms = t.ms();
  return r;
}

CheckReport check_theorem_delta(const PermGroup& G, const std::string& group_name,
                                unsigned k, std::uint64_t p) {
  require_prime(p);
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  Timer t;
  CheckReport r = base_report("theorem_delta", group_name);
  r.word = "delta:" + std::to_string(k);
  r.k = static_cast<int>(k);
  r.p = p;
  if (!is_soluble(G)) {
    r.skipped = true;
    r.witness = json{{"reason", "group is not soluble"}};
    r.ms = t.ms();
    return r;
  }
  Scan s = scan_set(word_values(G, delta_word(k)), p);
  bool pn = is_p_nilpotent(derived_term(G, k), p);
  r.holds = (s.holds == pn);
  json w;
  w["p_holds"] = s.holds;
  w["pnilp"] = pn;
  if (!s.holds) {
    json sw = scan_witness(s);
    for (auto& [key, val] : sw.items()) w[key] = val;
  }
  r.witness = w;
  r.ms = t.ms();
  return r;
}

CheckReport frobenius_p_nilpotent(const PermGroup& G, const std::string& group_name,
                                  std::uint64_t p) {
  require_prime(p);
  Timer t;
  CheckReport r = base_report("frobenius", group_name);
  r.p = p;
  PermGroup P = sylow_subgroup(G, p);
  std::vector<PermGroup> subs = all_subgroups(P, 256);
  bool cond = true;
  json fail;
  for (const auto& H : subs) {
    PermGroup N = normalizer(G, H);
    PermGroup C = centralizer(G, H.generators());
    std::uint64_t idx = N.order() / C.order();
    if (!is_power_of(idx, p) && idx != 1) {
      cond = false;
      fail = json{{"subgroup_order", H.order()}, {"nc_order", idx}};
      break;
    }
  }
  bool pn = is_p_nilpotent(G, p);
  r.holds = cond;
  json w;
  w["pnilp"] = pn;
  if (!cond) for (auto& [key, val] : fail.items()) w[key] = val;
  if (cond != pn) w["mismatch"] = true;
  r.witness = w;
  r.ms = t.ms();
  return r;
}

namespace {

// Gate shared by the p'-value lemmas: the property must hold for the word.
struct PropertyGate {
  bool holds;
  ValueSet values;
};

PropertyGate gate_property(const PermGroup& G, const Word& w, std::uint64_t p) {
  ValueSet V = word_values(G, w);
  Scan s = scan_set(V, p);
  return {s.holds, std::move(V)};
}

CheckReport skip(CheckReport r, const std::string& reason, const Timer& t) {
  r.skipped = true;
  r.witness = json{{"reason", reason}};
  r.ms = t.ms();
  return r;
}

// Values of p'-order in ascending order.
std::vector<Perm> pprime_values(const ValueSet& V, std::uint64_t p) {
  std::vector<Perm> out;
  for (const auto& v : V.values)
    if (element_order(v) % p != 0) out.push_back(v);
  return out;
}

CheckReport lemma_pprime_word(const PermGroup& G, const std::string& name,
                              unsigned k, std::uint64_t p, bool delta_form) {
  Timer t;
  CheckReport r = base_report(
      delta_form ? "lemma:pprime_word_delta" : "lemma:pprime_word", name);
  r.k = static_cast<int>(k);
  r.p = p;
  if (delta_form) {
    if (k < 1) return skip(std::move(r), "requires k >= 1", t);
    r.word = "delta:" + std::to_string(k);
  } else {
    if (k < 2) return skip(std::move(r), "requires k >= 2", t);
    r.word = "gamma:" + std::to_string(k);
  }
  Word w = delta_form ? delta_word(k) : gamma_word(k);
  PropertyGate gate = gate_property(G, w, p);
  if (!gate.holds)
    return skip(std::move(r), "the property does not hold for this word", t);
  // gamma form: [g, x, ..., x] with k-1 copies; delta form: [g, x, x].
  unsigned copies = delta_form ? 2 : k - 1;
  std::vector<Perm> xs = pprime_values(gate.values, p);
  for (const auto& x : xs) {
    for (const auto& g : G.elements()) {
      Perm c = iterated_commutator(g, x, copies);
      std::uint64_t o = element_order(c);
      if (o % p == 0) {
        r.holds = false;
        r.witness = json{{"x", x.cycle_string()},
                         {"g", g.cycle_string()},
                         {"commutator_order", o}};
        r.ms = t.ms();
        return r;
      }
    }
  }
  r.holds = true;
  r.witness = json{{"pprime_values", xs.size()}};
  r.ms = t.ms();
  return r;
}

CheckReport lemma_p_subgroup(const PermGroup& G, const std::string& name,
                             unsigned k, std::uint64_t p, bool delta_form) {
  Timer t;
  CheckReport r = base_report(
      delta_form ? "lemma:p_subgroup_delta" : "lemma:p_subgroup_gamma", name);
  r.k = static_cast<int>(k);
  r.p = p;
  if (delta_form) {
    if (k < 1) return skip(std::move(r), "requires k >= 1", t);
    r.word = "delta:" + std::to_string(k);
  } else {
    if (k < 2) return skip(std::move(r), "requires k >= 2", t);
    r.word = "gamma:" + std::to_string(k);
  }
  Word w = delta_form ? delta_word(k) : gamma_word(k);
  PropertyGate gate = gate_property(G, w, p);
  if (!gate.holds)
    return skip(std::move(r), "the property does not hold for this word", t);
  // Every p-subgroup normalized by a p'-order value must be centralized by
  // it. Subgroups of one fixed Sylow p-subgroup cover all p-subgroups up to
  // conjugacy, and the claim is conjugation-invariant.
  PermGroup P = sylow_subgroup(G, p);
  std::vector<PermGroup> subs = all_subgroups(P, 256);
  std::vector<Perm> xs = pprime_values(gate.values, p);
  std::size_t checked = 0;
  for (const auto& H : subs) {
    if (H.order() == 1) continue;
    for (const auto& x : xs) {
      bool normalizes = true;
      for (const auto& h : H.generators())
        if (!H.contains(conjugate(h, x))) { normalizes = false; break; }
      if (!normalizes) continue;
      ++checked;
      for (const auto& h : H.generators()) {
        if (!commutator(h, x).is_identity()) {
          r.holds = false;
          r.witness = json{{"subgroup_order", H.order()},
                           {"x", x.cycle_string()},
                           {"h", h.cycle_string()}};
          r.ms = t.ms();
          return r;
        }
      }
    }
  }
  r.holds = true;
  r.witness = json{{"pairs_checked", checked}};
  r.ms = t.ms();
  return r;
}

CheckReport lemma_inclusion(const PermGroup& G, const std::string& name,
                            unsigned k) {
  Timer t;
  CheckReport r = base_report("lemma:inclusion", name);
  r.k = static_cast<int>(k);
  PermGroup der = derived_term(G, k);
  PermGroup gam = lower_central_term(G, k + 1);
  bool ok = group_contains(gam, der);
  r.holds = ok;
  r.witness = json{{"derived_order", der.order()}, {"gamma_order", gam.order()}};
  r.ms = t.ms();
  return r;
}

CheckReport lemma_gamma_primepower_gen(const PermGroup& G, const std::string& name,
                                       unsigned k) {
  Timer t;
  CheckReport r = base_report("lemma:gamma_primepower_gen", name);
  r.k = static_cast<int>(k);
  r.word = "gamma:" + std::to_string(k);
  if (k < 2) return skip(std::move(r), "requires k >= 2", t);
  if (!is_soluble(G)) return skip(std::move(r), "group is not soluble", t);
  ValueSet V = word_values(G, gamma_word(k));
  std::vector<Perm> gens;
  for (const auto& v : V.values)
    if (single_prime_base(element_order(v)) != 0) gens.push_back(v);
  PermGroup H = gens.empty() ? PermGroup::trivial(G.degree())
                             : PermGroup(G.degree(), gens);
  PermGroup target = lower_central_term(G, k);
  r.holds = groups_equal(H, target);
  r.witness = json{{"generated_order", H.order()}, {"target_order", target.order()}};
  r.ms = t.ms();
  return r;
}

CheckReport lemma_gamma_qpower_gen(const PermGroup& G, const std::string& name,
                                   unsigned k, std::uint64_t p) {
  Timer t;
  CheckReport r = base_report("lemma:gamma_qpower_gen", name);
  r.k = static_cast<int>(k);
  r.p = p;
  r.word = "gamma:" + std::to_string(k);
  if (k < 1) return skip(std::move(r), "requires k >= 1", t);
  if (!is_perfect(G)) return skip(std::move(r), "group is not perfect", t);
  if (G.order() % p != 0)
    return skip(std::move(r), "p does not divide the group order", t);
  ValueSet V = word_values(G, gamma_word(k));
  std::vector<Perm> gens;
  for (const auto& v : V.values) {
    std::uint64_t q = single_prime_base(element_order(v));
    if (q != 0 && q != p) gens.push_back(v);
  }
  PermGroup H = gens.empty() ? PermGroup::trivial(G.degree())
                             : PermGroup(G.degree(), gens);
  r.holds = groups_equal(H, G);
  r.witness = json{{"generated_order", H.order()}, {"group_order", G.order()}};
  r.ms = t.ms();
  return r;
}

CheckReport lemma_delta_focal(const PermGroup& G, const std::string& name,
                              unsigned i, std::uint64_t q) {
  Timer t;
  CheckReport r = base_report("lemma:delta_focal", name);
  r.k = static_cast<int>(i);
  r.p = q;
  r.word = "delta:" + std::to_string(i);
  if (i < 1) return skip(std::move(r), "requires k >= 1", t);
  if (!is_soluble(G)) return skip(std::move(r), "group is not soluble", t);
  PermGroup Q = sylow_subgroup(G, q);
  PermGroup D = derived_term(G, i);
  std::vector<Perm> meet;
  for (const auto& g : Q.elements())
    if (D.contains(g)) meet.push_back(g);
  PermGroup lhs = group_from_elements(G.degree(), meet);
  ValueSet V = word_values(G, delta_word(i));
  std::vector<Perm> in_q;
  for (const auto& v : V.values)
    if (Q.contains(v)) in_q.push_back(v);
  PermGroup rhs = in_q.empty() ? PermGroup::trivial(G.degree())
                               : PermGroup(G.degree(), in_q);
  r.holds = groups_equal(lhs, rhs);
  r.witness = json{{"intersection_order", lhs.order()},
                   {"generated_order", rhs.order()}};
  r.ms = t.ms();
  return r;
}

CheckReport lemma_fitp_eq_op(const PermGroup& G, const std::string& name,
                             std::uint64_t p) {
  Timer t;
  CheckReport r = base_report("lemma:fitp_eq_op", name);
  r.p = p;
  PermGroup opp = p_prime_core(G, p);
  if (opp.order() != 1)
    return skip(std::move(r), "the p'-core is nontrivial", t);
  PermGroup fit = p_fitting(G, p);
  PermGroup core = p_core(G, p);
  bool pg = core.order() == 1 || is_power_of(core.order(), p);
  r.holds = groups_equal(fit, core) && pg;
  r.witness = json{{"p_fitting_order", fit.order()}, {"p_core_order", core.order()}};
  r.ms = t.ms();
  return r;
}

CheckReport lemma_meta(const PermGroup& G, const std::string& name,
                       std::uint64_t p) {
  Timer t;
  CheckReport r = base_report("lemma:meta", name);
  r.p = p;
  if (!is_metanilpotent(G))
    return skip(std::move(r), "group is not metanilpotent", t);
  PermGroup F = fitting(G);
  PermGroup K = p_prime_core(F, p);
  std::size_t checked = 0;
  for (const auto& x : G.elements()) {
    std::uint64_t o = element_order(x);
    if (o == 1 || !is_power_of(o, p)) continue;
    bool central = true;
    for (const auto& g : K.generators())
      if (!commutator(g, x).is_identity()) { central = false; break; }
    if (!central) continue;
    ++checked;
    if (!F.contains(x)) {
      r.holds = false;
      r.witness = json{{"x", x.cycle_string()}, {"fitting_order", F.order()}};
      r.ms = t.ms();
      return r;
    }
  }
  r.holds = true;
  r.witness = json{{"elements_checked", checked}};
  r.ms = t.ms();
  return r;
}

// Sample subgroups for closure checks: all Sylow subgroups plus a few
// cyclic and two-generator subgroups spread through the element list.
std::vector<PermGroup> closure_samples(const PermGroup& G) {
  std::vector<PermGroup> out;
  for (std::uint64_t q : prime_divisors(G.order()))
    out.push_back(sylow_subgroup(G, q));
  const auto& els = G.elements();
  std::size_t n = els.size();
  for (std::size_t f = 1; f <= 4; ++f) {
    const Perm& g = els[f * n / 5];
    out.push_back(PermGroup(G.degree(), {g}));
  }
  out.push_back(PermGroup(G.degree(), {els[n / 3], els[2 * n / 3]}));
  return out;
}

CheckReport lemma_subgroup_closure(const PermGroup& G, const std::string& name,
                                   const Word& w, std::uint64_t p) {
  Timer t;
  CheckReport r = base_report("lemma:subgroup_closure", name);
  r.word = descriptor(w);
  r.p = p;
  PropertyGate gate = gate_property(G, w, p);
  if (!gate.holds)
    return skip(std::move(r), "the property does not hold for this word", t);
  std::size_t samples = 0;
  for (const auto& H : closure_samples(G)) {
    ++samples;
    Scan s = scan_set(word_values(H, w), p);
    if (!s.holds) {
      r.holds = false;
      json wj = scan_witness(s);
      wj["subgroup_order"] = H.order();
      r.witness = wj;
      r.ms = t.ms();
      return r;
    }
  }
  r.holds = true;
  r.witness = json{{"samples", samples}};
  r.ms = t.ms();
  return r;
}

CheckReport lemma_quotient_closure(const PermGroup& G, const std::string& name,
                                   const Word& w, std::uint64_t p) {
  Timer t;
  CheckReport r = base_report("lemma:quotient_closure", name);
  r.word = descriptor(w);
  r.p = p;
  PropertyGate gate = gate_property(G, w, p);
  if (!gate.holds)
    return skip(std::move(r), "the property does not hold for this word", t);
  std::size_t samples = 0;
  for (const auto& N : normal_subgroups(G)) {
    if (N.order() % p == 0) continue;  // only normal subgroups of p'-order
    Quotient Q = quotient_group(G, N);
    ++samples;
    Scan s = scan_set(word_values(Q.group, w), p);
    if (!s.holds) {
      r.holds = false;
      json wj = scan_witness(s);
      wj["normal_order"] = N.order();
      r.witness = wj;
      r.ms = t.ms();
      return r;
    }
  }
  r.holds = true;
  r.witness = json{{"samples", samples}};
  r.ms = t.ms();
  return r;
}

CheckReport lemma_g2_gk(const PermGroup& G, const std::string& name, unsigned k) {
  Timer t;
  CheckReport r = base_report("lemma:g2_gk", name);
  r.k = static_cast<int>(k);
  if (k < 2) return skip(std::move(r), "requires k >= 2", t);
  if (!is_quasisimple(G))
    return skip(std::move(r), "group is not quasisimple", t);
  ValueSet v2 = word_values(G, gamma_word(2));
  ValueSet vk = word_values(G, gamma_word(k));
  r.holds = (v2.values == vk.values);
  r.witness = json{{"g2_count", v2.values.size()}, {"gk_count", vk.values.size()}};
  r.ms = t.ms();
  return r;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {
      "pprime_word",       "p_subgroup_gamma", "pprime_word_delta",
      "p_subgroup_delta",  "inclusion",        "gamma_primepower_gen",
      "gamma_qpower_gen",  "delta_focal",      "fitp_eq_op",
      "meta",              "subgroup_closure", "quotient_closure",
      "g2_gk"};
  return ids;
}

CheckReport lemma_check(const std::string& id, const PermGroup& G,
                        const std::string& group_name, const LemmaParams& params) {
  require_prime(params.p);
  if (id == "pprime_word")
    return lemma_pprime_word(G, group_name, params.k, params.p, false);
  if (id == "pprime_word_delta")
    return lemma_pprime_word(G, group_name, params.k, params.p, true);
  if (id == "p_subgroup_gamma")
    return lemma_p_subgroup(G, group_name, params.k, params.p, false);
  if (id == "p_subgroup_delta")
    return lemma_p_subgroup(G, group_name, params.k, params.p, true);
  if (id == "inclusion") return lemma_inclusion(G, group_name, params.k);
  if (id == "gamma_primepower_gen")
    return lemma_gamma_primepower_gen(G, group_name, params.k);
  if (id == "gamma_qpower_gen")
    return lemma_gamma_qpower_gen(G, group_name, params.k, params.p);
  if (id == "delta_focal")
    return lemma_delta_focal(G, group_name, params.k, params.q);
  if (id == "fitp_eq_op") return lemma_fitp_eq_op(G, group_name, params.p);
  if (id == "meta") return lemma_meta(G, group_name, params.p);
  if (id == "subgroup_closure")
    return lemma_subgroup_closure(G, group_name,
                                  params.word.value_or(gamma_word(params.k)),
                                  params.p);
  if (id == "quotient_closure")
    return lemma_quotient_closure(G, group_name,
                                  params.word.value_or(gamma_word(params.k)),
                                  params.p);
  if (id == "g2_gk") return lemma_g2_gk(G, group_name, params.k);
  throw std::invalid_argument("unknown lemma id: " + id);
}

std::vector<CheckReport> lemma_suite(const PermGroup& G,
                                     const std::string& group_name) {
  std::vector<CheckReport> out;
  std::vector<std::uint64_t> primes = prime_divisors(G.order());
  if (primes.empty()) primes.push_back(2);  // trivial group: exercise gates
  auto run = [&](const std::string& id, unsigned k, std::uint64_t p,
                 std::uint64_t q = 2) {
    LemmaParams lp;
    lp.k = k;
    lp.p = p;
    lp.q = q;
    out.push_back(lemma_check(id, G, group_name, lp));
  };
  for (unsigned k = 1; k <= 3; ++k) run("inclusion", k, 2);
  for (unsigned k = 2; k <= 3; ++k) run("gamma_primepower_gen", k, 2);
  for (unsigned i = 1; i <= 2; ++i)
    for (std::uint64_t q : primes) run("delta_focal", i, 2, q);
  run("g2_gk", 3, 2);
  for (std::uint64_t p : primes) {
    run("fitp_eq_op", 2, p);
    run("meta", 2, p);
    for (unsigned k = 2; k <= 3; ++k) {
      run("pprime_word", k, p);
      run("p_subgroup_gamma", k, p);
      run("pprime_word_delta", k, p);
      run("p_subgroup_delta", k, p);
      run("gamma_qpower_gen", k, p);
    }
    run("subgroup_closure", 2, p);
    run("quotient_closure", 2, p);
  }
  return out;
}

}  // namespace verba
