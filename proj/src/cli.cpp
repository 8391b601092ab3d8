// Copyright 2026 The sft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sft/cli.hpp"

#include "sft/conjugacy.hpp"
#include "sft/corpus.hpp"
#include "sft/dimension.hpp"
#include "sft/graph_structure.hpp"
#include "sft/io.hpp"
#include "sft/search.hpp"
#include "sft/shift_equivalence.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

namespace sft {
namespace {

struct Report {
  Json json;
  int code = kExitYes;
};

Json poset_json(const ComponentPoset& p) {
  Json comps = Json::array();
  for (const auto& c : p.components) comps.push_back(c);
  Json order = Json::array();
  for (const auto& [a, b] : p.order_pairs()) order.push_back({a, b});
  return Json{{"components", std::move(comps)}, {"order", std::move(order)}};
}

Json perm_json(const std::optional<PermWitness>& w) {
  return w ? Json(w->mapping) : Json(nullptr);
}

Json check_json(const SeCheck& c) {
  Json out{{"valid", c.ok()}};
  if (!c.ok()) out["detail"] = c.detail;
  return out;
}

int verdict_code(UnitalVerdict::Outcome o) {
  switch (o) {
    case UnitalVerdict::Outcome::kYes:
      return kExitYes;
    case UnitalVerdict::Outcome::kNo:
      return kExitNo;
    case UnitalVerdict::Outcome::kInconclusive:
      break;
  }
  return kExitInconclusive;
}

SeCertificate load_certificate(const std::string& path,
                               std::optional<unsigned> lag) {
  SeCertificate c = certificate_from_json(read_json_file(path));
  if (lag) c.lag = *lag;
  return c;
}

Report cmd_amalg(const std::string& file, unsigned power) {
  const IntMatrix a = read_matrix_file(file);
  const IntMatrix m = mat_pow(a, power);
  const TotalAmalgamation t = total_amalgamation(m);
  return {Json{{"input", to_json(m)},
               {"power", power},
               {"total", to_json(t.total)},
               {"sequence", to_json(t.seq)}}};
}

Report cmd_conjugate(const std::string& fa, const std::string& fb) {
  const auto c = one_sided_conjugate(read_matrix_file(fa), read_matrix_file(fb));
  return {Json{{"conjugate", c.conjugate},
               {"total_a", to_json(c.total_a.total)},
               {"total_b", to_json(c.total_b.total)},
               {"permutation", perm_json(c.witness)}},
          c.conjugate ? kExitYes : kExitNo};
}

Report cmd_higher_powers(const std::string& fa, const std::string& fb,
                         std::optional<unsigned> power) {
  const auto r =
      conjugate_higher_powers(read_matrix_file(fa), read_matrix_file(fb), power);
  Json out{{"agree", r.agree},
           {"n", r.n},
           {"interpretation", to_string(r.interpretation)},
           {"total_a_n", to_json(r.total_a_n)},
           {"total_a_n1", to_json(r.total_a_n1)},
           {"total_b_n", to_json(r.total_b_n)},
           {"total_b_n1", to_json(r.total_b_n1)},
           {"permutation_n", perm_json(r.witness_n)},
           {"permutation_n1", perm_json(r.witness_n1)}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  return {std::move(out), r.agree ? kExitYes : kExitNo};
}

Report cmd_bf(const std::vector<std::string>& files) {
  std::vector<BowenFranksData> data;
  Json reports = Json::array();
  for (const auto& f : files) {
    data.push_back(bowen_franks(read_matrix_file(f)));
    reports.push_back(to_json(data.back()));
  }
  if (data.size() == 1) return {reports.front()};
  const bool factors = data[0].invariant_factors == data[1].invariant_factors;
  const bool sign = data[0].sign == data[1].sign;
  return {Json{{"a", reports[0]},
               {"b", reports[1]},
               {"factors_agree", factors},
               {"sign_agrees", sign}},
          factors && sign ? kExitYes : kExitNo};
}

Report cmd_charpoly(const std::vector<std::string>& files) {
  std::vector<IntPolynomial> polys;
  for (const auto& f : files) polys.push_back(char_poly(read_matrix_file(f)));
  if (polys.size() == 1) return {to_json(polys.front())};
  const bool agree = agree_up_to_x_factors(polys[0], polys[1]);
  return {Json{{"a", to_json(polys[0])},
               {"b", to_json(polys[1])},
               {"agree_up_to_x", agree}},
          agree ? kExitYes : kExitNo};
}

Report cmd_verify_se(const std::string& file, std::optional<unsigned> lag) {
  const SeCertificate c = load_certificate(file, lag);
  const SeCheck check = verify_se(c);
  Json out = check_json(check);
  out["lag"] = c.lag;
  return {std::move(out), check.ok() ? kExitYes : kExitNo};
}

Report cmd_unital(const std::string& file, std::optional<unsigned> lag,
                  std::optional<std::size_t> k_max, bool diagnostics) {
  const SeCertificate c = load_certificate(file, lag);
  const SeCheck check = verify_se(c);
  if (!check.ok()) return {check_json(check), kExitNo};
  const UnitalVerdict v = unital_condition(c, k_max, diagnostics);
  return {to_json(v), verdict_code(v.outcome)};
}

Report cmd_balanced(const std::vector<std::string>& files) {
  std::vector<IntMatrix> m;
  for (const auto& f : files) m.push_back(read_matrix_file(f));
  const BalancedCheck check = verify_balanced_elementary(m[0], m[1], m[2], m[3], m[4]);
  if (!check.valid) {
    return {Json{{"valid", false},
                 {"s_is_division_transpose", check.s_is_division_transpose}},
            kExitNo};
  }
  const BalancedUnital bu = balanced_to_unital_se(m[0], m[1], m[2], m[3], m[4]);
  return {Json{{"valid", true},
               {"s_is_division_transpose", check.s_is_division_transpose},
               {"certificate", to_json(bu.cert)},
               {"verdict", to_json(bu.verdict)},
               {"witness_0_1", bu.witness_0_1}},
          verdict_code(bu.verdict.outcome)};
}

Report cmd_boyle(const std::string& file, std::optional<unsigned> lag) {
  const SeCertificate c = load_certificate(file, lag);
  const SeCheck check = verify_se(c);
  if (!check.ok()) return {check_json(check), kExitNo};
  const BoylePseReport r = boyle_pse_identity(c.a, c.b, c);
  return {Json{{"holds", r.holds},
               {"product_identity", r.product_identity},
               {"first_decomposition", r.first_decomposition},
               {"first_decomposition_literal", r.first_decomposition_literal},
               {"second_decomposition", r.second_decomposition},
               {"W", to_json(r.w)},
               {"U", to_json(r.u_prime)},
               {"V", to_json(r.v_prime)},
               {"product", to_json(r.product)},
               {"target", to_json(r.target)}},
          r.holds ? kExitYes : kExitNo};
}

Report cmd_sl_plus(const std::string& file) {
  const Json j = read_json_file(file);
  for (const char* key : {"U", "V", "MA", "MB", "vA", "vB", "blocks"}) {
    if (!j.is_object() || !j.contains(key)) {
      throw FormatError(file + ": missing \"" + key + "\"", 0, 0);
    }
  }
  auto vec = [&](const char* key) {
    const IntMatrix row = matrix_from_json(Json::array({j.at(key)}));
    return row.row(0);
  };
  std::vector<std::size_t> blocks;
  for (const Json& b : j.at("blocks")) {
    const Integer v = integer_from_json(b);
    if (v < 1 || v > 100000) throw FormatError("block sizes must be positive", 0, 0);
    blocks.push_back(static_cast<std::size_t>(v));
  }
  const IntMatrix u = matrix_from_json(j.at("U"));
  const IntMatrix v = matrix_from_json(j.at("V"));
  const IntMatrix ma = matrix_from_json(j.at("MA"));
  const IntMatrix mb = matrix_from_json(j.at("MB"));
  const bool sl = verify_sl(u, v, ma, mb, blocks);
  const bool plus = verify_sl_plus(u, v, ma, mb, vec("vA"), vec("vB"), blocks);
  return {Json{{"sl", sl}, {"sl_plus", plus}}, plus ? kExitYes : kExitNo};
}

Json canonical_json(const IntMatrix& a) {
  const CanonicalFormReport r = is_canonical_form(a);
  return Json{{"canonical", r.holds()},
              {"positive_diagonal", r.positive_diagonal},
              {"closure_saturated", r.closure_saturated},
              {"diagonal_blocks_ok", r.diagonal_blocks_ok},
              {"block_layout", r.block_layout},
              {"violations", r.violations},
              {"poset", poset_json(scc_poset(a))}};
}

Report cmd_canonical(const std::vector<std::string>& files) {
  std::vector<IntMatrix> m;
  for (const auto& f : files) m.push_back(read_matrix_file(f));
  if (m.size() == 1) {
    Json out = canonical_json(m[0]);
    const bool ok = out["canonical"].get<bool>();
    return {std::move(out), ok ? kExitYes : kExitNo};
  }
  const bool pair = is_standard_form_pair(m[0], m[1]);
  return {Json{{"standard_form_pair", pair},
               {"a", canonical_json(m[0])},
               {"b", canonical_json(m[1])}},
          pair ? kExitYes : kExitNo};
}

struct SearchFlags {
  std::optional<std::size_t> max_size, max_depth, max_nodes;
  std::optional<long long> max_entry;
  unsigned threads = 1;
};

Report cmd_search(const std::string& fa, const std::string& fb,
                  const SearchFlags& flags) {
  const IntMatrix a = read_matrix_file(fa);
  const IntMatrix b = read_matrix_file(fb);
  SearchLimits limits = SearchLimits::defaults_for(a, b);
  if (flags.max_size) limits.max_matrix_size = *flags.max_size;
  if (flags.max_depth) limits.max_depth = *flags.max_depth;
  if (flags.max_nodes) limits.max_nodes = *flags.max_nodes;
  if (flags.max_entry) limits.max_entry = *flags.max_entry;
  limits.threads = flags.threads;
  limits.validate();

  const auto start = std::chrono::steady_clock::now();
  const SearchResult r = search_balanced_path(a, b, limits);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  Json out{{"found", r.path.has_value()},
           {"nodes", r.nodes},
           {"levels", r.levels},
           {"limit_hit", r.limit_hit},
           {"limits",
            {{"max_size", limits.max_matrix_size},
             {"max_depth", limits.max_depth},
             {"max_entry", to_json(limits.max_entry)},
             {"max_nodes", limits.max_nodes}}},
           {"milliseconds", ms}};
  if (!r.path) {
    out["outcome"] = "inconclusive";
    return {std::move(out), kExitInconclusive};
  }
  const SeCertificate cert = certificate_for_sequence(*r.path);
  out["path"] = to_json(*r.path);
  out["certificate"] = to_json(cert);
  out["certificate_check"] = check_json(verify_se(cert));
  out["unital"] = to_json(unital_condition(cert));
  return {std::move(out), kExitYes};
}

Report cmd_corpus(bool verify, const std::optional<std::string>& name) {
  if (verify) {
    Json checks = Json::array();
    bool all = true;
    for (const CorpusCheck& c : verify_corpus()) {
      if (name && c.entry != *name) continue;
      all = all && c.pass;
      checks.push_back(Json{{"entry", c.entry},
                            {"item", c.item},
                            {"kind", c.is_certificate ? "certificate" : "verdict"},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"pass", c.pass}});
    }
    return {Json{{"ok", all}, {"checks", std::move(checks)}},
            all ? kExitYes : kExitNo};
  }
  Json entries = Json::array();
  for (const CorpusEntry& e : corpus()) {
    if (name && e.name != *name) continue;
    Json mats = Json::object();
    for (const auto& m : e.matrices) mats[m.name] = to_json(m.matrix);
    Json certs = Json::object();
    for (const auto& c : e.certificates) certs[c.name] = to_json(c.cert);
    Json expected = Json::object();
    for (const auto& x : e.expected) expected[x.name] = x.expected;
    entries.push_back(Json{{"name", e.name},
                           {"description", e.description},
                           {"matrices", std::move(mats)},
                           {"certificates", std::move(certs)},
                           {"expected", std::move(expected)}});
  }
  if (name && entries.empty()) throw FormatError("unknown corpus entry: " + *name, 0, 0);
  return {Json{{"entries", std::move(entries)}}};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Exact computations for one-sided shifts of finite type", "sft"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool compact = false;
  app.add_flag("--json", compact, "Compact single-line JSON output");

  std::function<Report()> action;
  std::vector<std::string> files;
  std::string fa, fb;
  std::optional<unsigned> power, lag;
  std::optional<std::size_t> k_max;
  bool diagnostics = false;

  auto* amalg = app.add_subcommand("amalg", "Total out-amalgamation of a matrix");
  amalg->add_option("matrix", fa, "Matrix file")->required();
  unsigned amalg_power = 1;
  amalg->add_option("--power", amalg_power, "Amalgamate this power of the matrix")
      ->check(CLI::PositiveNumber);
  amalg->callback([&] { action = [&] { return cmd_amalg(fa, amalg_power); }; });

  auto* conj = app.add_subcommand("conjugate", "One-sided conjugacy of two edge shifts");
  conj->add_option("a", fa)->required();
  conj->add_option("b", fb)->required();
  conj->callback([&] { action = [&] { return cmd_conjugate(fa, fb); }; });

  auto* hp = app.add_subcommand("higher-powers", "Conjugate higher powers");
  hp->add_option("a", fa)->required();
  hp->add_option("b", fb)->required();
  hp->add_option("--power", power, "Exponent n (at least max(|A|, |B|))");
  hp->callback([&] { action = [&] { return cmd_higher_powers(fa, fb, power); }; });

  auto* bf = app.add_subcommand("bf", "Bowen-Franks group and determinant sign");
  bf->add_option("matrices", files, "One or two matrix files")->required()->expected(1, 2);
  bf->callback([&] { action = [&] { return cmd_bf(files); }; });

  auto* cp = app.add_subcommand("charpoly", "Characteristic polynomial");
  cp->add_option("matrices", files, "One or two matrix files")->required()->expected(1, 2);
  cp->callback([&] { action = [&] { return cmd_charpoly(files); }; });

  auto* vse = app.add_subcommand("verify-se", "Check a shift equivalence certificate");
  vse->add_option("certificate", fa, "Certificate JSON file")->required();
  vse->add_option("--lag", lag, "Override the certificate lag")->check(CLI::PositiveNumber);
  vse->callback([&] { action = [&] { return cmd_verify_se(fa, lag); }; });

  auto* use = app.add_subcommand("unital-se", "Decide the unital condition");
  use->add_option("certificate", fa, "Certificate JSON file")->required();
  use->add_option("--lag", lag, "Override the certificate lag")->check(CLI::PositiveNumber);
  use->add_option("--k-max", k_max, "Largest k to try");
  use->add_flag("--diagnostics", diagnostics, "Also report the reversed certificate");
  use->callback([&] {
    action = [&] { return cmd_unital(fa, lag, k_max, diagnostics); };
  });

  auto* bal = app.add_subcommand("balanced", "Balanced elementary step to a unital SE");
  bal->add_option("matrices", files, "A B S R_A R_B")->required()->expected(5);
  bal->callback([&] { action = [&] { return cmd_balanced(files); }; });

  auto* boyle = app.add_subcommand("boyle-pse", "Polynomial shift equivalence identity");
  boyle->add_option("certificate", fa, "Certificate JSON file")->required();
  boyle->add_option("--lag", lag, "Override the certificate lag")->check(CLI::PositiveNumber);
  boyle->callback([&] { action = [&] { return cmd_boyle(fa, lag); }; });

  auto* slp = app.add_subcommand("sl-plus", "Check an SL or SL+ equivalence");
  slp->add_option("input", fa, "JSON with U, V, MA, MB, vA, vB, blocks")->required();
  slp->callback([&] { action = [&] { return cmd_sl_plus(fa); }; });

  auto* cf = app.add_subcommand("canonical-form", "Canonical and standard form predicates");
  cf->add_option("matrices", files, "One matrix, or a pair")->required()->expected(1, 2);
  cf->callback([&] { action = [&] { return cmd_canonical(files); }; });

  SearchFlags sflags;
  auto* sp = app.add_subcommand("search-path", "Search for a balanced move path");
  sp->add_option("a", fa)->required();
  sp->add_option("b", fb)->required();
  sp->add_option("--max-size", sflags.max_size)->check(CLI::PositiveNumber);
  sp->add_option("--max-depth", sflags.max_depth)->check(CLI::PositiveNumber);
  sp->add_option("--max-nodes", sflags.max_nodes)->check(CLI::PositiveNumber);
  sp->add_option("--max-entry", sflags.max_entry)->check(CLI::PositiveNumber);
  sp->add_option("--threads", sflags.threads)->check(CLI::Range(1u, 256u));
  sp->callback([&] { action = [&] { return cmd_search(fa, fb, sflags); }; });

  bool verify = false;
  std::optional<std::string> entry;
  auto* corp = app.add_subcommand("corpus", "List or verify the worked examples");
  corp->add_flag("--verify", verify, "Recompute every expected verdict");
  corp->add_option("entry", entry, "Restrict to one entry");
  corp->callback([&] { action = [&] { return cmd_corpus(verify, entry); }; });

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Report r = action();
    out << (compact ? r.json.dump() : r.json.dump(2)) << '\n';
    return r.code;
  } catch (const FormatError& e) {
    err << "sft: " << e.what() << '\n';
  } catch (const DimensionError& e) {
    err << "sft: dimension error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "sft: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "sft: malformed JSON input: " << e.what() << '\n';
  }
  return kExitDataFormat;
}

}  // namespace sft
