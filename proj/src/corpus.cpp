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

#include "sft/corpus.hpp"

#include "sft/conjugacy.hpp"
#include "sft/dimension.hpp"
#include "sft/normal_form.hpp"

#include <array>
#include <stdexcept>

namespace sft {
namespace {

// ---------------------------------------------------------------------------
// Ashley's graph, checked at compile time.

constexpr std::size_t kAshleyN = 8;
using Small = std::array<std::array<long long, kAshleyN>, kAshleyN>;

// Out-edges per vertex (0-based).
constexpr std::array<std::array<std::size_t, 2>, kAshleyN> kAshleyEdges = {{
    {2, 0}, {0, 1}, {4, 5}, {1, 7}, {6, 3}, {3, 4}, {7, 2}, {5, 6},
}};

constexpr Small ashley_small() {
  Small a{};
  for (std::size_t i = 0; i < kAshleyN; ++i)
    for (std::size_t t : kAshleyEdges[i]) a[i][t] += 1;
  return a;
}

constexpr Small small_mul(const Small& x, const Small& y) {
  Small z{};
  for (std::size_t i = 0; i < kAshleyN; ++i)
    for (std::size_t k = 0; k < kAshleyN; ++k)
      for (std::size_t j = 0; j < kAshleyN; ++j) z[i][j] += x[i][k] * y[k][j];
  return z;
}

constexpr bool zero_one_degree_two(const Small& a) {
  for (std::size_t i = 0; i < kAshleyN; ++i) {
    long long row = 0, col = 0;
    for (std::size_t j = 0; j < kAshleyN; ++j) {
      if (a[i][j] != 0 && a[i][j] != 1) return false;
      row += a[i][j];
      col += a[j][i];
    }
    if (row != 2 || col != 2) return false;
  }
  return true;
}

// Faddeev-LeVerrier; coefficients lowest degree first.
constexpr std::array<long long, kAshleyN + 1> small_char_poly(const Small& a) {
  std::array<long long, kAshleyN + 1> c{};
  c[kAshleyN] = 1;
  Small m{};
  for (std::size_t k = 1; k <= kAshleyN; ++k) {
    Small am = small_mul(a, m);
    for (std::size_t i = 0; i < kAshleyN; ++i) am[i][i] += c[kAshleyN - k + 1];
    m = am;
    const Small next = small_mul(a, m);
    long long trace = 0;
    for (std::size_t i = 0; i < kAshleyN; ++i) trace += next[i][i];
    c[kAshleyN - k] = -trace / static_cast<long long>(k);
  }
  return c;
}

constexpr bool seventh_power_is_sixteen(const Small& a) {
  Small p = a;
  for (int i = 1; i < 7; ++i) p = small_mul(p, a);
  for (const auto& row : p)
    for (long long x : row)
      if (x != 16) return false;
  return true;
}

constexpr Small kAshley = ashley_small();
static_assert(zero_one_degree_two(kAshley),
              "Ashley graph: entries must be 0/1 with row and column sums 2");
static_assert(small_char_poly(kAshley) ==
                  std::array<long long, kAshleyN + 1>{0, 0, 0, 0, 0, 0, 0, -2, 1},
              "Ashley graph: characteristic polynomial must be x^7 (x - 2)");
static_assert(seventh_power_is_sixteen(kAshley),
              "Ashley graph: A^7 must equal 16 1 1^t");

// ---------------------------------------------------------------------------

std::string bool_string(bool b) { return b ? "true" : "false"; }

std::string vector_string(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + "]";
}

std::string unital(const SeCertificate& c) {
  return verdict_string(unital_condition(c));
}

IntMatrix from_ll(std::initializer_list<std::initializer_list<long long>> rows) {
  return IntMatrix(rows);
}

CorpusEntry z_half_chain() {
  const IntMatrix a = {{2}};
  const IntMatrix b = {{1, 1}, {1, 1}};
  const IntMatrix c = {{1, 0, 1}, {1, 0, 1}, {0, 1, 1}};
  const SeCertificate a_to_b{a, b, from_ll({{1, 1}}), from_ll({{1}, {1}}), 1};
  const SeCertificate b_to_c{b, c, from_ll({{1, 0, 1}, {0, 1, 1}}),
                             from_ll({{1, 0}, {1, 0}, {0, 1}}), 1};
  const SeCertificate a_to_c = compose(a_to_b, b_to_c);

  CorpusEntry e{"z-half-chain",
                "(2), its outsplit [[1,1],[1,1]] and the insplit C; C is not "
                "unitally shift equivalent to the other two",
                {{"A", a}, {"B", b}, {"C", c}},
                {{"A->B", a_to_b}, {"B->C", b_to_c}, {"A->C", a_to_c}},
                {}};
  e.expected = {
      {"unital A->B", "yes(0,0)", [=] { return unital(a_to_b); }},
      {"unital B->C", "no", [=] { return unital(b_to_c); }},
      {"unital A->C", "no", [=] { return unital(a_to_c); }},
      {"composed R", "[[1,1,2]]", [=] { return to_string(a_to_c.r); }},
      {"composed S", "[[1],[1],[1]]", [=] { return to_string(a_to_c.s); }},
      {"one-sided A ~ B", "true",
       [=] { return bool_string(one_sided_conjugate(a, b).conjugate); }},
  };
  return e;
}

CorpusEntry ak_bk_entry(unsigned k, unsigned j) {
  const SeCertificate cert = ak_bk_certificate(k, j);
  CorpusEntry e{"ak-bk-" + std::to_string(k),
                "A_k, B_k similar over Z via P_k; lag " +
                    std::to_string(2 * j + 1) + " certificate",
                {{"A", cert.a}, {"B", cert.b}},
                {{"A->B", cert}},
                {}};
  const std::string expected_unital = "yes(0," + std::to_string(j - 1) + ")";
  e.expected = {
      {"unital A->B", expected_unital, [=] { return unital(cert); }},
      {"commuting square", "true",
       [=] { return bool_string(check_commuting_square(cert.r, cert.a, cert.b).ok); }},
      {"BF isomorphism", "true",
       [=] { return bool_string(bf_induced_map(cert.r, cert.a, cert.b).is_isomorphism); }},
  };
  if (k == 3 && j == 3) {
    e.expected.push_back({"R", "[[8,3],[1,16]]", [=] { return to_string(cert.r); }});
    e.expected.push_back(
        {"S", "[[314,387],[129,157]]", [=] { return to_string(cert.s); }});
  }
  return e;
}

CorpusEntry bff_entry() {
  const IntMatrix a1 = {{2, 0, 4}, {1, 2, 0}, {1, 2, 0}};
  const IntMatrix four = {{4}};
  // A1^2 = (2,1,1)^t (4,4,4) has rank one.
  const SeCertificate cert{a1, four, from_ll({{2}, {1}, {1}}),
                           from_ll({{4, 4, 4}}), 2};
  CorpusEntry e{"bff", "A_1 and (4): conjugate higher powers, not one-sided conjugate",
                {{"A1", a1}, {"B1", four}}, {{"A1->B1", cert}}, {}};
  e.expected = {
      {"higher powers", "true",
       [=] { return bool_string(conjugate_higher_powers(a1, four).agree); }},
      {"one-sided", "false",
       [=] { return bool_string(one_sided_conjugate(a1, four).conjugate); }},
      {"total(A1^3)", "[[64]]",
       [=] { return to_string(total_amalgamation(mat_pow(a1, 3)).total); }},
      {"total(A1^4)", "[[256]]",
       [=] { return to_string(total_amalgamation(mat_pow(a1, 4)).total); }},
      {"unital A1->B1", "yes(0,1)", [=] { return unital(cert); }},
  };
  return e;
}

CorpusEntry brix_carlsen_entry() {
  const IntMatrix a = {{0, 2, 2}, {1, 0, 0}, {1, 0, 0}};
  const IntMatrix b = {{0, 3, 1}, {1, 0, 0}, {1, 0, 0}};
  CorpusEntry e{"brix-carlsen",
                "eventually conjugate in Matsumoto's sense, but no conjugate "
                "higher powers",
                {{"A", a}, {"B", b}}, {}, {}};
  e.expected = {
      {"higher powers", "false",
       [=] { return bool_string(conjugate_higher_powers(a, b).agree); }},
      {"interpretation", "joint",
       [=] { return std::string(to_string(conjugate_higher_powers(a, b).interpretation)); }},
  };
  return e;
}

CorpusEntry ashley_entry() {
  const IntMatrix a = ashley_matrix();
  const IntMatrix two = {{2}};
  const SeCertificate cert{a, two, IntMatrix::filled(8, 1, 16),
                           IntMatrix::filled(1, 8, 1), 7};
  CorpusEntry e{"ashley", "Ashley's graph and the full 2-shift",
                {{"A", a}, {"B", two}}, {{"A->B", cert}}, {}};
  e.expected = {
      {"char poly", "x^8 - 2x^7",
       [=] { return to_string(char_poly(a)); }},
      {"unital A->B", "yes(0,7)", [=] { return unital(cert); }},
      {"higher powers", "true",
       [=] { return bool_string(conjugate_higher_powers(a, two).agree); }},
      {"BF factors", "[1,1,1,1,1,1,1,1]",
       [=] { return vector_string(bowen_franks(a).invariant_factors); }},
  };
  return e;
}

CorpusEntry rourke_entry() {
  const MoveSequence path = rourke_path();
  const IntMatrix& b = path.start;
  const IntMatrix& a = path.finish();
  const Move& balanced = path.steps.at(1);
  const auto& w = std::get<BalancedElementaryMove>(balanced.witness);
  const SeCertificate chain = certificate_for_sequence(path);
  const SeCertificate lag2 = balanced_to_unital_se(balanced.from, balanced.to,
                                                   w.s, w.r_from, w.r_to)
                                 .cert;
  CorpusEntry e{"rourke", "Rourke's shift equivalent primitive matrices",
                {{"A", a},
                 {"B", b},
                 {"B'", balanced.from},
                 {"B''", balanced.to},
                 {"R0", std::get<OutsplitMove>(path.steps[0].witness).e},
                 {"S0", std::get<OutsplitMove>(path.steps[0].witness).d.matrix()},
                 {"R1'", w.r_from},
                 {"R1''", w.r_to},
                 {"S1'", w.s}},
                {{"B->A", chain}, {"B'->B''", lag2}},
                {}};
  e.expected = {
      {"path verifies", "true",
       [=] { return bool_string(verify_move_sequence(path).ok); }},
      {"higher powers", "true",
       [=] { return bool_string(conjugate_higher_powers(a, b).agree); }},
      {"unital B'->B''", "yes(0,1)", [=] { return unital(lag2); }},
      {"unital B->A", "yes(0,3)", [=] { return unital(chain); }},
  };
  for (unsigned n = 2; n <= 7; ++n) {
    e.expected.push_back(
        {"total(B^" + std::to_string(n) + ") ~ A^" + std::to_string(n), "true",
         [=] {
           const IntMatrix t = total_amalgamation(mat_pow(b, n)).total;
           return bool_string(permutation_equivalent(t, mat_pow(a, n)).has_value());
         }});
  }
  return e;
}

CorpusEntry kim_roush_entry() {
  const IntMatrix a = {{0, 0, 1, 1, 3, 0, 0}, {1, 0, 0, 0, 3, 0, 0},
                       {0, 1, 0, 0, 3, 0, 0}, {0, 0, 1, 0, 3, 0, 0},
                       {0, 0, 0, 0, 0, 0, 1}, {1, 1, 1, 1, 10, 0, 0},
                       {1, 1, 1, 1, 0, 1, 0}};
  const IntMatrix b = {{0, 0, 1, 1, 3, 0, 0}, {0, 0, 1, 1, 0, 0, 0},
                       {0, 0, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 1}, {4, 5, 6, 3, 10, 0, 0},
                       {4, 5, 6, 3, 0, 1, 0}};
  CorpusEntry e{"kim-roush",
                "counterexample to the Williams conjecture; shift equivalent "
                "with lag 13 (certificate not stored)",
                {{"A", a}, {"B", b}}, {}, {}};
  e.expected = {
      {"BF factors agree", "true",
       [=] {
         return bool_string(bowen_franks(a).invariant_factors ==
                            bowen_franks(b).invariant_factors);
       }},
      {"BF sign agrees", "true",
       [=] { return bool_string(bowen_franks(a).sign == bowen_franks(b).sign); }},
      {"char polys agree up to x", "true",
       [=] { return bool_string(agree_up_to_x_factors(char_poly(a), char_poly(b))); }},
  };
  return e;
}

}  // namespace

IntMatrix ashley_matrix() {
  IntMatrix a(kAshleyN, kAshleyN);
  for (std::size_t i = 0; i < kAshleyN; ++i)
    for (std::size_t j = 0; j < kAshleyN; ++j) a(i, j) = kAshley[i][j];
  return a;
}

SeCertificate ak_bk_certificate(unsigned k, unsigned j) {
  if (k < 2 || j < 1) throw DomainError("ak_bk_certificate: need k >= 2, j >= 1");
  const long long kk = k;
  const IntMatrix a = {{1, kk}, {kk - 1, 1}};
  const IntMatrix b = {{1, (kk - 1) * kk}, {1, 1}};
  const IntMatrix p = {{kk - 1, kk}, {1, 1}};
  const IntMatrix p_inv = {{-1, kk}, {1, 1 - kk}};  // det P_k = -1
  return SeCertificate{a, b, p_inv * mat_pow(b, j), b * p * mat_pow(a, j),
                       2 * j + 1};
}

MoveSequence rourke_path() {
  const IntMatrix b = {{1, 0, 1, 0, 1}, {0, 1, 1, 1, 0}, {1, 1, 1, 0, 0},
                       {1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}};
  const IntMatrix a = {{1, 2, 1}, {1, 1, 0}, {1, 0, 1}};
  const IntMatrix r0 = {{1, 0, 1, 0, 1}, {0, 1, 0, 1, 0}, {1, 1, 1, 0, 0},
                        {1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 0}};
  const IntMatrix s0 = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 1},
                        {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
                        {0, 0, 0, 0, 1, 0}};
  const IntMatrix r1p = {{1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1},
                         {1, 1, 1, 0, 0, 1}, {1, 0, 0, 0, 1, 0},
                         {0, 0, 1, 0, 0, 0}};
  const IntMatrix r1pp = {{1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1},
                          {1, 0, 1, 0, 1, 1}, {1, 0, 0, 0, 1, 0},
                          {0, 0, 1, 0, 0, 0}};
  const IntMatrix s1p = {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0},
                         {0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}};

  MoveSequence seq{b, {}};
  // B = S0 R0 and B' = R0 S0: an outsplit with D = S0.
  const IntMatrix b1 = r0 * s0;
  seq.steps.push_back(Move{OutsplitMove{DivisionMatrix(s0), r0}, b, b1});
  const IntMatrix b2 = s1p * r1pp;
  seq.steps.push_back(Move{BalancedElementaryMove{s1p, r1p, r1pp}, b1, b2});
  const TotalAmalgamation total = total_amalgamation(b2);
  for (const Move& m : total.seq.steps) seq.steps.push_back(m);
  const auto sigma = permutation_equivalent(total.total, a);
  if (!sigma) throw std::logic_error("rourke_path: total(B'') is not A");
  if (!(total.total == a)) seq.steps.push_back(permutation_move(total.total, sigma->mapping));
  return seq;
}

std::string verdict_string(const UnitalVerdict& v) {
  switch (v.outcome) {
    case UnitalVerdict::Outcome::kYes:
      return "yes(" + std::to_string(v.m) + "," + std::to_string(v.k) + ")";
    case UnitalVerdict::Outcome::kNo:
      return "no";
    case UnitalVerdict::Outcome::kInconclusive:
      return "inconclusive(" + std::to_string(v.bound) + ")";
  }
  return "inconclusive";
}

const IntMatrix& CorpusEntry::matrix(std::string_view n) const {
  for (const auto& m : matrices)
    if (m.name == n) return m.matrix;
  throw std::out_of_range("no matrix '" + std::string(n) + "' in " + name);
}

const SeCertificate& CorpusEntry::certificate(std::string_view n) const {
  for (const auto& c : certificates)
    if (c.name == n) return c.cert;
  throw std::out_of_range("no certificate '" + std::string(n) + "' in " + name);
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    out.push_back(z_half_chain());
    // Smallest j > 1 for which P_k^{-1} B_k^j is nonnegative.
    out.push_back(ak_bk_entry(3, 3));
    out.push_back(ak_bk_entry(4, 5));
    out.push_back(ak_bk_entry(5, 7));
    out.push_back(bff_entry());
    out.push_back(brix_carlsen_entry());
    out.push_back(ashley_entry());
    out.push_back(rourke_entry());
    out.push_back(kim_roush_entry());
    return out;
  }();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw std::out_of_range("no corpus entry '" + std::string(name) + "'");
}

std::vector<CorpusCheck> verify_corpus() {
  std::vector<CorpusCheck> out;
  for (const auto& e : corpus()) {
    for (const auto& c : e.certificates) {
      const SeCheck check = verify_se(c.cert);
      out.push_back({e.name, c.name, true, "valid",
                     check.ok() ? "valid" : check.detail, check.ok()});
    }
    for (const auto& x : e.expected) {
      std::string actual;
      try {
        actual = x.compute();
      } catch (const std::exception& ex) {
        actual = std::string("error: ") + ex.what();
      }
      out.push_back({e.name, x.name, false, x.expected, actual,
                     actual == x.expected});
    }
  }
  return out;
}

}  // namespace sft
