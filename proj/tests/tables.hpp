#ifndef FJT_TESTS_TABLES_HPP_
#define FJT_TESTS_TABLES_HPP_

// Expected classification rows and tower chains for the six families,
// written out from the closed formulas of the tables. Low-rank names are
// canonicalized the way the library names components: B1 = C1 = A1,
// B2 = C2, D2 = A1xA1, D3 = A3, rank 0 = nothing.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fjt/root_system.hpp"

namespace tables {

using fjt::CartanType;
using fjt::Family;

using Factors = std::vector<std::pair<Family, int>>;

inline Factors canon(Family f, int n) {
  if (n <= 0) return {};
  switch (f) {
    case Family::A: return {{Family::A, n}};
    case Family::B:
      if (n == 1) return {{Family::A, 1}};
      if (n == 2) return {{Family::C, 2}};
      return {{Family::B, n}};
    case Family::C:
      if (n == 1) return {{Family::A, 1}};
      return {{Family::C, n}};
    case Family::D:
      if (n == 1) return {};
      if (n == 2) return {{Family::A, 1}, {Family::A, 1}};
      if (n == 3) return {{Family::A, 3}};
      return {{Family::D, n}};
    case Family::E: return {{Family::E, n}};
  }
  return {};
}

inline std::string name(Factors fs) {
  if (fs.empty()) return "0";
  std::sort(fs.begin(), fs.end());
  std::string out;
  for (const auto& [f, n] : fs) {
    if (!out.empty()) out += "x";
    out += CartanType{f, n}.name();
  }
  return out;
}

inline Factors operator*(Factors a, const Factors& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct Row {
  std::string column;  // "C_n", "A_{2n-1}", ...
  CartanType type;
  int node = 0;        // 1-based
  std::string m_der;
  int dim_n = 0;
  int r = 0;
  int d = 0;           // compared only when r >= 2
};

struct Step {
  std::string name;
  int r = 0;
  std::string m_der;
  std::string l_der;  // "" at the terminal entry
};

struct Tower {
  std::string column;
  CartanType type;
  int node = 0;  // 1-based
  std::vector<Step> chain;
};

// C_n n<=6, A_{2n-1} n<=4, D_{2n} n<=3, E7, B_{n+1} n<=5, D_{n+1} n<=5
inline std::vector<Row> classification_rows() {
  std::vector<Row> rows;
  for (int n = 2; n <= 6; ++n)
    rows.push_back({"C_n", {Family::C, n}, n, name(canon(Family::A, n - 1)), n * (n + 1) / 2, n, 1});
  for (int n = 1; n <= 4; ++n)
    rows.push_back({"A_{2n-1}", {Family::A, 2 * n - 1}, n,
                    name(canon(Family::A, n - 1) * canon(Family::A, n - 1)), n * n, n, 2});
  for (int n = 2; n <= 3; ++n)
    for (int node : {2 * n - 1, 2 * n})
      rows.push_back({"D_{2n}", {Family::D, 2 * n}, node, name(canon(Family::A, 2 * n - 1)), n * (2 * n - 1), n, 4});
  rows.push_back({"E_7", {Family::E, 7}, 7, "E6", 27, 3, 8});
  for (int n = 1; n <= 5; ++n)
    rows.push_back({"B_{n+1}", {Family::B, n + 1}, 1, name(canon(Family::B, n)), 2 * n + 1, 2, 2 * n - 1});
  for (int n = 2; n <= 5; ++n)
    rows.push_back({"D_{n+1}", {Family::D, n + 1}, 1, name(canon(Family::D, n)), 2 * n, 2, 2 * n - 2});
  return rows;
}

// The D_{2n} column follows the corrected g1 = D_{2n-2} (the spin node lies in
// the D_{2n-2} factor of the Heisenberg Levi); for n = 2 that is A1.
inline std::vector<Tower> tower_chains() {
  std::vector<Tower> out;
  const Step terminal{"A1", 1, "0", ""};
  for (int n = 2; n <= 6; ++n) {
    Tower t{"C_n", {Family::C, n}, n, {}};
    for (int k = n; k >= 2; --k)
      t.chain.push_back({k == n ? CartanType{Family::C, k}.name() : name(canon(Family::C, k)), k,
                         name(canon(Family::A, k - 1)), name(canon(Family::C, k - 1))});
    t.chain.push_back(terminal);
    out.push_back(t);
  }
  for (int n = 1; n <= 4; ++n) {
    Tower t{"A_{2n-1}", {Family::A, 2 * n - 1}, n, {}};
    for (int k = n; k >= 2; --k)
      t.chain.push_back({name(canon(Family::A, 2 * k - 1)), k,
                         name(canon(Family::A, k - 1) * canon(Family::A, k - 1)),
                         name(canon(Family::A, 2 * k - 3))});
    t.chain.push_back(terminal);
    out.push_back(t);
  }
  for (int n = 2; n <= 3; ++n) {
    Tower t{"D_{2n}", {Family::D, 2 * n}, 2 * n, {}};
    for (int k = n; k >= 2; --k)
      t.chain.push_back({name(canon(Family::D, 2 * k)), k, name(canon(Family::A, 2 * k - 1)),
                         name(canon(Family::A, 1) * canon(Family::D, 2 * k - 2))});
    t.chain.push_back(terminal);
    out.push_back(t);
  }
  out.push_back({"E_7", {Family::E, 7}, 7, {{"E7", 3, "E6", "D6"}, {"D6", 2, "D5", "A1xD4"}, terminal}});
  for (int n = 1; n <= 5; ++n)
    out.push_back({"B_{n+1}", {Family::B, n + 1}, 1,
                   {{CartanType{Family::B, n + 1}.name(), 2, name(canon(Family::B, n)),
                     name(canon(Family::A, 1) * canon(Family::B, n - 1))},
                    terminal}});
  for (int n = 2; n <= 5; ++n)
    out.push_back({"D_{n+1}", {Family::D, n + 1}, 1,
                   {{CartanType{Family::D, n + 1}.name(), 2, name(canon(Family::D, n)),
                     name(canon(Family::A, 1) * canon(Family::D, n - 1))},
                    terminal}});
  return out;
}

}  // namespace tables

#endif  // FJT_TESTS_TABLES_HPP_
