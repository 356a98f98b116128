#include "xline/seidel.hpp"

#include <deque>
#include <istream>
#include <ostream>
#include <string>

namespace xline {

SeidelMatrix negated(const SeidelMatrix& E) {
  SeidelMatrix out = E;
  for (auto& v : out.entries) v = -v;
  return out;
}

bool is_seidel(const SeidelMatrix& E) {
  if (E.entries.size() != static_cast<size_t>(E.n) * E.n) return false;
  for (int i = 0; i < E.n; ++i)
    for (int j = 0; j < E.n; ++j) {
      int v = E.at(i, j);
      if (i == j ? v != 0 : (v != 1 && v != -1)) return false;
      if (E.at(j, i) != v) return false;
    }
  return true;
}

SynthesisResult synthesize(const std::vector<SignedPerm>& gens, int n, int seed_sign) {
  if (seed_sign != 1 && seed_sign != -1) fail(Errc::zero_argument, "seed sign must be +1 or -1");
  if (!is_two_transitive(gens, n))
    fail(Errc::not_two_transitive, "generators do not act 2-transitively on the lines");

  std::vector<SignedPerm> all = gens;
  for (const auto& g : gens) {
    SignedPerm inv = inverse(g);
    if (inv != g) all.push_back(std::move(inv));
  }

  SeidelMatrix E;
  E.n = n;
  E.entries.assign(static_cast<size_t>(n) * n, 0);
  std::vector<char> assigned(static_cast<size_t>(n) * n, 0);

  SynthesisResult result;
  // Assign both (i,j) and (j,i); a clash on either is a certificate of
  // nonexistence since any solution is symmetric.
  auto put = [&](int i, int j, int value) -> bool {
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      size_t cell = static_cast<size_t>(a) * n + b;
      if (assigned[cell]) {
        if (E.entries[cell] != value) {
          result.certificate = Contradiction{a, b, E.entries[cell], value};
          return false;
        }
      } else {
        assigned[cell] = 1;
        E.entries[cell] = value;
      }
    }
    return true;
  };

  std::deque<std::pair<int, int>> queue;
  if (!put(0, 1, seed_sign)) return result;
  queue.emplace_back(0, 1);
  queue.emplace_back(1, 0);

  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    int value = E.at(i, j);
    for (const auto& g : all) {
      int a = g.perm[i], b = g.perm[j];
      size_t cell = static_cast<size_t>(a) * n + b;
      int v = g.signs[i] * g.signs[j] * value;
      if (assigned[cell]) {
        if (E.entries[cell] != v) {
          result.certificate = Contradiction{a, b, E.entries[cell], v};
          return result;
        }
        continue;
      }
      if (!put(a, b, v)) return result;
      queue.emplace_back(a, b);
      queue.emplace_back(b, a);
    }
  }

  // 2-transitivity reaches every ordered pair, so only the diagonal may be
  // left unassigned.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !assigned[static_cast<size_t>(i) * n + j])
        fail(Errc::inconsistent_spectrum, "propagation left an off-diagonal entry unassigned");

  // Full re-check against every generator; defense against subtle action
  // bugs rather than a step the math requires.
  for (const auto& g : gens)
    if (!verify_invariance(E, g))
      fail(Errc::inconsistent_spectrum, "synthesized matrix fails the invariance relation");

  result.matrix = std::move(E);
  return result;
}

bool verify_invariance(const SeidelMatrix& E, const SignedPerm& g) {
  if (g.n() != E.n) fail(Errc::size_mismatch, "matrix and permutation sizes differ");
  for (int i = 0; i < E.n; ++i)
    for (int j = 0; j < E.n; ++j) {
      if (i == j) continue;
      if (E.at(g.perm[i], g.perm[j]) != g.signs[i] * g.signs[j] * E.at(i, j)) return false;
    }
  return true;
}

void write_seidel(std::ostream& out, const SeidelMatrix& E) {
  out << E.n << "\n";
  for (int i = 0; i < E.n; ++i) {
    std::string row(E.n, '0');
    for (int j = 0; j < E.n; ++j) {
      int v = E.at(i, j);
      row[j] = v == 0 ? '0' : v > 0 ? '+' : '-';
    }
    out << row << "\n";
  }
}

SeidelMatrix read_seidel(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) fail(Errc::parse_error, "expected matrix size on line 1");
  if (n > (1 << 16)) fail(Errc::bound_exceeded, "matrix size out of range");
  SeidelMatrix E;
  E.n = n;
  E.entries.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    std::string row;
    if (!(in >> row)) fail(Errc::parse_error, "truncated matrix row");
    if (static_cast<int>(row.size()) != n) fail(Errc::parse_error, "row length differs from size");
    for (int j = 0; j < n; ++j) {
      char c = row[j];
      if (c == '0')
        E.at(i, j) = 0;
      else if (c == '+')
        E.at(i, j) = 1;
      else if (c == '-')
        E.at(i, j) = -1;
      else
        fail(Errc::parse_error, std::string("bad matrix character '") + c + "'");
    }
  }
  if (!is_seidel(E)) fail(Errc::parse_error, "matrix is not symmetric with zero diagonal");
  return E;
}

}  // namespace xline
