#include "ff/table_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ff/error.hpp"

namespace ff {

namespace {

constexpr int kUnset = -1;

class TableSearch {
 public:
  explicit TableSearch(unsigned q) : q_(q), add_(q * q, kUnset), mul_(q * q, kUnset) {
    for (unsigned j = 0; j < q; ++j) {
      set(add_, 0, j, static_cast<int>(j));
      set(mul_, 0, j, 0);
      if (q > 1) set(mul_, 1, j, static_cast<int>(j));
    }
    for (unsigned i = 1; i < q; ++i) {
      for (unsigned j = i; j < q; ++j) add_cells_.emplace_back(i, j);
    }
    for (unsigned i = 2; i < q; ++i) {
      for (unsigned j = i; j < q; ++j) mul_cells_.emplace_back(i, j);
    }
  }

  std::vector<OperationTables> run() {
    fill_add(0);
    return std::move(found_);
  }

 private:
  int at(const std::vector<int>& t, unsigned i, unsigned j) const { return t[i * q_ + j]; }
  void set(std::vector<int>& t, unsigned i, unsigned j, int v) {
    t[i * q_ + j] = v;
    t[j * q_ + i] = v;
  }

  bool latin_ok(const std::vector<int>& t, unsigned i, unsigned j, int v, unsigned from) const {
    for (unsigned k = from; k < q_; ++k) {
      if (k != j && at(t, i, k) == v) return false;
      if (k != i && at(t, k, j) == v) return false;
    }
    return true;
  }

  // (a o b) o c == a o (b o c) for every triple where all lookups are known
  bool associative(const std::vector<int>& t) const {
    for (unsigned a = 0; a < q_; ++a) {
      for (unsigned b = 0; b < q_; ++b) {
        const int ab = at(t, a, b);
        if (ab == kUnset) continue;
        for (unsigned c = 0; c < q_; ++c) {
          const int bc = at(t, b, c);
          if (bc == kUnset) continue;
          const int lhs = at(t, ab, c), rhs = at(t, a, bc);
          if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
        }
      }
    }
    return true;
  }

  // a*(b+c) == a*b + a*c wherever determined
  bool distributive() const {
    for (unsigned a = 0; a < q_; ++a) {
      for (unsigned b = 0; b < q_; ++b) {
        const int ab = at(mul_, a, b);
        if (ab == kUnset) continue;
        for (unsigned c = b; c < q_; ++c) {
          const int ac = at(mul_, a, c);
          if (ac == kUnset) continue;
          const int lhs = at(mul_, a, at(add_, b, c));
          if (lhs != kUnset && lhs != at(add_, ab, ac)) return false;
        }
      }
    }
    return true;
  }

  void fill_add(std::size_t k) {
    if (k == add_cells_.size()) {
      fill_mul(0);
      return;
    }
    const auto [i, j] = add_cells_[k];
    for (unsigned v = 0; v < q_; ++v) {
      if (!latin_ok(add_, i, j, static_cast<int>(v), 0)) continue;
      set(add_, i, j, static_cast<int>(v));
      if (associative(add_)) fill_add(k + 1);
      set(add_, i, j, kUnset);
    }
  }

  void fill_mul(std::size_t k) {
    if (k == mul_cells_.size()) {
      emit();
      return;
    }
    const auto [i, j] = mul_cells_[k];
    for (unsigned v = 1; v < q_; ++v) {
      if (!latin_ok(mul_, i, j, static_cast<int>(v), 1)) continue;
      set(mul_, i, j, static_cast<int>(v));
      if (distributive() && associative(mul_)) fill_mul(k + 1);
      set(mul_, i, j, kUnset);
    }
  }

  void emit() {
    OperationTables t;
    t.order = q_;
    for (unsigned s = 0; s < q_; ++s) {
      t.labels.push_back(s < 2 ? std::to_string(s) : std::string(1, static_cast<char>('a' + s - 2)));
    }
    t.add.assign(add_.begin(), add_.end());
    t.mul.assign(mul_.begin(), mul_.end());
    if (satisfies_field_axioms(t)) found_.push_back(std::move(t));
  }

  unsigned q_;
  std::vector<int> add_, mul_;
  std::vector<std::pair<unsigned, unsigned>> add_cells_, mul_cells_;
  std::vector<OperationTables> found_;
};

// relabeled[perm[i]][perm[j]] = perm[t[i][j]]
std::vector<std::uint32_t> relabel(const std::vector<std::uint32_t>& t,
                                   const std::vector<std::uint32_t>& perm, std::size_t q) {
  std::vector<std::uint32_t> out(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) out[perm[i] * q + perm[j]] = perm[t[i * q + j]];
  }
  return out;
}

// Visits every permutation of {0..q-1} that fixes 0 and 1 (and the trivial
// permutations for q < 2). Stops when `f` returns true.
template <class F>
bool for_each_relabeling(std::size_t q, F&& f) {
  std::vector<std::uint32_t> perm(q);
  std::iota(perm.begin(), perm.end(), 0u);
  const auto first_free = perm.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(q, 2));
  do {
    if (f(perm)) return true;
  } while (std::next_permutation(first_free, perm.end()));
  return false;
}

}  // namespace

std::vector<OperationTables> complete_tables(unsigned q) {
  if (q > kMaxOracleOrder) {
    throw ScaleLimitExceeded("table completion supports q <= 7, got " + std::to_string(q));
  }
  if (q < 2) throw ScaleLimitExceeded("a field has at least 2 elements");
  auto raw = TableSearch(q).run();

  std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> seen;
  std::vector<OperationTables> classes;
  for (auto& t : raw) {
    std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> canon{t.add, t.mul};
    for_each_relabeling(q, [&](const std::vector<std::uint32_t>& perm) {
      std::pair candidate{relabel(t.add, perm, q), relabel(t.mul, perm, q)};
      if (candidate < canon) canon = std::move(candidate);
      return false;
    });
    if (seen.insert(canon).second) {
      t.add = canon.first;
      t.mul = canon.second;
      classes.push_back(std::move(t));
    }
  }
  return classes;
}

bool satisfies_field_axioms(const OperationTables& t) {
  const std::size_t n = t.order;
  if (n < 2 || t.add.size() != n * n || t.mul.size() != n * n) return false;
  const auto plus = [&](std::size_t a, std::size_t b) { return t.add[a * n + b]; };
  const auto times = [&](std::size_t a, std::size_t b) { return t.mul[a * n + b]; };
  for (auto v : t.add) {
    if (v >= n) return false;
  }
  for (auto v : t.mul) {
    if (v >= n) return false;
  }
  // symbol 0 is the additive identity, symbol 1 the multiplicative one
  for (std::size_t a = 0; a < n; ++a) {
    if (plus(0, a) != a || times(1, a) != a) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool has_neg = false, has_inv = a == 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (plus(a, b) != plus(b, a) || times(a, b) != times(b, a)) return false;
      if (plus(a, b) == 0) has_neg = true;
      if (a != 0 && times(a, b) == 1) has_inv = true;
      for (std::size_t c = 0; c < n; ++c) {
        if (plus(plus(a, b), c) != plus(a, plus(b, c))) return false;
        if (times(times(a, b), c) != times(a, times(b, c))) return false;
        if (times(a, plus(b, c)) != plus(times(a, b), times(a, c))) return false;
      }
    }
    if (!has_neg || !has_inv) return false;
  }
  return true;
}

bool match_tables(const OperationTables& solution, const OperationTables& target) {
  if (solution.order != target.order) {
    throw OrderMismatch("tables of order " + std::to_string(solution.order) + " and " +
                        std::to_string(target.order));
  }
  const std::size_t q = solution.order;
  return for_each_relabeling(q, [&](const std::vector<std::uint32_t>& perm) {
    return relabel(solution.add, perm, q) == target.add && relabel(solution.mul, perm, q) == target.mul;
  });
}

bool match_against_field(const OperationTables& solution, const FieldSpec& field) {
  if (solution.order != field.order()) {
    throw OrderMismatch("solution of order " + std::to_string(solution.order) + " vs GF(" +
                        std::to_string(field.order()) + ")");
  }
  return match_tables(solution, operation_tables(field));
}

OperationTables integer_ring_tables(unsigned n) {
  OperationTables t;
  t.order = n;
  for (unsigned i = 0; i < n; ++i) t.labels.push_back(std::to_string(i));
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      t.add[i * n + j] = (i + j) % n;
      t.mul[i * n + j] = (i * j) % n;
    }
  }
  return t;
}

}  // namespace ff
