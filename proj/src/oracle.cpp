#include "graphjac/oracle.hpp"

#include <numeric>

namespace graphjac::oracle {

namespace {

std::vector<long> key_of(const Divisor& d) {
  std::vector<long> k(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].fits_slong_p())
      throw Error(ErrorCode::TooLarge, "coefficient out of oracle range");
    k[i] = d[i].get_si();
  }
  return k;
}

constexpr Vertex kBase = 0;

}  // namespace

std::size_t GroupTable::index_of(const Divisor& d) const {
  if (d.size() != graph_.vertex_count())
    throw Error(ErrorCode::DimensionMismatch,
                "divisor length != vertex count");
  if (!is_zero(degree(d)))
    throw Error(ErrorCode::NonZeroDegree, "group elements have degree 0");
  return index_.at(key_of(dhar_reduce(graph_, d, kBase)));
}

std::size_t GroupTable::negate(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (add(i, j) == zero_) return j;
  return zero_;  // unreachable in a group
}

std::size_t GroupTable::scale(std::size_t i, std::uint64_t k) const {
  std::size_t acc = zero_;
  for (std::uint64_t t = 0; t < k % orders_[i]; ++t) acc = add(acc, i);
  return acc;
}

GroupTable enumerate_group(const MultiGraph& g, std::uint64_t bound) {
  const std::size_t n = g.vertex_count();
  GroupTable t(g);

  // Odometer over off-base coefficients 0 <= c_v < deg v.
  Divisor d(n);
  std::vector<std::uint64_t> digit(n, 0);
  for (;;) {
    Integer off = 0;
    for (Vertex v = 0; v < n; ++v)
      if (v != kBase) {
        d[v] = static_cast<unsigned long>(digit[v]);
        off += d[v];
      }
    d[kBase] = -off;
    if (is_q_reduced(g, d, kBase)) {
      if (t.elements_.size() >= bound)
        throw Error(ErrorCode::TooLarge,
                    "group has more than " + std::to_string(bound) +
                        " elements");
      t.index_.emplace(key_of(d), t.elements_.size());
      t.elements_.push_back(d);
    }
    Vertex v = 0;
    for (; v < n; ++v) {
      if (v == kBase) continue;
      if (++digit[v] < g.degree(v)) break;
      digit[v] = 0;
    }
    if (v == n) break;
  }

  const std::size_t k = t.elements_.size();
  t.zero_ = t.index_.at(std::vector<long>(n, 0));
  t.table_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const std::size_t s =
          t.index_.at(key_of(dhar_reduce(g, t.elements_[i] + t.elements_[j],
                                         kBase)));
      t.table_[i * k + j] = s;
      t.table_[j * k + i] = s;
    }
  t.orders_.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t ord = 1;
    for (std::size_t cur = i; cur != t.zero_; cur = t.add(cur, i)) ++ord;
    t.orders_[i] = ord;
  }
  return t;
}

std::optional<std::uint64_t> brute_force_dlp(const GroupTable& table,
                                             const Divisor& d,
                                             const Divisor& d_prime) {
  const std::size_t base = table.index_of(d);
  const std::size_t target = table.index_of(d_prime);
  std::size_t cur = table.zero_index();
  for (std::uint64_t k = 0; k < table.order(base); ++k) {
    if (cur == target) return k;
    cur = table.add(cur, base);
  }
  return std::nullopt;
}

std::uint64_t brute_force_order(const GroupTable& table, const Divisor& d) {
  return table.order(table.index_of(d));
}

std::uint64_t spanning_trees_by_enumeration(const MultiGraph& g,
                                            std::size_t max_edges) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [e, k] : g.edges())
    for (std::uint64_t i = 0; i < k; ++i) edges.push_back(e);
  const std::size_t m = edges.size();
  if (m > max_edges)
    throw Error(ErrorCode::TooLarge,
                std::to_string(m) + " edges exceed enumeration limit");
  if (n == 1) return 1;

  std::uint64_t count = 0;
  std::vector<std::size_t> parent(n);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n - 1)
      continue;
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (std::size_t e = 0; e < m && acyclic; ++e) {
      if (!(mask >> e & 1)) continue;
      const std::size_t a = find(edges[e].first), b = find(edges[e].second);
      if (a == b) acyclic = false;
      else parent[a] = b;
    }
    if (acyclic) ++count;
  }
  return count;
}

}  // namespace graphjac::oracle
