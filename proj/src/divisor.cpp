#include "graphjac/divisor.hpp"

#include <algorithm>
#include <deque>

#include "graphjac/linalg.hpp"

namespace graphjac {

Integer degree(const Divisor& d) {
  Integer s = 0;
  for (const auto& x : d.values()) s += x;
  return s;
}

Divisor div_of_function(const MultiGraph& g, const VertexFunction& f) {
  if (f.size() != g.vertex_count())
    throw Error(ErrorCode::DimensionMismatch,
                "function length != vertex count");
  Divisor d(g.vertex_count());
  Integer diff;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const auto& nb : g.neighbors(v)) {
      diff = f[v] - f[nb.vertex];
      d[v] += diff * static_cast<unsigned long>(nb.multiplicity);
    }
  return d;
}

std::optional<VertexFunction> is_principal(const MultiGraph& g,
                                           const Divisor& d) {
  if (d.size() != g.vertex_count())
    throw Error(ErrorCode::DimensionMismatch,
                "divisor length != vertex count");
  if (!is_zero(degree(d))) return std::nullopt;
  auto x = solve_integer(laplacian(g), d.values());
  if (!x) return std::nullopt;
  return VertexFunction(std::move(*x));
}

namespace {

void check_length(const MultiGraph& g, const Divisor& d, Vertex q) {
  if (d.size() != g.vertex_count())
    throw Error(ErrorCode::DimensionMismatch,
                "divisor length != vertex count");
  if (q >= g.vertex_count())
    throw Error(ErrorCode::VertexOutOfRange, "base vertex out of range");
}

struct Burn {
  std::vector<bool> burnt;
  std::vector<std::uint64_t> edges_to_burnt;
  std::size_t burnt_count = 0;
};

// Fire spreads from q; an unburnt vertex v catches once the edges joining it
// to burnt vertices outnumber its chips.
Burn burn_from(const MultiGraph& g, const Divisor& d, Vertex q) {
  const std::size_t n = g.vertex_count();
  Burn b{std::vector<bool>(n, false), std::vector<std::uint64_t>(n, 0), 1};
  std::deque<Vertex> queue{q};
  b.burnt[q] = true;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(u)) {
      const Vertex w = nb.vertex;
      if (b.burnt[w]) continue;
      b.edges_to_burnt[w] += nb.multiplicity;
      if (cmp(d[w], b.edges_to_burnt[w]) < 0) {
        b.burnt[w] = true;
        ++b.burnt_count;
        queue.push_back(w);
      }
    }
  }
  return b;
}

// Make every coefficient off q nonnegative. Vertices are visited farthest
// first in BFS order from q; firing the set of all earlier vertices only
// adds chips to v and to the vertices already fixed.
void make_nonnegative_off_q(const MultiGraph& g, Divisor& d, Vertex q) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order{q};
  std::vector<std::size_t> pos(n, n);
  pos[q] = 0;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (const auto& nb : g.neighbors(order[head]))
      if (pos[nb.vertex] == n) {
        pos[nb.vertex] = order.size();
        order.push_back(nb.vertex);
      }

  Integer k, need, delta;
  for (std::size_t i = n; i-- > 1;) {
    const Vertex v = order[i];
    if (sgn(d[v]) >= 0) continue;
    std::uint64_t into_v = 0;
    for (const auto& nb : g.neighbors(v))
      if (pos[nb.vertex] < i) into_v += nb.multiplicity;
    need = -d[v];
    mpz_cdiv_q_ui(k.get_mpz_t(), need.get_mpz_t(), into_v);
    for (std::size_t s = 0; s < i; ++s) {
      const Vertex u = order[s];
      for (const auto& nb : g.neighbors(u))
        if (pos[nb.vertex] >= i) {
          delta = k * static_cast<unsigned long>(nb.multiplicity);
          d[u] -= delta;
          d[nb.vertex] += delta;
        }
    }
  }
}

}  // namespace

bool is_q_reduced(const MultiGraph& g, const Divisor& d, Vertex q) {
  check_length(g, d, q);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != q && sgn(d[v]) < 0) return false;
  return burn_from(g, d, q).burnt_count == g.vertex_count();
}

Divisor dhar_reduce(const MultiGraph& g, const Divisor& d, Vertex q) {
  check_length(g, d, q);
  Divisor r = d;
  make_nonnegative_off_q(g, r, q);

  const std::size_t n = g.vertex_count();
  Integer k, cand, delta;
  for (;;) {
    const Burn b = burn_from(g, r, q);
    if (b.burnt_count == n) return r;
    // The unburnt set can fire legally; fire it as often as stays legal.
    bool have_k = false;
    for (Vertex v = 0; v < n; ++v) {
      if (b.burnt[v] || b.edges_to_burnt[v] == 0) continue;
      mpz_fdiv_q_ui(cand.get_mpz_t(), r[v].get_mpz_t(), b.edges_to_burnt[v]);
      if (!have_k || cand < k) {
        k = cand;
        have_k = true;
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (b.burnt[v]) continue;
      for (const auto& nb : g.neighbors(v))
        if (b.burnt[nb.vertex]) {
          delta = k * static_cast<unsigned long>(nb.multiplicity);
          r[v] -= delta;
          r[nb.vertex] += delta;
        }
    }
  }
}

Divisor dhar_reduce(const MultiGraph& g, const Divisor& d, Vertex q,
                    const IntegerMatrix& numerators,
                    const Integer& denominator) {
  check_length(g, d, q);
  const std::size_t n = g.vertex_count();
  if (numerators.rows() != n || numerators.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "inverse size != vertex count");
  // With T(v) = deg v off q and f = floor(L (D0 - T)), D0 - Q f = T + Q phi
  // for some phi in [0,1)^n, and (Q phi)(v) > -deg v. Every coefficient off q
  // therefore lands in [1, 2 deg v) without any chip-firing.
  const Integer deg = degree(d);
  Divisor d0 = d;
  d0[q] -= deg;
  Divisor shifted = d0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == q) continue;
    const Integer dv = static_cast<unsigned long>(g.degree(v));
    shifted[v] -= dv;
    shifted[q] += dv;
  }
  IntVector f = numerators * shifted.values();
  for (auto& x : f) x = floor_div(x, denominator);
  const IntVector qf = laplacian_apply(g, f);
  for (Vertex v = 0; v < n; ++v) d0[v] -= qf[v];
  d0[q] += deg;
  return dhar_reduce(g, d0, q);
}

bool equivalent(const MultiGraph& g, const Divisor& d1, const Divisor& d2) {
  const Divisor diff = d1 - d2;
  if (!is_zero(degree(diff))) return false;
  return dhar_reduce(g, diff, 0).is_zero();
}

Divisor parse_divisor(std::string_view text) {
  IntVector c;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(',', start);
    std::string tok(text.substr(start, end == std::string_view::npos
                                           ? std::string_view::npos
                                           : end - start));
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](char ch) { return ch == ' ' || ch == '\t'; }),
              tok.end());
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    Integer x;
    if (tok.empty() || tok == "-" ||
        tok.find_first_not_of("-0123456789") != std::string::npos ||
        tok.find('-', 1) != std::string::npos || x.set_str(tok, 10) != 0)
      throw Error(ErrorCode::ParseError,
                  "bad divisor entry '" + tok + "' in \"" + std::string(text) +
                      "\"");
    c.push_back(std::move(x));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return Divisor(std::move(c));
}

std::string format_divisor(const Divisor& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += d[i].get_str();
  }
  return s;
}

}  // namespace graphjac
