#include "balgraph/cayley.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>
#include <thread>

#include "balgraph/balance.hpp"
#include "balgraph/canon.hpp"

namespace balgraph {

namespace {

int parse_int(std::string_view tok, std::string_view context) {
  int value = 0;
  const char* b = tok.data();
  const char* e = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(b, e, value);
  if (ec != std::errc{} || p != e || tok.empty())
    throw GraphError("invalid integer '" + std::string(tok) + "' in '" + std::string(context) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void chains(int remaining, int base, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 1) {
    out.push_back(cur);
    return;
  }
  for (int d = std::max(base, 2); d <= remaining; d += base) {
    if (remaining % d != 0) continue;
    cur.push_back(d);
    chains(remaining / d, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw GraphError("abelian group needs at least one invariant factor");
  order_ = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 2) throw GraphError("invariant factor " + std::to_string(orders_[i]) + " is below 2");
    if (i > 0 && orders_[i] % orders_[i - 1] != 0)
      throw GraphError("invariant factors must form a divisibility chain: " + std::to_string(orders_[i - 1]) +
                       " does not divide " + std::to_string(orders_[i]));
    if (order_ > kMaxVertices) throw SizeLimitError("group order exceeds 64");
    order_ *= orders_[i];
  }
  if (order_ > kMaxVertices) throw SizeLimitError("group order " + std::to_string(order_) + " exceeds 64");
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
  const std::string_view whole = trim(spec);
  std::vector<int> orders;
  std::string_view rest = whole;
  for (;;) {
    const auto x = rest.find_first_of("xX");
    orders.push_back(parse_int(trim(rest.substr(0, x)), whole));
    if (x == std::string_view::npos) break;
    rest.remove_prefix(x + 1);
  }
  return AbelianGroup(std::move(orders));
}

std::vector<AbelianGroup> AbelianGroup::all_of_order(int n) {
  if (n < 2) return {};
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  chains(n, 1, cur, out);
  std::vector<AbelianGroup> groups;
  for (auto& c : out) groups.emplace_back(std::move(c));
  std::sort(groups.begin(), groups.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
    if (a.orders_.size() != b.orders_.size()) return a.orders_.size() < b.orders_.size();
    return a.orders_ < b.orders_;
  });
  return groups;
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out.push_back('x');
    out += std::to_string(orders_[i]);
  }
  return out;
}

void AbelianGroup::check(const Element& x) const {
  if (x.size() != orders_.size()) throw GraphError("element arity does not match group " + to_string());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= orders_[i]) throw GraphError("coordinate out of range for group " + to_string());
}

int AbelianGroup::index(const Element& x) const {
  check(x);
  int idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx = idx * orders_[i] + x[i];
  return idx;
}

AbelianGroup::Element AbelianGroup::element(int index) const {
  if (index < 0 || index >= order_) throw GraphError("element index out of range");
  Element x(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    x[i] = index % orders_[i];
    index /= orders_[i];
  }
  return x;
}

AbelianGroup::Element AbelianGroup::add(const Element& x, const Element& y) const {
  check(x);
  check(y);
  Element z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % orders_[i];
  return z;
}

AbelianGroup::Element AbelianGroup::negate(const Element& x) const {
  check(x);
  Element z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = (orders_[i] - x[i]) % orders_[i];
  return z;
}

std::vector<AbelianGroup::Element> AbelianGroup::multiples(const Element& x) const {
  std::vector<Element> out{identity()};
  for (Element y = add(identity(), x); y != identity(); y = add(y, x)) out.push_back(y);
  return out;
}

int AbelianGroup::element_order(const Element& x) const { return static_cast<int>(multiples(x).size()); }

int AbelianGroup::add_index(int x, int y) const { return index(add(element(x), element(y))); }
int AbelianGroup::negate_index(int x) const { return index(negate(element(x))); }

namespace {

// Addition table over element indices.
struct GroupTable {
  explicit GroupTable(const AbelianGroup& g) : n(g.order()) {
    sum.resize(static_cast<std::size_t>(n * n));
    neg.resize(static_cast<std::size_t>(n));
    std::vector<AbelianGroup::Element> el;
    for (int i = 0; i < n; ++i) el.push_back(g.element(i));
    for (int i = 0; i < n; ++i) {
      neg[static_cast<std::size_t>(i)] = g.index(g.negate(el[static_cast<std::size_t>(i)]));
      for (int j = 0; j < n; ++j)
        sum[static_cast<std::size_t>(i * n + j)] = g.index(g.add(el[static_cast<std::size_t>(i)], el[static_cast<std::size_t>(j)]));
    }
  }
  int add(int a, int b) const { return sum[static_cast<std::size_t>(a * n + b)]; }
  int n;
  std::vector<int> sum;
  std::vector<int> neg;
};

Graph cayley_from_table(const GroupTable& t, const std::vector<int>& s) {
  std::vector<Bits> rows(static_cast<std::size_t>(t.n), 0);
  for (int x = 0; x < t.n; ++x)
    for (int e : s) rows[static_cast<std::size_t>(x)] |= bit(t.add(x, e));
  return Graph::from_rows(std::move(rows));
}

}  // namespace

ConnectionSet ConnectionSet::make(const AbelianGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int e : elements) {
    if (e < 0 || e >= g.order()) throw GraphError("connection set element out of range for group " + g.to_string());
    if (e == 0) throw GraphError("connection set contains the identity");
    if (!std::binary_search(elements.begin(), elements.end(), g.negate_index(e)))
      throw GraphError("connection set is not inverse-closed: missing inverse of " +
                       ConnectionSet{{e}}.to_string(g));
  }
  return ConnectionSet{std::move(elements)};
}

ConnectionSet ConnectionSet::parse(const AbelianGroup& g, std::string_view text) {
  const std::string_view whole = trim(text);
  std::vector<int> elements;
  std::string_view rest = whole;
  while (!(rest = trim(rest)).empty()) {
    if (rest.front() == ',') {
      rest.remove_prefix(1);
      continue;
    }
    AbelianGroup::Element x;
    if (rest.front() == '(') {
      const auto close = rest.find(')');
      if (close == std::string_view::npos) throw GraphError("unterminated tuple in '" + std::string(whole) + "'");
      std::string_view inner = rest.substr(1, close - 1);
      rest.remove_prefix(close + 1);
      for (;;) {
        const auto comma = inner.find(',');
        x.push_back(parse_int(trim(inner.substr(0, comma)), whole));
        if (comma == std::string_view::npos) break;
        inner.remove_prefix(comma + 1);
      }
    } else {
      const auto comma = rest.find(',');
      const int v = parse_int(trim(rest.substr(0, comma)), whole);
      if (g.orders().size() != 1) throw GraphError("plain integer '" + std::to_string(v) + "' needs a cyclic group");
      x.push_back(((v % g.order()) + g.order()) % g.order());
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (x.size() != g.orders().size())
      throw GraphError("tuple arity does not match group " + g.to_string() + " in '" + std::string(whole) + "'");
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < 0 || x[i] >= g.orders()[i])
        throw GraphError("coordinate " + std::to_string(x[i]) + " out of range in '" + std::string(whole) + "'");
    elements.push_back(g.index(x));
  }
  return make(g, std::move(elements));
}

std::string ConnectionSet::to_string(const AbelianGroup& g) const {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out.push_back(',');
    const auto x = g.element(elements[i]);
    if (x.size() == 1) {
      out += std::to_string(x[0]);
      continue;
    }
    out.push_back('(');
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (k) out.push_back(',');
      out += std::to_string(x[k]);
    }
    out.push_back(')');
  }
  return out;
}

bool ConnectionSet::contains(int x) const { return std::binary_search(elements.begin(), elements.end(), x); }

Graph cayley_graph(const AbelianGroup& g, const ConnectionSet& s) {
  const auto checked = ConnectionSet::make(g, s.elements);
  return cayley_from_table(GroupTable(g), checked.elements);
}

Graph circulant(int n, const std::vector<int>& residues) {
  const AbelianGroup g({n});
  std::vector<int> el;
  for (int r : residues) el.push_back(((r % n) + n) % n);
  return cayley_graph(g, ConnectionSet::make(g, el));
}

bool is_bipartite_circulant_predicate(int n, const std::vector<int>& residues) {
  if (n % 2 != 0) return false;
  return std::all_of(residues.begin(), residues.end(), [&](int r) { return ((r % n) + n) % n % 2 == 1; });
}

Graph lex_product(const Graph& x, const Graph& y) {
  const int nx = x.order();
  const int ny = y.order();
  if (nx * ny > kMaxVertices) throw SizeLimitError("lexicographic product would have " + std::to_string(nx * ny) + " vertices");
  std::vector<Bits> rows(static_cast<std::size_t>(nx * ny), 0);
  const Bits block = low_bits(ny);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) {
      Bits r = 0;
      for_each_bit(x.neighbors(a), [&](Vertex a2) { r |= block << (a2 * ny); });
      for_each_bit(y.neighbors(b), [&](Vertex b2) { r |= bit(a * ny + b2); });
      rows[static_cast<std::size_t>(a * ny + b)] = r;
    }
  return Graph::from_rows(std::move(rows));
}

bool LtSpec::valid() const { return t >= 1 && (l == 2 || (l % 4 == 0 && l >= 8)); }

Graph lt_cycle(LtSpec spec) {
  if (!spec.valid())
    throw GraphError("invalid (l,t) = (" + std::to_string(spec.l) + "," + std::to_string(spec.t) +
                     "): need t >= 1 and l = 2 or l = 0 mod 4 with l >= 8");
  if (spec.l * spec.t > kMaxVertices)
    throw SizeLimitError("(l,t)-cycle would have " + std::to_string(spec.l * spec.t) + " vertices");
  const Graph base = spec.l == 2 ? complete_graph(2) : cycle_graph(spec.l);
  return lex_product(base, Graph(spec.t));
}

std::optional<LtSpec> recognize_lt_cycle(const Graph& g) {
  if (!is_connected(g)) throw GraphError("(l,t)-cycle recognition requires a connected graph");
  const int n = g.order();
  if (n < 2) return std::nullopt;
  const auto bp = bipartition(g);
  const auto* sides = std::get_if<Bipartition>(&bp);
  if (!sides) return std::nullopt;
  const int a = popcount(sides->side_mask(0));
  const int b = n - a;
  if (g.edge_count() == a * b) {
    if (a == b) return LtSpec{2, a};
    return std::nullopt;
  }
  const auto tp = twin_classes(g);
  const int t = popcount(tp.classes.front());
  for (Bits c : tp.classes)
    if (popcount(c) != t) return std::nullopt;
  const Graph q = twin_quotient(g);
  const int l = q.order();
  if (q.regular_degree() != 2 || !is_connected(q)) return std::nullopt;
  const LtSpec spec{l, t};
  if (!spec.valid()) return std::nullopt;
  return spec;
}

bool generates(const AbelianGroup& g, const ConnectionSet& s) {
  const GroupTable t(g);
  Bits reached = bit(0);
  Bits frontier = reached;
  while (frontier) {
    Bits next = 0;
    for_each_bit(frontier, [&](Vertex x) {
      for (int e : s.elements) next |= bit(t.add(x, e));
    });
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == low_bits(g.order());
}

namespace {

// Inverse pairs {x, -x}, x != 0, ordered by smaller index.
std::vector<std::vector<int>> inverse_orbits(const GroupTable& t) {
  std::vector<std::vector<int>> out;
  for (int x = 1; x < t.n; ++x) {
    const int y = t.neg[static_cast<std::size_t>(x)];
    if (y < x) continue;
    out.push_back(y == x ? std::vector<int>{x} : std::vector<int>{x, y});
  }
  return out;
}

void for_each_set(const AbelianGroup& g, bool require_connected, bool require_bipartite, int stride, int offset,
                  const std::function<void(const ConnectionSet&, const Graph&)>& visit) {
  const GroupTable t(g);
  const auto orb = inverse_orbits(t);
  if (orb.size() >= 63) throw SizeLimitError("too many inverse pairs in group " + g.to_string());
  const std::uint64_t total = std::uint64_t{1} << orb.size();
  for (std::uint64_t mask = static_cast<std::uint64_t>(offset); mask < total; mask += static_cast<std::uint64_t>(stride)) {
    ConnectionSet s;
    for (std::size_t i = 0; i < orb.size(); ++i)
      if ((mask >> i) & 1U) s.elements.insert(s.elements.end(), orb[i].begin(), orb[i].end());
    std::sort(s.elements.begin(), s.elements.end());
    const Graph x = cayley_from_table(t, s.elements);
    if (require_connected && !is_connected(x)) continue;
    if (require_bipartite && !is_bipartite(x)) continue;
    visit(s, x);
  }
}

// Mask order is not the sorted order of sets; sort reports for determinism.
void sort_counterexamples(std::vector<Counterexample>& v) {
  std::sort(v.begin(), v.end(), [](const Counterexample& a, const Counterexample& b) {
    return std::tie(a.group, a.set) < std::tie(b.group, b.set);
  });
}

}  // namespace

void enumerate_connection_sets(const AbelianGroup& g, bool require_connected, bool require_bipartite,
                               const std::function<void(const ConnectionSet&)>& visit, int max_order) {
  if (g.order() > max_order)
    throw SizeLimitError("group order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(max_order));
  for_each_set(g, require_connected, require_bipartite, 1, 0, [&](const ConnectionSet& s, const Graph&) { visit(s); });
}

VerificationReport verify_main_theorem(int max_order, int jobs) {
  if (max_order > 32) throw SizeLimitError("verify_main_theorem supports max_order <= 32, got " + std::to_string(max_order));
  jobs = std::max(1, jobs);
  VerificationReport total;
  std::mutex mu;
  for (int n = 2; n <= max_order; ++n) {
    for (const AbelianGroup& g : AbelianGroup::all_of_order(n)) {
      ++total.groups;
      auto worker = [&](int offset) {
        VerificationReport local;
        for_each_set(g, true, false, jobs, offset, [&](const ConnectionSet& s, const Graph& x) {
          ++local.instances;
          const bool balanced = is_balanced(x).balanced;
          const auto spec = recognize_lt_cycle(x);
          if (balanced) ++local.balanced;
          if (spec) ++local.recognized;
          if (balanced != spec.has_value()) {
            local.counterexamples.push_back({g.to_string(), s.to_string(g),
                                             balanced ? "balanced but not an (l,t)-cycle"
                                                      : "(l,t)-cycle that is not balanced"});
          } else if (spec && !is_isomorphic(x, lt_cycle(*spec))) {
            local.counterexamples.push_back({g.to_string(), s.to_string(g), "recognized spec not isomorphic"});
          }
        });
        std::lock_guard lock(mu);
        total.instances += local.instances;
        total.balanced += local.balanced;
        total.recognized += local.recognized;
        total.counterexamples.insert(total.counterexamples.end(), local.counterexamples.begin(),
                                     local.counterexamples.end());
      };
      if (jobs == 1) {
        worker(0);
      } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
      }
    }
  }
  sort_counterexamples(total.counterexamples);
  return total;
}

VerificationReport verify_circulant_lemmas(int max_n) {
  if (max_n > 48) throw SizeLimitError("verify_circulant_lemmas supports max_n <= 48, got " + std::to_string(max_n));
  VerificationReport report;
  for (int n = 2; n <= max_n; n += 2) {
    ++report.groups;
    const AbelianGroup g({n});
    // Odd residue pairs other than {1, n-1}, which is always present.
    std::vector<std::vector<int>> pairs;
    for (int i = 3; i <= n / 2; i += 2) pairs.push_back(i == n - i ? std::vector<int>{i} : std::vector<int>{i, n - i});
    const std::vector<int> one = n == 2 ? std::vector<int>{1} : std::vector<int>{1, n - 1};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<int> el = one;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) el.insert(el.end(), pairs[i].begin(), pairs[i].end());
      const ConnectionSet s = ConnectionSet::make(g, el);
      const Graph x = cayley_graph(g, s);
      ++report.instances;
      const bool balanced = is_balanced(x).balanced;
      const auto spec = recognize_lt_cycle(x);
      if (balanced) ++report.balanced;
      if (spec) ++report.recognized;
      auto fail = [&](std::string why) { report.counterexamples.push_back({g.to_string(), s.to_string(g), std::move(why)}); };
      if (balanced != spec.has_value()) fail("balanced != recognized as (l,t)-cycle");
      if (!balanced) continue;
      const int size = static_cast<int>(s.elements.size());
      if (s.contains(3 % n)) {
        if (size != n / 2 || !is_isomorphic(x, complete_bipartite(n / 2, n / 2))) fail("3 in S but not K_{n/2,n/2}");
      } else if (size > 1) {
        int e = -1;
        for (int v : s.elements)
          if (v >= 2) {
            e = v;
            break;
          }
        const int l = e + 1;
        if (l % 4 != 0 || l < 8 || n % l != 0) {
          fail("least l with l-1 in S is " + std::to_string(l));
          continue;
        }
        std::vector<int> expected;
        for (int i = 0; i < n / l; ++i) {
          expected.push_back(((i * l + 1) % n + n) % n);
          expected.push_back(((i * l - 1) % n + n) % n);
        }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        if (expected != s.elements) fail("S differs from {il+-1} with l=" + std::to_string(l));
        if (spec && (spec->l != l || spec->t != n / l)) fail("recognized spec disagrees with l=" + std::to_string(l));
      }
    }
  }
  sort_counterexamples(report.counterexamples);
  return report;
}

}  // namespace balgraph
