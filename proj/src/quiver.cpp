#include "cyclotome/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "cyclotome/errors.hpp"

namespace cyclotome {

// ---------------------------------------------------------------- DynkinType

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw ParseError("bad Dynkin type '" + std::string(text) + "'");
  DynkinType t;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': t.family = Family::A; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    default: throw NotADE("unknown Dynkin family in '" + std::string(text) + "'");
  }
  int r = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || r > 1000)
      throw ParseError("bad Dynkin type '" + std::string(text) + "'");
    r = r * 10 + (c - '0');
  }
  t.rank = r;
  bool ok = (t.family == Family::A && r >= 1) || (t.family == Family::D && r >= 4) ||
            (t.family == Family::E && r >= 6 && r <= 8);
  if (!ok) throw NotADE("no Dynkin diagram " + std::string(text));
  return t;
}

std::string DynkinType::name() const {
  const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
  return f + std::to_string(rank);
}

int DynkinType::coxeter_number() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::D: return 2 * rank - 2;
    case Family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
  }
  return 0;
}

// ----------------------------------------------------------- DimensionVector

DimensionVector DimensionVector::unit(std::size_t n, int i) {
  DimensionVector v(n);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

std::int64_t DimensionVector::total() const {
  std::int64_t s = 0;
  for (auto c : coords_) s += c;
  return s;
}

bool DimensionVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool DimensionVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

bool DimensionVector::is_nonpositive() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c <= 0; });
}

bool DimensionVector::dominates(const DimensionVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] < other.coords_[i]) return false;
  return true;
}

DimensionVector& DimensionVector::operator+=(const DimensionVector& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

DimensionVector& DimensionVector::operator-=(const DimensionVector& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

DimensionVector operator-(DimensionVector a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

DimensionVector operator*(std::int64_t k, DimensionVector a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::string DimensionVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

// ----------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(int size) {
  IntMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
  return t;
}

DimensionVector IntMatrix::apply(const DimensionVector& x) const {
  DimensionVector y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += at(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      auto xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < x.n; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

IntMatrix operator-(IntMatrix x) {
  for (auto& c : x.a) c = -c;
  return x;
}

// -------------------------------------------------------------------- Quiver

Quiver Quiver::from_arrows(int n, std::vector<Arrow> arrows) {
  if (n < 1) throw NotATree("a quiver needs at least one vertex");
  std::set<std::pair<int, int>> edges;
  for (const auto& a : arrows) {
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
      throw ParseError("arrow endpoint out of range");
    if (a.source == a.target) throw NotATree("loop at vertex " + std::to_string(a.source + 1));
    auto e = std::minmax(a.source, a.target);
    if (!edges.insert({e.first, e.second}).second)
      throw NotSimplyLaced("multiple edges between " + std::to_string(e.first + 1) + " and " +
                           std::to_string(e.second + 1));
  }
  Quiver q;
  q.n_ = n;
  q.arrows_ = std::move(arrows);
  q.neighbours_.assign(static_cast<std::size_t>(n), {});
  for (const auto& a : q.arrows_) {
    q.neighbours_[static_cast<std::size_t>(a.source)].push_back(a.target);
    q.neighbours_[static_cast<std::size_t>(a.target)].push_back(a.source);
  }
  for (auto& nb : q.neighbours_) std::sort(nb.begin(), nb.end());

  // connected with n-1 edges <=> tree
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  int count = 1;
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop();
    for (int j : q.neighbours_[static_cast<std::size_t>(i)])
      if (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        ++count;
        todo.push(j);
      }
  }
  if (count != n) throw NotATree("underlying graph is disconnected");
  if (static_cast<int>(q.arrows_.size()) != n - 1) throw NotATree("underlying graph has a cycle");

  q.reach_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    std::queue<int> bfs;
    bfs.push(i);
    q.reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    while (!bfs.empty()) {
      int k = bfs.front();
      bfs.pop();
      for (const auto& a : q.arrows_)
        if (a.source == k && !q.reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(a.target)]) {
          q.reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(a.target)] = true;
          bfs.push(a.target);
        }
    }
  }
  q.classify();
  return q;
}

void Quiver::classify() {
  std::vector<int> branch;
  for (int i = 0; i < n_; ++i) {
    auto deg = neighbours_[static_cast<std::size_t>(i)].size();
    if (deg > 3) throw NotADE("vertex " + std::to_string(i + 1) + " has degree " + std::to_string(deg));
    if (deg == 3) branch.push_back(i);
  }
  if (branch.size() > 1) throw NotADE("more than one branch vertex");
  if (branch.empty()) {
    type_ = {Family::A, n_};
  } else {
    int c = branch.front();
    std::vector<int> arms;
    for (int start : neighbours_[static_cast<std::size_t>(c)]) {
      int len = 1, prev = c, cur = start;
      while (neighbours_[static_cast<std::size_t>(cur)].size() == 2) {
        const auto& nb = neighbours_[static_cast<std::size_t>(cur)];
        int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) throw NotADE("branch arms (" + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
                                   std::to_string(arms[2]) + ") are not of type D or E");
    if (arms[1] == 1)
      type_ = {Family::D, n_};
    else if (arms[1] == 2 && arms[2] <= 4)
      type_ = {Family::E, n_};
    else
      throw NotADE("branch arms (1," + std::to_string(arms[1]) + "," + std::to_string(arms[2]) +
                   ") are not of type D or E");
  }

  // order of the Coxeter transformation
  IntMatrix phi = coxeter_matrix();
  IntMatrix power = phi;
  IntMatrix id = IntMatrix::identity(n_);
  int order = 1;
  while (!(power == id)) {
    power = power * phi;
    ++order;
    if (order > 64) throw std::logic_error("Coxeter transformation of unexpected order");
  }
  coxeter_number_ = order;
}

Quiver Quiver::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Arrow> arrows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto where = [&] { return " on line " + std::to_string(lineno); };
    if (key == "vertices:") {
      if (!(ls >> n) || n < 1) throw ParseError("bad vertex count" + where());
    } else if (key == "arrow:") {
      int s = 0, t = 0;
      if (!(ls >> s >> t)) throw ParseError("bad arrow" + where());
      if (n < 0) throw ParseError("arrow before vertices" + where());
      if (s < 1 || s > n || t < 1 || t > n) throw ParseError("arrow endpoint out of range" + where());
      arrows.push_back({s - 1, t - 1});
    } else {
      throw ParseError("unknown key '" + key + "'" + where());
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing text" + where());
  }
  if (n < 0) throw ParseError("missing 'vertices:' line");
  return from_arrows(n, std::move(arrows));
}

Quiver Quiver::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open quiver file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

namespace {

// Bourbaki labelling, 0-based, each edge as (smaller, larger).
std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t) {
  std::vector<std::pair<int, int>> e;
  int n = t.rank;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      e.emplace_back(0, 2);
      e.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

}  // namespace

Quiver Quiver::builtin(const DynkinType& type, std::string_view orientation) {
  if (orientation.substr(0, 5) == "file:") return from_file(std::string(orientation.substr(5)));
  auto edges = diagram_edges(type);
  std::vector<Arrow> arrows;
  if (orientation == "linear") {
    for (auto [a, b] : edges) arrows.push_back({b, a});
  } else if (orientation == "alternating") {
    std::vector<int> dist(static_cast<std::size_t>(type.rank), -1);
    dist[0] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (auto [a, b] : edges) {
        if (dist[static_cast<std::size_t>(a)] >= 0 && dist[static_cast<std::size_t>(b)] < 0) {
          dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
          changed = true;
        } else if (dist[static_cast<std::size_t>(b)] >= 0 && dist[static_cast<std::size_t>(a)] < 0) {
          dist[static_cast<std::size_t>(a)] = dist[static_cast<std::size_t>(b)] + 1;
          changed = true;
        }
      }
    }
    for (auto [a, b] : edges) {
      if (dist[static_cast<std::size_t>(a)] % 2 == 0)
        arrows.push_back({a, b});
      else
        arrows.push_back({b, a});
    }
  } else {
    throw ParseError("unknown orientation '" + std::string(orientation) + "'");
  }
  return from_arrows(type.rank, std::move(arrows));
}

Quiver Quiver::load(std::string_view type, std::string_view orientation) {
  if (orientation.substr(0, 5) == "file:") {
    Quiver q = from_file(std::string(orientation.substr(5)));
    if (!type.empty() && !(DynkinType::parse(type) == q.type()))
      throw ParseError("quiver file has type " + q.type().name() + ", not " + std::string(type));
    return q;
  }
  return builtin(DynkinType::parse(type), orientation);
}

std::vector<Quiver> Quiver::all_orientations(const DynkinType& type) {
  auto edges = diagram_edges(type);
  std::vector<Quiver> out;
  const unsigned count = 1u << edges.size();
  for (unsigned mask = 0; mask < count; ++mask) {
    std::vector<Arrow> arrows;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [a, b] = edges[k];
      if (mask & (1u << k))
        arrows.push_back({a, b});
      else
        arrows.push_back({b, a});
    }
    out.push_back(from_arrows(type.rank, std::move(arrows)));
  }
  return out;
}

bool Quiver::adjacent(int i, int j) const {
  const auto& nb = neighbours_[static_cast<std::size_t>(i)];
  return std::binary_search(nb.begin(), nb.end(), j);
}

int Quiver::arrow_count(int i, int j) const {
  int c = 0;
  for (const auto& a : arrows_)
    if (a.source == i && a.target == j) ++c;
  return c;
}

std::int64_t Quiver::euler_form(const DimensionVector& x, const DimensionVector& y) const {
  std::int64_t s = 0;
  for (int i = 0; i < n_; ++i) s += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
  for (const auto& a : arrows_) s -= x[static_cast<std::size_t>(a.source)] * y[static_cast<std::size_t>(a.target)];
  return s;
}

std::int64_t Quiver::symmetric_form(const DimensionVector& x, const DimensionVector& y) const {
  return euler_form(x, y) + euler_form(y, x);
}

int Quiver::cartan_entry(int i, int j) const {
  return static_cast<int>(symmetric_form(simple_root(i), simple_root(j)));
}

IntMatrix Quiver::euler_matrix() const {
  IntMatrix e = IntMatrix::identity(n_);
  for (const auto& a : arrows_) e.at(a.source, a.target) -= 1;
  return e;
}

IntMatrix Quiver::cartan_matrix() const {
  IntMatrix c(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c.at(i, j) = cartan_entry(i, j);
  return c;
}

// With <x,y> = x^T E y, the columns of P = E^{-T} are the projective dimension
// vectors, so Phi = -E^{-1} E^T = -P^T E^T and Phi^{-1} = -P E.
IntMatrix Quiver::coxeter_matrix() const {
  IntMatrix p(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      p.at(j, i) = reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ? 1 : 0;
  return -(p.transpose() * euler_matrix().transpose());
}

IntMatrix Quiver::coxeter_inverse() const {
  IntMatrix p(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      p.at(j, i) = reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ? 1 : 0;
  return -(p * euler_matrix());
}

HeightFunction Quiver::height_function() const {
  HeightFunction h;
  h.xi.assign(static_cast<std::size_t>(n_), 0);
  std::vector<bool> done(static_cast<std::size_t>(n_), false);
  done[0] = true;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop();
    for (const auto& a : arrows_) {
      if (a.target == i && !done[static_cast<std::size_t>(a.source)]) {
        h.xi[static_cast<std::size_t>(a.source)] = h.xi[static_cast<std::size_t>(i)] + 1;
        done[static_cast<std::size_t>(a.source)] = true;
        todo.push(a.source);
      } else if (a.source == i && !done[static_cast<std::size_t>(a.target)]) {
        h.xi[static_cast<std::size_t>(a.target)] = h.xi[static_cast<std::size_t>(i)] - 1;
        done[static_cast<std::size_t>(a.target)] = true;
        todo.push(a.target);
      }
    }
  }
  return h;
}

DimensionVector Quiver::projective_dim(int i) const {
  DimensionVector d(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) d[static_cast<std::size_t>(j)] = reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return d;
}

DimensionVector Quiver::injective_dim(int i) const {
  DimensionVector d(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) d[static_cast<std::size_t>(j)] = reach_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return d;
}

std::vector<DimensionVector> Quiver::positive_roots() const {
  std::set<DimensionVector> seen;
  std::vector<DimensionVector> todo;
  for (int i = 0; i < n_; ++i) {
    seen.insert(simple_root(i));
    todo.push_back(simple_root(i));
  }
  while (!todo.empty()) {
    DimensionVector beta = todo.back();
    todo.pop_back();
    for (int i = 0; i < n_; ++i) {
      auto pairing = symmetric_form(beta, simple_root(i));
      DimensionVector r = beta - pairing * simple_root(i);
      if (r.is_nonnegative() && !r.is_zero() && seen.insert(r).second) todo.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

std::string Quiver::orientation_label() const {
  std::string s;
  for (const auto& a : arrows_) {
    if (!s.empty()) s += ",";
    s += std::to_string(a.source + 1) + "->" + std::to_string(a.target + 1);
  }
  return s.empty() ? "-" : s;
}

std::string Quiver::to_text() const {
  std::string s = "vertices: " + std::to_string(n_) + "\n";
  for (const auto& a : arrows_) s += "arrow: " + std::to_string(a.source + 1) + " " + std::to_string(a.target + 1) + "\n";
  return s;
}

}  // namespace cyclotome
