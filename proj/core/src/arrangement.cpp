#include "netdual/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "netdual/errors.hpp"
#include "netdual/monomial_ideal.hpp"
#include "netdual/polynomial.hpp"

namespace netdual {

namespace {

long long gcd3(long long a, long long b, long long c) {
  return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

void normalize_triple(long long& a, long long& b, long long& c) {
  if (a == 0 && b == 0 && c == 0) throw invalid_input("zero triple cannot be normalized");
  long long g = gcd3(a, b, c);
  a /= g;
  b /= g;
  c /= g;
  long long lead = a != 0 ? a : (b != 0 ? b : c);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
}

// Exact rational "p/q" (or integer) parser; returns numerator, denominator.
std::pair<long long, long long> parse_fraction(const std::string& token) {
  auto slash = token.find('/');
  try {
    if (slash == std::string::npos) return {std::stoll(token), 1};
    long long num = std::stoll(token.substr(0, slash));
    long long den = std::stoll(token.substr(slash + 1));
    if (den == 0) throw invalid_input("fraction with zero denominator: " + token);
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return {num, den};
  } catch (const std::invalid_argument&) {
    throw invalid_input("cannot parse rational '" + token + "'");
  } catch (const std::out_of_range&) {
    throw invalid_input("rational out of range: '" + token + "'");
  }
}

}  // namespace

RationalLine RationalLine::make(long long a, long long b, long long c) {
  if (a == 0 && b == 0 && c == 0)
    throw invalid_input("a line needs a nonzero coefficient triple");
  normalize_triple(a, b, c);
  return RationalLine{a, b, c};
}

RationalLine RationalLine::parse(const std::string& text) {
  std::istringstream in(text);
  std::string ta, tb, tc;
  if (!(in >> ta >> tb >> tc))
    throw invalid_input("expected three rationals 'a b c', got '" + text + "'");
  std::string extra;
  if (in >> extra) throw invalid_input("trailing token '" + extra + "' after line coefficients");
  auto [na, da] = parse_fraction(ta);
  auto [nb, db] = parse_fraction(tb);
  auto [nc, dc] = parse_fraction(tc);
  long long l = std::lcm(std::lcm(da, db), dc);
  return make(na * (l / da), nb * (l / db), nc * (l / dc));
}

std::string RationalLine::to_string() const {
  return std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c);
}

RationalPoint RationalPoint::cross(const RationalLine& l1, const RationalLine& l2) {
  // 64-bit inputs are primitive and tiny in practice; go through __int128
  // and renormalize so the products cannot overflow.
  __int128 x = static_cast<__int128>(l1.b) * l2.c - static_cast<__int128>(l1.c) * l2.b;
  __int128 y = static_cast<__int128>(l1.c) * l2.a - static_cast<__int128>(l1.a) * l2.c;
  __int128 z = static_cast<__int128>(l1.a) * l2.b - static_cast<__int128>(l1.b) * l2.a;
  if (x == 0 && y == 0 && z == 0)
    throw invalid_input("proportional lines do not determine a point");
  auto g128 = [](__int128 v) { return v < 0 ? -v : v; };
  __int128 g = 0;
  for (__int128 v : {x, y, z}) {
    v = g128(v);
    while (v) {
      __int128 t = g % v;
      g = v;
      v = t;
    }
  }
  x /= g;
  y /= g;
  z /= g;
  __int128 lead = x != 0 ? x : (y != 0 ? y : z);
  if (lead < 0) {
    x = -x;
    y = -y;
    z = -z;
  }
  return RationalPoint{static_cast<long long>(x), static_cast<long long>(y),
                       static_cast<long long>(z)};
}

bool RationalPoint::on(const RationalLine& l) const {
  return static_cast<__int128>(l.a) * x + static_cast<__int128>(l.b) * y +
             static_cast<__int128>(l.c) * z ==
         0;
}

LineArrangement::LineArrangement(int lines, std::vector<Subset> multiple_points)
    : lines_(lines) {
  if (lines < 2 || lines > kMaxVars)
    throw invalid_input("arrangement must have between 2 and 64 lines");
  Subset universe = Subset::full(lines);
  for (Subset p : multiple_points) {
    if (!p.subset_of(universe)) throw invalid_input("multiple point has out-of-range line");
    if (p.size() < 3)
      throw invalid_input("a listed multiple point needs at least 3 lines (doubles are implicit)");
  }
  std::sort(multiple_points.begin(), multiple_points.end(), CanonicalLess{});
  multiple_points.erase(std::unique(multiple_points.begin(), multiple_points.end()),
                        multiple_points.end());
  for (std::size_t i = 0; i < multiple_points.size(); ++i)
    for (std::size_t j = i + 1; j < multiple_points.size(); ++j)
      if ((multiple_points[i] & multiple_points[j]).size() > 1)
        throw invalid_input("two multiple points share two lines; lines meet only once");
  multiple_points_ = std::move(multiple_points);
}

std::vector<Subset> LineArrangement::double_pairs() const {
  std::vector<Subset> out;
  for (int i = 0; i < lines_; ++i)
    for (int j = i + 1; j < lines_; ++j) {
      Subset pair = Subset::single(i) | Subset::single(j);
      bool covered = false;
      for (Subset p : multiple_points_)
        if (pair.subset_of(p)) {
          covered = true;
          break;
        }
      if (!covered) out.push_back(pair);
    }
  return out;  // already canonical: pairs in lex order
}

std::vector<Subset> LineArrangement::rank2_flats() const {
  std::vector<Subset> out = multiple_points_;
  std::vector<Subset> doubles = double_pairs();
  out.insert(out.end(), doubles.begin(), doubles.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::optional<Subset> LineArrangement::point_through(int line1, int line2) const {
  Subset pair = Subset::single(line1) | Subset::single(line2);
  for (Subset p : multiple_points_)
    if (pair.subset_of(p)) return p;
  return std::nullopt;
}

bool LineArrangement::is_flat(Subset point) const {
  if (point.size() == 2) {
    auto elems = point.elements();
    return !point_through(elems[0], elems[1]).has_value();
  }
  for (Subset p : multiple_points_)
    if (p == point) return true;
  return false;
}

int NetCandidate::line_count() const {
  int total = 0;
  for (Subset b : blocks) total += b.size();
  return total;
}

int NetCandidate::block_of(int line) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].contains(line)) return static_cast<int>(i);
  return -1;
}

void NetCandidate::validate(int lines) const {
  if (k() < 3) throw invalid_input("a net candidate needs k >= 3 blocks");
  int d0 = d();
  if (d0 < 2) throw invalid_input("a net candidate needs blocks of size d >= 2");
  Subset seen;
  for (Subset b : blocks) {
    if (b.size() != d0) throw invalid_input("net blocks must all have the same size");
    if (b.intersects(seen)) throw invalid_input("net blocks must be disjoint");
    seen = seen | b;
  }
  if (seen != Subset::full(lines))
    throw invalid_input("net blocks must partition all " + std::to_string(lines) + " lines");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].subset_of(seen) || points[i].size() < 2)
      throw invalid_input("X contains an invalid point");
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw invalid_input("X contains a duplicate point");
  }
}

LineArrangement l2_from_coordinates(const std::vector<RationalLine>& lines) {
  if (lines.size() < 2) throw invalid_input("need at least two lines");
  if (lines.size() > kMaxVars) throw invalid_input("too many lines (cap 64)");
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i] == lines[j])
        throw invalid_input("duplicate line at positions " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1));

  std::map<RationalPoint, Subset> classes;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      RationalPoint p = RationalPoint::cross(lines[i], lines[j]);
      classes[p] = classes[p] | Subset::single(static_cast<int>(i)) |
                   Subset::single(static_cast<int>(j));
    }

  long long pair_check = 0;
  std::vector<Subset> multiple;
  for (const auto& [point, through] : classes) {
    int count = through.size();
    pair_check += binomial(count, 2);
    if (count >= 3) multiple.push_back(through);
  }
  long long n = static_cast<long long>(lines.size());
  check_internal(pair_check == n * (n - 1) / 2,
                 "pairwise incidence count does not balance");
  return LineArrangement(static_cast<int>(lines.size()), std::move(multiple));
}

std::vector<Subset> graphic_flats(const SimpleGraph& graph) {
  const auto& edges = graph.edges();
  int m = static_cast<int>(edges.size());
  auto edge_index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    return static_cast<int>(it - edges.begin());
  };

  std::vector<Subset> flats;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a != c && a != d && b != c && b != d) {
        // Disjoint pair: always a rank-2 flat.
        flats.push_back(Subset::single(i) | Subset::single(j));
        continue;
      }
      // Adjacent pair; the two non-shared endpoints close a triangle.
      int u, v;
      if (a == c) u = b, v = d;
      else if (a == d) u = b, v = c;
      else if (b == c) u = a, v = d;
      else u = a, v = c;
      if (graph.has_edge(u, v)) {
        int k = edge_index(u, v);
        // Emit each triangle once, from its two smallest edges.
        if (k > j)
          flats.push_back(Subset::single(i) | Subset::single(j) | Subset::single(k));
      } else {
        // Open adjacent pair: closure adds nothing, so it is a flat.
        flats.push_back(Subset::single(i) | Subset::single(j));
      }
    }
  std::sort(flats.begin(), flats.end(), CanonicalLess{});
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  return flats;
}

std::pair<LineArrangement, NetCandidate> ceva(int d) {
  if (d < 2) throw invalid_input("ceva needs d >= 2");
  if (3 * d > kMaxVars) throw invalid_input("ceva(d) exceeds the 64-line cap");
  std::vector<Subset> points;
  // Triple points: lines i, d+j, 2d+k (0-based offsets) are concurrent
  // exactly when i + j + k = 0 mod d.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int k = (2 * d - i - j) % d;
      points.push_back(Subset::single(i) | Subset::single(d + j) | Subset::single(2 * d + k));
    }
  NetCandidate net;
  for (int b = 0; b < 3; ++b) {
    Subset block;
    for (int i = 0; i < d; ++i) block = block.with(b * d + i);
    net.blocks.push_back(block);
  }
  net.points = points;
  std::sort(net.points.begin(), net.points.end(), CanonicalLess{});
  if (d >= 3)
    for (Subset b : net.blocks) points.push_back(b);  // the three d-fold points
  LineArrangement arr(3 * d, std::move(points));
  net.validate(arr.line_count());
  return {std::move(arr), std::move(net)};
}

}  // namespace netdual
