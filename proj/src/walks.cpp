#include "wedge/walks.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace wedge::enumerate {

namespace {

// Reduced coordinates (u, v) used by the frontier. Models whose constraint ignores X
// keep u = 0; the diagonal boundary model tracks v = Y - X.
struct Geometry {
  WedgeModel model;

  bool tracks_x() const { return model.kind == ModelKind::symmetric || model.kind == ModelKind::asymmetric; }

  std::pair<long, long> after_east(long u, long v) const {
    if (tracks_x()) return {u + 1, v};
    if (model.kind == ModelKind::boundary_diag) return {u, v - 1};
    return {u, v};
  }

  bool admits(long u, long v) const {
    const long p = model.p;
    switch (model.kind) {
      case ModelKind::free:
        return true;
      case ModelKind::symmetric:
        return -p * u <= v && v <= p * u;
      case ModelKind::asymmetric:
        return 0 <= v && v <= p * u;
      case ModelKind::quarter_endline:
      case ModelKind::halfplane:
      case ModelKind::boundary_flat:
      case ModelKind::boundary_diag:
        return v >= 0;
    }
    return false;
  }

  // Range of v worth storing in row u for walks of the given length.
  std::pair<long, long> bounds(long u, long length) const {
    const long p = model.p;
    const long vertical = tracks_x() ? length - u : length;
    switch (model.kind) {
      case ModelKind::free:
        return {-vertical, vertical};
      case ModelKind::symmetric:
        return {std::max(-p * u, -vertical), std::min(p * u, vertical)};
      case ModelKind::asymmetric:
        return {0, std::min(p * u, vertical)};
      default:
        return {0, vertical};
    }
  }

  long rows(long length) const { return tracks_x() ? length + 1 : 1; }

  bool counted(long v, bool horizontal) const {
    switch (model.kind) {
      case ModelKind::quarter_endline:
        return v == 0;
      case ModelKind::boundary_flat:
      case ModelKind::boundary_diag:
        return v == 0 && horizontal;
      default:
        return true;
    }
  }
};

enum StateIndex { kHorizontal = 0, kUp = 1, kDown = 2 };

struct Row {
  long lo = 0;
  long hi = -1;
  std::vector<BigInt> cells;  // 3 per v: horizontal (or empty), up, down

  bool contains(long v) const { return v >= lo && v <= hi; }
  BigInt& at(long v, int state) { return cells[static_cast<std::size_t>(3 * (v - lo) + state)]; }
  const BigInt& at(long v, int state) const { return cells[static_cast<std::size_t>(3 * (v - lo) + state)]; }
};

class Frontier {
 public:
  Frontier(Geometry geometry, std::size_t max_states) : geometry_(geometry), max_states_(max_states) {
    rows_ = allocate(0);
    rows_[0].at(0, kHorizontal) = 1;
  }

  const std::vector<Row>& rows() const { return rows_; }
  long length() const { return length_; }

  void advance() {
    std::vector<Row> next = allocate(length_ + 1);
    for (long u = 0; u < static_cast<long>(rows_.size()); ++u) {
      const Row& row = rows_[static_cast<std::size_t>(u)];
      for (long v = row.lo; v <= row.hi; ++v) {
        const BigInt& h = row.at(v, kHorizontal);
        const BigInt& up = row.at(v, kUp);
        const BigInt& down = row.at(v, kDown);
        if (h == 0 && up == 0 && down == 0) continue;
        const auto [ue, ve] = geometry_.after_east(u, v);
        if (geometry_.admits(ue, ve)) {
          if (BigInt* target = cell(next, ue, ve, kHorizontal)) {
            *target += h;
            *target += up;
            *target += down;
          }
        }
        if (geometry_.admits(u, v + 1)) {
          if (BigInt* target = cell(next, u, v + 1, kUp)) {
            *target += h;
            *target += up;
          }
        }
        if (geometry_.admits(u, v - 1)) {
          if (BigInt* target = cell(next, u, v - 1, kDown)) {
            *target += h;
            *target += down;
          }
        }
      }
    }
    rows_ = std::move(next);
    ++length_;
  }

 private:
  std::vector<Row> allocate(long length) const {
    std::vector<Row> rows(static_cast<std::size_t>(geometry_.rows(length)));
    std::size_t states = 0;
    for (long u = 0; u < static_cast<long>(rows.size()); ++u) {
      auto [lo, hi] = geometry_.bounds(u, length);
      Row& row = rows[static_cast<std::size_t>(u)];
      row.lo = lo;
      row.hi = hi;
      if (hi >= lo) {
        row.cells.resize(static_cast<std::size_t>(3 * (hi - lo + 1)));
        states += row.cells.size();
      }
    }
    if (states > max_states_) throw BudgetExceeded(static_cast<int>(length), states);
    return rows;
  }

  static BigInt* cell(std::vector<Row>& rows, long u, long v, int state) {
    if (u < 0 || u >= static_cast<long>(rows.size())) return nullptr;
    Row& row = rows[static_cast<std::size_t>(u)];
    if (!row.contains(v)) return nullptr;
    return &row.at(v, state);
  }

  Geometry geometry_;
  std::size_t max_states_;
  std::vector<Row> rows_;
  long length_ = 0;
};

BigInt frontier_total(const Frontier& frontier, const Geometry& geometry) {
  BigInt total = 0;
  for (const Row& row : frontier.rows()) {
    for (long v = row.lo; v <= row.hi; ++v) {
      if (geometry.counted(v, true)) total += row.at(v, kHorizontal);
      if (geometry.counted(v, false)) {
        total += row.at(v, kUp);
        total += row.at(v, kDown);
      }
    }
  }
  return total;
}

// Depth-first enumeration with an explicit visited set.
class BruteForce {
 public:
  BruteForce(WedgeModel model, int n, bool horizontal_only)
      : model_(model), n_(n), horizontal_only_(horizontal_only) {}

  BigInt run() {
    visited_.insert({0, 0});
    extend(0, 0, 0, true);
    return total_;
  }

 private:
  void extend(long x, long y, int depth, bool ends_horizontal) {
    if (depth == n_) {
      if ((!horizontal_only_ || ends_horizontal) && model_.accepts_end(x, y, ends_horizontal)) total_ += 1;
      return;
    }
    static constexpr std::pair<long, long> kSteps[] = {{1, 0}, {0, 1}, {0, -1}};
    for (const auto& [dx, dy] : kSteps) {
      const long nx = x + dx;
      const long ny = y + dy;
      if (!model_.admits(nx, ny)) continue;
      if (!visited_.insert({nx, ny}).second) continue;
      extend(nx, ny, depth + 1, dx == 1);
      visited_.erase({nx, ny});
    }
  }

  WedgeModel model_;
  int n_;
  bool horizontal_only_;
  std::set<std::pair<long, long>> visited_;
  BigInt total_ = 0;
};

}  // namespace

bool WedgeModel::admits(long x, long y) const {
  switch (kind) {
    case ModelKind::free:
      return true;
    case ModelKind::symmetric:
      return x >= 0 && -p * x <= y && y <= p * x;
    case ModelKind::asymmetric:
      return x >= 0 && 0 <= y && y <= p * x;
    case ModelKind::quarter_endline:
      return x >= 0 && y >= 0;
    case ModelKind::halfplane:
    case ModelKind::boundary_flat:
      return y >= 0;
    case ModelKind::boundary_diag:
      return y >= x;
  }
  return false;
}

bool WedgeModel::accepts_end(long x, long y, bool empty_or_horizontal) const {
  switch (kind) {
    case ModelKind::quarter_endline:
      return y == 0;
    case ModelKind::boundary_flat:
      return y == 0 && empty_or_horizontal;
    case ModelKind::boundary_diag:
      return y == x && empty_or_horizontal;
    default:
      return true;
  }
}

ModelKind parse_model_kind(const std::string& name) {
  static const std::map<std::string, ModelKind> kNames = {
      {"free", ModelKind::free},
      {"symmetric", ModelKind::symmetric},
      {"asymmetric", ModelKind::asymmetric},
      {"quarter_endline", ModelKind::quarter_endline},
      {"halfplane", ModelKind::halfplane},
      {"boundary_flat", ModelKind::boundary_flat},
      {"boundary_diag", ModelKind::boundary_diag},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) throw std::invalid_argument("unknown model: " + name);
  return it->second;
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::free:
      return "free";
    case ModelKind::symmetric:
      return "symmetric";
    case ModelKind::asymmetric:
      return "asymmetric";
    case ModelKind::quarter_endline:
      return "quarter_endline";
    case ModelKind::halfplane:
      return "halfplane";
    case ModelKind::boundary_flat:
      return "boundary_flat";
    case ModelKind::boundary_diag:
      return "boundary_diag";
  }
  return "unknown";
}

std::string describe(const WedgeModel& model) {
  const bool uses_p = model.kind == ModelKind::symmetric || model.kind == ModelKind::asymmetric;
  return uses_p ? to_string(model.kind) + "(p=" + std::to_string(model.p) + ")" : to_string(model.kind);
}

TSeries CountTable::series() const {
  std::vector<Rational> coeffs(counts.begin(), counts.end());
  return TSeries(0, std::move(coeffs), max_length());
}

BudgetExceeded::BudgetExceeded(int length, std::size_t states)
    : std::runtime_error("state budget exceeded at length " + std::to_string(length) + " (" +
                         std::to_string(states) + " states)"),
      length_(length) {}

CountTable count_walks(const WedgeModel& model, int n_max, const CountOptions& options) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (model.p < 1) throw std::invalid_argument("p must be a positive integer");
  const Geometry geometry{model};
  Frontier frontier(geometry, options.max_states);
  CountTable table{model, {}};
  table.counts.reserve(static_cast<std::size_t>(n_max) + 1);
  table.counts.push_back(frontier_total(frontier, geometry));
  for (int n = 1; n <= n_max; ++n) {
    frontier.advance();
    table.counts.push_back(frontier_total(frontier, geometry));
  }
  return table;
}

BigInt brute_force_oracle(const WedgeModel& model, int n) {
  if (n < 0 || n > kBruteForceLimit) {
    throw std::invalid_argument("brute-force enumeration limited to 0 <= n <= " + std::to_string(kBruteForceLimit));
  }
  return BruteForce(model, n, false).run();
}

BigInt brute_force_horizontal(const WedgeModel& model, int n) {
  if (n < 0 || n > kBruteForceLimit) {
    throw std::invalid_argument("brute-force enumeration limited to 0 <= n <= " + std::to_string(kBruteForceLimit));
  }
  return BruteForce(model, n, true).run();
}

void WeightedSeries::add(int n, int i, int j, const BigInt& count) {
  if (count == 0) return;
  entries_[{n, i, j}] += count;
}

BigInt WeightedSeries::coeff(int n, int i, int j) const {
  auto it = entries_.find({n, i, j});
  return it == entries_.end() ? BigInt(0) : it->second;
}

namespace {
Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

// Accumulates c * scale into coefficient `exponent` when it lies within the order.
void accumulate(std::vector<Rational>& coeffs, int exponent, const BigInt& c, const Rational& scale) {
  if (exponent < static_cast<int>(coeffs.size())) coeffs[static_cast<std::size_t>(exponent)] += Rational(c) * scale;
}
}  // namespace

TSeries WeightedSeries::at(const Rational& a, const Rational& b) const {
  std::vector<Rational> coeffs(static_cast<std::size_t>(order_) + 1);
  for (const auto& [key, c] : entries_) {
    const auto [n, i, j] = key;
    accumulate(coeffs, n, c, power(a, i) * power(b, j));
  }
  return TSeries(0, std::move(coeffs), order_);
}

TSeries WeightedSeries::diagonal_lower(const Rational& a) const {
  std::vector<Rational> coeffs(static_cast<std::size_t>(order_) + 1);
  for (const auto& [key, c] : entries_) {
    const auto [n, i, j] = key;
    accumulate(coeffs, n + j, c, power(a, i + j));
  }
  return TSeries(0, std::move(coeffs), order_);
}

TSeries WeightedSeries::diagonal_upper(const Rational& b) const {
  std::vector<Rational> coeffs(static_cast<std::size_t>(order_) + 1);
  for (const auto& [key, c] : entries_) {
    const auto [n, i, j] = key;
    accumulate(coeffs, n + i, c, power(b, i + j));
  }
  return TSeries(0, std::move(coeffs), order_);
}

WeightedSeries weighted_gf(const WedgeModel& model, int order) {
  if (model.kind != ModelKind::symmetric && model.kind != ModelKind::asymmetric) {
    throw std::invalid_argument("weighted series are defined for the symmetric and asymmetric wedges only");
  }
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  const Geometry geometry{model};
  Frontier frontier(geometry, CountOptions{}.max_states);
  WeightedSeries out(model, order);
  const long p = model.p;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) frontier.advance();
    const auto& rows = frontier.rows();
    for (long x = 0; x < static_cast<long>(rows.size()); ++x) {
      const Row& row = rows[static_cast<std::size_t>(x)];
      for (long y = row.lo; y <= row.hi; ++y) {
        const BigInt& c = row.at(y, kHorizontal);
        if (c == 0) continue;
        const long i = p * x - y;
        const long j = model.kind == ModelKind::symmetric ? p * x + y : y;
        out.add(n, static_cast<int>(i), static_cast<int>(j), c);
      }
    }
  }
  return out;
}

GrowthReport check_supermultiplicativity(const CountTable& table, int m_max) {
  GrowthReport report;
  if (2 * m_max + 1 > table.max_length()) throw std::invalid_argument("table too short for requested bound");
  for (int n = 0; n <= m_max && report.ok; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      ++report.checks;
      if (table.counts[n] * table.counts[m] > table.counts[n + m + 1]) {
        report.ok = false;
        report.first_violation = describe(table.model) + ": v_" + std::to_string(n) + " v_" + std::to_string(m) +
                                 " > v_" + std::to_string(n + m + 1);
        break;
      }
    }
  }
  return report;
}

GrowthReport check_quarter_embedding(int p, int n_max, int power_max) {
  GrowthReport report;
  const int longest = p * n_max + n_max * power_max + power_max;
  const CountTable quarter = count_walks({ModelKind::quarter_endline, 1}, n_max);
  const CountTable wedge = count_walks({ModelKind::asymmetric, p}, longest);
  for (int n = 0; n <= n_max && report.ok; ++n) {
    BigInt lhs = 1;
    for (int power = 1; power <= power_max; ++power) {
      lhs *= quarter.counts[n];
      const int index = p * n + n * power + power;
      ++report.checks;
      if (lhs > wedge.counts[index]) {
        report.ok = false;
        report.first_violation = "b_" + std::to_string(n) + "^" + std::to_string(power) + " > w_" +
                                 std::to_string(index) + " (p=" + std::to_string(p) + ")";
        break;
      }
    }
  }
  return report;
}

GrowthReport check_sandwich(const CountTable& asymmetric, const CountTable& symmetric, const CountTable& free) {
  GrowthReport report;
  const int n_max = std::min({asymmetric.max_length(), symmetric.max_length(), free.max_length()});
  for (int n = 0; n <= n_max; ++n) {
    ++report.checks;
    const auto idx = static_cast<std::size_t>(n);
    if (asymmetric.counts[idx] > symmetric.counts[idx] || symmetric.counts[idx] > free.counts[idx]) {
      report.ok = false;
      report.first_violation = "sandwich fails at n=" + std::to_string(n);
      break;
    }
  }
  return report;
}

GrowthReport check_monotone(const CountTable& table) {
  GrowthReport report;
  for (int n = 0; n < table.max_length(); ++n) {
    ++report.checks;
    if (table.counts[n + 1] < table.counts[n]) {
      report.ok = false;
      report.first_violation = describe(table.model) + ": counts decrease at n=" + std::to_string(n);
      break;
    }
  }
  return report;
}

GrowthEstimate growth_estimate(const CountTable& table) {
  if (table.max_length() < 10) throw std::invalid_argument("growth estimate needs at least 10 terms");
  GrowthEstimate out;
  for (int n = 0; n < table.max_length(); ++n) {
    out.ratios.push_back(exact::to_prec(table.counts[n + 1]) / exact::to_prec(table.counts[n]));
  }
  out.roots.push_back(exact::PrecFloat(1));
  for (int n = 1; n <= table.max_length(); ++n) {
    out.roots.push_back(boost::multiprecision::pow(exact::to_prec(table.counts[n]), exact::PrecFloat(1) / n));
  }
  return out;
}

std::string to_csv(const CountTable& table) {
  std::ostringstream out;
  out << "length,count\n";
  for (std::size_t n = 0; n < table.counts.size(); ++n) out << n << ',' << table.counts[n].get_str() << '\n';
  return out.str();
}

}  // namespace wedge::enumerate
