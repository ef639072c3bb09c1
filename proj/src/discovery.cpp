#include "gp/discovery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "gp/errors.hpp"

namespace gp {

// ---------------------------------------------------------------------------
// Sweep

std::vector<SweepCell> sweep(const QSqrt2& lo, const QSqrt2& hi, std::size_t depth, std::size_t cell_budget) {
  if (depth < 2) throw DomainError("sweep: depth must be >= 2");
  if (!(lo < hi)) throw DomainError("sweep: empty domain");
  if (lo < domain_lo() || hi > domain_hi()) {
    throw DomainError("sweep: domain must lie inside [1-1/2*sqrt2, 1/2*sqrt2)");
  }
  std::vector<SweepCell> cells{{lo, hi, {BigInt(1)}}};
  for (std::size_t n = 1; n < depth; ++n) {
    std::vector<SweepCell> next;
    next.reserve(cells.size());
    for (auto& cell : cells) {
      const BigInt v = cell.prefix.back();
      if (n % 2 == 0) {
        cell.prefix.push_back(floor_q(QSqrt2(BigRat(0), BigRat(BigInt(2 * v + 1), 2))));
        next.push_back(std::move(cell));
        continue;
      }
      // v_{n+1} at the left end; it steps up by one at each (m/2) sqrt2 - v.
      BigInt m = floor_q(QSqrt2(BigRat(2) * cell.lo.b(), BigRat(v) + cell.lo.a()));
      QSqrt2 cur = cell.lo;
      while (true) {
        QSqrt2 bp = QSqrt2::halfint(BigInt(m + 1), v);
        if (!(bp < cell.hi)) break;
        SweepCell piece{cur, bp, cell.prefix};
        piece.prefix.push_back(m);
        next.push_back(std::move(piece));
        cur = bp;
        ++m;
      }
      cell.lo = cur;
      cell.prefix.push_back(m);
      next.push_back(std::move(cell));
    }
    if (next.size() > cell_budget) throw BudgetError(cell_budget, n + 1);
    cells = std::move(next);
  }
  return cells;
}

std::vector<Step> step_function(const QSqrt2& lo, const QSqrt2& hi, std::size_t n, std::size_t cell_budget) {
  std::vector<Step> steps;
  for (const auto& cell : sweep(lo, hi, n, cell_budget)) {
    const BigInt& value = cell.prefix.at(n - 1);
    if (!steps.empty() && steps.back().value == value) {
      steps.back().hi = cell.hi;
    } else {
      steps.push_back({cell.lo, cell.hi, value});
    }
  }
  return steps;
}

BigInt value_at(std::size_t n, const QSqrt2& eps) {
  SequenceSpec spec;
  spec.epsilon = eps;
  spec.depth = n;
  return generate(spec).v(n);
}

// ---------------------------------------------------------------------------
// Bisection

RealInterval bisect_jump(std::size_t n, const BigInt& target, const BigRat& lo, const BigRat& hi, int tol_bits) {
  BigInt v_lo = value_at(n, QSqrt2(lo));
  BigInt v_hi = value_at(n, QSqrt2(hi));
  if (!(lo < hi) || !(v_lo < target) || !(target <= v_hi)) {
    throw BracketError("bisect_jump: need v_n(lo) < target <= v_n(hi); got v_" + std::to_string(n) + "(" +
                       lo.to_string() + ")=" + v_lo.get_str() + ", v_" + std::to_string(n) + "(" + hi.to_string() +
                       ")=" + v_hi.get_str() + ", target " + target.get_str());
  }
  const BigRat tol = BigRat(1).mul_pow2(-tol_bits);
  BigRat a = lo, b = hi;
  while (b - a > tol) {
    BigRat mid = (a + b) / BigRat(2);
    if (value_at(n, QSqrt2(mid)) >= target) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return {a, b, tol_bits};
}

// ---------------------------------------------------------------------------
// Identification

namespace {

double approx_log2(const BigRat& x) {
  if (x.sign() <= 0) return -1e9;
  long e = static_cast<long>(bit_length(x.num())) - static_cast<long>(bit_length(x.den()));
  double mant = x.mul_pow2(-e).to_double();
  return static_cast<double>(e) + std::log2(mant);
}

QSqrt2 unit_power(long k) {
  // (1 + sqrt2)^k for k >= 0, (sqrt2 - 1)^(-k) for k < 0.
  QSqrt2 base = k >= 0 ? QSqrt2(1, 1) : QSqrt2(-1, 1);
  QSqrt2 r(1);
  for (long i = 0; i < std::labs(k); ++i) r *= base;
  return r;
}

constexpr std::size_t kMaxCandidates = 1'000'000;

}  // namespace

std::pair<BigInt, BigInt> identify_halfint_sqrt2(const RealInterval& x, const BigInt& bound) {
  if (bound < 0) throw DomainError("identify_halfint_sqrt2: bound must be >= 0");
  // u = 2x = -2d + c sqrt2 lies in Z[sqrt2]; its conjugate -2d - c sqrt2 is
  // bounded by 4 * bound. Scaling by lambda^k (lambda = 1 + sqrt2, a unit)
  // maps Z[sqrt2] onto itself and balances the two box sides.
  const BigRat u_lo = BigRat(2) * x.lo;
  const BigRat u_hi = BigRat(2) * x.hi;
  const BigRat conj_bound = BigRat(4) * BigRat(bound) + BigRat(1);
  const BigRat u_width = u_hi - u_lo;
  long k = 0;
  if (u_width.sign() > 0) {
    double ratio = approx_log2(conj_bound) - approx_log2(u_width);
    k = std::max(0L, std::lround(ratio / (2.0 * std::log2(1.0 + std::sqrt(2.0)))));
  } else {
    k = static_cast<long>(bit_length(bound)) + 1;
  }
  const QSqrt2 lam = unit_power(k);
  const QSqrt2 lam_inv = unit_power(-k);
  const QSqrt2 w_lo = lam * QSqrt2(u_lo);
  const QSqrt2 w_hi = lam * QSqrt2(u_hi);
  const QSqrt2 conj_w = lam_inv * QSqrt2(conj_bound);  // |w'| <= conj_w
  // a = (w + w') / 2, b = (w - w') / (2 sqrt2)
  const QSqrt2 half(BigRat(1, 2));
  const QSqrt2 inv_2r2(BigRat(0), BigRat(1, 4));
  BigInt a_min = ceil_q((w_lo - conj_w) * half);
  BigInt a_max = floor_q((w_hi + conj_w) * half);
  BigInt b_min = ceil_q((w_lo - conj_w) * inv_2r2);
  BigInt b_max = floor_q((w_hi + conj_w) * inv_2r2);
  if (a_max < a_min || b_max < b_min) throw IdentificationError("no (c, d) candidate in the interval");
  BigInt count = (a_max - a_min + 1) * (b_max - b_min + 1);
  if (count > kMaxCandidates) {
    throw IdentificationError("interval too wide for bound " + bound.get_str() + "; tighten the enclosure");
  }
  std::vector<std::pair<BigInt, BigInt>> found;
  for (BigInt a = a_min; a <= a_max; ++a) {
    for (BigInt b = b_min; b <= b_max; ++b) {
      QSqrt2 u = QSqrt2(BigRat(a), BigRat(b)) * lam_inv;
      if (!u.a().is_integer() || !u.b().is_integer()) continue;
      BigInt big_a = u.a().num();
      if (mpz_odd_p(big_a.get_mpz_t())) continue;
      BigInt c = u.b().num();
      BigInt d = -big_a / 2;
      if (abs(c) > bound || abs(d) > bound) continue;
      if (x.contains(QSqrt2::halfint(c, d))) found.emplace_back(c, d);
    }
  }
  if (found.empty()) throw IdentificationError("no (c, d) with |c|, |d| <= " + bound.get_str() + " in the interval");
  if (found.size() > 1) {
    throw IdentificationError(std::to_string(found.size()) + " candidates in the interval; tighten the enclosure");
  }
  return found.front();
}

QSqrt2 QuadPoly::evaluate(const QSqrt2& x) const {
  return QSqrt2(a2) * x * x + QSqrt2(a1) * x + QSqrt2(a0);
}

std::string QuadPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto term = [&](const BigInt& coef, const char* var) {
    if (coef == 0) return;
    BigInt mag = abs(coef);
    if (first) {
      if (coef < 0) out << "-";
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    if (mag != 1 || var[0] == '\0') out << mag.get_str();
    if (var[0] != '\0' && mag != 1) out << "*";
    out << var;
    first = false;
  };
  term(a2, "x^2");
  term(a1, "x");
  term(a0, "");
  if (first) out << "0";
  return out.str();
}

namespace {

QuadPoly normalized(BigInt a2, BigInt a1, BigInt a0) {
  BigInt g = gcd(gcd(a2, a1), a0);
  if (g != 0) {
    a2 /= g;
    a1 /= g;
    a0 /= g;
  }
  const BigInt& lead = a2 != 0 ? a2 : (a1 != 0 ? a1 : a0);
  if (lead < 0) {
    a2 = -a2;
    a1 = -a1;
    a0 = -a0;
  }
  return {a2, a1, a0};
}

BigRat poly_at(const QuadPoly& p, const BigRat& x) {
  return BigRat(p.a2) * x * x + BigRat(p.a1) * x + BigRat(p.a0);
}

// p has a real root in [lo, hi].
bool root_in(const QuadPoly& p, const BigRat& lo, const BigRat& hi) {
  int s_lo = poly_at(p, lo).sign();
  int s_hi = poly_at(p, hi).sign();
  if (s_lo == 0 || s_hi == 0 || s_lo != s_hi) return true;
  if (p.a2 != 0) {
    BigRat vertex = BigRat(BigInt(-p.a1), BigInt(2 * p.a2));
    if (lo < vertex && vertex < hi && poly_at(p, vertex).sign() != s_lo) return true;
  }
  return false;
}

BigInt round_nearest(const BigRat& x) { return (x + BigRat(1, 2)).floor(); }

using Vec = std::vector<BigInt>;

BigRat dot(const Vec& a, const Vec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return BigRat(s);
}

// Textbook LLL (delta = 3/4) with exact rational Gram-Schmidt data; the
// dimension here is three, so recomputing from scratch is fine.
void lll_reduce(std::vector<Vec>& basis) {
  const std::size_t n = basis.size();
  std::vector<std::vector<BigRat>> mu(n, std::vector<BigRat>(n));
  std::vector<BigRat> norm2(n);
  auto gram_schmidt = [&] {
    std::vector<std::vector<BigRat>> star(n);
    for (std::size_t i = 0; i < n; ++i) {
      star[i].assign(basis[i].begin(), basis[i].end());
      for (std::size_t j = 0; j < i; ++j) {
        BigRat num(0);
        for (std::size_t t = 0; t < basis[i].size(); ++t) num += BigRat(basis[i][t]) * star[j][t];
        mu[i][j] = num / norm2[j];
        for (std::size_t t = 0; t < star[i].size(); ++t) star[i][t] -= mu[i][j] * star[j][t];
      }
      BigRat s(0);
      for (const auto& c : star[i]) s += c * c;
      norm2[i] = s;
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      BigInt q = round_nearest(mu[k][jj]);
      if (q != 0) {
        for (std::size_t t = 0; t < basis[k].size(); ++t) basis[k][t] -= q * basis[jj][t];
        gram_schmidt();
      }
    }
    if (norm2[k] >= (BigRat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

}  // namespace

QuadPoly halfint_min_poly(const BigInt& c, const BigInt& d) {
  return normalized(BigInt(2), BigInt(4 * d), BigInt(2 * d * d - c * c));
}

QuadPoly min_poly_deg2(const RealInterval& x, const BigInt& coeff_bound) {
  const BigRat mid = x.midpoint();
  long precision = 64;
  if (x.width().sign() > 0) precision = std::max(16L, static_cast<long>(-std::floor(approx_log2(x.width()))));
  const BigRat scale = BigRat(1).mul_pow2(precision);
  // Rows (e_i, round(2^P x^i)) for i = 0, 1, 2; a short vector carries the
  // relation a0 + a1 x + a2 x^2 ~ 0 in its first three coordinates.
  std::vector<Vec> basis = {
      {1, 0, 0, pow2(static_cast<std::size_t>(precision))},
      {0, 1, 0, round_nearest(mid * scale)},
      {0, 0, 1, round_nearest(mid * mid * scale)},
  };
  lll_reduce(basis);
  std::vector<Vec> ordered = basis;
  std::sort(ordered.begin(), ordered.end(), [](const Vec& a, const Vec& b) { return dot(a, a) < dot(b, b); });
  for (const auto& v : ordered) {
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
    QuadPoly p = normalized(v[2], v[1], v[0]);
    if (abs(p.a2) > coeff_bound || abs(p.a1) > coeff_bound || abs(p.a0) > coeff_bound) continue;
    if (root_in(p, x.lo, x.hi)) return p;
  }
  throw IdentificationError("no degree-2 relation with coefficients <= " + coeff_bound.get_str() +
                            " at this precision; tighten the enclosure");
}

// ---------------------------------------------------------------------------
// Endpoints and partition

bool EndpointReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

EndpointReport verify_endpoint(const GPPairEntry& pair, EndpointSide side) {
  EndpointReport r;
  r.row = pair.index;
  r.side = side;
  r.xi = side == EndpointSide::Left ? pair.xi1 : pair.xi2;
  const QSqrt2 delta = sharpness_delta();

  if (pair.direct_case()) {
    r.kind = EndpointKind::Direct;
    r.checks.push_back({"in_domain", domain_lo() <= r.xi && r.xi <= domain_hi(), r.xi.to_string()});
    r.checks.push_back({"halfint_form", halfint_coords(r.xi).has_value(), r.xi.to_string()});
    return r;
  }

  if ((side == EndpointSide::Left && r.xi == domain_lo()) || (side == EndpointSide::Right && r.xi == domain_hi())) {
    r.kind = EndpointKind::InductionDomain;
    if (side == EndpointSide::Left) {
      QSqrt2 v = induction_step_expression(QSqrt2(1) - QSqrt2(BigRat(1).mul_pow2(-64)), r.xi - delta);
      r.checks.push_back({"step_fails_below", sign(v) < 0, "value " + to_significant(v, 12)});
      r.checks.push_back({"base_case_at_xi", base_case_holds(pair, r.xi), r.xi.to_string()});
    } else {
      QSqrt2 v = induction_step_expression(QSqrt2(0), r.xi);
      r.checks.push_back({"step_fails_at", sign(v - QSqrt2(1)) >= 0, "value " + v.to_string()});
      r.checks.push_back({"base_case_below_xi", base_case_holds(pair, r.xi - delta), (r.xi - delta).to_string()});
    }
    return r;
  }

  r.kind = EndpointKind::BaseCase;
  const QSqrt2 inside = side == EndpointSide::Left ? r.xi : r.xi - delta;
  const QSqrt2 outside = side == EndpointSide::Left ? r.xi - delta : r.xi;
  r.checks.push_back({"base_case_inside", base_case_holds(pair, inside), "eps=" + inside.to_string()});
  r.checks.push_back({"base_case_fails_outside", !base_case_holds(pair, outside), "eps=" + outside.to_string()});

  const std::size_t depth = static_cast<std::size_t>(2 * (pair.target.l + 2));
  auto cells = sweep(r.xi - delta, r.xi + delta, depth);
  for (std::size_t i = 1; i < cells.size(); ++i) r.breakpoints.push_back(cells[i].lo);
  bool single = r.breakpoints.size() == 1 && r.breakpoints.front() == r.xi;
  r.checks.push_back({"single_breakpoint_at_xi", single,
                      std::to_string(r.breakpoints.size()) + " breakpoint(s) in [xi-2^-60, xi+2^-60) at depth " +
                          std::to_string(depth)});
  return r;
}

EndpointDiscovery discover_endpoint(int row, EndpointSide side, int tol_bits, const BigInt& bound) {
  const GPPairEntry& pair = table_row(row);
  EndpointDiscovery out;
  out.row = row;
  out.side = side;
  const QSqrt2 xi = side == EndpointSide::Left ? pair.xi1 : pair.xi2;
  out.endpoint = verify_endpoint(pair, side);

  if ((side == EndpointSide::Left && xi == domain_lo()) || (side == EndpointSide::Right && xi == domain_hi())) {
    auto [c, d] = *halfint_coords(xi);
    out.source_row = row;
    out.c = c;
    out.d = d;
    out.poly = halfint_min_poly(c, d);
    out.lll_poly = out.poly;
    out.matches_table = true;
    return out;
  }

  // Row 5 is bounded by the jumps that end row 4 and start row 6.
  int source = row;
  EndpointSide source_side = side;
  if (pair.direct_case()) {
    source = side == EndpointSide::Left ? row - 1 : row + 1;
    source_side = side == EndpointSide::Left ? EndpointSide::Right : EndpointSide::Left;
  }
  const GPPairEntry& src = table_row(source);
  const BigInt alpha = src.target.alpha;
  const BigInt comp = floor_scaled_sqrt2(alpha, 0) + 2 * alpha;
  out.source_row = source;
  out.depth = static_cast<std::size_t>(2 * (src.target.l + 2));
  out.target = source_side == EndpointSide::Left ? comp : BigInt(comp + 1);

  // Rational window just inside the domain [0.29289.., 0.70710..).
  RealInterval enclosure = bisect_jump(out.depth, out.target, BigRat(2929, 10000), BigRat(7071, 10000), tol_bits);
  out.enclosure = enclosure;
  std::tie(out.c, out.d) = identify_halfint_sqrt2(enclosure, bound);
  out.poly = halfint_min_poly(out.c, out.d);
  out.lll_poly = min_poly_deg2(enclosure, BigInt(bound * bound * 8));
  out.matches_table = QSqrt2::halfint(out.c, out.d) == xi;
  return out;
}

PartitionReport validate_partition(std::vector<GPPairEntry> entries) {
  PartitionReport report;
  if (entries.empty()) {
    report.issues.push_back({"empty", domain_lo(), "no entries"});
    return report;
  }
  std::sort(entries.begin(), entries.end(), [](const GPPairEntry& a, const GPPairEntry& b) { return a.xi1 < b.xi1; });
  for (const auto& e : entries) {
    if (!(e.xi1 < e.xi2)) report.issues.push_back({"empty", e.xi1, "row " + std::to_string(e.index)});
  }
  if (entries.front().xi1 != domain_lo()) {
    report.issues.push_back({"start", entries.front().xi1, "first xi1 is not 1-1/2*sqrt2"});
  }
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    const QSqrt2& end = entries[i].xi2;
    const QSqrt2& next = entries[i + 1].xi1;
    std::string rows = "rows " + std::to_string(entries[i].index) + "/" + std::to_string(entries[i + 1].index);
    if (end < next) report.issues.push_back({"gap", end, rows + ": gap up to " + next.to_string()});
    if (end > next) report.issues.push_back({"overlap", next, rows + ": overlap up to " + end.to_string()});
  }
  if (entries.back().xi2 != domain_hi()) {
    report.issues.push_back({"end", entries.back().xi2, "last xi2 is not 1/2*sqrt2"});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Table reconstruction

std::optional<AlgebraicTarget> identify_target(const std::vector<BigInt>& digits, long l_bound) {
  if (digits.empty()) return std::nullopt;
  BigRat lower(0);
  for (std::size_t n = 1; n <= digits.size(); ++n) {
    if (digits[n - 1] != 0 && digits[n - 1] != 1) return std::nullopt;
    if (digits[n - 1] == 1) lower += BigRat(1).mul_pow2(1 - static_cast<long>(n));
  }
  const BigRat upper = lower + BigRat(1).mul_pow2(1 - static_cast<long>(digits.size()));
  auto matches = [&](const AlgebraicTarget& t) {
    QSqrt2 v = t.value();
    if (sign(v) < 0 || !(v < QSqrt2(2))) return false;
    return digits_of_target(t, digits.size()).digits == digits;
  };
  const QSqrt2 r2m1(-1, 1);  // sqrt2 - 1 = 1 / (1 + sqrt2)
  for (long l = 0; l <= l_bound; ++l) {
    if (l == 0) {
      AlgebraicTarget root2{1, 0, 0};
      if (matches(root2)) return root2;
    }
    // t = (alpha (1 + sqrt2) - 2^(l+1)) / 2^l  =>  alpha = (t 2^l + 2^(l+1)) (sqrt2 - 1)
    const BigRat p = BigRat(pow2(static_cast<std::size_t>(l + 1)));
    BigInt a_min = ceil_q(QSqrt2(lower.mul_pow2(l) + p) * r2m1);
    BigInt a_max = floor_q(QSqrt2(upper.mul_pow2(l) + p) * r2m1);
    if (a_max - a_min > 4096) continue;
    for (BigInt alpha = a_min; alpha <= a_max; ++alpha) {
      if (!mpz_odd_p(alpha.get_mpz_t())) continue;
      AlgebraicTarget t{alpha, BigInt(pow2(static_cast<std::size_t>(l + 1)) - alpha), l};
      if (t.beta < 0) continue;
      if (matches(t)) return t;
    }
  }
  return std::nullopt;
}

std::vector<DiscoveredRegion> reconstruct_table(std::size_t depth, std::size_t digit_depth, long l_bound,
                                                std::size_t cell_budget) {
  if (digit_depth < 1 || depth < 2 * digit_depth + 1) {
    throw DomainError("reconstruct_table: need depth >= 2 * digitDepth + 1");
  }
  std::vector<DiscoveredRegion> regions;
  for (const auto& cell : sweep(domain_lo(), domain_hi(), depth, cell_budget)) {
    std::vector<BigInt> digits;
    digits.reserve(digit_depth);
    for (std::size_t n = 1; n <= digit_depth; ++n) digits.push_back(cell.prefix[2 * n] - 2 * cell.prefix[2 * n - 2]);
    if (!regions.empty() && regions.back().digits == digits) {
      regions.back().hi = cell.hi;
      ++regions.back().cells;
    } else {
      regions.push_back({cell.lo, cell.hi, std::move(digits), std::nullopt, 1});
    }
  }
  for (auto& r : regions) r.target = identify_target(r.digits, l_bound);
  return regions;
}

// ---------------------------------------------------------------------------
// Serialization

std::pair<BigRat, BigRat> halfint_rational_coords(const QSqrt2& x) { return {BigRat(2) * x.b(), -x.a()}; }

void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells) {
  out << "lo_c,lo_d,hi_c,hi_d,v_prefix\n";
  for (const auto& cell : cells) {
    auto [lc, ld] = halfint_rational_coords(cell.lo);
    auto [hc, hd] = halfint_rational_coords(cell.hi);
    out << lc.to_string() << ',' << ld.to_string() << ',' << hc.to_string() << ',' << hd.to_string() << ',';
    for (std::size_t i = 0; i < cell.prefix.size(); ++i) out << (i ? " " : "") << cell.prefix[i].get_str();
    out << '\n';
  }
}

std::vector<SweepCell> read_sweep_csv(std::istream& in) {
  std::vector<SweepCell> cells;
  std::string line;
  if (!std::getline(in, line) || line != "lo_c,lo_d,hi_c,hi_d,v_prefix") {
    throw ParseError("missing sweep CSV header", 0);
  }
  auto coord = [](const BigRat& c, const BigRat& d) { return QSqrt2(-d, c / BigRat(2)); };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() != 5) throw ParseError("expected 5 CSV fields", 0);
    SweepCell cell;
    cell.lo = coord(BigRat::parse(fields[0]), BigRat::parse(fields[1]));
    cell.hi = coord(BigRat::parse(fields[2]), BigRat::parse(fields[3]));
    std::stringstream vs(fields[4]);
    std::string tok;
    while (vs >> tok) cell.prefix.emplace_back(tok);
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace gp
