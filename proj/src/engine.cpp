#include "gp/engine.hpp"

#include <random>

#include "gp/errors.hpp"

namespace gp {

std::string to_string(const Epsilon& eps) {
  if (const auto* q = std::get_if<QSqrt2>(&eps)) return q->to_string();
  return std::get<RefinableReal>(eps).to_string();
}

// ---------------------------------------------------------------------------
// Sequences

SequenceStepper::SequenceStepper(SequenceSpec spec) : spec_(std::move(spec)), v_(spec_.initial) {}

const BigInt& SequenceStepper::advance() {
  if (n_ % 2 == 1) {
    if (const auto* q = std::get_if<QSqrt2>(&spec_.epsilon)) {
      // sqrt2 (v + a + b sqrt2) = 2b + (v + a) sqrt2
      v_ = floor_q(QSqrt2(BigRat(2) * q->b(), BigRat(v_) + q->a()));
    } else {
      try {
        v_ = certified_floor(std::get<RefinableReal>(spec_.epsilon), QSqrt2(), v_, spec_.max_bits);
      } catch (const Undecidable& u) {
        throw u.with_index(n_);
      }
    }
  } else {
    v_ = floor_q(QSqrt2(BigRat(0), BigRat(BigInt(2 * v_ + 1), 2)));
  }
  ++n_;
  return v_;
}

SequenceTrace generate(const SequenceSpec& spec) {
  if (spec.depth < 1) throw DomainError("generate: depth must be >= 1");
  if (spec.initial < 1) throw DomainError("generate: initial value must be >= 1");
  SequenceTrace trace;
  trace.spec = spec;
  trace.values.reserve(spec.depth);
  SequenceStepper stepper(spec);
  trace.values.push_back(stepper.current());
  while (trace.values.size() < spec.depth) trace.values.push_back(stepper.advance());
  return trace;
}

DigitStream digits_from_trace(const SequenceTrace& trace) {
  return digits_from_trace(trace, trace.depth() >= 1 ? (trace.depth() - 1) / 2 : 0);
}

DigitStream digits_from_trace(const SequenceTrace& trace, std::size_t count) {
  if (2 * count + 1 > trace.depth()) {
    throw RangeError("trace depth " + std::to_string(trace.depth()) + " too short for " +
                     std::to_string(count) + " digits");
  }
  DigitStream out;
  out.source = DigitSource::Trace;
  out.digits.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) out.digits.push_back(trace.v(2 * n + 1) - 2 * trace.v(2 * n - 1));
  return out;
}

BigInt floor_target_scaled(const AlgebraicTarget& t, long m) {
  if (m >= t.l) {
    long shift = m - t.l;
    return floor_scaled_sqrt2(t.alpha, shift) - t.beta * pow2(static_cast<std::size_t>(shift));
  }
  // floor((floor(alpha sqrt2) - beta) / 2^j) == floor((alpha sqrt2 - beta) / 2^j)
  BigInt numer = floor_scaled_sqrt2(t.alpha, 0) - t.beta;
  return floor_div(numer, pow2(static_cast<std::size_t>(t.l - m)));
}

namespace {

void require_digit_range(const QSqrt2& t) {
  if (sign(t) < 0 || sign(t - QSqrt2(2)) >= 0) {
    throw DomainError("digits_of_target: t = " + t.to_string() + " is outside [0, 2)");
  }
}

template <typename FloorScaled>
DigitStream digits_via(FloorScaled&& floor_scaled, std::size_t count) {
  DigitStream out;
  out.source = DigitSource::Target;
  out.digits.reserve(count);
  BigInt prev = floor_scaled(-1);
  for (std::size_t n = 1; n <= count; ++n) {
    BigInt cur = floor_scaled(static_cast<long>(n) - 1);
    out.digits.push_back(cur - 2 * prev);
    prev = cur;
  }
  return out;
}

}  // namespace

DigitStream digits_of_target(const QSqrt2& t, std::size_t count) {
  require_digit_range(t);
  return digits_via([&](long m) { return floor_q(t.mul_pow2(m)); }, count);
}

DigitStream digits_of_target(const AlgebraicTarget& t, std::size_t count) {
  require_digit_range(t.value());
  if (t.alpha < 0) return digits_of_target(t.value(), count);
  return digits_via([&](long m) { return floor_target_scaled(t, m); }, count);
}

// ---------------------------------------------------------------------------
// Pair verification

PairMatchReport verify_pair(const GPPairEntry& pair, const Epsilon& eps, std::size_t depth) {
  if (depth < 1) throw DomainError("verify_pair: depth must be >= 1");
  PairMatchReport report;
  report.row = pair.index;
  report.epsilon = to_string(eps);
  report.depth = depth;
  if (const auto* q = std::get_if<QSqrt2>(&eps)) {
    report.epsilon_in_interval = pair.xi1 <= *q && *q < pair.xi2;
  }
  SequenceSpec spec;
  spec.epsilon = eps;
  spec.depth = 2 * depth + 1;
  DigitStream got = digits_from_trace(generate(spec), depth);
  DigitStream want = digits_of_target(pair.target, depth);
  for (std::size_t n = 1; n <= depth; ++n) {
    if (got.d(n) != want.d(n)) {
      report.first_mismatch = DigitMismatch{n, got.d(n), want.d(n)};
      break;
    }
  }
  return report;
}

QSqrt2 sharpness_delta() { return QSqrt2(BigRat(1).mul_pow2(-60)); }

bool Certificate::ok() const { return first_failure() == nullptr; }

const CheckResult* Certificate::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

namespace {

BigInt comp_target_of(const AlgebraicTarget& t) { return floor_scaled_sqrt2(t.alpha, 0) + 2 * t.alpha; }

SequenceTrace exact_trace(const QSqrt2& eps, std::size_t depth) {
  SequenceSpec spec;
  spec.epsilon = eps;
  spec.depth = depth;
  return generate(spec);
}

// Odd closed form v_{2k+1} = floor(t 2^(k-1)) + 2^k for 0 <= k <= k_last.
CheckResult odd_initial_check(const GPPairEntry& pair, const QSqrt2& eps, long k_last, const std::string& name) {
  SequenceTrace tr = exact_trace(eps, static_cast<std::size_t>(2 * k_last + 1));
  for (long k = 0; k <= k_last; ++k) {
    BigInt expected = floor_target_scaled(pair.target, k - 1) + pow2(static_cast<std::size_t>(k));
    const BigInt& actual = tr.v(static_cast<std::size_t>(2 * k + 1));
    if (actual != expected) {
      return {name, false,
              "k=" + std::to_string(k) + ": v=" + actual.get_str() + " expected " + expected.get_str() +
                  " at eps=" + eps.to_string()};
    }
  }
  return {name, true, "0<=k<=" + std::to_string(k_last) + " at eps=" + eps.to_string()};
}

CheckResult comp_check(const GPPairEntry& pair, const QSqrt2& eps, bool expect_hold, const std::string& name) {
  std::size_t n = static_cast<std::size_t>(2 * (pair.target.l + 2));
  BigInt value = exact_trace(eps, n).v(n);
  BigInt target = comp_target_of(pair.target);
  bool holds = value == target;
  return {name, holds == expect_hold,
          "v_" + std::to_string(n) + "=" + value.get_str() + (holds ? " == " : " != ") + target.get_str() +
              " at eps=" + eps.to_string()};
}

}  // namespace

bool base_case_holds(const GPPairEntry& pair, const QSqrt2& eps) {
  std::size_t n = static_cast<std::size_t>(2 * (pair.target.l + 2));
  return exact_trace(eps, n).v(n) == comp_target_of(pair.target);
}

Certificate certify_pair(const GPPairEntry& pair) {
  if (pair.direct_case()) throw DomainError("certify_pair: row 5 uses closed_form_check");
  Certificate cert;
  cert.row = pair.index;
  const AlgebraicTarget& t = pair.target;
  const QSqrt2 delta = sharpness_delta();

  cert.checks.push_back({"alpha_odd", t.alpha_odd(), "alpha=" + t.alpha.get_str()});
  cert.checks.push_back({"power_identity", t.power_identity_holds(),
                         "alpha+beta=" + BigInt(t.alpha + t.beta).get_str() + ", 2^(l+1)=" +
                             pow2(static_cast<std::size_t>(t.l + 1)).get_str()});
  if (!cert.ok()) return cert;

  cert.comp_target = comp_target_of(t);
  const QSqrt2 lo = pair.xi1;
  const QSqrt2 hi_in = pair.xi2 - delta;

  cert.checks.push_back({"interval_nonempty", lo < hi_in, "[" + lo.to_string() + ", " + pair.xi2.to_string() + ")"});
  cert.checks.push_back({"interval_in_domain", domain_lo() <= lo && pair.xi2 <= domain_hi(),
                         "[" + lo.to_string() + ", " + pair.xi2.to_string() + ") in [1-1/2*sqrt2, 1/2*sqrt2)"});
  if (!cert.ok()) return cert;

  cert.checks.push_back(comp_check(pair, lo, true, "base_case_at_xi1"));
  cert.checks.push_back(comp_check(pair, hi_in, true, "base_case_at_xi2_minus_delta"));

  if (lo == domain_lo()) {
    // Below 1 - sqrt2/2 the induction step fails for fractional parts near 1.
    QSqrt2 f = QSqrt2(1) - QSqrt2(BigRat(1).mul_pow2(-64));
    QSqrt2 value = induction_step_expression(f, lo - delta);
    cert.checks.push_back({"left_sharpness_induction_step", sign(value) < 0,
                           "(1-sqrt2)f+sqrt2*eps=" + to_significant(value, 12) + " at f=1-2^-64, eps=xi1-2^-60"});
  } else {
    cert.checks.push_back(comp_check(pair, lo - delta, false, "left_sharpness_base_case"));
  }
  if (pair.xi2 == domain_hi()) {
    QSqrt2 value = induction_step_expression(QSqrt2(0), pair.xi2);
    cert.checks.push_back({"right_sharpness_induction_step", sign(value - QSqrt2(1)) >= 0,
                           "(1-sqrt2)f+sqrt2*eps=" + value.to_string() + " at f=0, eps=xi2"});
  } else {
    cert.checks.push_back(comp_check(pair, pair.xi2, false, "right_sharpness_base_case"));
  }

  cert.checks.push_back(odd_initial_check(pair, lo, t.l + 1, "odd_initial_at_xi1"));
  cert.checks.push_back(odd_initial_check(pair, hi_in, t.l + 1, "odd_initial_at_xi2_minus_delta"));

  std::size_t prefix = static_cast<std::size_t>(2 * (t.l + 1) + 1);
  SequenceTrace a = exact_trace(lo, prefix);
  SequenceTrace b = exact_trace(hi_in, prefix);
  CheckResult stable{"odd_prefix_stable", true, "v_1, v_3, ..., v_" + std::to_string(prefix) + " identical"};
  for (std::size_t n = 1; n <= prefix; n += 2) {
    if (a.v(n) != b.v(n)) {
      stable.pass = false;
      stable.witness = "v_" + std::to_string(n) + ": " + a.v(n).get_str() + " vs " + b.v(n).get_str();
      break;
    }
  }
  cert.checks.push_back(stable);
  return cert;
}

// ---------------------------------------------------------------------------
// Closed forms

const FormResult& ClosedFormReport::form(const std::string& name) const {
  for (const auto& f : forms) {
    if (f.name == name) return f;
  }
  throw RangeError("no closed form named " + name);
}

ClosedFormReport closed_form_check(int row, const QSqrt2& eps, long k_first, long k_last) {
  const GPPairEntry& pair = table_row(row);
  if (!(pair.xi1 <= eps && eps < pair.xi2)) {
    throw DomainError("closed_form_check: eps=" + eps.to_string() + " outside row " + std::to_string(row));
  }
  const AlgebraicTarget& t = pair.target;
  long k_min = pair.direct_case() ? 1 : t.l + 2;
  if (k_first < k_min || k_last < k_first) {
    throw DomainError("closed_form_check: k range must lie in [" + std::to_string(k_min) + ", inf)");
  }
  SequenceTrace tr = exact_trace(eps, static_cast<std::size_t>(2 * k_last + 1));

  ClosedFormReport report;
  report.row = row;
  report.k_first = k_first;
  report.k_last = k_last;

  auto record = [](FormResult& f, long k, const BigRat& expected, const BigInt& actual) {
    if (f.pass && expected != BigRat(actual)) {
      f.pass = false;
      f.first_mismatch = FormMismatch{k, expected.to_string(), actual};
    }
  };
  auto pow2_rat = [](long e) { return BigRat(1).mul_pow2(e); };

  FormResult odd{"odd", true, std::nullopt};
  FormResult even{pair.direct_case() ? "even_printed" : "even", true, std::nullopt};
  FormResult shifted{"even_shifted", true, std::nullopt};
  for (long k = k_first; k <= k_last; ++k) {
    const BigInt& v_even = tr.v(static_cast<std::size_t>(2 * k));
    const BigInt& v_odd = tr.v(static_cast<std::size_t>(2 * k + 1));
    record(odd, k, BigRat(floor_target_scaled(t, k - 1)) + pow2_rat(k), v_odd);
    if (pair.direct_case()) {
      record(even, k, BigRat(floor_target_scaled(t, k - 2)) + pow2_rat(k - 2), v_even);
      record(shifted, k, BigRat(floor_target_scaled(t, k - 1)) + pow2_rat(k - 1), v_even);
    } else {
      record(even, k, BigRat(floor_target_scaled(t, k - 2)) + BigRat(t.gamma()) * pow2_rat(k - t.l - 2), v_even);
    }
  }
  report.forms.push_back(odd);
  report.forms.push_back(even);
  if (pair.direct_case()) report.forms.push_back(shifted);
  return report;
}

// ---------------------------------------------------------------------------
// Lemmas

bool LemmaReport::ok() const {
  if (violations != 0) return false;
  for (const auto& c : endpoint_checks) {
    if (!c.pass) return false;
  }
  return true;
}

QSqrt2 lemma_expression(const QSqrt2& x) {
  const QSqrt2 r2 = QSqrt2::sqrt2();
  return frac_q(x) - r2 * frac_q(x.mul_pow2(-1)) + r2.mul_pow2(-1);
}

QSqrt2 induction_step_expression(const QSqrt2& f, const QSqrt2& eps) {
  return (QSqrt2(1) - QSqrt2::sqrt2()) * f + QSqrt2::sqrt2() * eps;
}

namespace {

bool in_unit_interval(const QSqrt2& v) { return sign(v) >= 0 && sign(v - QSqrt2(1)) < 0; }

CheckResult unit_check(const std::string& name, const QSqrt2& value) {
  return {name, in_unit_interval(value), "value=" + value.to_string()};
}

}  // namespace

LemmaReport lemma_checks(std::size_t sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw DomainError("lemma_checks: sampleCount must be >= 1");
  LemmaReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> numer(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  std::uniform_int_distribution<std::int64_t> denom(1, std::int64_t{1} << 20);
  auto rational = [&] { return BigRat(BigInt(static_cast<long>(numer(rng))), BigInt(static_cast<long>(denom(rng)))); };

  for (std::size_t i = 0; i < sample_count; ++i) {
    QSqrt2 x = (i % 2 == 0) ? QSqrt2(rational()) : QSqrt2(rational(), rational());
    QSqrt2 value = lemma_expression(x);
    ++report.samples;
    if (!in_unit_interval(value)) {
      ++report.violations;
      if (!report.first_violation) report.first_violation = "x=" + x.to_string() + " gives " + value.to_string();
    }
  }

  // With x = 2f and f = {x/2}, the lemma is linear in f on [0, 1/2) and on
  // [1/2, 1). Exact checks at both ends of each piece.
  const QSqrt2 eta = QSqrt2(BigRat(1).mul_pow2(-64));
  const QSqrt2 half = QSqrt2(BigRat(1, 2));
  for (auto [name, f] : {std::pair<const char*, QSqrt2>{"lemma_f=0", QSqrt2(0)},
                         {"lemma_f=1/2-", half - eta},
                         {"lemma_f=1/2", half},
                         {"lemma_f=1-", QSqrt2(1) - eta}}) {
    report.endpoint_checks.push_back(unit_check(name, lemma_expression(f.mul_pow2(1))));
  }

  // Induction-step inequality, bilinear in (f, eps): the four corners.
  const QSqrt2 f_hi = QSqrt2(1) - eta;
  const QSqrt2 eps_lo = domain_lo();
  const QSqrt2 eps_hi = domain_hi() - eta;
  report.endpoint_checks.push_back(unit_check("step_f=0_eps=lo", induction_step_expression(QSqrt2(0), eps_lo)));
  report.endpoint_checks.push_back(unit_check("step_f=1-_eps=lo", induction_step_expression(f_hi, eps_lo)));
  report.endpoint_checks.push_back(unit_check("step_f=0_eps=hi-", induction_step_expression(QSqrt2(0), eps_hi)));
  report.endpoint_checks.push_back(unit_check("step_f=1-_eps=hi-", induction_step_expression(f_hi, eps_hi)));

  // The instances the induction actually uses: x = alpha sqrt2 2^(k-l-1).
  for (const auto& pair : theorem_table()) {
    if (pair.direct_case()) continue;
    const AlgebraicTarget& t = pair.target;
    for (long k = t.l + 2; k <= t.l + 64; ++k) {
      QSqrt2 x = QSqrt2(BigRat(0), BigRat(t.alpha)).mul_pow2(k - t.l - 1);
      QSqrt2 value = lemma_expression(x);
      if (!in_unit_interval(value)) {
        report.endpoint_checks.push_back(
            {"row" + std::to_string(pair.index) + "_instances", false, "k=" + std::to_string(k)});
        break;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Remark-style scans

std::optional<BadDigit> first_bad_digit(const QSqrt2& eps, std::size_t limit) {
  if (limit < 1) throw DomainError("first_bad_digit: limit must be >= 1");
  SequenceSpec spec;
  spec.epsilon = eps;
  SequenceStepper stepper(spec);
  BigInt prev_odd = stepper.current();
  for (std::size_t n = 1; n <= limit; ++n) {
    stepper.advance();
    const BigInt& odd = stepper.advance();
    BigInt d = odd - 2 * prev_odd;
    if (d != 0 && d != 1) return BadDigit{n, d};
    prev_odd = odd;
  }
  return std::nullopt;
}

BigInt msb_digit_of_scaled_sqrt2(const BigInt& alpha, std::size_t position) {
  if (position < 1) throw DomainError("digit positions start at 1");
  long int_bits = static_cast<long>(bit_length(floor_scaled_sqrt2(alpha, 0)));
  long m = static_cast<long>(position) - int_bits;
  return floor_scaled_sqrt2(alpha, m) - 2 * floor_scaled_sqrt2(alpha, m - 1);
}

CorollaryReport corollary_check(std::size_t max_n, int max_bits) {
  if (max_n < 32) throw DomainError("corollary_check: N must be >= 32");
  const BigInt alpha("759250125");
  const BigInt beta("314491699");
  CorollaryReport report;
  report.max_n = max_n;
  report.integer_bits = bit_length(floor_scaled_sqrt2(alpha, 0));
  const GPPairEntry& row6 = table_row(6);
  report.identity_holds = QSqrt2(BigRat(0), BigRat(alpha)) == row6.target.value().mul_pow2(29) + QSqrt2(beta);

  SequenceSpec spec;
  spec.epsilon = RefinableReal::parse("1-pi^2/e^3");
  spec.depth = 2 * max_n + 1;
  spec.max_bits = max_bits;
  DigitStream w = digits_from_trace(generate(spec), max_n);

  std::vector<bool> agree(max_n + 1, false);
  for (std::size_t n = 1; n <= max_n; ++n) {
    BigInt expected = msb_digit_of_scaled_sqrt2(alpha, n + 1);
    agree[n] = w.d(n) == expected;
    if (n >= 31 && !agree[n] && !report.first_mismatch) report.first_mismatch = DigitMismatch{n, w.d(n), expected};
  }
  report.all_agree = !report.first_mismatch.has_value();
  std::size_t n0 = max_n + 1;
  while (n0 > 1 && agree[n0 - 1]) --n0;
  report.first_agreement_index = n0;
  return report;
}

QSqrt2 normality_frac(int multiplier, std::size_t k) {
  if (multiplier != 1 && multiplier != 3) throw DomainError("normality_probe: multiplier must be 1 or 3");
  long offset = multiplier == 1 ? 1 : 2;
  QSqrt2 x = QSqrt2(BigRat(0), BigRat(multiplier)).mul_pow2(static_cast<long>(k) - offset);
  return frac_q(x);
}

NormalityReport normality_probe(int multiplier, std::size_t depth) {
  if (depth < 1) throw DomainError("normality_probe: K must be >= 1");
  NormalityReport r;
  r.multiplier = multiplier;
  r.exponent_offset = multiplier == 1 ? 1 : 2;
  r.depth = depth;
  for (std::size_t k = 1; k <= depth; ++k) {
    QSqrt2 f = normality_frac(multiplier, k);
    if (k == 1 || f < r.min_frac) {
      r.min_frac = f;
      r.argmin = k;
    }
    if (k == 1 || f > r.max_frac) {
      r.max_frac = f;
      r.argmax = k;
    }
  }
  return r;
}

}  // namespace gp
