#include "nt/logform.hpp"

#include <cmath>
#include <map>

#include "nt/arith_sieve.hpp"
#include "nt/errors.hpp"

namespace nt {
namespace {

// Merges b (scaled by sign) into a, both sorted by key, dropping zeros.
template <class Key>
void merge_terms(std::vector<std::pair<Key, Rational>>& a,
                 const std::vector<std::pair<Key, Rational>>& b, int sign) {
  if (b.empty()) return;
  std::vector<std::pair<Key, Rational>> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(std::move(*ia++));
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, sign > 0 ? ib->second : Rational(-ib->second));
      ++ib;
    } else {
      Rational c = sign > 0 ? Rational(ia->second + ib->second) : Rational(ia->second - ib->second);
      if (sgn(c) != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  a = std::move(out);
}

template <class Key>
void scale_terms(std::vector<std::pair<Key, Rational>>& terms, const Rational& c) {
  for (auto& t : terms) t.second *= c;
}

LogForm::PrimePair ordered(std::uint32_t p, std::uint32_t q) {
  return p <= q ? LogForm::PrimePair{p, q} : LogForm::PrimePair{q, p};
}

std::string signed_term(const Rational& c, const std::string& basis, bool first) {
  std::string out;
  Rational mag = abs(c);
  if (first) {
    out = sgn(c) < 0 ? "-" : "";
  } else {
    out = sgn(c) < 0 ? " - " : " + ";
  }
  if (basis.empty()) return out + mag.get_str();
  if (mag != 1) out += mag.get_str() + "*";
  return out + basis;
}

}  // namespace

LogForm::LogForm(Rational constant) : constant_(std::move(constant)) {}

LogForm LogForm::log_prime(std::uint32_t p, Rational coefficient) {
  LogForm f;
  if (sgn(coefficient) != 0) f.linear_.emplace_back(p, std::move(coefficient));
  return f;
}

int LogForm::degree() const {
  if (!bilinear_.empty()) return 2;
  if (!linear_.empty()) return 1;
  return 0;
}

std::size_t LogForm::term_count() const {
  return (sgn(constant_) != 0 ? 1 : 0) + linear_.size() + bilinear_.size();
}

LogForm& LogForm::operator+=(const LogForm& other) {
  constant_ += other.constant_;
  merge_terms(linear_, other.linear_, +1);
  merge_terms(bilinear_, other.bilinear_, +1);
  return *this;
}

LogForm& LogForm::operator-=(const LogForm& other) {
  constant_ -= other.constant_;
  merge_terms(linear_, other.linear_, -1);
  merge_terms(bilinear_, other.bilinear_, -1);
  return *this;
}

LogForm& LogForm::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    *this = LogForm{};
    return *this;
  }
  constant_ *= c;
  scale_terms(linear_, c);
  scale_terms(bilinear_, c);
  return *this;
}

LogForm LogForm::operator-() const {
  LogForm f = *this;
  f *= Rational(-1);
  return f;
}

LogForm operator*(const LogForm& a, const LogForm& b) {
  if (a.is_zero() || b.is_zero()) return LogForm{};
  if (a.degree() + b.degree() > 2) {
    throw DegreeError("log-form product would exceed degree 2");
  }
  LogForm out;
  out.constant_ = a.constant_ * b.constant_;
  if (sgn(a.constant_) != 0) {
    LogForm t = b;
    t.constant_ = 0;
    t *= a.constant_;
    out += t;
  }
  if (sgn(b.constant_) != 0) {
    LogForm t = a;
    t.constant_ = 0;
    t *= b.constant_;
    out += t;
  }
  if (!a.linear_.empty() && !b.linear_.empty()) {
    std::map<LogForm::PrimePair, Rational> acc;
    for (const auto& [p, cp] : a.linear_) {
      for (const auto& [q, cq] : b.linear_) acc[ordered(p, q)] += cp * cq;
    }
    LogForm t;
    for (auto& [key, c] : acc) {
      if (sgn(c) != 0) t.bilinear_.emplace_back(key, std::move(c));
    }
    out += t;
  }
  return out;
}

bool LogForm::operator==(const LogForm& other) const {
  return constant_ == other.constant_ && linear_ == other.linear_ && bilinear_ == other.bilinear_;
}

double LogForm::eval(EvalPrecision precision) const {
  if (precision == EvalPrecision::Extended) {
    long double sum = constant_.get_d();
    for (const auto& [p, c] : linear_) sum += static_cast<long double>(c.get_d()) * std::log(static_cast<long double>(p));
    for (const auto& [pq, c] : bilinear_) {
      sum += static_cast<long double>(c.get_d()) * std::log(static_cast<long double>(pq.first)) *
             std::log(static_cast<long double>(pq.second));
    }
    return static_cast<double>(sum);
  }
  // Neumaier summation in storage order.
  double sum = 0.0;
  double comp = 0.0;
  auto add = [&](double x) {
    const double t = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  };
  add(constant_.get_d());
  for (const auto& [p, c] : linear_) add(c.get_d() * std::log(static_cast<double>(p)));
  for (const auto& [pq, c] : bilinear_) {
    add(c.get_d() * std::log(static_cast<double>(pq.first)) * std::log(static_cast<double>(pq.second)));
  }
  return sum + comp;
}

std::string LogForm::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  if (sgn(constant_) != 0) {
    out += signed_term(constant_, "", first);
    first = false;
  }
  for (const auto& [p, c] : linear_) {
    out += signed_term(c, "log(" + std::to_string(p) + ")", first);
    first = false;
  }
  for (const auto& [pq, c] : bilinear_) {
    out += signed_term(c, "log(" + std::to_string(pq.first) + ")*log(" + std::to_string(pq.second) + ")",
                       first);
    first = false;
  }
  return out;
}

LogForm log_form(const ArithTable& table, std::int64_t n) {
  LogForm f;
  for (const auto& [p, e] : table.factorize(n)) {
    f += LogForm::log_prime(static_cast<std::uint32_t>(p), Rational(e));
  }
  return f;
}

}  // namespace nt
