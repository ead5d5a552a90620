#include "cmt/factored_nat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cmt/error.hpp"

namespace cmt {

FactoredNat FactoredNat::from_factors(std::vector<Factor> factors) {
  for (const auto& f : factors) {
    if (f.prime < 2) throw Error(ErrorKind::InvalidInput, "factor base must be >= 2");
    if (f.exponent < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
  }
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.prime < b.prime; });
  FactoredNat out;
  for (auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().prime == f.prime) {
      out.factors_.back().exponent += f.exponent;
    } else {
      out.factors_.push_back(std::move(f));
    }
  }
  return out;
}

FactoredNat FactoredNat::prime_power(const mpz_class& prime, const mpz_class& exponent) {
  return from_factors({Factor{prime, exponent}});
}

mpz_class FactoredNat::exponent_of(const mpz_class& prime) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                             [](const Factor& f, const mpz_class& p) { return f.prime < p; });
  if (it != factors_.end() && it->prime == prime) return it->exponent;
  return 0;
}

const mpz_class& FactoredNat::largest_prime() const {
  if (factors_.empty()) throw Error(ErrorKind::InvalidInput, "1 has no prime factors");
  return factors_.back().prime;
}

FactoredNat& FactoredNat::operator*=(const FactoredNat& other) {
  std::vector<Factor> merged;
  merged.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->prime < a->prime) {
      merged.push_back(*b++);
    } else {
      merged.push_back(Factor{a->prime, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  factors_ = std::move(merged);
  return *this;
}

FactoredNat FactoredNat::pow(const mpz_class& k) const {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "negative power");
  if (k == 0) return {};
  FactoredNat out = *this;
  for (auto& f : out.factors_) f.exponent *= k;
  return out;
}

bool FactoredNat::divides(const FactoredNat& other) const {
  return std::all_of(factors_.begin(), factors_.end(), [&](const Factor& f) {
    return other.exponent_of(f.prime) >= f.exponent;
  });
}

FactoredNat FactoredNat::divide_exact(const FactoredNat& divisor) const {
  if (!divisor.divides(*this)) {
    throw Error(ErrorKind::InternalInconsistency,
                divisor.to_string() + " does not divide " + to_string());
  }
  std::vector<Factor> out = factors_;
  for (auto& f : out) f.exponent -= divisor.exponent_of(f.prime);
  return from_factors(std::move(out));
}

FactoredNat FactoredNat::gcd(const FactoredNat& a, const FactoredNat& b) {
  std::vector<Factor> out;
  for (const auto& f : a.factors_) {
    mpz_class e = b.exponent_of(f.prime);
    if (e > 0) out.push_back(Factor{f.prime, f.exponent < e ? f.exponent : e});
  }
  return from_factors(std::move(out));
}

double FactoredNat::log2() const {
  double bits = 0.0;
  for (const auto& f : factors_) {
    bits += static_cast<double>(mpz_sizeinbase(f.prime.get_mpz_t(), 2)) * f.exponent.get_d();
  }
  return bits;
}

mpz_class FactoredNat::value(double max_bits) const {
  if (log2() > max_bits) {
    throw Error(ErrorKind::CapExceeded, "value of " + to_string() + " is too large to expand");
  }
  mpz_class out = 1;
  for (const auto& f : factors_) {
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), f.prime.get_mpz_t(), f.exponent.get_ui());
    out *= term;
  }
  return out;
}

std::string FactoredNat::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " · ";
    os << factors_[i].prime.get_str();
    if (factors_[i].exponent != 1) os << '^' << factors_[i].exponent.get_str();
  }
  return os.str();
}

}  // namespace cmt
