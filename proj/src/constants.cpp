#include "cmt/constants.hpp"

#include <algorithm>
#include <numeric>

#include "cmt/alg_num.hpp"
#include "cmt/bounds.hpp"
#include "cmt/error.hpp"

namespace cmt {
namespace {

using u64 = std::uint64_t;

// Above this many bits for (1 + p^{m/2})^{2g}, L_g(m) for m >= 8g is taken
// from the identity L_g(m) = mg instead of the exact comparison.
constexpr double kExactLgBits = 1 << 22;

mpz_class z(u64 v) { return mpz_class(static_cast<unsigned long>(v)); }

std::string str(u64 v) { return std::to_string(v); }
std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(const Rational& v) { return v.get_str(); }

void require_prime(const mpz_class& p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, p.get_str() + " is not prime");
}

void require_positive(u64 v, const char* name) {
  if (v == 0) throw Error(ErrorKind::InvalidInput, std::string(name) + " must be >= 1");
}

void require_genus(unsigned g) {
  if (g == 0) throw Error(ErrorKind::InvalidInput, "g must be >= 1");
  if (g > 1000) throw Error(ErrorKind::CapExceeded, "g is limited to 1000");
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class ceil(const Rational& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Φ(g)·H(g), the degree bound for the field over which a CM abelian variety
// acquires good reduction and all its endomorphisms.
struct PhiH {
  u64 phi;
  mpz_class h;
  mpz_class product;
};

PhiH phi_h(unsigned g) {
  PhiH out;
  out.phi = phi_cap_value(g);
  out.h = h_exact(g).value();
  out.product = z(out.phi) * out.h;
  return out;
}

// 12g^2 - 18g + 10
mpz_class tail(unsigned g) {
  const mpz_class gg = g;
  return 12 * gg * gg - 18 * gg + 10;
}

// (2g)!/2 · ((2g)! + v_p((2g)!) + v_p(2)((2g)! - 1))
Rational factorial_block(unsigned g, const mpz_class& p) {
  const mpz_class f = factorial(2ul * g);
  const mpz_class vf = static_cast<long>(factorial_factored(2ul * g).exponent_of(p).get_si());
  const mpz_class v2 = p == 2 ? 1 : 0;
  Rational out = Rational(f, 2) * Rational(f + vf + v2 * (f - 1));
  out.canonicalize();
  return out;
}

HypothesisCheck coprime_to_factorial(u64 d_k, unsigned g) {
  const mpz_class gcd_value = gcd(z(d_k), factorial(2ul * g));
  return {"(ii) d_k prime to (2g)!", gcd_value == 1 ? Verdict::Passed : Verdict::Failed,
          "gcd(" + str(d_k) + ", " + str(2ul * g) + "!) = " + gcd_value.get_str()};
}

void finish(BoundReport& r, unsigned g, std::vector<mpz_class> primes) {
  r.exponent_ceil = ceil(r.exponent_C);
  r.cap_exponent = 2 * mpz_class(g) * r.exponent_ceil;
  r.primes = std::move(primes);
  std::vector<FactoredNat::Factor> cap;
  cap.reserve(r.primes.size());
  for (const auto& p : r.primes) cap.push_back({p, r.cap_exponent});
  r.torsion_cap = FactoredNat::from_factors(std::move(cap));

  std::vector<std::string> unchecked;
  for (const auto& c : r.checks) {
    if (c.verdict == Verdict::Failed) r.conditional = true;
    if (c.verdict == Verdict::NotCheckable) unchecked.push_back(c.name);
  }
  auto append = [&r](const std::string& s) {
    if (!r.notes.empty()) r.notes += "; ";
    r.notes += s;
  };
  if (r.conditional) append("a checked hypothesis failed: the bound is conditional");
  if (!unchecked.empty()) {
    std::string s = "taken on faith: ";
    for (std::size_t i = 0; i < unchecked.size(); ++i) s += (i ? ", " : "") + unchecked[i];
    append(s);
  }
}

}  // namespace

void PAdicInvariants::validate() const {
  require_prime(p);
  if (d == 0 || e == 0 || f == 0) throw Error(ErrorKind::InvalidInput, "p-adic degrees must be >= 1");
  if (d != e * f) {
    throw Error(ErrorKind::InvalidInput,
                "degree " + str(d) + " != e·f = " + str(e) + "·" + str(f));
  }
}

mpz_class PAdicInvariants::residue_cardinality() const {
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), f);
  return q;
}

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::MT_CM: return "MT_CM";
    case TheoremId::MT_CM_refined: return "MT_CM_refined";
    case TheoremId::MT_CM_good: return "MT_CM_good";
    case TheoremId::MT_CM_cycl: return "MT_CM_cycl";
    case TheoremId::MT_CM_KT: return "MT_CM_KT";
    case TheoremId::MT_CM_KT_good: return "MT_CM_KT_good";
    case TheoremId::val_ord: return "val_ord";
    case TheoremId::gsurf2: return "gsurf2";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Passed: return "passed";
    case Verdict::Failed: return "failed";
    case Verdict::NotCheckable: return "not-checkable-from-inputs";
  }
  return "?";
}

unsigned long lg(unsigned g, const mpz_class& p, unsigned long m) {
  if (g == 0 || m == 0) throw Error(ErrorKind::InvalidInput, "L_g(m) needs g, m >= 1");
  require_prime(p);
  const double bits = static_cast<double>(m) * g * static_cast<double>(mpz_sizeinbase(p.get_mpz_t(), 2));
  if (m >= 8ul * g && bits > kExactLgBits) return m * g;
  return floor_log_pow(p, m, 2ul * g);
}

Rational c_const(u64 d, u64 d_M, u64 e_M, u64 h, const mpz_class& p) {
  require_prime(p);
  require_positive(d, "d");
  require_positive(d_M, "d_M");
  require_positive(e_M, "e_M");
  if (d % d_M) {
    throw Error(ErrorKind::DivisibilityViolation, "d_M = " + str(d_M) + " does not divide d = " + str(d));
  }
  if (d_M % e_M) {
    throw Error(ErrorKind::InvalidInput, "e_M = " + str(e_M) + " does not divide d_M = " + str(d_M));
  }
  const Rational v2 = p == 2 ? 1 : 0;
  Rational bracket = Rational(z(d_M)) + Rational(vp(p, z(e_M))) - Rational(1, z(e_M)) +
                     v2 * Rational(z(d_M - 1));
  Rational out = Rational(vp(p, z(d / d_M))) + Rational(z(h)) + Rational(z(d_M), 2) * bracket;
  out.canonicalize();
  return out;
}

u64 delta(u64 i) {
  require_positive(i, "i");
  return i <= 2 ? 0 : 2 * i - 5;
}

BoundReport bound_lubin_tate(const LubinTateInput& in, bool refined) {
  require_genus(in.g);
  in.base.validate();
  require_positive(in.mu, "mu");
  require_positive(in.d_Kk, "d_Kk");
  require_positive(in.d_K, "d_K");
  if (in.d_Kk % in.d_K || in.d_Kk % in.base.d) {
    throw Error(ErrorKind::InvalidInput, "d_K and d_k must both divide d_Kk");
  }
  if (in.d_Kk > in.d_K * in.base.d) {
    throw Error(ErrorKind::InvalidInput, "d_Kk cannot exceed d_K·d_k");
  }
  const unsigned g = in.g;
  const mpz_class& p = in.base.p;

  BoundReport r;
  r.theorem_id = refined ? TheoremId::MT_CM_refined : TheoremId::MT_CM;
  r.inputs = {{"g", str(g)},           {"p", str(p)},
              {"d_k", str(in.base.d)}, {"e_k", str(in.base.e)},
              {"f_k", str(in.base.f)}, {"mu", str(in.mu)},
              {"d_K", str(in.d_K)},    {"d_Kk", str(in.d_Kk)}};
  if (in.v) r.inputs.push_back({"v", str(*in.v)});

  const PhiH ph = phi_h(g);
  const mpz_class fact = factorial(2ul * g);
  const u64 d_rel = in.d_Kk / in.base.d;

  if (refined) {
    const mpz_class threshold = mpz_class(g) * fact * ph.product * z(in.mu) * z(d_rel) * z(in.base.f);
    r.intermediates.push_back({"valuation_threshold", str(threshold)});
    const std::string name = "(i) v_p((q_k^-1 Nr(pi))^mu - 1) > g(2g)!Phi(g)H(g) mu d_Kk/k f_k";
    if (in.v) {
      r.checks.push_back({name, *in.v > Rational(threshold) ? Verdict::Passed : Verdict::Failed,
                          str(*in.v) + " vs " + str(threshold)});
    } else {
      r.checks.push_back({name, Verdict::NotCheckable, "v not supplied"});
    }
    r.checks.push_back({"mu is minimal with (q_k^-1 Nr(pi))^mu = 1 mod p'", Verdict::NotCheckable, ""});
  } else {
    r.checks.push_back({"(i) q_k^-1 Nr(pi) is a root of unity of order mu", Verdict::NotCheckable, ""});
    r.checks.push_back({"(i) 0 < mu < p", z(in.mu) < p ? Verdict::Passed : Verdict::Failed,
                        "mu = " + str(in.mu) + ", p = " + str(p)});
  }
  r.checks.push_back(coprime_to_factorial(in.base.d, g));

  r.intermediates.push_back({"Phi(g)", str(ph.phi)});
  r.intermediates.push_back({"H(g)", str(ph.h)});
  r.intermediates.push_back({"d_Kk/k", str(d_rel)});
  const mpz_class gg = g;
  r.exponent_C = Rational(2 * gg * gg * fact * ph.product * z(in.mu) * z(in.d_Kk) + tail(g));
  finish(r, g, {p});
  return r;
}

BoundReport bound_good_reduction(const GoodReductionInput& in) {
  require_genus(in.g);
  require_prime(in.p);
  require_positive(in.mu, "mu");
  require_positive(in.d_k, "d_k");
  require_positive(in.f_k, "f_k");
  require_positive(in.d_Kk, "d_Kk");
  if (in.d_Kk % in.d_k) throw Error(ErrorKind::InvalidInput, "d_k must divide d_Kk");
  if (in.d_k % in.f_k) throw Error(ErrorKind::InvalidInput, "f_k must divide d_k");
  const unsigned g = in.g;

  BoundReport r;
  r.theorem_id = TheoremId::MT_CM_good;
  r.inputs = {{"g", str(g)},       {"p", str(in.p)},     {"mu", str(in.mu)},
              {"d_k", str(in.d_k)}, {"f_k", str(in.f_k)}, {"d_Kk", str(in.d_Kk)}};
  if (in.v) r.inputs.push_back({"v", str(*in.v)});

  const u64 d_rel = in.d_Kk / in.d_k;
  const Rational c_g = Rational(vp(in.p, z(in.d_Kk))) + factorial_block(g, in.p);
  const mpz_class m = factorial(2ul * g) * z(in.mu) * z(d_rel) * z(in.f_k);
  if (!m.fits_ulong_p()) throw Error(ErrorKind::CapExceeded, "L_g argument too large");
  const unsigned long l = lg(g, in.p, m.get_ui());
  const Rational delta_g = std::max(c_g, Rational(l));

  const std::string name = "(i)' v_p((q_k^-1 Nr(pi))^mu - 1) > L_g((2g)! mu d_Kk/k f_k)";
  if (in.v) {
    r.checks.push_back({name, *in.v > Rational(l) ? Verdict::Passed : Verdict::Failed,
                        str(*in.v) + " vs " + std::to_string(l)});
  } else {
    r.checks.push_back({name, Verdict::NotCheckable, "v not supplied"});
  }
  r.checks.push_back(coprime_to_factorial(in.d_k, g));
  r.checks.push_back({"A has good reduction over K with all endomorphisms defined over K",
                      Verdict::NotCheckable, ""});

  r.intermediates = {{"C_g(K,k)", str(c_g)},
                     {"L_g_argument", str(m)},
                     {"L_g", std::to_string(l)},
                     {"Delta_g(K,k)", str(delta_g)}};
  r.exponent_C = Rational(2 * g) * delta_g + Rational(tail(g));
  r.exponent_C.canonicalize();
  finish(r, g, {in.p});
  return r;
}

BoundReport bound_cyclotomic(unsigned g, const mpz_class& p, u64 d_K) {
  require_genus(g);
  require_prime(p);
  require_positive(d_K, "d_K");
  BoundReport r;
  r.theorem_id = TheoremId::MT_CM_cycl;
  r.inputs = {{"g", str(g)}, {"p", str(p)}, {"d_K", str(d_K)}};
  r.checks.push_back({"k = Q_p and pi = p, so mu = 1 and d_k = 1", Verdict::Passed, ""});

  const PhiH ph = phi_h(g);
  r.intermediates = {{"Phi(g)", str(ph.phi)}, {"H(g)", str(ph.h)}};
  const mpz_class gg = g;
  r.exponent_C = Rational(2 * gg * gg * factorial(2ul * g) * ph.product * z(d_K) + tail(g));
  finish(r, g, {p});
  return r;
}

BoundReport bound_kummer(unsigned g, const mpz_class& p, u64 d_K) {
  require_genus(g);
  require_prime(p);
  require_positive(d_K, "d_K");
  BoundReport r;
  r.theorem_id = TheoremId::MT_CM_KT;
  r.inputs = {{"g", str(g)}, {"p", str(p)}, {"d_K", str(d_K)}};

  const PhiH ph = phi_h(g);
  const unsigned long v2 = p == 2 ? 1 : 0;
  const auto vd = static_cast<unsigned long>(vp(p, z(d_K)));
  mpz_class p_pow, p_vd;
  mpz_pow_ui(p_pow.get_mpz_t(), p.get_mpz_t(), 1 + v2);
  mpz_pow_ui(p_vd.get_mpz_t(), p.get_mpz_t(), vd);
  r.intermediates = {{"Phi(g)", str(ph.phi)},
                     {"H(g)", str(ph.h)},
                     {"p^(1+v_p(2))", str(p_pow)},
                     {"p^(v_p(d_K))·d_K", str(mpz_class(p_vd * z(d_K)))}};
  const mpz_class gg = g;
  r.exponent_C = Rational(2 * gg * gg * factorial(2ul * g) * p_pow * ph.product * ph.product *
                              p_vd * z(d_K) +
                          tail(g));
  finish(r, g, {p});
  return r;
}

BoundReport bound_kummer_good(unsigned g, const mpz_class& p, u64 d_K) {
  require_genus(g);
  require_prime(p);
  require_positive(d_K, "d_K");
  BoundReport r;
  r.theorem_id = TheoremId::MT_CM_KT_good;
  r.inputs = {{"g", str(g)}, {"p", str(p)}, {"d_K", str(d_K)}};
  r.checks.push_back({"A has good reduction over K with all endomorphisms defined over K",
                      Verdict::NotCheckable, ""});

  const long vd = vp(p, z(d_K));
  const long nu = vd + 1 + (p == 2 ? 1 : 0);
  const Rational c_g = Rational(vd + nu) + factorial_block(g, p);
  mpz_class p_nu;
  mpz_pow_ui(p_nu.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(nu));
  const mpz_class m = factorial(2ul * g) * p_nu * z(d_K);
  if (!m.fits_ulong_p()) throw Error(ErrorKind::CapExceeded, "L_g argument too large");
  const unsigned long l = lg(g, p, m.get_ui());
  const Rational delta_g = std::max(c_g, Rational(l));

  r.intermediates = {{"nu", std::to_string(nu)},
                     {"C_g(K)", str(c_g)},
                     {"L_g_argument", str(m)},
                     {"L_g", std::to_string(l)},
                     {"Delta_g(K)", str(delta_g)}};
  r.exponent_C = Rational(2 * g) * delta_g + Rational(tail(g));
  r.exponent_C.canonicalize();
  finish(r, g, {p});
  return r;
}

BoundReport bound_ordinary(unsigned g, const mpz_class& p, u64 mu, u64 d_Kk_over_k, u64 f_k) {
  require_genus(g);
  require_prime(p);
  require_positive(mu, "mu");
  require_positive(d_Kk_over_k, "d_Kk/k");
  require_positive(f_k, "f_k");
  BoundReport r;
  r.theorem_id = TheoremId::val_ord;
  r.inputs = {{"g", str(g)}, {"p", str(p)}, {"mu", str(mu)}, {"d_Kk/k", str(d_Kk_over_k)}, {"f_k", str(f_k)}};
  r.checks.push_back({"q_k^-1 Nr(pi) is a root of unity of order mu", Verdict::NotCheckable, ""});
  r.checks.push_back({"0 < mu < p", z(mu) < p ? Verdict::Passed : Verdict::Failed,
                      "mu = " + str(mu) + ", p = " + str(p)});
  r.checks.push_back({"A has good ordinary reduction", Verdict::NotCheckable, ""});

  const u64 m = mu * d_Kk_over_k * f_k;
  const unsigned long l = lg(g, p, m);
  const mpz_class gg = g;
  r.exponent_C = Rational(2 * gg * l);

  // #A(Kk_pi)[p^inf] <= p^{4g^2 L} < p^{4g^3 (m + 1 + v_p(2))}
  const mpz_class fine = 4 * gg * gg * l;
  const mpz_class coarse = 4 * gg * gg * gg * (z(m) + 1 + (p == 2 ? 1 : 0));
  if (!(fine < coarse)) {
    throw Error(ErrorKind::InternalInconsistency, "ordinary bound exceeded its closed-form cap");
  }
  r.intermediates = {{"L_g_argument", str(m)},
                     {"L_g", std::to_string(l)},
                     {"coarse_cap_exponent", str(coarse)}};
  finish(r, g, {p});
  return r;
}

BoundReport bound_number_field(unsigned g, u64 d, u64 h, const std::vector<mpz_class>& ramified,
                               u64 prime_cap) {
  require_genus(g);
  require_positive(d, "d");
  require_positive(h, "h");
  for (const auto& q : ramified) require_prime(q);

  const mpz_class threshold = alg_floor(2, d * h, 2ul * g);
  if (threshold > z(prime_cap)) {
    throw Error(ErrorKind::CapExceeded,
                "prime threshold " + threshold.get_str() + " exceeds the cap " + str(prime_cap));
  }
  std::vector<mpz_class> primes;
  for (u64 q : primes_up_to(threshold.get_ui())) primes.emplace_back(static_cast<unsigned long>(q));
  primes.insert(primes.end(), ramified.begin(), ramified.end());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  BoundReport r;
  r.theorem_id = TheoremId::gsurf2;
  std::string ram;
  for (std::size_t i = 0; i < ramified.size(); ++i) ram += (i ? "," : "") + ramified[i].get_str();
  r.inputs = {{"g", str(g)}, {"d", str(d)}, {"h", str(h)}, {"ramified", ram}};
  r.checks.push_back({"A has complex multiplication and good reduction everywhere",
                      Verdict::NotCheckable, ""});

  const PhiH ph = phi_h(g);
  const mpz_class gg = g;
  r.exponent_C = Rational(2 * gg * gg * factorial(2ul * g) * ph.product * z(d) * z(h) + tail(g));
  r.intermediates = {{"Phi(g)", str(ph.phi)},
                     {"H(g)", str(ph.h)},
                     {"prime_threshold", str(threshold)},
                     {"prime_count", std::to_string(primes.size())},
                     {"N", "(product of the listed primes)^" + str(r.exponent_C)}};
  finish(r, g, std::move(primes));
  return r;
}

}  // namespace cmt
