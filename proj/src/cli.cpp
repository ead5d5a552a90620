#include "cmt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "cmt/arith.hpp"
#include "cmt/bounds.hpp"
#include "cmt/constants.hpp"
#include "cmt/error.hpp"
#include "cmt/group_orders.hpp"
#include "cmt/tables.hpp"

namespace cmt::cli {
namespace {

using json = nlohmann::ordered_json;
using u64 = std::uint64_t;

// Values above this many bits are shown only in factored form.
constexpr double kPrintableBits = 1024;

json factored_json(const FactoredNat& v) {
  json arr = json::array();
  for (const auto& f : v.factors()) arr.push_back({f.prime.get_str(), f.exponent.get_str()});
  return arr;
}

json value_json(const FactoredNat& v) {
  if (v.log2() > kPrintableBits) return nullptr;
  return v.value().get_str();
}

std::string value_text(const FactoredNat& v) {
  if (v.log2() > kPrintableBits) return v.to_string();
  const std::string value = v.value().get_str();
  const std::string factored = v.to_string();
  return value == factored ? value : value + " = " + factored;
}

struct Range {
  u64 from;
  u64 to;
};

Range parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::InvalidInput, "bad range '" + text + "'");
    }
    return static_cast<u64>(std::stoull(s));
  };
  const auto dots = text.find("..");
  Range r{};
  if (dots == std::string::npos) {
    r.from = r.to = number(text);
  } else {
    r.from = number(text.substr(0, dots));
    r.to = number(text.substr(dots + 2));
  }
  if (r.from > r.to) throw Error(ErrorKind::InvalidInput, "empty range '" + text + "'");
  return r;
}

std::vector<mpz_class> parse_prime_list(const std::string& text) {
  std::vector<mpz_class> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::InvalidInput, "bad prime '" + item + "'");
    }
    out.emplace_back(item);
  }
  return out;
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::InvalidInput, "bad rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

mpz_class parse_big(const std::string& text, const char* what) {
  mpz_class v;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || v.set_str(text, 10) != 0) {
    throw Error(ErrorKind::InvalidInput, std::string("bad ") + what + " '" + text + "'");
  }
  return v;
}

json report_json(const BoundReport& r) {
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
  }
  json intermediates = json::object();
  for (const auto& [k, v] : r.intermediates) intermediates[k] = v;
  json primes = json::array();
  for (const auto& p : r.primes) primes.push_back(p.get_str());
  json cap = {{"p", r.primes.size() == 1 ? json(r.primes.front().get_str()) : json(nullptr)},
              {"primes", primes},
              {"exponent", r.cap_exponent.get_str()},
              {"factored", factored_json(r.torsion_cap)}};
  return {{"theorem_id", to_string(r.theorem_id)},
          {"inputs", inputs},
          {"checks", checks},
          {"intermediates", intermediates},
          {"exponent_C", r.exponent_C.get_str()},
          {"exponent_C_ceil", r.exponent_ceil.get_str()},
          {"conditional", r.conditional},
          {"cap", cap},
          {"notes", r.notes}};
}

void report_text(const BoundReport& r, std::ostream& out) {
  auto row = [&out](const std::string& label, const std::string& value) {
    out << std::left << std::setw(16) << label << value << '\n';
  };
  row("theorem", to_string(r.theorem_id));
  std::string inputs;
  for (const auto& [k, v] : r.inputs) inputs += (inputs.empty() ? "" : " ") + k + "=" + v;
  row("inputs", inputs);
  for (const auto& c : r.checks) {
    row("check", "[" + std::string(to_string(c.verdict)) + "] " + c.name +
                     (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
  for (const auto& [k, v] : r.intermediates) row(k, v);
  row("exponent C", r.exponent_C.get_str());
  if (r.exponent_C != Rational(r.exponent_ceil)) row("ceil(C)", r.exponent_ceil.get_str());
  if (r.primes.size() == 1) {
    row("torsion cap", r.primes.front().get_str() + "^" + r.cap_exponent.get_str());
  } else {
    std::string ps;
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < std::min(kShown, r.primes.size()); ++i) ps += (i ? "," : "") + r.primes[i].get_str();
    if (r.primes.size() > kShown) ps += ",...";
    row("torsion cap", "p^" + r.cap_exponent.get_str() + " for each p in {" + ps + "}");
  }
  if (r.conditional) row("status", "CONDITIONAL");
  if (!r.notes.empty()) row("notes", r.notes);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded:
    case ErrorKind::FactorizationTooHard:
    case ErrorKind::TooLargeForEnumeration:
      return kCapExceeded;
    default:
      return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact torsion-bound constants for CM abelian varieties", "torsionbound"};
  // -h stays free for the class-number option.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON document");
  app.fallthrough();

  // Each subcommand registers one action; it runs after parsing succeeds.
  std::function<int()> action;
  auto emit = [&](const json& doc) { out << doc.dump(2) << '\n'; };

  // phi / psi
  u64 phi_n = 0, psi_n = 0;
  auto* phi = app.add_subcommand("phi", "Φ(n): largest m with totient(m) | 2n");
  phi->add_option("n", phi_n)->required();
  phi->callback([&] {
    action = [&] {
      const FactoredNat v = phi_cap(phi_n);
      if (as_json) {
        emit({{"function", "phi"}, {"n", std::to_string(phi_n)}, {"value", value_json(v)}, {"factored", factored_json(v)}});
      } else {
        out << "Φ(" << phi_n << ") = " << value_text(v) << '\n';
      }
      return kOk;
    };
  });
  auto* psi = app.add_subcommand("psi", "Ψ(n): largest m with totient(m) <= 2n");
  psi->add_option("n", psi_n)->required();
  psi->callback([&] {
    action = [&] {
      const FactoredNat v = psi_cap(psi_n);
      if (as_json) {
        emit({{"function", "psi"}, {"n", std::to_string(psi_n)}, {"value", value_json(v)}, {"factored", factored_json(v)}});
      } else {
        out << "Ψ(" << psi_n << ") = " << value_text(v) << '\n';
      }
      return kOk;
    };
  });

  // hn
  u64 hn_n = 0;
  unsigned hn_oracle = 0;
  auto* hn = app.add_subcommand("hn", "H(n) from the exact product formula");
  hn->add_option("n", hn_n)->required();
  hn->add_option("--oracle", hn_oracle, "also take the gcd of #GSp_2n(Z/NZ) over 3 <= N <= nmax");
  hn->callback([&] {
    action = [&] {
      const FactoredNat v = h_exact(hn_n);
      std::optional<FactoredNat> oracle;
      if (hn_oracle) oracle = h_gcd_oracle(static_cast<unsigned>(hn_n), hn_oracle);
      if (as_json) {
        json doc = {{"function", "H"}, {"n", std::to_string(hn_n)}, {"value", value_json(v)}, {"factored", factored_json(v)}};
        if (oracle) {
          doc["oracle"] = {{"n_max", std::to_string(hn_oracle)},
                           {"factored", factored_json(*oracle)},
                           {"agrees", *oracle == v}};
        }
        emit(doc);
      } else {
        out << "H(" << hn_n << ") = " << value_text(v) << '\n';
        if (oracle) {
          out << "gcd over 3 <= N <= " << hn_oracle << " = " << oracle->to_string()
              << (*oracle == v ? "  (agrees)" : "  (DISAGREES)") << '\n';
        }
      }
      return (oracle && !(*oracle == v)) ? int{kFixtureMismatch} : int{kOk};
    };
  });

  // gn
  unsigned gn_n = 0;
  bool gn_p3 = false;
  auto* gn = app.add_subcommand("gn", "G(n) = #GL_2n(Z/mZ), m = 3 (or 4 with --p3)");
  gn->add_option("n", gn_n)->required();
  gn->add_flag("--p3", gn_p3, "the p = 3 variant (m = 4)");
  gn->callback([&] {
    action = [&] {
      const FactoredNat v = g_order_bound(gn_n, gn_p3);
      if (as_json) {
        emit({{"function", "G"}, {"n", std::to_string(gn_n)}, {"m", gn_p3 ? "4" : "3"}, {"value", value_json(v)}, {"factored", factored_json(v)}});
      } else {
        out << "G(" << gn_n << ") = #GL_" << 2 * gn_n << "(Z/" << (gn_p3 ? 4 : 3) << "Z) = " << value_text(v) << '\n';
      }
      return kOk;
    };
  });

  // order
  std::string order_family;
  unsigned order_n = 0;
  std::string order_mod;
  bool order_brute = false;
  auto* order = app.add_subcommand("order", "order of GL_n or GSp_2n over Z/NZ");
  order->add_option("family", order_family)->required()->check(CLI::IsMember({"gl", "gsp", "sp"}));
  order->add_option("--n", order_n)->required();
  order->add_option("--mod", order_mod)->required();
  order->add_flag("--brute", order_brute, "cross-check by enumeration");
  order->callback([&] {
    action = [&] {
      const mpz_class modulus = parse_big(order_mod, "modulus");
      const GroupFamily family = order_family == "gl" ? GroupFamily::GL
                                 : order_family == "gsp" ? GroupFamily::GSp
                                                         : GroupFamily::Sp;
      const FactoredNat v = group_order({family, order_n, modulus});
      std::optional<mpz_class> brute;
      if (order_brute) {
        if (!modulus.fits_ulong_p()) throw Error(ErrorKind::TooLargeForEnumeration, "modulus too large");
        if (family == GroupFamily::GL) brute = gl_order_bruteforce(order_n, modulus.get_ui());
        else if (family == GroupFamily::GSp) brute = gsp_order_bruteforce(order_n, modulus.get_ui());
        else throw Error(ErrorKind::InvalidInput, "no enumeration oracle for Sp");
      }
      const bool agrees = !brute || *brute == v.value();
      const std::string label = order_family == "gl" ? "GL_" + std::to_string(order_n)
                                                      : (order_family == "gsp" ? "GSp_" : "Sp_") + std::to_string(2 * order_n);
      if (as_json) {
        json doc = {{"group", label}, {"modulus", modulus.get_str()}, {"value", value_json(v)}, {"factored", factored_json(v)}};
        if (brute) doc["brute_force"] = {{"value", brute->get_str()}, {"agrees", agrees}};
        emit(doc);
      } else {
        out << "#" << label << "(Z/" << modulus.get_str() << "Z) = " << value_text(v) << '\n';
        if (brute) out << "enumeration: " << brute->get_str() << (agrees ? "  (agrees)" : "  (DISAGREES)") << '\n';
      }
      return agrees ? int{kOk} : int{kFixtureMismatch};
    };
  });

  // lg
  unsigned lg_g = 0;
  std::string lg_p;
  unsigned long lg_m = 0;
  auto* lgc = app.add_subcommand("lg", "L_g(m) = floor(log_p (1 + p^{m/2})^{2g})");
  lgc->add_option("--g", lg_g)->required();
  lgc->add_option("--p", lg_p)->required();
  lgc->add_option("--m", lg_m)->required();
  lgc->callback([&] {
    action = [&] {
      const mpz_class p = parse_big(lg_p, "prime");
      const unsigned long v = lg(lg_g, p, lg_m);
      if (as_json) {
        emit({{"function", "L_g"}, {"g", std::to_string(lg_g)}, {"p", p.get_str()}, {"m", std::to_string(lg_m)}, {"value", std::to_string(v)}});
      } else {
        out << "L_" << lg_g << "(" << lg_m << ") = " << v << "  (p = " << p.get_str() << ")\n";
      }
      return kOk;
    };
  });

  // cconst
  u64 cc_d = 0, cc_dm = 0, cc_em = 0, cc_h = 0;
  std::string cc_p;
  auto* cconst = app.add_subcommand("cconst", "C(d, M, h) for a p-adic field M of degree d_M, ramification e_M");
  cconst->add_option("--d", cc_d)->required();
  cconst->add_option("--dm", cc_dm)->required();
  cconst->add_option("--em", cc_em)->required();
  cconst->add_option("--h", cc_h)->required();
  cconst->add_option("--p", cc_p)->required();
  cconst->callback([&] {
    action = [&] {
      const mpz_class p = parse_big(cc_p, "prime");
      const Rational v = c_const(cc_d, cc_dm, cc_em, cc_h, p);
      if (as_json) {
        emit({{"function", "C"}, {"d", std::to_string(cc_d)}, {"d_M", std::to_string(cc_dm)}, {"e_M", std::to_string(cc_em)},
              {"h", std::to_string(cc_h)}, {"p", p.get_str()}, {"value", v.get_str()}});
      } else {
        out << "C(" << cc_d << ", M, " << cc_h << ") = " << v.get_str() << "  (d_M = " << cc_dm
            << ", e_M = " << cc_em << ", p = " << p.get_str() << ")\n";
      }
      return kOk;
    };
  });

  // bound
  auto* bound = app.add_subcommand("bound", "theorem-level torsion bounds");
  bound->require_subcommand(1);
  struct BoundArgs {
    unsigned g = 1;
    std::string p;
    u64 mu = 1, d_k = 1, e_k = 0, f_k = 1, d_Kk = 1, d_K = 1, d_rel = 1, d = 1, h = 1;
    u64 prime_cap = kDefaultNumberFieldPrimeCap;
    std::string v, ramified;
    bool refined = false;
  } ba;
  auto finish_bound = [&](std::function<BoundReport()> compute) {
    return [&, compute] {
      action = [&, compute] {
        const BoundReport r = compute();
        if (as_json) emit(report_json(r));
        else report_text(r, out);
        return kOk;
      };
    };
  };
  auto prime_arg = [&] { return parse_big(ba.p, "prime"); };

  auto* lt = bound->add_subcommand("lubin-tate", "Lubin-Tate tower bound");
  lt->add_option("--g", ba.g)->required();
  lt->add_option("--p", ba.p)->required();
  lt->add_option("--mu", ba.mu);
  lt->add_option("--dk", ba.d_k, "degree of k over Q_p");
  lt->add_option("--ek", ba.e_k, "ramification index of k (default d_k/f_k)");
  lt->add_option("--fk", ba.f_k, "residue degree of k");
  lt->add_option("--dKk", ba.d_Kk, "degree of the composite Kk");
  lt->add_option("--dK", ba.d_K, "degree of K");
  lt->add_option("--v", ba.v, "valuation datum v (rational), refined route");
  lt->add_flag("--refined", ba.refined, "check the valuation condition instead of mu < p");
  lt->callback(finish_bound([&] {
    LubinTateInput in;
    in.g = ba.g;
    in.base.p = prime_arg();
    in.base.d = ba.d_k;
    in.base.f = ba.f_k;
    in.base.e = ba.e_k ? ba.e_k : (ba.f_k && ba.d_k % ba.f_k == 0 ? ba.d_k / ba.f_k : 0);
    in.mu = ba.mu;
    in.v = parse_rational(ba.v);
    in.d_Kk = ba.d_Kk;
    in.d_K = ba.d_K;
    return bound_lubin_tate(in, ba.refined);
  }));

  auto* good = bound->add_subcommand("good", "good-reduction refinement of the Lubin-Tate bound");
  good->add_option("--g", ba.g)->required();
  good->add_option("--p", ba.p)->required();
  good->add_option("--mu", ba.mu);
  good->add_option("--dk", ba.d_k);
  good->add_option("--fk", ba.f_k);
  good->add_option("--dKk", ba.d_Kk);
  good->add_option("--v", ba.v);
  good->callback(finish_bound([&] {
    GoodReductionInput in;
    in.g = ba.g;
    in.p = prime_arg();
    in.mu = ba.mu;
    in.d_k = ba.d_k;
    in.f_k = ba.f_k;
    in.d_Kk = ba.d_Kk;
    in.v = parse_rational(ba.v);
    return bound_good_reduction(in);
  }));

  for (const char* name : {"cyclotomic", "kummer", "kummer-good"}) {
    auto* sub = bound->add_subcommand(name, std::string(name) + " bound");
    sub->add_option("--g", ba.g)->required();
    sub->add_option("--p", ba.p)->required();
    sub->add_option("--dK,--dk", ba.d_K, "degree of K over Q_p");
    const std::string which = name;
    sub->callback(finish_bound([&, which] {
      if (which == "cyclotomic") return bound_cyclotomic(ba.g, prime_arg(), ba.d_K);
      if (which == "kummer") return bound_kummer(ba.g, prime_arg(), ba.d_K);
      return bound_kummer_good(ba.g, prime_arg(), ba.d_K);
    }));
  }

  auto* ord = bound->add_subcommand("ordinary", "good ordinary reduction bound");
  ord->add_option("--g", ba.g)->required();
  ord->add_option("--p", ba.p)->required();
  ord->add_option("--mu", ba.mu);
  ord->add_option("--dKk-over-k,--drel", ba.d_rel);
  ord->add_option("--fk", ba.f_k);
  ord->callback(finish_bound([&] { return bound_ordinary(ba.g, prime_arg(), ba.mu, ba.d_rel, ba.f_k); }));

  auto* nf = bound->add_subcommand("number-field", "torsion over K(mu_inf) for a number field K");
  nf->add_option("--g", ba.g)->required();
  nf->add_option("--d", ba.d)->required();
  nf->add_option("--h", ba.h)->required();
  nf->add_option("--ramified", ba.ramified, "comma-separated ramified primes");
  nf->add_option("--prime-cap", ba.prime_cap, "largest admissible prime threshold");
  nf->callback(finish_bound([&] {
    return bound_number_field(ba.g, ba.d, ba.h, parse_prime_list(ba.ramified), ba.prime_cap);
  }));

  // check
  auto* check = app.add_subcommand("check", "inequality sweeps");
  check->require_subcommand(1);
  std::string check_range;
  std::string rosser_variant = "3";
  auto* phib = check->add_subcommand("phi-bounds", "bounds on Φ(n) over a range of n");
  phib->add_option("range", check_range, "n or a..b")->required();
  phib->callback([&] {
    action = [&] {
      const Range r = parse_range(check_range);
      json failures = json::array();
      std::ostringstream text;
      u64 checked = 0;
      for (u64 n = std::max<u64>(r.from, 1); n <= r.to; ++n) {
        const PhiBoundsReport rep = check_phi_bounds(n);
        ++checked;
        if (rep.all_hold()) continue;
        failures.push_back({{"n", std::to_string(n)}, {"phi", std::to_string(rep.phi)},
                            {"lower", rep.lower_bound_holds}, {"cube_root", rep.cube_root_holds},
                            {"product", rep.product_bound_holds}, {"prime_case", rep.prime_case_holds}});
        text << "  n=" << n << " Φ=" << rep.phi << " lower=" << rep.lower_bound_holds
             << " cube_root=" << rep.cube_root_holds << " product=" << rep.product_bound_holds
             << " prime_case=" << rep.prime_case_holds << '\n';
      }
      if (as_json) {
        emit({{"check", "phi-bounds"}, {"from", std::to_string(r.from)}, {"to", std::to_string(r.to)},
              {"checked", checked}, {"failures", failures}});
      } else {
        out << "phi-bounds n=" << r.from << ".." << r.to << ": " << checked << " checked, "
            << failures.size() << " failures\n" << text.str();
      }
      return failures.empty() ? int{kOk} : int{kFixtureMismatch};
    };
  });
  auto* hb = check->add_subcommand("h-bound", "H(n) < 2(9n)^{2n} over a range of n");
  hb->add_option("range", check_range)->required();
  hb->callback([&] {
    action = [&] {
      const Range r = parse_range(check_range);
      json failures = json::array();
      u64 checked = 0;
      for (u64 n = std::max<u64>(r.from, 1); n <= r.to; ++n, ++checked) {
        if (!check_h_bound(n)) failures.push_back(std::to_string(n));
      }
      if (as_json) {
        emit({{"check", "h-bound"}, {"from", std::to_string(r.from)}, {"to", std::to_string(r.to)},
              {"checked", checked}, {"failures", failures}});
      } else {
        out << "h-bound n=" << r.from << ".." << r.to << ": " << checked << " checked, " << failures.size()
            << " failures\n";
        for (const auto& f : failures) out << "  n=" << f.get<std::string>() << '\n';
      }
      return failures.empty() ? int{kOk} : int{kFixtureMismatch};
    };
  });
  auto* rs = check->add_subcommand("rosser", "totient lower bound over a range of m");
  rs->add_option("range", check_range)->required();
  rs->add_option("--variant", rosser_variant, "3 (3/log log m) or 5/2 (5/(2 log log m))")
      ->check(CLI::IsMember({"3", "5/2"}));
  rs->callback([&] {
    action = [&] {
      const Range r = parse_range(check_range);
      const RosserVariant variant =
          rosser_variant == "3" ? RosserVariant::ThreeOverLogLog : RosserVariant::FiveHalvesOverLogLog;
      std::map<std::string, u64> counts;
      json exceptions = json::array();
      for (u64 m = std::max<u64>(r.from, 3); m <= r.to; ++m) {
        const RosserResult res = rosser_schoenfeld_check(mpz_class(static_cast<unsigned long>(m)), variant);
        ++counts[to_string(res.verdict)];
        if (res.verdict == TriVerdict::Fails || res.verdict == TriVerdict::Undecided) {
          exceptions.push_back({{"m", std::to_string(m)}, {"verdict", to_string(res.verdict)},
                                {"totient", res.totient.get_str()}, {"rhs", res.rhs}});
        }
      }
      if (as_json) {
        json c = json::object();
        for (const auto& [k, v] : counts) c[k] = v;
        emit({{"check", "rosser"}, {"variant", rosser_variant}, {"from", std::to_string(r.from)},
              {"to", std::to_string(r.to)}, {"counts", c}, {"exceptions", exceptions}});
      } else {
        out << "rosser (" << (rosser_variant == "3" ? "3" : "5/2") << " over log log m) m=" << r.from << ".." << r.to << ":";
        for (const auto& [k, v] : counts) out << ' ' << k << '=' << v;
        out << '\n';
        for (const auto& e : exceptions) {
          out << "  m=" << e["m"].get<std::string>() << " " << e["verdict"].get<std::string>()
              << ": totient " << e["totient"].get<std::string>() << " vs " << e["rhs"].get<std::string>() << '\n';
        }
      }
      return kOk;
    };
  });

  // tables
  auto* tables = app.add_subcommand("tables", "embedded tables of Φ, H and G");
  tables->require_subcommand(1);
  std::string which_table;
  std::string fixture_dir;
  auto* tverify = tables->add_subcommand("verify", "recompute every row and compare");
  tverify->add_option("table", which_table, "phi, h or g (default: all)");
  tverify->add_option("--fixture-dir", fixture_dir, "read phi.txt, h.txt, g.txt from here instead");
  tverify->callback([&] {
    action = [&] {
      std::vector<TableId> ids = {TableId::PHI, TableId::H, TableId::G};
      if (!which_table.empty()) ids = {parse_table_id(which_table)};
      std::vector<VerificationReport> reports;
      for (TableId id : ids) {
        if (fixture_dir.empty()) {
          reports.push_back(verify(id));
        } else {
          std::string file = to_string(id);
          std::transform(file.begin(), file.end(), file.begin(), [](unsigned char c) { return std::tolower(c); });
          reports.push_back(verify(load_fixture(id, std::filesystem::path(fixture_dir) / (file + ".txt"))));
        }
      }
      bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
      if (as_json) {
        json arr = json::array();
        for (const auto& r : reports) {
          json mism = json::array();
          for (const auto& m : r.mismatches) {
            mism.push_back({{"n", std::to_string(m.n)}, {"expected", factored_json(m.expected)},
                            {"computed", factored_json(m.computed)}});
          }
          arr.push_back({{"table", to_string(r.id)}, {"rows", r.rows}, {"matched", r.matched()}, {"mismatches", mism}});
        }
        emit({{"tables", arr}, {"ok", ok}});
      } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
          out << (i ? "  " : "") << to_string(reports[i].id) << ' ' << reports[i].matched() << '/' << reports[i].rows;
        }
        out << '\n';
        for (const auto& r : reports) {
          for (const auto& m : r.mismatches) {
            out << "  " << to_string(r.id) << " n=" << m.n << ": table " << m.expected.to_string()
                << ", computed " << m.computed.to_string() << '\n';
          }
        }
      }
      return ok ? int{kOk} : int{kFixtureMismatch};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }

  if (!action) {
    err << app.help("", CLI::AppFormatMode::All);
    return kInvalidInput;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace cmt::cli
