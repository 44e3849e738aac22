#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigint.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "field_poly.hpp"
#include "intersective.hpp"
#include "localroots.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "rings.hpp"
#include "upoly.hpp"

namespace isect {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace exit_code {
inline constexpr int intersective = 0;
inline constexpr int not_intersective = 1;
inline constexpr int inconclusive = 2;
inline constexpr int usage = 64;
inline constexpr int unsupported = 65;
inline constexpr int internal = 70;
}  // namespace exit_code

/// Parsed command line.
struct InputSpec {
  std::string ring = "z";
  std::string q;
  std::optional<std::string> poly;
  std::optional<std::string> factors;
  std::uint64_t max_prime = 10000;
  std::optional<std::uint64_t> oracle_bound;
  std::uint64_t oracle_cap = default_oracle_cap;
  std::optional<unsigned> diagnostics;
  bool force_exhaustive = false;
  bool json = false;
};

namespace detail {

using json = nlohmann::ordered_json;

inline json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

template <class Ring>
json modulus_json(const Ring& R, const Modulus<Ring>& m) {
  json parts = json::array();
  for (const auto& pp : m.parts) parts.push_back({{"prime", R.to_string(pp.prime.value)}, {"exponent", pp.exponent}});
  return {{"value", R.to_string(m.value(R))}, {"factored", to_string(R, m)}, {"parts", parts}};
}

template <class Ring>
json delta_roots_json(const Ring& R, const std::vector<DeltaRoot<Ring>>& roots,
                      const std::optional<typename Ring::element_type>& glued) {
  json arr = json::array();
  for (const auto& d : roots) arr.push_back({{"modulus", to_string(R, d.component)}, {"root", R.to_string(d.root)}});
  return {{"components", arr}, {"glued", glued ? json(R.to_string(*glued)) : json(nullptr)}};
}

template <class Ring>
json certificate_json(const Ring& R, const Verdict<Ring>& v) {
  return std::visit(
      [&](const auto& d) -> json {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, TrivialRootInOK<Ring>>) {
          return {{"kind", "TrivialRootInOK"}, {"root", R.to_string(d.root)}};
        } else if constexpr (std::is_same_v<D, ExhaustiveFunctionField<Ring>>) {
          return {{"kind", "ExhaustiveFunctionField"},
                  {"bound", d.bound},
                  {"primes_per_degree", d.primes_per_degree},
                  {"primes_checked", d.primes_checked},
                  {"delta_roots", delta_roots_json(R, d.delta_roots, d.delta_root)}};
        } else if constexpr (std::is_same_v<D, FamilyCriterion<Ring>>) {
          return {{"kind", "FamilyCriterion"},
                  {"family", d.family},
                  {"details", d.details},
                  {"delta_roots", delta_roots_json(R, d.delta_roots, d.delta_root)}};
        } else {
          return nullptr;
        }
      },
      v.detail);
}

template <class Ring>
json witness_json(const Ring& R, const Verdict<Ring>& v) {
  if (auto* m = std::get_if<ModulusWithoutRoot<Ring>>(&v.detail))
    return {{"kind", "ModulusWithoutRoot"}, {"modulus", modulus_json(R, m->modulus)}};
  if (auto* g = std::get_if<GaloisObstruction<Ring>>(&v.detail))
    return {{"kind", "GaloisObstruction"},
            {"reason", galois_reason_name(g->reason)},
            {"modulus", g->witness ? modulus_json(R, *g->witness) : json(nullptr)}};
  return nullptr;
}

template <class Ring>
json profile_json(const Ring& R, const Verdict<Ring>& v) {
  if (!v.profile) return nullptr;
  const auto& p = *v.profile;
  json delta = json::array();
  for (const auto& pp : p.delta.parts) delta.push_back({{"prime", R.to_string(pp.prime.value)}, {"exponent", pp.exponent}});
  json bound;
  if constexpr (Ring::is_function_field) {
    bound = v.ff_bound ? json(*v.ff_bound) : json(nullptr);
  } else {
    auto [base, ex] = nf_bound(p);
    bound = {{"base", base.str()}, {"exponent", ex}};
  }
  json delta_prime = Ring::is_function_field ? big_json(p.delta_prime) : json(nullptr);
  return {{"delta", delta}, {"delta_prime", delta_prime}, {"D_prime", big_json(p.D_prime)}, {"bound", bound}};
}

inline json inconclusive_json(const InconclusiveReport& r) {
  json nf = nullptr;
  if (r.nf_base) nf = {{"base", r.nf_base->str()}, {"exponent", r.nf_exponent}};
  return {{"reason", r.reason}, {"scanned_bound", big_json(r.scanned_bound)}, {"nf_bound", nf}};
}

template <class Ring>
std::string describe(const Ring& R, const Verdict<Ring>& v) {
  std::ostringstream os;
  std::visit(
      [&](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, TrivialRootInOK<Ring>>) {
          os << "certificate: root " << R.to_string(d.root) << " in the ring itself\n";
        } else if constexpr (std::is_same_v<D, ExhaustiveFunctionField<Ring>>) {
          os << "certificate: ExhaustiveFunctionField, all " << d.primes_checked
             << " monic irreducibles of degree <= " << d.bound << " have a root (per degree:";
          for (auto c : d.primes_per_degree) os << ' ' << c;
          os << ")\n";
          for (const auto& c : d.delta_roots)
            os << "  root mod " << to_string(R, c.component) << ": " << R.to_string(c.root) << "\n";
        } else if constexpr (std::is_same_v<D, FamilyCriterion<Ring>>) {
          os << "certificate: FamilyCriterion (" << d.family << "): " << d.details << "\n";
          for (const auto& c : d.delta_roots)
            os << "  root mod " << to_string(R, c.component) << ": " << R.to_string(c.root) << "\n";
        } else if constexpr (std::is_same_v<D, ModulusWithoutRoot<Ring>>) {
          os << "witness: no root modulo " << to_string(R, d.modulus) << "\n";
        } else if constexpr (std::is_same_v<D, GaloisObstruction<Ring>>) {
          os << "witness: GaloisObstruction (" << galois_reason_name(d.reason) << ")";
          if (d.witness) os << ", no root modulo " << to_string(R, *d.witness);
          os << "\n";
        } else {
          os << "inconclusive: " << d.reason << "\n";
          if (d.nf_base) os << "  proven scan bound: " << d.nf_base->str() << "^" << d.nf_exponent << "\n";
        }
      },
      v.detail);
  if (v.profile) {
    os << "Delta = " << to_string(R, v.profile->delta);
    if (Ring::is_function_field) os << ", Delta' = " << v.profile->delta_prime.str();
    os << ", D' = " << v.profile->D_prime.str();
    if (v.ff_bound) os << ", prime-degree bound " << *v.ff_bound;
    os << "\n";
  }
  return os.str();
}

inline std::vector<std::string> split_factors(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ';'))
    if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
  return out;
}

template <class Ring>
int run_with_ring(const Ring& R, const InputSpec& in, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<UPoly<Ring>> f;
  if (in.poly) f = parse_poly(*in.poly, R);

  Verdict<Ring> v;
  if (in.factors) {
    std::vector<std::pair<UPoly<Ring>, unsigned>> claimed;
    for (const auto& text : split_factors(*in.factors)) {
      UPoly<Ring> g = parse_poly(text, R);
      bool merged = false;
      for (auto& [h, e] : claimed)
        if (h == g) {
          ++e;
          merged = true;
        }
      if (!merged) claimed.emplace_back(std::move(g), 1);
    }
    if (claimed.empty()) throw parse_error(errc::empty_input, 0, "empty factor list");
    if (!f) {
      UPoly<Ring> prod = UPoly<Ring>::constant(R, R.one());
      for (const auto& [g, e] : claimed)
        for (unsigned i = 0; i < e; ++i) prod *= g;
      f = prod;
    }
    DecideConfig cfg{in.max_prime, in.force_exhaustive};
    v = decide_factored(verify_factored_input(claimed, *f), field_profile_of(R), cfg);
  } else {
    DecideConfig cfg{in.max_prime, in.force_exhaustive};
    v = decide(*f, cfg);
  }

  json oracle = nullptr;
  if (in.oracle_bound) {
    auto first = oracle_scan(*f, *in.oracle_bound, in.oracle_cap);
    json verified = nullptr;
    if (auto w = v.witness_modulus(); w && R.residue_count(w->value(R)) <= in.oracle_cap)
      verified = !oracle_has_root_mod(*f, w->value(R), in.oracle_cap).root.has_value();
    oracle = {{"bound", *in.oracle_bound},
              {"first_rootless", first ? json(R.to_string(*first)) : json(nullptr)},
              {"witness_root_free", verified}};
  }

  json diag = nullptr;
  if (in.diagnostics) {
    std::uint64_t limit = *in.diagnostics;
    if constexpr (!Ring::is_function_field) {
      if (limit > 20) throw error(errc::cap_exceeded, "diagnostics bit length above 20");
      limit = std::uint64_t{1} << limit;
    }
    diag = json::array();
    for (const auto& row : prime_density_diagnostic(*f, limit))
      diag.push_back({{"bucket", row.bucket}, {"primes", row.primes}, {"with_root", row.with_root}, {"fraction", row.fraction()}});
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const VerdictKind kind = v.kind();

  if (in.json) {
    json input = {{"ring", R.name()}, {"polynomial", f->to_string()}};
    json doc = {{"input", input}, {"verdict", verdict_kind_name(kind)}};
    if (kind == VerdictKind::Intersective) doc["certificate"] = certificate_json(R, v);
    if (kind == VerdictKind::NotIntersective) doc["witness"] = witness_json(R, v);
    if (kind == VerdictKind::Inconclusive) doc["inconclusive"] = inconclusive_json(std::get<InconclusiveReport>(v.detail));
    doc["profile"] = profile_json(R, v);
    doc["timing"] = {{"seconds", secs}};
    if (in.oracle_bound) doc["oracle"] = oracle;
    if (in.diagnostics) doc["diagnostics"] = diag;
    out << doc.dump(2) << "\n";
  } else {
    out << "ring: " << R.name() << "\n";
    out << "f = " << f->to_string() << "\n";
    out << "verdict: " << verdict_kind_name(kind) << "\n";
    out << describe(R, v);
    if (in.oracle_bound) {
      out << "oracle: ";
      if (oracle["first_rootless"].is_null())
        out << "a root modulo every modulus up to " << *in.oracle_bound << "\n";
      else
        out << "no root modulo " << oracle["first_rootless"].get<std::string>() << "\n";
      if (!oracle["witness_root_free"].is_null())
        out << "oracle: witness " << (oracle["witness_root_free"].get<bool>() ? "confirmed root-free" : "HAS A ROOT") << "\n";
    }
    if (in.diagnostics) {
      out << (Ring::is_function_field ? "degree" : "bits") << "  primes  with-root  fraction\n";
      for (const auto& row : diag)
        out << std::setw(6) << row["bucket"].get<std::uint64_t>() << std::setw(8) << row["primes"].get<std::uint64_t>()
            << std::setw(11) << row["with_root"].get<std::uint64_t>() << "  " << std::fixed << std::setprecision(4)
            << row["fraction"].get<double>() << "\n";
    }
    out << std::fixed << std::setprecision(3) << "time: " << secs << " s\n";
  }
  switch (kind) {
    case VerdictKind::Intersective: return exit_code::intersective;
    case VerdictKind::NotIntersective: return exit_code::not_intersective;
    default: return exit_code::inconclusive;
  }
}

inline int code_for(errc c) {
  return c == errc::inseparable_factor || c == errc::unsupported ? exit_code::unsupported : exit_code::usage;
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline CliResult run_cli(const std::vector<std::string>& args) {
  InputSpec in;
  CLI::App app{"Decide whether a polynomial over Z or F_q[T] has a root modulo every modulus.", "isect"};
  std::string oracle_text, diag_text;
  app.add_option("--ring", in.ring, "coefficient ring: z or fq")->check(CLI::IsMember({"z", "fq", "integers"}));
  app.add_option("--q", in.q, "field size for --ring fq (a prime power)");
  app.add_option("--poly", in.poly, "polynomial in x, e.g. \"(x^2-T)*(x^2-(T+1))\"");
  app.add_option("--factors", in.factors, "claimed irreducible factors separated by ';'");
  app.add_option("--max-prime", in.max_prime, "prime scan limit over Z");
  app.add_option("--oracle", in.oracle_bound, "cross-check by brute force up to this modulus size (Z) or degree (F_q[T])");
  app.add_option("--oracle-cap", in.oracle_cap, "largest residue count the oracle enumerates");
  app.add_option("--diagnostics", in.diagnostics, "root density per prime degree (F_q[T]) or prime bit length (Z)");
  app.add_flag("--force-exhaustive", in.force_exhaustive, "skip the degree shortcuts and the family analysis");
  app.add_flag("--json", in.json, "emit JSON");

  CliResult res;
  std::ostringstream out, err;
  std::vector<std::string> argv_s{"isect"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_s) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    res.exit_code = app.exit(e, out, err) == 0 ? 0 : exit_code::usage;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  auto fail = [&](int code, const std::string& code_name, const std::string& msg) {
    res.exit_code = code;
    err << "error: " << msg << "\n";
    if (in.json) out << detail::json{{"error", {{"code", code_name}, {"message", msg}}}}.dump(2) << "\n";
  };
  try {
    if (!in.poly && !in.factors) throw error(errc::empty_input, "one of --poly or --factors is required");
    if (in.ring == "fq") {
      if (in.q.empty() || in.q.find_first_not_of("0123456789") != std::string::npos)
        throw error(errc::not_prime, "--ring fq needs --q <prime power>");
      FqTRing R(make_field(BigInt(in.q)));
      res.exit_code = detail::run_with_ring(R, in, out);
    } else {
      if (!in.q.empty()) throw error(errc::wrong_ring, "--q applies only to --ring fq");
      res.exit_code = detail::run_with_ring(IntegerRing{}, in, out);
    }
  } catch (const error& e) {
    fail(detail::code_for(e.code()), std::string(errc_name(e.code())), e.what());
  } catch (const std::exception& e) {
    fail(exit_code::internal, "Internal", e.what());
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace isect
