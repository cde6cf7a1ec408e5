#include "porc/report.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "porc/aut_group.hpp"
#include "porc/diophantine.hpp"
#include "porc/errors.hpp"
#include "porc/finite_field.hpp"
#include "porc/lie_engine.hpp"
#include "porc/orbit_counter.hpp"

namespace porc {

using ojson = nlohmann::ordered_json;

void RunConfig::validate() const {
  if (min < 5) throw std::invalid_argument("--min must be at least 5");
  if (max < min) throw std::invalid_argument("--max must not be below --min");
  if (brute_max > kBruteHardCap) {
    throw std::invalid_argument("--brute-max must not exceed " + std::to_string(kBruteHardCap));
  }
  if (jobs == 0) throw std::invalid_argument("--jobs must be positive");
}

PrimeReport make_report(std::uint64_t p, std::uint64_t brute_max) {
  const auto start = std::chrono::steady_clock::now();
  const PrimeField F(p);
  PrimeReport r;
  r.p = p;
  r.class12 = p % 12;
  if (r.class12 == 1) {
    const NormFormCriterion t4 = norm_form_criterion(p);
    r.a = t4.rep.a;
    r.b = t4.rep.b;
    r.a_mod3 = t4.a_mod3;
    r.quartic360_root = t4.quartic360;
  } else {
    r.quartic360_root = quartic360_has_root(F);
  }
  const OcticEquivalence octic = octic_equivalence(F);
  if (!octic.witness_roundtrip_ok) {
    throw InvariantViolation("octic root does not map back to a point at p=" + std::to_string(p));
  }
  r.octic_root = octic.octic;
  r.ec_naive = ec_count_naive(F);
  if (p % 4 == 1) r.ec_formula = ec_count_formula(p);

  const DpResult dp = compute_dp(F, brute_max);
  r.v_p = dp.vp.count;
  r.s_size = dp.s_size;
  r.group_order = dp.group_order;
  r.dp_formula = dp.closed_form;
  r.dp_burnside = dp.burnside;
  if (dp.brute) r.dp_brute = static_cast<std::int64_t>(*dp.brute);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::string> row_violations(const PrimeReport& r) {
  std::vector<std::string> v;
  if (r.dp_formula != r.dp_burnside) v.push_back("dp_formula != dp_burnside");
  if (r.dp_brute != -1 && static_cast<std::uint64_t>(r.dp_brute) != r.dp_formula) {
    v.push_back("dp_brute != dp_formula");
  }
  if (r.octic_root != (r.v_p > 0)) v.push_back("octic_root disagrees with v_p > 0");
  if (r.class12 == 1 && r.v_p != 0 && r.v_p != 8) v.push_back("v_p not in {0, 8}");
  if (r.a_mod3 && (*r.a_mod3 == 1) != r.quartic360_root) v.push_back("a mod 3 criterion disagrees with quartic360_root");
  if (r.ec_formula && *r.ec_formula != r.ec_naive) v.push_back("ec_formula != ec_naive");
  if (r.p % 4 == 3 && r.ec_naive != r.p) v.push_back("ec_naive != p for p = 3 mod 4");
  return v;
}

namespace {

template <typename T>
std::string opt_str(const std::optional<T>& x) {
  return x ? std::to_string(*x) : std::string();
}

std::string ms_str(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

template <typename T>
ojson opt_json(const std::optional<T>& x) {
  return x ? ojson(*x) : ojson(nullptr);
}

}  // namespace

std::string csv_header(bool timing) {
  std::string h =
      "p,class12,a,b,a_mod3,quartic360_root,octic_root,v_p,ec_naive,ec_formula,s_size,group_order,"
      "dp_formula,dp_burnside,dp_brute";
  if (timing) h += ",elapsed_ms";
  return h;
}

std::string to_csv(const PrimeReport& r, bool timing) {
  std::ostringstream os;
  os << r.p << ',' << r.class12 << ',' << opt_str(r.a) << ',' << opt_str(r.b) << ',' << opt_str(r.a_mod3) << ','
     << (r.quartic360_root ? 1 : 0) << ',' << (r.octic_root ? 1 : 0) << ',' << r.v_p << ',' << r.ec_naive << ','
     << opt_str(r.ec_formula) << ',' << r.s_size << ',' << r.group_order << ',' << r.dp_formula << ','
     << r.dp_burnside << ',' << r.dp_brute;
  if (timing) os << ',' << ms_str(r.elapsed_ms);
  return os.str();
}

std::string to_json(const PrimeReport& r, bool timing) {
  ojson j;
  j["p"] = r.p;
  j["class12"] = r.class12;
  j["a"] = opt_json(r.a);
  j["b"] = opt_json(r.b);
  j["a_mod3"] = opt_json(r.a_mod3);
  j["quartic360_root"] = r.quartic360_root ? 1 : 0;
  j["octic_root"] = r.octic_root ? 1 : 0;
  j["v_p"] = r.v_p;
  j["ec_naive"] = r.ec_naive;
  j["ec_formula"] = opt_json(r.ec_formula);
  j["s_size"] = r.s_size;
  j["group_order"] = r.group_order;
  j["dp_formula"] = r.dp_formula;
  j["dp_burnside"] = r.dp_burnside;
  j["dp_brute"] = r.dp_brute;
  if (timing) j["elapsed_ms"] = std::stod(ms_str(r.elapsed_ms));
  return j.dump();
}

// ---------------------------------------------------------------------------
// sweep

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  cfg.validate();
  const std::vector<std::uint64_t> primes = primes_in_range(cfg.min, cfg.max);
  const std::size_t n = primes.size();

  struct Slot {
    std::optional<PrimeReport> report;
    std::string error;
    bool done = false;
  };
  std::vector<Slot> slots(n);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      Slot s;
      try {
        s.report = make_report(primes[i], cfg.brute_max);
      } catch (const std::exception& e) {
        s.error = e.what();
      }
      s.done = true;
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(s);
      }
      ready.notify_all();
    }
  };

  std::vector<std::jthread> workers;
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(n, 1)));
  if (threads > 1) {
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(work);
  } else {
    work();
  }

  int code = kExitOk;
  const bool json = cfg.format == OutputFormat::kJson;
  out << (json ? "[" : csv_header(cfg.timing)) << '\n';
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    Slot s;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].done; });
      s = std::move(slots[i]);
    }
    if (!s.report) {
      diag << "p=" << primes[i] << ": " << s.error << '\n';
      code = kExitInvariant;
      continue;
    }
    for (const auto& msg : row_violations(*s.report)) {
      diag << "p=" << primes[i] << ": " << msg << " (" << to_csv(*s.report, false) << ")\n";
      code = kExitInvariant;
    }
    if (json) {
      out << (first ? "" : ",\n") << to_json(*s.report, cfg.timing);
    } else {
      out << to_csv(*s.report, cfg.timing) << '\n';
    }
    first = false;
  }
  if (json) out << (first ? "" : "\n") << "]\n";
  out.flush();
  return code;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(std::uint64_t p, std::ostream& out) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 5");
  const PrimeField F(p);
  std::string first_failure;
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    if (!ok && first_failure.empty()) first_failure = name;
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  };

  out << "p=" << p << " (p mod 12 = " << p % 12 << ")\n";

  guarded("L_p structure", [&] {
    const LieAlgebra L = build_Lp(F);
    const bool ok = L.dim() == 9 && L.derived_dim() == 3 && L.nilpotency_class() == 2u && L.jacobi_check();
    check("L_p structure", ok,
          "dim=" + std::to_string(L.dim()) + " derived=" + std::to_string(L.derived_dim()) +
              " class=" + std::to_string(L.nilpotency_class().value_or(0)));
  });

  guarded("covering algebra", [&] {
    const CoveringAlgebra C = build_covering(F);
    const bool ok = C.M.dim() == 23 && C.nucleus_basis.size() == 2 && C.M.jacobi_check();
    check("covering algebra", ok,
          "dim=" + std::to_string(C.M.dim()) + " nucleus=" + std::to_string(C.nucleus_basis.size()) +
              " tails=" + std::to_string(C.tails.size()) + " residuals=" + std::to_string(C.residuals.size()));
  });

  const VpCount vp = count_vp(F);
  guarded("octic equivalence", [&] {
    const OcticEquivalence l = octic_equivalence(F);
    check("octic equivalence", l.equivalent() && l.witness_roundtrip_ok,
          "V_p=" + std::to_string(vp.count) + " octic_root=" + std::to_string(l.octic) +
              " roundtrips=" + std::to_string(l.roots_checked));
  });

  if (p % 12 == 1) {
    guarded("norm form criterion", [&] {
      const NormFormCriterion t = norm_form_criterion(p);
      check("norm form criterion", t.consistent,
            "p=a^2-12b^2 with a=" + std::to_string(t.rep.a) + " b=" + std::to_string(t.rep.b) +
                ", a mod 3=" + std::to_string(t.a_mod3) + ", z^4+360z^2-48 root=" + std::to_string(t.quartic360));
    });
    check("V_p in {0,8}", vp.count == 0 || vp.count == 8, "V_p=" + std::to_string(vp.count));
  }

  guarded("point count", [&] {
    const std::uint64_t naive = ec_count_naive(F);
    if (p % 4 == 1) {
      const GaussRep g = gauss_representation(p);
      const std::uint64_t formula = ec_count_formula(p);
      check("point count", naive == formula,
            "naive=" + std::to_string(naive) + " formula=p-2a=" + std::to_string(formula) + " (a=" +
                std::to_string(g.a) + ", b=" + std::to_string(g.b) + ")");
    } else {
      check("point count", naive == p, "naive=" + std::to_string(naive) + " expected p");
    }
  });

  guarded("twisted automorphisms", [&] {
    const auto sols = solve_twisted(F);
    std::size_t expected = 0;
    if (p % 12 == 11) expected = 4;
    if (p % 12 == 1 && vp.positive()) expected = 32;
    const LieAlgebra L = build_Lp(F);
    bool all = sols.size() == expected;
    for (const auto& q : sols) {
      all = all && defining_equations_hold(F, q) && identity_checks(F, q).ok() && verify_automorphism(L, twisted_aut(F, q)) &&
            charpoly_checks(F, q).ok();
    }
    check("twisted automorphisms", all,
          std::to_string(sols.size()) + " parameter sets (expected " + std::to_string(expected) +
              "), equations, identities, automorphism and eigen census checked");
  });

  guarded("action group", [&] {
    const ActionGroup G = ActionGroup::for_prime(F);
    std::size_t expected = 4;
    if (p % 12 == 7) expected = 2;
    if (p % 12 == 11) expected = 6;
    if (p % 12 == 1 && vp.positive()) expected = 36;
    check("action group", G.S().size() == expected && G.torus_closed(),
          "|S|=" + std::to_string(G.S().size()) + " |G|=" + std::to_string(G.order()) +
              " torus_closed=" + std::to_string(G.torus_closed()));
  });

  guarded("descendant count", [&] {
    const DpResult d = compute_dp(F, 61);
    check("descendant count", d.consistent(),
          "closed_form=" + std::to_string(d.closed_form) + " burnside=" + std::to_string(d.burnside) +
              " brute=" + (d.brute ? std::to_string(*d.brute) : std::string("skipped")));
  });

  if (p <= 7) {
    guarded("automorphism oracle", [&] {
      const BruteForceH h = brute_force_H(F, 7);
      const std::uint64_t expected = (p - 1) * (p - 1) * special_matrices(F).size();
      check("automorphism oracle", h.count == expected && h.all_scalar,
            "|H|=" + std::to_string(h.count) + " expected " + std::to_string(expected) +
                " all B scalar multiples of A=" + std::to_string(h.all_scalar));
    });
  }

  if (first_failure.empty()) {
    out << "all checks passed\n";
    return kExitOk;
  }
  out << "first failing check: " << first_failure << '\n';
  return kExitInvariant;
}

// ---------------------------------------------------------------------------
// scans and covering

int run_density(std::uint64_t max, OutputFormat format, std::ostream& out) {
  const DensityScan s = density_scan(max);
  if (format == OutputFormat::kJson) {
    ojson j;
    j["max"] = s.max;
    j["n_primes"] = s.n_primes;
    j["n_1mod12"] = s.n_1mod12;
    j["n_quartic"] = s.n_quartic;
    j["n_both"] = s.n_both;
    j["frac_quartic"] = s.frac_quartic;
    j["frac_both"] = s.frac_both;
    j["frac_both_overall"] = s.frac_both_overall;
    out << j.dump(2) << '\n';
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "primes 5..%llu: %llu\np = 1 mod 12: %llu\nquartic solvable: %llu (%.4f)\nV_p > 0: %llu (%.4f)\n"
                  "V_p > 0 among all primes: %.4f\n",
                  static_cast<unsigned long long>(s.max), static_cast<unsigned long long>(s.n_primes),
                  static_cast<unsigned long long>(s.n_1mod12), static_cast<unsigned long long>(s.n_quartic),
                  s.frac_quartic, static_cast<unsigned long long>(s.n_both), s.frac_both, s.frac_both_overall);
    out << buf;
  }
  return kExitOk;
}

int run_subcong(std::uint64_t d, std::uint64_t max, OutputFormat format, std::ostream& out) {
  const auto classes = subcongruence_scan(d, max);
  bool all = true;
  for (const auto& c : classes) all = all && c.has_both();
  if (format == OutputFormat::kJson) {
    ojson j;
    j["d"] = d;
    j["modulus"] = 12 * d;
    j["max"] = max;
    j["classes"] = ojson::array();
    for (const auto& c : classes) {
      ojson e;
      e["c"] = c.c;
      e["witness_vp_positive"] = opt_json(c.witness_vp_positive);
      e["witness_vp_zero"] = opt_json(c.witness_vp_zero);
      j["classes"].push_back(e);
    }
    j["all_classes_mixed"] = all;
    out << j.dump(2) << '\n';
  } else {
    out << "classes c mod " << 12 * d << " with c = 1 mod 12, primes up to " << max << '\n';
    for (const auto& c : classes) {
      out << "c=" << c.c << " V_p>0 at " << (c.witness_vp_positive ? std::to_string(*c.witness_vp_positive) : "none")
          << ", V_p=0 at " << (c.witness_vp_zero ? std::to_string(*c.witness_vp_zero) : "none") << '\n';
    }
    out << (all ? "every class has both kinds of prime\n" : "some class lacks a witness\n");
  }
  return kExitOk;
}

int run_covering(std::uint64_t p, bool dump, std::ostream& out) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 5");
  const CoveringAlgebra C = build_covering(PrimeField(p));
  out << "dim=" << C.M.dim() << " nucleus=" << C.nucleus_basis.size() << '\n';
  if (dump) out << dump_algebra(C.M);
  return C.M.dim() == 23 && C.nucleus_basis.size() == 2 ? kExitOk : kExitInvariant;
}

}  // namespace porc
