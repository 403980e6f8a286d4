#include "cfsym/cli.hpp"

#include "cfsym/cfengine.hpp"
#include "cfsym/errors.hpp"
#include "cfsym/jager.hpp"
#include "cfsym/oracle.hpp"
#include "cfsym/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace cfsym::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string seed;
  std::size_t terms = 10;
  int precision = 128;
  int max_precision = 1 << 20;
  std::string format = "table";
  bool allow_partial = false;
  int digits = 4;
  std::string seeds_file;
  unsigned threads = 0;

  std::string pair;
  std::string theta_json;
  bool exact_pair = false;
  std::size_t at = 0;
  std::size_t back = 0;
  std::size_t fwd = 8;

  PrecisionContext context() const {
    PrecisionContext ctx;
    ctx.initial_bits = precision;
    ctx.max_bits = max_precision;
    ctx.validate();
    return ctx;
  }
};

json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string join(const std::vector<BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out;
}

RigorousReal display_enclosure(const Real& x) {
  return x.is_exact() ? x.enclose(256) : x.enclose();
}

int display_decimals(const RigorousReal& r) { return std::max(40, r.precision() * 3 / 10 + 4); }

std::optional<std::string> try_bound(const Real& x, int digits) {
  try {
    return certified_ceil_decimal(x, digits);
  } catch (const InsufficientPrecision&) {
    return std::nullopt;
  }
}

json theta_entry(std::size_t n, const Real& x, int digits) {
  auto e = display_enclosure(x);
  int d = display_decimals(e);
  auto bound = try_bound(x, digits);
  return {{"n", n},
          {"lower", e.lower().to_decimal(d, Round::down)},
          {"upper", e.upper().to_decimal(d, Round::up)},
          {"bound", bound ? json(*bound) : json()}};
}

std::vector<Real> values(const std::vector<ThetaValue>& thetas) {
  std::vector<Real> out;
  out.reserve(thetas.size());
  for (const auto& t : thetas) out.push_back(t.value);
  return out;
}

void require_terms(std::size_t terms, std::size_t min) {
  if (terms < min)
    throw DomainError("--terms must be at least " + std::to_string(min));
}

// ---------------------------------------------------------------- expand

int cmd_expand(const Options& o, std::ostream& out, std::ostream& err) {
  Seed seed = parse_seed(o.seed);
  auto ctx = o.context();
  PartialExpansion pe = o.allow_partial ? expand_partial(seed, o.terms, ctx)
                                        : PartialExpansion{expand(seed, o.terms, ctx), std::nullopt};
  const auto& st = pe.state;

  if (o.format == "json") {
    json j{{"seed", o.seed}, {"digits", json::array()}, {"convergents", json::array()}};
    for (const auto& a : st.digits()) j["digits"].push_back(integer_json(a));
    for (const auto& c : st.convergents())
      j["convergents"].push_back({{"p", integer_json(c.p)}, {"q", integer_json(c.q)}});
    if (pe.stopped) j["stopped"] = *pe.stopped;
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "n,a_n,p_n,q_n\n";
    for (std::size_t k = 0; k < st.convergents().size(); ++k) {
      out << k << ',' << (k ? st.digits()[k - 1].get_str() : "") << ','
          << st.convergents()[k].p.get_str() << ',' << st.convergents()[k].q.get_str() << '\n';
    }
  } else {
    out << "seed    " << o.seed << '\n';
    out << "digits  [" << join(st.digits()) << "]\n\n";
    out << std::setw(5) << "n" << std::setw(12) << "a_n" << "  p_n/q_n\n";
    for (std::size_t k = 0; k < st.convergents().size(); ++k) {
      out << std::setw(5) << k << std::setw(12) << (k ? st.digits()[k - 1].get_str() : "-") << "  "
          << st.convergents()[k].p.get_str() << '/' << st.convergents()[k].q.get_str() << '\n';
    }
  }
  if (pe.stopped) {
    err << "partial expansion: " << *pe.stopped << '\n';
    return kPrecisionExhausted;
  }
  return kOk;
}

// ----------------------------------------------------------------- theta

int cmd_theta(const Options& o, std::ostream& out) {
  require_terms(o.terms, 1);
  Seed seed = parse_seed(o.seed);
  auto tb = theta_upper_bounds(seed, o.terms - 1, o.digits, o.context());
  auto th = values(tb.run.thetas);

  if (o.format == "json") {
    json j{{"seed", o.seed}, {"digits", o.digits}, {"bits", tb.run.bits}, {"entries", json::array()}};
    for (std::size_t n = 0; n < th.size(); ++n) j["entries"].push_back(theta_entry(n, th[n], o.digits));
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "n,lower,upper,bound\n";
    for (std::size_t n = 0; n < th.size(); ++n) {
      auto e = theta_entry(n, th[n], o.digits);
      out << n << ',' << e["lower"].get<std::string>() << ',' << e["upper"].get<std::string>()
          << ',' << tb.upper_bounds[n] << '\n';
    }
  } else {
    out << "seed  " << o.seed << "  (upper bounds at " << o.digits << " decimals)\n\n";
    out << std::setw(5) << "n" << "  " << std::setw(o.digits + 3) << "theta_n" << "  enclosure\n";
    for (std::size_t n = 0; n < th.size(); ++n) {
      out << std::setw(5) << n << "  " << std::setw(o.digits + 3) << tb.upper_bounds[n] << "  "
          << display_enclosure(th[n]).to_string(24) << '\n';
    }
  }
  return kOk;
}

// ----------------------------------------------------------------- jager

int cmd_jager(const Options& o, std::ostream& out) {
  require_terms(o.terms, 2);
  Seed seed = parse_seed(o.seed);
  auto tb = theta_upper_bounds(seed, o.terms - 1, o.digits, o.context());
  auto th = values(tb.run.thetas);
  const auto& b = tb.upper_bounds;

  if (o.format == "json") {
    json j{{"seed", o.seed}, {"digits", o.digits}, {"pairs", json::array()}};
    for (std::size_t n = 1; n < th.size(); ++n)
      j["pairs"].push_back({{"n", n},
                            {"theta_prev", b[n - 1]},
                            {"theta_n", b[n]},
                            {"in_gamma", to_string(in_gamma(th[n - 1], th[n]))}});
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "n,theta_prev,theta_n,in_gamma\n";
    for (std::size_t n = 1; n < th.size(); ++n)
      out << n << ',' << b[n - 1] << ',' << b[n] << ',' << to_string(in_gamma(th[n - 1], th[n]))
          << '\n';
  } else {
    int w = o.digits + 4;
    out << std::setw(5) << "n" << std::setw(w) << "prev" << std::setw(w) << "theta_n"
        << "  in_gamma\n";
    for (std::size_t n = 1; n < th.size(); ++n)
      out << std::setw(5) << n << std::setw(w) << b[n - 1] << std::setw(w) << b[n] << "  "
          << to_string(in_gamma(th[n - 1], th[n])) << '\n';
  }
  return kOk;
}

// --------------------------------------------------------------- recover

int literal_bits(const DecimalLiteral& lit) {
  auto dec = mpz_sizeinbase(lit.radius.get_den().get_mpz_t(), 10);
  return static_cast<int>(std::ceil(3.33 * static_cast<double>(dec))) + 64;
}

Real literal_value(std::string_view text, bool exact, int min_bits) {
  auto lit = DecimalLiteral::parse(text);
  int bits = std::max(min_bits, literal_bits(lit));
  if (exact) return Real::rational(lit.center, bits);
  return RigorousReal::from_rational_bounds(lit.center - lit.radius, lit.center + lit.radius, bits);
}

Real interval_from_entry(const json& e, int min_bits) {
  auto lo = DecimalLiteral::parse(e.at("lower").get<std::string>());
  auto hi = DecimalLiteral::parse(e.at("upper").get<std::string>());
  int bits = std::max({min_bits, literal_bits(lo), literal_bits(hi)});
  return RigorousReal::from_rational_bounds(lo.center, hi.center, bits);
}

int cmd_recover(const Options& o, std::ostream& out, std::ostream& err) {
  auto ctx = o.context();
  std::optional<Real> u, v;
  json pair_label;
  if (!o.theta_json.empty()) {
    std::ifstream in(o.theta_json);
    if (!in) throw Error("cannot read " + o.theta_json);
    json doc = json::parse(in);
    for (const auto& e : doc.at("entries")) {
      auto n = e.at("n").get<std::size_t>();
      if (n == o.at) u = interval_from_entry(e, ctx.initial_bits);
      if (n == o.at + 1) v = interval_from_entry(e, ctx.initial_bits);
    }
    if (!u || !v)
      throw DomainError("theta JSON lacks entries " + std::to_string(o.at) + " and " +
                        std::to_string(o.at + 1));
    pair_label = json::array({theta_entry(o.at, *u, o.digits)["upper"],
                              theta_entry(o.at + 1, *v, o.digits)["upper"]});
  } else {
    auto comma = o.pair.find(',');
    if (comma == std::string::npos) throw DomainError("--pair expects u,v");
    std::string us = o.pair.substr(0, comma), vs = o.pair.substr(comma + 1);
    u = literal_value(us, o.exact_pair, ctx.initial_bits);
    v = literal_value(vs, o.exact_pair, ctx.initial_bits);
    pair_label = json::array({us, vs});
  }

  if (in_gamma(*u, *v) == GammaCertificate::outside)
    throw RegionViolation("pair (" + u->to_string(8) + ", " + v->to_string(8) +
                          ") lies outside the triangle u > 0, v > 0, u + v < 1");

  auto r = reconstruct(*u, *v, o.at, o.back, o.fwd, ctx);
  if (r.stopped && !o.allow_partial) {
    throw PrecisionExhausted(*r.stopped);
  }

  if (o.format == "json") {
    json j{{"pair", pair_label}, {"at", o.at}, {"digits", json::array()}, {"thetas", json::array()}};
    for (const auto& d : r.digits) j["digits"].push_back({{"n", d.index}, {"a", integer_json(d.value)}});
    for (std::size_t i = 0; i < r.thetas.size(); ++i)
      j["thetas"].push_back(theta_entry(r.first_theta_index + i, r.thetas[i], o.digits));
    if (r.stopped) j["stopped"] = *r.stopped;
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "n,a_n,lower,upper,bound\n";
    for (std::size_t i = 0; i < r.thetas.size(); ++i) {
      std::size_t n = r.first_theta_index + i;
      auto e = theta_entry(n, r.thetas[i], o.digits);
      std::string a;
      for (const auto& d : r.digits)
        if (d.index == n) a = d.value.get_str();
      out << n << ',' << a << ',' << e["lower"].get<std::string>() << ','
          << e["upper"].get<std::string>() << ','
          << (e["bound"].is_null() ? "" : e["bound"].get<std::string>()) << '\n';
    }
  } else {
    std::vector<BigInt> digits;
    for (const auto& d : r.digits) digits.push_back(d.value);
    std::size_t first_digit = r.digits.empty() ? 0 : r.digits.front().index;
    out << "digits a_" << first_digit << "..  [" << join(digits) << "]\n\n";
    out << std::setw(5) << "n" << "  " << std::setw(o.digits + 3) << "theta_n" << "  enclosure\n";
    for (std::size_t i = 0; i < r.thetas.size(); ++i) {
      auto bound = try_bound(r.thetas[i], o.digits);
      out << std::setw(5) << r.first_theta_index + i << "  " << std::setw(o.digits + 3)
          << bound.value_or("?") << "  " << display_enclosure(r.thetas[i]).to_string(24) << '\n';
    }
  }
  if (r.stopped) {
    err << "partial reconstruction: " << *r.stopped << '\n';
    return kPrecisionExhausted;
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct Check {
  explicit Check(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::string witness;

  void fail(std::size_t n, const std::string& detail) {
    if (!pass) return;
    pass = false;
    witness = "n=" + std::to_string(n) + ": " + detail;
  }
  void range(std::size_t lo, std::size_t hi) {
    if (pass) witness = "n=" + std::to_string(lo) + ".." + std::to_string(hi);
  }
};

bool any_less(std::initializer_list<const Real*> xs, const Real& bound) {
  return std::any_of(xs.begin(), xs.end(), [&](const Real* x) { return certainly_less(*x, bound); });
}
bool any_greater(std::initializer_list<const Real*> xs, const Real& bound) {
  return std::any_of(xs.begin(), xs.end(), [&](const Real* x) { return certainly_less(bound, *x); });
}

json verify_seed(const Seed& seed, const std::string& label, std::size_t terms,
                 const PrecisionContext& ctx) {
  require_terms(terms, 3);
  const std::size_t last = terms - 1;  // reported indices 0..last
  // One extra coefficient so the future-side forms reach n = last.
  auto run = theta_run(seed, last + 1, ctx);
  auto th = values(run.thetas);
  const auto& a = run.expansion.digits();  // a[k] = a_{k+1}
  const auto& conv = run.expansion.convergents();

  const Real half = Real::rational(BigRational(1, 2));
  const Real one(1);
  const Real inv_sqrt5 = QuadraticNumber(BigRational(0), BigRational(1, 5), BigInt(5));

  Check unit{"theta_in_unit_interval"}, vahlen{"vahlen_min_pair_below_half"},
      sum{"pair_sum_below_one"}, triangle{"pair_in_triangle"}, borel{"borel_min_triple"},
      bmt{"bm_tong_bracket"}, error_bound{"convergent_error_bound"},
      recovery{"digit_recovery_both_sides"}, interior{"interior_digits_cross_check"};

  for (std::size_t n = 0; n <= last; ++n) {
    if (!(th[n].sign() == 1 && certainly_less(th[n], one)))
      unit.fail(n, "theta_n = " + th[n].to_string(12));
    // theta_n < q_n / q_{n+1}
    if (!certainly_less(th[n] * Real::rational(BigRational(conv[n + 1].q)),
                        Real::rational(BigRational(conv[n].q))))
      error_bound.fail(n, "q_n^2|x_0 - p_n/q_n| >= q_n/q_{n+1}");
  }
  unit.range(0, last);
  error_bound.range(0, last);

  // With a_1 = 1 the past y_1 = -1 lies on the edge of Omega: theta_0 + theta_1 = 1
  // exactly and the future-pair digit form at n = 1 reads a_2 + 1. That index is
  // reported as excluded from the checks that depend on it.
  const bool edge = a[0] == 1;

  for (std::size_t n = 1; n <= last; ++n) {
    const Real &prev = th[n - 1], &cur = th[n], &next = th[n + 1];
    const bool skip = edge && n == 1;
    if (!any_less({&prev, &cur}, half)) vahlen.fail(n, "min(theta_{n-1}, theta_n) >= 1/2");
    if (!skip && !certainly_less(prev + cur, one)) sum.fail(n, "theta_{n-1} + theta_n >= 1");
    auto g = in_gamma(prev, cur);
    if (!skip && g != GammaCertificate::inside) triangle.fail(n, to_string(g));
    if (!any_less({&prev, &cur, &next}, inv_sqrt5)) borel.fail(n, "min triple >= 5^-1/2");
    Real c = sqrt(Real::rational(BigRational(1) / (a[n] * a[n] + 4)));
    if (!any_less({&prev, &cur, &next}, c)) bmt.fail(n, "min triple >= (a^2+4)^-1/2");
    if (!any_greater({&prev, &cur, &next}, c)) bmt.fail(n, "max triple <= (a^2+4)^-1/2");
    try {
      BigInt past = digit_from_pair(prev, cur);
      BigInt future = skip ? a[n] : digit_from_pair(next, cur);
      if (past != a[n] || future != a[n])
        recovery.fail(n, "a_{n+1} = " + a[n].get_str() + ", past pair " + past.get_str() +
                             ", future pair " + future.get_str());
    } catch (const Error& e) {
      recovery.fail(n, e.what());
    }
  }
  for (auto* c : {&vahlen, &sum, &triangle, &borel, &bmt, &recovery}) c->range(1, last);

  try {
    auto rec = digit_sequence_from_thetas(th);  // a_2 .. a_{last+2}
    for (std::size_t i = 0; i < rec.size(); ++i)
      if (rec[i] != a[i + 1]) interior.fail(i + 2, "recovered a_n = " + rec[i].get_str());
  } catch (const Error& e) {
    interior.fail(0, e.what());
  }
  interior.range(2, last + 2);

  auto argmin = [&](std::size_t from) {
    std::size_t best = from;
    for (std::size_t n = from; n <= last; ++n)
      if (th[n].to_double() < th[best].to_double()) best = n;
    return json{{"n", best}, {"value", display_enclosure(th[best]).midpoint().to_decimal(10, Round::down)}};
  };

  json j{{"seed", label}, {"terms", terms}, {"bits", run.bits}, {"checks", json::array()}};
  bool ok = true;
  for (const auto* c : {&unit, &vahlen, &sum, &triangle, &borel, &bmt, &error_bound, &recovery, &interior}) {
    j["checks"].push_back({{"name", c->name}, {"pass", c->pass}, {"witness", c->witness}});
    ok = ok && c->pass;
  }
  j["all_pass"] = ok;
  j["excluded"] = json::array();
  if (edge)
    j["excluded"].push_back({{"n", 1},
                             {"checks", {"pair_sum_below_one", "pair_in_triangle", "future pair of digit_recovery_both_sides"}},
                             {"reason", "a_1 = 1: y_1 = -1 is on the edge of Omega and theta_0 + theta_1 = 1"}});
  j["min_theta"] = argmin(0);
  j["min_theta_tail"] = argmin(last / 2);
  return j;
}

void print_verify(const json& j, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    for (const auto& c : j.at("checks"))
      out << j["seed"].get<std::string>() << ',' << c["name"].get<std::string>() << ','
          << (c["pass"].get<bool>() ? "pass" : "fail") << ",\"" << c["witness"].get<std::string>()
          << "\"\n";
    return;
  }
  out << "seed  " << j["seed"].get<std::string>() << "  (theta_0..theta_"
      << j["terms"].get<std::size_t>() - 1 << ")\n";
  for (const auto& c : j.at("checks"))
    out << "  " << std::left << std::setw(30) << c["name"].get<std::string>() << std::right
        << (c["pass"].get<bool>() ? "pass  " : "FAIL  ") << c["witness"].get<std::string>() << '\n';
  for (const auto& e : j.at("excluded"))
    out << "  excluded n=" << e["n"] << ": " << e["reason"].get<std::string>() << '\n';
  out << "  min theta                     " << j["min_theta"]["value"].get<std::string>() << " (n="
      << j["min_theta"]["n"] << ")\n";
  out << "  min theta, second half        " << j["min_theta_tail"]["value"].get<std::string>()
      << " (n=" << j["min_theta_tail"]["n"] << ")\n";
}

int exit_code_for(const std::exception_ptr& p, std::string& message);

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  auto ctx = o.context();
  std::vector<std::string> specs;
  if (!o.seeds_file.empty()) {
    std::ifstream in(o.seeds_file);
    if (!in) throw Error("cannot read " + o.seeds_file);
    for (std::string line; std::getline(in, line);) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      auto e = line.find_last_not_of(" \t\r");
      specs.push_back(line.substr(b, e - b + 1));
    }
  }
  if (!o.seed.empty()) specs.insert(specs.begin(), o.seed);
  if (specs.empty()) throw DomainError("verify needs a seed or --seeds-file");

  struct Outcome {
    json report;
    int code = kOk;
    std::string error;
  };
  std::vector<Outcome> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
      try {
        results[i].report = verify_seed(parse_seed(specs[i]), specs[i], o.terms, ctx);
        if (!results[i].report["all_pass"].get<bool>()) results[i].code = kFailure;
      } catch (...) {
        results[i].code = exit_code_for(std::current_exception(), results[i].error);
      }
    }
  };
  unsigned n_threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, specs.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  int code = kOk;
  json all = json::array();
  if (o.format == "csv") out << "seed,check,result,witness\n";
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& r = results[i];
    if (code == kOk) code = r.code;
    if (!r.error.empty()) {
      err << specs[i] << ": " << r.error << '\n';
      all.push_back({{"seed", specs[i]}, {"error", r.error}, {"exit_code", r.code}});
      continue;
    }
    if (o.format == "json")
      all.push_back(r.report);
    else
      print_verify(r.report, o.format, out);
  }
  if (o.format == "json") out << (specs.size() == 1 && all[0].contains("checks") ? all[0] : all).dump(2) << '\n';
  return code;
}

// ------------------------------------------------------------ crosscheck

int cmd_crosscheck(const Options& o, std::ostream& out) {
  require_terms(o.terms, 2);
  Seed seed = parse_seed(o.seed);
  auto report = oracle::crosscheck(seed, o.terms - 1, o.context(), o.seed);
  if (o.format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << "seed  " << report.seed << "  oracle at " << report.oracle_bits << " bits\n\n";
    out << std::setw(5) << "n" << std::setw(9) << "theta" << std::setw(12) << "a_{n+1}"
        << std::setw(8) << "oracle" << std::setw(8) << "pairs" << std::setw(8) << "walk" << '\n';
    auto yn = [](bool b) { return b ? "ok" : "FAIL"; };
    for (const auto& e : report.entries) {
      out << std::setw(5) << e.n << std::setw(9) << yn(e.theta_overlap) << std::setw(12)
          << e.digit_expand.get_str() << std::setw(8) << yn(e.digit_oracle_match) << std::setw(8)
          << yn(e.digit_match) << std::setw(8)
          << (e.reconstruct_overlap ? yn(*e.reconstruct_overlap) : "-") << '\n';
    }
    out << '\n' << (report.all_ok() ? "all checks agree" : "MISMATCH") << '\n';
  }
  return report.all_ok() ? kOk : kFailure;
}

int exit_code_for(const std::exception_ptr& p, std::string& message) {
  try {
    std::rethrow_exception(p);
  } catch (const PrecisionExhausted& e) {
    message = std::string("precision exhausted: ") + e.what();
    if (e.index()) message += " (reached index " + std::to_string(*e.index()) + ")";
    return kPrecisionExhausted;
  } catch (const InsufficientPrecision& e) {
    message = std::string("insufficient precision: ") + e.what();
    return kPrecisionExhausted;
  } catch (const DomainError& e) {
    message = std::string("domain error: ") + e.what();
    return kDomainError;
  } catch (const RegionViolation& e) {
    message = std::string("region violation: ") + e.what();
    return kDomainError;
  } catch (const CrossCheckFailure& e) {
    message = std::string("cross-check failure: ") + e.what();
    return kFailure;
  } catch (const std::exception& e) {
    message = std::string("error: ") + e.what();
    return kFailure;
  }
}

}  // namespace

Seed parse_seed(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw DomainError("seed must look like surd:P,D,Q, decimal:<digits> or fixture:<name>");
  std::string_view kind = text.substr(0, colon);
  std::string payload(text.substr(colon + 1));

  if (kind == "surd") {
    std::vector<BigInt> parts;
    std::stringstream ss(payload);
    for (std::string item; std::getline(ss, item, ',');) {
      BigInt v;
      if (item.empty() || v.set_str(item, 10) != 0)
        throw DomainError("bad integer '" + item + "' in surd seed");
      parts.push_back(v);
    }
    if (parts.size() != 3) throw DomainError("surd seed needs exactly P,D,Q");
    return Seed::surd(QuadraticSurd(parts[0], parts[1], parts[2]));
  }
  if (kind == "decimal") {
    auto lit = DecimalLiteral::parse(payload);
    if (lit.significant_digits < kMinDecimalDigits)
      throw DomainError("decimal seed has " + std::to_string(lit.significant_digits) +
                        " significant digits; at least " + std::to_string(kMinDecimalDigits) +
                        " are required");
    return Seed::decimal(std::move(lit));
  }
  if (kind == "fixture") {
    if (payload == "pi-minus-3") return Seed::decimal(pi_minus_3_literal());
    throw DomainError("unknown fixture '" + payload + "' (available: pi-minus-3)");
  }
  throw DomainError("unknown seed kind '" + std::string(kind) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Continued fractions, approximation coefficients and digit recovery", "cfsym"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--precision", o.precision, "Initial working precision in bits")
        ->check(CLI::Range(16, 1 << 30));
    sub->add_option("--max-precision", o.max_precision, "Escalation ceiling in bits")
        ->check(CLI::Range(16, 1 << 30));
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--digits", o.digits, "Decimals for rounded-up theta bounds")
        ->check(CLI::Range(1, 1000));
  };
  auto seeded = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("seed", o.seed, "surd:P,D,Q | decimal:<digits> | fixture:pi-minus-3");
    if (required) opt->required();
    sub->add_option("--terms", o.terms, "Number of terms")->check(CLI::PositiveNumber);
  };

  auto* expand_cmd = app.add_subcommand("expand", "Partial quotients and convergents");
  seeded(expand_cmd, true);
  common(expand_cmd);
  expand_cmd->add_flag("--allow-partial", o.allow_partial, "Print what was reached on exhaustion");

  auto* theta_cmd = app.add_subcommand("theta", "Approximation coefficients theta_0..theta_{T-1}");
  seeded(theta_cmd, true);
  common(theta_cmd);

  auto* jager_cmd = app.add_subcommand("jager", "Consecutive pairs (theta_{n-1}, theta_n)");
  seeded(jager_cmd, true);
  common(jager_cmd);

  auto* recover_cmd = app.add_subcommand("recover", "Rebuild digits and thetas from one pair");
  common(recover_cmd);
  auto* pair_opt = recover_cmd->add_option("--pair", o.pair, "theta_at,theta_{at+1} as decimals");
  auto* json_opt =
      recover_cmd->add_option("--theta-json", o.theta_json, "Take the pair from `theta --format json`");
  pair_opt->excludes(json_opt);
  recover_cmd->add_flag("--exact-pair", o.exact_pair,
                        "Read --pair decimals as exact rationals instead of +-1 ulp intervals");
  recover_cmd->add_option("--at", o.at, "Index of the first coefficient of the pair");
  recover_cmd->add_option("--back", o.back, "Steps towards theta_0");
  recover_cmd->add_option("--fwd", o.fwd, "Steps forward");
  recover_cmd->add_flag("--allow-partial", o.allow_partial, "Print what was reached on exhaustion");

  auto* verify_cmd = app.add_subcommand("verify", "Check the classical inequalities and digit recovery");
  seeded(verify_cmd, false);
  common(verify_cmd);
  verify_cmd->add_option("--seeds-file", o.seeds_file, "One seed per line");
  verify_cmd->add_option("--threads", o.threads, "Worker threads for --seeds-file (0 = all cores)");

  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare against brute-force references");
  seeded(cross_cmd, true);
  common(cross_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kFailure;
  }

  try {
    if (expand_cmd->parsed()) return cmd_expand(o, out, err);
    if (theta_cmd->parsed()) return cmd_theta(o, out);
    if (jager_cmd->parsed()) return cmd_jager(o, out);
    if (recover_cmd->parsed()) {
      if (o.pair.empty() && o.theta_json.empty()) throw DomainError("recover needs --pair or --theta-json");
      return cmd_recover(o, out, err);
    }
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (cross_cmd->parsed()) return cmd_crosscheck(o, out);
  } catch (...) {
    std::string message;
    int code = exit_code_for(std::current_exception(), message);
    err << message << '\n';
    return code;
  }
  return kFailure;
}

}  // namespace cfsym::cli
