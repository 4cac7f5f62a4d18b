// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sweep.hpp"
#include "wlink/cli/run.hpp"
#include "wlink/wlink.hpp"

using namespace wlink;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      problems.push_back(os.str());
    }
  }
};

std::ostream& operator<<(std::ostream& os, const CyclicDivisor& d) { return os << d.str(); }

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Times `fn` once after one warm-up call.
template <typename Fn>
double timed(Fn&& fn) {
  fn();
  const auto start = Clock::now();
  fn();
  return ms_since(start);
}

int failures = 0;

void criterion(int n, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("exception: ") + e.what());
  }
  const double ms = ms_since(start);
  if (c.problems.empty()) {
    std::printf("PASS  %2d  %s  [%.1f ms]\n", n, title, ms);
  } else {
    ++failures;
    std::printf("FAIL  %2d  %s  [%.1f ms]\n", n, title, ms);
    for (const std::string& p : c.problems) std::printf("          %s\n", p.c_str());
  }
  std::fflush(stdout);
}

Rational q(long p, long r = 1) { return Rational(p, r); }
Term term(std::vector<int> e, Rational c = 1) { return Term{Monomial{std::move(e)}, c}; }

const WeightVector& z16w() {
  static const WeightVector w = validate_weights({1, 3, 5, 8});
  return w;
}

QhPolynomial z16_member(long a, long b, long c) {
  std::vector<Term> terms{term({16, 0, 0, 0}), term({1, 5, 0, 0}), term({1, 0, 3, 0})};
  if (a) terms.push_back(term({0, 0, 0, 2}, a));
  if (b) terms.push_back(term({0, 1, 1, 1}, b));
  if (c) terms.push_back(term({0, 2, 2, 0}, c));
  return QhPolynomial::make(z16w(), 16, terms);
}

CyclicDivisor L(long j, Rational c = 1) { return CyclicDivisor::lambda(BigInt(j), c); }

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return out.str();
}

}  // namespace

int main() {
  const CyclicDivisor z16_div = L(16, 9) - L(2) + CyclicDivisor(1);

  criterion(1, "Milnor number of (1,3,5,8; 16) is 143", [](Check& c) {
    BigInt mu;
    const double ms = timed([&] { mu = milnor_number(z16w(), 16); });
    c.equal(mu, BigInt(143), "mu");
    c.expect(ms < 1.0, "runtime " + std::to_string(ms) + " ms >= 1 ms");
  });

  criterion(2, "div Delta = 9 L16 - L2 + 1", [&](Check& c) {
    CyclicDivisor div;
    const double ms = timed([&] { div = divisor_of_delta(z16w(), 16); });
    c.equal(div, z16_div, "divisor");
    c.expect(ms < 1.0, "runtime " + std::to_string(ms) + " ms >= 1 ms");
  });

  criterion(3, "Delta(t) = (t-1)^9(t+1)^8(t^2+1)^9(t^4+1)^9(t^8+1)^9", [&](Check& c) {
    DensePoly dense;
    const double ms = timed([&] { dense = expand(factored_char_poly(z16_div)); });
    oracle::Poly want = oracle::poly_pow(oracle::binomial(1, -1), 9);
    want = oracle::poly_mul(want, oracle::poly_pow(oracle::binomial(1, 1), 8));
    for (int j : {2, 4, 8}) {
      want = oracle::poly_mul(want, oracle::poly_pow(oracle::binomial(j, 1), 9));
    }
    c.expect(dense.coefficients == want, "coefficients differ from the binomial product");
    c.equal(dense.degree(), std::int64_t{143}, "degree");
    c.equal(dense.constant_term(), BigInt(-1), "constant term");
    c.expect(ms < 100.0, "runtime " + std::to_string(ms) + " ms >= 100 ms");
  });

  criterion(4, "b2 = 9 from the divisor and from the root-1 multiplicity", [&](Check& c) {
    const DensePoly dense = expand(factored_char_poly(z16_div));
    c.equal(betti(z16_div), BigInt(9), "divisor path");
    c.equal(root_one_multiplicity(dense), std::int64_t{9}, "dense path");
  });

  criterion(5, "classification 9#(S2xS3), Unknown without torsion assertion", [](Check& c) {
    const BigInt b = betti(divisor_of_delta(z16w(), 16));
    c.equal(classify_5d(b, true).str(), std::string("9#(S2xS3)"), "torsion-free");
    c.equal(classify_5d(b, false).str(), std::string("Unknown"), "no assertion");
  });

  criterion(6, "orbifold invariants of Z16", [](Check& c) {
    const QhPolynomial f = z16_member(1, 1, 0);
    const OrbifoldReport r = orbifold_report(f, betti(divisor_of_delta(z16w(), 16)));
    std::vector<std::int64_t> orders;
    for (const SingularPoint& p : r.singular_points) orders.push_back(p.group_order);
    std::sort(orders.begin(), orders.end());
    c.expect(orders == std::vector<std::int64_t>{3, 5}, "singular point orders");
    c.equal(r.chi_top, BigInt(12), "chi_top");
    c.equal(r.tau_top, BigInt(-8), "tau_top");
    c.equal(BigInt(2 * r.chi_top + 3 * r.tau_top), BigInt(0), "2 chi_top + 3 tau_top");
    c.equal(r.chi_orb, q(158, 15), "chi_orb");
    c.equal(r.c1_sq, q(2, 15), "c1^2");
    c.equal(r.tau_orb, q(-314, 45), "tau_orb");
  });

  criterion(7, "orbifold Hitchin-Thorpe with margin 1/15", [](Check& c) {
    const OrbifoldReport r =
        orbifold_report(z16_member(1, 1, 0), betti(divisor_of_delta(z16w(), 16)));
    c.expect(r.checks.orbifold_hitchin_thorpe, "chi_orb >= 3/2 |tau_orb|");
    c.equal(r.checks.orbifold_margin, q(1, 15), "margin");
    c.equal(r.chi_orb - q(3, 2) * abs(r.tau_orb), q(1, 15), "recomputed margin");
    c.expect(r.checks.euler_lower_bound, "Euler lower bound");
    c.expect(r.checks.c1_nonnegative, "c1^2 >= 0");
  });

  criterion(8, "klt certificate for the Z16 preset", [](Check& c) {
    const KltCertificate k = certify(z16_preset());
    c.equal(k.generic_mult_bound, q(2, 5), "generic bound");
    c.expect(!k.vertices.empty() && k.vertices[0].label == "P1", "P1 present");
    if (k.vertices.empty()) return;
    const VertexCertificate& p1 = k.vertices[0];
    c.equal(p1.mult_cap, q(2), "mult cap at P1");
    c.equal(p1.table.o1_c1, q(1, 15), "H.C1");
    c.equal(p1.table.o1_c2, q(1, 15), "H.C2");
    c.equal(p1.table.c1_c2, q(1, 5), "C1.C2");
    c.equal(p1.table.c1_sq_self, q(-2, 15), "C1^2");
    c.equal(p1.bounds.a_max, q(7, 6), "a_max");
    c.equal(p1.bounds.tangent_coeff_max, q(13, 9), "tangent coefficient");
    c.equal(k.tangent_coeff_max, q(13, 9), "certificate tangent coefficient");
    c.equal(k.gamma, q(11, 16), "gamma");
    c.expect(k.verdict, "verdict");
    c.equal(k.margin, q(1, 144), "margin");
  });

  criterion(9, "splitting condition", [](Check& c) {
    const SplittingCheck f = splitting_condition(z16_member(1, 1, 0));
    const SplittingCheck y = splitting_condition(z16_member(1, 0, 1));
    const SplittingCheck sq = splitting_condition(z16_member(1, 2, 1));
    c.expect(f.distinct_roots, "f splits");
    c.equal(f.discriminant, q(1), "f discriminant");
    c.expect(y.distinct_roots, "Y splits");
    c.equal(y.discriminant, q(-4), "Y discriminant");
    c.expect(!sq.distinct_roots, "(1,2,1) does not split");
  });

  criterion(10, "moduli count 20 - 12 = 8", [](Check& c) {
    const ModuliReport m = moduli_dimension(z16w(), 16);
    c.equal(m.dim_graded, std::int64_t{20}, "dim S^16");
    c.equal(m.dim_aut, std::int64_t{12}, "dim G");
    c.expect(m.per_variable == std::vector<std::int64_t>{1, 2, 3, 6}, "per-variable counts");
    c.equal(m.moduli_dim, std::int64_t{8}, "moduli dimension");
  });

  criterion(11, "oracle sweep: entries <= 10, d <= 40, Lambda ring laws", [](Check& c) {
    oracle::SweepOptions opt;
    opt.max_entry = 10;
    opt.max_degree = 40;
    const oracle::SweepStats s = oracle::run_sweep(opt);
    for (std::size_t k = 0; k < s.failures.size() && k < 10; ++k) c.expect(false, s.failures[k]);
    if (s.failures.size() > 10) {
      c.expect(false, std::to_string(s.failures.size() - 10) + " more failures");
    }
    c.expect(s.admissible > 0 && s.dense_checked > 0, "sweep checked nothing");
    std::printf("          %zu pairs: %zu spectrum-checked, %zu formal only, %zu rejected, "
                "%zu dense-expanded\n",
                s.pairs, s.admissible, s.formal_only, s.rejected, s.dense_checked);

    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> terms(0, 4);
    std::uniform_int_distribution<long> index(1, 60);
    auto random_divisor = [&] {
      CyclicDivisor x(oracle::random_rational(rng, 6, 5));
      const int n = terms(rng);
      for (int k = 0; k < n; ++k) x += L(index(rng), oracle::random_rational(rng, 9, 7));
      return x;
    };
    for (int trial = 0; trial < 1000; ++trial) {
      const CyclicDivisor x = random_divisor();
      const CyclicDivisor y = random_divisor();
      const CyclicDivisor z = random_divisor();
      if (!(x * y == y * x)) c.expect(false, "commutativity: " + x.str() + " , " + y.str());
      if (!((x * y) * z == x * (y * z))) c.expect(false, "associativity at trial " +
                                                             std::to_string(trial));
    }
  });

  criterion(12, "Sigma(2,3,5): mu 8, Delta = t^8+t^7-t^5-t^4-t^3+t+1, b = 0", [](Check& c) {
    const WeightVector w = validate_weights({15, 10, 6});
    const CyclicDivisor div = divisor_of_delta(w, 30);
    const DensePoly dense = expand(factored_char_poly(div));
    oracle::Poly num{BigInt(1)};
    for (int j : {30, 5, 3, 2}) num = oracle::poly_mul(num, oracle::binomial(j, -1));
    oracle::Poly den{BigInt(1)};
    for (int j : {15, 10, 6, 1}) den = oracle::poly_mul(den, oracle::binomial(j, -1));
    const auto want = oracle::poly_div_exact(num, den);
    c.equal(milnor_number(w, 30), BigInt(8), "mu");
    c.expect(want.has_value() && dense.coefficients == *want, "Delta differs from the quotient");
    const std::vector<long> literal{1, 1, 0, -1, -1, -1, 0, 1, 1};
    bool same = dense.coefficients.size() == literal.size();
    for (std::size_t k = 0; same && k < literal.size(); ++k) {
      same = dense.coefficients[k] == literal[k];
    }
    c.expect(same, "Delta differs from t^8+t^7-t^5-t^4-t^3+t+1");
    c.equal(betti(div), BigInt(0), "betti");
  });

  criterion(13, "scan --index 1 --max-weight 8", [](Check& c) {
    const auto start = Clock::now();
    int code = 0;
    const std::string one = run_cli({"scan", "--index", "1", "--max-weight", "8", "--jobs", "1"}, code);
    c.equal(code, 0, "exit code");
    c.expect(one.find(R"({"weights":["1","3","5","8"],"degree":"16")") != std::string::npos,
             "(1,3,5,8; 16) missing");
    for (const char* jobs : {"2", "8"}) {
      const std::string other =
          run_cli({"scan", "--index", "1", "--max-weight", "8", "--jobs", jobs}, code);
      c.expect(other == one, std::string("output differs with --jobs ") + jobs);
    }
    for (std::int64_t w = 1; w <= 6; ++w) {
      ScanOptions opt;
      opt.index = 1;
      opt.max_weight = w;
      opt.workers = 2;
      std::vector<oracle::ScanHit> got;
      for (const Candidate& cand : scan_candidates(opt)) got.push_back({cand.weights, cand.degree});
      c.expect(got == oracle::brute_force_scan(1, w),
               "brute-force mismatch at max-weight " + std::to_string(w));
    }
    const double ms = ms_since(start);
    c.expect(ms < 30000.0, "runtime " + std::to_string(ms) + " ms >= 30 s");
  });

  std::printf("%s: %d of 13 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures == 0 ? 0 : 1;
}
