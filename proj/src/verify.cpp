#include "curvalpha/verify.hpp"

#include <random>
#include <sstream>

#include "curvalpha/error.hpp"

namespace curvalpha {

namespace {

std::string show(WaveVector v) { return "(" + std::to_string(v.k1) + "," + std::to_string(v.k2) + ")"; }

class Check {
 public:
  Check(std::string name, bool hard = true) {
    result_.name = std::move(name);
    result_.hard = hard;
  }

  template <typename Describe>
  void record(bool ok, Describe&& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

class Sampler {
 public:
  Sampler(std::uint64_t seed, int bound) : gen_(seed), component_(-bound, bound) {}

  WaveVector any() { return {component_(gen_), component_(gen_)}; }

  WaveVector nonzero() {
    for (;;) {
      WaveVector v = any();
      if (!v.is_zero()) return v;
    }
  }

  Beta grid_beta() {
    static const Scalar grid[] = {Scalar(0), Scalar(1, 4), Scalar(1), Scalar(9, 4)};
    return Beta(grid[std::uniform_int_distribution<int>(0, 3)(gen_)]);
  }

  Beta rational_beta() {
    int p = std::uniform_int_distribution<int>(0, 40)(gen_);
    int q = std::uniform_int_distribution<int>(1, 16)(gen_);
    return Beta(Scalar(p, q));
  }

  /// Admissible cos/cos plane: k, l nonzero, not parallel.
  std::pair<WaveVector, WaveVector> plane() {
    for (;;) {
      WaveVector k = nonzero(), l = nonzero();
      if (sgn(cross(k, l)) != 0) return {k, l};
    }
  }

  Scalar small_rational() {
    int p = std::uniform_int_distribution<int>(-6, 6)(gen_);
    int q = std::uniform_int_distribution<int>(1, 4)(gen_);
    return Scalar(p, q);
  }

  int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

 private:
  std::mt19937_64 gen_;
  std::uniform_int_distribution<std::int64_t> component_;
};

std::string show_beta(const Beta& b) { return "beta=" + to_exact_string(b.value()); }

void lattice_checks(VerifyReport& rep, Sampler& rnd, const VerifyOptions& opt) {
  const TorusGeometry geom;
  Check antisym("commutator antisymmetry"), jacobi("Jacobi identity"), adjoint("B-adjoint identity"),
      torsion("torsion-free connection"), metric("metric compatibility"), l2("L2 degeneration at beta=0");
  auto conn = [&](WaveVector a, WaveVector b, const Beta& beta) {
    return detail::conn_coeff_with_divisor(a, b, beta, opt.connection_divisor);
  };

  for (int i = 0; i < opt.cases; ++i) {
    WaveVector k = rnd.nonzero(), l = rnd.nonzero(), m = rnd.nonzero();
    Beta beta = rnd.grid_beta();
    auto tuple = [&] { return "k=" + show(k) + " l=" + show(l) + " m=" + show(m) + " " + show_beta(beta); };

    Bracket kl = commutator_coeff(k, l), lk = commutator_coeff(l, k);
    antisym.record(kl.coeff == -lk.coeff && kl.target == lk.target, tuple);

    if (!(k + l).is_zero() && !(l + m).is_zero() && !(m + k).is_zero()) {
      Scalar j = kl.coeff * commutator_coeff(k + l, m).coeff +
                 commutator_coeff(l, m).coeff * commutator_coeff(l + m, k).coeff +
                 commutator_coeff(m, k).coeff * commutator_coeff(m + k, l).coeff;
      jacobi.record(sgn(j) == 0, tuple);
    }

    // m' = -(k + l) closes the triple for the pairing identities.
    WaveVector closing = -(k + l);
    if (!closing.is_zero()) {
      Scalar lhs = b_coeff(k, l, beta) * inner_basis(k + l, closing, beta, geom);
      Bracket lm = commutator_coeff(l, closing);
      Scalar rhs = lm.target.is_zero() ? Scalar(0) : lm.coeff * inner_basis(k, lm.target, beta, geom);
      adjoint.record(lhs == rhs, tuple);

      torsion.record(conn(k, l, beta) - conn(l, k, beta) == Scalar(cross(k, l)), tuple);

      // <nabla_k e_l, e_m'> + <e_l, nabla_k e_m'> with nabla_k e_m' = d e_{-l}.
      Scalar mc = conn(k, l, beta) * a_alpha(k + l, beta) + conn(k, closing, beta) * a_alpha(l, beta);
      metric.record(sgn(mc) == 0, tuple);

      Beta zero;
      Scalar nk(norm2(k)), nl(norm2(l)), ns(norm2(k + l)), c(cross(k, l));
      bool ok = a_alpha(k, zero) == nk && b_coeff(k, l, zero) == c * nk / ns &&
                conn_coeff(k, l, zero) == c / 2 * (1 - (nk - nl) / ns);
      l2.record(ok, tuple);
    }
  }
  for (Check* c : {&antisym, &jacobi, &adjoint, &torsion, &metric, &l2}) rep.checks.push_back(c->done());
}

void curvature_checks(VerifyReport& rep, Sampler& rnd, const VerifyOptions& opt) {
  const TorusGeometry geom;
  Check antisym("curvature first-slot antisymmetry"), pair("curvature pair symmetry"),
      bianchi("first Bianchi identity"), paper("printed R_klmn vs canonical (report only)", false);

  for (int i = 0; i < opt.cases; ++i) {
    WaveVector k, l, m, n;
    do {
      k = rnd.nonzero();
      l = rnd.nonzero();
      m = rnd.nonzero();
      n = -(k + l + m);
    } while (n.is_zero());
    Beta beta = rnd.grid_beta();
    auto tuple = [&] {
      return "k=" + show(k) + " l=" + show(l) + " m=" + show(m) + " n=" + show(n) + " " + show_beta(beta);
    };

    Scalar r = r_coeff(k, l, m, beta, geom);
    antisym.record(r == -r_coeff(l, k, m, beta, geom), tuple);
    pair.record(r == r_coeff(m, n, k, beta, geom), tuple);
    bianchi.record(sgn(r + r_coeff(l, m, k, beta, geom) + r_coeff(m, k, l, beta, geom)) == 0, tuple);

    Scalar printed = r_coeff_paper(k, l, m, beta, geom);
    if (sgn(r) != 0 && sgn(printed) != 0) {
      Scalar ratio = printed / r;
      if (!rep.paper_ratio_min || ratio < *rep.paper_ratio_min) rep.paper_ratio_min = ratio;
      if (!rep.paper_ratio_max || ratio > *rep.paper_ratio_max) rep.paper_ratio_max = ratio;
    }
    if (sgn(r) != sgn(printed)) ++rep.paper_sign_disagreements;
    paper.record(printed == r, tuple);
  }
  for (Check* c : {&antisym, &pair, &bianchi, &paper}) rep.checks.push_back(c->done());
}

FourierStream random_stream(Sampler& rnd, int modes) {
  FourierStream::Map m;
  while (static_cast<int>(m.size()) < 2 * modes) {
    WaveVector v = rnd.nonzero();
    if (m.count(v)) continue;
    Complex c{rnd.small_rational(), rnd.small_rational()};
    if (c.is_zero()) continue;
    m[v] = c;
    m[-v] = c.conj();
  }
  return FourierStream(std::move(m));
}

void route_checks(VerifyReport& rep, Sampler& rnd, const VerifyOptions& opt) {
  const TorusGeometry geom;
  Check route("route constancy r-sum / closed form"), kappa("beta=0 oracle ratio kappa"),
      nonpos("beta=0 closed form non-positive"), sym("cos/cos symmetry k<->l, k->-k, l->-l"),
      special("general expansion matches cos/cos"), arnold("beta=0 general expansion vs Arnold sum"),
      arnold_sign("Arnold sum non-positive");

  for (int i = 0; i < opt.cases; ++i) {
    auto [k, l] = rnd.plane();
    Beta beta = i % 2 == 0 ? rnd.grid_beta() : rnd.rational_beta();
    auto tuple = [&] { return "k=" + show(k) + " l=" + show(l) + " " + show_beta(beta); };

    Scalar raw = sectional_cos_cos_raw(k, l, beta, geom);
    Scalar closed = sectional_cos_cos_closed(k, l, beta, geom);
    if (sgn(closed) == 0) {
      route.record(sgn(raw) == 0, tuple);
    } else {
      Scalar ratio = raw / closed;
      if (!rep.route_ratio) rep.route_ratio = ratio;
      route.record(ratio == *rep.route_ratio, tuple);
    }

    bool symmetric = raw == sectional_cos_cos_raw(l, k, beta, geom) &&
                     raw == sectional_cos_cos_raw(-k, l, beta, geom) &&
                     raw == sectional_cos_cos_raw(k, -l, beta, geom) &&
                     closed == sectional_cos_cos_closed(l, k, beta, geom) &&
                     closed == sectional_cos_cos_closed(-k, l, beta, geom) &&
                     closed == sectional_cos_cos_closed(k, -l, beta, geom);
    sym.record(symmetric, tuple);

    CurvatureResult norm = sectional_cos_cos_normalized(k, l, beta, geom);
    CurvatureResult general =
        sectional_general(FourierStream::cosine(k), FourierStream::cosine(l), beta, geom);
    special.record(general.raw == norm.raw && general.normalized == norm.normalized, tuple);

    Beta zero;
    CurvatureResult l2 = sectional_cos_cos_normalized(k, l, zero, geom);
    Scalar oracle = arnold_cos_cos(k, l, geom);
    Scalar ratio = l2.normalized / oracle;
    if (!rep.kappa) rep.kappa = ratio;
    kappa.record(ratio == *rep.kappa && sgn(ratio) > 0, tuple);
    nonpos.record(sgn(sectional_cos_cos_closed(k, l, zero, geom)) <= 0, tuple);

    // Arnold's sum for a cosine and an arbitrary three-mode stream.
    FourierStream eta = random_stream(rnd, 3);
    FourierStream xi = FourierStream::cosine(k);
    Scalar sum = arnold_general(k, eta, geom);
    arnold_sign.record(sgn(sum) <= 0, tuple);
    try {
      CurvatureResult g = sectional_general(xi, eta, zero, geom);
      if (sgn(sum) == 0) {
        arnold.record(sgn(g.raw) == 0, tuple);
      } else {
        Scalar r = g.raw / sum;
        if (!rep.arnold_ratio) rep.arnold_ratio = r;
        arnold.record(r == *rep.arnold_ratio, tuple);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegeneratePlane) throw;
    }
  }
  for (Check* c : {&route, &sym, &special, &kappa, &nonpos, &arnold, &arnold_sign}) rep.checks.push_back(c->done());
}

void eps_checks(VerifyReport& rep, Sampler& rnd, const VerifyOptions& opt) {
  Check b3("b3 t^2 coefficient is a positive multiple of (k,eps)^2"),
      rest("b0,b1,b2 t^2 coefficients negative for eps not parallel to k"),
      form("t^2 coefficients are |eps|^2, (k,eps)^2 forms"), low("t^0, t^1 coefficients vanish");
  const int count = std::max(20, opt.cases / 10);
  while (static_cast<int>(rep.eps_reports.size()) < count) {
    WaveVector k = rnd.nonzero();
    WaveVector eps{rnd.small(-2, 2), rnd.small(-2, 2)};
    if (eps.is_zero() || eps == -2 * k) continue;
    EpsExpansion e = eps_expansion(k, eps);
    auto tuple = [&] { return "k=" + show(k) + " eps=" + show(eps); };
    const Integer d = dot(k, eps);
    const EpsCoefficient& c3 = e.coeffs[3];
    b3.record(sgn(c3.eps2_part) == 0 && sgn(c3.dot2_part) > 0 && c3.t2_coeff == c3.dot2_part * Scalar(d * d),
              tuple);
    if (sgn(cross(k, eps)) != 0) {
      bool neg = true;
      for (int n = 0; n < 3; ++n) neg = neg && sgn(e.coeffs[static_cast<size_t>(n)].t2_coeff) < 0;
      rest.record(neg, tuple);
    }
    bool consistent = true, vanish = true;
    for (const auto& c : e.coeffs) {
      consistent = consistent && c.form_consistent;
      vanish = vanish && c.lower_orders_vanish;
    }
    form.record(consistent, tuple);
    low.record(vanish, tuple);
    rep.eps_reports.push_back(std::move(e));
  }
  for (Check* c : {&b3, &rest, &form, &low}) rep.checks.push_back(c->done());
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (c.hard && !c.passed()) return false;
  return true;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed() ? "PASS " : (c.hard ? "FAIL " : "DIFF ")) << c.name << " (" << c.cases << " cases";
    if (!c.passed()) os << ", " << c.failures << " failing; first: " << c.first_failure;
    os << ")\n";
  }
  auto opt = [](const std::optional<Scalar>& v) { return v ? to_exact_string(*v) : std::string("n/a"); };
  os << "\nconstants\n";
  os << "  route ratio r-sum / closed form     = " << opt(route_ratio) << "\n";
  os << "  kappa (beta=0 normalized / Arnold)  = " << opt(kappa) << "\n";
  os << "  r-sum / Arnold general sum, beta=0  = " << opt(arnold_ratio) << "\n";
  os << "  printed R_klmn / canonical ratio in [" << opt(paper_ratio_min) << ", " << opt(paper_ratio_max)
     << "], sign disagreements " << paper_sign_disagreements << "\n";

  if (!eps_reports.empty()) {
    // The constants do not depend on (k, eps); show the first and flag any disagreement.
    const EpsExpansion& first = eps_reports.front();
    bool uniform = true;
    for (const auto& e : eps_reports)
      for (size_t n = 0; n < 4; ++n)
        uniform = uniform && e.coeffs[n].eps2_constant == first.coeffs[n].eps2_constant &&
                  e.coeffs[n].dot2_constant == first.coeffs[n].dot2_constant;
    os << "\neps expansion match report (b_n t^2 coefficient = c1 |k|^p eps^2 + c2 |k|^q (k,eps)^2)\n";
    os << "  n  p  c1 computed  c1 printed  match   q  c2 computed  c2 printed  match\n";
    for (const auto& c : first.coeffs) {
      os << "  " << c.n << "  " << c.eps2_power << "  " << to_exact_string(c.eps2_constant) << "  "
         << c.printed_eps2_constant.get_str() << "  " << (c.eps2_matches ? "yes" : "NO") << "   " << c.dot2_power
         << "  " << to_exact_string(c.dot2_constant) << "  " << c.printed_dot2_constant.get_str() << "  "
         << (c.dot2_matches ? "yes" : "NO") << "\n";
    }
    os << "  constants identical across " << eps_reports.size() << " (k,eps) pairs: " << (uniform ? "yes" : "NO")
       << "\n";
  }
  os << "\n" << (passed() ? "verify: all hard invariants passed" : "verify: hard invariant FAILURE") << "\n";
  return os.str();
}

VerifyReport run_verify(const VerifyOptions& opt) {
  if (opt.cases < 1) throw Error(ErrorCode::InvalidArgument, "no cases");
  if (opt.component_bound < 1) throw Error(ErrorCode::InvalidArgument, "component bound must be positive");
  if (sgn(opt.connection_divisor) == 0) throw Error(ErrorCode::InvalidArgument, "connection divisor must be nonzero");
  VerifyReport rep;
  Sampler rnd(opt.seed, opt.component_bound);
  lattice_checks(rep, rnd, opt);
  curvature_checks(rep, rnd, opt);
  route_checks(rep, rnd, opt);
  eps_checks(rep, rnd, opt);
  return rep;
}

}  // namespace curvalpha
