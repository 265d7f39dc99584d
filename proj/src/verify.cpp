#include "opsqft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <utility>

#include "opsqft/complex_embed.hpp"
#include "opsqft/fft.hpp"
#include "opsqft/ops_split.hpp"
#include "opsqft/qft.hpp"
#include "opsqft/random.hpp"

namespace opsqft {

namespace {

constexpr double kPi = std::numbers::pi;

/// Accumulates the worst residual of one named identity.
class Check {
 public:
  Check(std::string name, double tolerance, bool gated = true)
      : result_{std::move(name), 0.0, tolerance, gated} {}

  void observe(double residual) {
    // NaN must fail the check.
    if (!(residual <= result_.residual)) result_.residual = residual;
  }

  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

void algebra_checks(Rng& rng, std::vector<CheckResult>& out) {
  Check multiplicative("norm(pq) = norm(p) norm(q)", 1e-12);
  Check antihom("conj(pq) = conj(q) conj(p)", 1e-14);
  Check inv("q q^-1 = q^-1 q = 1", 1e-12);
  Check exps("e^{f s} e^{f t} = e^{f (s+t)}", 1e-12);
  for (int n = 0; n < 1000; ++n) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    const double np = norm(p) * norm(q);
    multiplicative.observe(std::abs(norm(p * q) - np) / np);
    antihom.observe(max_abs_diff(conj(p * q), conj(q) * conj(p)));
    inv.observe(std::max(max_abs_diff(q * inverse(q), kOne), max_abs_diff(inverse(q) * q, kOne)));
    const PureUnitQuaternion f = random_pure_unit(rng);
    const double s = uniform(rng, -kPi, kPi);
    const double t = uniform(rng, -kPi, kPi);
    exps.observe(max_abs_diff(exp_pure(f, s) * exp_pure(f, t), exp_pure(f, s + t)));
  }
  for (const Check& c : {multiplicative, antihom, inv, exps}) out.push_back(c.result());
}

void split_checks(Rng& rng, std::vector<CheckResult>& out) {
  Check complete("split completeness q+ + q- = q", 1e-15);
  Check idempotent("split idempotence", 1e-14);
  Check in_plane("split parts lie in their planes", 1e-12);
  Check lemma("Sc(p+ conj(q-)), Sc(p- conj(q+)) vanish", 1e-12);
  Check involution("half turn applied twice is identity", 1e-14);
  Check identity("e^{af} q+- e^{bg} = q+- e^{(b-+a)g} = e^{(a-+b)f} q+-", 1e-12);
  for (int n = 0; n < 1000; ++n) {
    // Mix in degenerate contexts so the one-unit split is covered too.
    const OpsContext ctx = n % 10 == 0   ? OpsContext(random_pure_unit(rng), PureUnitQuaternion(0, 0, 1))
                           : n % 10 == 1 ? [&] { auto f = random_pure_unit(rng); return OpsContext(f, f); }()
                           : n % 10 == 2 ? [&] { auto f = random_pure_unit(rng); return OpsContext(f, -f); }()
                                         : random_context(rng);
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    const SplitParts sp = split(ctx, p);
    const SplitParts sq = split(ctx, q);
    complete.observe(max_abs_diff(sq.plus + sq.minus, q));
    const SplitParts again = split(ctx, sq.plus);
    idempotent.observe(std::max(max_abs_diff(again.plus, sq.plus), norm(again.minus)));
    const PlaneEmbedding plus = plane_embedding(ctx, Plane::Plus);
    const PlaneEmbedding minus = plane_embedding(ctx, Plane::Minus);
    in_plane.observe(std::max(plus.residual(sq.plus), minus.residual(sq.minus)));
    lemma.observe(std::max(std::abs(scalar_part(sp.plus * conj(sq.minus))),
                           std::abs(scalar_part(sp.minus * conj(sq.plus)))));
    involution.observe(max_abs_diff(half_turn(ctx, half_turn(ctx, q)), q));

    const double a = uniform(rng, -kPi, kPi);
    const double b = uniform(rng, -kPi, kPi);
    const auto& f = ctx.f();
    const auto& g = ctx.g();
    for (const auto& [part, pm] : {std::pair{sq.plus, 1.0}, std::pair{sq.minus, -1.0}}) {
      const Quaternion both = exp_pure(f, a) * part * exp_pure(g, b);
      identity.observe(max_abs_diff(both, part * exp_pure(g, b - pm * a)));
      identity.observe(max_abs_diff(both, exp_pure(f, a - pm * b) * part));
    }
  }
  for (const Check& c : {complete, idempotent, in_plane, lemma, involution, identity}) {
    out.push_back(c.result());
  }
}

double plane_leak(const OpsContext& ctx, const Quaternion& q, Plane plane) {
  const SplitParts s = split(ctx, q);
  return norm(plane == Plane::Plus ? s.minus : s.plus);
}

void frame_checks(Rng& rng, std::vector<CheckResult>& out) {
  Check frames("plane determination from orthogonal frames", 1e-10);
  for (int n = 0; n < 100; ++n) {
    const auto [a, b, c, d] = random_frame(rng);
    for (const Assignment as : {Assignment::AbToMinus, Assignment::AbToPlus}) {
      const OpsContext ctx = determine_context(a, b, c, d, as);
      const Plane ab = as == Assignment::AbToMinus ? Plane::Minus : Plane::Plus;
      const Plane cd = ab == Plane::Minus ? Plane::Plus : Plane::Minus;
      for (const Quaternion& q : {a, b}) frames.observe(plane_leak(ctx, q, ab));
      for (const Quaternion& q : {c, d}) frames.observe(plane_leak(ctx, q, cd));
    }
  }
  const OpsContext hand = determine_context(kI, kJ, kK, kOne, Assignment::AbToMinus);
  frames.observe(max_abs_diff(hand.f().value(), -kK));
  frames.observe(max_abs_diff(hand.g().value(), kK));
  out.push_back(frames.result());

  Check coeff("coefficients then reconstruct", 1e-12);
  Check example("coefficients for f=i, g=j (exact)", 0.0);
  const OpsContext ij(PureUnitQuaternion(1, 0, 0), PureUnitQuaternion(0, 1, 0));
  Check simplex("simplex/perplex split for f=g=i (exact)", 0.0);
  const OpsContext ii(PureUnitQuaternion(1, 0, 0), PureUnitQuaternion(1, 0, 0));
  for (int n = 0; n < 1000; ++n) {
    const OpsContext ctx = random_context(rng);
    const Quaternion q = random_quaternion(rng);
    coeff.observe(max_abs_diff(reconstruct(ctx, coefficients(ctx, q)), q));
    const Coefficients c = coefficients(ij, q);
    example.observe(std::max({std::abs(c.q1 - 0.5 * (q.r + q.k)), std::abs(c.q2 - 0.5 * (q.i - q.j)),
                              std::abs(c.q3 - 0.5 * (q.r - q.k)), std::abs(c.q4 - 0.5 * (q.i + q.j))}));
    const SplitParts s = split(ii, q);
    simplex.observe(std::max(max_abs_diff(s.plus, Quaternion{0, 0, q.j, q.k}),
                             max_abs_diff(s.minus, Quaternion{q.r, q.i, 0, 0})));
  }
  for (const Check& c : {coeff, example, simplex}) out.push_back(c.result());
}

void fft_checks(Rng& rng, std::vector<CheckResult>& out) {
  Check agree("fft2 matches direct DFT (relative)", 1e-9);
  for (const auto& [n1, n2] : {std::pair{8, 8}, std::pair{6, 10}, std::pair{1, 16}, std::pair{5, 4}}) {
    ComplexField2D z(n1, n2);
    for (auto& v : z.data()) v = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
    for (const Sign s1 : {Sign::Negative, Sign::Positive}) {
      for (const Sign s2 : {Sign::Negative, Sign::Positive}) {
        const ComplexField2D ref = dft2_direct(z, {s1, s2});
        agree.observe(relative_diff(fft2(z, {s1, s2}), ref));
      }
    }
  }
  out.push_back(agree.result());
}

void transform_checks(Rng& rng, std::vector<CheckResult>& out) {
  Check round_two("twosided round trip", 1e-10);
  Check round_conj("conjc round trip", 1e-10);
  Check oracle("fast vs direct transforms (relative)", 1e-9);
  Check linear("real linearity", 1e-10);
  Check energy_check("twosided energy preservation (relative)", 1e-9);
  Check commute("transform commutes with split", CommutationReport::kTolerance);
  Check d_round("phased round trip (reported only)", 0.0, false);

  const std::vector<OpsContext> contexts = test_contexts(rng, 20);
  const std::pair<std::size_t, std::size_t> sizes[] = {{1, 1}, {2, 3}, {4, 4}, {8, 8}, {16, 16}};
  for (const auto& ctx : contexts) {
    for (const auto& [n1, n2] : sizes) {
      const QuaternionField2D h = random_field(rng, n1, n2);
      for (const Family family : {Family::TwoSided, Family::PhaseAngleD, Family::ConjugateC}) {
        const TransformVariant v{family, ctx};
        const Spectrum direct = forward_direct(v, h);
        const Spectrum fast = forward_fast(v, h);
        oracle.observe(relative_diff(fast.field, direct.field));
        const QuaternionField2D back_direct = inverse_direct(v, direct);
        const QuaternionField2D back_fast = inverse_fast(v, direct);
        oracle.observe(relative_diff(back_fast, back_direct));
        switch (family) {
          case Family::TwoSided:
            round_two.observe(max_abs_diff(back_direct, h));
            round_two.observe(max_abs_diff(inverse_fast(v, fast), h));
            energy_check.observe(std::abs(energy(h) - energy(direct.field) / static_cast<double>(n1 * n2)) /
                                 energy(h));
            break;
          case Family::ConjugateC:
            round_conj.observe(max_abs_diff(back_direct, h));
            round_conj.observe(max_abs_diff(inverse_fast(v, fast), h));
            break;
          case Family::PhaseAngleD:
            d_round.observe(max_abs_diff(back_direct, h));
            break;
        }
        if (n1 == 4) {
          const QuaternionField2D h2 = random_field(rng, n1, n2);
          const double alpha = uniform(rng, -2, 2);
          const double beta = uniform(rng, -2, 2);
          const QuaternionField2D lhs = forward_fast(v, alpha * h + beta * h2).field;
          const QuaternionField2D rhs = alpha * fast.field + beta * forward_fast(v, h2).field;
          linear.observe(max_abs_diff(lhs, rhs));
          const CommutationReport rep = transform_commutes_with_split(v, h);
          commute.observe(std::max(rep.residual_plus, rep.residual_minus));
        }
      }
    }
  }
  for (const Check& c : {round_two, round_conj, oracle, linear, energy_check, commute}) {
    out.push_back(c.result());
  }

  Check forms("split theorem left and right forms agree and sum to the transform", 1e-10);
  Check d_const("phased parts constant along the missing axis", 1e-10);
  for (std::size_t n : {4, 8}) {
    for (std::size_t c = 0; c < 6; ++c) {
      const OpsContext& ctx = contexts[c];
      const QuaternionField2D h = random_field(rng, n, n);
      for (const Family family : {Family::TwoSided, Family::PhaseAngleD, Family::ConjugateC}) {
        const TransformVariant v{family, ctx};
        const QuaternionField2D full = forward_direct(v, h).field;
        const SplitSpectra parts = split_spectra(v, h);
        QuaternionField2D sum(n, n, Domain::Frequency);
        for (const Plane plane : {Plane::Plus, Plane::Minus}) {
          const QuaternionField2D right = split_form(v, h, plane, KernelSide::Right);
          const QuaternionField2D left = split_form(v, h, plane, KernelSide::Left);
          const QuaternionField2D& part = plane == Plane::Plus ? parts.plus.field : parts.minus.field;
          forms.observe(max_abs_diff(right, left));
          forms.observe(max_abs_diff(right, part));
          sum = sum + right;
        }
        forms.observe(max_abs_diff(sum, full));
        if (family == Family::PhaseAngleD) {
          for (std::size_t k1 = 0; k1 < n; ++k1) {
            for (std::size_t k2 = 0; k2 < n; ++k2) {
              d_const.observe(max_abs_diff(parts.plus.field(k1, k2), parts.plus.field(0, k2)));
              d_const.observe(max_abs_diff(parts.minus.field(k1, k2), parts.minus.field(k1, 0)));
            }
          }
        }
      }
    }
  }
  out.push_back(forms.result());
  out.push_back(d_const.result());
  out.push_back(d_round.result());
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

VerifyReport run_verification(std::uint64_t seed) {
  Rng rng(seed);
  VerifyReport report;
  algebra_checks(rng, report.checks);
  split_checks(rng, report.checks);
  frame_checks(rng, report.checks);
  fft_checks(rng, report.checks);
  transform_checks(rng, report.checks);
  return report;
}

void print_report(const VerifyReport& report, std::ostream& os) {
  char line[256];
  for (const CheckResult& c : report.checks) {
    const char* status = !c.gated ? "REPORT" : c.passed() ? "PASS" : "FAIL";
    std::snprintf(line, sizeof line, "%-6s %-68s max %.3e  tol %.0e\n", status, c.name.c_str(),
                  c.residual, c.tolerance);
    os << line;
  }
  os << (report.passed() ? "all checks passed\n" : "verification FAILED\n");
}

}  // namespace opsqft
