// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "opsqft/field_io.hpp"
#include "opsqft/ops_split.hpp"
#include "opsqft/qft.hpp"
#include "opsqft/random.hpp"
#include "oracle.hpp"

namespace {

using namespace opsqft;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome within(double measured, double tolerance, const std::string& what) {
  return {measured <= tolerance, what + " " + sci(measured) + " <= " + sci(tolerance)};
}

Outcome both(const Outcome& a, const Outcome& b) {
  return {a.passed && b.passed, a.detail + "; " + b.detail};
}

const std::pair<std::size_t, std::size_t> kSizes[] = {{1, 1}, {2, 3}, {4, 4}, {8, 8}, {16, 16}};
constexpr int kFieldsPerConfig = 5;
constexpr std::size_t kContexts = 22;

// 1 and 2 share the same sweep.
struct Sweep {
  double round_trip = 0.0;
  double oracle = 0.0;
  double seconds = 0.0;
  std::size_t contexts = 0;
  bool has_equal = false, has_opposite = false, has_orthogonal = false;
};

Sweep run_sweep() {
  Sweep s;
  Rng rng(1001);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<OpsContext> contexts = test_contexts(rng, kContexts);
  s.contexts = contexts.size();
  for (const OpsContext& ctx : contexts) {
    s.has_equal |= ctx.degeneracy() == Degeneracy::Equal;
    s.has_opposite |= ctx.degeneracy() == Degeneracy::Opposite;
    s.has_orthogonal |= std::abs(inner(ctx.f().value(), ctx.g().value())) < 1e-12;
    for (const auto& [n1, n2] : kSizes) {
      for (int n = 0; n < kFieldsPerConfig; ++n) {
        const QuaternionField2D h = random_field(rng, n1, n2);
        for (const Family family : {Family::TwoSided, Family::ConjugateC}) {
          const TransformVariant v{family, ctx};
          const Spectrum direct = forward_direct(v, h);
          const Spectrum fast = forward_fast(v, h);
          const QuaternionField2D back_direct = inverse_direct(v, direct);
          const QuaternionField2D back_fast = inverse_fast(v, fast);
          s.round_trip = std::max({s.round_trip, max_abs_diff(back_direct, h), max_abs_diff(back_fast, h)});
          s.oracle = std::max({s.oracle, relative_diff(fast.field, direct.field),
                               relative_diff(inverse_fast(v, direct), back_direct)});
        }
      }
    }
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

Outcome criterion_round_trip(const Sweep& s) {
  const bool coverage = s.contexts >= 20 && s.has_equal && s.has_opposite && s.has_orthogonal;
  Outcome o = both(within(s.round_trip, 1e-10, "max residual"), within(s.seconds, 30.0, "seconds"));
  o.passed = o.passed && coverage;
  o.detail += "; " + std::to_string(s.contexts) + " contexts" + (coverage ? "" : " (missing cases)");
  return o;
}

Outcome criterion_oracle(const Sweep& s) {
  return within(s.oracle, 1e-9, "max relative difference");
}

Outcome criterion_lemma() {
  Rng rng(1003);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const OpsContext ctx = random_context(rng);
    const SplitParts p = split(ctx, random_quaternion(rng));
    const SplitParts q = split(ctx, random_quaternion(rng));
    worst = std::max({worst, std::abs(scalar_part(p.plus * conj(q.minus))),
                      std::abs(scalar_part(p.minus * conj(q.plus)))});
  }
  return within(worst, 1e-12, "max |Sc|");
}

Outcome criterion_frames() {
  Rng rng(1004);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const auto [a, b, c, d] = random_frame(rng);
    for (const Assignment as : {Assignment::AbToMinus, Assignment::AbToPlus}) {
      const OpsContext ctx = determine_context(a, b, c, d, as);
      const bool ab_minus = as == Assignment::AbToMinus;
      for (const Quaternion& q : {a, b}) {
        const SplitParts s = split(ctx, q);
        worst = std::max(worst, norm(ab_minus ? s.plus : s.minus));
      }
      for (const Quaternion& q : {c, d}) {
        const SplitParts s = split(ctx, q);
        worst = std::max(worst, norm(ab_minus ? s.minus : s.plus));
      }
    }
  }
  const OpsContext hand = determine_context(kI, kJ, kK, kOne, Assignment::AbToMinus);
  const bool hand_ok = hand.f().value() == -kK && hand.g().value() == kK;
  Outcome o = within(worst, 1e-10, "max off-plane residual");
  o.passed = o.passed && hand_ok;
  o.detail += hand_ok ? "; (i,j,k,1) -> f=-k, g=k" : "; hand-worked frame wrong";
  return o;
}

Outcome criterion_exponential_identity() {
  Rng rng(1005);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const OpsContext ctx = random_context(rng);
    const SplitParts s = split(ctx, random_quaternion(rng));
    const double a = angle(rng);
    const double b = angle(rng);
    for (const auto& [part, pm] : {std::pair{s.plus, 1.0}, std::pair{s.minus, -1.0}}) {
      const Quaternion lhs = rotate_split(ctx, part, a, b);
      worst = std::max({worst, max_abs_diff(lhs, part * exp_pure(ctx.g(), b - pm * a)),
                        max_abs_diff(lhs, exp_pure(ctx.f(), a - pm * b) * part)});
    }
  }
  return within(worst, 1e-12, "max residual");
}

Outcome criterion_split_theorems() {
  Rng rng(1006);
  const PureUnitQuaternion f = random_pure_unit(rng);
  // Two-unit theorem, conjugate theorem, and the conjugate theorem with g = f.
  const std::vector<TransformVariant> cases{{Family::TwoSided, random_context(rng)},
                                            {Family::ConjugateC, random_context(rng)},
                                            {Family::ConjugateC, make_context(f, f)}};
  double worst = 0.0;
  for (const TransformVariant& v : cases) {
    for (const std::size_t n : {4u, 8u}) {
      const QuaternionField2D h = random_field(rng, n, n);
      const auto fv = oracle::to_vec(v.ctx.f().value());
      const auto gv = oracle::to_vec(v.ctx.g().value());
      const QuaternionField2D full = v.family == Family::TwoSided ? oracle::two_sided(h, fv, gv)
                                                                  : oracle::conjugate(h, fv, gv);
      QuaternionField2D sum(n, n);
      for (const Plane plane : {Plane::Plus, Plane::Minus}) {
        const QuaternionField2D right = split_form(v, h, plane, KernelSide::Right);
        const QuaternionField2D left = split_form(v, h, plane, KernelSide::Left);
        worst = std::max(worst, max_abs_diff(right, left));
        sum = sum + right;
      }
      worst = std::max(worst, max_abs_diff(sum, full));
    }
  }
  return within(worst, 1e-10, "max residual");
}

Outcome criterion_phase_angle(double& reported_round_trip) {
  Rng rng(1007);
  double constancy = 0.0;
  double sum = 0.0;
  reported_round_trip = 0.0;
  for (const OpsContext& ctx : test_contexts(rng, 8)) {
    const TransformVariant v{Family::PhaseAngleD, ctx};
    const QuaternionField2D h = random_field(rng, 8, 8);
    const SplitSpectra parts = split_spectra(v, h);
    const QuaternionField2D full = forward_direct(v, h).field;
    sum = std::max(sum, max_abs_diff(parts.plus.field + parts.minus.field, full));
    for (std::size_t k1 = 0; k1 < 8; ++k1) {
      for (std::size_t k2 = 0; k2 < 8; ++k2) {
        constancy = std::max({constancy, max_abs_diff(parts.plus.field(k1, k2), parts.plus.field(0, k2)),
                              max_abs_diff(parts.minus.field(k1, k2), parts.minus.field(k1, 0))});
      }
    }
    reported_round_trip =
        std::max(reported_round_trip, max_abs_diff(inverse_direct(v, forward_direct(v, h)), h));
  }
  return both(within(constancy, 1e-10, "axis constancy"), within(sum, 1e-10, "sum residual"));
}

Outcome criterion_coefficients() {
  const OpsContext ij(PureUnitQuaternion(1, 0, 0), PureUnitQuaternion(0, 1, 0));
  Rng rng(1008);
  bool exact = true;
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Quaternion q = random_quaternion(rng);
    const Coefficients c = coefficients(ij, q);
    exact = exact && c.q1 == 0.5 * (q.r + q.k) && c.q2 == 0.5 * (q.i - q.j) &&
            c.q3 == 0.5 * (q.r - q.k) && c.q4 == 0.5 * (q.i + q.j);
    const OpsContext ctx = random_context(rng);
    worst = std::max(worst, max_abs_diff(reconstruct(ctx, coefficients(ctx, q)), q));
  }
  Outcome o = within(worst, 1e-12, "reconstruction residual");
  o.passed = o.passed && exact;
  o.detail = std::string(exact ? "f=i,g=j exact" : "f=i,g=j NOT exact") + "; " + o.detail;
  return o;
}

Outcome criterion_simplex() {
  const PureUnitQuaternion i(1, 0, 0);
  const OpsContext ii(i, i);
  Rng rng(1009);
  bool exact = true;
  for (int n = 0; n < 1000; ++n) {
    const Quaternion q = random_quaternion(rng);
    const SplitParts s = split(ii, q);
    exact = exact && s.plus == Quaternion{0, 0, q.j, q.k} && s.minus == Quaternion{q.r, q.i, 0, 0};
  }
  return {exact, exact ? "q+ = qj j + qk k, q- = qr + qi i exactly" : "split not exact"};
}

Outcome criterion_energy() {
  Rng rng(1010);
  double worst = 0.0;
  for (const OpsContext& ctx : test_contexts(rng, 10)) {
    const QuaternionField2D h = random_field(rng, 16, 16);
    const double spectral = energy(forward_fast({Family::TwoSided, ctx}, h).field) / 256.0;
    worst = std::max(worst, std::abs(spectral - energy(h)) / energy(h));
  }
  return within(worst, 1e-9, "max relative energy error");
}

Outcome criterion_cli() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "opsqft_acceptance";
  fs::create_directories(dir);
  const auto p = [&](const char* name) { return (dir / name).string(); };
  {
    std::ofstream ppm(p("synthetic.ppm"), std::ios::binary);
    ppm << "P6\n16 16\n255\n";
    for (int y = 0; y < 16; ++y) {
      for (int x = 0; x < 16; ++x) {
        ppm.put(static_cast<char>(16 * x + y));
        ppm.put(static_cast<char>((37 * x * y) % 256));
        ppm.put(static_cast<char>(255 - 15 * y));
      }
    }
  }
  std::ostringstream out, err;
  auto cli = [&](std::vector<std::string> args) {
    args.insert(args.begin(), "opsqft-cli");
    return cli::run(args, out, err);
  };
  const std::vector<std::string> units{"--variant", "twosided", "--f", "1,0,0", "--g", "0,1,0"};
  auto with_units = [&](std::vector<std::string> args) {
    args.insert(args.end(), units.begin(), units.end());
    return args;
  };
  int rc = cli({"import-ppm", "--in", p("synthetic.ppm"), "--out", p("image.qf2d")});
  rc |= cli(with_units({"transform", "--in", p("image.qf2d"), "--out", p("spectrum.qf2d")}));
  rc |= cli(with_units({"transform", "--inverse", "--in", p("spectrum.qf2d"), "--out", p("back.qf2d")}));
  rc |= cli({"export-pgm", "--in", p("spectrum.qf2d"), "--out", p("spectrum.pgm"), "--centered"});
  if (rc != 0) {
    fs::remove_all(dir);
    return {false, "pipeline command failed: " + err.str()};
  }
  const double residual = max_abs_diff(read_field(p("back.qf2d")), read_field(p("image.qf2d")));
  const bool exported = fs::exists(p("spectrum.pgm"));
  fs::remove_all(dir);

  std::ostringstream vout, verr;
  const int verify_rc = cli::run({"opsqft-cli", "verify", "--seed", "42"}, vout, verr);
  Outcome o = within(residual, 1e-10, "recovered field residual");
  o.passed = o.passed && exported && verify_rc == 0;
  o.detail += "; verify --seed 42 exit " + std::to_string(verify_rc);
  return o;
}

}  // namespace

int main() {
  const Sweep sweep = run_sweep();
  double phased_round_trip = 0.0;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  round trip (twosided, conjc)", [&] { return criterion_round_trip(sweep); }},
      {"2  fast vs direct oracle", [&] { return criterion_oracle(sweep); }},
      {"3  split plane orthogonality", criterion_lemma},
      {"4  plane determination", criterion_frames},
      {"5  exponential factor identity", criterion_exponential_identity},
      {"6  split theorems", criterion_split_theorems},
      {"7  phased structure", [&] { return criterion_phase_angle(phased_round_trip); }},
      {"8  coefficient formulas", criterion_coefficients},
      {"9  simplex/perplex split", criterion_simplex},
      {"10 energy preservation", criterion_energy},
      {"11 CLI end to end", criterion_cli},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("%s  %-34s %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("INFO  phased round trip residual (not gated): %s\n", sci(phased_round_trip).c_str());
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
