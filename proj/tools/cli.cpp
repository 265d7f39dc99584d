#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "opsqft/errors.hpp"
#include "opsqft/field_io.hpp"
#include "opsqft/ops_split.hpp"
#include "opsqft/qft.hpp"
#include "opsqft/verify.hpp"

namespace opsqft::cli {

namespace {

struct Options {
  std::string variant;
  std::string f = "1,0,0";
  std::string g = "0,1,0";
  bool inverse = false;
  bool fast = false;
  bool direct = false;
  std::string in;
  std::string out;
  std::string out_plus;
  std::string out_minus;
  std::string q;
  std::string a, b, c, d;
  std::string assign = "minus";
  std::uint64_t seed = 42;
  bool centered = false;
};

int cmd_transform(const Options& o, std::ostream& out) {
  const TransformVariant variant = parse_variant(o.variant, o.f, o.g);
  const QuaternionField2D field = read_field(o.in);
  QuaternionField2D result;
  if (o.inverse) {
    Spectrum spec{field, variant};
    spec.field.set_domain(Domain::Frequency);
    result = o.direct ? inverse_direct(variant, spec) : inverse_fast(variant, spec);
  } else {
    result = o.direct ? forward_direct(variant, field).field : forward_fast(variant, field).field;
  }
  write_field(result, o.out);
  out << (o.inverse ? "inverse " : "forward ") << family_name(variant.family) << ' '
      << result.n1() << 'x' << result.n2() << " -> " << o.out << '\n';
  return kSuccess;
}

int cmd_split(const Options& o, std::ostream& out) {
  const OpsContext ctx = make_context(parse_pure_unit(o.f), parse_pure_unit(o.g));
  const SplitFields parts = split_field(ctx, read_field(o.in));
  write_field(parts.plus, o.out_plus);
  write_field(parts.minus, o.out_minus);
  out << "q+ -> " << o.out_plus << "\nq- -> " << o.out_minus << '\n';
  return kSuccess;
}

void print_coefficients(std::ostream& out, const Coefficients& c) {
  out << format_real(c.q1) << ' ' << format_real(c.q2) << ' ' << format_real(c.q3) << ' '
      << format_real(c.q4) << '\n';
}

int cmd_coeffs(const Options& o, std::ostream& out) {
  if (o.q.empty() && o.in.empty()) throw ParseError("coeffs needs --in or --q");
  const OpsContext ctx = make_context(parse_pure_unit(o.f), parse_pure_unit(o.g));
  if (!o.q.empty()) {
    print_coefficients(out, coefficients(ctx, parse_quaternion(o.q)));
    return kSuccess;
  }
  const QuaternionField2D field = read_field(o.in);
  for (std::size_t m1 = 0; m1 < field.n1(); ++m1) {
    for (std::size_t m2 = 0; m2 < field.n2(); ++m2) {
      out << m1 << ' ' << m2 << ' ';
      print_coefficients(out, coefficients(ctx, field(m1, m2)));
    }
  }
  return kSuccess;
}

int cmd_planes(const Options& o, std::ostream& out) {
  Assignment assignment;
  if (o.assign == "minus") {
    assignment = Assignment::AbToMinus;
  } else if (o.assign == "plus") {
    assignment = Assignment::AbToPlus;
  } else {
    throw ParseError("--assign must be 'minus' or 'plus', got '" + o.assign + "'");
  }
  const OpsContext ctx =
      determine_context(parse_quaternion(o.a), parse_quaternion(o.b), parse_quaternion(o.c),
                        parse_quaternion(o.d), assignment);
  out << "f = " << format_quaternion(ctx.f().value()) << '\n'
      << "g = " << format_quaternion(ctx.g().value()) << '\n'
      << "degenerate = " << (ctx.degenerate() ? "true" : "false") << '\n';
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerifyReport report = run_verification(o.seed);
  print_report(report, out);
  return report.passed() ? kSuccess : kVerificationFailure;
}

int cmd_import(const Options& o, std::ostream& out) {
  const QuaternionField2D field = read_image_ppm(o.in);
  write_field(field, o.out);
  out << "imported " << field.n1() << 'x' << field.n2() << " -> " << o.out << '\n';
  return kSuccess;
}

int cmd_export(const Options& o, std::ostream& out) {
  export_magnitude_pgm(read_field(o.in), o.out, o.centered);
  out << "magnitude -> " << o.out << '\n';
  return kSuccess;
}

int cmd_info(const Options& o, std::ostream& out) {
  const Qf2dHeader h = read_header(o.in);
  out << "format = QF2D\nversion = " << h.version << "\nn1 = " << h.n1 << "\nn2 = " << h.n2
      << '\n';
  return kSuccess;
}

bool is_file_error(const Error& e) {
  return dynamic_cast<const IoFailure*>(&e) || dynamic_cast<const BadMagic*>(&e) ||
         dynamic_cast<const BadVersion*>(&e) || dynamic_cast<const TruncatedPayload*>(&e) ||
         dynamic_cast<const UnsupportedFormat*>(&e) || dynamic_cast<const MalformedHeader*>(&e);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal planes split and OPS quaternion Fourier transforms"};
  app.require_subcommand(1);
  Options o;

  auto add_units = [&](CLI::App* sub) {
    sub->add_option("--f", o.f, "first pure unit as x,y,z")->capture_default_str();
    sub->add_option("--g", o.g, "second pure unit as x,y,z")->capture_default_str();
  };

  auto* transform = app.add_subcommand("transform", "forward or inverse OPS-QFT of a QF2D file");
  transform->add_option("--variant", o.variant, "twosided, phased or conjc")->required();
  add_units(transform);
  transform->add_flag("--inverse", o.inverse, "apply the inverse transform");
  auto* fast = transform->add_flag("--fast", o.fast, "FFT path (default)");
  transform->add_flag("--direct", o.direct, "literal double sum")->excludes(fast);
  transform->add_option("--in", o.in)->required();
  transform->add_option("--out", o.out)->required();

  auto* split_cmd = app.add_subcommand("split", "split a field into q+ and q- parts");
  add_units(split_cmd);
  split_cmd->add_option("--in", o.in)->required();
  split_cmd->add_option("--out-plus", o.out_plus)->required();
  split_cmd->add_option("--out-minus", o.out_minus)->required();

  auto* coeffs = app.add_subcommand("coeffs", "coordinates in the basis 1+fg, f-g, 1-fg, f+g");
  add_units(coeffs);
  auto* coeff_in = coeffs->add_option("--in", o.in, "QF2D field");
  coeffs->add_option("--q", o.q, "single quaternion r,i,j,k")->excludes(coeff_in);

  auto* planes = app.add_subcommand("planes", "choose f, g from two orthogonal analysis planes");
  planes->add_option("--a", o.a, "pure unit spanning the first plane")->required();
  planes->add_option("--b", o.b)->required();
  planes->add_option("--c", o.c, "pure unit spanning the second plane")->required();
  planes->add_option("--d", o.d, "quaternion, or 'scalar' for 1")->required();
  planes->add_option("--assign", o.assign, "plane receiving {a, b}: minus or plus")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the identity suites on random data");
  verify->add_option("--seed", o.seed)->capture_default_str();

  auto* import = app.add_subcommand("import-ppm", "read a P3/P6 image as a pure quaternion field");
  import->add_option("--in", o.in)->required();
  import->add_option("--out", o.out)->required();

  auto* exporter = app.add_subcommand("export-pgm", "write per-sample norms as a P5 image");
  exporter->add_option("--in", o.in)->required();
  exporter->add_option("--out", o.out)->required();
  exporter->add_flag("--centered", o.centered, "move the zero frequency to the center");

  auto* info = app.add_subcommand("info", "print a QF2D header");
  info->add_option("--in", o.in)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (transform->parsed()) return cmd_transform(o, out);
    if (split_cmd->parsed()) return cmd_split(o, out);
    if (coeffs->parsed()) return cmd_coeffs(o, out);
    if (planes->parsed()) return cmd_planes(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (import->parsed()) return cmd_import(o, out);
    if (exporter->parsed()) return cmd_export(o, out);
    if (info->parsed()) return cmd_info(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_file_error(e) ? kIoError : kUsageError;
  }
  return kUsageError;
}

}  // namespace opsqft::cli
