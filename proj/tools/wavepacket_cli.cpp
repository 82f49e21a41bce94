#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wavepacket/gabor.hpp"
#include "wavepacket/io.hpp"
#include "wavepacket/oracle.hpp"
#include "wavepacket/wavelet.hpp"

namespace {

using namespace wavepacket;

struct Options {
  std::string kind = "gabor-sharp";
  int n = 0;
  int b = -1;  // -1 selects the balanced default window for Gabor kinds
  std::string beta = "linear";
  double tol = 1e-10;
  std::string out;
  std::string in;
  bool inverse = false;
  int n_min = 4;
  int n_max = 8;
};

int resolve_b(TransformKind kind, int n, int b_flag) {
  const bool gabor =
      kind == TransformKind::GaborSharp || kind == TransformKind::GaborBlended;
  if (!gabor) return 0;
  return b_flag >= 0 ? b_flag : default_b(n);
}

// Large registers use the synthesized diagonal form so the emitted gates stay
// elementary; the sharp and Shannon kinds never carry custom blocks.
Circuit synthesize(TransformKind kind, int n, int b, const BetaProfile& beta,
                   DiagMode mode) {
  switch (kind) {
    case TransformKind::GaborSharp: return sharp_gabor_circuit({n, b, beta});
    case TransformKind::GaborBlended: return blended_gabor_circuit({n, b, beta}, mode);
    case TransformKind::Shannon: return shannon_circuit(n);
    case TransformKind::Meyer: return meyer_circuit(n, beta, mode);
  }
  throw InvalidParams("unknown transform kind");
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(out_path, content);
  }
}

int cmd_build(const Options& o) {
  const TransformKind kind = parse_kind(o.kind);
  const int b = resolve_b(kind, o.n, o.b);
  const Circuit c = synthesize(kind, o.n, b, parse_beta(o.beta), DiagMode::CustomBlocks);
  emit(o.out, circuit_to_json(c));
  return 0;
}

int cmd_verify(const Options& o) {
  if (o.n > 10) throw InvalidParams("verify: n is capped at 10");
  const TransformKind kind = parse_kind(o.kind);
  const int b = resolve_b(kind, o.n, o.b);
  const BetaProfile beta = parse_beta(o.beta);
  const Circuit c = synthesize(kind, o.n, b, beta, DiagMode::CustomBlocks);
  const DenseUnitary actual = circuit_to_unitary(c);
  const DenseUnitary expected =
      dagger(reference_basis(kind, TransformParams{o.n, b, beta}).matrix);
  const double defect = max_abs_diff(actual, expected);
  const bool ok = defect <= o.tol;
  std::printf("kind=%s n=%d b=%d beta=%s max-entry-error=%.3e tol=%.3e -> %s\n",
              o.kind.c_str(), o.n, b, o.beta.c_str(), defect, o.tol,
              ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

int cmd_transform(const Options& o) {
  const TransformKind kind = parse_kind(o.kind);
  const SignalFile input = signal_from_json(read_text_file(o.in));
  if (o.n > 0 && o.n != input.n) {
    throw InvalidParams("transform: --n disagrees with the input signal length");
  }
  if (input.n > 20) throw InvalidParams("transform: n is capped at 20");
  const int b = resolve_b(kind, input.n, o.b);
  Circuit c =
      synthesize(kind, input.n, b, parse_beta(o.beta), DiagMode::Synthesized);
  if (o.inverse) c = adjoint(c);
  emit(o.out, signal_to_json(SignalFile{input.n, apply_circuit(c, input.data)}));
  return 0;
}

int cmd_gatecount(const Options& o) {
  const TransformKind kind = parse_kind(o.kind);
  const BetaProfile beta = parse_beta(o.beta);
  if (o.n_min > o.n_max) throw InvalidParams("gatecount: need n-min <= n-max");
  const bool cubic =
      kind == TransformKind::GaborBlended || kind == TransformKind::Meyer;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const int b = resolve_b(kind, n, o.b);
    const Circuit lowered = lower_multicontrol(
        synthesize(kind, n, b, beta, DiagMode::Synthesized));
    const GateCounts counts = gate_counts(lowered);
    std::size_t multi = 0;
    for (const auto& [arity, count] : counts.multi_control) multi += count;
    const std::size_t total = weighted_total(counts);
    const int power = cubic ? 3 : 2;
    const double scale = std::pow(static_cast<double>(n), power);
    std::printf(
        "n=%2d single=%zu two=%zu custom=%zu multi=%zu weighted=%zu "
        "weighted/n^%d=%.3f\n",
        n, counts.single_qubit, counts.two_qubit, counts.custom_block, multi,
        total, power, static_cast<double>(total) / scale);
  }
  return 0;
}

int cmd_basis_dump(const Options& o) {
  if (o.n > 9) throw InvalidParams("basis-dump: n is capped at 9");
  if (o.out.empty()) throw InvalidParams("basis-dump: --out is required");
  const TransformKind kind = parse_kind(o.kind);
  const int b = resolve_b(kind, o.n, o.b);
  const BetaProfile beta = parse_beta(o.beta);
  const BasisMatrix basis = reference_basis(kind, TransformParams{o.n, b, beta});
  write_text_file(o.out, basis_to_json(basis));
  // The heatmap shows the structural core of each kind: the frequency
  // reallocation map for the blended kinds, the atom matrix otherwise.
  DenseUnitary shown = basis.matrix;
  if (kind == TransformKind::GaborBlended) {
    shown = assemble_vg_matrix(b, o.n, beta);
  } else if (kind == TransformKind::Meyer) {
    shown = circuit_to_unitary(tw_circuit(o.n, beta));
  }
  write_text_file(heatmap_path(o.out), heatmap_to_csv(shown));
  return 0;
}

void add_common_flags(CLI::App* cmd, Options& o, bool with_n) {
  cmd->add_option("--kind", o.kind,
                  "transform kind: gabor-sharp, gabor-blended, shannon, meyer")
      ->required();
  if (with_n) cmd->add_option("--n", o.n, "register size in qubits")->required();
  cmd->add_option("--b", o.b, "window exponent for the Gabor kinds");
  cmd->add_option("--beta", o.beta, "profile: linear, quadratic, deg7");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circuit synthesis toolkit for frequency-compact wave packet transforms"};
  app.require_subcommand(1);
  Options o;

  CLI::App* build = app.add_subcommand("build", "synthesize a circuit as JSON");
  add_common_flags(build, o, true);
  build->add_option("--out", o.out, "output path (stdout when omitted)");

  CLI::App* verify =
      app.add_subcommand("verify", "check a synthesized circuit entrywise");
  add_common_flags(verify, o, true);
  verify->add_option("--tol", o.tol, "maximum entrywise deviation");

  CLI::App* transform =
      app.add_subcommand("transform", "apply a transform to a signal file");
  add_common_flags(transform, o, false);
  transform->add_option("--n", o.n, "expected register size (checked)");
  transform->add_option("--in", o.in, "input signal JSON")->required();
  transform->add_option("--out", o.out, "output path (stdout when omitted)");
  transform->add_flag("--inverse", o.inverse, "apply the inverse transform");

  CLI::App* gatecount =
      app.add_subcommand("gatecount", "tabulate lowered gate counts per size");
  add_common_flags(gatecount, o, false);
  gatecount->add_option("--n-min", o.n_min, "first register size");
  gatecount->add_option("--n-max", o.n_max, "last register size");

  CLI::App* basis_dump =
      app.add_subcommand("basis-dump", "write the atom matrix and a heatmap CSV");
  add_common_flags(basis_dump, o, true);
  basis_dump->add_option("--out", o.out, "output path for the matrix JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(o);
    if (verify->parsed()) return cmd_verify(o);
    if (transform->parsed()) return cmd_transform(o);
    if (gatecount->parsed()) return cmd_gatecount(o);
    if (basis_dump->parsed()) return cmd_basis_dump(o);
  } catch (const WavepacketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
