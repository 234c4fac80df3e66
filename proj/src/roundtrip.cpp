#include "e8/roundtrip.hpp"

#include "e8/acampo.hpp"
#include "e8/reconstruct.hpp"

#include <stdexcept>

namespace e8 {

RoundTripMode parse_mode(const std::string& text) {
  if (text == "curve") return RoundTripMode::curve;
  if (text == "divisor") return RoundTripMode::divisor;
  if (text == "curves") return RoundTripMode::curves;
  if (text == "divisors") return RoundTripMode::divisors;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

namespace {

bool divisorial(RoundTripMode m) {
  return m == RoundTripMode::divisor || m == RoundTripMode::divisors;
}

}  // namespace

DualGraph roundtrip_input(const RoundTripOptions& opt, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  Rng rng(seq);
  const ElementKind kind = divisorial(opt.mode) ? ElementKind::divisor : ElementKind::curve;
  if (opt.mode == RoundTripMode::curve || opt.mode == RoundTripMode::divisor) {
    const int branch_case = static_cast<int>(index % 5) + 1;
    return build(single_configuration(random_single_spec(rng, branch_case, divisorial(opt.mode)), kind))
        .graph;
  }
  const OracleBounds bounds{opt.max_blowups, opt.branches, kind, true};
  const int blowups = std::uniform_int_distribution<int>(0, opt.max_blowups)(rng);
  return random_graph(rng, bounds, blowups, std::min(2, opt.branches));
}

RoundTripCase run_case(const RoundTripOptions& opt, std::size_t index) {
  RoundTripCase out;
  out.index = index;
  try {
    const DualGraph g = roundtrip_input(opt, index);
    const bool div = divisorial(opt.mode);
    const BinomialProduct p = div ? poincare_divisorial(g) : poincare_curve(g);
    out.series = to_string(p);
    DualGraph h;
    if (p.variables() == 1)
      h = div ? reconstruct_divisor(p) : reconstruct_curve(p);
    else
      h = div ? reconstruct_divisor_collection(p) : reconstruct_curve_collection(p);
    out.pass = canonically_isomorphic(g, h);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<RoundTripCase> run_roundtrips(const RoundTripOptions& opt) {
  std::vector<RoundTripCase> out(opt.count);
  const long n = static_cast<long>(opt.count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = run_case(opt, static_cast<std::size_t>(i));
  return out;
}

std::vector<RoundTripCase> run_roundtrips_serial(const RoundTripOptions& opt) {
  std::vector<RoundTripCase> out;
  for (std::size_t i = 0; i < opt.count; ++i) out.push_back(run_case(opt, i));
  return out;
}

}  // namespace e8
