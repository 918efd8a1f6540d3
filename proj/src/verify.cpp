#include "weightlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "weightlab/admissible.hpp"
#include "weightlab/classify.hpp"
#include "weightlab/oracles.hpp"
#include "weightlab/shadow.hpp"
#include "weightlab/ucext.hpp"

namespace weightlab::verify {

using evaluation::EvaluationDescriptor;
using evaluation::Factor;
using evaluation::Point;
using weightmod::DenseSL2;
using weightmod::WeightModuleDescriptor;
using SystemPtr = std::shared_ptr<const rootsys::RootSystem>;

namespace {

using weightlab::to_string;

Rational Q(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Thrown inside a check to record a counterexample.
struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

struct Context {
  const VerifyConfig& config;
  std::vector<std::string> notes;
  bool skipped = false;

  std::uint64_t seed_for(const std::string& name) const {
    return config.seed ^ std::hash<std::string>{}(name);
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

std::pair<char, int> split_name(const std::string& name) { return {name[0], std::stoi(name.substr(1))}; }

std::vector<std::string> within_rank(const Context& ctx, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names)
    if (split_name(n).second <= ctx.config.max_rank) out.push_back(n);
  return out;
}

SystemPtr system_for(const Context& ctx, const std::string& name) {
  if (ctx.config.inject == "cartan" && name == "A2") {
    // A B2 Cartan matrix presented under the A label.
    return std::make_shared<const rootsys::RootSystem>(
        rootsys::build_root_system_from_cartan('A', {{2, -2}, {-1, 2}}));
  }
  return std::make_shared<const rootsys::RootSystem>(rootsys::build_root_system(name));
}

SystemPtr a1() {
  static const SystemPtr rs = std::make_shared<const rootsys::RootSystem>(rootsys::build_root_system("A1"));
  return rs;
}

const DenseSL2& module_w() {
  static const DenseSL2 w{Q(0), Q(-1, 4)};
  return w;
}

EvaluationDescriptor line(std::vector<std::pair<long, WeightModuleDescriptor>> fs) {
  std::vector<Factor> factors;
  for (auto& [p, m] : fs) factors.push_back({Point{{Q(p)}}, m});
  return evaluation::make_descriptor(evaluation::make_ring({"t"}, {}), a1(), std::move(factors));
}

DenseSL2 random_simple_dense(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-8, 8), den(1, 4);
  while (true) {
    Rational mu = Q(num(rng), den(rng)), tau0 = Q(num(rng), den(rng));
    if (weightmod::is_simple_dense(mu, tau0)) return DenseSL2{mu, tau0};
  }
}

std::string describe(const EvaluationDescriptor& d) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    if (i) os << ", ";
    os << to_string(d.factors[i].point.coords) << ":";
    const auto& m = d.factors[i].module;
    if (const auto* w = std::get_if<DenseSL2>(&m)) {
      os << "W(" << to_string(w->mu) << "," << to_string(w->tau0) << ")";
    } else if (const auto* f = std::get_if<weightmod::FiniteDim>(&m)) {
      os << "L(" << f->lambda[0] << ")";
    } else {
      os << "1";
    }
  }
  os << "]";
  return os.str();
}

// 01
void check_gamma(Context& ctx) {
  const auto names = within_rank(ctx, {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"});
  if (names.empty()) {
    ctx.skipped = true;
    return;
  }
  std::size_t checks = 0;
  for (const auto& name : names) {
    SystemPtr rs;
    try {
      rs = system_for(ctx, name);
    } catch (const InvalidArgument& e) {
      throw Failure{name + ": Cartan matrix rejected: " + e.what()};
    }
    const auto [letter, rank] = split_name(name);
    require(rs->size() == rootsys::classical_root_count(letter, rank),
            name + ": " + std::to_string(rs->size()) + " roots, expected " +
                std::to_string(rootsys::classical_root_count(letter, rank)));
    const auto report = rootsys::verify_gamma_lemma(*rs);
    if (!report.pass) {
      const auto& c = *report.counterexample;
      std::ostringstream os;
      os << name << ": no gamma for alpha=" << rootsys::to_string(c.alpha) << " beta=" << rootsys::to_string(c.beta);
      throw Failure{os.str()};
    }
    checks += report.checks;
  }
  ctx.note(std::to_string(names.size()) + " systems, " + std::to_string(checks) + " triples");
}

// 02
void check_sum_not_root(Context& ctx) {
  const auto names = within_rank(ctx, {"A1", "A2", "A3", "B2", "B3", "C3", "G2"});
  if (names.empty()) {
    ctx.skipped = true;
    return;
  }
  for (const auto& name : names) {
    const auto rs = system_for(ctx, name);
    const auto summary = shadow::enumerate_and_verify(*rs, 1);
    if (!summary.pass()) {
      std::string msg = name + ": " + summary.summary_line();
      if (summary.first_counterexample) msg += "; " + summary.first_counterexample->reason;
      throw Failure{msg};
    }
    ctx.note(name + " " + summary.summary_line());
  }
}

// 03
void check_freudenthal(Context& ctx) {
  const auto names = within_rank(ctx, {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"});
  if (names.empty()) {
    ctx.skipped = true;
    return;
  }
  std::mt19937_64 rng(ctx.seed_for("03"));
  std::uniform_int_distribution<int> coord(0, 4);
  std::size_t weights = 0;
  for (const auto& name : names) {
    const auto rs = system_for(ctx, name);
    for (int trial = 0; trial < 20; ++trial) {
      weightmod::DynkinLabels lambda(static_cast<std::size_t>(rs->rank()));
      for (auto& x : lambda) x = coord(rng);
      const auto total = weightmod::freudenthal(*rs, lambda).total();
      const auto dim = weightmod::weyl_dimension(*rs, lambda);
      require(Integer(total) == dim, name + " lambda=" + to_string(RationalVector(lambda.begin(), lambda.end())) +
                                         ": sum of multiplicities " + std::to_string(total) + " != " + dim.get_str());
      ++weights;
    }
  }
  if (ctx.config.max_rank >= 2) {
    const auto a2 = system_for(ctx, "A2");
    const auto zero = weightmod::freudenthal(*a2, {1, 1}).at({Q(0), Q(0)});
    require(zero == 2, "A2 adjoint zero weight multiplicity " + std::to_string(zero));
  }
  ctx.note(std::to_string(weights) + " highest weights");
}

// 04
void check_dense_module(Context& ctx) {
  const auto& w = module_w();
  require(weightmod::is_simple_dense(w.mu, w.tau0), "W(0,-1/4) is not simple");
  require(weightmod::verify_sl2_relations(w.mu, w.tau0, 50), "sl2 relations fail on W(0,-1/4) within |i| <= 50");
  const auto a = weightmod::dense_action(w.mu, w.tau0, weightmod::Generator::e, 1);
  require(a.index == 2 && a.coefficient == Q(-9, 4), "e v_1 = " + to_string(a.coefficient) + " v_" + std::to_string(a.index));
  ctx.note("e v_1 = -9/4 v_2");
}

// 05
void check_two_dense(Context& ctx) {
  const auto ww = line({{0, module_w()}, {1, module_w()}});
  for (int n : {5, 10, 20, 40}) {
    const auto m = evaluation::tensor_multiplicity(ww, {Q(0)}, n);
    require(m.infinite && m.count == 2 * n + 1,
            "window " + std::to_string(n) + ": count " + std::to_string(m.count) + ", expected " + std::to_string(2 * n + 1));
  }
  const auto v = admissible::classify_admissible(ww, ctx.config.window);
  require(!v.admissible, "W(x)W classified admissible");
  require(v.reason == admissible::Reason::OppositeDirections, "reason " + admissible::to_string(v.reason));
  require(v.witness.holds(), "witness does not hold");
  ctx.note("counts 11, 21, 41, 81");
}

// 06
void check_same_direction(Context& ctx) {
  std::mt19937_64 rng(ctx.seed_for("06"));
  std::vector<std::pair<DenseSL2, DenseSL2>> pairs = {{module_w(), module_w()}};
  for (int k = 0; k < 4; ++k) pairs.emplace_back(random_simple_dense(rng), random_simple_dense(rng));
  for (const auto& [d1, d2] : pairs) {
    for (int n = 0; n <= ctx.config.window; ++n) {
      const auto [w, count] = admissible::growth_witness_same(d1, d2, n);
      require(count >= n + 1, "n=" + std::to_string(n) + " weight " + to_string(w) + ": dimension " +
                                  std::to_string(count));
    }
  }
  ctx.note(std::to_string(pairs.size()) + " pairs, n <= " + std::to_string(ctx.config.window));
}

// 07
void check_dichotomy(Context& ctx) {
  const auto battery = descriptor_battery(ctx.seed_for("battery"), 60);
  std::size_t admissible_count = 0;
  for (const auto& d : battery) {
    const auto verdict = admissible::classify_admissible(d, 4);
    const auto doubling = oracles::window_doubling(d, 8, 2);
    require(verdict.admissible == doubling.stable, describe(d) + ": verdict disagrees with window doubling");
    if (verdict.admissible) {
      require(doubling.maxima.back() == verdict.bound,
              describe(d) + ": bound " + std::to_string(verdict.bound) + " vs observed " +
                  std::to_string(doubling.maxima.back()));
      ++admissible_count;
    } else {
      require(doubling.strictly_increasing, describe(d) + ": maxima not strictly increasing");
    }
  }
  ctx.note(std::to_string(battery.size()) + " descriptors, " + std::to_string(admissible_count) + " admissible");
}

// 08
void check_labelling(Context& ctx) {
  std::mt19937_64 rng(ctx.seed_for("08"));
  auto battery = descriptor_battery(ctx.seed_for("battery"), 60);
  std::vector<EvaluationDescriptor> chosen;
  for (const auto& d : battery)
    if (d.factors.size() >= 2 && chosen.size() < 20) chosen.push_back(d);
  for (const auto& d : battery)
    if (d.factors.size() < 2 && chosen.size() < 20) chosen.push_back(d);

  const std::size_t perms = std::max<std::size_t>(ctx.config.samples, 1);
  for (std::size_t k = 0; k < perms; ++k) {
    const auto& d = chosen[k % chosen.size()];
    auto factors = d.factors;
    std::shuffle(factors.begin(), factors.end(), rng);
    const auto p = evaluation::make_descriptor(d.ring, d.g, factors);
    require(classify::canonical_form(p) == classify::canonical_form(d), describe(d) + ": canonical form changes under permutation");
    require(classify::is_isomorphic(p, d), describe(d) + ": permuted copy not isomorphic");
  }

  require(classify::is_isomorphic(line({{1, weightmod::finite_dim(a1(), {2})}, {2, module_w()}}),
                                  line({{2, module_w()}, {1, weightmod::finite_dim(a1(), {2})}})),
          "permuted-factor pair rejected");
  std::size_t mismatches = 0;
  for (const auto& d : chosen) {
    if (d.factors.empty()) continue;
    auto factors = d.factors;
    factors[0].point = d.ring.num_vars() == 1 ? Point{{Q(101)}} : Point{{Q(101), Q(1, 101)}};
    const auto moved = evaluation::make_descriptor(d.ring, d.g, factors);
    require(!classify::is_isomorphic(moved, d), describe(d) + ": support mismatch accepted");
    ++mismatches;
  }

  std::uniform_int_distribution<long> num(-6, 6), den(1, 3), shift(-10, 10), coin(0, 1);
  std::size_t agreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const DenseSL2 a{Q(num(rng), den(rng)), Q(num(rng), den(rng))};
    DenseSL2 b = weightmod::shift_dense(a, shift(rng));
    if (coin(rng)) b = DenseSL2{b.mu + (coin(rng) ? Q(0) : Q(1, 2)), b.tau0 + Q(num(rng), 4)};
    b.mu.canonicalize();
    b.tau0.canonicalize();
    const bool labels = classify::dense_class(a) == classify::dense_class(b);
    const bool oracle = classify::dense_iso_oracle(a, b, 10).has_value();
    require(labels == oracle, "dense pair (" + to_string(a.mu) + "," + to_string(a.tau0) + ") vs (" + to_string(b.mu) +
                                  "," + to_string(b.tau0) + "): labels " + (labels ? "equal" : "differ") +
                                  ", oracle " + (oracle ? "iso" : "non-iso"));
    agreements += labels;
  }
  ctx.note(std::to_string(perms) + " permutations, " + std::to_string(mismatches) + " mismatched supports, " +
           std::to_string(agreements) + "/200 dense pairs isomorphic");
}

// 09
void check_central_extension(Context& ctx) {
  std::vector<std::pair<std::string, ucext::FiniteAlgebra>> zero;
  for (int m = 1; m <= 6; ++m) zero.emplace_back("k[t]/(t^" + std::to_string(m) + ")", ucext::truncated_polynomial(m));
  for (int m = 1; m <= 4; ++m) zero.emplace_back("k^" + std::to_string(m), ucext::split_product(m));
  for (const auto& [name, a] : zero) {
    const auto q = ucext::central_space(a).quotient_dim();
    require(q == 0, name + ": quotient_dim " + std::to_string(q));
    const auto oracle = oracles::kahler_quotient_dim(a);
    require(oracle == q, name + ": Kahler oracle gives " + std::to_string(oracle));
  }
  auto algebras = zero;
  algebras.emplace_back("k[x,y]/(x,y)^2", ucext::square_zero_plane());
  for (const auto& [name, a] : algebras) {
    const auto r = ucext::verify_jacobi(a, ctx.config.samples, ctx.seed_for("09" + name));
    require(r.pass, name + ": Jacobi fails on " + r.witness.value_or("?"));
  }

  std::size_t traced = 0;
  for (const auto& d : descriptor_battery(ctx.seed_for("battery"), 60)) {
    if (d.dense_count() > 1) continue;
    const auto& vars = d.ring.vars;
    const auto r = parse_polynomial(vars[0], vars);
    const auto s = parse_polynomial(vars.size() > 1 ? vars[1] + "^2 + " + vars[0] : vars[0] + "^2", vars);
    const auto nu = admissible::empirical_max_multiplicity(d, 4).first[0];
    const auto rep = ucext::trace_identity_check(d, r, s, nu, 24);
    require(rep.pass(), describe(d) + " at weight " + to_string(nu) + ": trace " + to_string(rep.trace));
    ++traced;
  }
  ctx.note(std::to_string(zero.size()) + " algebras with zero center, " + std::to_string(traced) + " traces");
}

// 10
void check_convolution(Context& ctx) {
  std::mt19937_64 rng(ctx.seed_for("10"));
  std::size_t compared = 0;
  bool any = false;
  for (const std::string name : {"A1", "A2", "B2", "G2"}) {
    if (split_name(name).second > ctx.config.max_rank) continue;
    any = true;
    const auto g = system_for(ctx, name);
    std::uniform_int_distribution<int> coord(0, g->rank() == 1 ? 4 : 1), nf(1, 3);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Factor> fs;
      Integer dim = 1;
      const int count = nf(rng);
      for (int k = 0; k < count; ++k) {
        weightmod::DynkinLabels lambda(static_cast<std::size_t>(g->rank()));
        for (auto& x : lambda) x = coord(rng);
        dim *= weightmod::weyl_dimension(*g, lambda);
        fs.push_back({Point{{Q(k)}}, weightmod::finite_dim(g, lambda)});
      }
      if (dim > 200) continue;
      const auto d = evaluation::make_descriptor(evaluation::make_ring({"t"}, {}), g, fs);
      const auto all = evaluation::tensor_multiplicities(d);
      require(Integer(all.total()) == dim, name + ": total " + std::to_string(all.total()) + " != " + dim.get_str());
      for (const auto& [w, mult] : all.entries) {
        const auto conv = evaluation::tensor_multiplicity(d, w).count;
        const auto brute = oracles::basis_tuple_count(d, w);
        require(conv == mult && brute == mult, name + " weight " + to_string(w) + ": convolution " +
                                                   std::to_string(conv) + ", enumeration " + std::to_string(brute));
        ++compared;
      }
    }
  }
  if (!any) {
    ctx.skipped = true;
    return;
  }
  ctx.note(std::to_string(compared) + " weights compared");
}

using CheckFn = void (*)(Context&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = {
      {"01_gamma_ideal", check_gamma},
      {"02_sum_not_root", check_sum_not_root},
      {"03_freudenthal_weyl", check_freudenthal},
      {"04_dense_module", check_dense_module},
      {"05_two_dense_growth", check_two_dense},
      {"06_same_direction_growth", check_same_direction},
      {"07_admissibility_dichotomy", check_dichotomy},
      {"08_labelling", check_labelling},
      {"09_central_extension", check_central_extension},
      {"10_convolution_oracle", check_convolution},
  };
  return r;
}

CheckResult run_check(const std::string& name, CheckFn fn, const VerifyConfig& config) {
  CheckResult out;
  out.name = name;
  Context ctx{config, {}, false};
  const auto start = std::chrono::steady_clock::now();
  try {
    fn(ctx);
    out.status = ctx.skipped ? Status::Skipped : Status::Pass;
    if (ctx.skipped) out.detail = "no systems within rank cap " + std::to_string(config.max_rank);
  } catch (const Failure& f) {
    out.status = Status::Fail;
    out.counterexample = f.message;
  } catch (const std::exception& e) {
    out.status = Status::Fail;
    out.counterexample = std::string("error: ") + e.what();
  }
  if (out.detail.empty()) {
    for (std::size_t i = 0; i < ctx.notes.size(); ++i) out.detail += (i ? "; " : "") + ctx.notes[i];
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

bool RunReport::all_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; });
}

bool RunReport::any_fail() const { return !all_pass(); }

std::string RunReport::to_jsonl(bool include_timing) const {
  std::string out;
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = to_string(c.status);
    j["detail"] = c.detail;
    j["counterexample"] = c.counterexample ? nlohmann::ordered_json(*c.counterexample) : nlohmann::ordered_json(nullptr);
    j["seed"] = seed;
    if (include_timing) j["seconds"] = c.seconds;
    out += j.dump() + "\n";
  }
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

RunReport verify_all(const VerifyConfig& config) {
  if (config.max_rank < 1) throw InvalidArgument("max_rank must be at least 1");
  if (config.window < 1) throw InvalidArgument("window must be at least 1");
  if (!config.inject.empty() && config.inject != "cartan") throw InvalidArgument("unknown fault injection '" + config.inject + "'");
  for (const auto& name : config.only) {
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw InvalidArgument("unknown check '" + name + "'");
  }

  std::vector<std::pair<std::string, CheckFn>> selected;
  for (const auto& entry : registry()) {
    if (config.only.empty() || std::find(config.only.begin(), config.only.end(), entry.first) != config.only.end())
      selected.push_back(entry);
  }

  RunReport report;
  report.seed = config.seed;
  report.checks.resize(selected.size());
  unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(selected.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < selected.size();)
      report.checks[i] = run_check(selected[i].first, selected[i].second, config);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < workers; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

std::vector<EvaluationDescriptor> descriptor_battery(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 3), n(0, 4), pts(-6, 6), coin(0, 3);
  const auto line_ring = evaluation::make_ring({"t"}, {});
  const auto torus = evaluation::make_ring({"t", "u"}, {"t*u - 1"});
  std::vector<EvaluationDescriptor> out;
  for (std::size_t k = 0; k < count; ++k) {
    // Cycle the factor count so every size 0..3 appears; bias toward two dense factors now and then.
    const std::size_t factors = k % 4;
    const bool on_torus = coin(rng) == 0;
    std::vector<long> used;
    std::vector<Factor> fs;
    while (fs.size() < factors) {
      long p = pts(rng);
      if (on_torus && p == 0) continue;
      if (std::find(used.begin(), used.end(), p) != used.end()) continue;
      used.push_back(p);
      Point point = on_torus ? Point{{Q(p), Q(1, p)}} : Point{{Q(p)}};
      const int kd = (k % 7 == 3 && fs.size() < 2) ? 0 : kind(rng);
      WeightModuleDescriptor m;
      if (kd == 0 || kd == 1) {
        m = random_simple_dense(rng);
      } else if (kd == 2) {
        m = weightmod::finite_dim(a1(), {n(rng) + 1});
      } else {
        m = weightmod::Trivial{};
      }
      fs.push_back({std::move(point), std::move(m)});
    }
    out.push_back(evaluation::make_descriptor(on_torus ? torus : line_ring, a1(), std::move(fs)));
  }
  return out;
}

}  // namespace weightlab::verify
