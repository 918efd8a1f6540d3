#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "weightlab/admissible.hpp"
#include "weightlab/classify.hpp"
#include "weightlab/io.hpp"
#include "weightlab/shadow.hpp"
#include "weightlab/verify.hpp"

using namespace weightlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitNotAdmissible = 3;

RationalVector parse_list(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& q : parse_list(text)) {
    if (!is_integer(q)) throw InvalidArgument("expected integers, got " + to_string(q));
    out.push_back(static_cast<int>(to_int64(q)));
  }
  return out;
}

void print_matrix(const rootsys::CartanMatrix& m) {
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "  ") << std::setw(2) << row[j];
    std::cout << "\n";
  }
}

int rootsys_info(const std::string& name) {
  const auto rs = rootsys::build_root_system(name);
  std::cout << rs.name() << "\n";
  std::cout << "roots: " << rs.size() << " (" << rs.positive_count() << " positive)\n";
  std::cout << "highest root: " << rootsys::to_string(rs.highest()) << "\n";
  std::cout << "cartan:\n";
  print_matrix(rs.cartan());
  return kExitOk;
}

int rootsys_verify_gamma(int max_rank) {
  if (max_rank < 1 || max_rank > rootsys::kMaxRank)
    throw InvalidArgument("--max-rank must be in 1.." + std::to_string(rootsys::kMaxRank));
  bool pass = true;
  for (char letter : std::string("ABCDEFG")) {
    for (int rank = 1; rank <= max_rank; ++rank) {
      try {
        rootsys::classical_root_count(letter, rank);
      } catch (const InvalidArgument&) {
        continue;
      }
      const auto rs = rootsys::build_root_system(letter, rank);
      try {
        const auto r = rootsys::verify_gamma_lemma(rs);
        std::cout << rs.name() << ": bases=" << r.bases << " checks=" << r.checks << " "
                  << (r.pass ? "pass" : "FAIL");
        if (r.counterexample) {
          std::cout << " alpha=" << rootsys::to_string(r.counterexample->alpha)
                    << " beta=" << rootsys::to_string(r.counterexample->beta);
        }
        std::cout << "\n";
        pass = pass && r.pass;
      } catch (const ResourceLimit& e) {
        std::cout << rs.name() << ": skipped (" << e.what() << ")\n";
      }
    }
  }
  return pass ? kExitOk : kExitCounterexample;
}

int shadow_verify(const std::string& name, std::size_t samples, std::uint64_t seed) {
  const auto rs = rootsys::build_root_system(name);
  const auto summary = rs.size() <= shadow::kMaxEnumerationRoots ? shadow::enumerate_and_verify(rs)
                                                                 : shadow::sample_and_verify(rs, samples, seed);
  if (rs.size() > shadow::kMaxEnumerationRoots) std::cout << "sampled " << samples << " convex hulls, seed " << seed << "\n";
  std::cout << summary.summary_line() << "\n";
  if (summary.first_counterexample) {
    std::cout << "counterexample: T = {";
    const auto& t = summary.first_counterexample->T;
    for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? ", " : "") << rootsys::to_string(t[i]);
    std::cout << "}: " << summary.first_counterexample->reason << "\n";
  }
  return summary.pass() ? kExitOk : kExitCounterexample;
}

int weightmod_freudenthal(const std::string& name, const std::string& highest) {
  const auto rs = rootsys::build_root_system(name);
  const auto m = weightmod::freudenthal(rs, parse_int_list(highest));
  for (const auto& [w, k] : m.entries) std::cout << to_string(w) << ": " << k << "\n";
  std::cout << "dimension: " << m.total() << "\n";
  return kExitOk;
}

int weightmod_dense_check(const std::string& mu_text, const std::string& tau0_text, int window) {
  const auto mu = parse_rational(mu_text), tau0 = parse_rational(tau0_text);
  const bool simple = weightmod::is_simple_dense(mu, tau0);
  const bool relations = weightmod::verify_sl2_relations(mu, tau0, window);
  std::cout << "simple: " << (simple ? "yes" : "no") << "\n";
  std::cout << "relations on |i| <= " << window << ": " << (relations ? "pass" : "FAIL") << "\n";
  std::cout << "casimir: " << to_string(weightmod::casimir_invariant(mu, tau0)) << "\n";
  for (int i = -2; i <= 2; ++i) {
    const auto a = weightmod::dense_action(mu, tau0, weightmod::Generator::e, i);
    std::cout << "e v_" << i << " = " << to_string(a.coefficient) << " v_" << a.index << "\n";
  }
  return relations ? kExitOk : kExitCounterexample;
}

int eval_mult(const std::string& path, const std::string& weight, std::optional<int> window) {
  const auto d = io::load_descriptor(path);
  const auto m = evaluation::tensor_multiplicity(d, parse_list(weight), window);
  std::cout << "multiplicity: " << m.count << (m.infinite ? " (windowed; weight space is infinite-dimensional)" : "")
            << "\n";
  return kExitOk;
}

int admissible_classify(const std::string& path, int window) {
  const auto d = io::load_descriptor(path);
  const auto v = admissible::classify_admissible(d, window);
  if (v.admissible) {
    std::cout << "Admissible(bound=" << v.bound << ")\n";
    return kExitOk;
  }
  std::cout << "NotAdmissible(" << admissible::to_string(v.reason) << ")\n";
  std::cout << "n\tweight\tlower_bound\tobserved\n";
  for (const auto& p : v.witness.points)
    std::cout << p.n << "\t" << to_string(p.weight) << "\t" << p.lower_bound << "\t" << p.observed << "\n";
  return kExitNotAdmissible;
}

int classify_canon(const std::string& path) {
  std::cout << io::psi_map_to_json(classify::canonical_form(io::load_descriptor(path))).dump(2) << "\n";
  return kExitOk;
}

int classify_iso(const std::string& a, const std::string& b) {
  const bool iso = classify::is_isomorphic(io::load_descriptor(a), io::load_descriptor(b));
  std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? kExitOk : kExitCounterexample;
}

int ucext_dim(const std::string& path) {
  std::cout << ucext::central_space(io::load_algebra(path)).quotient_dim() << "\n";
  return kExitOk;
}

int verify_all(const verify::VerifyConfig& config, const std::string& json_path, bool timing) {
  const auto report = verify::verify_all(config);
  for (const auto& c : report.checks) {
    std::cout << c.name << " " << verify::to_string(c.status);
    if (timing) std::cout << " (" << std::fixed << std::setprecision(2) << c.seconds << "s)";
    if (!c.detail.empty()) std::cout << " " << c.detail;
    if (c.counterexample) std::cout << "\n  counterexample: " << *c.counterexample;
    std::cout << "\n";
  }
  std::cout << "seed " << report.seed << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw io::IoError("cannot write '" + json_path + "'");
    out << report.to_jsonl(timing);
  }
  return report.all_pass() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight modules of current algebras: exact computations and checks"};
  app.require_subcommand(1);
  int code = kExitOk;

  auto* rs = app.add_subcommand("rootsys", "Root systems")->require_subcommand(1);
  std::string rs_type;
  auto* rs_info = rs->add_subcommand("info", "Root count, highest root and Cartan matrix");
  rs_info->add_option("type", rs_type, "Type and rank, e.g. B3")->required();
  int gamma_rank = 4;
  auto* rs_gamma = rs->add_subcommand("verify-gamma", "Check the ideal lemma over every type up to a rank");
  rs_gamma->add_option("--max-rank", gamma_rank, "Largest rank")->capture_default_str();

  auto* sh = app.add_subcommand("shadow", "T/N partitions")->require_subcommand(1);
  std::string sh_type;
  auto* sh_verify = sh->add_subcommand("verify", "Enumerate convex T and check the sum lemma");
  sh_verify->add_option("type", sh_type, "Type and rank")->required();
  std::size_t sh_samples = 100000;
  std::uint64_t sh_seed = 1;
  sh_verify->add_option("--samples", sh_samples, "Samples when the system is too large to enumerate")->capture_default_str();
  sh_verify->add_option("--seed", sh_seed)->capture_default_str();

  auto* wm = app.add_subcommand("weightmod", "Weight modules")->require_subcommand(1);
  std::string fr_type, fr_highest;
  auto* wm_fr = wm->add_subcommand("freudenthal", "Weight multiplicities of a finite-dimensional module");
  wm_fr->add_option("type", fr_type, "Type and rank")->required();
  wm_fr->add_option("--highest", fr_highest, "Dynkin labels, comma separated")->required();
  std::string dc_mu, dc_tau0;
  int dc_window = 50;
  auto* wm_dc = wm->add_subcommand("dense-check", "Simplicity and sl2 relations of a dense module");
  wm_dc->add_option("--mu", dc_mu)->required();
  wm_dc->add_option("--tau0", dc_tau0)->required();
  wm_dc->add_option("--window", dc_window)->capture_default_str();

  auto* ev = app.add_subcommand("eval", "Tensor products of evaluation modules")->require_subcommand(1);
  std::string em_desc, em_weight;
  std::optional<int> em_window;
  auto* ev_mult = ev->add_subcommand("mult", "Weight multiplicity");
  ev_mult->add_option("--descriptor", em_desc)->required();
  ev_mult->add_option("--weight", em_weight, "Weight coordinates, comma separated")->required();
  ev_mult->add_option("--window", em_window, "Index window for dense factors");

  auto* ad = app.add_subcommand("admissible", "Admissibility")->require_subcommand(1);
  std::string ac_desc;
  int ac_window = 30;
  auto* ad_cl = ad->add_subcommand("classify", "Admissible or not, with bound or growth witness");
  ad_cl->add_option("--descriptor", ac_desc)->required();
  ad_cl->add_option("--window", ac_window)->capture_default_str();

  auto* cl = app.add_subcommand("classify", "Classification labels")->require_subcommand(1);
  std::string cc_desc, ci_a, ci_b;
  auto* cl_canon = cl->add_subcommand("canon", "Canonical label map as JSON");
  cl_canon->add_option("--descriptor", cc_desc)->required();
  auto* cl_iso = cl->add_subcommand("iso", "Exit 0 iff the two descriptors are isomorphic");
  cl_iso->add_option("--a", ci_a)->required();
  cl_iso->add_option("--b", ci_b)->required();

  auto* uc = app.add_subcommand("ucext", "Universal central extension")->require_subcommand(1);
  std::string ud_alg;
  auto* uc_dim = uc->add_subcommand("dim", "Dimension of the central space");
  uc_dim->add_option("--algebra", ud_alg)->required();

  verify::VerifyConfig config;
  std::string va_json;
  bool va_no_timing = false;
  auto* va = app.add_subcommand("verify-all", "Run every acceptance check");
  va->add_option("--max-rank", config.max_rank)->capture_default_str();
  va->add_option("--window", config.window)->capture_default_str();
  va->add_option("--samples", config.samples)->capture_default_str();
  va->add_option("--seed", config.seed)->capture_default_str();
  va->add_option("--threads", config.threads, "Worker threads, 0 for all cores")->capture_default_str();
  va->add_option("--json", va_json, "Write the report as JSON lines");
  va->add_option("--inject", config.inject, "Fault injection: cartan");
  va->add_option("--only", config.only, "Run only the named checks");
  va->add_flag("--no-timing", va_no_timing, "Omit wall times from the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rs_info) code = rootsys_info(rs_type);
    else if (*rs_gamma) code = rootsys_verify_gamma(gamma_rank);
    else if (*sh_verify) code = shadow_verify(sh_type, sh_samples, sh_seed);
    else if (*wm_fr) code = weightmod_freudenthal(fr_type, fr_highest);
    else if (*wm_dc) code = weightmod_dense_check(dc_mu, dc_tau0, dc_window);
    else if (*ev_mult) code = eval_mult(em_desc, em_weight, em_window);
    else if (*ad_cl) code = admissible_classify(ac_desc, ac_window);
    else if (*cl_canon) code = classify_canon(cc_desc);
    else if (*cl_iso) code = classify_iso(ci_a, ci_b);
    else if (*uc_dim) code = ucext_dim(ud_alg);
    else if (*va) code = verify_all(config, va_json, !va_no_timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}
