#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dp4/classifier.hpp"
#include "dp4/ff_counter.hpp"
#include "dp4/poincare.hpp"
#include "dp4/prime_field.hpp"
#include "dp4/report.hpp"
#include "dp4/suites.hpp"

namespace {

using dp4::Json;

// "e3" or a colon-separated coordinate vector "1:0:0:0:-2".
std::vector<long long> parse_vec(const std::string& tok) {
  if (tok.size() == 2 && tok[0] == 'e' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
    int idx = tok[1] - '0';
    if (idx > 4) throw CLI::ValidationError("vector", "basis index out of range: " + tok);
    std::vector<long long> v(5, 0);
    v[idx] = 1;
    return v;
  }
  std::vector<long long> v;
  std::size_t pos = 0;
  while (pos <= tok.size()) {
    auto next = tok.find(':', pos);
    if (next == std::string::npos) next = tok.size();
    v.push_back(std::stoll(tok.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (v.size() != 5) throw CLI::ValidationError("vector", "need 5 coordinates: " + tok);
  return v;
}

std::vector<std::vector<long long>> parse_vec_list(const std::string& arg) {
  std::vector<std::vector<long long>> out;
  std::size_t pos = 0;
  while (pos <= arg.size()) {
    auto next = arg.find(',', pos);
    if (next == std::string::npos) next = arg.size();
    out.push_back(parse_vec(arg.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

template <class F>
Json classify_to_json(const std::vector<long long>& vertex,
                      const std::vector<std::vector<long long>>& plane) {
  auto lift = [](const std::vector<long long>& v) {
    std::vector<F> out;
    for (long long x : v) out.push_back(F(static_cast<long>(x)));
    return out;
  };
  std::vector<std::vector<F>> rows;
  for (const auto& r : plane) rows.push_back(lift(r));
  dp4::FlagLine<F> line(dp4::Subspace<F>::span_of({lift(vertex)}, 5),
                        dp4::Subspace<F>::span_of(rows, 5));
  auto cls = dp4::classify_line(line);
  Json j;
  j["type"] = dp4::line_type_name(cls.type);
  j["normal_bundle"] = cls.non_free ? "nonfree" : "free";
  j["support_points"] = cls.support_points;
  j["family_dim"] = cls.family_dim;
  j["inside_sweep_threefold"] = cls.in_r;
  j["inside_s"] = cls.in_s;
  j["vertex_on_conic"] = cls.vertex_on_conic;
  if (!cls.sweep_parameter.empty()) j["sweep_parameter"] = cls.sweep_parameter;
  j["flags"] = cls.flags;
  return j;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << j.dump(2) << "\n";
    std::cout << "report written to " << out_path << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification tool for the quintic del Pezzo fourfold's double-line geometry"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites and emit a JSON report");
  std::vector<std::string> suites;
  verify->add_option("suites", suites, "suite ids or 'all'")->required();
  std::uint64_t seed = 0;
  verify->add_option("--seed", seed, "seed for the randomized checks")->required();
  std::vector<int> primes = {3, 5, 7, 11};
  verify->add_option("--primes", primes, "finite-field characteristics")->delimiter(',');
  int samples = 100;
  verify->add_option("--samples", samples, "random line samples across fields");
  std::string out_path;
  verify->add_option("--out", out_path, "write the JSON report to this file");
  int jobs = 1;
  verify->add_option("--jobs", jobs, "worker threads for enumerations")->envname("DP4_JOBS");

  // classify-line
  auto* classify = app.add_subcommand("classify-line", "classify one line of the fourfold");
  std::string vertex_arg, plane_arg;
  classify->add_option("--vertex", vertex_arg, "V1 generator, e.g. e0 or 1:0:0:0:-2")->required();
  classify->add_option("--plane", plane_arg, "three V3 generators, e.g. e0,e1,e4")->required();
  std::uint32_t classify_prime = 0;
  classify->add_option("--prime", classify_prime, "classify over F_p instead of QQ");

  // count
  auto* count = app.add_subcommand("count", "exhaustively count F_q points of a tagged set");
  std::string variety;
  count->add_option("--variety", variety, "y, h1y, cv, cv-dual, q3, sing-q3, dbar, sy, rank0, dy")
      ->required();
  std::uint32_t count_q = 0;
  count->add_option("--q", count_q, "field size (supported prime)")->required();
  int count_jobs = 1;
  count->add_option("--jobs", count_jobs, "worker threads")->envname("DP4_JOBS");

  // poincare
  auto* poincare = app.add_subcommand("poincare", "run the moduli-polynomial surgery chain");
  std::string chain_name = "stable-maps";
  poincare->add_option("--chain", chain_name, "chain id (stable-maps)");
  int chain_jobs = 1;
  poincare->add_option("--jobs", chain_jobs, "worker threads")->envname("DP4_JOBS");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      dp4::RunConfig cfg;
      cfg.seed = seed;
      cfg.primes = primes;
      cfg.random_samples = samples;
      cfg.suites = suites;
      cfg.jobs = jobs;
      dp4::Report report = dp4::run_verification(cfg);
      emit(report.to_json(), out_path);
      return report.ok() ? 0 : 1;
    }
    if (*classify) {
      auto vertex = parse_vec(vertex_arg);
      auto plane = parse_vec_list(plane_arg);
      if (plane.size() != 3)
        throw CLI::ValidationError("--plane", "need exactly three generators");
      Json j;
      if (classify_prime == 0) {
        j = classify_to_json<dp4::Rat>(vertex, plane);
      } else {
        j = dp4::with_prime(classify_prime,
                            [&]<class F>() { return classify_to_json<F>(vertex, plane); });
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*count) {
      auto id = dp4::variety_from_name(variety);
      auto r = dp4::count_points(id, count_q, count_jobs);
      long long formula = dp4::eval_poly(dp4::expected_count_poly(id), count_q);
      Json j;
      j["variety"] = dp4::variety_name(id);
      j["q"] = r.q;
      j["count"] = r.count;
      if (id == dp4::VarietyId::SY) j["jump_pairs"] = r.jump_pairs;
      j["formula"] = formula;
      j["matches_formula"] = r.count == formula;
      std::cout << j.dump(2) << "\n";
      return r.count == formula ? 0 : 1;
    }
    if (*poincare) {
      if (chain_name != "stable-maps")
        throw CLI::ValidationError("--chain", "unknown chain id '" + chain_name + "'");
      auto referee = dp4::interpolated_double_line_poly(chain_jobs);
      auto item = dp4::poincare_chain_item(referee, dp4::moduli_target_coeffs());
      std::cout << item.to_json().dump(2) << "\n";
      return item.status == dp4::CheckStatus::fail ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
