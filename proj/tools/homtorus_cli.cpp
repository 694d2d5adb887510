#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <homtorus/cohomring.hpp>
#include <homtorus/foxalex.hpp>
#include <homtorus/kuranishi.hpp>
#include <homtorus/laurent.hpp>
#include <homtorus/linkrep.hpp>
#include <homtorus/milnor.hpp>
#include <homtorus/swpredict.hpp>

namespace {

using namespace homtorus;

long long ll(const Int& v) { return v.convert_to<long long>(); }

// Shared input flags for the link-based subcommands.
struct LinkInput {
  std::string pd;
  std::string braid;
  int strands = -1;
  int bandsum = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--pd", pd, "planar diagram code, e.g. \"X[1,4,2,5] ...\"");
    cmd->add_option("--braid", braid, "braid word to close, e.g. \"s1 s1 s1\"");
    cmd->add_option("--strands", strands, "strand count for --braid (default: inferred)");
    cmd->add_option("--borromean-bandsum", bandsum, "n-fold band sum of the three rings")
        ->check(CLI::PositiveNumber);
  }

  std::pair<LinkDiagram, std::string> load() const {
    int sources = (pd.empty() ? 0 : 1) + (braid.empty() ? 0 : 1) + (bandsum > 0 ? 1 : 0);
    if (sources != 1)
      throw CLI::ValidationError(
          "choose exactly one of --pd, --braid, --borromean-bandsum");
    if (!pd.empty()) return {parse_pd(pd), "pd " + pd};
    if (!braid.empty())
      return {braid_closure(parse_braid(braid, strands)), "braid " + braid};
    return {band_sum_borromean(bandsum),
            "borromean-bandsum " + std::to_string(bandsum)};
  }
};

LinkDiagram parse_knot_text(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == 'X') return parse_pd(text);
  return braid_closure(parse_braid(text));
}

void emit(bool json, const nlohmann::json& j, const std::string& human) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"invariants of links and homology tori, and local model counts"};
  app.require_subcommand(1);

  bool json = false;
  struct {
    LinkInput alex, reduced, milnor, verify;
  } in;
  long long det_top = 0, chern_top = 0, predict_det = 0;
  int det_rank = 4;
  std::vector<std::string> knots;
  std::uint64_t kur_seed = 1, kur_solver_seed = 1;
  double kur_tau = 0.0;
  std::string kur_h = "0,0,0";
  std::string kur_type = "j-fixed";

  CLI::App* alex = app.add_subcommand("alex", "Alexander polynomial of a link");
  in.alex.attach(alex);
  CLI::App* reduced =
      app.add_subcommand("reduced", "reduced (surgered-manifold) polynomial");
  in.reduced.attach(reduced);
  CLI::App* milnor = app.add_subcommand("milnor", "triple linking invariant");
  in.milnor.attach(milnor);
  CLI::App* verify =
      app.add_subcommand("verify-lemma", "determinant/evaluation congruence chain");
  in.verify.attach(verify);

  CLI::App* det = app.add_subcommand("det", "determinant from a cup form");
  det->add_option("--top", det_top, "top cup-product evaluation")->required();
  det->add_option("--rank", det_rank, "basis rank (3 or 4)")
      ->check(CLI::IsMember({3, 4}));
  CLI::App* chern = app.add_subcommand("chern", "character index of a rank-4 cup form");
  chern->add_option("--top", chern_top, "top cup-product evaluation")->required();
  CLI::App* predict = app.add_subcommand("predict", "invariant parity from a determinant");
  predict->add_option("--det", predict_det, "nonnegative determinant")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* surgery =
      app.add_subcommand("knot-surgery", "squared-variable product of three knots");
  surgery->add_option("knots", knots, "three knots, each a PD code or braid word")
      ->expected(3);

  CLI::App* kuranishi = app.add_subcommand("kuranishi", "build a model and count circles");
  kuranishi->set_help_flag("--help", "print help");  // frees -h; --h is an option below
  kuranishi->add_option("--seed", kur_seed, "model seed");
  kuranishi->add_option("--tau", kur_tau, "perturbation scale")->required();
  kuranishi->add_option("--h", kur_h, "target 3-vector, comma separated");
  kuranishi->add_option("--type", kur_type, "symmetry type")
      ->check(CLI::IsMember({"j-fixed", "non-j-fixed"}));
  kuranishi->add_option("--solver-seed", kur_solver_seed, "Newton start-grid seed");

  for (CLI::App* cmd : {alex, reduced, milnor, verify, det, chern, predict, surgery,
                        kuranishi})
    cmd->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (alex->parsed()) {
      auto [d, subject] = in.alex.load();
      std::string poly = render_poly(alexander_poly(d));
      emit(json, {{"subject", subject}, {"alexander", poly}}, poly);
    } else if (reduced->parsed()) {
      auto [d, subject] = in.reduced.load();
      std::string poly = render_poly(reduced_alexander(d));
      emit(json, {{"subject", subject}, {"reduced", poly}}, poly);
    } else if (milnor->parsed()) {
      auto [d, subject] = in.milnor.load();
      Int mu = mu_bar_123(d);
      std::ostringstream human;
      human << mu;
      emit(json, {{"subject", subject}, {"mu_bar_123", ll(mu)}}, human.str());
    } else if (verify->parsed()) {
      auto [d, subject] = in.verify.load();
      VerificationReport r = verify_lemma(d, subject);
      std::ostringstream human;
      human << "subject: " << r.subject << "\n";
      for (const auto& [quantity, value] : r.chain)
        human << quantity << ": " << value << "\n";
      human << "lemma_holds: " << (r.lemma_holds ? "true" : "false");
      emit(json, report_to_json(r), human.str());
    } else if (det->parsed()) {
      Int value = det_from_cupform(CupForm{det_rank, Int(det_top)});
      std::ostringstream human;
      human << value;
      emit(json, {{"rank", det_rank}, {"top", det_top}, {"det", ll(value)}},
           human.str());
    } else if (chern->parsed()) {
      Int idx = chern_character_index(CupForm{4, Int(chern_top)});
      std::ostringstream human;
      human << idx;
      emit(json, {{"top", chern_top}, {"index", ll(idx)}}, human.str());
    } else if (predict->parsed()) {
      int parity = predict_sw_mod2(Int(predict_det));
      emit(json, {{"det", predict_det}, {"sw_mod2", parity}}, std::to_string(parity));
    } else if (surgery->parsed()) {
      std::array<LaurentPoly, 3> deltas;
      for (int i = 0; i < 3; ++i) {
        LinkDiagram d = parse_knot_text(knots[static_cast<std::size_t>(i)]);
        if (d.ncomponents != 1)
          throw NotAKnot("surgery input " + std::to_string(i + 1) +
                         " is not a single-component link");
        deltas[static_cast<std::size_t>(i)] = alexander_poly(d);
      }
      LaurentPoly sw = knot_surgery_sw(deltas);
      Int eval = eval_at_ones(sw);
      Int central = central_coefficient(sw);
      bool square = product_criterion(eval);
      std::ostringstream human;
      human << "sw: " << render_poly(sw) << "\n"
            << "eval_at_ones: " << eval << "\n"
            << "product_criterion: " << (square ? "true" : "false") << "\n"
            << "central_coefficient: " << central;
      emit(json,
           {{"knots", knots},
            {"sw", render_poly(sw)},
            {"eval_at_ones", ll(eval)},
            {"product_criterion", square},
            {"central_coefficient", ll(central)}},
           human.str());
    } else if (kuranishi->parsed()) {
      if (!(kur_tau > 0)) throw CLI::ValidationError("--tau must be positive");
      Eigen::Vector3d h;
      {
        std::istringstream hs(kur_h);
        std::string part;
        int k = 0;
        while (std::getline(hs, part, ',') && k < 3) {
          std::size_t used = 0;
          try {
            h[k] = std::stod(part, &used);
          } catch (const std::exception&) {
            used = std::string::npos;
          }
          if (used != part.size()) throw CLI::ValidationError("--h expects numbers");
          ++k;
        }
        if (k != 3 || std::getline(hs, part, ','))
          throw CLI::ValidationError("--h expects three comma-separated numbers");
      }
      if (h.norm() > 0.1)
        throw CLI::ValidationError("--h must have norm at most 0.1");
      FixedType type =
          kur_type == "j-fixed" ? FixedType::kJFixed : FixedType::kNonJFixed;
      KuranishiModel m = build_model(kur_seed, kur_tau, type);
      CircleCount count = count_solution_circles(m, h, kur_solver_seed);
      std::string signs;
      for (std::size_t i = 0; i < count.signs.size(); ++i)
        signs += (i ? "," : "") + std::to_string(count.signs[i]);
      std::ostringstream human;
      human << "seed: " << kur_seed << "\n"
            << "tau: " << kur_tau << "\n"
            << "type: " << kur_type << "\n"
            << "h: " << kur_h << "\n"
            << "circles: " << count.circles << "\n"
            << "signs:" << (signs.empty() ? "" : " ") << signs << "\n"
            << "reducible_only: " << (count.reducible_only ? "true" : "false");
      emit(json,
           {{"seed", kur_seed},
            {"tau", kur_tau},
            {"type", kur_type},
            {"h", {h[0], h[1], h[2]}},
            {"circles", count.circles},
            {"signs", count.signs},
            {"reducible_only", count.reducible_only}},
           human.str());
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";  // what() is already "Name: message"
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
