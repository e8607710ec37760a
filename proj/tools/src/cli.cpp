#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "biclique/alphan.hpp"
#include "biclique/atlas.hpp"
#include "biclique/chromatic.hpp"
#include "biclique/crosscheck.hpp"
#include "biclique/errors.hpp"
#include "biclique/io.hpp"
#include "biclique/matchings.hpp"
#include "biclique/reflect.hpp"

namespace biclique::cli {

namespace {

using io::json;

struct SpecSource {
  std::string file;
  std::string params;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", file, "Spec file: JSON or edge list")->check(CLI::ExistingFile);
    cmd->add_option("--params", params, "Six block sizes a,b,c,d,e,f of a (3,k)-biclique");
  }

  BicliqueSpec load() const {
    if (file.empty() == params.empty()) {
      throw InvalidInput("give exactly one of an input file or --params");
    }
    if (!params.empty()) return from_params(io::parse_params(params));
    return io::read_spec_file(file);
  }
};

// A reflect operand: "poly:c0,c1,..." (constant term first), "params:a,...,f",
// or a spec file path.
IntPoly operand_factor(const std::string& text) {
  constexpr std::string_view kPoly = "poly:";
  constexpr std::string_view kParams = "params:";
  if (text.rfind(kPoly, 0) == 0) {
    return IntPoly(io::parse_integer_list(std::string_view(text).substr(kPoly.size())));
  }
  if (text.rfind(kParams, 0) == 0) {
    return interesting_factor(from_params(io::parse_params(std::string_view(text).substr(kParams.size()))));
  }
  return interesting_factor(io::read_spec_file(text));
}

json spec_factor_json(const BicliqueSpec& spec) {
  return {{"clique", factored_clique_size(spec)}, {"factor", io::poly_to_json(interesting_factor(spec))}};
}

void emit(std::ostream& out, const json& value) { out << value.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic polynomials of bicliques (complements of bipartite graphs)", "biclique"};
  app.require_subcommand(1);

  SpecSource chrom_in, factor_in, match_in, partner_in;
  auto* chrom = app.add_subcommand("chrom", "Chromatic polynomial, constant term first");
  chrom_in.attach(chrom);
  auto* factor = app.add_subcommand("factor", "Interesting factor g with P = (x)_K g");
  factor_in.attach(factor);
  auto* match = app.add_subcommand("match", "Matching numbers of the bipartite complement");
  match_in.attach(match);
  auto* partner = app.add_subcommand("partner", "Complementary partner and its reflection shift");
  partner_in.attach(partner);

  std::string rel_g, rel_h;
  auto* reflect = app.add_subcommand("reflect", "Translation or reflection between two factors");
  reflect->add_option("first", rel_g, "poly:c0,c1,..., params:a,...,f, or a spec file")->required();
  reflect->add_option("second", rel_h, "Second operand, same forms")->required();

  int prop = 0;
  std::int64_t fr = 0, fs = 0, ft = 0, fu = 0;
  auto* family = app.add_subcommand("family", "Generated reflection pair");
  family->add_option("--prop", prop, "Family: 5, 6 or 7")->required()->check(CLI::IsMember({5, 6, 7}));
  family->add_option("--r", fr)->required();
  family->add_option("--s", fs)->required();
  family->add_option("--t", ft)->required();
  family->add_option("--u", fu)->required();

  std::string cubic;
  ScanOptions scan;
  auto* alphan = app.add_subcommand("alphan", "Biclique whose factor is q(x - N) for a monic cubic q");
  alphan->add_option("--cubic", cubic, "a2,a1,a0 of q = x^3 + a2 x^2 + a1 x + a0")->required();
  alphan->add_option("--max-t", scan.max_t, "Scan cap on |t|")->check(CLI::PositiveNumber);

  std::string budget_name = "standard";
  auto* verify = app.add_subcommand("verify", "Cross-check every formula against its oracle");
  verify->add_option("--budget", budget_name)->check(CLI::IsMember({"quick", "standard"}));

  int atlas_j = 0, atlas_kmax = 0;
  auto* atlas = app.add_subcommand("atlas", "Classify factors of all bicliques with given j, CSV");
  atlas->add_option("--j", atlas_j)->required()->check(CLI::Range(1, 8));
  atlas->add_option("--kmax", atlas_kmax)->required()->check(CLI::Range(1, 24));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitBadInput;
  }

  try {
    if (*chrom) {
      emit(out, {{"poly", io::poly_to_json(chromatic_polynomial(chrom_in.load()))}});
    } else if (*factor) {
      emit(out, spec_factor_json(factor_in.load()));
    } else if (*match) {
      emit(out, {{"matching_numbers", io::matchings_to_json(matching_numbers(match_in.load()))}});
    } else if (*partner) {
      const BicliqueSpec g = partner_in.load();
      const BicliqueSpec h = complement_partner(g);
      const Integer expected = g.j() + g.k() - 1;
      const auto c = find_reflection(interesting_factor(g), interesting_factor(h));
      emit(out, {{"spec", io::spec_to_json(g)},
                 {"partner", io::spec_to_json(h)},
                 {"factor", io::poly_to_json(interesting_factor(g))},
                 {"partner_factor", io::poly_to_json(interesting_factor(h))},
                 {"expected_shift", io::integer_to_json(expected)},
                 {"shift", c ? io::integer_to_json(*c) : json(nullptr)},
                 {"verified", c.has_value() && *c == expected}});
    } else if (*reflect) {
      emit(out, io::relation_to_json(relate(operand_factor(rel_g), operand_factor(rel_h))));
    } else if (*family) {
      const FamilyPair pair = family_pair(prop, fr, fs, ft, fu);
      const BicliqueSpec gs = from_params(pair.g);
      const BicliqueSpec hs = from_params(pair.h);
      const IntPoly g = left_clique_factor(gs);
      const IntPoly h = left_clique_factor(hs);
      const auto c = find_reflection(g, h);
      const bool condition =
          theorem2_condition(matching_numbers(gs), matching_numbers(hs), 3, gs.k(), hs.k(), pair.c);
      const bool verified = c.has_value() && *c == pair.c && condition;
      emit(out, {{"proposition", pair.proposition},
                 {"g", io::params_to_json(pair.g)},
                 {"h", io::params_to_json(pair.h)},
                 {"v", io::integer_to_json(pair.v)},
                 {"c", io::integer_to_json(pair.c)},
                 {"g_factor", io::poly_to_json(g)},
                 {"h_factor", io::poly_to_json(h)},
                 {"shift", c ? io::integer_to_json(*c) : json(nullptr)},
                 {"condition", condition},
                 {"below_convention", pair.below_convention},
                 {"verified", verified}});
      return verified ? kExitOk : kExitMismatch;
    } else if (*alphan) {
      const auto coeffs = io::parse_integer_list(cubic);
      if (coeffs.size() != 3) throw InvalidInput("--cubic needs exactly three integers a2,a1,a0");
      const IntPoly q({coeffs[2], coeffs[1], coeffs[0], Integer(1)});
      const AlphaNResult result = alpha_plus_n(q, scan);
      emit(out, io::alphan_to_json(result));
      return result.verified ? kExitOk : kExitMismatch;
    } else if (*verify) {
      const auto budget =
          budget_name == "quick" ? crosscheck::Budget::quick() : crosscheck::Budget::standard();
      json checks = json::array();
      bool all = true;
      for (const auto& r : crosscheck::run_all(budget)) {
        all = all && r.passed;
        checks.push_back({{"id", r.id},
                          {"title", r.title},
                          {"passed", r.passed},
                          {"cases", r.cases},
                          {"detail", r.detail},
                          {"seconds", r.seconds}});
      }
      emit(out, {{"budget", budget_name}, {"checks", checks}, {"passed", all}});
      return all ? kExitOk : kExitMismatch;
    } else if (*atlas) {
      write_atlas_csv(out, build_atlas(atlas_j, atlas_kmax));
    }
  } catch (const FormulaIntegrityError& e) {
    err << "biclique: internal check failed: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "biclique: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace biclique::cli
