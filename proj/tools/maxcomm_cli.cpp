// Command-line front end: every verb reads JSON (inline or from a file),
// writes one deterministic JSON document, and signals verification
// failures through the exit code.
//
// Exit codes: 0 success, 1 usage/parse/unsupported-domain errors,
// 2 failed mathematical verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "maxcomm/json_io.hpp"
#include "maxcomm/maxcomm.hpp"

namespace {

using maxcomm::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_verification = 2;

int exit_code_for(const maxcomm::error& e) {
  switch (e.code()) {
    case maxcomm::errc::verification_failed:
    case maxcomm::errc::internal_inconsistency:
      return exit_verification;
    default:
      return exit_usage;
  }
}

struct OutputSink {
  std::string path;  // empty: stdout

  void emit(const json& doc) const {
    std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    maxcomm::require(out.good(), maxcomm::errc::parse_error, "cannot open " + path);
    out << text;
  }
};

json load_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  maxcomm::require(!j.is_discarded(), maxcomm::errc::parse_error, "malformed JSON input");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  maxcomm::require(in.good(), maxcomm::errc::parse_error, "cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_json_text(text);
}

struct GensInput {
  std::string domain_name;
  int n = 2;
  std::string gens_text;  // inline JSON array
  std::string in_path;    // or a file with {"gens": [...]}

  json gens_json() const {
    if (!in_path.empty()) {
      json doc = load_json_file(in_path);
      maxcomm::require(doc.is_object() && doc.contains("gens"), maxcomm::errc::parse_error,
                       "input file must be an object with \"gens\"");
      return doc["gens"];
    }
    return load_json_text(gens_text.empty() ? "[]" : gens_text);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--domain", domain_name, "Q, F<p> or H")->required();
    cmd->add_option("--n", n, "matrix size")->required();
    cmd->add_option("--gens", gens_text, "JSON array: builders I/N/M/E(i,j) or matrices");
    cmd->add_option("--in", in_path, "JSON file with {\"gens\": [...]}");
  }
};

template <class Fn>
int dispatch(const GensInput& input, Fn&& fn) {
  maxcomm::DomainSpec spec = maxcomm::parse_domain_name(input.domain_name);
  return maxcomm::with_domain(spec, [&](auto dom) {
    auto gens = maxcomm::generators_from_json(dom, input.n, input.gens_json());
    return fn(dom, gens);
  });
}

maxcomm::Lemma1Variant parse_variant(const std::string& name) {
  if (name == "plainN") return maxcomm::Lemma1Variant::plain_n;
  if (name == "LN") return maxcomm::Lemma1Variant::l_n;
  maxcomm::raise(maxcomm::errc::parse_error, "variant must be plainN or LN");
}

std::string resolve_golden_path(const std::string& path) {
  std::ifstream probe(path);
  if (probe.good()) return path;
  const char* dir = std::getenv("MAXCOMM_GOLDEN_DIR");
  if (dir != nullptr && !path.empty() && path.front() != '/')
    return std::string(dir) + "/" + path;
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with maximal commutative subrings of M_n(D)"};
  app.require_subcommand(1);
  app.fallthrough();  // global --out/--seed may follow the subcommand
  OutputSink sink;
  std::uint64_t seed = 0;
  app.add_option("--out", sink.path, "write the JSON report to a file instead of stdout");
  app.add_option("--seed", seed, "seed for the sampled spot checks of `verify`");

  GensInput centralizer_in, closure_in, decompose_in, verify_in;
  auto* cmd_centralizer =
      app.add_subcommand("centralizer", "centralizer of a generator set as a Z-subspace");
  centralizer_in.attach(cmd_centralizer);
  auto* cmd_closure = app.add_subcommand("closure", "unital subalgebra generated by matrices");
  closure_in.attach(cmd_closure);
  auto* cmd_decompose =
      app.add_subcommand("decompose", "local-factor decomposition of a commutative closure");
  decompose_in.attach(cmd_decompose);
  auto* cmd_verify = app.add_subcommand(
      "verify", "structure checks (radicals, factors, idempotents) for a commutative closure");
  verify_in.attach(cmd_verify);
  long verify_samples = 25;
  cmd_verify->add_option("--samples", verify_samples,
                         "random unit-absorption samples (seeded by --seed)");

  std::string lemma_domain, lemma_variant = "plainN";
  int lemma_n = 2;
  auto* cmd_lemma1 = app.add_subcommand("lemma1", "banded centralizer identity for N and L*N");
  cmd_lemma1->add_option("--domain", lemma_domain)->required();
  cmd_lemma1->add_option("--n", lemma_n)->required();
  cmd_lemma1->add_option("--variant", lemma_variant, "plainN or LN");

  std::string lemma2_domain;
  int lemma2_n = 2;
  auto* cmd_lemma2 = app.add_subcommand("lemma2", "corner centralizer identity for D*E_{1,n}");
  cmd_lemma2->add_option("--domain", lemma2_domain)->required();
  cmd_lemma2->add_option("--n", lemma2_n)->required();

  std::string ex_domain;
  int ex_n = 2;
  auto* cmd_example1 =
      app.add_subcommand("example1", "the banded maximal commutative ring and its checks");
  cmd_example1->add_option("--domain", ex_domain)->required();
  cmd_example1->add_option("--n", ex_n)->required();

  std::string ex2_domain;
  int ex2_n = 2;
  auto* cmd_example2 = app.add_subcommand("example2", "the subfield polynomial ring L[N]");
  cmd_example2->add_option("--domain", ex2_domain)->required();
  cmd_example2->add_option("--n", ex2_n)->required();

  long enum_p = 2;
  int enum_n = 2, enum_max_gens = 2;
  std::string enum_mode = "exhaustive", enum_check;
  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "brute-force search for maximal commutative subrings");
  cmd_enumerate->add_option("--p", enum_p, "field characteristic")->required();
  cmd_enumerate->add_option("--n", enum_n, "matrix size")->required();
  cmd_enumerate->add_option("--mode", enum_mode, "exhaustive or sweep");
  cmd_enumerate->add_option("--max-gens", enum_max_gens, "sweep generator budget");
  cmd_enumerate->add_option("--check", enum_check,
                            "golden report to compare against (see MAXCOMM_GOLDEN_DIR)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_centralizer->parsed()) {
      return dispatch(centralizer_in, [&](auto dom, const auto& gens) {
        auto space = maxcomm::centralizer_basis(dom, centralizer_in.n, gens);
        sink.emit(maxcomm::json_of(space));
        return exit_ok;
      });
    }
    if (cmd_closure->parsed()) {
      return dispatch(closure_in, [&](auto dom, const auto& gens) {
        auto s = maxcomm::algebra_closure(dom, closure_in.n, gens);
        json doc = maxcomm::json_of(s.space);
        doc["commutative"] = maxcomm::is_commutative(s);
        sink.emit(doc);
        return exit_ok;
      });
    }
    if (cmd_decompose->parsed()) {
      return dispatch(decompose_in, [&](auto dom, const auto& gens) {
        auto s = maxcomm::algebra_closure(dom, decompose_in.n, gens);
        if (!maxcomm::is_commutative(s)) {
          sink.emit(json{{"commutative", false}});
          return exit_verification;
        }
        auto report = maxcomm::decompose(s);
        sink.emit(maxcomm::json_of(report, maxcomm::is_maximal_commutative(s)));
        return exit_ok;
      });
    }
    if (cmd_verify->parsed()) {
      return dispatch(verify_in, [&](auto dom, const auto& gens) {
        auto s = maxcomm::algebra_closure(dom, verify_in.n, gens);
        if (!maxcomm::is_commutative(s)) {
          sink.emit(json{{"commutative", false}});
          return exit_verification;
        }
        maxcomm::RingVerification v = maxcomm::verify_subalgebra(s);
        bool transfer = maxcomm::maximality_transfer_holds(s);
        // sampled unit absorption: inverses of units of S stay in S
        maxcomm::Sampler sampler(seed);
        bool unit_absorption = true;
        const auto& cf = dom.center();
        for (long it = 0; it < verify_samples; ++it) {
          maxcomm::FVec<typename decltype(dom)::Center> coords;
          for (int t = 0; t < s.dim(); ++t) coords.push_back(sampler.scalar(cf));
          auto el = maxcomm::element_from_coords(s, coords);
          if (!maxcomm::mat_is_invertible(el)) continue;
          unit_absorption =
              unit_absorption && maxcomm::zcontains(s.space, maxcomm::mat_inverse(el));
        }
        json doc = maxcomm::json_of(v);
        doc["maximalityTransfer"] = transfer;
        doc["unitAbsorption"] = unit_absorption;
        doc["unitAbsorptionSamples"] = verify_samples;
        sink.emit(doc);
        bool ok = v.structure_ok() && transfer && unit_absorption &&
                  (!v.maximal || v.factor_count_at_most_n);
        return ok ? exit_ok : exit_verification;
      });
    }
    if (cmd_lemma1->parsed()) {
      auto spec = maxcomm::parse_domain_name(lemma_domain);
      auto variant = parse_variant(lemma_variant);
      return maxcomm::with_domain(spec, [&](auto dom) {
        auto claim = maxcomm::lemma1_claim(dom, lemma_n, variant);
        auto computed = maxcomm::lemma1_computed(dom, lemma_n, variant);
        bool equal = maxcomm::zspace_eq(claim, computed);
        sink.emit(json{{"claimDimZ", claim.dim()},
                       {"computedDimZ", computed.dim()},
                       {"equal", equal}});
        return equal ? exit_ok : exit_verification;
      });
    }
    if (cmd_lemma2->parsed()) {
      auto spec = maxcomm::parse_domain_name(lemma2_domain);
      return maxcomm::with_domain(spec, [&](auto dom) {
        auto claim = maxcomm::lemma2_claim(dom, lemma2_n);
        auto computed = maxcomm::lemma2_computed(dom, lemma2_n);
        bool equal = maxcomm::zspace_eq(claim, computed);
        sink.emit(json{{"claimDimZ", claim.dim()},
                       {"computedDimZ", computed.dim()},
                       {"equal", equal}});
        return equal ? exit_ok : exit_verification;
      });
    }
    if (cmd_example1->parsed()) {
      auto spec = maxcomm::parse_domain_name(ex_domain);
      return maxcomm::with_domain(spec, [&](auto dom) {
        auto ring = maxcomm::example1_ring(dom, ex_n);
        auto v = maxcomm::example1_verify(dom, ex_n);
        sink.emit(json{{"dimZ", ring.dim()},
                       {"maximalCommutative", v.maximal_commutative},
                       {"idealProperty", v.ideal_property},
                       {"local", v.local}});
        return v.all() ? exit_ok : exit_verification;
      });
    }
    if (cmd_example2->parsed()) {
      auto spec = maxcomm::parse_domain_name(ex2_domain);
      return maxcomm::with_domain(spec, [&](auto dom) {
        auto ring = maxcomm::example2_ring(dom, ex2_n);
        auto v = maxcomm::example2_verify(dom, ex2_n);
        sink.emit(json{{"dimZ", ring.dim()},
                       {"equalsLN_polynomials", v.equals_ln_polynomials},
                       {"maximalCommutative", v.maximal_commutative},
                       {"dimOverL", v.dim_over_l},
                       {"hasNilpotents", v.has_nilpotents}});
        return v.all() ? exit_ok : exit_verification;
      });
    }
    if (cmd_enumerate->parsed()) {
      maxcomm::EnumerationReport report;
      if (enum_mode == "exhaustive")
        report = maxcomm::enumerate_exhaustive(enum_p, enum_n);
      else if (enum_mode == "sweep")
        report = maxcomm::sweep_generated(enum_p, enum_n, enum_max_gens);
      else
        maxcomm::raise(maxcomm::errc::parse_error, "mode must be exhaustive or sweep");
      json doc = maxcomm::json_of(report);
      sink.emit(doc);
      if (!report.all_checks_passed) return exit_verification;
      if (!enum_check.empty()) {
        json golden = load_json_file(resolve_golden_path(enum_check));
        if (doc != golden) {
          std::cerr << "golden mismatch against " << enum_check << "\n";
          return exit_verification;
        }
      }
      return exit_ok;
    }
  } catch (const maxcomm::error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
