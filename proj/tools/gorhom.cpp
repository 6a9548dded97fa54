// Command line front end: load corpus files, build resolutions, evaluate the
// homology functors over a degree range, detect dimensions, and run the
// verification suite.  Exit codes: 0 success, 1 failed check or internal
// error, 2 invalid input.
#include <CLI11.hpp>

#include <gorhom/verify.hpp>

#include <fstream>
#include <iostream>
#include <utility>

namespace {

using namespace gorhom;

std::pair<long, long> parse_range(const std::string& s, long dlo, long dhi) {
  if (s.empty()) return {dlo, dhi};
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw InputError("range \"" + s + "\" is not of the form a..b");
  try {
    long lo = std::stol(s.substr(0, dots));
    long hi = std::stol(s.substr(dots + 2));
    if (lo > hi) throw InputError("range \"" + s + "\" is empty");
    return {lo, hi};
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("range \"" + s + "\" is not of the form a..b");
  }
}

long parse_fixture(const std::string& s) {
  if (s.rfind("cyclic:", 0) != 0)
    throw InputError("fixture \"" + s + "\" is not of the form cyclic:<n>");
  try {
    long n = std::stol(s.substr(7));
    if (n < 1) throw InputError("fixture order must be positive");
    return n;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("fixture \"" + s + "\" is not of the form cyclic:<n>");
  }
}

Corpus load_with_extras(const std::vector<std::string>& files) {
  Corpus c = builtin_corpus();
  for (const auto& f : files) merge_corpus_file(c, f);
  return c;
}

const Module& find_module(const Corpus& c, const std::string& id) {
  auto it = c.modules.find(id);
  if (it == c.modules.end()) throw InputError("unknown module id \"" + id + "\"");
  return it->second;
}

// Frobenius splice when available, contractible pair for projectives.
CompleteResolutionData resolve_complete(const Module& m, long horizon) {
  try {
    return complete_resolution_frobenius(m, horizon);
  } catch (const InputError& primary) {
    try {
      return contractible_complete(m);
    } catch (const InputError&) {
      throw primary;
    }
  }
}

void print_projective(const ProjectiveResolutionData& p, long horizon) {
  const ChainComplex& cx = p.cx;
  std::cout << "projective resolution of " << p.target.id << ": window [" << cx.lo() << ", "
            << cx.hi() << "], upper tail "
            << (cx.upper().is_zero() ? "zero" : "periodic " + std::to_string(cx.upper().period))
            << "\n";
  for (long i = cx.lo(); i <= cx.hi(); ++i)
    std::cout << "  P_" << i << " = " << cx.term(i).descriptor().str() << "\n";
  long hi = std::max(cx.hi(), horizon);
  std::cout << "exactness certificate through degree " << hi << ": "
            << (resolution_certificate(p, hi) ? "pass" : "FAIL") << "\n";
}

void print_complete(const CompleteResolutionData& cr, long lo, long hi) {
  const ChainComplex& t = cr.t;
  std::cout << "complete resolution of " << cr.approx.target.id << ": agreement degree " << cr.g
            << "\n";
  std::cout << "  total window [" << t.lo() << ", " << t.hi() << "], tails "
            << (t.lower().is_zero() ? "zero" : "periodic " + std::to_string(t.lower().period))
            << " / "
            << (t.upper().is_zero() ? "zero" : "periodic " + std::to_string(t.upper().period))
            << "\n";
  for (long i = std::max(t.lo(), lo); i <= std::min(t.hi(), hi); ++i)
    std::cout << "  T_" << i << " = " << t.term(i).descriptor().str() << "\n";
  std::cout << "  comparison map splits degreewise: "
            << (degreewise_split_surjective(cr.tau) ? "yes" : "no") << "\n";
  TotalAcyclicityReport ta = total_acyclicity(t, lo, hi);
  std::cout << "  acyclic on [" << lo << ", " << hi << "]: " << (ta.acyclic ? "yes" : "NO")
            << ", dual acyclic: " << (ta.hom_acyclic ? "yes" : "NO");
  if (ta.injectives_checked)
    std::cout << ", injective-tensor acyclic: " << (ta.tensor_injective_acyclic ? "yes" : "NO");
  std::cout << "\n";
}

int cmd_check(const std::vector<std::string>& tags, const std::string& range,
              const std::string& json_path) {
  auto [lo, hi] = parse_range(range, -4, 6);
  std::vector<CheckReport> reports = run_suite(tags, lo, hi);
  std::cout << suite_table(reports);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw InputError("cannot write \"" + json_path + "\"");
    out << suite_json(reports).dump(2) << "\n";
  }
  return suite_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homological algebra over computable rings"};
  app.require_subcommand(1);

  std::vector<std::string> corpus_files;
  app.add_option("-c,--corpus", corpus_files,
                 "extra corpus JSON files merged over the builtin corpus");

  auto* load = app.add_subcommand("load", "validate corpus files and print their inventory");
  std::vector<std::string> load_files;
  load->add_option("files", load_files, "corpus JSON documents")->required();

  auto* resolve = app.add_subcommand("resolve", "build a projective or complete resolution");
  std::string res_module, res_fixture;
  long res_length = 24;
  bool res_complete = false;
  resolve->add_option("--module", res_module, "module id to resolve");
  resolve->add_option("--length", res_length, "horizon for the resolution search");
  resolve->add_flag("--complete", res_complete, "build a complete resolution");
  resolve->add_option("--fixture", res_fixture, "use the group ring fixture cyclic:<n>");

  struct FunctorCmd {
    CLI::App* sub = nullptr;
    std::string left, right, range, fixture;
  };
  std::map<std::string, FunctorCmd> fn;
  const std::vector<std::pair<std::string, std::string>> functor_specs = {
      {"tor", "absolute torsion groups from a projective resolution"},
      {"tate", "stabilized groups from a complete resolution"},
      {"btor", "groups from the kernel of the comparison map"},
      {"stor", "stable groups from the negative truncation"},
      {"gptor", "relative groups from a proper resolution"},
      {"ext", "extension groups from a projective resolution"}};
  for (const auto& [name, blurb] : functor_specs) {
    FunctorCmd& f = fn[name];
    f.sub = app.add_subcommand(name, blurb);
    f.sub->add_option("--left", f.left, "module id in the left slot");
    f.sub->add_option("--right", f.right, "module id in the right slot")->required();
    f.sub->add_option("--range", f.range, "degree range a..b");
    if (name == "tate" || name == "btor" || name == "stor")
      f.sub->add_option("--fixture", f.fixture,
                        "resolve the left slot by the fixture cyclic:<n>");
  }

  auto* gdim = app.add_subcommand("gdim", "detect a Gorenstein dimension");
  std::string gd_flavor, gd_target;
  long gd_depth = 8;
  gdim->add_option("--flavor", gd_flavor, "gfd or gpd")->required();
  gdim->add_option("--target", gd_target, "module or complex id")->required();
  gdim->add_option("--depth", gd_depth, "probe depth cap");

  auto* check = app.add_subcommand("check", "run verification checks");
  std::vector<std::string> check_tags;
  std::string check_range, check_json;
  check->add_option("tags", check_tags, "check tags, or \"all\"")->required();
  check->add_option("--range", check_range, "degree range a..b");
  check->add_option("--json", check_json, "write the machine readable report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (load->parsed()) {
      Corpus c = load_corpus(load_files);
      std::cout << "loaded " << load_files.size() << " file(s): " << c.rings.size() << " rings, "
                << c.modules.size() << " modules, " << c.complexes.size() << " complexes, "
                << c.resolutions.size() << " resolutions\n";
      for (const auto& kv : c.rings) std::cout << "  ring " << kv.first << "\n";
      for (const auto& kv : c.modules)
        std::cout << "  module " << kv.first << " = " << kv.second.descriptor().str() << "\n";
      for (const auto& kv : c.complexes)
        std::cout << "  complex " << kv.first << " on [" << kv.second.lo() << ", "
                  << kv.second.hi() << "]\n";
      for (const auto& kv : c.resolutions)
        std::cout << "  resolution " << kv.first << " of " << kv.second.approx.target.id << "\n";
      return 0;
    }
    if (resolve->parsed()) {
      if (!res_fixture.empty()) {
        CompleteResolutionData cr = fixture_cyclic(parse_fixture(res_fixture), Side::Right);
        print_complete(cr, -res_length / 2, res_length / 2);
        return 0;
      }
      if (res_module.empty())
        throw InputError("resolve needs --module <id> or --fixture cyclic:<n>");
      Corpus c = load_with_extras(corpus_files);
      const Module& m = find_module(c, res_module);
      if (res_complete) {
        CompleteResolutionData cr = resolve_complete(m, res_length);
        print_complete(cr, cr.t.lo() - 1, cr.t.hi() + 1);
      } else {
        print_projective(projective_resolution(m, res_length), res_length);
      }
      return 0;
    }
    for (const auto& [name, f] : fn) {
      if (!f.sub->parsed()) continue;
      Corpus c = load_with_extras(corpus_files);
      const Module& n = find_module(c, f.right);
      bool stabilized = name == "tate" || name == "btor" || name == "stor";
      auto [lo, hi] = parse_range(f.range, stabilized ? -4 : 0, 6);
      if (!f.fixture.empty()) {
        CompleteResolutionData cr = fixture_cyclic(parse_fixture(f.fixture), Side::Right);
        ChainComplex nc = one_term_complex(n, 0);
        for (long i = lo; i <= hi; ++i) {
          HomologyGroup g = name == "tate"   ? tate_tor(cr, nc, i)
                            : name == "btor" ? unbounded_tor(cr, nc, i)
                                             : stable_tor(cr, nc, i);
          std::cout << name << "_" << i << "(" << cr.approx.target.id << ", " << f.right
                    << ") = " << g.str() << "\n";
        }
        return 0;
      }
      if (f.left.empty()) throw InputError(name + " needs --left <id> (or --fixture)");
      const Module& m = find_module(c, f.left);
      for (long i = lo; i <= hi; ++i) {
        HomologyGroup g = name == "tor"     ? tor(m, n, i)
                          : name == "tate"  ? tate_tor(m, n, i)
                          : name == "btor"  ? unbounded_tor(m, n, i)
                          : name == "stor"  ? stable_tor(m, n, i)
                          : name == "gptor" ? relative_tor_gp(m, n, i)
                                            : ext_group(m, n, i);
        std::cout << name << "_" << i << "(" << f.left << ", " << f.right << ") = " << g.str()
                  << "\n";
      }
      return 0;
    }
    if (gdim->parsed()) {
      Corpus c = load_with_extras(corpus_files);
      DimensionReport rep;
      if (gd_flavor == "gfd") {
        if (auto it = c.modules.find(gd_target); it != c.modules.end())
          rep = gfd_detect(it->second, gd_depth);
        else if (auto jt = c.complexes.find(gd_target); jt != c.complexes.end())
          rep = gfd_detect(jt->second, gd_depth);
        else
          throw InputError("unknown target id \"" + gd_target + "\"");
      } else if (gd_flavor == "gpd") {
        const Module& m = find_module(c, gd_target);
        rep = gpd_from_resolution(one_term_complex(m, 0), resolve_complete(m, 24));
      } else {
        throw InputError("flavor must be gfd or gpd, got \"" + gd_flavor + "\"");
      }
      std::cout << (gd_flavor == "gfd" ? "Gfd" : "Gpd") << "(" << gd_target
                << ") = " << rep.str() << "\n";
      if (!rep.method.empty()) std::cout << "  method: " << rep.method << "\n";
      if (!rep.witness_id.empty())
        std::cout << "  witness: " << rep.witness_id << " in degree " << rep.witness_degree
                  << "\n";
      return 0;
    }
    if (check->parsed()) return cmd_check(check_tags, check_range, check_json);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
