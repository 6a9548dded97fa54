#pragma once

#include <gorhom/functors.hpp>
#include <gorhom/gdim.hpp>
#include <gorhom/json_io.hpp>

namespace gorhom {

struct CheckRow {
  std::string relation;  // the asserted identity or exactness statement
  std::string left, right;
  bool pass = false;
};

struct CheckReport {
  std::string tag;
  std::string instance;
  std::vector<CheckRow> rows;
  std::string note;
  double seconds = 0;
  bool pass() const;
  std::string table() const;
  nlohmann::json to_json() const;
};

// Balance of Tate homology: resolving the right argument and resolving the
// left one compute the same groups degreewise.  When the right-hand target
// has a recorded syzygy with a splice of its own, a second witness checks
// the degree shift against the syzygy's fresh resolution.
CheckReport check_balance_tate(const CompleteResolutionData& crm, const Module& n,
                               const CompleteResolutionData& crn, const Module& m, long lo, long hi,
                               const std::string& instance);

// Balance of unbounded homology through the two kernel routes.
CheckReport check_balance_unbounded(const CompleteResolutionData& crm, const Module& n,
                                    const CompleteResolutionData& crn, const Module& m, long lo,
                                    long hi, const std::string& instance);

// The four-term sequence
//   0 -> H_0(T tensor N) -> M tensor N -> Hom(Hom(M,R),N) -> H_-1(T tensor N) -> 0
// assembled with explicit maps (the comparison map, the snake connecting
// map of the kernel sequence, the kernel inclusion) and rank-certified at
// every spot; the middle terms are matched against their module-level
// identifications by independent routes.
CheckReport check_tate_sequence(const CompleteResolutionData& cr, const Module& m, const Module& n,
                                const std::string& instance);

// For each probed cut, the degreewise split truncation sequence of the total
// complex links stable homology with the absolute and unbounded homology of
// the cut cokernel: spot-exactness of the induced long sequence, the
// identification of both flanks by independent routes, and the vanishing of
// the cokernel's unbounded homology in positive degrees.
CheckReport check_stable_sequences(const CompleteResolutionData& cr, const Module& n,
                                   const std::vector<long>& cuts, bool fresh_unbounded_route,
                                   const std::string& instance);

// Relative homology over proper resolutions against unbounded homology:
// isomorphic in degrees >= 2, three-term left-exact comparison at degree 1.
CheckReport check_relative_comparison(const Module& m, const Module& n,
                                      const CompleteResolutionData& cr, long hi,
                                      const std::string& instance);

// Vanishing band above the Gorenstein flat dimension, recovery of the
// dimension as the top nonvanishing degree over the probe list, and the
// degree-zero identification with the double-dual hom group.
CheckReport check_vanishing_and_dims(const Module& m, const std::vector<Module>& probes,
                                     const std::string& instance);

// Dimension survey: every bounded complex in the corpus obeys
// detected <= max(component dimension) + sup(support); the contractible
// pair lands strictly below its bound and is flagged as such.
CheckReport check_dimension_survey(const Corpus& corpus);

std::vector<std::string> suite_tags();
// All checks on the builtin fixtures in tag order; selection filters by tag
// ("all" or empty keeps everything; unknown tags throw InputError).
std::vector<CheckReport> run_suite(const std::vector<std::string>& selection, long lo = -4,
                                   long hi = 6);
std::string suite_table(const std::vector<CheckReport>& reports);
nlohmann::json suite_json(const std::vector<CheckReport>& reports);
bool suite_pass(const std::vector<CheckReport>& reports);

}  // namespace gorhom
