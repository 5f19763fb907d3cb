#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stickknot/embedding.hpp"
#include "stickknot/knots.hpp"
#include "stickknot/radon.hpp"

// Machine-checkable catalog of the named embeddings, the embedding JSON
// interchange format, and the verification reports that certify each entry's
// computable claims.
//
// The published sources give figures, not coordinates. Every entry here ships
// constructed exact rational coordinates realizing the figure's combinatorial
// piercing and over/under data; each computable claim is then verified by the
// modules above. Isotopy faithfulness to a drawing is not certified, and
// non-paneledness is documentation (it follows from the cited theorems), not
// a machine-checked claim.

namespace stickknot {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Claim {
  enum class Kind {
    Valid,
    StickCount,
    AllCyclesUnknotted,
    HasKnottedCycle,
    Irreducible,            // reduce is the identity
    ContainsSubembedding,   // after deleting listed vertices/edges
    MobiusForm,             // classify_linear_k33 = Mobius (linear K3,3 only)
    RadonType,              // classify_k5 kind (linear K5 only)
    HopfCensusCount,        // linear K6 census count
  };

  Kind kind = Kind::Valid;
  std::size_t stick_count = 0;                  // StickCount
  std::vector<std::string> cycle_vertices;      // HasKnottedCycle
  std::string subembedding;                     // ContainsSubembedding
  std::vector<std::string> delete_vertices;     // ContainsSubembedding
  std::vector<std::pair<std::string, std::string>> delete_edges;
  RadonKind radon_kind = RadonKind::OneInsideFour;  // RadonType
  int census_count = 0;                         // HopfCensusCount

  std::string describe() const;
};

struct CatalogEntry {
  std::string name;
  std::string description;  // provenance notes, including non-machine-checked facts
  PLEmbeddingQ embedding;
  std::vector<Claim> claims;
};

struct ClaimResult {
  Claim claim;
  bool pass = false;
  std::string witness;
};

struct VerificationReport {
  std::string entry_name;
  std::vector<ClaimResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  std::string to_json(int indent = 2) const;
};

// classification of every cycle; cycles under 6 sticks short-circuit to Unknot
template <class S>
std::vector<std::pair<Cycle, KnotClass>> cycle_knot_census(const PLEmbedding<S>& e,
                                                           SplitMix64& rng) {
  std::vector<std::pair<Cycle, KnotClass>> out;
  for (const Cycle& c : enumerate_cycles(e.graph))
    out.emplace_back(c, classify_polygon(realize_cycle(e, c), rng));
  return out;
}

std::vector<std::string> builtin_names();
CatalogEntry builtin(const std::string& name);

// every claim is run through the geometry/knot modules; deterministic for a
// fixed seed (and seed-independent in substance, since projections only
// mediate invariant classifications)
VerificationReport verify(const CatalogEntry& entry, std::uint64_t seed = 1);

// Embedding JSON: {"name": ..., "vertices": {label: [x,y,z]}, "edges":
// [[label, ...], ...]} with coordinates as exact "p/q" or decimal strings.
// First and last labels of an edge sequence are graph vertices, interior
// labels are bends.
CatalogEntry load_embedding_json(const std::string& path);
void save_embedding_json(const CatalogEntry& entry, const std::string& path);
std::string embedding_to_json(const CatalogEntry& entry, int indent = 2);
CatalogEntry embedding_from_json_text(const std::string& text);

}  // namespace stickknot
