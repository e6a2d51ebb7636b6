#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqr/group.hpp"

namespace pqr {

// A published class name (like "7A") attached to our class invariants.  The
// (element order, class size) pair pins the class up to algebraic conjugacy;
// source says where the label comes from.
struct AtlasName {
    std::uint64_t order = 0;
    std::uint64_t size = 0;
    std::string label;
    std::string source;
};

// Invariants a definition is expected to satisfy, plus externally sourced
// metadata.  Absent fields are simply not checked.
struct ExpectedInvariants {
    std::optional<std::uint64_t> order;
    std::optional<std::uint64_t> center_order;
    std::optional<std::uint64_t> class_count;
    std::optional<std::uint64_t> quotient_order;    // order / center order
    std::optional<std::uint64_t> multiplier_order;  // externally sourced
    std::string multiplier_source;
    std::vector<AtlasName> atlas_names;
};

// One group definition: a realization (permutation generators in disjoint
// cycle notation, or matrix generators over Z/m or GF(q)) plus expectations.
struct GroupSpec {
    enum class Kind { perm_cycles, matrix_mod_m, matrix_gf };

    std::string name;
    Kind kind = Kind::perm_cycles;
    unsigned degree = 0;   // perm_cycles
    unsigned modulus = 0;  // matrix_mod_m
    unsigned field_q = 0;  // matrix_gf
    unsigned dim = 0;      // both matrix kinds
    std::vector<std::vector<std::vector<unsigned>>> cycle_gens;  // 1-indexed points
    std::vector<std::vector<unsigned>> matrix_gens;              // row-major
    ExpectedInvariants expected;
};

// Group-file grammar, line oriented; '#' starts a comment, blank lines are
// skipped:
//   name <text>                                 (optional, before the header)
//   degree N | mod M dim D | field Q dim D      (exactly one header)
//   expect (order|center|classes|quotient) N    (each key at most once)
//   gen (i j ...)(k ...)                        (disjoint cycles, 1-indexed)
//   gen [[a,b,...],...]                         (entries 0..M-1 resp. 0..Q-1)
// Parsing is strict; the first error throws ParseError carrying line and
// column.  Semantic rejects (point out of range, duplicate point, ragged or
// non-invertible matrix) are ParseErrors positioned at the offending token;
// nothing is silently normalized.
GroupSpec parse_group_file(const std::string& text);

// Emits text that parses back to an identical spec.  Externally sourced
// metadata (multiplier, atlas names) is manifest-side and never serialized.
std::string serialize_group_spec(const GroupSpec& spec);

// Build the group a spec describes.  Matrix kinds act on all module points
// (zero included, a fixed point).  Checks expected.order when present;
// a mismatch is a ValidationError.
GroupPtr realize(const GroupSpec& spec);

// One corpus manifest entry.  file entries name a .grp file relative to the
// corpus directory; builtin entries name a constructor key:
//   extraspecial <p> <n> <p|p2|plus|minus>
//   semidirect <p> <n> <p|p2|plus|minus> <2n*2n matrix entries, row-major>
//   value <n> <n_i>
// An entry with neither must be marked optional; it loads with a null group.
struct CorpusEntry {
    std::string name;
    std::string file;
    std::string builtin;
    bool optional_entry = false;
    ExpectedInvariants expected;
    std::vector<std::string> provenance;
    GroupPtr group;
};

// $PQR_CORPUS_DIR when set and nonempty, else the build-time default (the
// source tree's data directory).
std::string default_corpus_dir();

// Parse just the manifest text (no group construction).
std::vector<CorpusEntry> parse_manifest(const std::string& text);

// Load the manifest in dir (default_corpus_dir() when empty), realize every
// entry, and validate order, center order, class count, quotient order, and
// atlas records against the computed group.  Failures throw ValidationError
// naming the entry and the mismatched quantity.  Optional entries without a
// readable realization come back with a null group.
std::vector<CorpusEntry> corpus(const std::string& dir = "");

// Entry lookup; NoneFoundError when the name is absent.
const CorpusEntry& find_entry(const std::vector<CorpusEntry>& entries, const std::string& name);

// Classes of g whose (element order, size) match the record, ascending.
std::vector<std::uint32_t> atlas_matches(const Group& g, const AtlasName& rec);

}  // namespace pqr
