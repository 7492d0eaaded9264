#pragma once

#include "dynkin/cache.hpp"
#include "dynkin/engine.hpp"

#include <filesystem>
#include <optional>
#include <string_view>

namespace dynkin {

struct Verdict {
    Combination graph;
    bool member = false;
    std::optional<Witness> witness;
};

/// Membership of a labelled graph in the PC set of a class, computed (or loaded
/// from `cache_dir`) with `method`. A requested witness is replayed before it is
/// returned; a witness that does not replay raises InvariantViolation.
/// Throws LabelError for a malformed label.
Verdict check_membership(const SingularityClass& c, std::string_view label, bool want_witness, Method method,
                         const PcOptions& options = {},
                         const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

Verdict check_membership(const SingularityClass& c, std::string_view label, bool want_witness = false);

}  // namespace dynkin
