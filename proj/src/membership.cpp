#include "dynkin/membership.hpp"

#include "dynkin/graph.hpp"

namespace dynkin {

Verdict check_membership(const SingularityClass& c, std::string_view label, bool want_witness, Method method,
                         const PcOptions& options, const std::optional<std::filesystem::path>& cache_dir)
{
    Verdict v{parse_label(label), false, std::nullopt};
    auto pc = cached_pc(c, method, options, cache_dir);
    v.member = pc.members.contains(v.graph);
    if (!v.member || !want_witness)
        return v;

    v.witness = find_witness(c, method, v.graph);
    if (v.witness && v.witness->origin == Witness::Origin::Exception && !pc.options.include_exceptions)
        v.witness.reset();
    if (!v.witness)
        throw InvariantViolation("no derivation found for member " + format_label(v.graph));
    if (replay_witness(c, method, *v.witness) != v.graph)
        throw InvariantViolation("witness for " + format_label(v.graph) + " does not replay");
    return v;
}

Verdict check_membership(const SingularityClass& c, std::string_view label, bool want_witness)
{
    return check_membership(c, label, want_witness, canonical_method(c));
}

}  // namespace dynkin
