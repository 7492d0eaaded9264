#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dynkin {

/// Declaration order is the tie-break order used in canonical labels.
enum class Family : std::uint8_t { E, D, A, G2, G1, BC1 };

/// A connected Dynkin graph type: A(n) n>=1, D(n) n>=4, E(6|7|8), BC1, G1, G2.
class ComponentKind {
public:
    static ComponentKind a(int n) { return make(Family::A, n); }
    static ComponentKind d(int n) { return make(Family::D, n); }
    static ComponentKind e(int n) { return make(Family::E, n); }
    static ComponentKind bc1() { return make(Family::BC1, 1); }
    static ComponentKind g1() { return make(Family::G1, 1); }
    static ComponentKind g2() { return make(Family::G2, 2); }

    /// Throws std::invalid_argument for ranks outside the catalog (D3, E9, A0, ...).
    static ComponentKind make(Family family, int rank);

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] int rank() const noexcept { return rank_; }
    [[nodiscard]] int vertex_count() const noexcept { return rank_; }
    [[nodiscard]] bool is_ade() const noexcept
    {
        return family_ == Family::A || family_ == Family::D || family_ == Family::E;
    }
    [[nodiscard]] std::string name() const;

    /// Canonical order: more vertices first, then E < D < A < G2 < G1 < BC1.
    friend std::strong_ordering operator<=>(const ComponentKind& lhs, const ComponentKind& rhs) noexcept;
    friend bool operator==(const ComponentKind&, const ComponentKind&) noexcept = default;

private:
    ComponentKind(Family family, int rank) : family_(family), rank_(rank) {}
    Family family_;
    int rank_;
};

/// Every kind up to the given A/D rank, plus E6..E8, BC1, G1 and G2.
std::vector<ComponentKind> catalog_kinds(int max_rank);

/// Isomorphism class of a Dynkin graph: an order-free multiset of component kinds.
class Combination {
public:
    Combination() = default;
    Combination(std::initializer_list<ComponentKind> kinds);
    explicit Combination(std::vector<ComponentKind> kinds);

    [[nodiscard]] const std::vector<ComponentKind>& components() const noexcept { return kinds_; }
    [[nodiscard]] bool empty() const noexcept { return kinds_.empty(); }
    [[nodiscard]] std::size_t component_count() const noexcept { return kinds_.size(); }
    [[nodiscard]] int total_rank() const noexcept;
    [[nodiscard]] bool is_ade_only() const noexcept;

    /// Multiset union.
    [[nodiscard]] Combination operator+(const Combination& other) const;
    [[nodiscard]] Combination with(ComponentKind kind) const;

    /// Larger total rank first, then lexicographic on the canonical component sequence.
    friend std::strong_ordering operator<=>(const Combination& lhs, const Combination& rhs) noexcept;
    friend bool operator==(const Combination&, const Combination&) noexcept = default;

private:
    std::vector<ComponentKind> kinds_;  // sorted canonically
};

using CombinationSet = std::set<Combination>;

class LabelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Canonical label, e.g. "D4+3A1", "E8+BC1", or "0" for the empty combination.
std::string format_label(const Combination& c);

/// Inverse of format_label. Accepts any term order and repeated terms.
/// Throws LabelError naming the offending term.
Combination parse_label(std::string_view label);

/// Labels sorted lexicographically, the order used for listings and cache files.
std::vector<std::string> sorted_labels(const CombinationSet& set);

}  // namespace dynkin
