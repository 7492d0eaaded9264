#include "dynkin/combination.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace dynkin {

ComponentKind ComponentKind::make(Family family, int rank)
{
    bool ok = false;
    switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::BC1: ok = rank == 1; break;
    case Family::G1: ok = rank == 1; break;
    case Family::G2: ok = rank == 2; break;
    }
    if (!ok)
        throw std::invalid_argument("invalid Dynkin component rank " + std::to_string(rank));
    return ComponentKind(family, rank);
}

std::string ComponentKind::name() const
{
    switch (family_) {
    case Family::A: return "A" + std::to_string(rank_);
    case Family::D: return "D" + std::to_string(rank_);
    case Family::E: return "E" + std::to_string(rank_);
    case Family::BC1: return "BC1";
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    }
    return "?";
}

std::strong_ordering operator<=>(const ComponentKind& lhs, const ComponentKind& rhs) noexcept
{
    if (auto c = rhs.rank_ <=> lhs.rank_; c != 0)
        return c;
    return lhs.family_ <=> rhs.family_;
}

std::vector<ComponentKind> catalog_kinds(int max_rank)
{
    std::vector<ComponentKind> out;
    for (int n = 1; n <= max_rank; ++n)
        out.push_back(ComponentKind::a(n));
    for (int n = 4; n <= max_rank; ++n)
        out.push_back(ComponentKind::d(n));
    for (int n = 6; n <= 8; ++n)
        out.push_back(ComponentKind::e(n));
    out.push_back(ComponentKind::bc1());
    out.push_back(ComponentKind::g1());
    out.push_back(ComponentKind::g2());
    return out;
}

Combination::Combination(std::initializer_list<ComponentKind> kinds)
    : Combination(std::vector<ComponentKind>(kinds))
{
}

Combination::Combination(std::vector<ComponentKind> kinds) : kinds_(std::move(kinds))
{
    std::sort(kinds_.begin(), kinds_.end());
}

int Combination::total_rank() const noexcept
{
    return std::accumulate(kinds_.begin(), kinds_.end(), 0,
                           [](int acc, const ComponentKind& k) { return acc + k.vertex_count(); });
}

bool Combination::is_ade_only() const noexcept
{
    return std::all_of(kinds_.begin(), kinds_.end(), [](const ComponentKind& k) { return k.is_ade(); });
}

Combination Combination::operator+(const Combination& other) const
{
    Combination out;
    out.kinds_.reserve(kinds_.size() + other.kinds_.size());
    std::merge(kinds_.begin(), kinds_.end(), other.kinds_.begin(), other.kinds_.end(),
               std::back_inserter(out.kinds_));
    return out;
}

Combination Combination::with(ComponentKind kind) const
{
    Combination out = *this;
    out.kinds_.insert(std::upper_bound(out.kinds_.begin(), out.kinds_.end(), kind), kind);
    return out;
}

std::strong_ordering operator<=>(const Combination& lhs, const Combination& rhs) noexcept
{
    if (auto c = rhs.total_rank() <=> lhs.total_rank(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(lhs.kinds_.begin(), lhs.kinds_.end(),
                                                  rhs.kinds_.begin(), rhs.kinds_.end());
}

std::string format_label(const Combination& c)
{
    if (c.empty())
        return "0";
    std::string out;
    const auto& kinds = c.components();
    for (std::size_t i = 0; i < kinds.size();) {
        std::size_t j = i;
        while (j < kinds.size() && kinds[j] == kinds[i])
            ++j;
        if (!out.empty())
            out += '+';
        if (j - i > 1)
            out += std::to_string(j - i);
        out += kinds[i].name();
        i = j;
    }
    return out;
}

namespace {

// Parses a canonical positive decimal (no sign, no leading zero) at the front of `s`.
bool take_integer(std::string_view& s, int& value)
{
    std::size_t n = 0;
    while (n < s.size() && s[n] >= '0' && s[n] <= '9')
        ++n;
    if (n == 0 || (s[0] == '0'))
        return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + n, value);
    if (ec != std::errc{} || ptr != s.data() + n)
        return false;
    s.remove_prefix(n);
    return true;
}

void parse_term(std::string_view term, std::vector<ComponentKind>& out)
{
    auto fail = [&](const std::string& why) {
        throw LabelError("bad label term '" + std::string(term) + "': " + why);
    };
    std::string_view rest = term;
    int multiplicity = 1;
    if (!rest.empty() && rest[0] >= '0' && rest[0] <= '9') {
        if (!take_integer(rest, multiplicity))
            fail("malformed multiplicity");
        if (multiplicity < 2)
            fail("multiplicity must be at least 2");
    }
    ComponentKind kind = ComponentKind::a(1);
    if (rest == "BC1") {
        kind = ComponentKind::bc1();
    } else if (rest == "G1") {
        kind = ComponentKind::g1();
    } else if (rest == "G2") {
        kind = ComponentKind::g2();
    } else {
        if (rest.empty())
            fail("missing component type");
        Family family{};
        switch (rest[0]) {
        case 'A': family = Family::A; break;
        case 'D': family = Family::D; break;
        case 'E': family = Family::E; break;
        default: fail("unknown component type");
        }
        rest.remove_prefix(1);
        int rank = 0;
        if (!take_integer(rest, rank) || !rest.empty())
            fail("malformed rank");
        try {
            kind = ComponentKind::make(family, rank);
        } catch (const std::invalid_argument&) {
            fail("rank out of range");
        }
    }
    out.insert(out.end(), static_cast<std::size_t>(multiplicity), kind);
}

}  // namespace

Combination parse_label(std::string_view label)
{
    if (label == "0")
        return {};
    if (label.empty())
        throw LabelError("empty label");
    std::vector<ComponentKind> kinds;
    std::size_t start = 0;
    while (true) {
        auto plus = label.find('+', start);
        auto term = label.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        parse_term(term, kinds);
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }
    return Combination(std::move(kinds));
}

std::vector<std::string> sorted_labels(const CombinationSet& set)
{
    std::vector<std::string> out;
    out.reserve(set.size());
    for (const auto& c : set)
        out.push_back(format_label(c));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dynkin
