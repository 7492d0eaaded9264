#include "dynkin/cache.hpp"

#include <atomic>
#include <cctype>
#include <fstream>

#include <unistd.h>

namespace dynkin {

namespace fs = std::filesystem;

namespace {

nlohmann::json options_json(Method method, const PcOptions& options)
{
    auto doc = nlohmann::json::object();
    if (method == Method::Thm1)
        doc["include_exceptions"] = options.include_exceptions;
    return doc;
}

PcOptions normalized(Method method, const PcOptions& options)
{
    return method == Method::Thm1 ? options : PcOptions{};
}

std::string file_stem(const SingularityClass& c)
{
    std::string out;
    for (char ch : class_string(c)) {
        if (std::isalnum(static_cast<unsigned char>(ch)))
            out += ch;
        else if (ch == '+')
            out += "_p_";
        else if (ch == ',')
            out += '_';
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const PcResult& r)
{
    return {
        {"schema_version", kCacheSchemaVersion},
        {"class", class_string(r.cls)},
        {"method", std::string(method_name(r.method))},
        {"options", options_json(r.method, r.options)},
        {"members", sorted_labels(r.members)},
    };
}

PcResult from_json(const nlohmann::json& doc)
{
    try {
        auto method = parse_method(doc.at("method").get<std::string>());
        PcOptions options;
        if (method == Method::Thm1)
            options.include_exceptions = doc.at("options").at("include_exceptions").get<bool>();
        CombinationSet members;
        for (const auto& label : doc.at("members"))
            members.insert(parse_label(label.get<std::string>()));
        return {parse_class(doc.at("class").get<std::string>()), method, options, std::move(members)};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed PC document: ") + e.what());
    }
}

fs::path cache_path(const fs::path& dir, const SingularityClass& c, Method method, const PcOptions& options)
{
    std::string name = file_stem(c) + "." + std::string(method_name(method));
    if (method == Method::Thm1)
        name += options.include_exceptions ? ".exc" : ".noexc";
    return dir / (name + ".json");
}

void save_cache(const PcResult& r, const fs::path& dir)
{
    static std::atomic<unsigned> counter{0};
    fs::create_directories(dir);
    auto target = cache_path(dir, r.cls, r.method, r.options);
    auto temp = target;
    temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(temp, std::ios::trunc);
        out << to_json(r).dump(2) << '\n';
        if (!out)
            throw std::runtime_error("cannot write cache file " + temp.string());
    }
    fs::rename(temp, target);
}

std::optional<PcResult> load_cache(const SingularityClass& c, Method method, const PcOptions& options,
                                   const fs::path& dir)
{
    auto path = cache_path(dir, c, method, options);
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw CacheCorruption("corrupt cache file " + path.string() + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
        throw CacheCorruption("corrupt cache file " + path.string() + ": missing schema_version");
    if (doc["schema_version"].get<int>() != kCacheSchemaVersion)
        return std::nullopt;
    PcResult r;
    try {
        r = from_json(doc);
    } catch (const std::invalid_argument& e) {
        throw CacheCorruption("corrupt cache file " + path.string() + ": " + e.what());
    }
    if (!(r.cls == c) || r.method != method || r.options != normalized(method, options))
        return std::nullopt;
    return r;
}

PcResult cached_pc(const SingularityClass& c, Method method, const PcOptions& options,
                   const std::optional<fs::path>& dir)
{
    if (dir) {
        if (auto hit = load_cache(c, method, options, *dir))
            return *std::move(hit);
    }
    auto r = compute_pc(c, method, normalized(method, options));
    if (dir)
        save_cache(r, *dir);
    return r;
}

}  // namespace dynkin
