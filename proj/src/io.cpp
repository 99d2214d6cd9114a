#include "rhm/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>

namespace rhm {

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kDigits[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp, ec);
            throw IoError("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename " + tmp.string() + " to " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failed for " + path.string());
    return ss.str();
}

nlohmann::json sigma_to_json(const SigmaSpec& spec) {
    if (spec.kind() == SigmaSpec::Kind::power_law) {
        return {{"kind", "power-law"}, {"epsilon", spec.epsilon()}, {"beta", spec.beta()}};
    }
    return {{"kind", "explicit"}, {"values", spec.values()}};
}

SigmaSpec sigma_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("sigma: expected an object");
    const std::string kind = j.value("kind", std::string("power-law"));
    try {
        if (kind == "power-law") {
            return SigmaSpec::power_law(j.value("epsilon", 1.0), j.value("beta", 0.0));
        }
        if (kind == "explicit") {
            if (!j.contains("values")) throw std::invalid_argument("sigma.values: missing");
            return SigmaSpec::table(j.at("values").get<std::vector<double>>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sigma: ") + e.what());
    }
    throw std::invalid_argument("sigma.kind: expected \"power-law\" or \"explicit\", got \"" + kind + "\"");
}

}  // namespace rhm
