#include "amgm/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace amgm::io {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string number_token(const nlohmann::json& v, const char* what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    throw std::invalid_argument(std::string(what) + " must hold numbers or decimal strings");
}

std::vector<std::vector<std::string>> samples_from_json(const nlohmann::json& j) {
    std::vector<std::vector<std::string>> out;
    if (j.is_array()) {
        if (j.empty()) throw std::invalid_argument("empty JSON array holds no sample");
        if (j.front().is_array()) {
            for (const auto& inner : j) {
                if (!inner.is_array())
                    throw std::invalid_argument("mixed JSON input: expected an array of arrays");
                std::vector<std::string> vals;
                for (const auto& v : inner) vals.push_back(number_token(v, "sample entry"));
                out.push_back(std::move(vals));
            }
        } else {
            std::vector<std::string> vals;
            for (const auto& v : j) vals.push_back(number_token(v, "sample entry"));
            out.push_back(std::move(vals));
        }
        return out;
    }
    if (j.is_object() && j.contains("results") && j["results"].is_array()) {
        for (const auto& res : j["results"]) {
            if (!res.contains("values") || !res["values"].is_array()) continue;
            std::vector<std::string> vals;
            for (const auto& v : res["values"]) {
                if (!v.is_object() || !v.contains("lo"))
                    throw std::invalid_argument("report values must be {lo, hi} objects");
                vals.push_back(number_token(v["lo"], "report value"));
            }
            if (!vals.empty()) out.push_back(std::move(vals));
        }
        if (out.empty())
            throw std::invalid_argument("report JSON contains no result with values");
        return out;
    }
    throw std::invalid_argument("unsupported JSON shape for sample input");
}

}

std::vector<std::string> parse_inline_values(const std::string& text) {
    std::string body = text;
    std::size_t b = body.find_first_not_of(" \t");
    std::size_t e = body.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty sample");
    body = body.substr(b, e - b + 1);
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);
    auto tokens = split_tokens(body);
    if (tokens.empty()) throw std::invalid_argument("empty sample");
    return tokens;
}

std::vector<std::vector<std::string>> read_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();

    std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("input file is empty: " + path);

    if (content[first] == '[' || content[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(content, nullptr, false);
        if (j.is_discarded())
            throw std::invalid_argument("input file is not valid JSON: " + path);
        return samples_from_json(j);
    }

    std::vector<std::vector<std::string>> out;
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto tokens = split_tokens(line);
        if (!tokens.empty()) out.push_back(std::move(tokens));
    }
    if (out.empty()) throw std::invalid_argument("no samples found in " + path);
    return out;
}

}
