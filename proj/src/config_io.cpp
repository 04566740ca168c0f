#include "gdgap/config_io.hpp"

#include <cctype>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

namespace gdgap {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

Point2 parse_pair(const std::string& value, const std::string& key) {
    auto comma = value.find(',');
    if (comma == std::string::npos)
        throw input_error("config: '" + key + "' needs two comma-separated scalars");
    return {Scalar::parse(value.substr(0, comma)), Scalar::parse(value.substr(comma + 1))};
}

}  // namespace

BaseConfig parse_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw input_error("config: line " + std::to_string(lineno) + " is not 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!kv.emplace(key, value).second)
            throw input_error("config: duplicate key '" + key + "'");
    }
    for (const char* req : {"x", "y", "z", "c", "r"})
        if (!kv.count(req)) throw input_error(std::string("config: missing key '") + req + "'");

    long long declared_k = 0;
    if (auto it = kv.find("field"); it != kv.end()) {
        std::istringstream fs(it->second);
        std::string kind;
        fs >> kind;
        if (kind == "rational") {
            if (fs >> kind) throw input_error("config: trailing tokens after 'field = rational'");
        } else if (kind == "quadext") {
            if (!(fs >> declared_k) || !is_square_free(declared_k))
                throw input_error("config: 'field = quadext K' needs a square-free K > 1");
        } else {
            throw input_error("config: field must be 'rational' or 'quadext K'");
        }
        kv.erase(it);
    }
    for (const auto& [key, value] : kv)
        if (key != "x" && key != "y" && key != "z" && key != "c" && key != "r")
            throw input_error("config: unknown key '" + key + "'");

    BaseConfig cfg = BaseConfig::make(parse_pair(kv["x"], "x"), parse_pair(kv["y"], "y"),
                                      parse_pair(kv["z"], "z"), parse_pair(kv["c"], "c"),
                                      Scalar::parse(kv["r"]));
    if (cfg.field_k != 0 && declared_k != 0 && cfg.field_k != declared_k)
        throw input_error("config: literals use sqrt(" + std::to_string(cfg.field_k) +
                          ") but field declares sqrt(" + std::to_string(declared_k) + ")");
    if (cfg.field_k == 0) cfg.field_k = declared_k;
    return cfg;
}

BaseConfig parse_config_text(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

std::string config_text(const BaseConfig& cfg) {
    std::ostringstream out;
    if (cfg.field_k != 0)
        out << "field = quadext " << cfg.field_k << "\n";
    else
        out << "field = rational\n";
    out << "x = " << cfg.x.x1 << ", " << cfg.x.x2 << "\n";
    out << "y = " << cfg.y.x1 << ", " << cfg.y.x2 << "\n";
    out << "z = " << cfg.z.x1 << ", " << cfg.z.x2 << "\n";
    out << "c = " << cfg.c.x1 << ", " << cfg.c.x2 << "\n";
    out << "r = " << cfg.r << "\n";
    return out.str();
}

void Report::add(std::string key, const Scalar& value) {
    entries_.emplace_back(std::move(key), value.str());
    numeric_.push_back(true);
}

void Report::add(std::string key, const Point2& p) {
    entries_.emplace_back(std::move(key), p.x1.str() + ", " + p.x2.str());
    numeric_.push_back(true);
}

void Report::add(std::string key, const Point3& p) {
    entries_.emplace_back(std::move(key), p.x1.str() + ", " + p.x2.str() + ", " + p.x3.str());
    numeric_.push_back(true);
}

void Report::add_text(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
    numeric_.push_back(false);
}

std::string Report::render_text(bool with_approx) const {
    std::ostringstream out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        out << entries_[i].first << " = " << entries_[i].second;
        if (with_approx && numeric_[i]) {
            out << "   (~";
            std::ostringstream approx;
            approx << std::setprecision(12);
            std::istringstream parts(entries_[i].second);
            std::string tok;
            bool first = true;
            while (std::getline(parts, tok, ',')) {
                if (!first) approx << ", ";
                approx << Scalar::parse(tok).to_double();
                first = false;
            }
            out << approx.str() << ")";
        }
        out << "\n";
    }
    return out.str();
}

std::string Report::render_json() const {
    nlohmann::ordered_json j;
    for (const auto& [key, value] : entries_) j[key] = value;
    return j.dump(2);
}

}  // namespace gdgap
