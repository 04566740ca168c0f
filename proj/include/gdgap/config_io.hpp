#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gdgap/base_triangle.hpp"

namespace gdgap {

/// Line-oriented config:
///   field = rational            (or: field = quadext K)
///   x = <scalar>, <scalar>
///   y = ..., z = ..., c = ...
///   r = <scalar>
/// '#' starts a comment; keys may appear in any order; all are required
/// except field, which defaults to rational and is cross-checked against
/// the literals.
BaseConfig parse_config(std::istream& in);
BaseConfig parse_config_text(const std::string& text);

std::string config_text(const BaseConfig& cfg);

/// Ordered exact-literal report.  Every value round-trips through
/// Scalar::parse; the text renderer can append "~" decimal previews
/// (12 significant digits, never used in comparisons).
class Report {
public:
    void add(std::string key, const Scalar& value);
    void add(std::string key, const Point2& p);
    void add(std::string key, const Point3& p);
    void add_text(std::string key, std::string value);

    std::string render_text(bool with_approx) const;
    std::string render_json() const;

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
    std::vector<bool> numeric_;
};

}  // namespace gdgap
