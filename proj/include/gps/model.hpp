#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gps/algebra.hpp"
#include "gps/errors.hpp"

namespace gps {

/// A parsed .gps instance: grading group, ring, module, and named
/// submodules and subsets in declaration order.
struct Model {
    GradingGroup group;
    BaseRing ring = BaseRing::integers();
    GradedModule module{BaseRing::integers(), GradingGroup(), {}};
    std::vector<std::pair<std::string, GradedSubmodule>> submodules;
    std::vector<std::pair<std::string, std::vector<std::string>>> subsets;

    const GradedSubmodule& submodule(const std::string& name) const;
    bool has_submodule(const std::string& name) const;

    friend bool operator==(const Model& a, const Model& b);
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, std::string message, std::string token);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }
    const std::string& token() const { return token_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::string token_;
};

Model parse_model(std::string_view text);
Model load_model(const std::string& path);

// Canonical text; parse_model(render_model(m)) == m.
std::string render_model(const Model& m);

std::string format_degree(const GradingGroup& g, const Degree& d);
std::string format_vector(const std::vector<Int>& v);
// "2Z x 0", "2Z8", or the generator list when N is not a product of
// per-factor subgroups.
std::string pretty_submodule(const GradedSubmodule& n);
// "(0,3), (2,0)" style canonical generator list, "0" for the zero submodule.
std::string generator_list(const GradedSubmodule& n);

}  // namespace gps
