#pragma once

#include "mahler/regsing.hpp"

#include <json.hpp>
#include <optional>
#include <string>

namespace mahler {

/// A fully specified run request, as assembled by the CLI.
struct InputDoc {
    long p = 2;
    std::string matrix_text;           // empty when example is set
    std::optional<std::string> example;
    long order = 10;                   // Puiseux exponent bound
    std::optional<long> d_override;
    bool scan_all_d = false;
    enum class Format { Text, Json } format = Format::Text;
};

struct Report {
    InputDoc input;
    std::string matrix_echo;  // serialized input matrix
    Verdict verdict;
    double elapsed_ms = 0;
};

/// Executes the decision procedure described by the document.
/// Throws ParseError for bad input and std::domain_error for singular A.
Report run(const InputDoc& doc);

nlohmann::json to_json(const Report& report);
std::string to_text(const Report& report);

}  // namespace mahler
