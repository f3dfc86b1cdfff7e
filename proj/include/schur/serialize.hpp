#ifndef SCHUR_SERIALIZE_HPP
#define SCHUR_SERIALIZE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schur/regions.hpp"
#include "schur/schur_core.hpp"
#include "schur/types.hpp"

namespace schur::io {

// Raised for malformed input files or arguments.
class InputError : public Error {
public:
    using Error::Error;
};

// Shortest representation that round-trips through strtod.
std::string format_double(double v);

// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i", exponents allowed).
Complex parse_complex(std::string_view text);

// Comma-separated list of parse_complex values.
std::vector<Complex> parse_complex_list(std::string_view text);

nlohmann::json to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

struct JobInput {
    CaratheodoryData data;
    std::string domain = "half-plane";
};

// {"coefficients": [[re,im],...], "domain": "..."}; domain is optional.
JobInput parse_job_input(std::string_view text);

nlohmann::json classification_to_json(const SchurClassification& cls);

void write_boundary_csv(std::ostream& os, const JordanRegion& region);

struct BoundaryCsv {
    std::vector<double> theta;
    std::vector<Complex> points;
    std::optional<nlohmann::json> sidecar;  // trailing JSON after a blank line
};

// Header "theta,re,im", then rows; an optional blank line followed by a JSON
// object ends the table.  Throws InputError on anything malformed.
BoundaryCsv parse_boundary_csv(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace schur::io

#endif  // SCHUR_SERIALIZE_HPP
