#include "schur/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace schur::io {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw InputError("malformed complex number: '" + std::string(whole) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Complex parse_complex(std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (ch != ' ' && ch != '\t')
            compact.push_back(ch);
    std::string_view s = compact;
    if (s.empty())
        throw InputError("empty complex number");

    if (s.back() != 'i')
        return {parse_real(s, text), 0.0};

    s.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string_view re_part = split == std::string_view::npos ? "" : s.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
    double im = 0.0;
    if (im_part.empty() || im_part == "+")
        im = 1.0;
    else if (im_part == "-")
        im = -1.0;
    else
        im = parse_real(im_part, text);
    const double re = re_part.empty() ? 0.0 : parse_real(re_part, text);
    return {re, im};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_complex(text.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError("complex numbers must be [re, im] arrays");
    const Complex z{j[0].get<double>(), j[1].get<double>()};
    if (!is_finite(z))
        throw InputError("complex number is not finite");
    return z;
}

JobInput parse_job_input(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("coefficients") || !doc["coefficients"].is_array())
        throw InputError("input needs a \"coefficients\" array");
    std::vector<Complex> coeffs;
    for (const auto& c : doc["coefficients"])
        coeffs.push_back(complex_from_json(c));
    if (coeffs.empty())
        throw InputError("\"coefficients\" must not be empty");
    std::string domain = "half-plane";
    if (doc.contains("domain")) {
        if (!doc["domain"].is_string())
            throw InputError("\"domain\" must be a string");
        domain = doc["domain"].get<std::string>();
    }
    return {CaratheodoryData(std::move(coeffs)), std::move(domain)};
}

nlohmann::json classification_to_json(const SchurClassification& cls) {
    nlohmann::json out;
    auto gamma_json = [](const std::vector<Complex>& g) {
        nlohmann::json arr = nlohmann::json::array();
        for (Complex z : g)
            arr.push_back(to_json(z));
        return arr;
    };
    if (const auto* in = std::get_if<Interior>(&cls)) {
        out["class"] = "interior";
        out["gamma"] = gamma_json(in->gamma);
    } else if (const auto* b = std::get_if<Boundary>(&cls)) {
        out["class"] = "boundary";
        out["gamma"] = gamma_json(b->gamma_prefix);
        out["unimodular_index"] = b->unimodular_index;
    } else {
        const auto& ex = std::get<Exterior>(cls);
        out["class"] = "exterior";
        out["witness_index"] = ex.witness_index;
        out["reason"] = ex.reason == ExteriorReason::ModulusExceedsOne
                            ? "modulus_exceeds_one"
                            : "unimodular_with_nonzero_tail";
    }
    return out;
}

void write_boundary_csv(std::ostream& os, const JordanRegion& region) {
    os << "theta,re,im\n";
    for (std::size_t k = 0; k < region.boundary.size(); ++k) {
        os << format_double(region.eps_angles[k]) << ',' << format_double(region.boundary[k].real())
           << ',' << format_double(region.boundary[k].imag()) << '\n';
    }
}

BoundaryCsv parse_boundary_csv(std::string_view text) {
    BoundaryCsv out;
    std::size_t pos = 0;
    auto next_line = [&](std::string_view& line) {
        if (pos >= text.size())
            return false;
        const auto nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        return true;
    };

    std::string_view line;
    if (!next_line(line) || trim(line) != "theta,re,im")
        throw InputError("CSV must start with the header 'theta,re,im'");
    std::size_t row = 1;
    while (next_line(line)) {
        ++row;
        if (trim(line).empty())
            break;
        std::vector<std::string_view> cells;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            cells.push_back(trim(rest.substr(0, comma)));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        if (cells.size() != 3)
            throw InputError("CSV row " + std::to_string(row) + " does not have three columns");
        try {
            out.theta.push_back(parse_real(cells[0], line));
            out.points.emplace_back(parse_real(cells[1], line), parse_real(cells[2], line));
        } catch (const InputError&) {
            throw InputError("CSV row " + std::to_string(row) + " is not numeric");
        }
    }
    const std::string_view tail = trim(text.substr(std::min(pos, text.size())));
    if (!tail.empty()) {
        try {
            out.sidecar = nlohmann::json::parse(tail);
        } catch (const nlohmann::json::parse_error&) {
            throw InputError("content after the CSV table is not a JSON object");
        }
        if (!out.sidecar->is_object())
            throw InputError("content after the CSV table is not a JSON object");
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << contents;
}

}  // namespace schur::io
