#include "hzent/serialization.hpp"

#include "hzent/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>

namespace hzent {

namespace {

std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string csv_field(std::string_view s) {
    if(s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string quoted = "\"";
    for(char c : s) {
        if(c == '"') quoted += '"';
        quoted += c == '\n' ? ' ' : c;
    }
    return quoted + "\"";
}

std::string label_json(Statistics statistics, const OccupationLabel& label) {
    if(statistics == Statistics::boson) return std::to_string(label.particle);
    return "[" + std::to_string(label.particle) + "," + std::to_string(label.antiparticle) + "]";
}

} // namespace

std::string format_double(double v) {
    if(std::isnan(v)) return "nan";
    if(std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string csv_row(const SweepPoint& point, double mass) {
    std::string row = format_double(point.x) + "," + format_double(point.omega) + "," + format_double(mass) + "," +
                      std::string(to_string(point.statistics)) + ",";
    if(point.report) {
        const auto& r = *point.report;
        row += format_double(r.entropy_closed_form) + "," + format_double(r.entropy_numerical) + "," +
               format_double(r.abs_gap) + "," + format_double(r.mean_occupation) + "," +
               format_double(r.fitted_temperature_ratio) + ",";
    } else {
        row += ",,,,," + csv_field(point.error);
    }
    return row;
}

std::string json_object(const SweepPoint& point, double mass) {
    std::string o = "{\"x\":" + json_number(point.x) + ",\"omega\":" + json_number(point.omega) +
                    ",\"mass\":" + json_number(mass) + ",\"statistics\":" + json_string(to_string(point.statistics));
    if(point.report) {
        const auto& r = *point.report;
        o += ",\"S_closed\":" + json_number(r.entropy_closed_form) + ",\"S_numeric\":" + json_number(r.entropy_numerical) +
             ",\"gap\":" + json_number(r.abs_gap) + ",\"mean_occ\":" + json_number(r.mean_occupation) +
             ",\"T_ratio\":" + json_number(r.fitted_temperature_ratio) + ",\"error\":null}";
    } else {
        o += ",\"S_closed\":null,\"S_numeric\":null,\"gap\":null,\"mean_occ\":null,\"T_ratio\":null,\"error\":" +
             json_string(point.error) + "}";
    }
    return o;
}

std::string format_points(const std::vector<SweepPoint>& points, double mass, bool json) {
    std::string out;
    if(json) {
        out = "[";
        for(std::size_t i = 0; i < points.size(); ++i) {
            out += i == 0 ? "\n  " : ",\n  ";
            out += json_object(points[i], mass);
        }
        out += "\n]\n";
        return out;
    }
    out = std::string(kCsvHeader) + "\n";
    for(const auto& p : points) out += csv_row(p, mass) + "\n";
    return out;
}

std::string density_to_json(const DensityOperator& rho, const std::optional<StateHeader>& header,
                            const std::vector<std::pair<std::string, std::string>>& extra) {
    std::string o = "{\n";
    if(header) {
        o += "  \"squeezing\": {\"statistics\": " + json_string(to_string(header->statistics)) +
             ", \"r\": " + json_number(header->r) + ", \"x\": " + json_number(header->x) + "},\n";
    }
    for(const auto& [key, value] : extra) o += "  " + json_string(key) + ": " + value + ",\n";

    o += "  \"basis\": [";
    for(std::size_t i = 0; i < rho.basis().size(); ++i) {
        if(i) o += ", ";
        o += label_json(rho.statistics(), rho.basis()[i]);
    }
    o += "],\n  \"diag\": [";
    const auto d = rho.diagonal_entries();
    for(std::size_t i = 0; i < d.size(); ++i) {
        if(i) o += ", ";
        o += json_number(d[i]);
    }
    o += "],\n  \"offdiag_norm\": " + json_number(rho.offdiag_norm()) + "\n}\n";
    return o;
}

DensityOperator density_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch(const nlohmann::json::parse_error& e) {
        throw InvalidParameter(std::string("malformed density-operator JSON: ") + e.what());
    }
    if(!doc.is_object() || !doc.contains("basis") || !doc.contains("diag") || !doc.contains("offdiag_norm"))
        throw InvalidParameter("density-operator JSON needs basis, diag and offdiag_norm");

    const auto& basis_json = doc.at("basis");
    const auto& diag_json = doc.at("diag");
    if(!basis_json.is_array() || !diag_json.is_array() || basis_json.size() != diag_json.size() || basis_json.empty())
        throw InvalidParameter("basis and diag must be nonempty arrays of equal length");
    if(!doc.at("offdiag_norm").is_number()) throw InvalidParameter("offdiag_norm must be a number");
    if(doc.at("offdiag_norm").get<double>() > kDiagonalTolerance)
        throw InvalidDensityOperator("serialized operator has off-diagonal mass; only diagonal operators round-trip");

    const Statistics statistics = basis_json.front().is_array() ? Statistics::fermion : Statistics::boson;
    if(doc.contains("squeezing") && statistics_from_string(doc.at("squeezing").at("statistics").get<std::string>()) !=
                                        statistics)
        throw InvalidParameter("label shape does not match the squeezing header statistics");

    std::vector<OccupationLabel> basis;
    std::vector<double> weights;
    try {
        for(const auto& label : basis_json) {
            if(statistics == Statistics::fermion) {
                if(!label.is_array() || label.size() != 2) throw InvalidParameter("fermionic labels are [particle, antiparticle]");
                basis.push_back({label[0].get<int>(), label[1].get<int>()});
            } else {
                if(!label.is_number_integer()) throw InvalidParameter("bosonic labels are integers");
                basis.push_back({label.get<int>(), 0});
            }
        }
        for(const auto& w : diag_json) weights.push_back(w.get<double>());
    } catch(const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("malformed density-operator JSON: ") + e.what());
    }
    return DensityOperator::diagonal(statistics, std::move(basis), weights, 1e-6);
}

} // namespace hzent
