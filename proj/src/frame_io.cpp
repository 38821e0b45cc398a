#include "pclab/frame_io.hpp"

#include <algorithm>
#include <fstream>

namespace pclab {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw FrameIOError("expected rational (integer or \"p/q\" string)");
}

}  // namespace

FrameSpec frame_spec_from_json(const Json& j) {
    FrameSpec spec;
    try {
        spec.label = j.value("label", std::string("unnamed"));
        spec.dim = j.at("dim").get<std::size_t>();
        if (j.contains("params"))
            spec.params = j.at("params").get<std::vector<std::string>>();
        spec.xi_index = j.value("xi_index", std::size_t{0});
        if (spec.xi_index >= spec.dim) throw FrameIOError("xi_index out of range");

        spec.brackets.assign(spec.dim, std::vector<PolyVec>(spec.dim, spec.zero_vec()));
        if (j.contains("brackets"))
            for (const auto& entry : j.at("brackets")) {
                std::size_t a = entry.at("i").get<std::size_t>();
                std::size_t b = entry.at("j").get<std::size_t>();
                if (a >= spec.dim || b >= spec.dim)
                    throw FrameIOError("bracket index out of range");
                for (const auto& [key, value] : entry.at("coeffs").items()) {
                    std::size_t k = static_cast<std::size_t>(std::stoul(key));
                    if (k >= spec.dim) throw FrameIOError("bracket component out of range");
                    Polynomial p = parse_expr(value.get<std::string>(), spec.params);
                    spec.brackets[a][b][k] = p;
                    spec.brackets[b][a][k] = -p;
                }
            }

        const auto& metric = j.at("metric");
        if (metric.size() != spec.dim) throw FrameIOError("metric has wrong dimension");
        spec.metric = RationalMatrix(spec.dim);
        for (std::size_t i = 0; i < spec.dim; ++i) {
            if (metric[i].size() != spec.dim) throw FrameIOError("metric row has wrong length");
            for (std::size_t k = 0; k < spec.dim; ++k)
                spec.metric.at(i, k) = rational_from_json(metric[i][k]);
        }

        if (j.contains("phi") && !j.at("phi").is_null()) {
            const auto& phi = j.at("phi");
            if (phi.size() != spec.dim) throw FrameIOError("phi has wrong dimension");
            RationalMatrix m(spec.dim);
            for (std::size_t i = 0; i < spec.dim; ++i)
                for (std::size_t k = 0; k < spec.dim; ++k)
                    m.at(i, k) = rational_from_json(phi[i][k]);
            spec.phi = m;
        }
        if (j.contains("pairing"))
            for (const auto& pr : j.at("pairing"))
                spec.pairing.emplace_back(pr.at(0).get<std::size_t>(),
                                          pr.at(1).get<std::size_t>());
        if (j.contains("nonzero"))
            spec.nonzero = j.at("nonzero").get<std::vector<std::string>>();
        for (const auto& name : spec.nonzero)
            if (std::find(spec.params.begin(), spec.params.end(), name) == spec.params.end())
                throw FrameIOError("nonzero constraint names unknown parameter: " + name);
        if (!spec.phi.has_value() && spec.pairing.empty())
            throw FrameIOError("frame file needs either \"phi\" or \"pairing\"");
    } catch (const Json::exception& e) {
        throw FrameIOError(std::string("malformed frame file: ") + e.what());
    } catch (const ParseError& e) {
        throw FrameIOError(std::string("expression error: ") + e.what());
    }
    return spec;
}

Json frame_spec_to_json(const FrameSpec& spec) {
    Json j;
    j["label"] = spec.label;
    j["dim"] = spec.dim;
    j["params"] = spec.params;
    Json brackets = Json::array();
    for (std::size_t a = 0; a < spec.dim; ++a)
        for (std::size_t b = a + 1; b < spec.dim; ++b) {
            Json coeffs;
            for (std::size_t k = 0; k < spec.dim; ++k)
                if (!spec.brackets[a][b][k].is_zero())
                    coeffs[std::to_string(k)] = spec.brackets[a][b][k].to_string();
            if (!coeffs.empty()) brackets.push_back({{"i", a}, {"j", b}, {"coeffs", coeffs}});
        }
    j["brackets"] = brackets;
    Json metric = Json::array();
    for (std::size_t i = 0; i < spec.dim; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < spec.dim; ++k) row.push_back(spec.metric.at(i, k).to_string());
        metric.push_back(row);
    }
    j["metric"] = metric;
    j["xi_index"] = spec.xi_index;
    if (spec.phi.has_value()) {
        Json phi = Json::array();
        for (std::size_t i = 0; i < spec.dim; ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < spec.dim; ++k) row.push_back(spec.phi->at(i, k).to_string());
            phi.push_back(row);
        }
        j["phi"] = phi;
    }
    if (!spec.pairing.empty()) {
        Json pairing = Json::array();
        for (auto [a, b] : spec.pairing) pairing.push_back({a, b});
        j["pairing"] = pairing;
    }
    if (!spec.nonzero.empty()) j["nonzero"] = spec.nonzero;
    return j;
}

FrameSpec load_frame_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FrameIOError("cannot open frame file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw FrameIOError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return frame_spec_from_json(j);
}

void save_frame_file(const FrameSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FrameIOError("cannot write frame file: " + path);
    out << frame_spec_to_json(spec).dump(2) << "\n";
}

}  // namespace pclab
