#include "grasslog/config_io.hpp"

#include <cstdio>
#include <fstream>

#include "grasslog/errors.hpp"

namespace grasslog {

namespace {

Rational rational_from_json(const Json& num, const Json& den) {
    auto parse = [](const Json& j) -> Rational {
        if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return Rational::from_string(j.get<std::string>());
        throw Error("configuration: exact entries must be integers or integer strings");
    };
    Rational d = parse(den);
    if (d.is_zero()) throw Error("configuration: zero denominator");
    return parse(num) / d;
}

Json rational_part_to_json(const Rational& r, bool numerator) {
    if (r.fits_long())
        return Json(numerator ? static_cast<long long>(r.num_long())
                              : static_cast<long long>(r.den_long()));
    return Json(numerator ? r.num_str() : r.den_str());
}

} // namespace

AnyConfiguration configuration_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("backend") || !j.contains("vectors"))
        throw Error("configuration: need fields dim, backend, vectors");
    int dim = j.at("dim").get<int>();
    std::string backend = j.at("backend").get<std::string>();
    const Json& vecs = j.at("vectors");
    if (!vecs.is_array() || vecs.empty()) throw Error("configuration: vectors must be a non-empty array");

    if (backend == "exact") {
        std::vector<std::vector<GaussianRational>> v;
        for (const Json& vec : vecs) {
            std::vector<GaussianRational> row;
            for (const Json& entry : vec) {
                if (!entry.is_array() || entry.size() != 4)
                    throw Error("configuration: exact entries are [re_num, re_den, im_num, im_den]");
                row.emplace_back(rational_from_json(entry[0], entry[1]),
                                 rational_from_json(entry[2], entry[3]));
            }
            v.push_back(std::move(row));
        }
        return ConfigurationQ(dim, std::move(v));
    }
    if (backend == "float") {
        std::vector<std::vector<Cd>> v;
        for (const Json& vec : vecs) {
            std::vector<Cd> row;
            for (const Json& entry : vec) {
                if (!entry.is_array() || entry.size() != 2)
                    throw Error("configuration: float entries are [re, im]");
                row.emplace_back(entry[0].get<double>(), entry[1].get<double>());
            }
            v.push_back(std::move(row));
        }
        return ConfigurationF(dim, std::move(v));
    }
    throw Error("configuration: backend must be \"exact\" or \"float\"");
}

AnyConfiguration load_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open configuration file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error("configuration parse error in " + path + ": " + e.what());
    }
    return configuration_from_json(j);
}

Json configuration_to_json(const ConfigurationQ& c) {
    Json j;
    j["dim"] = c.dim();
    j["backend"] = "exact";
    Json vecs = Json::array();
    for (const auto& vec : c.vectors()) {
        Json row = Json::array();
        for (const auto& x : vec) {
            Json entry = Json::array();
            entry.push_back(rational_part_to_json(x.re, true));
            entry.push_back(rational_part_to_json(x.re, false));
            entry.push_back(rational_part_to_json(x.im, true));
            entry.push_back(rational_part_to_json(x.im, false));
            row.push_back(std::move(entry));
        }
        vecs.push_back(std::move(row));
    }
    j["vectors"] = std::move(vecs);
    return j;
}

Json configuration_to_json(const ConfigurationF& c) {
    Json j;
    j["dim"] = c.dim();
    j["backend"] = "float";
    Json vecs = Json::array();
    for (const auto& vec : c.vectors()) {
        Json row = Json::array();
        for (const auto& x : vec) row.push_back(Json::array({x.real(), x.imag()}));
        vecs.push_back(std::move(row));
    }
    j["vectors"] = std::move(vecs);
    return j;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace grasslog
