#include "tidecal/model.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tidecal/errors.hpp"

namespace tidecal {

using nlohmann::json;

void VanGenuchtenParams::validate() const {
    if (!(n > 1.0)) throw InvalidArgument("van Genuchten n must exceed 1");
    if (!(a > 0.0)) throw InvalidArgument("van Genuchten a must be positive");
    const double mm = m();
    if (!(mm > 0.0 && mm < 1.0)) throw InvalidArgument("van Genuchten m out of (0,1)");
    if (!(theta_r < theta_s && theta_s <= 1.0 && theta_r >= 0.0)) {
        throw InvalidArgument("need 0 <= theta_r < theta_s <= 1");
    }
}

void SoilZone::validate() const {
    if (!(d_mu > 0.0)) throw InvalidArgument("zone d_mu must be positive");
    if (!(storage > 0.0)) throw InvalidArgument("zone storage must be positive");
    if (!(anisotropy_y_over_x > 0.0)) throw InvalidArgument("zone anisotropy must be positive");
    if (region.size() < 3) throw InvalidArgument("zone polygon needs at least 3 vertices");
    if (std::abs(polygon_signed_area(region)) < 1e-12) {
        throw InvalidArgument("zone polygon is degenerate");
    }
    if (polygon_self_intersects(region)) {
        throw InvalidArgument("zone polygon is self-intersecting");
    }
    vg.validate();
}

BoundaryKind parse_boundary_kind(const std::string& token) {
    if (token == "sea") return BoundaryKind::Sea;
    if (token == "land") return BoundaryKind::Land;
    if (token == "wall") return BoundaryKind::Wall;
    throw ParseError(ParseError::Kind::BadDocument, "unknown boundary kind '" + token + "'");
}

std::string boundary_kind_name(BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::Sea: return "sea";
        case BoundaryKind::Land: return "land";
        case BoundaryKind::Wall: return "wall";
    }
    return "?";
}

void DikeModel::validate() const {
    if (cross_section.size() < 3) {
        throw InvalidArgument("cross-section polygon needs at least 3 vertices");
    }
    if (polygon_self_intersects(cross_section)) {
        throw InvalidArgument("cross-section polygon is self-intersecting");
    }
    if (boundary.size() != cross_section.size()) {
        throw InvalidArgument("every boundary edge needs exactly one assignment");
    }
    if (zones.empty()) throw InvalidArgument("model needs at least one soil zone");
    for (const SoilZone& z : zones) z.validate();
    fluid.validate();
    for (const Sensor& s : sensors) {
        if (!point_in_polygon(cross_section, {s.x, s.y}, 1e-6)) {
            throw InvalidArgument("sensor '" + s.id + "' lies outside the cross-section");
        }
    }
}

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        if (allowed.find(item.key()) == allowed.end()) {
            throw ParseError(ParseError::Kind::UnknownKey,
                             "unknown key '" + item.key() + "' in " + where);
        }
    }
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number()) {
        throw ParseError(ParseError::Kind::BadDocument,
                         where + " needs numeric key '" + key + "'");
    }
    return obj[key].get<double>();
}

Polygon parse_polygon(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.size() < 3) {
        throw ParseError(ParseError::Kind::BadDocument, where + " polygon needs >= 3 vertices");
    }
    Polygon poly;
    poly.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
            throw ParseError(ParseError::Kind::BadDocument,
                             where + " polygon vertices must be [x, y] pairs");
        }
        poly.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return poly;
}

ViscosityRule parse_viscosity_rule(const json& spec) {
    if (spec.is_string()) {
        const std::string name = spec.get<std::string>();
        if (name == "standard") return ViscosityRule::standard_table();
        throw ParseError(ParseError::Kind::BadDocument,
                         "unknown viscosity_rule '" + name + "'");
    }
    if (!spec.is_object()) {
        throw ParseError(ParseError::Kind::BadDocument,
                         "viscosity_rule must be \"standard\" or an object");
    }
    reject_unknown_keys(spec, {"thresholds_C", "values_Pa_s"}, "fluid.viscosity_rule");
    ViscosityRule rule;
    for (const auto& v : spec.at("thresholds_C")) rule.thresholds_C.push_back(v.get<double>());
    for (const auto& v : spec.at("values_Pa_s")) rule.values_Pa_s.push_back(v.get<double>());
    rule.validate();
    return rule;
}

}  // namespace

DikeModel load_model_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(ParseError::Kind::BadDocument,
                         std::string("model config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError(ParseError::Kind::BadDocument, "model config must be a JSON object");
    }
    reject_unknown_keys(doc, {"geometry", "zones", "boundaries", "sensors", "fluid"}, "document");

    DikeModel model;

    const json& geom = doc.at("geometry");
    reject_unknown_keys(geom, {"polygon"}, "geometry");
    model.cross_section = parse_polygon(geom.at("polygon"), "geometry");

    for (const json& jz : doc.at("zones")) {
        reject_unknown_keys(jz,
                            {"polygon", "d_mu_Pa_m2", "vg", "storage_1_per_Pa",
                             "anisotropy_y_over_x"},
                            "zone");
        SoilZone z;
        z.region = parse_polygon(jz.at("polygon"), "zone");
        z.d_mu = require_number(jz, "d_mu_Pa_m2", "zone");
        if (jz.contains("vg")) {
            const json& jv = jz["vg"];
            reject_unknown_keys(jv, {"a", "n", "l", "theta_s", "theta_r"}, "zone.vg");
            z.vg.a = require_number(jv, "a", "zone.vg");
            z.vg.n = require_number(jv, "n", "zone.vg");
            z.vg.l = require_number(jv, "l", "zone.vg");
            if (jv.contains("theta_s")) z.vg.theta_s = jv["theta_s"].get<double>();
            if (jv.contains("theta_r")) z.vg.theta_r = jv["theta_r"].get<double>();
        }
        if (jz.contains("storage_1_per_Pa")) z.storage = jz["storage_1_per_Pa"].get<double>();
        if (jz.contains("anisotropy_y_over_x")) {
            z.anisotropy_y_over_x = jz["anisotropy_y_over_x"].get<double>();
        }
        model.zones.push_back(std::move(z));
    }

    const json& jb = doc.at("boundaries");
    if (!jb.is_object()) {
        throw ParseError(ParseError::Kind::BadDocument,
                         "boundaries must map edge index to sea|land|wall");
    }
    model.boundary.assign(model.cross_section.size(), BoundaryKind::Wall);
    std::set<std::size_t> assigned;
    for (const auto& item : jb.items()) {
        std::size_t idx = 0;
        try {
            idx = static_cast<std::size_t>(std::stoul(item.key()));
        } catch (...) {
            throw ParseError(ParseError::Kind::BadDocument,
                             "boundary key '" + item.key() + "' is not an edge index");
        }
        if (idx >= model.cross_section.size()) {
            throw ParseError(ParseError::Kind::BadDocument,
                             "boundary edge index " + item.key() + " out of range");
        }
        model.boundary[idx] = parse_boundary_kind(item.value().get<std::string>());
        assigned.insert(idx);
    }
    if (assigned.size() != model.cross_section.size()) {
        throw ParseError(ParseError::Kind::BadDocument,
                         "every boundary edge needs exactly one assignment");
    }

    if (doc.contains("sensors")) {
        for (const json& js : doc["sensors"]) {
            reject_unknown_keys(js, {"id", "x", "y"}, "sensor");
            Sensor s;
            s.id = js.at("id").get<std::string>();
            s.x = require_number(js, "x", "sensor");
            s.y = require_number(js, "y", "sensor");
            model.sensors.push_back(std::move(s));
        }
    }

    if (doc.contains("fluid")) {
        const json& jf = doc["fluid"];
        reject_unknown_keys(jf, {"rho", "g", "viscosity_rule", "temperature_C"}, "fluid");
        if (jf.contains("rho")) model.fluid.rho = jf["rho"].get<double>();
        if (jf.contains("g")) model.fluid.g = jf["g"].get<double>();
        if (jf.contains("viscosity_rule")) {
            model.fluid.viscosity = parse_viscosity_rule(jf["viscosity_rule"]);
        }
        if (jf.contains("temperature_C")) model.temperature_C = jf["temperature_C"].get<double>();
    }

    model.validate();
    return model;
}

DikeModel load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_model_json(buf.str());
}

std::string model_to_json(const DikeModel& model) {
    json doc;
    json poly = json::array();
    for (const Point2& p : model.cross_section) poly.push_back({p.x, p.y});
    doc["geometry"] = {{"polygon", poly}};

    doc["zones"] = json::array();
    for (const SoilZone& z : model.zones) {
        json jz;
        json zp = json::array();
        for (const Point2& p : z.region) zp.push_back({p.x, p.y});
        jz["polygon"] = zp;
        jz["d_mu_Pa_m2"] = z.d_mu;
        jz["vg"] = {{"a", z.vg.a}, {"n", z.vg.n}, {"l", z.vg.l},
                    {"theta_s", z.vg.theta_s}, {"theta_r", z.vg.theta_r}};
        jz["storage_1_per_Pa"] = z.storage;
        if (z.anisotropy_y_over_x != 1.0) jz["anisotropy_y_over_x"] = z.anisotropy_y_over_x;
        doc["zones"].push_back(std::move(jz));
    }

    json jb = json::object();
    for (std::size_t i = 0; i < model.boundary.size(); ++i) {
        jb[std::to_string(i)] = boundary_kind_name(model.boundary[i]);
    }
    doc["boundaries"] = std::move(jb);

    doc["sensors"] = json::array();
    for (const Sensor& s : model.sensors) {
        doc["sensors"].push_back({{"id", s.id}, {"x", s.x}, {"y", s.y}});
    }

    json rule;
    if (model.fluid.viscosity.thresholds_C == ViscosityRule::standard_table().thresholds_C &&
        model.fluid.viscosity.values_Pa_s == ViscosityRule::standard_table().values_Pa_s) {
        rule = "standard";
    } else {
        rule = {{"thresholds_C", model.fluid.viscosity.thresholds_C},
                {"values_Pa_s", model.fluid.viscosity.values_Pa_s}};
    }
    doc["fluid"] = {{"rho", model.fluid.rho},
                    {"g", model.fluid.g},
                    {"viscosity_rule", rule},
                    {"temperature_C", model.temperature_C}};

    return doc.dump(2);
}

}  // namespace tidecal
