#include "fia/io.hpp"

#include <fstream>

namespace fia {

namespace {

void require_record(const Json& j, const std::string& type)
{
    if (!j.is_object())
        throw ParseError("expected a JSON object for a " + type + " record");
    if (!j.contains("format_version") || j["format_version"] != kFormatVersion)
        throw ParseError("missing or unsupported format_version in " + type + " record");
    if (!j.contains("type") || j["type"] != type)
        throw ParseError("record type is not '" + type + "'");
}

void check_ring(const Json& j, const RingSpec& spec)
{
    if (j.contains("ring") && RingSpec::parse(j["ring"].get<std::string>()) != spec)
        throw ParseError("record ring '" + j["ring"].get<std::string>() +
                         "' does not match the requested ring " + spec.selector());
}

}  // namespace

int parse_segment_key(const Poset& poset, const std::string& key)
{
    auto comma = key.find(',');
    if (comma == std::string::npos)
        throw ParseError("bad segment key '" + key + "' (expected \"x,y\")");
    int x = poset.index(key.substr(0, comma));
    int y = poset.index(key.substr(comma + 1));
    return poset.segment_id(x, y);
}

Json poset_to_json(const Poset& poset)
{
    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = "poset";
    j["elements"] = poset.labels();
    Json covers = Json::array();
    for (const auto& [a, b] : poset.covers())
        covers.push_back(Json::array({a, b}));
    j["covers"] = covers;
    return j;
}

PosetPtr poset_from_json(const Json& j)
{
    require_record(j, "poset");
    std::vector<std::string> elements;
    for (const auto& e : j.at("elements"))
        elements.push_back(e.get<std::string>());
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2)
            throw ParseError("each cover must be a 2-element list");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return Poset::from_covers(elements, covers);
}

Json coeffs_to_json(const AlgElement& e)
{
    Json j = Json::object();
    for (const auto& [sid, v] : e.coeffs())
        j[e.poset()->segment_label(sid)] = v.str();
    return j;
}

AlgElement coeffs_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec)
{
    if (!j.is_object())
        throw ParseError("expected an object of segment coefficients");
    AlgElement e(poset, spec);
    for (const auto& [key, val] : j.items())
        e.add_coeff(parse_segment_key(*poset, key), RingElem::parse(spec, val.get<std::string>()));
    return e;
}

Json element_to_json(const AlgElement& e)
{
    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = "element";
    j["ring"] = e.spec().selector();
    j["coeffs"] = coeffs_to_json(e);
    return j;
}

AlgElement element_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec)
{
    require_record(j, "element");
    check_ring(j, spec);
    return coeffs_from_json(j.at("coeffs"), poset, spec);
}

Json linmap_to_json(const LinMap& f)
{
    Json j = Json::object();
    for (const auto& [sid, img] : f.images())
        j[f.poset()->segment_label(sid)] = coeffs_to_json(img);
    return j;
}

LinMap linmap_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec)
{
    if (!j.is_object())
        throw ParseError("expected an object of basis images");
    LinMap f(poset, spec);
    for (const auto& [key, val] : j.items())
        f.set_image(parse_segment_key(*poset, key), coeffs_from_json(val, poset, spec));
    return f;
}

Json hd_to_json(const HigherDerivation& d)
{
    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = "higher_derivation";
    j["ring"] = d.spec().selector();
    j["order"] = d.order();
    Json maps = Json::array();
    for (int n = 1; n <= d.order(); ++n)
        maps.push_back(linmap_to_json(d.component(n)));
    j["maps"] = maps;
    return j;
}

HigherDerivation hd_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec)
{
    require_record(j, "higher_derivation");
    check_ring(j, spec);
    const int order = j.at("order").get<int>();
    const Json& maps = j.at("maps");
    if (!maps.is_array())
        throw ParseError("'maps' must be an array of basis-image records");
    size_t base = 0;
    if (maps.size() == static_cast<size_t>(order) + 1) {
        base = 1;  // index 0 present; must be the identity
        LinMap d0 = linmap_from_json(maps[0], poset, spec);
        if (!(d0 == LinMap::identity(poset, spec)))
            throw ParseError("component 0 of a higher derivation must be the identity");
    } else if (maps.size() != static_cast<size_t>(order)) {
        throw ParseError("'maps' must hold order or order+1 records");
    }
    HigherDerivation d(poset, spec, order);
    for (int n = 1; n <= order; ++n)
        d.set_component(n, linmap_from_json(maps[base + n - 1], poset, spec));
    return d;
}

Json tm_to_json(const TransitiveMap& sigma)
{
    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = "transitive_map";
    j["ring"] = sigma.spec().selector();
    j["order"] = sigma.order();
    Json values = Json::object();
    for (int n = 1; n <= sigma.order(); ++n) {
        Json row = Json::object();
        for (const auto& [sid, v] : sigma.row(n))
            row[sigma.poset()->segment_label(sid)] = v.str();
        values[std::to_string(n)] = row;
    }
    j["values"] = values;
    return j;
}

TransitiveMap tm_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec)
{
    require_record(j, "transitive_map");
    check_ring(j, spec);
    const int order = j.at("order").get<int>();
    TransitiveMap sigma(poset, spec, order);
    for (const auto& [nkey, row] : j.at("values").items()) {
        const int n = std::stoi(nkey);
        if (n < 1 || n > order)
            throw ParseError("transitive-map order key '" + nkey + "' out of range");
        for (const auto& [key, val] : row.items())
            sigma.set_value(n, parse_segment_key(*poset, key),
                            RingElem::parse(spec, val.get<std::string>()));
    }
    return sigma;
}

Json decomposition_to_json(const Decomposition& dec, bool verified)
{
    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = "decomposition";
    j["ring"] = dec.rho.spec.selector();
    j["order"] = dec.rho.order();
    Json rho = Json::array();
    for (const auto& r : dec.rho.rho)
        rho.push_back(coeffs_to_json(r));
    j["rho"] = rho;
    Json sig = Json::object();
    for (int n = 1; n <= dec.sigma.order(); ++n) {
        Json row = Json::object();
        for (const auto& [sid, v] : dec.sigma.row(n))
            row[dec.sigma.poset()->segment_label(sid)] = v.str();
        sig[std::to_string(n)] = row;
    }
    j["sigma"] = sig;
    j["verified"] = verified;
    return j;
}

Decomposition decomposition_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec)
{
    require_record(j, "decomposition");
    check_ring(j, spec);
    const int order = j.at("order").get<int>();
    InnerData rho{poset, spec, {}};
    for (const auto& r : j.at("rho"))
        rho.rho.push_back(coeffs_from_json(r, poset, spec));
    if (rho.order() != order)
        throw ParseError("rho must hold one element per order 1..N");
    TransitiveMap sigma(poset, spec, order);
    for (const auto& [nkey, row] : j.at("sigma").items()) {
        const int n = std::stoi(nkey);
        if (n < 1 || n > order)
            throw ParseError("sigma order key '" + nkey + "' out of range");
        for (const auto& [key, val] : row.items())
            sigma.set_value(n, parse_segment_key(*poset, key),
                            RingElem::parse(spec, val.get<std::string>()));
    }
    return {std::move(rho), std::move(sigma)};
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

Json load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void save_file(const std::string& path, const Json& j)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << dump(j);
}

}  // namespace fia
